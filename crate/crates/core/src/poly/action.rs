//! The action of G on polynomials in y₁…y₁₇ and on the dual space, with the isotypic
//! and eigenspace projectors built from it.
//!
//! g·yⱼ = Σₖ M(g)ₖⱼ yₖ, extended multiplicatively. The dual action on V* uses M(g⁻¹)ᵀ so
//! that evaluation pairs are preserved: (g·f)(g·v) = f(v).

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::mono::{basis, Mono};
use super::polyvec::PolyVec;
use crate::chars::CharTable;
use crate::field::{CycElt, ExtElt, UnitRoot};
use crate::group::classes::{ClassData, NUM_CLASSES};
use crate::group::table::GroupTable;
use crate::rep::image::{RepImage, DIM};
use crate::rep::FullRep;

#[derive(Clone, Debug)]
pub struct Entry {
    pub unit: Option<UnitRoot>,
    pub val: CycElt,
}

impl Entry {
    fn new(val: CycElt) -> Self {
        Entry {
            unit: UnitRoot::from_cyc(&val),
            val,
        }
    }

    fn from_unit(u: UnitRoot) -> Self {
        Entry {
            unit: Some(u),
            val: u.to_cyc(),
        }
    }

    fn mul(&self, o: &Entry) -> Entry {
        match (self.unit, o.unit) {
            (Some(a), Some(b)) => Entry::from_unit(a * b),
            (Some(a), None) => Entry {
                unit: None,
                val: a.apply(&o.val),
            },
            (None, Some(b)) => Entry {
                unit: None,
                val: b.apply(&self.val),
            },
            (None, None) => Entry::new(&self.val * &o.val),
        }
    }
}

/// The substitution yⱼ ↦ Σᵣ Mᵣⱼ yᵣ for one matrix.
#[derive(Clone, Debug)]
pub struct LinearSubst {
    cols: Vec<Vec<(u8, Entry)>>,
}

impl LinearSubst {
    pub fn from_image(img: &RepImage) -> Self {
        LinearSubst {
            cols: (0..DIM)
                .map(|j| {
                    img.column(j)
                        .into_iter()
                        .map(|(r, v)| (r as u8, Entry::new(v)))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn column(&self, j: usize) -> &[(u8, Entry)] {
        &self.cols[j]
    }

    /// Each variable maps to a single multiple of a variable by a root of unity.
    pub fn is_monomial(&self) -> bool {
        self.cols
            .iter()
            .all(|c| c.len() == 1 && c[0].1.unit.is_some())
    }

    /// Image of a monomial as a list of (monomial, coefficient), unmerged.
    pub fn expand(&self, m: &Mono) -> Vec<(Mono, Entry)> {
        let mut out: Vec<(Vec<usize>, Entry)> = vec![(Vec::new(), Entry::from_unit(UnitRoot::ONE))];
        for &v in m.vars() {
            let col = &self.cols[v as usize];
            let mut next = Vec::with_capacity(out.len() * col.len());
            for (vars, c) in &out {
                for (r, e) in col {
                    let mut nv = vars.clone();
                    nv.push(*r as usize);
                    next.push((nv, c.mul(e)));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(v, c)| (Mono::new(&v).expect("valid image monomial"), c))
            .collect()
    }

    pub fn apply(&self, f: &PolyVec) -> PolyVec {
        if f.is_zero() {
            return f.clone();
        }
        let b = basis(f.degree());
        let mut buckets: Vec<Vec<(&ExtElt, CycElt)>> = vec![Vec::new(); b.len()];
        for (m, c) in f.terms() {
            for (im, e) in self.expand(m) {
                buckets[b.index(&im)].push((c, e.val));
            }
        }
        collect_buckets(f.degree(), &buckets)
    }

    /// M·v for a column vector v.
    pub fn apply_vec(&self, v: &[ExtElt]) -> Vec<ExtElt> {
        let mut buckets: Vec<Vec<(&ExtElt, CycElt)>> = vec![Vec::new(); DIM];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, e) in &self.cols[j] {
                buckets[*r as usize].push((x, e.val.clone()));
            }
        }
        buckets.iter().map(|b| combine(b)).collect()
    }

    /// Mᵀ·v.
    pub fn apply_transpose_vec(&self, v: &[ExtElt]) -> Vec<ExtElt> {
        self.cols
            .iter()
            .map(|col| {
                let pairs: Vec<(&ExtElt, CycElt)> =
                    col.iter().map(|(r, e)| (&v[*r as usize], e.val.clone())).collect();
                combine(&pairs)
            })
            .collect()
    }
}

fn combine(pairs: &[(&ExtElt, CycElt)]) -> ExtElt {
    let a = CycElt::sum_of_products(pairs.iter().map(|(x, c)| (x.a(), c)));
    let b = CycElt::sum_of_products(pairs.iter().map(|(x, c)| (x.b(), c)));
    ExtElt::new(a, b)
}

fn collect_buckets(deg: usize, buckets: &[Vec<(&ExtElt, CycElt)>]) -> PolyVec {
    let b = basis(deg);
    let terms = buckets
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_empty())
        .map(|(i, v)| (b.mono(i), combine(v)));
    PolyVec::from_terms(deg, terms).expect("degree preserved")
}

/// Substitutions for every group element, indexed like the group table.
#[derive(Clone, Debug)]
pub struct GroupAction {
    subst: Vec<LinearSubst>,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
}

impl GroupAction {
    pub fn new(rep: &FullRep, table: &GroupTable, cls: &ClassData) -> Self {
        let subst = rep
            .images()
            .par_iter()
            .map(LinearSubst::from_image)
            .collect();
        GroupAction {
            subst,
            inverse: (0..table.order()).map(|g| table.inv(g)).collect(),
            class_of: (0..table.order()).map(|g| cls.class_of(g)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.subst.len()
    }

    pub fn subst(&self, g: usize) -> &LinearSubst {
        &self.subst[g]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn act(&self, g: usize, f: &PolyVec) -> PolyVec {
        self.subst[g].apply(f)
    }

    /// The dual action g·v = M(g⁻¹)ᵀ v on V*.
    pub fn act_dual(&self, g: usize, v: &[ExtElt]) -> Vec<ExtElt> {
        self.subst[self.inverse[g]].apply_transpose_vec(v)
    }

    /// Σ_{g ∈ c} g·f for each conjugacy class c.
    pub fn class_sums(&self, f: &PolyVec) -> Vec<PolyVec> {
        (0..NUM_CLASSES)
            .into_par_iter()
            .map(|c| {
                let members: Vec<usize> =
                    (0..self.order()).filter(|&g| self.class_of[g] == c).collect();
                self.sum_over(&members, f)
            })
            .collect()
    }

    fn sum_over(&self, elements: &[usize], f: &PolyVec) -> PolyVec {
        let b = basis(f.degree());
        let mut acc = PolyVec::zero(f.degree());
        for chunk in elements.chunks(32) {
            let mut buckets: Vec<Vec<(&ExtElt, CycElt)>> = vec![Vec::new(); b.len()];
            for &g in chunk {
                for (m, c) in f.terms() {
                    for (im, e) in self.subst[g].expand(m) {
                        buckets[b.index(&im)].push((c, e.val));
                    }
                }
            }
            acc.add_assign(&collect_buckets(f.degree(), &buckets));
        }
        acc
    }

    /// π_{Wᵢ}(f) = (degᵢ/|G|) Σ_h conj(χᵢ(h))·(h·f), accumulated per class.
    pub fn isotypic_project(&self, f: &PolyVec, i: usize, tbl: &CharTable) -> PolyVec {
        let sums = self.class_sums(f);
        combine_class_sums(&sums, i, tbl, self.order(), f.degree())
    }

    /// All eleven isotypic components from one pass of class sums.
    pub fn isotypic_components(&self, f: &PolyVec, tbl: &CharTable) -> Vec<PolyVec> {
        let sums = self.class_sums(f);
        (1..=NUM_CLASSES)
            .map(|i| combine_class_sums(&sums, i, tbl, self.order(), f.degree()))
            .collect()
    }

    /// (1/m) Σₖ ν⁻ᵏ·(hᵏ·f), where `powers` lists h⁰, h¹, …, h^{m−1}.
    pub fn eigen_project(&self, f: &PolyVec, powers: &[usize], nu: UnitRoot) -> PolyVec {
        let m = powers.len();
        let mut acc = PolyVec::zero(f.degree());
        let mut scale = UnitRoot::ONE;
        for &hk in powers {
            acc.add_assign(&self.act(hk, f).scale_unit(scale));
            scale = scale * nu.inv();
        }
        acc.scale_cyc(&CycElt::from_rational(&rational(1, m as i64)))
    }

    /// The same projector for the dual action on V*.
    pub fn eigen_project_dual(&self, v: &[ExtElt], powers: &[usize], nu: UnitRoot) -> Vec<ExtElt> {
        let m = powers.len();
        let inv_m = ExtElt::from_rational(&rational(1, m as i64));
        let mut acc = vec![ExtElt::zero(); v.len()];
        let mut scale = UnitRoot::ONE;
        for &hk in powers {
            for (a, x) in acc.iter_mut().zip(self.act_dual(hk, v)) {
                *a += &x.scale_unit(scale);
            }
            scale = scale * nu.inv();
        }
        acc.iter().map(|x| x * &inv_m).collect()
    }
}

fn combine_class_sums(sums: &[PolyVec], i: usize, tbl: &CharTable, order: usize, deg: usize) -> PolyVec {
    let chi = tbl.chi(i);
    let mut acc = PolyVec::zero(deg);
    for (c, s) in sums.iter().enumerate() {
        acc.add_assign(&s.scale_cyc(&chi[c].conj()));
    }
    acc.scale_cyc(&CycElt::from_rational(&rational(
        tbl.degree(i) as i64,
        order as i64,
    )))
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// h⁰, h¹, …, h^{m−1} where m is the order of h.
pub fn power_list(table: &GroupTable, h: usize) -> Vec<usize> {
    let m = table.element_order(h) as usize;
    let mut out = Vec::with_capacity(m);
    let mut x = table.pow(h, 0);
    for _ in 0..m {
        out.push(x);
        x = table.mul(x, h);
    }
    out
}
