//! The group action and its projectors reduced into F_p.

use rayon::prelude::*;

use super::action::GroupAction;
use super::mono::{basis, Mono};
use crate::chars::CharTable;
use crate::error::Result;
use crate::field::modp::{inv_mod, mul_mod};
use crate::field::PrimeEmbedding;
use crate::group::classes::NUM_CLASSES;
use crate::linalg::rank_of_rows;
use crate::rep::DIM;

/// Σ aᵢbᵢ mod p with a single reduction.
pub fn dot_mod(a: &[u64], b: &[u64], p: u64) -> u64 {
    let mut acc: u128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc += (*x as u128) * (*y as u128);
    }
    (acc % p as u128) as u64
}

/// Row-major square matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMod {
    pub n: usize,
    pub p: u64,
    pub data: Vec<u64>,
}

impl SquareMod {
    pub fn zeros(p: u64, n: usize) -> Self {
        SquareMod {
            n,
            p,
            data: vec![0; n * n],
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n).map(|i| dot_mod(self.row(i), v, self.p)).collect()
    }

    pub fn mul(&self, o: &SquareMod) -> SquareMod {
        let n = self.n;
        let ot: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|k| o.data[k * n + j]).collect()).collect();
        let data = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let r = self.row(i).to_vec();
                let ot = &ot;
                (0..n).map(move |j| dot_mod(&r, &ot[j], self.p))
            })
            .collect();
        SquareMod { n, p: self.p, data }
    }
}

/// Every group element's matrix reduced mod p, column-sparse.
#[derive(Clone, Debug)]
pub struct ModAction {
    emb: PrimeEmbedding,
    cols: Vec<Vec<Vec<(u8, u64)>>>,
    class_of: Vec<usize>,
    conj_chars: Vec<[u64; NUM_CLASSES]>,
    degrees: Vec<u64>,
}

impl ModAction {
    pub fn new(action: &GroupAction, tbl: &CharTable, emb: PrimeEmbedding) -> Result<Self> {
        let cols = (0..action.order())
            .map(|g| {
                let s = action.subst(g);
                (0..DIM)
                    .map(|j| {
                        s.column(j)
                            .iter()
                            .map(|(r, e)| Ok((*r, emb.reduce_cyc(&e.val)?)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let conj_chars = (1..=NUM_CLASSES)
            .map(|i| {
                let chi = tbl.chi(i);
                let mut out = [0u64; NUM_CLASSES];
                for (c, o) in out.iter_mut().enumerate() {
                    *o = emb.reduce_cyc(&chi[c].conj())?;
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModAction {
            emb,
            cols,
            class_of: (0..action.order()).map(|g| action.class_of(g)).collect(),
            conj_chars,
            degrees: (1..=NUM_CLASSES).map(|i| tbl.degree(i)).collect(),
        })
    }

    pub fn p(&self) -> u64 {
        self.emb.p()
    }

    pub fn embedding(&self) -> &PrimeEmbedding {
        &self.emb
    }

    pub fn order(&self) -> usize {
        self.cols.len()
    }

    fn expand(&self, g: usize, m: &Mono, out: &mut Vec<(usize, u64)>) {
        let p = self.p();
        let b = basis(m.degree());
        let mut cur: Vec<(Vec<usize>, u64)> = vec![(Vec::new(), 1)];
        for &v in m.vars() {
            let col = &self.cols[g][v as usize];
            let mut next = Vec::with_capacity(cur.len() * col.len());
            for (vars, c) in &cur {
                for (r, e) in col {
                    let mut nv = vars.clone();
                    nv.push(*r as usize);
                    next.push((nv, mul_mod(*c, *e, p)));
                }
            }
            cur = next;
        }
        out.clear();
        out.extend(
            cur.into_iter()
                .map(|(v, c)| (b.index(&Mono::new(&v).expect("valid monomial")), c)),
        );
    }

    /// g·v for v dense in the degree-`deg` monomial basis.
    pub fn apply(&self, g: usize, v: &[u64], deg: usize) -> Vec<u64> {
        let p = self.p();
        let b = basis(deg);
        let mut out = vec![0u64; b.len()];
        let mut buf = Vec::new();
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            self.expand(g, &b.mono(i), &mut buf);
            for &(r, c) in &buf {
                out[r] = (out[r] + mul_mod(x, c, p)) % p;
            }
        }
        out
    }

    /// For a monomial matrix, the image of each degree-`deg` monomial as (index, scalar).
    pub fn monomial_images(&self, g: usize, deg: usize) -> Option<Vec<(usize, u64)>> {
        let b = basis(deg);
        let mut buf = Vec::new();
        (0..b.len())
            .map(|i| {
                self.expand(g, &b.mono(i), &mut buf);
                match buf.as_slice() {
                    [one] => Some(*one),
                    _ => None,
                }
            })
            .collect()
    }

    /// Dimension of the G-module generated by v.
    pub fn orbit_rank(&self, v: &[u64], deg: usize) -> usize {
        let rows = (0..self.order())
            .into_par_iter()
            .map(|g| self.apply(g, v, deg))
            .collect();
        rank_of_rows(self.p(), rows)
    }

    /// (1/m) Σₖ ν⁻ᵏ hᵏ·v with ν = ξ^`nu_xi` and `powers` = h⁰ … h^{m−1}.
    pub fn eigen_project(&self, v: &[u64], deg: usize, powers: &[usize], nu_xi: i64) -> Vec<u64> {
        let p = self.p();
        let mut acc = vec![0u64; v.len()];
        for (k, &hk) in powers.iter().enumerate() {
            let s = self.emb.xi_pow(-nu_xi * k as i64);
            for (a, x) in acc.iter_mut().zip(self.apply(hk, v, deg)) {
                *a = (*a + mul_mod(s, x, p)) % p;
            }
        }
        let inv_m = inv_mod(powers.len() as u64, p).expect("m < p");
        acc.iter().map(|&x| mul_mod(x, inv_m, p)).collect()
    }

    /// Σ_{g∈c} S^d(g) for every class c, as dense matrices.
    pub fn class_sum_matrices(&self, deg: usize) -> Vec<SquareMod> {
        let p = self.p();
        let b = basis(deg);
        let n = b.len();
        (0..NUM_CLASSES)
            .into_par_iter()
            .map(|c| {
                let mut m = SquareMod::zeros(p, n);
                let mut buf = Vec::new();
                for g in (0..self.order()).filter(|&g| self.class_of[g] == c) {
                    for col in 0..n {
                        self.expand(g, &b.mono(col), &mut buf);
                        for &(r, x) in &buf {
                            let e = &mut m.data[r * n + col];
                            *e = (*e + x) % p;
                        }
                    }
                }
                m
            })
            .collect()
    }

    /// π_{Wᵢ} on S^d as a matrix, from precomputed class sums.
    pub fn isotypic_matrix(&self, class_sums: &[SquareMod], i: usize) -> SquareMod {
        let p = self.p();
        let n = class_sums[0].n;
        let scale = mul_mod(
            self.degrees[i - 1] % p,
            inv_mod(self.order() as u64, p).expect("|G| < p"),
            p,
        );
        let coeffs: Vec<u64> = self.conj_chars[i - 1].iter().map(|&x| mul_mod(x, scale, p)).collect();
        let data = (0..n * n)
            .map(|k| {
                let mut acc: u128 = 0;
                for (c, m) in class_sums.iter().enumerate() {
                    acc += coeffs[c] as u128 * m.data[k] as u128;
                }
                (acc % p as u128) as u64
            })
            .collect();
        SquareMod { n, p, data }
    }
}
