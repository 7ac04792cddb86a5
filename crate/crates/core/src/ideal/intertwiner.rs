//! Bases of the W₁₀- and W₁₁-isotypic parts of V₉⊗V₂ and S²V₉, and the G-averaged
//! intertwiner S = Σ_h C_h·M₀·diag(A_h, A_h)⁻¹ between them.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{CycElt, ExtElt, PrimeEmbedding, UnitRoot};
use crate::linalg::{rank_of_rows, Matrix};
use crate::poly::{Mono, PolyVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Target {
    W10,
    W11,
}

impl Target {
    pub const ALL: [Target; 2] = [Target::W10, Target::W11];

    /// Index of the irreducible character.
    pub fn index(self) -> usize {
        match self {
            Target::W10 => 10,
            Target::W11 => 11,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Target::W10 => "W10",
            Target::W11 => "W11",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "W10" => Ok(Target::W10),
            "W11" => Ok(Target::W11),
            _ => Err(Error::parse(format!("unknown target {s:?}"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ordering of the labelled bases when they are flattened into matrix indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Convention {
    /// (1,1), (1,2), …, (1,7), (2,1), …
    IMajor,
    /// (1,1), (2,1), …, (n,1), (1,2), …
    JMajor,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::IMajor, Convention::JMajor];

    pub fn label(self) -> &'static str {
        match self {
            Convention::IMajor => "i-major",
            Convention::JMajor => "j-major",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "i-major" => Ok(Convention::IMajor),
            "j-major" => Ok(Convention::JMajor),
            _ => Err(Error::parse(format!("unknown convention {s:?}"))),
        }
    }

    /// Labels (i, j), i in 1..=n, j in 1..=7, in this ordering.
    pub fn order(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Convention::IMajor => (1..=n).flat_map(|i| (1..=7).map(move |j| (i, j))).collect(),
            Convention::JMajor => (1..=7).flat_map(|j| (1..=n).map(move |i| (i, j))).collect(),
        }
    }
}

/// The seed matrix M₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeedMatrix {
    Identity,
    /// I + E_{1,k} (1-based k ≥ 2), used only if the identity seed gives a singular S.
    IdentityPlusUnit(usize),
}

impl SeedMatrix {
    pub fn descriptor(self) -> String {
        match self {
            SeedMatrix::Identity => "identity".into(),
            SeedMatrix::IdentityPlusUnit(k) => format!("identity+E1,{k}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "identity" {
            return Ok(SeedMatrix::Identity);
        }
        let k = s
            .strip_prefix("identity+E1,")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|k| (2..=42).contains(k))
            .ok_or_else(|| Error::parse(format!("unknown seed matrix {s:?}")))?;
        Ok(SeedMatrix::IdentityPlusUnit(k))
    }

    pub fn entry(self, r: usize, c: usize) -> i64 {
        let unit = matches!(self, SeedMatrix::IdentityPlusUnit(k) if r == 0 && c == k - 1);
        i64::from(r == c) + i64::from(unit)
    }

    /// I, then I + E_{1,2}, I + E_{1,3}, …
    pub fn sequence() -> impl Iterator<Item = SeedMatrix> {
        std::iter::once(SeedMatrix::Identity).chain((2..=42).map(SeedMatrix::IdentityPlusUnit))
    }
}

pub type LabelledBasis = BTreeMap<(usize, usize), PolyVec>;

/// B₁: ß_{1,2} = ρ_{ζ²}(π(y₁y₁₅)), ß_{i+1,2} = ρ_{ζ²}(Q·ß_{i,2}), ß_{i,j} = ρ_{ζʲ}(Q·ß_{i,2}).
pub fn build_b1(ctx: &Context, target: Target) -> Result<LabelledBasis> {
    let mut b = LabelledBasis::new();
    b.insert((1, 2), ctx.rho(2, &ctx.pi(target.index(), &PolyVec::y(&[1, 15]))));
    for i in 1..3 {
        let next = ctx.rho(2, &ctx.q_act(&b[&(i, 2)]));
        b.insert((i + 1, 2), next);
    }
    fill_other_eigenvalues(ctx, &mut b, 3);
    check_basis(ctx, &b, "B1", target)?;
    Ok(b)
}

/// B₂: κ_{1,2} = ρ_{ζ²}(π(y₁y₃)), κ_{4,2} = ρ_{ζ²}(Q·ρ_{ζ³}(Q·κ_{1,2})),
/// κ_{i+1,2} = ρ_{ζ²}(Q·κ_{i,2}) for i = 1, 2, 4, 5, κ_{i,j} = ρ_{ζʲ}(Q·κ_{i,2}).
pub fn build_b2(ctx: &Context, target: Target) -> Result<LabelledBasis> {
    let mut b = LabelledBasis::new();
    let k12 = ctx.rho(2, &ctx.pi(target.index(), &PolyVec::y(&[1, 3])));
    let k42 = ctx.rho(2, &ctx.q_act(&ctx.rho(3, &ctx.q_act(&k12))));
    b.insert((1, 2), k12);
    b.insert((4, 2), k42);
    for i in [1, 2, 4, 5] {
        let next = ctx.rho(2, &ctx.q_act(&b[&(i, 2)]));
        b.insert((i + 1, 2), next);
    }
    fill_other_eigenvalues(ctx, &mut b, 6);
    check_basis(ctx, &b, "B2", target)?;
    Ok(b)
}

fn fill_other_eigenvalues(ctx: &Context, b: &mut LabelledBasis, n: usize) {
    let new: Vec<((usize, usize), PolyVec)> = (1..=n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let qb = ctx.q_act(&b[&(i, 2)]);
            [1, 3, 4, 5, 6, 7]
                .into_iter()
                .map(move |j| ((i, j), ctx.rho(j as i64, &qb)))
                .collect::<Vec<_>>()
        })
        .collect();
    b.extend(new);
}

fn check_basis(ctx: &Context, b: &LabelledBasis, name: &str, target: Target) -> Result<()> {
    for (&(i, j), f) in b {
        if f.is_zero() {
            return Err(Error::verification(format!("{name}[{i},{j}]"), "zero element"));
        }
        if !ctx.is_eigen(j as i64, f) {
            return Err(Error::verification(
                format!("{name}[{i},{j}]"),
                format!("not a zeta^{j}-eigenvector in the {target} part"),
            ));
        }
    }
    Ok(())
}

/// Coordinates with respect to a basis of h_7B-eigenvectors, computed one eigenvalue at a
/// time from a few pivot coefficients. h_7B acts monomially, so the pivot coefficients of
/// each eigencomponent are sums of seven rotated coefficients of the input.
pub struct EigenCoords {
    deg: usize,
    n: usize,
    blocks: Vec<EigenBlock>,
}

struct EigenBlock {
    positions: Vec<usize>,
    /// For each pivot monomial, seven (source monomial, unit) pairs summing to the
    /// eigencomponent's coefficient (before the factor 1/7).
    sources: Vec<Vec<(Mono, UnitRoot)>>,
    /// (Mᵀ)⁻¹/7 where M[r][c] is the coefficient of pivot c in basis element r.
    inv: Matrix<CycElt>,
}

impl EigenCoords {
    /// `elems[k]` must be a ζ^{eig[k]}-eigenvector of h_7B.
    pub fn new(ctx: &Context, elems: &[PolyVec], eig: &[usize]) -> Result<Self> {
        let deg = elems[0].degree();
        let mut blocks = Vec::new();
        for j in 0..7 {
            let positions: Vec<usize> = (0..elems.len()).filter(|&k| eig[k] % 7 == j).collect();
            if positions.is_empty() {
                continue;
            }
            let (pivots, m) = choose_pivots(&positions.iter().map(|&k| &elems[k]).collect::<Vec<_>>())
                .ok_or_else(|| {
                    Error::verification("eigen coordinates", format!("dependent basis at zeta^{j}"))
                })?;
            let seventh = CycElt::from_rational(&BigRational::new(1.into(), 7.into()));
            let inv = m
                .transpose()
                .inverse()
                .ok_or_else(|| Error::verification("eigen coordinates", "singular pivot block"))?
                .scale(&seventh);
            let sources = pivots
                .iter()
                .map(|m| eigen_sources(ctx, m, j))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(EigenBlock {
                positions,
                sources,
                inv,
            });
        }
        Ok(EigenCoords {
            deg,
            n: elems.len(),
            blocks,
        })
    }

    /// Pivot values of the eigencomponents of v, times 7, placed at the positions of
    /// their eigenvalue's block. `coords(v) = inverse_matrix()·raw(v)`.
    pub fn raw(&self, v: &PolyVec) -> Vec<CycElt> {
        let mut out = vec![CycElt::zero(); self.n];
        if v.is_zero() {
            return out;
        }
        debug_assert_eq!(v.degree(), self.deg);
        for b in &self.blocks {
            for (pos, src) in b.positions.iter().zip(&b.sources) {
                let mut acc = CycElt::zero();
                for (m, u) in src {
                    let c = v.coeff(m);
                    if !c.is_zero() {
                        acc += &u.apply(c.a());
                    }
                }
                out[*pos] = acc;
            }
        }
        out
    }

    /// Coordinates of v, assuming v lies in the span.
    pub fn coords(&self, v: &PolyVec) -> Vec<CycElt> {
        let raw = self.raw(v);
        let mut out = vec![CycElt::zero(); self.n];
        for b in &self.blocks {
            let vals: Vec<CycElt> = b.positions.iter().map(|&p| raw[p].clone()).collect();
            for (pos, val) in b.positions.iter().zip(b.inv.mul_vec(&vals)) {
                out[*pos] = val;
            }
        }
        out
    }

    /// The block matrix taking `raw` values to coordinates.
    pub fn inverse_matrix(&self) -> Matrix<CycElt> {
        let mut m = Matrix::zeros(self.n, self.n);
        for b in &self.blocks {
            for (r, &pr) in b.positions.iter().enumerate() {
                for (c, &pc) in b.positions.iter().enumerate() {
                    m.set(pr, pc, b.inv.get(r, c).clone());
                }
            }
        }
        m
    }
}

/// Monomials m' and units u with (h^k·v)[m] = u·v[m'], combined with ζ^{−jk}.
fn eigen_sources(ctx: &Context, m: &Mono, j: usize) -> Result<Vec<(Mono, UnitRoot)>> {
    let table = ctx.table();
    let mut out = Vec::with_capacity(7);
    for (k, &hk) in ctx.h_powers.iter().enumerate() {
        let inv = table.inv(hk);
        let s = ctx.action.subst(inv);
        let img = s.expand(m);
        let [(src, e)] = img.as_slice() else {
            return Err(Error::verification("eigen coordinates", "h_7B is not monomial"));
        };
        let u = e
            .unit
            .ok_or_else(|| Error::verification("eigen coordinates", "h_7B is not monomial"))?;
        // h^{-k}·m = u·src, so h^k·src = u⁻¹·m.
        out.push((*src, u.inv() * UnitRoot::zeta(false, -((j * k) as i64))));
    }
    Ok(out)
}

/// Greedily pick monomials whose coefficient columns are independent.
fn choose_pivots(elems: &[&PolyVec]) -> Option<(Vec<Mono>, Matrix<CycElt>)> {
    let n = elems.len();
    let mut monos: Vec<Mono> = elems.iter().flat_map(|f| f.terms().map(|(m, _)| *m)).collect();
    monos.sort_unstable_by(|a, b| b.cmp(a));
    monos.dedup();
    let mut echelon: Vec<(usize, Vec<CycElt>)> = Vec::new();
    let mut chosen = Vec::new();
    for m in monos {
        let col: Vec<CycElt> = elems.iter().map(|f| f.coeff(&m).a().clone()).collect();
        let mut v = col.clone();
        for (piv, row) in &echelon {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &(&f * y);
                }
            }
        }
        if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[piv].inv()?;
            let row: Vec<CycElt> = v.iter().map(|x| x * &inv).collect();
            echelon.push((piv, row));
            chosen.push((m, col));
            if chosen.len() == n {
                break;
            }
        }
    }
    if chosen.len() < n {
        return None;
    }
    let mat = Matrix::from_fn(n, n, |r, c| chosen[c].1[r].clone());
    Some((chosen.into_iter().map(|(m, _)| m).collect(), mat))
}

/// A basis flattened in one convention, with its coordinate map.
pub struct FlatBasis {
    pub labels: Vec<(usize, usize)>,
    pub elems: Vec<PolyVec>,
    pub coords: EigenCoords,
}

impl FlatBasis {
    pub fn new(ctx: &Context, b: &LabelledBasis, n: usize, conv: Convention) -> Result<Self> {
        let labels = conv.order(n);
        let elems: Vec<PolyVec> = labels.iter().map(|l| b[l].clone()).collect();
        let eig: Vec<usize> = labels.iter().map(|&(_, j)| j).collect();
        let coords = EigenCoords::new(ctx, &elems, &eig)?;
        Ok(FlatBasis {
            labels,
            elems,
            coords,
        })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn position(&self, label: (usize, usize)) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Matrix of g on the span, column c = coordinates of g·b_c.
    pub fn matrix_of(&self, ctx: &Context, g: usize) -> Matrix<CycElt> {
        let cols: Vec<Vec<CycElt>> = self
            .elems
            .iter()
            .map(|b| self.coords.coords(&ctx.act(g, b)))
            .collect();
        Matrix::from_fn(self.len(), self.len(), |r, c| cols[c][r].clone())
    }

    /// As `matrix_of`, but also checks that every image really lies in the span.
    pub fn checked_matrix_of(&self, ctx: &Context, g: usize, name: &str) -> Result<Matrix<CycElt>> {
        let mut cols = Vec::with_capacity(self.len());
        for (c, b) in self.elems.iter().enumerate() {
            let img = ctx.act(g, b);
            let x = self.coords.coords(&img);
            if self.combine(&x) != img {
                return Err(Error::verification(
                    format!("{name} stability"),
                    format!("image of element {} leaves the span", c + 1),
                ));
            }
            cols.push(x);
        }
        Ok(Matrix::from_fn(self.len(), self.len(), |r, c| cols[c][r].clone()))
    }

    /// Σ xᵢ·bᵢ.
    pub fn combine(&self, x: &[CycElt]) -> PolyVec {
        let xs: Vec<ExtElt> = x.iter().cloned().map(ExtElt::from).collect();
        PolyVec::linear_combination(self.elems[0].degree(), xs.iter().zip(&self.elems))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    pub target: Target,
    pub convention: Convention,
    pub seed: SeedMatrix,
    pub s: Matrix<CycElt>,
}

/// The two bases of one target in one convention.
pub struct IntertwinerBases {
    pub target: Target,
    pub convention: Convention,
    pub b1: FlatBasis,
    pub b2: FlatBasis,
}

impl IntertwinerBases {
    pub fn new(
        ctx: &Context,
        target: Target,
        convention: Convention,
        b1: &LabelledBasis,
        b2: &LabelledBasis,
    ) -> Result<Self> {
        Ok(IntertwinerBases {
            target,
            convention,
            b1: FlatBasis::new(ctx, b1, 3, convention)?,
            b2: FlatBasis::new(ctx, b2, 6, convention)?,
        })
    }

    /// Eigen-index of domain position c in B₁ ⊕ B₁.
    fn domain_eig(&self, c: usize) -> usize {
        self.b1.labels[c % self.b1.len()].1 % 7
    }

    fn codomain_eig(&self, r: usize) -> usize {
        self.b2.labels[r].1 % 7
    }

    /// Σ_{k∈⟨h⟩} C_k·M₀·D_k⁻¹, which is 7·M₀ masked to matching eigenvalues. Returned
    /// column by column as its nonzero entries.
    pub fn inner_sum(&self, seed: SeedMatrix) -> Vec<Vec<(usize, CycElt)>> {
        (0..2 * self.b1.len())
            .map(|c| {
                (0..self.b2.len())
                    .filter(|&r| self.codomain_eig(r) == self.domain_eig(c))
                    .filter(|&r| seed.entry(r, c) != 0)
                    .map(|r| (r, CycElt::from_int(7 * seed.entry(r, c))))
                    .collect()
            })
            .collect()
    }
}

/// S = Σ_{t ∈ G/⟨h⟩} C_t·(Σ_{k∈⟨h⟩} C_k M₀ D_k⁻¹)·D_t⁻¹ with D = diag(A, A).
pub fn average(ctx: &Context, bases: &IntertwinerBases, seed: SeedMatrix) -> Matrix<CycElt> {
    let table = ctx.table();
    let reps = table.left_coset_reps(&ctx.h_powers);
    let inner = bases.inner_sum(seed);
    let n2 = bases.b2.len();
    let n1 = bases.b1.len();
    let mut needed: Vec<usize> = inner.iter().flatten().map(|(r, _)| *r).collect();
    needed.sort_unstable();
    needed.dedup();
    let raw_sum = reps
        .par_iter()
        .map(|&t| {
            // C_t = R·V_t with R constant; only the columns of V_t that meet a nonzero
            // row of the inner sum are needed.
            let mut ct: Vec<Option<Vec<CycElt>>> = vec![None; n2];
            for &k in &needed {
                ct[k] = Some(bases.b2.coords.raw(&ctx.act(t, &bases.b2.elems[k])));
            }
            let a = bases.b1.matrix_of(ctx, table.inv(t));
            // T = C_t·inner, kept as its nonzero columns.
            let tcols: Vec<Option<Vec<CycElt>>> = inner
                .iter()
                .map(|col| {
                    if col.is_empty() {
                        return None;
                    }
                    Some(
                        (0..n2)
                            .map(|r| {
                                CycElt::sum_of_products(
                                    col.iter().map(|(k, v)| (&ct[*k].as_ref().expect("needed")[r], v)),
                                )
                            })
                            .collect(),
                    )
                })
                .collect();
            Matrix::from_fn(n2, 2 * n1, |r, c| {
                let off = (c / n1) * n1;
                CycElt::sum_of_products((0..n1).filter_map(|l| {
                    tcols[off + l].as_ref().map(|tc| (&tc[r], a.get(l, c - off)))
                }))
            })
        })
        .reduce(|| Matrix::zeros(n2, 2 * n1), |a, b| a.add(&b));
    bases.b2.coords.inverse_matrix().mul(&raw_sum)
}

/// Checks C_g·S = S·diag(A_g, A_g) for g = P and Q, exactly.
pub fn check_intertwining(ctx: &Context, bases: &IntertwinerBases, s: &Matrix<CycElt>) -> Result<()> {
    for (name, g) in [("P", ctx.p), ("Q", ctx.q)] {
        let c = bases.b2.checked_matrix_of(ctx, g, "B2")?;
        let a = bases.b1.checked_matrix_of(ctx, g, "B1")?;
        if c.mul(s) != s.mul(&Matrix::block_diag(&a, &a)) {
            return Err(Error::verification(
                format!("intertwiner {} ({})", bases.target, bases.convention.label()),
                format!("C_{name} S != S diag(A_{name}, A_{name})"),
            ));
        }
    }
    Ok(())
}

/// Full rank of S certified by its rank modulo a prime (a nonzero minor mod p is nonzero).
pub fn certify_nonsingular(s: &Matrix<CycElt>, primes: &[PrimeEmbedding]) -> Result<bool> {
    for emb in primes {
        let rows: Result<Vec<Vec<u64>>> = (0..s.rows())
            .map(|i| s.row(i).iter().map(|x| emb.reduce_cyc(x)).collect())
            .collect();
        if let Ok(rows) = rows {
            if rank_of_rows(emb.p(), rows) == s.rows().min(s.cols()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Compute S for one seed, check the intertwining relation, and certify det S ≠ 0.
pub fn compute_intertwiner_with_seed(
    ctx: &Context,
    bases: &IntertwinerBases,
    seed: SeedMatrix,
    primes: &[PrimeEmbedding],
) -> Result<Option<Intertwiner>> {
    let s = average(ctx, bases, seed);
    check_intertwining(ctx, bases, &s)?;
    if !certify_nonsingular(&s, primes)? {
        return Ok(None);
    }
    Ok(Some(Intertwiner {
        target: bases.target,
        convention: bases.convention,
        seed,
        s,
    }))
}

impl Intertwiner {
    /// Σ_r S[r][c]·κ_r for a domain position c (0-based).
    pub fn image_of_column(&self, bases: &IntertwinerBases, c: usize) -> PolyVec {
        let col: Vec<CycElt> = (0..self.s.rows()).map(|r| self.s.get(r, c).clone()).collect();
        bases.b2.combine(&col)
    }

    pub fn entry(&self, row1: usize, col1: usize) -> &CycElt {
        self.s.get(row1 - 1, col1 - 1)
    }
}
