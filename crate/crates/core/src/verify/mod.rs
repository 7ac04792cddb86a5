//! Certificate that the cubics V₁·I₂ fill I₃: the total rank of the 1785 products yₖ·d
//! and the dimensions of ρ(h_7B)_{ζʲ}(π_{Wᵢ}(V₁·I₂)), computed modulo several primes.
//!
//! Modular ranks are lower bounds for the exact ranks, and dim I₃ = 889 bounds them from
//! above, so rank 889 at any prime certifies V₁·I₂ = I₃ given V₁·I₂ ⊆ I₃. That
//! containment is witnessed by the quadrics vanishing at p and on sampled orbit points.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::chars::lefschetz::{h0_kd_dimension, GENUS};
use crate::context::Context;
use crate::error::Result;
use crate::field::modp::{inv_mod, mul_mod};
use crate::field::PrimeEmbedding;
use crate::ideal::assemble::{first_nonvanishing, orbit_points, ORBIT_SEED};
use crate::ideal::QuadricBasis;
use crate::linalg::{rank_of_rows, row_basis};
use crate::poly::mono::{basis, NVARS};
use crate::poly::subspace::{certificate_from, PrimeRank};
use crate::poly::{power_list, ModAction, PolyVec, RankCertificate, RankMode, SquareMod, SubspaceBasis};
use crate::rep::checks::eigen_multiplicities;

pub const SCHEMA: &str = "hurwitz17-verify/1";

/// (i, j, dim ρ_{ζʲ}(π_{Wᵢ}(V₁·I₂))); `None` means the whole isotypic part.
pub const TARGETS: [(usize, Option<usize>, usize); 11] = [
    (1, None, 0),
    (2, Some(2), 4),
    (3, Some(3), 4),
    (4, Some(2), 1),
    (5, Some(2), 7),
    (6, Some(2), 7),
    (7, Some(2), 7),
    (8, Some(2), 5),
    (9, Some(2), 24),
    (10, Some(2), 36),
    (11, Some(2), 36),
];

/// dim S³V₁ − dim H⁰(K³).
pub fn expected_rank() -> usize {
    basis(3).len() - h0_kd_dimension(3, GENUS) as usize
}

/// The products yₖ·d for every variable and quadric.
pub struct CubicSpan<'a> {
    quadrics: &'a QuadricBasis,
    /// Cubic-basis index of yₖ·m for each quadric monomial index and variable k.
    mul_index: Vec<[usize; NVARS]>,
}

impl<'a> CubicSpan<'a> {
    pub fn new(quadrics: &'a QuadricBasis) -> Self {
        let b2 = basis(2);
        let b3 = basis(3);
        let mul_index = b2
            .monos()
            .iter()
            .map(|m| std::array::from_fn(|k| b3.index(&m.mul_var(k).expect("degree 3"))))
            .collect();
        CubicSpan { quadrics, mul_index }
    }

    pub fn len(&self) -> usize {
        NVARS * self.quadrics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    pub fn generators(&self) -> Vec<PolyVec> {
        self.quadrics
            .quadrics
            .iter()
            .flat_map(|q| (0..NVARS).map(move |k| q.poly.mul_var(k)))
            .collect()
    }

    /// Every generator reduced mod p, dense in the cubic monomial basis.
    pub fn rows_mod(&self, emb: &PrimeEmbedding) -> Result<Vec<Vec<u64>>> {
        let b2 = basis(2);
        let n3 = basis(3).len();
        let mut out = Vec::with_capacity(self.len());
        for q in &self.quadrics.quadrics {
            let r = q.poly.reduce(emb, b2)?;
            for k in 0..NVARS {
                let mut row = vec![0u64; n3];
                for (i, &x) in r.iter().enumerate() {
                    if x != 0 {
                        row[self.mul_index[i][k]] = x;
                    }
                }
                out.push(row);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellResult {
    pub i: usize,
    pub j: Option<usize>,
    pub target: usize,
    pub per_prime: Vec<PrimeRank>,
    /// Multiplicity of ζʲ as an eigenvalue of h_7B on Wᵢ.
    pub eigen_multiplicity: u64,
    /// Multiplicity of Wᵢ implied by the dimension.
    pub multiplicity: Option<u64>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub mode: &'static str,
    pub quadrics_sha256: String,
    pub quadric_count: usize,
    pub generators: usize,
    pub primes: Vec<u64>,
    pub expected_rank: usize,
    pub total_rank: RankCertificate,
    pub cells: Vec<CellResult>,
    /// Σ multᵢ·degᵢ over the cells.
    pub weighted_sum: u64,
    pub containment_witness: Witness,
    /// Adding P- and Q-images leaves the rank unchanged, per prime.
    pub g_stable: Vec<bool>,
    pub conjugate_check: Option<ConjugateCheck>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugateCheck {
    pub p: u64,
    /// Index of the conjugate of h_7B used.
    pub element: usize,
    pub dims: Vec<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub vanish_at_p: bool,
    pub orbit_points: usize,
    pub orbit_vanish: bool,
    pub assumption: &'static str,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub primes: Vec<PrimeEmbedding>,
    /// Also compute the total rank exactly (slow).
    pub exact: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            primes: PrimeEmbedding::auto(2),
            exact: false,
        }
    }
}

pub fn quadrics_hash(b: &QuadricBasis) -> String {
    hex::encode(Sha256::digest(b.to_text().as_bytes()))
}

/// ρ_{ζʲ} applied to every row, using that h_7B permutes monomials up to scalars.
fn eigen_project_rows(
    act: &ModAction,
    h_images: &[Vec<(usize, u64)>],
    rows: &[Vec<u64>],
    j: usize,
) -> Vec<Vec<u64>> {
    let p = act.p();
    let emb = act.embedding();
    let inv7 = inv_mod(7, p).expect("p > 7");
    // ζ = ξ³; weight of hᵏ is ζ^{−jk}/7.
    let weights: Vec<u64> = (0..7)
        .map(|k| mul_mod(emb.xi_pow(-3 * (j * k) as i64), inv7, p))
        .collect();
    rows.par_iter()
        .map(|r| {
            let mut out = vec![0u64; r.len()];
            for (k, img) in h_images.iter().enumerate() {
                for (i, &x) in r.iter().enumerate() {
                    if x != 0 {
                        let (t, s) = img[i];
                        let c = mul_mod(mul_mod(x, s, p), weights[k], p);
                        out[t] = (out[t] + c) % p;
                    }
                }
            }
            out
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect()
}

struct PrimeRun {
    total: usize,
    /// Rank after adding the P- and Q-images of a basis of the span.
    stable_rank: usize,
    cells: Vec<usize>,
    /// Cell dimensions with h_7B replaced by a conjugate.
    conjugate_cells: Option<Vec<usize>>,
}

/// How ρ_{ζʲ} is applied to rows: by monomial images when the element permutes
/// monomials up to scalars, otherwise through the full action.
enum EigenRoute {
    Monomial(Vec<Vec<(usize, u64)>>),
    General(Vec<usize>),
}

impl EigenRoute {
    fn new(ctx: &Context, act: &ModAction, h: usize) -> Self {
        let powers = power_list(ctx.table(), h);
        match powers.iter().map(|&g| act.monomial_images(g, 3)).collect::<Option<Vec<_>>>() {
            Some(images) => EigenRoute::Monomial(images),
            None => EigenRoute::General(powers),
        }
    }

    fn project(&self, act: &ModAction, rows: &[Vec<u64>], j: usize) -> Vec<Vec<u64>> {
        match self {
            EigenRoute::Monomial(images) => eigen_project_rows(act, images, rows, j),
            EigenRoute::General(powers) => rows
                .par_iter()
                .map(|r| act.eigen_project(r, 3, powers, 3 * j as i64))
                .filter(|v| v.iter().any(|&x| x != 0))
                .collect(),
        }
    }
}

fn cell_dims(act: &ModAction, sums: &[SquareMod], route: &EigenRoute, total_basis: &[Vec<u64>]) -> Vec<usize> {
    let p = act.p();
    let mut sources: BTreeMap<usize, Vec<Vec<u64>>> = BTreeMap::new();
    for j in TARGETS.iter().filter_map(|t| t.1) {
        sources
            .entry(j)
            .or_insert_with(|| row_basis(p, route.project(act, total_basis, j)));
    }
    TARGETS
        .iter()
        .map(|&(i, j, _)| {
            let pi = act.isotypic_matrix(sums, i);
            let source = j.map_or(total_basis, |j| &sources[&j]);
            let projected: Vec<Vec<u64>> = source.par_iter().map(|r| pi.apply(r)).collect();
            rank_of_rows(p, projected)
        })
        .collect()
}

/// A conjugate of h_7B by a generator that does not centralise it.
pub fn conjugate_of_h7b(ctx: &Context) -> usize {
    let h = ctx.h7b();
    [ctx.p, ctx.q]
        .into_iter()
        .map(|g| ctx.table().conjugate(h, g))
        .find(|&c| c != h)
        .expect("h_7B is not central")
}

fn run_prime(ctx: &Context, span: &CubicSpan, emb: &PrimeEmbedding, conjugate: bool) -> Result<PrimeRun> {
    let act = ModAction::new(&ctx.action, &ctx.tbl, *emb)?;
    let p = emb.p();
    let rows = span.rows_mod(emb)?;
    let total_basis = row_basis(p, rows);
    let total = total_basis.len();
    let mut augmented = total_basis.clone();
    for g in [ctx.p, ctx.q] {
        augmented.extend(total_basis.par_iter().map(|r| act.apply(g, r, 3)).collect::<Vec<_>>());
    }
    let stable_rank = rank_of_rows(p, augmented);
    let sums = act.class_sum_matrices(3);
    let cells = cell_dims(&act, &sums, &EigenRoute::new(ctx, &act, ctx.h7b()), &total_basis);
    let conjugate_cells = if conjugate {
        let route = EigenRoute::new(ctx, &act, conjugate_of_h7b(ctx));
        Some(cell_dims(&act, &sums, &route, &total_basis))
    } else {
        None
    };
    Ok(PrimeRun {
        total,
        stable_rank,
        cells,
        conjugate_cells,
    })
}

/// Runs the modular certificate (and the exact total rank if asked).
pub fn verify(ctx: &Context, quadrics: &QuadricBasis, opts: &VerifyOptions) -> Result<VerificationReport> {
    let span = CubicSpan::new(quadrics);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let expected = expected_rank();

    let point = crate::ideal::find_fixed_point(ctx)?;
    let p = &point.point.coords;
    let vanish_at_p = match first_nonvanishing(quadrics, p) {
        None => true,
        Some(l) => {
            failures.push(format!("{l} does not vanish at p"));
            false
        }
    };
    let pts = orbit_points(ctx, p, 50, ORBIT_SEED);
    let bad: Vec<String> = pts
        .par_iter()
        .filter_map(|(g, pt)| first_nonvanishing(quadrics, pt).map(|l| format!("{l} does not vanish at g{g}.p")))
        .collect();
    let orbit_vanish = bad.is_empty();
    failures.extend(bad);

    let mut runs = Vec::new();
    let mut per_prime_total = Vec::new();
    let mut stable = Vec::new();
    let mut conjugate_check = None;
    for emb in &opts.primes {
        match run_prime(ctx, &span, emb, conjugate_check.is_none()) {
            Ok(r) => {
                if r.stable_rank != r.total {
                    failures.push(format!("span is not G-stable mod {}", emb.p()));
                }
                stable.push(r.stable_rank == r.total);
                if let Some(cells) = &r.conjugate_cells {
                    let agrees = *cells == r.cells;
                    if !agrees {
                        failures.push(format!(
                            "cell dimensions change under a conjugate of h_7B mod {}: {cells:?} vs {:?}",
                            emb.p(),
                            r.cells
                        ));
                    }
                    conjugate_check = Some(ConjugateCheck {
                        p: emb.p(),
                        element: conjugate_of_h7b(ctx),
                        dims: cells.clone(),
                        agrees,
                    });
                }
                per_prime_total.push(PrimeRank {
                    p: emb.p(),
                    rank: Some(r.total),
                    note: None,
                });
                runs.push((emb.p(), Some(r)));
            }
            Err(e) => {
                per_prime_total.push(PrimeRank {
                    p: emb.p(),
                    rank: None,
                    note: Some(e.to_string()),
                });
                runs.push((emb.p(), None));
            }
        }
    }
    let mut total_rank = certificate_from(per_prime_total)?;
    if opts.exact {
        notes.push("exact total rank computed by fraction-free elimination (experimental)".into());
        let exact = SubspaceBasis::new(3, span.generators())?.rank(&RankMode::Exact)?;
        total_rank.rank = exact.rank;
        total_rank.exact = true;
    }
    if total_rank.rank != expected {
        failures.push(format!("total rank {} != {expected}", total_rank.rank));
    }
    if !total_rank.primes_agree {
        failures.push("primes disagree on the total rank".into());
    }
    if total_rank.primes_used() < 2 {
        notes.push(format!(
            "weaker certificate: only {} usable prime(s); use at least two",
            total_rank.primes_used()
        ));
    }

    let h_class = ctx.action.class_of(ctx.h7b());
    let mut cells = Vec::with_capacity(TARGETS.len());
    let mut weighted_sum = 0u64;
    for (c, (i, j, target)) in TARGETS.into_iter().enumerate() {
        let per_prime: Vec<PrimeRank> = runs
            .iter()
            .map(|(p, r)| PrimeRank {
                p: *p,
                rank: r.as_ref().map(|r| r.cells[c]),
                note: None,
            })
            .collect();
        let eig = eigen_multiplicities(&ctx.tbl, &ctx.hurwitz.classes, i, h_class)?;
        let eigen_multiplicity = match j {
            Some(j) => eig[j % 7],
            None => ctx.tbl.degree(i),
        };
        let dims: Vec<usize> = per_prime.iter().filter_map(|r| r.rank).collect();
        let passed = !dims.is_empty() && dims.iter().all(|&d| d == target);
        let multiplicity = dims
            .first()
            .filter(|&&d| (d as u64).is_multiple_of(eigen_multiplicity))
            .map(|&d| d as u64 / eigen_multiplicity);
        if let Some(m) = multiplicity {
            weighted_sum += m * ctx.tbl.degree(i);
        }
        if !passed {
            let jtxt = j.map_or("-".to_string(), |j| j.to_string());
            failures.push(format!("(W{i}, j={jtxt}): dimensions {dims:?}, expected {target}"));
        }
        cells.push(CellResult {
            i,
            j,
            target,
            per_prime,
            eigen_multiplicity,
            multiplicity,
            passed,
        });
    }
    if weighted_sum != expected as u64 {
        failures.push(format!("sum of multiplicity x degree is {weighted_sum}, expected {expected}"));
    }

    Ok(VerificationReport {
        schema: SCHEMA,
        mode: if opts.exact { "exact" } else { "modular" },
        quadrics_sha256: quadrics_hash(quadrics),
        quadric_count: quadrics.len(),
        generators: span.len(),
        primes: opts.primes.iter().map(|e| e.p()).collect(),
        expected_rank: expected,
        total_rank,
        cells,
        weighted_sum,
        containment_witness: Witness {
            vanish_at_p,
            orbit_points: pts.len(),
            orbit_vanish,
            assumption: "V1*I2 is contained in I3 because every quadric lies in the ideal; witnessed by vanishing at p and on sampled orbit points",
        },
        g_stable: stable,
        conjugate_check,
        notes,
        passed: failures.is_empty(),
        failures,
    })
}

impl VerificationReport {
    /// G-stability and conjugate-invariance lines shared by the text renderings.
    pub fn invariant_lines(&self) -> String {
        let mut s = format!("G-stable span per prime: {:?}\n", self.g_stable);
        if let Some(c) = &self.conjugate_check {
            s.push_str(&format!(
                "dimensions with h_7B replaced by g{} (mod {}): {:?}, {}\n",
                c.element,
                c.p,
                c.dims,
                if c.agrees { "unchanged" } else { "CHANGED" }
            ));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("Generators for I_X1(3)\n");
        s.push_str(&format!("quadrics sha256 {}\n", self.quadrics_sha256));
        s.push_str(&format!("mode {}, primes {:?}\n", self.mode, self.primes));
        s.push_str(&format!(
            "total rank of V1*I2: {} (expected {}, {} generators)\n",
            self.total_rank.rank, self.expected_rank, self.generators
        ));
        s.push_str("W_i  j  dim  target  mult  status\n");
        for c in &self.cells {
            let dim = c.per_prime.iter().find_map(|r| r.rank).map_or("?".into(), |d| d.to_string());
            s.push_str(&format!(
                "W{:<3} {}  {:>3}  {:>6}  {:>4}  {}\n",
                c.i,
                c.j.map_or("-".into(), |j| j.to_string()),
                dim,
                c.target,
                c.multiplicity.map_or("?".into(), |m| m.to_string()),
                if c.passed { "PASS" } else { "FAIL" }
            ));
        }
        s.push_str(&format!("sum of multiplicity x degree: {}\n", self.weighted_sum));
        s.push_str(&self.invariant_lines());
        for n in &self.notes {
            s.push_str(&format!("note: {n}\n"));
        }
        for f in &self.failures {
            s.push_str(&format!("failure: {f}\n"));
        }
        s.push_str(if self.passed { "PASS\n" } else { "FAIL\n" });
        s
    }
}
