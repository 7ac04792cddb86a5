//! The 105 quadrics D₁ ∪ D₄ ∪ D₈ ∪ D₁₀ ∪ D₁₁ and their validation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::quadrics::{Quadric, QuadricBasis, QuadricLabel};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{ExtElt, PrimeEmbedding};
use crate::linalg::rank_of_rows;
use crate::poly::subspace::PrimeRank;
use crate::poly::{basis, ModAction, PolyVec, RankCertificate, RankMode, SubspaceBasis};

/// Expected sizes of D₁, D₄, D₈, D₁₀, D₁₁.
pub const PART_SIZES: [(usize, usize); 5] = [(1, 1), (4, 12), (8, 8), (10, 42), (11, 42)];
pub const TOTAL: usize = 105;
pub const ORBIT_SEED: u64 = 17;

/// Everything the assembly consumes.
#[derive(Clone, Debug)]
pub struct Ingredients {
    /// ϑ₁, ϑ₂ spanning the ζ²-part of the W₄-quadrics through p.
    pub vartheta: [PolyVec; 2],
    /// q_{ζ²} = ρ_{ζ²}(π_{W₈}(y₁²)).
    pub q: PolyVec,
    pub wp10: [PolyVec; 2],
    pub wp11: [PolyVec; 2],
}

fn push(out: &mut Vec<Quadric>, part: usize, j: usize, k: usize, poly: PolyVec) {
    out.push(Quadric {
        label: QuadricLabel::new(part, j, k),
        poly,
    });
}

/// D₁₀ or D₁₁ from ℘₁, ℘₂: chains of three under ρ_{ζ²}∘Q, then every other eigenvalue.
fn wp_part(ctx: &Context, part: usize, wp: &[PolyVec; 2]) -> Vec<Quadric> {
    let mut zeta2 = Vec::with_capacity(6);
    for w in wp {
        let mut cur = w.clone();
        for _ in 0..3 {
            let next = ctx.rho(2, &ctx.q_act(&cur));
            zeta2.push(std::mem::replace(&mut cur, next));
        }
    }
    let mut out = Vec::with_capacity(42);
    for j in 1..=7 {
        let row: Vec<PolyVec> = if j == 2 {
            zeta2.clone()
        } else {
            zeta2
                .par_iter()
                .map(|d| ctx.rho(j as i64, &ctx.q_act(d)))
                .collect()
        };
        for (k, d) in row.into_iter().enumerate() {
            push(&mut out, part, j, k + 1, d);
        }
    }
    out
}

/// Builds the labelled basis and checks that every element is a nonzero ζʲ-eigenvector.
pub fn assemble(ctx: &Context, ing: &Ingredients) -> Result<QuadricBasis> {
    let mut q = Vec::with_capacity(TOTAL);
    push(&mut q, 1, 7, 1, ctx.pi(1, &PolyVec::y(&[1, 2])));
    for (i, v) in ing.vartheta.iter().enumerate() {
        let qv = ctx.q_act(v);
        for j in 1..=6 {
            push(&mut q, 4, j, i + 1, ctx.rho(j as i64, &qv));
        }
    }
    q.sort_by_key(|x| x.label);
    let qq = ctx.q_act(&ing.q);
    for j in 1..=7 {
        push(&mut q, 8, j, 1, ctx.rho(j as i64, &qq));
    }
    push(&mut q, 8, 7, 2, ctx.rho(7, &ctx.q_act(&qq)));
    q.extend(wp_part(ctx, 10, &ing.wp10));
    q.extend(wp_part(ctx, 11, &ing.wp11));
    for d in &q {
        if d.poly.is_zero() {
            return Err(Error::verification(d.label.to_string(), "quadric is zero"));
        }
        if !ctx.is_eigen(d.label.j as i64, &d.poly) {
            return Err(Error::verification(
                d.label.to_string(),
                format!("not a zeta^{}-eigenvector of h_7B", d.label.j),
            ));
        }
    }
    Ok(QuadricBasis { quadrics: q })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularChecks {
    pub p: u64,
    /// rank of D ∪ P·D ∪ Q·D.
    pub stable_rank: usize,
    /// Each Dᵢ is Q-stable.
    pub parts_stable: bool,
    /// dim π_{Wᵢ}(span D), i = 1..11.
    pub profile: Vec<usize>,
    /// π_{Wᵢ}(d) = d for d ∈ Dᵢ and π_{Wⱼ}(d) = 0 otherwise.
    pub parts_isotypic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub counts: Vec<(usize, usize)>,
    pub counts_ok: bool,
    pub vanish_at_p: bool,
    pub rank: RankCertificate,
    pub modular: Vec<ModularChecks>,
    pub orbit_points: usize,
    pub orbit_vanish: bool,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// dim π_{Wᵢ}(S²V) for the isotypic parts of the ideal; the rest must vanish.
pub fn expected_profile() -> Vec<usize> {
    let mut v = vec![0; 11];
    for (i, n) in PART_SIZES {
        v[i - 1] = n;
    }
    v
}

fn modular_checks(ctx: &Context, b: &QuadricBasis, emb: &PrimeEmbedding) -> Result<ModularChecks> {
    let mb = basis(2);
    let act = ModAction::new(&ctx.action, &ctx.tbl, *emb)?;
    let p = emb.p();
    let rows: Vec<Vec<u64>> = b
        .quadrics
        .iter()
        .map(|q| q.poly.reduce(emb, mb))
        .collect::<Result<_>>()?;
    let images = |g: usize, rows: &[Vec<u64>]| -> Vec<Vec<u64>> {
        rows.iter().map(|r| act.apply(g, r, 2)).collect()
    };
    let mut all = rows.clone();
    all.extend(images(ctx.p, &rows));
    all.extend(images(ctx.q, &rows));
    let stable_rank = rank_of_rows(p, all);

    let mut parts_stable = true;
    for (part, _) in PART_SIZES {
        let sub: Vec<Vec<u64>> = b
            .quadrics
            .iter()
            .zip(&rows)
            .filter(|(q, _)| q.label.part == part)
            .map(|(_, r)| r.clone())
            .collect();
        let base = rank_of_rows(p, sub.clone());
        let mut aug = sub.clone();
        aug.extend(images(ctx.q, &sub));
        parts_stable &= rank_of_rows(p, aug) == base;
    }

    let sums = act.class_sum_matrices(2);
    let mut profile = Vec::with_capacity(11);
    let mut parts_isotypic = true;
    for i in 1..=11 {
        let pi = act.isotypic_matrix(&sums, i);
        let projected: Vec<Vec<u64>> = rows.iter().map(|r| pi.apply(r)).collect();
        for ((q, r), pr) in b.quadrics.iter().zip(&rows).zip(&projected) {
            let want_self = q.label.part == i;
            let ok = if want_self { pr == r } else { pr.iter().all(|&x| x == 0) };
            parts_isotypic &= ok;
        }
        profile.push(rank_of_rows(p, projected));
    }
    Ok(ModularChecks {
        p,
        stable_rank,
        parts_stable,
        profile,
        parts_isotypic,
    })
}

/// Values of the degree-2 monomials at a point.
fn monomial_values(point: &[ExtElt]) -> Vec<ExtElt> {
    basis(2)
        .monos()
        .iter()
        .map(|m| {
            let v = m.vars();
            &point[v[0] as usize] * &point[v[1] as usize]
        })
        .collect()
}

/// The first quadric that does not vanish at the point.
pub fn first_nonvanishing(b: &QuadricBasis, point: &[ExtElt]) -> Option<QuadricLabel> {
    let vals = monomial_values(point);
    let mb = basis(2);
    b.quadrics
        .iter()
        .find(|q| {
            let v = ExtElt::sum_of_products(q.poly.terms().map(|(m, c)| (c, &vals[mb.index(m)])));
            !v.is_zero()
        })
        .map(|q| q.label)
}

/// Points g·p for `n` group elements drawn from a seeded generator.
pub fn orbit_points(ctx: &Context, p: &[ExtElt], n: usize, seed: u64) -> Vec<(usize, Vec<ExtElt>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let g = rng.gen_range(0..ctx.action.order());
            (g, ctx.action.act_dual(g, p))
        })
        .collect()
}

/// Rank, G-stability, isotypic profile and vanishing on p and 50 orbit points.
pub fn validate_basis(
    ctx: &Context,
    b: &QuadricBasis,
    p: &[ExtElt],
    primes: &[PrimeEmbedding],
) -> Result<BasisReport> {
    let mut failures = Vec::new();
    let counts: Vec<(usize, usize)> = PART_SIZES
        .iter()
        .map(|&(part, _)| (part, b.part(part).count()))
        .collect();
    let counts_ok = counts == PART_SIZES && b.len() == TOTAL;
    if !counts_ok {
        failures.push(format!("part sizes {counts:?}"));
    }
    let vanish_at_p = match first_nonvanishing(b, p) {
        None => true,
        Some(l) => {
            failures.push(format!("{l} does not vanish at p"));
            false
        }
    };
    let rank = SubspaceBasis::new(2, b.polys())?.rank(&RankMode::Modular(primes.to_vec()))?;
    if rank.rank != TOTAL || !rank.primes_agree {
        failures.push(format!("rank {} (primes agree: {})", rank.rank, rank.primes_agree));
    }
    let modular = primes
        .iter()
        .map(|emb| modular_checks(ctx, b, emb))
        .collect::<Result<Vec<_>>>()?;
    for m in &modular {
        if m.stable_rank != rank.rank {
            failures.push(format!("span not G-stable mod {}", m.p));
        }
        if !m.parts_stable {
            failures.push(format!("some part is not Q-stable mod {}", m.p));
        }
        if m.profile != expected_profile() {
            failures.push(format!("isotypic profile {:?} mod {}", m.profile, m.p));
        }
        if !m.parts_isotypic {
            failures.push(format!("a quadric lies outside its isotypic part mod {}", m.p));
        }
    }
    let pts = orbit_points(ctx, p, 50, ORBIT_SEED);
    let bad: Vec<String> = pts
        .par_iter()
        .filter_map(|(g, pt)| first_nonvanishing(b, pt).map(|l| format!("{l} at g{g}.p")))
        .collect();
    let orbit_vanish = bad.is_empty();
    failures.extend(bad);
    Ok(BasisReport {
        counts,
        counts_ok,
        vanish_at_p,
        rank,
        modular,
        orbit_points: pts.len(),
        orbit_vanish,
        passed: failures.is_empty(),
        failures,
    })
}

/// Dimension of the G-module generated by f, per prime.
pub fn module_dimension(ctx: &Context, f: &PolyVec, primes: &[PrimeEmbedding]) -> Result<Vec<PrimeRank>> {
    primes
        .iter()
        .map(|emb| {
            let act = ModAction::new(&ctx.action, &ctx.tbl, *emb)?;
            let v = f.reduce(emb, basis(f.degree()))?;
            Ok(PrimeRank {
                p: emb.p(),
                rank: Some(act.orbit_rank(&v, f.degree())),
                note: None,
            })
        })
        .collect()
}
