//! θ₁, θ₂, θ₃ in the ζ²-eigenspace of a W₁₀ or W₁₁ isotypic part, and the quadrics
//! ℘₁ = θ₁(p)θ₂ − θ₂(p)θ₁, ℘₂ = θ₁(p)θ₃ − θ₃(p)θ₁ that vanish at p.

use serde::Serialize;

use super::assemble::module_dimension;
use super::cache::{content_hash, CacheFile, CacheHeader, IntertwinerCache, FORMAT_VERSION};
use super::intertwiner::{
    build_b1, build_b2, certify_nonsingular, check_intertwining, compute_intertwiner_with_seed,
    Convention, Intertwiner, IntertwinerBases, SeedMatrix, Target,
};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{ExtElt, PrimeEmbedding};
use crate::poly::subspace::PrimeRank;
use crate::poly::{PolyVec, RankMode, SubspaceBasis};

/// How the intertwiners are obtained.
#[derive(Clone, Debug)]
pub struct WpOptions {
    pub cache: Option<IntertwinerCache>,
    /// Primes used to certify det S ≠ 0.
    pub primes: Vec<PrimeEmbedding>,
    /// Seed matrices tried before giving up (I, then I + E_{1,2}, …).
    pub max_seeds: usize,
}

impl Default for WpOptions {
    fn default() -> Self {
        WpOptions {
            cache: None,
            primes: PrimeEmbedding::auto(2),
            max_seeds: 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Attempt {
    pub convention: Convention,
    pub seed: String,
    pub from_cache: bool,
    pub outcome: String,
}

#[derive(Clone, Debug)]
pub struct TargetWp {
    pub target: Target,
    pub intertwiner: Intertwiner,
    pub from_cache: bool,
    pub theta: [PolyVec; 3],
    pub theta_at_p: [ExtElt; 3],
    pub wp: [PolyVec; 2],
    /// Dimension of the G-module generated by θ₁, θ₂, θ₃, ℘₁, ℘₂, per prime.
    pub module_dims: Vec<(String, Vec<PrimeRank>)>,
    pub attempts: Vec<Attempt>,
}

/// Loads S from the cache (re-checking it) or computes it by averaging. `None` if S is
/// singular for this seed.
pub fn obtain_intertwiner(
    ctx: &Context,
    bases: &IntertwinerBases,
    seed: SeedMatrix,
    opts: &WpOptions,
) -> Result<Option<(Intertwiner, bool)>> {
    let header = CacheHeader {
        version: FORMAT_VERSION,
        target: bases.target,
        seed,
        convention: bases.convention,
        hash: content_hash(ctx, bases.target, seed, bases.convention),
    };
    if let Some(s) = opts.cache.as_ref().and_then(|c| c.load(&header)) {
        if check_intertwining(ctx, bases, &s).is_ok() && certify_nonsingular(&s, &opts.primes)? {
            let it = Intertwiner {
                target: bases.target,
                convention: bases.convention,
                seed,
                s,
            };
            return Ok(Some((it, true)));
        }
    }
    let Some(it) = compute_intertwiner_with_seed(ctx, bases, seed, &opts.primes)? else {
        return Ok(None);
    };
    if let Some(cache) = &opts.cache {
        cache.store(&CacheFile {
            header,
            matrix: it.s.clone(),
        })?;
    }
    Ok(Some((it, false)))
}

/// θ₁ = ß_{1,2}, θ₂ = Σᵢ s_{i+6,4} κ_{i,2}, θ₃ = Σᵢ s_{i+6,25} κ_{i,2} (1-based indices of S),
/// each checked against the image of θ₁ under S and for nonvanishing at p.
pub fn extract_thetas(
    ctx: &Context,
    bases: &IntertwinerBases,
    it: &Intertwiner,
    p: &[ExtElt],
) -> Result<([PolyVec; 3], [ExtElt; 3])> {
    let fail = |detail: String| Error::verification(format!("theta ({}, {})", it.target, it.convention.label()), detail);
    let kappa = |i: usize| -> &PolyVec {
        &bases.b2.elems[bases.b2.position((i, 2)).expect("label present")]
    };
    let pos = bases.b1.position((1, 2)).expect("label present");
    let theta1 = bases.b1.elems[pos].clone();
    let from_column = |col: usize| -> PolyVec {
        let coeffs: Vec<ExtElt> = (1..=6).map(|i| ExtElt::from_cyc(it.entry(i + 6, col).clone())).collect();
        let kappas: Vec<&PolyVec> = (1..=6).map(kappa).collect();
        PolyVec::linear_combination(2, coeffs.iter().zip(kappas))
    };
    let theta2 = from_column(4);
    let theta3 = from_column(25);
    for (name, t) in [("theta2", &theta2), ("theta3", &theta3)] {
        if t.is_zero() {
            return Err(fail(format!("{name} is zero")));
        }
    }
    let n1 = bases.b1.len();
    if it.image_of_column(bases, pos) != theta2 {
        return Err(fail("theta2 is not the image of (theta1, 0) under S".into()));
    }
    if it.image_of_column(bases, n1 + pos) != theta3 {
        return Err(fail("theta3 is not the image of (0, theta1) under S".into()));
    }
    let thetas = [theta1, theta2, theta3];
    for (k, t) in thetas.iter().enumerate() {
        if !ctx.is_eigen(2, t) {
            return Err(fail(format!("theta{} is not a zeta^2-eigenvector", k + 1)));
        }
        if ctx.pi(it.target.index(), t) != *t {
            return Err(fail(format!("theta{} is not in the {} part", k + 1, it.target)));
        }
    }
    let at_p: Vec<ExtElt> = thetas.iter().map(|t| t.evaluate(p)).collect();
    if let Some(k) = at_p.iter().position(ExtElt::is_zero) {
        return Err(fail(format!("theta{}(p) = 0", k + 1)));
    }
    let at_p: [ExtElt; 3] = at_p.try_into().expect("three values");
    Ok((thetas, at_p))
}

/// ℘₁ and ℘₂ from θ and their values at p.
pub fn wp_from_thetas(theta: &[PolyVec; 3], at_p: &[ExtElt; 3]) -> [PolyVec; 2] {
    let pair = |k: usize| theta[k].scale(&at_p[0]).sub(&theta[0].scale(&at_p[k]));
    [pair(1), pair(2)]
}

fn check_wp(target: Target, wp: &[PolyVec; 2], p: &[ExtElt]) -> Result<()> {
    let locus = format!("wp ({target})");
    for (k, w) in wp.iter().enumerate() {
        if w.is_zero() {
            return Err(Error::verification(&locus, format!("wp{} is zero", k + 1)));
        }
        if !w.evaluate(p).is_zero() {
            return Err(Error::verification(&locus, format!("wp{}(p) != 0", k + 1)));
        }
    }
    let rank = SubspaceBasis::new(2, wp.to_vec())?.rank(&RankMode::Exact)?.rank;
    if rank != 2 {
        return Err(Error::verification(&locus, "wp1 and wp2 are proportional"));
    }
    Ok(())
}

/// Each of θ₁, θ₂, θ₃, ℘₁, ℘₂ must generate a module of dimension deg W_target.
fn check_module_dims(
    ctx: &Context,
    target: Target,
    theta: &[PolyVec; 3],
    wp: &[PolyVec; 2],
    primes: &[PrimeEmbedding],
) -> Result<Vec<(String, Vec<PrimeRank>)>> {
    let want = ctx.tbl.degree(target.index()) as usize;
    let named = [
        ("theta1", &theta[0]),
        ("theta2", &theta[1]),
        ("theta3", &theta[2]),
        ("wp1", &wp[0]),
        ("wp2", &wp[1]),
    ];
    let mut out = Vec::with_capacity(named.len());
    for (name, f) in named {
        let dims = module_dimension(ctx, f, primes)?;
        let ranks: Vec<usize> = dims.iter().filter_map(|r| r.rank).collect();
        if ranks.is_empty() || ranks.iter().any(|&r| r != want) {
            return Err(Error::verification(
                format!("{name} ({target})"),
                format!("generates a module of dimension {ranks:?}, expected {want}"),
            ));
        }
        out.push((name.to_string(), dims));
    }
    Ok(out)
}

/// Runs the conventions and seeds in order until θ passes every check.
pub fn derive_wp(ctx: &Context, target: Target, p: &[ExtElt], opts: &WpOptions) -> Result<TargetWp> {
    let b1 = build_b1(ctx, target)?;
    let b2 = build_b2(ctx, target)?;
    let mut attempts = Vec::new();
    for seed in SeedMatrix::sequence().take(opts.max_seeds.max(1)) {
        for conv in Convention::ALL {
            let bases = IntertwinerBases::new(ctx, target, conv, &b1, &b2)?;
            let mut record = |from_cache: bool, outcome: String| {
                attempts.push(Attempt {
                    convention: conv,
                    seed: seed.descriptor(),
                    from_cache,
                    outcome,
                })
            };
            let Some((it, from_cache)) = obtain_intertwiner(ctx, &bases, seed, opts)? else {
                record(false, "S is singular".into());
                continue;
            };
            match extract_thetas(ctx, &bases, &it, p) {
                Ok((theta, theta_at_p)) => {
                    let wp = wp_from_thetas(&theta, &theta_at_p);
                    check_wp(target, &wp, p)?;
                    let module_dims = check_module_dims(ctx, target, &theta, &wp, &opts.primes)?;
                    record(from_cache, "ok".into());
                    return Ok(TargetWp {
                        target,
                        intertwiner: it,
                        from_cache,
                        theta,
                        theta_at_p,
                        wp,
                        module_dims,
                        attempts,
                    });
                }
                Err(e) => record(from_cache, e.to_string()),
            }
        }
    }
    let tried: Vec<String> = attempts
        .iter()
        .map(|a| format!("{} / {}: {}", a.convention.label(), a.seed, a.outcome))
        .collect();
    Err(Error::verification(
        format!("wp ({target})"),
        format!("no convention and seed gave usable theta [{}]", tried.join("; ")),
    ))
}
