//! Shared fixtures, strategies and checks for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use hurwitz_core::field::{alpha_constant, CycElt, ExtElt, PrimeEmbedding, Rational};
use hurwitz_core::ideal::{build_quadrics, IntertwinerCache, QuadricResult, WpOptions};
use hurwitz_core::poly::{basis, PolyVec};
use hurwitz_core::Context;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::build().expect("context"))
}

/// One cache directory for every test binary, so S is averaged once per checkout.
pub fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("hurwitz17-cache")
}

pub fn wp_options() -> WpOptions {
    WpOptions {
        cache: Some(IntertwinerCache::new(cache_dir())),
        ..WpOptions::default()
    }
}

pub fn pipeline() -> &'static QuadricResult {
    static R: OnceLock<QuadricResult> = OnceLock::new();
    R.get_or_init(|| build_quadrics(ctx(), &wp_options()).expect("quadric pipeline"))
}

pub fn primes() -> &'static [PrimeEmbedding] {
    static P: OnceLock<Vec<PrimeEmbedding>> = OnceLock::new();
    P.get_or_init(|| PrimeEmbedding::auto(2))
}

// ---- strategies ----

fn cyc_from(num: &[i64], den: i64) -> CycElt {
    CycElt::from_int_poly(num, den)
}

/// Sparse elements with small coefficients: cheap enough for projector sums.
pub fn small_ext() -> impl Strategy<Value = ExtElt> {
    (-4i64..=4, 0i64..21, -2i64..=2, 0i64..21, 1i64..=4).prop_filter_map("nonzero", |(a, k, b, l, d)| {
        let x = ExtElt::new(
            CycElt::xi_pow(k).scale_int(a),
            CycElt::xi_pow(l).scale_int(b),
        )
        .scale_rational(&Rational::new(BigInt::from(1), BigInt::from(d)));
        (!x.is_zero()).then_some(x)
    })
}

/// Dense elements: all twelve coordinates of both parts random.
pub fn dense_ext() -> impl Strategy<Value = ExtElt> {
    (
        prop::collection::vec(-1000i64..=1000, 12),
        1i64..=60,
        prop::collection::vec(-1000i64..=1000, 12),
        1i64..=60,
    )
        .prop_map(|(a, da, b, db)| ExtElt::new(cyc_from(&a, da), cyc_from(&b, db)))
}

/// Homogeneous polynomials of degree `deg` with 1..=`max_terms` terms.
pub fn poly(deg: usize, max_terms: usize) -> impl Strategy<Value = PolyVec> {
    let n = basis(deg).len();
    prop::collection::vec((0..n, small_ext()), 1..=max_terms).prop_map(move |terms| {
        let b = basis(deg);
        let mut f = PolyVec::zero(deg);
        for (i, c) in terms {
            f.add_term(b.mono(i), &c);
        }
        f
    })
}

pub fn element() -> impl Strategy<Value = usize> {
    0..1344usize
}

pub fn point() -> impl Strategy<Value = Vec<ExtElt>> {
    prop::collection::vec(small_ext(), 17)
}

// ---- checks ----

/// Random weights for [`projector_algebra`].
pub fn weights() -> impl Strategy<Value = [i64; 11]> {
    prop::array::uniform11(1i64..(1 << 40))
}

/// Σπᵢ = id, πᵢ² = πᵢ and πⱼπᵢ = 0 for j ≠ i on one polynomial.
///
/// With cᵢ = πᵢ(f), the last two hold for all i, j exactly when πⱼ(Σ rᵢcᵢ) = rⱼcⱼ as a
/// polynomial identity in the rᵢ; it is tested at random weights r (Schwartz–Zippel),
/// so one extra pass of projections covers all 121 pairs.
pub fn projector_algebra(f: &PolyVec, r: &[i64; 11]) -> Result<(), String> {
    let c = ctx();
    let comps = c.action.isotypic_components(f, &c.tbl);
    let mut sum = PolyVec::zero(f.degree());
    for p in &comps {
        sum.add_assign(p);
    }
    if sum != *f {
        return Err("components do not sum to f".into());
    }
    let weighted = comps
        .iter()
        .zip(r)
        .fold(PolyVec::zero(f.degree()), |acc, (p, &w)| acc.add(&p.scale(&ExtElt::from_int(w))));
    let again = c.action.isotypic_components(&weighted, &c.tbl);
    for (j, (q, p)) in again.iter().zip(&comps).enumerate() {
        if *q != p.scale(&ExtElt::from_int(r[j])) {
            return Err(format!("pi_{} is not an orthogonal idempotent on the components", j + 1));
        }
    }
    Ok(())
}

pub fn act_commutes_with_projector(g: usize, i: usize, f: &PolyVec) -> bool {
    let c = ctx();
    c.act(g, &c.pi(i, f)) == c.pi(i, &c.act(g, f))
}

pub fn pairing_invariant(g: usize, f: &PolyVec, p: &[ExtElt]) -> bool {
    let c = ctx();
    c.act(g, f).evaluate(&c.action.act_dual(g, p)) == f.evaluate(p)
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r < BigInt::from(0) { r + BigInt::from(p) } else { r };
    u64::try_from(r).expect("reduced")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Reduction of a + bα by direct substitution of ξ and α, written independently of the library.
pub fn reduce_oracle(x: &ExtElt, emb: &PrimeEmbedding) -> Option<u64> {
    let p = emb.p();
    let cyc = |c: &CycElt| -> Option<u64> {
        let den = bigint_mod(c.denominator(), p);
        if den == 0 {
            return None;
        }
        let mut acc = 0u128;
        for (i, n) in c.numerators().iter().enumerate() {
            acc += bigint_mod(n, p) as u128 * pow_mod(emb.xi_image(), i as u64, p) as u128 % p as u128;
        }
        let inv = pow_mod(den, p - 2, p);
        Some(((acc % p as u128) * inv as u128 % p as u128) as u64)
    };
    let a = cyc(x.a())?;
    let b = cyc(x.b())?;
    Some(((a as u128 + b as u128 * emb.alpha_image() as u128) % p as u128) as u64)
}

/// Reduction agrees with the oracle and respects +, ×, and α² = −c.
pub fn modp_homomorphism(x: &ExtElt, y: &ExtElt, emb: &PrimeEmbedding) -> Result<(), String> {
    let p = emb.p() as u128;
    let (Some(rx), Some(ry)) = (reduce_oracle(x, emb), reduce_oracle(y, emb)) else {
        return Ok(());
    };
    let lib = |z: &ExtElt| emb.reduce(z).map_err(|e| e.to_string());
    if lib(x)? != rx || lib(y)? != ry {
        return Err("reduction differs from direct substitution".into());
    }
    if lib(&(x + y))? as u128 != (rx as u128 + ry as u128) % p {
        return Err("sum not preserved".into());
    }
    if lib(&(x * y))? as u128 != (rx as u128 * ry as u128) % p {
        return Err("product not preserved".into());
    }
    let a = emb.alpha_image() as u128;
    let c = emb.reduce_cyc(alpha_constant()).map_err(|e| e.to_string())? as u128;
    if !(a * a + c).is_multiple_of(p) {
        return Err("alpha^2 != -c".into());
    }
    Ok(())
}
