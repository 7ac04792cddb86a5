mod common;

use common::*;
use hurwitz_core::field::{alpha_constant, CycElt, ExtElt};
use hurwitz_core::ideal::assemble::{expected_profile, PART_SIZES};
use hurwitz_core::ideal::cache::{content_hash, FORMAT_VERSION};
use hurwitz_core::ideal::intertwiner::{check_intertwining, certify_nonsingular};
use hurwitz_core::ideal::{
    build_b1, build_b2, derive_wp, validate_basis, CacheHeader, Convention, IntertwinerBases,
    IntertwinerCache, QuadricBasis, QuadricLabel, SeedMatrix, Target,
};
use hurwitz_core::poly::{PolyVec, RankMode, SubspaceBasis};

fn rank(polys: Vec<PolyVec>) -> usize {
    SubspaceBasis::new(2, polys).unwrap().rank(&RankMode::Exact).unwrap().rank
}

#[test]
fn q_zeta2_and_the_alpha_equation() {
    let c = ctx();
    let r = pipeline();
    let q = &r.fixed.q_zeta2;
    assert_eq!(c.act(c.h7b(), q), q.scale_cyc(&CycElt::zeta(2)));
    assert_eq!(c.pi(8, q), *q);
    for v in &r.fixed.v[..2] {
        assert!(!q.evaluate(v).is_zero());
    }
    let eq = &r.fixed.equation;
    assert!(eq.linear.is_zero());
    assert_eq!(eq.monic_constant, *alpha_constant());
    assert!(q.evaluate(r.point()).is_zero());
}

#[test]
fn point_is_fixed_by_h7b() {
    let c = ctx();
    let p = pipeline().point();
    let hp = c.action.act_dual(c.h7b(), p);
    // The dual action fixes the line through p: hp = ζ⁶·p.
    let z6 = ExtElt::from_cyc(CycElt::zeta(6));
    assert!(hp.iter().zip(p).all(|(a, b)| *a == &z6 * b));
}

#[test]
fn w4_part() {
    let r = pipeline();
    let [t1, t2] = &r.w4.theta;
    assert!(t1.evaluate(r.point()).is_zero() && t2.evaluate(r.point()).is_zero());
    assert_eq!(rank(r.w4.theta.to_vec()), 2);
    // ζ²-part of π_{W₄}(I₂): multiplicity 2 times one ζ²-eigenvalue in W₄.
    let zeta2: Vec<PolyVec> = r.basis.part(4).filter(|q| q.label.j == 2).map(|q| q.poly.clone()).collect();
    assert_eq!(rank(zeta2), 2);
}

#[test]
fn wp_for_both_targets() {
    let r = pipeline();
    for wp in [&r.wp10, &r.wp11] {
        assert_eq!(wp.intertwiner.seed, SeedMatrix::Identity, "det S != 0 with M0 = I");
        assert_eq!(wp.intertwiner.convention, Convention::JMajor);
        let first = &wp.attempts[0];
        assert_eq!(first.convention, Convention::IMajor);
        assert!(first.outcome.contains("theta2 is not the image"), "{}", first.outcome);
        for w in &wp.wp {
            assert!(w.evaluate(r.point()).is_zero());
        }
        assert_eq!(rank(wp.wp.to_vec()), 2);
        assert!(wp.theta_at_p.iter().all(|x| !x.is_zero()));
        assert_eq!(wp.module_dims.len(), 5);
        for (name, dims) in &wp.module_dims {
            assert!(dims.iter().all(|d| d.rank == Some(21)), "{name}: {dims:?}");
        }
    }
}

#[test]
fn intertwining_relation_is_exact_and_sensitive() {
    let c = ctx();
    let wp = &pipeline().wp10;
    let b1 = build_b1(c, Target::W10).unwrap();
    let b2 = build_b2(c, Target::W10).unwrap();
    let bases = IntertwinerBases::new(c, Target::W10, Convention::JMajor, &b1, &b2).unwrap();
    let s = &wp.intertwiner.s;
    check_intertwining(c, &bases, s).unwrap();
    assert!(certify_nonsingular(s, primes()).unwrap());
    let mut bad = s.clone();
    bad.set(0, 0, s.get(0, 0) + &CycElt::one());
    assert!(check_intertwining(c, &bases, &bad).is_err());
}

#[test]
fn cache_is_keyed_by_content() {
    let c = ctx();
    let cache = IntertwinerCache::new(cache_dir());
    let wp = &pipeline().wp11;
    let it = &wp.intertwiner;
    let header = CacheHeader {
        version: FORMAT_VERSION,
        target: it.target,
        seed: it.seed,
        convention: it.convention,
        hash: content_hash(c, it.target, it.seed, it.convention),
    };
    assert_eq!(cache.load(&header).as_ref(), Some(&it.s));
    let other_seed = CacheHeader {
        seed: SeedMatrix::IdentityPlusUnit(2),
        hash: content_hash(c, it.target, SeedMatrix::IdentityPlusUnit(2), it.convention),
        ..header.clone()
    };
    assert!(cache.load(&other_seed).is_none());
    let stale = CacheHeader {
        hash: "0".repeat(64),
        ..header
    };
    assert!(cache.load(&stale).is_none());
}

#[test]
fn warm_cache_skips_averaging() {
    let r = pipeline();
    let again = derive_wp(ctx(), Target::W10, r.point(), &wp_options()).unwrap();
    assert!(again.from_cache);
    assert_eq!(again.wp, r.wp10.wp);
}

#[test]
fn seed_sequence() {
    let seeds: Vec<SeedMatrix> = SeedMatrix::sequence().take(3).collect();
    assert_eq!(seeds[0], SeedMatrix::Identity);
    assert_eq!(seeds[1].descriptor(), "identity+E1,2");
    // Every fallback seed is invertible (rank-one seeds cannot give det S != 0).
    for s in seeds {
        for i in 0..42 {
            assert_eq!(s.entry(i, i), 1);
        }
    }
}

#[test]
fn assembled_basis() {
    let c = ctx();
    let r = pipeline();
    let b = &r.basis;
    // Oracle: dim S²V − dim H⁰(K²) = 153 − 48.
    assert_eq!(b.len(), 153 - 48);
    for (part, n) in PART_SIZES {
        assert_eq!(b.part(part).count(), n, "D{part}");
    }
    assert_eq!(b.get(QuadricLabel::new(1, 7, 1)), Some(&c.pi(1, &PolyVec::y(&[1, 2]))));
    for q in &b.quadrics {
        assert!(c.is_eigen(q.label.j as i64, &q.poly), "{}", q.label);
    }
    let report = validate_basis(c, b, r.point(), primes()).unwrap();
    assert!(report.passed, "{:?}", report.failures);
    assert_eq!(report.rank.rank, 105);
    // π_{W₁} and π_{W₈} of I₂ fill the whole W₁- and W₈-parts of S²V (a₁(2) = a₈(2) = 1).
    let profile = expected_profile();
    assert_eq!(profile[0], c.tbl.degree(1) as usize);
    assert_eq!(profile[7], c.tbl.degree(8) as usize);
    for m in &report.modular {
        assert_eq!(m.profile, profile);
    }
}

#[test]
fn quadric_file_round_trip() {
    let b = &pipeline().basis;
    let text = b.to_text();
    assert_eq!(&QuadricBasis::parse(&text).unwrap(), b);
}
