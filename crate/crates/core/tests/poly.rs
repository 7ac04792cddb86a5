mod common;

use common::*;
use hurwitz_core::field::{CycElt, ExtElt, UnitRoot};
use hurwitz_core::ideal::q_zeta2;
use hurwitz_core::poly::{basis, PolyVec, RankMode, SubspaceBasis};
use proptest::prelude::*;

fn unit(i: usize) -> Vec<ExtElt> {
    let mut v = vec![ExtElt::zero(); 17];
    v[i - 1] = ExtElt::one();
    v
}

#[test]
fn y17_squared_is_zeta2_eigenvector() {
    let c = ctx();
    // Oracle: the W₂ block of h_7B sends y₁₇ to λ·y₁₇ with λ read off the matrix.
    let w2 = &c.rep.image(c.h7b()).w2;
    assert!(w2.get(0, 2).is_zero() && w2.get(1, 2).is_zero());
    let lambda = w2.get(2, 2).clone();
    assert_eq!(&lambda * &lambda, CycElt::zeta(2));
    let f = PolyVec::y(&[17, 17]);
    assert_eq!(c.act(c.h7b(), &f), f.scale_cyc(&(&lambda * &lambda)));
}

#[test]
fn invariant_quadric_and_missing_w9() {
    let c = ctx();
    let d = c.pi(1, &PolyVec::y(&[1, 2]));
    assert!(!d.is_zero());
    for g in [c.p, c.q, c.h7b()] {
        assert_eq!(c.act(g, &d), d);
    }
    // a₉(2) = 0 in the S²(W₉+W₂) table.
    for m in [[1, 1], [1, 16], [15, 17], [3, 9]] {
        assert!(c.pi(9, &PolyVec::y(&m)).is_zero());
    }
}

#[test]
fn isotypic_dimensions_of_s2() {
    // Oracle: a_i(2) of the S²(W₉+W₂) table times deg Wᵢ.
    let c = ctx();
    let a = [1, 0, 0, 3, 0, 0, 0, 1, 0, 3, 3];
    let monos: Vec<PolyVec> = basis(2).monos().iter().map(|m| PolyVec::monomial(*m, ExtElt::one())).collect();
    for i in [1, 4, 8, 9, 10] {
        let images: Vec<PolyVec> = monos.iter().map(|f| c.pi(i, f)).collect();
        let r = SubspaceBasis::new(2, images).unwrap().rank(&RankMode::Modular(primes().to_vec())).unwrap();
        assert_eq!(r.rank as u64, a[i - 1] * c.tbl.degree(i), "W{i}");
    }
}

#[test]
fn zeta2_part_of_w4_has_dimension_three() {
    let c = ctx();
    let images: Vec<PolyVec> = basis(2)
        .monos()
        .iter()
        .map(|m| c.rho(2, &c.pi(4, &PolyVec::monomial(*m, ExtElt::one()))))
        .collect();
    let r = SubspaceBasis::new(2, images).unwrap().rank(&RankMode::Modular(primes().to_vec())).unwrap();
    assert_eq!(r.rank, 3);
}

#[test]
fn dual_zeta6_eigenspaces() {
    let c = ctx();
    let v1 = c.rho_dual(6, &unit(1));
    assert!(v1.iter().any(|x| !x.is_zero()));
    let span = |range: std::ops::RangeInclusive<usize>| {
        let rows: Vec<PolyVec> = range
            .map(|i| {
                let v = c.rho_dual(6, &unit(i));
                let b = basis(1);
                PolyVec::from_dense(b, &v)
            })
            .collect();
        SubspaceBasis::new(1, rows).unwrap().rank(&RankMode::Exact).unwrap().rank
    };
    assert_eq!(span(1..=14), 2);
    assert_eq!(span(15..=17), 1);
    assert!(!q_zeta2(c).unwrap().evaluate(&v1).is_zero());
    let v2 = c.rho_dual(6, &unit(2));
    assert!(!q_zeta2(c).unwrap().evaluate(&v2).is_zero());
}

#[test]
fn evaluation_and_small_rank() {
    assert_eq!(PolyVec::y(&[1, 1]).evaluate(&unit(1)), ExtElt::one());
    let f = [PolyVec::y(&[1, 1]), PolyVec::y(&[2, 2]), PolyVec::y(&[1, 1]).add(&PolyVec::y(&[2, 2]))];
    let s = SubspaceBasis::new(2, f.to_vec()).unwrap();
    assert_eq!(s.rank(&RankMode::Exact).unwrap().rank, 2);
    assert_eq!(s.rank(&RankMode::Modular(primes().to_vec())).unwrap().rank, 2);
}

#[test]
fn summand_split_is_stable() {
    // S²V = S²V₉ ⊕ S²V₂ ⊕ V₉⊗V₂: each monomial type maps into its own type.
    let c = ctx();
    let kind = |m: &hurwitz_core::poly::Mono| m.vars().iter().filter(|&&v| v >= 14).count();
    for g in [c.p, c.q, c.h7b()] {
        for m in basis(2).monos() {
            let img = c.act(g, &PolyVec::monomial(*m, ExtElt::one()));
            assert!(img.terms().all(|(n, _)| kind(n) == kind(m)), "{m} under g{g}");
        }
    }
}

#[test]
fn projectors_pairwise_on_one_quadric() {
    // Every πⱼπᵢ computed separately, without the weighted shortcut.
    let c = ctx();
    let f = PolyVec::y(&[1, 2]).add(&PolyVec::y(&[3, 17])).add(&PolyVec::y(&[16, 16]));
    let comps = c.action.isotypic_components(&f, &c.tbl);
    for (i, p) in comps.iter().enumerate() {
        for (j, q) in c.action.isotypic_components(p, &c.tbl).iter().enumerate() {
            if i == j {
                assert_eq!(q, p);
            } else {
                assert!(q.is_zero(), "pi_{} pi_{}", j + 1, i + 1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn act_identity_and_inverse(g in element(), f in poly(2, 4)) {
        let c = ctx();
        prop_assert_eq!(c.act(0, &f), f.clone());
        prop_assert_eq!(c.act(g, &c.act(c.action.inverse(g), &f)), f);
    }

    #[test]
    fn act_is_a_homomorphism(g in element(), h in element(), f in poly(3, 3)) {
        let c = ctx();
        let gh = c.table().mul(g, h);
        prop_assert_eq!(c.act(gh, &f), c.act(g, &c.act(h, &f)));
    }

    #[test]
    fn projector_algebra_on_quadrics(f in poly(2, 3), r in weights()) {
        prop_assert_eq!(projector_algebra(&f, &r), Ok(()));
    }

    #[test]
    fn projector_algebra_on_cubics(f in poly(3, 2), r in weights()) {
        prop_assert_eq!(projector_algebra(&f, &r), Ok(()));
    }

    #[test]
    fn projectors_commute_with_action(g in element(), i in 1usize..=11, f in poly(2, 3)) {
        prop_assert!(act_commutes_with_projector(g, i, &f));
    }

    #[test]
    fn eigen_projectors(f in poly(2, 4), j in 0i64..7) {
        let c = ctx();
        let r = c.rho(j, &f);
        prop_assert_eq!(c.act(c.h7b(), &r), r.scale_unit(UnitRoot::zeta(false, j)));
        let mut sum = PolyVec::zero(2);
        for k in 0..7 {
            sum.add_assign(&c.rho(k, &f));
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn dual_pairing(g in element(), f in poly(3, 3), p in point()) {
        prop_assert!(pairing_invariant(g, &f, &p));
    }

    #[test]
    fn reduction_is_a_ring_map(x in dense_ext(), y in dense_ext()) {
        for emb in primes() {
            prop_assert_eq!(modp_homomorphism(&x, &y, emb), Ok(()));
        }
    }
}
