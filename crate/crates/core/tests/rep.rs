use hurwitz_core::chars::CharTable;
use hurwitz_core::field::CycElt;
use hurwitz_core::group::classes::class_index;
use hurwitz_core::group::{Hurwitz, Letter};
use hurwitz_core::linalg::Matrix;
use hurwitz_core::rep::checks::{
    conjugation_check, outer_automorphism_check, verify_char_polys,
};
use hurwitz_core::rep::{FullRep, Generators, RepImage};
use hurwitz_core::Error;

fn setup() -> (Hurwitz, FullRep) {
    let h = Hurwitz::build().unwrap();
    let rep = FullRep::builtin(&h.table).unwrap();
    (h, rep)
}

#[test]
fn generator_blocks() {
    let g = Generators::builtin();
    for (i, e) in [3, 5, 6].iter().enumerate() {
        assert_eq!(g.p.w2.get(i, i), &CycElt::zeta(*e));
    }
    assert!(g.p.pow(7).is_identity());
    assert!(g.q.pow(8).is_identity());
    assert!(!g.q.pow(4).is_identity());
    assert!(g.failed_relators().is_empty());
}

#[test]
fn swapped_generators_fail_relators() {
    let g = Generators::builtin();
    let swapped = Generators {
        p: g.q.clone(),
        q: g.p.clone(),
    };
    let h = Hurwitz::build().unwrap();
    assert!(matches!(
        FullRep::extend(swapped, &h.table),
        Err(Error::RelatorFailure(_))
    ));
}

#[test]
fn character_is_chi9_plus_chi2() {
    let (h, rep) = setup();
    let tbl = CharTable::builtin();
    rep.check_character(&tbl, &h.classes).unwrap();
    let three_a = class_index("3A").unwrap();
    assert_eq!(rep.character(&h.classes)[three_a], CycElt::from_int(-1));
    assert!(rep.image(0).is_identity());
}

/// Every element's image is the product of its word's letter images, computed independently.
#[test]
fn images_match_words() {
    let (h, rep) = setup();
    let gens = Generators::builtin();
    for g in (0..h.table.order()).step_by(37) {
        assert_eq!(&gens.eval_word(h.table.word(g)), rep.image(g));
    }
}

#[test]
fn block_structure_and_dual() {
    let (h, rep) = setup();
    let g = h.table.letter_index(Letter::Q);
    let m = rep.image(g).to_dense();
    for i in 0..14 {
        for j in 14..17 {
            assert!(m.get(i, j).is_zero() && m.get(j, i).is_zero());
        }
    }
    let d = rep.dual(&h.table, g).to_dense();
    // Pairing invariance: dᵀ·m = I.
    assert!(d.transpose().mul(&m).is_identity());
    let dd = rep.image(g).dual().dual();
    assert_eq!(&dd, rep.image(g));
    assert_eq!(RepImage::identity().dual(), RepImage::identity());
}

#[test]
fn dual_of_p_on_w2() {
    let (h, rep) = setup();
    let p = h.table.letter_index(Letter::P);
    let d = rep.dual(&h.table, p);
    let expect = Matrix::from_fn(3, 3, |i, j| {
        if i == j {
            CycElt::zeta([4, 2, 1][i])
        } else {
            CycElt::zero()
        }
    });
    assert_eq!(d.w2, expect);
}

#[test]
fn dual_character_is_conjugate() {
    let (h, rep) = setup();
    for c in h.classes.classes() {
        let g = c.representative;
        assert_eq!(rep.dual(&h.table, g).trace(), rep.image(g).trace().conj());
    }
}

#[test]
fn h7b_blocks() {
    let (h, rep) = setup();
    let tbl = CharTable::builtin();
    let report = verify_char_polys(&rep, &tbl, &h.classes, h.h7b).unwrap();
    assert!(report.passed(), "{report:?}");
    // W₂ block of h_7B is diagonal with entries ζ⁴, ζ², ζ.
    let w2 = &rep.image(h.h7b).w2;
    let diag: Vec<CycElt> = (0..3).map(|i| w2.get(i, i).clone()).collect();
    assert_eq!(diag, vec![CycElt::zeta(4), CycElt::zeta(2), CycElt::zeta(1)]);
    // Each 7th root of unity appears twice on the W₉ block.
    let m = rep.image(h.h7b).w9.to_dense();
    for j in 0..7 {
        let shifted = m.sub(&Matrix::identity(14).scale(&CycElt::zeta(j)));
        assert_eq!(14 - shifted.rank(), 2, "eigenvalue zeta^{j}");
    }
}

#[test]
fn outer_automorphism() {
    let (h, rep) = setup();
    let report = outer_automorphism_check(&rep, &h.table);
    assert!(report.passed(), "{report:?}");
    // Conjugating by an element of the image is inner.
    let inner = conjugation_check(&rep, &h.table, rep.image(h.h7b));
    assert!(inner.p_image.is_some() && inner.q_image.is_some());
    assert!(!inner.non_inner);
}

#[test]
fn scalar_trait_on_images() {
    let (h, rep) = setup();
    let q = h.table.letter_index(Letter::Q);
    let m = rep.image(q).to_dense();
    assert!(m.determinant().inv().is_some());
}
