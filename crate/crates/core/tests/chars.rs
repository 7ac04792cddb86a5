use hurwitz_core::chars::lefschetz::{h0_kd_decompose, h0_kd_trace, GENUS};
use hurwitz_core::chars::reproduce::{reproduce_all, reproduce_h0_with};
use hurwitz_core::chars::table::{sym_power_characters, verify_character_table};
use hurwitz_core::chars::{
    decompose, inner_product, sym_power_character, CharTable, ClassFn, Curve, FixedPointData,
    TableId,
};
use hurwitz_core::field::{CycElt, UnitRoot};
use hurwitz_core::group::classes::class_index;
use hurwitz_core::group::Hurwitz;
use hurwitz_core::Error;

fn setup() -> (Hurwitz, CharTable) {
    (Hurwitz::build().unwrap(), CharTable::builtin())
}

#[test]
fn builtin_values() {
    let tbl = CharTable::builtin();
    let c7a = class_index("7A").unwrap();
    let c2a = class_index("2A").unwrap();
    assert_eq!(tbl.chi(2)[c7a], CycElt::beta(3));
    assert_eq!(tbl.chi(9)[c2a], CycElt::from_int(-2));
    assert!(tbl.chi(1).0.iter().all(CycElt::is_one));
}

#[test]
fn table_verifies() {
    let (h, tbl) = setup();
    let rep = verify_character_table(&tbl, &h.classes);
    assert!(rep.passed(), "{:?}", rep.failures);
    let v = inner_product(tbl.chi(10), tbl.chi(11), &h.classes);
    assert!(v.is_zero());
    assert!(inner_product(tbl.chi(9), tbl.chi(9), &h.classes).is_one());
    let sq: u64 = (1..=11).map(|i| tbl.degree(i).pow(2)).sum();
    assert_eq!(sq, 1344);
}

#[test]
fn corrupted_table_is_rejected() {
    let (h, tbl) = setup();
    let mut rows = tbl.rows().to_vec();
    rows[1].0.swap(9, 10);
    let bad = CharTable::from_rows(rows);
    assert!(!verify_character_table(&bad, &h.classes).passed());
}

#[test]
fn inner_products() {
    let (h, tbl) = setup();
    let v = tbl.chi(9) + tbl.chi(2);
    assert!(inner_product(&v, tbl.chi(9), &h.classes).is_one());
    assert!(inner_product(tbl.chi(2), tbl.chi(3), &h.classes).is_zero());
    let f = ClassFn::from_ints([3, 1, 0, -1, 2, 0, 0, 5, 1, 1, 1]);
    let n = inner_product(&f, &f, &h.classes).as_rational().unwrap();
    assert!(n.numer() > &0.into());
}

#[test]
fn symmetric_powers() {
    let (h, tbl) = setup();
    let cls = &h.classes;
    let v = tbl.chi(9) + tbl.chi(2);
    assert!(sym_power_character(&v, 0, cls).0.iter().all(CycElt::is_one));
    assert_eq!(
        decompose(&v, &tbl, cls).unwrap(),
        [0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]
    );
    let s = sym_power_characters(&v, 3, cls);
    assert_eq!(decompose(&s[2], &tbl, cls).unwrap(), [1, 0, 0, 3, 0, 0, 0, 1, 0, 3, 3]);
    assert_eq!(decompose(&s[3], &tbl, cls).unwrap(), [0, 4, 5, 1, 8, 8, 8, 5, 13, 13, 13]);
    let w9 = sym_power_character(tbl.chi(9), 3, cls);
    assert_eq!(decompose(&w9, &tbl, cls).unwrap(), [0, 2, 2, 0, 4, 5, 5, 2, 7, 8, 8]);
    let w2 = sym_power_character(tbl.chi(2), 10, cls);
    assert_eq!(decompose(&w2, &tbl, cls).unwrap(), [1, 0, 1, 4, 2, 0, 0, 3, 0, 0, 0]);
}

/// Oracle: dimensions of S^d of an n-dimensional space are C(n+d−1, d).
#[test]
fn symmetric_power_dimensions() {
    let (h, tbl) = setup();
    let v = tbl.chi(9) + tbl.chi(2);
    let s = sym_power_characters(&v, 10, &h.classes);
    let mut binom = 1i64;
    for d in 0..=10i64 {
        if d > 0 {
            binom = binom * (17 + d - 1) / d;
        }
        assert_eq!(s[d as usize][0], CycElt::from_int(binom));
    }
}

#[test]
fn non_integral_input_is_rejected() {
    let (h, tbl) = setup();
    let f = ClassFn::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert!(matches!(
        decompose(&f, &tbl, &h.classes),
        Err(Error::NonIntegralMultiplicity { .. })
    ));
}

#[test]
fn lefschetz_traces() {
    let fp = FixedPointData::table(Curve::X1);
    let t1 = h0_kd_trace(&fp, 1, GENUS).unwrap();
    // 1 + 8·(−1)/2 on 2B.
    assert_eq!(t1[class_index("2B").unwrap()], CycElt::from_int(-3));
    // 1 + 2ω/(1−ω) + 2ω²/(1−ω²) on 3A.
    let w = CycElt::omega(1);
    let w2 = CycElt::omega(2);
    let one = CycElt::one();
    let oracle = &one
        + &(w.scale_int(2).checked_div(&(&one - &w)).unwrap()
            + w2.scale_int(2).checked_div(&(&one - &w2)).unwrap());
    assert_eq!(t1[class_index("3A").unwrap()], oracle);
    assert_eq!(oracle, CycElt::from_int(-1));
    let t2 = h0_kd_trace(&fp, 2, GENUS).unwrap();
    assert!(t2[class_index("8A").unwrap()].is_zero());
    assert_eq!(t2[0], CycElt::from_int(48));
}

#[test]
fn lefschetz_rejects_eigenvalue_one() {
    let mut fp = FixedPointData::table(Curve::X1);
    fp.eigenvalues[class_index("2A").unwrap()] = vec![UnitRoot::ONE];
    assert!(matches!(
        h0_kd_trace(&fp, 2, GENUS),
        Err(Error::MalformedFixedPoint(_))
    ));
}

#[test]
fn h0_small_degrees() {
    let (h, tbl) = setup();
    let cls = &h.classes;
    assert_eq!(
        h0_kd_decompose(Curve::X1, 1, &tbl, cls).unwrap(),
        [0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]
    );
    assert_eq!(
        h0_kd_decompose(Curve::X1, 2, &tbl, cls).unwrap(),
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1]
    );
    assert_eq!(
        h0_kd_decompose(Curve::X2, 1, &tbl, cls).unwrap(),
        [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0]
    );
    assert_eq!(
        h0_kd_decompose(Curve::X1, 7, &tbl, cls).unwrap(),
        [0, 1, 0, 0, 1, 1, 1, 2, 3, 3, 3]
    );
}

#[test]
fn all_published_tables_reproduce() {
    let (h, tbl) = setup();
    for id in TableId::ALL {
        let cmp = reproduce_all(id, &tbl, &h.classes).unwrap();
        assert!(cmp.passed, "{}: {:?}", cmp.caption, cmp.mismatches);
        for (k, col) in cmp.computed.iter().enumerate() {
            let d = cmp.degrees[k];
            let dim: u64 = col
                .iter()
                .enumerate()
                .map(|(i, a)| a * tbl.degree(i + 1))
                .sum();
            if id == TableId::H0X1 || id == TableId::H0X2 {
                let expect = if d == 1 { 17 } else { (2 * d as u64 - 1) * 16 };
                assert_eq!(dim, expect);
            }
        }
    }
}

#[test]
fn swapped_seven_classes_break_h0() {
    let (h, tbl) = setup();
    let fp = FixedPointData::table(Curve::X1).swapped_7a_7b();
    let degrees: Vec<u32> = (1..=20).collect();
    let cmp = reproduce_h0_with(TableId::H0X1, &fp, &degrees, &tbl, &h.classes).unwrap();
    assert!(!cmp.passed);
}
