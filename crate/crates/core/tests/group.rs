use hurwitz_core::group::classes::{
    class_2a_subgroup, class_index, is_normal, normalizer_order, CLASS_REPS, NORMALIZER_ORDERS,
};
use hurwitz_core::group::presentation::{presentation_report, verify_presentation};
use hurwitz_core::group::table::DEFAULT_BOUND;
use hurwitz_core::group::{gen_p, gen_q, GroupTable, Hurwitz, Perm};
use hurwitz_core::Error;

#[test]
fn order_and_classes() {
    let h = Hurwitz::build().unwrap();
    assert_eq!(h.table.order(), 1344);
    assert_eq!(h.classes.classes().len(), 11);
    assert_eq!(h.classes.sizes().iter().sum::<usize>(), 1344);
    assert_eq!(
        h.classes.sizes(),
        [1, 7, 42, 84, 42, 224, 224, 168, 168, 192, 192]
    );
    let two_a = Perm::parse("(4,7)(5,9)(8,12)(10,13)").unwrap();
    let idx = h.table.index_of(&two_a).unwrap();
    assert_eq!(h.classes.label(h.classes.class_of(idx)), "2A");
}

#[test]
fn normalizers_match_table() {
    let h = Hurwitz::build().unwrap();
    for (rep, &expected) in CLASS_REPS.iter().zip(NORMALIZER_ORDERS.iter()) {
        let g = Perm::parse(rep).unwrap();
        assert_eq!(normalizer_order(&h.table, &g).unwrap(), expected, "{rep}");
    }
    let outside = Perm::parse("(1,2)").unwrap();
    assert_eq!(normalizer_order(&h.table, &outside), Err(Error::NotInGroup));
}

#[test]
fn words_evaluate_back() {
    let h = Hurwitz::build().unwrap();
    for g in 0..h.table.order() {
        assert_eq!(h.table.eval_word(h.table.word(g)), g);
    }
}

#[test]
fn presentation_holds() {
    let g = GroupTable::generate(gen_p(), gen_q(), DEFAULT_BOUND).unwrap();
    let rep = verify_presentation(&g).unwrap();
    assert_eq!((rep.order_p3q, rep.order_p2q, rep.order_triple_product), (2, 3, 7));

    let swapped = GroupTable::generate(gen_q(), gen_p(), DEFAULT_BOUND).unwrap();
    assert_eq!(
        verify_presentation(&swapped).err(),
        Some(Error::RelatorFailure("P^7".into()))
    );
    assert!(!presentation_report(&swapped).passed());
}

#[test]
fn power_map_of_seven_classes() {
    let h = Hurwitz::build().unwrap();
    let a = class_index("7A").unwrap();
    let b = class_index("7B").unwrap();
    for k in [1, 2, 4] {
        assert_eq!(h.classes.power_class(a, k), a);
        assert_eq!(h.classes.power_class(b, k), b);
    }
    for k in [3, 5, 6] {
        assert_eq!(h.classes.power_class(a, k), b);
    }
    // Squares of the order-8 classes, read off from cycle types of the representatives:
    // 8A² has type 4·4·2·2 and 8B² has type 4·4.
    let eight_a = class_index("8A").unwrap();
    let eight_b = class_index("8B").unwrap();
    assert_eq!(h.classes.label(h.classes.power_class(eight_a, 2)), "4B");
    assert_eq!(h.classes.label(h.classes.power_class(eight_b, 2)), "4A");
    let sq = h.table.element(h.classes.class(eight_a).representative).pow(2);
    assert_eq!(sq.cycle_type(), vec![4, 4, 2, 2]);
}

#[test]
fn h7b_is_distinct_from_p() {
    let h = Hurwitz::build().unwrap();
    let p = h.table.index_of(&gen_p()).unwrap();
    assert_eq!(h.classes.label(h.classes.class_of(h.h7b)), "7B");
    assert_ne!(h.classes.class_of(p), h.classes.class_of(h.h7b));
    assert_eq!(h.table.pow(h.h7b, 7), 0);
}

#[test]
fn normal_subgroup_of_order_eight() {
    let h = Hurwitz::build().unwrap();
    let n = class_2a_subgroup(&h.table, &h.classes);
    assert_eq!(n.len(), 8);
    assert!(is_normal(&h.table, &n));
    assert_eq!(h.table.order() / n.len(), 168);
    assert!(n.iter().all(|&x| h.table.element_order(x) <= 2));
}
