//! Replays the checked-in fuzz corpus through the same parser checks the fuzz targets run.

#[path = "../../../fuzz/src/checks.rs"]
mod checks;

use std::fs;
use std::path::PathBuf;

use hurwitz_core::group::Perm;
use hurwitz_core::ideal::{CacheFile, QuadricBasis};

type Check = fn(&[u8]);

fn corpus(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn every_seed_replays() {
    let targets: [(&str, Check); 6] = [
        ("ext_elt", checks::ext_elt),
        ("cache_file", checks::cache_file),
        ("quadric_file", checks::quadric_file),
        ("perm", checks::perm),
        ("word", checks::word),
        ("descriptors", checks::descriptors),
    ];
    for (name, check) in targets {
        for (_, data) in corpus(name) {
            check(&data);
        }
    }
}

#[test]
fn valid_seeds_are_accepted() {
    let text = |t: &str, f: &str| {
        corpus(t)
            .into_iter()
            .find(|(n, _)| n == f)
            .map(|(_, d)| String::from_utf8(d).unwrap())
            .unwrap()
    };
    assert_eq!(QuadricBasis::parse(&text("quadric_file", "two_quadrics")).unwrap().len(), 2);
    assert!(QuadricBasis::parse(&text("quadric_file", "duplicate_label")).is_err());
    assert!(QuadricBasis::parse(&text("quadric_file", "bad_denominator")).is_err());
    assert!(CacheFile::parse(&text("cache_file", "w10_j_major")).is_ok());
    assert!(CacheFile::parse(&text("cache_file", "truncated")).is_err());
    for (name, data) in corpus("perm").into_iter().filter(|(n, _)| n.starts_with("class_")) {
        assert!(Perm::parse(std::str::from_utf8(&data).unwrap()).is_ok(), "{name}");
    }
}
