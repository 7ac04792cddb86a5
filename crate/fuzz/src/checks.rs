//! Parser properties shared by the fuzz targets and the corpus replay test.
//!
//! Each check takes raw bytes, must never panic, and asserts that anything accepted
//! survives a write/parse round trip unchanged.

use hurwitz_core::field::serial::{ext_to_string, parse_ext};
use hurwitz_core::group::presentation::parse_word;
use hurwitz_core::group::Perm;
use hurwitz_core::ideal::{CacheFile, Convention, QuadricBasis, QuadricLabel, SeedMatrix, Target};
use hurwitz_core::poly::Mono;

fn text(data: &[u8]) -> Option<&str> {
    std::str::from_utf8(data).ok()
}

pub fn ext_elt(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(x) = parse_ext(s) {
        assert_eq!(parse_ext(&ext_to_string(&x)).expect("re-parse"), x);
    }
}

pub fn cache_file(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(f) = CacheFile::parse(s) {
        assert_eq!(CacheFile::parse(&f.to_text()).expect("re-parse"), f);
    }
}

pub fn quadric_file(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(b) = QuadricBasis::parse(s) {
        assert_eq!(QuadricBasis::parse(&b.to_text()).expect("re-parse"), b);
    }
}

pub fn perm(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(p) = Perm::parse(s) {
        assert_eq!(Perm::parse(&p.to_string()).expect("re-parse"), p);
        assert!(p.pow(p.order()).is_identity());
    }
}

pub fn word(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(w) = parse_word(s) {
        let factors = s.split(|c: char| c.is_whitespace() || c == '*').count();
        assert!(w.len() <= 64 * factors);
    }
}

/// Labels and descriptors: targets, conventions, seeds, quadric labels, monomial keys.
pub fn descriptors(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(t) = Target::parse(s) {
        assert_eq!(t.label(), s);
    }
    if let Ok(c) = Convention::parse(s) {
        assert_eq!(c.label(), s);
    }
    if let Ok(m) = SeedMatrix::parse(s) {
        assert_eq!(SeedMatrix::parse(&m.descriptor()).expect("re-parse"), m);
    }
    if let Ok(l) = QuadricLabel::parse(s) {
        assert_eq!(QuadricLabel::parse(&l.to_string()).expect("re-parse"), l);
    }
    if let Ok(m) = Mono::parse_key(s) {
        assert_eq!(Mono::parse_key(&m.to_string()).expect("re-parse"), m);
    }
}
