//! Labelled quadrics and their text file format.
//!
//! ```text
//! hurwitz17-quadrics 1
//! count 105
//! d_1_7_1 3
//! y1^1y2^1 <24 tokens>
//! …
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Mono, PolyVec};

const MAGIC: &str = "hurwitz17-quadrics";
pub const FORMAT_VERSION: u32 = 1;
const MAX_TERMS: usize = 153;
const MAX_COUNT: usize = 153;

/// d_{part, j, k}: `part` is the isotypic index, `j` the h_7B-eigenvalue exponent
/// (7 for eigenvalue 1), `k` a running index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricLabel {
    pub part: usize,
    pub j: usize,
    pub k: usize,
}

impl QuadricLabel {
    pub fn new(part: usize, j: usize, k: usize) -> Self {
        QuadricLabel { part, j, k }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad quadric label {s:?}"));
        let rest = s.strip_prefix("d_").ok_or_else(bad)?;
        let parts: Vec<usize> = rest
            .split('_')
            .map(|p| {
                if p.is_empty() || p.len() > 3 || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                p.parse::<usize>().map_err(|_| bad())
            })
            .collect::<Result<_>>()?;
        let [part, j, k] = parts[..] else {
            return Err(bad());
        };
        if !(1..=11).contains(&part) || !(1..=7).contains(&j) || k == 0 {
            return Err(bad());
        }
        Ok(QuadricLabel { part, j, k })
    }
}

impl fmt::Display for QuadricLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d_{}_{}_{}", self.part, self.j, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    pub label: QuadricLabel,
    pub poly: PolyVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuadricBasis {
    pub quadrics: Vec<Quadric>,
}

impl QuadricBasis {
    pub fn len(&self) -> usize {
        self.quadrics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    pub fn polys(&self) -> Vec<PolyVec> {
        self.quadrics.iter().map(|q| q.poly.clone()).collect()
    }

    /// The quadrics of one isotypic part.
    pub fn part(&self, i: usize) -> impl Iterator<Item = &Quadric> {
        self.quadrics.iter().filter(move |q| q.label.part == i)
    }

    pub fn get(&self, label: QuadricLabel) -> Option<&PolyVec> {
        self.quadrics.iter().find(|q| q.label == label).map(|q| &q.poly)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{MAGIC} {FORMAT_VERSION}\ncount {}\n", self.len());
        for q in &self.quadrics {
            out.push_str(&format!("{} {}\n", q.label, q.poly.len()));
            for line in q.poly.to_lines() {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| Error::parse(format!("quadric file truncated: missing {what}")))
        };
        let version = next("header")?
            .strip_prefix(MAGIC)
            .and_then(|v| v.strip_prefix(' '))
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| Error::parse("bad quadric file header"))?;
        if version != FORMAT_VERSION {
            return Err(Error::parse(format!("unsupported quadric file version {version}")));
        }
        let count = next("count")?
            .strip_prefix("count ")
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&c| c <= MAX_COUNT)
            .ok_or_else(|| Error::parse("bad count line"))?;
        let mut seen = BTreeSet::new();
        let mut quadrics = Vec::with_capacity(count);
        for _ in 0..count {
            let head = next("label")?;
            let (label, n) = head
                .split_once(' ')
                .ok_or_else(|| Error::parse(format!("bad label line {head:?}")))?;
            let label = QuadricLabel::parse(label)?;
            let n = n
                .parse::<usize>()
                .ok()
                .filter(|&n| n <= MAX_TERMS)
                .ok_or_else(|| Error::parse(format!("bad term count for {label}")))?;
            if !seen.insert(label) {
                return Err(Error::parse(format!("duplicate label {label}")));
            }
            let mut monos = BTreeSet::new();
            let mut terms = Vec::with_capacity(n);
            for _ in 0..n {
                let (m, c): (Mono, _) = PolyVec::parse_term(next("term")?)?;
                if m.degree() != 2 {
                    return Err(Error::parse(format!("{label}: term of degree {}", m.degree())));
                }
                if c.is_zero() || !monos.insert(m) {
                    return Err(Error::parse(format!("{label}: zero or repeated term")));
                }
                terms.push((m, c));
            }
            quadrics.push(Quadric {
                label,
                poly: PolyVec::from_terms(2, terms)?,
            });
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::parse("trailing data after the last quadric"));
        }
        Ok(QuadricBasis { quadrics })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CycElt, ExtElt};

    fn sample() -> QuadricBasis {
        let f = PolyVec::y(&[1, 2]).add(&PolyVec::y(&[17, 17]).scale(&ExtElt::new(CycElt::zeta(2), CycElt::one())));
        QuadricBasis {
            quadrics: vec![
                Quadric {
                    label: QuadricLabel::new(1, 7, 1),
                    poly: f.clone(),
                },
                Quadric {
                    label: QuadricLabel::new(10, 2, 4),
                    poly: f.neg(),
                },
            ],
        }
    }

    #[test]
    fn labels() {
        let l = QuadricLabel::parse("d_10_2_4").unwrap();
        assert_eq!(l, QuadricLabel::new(10, 2, 4));
        assert_eq!(l.to_string(), "d_10_2_4");
        for bad in ["d_12_1_1", "d_1_0_1", "d_1_1", "e_1_1_1", "d_1_1_0", "d_1_1_+1"] {
            assert!(QuadricLabel::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trip() {
        let b = sample();
        assert_eq!(QuadricBasis::parse(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn rejects_malformed() {
        let text = sample().to_text();
        assert!(QuadricBasis::parse(&text.replace("count 2", "count 3")).is_err());
        assert!(QuadricBasis::parse(&text.replace("d_10_2_4", "d_1_7_1")).is_err());
        assert!(QuadricBasis::parse(&text.replace("y1^1y2^1", "y1^1y2^1y3^1")).is_err());
        assert!(QuadricBasis::parse(&format!("{text}x\n")).is_err());
    }
}
