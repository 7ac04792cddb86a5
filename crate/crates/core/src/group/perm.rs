//! Permutations of {1, …, 14} in cycle notation.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub const DEGREE: usize = 14;

/// A bijection of {1..14}, stored 0-based. Products compose left to right:
/// `(a * b)(x) = b(a(x))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; DEGREE]);

impl Perm {
    pub fn identity() -> Self {
        Perm(std::array::from_fn(|i| i as u8))
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.len() != DEGREE {
            return Err(Error::parse(format!("expected {DEGREE} images")));
        }
        let mut seen = [false; DEGREE];
        let mut out = [0u8; DEGREE];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > DEGREE || seen[x - 1] {
                return Err(Error::parse(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
            out[i] = (x - 1) as u8;
        }
        Ok(Perm(out))
    }

    /// Parse cycle notation such as `( 1,13, 2)( 3,10)`. `()` and the empty string give the identity.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("identity") {
            return Ok(Self::identity());
        }
        let mut img: [u8; DEGREE] = std::array::from_fn(|i| i as u8);
        let mut moved = [false; DEGREE];
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed cycle in {s:?}")))?;
            let inner = body[..close].trim();
            rest = body[close + 1..].trim_start();
            if inner.is_empty() {
                continue;
            }
            let pts = inner
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    if t.is_empty() || t.len() > 3 || !t.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::parse(format!("bad point {t:?}")));
                    }
                    let v: usize = t.parse().map_err(|_| Error::parse(format!("bad point {t:?}")))?;
                    if v == 0 || v > DEGREE {
                        return Err(Error::parse(format!("point {v} out of range")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<usize>>>()?;
            for &x in &pts {
                if moved[x] {
                    return Err(Error::parse(format!("point {} repeated", x + 1)));
                }
                moved[x] = true;
            }
            for (i, &x) in pts.iter().enumerate() {
                img[x] = pts[(i + 1) % pts.len()] as u8;
            }
        }
        Ok(Perm(img))
    }

    /// Image of a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; DEGREE];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc * *self)
    }

    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut x = *self;
        while !x.is_identity() {
            x = x * *self;
            k += 1;
        }
        k
    }

    /// Lengths of the nontrivial cycles, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; DEGREE];
        let mut out = Vec::new();
        for start in 0..DEGREE {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.0[x] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

impl Mul for Perm {
    type Output = Perm;
    fn mul(self, rhs: Perm) -> Perm {
        Perm(std::array::from_fn(|i| rhs.0[self.0[i] as usize]))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("( 1,13, 2,11, 4, 5, 8)( 3,10, 6,14, 7, 9,12)").unwrap();
        assert_eq!(p.to_string(), "(1,13,2,11,4,5,8)(3,10,6,14,7,9,12)");
        assert_eq!(Perm::parse(&p.to_string()).unwrap(), p);
        assert_eq!(p.order(), 7);
        assert_eq!(p.cycle_type(), vec![7, 7]);
        assert!(Perm::parse("()").unwrap().is_identity());
        assert!(Perm::parse("").unwrap().is_identity());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse("(1,2)").unwrap();
        let b = Perm::parse("(2,3)").unwrap();
        assert_eq!((a * b).apply(1), 3);
        assert_eq!(a * b, Perm::parse("(1,3,2)").unwrap());
    }

    #[test]
    fn rejects_malformed() {
        for s in ["(1,2", "(1,1)", "(0,1)", "(1,15)", "(1,,2)", "1,2", "(1)(1,2)", "(a,b)"] {
            assert!(Perm::parse(s).is_err(), "{s}");
        }
    }
}
