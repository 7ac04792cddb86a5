//! Monomials of degree 1..=3 in y₁…y₁₇ and the graded reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const NVARS: usize = 17;
pub const MAX_DEGREE: usize = 3;

/// A monomial stored as its sorted list of 0-based variable indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u8,
    vars: [u8; MAX_DEGREE],
}

impl Mono {
    /// From 0-based variable indices in any order.
    pub fn new(vars: &[usize]) -> Result<Self> {
        if vars.is_empty() || vars.len() > MAX_DEGREE {
            return Err(Error::parse(format!("monomial degree {} out of range", vars.len())));
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= NVARS) {
            return Err(Error::parse(format!("variable index {v} out of range")));
        }
        let mut buf = [0u8; MAX_DEGREE];
        for (slot, &v) in buf.iter_mut().zip(vars) {
            *slot = v as u8;
        }
        buf[..vars.len()].sort_unstable();
        Ok(Mono {
            deg: vars.len() as u8,
            vars: buf,
        })
    }

    /// yᵢ with i 0-based.
    pub fn var(i: usize) -> Self {
        Mono::new(&[i]).expect("variable index in range")
    }

    /// yᵢyⱼ with 1-based indices, as written in formulas.
    pub fn y2(i: usize, j: usize) -> Self {
        Mono::new(&[i - 1, j - 1]).expect("variable index in range")
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn vars(&self) -> &[u8] {
        &self.vars[..self.deg as usize]
    }

    pub fn exponents(&self) -> [u8; NVARS] {
        let mut e = [0u8; NVARS];
        for &v in self.vars() {
            e[v as usize] += 1;
        }
        e
    }

    pub fn mul_var(&self, i: usize) -> Result<Self> {
        let mut v: Vec<usize> = self.vars().iter().map(|&x| x as usize).collect();
        v.push(i);
        Mono::new(&v)
    }

    pub fn mul(&self, o: &Mono) -> Result<Self> {
        let v: Vec<usize> = self.vars().iter().chain(o.vars()).map(|&x| x as usize).collect();
        Mono::new(&v)
    }

    /// Key of the form "y1^2" or "y1^1y15^1" (nonzero exponents only, ascending index).
    pub fn key(&self) -> String {
        let e = self.exponents();
        let mut s = String::new();
        for (i, &a) in e.iter().enumerate() {
            if a > 0 {
                s.push_str(&format!("y{}^{}", i + 1, a));
            }
        }
        s
    }

    pub fn parse_key(s: &str) -> Result<Self> {
        let mut vars = Vec::new();
        let mut rest = s;
        let mut last = 0usize;
        if rest.is_empty() {
            return Err(Error::parse("empty monomial key"));
        }
        while !rest.is_empty() {
            rest = rest
                .strip_prefix('y')
                .ok_or_else(|| Error::parse(format!("bad monomial key {s:?}")))?;
            let (idx, tail) = split_digits(rest)?;
            rest = tail
                .strip_prefix('^')
                .ok_or_else(|| Error::parse(format!("missing exponent in {s:?}")))?;
            let (exp, tail) = split_digits(rest)?;
            rest = tail;
            if idx == 0 || idx > NVARS || idx <= last || exp == 0 || exp > MAX_DEGREE {
                return Err(Error::parse(format!("bad factor in monomial key {s:?}")));
            }
            last = idx;
            for _ in 0..exp {
                vars.push(idx - 1);
            }
        }
        Mono::new(&vars)
    }
}

fn split_digits(s: &str) -> Result<(usize, &str)> {
    let n = s.bytes().take_while(|b| b.is_ascii_digit()).count();
    if n == 0 || n > 3 {
        return Err(Error::parse(format!("expected a small integer in {s:?}")));
    }
    let v = s[..n].parse().map_err(|_| Error::parse("bad integer"))?;
    Ok((v, &s[n..]))
}

impl Ord for Mono {
    /// Degree first; within a degree, grevlex with y₁ > y₂ > ⋯ > y₁₇. For sorted variable
    /// lists this is the reverse of the lexicographic order on the lists read backwards.
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            let a = self.vars().iter().rev();
            let b = other.vars().iter().rev();
            b.cmp(a)
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// All monomials of one degree, largest first, with a dense index lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    deg: usize,
    monos: Vec<Mono>,
    slot: Vec<u32>,
}

/// Shared bases for degrees 1, 2, 3.
pub fn basis(deg: usize) -> &'static MonomialBasis {
    static BASES: OnceLock<[MonomialBasis; 3]> = OnceLock::new();
    &BASES.get_or_init(|| std::array::from_fn(|d| MonomialBasis::new(d + 1)))[deg - 1]
}

fn code(m: &Mono) -> usize {
    m.vars().iter().fold(0, |acc, &v| acc * NVARS + v as usize)
}

impl MonomialBasis {
    pub fn new(deg: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&deg));
        let mut monos = Vec::new();
        let mut cur = vec![0usize; deg];
        loop {
            monos.push(Mono::new(&cur).unwrap());
            let mut k = deg;
            while k > 0 && cur[k - 1] == NVARS - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            cur[k - 1] += 1;
            let v = cur[k - 1];
            for c in cur[k..].iter_mut() {
                *c = v;
            }
        }
        monos.sort_unstable_by(|a, b| b.cmp(a));
        let mut slot = vec![u32::MAX; NVARS.pow(deg as u32)];
        for (i, m) in monos.iter().enumerate() {
            slot[code(m)] = i as u32;
        }
        MonomialBasis { deg, monos, slot }
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monos(&self) -> &[Mono] {
        &self.monos
    }

    pub fn mono(&self, i: usize) -> Mono {
        self.monos[i]
    }

    pub fn index(&self, m: &Mono) -> usize {
        debug_assert_eq!(m.degree(), self.deg);
        self.slot[code(m)] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(MonomialBasis::new(1).len(), 17);
        assert_eq!(MonomialBasis::new(2).len(), 153);
        assert_eq!(MonomialBasis::new(3).len(), 969);
    }

    #[test]
    fn grevlex_order() {
        let b = MonomialBasis::new(2);
        assert_eq!(b.mono(0), Mono::y2(1, 1));
        assert_eq!(b.mono(1), Mono::y2(1, 2));
        assert_eq!(b.mono(2), Mono::y2(2, 2));
        assert_eq!(b.mono(152), Mono::y2(17, 17));
        assert!(Mono::y2(2, 2) > Mono::y2(1, 3));
        let grevlex = |a: &Mono, b: &Mono| {
            let (ea, eb) = (a.exponents(), b.exponents());
            (0..NVARS)
                .rev()
                .find(|&i| ea[i] != eb[i])
                .map_or(Ordering::Equal, |i| eb[i].cmp(&ea[i]))
        };
        let b3 = MonomialBasis::new(3);
        for w in b3.monos().windows(2) {
            assert_eq!(grevlex(&w[0], &w[1]), Ordering::Greater);
        }
        for (i, m) in b.monos().iter().enumerate() {
            assert_eq!(b.index(m), i);
        }
    }

    #[test]
    fn keys_round_trip() {
        for d in 1..=3 {
            for m in MonomialBasis::new(d).monos() {
                assert_eq!(Mono::parse_key(&m.key()).unwrap(), *m);
            }
        }
        assert_eq!(Mono::y2(1, 15).key(), "y1^1y15^1");
        assert!(Mono::parse_key("y15^1y1^1").is_err());
        assert!(Mono::parse_key("y18^1").is_err());
        assert!(Mono::parse_key("y1^4").is_err());
        assert!(Mono::parse_key("").is_err());
    }
}
