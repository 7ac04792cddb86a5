//! Homogeneous polynomials with coefficients in Q(ξ)(α), stored sparsely.

use std::collections::BTreeMap;
use std::fmt;

use super::mono::{Mono, MonomialBasis};
use crate::error::{Error, Result};
use crate::field::serial::{ext_to_string, parse_ext};
use crate::field::{CycElt, ExtElt, PrimeEmbedding, UnitRoot};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyVec {
    deg: usize,
    terms: BTreeMap<Mono, ExtElt>,
}

impl PolyVec {
    pub fn zero(deg: usize) -> Self {
        PolyVec {
            deg,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Mono, c: ExtElt) -> Self {
        let mut p = PolyVec::zero(m.degree());
        p.add_term(m, &c);
        p
    }

    /// Product of the 1-based variables listed, with coefficient 1.
    pub fn y(vars: &[usize]) -> Self {
        let idx: Vec<usize> = vars.iter().map(|v| v - 1).collect();
        PolyVec::monomial(Mono::new(&idx).expect("valid monomial"), ExtElt::one())
    }

    /// Collects terms, summing repeats and dropping zeros. All monomials must share `deg`.
    pub fn from_terms(deg: usize, terms: impl IntoIterator<Item = (Mono, ExtElt)>) -> Result<Self> {
        let mut p = PolyVec::zero(deg);
        for (m, c) in terms {
            if m.degree() != deg {
                return Err(Error::parse(format!("monomial {m} is not of degree {deg}")));
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &ExtElt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> ExtElt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// True if every coefficient lies in Q(ξ).
    pub fn in_base_field(&self) -> bool {
        self.terms.values().all(ExtElt::in_base_field)
    }

    pub fn add_term(&mut self, m: Mono, c: &ExtElt) {
        debug_assert_eq!(m.degree(), self.deg);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, o: &PolyVec) -> PolyVec {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &PolyVec) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        assert_eq!(self.deg, o.deg, "adding polynomials of different degree");
        for (m, c) in &o.terms {
            self.add_term(*m, c);
        }
    }

    pub fn sub(&self, o: &PolyVec) -> PolyVec {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> PolyVec {
        self.map(|c| -c)
    }

    pub fn scale(&self, s: &ExtElt) -> PolyVec {
        if s.is_zero() {
            return PolyVec::zero(self.deg);
        }
        self.map(|c| c * s)
    }

    pub fn scale_cyc(&self, s: &CycElt) -> PolyVec {
        if s.is_zero() {
            return PolyVec::zero(self.deg);
        }
        self.map(|c| c.scale(s))
    }

    pub fn scale_unit(&self, u: UnitRoot) -> PolyVec {
        self.map(|c| c.scale_unit(u))
    }

    fn map(&self, f: impl Fn(&ExtElt) -> ExtElt) -> PolyVec {
        PolyVec {
            deg: self.deg,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Σ cᵢ·fᵢ for polynomials of a common degree.
    pub fn linear_combination<'a>(
        deg: usize,
        items: impl IntoIterator<Item = (&'a ExtElt, &'a PolyVec)>,
    ) -> PolyVec {
        let mut acc: BTreeMap<Mono, Vec<(&ExtElt, &ExtElt)>> = BTreeMap::new();
        for (c, f) in items {
            if c.is_zero() {
                continue;
            }
            for (m, x) in &f.terms {
                acc.entry(*m).or_default().push((c, x));
            }
        }
        PolyVec {
            deg,
            terms: acc
                .into_iter()
                .map(|(m, pairs)| (m, ExtElt::sum_of_products(pairs)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// yᵢ·f with i 0-based.
    pub fn mul_var(&self, i: usize) -> PolyVec {
        PolyVec {
            deg: self.deg + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(i).expect("degree at most 3"), c.clone()))
                .collect(),
        }
    }

    /// Substitute yᵢ ↦ point[i].
    pub fn evaluate(&self, point: &[ExtElt]) -> ExtElt {
        let values: Vec<ExtElt> = self
            .terms
            .keys()
            .map(|m| {
                let mut v = m.vars().iter().map(|&i| &point[i as usize]);
                let first = v.next().expect("degree ≥ 1").clone();
                v.fold(first, |acc, x| &acc * x)
            })
            .collect();
        ExtElt::sum_of_products(self.terms.values().zip(&values))
    }

    /// Dense coordinates in the monomial basis of the matching degree.
    pub fn to_dense(&self, basis: &MonomialBasis) -> Vec<ExtElt> {
        assert_eq!(basis.degree(), self.deg);
        let mut v = vec![ExtElt::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.index(m)] = c.clone();
        }
        v
    }

    pub fn from_dense(basis: &MonomialBasis, v: &[ExtElt]) -> PolyVec {
        PolyVec {
            deg: basis.degree(),
            terms: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (basis.mono(i), c.clone()))
                .collect(),
        }
    }

    /// Image in F_pⁿ under `emb`, dense in the monomial basis.
    pub fn reduce(&self, emb: &PrimeEmbedding, basis: &MonomialBasis) -> Result<Vec<u64>> {
        let mut v = vec![0u64; basis.len()];
        for (m, c) in &self.terms {
            v[basis.index(m)] = emb.reduce(c)?;
        }
        Ok(v)
    }

    /// One line per term: the monomial key followed by the 24 coefficient tokens.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(m, c)| format!("{} {}", m.key(), ext_to_string(c)))
            .collect()
    }

    pub fn parse_term(line: &str) -> Result<(Mono, ExtElt)> {
        let line = line.trim();
        let (key, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::parse("term line needs a monomial and coefficients"))?;
        Ok((Mono::parse_key(key)?, parse_ext(rest)?))
    }
}

impl fmt::Debug for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_cancels_and_drops_zeros() {
        let a = PolyVec::y(&[1, 2]);
        let z = a.sub(&a);
        assert!(z.is_zero());
        let b = PolyVec::y(&[1, 1]).add(&PolyVec::y(&[2, 2]));
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn evaluate_monomial() {
        let mut e1 = vec![ExtElt::zero(); 17];
        e1[0] = ExtElt::one();
        assert!(PolyVec::y(&[1, 1]).evaluate(&e1).is_one());
        assert!(PolyVec::y(&[1, 2]).evaluate(&e1).is_zero());
    }

    #[test]
    fn dense_round_trip() {
        let b = MonomialBasis::new(2);
        let f = PolyVec::y(&[3, 7]).add(&PolyVec::y(&[17, 17]).scale(&ExtElt::alpha()));
        assert_eq!(PolyVec::from_dense(&b, &f.to_dense(&b)), f);
    }

    #[test]
    fn term_lines_round_trip() {
        let f = PolyVec::y(&[1, 15]).scale(&ExtElt::new(CycElt::xi_pow(4), CycElt::from_int(-3)));
        let parsed = PolyVec::from_terms(
            2,
            f.to_lines().iter().map(|l| PolyVec::parse_term(l).unwrap()),
        )
        .unwrap();
        assert_eq!(parsed, f);
    }
}
