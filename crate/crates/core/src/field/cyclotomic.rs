//! The cyclotomic field Q(ξ), ξ = e^{2πi/21}, in the power basis {1, ξ, …, ξ¹¹}.
//!
//! Elements are kept as an integer numerator polynomial over a single positive
//! denominator, reduced so that the gcd of all numerator coefficients and the
//! denominator is 1. This makes equality structural and avoids a gcd per
//! coefficient on every operation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of Q(ξ) over Q.
pub const DEGREE: usize = 12;

/// Low coefficients of Φ₂₁(x) = x¹² − x¹¹ + x⁹ − x⁸ + x⁶ − x⁴ + x³ − x + 1.
const PHI21_LOW: [i8; DEGREE] = [1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1];

/// Units of Z/21, i.e. the exponents k for which ξ ↦ ξᵏ is a field automorphism.
pub const GALOIS_EXPONENTS: [u32; 12] = [1, 2, 4, 5, 8, 10, 11, 13, 16, 17, 19, 20];

/// Reduce a polynomial of arbitrary length modulo Φ₂₁ in place and truncate to 12 terms.
fn reduce_poly(p: &mut Vec<BigInt>) {
    for d in (DEGREE..p.len()).rev() {
        if p[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[d]);
        for (k, &phi) in PHI21_LOW.iter().enumerate() {
            match phi {
                1 => p[d - DEGREE + k] -= &c,
                -1 => p[d - DEGREE + k] += &c,
                _ => {}
            }
        }
    }
    p.truncate(DEGREE);
    p.resize(DEGREE, BigInt::zero());
}

/// Power-basis integer coordinates of ξᵐ for m = 0..21.
fn xi_power_table() -> &'static [[i64; DEGREE]; 21] {
    static TABLE: OnceLock<[[i64; DEGREE]; 21]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [[0i64; DEGREE]; 21];
        for (m, row) in out.iter_mut().enumerate() {
            let mut p = vec![BigInt::zero(); m.max(DEGREE) + 1];
            p[m] = BigInt::one();
            reduce_poly(&mut p);
            for (i, c) in p.iter().enumerate() {
                row[i] = i64::try_from(c).expect("small coefficient");
            }
        }
        out
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElt {
    num: [BigInt; DEGREE],
    den: BigInt,
}

impl CycElt {
    pub fn zero() -> Self {
        CycElt {
            num: Default::default(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = BigInt::from(n);
        CycElt {
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = r.numer().clone();
        Self::from_parts(num, r.denom().clone())
    }

    /// Build from power-basis rational coordinates.
    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        assert!(coeffs.len() <= DEGREE, "at most 12 power-basis coordinates");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, c) in num.iter_mut().zip(coeffs) {
            *slot = c.numer() * (&den / c.denom());
        }
        Self::from_parts(num, den)
    }

    /// Integer polynomial in ξ (any length) divided by `den`.
    pub fn from_int_poly(poly: &[i64], den: i64) -> Self {
        let mut p: Vec<BigInt> = poly.iter().map(|&c| BigInt::from(c)).collect();
        if p.len() < DEGREE {
            p.resize(DEGREE, BigInt::zero());
        }
        reduce_poly(&mut p);
        let num: [BigInt; DEGREE] = std::array::from_fn(|i| std::mem::take(&mut p[i]));
        Self::from_parts(num, BigInt::from(den))
    }

    /// Normalising constructor; `den` must be nonzero.
    fn from_parts(mut num: [BigInt; DEGREE], mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in num.iter() {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if num.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
            den /= &g;
        }
        CycElt { num, den }
    }

    /// ξᵏ for any integer k.
    pub fn xi_pow(k: i64) -> Self {
        let m = k.rem_euclid(21) as usize;
        let row = &xi_power_table()[m];
        CycElt {
            num: std::array::from_fn(|i| BigInt::from(row[i])),
            den: BigInt::one(),
        }
    }

    /// The primitive n-th root of unity e^{2πik/n} for n dividing 21.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self> {
        if n == 0 || 21 % n != 0 {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Self::xi_pow(k.rem_euclid(n as i64) * (21 / n as i64)))
    }

    /// ζ = e^{2πi/7} raised to k.
    pub fn zeta(k: i64) -> Self {
        Self::xi_pow(3 * k)
    }

    /// ω = e^{2πi/3} raised to k.
    pub fn omega(k: i64) -> Self {
        Self::xi_pow(7 * k)
    }

    /// The Gauss sum ζ + ζ² + ζ⁴ − ζ³ − ζ⁵ − ζ⁶, whose square is −7.
    pub fn sqrt_minus_seven() -> Self {
        let mut poly = [0i64; 21];
        for k in [1, 2, 4] {
            poly[3 * k] += 1;
        }
        for k in [3, 5, 6] {
            poly[3 * k] -= 1;
        }
        Self::from_int_poly(&poly, 1)
    }

    /// β_j = ζʲ + ζ²ʲ + ζ⁴ʲ.
    pub fn beta(j: i64) -> Self {
        Self::zeta(j) + Self::zeta(2 * j) + Self::zeta(4 * j)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn numerators(&self) -> &[BigInt; DEGREE] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [BigRational; DEGREE] {
        std::array::from_fn(|i| self.coeff(i))
    }

    /// The rational value if this element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// The integer value if this element lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Apply the automorphism ξ ↦ ξᵏ (k coprime to 21).
    pub fn galois(&self, k: u32) -> Self {
        assert!(!k.is_multiple_of(3) && !k.is_multiple_of(7), "ξ ↦ ξ^{k} is not an automorphism");
        let table = xi_power_table();
        let mut out: [BigInt; DEGREE] = Default::default();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(i * k as usize) % 21];
            for (slot, &t) in out.iter_mut().zip(row.iter()) {
                match t {
                    0 => {}
                    1 => *slot += c,
                    -1 => *slot -= c,
                    _ => *slot += c * t,
                }
            }
        }
        CycElt {
            num: out,
            den: self.den.clone(),
        }
    }

    /// Complex conjugation, ξ ↦ ξ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(20)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for &k in &GALOIS_EXPONENTS[1..] {
            acc = &acc * &self.galois(k);
        }
        acc.as_rational().expect("norm lies in Q")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(&r.recip()));
        }
        let mut cofactor = Self::one();
        for &k in &GALOIS_EXPONENTS[1..] {
            cofactor = &cofactor * &self.galois(k);
        }
        let n = (&cofactor * self)
            .as_rational()
            .expect("product of all conjugates is rational");
        Some(cofactor.scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let num = std::array::from_fn(|i| &self.num[i] * r.numer());
        Self::from_parts(num, &self.den * r.denom())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Multiply by ±ξᵏ without a general product.
    pub fn mul_xi_pow(&self, k: i64, negate: bool) -> Self {
        let k = k.rem_euclid(21) as usize;
        let mut p = vec![BigInt::zero(); DEGREE + k];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                p[i + k] = if negate { -c } else { c.clone() };
            }
        }
        reduce_poly(&mut p);
        CycElt {
            num: std::array::from_fn(|i| std::mem::take(&mut p[i])),
            den: self.den.clone(),
        }
    }

    /// Σ aᵢ·bᵢ with a single reduction and normalisation at the end.
    pub fn sum_of_products<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a CycElt, &'a CycElt)>,
    {
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); 2 * DEGREE - 1];
        let mut acc_den = BigInt::one();
        let mut any = false;
        for (a, b) in pairs {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            any = true;
            let term_den = &a.den * &b.den;
            let factor = if term_den == acc_den {
                None
            } else {
                let l = acc_den.lcm(&term_den);
                let up = &l / &acc_den;
                if !up.is_one() {
                    for c in acc.iter_mut() {
                        if !c.is_zero() {
                            *c *= &up;
                        }
                    }
                }
                let f = &l / &term_den;
                acc_den = l;
                if f.is_one() {
                    None
                } else {
                    Some(f)
                }
            };
            for (i, x) in a.num.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let x = match &factor {
                    Some(f) => x * f,
                    None => x.clone(),
                };
                for (j, y) in b.num.iter().enumerate() {
                    if !y.is_zero() {
                        acc[i + j] += &x * y;
                    }
                }
            }
        }
        if !any {
            return Self::zero();
        }
        reduce_poly(&mut acc);
        let num = std::array::from_fn(|i| std::mem::take(&mut acc[i]));
        Self::from_parts(num, acc_den)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = std::array::from_fn(|i| {
                if negate {
                    &self.num[i] - &other.num[i]
                } else {
                    &self.num[i] + &other.num[i]
                }
            });
            (num, self.den.clone())
        } else {
            let l = self.den.lcm(&other.den);
            let fa = &l / &self.den;
            let fb = &l / &other.den;
            let num = std::array::from_fn(|i| {
                let a = &self.num[i] * &fa;
                let b = &other.num[i] * &fb;
                if negate {
                    a - b
                } else {
                    a + b
                }
            });
            (num, l)
        };
        Self::from_parts(num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut p: Vec<BigInt> = vec![BigInt::zero(); 2 * DEGREE - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        reduce_poly(&mut p);
        let num = std::array::from_fn(|i| std::mem::take(&mut p[i]));
        Self::from_parts(num, &self.den * &other.den)
    }
}

impl Default for CycElt {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints as `(a0 + a1*x + ...)/den` with x standing for ξ.
impl fmt::Display for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            });
        }
        let body = terms.join(" + ").replace("+ -", "- ");
        if self.den.is_one() {
            if terms.len() == 1 {
                write!(f, "{body}")
            } else {
                write!(f, "({body})")
            }
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl Neg for &CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        CycElt {
            num: std::array::from_fn(|i| -&self.num[i]),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycElt> for &CycElt {
            type Output = CycElt;
            fn $method(self, rhs: &CycElt) -> CycElt {
                let f: fn(&CycElt, &CycElt) -> CycElt = $body;
                f(self, rhs)
            }
        }
        impl $trait<CycElt> for CycElt {
            type Output = CycElt;
            fn $method(self, rhs: CycElt) -> CycElt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycElt> for CycElt {
            type Output = CycElt;
            fn $method(self, rhs: &CycElt) -> CycElt {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycElt> for &CycElt {
            type Output = CycElt;
            fn $method(self, rhs: CycElt) -> CycElt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&CycElt> for CycElt {
    fn add_assign(&mut self, rhs: &CycElt) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&CycElt> for CycElt {
    fn sub_assign(&mut self, rhs: &CycElt) {
        *self = self.add_impl(rhs, true);
    }
}

impl std::iter::Sum for CycElt {
    fn sum<I: Iterator<Item = CycElt>>(iter: I) -> Self {
        iter.fold(CycElt::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_root() {
        assert!(CycElt::root_of_unity(1, 0).unwrap().is_one());
    }

    #[test]
    fn zeta_has_order_seven() {
        let z = CycElt::root_of_unity(7, 1).unwrap();
        for j in 1..7 {
            assert!(!z.pow(j).is_one(), "ζ^{j} = 1");
        }
        assert!(z.pow(7).is_one());
    }

    #[test]
    fn omega_sum_is_minus_one() {
        let s = CycElt::root_of_unity(3, 1).unwrap() + CycElt::root_of_unity(3, 2).unwrap();
        assert_eq!(s, CycElt::from_int(-1));
    }

    #[test]
    fn unsupported_order() {
        assert_eq!(
            CycElt::root_of_unity(5, 1),
            Err(Error::UnsupportedOrder(5))
        );
        assert!(CycElt::root_of_unity(6, 1).is_err());
    }

    #[test]
    fn xi_powers_are_distinct_with_order_21() {
        let xi = CycElt::root_of_unity(21, 1).unwrap();
        let powers: Vec<CycElt> = (0..21).map(|k| xi.pow(k)).collect();
        for i in 0..21 {
            for j in (i + 1)..21 {
                assert_ne!(powers[i], powers[j]);
            }
        }
        assert!(xi.pow(21).is_one());
        assert_eq!(xi.pow(20), CycElt::xi_pow(-1));
    }

    #[test]
    fn gauss_sum_squares_to_minus_seven() {
        let s = CycElt::sqrt_minus_seven();
        assert!(!s.is_zero());
        assert_eq!(&s * &s, CycElt::from_int(-7));
        assert!((&s + &s.conj()).is_zero());
    }

    #[test]
    fn conjugation() {
        let r = CycElt::from_rational(&rat(-3, 5));
        assert_eq!(r.conj(), r);
        for k in 0..7 {
            assert_eq!(CycElt::zeta(k).conj(), CycElt::zeta(7 - k));
        }
        assert_eq!(CycElt::beta(1).conj(), CycElt::beta(3));
    }

    #[test]
    fn cyclotomic_relation_vanishes() {
        // Φ₂₁(ξ) expanded directly.
        let xi = CycElt::xi_pow(1);
        let phi = xi.pow(12) - xi.pow(11) + xi.pow(9) - xi.pow(8) + xi.pow(6) - xi.pow(4)
            + xi.pow(3)
            - xi.clone()
            + CycElt::one();
        assert!(phi.is_zero());
    }

    #[test]
    fn inverse_and_norm() {
        let x = CycElt::from_int_poly(&[3, 0, -1, 5, 0, 0, 0, 2], 7);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(CycElt::zero().inv().is_none());
        assert_eq!(CycElt::from_int(2).norm(), rat(4096, 1));
    }

    #[test]
    fn mul_xi_pow_matches_product() {
        let x = CycElt::from_int_poly(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12], 5);
        for k in 0..21 {
            assert_eq!(x.mul_xi_pow(k, false), &x * &CycElt::xi_pow(k));
            assert_eq!(x.mul_xi_pow(k, true), -(&x * &CycElt::xi_pow(k)));
        }
    }

    #[test]
    fn sum_of_products_matches_naive() {
        let a = [
            CycElt::from_int_poly(&[1, 2], 3),
            CycElt::from_int_poly(&[0, 0, 5], 2),
            CycElt::zero(),
        ];
        let b = [
            CycElt::from_int_poly(&[4, 0, 0, 1], 9),
            CycElt::xi_pow(17),
            CycElt::one(),
        ];
        let naive: CycElt = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        assert_eq!(CycElt::sum_of_products(a.iter().zip(&b)), naive);
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = CycElt::from_int_poly(&[2, 4], 6);
        let b = CycElt::from_int_poly(&[1, 2], 3);
        assert_eq!(a, b);
        assert_eq!(a.denominator(), &BigInt::from(3));
        let c = CycElt::from_coeffs(&[rat(1, 3), rat(2, 3)]);
        assert_eq!(a, c);
    }
}
