//! The quadratic extension Q(ξ)(α) with α² = −c for the fixed constant c below.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cyclotomic::CycElt;
use super::unit::UnitRoot;
use crate::error::{Error, Result};

/// c = (1/7)(−6ξ − 4ξ² + 4ξ⁴ − 3ξ⁵ − 2ξ⁸ + 3ξ¹⁰ + 6ξ¹¹ − ξ¹³ + 2ξ¹⁶ + ξ¹⁷ − 2ξ¹⁹ + 2ξ²⁰),
/// the constant term of the monic equation α² + c = 0 satisfied by the fixed point.
pub fn alpha_constant() -> &'static CycElt {
    static C: OnceLock<CycElt> = OnceLock::new();
    C.get_or_init(|| {
        let terms: [(usize, i64); 12] = [
            (1, -6),
            (2, -4),
            (4, 4),
            (5, -3),
            (8, -2),
            (10, 3),
            (11, 6),
            (13, -1),
            (16, 2),
            (17, 1),
            (19, -2),
            (20, 2),
        ];
        let mut poly = [0i64; 21];
        for (k, v) in terms {
            poly[k] = v;
        }
        CycElt::from_int_poly(&poly, 7)
    })
}

/// a + b·α.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtElt {
    a: CycElt,
    b: CycElt,
}

impl ExtElt {
    pub fn new(a: CycElt, b: CycElt) -> Self {
        ExtElt { a, b }
    }

    pub fn zero() -> Self {
        ExtElt::default()
    }

    pub fn one() -> Self {
        Self::from_cyc(CycElt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_cyc(CycElt::from_int(n))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_cyc(CycElt::from_rational(r))
    }

    pub fn from_cyc(a: CycElt) -> Self {
        ExtElt {
            a,
            b: CycElt::zero(),
        }
    }

    pub fn alpha() -> Self {
        ExtElt {
            a: CycElt::zero(),
            b: CycElt::one(),
        }
    }

    pub fn a(&self) -> &CycElt {
        &self.a
    }

    pub fn b(&self) -> &CycElt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn in_base_field(&self) -> bool {
        self.b.is_zero()
    }

    /// The other root: a − bα.
    pub fn alpha_conj(&self) -> Self {
        ExtElt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Relative norm a² + c·b² down to Q(ξ).
    pub fn rel_norm(&self) -> CycElt {
        if self.b.is_zero() {
            return &self.a * &self.a;
        }
        &self.a * &self.a + alpha_constant() * &(&self.b * &self.b)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.b.is_zero() {
            return self.a.inv().map(Self::from_cyc);
        }
        let n = self.rel_norm().inv()?;
        Some(ExtElt {
            a: &self.a * &n,
            b: -(&self.b * &n),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn scale(&self, x: &CycElt) -> Self {
        ExtElt {
            a: &self.a * x,
            b: if self.b.is_zero() {
                CycElt::zero()
            } else {
                &self.b * x
            },
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        ExtElt {
            a: self.a.scale(r),
            b: self.b.scale(r),
        }
    }

    pub fn scale_unit(&self, u: UnitRoot) -> Self {
        ExtElt {
            a: u.apply(&self.a),
            b: if self.b.is_zero() {
                CycElt::zero()
            } else {
                u.apply(&self.b)
            },
        }
    }

    /// Complex conjugation on the base field, fixing α.
    pub fn conj_base(&self) -> Self {
        ExtElt {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }

    /// Σ xᵢ·yᵢ with one normalisation per component.
    pub fn sum_of_products<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a ExtElt, &'a ExtElt)>,
    {
        let pairs: Vec<(&ExtElt, &ExtElt)> = pairs.into_iter().collect();
        let mut a = CycElt::sum_of_products(pairs.iter().map(|(x, y)| (&x.a, &y.a)));
        let b = CycElt::sum_of_products(
            pairs
                .iter()
                .flat_map(|(x, y)| [(&x.a, &y.b), (&x.b, &y.a)]),
        );
        let bb = CycElt::sum_of_products(pairs.iter().map(|(x, y)| (&x.b, &y.b)));
        if !bb.is_zero() {
            a -= &(alpha_constant() * &bb);
        }
        ExtElt { a, b }
    }

    fn mul_impl(&self, o: &Self) -> Self {
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, true) => Self::from_cyc(&self.a * &o.a),
            (true, false) => ExtElt {
                a: &self.a * &o.a,
                b: &self.a * &o.b,
            },
            (false, true) => ExtElt {
                a: &self.a * &o.a,
                b: &self.b * &o.a,
            },
            (false, false) => {
                let bb = &self.b * &o.b;
                ExtElt {
                    a: &self.a * &o.a - alpha_constant() * &bb,
                    b: &self.a * &o.b + &self.b * &o.a,
                }
            }
        }
    }
}

/// A prime certifying that −c is not a square in Q(ξ): ξ has a root mod p and −c reduces to
/// a non-residue under every such root. Returns an error if no certificate is found among the
/// first few hundred candidate primes.
pub fn nonsquare_certificate() -> Result<u64> {
    use super::modp::{is_prime, primitive_21st_roots, residue_of_cyc, is_quadratic_residue};
    let neg_c = -alpha_constant();
    let mut p = 1u64 << 20;
    p += (1 + 21 - p % 21) % 21;
    for _ in 0..500 {
        if is_prime(p) {
            let roots = primitive_21st_roots(p);
            let all_nonresidue = roots.iter().all(|&x| {
                residue_of_cyc(&neg_c, p, x)
                    .map(|r| r != 0 && !is_quadratic_residue(r, p))
                    .unwrap_or(false)
            });
            if all_nonresidue {
                return Ok(p);
            }
        }
        p += 21;
    }
    Err(Error::DegenerateExtension(
        "no prime certifies that -c is a non-square".into(),
    ))
}

impl fmt::Debug for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*alpha", self.a, self.b)
        }
    }
}

impl Neg for &ExtElt {
    type Output = ExtElt;
    fn neg(self) -> ExtElt {
        ExtElt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for ExtElt {
    type Output = ExtElt;
    fn neg(self) -> ExtElt {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&ExtElt> for &ExtElt {
            type Output = ExtElt;
            fn $method(self, rhs: &ExtElt) -> ExtElt {
                let f: fn(&ExtElt, &ExtElt) -> ExtElt = $body;
                f(self, rhs)
            }
        }
        impl $trait<ExtElt> for ExtElt {
            type Output = ExtElt;
            fn $method(self, rhs: ExtElt) -> ExtElt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExtElt> for ExtElt {
            type Output = ExtElt;
            fn $method(self, rhs: &ExtElt) -> ExtElt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| ExtElt {
    a: &x.a + &y.a,
    b: &x.b + &y.b
});
forward_binop!(Sub, sub, |x, y| ExtElt {
    a: &x.a - &y.a,
    b: &x.b - &y.b
});
forward_binop!(Mul, mul, |x, y| x.mul_impl(y));

impl AddAssign<&ExtElt> for ExtElt {
    fn add_assign(&mut self, rhs: &ExtElt) {
        self.a += &rhs.a;
        if !rhs.b.is_zero() {
            self.b += &rhs.b;
        }
    }
}

impl SubAssign<&ExtElt> for ExtElt {
    fn sub_assign(&mut self, rhs: &ExtElt) {
        self.a -= &rhs.a;
        if !rhs.b.is_zero() {
            self.b -= &rhs.b;
        }
    }
}

impl From<CycElt> for ExtElt {
    fn from(a: CycElt) -> Self {
        ExtElt::from_cyc(a)
    }
}

impl From<i64> for ExtElt {
    fn from(n: i64) -> Self {
        ExtElt::from_int(n)
    }
}

impl From<BigInt> for ExtElt {
    fn from(n: BigInt) -> Self {
        ExtElt::from_rational(&BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_squared_is_minus_c() {
        let a = ExtElt::alpha();
        assert_eq!(&a * &a, ExtElt::from_cyc(-alpha_constant()));
    }

    #[test]
    fn norm_form() {
        let a = CycElt::from_int_poly(&[1, 0, 3], 2);
        let b = CycElt::from_int_poly(&[0, -1, 0, 0, 5], 3);
        let x = ExtElt::new(a.clone(), b.clone());
        let prod = &x * &x.alpha_conj();
        assert_eq!(prod, ExtElt::from_cyc(&a * &a + alpha_constant() * &(&b * &b)));
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn minus_c_is_not_a_square() {
        assert!(nonsquare_certificate().is_ok());
    }

    #[test]
    fn sum_of_products_matches_naive() {
        let xs = [
            ExtElt::new(CycElt::xi_pow(3), CycElt::from_int(2)),
            ExtElt::from_int(5),
            ExtElt::alpha(),
        ];
        let ys = [
            ExtElt::new(CycElt::from_int(-1), CycElt::xi_pow(7)),
            ExtElt::new(CycElt::zero(), CycElt::xi_pow(1)),
            ExtElt::alpha(),
        ];
        let naive = xs
            .iter()
            .zip(&ys)
            .fold(ExtElt::zero(), |acc, (x, y)| acc + x * y);
        assert_eq!(ExtElt::sum_of_products(xs.iter().zip(&ys)), naive);
    }
}
