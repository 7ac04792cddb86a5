//! Signed roots of unity ±ξᵏ, the entries of monomial representation matrices.

use std::ops::Mul;
use std::sync::OnceLock;

use num_traits::One;

use super::cyclotomic::CycElt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnitRoot {
    pub neg: bool,
    /// Exponent of ξ, in 0..21.
    pub xi: u8,
}

impl UnitRoot {
    pub const ONE: UnitRoot = UnitRoot { neg: false, xi: 0 };

    pub fn new(neg: bool, xi: i64) -> Self {
        UnitRoot {
            neg,
            xi: xi.rem_euclid(21) as u8,
        }
    }

    /// ±ωᵏ.
    pub fn omega(neg: bool, k: i64) -> Self {
        Self::new(neg, 7 * k)
    }

    /// ±ζᵏ.
    pub fn zeta(neg: bool, k: i64) -> Self {
        Self::new(neg, 3 * k)
    }

    pub fn inv(self) -> Self {
        Self::new(self.neg, -(self.xi as i64))
    }

    pub fn conj(self) -> Self {
        self.inv()
    }

    pub fn to_cyc(self) -> CycElt {
        let x = CycElt::xi_pow(self.xi as i64);
        if self.neg {
            -x
        } else {
            x
        }
    }

    /// Apply to a field element without a general multiplication.
    pub fn apply(self, x: &CycElt) -> CycElt {
        x.mul_xi_pow(self.xi as i64, self.neg)
    }

    /// Recognise ±ξᵏ among field elements.
    pub fn from_cyc(x: &CycElt) -> Option<Self> {
        static UNITS: OnceLock<Vec<(UnitRoot, CycElt)>> = OnceLock::new();
        let units = UNITS.get_or_init(|| {
            (0..42)
                .map(|k| {
                    let u = UnitRoot::new(k >= 21, k % 21);
                    (u, u.to_cyc())
                })
                .collect()
        });
        if !x.denominator().is_one() {
            return None;
        }
        units.iter().find(|(_, c)| c == x).map(|(u, _)| *u)
    }

    /// Order as an element of the multiplicative group.
    pub fn order(self) -> u32 {
        (1..=42)
            .find(|&k| {
                let u = (0..k).fold(UnitRoot::ONE, |acc, _| acc * self);
                u == UnitRoot::ONE
            })
            .expect("order divides 42")
    }
}

impl Mul for UnitRoot {
    type Output = UnitRoot;
    fn mul(self, rhs: UnitRoot) -> UnitRoot {
        UnitRoot::new(self.neg ^ rhs.neg, self.xi as i64 + rhs.xi as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognises_units() {
        for k in 0..21 {
            for neg in [false, true] {
                let u = UnitRoot::new(neg, k);
                assert_eq!(UnitRoot::from_cyc(&u.to_cyc()), Some(u));
            }
        }
        assert_eq!(UnitRoot::from_cyc(&CycElt::from_int(2)), None);
        assert_eq!(UnitRoot::from_cyc(&CycElt::sqrt_minus_seven()), None);
    }

    #[test]
    fn arithmetic_matches_field() {
        let a = UnitRoot::new(true, 5);
        let b = UnitRoot::omega(false, 2);
        assert_eq!((a * b).to_cyc(), a.to_cyc() * b.to_cyc());
        assert!((a * a.inv()).to_cyc().is_one());
        assert_eq!(UnitRoot::new(true, 0).order(), 2);
        assert_eq!(UnitRoot::omega(true, 1).order(), 6);
        assert_eq!(UnitRoot::zeta(false, 3).order(), 7);
    }
}
