//! Reduction of Q(ξ)(α) into prime fields F_p with p ≡ 1 (mod 21).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::cyclotomic::{CycElt, DEGREE};
use super::ext::{alpha_constant, ExtElt};
use crate::error::{Error, Result};

/// Largest modulus accepted; keeps every product of two residues below 2⁶².
pub const MAX_PRIME: u64 = 1 << 31;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller–Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_quadratic_residue(a: u64, p: u64) -> bool {
    a.is_multiple_of(p) || pow_mod(a, (p - 1) / 2, p) == 1
}

/// Tonelli–Shanks; returns the smaller of the two roots.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if !is_quadratic_residue(a, p) {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| !is_quadratic_residue(z, p))?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// All primitive 21st roots of unity mod p, ascending. Empty unless p ≡ 1 (mod 21).
pub fn primitive_21st_roots(p: u64) -> Vec<u64> {
    if p % 21 != 1 {
        return Vec::new();
    }
    let g = pow_mod(primitive_root(p), (p - 1) / 21, p);
    let mut roots: Vec<u64> = (1..21u64)
        .filter(|k| k % 3 != 0 && k % 7 != 0)
        .map(|k| pow_mod(g, k, p))
        .collect();
    roots.sort_unstable();
    roots
}

pub fn residue_of_int(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

pub fn residue_of_rational(r: &BigRational, p: u64) -> Result<u64> {
    let d = residue_of_int(r.denom(), p);
    let inv = inv_mod(d, p).ok_or_else(|| Error::BadPrime {
        p,
        reason: format!("denominator {} vanishes", r.denom()),
    })?;
    Ok(mul_mod(residue_of_int(r.numer(), p), inv, p))
}

/// Image of x under ξ ↦ xi.
pub fn residue_of_cyc(x: &CycElt, p: u64, xi: u64) -> Result<u64> {
    let d = residue_of_int(x.denominator(), p);
    let inv = inv_mod(d, p).ok_or_else(|| Error::BadPrime {
        p,
        reason: format!("denominator {} vanishes", x.denominator()),
    })?;
    let mut acc = 0u64;
    let mut power = 1u64;
    for c in x.numerators().iter() {
        if !c.is_zero() {
            acc = (acc + mul_mod(residue_of_int(c, p), power, p)) % p;
        }
        power = mul_mod(power, xi, p);
    }
    Ok(mul_mod(acc, inv, p))
}

/// A ring homomorphism Z[1/N][ξ][α] → F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeEmbedding {
    p: u64,
    xi_image: u64,
    alpha_image: u64,
}

impl PrimeEmbedding {
    /// Select the embedding for `p`: the smallest primitive 21st root of unity under which
    /// −c is a square, and the smaller of its square roots.
    pub fn for_prime(p: u64) -> Result<Self> {
        Self::check_prime(p)?;
        let neg_c = -alpha_constant();
        for xi in primitive_21st_roots(p) {
            let r = residue_of_cyc(&neg_c, p, xi)?;
            if let Some(alpha) = sqrt_mod(r, p) {
                return Ok(PrimeEmbedding {
                    p,
                    xi_image: xi,
                    alpha_image: alpha,
                });
            }
        }
        Err(Error::BadPrime {
            p,
            reason: "-c is a non-residue under every embedding of xi".into(),
        })
    }

    /// An explicitly specified embedding, validated.
    pub fn with_images(p: u64, xi_image: u64, alpha_image: u64) -> Result<Self> {
        Self::check_prime(p)?;
        if pow_mod(xi_image, 21, p) != 1
            || pow_mod(xi_image, 3, p) == 1
            || pow_mod(xi_image, 7, p) == 1
        {
            return Err(Error::BadPrime {
                p,
                reason: format!("{xi_image} is not a primitive 21st root of unity"),
            });
        }
        let neg_c = residue_of_cyc(&-alpha_constant(), p, xi_image)?;
        if mul_mod(alpha_image, alpha_image, p) != neg_c {
            return Err(Error::BadPrime {
                p,
                reason: format!("{alpha_image} is not a square root of -c"),
            });
        }
        Ok(PrimeEmbedding {
            p,
            xi_image,
            alpha_image,
        })
    }

    /// The first `count` usable primes above 2²⁰.
    pub fn auto(count: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(count);
        let mut p = (1u64 << 20) + 1;
        p += (1 + 21 - p % 21) % 21;
        while out.len() < count {
            if is_prime(p) {
                if let Ok(e) = Self::for_prime(p) {
                    out.push(e);
                }
            }
            p += 21;
        }
        out
    }

    fn check_prime(p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::BadPrime {
                p,
                reason: "not prime".into(),
            });
        }
        if p % 21 != 1 {
            return Err(Error::BadPrime {
                p,
                reason: "not congruent to 1 mod 21".into(),
            });
        }
        if p >= MAX_PRIME {
            return Err(Error::BadPrime {
                p,
                reason: format!("exceeds {MAX_PRIME}"),
            });
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn xi_image(&self) -> u64 {
        self.xi_image
    }

    pub fn alpha_image(&self) -> u64 {
        self.alpha_image
    }

    /// Image of ξᵏ.
    pub fn xi_pow(&self, k: i64) -> u64 {
        pow_mod(self.xi_image, k.rem_euclid(21) as u64, self.p)
    }

    pub fn reduce_rational(&self, r: &BigRational) -> Result<u64> {
        residue_of_rational(r, self.p)
    }

    pub fn reduce_cyc(&self, x: &CycElt) -> Result<u64> {
        residue_of_cyc(x, self.p, self.xi_image)
    }

    pub fn reduce(&self, x: &ExtElt) -> Result<u64> {
        let a = self.reduce_cyc(x.a())?;
        if x.b().is_zero() {
            return Ok(a);
        }
        let b = self.reduce_cyc(x.b())?;
        Ok((a + mul_mod(b, self.alpha_image, self.p)) % self.p)
    }
}

/// Coefficient images of the power basis, for callers reducing many elements.
pub fn xi_power_images(emb: &PrimeEmbedding) -> [u64; DEGREE] {
    std::array::from_fn(|i| emb.xi_pow(i as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes() {
        let embs = PrimeEmbedding::auto(2);
        assert_eq!(embs[0].p(), 1048783);
        assert_eq!(embs[1].p(), 1048867);
        for e in &embs {
            assert_eq!(pow_mod(e.xi_image(), 21, e.p()), 1);
            let a = e.reduce(&ExtElt::alpha()).unwrap();
            let neg_c = e.reduce_cyc(&-alpha_constant()).unwrap();
            assert_eq!(mul_mod(a, a, e.p()), neg_c);
        }
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(PrimeEmbedding::for_prime(1048784).is_err());
        assert!(PrimeEmbedding::for_prime(1048781).is_err());
        assert!(PrimeEmbedding::for_prime(1048909).is_err());
    }

    #[test]
    fn cyclotomic_relation_reduces_to_zero() {
        let e = PrimeEmbedding::auto(1)[0];
        let xi = e.xi_image();
        let p = e.p();
        let phi = [1i64, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1];
        let mut acc = 0u64;
        for (i, &c) in phi.iter().enumerate() {
            let t = pow_mod(xi, i as u64, p);
            acc = (acc + (c.rem_euclid(p as i64) as u64) * t) % p;
        }
        assert_eq!(acc, 0);
        assert_eq!(e.reduce(&ExtElt::zero()).unwrap(), 0);
    }

    #[test]
    fn denominator_collision() {
        let e = PrimeEmbedding::auto(1)[0];
        let r = BigRational::new(BigInt::from(1), BigInt::from(e.p()));
        assert!(matches!(
            e.reduce_rational(&r),
            Err(Error::BadPrime { .. })
        ));
    }

    #[test]
    fn tonelli_shanks() {
        let p = 1048783;
        for a in [2u64, 3, 5, 10, 12345] {
            if let Some(r) = sqrt_mod(a, p) {
                assert_eq!(mul_mod(r, r, p), a);
                assert!(r <= p - r);
            }
        }
    }
}
