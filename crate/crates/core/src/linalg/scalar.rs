//! The field interface shared by exact matrices and polynomials.

use std::fmt::Debug;

use crate::field::{CycElt, ExtElt};

pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Σ aᵢ·bᵢ; implementors may defer normalisation.
    fn dot<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, &'a Self)>,
    {
        pairs
            .into_iter()
            .fold(Self::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

impl Scalar for CycElt {
    fn zero() -> Self {
        CycElt::zero()
    }
    fn one() -> Self {
        CycElt::one()
    }
    fn from_int(n: i64) -> Self {
        CycElt::from_int(n)
    }
    fn is_zero(&self) -> bool {
        CycElt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CycElt::inv(self)
    }
    fn is_one(&self) -> bool {
        CycElt::is_one(self)
    }
    fn dot<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, &'a Self)>,
    {
        CycElt::sum_of_products(pairs)
    }
}

impl Scalar for ExtElt {
    fn zero() -> Self {
        ExtElt::zero()
    }
    fn one() -> Self {
        ExtElt::one()
    }
    fn from_int(n: i64) -> Self {
        ExtElt::from_int(n)
    }
    fn is_zero(&self) -> bool {
        ExtElt::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        ExtElt::inv(self)
    }
    fn is_one(&self) -> bool {
        ExtElt::is_one(self)
    }
    fn dot<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a Self, &'a Self)>,
    {
        ExtElt::sum_of_products(pairs)
    }
}
