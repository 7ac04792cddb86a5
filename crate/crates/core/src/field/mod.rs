//! Exact arithmetic in Q(ξ) and Q(ξ)(α), and reduction into prime fields.

pub mod cyclotomic;
pub mod ext;
pub mod modp;
pub mod serial;
pub mod unit;

pub use cyclotomic::CycElt;
pub use ext::{alpha_constant, ExtElt};
pub use modp::PrimeEmbedding;
pub use num_rational::BigRational as Rational;
pub use unit::UnitRoot;
