//! Polynomials of degree ≤ 3 on V, the G-action on them, and spans of them.

pub mod action;
pub mod modular;
pub mod mono;
pub mod polyvec;
pub mod subspace;

pub use action::{power_list, GroupAction, LinearSubst};
pub use modular::{ModAction, SquareMod};
pub use mono::{basis, Mono, MonomialBasis};
pub use polyvec::PolyVec;
pub use subspace::{RankCertificate, RankMode, SubspaceBasis};
