//! The 105 quadrics through the canonical curve: the fixed point, the W₄-part,
//! the intertwiners for W₁₀ and W₁₁, and the assembled basis.

pub mod assemble;
pub mod cache;
pub mod intertwiner;
pub mod pipeline;
pub mod point;
pub mod quadrics;
pub mod w4;
pub mod wp;

pub use assemble::{assemble, validate_basis, BasisReport, Ingredients};
pub use cache::{CacheFile, CacheHeader, IntertwinerCache};
pub use intertwiner::{
    build_b1, build_b2, Convention, EigenCoords, FlatBasis, Intertwiner, IntertwinerBases,
    LabelledBasis, SeedMatrix, Target,
};
pub use pipeline::{build_quadrics, QuadricResult};
pub use point::{find_fixed_point, q_zeta2, AlphaEquation, CurvePoint, FixedPoint};
pub use quadrics::{Quadric, QuadricBasis, QuadricLabel};
pub use w4::{build_w4_part, W4Part};
pub use wp::{derive_wp, Attempt, TargetWp, WpOptions};
