//! Fixed point, W₄-part, ℘ for both targets, and the assembled basis.

use super::assemble::{assemble, Ingredients};
use super::point::{find_fixed_point, FixedPoint};
use super::quadrics::QuadricBasis;
use super::w4::{build_w4_part, W4Part};
use super::wp::{derive_wp, TargetWp, WpOptions};
use super::intertwiner::Target;
use crate::context::Context;
use crate::error::Result;

pub struct QuadricResult {
    pub fixed: FixedPoint,
    pub w4: W4Part,
    pub wp10: TargetWp,
    pub wp11: TargetWp,
    pub basis: QuadricBasis,
}

impl QuadricResult {
    pub fn point(&self) -> &[crate::field::ExtElt] {
        &self.fixed.point.coords
    }
}

pub fn build_quadrics(ctx: &Context, opts: &WpOptions) -> Result<QuadricResult> {
    let fixed = find_fixed_point(ctx)?;
    let p = &fixed.point.coords;
    let w4 = build_w4_part(ctx, p)?;
    let wp10 = derive_wp(ctx, Target::W10, p, opts)?;
    let wp11 = derive_wp(ctx, Target::W11, p, opts)?;
    let basis = assemble(
        ctx,
        &Ingredients {
            vartheta: w4.theta.clone(),
            q: fixed.q_zeta2.clone(),
            wp10: wp10.wp.clone(),
            wp11: wp11.wp.clone(),
        },
    )?;
    Ok(QuadricResult {
        fixed,
        w4,
        wp10,
        wp11,
        basis,
    })
}
