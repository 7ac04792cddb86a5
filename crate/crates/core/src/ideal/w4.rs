//! The ζ²-eigenquadrics of h_7B in the W₄-part of the ideal.

use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::ExtElt;
use crate::poly::PolyVec;

#[derive(Clone, Debug)]
pub struct W4Part {
    /// b₁ = ρ_{ζ²}(π_{W₄}(y₁²)), b₂ = ρ_{ζ²}(π_{W₄}(y₁y₂)), b₃ = y₁₇².
    pub b: [PolyVec; 3],
    pub b_at_p: [ExtElt; 3],
    pub theta: [PolyVec; 2],
}

pub fn build_w4_part(ctx: &Context, p: &[ExtElt]) -> Result<W4Part> {
    let b1 = ctx.rho(2, &ctx.pi(4, &PolyVec::y(&[1, 1])));
    let b2 = ctx.rho(2, &ctx.pi(4, &PolyVec::y(&[1, 2])));
    let b3 = PolyVec::y(&[17, 17]);
    let b = [b1, b2, b3];
    for (k, bk) in b.iter().enumerate() {
        if !ctx.is_eigen(2, bk) {
            return Err(Error::verification(
                format!("b{}", k + 1),
                "not a zeta^2-eigenvector of h_7B",
            ));
        }
    }
    let b_at_p = [0, 1, 2].map(|k| b[k].evaluate(p));
    if let Some(k) = b_at_p.iter().position(ExtElt::is_zero) {
        return Err(Error::verification(format!("b{}", k + 1), "vanishes at p"));
    }
    let combo = |i: usize, j: usize| {
        b[j].scale(&b_at_p[i]).sub(&b[i].scale(&b_at_p[j]))
    };
    let theta = [combo(0, 1), combo(0, 2)];
    for (k, t) in theta.iter().enumerate() {
        if t.is_zero() || !t.evaluate(p).is_zero() {
            return Err(Error::verification(
                format!("vartheta{}", k + 1),
                "zero or not vanishing at p",
            ));
        }
    }
    Ok(W4Part { b, b_at_p, theta })
}
