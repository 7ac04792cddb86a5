//! The ζ²-eigenquadric of h_7B in the W₈-part and the fixed point p of h_7B on the curve.

use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::serial::ext_to_string;
use crate::field::{alpha_constant, CycElt, ExtElt};
use crate::poly::PolyVec;
use crate::rep::DIM;

/// ρ(h_7B)_{ζ²}(π_{W₈}(y₁²)).
pub fn q_zeta2(ctx: &Context) -> Result<PolyVec> {
    let q = ctx.rho(2, &ctx.pi(8, &PolyVec::y(&[1, 1])));
    if q.is_zero() {
        return Err(Error::verification("q_zeta2", "projection of y1^2 vanishes"));
    }
    Ok(q)
}

/// Coefficients of q(α·v₁ + v₂ + v₃) = A·α² + B·α + C and its monic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaEquation {
    pub leading: CycElt,
    pub linear: CycElt,
    pub constant: CycElt,
    /// C/A; the root α satisfies α² + C/A = 0 when B = 0.
    pub monic_constant: CycElt,
}

#[derive(Serialize)]
struct AlphaEquationRecord {
    leading: String,
    linear: String,
    constant: String,
    monic_constant: String,
    linear_term_vanishes: bool,
}

impl AlphaEquation {
    pub fn to_json(&self) -> serde_json::Value {
        let s = |x: &CycElt| x.to_string();
        serde_json::to_value(AlphaEquationRecord {
            leading: s(&self.leading),
            linear: s(&self.linear),
            constant: s(&self.constant),
            monic_constant: s(&self.monic_constant),
            linear_term_vanishes: self.linear.is_zero(),
        })
        .expect("plain record")
    }
}

/// Which square root of −c the point uses. Only the root α itself is built; the
/// other root gives a projectively equivalent curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlphaRoot {
    Alpha,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    /// Coordinates in the basis e₁…e₁₇ of V*.
    pub coords: Vec<ExtElt>,
    pub root: AlphaRoot,
}

impl CurvePoint {
    pub fn to_lines(&self) -> Vec<String> {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| format!("e{} {}", i + 1, ext_to_string(c)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct FixedPoint {
    pub q_zeta2: PolyVec,
    /// v₁, v₂, v₃: ζ⁶-eigenprojections of e₁, e₂, e₁₇ under the dual action.
    pub v: [Vec<ExtElt>; 3],
    pub equation: AlphaEquation,
    pub point: CurvePoint,
}

fn unit_vector(i: usize) -> Vec<ExtElt> {
    let mut v = vec![ExtElt::zero(); DIM];
    v[i - 1] = ExtElt::one();
    v
}

fn add(a: &[ExtElt], b: &[ExtElt]) -> Vec<ExtElt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Solve for p = α·v₁ + v₂ + v₃ on the quadric q_{ζ²} and check the constant of the
/// resulting equation against the tabulated value of c.
pub fn find_fixed_point(ctx: &Context) -> Result<FixedPoint> {
    let q = q_zeta2(ctx)?;
    let v = [1, 2, 17].map(|i| ctx.rho_dual(6, &unit_vector(i)));
    for (k, vk) in v.iter().enumerate() {
        if vk.iter().all(ExtElt::is_zero) {
            return Err(Error::verification("fixed point", format!("v{} vanishes", k + 1)));
        }
    }
    let w = add(&v[1], &v[2]);
    let a = q.evaluate(&v[0]);
    let c = q.evaluate(&w);
    let b = &(&q.evaluate(&add(&v[0], &w)) - &a) - &c;
    let (a, b, c) = (a.a().clone(), b.a().clone(), c.a().clone());
    if a.is_zero() {
        return Err(Error::DegenerateExtension(
            "q(v1) = 0, the equation for alpha has no quadratic term".into(),
        ));
    }
    let monic_constant = c.checked_div(&a)?;
    let equation = AlphaEquation {
        leading: a,
        linear: b,
        constant: c,
        monic_constant,
    };
    if !equation.linear.is_zero() {
        return Err(Error::verification(
            "alpha equation",
            format!("linear term {} is nonzero", equation.linear),
        ));
    }
    if &equation.monic_constant != alpha_constant() {
        return Err(Error::verification(
            "alpha equation",
            format!(
                "constant term {} differs from the tabulated value {}",
                equation.monic_constant,
                alpha_constant()
            ),
        ));
    }
    let alpha = ExtElt::alpha();
    let coords: Vec<ExtElt> = v[0]
        .iter()
        .zip(&w)
        .map(|(x, y)| &(&alpha * x) + y)
        .collect();
    let point = CurvePoint {
        coords,
        root: AlphaRoot::Alpha,
    };
    if !q.evaluate(&point.coords).is_zero() {
        return Err(Error::verification("fixed point", "q_zeta2(p) is nonzero"));
    }
    Ok(FixedPoint {
        q_zeta2: q,
        v,
        equation,
        point,
    })
}
