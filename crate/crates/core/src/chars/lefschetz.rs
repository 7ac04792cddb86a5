//! Traces on H⁰(X, K^d) from fixed-point data, and their decompositions.

use super::table::{decompose, CharTable, ClassFn};
use crate::error::{Error, Result};
use crate::field::{CycElt, UnitRoot};
use crate::group::classes::class_index;
use crate::group::{ClassData, NUM_CLASSES};

pub const GENUS: i64 = 17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    X1,
    X2,
}

impl Curve {
    /// j in the fixed-point table.
    pub fn index(self) -> u32 {
        match self {
            Curve::X1 => 1,
            Curve::X2 => 2,
        }
    }
}

/// For each class, the rotation numbers dh_p at the fixed points (empty if none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub eigenvalues: [Vec<UnitRoot>; NUM_CLASSES],
}

impl FixedPointData {
    /// The tabulated data for X_j, read literally:
    /// 2B: eight times −1; 3A: (ω, ω, ω², ω²);
    /// 7A: (ζ^{3^j}, ζ^{2·3^j}, ζ^{4·3^j}); 7B: (ζ^{3^{j−1}}, ζ^{2·3^{j−1}}, ζ^{4·3^{j−1}}).
    pub fn table(curve: Curve) -> Self {
        let j = curve.index();
        let mut ev: [Vec<UnitRoot>; NUM_CLASSES] = Default::default();
        ev[class_index("2B").unwrap()] = vec![UnitRoot::new(true, 0); 8];
        ev[class_index("3A").unwrap()] = vec![
            UnitRoot::omega(false, 1),
            UnitRoot::omega(false, 1),
            UnitRoot::omega(false, 2),
            UnitRoot::omega(false, 2),
        ];
        let e7a = 3i64.pow(j);
        let e7b = 3i64.pow(j - 1);
        ev[class_index("7A").unwrap()] = [1, 2, 4]
            .iter()
            .map(|m| UnitRoot::zeta(false, e7a * m))
            .collect();
        ev[class_index("7B").unwrap()] = [1, 2, 4]
            .iter()
            .map(|m| UnitRoot::zeta(false, e7b * m))
            .collect();
        FixedPointData { eigenvalues: ev }
    }

    /// Exchange the 7A and 7B rows (a negative control).
    pub fn swapped_7a_7b(&self) -> Self {
        let mut out = self.clone();
        out.eigenvalues.swap(class_index("7A").unwrap(), class_index("7B").unwrap());
        out
    }

    pub fn count(&self, c: usize) -> usize {
        self.eigenvalues[c].len()
    }
}

/// Tr(h | H⁰(K^d)) per class: Σ λ^d/(1−λ) for d ≥ 2 and 1 + Σ λ/(1−λ) for d = 1;
/// at the identity, g for d = 1 and (2d−1)(g−1) for d ≥ 2.
pub fn h0_kd_trace(fp: &FixedPointData, d: u32, genus: i64) -> Result<ClassFn> {
    assert!(d >= 1, "d must be positive");
    let mut out = ClassFn::zero();
    out.0[0] = CycElt::from_int(h0_kd_dimension(d, genus));
    for c in 1..NUM_CLASSES {
        let mut acc = if d == 1 {
            CycElt::one()
        } else {
            CycElt::zero()
        };
        for &lam in &fp.eigenvalues[c] {
            if lam == UnitRoot::ONE {
                return Err(Error::MalformedFixedPoint(
                    crate::group::CLASS_LABELS[c].to_string(),
                ));
            }
            let lam_d = (0..d).fold(UnitRoot::ONE, |acc, _| acc * lam);
            let den = &CycElt::one() - &lam.to_cyc();
            acc += &lam_d.to_cyc().checked_div(&den)?;
        }
        out.0[c] = acc;
    }
    Ok(out)
}

/// Multiplicities of the irreducibles in H⁰(X, K^d) for the tabulated fixed-point data.
pub fn h0_kd_decompose(
    curve: Curve,
    d: u32,
    tbl: &CharTable,
    cls: &ClassData,
) -> Result<[u64; NUM_CLASSES]> {
    h0_kd_decompose_with(&FixedPointData::table(curve), d, tbl, cls)
}

pub fn h0_kd_decompose_with(
    fp: &FixedPointData,
    d: u32,
    tbl: &CharTable,
    cls: &ClassData,
) -> Result<[u64; NUM_CLASSES]> {
    decompose(&h0_kd_trace(fp, d, GENUS)?, tbl, cls)
}

/// dim H⁰(K^d) by Riemann–Roch.
pub fn h0_kd_dimension(d: u32, genus: i64) -> i64 {
    if d == 1 {
        genus
    } else {
        (2 * d as i64 - 1) * (genus - 1)
    }
}
