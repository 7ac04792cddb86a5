//! Characteristic polynomials of the order-7 element and the outer automorphism.

use num_rational::BigRational;
use serde::Serialize;

use super::builtin::{e_w2, e_w9};
use super::{FullRep, RepImage};
use crate::chars::CharTable;
use crate::error::{Error, Result};
use crate::field::CycElt;
use crate::group::{ClassData, GroupTable, Letter};

/// Polynomials in λ, coefficients from the constant term up.
pub type Poly = Vec<CycElt>;

pub fn poly_mul(a: &[CycElt], b: &[CycElt]) -> Poly {
    let mut out = vec![CycElt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn linear(root: &CycElt) -> Poly {
    vec![-root, CycElt::one()]
}

fn lambda7_minus_1() -> Poly {
    let mut p = vec![CycElt::zero(); 8];
    p[0] = CycElt::from_int(-1);
    p[7] = CycElt::one();
    p
}

fn product_of_roots(exps: &[i64]) -> Poly {
    exps.iter()
        .fold(vec![CycElt::one()], |acc, &e| poly_mul(&acc, &linear(&CycElt::zeta(e))))
}

/// The published characteristic polynomial of h ∈ 7B on W_i (i = 2..=11).
pub fn expected_char_poly(i: usize) -> Poly {
    let l7 = lambda7_minus_1();
    match i {
        2 => product_of_roots(&[1, 2, 4]),
        3 => product_of_roots(&[3, 5, 6]),
        4 => vec![CycElt::one(); 7],
        5..=7 => l7,
        8 => poly_mul(&l7, &linear(&CycElt::one())),
        9 => poly_mul(&l7, &l7),
        10 | 11 => poly_mul(&poly_mul(&l7, &l7), &l7),
        _ => panic!("no published polynomial for W{i}"),
    }
}

/// Multiplicity of ζʲ as an eigenvalue of h on W_i: (1/7) Σ_k ζ^{−jk} χ_i(h^k).
pub fn eigen_multiplicities(
    tbl: &CharTable,
    cls: &ClassData,
    i: usize,
    class_of_h: usize,
) -> Result<[u64; 7]> {
    let mut out = [0u64; 7];
    for (j, slot) in out.iter_mut().enumerate() {
        let s: CycElt = (0..7i64)
            .map(|k| &CycElt::zeta(-(j as i64) * k) * &tbl.chi(i)[cls.power_class(class_of_h, k)])
            .sum();
        let m = s.scale(&BigRational::new(1.into(), 7.into()));
        let n = m
            .as_integer()
            .and_then(|n| u64::try_from(n).ok())
            .ok_or(Error::NonIntegralMultiplicity { index: i })?;
        *slot = n;
    }
    Ok(out)
}

pub fn char_poly_from_multiplicities(m: &[u64; 7]) -> Poly {
    let mut p = vec![CycElt::one()];
    for (j, &k) in m.iter().enumerate() {
        for _ in 0..k {
            p = poly_mul(&p, &linear(&CycElt::zeta(j as i64)));
        }
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct CharPolyRow {
    pub module: String,
    pub route: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharPolyReport {
    pub rows: Vec<CharPolyRow>,
    pub det_h7b_is_one: bool,
}

impl CharPolyReport {
    pub fn passed(&self) -> bool {
        self.det_h7b_is_one && self.rows.iter().all(|r| r.passed)
    }
}

/// W₉ and W₂ from the explicit blocks of h; W₂..W₁₁ from eigenvalue multiplicities of the characters.
pub fn verify_char_polys(
    rep: &FullRep,
    tbl: &CharTable,
    cls: &ClassData,
    h: usize,
) -> Result<CharPolyReport> {
    let img = rep.image(h);
    let mut rows = Vec::new();
    let w9 = img.w9.to_dense().char_poly();
    rows.push(CharPolyRow {
        module: "W9".into(),
        route: "matrix".into(),
        passed: w9 == expected_char_poly(9),
    });
    let w2 = img.w2.char_poly();
    rows.push(CharPolyRow {
        module: "W2".into(),
        route: "matrix".into(),
        passed: w2 == expected_char_poly(2),
    });
    let ch = cls.class_of(h);
    for i in 2..=11 {
        let m = eigen_multiplicities(tbl, cls, i, ch)?;
        rows.push(CharPolyRow {
            module: format!("W{i}"),
            route: "character".into(),
            passed: char_poly_from_multiplicities(&m) == expected_char_poly(i),
        });
    }
    let det = &img.w9.to_dense().determinant() * &img.w2.determinant();
    Ok(CharPolyReport {
        rows,
        det_h7b_is_one: det.is_one(),
    })
}

pub fn e_matrix() -> RepImage {
    RepImage {
        w9: e_w9(),
        w2: e_w2(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OuterAutReport {
    /// Elements whose images are E·M(P)·E⁻¹ and E·M(Q)·E⁻¹.
    pub p_image: Option<usize>,
    pub q_image: Option<usize>,
    /// No inner automorphism sends (P, Q) to the pair above.
    pub non_inner: bool,
    /// Informational: whether E² itself is the image of an element.
    pub e_squared_in_image: bool,
}

impl OuterAutReport {
    pub fn passed(&self) -> bool {
        self.p_image.is_some() && self.q_image.is_some() && self.non_inner
    }
}

/// Whether conjugation by `m` normalises the image of G, and if so whether it is outer.
pub fn conjugation_check(rep: &FullRep, table: &GroupTable, m: &RepImage) -> OuterAutReport {
    let index = rep.image_index();
    let m_inv = m.inverse();
    let conj = |x: &RepImage| m.mul(x).mul(&m_inv);
    let p = table.letter_index(Letter::P);
    let q = table.letter_index(Letter::Q);
    let p_image = index.get(&conj(rep.image(p))).copied();
    let q_image = index.get(&conj(rep.image(q))).copied();
    let non_inner = match (p_image, q_image) {
        (Some(a), Some(b)) => !(0..table.order())
            .any(|g| table.conjugate(p, g) == a && table.conjugate(q, g) == b),
        _ => false,
    };
    OuterAutReport {
        p_image,
        q_image,
        non_inner,
        e_squared_in_image: index.contains_key(&m.mul(m)),
    }
}

pub fn outer_automorphism_check(rep: &FullRep, table: &GroupTable) -> OuterAutReport {
    conjugation_check(rep, table, &e_matrix())
}
