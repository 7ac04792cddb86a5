//! Entries of the generator matrices on V = W₉ ⊕ W₂ and of the outer automorphism E.

use crate::field::{CycElt, UnitRoot};
use crate::linalg::Matrix;

use super::image::Monomial;

/// Row i of a 14×14 monomial matrix: (column, sign is negative, exponent of ω).
type MonoRows = [(usize, bool, i64); 14];

const P_W9: MonoRows = [
    (14, false, 2),
    (13, false, 1),
    (7, false, 0),
    (8, false, 0),
    (9, true, 2),
    (10, true, 1),
    (5, true, 2),
    (6, true, 1),
    (2, true, 2),
    (1, true, 1),
    (3, false, 1),
    (4, false, 2),
    (11, true, 1),
    (12, true, 2),
];

const Q_W9: MonoRows = [
    (8, false, 0),
    (7, false, 0),
    (9, false, 0),
    (10, false, 0),
    (6, false, 2),
    (5, false, 1),
    (14, true, 1),
    (13, true, 2),
    (4, true, 2),
    (3, true, 1),
    (2, true, 2),
    (1, true, 1),
    (12, true, 0),
    (11, true, 0),
];

const E_W9: MonoRows = [
    (7, false, 0),
    (8, true, 0),
    (4, false, 2),
    (3, true, 1),
    (6, true, 2),
    (5, false, 1),
    (1, true, 0),
    (2, false, 0),
    (9, true, 0),
    (10, false, 0),
    (13, true, 1),
    (14, false, 2),
    (11, true, 2),
    (12, false, 1),
];

/// A polynomial in ζ as (coefficient, exponent) terms.
type ZetaPoly = &'static [(i64, i64)];

const Q_W2: [[ZetaPoly; 3]; 3] = [
    [&[(1, 4), (-1, 6)], &[(-1, 0), (1, 3)], &[(1, 1), (-1, 2)]],
    [&[(-1, 1), (1, 4)], &[(1, 2), (-1, 3)], &[(-1, 0), (1, 5)]],
    [&[(-1, 0), (1, 6)], &[(1, 2), (-1, 4)], &[(1, 1), (-1, 5)]],
];

const E_W2: [[ZetaPoly; 3]; 3] = [
    [&[(1, 1), (-1, 6)], &[(-1, 2), (1, 6)], &[(-1, 2), (1, 3)]],
    [&[(-1, 1), (1, 5)], &[(-1, 3), (1, 4)], &[(-1, 1), (1, 3)]],
    [&[(-1, 4), (1, 5)], &[(-1, 4), (1, 6)], &[(1, 2), (-1, 5)]],
];

fn mono(rows: &MonoRows) -> Monomial {
    let entries: Vec<(usize, usize, UnitRoot)> = rows
        .iter()
        .enumerate()
        .map(|(r, &(c, neg, w))| (r, c - 1, UnitRoot::omega(neg, w)))
        .collect();
    Monomial::from_entries(&entries).expect("built-in monomial matrix")
}

fn zeta_poly(terms: ZetaPoly) -> CycElt {
    terms
        .iter()
        .map(|&(c, e)| CycElt::zeta(e).scale_int(c))
        .sum()
}

/// (1/√−7)·M for a table of ζ-polynomials.
fn scaled_by_inv_sqrt7(t: &[[ZetaPoly; 3]; 3]) -> Matrix<CycElt> {
    let s = CycElt::sqrt_minus_seven().inv().unwrap();
    Matrix::from_fn(3, 3, |i, j| &zeta_poly(t[i][j]) * &s)
}

pub fn p_w9() -> Monomial {
    mono(&P_W9)
}

pub fn q_w9() -> Monomial {
    mono(&Q_W9)
}

pub fn e_w9() -> Monomial {
    mono(&E_W9)
}

pub fn p_w2() -> Matrix<CycElt> {
    Matrix::from_fn(3, 3, |i, j| {
        if i == j {
            CycElt::zeta([3, 5, 6][i])
        } else {
            CycElt::zero()
        }
    })
}

pub fn q_w2() -> Matrix<CycElt> {
    scaled_by_inv_sqrt7(&Q_W2)
}

pub fn e_w2() -> Matrix<CycElt> {
    scaled_by_inv_sqrt7(&E_W2)
}
