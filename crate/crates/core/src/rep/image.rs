//! Images of group elements on V = W₉ ⊕ W₂: a monomial 14×14 block and a dense 3×3 block.

use crate::error::{Error, Result};
use crate::field::{CycElt, UnitRoot};
use crate::linalg::Matrix;

/// A matrix with exactly one nonzero entry ±ξᵏ in each row and column.
/// Column j holds `cols[j].1` in row `cols[j].0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    cols: Vec<(usize, UnitRoot)>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial {
            cols: (0..n).map(|j| (j, UnitRoot::ONE)).collect(),
        }
    }

    /// From (row, column, entry) triples, 0-based.
    pub fn from_entries(entries: &[(usize, usize, UnitRoot)]) -> Result<Self> {
        let n = entries.len();
        let mut cols = vec![None; n];
        let mut row_seen = vec![false; n];
        for &(r, c, u) in entries {
            if r >= n || c >= n || row_seen[r] || cols[c].is_some() {
                return Err(Error::parse("not a monomial matrix"));
            }
            row_seen[r] = true;
            cols[c] = Some((r, u));
        }
        Ok(Monomial {
            cols: cols.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// (row, entry) of column j.
    #[inline]
    pub fn col(&self, j: usize) -> (usize, UnitRoot) {
        self.cols[j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial {
            cols: o
                .cols
                .iter()
                .map(|&(r, u)| {
                    let (r2, u2) = self.cols[r];
                    (r2, u2 * u)
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut cols = vec![(0, UnitRoot::ONE); self.dim()];
        for (j, &(r, u)) in self.cols.iter().enumerate() {
            cols[r] = (j, u.inv());
        }
        Monomial { cols }
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![(0, UnitRoot::ONE); self.dim()];
        for (j, &(r, u)) in self.cols.iter().enumerate() {
            cols[r] = (j, u);
        }
        Monomial { cols }
    }

    pub fn trace(&self) -> CycElt {
        self.cols
            .iter()
            .enumerate()
            .filter(|(j, (r, _))| j == r)
            .map(|(_, (_, u))| u.to_cyc())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, &(r, u))| j == r && u == UnitRoot::ONE)
    }

    pub fn to_dense(&self) -> Matrix<CycElt> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (j, &(r, u)) in self.cols.iter().enumerate() {
            m.set(r, j, u.to_cyc());
        }
        m
    }
}

/// Block-diagonal image diag(W₉ block, W₂ block).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepImage {
    pub w9: Monomial,
    pub w2: Matrix<CycElt>,
}

pub const DIM: usize = 17;
pub const DIM_W9: usize = 14;

impl RepImage {
    pub fn identity() -> Self {
        RepImage {
            w9: Monomial::identity(DIM_W9),
            w2: Matrix::identity(3),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RepImage {
            w9: self.w9.mul(&o.w9),
            w2: self.w2.mul(&o.w2),
        }
    }

    pub fn inverse(&self) -> Self {
        RepImage {
            w9: self.w9.inverse(),
            w2: self.w2.inverse().expect("invertible block"),
        }
    }

    pub fn transpose(&self) -> Self {
        RepImage {
            w9: self.w9.transpose(),
            w2: self.w2.transpose(),
        }
    }

    /// (Mᵀ)⁻¹, the action on the dual space in the dual basis.
    pub fn dual(&self) -> Self {
        self.inverse().transpose()
    }

    pub fn trace(&self) -> CycElt {
        &self.w9.trace() + &self.w2.trace()
    }

    pub fn is_identity(&self) -> bool {
        self.w9.is_identity() && self.w2.is_identity()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn to_dense(&self) -> Matrix<CycElt> {
        Matrix::block_diag(&self.w9.to_dense(), &self.w2)
    }

    /// Column j of the full 17×17 matrix as sparse (row, value) pairs.
    pub fn column(&self, j: usize) -> Vec<(usize, CycElt)> {
        if j < DIM_W9 {
            let (r, u) = self.w9.col(j);
            vec![(r, u.to_cyc())]
        } else {
            (0..3)
                .filter(|&i| !self.w2.get(i, j - DIM_W9).is_zero())
                .map(|i| (DIM_W9 + i, self.w2.get(i, j - DIM_W9).clone()))
                .collect()
        }
    }
}
