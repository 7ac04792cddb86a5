//! Dense matrices over an exact field.

use std::fmt;

use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let ot = o.transpose();
        Self::from_fn(self.rows, o.cols, |i, j| T::dot(self.row(i).iter().zip(ot.row(j))))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| T::dot(self.row(i).iter().zip(v)))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).add(o.get(i, j)))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).sub(o.get(i, j)))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let n = a.rows + b.rows;
        let m = a.cols + b.cols;
        Self::from_fn(n, m, |i, j| {
            if i < a.rows && j < a.cols {
                a.get(i, j).clone()
            } else if i >= a.rows && j >= a.cols {
                b.get(i - a.rows, j - a.cols).clone()
            } else {
                T::zero()
            }
        })
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let s = a.get(col, col).inv()?;
            for j in 0..n {
                let v = a.get(col, j).mul(&s);
                a.set(col, j, v);
                let w = inv.get(col, j).mul(&s);
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                    let w = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let (rank, det) = bareiss(self.clone());
        if rank < self.rows {
            T::zero()
        } else {
            det
        }
    }

    /// Coefficients c₀..c_n of det(λI − A), c_n = 1, by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Vec<T> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i).add(&coeffs[n - k + 1]);
                next.set(i, i, v);
            }
            let t = self.mul(&next).trace();
            let kinv = T::from_int(k as i64).inv().expect("k is invertible");
            coeffs[n - k] = t.mul(&kinv).neg();
            m = next;
        }
        coeffs
    }
}

/// Returns (rank, signed last pivot). The pivot equals the determinant when the matrix is
/// square and of full rank.
fn bareiss<T: Scalar>(mut a: Matrix<T>) -> (usize, T) {
    let (n, m) = (a.rows, a.cols);
    let mut prev = T::one();
    let mut sign = false;
    let mut rank = 0;
    for col in 0..m {
        if rank == n {
            break;
        }
        let Some(piv) = (rank..n).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if piv != rank {
            a.swap_rows(piv, rank);
            sign = !sign;
        }
        let p = a.get(rank, col).clone();
        let prev_inv = prev.inv().expect("nonzero pivot");
        for r in rank + 1..n {
            let f = a.get(r, col).clone();
            for j in col..m {
                let v = p
                    .mul(a.get(r, j))
                    .sub(&f.mul(a.get(rank, j)))
                    .mul(&prev_inv);
                a.set(r, j, v);
            }
        }
        prev = p;
        rank += 1;
    }
    (rank, if sign { prev.neg() } else { prev })
}

impl<T: Scalar + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CycElt;

    fn m(rows: &[&[i64]]) -> Matrix<CycElt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycElt::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]);
        assert_eq!(a.rank(), 2);
        assert!(a.determinant().is_zero());
        let b = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(b.determinant(), CycElt::from_int(1));
        let c = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(c.determinant(), CycElt::from_int(-1));
        assert!(b.mul(&b.inverse().unwrap()).is_identity());
    }

    #[test]
    fn char_poly_of_companion() {
        // Companion matrix of λ³ − 2λ + 5.
        let a = m(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        let cp = a.char_poly();
        let expect: Vec<CycElt> = [5, -2, 0, 1].iter().map(|&x| CycElt::from_int(x)).collect();
        assert_eq!(cp, expect);
    }
}
