//! Linear algebra over F_p for p < 2³¹.

use crate::field::modp::{inv_mod, mul_mod, MAX_PRIME};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        assert!(p < MAX_PRIME);
        ModMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(p: u64, cols: usize, rows: Vec<Vec<u64>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        let n = rows.len();
        ModMatrix {
            p,
            rows: n,
            cols,
            data: rows.into_iter().flatten().map(|x| x % p).collect(),
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row.iter().map(|x| x % self.p));
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Product with delayed reduction: residues are below 2³¹, so products fit in 62 bits
    /// and each product is reduced before accumulation.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        assert_eq!(self.p, o.p);
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, o.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (x, &b) in acc.iter_mut().zip(o.row(k)) {
                    *x = (*x + a * b) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.p, (0..self.rows).map(|i| self.row(i).to_vec()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Rank of a list of rows over F_p.
pub fn rank_of_rows(p: u64, rows: Vec<Vec<u64>>) -> usize {
    row_basis(p, rows).len()
}

/// A basis of the row span in echelon form (pivot entries 1), by dense elimination.
///
/// Entries are reduced lazily: each row absorbs as many multiples of pivot rows as fit in a
/// u64 before it is reduced again, which for primes near 2²⁰ means almost never.
pub fn row_basis(p: u64, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    use rayon::prelude::*;
    let Some(n) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let limit = ((u64::MAX - p) / ((p - 1) * (p - 1))).max(1) as u32;
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x %= p;
        }
    }
    let mut pending: Vec<(Vec<u64>, u32)> = rows.drain(..).map(|r| (r, 0)).collect();
    let mut basis = Vec::new();
    for col in 0..n {
        let Some(pos) = pending.iter().position(|(r, _)| r[col] % p != 0) else {
            continue;
        };
        let (mut piv, _) = pending.swap_remove(pos);
        for x in piv[col..].iter_mut() {
            *x %= p;
        }
        let inv = inv_mod(piv[col], p).expect("nonzero pivot");
        for x in piv[col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        pending.par_iter_mut().for_each(|(r, count)| {
            let f = r[col] % p;
            if f == 0 {
                return;
            }
            let g = p - f;
            for (x, &y) in r[col..].iter_mut().zip(&piv[col..]) {
                *x += g * y;
            }
            *count += 1;
            if *count >= limit {
                for x in r[col..].iter_mut() {
                    *x %= p;
                }
                *count = 0;
            }
        });
        for x in piv[..col].iter_mut() {
            *x %= p;
        }
        basis.push(piv);
    }
    basis
}

/// Incrementally maintained row-echelon basis of a subspace of F_pⁿ.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    n: usize,
    /// Normalised rows (pivot entry 1), with their pivot columns.
    rows: Vec<(usize, Vec<u64>)>,
    pivot_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(p: u64, n: usize) -> Self {
        Echelon {
            p,
            n,
            rows: Vec::new(),
            pivot_of_col: vec![None; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Reduce v against the basis in place; returns whether anything is left.
    pub fn reduce(&self, v: &mut [u64]) -> bool {
        let p = self.p;
        let mut nonzero = false;
        for j in 0..self.n {
            let c = v[j] % p;
            v[j] = c;
            if c == 0 {
                continue;
            }
            match self.pivot_of_col[j] {
                Some(r) => {
                    let row = &self.rows[r].1;
                    let f = p - c;
                    for k in j..self.n {
                        if row[k] != 0 {
                            v[k] = (v[k] + f * row[k]) % p;
                        }
                    }
                }
                None => nonzero = true,
            }
        }
        nonzero
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        !self.reduce(&mut w)
    }

    /// Add v to the span; returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.n);
        if !self.reduce(&mut v) {
            return false;
        }
        let j = v.iter().position(|&x| x != 0).unwrap();
        let inv = inv_mod(v[j], self.p).unwrap();
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        self.pivot_of_col[j] = Some(self.rows.len());
        self.rows.push((j, v));
        true
    }

    /// Basis rows (pivot-normalised, not fully reduced).
    pub fn basis(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let p = 1048783;
        let m = ModMatrix::from_rows(p, 3, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(ModMatrix::identity(p, 5).rank(), 5);
        assert_eq!(ModMatrix::zeros(p, 4, 4).rank(), 0);
        let prod = m.mul(&ModMatrix::identity(p, 3));
        assert_eq!(prod, m);
    }

    #[test]
    fn echelon_membership() {
        let p = 101;
        let mut e = Echelon::new(p, 3);
        assert!(e.insert(vec![0, 1, 2]));
        assert!(e.insert(vec![1, 0, 0]));
        assert!(!e.insert(vec![3, 2, 4]));
        assert!(e.contains(&[5, 3, 6]));
        assert!(!e.contains(&[0, 0, 1]));
    }
}
