//! Spans of polynomials and their rank, exactly or through reductions mod p.

use serde::Serialize;

use super::mono::basis;
use super::polyvec::PolyVec;
use crate::error::{Error, Result};
use crate::field::{ExtElt, PrimeEmbedding};
use crate::linalg::{rank_of_rows, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeRank {
    pub p: u64,
    /// None when the prime divides a denominator and was skipped.
    pub rank: Option<usize>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    /// The exact rank, or in modular mode the largest rank seen (a lower bound).
    pub rank: usize,
    pub exact: bool,
    pub per_prime: Vec<PrimeRank>,
    pub primes_agree: bool,
}

impl RankCertificate {
    /// Number of primes that produced a rank.
    pub fn primes_used(&self) -> usize {
        self.per_prime.iter().filter(|r| r.rank.is_some()).count()
    }
}

#[derive(Clone, Debug)]
pub enum RankMode {
    Exact,
    Modular(Vec<PrimeEmbedding>),
}

#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    deg: usize,
    elems: Vec<PolyVec>,
    cached: Option<RankCertificate>,
}

impl SubspaceBasis {
    pub fn new(deg: usize, elems: Vec<PolyVec>) -> Result<Self> {
        if let Some(f) = elems.iter().find(|f| !f.is_zero() && f.degree() != deg) {
            return Err(Error::verification(
                "subspace",
                format!("element of degree {} in a degree-{deg} span", f.degree()),
            ));
        }
        Ok(SubspaceBasis {
            deg,
            elems,
            cached: None,
        })
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn elems(&self) -> &[PolyVec] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn cached_rank(&self) -> Option<&RankCertificate> {
        self.cached.as_ref()
    }

    /// Coordinates in the monomial basis, one row per element.
    pub fn coordinate_matrix(&self) -> Matrix<ExtElt> {
        let b = basis(self.deg);
        Matrix::from_rows(self.elems.iter().map(|f| f.to_dense(b)).collect())
    }

    pub fn reduce(&self, emb: &PrimeEmbedding) -> Result<Vec<Vec<u64>>> {
        let b = basis(self.deg);
        self.elems.iter().map(|f| f.reduce(emb, b)).collect()
    }

    pub fn rank(&self, mode: &RankMode) -> Result<RankCertificate> {
        if self.elems.is_empty() {
            return Ok(RankCertificate {
                rank: 0,
                exact: true,
                per_prime: Vec::new(),
                primes_agree: true,
            });
        }
        match mode {
            RankMode::Exact => Ok(RankCertificate {
                rank: self.coordinate_matrix().rank(),
                exact: true,
                per_prime: Vec::new(),
                primes_agree: true,
            }),
            RankMode::Modular(primes) => {
                let per_prime: Vec<PrimeRank> = primes
                    .iter()
                    .map(|emb| match self.reduce(emb) {
                        Ok(rows) => PrimeRank {
                            p: emb.p(),
                            rank: Some(rank_of_rows(emb.p(), rows)),
                            note: None,
                        },
                        Err(e) => PrimeRank {
                            p: emb.p(),
                            rank: None,
                            note: Some(e.to_string()),
                        },
                    })
                    .collect();
                certificate_from(per_prime)
            }
        }
    }

    /// Compute the rank and remember it.
    pub fn certify(&mut self, mode: &RankMode) -> Result<&RankCertificate> {
        let c = self.rank(mode)?;
        Ok(self.cached.insert(c))
    }
}

/// Combine per-prime ranks; fails if no prime was usable.
pub fn certificate_from(per_prime: Vec<PrimeRank>) -> Result<RankCertificate> {
    let ranks: Vec<usize> = per_prime.iter().filter_map(|r| r.rank).collect();
    let Some(&max) = ranks.iter().max() else {
        return Err(Error::verification("rank", "no usable prime"));
    };
    Ok(RankCertificate {
        rank: max,
        exact: false,
        primes_agree: ranks.iter().all(|&r| r == max),
        per_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_span() {
        let f = vec![
            PolyVec::y(&[1, 1]),
            PolyVec::y(&[2, 2]),
            PolyVec::y(&[1, 1]).add(&PolyVec::y(&[2, 2])),
        ];
        let s = SubspaceBasis::new(2, f).unwrap();
        assert_eq!(s.rank(&RankMode::Exact).unwrap().rank, 2);
        let m = s.rank(&RankMode::Modular(PrimeEmbedding::auto(2))).unwrap();
        assert_eq!(m.rank, 2);
        assert!(m.primes_agree);
    }
}
