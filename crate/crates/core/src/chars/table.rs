//! The character table of G and class-function arithmetic.

use std::ops::{Add, Index, Mul, Sub};

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::CycElt;
use crate::group::{ClassData, NUM_CLASSES};

/// Values on the 11 classes, in character-table column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFn(pub [CycElt; NUM_CLASSES]);

impl ClassFn {
    pub fn zero() -> Self {
        ClassFn(Default::default())
    }

    pub fn constant(x: CycElt) -> Self {
        ClassFn(std::array::from_fn(|_| x.clone()))
    }

    pub fn from_ints(v: [i64; NUM_CLASSES]) -> Self {
        ClassFn(v.map(CycElt::from_int))
    }

    pub fn conj(&self) -> Self {
        ClassFn(std::array::from_fn(|c| self.0[c].conj()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        ClassFn(std::array::from_fn(|c| self.0[c].scale(r)))
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &CycElt {
        &self.0[0]
    }
}

impl Index<usize> for ClassFn {
    type Output = CycElt;
    fn index(&self, c: usize) -> &CycElt {
        &self.0[c]
    }
}

impl Add for &ClassFn {
    type Output = ClassFn;
    fn add(self, o: &ClassFn) -> ClassFn {
        ClassFn(std::array::from_fn(|c| &self.0[c] + &o.0[c]))
    }
}

impl Sub for &ClassFn {
    type Output = ClassFn;
    fn sub(self, o: &ClassFn) -> ClassFn {
        ClassFn(std::array::from_fn(|c| &self.0[c] - &o.0[c]))
    }
}

impl Mul for &ClassFn {
    type Output = ClassFn;
    fn mul(self, o: &ClassFn) -> ClassFn {
        ClassFn(std::array::from_fn(|c| &self.0[c] * &o.0[c]))
    }
}

pub const DEGREES: [u64; NUM_CLASSES] = [1, 3, 3, 6, 7, 7, 7, 8, 14, 21, 21];

/// Integer entries; `None` marks the two β-valued entries on 7A, 7B.
const INT_ROWS: [[i64; 9]; NUM_CLASSES] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1],
    [3, 3, -1, -1, -1, 0, 0, 1, 1],
    [3, 3, -1, -1, -1, 0, 0, 1, 1],
    [6, 6, 2, 2, 2, 0, 0, 0, 0],
    [7, 7, -1, -1, -1, 1, 1, -1, -1],
    [7, -1, 3, -1, -1, 1, -1, 1, -1],
    [7, -1, -1, -1, 3, 1, -1, -1, 1],
    [8, 8, 0, 0, 0, -1, -1, 0, 0],
    [14, -2, 2, -2, 2, -1, 1, 0, 0],
    [21, -3, 1, 1, -3, 0, 0, -1, 1],
    [21, -3, -3, 1, 1, 0, 0, 1, -1],
];

/// Entries on (7A, 7B); β-values are encoded as 100 + j for β_j.
const SEVEN_COLS: [[i64; 2]; NUM_CLASSES] = [
    [1, 1],
    [103, 101],
    [101, 103],
    [-1, -1],
    [0, 0],
    [0, 0],
    [0, 0],
    [1, 1],
    [0, 0],
    [0, 0],
    [0, 0],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    rows: Vec<ClassFn>,
}

impl CharTable {
    /// The fixed table with β_j = ζʲ + ζ²ʲ + ζ⁴ʲ.
    pub fn builtin() -> Self {
        let rows = (0..NUM_CLASSES)
            .map(|i| {
                ClassFn(std::array::from_fn(|c| {
                    if c < 9 {
                        CycElt::from_int(INT_ROWS[i][c])
                    } else {
                        let v = SEVEN_COLS[i][c - 9];
                        if v >= 100 {
                            CycElt::beta(v - 100)
                        } else {
                            CycElt::from_int(v)
                        }
                    }
                }))
            })
            .collect();
        CharTable { rows }
    }

    pub fn from_rows(rows: Vec<ClassFn>) -> Self {
        assert_eq!(rows.len(), NUM_CLASSES);
        CharTable { rows }
    }

    /// χ_i for i in 1..=11.
    pub fn chi(&self, i: usize) -> &ClassFn {
        &self.rows[i - 1]
    }

    pub fn rows(&self) -> &[ClassFn] {
        &self.rows
    }

    pub fn degree(&self, i: usize) -> u64 {
        DEGREES[i - 1]
    }
}

/// ⟨f, g⟩ = |G|⁻¹ Σ_h f(h)·conj(g(h)).
pub fn inner_product(f: &ClassFn, g: &ClassFn, cls: &ClassData) -> CycElt {
    let mut acc = CycElt::zero();
    for c in 0..NUM_CLASSES {
        acc += &(&f[c] * &g[c].conj()).scale_int(cls.size(c) as i64);
    }
    acc.scale(&BigRational::new(1.into(), (cls.group_order() as i64).into()))
}

/// Character of S^d via χ_{S^d}(g) = d⁻¹ Σ_{k=1}^{d} χ(g^k) χ_{S^{d−k}}(g).
pub fn sym_power_character(chi: &ClassFn, d: u32, cls: &ClassData) -> ClassFn {
    sym_power_characters(chi, d, cls).pop().unwrap()
}

/// Characters of S⁰, S¹, …, S^d.
pub fn sym_power_characters(chi: &ClassFn, d: u32, cls: &ClassData) -> Vec<ClassFn> {
    let adams: Vec<ClassFn> = (1..=d as i64)
        .map(|k| ClassFn(std::array::from_fn(|c| chi[cls.power_class(c, k)].clone())))
        .collect();
    let mut out = vec![ClassFn::constant(CycElt::one())];
    for n in 1..=d as usize {
        let mut acc = ClassFn::zero();
        for k in 1..=n {
            acc = &acc + &(&adams[k - 1] * &out[n - k]);
        }
        out.push(acc.scale(&BigRational::new(1.into(), (n as i64).into())));
    }
    out
}

/// Multiplicities ⟨f, χ_i⟩, required to be nonnegative integers summing (with degrees) to f(1).
pub fn decompose(f: &ClassFn, tbl: &CharTable, cls: &ClassData) -> Result<[u64; NUM_CLASSES]> {
    let mut out = [0u64; NUM_CLASSES];
    for i in 1..=NUM_CLASSES {
        let m = inner_product(f, tbl.chi(i), cls);
        let n = m
            .as_integer()
            .ok_or(Error::NonIntegralMultiplicity { index: i })?;
        if n.is_negative() {
            return Err(Error::verification(
                format!("multiplicity of W{i}"),
                format!("negative value {n}"),
            ));
        }
        out[i - 1] = u64::try_from(&n).map_err(|_| Error::NonIntegralMultiplicity { index: i })?;
    }
    let dim: u64 = out.iter().zip(DEGREES.iter()).map(|(a, d)| a * d).sum();
    if CycElt::from_int(dim as i64) != *f.degree() {
        return Err(Error::verification(
            "decomposition",
            format!("dimension {dim} does not match f(1) = {}", f.degree()),
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CharTableReport {
    pub failures: Vec<String>,
    pub checks: usize,
}

impl CharTableReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Row and column orthogonality, degrees, Σ deg² = |G|, Galois consistency with the power map,
/// and integrality of the second and third Adams operations.
pub fn verify_character_table(tbl: &CharTable, cls: &ClassData) -> CharTableReport {
    let mut rep = CharTableReport::default();
    let n = NUM_CLASSES;
    for i in 1..=n {
        for j in 1..=n {
            let v = inner_product(tbl.chi(i), tbl.chi(j), cls);
            let expected = CycElt::from_int((i == j) as i64);
            rep.check(v == expected, || format!("<chi{i}, chi{j}> = {v}"));
        }
        rep.check(
            *tbl.chi(i).degree() == CycElt::from_int(tbl.degree(i) as i64),
            || format!("degree of chi{i}"),
        );
    }
    for a in 0..n {
        for b in 0..n {
            let s: CycElt = (1..=n)
                .map(|i| &tbl.chi(i)[a] * &tbl.chi(i)[b].conj())
                .sum();
            let expected = if a == b {
                CycElt::from_int((cls.group_order() / cls.size(a)) as i64)
            } else {
                CycElt::zero()
            };
            rep.check(s == expected, || {
                format!("column orthogonality ({}, {})", cls.label(a), cls.label(b))
            });
        }
    }
    let sq: u64 = DEGREES.iter().map(|d| d * d).sum();
    rep.check(sq as usize == cls.group_order(), || {
        format!("sum of squared degrees is {sq}")
    });
    for c in 0..n {
        let m = cls.class(c).element_order as i64;
        for k in 1..m {
            if num_integer::gcd(k, m) != 1 {
                continue;
            }
            let d = cls.power_class(c, k);
            let sigma = galois_exponent_for(k, m);
            for i in 1..=n {
                let ok = tbl.chi(i)[d] == tbl.chi(i)[c].galois(sigma);
                rep.check(ok, || {
                    format!("chi{i} at {}^{k} is not the Galois image", cls.label(c))
                });
            }
        }
    }
    for k in [2i64, 3] {
        for i in 1..=n {
            let adams = ClassFn(std::array::from_fn(|c| tbl.chi(i)[cls.power_class(c, k)].clone()));
            for j in 1..=n {
                let v = inner_product(&adams, tbl.chi(j), cls);
                rep.check(v.as_integer().is_some(), || {
                    format!("<psi^{k} chi{i}, chi{j}> = {v} is not an integer")
                });
            }
        }
    }
    rep
}

/// An exponent s coprime to 21 with ξ ↦ ξ^s acting on m-th roots of unity (m | 168) as ζ_m ↦ ζ_m^k,
/// restricted to the part of Q(ζ_m) lying in Q(ξ).
fn galois_exponent_for(k: i64, m: i64) -> u32 {
    let k7 = if m % 7 == 0 { k.rem_euclid(7) } else { 1 };
    let k3 = if m % 3 == 0 { k.rem_euclid(3) } else { 1 };
    (0..21)
        .find(|s| s % 7 == k7 && s % 3 == k3)
        .map(|s| s as u32)
        .expect("CRT solution exists")
}
