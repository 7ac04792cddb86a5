//! Recomputing the published multiplicity tables and rendering them.

use serde::Serialize;

use super::lefschetz::{h0_kd_decompose_with, Curve, FixedPointData};
use super::reference::TableId;
use super::table::{decompose, sym_power_characters, CharTable, ClassFn};
use crate::error::Result;
use crate::group::{ClassData, NUM_CLASSES};

#[derive(Clone, Debug, Serialize)]
pub struct TableComparison {
    pub key: String,
    pub caption: String,
    pub degrees: Vec<u32>,
    /// computed[k][i] = a_{i+1}(degrees[k]).
    pub computed: Vec<[u64; NUM_CLASSES]>,
    pub expected: Vec<[u64; NUM_CLASSES]>,
    pub mismatches: Vec<String>,
    pub passed: bool,
}

impl TableComparison {
    fn new(id: TableId, degrees: Vec<u32>, computed: Vec<[u64; NUM_CLASSES]>) -> Self {
        let expected: Vec<[u64; NUM_CLASSES]> = degrees
            .iter()
            .map(|&d| id.column(d).expect("degree within the published range"))
            .collect();
        let mut mismatches = Vec::new();
        for (k, &d) in degrees.iter().enumerate() {
            for i in 0..NUM_CLASSES {
                if computed[k][i] != expected[k][i] {
                    mismatches.push(format!(
                        "a_{}({d}): computed {}, published {}",
                        i + 1,
                        computed[k][i],
                        expected[k][i]
                    ));
                }
            }
        }
        TableComparison {
            key: id.key().into(),
            caption: id.caption().into(),
            degrees,
            computed,
            expected,
            passed: mismatches.is_empty(),
            mismatches,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("# {}\nrow", self.caption);
        for d in &self.degrees {
            s.push_str(&format!(",d={d}"));
        }
        s.push('\n');
        for i in 0..NUM_CLASSES {
            s.push_str(&format!("a_{}", i + 1));
            for col in &self.computed {
                s.push_str(&format!(",{}", col[i]));
            }
            s.push('\n');
        }
        s.push_str(&format!("# {}\n", if self.passed { "PASS" } else { "FAIL" }));
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n{:>6}", self.caption, "d");
        for d in &self.degrees {
            s.push_str(&format!("{d:>7}"));
        }
        s.push('\n');
        for i in 0..NUM_CLASSES {
            s.push_str(&format!("{:>6}", format!("a_{}", i + 1)));
            for col in &self.computed {
                s.push_str(&format!("{:>7}", col[i]));
            }
            s.push('\n');
        }
        s.push_str(if self.passed {
            "PASS: matches the published table\n"
        } else {
            "FAIL: differs from the published table\n"
        });
        for m in &self.mismatches {
            s.push_str(&format!("  {m}\n"));
        }
        s
    }
}

pub fn reproduce_h0_with(
    id: TableId,
    fp: &FixedPointData,
    degrees: &[u32],
    tbl: &CharTable,
    cls: &ClassData,
) -> Result<TableComparison> {
    let computed = degrees
        .iter()
        .map(|&d| h0_kd_decompose_with(fp, d, tbl, cls))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableComparison::new(id, degrees.to_vec(), computed))
}

pub fn reproduce_h0(
    curve: Curve,
    degrees: &[u32],
    tbl: &CharTable,
    cls: &ClassData,
) -> Result<TableComparison> {
    let id = match curve {
        Curve::X1 => TableId::H0X1,
        Curve::X2 => TableId::H0X2,
    };
    reproduce_h0_with(id, &FixedPointData::table(curve), degrees, tbl, cls)
}

/// The base character whose symmetric powers a table records.
pub fn sym_base(id: TableId, tbl: &CharTable) -> Option<ClassFn> {
    Some(match id {
        TableId::SymW9W2 => tbl.chi(9) + tbl.chi(2),
        TableId::SymW9W3 => tbl.chi(9) + tbl.chi(3),
        TableId::SymW9 => tbl.chi(9).clone(),
        TableId::SymW2 => tbl.chi(2).clone(),
        TableId::SymW3 => tbl.chi(3).clone(),
        TableId::H0X1 | TableId::H0X2 => return None,
    })
}

pub fn reproduce_sym(
    id: TableId,
    degrees: &[u32],
    tbl: &CharTable,
    cls: &ClassData,
) -> Result<TableComparison> {
    let base = sym_base(id, tbl).expect("a symmetric-power table");
    let top = degrees.iter().copied().max().unwrap_or(0);
    let chars = sym_power_characters(&base, top, cls);
    let computed = degrees
        .iter()
        .map(|&d| decompose(&chars[d as usize], tbl, cls))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableComparison::new(id, degrees.to_vec(), computed))
}

/// Every published column of `id`.
pub fn reproduce_all(id: TableId, tbl: &CharTable, cls: &ClassData) -> Result<TableComparison> {
    let degrees: Vec<u32> = (0..id.num_columns() as u32).map(|k| k + id.first_d()).collect();
    match id {
        TableId::H0X1 => reproduce_h0(Curve::X1, &degrees, tbl, cls),
        TableId::H0X2 => reproduce_h0(Curve::X2, &degrees, tbl, cls),
        _ => reproduce_sym(id, &degrees, tbl, cls),
    }
}
