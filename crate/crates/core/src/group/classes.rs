//! Conjugacy classes, power maps and normalizers.

use serde::Serialize;

use super::perm::Perm;
use super::table::GroupTable;
use crate::error::{Error, Result};

pub const NUM_CLASSES: usize = 11;

/// Class labels in character-table column order.
pub const CLASS_LABELS: [&str; NUM_CLASSES] =
    ["1A", "2A", "4A", "2B", "4B", "3A", "6A", "8A", "8B", "7A", "7B"];

/// A representative of each class, in cycle notation.
pub const CLASS_REPS: [&str; NUM_CLASSES] = [
    "()",
    "( 4, 7)( 5, 9)( 8,12)(10,13)",
    "( 4, 5, 7, 9)( 8,10,12,13)",
    "( 2, 6)( 4, 9)( 5, 7)( 8,13)(10,12)(11,14)",
    "( 1, 3)( 4, 5, 7, 9)( 8,13,12,10)(11,14)",
    "( 2, 4, 5)( 6, 7, 9)( 8,10,11)(12,13,14)",
    "( 1, 3)( 2, 4, 5)( 6, 7, 9)( 8,13,11,12,10,14)",
    "( 2, 4,14,12, 6, 7,11, 8)( 5,13, 9,10)",
    "( 1, 3)( 2, 4,11,12, 6, 7,14, 8)( 5,10)( 9,13)",
    "( 1, 2, 4, 8,13,11, 5)( 3, 6, 7,12,10,14, 9)",
    "( 1, 8, 5, 4,11, 2,13)( 3,12, 9, 7,14, 6,10)",
];

/// |N_G(⟨h⟩)| for each class representative.
pub const NORMALIZER_ORDERS: [usize; NUM_CLASSES] = [1344, 192, 64, 16, 64, 12, 12, 32, 32, 21, 21];

pub fn class_index(label: &str) -> Option<usize> {
    CLASS_LABELS.iter().position(|&l| l == label)
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: &'static str,
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u32,
}

#[derive(Clone, Debug)]
pub struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<u8>,
    /// powers[c][k] = class of xᵏ for x in class c, 0 ≤ k < element order.
    powers: Vec<Vec<usize>>,
    group_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub label: String,
    pub representative: String,
    pub size: usize,
    pub normalizer_order: usize,
}

impl ClassData {
    /// Partition the group into conjugacy classes and label them via the tabulated
    /// representatives. Classes with equal cycle type are told apart by membership only.
    pub fn compute(table: &GroupTable) -> Result<Self> {
        let n = table.order();
        let mut class_of = vec![u8::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != u8::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members: Vec<usize> = (0..n).map(|g| table.conjugate(x, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id as u8;
            }
            orbits.push(members);
        }
        if orbits.len() != NUM_CLASSES {
            return Err(Error::verification(
                "conjugacy classes",
                format!("found {} classes, expected {NUM_CLASSES}", orbits.len()),
            ));
        }
        let mut order = Vec::with_capacity(NUM_CLASSES);
        for rep in CLASS_REPS {
            let idx = table.index_of(&Perm::parse(rep).expect("built-in representative"))?;
            order.push(class_of[idx] as usize);
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != NUM_CLASSES {
            return Err(Error::verification(
                "conjugacy classes",
                "two tabulated representatives share a class",
            ));
        }
        let mut remap = [0u8; NUM_CLASSES];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u8;
        }
        for c in class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        let classes: Vec<ConjClass> = order
            .iter()
            .enumerate()
            .map(|(new, &old)| {
                let representative =
                    table.index_of(&Perm::parse(CLASS_REPS[new]).unwrap()).unwrap();
                ConjClass {
                    label: CLASS_LABELS[new],
                    representative,
                    members: orbits[old].clone(),
                    element_order: table.element_order(representative),
                }
            })
            .collect();
        let powers = classes
            .iter()
            .map(|c| {
                (0..c.element_order)
                    .map(|k| class_of[table.pow(c.representative, k)] as usize)
                    .collect()
            })
            .collect();
        Ok(ClassData {
            classes,
            class_of,
            powers,
            group_order: n,
        })
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ConjClass {
        &self.classes[c]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].members.len()
    }

    pub fn sizes(&self) -> [usize; NUM_CLASSES] {
        std::array::from_fn(|c| self.size(c))
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn label(&self, c: usize) -> &'static str {
        self.classes[c].label
    }

    /// Class of xᵏ for x in class c; k may be any integer.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let m = self.powers[c].len() as i64;
        self.powers[c][k.rem_euclid(m) as usize]
    }

    pub fn records(&self, table: &GroupTable) -> Vec<ClassRecord> {
        self.classes
            .iter()
            .map(|c| ClassRecord {
                label: c.label.to_string(),
                representative: table.element(c.representative).to_string(),
                size: c.members.len(),
                normalizer_order: normalizer_order_of(table, c.representative),
            })
            .collect()
    }
}

/// |N_G(⟨h⟩)|, by testing g⁻¹⟨h⟩g = ⟨h⟩ for every g.
pub fn normalizer_order(table: &GroupTable, h: &Perm) -> Result<usize> {
    Ok(normalizer_order_of(table, table.index_of(h)?))
}

pub fn normalizer_order_of(table: &GroupTable, h: usize) -> usize {
    let cyc = table.cyclic_subgroup(h);
    let mut in_cyc = vec![false; table.order()];
    for &x in &cyc {
        in_cyc[x] = true;
    }
    (0..table.order())
        .filter(|&g| in_cyc[table.conjugate(h, g)])
        .count()
}

/// The subgroup generated by all involutions of class 2A.
pub fn class_2a_subgroup(table: &GroupTable, cls: &ClassData) -> Vec<usize> {
    table.subgroup_closure(&cls.class(class_index("2A").unwrap()).members)
}

pub fn is_normal(table: &GroupTable, sub: &[usize]) -> bool {
    let mut member = vec![false; table.order()];
    for &x in sub {
        member[x] = true;
    }
    sub.iter()
        .all(|&x| (0..table.order()).all(|g| member[table.conjugate(x, g)]))
}
