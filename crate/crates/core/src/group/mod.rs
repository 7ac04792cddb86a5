//! The Hurwitz group of order 1344 as a permutation group on 14 points.

pub mod classes;
pub mod perm;
pub mod presentation;
pub mod table;

pub use classes::{ClassData, CLASS_LABELS, NUM_CLASSES};
pub use perm::Perm;
pub use table::{GroupTable, Letter, Word};

use crate::error::{Error, Result};

pub const GEN_P: &str = "( 1,13, 2,11, 4, 5, 8)( 3,10, 6,14, 7, 9,12)";
pub const GEN_Q: &str = "( 1, 7, 3, 4)( 2,11,13, 9, 6,14,10, 5)";
pub const H7B_WORD: &str = "P^2 Q P^3 Q";
pub const H7B_CYCLES: &str = "(1,8,5,4,11,2,13)(3,12,9,7,14,6,10)";

pub fn gen_p() -> Perm {
    Perm::parse(GEN_P).expect("built-in generator")
}

pub fn gen_q() -> Perm {
    Perm::parse(GEN_Q).expect("built-in generator")
}

/// The group, its classes, and the fixed order-7 element used throughout.
pub struct Hurwitz {
    pub table: GroupTable,
    pub classes: ClassData,
    pub h7b: usize,
}

impl Hurwitz {
    pub fn build() -> Result<Self> {
        let table = GroupTable::generate(gen_p(), gen_q(), table::DEFAULT_BOUND)?;
        presentation::verify_presentation(&table)?;
        let classes = ClassData::compute(&table)?;
        let h7b = h7b(&table, &classes)?;
        Ok(Hurwitz {
            table,
            classes,
            h7b,
        })
    }
}

/// P²QP³Q, checked against its cycle form and its class.
pub fn h7b(table: &GroupTable, cls: &ClassData) -> Result<usize> {
    let w = presentation::parse_word(H7B_WORD)?;
    let h = table.eval_word(&w);
    if table.element(h) != Perm::parse(H7B_CYCLES)? {
        return Err(Error::verification(
            "h7B",
            format!("P^2 Q P^3 Q = {}", table.element(h)),
        ));
    }
    if cls.label(cls.class_of(h)) != "7B" {
        return Err(Error::verification("h7B", "not in class 7B"));
    }
    Ok(h)
}
