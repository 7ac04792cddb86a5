//! Characters of G: the fixed table, symmetric powers, and fixed-point traces.

pub mod lefschetz;
pub mod reference;
pub mod reproduce;
pub mod table;

pub use lefschetz::{Curve, FixedPointData};
pub use reference::TableId;
pub use table::{decompose, inner_product, sym_power_character, CharTable, ClassFn};
