//! The defining relators of G and the Hurwitz generating triple.

use serde::Serialize;

use super::table::{GroupTable, Letter, Word};
use crate::error::{Error, Result};

/// Parse a word such as `Q^4 P Q^-1 P^2`; whitespace or `*` separates factors.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*') {
        if tok.is_empty() || tok == "1" {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<i32>()
                    .map_err(|_| Error::parse(format!("bad exponent in {tok:?}")))?,
            ),
            None => (tok, 1),
        };
        let letter = match base {
            "P" => Letter::P,
            "Q" => Letter::Q,
            _ => return Err(Error::parse(format!("unknown generator {base:?}"))),
        };
        if exp.unsigned_abs() > 64 {
            return Err(Error::parse(format!("exponent too large in {tok:?}")));
        }
        let l = if exp < 0 { letter.inverse() } else { letter };
        out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
    }
    Ok(out)
}

/// Relators of the chosen presentation, in display order.
pub const RELATORS: [&str; 5] = [
    "P^7",
    "Q^8",
    "Q P^2 Q P^2 Q P^2",
    "Q P^3 Q P^3",
    "Q^4 P Q^4 P^4 Q^4 P^2",
];

/// Relators of the alternative presentation; only the last one differs.
pub const RELATORS_ALT: [&str; 5] = [
    "P^7",
    "Q^8",
    "Q P^2 Q P^2 Q P^2",
    "Q P^3 Q P^3",
    "Q^4 P Q^4 P^2 Q^4 P^4",
];

pub fn relator_words(rels: &[&str]) -> Vec<(String, Word)> {
    rels.iter()
        .map(|r| (r.to_string(), parse_word(r).expect("built-in relator parses")))
        .collect()
}

/// Relator results plus the orders of the Hurwitz generating triple.
///
/// With these relators P²Q has order 3 and P³Q has order 2, so the triple is
/// x = P³Q (order 2), y = P²Q (order 3), y²x (order 7).
#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub relators: Vec<(String, bool)>,
    pub order_p2q: u32,
    pub order_p3q: u32,
    pub order_triple_product: u32,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.relators.iter().all(|(_, ok)| *ok)
            && self.order_p3q == 2
            && self.order_p2q == 3
            && self.order_triple_product == 7
    }
}

/// Evaluate every relator in the table and the orders of P²Q, P³Q and (P²Q)²P³Q.
pub fn presentation_report(table: &GroupTable) -> PresentationReport {
    let relators = relator_words(&RELATORS)
        .into_iter()
        .map(|(name, w)| {
            let ok = table.eval_word(&w) == 0;
            (name, ok)
        })
        .collect();
    let y = table.eval_word(&parse_word("P^2 Q").unwrap());
    let x = table.eval_word(&parse_word("P^3 Q").unwrap());
    let prod = table.mul(table.mul(y, y), x);
    PresentationReport {
        relators,
        order_p2q: table.element_order(y),
        order_p3q: table.element_order(x),
        order_triple_product: table.element_order(prod),
    }
}

/// Fails with the first violated relator.
pub fn verify_presentation(table: &GroupTable) -> Result<PresentationReport> {
    let report = presentation_report(table);
    if let Some((name, _)) = report.relators.iter().find(|(_, ok)| !ok) {
        return Err(Error::RelatorFailure(name.clone()));
    }
    if !report.passed() {
        return Err(Error::RelatorFailure(format!(
            "orders of (P^3 Q, P^2 Q, (P^2 Q)^2 P^3 Q) are ({}, {}, {})",
            report.order_p3q, report.order_p2q, report.order_triple_product
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_words() {
        assert_eq!(parse_word("P^2 Q").unwrap(), vec![Letter::P, Letter::P, Letter::Q]);
        assert_eq!(parse_word("Q^-1*P").unwrap(), vec![Letter::QInv, Letter::P]);
        assert_eq!(parse_word("1").unwrap(), vec![]);
        assert!(parse_word("R").is_err());
        assert!(parse_word("P^x").is_err());
    }
}
