//! Cayley closure of a two-generator permutation group.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::perm::Perm;
use crate::error::{Error, Result};

/// Default guard on closure size.
pub const DEFAULT_BOUND: usize = 100_000;

/// Letters of words in the generators, in tie-break order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    P,
    PInv,
    Q,
    QInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::P, Letter::PInv, Letter::Q, Letter::QInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::P => Letter::PInv,
            Letter::PInv => Letter::P,
            Letter::Q => Letter::QInv,
            Letter::QInv => Letter::Q,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::P => "P",
            Letter::PInv => "P^-1",
            Letter::Q => "Q",
            Letter::QInv => "Q^-1",
        })
    }
}

pub type Word = Vec<Letter>;

pub fn word_to_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(Letter::to_string).collect::<Vec<_>>().join("*")
}

/// Element indices are `usize` in the API and `u16` in the product table.
pub struct GroupTable {
    gens: [Perm; 2],
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    product: Vec<u16>,
    inverse: Vec<u16>,
    words: Vec<Word>,
    orders: Vec<u32>,
}

impl GroupTable {
    /// Closure of ⟨P, Q⟩ with shortlex-minimal words (length, then P < P⁻¹ < Q < Q⁻¹).
    pub fn generate(p: Perm, q: Perm, bound: usize) -> Result<Self> {
        let bound = bound.min(u16::MAX as usize + 1);
        let letters = [p, p.inverse(), q, q.inverse()];
        let id = Perm::identity();
        let mut elements = vec![id];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut words: Vec<Word> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (l, x) in Letter::ALL.iter().zip(letters.iter()) {
                let h = elements[i] * *x;
                if index.contains_key(&h) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(Error::ClosureOverflow(bound));
                }
                let mut w = words[i].clone();
                w.push(*l);
                index.insert(h, elements.len());
                elements.push(h);
                words.push(w);
                queue.push_back(elements.len() - 1);
            }
        }
        let n = elements.len();
        let mut product = vec![0u16; n * n];
        for (a, ea) in elements.iter().enumerate() {
            for (b, eb) in elements.iter().enumerate() {
                product[a * n + b] = index[&(*ea * *eb)] as u16;
            }
        }
        let inverse = elements
            .iter()
            .map(|e| index[&e.inverse()] as u16)
            .collect();
        let orders = elements.iter().map(Perm::order).collect();
        Ok(GroupTable {
            gens: [p, q],
            elements,
            index,
            product,
            inverse,
            words,
            orders,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> [Perm; 2] {
        self.gens
    }

    pub fn element(&self, i: usize) -> Perm {
        self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Result<usize> {
        self.index.get(g).copied().ok_or(Error::NotInGroup)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// g⁻¹·x·g.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn word(&self, i: usize) -> &[Letter] {
        &self.words[i]
    }

    pub fn letter_index(&self, l: Letter) -> usize {
        let [p, q] = self.gens;
        let x = match l {
            Letter::P => p,
            Letter::PInv => p.inverse(),
            Letter::Q => q,
            Letter::QInv => q.inverse(),
        };
        self.index[&x]
    }

    pub fn eval_word(&self, w: &[Letter]) -> usize {
        w.iter()
            .fold(0, |acc, &l| self.mul(acc, self.letter_index(l)))
    }

    /// Elements of the cyclic subgroup generated by `a`, starting at the identity.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    /// Closure of a generating set under multiplication.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Left-coset representatives t of `sub`, one per coset t·sub, smallest index first.
    pub fn left_coset_reps(&self, sub: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for t in 0..self.order() {
            if seen[t] {
                continue;
            }
            reps.push(t);
            for &k in sub {
                seen[self.mul(t, k)] = true;
            }
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{gen_p, gen_q};

    #[test]
    fn small_closures() {
        let p = gen_p();
        let id = Perm::identity();
        assert_eq!(GroupTable::generate(p, id, DEFAULT_BOUND).unwrap().order(), 7);
        assert_eq!(GroupTable::generate(id, id, DEFAULT_BOUND).unwrap().order(), 1);
        assert_eq!(
            GroupTable::generate(gen_p(), gen_q(), 100).err(),
            Some(Error::ClosureOverflow(100))
        );
    }

    #[test]
    fn words_are_shortlex() {
        let g = GroupTable::generate(gen_p(), gen_q(), DEFAULT_BOUND).unwrap();
        assert_eq!(g.word(0), &[] as &[Letter]);
        assert_eq!(g.word(1), &[Letter::P]);
        assert_eq!(g.word(2), &[Letter::PInv]);
        assert_eq!(g.word(3), &[Letter::Q]);
        assert_eq!(g.word(4), &[Letter::QInv]);
        for i in 1..g.order() {
            assert!(g.word(i - 1).len() <= g.word(i).len());
        }
    }
}
