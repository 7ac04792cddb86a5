//! The 17-dimensional representation V = W₉ ⊕ W₂ of G over Q(ξ).

pub mod builtin;
pub mod checks;
pub mod image;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chars::{CharTable, ClassFn};
use crate::error::{Error, Result};
use crate::group::presentation::{relator_words, RELATORS};
use crate::group::{ClassData, GroupTable, Letter};

pub use image::{Monomial, RepImage, DIM, DIM_W9};

/// Images of P and Q.
#[derive(Clone, Debug)]
pub struct Generators {
    pub p: RepImage,
    pub q: RepImage,
}

impl Generators {
    pub fn builtin() -> Self {
        Generators {
            p: RepImage {
                w9: builtin::p_w9(),
                w2: builtin::p_w2(),
            },
            q: RepImage {
                w9: builtin::q_w9(),
                w2: builtin::q_w2(),
            },
        }
    }

    pub fn letter(&self, l: Letter) -> RepImage {
        match l {
            Letter::P => self.p.clone(),
            Letter::PInv => self.p.inverse(),
            Letter::Q => self.q.clone(),
            Letter::QInv => self.q.inverse(),
        }
    }

    /// Product of letter images in word order.
    pub fn eval_word(&self, w: &[Letter]) -> RepImage {
        let letters: HashMap<Letter, RepImage> =
            Letter::ALL.iter().map(|&l| (l, self.letter(l))).collect();
        w.iter()
            .fold(RepImage::identity(), |acc, l| acc.mul(&letters[l]))
    }

    /// Names of relators that do not evaluate to the identity.
    pub fn failed_relators(&self) -> Vec<String> {
        relator_words(&RELATORS)
            .into_iter()
            .filter(|(_, w)| !self.eval_word(w).is_identity())
            .map(|(name, _)| name)
            .collect()
    }
}

/// An image for every group element, indexed like the group table.
pub struct FullRep {
    gens: Generators,
    images: Vec<RepImage>,
}

impl FullRep {
    /// Extend the generator images along the table's words after checking the relators.
    pub fn extend(gens: Generators, table: &GroupTable) -> Result<Self> {
        if let Some(name) = gens.failed_relators().into_iter().next() {
            return Err(Error::RelatorFailure(name));
        }
        let letters: HashMap<Letter, RepImage> =
            Letter::ALL.iter().map(|&l| (l, gens.letter(l))).collect();
        let mut images: Vec<RepImage> = Vec::with_capacity(table.order());
        images.push(RepImage::identity());
        for g in 1..table.order() {
            let w = table.word(g);
            let last = *w.last().unwrap();
            let parent = table.mul(g, table.letter_index(last.inverse()));
            debug_assert!(parent < g);
            let img = images[parent].mul(&letters[&last]);
            images.push(img);
        }
        let rep = FullRep { gens, images };
        rep.check_homomorphism(table, 1000, 0x5eed)?;
        Ok(rep)
    }

    pub fn builtin(table: &GroupTable) -> Result<Self> {
        Self::extend(Generators::builtin(), table)
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn image(&self, g: usize) -> &RepImage {
        &self.images[g]
    }

    pub fn images(&self) -> &[RepImage] {
        &self.images
    }

    /// Matrix of g on the dual space in the dual basis.
    pub fn dual(&self, table: &GroupTable, g: usize) -> RepImage {
        self.images[table.inv(g)].transpose()
    }

    /// Checks image(g·x) = image(g)·image(x) for every g and x ∈ {P, Q}, plus `samples` random pairs.
    pub fn check_homomorphism(&self, table: &GroupTable, samples: usize, seed: u64) -> Result<()> {
        let p = table.letter_index(Letter::P);
        let q = table.letter_index(Letter::Q);
        for g in 0..table.order() {
            for x in [p, q] {
                if self.images[table.mul(g, x)] != self.images[g].mul(&self.images[x]) {
                    return Err(Error::verification(
                        "representation",
                        format!("image is not multiplicative at ({g}, {x})"),
                    ));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = rng.gen_range(0..table.order());
            let b = rng.gen_range(0..table.order());
            if self.images[table.mul(a, b)] != self.images[a].mul(&self.images[b]) {
                return Err(Error::verification(
                    "representation",
                    format!("image is not multiplicative at ({a}, {b})"),
                ));
            }
        }
        Ok(())
    }

    /// Trace of each class representative.
    pub fn character(&self, cls: &ClassData) -> ClassFn {
        ClassFn(std::array::from_fn(|c| {
            self.images[cls.class(c).representative].trace()
        }))
    }

    /// The character must equal χ₉ + χ₂ on every class.
    pub fn check_character(&self, tbl: &CharTable, cls: &ClassData) -> Result<()> {
        let expected = tbl.chi(9) + tbl.chi(2);
        let got = self.character(cls);
        for c in 0..got.0.len() {
            if got[c] != expected[c] {
                return Err(Error::verification(
                    format!("character at {}", cls.label(c)),
                    format!("trace {} differs from chi9 + chi2 = {}", got[c], expected[c]),
                ));
            }
        }
        Ok(())
    }

    /// Lookup table from image to element index.
    pub fn image_index(&self) -> HashMap<RepImage, usize> {
        self.images
            .iter()
            .enumerate()
            .map(|(g, m)| (m.clone(), g))
            .collect()
    }
}
