//! Everything the quadric construction and the verifier share: the group, the
//! representation, the character table and the precomputed polynomial action.

use crate::chars::CharTable;
use crate::error::Result;
use crate::field::{CycElt, ExtElt, UnitRoot};
use crate::group::{GroupTable, Hurwitz, Letter};
use crate::poly::{power_list, GroupAction, PolyVec};
use crate::rep::FullRep;

pub struct Context {
    pub hurwitz: Hurwitz,
    pub rep: FullRep,
    pub tbl: CharTable,
    pub action: GroupAction,
    /// h⁰ … h⁶ for h = h_7B.
    pub h_powers: Vec<usize>,
    pub p: usize,
    pub q: usize,
}

impl Context {
    pub fn build() -> Result<Self> {
        let hurwitz = Hurwitz::build()?;
        let rep = FullRep::builtin(&hurwitz.table)?;
        Self::with_rep(hurwitz, rep)
    }

    pub fn with_rep(hurwitz: Hurwitz, rep: FullRep) -> Result<Self> {
        let tbl = CharTable::builtin();
        rep.check_character(&tbl, &hurwitz.classes)?;
        let action = GroupAction::new(&rep, &hurwitz.table, &hurwitz.classes);
        let h_powers = power_list(&hurwitz.table, hurwitz.h7b);
        let p = hurwitz.table.letter_index(Letter::P);
        let q = hurwitz.table.letter_index(Letter::Q);
        Ok(Context {
            hurwitz,
            rep,
            tbl,
            action,
            h_powers,
            p,
            q,
        })
    }

    pub fn table(&self) -> &GroupTable {
        &self.hurwitz.table
    }

    pub fn h7b(&self) -> usize {
        self.hurwitz.h7b
    }

    /// ρ(h_7B)_{ζʲ}; j is read mod 7, so j = 7 is the eigenvalue 1.
    pub fn rho(&self, j: i64, f: &PolyVec) -> PolyVec {
        self.action.eigen_project(f, &self.h_powers, UnitRoot::zeta(false, j))
    }

    pub fn rho_dual(&self, j: i64, v: &[ExtElt]) -> Vec<ExtElt> {
        self.action
            .eigen_project_dual(v, &self.h_powers, UnitRoot::zeta(false, j))
    }

    pub fn pi(&self, i: usize, f: &PolyVec) -> PolyVec {
        self.action.isotypic_project(f, i, &self.tbl)
    }

    pub fn act(&self, g: usize, f: &PolyVec) -> PolyVec {
        self.action.act(g, f)
    }

    /// Q·f.
    pub fn q_act(&self, f: &PolyVec) -> PolyVec {
        self.action.act(self.q, f)
    }

    /// True if h_7B·f = ζʲ·f.
    pub fn is_eigen(&self, j: i64, f: &PolyVec) -> bool {
        self.action.act(self.h7b(), f) == f.scale_cyc(&CycElt::zeta(j))
    }
}
