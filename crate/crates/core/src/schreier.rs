//! Reidemeister–Schreier rewriting for index-two subgroups.
//!
//! With transversal `{1, g}` (`g` the first generator the character sends to
//! 1), the Schreier generators are `s(u, x) = u x (rep of u x)^-1` for
//! `u ∈ {1, g}` and each parent generator `x`. The one with `u = 1, x = g` is
//! trivial and omitted, leaving `2n - 1` generators.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Mod2Character, Presentation, Word};

/// Origin of a Schreier generator: parent generator `x` and coset
/// representative `u` (`false` for 1, `true` for g).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SchreierGenerator {
    pub parent: usize,
    pub coset: bool,
}

/// The kernel `K` of a mod-2 character, with its presentation and the
/// rewriting map from words of the parent lying in `K`.
#[derive(Clone, Debug)]
pub struct IndexTwoSubgroup {
    parent: Presentation,
    character: Mod2Character,
    transversal: usize,
    generators: Vec<SchreierGenerator>,
    // lookup[x][coset] -> index into `generators`
    lookup: Vec<[Option<usize>; 2]>,
    presentation: Presentation,
}

pub fn reidemeister_schreier(p: &Presentation, chi: &Mod2Character) -> Result<IndexTwoSubgroup> {
    if chi.values().len() != p.generator_count() {
        return Err(Error::NotACharacter(format!(
            "expected {} values, got {}",
            p.generator_count(),
            chi.values().len()
        )));
    }
    let g = chi.first_odd_generator().ok_or(Error::NotIndexTwo)?;
    if p.relators().iter().any(|r| chi.evaluate(r)) {
        return Err(Error::NotACharacter("a relator has odd weight".into()));
    }

    let mut generators = Vec::with_capacity(2 * p.generator_count() - 1);
    let mut lookup = vec![[None, None]; p.generator_count()];
    for (x, slots) in lookup.iter_mut().enumerate() {
        for coset in [false, true] {
            if x == g && !coset {
                continue;
            }
            slots[usize::from(coset)] = Some(generators.len());
            generators.push(SchreierGenerator { parent: x, coset });
        }
    }
    let names = generators
        .iter()
        .map(|s| format!("{}@{}", p.generator_names()[s.parent], u8::from(s.coset)))
        .collect();

    let mut sub = IndexTwoSubgroup {
        parent: p.clone(),
        character: chi.clone(),
        transversal: g,
        generators,
        lookup,
        // placeholder until the relators are rewritten
        presentation: Presentation::free(&["_"])?,
    };
    let gw = Word::generator(g);
    let mut relators = Vec::with_capacity(2 * p.relators().len());
    for r in p.relators() {
        relators.push(sub.rewrite(r)?);
        relators.push(sub.rewrite(&r.conjugate_by(&gw))?);
    }
    sub.presentation = Presentation::new(names, relators)?;
    Ok(sub)
}

impl IndexTwoSubgroup {
    pub fn parent(&self) -> &Presentation {
        &self.parent
    }

    pub fn character(&self) -> &Mod2Character {
        &self.character
    }

    /// Index of the parent generator `g` representing the nontrivial coset.
    pub fn transversal(&self) -> usize {
        self.transversal
    }

    pub fn generators(&self) -> &[SchreierGenerator] {
        &self.generators
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn b1(&self) -> usize {
        self.presentation.b1()
    }

    fn representative(&self, coset: bool) -> Word {
        if coset {
            Word::generator(self.transversal)
        } else {
            Word::empty()
        }
    }

    /// The Schreier generator `i` as a word in the parent generators.
    pub fn generator_word(&self, i: usize) -> Word {
        let s = self.generators[i];
        let target = s.coset ^ self.character.get(s.parent);
        self.representative(s.coset)
            .mul(&Word::generator(s.parent))
            .mul(&self.representative(target).inverse())
    }

    /// Coset scan: rewrites a parent word lying in `K` as a reduced word in
    /// the Schreier generators.
    pub fn rewrite(&self, w: &Word) -> Result<Word> {
        let mut coset = false;
        let mut out = Vec::with_capacity(w.len());
        for l in w.letters() {
            let flips = self.character.get(l.generator);
            // s(u, x) goes from coset u to u + chi(x); x^-1 reads it backwards
            let from = if l.inverse { coset ^ flips } else { coset };
            if let Some(i) = self.lookup[l.generator][usize::from(from)] {
                out.push(Letter::new(i, l.inverse));
            }
            coset ^= flips;
        }
        if coset {
            return Err(Error::NotInSubgroup);
        }
        Ok(Word::new(out).normalize())
    }
}
