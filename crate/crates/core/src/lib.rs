//! Exact computation of surjections from finitely presented groups onto the
//! infinite dihedral group `Z/2 * Z/2`.
//!
//! The crate decides whether such a surjection exists by comparing first Betti
//! numbers of index-two subgroups, and when it does, builds the surjection
//! explicitly from the anti-invariant part of the covering involution acting on
//! `H^1` of the subgroup. The [`link`] module applies this to link exteriors
//! given as planar-diagram codes.
//!
//! Everything here is pure, allocation-only code: no IO, no threads, no floats.
//! File formats and the command-line tool live in the `dihedral` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dihedral;
mod error;
pub mod intlinalg;
pub mod link;
pub mod presentation;
pub mod schreier;

pub use dihedral::{
    admits_pair_dual_to, construct_surjection, decide, find_psi, tau_action, verify_surjection,
    ClassVerdict, DInfElement, DihedralSurjection, Evidence, TauAction, Verdict,
};
pub use error::{Error, Result};
pub use intlinalg::{IntMatrix, Mod2Matrix, SmithDecomposition};
pub use presentation::{Letter, Mod2Character, Presentation, Word, DEFAULT_CAP};
pub use schreier::{reidemeister_schreier, IndexTwoSubgroup, SchreierGenerator};
