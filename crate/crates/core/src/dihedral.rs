//! Surjections onto the infinite dihedral group `D = <a, b | a^2, b^2>`.
//!
//! An index-two subgroup `K = ker(chi)` admits such a surjection `phi` with
//! `pi ∘ phi = chi` exactly when `b1(K) > b1(G)`. The construction here takes
//! the involution `tau` induced on `H_1(K)/torsion` by conjugation with the
//! transversal element `g`, extracts a primitive anti-invariant functional
//! `psi` (so `psi ∘ tau = -psi`), and sends `k ↦ (ab)^psi(k)` and
//! `g k ↦ a (ab)^psi(k)`.
//!
//! Functionals on `H_1(K)` are row vectors over the free coordinates of the
//! Smith basis of the relator matrix of `K`; the action matrix is stored in
//! column convention, so the dual action on a functional is `psi · A`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{content_and_primitive, dot, smith_normal_form, IntMatrix, SmithDecomposition};
use crate::presentation::{Mod2Character, Presentation, Word};
use crate::schreier::{reidemeister_schreier, IndexTwoSubgroup};

/// `a^flip (ab)^shift`. Every element of `D` has exactly one such form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DInfElement {
    pub flip: bool,
    pub shift: BigInt,
}

impl DInfElement {
    pub fn new(flip: bool, shift: impl Into<BigInt>) -> Self {
        Self {
            flip,
            shift: shift.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(false, 0)
    }

    pub fn a() -> Self {
        Self::new(true, 0)
    }

    pub fn b() -> Self {
        Self::new(true, 1)
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && self.shift.is_zero()
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            self.clone()
        } else {
            Self::new(false, -&self.shift)
        }
    }
}

impl Mul for &DInfElement {
    type Output = DInfElement;

    /// `(s1, n1)(s2, n2) = (s1 ⊕ s2, (-1)^s2 n1 + n2)`
    fn mul(self, rhs: &DInfElement) -> DInfElement {
        let carried = if rhs.flip { -&self.shift } else { self.shift.clone() };
        DInfElement {
            flip: self.flip ^ rhs.flip,
            shift: carried + &rhs.shift,
        }
    }
}

impl fmt::Display for DInfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flip, self.shift.is_zero()) {
            (false, true) => write!(f, "1"),
            (false, false) => write!(f, "(ab)^{}", self.shift),
            (true, true) => write!(f, "a"),
            (true, false) => write!(f, "a (ab)^{}", self.shift),
        }
    }
}

pub fn dinf_multiply(x: &DInfElement, y: &DInfElement) -> DInfElement {
    x * y
}

/// Image of a word under the homomorphism sending generator `i` to `images[i]`.
pub fn evaluate_word(images: &[DInfElement], w: &Word) -> DInfElement {
    w.letters().iter().fold(DInfElement::identity(), |acc, l| {
        let x = &images[l.generator];
        if l.inverse {
            &acc * &x.inverse()
        } else {
            &acc * x
        }
    })
}

/// Conjugation by the transversal element acting on `H_1(K)/torsion`.
#[derive(Clone, Debug)]
pub struct TauAction {
    subgroup: IndexTwoSubgroup,
    basis: SmithDecomposition,
    action: IntMatrix,
}

impl TauAction {
    pub fn subgroup(&self) -> &IndexTwoSubgroup {
        &self.subgroup
    }

    /// Smith decomposition of the relator matrix of `K`; its `v` maps
    /// exponent-sum rows to Smith coordinates.
    pub fn basis(&self) -> &SmithDecomposition {
        &self.basis
    }

    pub fn free_rank(&self) -> usize {
        self.action.rows()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.basis.torsion()
    }

    /// Column `j` is the image of free basis vector `j`.
    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    /// Free-part coordinates of an exponent-sum row over the Schreier generators.
    pub fn free_part(&self, h: &[BigInt]) -> Vec<BigInt> {
        let y = self.basis.v().left_mul_vec(h);
        y[self.basis.rank()..].to_vec()
    }

    /// Free-part coordinates of a parent word lying in `K`.
    pub fn free_coordinates(&self, k: &Word) -> Result<Vec<BigInt>> {
        let rewritten = self.subgroup.rewrite(k)?;
        Ok(self.free_part(&self.subgroup.presentation().abelianize(&rewritten)))
    }

    /// `psi(k)` for a functional on the free part and a parent word in `K`.
    pub fn evaluate(&self, psi: &[BigInt], k: &Word) -> Result<BigInt> {
        Ok(dot(psi, &self.free_coordinates(k)?))
    }
}

pub fn tau_action(s: &IndexTwoSubgroup) -> Result<TauAction> {
    let kp = s.presentation();
    let m = kp.generator_count();
    let basis = smith_normal_form(&kp.abelianization_matrix());
    let r = basis.rank();

    let g = Word::generator(s.transversal());
    let g_inv = g.inverse();
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let conj = g_inv.mul(&s.generator_word(j)).mul(&g);
        rows.push(kp.abelianize(&s.rewrite(&conj)?));
    }
    // row convention: y ↦ y · (V^-1 C V) in Smith coordinates
    let conj = IntMatrix::from_rows(m, rows);
    let smith_conj = basis.v_inv().mul(&conj).mul(basis.v());

    let free: Vec<usize> = (r..m).collect();
    let fixed: Vec<usize> = (0..r).collect();
    if !smith_conj.select(&fixed, &free).is_zero() {
        return Err(Error::Internal(
            "conjugation sends torsion into the free part".into(),
        ));
    }
    let action = smith_conj.select(&free, &free).transpose();
    if !action.mul(&action).is_identity() {
        return Err(Error::Internal(format!(
            "conjugation action is not an involution: {action:?}"
        )));
    }
    Ok(TauAction {
        subgroup: s.clone(),
        basis,
        action,
    })
}

fn rank_of(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// A primitive integral functional in the `-1` eigenspace, or `None` when the
/// action is trivial. `b1_parent` is checked against the dimension of the
/// `+1` eigenspace.
pub fn find_psi(t: &TauAction, b1_parent: usize) -> Result<Option<Vec<BigInt>>> {
    let a = t.action();
    let n = a.rows();
    let mut minus_identity = a.clone();
    for i in 0..n {
        minus_identity.set(i, i, a.get(i, i) - BigInt::one());
    }
    let anti_dimension = rank_of(&minus_identity);
    if n - anti_dimension != b1_parent {
        return Err(Error::Internal(format!(
            "+1 eigenspace has dimension {} but b1(G) = {b1_parent}",
            n - anti_dimension
        )));
    }

    for i in 0..n {
        // e_i - e_i·A
        let candidate: Vec<BigInt> = (0..n)
            .map(|j| {
                let e = if i == j { BigInt::one() } else { BigInt::zero() };
                e - a.get(i, j)
            })
            .collect();
        if candidate.iter().all(Zero::is_zero) {
            continue;
        }
        let (_, psi) = content_and_primitive(&candidate)?;
        return Ok(Some(psi));
    }
    Ok(None)
}

/// A verified surjection `G -> D` together with the data that produced it.
#[derive(Clone, Debug)]
pub struct DihedralSurjection {
    character: Mod2Character,
    transversal: usize,
    psi: Vec<BigInt>,
    images: Vec<DInfElement>,
    action: IntMatrix,
    torsion: Vec<BigInt>,
    b1_subgroup: usize,
    b1_parent: usize,
    subgroup_generators: Vec<alloc::string::String>,
    verified: bool,
}

impl DihedralSurjection {
    /// `pi ∘ phi`.
    pub fn character(&self) -> &Mod2Character {
        &self.character
    }

    pub fn transversal(&self) -> usize {
        self.transversal
    }

    /// Primitive functional on the free part of `H_1(K)`, anti-invariant under
    /// the covering involution.
    pub fn psi(&self) -> &[BigInt] {
        &self.psi
    }

    pub fn images(&self) -> &[DInfElement] {
        &self.images
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn b1_subgroup(&self) -> usize {
        self.b1_subgroup
    }

    pub fn b1_parent(&self) -> usize {
        self.b1_parent
    }

    pub fn subgroup_generators(&self) -> &[alloc::string::String] {
        &self.subgroup_generators
    }

    pub fn verified(&self) -> bool {
        self.verified
    }
}

/// One row of the evidence table: `b1(ker chi)` against `b1(G)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Evidence {
    pub character: Mod2Character,
    pub b1_subgroup: usize,
    pub b1_parent: usize,
}

impl Evidence {
    pub fn realizable(&self) -> bool {
        self.b1_subgroup > self.b1_parent
    }
}

/// Outcome of testing a single class.
#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub evidence: Evidence,
    pub surjection: Option<DihedralSurjection>,
}

impl ClassVerdict {
    pub fn realizable(&self) -> bool {
        self.surjection.is_some()
    }
}

fn build_surjection(
    p: &Presentation,
    tau: &TauAction,
    psi: Vec<BigInt>,
    b1_parent: usize,
) -> Result<DihedralSurjection> {
    let sub = tau.subgroup();
    let chi = sub.character();
    let g = sub.transversal();
    let g_inv = Word::generator(g).inverse();

    let mut images = Vec::with_capacity(p.generator_count());
    for x in 0..p.generator_count() {
        let xw = Word::generator(x);
        let image = if chi.get(x) {
            // x = g · (g^-1 x) ↦ a (ab)^psi(g^-1 x)
            DInfElement::new(true, tau.evaluate(&psi, &g_inv.mul(&xw))?)
        } else {
            DInfElement::new(false, tau.evaluate(&psi, &xw)?)
        };
        images.push(image);
    }

    let g_squared = Word::generator(g).pow(2);
    if !tau.evaluate(&psi, &g_squared)?.is_zero() {
        return Err(Error::Internal("psi(g^2) is nonzero".into()));
    }
    let negated: Vec<BigInt> = psi.iter().map(|x| -x).collect();
    if tau.action().left_mul_vec(&psi) != negated {
        return Err(Error::Internal("psi is not anti-invariant".into()));
    }
    if images.iter().zip(chi.values()).any(|(im, &c)| im.flip != c) {
        return Err(Error::Internal("image parities disagree with the character".into()));
    }
    if !verify_surjection(p, &images)? {
        return Err(Error::Internal(format!(
            "constructed map for character {chi} failed verification"
        )));
    }

    Ok(DihedralSurjection {
        character: chi.clone(),
        transversal: g,
        psi,
        images,
        action: tau.action().clone(),
        torsion: tau.torsion(),
        b1_subgroup: sub.b1(),
        b1_parent,
        subgroup_generators: sub.presentation().generator_names().to_vec(),
        verified: true,
    })
}

/// Runs the full pipeline for one character: subgroup, action, `psi`, and
/// the surjection when `psi` exists.
pub fn examine_character(
    p: &Presentation,
    chi: &Mod2Character,
    b1_parent: usize,
) -> Result<ClassVerdict> {
    let sub = reidemeister_schreier(p, chi)?;
    let tau = tau_action(&sub)?;
    let evidence = Evidence {
        character: chi.clone(),
        b1_subgroup: sub.b1(),
        b1_parent,
    };
    let surjection = match find_psi(&tau, b1_parent)? {
        Some(psi) => Some(build_surjection(p, &tau, psi, b1_parent)?),
        None => None,
    };
    if surjection.is_some() != evidence.realizable() {
        return Err(Error::Internal(format!(
            "construction and Betti comparison disagree for {chi}"
        )));
    }
    Ok(ClassVerdict {
        evidence,
        surjection,
    })
}

/// The surjection with `pi ∘ phi = chi`, if one exists.
pub fn construct_surjection(p: &Presentation, chi: &Mod2Character) -> Result<Option<DihedralSurjection>> {
    Ok(examine_character(p, chi, p.b1())?.surjection)
}

/// Checks that relators map to the identity and that the images generate `D`.
pub fn verify_surjection(p: &Presentation, images: &[DInfElement]) -> Result<bool> {
    if images.len() != p.generator_count() {
        return Err(Error::ArityMismatch {
            expected: p.generator_count(),
            got: images.len(),
        });
    }
    if !p.relators().iter().all(|r| evaluate_word(images, r).is_identity()) {
        return Ok(false);
    }
    let Some(base) = images.iter().find(|e| e.flip) else {
        return Ok(false);
    };
    let translation_gcd = images
        .iter()
        .map(|e| if e.flip { &e.shift - &base.shift } else { e.shift.clone() })
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    Ok(translation_gcd.is_one())
}

#[derive(Clone, Debug)]
pub enum Verdict {
    /// The first character (lexicographically) that admits a surjection, with
    /// the evidence rows examined up to and including it.
    Yes {
        surjection: DihedralSurjection,
        evidence: Vec<Evidence>,
    },
    /// Every index-two subgroup has `b1(K) = b1(G)`.
    No { evidence: Vec<Evidence> },
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }

    pub fn evidence(&self) -> &[Evidence] {
        match self {
            Verdict::Yes { evidence, .. } | Verdict::No { evidence } => evidence,
        }
    }

    pub fn surjection(&self) -> Option<&DihedralSurjection> {
        match self {
            Verdict::Yes { surjection, .. } => Some(surjection),
            Verdict::No { .. } => None,
        }
    }
}

/// Decides whether `G` surjects onto `D` by walking its characters in order.
pub fn decide(p: &Presentation, cap: usize) -> Result<Verdict> {
    let b1_parent = p.b1();
    let mut evidence = Vec::new();
    for chi in p.enumerate_characters(cap)? {
        let verdict = examine_character(p, &chi, b1_parent)?;
        evidence.push(verdict.evidence);
        if let Some(surjection) = verdict.surjection {
            return Ok(Verdict::Yes {
                surjection,
                evidence,
            });
        }
    }
    Ok(Verdict::No { evidence })
}

/// Whether there is a surjection whose composite with `pi` is exactly `alpha`.
pub fn admits_pair_dual_to(p: &Presentation, alpha: &Mod2Character) -> Result<ClassVerdict> {
    let alpha = Mod2Character::new(p, alpha.values().to_vec())?;
    examine_character(p, &alpha, p.b1())
}
