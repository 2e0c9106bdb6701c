use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::diagram::LinkDiagram;
use crate::dihedral::{decide, examine_character};
use crate::error::{Error, Result};
use crate::intlinalg::{smith_normal_form, IntMatrix};
use crate::presentation::{Mod2Character, Presentation, Word};
use crate::schreier::reidemeister_schreier;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CriterionReason {
    AtLeastThreeComponents,
    EvenLinkingNumber,
    OddLinkingNumber,
    SingleComponent,
}

impl CriterionReason {
    pub fn describe(self) -> &'static str {
        match self {
            CriterionReason::AtLeastThreeComponents => "at least three components",
            CriterionReason::EvenLinkingNumber => "even linking number",
            CriterionReason::OddLinkingNumber => "odd linking number",
            CriterionReason::SingleComponent => "single component",
        }
    }
}

/// Whether the exterior contains two disjoint surfaces with connected
/// complement, read off the component count and linking number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub reason: CriterionReason,
}

pub fn linking_criterion(d: &LinkDiagram) -> CriterionVerdict {
    let (holds, reason) = match d.n_components() {
        0 | 1 => (false, CriterionReason::SingleComponent),
        2 => {
            if d.linking_matrix().get(0, 1).is_even() {
                (true, CriterionReason::EvenLinkingNumber)
            } else {
                (false, CriterionReason::OddLinkingNumber)
            }
        }
        _ => (true, CriterionReason::AtLeastThreeComponents),
    };
    CriterionVerdict { holds, reason }
}

/// First homology of the double cover of `S^3` branched over the link.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BranchedCover {
    pub b1: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// `|H_1|` when finite.
    pub order: Option<BigInt>,
}

impl BranchedCover {
    fn from_relation_matrix(m: &IntMatrix, free_correction: usize) -> Self {
        let snf = smith_normal_form(m);
        let b1 = m.cols() - snf.rank() - free_correction;
        let torsion = snf.torsion();
        let order = (b1 == 0).then(|| torsion.iter().product());
        Self { b1, torsion, order }
    }

    /// The order, or zero when `H_1` is infinite.
    pub fn determinant(&self) -> BigInt {
        self.order.clone().unwrap_or_else(BigInt::zero)
    }

    /// `|Δ(-1, …, -1)|` of the multivariable Alexander polynomial, from the
    /// order by the Torres relation (`|H_1| = 2 |Δ(-1, …, -1)|` for two or
    /// more components).
    pub fn alexander_at_minus_one(&self, n_components: usize) -> BigInt {
        let det = self.determinant();
        if n_components >= 2 {
            det / 2
        } else {
            det
        }
    }
}

fn all_ones(d: &LinkDiagram) -> Result<Mod2Character> {
    let every: Vec<usize> = (0..d.n_components()).collect();
    d.meridian_character(&every)
}

/// Lifts the exterior to the double cover of the all-meridians class and
/// fills each boundary torus, killing the lift of one meridian square per
/// component.
pub fn branched_double_cover_h1(d: &LinkDiagram) -> Result<BranchedCover> {
    let (p, meridians) = d.wirtinger();
    let sub = reidemeister_schreier(&p, &all_ones(d)?)?;
    let kp = sub.presentation();
    let mut relators = kp.relators().to_vec();
    for &m in &meridians {
        relators.push(sub.rewrite(&Word::generator(m).pow(2))?);
    }
    let filled = kp.with_relators(relators)?;
    Ok(BranchedCover::from_relation_matrix(&filled.abelianization_matrix(), 0))
}

/// The same group from the Fox Jacobian of the Wirtinger presentation with
/// every meridian sent to `-1`; its cokernel is `Z ⊕ H_1` of the branched
/// cover.
pub fn fox_branched_homology(d: &LinkDiagram) -> BranchedCover {
    let (p, _) = d.wirtinger();
    BranchedCover::from_relation_matrix(&fox_jacobian_at_minus_one(&p), 1)
}

/// `∂r/∂x_j` evaluated under `x_i ↦ -1` for every generator.
pub fn fox_jacobian_at_minus_one(p: &Presentation) -> IntMatrix {
    let n = p.generator_count();
    let rows = p
        .relators()
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); n];
            // image of the prefix read so far
            let mut prefix = BigInt::one();
            for l in r.letters() {
                if l.inverse {
                    // ∂(x^-1) = -x^-1
                    prefix = -prefix;
                    row[l.generator] -= &prefix;
                } else {
                    row[l.generator] += &prefix;
                    prefix = -prefix;
                }
            }
            row
        })
        .collect();
    IntMatrix::from_rows(n, rows)
}

/// One nonzero meridian class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassReport {
    /// Component indicator of the class.
    pub components: Vec<bool>,
    pub character: Mod2Character,
    pub b1_cover: usize,
    pub realizable: bool,
    /// Number of boundary tori of the double cover.
    pub boundary_tori: usize,
}

/// Cross-checks between independently computed quantities.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConsistencyFlags {
    /// Linking-number criterion agrees with the group-theoretic decision.
    pub criterion_matches_decide: bool,
    /// All-ones class realizable ⟺ branched cover has infinite `H_1`.
    pub all_ones_matches_branched: bool,
    /// `b1(branched) = b1(cover of all-ones) - b1(exterior)`.
    pub betti_identity: bool,
    /// Longitude parities agree between crossing counts and linking numbers.
    pub peripheral_routes_agree: bool,
    /// Every cover with more boundary tori than the exterior is realizable.
    pub boundary_growth_realizable: bool,
    /// Fox-calculus homology of the branched cover equals the covering route.
    pub fox_matches_cover: bool,
}

impl ConsistencyFlags {
    pub fn all(&self) -> bool {
        self.criterion_matches_decide
            && self.all_ones_matches_branched
            && self.betti_identity
            && self.peripheral_routes_agree
            && self.boundary_growth_realizable
            && self.fox_matches_cover
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkAnalysis {
    pub n_components: usize,
    pub crossings: usize,
    pub b1_exterior: usize,
    pub linking_matrix: IntMatrix,
    pub criterion: CriterionVerdict,
    pub decide_yes: bool,
    pub classes: Vec<ClassReport>,
    pub branched_cover: BranchedCover,
    /// Disconnected spanning surface with no closed components exists;
    /// equivalent to the all-ones class being realizable.
    pub disconnected_spanning_surface: bool,
    pub flags: ConsistencyFlags,
}

impl LinkAnalysis {
    pub fn all_ones(&self) -> &ClassReport {
        self.classes
            .iter()
            .find(|c| c.components.iter().all(|&b| b))
            .expect("the all-ones class is always present")
    }
}

fn boundary_tori(d: &LinkDiagram, alpha: &[bool]) -> usize {
    (0..d.n_components())
        .map(|i| {
            if alpha[i] || d.longitude_parity(i, alpha) {
                1
            } else {
                2
            }
        })
        .sum()
}

fn longitude_parity_from_linking(lk: &IntMatrix, i: usize, alpha: &[bool]) -> bool {
    (0..lk.cols())
        .filter(|&j| j != i && alpha[j])
        .fold(false, |acc, j| acc ^ lk.get(i, j).is_odd())
}

/// Every per-link quantity at once. `cap` bounds the number of components.
pub fn analyze(d: &LinkDiagram, cap: usize) -> Result<LinkAnalysis> {
    let n = d.n_components();
    if n > cap {
        return Err(Error::CapExceeded { dimension: n, cap });
    }
    let (p, _) = d.wirtinger();
    let b1_exterior = p.b1();
    if b1_exterior != n {
        return Err(Error::Internal("Wirtinger b1 differs from the component count".into()));
    }
    let linking_matrix = d.linking_matrix();
    let criterion = linking_criterion(d);
    let decide_yes = decide(&p, cap)?.is_yes();

    let mut subsets: Vec<Vec<bool>> = (1u64..1 << n)
        .map(|mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect())
        .collect();
    subsets.sort();

    let mut classes = Vec::with_capacity(subsets.len());
    let mut peripheral_routes_agree = true;
    for alpha in subsets {
        let members: Vec<usize> = (0..n).filter(|&i| alpha[i]).collect();
        let character = d.meridian_character(&members)?;
        let verdict = examine_character(&p, &character, b1_exterior)?;
        peripheral_routes_agree &= (0..n).all(|i| {
            d.longitude_parity(i, &alpha) == longitude_parity_from_linking(&linking_matrix, i, &alpha)
        });
        classes.push(ClassReport {
            boundary_tori: boundary_tori(d, &alpha),
            components: alpha,
            character,
            b1_cover: verdict.evidence.b1_subgroup,
            realizable: verdict.realizable(),
        });
    }

    let branched_cover = branched_double_cover_h1(d)?;
    let fox = fox_branched_homology(d);
    let ones = classes
        .iter()
        .find(|c| c.components.iter().all(|&b| b))
        .expect("all-ones class");

    let flags = ConsistencyFlags {
        criterion_matches_decide: criterion.holds == decide_yes,
        all_ones_matches_branched: ones.realizable == (branched_cover.b1 > 0)
            && (branched_cover.b1 > 0) == branched_cover.determinant().is_zero(),
        betti_identity: branched_cover.b1 + b1_exterior == ones.b1_cover,
        peripheral_routes_agree,
        boundary_growth_realizable: classes
            .iter()
            .all(|c| c.boundary_tori <= n || c.realizable),
        fox_matches_cover: fox == branched_cover,
    };
    let disconnected_spanning_surface = ones.realizable;

    Ok(LinkAnalysis {
        n_components: n,
        crossings: d.pd().crossings().len(),
        b1_exterior,
        linking_matrix,
        criterion,
        decide_yes,
        classes,
        branched_cover,
        disconnected_spanning_surface,
        flags,
    })
}
