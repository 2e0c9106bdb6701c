//! Link diagrams: PD codes, Wirtinger presentations, linking numbers, and the
//! double covers of link exteriors.

mod analysis;
mod diagram;
mod pd;

pub use analysis::{
    analyze, branched_double_cover_h1, fox_branched_homology, fox_jacobian_at_minus_one,
    linking_criterion, BranchedCover, ClassReport, ConsistencyFlags, CriterionReason,
    CriterionVerdict, LinkAnalysis,
};
pub use diagram::{build_diagram, Component, LinkDiagram};
pub use pd::{parse_pd, PdCode};
