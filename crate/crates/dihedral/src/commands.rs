//! The work behind each subcommand, independent of argument parsing and
//! output streams.

use anyhow::{bail, Result};

use dihedral_core::link::{analyze, branched_double_cover_h1, build_diagram, parse_pd, LinkDiagram};
use dihedral_core::{admits_pair_dual_to, Mod2Character, Presentation};

use crate::input::{parse_bits, parse_components};
use crate::parallel;
use crate::report::{BranchedCoverReport, DecideReport, LinkReport, SelectedClass, SurjectionReport};

/// Decision for a presentation, optionally restricted to the class given by
/// character bits.
pub fn decide(p: &Presentation, cap: usize, jobs: usize, class: Option<&str>) -> Result<DecideReport> {
    match class {
        Some(bits) => {
            let values = parse_bits(bits)?;
            let chi = Mod2Character::new(p, values)?;
            Ok(DecideReport::from_class(p, &admits_pair_dual_to(p, &chi)?))
        }
        None => Ok(DecideReport::from_verdict(p, &parallel::decide(p, cap, jobs)?)),
    }
}

pub fn diagram(pd_text: &str) -> Result<LinkDiagram> {
    Ok(build_diagram(&parse_pd(pd_text)?)?)
}

/// Full link analysis; `class` is a list of one-based component numbers.
pub fn link(pd_text: &str, cap: usize, class: Option<&str>) -> Result<LinkReport> {
    let d = diagram(pd_text)?;
    let analysis = analyze(&d, cap)?;
    let mut report = LinkReport::new(pd_text.trim(), &analysis);
    if let Some(list) = class {
        let members = parse_components(list, d.n_components())?;
        let chi = d.meridian_character(&members)?;
        let (p, _) = d.wirtinger();
        let verdict = admits_pair_dual_to(&p, &chi)?;
        let expected = analysis
            .classes
            .iter()
            .find(|c| c.character == chi)
            .map(|c| c.realizable);
        if expected != Some(verdict.realizable()) {
            bail!("class decision disagrees with the analysis table");
        }
        report.selected = Some(SelectedClass {
            components: members.iter().map(|i| i + 1).collect(),
            verdict: if verdict.realizable() { "YES" } else { "NO" }.into(),
            surjection: verdict.surjection.as_ref().map(|s| SurjectionReport::new(&p, s)),
        });
    }
    Ok(report)
}

pub fn branched_cover(pd_text: &str) -> Result<BranchedCoverReport> {
    let d = diagram(pd_text)?;
    Ok(BranchedCoverReport::new(&branched_double_cover_h1(&d)?, d.n_components()))
}
