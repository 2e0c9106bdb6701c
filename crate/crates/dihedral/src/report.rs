//! Serializable reports and their plain-text renderings.
//!
//! Field order in every struct is the JSON key order, so changing it changes
//! the output format.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use dihedral_core::link::{BranchedCover, LinkAnalysis};
use dihedral_core::{ClassVerdict, DInfElement, DihedralSurjection, Evidence, IntMatrix, Presentation, Verdict};

/// An exact integer: a JSON number when it fits in `i64`, a decimal string
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(Int(v.into())),
            Repr::Text(t) => t.parse().map(Int).map_err(serde::de::Error::custom),
        }
    }
}

fn ints(xs: &[BigInt]) -> Vec<Int> {
    xs.iter().cloned().map(Int).collect()
}

fn matrix(m: &IntMatrix) -> Vec<Vec<Int>> {
    (0..m.rows()).map(|i| ints(m.row(i))).collect()
}

fn bits(values: &[bool]) -> Vec<u8> {
    values.iter().map(|&b| u8::from(b)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageReport {
    pub generator: String,
    pub flip: bool,
    pub shift: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectionReport {
    pub character: Vec<u8>,
    pub transversal: String,
    pub psi: Vec<Int>,
    pub images: Vec<ImageReport>,
    pub b1_subgroup: usize,
    pub b1_parent: usize,
    pub torsion: Vec<Int>,
    pub subgroup_generators: Vec<String>,
    pub action: Vec<Vec<Int>>,
    pub verified: bool,
}

impl SurjectionReport {
    pub fn new(p: &Presentation, s: &DihedralSurjection) -> Self {
        let names = p.generator_names();
        Self {
            character: bits(s.character().values()),
            transversal: names[s.transversal()].clone(),
            psi: ints(s.psi()),
            images: names
                .iter()
                .zip(s.images())
                .map(|(n, e)| ImageReport {
                    generator: n.clone(),
                    flip: e.flip,
                    shift: Int(e.shift.clone()),
                })
                .collect(),
            b1_subgroup: s.b1_subgroup(),
            b1_parent: s.b1_parent(),
            torsion: ints(s.torsion()),
            subgroup_generators: s.subgroup_generators().to_vec(),
            action: matrix(s.action()),
            verified: s.verified(),
        }
    }

    /// The images in generator order, as group elements.
    pub fn images(&self) -> Vec<DInfElement> {
        self.images
            .iter()
            .map(|im| DInfElement::new(im.flip, im.shift.0.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceRow {
    pub character: Vec<u8>,
    pub b1_subgroup: usize,
    pub b1_parent: usize,
    pub realizable: bool,
}

impl From<&Evidence> for EvidenceRow {
    fn from(e: &Evidence) -> Self {
        Self {
            character: bits(e.character.values()),
            b1_subgroup: e.b1_subgroup,
            b1_parent: e.b1_parent,
            realizable: e.realizable(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideReport {
    pub presentation: String,
    pub generators: Vec<String>,
    pub verdict: String,
    /// Present when the question was restricted to one class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<u8>>,
    pub surjection: Option<SurjectionReport>,
    pub evidence: Vec<EvidenceRow>,
}

impl DecideReport {
    pub fn from_verdict(p: &Presentation, v: &Verdict) -> Self {
        Self {
            presentation: p.to_string(),
            generators: p.generator_names().to_vec(),
            verdict: yes_no(v.is_yes()).into(),
            class: None,
            surjection: v.surjection().map(|s| SurjectionReport::new(p, s)),
            evidence: v.evidence().iter().map(EvidenceRow::from).collect(),
        }
    }

    pub fn from_class(p: &Presentation, c: &ClassVerdict) -> Self {
        Self {
            presentation: p.to_string(),
            generators: p.generator_names().to_vec(),
            verdict: yes_no(c.realizable()).into(),
            class: Some(bits(c.evidence.character.values())),
            surjection: c.surjection.as_ref().map(|s| SurjectionReport::new(p, s)),
            evidence: vec![EvidenceRow::from(&c.evidence)],
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == "YES"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub holds: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    /// One-based component numbers in the class.
    pub components: Vec<usize>,
    pub character: Vec<u8>,
    pub b1_cover: usize,
    pub realizable: bool,
    pub boundary_tori: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedCoverReport {
    pub b1: usize,
    pub torsion: Vec<Int>,
    pub order: Option<Int>,
    pub determinant: Int,
    pub alexander_at_minus_one: Int,
}

impl BranchedCoverReport {
    pub fn new(c: &BranchedCover, n_components: usize) -> Self {
        Self {
            b1: c.b1,
            torsion: ints(&c.torsion),
            order: c.order.clone().map(Int),
            determinant: Int(c.determinant()),
            alexander_at_minus_one: Int(c.alexander_at_minus_one(n_components)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub criterion_matches_decide: bool,
    pub all_ones_matches_branched: bool,
    pub betti_identity: bool,
    pub peripheral_routes_agree: bool,
    pub boundary_growth_realizable: bool,
    pub fox_matches_cover: bool,
}

/// The answer for one `--class` selection on a link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectedClass {
    pub components: Vec<usize>,
    pub verdict: String,
    pub surjection: Option<SurjectionReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub pd: String,
    pub verdict: String,
    pub components: usize,
    pub crossings: usize,
    pub b1_exterior: usize,
    pub linking_matrix: Vec<Vec<Int>>,
    pub criterion: CriterionReport,
    pub classes: Vec<ClassRow>,
    pub branched_cover: BranchedCoverReport,
    pub disconnected_spanning_surface: bool,
    pub consistency: ConsistencyReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selected: Option<SelectedClass>,
}

impl LinkReport {
    pub fn new(pd: &str, a: &LinkAnalysis) -> Self {
        let f = a.flags;
        Self {
            pd: pd.to_string(),
            verdict: yes_no(a.decide_yes).into(),
            components: a.n_components,
            crossings: a.crossings,
            b1_exterior: a.b1_exterior,
            linking_matrix: matrix(&a.linking_matrix),
            criterion: CriterionReport {
                holds: a.criterion.holds,
                reason: a.criterion.reason.describe().into(),
            },
            classes: a
                .classes
                .iter()
                .map(|c| ClassRow {
                    components: c
                        .components
                        .iter()
                        .enumerate()
                        .filter(|(_, &b)| b)
                        .map(|(i, _)| i + 1)
                        .collect(),
                    character: bits(c.character.values()),
                    b1_cover: c.b1_cover,
                    realizable: c.realizable,
                    boundary_tori: c.boundary_tori,
                })
                .collect(),
            branched_cover: BranchedCoverReport::new(&a.branched_cover, a.n_components),
            disconnected_spanning_surface: a.disconnected_spanning_surface,
            consistency: ConsistencyReport {
                criterion_matches_decide: f.criterion_matches_decide,
                all_ones_matches_branched: f.all_ones_matches_branched,
                betti_identity: f.betti_identity,
                peripheral_routes_agree: f.peripheral_routes_agree,
                boundary_growth_realizable: f.boundary_growth_realizable,
                fox_matches_cover: f.fox_matches_cover,
            },
            selected: None,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == "YES"
    }
}

fn bit_string(b: &[u8]) -> String {
    let inner: Vec<String> = b.iter().map(u8::to_string).collect();
    format!("({})", inner.join(","))
}

fn element(flip: bool, shift: &Int) -> String {
    DInfElement::new(flip, shift.0.clone()).to_string()
}

fn write_evidence(out: &mut String, rows: &[EvidenceRow], generators: &[String]) {
    let _ = writeln!(out, "evidence ({}):", generators.join(","));
    let _ = writeln!(out, "  {:<16} {:>6} {:>6}", "character", "b1(K)", "b1(G)");
    for r in rows {
        let mark = if r.realizable { "  <" } else { "" };
        let _ = writeln!(
            out,
            "  {:<16} {:>6} {:>6}{mark}",
            bit_string(&r.character),
            r.b1_subgroup,
            r.b1_parent
        );
    }
}

fn write_surjection(out: &mut String, s: &SurjectionReport, full: bool) {
    let _ = writeln!(out, "character: {}", bit_string(&s.character));
    let _ = writeln!(out, "transversal: {}", s.transversal);
    let psi: Vec<String> = s.psi.iter().map(|x| x.0.to_string()).collect();
    let _ = writeln!(out, "psi: [{}]", psi.join(", "));
    let _ = writeln!(out, "images:");
    for im in &s.images {
        let _ = writeln!(out, "  {} -> {}", im.generator, element(im.flip, &im.shift));
    }
    if full {
        let _ = writeln!(out, "subgroup generators: {}", s.subgroup_generators.join(" "));
        let _ = writeln!(out, "b1(K) = {}, b1(G) = {}", s.b1_subgroup, s.b1_parent);
        let torsion: Vec<String> = s.torsion.iter().map(|x| x.0.to_string()).collect();
        let _ = writeln!(out, "torsion of H1(K): [{}]", torsion.join(", "));
        let _ = writeln!(out, "involution on H1(K)/torsion:");
        for row in &s.action {
            let cells: Vec<String> = row.iter().map(|x| format!("{:>3}", x.0)).collect();
            let _ = writeln!(out, "  [{} ]", cells.join(""));
        }
        let _ = writeln!(out, "verified: {}", s.verified);
    }
}

/// Plain-text rendering; `full` adds the subgroup and involution data.
pub fn render_decide(r: &DecideReport, full: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.verdict);
    let _ = writeln!(out, "presentation: {}", r.presentation);
    if let Some(class) = &r.class {
        let _ = writeln!(out, "class: {}", bit_string(class));
    }
    if let Some(s) = &r.surjection {
        write_surjection(&mut out, s, full);
    }
    write_evidence(&mut out, &r.evidence, &r.generators);
    out
}

pub fn render_branched(r: &BranchedCoverReport) -> String {
    let mut out = String::new();
    let torsion: Vec<String> = r.torsion.iter().map(|x| x.0.to_string()).collect();
    let _ = writeln!(out, "b1: {}", r.b1);
    let _ = writeln!(out, "torsion: [{}]", torsion.join(", "));
    match &r.order {
        Some(o) => {
            let _ = writeln!(out, "order: {}", o.0);
        }
        None => {
            let _ = writeln!(out, "order: infinite");
        }
    }
    let _ = writeln!(out, "determinant: {}", r.determinant.0);
    let _ = writeln!(out, "|alexander(-1,...,-1)|: {}", r.alexander_at_minus_one.0);
    out
}

pub fn render_link(r: &LinkReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", r.verdict);
    let _ = writeln!(out, "pd: {}", r.pd);
    let _ = writeln!(out, "components: {}  crossings: {}  b1(exterior): {}", r.components, r.crossings, r.b1_exterior);
    let _ = writeln!(out, "linking matrix:");
    for row in &r.linking_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>3}", x.0)).collect();
        let _ = writeln!(out, "  [{} ]", cells.join(""));
    }
    let _ = writeln!(out, "criterion: {} ({})", yes_no(r.criterion.holds), r.criterion.reason);
    let _ = writeln!(out, "classes:");
    let _ = writeln!(out, "  {:<14} {:>8} {:>6} {:>10}", "components", "b1(cover)", "tori", "realizable");
    for c in &r.classes {
        let comps: Vec<String> = c.components.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "  {:<14} {:>8} {:>6} {:>10}",
            format!("{{{}}}", comps.join(",")),
            c.b1_cover,
            c.boundary_tori,
            yes_no(c.realizable)
        );
    }
    let _ = writeln!(out, "branched double cover:");
    for line in render_branched(&r.branched_cover).lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(out, "disconnected spanning surface: {}", yes_no(r.disconnected_spanning_surface));
    let c = &r.consistency;
    let all = c.criterion_matches_decide
        && c.all_ones_matches_branched
        && c.betti_identity
        && c.peripheral_routes_agree
        && c.boundary_growth_realizable
        && c.fox_matches_cover;
    let _ = writeln!(out, "consistency checks: {}", if all { "all pass" } else { "FAILED" });
    if let Some(sel) = &r.selected {
        let comps: Vec<String> = sel.components.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "selected class {{{}}}: {}", comps.join(","), sel.verdict);
        if let Some(s) = &sel.surjection {
            write_surjection(&mut out, s, false);
        }
    }
    out
}
