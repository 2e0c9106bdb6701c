//! Link diagrams and group presentations bundled with the binary.

use serde_json::json;

pub const LINKS: &[(&str, &str)] = &[
    ("unknot", include_str!("../fixtures/unknot.pd")),
    ("trefoil", include_str!("../fixtures/trefoil.pd")),
    ("trefoil-kinked", include_str!("../fixtures/trefoil-kinked.pd")),
    ("figure-eight", include_str!("../fixtures/figure-eight.pd")),
    ("hopf", include_str!("../fixtures/hopf.pd")),
    ("whitehead", include_str!("../fixtures/whitehead.pd")),
    ("borromean", include_str!("../fixtures/borromean.pd")),
    ("unlink-2", include_str!("../fixtures/unlink-2.pd")),
    ("unlink-3", include_str!("../fixtures/unlink-3.pd")),
];

const GROUPS: &str = include_str!("../fixtures/groups.txt");

/// PD text of a bundled link, without the trailing newline.
pub fn link(name: &str) -> Option<&'static str> {
    LINKS.iter().find(|(n, _)| *n == name).map(|(_, pd)| pd.trim())
}

pub fn link_names() -> impl Iterator<Item = &'static str> {
    LINKS.iter().map(|(n, _)| *n)
}

/// `(name, presentation text)` for every bundled group.
pub fn groups() -> Vec<(&'static str, &'static str)> {
    GROUPS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, text) = l.split_once('\t').expect("groups.txt uses tab-separated lines");
            (name, text.trim())
        })
        .collect()
}

pub fn group(name: &str) -> Option<&'static str> {
    groups().into_iter().find(|(n, _)| *n == name).map(|(_, t)| t)
}

/// The whole corpus as batch input: groups first, then links.
pub fn corpus_jsonl() -> String {
    let groups = groups()
        .into_iter()
        .map(|(name, text)| json!({"id": name, "type": "presentation", "payload": text}));
    let links = LINKS
        .iter()
        .map(|(name, pd)| json!({"id": name, "type": "pd", "payload": pd.trim()}));
    groups.chain(links).map(|v| format!("{v}\n")).collect()
}
