//! Reading inputs: presentation text or JSON, PD text, and `--class` values.

use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use dihedral_core::presentation::parse_presentation;
use dihedral_core::{Letter, Presentation, Word};

/// Where the input text comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Inline(String),
    File(PathBuf),
    Stdin,
}

impl Source {
    /// Picks the single source among an inline argument and `--file`,
    /// falling back to stdin.
    pub fn select(inline: Option<String>, file: Option<PathBuf>) -> Result<Self> {
        match (inline, file) {
            (Some(_), Some(_)) => bail!("give the input inline or with --file, not both"),
            (Some(text), None) => Ok(Source::Inline(text)),
            (None, Some(path)) => Ok(Source::File(path)),
            (None, None) => Ok(Source::Stdin),
        }
    }

    pub fn read(&self) -> Result<String> {
        match self {
            Source::Inline(text) => Ok(text.clone()),
            Source::File(path) => {
                std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
            }
            Source::Stdin => {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
                Ok(text)
            }
        }
    }
}

/// `{"generators": [...], "relators": [[[index, exponent], ...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i64)>>,
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<Presentation> {
        let mut relators = Vec::with_capacity(self.relators.len());
        for (i, r) in self.relators.iter().enumerate() {
            let mut letters = Vec::new();
            for &(generator, exponent) in r {
                if exponent == 0 {
                    bail!("relator {i}: exponent 0 is not allowed");
                }
                let l = Letter::new(generator, exponent < 0);
                letters.extend(std::iter::repeat(l).take(exponent.unsigned_abs() as usize));
            }
            relators.push(Word::new(letters));
        }
        Ok(Presentation::new(self.generators.clone(), relators)?)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let relators = p
            .relators()
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|l| (l.generator, if l.inverse { -1 } else { 1 }))
                    .collect()
            })
            .collect();
        Self {
            generators: p.generator_names().to_vec(),
            relators,
        }
    }
}

/// Text grammar or, when the input starts with `{`, the JSON form.
pub fn parse_group(text: &str) -> Result<Presentation> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let json: PresentationJson = serde_json::from_str(trimmed).context("presentation JSON")?;
        json.to_presentation()
    } else {
        Ok(parse_presentation(trimmed)?)
    }
}

/// Character values such as `1,0,1`, `101` or `1 0 1`.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    let digits: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
    if digits.is_empty() {
        bail!("empty class");
    }
    digits
        .iter()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => bail!("class bits must be 0 or 1, found {other:?}"),
        })
        .collect()
}

/// One-based component numbers such as `2` or `1,3`, returned zero-based
/// and sorted.
pub fn parse_components(s: &str, n_components: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split([',', ' ']).filter(|p| !p.is_empty()) {
        let k: usize = part.parse().with_context(|| format!("component number {part:?}"))?;
        if k == 0 || k > n_components {
            bail!("component {k} outside 1..={n_components}");
        }
        out.push(k - 1);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        bail!("empty component list");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_presentation() {
        let p = parse_group(r#"{"generators":["x","y"],"relators":[[[0,1],[1,1],[0,-1],[1,-1]]]}"#).unwrap();
        assert_eq!(p.to_string(), parse_group("<x,y|x y x' y'>").unwrap().to_string());
        let back = PresentationJson::from_presentation(&p).to_presentation().unwrap();
        assert_eq!(back.relators(), p.relators());
    }

    #[test]
    fn json_exponents_expand() {
        let p = parse_group(r#"{"generators":["a"],"relators":[[[0,3]]]}"#).unwrap();
        assert_eq!(p.relators()[0].len(), 3);
        assert!(parse_group(r#"{"generators":["a"],"relators":[[[0,0]]]}"#).is_err());
        assert!(parse_group(r#"{"generators":["a"],"relators":[[[4,1]]]}"#).is_err());
    }

    #[test]
    fn bits_and_components() {
        assert_eq!(parse_bits("1,1").unwrap(), [true, true]);
        assert_eq!(parse_bits("10").unwrap(), [true, false]);
        assert!(parse_bits("2").is_err());
        assert_eq!(parse_components("2", 2).unwrap(), [1]);
        assert_eq!(parse_components("3,1", 3).unwrap(), [0, 2]);
        assert!(parse_components("0", 2).is_err());
        assert!(parse_components("3", 2).is_err());
    }

    #[test]
    fn one_source_only() {
        assert!(Source::select(Some("x".into()), Some("f".into())).is_err());
        assert_eq!(Source::select(None, None).unwrap(), Source::Stdin);
    }
}
