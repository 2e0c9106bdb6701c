//! Character-parallel decision. Every character is examined, then the answer
//! is assembled exactly as the sequential scan would have produced it.

use anyhow::Result;
use rayon::prelude::*;

use dihedral_core::dihedral::examine_character;
use dihedral_core::{Presentation, Verdict};

pub fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?)
}

pub fn decide(p: &Presentation, cap: usize, jobs: usize) -> Result<Verdict> {
    if jobs <= 1 {
        return Ok(dihedral_core::decide(p, cap)?);
    }
    let characters = p.enumerate_characters(cap)?;
    let b1 = p.b1();
    let verdicts = pool(jobs)?.install(|| {
        characters
            .par_iter()
            .map(|chi| examine_character(p, chi, b1))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut evidence = Vec::new();
    for v in verdicts {
        evidence.push(v.evidence);
        if let Some(surjection) = v.surjection {
            return Ok(Verdict::Yes {
                surjection,
                evidence,
            });
        }
    }
    Ok(Verdict::No { evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dihedral_core::presentation::parse_presentation;

    #[test]
    fn agrees_with_the_sequential_scan() {
        for text in ["<x,y|>", "<x|>", "<a,b,c|a^2,b^2,c^2>", "<x,y|x y x = y x y>"] {
            let p = parse_presentation(text).unwrap();
            let seq = dihedral_core::decide(&p, 20).unwrap();
            let par = decide(&p, 20, 4).unwrap();
            assert_eq!(seq.evidence(), par.evidence(), "{text}");
            assert_eq!(
                seq.surjection().map(|s| s.images().to_vec()),
                par.surjection().map(|s| s.images().to_vec()),
                "{text}"
            );
        }
    }
}
