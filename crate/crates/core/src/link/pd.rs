use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Planar-diagram code: one `X(a, b, c, d)` per crossing, arcs listed
/// counterclockwise from the incoming under-strand, plus a count of
/// crossingless unknotted components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
}

impl PdCode {
    /// Checks that labels run over `1..=N` and that each occurs exactly twice.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(Error::InvalidPd("empty diagram".into()));
        }
        let n = 2 * crossings.len();
        let mut counts = vec![0usize; n + 1];
        for x in &crossings {
            for &label in x {
                if label == 0 || label as usize > n {
                    return Err(Error::InvalidPd(format!(
                        "arc label {label} outside the contiguous range 1..={n}"
                    )));
                }
                counts[label as usize] += 1;
            }
        }
        if let Some((label, &count)) = counts.iter().enumerate().skip(1).find(|(_, &c)| c != 2) {
            return Err(Error::InvalidPd(format!(
                "arc label {label} occurs {count} times, expected 2"
            )));
        }
        Ok(Self {
            crossings,
            free_loops,
        })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Number of arc labels, `2 × crossings`.
    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for [a, b, c, d] in &self.crossings {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "X({a},{b},{c},{d})")?;
        }
        if self.free_loops > 0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "O({})", self.free_loops)?;
        }
        Ok(())
    }
}

/// Parses `X(a,b,c,d)` tuples and optional `O(k)` tokens, separated by
/// whitespace or commas. Square brackets are accepted in place of parentheses.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut crossings = Vec::new();
    let mut free_loops = 0usize;

    let malformed = |at: usize, what: &str| Error::InvalidPd(format!("malformed tuple at offset {at}: {what}"));
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };

    loop {
        while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        let start = i;
        let kind = bytes[i].to_ascii_uppercase();
        if kind != b'X' && kind != b'O' {
            return Err(malformed(start, "expected `X(` or `O(`"));
        }
        i += 1;
        skip_ws(&mut i);
        let close = match bytes.get(i) {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(malformed(start, "expected an opening bracket")),
        };
        i += 1;
        let mut fields: Vec<u64> = Vec::new();
        loop {
            skip_ws(&mut i);
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if digits_start == i {
                return Err(malformed(start, "expected a non-negative integer"));
            }
            let value = text[digits_start..i]
                .parse::<u64>()
                .map_err(|_| malformed(start, "integer out of range"))?;
            fields.push(value);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(&c) if c == close => {
                    i += 1;
                    break;
                }
                _ => return Err(malformed(start, "expected `,` or a closing bracket")),
            }
        }
        if kind == b'X' {
            let t: [u64; 4] = fields
                .try_into()
                .map_err(|_| malformed(start, "a crossing needs exactly four labels"))?;
            let mut labels = [0u32; 4];
            for (slot, v) in labels.iter_mut().zip(t) {
                *slot = u32::try_from(v).map_err(|_| malformed(start, "label out of range"))?;
            }
            crossings.push(labels);
        } else {
            let [k] = fields[..] else {
                return Err(malformed(start, "`O` takes exactly one count"));
            };
            free_loops += usize::try_from(k).map_err(|_| malformed(start, "count out of range"))?;
        }
    }
    PdCode::new(crossings, free_loops)
}
