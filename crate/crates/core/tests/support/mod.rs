//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra or rewriting code.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use dihedral_core::presentation::parse_presentation;
use dihedral_core::Presentation;

pub const UNKNOT: &str = "X(1,1,2,2)";
pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const TREFOIL_KINKED: &str = "X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(6,7,7,8)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub const HOPF: &str = "X(1,3,2,4) X(3,1,4,2)";
pub const WHITEHEAD: &str = "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)";
pub const BORROMEAN: &str = "X(2,5,4,1) X(5,3,7,6) X(6,9,8,4) X(9,7,11,10) X(10,12,1,8) X(12,11,3,2)";
pub const UNLINK2: &str = "O(2)";
pub const UNLINK3: &str = "O(3)";

/// (name, PD, determinant) with 0 for an infinite branched-cover `H_1`.
pub const LINKS: &[(&str, &str, u64)] = &[
    ("unknot", UNKNOT, 1),
    ("trefoil", TREFOIL, 3),
    ("trefoil-kinked", TREFOIL_KINKED, 3),
    ("figure-eight", FIGURE_EIGHT, 5),
    ("hopf", HOPF, 2),
    ("whitehead", WHITEHEAD, 8),
    ("borromean", BORROMEAN, 16),
    ("unlink-2", UNLINK2, 0),
    ("unlink-3", UNLINK3, 0),
];

pub fn group(text: &str) -> Presentation {
    parse_presentation(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// PD code of a braid closure. Strands run upward; `(i, true)` is `σ_i`
/// (left strand over), `(i, false)` its inverse.
pub fn braid_closure(strands: usize, word: &[(usize, bool)]) -> String {
    let mut current: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut crossings = Vec::new();
    for &(i, positive) in word {
        let (l, r) = (current[i], current[i + 1]);
        let (nl, nr) = (next, next + 1);
        next += 2;
        crossings.push(if positive { [r, nr, nl, l] } else { [l, r, nr, nl] });
        current[i] = nl;
        current[i + 1] = nr;
    }
    let closing: BTreeMap<u32, u32> = current.iter().zip(1..).map(|(&f, s)| (f, s)).collect();
    let mut used: Vec<u32> = crossings
        .iter()
        .flatten()
        .map(|v| *closing.get(v).unwrap_or(v))
        .collect();
    used.sort_unstable();
    used.dedup();
    let relabel = |v: u32| used.binary_search(closing.get(&v).unwrap_or(&v)).unwrap() + 1;
    crossings
        .iter()
        .map(|c| {
            let [a, b, cc, d] = c.map(relabel);
            format!("X({a},{b},{cc},{d})")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Order of the group by Todd–Coxeter enumeration over the trivial subgroup,
/// or `None` if more than `limit` cosets are needed.
pub fn todd_coxeter_order(p: &Presentation, limit: usize) -> Option<usize> {
    let cols = 2 * p.generator_count();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|l| 2 * l.generator + usize::from(l.inverse))
                .collect()
        })
        .collect();
    let mut t = CosetTable {
        table: vec![vec![None; cols]],
        parent: vec![0],
    };
    let mut c = 0;
    while c < t.table.len() {
        if t.parent[c] == c {
            for r in &relators {
                t.scan_and_fill(c, r);
                if t.parent[c] != c {
                    break;
                }
            }
            for x in 0..cols {
                if t.parent[c] == c && t.table[c][x].is_none() {
                    t.define(c, x);
                }
            }
        }
        if t.table.len() > limit {
            return None;
        }
        c += 1;
    }
    Some((0..t.table.len()).filter(|&c| t.parent[c] == c).count())
}

struct CosetTable {
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
}

fn inv(x: usize) -> usize {
    x ^ 1
}

impl CosetTable {
    fn define(&mut self, c: usize, x: usize) {
        let d = self.table.len();
        self.table.push(vec![None; self.table[0].len()]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][inv(x)] = Some(c);
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for x in 0..self.table[dead].len() {
                let Some(d) = self.table[dead][x] else { continue };
                if self.table[d][inv(x)] == Some(dead) {
                    self.table[d][inv(x)] = None;
                }
                let (mu, nu) = (self.rep(dead), self.rep(d));
                if let Some(m) = self.table[mu][x] {
                    self.merge(nu, m, &mut queue);
                } else if let Some(n) = self.table[nu][inv(x)] {
                    self.merge(mu, n, &mut queue);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][inv(x)] = Some(mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) {
        if w.is_empty() {
            return;
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                match self.table[f][w[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize {
                match self.table[b][inv(w[j as usize])] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                self.table[f][w[i]] = Some(b);
                self.table[b][inv(w[i])] = Some(f);
                return;
            }
            self.define(f, w[i]);
        }
    }
}

/// Rank by fraction-free Gaussian elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    bareiss(rows).0
}

/// Absolute determinant of a square matrix by Bareiss elimination.
pub fn bareiss_abs_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let (rank, last) = bareiss(rows);
    if rank < n {
        BigInt::zero()
    } else {
        last.abs()
    }
}

// (rank, last pivot); the last pivot of a nonsingular square matrix is ±det.
fn bareiss(rows: &[Vec<BigInt>]) -> (usize, BigInt) {
    let mut m = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..n_rows {
            for k in col + 1..n_cols {
                let v = (&m[rank][col] * &m[r][k] - &m[r][col] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, if n_rows == 0 { BigInt::one() } else { prev })
}

pub fn big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Link determinant from Fox 3-colouring-style relations: each crossing gives
/// `2·over − in − out` on the under-strands, read directly off the PD tuples.
/// Deleting one row and one column leaves a matrix whose `|det|` is the
/// determinant of the link.
pub fn colouring_determinant(pd: &str) -> BigInt {
    let tuples: Vec<[u32; 4]> = pd
        .split_whitespace()
        .map(|t| {
            let inner = t.trim_start_matches("X(").trim_end_matches(')');
            let v: Vec<u32> = inner.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect();
    // strands: join b~d (over-arc continues), leave a,c separate
    let n = 2 * tuples.len();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for t in &tuples {
        let (b, d) = (find(&mut parent, t[1] as usize), find(&mut parent, t[3] as usize));
        parent[b.max(d)] = b.min(d);
    }
    let mut strands: Vec<usize> = (1..=n).map(|x| find(&mut parent, x)).collect();
    strands.sort_unstable();
    strands.dedup();
    // a component that only ever passes over lifts off the diagram: split link
    if strands.len() != tuples.len() {
        return BigInt::zero();
    }
    let index = |p: &mut Vec<usize>, arc: u32| strands.binary_search(&find(p, arc as usize)).unwrap();
    let mut rows = Vec::new();
    for t in &tuples {
        let mut row = vec![0i64; strands.len()];
        row[index(&mut parent, t[1])] += 2;
        row[index(&mut parent, t[0])] -= 1;
        row[index(&mut parent, t[2])] -= 1;
        rows.push(row);
    }
    let minor: Vec<Vec<i64>> = rows[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss_abs_det(&big_rows(&minor))
}

/// Finite groups of order at most 24, with their orders.
pub const FINITE_GROUPS: &[(&str, &str, usize)] = &[
    ("cyclic-4", "<x | x^4>", 4),
    ("symmetric-3", "<a, b | a^2, b^2, a b a b a b>", 6),
    ("dihedral-8", "<r, s | r^4, s^2, s r s' r>", 8),
    ("quaternion", "<i, j | i^4, i^2 j^-2, j' i j i>", 8),
    ("alternating-4", "<x, y | x^2, y^3, x y x y x y>", 12),
    ("klein-four", "<a, b | a^2, b^2, a b a' b'>", 4),
    ("cyclic-6", "<x, y | x^2, y^3, x y x' y'>", 6),
    ("dicyclic-12", "<a, b | a^6, a^3 b^-2, b' a b a>", 12),
    ("binary-tetrahedral-quotient", "<x, y | x^3, y^3, x y x y>", 12),
];
