//! Exact integer and mod-2 linear algebra.
//!
//! Matrices hold [`BigInt`] entries; Smith normal form pivoting can grow
//! coefficients well past machine width on modest inputs, and a wrapped
//! integer would silently corrupt every homology computation downstream.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// # Panics
    /// If `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Builds a matrix from row vectors, each of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// # Panics
    /// On a dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector product");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * self.get(i, j);
            }
        }
        out
    }

    /// Copy of the block `rows × cols` given by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(rows.len(), cols.len(), entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// `|det|` of a square matrix, read off the Smith form.
    pub fn abs_determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let snf = smith_normal_form(self);
        if snf.rank() < self.rows {
            BigInt::zero()
        } else {
            snf.invariant_factors().iter().product()
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self.entries[src * self.cols + j];
            self.entries[dst * self.cols + j] += delta;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * &self.entries[i * self.cols + src];
            self.entries[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -core::mem::take(e);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

/// Unimodular change of basis bringing a matrix to Smith normal form:
/// `u * a * v == d`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    u: IntMatrix,
    d: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
    invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    /// Inverse of `v`, maintained alongside it during the reduction.
    pub fn v_inv(&self) -> &IntMatrix {
        &self.v_inv
    }

    /// Nonzero diagonal entries of `d`, positive and forming a divisibility chain.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smallest nonzero |entry| in the lower-right block starting at `(t, t)`;
/// ties go to the lowest row, then the lowest column.
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let m = x.abs();
            if best.as_ref().map_or(true, |(_, _, b)| m < *b) {
                best = Some((i, j, m));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    let swap_rows = |d: &mut IntMatrix, u: &mut IntMatrix, x: usize, y: usize| {
        d.swap_rows(x, y);
        u.swap_rows(x, y);
    };
    let swap_cols = |d: &mut IntMatrix, v: &mut IntMatrix, v_inv: &mut IntMatrix, x: usize, y: usize| {
        d.swap_cols(x, y);
        v.swap_cols(x, y);
        v_inv.swap_rows(x, y);
    };

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&d, t) else {
            break;
        };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, &mut v_inv, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -(d.get(i, t) / d.get(t, t));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -(d.get(t, j) / d.get(t, t));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                // inverse of the column operation acts on rows of v_inv
                v_inv.add_row_multiple(t, j, &-q);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                let (pi, pj) = find_pivot(&d, t).expect("nonzero remainder exists");
                swap_rows(&mut d, &mut u, t, pi);
                swap_cols(&mut d, &mut v, &mut v_inv, t, pj);
                continue;
            }

            // Row and column t are clear; enforce the divisibility chain.
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..m.min(n))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect();
    SmithDecomposition {
        u,
        d,
        v,
        v_inv,
        invariant_factors,
    }
}

/// Rank over the rationals and the Betti number `n_generators - rank` of the
/// cokernel of a relator matrix.
pub fn rank_and_betti(a: &IntMatrix, n_generators: usize) -> (usize, usize) {
    let rank = smith_normal_form(a).rank();
    (rank, n_generators.saturating_sub(rank))
}

/// Divides a nonzero vector by the gcd of its entries; the first nonzero entry
/// of the result is positive.
pub fn content_and_primitive(v: &[BigInt]) -> Result<(BigInt, Vec<BigInt>)> {
    let first = v.iter().find(|x| !x.is_zero()).ok_or(Error::NoPrimitiveMultiple)?;
    let content = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let divisor = if first.is_negative() { -&content } else { content.clone() };
    Ok((content, v.iter().map(|x| x / &divisor).collect()))
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dimension mismatch in dot product");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Matrix over the field with two elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mod2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl Mod2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<bool>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row");
            m.bits[i * cols..(i + 1) * cols].copy_from_slice(row);
        }
        m
    }

    /// Reduction of an integer matrix modulo 2.
    pub fn reduce(a: &IntMatrix) -> Self {
        Self {
            rows: a.rows,
            cols: a.cols,
            bits: a.entries.iter().map(|x| x.is_odd()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.cols + j] = value;
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(false, |acc, j| acc ^ (self.get(i, j) & v[j])))
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.bits.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    for j in 0..self.cols {
                        let x = self.get(r, j);
                        self.bits[i * self.cols + j] ^= x;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Basis of `{v : a·v = 0}` over Z/2, one vector per free column of the
/// reduced echelon form.
pub fn mod2_nullspace(a: &Mod2Matrix) -> Vec<Vec<bool>> {
    let mut r = a.clone();
    let pivots = r.rref();
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..a.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![false; a.cols];
            v[free] = true;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = r.get(row, free);
            }
            v
        })
        .collect()
}
