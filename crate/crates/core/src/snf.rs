//! Exact integer matrices and Smith normal form.
//!
//! Every entry is an `i64` and every addition and multiplication is checked:
//! an overflow surfaces as [`Error::Overflow`] and never wraps. The matrices
//! that arise from quotient computations stay small (a few dozen rows at
//! most), so the classical elimination algorithm is used with a minimal
//! absolute value pivot and a gcd fixup pass for the divisibility chain.

use std::fmt;

use crate::error::{Error, Result};

/// A dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a `rows × cols` matrix with `diag` on the main diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[i64]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.entries[i * cols + i] = d;
        }
        m
    }

    /// Builds a matrix from row-major data.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<i64>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must equal rows × cols"
        );
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from a slice of rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend_from_slice(r);
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Checked matrix product `self · rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    let term = self
                        .get(i, k)
                        .checked_mul(rhs.get(k, j))
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(term).ok_or(Error::Overflow)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn diagonal_entries(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                    return Ok(0);
                };
                for j in 0..n {
                    a.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = a[i * n + j].checked_mul(pivot).ok_or(Error::Overflow)?;
                    let rhs = a[i * n + k]
                        .checked_mul(a[k * n + j])
                        .ok_or(Error::Overflow)?;
                    a[i * n + j] = lhs.checked_sub(rhs).ok_or(Error::Overflow)? / prev;
                }
            }
            prev = pivot;
        }
        let det = sign * a[n * n - 1];
        i64::try_from(det).map_err(|_| Error::Overflow)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let term = self
                .get(src, j)
                .checked_mul(factor)
                .ok_or(Error::Overflow)?;
            let v = self.get(dst, j).checked_add(term).ok_or(Error::Overflow)?;
            self.set(dst, j, v);
        }
        Ok(())
    }

    /// col[dst] += factor · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: i64) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let term = self
                .get(i, src)
                .checked_mul(factor)
                .ok_or(Error::Overflow)?;
            let v = self.get(i, dst).checked_add(term).ok_or(Error::Overflow)?;
            self.set(i, dst, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            let v = self.get(i, j).checked_neg().ok_or(Error::Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The decomposition `U · A · V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The diagonal of `D`, zeros included.
    pub fn diagonal(&self) -> Vec<i64> {
        self.d.diagonal_entries()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

/// Position of the nonzero entry of least absolute value in the lower-right
/// block starting at `(t, t)`.
fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, u64)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j).unsigned_abs();
            if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form of `a`.
///
/// Returns `(U, D, V)` with `U · a · V = D`, `D` diagonal with nonnegative
/// entries `d₁ | d₂ | …`, and zero diagonal entries after the nonzero ones.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SnfResult> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Reduce the pivot column and row by the pivot. A nonzero remainder
            // is strictly smaller than the pivot and becomes the next pivot.
            let pivot = d.get(t, t);
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..rows {
                let q = d.get(i, t) / pivot;
                d.add_row_multiple(i, t, -q)?;
                u.add_row_multiple(i, t, -q)?;
                if d.get(i, t) != 0 && smaller.is_none() {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..cols {
                let q = d.get(t, j) / pivot;
                d.add_col_multiple(j, t, -q)?;
                v.add_col_multiple(j, t, -q)?;
                if d.get(t, j) != 0 && smaller.is_none() {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                if j == t {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                } else {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            let pivot = d.get(t, t);
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d.get(i, j) % pivot != 0));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, 1)?;
                    u.add_row_multiple(t, i, 1)?;
                }
                None => break,
            }
        }

        if d.get(t, t) < 0 {
            d.negate_row(t)?;
            u.negate_row(t)?;
        }
    }

    Ok(SnfResult { u, d, v })
}

/// Structure of a quotient `(Z/m₁ × … × Z/m_r) / ⟨relations⟩`.
///
/// Carries the rows of the left transform that survive (those whose diagonal
/// entry is not a unit), so ambient elements can be mapped to coordinates in
/// `Z/d₁ × … × Z/d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    ambient: Vec<u64>,
    invariant_factors: Vec<u64>,
    projection: Vec<Vec<i64>>,
}

impl Quotient {
    pub fn ambient_moduli(&self) -> &[u64] {
        &self.ambient
    }

    /// Invariant factors `d₁ | d₂ | …`, each at least 2.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    /// Order of the quotient group.
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Coordinates of the class of `x` in the invariant-factor basis.
    pub fn project(&self, x: &[u64]) -> Result<Vec<u64>> {
        if x.len() != self.ambient.len() {
            return Err(Error::RankMismatch {
                expected: self.ambient.len(),
                found: x.len(),
            });
        }
        self.projection
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, &d)| {
                let mut acc: i128 = 0;
                for (&c, &xi) in row.iter().zip(x) {
                    acc = acc
                        .checked_add((c as i128).checked_mul(xi as i128).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
                Ok(acc.rem_euclid(d as i128) as u64)
            })
            .collect()
    }
}

/// Quotient of `Z/m₁ × … × Z/m_r` by the subgroup generated by
/// `relation_generators`, via the SNF of `[diag(m) | generators]`.
pub fn quotient_invariants(
    ambient_moduli: &[u64],
    relation_generators: &[Vec<u64>],
) -> Result<Quotient> {
    let r = ambient_moduli.len();
    for gen in relation_generators {
        if gen.len() != r {
            return Err(Error::RankMismatch {
                expected: r,
                found: gen.len(),
            });
        }
    }
    if r == 0 {
        return Ok(Quotient {
            ambient: Vec::new(),
            invariant_factors: Vec::new(),
            projection: Vec::new(),
        });
    }
    let to_i64 = |x: u64| i64::try_from(x).map_err(|_| Error::Overflow);
    let s = relation_generators.len();
    let mut m = IntMatrix::zeros(r, r + s);
    for (i, &mi) in ambient_moduli.iter().enumerate() {
        m.set(i, i, to_i64(mi)?);
        for (j, gen) in relation_generators.iter().enumerate() {
            m.set(i, r + j, to_i64(gen[i])?);
        }
    }
    let snf = smith_normal_form(&m)?;
    let mut invariant_factors = Vec::new();
    let mut projection = Vec::new();
    for (i, d) in snf.diagonal().into_iter().enumerate() {
        // diag(m) has full row rank, so no diagonal entry is zero
        debug_assert!(d != 0);
        if d != 1 {
            invariant_factors.push(d as u64);
            projection.push(snf.u.row(i).to_vec());
        }
    }
    Ok(Quotient {
        ambient: ambient_moduli.to_vec(),
        invariant_factors,
        projection,
    })
}
