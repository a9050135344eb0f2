//! Exact linear algebra over the rationals.
//!
//! Everything here is exact: scalars are arbitrary precision fractions and no
//! operation ever rounds. Subspaces are stored by their reduced row-echelon
//! basis, so two subspaces are equal exactly when their basis matrices are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; displays as `p/q`, or `p` when `q = 1`.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let r: Rat = s.parse().ok()?;
    Some(r)
}

/// Integer vector as rationals.
pub fn vector(entries: &[i64]) -> Vec<Rat> {
    entries.iter().map(|&e| int(e)).collect()
}

pub fn zero_vector(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vector(n);
    v[i] = Rat::one();
    v
}

pub fn is_zero_vector(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add_vectors(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| c * x).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from its rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Mat {
            rows: n,
            cols,
            data,
        })
    }

    /// Integer matrix literal, for tests and catalog entries.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Rat> = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| int(x))
            })
            .collect();
        Mat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        Mat::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_diagonal(diag: &[Rat]) -> Self {
        let n = diag.len();
        Mat::from_fn(
            n,
            n,
            |r, c| {
                if r == c {
                    diag[r].clone()
                } else {
                    Rat::zero()
                }
            },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Row-major flattening.
    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (red, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Some solution `x` of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let aug = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let (red, pivots) = rref(&aug);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn mul(self, rhs: &'a Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn add(self, rhs: &'a Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &rhs.data),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn sub(self, rhs: &'a Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &rhs.data),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Reduced row-echelon form and the pivot columns (increasing).
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a.get(row, col).recip();
        for c in col..a.cols {
            let idx = row * a.cols + c;
            a.data[idx] = &a.data[idx] * &inv;
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                let pv = a.get(row, c).clone();
                if !pv.is_zero() {
                    let idx = r * a.cols + c;
                    a.data[idx] -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

type SparseRow = Vec<(usize, Rat)>;

/// `row - factor * pivot` on sorted sparse rows.
fn axpy_sparse(row: &SparseRow, factor: &Rat, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - factor * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental sparse elimination for homogeneous systems with many
/// redundant equations.
///
/// Rows are reduced on their leading entry only while they stream in; full
/// back-substitution happens once in [`KernelSolver::kernel`].
#[derive(Debug, Clone)]
pub struct KernelSolver {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl KernelSolver {
    pub fn new(cols: usize) -> Self {
        KernelSolver {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `sum row[c] * x_c = 0`. Entries may repeat a column
    /// and may be zero.
    pub fn push(&mut self, entries: impl IntoIterator<Item = (usize, Rat)>) {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column out of range");
            if v.is_zero() {
                continue;
            }
            *acc.entry(c).or_insert_with(Rat::zero) += v;
        }
        let mut row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy_sparse(&row, &coeff, p),
                None => {
                    let inv = coeff.recip();
                    for e in row.iter_mut() {
                        e.1 = &e.1 * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Canonical basis of the solution space.
    pub fn kernel(&self) -> Subspace {
        // Back-substitute from the highest pivot down so each row only sees
        // already fully reduced rows.
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            loop {
                let next = r
                    .iter()
                    .skip(1)
                    .find(|(c, _)| reduced.contains_key(c))
                    .cloned();
                match next {
                    Some((c, v)) => r = axpy_sparse(&r, &v, &reduced[&c]),
                    None => break,
                }
            }
            reduced.insert(lead, r);
        }
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !reduced.contains_key(c))
            .collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = zero_vector(self.cols);
            v[f] = Rat::one();
            for (&lead, row) in &reduced {
                if let Some((_, val)) = row.iter().find(|(c, _)| *c == f) {
                    v[lead] = -val.clone();
                }
            }
            vectors.push(v);
        }
        Subspace::span(self.cols, vectors)
    }
}

/// `{v : m v = 0}`.
pub fn nullspace(m: &Mat) -> Subspace {
    let mut solver = KernelSolver::new(m.cols());
    for r in 0..m.rows() {
        solver.push(
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone())),
        );
    }
    solver.kernel()
}

/// Linear subspace of `Q^n` with its canonical reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}", self.dim(), self.ambient_dim)?;
        for v in self.basis_vectors() {
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "; [{}]", s.join(","))?;
        }
        write!(f, ")")
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let rows: Vec<Vec<Rat>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(
                v.len(),
                ambient_dim,
                "vector length differs from ambient dimension"
            );
        }
        let m = Mat::from_rows(ambient_dim, rows).expect("checked lengths");
        let (red, pivots) = rref(&m);
        let basis = Mat::from_fn(pivots.len(), ambient_dim, |r, c| red.get(r, c).clone());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis as rows, in reduced row-echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    ///
    /// With an RREF basis the coordinate on basis row `i` is just the entry
    /// of `v` at pivot column `i`.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (col, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    residual[col] -= c * b;
                }
            }
        }
        is_zero_vector(&residual).then_some(coords)
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim());
        let mut v = zero_vector(self.ambient_dim);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (col, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[col] += c * b;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Rat]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.coordinates(v).is_some())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| self.coordinates(v).is_some()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        Ok(Subspace::span(
            self.ambient_dim,
            self.basis_vectors()
                .into_iter()
                .chain(other.basis_vectors()),
        ))
    }

    /// Intersection as the nullspace of the stacked system
    /// `sum a_i u_i - sum b_j v_j = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_dim(other.ambient_dim)?;
        let (du, dv) = (self.dim(), other.dim());
        let mut solver = KernelSolver::new(du + dv);
        for col in 0..self.ambient_dim {
            let left = (0..du).map(|i| (i, self.basis.get(i, col).clone()));
            let right = (0..dv).map(|j| (du + j, -other.basis.get(j, col).clone()));
            solver.push(left.chain(right));
        }
        let kernel = solver.kernel();
        let vectors = kernel
            .basis_vectors()
            .into_iter()
            .map(|sol| self.combine(&sol[..du]));
        Ok(Subspace::span(self.ambient_dim, vectors))
    }

    /// `{v : form(v, u) = 0 for all u in self}`.
    pub fn orthogonal_complement(&self, form: &Mat) -> Result<Subspace> {
        self.check_dim(form.rows())?;
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let constraints = &self.basis * form;
        Ok(nullspace(&constraints))
    }

    /// Vectors `a` with `a . v = 0` for every `v` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    /// Gram matrix of `form` on the canonical basis.
    pub fn restrict_form(&self, form: &Mat) -> Mat {
        let b = &self.basis;
        &(b * form) * &b.transpose()
    }
}

/// Sylvester signature `(n_plus, n_minus, n_zero)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Inertia {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_minus == 0 && self.n_zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.n_zero == 0
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Inertia of a symmetric matrix by congruence diagonalization.
pub fn symmetric_inertia(m: &Mat) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = m.clone();
    let mut n = a.rows();
    let (mut plus, mut minus) = (0, 0);
    while n > 0 {
        // pick a nonzero diagonal pivot, or manufacture one from an
        // off-diagonal entry via e_i <- e_i + e_j
        let pivot = match (0..n).find(|&i| !a.get(i, i).is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_zero())
                else {
                    break;
                };
                for c in 0..n {
                    let v = a.get(i, c) + a.get(j, c);
                    a.set(i, c, v);
                }
                for r in 0..n {
                    let v = a.get(r, i) + a.get(r, j);
                    a.set(r, i, v);
                }
                i
            }
        };
        let d = a.get(pivot, pivot).clone();
        if d.is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
        // Schur complement on the remaining indices.
        let rest: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        let next = Mat::from_fn(rest.len(), rest.len(), |r, c| {
            let (i, j) = (rest[r], rest[c]);
            a.get(i, j) - a.get(i, pivot) * a.get(pivot, j) / &d
        });
        a = next;
        n -= 1;
    }
    Ok(Inertia::new(plus, minus, m.rows() - plus - minus))
}

/// Inertia of `form` restricted to `u`.
pub fn inertia(form: &Mat, u: &Subspace) -> Result<Inertia> {
    if form.rows() != u.ambient_dim() || !form.is_square() {
        return Err(Error::DimensionMismatch {
            expected: u.ambient_dim(),
            found: form.rows(),
        });
    }
    if !form.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    symmetric_inertia(&u.restrict_form(form))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Mat::identity(3));
        assert_eq!(r, Mat::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = rref(&Mat::zeros(2, 2));
        assert_eq!(r, Mat::zeros(2, 2));
        assert!(p.is_empty());

        let (r, p) = rref(&Mat::from_ints(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, Mat::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Mat::identity(4)).is_zero());
        assert_eq!(nullspace(&Mat::zeros(2, 3)), Subspace::full(3));
        let ns = nullspace(&Mat::from_ints(&[&[1, 1, 0]]));
        assert_eq!(ns.dim(), 2);
        for v in ns.basis_vectors() {
            assert!((&v[0] + &v[1]).is_zero());
        }
    }

    #[test]
    fn subspace_identities() {
        let u = Subspace::span(3, vec![vector(&[1, 2, 3]), vector(&[0, 1, 1])]);
        assert_eq!(u.sum(&Subspace::zero(3)).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert!(u.contains_vector(&vector(&[1, 3, 4])).unwrap());
        assert!(!u.contains_vector(&vector(&[0, 0, 1])).unwrap());
        assert_eq!(
            u.sum(&Subspace::zero(4)),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 4
            })
        );
    }

    #[test]
    fn orthogonal_complement_against_identity() {
        let u = Subspace::span(3, vec![vector(&[1, 1, 0])]);
        let perp = u.orthogonal_complement(&Mat::identity(3)).unwrap();
        assert_eq!(
            perp,
            Subspace::span(3, vec![vector(&[1, -1, 0]), vector(&[0, 0, 1])])
        );
        assert_eq!(
            u.orthogonal_complement(&Mat::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(
            inertia(&Mat::identity(3), &Subspace::full(3)).unwrap(),
            Inertia::new(3, 0, 0)
        );
        // sl2 Killing form in basis H, E, F
        let killing = Mat::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
        assert_eq!(
            inertia(&killing, &Subspace::full(3)).unwrap(),
            Inertia::new(2, 1, 0)
        );
        assert_eq!(
            inertia(&Mat::identity(3).scale(&int(-2)), &Subspace::full(3)).unwrap(),
            Inertia::new(0, 3, 0)
        );
        assert_eq!(
            symmetric_inertia(&Mat::from_ints(&[&[0, 4], &[4, 0]])).unwrap(),
            Inertia::new(1, 1, 0)
        );
        assert_eq!(
            symmetric_inertia(&Mat::zeros(2, 2)).unwrap(),
            Inertia::new(0, 0, 2)
        );
        assert_eq!(
            symmetric_inertia(&Mat::from_ints(&[&[1, 2], &[3, 4]])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn inverse_and_solve() {
        let m = Mat::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let x = m.solve(&vector(&[3, 2])).unwrap();
        assert_eq!(x, vector(&[1, 1]));
        assert!(Mat::from_ints(&[&[1, 1], &[1, 1]])
            .solve(&vector(&[1, 2]))
            .is_none());
    }

    #[test]
    fn rationals_print_in_lowest_terms() {
        assert_eq!(frac(4, -6).to_string(), "-2/3");
        assert_eq!(int(5).to_string(), "5");
        assert_eq!(parse_rat("-2/3"), Some(frac(-2, 3)));
        assert_eq!(parse_rat("6/4"), Some(frac(3, 2)));
        assert_eq!(parse_rat("x"), None);
    }
}
