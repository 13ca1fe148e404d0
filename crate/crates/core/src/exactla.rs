//! Exact linear algebra over `Q`.
//!
//! Subspaces are stored by their reduced row echelon basis, which is unique
//! for a given span. Equality of [`Subspace`] values is therefore equality
//! of subspaces.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::Subset;

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

pub fn rational(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"`. The result is in lowest terms with a positive
/// denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::input(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn unit_vector(m: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); m];
    v[i] = Rational::one();
    v
}

/// Row-reduce in place to canonical RREF, dropping zero rows. Returns the
/// pivot column of each surviving row.
fn rref_in_place(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::input("matrix must have nonzero dimensions"));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::input("ragged matrix rows"));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        Ok(Matrix::from_rows(columns.to_vec())?.transpose())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::input(format!(
                "vector of length {} applied to a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Basis of the right kernel `{v : self · v = 0}`, one vector per free
    /// column of the RREF.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|fc| {
            let mut v = vec![Rational::zero(); self.cols];
            v[fc] = Rational::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -row[fc].clone();
            }
            v
        })
        .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(n, i));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix { rows: n, cols: n, data: aug.into_iter().flat_map(|r| r[n..].to_vec()).collect() })
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

/// A linear subspace of `Q^m` held by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn canonicalize(vectors: &[Vector], ambient: usize) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::input(format!(
                "vector of length {} in Q^{ambient}",
                v.len()
            )));
        }
        let mut rows = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient);
        Ok(Subspace { ambient, basis: rows, pivots })
    }

    /// The coordinate variety `{x_j = 0 : j ∈ vanishing}`, spanned by the
    /// unit vectors of the remaining coordinates.
    pub fn coordinate(ambient: usize, vanishing: Subset) -> Self {
        let free: Vec<usize> = (0..ambient).filter(|&j| !vanishing.contains(j)).collect();
        Subspace {
            ambient,
            basis: free.iter().map(|&j| unit_vector(ambient, j)).collect(),
            pivots: free,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::input(format!(
                "subspaces of Q^{} and Q^{} cannot be combined",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Membership test by reduction against the pivots.
    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.contains(other) {
            return Ok(self.clone());
        }
        if other.contains(self) {
            return Ok(other.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::canonicalize(&rows, self.ambient)
    }

    /// Intersection through the kernel of `[A | -B]`: every kernel vector
    /// `(c, d)` gives the common vector `Σ c_i a_i = Σ d_j b_j`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        let p = self.dim();
        let mut columns: Vec<Vector> = self.basis.clone();
        columns.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let stacked = Matrix::from_columns(&columns)?;
        let common: Vec<Vector> = stacked
            .kernel()
            .into_iter()
            .map(|k| combine(&self.basis, &k[..p], self.ambient))
            .collect();
        Subspace::canonicalize(&common, self.ambient)
    }

    /// Image under `f`, a linear map given by an `m × m` matrix acting on
    /// column vectors.
    pub fn image(&self, f: &Matrix) -> Result<Subspace> {
        if f.ncols() != self.ambient {
            return Err(Error::input("matrix does not act on this ambient space"));
        }
        let images = self
            .basis
            .iter()
            .map(|v| f.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::canonicalize(&images, f.nrows())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        write!(f, "Subspace(Q^{}, {:?})", self.ambient, rows)
    }
}

fn combine(vectors: &[Vector], coeffs: &[Rational], ambient: usize) -> Vector {
    let mut out = vec![Rational::zero(); ambient];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Sum of any number of subspaces of `Q^m`.
pub fn sum_all<'a>(ambient: usize, spaces: impl IntoIterator<Item = &'a Subspace>) -> Result<Subspace> {
    let mut rows = Vec::new();
    for s in spaces {
        if s.ambient() != ambient {
            return Err(Error::input("subspaces with different ambient dimensions"));
        }
        rows.extend(s.basis().iter().cloned());
    }
    Subspace::canonicalize(&rows, ambient)
}

/// True when the vectors are linearly independent.
pub fn independent(vectors: &[Vector], ambient: usize) -> Result<bool> {
    Ok(Subspace::canonicalize(vectors, ambient)?.dim() == vectors.len())
}

/// Complete linearly independent `vectors` to an ordered basis of `Q^m`.
///
/// The input comes first, unchanged, followed by those standard unit vectors
/// `e_1, …, e_m` (scanned in index order) that are independent of everything
/// held so far.
pub fn extend_to_basis(vectors: &[Vector], ambient: usize) -> Result<Vec<Vector>> {
    let mut held = Subspace::canonicalize(vectors, ambient)?;
    if held.dim() != vectors.len() {
        return Err(Error::input("vectors to extend are linearly dependent"));
    }
    let mut out = vectors.to_vec();
    for i in 0..ambient {
        if out.len() == ambient {
            break;
        }
        let e = unit_vector(ambient, i);
        if !held.contains_vector(&e) {
            held = held.sum(&Subspace::canonicalize(std::slice::from_ref(&e), ambient)?)?;
            out.push(e);
        }
    }
    Ok(out)
}

/// Lowest-terms, positive-denominator check used by tests and the JSON
/// reader.
pub fn is_normalized(q: &Rational) -> bool {
    q.denom().is_positive() && num_integer::Integer::gcd(q.numer(), q.denom()).is_one()
}
