//! Exact rational linear algebra.
//!
//! [`RatMatrix`] is a dense row-major matrix of arbitrary-precision rationals.
//! Ranks are computed by fraction-free (Bareiss) elimination over the integers
//! after clearing row denominators; kernels and inverses use Gauss-Jordan
//! elimination over the rationals. [`MatrixComplex`] holds a bounded chain
//! complex and computes its homology dimensions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Converts an integer to a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the fraction `p / q`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows of integers. All rows must have the same length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged integer rows".into()));
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| rat(rows[i][j])))
    }

    /// Builds a matrix from rows of rationals. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rational rows".into()));
        }
        let nrows = rows.len();
        Ok(Self {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Square diagonal matrix with the given integer entries.
    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = rat(e);
        }
        m
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Number of non-zero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &RatMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &RatMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Submatrix with the listed rows and columns, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    fn same_shape(&self, other: &RatMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Exact rank by fraction-free elimination.
    ///
    /// Each row is scaled by the least common multiple of its denominators so that the
    /// elimination runs over the integers; Bareiss division keeps intermediate entries equal
    /// to minors of the scaled matrix.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| integer_row(self.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        bareiss_rank(&mut a, self.cols)
    }

    /// Basis of the right kernel `{x : self · x = 0}`, one column per basis vector.
    pub fn kernel(&self) -> RatMatrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -rref[(r, f)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                let v = &m[(row, j)] * &inv;
                m[(row, j)] = v;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        if !m[(row, j)].is_zero() {
                            let v = &factor * &m[(row, j)];
                            m[(r, j)] -= v;
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Inverse of a square matrix, or `None` when it is singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.last().is_some_and(|&c| c != n - 1) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Entries as strings `p/q` (or `p` for integers), row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Parses rows of `p/q` strings.
    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.trim()
                            .parse::<Rational>()
                            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

/// Scales a rational row to an integer row with the same span.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Rank of an integer matrix by Bareiss elimination. The rows are consumed.
pub(crate) fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        // the smallest pivot keeps numbers short
        let pivot = (rank..nrows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].abs());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let v = &pv * &row[j] - &lead * &prow[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
    }
    rank
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_strings() {
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Self::from_strings(&rows).map_err(serde::de::Error::custom)
    }
}

/// Sparse matrix with exact rational entries, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![BTreeMap::new(); cols],
        }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Adds `value` to entry `(row, col)`, dropping entries that cancel to zero.
    pub fn add_entry(&mut self, row: usize, col: usize, value: Rational) {
        debug_assert!(row < self.rows);
        if value.is_zero() {
            return;
        }
        let column = &mut self.columns[col];
        let entry = column.entry(row).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            column.remove(&row);
        }
    }

    /// Non-zero entries of column `col` as `row → value`.
    pub fn column(&self, col: usize) -> &BTreeMap<usize, Rational> {
        &self.columns[col]
    }

    /// Entry `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.columns[col]
            .get(&row)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    /// Number of non-zero entries.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols());
        for (j, col) in other.columns.iter().enumerate() {
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    out.add_entry(*i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    /// Dense submatrix with the listed rows and columns, in the order given.
    pub fn select_dense(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let position: BTreeMap<usize, usize> =
            rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut out = RatMatrix::zeros(rows.len(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for (r, v) in &self.columns[c] {
                if let Some(&i) = position.get(r) {
                    out[(i, j)] = v.clone();
                }
            }
        }
        out
    }

    /// Dense copy.
    pub fn to_dense(&self) -> RatMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.select_dense(&rows, &cols)
    }
}

/// Bounded chain complex `V_top → … → V_low` of finite-dimensional rational spaces.
///
/// `dims[j]` is the dimension of `V_{low+j}` and `diffs[j]` is the differential
/// `d_{low+j+1} : V_{low+j+1} → V_{low+j}`, a `dims[j] × dims[j+1]` matrix. Spaces outside
/// the stored range are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixComplex {
    low: i64,
    dims: Vec<usize>,
    diffs: Vec<RatMatrix>,
}

impl MatrixComplex {
    /// Builds a complex from its lowest degree, the dimensions and the differentials.
    ///
    /// Checks shapes and `d ∘ d = 0`.
    pub fn new(low: i64, dims: Vec<usize>, diffs: Vec<RatMatrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len().max(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (j, d) in diffs.iter().enumerate() {
            if d.rows() != dims[j] || d.cols() != dims[j + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "differential into degree {} is {}x{}, expected {}x{}",
                    low + j as i64,
                    d.rows(),
                    d.cols(),
                    dims[j],
                    dims[j + 1]
                )));
            }
        }
        for j in 1..diffs.len() {
            if !diffs[j - 1].mul(&diffs[j])?.is_zero() {
                return Err(Error::NotAComplex {
                    degree: low + j as i64 - 1,
                });
            }
        }
        Ok(Self { low, dims, diffs })
    }

    /// Lowest stored degree.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest stored degree.
    pub fn high(&self) -> i64 {
        self.low + self.dims.len() as i64 - 1
    }

    /// Dimension of each stored space, lowest degree first.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension of `V_k` (zero outside the stored range).
    pub fn dim(&self, k: i64) -> usize {
        self.index(k).map_or(0, |j| self.dims[j])
    }

    /// Differential `d_k : V_k → V_{k−1}`, when both spaces are stored.
    pub fn differential(&self, k: i64) -> Option<&RatMatrix> {
        let j = self.index(k)?;
        j.checked_sub(1).map(|j| &self.diffs[j])
    }

    fn index(&self, k: i64) -> Option<usize> {
        let j = k - self.low;
        (j >= 0 && (j as usize) < self.dims.len()).then_some(j as usize)
    }

    /// Rank of every stored differential, `ranks[j] = rank d_{low+j+1}`.
    pub fn ranks(&self) -> Vec<usize> {
        use rayon::prelude::*;
        self.diffs.par_iter().map(RatMatrix::rank).collect()
    }

    /// Homology dimensions `H_k = dim V_k − rank d_k − rank d_{k+1}`, lowest degree first.
    ///
    /// Differentials leaving the stored range count as zero.
    pub fn homology_dims(&self) -> Vec<usize> {
        homology_from_ranks(&self.dims, &self.ranks())
    }
}

/// Homology dimensions from space dimensions and the ranks of the maps between neighbours.
pub fn homology_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|j| {
            let out = if j > 0 { ranks[j - 1] } else { 0 };
            let inc = ranks.get(j).copied().unwrap_or(0);
            dims[j] - out - inc
        })
        .collect()
}

/// Homology dimensions of a complex; see [`MatrixComplex::homology_dims`].
pub fn homology_dims(c: &MatrixComplex) -> Vec<usize> {
    c.homology_dims()
}

/// Spectral projectors of `m` for an integer spectrum.
///
/// Requires `∏_e (m − e·I) = 0` over the distinct values `eigs`. Returns, in the order of
/// `eigs`, the Lagrange projectors `P_e = ∏_{f ≠ e} (m − f·I)/(e − f)`.
pub fn spectral_projectors(m: &RatMatrix, eigs: &[i64]) -> Result<Vec<RatMatrix>> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch(
            "projectors need a square matrix".into(),
        ));
    }
    let mut distinct = eigs.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != eigs.len() {
        return Err(Error::SpectrumMismatch(eigs.to_vec()));
    }
    let n = m.rows();
    let shifted: Vec<RatMatrix> = eigs
        .iter()
        .map(|&e| m.sub(&RatMatrix::identity(n).scale(&rat(e))))
        .collect::<Result<_>>()?;
    let mut total = RatMatrix::identity(n);
    for s in &shifted {
        total = total.mul(s)?;
    }
    if !total.is_zero() {
        return Err(Error::SpectrumMismatch(eigs.to_vec()));
    }
    eigs.iter()
        .enumerate()
        .map(|(a, &e)| {
            let mut p = RatMatrix::identity(n);
            for (b, &f) in eigs.iter().enumerate() {
                if a != b {
                    p = p.mul(&shifted[b])?.scale(&frac(1, e - f));
                }
            }
            Ok(p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RatMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RatMatrix::identity(5).rank(), 5);
        let f = RatMatrix::from_fn(2, 2, |i, j| frac(1, (i + j + 1) as i64));
        assert_eq!(f.rank(), 2);
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0], &[0, 1, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_and_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());

        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert!(a.select(&[0, 1], &[0, 1]).inverse().is_none());
    }

    #[test]
    fn homology_of_small_complexes() {
        let id = MatrixComplex::new(0, vec![3, 3], vec![RatMatrix::identity(3)]).unwrap();
        assert_eq!(id.homology_dims(), vec![0, 0]);
        let zero = MatrixComplex::new(0, vec![3, 3], vec![RatMatrix::zeros(3, 3)]).unwrap();
        assert_eq!(zero.homology_dims(), vec![3, 3]);
        assert_eq!(zero.high(), 1);
    }

    #[test]
    fn rejects_non_complexes() {
        let d = RatMatrix::identity(1);
        let err = MatrixComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { degree: 0 });
    }

    #[test]
    fn diagonal_projectors() {
        let p = spectral_projectors(&RatMatrix::diagonal(&[0, 2]), &[0, 2]).unwrap();
        assert_eq!(p[0], RatMatrix::diagonal(&[1, 0]));
        assert_eq!(p[1], RatMatrix::diagonal(&[0, 1]));
        assert!(matches!(
            spectral_projectors(&RatMatrix::diagonal(&[0, 2]), &[0, 1]),
            Err(Error::SpectrumMismatch(_))
        ));
    }

    #[test]
    fn sparse_matches_dense() {
        let mut a = SparseMatrix::zeros(2, 3);
        a.add_entry(0, 1, rat(2));
        a.add_entry(1, 2, frac(1, 2));
        a.add_entry(1, 2, frac(-1, 2));
        assert_eq!(a.nnz(), 1);
        let mut b = SparseMatrix::zeros(3, 2);
        b.add_entry(1, 0, rat(3));
        b.add_entry(2, 1, rat(5));
        let prod = a.mul(&b).unwrap().to_dense();
        assert_eq!(prod, a.to_dense().mul(&b.to_dense()).unwrap());
        assert_eq!(prod[(0, 0)], rat(6));
        assert_eq!(a.select_dense(&[0], &[1, 0]).row(0), &[rat(2), rat(0)]);
    }

    #[test]
    fn json_round_trip() {
        let a = RatMatrix::from_fn(2, 2, |i, j| frac(i as i64 + 1, j as i64 + 2));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"[["1/2","1/3"],["1","2/3"]]"#);
        let back: RatMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
