//! Young diagram combinatorics.
//!
//! A [`Partition`] is a non-increasing list of positive integers; trailing
//! zeros are dropped on construction so that `(2,1,0)` and `(2,1)` are the
//! same value. The module provides conjugation, the Littlewood-Richardson
//! product computed from strict expansions, Schur functor dimensions by the
//! hook-content formula, the index sets of the Cauchy decomposition, and the
//! two small operators used to index resolution terms: removal of a single
//! box ([`Partition::boundary`]) and removal of a leading row of length two
//! ([`Partition::shrink`]).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram stored as its non-zero row lengths in non-increasing order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from row lengths, dropping trailing zeros.
    ///
    /// Fails when the rows are not non-increasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                parts.iter().map(|&x| i64::from(x)).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single-row diagram `(n)`, or the empty diagram when `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The single-column diagram with `n` boxes.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Self::from_sorted(vec![cols; rows])
    }

    /// Internal constructor for rows already known to be non-increasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    /// Non-zero row lengths.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Length of row `i` (zero past the last row).
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of non-zero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row (zero for the empty diagram).
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Total number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&x| x as usize).sum()
    }

    /// True for the empty diagram.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the diagram: `result[j] = #{i : self[i] > j}`.
    pub fn conjugate(&self) -> Self {
        let cols = self.first() as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&x| x as usize > j).count() as u32)
            .collect();
        Self::from_sorted(parts)
    }

    /// True when every row of `other` is at most the matching row of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && (0..other.rows()).all(|i| other.part(i) <= self.part(i))
    }

    /// Adds `n` boxes to each of the first `rows` rows.
    pub fn add_columns(&self, rows: usize, n: u32) -> Self {
        let len = rows.max(self.rows());
        let parts = (0..len)
            .map(|i| self.part(i) + if i < rows { n } else { 0 })
            .collect();
        Self::from_sorted(parts)
    }

    /// Removes `n` boxes from each of the first `rows` rows, if the result is a diagram
    /// containing only rows of non-negative length and rows past `rows` still fit.
    pub fn remove_columns(&self, rows: usize, n: u32) -> Option<Self> {
        if self.rows() > rows && n > 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(rows);
        for i in 0..rows {
            parts.push(self.part(i).checked_sub(n)?);
        }
        Some(Self::from_sorted(parts))
    }

    /// All diagrams obtained by removing one removable box.
    ///
    /// The result lists the diagrams in decreasing lexicographic order.
    pub fn boundary(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Self::from_sorted(parts));
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Removes a leading row of length two from a diagram with at most two columns.
    ///
    /// Returns `Ok(Some(rest))` when the first row has length two, `Ok(None)` when the first
    /// row is shorter (including the empty diagram), and an error when it is longer.
    pub fn shrink(&self) -> Result<Option<Partition>> {
        match self.first() {
            0 | 1 => Ok(None),
            2 => Ok(Some(Self::from_sorted(self.parts[1..].to_vec()))),
            other => Err(Error::NotTwoColumn(other)),
        }
    }

    /// Left-aligned rows of `[]` boxes, one line per row; the empty diagram renders as `.`.
    pub fn to_ascii(&self) -> String {
        if self.is_empty() {
            return ".".to_string();
        }
        self.parts
            .iter()
            .map(|&n| "[]".repeat(n as usize))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `2,1`, `(2,1)`, `[2,1]` or the empty forms `()`, `[]`, ``.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Multiset of diagrams with multiplicities.
pub type Multiset = BTreeMap<Partition, u64>;

/// Littlewood-Richardson product of `p` and `q`, keeping diagrams with at most `max_rows` rows.
///
/// Boxes of `q` are added row by row to `p`: the boxes of row `r` carry the label `r` and form
/// a horizontal strip. A filling counts when its reading word (rows top to bottom, each row
/// right to left) is a lattice word. The multiplicity of `ν` is the number of such fillings.
pub fn lr_tensor(p: &Partition, q: &Partition, max_rows: usize) -> Multiset {
    let mut out = Multiset::new();
    if p.rows() > max_rows || q.rows() > max_rows {
        return out;
    }
    // labels[row][label] = number of boxes with `label` added to `row`
    let mut labels: Vec<Vec<u32>> = Vec::new();
    expand(p.parts.clone(), q, 0, &mut labels, max_rows, &mut out);
    out
}

fn expand(
    shape: Vec<u32>,
    q: &Partition,
    label: usize,
    labels: &mut Vec<Vec<u32>>,
    max_rows: usize,
    out: &mut Multiset,
) {
    if label == q.rows() {
        if is_lattice(labels, q.rows()) {
            *out.entry(Partition::from_sorted(shape)).or_insert(0) += 1;
        }
        return;
    }
    let count = q.part(label);
    for strip in horizontal_strips(&shape, count, max_rows) {
        let mut next = shape.clone();
        next.resize(strip.len().max(next.len()), 0);
        for (row, &added) in strip.iter().enumerate() {
            if added > 0 {
                next[row] += added;
                if labels.len() <= row {
                    labels.resize(row + 1, Vec::new());
                }
                if labels[row].len() <= label {
                    labels[row].resize(label + 1, 0);
                }
                labels[row][label] += added;
            }
        }
        expand(next, q, label + 1, labels, max_rows, out);
        for (row, &added) in strip.iter().enumerate() {
            if added > 0 {
                labels[row][label] -= added;
            }
        }
    }
}

/// All ways to add `count` boxes to `shape`, no two in the same column, giving a diagram with
/// at most `max_rows` rows. Each result lists the number of boxes added to each row.
fn horizontal_strips(shape: &[u32], count: u32, max_rows: usize) -> Vec<Vec<u32>> {
    let rows = (shape.len() + 1).min(max_rows);
    let mut out = Vec::new();
    let mut current = vec![0u32; rows];
    strips_rec(shape, 0, count, rows, &mut current, &mut out);
    out
}

fn strips_rec(
    shape: &[u32],
    row: usize,
    remaining: u32,
    rows: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if row == rows {
        return;
    }
    let here = shape.get(row).copied().unwrap_or(0);
    // a horizontal strip can reach at most the old length of the row above
    let cap = if row == 0 {
        remaining
    } else {
        shape[row - 1] - here
    };
    for add in (0..=cap.min(remaining)).rev() {
        current[row] = add;
        strips_rec(shape, row + 1, remaining - add, rows, current, out);
    }
    current[row] = 0;
}

fn is_lattice(labels: &[Vec<u32>], nlabels: usize) -> bool {
    let mut seen = vec![0u32; nlabels];
    for row in labels {
        // boxes of a row are read right to left, which is decreasing label order
        for label in (0..row.len()).rev() {
            for _ in 0..row[label] {
                seen[label] += 1;
                if label > 0 && seen[label] > seen[label - 1] {
                    return false;
                }
            }
        }
    }
    true
}

/// Dimension of the Schur functor `Σ^p` applied to an `m`-dimensional space.
///
/// Computed by the hook-content formula; zero when `p` has more than `m` rows.
pub fn schur_dim(p: &Partition, m: usize) -> u64 {
    if p.rows() > m {
        return 0;
    }
    let conj = p.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, &len) in p.parts.iter().enumerate() {
        for j in 0..len as usize {
            let content = m as i64 + j as i64 - i as i64;
            let hook = (len as usize - j) + (conj.part(j) as usize - i) - 1;
            num = num
                .checked_mul(content as u128)
                .expect("schur_dim numerator overflow");
            den = den
                .checked_mul(hook as u128)
                .expect("schur_dim denominator overflow");
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    u64::try_from(num / den).expect("schur_dim does not fit in u64")
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All partitions of `n` with at most `max_rows` rows and parts at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_of(n: usize, max_rows: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n as u32, max_part, max_rows, &mut current, &mut out);
    out
}

fn partitions_rec(
    remaining: u32,
    max_part: u32,
    rows_left: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, rows_left - 1, current, out);
        current.pop();
    }
}

/// All partitions fitting in a box with `rows` rows and `cols` columns, in increasing
/// lexicographic order.
pub fn box_partitions(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=rows * cols as usize)
        .flat_map(|n| partitions_of(n, rows, cols))
        .collect();
    out.sort();
    out
}

/// Index set of the Cauchy decomposition of `⋀^i(E ⊗ F)`.
///
/// Returns every `α` with `|α| = i`, at most `dim_e` rows and first row at most `dim_f`;
/// each contributes `Σ^α E ⊗ Σ^{α*} F`.
pub fn cauchy_terms(i: usize, dim_e: usize, dim_f: usize) -> Vec<Partition> {
    partitions_of(i, dim_e, dim_f as u32)
}

/// Splits a non-increasing integer weight into a partition and a power of the determinant.
///
/// `w = p + d·(1,…,1)` with `d` the last entry of `w`, so `p` has at most `w.len() − 1` rows.
pub fn normalize_weight(w: &[i64]) -> Result<(Partition, i64)> {
    if w.windows(2).any(|x| x[0] < x[1]) {
        return Err(Error::InvalidPartition(w.to_vec()));
    }
    let d = w.last().copied().unwrap_or(0);
    let parts = w.iter().map(|&x| (x - d) as u32).collect();
    Ok((Partition::from_sorted(parts), d))
}

/// Inverse of [`normalize_weight`] for a space of dimension `len`.
pub fn denormalize_weight(p: &Partition, det_power: i64, len: usize) -> Vec<i64> {
    (0..len).map(|i| i64::from(p.part(i)) + det_power).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn lr_small_products() {
        let prod = lr_tensor(&p(&[1]), &p(&[2]), usize::MAX);
        let expected: Multiset = [(p(&[3]), 1), (p(&[2, 1]), 1)].into_iter().collect();
        assert_eq!(prod, expected);

        let prod = lr_tensor(&p(&[3, 1]), &p(&[1, 1]), 2);
        let expected: Multiset = [(p(&[4, 2]), 1)].into_iter().collect();
        assert_eq!(prod, expected);

        let unit = lr_tensor(&Partition::empty(), &p(&[2, 1]), usize::MAX);
        assert_eq!(unit, [(p(&[2, 1]), 1)].into_iter().collect());
    }

    #[test]
    fn lr_conjugate_product_with_sym2() {
        // Σ^{α*} ⊗ Sym_2 for α = (2,1): four summands, each once
        let alpha = p(&[2, 1]);
        let prod = lr_tensor(&alpha.conjugate(), &p(&[2]), usize::MAX);
        let expected: Multiset = [
            p(&[3, 2]).conjugate(),
            p(&[3, 1, 1]).conjugate(),
            p(&[2, 1, 1, 1]).conjugate(),
            p(&[2, 2, 1]).conjugate(),
        ]
        .into_iter()
        .map(|x| (x, 1))
        .collect();
        assert_eq!(prod, expected);
    }

    #[test]
    fn lr_with_nontrivial_multiplicity() {
        let prod = lr_tensor(&p(&[2, 1]), &p(&[2, 1]), usize::MAX);
        assert_eq!(prod[&p(&[3, 2, 1])], 2);
        assert_eq!(prod.values().sum::<u64>(), 8);
    }

    #[test]
    fn schur_dims() {
        assert_eq!(schur_dim(&p(&[1, 1]), 2), 1);
        assert_eq!(schur_dim(&p(&[2, 1]), 3), 8);
        assert_eq!(schur_dim(&p(&[3, 1]), 2), 3);
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), 0);
        assert_eq!(schur_dim(&Partition::empty(), 0), 1);
        assert_eq!(schur_dim(&p(&[2]), 4), 10);
    }

    #[test]
    fn cauchy_index_sets() {
        assert_eq!(cauchy_terms(2, 2, 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(cauchy_terms(0, 2, 2), vec![Partition::empty()]);
        let total: u64 = cauchy_terms(2, 2, 2)
            .iter()
            .map(|a| schur_dim(a, 2) * schur_dim(&a.conjugate(), 2))
            .sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn shrink_operator() {
        assert_eq!(p(&[2, 2]).shrink().unwrap(), Some(p(&[2])));
        assert_eq!(p(&[2, 1, 1]).shrink().unwrap(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).shrink().unwrap(), None);
        assert_eq!(Partition::empty().shrink().unwrap(), None);
        assert_eq!(p(&[2]).shrink().unwrap(), Some(Partition::empty()));
        assert!(p(&[3]).shrink().is_err());
    }

    #[test]
    fn boundaries() {
        assert_eq!(p(&[2, 1]).boundary(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[1]).boundary(), vec![Partition::empty()]);
        assert_eq!(p(&[3, 3]).boundary(), vec![p(&[3, 2])]);
    }

    #[test]
    fn weight_normalization_round_trips() {
        let (part, d) = normalize_weight(&[1, 0, -2]).unwrap();
        assert_eq!(part, p(&[3, 2]));
        assert_eq!(d, -2);
        assert_eq!(denormalize_weight(&part, d, 3), vec![1, 0, -2]);
        assert!(normalize_weight(&[0, 1]).is_err());
    }

    #[test]
    fn parsing_and_rendering() {
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[3]".parse::<Partition>().unwrap(), p(&[3]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[2, 1]).to_ascii(), "[][]\n[]");
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn box_enumeration() {
        let b = box_partitions(2, 2);
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], Partition::empty());
        assert_eq!(b[5], p(&[2, 2]));
    }
}
