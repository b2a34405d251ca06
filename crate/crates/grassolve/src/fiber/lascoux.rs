//! Lascoux complexes evaluated at the cycle `t`.
//!
//! For `0 ≤ j ≤ m = N − 2` the complex has the term `Sym_k W ⊗ ⋀^{m−j+k} U` in homological
//! degree `l = j − k`, `k = 0..=j`, optionally tensored with a constant factor
//! `⋀^{twist} U`. At a point `x = Σ s_r ⊗ f_r` of `W ⊗ U` the differential is
//! `p ⊗ ω ↦ Σ_r (s_r·p) ⊗ (f_r ∧ ω)`; at `x = t` this is
//! `p ⊗ ω ↦ e₂p ⊗ u₁∧ω − e₁p ⊗ u₂∧ω`, the constant factor carried along unchanged.
//!
//! The complex is the push-forward from `P(W*) = P¹` of the Koszul complex twisted by
//! `O(j)`, whose Koszul term of degree `d` is `O(j − d) ⊗ ⋀^d U`. Push-forward preserves
//! exactness in degrees `0..=M−1` as long as the terms of degrees `1..=M+1` have no `h¹`;
//! [`promised_exact_degrees`] evaluates that hypothesis.

use serde::Serialize;

use crate::complex::binomial;
use crate::error::{Error, Result};
use crate::exactlin::{rat, MatrixComplex, RatMatrix};

use super::masks_with_popcount;

/// `h¹(P¹, O(a))`.
fn h1_line(a: i64) -> u64 {
    (-a - 1).max(0) as u64
}

/// Degrees `l` in which the push-forward hypothesis guarantees exactness.
///
/// Degree `l` is promised when `h¹(O(j − d)) · C(m, d) = 0` for every Koszul degree
/// `1 ≤ d ≤ l + 2`.
pub fn promised_exact_degrees(n: usize, j: usize) -> Vec<usize> {
    let m = n - 2;
    let vanishes = |d: usize| h1_line(j as i64 - d as i64) * binomial(m, d) == 0;
    (0..=j).filter(|&l| (1..=l + 2).all(vanishes)).collect()
}

/// Basis of `Sym_k W ⊗ ⋀^r U ⊗ ⋀^s U`: `(power of e₂, exterior mask, twist mask)`.
fn term_basis(k: usize, r: usize, s: usize, m: usize) -> Vec<(usize, u32, u32)> {
    let wedges = masks_with_popcount(m, r);
    let twists = masks_with_popcount(m, s);
    let mut out = Vec::new();
    for b in 0..=k {
        for &w in &wedges {
            for &tw in &twists {
                out.push((b, w, tw));
            }
        }
    }
    out
}

/// `u_j ∧ ω` for an exterior monomial `ω`: the new mask and sign, or `None`.
fn wedge_front(j: usize, mask: u32) -> Option<(u32, i64)> {
    if mask & (1 << j) != 0 {
        return None;
    }
    let before = (mask & ((1 << j) - 1)).count_ones();
    Some((
        mask | (1 << j),
        if before.is_multiple_of(2) { 1 } else { -1 },
    ))
}

/// The Lascoux complex for `j` evaluated at `t`, degrees `l = 0..=j`.
pub fn lascoux_complex(n: usize, j: usize, twist: usize) -> Result<MatrixComplex> {
    super::build_t(n)?;
    let m = n - 2;
    if j > m || twist > m {
        return Err(Error::Unsupported(format!(
            "the Lascoux complex needs j ≤ N − 2 and twist ≤ N − 2, got j = {j}, twist = {twist}"
        )));
    }
    // degree l holds k = j − l
    let bases: Vec<Vec<(usize, u32, u32)>> = (0..=j)
        .map(|l| term_basis(j - l, m - l, twist, m))
        .collect();
    let mut diffs = Vec::new();
    for l in 0..j {
        let source = &bases[l + 1];
        let target = &bases[l];
        let index: std::collections::HashMap<(usize, u32, u32), usize> =
            target.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut d = RatMatrix::zeros(target.len(), source.len());
        for (col, &(b, w, tw)) in source.iter().enumerate() {
            // e₂·p ⊗ u₁ ∧ ω
            if let Some((w2, s)) = wedge_front(0, w) {
                d[(index[&(b + 1, w2, tw)], col)] += rat(s);
            }
            // − e₁·p ⊗ u₂ ∧ ω
            if let Some((w2, s)) = wedge_front(1, w) {
                d[(index[&(b, w2, tw)], col)] -= rat(s);
            }
        }
        diffs.push(d);
    }
    MatrixComplex::new(0, bases.iter().map(Vec::len).collect(), diffs)
}

/// Homology of a Lascoux complex compared with the promised exact range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LascouxReport {
    /// Dimension `N`.
    pub n: usize,
    /// Twist `j` of `O(j)`.
    pub j: usize,
    /// Exterior power of the constant factor.
    pub twist: usize,
    /// Dimensions in degrees `0..=j`.
    pub dims: Vec<usize>,
    /// Homology in degrees `0..=j`.
    pub homology: Vec<usize>,
    /// Degrees promised exact.
    pub promised: Vec<usize>,
    /// Degrees with zero homology.
    pub realized: Vec<usize>,
}

impl LascouxReport {
    /// Builds the complex and compares.
    pub fn compute(n: usize, j: usize, twist: usize) -> Result<Self> {
        let c = lascoux_complex(n, j, twist)?;
        let homology = c.homology_dims();
        let realized = (0..homology.len()).filter(|&l| homology[l] == 0).collect();
        Ok(Self {
            n,
            j,
            twist,
            dims: c.dims().to_vec(),
            homology,
            promised: promised_exact_degrees(n, j),
            realized,
        })
    }

    /// True when every promised degree is exact.
    pub fn holds(&self) -> bool {
        self.promised.iter().all(|l| self.realized.contains(l))
    }
}
