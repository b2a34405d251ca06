//! Symbolic resolutions of the diagonal.
//!
//! A [`ComplexDescriptor`] lists, per homological degree, the homogeneous bundles on
//! `X × X` that make up a resolution, together with the arrows between consecutive
//! degrees. Two families are built here:
//!
//! * [`koszul_gr`]: the Koszul complex on `Gr(k,N) × Gr(k,N)`, whose degree-`i` term is
//!   `⊕_{|α|=i} Σ^α S ⊠ Σ^{α*} S^⊥`;
//! * [`tate_spgr`]: the Tate complex `D` on `SpGr(2,N) × SpGr(2,N)`, whose degree-`k` term
//!   is `⊕ Σ^α S ⊠ Ψ_{α*}` over two-row diagrams `α` with `|α| = k` and
//!   `α₁ − α₂ ≤ N − 2`, with its subcomplex [`subcomplex_b`] (first row at most `N − 3`)
//!   and the quotient [`quotient_q`].
//!
//! The bundle `Ψ_β` has a filtration with graded pieces `Σ^{β−2i} S^⊥`, listed by
//! [`psi_layers`]. Arrows connect `α` to every `γ` obtained by removing one box.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{cauchy_terms, partitions_of, schur_dim, Partition};

/// Shape of one summand of a resolution term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TermKind {
    /// `Σ^α S ⊠ Σ^β S^⊥`.
    #[serde(rename = "schur")]
    SchurPair {
        /// Diagram on the first factor.
        alpha: Partition,
        /// Diagram on the second factor.
        beta: Partition,
    },
    /// `Σ^α S ⊠ Ψ_{α*}`.
    #[serde(rename = "psi")]
    PsiPair {
        /// Diagram on the first factor.
        alpha: Partition,
    },
    /// `O(−a) ⊠ O(−b)`.
    #[serde(rename = "twist")]
    Twist {
        /// Twist on the first factor.
        a: u32,
        /// Twist on the second factor.
        b: u32,
    },
}

/// A summand of a resolution term on `X × X` with `X ⊂ Gr(k,N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleTerm {
    kind: TermKind,
    k: usize,
    n: usize,
}

impl BundleTerm {
    /// `Σ^α S ⊠ Σ^β S^⊥` on `Gr(k,N) × Gr(k,N)`.
    pub fn schur_pair(alpha: Partition, beta: Partition, k: usize, n: usize) -> Result<Self> {
        if alpha.rows() > k || beta.rows() > n - k {
            return Err(Error::TooManyRows {
                what: "Schur pair",
                rows: alpha.rows().max(beta.rows()),
                max: if alpha.rows() > k { k } else { n - k },
            });
        }
        Ok(Self {
            kind: TermKind::SchurPair { alpha, beta },
            k,
            n,
        })
    }

    /// `Σ^α S ⊠ Ψ_{α*}` on `SpGr(2,N) × SpGr(2,N)`.
    pub fn psi_pair(alpha: Partition, n: usize) -> Result<Self> {
        if alpha.rows() > 2 {
            return Err(Error::TooManyRows {
                what: "Tate index",
                rows: alpha.rows(),
                max: 2,
            });
        }
        Ok(Self {
            kind: TermKind::PsiPair { alpha },
            k: 2,
            n,
        })
    }

    /// `O(−a) ⊠ O(−b)`.
    pub fn twist(a: u32, b: u32, k: usize, n: usize) -> Self {
        Self {
            kind: TermKind::Twist { a, b },
            k,
            n,
        }
    }

    /// The shape of the summand.
    pub fn kind(&self) -> &TermKind {
        &self.kind
    }

    /// The diagram on the first factor, when there is one.
    pub fn alpha(&self) -> Option<&Partition> {
        match &self.kind {
            TermKind::SchurPair { alpha, .. } | TermKind::PsiPair { alpha } => Some(alpha),
            TermKind::Twist { .. } => None,
        }
    }

    /// Rank of the bundle.
    pub fn rank(&self) -> u64 {
        match &self.kind {
            TermKind::SchurPair { alpha, beta } => {
                schur_dim(alpha, self.k) * schur_dim(beta, self.n - self.k)
            }
            TermKind::PsiPair { alpha } => {
                schur_dim(alpha, 2) * psi_rank(&alpha.conjugate(), self.n)
            }
            TermKind::Twist { .. } => 1,
        }
    }
}

impl fmt::Display for BundleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TermKind::SchurPair { alpha, beta } => write!(f, "Σ^{alpha}S ⊠ Σ^{beta}S^⊥"),
            TermKind::PsiPair { alpha } => write!(f, "Σ^{alpha}S ⊠ Ψ{}", alpha.conjugate()),
            TermKind::Twist { a, b } => write!(f, "O(-{a}) ⊠ O(-{b})"),
        }
    }
}

/// Rank of `Ψ_β` on `SpGr(2,N)`: the sum of the ranks of its graded pieces.
pub fn psi_rank(beta: &Partition, n: usize) -> u64 {
    psi_layers(beta)
        .map(|layers| layers.iter().map(|l| schur_dim(l, n - 2)).sum())
        .unwrap_or(0)
}

/// Graded pieces of `Ψ_β`: `β`, then repeated removal of a leading row of length two.
pub fn psi_layers(beta: &Partition) -> Result<Vec<Partition>> {
    let mut out = vec![beta.clone()];
    let mut current = beta.clone();
    while let Some(next) = current.shrink()? {
        out.push(next.clone());
        current = next;
    }
    Ok(out)
}

/// An arrow from summand `source` of degree `degree` to summand `target` of degree `degree − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    /// Homological degree of the source.
    pub degree: usize,
    /// Index of the source within its degree.
    pub source: usize,
    /// Index of the target within degree `degree − 1`.
    pub target: usize,
}

/// Term lists and arrows of a bounded complex of bundles, degree 0 first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDescriptor {
    k: usize,
    n: usize,
    terms: Vec<Vec<BundleTerm>>,
    arrows: Vec<Arrow>,
}

impl ComplexDescriptor {
    /// Builds a descriptor and derives the arrows: each summand with diagram `α` points to
    /// every summand one degree lower whose diagram is obtained by removing one box of `α`.
    pub fn from_terms(k: usize, n: usize, terms: Vec<Vec<BundleTerm>>) -> Self {
        let mut arrows = Vec::new();
        for degree in 1..terms.len() {
            for (source, term) in terms[degree].iter().enumerate() {
                let Some(alpha) = term.alpha() else { continue };
                let targets = alpha.boundary();
                for (target, lower) in terms[degree - 1].iter().enumerate() {
                    if lower.alpha().is_some_and(|g| targets.contains(g)) {
                        arrows.push(Arrow {
                            degree,
                            source,
                            target,
                        });
                    }
                }
            }
        }
        Self {
            k,
            n,
            terms,
            arrows,
        }
    }

    /// Dimension `k` of the tautological subbundle.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension `N` of the ambient space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Highest stored degree (the list may end with empty degrees).
    pub fn top_degree(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Summands in degree `d` (empty past the stored range).
    pub fn terms(&self, d: usize) -> &[BundleTerm] {
        self.terms.get(d).map_or(&[], Vec::as_slice)
    }

    /// All arrows.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Rank of the degree-`d` term.
    pub fn rank(&self, d: usize) -> u64 {
        self.terms(d).iter().map(BundleTerm::rank).sum()
    }

    /// Diagrams of the summands in degree `d`, in stored order.
    pub fn alphas(&self, d: usize) -> Vec<Partition> {
        self.terms(d)
            .iter()
            .filter_map(|t| t.alpha().cloned())
            .collect()
    }

    /// Per-degree JSON records `{"degree", "terms", "arrows"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<serde_json::Value> = self
            .terms
            .iter()
            .enumerate()
            .map(|(degree, terms)| {
                let terms: Vec<serde_json::Value> = terms
                    .iter()
                    .map(|t| {
                        let mut v = serde_json::to_value(t.kind()).expect("term kinds serialize");
                        v["rank"] = t.rank().into();
                        v
                    })
                    .collect();
                let arrows: Vec<[usize; 2]> = self
                    .arrows
                    .iter()
                    .filter(|a| a.degree == degree)
                    .map(|a| [a.source, a.target])
                    .collect();
                serde_json::json!({ "degree": degree, "terms": terms, "arrows": arrows })
            })
            .collect();
        serde_json::Value::Array(records)
    }

    /// One line per degree, highest degree first, with each summand and its rank.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for degree in (0..self.terms.len()).rev() {
            let terms = self.terms(degree);
            let body = if terms.is_empty() {
                "0".to_string()
            } else {
                terms
                    .iter()
                    .map(|t| format!("{t} [{}]", t.rank()))
                    .collect::<Vec<_>>()
                    .join(" ⊕ ")
            };
            out.push_str(&format!(
                "deg {degree:>2} | rank {:>5} | {body}\n",
                self.rank(degree)
            ));
        }
        out
    }
}

fn check_grassmannian(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Unsupported(format!("Gr({k},{n}) needs 1 ≤ k < N")));
    }
    Ok(())
}

fn check_isotropic(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "SpGr(2,{n}) needs an even N of at least 4"
        )));
    }
    Ok(())
}

/// The Koszul resolution of the diagonal of `Gr(k,N)`, degrees `0..=k(N−k)`.
pub fn koszul_gr(k: usize, n: usize) -> Result<ComplexDescriptor> {
    check_grassmannian(k, n)?;
    let terms = (0..=k * (n - k))
        .map(|i| {
            cauchy_terms(i, k, n - k)
                .into_iter()
                .map(|a| BundleTerm::schur_pair(a.clone(), a.conjugate(), k, n))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexDescriptor::from_terms(k, n, terms))
}

/// Two-row diagrams of size `d` with `α₁ − α₂ ≤ N − 2`, in decreasing lexicographic order.
pub fn tate_indices(n: usize, d: usize) -> Vec<Partition> {
    partitions_of(d, 2, d as u32)
        .into_iter()
        .filter(|a| (a.part(0) - a.part(1)) as usize <= n - 2)
        .collect()
}

/// True when `PsiPair(α)` belongs to the subcomplex `B`.
pub fn in_subcomplex_b(alpha: &Partition, n: usize) -> bool {
    alpha.first() as usize <= n - 3
}

fn psi_degrees(
    n: usize,
    max_degree: usize,
    keep: impl Fn(&Partition) -> bool,
) -> Result<Vec<Vec<BundleTerm>>> {
    (0..=max_degree)
        .map(|d| {
            tate_indices(n, d)
                .into_iter()
                .filter(|a| keep(a))
                .map(|a| BundleTerm::psi_pair(a, n))
                .collect()
        })
        .collect()
}

/// The Tate complex `D` on `SpGr(2,N) × SpGr(2,N)` in degrees `0..=max_degree`.
pub fn tate_spgr(n: usize, max_degree: usize) -> Result<ComplexDescriptor> {
    check_isotropic(n)?;
    Ok(ComplexDescriptor::from_terms(
        2,
        n,
        psi_degrees(n, max_degree, |_| true)?,
    ))
}

/// The subcomplex `B ⊂ D`: summands with first row at most `N − 3`, degrees `0..=2N−6`.
pub fn subcomplex_b(n: usize) -> Result<ComplexDescriptor> {
    check_isotropic(n)?;
    Ok(ComplexDescriptor::from_terms(
        2,
        n,
        psi_degrees(n, 2 * n - 6, |a| in_subcomplex_b(a, n))?,
    ))
}

/// The quotient `Q = D / B` in degrees `0..=max_degree`.
pub fn quotient_q(n: usize, max_degree: usize) -> Result<ComplexDescriptor> {
    check_isotropic(n)?;
    Ok(ComplexDescriptor::from_terms(
        2,
        n,
        psi_degrees(n, max_degree, |a| !in_subcomplex_b(a, n))?,
    ))
}

/// The resolution of the diagonal of `SpGr(2,4)`: `B` followed by its kernel
/// `O(−2) ⊠ O(−1)` in degree 3.
pub fn resolution_spgr4() -> Result<ComplexDescriptor> {
    let mut terms = psi_degrees(4, 2, |a| in_subcomplex_b(a, 4))?;
    terms.push(vec![BundleTerm::twist(2, 1, 2, 4)]);
    Ok(ComplexDescriptor::from_terms(2, 4, terms))
}

/// Outcome of the degree-two periodicity comparison of `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    /// Degrees compared.
    pub checked: Vec<usize>,
    /// First degree where `D_k` differs from the shift of `D_{k−2}`, if any.
    pub first_failure: Option<usize>,
}

impl PeriodicityReport {
    /// True when every compared degree matched.
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares `D_k` with `D_{k−2} ⊗ (O(−1) ⊠ O)` for `2(N−2) < k ≤ up_to`.
///
/// A degree matches when `α ↦ α + (1,1)` is a bijection between the index sets, the
/// graded pieces of `Ψ_{α*}` with nonzero rank agree, and the ranks agree.
pub fn periodicity_check(n: usize, up_to: usize) -> Result<PeriodicityReport> {
    check_isotropic(n)?;
    let start = 2 * (n - 2) + 1;
    let d = tate_spgr(n, up_to)?;
    let nonzero_layers = |a: &Partition| -> Result<Vec<Partition>> {
        Ok(psi_layers(&a.conjugate())?
            .into_iter()
            .filter(|l| schur_dim(l, n - 2) > 0)
            .collect())
    };
    let mut checked = Vec::new();
    let mut first_failure = None;
    for k in start..=up_to {
        checked.push(k);
        let shifted: Vec<Partition> = d
            .alphas(k - 2)
            .iter()
            .map(|a| a.add_columns(2, 1))
            .collect();
        let mut same = shifted == d.alphas(k) && d.rank(k) == d.rank(k - 2);
        if same {
            for a in d.alphas(k - 2) {
                if nonzero_layers(&a)? != nonzero_layers(&a.add_columns(2, 1))? {
                    same = false;
                }
            }
        }
        if !same && first_failure.is_none() {
            first_failure = Some(k);
        }
    }
    Ok(PeriodicityReport {
        checked,
        first_failure,
    })
}

/// Rank of the kernel ending the resolution `B`: `|Σ_{i=0}^{2N−6} (−1)^i rank B_i|`.
pub fn kernel_rank_b(n: usize) -> Result<u64> {
    let b = subcomplex_b(n)?;
    let alt: i64 = (0..=b.top_degree())
        .map(|i| {
            let r = b.rank(i) as i64;
            if i % 2 == 0 {
                r
            } else {
                -r
            }
        })
        .sum();
    Ok(alt.unsigned_abs())
}

/// `Σ_i C(2(N−2), k−2i)`, the rank of `D_k` counted in the exterior algebra with one
/// polynomial variable of degree two.
pub fn exterior_tate_rank(n: usize, k: usize) -> u64 {
    (0..=k / 2).map(|i| binomial(2 * (n - 2), k - 2 * i)).sum()
}

/// Binomial coefficient, zero when `r > m`.
pub fn binomial(m: usize, r: usize) -> u64 {
    if r > m {
        return 0;
    }
    let r = r.min(m - r);
    (0..r).fold(1u64, |acc, i| acc * (m - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn koszul_terms() {
        let c = koszul_gr(2, 4).unwrap();
        assert_eq!(c.alphas(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(c.alphas(0), vec![Partition::empty()]);
        let count: usize = (0..=c.top_degree()).map(|d| c.terms(d).len()).sum();
        assert_eq!(count, 6);
        for d in 0..=4 {
            assert_eq!(c.rank(d), binomial(4, d));
        }
    }

    #[test]
    fn layers() {
        assert_eq!(
            psi_layers(&p(&[2])).unwrap(),
            vec![p(&[2]), Partition::empty()]
        );
        assert_eq!(
            psi_layers(&p(&[2, 2])).unwrap(),
            vec![p(&[2, 2]), p(&[2]), Partition::empty()]
        );
        assert_eq!(psi_layers(&p(&[1, 1])).unwrap(), vec![p(&[1, 1])]);
        assert_eq!(psi_layers(&p(&[2, 1])).unwrap(), vec![p(&[2, 1]), p(&[1])]);
        assert!(psi_layers(&p(&[3])).is_err());
    }

    #[test]
    fn tate_terms() {
        let d6 = tate_spgr(6, 8).unwrap();
        assert_eq!(d6.alphas(7), vec![p(&[5, 2]), p(&[4, 3])]);
        let d4 = tate_spgr(4, 3).unwrap();
        assert_eq!(d4.alphas(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(d4.alphas(0), vec![Partition::empty()]);
        assert_eq!(d4.rank(2), 3 + 4);
    }

    #[test]
    fn tate_ranks_match_exterior_count() {
        for n in [4, 6, 8] {
            let d = tate_spgr(n, 2 * n).unwrap();
            for k in 0..=2 * n {
                assert_eq!(d.rank(k), exterior_tate_rank(n, k), "N={n} k={k}");
                if k >= 2 {
                    assert_eq!(d.rank(k), binomial(2 * (n - 2), k) + d.rank(k - 2));
                }
            }
        }
    }

    #[test]
    fn subcomplex_and_quotient() {
        let b4 = subcomplex_b(4).unwrap();
        assert_eq!(b4.top_degree(), 2);
        assert_eq!(b4.alphas(1), vec![p(&[1])]);
        assert_eq!(b4.alphas(2), vec![p(&[1, 1])]);
        assert_eq!(b4.rank(2), 4);
        assert_eq!(subcomplex_b(6).unwrap().alphas(6), vec![p(&[3, 3])]);
        assert_eq!(quotient_q(4, 3).unwrap().alphas(3), vec![p(&[2, 1])]);
        assert_eq!(quotient_q(4, 3).unwrap().rank(3), 8);
        assert_eq!(quotient_q(6, 4).unwrap().alphas(4), vec![p(&[4])]);
        for n in [4, 6, 8] {
            let d = tate_spgr(n, 2 * n).unwrap();
            let b = subcomplex_b(n).unwrap();
            let q = quotient_q(n, 2 * n).unwrap();
            for k in 0..=2 * n {
                assert_eq!(d.rank(k), b.rank(k) + q.rank(k));
            }
        }
    }

    #[test]
    fn subcomplex_is_closed_under_arrows() {
        for n in [4, 6, 8] {
            let b = subcomplex_b(n).unwrap();
            let d = tate_spgr(n, 2 * n).unwrap();
            for k in 1..=b.top_degree() {
                for a in b.alphas(k) {
                    for g in a.boundary() {
                        if d.alphas(k - 1).contains(&g) {
                            assert!(b.alphas(k - 1).contains(&g));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn arrows_follow_box_removal() {
        let d = tate_spgr(6, 8).unwrap();
        for a in d.arrows() {
            let src = d.terms(a.degree)[a.source].alpha().unwrap();
            let dst = d.terms(a.degree - 1)[a.target].alpha().unwrap();
            assert!(src.boundary().contains(dst));
        }
    }

    #[test]
    fn periodicity() {
        assert!(periodicity_check(4, 8).unwrap().holds());
        assert!(periodicity_check(6, 12).unwrap().holds());
        assert_eq!(
            periodicity_check(6, 12).unwrap().checked,
            vec![9, 10, 11, 12]
        );
    }

    #[test]
    fn kernel_ranks() {
        assert_eq!(kernel_rank_b(4).unwrap(), 1);
        assert_eq!(subcomplex_b(6).unwrap().rank(0), 1);
    }

    #[test]
    fn json_shape() {
        let v = subcomplex_b(4).unwrap().to_json();
        assert_eq!(v[1]["degree"], 1);
        assert_eq!(v[1]["terms"][0]["kind"], "psi");
        assert_eq!(v[1]["terms"][0]["alpha"], serde_json::json!([1]));
        assert_eq!(v[1]["terms"][0]["rank"], 4);
        assert_eq!(v[1]["arrows"], serde_json::json!([[0, 0]]));
    }

    #[test]
    fn spgr4_resolution_has_four_terms() {
        let r = resolution_spgr4().unwrap();
        let count: usize = (0..=r.top_degree()).map(|d| r.terms(d).len()).sum();
        assert_eq!(count, 4);
        assert_eq!(r.rank(3), 1);
    }
}
