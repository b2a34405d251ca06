//! Generating systems for the K-theory of `Gr(k,N)` and `SpGr(2,4)`, checked through
//! triangular pairing matrices.
//!
//! On `Gr(k,N)` the bundles `Σ^α S` for `α` in the `k × (N−k)` box generate, and the
//! matrix `M[a][b] = h⁰(Σ^{α_a} S ⊗ (Σ^{α_b} S)*)` in increasing lexicographic order is upper
//! unitriangular with no higher cohomology. On the hyperplane section `X = SpGr(2,4)` the
//! generators are `O(−2) ≤ O(−1) ≤ S ≤ O`, and the table `Ext^i(H, G) = H^i(X, H* ⊗ G)` has
//! `𝕜` on the diagonal in degree 0, zero below it, and no higher groups.
//!
//! [`resolution_coeffs`] gives the multiplicities `h⁰(F ⊗ Σ^{α*} S^⊥)` of the resolution of
//! a bundle `F` by the generators, after checking that all higher cohomology vanishes.

use std::fmt;

use serde::Serialize;

use crate::bott::{cohomology_gr, cohomology_x, Bundle, CohomologyTable};
use crate::error::{Error, Result};
use crate::partitions::{box_partitions, schur_dim, Partition};

/// A named generating bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    /// Printable name such as `Σ^(2,1) S` or `O(−1)`.
    pub label: String,
    /// The bundle on the ambient Grassmannian.
    pub bundle: Bundle,
}

/// An ordered generating system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    /// Name of the variety.
    pub space: String,
    /// Generators in the order used for pairing matrices.
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    /// Number of generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// True when there are no generators.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generator labels in order.
    pub fn labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }
}

/// `Σ^α S` for every `α` in the `k × (N−k)` box, in increasing lexicographic order.
pub fn generators_gr(k: usize, n: usize) -> Result<GeneratorSet> {
    Bundle::zero(k, n)?;
    let generators = box_partitions(k, (n - k) as u32)
        .into_iter()
        .map(|alpha| {
            Ok(Generator {
                label: format!("Σ^{alpha} S"),
                bundle: Bundle::schur_s(k, n, &alpha)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        space: format!("Gr({k},{n})"),
        generators,
    })
}

/// `Σ^β S^⊥` for every `β` in the `(N−k) × k` box, in increasing lexicographic order.
pub fn dual_generators_gr(k: usize, n: usize) -> Result<GeneratorSet> {
    Bundle::zero(k, n)?;
    let generators = box_partitions(n - k, k as u32)
        .into_iter()
        .map(|beta| {
            Ok(Generator {
                label: format!("Σ^{beta} S^⊥"),
                bundle: Bundle::schur_perp(k, n, &beta)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        space: format!("Gr({k},{n})"),
        generators,
    })
}

/// `O(−2), O(−1), S, O` on `SpGr(2,4)`, as bundles on `Gr(2,4)`.
pub fn generators_spgr4() -> Result<GeneratorSet> {
    let generators = vec![
        Generator {
            label: "O(-2)".into(),
            bundle: Bundle::line(2, 4, -2)?,
        },
        Generator {
            label: "O(-1)".into(),
            bundle: Bundle::line(2, 4, -1)?,
        },
        Generator {
            label: "S".into(),
            bundle: Bundle::schur_s(2, 4, &Partition::row(1))?,
        },
        Generator {
            label: "O".into(),
            bundle: Bundle::trivial(2, 4)?,
        },
    ];
    Ok(GeneratorSet {
        space: "SpGr(2,4)".into(),
        generators,
    })
}

/// A square matrix of `h⁰` values indexed by a generating system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    /// Row and column labels.
    pub labels: Vec<String>,
    /// Entries, row by row.
    pub entries: Vec<Vec<u64>>,
}

impl PairingMatrix {
    /// Zero below the diagonal and one on it.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &x)| (j > i) || (j == i && x == 1) || (j < i && x == 0))
        })
    }
}

impl fmt::Display for PairingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(0);
        let cell = self
            .entries
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (label, row) in self.labels.iter().zip(&self.entries) {
            let pad = width - label.chars().count();
            write!(f, "{label}{:pad$} |", "")?;
            for x in row {
                write!(f, " {x:>cell$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `M[a][b] = h⁰(Σ^{α_a} S ⊗ (Σ^{α_b} S)*)` over [`generators_gr`].
///
/// Fails when some entry has higher cohomology.
pub fn pairing_matrix_gr(k: usize, n: usize) -> Result<PairingMatrix> {
    let set = generators_gr(k, n)?;
    let mut entries = Vec::with_capacity(set.len());
    for a in &set.generators {
        let mut row = Vec::with_capacity(set.len());
        for b in &set.generators {
            let table = cohomology_gr(&a.bundle.tensor(&b.bundle.dual())?)?;
            if let Some(degree) = (1..table.entries().len()).find(|&i| table.h(i) != 0) {
                return Err(Error::NotAcyclic {
                    alpha: format!("{} ⊗ ({})*", a.label, b.label),
                    degree,
                    value: table.h(degree),
                });
            }
            row.push(table.h(0));
        }
        entries.push(row);
    }
    Ok(PairingMatrix {
        labels: set.labels(),
        entries,
    })
}

/// The groups `Ext^i(H, G) = H^i(X, H* ⊗ G)` for the generators of `SpGr(2,4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    /// Generator labels; rows are `H`, columns are `G`.
    pub labels: Vec<String>,
    /// `ext[h][g]` is the cohomology table of `H* ⊗ G` on `X`.
    pub ext: Vec<Vec<CohomologyTable>>,
}

impl ExtTable {
    /// The `Ext⁰` dimensions as a pairing matrix.
    pub fn hom_matrix(&self) -> PairingMatrix {
        PairingMatrix {
            labels: self.labels.clone(),
            entries: self
                .ext
                .iter()
                .map(|row| row.iter().map(|t| t.h(0)).collect())
                .collect(),
        }
    }

    /// `Ext⁰(H,H) = 𝕜`, `Ext⁰(H,G) = 0` for `G < H`, and `Ext^{i>0} = 0` throughout.
    pub fn is_exceptional(&self) -> bool {
        self.hom_matrix().is_unitriangular()
            && self
                .ext
                .iter()
                .flatten()
                .all(CohomologyTable::higher_vanish)
    }
}

/// Computes [`ExtTable`] with [`cohomology_x`]. An indeterminate entry is reported with the
/// offending pair.
pub fn ext_table_spgr4() -> Result<ExtTable> {
    let set = generators_spgr4()?;
    let mut ext = Vec::new();
    for h in &set.generators {
        let mut row = Vec::new();
        for g in &set.generators {
            let table = cohomology_x(&h.bundle.dual().tensor(&g.bundle)?).map_err(|e| {
                Error::Unsupported(format!("Ext({}, {}) on SpGr(2,4): {e}", h.label, g.label))
            })?;
            row.push(table);
        }
        ext.push(row);
    }
    Ok(ExtTable {
        labels: set.labels(),
        ext,
    })
}

/// Multiplicities of the generators in the resolution of a bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionCoeffs {
    /// `(α, h⁰(F ⊗ Σ^{α*} S^⊥))` for every `α` in the box, increasing.
    pub coeffs: Vec<(Partition, u64)>,
    /// Rank of `F`.
    pub rank: u64,
    /// `Σ_α (−1)^{|α|} h⁰(F ⊗ Σ^{α*} S^⊥) · rank Σ^α S`.
    pub euler_rank: i64,
}

/// Resolves `F` by the bundles `Σ^α S`: the term in degree `i` is
/// `⊕_{|α| = i} H⁰(F ⊗ Σ^{α*} S^⊥) ⊗ Σ^α S`.
///
/// Requires `H^{i>0}(F ⊗ Σ^{α*} S^⊥) = 0` for every `α`; the first failure is reported.
/// The alternating rank sum is compared with `rank F`.
pub fn resolution_coeffs(f: &Bundle) -> Result<ResolutionCoeffs> {
    let (k, n) = (f.k(), f.n());
    let mut coeffs = Vec::new();
    let mut euler_rank = 0i64;
    for alpha in box_partitions(k, (n - k) as u32) {
        let twisted = f.tensor(&Bundle::schur_perp(k, n, &alpha.conjugate())?)?;
        let table = cohomology_gr(&twisted)?;
        if let Some(degree) = (1..table.entries().len()).find(|&i| table.h(i) != 0) {
            return Err(Error::NotAcyclic {
                alpha: alpha.to_string(),
                degree,
                value: table.h(degree),
            });
        }
        let h0 = table.h(0);
        let sign = if alpha.weight() % 2 == 0 { 1 } else { -1 };
        euler_rank += sign * (h0 * schur_dim(&alpha, k)) as i64;
        coeffs.push((alpha, h0));
    }
    let rank = f.rank();
    if euler_rank != rank as i64 {
        return Err(Error::DimensionMismatch(format!(
            "alternating rank sum {euler_rank} differs from rank {rank}"
        )));
    }
    Ok(ResolutionCoeffs {
        coeffs,
        rank,
        euler_rank,
    })
}

/// `Σ_α (−1)^{|α|} χ(F ⊗ Σ^{α*} S^⊥) · rank Σ^α S`, which equals `rank F` for every
/// bundle because the resolution of the diagonal is exact in K-theory. For `F` with no
/// higher cohomology against the `Σ^{α*} S^⊥` it agrees with
/// [`ResolutionCoeffs::euler_rank`].
pub fn euler_characteristic_sum(f: &Bundle) -> Result<i64> {
    let (k, n) = (f.k(), f.n());
    let mut total = 0i64;
    for alpha in box_partitions(k, (n - k) as u32) {
        let twisted = f.tensor(&Bundle::schur_perp(k, n, &alpha.conjugate())?)?;
        let chi = cohomology_gr(&twisted)?.euler();
        let sign = if alpha.weight() % 2 == 0 { 1 } else { -1 };
        total += sign * chi * schur_dim(&alpha, k) as i64;
    }
    Ok(total)
}
