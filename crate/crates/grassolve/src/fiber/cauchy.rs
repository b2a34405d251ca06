//! Cauchy components of `⋀^r(W ⊗ U)` cut out by the `gl(W)` Casimir operator.
//!
//! `C = Σ_{a,b} E_ab E_ba` acts on `⋀(W ⊗ U)` through derivations and is scalar on each
//! Cauchy component `Λ_γ = Σ^γ W ⊗ Σ^{γ*} U`, with value
//! `c(γ) = γ₁(γ₁ + 1) + γ₂(γ₂ − 1)`. For fixed `|γ|` these values are distinct, so the
//! eigenspaces of `C` are exactly the components.
//!
//! `C` preserves the torus weight of `gl(W) × gl(U)`, so the decomposition is computed on
//! small weight spaces ([`FineBasis`]): monomials with a fixed number `p` of `e₁` generators
//! and a fixed content vector `c_j = #{generators with U-index j}`. Each weight space gets a
//! change of basis to Casimir eigenvectors, grouped by component.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::{rat, spectral_projectors, RatMatrix};
use crate::partitions::{cauchy_terms, schur_dim, Partition};

use super::{generator, masks_with_popcount, FiberModel};

/// Casimir eigenvalue `c(γ) = γ₁(γ₁ + 1) + γ₂(γ₂ − 1)` on `Σ^γ W`.
pub fn casimir_value(gamma: &Partition) -> i64 {
    let a = i64::from(gamma.part(0));
    let b = i64::from(gamma.part(1));
    a * (a + 1) + b * (b - 1)
}

/// `E_ab` applied to an exterior monomial: replaces one `e_b` generator by `e_a`.
fn apply_e(mask: u32, a: usize, b: usize, m: usize) -> Vec<(u32, i64)> {
    let mut out = Vec::new();
    for j in 0..m {
        let from = generator(b, j);
        if mask & (1 << from) == 0 {
            continue;
        }
        if a == b {
            out.push((mask, 1));
            continue;
        }
        let to = generator(a, j);
        if mask & (1 << to) != 0 {
            continue;
        }
        // `from` and `to` are adjacent indices, so no generator sits between them
        out.push((mask & !(1 << from) | (1 << to), 1));
    }
    out
}

/// `C` applied to an exterior monomial, as a map from masks to coefficients.
pub fn apply_casimir(mask: u32, m: usize) -> BTreeMap<u32, i64> {
    let mut out = BTreeMap::new();
    for a in 0..2 {
        for b in 0..2 {
            for (mid, c1) in apply_e(mask, b, a, m) {
                for (end, c2) in apply_e(mid, a, b, m) {
                    *out.entry(end).or_insert(0) += c1 * c2;
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Dense matrix of `C` on `⋀^r(W ⊗ U)` in the basis [`masks_with_popcount`].
pub fn casimir_matrix(model: &FiberModel, r: usize) -> RatMatrix {
    let masks = masks_with_popcount(model.generators(), r);
    let index: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut out = RatMatrix::zeros(masks.len(), masks.len());
    for (col, &mask) in masks.iter().enumerate() {
        for (end, c) in apply_casimir(mask, model.m()) {
            out[(index[&end], col)] = rat(c);
        }
    }
    out
}

/// Spectral projectors of `C` onto the Cauchy components of `⋀^r(W ⊗ U)`.
///
/// Each projector's rank is compared with `schur_dim(γ,2)·schur_dim(γ*,m)` before it is
/// returned.
pub fn cauchy_projectors(model: &FiberModel, r: usize) -> Result<BTreeMap<Partition, RatMatrix>> {
    if r > model.generators() {
        return Err(Error::Unsupported(format!(
            "exterior degree {r} exceeds {} generators",
            model.generators()
        )));
    }
    let gammas = cauchy_terms(r, 2, model.m());
    let eigs: Vec<i64> = gammas.iter().map(casimir_value).collect();
    let projectors = spectral_projectors(&casimir_matrix(model, r), &eigs)?;
    let mut out = BTreeMap::new();
    for (gamma, p) in gammas.into_iter().zip(projectors) {
        let expected = (schur_dim(&gamma, 2) * schur_dim(&gamma.conjugate(), model.m())) as usize;
        let found = p.rank();
        if found != expected {
            return Err(Error::CauchyDimension {
                degree: r,
                alpha: gamma.to_string(),
                found,
                expected,
            });
        }
        out.insert(gamma, p);
    }
    Ok(out)
}

/// A torus weight space of `⋀^r(W ⊗ U)` with its Casimir eigenbasis.
#[derive(Clone, Debug)]
pub struct FineBasis {
    /// Number of `e₁` generators.
    pub p: usize,
    /// Number of generators with each `U`-index.
    pub content: Vec<u8>,
    /// Monomials spanning the weight space, increasing.
    pub masks: Vec<u32>,
    /// Component of each eigenvector, grouped in the order of [`cauchy_terms`].
    pub gammas: Vec<Partition>,
    /// Eigenvectors as columns, in the monomial basis.
    pub vectors: RatMatrix,
    /// Inverse of `vectors`.
    pub inverse: RatMatrix,
}

impl FineBasis {
    /// Builds the weight space for `p` generators `e₁ ⊗ u` and the given content, and splits
    /// it into Casimir eigenspaces.
    pub fn new(p: usize, content: &[u8]) -> Result<Self> {
        let m = content.len();
        let twos: Vec<usize> = (0..m).filter(|&j| content[j] == 2).collect();
        let ones: Vec<usize> = (0..m).filter(|&j| content[j] == 1).collect();
        let base: u32 = twos
            .iter()
            .map(|&j| (1u32 << generator(0, j)) | (1u32 << generator(1, j)))
            .sum();
        let mut masks = Vec::new();
        if p >= twos.len() && p - twos.len() <= ones.len() {
            for choice in masks_with_popcount(ones.len(), p - twos.len()) {
                let mut mask = base;
                for (bit, &j) in ones.iter().enumerate() {
                    let a = if choice & (1 << bit) != 0 { 0 } else { 1 };
                    mask |= 1 << generator(a, j);
                }
                masks.push(mask);
            }
        }
        masks.sort_unstable();
        let r = 2 * twos.len() + ones.len();
        let index: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let size = masks.len();
        let mut casimir = RatMatrix::zeros(size, size);
        for (col, &mask) in masks.iter().enumerate() {
            for (end, c) in apply_casimir(mask, m) {
                let row = index.get(&end).ok_or_else(|| {
                    Error::DimensionMismatch("Casimir left its weight space".into())
                })?;
                casimir[(*row, col)] = rat(c);
            }
        }
        let mut columns: Vec<Vec<crate::exactlin::Rational>> = Vec::new();
        let mut gammas = Vec::new();
        for gamma in cauchy_terms(r, 2, m) {
            let shifted =
                casimir.sub(&RatMatrix::identity(size).scale(&rat(casimir_value(&gamma))))?;
            let kernel = shifted.kernel();
            for c in 0..kernel.cols() {
                columns.push((0..size).map(|i| kernel[(i, c)].clone()).collect());
                gammas.push(gamma.clone());
            }
        }
        if columns.len() != size {
            return Err(Error::SpectrumMismatch(
                cauchy_terms(r, 2, m).iter().map(casimir_value).collect(),
            ));
        }
        let vectors = RatMatrix::from_fn(size, size, |i, j| columns[j][i].clone());
        let inverse = vectors
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("Casimir eigenvectors are dependent".into()))?;
        Ok(Self {
            p,
            content: content.to_vec(),
            masks,
            gammas,
            vectors,
            inverse,
        })
    }

    /// Exterior degree of the monomials.
    pub fn exterior_degree(&self) -> usize {
        self.content.iter().map(|&c| c as usize).sum()
    }

    /// Dimension of the weight space.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    /// True for an empty weight space.
    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }
}

/// Every non-empty weight space of `⋀^r(W ⊗ U)` for `dim U = m`, in a fixed order.
pub fn fine_bases(m: usize, r: usize) -> Result<Vec<FineBasis>> {
    let mut out = Vec::new();
    let mut content = vec![0u8; m];
    loop {
        let total: usize = content.iter().map(|&c| c as usize).sum();
        if total == r {
            for p in 0..=r {
                let fb = FineBasis::new(p, &content)?;
                if !fb.is_empty() {
                    out.push(fb);
                }
            }
        }
        // next content vector in base 3
        let mut j = 0;
        while j < m && content[j] == 2 {
            content[j] = 0;
            j += 1;
        }
        if j == m {
            break;
        }
        content[j] += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn eigenvalues_are_distinct_per_degree() {
        for r in 0..=12 {
            let mut values: Vec<i64> = cauchy_terms(r, 2, 6).iter().map(casimir_value).collect();
            let len = values.len();
            values.sort_unstable();
            values.dedup();
            assert_eq!(values.len(), len);
        }
    }

    #[test]
    fn projector_ranks_n4() {
        let model = FiberModel::new(4).unwrap();
        let proj = cauchy_projectors(&model, 2).unwrap();
        assert_eq!(proj[&p(&[2])].rank(), 3);
        assert_eq!(proj[&p(&[1, 1])].rank(), 3);
        let sum = proj
            .values()
            .fold(RatMatrix::zeros(6, 6), |acc, x| acc.add(x).unwrap());
        assert_eq!(sum, RatMatrix::identity(6));
        for q in proj.values() {
            assert_eq!(&q.mul(q).unwrap(), q);
        }
    }

    #[test]
    fn projector_ranks_n6_degree3() {
        let model = FiberModel::new(6).unwrap();
        let proj = cauchy_projectors(&model, 3).unwrap();
        assert_eq!(proj[&p(&[3])].rank(), 16);
        assert_eq!(proj[&p(&[2, 1])].rank(), 40);
    }

    #[test]
    fn fine_bases_cover_and_match_cauchy_dims() {
        for (m, r) in [(2, 2), (4, 3), (4, 4), (6, 5)] {
            let bases = fine_bases(m, r).unwrap();
            let total: usize = bases.iter().map(FineBasis::len).sum();
            assert_eq!(total, masks_with_popcount(2 * m, r).len());
            for gamma in cauchy_terms(r, 2, m) {
                let count = bases
                    .iter()
                    .flat_map(|b| b.gammas.iter())
                    .filter(|g| **g == gamma)
                    .count() as u64;
                assert_eq!(
                    count,
                    schur_dim(&gamma, 2) * schur_dim(&gamma.conjugate(), m)
                );
            }
        }
    }

    #[test]
    fn fine_eigenvectors_invert() {
        let fb = FineBasis::new(2, &[1, 1, 2]).unwrap();
        assert_eq!(fb.exterior_degree(), 4);
        assert_eq!(
            fb.vectors.mul(&fb.inverse).unwrap(),
            RatMatrix::identity(fb.len())
        );
    }
}
