//! Explicit matrices of the Tate complex over a point of the diagonal.
//!
//! Over a point `(W, W)` of the diagonal of `SpGr(2,N) × SpGr(2,N)` the Tate complex
//! becomes `⋀(W ⊗ U)[T]` with `U = (V/W)*` of dimension `m = N − 2`, the exterior
//! generators in degree one and `T` in degree two. The differential is
//! `d(x·T^i) = (−1)^{|x|}·i·(x ∧ t)·T^{i−1}` where `t = e₂⊗u₁ − e₁⊗u₂` is the cycle
//! killed by `T`; the evaluation part of the differential vanishes on the diagonal.
//!
//! The generator `e_a ⊗ u_{j+1}` has index `2j + a` (`a = 0` for `e₁`, `a = 1` for `e₂`),
//! and a [`Mono`] is an exterior monomial stored as a bit mask times a power of `T`.
//!
//! Submodules:
//! * [`cauchy`]: the `gl(W)` Casimir operator and the Cauchy components `Λ_γ`;
//! * [`quotient`]: the complex in Cauchy coordinates, the subcomplex `B`, the quotient `Q`,
//!   their homology and the splitting of `Q` into independent blocks;
//! * [`lascoux`]: the Lascoux complexes evaluated at `t`;
//! * [`theta`]: the fibrewise identity showing the kernel map lands in `Ψ`.

pub mod cauchy;
pub mod lascoux;
pub mod quotient;
pub mod theta;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{rat, RatMatrix, SparseMatrix};

pub use cauchy::{casimir_matrix, casimir_value, cauchy_projectors, FineBasis};
pub use lascoux::{lascoux_complex, promised_exact_degrees, LascouxReport};
pub use quotient::{
    fiber_complex, fiber_homology, split_blocks, ComponentFiber, Coord, SplitBlock, Which,
};
pub use theta::{theta_identity_check, theta_value};

/// Index of the generator `e_a ⊗ u_{j+1}`.
pub fn generator(a: usize, j: usize) -> usize {
    2 * j + a
}

/// Exterior monomial times a power of `T`. Ordered by the power of `T`, then by mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mono {
    /// Power of `T`.
    pub t_pow: usize,
    /// Set of exterior generators, in increasing index order.
    pub mask: u32,
}

impl Mono {
    /// Exterior degree.
    pub fn exterior_degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Homological degree `|x| + 2i`.
    pub fn degree(&self) -> usize {
        self.exterior_degree() + 2 * self.t_pow
    }
}

/// `x ∧ g` for a monomial `x` and a generator `g`: the new mask and the sign, or `None`
/// when `g` already occurs in `x`.
pub fn wedge_generator(mask: u32, g: usize) -> Option<(u32, i64)> {
    let bit = 1u32 << g;
    if mask & bit != 0 {
        return None;
    }
    let after = (mask >> (g + 1)).count_ones();
    Some((mask | bit, if after.is_multiple_of(2) { 1 } else { -1 }))
}

/// The cycle `t ∈ W ⊗ U` as a `2 × m` coefficient array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleT {
    coeffs: Vec<Vec<i64>>,
}

impl CycleT {
    /// Coefficient of `e_{a+1} ⊗ u_{j+1}`.
    pub fn coeff(&self, a: usize, j: usize) -> i64 {
        self.coeffs[a][j]
    }

    /// Non-zero terms as `(generator index, coefficient)`.
    pub fn terms(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (a, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    out.push((generator(a, j), c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Rank of the coefficient array.
    pub fn rank(&self) -> usize {
        RatMatrix::from_i64_rows(&self.coeffs)
            .expect("rows of equal length")
            .rank()
    }

    /// Contraction of `t` to a scalar, with `e_a` the basis vector `e_{a+1}` of `V` and
    /// `u_{j+1}` the coordinate function `y_{n+j+1}` on `V`.
    ///
    /// This is the Koszul differential of `t`; it equals `⟨e₁, e₂⟩`, which vanishes because
    /// `W` is isotropic.
    pub fn evaluation(&self) -> i64 {
        let n = self.coeffs[0].len() + 2;
        let half = n / 2;
        let mut total = 0;
        for (a, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if a == half + j {
                    total += c;
                }
            }
        }
        total
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) || n > 16 {
        return Err(Error::Unsupported(format!(
            "the fiber model needs an even N with 4 ≤ N ≤ 16, got {n}"
        )));
    }
    Ok(())
}

/// `t = e₂ ⊗ u₁ − e₁ ⊗ u₂`, the cycle of the restricted Koszul complex over a diagonal point.
pub fn build_t(n: usize) -> Result<CycleT> {
    check_n(n)?;
    let m = n - 2;
    let mut coeffs = vec![vec![0; m]; 2];
    coeffs[1][0] = 1;
    coeffs[0][1] = -1;
    Ok(CycleT { coeffs })
}

/// All masks over `bits` generators with exactly `r` elements, in increasing order.
pub fn masks_with_popcount(bits: usize, r: usize) -> Vec<u32> {
    if r > bits {
        return Vec::new();
    }
    if r == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = 1u64 << bits;
    let mut v: u64 = (1 << r) - 1;
    while v < limit {
        out.push(v as u32);
        // next integer with the same number of set bits
        let c = v & v.wrapping_neg();
        let r2 = v + c;
        v = (((r2 ^ v) >> 2) / c) | r2;
    }
    out
}

/// `⋀(W ⊗ U)[T]` over a diagonal point of `SpGr(2,N) × SpGr(2,N)`.
#[derive(Clone, Debug)]
pub struct FiberModel {
    n: usize,
    t: CycleT,
}

impl FiberModel {
    /// The model for an even `N` between 4 and 16.
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self { n, t: build_t(n)? })
    }

    /// Dimension `N` of `V`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `m = N − 2` of `U`.
    pub fn m(&self) -> usize {
        self.n - 2
    }

    /// Number `2m` of exterior generators.
    pub fn generators(&self) -> usize {
        2 * self.m()
    }

    /// The cycle `t`.
    pub fn cycle(&self) -> &CycleT {
        &self.t
    }

    /// Monomial basis of degree `k`, sorted by power of `T` and then by mask.
    pub fn basis(&self, k: usize) -> Vec<Mono> {
        (0..=k / 2)
            .flat_map(|i| {
                masks_with_popcount(self.generators(), k - 2 * i)
                    .into_iter()
                    .map(move |mask| Mono { t_pow: i, mask })
            })
            .collect()
    }

    /// `Σ_i C(2m, k − 2i)`.
    pub fn dim(&self, k: usize) -> usize {
        self.basis(k).len()
    }

    /// The differential of one monomial as a list of `(monomial, coefficient)`.
    pub fn apply(&self, x: Mono) -> Vec<(Mono, i64)> {
        if x.t_pow == 0 {
            return Vec::new();
        }
        let sign = if x.exterior_degree().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let scale = sign * x.t_pow as i64;
        self.t
            .terms()
            .into_iter()
            .filter_map(|(g, c)| {
                wedge_generator(x.mask, g).map(|(mask, s)| {
                    (
                        Mono {
                            t_pow: x.t_pow - 1,
                            mask,
                        },
                        scale * c * s,
                    )
                })
            })
            .collect()
    }

    /// The differential from degree `k` to degree `k − 1` as a sparse matrix in the
    /// monomial bases of [`FiberModel::basis`].
    pub fn differential_sparse(&self, k: usize) -> SparseMatrix {
        let source = self.basis(k);
        let target = if k == 0 {
            Vec::new()
        } else {
            self.basis(k - 1)
        };
        let index: std::collections::HashMap<Mono, usize> =
            target.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut out = SparseMatrix::zeros(target.len(), source.len());
        for (col, &x) in source.iter().enumerate() {
            for (y, c) in self.apply(x) {
                out.add_entry(index[&y], col, rat(c));
            }
        }
        out
    }

    /// Checks `d_{k−1} ∘ d_k = 0` for `2 ≤ k ≤ max_degree`.
    pub fn check_d_squared(&self, max_degree: usize) -> Result<()> {
        use rayon::prelude::*;
        (2..=max_degree).into_par_iter().try_for_each(|k| {
            let dd = self
                .differential_sparse(k - 1)
                .mul(&self.differential_sparse(k))?;
            if dd.is_zero() {
                Ok(())
            } else {
                Err(Error::NotAComplex {
                    degree: k as i64 - 2,
                })
            }
        })
    }
}

/// Dense matrix of the differential from degree `k` to degree `k − 1`.
pub fn fiber_differential(model: &FiberModel, k: usize) -> RatMatrix {
    model.differential_sparse(k).to_dense()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_t() {
        let t = build_t(4).unwrap();
        assert_eq!(t.coeff(1, 0), 1);
        assert_eq!(t.coeff(0, 1), -1);
        assert_eq!(t.terms(), vec![(1, 1), (2, -1)]);
        assert_eq!(build_t(6).unwrap().rank(), 2);
        assert_eq!(build_t(6).unwrap().evaluation(), 0);
        assert!(build_t(5).is_err());
    }

    #[test]
    fn masks() {
        assert_eq!(masks_with_popcount(4, 2), vec![3, 5, 6, 9, 10, 12]);
        assert_eq!(masks_with_popcount(4, 0), vec![0]);
        assert_eq!(masks_with_popcount(3, 4), Vec::<u32>::new());
        assert_eq!(masks_with_popcount(12, 6).len(), 924);
    }

    #[test]
    fn wedge_signs() {
        // u ∧ g where g sorts before one generator of u: one transposition
        assert_eq!(wedge_generator(0b10, 0), Some((0b11, -1)));
        assert_eq!(wedge_generator(0b01, 1), Some((0b11, 1)));
        assert_eq!(wedge_generator(0b01, 0), None);
    }

    #[test]
    fn dimensions() {
        let model = FiberModel::new(4).unwrap();
        let dims: Vec<usize> = (0..=6).map(|k| model.dim(k)).collect();
        assert_eq!(dims, vec![1, 4, 7, 8, 8, 8, 8]);
    }

    #[test]
    fn first_differentials() {
        let model = FiberModel::new(4).unwrap();
        // T ↦ t
        let d2 = fiber_differential(&model, 2);
        let t_col = model.basis(2).iter().position(|x| x.t_pow == 1).unwrap();
        let basis1 = model.basis(1);
        let nonzero: Vec<(Mono, String)> = (0..d2.rows())
            .filter(|&r| !num_traits::Zero::is_zero(&d2[(r, t_col)]))
            .map(|r| (basis1[r], d2[(r, t_col)].to_string()))
            .collect();
        assert_eq!(
            nonzero,
            vec![
                (
                    Mono {
                        t_pow: 0,
                        mask: 0b0010
                    },
                    "1".to_string()
                ),
                (
                    Mono {
                        t_pow: 0,
                        mask: 0b0100
                    },
                    "-1".to_string()
                ),
            ]
        );
        // pure exterior monomials are cycles
        for (col, x) in model.basis(2).iter().enumerate() {
            if x.t_pow == 0 {
                assert!((0..d2.rows()).all(|r| num_traits::Zero::is_zero(&d2[(r, col)])));
            }
        }
    }

    #[test]
    fn d_squared_small() {
        for n in [4, 6] {
            FiberModel::new(n)
                .unwrap()
                .check_d_squared(2 * n - 4)
                .unwrap();
        }
    }
}
