//! Fibrewise identity for the kernel map on `SpGr(2,4)`.
//!
//! Take a symplectic basis `e₁..e₄` of `V` with dual basis `y₁..y₄`, so that
//! `⟨v, ·⟩ = a₁y₃ + a₂y₄ − a₃y₁ − a₄y₂` for `v = Σ aᵢeᵢ`. For `f = y₃`, `g = y₄` and an
//! isotropic pair `v, w` the two-form
//! `ψ = (g(w)⟨v,·⟩ − g(v)⟨w,·⟩) ∧ f − (f(w)⟨v,·⟩ − f(v)⟨w,·⟩) ∧ g`
//! equals `(a₄b₃ − a₃b₄)·δ` with `δ = y₁∧y₃ + y₂∧y₄`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{rat, Rational};

/// A two-form on a four-dimensional space, indexed by pairs `i < j`.
pub type TwoForm = [[Rational; 4]; 4];

fn zero_form() -> TwoForm {
    std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()))
}

/// `⟨v, ·⟩` in the basis `y`.
fn contraction(v: &[Rational; 4]) -> [Rational; 4] {
    [-v[2].clone(), -v[3].clone(), v[0].clone(), v[1].clone()]
}

/// Adds `c · (α ∧ y_k)` to `out`, keeping only the entries `i < j`.
fn add_wedge(out: &mut TwoForm, c: &Rational, alpha: &[Rational; 4], k: usize) {
    for (i, a) in alpha.iter().enumerate() {
        if i == k || a.is_zero() {
            continue;
        }
        let term = c * a;
        if i < k {
            out[i][k] += term;
        } else {
            out[k][i] -= term;
        }
    }
}

/// `⟨v, w⟩ = a₁b₃ + a₂b₄ − a₃b₁ − a₄b₂`.
pub fn symplectic_pairing(v: &[Rational; 4], w: &[Rational; 4]) -> Rational {
    &v[0] * &w[2] + &v[1] * &w[3] - &v[2] * &w[0] - &v[3] * &w[1]
}

/// The scalar `a₄b₃ − a₃b₄` and the two-form `ψ` for the pair `v, w`.
pub fn theta_value(v: &[Rational; 4], w: &[Rational; 4]) -> (Rational, TwoForm) {
    let nu_v = contraction(v);
    let nu_w = contraction(w);
    let combine = |cv: &Rational, cw: &Rational| -> [Rational; 4] {
        std::array::from_fn(|i| cv * &nu_v[i] - cw * &nu_w[i])
    };
    let mut psi = zero_form();
    add_wedge(&mut psi, &Rational::one(), &combine(&w[3], &v[3]), 2);
    add_wedge(&mut psi, &-Rational::one(), &combine(&w[2], &v[2]), 3);
    (&v[3] * &w[2] - &v[2] * &w[3], psi)
}

/// Draws `samples` random isotropic pairs with small integer coordinates and checks
/// `ψ = (a₄b₃ − a₃b₄)·δ` for each.
pub fn theta_identity_check(samples: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let (v, w) = random_isotropic_pair(&mut rng);
        let (scalar, psi) = theta_value(&v, &w);
        let mut expected = zero_form();
        expected[0][2] = scalar.clone();
        expected[1][3] = scalar;
        symplectic_pairing(&v, &w).is_zero() && psi == expected
    })
}

/// A random pair `v, w` with `⟨v, w⟩ = 0`: `w` is drawn freely except for one coordinate,
/// which is solved for.
fn random_isotropic_pair(rng: &mut ChaCha8Rng) -> ([Rational; 4], [Rational; 4]) {
    loop {
        let v: [Rational; 4] = std::array::from_fn(|_| rat(rng.gen_range(-9..=9)));
        // ⟨v, w⟩ = Σ c_i b_i with c = (−a₃, −a₄, a₁, a₂)
        let c = contraction(&v);
        let Some(pivot) = (0..4).find(|&i| !c[i].is_zero()) else {
            continue;
        };
        let mut w: [Rational; 4] = std::array::from_fn(|_| rat(rng.gen_range(-9..=9)));
        let rest = (0..4)
            .filter(|&i| i != pivot)
            .fold(Rational::zero(), |acc, i| acc + &c[i] * &w[i]);
        w[pivot] = -rest / &c[pivot];
        return (v, w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_random_pairs() {
        assert!(theta_identity_check(200, 7));
    }

    #[test]
    fn explicit_pair() {
        // v = e₃, w = e₄ are isotropic and give the scalar −1
        let v = [rat(0), rat(0), rat(1), rat(0)];
        let w = [rat(0), rat(0), rat(0), rat(1)];
        let (scalar, psi) = theta_value(&v, &w);
        assert_eq!(scalar, rat(-1));
        assert_eq!(psi[0][2], rat(-1));
        assert_eq!(psi[1][3], rat(-1));
        assert_eq!(psi[2][3], rat(0));
    }

    #[test]
    fn non_isotropic_pair_breaks_the_identity() {
        let v = [rat(1), rat(0), rat(0), rat(0)];
        let w = [rat(0), rat(0), rat(1), rat(0)];
        assert_eq!(symplectic_pairing(&v, &w), rat(1));
        let (scalar, psi) = theta_value(&v, &w);
        assert_eq!(scalar, rat(0));
        assert_ne!(psi[2][3], rat(0));
    }
}
