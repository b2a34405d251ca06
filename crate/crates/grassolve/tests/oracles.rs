//! Library results compared with brute-force reference computations.

mod common;

use common::{exterior_dim, lr_by_symmetrizers, ssyt_count, symmetrizer_dim};
use grassolve::bott::{cohomology_gr, cohomology_x, Bundle};
use grassolve::partitions::{cauchy_terms, lr_tensor, partitions_of, schur_dim, Partition};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn schur_dim_matches_symmetrizer_rank() {
    for m in 1..=4 {
        for w in 0..=4 {
            for lambda in partitions_of(w, 4, 4) {
                assert_eq!(
                    schur_dim(&lambda, m),
                    symmetrizer_dim(&lambda, m),
                    "{lambda} over GL_{m}"
                );
            }
        }
    }
}

#[test]
fn frozen_symmetrizer_ranks() {
    assert_eq!(symmetrizer_dim(&p(&[2, 1]), 3), 8);
    assert_eq!(symmetrizer_dim(&p(&[3, 1]), 2), 3);
    assert_eq!(schur_dim(&p(&[2, 1]), 3), 8);
    assert_eq!(schur_dim(&p(&[3, 1]), 2), 3);
}

#[test]
fn lr_products_match_symmetrizer_characters() {
    let diagrams: Vec<Partition> = (0..=4).flat_map(|w| partitions_of(w, 4, 4)).collect();
    for m in 1..=4 {
        for a in diagrams.iter().filter(|d| d.rows() <= m) {
            for b in diagrams.iter().filter(|d| d.rows() <= m) {
                assert_eq!(
                    lr_tensor(a, b, m),
                    lr_by_symmetrizers(a, b, m),
                    "{a} ⊗ {b}, m={m}"
                );
            }
        }
    }
}

#[test]
fn schur_dim_matches_tableau_count() {
    for m in 1..=6 {
        for w in 0..=6 {
            for lambda in partitions_of(w, 6, 6) {
                assert_eq!(schur_dim(&lambda, m), ssyt_count(lambda.parts(), m));
            }
        }
    }
}

#[test]
fn cauchy_terms_match_exterior_powers() {
    for (e, f) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        for i in 0..=e * f {
            let total: u64 = cauchy_terms(i, e, f)
                .iter()
                .map(|a| schur_dim(a, e) * schur_dim(&a.conjugate(), f))
                .sum();
            assert_eq!(total, exterior_dim(e * f, i), "i={i}, dims {e},{f}");
        }
    }
}

#[test]
fn sections_of_plucker_powers_count_rectangular_tableaux() {
    // H⁰(Gr(k,N), O(d)) is the GL_N-module of the k × d rectangle
    for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
        for d in 0..=3u32 {
            let h = cohomology_gr(&Bundle::line(k, n, d as i64).unwrap()).unwrap();
            assert_eq!(h.h(0), ssyt_count(&vec![d; k], n), "Gr({k},{n}), O({d})");
            assert!(h.higher_vanish());
        }
    }
}

#[test]
fn sections_on_the_hyperplane_section() {
    // 0 → O(d−1) → O(d) → O_X(d) → 0 on Gr(2,4), no higher cohomology for d ≥ 0
    for d in 1..=3u32 {
        let hx = cohomology_x(&Bundle::line(2, 4, d as i64).unwrap()).unwrap();
        let expected = ssyt_count(&[d, d], 4) - ssyt_count(&[d - 1, d - 1], 4);
        assert_eq!(hx.h(0), expected, "O_X({d})");
    }
}

#[test]
fn tableau_characters_match_symmetrizer_characters() {
    for m in 1..=3 {
        for w in 0..=4 {
            for lambda in partitions_of(w, 3, 4) {
                assert_eq!(
                    common::tableau_character(lambda.parts(), m),
                    common::symmetrizer_character(&lambda, m),
                    "{lambda}, m={m}"
                );
            }
        }
    }
}
