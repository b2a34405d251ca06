//! The verification checks run by `verify-all` and by the acceptance test target.
//!
//! Each check recomputes a family of statements exactly and returns a [`CheckOutcome`]
//! with a one-line summary of what was compared.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bott::{cohomology_gr, cohomology_x, Bundle};
use crate::complex::{binomial, kernel_rank_b, periodicity_check, subcomplex_b};
use crate::error::{Error, Result};
use crate::fiber::{
    split_blocks, theta_identity_check, ComponentFiber, FiberModel, LascouxReport, Which,
};
use crate::ktheory::{
    euler_characteristic_sum, ext_table_spgr4, generators_gr, pairing_matrix_gr, resolution_coeffs,
};
use crate::partitions::{
    box_partitions, cauchy_terms, lr_tensor, partitions_of, schur_dim, Multiset, Partition,
};
use crate::symplectic::{
    limit_check, parabolic_eta_check, random_symplectic, z_invariance, IsotropyCase,
};

/// An independent computation of Littlewood–Richardson products, `(p, q, m) ↦ p ⊗ q` over
/// `GL_m`.
pub type LrOracle = dyn Fn(&Partition, &Partition, usize) -> Multiset + Sync;

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    /// Position in [`CHECKS`], starting at 1.
    pub id: usize,
    /// Short name.
    pub name: &'static str,
    /// True when every compared statement held.
    pub passed: bool,
    /// What was compared, or the first discrepancy.
    pub detail: String,
    /// Wall-clock time, not serialized so that reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
    /// Time limit for the check.
    #[serde(skip)]
    pub budget: Duration,
}

impl CheckOutcome {
    /// Passed and finished within its budget.
    pub fn within_budget(&self) -> bool {
        self.passed && self.elapsed <= self.budget
    }
}

/// Name and time budget of each check, in order.
pub const CHECKS: [(&str, u64); 11] = [
    ("cauchy-rank-identity", 1),
    ("littlewood-richardson", 30),
    ("bott-tables", 5),
    ("spgr4-fiber", 5),
    ("spgr6-subcomplex", 120),
    ("lascoux-exactness", 300),
    ("tate-periodicity", 1),
    ("fiber-d-squared", 120),
    ("ktheory-pairings", 5),
    ("symplectic-checks", 10),
    ("resolution-euler-identity", 5),
];

type Verdict = Result<(bool, String)>;

fn outcome(id: usize, f: impl FnOnce() -> Verdict) -> CheckOutcome {
    let (name, secs) = CHECKS[id - 1];
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(secs),
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid diagram")
}

/// `Σ_{|α| = i} dim Σ^α k^a · dim Σ^{α*} k^b = C(ab, i)` for `(a, b) ∈ {(2,2), (2,4), (3,3)}`.
pub fn cauchy_rank_identity() -> CheckOutcome {
    outcome(1, || {
        let mut count = 0;
        for (a, b) in [(2, 2), (2, 4), (3, 3)] {
            for i in 0..=a * b {
                let total: u64 = cauchy_terms(i, a, b)
                    .iter()
                    .map(|al| schur_dim(al, a) * schur_dim(&al.conjugate(), b))
                    .sum();
                if total != binomial(a * b, i) {
                    return Ok((false, format!("({a},{b}) degree {i}: {total}")));
                }
                count += 1;
            }
        }
        Ok((true, format!("{count} degrees across (2,2), (2,4), (3,3)")))
    })
}

/// `lr_tensor(p, q, m)` for `|p|, |q| ≤ 4` and `m ≤ 4`.
///
/// Always compares dimensions, `Σ c_ν dim Σ^ν = dim Σ^p · dim Σ^q`; with an oracle also
/// compares the full multisets.
pub fn littlewood_richardson(oracle: Option<&LrOracle>) -> CheckOutcome {
    outcome(2, || {
        let diagrams: Vec<Partition> = (0..=4).flat_map(|w| partitions_of(w, 4, 4)).collect();
        let mut pairs = 0;
        for m in 1..=4 {
            for a in diagrams.iter().filter(|d| d.rows() <= m) {
                for b in diagrams.iter().filter(|d| d.rows() <= m) {
                    let product = lr_tensor(a, b, m);
                    let dim: u64 = product.iter().map(|(nu, c)| c * schur_dim(nu, m)).sum();
                    if dim != schur_dim(a, m) * schur_dim(b, m) {
                        return Ok((false, format!("{a} ⊗ {b} over GL_{m}: dimension {dim}")));
                    }
                    if let Some(o) = oracle {
                        if o(a, b, m) != product {
                            return Ok((false, format!("{a} ⊗ {b} over GL_{m} differs")));
                        }
                    }
                    pairs += 1;
                }
            }
        }
        let mode = if oracle.is_some() {
            "multisets and dimensions"
        } else {
            "dimensions"
        };
        Ok((true, format!("{pairs} products, {mode} agree")))
    })
}

/// Line bundles and `S`-twists on `SpGr(2,4)`, and the three vanishing statements for
/// `(Σ^β S)* ⊗ Σ^α S` on `Gr(2,4)`.
pub fn bott_tables() -> CheckOutcome {
    outcome(3, || {
        let o = Bundle::trivial(2, 4)?;
        let s = Bundle::schur_s(2, 4, &p(&[1]))?;
        let s_dual = s.dual();
        let x = |b: &Bundle| cohomology_x(b);
        let mut failures = Vec::new();
        // line bundles O_X(k)
        if x(&o)?.entries() != [1, 0, 0, 0] {
            failures.push("O_X".to_string());
        }
        for k in [1, 2] {
            if !x(&o.twist(-k))?.is_zero() {
                failures.push(format!("O_X(-{k})"));
            }
        }
        // twists of S and S*
        for k in 0..=2 {
            if !x(&s.twist(k))?.higher_vanish() {
                failures.push(format!("S({k})"));
            }
            if !x(&s_dual.twist(-k))?.higher_vanish() {
                failures.push(format!("S*(-{k})"));
            }
        }
        let end = x(&s.tensor(&s_dual)?)?;
        if !end.higher_vanish() || end.h(0) != 1 {
            failures.push(format!("S ⊗ S*: {end}"));
        }
        if x(&s)?.h(0) != 0 {
            failures.push("h0(S)".into());
        }
        // Gr(2,4) box pairs
        let box_ = box_partitions(2, 2);
        for a in &box_ {
            for b in &box_ {
                let t = cohomology_gr(
                    &Bundle::schur_s(2, 4, a)?.tensor(&Bundle::schur_s_dual(2, 4, b)?)?,
                )?;
                let ok = t.higher_vanish() && (a <= b || t.h(0) == 0) && (a != b || t.h(0) == 1);
                if !ok {
                    failures.push(format!("Gr(2,4) Σ^{a} S ⊗ (Σ^{b} S)*: {t}"));
                }
            }
        }
        Ok(match failures.first() {
            None => (
                true,
                format!(
                    "O_X(0,-1,-2), S(k), S*(-k), S ⊗ S*, h0(S) and {} pairs on Gr(2,4)",
                    box_.len() * box_.len()
                ),
            ),
            Some(f) => (false, format!("mismatch at {f}")),
        })
    })
}

/// On the diagonal of `SpGr(2,4) × SpGr(2,4)`: `H₂(Q) = 0`, `H₃(Q) = 1`, the kernel of `B`
/// has rank one, and the class in `H₃(Q)` comes from the `(2,2)` Cauchy component.
pub fn spgr4_fiber() -> CheckOutcome {
    outcome(4, || {
        let fiber = ComponentFiber::new(4, 5)?;
        fiber.check_b_closed()?;
        let h = fiber.homology(Which::Q, 0..=4)?;
        let kernel = kernel_rank_b(4)?;
        let from_22 = fiber.quotient_homology_from(3, &p(&[2, 2]));
        // (⋀²W)^{⊗2} ⊗ ⋀²U has weight (3,3) under the torus fixed by the differential
        let by_weight = fiber.homology_by_key(3, Which::Q)?;
        let in_22_weight = by_weight.len() == 1 && by_weight.get(&vec![3, 3]) == Some(&1);
        let passed = h[2] == 0 && h[3] == 1 && kernel == 1 && from_22 == 1 && in_22_weight;
        Ok((
            passed,
            format!(
                "H(Q) = {h:?}, kernel rank {kernel}, H3 from the (2,2) component {from_22}, \
                 H3 weights {by_weight:?}"
            ),
        ))
    })
}

/// Summands of `B` per degree for `N = 6`.
pub fn expected_b6_terms() -> Vec<Vec<Partition>> {
    vec![
        vec![p(&[])],
        vec![p(&[1])],
        vec![p(&[2]), p(&[1, 1])],
        vec![p(&[3]), p(&[2, 1])],
        vec![p(&[3, 1]), p(&[2, 2])],
        vec![p(&[3, 2])],
        vec![p(&[3, 3])],
    ]
}

/// Largest `d` with `H_i(Q) = 0` for all `i ≤ d` on the diagonal fibre, together with the
/// homology in degrees `0..=2N−5`.
pub fn realized_q_vanishing(n: usize) -> Result<(Option<usize>, Vec<usize>)> {
    let top = 2 * n - 5;
    let fiber = ComponentFiber::new(n, top + 1)?;
    fiber.check_b_closed()?;
    let h = fiber.homology(Which::Q, 0..=top)?;
    let last = h
        .iter()
        .position(|&x| x != 0)
        .map_or(Some(top), |i| i.checked_sub(1));
    Ok((last, h))
}

/// For `N = 6`: the summands of `B`, vanishing of `H_{≤6}(Q)` and `N − 2` split blocks.
/// Also records the realized vanishing range of `Q` for `N ∈ {4, 6, 8}`, which must reach
/// `2N − 6`.
pub fn spgr6_subcomplex() -> CheckOutcome {
    outcome(5, || {
        let b = subcomplex_b(6)?;
        let found: Vec<Vec<Partition>> = (0..=b.top_degree()).map(|d| b.alphas(d)).collect();
        let terms_ok = found == expected_b6_terms();
        let summands: usize = found.iter().map(Vec::len).sum();
        let blocks = split_blocks(6)?.len();
        let mut ranges = Vec::new();
        let mut ranges_ok = true;
        let mut q6_ok = false;
        for n in [4, 6, 8] {
            let (last, h) = realized_q_vanishing(n)?;
            let required = 2 * n - 6;
            ranges_ok &= last.is_some_and(|d| d >= required);
            if n == 6 {
                q6_ok = h[..=6].iter().all(|&x| x == 0);
            }
            let top = h[2 * n - 5];
            ranges.push(format!(
                "N={n}: exact through {}, H_{} = {top} (kernel rank {})",
                last.map_or("none".into(), |d| d.to_string()),
                2 * n - 5,
                kernel_rank_b(n)?
            ));
        }
        let passed = terms_ok && q6_ok && blocks == 4 && ranges_ok;
        Ok((
            passed,
            format!(
                "{summands} summands in B (match {terms_ok}), {blocks} blocks; {}",
                ranges.join("; ")
            ),
        ))
    })
}

/// Lascoux complexes at `t` for `N ∈ {4, 6, 8}` and `0 ≤ j ≤ N − 2` are exact in the
/// promised degrees.
pub fn lascoux_exactness() -> CheckOutcome {
    outcome(6, || {
        let mut count = 0;
        let mut extra = 0;
        for n in [4, 6, 8] {
            for j in 0..=n - 2 {
                let r = LascouxReport::compute(n, j, 0)?;
                if !r.holds() {
                    return Ok((false, format!("N={n}, j={j}: homology {:?}", r.homology)));
                }
                extra += r.realized.len() - r.promised.len();
                count += 1;
            }
        }
        Ok((
            true,
            format!("{count} complexes exact where promised; {extra} further exact degrees"),
        ))
    })
}

/// Degree-two periodicity of the summands of `D` past `2(N − 2)` for `N ∈ {4, 6}`.
pub fn tate_periodicity() -> CheckOutcome {
    outcome(7, || {
        let mut detail = Vec::new();
        for n in [4, 6] {
            let r = periodicity_check(n, 2 * (n - 2) + 4)?;
            if !r.holds() {
                return Ok((
                    false,
                    format!("N={n} fails at degree {:?}", r.first_failure),
                ));
            }
            detail.push(format!("N={n}: degrees {:?}", r.checked));
        }
        Ok((true, detail.join("; ")))
    })
}

/// `d ∘ d = 0` on `⋀(W ⊗ U)[T]` for `N ∈ {4, 6, 8}` through degree `4(N − 2) + 4`, past
/// which the composite only changes by the scalar `i(i − 1)`.
pub fn fiber_d_squared() -> CheckOutcome {
    outcome(8, || {
        let mut degrees = Vec::new();
        for n in [4, 6, 8] {
            let model = FiberModel::new(n)?;
            let top = 2 * model.generators() + 4;
            model.check_d_squared(top)?;
            degrees.push(format!("N={n} through {top}"));
        }
        Ok((true, degrees.join(", ")))
    })
}

/// Unitriangular pairing on `Gr(2,4)`, exceptional Ext table on `SpGr(2,4)` and generator
/// counts `C(N, k)`.
pub fn ktheory_pairings() -> CheckOutcome {
    outcome(9, || {
        let m = pairing_matrix_gr(2, 4)?;
        let gr_ok = m.entries.len() == 6 && m.is_unitriangular();
        let ext_ok = ext_table_spgr4()?.is_exceptional();
        let mut counts_ok = true;
        for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
            counts_ok &= generators_gr(k, n)?.len() as u64 == binomial(n, k);
        }
        Ok((
            gr_ok && ext_ok && counts_ok,
            format!(
                "Gr(2,4) pairing unitriangular {gr_ok}, SpGr(2,4) exceptional {ext_ok}, counts {counts_ok}"
            ),
        ))
    })
}

/// Outcome of the sampled symplectic checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticSummary {
    /// Random matrices preserving `z`, out of the number drawn.
    pub z_invariant: (usize, usize),
    /// Isotropy families passing, with the `n` used for each.
    pub families: Vec<(String, usize, bool)>,
    /// Parabolic samples all landing in `Sym₂`.
    pub parabolic: bool,
    /// The two-form identity on random isotropic pairs.
    pub theta: bool,
}

impl SymplecticSummary {
    /// Every part passed.
    pub fn holds(&self) -> bool {
        self.z_invariant.0 == self.z_invariant.1
            && self.families.iter().all(|f| f.2)
            && self.parabolic
            && self.theta
    }
}

/// Runs the symplectic checks with `samples` random matrices, `samples / 2` parabolic
/// elements and `samples` isotropic pairs. Families use `n = 3`, or `n = 4` for the case
/// that needs four isotropic directions.
pub fn symplectic_summary(seed: u64, samples: usize) -> Result<SymplecticSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invariant = 0;
    for _ in 0..samples {
        let m = random_symplectic(3, 6, &mut rng)?;
        if z_invariance(&m, 6)? {
            invariant += 1;
        }
    }
    let families = IsotropyCase::ALL
        .iter()
        .map(|&case| {
            let n = case.min_n().max(3);
            Ok((case.to_string(), n, limit_check(case, n)?.holds()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymplecticSummary {
        z_invariant: (invariant, samples),
        families,
        parabolic: parabolic_eta_check(3, samples / 2, seed)?,
        theta: theta_identity_check(samples, seed),
    })
}

/// `z`-invariance, isotropy families, parabolic action on `η`, and the two-form identity.
pub fn symplectic_checks(seed: u64) -> CheckOutcome {
    outcome(10, || {
        let s = symplectic_summary(seed, 100)?;
        Ok((
            s.holds(),
            format!(
                "z-invariant {}/{}, families {:?}, parabolic {}, theta {}",
                s.z_invariant.0,
                s.z_invariant.1,
                s.families
                    .iter()
                    .map(|(c, n, ok)| format!("{c}@{n}:{ok}"))
                    .collect::<Vec<_>>(),
                s.parabolic,
                s.theta
            ),
        ))
    })
}

/// For `F = Σ^γ S*`, `γ` in the `2 × 2` box on `Gr(2,4)`: bundles without higher cohomology
/// against every `Σ^{α*} S^⊥` satisfy the alternating `h⁰` rank identity, and every bundle
/// satisfies it with Euler characteristics.
pub fn resolution_euler_identity() -> CheckOutcome {
    outcome(11, || {
        let mut resolved = Vec::new();
        let mut rejected = Vec::new();
        for gamma in box_partitions(2, 2) {
            let f = Bundle::schur_s_dual(2, 4, &gamma)?;
            match resolution_coeffs(&f) {
                Ok(r) if r.euler_rank == r.rank as i64 => resolved.push(gamma.to_string()),
                Ok(r) => {
                    return Ok((
                        false,
                        format!("{gamma}: {} vs rank {}", r.euler_rank, r.rank),
                    ))
                }
                Err(Error::NotAcyclic { alpha, degree, .. }) => {
                    rejected.push(format!("{gamma} (h{degree} at {alpha})"))
                }
                Err(e) => return Err(e),
            }
            let chi = euler_characteristic_sum(&f)?;
            if chi != f.rank() as i64 {
                return Ok((false, format!("{gamma}: χ-sum {chi} vs rank {}", f.rank())));
            }
        }
        Ok((
            !resolved.is_empty(),
            format!(
                "resolved {}; outside the acyclic class {}; χ-sums match for all",
                resolved.join(" "),
                if rejected.is_empty() {
                    "none".into()
                } else {
                    rejected.join(" ")
                }
            ),
        ))
    })
}

/// Runs every check in order. `lr_oracle` is passed to [`littlewood_richardson`].
pub fn run_all(seed: u64, lr_oracle: Option<&LrOracle>) -> Vec<CheckOutcome> {
    let mut out = Vec::with_capacity(CHECKS.len());
    out.push(cauchy_rank_identity());
    out.push(littlewood_richardson(lr_oracle));
    out.push(bott_tables());
    out.push(spgr4_fiber());
    out.push(spgr6_subcomplex());
    out.push(lascoux_exactness());
    out.push(tate_periodicity());
    out.push(fiber_d_squared());
    out.push(ktheory_pairings());
    out.push(symplectic_checks(seed));
    out.push(resolution_euler_identity());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_checks_pass() {
        for c in [
            cauchy_rank_identity(),
            bott_tables(),
            spgr4_fiber(),
            tate_periodicity(),
            ktheory_pairings(),
            resolution_euler_identity(),
        ] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn names_follow_ids() {
        let c = cauchy_rank_identity();
        assert_eq!((c.id, c.name), (1, "cauchy-rank-identity"));
    }
}
