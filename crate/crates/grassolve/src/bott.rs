//! Borel-Weil-Bott cohomology on Grassmannians and on hyperplane sections.
//!
//! Weights of `GL_N` are integer tuples. A homogeneous bundle on `Gr(k,N)` that is
//! irreducible for the Levi factor `GL_k × GL_{N−k}` is an [`Irreducible`]: a `GL_k`
//! weight `s` for the tautological subbundle `S` and a `GL_{N−k}` weight `perp` for
//! `S^⊥ = (V/S)*`. The line bundle on the flag variety pushing forward to it has weight
//! `(−s_k,…,−s_1, perp_1,…,perp_{N−k})`, so `Σ^α S` has weight `(−α_k,…,−α_1,0,…,0)`
//! and `Σ^β S^⊥` has weight `(0,…,0,β_1,…,β_{N−k})`.
//!
//! [`Bundle`] is a direct sum of irreducibles with multiplicities, closed under duals
//! and tensor products (computed with the Littlewood-Richardson rule on each factor).
//! [`cohomology_gr`] applies Bott's algorithm summand by summand; [`cohomology_x`]
//! restricts to the Plücker hyperplane section `X ⊂ Gr(2,N)` through the sequence
//! `0 → V(−1) → V → V|_X → 0` and reports [`Error::Indeterminate`] whenever the
//! long exact sequence leaves a group undetermined.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{denormalize_weight, lr_tensor, normalize_weight, Partition};

/// Integer weight of `GL_N`.
pub type Weight = Vec<i64>;

/// Outcome of Bott's algorithm for one line bundle on the full flag variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CohomologyResult {
    /// `w + ρ` has a repeated entry: no cohomology at all.
    Zero,
    /// Cohomology in exactly one degree.
    Nonzero {
        /// Cohomological degree, the number of inversions sorting `w + ρ`.
        degree: usize,
        /// Dominant weight `σ(w + ρ) − ρ`.
        dominant: Weight,
        /// Dimension of the irreducible representation with that highest weight.
        dim: u64,
    },
}

impl CohomologyResult {
    /// Degree and dimension of the nonzero group, if any.
    pub fn degree_dim(&self) -> Option<(usize, u64)> {
        match self {
            Self::Zero => None,
            Self::Nonzero { degree, dim, .. } => Some((*degree, *dim)),
        }
    }
}

/// The shift `ρ = (N, N−1, …, 1)`.
pub fn rho(n: usize) -> Weight {
    (1..=n as i64).rev().collect()
}

/// Bott's algorithm for `GL_N`.
///
/// Adds `ρ`; a repeated entry gives [`CohomologyResult::Zero`]. Otherwise sorts the entries
/// into decreasing order, reports the number of inversions as the degree, and the Weyl
/// dimension of `σ(w + ρ) − ρ`.
pub fn bott_gl(w: &[i64]) -> Result<CohomologyResult> {
    let n = w.len();
    let shifted: Vec<i64> = w.iter().zip(rho(n)).map(|(a, r)| a + r).collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return Ok(CohomologyResult::Zero);
    }
    let degree = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let dominant: Weight = sorted.iter().zip(rho(n)).map(|(a, r)| a - r).collect();
    if dominant.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NonDominant(dominant));
    }
    let dim = weyl_dim(&dominant);
    Ok(CohomologyResult::Nonzero {
        degree,
        dominant,
        dim,
    })
}

/// Weyl dimension `∏_{i<j} (l_i − l_j + j − i)/(j − i)` of a dominant `GL` weight.
pub fn weyl_dim(l: &[i64]) -> u64 {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let gap = l[i] - l[j] + (j - i) as i64;
            debug_assert!(gap > 0, "weyl_dim needs a dominant weight");
            num *= gap as u64;
            den *= (j - i) as u64;
        }
    }
    (num / den)
        .to_u64()
        .expect("representation dimension exceeds u64")
}

/// The flag-variety weight `λ(α) + λ(β)` of `Σ^α S ⊗ Σ^β S^⊥` on `Gr(k,N)`.
pub fn grass_weight(alpha: &Partition, beta: &Partition, k: usize, n: usize) -> Result<Weight> {
    if alpha.rows() > k {
        return Err(Error::TooManyRows {
            what: "diagram on S",
            rows: alpha.rows(),
            max: k,
        });
    }
    if beta.rows() > n - k {
        return Err(Error::TooManyRows {
            what: "diagram on S^⊥",
            rows: beta.rows(),
            max: n - k,
        });
    }
    Ok((0..k)
        .map(|i| -i64::from(alpha.part(k - 1 - i)))
        .chain((0..n - k).map(|i| i64::from(beta.part(i))))
        .collect())
}

/// Levi-irreducible homogeneous bundle `Σ^s S ⊗ Σ^perp S^⊥` with `GL` weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Irreducible {
    /// Non-increasing `GL_k` weight on `S`.
    pub s: Weight,
    /// Non-increasing `GL_{N−k}` weight on `S^⊥`.
    pub perp: Weight,
}

impl Irreducible {
    /// Weight of the line bundle on the flag variety that pushes forward to this bundle.
    pub fn flag_weight(&self) -> Weight {
        self.s
            .iter()
            .rev()
            .map(|x| -x)
            .chain(self.perp.iter().copied())
            .collect()
    }

    /// Dual bundle.
    pub fn dual(&self) -> Self {
        Self {
            s: self.s.iter().rev().map(|x| -x).collect(),
            perp: self.perp.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Rank of the bundle.
    pub fn rank(&self) -> u64 {
        weyl_dim(&self.s) * weyl_dim(&self.perp)
    }
}

/// Homogeneous bundle on `Gr(k,N)`, a direct sum of [`Irreducible`] pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    k: usize,
    n: usize,
    terms: BTreeMap<Irreducible, u64>,
}

impl Bundle {
    /// The zero bundle on `Gr(k,N)`.
    pub fn zero(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Unsupported(format!("Gr({k},{n}) needs 1 ≤ k < N")));
        }
        Ok(Self {
            k,
            n,
            terms: BTreeMap::new(),
        })
    }

    /// The irreducible bundle with the given weights; both must be non-increasing.
    pub fn irreducible(k: usize, n: usize, s: Weight, perp: Weight) -> Result<Self> {
        let mut b = Self::zero(k, n)?;
        if s.len() != k || perp.len() != n - k {
            return Err(Error::DimensionMismatch(format!(
                "weights of length {} and {} on Gr({k},{n})",
                s.len(),
                perp.len()
            )));
        }
        for w in [&s, &perp] {
            if w.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::InvalidPartition(w.clone()));
            }
        }
        b.terms.insert(Irreducible { s, perp }, 1);
        Ok(b)
    }

    /// The trivial line bundle.
    pub fn trivial(k: usize, n: usize) -> Result<Self> {
        Self::irreducible(k, n, vec![0; k], vec![0; n - k])
    }

    /// `O(d)`, the `d`-th power of the Plücker line bundle `det S*`.
    pub fn line(k: usize, n: usize, d: i64) -> Result<Self> {
        Self::irreducible(k, n, vec![-d; k], vec![0; n - k])
    }

    /// `Σ^α S`.
    pub fn schur_s(k: usize, n: usize, alpha: &Partition) -> Result<Self> {
        check_rows(alpha, k, "diagram on S")?;
        Self::irreducible(k, n, denormalize_weight(alpha, 0, k), vec![0; n - k])
    }

    /// `(Σ^α S)* = Σ^α S*`.
    pub fn schur_s_dual(k: usize, n: usize, alpha: &Partition) -> Result<Self> {
        Ok(Self::schur_s(k, n, alpha)?.dual())
    }

    /// `Σ^β S^⊥`.
    pub fn schur_perp(k: usize, n: usize, beta: &Partition) -> Result<Self> {
        check_rows(beta, n - k, "diagram on S^⊥")?;
        Self::irreducible(k, n, vec![0; k], denormalize_weight(beta, 0, n - k))
    }

    /// `Σ^α S ⊗ Σ^β S^⊥`.
    pub fn schur_pair(k: usize, n: usize, alpha: &Partition, beta: &Partition) -> Result<Self> {
        Self::schur_s(k, n, alpha)?.tensor(&Self::schur_perp(k, n, beta)?)
    }

    /// Dimension `k` of the tautological subbundle.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension `N` of the ambient space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducible pieces with multiplicities.
    pub fn terms(&self) -> &BTreeMap<Irreducible, u64> {
        &self.terms
    }

    /// Rank of the bundle.
    pub fn rank(&self) -> u64 {
        self.terms.iter().map(|(t, m)| t.rank() * m).sum()
    }

    /// Dual bundle.
    pub fn dual(&self) -> Self {
        Self {
            k: self.k,
            n: self.n,
            terms: self.terms.iter().map(|(t, &m)| (t.dual(), m)).collect(),
        }
    }

    /// Tensor product with `O(d)`.
    pub fn twist(&self, d: i64) -> Self {
        Self {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(t, &m)| {
                    let s = t.s.iter().map(|x| x - d).collect();
                    (
                        Irreducible {
                            s,
                            perp: t.perp.clone(),
                        },
                        m,
                    )
                })
                .collect(),
        }
    }

    /// Direct sum.
    pub fn sum(&self, other: &Bundle) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (t, m) in &other.terms {
            *out.terms.entry(t.clone()).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Tensor product, decomposed with the Littlewood-Richardson rule on both factors.
    pub fn tensor(&self, other: &Bundle) -> Result<Self> {
        self.same_space(other)?;
        let mut out = Self::zero(self.k, self.n)?;
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                let s_parts = weight_product(&a.s, &b.s)?;
                let perp_parts = weight_product(&a.perp, &b.perp)?;
                for (s, ms) in &s_parts {
                    for (perp, mp) in &perp_parts {
                        let t = Irreducible {
                            s: s.clone(),
                            perp: perp.clone(),
                        };
                        *out.terms.entry(t).or_insert(0) += ma * mb * ms * mp;
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_space(&self, other: &Bundle) -> Result<()> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::DimensionMismatch(format!(
                "bundles on Gr({},{}) and Gr({},{})",
                self.k, self.n, other.k, other.n
            )));
        }
        Ok(())
    }
}

fn check_rows(p: &Partition, max: usize, what: &'static str) -> Result<()> {
    if p.rows() > max {
        return Err(Error::TooManyRows {
            what,
            rows: p.rows(),
            max,
        });
    }
    Ok(())
}

/// Tensor product of two irreducible `GL_m` representations given by weights of length `m`.
fn weight_product(a: &[i64], b: &[i64]) -> Result<BTreeMap<Weight, u64>> {
    let m = a.len();
    if m == 0 {
        return Ok([(Vec::new(), 1)].into_iter().collect());
    }
    let (pa, da) = normalize_weight(a)?;
    let (pb, db) = normalize_weight(b)?;
    Ok(lr_tensor(&pa, &pb, m)
        .into_iter()
        .map(|(nu, mult)| (denormalize_weight(&nu, da + db, m), mult))
        .collect())
}

/// Dimensions `h^i` of a cohomology computation, indexed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    h: Vec<u64>,
}

impl CohomologyTable {
    /// The zero table on a space of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        Self {
            h: vec![0; dim + 1],
        }
    }

    /// Builds a table from its entries, degree 0 first.
    pub fn from_vec(h: Vec<u64>) -> Self {
        Self { h }
    }

    /// `h^i` (zero past the stored degrees).
    pub fn h(&self, i: usize) -> u64 {
        self.h.get(i).copied().unwrap_or(0)
    }

    /// All entries, degree 0 first.
    pub fn entries(&self) -> &[u64] {
        &self.h
    }

    /// True when every group vanishes.
    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|&x| x == 0)
    }

    /// True when every group of positive degree vanishes.
    pub fn higher_vanish(&self) -> bool {
        self.h.iter().skip(1).all(|&x| x == 0)
    }

    /// Euler characteristic `Σ (−1)^i h^i`.
    pub fn euler(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    }

    fn add(&mut self, degree: usize, dim: u64) {
        if self.h.len() <= degree {
            self.h.resize(degree + 1, 0);
        }
        self.h[degree] += dim;
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.h.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "h{i}={x}")?;
        }
        Ok(())
    }
}

impl Serialize for CohomologyTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.h.len()))?;
        for (i, x) in self.h.iter().enumerate() {
            map.serialize_entry(&format!("h{i}"), x)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for CohomologyTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct TableVisitor;
        impl<'de> Visitor<'de> for TableVisitor {
            type Value = CohomologyTable;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a map from \"h<i>\" to dimensions")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<CohomologyTable, A::Error> {
                let mut table = CohomologyTable::default();
                while let Some((key, value)) = map.next_entry::<String, u64>()? {
                    let degree = key
                        .strip_prefix('h')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| serde::de::Error::custom(format!("bad key {key:?}")))?;
                    table.add(degree, value);
                }
                Ok(table)
            }
        }
        d.deserialize_map(TableVisitor)
    }
}

/// Cohomology of a homogeneous bundle on `Gr(k,N)`, summed over its irreducible pieces.
pub fn cohomology_gr(bundle: &Bundle) -> Result<CohomologyTable> {
    let mut table = CohomologyTable::zeros(bundle.k * (bundle.n - bundle.k));
    for (t, m) in &bundle.terms {
        if let Some((degree, dim)) = bott_gl(&t.flag_weight())?.degree_dim() {
            table.add(degree, dim * m);
        }
    }
    Ok(table)
}

/// Cohomology of the restriction of a bundle on `Gr(2,N)` to the hyperplane section `X`.
///
/// With `A_i = h^i(V(−1))`, `B_i = h^i(V)` and `a_i : A_i → B_i`, the long exact sequence
/// gives `h^i(X) = dim coker a_i + dim ker a_{i+1}`. The cokernel is known when `A_i = 0`,
/// when `B_i = 0`, or in degree 0 where `a_0` is injective; the kernel is known when
/// `A_{i+1} = 0` or `B_{i+1} = 0`. Any other degree is reported as indeterminate.
pub fn cohomology_x(bundle: &Bundle) -> Result<CohomologyTable> {
    if bundle.k != 2 {
        return Err(Error::Unsupported(format!(
            "the hyperplane section lives in Gr(2,N), not Gr({},{})",
            bundle.k, bundle.n
        )));
    }
    let a = cohomology_gr(&bundle.twist(-1))?;
    let b = cohomology_gr(bundle)?;
    let dim_x = 2 * (bundle.n - 2) - 1;
    let mut table = CohomologyTable::zeros(dim_x);
    let mut unknown = Vec::new();
    for i in 0..=dim_x {
        let coker = if a.h(i) == 0 {
            Some(b.h(i))
        } else if b.h(i) == 0 {
            Some(0)
        } else if i == 0 {
            Some(b.h(0) - a.h(0))
        } else {
            None
        };
        let ker = if a.h(i + 1) == 0 {
            Some(0)
        } else if b.h(i + 1) == 0 {
            Some(a.h(i + 1))
        } else {
            None
        };
        match (coker, ker) {
            (Some(c), Some(k)) => table.add(i, c + k),
            _ => unknown.push(i),
        }
    }
    if unknown.is_empty() {
        Ok(table)
    } else {
        Err(Error::Indeterminate(unknown))
    }
}
