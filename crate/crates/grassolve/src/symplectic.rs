//! Symplectic linear algebra on `V = k^{2n}` with the form `⟨v, w⟩ = vᵀJw`,
//! `J = (0 I; −I 0)`.
//!
//! * [`is_symplectic`] and [`z_invariance`]: the group `Sp(V)` and its invariant two-form
//!   `z = Σ yᵢ ∧ y_{n+i}`;
//! * [`random_symplectic`]: exact random elements as products of transvections;
//! * [`isotropy_family`] and [`limit_check`]: one-parameter families `g_λ` fixing
//!   `p = e₁ ∧ e₂` and moving a second isotropic plane `q` to `p` as `λ → 0`, written with
//!   Laurent polynomial entries;
//! * [`parabolic_eta`] and [`parabolic_eta_check`]: the action of the parabolic algebra
//!   stabilising `⟨e₁, e₂⟩` on `η = Σ xᵢ ⊗ x_{n+i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{frac, rat, RatMatrix, Rational};

/// The standard symplectic space of dimension `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SympSpace {
    n: usize,
}

impl SympSpace {
    /// Space of dimension `2n`, `n ≥ 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported("a symplectic space needs n ≥ 1".into()));
        }
        Ok(Self { n })
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The Gram matrix `J`.
    pub fn j_matrix(&self) -> RatMatrix {
        let n = self.n;
        RatMatrix::from_fn(2 * n, 2 * n, |i, j| {
            if j == i + n {
                rat(1)
            } else if i == j + n {
                rat(-1)
            } else {
                rat(0)
            }
        })
    }

    /// `⟨v, w⟩ = Σ vᵢw_{n+i} − v_{n+i}wᵢ`.
    pub fn pairing(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let n = self.n;
        (0..n).fold(Rational::zero(), |acc, i| {
            acc + &v[i] * &w[n + i] - &v[n + i] * &w[i]
        })
    }

    /// `z(v ∧ w)` computed from the Plücker coordinates `v_i w_j − v_j w_i` of `v ∧ w`.
    pub fn z_of_wedge(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let n = self.n;
        (0..n).fold(Rational::zero(), |acc, i| {
            let j = n + i;
            acc + (&v[i] * &w[j] - &v[j] * &w[i])
        })
    }
}

fn check_square(m: &RatMatrix, size: usize) -> Result<SympSpace> {
    if m.rows() != size || m.cols() != size || !size.is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix of even size {size}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    SympSpace::new(size / 2)
}

/// `MᵀJM = J`.
pub fn is_symplectic(m: &RatMatrix, size: usize) -> Result<bool> {
    let space = check_square(m, size)?;
    let j = space.j_matrix();
    Ok(m.transpose().mul(&j)?.mul(m)? == j)
}

/// The two-form `Σ y'ᵢ ∧ y'_{n+i}` in the dual basis transformed by `M` equals `z`.
///
/// As a Gram matrix the transformed form is `(M⁻¹)ᵀ J M⁻¹`.
pub fn z_invariance(m: &RatMatrix, size: usize) -> Result<bool> {
    if !is_symplectic(m, size)? {
        return Err(Error::NotSymplectic);
    }
    let space = SympSpace::new(size / 2)?;
    let inv = m.inverse().ok_or(Error::NotSymplectic)?;
    let j = space.j_matrix();
    Ok(inv.transpose().mul(&j)?.mul(&inv)? == j)
}

/// The transvection `v ↦ v + c⟨v, u⟩u`, i.e. `I − c·u·uᵀ·J`.
pub fn transvection(u: &[Rational], c: &Rational) -> Result<RatMatrix> {
    let size = u.len();
    let space = check_square(&RatMatrix::zeros(size, size), size)?;
    let j = space.j_matrix();
    let uut = RatMatrix::from_fn(size, size, |a, b| &u[a] * &u[b]);
    RatMatrix::identity(size).sub(&uut.mul(&j)?.scale(c))
}

/// A product of `factors` random transvections with small integer vectors and small
/// rational coefficients. Each factor is checked with [`is_symplectic`].
pub fn random_symplectic(n: usize, factors: usize, rng: &mut ChaCha8Rng) -> Result<RatMatrix> {
    let size = 2 * n;
    let mut out = RatMatrix::identity(size);
    for _ in 0..factors {
        let u: Vec<Rational> = (0..size).map(|_| rat(rng.gen_range(-3..=3))).collect();
        let c = frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let t = transvection(&u, &c)?;
        if !is_symplectic(&t, size)? {
            return Err(Error::NotSymplectic);
        }
        out = out.mul(&t)?;
    }
    Ok(out)
}

/// A Laurent polynomial in `λ` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·λ^d`.
    pub fn monomial(c: Rational, d: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d, c);
        }
        Self { terms }
    }

    /// The constant `c`.
    pub fn constant(c: i64) -> Self {
        Self::monomial(rat(c), 0)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `λ^d`.
    pub fn coeff(&self, d: i32) -> Rational {
        self.terms.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (d, c) in &other.terms {
            let e = terms.entry(*d).or_insert_with(Rational::zero);
            *e += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out = out.add(&Self::monomial(c1 * c2, d1 + d2));
            }
        }
        out
    }

    /// Value at a nonzero rational `λ`.
    pub fn eval(&self, lambda: &Rational) -> Result<Rational> {
        if lambda.is_zero() && self.lowest_degree().is_some_and(|d| d < 0) {
            return Err(Error::Unsupported("negative power of λ at λ = 0".into()));
        }
        let mut out = Rational::zero();
        for (d, c) in &self.terms {
            let p = if *d >= 0 {
                num_traits::pow(lambda.clone(), *d as usize)
            } else {
                num_traits::pow(lambda.recip(), d.unsigned_abs() as usize)
            };
            out += c * p;
        }
        Ok(out)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("{c}·λ"),
                _ => format!("{c}·λ^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    /// Identity of the given size.
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![Laurent::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Laurent::constant(1);
        }
        Self { size, entries }
    }

    /// Size of the matrix.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.size + j]
    }

    /// Sets entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, value: Laurent) {
        self.entries[i * self.size + j] = value;
    }

    /// Column `j`, the image of `e_{j+1}`.
    pub fn column(&self, j: usize) -> Vec<Laurent> {
        (0..self.size).map(|i| self.get(i, j).clone()).collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(i, j, self.get(j, i).clone());
            }
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let s = self.size;
        let mut out = Self {
            size: s,
            entries: vec![Laurent::zero(); s * s],
        };
        for i in 0..s {
            for k in 0..s {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..s {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Evaluation at a nonzero rational `λ`.
    pub fn eval(&self, lambda: &Rational) -> Result<RatMatrix> {
        let s = self.size;
        let values = self
            .entries
            .iter()
            .map(|e| e.eval(lambda))
            .collect::<Result<Vec<_>>>()?;
        Ok(RatMatrix::from_fn(s, s, |i, j| values[i * s + j].clone()))
    }

    /// `MᵀJM = J` as an identity of Laurent polynomials.
    pub fn is_symplectic(&self) -> bool {
        if !self.size.is_multiple_of(2) {
            return false;
        }
        let n = self.size / 2;
        let mut j = Self {
            size: self.size,
            entries: vec![Laurent::zero(); self.size * self.size],
        };
        for i in 0..n {
            j.set(i, n + i, Laurent::constant(1));
            j.set(n + i, i, Laurent::constant(-1));
        }
        self.transpose().mul(&j).mul(self) == j
    }
}

/// The five relative positions of a plane `q` with respect to `p = e₁ ∧ e₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IsotropyCase {
    /// `q = e_{n+1} ∧ e_{n+2}`.
    A,
    /// `q = e_{n+1} ∧ e_{n+3}`.
    B,
    /// `q = e_{n+3} ∧ e_{n+4}`.
    C,
    /// `q = e₁ ∧ e_{n+2}`.
    D,
    /// `q = e₁ ∧ e_{n+3}`.
    E,
}

impl IsotropyCase {
    /// All cases in order.
    pub const ALL: [IsotropyCase; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    /// Smallest `n` for which every basis vector of the family exists.
    pub fn min_n(self) -> usize {
        match self {
            Self::A | Self::D => 2,
            Self::B | Self::E => 3,
            Self::C => 4,
        }
    }

    /// Zero-based indices of the two basis vectors spanning `q`.
    pub fn target(self, n: usize) -> (usize, usize) {
        match self {
            Self::A => (n, n + 1),
            Self::B => (n, n + 2),
            Self::C => (n + 2, n + 3),
            Self::D => (0, n + 1),
            Self::E => (0, n + 2),
        }
    }
}

impl fmt::Display for IsotropyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
            Self::D => "d",
            Self::E => "e",
        };
        write!(f, "{c}")
    }
}

impl FromStr for IsotropyCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Self::A),
            "b" => Ok(Self::B),
            "c" => Ok(Self::C),
            "d" => Ok(Self::D),
            "e" => Ok(Self::E),
            other => Err(Error::Parse(format!("unknown isotropy case {other:?}"))),
        }
    }
}

/// The family `g_λ` for the given case, with `γ = (1 − λ)/λ`.
///
/// Columns are images of basis vectors; every `g_λ` maps `e₁` and `e₂` to multiples of
/// themselves, so it fixes `p = e₁ ∧ e₂`.
pub fn isotropy_family(case: IsotropyCase, n: usize) -> Result<LaurentMatrix> {
    if n < case.min_n() {
        return Err(Error::Unsupported(format!(
            "case {case} needs n ≥ {}, got n = {n}",
            case.min_n()
        )));
    }
    let inv = || Laurent::monomial(rat(1), -1);
    let lam = || Laurent::monomial(rat(1), 1);
    let one_minus = || Laurent::constant(1).sub(&lam());
    let gamma = || inv().sub(&Laurent::constant(1));
    let mut g = LaurentMatrix::identity(2 * n);
    // moves column `col` to `(1 − λ)e_{row} + λ e_{col}`
    let pull = |g: &mut LaurentMatrix, row: usize, col: usize| {
        g.set(row, col, one_minus());
        g.set(col, col, lam());
    };
    // scales `e_i` by `λ⁻¹` and adds `γ e_i` to the image of `e_{n+j}`
    let shear = |g: &mut LaurentMatrix, i: usize, col: usize| {
        g.set(i, i, inv());
        g.set(i, col, gamma());
    };
    match case {
        IsotropyCase::A => {
            g.set(0, 0, inv());
            g.set(1, 1, inv());
            pull(&mut g, 0, n);
            pull(&mut g, 1, n + 1);
        }
        IsotropyCase::B => {
            g.set(0, 0, inv());
            pull(&mut g, 0, n);
            pull(&mut g, 1, n + 2);
            shear(&mut g, 2, n + 1);
        }
        IsotropyCase::C => {
            pull(&mut g, 0, n + 2);
            pull(&mut g, 1, n + 3);
            shear(&mut g, 2, n);
            shear(&mut g, 3, n + 1);
        }
        IsotropyCase::D => {
            g.set(1, 1, inv());
            pull(&mut g, 1, n + 1);
        }
        IsotropyCase::E => {
            pull(&mut g, 1, n + 2);
            shear(&mut g, 2, n + 1);
        }
    }
    Ok(g)
}

/// Plücker coordinates of `u ∧ v`, keyed by `(i, j)` with `i < j`; zero entries omitted.
pub fn laurent_wedge(u: &[Laurent], v: &[Laurent]) -> BTreeMap<(usize, usize), Laurent> {
    let mut out = BTreeMap::new();
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            let c = u[i].mul(&v[j]).sub(&u[j].mul(&v[i]));
            if !c.is_zero() {
                out.insert((i, j), c);
            }
        }
    }
    out
}

/// Outcome of [`limit_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    /// Case checked.
    pub case: IsotropyCase,
    /// Half dimension.
    pub n: usize,
    /// `g_λ` is symplectic for every `λ`.
    pub symplectic: bool,
    /// `g₁(q) = q`.
    pub fixes_q_at_one: bool,
    /// The lowest-order part of `g_λ(q)` is a nonzero multiple of `e₁ ∧ e₂`.
    pub limit_is_p: bool,
}

impl LimitReport {
    /// True when all three properties hold.
    pub fn holds(&self) -> bool {
        self.symplectic && self.fixes_q_at_one && self.limit_is_p
    }
}

/// Checks the family for `case`: symplectic as a Laurent matrix, the identity on `q` at
/// `λ = 1`, and `lim_{λ→0} g_λ(q) = e₁ ∧ e₂` in the Plücker embedding.
pub fn limit_check(case: IsotropyCase, n: usize) -> Result<LimitReport> {
    let g = isotropy_family(case, n)?;
    let (a, b) = case.target(n);
    let wedge = laurent_wedge(&g.column(a), &g.column(b));
    let at_one: BTreeMap<(usize, usize), Rational> = wedge
        .iter()
        .map(|(k, c)| Ok((*k, c.eval(&rat(1))?)))
        .collect::<Result<BTreeMap<_, _>>>()?
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let fixes_q_at_one = at_one.len() == 1 && at_one.get(&(a, b)) == Some(&Rational::one());
    let lowest = wedge.values().filter_map(Laurent::lowest_degree).min();
    let limit_is_p = lowest.is_some_and(|d| {
        wedge
            .iter()
            .filter(|(_, c)| !c.coeff(d).is_zero())
            .map(|(k, _)| *k)
            .eq([(0, 1)])
    });
    Ok(LimitReport {
        case,
        n,
        symplectic: g.is_symplectic(),
        fixes_q_at_one,
        limit_is_p,
    })
}

/// True when `p` lies in the parabolic subalgebra of `sp(V)` stabilising `⟨e₁, e₂⟩`.
///
/// With blocks of sizes `(2, n−2, 2, n−2)` such an element reads
/// `(A F B G; 0 C Gᵀ D; 0 0 −Aᵀ 0; 0 E −Fᵀ −Cᵀ)` with `B`, `D`, `E` symmetric.
pub fn is_parabolic(p: &RatMatrix, n: usize) -> bool {
    if n < 2 || p.rows() != 2 * n || p.cols() != 2 * n {
        return false;
    }
    let space = SympSpace { n };
    let j = space.j_matrix();
    let in_sp = match (j.mul(p), p.transpose().mul(&j)) {
        (Ok(a), Ok(b)) => a.add(&b).is_ok_and(|s| s.is_zero()),
        _ => false,
    };
    // the first two basis vectors span an invariant subspace
    let stabilises = (0..2).all(|col| (2..2 * n).all(|row| p[(row, col)].is_zero()));
    in_sp && stabilises
}

/// A random element of the parabolic algebra with small integer blocks.
pub fn random_parabolic(n: usize, rng: &mut ChaCha8Rng) -> Result<RatMatrix> {
    if n < 2 {
        return Err(Error::Unsupported(
            "the parabolic algebra needs n ≥ 2".into(),
        ));
    }
    let size = 2 * n;
    let mut draw = || rat(rng.gen_range(-5..=5));
    // upper-left block m = (A F; 0 C), symmetric n-block (B G; Gᵀ D), symmetric E
    let mut m = RatMatrix::zeros(n, n);
    let mut upper = RatMatrix::zeros(n, n);
    let mut lower = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i < 2 || j >= 2 {
                m[(i, j)] = draw();
            }
            if j >= i {
                let v = draw();
                upper[(i, j)] = v.clone();
                upper[(j, i)] = v;
            }
            if i >= 2 && j >= i {
                let v = draw();
                lower[(i, j)] = v.clone();
                lower[(j, i)] = v;
            }
        }
    }
    let out = RatMatrix::from_fn(size, size, |i, j| match (i < n, j < n) {
        (true, true) => m[(i, j)].clone(),
        (true, false) => upper[(i, j - n)].clone(),
        (false, true) => lower[(i - n, j)].clone(),
        (false, false) => -m[(j - n, i - n)].clone(),
    });
    if !is_parabolic(&out, n) {
        return Err(Error::NotParabolic(
            "sampled matrix left the algebra".into(),
        ));
    }
    Ok(out)
}

/// `p · η` as a coefficient matrix on `V* ⊗ V*`.
///
/// `η = Σ xᵢ ⊗ x_{n+i}` has coefficient matrix `H` with `H_{i,n+i} = 1`, and `p` acts on each
/// factor by `f ↦ −pᵀf`, so `p · η` has coefficients `−pᵀH − Hp`.
pub fn parabolic_eta(p: &RatMatrix, n: usize) -> Result<RatMatrix> {
    if !is_parabolic(p, n) {
        return Err(Error::NotParabolic(
            "matrix is not in the parabolic subalgebra".into(),
        ));
    }
    let size = 2 * n;
    let h = RatMatrix::from_fn(size, size, |i, j| rat(i64::from(j == i + n)));
    let neg_pt = p.transpose().scale(&rat(-1));
    neg_pt.mul(&h)?.sub(&h.mul(p)?)
}

/// True when a coefficient matrix lies in `Sym₂(V/V₂)*`: symmetric, with zero rows and
/// columns for `x₁` and `x₂`.
pub fn in_sym2_quotient(t: &RatMatrix) -> bool {
    let size = t.rows();
    t == &t.transpose() && (0..2).all(|a| (0..size).all(|b| t[(a, b)].is_zero()))
}

/// Draws `samples` random parabolic elements for `n` and checks `p · η ∈ Sym₂(V/V₂)*`.
pub fn parabolic_eta_check(n: usize, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = random_parabolic(n, &mut rng)?;
        if !in_sym2_quotient(&parabolic_eta(&p, n)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
