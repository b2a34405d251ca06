//! Brute-force reference computations used only by tests.
//!
//! Nothing here calls into the library's combinatorics: Schur modules are built as images
//! of Young symmetrizers on tensor powers, and exterior powers are counted by subsets.

#![allow(dead_code)]

use std::collections::BTreeMap;

use grassolve::partitions::{Multiset, Partition};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Weight (content vector) of a basis tensor `e_{i₁} ⊗ … ⊗ e_{i_d}` of `E^{⊗d}`, `dim E = m`.
type Weight = Vec<u32>;

/// Character of a representation: weight ↦ multiplicity.
pub type Character = BTreeMap<Weight, u64>;

/// All permutations of `0..d` as image vectors.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// Row and column of each box of `shape`, numbered row by row.
fn boxes(shape: &[u32]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect()
}

/// The Young symmetrizer `Σ_{p ∈ R} Σ_{q ∈ C} sgn(q)·p∘q` as a list of (permutation, sign).
fn young_symmetrizer(shape: &[u32]) -> BTreeMap<Vec<usize>, i64> {
    let cells = boxes(shape);
    let d = cells.len();
    let perms = permutations(d);
    let preserves = |p: &Vec<usize>, key: fn(&(usize, usize)) -> usize| {
        (0..d).all(|i| key(&cells[p[i]]) == key(&cells[i]))
    };
    let rows: Vec<_> = perms.iter().filter(|p| preserves(p, |c| c.0)).collect();
    let cols: Vec<_> = perms.iter().filter(|p| preserves(p, |c| c.1)).collect();
    let mut out = BTreeMap::new();
    for p in &rows {
        for q in &cols {
            *out.entry(compose(p, q)).or_insert(0) += sign(q);
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = BigRational::one() / rows[r][c].clone();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] * &inv;
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Character of the image of the Young symmetrizer of `shape` on `E^{⊗d}`, `dim E = m`,
/// obtained as the rank of the symmetrizer on each weight space.
pub fn symmetrizer_character(shape: &Partition, m: usize) -> Character {
    let parts = shape.parts();
    let d = shape.weight();
    let c = young_symmetrizer(parts);
    // basis tensors grouped by weight
    let mut spaces: BTreeMap<Weight, Vec<Vec<usize>>> = BTreeMap::new();
    let total = m.pow(d as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(d);
        let mut x = code;
        for _ in 0..d {
            word.push(x % m);
            x /= m;
        }
        let mut w = vec![0u32; m];
        for &i in &word {
            w[i] += 1;
        }
        spaces.entry(w).or_default().push(word);
    }
    let mut out = Character::new();
    for (w, basis) in spaces {
        let index: BTreeMap<&Vec<usize>, usize> =
            basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let rows: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|word| {
                let mut row = vec![BigRational::zero(); basis.len()];
                for (p, &s) in &c {
                    // σ acts by moving the factor in slot i to slot σ(i)
                    let mut image = vec![0; d];
                    for i in 0..d {
                        image[p[i]] = word[i];
                    }
                    row[index[&image]] += BigRational::from_integer(s.into());
                }
                row
            })
            .collect();
        let r = rank(rows);
        if r > 0 {
            out.insert(w, r as u64);
        }
    }
    out
}

/// `dim Σ^λ E` as the rank of the Young symmetrizer on `E^{⊗|λ|}`.
pub fn symmetrizer_dim(shape: &Partition, m: usize) -> u64 {
    symmetrizer_character(shape, m).values().sum()
}

fn multiply(a: &Character, b: &Character) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let w: Weight = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *out.entry(w).or_insert(0) += (ca * cb) as i64;
        }
    }
    out
}

/// `p ⊗ q` over `GL_m`: the product of the two symmetrizer characters, split into
/// irreducibles by repeatedly removing the character of the lexicographically largest
/// remaining weight. The removed characters are enumerated from tableaux, which keeps the
/// weight spaces of degree up to 8 out of the rank computations.
pub fn lr_by_symmetrizers(p: &Partition, q: &Partition, m: usize) -> Multiset {
    let mut out = Multiset::new();
    if p.rows() > m || q.rows() > m {
        return out;
    }
    let mut rest = multiply(&symmetrizer_character(p, m), &symmetrizer_character(q, m));
    let mut cache: BTreeMap<Weight, Character> = BTreeMap::new();
    loop {
        rest.retain(|_, c| *c != 0);
        let Some((top, &mult)) = rest.iter().next_back() else {
            break;
        };
        assert!(
            mult > 0,
            "negative multiplicity while decomposing {p} ⊗ {q}"
        );
        let top = top.clone();
        let nu = Partition::new(top.clone()).expect("leading weight is a partition");
        let ch = cache
            .entry(top)
            .or_insert_with(|| tableau_character(nu.parts(), m));
        for (w, c) in ch.iter() {
            *rest.entry(w.clone()).or_insert(0) -= mult * *c as i64;
        }
        out.insert(nu, mult as u64);
    }
    out
}

/// `dim ⋀^i K^n` by counting `i`-subsets of `0..n`.
pub fn exterior_dim(n: usize, i: usize) -> u64 {
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == i)
        .count() as u64
}

/// Number of semistandard tableaux of `shape` with entries in `0..m`.
pub fn ssyt_count(shape: &[u32], m: usize) -> u64 {
    let cells = boxes(shape);
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn fill(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, m: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..m {
            grid[r][c] = v;
            total += fill(cells, k + 1, grid, m);
        }
        total
    }
    fill(&cells, 0, &mut grid, m)
}

/// Character of `Σ^shape` over `GL_m` as the sum of the contents of semistandard tableaux.
pub fn tableau_character(shape: &[u32], m: usize) -> Character {
    let cells = boxes(shape);
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Character::new();
    let mut content = vec![0u32; m];
    fn fill(
        cells: &[(usize, usize)],
        k: usize,
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<u32>,
        out: &mut Character,
    ) {
        if k == cells.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..content.len() {
            grid[r][c] = v;
            content[v] += 1;
            fill(cells, k + 1, grid, content, out);
            content[v] -= 1;
        }
    }
    fill(&cells, 0, &mut grid, &mut content, &mut out);
    out
}
