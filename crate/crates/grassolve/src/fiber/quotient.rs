//! The fiber complex in Cauchy coordinates, with the subcomplex `B` and quotient `Q`.
//!
//! A coordinate of degree `k` is a Casimir eigenvector of layer `T^i` with component `γ`;
//! its global diagram is `α = γ + (i,i)`, the index of the Tate summand
//! `Σ^α S ⊠ Ψ_{α*}` it belongs to. `B` is spanned by the coordinates with `α₁ ≤ N − 3`.
//!
//! The differential `d' = K⁻¹ d K` is assembled weight space by weight space. It preserves
//! the torus weight `(p + c₀ + i, q + c₁ + i, c₂, …, c_{m−1})` where `p` and `q` count the
//! `e₁` and `e₂` generators and `c_j` the generators with `U`-index `j`; ranks are computed
//! separately on each weight ("complex block"), which keeps every elimination small.

use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{homology_from_ranks, rat, MatrixComplex, RatMatrix, SparseMatrix};
use crate::partitions::{schur_dim, Partition};

use super::cauchy::FineBasis;
use super::{generator, FiberModel, Mono};

/// Which of the three fiber complexes to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Which {
    /// The whole Tate complex.
    D,
    /// The subcomplex of summands with first row at most `N − 3`.
    B,
    /// The quotient `D / B`.
    Q,
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" | "d" => Ok(Self::D),
            "B" | "b" => Ok(Self::B),
            "Q" | "q" => Ok(Self::Q),
            other => Err(Error::Parse(format!("expected D, B or Q, got {other:?}"))),
        }
    }
}

/// One coordinate of the fiber complex in Cauchy coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coord {
    /// Power of `T`.
    pub layer: usize,
    /// Cauchy component inside the exterior factor.
    pub gamma: Partition,
    /// Global diagram `γ + (i,i)`.
    pub alpha: Partition,
    /// Weight preserved by the differential.
    pub key: Vec<i32>,
}

#[derive(Clone, Debug)]
struct FineRef {
    layer: usize,
    basis: Arc<FineBasis>,
    offset: usize,
}

#[derive(Clone, Debug, Default)]
struct DegreeData {
    fines: Vec<FineRef>,
    coords: Vec<Coord>,
    lookup: HashMap<(usize, usize, Vec<u8>), usize>,
}

/// The fiber complex over a diagonal point in Cauchy coordinates, degrees `0..=max_degree`.
#[derive(Clone, Debug)]
pub struct ComponentFiber {
    model: FiberModel,
    degrees: Vec<DegreeData>,
    diffs: Vec<SparseMatrix>,
}

fn complex_key(layer: usize, fb: &FineBasis) -> Vec<i32> {
    let r = fb.exterior_degree();
    let q = r - fb.p;
    let i = layer as i32;
    let mut key = vec![
        fb.p as i32 + i32::from(fb.content[0]) + i,
        q as i32 + i32::from(fb.content[1]) + i,
    ];
    key.extend(fb.content[2..].iter().map(|&c| i32::from(c)));
    key
}

impl ComponentFiber {
    /// Builds bases and differentials for degrees `0..=max_degree` and checks that the
    /// components have the dimensions predicted by the Cauchy formula.
    pub fn new(n: usize, max_degree: usize) -> Result<Self> {
        let model = FiberModel::new(n)?;
        let m = model.m();
        let by_r: Vec<Vec<Arc<FineBasis>>> = (0..=model.generators())
            .into_par_iter()
            .map(|r| super::cauchy::fine_bases(m, r).map(|v| v.into_iter().map(Arc::new).collect()))
            .collect::<Result<_>>()?;
        for (r, bases) in by_r.iter().enumerate() {
            let mut counts: BTreeMap<&Partition, usize> = BTreeMap::new();
            for g in bases.iter().flat_map(|b| b.gammas.iter()) {
                *counts.entry(g).or_insert(0) += 1;
            }
            for gamma in crate::partitions::cauchy_terms(r, 2, m) {
                let expected = (schur_dim(&gamma, 2) * schur_dim(&gamma.conjugate(), m)) as usize;
                let found = counts.get(&gamma).copied().unwrap_or(0);
                if found != expected {
                    return Err(Error::CauchyDimension {
                        degree: r,
                        alpha: gamma.to_string(),
                        found,
                        expected,
                    });
                }
            }
        }
        let degrees: Vec<DegreeData> = (0..=max_degree)
            .map(|k| {
                let mut data = DegreeData::default();
                for layer in 0..=k / 2 {
                    let r = k - 2 * layer;
                    let Some(bases) = by_r.get(r) else { continue };
                    for fb in bases {
                        let key = complex_key(layer, fb);
                        data.lookup
                            .insert((layer, fb.p, fb.content.clone()), data.fines.len());
                        data.fines.push(FineRef {
                            layer,
                            basis: Arc::clone(fb),
                            offset: data.coords.len(),
                        });
                        for gamma in &fb.gammas {
                            data.coords.push(Coord {
                                layer,
                                gamma: gamma.clone(),
                                alpha: gamma.add_columns(2, layer as u32),
                                key: key.clone(),
                            });
                        }
                    }
                }
                data
            })
            .collect();
        let mut fiber = Self {
            model,
            degrees,
            diffs: Vec::new(),
        };
        let diffs = (1..=max_degree)
            .into_par_iter()
            .map(|k| fiber.build_differential(k))
            .collect::<Result<Vec<_>>>()?;
        fiber.diffs = diffs;
        Ok(fiber)
    }

    /// The underlying monomial model.
    pub fn model(&self) -> &FiberModel {
        &self.model
    }

    /// Highest degree with a stored basis.
    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Coordinates of degree `k`.
    pub fn coords(&self, k: usize) -> &[Coord] {
        &self.degrees[k].coords
    }

    /// `d'_k` from degree `k` to degree `k − 1` in Cauchy coordinates, for `1 ≤ k ≤ max_degree`.
    pub fn differential(&self, k: usize) -> &SparseMatrix {
        &self.diffs[k - 1]
    }

    /// True when the coordinate belongs to the given complex (`B` and `Q` are complementary).
    pub fn belongs(&self, coord: &Coord, which: Which) -> bool {
        let in_b = coord.alpha.first() as usize <= self.model.n() - 3;
        match which {
            Which::D => true,
            Which::B => in_b,
            Which::Q => !in_b,
        }
    }

    /// Indices of the coordinates of degree `k` in the given complex.
    pub fn selection(&self, k: usize, which: Which) -> Vec<usize> {
        self.coords(k)
            .iter()
            .enumerate()
            .filter(|(_, c)| self.belongs(c, which))
            .map(|(i, _)| i)
            .collect()
    }

    fn build_differential(&self, k: usize) -> Result<SparseMatrix> {
        let src = &self.degrees[k];
        let dst = &self.degrees[k - 1];
        let mut out = SparseMatrix::zeros(dst.coords.len(), src.coords.len());
        let m = self.model.m();
        for fine in &src.fines {
            if fine.layer == 0 {
                continue;
            }
            let fb = &fine.basis;
            // monomial images grouped by target weight space
            let mut blocks: BTreeMap<usize, RatMatrix> = BTreeMap::new();
            for (col, &mask) in fb.masks.iter().enumerate() {
                let x = Mono {
                    t_pow: fine.layer,
                    mask,
                };
                for (y, c) in self.model.apply(x) {
                    let (p, content) = weight_of(y.mask, m);
                    let target = *dst.lookup.get(&(y.t_pow, p, content)).ok_or_else(|| {
                        Error::DimensionMismatch("differential left the weight spaces".into())
                    })?;
                    let tb = &dst.fines[target].basis;
                    let row = tb.masks.binary_search(&y.mask).map_err(|_| {
                        Error::DimensionMismatch("monomial missing from weight space".into())
                    })?;
                    let block = blocks
                        .entry(target)
                        .or_insert_with(|| RatMatrix::zeros(tb.len(), fb.len()));
                    block[(row, col)] += rat(c);
                }
            }
            for (target, block) in blocks {
                let tref = &dst.fines[target];
                let changed = tref.basis.inverse.mul(&block)?.mul(&fb.vectors)?;
                for i in 0..changed.rows() {
                    for j in 0..changed.cols() {
                        let v = &changed[(i, j)];
                        if !num_traits::Zero::is_zero(v) {
                            out.add_entry(tref.offset + i, fine.offset + j, v.clone());
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Fails when some coordinate of `B` in degree `k ≤ max_degree` maps outside `B`.
    pub fn check_b_closed(&self) -> Result<()> {
        for k in 1..=self.max_degree() {
            let d = self.differential(k);
            for col in self.selection(k, Which::B) {
                for row in d.column(col).keys() {
                    if !self.belongs(&self.coords(k - 1)[*row], Which::B) {
                        return Err(Error::NotClosed(k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rank of `d'_k` restricted to the given rows and columns, computed per weight.
    pub fn restricted_rank(&self, k: usize, rows: &[usize], cols: &[usize]) -> usize {
        if k == 0 || rows.is_empty() || cols.is_empty() {
            return 0;
        }
        let mut groups: HashMap<&[i32], (Vec<usize>, Vec<usize>)> = HashMap::new();
        for &r in rows {
            groups
                .entry(&self.coords(k - 1)[r].key)
                .or_default()
                .0
                .push(r);
        }
        for &c in cols {
            groups.entry(&self.coords(k)[c].key).or_default().1.push(c);
        }
        let d = self.differential(k);
        groups
            .into_par_iter()
            .filter(|(_, (r, c))| !r.is_empty() && !c.is_empty())
            .map(|(_, (r, c))| d.select_dense(&r, &c).rank())
            .sum()
    }

    /// Rank of `d'_k` on the given complex.
    pub fn rank(&self, k: usize, which: Which) -> usize {
        if k == 0 {
            return 0;
        }
        self.restricted_rank(k, &self.selection(k - 1, which), &self.selection(k, which))
    }

    /// Homology of the given complex in degrees `lo..=hi`; needs `hi < max_degree`.
    pub fn homology(&self, which: Which, degrees: RangeInclusive<usize>) -> Result<Vec<usize>> {
        let (lo, hi) = (*degrees.start(), *degrees.end());
        if hi >= self.max_degree() {
            return Err(Error::Unsupported(format!(
                "homology up to degree {hi} needs differentials up to degree {}",
                hi + 1
            )));
        }
        let dims: Vec<usize> = (lo..=hi).map(|k| self.selection(k, which).len()).collect();
        let incoming: Vec<usize> = (lo..=hi + 1).map(|k| self.rank(k, which)).collect();
        Ok((0..dims.len())
            .map(|j| dims[j] - incoming[j] - incoming[j + 1])
            .collect())
    }

    /// `H_k(Q)` computed with only the columns of `Q_{k+1}` whose global diagram is `alpha`.
    pub fn quotient_homology_from(&self, k: usize, alpha: &Partition) -> usize {
        let cols: Vec<usize> = self
            .selection(k + 1, Which::Q)
            .into_iter()
            .filter(|&c| self.coords(k + 1)[c].alpha == *alpha)
            .collect();
        let dim = self.selection(k, Which::Q).len();
        dim - self.rank(k, Which::Q)
            - self.restricted_rank(k + 1, &self.selection(k, Which::Q), &cols)
    }

    /// `H_k` of the given complex split by the weight preserved by the differential;
    /// only weights with nonzero homology are listed.
    pub fn homology_by_key(&self, k: usize, which: Which) -> Result<BTreeMap<Vec<i32>, usize>> {
        if k >= self.max_degree() {
            return Err(Error::Unsupported(format!(
                "homology in degree {k} needs differentials up to degree {}",
                k + 1
            )));
        }
        let mut keys: BTreeMap<Vec<i32>, [Vec<usize>; 3]> = BTreeMap::new();
        for (slot, degree) in [(0, k.checked_sub(1)), (1, Some(k)), (2, Some(k + 1))] {
            let Some(degree) = degree else { continue };
            for i in self.selection(degree, which) {
                keys.entry(self.coords(degree)[i].key.clone()).or_default()[slot].push(i);
            }
        }
        let mut out = BTreeMap::new();
        for (key, [below, here, above]) in keys {
            let h = here.len()
                - self.restricted_rank(k, &below, &here)
                - self.restricted_rank(k + 1, &here, &above);
            if h > 0 {
                out.insert(key, h);
            }
        }
        Ok(out)
    }

    /// Dense complex of the given kind in degrees `lo..=hi` (suitable for small `N`).
    pub fn to_complex(
        &self,
        which: Which,
        degrees: RangeInclusive<usize>,
    ) -> Result<MatrixComplex> {
        let (lo, hi) = (*degrees.start(), *degrees.end());
        if hi > self.max_degree() {
            return Err(Error::Unsupported(format!("degree {hi} is not built")));
        }
        let sel: Vec<Vec<usize>> = (lo..=hi).map(|k| self.selection(k, which)).collect();
        let diffs = (lo + 1..=hi)
            .map(|k| {
                self.differential(k)
                    .select_dense(&sel[k - 1 - lo], &sel[k - lo])
            })
            .collect();
        MatrixComplex::new(lo as i64, sel.iter().map(Vec::len).collect(), diffs)
    }
}

/// Number of `e₁` generators and the content vector of a monomial.
fn weight_of(mask: u32, m: usize) -> (usize, Vec<u8>) {
    let mut p = 0;
    let mut content = vec![0u8; m];
    for (j, c) in content.iter_mut().enumerate() {
        for a in 0..2 {
            if mask & (1 << generator(a, j)) != 0 {
                *c += 1;
                if a == 0 {
                    p += 1;
                }
            }
        }
    }
    (p, content)
}

/// The fiber complex of the given kind in degrees `lo..=hi`, as dense matrices.
///
/// `D` uses the monomial basis; `B` and `Q` use Cauchy coordinates.
pub fn fiber_complex(
    n: usize,
    which: Which,
    degrees: RangeInclusive<usize>,
) -> Result<MatrixComplex> {
    let (lo, hi) = (*degrees.start(), *degrees.end());
    if which == Which::D {
        let model = FiberModel::new(n)?;
        let dims = (lo..=hi).map(|k| model.dim(k)).collect();
        let diffs = (lo + 1..=hi)
            .map(|k| super::fiber_differential(&model, k))
            .collect();
        return MatrixComplex::new(lo as i64, dims, diffs);
    }
    let fiber = ComponentFiber::new(n, hi)?;
    fiber.check_b_closed()?;
    fiber.to_complex(which, degrees)
}

/// Homology of the fiber complex of the given kind in degrees `lo..=hi`.
///
/// The differential leaving degree `hi + 1` is included, so every entry is the homology of
/// the untruncated complex.
pub fn fiber_homology(
    n: usize,
    which: Which,
    degrees: RangeInclusive<usize>,
) -> Result<Vec<usize>> {
    let fiber = ComponentFiber::new(n, degrees.end() + 1)?;
    fiber.check_b_closed()?;
    fiber.homology(which, degrees)
}

/// A connected piece of the quotient complex in degrees `≤ 2N − 5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBlock {
    /// `k − i − (N − 2)`, shared by every summand `(k, α, i)` of the block.
    pub label: Option<i64>,
    /// Summands as `(degree, global diagram, power of T)`.
    pub terms: Vec<(usize, Partition, usize)>,
    /// Dimension of the block in degrees `0..=2N−5`.
    pub dims: Vec<usize>,
    /// Homology of the block in degrees `0..=2N−6`.
    pub homology: Vec<usize>,
}

/// Splits the quotient complex in degrees `≤ 2N − 5` into connected components.
///
/// Two summands `(k, α, i)` are joined when the differential has a nonzero entry between
/// their coordinates. Each component is returned with its homology in degrees `≤ 2N − 6`.
pub fn split_blocks(n: usize) -> Result<Vec<SplitBlock>> {
    let top = 2 * n - 5;
    let fiber = ComponentFiber::new(n, top)?;
    fiber.check_b_closed()?;
    split_blocks_of(&fiber)
}

/// [`split_blocks`] on an already built fiber with `max_degree ≥ 2N − 5`.
pub fn split_blocks_of(fiber: &ComponentFiber) -> Result<Vec<SplitBlock>> {
    let n = fiber.model().n();
    let top = 2 * n - 5;
    if fiber.max_degree() < top {
        return Err(Error::Unsupported(format!("splitting needs degree {top}")));
    }
    let mut term_ids: BTreeMap<(usize, Partition, usize), usize> = BTreeMap::new();
    let mut coord_term: Vec<Vec<Option<usize>>> = Vec::new();
    for k in 0..=top {
        let mut row = vec![None; fiber.coords(k).len()];
        for i in fiber.selection(k, Which::Q) {
            let c = &fiber.coords(k)[i];
            let next = term_ids.len();
            let id = *term_ids
                .entry((k, c.alpha.clone(), c.layer))
                .or_insert(next);
            row[i] = Some(id);
        }
        coord_term.push(row);
    }
    let mut parent: Vec<usize> = (0..term_ids.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for k in 1..=top {
        let d = fiber.differential(k);
        for (col, src) in coord_term[k].iter().enumerate() {
            let Some(src) = src else { continue };
            for row in d.column(col).keys() {
                if let Some(dst) = coord_term[k - 1][*row] {
                    let (a, b) = (find(&mut parent, *src), find(&mut parent, dst));
                    parent[a] = b;
                }
            }
        }
    }
    let roots: Vec<usize> = (0..term_ids.len())
        .map(|id| find(&mut parent, id))
        .collect();
    let mut members: BTreeMap<usize, Vec<(usize, Partition, usize)>> = BTreeMap::new();
    for (term, &id) in &term_ids {
        members.entry(roots[id]).or_default().push(term.clone());
    }
    let mut blocks = Vec::new();
    for (root, mut terms) in members {
        terms.sort();
        let sel: Vec<Vec<usize>> = (0..=top)
            .map(|k| {
                (0..fiber.coords(k).len())
                    .filter(|&i| coord_term[k][i].is_some_and(|id| roots[id] == root))
                    .collect()
            })
            .collect();
        let ranks: Vec<usize> = (1..=top)
            .map(|k| fiber.restricted_rank(k, &sel[k - 1], &sel[k]))
            .collect();
        let dims: Vec<usize> = sel.iter().map(Vec::len).collect();
        let homology = homology_from_ranks(&dims, &ranks);
        let labels: Vec<i64> = terms
            .iter()
            .map(|(k, _, i)| *k as i64 - *i as i64 - (n as i64 - 2))
            .collect();
        let label = labels.iter().all(|&l| l == labels[0]).then(|| labels[0]);
        blocks.push(SplitBlock {
            label,
            terms,
            dims,
            homology: homology[..top].to_vec(),
        });
    }
    blocks.sort_by_key(|b| (b.label, b.terms.first().cloned()));
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{quotient_q, subcomplex_b, tate_spgr};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dims_match_symbolic_ranks() {
        for n in [4, 6] {
            let fiber = ComponentFiber::new(n, 2 * n).unwrap();
            let d = tate_spgr(n, 2 * n).unwrap();
            let b = subcomplex_b(n).unwrap();
            let q = quotient_q(n, 2 * n).unwrap();
            for k in 0..=2 * n {
                assert_eq!(fiber.coords(k).len() as u64, d.rank(k));
                assert_eq!(fiber.selection(k, Which::B).len() as u64, b.rank(k));
                assert_eq!(fiber.selection(k, Which::Q).len() as u64, q.rank(k));
            }
        }
    }

    #[test]
    fn n4_subcomplex_and_quotient() {
        let fiber = ComponentFiber::new(4, 5).unwrap();
        fiber.check_b_closed().unwrap();
        assert_eq!(fiber.selection(2, Which::B).len(), 4);
        assert_eq!(fiber.selection(3, Which::Q).len(), 8);
        let h = fiber.homology(Which::Q, 0..=4).unwrap();
        assert_eq!(h[2], 0);
        assert_eq!(h[3], 1);
        assert_eq!(fiber.quotient_homology_from(3, &p(&[2, 2])), 1);
        let by_key = fiber.homology_by_key(3, Which::Q).unwrap();
        assert_eq!(by_key, [(vec![3, 3], 1)].into_iter().collect());
    }

    #[test]
    fn whole_complex_homology_is_exterior_conormal() {
        // restricted to the diagonal, the homology is ⋀^i of the rank-(2N−5) conormal space
        let fiber = ComponentFiber::new(4, 7).unwrap();
        assert_eq!(
            fiber.homology(Which::D, 0..=6).unwrap(),
            vec![1, 3, 3, 1, 0, 0, 0]
        );
    }

    #[test]
    fn dense_and_blockwise_homology_agree() {
        let dense = fiber_complex(4, Which::Q, 0..=5).unwrap().homology_dims();
        let blockwise = ComponentFiber::new(4, 5)
            .unwrap()
            .homology(Which::Q, 0..=4)
            .unwrap();
        assert_eq!(dense[..5], blockwise[..]);
    }

    #[test]
    fn split_n4() {
        let blocks = split_blocks(4).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert!(b.homology.iter().all(|&h| h == 0));
        }
    }
}
