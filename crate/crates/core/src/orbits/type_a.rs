//! Borel orbits on the square-zero matrices of rank r in sl_n.
//!
//! Orbits are indexed by pairs (sigma, w): sigma a minimal left-coset
//! representative for the parabolic of S_n preserving the subspace
//! spanned by the first r and the last r basis vectors blockwise, and w
//! a permutation of the r arcs. Two pairs give the same orbit exactly
//! when the products sigma w agree modulo the stabilizer of the base
//! point, so the catalog keys every orbit by the minimal element of
//! that coset.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{CoverType, GraphEdge, GraphNode, TypedWeakGraph};
use crate::mat::{Algebra, IntMat, OrbitDimOracle, RankTable};
use crate::weyl::{bruhat_leq, Perm, WeylGroup};

use super::{simple_relax, word_label};

/// The rank-r square-zero base point, sending the last r basis vectors
/// onto the first r.
pub fn base_point(n: usize, r: usize) -> IntMat {
    let mut x = IntMat::zeros(n);
    for j in 1..=r {
        x.set(j, n - r + j, 1);
    }
    x
}

/// Orbit index: a coset-minimal flag part and an arc permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitId {
    pub sigma: Perm,
    pub w: Perm,
}

/// Permutations of [n] commuting with the base point: an arc part acting
/// simultaneously on rows 1..r and columns n-r+1..n, and a free middle.
fn stabilizer(n: usize, r: usize) -> Vec<Perm> {
    let mid = n - 2 * r;
    let mut out = Vec::new();
    for arc in (1..=r).permutations(r) {
        for middle in (1..=mid).permutations(mid) {
            let mut images = vec![0usize; n];
            for j in 1..=r {
                images[j - 1] = arc[j - 1];
                images[n - r + j - 1] = n - r + arc[j - 1];
            }
            for k in 1..=mid {
                images[r + k - 1] = r + middle[k - 1];
            }
            out.push(Perm::from_images(images).expect("stabilizer images are a permutation"));
        }
    }
    out
}

pub struct Catalog {
    n: usize,
    r: usize,
    weyl: WeylGroup,
    sym_r: WeylGroup,
    stab: Vec<Perm>,
    ids: Vec<OrbitId>,
    keys: Vec<Perm>,
    key_index: HashMap<Perm, usize>,
    reps: Vec<IntMat>,
    tables: Vec<RankTable>,
    dims: Vec<usize>,
    oracle: OrbitDimOracle,
}

impl Catalog {
    pub fn new(n: usize, r: usize) -> Result<Catalog> {
        if n < 2 || 2 * r > n {
            return Err(Error::InvalidInput(format!(
                "need n >= 2 and 2r <= n, got n = {n}, r = {r}"
            )));
        }
        let weyl = WeylGroup::symmetric(n);
        let sym_r = WeylGroup::symmetric(r.max(1));
        let stab = stabilizer(n, r);
        let sub_gens: Vec<usize> =
            (1..n).filter(|&i| r == 0 || (i != r && i != n - r)).collect();
        let mut ids = Vec::new();
        let mut keys = Vec::new();
        let mut key_index = HashMap::new();
        let mut reps = Vec::new();
        let mut tables = Vec::new();
        let mut dims = Vec::new();
        for sigma in weyl.min_coset_reps(&sub_gens) {
            for w in sym_r.elements() {
                if r == 0 && !w.is_identity() {
                    continue;
                }
                let id = OrbitId { sigma: sigma.clone(), w: w.clone() };
                let product = product_of(&weyl, &id, n, r);
                let key = weyl.coset_minimum(&product, &stab);
                if key_index.contains_key(&key) {
                    return Err(Error::Validation(format!(
                        "pairs must index distinct orbits, repeated key {:?}",
                        key
                    )));
                }
                let rep = representative_of(&product, n, r);
                Algebra::SpecialLinear.member(&rep)?;
                if !(&rep * &rep).is_zero() || rep.rank() != r {
                    return Err(Error::Validation(
                        "representative must be square-zero of the indexed rank".into(),
                    ));
                }
                key_index.insert(key.clone(), ids.len());
                tables.push(RankTable::of(&rep));
                reps.push(rep);
                dims.push(weyl.length(&sigma) + sym_r.length(w) + r * (r + 1) / 2);
                keys.push(key);
                ids.push(id);
            }
        }
        let oracle = OrbitDimOracle::new(Algebra::SpecialLinear, n);
        Ok(Catalog { n, r, weyl, sym_r, stab, ids, keys, key_index, reps, tables, dims, oracle })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ids(&self) -> &[OrbitId] {
        &self.ids
    }

    pub fn representative(&self, idx: usize) -> &IntMat {
        &self.reps[idx]
    }

    /// Dimension from the length formula: l(sigma) + l(w) + r(r+1)/2.
    pub fn dim(&self, idx: usize) -> usize {
        self.dims[idx]
    }

    /// Dimension recomputed from the bracket-rank oracle.
    pub fn oracle_dim(&self, idx: usize) -> Result<usize> {
        self.oracle.borel_orbit_dim(&self.reps[idx])
    }

    pub fn label(&self, idx: usize) -> String {
        let id = &self.ids[idx];
        format!(
            "({}, {})",
            word_label("s", &self.weyl.word(&id.sigma)),
            word_label("s", &self.sym_r.word(&id.w))
        )
    }

    /// Arcs (tail, head) of the representative: it sends e_tail to
    /// e_head. Sorted by tail.
    pub fn link_pattern(&self, idx: usize) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self.reps[idx]
            .entries()
            .into_iter()
            .map(|(head, tail, _)| (tail, head))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// Containment of the first orbit in the closure of the second, by
    /// the Bruhat criterion: some element of the first coset lies below
    /// the product sigma w of the second pair.
    pub fn closure_leq_bruhat(&self, a: usize, b: usize) -> bool {
        let pa = product_of(&self.weyl, &self.ids[a], self.n, self.r);
        let pb = product_of(&self.weyl, &self.ids[b], self.n, self.r);
        self.stab.iter().any(|h| bruhat_leq(&pa.compose(h), &pb))
    }

    /// The same containment by the rank criterion: the second rank table
    /// dominates the first entrywise.
    pub fn closure_leq_rank(&self, a: usize, b: usize) -> bool {
        self.tables[b].dominates(&self.tables[a])
    }

    /// Weak-order covers from one orbit: (target, parabolic, type).
    /// Every cover is type U; each accepted edge is validated against
    /// the parabolic dimension oracle.
    pub fn weak_covers(&self, idx: usize) -> Result<Vec<(usize, usize, CoverType)>> {
        let key = &self.keys[idx];
        let mut out = Vec::new();
        for i in 1..self.n {
            let moved = self.weyl.generator(i).compose(key);
            let target_key = self.weyl.coset_minimum(&moved, &self.stab);
            if self.weyl.length(&target_key) != self.weyl.length(key) + 1 {
                continue;
            }
            let target = self.key_index[&target_key];
            let relax = simple_relax(self.weyl.family(), self.n, i);
            let raised = self.oracle.parabolic_orbit_dim(&self.reps[idx], &relax)?;
            if raised != self.dims[idx] + 1 || self.dims[target] != self.dims[idx] + 1 {
                return Err(Error::RuleGap(format!(
                    "cover {} -P{}-> {} disagrees with the oracle ({} vs {})",
                    self.label(idx),
                    i,
                    self.label(target),
                    raised,
                    self.dims[idx] + 1
                )));
            }
            out.push((target, i, CoverType::U));
        }
        Ok(out)
    }

    /// The typed weak-order graph on all orbits of this catalog.
    pub fn weak_graph(&self) -> Result<TypedWeakGraph> {
        let nodes = (0..self.len())
            .map(|idx| GraphNode { id: self.label(idx), dim: self.dims[idx] })
            .collect();
        let mut edges = Vec::new();
        for idx in 0..self.len() {
            for (target, parabolic, kind) in self.weak_covers(idx)? {
                edges.push(GraphEdge {
                    src: self.label(idx),
                    dst: self.label(target),
                    parabolic,
                    kind,
                });
            }
        }
        TypedWeakGraph::new(nodes, edges, 1)
    }
}

/// The product sigma w as one permutation of [n], with w acting on the
/// first r letters.
fn product_of(weyl: &WeylGroup, id: &OrbitId, n: usize, r: usize) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    for j in 1..=r {
        images[j - 1] = id.w.apply(j);
    }
    let w_embedded = Perm::from_images(images).expect("embedding keeps a permutation");
    debug_assert!(weyl.contains(&id.sigma));
    id.sigma.compose(&w_embedded)
}

/// Representative of the orbit of a product tau: sum of E_{tau(j),
/// tau(n-r+j)} over the arcs.
fn representative_of(tau: &Perm, n: usize, r: usize) -> IntMat {
    let mut x = IntMat::zeros(n);
    for j in 1..=r {
        x.set(tau.apply(j), tau.apply(n - r + j), 1);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_points_and_rank_zero() {
        assert_eq!(base_point(4, 2), {
            let mut x = IntMat::zeros(4);
            x.set(1, 3, 1);
            x.set(2, 4, 1);
            x
        });
        let c = Catalog::new(3, 0).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.dim(0), 0);
        assert!(c.representative(0).is_zero());
        assert!(c.weak_covers(0).unwrap().is_empty());
    }

    #[test]
    fn smallest_case_has_two_orbits() {
        let c = Catalog::new(2, 1).unwrap();
        assert_eq!(c.len(), 2);
        let labels: Vec<String> = (0..2).map(|i| c.label(i)).collect();
        assert_eq!(labels, vec!["(1, 1)", "(s1, 1)"]);
        assert_eq!((c.dim(0), c.dim(1)), (1, 2));
    }

    #[test]
    fn example_representative_and_link_pattern() {
        let c = Catalog::new(4, 2).unwrap();
        let idx = (0..c.len()).find(|&i| c.label(i) == "(s2, 1)").unwrap();
        let mut want = IntMat::zeros(4);
        want.set(1, 2, 1);
        want.set(3, 4, 1);
        assert_eq!(c.representative(idx), &want);
        assert_eq!(c.link_pattern(idx), vec![(2, 1), (4, 3)]);
    }

    #[test]
    fn pair_count_matches_coset_and_arc_counts() {
        // (4, 2): six coset representatives times two arc permutations.
        let c = Catalog::new(4, 2).unwrap();
        assert_eq!(c.len(), 12);
        // (5, 2): S_5 over S_2 x S_1 x S_2 gives 30 cosets.
        let c = Catalog::new(5, 2).unwrap();
        assert_eq!(c.len(), 60);
    }

    #[test]
    fn dimension_formula_matches_oracle_on_small_cases() {
        for (n, r) in [(2, 1), (3, 1), (4, 2)] {
            let c = Catalog::new(n, r).unwrap();
            for idx in 0..c.len() {
                assert_eq!(c.dim(idx), c.oracle_dim(idx).unwrap(), "{}", c.label(idx));
            }
        }
    }

    #[test]
    fn closure_criteria_agree_on_small_cases() {
        for (n, r) in [(3, 1), (4, 2), (4, 1)] {
            let c = Catalog::new(n, r).unwrap();
            for a in 0..c.len() {
                for b in 0..c.len() {
                    assert_eq!(
                        c.closure_leq_bruhat(a, b),
                        c.closure_leq_rank(a, b),
                        "(n, r) = ({n}, {r}), {} vs {}",
                        c.label(a),
                        c.label(b)
                    );
                }
            }
        }
    }

    #[test]
    fn closure_order_refines_dimension_and_weak_covers() {
        let c = Catalog::new(4, 2).unwrap();
        for a in 0..c.len() {
            for b in 0..c.len() {
                if a != b && c.closure_leq_bruhat(a, b) {
                    assert!(c.dim(a) < c.dim(b) || a == b);
                }
            }
        }
        for idx in 0..c.len() {
            for (target, _, kind) in c.weak_covers(idx).unwrap() {
                assert_eq!(kind, CoverType::U);
                assert!(c.closure_leq_bruhat(idx, target));
            }
        }
    }

    #[test]
    fn weak_graph_of_4_2_is_valid_and_has_unique_extremes() {
        let c = Catalog::new(4, 2).unwrap();
        let g = c.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 12);
        assert!(g.edges().iter().all(|e| e.kind == CoverType::U));
        assert!(g.certificates().is_empty());
        let min = g.nodes().iter().filter(|n| n.dim == 3).count();
        let max = g.nodes().iter().filter(|n| n.dim == 8).count();
        assert_eq!((min, max), (1, 1));
    }
}
