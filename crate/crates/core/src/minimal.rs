//! Borel orbits in the closure of the minimal nilpotent orbit.
//!
//! For every simple type the orbits away from the origin are indexed by
//! the long roots, the closure order is the reversed root order, and a
//! minimal parabolic raises an orbit by the corresponding simple
//! reflection. Everything here is root combinatorics; no matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{CoverType, GraphEdge, GraphNode, TypedWeakGraph};
use crate::roots::{Root, RootSystem, Series};

pub struct MinOrbitPoset {
    system: RootSystem,
    nodes: Vec<Root>,
    index: HashMap<Root, usize>,
    dims: Vec<usize>,
}

impl MinOrbitPoset {
    pub fn new(series: Series, rank: usize) -> Result<MinOrbitPoset> {
        let system = RootSystem::new(series, rank)?;
        let nodes = system.long_roots();
        let index: HashMap<Root, usize> =
            nodes.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        // Orbit dimensions grade the raising moves, starting at 1 for
        // the highest-root orbit.
        let top = system.highest_root();
        let mut dims = vec![0usize; nodes.len()];
        let mut seen = vec![false; nodes.len()];
        let mut frontier = vec![index[&top]];
        seen[index[&top]] = true;
        dims[index[&top]] = 1;
        while let Some(at) = frontier.pop() {
            for j in 1..=rank {
                if system.pairing_with_simple(&nodes[at], j) <= 0 {
                    continue;
                }
                let next = index[&system.reflect_simple(&nodes[at], j)];
                if seen[next] {
                    if dims[next] != dims[at] + 1 {
                        return Err(Error::Validation(format!(
                            "raising moves do not grade the {} poset",
                            system.type_name()
                        )));
                    }
                } else {
                    seen[next] = true;
                    dims[next] = dims[at] + 1;
                    frontier.push(next);
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Validation(format!(
                "raising moves do not reach every long root of {}",
                system.type_name()
            )));
        }
        Ok(MinOrbitPoset { system, nodes, index, dims })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn roots(&self) -> &[Root] {
        &self.nodes
    }

    pub fn dim(&self, idx: usize) -> usize {
        self.dims[idx]
    }

    pub fn label(&self, idx: usize) -> String {
        format!("X{}", self.nodes[idx])
    }

    /// Containment of the first orbit in the closure of the second:
    /// the reversed root order.
    pub fn closure_leq(&self, a: usize, b: usize) -> bool {
        self.nodes[b].leq(&self.nodes[a])
    }

    /// Simple reflections raising this orbit, with their targets.
    pub fn raising_moves(&self, idx: usize) -> Vec<(usize, usize)> {
        (1..=self.system.rank())
            .filter(|&j| self.system.pairing_with_simple(&self.nodes[idx], j) > 0)
            .map(|j| (self.index[&self.system.reflect_simple(&self.nodes[idx], j)], j))
            .collect()
    }

    /// The smallest simple root index raising this orbit; None at the
    /// dense orbit.
    pub fn raising_parabolic(&self, idx: usize) -> Option<usize> {
        self.raising_moves(idx).into_iter().map(|(_, j)| j).min()
    }

    /// The typed weak-order graph; every edge is type U.
    pub fn weak_graph(&self) -> Result<TypedWeakGraph> {
        let nodes = (0..self.len())
            .map(|idx| GraphNode { id: self.label(idx), dim: self.dims[idx] })
            .collect();
        let mut edges = Vec::new();
        for idx in 0..self.len() {
            for (target, j) in self.raising_moves(idx) {
                edges.push(GraphEdge {
                    src: self.label(idx),
                    dst: self.label(target),
                    parabolic: j,
                    kind: CoverType::U,
                });
            }
        }
        TypedWeakGraph::new(nodes, edges, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_chain() {
        let p = MinOrbitPoset::new(Series::A, 1).unwrap();
        assert_eq!(p.len(), 2);
        let g = p.weak_graph().unwrap();
        let labels: Vec<String> = g.nodes().iter().map(|n| n.id.clone()).collect();
        assert_eq!(labels, vec!["X(1)", "X-(1)"]);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].parabolic, 1);
    }

    #[test]
    fn g2_is_the_labeled_chain() {
        let p = MinOrbitPoset::new(Series::G, 2).unwrap();
        let g = p.weak_graph().unwrap();
        let ids: Vec<String> = g.nodes().iter().map(|n| n.id.clone()).collect();
        assert_eq!(
            ids,
            vec!["X(32)", "X(31)", "X(01)", "X-(01)", "X-(31)", "X-(32)"]
        );
        let walk: Vec<(String, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.src.clone(), e.parabolic))
            .collect();
        assert_eq!(
            walk,
            vec![
                ("X(32)".to_string(), 2),
                ("X(31)".to_string(), 1),
                ("X(01)".to_string(), 2),
                ("X-(01)".to_string(), 1),
                ("X-(31)".to_string(), 2),
            ]
        );
    }

    #[test]
    fn type_a_counts_all_roots() {
        for n in 2..=5 {
            let p = MinOrbitPoset::new(Series::A, n - 1).unwrap();
            assert_eq!(p.len(), n * (n - 1));
            assert_eq!(p.len(), RootSystem::new(Series::A, n - 1).unwrap().all_roots().len());
        }
    }

    #[test]
    fn f4_has_24_long_roots_and_reversed_closure_order() {
        let p = MinOrbitPoset::new(Series::F, 4).unwrap();
        assert_eq!(p.len(), 24);
        for a in 0..p.len() {
            for b in 0..p.len() {
                assert_eq!(p.closure_leq(a, b), p.roots()[b].leq(&p.roots()[a]));
            }
        }
        let g = p.weak_graph().unwrap();
        assert!(g.edges().iter().all(|e| e.kind == CoverType::U));
        assert_eq!(g.nodes().first().map(|n| n.id.clone()), Some("X(2432)".to_string()));
        assert_eq!(g.nodes().last().map(|n| n.id.clone()), Some("X-(2432)".to_string()));
    }

    #[test]
    fn raising_targets_stay_below_in_the_root_order() {
        for (series, rank) in [(Series::B, 3), (Series::C, 3), (Series::D, 4), (Series::G, 2)] {
            let p = MinOrbitPoset::new(series, rank).unwrap();
            for idx in 0..p.len() {
                for (target, _) in p.raising_moves(idx) {
                    assert!(p.roots()[target].leq(&p.roots()[idx]));
                    assert!(p.closure_leq(idx, target));
                }
                if p.raising_parabolic(idx).is_none() {
                    assert_eq!(p.roots()[idx], p.system().highest_root().neg());
                }
            }
        }
    }

    /// Independent cross-check on F4: realize the Weyl group by its
    /// action on simple-root coordinates, send w to w(highest root),
    /// and verify that Bruhat order on the shortest preimages reverses
    /// the root order on long roots.
    #[test]
    fn f4_bruhat_order_antitone_against_root_order() {
        let system = RootSystem::new(Series::F, 4).unwrap();
        let rank = 4;
        let refl: Vec<Vec<Vec<i64>>> = (1..=rank)
            .map(|j| {
                (0..rank)
                    .map(|i| {
                        let mut col = vec![0i64; rank];
                        col[i] += 1;
                        col[j - 1] -= system.cartan(i + 1, j);
                        col
                    })
                    .collect()
            })
            .collect();
        let apply = |m: &Vec<Vec<i64>>, v: &[i64]| -> Vec<i64> {
            (0..rank)
                .map(|row| (0..rank).map(|col| m[col][row] * v[col]).sum())
                .collect()
        };
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..rank).map(|col| apply(a, &b[col])).collect()
        };
        let identity: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|k| i64::from(k == i)).collect())
            .collect();
        // Breadth-first enumeration records each element's length.
        let mut order: Vec<Vec<Vec<i64>>> = vec![identity.clone()];
        let mut length: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        length.insert(identity, 0);
        let mut at = 0;
        while at < order.len() {
            let w = order[at].clone();
            let l = length[&w];
            at += 1;
            for g in &refl {
                let next = mul(g, &w);
                if !length.contains_key(&next) {
                    length.insert(next.clone(), l + 1);
                    order.push(next);
                }
            }
        }
        assert_eq!(order.len(), 1152);
        // Shortest w with w(beta) = rho, for each long root rho.
        let beta = system.highest_root();
        let mut shortest: HashMap<Vec<i64>, Vec<Vec<i64>>> = HashMap::new();
        for w in &order {
            let image = apply_matrix(w, &beta.0, rank);
            shortest.entry(image).or_insert_with(|| w.clone());
        }
        fn apply_matrix(m: &[Vec<i64>], v: &[i64], rank: usize) -> Vec<i64> {
            (0..rank)
                .map(|row| (0..rank).map(|col| m[col][row] * v[col]).sum())
                .collect()
        }
        // Bruhat comparison by the lifting recursion.
        struct Bruhat<'a> {
            refl: &'a [Vec<Vec<i64>>],
            length: &'a HashMap<Vec<Vec<i64>>, usize>,
            memo: HashMap<(Vec<Vec<i64>>, Vec<Vec<i64>>), bool>,
        }
        impl Bruhat<'_> {
            fn leq(&mut self, u: &Vec<Vec<i64>>, v: &Vec<Vec<i64>>) -> bool {
                if self.length[u] == 0 {
                    return true;
                }
                if self.length[u] > self.length[v] {
                    return false;
                }
                if let Some(&hit) = self.memo.get(&(u.clone(), v.clone())) {
                    return hit;
                }
                let rank = u.len();
                let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
                    (0..rank)
                        .map(|col| {
                            (0..rank)
                                .map(|row| (0..rank).map(|k| a[k][row] * b[col][k]).sum())
                                .collect()
                        })
                        .collect()
                };
                let g = self
                    .refl
                    .iter()
                    .find(|g| self.length[&mul(g, v)] < self.length[v])
                    .expect("v has positive length");
                let sv = mul(g, v);
                let su = mul(g, u);
                let hit = if self.length[&su] < self.length[u] {
                    self.leq(&su, &sv)
                } else {
                    self.leq(u, &sv)
                };
                self.memo.insert((u.clone(), v.clone()), hit);
                hit
            }
        }
        let mut bruhat = Bruhat { refl: &refl, length: &length, memo: HashMap::new() };
        let poset = MinOrbitPoset::new(Series::F, 4).unwrap();
        for a in poset.roots() {
            for b in poset.roots() {
                let wa = &shortest[&a.0];
                let wb = &shortest[&b.0];
                assert_eq!(bruhat.leq(wa, wb), b.leq(a), "{a} vs {b}");
            }
        }
    }
}
