//! Borel orbits on the square-zero matrices of rank r in sp_2n.
//!
//! Orbits are indexed by pairs (sigma, tau): sigma a minimal coset
//! representative for the parabolic of the hyperoctahedral group
//! obtained by dropping its r-th generator, and tau a permutation of
//! [r] whose product with the order-reversing involution is again an
//! involution. Unlike the special linear case no two pairs collide, and
//! there is no closed dimension formula here: dimensions come from the
//! centralizer-rank oracle and are cached per orbit.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::graph::{CoverType, GraphEdge, GraphNode, TypedWeakGraph};
use crate::mat::{Algebra, IntMat, OrbitDimOracle, RankTable};
use crate::weyl::{CosetMove, Perm, WeylGroup};

use super::{simple_relax, word_label};

/// Orbit index: a coset-minimal signed-permutation part and an arc part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitId {
    pub sigma: Perm,
    pub tau: Perm,
}

/// Permutations tau of [r] such that tau composed with i -> r+1-i is an
/// involution.
fn arc_parts(sym_r: &WeylGroup, r: usize) -> Vec<Perm> {
    let rev = Perm::from_images((1..=r.max(1)).rev().collect()).expect("reversal");
    sym_r
        .elements()
        .iter()
        .filter(|tau| {
            let j_tau = rev.compose(tau);
            j_tau.compose(&j_tau).is_identity()
        })
        .cloned()
        .collect()
}

pub struct Catalog {
    n: usize,
    r: usize,
    weyl: WeylGroup,
    sym_r: WeylGroup,
    sub_gens: Vec<usize>,
    ids: Vec<OrbitId>,
    index: HashMap<OrbitId, usize>,
    reps: Vec<IntMat>,
    tables: Vec<RankTable>,
    dims: Mutex<Vec<Option<usize>>>,
    oracle: OrbitDimOracle,
}

impl Catalog {
    pub fn new(n: usize, r: usize) -> Result<Catalog> {
        if n < 1 || r > n {
            return Err(Error::InvalidInput(format!(
                "need 1 <= n and r <= n, got n = {n}, r = {r}"
            )));
        }
        let weyl = WeylGroup::type_c(n);
        let sym_r = WeylGroup::symmetric(r.max(1));
        let sub_gens: Vec<usize> = (1..=n).filter(|&i| r == 0 || i != r).collect();
        let taus = arc_parts(&sym_r, r);
        let mut ids = Vec::new();
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        let mut tables = Vec::new();
        for sigma in weyl.min_coset_reps(&sub_gens) {
            for tau in &taus {
                let id = OrbitId { sigma: sigma.clone(), tau: tau.clone() };
                let rep = representative_of(&id, n, r);
                Algebra::Symplectic.member(&rep)?;
                if !(&rep * &rep).is_zero() || rep.rank() != r {
                    return Err(Error::Validation(
                        "representative must be square-zero of the indexed rank".into(),
                    ));
                }
                let cells: Vec<(usize, usize)> =
                    rep.entries().into_iter().map(|(i, j, _)| (i, j)).collect();
                index.insert(id.clone(), ids.len());
                tables.push(RankTable::of_placements(2 * n, &cells));
                reps.push(rep);
                ids.push(id);
            }
        }
        let dims = Mutex::new(vec![None; ids.len()]);
        let oracle = OrbitDimOracle::new(Algebra::Symplectic, 2 * n);
        Ok(Catalog { n, r, weyl, sym_r, sub_gens, ids, index, reps, tables, dims, oracle })
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

    /// Orbit dimension from the centralizer-rank oracle, cached.
    pub fn dim(&self, idx: usize) -> Result<usize> {
        if let Some(d) = self.dims.lock().unwrap()[idx] {
            return Ok(d);
        }
        let d = self.oracle.borel_orbit_dim(&self.reps[idx])?;
        self.dims.lock().unwrap()[idx] = Some(d);
        Ok(d)
    }

    pub fn label(&self, idx: usize) -> String {
        let id = &self.ids[idx];
        format!(
            "({}, {})",
            word_label("c", &self.weyl.word(&id.sigma)),
            word_label("s", &self.sym_r.word(&id.tau))
        )
    }

    /// Containment of the first orbit in the closure of the second, by
    /// entrywise rank-table dominance.
    pub fn closure_leq(&self, a: usize, b: usize) -> bool {
        self.tables[b].dominates(&self.tables[a])
    }

    fn strictly_dominates(&self, a: usize, b: usize) -> bool {
        self.tables[a].dominates(&self.tables[b]) && !self.tables[b].dominates(&self.tables[a])
    }

    /// Weak-order covers from one orbit: (target, parabolic, type).
    /// A candidate move is kept exactly when its target strictly
    /// dominates the source; each kept edge is then validated against
    /// the parabolic dimension oracle.
    pub fn weak_covers(&self, idx: usize) -> Result<Vec<(usize, usize, CoverType)>> {
        let id = &self.ids[idx];
        let mut out = Vec::new();
        for i in 1..=self.n {
            let candidate = match self.weyl.coset_move(&self.sub_gens, &id.sigma, i) {
                CosetMove::Up(next) => {
                    (OrbitId { sigma: next, tau: id.tau.clone() }, CoverType::U)
                }
                CosetMove::Down(_) => continue,
                CosetMove::Fixed(j) if j < self.r => {
                    let s_j = self.sym_r.generator(j);
                    let s_mirror = self.sym_r.generator(self.r - j);
                    let twisted = s_j.compose(&id.tau).compose(s_mirror);
                    if twisted != id.tau {
                        (OrbitId { sigma: id.sigma.clone(), tau: twisted }, CoverType::U)
                    } else {
                        let flipped = s_j.compose(&id.tau);
                        (OrbitId { sigma: id.sigma.clone(), tau: flipped }, CoverType::N)
                    }
                }
                CosetMove::Fixed(_) => continue,
            };
            let (target_id, kind) = candidate;
            let target = *self.index.get(&target_id).ok_or_else(|| {
                Error::Validation(format!(
                    "move from {} lands outside the catalog",
                    self.label(idx)
                ))
            })?;
            if !self.strictly_dominates(target, idx) {
                continue;
            }
            let want = self.dim(idx)? + 1;
            let relax = simple_relax(self.weyl.family(), 2 * self.n, i);
            let raised = self.oracle.parabolic_orbit_dim(&self.reps[idx], &relax)?;
            if raised != want || self.dim(target)? != want {
                return Err(Error::Validation(format!(
                    "cover {} -P{}-> {} disagrees with the oracle",
                    self.label(idx),
                    i,
                    self.label(target)
                )));
            }
            out.push((target, i, kind));
        }
        Ok(out)
    }

    /// Orbit dimension under the i-th minimal parabolic, straight from
    /// the oracle. The weak order has an edge at (orbit, i) exactly when
    /// this exceeds the orbit dimension.
    pub fn parabolic_dim(&self, idx: usize, i: usize) -> Result<usize> {
        let relax = simple_relax(self.weyl.family(), 2 * self.n, i);
        self.oracle.parabolic_orbit_dim(&self.reps[idx], &relax)
    }

    /// The typed weak-order graph on all orbits of this catalog.
    pub fn weak_graph(&self) -> Result<TypedWeakGraph> {
        let mut nodes = Vec::with_capacity(self.len());
        for idx in 0..self.len() {
            nodes.push(GraphNode { id: self.label(idx), dim: self.dim(idx)? });
        }
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

/// Representative of the orbit indexed by (sigma, tau): a signed
/// placement with one entry per arc, positive exactly in the first n
/// rows.
fn representative_of(id: &OrbitId, n: usize, r: usize) -> IntMat {
    let mut x = IntMat::zeros(2 * n);
    for i in 1..=r {
        let row = id.sigma.apply(id.tau.apply(i));
        let col = id.sigma.apply(2 * n - r + i);
        x.set(row, col, if row <= n { 1 } else { -1 });
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog(n: usize, r: usize) -> Catalog {
        Catalog::new(n, r).unwrap()
    }

    #[test]
    fn arc_part_counts_are_involution_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|r| arc_parts(&WeylGroup::symmetric(r), r).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn catalog_sizes_match_the_counting_formula() {
        // 2^r binom(n, r) coset representatives times the arc count.
        assert_eq!(catalog(2, 1).len(), 4);
        assert_eq!(catalog(2, 2).len(), 8);
        assert_eq!(catalog(3, 2).len(), 24);
        let total: usize = (1..=4).map(|r| catalog(4, r).len()).sum();
        assert_eq!(total, 344);
    }

    #[test]
    fn representatives_pass_the_validators_and_match_generic_tables() {
        let c = catalog(3, 2);
        for idx in 0..c.len() {
            let rep = c.representative(idx);
            assert!(Algebra::Symplectic.member(rep).is_ok());
            assert!((rep * rep).is_zero());
            assert_eq!(rep.rank(), 2);
            assert!(c.tables[idx].dominates(&RankTable::of(rep)));
            assert!(RankTable::of(rep).dominates(&c.tables[idx]));
        }
    }

    #[test]
    fn base_orbit_representative_is_the_signed_double_arc() {
        let c = catalog(2, 2);
        let idx = (0..c.len()).find(|&i| c.label(i) == "(1, 1)").unwrap();
        let mut want = IntMat::zeros(4);
        want.set(1, 3, 1);
        want.set(2, 4, 1);
        assert_eq!(c.representative(idx), &want);
    }

    #[test]
    fn full_graph_of_the_rank_two_case() {
        let c = catalog(2, 2);
        let g = c.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 8);
        let edges: Vec<(String, String, usize, CoverType)> = g
            .edges()
            .iter()
            .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic, e.kind))
            .collect();
        let want = vec![
            ("(1, 1)", "(1, s1)", 1, CoverType::N),
            ("(1, 1)", "(c2, 1)", 2, CoverType::U),
            ("(1, s1)", "(c2, s1)", 2, CoverType::U),
            ("(c2, 1)", "(c1c2, 1)", 1, CoverType::U),
            ("(c1c2, 1)", "(c2c1c2, 1)", 2, CoverType::U),
            ("(c2, s1)", "(c1c2, s1)", 1, CoverType::U),
            ("(c1c2, s1)", "(c2c1c2, s1)", 2, CoverType::U),
            ("(c2c1c2, 1)", "(c2c1c2, s1)", 1, CoverType::N),
        ];
        let want: Vec<(String, String, usize, CoverType)> = want
            .into_iter()
            .map(|(a, b, p, k)| (a.to_string(), b.to_string(), p, k))
            .collect();
        assert_eq!(edges, want);
    }

    #[test]
    fn rank_two_certificates_cover_the_upper_plain_arc_orbits() {
        let c = catalog(2, 2);
        let g = c.weak_graph().unwrap();
        let certified: Vec<(String, Vec<usize>)> = g
            .certificates()
            .into_iter()
            .map(|cert| (cert.y3, cert.chain))
            .collect();
        assert_eq!(
            certified,
            vec![
                ("(c1c2, 1)".to_string(), vec![]),
                ("(c2c1c2, 1)".to_string(), vec![2]),
            ]
        );
    }

    #[test]
    fn rule_edges_match_the_oracle_on_every_orbit_and_parabolic() {
        for (n, r) in [(2, 1), (2, 2), (3, 1), (3, 3)] {
            let c = catalog(n, r);
            for idx in 0..c.len() {
                let covered: Vec<usize> = c
                    .weak_covers(idx)
                    .unwrap()
                    .into_iter()
                    .map(|(_, i, _)| i)
                    .collect();
                for i in 1..=n {
                    let raised = c.parabolic_dim(idx, i).unwrap();
                    let expect = if covered.contains(&i) {
                        c.dim(idx).unwrap() + 1
                    } else {
                        c.dim(idx).unwrap()
                    };
                    assert_eq!(raised, expect, "(n, r) = ({n}, {r}), orbit {}", c.label(idx));
                }
            }
        }
    }

    #[test]
    fn closure_order_is_graded_by_dimension_on_covers() {
        let c = catalog(3, 2);
        for idx in 0..c.len() {
            for (target, _, _) in c.weak_covers(idx).unwrap() {
                assert!(c.closure_leq(idx, target));
                assert_eq!(c.dim(target).unwrap(), c.dim(idx).unwrap() + 1);
            }
        }
    }
}
