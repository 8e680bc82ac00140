//! Typed weak-order graphs over Borel orbit sets, the diamond search for
//! non-normality certificates, and the classifier for the parabolic
//! induction cases behind each orbit family.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a minimal parabolic raises an orbit: the generic multiplicity of
/// the sweep P x^B Y -> PY.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverType {
    U,
    N,
    T,
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverType::U => write!(f, "U"),
            CoverType::N => write!(f, "N"),
            CoverType::T => write!(f, "T"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub id: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub src: String,
    pub dst: String,
    /// 1-based simple root index of the raising minimal parabolic.
    pub parabolic: usize,
    #[serde(rename = "type")]
    pub kind: CoverType,
}

/// A witness that closure(Y3) is non-normal along closure(Y2):
/// P1 raises Y to Y1 (type U or T), P2 raises Y to Y2 (type N), and P2
/// raises Y1 to the diamond top (type U or T). An empty `chain` means Y3
/// is the diamond top itself; otherwise `chain` lists the parabolics of
/// further U/T raisings carrying the obstruction from the diamond top up
/// to Y3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(rename = "Y")]
    pub y: String,
    #[serde(rename = "Y1")]
    pub y1: String,
    #[serde(rename = "Y2")]
    pub y2: String,
    #[serde(rename = "Y3")]
    pub y3: String,
    #[serde(rename = "P1")]
    pub p1: usize,
    #[serde(rename = "P2")]
    pub p2: usize,
    pub chain: Vec<usize>,
}

/// A dimension-graded directed graph of orbit covers with typed edges.
/// Parallel edges (same endpoints, different parabolic) are allowed.
#[derive(Clone, Debug, Serialize)]
pub struct TypedWeakGraph {
    nodes: Vec<GraphNode>,
    edges: Vec<GraphEdge>,
    #[serde(skip)]
    fragment: bool,
}

impl TypedWeakGraph {
    /// Build and validate a full orbit graph: ids unique, edges connect
    /// existing nodes and raise dimension by exactly one, and every
    /// weakly connected component (`expect_components` of them) has a
    /// unique sink, the dense orbit.
    pub fn new(
        nodes: Vec<GraphNode>,
        edges: Vec<GraphEdge>,
        expect_components: usize,
    ) -> Result<Self> {
        let g = Self::assemble(nodes, edges, false)?;
        let comps = g.components();
        if comps.len() != expect_components {
            return Err(Error::Validation(format!(
                "expected {expect_components} weakly connected components, found {}",
                comps.len()
            )));
        }
        for comp in &comps {
            for role in ["sink", "source"] {
                let boundary: Vec<&str> = comp
                    .iter()
                    .filter(|&&v| {
                        g.edges.iter().all(|e| {
                            let end = if role == "sink" { &e.src } else { &e.dst };
                            end != &g.nodes[v].id
                        })
                    })
                    .map(|&v| g.nodes[v].id.as_str())
                    .collect();
                if boundary.len() != 1 {
                    return Err(Error::Validation(format!(
                        "component must have a unique {role}, found {boundary:?}"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Build a validated graph fragment: grading and endpoint checks
    /// only, no sink or component requirements.
    pub fn fragment(nodes: Vec<GraphNode>, edges: Vec<GraphEdge>) -> Result<Self> {
        Self::assemble(nodes, edges, true)
    }

    fn assemble(mut nodes: Vec<GraphNode>, mut edges: Vec<GraphEdge>, fragment: bool) -> Result<Self> {
        nodes.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let mut dims: HashMap<&str, usize> = HashMap::new();
        for n in &nodes {
            if dims.insert(n.id.as_str(), n.dim).is_some() {
                return Err(Error::Validation(format!("duplicate node id {:?}", n.id)));
            }
        }
        for e in &edges {
            let (Some(&ds), Some(&dd)) = (dims.get(e.src.as_str()), dims.get(e.dst.as_str()))
            else {
                return Err(Error::Validation(format!(
                    "edge {} -> {} references a missing node",
                    e.src, e.dst
                )));
            };
            if dd != ds + 1 {
                return Err(Error::Validation(format!(
                    "edge {} (dim {ds}) -> {} (dim {dd}) must raise dimension by one",
                    e.src, e.dst
                )));
            }
        }
        let key = |e: &GraphEdge| (dims[e.src.as_str()], e.src.clone(), e.parabolic, e.dst.clone());
        edges.sort_by_key(key);
        let mut seen = HashSet::new();
        for e in &edges {
            if !seen.insert((e.src.clone(), e.dst.clone(), e.parabolic)) {
                return Err(Error::Validation(format!(
                    "duplicate edge {} -> {} via P{}",
                    e.src, e.dst, e.parabolic
                )));
            }
        }
        Ok(TypedWeakGraph { nodes, edges, fragment })
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn is_fragment(&self) -> bool {
        self.fragment
    }

    fn node_pos(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            let a = find(&mut parent, self.node_pos(&e.src).unwrap());
            let b = find(&mut parent, self.node_pos(&e.dst).unwrap());
            parent[a.max(b)] = a.min(b);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        groups.into_values().collect()
    }

    fn out_edges<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a GraphEdge> + 'a {
        self.edges.iter().filter(move |e| e.src == id)
    }

    /// All non-normality certificates derivable from the graph: every
    /// diamond (N edge plus a commuting U/T square over the same source)
    /// certifies its top, and each certified orbit passes the obstruction
    /// to everything above it along U/T edges. One certificate per
    /// certified orbit, ordered by (dim, id). An empty result is not a
    /// normality proof.
    pub fn certificates(&self) -> Vec<Certificate> {
        let mut by_y3: BTreeMap<String, Certificate> = BTreeMap::new();
        let mut queue: VecDeque<String> = VecDeque::new();
        for en in self.edges.iter().filter(|e| e.kind == CoverType::N) {
            for e1 in self
                .out_edges(&en.src)
                .filter(|e| e.kind != CoverType::N && e.parabolic != en.parabolic)
            {
                for e3 in self
                    .out_edges(&e1.dst)
                    .filter(|e| e.kind != CoverType::N && e.parabolic == en.parabolic)
                {
                    if !by_y3.contains_key(&e3.dst) {
                        by_y3.insert(
                            e3.dst.clone(),
                            Certificate {
                                y: en.src.clone(),
                                y1: e1.dst.clone(),
                                y2: en.dst.clone(),
                                y3: e3.dst.clone(),
                                p1: e1.parabolic,
                                p2: en.parabolic,
                                chain: Vec::new(),
                            },
                        );
                        queue.push_back(e3.dst.clone());
                    }
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            let base = by_y3[&v].clone();
            for e in self.out_edges(&v).filter(|e| e.kind != CoverType::N) {
                if !by_y3.contains_key(&e.dst) {
                    let mut c = base.clone();
                    c.chain.push(e.parabolic);
                    c.y3 = e.dst.clone();
                    by_y3.insert(e.dst.clone(), c);
                    queue.push_back(e.dst.clone());
                }
            }
        }
        let mut out: Vec<Certificate> = by_y3.into_values().collect();
        out.sort_by_key(|c| (self.nodes[self.node_pos(&c.y3).unwrap()].dim, c.y3.clone()));
        out
    }

    /// Parabolic labels of one shortest raising path from the source of
    /// the node's component to the node. Deterministic: breadth-first in
    /// stored edge order.
    pub fn raising_sequence(&self, id: &str) -> Result<Vec<usize>> {
        let target = self
            .node_pos(id)
            .ok_or_else(|| Error::InvalidInput(format!("unknown node id {id:?}")))?;
        let comp = self
            .components()
            .into_iter()
            .find(|c| c.contains(&target))
            .expect("every node lies in a component");
        let sources: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| self.edges.iter().all(|e| e.dst != self.nodes[v].id))
            .collect();
        let [start] = sources[..] else {
            return Err(Error::Validation(format!(
                "raising sequences need a unique source, found {}",
                sources.len()
            )));
        };
        let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut queue = VecDeque::from([start]);
        let mut seen = HashSet::from([start]);
        while let Some(v) = queue.pop_front() {
            if v == target {
                break;
            }
            for e in self.out_edges(&self.nodes[v].id) {
                let w = self.node_pos(&e.dst).unwrap();
                if seen.insert(w) {
                    prev.insert(w, (v, e.parabolic));
                    queue.push_back(w);
                }
            }
        }
        if target != start && !prev.contains_key(&target) {
            return Err(Error::Validation(format!("node {id:?} is unreachable from the source")));
        }
        let mut path = Vec::new();
        let mut cur = target;
        while cur != start {
            let (p, label) = prev[&cur];
            path.push(label);
            cur = p;
        }
        path.reverse();
        Ok(path)
    }

    /// Graphviz rendering: solid edges for type U, doubled for N, dashed
    /// for T, each labeled by its parabolic.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        s.push_str("  node [shape=box, fontsize=11];\n");
        for n in &self.nodes {
            s.push_str(&format!("  \"{}\" [label=\"{}\\ndim {}\"];\n", n.id, n.id, n.dim));
        }
        for e in &self.edges {
            let style = match e.kind {
                CoverType::U => String::new(),
                CoverType::N => ", color=\"black:invis:black\"".into(),
                CoverType::T => ", style=dashed".into(),
            };
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"P{}\"{}];\n",
                e.src, e.dst, e.parabolic, style
            ));
        }
        s.push_str("}\n");
        s
    }

    /// JSON value with nodes, edges, and the certificate list.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes,
            "edges": self.edges,
            "certificates": self.certificates(),
        })
    }
}

/// One row of the classification of spherical nilpotent orbit closures
/// arising by parabolic induction from the dense orbit of an abelian
/// radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionCase {
    pub case: usize,
    pub group: String,
    pub parabolic: String,
    pub levi: String,
    pub radical: String,
    pub centralizer: String,
}

fn induction_row(case: usize, row: [&str; 5]) -> InductionCase {
    InductionCase {
        case,
        group: row[0].into(),
        parabolic: row[1].into(),
        levi: row[2].into(),
        radical: row[3].into(),
        centralizer: row[4].into(),
    }
}

/// The six families (G, P) with abelian radical whose dense P-orbit
/// closure the orbit modules cover, in symbolic form.
pub fn induction_table() -> Vec<InductionCase> {
    vec![
        induction_row(1, ["A_{2n-1}", "P_n", "A_{n-1} x A_{n-1}", "M_n(k)", "A_{n-1}"]),
        induction_row(2, ["B_n", "P_1", "B_{n-1}", "k^{2n-1}", "B_{n-2}"]),
        induction_row(3, ["C_n", "P_n", "A_{n-1}", "M^s_n(k)", "B_{(n-1)/2} or D_{n/2}"]),
        induction_row(4, ["D_n", "P_1", "D_{n-1}", "k^{2n-2}", "D_{n-2}"]),
        induction_row(5, ["D_{2n}", "P_{2n}", "A_{2n-1}", "M^a_{2n}(k)", "C_n"]),
        induction_row(6, ["E_7", "P_7", "E_6", "k^{27}", "F_4"]),
    ]
}

/// Match a concrete (series, rank, maximal parabolic) against the table.
/// Pairs outside it, notably even-rank A with the middle node, odd-rank
/// D with an end fork node, and (E_6, P_6), are rejected.
pub fn classify_induction(
    series: crate::roots::Series,
    rank: usize,
    parabolic: usize,
) -> Result<InductionCase> {
    use crate::roots::Series;
    if rank == 0 || parabolic == 0 || parabolic > rank {
        return Err(Error::InvalidInput(format!(
            "parabolic index {parabolic} out of range for rank {rank}"
        )));
    }
    let table = induction_table();
    let fail = |msg: String| Err(Error::NoInductionCase(msg));
    match series {
        Series::A => {
            if rank % 2 == 1 && parabolic == (rank + 1) / 2 {
                Ok(table[0].clone())
            } else {
                fail(format!(
                    "(A_{rank}, P_{parabolic}): the radical is abelian with a dense orbit of \
                     square-zero matrices of full rank only for the middle node at odd rank"
                ))
            }
        }
        Series::B if parabolic == 1 && rank >= 2 => Ok(table[1].clone()),
        Series::C if parabolic == rank && rank >= 2 => Ok(table[2].clone()),
        Series::D if parabolic == 1 && rank >= 3 => Ok(table[3].clone()),
        Series::D if parabolic == rank && rank >= 3 => {
            if rank % 2 == 0 {
                Ok(table[4].clone())
            } else {
                fail(format!(
                    "(D_{rank}, P_{rank}): the dense orbit of the fork-node radical has full \
                     rank only at even rank"
                ))
            }
        }
        Series::E if rank == 7 && parabolic == 7 => Ok(table[5].clone()),
        Series::E if rank == 6 && parabolic == 6 => {
            fail("(E_6, P_6): the dense radical orbit closure is not a nilpotent orbit closure \
                  in the ambient algebra"
                .into())
        }
        _ => fail(format!("({series:?}_{rank}, P_{parabolic}) is not an abelian-radical case")),
    }
}

/// Height-two excerpt of the weak order on the subregular-sheet orbits
/// in F_4, six orbits around the unique N edge, with relative
/// dimensions. Node labels name representative sums of root vectors by
/// simple-root coordinates. Returns the graph and its one certificate.
pub fn f4_height2_excerpt() -> (TypedWeakGraph, Certificate) {
    let node = |id: &str, dim: usize| GraphNode { id: id.into(), dim };
    let edge = |src: &str, dst: &str, parabolic: usize, kind: CoverType| GraphEdge {
        src: src.into(),
        dst: dst.into(),
        parabolic,
        kind,
    };
    let nodes = vec![
        node("X(2321)", 4),
        node("X(2421)+X(2221)", 5),
        node("X(1321)", 5),
        node("X(2431)+X(2211)", 6),
        node("X(1221)", 6),
        node("X(2432)+X(2210)", 7),
    ];
    let edges = vec![
        edge("X(2321)", "X(2421)+X(2221)", 2, CoverType::N),
        edge("X(2321)", "X(1321)", 1, CoverType::U),
        edge("X(2421)+X(2221)", "X(2431)+X(2211)", 3, CoverType::U),
        edge("X(1321)", "X(1221)", 2, CoverType::U),
        edge("X(2431)+X(2211)", "X(2432)+X(2210)", 4, CoverType::U),
    ];
    let graph = TypedWeakGraph::fragment(nodes, edges).expect("fixture is well formed");
    let cert = Certificate {
        y: "X(2321)".into(),
        y1: "X(1321)".into(),
        y2: "X(2421)+X(2221)".into(),
        y3: "X(1221)".into(),
        p1: 1,
        p2: 2,
        chain: Vec::new(),
    };
    (graph, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Series;

    fn chain_graph(kinds: &[CoverType]) -> TypedWeakGraph {
        let nodes = (0..=kinds.len())
            .map(|d| GraphNode { id: format!("v{d}"), dim: d })
            .collect();
        let edges = kinds
            .iter()
            .enumerate()
            .map(|(d, &kind)| GraphEdge {
                src: format!("v{d}"),
                dst: format!("v{}", d + 1),
                parabolic: 1,
                kind,
            })
            .collect();
        TypedWeakGraph::new(nodes, edges, 1).unwrap()
    }

    #[test]
    fn validation_rejects_broken_grading_and_duplicates() {
        let nodes = vec![
            GraphNode { id: "a".into(), dim: 0 },
            GraphNode { id: "b".into(), dim: 2 },
        ];
        let edges = vec![GraphEdge {
            src: "a".into(),
            dst: "b".into(),
            parabolic: 1,
            kind: CoverType::U,
        }];
        assert!(TypedWeakGraph::new(nodes, edges, 1).is_err());

        let dup = vec![
            GraphNode { id: "a".into(), dim: 0 },
            GraphNode { id: "a".into(), dim: 1 },
        ];
        assert!(TypedWeakGraph::new(dup, vec![], 1).is_err());
    }

    #[test]
    fn validation_requires_unique_sink_per_component() {
        let nodes = vec![
            GraphNode { id: "a".into(), dim: 0 },
            GraphNode { id: "b".into(), dim: 1 },
            GraphNode { id: "c".into(), dim: 1 },
        ];
        let edges = vec![
            GraphEdge { src: "a".into(), dst: "b".into(), parabolic: 1, kind: CoverType::U },
            GraphEdge { src: "a".into(), dst: "c".into(), parabolic: 2, kind: CoverType::U },
        ];
        assert!(TypedWeakGraph::new(nodes.clone(), edges.clone(), 1).is_err());
        assert!(TypedWeakGraph::fragment(nodes, edges).is_ok());
    }

    #[test]
    fn parallel_edges_with_distinct_parabolics_are_allowed() {
        let nodes = vec![
            GraphNode { id: "a".into(), dim: 0 },
            GraphNode { id: "b".into(), dim: 1 },
        ];
        let edges = vec![
            GraphEdge { src: "a".into(), dst: "b".into(), parabolic: 2, kind: CoverType::U },
            GraphEdge { src: "a".into(), dst: "b".into(), parabolic: 3, kind: CoverType::U },
        ];
        let g = TypedWeakGraph::new(nodes.clone(), edges.clone(), 1).unwrap();
        assert_eq!(g.edges().len(), 2);
        let mut dup = edges.clone();
        dup.push(edges[0].clone());
        assert!(TypedWeakGraph::new(nodes, dup, 1).is_err());
    }

    #[test]
    fn all_u_graphs_have_no_certificates() {
        let g = chain_graph(&[CoverType::U, CoverType::U, CoverType::U]);
        assert!(g.certificates().is_empty());
    }

    #[test]
    fn diamond_certificate_and_propagation() {
        // y -P2,N-> y2 and y -P1-> y1 -P2-> y3 -P1-> top.
        let nodes = vec![
            GraphNode { id: "y".into(), dim: 0 },
            GraphNode { id: "y1".into(), dim: 1 },
            GraphNode { id: "y2".into(), dim: 1 },
            GraphNode { id: "y3".into(), dim: 2 },
            GraphNode { id: "top".into(), dim: 3 },
        ];
        let e = |src: &str, dst: &str, parabolic: usize, kind: CoverType| GraphEdge {
            src: src.into(),
            dst: dst.into(),
            parabolic,
            kind,
        };
        let edges = vec![
            e("y", "y2", 2, CoverType::N),
            e("y", "y1", 1, CoverType::U),
            e("y1", "y3", 2, CoverType::T),
            e("y3", "top", 1, CoverType::U),
        ];
        let g = TypedWeakGraph::fragment(nodes, edges).unwrap();
        let certs = g.certificates();
        assert_eq!(certs.len(), 2);
        assert_eq!(certs[0].y3, "y3");
        assert_eq!((certs[0].p1, certs[0].p2), (1, 2));
        assert!(certs[0].chain.is_empty());
        assert_eq!(certs[1].y3, "top");
        assert_eq!(certs[1].chain, vec![1]);
        assert_eq!(certs[1].y2, "y2");
    }

    #[test]
    fn diamond_requires_distinct_parabolics_and_ut_sides() {
        // Same shape but the square uses the N parabolic itself: no cert.
        let nodes = vec![
            GraphNode { id: "y".into(), dim: 0 },
            GraphNode { id: "y1".into(), dim: 1 },
            GraphNode { id: "y2".into(), dim: 1 },
            GraphNode { id: "y3".into(), dim: 2 },
        ];
        let e = |src: &str, dst: &str, parabolic: usize, kind: CoverType| GraphEdge {
            src: src.into(),
            dst: dst.into(),
            parabolic,
            kind,
        };
        let edges = vec![
            e("y", "y2", 2, CoverType::N),
            e("y", "y1", 2, CoverType::U),
            e("y1", "y3", 2, CoverType::U),
        ];
        let g = TypedWeakGraph::fragment(nodes, edges).unwrap();
        assert!(g.certificates().is_empty());

        // N-typed second side does not close a diamond either.
        let nodes = vec![
            GraphNode { id: "y".into(), dim: 0 },
            GraphNode { id: "y1".into(), dim: 1 },
            GraphNode { id: "y2".into(), dim: 1 },
            GraphNode { id: "y3".into(), dim: 2 },
        ];
        let edges = vec![
            e("y", "y2", 2, CoverType::N),
            e("y", "y1", 1, CoverType::U),
            e("y1", "y3", 2, CoverType::N),
        ];
        let g = TypedWeakGraph::fragment(nodes, edges).unwrap();
        assert!(g.certificates().is_empty());
    }

    #[test]
    fn raising_sequences_are_shortest_paths() {
        let g = chain_graph(&[CoverType::U, CoverType::N]);
        assert_eq!(g.raising_sequence("v0").unwrap(), Vec::<usize>::new());
        assert_eq!(g.raising_sequence("v2").unwrap(), vec![1, 1]);
        assert!(g.raising_sequence("missing").is_err());
    }

    #[test]
    fn dot_output_marks_edge_types() {
        let g = chain_graph(&[CoverType::U, CoverType::N, CoverType::T]);
        let dot = g.to_dot("weak_order");
        assert!(dot.contains("digraph weak_order"));
        assert!(dot.contains("\"v1\" -> \"v2\" [label=\"P1\", color=\"black:invis:black\"]"));
        assert!(dot.contains("\"v2\" -> \"v3\" [label=\"P1\", style=dashed]"));
        assert!(dot.contains("\"v0\" -> \"v1\" [label=\"P1\"]"));
    }

    #[test]
    fn excerpt_fixture_certifies_its_diamond_top() {
        let (g, expected) = f4_height2_excerpt();
        assert_eq!(g.nodes().len(), 6);
        assert_eq!(g.edges().len(), 5);
        let certs = g.certificates();
        assert_eq!(certs, vec![expected]);
        assert_eq!(g.raising_sequence("X(1221)").unwrap(), vec![1, 2]);
    }

    #[test]
    fn induction_classifier_accepts_the_six_rows() {
        assert_eq!(classify_induction(Series::A, 5, 3).unwrap().case, 1);
        assert_eq!(classify_induction(Series::B, 4, 1).unwrap().case, 2);
        assert_eq!(classify_induction(Series::C, 3, 3).unwrap().case, 3);
        assert_eq!(classify_induction(Series::D, 5, 1).unwrap().case, 4);
        assert_eq!(classify_induction(Series::D, 4, 4).unwrap().case, 5);
        assert_eq!(classify_induction(Series::E, 7, 7).unwrap().case, 6);
    }

    #[test]
    fn induction_classifier_rejects_excluded_pairs() {
        for (series, rank, parabolic) in [
            (Series::A, 4, 2),
            (Series::A, 5, 2),
            (Series::D, 5, 5),
            (Series::E, 6, 6),
            (Series::B, 4, 2),
            (Series::C, 3, 1),
            (Series::F, 4, 1),
            (Series::G, 2, 1),
        ] {
            assert!(
                matches!(
                    classify_induction(series, rank, parabolic),
                    Err(Error::NoInductionCase(_))
                ),
                "({series:?}, {rank}, {parabolic}) must be rejected"
            );
        }
        assert!(matches!(
            classify_induction(Series::A, 5, 9),
            Err(Error::InvalidInput(_))
        ));
    }
}
