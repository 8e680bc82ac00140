//! Self-check fixtures over the worked examples the crate reproduces.
//!
//! Every fixture recomputes a result through the library and compares it
//! against an expectation frozen here, independent of the tables inside the
//! producing modules.  A regression anywhere in the pipeline therefore fails
//! by fixture name.  The suite backs the CLI `verify` subcommand and the
//! acceptance tests.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::graph::{self, CoverType};
use crate::mat::IntMat;
use crate::minimal::MinOrbitPoset;
use crate::orbits::{type_a, type_bd, type_c};
use crate::roots::{Root, RootSystem, Series};
use crate::toric::{self, GorensteinWitness, RatCone};
use crate::Error;

/// Failure carries a human-readable explanation of the first mismatch.
pub type FixtureResult = Result<(), String>;

#[derive(Debug)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub result: FixtureResult,
}

const FIXTURES: &[(&str, fn() -> FixtureResult)] = &[
    ("type-c-2-2", type_c_2_2),
    ("type-a-4-2", type_a_4_2),
    ("dim-formula", dim_formula),
    ("g2-chain", g2_chain),
    ("f4-long-roots", f4_long_roots),
    ("sl2-triple", sl2_triple),
    ("three-nilpotent-graphs", three_nilpotent_graphs),
    ("sample-variety", sample_variety),
    ("toric-cone", toric_cone),
    ("e7-orthogonal-triples", e7_orthogonal_triples),
    ("induction-table", induction_table_rows),
    ("f4-height2-excerpt", f4_height2_excerpt_matches),
];

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|&(name, _)| name).collect()
}

/// Runs every fixture whose name contains `filter` (all when `None`), in
/// registry order.
pub fn run_matching(filter: Option<&str>) -> Vec<FixtureOutcome> {
    FIXTURES
        .iter()
        .filter(|(name, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|&(name, run)| FixtureOutcome { name, result: run() })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> FixtureResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn step<T>(result: crate::Result<T>, what: &str) -> Result<T, String> {
    result.map_err(|e| format!("{what}: {e}"))
}

fn kind_letter(kind: CoverType) -> char {
    match kind {
        CoverType::U => 'U',
        CoverType::N => 'N',
        CoverType::T => 'T',
    }
}

/// The eight sp4 orbits over the square-zero base point of full rank: two
/// type-N covers, both under the first minimal parabolic, and exactly two
/// non-normally-covered closures.
fn type_c_2_2() -> FixtureResult {
    let cat = step(type_c::Catalog::new(2, 2), "building the sp4 catalog")?;
    ensure(cat.len() == 8, || format!("expected 8 orbits, found {}", cat.len()))?;
    let g = step(cat.weak_graph(), "assembling the weak graph")?;
    let n_edges: Vec<(String, String, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.kind == CoverType::N)
        .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic))
        .collect();
    let expected_n = vec![
        ("(1, 1)".to_string(), "(1, s1)".to_string(), 1),
        ("(c2c1c2, 1)".to_string(), "(c2c1c2, s1)".to_string(), 1),
    ];
    ensure(n_edges == expected_n, || {
        format!("type-N edges {n_edges:?}, expected {expected_n:?}")
    })?;
    let certified: Vec<String> = g.certificates().into_iter().map(|c| c.y3).collect();
    let expected_y3 = vec!["(c1c2, 1)".to_string(), "(c2c1c2, 1)".to_string()];
    ensure(certified == expected_y3, || {
        format!("certified orbits {certified:?}, expected {expected_y3:?}")
    })
}

/// Twelve gl4 orbits over the rank-two base point; the two closure criteria
/// agree on all 144 pairs, dimensions fill 3..=8 with unique ends, and the
/// weak order has no non-U cover.
fn type_a_4_2() -> FixtureResult {
    let cat = step(type_a::Catalog::new(4, 2), "building the gl4 catalog")?;
    ensure(cat.len() == 12, || format!("expected 12 orbits, found {}", cat.len()))?;
    for a in 0..cat.len() {
        for b in 0..cat.len() {
            let bruhat = cat.closure_leq_bruhat(a, b);
            let by_rank = cat.closure_leq_rank(a, b);
            ensure(bruhat == by_rank, || {
                format!(
                    "closure criteria disagree on ({}, {}): subword {bruhat}, ranks {by_rank}",
                    cat.label(a),
                    cat.label(b)
                )
            })?;
        }
    }
    let dims: Vec<usize> = (0..cat.len()).map(|i| cat.dim(i)).collect();
    for d in 3..=8 {
        let count = dims.iter().filter(|&&v| v == d).count();
        let unique_end = d == 3 || d == 8;
        ensure(count >= 1 && (!unique_end || count == 1), || {
            format!("dimension {d} occurs {count} times")
        })?;
    }
    ensure(dims.iter().all(|d| (3..=8).contains(d)), || {
        format!("dimensions {dims:?} leave 3..=8")
    })?;
    let g = step(cat.weak_graph(), "assembling the weak graph")?;
    ensure(g.edges().iter().all(|e| e.kind == CoverType::U), || {
        "expected every weak cover to be type U".into()
    })?;
    ensure(g.certificates().is_empty(), || {
        "expected no non-normality certificates".into()
    })
}

/// Orbit dimension via lengths, l(sigma) + l(w) + r(r+1)/2, equals the
/// Borel-centralizer codimension for every gl orbit with n at most 5.
fn dim_formula() -> FixtureResult {
    for n in 2..=5usize {
        for r in 0..=n / 2 {
            let cat = step(
                type_a::Catalog::new(n, r),
                &format!("building the gl{n} rank-{r} catalog"),
            )?;
            for idx in 0..cat.len() {
                let by_formula = cat.dim(idx);
                let by_oracle = step(cat.oracle_dim(idx), "oracle dimension")?;
                ensure(by_formula == by_oracle, || {
                    format!(
                        "(n, r) = ({n}, {r}), orbit {}: formula {by_formula}, oracle {by_oracle}",
                        cat.label(idx)
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// The g2 long-root poset is a six-node chain raised by the parabolics
/// 2, 1, 2, 1, 2 in that order.
fn g2_chain() -> FixtureResult {
    let poset = step(MinOrbitPoset::new(Series::G, 2), "building the g2 poset")?;
    let g = step(poset.weak_graph(), "assembling the weak graph")?;
    let ids: Vec<&str> = g.nodes().iter().map(|n| n.id.as_str()).collect();
    let expected_ids = ["X(32)", "X(31)", "X(01)", "X-(01)", "X-(31)", "X-(32)"];
    ensure(ids == expected_ids, || {
        format!("chain nodes {ids:?}, expected {expected_ids:?}")
    })?;
    let walk: Vec<(String, usize)> =
        g.edges().iter().map(|e| (e.src.clone(), e.parabolic)).collect();
    let expected_walk: Vec<(String, usize)> = [2, 1, 2, 1, 2]
        .iter()
        .enumerate()
        .map(|(at, &p)| (expected_ids[at].to_string(), p))
        .collect();
    ensure(walk == expected_walk, || {
        format!("raising walk {walk:?}, expected {expected_walk:?}")
    })?;
    ensure(g.edges().iter().all(|e| e.kind == CoverType::U), || {
        "expected every cover in the chain to be type U".into()
    })
}

/// f4 has 24 long-root orbits; the positive ones match the frozen list and
/// the closure order is the root order reversed.
fn f4_long_roots() -> FixtureResult {
    let poset = step(MinOrbitPoset::new(Series::F, 4), "building the f4 poset")?;
    ensure(poset.len() == 24, || format!("expected 24 orbits, found {}", poset.len()))?;
    let expected: BTreeSet<Vec<i64>> = [
        [2, 4, 3, 2],
        [2, 4, 3, 1],
        [2, 4, 2, 1],
        [2, 2, 2, 1],
        [2, 2, 1, 1],
        [0, 2, 2, 1],
        [2, 2, 1, 0],
        [0, 2, 1, 1],
        [0, 2, 1, 0],
        [0, 0, 1, 1],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    .into_iter()
    .map(|v| v.to_vec())
    .collect();
    let positive: BTreeSet<Vec<i64>> = poset
        .roots()
        .iter()
        .filter(|root| root.is_positive())
        .map(|root| root.0.clone())
        .collect();
    ensure(positive == expected, || {
        format!("positive long roots {positive:?}, expected {expected:?}")
    })?;
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            let closed = poset.closure_leq(a, b);
            let reversed = poset.roots()[b].leq(&poset.roots()[a]);
            ensure(closed == reversed, || {
                format!(
                    "closure of {} vs {}: closure order {closed}, reversed root order {reversed}",
                    poset.label(a),
                    poset.label(b)
                )
            })?;
        }
    }
    Ok(())
}

fn scaled(m: &IntMat, c: i64) -> IntMat {
    let mut out = IntMat::zeros(m.size());
    for (i, j, v) in m.entries() {
        out.set(i, j, c * v);
    }
    out
}

/// The triple attached to the height-one matrix satisfies the sl2 bracket
/// relations exactly, its weight-two space has dimension n - 2, and the
/// rank-one orbits are exactly the top-level ones in odd dimension.
fn sl2_triple() -> FixtureResult {
    for n in [5usize, 6, 7] {
        let (x, y, h) = step(type_bd::standard_triple(n), "building the triple")?;
        ensure(x.bracket(&y) == h, || format!("n = {n}: [x, y] is not h"))?;
        ensure(h.bracket(&x) == scaled(&x, 2), || {
            format!("n = {n}: [h, x] is not 2x")
        })?;
        ensure(h.bracket(&y) == scaled(&y, -2), || {
            format!("n = {n}: [h, y] is not -2y")
        })?;
        let dim2 = step(type_bd::weight_two_dim(n), "weight-two dimension")?;
        ensure(dim2 == n - 2, || {
            format!("n = {n}: weight-two space has dimension {dim2}, expected {}", n - 2)
        })?;
        let cat = step(type_bd::ThreeNilpotent::new(n), "building the catalog")?;
        for idx in 0..cat.len() {
            let expected = if n % 2 == 1 && cat.ids()[idx].level == cat.level_max() {
                1
            } else {
                2
            };
            let got = cat.orbit_rank(idx);
            ensure(got == expected, || {
                format!("n = {n}, orbit {}: rank {got}, expected {expected}", cat.label(idx))
            })?;
        }
    }
    Ok(())
}

/// Shapes of the three-nilpotent weak graphs in ambient dimensions 5, 6, 7:
/// node and edge counts, the type-N covers, and the certified orbits.
fn three_nilpotent_graphs() -> FixtureResult {
    let graph_of = |n: usize| -> Result<graph::TypedWeakGraph, String> {
        let cat = step(type_bd::ThreeNilpotent::new(n), "building the catalog")?;
        step(cat.weak_graph(), "assembling the weak graph")
    };

    let g5 = graph_of(5)?;
    ensure(g5.nodes().len() == 8 && g5.edges().len() == 8, || {
        format!("n = 5: {} nodes, {} edges", g5.nodes().len(), g5.edges().len())
    })?;
    let n5: Vec<(String, String, usize)> = g5
        .edges()
        .iter()
        .filter(|e| e.kind == CoverType::N)
        .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic))
        .collect();
    let expected5 = vec![
        ("(1, f2)".to_string(), "(1, f1)".to_string(), 2),
        ("(b1b2b1, f2)".to_string(), "(b1b2b1, f1)".to_string(), 2),
    ];
    ensure(n5 == expected5, || format!("n = 5 type-N edges {n5:?}"))?;
    let cert5: Vec<(String, Vec<usize>)> =
        g5.certificates().into_iter().map(|c| (c.y3, c.chain)).collect();
    let expected_cert5 = vec![
        ("(b2b1, f2)".to_string(), vec![]),
        ("(b1b2b1, f2)".to_string(), vec![1]),
    ];
    ensure(cert5 == expected_cert5, || format!("n = 5 certificates {cert5:?}"))?;

    let g6 = graph_of(6)?;
    ensure(g6.nodes().len() == 12, || format!("n = 6: {} nodes", g6.nodes().len()))?;
    ensure(g6.edges().iter().all(|e| e.kind == CoverType::U), || {
        "n = 6: expected every cover to be type U".into()
    })?;
    let parallel: Vec<usize> = g6
        .edges()
        .iter()
        .filter(|e| e.src == "(1, f2)" && e.dst == "(1, f1)")
        .map(|e| e.parabolic)
        .collect();
    ensure(parallel == vec![2, 3], || {
        format!("n = 6: parallel covers raised by {parallel:?}, expected [2, 3]")
    })?;
    ensure(g6.certificates().is_empty(), || "n = 6: expected no certificates".into())?;

    let g7 = graph_of(7)?;
    ensure(g7.nodes().len() == 18 && g7.edges().len() == 23, || {
        format!("n = 7: {} nodes, {} edges", g7.nodes().len(), g7.edges().len())
    })?;
    let n7: Vec<(String, usize)> = g7
        .edges()
        .iter()
        .filter(|e| e.kind == CoverType::N)
        .map(|e| (e.src.clone(), e.parabolic))
        .collect();
    let expected7 = vec![
        ("(1, f3)".to_string(), 3),
        ("(b1, f3)".to_string(), 3),
        ("(b2b3b2b1, f3)".to_string(), 3),
        ("(b1b2b3b2b1, f3)".to_string(), 3),
    ];
    ensure(n7 == expected7, || format!("n = 7 type-N edges {n7:?}"))?;
    let cert7: Vec<String> = g7.certificates().into_iter().map(|c| c.y3).collect();
    let expected_cert7 = vec![
        "(b3b2b1, f3)".to_string(),
        "(b2b3b2b1, f3)".to_string(),
        "(b1b2b3b2b1, f3)".to_string(),
    ];
    ensure(cert7 == expected_cert7, || format!("n = 7 certified orbits {cert7:?}"))
}

/// One hundred exact points of the quadric-kernel sample family pass the
/// membership, nilpotency, and rank validators.
fn sample_variety() -> FixtureResult {
    let verified = step(type_bd::cube_zero_samples(100), "sampling the variety")?;
    ensure(verified == 100, || format!("verified {verified} of 100 samples"))
}

/// The four-generator cone has no affine hyperplane through its rays (with
/// an exact dependency certificate) and the torus parametrization satisfies
/// the defining equations on every sample.
fn toric_cone() -> FixtureResult {
    let cone = step(
        RatCone::new(vec![vec![0, 0, 1], vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 1]]),
        "building the cone",
    )?;
    ensure(cone.dim() == 3, || format!("cone span has rank {}", cone.dim()))?;
    let report = cone.gorenstein_check();
    ensure(!report.gorenstein, || "expected a non-Gorenstein verdict".into())?;
    let GorensteinWitness::AffineDependency(dep) = &report.witness else {
        return Err("expected an affine-dependency witness".into());
    };
    for k in 0..3 {
        let combo: i64 = cone.rays().iter().zip(dep).map(|(ray, &c)| c * ray[k]).sum();
        ensure(combo == 0, || format!("witness is not a dependency in coordinate {k}"))?;
    }
    ensure(dep.iter().sum::<i64>() != 0, || {
        "witness coefficient sum vanishes; it rules out nothing".into()
    })?;
    let orthant = step(
        RatCone::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
        "building the orthant",
    )?;
    ensure(orthant.gorenstein_check().gorenstein, || {
        "expected the orthant to pass".into()
    })?;
    let torus = step(toric::z_variety_check(100), "sampling the torus")?;
    ensure(torus.passes == 100 && torus.failures == 0, || {
        format!("torus samples: {} passed, {} failed", torus.passes, torus.failures)
    })
}

/// Both frozen e7 root triples are pairwise orthogonal for the form given
/// by the Cartan matrix.
fn e7_orthogonal_triples() -> FixtureResult {
    let system = step(RootSystem::new(Series::E, 7), "building the e7 root system")?;
    let triples: [[Vec<i64>; 3]; 2] = [
        [
            vec![2, 2, 3, 4, 3, 2, 1],
            vec![0, 1, 1, 2, 2, 2, 1],
            vec![0, 0, 0, 0, 0, 0, 1],
        ],
        [
            vec![0, 1, 1, 2, 2, 2, 1],
            vec![1, 1, 1, 2, 2, 1, 1],
            vec![1, 1, 2, 2, 1, 1, 1],
        ],
    ];
    for (at, triple) in triples.iter().enumerate() {
        let roots: Vec<Root> = triple.iter().map(|v| Root(v.clone())).collect();
        for root in &roots {
            ensure(system.is_root(root), || {
                format!("triple {at}: {root} is not an e7 root")
            })?;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let pairing = system.inner(&roots[i], &roots[j]);
                ensure(pairing.is_zero(), || {
                    format!("triple {at}: ({}, {}) = {pairing}", roots[i], roots[j])
                })?;
            }
        }
    }
    Ok(())
}

/// The six abelian-radical rows match the frozen table verbatim; the
/// classifier maps one witness to each row and rejects the boundary cases.
fn induction_table_rows() -> FixtureResult {
    let expected: [[&str; 5]; 6] = [
        ["A_{2n-1}", "P_n", "A_{n-1} x A_{n-1}", "M_n(k)", "A_{n-1}"],
        ["B_n", "P_1", "B_{n-1}", "k^{2n-1}", "B_{n-2}"],
        ["C_n", "P_n", "A_{n-1}", "M^s_n(k)", "B_{(n-1)/2} or D_{n/2}"],
        ["D_n", "P_1", "D_{n-1}", "k^{2n-2}", "D_{n-2}"],
        ["D_{2n}", "P_{2n}", "A_{2n-1}", "M^a_{2n}(k)", "C_n"],
        ["E_7", "P_7", "E_6", "k^{27}", "F_4"],
    ];
    let table = graph::induction_table();
    ensure(table.len() == 6, || format!("table has {} rows", table.len()))?;
    for (row, want) in table.iter().zip(&expected) {
        let got = [
            row.group.as_str(),
            row.parabolic.as_str(),
            row.levi.as_str(),
            row.radical.as_str(),
            row.centralizer.as_str(),
        ];
        ensure(row.case >= 1 && row.case <= 6 && got == *want, || {
            format!("row {}: {got:?}, expected {want:?}", row.case)
        })?;
    }
    let accepted = [
        (Series::A, 5, 3, 1usize),
        (Series::B, 4, 1, 2),
        (Series::C, 3, 3, 3),
        (Series::D, 4, 1, 4),
        (Series::D, 4, 4, 5),
        (Series::E, 7, 7, 6),
    ];
    for (series, rank, parabolic, case) in accepted {
        let row = step(
            graph::classify_induction(series, rank, parabolic),
            &format!("classifying ({series:?}_{rank}, P_{parabolic})"),
        )?;
        ensure(row.case == case, || {
            format!("({series:?}_{rank}, P_{parabolic}) mapped to row {}, expected {case}", row.case)
        })?;
    }
    let rejected = [
        (Series::A, 4, 2),
        (Series::A, 5, 2),
        (Series::D, 5, 5),
        (Series::E, 6, 6),
        (Series::B, 3, 2),
        (Series::C, 4, 2),
        (Series::G, 2, 1),
    ];
    for (series, rank, parabolic) in rejected {
        match graph::classify_induction(series, rank, parabolic) {
            Err(Error::NoInductionCase(_)) => {}
            other => {
                return Err(format!(
                    "({series:?}_{rank}, P_{parabolic}) should be out of scope, got {other:?}"
                ));
            }
        }
    }
    Ok(())
}

/// The six-orbit excerpt around the f4 type-N cover matches the frozen
/// shape and certifies exactly its diamond completion.
fn f4_height2_excerpt_matches() -> FixtureResult {
    let (g, cert) = graph::f4_height2_excerpt();
    let nodes: BTreeSet<(String, usize)> =
        g.nodes().iter().map(|n| (n.id.clone(), n.dim)).collect();
    let expected_nodes: BTreeSet<(String, usize)> = [
        ("X(2321)", 4),
        ("X(2421)+X(2221)", 5),
        ("X(1321)", 5),
        ("X(2431)+X(2211)", 6),
        ("X(1221)", 6),
        ("X(2432)+X(2210)", 7),
    ]
    .into_iter()
    .map(|(id, dim)| (id.to_string(), dim))
    .collect();
    ensure(nodes == expected_nodes, || format!("excerpt nodes {nodes:?}"))?;
    let edges: BTreeSet<(String, String, usize, char)> = g
        .edges()
        .iter()
        .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic, kind_letter(e.kind)))
        .collect();
    let expected_edges: BTreeSet<(String, String, usize, char)> = [
        ("X(2321)", "X(2421)+X(2221)", 2, 'N'),
        ("X(2321)", "X(1321)", 1, 'U'),
        ("X(2421)+X(2221)", "X(2431)+X(2211)", 3, 'U'),
        ("X(1321)", "X(1221)", 2, 'U'),
        ("X(2431)+X(2211)", "X(2432)+X(2210)", 4, 'U'),
    ]
    .into_iter()
    .map(|(s, d, p, k)| (s.to_string(), d.to_string(), p, k))
    .collect();
    ensure(edges == expected_edges, || format!("excerpt edges {edges:?}"))?;
    ensure(
        cert.y == "X(2321)"
            && cert.y1 == "X(1321)"
            && cert.y2 == "X(2421)+X(2221)"
            && cert.y3 == "X(1221)"
            && cert.p1 == 1
            && cert.p2 == 2
            && cert.chain.is_empty(),
        || format!("excerpt certificate {cert:?}"),
    )?;
    let found = g.certificates();
    ensure(found.len() == 1 && found[0] == cert, || {
        format!("certificate search returned {found:?}")
    })
}
