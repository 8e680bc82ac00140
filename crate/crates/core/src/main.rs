//! Command-line front end: orbit enumeration, graph export, certificate
//! search, fixture verification, and the abelian-radical classifier.
//!
//! Exit codes: 0 on success, 1 when a fixture or validator fails, 2 on a
//! usage error.  Data goes to stdout (or `--out`); counts and banners go to
//! stderr, so piped output stays machine-readable.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use borel_orbits::graph::TypedWeakGraph;
use borel_orbits::mat::IntMat;
use borel_orbits::minimal::MinOrbitPoset;
use borel_orbits::orbits::{type_a, type_bd, type_c};
use borel_orbits::roots::{parse_type, Series};
use borel_orbits::{graph, report, Error};

#[derive(Parser)]
#[command(
    name = "borel-orbits",
    version,
    about = "Borel conjugacy classes in small nilpotent orbit closures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the orbits of a family: ids, dimensions, representatives.
    Enumerate(FamilyArgs),
    /// Export the typed weak-cover graph or the closure order.
    Graph(GraphArgs),
    /// Search the weak graph for non-normality certificates.
    CheckNormality(FamilyArgs),
    /// Run the frozen data fixtures and report pass or fail per fixture.
    Verify(VerifyArgs),
    /// Classify (series, rank, parabolic) against the abelian-radical table.
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "C")]
    C,
    #[value(name = "BD2")]
    Bd2,
    #[value(name = "BD3")]
    Bd3,
    #[value(name = "min")]
    Min,
    #[value(name = "F4O2")]
    F4O2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Weak,
    Closure,
}

#[derive(Args)]
struct FamilyArgs {
    /// Orbit family to build.
    #[arg(long)]
    family: Option<Family>,
    /// Ambient size: matrix size for A, BD2, BD3; the rank for C.
    #[arg(long)]
    n: Option<usize>,
    /// Rank of the base point (families A and C).
    #[arg(long)]
    r: Option<usize>,
    /// Half the base-point rank (family BD2).
    #[arg(long)]
    s: Option<usize>,
    /// Root system for the minimal-orbit family, e.g. G2, F4, A3.
    #[arg(long = "type")]
    series: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "weak")]
    kind: Kind,
    /// Rebuild the family recorded in an `enumerate` JSON export.
    #[arg(long)]
    from: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only fixtures whose name contains this substring.
    #[arg(long)]
    only: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Series letter: A, B, C, D, E, F, or G.
    #[arg(long)]
    series: String,
    #[arg(long)]
    rank: usize,
    /// Index of the maximal parabolic (1-based simple root).
    #[arg(long)]
    parabolic: usize,
}

/// A fully resolved family request.
enum Request {
    A { n: usize, r: usize },
    C { n: usize, r: usize },
    Bd2 { n: usize, s: usize },
    Bd3 { n: usize },
    Min { series: Series, rank: usize },
    F4O2,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(match e {
                Error::InvalidInput(_) | Error::Unsupported(_) | Error::Parse(_) => 2,
                _ => 1,
            });
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Enumerate(args) => cmd_enumerate(args),
        Cmd::Graph(args) => cmd_graph(args),
        Cmd::CheckNormality(args) => cmd_check_normality(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Classify(args) => cmd_classify(args),
    }
}

impl FamilyArgs {
    /// Checks that exactly the parameters this family consumes were given.
    fn resolve(&self) -> Result<Request, Error> {
        let family = self.family.ok_or_else(|| {
            Error::InvalidInput("--family is required (or use --from with a prior export)".into())
        })?;
        let reject = |flag: &str, given: bool| {
            if given {
                Err(Error::InvalidInput(format!(
                    "{flag} does not apply to this family"
                )))
            } else {
                Ok(())
            }
        };
        let need = |flag: &str, v: Option<usize>| {
            v.ok_or_else(|| Error::InvalidInput(format!("{flag} is required for this family")))
        };
        match family {
            Family::A => {
                reject("--s", self.s.is_some())?;
                reject("--type", self.series.is_some())?;
                Ok(Request::A { n: need("--n", self.n)?, r: need("--r", self.r)? })
            }
            Family::C => {
                reject("--s", self.s.is_some())?;
                reject("--type", self.series.is_some())?;
                Ok(Request::C { n: need("--n", self.n)?, r: need("--r", self.r)? })
            }
            Family::Bd2 => {
                reject("--r", self.r.is_some())?;
                reject("--type", self.series.is_some())?;
                Ok(Request::Bd2 { n: need("--n", self.n)?, s: need("--s", self.s)? })
            }
            Family::Bd3 => {
                reject("--r", self.r.is_some())?;
                reject("--s", self.s.is_some())?;
                reject("--type", self.series.is_some())?;
                Ok(Request::Bd3 { n: need("--n", self.n)? })
            }
            Family::Min => {
                reject("--n", self.n.is_some())?;
                reject("--r", self.r.is_some())?;
                reject("--s", self.s.is_some())?;
                let label = self.series.as_deref().ok_or_else(|| {
                    Error::InvalidInput("--type is required for the minimal-orbit family".into())
                })?;
                let (series, rank) = parse_type(label)?;
                Ok(Request::Min { series, rank })
            }
            Family::F4O2 => {
                reject("--n", self.n.is_some())?;
                reject("--r", self.r.is_some())?;
                reject("--s", self.s.is_some())?;
                reject("--type", self.series.is_some())?;
                Ok(Request::F4O2)
            }
        }
    }
}

fn mat_rows(m: &IntMat) -> Vec<Vec<i64>> {
    (1..=m.size())
        .map(|i| (1..=m.size()).map(|j| m.get(i, j)).collect())
        .collect()
}

impl Request {
    /// JSON header naming the family and its parameters; `enumerate` output
    /// starts with this and `graph --from` reads it back.
    fn header(&self) -> Vec<(&'static str, Value)> {
        match *self {
            Request::A { n, r } => vec![("family", json!("A")), ("n", json!(n)), ("r", json!(r))],
            Request::C { n, r } => vec![("family", json!("C")), ("n", json!(n)), ("r", json!(r))],
            Request::Bd2 { n, s } => {
                vec![("family", json!("BD2")), ("n", json!(n)), ("s", json!(s))]
            }
            Request::Bd3 { n } => vec![("family", json!("BD3")), ("n", json!(n))],
            Request::Min { series, rank } => {
                vec![("family", json!("min")), ("type", json!(format!("{series:?}{rank}")))]
            }
            Request::F4O2 => vec![("family", json!("F4O2"))],
        }
    }

    fn orbit_rows(&self) -> Result<Vec<Value>, Error> {
        match *self {
            Request::A { n, r } => {
                let cat = type_a::Catalog::new(n, r)?;
                (0..cat.len())
                    .map(|i| {
                        let link: Vec<Vec<usize>> = cat
                            .link_pattern(i)
                            .into_iter()
                            .map(|(tail, head)| vec![tail, head])
                            .collect();
                        Ok(json!({
                            "id": cat.label(i),
                            "dim": cat.dim(i),
                            "rep": mat_rows(cat.representative(i)),
                            "link": link,
                        }))
                    })
                    .collect()
            }
            Request::C { n, r } => {
                let cat = type_c::Catalog::new(n, r)?;
                (0..cat.len())
                    .map(|i| {
                        Ok(json!({
                            "id": cat.label(i),
                            "dim": cat.dim(i)?,
                            "rep": mat_rows(cat.representative(i)),
                        }))
                    })
                    .collect()
            }
            Request::Bd2 { n, s } => {
                let cat = type_bd::TwoNilpotent::new(n, s)?;
                (0..cat.len())
                    .map(|i| {
                        Ok(json!({
                            "id": cat.label(i),
                            "dim": cat.dim(i),
                            "rep": mat_rows(cat.representative(i)),
                        }))
                    })
                    .collect()
            }
            Request::Bd3 { n } => {
                let cat = type_bd::ThreeNilpotent::new(n)?;
                (0..cat.len())
                    .map(|i| {
                        Ok(json!({
                            "id": cat.label(i),
                            "dim": cat.dim(i),
                            "rank": cat.orbit_rank(i),
                            "rep": mat_rows(cat.representative(i)),
                        }))
                    })
                    .collect()
            }
            Request::Min { series, rank } => {
                let poset = MinOrbitPoset::new(series, rank)?;
                (0..poset.len())
                    .map(|i| {
                        Ok(json!({
                            "id": poset.label(i),
                            "dim": poset.dim(i),
                            "root": poset.roots()[i].0,
                        }))
                    })
                    .collect()
            }
            Request::F4O2 => {
                let (g, _) = graph::f4_height2_excerpt();
                Ok(g.nodes()
                    .iter()
                    .map(|node| json!({ "id": node.id, "dim": node.dim }))
                    .collect())
            }
        }
    }

    fn weak_graph(&self) -> Result<TypedWeakGraph, Error> {
        match *self {
            Request::A { n, r } => type_a::Catalog::new(n, r)?.weak_graph(),
            Request::C { n, r } => type_c::Catalog::new(n, r)?.weak_graph(),
            Request::Bd2 { n, s } => type_bd::TwoNilpotent::new(n, s)?.weak_graph(),
            Request::Bd3 { n } => type_bd::ThreeNilpotent::new(n)?.weak_graph(),
            Request::Min { series, rank } => MinOrbitPoset::new(series, rank)?.weak_graph(),
            Request::F4O2 => Ok(graph::f4_height2_excerpt().0),
        }
    }

    /// Closure order over the graph's node ordering, or `None` when only
    /// weak-order reachability is available (the orthogonal families).
    fn closure(&self) -> Result<(TypedWeakGraph, Option<Vec<Vec<bool>>>), Error> {
        let g = self.weak_graph()?;
        let position: BTreeMap<&str, usize> = g
            .nodes()
            .iter()
            .enumerate()
            .map(|(at, node)| (node.id.as_str(), at))
            .collect();
        let size = g.nodes().len();
        let tabulate = |len: usize,
                        label: &dyn Fn(usize) -> String,
                        leq: &dyn Fn(usize, usize) -> bool| {
            let mut table = vec![vec![false; size]; size];
            for a in 0..len {
                for b in 0..len {
                    table[position[label(a).as_str()]][position[label(b).as_str()]] = leq(a, b);
                }
            }
            table
        };
        match *self {
            Request::A { n, r } => {
                let cat = type_a::Catalog::new(n, r)?;
                let leq = tabulate(cat.len(), &|i| cat.label(i), &|a, b| {
                    cat.closure_leq_bruhat(a, b)
                });
                Ok((g, Some(leq)))
            }
            Request::C { n, r } => {
                let cat = type_c::Catalog::new(n, r)?;
                let leq = tabulate(cat.len(), &|i| cat.label(i), &|a, b| cat.closure_leq(a, b));
                Ok((g, Some(leq)))
            }
            Request::Min { series, rank } => {
                let poset = MinOrbitPoset::new(series, rank)?;
                let leq =
                    tabulate(poset.len(), &|i| poset.label(i), &|a, b| poset.closure_leq(a, b));
                Ok((g, Some(leq)))
            }
            Request::Bd2 { .. } | Request::Bd3 { .. } | Request::F4O2 => Ok((g, None)),
        }
    }
}

fn weak_reachability(g: &TypedWeakGraph) -> Vec<Vec<bool>> {
    let position: BTreeMap<&str, usize> = g
        .nodes()
        .iter()
        .enumerate()
        .map(|(at, node)| (node.id.as_str(), at))
        .collect();
    let size = g.nodes().len();
    let mut leq = vec![vec![false; size]; size];
    for (at, row) in leq.iter_mut().enumerate() {
        row[at] = true;
    }
    // Edges point upward; leq[a][b] means a reachable-below b.
    let mut changed = true;
    while changed {
        changed = false;
        for edge in g.edges() {
            let (src, dst) = (position[edge.src.as_str()], position[edge.dst.as_str()]);
            for a in 0..size {
                if leq[a][src] && !leq[a][dst] {
                    leq[a][dst] = true;
                    changed = true;
                }
            }
        }
    }
    leq
}

fn emit(args: &FamilyArgs, text: &str) -> Result<(), Error> {
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_enumerate(args: FamilyArgs) -> Result<(), Error> {
    if args.format == Format::Dot {
        return Err(Error::InvalidInput(
            "enumerate output is JSON; use the graph subcommand for DOT".into(),
        ));
    }
    let request = args.resolve()?;
    let orbits = request.orbit_rows()?;
    eprintln!("{} orbits", orbits.len());
    let mut doc = serde_json::Map::new();
    for (key, value) in request.header() {
        doc.insert(key.to_string(), value);
    }
    doc.insert("orbits".into(), Value::Array(orbits));
    emit(&args, &serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"))
}

fn cmd_graph(args: GraphArgs) -> Result<(), Error> {
    let request = match &args.from {
        Some(path) => {
            if args.family.family.is_some() {
                return Err(Error::InvalidInput(
                    "--from already names the family; drop --family".into(),
                ));
            }
            request_from_export(path)?
        }
        None => args.family.resolve()?,
    };
    match args.kind {
        Kind::Weak => {
            let g = request.weak_graph()?;
            eprintln!("{} nodes, {} edges", g.nodes().len(), g.edges().len());
            let text = match args.family.format {
                Format::Json => {
                    serde_json::to_string_pretty(&g.to_json()).expect("serializable")
                }
                Format::Dot => g.to_dot("weak_order"),
            };
            emit(&args.family, &text)
        }
        Kind::Closure => {
            if args.family.format == Format::Dot {
                return Err(Error::InvalidInput(
                    "closure export is JSON only; DOT renders the weak graph".into(),
                ));
            }
            let (g, exact) = request.closure()?;
            let is_exact = exact.is_some();
            let leq = exact.unwrap_or_else(|| weak_reachability(&g));
            if !is_exact {
                eprintln!(
                    "weak-order lower bound only: closure containments beyond these may exist"
                );
            }
            eprintln!("{} nodes", g.nodes().len());
            let mut doc = serde_json::Map::new();
            for (key, value) in request.header() {
                doc.insert(key.to_string(), value);
            }
            doc.insert(
                "order".into(),
                json!(if is_exact { "closure" } else { "weak-reachability" }),
            );
            doc.insert(
                "nodes".into(),
                Value::Array(
                    g.nodes()
                        .iter()
                        .map(|node| json!({ "id": node.id, "dim": node.dim }))
                        .collect(),
                ),
            );
            doc.insert("leq".into(), json!(leq));
            emit(&args.family, &serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"))
        }
    }
}

/// Reads the family header back out of an `enumerate` export.
fn request_from_export(path: &PathBuf) -> Result<Request, Error> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    let field = |key: &str| -> Result<usize, Error> {
        doc.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::InvalidInput(format!("export lacks a numeric '{key}' field")))
    };
    match doc.get("family").and_then(Value::as_str) {
        Some("A") => Ok(Request::A { n: field("n")?, r: field("r")? }),
        Some("C") => Ok(Request::C { n: field("n")?, r: field("r")? }),
        Some("BD2") => Ok(Request::Bd2 { n: field("n")?, s: field("s")? }),
        Some("BD3") => Ok(Request::Bd3 { n: field("n")? }),
        Some("min") => {
            let label = doc
                .get("type")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidInput("export lacks a 'type' field".into()))?;
            let (series, rank) = parse_type(label)?;
            Ok(Request::Min { series, rank })
        }
        Some("F4O2") => Ok(Request::F4O2),
        Some(other) => Err(Error::InvalidInput(format!("unknown family '{other}' in export"))),
        None => Err(Error::InvalidInput("export lacks a 'family' field".into())),
    }
}

fn cmd_check_normality(args: FamilyArgs) -> Result<(), Error> {
    if args.format == Format::Dot {
        return Err(Error::InvalidInput("certificates are JSON only".into()));
    }
    let request = args.resolve()?;
    let g = request.weak_graph()?;
    let certificates = g.certificates();
    eprintln!(
        "{} nodes, {} edges, {} certificates",
        g.nodes().len(),
        g.edges().len(),
        certificates.len()
    );
    if certificates.is_empty() {
        eprintln!("no obstruction found (not a normality proof)");
    }
    emit(&args, &serde_json::to_string_pretty(&certificates).expect("serializable"))
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Error> {
    let outcomes = report::run_matching(args.only.as_deref());
    if outcomes.is_empty() {
        return Err(Error::InvalidInput(format!(
            "no fixture matches '{}'; available: {}",
            args.only.unwrap_or_default(),
            report::names().join(", ")
        )));
    }
    let mut failures = 0usize;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(()) => println!("PASS {}", outcome.name),
            Err(msg) => {
                failures += 1;
                println!("FAIL {}: {msg}", outcome.name);
            }
        }
    }
    eprintln!("{} passed, {failures} failed", outcomes.len() - failures);
    if failures > 0 {
        return Err(Error::Validation(format!("{failures} fixture(s) failed")));
    }
    Ok(())
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), Error> {
    let series = match args.series.as_str() {
        "A" => Series::A,
        "B" => Series::B,
        "C" => Series::C,
        "D" => Series::D,
        "E" => Series::E,
        "F" => Series::F,
        "G" => Series::G,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown series '{other}'; expected one of A, B, C, D, E, F, G"
            )))
        }
    };
    let row = graph::classify_induction(series, args.rank, args.parabolic)?;
    println!("{}", serde_json::to_string_pretty(&row).expect("serializable"));
    Ok(())
}
