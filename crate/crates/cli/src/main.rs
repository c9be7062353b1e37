use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rover_core::expr::Expr;
use rover_core::grigorchuk::{nucleus_form, GrigWord};
use rover_core::json::{element_from_str, tree_to_json, ElementJson};
use rover_core::link::{contractions, descending_link, spine_vertex, ContractionRecord};
use rover_core::poset::{double_splittings, splittings, Vertex};
use rover_core::topology::{
    backends, flag_complex, ground_finders, grounded_connectivity_check, is_k_ground,
    random_grounded_complex, reduced_betti, BettiProfile, FlagGraph,
};
use rover_core::{Error, GroupoidElement, Limits};

#[derive(Parser)]
#[command(
    name = "rover",
    version,
    about = "Exact computations in Röver's group and its expansion poset"
)]
struct Cli {
    /// Base seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Depth cap when splitting Grigorchuk words down to the nucleus.
    #[arg(long, global = true)]
    cap_depth: Option<usize>,
    /// Simplex cap for homology computations.
    #[arg(long, global = true)]
    cap_simplices: Option<usize>,
    /// Coefficients for homology.
    #[arg(long, global = true, default_value = "z")]
    coeffs: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    out: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ElemAction {
    Reduce,
    Invert,
    Eval,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form, inverse or evaluation of one element.
    Elem {
        /// Generator expression such as "s1 c2 x1", or element JSON.
        expr: String,
        #[arg(value_enum)]
        action: ElemAction,
        /// Point to evaluate, as root:bits with a 1-based root.
        #[arg(long)]
        input: Option<String>,
        /// Apply the element this many times.
        #[arg(long, default_value_t = 1)]
        iterate: usize,
    },
    /// Exit 0 when the two elements are equal, 1 otherwise.
    Eq { left: String, right: String },
    /// Nucleus form of a Grigorchuk word.
    GrigNf { word: String },
    /// The 2n splittings and n double splittings of [f].
    VertexSplittings { expr: String },
    /// Distinct contractions of [f] with their supports.
    VertexContractions { expr: String },
    /// Descending link of the spine tree vertex of rank n.
    Link {
        n: usize,
        /// Name DOT vertices by their contraction formula.
        #[arg(long)]
        contract_labels: bool,
        /// Reduced homology through this degree.
        #[arg(long)]
        homology: Option<usize>,
        /// Check the (3k,3)-ground of 3k+1 disjoint pair contractions.
        #[arg(long)]
        ground: Option<usize>,
    },
    /// Reduced homology of the flag complex of a graph JSON file.
    Homology {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Grounded-complex fuzzing: each generated complex must have vanishing homology.
    FuzzGrounded {
        #[arg(long, default_value_t = 200)]
        seeds: u64,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Ground search strategy.
        #[arg(long, default_value = "greedy")]
        finder: String,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ArityMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::RankTooSmall { .. } => 3,
        Error::ContractionCapExceeded { .. }
        | Error::SizeCapExceeded { .. }
        | Error::RankGapTooLarge { .. }
        | Error::RankTooLarge { .. }
        | Error::Overflow => 4,
        Error::NotAnExpansion | Error::NotAClique | Error::InputTooShallow { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(d) = cli.cap_depth {
        l.depth = d;
    }
    if let Some(s) = cli.cap_simplices {
        l.simplices = s;
    }
    l
}

fn element(s: &str, limits: &Limits) -> Result<GroupoidElement, Error> {
    if s.trim_start().starts_with('{') {
        element_from_str(s)
    } else {
        Expr::parse(s)?.to_element_with(limits)
    }
}

fn vertex(s: &str, limits: &Limits) -> Result<Vertex, Error> {
    Vertex::new(element(s, limits)?)
}

fn element_json(g: &GroupoidElement) -> Value {
    serde_json::to_value(ElementJson::from(g)).expect("serializable")
}

fn pretty(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("serializable")
    )
}

fn parse_point(s: &str) -> Result<(usize, Vec<bool>), Error> {
    let (root, bits) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected root:bits, got `{s}`")))?;
    let root: usize = root
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad root `{root}`")))?;
    let root = root
        .checked_sub(1)
        .ok_or_else(|| Error::Parse("roots are 1-based".into()))?;
    Ok((root, rover_core::cantor::parse_bits(bits.trim())?))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let limits = limits(cli);
    match &cli.command {
        Command::Elem {
            expr,
            action,
            input,
            iterate,
        } => {
            let g = element(expr, &limits)?;
            match action {
                ElemAction::Reduce => Ok(pretty(&element_json(&g.reduce()))),
                ElemAction::Invert => Ok(pretty(&element_json(&g.invert().reduce()))),
                ElemAction::Json => Ok(pretty(&element_json(&g))),
                ElemAction::Eval => {
                    let point = input
                        .as_deref()
                        .ok_or_else(|| Error::Parse("eval needs --input root:bits".into()))?;
                    eval_orbit(&g, point, *iterate)
                }
            }
        }
        Command::Eq { left, right } => {
            let (a, b) = (element(left, &limits)?, element(right, &limits)?);
            if a.equals(&b)? {
                Ok("equal\n".into())
            } else {
                Err(Failure::Negative("not equal\n".into()))
            }
        }
        Command::GrigNf { word } => {
            let w = GrigWord::parse(word)?;
            let nf = nucleus_form(&w, !w.is_empty(), limits.depth)?;
            let labels: String = nf.labels.iter().map(|k| k.as_char()).collect();
            Ok(pretty(&json!({
                "word": w.to_string(),
                "tree": tree_to_json(&nf.tree),
                "alpha": nf.alpha.one_based(),
                "labels": labels,
            })))
        }
        Command::VertexSplittings { expr } => {
            let v = vertex(expr, &limits)?;
            let s = splittings(&v)?;
            let d = double_splittings(&v)?;
            Ok(pretty(&json!({
                "rank": v.rank(),
                "splittings": s.iter().map(|w| element_json(w.rep())).collect::<Vec<_>>(),
                "double_splittings": d.iter().map(|w| element_json(w.rep())).collect::<Vec<_>>(),
            })))
        }
        Command::VertexContractions { expr } => {
            let v = vertex(expr, &limits)?;
            let c = contractions(&v)?;
            let records: Vec<Value> = c.records.iter().map(record_json).collect();
            Ok(pretty(&json!({
                "rank": v.rank(),
                "formulas": c.stats.formulas,
                "distinct": c.stats.distinct,
                "support_conflicts": c.stats.support_conflicts,
                "records": records,
            })))
        }
        Command::Link {
            n,
            contract_labels,
            homology,
            ground,
        } => link(cli, &limits, *n, *contract_labels, *homology, *ground),
        Command::Homology { file, dim } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
            let g = FlagGraph::parse_json(&text)?;
            let profile = betti(cli, &limits, &g, *dim)?;
            match cli.out {
                Format::Json => Ok(pretty(
                    &serde_json::to_value(&profile).expect("serializable"),
                )),
                _ => Ok(betti_text(&profile)),
            }
        }
        Command::FuzzGrounded {
            seeds,
            m,
            k,
            finder,
        } => fuzz(cli, &limits, *seeds, *m, *k, finder),
    }
}

fn eval_orbit(g: &GroupoidElement, point: &str, iterate: usize) -> Result<String, Failure> {
    let (root, bits) = parse_point(point)?;
    let start = (root, bits.clone());
    let mut cur = (root, bits);
    let mut out = String::new();
    for step in 1..=iterate {
        let e = g.evaluate(cur.0, &cur.1)?;
        cur = (e.root, e.bits);
        let tail = if e.residual.is_empty() {
            String::new()
        } else {
            format!(" then {}", e.residual)
        };
        writeln!(
            out,
            "{step}: {}:{}{tail}",
            cur.0 + 1,
            rover_core::cantor::bits_to_string(&cur.1)
        )
        .unwrap();
    }
    if iterate > 1 {
        writeln!(out, "restored: {}", cur == start).unwrap();
    }
    Ok(out)
}

fn record_json(r: &ContractionRecord) -> Value {
    json!({
        "kind": r.kind,
        "indices": r.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "labels": r.labels.iter().map(|k| k.as_char()).collect::<String>(),
        "support": r.support().into_iter().map(|i| i + 1).collect::<Vec<_>>(),
        "vertex": element_json(r.vertex.rep()),
    })
}

fn betti(cli: &Cli, limits: &Limits, g: &FlagGraph, dim: usize) -> Result<BettiProfile, Error> {
    let registry = backends();
    let backend = registry.get(&cli.coeffs)?;
    let complex = flag_complex(g, dim + 1);
    reduced_betti(&complex, dim, backend, limits)
}

fn betti_text(p: &BettiProfile) -> String {
    let mut out = format!("coefficients: {}\n", p.coefficients);
    writeln!(out, "reduced betti: {:?}", p.betti).unwrap();
    if p.minus_one > 0 {
        writeln!(out, "empty complex").unwrap();
    }
    for (d, t) in p.torsion.iter().enumerate() {
        if !t.is_empty() {
            writeln!(out, "torsion in degree {d}: {t:?}").unwrap();
        }
    }
    out
}

fn link(
    cli: &Cli,
    limits: &Limits,
    n: usize,
    contract_labels: bool,
    homology: Option<usize>,
    ground: Option<usize>,
) -> Result<String, Failure> {
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 }.into());
    }
    let link = descending_link(&spine_vertex(n)?)?;
    let mut report = serde_json::Map::new();
    let mut text = format!(
        "rank: {n}\ncontractions: {}\nedges: {}\ncomponents: {}\n",
        link.graph.len(),
        link.graph.edge_count(),
        link.graph.components()
    );
    let mut negative = false;
    if let Some(k) = ground {
        let members = link.ground_indices(k)?;
        let ok = is_k_ground(&link.graph, &members, 3)?;
        negative |= !ok;
        writeln!(text, "grounded: {ok} ({},3)", 3 * k).unwrap();
        report.insert(
            "ground".into(),
            json!({ "members": members, "k": 3, "grounded": ok }),
        );
    }
    if let Some(d) = homology {
        let profile = betti(cli, limits, &link.graph, d)?;
        text.push_str(&betti_text(&profile));
        report.insert(
            "homology".into(),
            serde_json::to_value(&profile).expect("serializable"),
        );
    }
    let out = match cli.out {
        Format::Dot if contract_labels => link.to_dot(),
        Format::Dot => link.graph.to_dot(),
        Format::Json => {
            let mut v = serde_json::to_value(link.to_json()).expect("serializable");
            v.as_object_mut().expect("object").extend(report);
            pretty(&v)
        }
        Format::Text => text,
    };
    if negative {
        Err(Failure::Negative(out))
    } else {
        Ok(out)
    }
}

fn fuzz(
    cli: &Cli,
    limits: &Limits,
    seeds: u64,
    m: usize,
    k: usize,
    finder: &str,
) -> Result<String, Failure> {
    let finders = ground_finders();
    let finder = finders.get(finder)?;
    let ground_size = m * k + 1;
    if ground_size > 40 {
        return Err(Error::SizeCapExceeded {
            count: ground_size,
            cap: 40,
        }
        .into());
    }
    let mut consistent = 0;
    let mut grounded = 0;
    let mut out = String::new();
    for i in 0..seeds {
        let seed = cli.seed.wrapping_add(i);
        let extra = (seed % (41 - ground_size as u64)) as usize;
        let g = random_grounded_complex(seed, extra, m, k);
        let report = grounded_connectivity_check(&g, m, k, finder, limits)?;
        grounded += report.hypothesis_holds as u64;
        if report.consistent() {
            consistent += 1;
        } else {
            writeln!(out, "discrepancy at seed {seed}: {:?}", report.betti).unwrap();
        }
    }
    writeln!(
        out,
        "{consistent}/{seeds} consistent ({grounded} with a ground found)"
    )
    .unwrap();
    if consistent == seeds {
        Ok(out)
    } else {
        Err(Failure::Negative(out))
    }
}
