use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use webworld::cases::case1::{case1_entries, case1_permutation, case1_traces, case1_world};
use webworld::cases::signed::{
    brute_traces, case2_traces, case3_traces, labelled_colouring_matrix, SignCode, Variant,
    WordEulerTable,
};
use webworld::enumeration::{
    enumerate_worlds, is_proper, npww, nww, nwwnip, represent_of, world_size,
};
use webworld::json::{diagram_json, parse_world, world_json, WorldJson};
use webworld::matrices::{
    colouring_matrix_csv, colouring_matrix_json, colouring_matrix_with_limits, diagonal_traces,
    mixing_from_colouring, mixing_matrix_csv, mixing_matrix_json, rank, rational_string,
};
use webworld::posets::{decomposition_poset, poset_multiset, trace_via_posets};
use webworld::transitive::{count_transitive, is_transitive, list_transitive};
use webworld::verify::{self, Check, Suite};
use webworld::world::web_world;
use webworld::{BigRational, Error, IntPolynomial, Limits, WorldMatrix};

#[derive(Parser, Debug)]
#[command(
    name = "webworld",
    version,
    about = "Web worlds, their colouring and mixing matrices"
)]
struct Cli {
    /// Largest web world to materialise
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_world: usize,

    /// Largest matrix dimension to build
    #[arg(long, global = true, default_value_t = 4096)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a diagram or world description
    Validate(InputArgs),
    /// List every diagram of a world
    World(InputArgs),
    /// Colouring or mixing matrix of a world
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Kind::Mixing)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Traces of both matrices
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Also build the full mixing matrix and report its rank
        #[arg(long)]
        rank: bool,
    },
    /// Decomposition poset of the seed diagram and the poset multiset of its world
    Posets(InputArgs),
    /// Enumerate represent matrices, or tabulate world counts
    Enumerate {
        #[arg(long)]
        pegs: usize,
        #[arg(long)]
        edges: u32,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Print (m, t, n) count rows as CSV instead of matrices
        #[arg(long)]
        counts: bool,
    },
    /// Pegs (1, ..., 1, n): n edges into one shared peg
    Case1(CaseArgs),
    /// Pegs (1, 2, ..., 2, 1): a path of n + 1 edges
    Case2(CaseArgs),
    /// Pegs (2, ..., 2): a cycle of n edges
    Case3(CaseArgs),
    /// Transitive worlds with a given number of edges
    Transitive {
        #[arg(long)]
        edges: u32,
        #[arg(long)]
        list: bool,
    },
    /// Closed forms against brute force
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// JSON file, `-` for stdin, or inline JSON
    #[arg(long)]
    input: String,
}

#[derive(clap::Args, Debug)]
struct CaseArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    matrix: Option<Kind>,
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Build matrices by brute force rather than from the closed forms
    #[arg(long)]
    brute: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Colouring,
    Mixing,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Posets,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Filter {
    All,
    NoIsolated,
    Proper,
    Transitive,
}

enum Failure {
    Error(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<String, Failure>;

fn read_input(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Input(format!("{arg}: {e}")))
}

fn load(args: &InputArgs) -> Result<WorldJson, Error> {
    parse_world(&read_input(&args.input)?)
}

fn limits(cli: &Cli) -> Limits {
    Limits {
        max_world_size: cli.max_world,
        max_matrix_dim: cli.max_dim,
    }
}

fn poly_json(p: &IntPolynomial) -> Value {
    json!(p
        .coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>())
}

fn line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn render(
    m: &WorldMatrix<IntPolynomial>,
    kind: Kind,
    format: Format,
    labels: Option<Vec<String>>,
) -> String {
    match (kind, format) {
        (Kind::Colouring, Format::Csv) => colouring_matrix_csv(m),
        (Kind::Mixing, Format::Csv) => mixing_matrix_csv(&mixing_from_colouring(m)),
        (kind, Format::Json) => {
            let mut v = match kind {
                Kind::Colouring => colouring_matrix_json(m),
                Kind::Mixing => mixing_matrix_json(&mixing_from_colouring(m)),
            };
            if let Some(labels) = labels {
                v["labels"] = json!(labels);
            }
            line(&v)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let limits = limits(cli);
    match &cli.command {
        Command::Validate(args) => {
            let w = load(args)?;
            let d = w.seed()?;
            let pegs: Vec<u32> = (1..=d.n()).map(|p| d.peg_size(p)).collect();
            let a = represent_of(&d);
            Ok(line(&json!({
                "valid": true,
                "diagram": diagram_json(&d),
                "pegs": pegs,
                "represent": a,
                "world_size": world_size(&a).to_string(),
            })))
        }
        Command::World(args) => {
            let w = load(args)?.world(&limits)?;
            Ok(line(&world_json(&w)))
        }
        Command::Matrix {
            input,
            kind,
            format,
        } => {
            let w = load(input)?.world(&limits)?;
            let m = colouring_matrix_with_limits(&w, &limits)?;
            Ok(render(&m, *kind, *format, None))
        }
        Command::Trace {
            input,
            method,
            rank: want_rank,
        } => {
            let w = load(input)?.world(&limits)?;
            let (tm, tr) = match method {
                Method::Brute => diagonal_traces(&w),
                Method::Posets => trace_via_posets(&w)?,
            };
            let mut v = json!({
                "size": w.len(),
                "trace_m": poly_json(&tm),
                "trace_r": rational_string(&tr),
            });
            if *want_rank {
                let r = mixing_from_colouring(&colouring_matrix_with_limits(&w, &limits)?);
                v["rank"] = json!(rank(&r));
            }
            Ok(line(&v))
        }
        Command::Posets(args) => {
            let world = load(args)?;
            let d = world.seed()?;
            let dp = decomposition_poset(&d);
            let blocks: Vec<Value> = dp
                .blocks()
                .iter()
                .map(|b| json!({"label": b.label, "edges": b.edges.iter().map(|e| e.as_array()).collect::<Vec<_>>()}))
                .collect();
            let w = world.world(&limits)?;
            let multiset: Vec<Value> = poset_multiset(&w)
                .into_iter()
                .map(|(p, count)| json!({"poset": p.to_json(), "count": count}))
                .collect();
            Ok(line(&json!({
                "blocks": blocks,
                "poset": dp.poset().to_json(),
                "world": multiset,
            })))
        }
        Command::Enumerate {
            pegs,
            edges,
            filter,
            counts,
        } => {
            if *counts {
                let mut out = String::from("m,t,n,nww,nwwnip,npww\n");
                for m in 1..=*pegs {
                    for t in 1..=*edges {
                        for n in 1..=t as usize {
                            out.push_str(&format!(
                                "{m},{t},{n},{},{},{}\n",
                                nww(m, t, n)?,
                                nwwnip(m, t as usize, n),
                                npww(t as usize, n, m)
                            ));
                        }
                    }
                }
                return Ok(out);
            }
            let mut out = Vec::new();
            for a in enumerate_worlds(*pegs, *edges)? {
                let keep = match filter {
                    Filter::All => true,
                    Filter::NoIsolated => !a.has_isolated_pegs(),
                    Filter::Proper => {
                        !a.has_isolated_pegs() && is_proper(&web_world(&a.seed_diagram())?)
                    }
                    Filter::Transitive => !a.has_isolated_pegs() && is_transitive(&a)?,
                };
                if keep {
                    out.push(a);
                }
            }
            Ok(line(&json!(out)))
        }
        Command::Case1(args) => case1(args, &limits),
        Command::Case2(args) => signed(args, Variant::Linear),
        Command::Case3(args) => signed(args, Variant::Cyclic),
        Command::Transitive { edges, list } => {
            if *list {
                Ok(line(&json!(list_transitive(*edges)?)))
            } else {
                Ok(format!("{}\n", count_transitive(*edges)?))
            }
        }
        Command::Verify { suite, n } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut checks = Vec::new();
            for s in suites {
                checks.extend(verify::run(s, *n)?);
            }
            report(&checks)
        }
    }
}

fn report(checks: &[Check]) -> Outcome {
    let text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    if checks.iter().all(|c| c.passed) {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Mismatch)
    }
}

fn traces_json(r: &BigRational, m: &IntPolynomial) -> Value {
    json!({"trace_r": rational_string(r), "trace_m": poly_json(m)})
}

fn case1(args: &CaseArgs, limits: &Limits) -> Outcome {
    if args.verify {
        return report(&verify::case1(args.n)?);
    }
    let mut out = String::new();
    if let Some(kind) = args.matrix {
        let w = case1_world(args.n)?;
        let labels: Vec<String> = w
            .diagrams()
            .iter()
            .map(|d| format!("{:?}", case1_permutation(d).expect("case 1 shape")))
            .collect();
        let m = if args.brute {
            colouring_matrix_with_limits(&w, limits)?
        } else {
            let perms: Vec<Vec<u32>> = w
                .diagrams()
                .iter()
                .map(|d| case1_permutation(d).expect("case 1 shape"))
                .collect();
            let rows = perms
                .iter()
                .map(|p| {
                    perms
                        .iter()
                        .map(|s| case1_entries(p, s).map(|e| e.0))
                        .collect()
                })
                .collect::<Result<Vec<Vec<_>>, _>>()?;
            WorldMatrix::from_rows(rows)?
        };
        out.push_str(&render(&m, kind, args.format, Some(labels)));
    }
    if args.trace || args.matrix.is_none() {
        let (r, m) = case1_traces(args.n);
        out.push_str(&line(&traces_json(&r, &m)));
    }
    Ok(out)
}

fn signed(args: &CaseArgs, variant: Variant) -> Outcome {
    if args.verify {
        return report(&verify::signed(args.n, variant)?);
    }
    let mut out = String::new();
    if let Some(kind) = args.matrix {
        let labels: Vec<String> = SignCode::all(args.n)
            .iter()
            .map(ToString::to_string)
            .collect();
        let m = if args.brute {
            labelled_colouring_matrix(args.n, variant)?
        } else {
            WordEulerTable::new(args.n, variant)?.colouring_matrix()
        };
        out.push_str(&render(&m, kind, args.format, Some(labels)));
    }
    if args.trace || args.matrix.is_none() {
        let (r, m) = if args.brute {
            brute_traces(args.n, variant)?
        } else {
            match variant {
                Variant::Linear => case2_traces(args.n),
                Variant::Cyclic => case3_traces(args.n),
            }
        };
        out.push_str(&line(&traces_json(&r, &m)));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_guard() { 3 } else { 2 })
        }
    }
}
