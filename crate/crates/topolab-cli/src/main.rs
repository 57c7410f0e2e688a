//! `topolab` — exact computation on finite topological spaces, ideal star
//! topologies, registered-claim sweeps, the rational-endpoint line, and
//! group-topology classification.
//!
//! Exit codes: 0 success (claim verified, predicate true, value computed);
//! 1 counterexample or witness found, or a boolean answer of `false` under
//! `--strict`; 2 usage error or malformed input.
//!
//! All output goes to stdout as plain text, or as single-line JSON under
//! `--json`. Setting `TOPOLAB_COLOR=0` disables the minimal styling that is
//! otherwise applied when stdout is a terminal.

use std::fs;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use topolab::compat::{self, TopologyPair};
use topolab::ideals::{self, Ideal};
use topolab::realline::{
    hattori_clopen_witness, line_compare, rl_are_pi_compatible, rl_is_admissible_extension,
    IntervalSet, LineTopology,
};
use topolab::topgroups::{classify, group_hattori, is_almost_topological, FiniteGroup};
use topolab::{
    enumerate_topologies, search_counterexample, verify, FiniteSpace, PointSet, PredicateId,
    TheoremId,
};

#[derive(Parser)]
#[command(
    name = "topolab",
    version,
    about = "Exact topology computations on finite carriers and the rational-endpoint line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one finite space, or an operator applied to a subset.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Relations between two finite topologies on the same carrier.
    #[command(subcommand)]
    Pair(PairCmd),
    /// Star topology of a principal ideal over a base space.
    Star(StarArgs),
    /// Star topology of the nowhere-dense ideal (the alpha topology).
    Alpha(AlphaArgs),
    /// Stream every labeled topology on an n-point carrier.
    Enumerate(EnumerateArgs),
    /// Sweep a registered claim over every instance at one scale.
    Verify(VerifyArgs),
    /// Scan for the first violation of a conjecture-shaped predicate.
    Search(SearchArgs),
    /// Operators and comparisons on the rational-endpoint line.
    #[command(subcommand)]
    Realline(ReallineCmd),
    /// Continuity classification of topologies on finite groups.
    #[command(subcommand)]
    Group(GroupCmd),
}

#[derive(Subcommand)]
enum SpaceCmd {
    /// Separation, density, connectivity, and category facts.
    Analyze {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply one operator or predicate to a subset of the carrier.
    Op {
        #[arg(value_enum)]
        op: SpaceOp,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Comma-separated point list, e.g. 0,2 ({} or an empty string is the
        /// empty set). Whole-space queries take no --set.
        #[arg(long, value_name = "LIST")]
        set: Option<String>,
        #[arg(long)]
        json: bool,
        /// Exit 1 when a boolean answer is false.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceOp {
    Interior,
    Closure,
    Nwd,
    Meager,
    Baire,
    Semiopen,
    Density,
    Connected,
}

#[derive(Subcommand)]
enum PairCmd {
    /// Mutual pi-network test between two topologies.
    #[command(name = "pi-compat")]
    PiCompat {
        #[arg(value_name = "TAU")]
        tau: PathBuf,
        #[arg(value_name = "SIGMA")]
        sigma: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Is the second topology an admissible extension of the first?
    Admissible {
        #[arg(value_name = "BASE")]
        base: PathBuf,
        #[arg(value_name = "EXT")]
        ext: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Split a tau-open set into a sigma-open core and a rest that is
    /// nowhere dense in both topologies.
    Decompose {
        #[arg(value_name = "TAU")]
        tau: PathBuf,
        #[arg(value_name = "SIGMA")]
        sigma: PathBuf,
        #[arg(long, value_name = "LIST")]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Coarsest common refinement target: the meet inside the
    /// pi-compatibility order.
    Meet {
        #[arg(value_name = "TAU")]
        tau: PathBuf,
        #[arg(value_name = "SIGMA")]
        sigma: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct StarArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Generator of the principal ideal, as a comma-separated point list.
    #[arg(long, value_name = "LIST")]
    ideal: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AlphaArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// One JSON space per line instead of the indexed text listing.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "ID")]
    theorem: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Worker threads; the report is identical for every value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_name = "ID")]
    predicate: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ReallineCmd {
    /// Closure of a rational-endpoint set.
    Closure {
        #[arg(long, value_name = "SPEC")]
        topology: String,
        #[arg(long, value_name = "SET")]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Interior of a rational-endpoint set.
    Interior {
        #[arg(long, value_name = "SPEC")]
        topology: String,
        #[arg(long, value_name = "SET")]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Order relation between two line topologies.
    Compare {
        #[arg(long, value_name = "SPEC")]
        a: String,
        #[arg(long, value_name = "SPEC")]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Mutual pi-network test between two line topologies.
    #[command(name = "pi-compat")]
    PiCompat {
        #[arg(long, value_name = "SPEC")]
        a: String,
        #[arg(long, value_name = "SPEC")]
        b: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Is topology --b an admissible extension of topology --a?
    Admissible {
        #[arg(long, value_name = "SPEC")]
        a: String,
        #[arg(long, value_name = "SPEC")]
        b: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Semi-openness of a set in one line topology.
    Semiopen {
        #[arg(long, value_name = "SPEC")]
        topology: String,
        #[arg(long, value_name = "SET")]
        set: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// A set that is clopen in the mixed topology with parameter --a but not
    /// in the symmetric one; prints "none" when the two coincide.
    Clopen {
        #[arg(long, value_name = "SET")]
        a: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Continuity of translations, multiplication, and inversion.
    Classify {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Almost-topological test against a candidate refinement system.
    Almost {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Candidate refinement topology on the same carrier.
        #[arg(long, value_name = "FILE")]
        gamma: PathBuf,
        /// One identity-neighborhood base member per occurrence.
        #[arg(long = "base", value_name = "LIST")]
        base: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Mixed per-point neighborhood system switched by a distinguished set.
    Hattori {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        gamma: PathBuf,
        #[arg(long = "base", value_name = "LIST")]
        base: Vec<String>,
        /// Points that use the refined local base (default: none).
        #[arg(long, value_name = "LIST", default_value = "")]
        a: String,
        /// Build the space even when the preconditions fail.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Space(cmd) => run_space(cmd),
        Command::Pair(cmd) => run_pair(cmd),
        Command::Star(args) => run_star(args),
        Command::Alpha(args) => run_alpha(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
        Command::Search(args) => run_search(args),
        Command::Realline(cmd) => run_realline(cmd),
        Command::Group(cmd) => run_group(cmd),
    }
}

// ---------------------------------------------------------------- helpers

fn load_space(path: &Path) -> Result<FiniteSpace, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_group(path: &Path) -> Result<FiniteGroup, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Comma-separated point indices; "{0,2}"-style braces and blanks are
/// tolerated, and an empty list is the empty set.
fn parse_points(list: &str) -> Result<PointSet, String> {
    let inner = list.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if inner.is_empty() {
        return Ok(PointSet::EMPTY);
    }
    let mut set = PointSet::EMPTY;
    for part in inner.split(',') {
        let x: usize = part.trim().parse().map_err(|_| {
            format!("bad point list {list:?}: {:?} is not a point index", part.trim())
        })?;
        if x >= topolab::set::MAX_POINTS {
            return Err(format!("bad point list {list:?}: point {x} is out of range"));
        }
        set = set.with(x);
    }
    Ok(set)
}

fn ensure_carrier(set: PointSet, n: usize, what: &str) -> Result<(), String> {
    if set.is_subset(PointSet::universe(n)) {
        Ok(())
    } else {
        Err(format!("{what} {set} has points outside the {n}-point carrier"))
    }
}

fn parse_line_topology(spec: &str) -> Result<LineTopology, String> {
    spec.parse::<LineTopology>().map_err(|e| format!("topology {spec:?}: {e}"))
}

fn parse_line_set(spec: &str) -> Result<IntervalSet, String> {
    spec.parse::<IntervalSet>().map_err(|e| format!("set {spec:?}: {e}"))
}

/// Bold when stdout is a terminal and TOPOLAB_COLOR is not "0".
fn styled(text: &str) -> String {
    let want = std::env::var_os("TOPOLAB_COLOR").map_or(true, |v| v != "0");
    if want && std::io::stdout().is_terminal() {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn emit_bool(value: bool, json: bool, strict: bool) -> ExitCode {
    if json {
        println!("{}", json!({ "result": value }));
    } else {
        println!("{value}");
    }
    if strict && !value {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit_space(space: &FiniteSpace, json: bool) -> Result<(), String> {
    if json {
        println!("{}", serde_json::to_string(space).map_err(|e| e.to_string())?);
    } else {
        println!("n: {}", space.n());
        for x in 0..space.n() {
            println!("min_nbhd({x}) = {}", space.min_nbhd(x));
        }
    }
    Ok(())
}

// ------------------------------------------------------------------ space

fn run_space(cmd: SpaceCmd) -> Result<ExitCode, String> {
    match cmd {
        SpaceCmd::Analyze { input, json } => {
            let space = load_space(&input)?;
            let report = space.report();
            if json {
                println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
            } else {
                println!("{}", styled(&format!("space on {} points", report.n)));
                println!("T0: {}", report.separation.t0);
                println!("T1: {}", report.separation.t1);
                println!("T2: {}", report.separation.t2);
                println!("density: {}", report.density);
                println!("isolated points: {}", report.isolated_points);
                println!("connected: {}", report.is_connected);
                println!("Baire space: {}", report.is_baire);
                println!("largest nowhere dense set: {}", report.nwd_max);
            }
            Ok(ExitCode::SUCCESS)
        }
        SpaceCmd::Op { op, input, set, json, strict } => {
            run_space_op(op, &input, set, json, strict)
        }
    }
}

fn run_space_op(
    op: SpaceOp,
    input: &Path,
    set: Option<String>,
    json: bool,
    strict: bool,
) -> Result<ExitCode, String> {
    let space = load_space(input)?;
    let takes_set = !matches!(op, SpaceOp::Density | SpaceOp::Connected);
    let a = match (set, takes_set) {
        (Some(list), true) => {
            let a = parse_points(&list)?;
            ensure_carrier(a, space.n(), "--set")?;
            a
        }
        (None, true) => return Err("this operator requires --set".into()),
        (Some(_), false) => return Err("this operator takes no --set".into()),
        (None, false) => PointSet::EMPTY,
    };
    let code = match op {
        SpaceOp::Interior | SpaceOp::Closure => {
            let out = if op == SpaceOp::Interior { space.interior(a) } else { space.closure(a) };
            if json {
                println!("{}", json!({ "result": out }));
            } else {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        SpaceOp::Nwd => emit_bool(space.is_nowhere_dense(a), json, strict),
        SpaceOp::Meager => emit_bool(space.is_meager(a), json, strict),
        SpaceOp::Baire => emit_bool(space.has_baire_property(a), json, strict),
        SpaceOp::Semiopen => emit_bool(space.is_semi_open(a), json, strict),
        SpaceOp::Density => {
            let d = space.density();
            if json {
                println!("{}", json!({ "result": d }));
            } else {
                println!("{d}");
            }
            ExitCode::SUCCESS
        }
        SpaceOp::Connected => emit_bool(space.is_connected(), json, strict),
    };
    Ok(code)
}

// ------------------------------------------------------------------- pair

fn run_pair(cmd: PairCmd) -> Result<ExitCode, String> {
    match cmd {
        PairCmd::PiCompat { tau, sigma, json, strict } => {
            let (t, s) = (load_space(&tau)?, load_space(&sigma)?);
            let answer = compat::are_pi_compatible(&t, &s).map_err(|e| e.to_string())?;
            Ok(emit_bool(answer, json, strict))
        }
        PairCmd::Admissible { base, ext, json, strict } => {
            let (b, e) = (load_space(&base)?, load_space(&ext)?);
            let answer = compat::is_admissible_extension(&b, &e).map_err(|e| e.to_string())?;
            Ok(emit_bool(answer, json, strict))
        }
        PairCmd::Decompose { tau, sigma, set, json } => {
            let (t, s) = (load_space(&tau)?, load_space(&sigma)?);
            let o = parse_points(&set)?;
            ensure_carrier(o, t.n(), "--set")?;
            let pair = TopologyPair::new(t, s).map_err(|e| e.to_string())?;
            let d = compat::decompose_open(&pair, o).map_err(|e| e.to_string())?;
            if json {
                println!("{}", json!({ "open_part": d.open_part, "nwd_part": d.nwd_part }));
            } else {
                println!("open part: {}", d.open_part);
                println!("nwd part: {}", d.nwd_part);
            }
            Ok(ExitCode::SUCCESS)
        }
        PairCmd::Meet { tau, sigma, json } => {
            let (t, s) = (load_space(&tau)?, load_space(&sigma)?);
            let m = compat::meet(&t, &s).map_err(|e| e.to_string())?;
            emit_space(&m, json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

// ------------------------------------------------------------ star / alpha

fn run_star(args: StarArgs) -> Result<ExitCode, String> {
    let space = load_space(&args.input)?;
    let generator = parse_points(&args.ideal)?;
    ensure_carrier(generator, space.n(), "--ideal")?;
    let star = ideals::star_topology(&space, &Ideal::new(generator)).map_err(|e| e.to_string())?;
    emit_space(&star, args.json)?;
    Ok(ExitCode::SUCCESS)
}

fn run_alpha(args: AlphaArgs) -> Result<ExitCode, String> {
    let space = load_space(&args.input)?;
    let alpha = ideals::alpha_topology(&space);
    emit_space(&alpha, args.json)?;
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------- enumerate

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, String> {
    let stream = enumerate_topologies(args.n).map_err(|e| e.to_string())?;
    let mut count = 0usize;
    for space in stream {
        if args.json {
            println!("{}", serde_json::to_string(&space).map_err(|e| e.to_string())?);
        } else {
            let row =
                space.min_nbhds().iter().map(|nb| nb.to_string()).collect::<Vec<_>>().join(" ");
            println!("{count}: {row}");
        }
        count += 1;
    }
    if !args.json {
        println!("{count} topologies on {} points", args.n);
    }
    Ok(ExitCode::SUCCESS)
}

// ----------------------------------------------------------------- verify

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let theorem: TheoremId =
        args.theorem.parse().map_err(|e: topolab::EnumerationError| e.to_string())?;
    let report = verify(theorem, args.n, args.jobs).map_err(|e| e.to_string())?;
    if args.json {
        println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
    } else {
        println!("theorem: {theorem}");
        println!("scale: n={}", report.n);
        println!("instances: {}", report.instances);
        println!("counterexamples: {}", report.counterexamples.len());
        println!("elapsed: {} ms", report.elapsed_ms);
        println!("verdict: {}", styled(&report.verdict));
        if let Some(first) = report.counterexamples.first() {
            println!(
                "first counterexample: {}",
                serde_json::to_string(first).map_err(|e| e.to_string())?
            );
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ----------------------------------------------------------------- search

fn run_search(args: SearchArgs) -> Result<ExitCode, String> {
    let predicate: PredicateId =
        args.predicate.parse().map_err(|e: topolab::EnumerationError| e.to_string())?;
    let witness = search_counterexample(predicate, args.n).map_err(|e| e.to_string())?;
    match witness {
        None => {
            if args.json {
                println!(
                    "{}",
                    json!({ "predicate": predicate.to_string(), "n": args.n, "witness": null })
                );
            } else {
                println!("no counterexample found at scale n={}", args.n);
            }
            Ok(ExitCode::SUCCESS)
        }
        Some(cx) => {
            if args.json {
                println!(
                    "{}",
                    json!({ "predicate": predicate.to_string(), "n": args.n, "witness": cx })
                );
            } else {
                println!("counterexample found at scale n={}:", args.n);
                println!("{}", serde_json::to_string(&cx).map_err(|e| e.to_string())?);
            }
            Ok(ExitCode::from(1))
        }
    }
}

// --------------------------------------------------------------- realline

fn run_realline(cmd: ReallineCmd) -> Result<ExitCode, String> {
    match cmd {
        ReallineCmd::Closure { topology, set, json } => {
            let t = parse_line_topology(&topology)?;
            let a = parse_line_set(&set)?;
            let out = t.closure(&a);
            if json {
                println!("{}", json!({ "result": out.to_string() }));
            } else {
                println!("{out}");
            }
            Ok(ExitCode::SUCCESS)
        }
        ReallineCmd::Interior { topology, set, json } => {
            let t = parse_line_topology(&topology)?;
            let a = parse_line_set(&set)?;
            let out = t.interior(&a);
            if json {
                println!("{}", json!({ "result": out.to_string() }));
            } else {
                println!("{out}");
            }
            Ok(ExitCode::SUCCESS)
        }
        ReallineCmd::Compare { a, b, json } => {
            let (ta, tb) = (parse_line_topology(&a)?, parse_line_topology(&b)?);
            let order = line_compare(&ta, &tb);
            if json {
                println!("{}", json!({ "result": order.to_string() }));
            } else {
                println!("{order}");
            }
            Ok(ExitCode::SUCCESS)
        }
        ReallineCmd::PiCompat { a, b, json, strict } => {
            let (ta, tb) = (parse_line_topology(&a)?, parse_line_topology(&b)?);
            Ok(emit_bool(rl_are_pi_compatible(&ta, &tb), json, strict))
        }
        ReallineCmd::Admissible { a, b, json, strict } => {
            let (ta, tb) = (parse_line_topology(&a)?, parse_line_topology(&b)?);
            let answer = rl_is_admissible_extension(&ta, &tb).map_err(|e| e.to_string())?;
            Ok(emit_bool(answer, json, strict))
        }
        ReallineCmd::Semiopen { topology, set, json, strict } => {
            let t = parse_line_topology(&topology)?;
            let a = parse_line_set(&set)?;
            Ok(emit_bool(t.is_semi_open(&a), json, strict))
        }
        ReallineCmd::Clopen { a, json } => {
            let set = parse_line_set(&a)?;
            let witness = hattori_clopen_witness(&set);
            match (&witness, json) {
                (Some(w), true) => println!("{}", json!({ "witness": w.to_string() })),
                (Some(w), false) => println!("{w}"),
                (None, true) => println!("{}", json!({ "witness": null })),
                (None, false) => println!("none"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

// ------------------------------------------------------------------ group

fn parse_base_members(lists: &[String], n: usize) -> Result<Vec<PointSet>, String> {
    let mut members = Vec::with_capacity(lists.len());
    for list in lists {
        let m = parse_points(list)?;
        ensure_carrier(m, n, "--base member")?;
        members.push(m);
    }
    Ok(members)
}

fn run_group(cmd: GroupCmd) -> Result<ExitCode, String> {
    match cmd {
        GroupCmd::Classify { group, input, json } => {
            let g = load_group(&group)?;
            let t = load_space(&input)?;
            let class = classify(&g, &t).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&class).map_err(|e| e.to_string())?);
            } else {
                println!("left translations continuous: {}", class.left_translations_continuous);
                println!("right translations continuous: {}", class.right_translations_continuous);
                println!("multiplication continuous: {}", class.multiplication_continuous);
                println!("inversion continuous: {}", class.inversion_continuous);
                println!("verdict: {}", styled(&class.verdict.to_string()));
            }
            Ok(ExitCode::SUCCESS)
        }
        GroupCmd::Almost { group, input, gamma, base, json, strict } => {
            let g = load_group(&group)?;
            let t = load_space(&input)?;
            let gm = load_space(&gamma)?;
            let beta_e = parse_base_members(&base, g.order())?;
            let report = is_almost_topological(&g, &t, &gm, &beta_e).map_err(|e| e.to_string())?;
            if json {
                let failure = report
                    .failure
                    .as_ref()
                    .map(|(clause, note)| json!({ "clause": clause.to_string(), "note": note }));
                println!("{}", json!({ "holds": report.holds, "failure": failure }));
            } else {
                println!("{}", report.holds);
                if let Some((clause, note)) = &report.failure {
                    println!("first failure: {clause}: {note}");
                }
            }
            Ok(if strict && !report.holds { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        GroupCmd::Hattori { group, input, gamma, base, a, force, json } => {
            let g = load_group(&group)?;
            let t = load_space(&input)?;
            let gm = load_space(&gamma)?;
            let beta_e = parse_base_members(&base, g.order())?;
            let set_a = parse_points(&a)?;
            ensure_carrier(set_a, g.order(), "--a")?;
            let built =
                group_hattori(&g, &t, &gm, &beta_e, set_a, force).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    json!({ "valid": built.valid, "note": built.note, "space": built.space })
                );
            } else {
                println!("valid: {}", built.valid);
                if let Some(note) = &built.note {
                    println!("note: {note}");
                }
                emit_space(&built.space, false)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
