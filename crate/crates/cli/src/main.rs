use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use dsr_core::classes::{build_cotree, Evidence};
use dsr_core::gen::{self, Family};
use dsr_core::io;
use dsr_core::kernel::{fpt_ds_solve_with, reduce_r1};
use dsr_core::reductions::{self, split_partition, Reduced, SplitPartition};
use dsr_core::solver::{self, Strategy};
use dsr_core::tar::SequenceError;
use dsr_core::{classify, Classification, Error, Instance, Oracle, TarSequence, VertexSet};

#[derive(Parser)]
#[command(name = "optdsr", version, about = "Dominating set reconfiguration under the TAR rule")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance; exits 0 on yes, 1 on no
    Solve(SolveArgs),
    /// Replay a sequence; exits 0 if every step is legal
    Validate { instance: PathBuf, sequence: PathBuf },
    /// Generate an instance
    Gen(GenArgs),
    /// Apply preprocessing and rule R1, writing the kernel and a JSON-lines log
    Kernelize {
        instance: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Build a hardness-construction instance and a JSON name map
    Reduce(ReduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Oracle,
    FptDs,
    FptVc,
    Class,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Oracle => Strategy::Oracle,
            StrategyArg::FptDs => Strategy::FptDs,
            StrategyArg::FptVc => Strategy::FptVc,
            StrategyArg::Class => Strategy::Class,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    /// `forest`, `cograph`, or an interval model (`<id> <left> <right>` lines)
    #[arg(long)]
    evidence: Option<PathBuf>,
    /// Write the witness sequence here on a yes verdict
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Largest graph the exhaustive search accepts (at most 63)
    #[arg(long, default_value_t = dsr_core::oracle::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Bound on intermediate sets; defaults to one above the start size
    #[arg(long, global = true)]
    k: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    s: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Connected G(n, p)
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Random recursive tree
    Tree {
        #[arg(long)]
        n: usize,
    },
    /// Split graph with clique `1..=clique`
    Split {
        #[arg(long)]
        clique: usize,
        #[arg(long)]
        independent: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// `(G, |V|, s, V)` for a graph file
    FromDs { graph: PathBuf },
}

#[derive(Args)]
struct ReduceArgs {
    #[command(subcommand)]
    kind: ReduceKind,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Write the vertex name map as JSON here
    #[arg(long, global = true)]
    names: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Vertex cover reconfiguration to a split graph
    VcrSplit { vcr: PathBuf },
    /// Vertex cover reconfiguration with a triangle per edge
    VcrGadget { vcr: PathBuf },
    /// Split graph instance to a bipartite one
    SplitBipartite {
        instance: PathBuf,
        /// Clique side as 1-based ids; detected from degrees when omitted
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
    },
    /// Dominating Set (G, k') to OPT-DSR
    DsW2 {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CliResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn in_file<T>(path: &Path, r: dsr_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::CapExceeded { .. } => Failure::from(e),
        e => input_error(format!("{}: {e}", path.display())),
    })
}

fn set_line(s: &VertexSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn load_evidence(path: &Path, inst: &Instance) -> Result<Evidence, Failure> {
    let text = read(path)?;
    let keyword =
        text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    match keyword {
        "forest" => Ok(Evidence::Forest),
        "cograph" => Ok(Evidence::Cotree(in_file(path, build_cotree(&inst.graph))?)),
        _ => Ok(Evidence::Interval(in_file(path, io::parse_interval_model(&text))?)),
    }
}

fn cmd_solve(args: SolveArgs) -> CliResult {
    let inst = in_file(&args.instance, io::parse_instance(&read(&args.instance)?))?;
    let evidence = args.evidence.as_deref().map(|p| load_evidence(p, &inst)).transpose()?;
    let oracle = Oracle::with_cap(args.cap);
    let (mut sol, route) = solver::solve(&inst, args.strategy.into(), evidence.as_ref(), &oracle)?;
    if sol.is_yes() && sol.witness.is_none() && args.witness.is_some() {
        // the class solvers only certify existence; recover a sequence
        match fpt_ds_solve_with(&inst, &oracle) {
            Ok(found) if found.is_yes() => sol = found,
            Ok(_) => eprintln!("no witness written: the kernel solver disagrees"),
            Err(e) => eprintln!("no witness written: {e}"),
        }
    }
    match &sol.target {
        Some(target) => {
            println!("verdict yes");
            println!("target {}", set_line(target));
        }
        None => println!("verdict no"),
    }
    println!("route {route}");
    if let Some(w) = &sol.witness {
        println!("witness-length {}", w.len());
        if let Some(path) = &args.witness {
            write_out(Some(path), &io::write_sequence(w))?;
        }
    }
    Ok(if sol.is_yes() { 0 } else { 1 })
}

fn step_of(e: &SequenceError) -> Option<usize> {
    match *e {
        SequenceError::IllegalMove(i)
        | SequenceError::NotDominatingAtStep(i)
        | SequenceError::SizeExceededAtStep(i) => Some(i),
        _ => None,
    }
}

fn cmd_validate(instance: &Path, sequence: &Path) -> CliResult {
    let inst = in_file(instance, io::parse_instance(&read(instance)?))?;
    let seq: TarSequence = in_file(sequence, io::parse_sequence(&read(sequence)?, inst.n()))?;
    match inst.validate(&seq) {
        Ok(last) => {
            println!("valid");
            println!("final {}", set_line(&last));
            Ok(0)
        }
        Err(e) => {
            match step_of(&e) {
                Some(i) => eprintln!("invalid at move {} ({}): {e}", i + 1, seq.moves()[i]),
                None => eprintln!("invalid: {e}"),
            }
            println!("invalid");
            Ok(1)
        }
    }
}

fn cmd_gen(args: GenArgs) -> CliResult {
    let inst = match args.family {
        GenFamily::Random { n, p } => {
            gen::generate(&Family::Random { n, p }, args.k, args.s, args.seed)?
        }
        GenFamily::Tree { n } => gen::generate(&Family::Tree { n }, args.k, args.s, args.seed)?,
        GenFamily::Split { clique, independent, p } => {
            gen::generate(&Family::Split { clique, independent, p }, args.k, args.s, args.seed)?
        }
        GenFamily::FromDs { graph } => {
            let g = in_file(&graph, io::parse_graph(&read(&graph)?))?;
            gen::from_ds(g, args.s)
        }
    };
    write_out(args.output.as_deref(), &io::write_instance(&inst))?;
    Ok(0)
}

fn move_json(m: dsr_core::Move) -> Value {
    json!({ "event": "move", "move": format!("{}", m.map_vertex(|v| v + 1)) })
}

fn cmd_kernelize(instance: &Path, output: Option<&Path>, log: Option<&Path>) -> CliResult {
    let inst = in_file(instance, io::parse_instance(&read(instance)?))?;
    let mut events = Vec::new();
    let kernel_inst = match classify(&inst)? {
        Classification::Proceed { instance: reduced, prefix } => {
            events.extend(prefix.iter().map(move_json));
            let kernel = reduce_r1(&reduced)?;
            events.extend(kernel.prefix.iter().map(move_json));
            for &(r, l) in &kernel.removed {
                events.push(json!({ "event": "r1", "removed": r + 1, "kept": l + 1 }));
            }
            let original: Vec<usize> = kernel.original.iter().map(|v| v + 1).collect();
            events.push(json!({ "event": "relabel", "original": original }));
            kernel.instance
        }
        decided => {
            let verdict = if decided.solution().is_some_and(|s| s.is_yes()) { "yes" } else { "no" };
            events.push(json!({ "event": "decided", "verdict": verdict }));
            inst
        }
    };
    write_out(output, &io::write_instance(&kernel_inst))?;
    let lines: String = events.iter().map(|e| format!("{e}\n")).collect();
    match log {
        Some(p) => write_out(Some(p), &lines)?,
        None => eprint!("{lines}"),
    }
    Ok(0)
}

fn names_json(r: &Reduced) -> String {
    let mut vertices = Map::new();
    for (i, name) in r.names.iter().enumerate() {
        vertices.insert((i + 1).to_string(), Value::from(name.clone()));
    }
    let mut gadgets = Map::new();
    for (w, rep) in r.gadgets.iter() {
        gadgets.insert((w + 1).to_string(), Value::from(rep + 1));
    }
    let map = json!({ "vertices": vertices, "gadgets": gadgets });
    format!("{}\n", serde_json::to_string_pretty(&map).expect("plain JSON values"))
}

fn cmd_reduce(args: ReduceArgs) -> CliResult {
    let reduced = match args.kind {
        ReduceKind::VcrSplit { vcr } => {
            let src = in_file(&vcr, io::parse_vcr_instance(&read(&vcr)?))?;
            reductions::vcr_to_split(&src)?
        }
        ReduceKind::VcrGadget { vcr } => {
            let src = in_file(&vcr, io::parse_vcr_instance(&read(&vcr)?))?;
            reductions::vcr_to_gadget(&src)?
        }
        ReduceKind::SplitBipartite { instance, clique } => {
            let src = in_file(&instance, io::parse_instance(&read(&instance)?))?;
            let n = src.n();
            let partition = match clique {
                Some(ids) => {
                    if let Some(&bad) = ids.iter().find(|&&v| v == 0 || v > n) {
                        return Err(input_error(format!("clique vertex {bad} outside 1..={n}")));
                    }
                    let clique: VertexSet = ids.iter().map(|v| v - 1).collect();
                    let independent = VertexSet::full(n).difference(&clique);
                    SplitPartition { clique, independent }
                }
                None => split_partition(&src.graph).ok_or_else(|| {
                    input_error(format!("{}: not a split graph", instance.display()))
                })?,
            };
            reductions::split_to_bipartite(&src, &partition)?
        }
        ReduceKind::DsW2 { graph, k } => {
            let g = in_file(&graph, io::parse_graph(&read(&graph)?))?;
            reductions::ds_to_optdsr_w2(&g, k)?
        }
    };
    write_out(args.output.as_deref(), &io::write_instance(&reduced.instance))?;
    if let Some(p) = &args.names {
        write_out(Some(p), &names_json(&reduced))?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Validate { instance, sequence } => cmd_validate(&instance, &sequence),
        Command::Gen(args) => cmd_gen(args),
        Command::Kernelize { instance, output, log } => {
            cmd_kernelize(&instance, output.as_deref(), log.as_deref())
        }
        Command::Reduce(args) => cmd_reduce(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
