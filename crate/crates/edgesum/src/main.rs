//! Minimum-sum proper edge colorings from the command line: approximation
//! for regular graphs, an exact branch-and-bound oracle, split-graph
//! bounds, dominant-side sequential colorings, verification, instance
//! generation, and a benchmark corpus.
//!
//! Exit codes: 0 success, 1 internal error, 2 precondition failure,
//! 3 budget exhausted before the exact search could certify optimality.

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgesum::budget::WallClock;
use edgesum::report::{self, BenchRow, BENCH_HEADER};
use edgesum::{dimacs, gen, json, Error, Result};
use edgesum_core::approx::{self, Rational};
use edgesum_core::solver::{exact_sum, general_lower_bound, Unlimited};
use edgesum_core::split::{split_color, Condition};
use edgesum_core::{verify_coloring, EdgeColoring, Graph, Side};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const GEN_GRAMMAR: &str = "generator specs: complete:<n>, cycle:<n>, petersen, \
random-regular:<n>,<r>, bipartite-dominant:<u>,<w>, \
split:<clique>,<independent>[,thm10|thm11]";

#[derive(Parser)]
#[command(
    name = "edgesum",
    version,
    about = "minimum-sum proper edge colorings",
    after_help = GEN_GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a regular graph and certify the approximation guarantee.
    Approx(SolveArgs),
    /// Find the exact minimum color sum by branch and bound.
    Exact(SolveArgs),
    /// Bound and color a split graph under a degree condition.
    Split(SolveArgs),
    /// Sequentially color the U side of a degree-dominant bipartite graph.
    Useq(SolveArgs),
    /// Check a coloring document against a graph.
    Verify(VerifyArgs),
    /// Emit a generated instance as a graph document.
    Gen(GenArgs),
    /// Run the fixed benchmark corpus and emit CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file: a JSON graph document or a DIMACS .col file.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Generator spec instead of a file; see the grammar below.
    #[arg(long, value_name = "SPEC")]
    gen: Option<String>,
    /// Seed for --gen.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Wall-clock budget for the exact search, in milliseconds.
    #[arg(long, value_name = "MS")]
    budget_ms: Option<u64>,
    /// Force the split condition: thm10 or thm11.
    #[arg(long, value_name = "COND")]
    condition: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file: a JSON graph document or a DIMACS .col file.
    #[arg(long, value_name = "PATH")]
    graph: PathBuf,
    /// Coloring document to check.
    #[arg(long, value_name = "PATH")]
    coloring: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec; see the grammar below.
    #[arg(long, value_name = "SPEC")]
    gen: String,
    /// Seed for the generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json keeps partition metadata; dimacs drops it.
    #[arg(long, value_enum, default_value_t = GenOutput::Json)]
    format: GenOutput,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenOutput {
    Json,
    Dimacs,
}

#[derive(Args)]
struct BenchArgs {
    /// Base seed for the generated corpus rows.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget per exact-oracle column, in milliseconds.
    #[arg(long, value_name = "MS", default_value_t = 10_000)]
    budget_ms: u64,
    /// The benchmark emits CSV only.
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Core(edgesum_core::Error::Internal(_)) | Error::GenerationFailed(_) => 1,
        _ => 2,
    }
}

fn run() -> Result<u8> {
    match Cli::parse().command {
        Command::Approx(a) => cmd_approx(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Split(a) => cmd_split(a),
        Command::Useq(a) => cmd_useq(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

/// Reads a graph file, sniffing JSON documents by their leading brace.
fn load_file(path: &Path) -> Result<gen::Instance> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let (graph, bipartition, split) = json::GraphDoc::parse(&text)?.into_parts()?;
        Ok(gen::Instance {
            graph,
            bipartition,
            split,
        })
    } else {
        Ok(gen::Instance {
            graph: dimacs::parse(&text)?,
            bipartition: None,
            split: None,
        })
    }
}

fn load_instance(a: &SolveArgs) -> Result<gen::Instance> {
    match (&a.input, &a.gen) {
        (Some(path), None) => load_file(path),
        (None, Some(spec)) => gen::realize(&gen::parse_spec(spec)?, a.seed),
        _ => Err(Error::Usage("provide exactly one of --input and --gen")),
    }
}

fn write_out(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Every coloring a command emits goes through this last look.
fn ensure_proper(g: &Graph, c: &EdgeColoring) -> Result<()> {
    let rep = verify_coloring(g, c)?;
    if !rep.proper {
        return Err(Error::Core(edgesum_core::Error::Internal(
            "constructed coloring failed re-verification",
        )));
    }
    Ok(())
}

fn reject(flag: bool, what: &'static str) -> Result<()> {
    if flag {
        return Err(Error::Usage(what));
    }
    Ok(())
}

fn cmd_approx(a: SolveArgs) -> Result<u8> {
    reject(a.budget_ms.is_some(), "--budget-ms applies to exact and bench")?;
    reject(a.condition.is_some(), "--condition applies to split")?;
    let inst = load_instance(&a)?;
    let rep = approx::approx_sum_regular(&inst.graph).map_err(|e| match e {
        edgesum_core::Error::NotRegular => {
            Error::Usage("regularity required: every vertex must have the same degree")
        }
        other => Error::Core(other),
    })?;
    ensure_proper(&inst.graph, &rep.coloring)?;
    let text = match a.format {
        Format::Text => report::approx_text(&rep),
        Format::Json => json::render(&json::ApproxDoc::new(&rep))?,
    };
    write_out(&a.output, &text)?;
    Ok(0)
}

fn cmd_exact(a: SolveArgs) -> Result<u8> {
    reject(a.condition.is_some(), "--condition applies to split")?;
    let inst = load_instance(&a)?;
    let res = match a.budget_ms {
        Some(ms) => exact_sum(&inst.graph, &mut WallClock::from_ms(ms)),
        None => exact_sum(&inst.graph, &mut Unlimited),
    };
    ensure_proper(&inst.graph, &res.coloring)?;
    let text = match a.format {
        Format::Text => report::solve_text(&res),
        Format::Json => json::render(&json::SolveDoc::new(&res))?,
    };
    write_out(&a.output, &text)?;
    Ok(if res.optimal { 0 } else { 3 })
}

fn cmd_split(a: SolveArgs) -> Result<u8> {
    reject(a.budget_ms.is_some(), "--budget-ms applies to exact and bench")?;
    let forced = match &a.condition {
        Some(s) => Some(
            json::parse_condition(s).ok_or(Error::Usage("condition must be thm10 or thm11"))?,
        ),
        None => None,
    };
    let inst = load_instance(&a)?;
    let sd = inst.split.as_ref().ok_or(Error::Usage(
        "split partition required: use a JSON split_partition or --gen split:...",
    ))?;
    let rep = split_color(&inst.graph, sd, forced)?;
    ensure_proper(&inst.graph, &rep.coloring)?;
    let text = match a.format {
        Format::Text => report::split_text(&rep),
        Format::Json => json::render(&json::SplitDoc::new(&rep))?,
    };
    write_out(&a.output, &text)?;
    Ok(0)
}

fn cmd_useq(a: SolveArgs) -> Result<u8> {
    reject(a.budget_ms.is_some(), "--budget-ms applies to exact and bench")?;
    reject(a.condition.is_some(), "--condition applies to split")?;
    let inst = load_instance(&a)?;
    let bp = inst.bipartition.as_ref().ok_or(Error::Usage(
        "bipartition required: use a JSON bipartition or --gen bipartite-dominant:...",
    ))?;
    let coloring = edgesum_core::sequential::u_sequential_color(&inst.graph, bp, Side::U)?;
    ensure_proper(&inst.graph, &coloring)?;
    let targets: Vec<usize> = bp.vertices_on(Side::U).collect();
    if !edgesum_core::sequential::is_sequential(&inst.graph, &coloring, &targets)? {
        return Err(Error::Core(edgesum_core::Error::Internal(
            "sequential coloring failed its own audit",
        )));
    }
    let text = match a.format {
        Format::Text => report::sequential_text(&coloring, &targets),
        Format::Json => json::render(&json::ColoringDoc::with_sequential(&coloring, targets))?,
    };
    write_out(&a.output, &text)?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let inst = load_file(&a.graph)?;
    let doc = json::ColoringDoc::parse(&fs::read_to_string(&a.coloring)?)?;
    let coloring = doc.coloring()?;
    let rep = verify_coloring(&inst.graph, &coloring)?;
    let text = match a.format {
        Format::Text => report::verify_text(&rep),
        Format::Json => json::render(&json::VerifyDoc::new(&rep))?,
    };
    write_out(&a.output, &text)?;
    Ok(0)
}

fn cmd_gen(a: GenArgs) -> Result<u8> {
    let inst = gen::realize(&gen::parse_spec(&a.gen)?, a.seed)?;
    let text = match a.format {
        GenOutput::Json => json::render(&json::GraphDoc::from_parts(
            &inst.graph,
            inst.bipartition.as_ref(),
            inst.split.as_ref(),
        ))?,
        GenOutput::Dimacs => dimacs::write(&inst.graph),
    };
    write_out(&a.output, &text)?;
    Ok(0)
}

/// One benchmark instance to evaluate.
enum Job {
    Complete { n: usize },
    Cubic { n: usize, seed: u64 },
    Split { condition: Condition, clique: usize, independent: usize, seed: u64 },
}

fn oracle(g: &Graph, budget_ms: u64) -> Option<u64> {
    let res = exact_sum(g, &mut WallClock::from_ms(budget_ms));
    res.optimal.then_some(res.sum)
}

fn int_rational(x: u64) -> Rational {
    Rational::from_integer(x as i64)
}

fn run_job(job: &Job, budget_ms: u64) -> Result<BenchRow> {
    match *job {
        Job::Complete { n } => {
            let g = Graph::complete(n);
            let achieved = approx::kn_optimal_coloring(n)?.sum();
            let closed = approx::kn_exact_sum(n);
            let exact = oracle(&g, budget_ms);
            let ratio = match exact {
                Some(e) => Rational::new(achieved as i64, e as i64),
                None => int_rational(achieved) / int_rational(general_lower_bound(&g)),
            };
            Ok(BenchRow {
                family: "complete".into(),
                n,
                m: g.edge_count(),
                r_or_delta: n - 1,
                lower_bound: format!("{}/1", general_lower_bound(&g)),
                achieved_sum: achieved,
                exact_sum: exact,
                formula_upper: format!("{closed}/1"),
                ratio: json::rational_string(ratio),
                pass: achieved == closed && exact.is_none_or(|e| e == closed),
            })
        }
        Job::Cubic { n, seed } => {
            let inst = gen::realize(&gen::GenSpec::RandomRegular { n, r: 3 }, seed)?;
            let rep = approx::approx_sum_regular(&inst.graph)?;
            let exact = oracle(&inst.graph, budget_ms);
            let achieved = int_rational(rep.achieved_sum);
            let ratio = match exact {
                Some(e) => achieved / int_rational(e),
                None => achieved / rep.lower_bound,
            };
            Ok(BenchRow {
                family: "cubic".into(),
                n,
                m: inst.graph.edge_count(),
                r_or_delta: 3,
                lower_bound: json::rational_string(rep.lower_bound),
                achieved_sum: rep.achieved_sum,
                exact_sum: exact,
                formula_upper: json::rational_string(rep.formula_upper),
                ratio: json::rational_string(ratio),
                pass: achieved <= rep.formula_upper
                    && exact.is_none_or(|e| achieved / int_rational(e) <= approx::ratio_bound(3)),
            })
        }
        Job::Split { condition, clique, independent, seed } => {
            let inst = gen::realize(
                &gen::GenSpec::Split { clique, independent, condition },
                seed,
            )?;
            let sd = inst.split.as_ref().expect("split family carries its partition");
            let rep = split_color(&inst.graph, sd, Some(condition))?;
            let exact = oracle(&inst.graph, budget_ms);
            let achieved = rep.coloring.sum();
            let lower = general_lower_bound(&inst.graph);
            let ratio = match exact {
                Some(e) => Rational::new(achieved as i64, e as i64),
                None => int_rational(achieved) / int_rational(lower),
            };
            Ok(BenchRow {
                family: format!("split-{}", json::condition_token(condition)),
                n: inst.graph.vertex_count(),
                m: inst.graph.edge_count(),
                r_or_delta: inst.graph.max_degree(),
                lower_bound: format!("{lower}/1"),
                achieved_sum: achieved,
                exact_sum: exact,
                formula_upper: format!("{}/1", rep.bound),
                ratio: json::rational_string(ratio),
                pass: achieved == rep.bound && exact.is_none_or(|e| e <= rep.bound),
            })
        }
    }
}

fn cmd_bench(a: BenchArgs) -> Result<u8> {
    if a.format != "csv" {
        return Err(Error::Usage("bench emits csv only"));
    }
    let mut jobs = Vec::new();
    for n in 2..=7 {
        jobs.push(Job::Complete { n });
    }
    for n in [4, 6, 8, 10] {
        for _ in 0..3 {
            jobs.push(Job::Cubic {
                n,
                seed: a.seed.wrapping_mul(1_000).wrapping_add(jobs.len() as u64),
            });
        }
    }
    for condition in [Condition::CliqueDominant, Condition::IndependentDominant] {
        for clique in [2, 3, 4] {
            jobs.push(Job::Split {
                condition,
                clique,
                independent: clique.min(3),
                seed: a.seed.wrapping_mul(1_000).wrapping_add(jobs.len() as u64),
            });
        }
    }
    // Rows are independent; compute them concurrently but emit in corpus
    // order.
    let rows: Vec<Result<BenchRow>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|job| scope.spawn(move || run_job(job, a.budget_ms)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or(Err(Error::Core(edgesum_core::Error::Internal(
                    "benchmark row panicked",
                ))))
            })
            .collect()
    });
    let mut text = String::from(BENCH_HEADER);
    text.push('\n');
    for row in rows {
        text.push_str(&row?.csv());
        text.push('\n');
    }
    write_out(&a.output, &text)?;
    Ok(0)
}
