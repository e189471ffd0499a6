use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use mine::classifier::classify;
use mine::error::Error;
use mine::generate::{self, Family};
use mine::geometry::Drawing;
use mine::instance::{evaluate, EnergyInstance};
use mine::io::{
    parse_instance, parse_solution, parse_wcnf3, render_svg, serialize_assignment, serialize_instance,
    serialize_solution, serialize_wcnf3,
};
use mine::reductions::{
    klabel_sigma, planar_sigma, planarize, qpbo_to_klabel, verify_ap_reduction, w3sat_sigma, w3sat_to_qpbo,
    ApReduction, ApReport, DrawnInstance, Identity, Planarize, QpboToKlabel, ReductionKind, ReductionTrace, W3SatTriv,
    W3satToQpbo, DEFAULT_ENUMERATION_LIMIT,
};
use mine::solvers::{
    alpha_expansion, min_degree_order, solve_brute_force_with_limit, solve_elimination, solve_submodular_qpbo,
    solve_tree_dp, Method, DEFAULT_BRUTE_LIMIT,
};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

/// Pairwise discrete energy minimization: reductions, solvers and
/// complexity classification.
#[derive(Parser)]
#[command(name = "mine", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionName {
    #[value(name = "w3sat-to-qpbo")]
    W3satToQpbo,
    #[value(name = "qpbo-to-klabel")]
    QpboToKlabel,
    Planarize,
    Identity,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a reduction and write the target instance.
    Reduce {
        reduction: ReductionName,
        input: PathBuf,
        output: PathBuf,
        /// Label count of the target (qpbo-to-klabel only).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Map a target solution back through the reduction recorded in a trace.
    Sigma {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        input: PathBuf,
    },
    /// Minimize an instance.
    Solve {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        input: PathBuf,
        /// Also write the solution file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report structure flags, interaction flags and the complexity verdict.
    Classify {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a reduction exhaustively on every instance of a corpus directory.
    VerifyAp {
        #[arg(long)]
        reduction: ReductionName,
        #[arg(long)]
        corpus: PathBuf,
        /// Ratio slack as an integer or num/den.
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Generate seeded instances.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output file (count 1) or directory; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of nodes, or of variables for w3sat.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Draw the straight-line embedding and its crossings as SVG.
    Plot {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Failures that are the caller's fault but not a parse problem.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A verification run that found counterexamples.
#[derive(Debug)]
struct CounterexampleFound(usize);

impl std::fmt::Display for CounterexampleFound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} counterexample(s) found", self.0)
    }
}

impl std::error::Error for CounterexampleFound {}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<Usage>() {
            return EXIT_USAGE;
        }
        if cause.is::<CounterexampleFound>() {
            return EXIT_COUNTEREXAMPLE;
        }
        if let Some(err) = cause.downcast_ref::<Error>() {
            return if err.is_precondition() || matches!(err, Error::MissingCoordinate(_)) {
                EXIT_PRECONDITION
            } else {
                EXIT_PARSE
            };
        }
    }
    EXIT_PARSE
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_instance(path: &Path) -> anyhow::Result<(EnergyInstance, Option<Drawing>)> {
    parse_instance(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_formula(path: &Path) -> anyhow::Result<W3SatTriv> {
    parse_wcnf3(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn require_drawing(d: Option<Drawing>, path: &Path) -> anyhow::Result<Drawing> {
    d.ok_or(Error::MissingCoordinate(0)).with_context(|| format!("{} has no coordinates", path.display()))
}

fn brute_limit() -> anyhow::Result<u64> {
    match std::env::var("MINE_BRUTE_LIMIT") {
        Ok(v) => {
            v.trim().parse().map_err(|_| anyhow!(Usage(format!("MINE_BRUTE_LIMIT must be an integer, got `{v}`"))))
        }
        Err(_) => Ok(DEFAULT_BRUTE_LIMIT),
    }
}

fn reduce(
    reduction: ReductionName,
    input: &Path,
    output: &Path,
    k: Option<usize>,
    trace_path: Option<&Path>,
) -> anyhow::Result<String> {
    let (target, drawing, trace) = match reduction {
        ReductionName::W3satToQpbo => {
            let (t, tr) = w3sat_to_qpbo(&load_formula(input)?)?;
            (t, None, tr)
        }
        ReductionName::QpboToKlabel => {
            let k = k.ok_or_else(|| anyhow!(Usage("qpbo-to-klabel needs --k".into())))?;
            let (t, tr) = qpbo_to_klabel(&load_instance(input)?.0, k)?;
            (t, None, tr)
        }
        ReductionName::Planarize => {
            let (i, d) = load_instance(input)?;
            let (t, d, tr) = planarize(&i, &require_drawing(d, input)?)?;
            (t, Some(d), tr)
        }
        ReductionName::Identity => {
            let (i, d) = load_instance(input)?;
            let (t, tr) = Identity.forward(&i)?;
            (t, d, tr)
        }
    };
    write(output, &serialize_instance(&target, drawing.as_ref())?)?;
    if let Some(p) = trace_path {
        write(p, &trace.to_json())?;
    }
    Ok(format!(
        "nodes {}\nedges {}\nauxiliary {}\ncrossings {}\n",
        target.num_nodes(),
        target.num_edges(),
        trace.aux_nodes.len(),
        trace.crossings.len()
    ))
}

fn sigma(trace: &Path, solution: &Path, input: &Path) -> anyhow::Result<String> {
    let trace = ReductionTrace::from_json(&read(trace)?)?;
    let (y, _) = parse_solution(&read(solution)?).with_context(|| format!("in {}", solution.display()))?;
    Ok(match trace.kind {
        ReductionKind::W3satToQpbo => {
            let s = load_formula(input)?;
            let x = w3sat_sigma(&s, &trace, &y)?;
            serialize_assignment(&x, s.measure(&x))
        }
        ReductionKind::QpboToKlabel { .. } | ReductionKind::Planarize | ReductionKind::Identity => {
            let (i, _) = load_instance(input)?;
            let x = match trace.kind {
                ReductionKind::QpboToKlabel { .. } => klabel_sigma(&i, &trace, &y)?,
                ReductionKind::Planarize => planar_sigma(&i, &trace, &y)?,
                _ => Identity.sigma(&i, &trace, &y)?,
            };
            let e = evaluate(&i, &x)?;
            serialize_solution(&x, e)
        }
    })
}

fn solve(method: Method, input: &Path, out: Option<&Path>) -> anyhow::Result<String> {
    let (i, _) = load_instance(input)?;
    let mut extra = String::new();
    let result = match method {
        Method::Brute => solve_brute_force_with_limit(&i, brute_limit()?)?,
        Method::Elim => solve_elimination(&i, &min_degree_order(&i))?,
        Method::Tree => solve_tree_dp(&i)?,
        Method::Mincut => solve_submodular_qpbo(&i)?,
        Method::Alphaexp => {
            let r = alpha_expansion(&i, None)?;
            extra = format!("sweeps {}\n", r.sweeps);
            r.result
        }
    };
    if let Some(p) = out {
        write(p, &serialize_solution(&result.labeling, result.value))?;
    }
    let labels: Vec<String> = result.labeling.as_slice().iter().map(|l| l.to_string()).collect();
    Ok(format!(
        "value {}\nlabeling {}\nmethod {}\nexact {}\n{extra}",
        result.value,
        labels.join(" "),
        result.method,
        result.exact
    ))
}

fn corpus_files(dir: &Path, ext: &str) -> anyhow::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("cannot read directory {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    files.retain(|p| p.extension().is_some_and(|e| e == ext));
    files.sort();
    if files.is_empty() {
        bail!(Usage(format!("no .{ext} files in {}", dir.display())));
    }
    Ok(files)
}

fn run_verification<R: ApReduction>(
    r: &R,
    alpha: &BigRational,
    sources: &[R::Source],
    files: &[PathBuf],
) -> anyhow::Result<String> {
    let limit =
        std::env::var("MINE_BRUTE_LIMIT").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ENUMERATION_LIMIT);
    let report = verify_ap_reduction(r, alpha, sources, limit)?;
    let text = render_report(&report, files);
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(anyhow!(CounterexampleFound(report.counterexamples.len())))
    }
}

fn render_report(report: &ApReport, files: &[PathBuf]) -> String {
    let mut out = String::new();
    let show = |v: &Option<mine::cost::ExtendedCost>| v.map_or("none".to_string(), |c| c.to_string());
    for r in &report.instances {
        out += &format!(
            "{} m1* {} m2* {} targets {}{}\n",
            files[r.index].display(),
            show(&r.source_optimum),
            show(&r.target_optimum),
            r.target_solutions,
            if r.ratio_undefined { " ratio-undefined" } else { "" }
        );
    }
    for c in &report.counterexamples {
        let y = c
            .target_solution
            .as_ref()
            .map_or("-".to_string(), |y| y.as_slice().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
        out += &format!("counterexample {} {:?} y [{y}]: {}\n", files[c.instance].display(), c.check, c.detail);
    }
    out += &format!(
        "{} {} instances, {} counterexamples, {} ratio-undefined\n",
        if report.passed() { "PASS" } else { "FAIL" },
        report.instances.len(),
        report.counterexamples.len(),
        report.ratio_undefined_count()
    );
    out
}

fn verify_ap(reduction: ReductionName, corpus: &Path, alpha: &str, k: usize) -> anyhow::Result<String> {
    let alpha: BigRational = alpha.parse().map_err(|_| anyhow!(Usage(format!("invalid --alpha `{alpha}`"))))?;
    match reduction {
        ReductionName::W3satToQpbo => {
            let files = corpus_files(corpus, "wcnf3")?;
            let sources = files.iter().map(|f| load_formula(f)).collect::<anyhow::Result<Vec<_>>>()?;
            run_verification(&W3satToQpbo, &alpha, &sources, &files)
        }
        ReductionName::QpboToKlabel => {
            let files = corpus_files(corpus, "mine")?;
            let sources = files.iter().map(|f| Ok(load_instance(f)?.0)).collect::<anyhow::Result<Vec<_>>>()?;
            run_verification(&QpboToKlabel { k }, &alpha, &sources, &files)
        }
        ReductionName::Planarize => {
            let files = corpus_files(corpus, "mine")?;
            let sources = files
                .iter()
                .map(|f| {
                    let (instance, d) = load_instance(f)?;
                    Ok(DrawnInstance { instance, drawing: require_drawing(d, f)? })
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            run_verification(&Planarize, &alpha, &sources, &files)
        }
        ReductionName::Identity => {
            let files = corpus_files(corpus, "mine")?;
            let sources = files.iter().map(|f| Ok(load_instance(f)?.0)).collect::<anyhow::Result<Vec<_>>>()?;
            run_verification(&Identity, &alpha, &sources, &files)
        }
    }
}

fn generate_one(family: Family, rng: &mut rand_chacha::ChaCha8Rng, size: Option<usize>) -> anyhow::Result<String> {
    Ok(match family {
        Family::W3sat => {
            let n = size.unwrap_or(5).max(3);
            serialize_wcnf3(&generate::random_w3sat_with_vars(rng, n, 4, 2))
        }
        Family::Potts => serialize_instance(&generate::random_potts(rng, size.unwrap_or(6), 3, 4), None)?,
        Family::Submodular => serialize_instance(&generate::random_submodular(rng, size.unwrap_or(8), 6), None)?,
        Family::Random3Label => {
            let (i, d) = generate::random_three_label_drawn(rng, size.unwrap_or(6), 1, 3)?;
            serialize_instance(&i, Some(&d))?
        }
    })
}

fn gen(family: Family, seed: u64, count: usize, out: Option<&Path>, size: Option<usize>) -> anyhow::Result<String> {
    let mut rng = generate::rng(seed);
    let ext = if family == Family::W3sat { "wcnf3" } else { "mine" };
    match (count, out) {
        (0, _) => bail!(Usage("--count must be positive".into())),
        (1, None) => generate_one(family, &mut rng, size),
        (1, Some(p)) if !p.is_dir() => {
            write(p, &generate_one(family, &mut rng, size)?)?;
            Ok(String::new())
        }
        (_, None) => bail!(Usage("--count above 1 needs --out DIR".into())),
        (_, Some(dir)) => {
            fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            let mut listing = String::new();
            for idx in 0..count {
                let path = dir.join(format!("{family}-{seed}-{idx:04}.{ext}"));
                write(&path, &generate_one(family, &mut rng, size)?)?;
                listing += &format!("{}\n", path.display());
            }
            Ok(listing)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<String> {
    match cli.command {
        Command::Reduce { reduction, input, output, k, trace } => {
            reduce(reduction, &input, &output, k, trace.as_deref())
        }
        Command::Sigma { trace, solution, input } => sigma(&trace, &solution, &input),
        Command::Solve { method, input, out } => solve(method, &input, out.as_deref()),
        Command::Classify { input, json } => {
            let (i, d) = load_instance(&input)?;
            let report = classify(&i, d.as_ref());
            Ok(if json { report.to_json() + "\n" } else { report.to_string() + "\n" })
        }
        Command::VerifyAp { reduction, corpus, alpha, k } => verify_ap(reduction, &corpus, &alpha, k),
        Command::Gen { family, seed, count, out, size } => gen(family, seed, count, out.as_deref(), size),
        Command::Plot { input, out } => {
            let (i, d) = load_instance(&input)?;
            write(&out, &render_svg(&i, &require_drawing(d, &input)?)?)?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
