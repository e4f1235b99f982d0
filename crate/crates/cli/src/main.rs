use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphmub::catalog::{derive_catalog, derive_entry, TRIDIAGONAL_CATALOG};
use graphmub::export::to_dot;
use graphmub::field::is_prime;
use graphmub::walkthrough::{companion_27, tridiagonal_8, Step};
use graphmub::{
    analyze, emit_circuit, mub_set, verify_lemma1, verify_mu_numeric, Bipartition, Error,
    Lemma1Outcome, MethodChoice, MubOptions, MubSet, PolyZp, PrimeModulus, VerifyMode,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUILD: u8 = 3;

/// Seed used by `verify --sample`.
const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "graphmub",
    version,
    about = "Complete sets of mutually unbiased bases from graph states"
)]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a complete set and write its document.
    Gen(GenArgs),
    /// Check a set document: determinant test, optionally numeric overlaps.
    Verify(VerifyArgs),
    /// Entanglement labels, census and the purity identity per bipartition.
    Analyze(AnalyzeArgs),
    /// Render a set document as DOT or circuit text.
    Export(ExportArgs),
    /// Re-derive the catalog of tridiagonal diagonals.
    Tables(TablesArgs),
    /// Replay a worked construction, printing every intermediate matrix.
    Example { name: ExampleName },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Tridiag,
    Companion,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Dot,
    Circuit,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    /// Companion symmetrization over Z_3, dimension 27.
    Companion27,
    /// Tridiagonal construction over Z_2, dimension 8.
    Tridiagonal8,
}

#[derive(Args)]
struct Output {
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(short = 'p')]
    p: u64,
    #[arg(short = 'n')]
    n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Ascending coefficients of a monic irreducible polynomial.
    #[arg(long, value_delimiter = ',')]
    poly: Option<Vec<u64>>,
    /// Diagonal of a tridiagonal generator.
    #[arg(long = "d", value_delimiter = ',')]
    diagonal: Option<Vec<u64>>,
    /// Require a primitive characteristic polynomial.
    #[arg(long)]
    primitive: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Restrict dot or circuit output to one set element.
    #[arg(long)]
    index: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Set document (standard input if omitted).
    input: Option<PathBuf>,
    /// Also compare overlaps of the simulated states.
    #[arg(long)]
    numeric: bool,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Check this many random overlaps instead of all of them.
    #[arg(long)]
    sample: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: Option<PathBuf>,
    /// Qupits of one side of a split, 1-based; all splits if omitted.
    #[arg(long, value_delimiter = ',')]
    bipartition: Option<Vec<usize>>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ExportArgs {
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[arg(long)]
    index: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct TablesArgs {
    /// Only rows for these primes.
    #[arg(short = 'p', value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    #[command(flatten)]
    output: Output,
}

/// A failed run: exit status and diagnostic.
struct Failure(u8, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(EXIT_USAGE, msg.into())
    }

    fn build(e: Error) -> Self {
        Failure(EXIT_BUILD, format!("construction failed: {e}"))
    }
}

type Run = Result<(), Failure>;

fn emit(out: &Output, text: &str) -> Run {
    match &out.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write output: {e}"))),
    }
}

fn read_set(input: &Option<PathBuf>) -> Result<MubSet, Failure> {
    let text = match input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("cannot read input: {e}")))?;
            s
        }
    };
    MubSet::from_json(&text).map_err(|e| Failure::usage(format!("malformed set document: {e}")))
}

fn modulus(p: u64) -> Result<PrimeModulus, Failure> {
    if !is_prime(p) {
        return Err(Failure::usage(format!("-p {p} is not a prime")));
    }
    PrimeModulus::new(p).map_err(|e| Failure::usage(e.to_string()))
}

fn render(s: &MubSet, format: Format, index: Option<usize>) -> Result<String, Failure> {
    let picked: Vec<usize> = match index {
        Some(i) if i >= s.dimension() => {
            return Err(Failure::usage(format!(
                "--index {i} outside 0..{}",
                s.dimension()
            )))
        }
        Some(i) => vec![i],
        None => (0..s.dimension()).collect(),
    };
    let parts: Vec<String> = picked
        .iter()
        .map(|&i| {
            let a = &s.matrices()[i];
            match format {
                Format::Dot => to_dot(a, &format!("A{i}")),
                Format::Circuit => emit_circuit(a).to_text(),
                Format::Json => unreachable!(),
            }
        })
        .collect();
    Ok(parts.join("\n"))
}

fn gen(args: GenArgs) -> Run {
    let p = modulus(args.p)?;
    if args.n == 0 {
        return Err(Failure::usage("-n must be at least 1"));
    }
    if args.index.is_some() && args.format == Format::Json {
        return Err(Failure::usage("--index applies to dot and circuit output"));
    }
    let method = match args.method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::Tridiag => MethodChoice::Tridiagonal,
        MethodArg::Companion => MethodChoice::Companion,
    };
    let opts = MubOptions {
        method,
        polynomial: args.poly.map(|c| PolyZp::new(p, c)),
        diagonal: args.diagonal,
        primitive: args.primitive,
    };
    let s = mub_set(p, args.n, &opts).map_err(Failure::build)?;
    let text = match args.format {
        Format::Json => s.to_json(),
        f => render(&s, f, args.index)?,
    };
    emit(&args.output, &text)
}

fn verify(args: VerifyArgs) -> Run {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Failure::usage("--tol must be positive"));
    }
    let s = read_set(&args.input)?;
    let lemma = verify_lemma1(&s);
    let mut report = serde_json::json!({
        "p": s.modulus().value(),
        "n": s.qupits(),
        "algebraic": lemma,
    });
    let mut numeric_pass = true;
    if args.numeric || args.sample.is_some() {
        let mode = match args.sample {
            Some(count) => VerifyMode::Sampled {
                count,
                seed: SAMPLE_SEED,
            },
            None => VerifyMode::Full,
        };
        let r = verify_mu_numeric(&s, args.tol, mode).map_err(|e| Failure::usage(e.to_string()))?;
        numeric_pass = r.pass;
        report["numeric"] = serde_json::to_value(&r).expect("report serializes");
    }
    let pass = lemma.passed() && numeric_pass;
    report["pass"] = pass.into();
    emit(&args.output, &format!("{report}\n"))?;
    if let Lemma1Outcome::Fail { r, s } = lemma {
        return Err(Failure(
            EXIT_FAIL,
            format!("algebraic failure: det(A_{r} - A_{s}) = 0"),
        ));
    }
    if !numeric_pass {
        return Err(Failure(
            EXIT_FAIL,
            "numeric failure: overlap outside tolerance".into(),
        ));
    }
    Ok(())
}

fn analyze_cmd(args: AnalyzeArgs) -> Run {
    let s = read_set(&args.input)?;
    let splits = match &args.bipartition {
        Some(x) => {
            vec![Bipartition::new(s.qupits(), x).map_err(|e| Failure::usage(e.to_string()))?]
        }
        None => Vec::new(),
    };
    let report = analyze(&s, &splits).map_err(|e| Failure::usage(e.to_string()))?;
    let text = serde_json::to_string(&report).expect("report serializes");
    emit(&args.output, &format!("{text}\n"))?;
    if report.bipartitions.values().all(|b| b.pass) {
        Ok(())
    } else {
        Err(Failure(EXIT_FAIL, "purity identity fails".into()))
    }
}

fn export(args: ExportArgs) -> Run {
    let s = read_set(&args.input)?;
    let text = match args.format {
        Format::Json if args.index.is_none() => s.to_json(),
        Format::Json => return Err(Failure::usage("--index applies to dot and circuit output")),
        f => render(&s, f, args.index)?,
    };
    emit(&args.output, &text)
}

fn tables(args: TablesArgs) -> Run {
    let entries = match &args.primes {
        Some(ps) => {
            if let Some(bad) = ps.iter().find(|&&p| !is_prime(p)) {
                return Err(Failure::usage(format!("{bad} is not a prime")));
            }
            derive_catalog(ps)
        }
        None => TRIDIAGONAL_CATALOG
            .iter()
            .map(|(p, d)| derive_entry(*p, d))
            .collect(),
    }
    .map_err(Failure::build)?;
    let mut text = String::new();
    for e in &entries {
        text.push_str(&serde_json::to_string(e).expect("row serializes"));
        text.push('\n');
    }
    emit(&args.output, &text)?;
    if entries.iter().all(|e| e.irreducible && e.primitive) {
        Ok(())
    } else {
        Err(Failure(EXIT_FAIL, "catalog row is not primitive".into()))
    }
}

fn example(name: ExampleName) -> Run {
    let steps: Vec<Step> = match name {
        ExampleName::Companion27 => companion_27(),
        ExampleName::Tridiagonal8 => tridiagonal_8(),
    }
    .map_err(Failure::build)?;
    let mut text = String::new();
    for s in steps {
        if s.value.contains('\n') {
            text.push_str(&format!("{}:\n{}\n", s.label, s.value.trim_end()));
        } else {
            text.push_str(&format!("{}: {}\n", s.label, s.value));
        }
    }
    emit(&Output { out: None }, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("graphmub: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
        Command::Analyze(a) => analyze_cmd(a),
        Command::Export(a) => export(a),
        Command::Tables(a) => tables(a),
        Command::Example { name } => example(name),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("graphmub: {msg}");
            ExitCode::from(code)
        }
    }
}
