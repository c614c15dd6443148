//! Command-line front end. Exit codes: 0 success, 1 findings or mismatch,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::explorer::{self, Check, ScanBounds, ScanOptions, ScanReport};
use crate::fixture;
use crate::graded::{crosscheck_presentation, parse_exponent, MonomialIdeal};
use crate::hilbert::{analyze, HilbertData};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hilbmon",
    version,
    about = "Hilbert functions of numerical semigroup rings and their monomial modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semigroup invariants: Frobenius number, genus, Apery set, predicates
    Info {
        /// Semigroup generators, e.g. 6,7,15
        #[arg(long)]
        gens: String,
        /// Print JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Hilbert function, h-polynomial and Hilbert coefficients
    Hilbert(ModuleArgs),
    /// Tangent-cone depth test with socle witness
    Depth(ModuleArgs),
    /// Hilbert function of a monomial quotient K[x_1..x_k]/I
    MonomialHf {
        /// Monomial generators as exponent vectors: "1,0,1;0,6,0" (empty for the zero ideal)
        #[arg(long)]
        presentation: String,
        /// Variable count, needed when the presentation is empty
        #[arg(long)]
        vars: Option<usize>,
        /// Highest degree to compute
        #[arg(long, default_value_t = 10)]
        upto: usize,
        /// Also test this exponent vector for being a socle witness
        #[arg(long)]
        socle: Option<String>,
        /// Print JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Compare the semigroup Hilbert function with a tangent-cone presentation
    Crosscheck {
        /// Semigroup generators, e.g. 6,7,15
        #[arg(long)]
        gens: String,
        /// Monomial generators as exponent vectors: "1,0,1;0,6,0" (empty for the zero ideal)
        #[arg(long)]
        presentation: String,
        /// Variable count, needed when the presentation is empty
        #[arg(long)]
        vars: Option<usize>,
        /// Highest degree to compute
        #[arg(long, default_value_t = 20)]
        upto: usize,
        /// Print JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive property scan over the genus tree
    Scan(ScanArgs),
    /// Check the monotonicity conclusion over all relative ideals of one ring
    Sweep {
        /// Semigroup generators, e.g. 6,7,15
        #[arg(long)]
        gens: String,
        /// Enumerate relative ideals generated in [0, N]
        #[arg(long)]
        ideal_window: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Recompute a JSONL fixture file and compare against its expect blocks
    Verify { file: PathBuf },
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Minimal or redundant generators, e.g. 6,7,15
    #[arg(long)]
    gens: String,
    /// Relative ideal offsets; repeat for a direct sum
    #[arg(long)]
    ideal: Vec<String>,
    /// Print one JSON object instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Write JSONL records here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSONL records to standard output
    #[arg(long)]
    json: bool,
    /// Leave elapsed_ms out of the summary record so output is reproducible
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Visit semigroups with Frobenius number at most this
    #[arg(long)]
    max_frobenius: Option<usize>,
    /// Visit semigroups with genus at most this
    #[arg(long)]
    max_genus: Option<usize>,
    /// Keep only embedding dimension at most this
    #[arg(long)]
    embdim_max: Option<usize>,
    /// Keep only embedding dimension at least this
    #[arg(long)]
    embdim_min: Option<usize>,
    /// Keep only symmetric semigroups
    #[arg(long)]
    symmetric_only: bool,
    /// Keep only Arf semigroups
    #[arg(long)]
    arf_only: bool,
    /// Keep only semigroups of minimal multiplicity
    #[arg(long)]
    min_mult_only: bool,
    /// Also analyze every relative ideal generated in [0, N]
    #[arg(long)]
    ideal_window: Option<usize>,
    /// Comma-separated: monotone, h_nonneg, arf_implies_minmult,
    /// depth_implies_monotone, structure, depth_zero
    #[arg(long)]
    checks: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

/// A failure that maps onto an exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn parse_list(text: &str, what: &str) -> std::result::Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                Failure(
                    EXIT_USAGE,
                    format!("{what}: {t:?} is not a non-negative integer"),
                )
            })
        })
        .collect()
}

fn semigroup(gens: &str) -> std::result::Result<NumericalSemigroup, Failure> {
    let g = parse_list(gens, "--gens")?;
    NumericalSemigroup::new(&g).map_err(|e| Failure(EXIT_USAGE, format!("--gens: {e}")))
}

fn presentation(text: &str, vars: Option<usize>) -> std::result::Result<MonomialIdeal, Failure> {
    MonomialIdeal::parse_with_vars(text, vars)
        .map_err(|e| Failure(EXIT_USAGE, format!("--presentation: {e}")))
}

fn module_data(args: &ModuleArgs) -> std::result::Result<HilbertData, Failure> {
    let s = semigroup(&args.gens)?;
    if args.ideal.is_empty() {
        return Ok(analyze(&s, &RelativeIdeal::ring(&s))?);
    }
    let parts = args
        .ideal
        .iter()
        .map(|text| {
            let offs = parse_list(text, "--ideal")?;
            let e = RelativeIdeal::new(&s, &offs)
                .map_err(|e| Failure(EXIT_USAGE, format!("--ideal: {e}")))?;
            Ok(analyze(&s, &e)?)
        })
        .collect::<std::result::Result<Vec<_>, Failure>>()?;
    if parts.len() == 1 {
        Ok(parts.into_iter().next().unwrap())
    } else {
        Ok(HilbertData::direct_sum(&parts)?)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn io(e: std::io::Error) -> Failure {
    Failure(EXIT_USAGE, format!("i/o error: {e}"))
}

fn cmd_info(gens: &str, as_json: bool, out: &mut dyn Write) -> Outcome {
    let s = semigroup(gens)?;
    let apery = s.apery_set(s.multiplicity())?;
    if as_json {
        let v = json!({
            "gens": s.minimal_generators(),
            "frobenius": s.frobenius(),
            "conductor": s.conductor(),
            "multiplicity": s.multiplicity(),
            "embdim": s.embedding_dimension(),
            "genus": s.genus(),
            "gaps": s.gaps(),
            "apery": apery,
            "symmetric": s.is_symmetric(),
            "arf": s.is_arf(),
            "min_mult": s.has_minimal_multiplicity(),
        });
        writeln!(out, "{v}").map_err(io)?;
    } else {
        writeln!(out, "semigroup      {s}").map_err(io)?;
        writeln!(out, "frobenius      {}", s.frobenius()).map_err(io)?;
        writeln!(out, "multiplicity   {}", s.multiplicity()).map_err(io)?;
        writeln!(out, "embedding dim  {}", s.embedding_dimension()).map_err(io)?;
        writeln!(out, "genus          {}", s.genus()).map_err(io)?;
        writeln!(out, "gaps           {{{}}}", join(&s.gaps())).map_err(io)?;
        writeln!(out, "apery(e)       {{{}}}", join(&apery)).map_err(io)?;
        writeln!(out, "symmetric      {}", s.is_symmetric()).map_err(io)?;
        writeln!(out, "arf            {}", s.is_arf()).map_err(io)?;
        writeln!(out, "min mult       {}", s.has_minimal_multiplicity()).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn print_data(
    d: &HilbertData,
    as_json: bool,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    if as_json {
        writeln!(out, "{}", serde_json::to_string(d).expect("serializable")).map_err(io)?;
        return Ok(());
    }
    writeln!(out, "generators     {}", join(&d.gens)).map_err(io)?;
    writeln!(out, "ideal          {}", join(&d.ideal)).map_err(io)?;
    writeln!(
        out,
        "H(n)           {} (constant from n = {})",
        join(&d.hilbert),
        d.reduction_number
    )
    .map_err(io)?;
    writeln!(out, "h-polynomial   {}", join(&d.h_coeffs)).map_err(io)?;
    writeln!(out, "e0, e1         {}, {}", d.e0, d.e1).map_err(io)?;
    writeln!(out, "mu             {}", d.mu).map_err(io)?;
    match d.first_violation {
        None => writeln!(out, "monotone       yes").map_err(io)?,
        Some(n) => writeln!(out, "monotone       no (H({n}) > H({}))", n + 1).map_err(io)?,
    }
    match d.depth_witness {
        None => writeln!(out, "depth G(M) > 0 {}", d.depth_positive).map_err(io)?,
        Some((n, s)) => {
            writeln!(out, "depth G(M) > 0 false (socle t^{s} in degree {n})").map_err(io)?
        }
    }
    Ok(())
}

fn cmd_depth(args: &ModuleArgs, out: &mut dyn Write) -> Outcome {
    let d = module_data(args)?;
    if args.json {
        let v = json!({
            "gens": d.gens,
            "ideal": d.ideal,
            "depth_positive": d.depth_positive,
            "depth_witness": d.depth_witness,
        });
        writeln!(out, "{v}").map_err(io)?;
    } else {
        match d.depth_witness {
            None => writeln!(out, "depth positive: {}", d.depth_positive).map_err(io)?,
            Some((n, s)) => writeln!(
                out,
                "depth positive: false\nsocle witness: t^{s} in degree {n}"
            )
            .map_err(io)?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_monomial_hf(
    text: &str,
    vars: Option<usize>,
    upto: usize,
    socle: Option<&str>,
    as_json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let ideal = presentation(text, vars)?;
    let values: Vec<usize> = (0..=upto).map(|n| ideal.hilbert_function(n)).collect();
    let witness = socle
        .map(|w| {
            let w = parse_exponent(w).map_err(|e| Failure(EXIT_USAGE, format!("--socle: {e}")))?;
            let is = ideal
                .is_socle_witness(&w)
                .map_err(|e| Failure(EXIT_USAGE, format!("--socle: {e}")))?;
            Ok::<_, Failure>((w, is))
        })
        .transpose()?;
    if as_json {
        let mut v = json!({ "presentation": ideal.to_string(), "hf": values });
        if let Some((w, is)) = &witness {
            v["socle"] = json!({ "exponent": w, "is_witness": is });
        }
        writeln!(out, "{v}").map_err(io)?;
    } else {
        writeln!(out, "I = ({ideal})").map_err(io)?;
        for (n, v) in values.iter().enumerate() {
            writeln!(out, "{n:>4}  {v}").map_err(io)?;
        }
        if let Some((w, is)) = witness {
            writeln!(out, "socle witness {}: {is}", join(&w)).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_crosscheck(
    gens: &str,
    text: &str,
    vars: Option<usize>,
    upto: usize,
    as_json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let s = semigroup(gens)?;
    let ideal = presentation(text, vars)?;
    let report = crosscheck_presentation(&s, &ideal, upto)?;
    if as_json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("serializable")
        )
        .map_err(io)?;
    } else if report.equal {
        writeln!(out, "equal (n = 0..{upto}): {}", join(&report.semigroup_hf)).map_err(io)?;
    } else {
        let m = report.first_mismatch.as_ref().unwrap();
        writeln!(
            out,
            "mismatch at n = {}: semigroup {} vs presentation {}",
            m.degree, m.semigroup, m.presentation
        )
        .map_err(io)?;
    }
    Ok(if report.equal { EXIT_OK } else { EXIT_FINDINGS })
}

fn emit_report(report: &ScanReport, run: &RunArgs, out: &mut dyn Write) -> Outcome {
    let jsonl = report.to_jsonl(!run.no_timing);
    if let Some(path) = &run.out {
        std::fs::write(path, &jsonl).map_err(io)?;
    }
    if run.json {
        write!(out, "{jsonl}").map_err(io)?;
    } else {
        let s = &report.summary;
        writeln!(
            out,
            "{}: {} semigroups, {} instances, {} findings, max reduction number {}",
            s.mode, s.semigroups, s.instances, s.findings, s.max_reduction
        )
        .map_err(io)?;
        for (kind, count) in &s.by_kind {
            writeln!(
                out,
                "  {}: {count}",
                serde_json::to_value(kind).unwrap().as_str().unwrap()
            )
            .map_err(io)?;
        }
        for f in report.findings.iter().take(20) {
            let ideal = f
                .ideal
                .as_deref()
                .map(|i| format!(" ideal {}", join(i)))
                .unwrap_or_default();
            writeln!(
                out,
                "  <{}>{ideal}: {:?}{} H = {}",
                join(&f.generators),
                f.kind,
                f.detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default(),
                join(&f.data.hilbert)
            )
            .map_err(io)?;
        }
        if report.findings.len() > 20 {
            writeln!(out, "  ... {} more", report.findings.len() - 20).map_err(io)?;
        }
    }
    Ok(if report.has_violations() {
        EXIT_FINDINGS
    } else {
        EXIT_OK
    })
}

fn options(run: &RunArgs) -> std::result::Result<ScanOptions, Failure> {
    if run.jobs == Some(0) {
        return Err(Failure(EXIT_USAGE, "--jobs must be positive".into()));
    }
    Ok(ScanOptions {
        jobs: run.jobs,
        safety_cap: explorer::safety_cap_from_env()?,
    })
}

fn cmd_scan(args: &ScanArgs, out: &mut dyn Write) -> Outcome {
    let bounds = ScanBounds {
        max_frobenius: args.max_frobenius,
        max_genus: args.max_genus,
        max_embdim: args.embdim_max,
        min_embdim: args.embdim_min,
        ideal_window: args.ideal_window,
        symmetric_only: args.symmetric_only,
        arf_only: args.arf_only,
        min_mult_only: args.min_mult_only,
        embdim_le_3: false,
    };
    bounds.validate().map_err(|e| {
        Failure(
            EXIT_USAGE,
            format!("{e} (use --max-frobenius or --max-genus)"),
        )
    })?;
    let checks = match &args.checks {
        None => Check::defaults(),
        Some(text) => text
            .split(',')
            .map(|c| c.trim().parse::<Check>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Failure(EXIT_USAGE, format!("--checks: {e}")))?,
    };
    let report = explorer::scan(&bounds, &checks, &options(&args.run)?)?;
    emit_report(&report, &args.run, out)
}

fn cmd_sweep(gens: &str, window: usize, run: &RunArgs, out: &mut dyn Write) -> Outcome {
    let s = semigroup(gens)?;
    let report = explorer::sweep_monotonicity(&s, window, &options(run)?)?;
    emit_report(&report, run, out)
}

fn cmd_verify(path: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let fixtures = fixture::parse_fixtures(&text).map_err(|(line, msg)| {
        Failure(
            EXIT_USAGE,
            format!("{}:{line}: malformed fixture: {msg}", path.display()),
        )
    })?;
    if fixtures.is_empty() {
        writeln!(err, "warning: {} contains no fixtures", path.display()).map_err(io)?;
        writeln!(out, "PASS (vacuous): 0 fixtures").map_err(io)?;
        return Ok(EXIT_OK);
    }
    let mut failed = 0;
    for (line, f) in &fixtures {
        let outcome = f.check(*line);
        if outcome.passed() {
            writeln!(out, "PASS {}", outcome.name).map_err(io)?;
        } else {
            failed += 1;
            writeln!(out, "FAIL {}", outcome.name).map_err(io)?;
            for d in &outcome.diffs {
                writeln!(
                    out,
                    "  {}: expected {} got {}",
                    d.field, d.expected, d.actual
                )
                .map_err(io)?;
            }
        }
    }
    writeln!(out, "{} passed, {failed} failed", fixtures.len() - failed).map_err(io)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FINDINGS })
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Info { gens, json } => cmd_info(gens, *json, out),
        Command::Hilbert(args) => module_data(args).and_then(|d| {
            print_data(&d, args.json, out)?;
            Ok(EXIT_OK)
        }),
        Command::Depth(args) => cmd_depth(args, out),
        Command::MonomialHf {
            presentation,
            vars,
            upto,
            socle,
            json,
        } => cmd_monomial_hf(presentation, *vars, *upto, socle.as_deref(), *json, out),
        Command::Crosscheck {
            gens,
            presentation,
            vars,
            upto,
            json,
        } => cmd_crosscheck(gens, presentation, *vars, *upto, *json, out),
        Command::Scan(args) => cmd_scan(args, out),
        Command::Sweep {
            gens,
            ideal_window,
            run,
        } => cmd_sweep(gens, *ideal_window, run, out),
        Command::Verify { file } => cmd_verify(file, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
