//! `formzeta` — command-line surface over the library.
//!
//! Exit codes: 0 success, 1 verification failure (a counterexample was
//! found), 2 usage or parameter error, 64 internal range/overflow error.
//! Data goes to stdout (or `--out FILE`), logs to stderr; the `FORMZETA_LOG`
//! environment variable turns on stderr diagnostics.

mod output;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use formzeta::arith::{s_part, PrimeSet};
use formzeta::primesets::{enumerate_pf, pi_f, standard_set, StandardSet};
use formzeta::quadform::{properly_equivalent, reduced_forms_of_discriminant, BinaryQuadraticForm};
use formzeta::verify::{
    verify_class_numbers, verify_corollary, verify_two_squares, verify_x2_2y2, verify_x2_3y2,
    Corollary, VerificationReport,
};
use formzeta::zeta::{
    iwaniec_ratio, minorant_partial, partial_zeta_s, pf_sum_partial, weil_log_partial,
    PartialSumSeries,
};
use output::{Emitter, Format, Record};

#[derive(Parser)]
#[command(
    name = "formzeta",
    version,
    about = "S-parts, binary quadratic forms, form prime sets and zeta partial sums"
)]
struct Cli {
    /// Output format for data lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Explicit checkpoint cutoffs for series commands (default: powers of
    /// ten up to the limit).
    #[arg(long, global = true, value_delimiter = ',')]
    checkpoints: Option<Vec<u64>>,

    /// Worker threads (default: one per core). Results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write data lines to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// S-part of n: the largest divisor with all prime factors in the set.
    Spart {
        n: u64,
        #[arg(long)]
        set: String,
    },
    /// Search a coprime representation f(x, y) = n.
    Repr {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        n: u64,
    },
    /// Reduce a form; prints the reduced form and the unimodular witness.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// Decide proper equivalence of two forms.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        form1: String,
        #[arg(long, allow_hyphen_values = true)]
        form2: String,
    },
    /// Residues in (Z/|D|Z)* represented by the form.
    Genus {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
    },
    /// All primitive reduced forms of a negative discriminant.
    Classes {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Members of P_f up to the limit.
    Pf {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        limit: u64,
    },
    /// pi(N; f) = |P_f up to the limit|.
    Pif {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        limit: u64,
    },
    /// Truncated double sum: sum over p <= N, j of (p^j - 1)_S p^(-sj)/j.
    #[command(name = "zeta-log")]
    ZetaLog {
        #[arg(long)]
        set: String,
        #[arg(long = "s")]
        s: f64,
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        jmax: Option<u32>,
    },
    /// Minorant partial sums: sum over p <= N of (p - 1)_S p^(eps - 2).
    Minorant {
        #[arg(long)]
        set: String,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        limit: u64,
    },
    /// Divergence-witness sums over P_f: sum of p^(eps - 1).
    Pfsum {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        limit: u64,
    },
    /// Shifted partial Riemann zeta Euler product over the set.
    #[command(name = "zeta-s")]
    ZetaS {
        #[arg(long)]
        set: String,
        #[arg(long = "s")]
        s: f64,
        #[arg(long)]
        limit: u64,
    },
    /// Normalized count ratio pi(N;f) ln(N)^(3/2) / N at each checkpoint.
    Iwaniec {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        limit: u64,
    },
    /// Run one of the verification scans.
    Verify {
        which: VerifyWhich,
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyWhich {
    #[value(name = "two-squares")]
    TwoSquares,
    #[value(name = "x2-2y2")]
    X22y2,
    #[value(name = "x2-3y2")]
    X23y2,
    Cor1,
    Cor2,
    Cor3,
    Classes,
}

enum CliError {
    Usage(String),
    Lib(formzeta::Error),
}

impl From<formzeta::Error> for CliError {
    fn from(e: formzeta::Error) -> Self {
        CliError::Lib(e)
    }
}

struct Outcome {
    records: Vec<Record>,
    /// Full report for verify commands (serialized as-is in JSON mode).
    report: Option<VerificationReport>,
    exit: u8,
}

impl Outcome {
    fn ok(records: Vec<Record>) -> Self {
        Self {
            records,
            report: None,
            exit: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let verbose = std::env::var_os("FORMZETA_LOG").is_some_and(|v| !v.is_empty());

    let started = Instant::now();
    let result = formzeta::with_thread_pool(cli.threads, || run(&cli));
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    match result {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &argv, &outcome, wall_ms) {
                eprintln!("error: failed to write output: {e}");
                return ExitCode::from(64);
            }
            if verbose {
                eprintln!("# formzeta {} finished in {wall_ms:.1} ms", argv.join(" "));
            }
            ExitCode::from(outcome.exit)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                formzeta::Error::Range(_) => ExitCode::from(64),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(cli: &Cli, argv: &[String], outcome: &Outcome, wall_ms: f64) -> io::Result<()> {
    let stdout = io::stdout();
    let mut file;
    let mut lock;
    let sink: &mut dyn Write = match &cli.out {
        Some(path) => {
            file = File::create(path)?;
            &mut file
        }
        None => {
            lock = stdout.lock();
            &mut lock
        }
    };
    let mut emitter = Emitter::new(cli.format, sink);

    let command = argv.first().cloned().unwrap_or_default();
    match cli.format {
        Format::Json => {
            emitter.record(&vec![("command", json!(command)), ("argv", json!(argv))])?
        }
        Format::Csv => emitter.record(&vec![("command", json!(argv.join(" ")))])?,
    }

    if let (Format::Json, Some(report)) = (cli.format, &outcome.report) {
        emitter.json_value(&serde_json::to_value(report).expect("report serializes"))?;
    } else {
        for record in &outcome.records {
            emitter.record(record)?;
        }
    }

    emitter.record(&vec![("wall_ms", json!(wall_ms))])
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cps = cli.checkpoints.as_deref();
    match &cli.cmd {
        Cmd::Spart { n, set } => {
            if *n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            let set = parse_set(set)?;
            Ok(Outcome::ok(vec![vec![("result", json!(s_part(*n, &set)))]]))
        }
        Cmd::Repr { form, n } => {
            let f = parse_form(form)?;
            let found = f.represents_coprime(*n)?;
            let record = match found {
                Some(r) => vec![
                    ("found", json!(true)),
                    ("x", json!(r.x)),
                    ("y", json!(r.y)),
                    ("value", json!(r.value)),
                ],
                None => vec![
                    ("found", json!(false)),
                    ("x", Value::Null),
                    ("y", Value::Null),
                    ("value", Value::Null),
                ],
            };
            Ok(Outcome::ok(vec![record]))
        }
        Cmd::Reduce { form } => {
            let f = parse_form(form)?;
            let r = f.reduce()?;
            Ok(Outcome::ok(vec![vec![
                ("a", json!(r.form.a)),
                ("b", json!(r.form.b)),
                ("c", json!(r.form.c)),
                ("witness_p", json!(r.witness.p)),
                ("witness_q", json!(r.witness.q)),
                ("witness_r", json!(r.witness.r)),
                ("witness_s", json!(r.witness.s)),
            ]]))
        }
        Cmd::Equiv { form1, form2 } => {
            let f = parse_form(form1)?;
            let g = parse_form(form2)?;
            Ok(Outcome::ok(vec![vec![(
                "equivalent",
                json!(properly_equivalent(&f, &g)?),
            )]]))
        }
        Cmd::Genus { form } => {
            let f = parse_form(form)?;
            let sig = f.genus_signature()?;
            Ok(Outcome::ok(vec![vec![
                ("discriminant", json!(sig.discriminant)),
                ("residues", json!(sig.residues)),
            ]]))
        }
        Cmd::Classes { disc } => {
            let forms = reduced_forms_of_discriminant(*disc)?;
            Ok(Outcome::ok(
                forms
                    .iter()
                    .map(|f| vec![("a", json!(f.a)), ("b", json!(f.b)), ("c", json!(f.c))])
                    .collect(),
            ))
        }
        Cmd::Pf { form, limit } => {
            let f = parse_form(form)?;
            let pf = enumerate_pf(&f, *limit)?;
            log_verbose(&format!(
                "P_f has {} members up to {limit}",
                pf.primes().len()
            ));
            Ok(Outcome::ok(
                pf.primes().iter().map(|&p| vec![("p", json!(p))]).collect(),
            ))
        }
        Cmd::Pif { form, limit } => {
            let f = parse_form(form)?;
            Ok(Outcome::ok(vec![vec![(
                "result",
                json!(pi_f(*limit, &f)?),
            )]]))
        }
        Cmd::ZetaLog {
            set,
            s,
            limit,
            jmax,
        } => {
            let set = parse_set(set)?;
            let series = weil_log_partial(&set, *s, *limit, *jmax, cps)?;
            Ok(Outcome::ok(series_records(&series)))
        }
        Cmd::Minorant { set, eps, limit } => {
            let set = parse_set(set)?;
            let series = minorant_partial(&set, *eps, *limit, cps)?;
            Ok(Outcome::ok(series_records(&series)))
        }
        Cmd::Pfsum { form, eps, limit } => {
            let f = parse_form(form)?;
            let series = pf_sum_partial(&f, *eps, *limit, cps)?;
            Ok(Outcome::ok(series_records(&series)))
        }
        Cmd::ZetaS { set, s, limit } => {
            let set = parse_set(set)?;
            let series = partial_zeta_s(&set, *s, *limit, cps)?;
            Ok(Outcome::ok(series_records(&series)))
        }
        Cmd::Iwaniec { form, limit } => {
            let f = parse_form(form)?;
            let ratios = iwaniec_ratio(&f, *limit, cps)?;
            Ok(Outcome::ok(
                ratios
                    .iter()
                    .map(|&(n, r)| vec![("n", json!(n)), ("ratio", json!(r))])
                    .collect(),
            ))
        }
        Cmd::Verify { which, limit } => {
            let report = match which {
                VerifyWhich::TwoSquares => verify_two_squares(*limit)?,
                VerifyWhich::X22y2 => verify_x2_2y2(*limit)?,
                VerifyWhich::X23y2 => verify_x2_3y2(*limit)?,
                VerifyWhich::Cor1 => verify_corollary(Corollary::One, *limit)?,
                VerifyWhich::Cor2 => verify_corollary(Corollary::Two, *limit)?,
                VerifyWhich::Cor3 => verify_corollary(Corollary::Three, *limit)?,
                VerifyWhich::Classes => verify_class_numbers()?,
            };
            let exit = if report.passed { 0 } else { 1 };
            // CSV carries the summary row; JSON prints the whole report
            let records = vec![vec![
                ("claim_id", json!(report.claim_id)),
                ("range_lo", json!(report.range_checked.0)),
                ("range_hi", json!(report.range_checked.1)),
                ("checked_count", json!(report.checked_count)),
                ("counterexamples", json!(report.counterexamples.len())),
                ("passed", json!(report.passed)),
            ]];
            Ok(Outcome {
                records,
                report: Some(report),
                exit,
            })
        }
    }
}

fn series_records(series: &PartialSumSeries) -> Vec<Record> {
    let mut records: Vec<Record> = series
        .checkpoints
        .iter()
        .map(|&(n, v)| vec![("n", json!(n)), ("value", json!(v))])
        .collect();
    if let Some(tail) = series.tail_bound {
        records.push(vec![("tail_bound", json!(tail))]);
    }
    records
}

/// `a,b,c` with integer coefficients.
fn parse_form(text: &str) -> Result<BinaryQuadraticForm, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "form must be written a,b,c — got '{text}'"
        )));
    }
    let coeff = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| CliError::Usage(format!("bad form coefficient '{s}'")))
    };
    Ok(BinaryQuadraticForm::new(
        coeff(parts[0])?,
        coeff(parts[1])?,
        coeff(parts[2])?,
    ))
}

/// `S1 | S2 | S3 | all | none | mod:d:r1,r2,...`
fn parse_set(text: &str) -> Result<PrimeSet, CliError> {
    match text {
        "S1" | "s1" => return Ok(standard_set(StandardSet::S1)),
        "S2" | "s2" => return Ok(standard_set(StandardSet::S2)),
        "S3" | "s3" => return Ok(standard_set(StandardSet::S3)),
        "all" => return Ok(PrimeSet::all_primes()),
        "none" => return Ok(PrimeSet::empty()),
        _ => {}
    }
    let Some(rest) = text.strip_prefix("mod:") else {
        return Err(CliError::Usage(format!(
            "unknown set '{text}' (expected S1, S2, S3, all, none or mod:d:r1,r2,...)"
        )));
    };
    let Some((modulus, residues)) = rest.split_once(':') else {
        return Err(CliError::Usage(format!(
            "set '{text}' must be written mod:d:r1,r2,..."
        )));
    };
    let modulus: u64 = modulus
        .parse()
        .map_err(|_| CliError::Usage(format!("bad modulus in '{text}'")))?;
    let residues: Vec<u64> = residues
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad residue '{s}' in '{text}'")))
        })
        .collect::<Result<_, _>>()?;
    Ok(PrimeSet::new(modulus, residues)?)
}

fn log_verbose(message: &str) {
    if std::env::var_os("FORMZETA_LOG").is_some_and(|v| !v.is_empty()) {
        eprintln!("# {message}");
    }
}
