//! The `powres` command line.
//!
//! Exit codes: 0 on success, 1 when the input violates a mathematical
//! precondition (or a file cannot be written), 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::class_numbers::ClassNumberRecord;
use crate::deviation::{
    class_sum_difference, classify_by_norm, classify_sixth, classify_sixth_interval,
    classify_tenth, deviation_vector, quadratic_interval_counts, SixthReport, TenthReport,
};
use crate::digits::{
    alternating_digit_check, digit_period, digit_split_counts, nonresidue_digit_sums,
    residue_digit_sums,
};
use crate::error::{Error, Result};
use crate::modular::{check_prime_and_conductor, is_primitive_root, legendre, ResidueSystem};
use crate::render::{decimal6, rational};
use crate::scanner::{
    diagram2_stats, example_primitive_roots, scan_sixth, scan_tenth, to_csv_string, write_csv,
    BaseSpec, CsvRecord, GeneratorSpec, ScanRow,
};

#[derive(Parser, Debug)]
#[command(
    name = "powres",
    version,
    about = "Power residues, deviation vectors and relative class numbers mod p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Csv,
}

/// `--b`: a number, `p+1`, or (for scans) `digits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BaseArg {
    Fixed(u64),
    PPlusOne,
    Digits,
}

impl BaseArg {
    fn resolve(self, p: u64) -> Result<u64> {
        match self {
            BaseArg::Fixed(b) => Ok(b),
            BaseArg::PPlusOne => Ok(p + 1),
            BaseArg::Digits => Err(Error::Precondition(
                "--b digits is only meaningful for scan".into(),
            )),
        }
    }
}

fn parse_base(s: &str) -> std::result::Result<BaseArg, String> {
    match s {
        "p+1" => Ok(BaseArg::PPlusOne),
        "digits" => Ok(BaseArg::Digits),
        _ => s
            .parse::<u64>()
            .map(BaseArg::Fixed)
            .map_err(|_| format!("expected an integer, `p+1` or `digits`, got `{s}`")),
    }
}

#[derive(Args, Debug)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write CSV to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Deviation vector, sign vector, class numbers and criterion for one prime
    Analyze {
        #[arg(long)]
        p: u64,
        /// Conductor: 2, 6 or 10
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Base: an integer or `p+1`
        #[arg(long, default_value = "2", value_parser = parse_base)]
        b: BaseArg,
        /// Primitive root ordering the classes (default: smallest)
        #[arg(long)]
        g: Option<u64>,
        /// Use the interval statistic |C∩[0,p/6]| − |C∩[5p/6,p]| instead of a base (q = 6)
        #[arg(long)]
        interval: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quadratic residue counts on subintervals of [0, p]
    Quadratic {
        #[arg(long)]
        p: u64,
    },
    /// Base-b period of 1/p and the digit-sum identities that apply
    Digits {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "2", value_parser = parse_base)]
        b: BaseArg,
        #[arg(long)]
        g: Option<u64>,
    },
    /// Relative class numbers h2, h6, h10 of p
    Classnum {
        #[arg(long)]
        p: u64,
    },
    /// Sixth-power examples below 500 for b = 2 and b = p+1
    Table1 {
        #[command(flatten)]
        output: Output,
    },
    /// Sixth-power examples below 1000 for decimal digits
    Table2 {
        #[command(flatten)]
        output: Output,
    },
    /// Statistics of the normalized (p+1)-deviation vectors
    Diagram2 {
        #[arg(long, default_value_t = 300_000)]
        pmax: u64,
        /// Emit the per-prime rows instead of the summary (CSV only)
        #[arg(long)]
        rows: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Tenth-power criteria for one prime (--p) or a range (--pmax)
    Tenth {
        #[arg(long, conflicts_with = "pmax")]
        p: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        pmax: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Scan a prime range: q = 6 rows, or q = 10 rows with b = p+1
    Scan {
        #[arg(long, default_value_t = 7)]
        pmin: u64,
        #[arg(long)]
        pmax: u64,
        #[arg(long, default_value_t = 6)]
        q: u32,
        /// Base: an integer, `p+1`, or `digits` (b = 10 with classes 10^(j-1)H)
        #[arg(long, default_value = "2", value_parser = parse_base)]
        b: BaseArg,
        /// Primitive root for every prime in the range (default: smallest)
        #[arg(long)]
        g: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `argv` (including the program name) and runs the command, writing
/// to the given streams.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{}", text.ansi())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs with the process's argv and stdio.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

/// CSV to `--out` or stdout.
fn emit_csv<T: CsvRecord>(rows: &[T], path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => write_csv(rows, path),
        None => out.write_all(to_csv_string(rows).as_bytes()).map_err(io),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Analyze {
            p,
            q,
            b,
            g,
            interval,
            format,
        } => analyze(p, q, b, g, interval, format, out),
        Command::Quadratic { p } => quadratic(p, out),
        Command::Digits { p, b, g } => digits(p, b.resolve(p)?, g, out),
        Command::Classnum { p } => classnum(p, out),
        Command::Table1 { output } => table1(&output, out),
        Command::Table2 { output } => {
            let rows = scan_sixth(
                7,
                1000,
                BaseSpec::Digit10,
                &GeneratorSpec::Smallest,
                output.jobs,
            )?;
            sixth_rows(&rows, &output, out)
        }
        Command::Diagram2 { pmax, rows, output } => {
            let (stats, all) = diagram2_stats(pmax, output.jobs)?;
            if rows {
                emit_csv(&all, output.out.as_deref(), out)
            } else if output.format == Format::Csv || output.out.is_some() {
                emit_csv(std::slice::from_ref(&stats), output.out.as_deref(), out)
            } else {
                writeln!(out, "{stats}").map_err(io)
            }
        }
        Command::Tenth {
            p: Some(p), output, ..
        } => {
            let r = classify_tenth(p, None)?;
            if output.format == Format::Csv || output.out.is_some() {
                emit_csv(
                    &[crate::scanner::TenthRow::from_report(&r)],
                    output.out.as_deref(),
                    out,
                )
            } else {
                print_tenth(&r, out)
            }
        }
        Command::Tenth {
            p: None,
            pmax,
            output,
        } => tenth_scan(pmax, &output, out),
        Command::Scan {
            pmin,
            pmax,
            q,
            b,
            g,
            output,
        } => match q {
            6 => {
                let base = match b {
                    BaseArg::Fixed(b) => BaseSpec::Fixed(b),
                    BaseArg::PPlusOne => BaseSpec::PPlusOne,
                    BaseArg::Digits => BaseSpec::Digit10,
                };
                let gens = match g {
                    None => GeneratorSpec::Smallest,
                    Some(g) => GeneratorSpec::Explicit(
                        crate::modular::primes_up_to(pmax)
                            .into_iter()
                            .map(|p| (p, g))
                            .collect(),
                    ),
                };
                let rows = scan_sixth(pmin, pmax, base, &gens, output.jobs)?;
                sixth_rows(&rows, &output, out)
            }
            10 => {
                if b != BaseArg::PPlusOne || g.is_some() || pmin != 7 {
                    return Err(Error::Precondition(
                        "the q = 10 scan uses b = p+1 and the smallest primitive root; pass --b p+1".into(),
                    ));
                }
                tenth_scan(pmax, &output, out)
            }
            other => Err(Error::Precondition(format!(
                "scan supports q = 6 or q = 10, got q = {other}"
            ))),
        },
    }
}

fn list(xs: impl IntoIterator<Item = String>) -> String {
    format!("({})", xs.into_iter().collect::<Vec<_>>().join(", "))
}

fn analyze(
    p: u64,
    q: u32,
    b: BaseArg,
    g: Option<u64>,
    interval: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    check_prime_and_conductor(p, q)?;
    if interval {
        if q != 6 {
            return Err(Error::Precondition("--interval requires q = 6".into()));
        }
        let r = classify_sixth_interval(p, g)?;
        return print_sixth(&r, format, out);
    }
    let b = b.resolve(p)?;
    match q {
        6 => print_sixth(&classify_sixth(p, b, g)?, format, out),
        10 if b == p + 1 && g.is_none() => {
            let r = classify_tenth(p, None)?;
            if format == Format::Csv {
                emit_csv(&[crate::scanner::TenthRow::from_report(&r)], None, out)
            } else {
                print_tenth(&r, out)
            }
        }
        _ => {
            let system = ResidueSystem::new(p, q, g)?;
            let t = deviation_vector(&system, b)?;
            let verdict = classify_by_norm(&t);
            let record = ClassNumberRecord::compute(p)?;
            let w = |e: std::io::Error| io(e);
            writeln!(out, "p = {p}, q = {q}, b = {b}, g = {}", system.g()).map_err(w)?;
            writeln!(out, "S = {}", list(t.sums.iter().map(|s| s.to_string()))).map_err(w)?;
            writeln!(out, "T = {}", list(t.entries.iter().map(rational))).map_err(w)?;
            writeln!(out, "|T|^2 = {}", rational(&t.norm_squared())).map_err(w)?;
            writeln!(out, "sign = {}", verdict.sign).map_err(w)?;
            writeln!(out, "h2 = {}", record.h2).map_err(w)?;
            if let Some(h10) = record.h10.filter(|_| q == 10) {
                writeln!(out, "h10 = {h10}").map_err(w)?;
            }
            if t.n() > 1 {
                writeln!(out, "criterion (from |T|^2) = {}", verdict.applied).map_err(w)?;
            }
            Ok(())
        }
    }
}

fn print_sixth(r: &SixthReport, format: Format, out: &mut dyn Write) -> Result<()> {
    if format == Format::Csv {
        if r.b.is_none() {
            return Err(Error::Precondition(
                "CSV rows need a base; the interval statistic has none".into(),
            ));
        }
        return emit_csv(&[ScanRow::from_report(r)?], None, out);
    }
    let v = &r.verdict;
    let base =
        r.b.map_or("interval statistic".to_string(), |b| format!("b = {b}"));
    let lines = [
        format!("p = {}, q = 6, {base}, g = {}", r.p, r.g),
        format!(
            "S = {}",
            list(r.deviation.sums.iter().map(|s| s.to_string()))
        ),
        format!("T = {}", list(r.deviation.entries.iter().map(rational))),
        format!(
            "|T|^2 = {} ≈ {}",
            rational(&r.norm_sq),
            decimal6(&r.norm_sq)
        ),
        format!(
            "sign = {}{}",
            v.sign,
            if v.is_main_type { " (main type)" } else { "" }
        ),
        format!(
            "|c6|^2 = {}, c2^2 = {}",
            rational(&v.c_sq[0]),
            rational(&v.c2_sq)
        ),
        format!("h2 = {}, h6 = {}", r.h2, r.h6),
        format!("h6/h2^3 ≈ {}", decimal6(&r.ratio())),
        format!("criterion = {}", v.applied),
    ];
    for line in lines {
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(())
}

fn print_tenth(r: &TenthReport, out: &mut dyn Write) -> Result<()> {
    let lines = [
        format!("p = {}, q = 10, b = {}, g = {}", r.p, r.p + 1, r.g),
        format!("T = {}", list(r.deviation.entries.iter().map(rational))),
        format!(
            "sign = {}{}",
            r.actual_sign,
            if r.is_main_type { " (main type)" } else { "" }
        ),
        format!("h2 = {}, h10 = {}", r.h2, r.h10),
        format!(
            "|T|^2 = {} ≈ {}",
            rational(&r.norm_sq),
            decimal6(&r.norm_sq)
        ),
        format!("lower bound ≈ {}", decimal6(&r.lower_bound)),
        format!("strict criterion (16·h10 ≥ h2^5): {}", r.strict_b_applies),
        format!(
            "probable main type (4096·h10 < h2^5): {}",
            r.probabilistic_main
        ),
        format!("criterion (from |T|^2) = {}", r.verdict.applied),
    ];
    for line in lines {
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(())
}

fn quadratic(p: u64, out: &mut dyn Write) -> Result<()> {
    let c = quadratic_interval_counts(p)?;
    let diff = class_sum_difference(p)?;
    let lines = [
        format!("p = {p}, h2 = {}", c.h2),
        format!("residues − nonresidues in (0, p/2): {}", c.half),
        format!("residues − nonresidues in (0, p/6): {}", c.sixth),
        format!("residues in (p/6, p/3) − (2p/3, 5p/6): {}", c.mid1),
        format!("residues in (p/3, p/2) − (p/2, 2p/3): {}", c.mid2),
        format!("Σ residues − Σ nonresidues: {diff}"),
    ];
    for line in lines {
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(())
}

fn digits(p: u64, b: u64, g: Option<u64>, out: &mut dyn Write) -> Result<()> {
    check_prime_and_conductor(p, 2)?;
    let period = digit_period(p, b, 1)?;
    let rendered = if b <= 10 {
        period
            .digits
            .iter()
            .map(|d| d.to_string())
            .collect::<String>()
    } else {
        period
            .digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    writeln!(
        out,
        "period of 1/{p} in base {b} (length {}): {rendered}",
        period.len()
    )
    .map_err(io)?;
    if is_primitive_root(b, p) {
        let c = alternating_digit_check(p, b)?;
        writeln!(
            out,
            "even − odd position digit sums: {} − {} = {} = (b+1)·h2",
            c.even_sum, c.odd_sum, c.predicted
        )
        .map_err(io)?;
    }
    let system = ResidueSystem::new(p, 2, g)?;
    let check = if legendre(b as i128, p) == -1 {
        (
            "odd-position digit sums",
            nonresidue_digit_sums(&system, b)?,
        )
    } else {
        ("digit sums", residue_digit_sums(&system, b)?)
    };
    let (label, c) = check;
    writeln!(
        out,
        "{label} of m/{p}, m ∈ {}: {} = {}",
        list(c.numerators.iter().map(|m| m.to_string())),
        list(c.partial_sums.iter().map(|s| s.to_string())),
        c.lhs
    )
    .map_err(io)?;
    if b % 2 == 0 {
        if let Ok(s) = digit_split_counts(p, b) {
            writeln!(
                out,
                "digits < b/2 minus digits ≥ b/2: {} − {} = {}",
                s.low, s.high, s.predicted
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

fn classnum(p: u64, out: &mut dyn Write) -> Result<()> {
    let r = ClassNumberRecord::compute(p)?;
    writeln!(out, "p = {p}").map_err(io)?;
    writeln!(out, "h2 = {}", r.h2).map_err(io)?;
    if let Some(h6) = &r.h6 {
        writeln!(out, "h6 = {h6}").map_err(io)?;
    }
    if let Some(h10) = &r.h10 {
        writeln!(out, "h10 = {h10}").map_err(io)?;
    }
    Ok(())
}

fn sixth_rows(rows: &[ScanRow], output: &Output, out: &mut dyn Write) -> Result<()> {
    if output.format == Format::Csv || output.out.is_some() {
        return emit_csv(rows, output.out.as_deref(), out);
    }
    writeln!(
        out,
        "{:>7} {:>4} {:>7} {:>6} {:>6} {:>6} {:>5} {:>7}  {:<10}",
        "p", "g", "b", "|c6|²", "c2²", "h6", "h2", "crit", "sign"
    )
    .map_err(io)?;
    for r in rows {
        let main = if r.is_main_type() {
            "main".to_string()
        } else {
            r.sign.to_string()
        };
        writeln!(
            out,
            "{:>7} {:>4} {:>7} {:>6} {:>6} {:>6} {:>5} {:>7}  {:<10}",
            r.p,
            r.g,
            r.b,
            rational(&r.c6_sq),
            rational(&r.c2_sq),
            r.h6,
            r.h2,
            r.verdict.to_string(),
            main
        )
        .map_err(io)?;
    }
    Ok(())
}

fn table1(output: &Output, out: &mut dyn Write) -> Result<()> {
    let gens = example_primitive_roots();
    let two = scan_sixth(7, 500, BaseSpec::Fixed(2), &gens, output.jobs)?;
    let plus = scan_sixth(7, 500, BaseSpec::PPlusOne, &gens, output.jobs)?;
    if output.format == Format::Csv || output.out.is_some() {
        let rows: Vec<ScanRow> = two.into_iter().chain(plus).collect();
        return emit_csv(&rows, output.out.as_deref(), out);
    }
    let show = |r: &ScanRow| {
        if r.is_main_type() {
            "main".to_string()
        } else {
            r.sign.to_string()
        }
    };
    writeln!(
        out,
        "{:>4} {:>3} {:>3} {:>3} {:>4} {:>3}  {:<4} {:<10}  {:<4} {:<10}",
        "p", "g", "c6", "c2", "h6", "h2", "b=2", "", "p+1", ""
    )
    .map_err(io)?;
    let mut both_b = 0;
    for (a, b) in two.iter().zip(&plus) {
        if a.verdict == crate::deviation::Criterion::B
            && b.verdict == crate::deviation::Criterion::B
        {
            both_b += 1;
            continue;
        }
        writeln!(
            out,
            "{:>4} {:>3} {:>3} {:>3} {:>4} {:>3}  {:<4} {:<10}  {:<4} {:<10}",
            a.p,
            a.g,
            rational(&a.c6_sq),
            rational(&a.c2_sq),
            a.h6,
            a.h2,
            a.verdict.to_string(),
            show(a),
            b.verdict.to_string(),
            show(b)
        )
        .map_err(io)?;
    }
    writeln!(
        out,
        "{both_b} of {} primes have criterion B for both bases",
        two.len()
    )
    .map_err(io)?;
    Ok(())
}

fn tenth_scan(pmax: u64, output: &Output, out: &mut dyn Write) -> Result<()> {
    let scan = scan_tenth(pmax, output.jobs)?;
    if output.format == Format::Csv || output.out.is_some() {
        return emit_csv(&scan.rows, output.out.as_deref(), out);
    }
    let strict = scan.rows.iter().filter(|r| r.strict_b).count();
    let prob = scan.rows.iter().filter(|r| r.prob_main).count();
    let wrong: Vec<String> = scan
        .rows
        .iter()
        .filter(|r| r.is_false_prediction())
        .map(|r| r.p.to_string())
        .collect();
    writeln!(
        out,
        "primes p ≡ 11 (mod 20), 11 < p ≤ {pmax}: {}",
        scan.rows.len()
    )
    .map_err(io)?;
    writeln!(out, "strict criterion applies: {strict}").map_err(io)?;
    writeln!(out, "main type predicted: {prob}").map_err(io)?;
    writeln!(
        out,
        "false predictions: {} {}",
        scan.false_prediction_count,
        list(wrong)
    )
    .map_err(io)?;
    Ok(())
}
