//! Command-line front end.
//!
//! Exit status: 0 on success, 2 for usage errors and refused bounds, 3 when
//! an internal consistency check fails (the diagnostic goes to stderr).

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Number, Value};

use crate::census::class_families;
use crate::counting::{orbit_count, predicted_fix, OrbitCountReport};
use crate::error::Error;
use crate::forms::enumerate_irreducible_forms;
use crate::numtheory::{primes_between, require_prime};
use crate::oracle::{fix_count, orbit_count_bfs, orbit_count_burnside_brute, DEFAULT_BURNSIDE_BUDGET};
use crate::porc::porc_table;
use crate::presentations::presentations;
use crate::{BOUND_ENV_VAR, DEFAULT_ENUMERATION_BOUND};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "formcount", version, about = "Orbits of irreducible binary forms over GF(p) under GL(2,p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbit count from the closed formula
    Count(CountArgs),
    /// Predicted and brute-force fixed points per conjugacy-class family
    Fix(FixArgs),
    /// Orbit counts as polynomials on residue classes of p mod n
    Porc(PorcArgs),
    /// Brute-force orbit count, compared against the formula
    Oracle(OracleArgs),
    /// Orbit representatives as coefficient rows
    Reps(RepsArgs),
    /// Presentations of the indecomposable (d,2) groups
    Groups(GroupsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Gap,
}

#[derive(Debug, Args)]
struct BoundArg {
    /// Largest p^n to enumerate
    #[arg(long, env = BOUND_ENV_VAR, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: u64,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long = "p")]
    p: Option<u64>,
    #[arg(long = "n")]
    n: u64,
    #[arg(long)]
    p_from: Option<u64>,
    #[arg(long)]
    p_to: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct FixArgs {
    #[arg(long = "p")]
    p: u64,
    #[arg(long = "n")]
    n: u64,
    #[command(flatten)]
    bound: BoundArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct PorcArgs {
    #[arg(long = "n")]
    n: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Bfs,
    Burnside,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long = "p")]
    p: u64,
    #[arg(long = "n")]
    n: u64,
    #[arg(long, value_enum, default_value_t = Mode::Bfs)]
    mode: Mode,
    #[command(flatten)]
    bound: BoundArg,
    /// Largest |GL(2,p)| * #forms for --mode burnside
    #[arg(long, default_value_t = DEFAULT_BURNSIDE_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct RepsArgs {
    #[arg(long = "p")]
    p: u64,
    #[arg(long = "n")]
    n: u64,
    #[command(flatten)]
    bound: BoundArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct GroupsArgs {
    #[arg(long = "p")]
    p: u64,
    #[arg(long = "d")]
    d: u64,
    #[command(flatten)]
    bound: BoundArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Usage(String),
    Engine(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type Outcome = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn formats(f: Format, allowed: &[Format], cmd: &str) -> Outcome {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(usage(format!("{cmd} does not support --format {f:?}").to_lowercase()))
    }
}

fn big_number(s: impl ToString) -> Value {
    Value::Number(s.to_string().parse::<Number>().expect("decimal integer"))
}

fn write_json(out: &mut dyn Write, v: &impl Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, v).map_err(io::Error::other)?;
    writeln!(out)?;
    Ok(())
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Count(a) => count(a, out),
        Command::Fix(a) => fix(a, out),
        Command::Porc(a) => porc(a, out, err),
        Command::Oracle(a) => oracle(a, out),
        Command::Reps(a) => reps(a, out),
        Command::Groups(a) => groups(a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Engine(e)) => match e {
            Error::InvalidArgument(_) | Error::NotPrime(_) | Error::BoundExceeded { .. } => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
            _ => {
                let _ = writeln!(err, "internal check failed: {e}");
                EXIT_INVARIANT
            }
        },
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Serialize)]
struct CountRow {
    p: u64,
    n: u64,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    d: Option<String>,
    group_order: String,
    orbits: String,
}

impl From<&OrbitCountReport> for CountRow {
    fn from(r: &OrbitCountReport) -> Self {
        let t = r.terms.as_ref();
        CountRow {
            p: r.p,
            n: r.n,
            a: t.map(|t| t.a.to_string()),
            b: t.map(|t| t.b.to_string()),
            c: t.map(|t| t.c.to_string()),
            d: t.map(|t| t.d.to_string()),
            group_order: r.group_order.to_string(),
            orbits: r.orbit_count.to_string(),
        }
    }
}

fn count(a: CountArgs, out: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Csv], "count")?;
    let primes = match (a.p, a.p_from, a.p_to) {
        (Some(p), None, None) => {
            require_prime(p)?;
            vec![p]
        }
        (None, Some(lo), Some(hi)) if lo <= hi => primes_between(lo, hi),
        (None, Some(_), Some(_)) => return Err(usage("--p-from must not exceed --p-to")),
        _ => return Err(usage("give either --p, or both --p-from and --p-to")),
    };
    let single = a.p.is_some();
    let reports: Vec<OrbitCountReport> = primes
        .par_iter()
        .map(|&p| orbit_count(p, a.n))
        .collect::<crate::Result<_>>()?;
    let rows: Vec<CountRow> = reports.iter().map(CountRow::from).collect();

    match a.format {
        Format::Json if single => write_json(out, &rows[0]),
        Format::Json => write_json(
            out,
            &json!({
                "n": a.n,
                "p_from": a.p_from,
                "p_to": a.p_to,
                "rows": rows,
            }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &rows {
                w.serialize(row)?;
            }
            if rows.is_empty() {
                w.write_record(["p", "n", "a", "b", "c", "d", "group_order", "orbits"])?;
            }
            w.flush()?;
            Ok(())
        }
        _ if single => {
            let r = &rows[0];
            writeln!(out, "p = {}, n = {}", r.p, r.n)?;
            match (&r.a, &r.b, &r.c, &r.d) {
                (Some(ta), Some(tb), Some(tc), Some(td)) => {
                    writeln!(out, "a = {ta}")?;
                    writeln!(out, "b = {tb}")?;
                    writeln!(out, "c = {tc}")?;
                    writeln!(out, "d = {td}")?;
                }
                _ => writeln!(out, "(n <= 2: a single orbit)")?,
            }
            writeln!(out, "|GL(2,p)| = {}", r.group_order)?;
            writeln!(out, "orbits = {}", r.orbits)?;
            Ok(())
        }
        _ => {
            let header = ["p", "a", "b", "c", "d", "|GL(2,p)|", "orbits"];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let dash = || "-".to_string();
                    vec![
                        r.p.to_string(),
                        r.a.clone().unwrap_or_else(dash),
                        r.b.clone().unwrap_or_else(dash),
                        r.c.clone().unwrap_or_else(dash),
                        r.d.clone().unwrap_or_else(dash),
                        r.group_order.clone(),
                        r.orbits.clone(),
                    ]
                })
                .collect();
            write_table(out, &header, &body)
        }
    }
}

fn write_table(out: &mut dyn Write, header: &[&str], body: &[Vec<String>]) -> Outcome {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in body {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct FixRow {
    kind: String,
    e: u64,
    class_count: String,
    class_size: u64,
    representative: String,
    predicted_fix: String,
    fix_brute: Option<String>,
}

fn fix(a: FixArgs, out: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Csv], "fix")?;
    if a.n == 0 {
        return Err(usage("--n must be positive"));
    }
    let families = class_families(a.p)?;
    let forms = if a.n >= 2 {
        match enumerate_irreducible_forms(a.p, a.n as usize, a.bound.bound) {
            Ok(f) => Some(f),
            Err(Error::BoundExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for fam in &families {
        let predicted: BigRational = predicted_fix(a.p, a.n, fam)?;
        let brute = forms.as_ref().map(|f| fix_count(f, &fam.representative));
        if let Some(b) = brute {
            if predicted != BigRational::from_integer(BigInt::from(b)) {
                mismatches.push(format!("{} e={}: predicted {predicted}, found {b}", fam.kind, fam.e));
            }
        }
        rows.push(FixRow {
            kind: fam.kind.to_string(),
            e: fam.e,
            class_count: fam.class_count.to_string(),
            class_size: fam.class_size,
            representative: fam.representative.to_string(),
            predicted_fix: predicted.to_string(),
            fix_brute: brute.map(|b| b.to_string()),
        });
    }

    match a.format {
        Format::Json => write_json(out, &json!({ "p": a.p, "n": a.n, "families": rows }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        _ => {
            writeln!(out, "p = {}, n = {}", a.p, a.n)?;
            let header = ["class", "e", "count", "size", "representative", "predicted", "brute"];
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.kind.clone(),
                        r.e.to_string(),
                        r.class_count.clone(),
                        r.class_size.to_string(),
                        r.representative.clone(),
                        r.predicted_fix.clone(),
                        r.fix_brute.clone().unwrap_or_else(|| "-".into()),
                    ]
                })
                .collect();
            write_table(out, &header, &body)?;
            if forms.is_none() {
                writeln!(out, "(brute force skipped: {}^{} exceeds the bound {})", a.p, a.n, a.bound.bound)?;
            }
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Error::Invariant(mismatches.join("; ")).into())
    }
}

fn porc(a: PorcArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Csv], "porc")?;
    let table = porc_table(a.n)?;
    let uncovered = table.uncovered_primes();
    match a.format {
        Format::Json => {
            let classes: Vec<Value> = table
                .classes
                .iter()
                .map(|(r, poly)| {
                    json!({
                        "r": r,
                        "num": poly.integer_numerator().iter().map(big_number).collect::<Vec<_>>(),
                        "den": big_number(poly.denominator()),
                    })
                })
                .collect();
            write_json(
                out,
                &json!({ "n": a.n, "classes": classes, "uncovered_primes": uncovered }),
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["r", "num", "den", "polynomial"])?;
            for (r, poly) in &table.classes {
                let num: Vec<String> = poly.integer_numerator().iter().map(BigInt::to_string).collect();
                w.write_record([
                    r.to_string(),
                    num.join(" "),
                    poly.denominator().to_string(),
                    poly.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        _ => {
            for (r, poly) in &table.classes {
                writeln!(out, "p \u{2261} {r} (mod {}): {poly}", a.n)?;
            }
            if !uncovered.is_empty() {
                let list: Vec<String> = uncovered.iter().map(u64::to_string).collect();
                writeln!(
                    err,
                    "note: p = {} divides n and is not covered; use `count`",
                    list.join(", ")
                )?;
            }
            Ok(())
        }
    }
}

fn oracle(a: OracleArgs, out: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Csv], "oracle")?;
    require_prime(a.p)?;
    if a.n < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let brute: BigInt = match a.mode {
        Mode::Bfs => orbit_count_bfs(a.p, a.n as usize, a.bound.bound)?.count().into(),
        Mode::Burnside => orbit_count_burnside_brute(a.p, a.n as usize, a.bound.bound, a.budget)?,
    };
    let formula = orbit_count(a.p, a.n)?.orbit_count;
    let agrees = brute == formula;
    let mode = match a.mode {
        Mode::Bfs => "bfs",
        Mode::Burnside => "burnside",
    };
    match a.format {
        Format::Json => write_json(
            out,
            &json!({
                "p": a.p,
                "n": a.n,
                "mode": mode,
                "orbits": brute.to_string(),
                "formula": formula.to_string(),
                "agrees": agrees,
            }),
        )?,
        Format::Csv => {
            writeln!(out, "p,n,mode,orbits,formula,agrees")?;
            writeln!(out, "{},{},{mode},{brute},{formula},{agrees}", a.p, a.n)?;
        }
        _ if agrees => writeln!(out, "orbits = {brute} (formula agrees)")?,
        _ => writeln!(out, "orbits = {brute} (formula disagrees: {formula})")?,
    }
    if agrees {
        Ok(())
    } else {
        Err(Error::Invariant(format!("brute force {brute} != formula {formula}")).into())
    }
}

fn reps(a: RepsArgs, out: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Csv], "reps")?;
    require_prime(a.p)?;
    if a.n < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let part = orbit_count_bfs(a.p, a.n as usize, a.bound.bound)?;
    match a.format {
        Format::Json => {
            let reps: Vec<Value> = part
                .orbits
                .iter()
                .map(|o| {
                    json!({
                        "coeffs": o[0].coeffs(),
                        "form": o[0].to_string(),
                        "orbit_size": o.len().to_string(),
                    })
                })
                .collect();
            write_json(out, &json!({ "p": a.p, "n": a.n, "representatives": reps }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["coeffs", "orbit_size", "form"])?;
            for o in &part.orbits {
                let c: Vec<String> = o[0].coeffs().iter().map(u64::to_string).collect();
                w.write_record([c.join(" "), o.len().to_string(), o[0].to_string()])?;
            }
            w.flush()?;
            Ok(())
        }
        _ => {
            for o in &part.orbits {
                let c: Vec<String> = o[0].coeffs().iter().map(u64::to_string).collect();
                writeln!(out, "{}    # {}, orbit size {}", c.join(" "), o[0], o.len())?;
            }
            Ok(())
        }
    }
}

fn groups(a: GroupsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    formats(a.format, &[Format::Text, Format::Json, Format::Gap], "groups")?;
    let list = presentations(a.p, a.d, a.bound.bound)?;
    if a.p == 2 {
        writeln!(err, "warning: the group correspondence assumes p > 2")?;
    }
    match a.format {
        Format::Json => {
            let groups: Vec<Value> = list
                .iter()
                .map(|g| {
                    let mut v = serde_json::to_value(g).expect("plain data");
                    v["relations_text"] = json!(g
                        .relations
                        .iter()
                        .map(|r| g.relation_text(r))
                        .collect::<Vec<_>>());
                    v
                })
                .collect();
            write_json(
                out,
                &json!({ "p": a.p, "d": a.d, "count": list.len().to_string(), "groups": groups }),
            )
        }
        Format::Gap => {
            for (i, g) in list.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", g.to_gap())?;
            }
            Ok(())
        }
        _ => {
            writeln!(out, "{} indecomposable ({},2) group(s) at p = {}", list.len(), a.d, a.p)?;
            for g in &list {
                writeln!(out)?;
                write!(out, "{g}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["formcount"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_json_example() {
        let (code, out, _) = call(&["count", "--p", "5", "--n", "4", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"p":5,"n":4,"a":"600","b":"0","c":"600","d":"240","group_order":"480","orbits":"3"}"#
        );
    }

    #[test]
    fn porc_text_example() {
        let (code, out, err) = call(&["porc", "--n", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "p \u{2261} 1 (mod 4): (p+1)/2\np \u{2261} 3 (mod 4): (p+1)/2\n");
        assert!(err.contains("p = 2"));
    }

    #[test]
    fn oracle_text_example() {
        let (code, out, _) = call(&["oracle", "--p", "2", "--n", "4", "--mode", "bfs"]);
        assert_eq!(code, 0);
        assert_eq!(out, "orbits = 1 (formula agrees)\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["count", "--n", "4"]).0, 2);
        assert_eq!(call(&["count", "--p", "4", "--n", "4"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["groups", "--p", "5", "--d", "8", "--format", "csv"]).0, 2);
        assert_eq!(call(&["oracle", "--p", "7", "--n", "9", "--bound", "1000"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
