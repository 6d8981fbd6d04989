//! `quintic`: run the verification registry, congruence scans, matrix
//! generators and series dumps.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use quintic::eisenstein::{eisenstein_level1, eisenstein_level5, lambert_l, t_series, DirichletChar5};
use quintic::partitions::{congruence_scan, delta_series, CongruenceCertificate, Verdict};
use quintic::pentops::{hecke_matrix, pent_array};
use quintic::qseries::SeriesTerm;
use quintic::quintic::{a, b, c, d, rogers_ramanujan, rr_continued_fraction, Form, RogersRamanujan};
use quintic::registry::{entries, lookup, registry_listing, verify_registry};
use quintic::{tables, IdentityReport, QSeries};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "quintic", version, about = "Exact verification of quintic theta-function identities")]
struct Cli {
    /// Truncation order; without it each identity uses its registered default.
    #[arg(long, global = true, env = "QUINTIC_DEFAULT_ORDER")]
    order: Option<i64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for `verify` (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify registered identities by name, or `all`.
    Verify {
        #[arg(required = true)]
        names: Vec<String>,
    },
    /// List the registry.
    List,
    /// Print the pentamidiation array B_d or the Hecke matrix A_d.
    Pentarray {
        d: usize,
        #[arg(long, value_enum, default_value_t = Which::B)]
        which: Which,
        /// Compare with the embedded printed table.
        #[arg(long)]
        check_paper: bool,
    },
    /// Check p_k(a n + b) = 0 mod M for 0 <= n <= nmax.
    Scan {
        #[arg(short = 'k', allow_negative_numbers = true)]
        k: i64,
        #[arg(short = 'M')]
        modulus: u64,
        #[arg(short = 'a')]
        a: i64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        b: i64,
        #[arg(long)]
        nmax: i64,
    },
    /// Serialize a named series.
    Dump { id: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

/// Bad input: reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema: u32,
    passed: bool,
    reports: &'a [IdentityReport],
}

#[derive(Serialize)]
struct ScanOutput<'a> {
    schema: u32,
    certificate: &'a CongruenceCertificate,
}

#[derive(Serialize)]
struct DumpOutput<'a> {
    schema: u32,
    id: &'a str,
    order: i64,
    terms: Vec<SeriesTerm>,
}

#[derive(Serialize)]
struct MatrixOutput {
    schema: u32,
    which: &'static str,
    d: usize,
    rows: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_printed: Option<bool>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => match emit(&cli, &text) {
            Ok(()) => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<(String, u8)> {
    if let Some(o) = cli.order {
        if o < 1 {
            return Err(usage(format!("order must be at least 1, got {o}")));
        }
    }
    match &cli.command {
        Command::Verify { names } => verify(cli, names),
        Command::List => list(cli),
        Command::Pentarray { d, which, check_paper } => pentarray(cli, *d, *which, *check_paper),
        Command::Scan { k, modulus, a, b, nmax } => scan(cli, *k, *modulus, *a, *b, *nmax),
        Command::Dump { id } => dump(cli, id),
    }
}

fn to_json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn verify(cli: &Cli, names: &[String]) -> anyhow::Result<(String, u8)> {
    let mut selected: Vec<&str> = if names.iter().any(|n| n == "all") {
        entries().iter().map(|e| e.name).collect()
    } else {
        names.iter().map(String::as_str).collect()
    };
    for n in &selected {
        lookup(n).map_err(|_| usage(format!("unknown identity `{n}` (see `quintic list`)")))?;
    }
    selected.sort_unstable();
    selected.dedup();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build()?;
    let reports: Vec<IdentityReport> = pool.install(|| {
        selected
            .par_iter()
            .map(|n| {
                let order = cli.order.unwrap_or_else(|| lookup(n).map(|e| e.default_order).unwrap_or(100));
                verify_registry(n, order).expect("registered name")
            })
            .collect()
    });
    let passed = reports.iter().all(|r| r.passed);
    let text = if cli.json {
        to_json(&VerifyOutput { schema: SCHEMA, passed, reports: &reports })?
    } else {
        let mut s = String::new();
        for r in &reports {
            let status = if r.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{status}  {} (order {})", r.name, r.order));
            if let Some(f) = &r.first_failure {
                s.push_str(&format!("  first failure at q^{f}"));
            }
            if !r.passed && !r.detail.is_empty() {
                s.push_str(&format!("  {}", r.detail));
            }
            s.push('\n');
        }
        let n_pass = reports.iter().filter(|r| r.passed).count();
        s.push_str(&format!("{n_pass}/{} passed\n", reports.len()));
        s
    };
    Ok((text, if passed { 0 } else { 1 }))
}

fn list(cli: &Cli) -> anyhow::Result<(String, u8)> {
    let items = registry_listing();
    let text = if cli.json {
        #[derive(Serialize)]
        struct ListOutput<'a> {
            schema: u32,
            entries: &'a [quintic::registry::RegistryInfo],
        }
        to_json(&ListOutput { schema: SCHEMA, entries: &items })?
    } else {
        items.iter().map(|e| format!("{:<30} {:<24} {}\n", e.name, e.anchor, e.default_order)).collect()
    };
    Ok((text, 0))
}

fn pentarray(cli: &Cli, d: usize, which: Which, check: bool) -> anyhow::Result<(String, u8)> {
    if !(1..=12).contains(&d) {
        return Err(usage(format!("d must lie in 1..=12, got {d}")));
    }
    let (m, name) = match which {
        Which::A => (hecke_matrix(d), "A"),
        Which::B => (pent_array(d), "B"),
    };
    let printed = match which {
        Which::A if d == 1 => None,
        Which::A => tables::printed_hecke(d),
        Which::B => tables::printed_pent_array(d),
    };
    let verdict = if check {
        let t = printed.ok_or_else(|| usage(format!("no printed table for {name}_{d}")))?;
        let cmp = match which {
            Which::A => m.first_mismatch(&t),
            Which::B => m.transpose().first_mismatch(&t),
        };
        Some(cmp)
    } else {
        None
    };
    let text = if cli.json {
        to_json(&MatrixOutput {
            schema: SCHEMA,
            which: name,
            d,
            rows: m.to_string_rows(),
            matches_printed: verdict.map(|v| v.is_none()),
        })?
    } else {
        let mut s = format!("{name}_{d} ({} x {})\n{m}", m.rows(), m.cols());
        match verdict {
            Some(None) => s.push_str("MATCH\n"),
            Some(Some((usize::MAX, _))) => s.push_str("MISMATCH: shape differs\n"),
            Some(Some((r, c))) => s.push_str(&format!("MISMATCH at row {r}, column {c}\n")),
            None => {}
        }
        s
    };
    let code = match verdict {
        Some(Some(_)) => 1,
        _ => 0,
    };
    Ok((text, code))
}

fn scan(cli: &Cli, k: i64, modulus: u64, a: i64, b: i64, nmax: i64) -> anyhow::Result<(String, u8)> {
    if a < 1 {
        return Err(usage(format!("progression step must be at least 1, got {a}")));
    }
    if modulus < 1 || nmax < 0 {
        return Err(usage("modulus must be positive and nmax nonnegative"));
    }
    let cert = congruence_scan(k, modulus, a, b, nmax);
    let text = if cli.json {
        to_json(&ScanOutput { schema: SCHEMA, certificate: &cert })?
    } else {
        let head = format!("p_{k}({a}n + {b}) = 0 mod {modulus}, 0 <= n <= {nmax}");
        match (&cert.verdict, &cert.counterexample) {
            (Verdict::Pass, _) => format!("PASS  {head}  [{:?}]\n", cert.label),
            (Verdict::Fail, Some(c)) => {
                format!("FAIL  {head}  counterexample n = {}: p_{k}({}) = {}\n", c.n, c.argument, c.value)
            }
            (Verdict::Fail, None) => format!("FAIL  {head}\n"),
        }
    };
    Ok((text, if cert.verdict == Verdict::Pass { 0 } else { 1 }))
}

/// `E_{k,chi}` / `L_{k,chi}` written as `E_{2,chi1}`, `E2,chi1` or `E_2_chi1`.
fn parse_character_id(id: &str) -> Option<(char, u32, DirichletChar5)> {
    let head = id.chars().next()?;
    let rest: String = id[1..].chars().filter(|c| !matches!(c, '{' | '}')).collect();
    let rest = rest.trim_start_matches('_');
    let (k, chi) = rest.split_once([',', '_'])?;
    Some((head, k.parse().ok()?, DirichletChar5::parse(chi).ok()?))
}

fn build_series(id: &str, order: i64) -> anyhow::Result<QSeries> {
    let unknown = || usage(format!("unknown series id `{id}`"));
    let s = match id {
        "A" => a(order),
        "B" => b(order),
        "C" => c(order),
        "D" => d(order),
        "G" => rogers_ramanujan(RogersRamanujan::G, Form::Product, order)?,
        "H" => rogers_ramanujan(RogersRamanujan::H, Form::Product, order)?,
        "R" => rr_continued_fraction(order),
        "E2" => eisenstein_level1(2, order)?,
        "E4" => eisenstein_level1(4, order)?,
        "E6" => eisenstein_level1(6, order)?,
        "delta" => delta_series(order),
        _ if id.starts_with('t') => {
            let i: u32 = id[1..].parse().map_err(|_| unknown())?;
            if !(1..=6).contains(&i) {
                bail!(unknown());
            }
            t_series(i, order)?
        }
        _ => match parse_character_id(id) {
            Some(('E', k, chi)) => eisenstein_level5(k, chi, order).map_err(|e| usage(e.to_string()))?,
            Some(('L', k, chi)) => lambert_l(k, chi, order).map_err(|e| usage(e.to_string()))?,
            _ => return Err(unknown()),
        },
    };
    Ok(s)
}

fn dump(cli: &Cli, id: &str) -> anyhow::Result<(String, u8)> {
    let order = cli.order.unwrap_or(100);
    let s = build_series(id, order).map_err(|e| if e.is::<Usage>() { e } else { anyhow!("{e}") })?;
    let terms = s.serialize_terms();
    let text = if cli.json {
        to_json(&DumpOutput { schema: SCHEMA, id, order, terms })?
    } else {
        let mut out = format!("{id} to order {order}\n");
        for t in terms {
            out.push_str(&format!("{:>8}  {}\n", t.exponent, t.coeff));
        }
        out
    };
    Ok((text, 0))
}
