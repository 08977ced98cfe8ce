// SPDX-License-Identifier: Apache-2.0

//! The `npn-dc` command-line front end.
//!
//! Every command writes its report to the supplied writers and returns the
//! process exit code: 0 for success (or EQUIVALENT), 1 for NOT-EQUIVALENT or
//! a failed self-test, 2 for usage and parse errors.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use rayon::prelude::*;

use crate::analysis::output_phase;
use crate::canon::{canonical_form, initial_group, match_functions, search};
use crate::error::Error;
use crate::fixtures;
use crate::oracle;
use crate::random::random_table;
use crate::signature::{dc_value, DcValue, Mode};
use crate::truthtable::{Cube, Literal, NpTransform, TruthTable, DEFAULT_MAX_VARS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const CSV_HEADER: [&str; 6] = ["n", "mode", "seed", "func_id", "runtime_s", "candidates"];

#[derive(Debug, Parser)]
#[command(
    name = "npn-dc",
    version,
    about = "NPN Boolean matching with DC signature canonical forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of one function
    Canon(CanonArgs),
    /// Decide NPN equivalence of two functions
    Match(MatchArgs),
    /// Group a corpus of functions into NPN classes
    Classify(ClassifyArgs),
    /// Compare DC and cofactor-only search on seeded random functions
    Bench(BenchArgs),
    /// Run the built-in fixtures and oracle sweep
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Number of input variables
    #[arg(long)]
    pub n: Option<usize>,
    /// Truth table as hex digits, x1 being the least significant index bit
    #[arg(long)]
    pub hex: Option<String>,
    /// File with one cube per line over 0, 1 and -
    #[arg(long, value_name = "FILE")]
    pub cubes: Option<PathBuf>,
    /// Seed for a random function (used when neither --hex nor --cubes is given)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Index of the random function within the seeded corpus
    #[arg(long, default_value_t = 0)]
    pub index: u64,
    /// Probability of each minterm being in the onset of a random function
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
}

#[derive(Debug, Args)]
pub struct CanonArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = Mode::Dc)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    /// Number of input variables (required for hex operands)
    #[arg(long)]
    pub n: Option<usize>,
    /// Hex operand; f and g are taken in command-line order across --hex and --cubes
    #[arg(long)]
    pub hex: Vec<String>,
    /// Cube-file operand
    #[arg(long, value_name = "FILE")]
    pub cubes: Vec<PathBuf>,
    #[arg(long, default_value_t = Mode::Dc)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Arity for hex entries that do not carry their own
    #[arg(long)]
    pub n: Option<usize>,
    /// A single hex function
    #[arg(long)]
    pub hex: Vec<String>,
    /// File of hex functions, one per line as "HEX" or "N HEX"
    #[arg(long, value_name = "FILE")]
    pub hex_file: Vec<PathBuf>,
    /// Cube file holding one function
    #[arg(long, value_name = "FILE")]
    pub cubes: Vec<PathBuf>,
    /// Write "index,n,hex,class,canonical" rows to this file
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    #[arg(long, default_value_t = Mode::Dc)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Arity or inclusive range such as 7-12
    #[arg(long, default_value = "7-10")]
    pub n: String,
    /// Functions per arity
    #[arg(long, default_value_t = 100)]
    pub count: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Modes to run; both when omitted
    #[arg(long)]
    pub mode: Vec<Mode>,
    /// Write per-function records here instead of standard output
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// 3 sweeps all n=3 functions against the oracle; 4 also samples n=4
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
    pub oracle_level: u8,
}

/// Failure of a command, mapped to an exit code by [`run`].
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(std::io::Error::other(e))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Canon(a) => cmd_canon(a, out),
        Command::Match(a) => {
            let sub = matches
                .subcommand_matches("match")
                .expect("match subcommand");
            cmd_match(a, sub, out)
        }
        Command::Classify(a) => cmd_classify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Selftest(a) => cmd_selftest(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Arity of a cube file: the length of its first cube line.
fn cube_file_arity(text: &str) -> Option<usize> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::len)
}

fn load_cubes(path: &Path, n: Option<usize>) -> std::result::Result<TruthTable, Failure> {
    let text = read_file(path)?;
    let n = match n.or_else(|| cube_file_arity(&text)) {
        Some(n) => n,
        None => return Err(Error::EmptyInput.into()),
    };
    Ok(TruthTable::from_cubes(&text, n)?)
}

fn load_hex(hex: &str, n: Option<usize>) -> std::result::Result<TruthTable, Failure> {
    let n = n.ok_or_else(|| Failure::Usage("--n is required with --hex".into()))?;
    Ok(TruthTable::from_hex(hex, n)?)
}

fn load_source(s: &SourceArgs) -> std::result::Result<TruthTable, Failure> {
    match (&s.hex, &s.cubes, s.seed) {
        (Some(h), None, _) => load_hex(h, s.n),
        (None, Some(p), _) => load_cubes(p, s.n),
        (None, None, Some(seed)) => {
            let n =
                s.n.ok_or_else(|| Failure::Usage("--n is required for a random function".into()))?;
            Ok(random_table(seed, n, s.index, s.density)?)
        }
        (Some(_), Some(_), _) => Err(Failure::Usage(
            "give either --hex or --cubes, not both".into(),
        )),
        (None, None, None) => Err(Failure::Usage(
            "no function given; use --hex, --cubes or --seed".into(),
        )),
    }
}

/// `g(x1..xn) = [~]f(...)` for a transform with `apply_transform(f, t) == g`.
pub fn describe_match(t: &NpTransform) -> String {
    format!("g(x1..x{}) = {}", t.n(), t.invert())
}

fn cmd_canon(a: &CanonArgs, out: &mut dyn Write) -> CmdResult {
    let f = load_source(&a.source)?;
    let r = canonical_form(&f, a.mode)?;
    writeln!(out, "n={} mode={}", f.n(), a.mode)?;
    writeln!(out, "canonical={}", r.canonical_table.to_hex())?;
    writeln!(out, "C_f: {}", r.c_f)?;
    writeln!(out, "output_phase={}", phase_name(&f))?;
    writeln!(out, "output_negated={}", r.c_f.output_negated)?;
    writeln!(out, "transform={}", r.transform())?;
    writeln!(out, "candidates={}", r.candidates_examined)?;
    writeln!(out, "pruned={}", r.branches_pruned)?;
    Ok(EXIT_OK)
}

fn cmd_match(a: &MatchArgs, m: &ArgMatches, out: &mut dyn Write) -> CmdResult {
    let mut operands: Vec<(usize, std::result::Result<TruthTable, Failure>)> = Vec::new();
    if let Some(idx) = m.indices_of("hex") {
        for (i, h) in idx.zip(&a.hex) {
            operands.push((i, load_hex(h, a.n)));
        }
    }
    if let Some(idx) = m.indices_of("cubes") {
        for (i, p) in idx.zip(&a.cubes) {
            operands.push((i, load_cubes(p, a.n)));
        }
    }
    if operands.len() != 2 {
        return Err(Failure::Usage(format!(
            "match needs exactly two functions, got {}",
            operands.len()
        )));
    }
    operands.sort_by_key(|(i, _)| *i);
    let mut it = operands.into_iter().map(|(_, t)| t);
    let f = it.next().expect("two operands")?;
    let g = it.next().expect("two operands")?;
    match match_functions(&f, &g, a.mode)? {
        Some(t) if f.apply_transform(&t)? == g => {
            writeln!(out, "EQUIVALENT")?;
            writeln!(out, "{}", describe_match(&t))?;
            Ok(EXIT_OK)
        }
        Some(_) => Err(Failure::Usage(
            "internal error: matching transform failed verification".into(),
        )),
        None => {
            writeln!(out, "NOT-EQUIVALENT")?;
            Ok(EXIT_MISMATCH)
        }
    }
}

/// Parses a hex corpus: one `HEX` or `N HEX` per line, `#` starts a comment.
fn parse_hex_corpus(text: &str, n: Option<usize>) -> std::result::Result<Vec<TruthTable>, Failure> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (arity, hex) = match fields.as_slice() {
            [hex] => (n, *hex),
            [k, hex] => {
                let k = k
                    .parse()
                    .map_err(|_| Failure::Usage(format!("line {}: bad arity {k:?}", lineno + 1)))?;
                (Some(k), *hex)
            }
            _ => {
                return Err(Failure::Usage(format!(
                    "line {}: expected \"HEX\" or \"N HEX\"",
                    lineno + 1
                )))
            }
        };
        out.push(load_hex(hex, arity)?);
    }
    Ok(out)
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut funcs = Vec::new();
    for h in &a.hex {
        funcs.push(load_hex(h, a.n)?);
    }
    for p in &a.hex_file {
        funcs.extend(parse_hex_corpus(&read_file(p)?, a.n)?);
    }
    for p in &a.cubes {
        funcs.push(load_cubes(p, a.n)?);
    }
    if funcs.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    let n = funcs[0].n();
    if let Some(bad) = funcs.iter().find(|f| f.n() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            found: bad.n(),
        }
        .into());
    }
    let canon: Vec<TruthTable> = funcs
        .par_iter()
        .map(|f| canonical_form(f, a.mode).map(|r| r.canonical_table))
        .collect::<crate::error::Result<_>>()?;

    let mut class_of: HashMap<&TruthTable, usize> = HashMap::new();
    let mut classes: Vec<(&TruthTable, usize)> = Vec::new();
    let mut assignment = Vec::with_capacity(funcs.len());
    for c in &canon {
        let id = *class_of.entry(c).or_insert_with(|| {
            classes.push((c, 0));
            classes.len() - 1
        });
        classes[id].1 += 1;
        assignment.push(id);
    }

    writeln!(out, "functions={} classes={}", funcs.len(), classes.len())?;
    for (id, (rep, size)) in classes.iter().enumerate() {
        writeln!(out, "class {id}: size={size} canonical={}", rep.to_hex())?;
    }
    if let Some(path) = &a.csv {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["index", "n", "hex", "class", "canonical"])?;
        for (i, f) in funcs.iter().enumerate() {
            w.write_record([
                i.to_string(),
                n.to_string(),
                f.to_hex(),
                assignment[i].to_string(),
                canon[i].to_hex(),
            ])?;
        }
        w.flush()?;
    }
    Ok(EXIT_OK)
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("invalid arity range {s:?}"));
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi || hi > DEFAULT_MAX_VARS {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// One canonicalization measured by the bench command.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    pub func_id: u64,
    pub runtime_s: f64,
    pub candidates: u64,
}

/// Runs both (or the selected) modes on `count` seeded functions per arity.
///
/// Functions are processed one after another so that wall-clock times are
/// not distorted by sibling threads.
pub fn bench_records(
    lo: usize,
    hi: usize,
    count: u64,
    seed: u64,
    density: f64,
    modes: &[Mode],
) -> crate::error::Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for n in lo..=hi {
        for func_id in 0..count {
            let f = random_table(seed, n, func_id, density)?;
            for &mode in modes {
                let start = Instant::now();
                let r = canonical_form(&f, mode)?;
                let runtime_s = start.elapsed().as_secs_f64();
                records.push(BenchRecord {
                    n,
                    mode,
                    seed,
                    func_id,
                    runtime_s,
                    candidates: r.candidates_examined,
                });
            }
        }
    }
    Ok(records)
}

fn write_records<W: Write>(w: W, records: &[BenchRecord]) -> std::result::Result<(), Failure> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.mode.to_string(),
            r.seed.to_string(),
            r.func_id.to_string(),
            format!("{:.9}", r.runtime_s),
            r.candidates.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let (lo, hi) = parse_range(&a.n)?;
    let modes = if a.mode.is_empty() {
        vec![Mode::Dc, Mode::CofactorOnly]
    } else {
        a.mode.clone()
    };
    let records = bench_records(lo, hi, a.count, a.seed, a.density, &modes)?;
    match &a.csv {
        Some(path) => write_records(fs::File::create(path)?, &records)?,
        None => write_records(&mut *out, &records)?,
    }
    // Summary lines start with '#' so that a CSV reader on stdout can skip them.
    writeln!(out, "# n mode avg_runtime_s avg_candidates")?;
    for n in lo..=hi {
        for &mode in &modes {
            let rows: Vec<&BenchRecord> = records
                .iter()
                .filter(|r| r.n == n && r.mode == mode)
                .collect();
            if rows.is_empty() {
                continue;
            }
            let k = rows.len() as f64;
            let t = rows.iter().map(|r| r.runtime_s).sum::<f64>() / k;
            let c = rows.iter().map(|r| r.candidates as f64).sum::<f64>() / k;
            writeln!(out, "# {n} {mode} {t:.6} {c:.3}")?;
        }
    }
    Ok(EXIT_OK)
}

/// One named self-test check; `Err` carries the first mismatch.
type Check = (
    &'static str,
    Box<dyn Fn() -> std::result::Result<(), String>>,
);

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn dcs(f: &TruthTable, prefix: &[Literal], lits: &[Literal]) -> Vec<DcValue> {
    let cube = Cube::new(prefix.to_vec()).expect("distinct prefix");
    lits.iter()
        .map(|&l| dc_value(f, &cube, l).expect("valid literal"))
        .collect()
}

fn dv(pairs: &[(u64, u64)]) -> Vec<DcValue> {
    pairs.iter().map(|&(c, d)| DcValue::new(c, d)).collect()
}

/// Largest-vector table reachable from Example 1 without output negation,
/// confirmed by enumerating all 7!·2^7 input transformations.
const EXAMPLE1_POSITIVE_MAX: &str = "aaaaaaaaff000000c0c0c0c0ffc0c0c0";

fn selftest_checks(level: u8) -> Vec<Check> {
    let mut checks: Vec<Check> = vec![
        (
            "example 1 signatures",
            Box::new(|| {
                let f = fixtures::example1();
                expect_eq("|f|", f.minterm_count(), 46)?;
                let pos: Vec<Literal> = (0..7).map(Literal::pos).collect();
                expect_eq(
                    "first-order values",
                    dcs(&f, &[], &pos),
                    dv(&[
                        (16, 28),
                        (16, 28),
                        (30, 28),
                        (22, 44),
                        (24, 44),
                        (15, 32),
                        (30, 28),
                    ]),
                )
            }),
        ),
        (
            "example 1 search",
            Box::new(|| {
                let f = fixtures::example1();
                let state = initial_group(&f, Mode::Dc).map_err(|e| e.to_string())?;
                let groups: Vec<String> = state.groups.iter().map(ToString::to_string).collect();
                expect_eq(
                    "initial groups",
                    groups.join(" "),
                    "G1={~x6} G2={~x1,~x2},{x3,x7} G3={~x4},{x5}".to_string(),
                )?;
                let r = search(&f, &state, Mode::Dc).map_err(|e| e.to_string())?;
                expect_eq("candidates", r.candidates_examined, 2)?;
                expect_eq(
                    "canonical table",
                    r.canonical_table.to_hex(),
                    EXAMPLE1_POSITIVE_MAX.into(),
                )
            }),
        ),
        (
            "example 2 signatures",
            Box::new(|| {
                let f = fixtures::example2();
                expect_eq("|f|", f.minterm_count(), 32)?;
                let pos: Vec<Literal> = (0..6).map(Literal::pos).collect();
                expect_eq(
                    "first-order values",
                    dcs(&f, &[], &pos),
                    dv(&[(13, 64), (16, 36), (16, 52), (16, 20), (16, 12), (16, 28)]),
                )?;
                expect_eq(
                    "second-order values after ~x1",
                    dcs(&f, &[Literal::neg(0)], &pos[1..]),
                    dv(&[(9, 18), (10, 26), (10, 10), (10, 6), (10, 14)]),
                )
            }),
        ),
        (
            "example 2 candidate counts",
            Box::new(|| {
                let f = fixtures::example2();
                let dc = canonical_form(&f, Mode::Dc).map_err(|e| e.to_string())?;
                expect_eq("dc candidates", dc.candidates_examined, 2)?;
                let cof = canonical_form(&f, Mode::CofactorOnly).map_err(|e| e.to_string())?;
                expect_eq("cofactor-only candidates", cof.candidates_examined, 240)
            }),
        ),
        (
            "n=3 oracle sweep",
            Box::new(|| oracle_sweep_n3().map_err(|e| e.to_string())?),
        ),
    ];
    if level >= 4 {
        checks.push((
            "n=4 oracle sample",
            Box::new(|| {
                (0..1000u64).into_par_iter().try_for_each(|i| {
                    let f = random_table(4, 4, i, 0.5).map_err(|e| e.to_string())?;
                    let got = canonical_form(&f, Mode::Dc).map_err(|e| e.to_string())?;
                    let want = oracle::brute_canonical(&f).map_err(|e| e.to_string())?;
                    expect_eq(
                        &format!("function {}", f.to_hex()),
                        got.canonical_table,
                        want.best_table,
                    )
                })
            }),
        ));
    }
    checks
}

/// Every n=3 function: canonical table equals the oracle maximum and the
/// induced partition equals the oracle's.
fn oracle_sweep_n3() -> crate::error::Result<std::result::Result<(), String>> {
    let partition = oracle::npn_partition(3)?;
    let mut canon_ids: HashMap<TruthTable, usize> = HashMap::new();
    let mut class_map: HashMap<usize, usize> = HashMap::new();
    for v in 0..256u64 {
        let f = TruthTable::from_words(3, vec![v])?;
        let got = canonical_form(&f, Mode::Dc)?.canonical_table;
        let want = oracle::brute_canonical(&f)?.best_table;
        if got != want {
            return Ok(Err(format!(
                "function {}: canonical {} but oracle {}",
                f.to_hex(),
                got.to_hex(),
                want.to_hex()
            )));
        }
        let next = canon_ids.len();
        let id = *canon_ids.entry(got).or_insert(next);
        if *class_map.entry(id).or_insert(partition[v as usize]) != partition[v as usize] {
            return Ok(Err(format!(
                "function {}: partition differs from oracle",
                f.to_hex()
            )));
        }
    }
    let oracle_classes = partition.iter().max().map_or(0, |m| m + 1);
    if canon_ids.len() != oracle_classes {
        return Ok(Err(format!(
            "{} canonical classes but {} oracle classes",
            canon_ids.len(),
            oracle_classes
        )));
    }
    Ok(Ok(()))
}

fn cmd_selftest(a: &SelftestArgs, out: &mut dyn Write) -> CmdResult {
    for (name, check) in selftest_checks(a.oracle_level) {
        match check() {
            Ok(()) => writeln!(out, "ok   {name}")?,
            Err(msg) => {
                writeln!(out, "FAIL {name}: {msg}")?;
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    writeln!(out, "selftest passed")?;
    Ok(EXIT_OK)
}

/// Output phase of `f` as printed by reports.
pub fn phase_name(f: &TruthTable) -> &'static str {
    match output_phase(f) {
        crate::analysis::PhaseDecision::Positive => "positive",
        crate::analysis::PhaseDecision::Negative => "negative",
        crate::analysis::PhaseDecision::Undetermined => "balanced",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("npn-dc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn canon_hex() {
        let (code, out, _) = run_args(&["canon", "--n", "2", "--hex", "6"]);
        assert_eq!(code, 0);
        // x1 xnor x2 beats x1 xor x2 at the full-cube entry
        assert!(out.contains("canonical=9"), "{out}");
    }

    #[test]
    fn match_and_mismatch() {
        let (code, out, _) = run_args(&["match", "--n", "2", "--hex", "8", "--hex", "e"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("EQUIVALENT\ng(x1..x2) = ~f("), "{out}");
        let (code, out, _) = run_args(&["match", "--n", "2", "--hex", "8", "--hex", "6"]);
        assert_eq!((code, out.as_str()), (1, "NOT-EQUIVALENT\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["canon", "--hex", "6"]).0, 2);
        assert_eq!(run_args(&["canon", "--n", "2", "--hex", "66"]).0, 2);
        assert_eq!(run_args(&["match", "--n", "2", "--hex", "8"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["selftest", "--oracle-level", "5"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn describe_reads_as_substitution() {
        // g(x1,x2) = f(x2,~x1)
        let f = TruthTable::from_cubes("10", 2).unwrap();
        let t = NpTransform::new(vec![1, 0], vec![false, true], false).unwrap();
        let g = f.apply_transform(&t).unwrap();
        let text = describe_match(&t);
        assert_eq!(text, "g(x1..x2) = f(~x2,x1)");
        let expect = TruthTable::from_fn(2, |m| {
            let (x1, x2) = (m & 1 == 1, m & 2 == 2);
            f.get(usize::from(!x2) | usize::from(x1) << 1)
        })
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("7-12").unwrap(), (7, 12));
        assert_eq!(parse_range("16").unwrap(), (16, 16));
        assert!(parse_range("9-3").is_err());
        assert!(parse_range("0").is_err());
    }

    #[test]
    fn hex_corpus_lines() {
        let fs = parse_hex_corpus("# header\n8\n3 e8 # majority\n\n", Some(2)).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[1].n(), 3);
        assert!(parse_hex_corpus("1 2 3", None).is_err());
    }
}
