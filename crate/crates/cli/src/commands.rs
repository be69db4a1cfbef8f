use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use cyclodiv::analysis::{
    atlas_row, predict_p2q, predict_pq, predict_prime_power, survey, ConvexityVerdict,
    HeightSummary, PQParams, Prediction,
};
use cyclodiv::arith::primes_up_to;
use cyclodiv::lattice::DivisorLattice;
use cyclodiv::{phi, psi, Error, FactoredIndex, IntPoly};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::{Cell, Layout, Report, Row};
use crate::{Cli, Command, ScanTarget, SweepConfig, EXIT_USAGE};

#[derive(Debug)]
pub enum SweepError {
    Usage(String),
    Budget(String),
    Internal(Error),
}

impl SweepError {
    pub fn exit_code(&self) -> i32 {
        match self {
            SweepError::Usage(_) => EXIT_USAGE,
            SweepError::Budget(_) => 3,
            SweepError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::Usage(m) | SweepError::Budget(m) => f.write_str(m),
            SweepError::Internal(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for SweepError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::TooManyDivisors { .. } => {
                SweepError::Budget(e.to_string())
            }
            Error::InvalidIndex(_) | Error::NotPrime(_) | Error::InvalidArgument(_) => {
                SweepError::Usage(e.to_string())
            }
            other => SweepError::Internal(other),
        }
    }
}

type Result<T> = std::result::Result<T, SweepError>;

/// Progress on standard error, roughly every tenth of the work.
struct Progress {
    label: &'static str,
    total: usize,
    done: AtomicUsize,
    quiet: bool,
}

impl Progress {
    fn new(label: &'static str, total: usize, quiet: bool) -> Self {
        Progress {
            label,
            total,
            done: AtomicUsize::new(0),
            quiet,
        }
    }

    fn tick(&self) {
        let n = self.done.fetch_add(1, Ordering::Relaxed) + 1;
        let step = (self.total / 10).max(1);
        if !self.quiet && (n.is_multiple_of(step) || n == self.total) {
            eprintln!("{}: {n}/{}", self.label, self.total);
        }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SweepError::Usage(format!("cannot start {workers} workers: {e}")))
}

fn check_range(from: u64, to: u64, budget: u64) -> Result<()> {
    if from == 0 || from > to {
        return Err(SweepError::Usage(format!(
            "expected 1 <= from <= to, got from={from} to={to}"
        )));
    }
    if to > budget {
        return Err(SweepError::Budget(format!(
            "n up to {to} exceeds the degree budget {budget}"
        )));
    }
    Ok(())
}

pub(crate) fn dispatch(cli: &Cli, config: &SweepConfig) -> Result<Report> {
    let quiet = cli.quiet;
    match cli.command {
        Command::Phi { n } => cmd_poly("phi", n, config, cli.dense),
        Command::Psi { n } => cmd_poly("psi", n, config, cli.dense),
        Command::Divisors { n, max_divisors } => cmd_divisors(n, max_divisors, config),
        Command::Atlas { .. } => cmd_atlas(config, quiet),
        Command::Heights {
            from,
            to,
            max_divisors,
        } => cmd_heights(from, to, max_divisors, config, quiet),
        Command::ConvexityScan { from, to, target } => {
            cmd_convexity_scan(from, to, target, config, quiet)
        }
        Command::FlatCount {
            from,
            to,
            max_divisors,
        } => cmd_flat_count(from, to, max_divisors, config, quiet),
    }
}

fn verdict_cells(row: &mut Row, v: &ConvexityVerdict) {
    row.push(("isFlat", v.is_flat.into()));
    row.push(("isConvex", v.is_convex.into()));
    row.push(("isStronglyConvex", v.is_strongly_convex.into()));
    row.push(("missing", Cell::Ints(v.missing.clone())));
}

/// Coefficient set, height triple and verdict of a nonzero polynomial.
fn analysis_cells(row: &mut Row, f: &IntPoly) -> Result<()> {
    let set = f.coeff_set()?;
    let lo = set.min().expect("nonzero").clone();
    let hi = set.max().expect("nonzero").clone();
    row.push(("degree", (f.degree().expect("nonzero") as u64).into()));
    row.push((
        "height",
        BigInt::from(lo.magnitude().max(hi.magnitude()).clone()).into(),
    ));
    row.push(("heightPlus", hi.into()));
    row.push(("heightMinus", lo.into()));
    let verdict = ConvexityVerdict::of_set(&set);
    row.push(("coeffSet", set.into()));
    verdict_cells(row, &verdict);
    Ok(())
}

fn index(n: u64) -> Result<FactoredIndex> {
    if n == 0 {
        return Err(SweepError::Usage("n must be at least 1".into()));
    }
    Ok(FactoredIndex::new(n)?)
}

fn cmd_poly(command: &'static str, n: u64, config: &SweepConfig, dense: bool) -> Result<Report> {
    let idx = index(n)?;
    if n > config.degree_budget {
        return Err(SweepError::Budget(format!(
            "n = {n} exceeds the degree budget {}",
            config.degree_budget
        )));
    }
    let f = if command == "phi" {
        phi(&idx)
    } else {
        psi(&idx)
    };
    let mut row: Row = vec![("n", n.into())];
    analysis_cells(&mut row, &f)?;
    row.push(("terms", (f.terms().len() as u64).into()));
    row.push(("polynomial", f.to_string().into()));
    if dense {
        row.push(("coefficients", Cell::Ints(f.to_bigints())));
    }
    let mut report = Report::new(command, vec![("n", n.into())], Layout::Record);
    report.rows.push(row);
    report.items = 1;
    Ok(report)
}

/// Closed-form prediction for a divisor mask, where one is known.
fn prediction_for(n: &FactoredIndex, mask: u64) -> Result<Option<Prediction>> {
    if let Some((p, e)) = n.as_prime_power() {
        return Ok(Some(predict_prime_power(p, e, mask)?));
    }
    if let Some((p, q)) = n.as_pq() {
        return Ok(Some(predict_pq(p, q, mask)?));
    }
    if let Some((p, q)) = n.as_p2q() {
        return Ok(Some(predict_p2q(&PQParams::new(p, q)?, mask as u8)));
    }
    Ok(None)
}

fn cmd_divisors(n: u64, max_divisors: u64, config: &SweepConfig) -> Result<Report> {
    let idx = index(n)?;
    if n > config.degree_budget {
        return Err(SweepError::Budget(format!(
            "n = {n} exceeds the degree budget {}",
            config.degree_budget
        )));
    }
    let d = idx.divisor_count();
    if d >= 64 || 1u64 << d > max_divisors {
        return Err(SweepError::Budget(format!(
            "x^{n} - 1 has 2^{d} monic divisors (d(n) = {d}), above the budget {max_divisors}"
        )));
    }
    let lattice = DivisorLattice::new(&idx)?;
    let rows: Vec<Result<(Row, bool)>> = pool(config.workers)?.install(|| {
        (0..1u64 << d)
            .into_par_iter()
            .map(|mask| {
                let f = lattice.materialize(mask);
                let mut row: Row = vec![
                    ("mask", mask.into()),
                    ("divisors", Cell::UInts(lattice.index(mask).selected())),
                ];
                analysis_cells(&mut row, &f)?;
                let mut ok = true;
                match prediction_for(&idx, mask)? {
                    Some(pred) => {
                        let predicted = pred.coeff_set();
                        ok = predicted == f.coeff_set()?;
                        row.push(("predicted", predicted.into()));
                        row.push(("match", ok.into()));
                    }
                    None => {
                        row.push(("predicted", Cell::Null));
                        row.push(("match", Cell::Null));
                    }
                }
                Ok((row, ok))
            })
            .collect()
    });
    let mut report = Report::new(
        "divisors",
        vec![("n", n.into()), ("maxDivisors", max_divisors.into())],
        Layout::Table,
    );
    report.items = 1;
    for r in rows {
        let (row, ok) = r?;
        report.mismatches += usize::from(!ok);
        report.rows.push(row);
    }
    Ok(report)
}

/// Ordered pairs of distinct primes `p <= cap_p`, `q <= cap_q`.
pub fn prime_pairs(cap_p: u64, cap_q: u64) -> Vec<(u64, u64)> {
    let qs = primes_up_to(cap_q);
    primes_up_to(cap_p)
        .into_iter()
        .flat_map(|p| qs.iter().filter(move |&&q| q != p).map(move |&q| (p, q)))
        .collect()
}

pub fn cmd_atlas(config: &SweepConfig, quiet: bool) -> Result<Report> {
    let (pairs, over): (Vec<_>, Vec<_>) = prime_pairs(config.prime_cap_p, config.prime_cap_q)
        .into_iter()
        .partition(|&(p, q)| p.saturating_mul(p).saturating_mul(q) <= config.degree_budget);
    for (p, q) in &over {
        if !quiet {
            eprintln!(
                "atlas: skipping (p, q) = ({p}, {q}): p^2 q = {} exceeds the degree budget",
                p * p * q
            );
        }
    }
    let progress = Progress::new("atlas", pairs.len(), quiet);
    let per_pair: Vec<Result<Vec<(Row, bool)>>> = pool(config.workers)?.install(|| {
        pairs
            .par_iter()
            .map(|&(p, q)| {
                let params = PQParams::new(p, q)?;
                let lattice = DivisorLattice::new(&FactoredIndex::new(p * p * q)?)?;
                let rows = (0..64u8)
                    .into_par_iter()
                    .map(|k| -> Result<(Row, bool)> {
                        let r = atlas_row(&params, &lattice, k)?;
                        let mut row: Row = vec![
                            ("p", p.into()),
                            ("q", q.into()),
                            ("k", (k as u64).into()),
                            ("predicted", r.predicted.into()),
                            ("computed", r.computed.into()),
                            ("match", r.matches.into()),
                            ("height", r.height.into()),
                            ("heightPlus", r.height_plus.into()),
                            ("heightMinus", r.height_minus.into()),
                        ];
                        verdict_cells(&mut row, &r.verdict);
                        Ok((row, r.matches))
                    })
                    .collect();
                progress.tick();
                rows
            })
            .collect()
    });
    let mut report = Report::new(
        "atlas",
        vec![
            ("maxP", config.prime_cap_p.into()),
            ("maxQ", config.prime_cap_q.into()),
            ("degreeBudget", config.degree_budget.into()),
        ],
        Layout::Table,
    );
    report.items = pairs.len();
    report.skipped = over.len();
    for pair in per_pair {
        let rows = pair?;
        if rows.iter().any(|(_, ok)| !ok) {
            report.mismatches += 1;
        }
        report.rows.extend(rows.into_iter().map(|(row, _)| row));
    }
    Ok(report)
}

fn kind(n: &FactoredIndex) -> &'static str {
    if n.as_prime_power().is_some() {
        "prime-power"
    } else if n.as_pq().is_some() {
        "pq"
    } else if n.as_p2q().is_some() {
        "p2q"
    } else {
        "other"
    }
}

/// Closed forms for `B`, `B_-`, `B'` and `C`, when `n` has one of the
/// shapes `p^e`, `pq`, `p^2 q`.
fn heights_hold(n: &FactoredIndex, s: &HeightSummary) -> Result<Option<bool>> {
    let b = |v: u64| BigInt::from(v);
    if n.as_prime_power().is_some() {
        return Ok(Some(s.b == b(1)));
    }
    if let Some((p, _)) = n.as_pq() {
        return Ok(Some(s.b == b(p) && s.b_prime == b(2) && s.balanced_c == 4));
    }
    if let Some((p, q)) = n.as_p2q() {
        let gamma = PQParams::new(p, q)?.gamma;
        return Ok(Some(
            s.b == b((p * p).min(q))
                && s.b_minus == b(gamma)
                && s.b_prime == s.b_minus
                && BigInt::from(s.balanced_c) == &s.b_prime * 2,
        ));
    }
    Ok(None)
}

fn check_cell(verdict: Option<bool>) -> Cell {
    match verdict {
        Some(true) => "pass".into(),
        Some(false) => "fail".into(),
        None => Cell::Null,
    }
}

enum Surveyed {
    Done(HeightSummary),
    Skipped,
}

fn survey_range(
    label: &'static str,
    from: u64,
    to: u64,
    max_divisors: u64,
    config: &SweepConfig,
    quiet: bool,
) -> Result<Vec<(FactoredIndex, Surveyed)>> {
    check_range(from, to, config.degree_budget)?;
    let progress = Progress::new(label, (to - from + 1) as usize, quiet);
    pool(config.workers)?.install(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| {
                let idx = FactoredIndex::new(n)?;
                let out = match survey(&idx, max_divisors) {
                    Ok(s) => Surveyed::Done(s),
                    Err(Error::BudgetExceeded { .. }) | Err(Error::TooManyDivisors { .. }) => {
                        Surveyed::Skipped
                    }
                    Err(e) => return Err(e.into()),
                };
                progress.tick();
                Ok((idx, out))
            })
            .collect()
    })
}

fn cmd_heights(
    from: u64,
    to: u64,
    max_divisors: u64,
    config: &SweepConfig,
    quiet: bool,
) -> Result<Report> {
    let results = survey_range("heights", from, to, max_divisors, config, quiet)?;
    let mut report = Report::new(
        "heights",
        vec![
            ("from", from.into()),
            ("to", to.into()),
            ("maxDivisors", max_divisors.into()),
        ],
        Layout::Table,
    );
    report.items = results.len();
    for (idx, out) in results {
        let mut row: Row = vec![("n", idx.n().into()), ("kind", kind(&idx).into())];
        match out {
            Surveyed::Done(s) => {
                let verdict = heights_hold(&idx, &s)?;
                report.mismatches += usize::from(verdict == Some(false));
                row.extend([
                    ("divisorTotal", s.divisor_total.into()),
                    ("B", s.b.into()),
                    ("Bplus", s.b_plus.into()),
                    ("Bminus", s.b_minus.into()),
                    ("Bprime", s.b_prime.into()),
                    ("C", s.balanced_c.into()),
                    ("check", check_cell(verdict)),
                ]);
            }
            Surveyed::Skipped => {
                report.skipped += 1;
                row.extend([
                    ("divisorTotal", Cell::Null),
                    ("B", Cell::Null),
                    ("Bplus", Cell::Null),
                    ("Bminus", Cell::Null),
                    ("Bprime", Cell::Null),
                    ("C", Cell::Null),
                    ("check", "skipped".into()),
                ]);
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}

fn cmd_flat_count(
    from: u64,
    to: u64,
    max_divisors: u64,
    config: &SweepConfig,
    quiet: bool,
) -> Result<Report> {
    let results = survey_range("flat-count", from, to, max_divisors, config, quiet)?;
    let mut report = Report::new(
        "flat-count",
        vec![
            ("from", from.into()),
            ("to", to.into()),
            ("maxDivisors", max_divisors.into()),
        ],
        Layout::Table,
    );
    report.items = results.len();
    for (idx, out) in results {
        let mut row: Row = vec![("n", idx.n().into()), ("kind", kind(&idx).into())];
        // Every divisor of x^{p^e} - 1 is flat, x^{pq} - 1 has exactly 14 flat
        // divisors, and x^{p^2 q} - 1 at least 2*14 + 2^3 - 1.
        let expected: Option<(&str, u64)> = if let Some((_, e)) = idx.as_prime_power() {
            Some(("=", 1 << (e + 1)))
        } else if idx.as_pq().is_some() {
            Some(("=", 14))
        } else if idx.as_p2q().is_some() {
            Some((">=", 35))
        } else {
            None
        };
        match out {
            Surveyed::Done(s) => {
                let verdict = expected.map(|(op, v)| match op {
                    "=" => s.flat_count == v,
                    _ => s.flat_count >= v,
                });
                report.mismatches += usize::from(verdict == Some(false));
                row.extend([
                    ("divisorTotal", s.divisor_total.into()),
                    ("flatCount", s.flat_count.into()),
                    (
                        "expected",
                        expected.map(|(op, v)| format!("{op}{v}")).into(),
                    ),
                    ("check", check_cell(verdict)),
                ]);
            }
            Surveyed::Skipped => {
                report.skipped += 1;
                row.extend([
                    ("divisorTotal", Cell::Null),
                    ("flatCount", Cell::Null),
                    (
                        "expected",
                        expected.map(|(op, v)| format!("{op}{v}")).into(),
                    ),
                    ("check", "skipped".into()),
                ]);
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}

fn cmd_convexity_scan(
    from: u64,
    to: u64,
    target: ScanTarget,
    config: &SweepConfig,
    quiet: bool,
) -> Result<Report> {
    check_range(from, to, config.degree_budget)?;
    let progress = Progress::new("convexity-scan", (to - from + 1) as usize, quiet);
    let findings: Vec<Result<Option<Row>>> = pool(config.workers)?.install(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| {
                let idx = FactoredIndex::new(n)?;
                let f = match target {
                    ScanTarget::Phi => phi(&idx),
                    ScanTarget::Psi => psi(&idx),
                };
                let set = f.coeff_set()?;
                let verdict = ConvexityVerdict::of_set(&set);
                progress.tick();
                if verdict.is_convex {
                    return Ok(None);
                }
                let mut row: Row = vec![("n", n.into())];
                analysis_cells(&mut row, &f)?;
                Ok(Some(row))
            })
            .collect()
    });
    let target_name = match target {
        ScanTarget::Phi => "phi",
        ScanTarget::Psi => "psi",
    };
    let mut report = Report::new(
        "convexity-scan",
        vec![
            ("from", from.into()),
            ("to", to.into()),
            ("target", target_name.into()),
        ],
        Layout::Table,
    );
    report.items = (to - from + 1) as usize;
    for f in findings {
        if let Some(row) = f? {
            report.rows.push(row);
        }
    }
    Ok(report)
}
