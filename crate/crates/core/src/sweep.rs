//! Exhaustive verification sweeps over all partitions up to a size bound.
//! Work is spread across threads per `(t, n)` cell and collected in a fixed
//! order, so reports are reproducible.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{partitions, PartitionClass, PartitionStream};
use crate::error::{check_modulus, Error, Result};
use crate::frobenius::FrobeniusSymbol;
use crate::littlewood::{compose, decompose};
use crate::partition::Partition;
use crate::special::{verify_dd_decomposition, verify_sc_decomposition};

const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sweep {
    Bijection,
    CorePredicates,
    StripOracle,
    HookTransfer,
    SpecialClasses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub max_n: usize,
    pub max_t: usize,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    pub max_n: usize,
    pub max_t: usize,
    pub seed: u64,
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

impl Sweep {
    pub const ALL: [Sweep; 5] = [
        Sweep::Bijection,
        Sweep::CorePredicates,
        Sweep::HookTransfer,
        Sweep::SpecialClasses,
        Sweep::StripOracle,
    ];

    pub fn run(&self, params: SweepParams) -> Result<SweepReport> {
        check_modulus(params.max_t)?;
        let tally = match self {
            Sweep::Bijection => bijection(params),
            Sweep::CorePredicates => over_grid(params, 1, PartitionClass::All, core_predicates),
            Sweep::HookTransfer => over_grid(params, 2, PartitionClass::All, hook_transfer),
            Sweep::SpecialClasses => {
                over_grid(params, 2, PartitionClass::SelfConjugate, sc_clauses)
                    .merge(over_grid(params, 2, PartitionClass::DoubledDistinct, dd_clauses))
            }
            Sweep::StripOracle => strip_oracle(params),
        };
        let failure_count = tally.failures.len() as u64;
        let mut failures = tally.failures;
        failures.truncate(MAX_REPORTED_FAILURES);
        Ok(SweepReport {
            sweep: self.to_string(),
            max_n: params.max_n,
            max_t: params.max_t,
            cases: tally.cases,
            failure_count,
            failures,
            pass: failure_count == 0,
        })
    }
}

/// Runs `check` on every partition of `n <= max_n` in `class`, for every
/// `t` in `min_t..=max_t`.
fn over_grid(
    params: SweepParams,
    min_t: usize,
    class: PartitionClass,
    check: fn(&Partition, usize, &mut Tally),
) -> Tally {
    let cells: Vec<(usize, usize)> = (min_t..=params.max_t)
        .flat_map(|t| (0..=params.max_n).map(move |n| (t, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(t, n)| {
            let mut tally = Tally::default();
            for lambda in PartitionStream::new(n, class) {
                check(&lambda, t, &mut tally);
            }
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn roundtrip(lambda: &Partition, t: usize, tally: &mut Tally) {
    match decompose(lambda, t) {
        Ok(d) => {
            tally.check(d.size() == lambda.size(), || format!("t={t} ({lambda}): size identity"));
            let back = d.compose();
            tally.check(back.as_ref() == Ok(lambda), || format!("t={t} ({lambda}): compose gave {back:?}"));
        }
        Err(e) => tally.check(false, || format!("t={t} ({lambda}): {e}")),
    }
}

/// `compose ∘ decompose` on every partition, then `decompose ∘ compose` on
/// every (t-core of size <= 8, quotient of total size <= 4) pair.
fn bijection(params: SweepParams) -> Tally {
    let forward = over_grid(params, 1, PartitionClass::All, roundtrip);
    let backward: Vec<Tally> = (2..=params.max_t.min(3))
        .into_par_iter()
        .map(|t| {
            let mut tally = Tally::default();
            let cores: Vec<Partition> = (0..=8).flat_map(|n| PartitionStream::new(n, PartitionClass::TCore(t))).collect();
            let quotients: Vec<Vec<Partition>> = (0..=4).flat_map(|k| multipartitions(k, t)).collect();
            for core in &cores {
                for quotient in &quotients {
                    let result = compose(core, quotient, t).and_then(|l| decompose(&l, t));
                    let ok = matches!(&result, Ok(d) if &d.core == core && &d.quotient == quotient);
                    tally.check(ok, || format!("t={t} core ({core}) quotient {quotient:?}: {result:?}"));
                }
            }
            tally
        })
        .collect();
    backward.into_iter().fold(forward, Tally::merge)
}

/// All `t`-tuples of partitions with total size `k`.
pub fn multipartitions(k: usize, t: usize) -> Vec<Vec<Partition>> {
    if t == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=k {
        let heads: Vec<Partition> = partitions(first).collect();
        for tail in multipartitions(k - first, t - 1) {
            for head in &heads {
                let mut tuple = vec![head.clone()];
                tuple.extend(tail.iter().cloned());
                out.push(tuple);
            }
        }
    }
    out
}

/// Hook divisibility, the Frobenius-row test and the colored test agree, and
/// exactly the t-cores are their own core.
fn core_predicates(lambda: &Partition, t: usize, tally: &mut Tally) {
    let by_hooks = lambda.is_t_core(t).unwrap_or(false);
    let f = FrobeniusSymbol::from_partition(lambda);
    let by_rows = f.is_t_core(t).unwrap_or(false);
    let by_colors = f.to_colored(t).map(|c| c.is_t_core()).unwrap_or(false);
    let by_core = decompose(lambda, t).map(|d| &d.core == lambda).unwrap_or(false);
    tally.check(by_hooks == by_rows && by_rows == by_colors && by_colors == by_core, || {
        format!("t={t} ({lambda}): hooks {by_hooks}, rows {by_rows}, colors {by_colors}, core {by_core}")
    });
}

fn hook_transfer(lambda: &Partition, t: usize, tally: &mut Tally) {
    let direct = lambda.count_hooks_of_length(t);
    let via_quotient = decompose(lambda, t).map(|d| d.quotient_hook1_count());
    tally.check(via_quotient == Ok(direct), || {
        format!("t={t} ({lambda}): {direct} hooks of length t, quotient gives {via_quotient:?}")
    });
}

fn sc_clauses(lambda: &Partition, t: usize, tally: &mut Tally) {
    let report = verify_sc_decomposition(lambda, t);
    tally.check(matches!(&report, Ok(r) if r.pass), || format!("sc t={t} ({lambda}): {report:?}"));
}

fn dd_clauses(mu: &Partition, t: usize, tally: &mut Tally) {
    let report = verify_dd_decomposition(mu, t);
    tally.check(matches!(&report, Ok(r) if r.pass), || format!("dd t={t} ({mu}): {report:?}"));
}

/// Strips rim hooks of length `t` in a random order until none remain.
pub fn strip_randomly(lambda: &Partition, t: usize, rng: &mut StdRng) -> Result<Partition> {
    check_modulus(t)?;
    let mut current = lambda.clone();
    loop {
        let boxes = current.boxes_with_hook_length(t);
        match boxes.choose(rng) {
            Some(&(row, col)) => current = current.remove_rim_hook(row, col)?,
            None => return Ok(current),
        }
    }
}

/// The decomposition's core matches rim-hook stripping, both in the canonical
/// order and in a seeded random order.
fn strip_oracle(params: SweepParams) -> Tally {
    let cells: Vec<(usize, usize)> = (1..=params.max_t)
        .flat_map(|t| (0..=params.max_n).map(move |n| (t, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(t, n)| {
            let mut rng = StdRng::seed_from_u64(params.seed ^ ((t as u64) << 32) ^ n as u64);
            let mut tally = Tally::default();
            for lambda in partitions(n) {
                let core = decompose(&lambda, t).map(|d| d.core);
                let canonical = lambda.strip_t_core(t);
                let random = strip_randomly(&lambda, t, &mut rng);
                tally.check(core == canonical && canonical == random, || {
                    format!("t={t} ({lambda}): core {core:?}, stripped {canonical:?}, random {random:?}")
                });
            }
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sweep::Bijection => "bijection",
            Sweep::CorePredicates => "core-predicates",
            Sweep::StripOracle => "strip-oracle",
            Sweep::HookTransfer => "hook-transfer",
            Sweep::SpecialClasses => "special-classes",
        })
    }
}

impl FromStr for Sweep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sweep::ALL
            .into_iter()
            .find(|sweep| sweep.to_string() == s)
            .ok_or_else(|| Error::Parse { token: s.to_string(), reason: "unknown sweep".into() })
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} max_n={} max_t={} cases={} failures={}",
            self.sweep, self.max_n, self.max_t, self.cases, self.failure_count
        )?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}
