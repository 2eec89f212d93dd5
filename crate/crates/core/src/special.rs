//! Self-conjugate and doubled distinct partitions under the Littlewood
//! decomposition.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_modulus, Error, Result};
use crate::frobenius::FrobeniusSymbol;
use crate::littlewood::decompose;
use crate::partition::Partition;

/// A partition into strictly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DistinctPartition(Vec<usize>);

impl DistinctPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDistinct(parts));
        }
        Ok(DistinctPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl TryFrom<Partition> for DistinctPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        DistinctPartition::new(p.into_parts())
    }
}

/// Agrees with [`Partition::is_self_conjugate`]; also checks that the two rows
/// of the Frobenius symbol coincide.
pub fn is_self_conjugate(lambda: &Partition) -> bool {
    let by_conjugate = lambda.is_self_conjugate();
    let f = FrobeniusSymbol::from_partition(lambda);
    debug_assert_eq!(by_conjugate, f.top() == f.bottom());
    by_conjugate
}

/// The partition whose Frobenius symbol is `(δ_1 … δ_s / δ_1-1 … δ_s-1)`.
pub fn double_distinct(delta: &DistinctPartition) -> Partition {
    let bottom = delta.0.iter().map(|&d| d - 1).collect();
    let lambda = FrobeniusSymbol::new(delta.0.clone(), bottom)
        .expect("distinct positive parts give a valid symbol")
        .to_partition();
    debug_assert_eq!(lambda.size(), 2 * delta.size());
    lambda
}

/// True iff every column of the Frobenius symbol reads `(a / a-1)`.
pub fn is_doubled_distinct(lambda: &Partition) -> bool {
    let f = FrobeniusSymbol::from_partition(lambda);
    f.top().iter().zip(f.bottom()).all(|(&a, &b)| a == b + 1)
}

/// Outcome of a structured verification: one boolean per named clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: Partition,
    pub t: usize,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

impl Report {
    fn new(input: &Partition, t: usize, checks: BTreeMap<String, bool>) -> Self {
        let pass = checks.values().all(|&ok| ok);
        Report { input: input.clone(), t, checks, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|(_, &ok)| !ok).map(|(name, _)| name.as_str())
    }
}

/// For self-conjugate `λ`: the t-core is self-conjugate and
/// `λ_(j)' = λ_(t-j-1)` for every `j`.
pub fn verify_sc_decomposition(lambda: &Partition, t: usize) -> Result<Report> {
    check_modulus(t)?;
    if !is_self_conjugate(lambda) {
        return Err(Error::NotSelfConjugate(format!("({lambda})")));
    }
    let d = decompose(lambda, t)?;
    let mut checks = BTreeMap::new();
    checks.insert("core_self_conjugate".to_string(), is_self_conjugate(&d.core));
    for j in 0..t {
        checks.insert(
            format!("quotient_{j}_conjugate_is_quotient_{}", t - j - 1),
            d.quotient[j].conjugate() == d.quotient[t - j - 1],
        );
    }
    Ok(Report::new(lambda, t, checks))
}

/// For doubled distinct `μ`: the t-core and `μ_(0)` are doubled distinct and
/// `μ_(j)' = μ_(t-j)` for `1 <= j < t`. Also checks how each Frobenius column
/// `(a / a-1)` is colored: `a = tq` gives `(q:0 / q-1:0)`, `a = tq + r` with
/// `r >= 1` gives `(q:r / q:t-r)`.
pub fn verify_dd_decomposition(mu: &Partition, t: usize) -> Result<Report> {
    check_modulus(t)?;
    if !is_doubled_distinct(mu) {
        return Err(Error::NotDoubledDistinct(format!("({mu})")));
    }
    let f = FrobeniusSymbol::from_partition(mu);
    let mut column_rule = true;
    for &a in f.top() {
        let column = FrobeniusSymbol::new(vec![a], vec![a - 1])?.to_colored(t)?;
        let got = ((column.top()[0].value, column.top()[0].color), (column.bottom()[0].value, column.bottom()[0].color));
        let (q, r) = (a / t, a % t);
        column_rule &= if r == 0 {
            // b = t(q-1) + (t-1) needs q >= 1, which a >= 1 guarantees
            assert!(q >= 1, "column ({a} / {}) of a doubled distinct symbol", a - 1);
            got == ((q, 0), (q - 1, 0))
        } else {
            got == ((q, r), (q, t - r))
        };
    }

    let d = decompose(mu, t)?;
    let mut checks = BTreeMap::new();
    checks.insert("column_rule".to_string(), column_rule);
    checks.insert("core_doubled_distinct".to_string(), is_doubled_distinct(&d.core));
    checks.insert("quotient_0_doubled_distinct".to_string(), is_doubled_distinct(&d.quotient[0]));
    for j in 1..t {
        checks.insert(
            format!("quotient_{j}_conjugate_is_quotient_{}", t - j),
            d.quotient[j].conjugate() == d.quotient[t - j],
        );
    }
    Ok(Report::new(mu, t, checks))
}
