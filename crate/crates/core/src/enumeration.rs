//! Exhaustive partition generators. Every count here comes from walking the
//! full list of partitions of `n`, which is what makes them usable as oracles.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;
use crate::special::{is_doubled_distinct, is_self_conjugate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    All,
    TCore(usize),
    SelfConjugate,
    DoubledDistinct,
    Distinct,
}

impl PartitionClass {
    pub fn matches(&self, lambda: &Partition) -> bool {
        match *self {
            PartitionClass::All => true,
            PartitionClass::TCore(t) => lambda.is_t_core(t).unwrap_or(false),
            PartitionClass::SelfConjugate => is_self_conjugate(lambda),
            PartitionClass::DoubledDistinct => is_doubled_distinct(lambda),
            PartitionClass::Distinct => lambda.parts().windows(2).all(|w| w[0] > w[1]),
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::All => f.write_str("all"),
            PartitionClass::TCore(t) => write!(f, "tcore({t})"),
            PartitionClass::SelfConjugate => f.write_str("sc"),
            PartitionClass::DoubledDistinct => f.write_str("dd"),
            PartitionClass::Distinct => f.write_str("distinct"),
        }
    }
}

/// Parses `all`, `sc`, `dd`, `distinct`, or `tcore:T`.
impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let class = match s {
            "all" => PartitionClass::All,
            "sc" | "self-conjugate" => PartitionClass::SelfConjugate,
            "dd" | "doubled-distinct" => PartitionClass::DoubledDistinct,
            "distinct" => PartitionClass::Distinct,
            _ => {
                let t = s
                    .strip_prefix("tcore:")
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&t| t > 0)
                    .ok_or_else(|| Error::Parse {
                        token: s.to_string(),
                        reason: "expected all, sc, dd, distinct or tcore:T".into(),
                    })?;
                PartitionClass::TCore(t)
            }
        };
        Ok(class)
    }
}

/// All partitions of `n` in reverse lexicographic order (`(n)` first, `(1^n)`
/// last), optionally filtered by a class.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    class: PartitionClass,
    next: Option<Vec<usize>>,
}

impl PartitionStream {
    pub fn new(n: usize, class: PartitionClass) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        PartitionStream { class, next: Some(first) }
    }

    fn advance(parts: &[usize]) -> Option<Vec<usize>> {
        let k = parts.iter().rposition(|&p| p > 1)?;
        let x = parts[k] - 1;
        let mut rest = parts.len() - k;
        let mut out = parts[..k].to_vec();
        out.push(x);
        while rest > 0 {
            let piece = rest.min(x);
            out.push(piece);
            rest -= piece;
        }
        Some(out)
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let current = self.next.take()?;
            self.next = Self::advance(&current);
            let lambda = Partition::new(current).expect("generator emits partitions");
            if self.class.matches(&lambda) {
                return Some(lambda);
            }
        }
    }
}

pub fn partitions(n: usize) -> PartitionStream {
    PartitionStream::new(n, PartitionClass::All)
}

pub fn count(n: usize, class: PartitionClass) -> u64 {
    PartitionStream::new(n, class).count() as u64
}

/// `p(n)`.
pub fn count_partitions(n: usize) -> u64 {
    count(n, PartitionClass::All)
}

/// `c_t(n)`, the number of t-cores of size `n`.
pub fn count_t_cores(n: usize, t: usize) -> Result<u64> {
    check_modulus(t)?;
    Ok(count(n, PartitionClass::TCore(t)))
}

/// `sc(n)`.
pub fn count_self_conjugate(n: usize) -> u64 {
    count(n, PartitionClass::SelfConjugate)
}

/// `dd(n)`.
pub fn count_doubled_distinct(n: usize) -> u64 {
    count(n, PartitionClass::DoubledDistinct)
}

/// Number of t-tuples of partitions of total size `k`.
pub fn count_multipartitions(k: usize, t: usize) -> u64 {
    let p: Vec<u64> = (0..=k).map(count_partitions).collect();
    let mut counts = vec![0u64; k + 1];
    counts[0] = 1;
    for _ in 0..t {
        let mut next = vec![0u64; k + 1];
        for (i, &c) in counts.iter().enumerate() {
            for (j, &pj) in p.iter().enumerate().take(k + 1 - i) {
                next[i + j] += c * pj;
            }
        }
        counts = next;
    }
    counts[k]
}
