//! Frobenius symbols and their t-colored re-encoding.
//!
//! A partition with Durfee square `s` corresponds to the two-rowed array
//! `(λ_1-1, …, λ_s-s / λ'_1-1, …, λ'_s-s)`. The colored version writes each top
//! entry as `a = t·q + r` (value `q`, color `r`) and each bottom entry as
//! `b = t·q' + (t - r' - 1)` (value `q'`, color `r'`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRows", into = "RawRows")]
pub struct FrobeniusSymbol {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawRows {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

pub(crate) fn is_strictly_decreasing(row: &[usize]) -> bool {
    row.windows(2).all(|w| w[0] > w[1])
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Malformed {
                what: "Frobenius symbol",
                reason: format!("rows have lengths {} and {}", top.len(), bottom.len()),
            });
        }
        if !is_strictly_decreasing(&top) || !is_strictly_decreasing(&bottom) {
            return Err(Error::Malformed {
                what: "Frobenius symbol",
                reason: "rows must be strictly decreasing".into(),
            });
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        let s = lambda.durfee();
        let conj = lambda.conjugate();
        FrobeniusSymbol {
            top: (1..=s).map(|i| lambda.part(i) - i).collect(),
            bottom: (1..=s).map(|i| conj.part(i) - i).collect(),
        }
    }

    /// Inverse of [`FrobeniusSymbol::from_partition`].
    pub fn to_partition(&self) -> Partition {
        let s = self.top.len();
        // rows inside the Durfee square
        let mut parts: Vec<usize> = self.top.iter().enumerate().map(|(i, &a)| a + i + 1).collect();
        // rows below it read off the column lengths λ'_j = b_j + j
        let columns: Vec<usize> = self.bottom.iter().enumerate().map(|(j, &b)| b + j + 1).collect();
        let depth = columns.first().copied().unwrap_or(0);
        for row in (s + 1)..=depth {
            parts.push(columns.iter().filter(|&&c| c >= row).count());
        }
        Partition::new(parts).expect("valid Frobenius symbol decodes to a partition")
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Number of columns (the Durfee side `s`).
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// `Σ (a_i + b_i + 1)`.
    pub fn weight(&self) -> usize {
        self.top.iter().sum::<usize>() + self.bottom.iter().sum::<usize>() + self.len()
    }

    /// `a = tq + r` becomes `q` with color `r`; `b = tq' + (t - r' - 1)` becomes
    /// `q'` with color `r'`. Both rows are listed in decreasing colored order,
    /// so bottom entries need not stay in their original columns.
    pub fn to_colored(&self, t: usize) -> Result<ColoredFrobeniusSymbol> {
        check_modulus(t)?;
        let top = self
            .top
            .iter()
            .map(|&a| ColoredInteger { value: a / t, color: a % t, modulus: t })
            .collect();
        let bottom = self
            .bottom
            .iter()
            .map(|&b| ColoredInteger { value: b / t, color: t - 1 - b % t, modulus: t })
            .collect();
        let mut symbol = ColoredFrobeniusSymbol { modulus: t, top, bottom };
        // the bottom encoding reverses colors within each value
        symbol.bottom.sort_unstable_by_key(|x| std::cmp::Reverse((x.value, x.color)));
        Ok(symbol)
    }

    /// Hook-free t-core test:
    /// (1) no `a_i + b_j + 1` is divisible by `t`;
    /// (2) `a_i >= t` forces `a_i - t` into the top row;
    /// (3) `b_j >= t` forces `b_j - t` into the bottom row.
    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        check_modulus(t)?;
        let no_diagonal_hook = self
            .top
            .iter()
            .all(|&a| self.bottom.iter().all(|&b| (a + b + 1) % t != 0));
        let closed = |row: &[usize]| {
            let present: HashSet<usize> = row.iter().copied().collect();
            row.iter().all(|&x| x < t || present.contains(&(x - t)))
        };
        Ok(no_diagonal_hook && closed(&self.top) && closed(&self.bottom))
    }
}

impl TryFrom<RawRows> for FrobeniusSymbol {
    type Error = Error;

    fn try_from(raw: RawRows) -> Result<Self> {
        FrobeniusSymbol::new(raw.top, raw.bottom)
    }
}

impl From<FrobeniusSymbol> for RawRows {
    fn from(f: FrobeniusSymbol) -> Self {
        RawRows { top: f.top, bottom: f.bottom }
    }
}

pub(crate) fn fmt_row<T: fmt::Display>(f: &mut fmt::Formatter<'_>, row: &[T]) -> fmt::Result {
    if row.is_empty() {
        return f.write_str("-");
    }
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Splits `"a1 a2 / b1 b2"` into its two rows; `-` or nothing denotes an empty row.
pub(crate) fn parse_rows(s: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let (top, bottom) = s.split_once('/').ok_or_else(|| Error::Parse {
        token: s.to_string(),
        reason: "expected two rows separated by '/'".into(),
    })?;
    let row = |r: &str| -> Result<Vec<usize>> {
        let r = r.trim();
        if r.is_empty() || r == "-" {
            return Ok(Vec::new());
        }
        r.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    token: tok.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect()
    };
    Ok((row(top)?, row(bottom)?))
}

impl fmt::Display for FrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_row(f, &self.top)?;
        f.write_str(" / ")?;
        fmt_row(f, &self.bottom)
    }
}

impl FromStr for FrobeniusSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = parse_rows(s)?;
        FrobeniusSymbol::new(top, bottom)
    }
}

/// The integer `value` carrying color `color ∈ {0, …, modulus-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredInteger {
    pub value: usize,
    pub color: usize,
    pub modulus: usize,
}

impl ColoredInteger {
    pub fn new(value: usize, color: usize, modulus: usize) -> Result<Self> {
        check_modulus(modulus)?;
        if color >= modulus {
            return Err(Error::Malformed {
                what: "colored integer",
                reason: format!("color {color} is not below the modulus {modulus}"),
            });
        }
        Ok(ColoredInteger { value, color, modulus })
    }

    /// `k_i < m_j` iff `k < m`, or `k = m` and `i < j`.
    pub fn colored_cmp(&self, other: &ColoredInteger) -> Result<Ordering> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok((self.value, self.color).cmp(&(other.value, other.color)))
    }

    pub fn colored_less(&self, other: &ColoredInteger) -> Result<bool> {
        Ok(self.colored_cmp(other)? == Ordering::Less)
    }

    /// `t·q + r`, the Frobenius entry this encodes in the top row.
    pub fn decode_top(&self) -> usize {
        self.modulus * self.value + self.color
    }

    /// `t·q' + (t - r' - 1)`, the Frobenius entry this encodes in the bottom row.
    pub fn decode_bottom(&self) -> usize {
        self.modulus * self.value + (self.modulus - self.color - 1)
    }
}

impl PartialOrd for ColoredInteger {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.colored_cmp(other).ok()
    }
}

impl fmt::Display for ColoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.value, self.color)
    }
}

/// Column-aligned colored encoding of a [`FrobeniusSymbol`]: column `i` holds
/// the encodings of `(a_i, b_i)`. Rows are ordered by the decoded Frobenius
/// entries, so within the bottom row equal values appear with colors ascending
/// rather than in the colored order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredFrobeniusSymbol {
    modulus: usize,
    top: Vec<ColoredInteger>,
    bottom: Vec<ColoredInteger>,
}

impl ColoredFrobeniusSymbol {
    /// Builds a symbol from `(value, color)` pairs, validating colors, equal row
    /// lengths and strict decrease of each row in the colored order.
    pub fn new(t: usize, top: &[(usize, usize)], bottom: &[(usize, usize)]) -> Result<Self> {
        check_modulus(t)?;
        let row = |entries: &[(usize, usize)]| -> Result<Vec<ColoredInteger>> {
            entries.iter().map(|&(v, c)| ColoredInteger::new(v, c, t)).collect()
        };
        let symbol = ColoredFrobeniusSymbol { modulus: t, top: row(top)?, bottom: row(bottom)? };
        let decreasing = |row: &[ColoredInteger]| {
            row.windows(2).all(|w| (w[0].value, w[0].color) > (w[1].value, w[1].color))
        };
        if !decreasing(&symbol.top) || !decreasing(&symbol.bottom) {
            return Err(Error::Malformed {
                what: "colored Frobenius symbol",
                reason: "rows must be strictly decreasing in the colored order".into(),
            });
        }
        symbol.to_frobenius()?;
        Ok(symbol)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn top(&self) -> &[ColoredInteger] {
        &self.top
    }

    pub fn bottom(&self) -> &[ColoredInteger] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn to_frobenius(&self) -> Result<FrobeniusSymbol> {
        let mut bottom: Vec<usize> = self.bottom.iter().map(ColoredInteger::decode_bottom).collect();
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        FrobeniusSymbol::new(self.top.iter().map(ColoredInteger::decode_top).collect(), bottom)
    }

    /// Kolitsch's characterization: no color occurs in both rows, and in each
    /// row the values carrying a given color are exactly `0, 1, …, m-1`.
    pub fn is_t_core(&self) -> bool {
        let by_color = |row: &[ColoredInteger]| {
            let mut groups: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for x in row {
                groups.entry(x.color).or_default().insert(x.value);
            }
            groups
        };
        let top = by_color(&self.top);
        let bottom = by_color(&self.bottom);
        if top.keys().any(|c| bottom.contains_key(c)) {
            return false;
        }
        let initial_segment =
            |values: &BTreeSet<usize>| values.iter().copied().eq(0..values.len());
        top.values().chain(bottom.values()).all(initial_segment)
    }
}

impl fmt::Display for ColoredFrobeniusSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_row(f, &self.top)?;
        f.write_str(" / ")?;
        fmt_row(f, &self.bottom)
    }
}

#[derive(Serialize)]
struct ColoredJson {
    t: usize,
    top: Vec<[usize; 2]>,
    bottom: Vec<[usize; 2]>,
}

impl Serialize for ColoredFrobeniusSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = |row: &[ColoredInteger]| row.iter().map(|x| [x.value, x.color]).collect();
        ColoredJson { t: self.modulus, top: pairs(&self.top), bottom: pairs(&self.bottom) }
            .serialize(serializer)
    }
}

/// A row of a t-colored Frobenius partition, listed in decreasing colored order.
pub type ColoredRow = Vec<ColoredInteger>;

/// Every strictly decreasing row of colored integers whose value sum plus
/// length is at most `budget`.
fn colored_rows(budget: usize, t: usize) -> Vec<ColoredRow> {
    fn extend(
        candidates: &[ColoredInteger],
        from: usize,
        budget: usize,
        current: &mut Vec<ColoredInteger>,
        out: &mut Vec<ColoredRow>,
    ) {
        let used: usize = current.iter().map(|x| x.value + 1).sum();
        for (k, &x) in candidates.iter().enumerate().skip(from) {
            if used + x.value + 1 > budget {
                // candidates ascend in value, so nothing later fits either
                break;
            }
            current.push(x);
            let mut row = current.clone();
            row.reverse();
            out.push(row);
            extend(candidates, k + 1, budget, current, out);
            current.pop();
        }
    }

    let candidates: Vec<ColoredInteger> = (0..budget)
        .flat_map(|v| (0..t).map(move |c| ColoredInteger { value: v, color: c, modulus: t }))
        .collect();
    let mut out = vec![Vec::new()];
    extend(&candidates, 0, budget, &mut Vec::new(), &mut out);
    out
}

fn value_sum(row: &[ColoredInteger]) -> usize {
    row.iter().map(|x| x.value).sum()
}

/// All t-colored Frobenius partitions of `n`: pairs of equal-length rows, each
/// strictly decreasing in the colored order, with value sum plus column count `n`.
pub fn colored_frobenius_partitions(n: usize, t: usize) -> Result<Vec<(ColoredRow, ColoredRow)>> {
    check_modulus(t)?;
    let rows = colored_rows(n, t);
    let mut out = Vec::new();
    for top in &rows {
        for bottom in &rows {
            if top.len() == bottom.len() && value_sum(top) + value_sum(bottom) + top.len() == n {
                out.push((top.clone(), bottom.clone()));
            }
        }
    }
    Ok(out)
}

/// Number of t-colored Frobenius partitions of `n`, by exhaustive generation of
/// the rows.
pub fn count_colored_frobenius(n: usize, t: usize) -> Result<u64> {
    check_modulus(t)?;
    // rows tallied by (length, value sum)
    let mut table: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for row in colored_rows(n, t) {
        *table.entry((row.len(), value_sum(&row))).or_default() += 1;
    }
    let mut total = 0;
    for (&(len, sum), &count) in &table {
        if sum + len > n {
            continue;
        }
        if let Some(&other) = table.get(&(len, n - len - sum)) {
            total += count * other;
        }
    }
    Ok(total)
}
