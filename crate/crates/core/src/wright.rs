//! Wright's bijection between two-rowed arrays of (possibly) unequal row
//! lengths and pairs (staircase, partition).
//!
//! For an array with `u` top and `v` bottom entries, the staircase is fixed by
//! the offset `d = u - v`: it is `(d, d-1, …, 1)` when `d >= 0` and
//! `(-d-1, …, 1)` when `d < 0`. Only the offset is stored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frobenius::{fmt_row, is_strictly_decreasing, parse_rows};
use crate::partition::Partition;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoRowedArray {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WrightImage {
    pub offset: i64,
    pub mu: Partition,
}

/// Size of the staircase with offset `d`: `d(d+1)/2` for `d >= 0`, `(-d)(-d-1)/2` otherwise.
pub fn staircase_weight(offset: i64) -> usize {
    let k = if offset >= 0 { offset } else { -offset - 1 };
    (k * (k + 1) / 2) as usize
}

impl TwoRowedArray {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if !is_strictly_decreasing(&top) || !is_strictly_decreasing(&bottom) {
            return Err(Error::Malformed {
                what: "two-rowed array",
                reason: "rows must be strictly decreasing".into(),
            });
        }
        Ok(TwoRowedArray { top, bottom })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn offset(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Total dot count: both row sums plus one diagonal dot per top entry.
    pub fn weight(&self) -> usize {
        self.top.iter().sum::<usize>() + self.bottom.iter().sum::<usize>() + self.top.len()
    }

    /// `μ_i = a_i + i - d` for `i <= u`, followed by the conjugate of
    /// `ν = (b_1 - v + 1, b_2 - v + 2, …, b_v)`.
    pub fn wright_forward(&self) -> WrightImage {
        let v = self.bottom.len();
        let d = self.offset();
        let mut parts: Vec<usize> = self
            .top
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let part = a as i64 + (i as i64 + 1) - d;
                debug_assert!(part >= v as i64);
                part as usize
            })
            .collect();
        // ν keeps its zero parts; b_j >= v - j makes every entry nonnegative
        let nu: Vec<usize> = self
            .bottom
            .iter()
            .enumerate()
            .map(|(j, &b)| b + j + 1 - v)
            .collect();
        parts.extend(Partition::new(nu).expect("ν is weakly decreasing").conjugate().into_parts());
        WrightImage {
            offset: d,
            mu: Partition::new(parts).expect("Wright image is a partition"),
        }
    }
}

impl WrightImage {
    pub fn new(offset: i64, mu: Partition) -> Self {
        WrightImage { offset, mu }
    }

    pub fn weight(&self) -> usize {
        staircase_weight(self.offset) + self.mu.size()
    }

    /// Inverse of [`TwoRowedArray::wright_forward`]. Every `(d, μ)` has a preimage.
    pub fn wright_backward(&self) -> TwoRowedArray {
        let d = self.offset;
        let mu = &self.mu;
        // μ_i + d - i strictly decreases in i, so the top row is a prefix
        let u = (1..)
            .take_while(|&i| mu.part(i) as i64 + d - i as i64 >= 0)
            .count();
        let v = u as i64 - d;
        assert!(v >= 0, "bottom row length {v} must be nonnegative");
        let v = v as usize;
        let top: Vec<usize> = (1..=u).map(|i| (mu.part(i) as i64 + d - i as i64) as usize).collect();

        let tail = Partition::new(mu.parts().iter().skip(u).copied().collect())
            .expect("suffix of a partition")
            .conjugate();
        assert!(tail.len() <= v, "ν has {} parts but only {v} slots", tail.len());
        let bottom: Vec<usize> = (1..=v).map(|j| tail.part(j) + v - j).collect();

        assert!(is_strictly_decreasing(&top) && is_strictly_decreasing(&bottom));
        TwoRowedArray { top, bottom }
    }
}

impl fmt::Display for TwoRowedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_row(f, &self.top)?;
        f.write_str(" / ")?;
        fmt_row(f, &self.bottom)
    }
}

impl FromStr for TwoRowedArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = parse_rows(s)?;
        TwoRowedArray::new(top, bottom)
    }
}

impl fmt::Display for WrightImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} mu={}", self.offset, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(top: &[usize], bottom: &[usize]) -> TwoRowedArray {
        TwoRowedArray::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn forward_examples() {
        let first = arr(&[6, 5, 3, 2, 0], &[4, 2, 1]);
        let img = first.wright_forward();
        assert_eq!(img, WrightImage::new(2, p(&[5, 5, 4, 4, 3, 3, 1])));
        assert_eq!(first.weight(), 28);
        assert_eq!(staircase_weight(2) + img.mu.size(), 28);

        let second = arr(&[4, 2, 1], &[6, 5, 3, 2, 0]);
        let img = second.wright_forward();
        assert_eq!(img, WrightImage::new(-2, p(&[7, 6, 6, 4, 2])));
        assert_eq!(staircase_weight(-2), 1);
        assert_eq!(second.weight(), 26);
        assert_eq!(img.weight(), 26);

        assert_eq!(TwoRowedArray::empty().wright_forward(), WrightImage::new(0, Partition::empty()));
    }

    #[test]
    fn backward_examples() {
        assert_eq!(
            WrightImage::new(2, p(&[5, 5, 4, 4, 3, 3, 1])).wright_backward(),
            arr(&[6, 5, 3, 2, 0], &[4, 2, 1])
        );
        assert_eq!(WrightImage::new(0, Partition::empty()).wright_backward(), TwoRowedArray::empty());
        let staircase = WrightImage::new(3, Partition::empty()).wright_backward();
        assert_eq!(staircase, arr(&[2, 1, 0], &[]));
        assert_eq!(staircase.weight(), 6);
        assert_eq!(WrightImage::new(-2, Partition::empty()).wright_backward(), arr(&[], &[1, 0]));
    }

    #[test]
    fn staircase_weights() {
        assert_eq!(staircase_weight(0), 0);
        assert_eq!(staircase_weight(-1), 0);
        assert_eq!(staircase_weight(1), 1);
        assert_eq!(staircase_weight(-3), 3);
        assert_eq!(staircase_weight(4), 10);
    }

    #[test]
    fn malformed_and_text() {
        assert!(TwoRowedArray::new(vec![1, 1], vec![]).is_err());
        let a: TwoRowedArray = "4 2 1 / -".parse().unwrap();
        assert_eq!(a, arr(&[4, 2, 1], &[]));
        assert_eq!(a.to_string(), "4 2 1 / -");
        assert_eq!(TwoRowedArray::empty().to_string(), "- / -");
        assert!("4 2 1".parse::<TwoRowedArray>().is_err());
    }
}
