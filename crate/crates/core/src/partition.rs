//! Integer partitions and their Young-diagram statistics.
//!
//! Rows and columns are 1-based throughout the public API: `hook_length(1, 1)`
//! is the top-left box.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Which of the three hook shapes a box falls into relative to the Durfee square
/// of side `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookKind {
    /// `i <= s` and `j <= s`: the hook length is `a_i + b_j + 1`.
    ArmLeg,
    /// `i <= s < j`: the box sits to the right of the Durfee square.
    Arm,
    /// `j <= s < i`: the box sits below the Durfee square.
    Leg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookClassification {
    pub row: usize,
    pub col: usize,
    pub kind: HookKind,
    pub length: usize,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails unless the parts are
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts into weakly decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (1-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based), i.e. the `j`-th part of the conjugate.
    pub fn column_length(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.partition_point(|&p| p >= j)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.column_length(j)).collect())
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side of the Durfee square: the largest `s` with `λ_s >= s`.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    fn check_box(&self, row: usize, col: usize) -> Result<()> {
        if self.contains_box(row, col) {
            Ok(())
        } else {
            Err(Error::BoxOutsideDiagram { row, col })
        }
    }

    /// `h(i,j) = (λ_i - i) + (λ'_j - j) + 1`.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        self.check_box(row, col)?;
        Ok(self.part(row) - col + self.column_length(col) - row + 1)
    }

    pub fn classify_hook(&self, row: usize, col: usize) -> Result<HookClassification> {
        let length = self.hook_length(row, col)?;
        let s = self.durfee();
        let kind = match (row <= s, col <= s) {
            (true, true) => HookKind::ArmLeg,
            (true, false) => HookKind::Arm,
            (false, true) => HookKind::Leg,
            (false, false) => unreachable!("box ({row}, {col}) outside the Durfee cross"),
        };
        Ok(HookClassification { row, col, kind, length })
    }

    /// Hook lengths row by row, in diagram layout.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|j| len - j + conj.0[j] - i - 1)
                    .collect()
            })
            .collect()
    }

    /// All hook lengths, sorted ascending. Has exactly `size()` elements.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let mut hooks: Vec<usize> = self.hook_lengths().into_iter().flatten().collect();
        hooks.sort_unstable();
        hooks
    }

    /// True iff no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        check_modulus(t)?;
        Ok(self
            .hook_lengths()
            .iter()
            .flatten()
            .all(|h| h % t != 0))
    }

    pub fn count_hooks_of_length(&self, t: usize) -> usize {
        self.hook_lengths()
            .iter()
            .flatten()
            .filter(|&&h| h == t)
            .count()
    }

    /// Boxes `(row, col)` with hook length exactly `t`, in row-major order.
    pub fn boxes_with_hook_length(&self, t: usize) -> Vec<(usize, usize)> {
        let mut boxes = Vec::new();
        for (i, row) in self.hook_lengths().iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                if h == t {
                    boxes.push((i + 1, j + 1));
                }
            }
        }
        boxes
    }

    /// Removes the rim hook (border strip) running from the end of row `row`
    /// to the bottom of column `col`. The removed strip has `hook_length(row, col)`
    /// boxes.
    pub fn remove_rim_hook(&self, row: usize, col: usize) -> Result<Partition> {
        self.check_box(row, col)?;
        let bottom = self.column_length(col);
        let mut parts = self.0.clone();
        for r in row..bottom {
            parts[r - 1] = self.0[r] - 1;
        }
        parts[bottom - 1] = col - 1;
        Partition::new(parts)
    }

    /// Strips rim hooks of length `t` until none remain, always taking the
    /// topmost, then leftmost, box of hook length `t`.
    pub fn strip_t_core(&self, t: usize) -> Result<Partition> {
        check_modulus(t)?;
        let mut current = self.clone();
        while let Some(&(row, col)) = current.boxes_with_hook_length(t).first() {
            current = current.remove_rim_hook(row, col)?;
        }
        Ok(current)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"8,7,7,4,4,2"`, optionally wrapped in parentheses. The empty string
/// (or `"()"`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    token: tok.trim().to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse {
            token: s.to_string(),
            reason: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(l: &Partition) -> BTreeSet<(usize, usize)> {
        l.parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    // Oracle: transpose the diagram cell by cell and read the rows back.
    fn conjugate_by_cells(l: &Partition) -> Partition {
        let transposed: BTreeSet<(usize, usize)> = cells(l).into_iter().map(|(i, j)| (j, i)).collect();
        let rows = transposed.iter().map(|&(i, _)| i).max().unwrap_or(0);
        Partition::new(
            (1..=rows)
                .map(|i| transposed.iter().filter(|&&(r, _)| r == i).count())
                .collect(),
        )
        .unwrap()
    }

    // Oracle: count arm, leg and the box itself directly from the cell set.
    fn hook_by_cells(l: &Partition, i: usize, j: usize) -> usize {
        let c = cells(l);
        let arm = c.iter().filter(|&&(r, s)| r == i && s > j).count();
        let leg = c.iter().filter(|&&(r, s)| s == j && r > i).count();
        arm + leg + 1
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        let sc = p(&[8, 5, 5, 4, 3, 1, 1, 1]);
        assert_eq!(sc.conjugate(), sc);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let l = p(&[8, 7, 7, 4, 4, 2]);
        assert_eq!(conjugate_by_cells(&l), p(&[6, 6, 5, 5, 3, 3, 3, 1]));
        assert_eq!(l.conjugate(), p(&[6, 6, 5, 5, 3, 3, 3, 1]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[8, 7, 7, 4, 4, 2]).durfee(), 4);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(p(&[5, 5, 5, 5, 5]).durfee(), 5);
        assert_eq!(p(&[1, 1, 1]).durfee(), 1);
    }

    #[test]
    fn hook_matrix_example() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        let expected: Vec<Vec<usize>> = vec![
            vec![13, 12, 10, 9, 6, 5, 4, 1],
            vec![11, 10, 8, 7, 4, 3, 2],
            vec![10, 9, 7, 6, 3, 2, 1],
            vec![6, 5, 3, 2],
            vec![5, 4, 2, 1],
            vec![2, 1],
        ];
        assert_eq!(l.hook_lengths(), expected);
        assert_eq!(l.hook_length(1, 1).unwrap(), 13);
        assert_eq!(l.hook_length(1, 2).unwrap(), 12);
        assert_eq!(l.hook_multiset().len(), 32);
        assert_eq!(p(&[1]).hook_length(1, 1).unwrap(), 1);
        for (i, row) in expected.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                assert_eq!(hook_by_cells(&l, i + 1, j + 1), h);
            }
        }
    }

    #[test]
    fn hook_outside_diagram_is_an_error() {
        let l = p(&[2, 1]);
        assert_eq!(
            l.hook_length(2, 2),
            Err(Error::BoxOutsideDiagram { row: 2, col: 2 })
        );
        assert!(l.hook_length(0, 1).is_err());
        assert!(Partition::empty().hook_length(1, 1).is_err());
    }

    #[test]
    fn hook_multiset_examples() {
        assert!(Partition::empty().hook_multiset().is_empty());
        assert_eq!(p(&[2, 1]).hook_multiset(), vec![1, 1, 3]);
    }

    #[test]
    fn core_bruteforce_examples() {
        assert!(p(&[3, 1, 1]).is_t_core(3).unwrap());
        assert!(Partition::empty().is_t_core(7).unwrap());
        assert!(!p(&[2]).is_t_core(2).unwrap());
        assert_eq!(p(&[2]).is_t_core(0), Err(Error::ZeroModulus));
        assert!(!p(&[1]).is_t_core(1).unwrap());
        assert!(Partition::empty().is_t_core(1).unwrap());
    }

    #[test]
    fn hook_counts() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        assert_eq!(l.count_hooks_of_length(1), 4);
        assert_eq!(l.count_hooks_of_length(3), 3);
        assert_eq!(l.boxes_with_hook_length(3), vec![(2, 6), (3, 5), (4, 3)]);
        assert_eq!(Partition::empty().count_hooks_of_length(3), 0);
        assert_eq!(p(&[2, 1]).count_hooks_of_length(3), 1);
    }

    #[test]
    fn hook_classification() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        let c = l.classify_hook(1, 2).unwrap();
        assert_eq!((c.kind, c.length), (HookKind::ArmLeg, 12));
        assert_eq!(l.classify_hook(1, 6).unwrap().kind, HookKind::Arm);
        assert_eq!(l.classify_hook(6, 1).unwrap().kind, HookKind::Leg);
    }

    #[test]
    fn rim_hook_removal() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        // hook (1,6) has length 5 and runs down to row 3
        let h = l.hook_length(1, 6).unwrap();
        let r = l.remove_rim_hook(1, 6).unwrap();
        assert_eq!(l.size() - r.size(), h);
        assert_eq!(r, p(&[6, 6, 5, 4, 4, 2]));
        assert!(cells(&r).is_subset(&cells(&l)));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(p(&[8, 7, 7, 4, 4, 2]).strip_t_core(3).unwrap(), p(&[3, 1, 1]));
        assert_eq!(p(&[2]).strip_t_core(2).unwrap(), Partition::empty());
        let core = p(&[3, 1, 1]);
        assert_eq!(core.strip_t_core(3).unwrap(), core);
        assert_eq!(p(&[4, 2, 1]).strip_t_core(1).unwrap(), Partition::empty());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("8,7,7,4,4,2".parse::<Partition>().unwrap(), p(&[8, 7, 7, 4, 4, 2]));
        assert_eq!("(3, 1, 1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        match "3,x,1".parse::<Partition>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[8, 7, 7]).to_string(), "8,7,7");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn serde_as_array() {
        let l = p(&[3, 1, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,1,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1,1]").unwrap(), l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
