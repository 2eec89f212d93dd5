//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's own generators or hook code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use corequot::Partition;

/// Partitions of `n` with parts at most `max`, by plain recursion.
pub fn naive_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in naive_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn all_up_to(max_n: usize) -> Vec<Partition> {
    (0..=max_n)
        .flat_map(|n| naive_partitions(n, n))
        .map(|parts| Partition::new(parts).unwrap())
        .collect()
}

pub fn cells(parts: &[usize]) -> BTreeSet<(usize, usize)> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
        .collect()
}

pub fn cell_conjugate(parts: &[usize]) -> Vec<usize> {
    let set = cells(parts);
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| set.iter().filter(|&&(_, c)| c == j).count())
        .collect()
}

/// Arm + leg + 1, counted cell by cell.
pub fn cell_hooks(parts: &[usize]) -> Vec<usize> {
    let set = cells(parts);
    let mut hooks: Vec<usize> = set
        .iter()
        .map(|&(i, j)| {
            let arm = set.iter().filter(|&&(r, c)| r == i && c > j).count();
            let leg = set.iter().filter(|&&(r, c)| c == j && r > i).count();
            arm + leg + 1
        })
        .collect();
    hooks.sort_unstable();
    hooks
}

pub fn brute_is_core(parts: &[usize], t: usize) -> bool {
    cell_hooks(parts).iter().all(|h| h % t != 0)
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Sweep depth, optionally capped through `COREQUOT_MAX_N`.
pub fn depth(default: usize) -> usize {
    std::env::var("COREQUOT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .map_or(default, |n: usize| n.min(default))
}
