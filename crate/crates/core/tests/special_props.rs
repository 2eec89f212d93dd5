mod common;

use std::collections::HashSet;

use corequot::enumeration::{count_doubled_distinct, count_self_conjugate, PartitionClass, PartitionStream};
use corequot::qseries::qpoch_neg;
use corequot::special::{double_distinct, is_doubled_distinct, verify_dd_decomposition, verify_sc_decomposition};
use corequot::DistinctPartition;
use num_bigint::BigInt;

fn distinct_partitions(n: usize) -> Vec<DistinctPartition> {
    common::naive_partitions(n, n)
        .into_iter()
        .filter(|parts| parts.windows(2).all(|w| w[0] > w[1]))
        .map(|parts| DistinctPartition::new(parts).unwrap())
        .collect()
}

#[test]
fn doubling_is_injective_onto_doubled_distinct() {
    let mut images = HashSet::new();
    for k in 0..=12 {
        for delta in distinct_partitions(k) {
            let doubled = double_distinct(&delta);
            assert_eq!(doubled.size(), 2 * delta.size());
            assert!(is_doubled_distinct(&doubled));
            assert!(images.insert(doubled));
        }
    }
    let recognized: HashSet<_> = common::all_up_to(24)
        .into_iter()
        .filter(|l| is_doubled_distinct(l) && l.size() <= 24)
        .collect();
    assert_eq!(recognized, images);
}

#[test]
fn structured_verifiers_pass() {
    for t in 2..=5 {
        for n in 0..=common::depth(20) {
            for lambda in PartitionStream::new(n, PartitionClass::SelfConjugate) {
                let report = verify_sc_decomposition(&lambda, t).unwrap();
                assert!(report.pass, "{report:?}");
            }
            for mu in PartitionStream::new(n, PartitionClass::DoubledDistinct) {
                let report = verify_dd_decomposition(&mu, t).unwrap();
                assert!(report.pass, "{report:?}");
            }
        }
    }
}

#[test]
fn class_counts_match_classical_products() {
    let odd = qpoch_neg(1, 2, 40);
    let even = qpoch_neg(2, 2, 40);
    for n in 0..=40 {
        assert_eq!(odd.coeff(n), &BigInt::from(count_self_conjugate(n)), "sc({n})");
        assert_eq!(even.coeff(n), &BigInt::from(count_doubled_distinct(n)), "dd({n})");
    }
}
