//! Flag counts against closed forms, independent of the chain enumerator.

use flaghull::flags::{count_flags, enumerate_flags};
use flaghull::generators::{binary_subspace, boolean, partition};

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// A maximal chain of set partitions merges two blocks per step.
fn partition_flags(n: u128) -> u128 {
    (2..=n).map(|k| k * (k - 1) / 2).product()
}

/// Complete flags of `F_2^d`: `∏ (2^i - 1)`.
fn subspace_flags(d: u32) -> u128 {
    (1..=d).map(|i| (1u128 << i) - 1).product()
}

#[test]
fn boolean_flag_counts() {
    for n in 1..=5 {
        let l = boolean(n).unwrap();
        assert_eq!(enumerate_flags(&l, 1_000).unwrap().len() as u128, factorial(n as u128));
    }
}

#[test]
fn partition_flag_counts() {
    assert_eq!(partition_flags(4), 18);
    assert_eq!(partition_flags(5), 180);
    for n in 2..=5 {
        let l = partition(n).unwrap();
        assert_eq!(enumerate_flags(&l, 10_000).unwrap().len() as u128, partition_flags(n as u128));
        assert_eq!(count_flags(&l), partition_flags(n as u128));
    }
}

#[test]
fn subspace_flag_counts() {
    for d in 1..=3 {
        let l = binary_subspace(d).unwrap();
        assert_eq!(enumerate_flags(&l, 10_000).unwrap().len() as u128, subspace_flags(d as u32));
    }
    assert_eq!(count_flags(&binary_subspace(4).unwrap()), subspace_flags(4));
}
