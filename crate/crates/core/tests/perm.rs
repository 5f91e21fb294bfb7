use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use tricomm::arith::factorial;
use tricomm::partitions::enumerate_partitions;
use tricomm::perm::{classify_commutator, conjugacy_class_size, CommutatorCase};
use tricomm::{ExtDist, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// Distance by repeated application, bounded by `n`.
fn walk(s: &Permutation, x: usize, y: usize) -> Option<usize> {
    let mut p = x;
    for d in 1..=s.degree() {
        p = s.apply(p);
        if p == y {
            return Some(d);
        }
    }
    None
}

#[test]
fn distances_agree_with_walking() {
    for n in 1..=6 {
        for s in Permutation::all(n) {
            for x in 1..=n {
                for y in 1..=n {
                    let d = s.s_distance(x, y).unwrap();
                    assert_eq!(d.finite(), walk(&s, x, y));
                }
            }
        }
    }
}

#[test]
fn same_cycle_distances_sum_to_cycle_length() {
    for n in 3..=8 {
        let s = Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap();
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    if x == y || y == z || x == z {
                        continue;
                    }
                    let total: usize = [(x, y), (y, z), (z, x)]
                        .iter()
                        .map(|&(p, q)| s.s_distance(p, q).unwrap().finite().unwrap())
                        .sum();
                    assert!(total == n || total == 2 * n);
                }
            }
        }
    }
    let s: Permutation = "6:(1 2 3)(4 5 6)".parse().unwrap();
    assert_eq!(s.s_distance(1, 4).unwrap(), ExtDist::Infinite);
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 1..=12 {
        let total: BigInt = enumerate_partitions(n)
            .map(|flag| conjugacy_class_size(&flag, n).unwrap())
            .sum();
        assert_eq!(total, factorial(n as u64), "n={n}");
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for n in 1..=7 {
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for s in Permutation::all(n) {
            *counts.entry(s.flag()).or_default() += 1;
        }
        for (flag, count) in counts {
            assert_eq!(conjugacy_class_size(&flag, n).unwrap(), BigInt::from(count));
        }
    }
}

#[test]
fn commutator_classification_is_total_on_three_cycles() {
    for n in 4..=5 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        let (mut same, mut split) = (0u64, 0u64);
        for s in &all {
            for t in &all {
                let c = s.commutator(t).unwrap();
                match classify_commutator(s, t) {
                    Ok(CommutatorCase::SameCycle {
                        x,
                        y,
                        z,
                        a,
                        b,
                        c: cc,
                    }) => {
                        assert!(c.is_three_cycle());
                        assert_eq!(c.apply(x), z);
                        assert_eq!(c.apply(z), y);
                        let len = s
                            .cycles()
                            .into_iter()
                            .find(|cyc| cyc.contains(&x))
                            .unwrap()
                            .len();
                        assert_eq!(a + b + cc, len);
                        same += 1;
                    }
                    Ok(CommutatorCase::SplitCycle {
                        x,
                        y,
                        z,
                        short,
                        long,
                    }) => {
                        assert!(c.is_three_cycle());
                        assert_eq!(c.apply(x), z);
                        assert_eq!(s.s_distance(z, z).unwrap(), ExtDist::Finite(short));
                        assert_eq!(s.s_distance(y, x).unwrap(), ExtDist::Finite(short));
                        assert_eq!(s.s_distance(x, x).unwrap(), ExtDist::Finite(long));
                        split += 1;
                    }
                    Err(_) => assert!(!c.is_three_cycle()),
                }
            }
        }
        assert!(same > 0 && split > 0, "n={n}");
    }
}

proptest! {
    #[test]
    fn conjugation_preserves_cycle_type((s, _t, u) in pair(10)) {
        let c = s.conjugate_by(&u).unwrap();
        prop_assert_eq!(c.flag(), s.flag());
        prop_assert_eq!(c.signature(), s.signature());
    }

    #[test]
    fn group_axioms((s, t, u) in pair(9)) {
        let id = Permutation::identity(s.degree());
        prop_assert_eq!(s.compose(&s.inverse()).unwrap(), id.clone());
        prop_assert_eq!(id.compose(&t).unwrap(), t.clone());
        prop_assert_eq!(
            s.compose(&t).unwrap().compose(&u).unwrap(),
            s.compose(&t.compose(&u).unwrap()).unwrap()
        );
        prop_assert_eq!(s.compose(&t).unwrap().signature(), s.signature() * t.signature());
    }

    #[test]
    fn commutator_conjugates_with_pair((s, t, u) in pair(9)) {
        let lhs = s.commutator(&t).unwrap().conjugate_by(&u).unwrap();
        let rhs = s.conjugate_by(&u).unwrap().commutator(&t.conjugate_by(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_round_trips((s, _t, _u) in pair(12)) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), s);
    }

    #[test]
    fn power_laws((s, _t, _u) in pair(9), a in -20i64..20, b in -20i64..20) {
        prop_assert_eq!(s.pow(a).compose(&s.pow(b)).unwrap(), s.pow(a + b));
    }
}
