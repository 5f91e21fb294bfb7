use num_bigint::BigInt;
use tricomm::arith::ArithSeq;
use tricomm::partitions::{
    count_parts_of_length, enumerate_partitions, partition_count, PartitionTable,
};

/// Coin-change count with parts `1..=n`.
fn coin_dp(bound: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::from(0); bound + 1];
    ways[0] = BigInt::from(1);
    for part in 1..=bound {
        for total in part..=bound {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways
}

#[test]
fn small_table() {
    let expect = [
        1u64, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385,
    ];
    for (i, &p) in expect.iter().enumerate() {
        assert_eq!(partition_count(i + 1), BigInt::from(p));
    }
}

#[test]
fn pentagonal_recurrence_matches_coin_dp() {
    let table = PartitionTable::new(500);
    assert_eq!(table.values(), coin_dp(500).as_slice());
}

#[test]
fn sigma_partition_identity() {
    let bound = 5000;
    let table = PartitionTable::new(bound);
    let sigma = ArithSeq::<BigInt>::sigma(bound, 1);
    for n in 1..=bound {
        assert!(table.sigma_identity_holds(n, &sigma), "n={n}");
    }
}

#[test]
fn parts_of_length_match_enumeration() {
    let table = PartitionTable::new(30);
    for n in 1..=30 {
        let parts: Vec<Vec<usize>> = enumerate_partitions(n).collect();
        assert_eq!(BigInt::from(parts.len()), *table.get(n));
        for d in 1..=n {
            let direct: usize = parts
                .iter()
                .map(|p| p.iter().filter(|&&x| x == d).count())
                .sum();
            assert_eq!(
                count_parts_of_length(n, d),
                Some(BigInt::from(direct)),
                "n={n} d={d}"
            );
        }
    }
    assert_eq!(count_parts_of_length(3, 4), None);
    assert_eq!(count_parts_of_length(3, 0), None);
}

#[test]
fn sum_of_parts_weighted_by_length_is_n_p() {
    // sum_d d * (#parts equal to d) = n P(n)
    let table = PartitionTable::new(60);
    for n in 1..=60 {
        let total: BigInt = (1..=n).map(|d| table.parts_of_length(n, d) * d).sum();
        assert_eq!(total, table.get(n) * n);
    }
}
