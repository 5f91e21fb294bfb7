//! Integer partitions: the partition function via Euler's pentagonal
//! recurrence, lexicographic enumeration and part counting.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::ArithSeq;
use crate::ExactInt;

/// `P(0), P(1), ..., P(bound)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<ExactInt>,
}

impl PartitionTable {
    pub fn new(bound: usize) -> Self {
        let mut values: Vec<BigInt> = Vec::with_capacity(bound + 1);
        values.push(BigInt::one());
        for i in 1..=bound {
            let mut acc = BigInt::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let mut term = values[i - g1].clone();
                if g2 <= i {
                    term += &values[i - g2];
                }
                if k % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            values.push(acc);
        }
        PartitionTable { values }
    }

    pub fn bound(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &ExactInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[ExactInt] {
        &self.values
    }

    /// Total number of parts equal to `d` over all partitions of `n`.
    pub fn parts_of_length(&self, n: usize, d: usize) -> ExactInt {
        assert!(d >= 1 && d <= n && n <= self.bound());
        (1..=n / d).map(|m| &self.values[n - m * d]).sum()
    }

    /// Checks `sum_{k<n} sigma(k) P(n-k) = n P(n) - sigma(n)`; `sigma` must
    /// be tabulated at least to `n`.
    pub fn sigma_identity_holds(&self, n: usize, sigma: &ArithSeq<ExactInt>) -> bool {
        let lhs: BigInt = (1..n)
            .map(|k| sigma.values()[k - 1].clone() * &self.values[n - k])
            .sum();
        let rhs = BigInt::from(n) * &self.values[n] - &sigma.values()[n - 1];
        lhs == rhs
    }
}

pub fn partition_count(n: usize) -> ExactInt {
    PartitionTable::new(n).values.pop().unwrap()
}

/// Number of parts equal to `d` summed over all partitions of `n`.
pub fn count_parts_of_length(n: usize, d: usize) -> Option<ExactInt> {
    (d >= 1 && d <= n).then(|| PartitionTable::new(n).parts_of_length(n, d))
}

pub fn sigma_partition_identity_check(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let table = PartitionTable::new(n);
    let sigma = ArithSeq::<BigInt>::sigma(n, 1);
    table.sigma_identity_holds(n, &sigma)
}

/// Partitions of `n` as nondecreasing tuples, in lexicographic order.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: (n >= 1).then(|| vec![1; n]),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(current)
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let r = parts.len();
    if r < 2 {
        return None;
    }
    let mut out = parts[..r - 2].to_vec();
    let total = parts[r - 2] + parts[r - 1];
    let v = parts[r - 2] + 1;
    if 2 * v > total {
        out.push(total);
        return Some(out);
    }
    let mut rest = total;
    while rest >= 2 * v {
        out.push(v);
        rest -= v;
    }
    out.push(rest);
    Some(out)
}
