//! Verification suites run by `tricomm verify`.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use tricomm::arith::{
    dirichlet_convolve, discrete_convolve, factorial, factorize, ramanujan_rhs, ArithSeq,
    RamanujanOrder,
};
use tricomm::census::{bound_report, sigma3_bounds_hold, CensusContext};
use tricomm::characters::{character_table, frobenius_threecycle_sum};
use tricomm::oracle::{
    brute_counts, brute_triple_counts, brute_twist_count, BruteOptions, PairFilter, TripleKind,
};
use tricomm::origami::{
    build, classify_origami, coprime_gap_triples, one_cylinder_primitive, step_divisor_triples,
    twist_count, two_cylinder_primitive,
};
use tricomm::partitions::PartitionTable;
use tricomm::ExactRatio as BigRational;
use tricomm::{IntSeq, OneCylParams, OrigamiParams, TwoCylParams};

/// Failure messages kept per check; the count is always exact.
const MAX_MESSAGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Formulas,
    Identities,
    Origami,
    Characters,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Formulas,
        Suite::Identities,
        Suite::Origami,
        Suite::Characters,
        Suite::Bounds,
    ];
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_MESSAGES {
                self.failures.push(what());
            }
        }
    }

    pub fn expect_eq<T: PartialEq + Display>(
        &mut self,
        left: &T,
        right: &T,
        label: impl FnOnce() -> String,
    ) {
        let ok = left == right;
        self.record(ok, || format!("{}: {left} != {right}", label()));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_MESSAGES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite,
            passed: checks.iter().all(Check::passed),
            checks,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub brute: BruteOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 7,
            brute: BruteOptions::default(),
        }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let checks = match suite {
        Suite::Formulas => vec![formulas(config.max_n, &config.brute)],
        Suite::Identities => vec![
            dirichlet_identities(500),
            moebius_power_products(500),
            distributivity(300),
            ramanujan(5000),
            partition_table(),
            sigma_partition(5000),
        ],
        Suite::Origami => vec![
            round_trip(10),
            one_cylinder_criterion(12),
            two_cylinder_criterion(11),
            twist_counts(30),
            triple_counts(60),
        ],
        Suite::Characters => vec![frobenius(config.max_n.max(7)), dimension_squares(8)],
        Suite::Bounds => vec![bounds(2000), sigma3(5000)],
    };
    SuiteReport::new(suite, checks)
}

fn family_formula(ctx: &CensusContext, n: usize, filter: PairFilter) -> BigInt {
    let value = match filter {
        PairFilter::B => ctx.count_b(n),
        PairFilter::A => ctx.count_a(n),
        PairFilter::B1 => ctx.count_b1(n),
        PairFilter::A1 => ctx.count_a1(n),
        PairFilter::B2 => ctx.count_b2(n),
        PairFilter::A2 => ctx.count_a2(n),
    };
    value.expect("n >= 3")
}

/// Brute-force counts divided by `n!` against the closed forms, `3 <= n <= max_n`.
pub fn formulas(max_n: usize, options: &BruteOptions) -> Check {
    let mut check = Check::new("formula vs enumeration");
    let ctx = CensusContext::new(max_n.max(3));
    for n in 3..=max_n {
        let counts = match brute_counts(n, options) {
            Ok(c) => c,
            Err(e) => {
                check.record(false, || format!("n={n}: {e}"));
                continue;
            }
        };
        let fact = factorial(n as u64);
        for filter in PairFilter::ALL {
            let raw = counts.get(filter);
            let divisible = (raw % &fact).is_zero();
            check.record(divisible, || {
                format!("n={n} {}: {raw} not divisible by n!", filter.name())
            });
            check.expect_eq(&(raw / &fact), &family_formula(&ctx, n, filter), || {
                format!("n={n} {}", filter.name())
            });
        }
    }
    check
}

/// The ten standard convolution identities, pointwise on `1..=bound`.
pub fn dirichlet_identities(bound: usize) -> Check {
    let mut check = Check::new("Dirichlet identities");
    let conv = |f: &IntSeq, g: &IntSeq| dirichlet_convolve(f, g, bound).expect("equal bounds");
    let ones = IntSeq::ones(bound);
    let mu = IntSeq::moebius(bound);
    let id = IntSeq::power(bound, 1);
    let phi = IntSeq::phi(bound);
    let tau = IntSeq::tau(bound);
    let sigma = IntSeq::sigma(bound, 1);
    let id_mu = id.pointwise_mul(&mu).expect("equal bounds");
    let mut cases: Vec<(String, IntSeq, IntSeq)> = vec![
        ("1*1 = tau".into(), conv(&ones, &ones), tau.clone()),
        ("1*mu = eps".into(), conv(&ones, &mu), IntSeq::unit(bound)),
        ("1*phi = id".into(), conv(&ones, &phi), id.clone()),
        ("tau*phi = sigma".into(), conv(&tau, &phi), sigma.clone()),
        (
            "(id mu)*sigma = 1".into(),
            conv(&id_mu, &sigma),
            ones.clone(),
        ),
        ("(id mu)*phi = mu".into(), conv(&id_mu, &phi), mu.clone()),
    ];
    for k in 1..=3 {
        let id_k = IntSeq::power(bound, k);
        let sigma_k = IntSeq::sigma(bound, k);
        let j_k = IntSeq::jordan(bound, k);
        cases.push((
            format!("1*id_{k} = sigma_{k}"),
            conv(&ones, &id_k),
            sigma_k.clone(),
        ));
        cases.push((format!("1*J_{k} = id_{k}"), conv(&ones, &j_k), id_k.clone()));
        cases.push((format!("id_{k}*mu = J_{k}"), conv(&id_k, &mu), j_k.clone()));
        cases.push((format!("mu*sigma_{k} = id_{k}"), conv(&mu, &sigma_k), id_k));
    }
    for (name, lhs, rhs) in cases {
        for n in 1..=bound {
            check.expect_eq(lhs.at(n).unwrap(), rhs.at(n).unwrap(), || {
                format!("{name} at {n}")
            });
        }
    }
    check
}

/// `sum_{d|n} mu(d)/d^k = prod_{p|n} (1 - p^-k)` for `k = 0, 1, 2`.
pub fn moebius_power_products(bound: usize) -> Check {
    let mut check = Check::new("Moebius power sums");
    let mu = IntSeq::moebius(bound);
    for k in 0..=2u32 {
        for n in 1..=bound {
            let lhs: BigRational = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| BigRational::new(mu.at(d).unwrap().clone(), BigInt::from(d).pow(k)))
                .sum();
            let rhs: BigRational = factorize(n as u64)
                .into_iter()
                .map(|(p, _)| {
                    BigRational::one() - BigRational::new(1.into(), BigInt::from(p).pow(k))
                })
                .product();
            check.expect_eq(&lhs, &rhs, || format!("k={k} n={n}"));
        }
    }
    check
}

/// `f (g * h) = (f g) * (f h)` for the completely multiplicative `f = id_2`.
pub fn distributivity(bound: usize) -> Check {
    let mut check = Check::new("completely multiplicative distributes");
    let f = IntSeq::power(bound, 2);
    let pairs = [
        (IntSeq::sigma(bound, 1), IntSeq::phi(bound)),
        (IntSeq::moebius(bound), IntSeq::tau(bound)),
        (IntSeq::ones(bound), IntSeq::jordan(bound, 2)),
    ];
    for (g, h) in pairs {
        let lhs = f
            .pointwise_mul(&dirichlet_convolve(&g, &h, bound).unwrap())
            .unwrap();
        let rhs = dirichlet_convolve(
            &f.pointwise_mul(&g).unwrap(),
            &f.pointwise_mul(&h).unwrap(),
            bound,
        )
        .unwrap();
        for n in 1..=bound {
            check.expect_eq(lhs.at(n).unwrap(), rhs.at(n).unwrap(), || format!("n={n}"));
        }
    }
    check
}

pub fn ramanujan(bound: usize) -> Check {
    let s1 = IntSeq::sigma(bound, 1);
    let s3 = IntSeq::sigma(bound, 3);
    let parts: Vec<Check> = (1..=bound)
        .into_par_iter()
        .map(|n| {
            let mut c = Check::new("");
            let deg1 = BigRational::from_integer(discrete_convolve(&s1, &s1, n).unwrap());
            let deg3 = BigRational::from_integer(discrete_convolve(&s1, &s3, n).unwrap());
            c.expect_eq(
                &deg1,
                &ramanujan_rhs(n as u64, RamanujanOrder::Deg1).unwrap(),
                || format!("sigma^sigma n={n}"),
            );
            c.expect_eq(
                &deg3,
                &ramanujan_rhs(n as u64, RamanujanOrder::Deg3).unwrap(),
                || format!("sigma^sigma_3 n={n}"),
            );
            c
        })
        .collect();
    let mut check = Check::new("Ramanujan convolution formulas");
    parts.into_iter().for_each(|c| check.merge(c));
    check
}

pub const PARTITIONS_1_TO_18: [u64; 18] = [
    1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385,
];

pub fn partition_table() -> Check {
    let mut check = Check::new("partition numbers 1..18");
    let table = PartitionTable::new(18);
    for (i, &p) in PARTITIONS_1_TO_18.iter().enumerate() {
        check.expect_eq(table.get(i + 1), &BigInt::from(p), || {
            format!("P({})", i + 1)
        });
    }
    check
}

/// `(sigma ^ P)(n) = n P(n) - sigma(n)`.
pub fn sigma_partition(bound: usize) -> Check {
    let mut check = Check::new("sigma-partition convolution");
    let table = PartitionTable::new(bound);
    let sigma = ArithSeq::<BigInt>::sigma(bound, 1);
    for n in 1..=bound {
        check.record(table.sigma_identity_holds(n, &sigma), || format!("n={n}"));
    }
    check
}

pub fn round_trip(max_n: usize) -> Check {
    let mut check = Check::new("origami build/classify round trip");
    for n in 3..=max_n {
        let all = OneCylParams::all_with_squares(n)
            .into_iter()
            .map(OrigamiParams::One)
            .chain(
                TwoCylParams::all_with_squares(n)
                    .into_iter()
                    .map(OrigamiParams::Two),
            );
        for params in all {
            let back = build(&params).and_then(|o| classify_origami(o.horizontal(), o.vertical()));
            check.record(back.as_ref().ok() == Some(&params), || {
                format!("{params:?} -> {back:?}")
            });
        }
    }
    check
}

pub fn one_cylinder_criterion(max_n: usize) -> Check {
    let mut check = Check::new("one-cylinder primitivity criterion");
    for n in 3..=max_n {
        for p in OneCylParams::all_with_squares(n) {
            let by_blocks = build(&OrigamiParams::One(p))
                .map(|o| o.is_primitive())
                .unwrap_or(false);
            check.record(one_cylinder_primitive(&p) == by_blocks, || format!("{p:?}"));
        }
    }
    check
}

pub fn two_cylinder_criterion(max_n: usize) -> Check {
    let mut check = Check::new("two-cylinder primitivity criterion");
    let params: Vec<TwoCylParams> = (3..=max_n)
        .flat_map(TwoCylParams::all_with_squares)
        .collect();
    let parts: Vec<Check> = params
        .par_iter()
        .map(|p| {
            let mut c = Check::new("");
            let by_blocks = build(&OrigamiParams::Two(*p))
                .map(|o| o.is_primitive())
                .unwrap_or(false);
            c.record(two_cylinder_primitive(p) == by_blocks, || format!("{p:?}"));
            c
        })
        .collect();
    parts.into_iter().for_each(|c| check.merge(c));
    check
}

/// Five coprime height pairs for every `k, l <= max`.
pub const TWIST_HEIGHTS: [(u64, u64); 5] = [(1, 1), (1, 2), (2, 3), (3, 5), (5, 4)];

pub fn twist_counts(max: u64) -> Check {
    let mut check = Check::new("twist counts");
    for k in 1..=max {
        for l in 1..=max {
            for (a, b) in TWIST_HEIGHTS {
                let formula = twist_count(a, b, k, l).unwrap();
                let brute = brute_twist_count(a, b, k, l).unwrap();
                check.expect_eq(&formula, &brute, || format!("a={a} b={b} k={k} l={l}"));
            }
        }
    }
    check
}

pub fn triple_counts(max_n: u64) -> Check {
    let mut check = Check::new("triple counting");
    for n in 3..=max_n {
        for d in (1..=n).filter(|d| n % d == 0) {
            let brute = brute_triple_counts(n, TripleKind::StepDivisor(d)).unwrap();
            check.expect_eq(&brute, &step_divisor_triples(n, d), || {
                format!("step n={n} d={d}")
            });
        }
        let brute = brute_triple_counts(n, TripleKind::CoprimeGap).unwrap();
        check.expect_eq(&brute, &coprime_gap_triples(n), || format!("coprime n={n}"));
    }
    check
}

/// `n! |C| sum_rho chi_rho(c)/dim rho = #B(n)` with `|C| = n(n-1)(n-2)/3`.
pub fn frobenius(max_n: usize) -> Check {
    let mut check = Check::new("Frobenius character sum");
    let ctx = CensusContext::new(max_n);
    for n in 3..=max_n {
        let fact = factorial(n as u64);
        let class = BigInt::from(n * (n - 1) * (n - 2) / 3);
        let lhs = frobenius_threecycle_sum(n) * BigRational::from_integer(&fact * class);
        let rhs = BigRational::from_integer(ctx.count_b(n).unwrap() * fact);
        check.expect_eq(&lhs, &rhs, || format!("n={n}"));
        let sum = frobenius_threecycle_sum(n);
        let p = BigRational::from_integer(ctx.partition(n).clone());
        let lower = BigRational::new(3.into(), BigInt::from(n * n)) * &p;
        let upper = BigRational::new(5.into(), 4.into()) * &p;
        check.notes.push(format!(
            "n={n}: sum={sum}, (3/n^2)P<sum: {}, sum<(5/4)P: {}",
            lower < sum,
            sum < upper
        ));
    }
    check
}

pub fn dimension_squares(max_n: usize) -> Check {
    let mut check = Check::new("sum of squared dimensions");
    for n in 1..=max_n {
        let table = character_table(n);
        let total: BigInt = (0..table.shapes.len())
            .map(|i| table.dimension(i).pow(2))
            .sum();
        check.expect_eq(&total, &factorial(n as u64), || format!("n={n}"));
    }
    check
}

pub fn bounds(max_n: usize) -> Check {
    let mut check = Check::new("B and A bounds");
    let report = bound_report(max_n);
    for row in &report.rows {
        check.record(row.b_below_psi2, || {
            format!("(8/3)B < psi_2 fails at n={}", row.n)
        });
        check.record(row.a_below_cubic, || {
            format!("A < (3/8)n^3 fails at n={}", row.n)
        });
        for (a, ok) in row.psi_sandwich.iter().enumerate() {
            check.record(*ok, || format!("psi_{a} sandwich fails at n={}", row.n));
        }
    }
    check.notes.push(match report.epsilon_threshold() {
        Some(n0) => format!(
            "eps={}: lower bounds hold from n={n0} through {max_n}",
            report.epsilon
        ),
        None => format!(
            "eps={}: lower bounds do not settle by {max_n}",
            report.epsilon
        ),
    });
    check
}

pub fn sigma3(max_n: usize) -> Check {
    let mut check = Check::new("sigma_3 bounds");
    let ctx = CensusContext::new(max_n);
    for n in 2..=max_n {
        let (upper, lower) = sigma3_bounds_hold(&ctx, n);
        check.record(upper, || format!("sigma_3 < n^2 sigma fails at n={n}"));
        check.record(lower, || format!("sigma_3 > n phi sigma fails at n={n}"));
    }
    check
}
