//! Closed-form counts of pairs with a 3-cycle commutator.
//!
//! All counts are divided by `n!`. Families, for `(s, t)` in `S_n x S_n`
//! with `[s, t]` a 3-cycle:
//!
//! * `B`  all such pairs, `A` those generating `A_n` or `S_n`;
//! * `B1`, `A1` the same with `s` an `n`-cycle;
//! * `B2`, `A2` the same with `s` a single cycle of any length.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{binomial, PrimeSieve};
use crate::partitions::PartitionTable;
use crate::{ExactInt, ExactRatio};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("n = {0} is below 3")]
    TooSmall(usize),
    #[error("n = {n} exceeds the tabulated bound {bound}")]
    BeyondBound { n: usize, bound: usize },
    #[error("formula for {family} at n = {n} is not an integer")]
    NotInteger { family: &'static str, n: usize },
    #[error("empty range {from}..={to}")]
    EmptyRange { from: usize, to: usize },
}

/// Per-`n` counts, all divided by `n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub b: ExactInt,
    pub a: ExactInt,
    pub b1: ExactInt,
    pub a1: ExactInt,
    pub b2: ExactInt,
    pub a2: ExactInt,
    /// `A / B`
    pub p_a: ExactRatio,
    /// `A1 / B1`
    pub p1: ExactRatio,
    /// `A2 / B2`
    pub p2: ExactRatio,
    /// partition number `P(n)`
    pub partitions: ExactInt,
}

impl CensusRow {
    /// `P(n) A / (n B)`
    pub fn scaled_p_a(&self) -> ExactRatio {
        &self.p_a * BigRational::new(self.partitions.clone(), BigInt::from(self.n))
    }

    /// `n A2 / B2`
    pub fn scaled_p2(&self) -> ExactRatio {
        &self.p2 * BigInt::from(self.n)
    }
}

/// Divisor sums, totients and partition numbers tabulated up to a bound.
#[derive(Debug, Clone)]
pub struct CensusContext {
    bound: usize,
    sigma1: Vec<BigInt>,
    sigma3: Vec<BigInt>,
    j1: Vec<BigInt>,
    j2: Vec<BigInt>,
    partitions: PartitionTable,
}

impl CensusContext {
    pub fn new(bound: usize) -> Self {
        let sieve = PrimeSieve::new(bound.max(1));
        let mut sigma1 = vec![BigInt::zero()];
        let mut sigma3 = vec![BigInt::zero()];
        let mut j1 = vec![BigInt::zero()];
        let mut j2 = vec![BigInt::zero()];
        for n in 1..=bound as u64 {
            let factors = sieve.factorize(n);
            let mut s1 = BigInt::one();
            let mut s3 = BigInt::one();
            let mut t1 = BigInt::from(n);
            let mut t2 = BigInt::from(n * n);
            for &(p, e) in &factors {
                let p = BigInt::from(p);
                let p3 = &p * &p * &p;
                s1 *= (num_traits::pow(p.clone(), e as usize + 1) - 1u32) / (&p - 1u32);
                s3 *= (num_traits::pow(p3.clone(), e as usize + 1) - 1u32) / (&p3 - 1u32);
                t1 = t1 / &p * (&p - 1u32);
                let p2 = &p * &p;
                t2 = t2 / &p2 * (&p2 - 1u32);
            }
            sigma1.push(s1);
            sigma3.push(s3);
            j1.push(t1);
            j2.push(t2);
        }
        CensusContext {
            bound,
            sigma1,
            sigma3,
            j1,
            j2,
            partitions: PartitionTable::new(bound),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn partition(&self, n: usize) -> &ExactInt {
        self.partitions.get(n)
    }

    pub fn sigma1(&self, n: usize) -> &ExactInt {
        &self.sigma1[n]
    }

    pub fn sigma3(&self, n: usize) -> &ExactInt {
        &self.sigma3[n]
    }

    pub fn phi(&self, n: usize) -> &ExactInt {
        &self.j1[n]
    }

    pub fn jordan2(&self, n: usize) -> &ExactInt {
        &self.j2[n]
    }

    fn check(&self, n: usize) -> Result<(), CensusError> {
        if n < 3 {
            return Err(CensusError::TooSmall(n));
        }
        if n > self.bound {
            return Err(CensusError::BeyondBound {
                n,
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn count_b1(&self, n: usize) -> Result<ExactInt, CensusError> {
        self.check(n)?;
        Ok(binomial(n as u64, 3))
    }

    pub fn count_a1(&self, n: usize) -> Result<ExactInt, CensusError> {
        self.check(n)?;
        let num = BigInt::from(n) * (&self.j2[n] - BigInt::from(3u32) * &self.j1[n]);
        exact_div(num, 6, "A1", n)
    }

    pub fn count_b2(&self, n: usize) -> Result<ExactInt, CensusError> {
        self.check(n)?;
        let n_ = BigInt::from(n);
        let num = (&n_ - 1u32) * (&n_ - 2u32) * (&n_ * &n_ + 5u32 * &n_ + 12u32);
        exact_div(num, 24, "B2", n)
    }

    pub fn count_a2(&self, n: usize) -> Result<ExactInt, CensusError> {
        let a1 = self.count_a1(n)?;
        Ok(a1 + exact_div(BigInt::from((n + 1) * (n - 2)), 2, "A2", n)?)
    }

    /// `(3/8) [ sum sigma_3(k) P(n-k) - 2 sum k sigma(k) P(n-k) + n P(n) ]`
    pub fn count_b(&self, n: usize) -> Result<ExactInt, CensusError> {
        self.check(n)?;
        let mut acc = BigInt::from(n) * self.partitions.get(n);
        for k in 1..=n {
            let weight = &self.sigma3[k] - BigInt::from(2 * k) * &self.sigma1[k];
            acc += weight * self.partitions.get(n - k);
        }
        exact_div(acc * 3u32, 8, "B", n)
    }

    /// `(3/8) (n - 2) J_2(n)`
    pub fn count_a(&self, n: usize) -> Result<ExactInt, CensusError> {
        self.check(n)?;
        exact_div(BigInt::from(3 * (n - 2)) * &self.j2[n], 8, "A", n)
    }

    pub fn row(&self, n: usize) -> Result<CensusRow, CensusError> {
        let (b, a) = (self.count_b(n)?, self.count_a(n)?);
        let (b1, a1) = (self.count_b1(n)?, self.count_a1(n)?);
        let (b2, a2) = (self.count_b2(n)?, self.count_a2(n)?);
        Ok(CensusRow {
            n,
            p_a: BigRational::new(a.clone(), b.clone()),
            p1: BigRational::new(a1.clone(), b1.clone()),
            p2: BigRational::new(a2.clone(), b2.clone()),
            partitions: self.partitions.get(n).clone(),
            b,
            a,
            b1,
            a1,
            b2,
            a2,
        })
    }

    /// `psi_a(n) = sum_{k=1}^{n} k^a sigma(k) P(n-k)` for integer `a`.
    pub fn psi_int(&self, a: u32, n: usize) -> ExactInt {
        assert!(n <= self.bound);
        (1..=n)
            .map(|k| {
                num_traits::pow(BigInt::from(k), a as usize)
                    * &self.sigma1[k]
                    * self.partitions.get(n - k)
            })
            .sum()
    }

    pub fn psi_real(&self, a: f64, n: usize) -> f64 {
        assert!(n <= self.bound);
        (1..=n)
            .map(|k| {
                (k as f64).powf(a)
                    * self.sigma1[k].to_f64().unwrap_or(f64::INFINITY)
                    * self.partitions.get(n - k).to_f64().unwrap_or(f64::INFINITY)
            })
            .sum()
    }
}

fn exact_div(
    num: BigInt,
    den: u32,
    family: &'static str,
    n: usize,
) -> Result<ExactInt, CensusError> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(CensusError::NotInteger { family, n });
    }
    Ok(q)
}

pub fn count_b1(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_b1(n)
}

pub fn count_a1(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_a1(n)
}

pub fn count_b2(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_b2(n)
}

pub fn count_a2(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_a2(n)
}

pub fn count_b(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_b(n)
}

pub fn count_a(n: usize) -> Result<ExactInt, CensusError> {
    CensusContext::new(n).count_a(n)
}

/// Result of `psi_a`; non-integer exponents are evaluated in floating point.
#[derive(Debug, Clone, PartialEq)]
pub enum PsiValue {
    Exact(ExactRatio),
    Approx(f64),
}

impl PsiValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            PsiValue::Exact(r) => r.to_f64().unwrap_or(f64::INFINITY),
            PsiValue::Approx(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&ExactRatio> {
        match self {
            PsiValue::Exact(r) => Some(r),
            PsiValue::Approx(_) => None,
        }
    }
}

pub fn psi(a: &ExactRatio, n: usize) -> PsiValue {
    assert!(!a.is_negative(), "exponent must be nonnegative");
    let ctx = CensusContext::new(n);
    match a.is_integer().then(|| a.to_integer().to_u32()).flatten() {
        Some(e) => PsiValue::Exact(BigRational::from_integer(ctx.psi_int(e, n))),
        None => PsiValue::Approx(ctx.psi_real(a.to_f64().unwrap(), n)),
    }
}

/// Bound checks for a single `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    /// `(8/3) B < psi_2`
    pub b_below_psi2: bool,
    /// `A < (3/8) n^3`
    pub a_below_cubic: bool,
    /// `n P(n) <= psi_a(n) <= n^{a+1} P(n)` for `a = 0, 1, 2`
    pub psi_sandwich: [bool; 3],
    /// `psi_{2-eps}(n) < B`, informational
    pub b_above_psi_eps: bool,
    /// `n^{3-eps} < A`, informational
    pub a_above_power_eps: bool,
}

impl BoundRow {
    pub fn unconditional_hold(&self) -> bool {
        self.b_below_psi2 && self.a_below_cubic && self.psi_sandwich.iter().all(|&ok| ok)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub epsilon: f64,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn unconditional_hold(&self) -> bool {
        self.rows.iter().all(BoundRow::unconditional_hold)
    }

    /// Smallest `n` from which both epsilon bounds hold through the end of the range.
    pub fn epsilon_threshold(&self) -> Option<usize> {
        let mut first = None;
        for row in &self.rows {
            if row.b_above_psi_eps && row.a_above_power_eps {
                first.get_or_insert(row.n);
            } else {
                first = None;
            }
        }
        first
    }
}

pub fn bound_report(n_max: usize) -> BoundReport {
    bound_report_with_epsilon(n_max, 0.5)
}

pub fn bound_report_with_epsilon(n_max: usize, epsilon: f64) -> BoundReport {
    let ctx = CensusContext::new(n_max);
    let rows = (3..=n_max)
        .into_par_iter()
        .map(|n| bound_row(&ctx, n, epsilon))
        .collect();
    BoundReport { epsilon, rows }
}

fn bound_row(ctx: &CensusContext, n: usize, epsilon: f64) -> BoundRow {
    let b = ctx.count_b(n).expect("n in range");
    let a = ctx.count_a(n).expect("n in range");
    let psi: Vec<BigInt> = (0..=2).map(|e| ctx.psi_int(e, n)).collect();
    let p = ctx.partition(n);
    let nn = BigInt::from(n);
    let lower = &nn * p;
    let psi_sandwich = [0usize, 1, 2].map(|e| {
        let upper = num_traits::pow(nn.clone(), e + 1) * p;
        lower <= psi[e] && psi[e] <= upper
    });
    BoundRow {
        n,
        b_below_psi2: &b * 8u32 < &psi[2] * 3u32,
        a_below_cubic: &a * 8u32 < num_traits::pow(nn.clone(), 3) * 3u32,
        psi_sandwich,
        b_above_psi_eps: ctx.psi_real(2.0 - epsilon, n) < b.to_f64().unwrap_or(f64::INFINITY),
        a_above_power_eps: (n as f64).powf(3.0 - epsilon) < a.to_f64().unwrap_or(f64::INFINITY),
    }
}

/// `sigma_3(n) < n^2 sigma(n)` and `sigma_3(n) > n phi(n) sigma(n)`.
pub fn sigma3_bounds_hold(ctx: &CensusContext, n: usize) -> (bool, bool) {
    let nn = BigInt::from(n);
    let s1 = ctx.sigma1(n);
    let s3 = ctx.sigma3(n);
    (s3 < &(&nn * &nn * s1), s3 > &(&nn * ctx.phi(n) * s1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    /// `A1 / B1`
    P1,
    /// `n A2 / B2`
    P2,
    /// `P(n) A / (n B)`
    PA,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub n: usize,
    pub exact: ExactRatio,
    pub decimal: String,
}

pub fn limit_diagnostics(kind: LimitKind, ns: &[usize]) -> Result<Vec<Diagnostic>, CensusError> {
    let max = ns.iter().copied().max().unwrap_or(3);
    let ctx = CensusContext::new(max);
    ns.par_iter()
        .map(|&n| {
            let exact = match kind {
                LimitKind::P1 => BigRational::new(ctx.count_a1(n)?, ctx.count_b1(n)?),
                LimitKind::P2 => {
                    BigRational::new(ctx.count_a2(n)? * BigInt::from(n), ctx.count_b2(n)?)
                }
                LimitKind::PA => BigRational::new(
                    ctx.count_a(n)? * ctx.partition(n),
                    ctx.count_b(n)? * BigInt::from(n),
                ),
            };
            let decimal = format_significant(&exact, 6);
            Ok(Diagnostic { n, exact, decimal })
        })
        .collect()
}

/// Rows `from..=to` in ascending order, computed in parallel.
pub fn census_table(from: usize, to: usize) -> Result<Vec<CensusRow>, CensusError> {
    if from < 3 {
        return Err(CensusError::TooSmall(from));
    }
    if from > to {
        return Err(CensusError::EmptyRange { from, to });
    }
    let ctx = CensusContext::new(to);
    (from..=to).into_par_iter().map(|n| ctx.row(n)).collect()
}

/// Decimal rendering with `digits` significant digits, rounding half to even.
pub fn format_significant(value: &ExactRatio, digits: usize) -> String {
    assert!(digits >= 1);
    if value.is_zero() {
        return format!("0.{}", "0".repeat(digits - 1));
    }
    let negative = value.is_negative();
    let abs = value.abs();
    // exponent e with 10^e <= abs < 10^{e+1}
    let mut e: i64 = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    while pow10(e) > abs {
        e -= 1;
    }
    while pow10(e + 1) <= abs {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &abs * pow10(shift);
    let mut mantissa = round_half_even(&scaled);
    if mantissa == num_traits::pow(BigInt::from(10), digits) {
        mantissa /= 10;
        e += 1;
    }
    let text = mantissa.to_string();
    let body = if e >= 0 && (e as usize) < digits {
        let split = e as usize + 1;
        if split == digits {
            text
        } else {
            format!("{}.{}", &text[..split], &text[split..])
        }
    } else if (-5..0).contains(&e) {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), text)
    } else {
        let tail = if digits > 1 {
            format!(".{}", &text[1..])
        } else {
            String::new()
        };
        format!("{}{}e{}", &text[..1], tail, e)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn pow10(e: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn round_half_even(x: &BigRational) -> BigInt {
    let floor = x.floor().to_integer();
    let frac = x - BigRational::from_integer(floor.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(count_b1(3).unwrap(), 1.into());
        assert_eq!(count_b1(4).unwrap(), 4.into());
        assert_eq!(count_b1(6).unwrap(), 20.into());
        assert_eq!(count_a1(3).unwrap(), 1.into());
        assert_eq!(count_a1(4).unwrap(), 4.into());
        assert_eq!(count_b2(3).unwrap(), 3.into());
        assert_eq!(count_b2(4).unwrap(), 12.into());
        assert_eq!(count_b2(5).unwrap(), 31.into());
        assert_eq!(count_a2(3).unwrap(), 3.into());
        assert_eq!(count_a2(4).unwrap(), 9.into());
        assert_eq!(count_a2(5).unwrap(), 19.into());
        assert_eq!(count_b(3).unwrap(), 3.into());
        assert_eq!(count_b(4).unwrap(), 12.into());
        assert_eq!(count_a(3).unwrap(), 3.into());
        assert_eq!(count_a(4).unwrap(), 9.into());
        assert_eq!(count_a(6).unwrap(), 36.into());
        assert_eq!(count_b(2), Err(CensusError::TooSmall(2)));
    }

    #[test]
    fn prime_case() {
        for p in [3usize, 5, 7, 11, 13, 101] {
            assert_eq!(count_a1(p).unwrap(), count_b1(p).unwrap());
        }
    }

    #[test]
    fn psi_values() {
        for n in 1..=30 {
            let ctx = CensusContext::new(n);
            assert_eq!(ctx.psi_int(0, n), BigInt::from(n) * ctx.partition(n));
        }
        assert_eq!(psi(&r(2, 1), 3), PsiValue::Exact(r(50, 1)));
        assert_eq!(psi(&r(1, 1), 1), PsiValue::Exact(r(1, 1)));
        let approx = psi(&r(3, 2), 3);
        assert!(matches!(approx, PsiValue::Approx(_)));
        let expected = 2.0 + 2f64.powf(1.5) * 3.0 + 3f64.powf(1.5) * 4.0;
        assert!((approx.to_f64() - expected).abs() < 1e-9);
    }

    #[test]
    fn bound_report_small() {
        let report = bound_report(50);
        assert!(report.unconditional_hold());
        assert_eq!(report.rows.len(), 48);
        let ctx = CensusContext::new(3);
        assert_eq!(ctx.psi_int(2, 3), 50.into());
        assert_eq!(BigInt::from(9), BigInt::from(3) * ctx.partition(3));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_significant(&r(1, 1), 6), "1.00000");
        assert_eq!(format_significant(&r(3, 4), 6), "0.750000");
        assert_eq!(format_significant(&r(2, 3), 6), "0.666667");
        assert_eq!(format_significant(&r(123456789, 1000), 6), "123457");
        assert_eq!(format_significant(&r(1234567, 1), 6), "1.23457e6");
        assert_eq!(format_significant(&r(1, 1000000), 6), "1.00000e-6");
        assert_eq!(format_significant(&r(1, 8), 2), "0.12");
        assert_eq!(format_significant(&r(3, 8), 2), "0.38");
        assert_eq!(format_significant(&r(9999995, 10000000), 6), "1.00000");
        assert_eq!(format_significant(&r(-1, 3), 3), "-0.333");
        assert_eq!(format_significant(&r(0, 1), 6), "0.00000");
    }

    #[test]
    fn table_is_ordered() {
        let rows = census_table(3, 40).unwrap();
        assert!(rows.iter().map(|r| r.n).eq(3..=40));
        assert!(matches!(
            census_table(5, 3),
            Err(CensusError::EmptyRange { .. })
        ));
        assert!(matches!(census_table(2, 3), Err(CensusError::TooSmall(2))));
    }

    #[test]
    fn diagnostics() {
        let d = limit_diagnostics(LimitKind::P1, &[3, 4]).unwrap();
        assert_eq!(d[0].exact, r(1, 1));
        assert_eq!(d[0].decimal, "1.00000");
        assert_eq!(d[1].exact, r(1, 1));
        let d = limit_diagnostics(LimitKind::PA, &[4]).unwrap();
        // P(4) * 9 / (4 * 12)
        assert_eq!(d[0].exact, r(15, 16));
    }
}
