//! Multiplicative arithmetic functions, Dirichlet and discrete convolution,
//! Möbius inversion and a handful of closed-form sums.
//!
//! Sequences are tabulated eagerly on `1..=bound` and are generic over the
//! value type through [`Scalar`]. Exact work uses [`ExactRatio`] or
//! [`ExactInt`]; `i128` and `f64` instantiate the same code for fast paths
//! and quick plots.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::{ExactInt, ExactRatio};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,
    #[error("order must be positive")]
    ZeroOrder,
    #[error("sequence bounds differ ({left} vs {right})")]
    BoundMismatch { left: usize, right: usize },
    #[error("index {index} outside tabulated range 1..={bound}")]
    OutOfRange { index: usize, bound: usize },
    #[error("sequence is not invertible: f(1) is not a unit")]
    NotInvertible,
    #[error("value at {index} is not an integer")]
    NotInteger { index: usize },
    #[error("argument {got} is below the minimum {min}")]
    TooSmall { got: u64, min: u64 },
}

/// Value type an [`ArithSeq`] can hold.
pub trait Scalar: num_traits::Num + Clone + Debug + Send + Sync {
    fn from_int(v: BigInt) -> Self;
}

impl Scalar for BigInt {
    fn from_int(v: BigInt) -> Self {
        v
    }
}

impl Scalar for BigRational {
    fn from_int(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }
}

impl Scalar for i128 {
    fn from_int(v: BigInt) -> Self {
        v.to_i128().expect("value does not fit in i128")
    }
}

impl Scalar for f64 {
    fn from_int(v: BigInt) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Prime factorization `n = prod p^e` by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest-prime-factor table on `0..=bound`.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    spf: Vec<u32>,
}

impl PrimeSieve {
    pub fn new(bound: usize) -> Self {
        let mut spf = vec![0u32; bound + 1];
        for i in 2..=bound {
            if spf[i] == 0 {
                let mut j = i;
                while j <= bound {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        PrimeSieve { spf }
    }

    pub fn bound(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n >= 2 && self.spf[n] as usize == n
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (2..self.spf.len()).filter(move |&i| self.is_prime(i))
    }

    /// Falls back to trial division beyond the table.
    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        if n as usize > self.bound() {
            return factorize(n);
        }
        let mut n = n as usize;
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn pow_big(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

fn sigma_from_factors(factors: &[(u64, u32)], k: u32) -> BigInt {
    if k == 0 {
        return factors.iter().map(|&(_, e)| BigInt::from(e + 1)).product();
    }
    factors
        .iter()
        .map(|&(p, e)| {
            // (p^{k(e+1)} - 1) / (p^k - 1)
            let pk = pow_big(p, k);
            (num_traits::pow(pk.clone(), (e + 1) as usize) - 1u32) / (pk - 1u32)
        })
        .product()
}

fn jordan_from_factors(n: u64, factors: &[(u64, u32)], k: u32) -> BigInt {
    let mut acc = pow_big(n, k);
    for &(p, _) in factors {
        let pk = pow_big(p, k);
        acc = acc / &pk * (pk - 1u32);
    }
    acc
}

fn moebius_from_factors(factors: &[(u64, u32)]) -> i8 {
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sum of the `k`-th powers of the divisors of `n`.
pub fn sigma_k(n: u64, k: u32) -> Result<ExactInt, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroArgument);
    }
    Ok(sigma_from_factors(&factorize(n), k))
}

pub fn moebius(n: u64) -> Result<i8, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroArgument);
    }
    Ok(moebius_from_factors(&factorize(n)))
}

/// `J_k(n) = n^k prod_{p | n} (1 - p^-k)`; `J_1` is Euler's phi.
pub fn jordan_totient(n: u64, k: u32) -> Result<ExactInt, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroArgument);
    }
    if k == 0 {
        return Err(ArithError::ZeroOrder);
    }
    Ok(jordan_from_factors(n, &factorize(n), k))
}

pub fn euler_phi(n: u64) -> Result<ExactInt, ArithError> {
    jordan_totient(n, 1)
}

/// An arithmetic function tabulated on `1..=bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithSeq<T> {
    values: Vec<T>,
}

impl<T: Scalar> ArithSeq<T> {
    pub fn tabulate(bound: usize, mut f: impl FnMut(u64) -> T) -> Self {
        ArithSeq {
            values: (1..=bound as u64).map(&mut f).collect(),
        }
    }

    /// `values[0]` is the value at 1.
    pub fn from_values(values: Vec<T>) -> Self {
        ArithSeq { values }
    }

    pub fn bound(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&T> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn at(&self, n: usize) -> Result<&T, ArithError> {
        self.get(n).ok_or(ArithError::OutOfRange {
            index: n,
            bound: self.bound(),
        })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ArithSeq<U> {
        ArithSeq {
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Nonzero at 1.
    pub fn is_admissible(&self) -> bool {
        self.values.first().is_some_and(|v| !v.is_zero())
    }

    /// Pointwise product `(f g)(n) = f(n) g(n)`.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self, ArithError> {
        check_bounds(self, other)?;
        Ok(ArithSeq {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        })
    }

    pub fn truncate(&self, bound: usize) -> Self {
        ArithSeq {
            values: self.values[..bound.min(self.values.len())].to_vec(),
        }
    }

    /// Identity element of Dirichlet convolution.
    pub fn unit(bound: usize) -> Self {
        Self::tabulate(bound, |n| if n == 1 { T::one() } else { T::zero() })
    }

    /// The constant function 1.
    pub fn ones(bound: usize) -> Self {
        Self::tabulate(bound, |_| T::one())
    }

    /// `n -> n^k`.
    pub fn power(bound: usize, k: u32) -> Self {
        Self::tabulate(bound, |n| T::from_int(pow_big(n, k)))
    }

    pub fn moebius(bound: usize) -> Self {
        let sieve = PrimeSieve::new(bound);
        Self::tabulate(bound, |n| {
            let m = moebius_from_factors(&sieve.factorize(n));
            T::from_int(BigInt::from(m))
        })
    }

    /// Number of divisors.
    pub fn tau(bound: usize) -> Self {
        Self::sigma(bound, 0)
    }

    pub fn sigma(bound: usize, k: u32) -> Self {
        let sieve = PrimeSieve::new(bound);
        Self::tabulate(bound, |n| {
            T::from_int(sigma_from_factors(&sieve.factorize(n), k))
        })
    }

    pub fn jordan(bound: usize, k: u32) -> Self {
        let sieve = PrimeSieve::new(bound);
        Self::tabulate(bound, |n| {
            T::from_int(jordan_from_factors(n, &sieve.factorize(n), k))
        })
    }

    pub fn phi(bound: usize) -> Self {
        Self::jordan(bound, 1)
    }
}

impl ArithSeq<ExactRatio> {
    pub fn integer_at(&self, n: usize) -> Result<ExactInt, ArithError> {
        let v = self.at(n)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(ArithError::NotInteger { index: n })
        }
    }
}

fn check_bounds<T>(f: &ArithSeq<T>, g: &ArithSeq<T>) -> Result<(), ArithError> {
    if f.values.len() != g.values.len() {
        return Err(ArithError::BoundMismatch {
            left: f.values.len(),
            right: g.values.len(),
        });
    }
    Ok(())
}

/// `(f * g)(n) = sum_{d | n} f(d) g(n/d)` for `n <= bound`.
pub fn dirichlet_convolve<T: Scalar>(
    f: &ArithSeq<T>,
    g: &ArithSeq<T>,
    bound: usize,
) -> Result<ArithSeq<T>, ArithError> {
    check_bounds(f, g)?;
    if bound > f.bound() {
        return Err(ArithError::BoundMismatch {
            left: bound,
            right: f.bound(),
        });
    }
    let mut out = vec![T::zero(); bound];
    for d in 1..=bound {
        let fd = &f.values[d - 1];
        if fd.is_zero() {
            continue;
        }
        for m in 1..=bound / d {
            out[d * m - 1] = out[d * m - 1].clone() + fd.clone() * g.values[m - 1].clone();
        }
    }
    Ok(ArithSeq { values: out })
}

/// Dirichlet inverse by the recurrence
/// `g(1) = 1/f(1)`, `g(n) = -1/f(1) sum_{d | n, d < n} g(d) f(n/d)`.
///
/// Over integer scalars `f(1)` must be `±1`.
pub fn dirichlet_inverse<T: Scalar>(
    f: &ArithSeq<T>,
    bound: usize,
) -> Result<ArithSeq<T>, ArithError> {
    if bound > f.bound() {
        return Err(ArithError::BoundMismatch {
            left: bound,
            right: f.bound(),
        });
    }
    if bound == 0 {
        return Ok(ArithSeq { values: Vec::new() });
    }
    let f1 = f.values[0].clone();
    if f1.is_zero() {
        return Err(ArithError::NotInvertible);
    }
    let inv1 = T::one() / f1.clone();
    if !(inv1.clone() * f1).is_one() {
        return Err(ArithError::NotInvertible);
    }
    let mut g = vec![T::zero(); bound];
    g[0] = inv1.clone();
    // acc[n] collects sum_{d | n, d < n} g(d) f(n/d), filled as each g(d) becomes final
    let mut acc = vec![T::zero(); bound];
    for d in 1..=bound {
        if d > 1 {
            g[d - 1] = T::zero() - inv1.clone() * acc[d - 1].clone();
        }
        let gd = g[d - 1].clone();
        if gd.is_zero() {
            continue;
        }
        for m in 2..=bound / d {
            acc[d * m - 1] = acc[d * m - 1].clone() + gd.clone() * f.values[m - 1].clone();
        }
    }
    Ok(ArithSeq { values: g })
}

/// `(f △ g)(n) = sum_{k=1}^{n-1} f(k) g(n-k)`, zero at `n = 1`.
pub fn discrete_convolve<T: Scalar>(
    f: &ArithSeq<T>,
    g: &ArithSeq<T>,
    n: usize,
) -> Result<T, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroArgument);
    }
    let need = n - 1;
    for s in [f, g] {
        if s.bound() < need {
            return Err(ArithError::OutOfRange {
                index: need,
                bound: s.bound(),
            });
        }
    }
    Ok((1..n).fold(T::zero(), |acc, k| {
        acc + f.values[k - 1].clone() * g.values[n - k - 1].clone()
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamanujanOrder {
    /// closed form of `σ △ σ`
    Deg1,
    /// closed form of `σ △ σ_3`
    Deg3,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Closed-form right-hand side for the self-convolutions of divisor sums.
pub fn ramanujan_rhs(n: u64, order: RamanujanOrder) -> Result<ExactRatio, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroArgument);
    }
    let factors = factorize(n);
    let s = |k| BigRational::from_integer(sigma_from_factors(&factors, k));
    let nn = BigRational::from_integer(n.into());
    Ok(match order {
        RamanujanOrder::Deg1 => ratio(5, 12) * s(3) + ratio(1, 12) * s(1) - ratio(1, 2) * nn * s(1),
        RamanujanOrder::Deg3 => {
            ratio(7, 80) * s(5) + ratio(1, 24) * s(3)
                - ratio(1, 240) * s(1)
                - ratio(1, 8) * nn * s(3)
        }
    })
}

/// `sum_{k=2}^{n} k (n - k) = (n + 3)(n - 1)(n - 2) / 6`.
pub fn useful_sum_knk(n: u64) -> Result<ExactInt, ArithError> {
    if n < 2 {
        return Err(ArithError::TooSmall { got: n, min: 2 });
    }
    let n = BigInt::from(n);
    Ok((&n + 3u32) * (&n - 1u32) * (&n - 2u32) / 6u32)
}

/// `sum_{k=1}^{n} k (k-1) ... (k-r) = (n+1) n ... (n-r) / (r+2)`.
pub fn falling_sum(n: u64, r: u32) -> ExactInt {
    let n = BigInt::from(n);
    let mut prod = BigInt::one();
    for i in 0..=(r as i64 + 1) {
        prod *= &n + 1 - i;
    }
    if prod.is_negative() {
        return BigInt::zero();
    }
    prod / (r + 2)
}

/// `prod_{i <= count} (1 - 1/p_i^2)` over the first `count` primes.
pub fn euler_product_partial(count: usize) -> ExactRatio {
    let mut bound = 16usize;
    loop {
        let sieve = PrimeSieve::new(bound);
        let primes: Vec<usize> = sieve.primes().take(count).collect();
        if primes.len() == count {
            return primes.into_iter().fold(BigRational::one(), |acc, p| {
                let p2 = BigInt::from(p * p);
                acc * BigRational::new(&p2 - 1u32, p2)
            });
        }
        bound *= 2;
    }
}

pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sigma(n: u64, k: u32) -> BigInt {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| pow_big(d, k))
            .sum()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(1, 3).unwrap(), 1.into());
        assert_eq!(sigma_k(4, 3).unwrap(), brute_sigma(4, 3));
        assert_eq!(sigma_k(4, 3).unwrap(), 73.into());
        assert_eq!(sigma_k(6, 1).unwrap(), 12.into());
        assert_eq!(sigma_k(0, 1), Err(ArithError::ZeroArgument));
        for n in 1..200 {
            for k in 0..4 {
                assert_eq!(sigma_k(n, k).unwrap(), brute_sigma(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), Ok(1));
        assert_eq!(moebius(6), Ok(1));
        assert_eq!(moebius(12), Ok(0));
        assert_eq!(moebius(30), Ok(-1));
        assert_eq!(moebius(0), Err(ArithError::ZeroArgument));
    }

    fn brute_jordan(n: u64, k: u32) -> u64 {
        // k-tuples in [1, n]^k whose gcd together with n is 1
        let mut count = 0;
        let mut tuple = vec![1u64; k as usize];
        loop {
            let g = tuple.iter().fold(n, |g, &a| g.gcd(&a));
            if g == 1 {
                count += 1;
            }
            let mut i = 0;
            while i < tuple.len() && tuple[i] == n {
                tuple[i] = 1;
                i += 1;
            }
            if i == tuple.len() {
                return count;
            }
            tuple[i] += 1;
        }
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_totient(1, 2).unwrap(), 1.into());
        assert_eq!(brute_jordan(4, 2), 12);
        assert_eq!(jordan_totient(4, 2).unwrap(), 12.into());
        assert_eq!(brute_jordan(6, 2), 24);
        assert_eq!(jordan_totient(6, 2).unwrap(), 24.into());
        assert_eq!(jordan_totient(6, 0), Err(ArithError::ZeroOrder));
        for n in 1..40 {
            for k in 1..4 {
                assert_eq!(jordan_totient(n, k).unwrap(), brute_jordan(n, k).into());
            }
        }
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieve = PrimeSieve::new(1000);
        for n in 1..=1200u64 {
            assert_eq!(sieve.factorize(n), factorize(n));
        }
        assert_eq!(sieve.primes().count(), 168);
    }

    #[test]
    fn convolution_examples() {
        let one = ArithSeq::<BigRational>::ones(10);
        let tau = dirichlet_convolve(&one, &one, 10).unwrap();
        assert_eq!(tau.at(6).unwrap(), &rat(4));

        let mu = ArithSeq::<BigRational>::moebius(10);
        let eps = dirichlet_convolve(&mu, &one, 10).unwrap();
        assert_eq!(eps.at(1).unwrap(), &rat(1));
        assert_eq!(eps.at(5).unwrap(), &rat(0));

        let id2 = ArithSeq::<BigRational>::power(10, 2);
        assert_eq!(
            dirichlet_convolve(&mu, &id2, 10).unwrap().at(4).unwrap(),
            &rat(12)
        );

        let short = ArithSeq::<BigRational>::ones(5);
        assert!(matches!(
            dirichlet_convolve(&one, &short, 5),
            Err(ArithError::BoundMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let one = ArithSeq::<BigRational>::ones(30);
        assert_eq!(dirichlet_inverse(&one, 30).unwrap(), ArithSeq::moebius(30));
        let eps = ArithSeq::<BigRational>::unit(30);
        assert_eq!(dirichlet_inverse(&eps, 30).unwrap(), eps);

        let sigma = ArithSeq::<BigRational>::sigma(4, 1);
        let inv = dirichlet_inverse(&sigma, 4).unwrap();
        // hand recurrence: g(1)=1, g(2)=-3, g(4)=-(g(1)σ(4) + g(2)σ(2)) = -(7 - 9) = 2
        assert_eq!(inv.at(4).unwrap(), &rat(2));
        assert_eq!(
            dirichlet_convolve(&sigma, &inv, 4).unwrap().at(4).unwrap(),
            &rat(0)
        );

        let zero_at_one = ArithSeq::<BigRational>::tabulate(5, |n| rat(n as i64 - 1));
        assert_eq!(
            dirichlet_inverse(&zero_at_one, 5),
            Err(ArithError::NotInvertible)
        );
        let two = ArithSeq::<BigInt>::tabulate(5, |_| BigInt::from(2));
        assert_eq!(dirichlet_inverse(&two, 5), Err(ArithError::NotInvertible));
        let int_one = ArithSeq::<BigInt>::ones(12);
        assert_eq!(
            dirichlet_inverse(&int_one, 12).unwrap(),
            ArithSeq::<BigInt>::moebius(12)
        );
    }

    #[test]
    fn discrete_convolution_examples() {
        let sigma = ArithSeq::<BigRational>::sigma(10, 1);
        assert_eq!(discrete_convolve(&sigma, &sigma, 1).unwrap(), rat(0));
        assert_eq!(discrete_convolve(&sigma, &sigma, 2).unwrap(), rat(1));
        // 1*4 + 3*3 + 4*1
        assert_eq!(discrete_convolve(&sigma, &sigma, 4).unwrap(), rat(17));
        assert!(discrete_convolve(&sigma, &sigma, 12).is_err());
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_rhs(1, RamanujanOrder::Deg1).unwrap(), rat(0));
        assert_eq!(ramanujan_rhs(2, RamanujanOrder::Deg1).unwrap(), rat(1));
        let s1 = ArithSeq::<BigRational>::sigma(2, 1);
        let s3 = ArithSeq::<BigRational>::sigma(2, 3);
        let lhs = discrete_convolve(&s1, &s3, 2).unwrap();
        assert_eq!(lhs, rat(1));
        assert_eq!(ramanujan_rhs(2, RamanujanOrder::Deg3).unwrap(), lhs);
    }

    #[test]
    fn knk_matches_direct_sum() {
        assert_eq!(useful_sum_knk(2).unwrap(), 0.into());
        assert_eq!(useful_sum_knk(3).unwrap(), 2.into());
        assert_eq!(useful_sum_knk(6).unwrap(), 30.into());
        assert!(useful_sum_knk(1).is_err());
        for n in 2..300u64 {
            let direct: u64 = (2..=n).map(|k| k * (n - k)).sum();
            assert_eq!(useful_sum_knk(n).unwrap(), direct.into());
        }
    }

    #[test]
    fn falling_sum_matches_direct_sum() {
        for r in 0..=4u32 {
            for n in 1..=100u64 {
                let direct: BigInt = (1..=n)
                    .map(|k| {
                        (0..=r as i64)
                            .map(|i| BigInt::from(k as i64 - i))
                            .product::<BigInt>()
                    })
                    .sum();
                assert_eq!(falling_sum(n, r), direct, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn euler_product_decreases_to_six_over_pi_squared() {
        let target = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
        let mut prev = f64::INFINITY;
        for k in 1..=100 {
            let v = euler_product_partial(k).to_f64().unwrap();
            assert!(v < prev && v > target);
            prev = v;
        }
        assert!((prev - target).abs() < 1e-3);
    }

    #[test]
    fn helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(binomial(6, 3), 20.into());
        assert_eq!(binomial(2, 3), 0.into());
        assert_eq!(factorial(5), 120.into());
    }
}
