//! Brute-force enumeration over `S_n x S_n`, used to ground-truth the census
//! formulas and the triple and twist counts at small degree.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::groups::{generates_alt_or_sym, GenerationClass, GroupError};
use crate::partitions::enumerate_partitions;
use crate::perm::{conjugacy_class_size, Permutation};
use crate::ExactInt;

pub const MAX_DEGREE: usize = 8;
pub const MAX_FULL_DEGREE: usize = 6;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("degree {0} outside 3..={MAX_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("degree 8 enumeration must be enabled explicitly")]
    DegreeEightDisabled,
    #[error("full enumeration is limited to degree {MAX_FULL_DEGREE}, got {0}")]
    FullModeTooLarge(usize),
    #[error("enumeration cancelled")]
    Cancelled,
    #[error("{d} does not divide {n}")]
    InvalidDivisor { n: u64, d: u64 },
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },
    #[error("degree must be at least 3, got {0}")]
    TooSmall(u64),
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairFilter {
    B,
    A,
    B1,
    A1,
    B2,
    A2,
}

impl PairFilter {
    pub const ALL: [PairFilter; 6] = [Self::B, Self::A, Self::B1, Self::A1, Self::B2, Self::A2];

    pub fn name(self) -> &'static str {
        match self {
            Self::B => "B",
            Self::A => "A",
            Self::B1 => "B1",
            Self::A1 => "A1",
            Self::B2 => "B2",
            Self::A2 => "A2",
        }
    }

    /// The family this one refines, if any.
    pub fn parent(self) -> Option<PairFilter> {
        match self {
            Self::B => None,
            Self::A | Self::B1 | Self::B2 => Some(Self::B),
            Self::A1 => Some(Self::B1),
            Self::A2 => Some(Self::B2),
        }
    }
}

/// Which of the six predicates a pair satisfies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairFlags {
    pub three_cycle: bool,
    pub generates: bool,
    pub full_cycle: bool,
    pub cycle: bool,
}

impl PairFlags {
    pub fn of(s: &Permutation, t: &Permutation) -> Result<Self, OracleError> {
        let c = s.commutator_unchecked(t);
        if !c.is_three_cycle() {
            return Ok(PairFlags::default());
        }
        let generates = generates_alt_or_sym(s, t)? != GenerationClass::Neither;
        Ok(PairFlags {
            three_cycle: true,
            generates,
            full_cycle: s.is_full_cycle(),
            cycle: s.is_cycle(),
        })
    }

    pub fn satisfies(self, filter: PairFilter) -> bool {
        let gen = self.three_cycle && self.generates;
        match filter {
            PairFilter::B => self.three_cycle,
            PairFilter::A => gen,
            PairFilter::B1 => self.three_cycle && self.full_cycle,
            PairFilter::A1 => gen && self.full_cycle,
            PairFilter::B2 => self.three_cycle && self.cycle,
            PairFilter::A2 => gen && self.cycle,
        }
    }
}

/// Raw pair counts (not divided by `n!`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyCounts {
    pub b: ExactInt,
    pub a: ExactInt,
    pub b1: ExactInt,
    pub a1: ExactInt,
    pub b2: ExactInt,
    pub a2: ExactInt,
}

impl FamilyCounts {
    pub fn get(&self, filter: PairFilter) -> &ExactInt {
        match filter {
            PairFilter::B => &self.b,
            PairFilter::A => &self.a,
            PairFilter::B1 => &self.b1,
            PairFilter::A1 => &self.a1,
            PairFilter::B2 => &self.b2,
            PairFilter::A2 => &self.a2,
        }
    }

    fn add_flags(&mut self, flags: PairFlags) {
        for f in PairFilter::ALL {
            if flags.satisfies(f) {
                *self.get_mut(f) += 1u32;
            }
        }
    }

    fn get_mut(&mut self, filter: PairFilter) -> &mut ExactInt {
        match filter {
            PairFilter::B => &mut self.b,
            PairFilter::A => &mut self.a,
            PairFilter::B1 => &mut self.b1,
            PairFilter::A1 => &mut self.a1,
            PairFilter::B2 => &mut self.b2,
            PairFilter::A2 => &mut self.a2,
        }
    }

    fn scaled(mut self, w: &BigInt) -> Self {
        for f in PairFilter::ALL {
            *self.get_mut(f) *= w;
        }
        self
    }

    fn add(mut self, other: &Self) -> Self {
        for f in PairFilter::ALL {
            *self.get_mut(f) += other.get(f);
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnumerationMode {
    /// One `s` per conjugacy class, weighted by class size.
    #[default]
    ClassReps,
    /// Every `s`; limited to `n <= 6`.
    Full,
}

pub type ProgressFn = Arc<dyn Fn(usize, usize) + Send + Sync>;

#[derive(Clone, Default)]
pub struct BruteOptions {
    pub mode: EnumerationMode,
    /// `None` uses the ambient rayon pool; `Some(1)` runs serially.
    pub threads: Option<usize>,
    pub allow_n8: bool,
    /// Called with `(completed, total)` after each `s` work item.
    pub progress: Option<ProgressFn>,
    /// Checked between work items.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl std::fmt::Debug for BruteOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BruteOptions")
            .field("mode", &self.mode)
            .field("threads", &self.threads)
            .field("allow_n8", &self.allow_n8)
            .field("progress", &self.progress.is_some())
            .field("cancel", &self.cancel.is_some())
            .finish()
    }
}

/// Permutation with consecutive cycles of the given lengths.
pub fn class_representative(flag: &[usize]) -> Permutation {
    let n: usize = flag.iter().sum();
    let mut cycles = Vec::new();
    let mut next = 1;
    for &len in flag {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
}

fn check_degree(n: usize, options: &BruteOptions) -> Result<(), OracleError> {
    if !(3..=MAX_DEGREE).contains(&n) {
        return Err(OracleError::DegreeOutOfRange(n));
    }
    if n == 8 && !options.allow_n8 {
        return Err(OracleError::DegreeEightDisabled);
    }
    if options.mode == EnumerationMode::Full && n > MAX_FULL_DEGREE {
        return Err(OracleError::FullModeTooLarge(n));
    }
    Ok(())
}

/// Counts of all six families at once.
pub fn brute_counts(n: usize, options: &BruteOptions) -> Result<FamilyCounts, OracleError> {
    check_degree(n, options)?;
    let items: Vec<(BigInt, Permutation)> = match options.mode {
        EnumerationMode::ClassReps => enumerate_partitions(n)
            .map(|flag| {
                let size = conjugacy_class_size(&flag, n).expect("valid flag");
                (size, class_representative(&flag))
            })
            .collect(),
        EnumerationMode::Full => Permutation::all(n).map(|s| (BigInt::from(1), s)).collect(),
    };
    let all_t: Vec<Permutation> = Permutation::all(n).collect();
    let total = items.len();
    let done = AtomicUsize::new(0);

    let work = |(weight, s): &(BigInt, Permutation)| -> Result<FamilyCounts, OracleError> {
        if options
            .cancel
            .as_ref()
            .is_some_and(|c| c.load(Ordering::Relaxed))
        {
            return Err(OracleError::Cancelled);
        }
        let mut counts = FamilyCounts::default();
        for t in &all_t {
            counts.add_flags(PairFlags::of(s, t)?);
        }
        let finished = done.fetch_add(1, Ordering::SeqCst) + 1;
        if let Some(cb) = &options.progress {
            cb(finished, total);
        }
        Ok(counts.scaled(weight))
    };

    let partials: Vec<Result<FamilyCounts, OracleError>> = match options.threads {
        Some(1) => items.iter().map(work).collect(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| OracleError::ThreadPool(e.to_string()))?
            .install(|| items.par_iter().map(work).collect()),
        None => items.par_iter().map(work).collect(),
    };
    partials
        .into_iter()
        .try_fold(FamilyCounts::default(), |acc, part| Ok(acc.add(&part?)))
}

/// Number of ordered pairs `(s, t)` in `S_n x S_n` in the family.
pub fn brute_count(
    n: usize,
    filter: PairFilter,
    options: &BruteOptions,
) -> Result<ExactInt, OracleError> {
    Ok(brute_counts(n, options)?.get(filter).clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    /// `x < y < z` with both gaps divisible by `d`.
    StepDivisor(u64),
    /// `gcd(y - x, z - y, n) = 1`.
    CoprimeGap,
}

/// Triple loop over `1 <= x < y < z <= n`.
pub fn brute_triple_counts(n: u64, kind: TripleKind) -> Result<ExactInt, OracleError> {
    if n < 3 {
        return Err(OracleError::TooSmall(n));
    }
    if let TripleKind::StepDivisor(d) = kind {
        if d == 0 || !n.is_multiple_of(d) {
            return Err(OracleError::InvalidDivisor { n, d });
        }
    }
    let mut count = 0u64;
    for x in 1..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                let hit = match kind {
                    TripleKind::StepDivisor(d) => (y - x) % d == 0 && (z - y) % d == 0,
                    TripleKind::CoprimeGap => (y - x).gcd(&(z - y)).gcd(&n) == 1,
                };
                count += hit as u64;
            }
        }
    }
    Ok(count.into())
}

/// Pairs `(alpha, beta)` in `[0, k) x [0, l)` with `gcd(k, l, a*beta - b*alpha) = 1`.
pub fn brute_twist_count(a: u64, b: u64, k: u64, l: u64) -> Result<ExactInt, OracleError> {
    if a.gcd(&b) != 1 {
        return Err(OracleError::NotCoprime { a, b });
    }
    let g = k.gcd(&l) as i128;
    let mut count = 0u64;
    for alpha in 0..k {
        for beta in 0..l {
            let twist = a as i128 * beta as i128 - b as i128 * alpha as i128;
            count += (twist.gcd(&g) == 1) as u64;
        }
    }
    Ok(count.into())
}
