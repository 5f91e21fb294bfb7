//! Permutations of `{1, ..., n}`.
//!
//! Points are 1-based at every public boundary. Products compose right to
//! left: `s.compose(&t)` maps `x` to `s(t(x))`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::factorial;
use crate::ExactInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image table is not a bijection")]
    NotBijection,
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
    #[error("commutator is not a 3-cycle")]
    NotThreeCycleCommutator,
    #[error("cycle type does not sum to the degree {0}")]
    InconsistentType(usize),
    #[error("three-cycle points violate the expected distance relations")]
    BrokenGeometry,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

/// Extended s-distance: a positive step count, or infinity across cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDist {
    Finite(usize),
    Infinite,
}

impl ExtDist {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtDist::Finite(d) => Some(d),
            ExtDist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtDist::Finite(_))
    }
}

/// Cycle decomposition in canonical form: every cycle starts at its least
/// point and cycles are sorted by that point. Fixed points are included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    pub cycles: Vec<Vec<usize>>,
    /// cycle length -> multiplicity
    pub cycle_type: BTreeMap<usize, usize>,
    /// nondecreasing cycle lengths
    pub flag: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// From a 1-based image table: `images[x - 1] = s(x)`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &y in images {
            if y == 0 || y > n {
                return Err(PermError::PointOutOfRange {
                    point: y,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(PermError::NotBijection);
            }
            image.push(y - 1);
        }
        Ok(Permutation { image })
    }

    /// 0-based image table, assumed to be a bijection.
    pub(crate) fn from_raw(image: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&image));
        Permutation { image }
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(PermError::PointOutOfRange {
                        point: p,
                        degree: n,
                    });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(PermError::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                image[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `s(x)` for a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] + 1
    }

    pub(crate) fn raw(&self) -> &[usize] {
        &self.image
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&y| y + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation {
            image: other.image.iter().map(|&y| self.image[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Permutation { image }
    }

    /// `[s, t] = s t s^-1 t^-1`.
    pub fn commutator(&self, other: &Self) -> Result<Self, PermError> {
        self.check_degree(other)?;
        Ok(self.commutator_unchecked(other))
    }

    pub(crate) fn commutator_unchecked(&self, t: &Self) -> Self {
        // x -> s(t(s^-1(t^-1(x))))
        let s_inv = self.inverse();
        let t_inv = t.inverse();
        Permutation {
            image: (0..self.image.len())
                .map(|x| self.image[t.image[s_inv.image[t_inv.image[x]]]])
                .collect(),
        }
    }

    /// `u s u^-1`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self, PermError> {
        self.check_degree(u)?;
        let mut image = vec![0; self.image.len()];
        for x in 0..self.image.len() {
            image[u.image[x]] = u.image[self.image[x]];
        }
        Ok(Permutation { image })
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            out = base.compose_unchecked(&out);
        }
        out
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let cycles = self.cycles();
        let mut flag: Vec<usize> = cycles.iter().map(Vec::len).collect();
        flag.sort_unstable();
        let mut cycle_type = BTreeMap::new();
        for &l in &flag {
            *cycle_type.entry(l).or_insert(0) += 1;
        }
        CycleStructure {
            cycles,
            cycle_type,
            flag,
        }
    }

    /// Nondecreasing cycle lengths.
    pub fn flag(&self) -> Vec<usize> {
        let mut flag: Vec<usize> = self.cycle_lengths();
        flag.sort_unstable();
        flag
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image[x];
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&x| self.image[x] != x)
            .map(|x| x + 1)
            .collect()
    }

    /// True when exactly three points move.
    pub fn is_three_cycle(&self) -> bool {
        let mut moved = 0;
        for (x, &y) in self.image.iter().enumerate() {
            if x != y {
                moved += 1;
                if moved > 3 {
                    return false;
                }
            }
        }
        // three moved points always form a 3-cycle
        moved == 3
    }

    /// Single nontrivial cycle, length at least 2.
    pub fn is_cycle(&self) -> bool {
        let lengths = self.cycle_lengths();
        lengths.iter().filter(|&&l| l > 1).count() == 1
    }

    pub fn is_full_cycle(&self) -> bool {
        let n = self.image.len();
        n >= 1 && self.cycle_lengths() == [n]
    }

    pub fn signature(&self) -> i8 {
        let n = self.image.len();
        let cycles = self.cycle_lengths().len();
        if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Least `d >= 1` with `s^d(x) = y`.
    pub fn s_distance(&self, x: usize, y: usize) -> Result<ExtDist, PermError> {
        let n = self.image.len();
        for p in [x, y] {
            if p == 0 || p > n {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
        }
        Ok(self.distance0(x - 1, y - 1))
    }

    pub(crate) fn distance0(&self, x: usize, y: usize) -> ExtDist {
        let mut p = self.image[x];
        let mut d = 1;
        loop {
            if p == y {
                return ExtDist::Finite(d);
            }
            if p == x {
                return ExtDist::Infinite;
            }
            p = self.image[p];
            d += 1;
        }
    }

    /// Lexicographic iteration over `S_n`.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }

    fn check_degree(&self, other: &Self) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }
}

fn is_bijection(image: &[usize]) -> bool {
    let mut seen = vec![false; image.len()];
    image
        .iter()
        .all(|&y| y < image.len() && !std::mem::replace(&mut seen[y], true))
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { image: current })
    }
}

impl fmt::Display for Permutation {
    /// `n:(a b c)(d e)`; fixed points omitted, `n:()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.degree())?;
        let mut wrote = false;
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `"(1 2 3)(7 8 9)"` or `"9:(1 2 3)(7 8 9)"`. Without the degree
    /// prefix the degree is the largest point mentioned.
    fn from_str(text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        let (degree, body) = match text.split_once(':') {
            Some((d, rest)) => {
                let d = d
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| PermError::Parse(format!("bad degree {d:?}")))?;
                (Some(d), rest.trim())
            }
            None => (None, text),
        };
        let mut cycles = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' at {rest:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
            let points = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = degree.unwrap_or(max);
        Permutation::from_cycles(n, &cycles)
    }
}

/// Geometry of a 3-cycle commutator `[s, t] = (z y x)` relative to `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutatorCase {
    /// `x, y, z` lie on one cycle of `s` in that order, `x` the least point;
    /// `(a, b, c) = (d(x,y), d(y,z), d(z,x))`.
    SameCycle {
        x: usize,
        y: usize,
        z: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    /// `x, y` share a cycle and `z` sits on a cycle of length `d(y, x)`.
    SplitCycle {
        x: usize,
        y: usize,
        z: usize,
        /// `d(y, x)`, equal to the length of the cycle through `z`
        short: usize,
        /// length of the cycle through `x` and `y`
        long: usize,
    },
}

/// Three moved points of a 3-cycle `c` labelled so that `c = (z y x)` with
/// `x` least.
pub(crate) fn three_cycle_points(c: &Permutation) -> Option<(usize, usize, usize)> {
    if !c.is_three_cycle() {
        return None;
    }
    let x = c.image.iter().enumerate().find(|(i, &y)| *i != y)?.0;
    let z = c.image[x];
    let y = c.image[z];
    Some((x + 1, y + 1, z + 1))
}

pub fn classify_commutator(s: &Permutation, t: &Permutation) -> Result<CommutatorCase, PermError> {
    let c = s.commutator(t)?;
    let (x, y, z) = three_cycle_points(&c).ok_or(PermError::NotThreeCycleCommutator)?;
    let d = |p: usize, q: usize| s.distance0(p - 1, q - 1);
    let (dxy, dyz, dzx) = (d(x, y), d(y, z), d(z, x));
    if let (ExtDist::Finite(a), ExtDist::Finite(b), ExtDist::Finite(cc)) = (dxy, dyz, dzx) {
        if Some(a + b + cc) == d(x, x).finite() {
            return Ok(CommutatorCase::SameCycle {
                x,
                y,
                z,
                a,
                b,
                c: cc,
            });
        }
        return Err(PermError::BrokenGeometry);
    }
    // relabel so that z is the point alone on its cycle
    let pts = [x, y, z];
    let lone = pts
        .iter()
        .copied()
        .find(|&p| pts.iter().all(|&q| q == p || !d(p, q).is_finite()))
        .ok_or(PermError::BrokenGeometry)?;
    let z = lone;
    let y = c.apply(z);
    let x = c.apply(y);
    let short = d(y, x).finite().ok_or(PermError::BrokenGeometry)?;
    let long = d(x, x).finite().unwrap();
    if d(z, z).finite() != Some(short) {
        return Err(PermError::BrokenGeometry);
    }
    Ok(CommutatorCase::SplitCycle {
        x,
        y,
        z,
        short,
        long,
    })
}

/// `n! / prod_l (l^{m_l} m_l!)` for the class with the given cycle lengths.
pub fn conjugacy_class_size(flag: &[usize], n: usize) -> Result<ExactInt, PermError> {
    if flag.iter().sum::<usize>() != n || flag.contains(&0) {
        return Err(PermError::InconsistentType(n));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in flag {
        *counts.entry(l).or_insert(0) += 1;
    }
    let mut denom = BigInt::from(1);
    for (&l, &m) in &counts {
        denom *= num_traits::pow(BigInt::from(l), m) * factorial(m as u64);
    }
    Ok(factorial(n as u64) / denom)
}

impl CycleStructure {
    pub fn class_size(&self) -> ExactInt {
        conjugacy_class_size(&self.flag, self.flag.iter().sum()).expect("flag sums to degree")
    }
}
