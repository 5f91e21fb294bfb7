//! Square-tiled surfaces built from a pair of permutations.
//!
//! `s` glues each square to its right neighbour and `t` to the square above.
//! When `[s, t]` is a 3-cycle and `<s, t>` is transitive the surface is
//! either a single horizontal cylinder (parameters `(k, a, b, c)`) or a pair
//! of cylinders (parameters `(a, b, k, l, alpha, beta)`).
//!
//! Builders number squares row by row from the bottom left, starting at 1.
//! The two-cylinder builder places the short cylinder first.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::arith::{binomial, jordan_totient};
use crate::groups::GeneratedGroup;
use crate::perm::{classify_commutator, CommutatorCase, PermError, Permutation};
use crate::ExactInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrigamiError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("monodromy group is not transitive")]
    NotConnected,
    #[error("heights must be coprime")]
    HeightsNotCoprime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origami {
    s: Permutation,
    t: Permutation,
}

impl Origami {
    pub fn new(s: Permutation, t: Permutation) -> Result<Self, OrigamiError> {
        if s.degree() != t.degree() {
            return Err(PermError::DegreeMismatch(s.degree(), t.degree()).into());
        }
        Ok(Origami { s, t })
    }

    pub fn squares(&self) -> usize {
        self.s.degree()
    }

    pub fn horizontal(&self) -> &Permutation {
        &self.s
    }

    pub fn vertical(&self) -> &Permutation {
        &self.t
    }

    pub fn into_pair(self) -> (Permutation, Permutation) {
        (self.s, self.t)
    }

    pub fn monodromy(&self) -> GeneratedGroup {
        GeneratedGroup::pair(&self.s, &self.t).expect("equal degrees")
    }

    pub fn is_connected(&self) -> bool {
        self.monodromy().is_transitive()
    }

    pub fn is_primitive(&self) -> bool {
        self.monodromy().is_primitive()
    }

    /// One line per square: `square <i> right <s(i)> top <t(i)>`.
    pub fn unfolding(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "origami {}", self.squares());
        for i in 1..=self.squares() {
            let _ = writeln!(
                out,
                "square {i} right {} top {}",
                self.s.apply(i),
                self.t.apply(i)
            );
        }
        out
    }
}

/// One cylinder of `k` rows of width `a + b + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OneCylParams {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// A short cylinder of `a` rows of length `k` under a long cylinder of `b`
/// rows of length `l`, glued with twists `alpha` and `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoCylParams {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub l: usize,
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrigamiParams {
    One(OneCylParams),
    Two(TwoCylParams),
}

impl OneCylParams {
    pub fn new(k: usize, a: usize, b: usize, c: usize) -> Self {
        OneCylParams { k, a, b, c }
    }

    pub fn squares(&self) -> usize {
        self.k * (self.a + self.b + self.c)
    }

    pub fn validate(&self) -> Result<(), OrigamiError> {
        if self.k == 0 || self.a == 0 || self.b == 0 || self.c == 0 {
            return Err(OrigamiError::InvalidParams(format!(
                "{self:?}: all entries must be positive"
            )));
        }
        Ok(())
    }

    /// Every valid tuple with exactly `n` squares.
    pub fn all_with_squares(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for w in 3..=n {
            if !n.is_multiple_of(w) {
                continue;
            }
            for a in 1..w {
                for b in 1..w - a {
                    out.push(OneCylParams::new(n / w, a, b, w - a - b));
                }
            }
        }
        out
    }
}

impl TwoCylParams {
    pub fn new(a: usize, b: usize, k: usize, l: usize, alpha: usize, beta: usize) -> Self {
        TwoCylParams {
            a,
            b,
            k,
            l,
            alpha,
            beta,
        }
    }

    pub fn squares(&self) -> usize {
        self.a * self.k + self.b * self.l
    }

    pub fn validate(&self) -> Result<(), OrigamiError> {
        let TwoCylParams {
            a,
            b,
            k,
            l,
            alpha,
            beta,
        } = *self;
        if a == 0 || b == 0 || k == 0 {
            return Err(OrigamiError::InvalidParams(format!(
                "{self:?}: heights and lengths must be positive"
            )));
        }
        if k >= l {
            return Err(OrigamiError::InvalidParams(format!("{self:?}: need k < l")));
        }
        if alpha >= k || beta >= l {
            return Err(OrigamiError::InvalidParams(format!(
                "{self:?}: twist out of range"
            )));
        }
        Ok(())
    }

    pub fn all_with_squares(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for k in 1..n {
            for l in k + 1..=n {
                for a in 1..=n / k {
                    let rest = match n.checked_sub(a * k) {
                        Some(r) if r > 0 && r % l == 0 => r,
                        _ => continue,
                    };
                    let b = rest / l;
                    for alpha in 0..k {
                        for beta in 0..l {
                            out.push(TwoCylParams::new(a, b, k, l, alpha, beta));
                        }
                    }
                }
            }
        }
        out
    }
}

pub fn build_one_cylinder(params: &OneCylParams) -> Result<Origami, OrigamiError> {
    params.validate()?;
    let OneCylParams { k, a, b, c } = *params;
    let w = a + b + c;
    let n = k * w;
    let mut s = vec![0; n];
    let mut t = vec![0; n];
    for r in 0..k {
        for j in 0..w {
            let i = r * w + j;
            s[i] = r * w + (j + 1) % w;
            t[i] = if r + 1 < k {
                i + w
            } else if j < a {
                j
            } else if j < a + c {
                j + b
            } else {
                j - c
            };
        }
    }
    Ok(Origami {
        s: Permutation::from_raw(s),
        t: Permutation::from_raw(t),
    })
}

pub fn build_two_cylinder(params: &TwoCylParams) -> Result<Origami, OrigamiError> {
    params.validate()?;
    let TwoCylParams {
        a,
        b,
        k,
        l,
        alpha,
        beta,
    } = *params;
    let n = params.squares();
    let short = |r: usize, j: usize| r * k + j;
    let long = |r: usize, j: usize| a * k + r * l + j;
    let mut s = vec![0; n];
    let mut t = vec![0; n];
    for r in 0..a {
        for j in 0..k {
            s[short(r, j)] = short(r, (j + 1) % k);
            t[short(r, j)] = if r + 1 < a {
                short(r + 1, j)
            } else {
                long(0, (j + alpha) % k)
            };
        }
    }
    for r in 0..b {
        for j in 0..l {
            s[long(r, j)] = long(r, (j + 1) % l);
            t[long(r, j)] = if r + 1 < b {
                long(r + 1, j)
            } else {
                let q = (j + beta) % l;
                if q < k {
                    short(0, q)
                } else {
                    long(0, q)
                }
            };
        }
    }
    Ok(Origami {
        s: Permutation::from_raw(s),
        t: Permutation::from_raw(t),
    })
}

pub fn build(params: &OrigamiParams) -> Result<Origami, OrigamiError> {
    match params {
        OrigamiParams::One(p) => build_one_cylinder(p),
        OrigamiParams::Two(p) => build_two_cylinder(p),
    }
}

/// Reads the cylinder parameters off a connected pair with 3-cycle commutator.
pub fn classify_origami(s: &Permutation, t: &Permutation) -> Result<OrigamiParams, OrigamiError> {
    let case = classify_commutator(s, t)?;
    if !GeneratedGroup::pair(s, t)
        .expect("equal degrees")
        .is_transitive()
    {
        return Err(OrigamiError::NotConnected);
    }
    let n = s.degree();
    match case {
        CommutatorCase::SameCycle { a, b, c, .. } => Ok(OrigamiParams::One(OneCylParams {
            k: n / (a + b + c),
            a,
            b,
            c,
        })),
        CommutatorCase::SplitCycle {
            x,
            y,
            z,
            short,
            long,
        } => {
            let (k, l) = (short, long);
            let flag = s.flag();
            let a = flag.iter().filter(|&&len| len == k).count();
            let b = flag.iter().filter(|&&len| len == l).count();
            let dist = |p: usize, q: usize| s.s_distance(p, q).expect("valid points").finite();
            let walk = |start: usize, steps: usize| (0..steps).fold(start, |p, _| t.apply(p));

            let top_short = walk(z, a);
            let alpha = dist(y, top_short).ok_or(PermError::BrokenGeometry)? % l;
            let top_long = walk(y, b);
            let beta = match dist(z, top_long) {
                Some(d) => d % k,
                None => k + dist(x, top_long).ok_or(PermError::BrokenGeometry)? % l,
            };
            Ok(OrigamiParams::Two(TwoCylParams {
                a,
                b,
                k,
                l,
                alpha,
                beta,
            }))
        }
    }
}

pub fn one_cylinder_primitive(params: &OneCylParams) -> bool {
    params.k == 1 && params.a.gcd(&params.b).gcd(&params.c) == 1
}

pub fn two_cylinder_primitive(params: &TwoCylParams) -> bool {
    let TwoCylParams {
        a,
        b,
        k,
        l,
        alpha,
        beta,
    } = *params;
    let det = a as i64 * beta as i64 - b as i64 * alpha as i64;
    a.gcd(&b) == 1 && (k.gcd(&l) as i64).gcd(&det) == 1
}

/// Hermite normal form `[(g1, h), (0, g2)]` of the lattice spanned by the
/// rows, with `g1, g2 >= 0`. Zero rows mark a rank deficit.
pub fn hermite_basis(vectors: &[(i64, i64)]) -> [(i128, i128); 2] {
    let mut rows: Vec<(i128, i128)> = vectors
        .iter()
        .map(|&(x, y)| (x as i128, y as i128))
        .collect();
    // eliminate the first column down to a single pivot row
    let mut pivot: Option<(i128, i128)> = None;
    let mut rest = Vec::new();
    for row in rows.drain(..) {
        match pivot {
            None if row.0 != 0 => pivot = Some(row),
            None => rest.push(row),
            Some(p) => {
                let (p, r) = euclid_rows(p, row);
                pivot = Some(p);
                rest.push(r);
            }
        }
    }
    let g2 = rest.iter().fold(0i128, |g, r| g.gcd(&r.1));
    let mut first = pivot.unwrap_or((0, 0));
    if first.0 < 0 {
        first = (-first.0, -first.1);
    }
    if g2 != 0 {
        first.1 = first.1.rem_euclid(g2);
    }
    [first, (0, g2)]
}

/// Row operations turning `(p, r)` into `(gcd-row, row with zero first entry)`.
fn euclid_rows(mut p: (i128, i128), mut r: (i128, i128)) -> ((i128, i128), (i128, i128)) {
    while r.0 != 0 {
        let q = p.0.div_euclid(r.0);
        p = (p.0 - q * r.0, p.1 - q * r.1);
        std::mem::swap(&mut p, &mut r);
    }
    (p, r)
}

/// True when the integer span of `vectors` is all of `Z^2`.
pub fn lattice_generates_z2(vectors: &[(i64, i64)]) -> bool {
    if vectors.len() < 2 {
        return false;
    }
    let [(g1, _), (_, g2)] = hermite_basis(vectors);
    (g1 * g2).abs() == 1
}

/// The four generating vectors of a two-cylinder surface.
pub fn cylinder_lattice(params: &TwoCylParams) -> [(i64, i64); 4] {
    let TwoCylParams {
        a,
        b,
        k,
        l,
        alpha,
        beta,
    } = *params;
    [
        (alpha as i64, a as i64),
        (beta as i64, b as i64),
        (k as i64, 0),
        (l as i64, 0),
    ]
}

/// Number of twists `(alpha, beta)` in `[0,k) x [0,l)` making the surface
/// primitive: `k l phi(d) / d` with `d = gcd(k, l)`.
pub fn twist_count(a: u64, b: u64, k: u64, l: u64) -> Result<ExactInt, OrigamiError> {
    if a.gcd(&b) != 1 {
        return Err(OrigamiError::HeightsNotCoprime);
    }
    if k == 0 || l == 0 {
        return Err(OrigamiError::InvalidParams(
            "lengths must be positive".into(),
        ));
    }
    let d = k.gcd(&l);
    let phi = jordan_totient(d, 1).expect("d >= 1");
    Ok(BigInt::from(k * l) * phi / d)
}

/// Triples `x < y < z` in `[1, n]` with `d | y - x` and `d | z - y`.
pub fn step_divisor_triples(n: u64, d: u64) -> ExactInt {
    BigInt::from(d) * binomial(n / d, 3)
}

/// Triples `x < y < z` in `[1, n]` with `gcd(y - x, z - y, n) = 1`:
/// `(n/6) J_2(n) - (n/2) J_1(n)`.
pub fn coprime_gap_triples(n: u64) -> ExactInt {
    let j2 = jordan_totient(n, 2).expect("n >= 1");
    let j1 = jordan_totient(n, 1).expect("n >= 1");
    (BigInt::from(n) * j2 - BigInt::from(3 * n) * j1) / 6
}
