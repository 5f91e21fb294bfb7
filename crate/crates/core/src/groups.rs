//! Permutation groups given by generators: orbits, block systems,
//! primitivity, exact order and recognition of `A_n` / `S_n`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::factorial;
use crate::perm::{PermError, Permutation};
use crate::ExactInt;

/// Largest degree accepted by [`GeneratedGroup::group_order`] without an
/// explicit override.
pub const DEFAULT_ORDER_DEGREE_BOUND: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group acts intransitively")]
    NotTransitive,
    #[error("points must be distinct")]
    SamePoint,
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratedGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()).into());
        }
        Ok(GeneratedGroup { degree, generators })
    }

    pub fn pair(s: &Permutation, t: &Permutation) -> Result<Self, GroupError> {
        Self::new(s.degree(), vec![s.clone(), t.clone()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted orbit of the 1-based point `x`.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x - 1] = true;
        let mut stack = vec![x - 1];
        while let Some(p) = stack.pop() {
            for g in &self.generators {
                let q = g.raw()[p];
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        // finite groups: forward images already close the orbit
        (0..self.degree)
            .filter(|&i| seen[i])
            .map(|i| i + 1)
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(1).len() == self.degree
    }

    /// Smallest block containing `x` and `y`.
    pub fn minimal_block(&self, x: usize, y: usize) -> Result<Vec<usize>, GroupError> {
        if x == y {
            return Err(GroupError::SamePoint);
        }
        for p in [x, y] {
            if p == 0 || p > self.degree {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                }
                .into());
            }
        }
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        let mut classes = self.block_closure(x - 1, y - 1);
        let root = classes.find(x - 1);
        Ok((0..self.degree)
            .filter(|&p| classes.find(p) == root)
            .map(|p| p + 1)
            .collect())
    }

    fn block_closure(&self, x: usize, y: usize) -> UnionFind {
        let mut classes = UnionFind::new(self.degree);
        classes.union(x, y);
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            for g in &self.generators {
                let (ga, gb) = (g.raw()[a], g.raw()[b]);
                if classes.union(ga, gb) {
                    queue.push((ga, gb));
                }
            }
        }
        classes
    }

    /// Transitive with no nontrivial block; it suffices to grow blocks from
    /// the pairs `{1, y}`.
    pub fn is_primitive(&self) -> bool {
        if self.degree <= 1 {
            return true;
        }
        if !self.is_transitive() {
            return false;
        }
        (1..self.degree).all(|y| {
            let mut classes = self.block_closure(0, y);
            classes.size(0) == self.degree
        })
    }

    pub fn group_order(&self) -> Result<ExactInt, GroupError> {
        self.group_order_with_bound(DEFAULT_ORDER_DEGREE_BOUND)
    }

    pub fn group_order_with_bound(&self, bound: usize) -> Result<ExactInt, GroupError> {
        if self.degree > bound {
            return Err(GroupError::DegreeTooLarge {
                degree: self.degree,
                bound,
            });
        }
        Ok(StabilizerChain::new(self).order())
    }

    /// Every element, by breadth-first closure. Exponential; small degrees only.
    pub fn elements(&self) -> Vec<Permutation> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = s.compose_unchecked(&g);
                if seen.insert(h.clone()) {
                    order.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        order
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    fn size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// Stabilizer chain with base `1, 2, ..., n`, built by deterministic
/// Schreier-Sims.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            generators: Vec::new(),
            transversal,
        }
    }

    fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.transversal.len()).filter(|&b| self.transversal[b].is_some())
    }

    fn rebuild_orbit(&mut self) {
        let mut queue: VecDeque<usize> = self.orbit().collect();
        while let Some(b) = queue.pop_front() {
            let ub = self.transversal[b].clone().unwrap();
            for g in &self.generators {
                let c = g.raw()[b];
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(g.compose_unchecked(&ub));
                    queue.push_back(c);
                }
            }
        }
    }
}

impl StabilizerChain {
    pub fn new(group: &GeneratedGroup) -> Self {
        let n = group.degree();
        let mut chain = StabilizerChain {
            degree: n,
            levels: (0..n).map(|b| Level::new(b, n)).collect(),
        };
        for g in group.generators() {
            chain.extend(0, g.clone());
        }
        chain
    }

    /// Residue of `g` after sifting from `level`, with the level it stopped at.
    fn sift(&self, level: usize, mut g: Permutation) -> (Permutation, usize) {
        for (i, lvl) in self.levels.iter().enumerate().skip(level) {
            let b = g.raw()[lvl.base];
            match &lvl.transversal[b] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn extend(&mut self, level: usize, g: Permutation) {
        if level >= self.levels.len() {
            return;
        }
        let (residue, _) = self.sift(level, g.clone());
        if residue.is_identity() {
            return;
        }
        self.levels[level].generators.push(g);
        self.levels[level].rebuild_orbit();
        let lvl = &self.levels[level];
        let mut schreier = Vec::new();
        for b in lvl.orbit() {
            let ub = lvl.transversal[b].as_ref().unwrap();
            for s in &lvl.generators {
                let c = s.raw()[b];
                let uc = lvl.transversal[c].as_ref().unwrap();
                let h = uc.inverse().compose_unchecked(&s.compose_unchecked(ub));
                if !h.is_identity() {
                    schreier.push(h);
                }
            }
        }
        for h in schreier {
            self.extend(level + 1, h);
        }
    }

    pub fn order(&self) -> ExactInt {
        self.levels
            .iter()
            .map(|l| BigInt::from(l.orbit().count()))
            .product()
    }

    pub fn base_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit().count()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenerationClass {
    Alt,
    Sym,
    Neither,
}

/// Decides `<s, t>` through Jordan's theorem when possible: a primitive
/// group containing a 3-cycle or a transposition is `A_n` or `S_n`.
/// Returns `None` when neither witness is available among `s`, `t`, `[s, t]`.
pub fn jordan_route(
    s: &Permutation,
    t: &Permutation,
) -> Result<Option<GenerationClass>, GroupError> {
    let group = GeneratedGroup::pair(s, t)?;
    if !group.is_primitive() {
        return Ok(Some(GenerationClass::Neither));
    }
    let c = s.commutator_unchecked(t);
    let witnesses = [s, t, &c];
    let has_transposition = witnesses.iter().any(|w| w.support().len() == 2);
    let has_three_cycle = witnesses.iter().any(|w| w.is_three_cycle());
    if has_transposition {
        return Ok(Some(GenerationClass::Sym));
    }
    if has_three_cycle {
        let even = s.signature() == 1 && t.signature() == 1;
        return Ok(Some(if even {
            GenerationClass::Alt
        } else {
            GenerationClass::Sym
        }));
    }
    Ok(None)
}

/// Compares the exact order of `<s, t>` with `n!/2` and `n!`.
pub fn order_route(
    s: &Permutation,
    t: &Permutation,
    bound: usize,
) -> Result<GenerationClass, GroupError> {
    let group = GeneratedGroup::pair(s, t)?;
    let order = group.group_order_with_bound(bound)?;
    let full = factorial(s.degree() as u64);
    Ok(if order == full {
        GenerationClass::Sym
    } else if order * 2u32 == full {
        GenerationClass::Alt
    } else {
        GenerationClass::Neither
    })
}

/// Whether `<s, t>` is `A_n`, `S_n` or something else (`n >= 3`).
pub fn generates_alt_or_sym(
    s: &Permutation,
    t: &Permutation,
) -> Result<GenerationClass, GroupError> {
    match jordan_route(s, t)? {
        Some(class) => Ok(class),
        None => order_route(s, t, usize::MAX),
    }
}
