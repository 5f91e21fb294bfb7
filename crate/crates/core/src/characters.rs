//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::partitions::enumerate_partitions;
use crate::perm::conjugacy_class_size;
use crate::{ExactInt, ExactRatio};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("shape {0:?} is not a nonincreasing list of positive integers")]
    BadShape(Vec<usize>),
    #[error("shape has size {shape}, cycle type has size {cycle_type}")]
    SizeMismatch { shape: usize, cycle_type: usize },
}

/// Partition in nonincreasing row order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, CharacterError> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharacterError::BadShape(rows));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// All diagrams with `n` boxes.
    pub fn all(n: usize) -> Vec<YoungDiagram> {
        enumerate_partitions(n)
            .map(|mut p| {
                p.reverse();
                YoungDiagram { rows: p }
            })
            .collect()
    }

    /// `n! / prod hook lengths`.
    pub fn hook_dimension(&self) -> ExactInt {
        let n = self.size();
        let mut num: BigInt = (1..=n as u64).product();
        let mut den = BigInt::from(1);
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = self.rows[i + 1..].iter().filter(|&&r| r > j).count();
                den *= arm + leg + 1;
            }
        }
        num /= den;
        num
    }
}

fn beta_set(rows: &[usize]) -> Vec<usize> {
    let r = rows.len();
    rows.iter()
        .enumerate()
        .map(|(i, &l)| l + r - 1 - i)
        .collect()
}

fn from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let r = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (r - 1 - i))
        .filter(|&l| l > 0)
        .collect()
}

/// Memoized character evaluator; cycle types are consumed largest part first.
#[derive(Debug, Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(
        &mut self,
        shape: &YoungDiagram,
        cycle_type: &[usize],
    ) -> Result<ExactInt, CharacterError> {
        let total: usize = cycle_type.iter().sum();
        if total != shape.size() {
            return Err(CharacterError::SizeMismatch {
                shape: shape.size(),
                cycle_type: total,
            });
        }
        let mut parts: Vec<usize> = cycle_type.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable();
        Ok(self.eval(shape.rows.clone(), parts))
    }

    /// `parts` ascending; the last part is stripped first.
    fn eval(&mut self, rows: Vec<usize>, mut parts: Vec<usize>) -> BigInt {
        let Some(&h) = parts.last() else {
            return BigInt::from(rows.is_empty() as i32);
        };
        let key = (rows, parts);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (rows, p) = key;
        parts = p;
        parts.pop();
        let beta = beta_set(&rows);
        let mut acc = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < h || beta.contains(&(b - h)) {
                continue;
            }
            let crossed = beta.iter().filter(|&&c| c > b - h && c < b).count();
            let mut next = beta.clone();
            next[i] = b - h;
            let term = self.eval(from_beta(next), parts.clone());
            if crossed % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        parts.push(h);
        self.memo.insert((rows, parts), acc.clone());
        acc
    }
}

pub fn character_value(
    shape: &YoungDiagram,
    cycle_type: &[usize],
) -> Result<ExactInt, CharacterError> {
    MurnaghanNakayama::new().value(shape, cycle_type)
}

/// Rows are irreducibles, columns are classes; both in lexicographic
/// order of their partitions.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: usize,
    pub shapes: Vec<YoungDiagram>,
    /// nondecreasing cycle lengths
    pub classes: Vec<Vec<usize>>,
    pub values: Vec<Vec<ExactInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let shapes = YoungDiagram::all(n);
        let classes: Vec<Vec<usize>> = enumerate_partitions(n).collect();
        let mut mn = MurnaghanNakayama::new();
        let values = shapes
            .iter()
            .map(|s| {
                classes
                    .iter()
                    .map(|c| mn.value(s, c).expect("sizes agree"))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            shapes,
            classes,
            values,
        }
    }

    pub fn class_index(&self, cycle_type: &[usize]) -> Option<usize> {
        let mut flag = cycle_type.to_vec();
        flag.sort_unstable();
        self.classes.iter().position(|c| *c == flag)
    }

    pub fn shape_index(&self, shape: &YoungDiagram) -> Option<usize> {
        self.shapes.iter().position(|s| s == shape)
    }

    pub fn dimension(&self, shape: usize) -> &ExactInt {
        let identity = self.class_index(&vec![1; self.n]).expect("identity class");
        &self.values[shape][identity]
    }

    pub fn class_sizes(&self) -> Vec<ExactInt> {
        self.classes
            .iter()
            .map(|c| conjugacy_class_size(c, self.n).expect("valid class"))
            .collect()
    }
}

/// Character table for `S_n`, computed once per `n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::new(n));
    cache.lock().unwrap().entry(n).or_insert(table).clone()
}

/// `sum_rho chi_rho(c) / dim rho` over the irreducibles of `S_n`, `c` a 3-cycle.
pub fn frobenius_threecycle_sum(n: usize) -> ExactRatio {
    assert!(n >= 3, "needs n >= 3");
    let table = character_table(n);
    let mut flag = vec![1; n - 3];
    flag.push(3);
    let col = table.class_index(&flag).expect("3-cycle class");
    (0..table.shapes.len())
        .map(|i| BigRational::new(table.values[i][col].clone(), table.dimension(i).clone()))
        .sum()
}
