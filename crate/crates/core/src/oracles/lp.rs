//! Dictionary-form primal simplex over an exact ordered field.
//!
//! Solves packing programs `max c.x  s.t.  A x <= b, x >= 0` with `b >= 0`,
//! so the all-slack basis is feasible and no phase one is needed. Pivoting
//! follows Bland's rule (smallest eligible variable index for both the
//! entering and the leaving variable), which rules out cycling. The optimal
//! dictionary also yields the dual solution `y` of
//! `min b.y  s.t.  A^T y >= c, y >= 0`.

use std::fmt;

use num_traits::{Num, Signed};
use thiserror::Error;

/// Scalar types the simplex can run on. Intended for exact types such as
/// `BigRational` or `Ratio<i64>`: pivot decisions compare against zero with
/// no tolerance.
pub trait ExactField: Clone + PartialOrd + Num + Signed + fmt::Debug + fmt::Display {}

impl<T> ExactField for T where T: Clone + PartialOrd + Num + Signed + fmt::Debug + fmt::Display {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint matrix has {rows} rows but {rhs} right-hand sides")]
    DimensionMismatch { rows: usize, rhs: usize },
    #[error("row {row} has {len} coefficients, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("right-hand side of row {0} is negative; packing form requires b >= 0")]
    NegativeRhs(usize),
    #[error("objective is unbounded along variable {0}")]
    Unbounded(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub objective: T,
    /// Optimal `x`, one entry per column.
    pub primal: Vec<T>,
    /// Optimal dual `y`, one entry per row.
    pub dual: Vec<T>,
    pub pivots: usize,
}

/// Variables are numbered `0..n` for the structural columns and `n..n+m` for
/// the slacks of rows `0..m`.
struct Dictionary<T> {
    n: usize,
    /// `basic[r]`: variable that is basic in row r.
    basic: Vec<usize>,
    /// `nonbasic[k]`: variable that occupies nonbasic column k.
    nonbasic: Vec<usize>,
    /// Row r reads `x_{basic[r]} = rhs[r] - sum_k coef[r][k] * x_{nonbasic[k]}`.
    coef: Vec<Vec<T>>,
    rhs: Vec<T>,
    /// Objective reads `z = value + sum_k cost[k] * x_{nonbasic[k]}`.
    cost: Vec<T>,
    value: T,
}

impl<T: ExactField> Dictionary<T> {
    fn entering(&self) -> Option<usize> {
        (0..self.nonbasic.len())
            .filter(|&k| self.cost[k].is_positive())
            .min_by_key(|&k| self.nonbasic[k])
    }

    fn leaving(&self, k: usize) -> Option<usize> {
        let mut best: Option<(usize, T)> = None;
        for r in 0..self.basic.len() {
            if !self.coef[r][k].is_positive() {
                continue;
            }
            let ratio = self.rhs[r].clone() / self.coef[r][k].clone();
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    if ratio < bratio || (ratio == bratio && self.basic[r] < self.basic[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, r: usize, k: usize) {
        let width = self.nonbasic.len();
        let piv = self.coef[r][k].clone();
        // Solve row r for the entering variable.
        let mut row: Vec<T> = self.coef[r].iter().map(|a| a.clone() / piv.clone()).collect();
        row[k] = T::one() / piv.clone();
        let rhs = self.rhs[r].clone() / piv;
        for s in 0..self.basic.len() {
            if s == r {
                continue;
            }
            let factor = self.coef[s][k].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..width {
                if j == k {
                    self.coef[s][j] = -(factor.clone() * row[k].clone());
                } else if !row[j].is_zero() {
                    let delta = factor.clone() * row[j].clone();
                    self.coef[s][j] = self.coef[s][j].clone() - delta;
                }
            }
            self.rhs[s] = self.rhs[s].clone() - factor * rhs.clone();
        }
        let factor = self.cost[k].clone();
        if !factor.is_zero() {
            for j in 0..width {
                if j == k {
                    self.cost[j] = -(factor.clone() * row[k].clone());
                } else if !row[j].is_zero() {
                    let delta = factor.clone() * row[j].clone();
                    self.cost[j] = self.cost[j].clone() - delta;
                }
            }
            self.value = self.value.clone() + factor * rhs.clone();
        }
        self.coef[r] = row;
        self.rhs[r] = rhs;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[k]);
    }
}

/// Maximizes `c.x` subject to `A x <= b`, `x >= 0`, for `b >= 0`.
pub fn maximize_packing<T: ExactField>(c: &[T], a: &[Vec<T>], b: &[T]) -> Result<LpSolution<T>, LpError> {
    let n = c.len();
    let m = a.len();
    if b.len() != m {
        return Err(LpError::DimensionMismatch { rows: m, rhs: b.len() });
    }
    for (row, coeffs) in a.iter().enumerate() {
        if coeffs.len() != n {
            return Err(LpError::RaggedRow {
                row,
                len: coeffs.len(),
                expected: n,
            });
        }
    }
    if let Some(row) = b.iter().position(|x| x.is_negative()) {
        return Err(LpError::NegativeRhs(row));
    }
    let mut dict = Dictionary {
        n,
        basic: (n..n + m).collect(),
        nonbasic: (0..n).collect(),
        coef: a.to_vec(),
        rhs: b.to_vec(),
        cost: c.to_vec(),
        value: T::zero(),
    };
    let mut pivots = 0;
    while let Some(k) = dict.entering() {
        let r = dict.leaving(k).ok_or(LpError::Unbounded(dict.nonbasic[k]))?;
        dict.pivot(r, k);
        pivots += 1;
    }
    let mut primal = vec![T::zero(); n];
    for (r, &v) in dict.basic.iter().enumerate() {
        if v < dict.n {
            primal[v] = dict.rhs[r].clone();
        }
    }
    let mut dual = vec![T::zero(); m];
    for (k, &v) in dict.nonbasic.iter().enumerate() {
        if v >= dict.n {
            dual[v - dict.n] = -dict.cost[k].clone();
        }
    }
    Ok(LpSolution {
        objective: dict.value,
        primal,
        dual,
        pivots,
    })
}
