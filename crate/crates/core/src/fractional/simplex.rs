//! Exact revised simplex for packing LPs
//!
//! ```text
//! maximize  sum_j x_j
//! subject to sum_{j : v in S_j} x_j <= 1   for every vertex v
//!            x >= 0
//! ```
//!
//! Columns are vertex sets. The basis inverse is kept explicitly in exact
//! rationals; entering and leaving variables follow Bland's rule, with the
//! structural columns indexed before the slacks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};
use crate::limits::Budget;

pub(crate) struct Simplex {
    n: usize,
    pub columns: Vec<Vec<usize>>,
    /// Basic variable of each row.
    basis: Vec<Var>,
    binv: Vec<Vec<Rational>>,
    xb: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Var {
    Column(usize),
    Slack(usize),
}

impl Var {
    /// Bland order: structural columns first, then slacks.
    fn key(self) -> (u8, usize) {
        match self {
            Var::Column(j) => (0, j),
            Var::Slack(v) => (1, v),
        }
    }
}

/// Duals scaled to integers: `y_v = num[v] / den`.
pub(crate) struct ScaledDuals {
    pub y: Vec<Rational>,
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

impl ScaledDuals {
    /// Whether column `s` has positive reduced cost `1 - sum_{v in s} y_v`.
    pub fn improving(&self, s: &[usize]) -> bool {
        let sum: BigInt = s.iter().map(|&v| &self.num[v]).sum();
        sum < self.den
    }
}

impl Simplex {
    pub fn new(n: usize, columns: Vec<Vec<usize>>) -> Self {
        let binv = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Simplex {
            n,
            columns,
            basis: (0..n).map(Var::Slack).collect(),
            binv,
            xb: vec![Rational::one(); n],
        }
    }

    pub fn duals(&self) -> ScaledDuals {
        let mut y = vec![Rational::zero(); self.n];
        for (r, var) in self.basis.iter().enumerate() {
            if let Var::Column(_) = var {
                for (i, yi) in y.iter_mut().enumerate() {
                    if !self.binv[r][i].is_zero() {
                        *yi += &self.binv[r][i];
                    }
                }
            }
        }
        let den = y.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = y.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        ScaledDuals { y, num, den }
    }

    pub fn objective(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.xb)
            .filter(|(v, _)| matches!(v, Var::Column(_)))
            .map(|(_, x)| x.clone())
            .sum()
    }

    /// Entering variable by Bland's rule among the known columns and slacks.
    /// Basic variables have reduced cost exactly zero and are never chosen.
    pub fn entering(&self, duals: &ScaledDuals) -> Option<Var> {
        if let Some(j) = self.columns.iter().position(|s| duals.improving(s)) {
            return Some(Var::Column(j));
        }
        (0..self.n).find(|&v| duals.num[v].is_negative()).map(Var::Slack)
    }

    fn direction(&self, var: Var) -> Vec<Rational> {
        match var {
            Var::Column(j) => {
                let s = &self.columns[j];
                (0..self.n)
                    .map(|r| s.iter().map(|&v| &self.binv[r][v]).sum())
                    .collect()
            }
            Var::Slack(v) => (0..self.n).map(|r| self.binv[r][v].clone()).collect(),
        }
    }

    pub fn pivot(&mut self, enter: Var, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        let d = self.direction(enter);
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..self.n {
            if !d[r].is_positive() {
                continue;
            }
            let ratio = &self.xb[r] / &d[r];
            let better = match &leave {
                None => true,
                Some((p, best)) => {
                    ratio < *best || (ratio == *best && self.basis[r].key() < self.basis[*p].key())
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (p, _) = leave.ok_or_else(|| Error::invariant("packing LP reported unbounded"))?;
        let dp = d[p].clone();
        for x in self.binv[p].iter_mut() {
            *x /= &dp;
        }
        self.xb[p] /= &dp;
        let prow = self.binv[p].clone();
        let px = self.xb[p].clone();
        for r in 0..self.n {
            if r == p || d[r].is_zero() {
                continue;
            }
            for (x, pv) in self.binv[r].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *x -= &d[r] * pv;
                }
            }
            self.xb[r] -= &d[r] * &px;
        }
        self.basis[p] = enter;
        Ok(())
    }

    /// Runs to optimality over the current column set.
    pub fn optimize(&mut self, budget: &mut Budget) -> Result<ScaledDuals> {
        loop {
            let duals = self.duals();
            match self.entering(&duals) {
                Some(var) => self.pivot(var, budget)?,
                None => return Ok(duals),
            }
        }
    }

    /// Basic structural columns with positive value, by column index.
    pub fn primal(&self) -> Vec<(usize, Rational)> {
        let mut out: Vec<(usize, Rational)> = self
            .basis
            .iter()
            .zip(&self.xb)
            .filter_map(|(var, x)| match var {
                Var::Column(j) if x.is_positive() => Some((*j, x.clone())),
                _ => None,
            })
            .collect();
        out.sort_by_key(|(j, _)| *j);
        out
    }
}
