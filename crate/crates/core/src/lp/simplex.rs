use num_traits::{One, Signed, Zero};

use super::program::LpProgram;
use crate::error::{Error, Result};
use crate::graph::Weighting;
use crate::rational::{self, Rational};

/// Generous: Bland's rule cannot cycle, so hitting this is a defect.
pub const DEFAULT_PIVOT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    /// A weighting (every entry ≥ 1) that meets all rows exactly.
    Feasible(Weighting),
    Infeasible,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(_))
    }

    pub fn witness(&self) -> Option<&Weighting> {
        match self {
            Self::Feasible(w) => Some(w),
            Self::Infeasible => None,
        }
    }
}

pub fn solve_feasibility(lp: &LpProgram) -> Result<FeasibilityResult> {
    solve_feasibility_with_budget(lp, DEFAULT_PIVOT_BUDGET)
}

/// Phase one of the simplex method with an auxiliary variable, in exact
/// arithmetic with Bland's rule.
///
/// With `x = w - 1` each row `a·w ≤ 0` becomes `a·x ≤ -Σa`, `x ≥ 0`. If
/// every right-hand side is nonnegative, `w = 1` already works.
pub fn solve_feasibility_with_budget(lp: &LpProgram, budget: usize) -> Result<FeasibilityResult> {
    let n = lp.num_vars();
    let mut rows: Vec<Vec<(usize, i64)>> = lp
        .rows()
        .iter()
        .filter(|r| !r.is_empty())
        .cloned()
        .collect();
    rows.sort();
    rows.dedup();
    let rhs: Vec<i64> = rows
        .iter()
        .map(|r| -r.iter().map(|&(_, c)| c).sum::<i64>())
        .collect();
    if rhs.iter().all(|&b| b >= 0) {
        return Ok(FeasibilityResult::Feasible(Weighting::uniform(n)));
    }
    let mut d = Dictionary::new(n, &rows, &rhs);
    let outcome = d.phase_one(budget)?;
    if !outcome {
        return Ok(FeasibilityResult::Infeasible);
    }
    let x = d.values(n);
    let w = Weighting::new(x.into_iter().map(|v| v + rational::one()).collect())?;
    assert!(lp.is_satisfied_by(&w), "simplex witness violates a row");
    Ok(FeasibilityResult::Feasible(w))
}

/// Chvátal-style dictionary: `x_basis[r] = beta[r] + Σ_j a[r][j]·x_nonbasic[j]`
/// and `z = z0 + Σ_j c[j]·x_nonbasic[j]`, maximized.
///
/// Variables: `0..n` structural, `n` auxiliary, `n+1..` slacks.
struct Dictionary {
    basis: Vec<usize>,
    nonbasic: Vec<usize>,
    beta: Vec<Rational>,
    a: Vec<Vec<Rational>>,
    c: Vec<Rational>,
    z0: Rational,
}

impl Dictionary {
    fn new(n: usize, rows: &[Vec<(usize, i64)>], rhs: &[i64]) -> Self {
        let m = rows.len();
        let aux = n;
        let mut a = vec![vec![Rational::zero(); n + 1]; m];
        for (r, row) in rows.iter().enumerate() {
            for &(v, coef) in row {
                a[r][v] = rational::int(-coef);
            }
            a[r][aux] = Rational::one();
        }
        let mut c = vec![Rational::zero(); n + 1];
        c[aux] = -Rational::one();
        Self {
            basis: (n + 1..n + 1 + m).collect(),
            nonbasic: (0..=n).collect(),
            beta: rhs.iter().map(|&b| rational::int(b)).collect(),
            a,
            c,
            z0: Rational::zero(),
        }
    }

    /// Maximizes `-aux`; true iff the optimum is zero.
    fn phase_one(&mut self, budget: usize) -> Result<bool> {
        let aux_col = self.nonbasic.len() - 1;
        // Entering the auxiliary on the most violated row makes the
        // dictionary feasible.
        let worst = (0..self.beta.len())
            .min_by(|&i, &j| {
                self.beta[i]
                    .cmp(&self.beta[j])
                    .then(self.basis[i].cmp(&self.basis[j]))
            })
            .expect("at least one row is violated");
        self.pivot(worst, aux_col);
        let mut pivots = 1;
        loop {
            // Bland: smallest-index improving variable enters.
            let entering = (0..self.nonbasic.len())
                .filter(|&j| self.c[j].is_positive())
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(e) = entering else { break };
            let leaving = (0..self.beta.len())
                .filter(|&r| self.a[r][e].is_negative())
                .map(|r| (-&self.beta[r] / &self.a[r][e], self.basis[r], r))
                .min_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)))
                .map(|(_, _, r)| r);
            let Some(r) = leaving else {
                unreachable!("phase one objective is bounded by zero");
            };
            if pivots >= budget {
                return Err(Error::PivotBudget { budget });
            }
            self.pivot(r, e);
            pivots += 1;
        }
        Ok(self.z0.is_zero())
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let ce = self.a[r][e].clone();
        let inv = -ce.recip();
        // Solve row r for the entering variable.
        let leaving = self.basis[r];
        let mut row: Vec<Rational> = self.a[r].iter().map(|x| x * &inv).collect();
        row[e] = -inv.clone();
        let beta = &self.beta[r] * &inv;
        for i in 0..self.a.len() {
            if i == r || self.a[i][e].is_zero() {
                continue;
            }
            let f = self.a[i][e].clone();
            self.beta[i] += &f * &beta;
            for (j, x) in row.iter().enumerate() {
                if j == e {
                    self.a[i][j] = &f * x;
                } else if !x.is_zero() {
                    self.a[i][j] += &f * x;
                }
            }
        }
        if !self.c[e].is_zero() {
            let f = self.c[e].clone();
            self.z0 += &f * &beta;
            for (j, x) in row.iter().enumerate() {
                if j == e {
                    self.c[j] = &f * x;
                } else if !x.is_zero() {
                    self.c[j] += &f * x;
                }
            }
        }
        self.a[r] = row;
        self.beta[r] = beta;
        self.basis[r] = self.nonbasic[e];
        self.nonbasic[e] = leaving;
    }

    /// Values of variables `0..n` at the current basic solution.
    fn values(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.beta[r].clone();
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(n: usize, rows: &[&[(usize, i64)]]) -> LpProgram {
        let mut p = LpProgram::new(n);
        for r in rows {
            p.add_row(r.iter().copied());
        }
        p
    }

    #[test]
    fn no_rows_gives_unit_weights() {
        let r = solve_feasibility(&LpProgram::new(3)).unwrap();
        assert_eq!(r.witness().unwrap(), &Weighting::uniform(3));
    }

    #[test]
    fn equality_pair() {
        let p = lp(2, &[&[(0, 1), (1, -1)], &[(1, 1), (0, -1)]]);
        let r = solve_feasibility(&p).unwrap();
        let w = r.witness().unwrap();
        assert_eq!(w.get(0), w.get(1));
    }

    #[test]
    fn forced_zero_is_infeasible() {
        // w0 + w1 <= w2 and w2 <= w0 force w1 <= 0.
        let p = lp(3, &[&[(0, 1), (1, 1), (2, -1)], &[(2, 1), (0, -1)]]);
        assert_eq!(
            solve_feasibility(&p).unwrap(),
            FeasibilityResult::Infeasible
        );
    }

    #[test]
    fn needs_real_pivots() {
        // w0 + w1 <= w2, w2 + w3 <= w0 + w1 + w3 ... and w0 >= ... mix.
        let p = lp(
            4,
            &[
                &[(0, 1), (1, 1), (2, -1)],
                &[(2, 1), (3, -2)],
                &[(3, 1), (0, -1), (1, -1)],
            ],
        );
        let r = solve_feasibility(&p).unwrap();
        let w = r.witness().unwrap();
        assert!(p.is_satisfied_by(w));
        assert!(!p.is_satisfied_by(&Weighting::uniform(4)));
    }

    #[test]
    fn budget() {
        let p = lp(3, &[&[(0, 1), (1, 1), (2, -1)]]);
        assert!(matches!(
            solve_feasibility_with_budget(&p, 1),
            Err(Error::PivotBudget { budget: 1 })
        ));
    }
}
