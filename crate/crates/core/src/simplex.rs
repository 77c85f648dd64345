//! Dense two-phase simplex over exact rationals, Bland's anti-cycling rule.
//!
//! Problems are in standard form: minimize `c·x` subject to `A x = b`,
//! `x >= 0`. Sizes here are tiny (tens of columns), so a full tableau is kept.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

#[derive(Debug, Clone, Default)]
pub struct StandardForm {
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    pub cost: Vec<Rational>,
}

impl StandardForm {
    pub fn new(n_vars: usize) -> Self {
        StandardForm { rows: Vec::new(), rhs: Vec::new(), cost: vec![Rational::zero(); n_vars] }
    }

    pub fn n_vars(&self) -> usize {
        self.cost.len()
    }

    pub fn push_eq(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.n_vars());
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Adds a fresh slack column and returns its index: `row·x - s = rhs`.
    pub fn push_ge(&mut self, mut row: Vec<Rational>, rhs: Rational) -> usize {
        let s = self.add_var();
        row.resize(self.n_vars(), Rational::zero());
        row[s] = -Rational::from_integer(1.into());
        self.push_eq(row, rhs);
        s
    }

    fn add_var(&mut self) -> usize {
        for r in &mut self.rows {
            r.push(Rational::zero());
        }
        self.cost.push(Rational::zero());
        self.cost.len() - 1
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::new(self).run(&self.cost)
    }

    /// Phase one only.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        let mut t = Tableau::new(self);
        if !t.phase_one() {
            return None;
        }
        Some(t.solution())
    }
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    n: usize,
}

impl Tableau {
    fn new(lp: &StandardForm) -> Self {
        let n = lp.n_vars();
        let m = lp.rows.len();
        let mut t = Vec::with_capacity(m);
        for (i, (row, b)) in lp.rows.iter().zip(&lp.rhs).enumerate() {
            let flip = b.is_negative();
            let mut r: Vec<Rational> = row.iter().map(|a| if flip { -a } else { a.clone() }).collect();
            r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r.push(if flip { -b } else { b.clone() });
            t.push(r);
        }
        Tableau { t, basis: (n..n + m).collect(), n }
    }

    fn width(&self) -> usize {
        self.t.first().map_or(self.n, |r| r.len() - 1)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.t[row].clone();
        for (i, r) in self.t.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (v, pv) in r.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes `cost` over the first `allowed` columns from the current basis.
    /// Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        let w = self.width();
        loop {
            // reduced costs r_j = c_j - c_B · column_j
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &bi) in self.basis.iter().enumerate() {
                    if !cost[bi].is_zero() && !self.t[i][j].is_zero() {
                        r -= &cost[bi] * &self.t[i][j];
                    }
                }
                r.is_negative()
            });
            let Some(col) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.t[i][w] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((row, _)) = best else { return false };
            self.pivot(row, col);
        }
    }

    fn phase_one(&mut self) -> bool {
        let w = self.width();
        let mut cost = vec![Rational::zero(); w];
        for c in cost.iter_mut().skip(self.n) {
            *c = Rational::from_integer(1.into());
        }
        // bounded below by zero, never unbounded
        self.optimize(&cost, w);
        let infeas: Rational =
            self.basis.iter().enumerate().filter(|(_, &b)| b >= self.n).map(|(i, _)| self.t[i][w].clone()).sum();
        if infeas.is_positive() {
            return false;
        }
        // drive remaining (zero-valued) artificials out; drop redundant rows
        let mut i = 0;
        while i < self.t.len() {
            if self.basis[i] >= self.n {
                match (0..self.n).find(|&j| !self.t[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.t.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        true
    }

    fn run(mut self, cost: &[Rational]) -> LpOutcome {
        if !self.phase_one() {
            return LpOutcome::Infeasible;
        }
        let mut full = cost.to_vec();
        full.resize(self.width(), Rational::zero());
        if !self.optimize(&full, self.n) {
            return LpOutcome::Unbounded;
        }
        let x = self.solution();
        let value = x.iter().zip(cost).map(|(a, c)| a * c).sum();
        LpOutcome::Optimal { x, value }
    }

    fn solution(&self) -> Vec<Rational> {
        let w = self.width();
        let mut x = vec![Rational::zero(); self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.t[i][w].clone();
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn small_optimum() {
        // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6  (slacks s1, s2)
        let mut lp = StandardForm::new(4);
        lp.cost = vec![int(-1), int(-1), int(0), int(0)];
        lp.push_eq(vec![int(1), int(2), int(1), int(0)], int(4));
        lp.push_eq(vec![int(3), int(1), int(0), int(1)], int(6));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, ratio(-14, 5));
                assert_eq!(&x[..2], &[ratio(8, 5), ratio(6, 5)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut lp = StandardForm::new(1);
        lp.push_eq(vec![int(1)], int(-1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = StandardForm::new(1);
        lp.cost = vec![int(-1)];
        lp.push_ge(vec![int(1)], int(1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn handles_redundant_rows() {
        let mut lp = StandardForm::new(2);
        lp.push_eq(vec![int(1), int(1)], int(1));
        lp.push_eq(vec![int(2), int(2)], int(2));
        let x = lp.feasible_point().unwrap();
        assert_eq!(&x[0] + &x[1], int(1));
    }

    #[test]
    fn degenerate_problem_terminates() {
        // classic cycling example (Beale) under Dantzig's rule
        let mut lp = StandardForm::new(7);
        lp.cost = vec![ratio(-3, 4), int(150), ratio(-1, 50), int(6), int(0), int(0), int(0)];
        lp.push_eq(vec![ratio(1, 4), int(-60), ratio(-1, 25), int(9), int(1), int(0), int(0)], int(0));
        lp.push_eq(vec![ratio(1, 2), int(-90), ratio(-1, 50), int(3), int(0), int(1), int(0)], int(0));
        lp.push_eq(vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)], int(1));
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(-1, 20)),
            other => panic!("{other:?}"),
        }
    }
}
