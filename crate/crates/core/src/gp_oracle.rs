//! Brute-force ground truth: does a Gibbs-preserving stochastic matrix map
//! `p` to `q`? Decided exactly by linear feasibility.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::prob::ProbVector;
use crate::rational::{format_rational, Rational};
use crate::simplex::StandardForm;

pub const MAX_ORACLE_DIM: usize = 8;

/// Column-stochastic matrix acting on column vectors from the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StochasticMatrix {
    d: usize,
    /// Row-major entries.
    entries: Vec<Rational>,
}

impl StochasticMatrix {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.d + col]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.d).map(|i| (0..self.d).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }

    /// Non-negative with unit column sums.
    pub fn is_stochastic(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
            && (0..self.d).all(|j| (0..self.d).map(|i| self.get(i, j)).sum::<Rational>().is_one())
    }

    /// Row-major rational strings, e.g. `[["3/4","1/4"],["1/4","3/4"]]`.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        self.entries.chunks(self.d).map(|r| r.iter().map(format_rational).collect()).collect()
    }
}

impl Serialize for StochasticMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for StochasticMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in &rows {
            if r.len() != n {
                return Err(D::Error::custom("matrix must be square"));
            }
            for s in r {
                entries.push(crate::rational::parse_rational(s).map_err(D::Error::custom)?);
            }
        }
        Ok(StochasticMatrix { d: n, entries })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Feasibility {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StochasticMatrix>,
}

/// Looks for `Λ >= 0` with unit column sums, `Λ p = q` and `Λ γ = γ`.
pub fn gp_matrix_exists(p: &ProbVector, q: &ProbVector, gamma: &ProbVector) -> Result<Feasibility> {
    check_dims(p.dim(), q.dim())?;
    check_dims(p.dim(), gamma.dim())?;
    let d = p.dim();
    if d > MAX_ORACLE_DIM {
        return Err(Error::DimensionTooLarge { d, max: MAX_ORACLE_DIM, what: "the LP oracle" });
    }
    if gamma.entries().iter().any(|g| g.is_zero()) {
        return Err(Error::InvalidContext("gamma must be strictly positive".into()));
    }
    let var = |i: usize, j: usize| i * d + j;
    let mut lp = StandardForm::new(d * d);
    for j in 0..d {
        let mut row = vec![Rational::zero(); d * d];
        for i in 0..d {
            row[var(i, j)] = Rational::one();
        }
        lp.push_eq(row, Rational::one());
    }
    for (target, source) in [(q, p), (gamma, gamma)] {
        for i in 0..d {
            let mut row = vec![Rational::zero(); d * d];
            for j in 0..d {
                row[var(i, j)] = source.entries()[j].clone();
            }
            lp.push_eq(row, target.entries()[i].clone());
        }
    }
    Ok(match lp.feasible_point() {
        Some(x) => Feasibility { feasible: true, witness: Some(StochasticMatrix { d, entries: x }) },
        None => Feasibility { feasible: false, witness: None },
    })
}

/// Bistochastic case: the equilibrium is uniform.
pub fn unital_matrix_exists(p: &ProbVector, q: &ProbVector) -> Result<Feasibility> {
    gp_matrix_exists(p, q, &ProbVector::uniform(p.dim())?)
}
