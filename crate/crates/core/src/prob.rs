use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// A probability distribution over `d` outcomes with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVector", into = "RawVector")]
pub struct ProbVector {
    entries: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RawVector(#[serde(with = "crate::rational::serde_str::vec")] Vec<Rational>);

impl TryFrom<RawVector> for ProbVector {
    type Error = Error;
    fn try_from(raw: RawVector) -> Result<Self> {
        ProbVector::new(raw.0)
    }
}

impl From<ProbVector> for RawVector {
    fn from(p: ProbVector) -> Self {
        RawVector(p.entries)
    }
}

impl ProbVector {
    /// Validates non-negativity and exact unit sum. Never rescales.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDistribution("empty vector".into()));
        }
        if let Some(neg) = entries.iter().find(|e| *e < &Rational::zero()) {
            return Err(Error::InvalidDistribution(format!("negative entry {}", format_rational(neg))));
        }
        let total: Rational = entries.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!("entries sum to {}", format_rational(&total))));
        }
        Ok(ProbVector { entries })
    }

    /// Divides non-negative weights by their total.
    pub fn normalized(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(|w| w < &Rational::zero()) {
            return Err(Error::InvalidDistribution("negative weight".into()));
        }
        let total: Rational = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::InvalidDistribution("weights sum to zero".into()));
        }
        ProbVector::new(weights.into_iter().map(|w| w / &total).collect())
    }

    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let entries = items.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<Vec<_>>>()?;
        ProbVector::new(entries)
    }

    pub fn uniform(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDistribution("empty vector".into()));
        }
        let e = Rational::new(1.into(), (d as i64).into());
        ProbVector::new(vec![e; d])
    }

    /// Point mass on `index`.
    pub fn pure(d: usize, index: usize) -> Result<Self> {
        if index >= d {
            return Err(Error::OutOfRange(format!("index {index} for dimension {d}")));
        }
        let mut v = vec![Rational::zero(); d];
        v[index] = Rational::one();
        ProbVector::new(v)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(crate::rational::to_f64).collect()
    }

    /// `out[k] = self[order[k]]`.
    pub fn permuted(&self, order: &[usize]) -> ProbVector {
        ProbVector { entries: order.iter().map(|&i| self.entries[i].clone()).collect() }
    }

    /// Inverse of [`permuted`](Self::permuted): places `values[k]` at `order[k]`.
    pub(crate) fn scatter(values: Vec<Rational>, order: &[usize]) -> Result<ProbVector> {
        let mut out = vec![Rational::zero(); values.len()];
        for (v, &i) in values.into_iter().zip(order) {
            out[i] = v;
        }
        ProbVector::new(out)
    }

    pub(crate) fn from_unchecked(entries: Vec<Rational>) -> ProbVector {
        debug_assert!(ProbVector::new(entries.clone()).is_ok());
        ProbVector { entries }
    }
}

impl fmt::Display for ProbVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(e))?;
        }
        write!(f, ")")
    }
}

/// Permutation-class representative `p↓` together with the sorting witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalClass {
    pub representative: ProbVector,
    /// `representative[k] == original[witness[k]]`.
    pub witness: Vec<usize>,
}

/// Indices of `values` sorted so the values are non-increasing; ties keep
/// ascending index order.
pub(crate) fn descending_order(values: &[Rational]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].cmp(&values[a]));
    idx
}

pub fn canonicalize(p: &ProbVector) -> CanonicalClass {
    let witness = descending_order(p.entries());
    CanonicalClass { representative: p.permuted(&witness), witness }
}

/// Prefix sums `[0, e0, e0+e1, ..., total]`, length `len + 1`.
pub(crate) fn prefix_sums<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Vec<Rational> {
    let mut acc = Rational::zero();
    let mut out = vec![acc.clone()];
    for v in values {
        acc += v;
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pv(s: &[&str]) -> ProbVector {
        ProbVector::parse(s).unwrap()
    }

    #[test]
    fn rejects_bad_sums_and_signs() {
        assert!(ProbVector::parse(&["0.5", "0.6"]).is_err());
        assert!(ProbVector::parse(&["1.5", "-0.5"]).is_err());
        assert!(ProbVector::parse::<&str>(&[]).is_err());
    }

    #[test]
    fn normalizes_only_on_request() {
        let p = ProbVector::normalized(vec![ratio(1, 1), ratio(3, 1)]).unwrap();
        assert_eq!(p, pv(&["1/4", "3/4"]));
        assert!(ProbVector::normalized(vec![ratio(0, 1)]).is_err());
    }

    #[test]
    fn canonicalize_sorts_descending() {
        let c = canonicalize(&pv(&["0.1", "0.6", "0.3"]));
        assert_eq!(c.representative, pv(&["0.6", "0.3", "0.1"]));
        assert_eq!(c.witness, vec![1, 2, 0]);
    }

    #[test]
    fn canonicalize_keeps_ties_stable() {
        let u = pv(&["1/4", "1/4", "1/4", "1/4"]);
        let c = canonicalize(&u);
        assert_eq!(c.representative, u);
        assert_eq!(c.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn canonicalize_sorted_input_unchanged() {
        let q = pv(&["0.5", "0.25", "0.2", "0.05"]);
        assert_eq!(canonicalize(&q).representative, q);
    }

    #[test]
    fn witness_recovers_representative() {
        let p = pv(&["0.2", "0.1", "0.3", "0.4"]);
        let c = canonicalize(&p);
        for (k, &i) in c.witness.iter().enumerate() {
            assert_eq!(c.representative.entries()[k], p.entries()[i]);
        }
    }

    #[test]
    fn serde_uses_rational_strings() {
        let p = pv(&["0.5", "0.25", "0.25"]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["1/2","1/4","1/4"]"#);
        let back: ProbVector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<ProbVector>(r#"["1/2","1/4"]"#).is_err());
    }
}
