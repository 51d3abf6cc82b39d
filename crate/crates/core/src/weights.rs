//! Exact vertex weights.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Rational = Ratio<i128>;

/// Serialises a rational as `{num, den}`.
pub fn rational_json(r: &Rational) -> serde_json::Value {
    serde_json::json!({ "num": *r.numer() as i64, "den": *r.denom() as i64 })
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", &(*r.numer() as i64))?;
    st.serialize_field("den", &(*r.denom() as i64))?;
    st.end()
}

/// Non-negative rational weights stored over one common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    numerators: Vec<i128>,
    denominator: i128,
}

impl WeightFunction {
    pub fn from_ratios(weights: &[Rational]) -> Result<Self> {
        let mut den: i128 = 1;
        for w in weights {
            if *w < Rational::zero() {
                return Err(Error::Input(format!("negative weight {w}")));
            }
            den = checked_lcm(den, *w.denom())?;
        }
        let numerators = weights
            .iter()
            .map(|w| w.numer().checked_mul(den / w.denom()).ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        WeightFunction { numerators, denominator: den }.reduced().bounded()
    }

    /// Integer weights scaled so they sum to one.
    pub fn normalized_integers(weights: &[u64]) -> Result<Self> {
        let total: i128 = weights.iter().map(|&w| w as i128).sum();
        if total == 0 {
            return Err(Error::Input("weights sum to zero".into()));
        }
        WeightFunction { numerators: weights.iter().map(|&w| w as i128).collect(), denominator: total }.reduced().bounded()
    }

    /// Scales to total one.
    pub fn normalized(&self) -> Result<Self> {
        let total = self.numerators.iter().try_fold(0i128, |a, &x| a.checked_add(x)).ok_or_else(overflow)?;
        if total == 0 {
            return Err(Error::Input("weights sum to zero".into()));
        }
        WeightFunction { numerators: self.numerators.clone(), denominator: total }.reduced().bounded()
    }

    /// Keeps every stored integer within 64 bits so that exact comparisons
    /// against small rationals cannot overflow.
    fn bounded(self) -> Result<Self> {
        let limit = i64::MAX as i128;
        if self.denominator > limit || self.numerators.iter().any(|&x| x > limit) {
            return Err(overflow());
        }
        Ok(self)
    }

    /// Uniform over `set`, zero elsewhere. `set` must be non-empty.
    pub fn uniform_on(n: usize, set: &VertexSet) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::Input("uniform weight on an empty set".into()));
        }
        let mut w = vec![0u64; n];
        for v in set {
            w[v] = 1;
        }
        Self::normalized_integers(&w)
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::uniform_on(n, &VertexSet::range(n))
    }

    /// All mass on `v`.
    pub fn point(n: usize, v: usize) -> Result<Self> {
        Self::uniform_on(n, &VertexSet::singleton(v))
    }

    fn reduced(mut self) -> Self {
        let g = self.numerators.iter().fold(self.denominator, |g, &x| g.gcd(&x));
        if g > 1 {
            for x in &mut self.numerators {
                *x /= g;
            }
            self.denominator /= g;
        }
        self
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn weight(&self, v: usize) -> Rational {
        Rational::new(self.numerators[v], self.denominator)
    }

    pub fn total(&self) -> Rational {
        Rational::new(self.numerators.iter().sum(), self.denominator)
    }

    pub fn is_normal(&self) -> bool {
        self.numerators.iter().sum::<i128>() == self.denominator
    }

    pub fn check_normal_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::Input(format!("{} weights for {} vertices", self.len(), g.n())));
        }
        if !self.is_normal() {
            return Err(Error::Input(format!("weights sum to {}, not 1", self.total())));
        }
        Ok(())
    }

    /// Weight of a set, as a raw numerator over [`Self::denominator`].
    pub fn raw_sum<I: IntoIterator<Item = usize>>(&self, set: I) -> i128 {
        set.into_iter().map(|v| self.numerators[v]).sum()
    }

    pub fn raw_sum_mask(&self, mut mask: u64) -> i128 {
        let mut s = 0;
        while mask != 0 {
            s += self.numerators[mask.trailing_zeros() as usize];
            mask &= mask - 1;
        }
        s
    }

    pub fn denominator(&self) -> i128 {
        self.denominator
    }

    pub fn numerators(&self) -> &[i128] {
        &self.numerators
    }

    pub fn sum(&self, set: &VertexSet) -> Rational {
        Rational::new(self.raw_sum(set.iter()), self.denominator)
    }

    /// `raw / denominator <= c`, exactly.
    pub fn raw_at_most(&self, raw: i128, c: &Rational) -> bool {
        raw * c.denom() <= c.numer() * self.denominator
    }

    /// Restriction to a subset, renormalised (`w'(v) = w(v) / w(keep)`).
    pub fn renormalized_on(&self, keep: &VertexSet) -> Result<Self> {
        let total = self.raw_sum(keep.iter());
        if total == 0 {
            return Err(Error::Input("restriction has zero weight".into()));
        }
        let numerators = (0..self.len()).map(|v| if keep.contains(v) { self.numerators[v] } else { 0 }).collect();
        Ok(WeightFunction { numerators, denominator: total }.reduced())
    }
}

impl Serialize for WeightFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WeightFunction", 2)?;
        st.serialize_field("numerators", &self.numerators.iter().map(|&x| x as i64).collect::<Vec<_>>())?;
        st.serialize_field("denominator", &(self.denominator as i64))?;
        st.end()
    }
}

fn overflow() -> Error {
    Error::Input("weights need more than 64-bit numerators or denominators".into())
}

fn checked_lcm(a: i128, b: i128) -> Result<i128> {
    let g = a.gcd(&b);
    (a / g).checked_mul(b).ok_or_else(overflow)
}

/// Parses `p/q`, `p` or a decimal-free rational literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Input(format!("bad rational '{s}'"));
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Rational::new(p as i128, q as i128)
        }
        None => Rational::from_integer(s.trim().parse::<i64>().map_err(|_| bad())? as i128),
    };
    Ok(r)
}

pub fn half() -> Rational {
    Rational::new(1, 2)
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation() {
        let w = WeightFunction::normalized_integers(&[1, 1, 2]).unwrap();
        assert!(w.is_normal());
        assert_eq!(w.weight(2), Rational::new(1, 2));
        let r = WeightFunction::from_ratios(&[Rational::new(1, 3), Rational::new(1, 6), Rational::new(1, 2)]).unwrap();
        assert!(r.is_normal());
        assert_eq!(r.denominator(), 6);
        let not = WeightFunction::from_ratios(&[Rational::new(1, 3)]).unwrap();
        assert!(!not.is_normal());
        assert!(WeightFunction::from_ratios(&[Rational::new(-1, 3)]).is_err());
    }

    #[test]
    fn comparisons_are_exact() {
        let w = WeightFunction::uniform(3).unwrap();
        let two_thirds = w.raw_sum([0, 1]);
        assert!(w.raw_at_most(two_thirds, &Rational::new(2, 3)));
        assert!(!w.raw_at_most(two_thirds, &Rational::new(666_666, 1_000_000)));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational("2").unwrap(), Rational::from_integer(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
