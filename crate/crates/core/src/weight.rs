//! Exact weight arithmetic for irreducible representations of `Sp(1)^k`.
//!
//! Weights are stored in units of epsilon, so the positive root of each
//! `Sp(1)` factor is the integer 2 and the weights of the `n`-dimensional
//! irreducible are `n-1, n-3, ..., -(n-1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An irreducible representation of `Sp(1)^k`, encoded by the complex
/// dimensions of its tensor factors, kept in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepSpec {
    factors: Vec<u32>,
}

impl IrrepSpec {
    pub fn new(mut factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("need at least one factor".into()));
        }
        if let Some(&n) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidSpec(format!("factor dimension {n} < 2")));
        }
        factors.sort_unstable();
        Ok(Self { factors })
    }

    /// Parses the literal syntax used by the CLI and JSON: `"2,2,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let factors = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidSpec(format!("bad factor {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// Product of the complex factor dimensions.
    pub fn complex_dim(&self) -> u64 {
        self.factors.iter().map(|&n| n as u64).product()
    }
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for IrrepSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IrrepSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        IrrepSpec::parse(&s).map_err(D::Error::custom)
    }
}

/// A weight of the maximal torus in epsilon units, one coordinate per factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }
}

/// The weights of a representation with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
    parent: IrrepSpec,
}

impl WeightMultiset {
    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn parent(&self) -> &IrrepSpec {
        &self.parent
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

/// Real (`theta = 1`) or quaternionic (`theta = 2`) type together with the
/// real dimension of the representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepClass {
    pub spec: IrrepSpec,
    pub theta: u8,
    pub real_dim: u64,
}

/// Weight string of the `n`-dimensional irreducible of `Sp(1)`:
/// `[n-1, n-3, ..., -(n-1)]`.
pub fn irrep_weights(n: u32) -> Result<Vec<i64>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("irrep dimension {n} < 2")));
    }
    Ok((0..n).map(|j| n as i64 - 1 - 2 * j as i64).collect())
}

/// Weights of the tensor product, as the Cartesian product of the factor
/// weight strings.
pub fn tensor_weights(spec: &IrrepSpec) -> WeightMultiset {
    let strings: Vec<Vec<i64>> = spec
        .factors()
        .iter()
        .map(|&n| irrep_weights(n).expect("spec factors are >= 2"))
        .collect();
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    let mut stack = vec![0usize; strings.len()];
    'outer: loop {
        let w = Weight(
            stack
                .iter()
                .enumerate()
                .map(|(i, &j)| strings[i][j])
                .collect(),
        );
        *entries.entry(w).or_insert(0) += 1;
        for i in (0..stack.len()).rev() {
            stack[i] += 1;
            if stack[i] < strings[i].len() {
                continue 'outer;
            }
            stack[i] = 0;
        }
        break;
    }
    WeightMultiset {
        entries,
        parent: spec.clone(),
    }
}

/// Type and real dimension: quaternionic exactly when the number of even
/// factor dimensions is odd.
pub fn classify(spec: &IrrepSpec) -> RepClass {
    let even_count = spec.factors().iter().filter(|&&n| n % 2 == 0).count();
    let theta: u8 = if even_count % 2 == 1 { 2 } else { 1 };
    RepClass {
        spec: spec.clone(),
        theta,
        real_dim: theta as u64 * spec.complex_dim(),
    }
}

/// Real dimension of the fixed space of the central element that is `-1` in
/// the given factors and `+1` elsewhere.
///
/// The subset must consist of factors with even dimension, so that the
/// element acts nontrivially factor-wise. Returns `theta` times the number
/// of weights (with multiplicity) whose coordinate sum over the subset is
/// even.
pub fn central_involution_fixed_dim(spec: &IrrepSpec, subset: &BTreeSet<usize>) -> Result<u64> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset("empty factor subset".into()));
    }
    for &i in subset {
        let n = *spec
            .factors()
            .get(i)
            .ok_or_else(|| Error::InvalidSubset(format!("factor index {i} out of range")))?;
        if n % 2 != 0 {
            return Err(Error::InvalidSubset(format!(
                "factor {i} has odd dimension {n}; the central element acts trivially there"
            )));
        }
    }
    let class = classify(spec);
    let weights = tensor_weights(spec);
    let fixed: u64 = weights
        .entries()
        .iter()
        .filter(|(w, _)| subset.iter().map(|&i| w.0[i]).sum::<i64>() % 2 == 0)
        .map(|(_, &mult)| mult)
        .sum();
    Ok(class.theta as u64 * fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(factors: &[u32]) -> IrrepSpec {
        IrrepSpec::new(factors.to_vec()).unwrap()
    }

    #[test]
    fn weight_strings() {
        assert_eq!(irrep_weights(2).unwrap(), vec![1, -1]);
        assert_eq!(irrep_weights(3).unwrap(), vec![2, 0, -2]);
        assert_eq!(irrep_weights(5).unwrap(), vec![4, 2, 0, -2, -4]);
        assert!(irrep_weights(1).is_err());
    }

    #[test]
    fn spec_is_canonicalized() {
        let s = spec(&[3, 2, 2]);
        assert_eq!(s.factors(), &[2, 2, 3]);
        assert_eq!(s.to_string(), "2,2,3");
        assert_eq!(IrrepSpec::parse("3,2,2").unwrap(), s);
        assert!(IrrepSpec::parse("").is_err());
        assert!(IrrepSpec::parse("2,1").is_err());
    }

    #[test]
    fn tensor_weights_of_cube() {
        let ws = tensor_weights(&spec(&[2, 2, 2]));
        assert_eq!(ws.total_multiplicity(), 8);
        assert_eq!(ws.entries().len(), 8);
        for (w, &mult) in ws.entries() {
            assert_eq!(mult, 1);
            assert!(w.0.iter().all(|&c| c == 1 || c == -1));
        }
    }

    #[test]
    fn tensor_weights_2_3() {
        let ws = tensor_weights(&spec(&[2, 3]));
        assert_eq!(ws.total_multiplicity(), 6);
        assert_eq!(ws.entries().len(), 6);
        for second in [2i64, 0, -2] {
            for first in [1i64, -1] {
                assert_eq!(ws.multiplicity(&Weight(vec![first, second])), 1);
            }
        }
    }

    #[test]
    fn tensor_weights_3_3() {
        let ws = tensor_weights(&spec(&[3, 3]));
        assert_eq!(ws.total_multiplicity(), 9);
        assert_eq!(ws.multiplicity(&Weight(vec![0, 0])), 1);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&spec(&[2, 2, 2]));
        assert_eq!((c.theta, c.real_dim), (2, 16));
        let c = classify(&spec(&[2, 2, 3]));
        assert_eq!((c.theta, c.real_dim), (1, 12));
        let c = classify(&spec(&[2, 2, 2, 2]));
        assert_eq!((c.theta, c.real_dim), (1, 16));
    }

    #[test]
    fn central_involution_examples() {
        let s = spec(&[2, 2, 2]);
        let one = BTreeSet::from([0usize]);
        assert_eq!(central_involution_fixed_dim(&s, &one).unwrap(), 0);
        let two = BTreeSet::from([0usize, 1]);
        assert_eq!(central_involution_fixed_dim(&s, &two).unwrap(), 16);

        let s23 = spec(&[2, 3]);
        assert_eq!(central_involution_fixed_dim(&s23, &one).unwrap(), 0);
        // Factor 1 of (2,3) has odd dimension.
        let bad = BTreeSet::from([1usize]);
        assert!(central_involution_fixed_dim(&s23, &bad).is_err());
        assert!(central_involution_fixed_dim(&s, &BTreeSet::new()).is_err());
    }
}
