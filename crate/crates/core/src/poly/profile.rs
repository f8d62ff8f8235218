use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Root multiplicities of a nonzero binary form over the algebraic closure:
/// `counts[m]` is the number of distinct roots of multiplicity exactly `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultiplicityProfile {
    counts: BTreeMap<u32, u32>,
    degree: u32,
}

impl MultiplicityProfile {
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(m, c) in pairs {
            assert!(m >= 1, "multiplicities start at 1");
            if c > 0 {
                *counts.entry(m).or_insert(0) += c;
            }
        }
        let degree = counts.iter().map(|(m, c)| m * c).sum();
        MultiplicityProfile { counts, degree }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    /// Sum of multiplicities, the degree of the form.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn count(&self, mult: u32) -> u32 {
        self.counts.get(&mult).copied().unwrap_or(0)
    }

    pub fn distinct_roots(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Number of distinct roots with multiplicity at least `k`.
    pub fn roots_with_mult_at_least(&self, k: u32) -> u32 {
        self.counts.range(k..).map(|(_, c)| c).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.counts.iter().map(|(m, c)| format!("{m}: {c}")).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_bookkeeping() {
        let p = MultiplicityProfile::from_pairs(&[(1, 2), (2, 1)]);
        assert_eq!(p.degree(), 4);
        assert_eq!(p.distinct_roots(), 3);
        assert_eq!(p.roots_with_mult_at_least(2), 1);
        assert_eq!(p.to_string(), "{1: 2, 2: 1}");
        assert!(MultiplicityProfile::empty().is_empty());
    }
}
