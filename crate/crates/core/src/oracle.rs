//! Brute-force reference implementations used to cross-check the core.
//!
//! Nothing here reuses step-map internals: gradual subsets are read back as
//! interval pieces and re-evaluated level by level.

use num::{One, Zero};

use crate::finite_group::FiniteGroup;
use crate::fuzzy_bridge::FuzzySubset;
use crate::gradual_subset::GradualSubset;
use crate::level_core::{IntervalPiece, Level, Rational};
use crate::ElementSet;

/// Probe levels: every breakpoint, every midpoint between neighbours
/// (including the one above 0), and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    levels: Vec<Level>,
}

impl SampleSet {
    pub fn from_breakpoints<'a>(lists: impl IntoIterator<Item = &'a [Rational]>) -> Self {
        let mut points: Vec<Rational> = lists.into_iter().flatten().cloned().collect();
        points.push(Rational::zero());
        points.push(Rational::one());
        points.sort();
        points.dedup();
        let two = Rational::from_integer(2.into());
        let mids: Vec<Rational> = points.windows(2).map(|w| (&w[0] + &w[1]) / &two).collect();
        let mut levels: Vec<Rational> = points.into_iter().chain(mids).filter(|p| !p.is_zero()).collect();
        levels.sort();
        SampleSet {
            levels: levels.into_iter().map(|l| Level::new(l).expect("in (0,1]")).collect(),
        }
    }

    pub fn for_subsets(subsets: &[&GradualSubset]) -> Self {
        Self::from_breakpoints(subsets.iter().map(|s| s.map().breakpoints()))
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }
}

/// The value of the piece containing `alpha`.
pub fn naive_eval<'a, V>(pieces: &'a [(IntervalPiece, V)], alpha: &Rational) -> &'a V {
    pieces
        .iter()
        .find(|(p, _)| p.contains(alpha))
        .map(|(_, v)| v)
        .expect("pieces cover (0,1]")
}

pub fn naive_table(sigma: &GradualSubset, probe: &SampleSet) -> Vec<(Level, ElementSet)> {
    let pieces = sigma.map().pieces();
    probe
        .levels
        .iter()
        .map(|a| (a.clone(), naive_eval(&pieces, a.value()).clone()))
        .collect()
}

/// `σ^c(α)`: the union of every piece meeting `[α, 1]`.
pub fn naive_closure(sigma: &GradualSubset, probe: &SampleSet) -> Vec<(Level, ElementSet)> {
    let pieces = sigma.map().pieces();
    probe
        .levels
        .iter()
        .map(|a| {
            let mut s = ElementSet::with_capacity(sigma.universe());
            for (p, v) in &pieces {
                if p.meets_at_or_above(a.value()) {
                    s.union_with(v);
                }
            }
            (a.clone(), s)
        })
        .collect()
}

/// `σ^d(α)`: the union of every piece meeting `(α, 1]`, and `σ(1)` at 1.
pub fn naive_interior(sigma: &GradualSubset, probe: &SampleSet) -> Vec<(Level, ElementSet)> {
    let pieces = sigma.map().pieces();
    probe
        .levels
        .iter()
        .map(|a| {
            if a.is_one() {
                return (a.clone(), naive_eval(&pieces, a.value()).clone());
            }
            let mut s = ElementSet::with_capacity(sigma.universe());
            for (p, v) in &pieces {
                if p.meets_above(a.value()) {
                    s.union_with(v);
                }
            }
            (a.clone(), s)
        })
        .collect()
}

/// `(μ1 μ2)(x) = Max{μ1(y) ∧ μ2(z) | yz = x}` by a full scan of pairs.
pub fn naive_convolution(mu1: &FuzzySubset, mu2: &FuzzySubset, group: &FiniteGroup) -> FuzzySubset {
    let n = group.order();
    let mut grades = vec![crate::level_core::Grade::zero(); n];
    for y in 0..n {
        for z in 0..n {
            let x = group.mul(y, z);
            let m = mu1.grade(y).min(mu2.grade(z)).clone();
            if m > grades[x] {
                grades[x] = m;
            }
        }
    }
    FuzzySubset::new(grades)
}

/// The smallest subset containing `s` and `e` closed under products and
/// inverses, by repeating full products until nothing changes.
pub fn naive_subgroup_closure(group: &FiniteGroup, s: &ElementSet) -> ElementSet {
    let n = group.order();
    let mut current = s.clone();
    current.insert(group.identity());
    loop {
        let mut next = current.clone();
        for a in current.ones() {
            next.insert(group.inv(a));
            for b in current.ones() {
                next.insert(group.mul(a, b));
            }
        }
        if next == current {
            debug_assert_eq!(current.len(), n);
            return current;
        }
        current = next;
    }
}
