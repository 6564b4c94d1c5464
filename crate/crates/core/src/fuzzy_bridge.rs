//! Fuzzy subsets and their correspondence with gradual subsets.
//!
//! `ν(μ)(α) = μ_α = {x | μ(x) ≥ α}` is inverted by `υ(σ)(x) = Max{α | x ∈ σ(α)}`
//! on decreasing subsets with property (F). `ν̃(μ)(α) = {x | μ(x) > α}` (with
//! `{x | μ(x) = 1}` at 1) is inverted by `υ̃(σ)(x) = Inf{α | x ∉ σ(α)}` on
//! strict decreasing subsets with property (inf-F).

use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::gradual_subset::{GradualSubset, IntoElementSet};
use crate::level_core::{ratio, Grade, Level, Rational, StepMap};
use crate::ElementSet;

/// A map from `{0, .., n-1}` to [0,1].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
}

impl FuzzySubset {
    pub fn new(grades: Vec<Grade>) -> Self {
        FuzzySubset { grades }
    }

    pub fn from_ratios(grades: &[(i64, i64)]) -> Result<Self> {
        grades.iter().map(|&(n, d)| Grade::from_ratio(n, d)).collect::<Result<_>>().map(Self::new)
    }

    pub fn constant(universe: usize, grade: Grade) -> Self {
        Self::new(vec![grade; universe])
    }

    pub fn universe(&self) -> usize {
        self.grades.len()
    }

    pub fn grade(&self, x: usize) -> &Grade {
        &self.grades[x]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(Grade::is_zero)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &FuzzySubset) -> bool {
        self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    fn select(&self, keep: impl Fn(&Rational) -> bool) -> ElementSet {
        (0..self.universe())
            .filter(|&x| keep(self.grades[x].value()))
            .into_element_set(self.universe())
    }

    /// `μ_α = {x | μ(x) ≥ α}`.
    pub fn alpha_level(&self, alpha: &Level) -> ElementSet {
        self.select(|g| g >= alpha.value())
    }

    /// `{x | μ(x) > α}` for `α < 1`, and `μ_1` at `α = 1`.
    pub fn strong_alpha_level(&self, alpha: &Level) -> ElementSet {
        if alpha.is_one() {
            self.alpha_level(alpha)
        } else {
            self.select(|g| g > alpha.value())
        }
    }

    fn distinct_grades(&self) -> impl Iterator<Item = Rational> + '_ {
        self.grades.iter().map(|g| g.value().clone())
    }

    pub fn nu(&self) -> GradualSubset {
        let map = StepMap::from_fn(self.distinct_grades(), |a| self.select(|g| g >= a));
        GradualSubset::new(self.universe(), map).expect("sized to the universe")
    }

    pub fn nu_tilde(&self) -> GradualSubset {
        let map = StepMap::from_fn(self.distinct_grades(), |a| {
            if a.is_one() {
                self.select(|g| g >= a)
            } else {
                self.select(|g| g > a)
            }
        });
        GradualSubset::new(self.universe(), map).expect("sized to the universe")
    }

    /// `υ(σ)(x) = Max{α | x ∈ σ(α)}`, 0 outside the support.
    pub fn upsilon(sigma: &GradualSubset) -> Result<FuzzySubset> {
        if !sigma.is_decreasing() {
            return Err(Error::NotDecreasing);
        }
        if let Some(e) = sigma.property_f_error() {
            return Err(e);
        }
        let grades = (0..sigma.universe())
            .map(|x| Grade::new(sigma.profile(x).max().expect("property (F) holds")))
            .collect::<Result<_>>()?;
        Ok(FuzzySubset::new(grades))
    }

    /// `υ̃(σ)(x) = Inf{α | x ∉ σ(α)}`, with `Inf ∅ = 1`.
    pub fn upsilon_tilde(sigma: &GradualSubset) -> Result<FuzzySubset> {
        if !sigma.is_strict_decreasing() {
            return Err(Error::NotStrictDecreasing);
        }
        if let Some(e) = sigma.property_inf_f_error() {
            return Err(e);
        }
        let grades = (0..sigma.universe())
            .map(|x| Grade::new(sigma.profile(x).inf_outside()))
            .collect::<Result<_>>()?;
        Ok(FuzzySubset::new(grades))
    }

    pub fn fuzzy_union(family: &[FuzzySubset]) -> Result<FuzzySubset> {
        Self::fold(family, |a, b| a.max(b))
    }

    pub fn fuzzy_intersection(family: &[FuzzySubset]) -> Result<FuzzySubset> {
        Self::fold(family, |a, b| a.min(b))
    }

    fn fold(family: &[FuzzySubset], pick: impl Fn(Grade, Grade) -> Grade) -> Result<FuzzySubset> {
        let (first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
        rest.iter().try_fold(first.clone(), |acc, m| {
            if m.universe() != acc.universe() {
                return Err(Error::GroundMismatch(acc.universe(), m.universe()));
            }
            let grades = acc.grades.into_iter().zip(&m.grades).map(|(a, b)| pick(a, b.clone())).collect();
            Ok(FuzzySubset::new(grades))
        })
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.grades.iter().enumerate().map(|(x, g)| format!("{x}:{g}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Every grade is non-decreasing in `n`.
    Ascending,
    /// Every grade is non-increasing in `n`.
    Descending,
}

/// The family `μ_n(x) = L(x) + c(x) / 2^n` for `n >= 2`, which converges
/// monotonically to `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicFamily {
    limit: Vec<Rational>,
    coefficients: Vec<i64>,
    kind: FamilyKind,
}

impl SymbolicFamily {
    pub const FIRST_INDEX: u32 = 2;

    pub fn new(limit: &FuzzySubset, coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() != limit.universe() {
            return Err(Error::GroundMismatch(limit.universe(), coefficients.len()));
        }
        let kind = if coefficients.iter().all(|&c| c <= 0) {
            FamilyKind::Ascending
        } else if coefficients.iter().all(|&c| c >= 0) {
            FamilyKind::Descending
        } else {
            return Err(Error::LawViolated("family is neither ascending nor descending".into()));
        };
        let family = SymbolicFamily {
            limit: limit.grades().iter().map(|g| g.value().clone()).collect(),
            coefficients,
            kind,
        };
        family.member(Self::FIRST_INDEX)?;
        Ok(family)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn universe(&self) -> usize {
        self.limit.len()
    }

    /// `∨_n μ_n` for an ascending family, `∧_n μ_n` for a descending one.
    pub fn limit(&self) -> FuzzySubset {
        FuzzySubset::new(self.limit.iter().map(|l| Grade::new(l.clone()).expect("validated")).collect())
    }

    /// `μ_n` for `n >= 2`. Grades are checked to lie in [0,1], which is
    /// monotone in `n`, so checking `n = 2` validates the family.
    pub fn member(&self, n: u32) -> Result<FuzzySubset> {
        assert!(n >= Self::FIRST_INDEX, "members are indexed from 2");
        let step = Rational::new(1.into(), num::BigInt::from(2).pow(n));
        self.limit
            .iter()
            .zip(&self.coefficients)
            .map(|(l, &c)| Grade::new(l + Rational::from_integer(c.into()) * &step))
            .collect::<Result<_>>()
            .map(FuzzySubset::new)
    }

    /// `μ_2, .., μ_N`.
    pub fn truncation(&self, last: u32) -> Vec<FuzzySubset> {
        (Self::FIRST_INDEX..=last)
            .map(|n| self.member(n).expect("validated on construction"))
            .collect()
    }

    /// The whole union `∪_n σ(μ_n)` of an ascending family.
    pub fn union_of_levels(&self) -> Result<GradualSubset> {
        if self.kind != FamilyKind::Ascending {
            return Err(Error::LawViolated("union of levels needs an ascending family".into()));
        }
        // x ∈ σ(μ_n)(δ) for some n iff δ ≤ L(x) when constant, δ < L(x) when strictly rising
        Ok(self.exact(|l, c, d| if c == 0 { d <= l } else { d < l }))
    }

    /// The whole intersection `∩_n σ̃(μ_n)` of a descending family.
    pub fn intersection_of_strong_levels(&self) -> Result<GradualSubset> {
        if self.kind != FamilyKind::Descending {
            return Err(Error::LawViolated("intersection of strong levels needs a descending family".into()));
        }
        // δ < μ_n(x) for every n iff δ ≤ L(x) when strictly falling; at δ = 1 the
        // strong level is μ_1, and a strictly falling grade never reaches 1
        Ok(self.exact(|l, c, d| match (c == 0, d.is_one()) {
            (true, true) => l.is_one(),
            (true, false) => d < l,
            (false, true) => false,
            (false, false) => d <= l,
        }))
    }

    fn exact(&self, member: impl Fn(&Rational, i64, &Rational) -> bool) -> GradualSubset {
        let n = self.universe();
        let map = StepMap::from_fn(self.limit.iter().cloned(), |d| {
            (0..n)
                .filter(|&x| member(&self.limit[x], self.coefficients[x], d))
                .into_element_set(n)
        });
        GradualSubset::new(n, map).expect("sized to the universe")
    }
}

/// Outcome of comparing a limit of fuzzy subsets with the corresponding
/// limit of gradual subsets at one witness level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitGapReport {
    pub truncation: u32,
    pub witness: Level,
    /// Gradual subset of the limit fuzzy subset.
    pub limit_map: GradualSubset,
    /// Union (or intersection) of the gradual subsets of `μ_2 .. μ_N`.
    pub finite_map: GradualSubset,
    /// Union (or intersection) over the whole family.
    pub infinite_map: GradualSubset,
    pub limit_at_witness: ElementSet,
    pub finite_at_witness: ElementSet,
    /// The repaired side: the strict union for an ascending family, the
    /// modified intersection for a descending one.
    pub repaired_map: GradualSubset,
    pub repaired_limit: GradualSubset,
}

impl LimitGapReport {
    /// True when the limit differs from the family's union or intersection
    /// at the witness, for both the truncation and the whole family.
    pub fn gap_at_witness(&self) -> bool {
        self.limit_at_witness != self.finite_at_witness
            && self.limit_map.eval(&self.witness) != self.infinite_map.eval(&self.witness)
    }

    /// True when the repaired construction agrees with the limit.
    pub fn repaired(&self) -> bool {
        self.repaired_map == self.repaired_limit
    }
}

fn two_point_family(coefficient: i64) -> SymbolicFamily {
    let limit = FuzzySubset::from_ratios(&[(1, 1), (1, 2)]).expect("grades in range");
    SymbolicFamily::new(&limit, vec![0, coefficient]).expect("valid family")
}

/// Over `X = {a, b}`: `μ_n(a) = 1`, `μ_n(b) = 1/2 - 1/2^n`. The levels of
/// `∨_n μ_n` strictly contain the union of the levels of the `μ_n` at 1/2.
pub fn union_counterexample(truncation: u32) -> LimitGapReport {
    assert!(truncation >= 2, "need at least one member");
    let family = two_point_family(-1);
    let members = family.truncation(truncation);
    let witness = Level::from_ratio(1, 2).expect("level");
    let limit = family.limit();
    let limit_map = limit.nu();
    let finite_map = GradualSubset::union(&members.iter().map(FuzzySubset::nu).collect::<Vec<_>>()).expect("nonempty");
    let strict_members: Vec<_> = members.iter().map(FuzzySubset::nu_tilde).collect();
    LimitGapReport {
        truncation,
        limit_at_witness: limit_map.eval(&witness).clone(),
        finite_at_witness: finite_map.eval(&witness).clone(),
        infinite_map: family.union_of_levels().expect("ascending"),
        repaired_map: GradualSubset::union(&strict_members).expect("nonempty"),
        repaired_limit: FuzzySubset::fuzzy_union(&members).expect("nonempty").nu_tilde(),
        witness,
        limit_map,
        finite_map,
    }
}

/// Over `X = {a, b}`: `μ_n(a) = 1`, `μ_n(b) = 1/2 + 1/2^n`. The strong levels
/// of `∧_n μ_n` are strictly contained in the intersection of the strong
/// levels of the `μ_n` at 1/2; the modified intersection closes the gap.
pub fn intersection_counterexample(truncation: u32) -> LimitGapReport {
    assert!(truncation >= 2, "need at least one member");
    let family = two_point_family(1);
    let members = family.truncation(truncation);
    let witness = Level::from_ratio(1, 2).expect("level");
    let limit_map = family.limit().nu_tilde();
    let strict_members: Vec<_> = members.iter().map(FuzzySubset::nu_tilde).collect();
    let finite_map = GradualSubset::intersection(&strict_members).expect("nonempty");
    let infinite_map = family.intersection_of_strong_levels().expect("descending");
    LimitGapReport {
        truncation,
        limit_at_witness: limit_map.eval(&witness).clone(),
        finite_at_witness: finite_map.eval(&witness).clone(),
        repaired_map: infinite_map.interior_d(),
        repaired_limit: limit_map.clone(),
        infinite_map,
        witness,
        limit_map,
        finite_map,
    }
}

/// Grade helper for tests and examples: `n/d`.
pub fn grade(n: i64, d: i64) -> Grade {
    Grade::new(ratio(n, d)).expect("grade in [0,1]")
}
