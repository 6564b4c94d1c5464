//! Total and partial gradual elements: maps from levels in (0,1] to a ground
//! set, defined everywhere or on an inf-compact domain containing 1.
//!
//! There is also a coarser relation on partial elements, "agree on some
//! inf-compact subset": every pair agrees on `{1}` as soon as their values at
//! 1 coincide, so it says nothing beyond `ε1(1) = ε2(1)` and is not provided.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finite_group::FiniteGroup;
use crate::level_core::{Grade, IntervalPiece, Level, LevelSet, Rational, StepMap};

/// Named elements of a finite ground set; element ids are positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::MalformedTable("duplicate element labels".into()));
        }
        Ok(GroundSet { labels })
    }

    pub fn from_strs(labels: &[&str]) -> Result<Self> {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::MalformedTable(format!("unknown element {label}")))
    }
}

/// A map `(0,1] -> V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalGradualElement<V> {
    map: StepMap<V>,
}

/// A map `L -> V` on a level set `L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialGradualElement<V> {
    domain: LevelSet,
    values: StepMap<Option<V>>,
}

impl<V: Clone + PartialEq> TotalGradualElement<V> {
    pub fn new(map: StepMap<V>) -> Self {
        TotalGradualElement { map }
    }

    pub fn constant(value: V) -> Self {
        Self::new(StepMap::constant(value))
    }

    pub fn from_pieces(pieces: Vec<(IntervalPiece, V)>) -> Result<Self> {
        Ok(Self::new(StepMap::from_pieces(pieces)?))
    }

    pub fn map(&self) -> &StepMap<V> {
        &self.map
    }

    pub fn into_map(self) -> StepMap<V> {
        self.map
    }

    pub fn eval(&self, alpha: &Level) -> &V {
        self.map.eval(alpha)
    }

    /// The same map, seen as a partial element with domain (0,1].
    pub fn to_partial(&self) -> PartialGradualElement<V> {
        PartialGradualElement {
            domain: LevelSet::full(),
            values: self.map.map(|v| Some(v.clone())),
        }
    }

    /// Agreement on `[alpha, 1]`; `alpha = 0` means all of (0,1].
    pub fn r_alpha_equal(&self, other: &Self, alpha: &Grade) -> bool {
        !self
            .map
            .zip(&other.map, |a, b| a != b)
            .any_at_or_above(alpha.value(), |differs| *differs)
    }

    pub fn pointwise_op<F: FnMut(&V, &V) -> V>(&self, other: &Self, op: F) -> Self {
        Self::new(self.map.zip(&other.map, op))
    }

    /// The restriction to `[alpha, 1]`. Two elements are related by `R_alpha`
    /// exactly when their restrictions are equal.
    pub fn restrict_to(&self, alpha: &Level) -> PartialGradualElement<V> {
        let a = alpha.value().clone();
        let values = StepMap::from_fn(
            self.map.breakpoints().iter().cloned().chain([a.clone()]),
            |x| (*x >= a).then(|| self.map.eval_at(x).clone()),
        );
        PartialGradualElement::from_values(values).expect("[alpha,1] is a level set")
    }
}

impl TotalGradualElement<usize> {
    /// True when the element takes the value `e` on all of `[alpha, 1]`.
    pub fn in_filtration_subgroup(&self, alpha: &Grade, g: &FiniteGroup) -> bool {
        !self.map.any_at_or_above(alpha.value(), |&x| x != g.identity())
    }

    pub fn group_mul(&self, other: &Self, g: &FiniteGroup) -> Self {
        self.pointwise_op(other, |&a, &b| g.mul(a, b))
    }

    pub fn group_inverse(&self, g: &FiniteGroup) -> Self {
        Self::new(self.map.map(|&a| g.inv(a)))
    }

    pub fn group_identity(g: &FiniteGroup) -> Self {
        Self::constant(g.identity())
    }
}

impl<V: Clone + PartialEq> PartialGradualElement<V> {
    /// Builds an element from pieces; the domain is their union.
    pub fn new(pieces: Vec<(IntervalPiece, V)>) -> Result<Self> {
        let domain = LevelSet::new(pieces.iter().map(|(p, _)| p.clone()).collect())?;
        let breaks = pieces.iter().flat_map(|(p, _)| [p.lo.clone(), p.hi.clone()]);
        let values = StepMap::from_fn(breaks, |x| {
            pieces.iter().find(|(p, _)| p.contains(x)).map(|(_, v)| v.clone())
        });
        Ok(PartialGradualElement { domain, values })
    }

    /// Wraps a map whose `None` values mark levels outside the domain.
    pub fn from_values(values: StepMap<Option<V>>) -> Result<Self> {
        let domain = LevelSet::from_indicator(values.map(Option::is_some))?;
        Ok(PartialGradualElement { domain, values })
    }

    pub fn domain(&self) -> &LevelSet {
        &self.domain
    }

    pub fn values(&self) -> &StepMap<Option<V>> {
        &self.values
    }

    pub fn eval(&self, alpha: &Level) -> Option<&V> {
        self.values.eval(alpha).as_ref()
    }

    /// Pieces of the domain with their values.
    pub fn pieces(&self) -> Vec<(IntervalPiece, V)> {
        self.values
            .pieces()
            .into_iter()
            .filter_map(|(p, v)| v.map(|v| (p, v)))
            .collect()
    }

    /// `ε̄(α) = ε(Min([α,1] ∩ dom ε))`.
    pub fn extend(&self) -> TotalGradualElement<V> {
        let map = StepMap::from_fn(self.values.breakpoints().iter().cloned(), |x| {
            let zeta = self.domain.min_at_or_above(&level(x));
            self.values.eval(&zeta).clone().expect("minimum lies in the domain")
        });
        TotalGradualElement::new(map)
    }

    /// Agreement on `[alpha, 1] ∩ dom ε1 ∩ dom ε2`; `alpha = 0` means the
    /// whole common domain.
    pub fn r_alpha_equal(&self, other: &Self, alpha: &Grade) -> bool {
        !self
            .values
            .zip(&other.values, |a, b| matches!((a, b), (Some(a), Some(b)) if a != b))
            .any_at_or_above(alpha.value(), |differs| *differs)
    }

    /// Pointwise operation on `dom ε1 ∩ dom ε2`.
    pub fn pointwise_op<F: FnMut(&V, &V) -> V>(&self, other: &Self, mut op: F) -> Self {
        let values = self.values.zip(&other.values, |a, b| match (a, b) {
            (Some(a), Some(b)) => Some(op(a, b)),
            _ => None,
        });
        Self::from_values(values).expect("intersections of level sets are level sets")
    }
}

/// True when extending does not commute with the operation for this pair:
/// `ext(ε1 * ε2) != ext(ε1) * ext(ε2)`.
pub fn extension_homomorphism_gap<V, F>(e1: &PartialGradualElement<V>, e2: &PartialGradualElement<V>, mut op: F) -> bool
where
    V: Clone + PartialEq,
    F: FnMut(&V, &V) -> V,
{
    let left = e1.pointwise_op(e2, &mut op).extend();
    let right = e1.extend().pointwise_op(&e2.extend(), &mut op);
    left != right
}

fn level(x: &Rational) -> Level {
    Level::new(x.clone()).expect("step map probes lie in (0,1]")
}
