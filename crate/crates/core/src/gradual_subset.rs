//! Gradual subsets of a finite ground set `{0, .., n-1}`: step maps from
//! levels to subsets.
//!
//! `σ^c(α) = ∪{σ(β) | β ≥ α}` is a closure operator whose fixed points are the
//! decreasing gradual subsets. `σ^d(α) = ∪{σ(β) | β > α}` for `α < 1`,
//! `σ^d(1) = σ(1)`, is an interior operator on decreasing subsets whose fixed
//! points are the strict decreasing ones.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::gradual_element::TotalGradualElement;
use crate::level_core::{fmt_rational, Atom, IntervalPiece, Level, Rational, StepMap};
use crate::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradualSubset {
    universe: usize,
    map: StepMap<ElementSet>,
}

/// The levels at which one element belongs to a gradual subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipProfile {
    pub element: usize,
    pub levels: StepMap<bool>,
}

impl MembershipProfile {
    pub fn pieces(&self) -> Vec<IntervalPiece> {
        self.levels
            .pieces()
            .into_iter()
            .filter_map(|(p, inside)| inside.then_some(p))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.levels.values().any(|&b| b)
    }

    fn top_atom(&self) -> Option<Atom<'_>> {
        self.levels
            .atoms()
            .filter(|(_, &inside)| inside)
            .map(|(atom, _)| atom)
            .last()
    }

    /// `Sup{α | x ∈ σ(α)}`, 0 when the profile is empty.
    pub fn sup(&self) -> Rational {
        self.top_atom().map_or_else(Rational::zero, |a| a.upper().clone())
    }

    /// `Max{α | x ∈ σ(α)}` when it exists; 0 for the empty profile.
    pub fn max(&self) -> Option<Rational> {
        match self.top_atom() {
            None => Some(Rational::zero()),
            Some(a) if a.is_point() => Some(a.upper().clone()),
            Some(_) => None,
        }
    }

    /// `Inf{α | x ∉ σ(α)}`, with `Inf ∅ = 1`.
    pub fn inf_outside(&self) -> Rational {
        self.levels
            .atoms()
            .find(|(_, &inside)| !inside)
            .map_or_else(Rational::one, |(a, _)| a.lower())
    }
}

impl GradualSubset {
    pub fn new(universe: usize, map: StepMap<ElementSet>) -> Result<Self> {
        if let Some(bad) = map.values().find(|s| s.len() != universe) {
            return Err(Error::GroundMismatch(universe, bad.len()));
        }
        Ok(GradualSubset { universe, map })
    }

    pub fn constant(universe: usize, set: ElementSet) -> Result<Self> {
        Self::new(universe, StepMap::constant(set))
    }

    pub fn empty(universe: usize) -> Self {
        GradualSubset {
            universe,
            map: StepMap::constant(ElementSet::with_capacity(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut all = ElementSet::with_capacity(universe);
        all.insert_range(..);
        GradualSubset {
            universe,
            map: StepMap::constant(all),
        }
    }

    pub fn from_pieces(universe: usize, pieces: Vec<(IntervalPiece, ElementSet)>) -> Result<Self> {
        Self::new(universe, StepMap::from_pieces(pieces)?)
    }

    /// `σ(ε)(α) = {ε(α)}`.
    pub fn unitary(element: &TotalGradualElement<usize>, universe: usize) -> Result<Self> {
        if let Some(&x) = element.map().values().find(|&&x| x >= universe) {
            return Err(Error::UnknownElement(x));
        }
        Ok(GradualSubset {
            universe,
            map: element.map().map(|&x| singleton(universe, x)),
        })
    }

    /// Fills levels outside the domain (`None`) with the empty set.
    pub fn extend_partial(universe: usize, values: &StepMap<Option<ElementSet>>) -> Result<Self> {
        if values.at_one().is_none() {
            return Err(Error::MissingOne);
        }
        Self::new(
            universe,
            values.map(|v| v.clone().unwrap_or_else(|| ElementSet::with_capacity(universe))),
        )
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn map(&self) -> &StepMap<ElementSet> {
        &self.map
    }

    pub fn eval(&self, alpha: &Level) -> &ElementSet {
        self.map.eval(alpha)
    }

    pub fn at_one(&self) -> &ElementSet {
        self.map.at_one()
    }

    fn check_ground(&self, other: &GradualSubset) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::GroundMismatch(self.universe, other.universe));
        }
        Ok(())
    }

    /// True when `ε(α) ∈ σ(α)` at every level.
    pub fn element_belongs(&self, element: &TotalGradualElement<usize>) -> bool {
        element.map().zip(&self.map, |&x, s| s.contains(x)).values().all(|&b| b)
    }

    pub fn is_subset(&self, other: &GradualSubset) -> Result<bool> {
        self.check_ground(other)?;
        Ok(self.map.zip(&other.map, |a, b| a.is_subset(b)).values().all(|&b| b))
    }

    pub fn closure_c(&self) -> GradualSubset {
        GradualSubset {
            universe: self.universe,
            map: self.map.accumulate(|a, b| a | b),
        }
    }

    pub fn interior_d(&self) -> GradualSubset {
        GradualSubset {
            universe: self.universe,
            map: self.map.strict_accumulate(|a, b| a | b),
        }
    }

    /// For a decreasing `σ`: `∩{σ(γ) | γ < α}` for `α < 1`, and `σ(1)` at 1.
    /// On a strict decreasing subset this recovers the decreasing subset with
    /// the same membership suprema whose maxima are attained where possible.
    pub fn left_hull(&self) -> GradualSubset {
        GradualSubset {
            universe: self.universe,
            map: self.map.left_limits(),
        }
    }

    pub fn is_decreasing(&self) -> bool {
        self.closure_c() == *self
    }

    pub fn is_strict_decreasing(&self) -> bool {
        self.interior_d() == *self
    }

    pub fn union(family: &[GradualSubset]) -> Result<GradualSubset> {
        Self::fold(family, |a, b| a | b)
    }

    pub fn intersection(family: &[GradualSubset]) -> Result<GradualSubset> {
        Self::fold(family, |a, b| a & b)
    }

    /// `(∩ σ_i)^d` of a family of strict decreasing subsets.
    pub fn modified_intersection(family: &[GradualSubset]) -> Result<GradualSubset> {
        if family.iter().any(|s| !s.is_strict_decreasing()) {
            return Err(Error::NotStrictDecreasing);
        }
        Ok(Self::intersection(family)?.interior_d())
    }

    fn fold(family: &[GradualSubset], op: impl Fn(&ElementSet, &ElementSet) -> ElementSet) -> Result<GradualSubset> {
        let (first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
        rest.iter().try_fold(first.clone(), |acc, s| {
            acc.check_ground(s)?;
            Ok(GradualSubset {
                universe: acc.universe,
                map: acc.map.zip(&s.map, &op),
            })
        })
    }

    /// `∪_α σ(α)`.
    pub fn support(&self) -> ElementSet {
        self.map.values().fold(ElementSet::with_capacity(self.universe), |acc, s| &acc | s)
    }

    pub fn profile(&self, element: usize) -> MembershipProfile {
        MembershipProfile {
            element,
            levels: self.map.map(|s| s.contains(element)),
        }
    }

    /// Every element of the support reaches a maximal membership level.
    pub fn has_property_f(&self) -> Result<bool> {
        if !self.is_decreasing() {
            return Err(Error::NotDecreasing);
        }
        Ok(self.first_f_violation().is_none())
    }

    fn first_f_violation(&self) -> Option<MembershipProfile> {
        self.support()
            .ones()
            .map(|x| self.profile(x))
            .find(|p| p.max().is_none())
    }

    /// For each `x` in the support, with `β = Inf{α | x ∉ σ(α)}`: `β = 0` or
    /// `x ∈ σ̂(β)`, where `σ̂` is [`left_hull`](Self::left_hull). This holds
    /// exactly for the strict decreasing subsets that come from fuzzy subsets.
    pub fn has_property_inf_f(&self) -> Result<bool> {
        if !self.is_strict_decreasing() {
            return Err(Error::NotStrictDecreasing);
        }
        Ok(self.first_inf_f_violation(&self.left_hull()).is_none())
    }

    /// The same test with `β` read from `self` and membership checked in
    /// `parent`. For decreasing `σ`, `σ^d.inf_f_against(σ)` holds iff `σ` has
    /// property (F).
    pub fn inf_f_against(&self, parent: &GradualSubset) -> bool {
        self.first_inf_f_violation(parent).is_none()
    }

    fn first_inf_f_violation(&self, parent: &GradualSubset) -> Option<(usize, Rational)> {
        self.support().ones().find_map(|x| {
            let beta = self.profile(x).inf_outside();
            let ok = beta.is_zero() || parent.map.eval_at(&beta).contains(x);
            (!ok).then_some((x, beta))
        })
    }

    /// `σ^c(α) ∖ σ^d(α)`. Empty at `α = 1`.
    pub fn difference_star(&self, alpha: &Level) -> ElementSet {
        self.difference_star_map().eval(alpha).clone()
    }

    pub fn difference_star_map(&self) -> StepMap<ElementSet> {
        self.closure_c()
            .map
            .zip(&self.interior_d().map, |c, d| c.difference(d).into_element_set(self.universe))
    }

    /// For decreasing `σ`: `∪_α σ(α) = σ(1) ⊔ ⊔_{α<1} (σ^c(α) ∖ σ^d(α))`, with
    /// every piece pairwise disjoint. A nonempty difference on an open gap
    /// repeats its elements at infinitely many levels, so it breaks
    /// disjointness.
    pub fn disjoint_union_identity(&self) -> Result<bool> {
        if !self.is_decreasing() {
            return Err(Error::NotDecreasing);
        }
        let star = self.difference_star_map();
        let mut parts = vec![self.at_one().clone()];
        for (atom, s) in star.atoms() {
            let top = atom.is_point() && atom.upper().is_one();
            if top || s.is_clear() {
                continue;
            }
            if !atom.is_point() {
                return Ok(false);
            }
            parts.push(s.clone());
        }
        let mut seen = ElementSet::with_capacity(self.universe);
        for p in &parts {
            if !seen.is_disjoint(p) {
                return Ok(false);
            }
            seen.union_with(p);
        }
        Ok(seen == self.support())
    }

    /// `f_*(σ)(α) = f(σ(α))` for `f: X -> Y` given as an image list.
    pub fn direct_image(&self, f: &[usize], target_universe: usize) -> Result<GradualSubset> {
        self.check_map(f, target_universe)?;
        Ok(GradualSubset {
            universe: target_universe,
            map: self.map.map(|s| s.ones().map(|x| f[x]).into_element_set(target_universe)),
        })
    }

    /// `f^*(τ)(α) = f^{-1}(τ(α))`, where `self` is `τ` over the target of `f`.
    pub fn inverse_image(&self, f: &[usize]) -> Result<GradualSubset> {
        if let Some(&y) = f.iter().find(|&&y| y >= self.universe) {
            return Err(Error::UnknownElement(y));
        }
        Ok(GradualSubset {
            universe: f.len(),
            map: self
                .map
                .map(|t| (0..f.len()).filter(|&x| t.contains(f[x])).into_element_set(f.len())),
        })
    }

    fn check_map(&self, f: &[usize], target_universe: usize) -> Result<()> {
        if f.len() != self.universe {
            return Err(Error::GroundMismatch(self.universe, f.len()));
        }
        match f.iter().find(|&&y| y >= target_universe) {
            Some(&y) => Err(Error::UnknownElement(y)),
            None => Ok(()),
        }
    }

    /// Error describing the first element without a maximal level.
    pub(crate) fn property_f_error(&self) -> Option<Error> {
        self.first_f_violation().map(|p| Error::PropertyFViolated {
            element: p.element,
            supremum: fmt_rational(&p.sup()),
        })
    }

    /// Error describing the first element failing (inf-F).
    pub(crate) fn property_inf_f_error(&self) -> Option<Error> {
        self.first_inf_f_violation(&self.left_hull())
            .map(|(element, beta)| Error::PropertyInfFViolated {
                element,
                infimum: fmt_rational(&beta),
            })
    }
}

pub(crate) fn singleton(universe: usize, x: usize) -> ElementSet {
    let mut s = ElementSet::with_capacity(universe);
    s.insert(x);
    s
}

/// Collects element ids into a set over a ground set of the given size.
pub(crate) trait IntoElementSet {
    fn into_element_set(self, universe: usize) -> ElementSet;
}

impl<I: Iterator<Item = usize>> IntoElementSet for I {
    fn into_element_set(self, universe: usize) -> ElementSet {
        let mut s = ElementSet::with_capacity(universe);
        for x in self {
            s.insert(x);
        }
        s
    }
}
