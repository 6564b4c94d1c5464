//! Gradual subgroups of a finite group and fuzzy subgroups.
//!
//! A gradual subgroup takes a subgroup at every level, so its values always
//! contain the identity and are never empty. Fuzzy subgroups are compared up
//! to their grade at the identity: `μ¹` raises it to 1, and `μ1 ∼ μ2` when the
//! two agree off `e`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, GroupHom, Subgroup};
use crate::fuzzy_bridge::FuzzySubset;
use crate::gradual_element::TotalGradualElement;
use crate::gradual_subset::GradualSubset;
use crate::level_core::{Grade, Level, StepMap};
use crate::ElementSet;

/// True when every value of `sigma` is closed under products and inverses.
pub fn is_gradual_subgroup(group: &FiniteGroup, sigma: &GradualSubset) -> Result<bool> {
    check_universe(group, sigma)?;
    if sigma.map().values().any(|s| s.is_clear()) {
        return Err(Error::EmptyLevelValue);
    }
    Ok(sigma.map().values().all(|s| {
        group.setwise_product(s, s).is_subset(s) && group.setwise_inverse(s).is_subset(s)
    }))
}

fn check_universe(group: &FiniteGroup, sigma: &GradualSubset) -> Result<()> {
    if sigma.universe() != group.order() {
        return Err(Error::GroundMismatch(group.order(), sigma.universe()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradualSubgroup {
    group: Arc<FiniteGroup>,
    map: StepMap<Subgroup>,
}

impl GradualSubgroup {
    pub fn new(group: Arc<FiniteGroup>, map: StepMap<Subgroup>) -> Result<Self> {
        if map.values().any(|h| h.members().len() != group.order()) {
            return Err(Error::GroundMismatch(group.order(), 0));
        }
        Ok(GradualSubgroup { group, map })
    }

    pub fn constant(group: Arc<FiniteGroup>, h: Subgroup) -> Result<Self> {
        Self::new(group, StepMap::constant(h))
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let e = Subgroup::trivial(&group);
        GradualSubgroup { map: StepMap::constant(e), group }
    }

    pub fn from_subset(group: Arc<FiniteGroup>, sigma: &GradualSubset) -> Result<Self> {
        if !is_gradual_subgroup(&group, sigma)? {
            return Err(Error::NotSubgroup);
        }
        let map = sigma.map().map(|s| Subgroup::new(&group, s.clone()).expect("checked above"));
        Ok(GradualSubgroup { group, map })
    }

    /// `σ(α) = ⟨ε1(α), .., εt(α)⟩`.
    pub fn generated_by(group: Arc<FiniteGroup>, elements: &[TotalGradualElement<usize>]) -> Result<Self> {
        let (first, rest) = elements.split_first().ok_or(Error::EmptyFamily)?;
        let n = group.order();
        for e in elements {
            if let Some(&x) = e.map().values().find(|&&x| x >= n) {
                return Err(Error::UnknownElement(x));
            }
        }
        let seed = first.map().map(|&x| group.set_of([x]));
        let sets = rest.iter().fold(seed, |acc, e| {
            acc.zip(e.map(), |s, &x| {
                let mut s = s.clone();
                s.insert(x);
                s
            })
        });
        let map = sets.map(|s| group.subgroup_generated(s));
        Ok(GradualSubgroup { group, map })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn map(&self) -> &StepMap<Subgroup> {
        &self.map
    }

    pub fn eval(&self, alpha: &Level) -> &Subgroup {
        self.map.eval(alpha)
    }

    pub fn as_subset(&self) -> GradualSubset {
        GradualSubset::new(self.group.order(), self.map.map(|h| h.members().clone())).expect("sized to the group")
    }

    fn same_group(&self, other: &GradualSubgroup) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroundMismatch(self.group.order(), other.group.order()));
        }
        Ok(())
    }

    fn with_map(&self, map: StepMap<Subgroup>) -> GradualSubgroup {
        GradualSubgroup {
            group: self.group.clone(),
            map,
        }
    }

    pub fn is_subset(&self, other: &GradualSubgroup) -> Result<bool> {
        self.same_group(other)?;
        Ok(self.map.zip(&other.map, |a, b| a.is_subset(b)).values().all(|&b| b))
    }

    /// Largest number of generators any level needs.
    pub fn generator_count(&self) -> usize {
        self.map.values().map(|h| rank(&self.group, h)).max().unwrap_or(0)
    }

    /// `t` gradual elements generating `self`, when every level needs at most `t`.
    pub fn generators(&self, t: usize) -> Option<Vec<TotalGradualElement<usize>>> {
        let e = self.group.identity();
        let mut per_atom = Vec::new();
        for h in self.map.values() {
            let mut gens = minimal_generators(&self.group, h);
            if gens.len() > t {
                return None;
            }
            gens.resize(t, e);
            per_atom.push(gens);
        }
        let breaks = self.map.breakpoints().to_vec();
        let elements = (0..t)
            .map(|i| {
                let gaps = per_atom.iter().step_by(2).map(|g| g[i]).collect();
                let points = per_atom.iter().skip(1).step_by(2).map(|g| g[i]).collect();
                TotalGradualElement::new(StepMap::from_atoms(breaks.clone(), gaps, points).expect("same breakpoints"))
            })
            .collect();
        Some(elements)
    }

    /// `(σ1 ∗ σ2)(α) = σ1(α) σ2(α)`.
    pub fn product(&self, other: &GradualSubgroup) -> Result<GradualSubset> {
        self.same_group(other)?;
        let g = &self.group;
        let map = self.map.zip(&other.map, |a, b| g.setwise_product(a.members(), b.members()));
        GradualSubset::new(g.order(), map)
    }

    /// The product as a gradual subgroup; fails with `NotSubgroup` when some
    /// level product is not a subgroup.
    pub fn product_subgroup(&self, other: &GradualSubgroup) -> Result<GradualSubgroup> {
        GradualSubgroup::from_subset(self.group.clone(), &self.product(other)?)
    }

    /// `⟨σ1 σ2⟩(α) = ⟨σ1(α) ∪ σ2(α)⟩`.
    pub fn join(&self, other: &GradualSubgroup) -> Result<GradualSubgroup> {
        self.same_group(other)?;
        Ok(self.with_map(self.map.zip(&other.map, |a, b| self.group.join(a, b))))
    }

    /// `σ^c(α) = ⟨∪{σ(β) | β ≥ α}⟩`.
    pub fn closure_c(&self) -> GradualSubgroup {
        self.with_map(self.map.accumulate(|a, b| self.group.join(a, b)))
    }

    /// `σ^d(α) = ⟨∪{σ(β) | β > α}⟩` for `α < 1`, `σ(1)` at 1.
    pub fn interior_d(&self) -> GradualSubgroup {
        self.with_map(self.map.strict_accumulate(|a, b| self.group.join(a, b)))
    }

    pub fn is_decreasing(&self) -> bool {
        self.closure_c() == *self
    }

    pub fn is_strict_decreasing(&self) -> bool {
        self.interior_d() == *self
    }

    pub fn is_normal(&self) -> bool {
        self.map.values().all(|h| self.group.is_normal(h.members()))
    }

    pub fn quotient(&self) -> Result<GradualQuotientGroup> {
        let levels = self.map.try_map(|h| {
            self.group
                .quotient(h)
                .map(|(quotient, projection)| QuotientLevel { quotient, projection })
        })?;
        Ok(GradualQuotientGroup {
            group: self.group.clone(),
            levels,
        })
    }

    /// The maps `h_α: G/σ1(α) -> G/σ2(α)` with `h_α ∘ p1(α) = p2(α)`.
    pub fn comparison_homs(&self, larger: &GradualSubgroup) -> Result<StepMap<GroupHom>> {
        if !self.is_subset(larger)? {
            return Err(Error::NotIncluded);
        }
        let q1 = self.quotient()?;
        let q2 = larger.quotient()?;
        Ok(q1.levels.zip(&q2.levels, |l1, l2| {
            let mut images = vec![0; l1.quotient.order()];
            for x in 0..self.group.order() {
                images[l1.projection.apply(x)] = l2.projection.apply(x);
            }
            let h = GroupHom::new(l1.quotient.clone(), l2.quotient.clone(), images).expect("induced by inclusion of kernels");
            debug_assert_eq!(l1.projection.then(&h).ok().as_ref(), Some(&l2.projection));
            h
        }))
    }

    /// `(σ1 σ2)/σ1` inside `G/σ1`, level by level; `self` is the normal `σ1`.
    pub fn fraction(&self, other: &GradualSubgroup) -> Result<StepMap<FractionLevel>> {
        self.same_group(other)?;
        let q = self.quotient()?;
        Ok(q.levels.zip(&self.map.zip(&other.map, |a, b| (a.clone(), b.clone())), |level, (a, b)| {
            let product = self.group.setwise_product(a.members(), b.members());
            let image = level.projection.image_of(&product);
            FractionLevel {
                quotient: level.quotient.clone(),
                subgroup: Subgroup::new(&level.quotient, image).expect("image of a subgroup"),
            }
        }))
    }

    /// `f_*(σ)(α) = f(σ(α))`.
    pub fn image(&self, f: &GroupHom) -> Result<GradualSubgroup> {
        if **f.source() != *self.group {
            return Err(Error::GroundMismatch(f.source().order(), self.group.order()));
        }
        let target = f.target().clone();
        let map = self
            .map
            .map(|h| Subgroup::new(&target, f.image_of(h.members())).expect("image of a subgroup"));
        Ok(GradualSubgroup { group: target, map })
    }

    /// `f^*(τ)(α) = f^{-1}(τ(α))`, where `self` is `τ` over the target of `f`.
    pub fn preimage(&self, f: &GroupHom) -> Result<GradualSubgroup> {
        if **f.target() != *self.group {
            return Err(Error::GroundMismatch(f.target().order(), self.group.order()));
        }
        let source = f.source().clone();
        let map = self
            .map
            .map(|h| Subgroup::new(&source, f.preimage(h.members())).expect("preimage of a subgroup"));
        Ok(GradualSubgroup { group: source, map })
    }
}

/// Checks `⟨σ1 σ2⟩^c = ⟨σ1^c σ2^c⟩` and returns the common value. When either
/// factor is normal it also checks `(σ1 σ2)^c = σ1^c σ2^c`.
pub fn langle_product_c(s1: &GradualSubgroup, s2: &GradualSubgroup) -> Result<GradualSubgroup> {
    let lhs = s1.join(s2)?.closure_c();
    let rhs = s1.closure_c().join(&s2.closure_c())?;
    if lhs != rhs {
        return Err(Error::LawViolated("<s1 s2>^c differs from <s1^c s2^c>".into()));
    }
    if s1.is_normal() || s2.is_normal() {
        let strong = s1.product_subgroup(s2)?.closure_c();
        if strong.as_subset() != s1.closure_c().product(&s2.closure_c())? {
            return Err(Error::LawViolated("(s1 s2)^c differs from s1^c s2^c".into()));
        }
    }
    Ok(lhs)
}

/// Smallest number of generators of `h`.
pub fn rank(group: &FiniteGroup, h: &Subgroup) -> usize {
    minimal_generators(group, h).len()
}

fn minimal_generators(group: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
    let candidates: Vec<usize> = h.members().ones().filter(|&x| x != group.identity()).collect();
    (0..=candidates.len())
        .find_map(|k| first_generating_subset(group, h, &candidates, k))
        .expect("a subgroup generates itself")
}

fn first_generating_subset(group: &FiniteGroup, h: &Subgroup, candidates: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<usize> = idx.iter().map(|&i| candidates[i]).collect();
        if group.subgroup_generated(&group.set_of(chosen.iter().copied())) == *h {
            return Some(chosen);
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < candidates.len() - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// One level of a gradual quotient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientLevel {
    pub quotient: Arc<FiniteGroup>,
    pub projection: GroupHom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradualQuotientGroup {
    group: Arc<FiniteGroup>,
    levels: StepMap<QuotientLevel>,
}

impl GradualQuotientGroup {
    pub fn levels(&self) -> &StepMap<QuotientLevel> {
        &self.levels
    }

    pub fn eval(&self, alpha: &Level) -> &QuotientLevel {
        self.levels.eval(alpha)
    }

    /// `κ(α) = Ker(G -> η(α))`.
    pub fn kernel(&self) -> GradualSubgroup {
        GradualSubgroup {
            group: self.group.clone(),
            map: self.levels.map(|l| l.projection.kernel()),
        }
    }
}

/// `(σ1(α) σ2(α)) / σ1(α)` as a subgroup of `G / σ1(α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionLevel {
    pub quotient: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
}

/// A fuzzy subset `μ` of a group with `μ(x y⁻¹) ≥ μ(x) ∧ μ(y)`, not constant 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySubgroup {
    group: Arc<FiniteGroup>,
    mu: FuzzySubset,
}

impl FuzzySubgroup {
    pub fn new(group: Arc<FiniteGroup>, mu: FuzzySubset) -> Result<Self> {
        if mu.universe() != group.order() {
            return Err(Error::GroundMismatch(group.order(), mu.universe()));
        }
        if mu.is_zero() {
            return Err(Error::ConstantZero);
        }
        if let Some((x, y)) = first_violation(&group, &mu) {
            return Err(Error::NotFuzzySubgroup { x, y });
        }
        Ok(FuzzySubgroup { group, mu })
    }

    /// The characteristic function of a subgroup.
    pub fn characteristic(group: Arc<FiniteGroup>, h: &Subgroup) -> Self {
        let grades = (0..group.order())
            .map(|x| if h.contains(x) { Grade::one() } else { Grade::zero() })
            .collect();
        FuzzySubgroup {
            group,
            mu: FuzzySubset::new(grades),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn grades(&self) -> &FuzzySubset {
        &self.mu
    }

    /// `μ(xy) = μ(yx)` for all `x, y`.
    pub fn is_normal(&self) -> bool {
        let g = &self.group;
        (0..g.order()).all(|x| (0..g.order()).all(|y| self.mu.grade(g.mul(x, y)) == self.mu.grade(g.mul(y, x))))
    }

    /// `(μ1 μ2)(x) = Max{μ1(y) ∧ μ2(z) | yz = x}`.
    ///
    /// The result depends on the grades at `e`, not only on the classes: with
    /// `μ1` equal to 1/2 at `e` and 0 elsewhere and `μ2 = 1`, the product is
    /// 1/2 off `e`, while the `μ¹` representative of `μ1` gives 1.
    pub fn convolve(&self, other: &FuzzySubgroup) -> Result<FuzzySubset> {
        let g = &self.group;
        if g != &other.group {
            return Err(Error::GroundMismatch(g.order(), other.group.order()));
        }
        let (m1, m2) = (&self.mu, &other.mu);
        let grades = (0..g.order())
            .map(|x| {
                (0..g.order())
                    .map(|y| m1.grade(y).min(m2.grade(g.mul(g.inv(y), x))).clone())
                    .max()
                    .expect("nonempty group")
            })
            .collect();
        Ok(FuzzySubset::new(grades))
    }

    /// `μ¹`: the grade at `e` raised to 1.
    pub fn normalize(&self) -> FuzzySubgroupClass {
        let mut grades = self.mu.grades().to_vec();
        grades[self.group.identity()] = Grade::one();
        FuzzySubgroupClass {
            canonical: FuzzySubgroup {
                group: self.group.clone(),
                mu: FuzzySubset::new(grades),
            },
        }
    }
}

/// The pair `(x, y)` with `μ(x y⁻¹) < μ(x) ∧ μ(y)`, if any.
pub fn first_violation(group: &FiniteGroup, mu: &FuzzySubset) -> Option<(usize, usize)> {
    let n = group.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| mu.grade(group.mul(x, group.inv(y))) < mu.grade(x).min(mu.grade(y)))
}

pub fn is_fuzzy_subgroup(group: &FiniteGroup, mu: &FuzzySubset) -> bool {
    mu.universe() == group.order() && !mu.is_zero() && first_violation(group, mu).is_none()
}

/// An equivalence class of fuzzy subgroups, held by its `μ¹` representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySubgroupClass {
    canonical: FuzzySubgroup,
}

impl FuzzySubgroupClass {
    pub fn of(mu: &FuzzySubgroup) -> Self {
        mu.normalize()
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let e = Subgroup::trivial(&group);
        FuzzySubgroupClass {
            canonical: FuzzySubgroup::characteristic(group, &e),
        }
    }

    pub fn canonical(&self) -> &FuzzySubgroup {
        &self.canonical
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.canonical.group
    }

    pub fn contains(&self, mu: &FuzzySubgroup) -> bool {
        mu.normalize() == *self
    }

    /// `(μ1 μ2)(x)` computed on the canonical representatives.
    pub fn product(&self, other: &FuzzySubgroupClass) -> Result<FuzzySubset> {
        self.canonical.convolve(&other.canonical)
    }

    /// The class of the product, when the product is a fuzzy subgroup.
    pub fn product_class(&self, other: &FuzzySubgroupClass) -> Result<FuzzySubgroupClass> {
        let mu = FuzzySubgroup::new(self.group().clone(), self.product(other)?)?;
        Ok(mu.normalize())
    }

    pub fn is_normal(&self) -> bool {
        self.canonical.is_normal()
    }

    /// `σ(μ)(α) = {x | μ¹(x) ≥ α}`.
    pub fn nu(&self) -> GradualSubgroup {
        GradualSubgroup::from_subset(self.group().clone(), &self.canonical.mu.nu()).expect("levels of a fuzzy subgroup")
    }

    /// `σ̃(μ)(α) = {x | μ¹(x) > α}` for `α < 1`, `{x | μ¹(x) = 1}` at 1.
    pub fn nu_tilde(&self) -> GradualSubgroup {
        GradualSubgroup::from_subset(self.group().clone(), &self.canonical.mu.nu_tilde())
            .expect("strong levels of a fuzzy subgroup")
    }

    /// Inverse of [`nu`](Self::nu) on decreasing gradual subgroups with property (F).
    pub fn upsilon(sigma: &GradualSubgroup) -> Result<FuzzySubgroupClass> {
        let mu = FuzzySubset::upsilon(&sigma.as_subset())?;
        Ok(FuzzySubgroup::new(sigma.group.clone(), mu)?.normalize())
    }

    /// Inverse of [`nu_tilde`](Self::nu_tilde) on strict decreasing gradual
    /// subgroups with property (inf-F).
    pub fn upsilon_tilde(sigma: &GradualSubgroup) -> Result<FuzzySubgroupClass> {
        let mu = FuzzySubset::upsilon_tilde(&sigma.as_subset())?;
        Ok(FuzzySubgroup::new(sigma.group.clone(), mu)?.normalize())
    }
}

impl fmt::Display for FuzzySubgroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.group();
        let parts: Vec<String> = (0..g.order())
            .map(|x| format!("{}:{}", g.label(x), self.canonical.mu.grade(x)))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Members of `s` as labels, for messages.
pub fn describe(group: &FiniteGroup, s: &ElementSet) -> String {
    let labels: Vec<&str> = s.ones().map(|x| group.label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level_core::{ratio, IntervalPiece};
    use crate::random;
    use proptest::prelude::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    fn el(g: &FiniteGroup, label: &str) -> usize {
        g.index_of(label).unwrap()
    }

    fn sub(g: &FiniteGroup, labels: &[&str]) -> Subgroup {
        g.subgroup_generated(&g.set_of(labels.iter().map(|l| el(g, l))))
    }

    fn lvl(n: i64, d: i64) -> Level {
        Level::from_ratio(n, d).unwrap()
    }

    /// `upper` on (b,1] and `lower` on (0,b].
    fn split(g: &Arc<FiniteGroup>, b: (i64, i64), lower: Subgroup, upper: Subgroup) -> GradualSubgroup {
        let map = StepMap::from_pieces(vec![
            (IntervalPiece::left_open(ratio(0, 1), ratio(b.0, b.1)).unwrap(), lower),
            (IntervalPiece::left_open(ratio(b.0, b.1), ratio(1, 1)).unwrap(), upper),
        ])
        .unwrap();
        GradualSubgroup::new(g.clone(), map).unwrap()
    }

    #[test]
    fn subgroup_predicate() {
        let g = s3();
        let e = Subgroup::trivial(&g);
        assert!(is_gradual_subgroup(&g, &GradualSubgroup::constant(g.clone(), e).unwrap().as_subset()).unwrap());
        let not_closed = g.set_of([g.identity(), el(&g, "(1 2)"), el(&g, "(1 3)")]);
        assert!(!is_gradual_subgroup(&g, &GradualSubset::constant(6, not_closed).unwrap()).unwrap());
        let a3 = sub(&g, &["(1 2 3)"]);
        let sigma = split(&g, (1, 2), Subgroup::whole(&g), a3);
        assert!(is_gradual_subgroup(&g, &sigma.as_subset()).unwrap());
        assert_eq!(is_gradual_subgroup(&g, &GradualSubset::empty(6)), Err(Error::EmptyLevelValue));
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        let e = TotalGradualElement::constant(g.identity());
        assert_eq!(GradualSubgroup::generated_by(g.clone(), &[e]).unwrap(), GradualSubgroup::trivial(g.clone()));
        let eps = TotalGradualElement::new(
            StepMap::from_pieces(vec![
                (IntervalPiece::left_open(ratio(0, 1), ratio(1, 2)).unwrap(), el(&g, "(1 2 3)")),
                (IntervalPiece::left_open(ratio(1, 2), ratio(1, 1)).unwrap(), el(&g, "(1 2)")),
            ])
            .unwrap(),
        );
        let sigma = GradualSubgroup::generated_by(g.clone(), &[eps]).unwrap();
        assert_eq!(*sigma.eval(&lvl(3, 4)), sub(&g, &["(1 2)"]));
        assert_eq!(*sigma.eval(&lvl(1, 2)), sub(&g, &["(1 2 3)"]));
        assert_eq!(sigma.generator_count(), 1);
        let whole = GradualSubgroup::constant(g.clone(), Subgroup::whole(&g)).unwrap();
        assert_eq!(whole.generator_count(), 2);
        assert!(whole.generators(1).is_none());
        let gens = whole.generators(2).unwrap();
        assert_eq!(GradualSubgroup::generated_by(g, &gens).unwrap(), whole);
    }

    #[test]
    fn products() {
        let g = s3();
        let a3 = GradualSubgroup::constant(g.clone(), sub(&g, &["(1 2 3)"])).unwrap();
        let t12 = GradualSubgroup::constant(g.clone(), sub(&g, &["(1 2)"])).unwrap();
        let t13 = GradualSubgroup::constant(g.clone(), sub(&g, &["(1 3)"])).unwrap();
        let e = GradualSubgroup::trivial(g.clone());
        assert_eq!(t12.product(&e).unwrap(), t12.as_subset());
        assert_eq!(a3.product_subgroup(&t12).unwrap().eval(&lvl(1, 3)).order(), 6);
        let p = t12.product(&t13).unwrap();
        assert_eq!(p.at_one().count_ones(..), 4);
        assert_eq!(t12.product_subgroup(&t13), Err(Error::NotSubgroup));
    }

    #[test]
    fn group_operators() {
        let g = s3();
        let sigma = split(&g, (1, 2), sub(&g, &["(1 3)"]), sub(&g, &["(1 2)"]));
        let c = sigma.closure_c();
        assert_eq!(*c.eval(&lvl(3, 4)), sub(&g, &["(1 2)"]));
        assert_eq!(*c.eval(&lvl(1, 2)), Subgroup::whole(&g));
        assert!(c.is_decreasing());
        assert_eq!(c.closure_c(), c);

        let a3 = sub(&g, &["(1 2 3)"]);
        let lower_e = GradualSubgroup::new(
            g.clone(),
            StepMap::from_pieces(vec![
                (IntervalPiece::open(ratio(0, 1), ratio(1, 2)).unwrap(), Subgroup::trivial(&g)),
                (IntervalPiece::closed(ratio(1, 2), ratio(1, 1)).unwrap(), a3.clone()),
            ])
            .unwrap(),
        )
        .unwrap();
        let d = lower_e.interior_d();
        assert_eq!(d, GradualSubgroup::constant(g.clone(), a3).unwrap());
        let constant = GradualSubgroup::constant(g.clone(), sub(&g, &["(2 3)"])).unwrap();
        assert_eq!(constant.interior_d(), constant);
    }

    #[test]
    fn quotients_and_kernels() {
        let g = s3();
        let e = GradualSubgroup::trivial(g.clone());
        assert_eq!(e.quotient().unwrap().eval(&lvl(1, 5)).quotient.order(), 6);
        let sigma = split(&g, (1, 2), Subgroup::trivial(&g), sub(&g, &["(1 2 3)"]));
        let q = sigma.quotient().unwrap();
        assert_eq!(q.eval(&lvl(3, 4)).quotient.order(), 2);
        assert_eq!(q.eval(&lvl(1, 4)).quotient.order(), 6);
        assert_eq!(q.kernel(), sigma);
        let t = GradualSubgroup::constant(g.clone(), sub(&g, &["(1 2)"])).unwrap();
        assert!(!t.is_normal());
        assert_eq!(t.quotient(), Err(Error::NotNormal));

        let a3 = GradualSubgroup::constant(g.clone(), sub(&g, &["(1 2 3)"])).unwrap();
        let homs = e.comparison_homs(&a3).unwrap();
        let h = homs.at_one();
        assert_eq!((h.source().order(), h.target().order()), (6, 2));
        assert!(h.is_surjective());
        assert_eq!(a3.comparison_homs(&e), Err(Error::NotIncluded));
        let same = a3.comparison_homs(&a3).unwrap();
        assert!(same.at_one().is_injective() && same.at_one().is_surjective());

        let frac = a3.fraction(&t).unwrap();
        assert_eq!(frac.at_one().subgroup.order(), 2);
        assert_eq!(a3.fraction(&a3).unwrap().at_one().subgroup.order(), 1);
    }

    #[test]
    fn images_and_preimages() {
        let g = s3();
        let a3 = sub(&g, &["(1 2 3)"]);
        let (_, p) = g.quotient(&a3).unwrap();
        let sigma = split(&g, (1, 3), Subgroup::whole(&g), a3.clone());
        assert_eq!(sigma.image(&GroupHom::identity(g.clone())).unwrap(), sigma);
        let trivial = GradualSubgroup::trivial(p.target().clone());
        assert_eq!(trivial.preimage(&p).unwrap(), GradualSubgroup::constant(g.clone(), a3).unwrap());
    }

    #[test]
    fn fuzzy_subgroup_examples() {
        let g = s3();
        let a3 = sub(&g, &["(1 2 3)"]);
        let grade = |x: usize| {
            if x == g.identity() {
                Grade::one()
            } else if a3.contains(x) {
                Grade::from_ratio(1, 2).unwrap()
            } else {
                Grade::from_ratio(1, 4).unwrap()
            }
        };
        let mu = FuzzySubgroup::new(g.clone(), FuzzySubset::new((0..6).map(grade).collect())).unwrap();
        let class = mu.normalize();
        let sigma = class.nu();
        assert_eq!(*sigma.eval(&lvl(3, 4)), Subgroup::trivial(&g));
        assert_eq!(*sigma.eval(&lvl(1, 2)), a3);
        assert_eq!(*sigma.eval(&lvl(1, 3)), a3);
        assert_eq!(*sigma.eval(&lvl(1, 4)), Subgroup::whole(&g));
        assert_eq!(FuzzySubgroupClass::upsilon(&sigma).unwrap(), class);
        assert!(mu.is_normal());

        let mut bad = vec![Grade::zero(); 6];
        bad[g.identity()] = Grade::one();
        bad[el(&g, "(1 2)")] = Grade::one();
        bad[el(&g, "(1 3)")] = Grade::from_ratio(1, 2).unwrap();
        bad[el(&g, "(1 2 3)")] = Grade::from_ratio(1, 4).unwrap();
        assert!(matches!(FuzzySubgroup::new(g.clone(), FuzzySubset::new(bad)), Err(Error::NotFuzzySubgroup { .. })));
        assert_eq!(FuzzySubgroup::new(g.clone(), FuzzySubset::constant(6, Grade::zero())), Err(Error::ConstantZero));

        let trivial = FuzzySubgroupClass::trivial(g.clone());
        assert_eq!(trivial.nu(), GradualSubgroup::trivial(g.clone()));
        assert_eq!(FuzzySubgroupClass::upsilon_tilde(&trivial.nu_tilde()).unwrap(), trivial);
        assert_eq!(class.product(&trivial).unwrap(), *class.canonical().grades());
    }

    #[test]
    fn class_equivalence_ignores_identity() {
        let g = Arc::new(FiniteGroup::cyclic(4));
        let mu = FuzzySubset::from_ratios(&[(1, 2), (1, 8), (1, 4), (1, 8)]).unwrap();
        let nu = FuzzySubset::from_ratios(&[(3, 4), (1, 8), (1, 4), (1, 8)]).unwrap();
        let a = FuzzySubgroup::new(g.clone(), mu).unwrap();
        let b = FuzzySubgroup::new(g.clone(), nu).unwrap();
        assert_eq!(a.normalize(), b.normalize());
        assert!(a.normalize().contains(&b));
        assert_eq!(a.normalize().canonical().grades().grade(0), &Grade::one());
    }

    #[test]
    fn raw_representatives_change_the_product() {
        let g = s3();
        let mut low = vec![Grade::zero(); 6];
        low[g.identity()] = Grade::from_ratio(1, 2).unwrap();
        let mu = FuzzySubgroup::new(g.clone(), FuzzySubset::new(low)).unwrap();
        let whole = FuzzySubgroup::characteristic(g.clone(), &Subgroup::whole(&g));
        let x = el(&g, "(1 2)");
        assert_eq!(mu.convolve(&whole).unwrap().grade(x), &Grade::from_ratio(1, 2).unwrap());
        assert_eq!(mu.normalize().product(&whole.normalize()).unwrap().grade(x), &Grade::one());
        assert_eq!(mu.normalize(), FuzzySubgroupClass::trivial(g));
    }

    #[test]
    fn characteristic_products() {
        let g = s3();
        let h1 = sub(&g, &["(1 2)"]);
        let h2 = sub(&g, &["(1 3)"]);
        let c1 = FuzzySubgroup::characteristic(g.clone(), &h1).normalize();
        let c2 = FuzzySubgroup::characteristic(g.clone(), &h2).normalize();
        let p = c1.product(&c2).unwrap();
        let hh = g.setwise_product(h1.members(), h2.members());
        for x in 0..6 {
            assert_eq!(p.grade(x).is_one(), hh.contains(x));
            assert_eq!(p.grade(x).is_zero(), !hh.contains(x));
        }
    }

    #[test]
    fn non_normal_fuzzy_subgroup() {
        let g = s3();
        let t = sub(&g, &["(1 2)"]);
        let mu = FuzzySubgroup::characteristic(g.clone(), &t);
        assert!(!mu.is_normal());
        assert!(!mu.normalize().nu_tilde().is_normal());
    }

    fn groups() -> Vec<Arc<FiniteGroup>> {
        vec![
            s3(),
            Arc::new(FiniteGroup::cyclic(12)),
            Arc::new(FiniteGroup::dihedral(4)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn subgroup_predicate_matches_levels(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let sigma = random::nonempty_gradual_subset(&mut rng, &g, 3);
            let levelwise = sigma.map().values().all(|s| g.is_subgroup(s));
            prop_assert_eq!(is_gradual_subgroup(&g, &sigma).unwrap(), levelwise);
        }

        #[test]
        fn operators_on_gradual_subgroups(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let s = random::gradual_subgroup(&mut rng, &g, 4);
            let c = s.closure_c();
            prop_assert!(s.is_subset(&c).unwrap());
            prop_assert_eq!(c.closure_c(), c.clone());
            let d = c.interior_d();
            prop_assert!(d.is_subset(&c).unwrap());
            prop_assert_eq!(d.interior_d(), d.clone());
            prop_assert_eq!(s.interior_d(), d.clone());
            prop_assert!(d.is_strict_decreasing());
            let n = random::normal_gradual_subgroup(&mut rng, &g, 3);
            prop_assert!(n.closure_c().is_normal());
            prop_assert!(n.interior_d().is_normal());
        }

        #[test]
        fn product_laws(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let s1 = random::gradual_subgroup(&mut rng, &g, 3);
            let s2 = random::gradual_subgroup(&mut rng, &g, 3);
            prop_assert!(langle_product_c(&s1, &s2).is_ok());
            let n = random::normal_gradual_subgroup(&mut rng, &g, 3);
            prop_assert!(langle_product_c(&n, &s1).is_ok());
            let p = n.product_subgroup(&s1).unwrap();
            prop_assert_eq!(p.interior_d().as_subset(), n.interior_d().product(&s1.interior_d()).unwrap());
            prop_assert_eq!(p.closure_c().as_subset(), n.closure_c().product(&s1.closure_c()).unwrap());
        }

        #[test]
        fn quotient_round_trip(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let n = random::normal_gradual_subgroup(&mut rng, &g, 3);
            let q = n.quotient().unwrap();
            prop_assert_eq!(q.kernel(), n.clone());
            let s = random::gradual_subgroup(&mut rng, &g, 3);
            for level in n.fraction(&s).unwrap().values() {
                prop_assert!(level.quotient.is_subgroup(level.subgroup.members()));
            }
            let larger = n.join(&random::normal_gradual_subgroup(&mut rng, &g, 3)).unwrap();
            let homs = n.comparison_homs(&larger).unwrap();
            let pairs = q.levels().zip(larger.quotient().unwrap().levels(), |a, b| (a.clone(), b.clone()));
            let checked = homs.zip(&pairs, |h, (l1, l2)| l1.projection.then(h).unwrap() == l2.projection);
            prop_assert!(checked.values().all(|&b| b));
        }

        #[test]
        fn preimage_of_normal_is_normal(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let h = random::choose(&mut rng, &g.normal_subgroups()).clone();
            let (q, p) = g.quotient(&h).unwrap();
            let tau = random::normal_gradual_subgroup(&mut rng, &q, 3);
            prop_assert!(tau.preimage(&p).unwrap().is_normal());
            prop_assert_eq!(tau.preimage(&p).unwrap().image(&p).unwrap(), tau);
        }

        #[test]
        fn fuzzy_round_trips(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let mu = random::fuzzy_subgroup(&mut rng, &g);
            let class = mu.normalize();
            prop_assert_eq!(FuzzySubgroupClass::upsilon(&class.nu()).unwrap(), class.clone());
            prop_assert_eq!(FuzzySubgroupClass::upsilon_tilde(&class.nu_tilde()).unwrap(), class.clone());
            prop_assert_eq!(mu.is_normal(), class.nu_tilde().is_normal());
            prop_assert_eq!(mu.is_normal(), class.is_normal());
        }

        #[test]
        fn class_product_is_well_defined(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let g = random::choose(&mut rng, &groups()).clone();
            let m1 = random::fuzzy_subgroup(&mut rng, &g);
            let m2 = random::fuzzy_subgroup(&mut rng, &g);
            let c1 = m1.normalize();
            let c2 = m2.normalize();
            let p = c1.product(&c2).unwrap();
            // representatives agree off e once their grade at e dominates the other factor
            let off_e = |m: &FuzzySubgroup| (0..g.order()).filter(|&x| x != g.identity()).map(|x| m.grades().grade(x).clone()).max().unwrap_or(Grade::zero());
            let floor = off_e(c1.canonical()).max(off_e(c2.canonical()));
            let mut lowered = c1.canonical().grades().grades().to_vec();
            lowered[g.identity()] = floor.clone().max(random::grade64(&mut rng));
            if let Ok(other) = FuzzySubgroup::new(g.clone(), FuzzySubset::new(lowered)) {
                let q = other.convolve(c2.canonical()).unwrap();
                for x in (0..g.order()).filter(|&x| x != g.identity()) {
                    prop_assert_eq!(q.grade(x), p.grade(x));
                }
            }
            let lhs = p.nu_tilde();
            let rhs = GradualSubset::new(g.order(), c1.nu_tilde().map().zip(c2.nu_tilde().map(), |a, b| g.setwise_product(a.members(), b.members()))).unwrap();
            prop_assert_eq!(lhs, rhs);
            let levels = GradualSubset::new(g.order(), c1.nu().map().zip(c2.nu().map(), |a, b| g.setwise_product(a.members(), b.members()))).unwrap();
            prop_assert_eq!(p.nu(), levels);
        }
    }
}
