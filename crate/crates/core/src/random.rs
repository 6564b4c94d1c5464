//! Seeded generators for tests, benchmarks and the acceptance suite.
//!
//! Levels and grades have denominators at most 16, or are multiples of 1/64,
//! so that random breakpoints collide often enough to exercise boundaries.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::finite_group::FiniteGroup;
use crate::functorial::{DirectedSetSystem, LevelGrid};
use crate::fuzzy_bridge::FuzzySubset;
use crate::gradual_element::{PartialGradualElement, TotalGradualElement};
use crate::gradual_group::{FuzzySubgroup, GradualSubgroup};
use crate::gradual_subset::GradualSubset;
use crate::level_core::{ratio, Grade, Level, LevelSet, Rational, StepMap};
use crate::ElementSet;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational in (0,1].
pub fn level(rng: &mut impl Rng) -> Level {
    let r = if rng.gen_bool(0.5) {
        let d = rng.gen_range(1..=16);
        ratio(rng.gen_range(1..=d), d)
    } else {
        ratio(rng.gen_range(1..=64), 64)
    };
    Level::new(r).expect("positive and at most 1")
}

/// A grade in `{0, 1/64, .., 1}`.
pub fn grade64(rng: &mut impl Rng) -> Grade {
    Grade::from_ratio(rng.gen_range(0..=64), 64).expect("in [0,1]")
}

/// Up to `max` distinct breakpoints below 1.
pub fn breakpoints(rng: &mut impl Rng, max: usize) -> Vec<Rational> {
    let n = rng.gen_range(0..=max);
    let mut out: Vec<Rational> = (0..n).map(|_| level(rng).into_inner()).filter(|b| *b < ratio(1, 1)).collect();
    out.sort();
    out.dedup();
    out
}

/// A step map with at most `max_breaks` interior breakpoints. Each atom copies
/// its left neighbour with probability 1/2, so pieces come with every mix of
/// open and closed ends.
pub fn step_map<V, R, F>(rng: &mut R, max_breaks: usize, mut value: F) -> StepMap<V>
where
    V: Clone + PartialEq,
    R: Rng,
    F: FnMut(&mut R) -> V,
{
    let mut breaks = breakpoints(rng, max_breaks);
    breaks.push(ratio(1, 1));
    let mut prev = value(rng);
    let mut gaps = Vec::with_capacity(breaks.len());
    let mut points = Vec::with_capacity(breaks.len());
    for _ in &breaks {
        for out in [&mut gaps, &mut points] {
            if rng.gen_bool(0.5) {
                prev = value(rng);
            }
            out.push(prev.clone());
        }
    }
    StepMap::from_atoms(breaks, gaps, points).expect("sorted breakpoints ending at 1")
}

pub fn element_set(rng: &mut impl Rng, universe: usize) -> ElementSet {
    let mut s = ElementSet::with_capacity(universe);
    for x in 0..universe {
        s.set(x, rng.gen_bool(0.5));
    }
    s
}

pub fn total_element(rng: &mut impl Rng, universe: usize, max_breaks: usize) -> TotalGradualElement<usize> {
    TotalGradualElement::new(step_map(rng, max_breaks, |r| r.gen_range(0..universe)))
}

/// An element that agrees with `base` on `[β, 1]` for a random level `β` and
/// is random below it.
pub fn coarsen_near(rng: &mut impl Rng, base: &TotalGradualElement<usize>, universe: usize) -> TotalGradualElement<usize> {
    let beta = level(rng).into_inner();
    let other = total_element(rng, universe, 3);
    let breaks = base
        .map()
        .breakpoints()
        .iter()
        .chain(other.map().breakpoints())
        .cloned()
        .chain([beta.clone()]);
    TotalGradualElement::new(StepMap::from_fn(breaks, |x| {
        if *x >= beta {
            *base.map().eval_at(x)
        } else {
            *other.map().eval_at(x)
        }
    }))
}

/// A random inf-compact set containing 1.
pub fn level_set(rng: &mut impl Rng, max_breaks: usize) -> LevelSet {
    let raw = step_map(rng, max_breaks, |r| r.gen_bool(0.6));
    let breaks = raw.breakpoints().to_vec();
    let k = breaks.len();
    let atoms: Vec<bool> = raw.values().copied().collect();
    let gaps: Vec<bool> = atoms.iter().copied().step_by(2).collect();
    let mut points: Vec<bool> = atoms.iter().copied().skip(1).step_by(2).collect();
    // a gap inside the set needs its lower end inside too
    for i in 1..k {
        if gaps[i] {
            points[i - 1] = true;
        }
    }
    points[k - 1] = true;
    LevelSet::from_indicator(StepMap::from_atoms(breaks, gaps, points).expect("valid atoms")).expect("repaired above")
}

pub fn partial_element(rng: &mut impl Rng, domain: &LevelSet, universe: usize, max_breaks: usize) -> PartialGradualElement<usize> {
    let total = total_element(rng, universe, max_breaks);
    let values = domain.indicator().zip(total.map(), |&inside, &v| inside.then_some(v));
    PartialGradualElement::from_values(values).expect("domain is a level set")
}

pub fn gradual_subset(rng: &mut impl Rng, universe: usize, max_breaks: usize) -> GradualSubset {
    let map = step_map(rng, max_breaks, |r| element_set(r, universe));
    GradualSubset::new(universe, map).expect("values sized to the universe")
}

/// A map `{0..n} -> {0..m}` as an image list.
pub fn function(rng: &mut impl Rng, n: usize, m: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..m)).collect()
}

/// Picks one item.
pub fn choose<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty choice")
}

pub fn fuzzy_subset(rng: &mut impl Rng, universe: usize) -> FuzzySubset {
    FuzzySubset::new((0..universe).map(|_| grade_small(rng)).collect())
}

/// A grade drawn from a small pool, so that distinct elements share grades.
fn grade_small(rng: &mut impl Rng) -> Grade {
    match rng.gen_range(0..4) {
        0 => Grade::zero(),
        1 => Grade::one(),
        _ => Grade::from(level(rng)),
    }
}

/// A gradual subset of `g` with no empty values.
pub fn nonempty_gradual_subset(rng: &mut impl Rng, g: &FiniteGroup, max_breaks: usize) -> GradualSubset {
    let map = step_map(rng, max_breaks, |r| {
        let mut s = element_set(r, g.order());
        if s.is_clear() || r.gen_bool(0.3) {
            // bias towards sets that are subgroups
            s = g.subgroup_generated(&s).into_members();
        }
        s
    });
    GradualSubset::new(g.order(), map).expect("values sized to the group")
}

pub fn gradual_subgroup(rng: &mut impl Rng, g: &Arc<FiniteGroup>, max_breaks: usize) -> GradualSubgroup {
    let subgroups = g.subgroups();
    let map = step_map(rng, max_breaks, |r| choose(r, &subgroups).clone());
    GradualSubgroup::new(g.clone(), map).expect("subgroups of g")
}

pub fn normal_gradual_subgroup(rng: &mut impl Rng, g: &Arc<FiniteGroup>, max_breaks: usize) -> GradualSubgroup {
    let normal = g.normal_subgroups();
    let map = step_map(rng, max_breaks, |r| choose(r, &normal).clone());
    GradualSubgroup::new(g.clone(), map).expect("subgroups of g")
}

/// A fuzzy subgroup built from a chain of subgroups `H1 ⊆ .. ⊆ Hk` with
/// strictly decreasing grades. The grade at `e` may be below 1.
pub fn fuzzy_subgroup(rng: &mut impl Rng, g: &Arc<FiniteGroup>) -> FuzzySubgroup {
    let subgroups = g.subgroups();
    let mut chain = vec![choose(rng, &subgroups).clone()];
    for _ in 0..rng.gen_range(0..4) {
        let next = g.join(chain.last().expect("nonempty"), choose(rng, &subgroups));
        if next != *chain.last().expect("nonempty") {
            chain.push(next);
        }
    }
    let mut grades: Vec<Grade> = (0..chain.len() + 1).map(|_| grade64(rng)).collect();
    grades.sort_by(|a, b| b.cmp(a));
    grades.dedup();
    if grades[0].is_zero() {
        grades[0] = Grade::one();
    }
    let mu = (0..g.order())
        .map(|x| match chain.iter().position(|h| h.contains(x)) {
            Some(i) if i < grades.len() => grades[i].clone(),
            _ => Grade::zero(),
        })
        .collect();
    FuzzySubgroup::new(g.clone(), FuzzySubset::new(mu)).expect("levels are the chain")
}

/// A directed set system on at most `max_breaks + 1` levels with objects of
/// at most `max_size` elements. With `injective`, sizes do not grow upwards
/// and every transition is injective.
pub fn directed_set_system(rng: &mut impl Rng, max_breaks: usize, max_size: usize, injective: bool) -> DirectedSetSystem {
    let mut levels = breakpoints(rng, max_breaks);
    levels.push(ratio(1, 1));
    let g = LevelGrid::from_levels(levels).expect("breakpoints in (0,1)");
    let n = g.cell_count();
    let mut sizes = vec![0; n];
    sizes[0] = rng.gen_range(1..=max_size);
    for c in 1..n {
        sizes[c] = if injective { rng.gen_range(0..=sizes[c - 1]) } else { rng.gen_range(1..=max_size) };
    }
    let transitions = (0..n - 1)
        .map(|c| {
            if injective {
                let mut pool: Vec<usize> = (0..sizes[c]).collect();
                pool.shuffle(rng);
                pool.truncate(sizes[c + 1]);
                pool
            } else {
                (0..sizes[c + 1]).map(|_| rng.gen_range(0..sizes[c])).collect()
            }
        })
        .collect();
    let objects = sizes.iter().map(|&s| (0..s).collect()).collect();
    DirectedSetSystem::new(g, objects, transitions).expect("shapes match")
}
