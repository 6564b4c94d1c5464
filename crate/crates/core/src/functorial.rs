//! Gradual sets and groups as contravariant functors on a finite level grid.
//!
//! A grid `b_0 < .. < b_{k-1} = 1` splits (0,1] into `2k` cells: the open
//! interval just below each `b_i` (cell `2i`) and the point `b_i` itself
//! (cell `2i + 1`). A system assigns an object to every cell and, for each
//! pair of adjacent cells `c < c + 1`, a transition `F(c + 1) -> F(c)`. Every
//! step map whose breakpoints lie on the grid is constant on cells, so the
//! finite system carries the same information as the functor on (0,1].

use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, GroupHom};
use crate::gradual_group::GradualSubgroup;
use crate::gradual_subset::{GradualSubset, IntoElementSet};
use crate::level_core::{fmt_rational, Rational, StepMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelGrid {
    breaks: Vec<Rational>,
}

impl LevelGrid {
    /// Strictly increasing levels in (0,1] ending at 1.
    pub fn new(levels: Vec<Rational>) -> Result<Self> {
        if !levels.last().is_some_and(One::is_one) {
            return Err(Error::InvalidGrid("last level must be 1".into()));
        }
        if levels[0] <= Rational::zero() {
            return Err(Error::InvalidGrid("levels must be positive".into()));
        }
        if levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("levels must be strictly increasing".into()));
        }
        Ok(LevelGrid { breaks: levels })
    }

    /// The grid of the given levels, sorted, deduplicated and with 1 added.
    pub fn from_levels(levels: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut breaks: Vec<Rational> = levels.into_iter().chain([Rational::one()]).collect();
        breaks.sort();
        breaks.dedup();
        Self::new(breaks)
    }

    pub fn of_map<V: Clone + PartialEq>(map: &StepMap<V>) -> Self {
        LevelGrid {
            breaks: map.breakpoints().to_vec(),
        }
    }

    pub fn levels(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn cell_count(&self) -> usize {
        2 * self.breaks.len()
    }

    pub fn top(&self) -> usize {
        self.cell_count() - 1
    }

    /// A level inside cell `c`.
    pub fn probe(&self, c: usize) -> Rational {
        let i = c / 2;
        if c % 2 == 1 {
            return self.breaks[i].clone();
        }
        let lo = if i == 0 { Rational::zero() } else { self.breaks[i - 1].clone() };
        (lo + &self.breaks[i]) / Rational::from_integer(2.into())
    }

    /// The cell containing `level`, which must lie in (0,1].
    pub fn cell_of(&self, level: &Rational) -> usize {
        let i = self.breaks.partition_point(|b| b < level);
        if self.breaks[i] == *level {
            2 * i + 1
        } else {
            2 * i
        }
    }

    pub fn contains_all(&self, levels: &[Rational]) -> std::result::Result<(), Rational> {
        match levels.iter().find(|b| self.breaks.binary_search(b).is_err()) {
            Some(b) => Err(b.clone()),
            None => Ok(()),
        }
    }

    pub fn refine(&self, other: &LevelGrid) -> LevelGrid {
        Self::from_levels(self.breaks.iter().chain(&other.breaks).cloned()).expect("union of grids")
    }

    /// The cell below which `F^d` reads its value: `(α, 1]` starts in the same
    /// gap for a gap cell and in the next gap for a point below 1.
    fn interior_index(&self, c: usize) -> usize {
        if c % 2 == 1 && c != self.top() {
            c + 1
        } else {
            c
        }
    }

    fn cell_name(&self, c: usize) -> String {
        let i = c / 2;
        if c % 2 == 1 {
            format!("{{{}}}", fmt_rational(&self.breaks[i]))
        } else {
            let lo = if i == 0 { "0".to_string() } else { fmt_rational(&self.breaks[i - 1]) };
            format!("({lo},{})", fmt_rational(&self.breaks[i]))
        }
    }

    fn step_map<V: Clone + PartialEq>(&self, cells: Vec<V>) -> StepMap<V> {
        let gaps = cells.iter().step_by(2).cloned().collect();
        let points = cells.into_iter().skip(1).step_by(2).collect();
        StepMap::from_atoms(self.breaks.clone(), gaps, points).expect("grid breakpoints")
    }
}

impl fmt::Display for LevelGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.breaks.iter().map(fmt_rational).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A directed system of finite sets. Objects are lists of labels; transitions
/// are index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedSetSystem {
    grid: LevelGrid,
    objects: Vec<Vec<usize>>,
    transitions: Vec<Vec<usize>>,
}

impl DirectedSetSystem {
    /// `transitions[c]` maps positions of `objects[c + 1]` to positions of `objects[c]`.
    pub fn new(grid: LevelGrid, objects: Vec<Vec<usize>>, transitions: Vec<Vec<usize>>) -> Result<Self> {
        let n = grid.cell_count();
        if objects.len() != n || transitions.len() != n - 1 {
            return Err(Error::InvalidSystem(format!(
                "expected {n} objects and {} transitions, found {} and {}",
                n - 1,
                objects.len(),
                transitions.len()
            )));
        }
        for (c, t) in transitions.iter().enumerate() {
            if t.len() != objects[c + 1].len() || t.iter().any(|&x| x >= objects[c].len()) {
                return Err(Error::InvalidSystem(format!(
                    "transition {} -> {} does not match its objects",
                    grid.cell_name(c + 1),
                    grid.cell_name(c)
                )));
            }
        }
        Ok(DirectedSetSystem {
            grid,
            objects,
            transitions,
        })
    }

    /// A system given on the grid levels only: each open gap carries the
    /// object of the level above it.
    pub fn from_levels(grid: LevelGrid, objects: Vec<Vec<usize>>, transitions: Vec<Vec<usize>>) -> Result<Self> {
        let k = grid.levels().len();
        if objects.len() != k || transitions.len() + 1 != k {
            return Err(Error::InvalidSystem("one object per level and one transition per adjacent pair".into()));
        }
        let cells = objects.iter().flat_map(|o| [o.clone(), o.clone()]).collect();
        let mut steps = Vec::with_capacity(2 * k - 1);
        for (i, o) in objects.iter().enumerate() {
            steps.push((0..o.len()).collect());
            if i + 1 < k {
                steps.push(transitions[i].clone());
            }
        }
        Self::new(grid, cells, steps)
    }

    pub fn constant(grid: LevelGrid, size: usize) -> Self {
        let n = grid.cell_count();
        DirectedSetSystem {
            grid,
            objects: vec![(0..size).collect(); n],
            transitions: vec![(0..size).collect(); n - 1],
        }
    }

    pub fn grid(&self) -> &LevelGrid {
        &self.grid
    }

    pub fn objects(&self) -> &[Vec<usize>] {
        &self.objects
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    /// `F(f_{lo,hi}): F(hi) -> F(lo)` for cells `lo <= hi`.
    pub fn composite(&self, lo: usize, hi: usize) -> Vec<usize> {
        assert!(lo <= hi, "contravariant maps go downwards");
        (lo..hi).rev().fold((0..self.objects[hi].len()).collect(), |acc: Vec<usize>, c| {
            acc.into_iter().map(|x| self.transitions[c][x]).collect()
        })
    }

    /// Checks stored maps `F(f_{lo,hi})` against the composites of adjacent
    /// transitions; `lo == hi` must be the identity.
    pub fn validate(&self, stored: &[(usize, usize, Vec<usize>)]) -> Result<()> {
        for (lo, hi, map) in stored {
            if lo > hi || *hi >= self.grid.cell_count() {
                return Err(Error::InvalidSystem(format!("no arrow from cell {hi} to cell {lo}")));
            }
            if *map != self.composite(*lo, *hi) {
                return Err(Error::InvalidSystem(format!(
                    "map {} -> {} is not the composite of the transitions between them",
                    self.grid.cell_name(*hi),
                    self.grid.cell_name(*lo)
                )));
            }
        }
        Ok(())
    }

    pub fn is_decreasing(&self) -> bool {
        self.transitions.iter().all(|t| is_injective(t))
    }

    fn require_decreasing(&self) -> Result<()> {
        if self.is_decreasing() {
            Ok(())
        } else {
            Err(Error::NotDecreasing)
        }
    }

    /// The direct limit: the disjoint union of all objects modulo the
    /// relation generated by `x ~ F(f)(x)`.
    pub fn colimit(&self) -> ColimitResult {
        let offsets: Vec<usize> = self
            .objects
            .iter()
            .scan(0, |acc, o| {
                let start = *acc;
                *acc += o.len();
                Some(start)
            })
            .collect();
        let total = offsets.last().map_or(0, |s| s + self.objects.last().map_or(0, Vec::len));
        let mut uf = UnionFind::new(total);
        for (c, t) in self.transitions.iter().enumerate() {
            for (x, &y) in t.iter().enumerate() {
                uf.union(offsets[c + 1] + x, offsets[c] + y);
            }
        }
        let mut class_of_root = vec![usize::MAX; total];
        let mut carrier = 0;
        let maps = self
            .objects
            .iter()
            .enumerate()
            .map(|(c, o)| {
                (0..o.len())
                    .map(|x| {
                        let r = uf.find(offsets[c] + x);
                        if class_of_root[r] == usize::MAX {
                            class_of_root[r] = carrier;
                            carrier += 1;
                        }
                        class_of_root[r]
                    })
                    .collect()
            })
            .collect();
        let result = ColimitResult { carrier, maps };
        debug_assert!(result.is_cocone_of(self));
        result
    }

    /// `F^d(α) = dlim_{(α,1]} F`: the object of the gap above a point below 1,
    /// unchanged elsewhere.
    pub fn interior_d(&self) -> Result<DirectedSetSystem> {
        self.require_decreasing()?;
        let n = self.grid.cell_count();
        let s: Vec<usize> = (0..n).map(|c| self.grid.interior_index(c)).collect();
        let objects = s.iter().map(|&c| self.objects[c].clone()).collect();
        let transitions = (0..n - 1).map(|c| self.composite(s[c], s[c + 1])).collect();
        Self::new(self.grid.clone(), objects, transitions)
    }

    /// `D = F(1) ⊔ ⨆_{b < 1} (F(b) ∖ F^d(b))` inside the direct limit.
    pub fn has_property_f(&self) -> Result<bool> {
        self.require_decreasing()?;
        let colimit = self.colimit();
        let image = |c: usize| colimit.maps[c].iter().copied().into_element_set(colimit.carrier);
        let top = self.grid.top();
        let mut parts = vec![image(top)];
        for c in (1..top).step_by(2) {
            let mut part = image(c);
            part.difference_with(&image(c + 1));
            parts.push(part);
        }
        let mut seen = crate::ElementSet::with_capacity(colimit.carrier);
        for p in &parts {
            if !seen.is_disjoint(p) {
                return Ok(false);
            }
            seen.union_with(p);
        }
        Ok(seen.count_ones(..) == colimit.carrier)
    }

    /// Isomorphism over the identity of the grid. Decreasing systems are
    /// chains of inclusions, so they are isomorphic exactly when their
    /// objects have the same sizes.
    pub fn is_isomorphic(&self, other: &DirectedSetSystem) -> Result<bool> {
        self.require_decreasing()?;
        other.require_decreasing()?;
        Ok(self.grid == other.grid && self.objects.iter().map(Vec::len).eq(other.objects.iter().map(Vec::len)))
    }

    /// The system of a decreasing gradual subset: objects are the values,
    /// transitions the inclusions.
    pub fn from_subset(sigma: &GradualSubset, grid: &LevelGrid) -> Result<Self> {
        if !sigma.is_decreasing() {
            return Err(Error::NotDecreasing);
        }
        grid.contains_all(sigma.map().breakpoints())
            .map_err(|b| Error::GridTooCoarse(fmt_rational(&b)))?;
        let objects: Vec<Vec<usize>> = (0..grid.cell_count())
            .map(|c| sigma.map().eval_at(&grid.probe(c)).ones().collect())
            .collect();
        let transitions = (0..grid.cell_count() - 1)
            .map(|c| {
                objects[c + 1]
                    .iter()
                    .map(|x| objects[c].binary_search(x).expect("values decrease"))
                    .collect()
            })
            .collect();
        Self::new(grid.clone(), objects, transitions)
    }

    /// `α ↦ q_α(F(α))` as a gradual subset of the direct limit.
    pub fn to_subset(&self) -> (GradualSubset, ColimitResult) {
        let colimit = self.colimit();
        let values = colimit
            .maps
            .iter()
            .map(|q| q.iter().copied().into_element_set(colimit.carrier))
            .collect();
        let sigma = GradualSubset::new(colimit.carrier, self.grid.step_map(values)).expect("sized to the carrier");
        (sigma, colimit)
    }

    /// [`to_subset`](Self::to_subset) with each limit element named by the
    /// label its representatives carry.
    pub fn labelled_subset(&self, universe: usize) -> Result<GradualSubset> {
        let (sigma, colimit) = self.to_subset();
        let mut label = vec![None; colimit.carrier];
        for (c, q) in colimit.maps.iter().enumerate() {
            for (x, &d) in q.iter().enumerate() {
                let l = self.objects[c][x];
                if l >= universe {
                    return Err(Error::UnknownElement(l));
                }
                if *label[d].get_or_insert(l) != l {
                    return Err(Error::InvalidSystem("identified elements carry different labels".into()));
                }
            }
        }
        let f: Vec<usize> = label.into_iter().map(|l| l.expect("every class has a member")).collect();
        sigma.direct_image(&f, universe)
    }

    /// The same system on a finer grid: new cells copy the object of the old
    /// cell containing them, with identities inside an old cell.
    pub fn refine(&self, finer: &LevelGrid) -> Result<DirectedSetSystem> {
        finer
            .contains_all(self.grid.levels())
            .map_err(|b| Error::GridTooCoarse(fmt_rational(&b)))?;
        let old: Vec<usize> = (0..finer.cell_count()).map(|c| self.grid.cell_of(&finer.probe(c))).collect();
        let objects = old.iter().map(|&c| self.objects[c].clone()).collect();
        let transitions = (0..finer.cell_count() - 1).map(|c| self.composite(old[c], old[c + 1])).collect();
        Self::new(finer.clone(), objects, transitions)
    }

    /// Some system whose objects have the elements of `sigma`'s values, when
    /// one exists: the transition into an empty object from a nonempty one
    /// cannot be defined.
    pub fn from_values(sigma: &GradualSubset, grid: &LevelGrid) -> std::result::Result<Self, Obstruction> {
        grid.contains_all(sigma.map().breakpoints()).map_err(|_| Obstruction::GridTooCoarse)?;
        let objects: Vec<Vec<usize>> = (0..grid.cell_count())
            .map(|c| sigma.map().eval_at(&grid.probe(c)).ones().collect())
            .collect();
        let mut transitions = Vec::with_capacity(objects.len() - 1);
        for c in 0..objects.len() - 1 {
            let (lower, upper) = (&objects[c], &objects[c + 1]);
            if lower.is_empty() && !upper.is_empty() {
                return Err(Obstruction::NoMapToEmpty {
                    upper: grid.cell_name(c + 1),
                    lower: grid.cell_name(c),
                });
            }
            // keep an element where it is when possible
            transitions.push(upper.iter().map(|x| lower.binary_search(x).unwrap_or(0)).collect());
        }
        Ok(Self::new(grid.clone(), objects, transitions).expect("shapes match"))
    }
}

/// Why a gradual subset is not the object part of any directed system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    NoMapToEmpty { upper: String, lower: String },
    GridTooCoarse,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::NoMapToEmpty { upper, lower } => {
                write!(f, "the value on {upper} is nonempty but the value on {lower} is empty, and there is no map into the empty set")
            }
            Obstruction::GridTooCoarse => write!(f, "grid does not contain every breakpoint"),
        }
    }
}

/// `σ(1/2) = X = {a}` and `σ(α) = ∅` otherwise, with the obstruction found
/// on the grid {1/2, 1}.
pub fn non_representable_witness() -> (GradualSubset, Obstruction) {
    let half = crate::level_core::ratio(1, 2);
    let sigma = GradualSubset::new(
        1,
        StepMap::from_fn([half.clone()], |a| (*a == half).then_some(0).into_iter().into_element_set(1)),
    )
    .expect("one-element ground set");
    let grid = LevelGrid::from_levels([half]).expect("valid grid");
    let obstruction = DirectedSetSystem::from_values(&sigma, &grid).expect_err("nonempty above empty");
    (sigma, obstruction)
}

/// A direct limit: the carrier `{0, .., carrier-1}` and the maps `q_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColimitResult {
    pub carrier: usize,
    pub maps: Vec<Vec<usize>>,
}

impl ColimitResult {
    /// `q_{c+1} = q_c ∘ F(f_{c,c+1})` for every adjacent pair.
    pub fn is_cocone_of(&self, system: &DirectedSetSystem) -> bool {
        is_cocone(system, &self.maps, self.carrier)
    }

    /// The unique `u` with `u ∘ q_c = t_c`, for a cocone `t` into `{0..target}`.
    pub fn mediate(&self, system: &DirectedSetSystem, cocone: &[Vec<usize>], target: usize) -> Result<Vec<usize>> {
        if !is_cocone(system, cocone, target) {
            return Err(Error::NotCocone("maps do not commute with the transitions".into()));
        }
        let mut u = vec![None; self.carrier];
        for (q, t) in self.maps.iter().zip(cocone) {
            for (&d, &y) in q.iter().zip(t) {
                if *u[d].get_or_insert(y) != y {
                    return Err(Error::NotCocone("identified elements have different images".into()));
                }
            }
        }
        Ok(u.into_iter().map(|y| y.expect("every class has a member")).collect())
    }
}

fn is_cocone(system: &DirectedSetSystem, maps: &[Vec<usize>], target: usize) -> bool {
    maps.len() == system.objects.len()
        && maps.iter().zip(&system.objects).all(|(m, o)| m.len() == o.len() && m.iter().all(|&y| y < target))
        && system
            .transitions
            .iter()
            .enumerate()
            .all(|(c, t)| t.iter().enumerate().all(|(x, &y)| maps[c + 1][x] == maps[c][y]))
}

fn is_injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|x| seen.insert(x))
}

/// Per-cell maps `θ_c: F(c) -> G(c)` commuting with the transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalTransformation {
    components: Vec<Vec<usize>>,
}

impl NaturalTransformation {
    pub fn new(from: &DirectedSetSystem, to: &DirectedSetSystem, components: Vec<Vec<usize>>) -> Result<Self> {
        if from.grid != to.grid || components.len() != from.objects.len() {
            return Err(Error::InvalidSystem("systems and components do not share a grid".into()));
        }
        for (c, theta) in components.iter().enumerate() {
            if theta.len() != from.objects[c].len() || theta.iter().any(|&y| y >= to.objects[c].len()) {
                return Err(Error::InvalidSystem(format!("component on {} has the wrong shape", from.grid.cell_name(c))));
            }
        }
        for c in 0..components.len() - 1 {
            let commutes = (0..from.objects[c + 1].len())
                .all(|x| components[c][from.transitions[c][x]] == to.transitions[c][components[c + 1][x]]);
            if !commutes {
                return Err(Error::LawViolated(format!("naturality square at {} fails", from.grid.cell_name(c))));
            }
        }
        Ok(NaturalTransformation { components })
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `θ^d`, the components of `θ` read at the cells `F^d` reads from.
    pub fn interior_d(&self, from: &DirectedSetSystem, to: &DirectedSetSystem) -> Result<Self> {
        let components = (0..self.components.len())
            .map(|c| self.components[from.grid.interior_index(c)].clone())
            .collect();
        Self::new(&from.interior_d()?, &to.interior_d()?, components)
    }
}

/// A directed system of finite groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGroupSystem {
    grid: LevelGrid,
    objects: Vec<Arc<FiniteGroup>>,
    transitions: Vec<GroupHom>,
}

impl DirectedGroupSystem {
    pub fn new(grid: LevelGrid, objects: Vec<Arc<FiniteGroup>>, transitions: Vec<GroupHom>) -> Result<Self> {
        let n = grid.cell_count();
        if objects.len() != n || transitions.len() != n - 1 {
            return Err(Error::InvalidSystem(format!("expected {n} groups and {} homomorphisms", n - 1)));
        }
        for (c, h) in transitions.iter().enumerate() {
            if h.source() != &objects[c + 1] || h.target() != &objects[c] {
                return Err(Error::InvalidSystem(format!(
                    "homomorphism {} -> {} does not match its groups",
                    grid.cell_name(c + 1),
                    grid.cell_name(c)
                )));
            }
        }
        Ok(DirectedGroupSystem {
            grid,
            objects,
            transitions,
        })
    }

    /// A system given on the grid levels only, as in [`DirectedSetSystem::from_levels`].
    pub fn from_levels(grid: LevelGrid, objects: Vec<Arc<FiniteGroup>>, transitions: Vec<GroupHom>) -> Result<Self> {
        let k = grid.levels().len();
        if objects.len() != k || transitions.len() + 1 != k {
            return Err(Error::InvalidSystem("one group per level and one homomorphism per adjacent pair".into()));
        }
        let cells = objects.iter().flat_map(|g| [g.clone(), g.clone()]).collect();
        let mut steps = Vec::with_capacity(2 * k - 1);
        for (i, g) in objects.iter().enumerate() {
            steps.push(GroupHom::identity(g.clone()));
            if i + 1 < k {
                steps.push(transitions[i].clone());
            }
        }
        Self::new(grid, cells, steps)
    }

    /// The system of a decreasing gradual subgroup, with inclusions as transitions.
    pub fn from_gradual_subgroup(sigma: &GradualSubgroup, grid: &LevelGrid) -> Result<Self> {
        if !sigma.is_decreasing() {
            return Err(Error::NotDecreasing);
        }
        grid.contains_all(sigma.map().breakpoints())
            .map_err(|b| Error::GridTooCoarse(fmt_rational(&b)))?;
        let g = sigma.group();
        let levels: Vec<_> = (0..grid.cell_count())
            .map(|c| g.subgroup_as_group(sigma.map().eval_at(&grid.probe(c))))
            .collect();
        let objects: Vec<_> = levels.iter().map(|(h, _)| h.clone()).collect();
        let transitions = (0..grid.cell_count() - 1)
            .map(|c| {
                let (upper, lower) = (&levels[c + 1].1, &levels[c].1);
                let images = (0..upper.source().order())
                    .map(|x| {
                        let y = upper.apply(x);
                        lower.images().iter().position(|&z| z == y).expect("values decrease")
                    })
                    .collect();
                GroupHom::new(objects[c + 1].clone(), objects[c].clone(), images)
            })
            .collect::<Result<_>>()?;
        Self::new(grid.clone(), objects, transitions)
    }

    pub fn grid(&self) -> &LevelGrid {
        &self.grid
    }

    pub fn objects(&self) -> &[Arc<FiniteGroup>] {
        &self.objects
    }

    pub fn transitions(&self) -> &[GroupHom] {
        &self.transitions
    }

    pub fn composite(&self, lo: usize, hi: usize) -> GroupHom {
        assert!(lo <= hi, "contravariant maps go downwards");
        (lo..hi)
            .rev()
            .fold(GroupHom::identity(self.objects[hi].clone()), |acc, c| {
                acc.then(&self.transitions[c]).expect("adjacent transitions compose")
            })
    }

    pub fn is_decreasing(&self) -> bool {
        self.transitions.iter().all(GroupHom::is_injective)
    }

    /// Over a finite chain the lowest cell is terminal for the cocone, so the
    /// direct limit is `F(c_0)` with `q_c = F(f_{0,c})`.
    pub fn colimit(&self) -> GroupColimit {
        let maps: Vec<GroupHom> = (0..self.objects.len()).map(|c| self.composite(0, c)).collect();
        let result = GroupColimit {
            carrier: self.objects[0].clone(),
            maps,
        };
        debug_assert!(result.is_cocone_of(self));
        result
    }

    /// The underlying system of sets.
    pub fn underlying(&self) -> DirectedSetSystem {
        DirectedSetSystem {
            grid: self.grid.clone(),
            objects: self.objects.iter().map(|g| (0..g.order()).collect()).collect(),
            transitions: self.transitions.iter().map(|h| h.images().to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupColimit {
    pub carrier: Arc<FiniteGroup>,
    pub maps: Vec<GroupHom>,
}

impl GroupColimit {
    pub fn is_cocone_of(&self, system: &DirectedGroupSystem) -> bool {
        self.maps.iter().all(|q| q.target() == &self.carrier)
            && system
                .transitions
                .iter()
                .enumerate()
                .all(|(c, t)| t.then(&self.maps[c]).is_ok_and(|h| h == self.maps[c + 1]))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
