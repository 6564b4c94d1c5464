use num::{One, Zero};

use super::{fmt_rational, IntervalPiece, Level, Rational};
use crate::error::{Error, Result};

/// A total piecewise-constant map `(0,1] -> V`.
///
/// The map is stored over breakpoints `b_1 < ... < b_k = 1`. Each breakpoint
/// carries its own value and each open gap `(b_{i-1}, b_i)` (with `b_0 = 0`)
/// carries another, so open and closed endpoints are represented exactly.
///
/// Every constructor returns the canonical form: a breakpoint below 1 is kept
/// only when the map actually changes there. Two step maps are therefore
/// equal as functions iff they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepMap<V> {
    breaks: Vec<Rational>,
    gaps: Vec<V>,
    points: Vec<V>,
}

/// One cell of the finest partition of a step map: an open gap or a breakpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom<'a> {
    /// `(lo, hi)`, where `lo = None` stands for 0.
    Gap {
        lo: Option<&'a Rational>,
        hi: &'a Rational,
    },
    Point(&'a Rational),
}

impl Atom<'_> {
    /// A level inside the atom.
    pub fn probe(&self) -> Rational {
        match *self {
            Atom::Gap { lo, hi } => {
                let lo = lo.cloned().unwrap_or_else(Rational::zero);
                (lo + hi) / Rational::from_integer(2.into())
            }
            Atom::Point(p) => p.clone(),
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, Atom::Point(_))
    }

    pub fn lower(&self) -> Rational {
        match *self {
            Atom::Gap { lo, .. } => lo.cloned().unwrap_or_else(Rational::zero),
            Atom::Point(p) => p.clone(),
        }
    }

    pub fn upper(&self) -> &Rational {
        match *self {
            Atom::Gap { hi, .. } => hi,
            Atom::Point(p) => p,
        }
    }

    pub fn piece(&self) -> IntervalPiece {
        match *self {
            Atom::Gap { lo, hi } => IntervalPiece {
                lo: lo.cloned().unwrap_or_else(Rational::zero),
                hi: hi.clone(),
                lo_closed: false,
                hi_closed: false,
            },
            Atom::Point(p) => IntervalPiece {
                lo: p.clone(),
                hi: p.clone(),
                lo_closed: true,
                hi_closed: true,
            },
        }
    }
}

impl<V: Clone + PartialEq> StepMap<V> {
    pub fn constant(value: V) -> Self {
        StepMap {
            breaks: vec![Rational::one()],
            gaps: vec![value.clone()],
            points: vec![value],
        }
    }

    /// Builds a map from explicit breakpoints (strictly increasing, ending at 1),
    /// gap values and breakpoint values.
    pub fn from_atoms(breaks: Vec<Rational>, gaps: Vec<V>, points: Vec<V>) -> Result<Self> {
        if breaks.is_empty() || gaps.len() != breaks.len() || points.len() != breaks.len() {
            return Err(Error::NotPartition("atom lists have inconsistent lengths".into()));
        }
        if !breaks.last().is_some_and(One::is_one) {
            return Err(Error::NotPartition("last breakpoint must be 1".into()));
        }
        if !breaks[0].is_positive_level() {
            return Err(Error::NotPartition("breakpoints must lie in (0,1]".into()));
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotPartition("breakpoints must be strictly increasing".into()));
        }
        Ok(StepMap { breaks, gaps, points }.canonical())
    }

    /// Samples `f` once per atom of the partition induced by `breaks` (1 is
    /// added if missing). `f` must be constant on each open gap.
    pub fn from_fn<I, F>(breaks: I, mut f: F) -> Self
    where
        I: IntoIterator<Item = Rational>,
        F: FnMut(&Rational) -> V,
    {
        let mut breaks: Vec<Rational> = breaks
            .into_iter()
            .filter(|b| b.is_positive_level())
            .collect();
        breaks.push(Rational::one());
        breaks.sort();
        breaks.dedup();
        let mut gaps = Vec::with_capacity(breaks.len());
        let mut points = Vec::with_capacity(breaks.len());
        let mut lo = Rational::zero();
        for b in &breaks {
            let mid = (&lo + b) / Rational::from_integer(2.into());
            gaps.push(f(&mid));
            points.push(f(b));
            lo = b.clone();
        }
        StepMap { breaks, gaps, points }.canonical()
    }

    /// Builds a map from pieces that partition (0,1] exactly.
    pub fn from_pieces(mut pieces: Vec<(IntervalPiece, V)>) -> Result<Self> {
        for (p, _) in &pieces {
            p.validate()?;
        }
        pieces.sort_by(|(a, _), (b, _)| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let Some((first, _)) = pieces.first() else {
            return Err(Error::NotPartition("no pieces".into()));
        };
        if !first.lo.is_zero() {
            return Err(Error::NotPartition(format!("nothing covers levels below {first}")));
        }
        for w in pieces.windows(2) {
            let (a, b) = (&w[0].0, &w[1].0);
            if a.hi != b.lo || a.hi_closed == b.lo_closed {
                return Err(Error::NotPartition(format!("{a} and {b} are not adjacent")));
            }
        }
        let (last, _) = pieces.last().expect("nonempty");
        if !last.hi.is_one() || !last.hi_closed {
            return Err(Error::NotPartition(format!("{last} does not end at 1]")));
        }
        let breaks = pieces
            .iter()
            .flat_map(|(p, _)| [p.lo.clone(), p.hi.clone()])
            .collect::<Vec<_>>();
        Ok(Self::from_fn(breaks, |x| {
            let idx = pieces.partition_point(|(p, _)| p.hi < *x || (p.hi == *x && !p.hi_closed));
            pieces[idx].1.clone()
        }))
    }

    /// Re-derives the canonical form. Every constructor already returns
    /// canonical maps, so this is the identity on any value of this type.
    pub fn canonicalize(self) -> Self {
        self.canonical()
    }

    fn canonical(self) -> Self {
        let k = self.breaks.len();
        if (0..k - 1).all(|i| !self.removable(i)) {
            return self;
        }
        let keep: Vec<bool> = (0..k).map(|i| i == k - 1 || !self.removable(i)).collect();
        // dropping breakpoint i also drops gap i, which equals gap i + 1
        let StepMap { breaks, gaps, points } = self;
        StepMap {
            breaks: pick(breaks, &keep),
            gaps: pick(gaps, &keep),
            points: pick(points, &keep),
        }
    }

    fn removable(&self, i: usize) -> bool {
        self.gaps[i] == self.points[i] && self.points[i] == self.gaps[i + 1]
    }

    pub fn is_canonical(&self) -> bool {
        (0..self.breaks.len() - 1).all(|i| !self.removable(i))
    }

    /// Breakpoints `b_1 < ... < b_k = 1` of the canonical form.
    pub fn breakpoints(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn eval(&self, alpha: &Level) -> &V {
        self.eval_at(alpha.value())
    }

    /// Value at a raw rational level. Panics unless `0 < x <= 1`.
    pub fn eval_at(&self, x: &Rational) -> &V {
        assert!(x.is_positive_level(), "level {} outside (0,1]", fmt_rational(x));
        let i = self.breaks.partition_point(|b| b < x);
        if self.breaks[i] == *x {
            &self.points[i]
        } else {
            &self.gaps[i]
        }
    }

    pub fn at_one(&self) -> &V {
        self.points.last().expect("nonempty")
    }

    /// Value on the open gap just below breakpoint `b` of this map or of any
    /// refinement of it.
    fn below(&self, x: &Rational) -> &V {
        let i = self.breaks.partition_point(|b| b < x);
        &self.gaps[i]
    }

    pub fn atom_count(&self) -> usize {
        2 * self.breaks.len()
    }

    /// Atoms in increasing order: gap, point, gap, point, ..., `{1}`.
    pub fn atoms(&self) -> impl Iterator<Item = (Atom<'_>, &V)> + '_ {
        (0..self.breaks.len()).flat_map(move |i| {
            let lo = if i == 0 { None } else { Some(&self.breaks[i - 1]) };
            [
                (Atom::Gap { lo, hi: &self.breaks[i] }, &self.gaps[i]),
                (Atom::Point(&self.breaks[i]), &self.points[i]),
            ]
        })
    }

    pub fn values(&self) -> impl Iterator<Item = &V> + '_ {
        self.atoms().map(|(_, v)| v)
    }

    /// Maximal intervals of constancy, in increasing order.
    pub fn pieces(&self) -> Vec<(IntervalPiece, V)> {
        let mut out: Vec<(IntervalPiece, V)> = Vec::new();
        for (atom, v) in self.atoms() {
            let piece = atom.piece();
            match out.last_mut() {
                Some((last, lv)) if lv == v => {
                    last.hi = piece.hi;
                    last.hi_closed = piece.hi_closed;
                }
                _ => out.push((piece, v.clone())),
            }
        }
        out
    }

    pub fn map<U, F>(&self, mut f: F) -> StepMap<U>
    where
        U: Clone + PartialEq,
        F: FnMut(&V) -> U,
    {
        StepMap {
            breaks: self.breaks.clone(),
            gaps: self.gaps.iter().map(&mut f).collect(),
            points: self.points.iter().map(&mut f).collect(),
        }
        .canonical()
    }

    pub fn try_map<U, E, F>(&self, mut f: F) -> std::result::Result<StepMap<U>, E>
    where
        U: Clone + PartialEq,
        F: FnMut(&V) -> std::result::Result<U, E>,
    {
        Ok(StepMap {
            breaks: self.breaks.clone(),
            gaps: self.gaps.iter().map(&mut f).collect::<std::result::Result<_, _>>()?,
            points: self.points.iter().map(&mut f).collect::<std::result::Result<_, _>>()?,
        }
        .canonical())
    }

    /// Pointwise combination over the common refinement of both partitions.
    pub fn zip<W, U, F>(&self, other: &StepMap<W>, mut f: F) -> StepMap<U>
    where
        W: Clone + PartialEq,
        U: Clone + PartialEq,
        F: FnMut(&V, &W) -> U,
    {
        let mut breaks = Vec::with_capacity(self.breaks.len() + other.breaks.len());
        let (mut i, mut j) = (0, 0);
        while i < self.breaks.len() && j < other.breaks.len() {
            match self.breaks[i].cmp(&other.breaks[j]) {
                std::cmp::Ordering::Less => {
                    breaks.push(self.breaks[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    breaks.push(other.breaks[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    breaks.push(self.breaks[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        let gaps = breaks.iter().map(|b| f(self.below(b), other.below(b))).collect();
        let points = breaks.iter().map(|b| f(self.eval_at(b), other.eval_at(b))).collect();
        StepMap { breaks, gaps, points }.canonical()
    }

    /// True when `pred` holds for some value taken on `[alpha, 1]`
    /// (on all of (0,1] when `alpha <= 0`).
    pub fn any_at_or_above<F: FnMut(&V) -> bool>(&self, alpha: &Rational, mut pred: F) -> bool {
        self.atoms()
            .filter(|(atom, _)| match atom {
                Atom::Gap { hi, .. } => *hi > alpha,
                Atom::Point(p) => *p >= alpha,
            })
            .any(|(_, v)| pred(v))
    }

    /// `r(a) = join(v(a), r(next atom))`: at each level, the join of all
    /// values on `[alpha, 1]`.
    pub fn accumulate<F: FnMut(&V, &V) -> V>(&self, join: F) -> Self {
        let (gaps, points) = self.suffix_join(join);
        StepMap {
            breaks: self.breaks.clone(),
            gaps,
            points,
        }
        .canonical()
    }

    /// At each level `alpha < 1`, the join of all values on `(alpha, 1]`;
    /// at 1 the value at 1.
    pub fn strict_accumulate<F: FnMut(&V, &V) -> V>(&self, join: F) -> Self {
        let (gaps, inclusive_points) = self.suffix_join(join);
        let k = self.breaks.len();
        // a breakpoint below 1 sees everything from the following gap upwards
        let points = (0..k)
            .map(|i| {
                if i + 1 < k {
                    gaps[i + 1].clone()
                } else {
                    inclusive_points[i].clone()
                }
            })
            .collect();
        StepMap {
            breaks: self.breaks.clone(),
            gaps,
            points,
        }
        .canonical()
    }

    /// Replaces the value at each breakpoint below 1 by the value on the gap
    /// just below it. The value at 1 is kept.
    pub fn left_limits(&self) -> Self {
        let k = self.breaks.len();
        let points = (0..k)
            .map(|i| if i + 1 < k { self.gaps[i].clone() } else { self.points[i].clone() })
            .collect();
        StepMap {
            breaks: self.breaks.clone(),
            gaps: self.gaps.clone(),
            points,
        }
        .canonical()
    }

    fn suffix_join<F: FnMut(&V, &V) -> V>(&self, mut join: F) -> (Vec<V>, Vec<V>) {
        let k = self.breaks.len();
        let mut gaps = self.gaps.clone();
        let mut points = self.points.clone();
        for i in (0..k).rev() {
            if i + 1 < k {
                points[i] = join(&self.points[i], &gaps[i + 1]);
            }
            gaps[i] = join(&self.gaps[i], &points[i]);
        }
        (gaps, points)
    }
}

fn pick<T>(v: Vec<T>, keep: &[bool]) -> Vec<T> {
    v.into_iter()
        .zip(keep)
        .filter_map(|(x, &k)| k.then_some(x))
        .collect()
}

trait PositiveLevel {
    fn is_positive_level(&self) -> bool;
}

impl PositiveLevel for Rational {
    fn is_positive_level(&self) -> bool {
        *self > Rational::zero() && *self <= Rational::one()
    }
}
