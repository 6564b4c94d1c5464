use super::{IntervalPiece, Level, Rational, StepMap};
use crate::error::{Error, Result};

/// An inf-compact subset of (0,1] containing 1: `Min([alpha,1] ∩ L)` exists
/// for every level `alpha`.
///
/// Representable sets are finite unions of singletons, left-closed intervals
/// and intervals starting at 0 (open there, since 0 is not a level).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelSet {
    indicator: StepMap<bool>,
}

impl LevelSet {
    /// Validates and canonicalizes a list of pieces.
    pub fn new(pieces: Vec<IntervalPiece>) -> Result<Self> {
        for p in &pieces {
            p.validate()?;
        }
        let mut sorted = pieces.clone();
        sorted.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        for w in sorted.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            if a.hi > b.lo || (a.hi == b.lo && a.hi_closed && b.lo_closed) {
                return Err(Error::Overlap(format!("{a} and {b}")));
            }
        }
        let breaks = pieces.iter().flat_map(|p| [p.lo.clone(), p.hi.clone()]);
        let indicator = StepMap::from_fn(breaks, |x| sorted.iter().any(|p| p.contains(x)));
        Self::from_indicator(indicator)
    }

    /// Wraps an indicator map, checking that 1 belongs to the set and that the
    /// set is inf-compact.
    pub fn from_indicator(indicator: StepMap<bool>) -> Result<Self> {
        if !*indicator.at_one() {
            return Err(Error::MissingOne);
        }
        // a gap (b, c) inside the set with b > 0 needs b itself in the set
        let atoms: Vec<_> = indicator.atoms().collect();
        for w in atoms.windows(2) {
            let ((prev, &prev_in), (atom, &inside)) = (w[0], w[1]);
            if inside && !atom.is_point() && !prev_in {
                return Err(Error::NotInfCompact(super::fmt_rational(&prev.lower())));
            }
        }
        Ok(LevelSet { indicator })
    }

    /// The whole of (0,1].
    pub fn full() -> Self {
        LevelSet {
            indicator: StepMap::constant(true),
        }
    }

    /// `{1}`.
    pub fn top() -> Self {
        LevelSet {
            indicator: StepMap::from_fn([], |x| x == &Rational::from_integer(1.into())),
        }
    }

    pub fn contains(&self, alpha: &Level) -> bool {
        *self.indicator.eval(alpha)
    }

    pub fn indicator(&self) -> &StepMap<bool> {
        &self.indicator
    }

    pub fn pieces(&self) -> Vec<IntervalPiece> {
        self.indicator
            .pieces()
            .into_iter()
            .filter_map(|(p, inside)| inside.then_some(p))
            .collect()
    }

    /// `Min([alpha, 1] ∩ L)`.
    pub fn min_at_or_above(&self, alpha: &Level) -> Level {
        if self.contains(alpha) {
            return alpha.clone();
        }
        let (atom, _) = self
            .indicator
            .atoms()
            .find(|(atom, &inside)| inside && atom.lower() >= *alpha.value())
            .expect("1 belongs to every level set");
        debug_assert!(atom.is_point());
        Level::new(atom.lower()).expect("atom lies in (0,1]")
    }

    pub fn intersect(&self, other: &LevelSet) -> LevelSet {
        LevelSet {
            indicator: self.indicator.zip(&other.indicator, |a, b| *a && *b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level_core::ratio;

    fn lvl(n: i64, d: i64) -> Level {
        Level::from_ratio(n, d).unwrap()
    }

    fn eps1_domain() -> LevelSet {
        LevelSet::new(vec![
            IntervalPiece::closed(ratio(1, 10), ratio(1, 3)).unwrap(),
            IntervalPiece::closed(ratio(1, 2), ratio(1, 1)).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn singleton_one_is_minimal_domain() {
        let l = LevelSet::new(vec![IntervalPiece::point(ratio(1, 1)).unwrap()]).unwrap();
        assert_eq!(l, LevelSet::top());
        assert_eq!(l.min_at_or_above(&lvl(1, 5)), Level::one());
    }

    #[test]
    fn two_piece_domain() {
        let l = eps1_domain();
        assert_eq!(l.pieces().len(), 2);
        assert_eq!(l.min_at_or_above(&lvl(2, 5)), lvl(1, 2));
        assert_eq!(l.min_at_or_above(&lvl(1, 5)), lvl(1, 5));
        assert_eq!(l.min_at_or_above(&lvl(1, 20)), lvl(1, 10));
        assert_eq!(l.min_at_or_above(&lvl(1, 3)), lvl(1, 3));
    }

    #[test]
    fn left_open_piece_is_rejected() {
        let err = LevelSet::new(vec![IntervalPiece::left_open(ratio(1, 2), ratio(1, 1)).unwrap()]);
        assert!(matches!(err, Err(Error::NotInfCompact(_))));
    }

    #[test]
    fn piece_starting_at_zero_is_inf_compact() {
        let l = LevelSet::new(vec![
            IntervalPiece::left_open(ratio(0, 1), ratio(1, 2)).unwrap(),
            IntervalPiece::point(ratio(1, 1)).unwrap(),
        ])
        .unwrap();
        assert_eq!(l.min_at_or_above(&lvl(1, 3)), lvl(1, 3));
        assert_eq!(l.min_at_or_above(&lvl(2, 3)), Level::one());
    }

    #[test]
    fn missing_one_and_overlap() {
        let no_one = LevelSet::new(vec![IntervalPiece::closed(ratio(1, 4), ratio(1, 2)).unwrap()]);
        assert_eq!(no_one, Err(Error::MissingOne));
        let overlap = LevelSet::new(vec![
            IntervalPiece::closed(ratio(1, 4), ratio(1, 2)).unwrap(),
            IntervalPiece::closed(ratio(1, 2), ratio(1, 1)).unwrap(),
        ]);
        assert!(matches!(overlap, Err(Error::Overlap(_))));
    }

    #[test]
    fn intersection_examples() {
        let l = eps1_domain();
        assert_eq!(l.intersect(&l), l);
        let tail = LevelSet::new(vec![IntervalPiece::closed(ratio(1, 4), ratio(1, 1)).unwrap()]).unwrap();
        let expected = LevelSet::new(vec![
            IntervalPiece::closed(ratio(1, 4), ratio(1, 3)).unwrap(),
            IntervalPiece::closed(ratio(1, 2), ratio(1, 1)).unwrap(),
        ])
        .unwrap();
        assert_eq!(l.intersect(&tail), expected);
        assert_eq!(LevelSet::top().intersect(&l), LevelSet::top());
    }
}
