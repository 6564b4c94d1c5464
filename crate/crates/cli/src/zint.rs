//! Two fuzzy subgroups of ℤ whose product does not attain its supremum at 2.
//!
//! `μ1` is 1 at 0, `1 - (2/3)^t` on `2^t ℤ ∖ 2^{t+1} ℤ` and 0 off `2ℤ`;
//! `μ2` is 1 at 0, `1/2 - 1/3^t` on `3^t ℤ ∖ 3^{t+1} ℤ` and 0 off `3ℤ`.
//! Everything is evaluated from these formulas over bounded windows.

use std::fmt::Write as _;

use gradual_core::level_core::{fmt_rational, ratio};
use gradual_core::Rational;
use num::integer::gcd;
use num::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZIntGrade {
    Mu1,
    Mu2,
}

impl ZIntGrade {
    fn prime(self) -> i64 {
        match self {
            ZIntGrade::Mu1 => 2,
            ZIntGrade::Mu2 => 3,
        }
    }

    /// The grade on `p^t ℤ ∖ p^{t+1} ℤ` for `t >= 1`.
    fn grade_at_valuation(self, t: u32) -> Rational {
        match self {
            ZIntGrade::Mu1 => Rational::one() - num::pow(ratio(2, 3), t as usize),
            ZIntGrade::Mu2 => ratio(1, 2) - num::pow(ratio(1, 3), t as usize),
        }
    }

    pub fn eval(self, x: i64) -> Rational {
        if x == 0 {
            return Rational::one();
        }
        match valuation(x, self.prime()) {
            0 => Rational::zero(),
            t => self.grade_at_valuation(t),
        }
    }

    /// `m` with `{x | μ(x) ≥ α} = mℤ`; `m = 0` stands for `{0}`.
    pub fn level_modulus(self, alpha: &Rational) -> i64 {
        if *alpha <= Rational::zero() {
            return 1;
        }
        let sup = match self {
            ZIntGrade::Mu1 => Rational::one(),
            ZIntGrade::Mu2 => ratio(1, 2),
        };
        if *alpha >= sup {
            return 0;
        }
        let t = (1..).find(|&t| self.grade_at_valuation(t) >= *alpha).expect("grades approach the supremum");
        self.prime().pow(t)
    }
}

fn valuation(mut x: i64, p: i64) -> u32 {
    let mut t = 0;
    while x % p == 0 {
        x /= p;
        t += 1;
    }
    t
}

/// Grades indexed by valuation, so that window scans avoid repeated powers.
struct GradeCache {
    one: Rational,
    mu1: Vec<Rational>,
    mu2: Vec<Rational>,
}

impl GradeCache {
    fn new() -> Self {
        let table = |g: ZIntGrade| (0..64).map(|t| if t == 0 { Rational::zero() } else { g.grade_at_valuation(t) }).collect();
        GradeCache {
            one: Rational::one(),
            mu1: table(ZIntGrade::Mu1),
            mu2: table(ZIntGrade::Mu2),
        }
    }

    fn grade(&self, g: ZIntGrade, x: i64) -> &Rational {
        if x == 0 {
            return &self.one;
        }
        let table = match g {
            ZIntGrade::Mu1 => &self.mu1,
            ZIntGrade::Mu2 => &self.mu2,
        };
        &table[valuation(x, g.prime()) as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TWitness {
    pub t: u32,
    pub target: Rational,
    pub found: Option<(i64, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZIntReport {
    pub x: i64,
    pub window: i64,
    pub running_max: Rational,
    pub argmax: i64,
    pub bound: Rational,
    pub all_below_bound: bool,
    /// `min(μ1(20), μ2(x - 20))` when 20 lies in the window.
    pub witness_20: Option<Rational>,
    pub search_window: i64,
    pub per_t: Vec<TWitness>,
    /// `m` with `(μ1)_{1/2} + (μ2)_{1/2} = mℤ`.
    pub level_sum_modulus: i64,
    pub level_moduli: (i64, i64),
    pub x_in_level_sum: bool,
}

impl ZIntReport {
    /// The checks that make the demo a counterexample when `x = 2`.
    pub fn holds(&self) -> bool {
        self.all_below_bound
            && self.witness_20.as_ref().is_some_and(|v| *v == ratio(7, 18))
            && self.per_t.iter().all(|w| w.found.is_some())
            && !self.x_in_level_sum
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "x = {}, window |y| <= {}", self.x, self.window);
        let _ = writeln!(
            s,
            "running max of min(mu1(y), mu2(x-y)) = {} at y = {}",
            fmt_rational(&self.running_max),
            self.argmax
        );
        let _ = writeln!(
            s,
            "bound {}: every windowed value below it: {}",
            fmt_rational(&self.bound),
            self.all_below_bound
        );
        match &self.witness_20 {
            Some(v) => {
                let _ = writeln!(s, "y = 20: value {} (1/2 - 1/9 = 7/18: {})", fmt_rational(v), *v == ratio(7, 18));
            }
            None => {
                let _ = writeln!(s, "y = 20: outside the window");
            }
        }
        for w in &self.per_t {
            match &w.found {
                Some((y, v)) => {
                    let _ = writeln!(s, "t = {}: target {} reached at y = {} with value {}", w.t, fmt_rational(&w.target), y, fmt_rational(v));
                }
                None => {
                    let _ = writeln!(s, "t = {}: target {} not reached within |y| <= {}", w.t, fmt_rational(&w.target), self.search_window);
                }
            }
        }
        let show = |m: i64| if m == 0 { "{0}".to_string() } else { format!("{m}Z") };
        let _ = writeln!(
            s,
            "(mu1)_1/2 = {}, (mu2)_1/2 = {}, sum = {}, contains {}: {}",
            show(self.level_moduli.0),
            show(self.level_moduli.1),
            show(self.level_sum_modulus),
            self.x,
            self.x_in_level_sum
        );
        s
    }
}

/// Scans `|y| <= window` for the windowed supremum, and `|y| <= search_window`
/// for witnesses reaching `1/2 - 1/3^t`, `t = 1..=t_max`.
pub fn demo(x: i64, window: i64, t_max: u32, search_window: i64) -> ZIntReport {
    assert!(window >= 1 && search_window >= 1, "windows must be positive");
    let cache = GradeCache::new();
    let value = |y: i64| cache.grade(ZIntGrade::Mu1, y).min(cache.grade(ZIntGrade::Mu2, x - y)).clone();
    let bound = ratio(1, 2);
    let mut running_max = Rational::zero();
    let mut argmax = 0;
    let mut all_below_bound = true;
    for y in -window..=window {
        let v = value(y);
        if v >= bound {
            all_below_bound = false;
        }
        if v > running_max {
            running_max = v;
            argmax = y;
        }
    }
    let witness_20 = (window >= 20).then(|| value(20));
    let per_t = (1..=t_max)
        .map(|t| {
            let target = &bound - num::pow(ratio(1, 3), t as usize);
            let found = (0..=search_window)
                .flat_map(|m| [m, -m])
                .map(|y| (y, value(y)))
                .find(|(_, v)| *v >= target);
            TWitness { t, target, found }
        })
        .collect();
    let m1 = ZIntGrade::Mu1.level_modulus(&bound);
    let m2 = ZIntGrade::Mu2.level_modulus(&bound);
    let sum = gcd(m1, m2);
    let x_in_level_sum = if sum == 0 { x == 0 } else { x % sum == 0 };
    ZIntReport {
        x,
        window,
        running_max,
        argmax,
        bound,
        all_below_bound,
        witness_20,
        search_window,
        per_t,
        level_sum_modulus: sum,
        level_moduli: (m1, m2),
        x_in_level_sum,
    }
}
