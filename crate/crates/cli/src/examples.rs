//! Worked examples with hand-written expected tables. Each block prints
//! expected against computed values; any difference fails the run.

use std::io::Write;

use gradual_core::fuzzy_bridge::{intersection_counterexample, union_counterexample};
use gradual_core::level_core::ratio;
use gradual_core::{ElementSet, GradualSubset, IntervalPiece, PartialGradualElement, TotalGradualElement};

use crate::{EXIT_MISMATCH, EXIT_OK};

/// Operators the examples depend on, replaceable for mutation checks.
#[derive(Clone, Copy)]
pub struct Operators {
    pub interior: fn(&GradualSubset) -> GradualSubset,
}

impl Default for Operators {
    fn default() -> Self {
        Operators {
            interior: GradualSubset::interior_d,
        }
    }
}

pub struct Row {
    pub label: String,
    pub expected: String,
    pub computed: String,
}

impl Row {
    fn new(label: impl Into<String>, expected: &str, computed: impl Into<String>) -> Self {
        Row {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.into(),
        }
    }

    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

pub struct Block {
    pub name: &'static str,
    pub rows: Vec<Row>,
}

impl Block {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(Row::matches)
    }
}

const TRUNCATION: u32 = 8;
const AB: [&str; 2] = ["a", "b"];

fn table<V: std::fmt::Display + Clone + PartialEq>(e: &TotalGradualElement<V>) -> String {
    let parts: Vec<String> = e.map().pieces().into_iter().map(|(p, v)| format!("{p}:{v}")).collect();
    parts.join(" ")
}

fn set(s: &ElementSet) -> String {
    let labels: Vec<&str> = s.ones().map(|x| AB[x]).collect();
    format!("{{{}}}", labels.join(", "))
}

fn piece(lo: (i64, i64), hi: (i64, i64), lo_closed: bool, hi_closed: bool) -> IntervalPiece {
    IntervalPiece::new(ratio(lo.0, lo.1), ratio(hi.0, hi.1), lo_closed, hi_closed).expect("valid piece")
}

fn integer_extension() -> Block {
    let e1 = PartialGradualElement::new(vec![
        (piece((1, 10), (1, 3), true, true), 1i64),
        (piece((1, 2), (1, 1), true, true), 2),
    ])
    .expect("disjoint pieces");
    let e2 = PartialGradualElement::new(vec![(piece((2, 3), (1, 1), true, true), 2i64)]).expect("one piece");
    let sum = e1.pointwise_op(&e2, |a, b| a + b);
    let (x1, x2) = (e1.extend(), e2.extend());
    Block {
        name: "integer extension",
        rows: vec![
            Row::new("ext(e1)", "(0,1/3]:1 (1/3,1]:2", table(&x1)),
            Row::new("ext(e2)", "(0,1]:2", table(&x2)),
            Row::new("ext(e1+e2)", "(0,1]:4", table(&sum.extend())),
            Row::new("ext(e1)+ext(e2)", "(0,1/3]:3 (1/3,1]:4", table(&x1.pointwise_op(&x2, |a, b| a + b))),
        ],
    }
}

fn r_alpha_pair() -> Block {
    let one = || piece((1, 1), (1, 1), true, true);
    let e1 = PartialGradualElement::new(vec![(piece((1, 2), (1, 1), true, false), 'a'), (one(), 'b')]).expect("disjoint");
    let e2 = PartialGradualElement::new(vec![(piece((0, 1), (1, 2), false, true), 'a'), (one(), 'b')]).expect("disjoint");
    let (x1, x2) = (e1.extend(), e2.extend());
    let mut rows = Vec::new();
    for (n, d, extended) in [(1, 4, "false"), (1, 2, "false"), (3, 4, "false"), (1, 1, "true")] {
        let a = gradual_core::Grade::from_ratio(n, d).expect("grade");
        rows.push(Row::new(format!("partials related at {a}"), "true", e1.r_alpha_equal(&e2, &a).to_string()));
        rows.push(Row::new(format!("extensions related at {a}"), extended, x1.r_alpha_equal(&x2, &a).to_string()));
    }
    Block {
        name: "R_alpha on {a,b}",
        rows,
    }
}

fn union_of_levels() -> Block {
    let r = union_counterexample(TRUNCATION);
    let half = &r.witness;
    Block {
        name: "union of levels",
        rows: vec![
            Row::new("levels of sup mu_n at 1/2", "{a, b}", set(&r.limit_at_witness)),
            Row::new(format!("union of levels of mu_n, n <= {TRUNCATION}, at 1/2"), "{a}", set(&r.finite_at_witness)),
            Row::new("union of levels of all mu_n at 1/2", "{a}", set(r.infinite_map.eval(half))),
            Row::new("union of strong levels equals strong levels of the sup", "true", r.repaired().to_string()),
        ],
    }
}

fn intersection_of_strong_levels(ops: &Operators) -> Block {
    let r = intersection_counterexample(TRUNCATION);
    let half = &r.witness;
    let repaired = (ops.interior)(&r.infinite_map);
    Block {
        name: "intersection of strong levels",
        rows: vec![
            Row::new("strong levels of inf mu_n at 1/2", "{a}", set(&r.limit_at_witness)),
            Row::new(
                format!("intersection of strong levels of mu_n, n <= {TRUNCATION}, at 1/2"),
                "{a, b}",
                set(&r.finite_at_witness),
            ),
            Row::new("intersection of strong levels of all mu_n at 1/2", "{a, b}", set(r.infinite_map.eval(half))),
            Row::new("interior of that intersection at 1/2", "{a}", set(repaired.eval(half))),
            Row::new(
                "interior of that intersection equals strong levels of the inf",
                "true",
                (repaired == r.repaired_limit).to_string(),
            ),
        ],
    }
}

pub fn blocks(ops: &Operators) -> Vec<Block> {
    vec![
        integer_extension(),
        r_alpha_pair(),
        union_of_levels(),
        intersection_of_strong_levels(ops),
    ]
}

/// Prints every block and returns the exit code.
pub fn run(ops: &Operators, out: &mut dyn Write) -> i32 {
    let blocks = blocks(ops);
    let mut failed = Vec::new();
    for b in &blocks {
        let _ = writeln!(out, "== {} ==", b.name);
        for r in &b.rows {
            let mark = if r.matches() { "ok" } else { "MISMATCH" };
            let _ = writeln!(out, "  {:<66} expected {:<22} computed {:<22} {mark}", r.label, r.expected, r.computed);
        }
        if !b.matches() {
            failed.push(b.name);
        }
    }
    if failed.is_empty() {
        let _ = writeln!(out, "{} of {} blocks match", blocks.len(), blocks.len());
        EXIT_OK
    } else {
        for name in &failed {
            let _ = writeln!(out, "mismatch in block: {name}");
        }
        EXIT_MISMATCH
    }
}
