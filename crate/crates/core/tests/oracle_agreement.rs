//! Every optimized operation against its brute-force oracle, at every probe
//! level of the inputs (breakpoints, midpoints and 1).

use std::sync::Arc;

use gradual_core::oracle::{self, SampleSet};
use gradual_core::random;
use gradual_core::{ElementSet, FiniteGroup, FuzzySubgroup, GradualSubgroup, GradualSubset, Level};

const CASES: u64 = 500;

fn fast_table(sigma: &GradualSubset, probe: &SampleSet) -> Vec<(Level, ElementSet)> {
    probe.levels().iter().map(|a| (a.clone(), sigma.eval(a).clone())).collect()
}

fn groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        Arc::new(FiniteGroup::cyclic(12)),
        Arc::new(FiniteGroup::symmetric(3)),
        Arc::new(FiniteGroup::dihedral(4)),
    ]
}

#[test]
fn evaluation_matches_piece_lookup() {
    for seed in 0..CASES {
        let mut rng = random::rng(seed);
        let sigma = random::gradual_subset(&mut rng, 1 + seed as usize % 8, 4);
        let probe = SampleSet::for_subsets(&[&sigma]);
        assert_eq!(fast_table(&sigma, &probe), oracle::naive_table(&sigma, &probe), "seed {seed}");
    }
}

#[test]
fn closure_matches_oracle() {
    for seed in 0..CASES {
        let mut rng = random::rng(1_000 + seed);
        let sigma = random::gradual_subset(&mut rng, 1 + seed as usize % 8, 4);
        let probe = SampleSet::for_subsets(&[&sigma]);
        assert_eq!(fast_table(&sigma.closure_c(), &probe), oracle::naive_closure(&sigma, &probe), "seed {seed}");
    }
}

#[test]
fn interior_matches_oracle() {
    for seed in 0..CASES {
        let mut rng = random::rng(2_000 + seed);
        let sigma = random::gradual_subset(&mut rng, 1 + seed as usize % 8, 4);
        let probe = SampleSet::for_subsets(&[&sigma]);
        assert_eq!(fast_table(&sigma.interior_d(), &probe), oracle::naive_interior(&sigma, &probe), "seed {seed}");
    }
}

#[test]
fn union_and_intersection_match_oracle() {
    for seed in 0..CASES {
        let mut rng = random::rng(3_000 + seed);
        let n = 1 + seed as usize % 8;
        let family: Vec<GradualSubset> = (0..2 + seed % 3).map(|_| random::gradual_subset(&mut rng, n, 4)).collect();
        let refs: Vec<&GradualSubset> = family.iter().collect();
        let probe = SampleSet::for_subsets(&refs);
        let tables: Vec<_> = family.iter().map(|s| oracle::naive_table(s, &probe)).collect();
        let combine = |op: fn(&mut ElementSet, &ElementSet)| -> Vec<(Level, ElementSet)> {
            let mut acc = tables[0].clone();
            for t in &tables[1..] {
                for ((_, a), (_, b)) in acc.iter_mut().zip(t) {
                    op(a, b);
                }
            }
            acc
        };
        let union = GradualSubset::union(&family).unwrap();
        let inter = GradualSubset::intersection(&family).unwrap();
        assert_eq!(fast_table(&union, &probe), combine(|a, b| a.union_with(b)), "seed {seed}");
        assert_eq!(fast_table(&inter, &probe), combine(|a, b| a.intersect_with(b)), "seed {seed}");
    }
}

#[test]
fn level_maps_match_grade_comparisons() {
    for seed in 0..CASES {
        let mut rng = random::rng(4_000 + seed);
        let n = 1 + seed as usize % 8;
        let mu = random::fuzzy_subset(&mut rng, n);
        let (nu, nu_tilde) = (mu.nu(), mu.nu_tilde());
        let grades: Vec<_> = mu.grades().iter().map(|g| g.value().clone()).collect();
        let probe = SampleSet::from_breakpoints([grades.as_slice()]);
        for a in probe.levels() {
            let mut at_least = ElementSet::with_capacity(n);
            let mut above = ElementSet::with_capacity(n);
            for x in 0..n {
                if grades[x] >= *a.value() {
                    at_least.insert(x);
                }
                let strong = if a.is_one() { grades[x] == *a.value() } else { grades[x] > *a.value() };
                if strong {
                    above.insert(x);
                }
            }
            assert_eq!(nu.eval(a), &at_least, "seed {seed} level {a}");
            assert_eq!(nu_tilde.eval(a), &above, "seed {seed} level {a}");
        }
    }
}

#[test]
fn convolution_matches_pair_scan() {
    let groups = groups();
    for seed in 0..CASES {
        let mut rng = random::rng(5_000 + seed);
        let g = &groups[seed as usize % groups.len()];
        let m1 = random::fuzzy_subgroup(&mut rng, g);
        let m2 = random::fuzzy_subgroup(&mut rng, g);
        assert_eq!(
            m1.convolve(&m2).unwrap(),
            oracle::naive_convolution(m1.grades(), m2.grades(), g),
            "seed {seed}"
        );
        let (c1, c2) = (m1.normalize(), m2.normalize());
        assert_eq!(
            c1.product(&c2).unwrap(),
            oracle::naive_convolution(c1.canonical().grades(), c2.canonical().grades(), g),
            "seed {seed}"
        );
    }
}

#[test]
fn generated_subgroups_match_naive_closure() {
    let groups = groups();
    for seed in 0..CASES {
        let mut rng = random::rng(6_000 + seed);
        let g = &groups[seed as usize % groups.len()];
        let s = random::element_set(&mut rng, g.order());
        assert_eq!(g.subgroup_generated(&s).members(), &oracle::naive_subgroup_closure(g, &s), "seed {seed}");
    }
}

#[test]
fn subgroup_closure_matches_oracle() {
    let groups = groups();
    for seed in 0..CASES {
        let mut rng = random::rng(7_000 + seed);
        let g = &groups[seed as usize % groups.len()];
        let sigma: GradualSubgroup = random::gradual_subgroup(&mut rng, g, 4);
        let subset = sigma.as_subset();
        let probe = SampleSet::for_subsets(&[&subset]);
        let expected: Vec<_> = oracle::naive_closure(&subset, &probe)
            .into_iter()
            .map(|(a, s)| (a, oracle::naive_subgroup_closure(g, &s)))
            .collect();
        assert_eq!(fast_table(&sigma.closure_c().as_subset(), &probe), expected, "seed {seed}");
        let expected: Vec<_> = oracle::naive_interior(&subset, &probe)
            .into_iter()
            .map(|(a, s)| (a, oracle::naive_subgroup_closure(g, &s)))
            .collect();
        assert_eq!(fast_table(&sigma.interior_d().as_subset(), &probe), expected, "seed {seed}");
    }
}

#[test]
fn fuzzy_subgroup_check_matches_definition() {
    let groups = groups();
    for seed in 0..CASES {
        let mut rng = random::rng(8_000 + seed);
        let g = &groups[seed as usize % groups.len()];
        let mu = random::fuzzy_subset(&mut rng, g.order());
        let n = g.order();
        let holds = (0..n).all(|x| {
            (0..n).all(|y| mu.grade(g.mul(x, g.inv(y))) >= mu.grade(x).min(mu.grade(y)))
        });
        let nonzero = !mu.is_zero();
        assert_eq!(FuzzySubgroup::new(g.clone(), mu).is_ok(), holds && nonzero, "seed {seed}");
    }
}
