// SPDX-License-Identifier: Apache-2.0

//! Property suites shared by the `properties` and `acceptance` targets.
//!
//! Each suite runs a fixed number of proptest cases from a fixed seed so
//! that both targets see exactly the same inputs.

#![allow(dead_code)]

use std::cmp::Ordering;

use npn_dc::analysis::{literals_symmetric, symmetry_classes, variable_phases};
use npn_dc::canon::{canonical_form, initial_group, match_functions, Candidate};
use npn_dc::oracle;
use npn_dc::signature::{compare_tables, dc_value, dc_vector, DcEntry};
use npn_dc::{Cube, Literal, Mode, NpTransform, TruthTable};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub fn word_count(n: usize) -> usize {
    if n < 6 {
        1
    } else {
        1 << (n - 6)
    }
}

pub fn table(lo: usize, hi: usize) -> impl Strategy<Value = TruthTable> {
    (lo..=hi)
        .prop_flat_map(|n| (Just(n), vec(any::<u64>(), word_count(n))))
        .prop_map(|(n, w)| TruthTable::from_words(n, w).unwrap())
}

pub fn transform(n: usize) -> impl Strategy<Value = NpTransform> {
    (
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        vec(any::<bool>(), n),
        any::<bool>(),
    )
        .prop_map(|(p, neg, out)| NpTransform::new(p, neg, out).unwrap())
}

pub fn table_and_transform(
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = (TruthTable, NpTransform)> {
    table(lo, hi).prop_flat_map(|f| {
        let n = f.n();
        (Just(f), transform(n))
    })
}

/// Functions with a planted symmetric block: the first `k` variables enter
/// only through their count, then a random transformation scrambles
/// positions and polarities.
pub fn symmetric_table(lo: usize, hi: usize) -> impl Strategy<Value = TruthTable> {
    (lo..=hi)
        .prop_flat_map(|n| (Just(n), 2..=n))
        .prop_flat_map(|(n, k)| {
            let rows = (k + 1) << (n - k);
            (Just(n), Just(k), vec(any::<bool>(), rows), transform(n))
        })
        .prop_map(|(n, k, h, t)| {
            let low = (1usize << k) - 1;
            let base = TruthTable::from_fn(n, |m| {
                let c = (m & low).count_ones() as usize;
                h[(c << (n - k)) | (m >> k)]
            })
            .unwrap();
            base.apply_transform(&t).unwrap()
        })
}

fn cube_from_mask(n: usize, mask: u64, phases: u64, skip: usize) -> Cube {
    let lits = (0..n)
        .filter(|&v| v != skip && (mask >> v) & 1 == 1)
        .map(|v| Literal::new(v, (phases >> v) & 1 == 1))
        .collect();
    Cube::new(lits).unwrap()
}

fn prefix_and_var() -> impl Strategy<Value = (TruthTable, Cube, usize)> {
    table(1, 10).prop_flat_map(|f| {
        let n = f.n();
        (Just(f), any::<u64>(), any::<u64>(), 0..n)
            .prop_map(move |(f, m, p, v)| (f, cube_from_mask(n, m, p, v), v))
    })
}

pub struct Suite {
    pub name: &'static str,
    pub cases: u32,
    pub run: fn(u32) -> Result<(), String>,
}

fn runner(cases: u32, seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

fn check<S: Strategy>(
    cases: u32,
    seed: u64,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases, seed)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

fn diff_even_and_phase_invariant(cases: u32) -> Result<(), String> {
    check(cases, 11, prefix_and_var(), |(f, cube, v)| {
        let p = dc_value(&f, &cube, Literal::pos(v)).unwrap();
        let q = dc_value(&f, &cube, Literal::neg(v)).unwrap();
        prop_assert_eq!(p.diff % 2, 0);
        prop_assert_eq!(p.diff, q.diff);
        Ok(())
    })
}

fn cofactor_complement(cases: u32) -> Result<(), String> {
    check(cases, 12, prefix_and_var(), |(f, cube, v)| {
        let whole = f.cofactor_count(&cube).unwrap();
        let p = dc_value(&f, &cube, Literal::pos(v)).unwrap();
        let q = dc_value(&f, &cube, Literal::neg(v)).unwrap();
        prop_assert_eq!(p.cof + q.cof, whole);
        Ok(())
    })
}

fn transform_laws(cases: u32) -> Result<(), String> {
    let s = table(1, 9).prop_flat_map(|f| {
        let n = f.n();
        (Just(f), transform(n), transform(n))
    });
    check(cases, 13, s, |(f, a, b)| {
        let fa = f.apply_transform(&a).unwrap();
        prop_assert_eq!(&fa.apply_transform(&a.invert()).unwrap(), &f);
        let both = fa.apply_transform(&b).unwrap();
        prop_assert_eq!(&f.apply_transform(&b.compose(&a).unwrap()).unwrap(), &both);
        let expected = if a.output_negated() {
            f.num_minterms() as u64 - f.minterm_count()
        } else {
            f.minterm_count()
        };
        prop_assert_eq!(fa.minterm_count(), expected);
        prop_assert_eq!(TruthTable::from_hex(&f.to_hex(), f.n()).unwrap(), f);
        Ok(())
    })
}

fn vector_matches_definition(cases: u32) -> Result<(), String> {
    check(cases, 14, table(1, 6), |f| {
        let fast: Vec<(u64, u64)> = dc_vector(&f, Mode::Dc)
            .into_iter()
            .map(|e| match e {
                DcEntry::Count(c) => (c, 0),
                DcEntry::Value(v) => (v.cof, v.diff),
            })
            .collect();
        prop_assert_eq!(fast, oracle::full_vector(&f));
        Ok(())
    })
}

fn vector_injective(cases: u32) -> Result<(), String> {
    let s = (1usize..=7).prop_flat_map(|n| {
        (
            vec(any::<u64>(), word_count(n)),
            vec(any::<u64>(), word_count(n)),
            Just(n),
        )
    });
    check(cases, 15, s, |(a, b, n)| {
        let fa = TruthTable::from_words(n, a).unwrap();
        let fb = TruthTable::from_words(n, b).unwrap();
        let ord = compare_tables(&fa, &fb, Mode::Dc);
        prop_assert_eq!(ord == Ordering::Equal, fa == fb);
        prop_assert_eq!(ord.reverse(), compare_tables(&fb, &fa, Mode::Dc));
        Ok(())
    })
}

fn partition_well_formed(cases: u32) -> Result<(), String> {
    let s = prop_oneof![table(1, 9), symmetric_table(2, 9)];
    check(cases, 16, s, |f| {
        let n = f.n();
        let classes = symmetry_classes(&f, &variable_phases(&f)).unwrap();
        let mut seen = vec![0u32; n];
        for c in &classes {
            for v in c.vars() {
                seen[v] += 1;
            }
            if !c.independent {
                for w in c.literals.windows(2) {
                    prop_assert!(literals_symmetric(&f, w[0], w[1]).unwrap());
                }
            }
        }
        prop_assert!(seen.iter().all(|&k| k == 1));

        let state = initial_group(&f, Mode::Dc).unwrap();
        let mut count = 0;
        for (i, g) in state.groups.iter().enumerate() {
            prop_assert!(!g.is_empty());
            prop_assert_eq!(g.seq, i + 1);
            prop_assert!(g.classes.iter().all(|c| c.key == g.key()));
            if i > 0 {
                prop_assert!(state.groups[i - 1].key() > g.key());
            }
            count += g.len();
        }
        prop_assert_eq!(count, n);
        Ok(())
    })
}

fn idempotence(cases: u32) -> Result<(), String> {
    let s = prop_oneof![table(1, 8), symmetric_table(2, 8)];
    check(cases, 17, s, |f| {
        let c = canonical_form(&f, Mode::Dc).unwrap().canonical_table;
        prop_assert_eq!(&canonical_form(&c, Mode::Dc).unwrap().canonical_table, &c);
        Ok(())
    })
}

fn canonicity(cases: u32) -> Result<(), String> {
    let s = prop_oneof![
        table_and_transform(1, 8),
        symmetric_table(2, 8).prop_flat_map(|f| {
            let n = f.n();
            (Just(f), transform(n))
        })
    ];
    check(cases, 18, s, |(f, t)| {
        let g = f.apply_transform(&t).unwrap();
        for mode in [Mode::Dc, Mode::CofactorOnly] {
            let a = canonical_form(&f, mode).unwrap();
            let b = canonical_form(&g, mode).unwrap();
            prop_assert_eq!(&a.canonical_table, &b.canonical_table);
            prop_assert_eq!(
                &f.apply_transform(&a.transform()).unwrap(),
                &a.canonical_table
            );
        }
        Ok(())
    })
}

fn symmetric_order_irrelevance(cases: u32) -> Result<(), String> {
    let s = symmetric_table(2, 8).prop_flat_map(|f| {
        let n = f.n();
        (Just(f), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    });
    check(cases, 19, s, |(f, shuffle)| {
        let r = canonical_form(&f, Mode::Dc).unwrap();
        let searched = if r.c_f.output_negated {
            f.negate()
        } else {
            f.clone()
        };
        for class in symmetry_classes(&searched, &variable_phases(&searched)).unwrap() {
            if class.literals.len() < 2 {
                continue;
            }
            // Positions of the class in C_f, with each position's flip
            // relative to the aligned class literal it carries.
            let slots: Vec<(usize, usize, bool)> = r
                .c_f
                .literals
                .iter()
                .enumerate()
                .filter_map(|(i, l)| {
                    let k = class.literals.iter().position(|a| a.var() == l.var())?;
                    Some((i, k, l.is_negated() != class.literals[k].is_negated()))
                })
                .collect();
            let mut order: Vec<usize> = shuffle
                .iter()
                .copied()
                .filter(|&i| i < slots.len())
                .collect();
            if order.len() < slots.len() {
                order = (0..slots.len()).rev().collect();
            }
            let mut lits = r.c_f.literals.clone();
            for (&(pos, _, flip), &src) in slots.iter().zip(&order) {
                let aligned = class.literals[slots[src].1];
                lits[pos] = if flip { aligned.complement() } else { aligned };
            }
            let moved = Candidate::new(lits, r.c_f.output_negated)
                .apply(&f)
                .unwrap();
            prop_assert_eq!(&moved, &r.canonical_table);
        }
        Ok(())
    })
}

fn match_soundness(cases: u32) -> Result<(), String> {
    let s = table_and_transform(1, 8).prop_flat_map(|(f, t)| {
        let n = f.n();
        (Just(f), Just(t), vec(any::<u64>(), word_count(n)))
    });
    check(cases, 20, s, |(f, t, other)| {
        let g = f.apply_transform(&t).unwrap();
        let found = match_functions(&f, &g, Mode::Dc).unwrap();
        prop_assert!(found.is_some());
        prop_assert_eq!(&f.apply_transform(&found.unwrap()).unwrap(), &g);

        let h = TruthTable::from_words(f.n(), other).unwrap();
        match match_functions(&f, &h, Mode::Dc).unwrap() {
            Some(u) => prop_assert_eq!(&f.apply_transform(&u).unwrap(), &h),
            None if f.n() <= 4 => prop_assert!(!oracle::brute_equivalent(&h, &f).unwrap()),
            None => {}
        }
        Ok(())
    })
}

fn oracle_maximality(cases: u32) -> Result<(), String> {
    let s = prop_oneof![table(1, 4), symmetric_table(2, 4)];
    check(cases, 21, s, |f| {
        let got = canonical_form(&f, Mode::Dc).unwrap().canonical_table;
        prop_assert_eq!(got, oracle::brute_canonical(&f).unwrap().best_table);
        Ok(())
    })
}

fn candidate_dominance(cases: u32) -> Result<(), String> {
    let s = prop_oneof![table(1, 9), symmetric_table(2, 9)];
    check(cases, 22, s, |f| {
        let dc = canonical_form(&f, Mode::Dc).unwrap().candidates_examined;
        let cof = canonical_form(&f, Mode::CofactorOnly)
            .unwrap()
            .candidates_examined;
        prop_assert!(dc >= 1);
        prop_assert!(dc <= cof, "dc {} > cofactor-only {}", dc, cof);
        Ok(())
    })
}

pub fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "diff evenness and phase invariance",
            cases: 1500,
            run: diff_even_and_phase_invariant,
        },
        Suite {
            name: "cofactor complement",
            cases: 1500,
            run: cofactor_complement,
        },
        Suite {
            name: "transform laws and hex round trip",
            cases: 1000,
            run: transform_laws,
        },
        Suite {
            name: "DC vector matches its definition",
            cases: 500,
            run: vector_matches_definition,
        },
        Suite {
            name: "DC vector injectivity",
            cases: 1000,
            run: vector_injective,
        },
        Suite {
            name: "partition well-formedness",
            cases: 1000,
            run: partition_well_formed,
        },
        Suite {
            name: "idempotence",
            cases: 800,
            run: idempotence,
        },
        Suite {
            name: "canonicity under random transforms",
            cases: 800,
            run: canonicity,
        },
        Suite {
            name: "symmetric-class order irrelevance",
            cases: 800,
            run: symmetric_order_irrelevance,
        },
        Suite {
            name: "match soundness",
            cases: 800,
            run: match_soundness,
        },
        Suite {
            name: "maximality against the oracle",
            cases: 300,
            run: oracle_maximality,
        },
        Suite {
            name: "candidate-count dominance",
            cases: 800,
            run: candidate_dominance,
        },
    ]
}
