// SPDX-License-Identifier: Apache-2.0

//! Exhaustive reference implementations for small arities.
//!
//! Nothing here goes through the signature or search code: transformed
//! functions are evaluated point by point and every DC vector is fully
//! materialized from its definition before comparison.

use crate::error::{Error, Result};
use crate::truthtable::{NpTransform, TruthTable};

pub const ORACLE_MAX_VARS: usize = 5;

/// A fully materialized vector entry; bare counts carry `diff = 0`.
pub type OracleEntry = (u64, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub best_table: TruthTable,
    pub best_transform: NpTransform,
    pub vector: Vec<OracleEntry>,
}

fn check(n: usize) -> Result<()> {
    if n > ORACLE_MAX_VARS {
        return Err(Error::OracleTooLarge {
            n,
            max: ORACLE_MAX_VARS,
        });
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every NP transformation with either output polarity: `n! * 2^(n+1)` items.
pub fn all_transforms(n: usize) -> Vec<NpTransform> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for neg in 0..(1usize << n) {
            for out_neg in [false, true] {
                let phases = (0..n).map(|i| (neg >> i) & 1 == 1).collect();
                out.push(NpTransform::new(perm.clone(), phases, out_neg).expect("bijection"));
            }
        }
    }
    out
}

/// `h(x) = f(y) ^ out` with `y[perm[i]] = x[i] ^ neg[i]`, evaluated pointwise.
pub fn transform_pointwise(f: &TruthTable, t: &NpTransform) -> TruthTable {
    let n = f.n();
    TruthTable::from_fn(n, |x| {
        let mut y = 0;
        for i in 0..n {
            let bit = ((x >> i) & 1 == 1) ^ t.input_negated()[i];
            if bit {
                y |= 1 << t.perm()[i];
            }
        }
        f.get(y) ^ t.output_negated()
    })
    .expect("same arity")
}

fn subsets_in_order(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..(1usize << n))
        .map(|mask| (0..n).filter(|&i| (mask >> i) & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The complete DC vector of `g` straight from the definitions.
pub fn full_vector(g: &TruthTable) -> Vec<OracleEntry> {
    let n = g.n();
    let covers = |m: usize, s: &[usize]| s.iter().all(|&i| (m >> i) & 1 == 1);
    subsets_in_order(n)
        .into_iter()
        .map(|s| {
            let cof = (0..(1usize << n))
                .filter(|&m| covers(m, &s) && g.get(m))
                .count() as u64;
            if s.is_empty() || s.len() == n {
                return (cof, 0);
            }
            let (&last, rest) = s.split_last().unwrap();
            let diff = (0..(1usize << n))
                .filter(|&m| covers(m, rest) && g.get(m) != g.get(m ^ (1 << last)))
                .count() as u64;
            (cof, diff)
        })
        .collect()
}

/// The member of `f`'s NPN class with the largest DC vector.
pub fn brute_canonical(f: &TruthTable) -> Result<OracleResult> {
    check(f.n())?;
    let mut best: Option<OracleResult> = None;
    for t in all_transforms(f.n()) {
        let g = transform_pointwise(f, &t);
        let v = full_vector(&g);
        if best.as_ref().is_none_or(|b| v > b.vector) {
            best = Some(OracleResult {
                best_table: g,
                best_transform: t,
                vector: v,
            });
        }
    }
    Ok(best.expect("at least the identity"))
}

/// True when some NP transformation (with optional output negation) maps `g`
/// onto `f`.
pub fn brute_equivalent(f: &TruthTable, g: &TruthTable) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::ArityMismatch {
            expected: f.n(),
            found: g.n(),
        });
    }
    check(f.n())?;
    Ok(all_transforms(f.n())
        .iter()
        .any(|t| transform_pointwise(g, t) == *f))
}

/// Partition of all `2^(2^n)` functions of `n` variables into NPN classes,
/// as a class index per function (indexed by the table's integer value).
pub fn npn_partition(n: usize) -> Result<Vec<usize>> {
    check(n)?;
    if n > 4 {
        return Err(Error::OracleTooLarge { n, max: 4 });
    }
    let size = 1usize << (1 << n);
    let transforms = all_transforms(n);
    let mut class = vec![usize::MAX; size];
    let mut next = 0;
    for value in 0..size {
        if class[value] != usize::MAX {
            continue;
        }
        let f = TruthTable::from_words(n, vec![value as u64])?;
        for t in &transforms {
            let g = transform_pointwise(&f, t);
            class[g.words()[0] as usize] = next;
        }
        next += 1;
    }
    Ok(class)
}
