// SPDX-License-Identifier: Apache-2.0

//! Boolean-difference-and-cofactor (DC) signature values and vectors.
//!
//! Every count is taken over the full table, so the difference count of a
//! cofactor `f_b` with respect to `x` is the number of assignments of all
//! variables outside `b` (including `x` itself) where `(f_b)_x != (f_b)_~x`.
//! That makes every difference count even.
//!
//! The DC vector of a function `g` lists, for `k = 0..=n` and for every index
//! set `{i1 < .. < ik}` in lexicographic order, the value of the positive
//! cube `x_i1 .. x_ik`: the bare count `|g|` for `k = 0`, the bare count
//! `|g_{x1..xn}|` for `k = n`, and `(|g_b|, |(g_{b'})'_{x_ik}|)` otherwise,
//! where `b'` is `b` without its last literal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::canon::Candidate;
use crate::error::{Error, Result};
use crate::truthtable::{Cube, Literal, TruthTable};

/// A `(cofactor count, difference count)` pair, ordered lexicographically.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DcValue {
    pub cof: u64,
    pub diff: u64,
}

impl DcValue {
    pub const fn new(cof: u64, diff: u64) -> Self {
        Self { cof, diff }
    }
}

impl fmt::Display for DcValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.cof, self.diff)
    }
}

/// Which signature drives grouping and candidate comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Cofactor and Boolean-difference counts.
    #[default]
    Dc,
    /// Cofactor counts only (the difference component is ignored).
    CofactorOnly,
}

impl Mode {
    /// Projects a value onto the part this mode compares.
    pub fn key(self, v: DcValue) -> DcValue {
        match self {
            Mode::Dc => v,
            Mode::CofactorOnly => DcValue::new(v.cof, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Dc => "dc",
            Mode::CofactorOnly => "cofactor",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dc" => Ok(Mode::Dc),
            "cofactor" | "cofactor-only" => Ok(Mode::CofactorOnly),
            other => Err(format!("unknown mode {other:?} (expected dc or cofactor)")),
        }
    }
}

pub fn compare_dc(a: DcValue, b: DcValue) -> Ordering {
    a.cmp(&b)
}

/// `(|f_l|, |f'_x|)` for literal `l` on variable `x`.
pub fn first_order_dc(f: &TruthTable, lit: Literal) -> Result<DcValue> {
    dc_value(f, &Cube::empty(), lit)
}

/// The DC value of `lit` inside the cofactor `f_prefix`: the onset size of
/// `f_{prefix, lit}` and the difference count of `f_prefix` with respect to
/// `lit`'s variable.
pub fn dc_value(f: &TruthTable, prefix: &Cube, lit: Literal) -> Result<DcValue> {
    if lit.var() >= f.n() {
        return Err(Error::VariableOutOfRange(lit.var() + 1));
    }
    let cube = prefix.with(lit)?;
    let cof = f.cofactor_count(&cube)?;
    let diff = f.boolean_difference(lit.var())?.cofactor_count(prefix)?;
    Ok(DcValue::new(cof, diff))
}

/// Cached Boolean differences of one function, for repeated DC evaluation.
#[derive(Debug, Clone)]
pub struct Signatures {
    table: TruthTable,
    diffs: Vec<TruthTable>,
}

impl Signatures {
    pub fn new(table: &TruthTable) -> Self {
        let diffs = (0..table.n())
            .map(|v| table.boolean_difference(v).expect("variable in range"))
            .collect();
        Self {
            table: table.clone(),
            diffs,
        }
    }

    pub fn table(&self) -> &TruthTable {
        &self.table
    }

    /// DC value of `lit` under the literals in `prefix` (distinct variables,
    /// none equal to `lit`'s).
    pub fn dc(&self, prefix: &[Literal], lit: Literal) -> DcValue {
        let mut cube: Vec<Literal> = prefix.to_vec();
        cube.push(lit);
        DcValue::new(
            self.table.count_under(&cube),
            self.diffs[lit.var()].count_under(prefix),
        )
    }
}

/// One entry of a DC vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DcEntry {
    /// Orders `0` and `n`.
    Count(u64),
    Value(DcValue),
}

/// Streams the DC vector of a function in the fixed cube order.
///
/// Built from a source function and a candidate literal sequence; the cursor
/// walks positive cubes over the transformed positions, which is the same as
/// walking the cubes `t_i1 .. t_ik` of the candidate over the source.
#[derive(Debug)]
pub struct DcVectorCursor {
    table: TruthTable,
    diffs: Vec<Option<TruthTable>>,
    mode: Mode,
    k: usize,
    combo: Vec<usize>,
    done: bool,
}

impl DcVectorCursor {
    /// Cursor over the DC vector of `table` itself (identity candidate).
    pub fn over_table(table: TruthTable, mode: Mode) -> Self {
        let n = table.n();
        Self {
            table,
            diffs: vec![None; n],
            mode,
            k: 0,
            combo: Vec::new(),
            done: false,
        }
    }

    /// Cursor over `D^T` for candidate `T` of `source`.
    pub fn new(source: &TruthTable, candidate: &Candidate, mode: Mode) -> Result<Self> {
        let table = candidate.apply(source)?;
        Ok(Self::over_table(table, mode))
    }

    /// Current enumeration index set (0-based transformed positions).
    pub fn position(&self) -> (usize, &[usize]) {
        (self.k, &self.combo)
    }

    fn diff_table(&mut self, var: usize) -> &TruthTable {
        if self.diffs[var].is_none() {
            self.diffs[var] = Some(self.table.boolean_difference(var).expect("in range"));
        }
        self.diffs[var].as_ref().unwrap()
    }

    fn advance(&mut self) {
        let n = self.table.n();
        let k = self.k;
        // next k-combination in lexicographic order
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.combo[i] < n - k + i {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return;
            }
        }
        if k == n {
            self.done = true;
        } else {
            self.k += 1;
            self.combo = (0..self.k).collect();
        }
    }

    fn entry(&mut self) -> DcEntry {
        let n = self.table.n();
        let lits: Vec<Literal> = self.combo.iter().map(|&v| Literal::pos(v)).collect();
        if self.k == 0 || self.k == n {
            return DcEntry::Count(self.table.count_under(&lits));
        }
        let cof = self.table.count_under(&lits);
        let diff = match self.mode {
            Mode::Dc => {
                let (last, rest) = lits.split_last().expect("k >= 1");
                let last = last.var();
                self.diff_table(last).count_under(rest)
            }
            Mode::CofactorOnly => 0,
        };
        DcEntry::Value(DcValue::new(cof, diff))
    }
}

impl Iterator for DcVectorCursor {
    type Item = DcEntry;

    fn next(&mut self) -> Option<DcEntry> {
        if self.done {
            return None;
        }
        let e = self.entry();
        self.advance();
        Some(e)
    }
}

/// Compares two functions of equal arity by their DC vectors, stopping at the
/// first unequal entry.
pub fn compare_tables(a: &TruthTable, b: &TruthTable, mode: Mode) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let ca = DcVectorCursor::over_table(a.clone(), mode);
    let cb = DcVectorCursor::over_table(b.clone(), mode);
    for (x, y) in ca.zip(cb) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    // Distinct functions always have distinct vectors.
    unreachable!("distinct tables with identical DC vectors")
}

/// Orders two complete candidates of `f` by their DC vectors.
pub fn compare_candidates(
    f: &TruthTable,
    t1: &Candidate,
    t2: &Candidate,
    mode: Mode,
) -> Result<Ordering> {
    let a = t1.apply(f)?;
    let b = t2.apply(f)?;
    Ok(compare_tables(&a, &b, mode))
}

/// Materializes the whole DC vector of `table` (`2^n` entries).
pub fn dc_vector(table: &TruthTable, mode: Mode) -> Vec<DcEntry> {
    DcVectorCursor::over_table(table.clone(), mode).collect()
}
