// SPDX-License-Identifier: Apache-2.0

//! Complete truth tables, literals, cubes and NP transformations.
//!
//! Minterm `j` of an `n`-variable table holds `f(a_1, .., a_n)` where `a_i` is
//! bit `i - 1` of `j`, so `x1` is the least-significant index bit. Tables are
//! packed into `u64` words; tables with fewer than six variables use the low
//! `2^n` bits of a single word and keep the rest zero.
//!
//! Cofactors keep the full arity: `f_{x_i}` is stored as an `n`-variable table
//! whose value does not depend on `x_i`. Counting the onset of `f` under a cube
//! `b` is therefore a masked popcount over the original table.

use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the number of variables (a 16 MiB table).
pub const DEFAULT_MAX_VARS: usize = 24;

/// Largest arity any table may be built with, regardless of configuration.
pub const ABSOLUTE_MAX_VARS: usize = 30;

const VAR_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Checks `1 <= n <= max` (with `max` clamped to [`ABSOLUTE_MAX_VARS`]).
pub fn check_arity(n: usize, max: usize) -> Result<()> {
    let max = max.min(ABSOLUTE_MAX_VARS);
    if n == 0 || n > max {
        return Err(Error::ArityOutOfRange { n, max });
    }
    Ok(())
}

/// A variable together with a polarity. Variables are 0-based internally and
/// printed 1-based (`x1`, `~x1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub const fn new(var: usize, negated: bool) -> Self {
        Self { var, negated }
    }

    pub const fn pos(var: usize) -> Self {
        Self::new(var, false)
    }

    pub const fn neg(var: usize) -> Self {
        Self::new(var, true)
    }

    pub const fn var(self) -> usize {
        self.var
    }

    pub const fn is_negated(self) -> bool {
        self.negated
    }

    #[must_use]
    pub const fn complement(self) -> Self {
        Self::new(self.var, !self.negated)
    }

    /// Mask word `idx` of the set of minterms where this literal is true.
    #[inline]
    fn mask_word(self, idx: usize) -> u64 {
        let m = if self.var < 6 {
            VAR_MASKS[self.var]
        } else if (idx >> (self.var - 6)) & 1 == 1 {
            u64::MAX
        } else {
            0
        };
        if self.negated {
            !m
        } else {
            m
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var + 1)
        } else {
            write!(f, "x{}", self.var + 1)
        }
    }
}

/// A conjunction of literals over pairwise distinct variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Cube(Vec<Literal>);

impl Cube {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(literals: Vec<Literal>) -> Result<Self> {
        for (k, lit) in literals.iter().enumerate() {
            if literals[..k].iter().any(|l| l.var == lit.var) {
                return Err(Error::DuplicateVariable(lit.var + 1));
            }
        }
        Ok(Self(literals))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.0.iter().any(|l| l.var == var)
    }

    /// Returns the cube extended by `lit`.
    pub fn with(&self, lit: Literal) -> Result<Self> {
        if self.contains_var(lit.var) {
            return Err(Error::DuplicateVariable(lit.var + 1));
        }
        let mut lits = self.0.clone();
        lits.push(lit);
        Ok(Self(lits))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A completely specified single-output Boolean function of `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_hex())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[inline]
fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

#[inline]
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

impl TruthTable {
    /// Constant-0 table.
    pub fn zero(n: usize) -> Result<Self> {
        check_arity(n, ABSOLUTE_MAX_VARS)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    /// Constant-1 table.
    pub fn one(n: usize) -> Result<Self> {
        Ok(Self::zero(n)?.negate())
    }

    /// The projection `x_{var+1}`.
    pub fn var(n: usize, var: usize) -> Result<Self> {
        let mut t = Self::zero(n)?;
        if var >= n {
            return Err(Error::VariableOutOfRange(var + 1));
        }
        let lit = Literal::pos(var);
        for (idx, w) in t.words.iter_mut().enumerate() {
            *w = lit.mask_word(idx);
        }
        t.clean();
        Ok(t)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut t = Self::zero(n)?;
        for m in 0..t.num_minterms() {
            if f(m) {
                t.words[m >> 6] |= 1 << (m & 63);
            }
        }
        Ok(t)
    }

    /// Builds a table directly from packed words. Padding bits are cleared.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_arity(n, ABSOLUTE_MAX_VARS)?;
        if words.len() != word_count(n) {
            return Err(Error::ArityMismatch {
                expected: word_count(n),
                found: words.len(),
            });
        }
        let mut t = Self { n, words };
        t.clean();
        Ok(t)
    }

    /// Parses a big-endian hex string of exactly `2^n` bits.
    pub fn from_hex(hex: &str, n: usize) -> Result<Self> {
        Self::from_hex_with_limit(hex, n, DEFAULT_MAX_VARS)
    }

    pub fn from_hex_with_limit(hex: &str, n: usize, max_vars: usize) -> Result<Self> {
        check_arity(n, max_vars)?;
        let hex = hex.trim();
        let hex = hex
            .strip_prefix("0x")
            .or_else(|| hex.strip_prefix("0X"))
            .unwrap_or(hex);
        let expected = ((1usize << n) / 4).max(1);
        let digits: Vec<char> = hex.chars().collect();
        if digits.len() != expected {
            return Err(Error::HexLength {
                n,
                expected,
                found: digits.len(),
            });
        }
        let mut t = Self::zero(n)?;
        for (k, ch) in digits.iter().rev().enumerate() {
            let d = ch.to_digit(16).ok_or(Error::HexChar(*ch))? as u64;
            t.words[k / 16] |= d << (4 * (k % 16));
        }
        if t.words[0] & !tail_mask(n) != 0 {
            return Err(Error::HexLength {
                n,
                expected,
                found: digits.len(),
            });
        }
        Ok(t)
    }

    /// Lowercase big-endian hex of exactly `max(1, 2^n / 4)` digits.
    pub fn to_hex(&self) -> String {
        let digits = ((1usize << self.n) / 4).max(1);
        let mut s = String::with_capacity(digits);
        for k in (0..digits).rev() {
            let d = (self.words[k / 16] >> (4 * (k % 16))) & 0xF;
            s.push(char::from_digit(d as u32, 16).unwrap());
        }
        s
    }

    /// Parses one product term per line; character `i` of a line gives the
    /// polarity of `x_{i+1}` (`1`, `0`, or `-` for absent). Blank lines and
    /// lines starting with `#` are skipped.
    pub fn from_cubes(text: &str, n: usize) -> Result<Self> {
        Self::from_cubes_with_limit(text, n, DEFAULT_MAX_VARS)
    }

    pub fn from_cubes_with_limit(text: &str, n: usize, max_vars: usize) -> Result<Self> {
        check_arity(n, max_vars)?;
        let mut t = Self::zero(n)?;
        let mut any = false;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let chars: Vec<char> = line.chars().collect();
            if chars.len() != n {
                return Err(Error::CubeLength {
                    line: lineno + 1,
                    expected: n,
                    found: chars.len(),
                });
            }
            let mut lits = Vec::new();
            for (var, ch) in chars.into_iter().enumerate() {
                match ch {
                    '1' => lits.push(Literal::pos(var)),
                    '0' => lits.push(Literal::neg(var)),
                    '-' => {}
                    other => {
                        return Err(Error::CubeChar {
                            line: lineno + 1,
                            ch: other,
                        })
                    }
                }
            }
            for (idx, w) in t.words.iter_mut().enumerate() {
                *w |= lits.iter().fold(u64::MAX, |m, l| m & l.mask_word(idx));
            }
            any = true;
        }
        if !any {
            return Err(Error::EmptyInput);
        }
        t.clean();
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_minterms(&self) -> usize {
        1 << self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, minterm: usize) -> bool {
        (self.words[minterm >> 6] >> (minterm & 63)) & 1 == 1
    }

    pub fn set(&mut self, minterm: usize, value: bool) {
        let bit = 1u64 << (minterm & 63);
        if value {
            self.words[minterm >> 6] |= bit;
        } else {
            self.words[minterm >> 6] &= !bit;
        }
    }

    fn clean(&mut self) {
        if self.n < 6 {
            self.words[0] &= tail_mask(self.n);
        }
    }

    /// `|f|`, the number of onset minterms.
    pub fn minterm_count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_constant(&self) -> bool {
        let c = self.minterm_count();
        c == 0 || c == self.num_minterms() as u64
    }

    #[must_use]
    pub fn negate(&self) -> Self {
        let mut t = Self {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        t.clean();
        t
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var >= self.n {
            Err(Error::VariableOutOfRange(var + 1))
        } else {
            Ok(())
        }
    }

    /// Copy of the table with bit `m` replaced by bit `m ^ (1 << var)`.
    fn swap_halves(&self, var: usize) -> Self {
        let mut words = self.words.clone();
        if var < 6 {
            let m = VAR_MASKS[var];
            let s = 1 << var;
            for w in &mut words {
                *w = ((*w & m) >> s) | ((*w & !m) << s);
            }
        } else {
            let stride = 1 << (var - 6);
            for block in words.chunks_mut(2 * stride) {
                let (lo, hi) = block.split_at_mut(stride);
                lo.swap_with_slice(hi);
            }
        }
        let mut t = Self { n: self.n, words };
        t.clean();
        t
    }

    /// `f` with `lit` forced true, kept at full arity.
    pub fn cofactor(&self, lit: Literal) -> Result<Self> {
        self.check_var(lit.var)?;
        let swapped = self.swap_halves(lit.var);
        let mut words = Vec::with_capacity(self.words.len());
        for (idx, (&w, &s)) in self.words.iter().zip(&swapped.words).enumerate() {
            let keep = lit.mask_word(idx);
            words.push((w & keep) | (s & !keep));
        }
        let mut t = Self { n: self.n, words };
        t.clean();
        Ok(t)
    }

    /// The Boolean difference `f_{x_i} XOR f_{~x_i}` as a full-arity table.
    pub fn boolean_difference(&self, var: usize) -> Result<Self> {
        self.check_var(var)?;
        let swapped = self.swap_halves(var);
        let words = self
            .words
            .iter()
            .zip(&swapped.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    /// Onset size of `f` restricted to the minterms where every literal in
    /// `lits` is true. Literal variables must be distinct and in range.
    pub fn count_under(&self, lits: &[Literal]) -> u64 {
        self.words
            .iter()
            .enumerate()
            .map(|(idx, &w)| {
                let m = lits.iter().fold(w, |acc, l| acc & l.mask_word(idx));
                u64::from(m.count_ones())
            })
            .sum()
    }

    /// `|f_b|`: onset size of the cofactor counted over the `2^(n - |b|)`
    /// assignments of the variables outside `b`.
    pub fn cofactor_count(&self, cube: &Cube) -> Result<u64> {
        for l in cube.literals() {
            self.check_var(l.var)?;
        }
        Ok(self.count_under(cube.literals()))
    }

    /// Applies `t`: returns `h` with `h(x) = f(y) ^ out`, where
    /// `y[perm[i]] = x[i] ^ neg[i]`.
    pub fn apply_transform(&self, t: &NpTransform) -> Result<Self> {
        if t.n() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: t.n(),
            });
        }
        let n = self.n;
        let chunks = n.div_ceil(8);
        let mut lut = vec![[0usize; 256]; chunks];
        for (c, table) in lut.iter_mut().enumerate() {
            for (b, slot) in table.iter_mut().enumerate() {
                let mut y = 0usize;
                for k in 0..8 {
                    let i = 8 * c + k;
                    if i < n && (b >> k) & 1 == 1 {
                        y |= 1 << t.perm[i];
                    }
                }
                *slot = y;
            }
        }
        let neg_mask: usize = (0..n)
            .filter(|&i| t.input_negated[i])
            .map(|i| 1 << t.perm[i])
            .sum();
        let out = if t.output_negated { u64::MAX } else { 0 };
        let mut words = vec![0u64; self.words.len()];
        let size = self.num_minterms();
        for (wi, word) in words.iter_mut().enumerate() {
            let base = wi << 6;
            let mut acc = 0u64;
            for bit in 0..64.min(size) {
                let x = base | bit;
                let mut y = neg_mask;
                for (c, table) in lut.iter().enumerate() {
                    y ^= table[(x >> (8 * c)) & 0xFF];
                }
                acc |= u64::from(self.get(y)) << bit;
            }
            *word = acc ^ out;
        }
        let mut h = Self { n, words };
        h.clean();
        Ok(h)
    }
}

/// An NP transformation with an optional output negation.
///
/// Position `i` of the transformed function reads source variable `perm[i]`,
/// negated when `input_negated[i]` is set:
/// `apply(f, T)(x) = f(y) ^ output_negated` with `y[perm[i]] = x[i] ^ input_negated[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NpTransform {
    perm: Vec<usize>,
    input_negated: Vec<bool>,
    output_negated: bool,
}

impl NpTransform {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            input_negated: vec![false; n],
            output_negated: false,
        }
    }

    pub fn new(perm: Vec<usize>, input_negated: Vec<bool>, output_negated: bool) -> Result<Self> {
        let n = perm.len();
        if input_negated.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: input_negated.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotPermutation);
            }
            seen[p] = true;
        }
        Ok(Self {
            perm,
            input_negated,
            output_negated,
        })
    }

    /// The transformation whose position `i` carries literal `lits[i]`.
    pub fn from_literals(lits: &[Literal], output_negated: bool) -> Result<Self> {
        Self::new(
            lits.iter().map(|l| l.var()).collect(),
            lits.iter().map(|l| l.is_negated()).collect(),
            output_negated,
        )
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn input_negated(&self) -> &[bool] {
        &self.input_negated
    }

    pub fn output_negated(&self) -> bool {
        self.output_negated
    }

    /// Literal carried by position `i`.
    pub fn literal(&self, i: usize) -> Literal {
        Literal::new(self.perm[i], self.input_negated[i])
    }

    pub fn literals(&self) -> Vec<Literal> {
        (0..self.n()).map(|i| self.literal(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        !self.output_negated
            && self.input_negated.iter().all(|&b| !b)
            && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `apply(apply(f, T), T.invert()) == f`.
    #[must_use]
    pub fn invert(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut neg = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            neg[self.perm[i]] = self.input_negated[i];
        }
        Self {
            perm,
            input_negated: neg,
            output_negated: self.output_negated,
        }
    }

    /// `apply(f, outer.compose(inner)) == apply(apply(f, inner), outer)`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.n() != inner.n() {
            return Err(Error::ArityMismatch {
                expected: self.n(),
                found: inner.n(),
            });
        }
        let perm = self.perm.iter().map(|&p| inner.perm[p]).collect();
        let neg = (0..self.n())
            .map(|i| self.input_negated[i] ^ inner.input_negated[self.perm[i]])
            .collect();
        Ok(Self {
            perm,
            input_negated: neg,
            output_negated: self.output_negated ^ inner.output_negated,
        })
    }
}

impl fmt::Display for NpTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits: Vec<String> = self.literals().iter().map(ToString::to_string).collect();
        if self.output_negated {
            write!(f, "~f({})", lits.join(","))
        } else {
            write!(f, "f({})", lits.join(","))
        }
    }
}
