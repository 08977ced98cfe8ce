// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count {n} is outside 1..={max}")]
    ArityOutOfRange { n: usize, max: usize },

    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("hex string has {found} digits, expected {expected} for {n} variables")]
    HexLength {
        n: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid hex character {0:?}")]
    HexChar(char),

    #[error("cube line {line}: invalid character {ch:?} (expected 0, 1 or -)")]
    CubeChar { line: usize, ch: char },

    #[error("cube line {line}: length {found}, expected {expected}")]
    CubeLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("input contains no functions")]
    EmptyInput,

    #[error("variable x{0} is out of range")]
    VariableOutOfRange(usize),

    #[error("variable x{0} appears more than once")]
    DuplicateVariable(usize),

    #[error("permutation is not a bijection")]
    NotPermutation,

    #[error("symmetry check needs two distinct variables, got x{0} twice")]
    SameVariable(usize),

    #[error("candidate covers {found} of {n} variables")]
    IncompleteCandidate { n: usize, found: usize },

    #[error("group is already resolved and cannot be split")]
    GroupResolved,

    #[error("brute-force oracle supports at most {max} variables, got {n}")]
    OracleTooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
