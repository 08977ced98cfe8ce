// SPDX-License-Identifier: Apache-2.0

//! Two reference functions used as regression fixtures.

use crate::truthtable::TruthTable;

/// 7 variables, 46 minterms:
/// `x3 ~x5 x7 + ~x1 ~x2 x4 + ~x1 ~x2 ~x4 x5 ~x6 + x3 ~x4 x5 ~x6
///  + x2 ~x3 ~x4 x5 ~x6 + ~x2 ~x3 ~x4 x5 ~x6`.
pub const EXAMPLE1_CUBES: &str = "\
--1-0-1
00-1---
00-010-
--1010-
-10010-
-00010-
";

pub const EXAMPLE1_HEX: &str = "1100f1f011fff1f01100110011ff1100";

/// 6 variables, 32 minterms. The first fourteen product terms cover only 31
/// minterms; the last line adds `x1 ~x2 x3 x4 ~x5 x6`, the only single
/// minterm that also gives the first-order values (13,64), (16,36), (16,52),
/// (16,20), (16,12), (16,28) for x1..x6.
pub const EXAMPLE2_CUBES: &str = "\
0110--
1100--
0001--
011--1
01-110
101--0
110--1
00000-
0010-1
001-11
000-10
010100
111100
100011
101101
";

pub const EXAMPLE2_HEX: &str = "595a69596569a569";

pub fn example1() -> TruthTable {
    TruthTable::from_cubes(EXAMPLE1_CUBES, 7).expect("valid fixture")
}

pub fn example2() -> TruthTable {
    TruthTable::from_cubes(EXAMPLE2_CUBES, 6).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_and_hex_forms_agree() {
        assert_eq!(example1(), TruthTable::from_hex(EXAMPLE1_HEX, 7).unwrap());
        assert_eq!(example2(), TruthTable::from_hex(EXAMPLE2_HEX, 6).unwrap());
        assert_eq!(example1().minterm_count(), 46);
        assert_eq!(example2().minterm_count(), 32);
        assert_eq!(example2().negate().minterm_count(), 32);
    }
}
