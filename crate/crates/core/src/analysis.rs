// SPDX-License-Identifier: Apache-2.0

//! Output and input phase assignment, independence and symmetry detection.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::signature::{first_order_dc, DcValue};
use crate::truthtable::{Literal, TruthTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseDecision {
    Positive,
    Negative,
    Undetermined,
}

impl PhaseDecision {
    fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => PhaseDecision::Positive,
            Ordering::Less => PhaseDecision::Negative,
            Ordering::Equal => PhaseDecision::Undetermined,
        }
    }

    /// The literal of `var` this decision selects; undetermined picks positive.
    pub fn literal(self, var: usize) -> Literal {
        Literal::new(var, self == PhaseDecision::Negative)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    /// `x_i <-> x_j`
    Equivalence,
    /// `x_i <-> ~x_j`
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryRelation {
    pub var_a: usize,
    pub var_b: usize,
    pub kind: SymmetryKind,
}

/// Positive when `|f| > 2^(n-1)`, negative when smaller.
pub fn output_phase(f: &TruthTable) -> PhaseDecision {
    let half = (f.num_minterms() / 2) as u64;
    PhaseDecision::from_ordering(f.minterm_count().cmp(&half))
}

/// Compares `|f_{x_i}|` with `|f_{~x_i}|`.
pub fn variable_phase(f: &TruthTable, var: usize) -> Result<PhaseDecision> {
    let pos = first_order_dc(f, Literal::pos(var))?.cof;
    let neg = f.minterm_count() - pos;
    Ok(PhaseDecision::from_ordering(pos.cmp(&neg)))
}

pub fn is_independent(f: &TruthTable, var: usize) -> Result<bool> {
    Ok(first_order_dc(f, Literal::pos(var))?.diff == 0)
}

/// True when exchanging literal `a` with literal `b` leaves `f` unchanged,
/// i.e. `f_{a ~b} == f_{~a b}`.
pub fn literals_symmetric(f: &TruthTable, a: Literal, b: Literal) -> Result<bool> {
    if a.var() == b.var() {
        return Err(Error::SameVariable(a.var() + 1));
    }
    let left = f.cofactor(a)?.cofactor(b.complement())?;
    let right = f.cofactor(a.complement())?.cofactor(b)?;
    Ok(left == right)
}

pub fn are_symmetric(f: &TruthTable, i: usize, j: usize, kind: SymmetryKind) -> Result<bool> {
    let b = match kind {
        SymmetryKind::Equivalence => Literal::pos(j),
        SymmetryKind::Skew => Literal::neg(j),
    };
    literals_symmetric(f, Literal::pos(i), b)
}

/// The first symmetry found between `x_i` and `x_j`, trying equivalence first.
pub fn find_symmetry(f: &TruthTable, i: usize, j: usize) -> Result<Option<SymmetryRelation>> {
    for kind in [SymmetryKind::Equivalence, SymmetryKind::Skew] {
        if are_symmetric(f, i, j, kind)? {
            return Ok(Some(SymmetryRelation {
                var_a: i,
                var_b: j,
                kind,
            }));
        }
    }
    Ok(None)
}

/// A block of the variable partition.
///
/// Literals are aligned so that any two of them can be exchanged without
/// changing the function. When `phase` is undetermined the polarities are
/// relative to the first literal, which is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryClass {
    pub literals: Vec<Literal>,
    pub phase: PhaseDecision,
    pub independent: bool,
}

impl SymmetryClass {
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.literals.iter().map(|l| l.var())
    }
}

/// First-order phase of every variable; independent variables that would be
/// undetermined are assigned positive.
pub fn variable_phases(f: &TruthTable) -> Vec<PhaseDecision> {
    (0..f.n())
        .map(|v| {
            let p = variable_phase(f, v).expect("in range");
            if p == PhaseDecision::Undetermined && is_independent(f, v).expect("in range") {
                PhaseDecision::Positive
            } else {
                p
            }
        })
        .collect()
}

/// Partitions the variables into the independent class (if any), symmetric
/// classes and asymmetric singletons, in ascending order of their smallest
/// variable with the independent class first.
///
/// Only variables whose phase-adjusted first-order DC values agree are tested
/// against each other.
pub fn symmetry_classes(f: &TruthTable, phases: &[PhaseDecision]) -> Result<Vec<SymmetryClass>> {
    let n = f.n();
    if phases.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: phases.len(),
        });
    }
    let mut classes = Vec::new();
    let mut assigned = vec![false; n];

    let independent: Vec<usize> = (0..n)
        .filter(|&v| is_independent(f, v).expect("in range"))
        .collect();
    if !independent.is_empty() {
        for &v in &independent {
            assigned[v] = true;
        }
        classes.push(SymmetryClass {
            literals: independent.iter().map(|&v| Literal::pos(v)).collect(),
            phase: PhaseDecision::Positive,
            independent: true,
        });
    }

    let key = |v: usize| -> Result<DcValue> { first_order_dc(f, phases[v].literal(v)) };
    let keys: Vec<Option<DcValue>> = (0..n)
        .map(|v| {
            if assigned[v] {
                Ok(None)
            } else {
                key(v).map(Some)
            }
        })
        .collect::<Result<_>>()?;

    for v in 0..n {
        if assigned[v] {
            continue;
        }
        assigned[v] = true;
        let mut members = vec![phases[v].literal(v)];
        for w in v + 1..n {
            let undetermined = |u: usize| phases[u] == PhaseDecision::Undetermined;
            if assigned[w] || keys[w] != keys[v] || undetermined(w) != undetermined(v) {
                continue;
            }
            let options: &[Literal] = if phases[w] == PhaseDecision::Undetermined {
                &[Literal::pos(w), Literal::neg(w)]
            } else {
                &[phases[w].literal(w)]
            };
            for &cand in options {
                let mut ok = true;
                for &m in &members {
                    if !literals_symmetric(f, m, cand)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    members.push(cand);
                    assigned[w] = true;
                    break;
                }
            }
        }
        classes.push(SymmetryClass {
            literals: members,
            phase: phases[v],
            independent: false,
        });
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn output_phase_examples() {
        assert_eq!(output_phase(&fixtures::example1()), PhaseDecision::Negative);
        assert_eq!(
            output_phase(&fixtures::example2()),
            PhaseDecision::Undetermined
        );
        assert_eq!(
            output_phase(&TruthTable::one(2).unwrap()),
            PhaseDecision::Positive
        );
    }

    #[test]
    fn variable_phase_examples() {
        let f1 = fixtures::example1();
        assert_eq!(variable_phase(&f1, 2).unwrap(), PhaseDecision::Positive);
        let f2 = fixtures::example2();
        assert_eq!(variable_phase(&f2, 0).unwrap(), PhaseDecision::Negative);
        assert_eq!(variable_phase(&f2, 1).unwrap(), PhaseDecision::Undetermined);
        let expected = [
            PhaseDecision::Negative,
            PhaseDecision::Negative,
            PhaseDecision::Positive,
            PhaseDecision::Negative,
            PhaseDecision::Positive,
            PhaseDecision::Negative,
            PhaseDecision::Positive,
        ];
        assert_eq!(variable_phases(&f1), expected);
    }

    #[test]
    fn independence() {
        let and_padded = TruthTable::from_cubes("11-", 3).unwrap();
        assert!(is_independent(&and_padded, 2).unwrap());
        assert!(!is_independent(&and_padded, 0).unwrap());
        let f1 = fixtures::example1();
        assert!((0..7).all(|v| !is_independent(&f1, v).unwrap()));
        let zero = TruthTable::zero(3).unwrap();
        assert!((0..3).all(|v| is_independent(&zero, v).unwrap()));
    }

    #[test]
    fn symmetry_pairs() {
        let f1 = fixtures::example1();
        assert!(are_symmetric(&f1, 0, 1, SymmetryKind::Equivalence).unwrap());
        assert!(are_symmetric(&f1, 2, 6, SymmetryKind::Equivalence).unwrap());
        let f2 = fixtures::example2();
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!are_symmetric(&f2, i, j, SymmetryKind::Equivalence).unwrap());
            }
        }
        let xor = TruthTable::from_hex("6", 2).unwrap();
        assert!(are_symmetric(&xor, 0, 1, SymmetryKind::Equivalence).unwrap());
        assert!(are_symmetric(&xor, 0, 1, SymmetryKind::Skew).unwrap());
        assert_eq!(
            are_symmetric(&xor, 1, 1, SymmetryKind::Skew),
            Err(Error::SameVariable(2))
        );
        // x1 & ~x2 is skew-symmetric only
        let f = TruthTable::from_cubes("10", 2).unwrap();
        assert_eq!(
            find_symmetry(&f, 0, 1).unwrap().map(|r| r.kind),
            Some(SymmetryKind::Skew)
        );
    }

    fn partition(f: &TruthTable) -> Vec<Vec<usize>> {
        let phases = variable_phases(f);
        symmetry_classes(f, &phases)
            .unwrap()
            .iter()
            .map(|c| c.vars().collect())
            .collect()
    }

    #[test]
    fn classes_of_examples() {
        assert_eq!(
            partition(&fixtures::example1()),
            vec![vec![0, 1], vec![2, 6], vec![3], vec![4], vec![5]]
        );
        assert_eq!(
            partition(&fixtures::example2()),
            vec![vec![0], vec![1], vec![2], vec![3], vec![4], vec![5]]
        );
        let and3 = TruthTable::from_cubes("111", 3).unwrap();
        assert_eq!(partition(&and3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn classes_align_skew_pairs() {
        // x1 xor x2 xor x3 with an independent x4
        let f = TruthTable::from_fn(4, |m| (m & 7).count_ones() % 2 == 1).unwrap();
        let phases = variable_phases(&f);
        let classes = symmetry_classes(&f, &phases).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes[0].independent);
        assert_eq!(classes[0].literals, vec![Literal::pos(3)]);
        assert_eq!(classes[1].phase, PhaseDecision::Undetermined);
        assert_eq!(classes[1].vars().collect::<Vec<_>>(), vec![0, 1, 2]);
        // majority with x3 inverted: x3 joins with negative polarity
        let g = TruthTable::from_fn(3, |m| {
            let b = [(m & 1) != 0, (m & 2) != 0, (m & 4) == 0];
            b.iter().filter(|&&x| x).count() >= 2
        })
        .unwrap();
        let classes = symmetry_classes(&g, &variable_phases(&g)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(
            classes[0].literals,
            vec![Literal::pos(0), Literal::pos(1), Literal::neg(2)]
        );
    }
}
