// SPDX-License-Identifier: Apache-2.0

//! Canonical form computation.
//!
//! The search builds a candidate literal sequence `t_1 .. t_n` position by
//! position. Unplaced variables live in ordered groups; every member of a
//! group carries the same key, and keys strictly decrease from one group to
//! the next. The initial key of a variable is its phase-adjusted first-order
//! DC value. Whenever a literal `t` is placed, every unplaced literal `l` is
//! re-keyed by the second-order value `dc(t, l)` and groups are split (never
//! merged) by the new key.
//!
//! This ordering is exactly the order in which the first- and second-order
//! entries of the DC vector are compared, so any sequence that violates it is
//! strictly smaller than one that respects it. When the front group still
//! holds more than one class, or a class whose polarity no signature has
//! decided, the search branches over which class (and polarity) comes next.
//! Members of one symmetric class are interchangeable, so only one
//! representative per class is branched on. Complete sequences are compared
//! with the full DC vector and the largest one defines the canonical form.

use std::cmp::Ordering;
use std::fmt;

use crate::analysis::{output_phase, symmetry_classes, variable_phases, PhaseDecision};
use crate::error::{Error, Result};
use crate::signature::{compare_tables, first_order_dc, DcValue, Mode, Signatures};
use crate::truthtable::{Literal, NpTransform, TruthTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Asymmetric,
    Symmetric,
    Independent,
}

/// A set of interchangeable literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarClass {
    pub kind: ClassKind,
    /// Aligned literals in ascending variable order.
    pub literals: Vec<Literal>,
    /// False while no signature has decided the polarity of the class.
    pub phase_fixed: bool,
    /// Key from the most recent signature update.
    pub key: DcValue,
}

impl VarClass {
    pub fn representative(&self) -> Literal {
        self.literals[0]
    }

    fn complemented(&self) -> Self {
        Self {
            literals: self.literals.iter().map(|l| l.complement()).collect(),
            ..self.clone()
        }
    }

    fn kind_for(len: usize, independent: bool) -> ClassKind {
        if independent {
            ClassKind::Independent
        } else if len > 1 {
            ClassKind::Symmetric
        } else {
            ClassKind::Asymmetric
        }
    }
}

impl fmt::Display for VarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits: Vec<String> = self.literals.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", lits.join(","))?;
        if !self.phase_fixed {
            f.write_str("?")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    /// 1-based position among all groups, counting groups already placed.
    pub seq: usize,
    pub classes: Vec<VarClass>,
}

impl Group {
    pub fn key(&self) -> DcValue {
        self.classes[0].key
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.classes.iter().flat_map(|c| c.literals.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.classes.iter().map(|c| c.literals.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<String> = self.classes.iter().map(ToString::to_string).collect();
        write!(f, "G{}={}", self.seq, classes.join(","))
    }
}

/// A group can be placed without branching: it holds a single class that is
/// either independent or has a decided polarity.
pub fn group_resolved(g: &Group) -> bool {
    match g.classes.as_slice() {
        [c] => c.kind == ClassKind::Independent || c.phase_fixed,
        _ => false,
    }
}

/// Search state: the placed prefix and the ordered unplaced groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupState {
    pub groups: Vec<Group>,
    pub resolved_prefix: Vec<Literal>,
    placed_groups: usize,
}

impl GroupState {
    pub fn first_unresolved(&self) -> Option<usize> {
        self.groups.iter().position(|g| !group_resolved(g))
    }

    pub fn all_resolved(&self) -> bool {
        self.first_unresolved().is_none()
    }

    fn renumber(&mut self) {
        for (i, g) in self.groups.iter_mut().enumerate() {
            g.seq = self.placed_groups + i + 1;
        }
    }
}

impl fmt::Display for GroupState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self
            .resolved_prefix
            .iter()
            .map(ToString::to_string)
            .collect();
        let groups: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "[{}] {}", prefix.join(" "), groups.join(" "))
    }
}

/// A literal sequence with an output polarity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub literals: Vec<Literal>,
    pub output_negated: bool,
}

impl Candidate {
    pub fn new(literals: Vec<Literal>, output_negated: bool) -> Self {
        Self {
            literals,
            output_negated,
        }
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.literals.len() == n
    }

    /// The transformation taking `f` to the function whose input `i` is
    /// `t_i` (the canonical transformation when this is `C_f`).
    pub fn transform(&self) -> Result<NpTransform> {
        NpTransform::from_literals(&self.literals, self.output_negated)
    }

    /// `C_f` viewed as a transformation: maps the transformed function back
    /// to `f`. Its inverse is [`Candidate::transform`].
    pub fn as_transform(&self) -> Result<NpTransform> {
        Ok(self.transform()?.invert())
    }

    pub fn apply(&self, f: &TruthTable) -> Result<TruthTable> {
        if !self.is_complete(f.n()) {
            return Err(Error::IncompleteCandidate {
                n: f.n(),
                found: self.literals.len(),
            });
        }
        f.apply_transform(&self.transform()?)
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits: Vec<String> = self.literals.iter().map(ToString::to_string).collect();
        f.write_str(&lits.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonResult {
    pub c_f: Candidate,
    pub canonical_table: TruthTable,
    /// Complete candidates compared.
    pub candidates_examined: u64,
    /// Branches skipped because a symmetric class needs only one representative.
    pub branches_pruned: u64,
    pub mode: Mode,
}

impl CanonResult {
    /// The transformation with `apply_transform(f, t) == canonical_table`.
    pub fn transform(&self) -> NpTransform {
        self.c_f.transform().expect("complete candidate")
    }
}

/// Groups the variables of `f` by their phase-adjusted first-order keys.
pub fn initial_group(f: &TruthTable, mode: Mode) -> Result<GroupState> {
    let phases = variable_phases(f);
    let mut classes = Vec::new();
    for sc in symmetry_classes(f, &phases)? {
        let key = mode.key(first_order_dc(f, sc.literals[0])?);
        classes.push(VarClass {
            kind: VarClass::kind_for(sc.literals.len(), sc.independent),
            phase_fixed: sc.independent || sc.phase != PhaseDecision::Undetermined,
            literals: sc.literals,
            key,
        });
    }
    classes.sort_by(|a, b| {
        b.key
            .cmp(&a.key)
            .then(a.representative().var().cmp(&b.representative().var()))
    });
    let mut groups: Vec<Group> = Vec::new();
    for c in classes {
        match groups.last_mut() {
            Some(g) if g.key() == c.key => g.classes.push(c),
            _ => groups.push(Group {
                seq: 0,
                classes: vec![c],
            }),
        }
    }
    let mut state = GroupState {
        groups,
        resolved_prefix: Vec::new(),
        placed_groups: 0,
    };
    state.renumber();
    Ok(state)
}

/// One way of splitting an unresolved group: `first` is placed next, `rest`
/// (possibly empty) follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitApproach {
    pub first: Group,
    pub rest: Group,
}

/// Enumerates the splitting approaches of an unresolved group.
///
/// Each class contributes its representative literal as `first`, once per
/// polarity when the class polarity is undecided (independent classes need
/// only one). The remaining members of the chosen class stay in `rest`, so
/// they compete again with the other classes after the next signature update.
pub fn split_group(g: &Group) -> Result<Vec<SplitApproach>> {
    if group_resolved(g) {
        return Err(Error::GroupResolved);
    }
    let mut out = Vec::new();
    for (q, class) in g.classes.iter().enumerate() {
        let both = !class.phase_fixed && class.kind != ClassKind::Independent;
        let variants: Vec<VarClass> = if both {
            vec![class.clone(), class.complemented()]
        } else {
            vec![class.clone()]
        };
        for chosen in variants {
            let rep = chosen.representative();
            let first = Group {
                seq: g.seq,
                classes: vec![VarClass {
                    kind: VarClass::kind_for(1, chosen.kind == ClassKind::Independent),
                    literals: vec![rep],
                    phase_fixed: true,
                    key: chosen.key,
                }],
            };
            let mut rest_classes = Vec::new();
            for (r, other) in g.classes.iter().enumerate() {
                if r != q {
                    rest_classes.push(other.clone());
                } else if chosen.literals.len() > 1 {
                    let remaining = chosen.literals[1..].to_vec();
                    rest_classes.push(VarClass {
                        kind: VarClass::kind_for(
                            remaining.len(),
                            chosen.kind == ClassKind::Independent,
                        ),
                        literals: remaining,
                        phase_fixed: chosen.phase_fixed,
                        key: chosen.key,
                    });
                }
            }
            out.push(SplitApproach {
                first,
                rest: Group {
                    seq: g.seq + 1,
                    classes: rest_classes,
                },
            });
        }
    }
    Ok(out)
}

/// Number of branches a literal-by-literal split would need, minus the
/// branches `split_group` produces.
fn pruned_by_symmetry(g: &Group) -> u64 {
    g.classes
        .iter()
        .map(|c| {
            let polarities = if !c.phase_fixed && c.kind != ClassKind::Independent {
                2
            } else {
                1
            };
            (c.literals.len() as u64 - 1) * polarities
        })
        .sum()
}

/// Replaces the first unresolved group by the two halves of `choice` and
/// shifts the sequence numbers of every later group by one.
pub fn update_sequence(state: &GroupState, choice: &SplitApproach) -> GroupState {
    let mut next = state.clone();
    let i = match state.first_unresolved() {
        Some(i) => i,
        None => return next,
    };
    let mut replacement = vec![choice.first.clone()];
    if !choice.rest.is_empty() {
        replacement.push(choice.rest.clone());
    }
    next.groups.splice(i..=i, replacement);
    next.renumber();
    next
}

/// Re-keys every unplaced class by its DC value under the most recently
/// placed literal, fixes polarities the new values decide, and splits groups
/// whose members now differ.
fn refine(sig: &Signatures, state: &mut GroupState, placed: Literal, mode: Mode) {
    let mut groups = Vec::with_capacity(state.groups.len());
    for g in state.groups.drain(..) {
        let mut classes: Vec<VarClass> = g
            .classes
            .into_iter()
            .map(|mut c| {
                let rep = c.representative();
                let v = sig.dc(&[placed], rep);
                if c.phase_fixed || c.kind == ClassKind::Independent {
                    c.key = mode.key(v);
                } else {
                    let w = sig.dc(&[placed], rep.complement());
                    match v.cof.cmp(&w.cof) {
                        Ordering::Greater => {
                            c.phase_fixed = true;
                            c.key = mode.key(v);
                        }
                        Ordering::Less => {
                            c = c.complemented();
                            c.phase_fixed = true;
                            c.key = mode.key(w);
                        }
                        Ordering::Equal => c.key = mode.key(v),
                    }
                }
                c
            })
            .collect();
        classes.sort_by_key(|c| std::cmp::Reverse(c.key));
        let mut run: Vec<VarClass> = Vec::new();
        for c in classes {
            if run.first().is_some_and(|r| r.key != c.key) {
                groups.push(Group {
                    seq: 0,
                    classes: std::mem::take(&mut run),
                });
            }
            run.push(c);
        }
        groups.push(Group {
            seq: 0,
            classes: run,
        });
    }
    state.groups = groups;
    state.renumber();
}

/// Applies [`refine`] for the last literal of the placed prefix.
pub fn update_signature(f: &TruthTable, state: &GroupState, mode: Mode) -> GroupState {
    let mut next = state.clone();
    if let Some(&last) = state.resolved_prefix.last() {
        refine(&Signatures::new(f), &mut next, last, mode);
    }
    next
}

/// Moves every resolved group at the front into the prefix, re-keying after
/// each placed literal.
fn place_resolved_front(sig: &Signatures, state: &mut GroupState, mode: Mode) {
    while state.groups.first().is_some_and(group_resolved) {
        let g = state.groups.remove(0);
        state.placed_groups += 1;
        for lit in g.literals() {
            state.resolved_prefix.push(lit);
            refine(sig, state, lit, mode);
        }
        state.renumber();
    }
}

struct Searcher<'a> {
    source: &'a TruthTable,
    sig: Signatures,
    output_negated: bool,
    mode: Mode,
    best: Option<(Candidate, TruthTable)>,
    examined: u64,
    pruned: u64,
}

impl Searcher<'_> {
    fn run(&mut self, mut state: GroupState) {
        place_resolved_front(&self.sig, &mut state, self.mode);
        let Some(front) = state.groups.first() else {
            self.leaf(state.resolved_prefix);
            return;
        };
        let approaches = split_group(front).expect("front group is unresolved");
        self.pruned += pruned_by_symmetry(front);
        for choice in &approaches {
            self.run(update_sequence(&state, choice));
        }
    }

    fn leaf(&mut self, literals: Vec<Literal>) {
        self.examined += 1;
        let cand = Candidate::new(literals, self.output_negated);
        let table = cand.apply(self.source).expect("complete candidate");
        let better = match &self.best {
            None => true,
            Some((_, best)) => compare_tables(&table, best, self.mode) == Ordering::Greater,
        };
        if better {
            self.best = Some((cand, table));
        }
    }
}

fn run_search(
    source: &TruthTable,
    polarities: &[bool],
    mode: Mode,
    start: Option<GroupState>,
) -> Result<CanonResult> {
    let mut best: Option<(Candidate, TruthTable)> = None;
    let mut examined = 0;
    let mut pruned = 0;
    for &neg in polarities {
        let searched = if neg { source.negate() } else { source.clone() };
        let state = match &start {
            Some(s) => s.clone(),
            None => initial_group(&searched, mode)?,
        };
        let mut s = Searcher {
            source,
            sig: Signatures::new(&searched),
            output_negated: neg,
            mode,
            best: best.take(),
            examined: 0,
            pruned: 0,
        };
        s.run(state);
        examined += s.examined;
        pruned += s.pruned;
        best = s.best;
    }
    let (c_f, canonical_table) = best.expect("at least one candidate");
    Ok(CanonResult {
        c_f,
        canonical_table,
        candidates_examined: examined,
        branches_pruned: pruned,
        mode,
    })
}

/// Depth-first search from `state` over `f` with positive output polarity.
pub fn search(f: &TruthTable, state: &GroupState, mode: Mode) -> Result<CanonResult> {
    run_search(f, &[false], mode, Some(state.clone()))
}

/// Canonical form of `f`: the member of its NPN class with the largest DC
/// vector (or cofactor vector in [`Mode::CofactorOnly`]).
pub fn canonical_form(f: &TruthTable, mode: Mode) -> Result<CanonResult> {
    let polarities: &[bool] = match output_phase(f) {
        PhaseDecision::Positive => &[false],
        PhaseDecision::Negative => &[true],
        PhaseDecision::Undetermined => &[false, true],
    };
    run_search(f, polarities, mode, None)
}

/// Returns a transformation `t` with `apply_transform(f, t) == g` when the
/// two functions are NPN-equivalent.
pub fn match_functions(f: &TruthTable, g: &TruthTable, mode: Mode) -> Result<Option<NpTransform>> {
    if f.n() != g.n() {
        return Err(Error::ArityMismatch {
            expected: f.n(),
            found: g.n(),
        });
    }
    let cf = canonical_form(f, mode)?;
    let cg = canonical_form(g, mode)?;
    if cf.canonical_table != cg.canonical_table {
        return Ok(None);
    }
    let t = cg.transform().invert().compose(&cf.transform())?;
    debug_assert_eq!(&f.apply_transform(&t)?, g);
    Ok(Some(t))
}
