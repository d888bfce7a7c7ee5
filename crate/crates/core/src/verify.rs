//! Exhaustive cross-checks of the closed forms against the retrograde solver.
//!
//! Every claim is checked on a finite region recorded in its report. Board claims
//! use the region `x + y ≤ N`; sequence claims use the index range `0..=N`.

use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::beatty::{classify_triple, lower_wythoff, upper_wythoff, SequenceError, SequenceIndex, TripleCase};
use crate::closedform::{
    a_star, b1, b2, b_star, p0_contains, p1_contains, p4_contains, SET_A, SET_B, SET_C,
};
use crate::hofstadter::{f, h_closed, GHofstadterTable, GTable, HTable};
use crate::rules::{for_each_move, MoveKind, Position, Ruleset, SumPosition};
use crate::solver::{
    board_cells, solve_grundy, solve_outcomes, solve_sum_outcomes, Outcome, SolverError,
};

/// Mismatches kept in memory per report; the count is always exact.
const KEEP_MISMATCHES: usize = 10_000;

/// Board bound used for the move-set facts inside the sequence checks.
pub const MOVE_SET_BOUND: u32 = 1024;

/// Default number of mismatches printed per record.
pub const DEFAULT_MAX_MISMATCHES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub at: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub bound: u64,
    pub checked_count: u64,
    pub mismatch_count: u64,
    /// The first mismatches found, up to an in-memory cap.
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
    /// Descriptive finding that is reported rather than asserted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// One-line record: id, bound, checked, mismatch count, status, note, first mismatches.
    pub fn to_record(&self, max_mismatches: usize) -> String {
        let mut line = format!(
            "claim={} bound={} checked={} mismatches={} status={}",
            self.claim_id,
            self.bound,
            self.checked_count,
            self.mismatch_count,
            if self.passed { "pass" } else { "fail" }
        );
        if let Some(note) = &self.note {
            write!(line, " note=\"{}\"", note.replace('"', "'")).unwrap();
        }
        if !self.mismatches.is_empty() && max_mismatches > 0 {
            let shown: Vec<String> = self
                .mismatches
                .iter()
                .take(max_mismatches)
                .map(|m| format!("{}:expected={},actual={}", m.at, m.expected, m.actual))
                .collect();
            write!(line, " first=[{}]", shown.join("; ")).unwrap();
        }
        line
    }
}

impl Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record(DEFAULT_MAX_MISMATCHES))
    }
}

/// Accumulates one report.
struct Sweep {
    claim_id: String,
    bound: u64,
    checked: u64,
    count: u64,
    mismatches: Vec<Mismatch>,
    note: Option<String>,
}

impl Sweep {
    fn new(claim_id: impl Into<String>, bound: u64) -> Self {
        Sweep { claim_id: claim_id.into(), bound, checked: 0, count: 0, mismatches: Vec::new(), note: None }
    }

    #[inline]
    fn check<T: PartialEq + Display>(&mut self, at: impl Display, expected: T, actual: T) {
        self.checked += 1;
        if expected != actual {
            self.fail(at, expected, actual);
        }
    }

    #[inline]
    fn holds(&mut self, at: impl Display, ok: bool) {
        self.check(at, true, ok);
    }

    fn fail(&mut self, at: impl Display, expected: impl Display, actual: impl Display) {
        self.count += 1;
        if self.mismatches.len() < KEEP_MISMATCHES {
            self.mismatches.push(Mismatch {
                at: at.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            claim_id: self.claim_id,
            bound: self.bound,
            checked_count: self.checked,
            mismatch_count: self.count,
            passed: self.count == 0,
            mismatches: self.mismatches,
            note: self.note,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("claim {claim} needs a bound of at least {min}, got {bound}")]
    BoundTooSmall { claim: Claim, min: u64, bound: u64 },
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

fn require(claim: Claim, bound: u64) -> Result<(), VerifyError> {
    if bound < claim.min_bound() {
        Err(VerifyError::BoundTooSmall { claim, min: claim.min_bound(), bound })
    } else {
        Ok(())
    }
}

fn board_bound(claim: Claim, bound: u64) -> Result<u32, VerifyError> {
    require(claim, bound)?;
    u32::try_from(bound).map_err(|_| SolverError::TooLarge { bound: u32::MAX }.into())
}

/// Cells with `x + y ≤ bound`, row-major.
fn region(bound: u32) -> impl Iterator<Item = Position> {
    (0..=bound).flat_map(move |y| (0..=bound - y).map(move |x| Position::new(x, y)))
}

#[inline]
fn outside_corner(p: Position) -> bool {
    p.x >= 8 || p.y >= 8
}

/// Small-board ground truth: solver P-sets inside the 8×8 corner equal the literal sets.
pub fn verify_small_board() -> Result<VerificationReport, VerifyError> {
    let mut sweep = Sweep::new(Claim::SmallBoard.id(), 7);
    let cases: [(Ruleset, &[Position]); 3] = [
        (Ruleset::VARIANT, &SET_A),
        (Ruleset::VARIANT_MISERE, &SET_B),
        (Ruleset::WYTHOFF, &SET_C),
    ];
    for (r, set) in cases {
        let table = solve_outcomes(r, 7)?;
        for p in board_cells(7) {
            sweep.check(
                format_args!("{p}[t={},{}]", r.terminal_threshold, r.convention),
                Outcome::from_is_p(set.contains(&p)),
                table.outcome(p),
            );
        }
    }
    Ok(sweep.finish())
}

/// The variant's P-positions are exactly `P1`.
pub fn verify_p1_theorem(bound: u64) -> Result<VerificationReport, VerifyError> {
    let n = board_bound(Claim::P1Theorem, bound)?;
    let table = solve_outcomes(Ruleset::VARIANT, n)?;
    let mut sweep = Sweep::new(Claim::P1Theorem.id(), bound);
    for p in region(n) {
        sweep.check(p, Outcome::from_is_p(p1_contains(p)), table.outcome(p));
    }
    Ok(sweep.finish())
}

/// Classical Wythoff P-positions are exactly `P0`.
pub fn verify_wythoff_theorem(bound: u64) -> Result<VerificationReport, VerifyError> {
    let n = board_bound(Claim::WythoffTheorem, bound)?;
    let table = solve_outcomes(Ruleset::WYTHOFF, n)?;
    let mut sweep = Sweep::new(Claim::WythoffTheorem.id(), bound);
    for p in region(n) {
        sweep.check(p, Outcome::from_is_p(p0_contains(p)), table.outcome(p));
    }
    Ok(sweep.finish())
}

/// Misère variant: P-set is `B` in the corner and `P0` once a coordinate reaches 8.
pub fn verify_misere_theorem(bound: u64) -> Result<VerificationReport, VerifyError> {
    let n = board_bound(Claim::MisereTheorem, bound)?;
    let table = solve_outcomes(Ruleset::VARIANT_MISERE, n)?;
    let mut sweep = Sweep::new(Claim::MisereTheorem.id(), bound);
    for p in board_cells(7) {
        sweep.check(p, Outcome::from_is_p(SET_B.contains(&p)), table.outcome(p));
    }
    for p in region(n).filter(|&p| outside_corner(p)) {
        sweep.check(p, Outcome::from_is_p(p0_contains(p)), table.outcome(p));
    }
    Ok(sweep.finish())
}

/// Once a coordinate reaches 8, the variant's Grundy value is 1 exactly on `P0`.
pub fn verify_grundy_one_theorem(bound: u64) -> Result<VerificationReport, VerifyError> {
    let n = board_bound(Claim::GrundyOneTheorem, bound)?;
    let table = solve_grundy(Ruleset::VARIANT, n)?;
    let mut sweep = Sweep::new(Claim::GrundyOneTheorem.id(), bound);
    for p in region(n).filter(|&p| outside_corner(p)) {
        let value = table.value(p);
        sweep.check(format_args!("{p}[grundy={value}]"), p0_contains(p), value == 1);
    }
    Ok(sweep.finish())
}

/// The one-stone sum's P-set equals `P4`, and its corner slice equals `A* ∪ B*`.
pub fn verify_sum_theorem(bound: u64) -> Result<VerificationReport, VerifyError> {
    let n = board_bound(Claim::SumTheorem, bound)?;
    let table = solve_sum_outcomes(n)?;
    let mut sweep = Sweep::new(Claim::SumTheorem.id(), bound);
    for p in region(n) {
        for stone in [false, true] {
            let sp = SumPosition::new(p.x, p.y, stone);
            sweep.check(sp, Outcome::from_is_p(p4_contains(sp)), table.outcome(sp));
        }
    }
    let starred: BTreeSet<SumPosition> = a_star().into_iter().chain(b_star()).collect();
    for p in board_cells(7) {
        for stone in [false, true] {
            let sp = SumPosition::new(p.x, p.y, stone);
            sweep.check(
                format_args!("{sp}[corner]"),
                Outcome::from_is_p(starred.contains(&sp)),
                table.outcome(sp),
            );
        }
    }
    Ok(sweep.finish())
}

/// No move joins two `P1` members, and every non-member has a move into `P1`.
pub fn verify_p1_moves(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let n = board_bound(Claim::P1Moves, bound)?;
    let r = Ruleset::VARIANT;
    let mut closed = Sweep::new("p1-no-self-reach", bound);
    let mut reach = Sweep::new("p1-reachability", bound);
    for p in region(n) {
        if p1_contains(p) {
            for_each_move(p, &r, |q, _| {
                if p1_contains(q) {
                    closed.fail(format_args!("{p}->{q}"), "no move into P1", "move into P1");
                }
                true
            });
            closed.checked += 1;
        } else {
            let escapes = !for_each_move(p, &r, |q, _| !p1_contains(q));
            reach.holds(p, escapes);
        }
    }
    Ok(vec![closed.finish(), reach.finish()])
}

/// Grundy zero ⟺ P for `t ∈ {0, 2}`, and every solved table is a fixpoint of its moves.
pub fn verify_solver_consistency(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let n = board_bound(Claim::SolverConsistency, bound)?;
    let mut reports = Vec::new();
    for (name, r) in [("wythoff", Ruleset::WYTHOFF), ("variant", Ruleset::VARIANT)] {
        let grundy = solve_grundy(r, n)?;
        let outcomes = solve_outcomes(r, n)?;
        let mut sweep = Sweep::new(format!("grundy-zero-is-p.{name}"), bound);
        for p in region(n) {
            sweep.check(p, outcomes.outcome(p), Outcome::from_is_p(grundy.value(p) == 0));
        }
        reports.push(sweep.finish());

        let mut fix = Sweep::new(format!("fixpoint.grundy.{name}"), bound);
        let bad = grundy.fixpoint_violations();
        fix.checked = board_cells(n).count() as u64;
        for p in bad {
            fix.fail(p, "mex of successors", grundy.value(p));
        }
        reports.push(fix.finish());
    }
    for (name, r) in [
        ("wythoff", Ruleset::WYTHOFF),
        ("variant", Ruleset::VARIANT),
        ("variant-misere", Ruleset::VARIANT_MISERE),
    ] {
        let table = solve_outcomes(r, n)?;
        let mut fix = Sweep::new(format!("fixpoint.outcomes.{name}"), bound);
        fix.checked = board_cells(n).count() as u64;
        for p in table.fixpoint_violations() {
            fix.fail(p, "consistent with successors", table.outcome(p));
        }
        reports.push(fix.finish());
    }
    let sum = solve_sum_outcomes(n)?;
    let mut fix = Sweep::new("fixpoint.outcomes.variant-plus-nim", bound);
    fix.checked = 2 * board_cells(n).count() as u64;
    for p in sum.fixpoint_violations() {
        fix.fail(p, "consistent with successors", sum.outcome(p));
    }
    reports.push(fix.finish());
    Ok(reports)
}

/// The G-sequence recurrence equals `⌊(n+1)/φ⌋` for `n ≤ bound`.
pub fn check_h_closed_form(bound: u64) -> Result<VerificationReport, VerifyError> {
    let table = HTable::up_to(bound);
    let mut sweep = Sweep::new("h-closed-form", bound);
    for (n, &v) in table.as_slice().iter().enumerate() {
        sweep.check(format_args!("n={n}"), h_closed(n as u64)?, v);
    }
    Ok(sweep.finish())
}

/// `g` by its defining rule equals `g` rebuilt from the G-sequence, for `n ≤ bound`.
pub fn check_g_equivalence(bound: u64) -> Result<VerificationReport, VerifyError> {
    let direct = GTable::up_to(bound)?;
    let hof = GHofstadterTable::up_to(bound);
    let mut sweep = Sweep::new("g-hofstadter", bound);
    for n in 0..=bound {
        sweep.check(format_args!("n={n}"), direct.get(n).unwrap(), hof.get(n).unwrap());
    }
    Ok(sweep.finish())
}

/// Independent marker of upper Wythoff values up to `limit`.
fn upper_marks(limit: u64) -> Vec<bool> {
    let mut marks = vec![false; limit as usize + 1];
    for m in 0.. {
        let v = upper_wythoff(SequenceIndex::from(m));
        if v > limit {
            break;
        }
        marks[v as usize] = true;
    }
    marks
}

/// Properties of `f` for `1 ≤ n ≤ bound`: its steps are 0 or 1, and it steps up
/// exactly where `⌊nφ⌋ − 1` is an upper value, in which case `f(n) = h(n−1)`.
pub fn check_f(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let hs = HTable::up_to(bound);
    let top = lower_wythoff(SequenceIndex::new(bound)?);
    let upper = upper_marks(top);
    let mut steps = Sweep::new("f-steps", bound);
    let mut bridge = Sweep::new("f-bridge", bound);
    let mut prev = f(1)?;
    for n in 2..=bound {
        let cur = f(n)?;
        steps.holds(format_args!("n={n}"), cur == prev || cur == prev + 1);
        let low = lower_wythoff(SequenceIndex::new(n)?);
        let one_above_upper = upper[(low - 1) as usize];
        bridge.check(format_args!("n={n}[increase]"), one_above_upper, cur > prev);
        if cur > prev {
            bridge.check(format_args!("n={n}[f=h(n-1)]"), hs.get(n - 1).unwrap(), cur);
        }
        prev = cur;
    }
    Ok(vec![steps.finish(), bridge.finish()])
}

/// Lower and upper values `≥ 1` partition `{1, …, bound}`.
pub fn check_rayleigh(bound: u64) -> Result<VerificationReport, VerifyError> {
    let mut hits = vec![0u8; bound as usize + 1];
    let mut n = 1u64;
    loop {
        let idx = SequenceIndex::new(n)?;
        let (lo, up) = (lower_wythoff(idx), upper_wythoff(idx));
        if lo > bound {
            break;
        }
        hits[lo as usize] += 1;
        if up <= bound {
            hits[up as usize] += 1;
        }
        n += 1;
    }
    let mut sweep = Sweep::new("rayleigh-partition", bound);
    for (k, &count) in hits.iter().enumerate().skip(1) {
        sweep.check(format_args!("k={k}[hits]"), 1, count);
    }
    Ok(sweep.finish())
}

/// Gap bounds for `0 ≤ n ≤ bound`, plus coverage of every `x ≤ ⌊bound·φ⌋` by
/// some `⌊nφ⌋` or `⌊nφ⌋ − 1`.
pub fn check_gaps(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut gaps = Sweep::new("gap-bounds", bound);
    let lower = |n: u64| -> Result<u64, SequenceError> { Ok(lower_wythoff(SequenceIndex::new(n)?)) };
    let upper = |n: u64| -> Result<u64, SequenceError> { Ok(upper_wythoff(SequenceIndex::new(n)?)) };
    for n in 0..=bound {
        let d1 = lower(n + 1)? - lower(n)?;
        let d2 = lower(n + 2)? - lower(n)?;
        let du = upper(n + 1)? - upper(n)?;
        gaps.holds(format_args!("n={n}[lower+1={d1}]"), matches!(d1, 1 | 2));
        gaps.holds(format_args!("n={n}[lower+2={d2}]"), matches!(d2, 3 | 4));
        gaps.holds(format_args!("n={n}[upper+1={du}]"), matches!(du, 2 | 3));
    }
    let top = lower(bound)?;
    let mut covered = vec![false; top as usize + 1];
    for n in 0..=bound {
        let v = lower(n)?;
        covered[v as usize] = true;
        if v >= 1 {
            covered[v as usize - 1] = true;
        }
    }
    let mut coverage = Sweep::new("lower-coverage", top);
    for (x, &c) in covered.iter().enumerate() {
        coverage.holds(format_args!("x={x}"), c);
    }
    Ok(vec![gaps.finish(), coverage.finish()])
}

/// Exactly one of the two consecutive-triple cases holds for `2 ≤ n ≤ bound`,
/// and the classifier names that case with a correct witness.
pub fn check_triples(bound: u64) -> Result<VerificationReport, VerifyError> {
    let top = lower_wythoff(SequenceIndex::new(bound.max(2))?);
    let upper = upper_marks(top);
    let mut sweep = Sweep::new("triple-classification", bound);
    for n in 2..=bound {
        let prev = lower_wythoff(SequenceIndex::new(n - 1)?);
        let cur = lower_wythoff(SequenceIndex::new(n)?);
        let first = cur == prev + 1 && prev >= 1 && upper[(prev - 1) as usize];
        let middle = cur == prev + 2 && upper[(cur - 1) as usize];
        sweep.holds(format_args!("n={n}[exactly-one]"), first != middle);
        let t = classify_triple(SequenceIndex::new(n)?)?;
        let case = if first { TripleCase::UpperFirst } else { TripleCase::UpperMiddle };
        sweep.check(format_args!("n={n}[case]"), format!("{case:?}"), format!("{:?}", t.case));
        let [a, b, c] = t.values();
        sweep.holds(format_args!("n={n}[consecutive]"), b == a + 1 && c == b + 1);
    }
    Ok(sweep.finish())
}

/// `B1 ∩ B2 ∩ {0, …, bound}`.
pub fn b_intersection(bound: u64) -> Result<Vec<u64>, VerifyError> {
    let (ones, twos) = b_values(bound)?;
    Ok(ones.intersection(&twos).copied().collect())
}

fn b_values(bound: u64) -> Result<(BTreeSet<u64>, BTreeSet<u64>), VerifyError> {
    let mut ones = BTreeSet::new();
    let mut twos = BTreeSet::new();
    // b1(n) ≥ n − 1, so indices past bound + 1 cannot contribute
    for n in 0..=bound + 1 {
        let idx = SequenceIndex::new(n)?;
        let (v1, v2) = (b1(idx), b2(idx));
        if v1 <= bound {
            ones.insert(v1);
        }
        if v2 <= bound {
            twos.insert(v2);
        }
    }
    Ok((ones, twos))
}

/// `B1 ∪ B2` covers `{0, …, bound}`; the intersection is reported, not asserted.
pub fn check_b_sets(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let (ones, twos) = b_values(bound)?;
    let mut union = Sweep::new("b-union-coverage", bound);
    for k in 0..=bound {
        union.holds(format_args!("k={k}"), ones.contains(&k) || twos.contains(&k));
    }
    let inter: Vec<u64> = ones.intersection(&twos).copied().collect();
    let mut meet = Sweep::new("b-intersection", bound);
    meet.checked = bound + 1;
    meet.note = Some(format!("B1∩B2 up to {bound} = {{{}}}", join(&inter)));
    Ok(vec![union.finish(), meet.finish()])
}

/// Growth of `b1` and `b2` and the difference law `b2(n) − b1(n) = n + 1`, for `n ≤ bound`.
pub fn check_b_growth(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut b2_strict = Sweep::new("b2-strict", bound);
    let mut b1_strict = Sweep::new("b1-strict", bound);
    let mut diff = Sweep::new("b-difference", bound);
    let mut flat = Vec::new();
    let b = |n: u64| -> Result<(u64, u64), SequenceError> {
        let idx = SequenceIndex::new(n)?;
        Ok((b1(idx), b2(idx)))
    };
    let mut prev = b(0)?;
    diff.check("n=0", 1, prev.1 - prev.0);
    for n in 1..=bound {
        let cur = b(n)?;
        diff.check(format_args!("n={n}"), n + 1, cur.1 - cur.0);
        b2_strict.holds(format_args!("n={n}"), prev.1 < cur.1);
        if prev.0 >= cur.0 {
            flat.push(n);
        }
        if n >= 2 {
            b1_strict.holds(format_args!("n={n}"), prev.0 < cur.0);
        }
        prev = cur;
    }
    b1_strict.note = Some(format!("b1(n-1) >= b1(n) at n in {{{}}}", join(&flat)));
    Ok(vec![b2_strict.finish(), b1_strict.finish(), diff.finish()])
}

/// Once a coordinate reaches 8, each queen direction meets `B` iff it meets `C`.
pub fn check_misere_move_sets(bound: u32) -> VerificationReport {
    let hits = |p: Position, kind: MoveKind, set: &[Position]| {
        set.iter().any(|s| match kind {
            MoveKind::Horizontal => s.y == p.y && s.x < p.x,
            MoveKind::Vertical => s.x == p.x && s.y < p.y,
            MoveKind::Diagonal => {
                s.x < p.x && s.y < p.y && p.x as i64 - s.x as i64 == p.y as i64 - s.y as i64
            }
        })
    };
    let mut sweep = Sweep::new("misere-move-sets", bound as u64);
    for p in region(bound).filter(|&p| outside_corner(p)) {
        for kind in MoveKind::ALL {
            sweep.check(format_args!("{p}[{kind:?}]"), hits(p, kind, &SET_C), hits(p, kind, &SET_B));
        }
    }
    sweep.finish()
}

/// All sequence-level claims, each up to `bound`.
pub fn verify_sequences(bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    require(Claim::Sequences, bound)?;
    let mut reports = vec![check_h_closed_form(bound)?, check_g_equivalence(bound)?];
    reports.extend(check_f(bound)?);
    reports.push(check_rayleigh(bound)?);
    reports.extend(check_gaps(bound)?);
    reports.push(check_triples(bound)?);
    reports.extend(check_b_sets(bound)?);
    reports.extend(check_b_growth(bound)?);
    reports.push(check_misere_move_sets(bound.min(MOVE_SET_BOUND as u64) as u32));
    Ok(reports)
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Registered claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    SmallBoard,
    WythoffTheorem,
    P1Theorem,
    MisereTheorem,
    GrundyOneTheorem,
    SumTheorem,
    P1Moves,
    SolverConsistency,
    Sequences,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::SmallBoard,
        Claim::WythoffTheorem,
        Claim::P1Theorem,
        Claim::MisereTheorem,
        Claim::GrundyOneTheorem,
        Claim::SumTheorem,
        Claim::P1Moves,
        Claim::SolverConsistency,
        Claim::Sequences,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::SmallBoard => "small-board",
            Claim::WythoffTheorem => "wythoff-theorem",
            Claim::P1Theorem => "p1-theorem",
            Claim::MisereTheorem => "misere-theorem",
            Claim::GrundyOneTheorem => "grundy-one-theorem",
            Claim::SumTheorem => "sum-theorem",
            Claim::P1Moves => "p1-moves",
            Claim::SolverConsistency => "solver-consistency",
            Claim::Sequences => "sequences",
        }
    }

    pub fn min_bound(self) -> u64 {
        match self {
            Claim::SmallBoard | Claim::WythoffTheorem => 0,
            Claim::P1Theorem | Claim::P1Moves | Claim::SolverConsistency | Claim::Sequences => 2,
            Claim::MisereTheorem | Claim::GrundyOneTheorem | Claim::SumTheorem => 8,
        }
    }

    pub fn run(self, bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
        Ok(match self {
            Claim::SmallBoard => vec![verify_small_board()?],
            Claim::WythoffTheorem => vec![verify_wythoff_theorem(bound)?],
            Claim::P1Theorem => vec![verify_p1_theorem(bound)?],
            Claim::MisereTheorem => vec![verify_misere_theorem(bound)?],
            Claim::GrundyOneTheorem => vec![verify_grundy_one_theorem(bound)?],
            Claim::SumTheorem => vec![verify_sum_theorem(bound)?],
            Claim::P1Moves => verify_p1_moves(bound)?,
            Claim::SolverConsistency => verify_solver_consistency(bound)?,
            Claim::Sequences => verify_sequences(bound)?,
        })
    }
}

impl Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Runs each claim in order. Bounds are checked for every claim before any work starts.
pub fn run_claims(claims: &[Claim], bound: u64) -> Result<Vec<VerificationReport>, VerifyError> {
    for &c in claims {
        require(c, bound)?;
    }
    let mut reports = Vec::new();
    for &c in claims {
        reports.extend(c.run(bound)?);
    }
    Ok(reports)
}
