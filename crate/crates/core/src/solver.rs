//! Retrograde solving of whole boards.
//!
//! Cells are filled in anti-diagonal order `x + y = 0, 1, 2, …`; every move
//! strictly lowers `x + y`, so successors are always settled first. Because a
//! queen move never increases a coordinate, every cell of an `(N+1) × (N+1)`
//! board is solved exactly, whatever `N` is.
//!
//! Outcome tables are bit-packed. A cell is N iff some P cell lies to its left in
//! the same row, above it in the same column, or up-left on its diagonal, so the
//! outcome fill keeps one "P seen" flag per row, column and diagonal and runs in
//! `O(N²)`. Grundy tables need the full successor set and cost `O(N³)`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rules::{for_each_move, is_terminal, sum_moves, Convention, Position, Ruleset, SumPosition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("board bound {bound} is below the terminal threshold {threshold}")]
    BoundBelowThreshold { bound: u32, threshold: u32 },
    #[error("{op} is only defined under the normal convention")]
    MisereUnsupported { op: &'static str },
    #[error("a board of bound {bound} does not fit in memory")]
    TooLarge { bound: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous player wins.
    P,
    /// The next player wins.
    N,
}

impl Outcome {
    #[inline]
    pub fn from_is_p(is_p: bool) -> Self {
        if is_p {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Outcome::P => 'P',
            Outcome::N => 'N',
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Square grid of bits, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitGrid {
    side: usize,
    words: Vec<u64>,
}

impl BitGrid {
    pub fn new(side: usize) -> Option<Self> {
        let cells = side.checked_mul(side)?;
        let len = cells.div_ceil(64);
        let mut words = Vec::new();
        words.try_reserve_exact(len).ok()?;
        words.resize(len, 0);
        Some(BitGrid { side, words })
    }

    #[inline]
    pub fn side(&self) -> usize {
        self.side
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> bool {
        let i = y as usize * self.side + x as usize;
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: bool) {
        let i = y as usize * self.side + x as usize;
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn byte_len(&self) -> usize {
        self.words.len() * 8
    }
}

impl fmt::Debug for BitGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitGrid").field("side", &self.side).finish_non_exhaustive()
    }
}

fn side_of(bound: u32) -> Result<usize, SolverError> {
    bound
        .checked_add(1)
        .map(|s| s as usize)
        .ok_or(SolverError::TooLarge { bound })
}

/// Cells `(x, y)` with `x + y = s` on a board of the given bound, by increasing `x`.
#[inline]
fn anti_diagonal(bound: u32, s: u64) -> impl Iterator<Item = Position> {
    let lo = s.saturating_sub(bound as u64) as u32;
    let hi = s.min(bound as u64) as u32;
    (lo..=hi).map(move |x| Position::new(x, (s - x as u64) as u32))
}

/// One layer of P/N bits filled with line flags.
///
/// `classify(p, terminal, line_has_p)` returns whether `p` is P; `line_has_p`
/// tells whether a P cell is reachable by a queen move inside this layer.
fn fill_layer<F>(bound: u32, threshold: u32, mut classify: F) -> Result<BitGrid, SolverError>
where
    F: FnMut(Position, bool, bool) -> bool,
{
    let side = side_of(bound)?;
    let mut grid = BitGrid::new(side).ok_or(SolverError::TooLarge { bound })?;
    let mut rows = vec![false; side];
    let mut cols = vec![false; side];
    let mut diags = vec![false; 2 * side - 1];
    for s in 0..=2 * bound as u64 {
        // cells on one anti-diagonal have distinct rows, columns and diagonals,
        // so flags may be updated as we go
        for p in anti_diagonal(bound, s) {
            let (x, y) = (p.x as usize, p.y as usize);
            let d = x + side - 1 - y;
            let terminal = s <= threshold as u64;
            let line = rows[y] || cols[x] || diags[d];
            if classify(p, terminal, line) {
                grid.set(p.x, p.y, true);
                rows[y] = true;
                cols[x] = true;
                diags[d] = true;
            }
        }
    }
    Ok(grid)
}

/// P/N classification of every cell of a bounded board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeTable {
    bound: u32,
    ruleset: Ruleset,
    p_cells: BitGrid,
}

impl OutcomeTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn ruleset(&self) -> Ruleset {
        self.ruleset
    }

    #[inline]
    pub fn is_p(&self, p: Position) -> bool {
        self.p_cells.get(p.x, p.y)
    }

    #[inline]
    pub fn outcome(&self, p: Position) -> Outcome {
        Outcome::from_is_p(self.is_p(p))
    }

    /// `None` when `p` is off the board.
    pub fn get(&self, p: Position) -> Option<Outcome> {
        (p.x <= self.bound && p.y <= self.bound).then(|| self.outcome(p))
    }

    /// All P cells in row-major order.
    pub fn p_positions(&self) -> Vec<Position> {
        board_cells(self.bound).filter(|&p| self.is_p(p)).collect()
    }

    pub fn p_count(&self) -> u64 {
        self.p_cells.count_ones()
    }

    pub fn storage_bytes(&self) -> usize {
        self.p_cells.byte_len()
    }

    /// Rebuilds a table from per-cell outcomes in row-major order.
    pub fn from_outcomes<I>(bound: u32, ruleset: Ruleset, outcomes: I) -> Result<Self, SolverError>
    where
        I: IntoIterator<Item = (Position, Outcome)>,
    {
        let side = side_of(bound)?;
        let mut p_cells = BitGrid::new(side).ok_or(SolverError::TooLarge { bound })?;
        for (p, o) in outcomes {
            p_cells.set(p.x, p.y, o == Outcome::P);
        }
        Ok(OutcomeTable { bound, ruleset, p_cells })
    }

    /// Re-derives every cell from its successors by direct move enumeration and
    /// returns the cells that disagree with the table.
    pub fn fixpoint_violations(&self) -> Vec<Position> {
        let r = self.ruleset;
        board_cells(self.bound)
            .filter(|&p| {
                let expected = if is_terminal(p, &r) {
                    r.convention == Convention::Normal
                } else {
                    // early exit on the first P successor
                    for_each_move(p, &r, |q, _| !self.is_p(q))
                };
                expected != self.is_p(p)
            })
            .collect()
    }
}

/// Row-major iterator over `0..=bound` squared.
pub fn board_cells(bound: u32) -> impl Iterator<Item = Position> {
    (0..=bound).flat_map(move |y| (0..=bound).map(move |x| Position::new(x, y)))
}

/// Solves P/N outcomes for every cell with both coordinates at most `bound`.
///
/// Terminal cells are P under the normal convention (the mover into them won)
/// and N under misère (the mover into them lost).
pub fn solve_outcomes(r: Ruleset, bound: u32) -> Result<OutcomeTable, SolverError> {
    if bound < r.terminal_threshold {
        return Err(SolverError::BoundBelowThreshold { bound, threshold: r.terminal_threshold });
    }
    let terminal_is_p = r.convention == Convention::Normal;
    let p_cells = fill_layer(bound, r.terminal_threshold, |_, terminal, line| {
        if terminal {
            terminal_is_p
        } else {
            !line
        }
    })?;
    Ok(OutcomeTable { bound, ruleset: r, p_cells })
}

/// Smallest-width storage for a dense table of Grundy values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrundyValues {
    U8(Vec<u8>),
    U16(Vec<u16>),
    U32(Vec<u32>),
}

impl GrundyValues {
    /// Narrows to the smallest width that holds every value.
    pub fn compact(values: Vec<u32>) -> Self {
        let max = values.iter().copied().max().unwrap_or(0);
        if let Ok(narrow) = values.iter().map(|&v| u8::try_from(v)).collect::<Result<Vec<_>, _>>() {
            GrundyValues::U8(narrow)
        } else if max <= u16::MAX as u32 {
            GrundyValues::U16(
                values
                    .iter()
                    .map(|&v| u16::try_from(v).expect("value exceeds u16 after range check"))
                    .collect(),
            )
        } else {
            GrundyValues::U32(values)
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        match self {
            GrundyValues::U8(v) => v[i] as u32,
            GrundyValues::U16(v) => v[i] as u32,
            GrundyValues::U32(v) => v[i],
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GrundyValues::U8(v) => v.len(),
            GrundyValues::U16(v) => v.len(),
            GrundyValues::U32(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Bytes per stored value.
    pub fn width(&self) -> usize {
        match self {
            GrundyValues::U8(_) => 1,
            GrundyValues::U16(_) => 2,
            GrundyValues::U32(_) => 4,
        }
    }
}

/// Reusable mex scratch: values are marked with a generation stamp so clearing
/// between cells is a counter bump rather than a wipe.
#[derive(Debug, Clone)]
pub struct MexAccumulator {
    stamps: Vec<u32>,
    generation: u32,
}

impl Default for MexAccumulator {
    fn default() -> Self {
        Self::new()
    }
}

impl MexAccumulator {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    /// `capacity` should exceed the largest number of values inserted per query.
    pub fn with_capacity(capacity: usize) -> Self {
        MexAccumulator { stamps: vec![0; capacity], generation: 1 }
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        let v = v as usize;
        if v >= self.stamps.len() {
            self.stamps.resize(v + 1, 0);
        }
        self.stamps[v] = self.generation;
    }

    #[inline]
    pub fn mex(&self) -> u32 {
        let g = self.generation;
        self.stamps.iter().position(|&s| s != g).unwrap_or(self.stamps.len()) as u32
    }

    #[inline]
    pub fn clear(&mut self) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamps.fill(0);
            self.generation = 1;
        }
    }
}

/// How cells within one anti-diagonal are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fill {
    Sequential,
    /// Cells of long anti-diagonals are computed on the rayon pool.
    #[default]
    Parallel,
}

/// Sprague-Grundy values of every cell of a bounded board, normal convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    bound: u32,
    ruleset: Ruleset,
    values: GrundyValues,
}

impl GrundyTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn ruleset(&self) -> Ruleset {
        self.ruleset
    }

    #[inline]
    pub fn value(&self, p: Position) -> u32 {
        self.values.get(p.y as usize * (self.bound as usize + 1) + p.x as usize)
    }

    pub fn get(&self, p: Position) -> Option<u32> {
        (p.x <= self.bound && p.y <= self.bound).then(|| self.value(p))
    }

    pub fn storage(&self) -> &GrundyValues {
        &self.values
    }

    pub fn max_value(&self) -> u32 {
        (0..self.values.len()).map(|i| self.values.get(i)).max().unwrap_or(0)
    }

    /// Cells whose stored value differs from the mex of their successors.
    pub fn fixpoint_violations(&self) -> Vec<Position> {
        let mut acc = MexAccumulator::new();
        board_cells(self.bound)
            .filter(|&p| {
                acc.clear();
                for_each_move(p, &self.ruleset, |q, _| {
                    acc.insert(self.value(q));
                    true
                });
                acc.mex() != self.value(p)
            })
            .collect()
    }
}

const PARALLEL_MIN_DIAGONAL: u64 = 64;

pub fn solve_grundy(r: Ruleset, bound: u32) -> Result<GrundyTable, SolverError> {
    solve_grundy_with(r, bound, Fill::default())
}

pub fn solve_grundy_with(r: Ruleset, bound: u32, fill: Fill) -> Result<GrundyTable, SolverError> {
    if r.convention == Convention::Misere {
        return Err(SolverError::MisereUnsupported { op: "grundy values" });
    }
    if bound < r.terminal_threshold {
        return Err(SolverError::BoundBelowThreshold { bound, threshold: r.terminal_threshold });
    }
    let side = side_of(bound)?;
    let cells = side.checked_mul(side).ok_or(SolverError::TooLarge { bound })?;
    let mut values: Vec<u32> = Vec::new();
    values.try_reserve_exact(cells).map_err(|_| SolverError::TooLarge { bound })?;
    values.resize(cells, 0);

    let cell_value = |values: &[u32], acc: &mut MexAccumulator, p: Position| -> u32 {
        acc.clear();
        for_each_move(p, &r, |q, _| {
            acc.insert(values[q.y as usize * side + q.x as usize]);
            true
        });
        acc.mex()
    };

    let capacity = 3 * side + 1;
    let mut acc = MexAccumulator::with_capacity(capacity);
    let mut diagonal = Vec::with_capacity(side);
    for s in 0..=2 * bound as u64 {
        let len = s.min(bound as u64) - s.saturating_sub(bound as u64) + 1;
        diagonal.clear();
        if fill == Fill::Parallel && len >= PARALLEL_MIN_DIAGONAL {
            let cells: Vec<Position> = anti_diagonal(bound, s).collect();
            let shared = &values;
            cells
                .par_iter()
                .map_init(
                    || MexAccumulator::with_capacity(capacity),
                    |acc, &p| (p, cell_value(shared, acc, p)),
                )
                .collect_into_vec(&mut diagonal);
        } else {
            diagonal.extend(anti_diagonal(bound, s).map(|p| (p, cell_value(&values, &mut acc, p))));
        }
        for &(p, v) in &diagonal {
            values[p.y as usize * side + p.x as usize] = v;
        }
    }
    Ok(GrundyTable { bound, ruleset: r, values: GrundyValues::compact(values) })
}

/// P/N classification of the variant summed with a one-stone Nim pile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumOutcomeTable {
    bound: u32,
    ruleset: Ruleset,
    /// Indexed by the stone flag.
    layers: [BitGrid; 2],
}

impl SumOutcomeTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn ruleset(&self) -> Ruleset {
        self.ruleset
    }

    #[inline]
    pub fn is_p(&self, p: SumPosition) -> bool {
        self.layers[p.stone as usize].get(p.x, p.y)
    }

    #[inline]
    pub fn outcome(&self, p: SumPosition) -> Outcome {
        Outcome::from_is_p(self.is_p(p))
    }

    pub fn get(&self, p: SumPosition) -> Option<Outcome> {
        (p.x <= self.bound && p.y <= self.bound).then(|| self.outcome(p))
    }

    /// Row-major over `(y, x)`, with the stoneless layer first at each cell.
    pub fn cells(&self) -> impl Iterator<Item = SumPosition> {
        board_cells(self.bound)
            .flat_map(|p| [false, true].map(|stone| SumPosition::new(p.x, p.y, stone)))
    }

    pub fn p_positions(&self) -> Vec<SumPosition> {
        self.cells().filter(|&p| self.is_p(p)).collect()
    }

    pub fn fixpoint_violations(&self) -> Vec<SumPosition> {
        self.cells()
            .filter(|&p| {
                let expected = !sum_moves(p, &self.ruleset).into_iter().any(|q| self.is_p(q));
                expected != self.is_p(p)
            })
            .collect()
    }
}

/// Solves the variant (terminal set `x + y ≤ 2`) plus a one-stone Nim pile.
pub fn solve_sum_outcomes(bound: u32) -> Result<SumOutcomeTable, SolverError> {
    solve_sum_outcomes_for(Ruleset::VARIANT, bound)
}

/// Sum-game solve for any normal-play threshold.
///
/// The stoneless layer is solved first; the stone layer then sees both its own
/// queen moves and the stone-taking move down to the same square.
pub fn solve_sum_outcomes_for(r: Ruleset, bound: u32) -> Result<SumOutcomeTable, SolverError> {
    if r.convention == Convention::Misere {
        return Err(SolverError::MisereUnsupported { op: "the one-stone sum" });
    }
    if bound < r.terminal_threshold {
        return Err(SolverError::BoundBelowThreshold { bound, threshold: r.terminal_threshold });
    }
    let bare = fill_layer(bound, r.terminal_threshold, |_, terminal, line| terminal || !line)?;
    let stone = fill_layer(bound, r.terminal_threshold, |p, terminal, line| {
        let take_stone_wins = bare.get(p.x, p.y);
        let board_move_wins = !terminal && line;
        !(take_stone_wins || board_move_wins)
    })?;
    Ok(SumOutcomeTable { bound, ruleset: r, layers: [bare, stone] })
}

/// Grundy values of the sum game, by direct mex over its moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumGrundyTable {
    bound: u32,
    layers: [GrundyValues; 2],
}

impl SumGrundyTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    #[inline]
    pub fn value(&self, p: SumPosition) -> u32 {
        self.layers[p.stone as usize].get(p.y as usize * (self.bound as usize + 1) + p.x as usize)
    }
}

pub fn solve_sum_grundy(r: Ruleset, bound: u32) -> Result<SumGrundyTable, SolverError> {
    if r.convention == Convention::Misere {
        return Err(SolverError::MisereUnsupported { op: "sum-game grundy values" });
    }
    if bound < r.terminal_threshold {
        return Err(SolverError::BoundBelowThreshold { bound, threshold: r.terminal_threshold });
    }
    let side = side_of(bound)?;
    let cells = side.checked_mul(side).ok_or(SolverError::TooLarge { bound })?;
    let mut layers: [Vec<u32>; 2] = [Vec::new(), Vec::new()];
    for layer in &mut layers {
        layer.try_reserve_exact(cells).map_err(|_| SolverError::TooLarge { bound })?;
        layer.resize(cells, 0);
    }
    let mut acc = MexAccumulator::with_capacity(3 * side + 2);
    for stone in [false, true] {
        for s in 0..=2 * bound as u64 {
            for p in anti_diagonal(bound, s) {
                let here = SumPosition::new(p.x, p.y, stone);
                acc.clear();
                for q in sum_moves(here, &r) {
                    acc.insert(layers[q.stone as usize][q.y as usize * side + q.x as usize]);
                }
                layers[stone as usize][p.y as usize * side + p.x as usize] = acc.mex();
            }
        }
    }
    let [bare, with_stone] = layers;
    Ok(SumGrundyTable {
        bound,
        layers: [GrundyValues::compact(bare), GrundyValues::compact(with_stone)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::moves;

    /// Memoized recursion straight from the definitions, no ordering tricks.
    fn brute_is_p(p: Position, r: &Ruleset, memo: &mut std::collections::HashMap<Position, bool>) -> bool {
        if let Some(&v) = memo.get(&p) {
            return v;
        }
        let v = if is_terminal(p, r) {
            r.convention == Convention::Normal
        } else {
            !moves(p, r).into_iter().any(|q| brute_is_p(q, r, memo))
        };
        memo.insert(p, v);
        v
    }

    fn p_set(t: &OutcomeTable, corner: u32) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = t
            .p_positions()
            .into_iter()
            .filter(|p| p.x <= corner && p.y <= corner)
            .map(|p| (p.x, p.y))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_board_sets() {
        let c = solve_outcomes(Ruleset::WYTHOFF, 7).unwrap();
        assert_eq!(p_set(&c, 7), [(0, 0), (1, 2), (2, 1), (3, 5), (4, 7), (5, 3), (7, 4)]);
        let a = solve_outcomes(Ruleset::VARIANT, 7).unwrap();
        assert_eq!(
            p_set(&a, 7),
            [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (3, 6), (6, 3)]
        );
        let b = solve_outcomes(Ruleset::VARIANT_MISERE, 7).unwrap();
        assert_eq!(p_set(&b, 7), [(0, 3), (1, 2), (2, 1), (3, 0), (4, 4), (5, 7), (7, 5)]);
    }

    #[test]
    fn line_flags_match_brute_force() {
        for t in 0..5 {
            for conv in [Convention::Normal, Convention::Misere] {
                let r = Ruleset::new(t, conv);
                let table = solve_outcomes(r, 30).unwrap();
                let mut memo = Default::default();
                for p in board_cells(30) {
                    assert_eq!(table.is_p(p), brute_is_p(p, &r, &mut memo), "{p} {r:?}");
                }
                assert!(table.fixpoint_violations().is_empty());
            }
        }
    }

    #[test]
    fn bound_checks() {
        assert_eq!(
            solve_outcomes(Ruleset::VARIANT, 1),
            Err(SolverError::BoundBelowThreshold { bound: 1, threshold: 2 })
        );
        assert_eq!(solve_grundy(Ruleset::VARIANT_MISERE, 7), Err(SolverError::MisereUnsupported { op: "grundy values" }));
        assert!(solve_outcomes(Ruleset::WYTHOFF, 0).unwrap().is_p(Position::new(0, 0)));
        assert!(matches!(solve_outcomes(Ruleset::WYTHOFF, u32::MAX), Err(SolverError::TooLarge { .. })));
    }

    #[test]
    fn grundy_examples() {
        let w = solve_grundy(Ruleset::WYTHOFF, 8).unwrap();
        assert_eq!(w.value(Position::new(0, 0)), 0);
        assert_eq!(w.value(Position::new(1, 2)), 0);
        // classical Wythoff Grundy row y = 1: 1 2 0 4 5 3 7 8 6
        let row: Vec<u32> = (0..=8).map(|x| w.value(Position::new(x, 1))).collect();
        assert_eq!(row, [1, 2, 0, 4, 5, 3, 7, 8, 6]);

        let v = solve_grundy(Ruleset::VARIANT, 10).unwrap();
        assert_eq!(v.value(Position::new(3, 6)), 0);
        // brute force gives 6 here, not 1: (3,5) lies in the small corner
        assert_eq!(v.value(Position::new(3, 5)), 6);
        assert_eq!(v.value(Position::new(1, 1)), 0);
    }

    #[test]
    fn grundy_zero_is_p() {
        for r in [Ruleset::WYTHOFF, Ruleset::VARIANT, Ruleset::new(4, Convention::Normal)] {
            let g = solve_grundy(r, 40).unwrap();
            let o = solve_outcomes(r, 40).unwrap();
            for p in board_cells(40) {
                assert_eq!(g.value(p) == 0, o.is_p(p), "{p}");
            }
            assert!(g.fixpoint_violations().is_empty());
        }
    }

    #[test]
    fn parallel_fill_matches_sequential() {
        let a = solve_grundy_with(Ruleset::VARIANT, 150, Fill::Sequential).unwrap();
        let b = solve_grundy_with(Ruleset::VARIANT, 150, Fill::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn grundy_storage_narrows() {
        let small = solve_grundy(Ruleset::VARIANT, 20).unwrap();
        assert_eq!(small.storage().width(), 1);
        let wide = solve_grundy(Ruleset::WYTHOFF, 260).unwrap();
        assert!(wide.max_value() > 255);
        assert_eq!(wide.storage().width(), 2);
        assert_eq!(GrundyValues::compact(vec![0, 70_000]).width(), 4);
    }

    #[test]
    fn mex_accumulator() {
        let mut acc = MexAccumulator::with_capacity(8);
        assert_eq!(acc.mex(), 0);
        for v in [0, 1, 3] {
            acc.insert(v);
        }
        assert_eq!(acc.mex(), 2);
        acc.clear();
        assert_eq!(acc.mex(), 0);
        for v in 0..12 {
            acc.insert(v);
        }
        assert_eq!(acc.mex(), 12);
        acc.generation = u32::MAX;
        acc.clear();
        assert_eq!(acc.mex(), 0);
    }

    #[test]
    fn sum_examples() {
        let t = solve_sum_outcomes(10).unwrap();
        assert_eq!(t.outcome(SumPosition::new(1, 1, false)), Outcome::P);
        assert_eq!(t.outcome(SumPosition::new(1, 1, true)), Outcome::N);
        assert_eq!(t.outcome(SumPosition::new(4, 4, true)), Outcome::P);
        assert_eq!(t.outcome(SumPosition::new(3, 0, true)), Outcome::P);
        assert!(t.fixpoint_violations().is_empty());
    }

    #[test]
    fn sum_outcomes_follow_grundy_xor() {
        let t = solve_sum_outcomes(40).unwrap();
        let g = solve_grundy(Ruleset::VARIANT, 40).unwrap();
        let sg = solve_sum_grundy(Ruleset::VARIANT, 40).unwrap();
        for p in board_cells(40) {
            let v = g.value(p);
            assert_eq!(t.is_p(SumPosition::new(p.x, p.y, false)), v == 0);
            assert_eq!(t.is_p(SumPosition::new(p.x, p.y, true)), v == 1);
            assert_eq!(sg.value(SumPosition::new(p.x, p.y, false)), v);
            assert_eq!(sg.value(SumPosition::new(p.x, p.y, true)), v ^ 1);
        }
    }

    #[test]
    fn border_independence() {
        let small = solve_outcomes(Ruleset::VARIANT_MISERE, 20).unwrap();
        let large = solve_outcomes(Ruleset::VARIANT_MISERE, 57).unwrap();
        for p in board_cells(20) {
            assert_eq!(small.is_p(p), large.is_p(p));
        }
    }

    #[test]
    fn round_trip_from_outcomes() {
        let t = solve_outcomes(Ruleset::VARIANT, 12).unwrap();
        let rebuilt =
            OutcomeTable::from_outcomes(12, t.ruleset(), board_cells(12).map(|p| (p, t.outcome(p)))).unwrap();
        assert_eq!(t, rebuilt);
    }
}
