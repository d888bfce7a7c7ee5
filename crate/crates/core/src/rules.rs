//! Positions, terminal sets, and queen-move generation.
//!
//! A position inside the terminal set `{x + y ≤ t}` has no moves: the game is
//! over once the queen lands there. Moves *into* the terminal set are legal and
//! end the game.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A queen square, or equivalently two pile sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub x: u32,
    pub y: u32,
}

impl Position {
    #[inline]
    pub const fn new(x: u32, y: u32) -> Self {
        Position { x, y }
    }

    pub fn swapped(self) -> Self {
        Position { x: self.y, y: self.x }
    }

    /// Coordinates as `(smaller, larger)`.
    #[inline]
    pub fn sorted(self) -> (u32, u32) {
        if self.x <= self.y {
            (self.x, self.y)
        } else {
            (self.y, self.x)
        }
    }

    #[inline]
    pub fn sum(self) -> u64 {
        self.x as u64 + self.y as u64
    }
}

impl From<(u32, u32)> for Position {
    fn from((x, y): (u32, u32)) -> Self {
        Position { x, y }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A position of the variant summed with a Nim pile of at most one stone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SumPosition {
    pub x: u32,
    pub y: u32,
    /// Whether the third pile still holds its stone.
    pub stone: bool,
}

impl SumPosition {
    pub const fn new(x: u32, y: u32, stone: bool) -> Self {
        SumPosition { x, y, stone }
    }

    /// Builds from the `(x, y, z)` triple; `None` unless `z ∈ {0, 1}`.
    pub fn from_triple(x: u32, y: u32, z: u8) -> Option<Self> {
        match z {
            0 => Some(SumPosition::new(x, y, false)),
            1 => Some(SumPosition::new(x, y, true)),
            _ => None,
        }
    }

    #[inline]
    pub fn z(self) -> u8 {
        self.stone as u8
    }

    #[inline]
    pub fn board(self) -> Position {
        Position::new(self.x, self.y)
    }
}

impl fmt::Display for SumPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Moving into the terminal set wins.
    Normal,
    /// Moving into the terminal set loses.
    Misere,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Normal => "normal",
            Convention::Misere => "misere",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ruleset {
    /// The game ends on reaching `{(x, y) : x + y ≤ terminal_threshold}`.
    pub terminal_threshold: u32,
    pub convention: Convention,
}

impl Ruleset {
    /// Classical Wythoff: only `(0,0)` is terminal.
    pub const WYTHOFF: Ruleset = Ruleset { terminal_threshold: 0, convention: Convention::Normal };
    /// The variant with terminal set `x + y ≤ 2`.
    pub const VARIANT: Ruleset = Ruleset { terminal_threshold: 2, convention: Convention::Normal };
    pub const VARIANT_MISERE: Ruleset =
        Ruleset { terminal_threshold: 2, convention: Convention::Misere };

    pub const fn new(terminal_threshold: u32, convention: Convention) -> Self {
        Ruleset { terminal_threshold, convention }
    }
}

/// The three queen directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Decrease `x` only.
    Horizontal,
    /// Decrease `y` only.
    Vertical,
    /// Decrease both by the same amount.
    Diagonal,
}

impl MoveKind {
    pub const ALL: [MoveKind; 3] = [MoveKind::Horizontal, MoveKind::Vertical, MoveKind::Diagonal];
}

#[inline]
pub fn is_terminal(p: Position, r: &Ruleset) -> bool {
    p.sum() <= r.terminal_threshold as u64
}

/// All squares one queen move of `kind` away, ignoring the terminal rule.
pub fn move_set(p: Position, kind: MoveKind) -> impl Iterator<Item = Position> {
    let Position { x, y } = p;
    let (steps, dx, dy) = match kind {
        MoveKind::Horizontal => (x, 1, 0),
        MoveKind::Vertical => (y, 0, 1),
        MoveKind::Diagonal => (x.min(y), 1, 1),
    };
    (1..=steps).map(move |t| Position::new(x - t * dx, y - t * dy))
}

/// Calls `visit` for every legal move from `p`. Stops early when `visit` returns `false`.
///
/// Returns `false` iff the visit was cut short.
#[inline]
pub fn for_each_move<F>(p: Position, r: &Ruleset, mut visit: F) -> bool
where
    F: FnMut(Position, MoveKind) -> bool,
{
    if is_terminal(p, r) {
        return true;
    }
    for kind in MoveKind::ALL {
        for q in move_set(p, kind) {
            if !visit(q, kind) {
                return false;
            }
        }
    }
    true
}

/// Every legal destination from `p`: horizontal, then vertical, then diagonal moves.
pub fn moves(p: Position, r: &Ruleset) -> Vec<Position> {
    let mut out = Vec::new();
    for_each_move(p, r, |q, _| {
        out.push(q);
        true
    });
    out
}

/// Moves in the sum game. Board moves keep the stone; taking the stone keeps the board.
/// Once the board is terminal only the stone can be taken.
pub fn sum_moves(p: SumPosition, r: &Ruleset) -> Vec<SumPosition> {
    let mut out: Vec<SumPosition> = moves(p.board(), r)
        .into_iter()
        .map(|q| SumPosition::new(q.x, q.y, p.stone))
        .collect();
    if p.stone {
        out.push(SumPosition::new(p.x, p.y, false));
    }
    out
}

/// Minimum excluded value of a finite set of non-negative integers.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted(mut v: Vec<Position>) -> Vec<Position> {
        v.sort();
        v
    }

    fn pos(v: &[(u32, u32)]) -> Vec<Position> {
        sorted(v.iter().map(|&p| p.into()).collect())
    }

    #[test]
    fn terminal_examples() {
        assert!(is_terminal(Position::new(0, 0), &Ruleset::WYTHOFF));
        assert!(is_terminal(Position::new(1, 1), &Ruleset::VARIANT));
        assert!(!is_terminal(Position::new(2, 1), &Ruleset::VARIANT));
        assert!(!is_terminal(Position::new(1, 0), &Ruleset::WYTHOFF));
    }

    #[test]
    fn move_examples() {
        assert!(moves(Position::new(0, 0), &Ruleset::WYTHOFF).is_empty());
        assert_eq!(
            sorted(moves(Position::new(2, 1), &Ruleset::VARIANT)),
            pos(&[(0, 1), (1, 1), (2, 0), (1, 0)])
        );
        assert_eq!(
            sorted(moves(Position::new(1, 2), &Ruleset::WYTHOFF)),
            pos(&[(0, 2), (1, 1), (1, 0), (0, 1)])
        );
        // terminal squares are frozen even though queen moves exist geometrically
        assert!(moves(Position::new(2, 0), &Ruleset::VARIANT).is_empty());
        assert_eq!(moves(Position::new(2, 0), &Ruleset::WYTHOFF).len(), 2);
    }

    #[test]
    fn sum_move_examples() {
        let r = Ruleset::VARIANT;
        assert_eq!(
            sum_moves(SumPosition::new(1, 1, true), &r),
            vec![SumPosition::new(1, 1, false)]
        );
        assert!(sum_moves(SumPosition::new(1, 1, false), &r).is_empty());
        let mut got = sum_moves(SumPosition::new(3, 0, true), &r);
        got.sort();
        let mut want = vec![
            SumPosition::new(0, 0, true),
            SumPosition::new(1, 0, true),
            SumPosition::new(2, 0, true),
            SumPosition::new(3, 0, false),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(SumPosition::from_triple(1, 2, 2), None);
    }

    #[test]
    fn mex_examples() {
        assert_eq!(mex([]), 0);
        assert_eq!(mex([0, 1, 3]), 2);
        assert_eq!(mex([1, 2, 3]), 0);
        assert_eq!(mex(0..7), 7);
    }

    #[test]
    fn early_exit() {
        let mut seen = 0;
        let finished = for_each_move(Position::new(5, 5), &Ruleset::WYTHOFF, |_, _| {
            seen += 1;
            seen < 3
        });
        assert!(!finished);
        assert_eq!(seen, 3);
    }

    proptest! {
        #[test]
        fn moves_shrink_and_stay_on_board(x in 0u32..60, y in 0u32..60, t in 0u32..5) {
            let p = Position::new(x, y);
            let r = Ruleset::new(t, Convention::Normal);
            for_each_move(p, &r, |q, kind| {
                assert!(q.x <= p.x && q.y <= p.y && q != p);
                if kind == MoveKind::Diagonal {
                    assert_eq!(p.x as i64 - p.y as i64, q.x as i64 - q.y as i64);
                }
                true
            });
        }

        #[test]
        fn wythoff_move_count(x in 0u32..80, y in 0u32..80) {
            let p = Position::new(x, y);
            let n = moves(p, &Ruleset::WYTHOFF).len() as u32;
            if (x, y) != (0, 0) {
                prop_assert_eq!(n, x + y + x.min(y));
            } else {
                prop_assert_eq!(n, 0);
            }
        }

        #[test]
        fn mex_is_least_absent(values in proptest::collection::vec(0u32..20, 0..30)) {
            let m = mex(values.iter().copied());
            prop_assert!(!values.contains(&m));
            for k in 0..m {
                prop_assert!(values.contains(&k));
            }
        }
    }
}
