//! Closed-form P-position sets and their O(1) membership tests.
//!
//! * `P0`: classical Wythoff pairs `(⌊nφ⌋, ⌊nφ⌋ + n)` and swaps.
//! * `P1`: the variant's pairs `(b1(n), b2(n))` and swaps, plus `(0,0)` and `(1,1)`.
//! * `P2`: misère variant; the literal set `B` inside the 8×8 corner, `P0` outside.
//! * `P4`: the one-stone sum; `P2` with the stone, `P1` without.

use serde::{Deserialize, Serialize};

use crate::beatty::{lower_wythoff, upper_wythoff, SequenceIndex};
use crate::hofstadter::g;
use crate::rules::{Position, SumPosition};

/// Largest coordinate of the small corner where the misère variant departs from Wythoff.
pub const CORNER: u32 = 7;

const fn p(x: u32, y: u32) -> Position {
    Position::new(x, y)
}

/// P-positions of the variant inside the corner.
pub const SET_A: [Position; 8] =
    [p(0, 0), p(0, 1), p(0, 2), p(1, 0), p(1, 1), p(2, 0), p(3, 6), p(6, 3)];
/// P-positions of the misère variant inside the corner.
pub const SET_B: [Position; 7] = [p(0, 3), p(1, 2), p(2, 1), p(3, 0), p(4, 4), p(5, 7), p(7, 5)];
/// P-positions of classical Wythoff inside the corner.
pub const SET_C: [Position; 7] = [p(0, 0), p(1, 2), p(2, 1), p(3, 5), p(5, 3), p(4, 7), p(7, 4)];

/// `A*`: the set `A` without the stone.
pub fn a_star() -> Vec<SumPosition> {
    SET_A.iter().map(|q| SumPosition::new(q.x, q.y, false)).collect()
}

/// `B*`: the set `B` with the stone.
pub fn b_star() -> Vec<SumPosition> {
    SET_B.iter().map(|q| SumPosition::new(q.x, q.y, true)).collect()
}

#[inline]
pub fn in_corner(p: Position) -> bool {
    p.x <= CORNER && p.y <= CORNER
}

#[inline]
fn g_at(n: SequenceIndex) -> u64 {
    g(n.get()).expect("index already range-checked").into()
}

/// `b1(n) = ⌊nφ⌋ + g(n) − 1`.
pub fn b1(n: SequenceIndex) -> u64 {
    // g(0) = 1 and lower(n) ≥ 1 for n ≥ 1, so this never underflows
    lower_wythoff(n) + g_at(n) - 1
}

/// `b2(n) = ⌊n(φ+1)⌋ + g(n)`.
pub fn b2(n: SequenceIndex) -> u64 {
    upper_wythoff(n) + g_at(n)
}

/// Membership in the classical Wythoff P-positions.
pub fn p0_contains(p: Position) -> bool {
    let (s, t) = p.sorted();
    lower_wythoff(SequenceIndex::from(t - s)) == s as u64
}

/// Membership in the variant's P-positions.
pub fn p1_contains(p: Position) -> bool {
    let (s, t) = p.sorted();
    if (s, t) == (0, 0) || (s, t) == (1, 1) {
        return true;
    }
    if t == s {
        return false;
    }
    let n = SequenceIndex::from(t - s - 1);
    b1(n) == s as u64 && b2(n) == t as u64
}

/// Membership in the misère variant's P-positions.
pub fn p2_contains(p: Position) -> bool {
    if in_corner(p) {
        SET_B.contains(&p)
    } else {
        p0_contains(p)
    }
}

/// Membership in the sum game's P-positions.
pub fn p4_contains(p: SumPosition) -> bool {
    if p.stone {
        p2_contains(p.board())
    } else {
        p1_contains(p.board())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `(⌊nφ⌋, ⌊n(φ+1)⌋)`
    P01,
    /// swap of `P01`
    P02,
    /// `(b1(n), b2(n))`
    P11,
    /// swap of `P11`
    P12,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::P01, Family::P02, Family::P11, Family::P12];

    /// The family's pair for index `n`.
    pub fn pair(self, n: SequenceIndex) -> PPairIndexed {
        let (first, second) = match self {
            Family::P01 => (lower_wythoff(n), upper_wythoff(n)),
            Family::P02 => (upper_wythoff(n), lower_wythoff(n)),
            Family::P11 => (b1(n), b2(n)),
            Family::P12 => (b2(n), b1(n)),
        };
        PPairIndexed { n: n.get(), first, second, family: self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PPairIndexed {
    pub n: u64,
    pub first: u64,
    pub second: u64,
    pub family: Family,
}

impl PPairIndexed {
    /// `None` when a coordinate exceeds `u32`.
    pub fn position(&self) -> Option<Position> {
        Some(Position::new(self.first.try_into().ok()?, self.second.try_into().ok()?))
    }
}

/// Every pair of `family` with both coordinates at most `bound`, by increasing `n`.
///
/// Both coordinates grow with `n`, so the scan stops at the first pair past the bound.
pub fn enumerate(family: Family, bound: u32) -> Vec<PPairIndexed> {
    let bound = bound as u64;
    (0..=bound as u32)
        .map(|n| family.pair(SequenceIndex::from(n)))
        .take_while(|pair| pair.first.max(pair.second) <= bound)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u32) -> SequenceIndex {
        SequenceIndex::from(n)
    }

    fn coords(v: &[PPairIndexed]) -> Vec<(u64, u64)> {
        v.iter().map(|q| (q.first, q.second)).collect()
    }

    #[test]
    fn b_examples() {
        assert_eq!((b1(idx(0)), b2(idx(0))), (0, 1));
        assert_eq!((b1(idx(2)), b2(idx(2))), (3, 6));
        assert_eq!((b1(idx(4)), b2(idx(4))), (5, 10));
        for n in 0..5_000 {
            assert_eq!(b2(idx(n)) - b1(idx(n)), n as u64 + 1);
        }
    }

    #[test]
    fn membership_examples() {
        assert!(p0_contains(p(0, 0)));
        assert!(p0_contains(p(4, 7)));
        assert!(!p0_contains(p(4, 6)));

        assert!(p1_contains(p(1, 1)));
        assert!(p1_contains(p(3, 6)));
        assert!(p1_contains(p(6, 3)));
        assert!(p1_contains(p(4, 8)));
        assert!(!p1_contains(p(2, 2)));

        assert!(p2_contains(p(4, 4)));
        assert!(p2_contains(p(8, 13)));
        assert!(p2_contains(p(5, 7)));
        assert!(!p0_contains(p(5, 7)));
        assert!(!p2_contains(p(0, 0)));

        assert!(p4_contains(SumPosition::new(3, 6, false)));
        assert!(p4_contains(SumPosition::new(4, 4, true)));
        assert!(!p4_contains(SumPosition::new(3, 6, true)));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(coords(&enumerate(Family::P01, 7)), [(0, 0), (1, 2), (3, 5), (4, 7)]);
        assert_eq!(coords(&enumerate(Family::P11, 7)), [(0, 1), (0, 2), (3, 6)]);
        assert_eq!(coords(&enumerate(Family::P12, 7)), [(1, 0), (2, 0), (6, 3)]);
        assert_eq!(coords(&enumerate(Family::P01, 0)), [(0, 0)]);
        assert!(enumerate(Family::P11, 0).is_empty());
        assert!(enumerate(Family::P12, 0).is_empty());
    }

    #[test]
    fn corner_sets_match_closed_forms() {
        let corner: Vec<Position> =
            (0..=CORNER).flat_map(|y| (0..=CORNER).map(move |x| p(x, y))).collect();
        for &q in &corner {
            assert_eq!(p1_contains(q), SET_A.contains(&q), "{q}");
            assert_eq!(p0_contains(q), SET_C.contains(&q), "{q}");
        }
        // P4 restricted to the corner is A* ∪ B*
        let mut sliced: Vec<SumPosition> = corner
            .iter()
            .flat_map(|q| [false, true].map(|z| SumPosition::new(q.x, q.y, z)))
            .filter(|&sp| p4_contains(sp))
            .collect();
        let mut expected = [a_star(), b_star()].concat();
        sliced.sort();
        expected.sort();
        assert_eq!(sliced, expected);
    }

    #[test]
    fn enumeration_agrees_with_membership() {
        let bound = 300;
        let mut from_enum: Vec<Position> = Family::ALL
            .iter()
            .filter(|f| matches!(f, Family::P11 | Family::P12))
            .flat_map(|&f| enumerate(f, bound))
            .filter_map(|q| q.position())
            .chain([p(0, 0), p(1, 1)])
            .collect();
        from_enum.sort();
        from_enum.dedup();
        let mut from_test: Vec<Position> = (0..=bound)
            .flat_map(|y| (0..=bound).map(move |x| p(x, y)))
            .filter(|&q| p1_contains(q))
            .collect();
        from_test.sort();
        assert_eq!(from_enum, from_test);
    }
}
