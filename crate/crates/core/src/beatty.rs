//! Exact lower and upper Wythoff sequences.
//!
//! `⌊nφ⌋` is evaluated as `⌊(n + ⌊√(5n²)⌋) / 2⌋` in 128-bit integers. For `n > 0`
//! the square root is irrational, so truncating it never crosses an integer
//! boundary of `nφ` and the result is exact. No floating point is involved.

use std::fmt;

use thiserror::Error;

/// Largest index accepted by the sequence functions.
///
/// `5 · N_MAX²` fits comfortably in `u128`, and `upper_wythoff(N_MAX) ≈ 2.618 · 2^62`
/// still fits in `u64`.
pub const N_MAX: u64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence index {0} exceeds the exact-arithmetic bound {N_MAX}")]
    OutOfRange(u64),
    #[error("{op} is undefined at index {n}; the index must be at least {min}")]
    Domain { op: &'static str, n: u64, min: u64 },
}

/// An index into the Wythoff sequences, guaranteed to be at most [`N_MAX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceIndex(u64);

impl SequenceIndex {
    pub const MAX: SequenceIndex = SequenceIndex(N_MAX);

    pub fn new(n: u64) -> Result<Self, SequenceError> {
        if n > N_MAX {
            Err(SequenceError::OutOfRange(n))
        } else {
            Ok(SequenceIndex(n))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl From<u32> for SequenceIndex {
    #[inline]
    fn from(n: u32) -> Self {
        SequenceIndex(n as u64)
    }
}

impl TryFrom<u64> for SequenceIndex {
    type Error = SequenceError;

    fn try_from(n: u64) -> Result<Self, Self::Error> {
        SequenceIndex::new(n)
    }
}

impl fmt::Display for SequenceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `a₁(n) = ⌊nφ⌋`.
#[inline]
pub fn lower_wythoff(n: SequenceIndex) -> u64 {
    let n = n.0 as u128;
    let root = (5 * n * n).isqrt();
    ((n + root) / 2) as u64
}

/// `a₂(n) = ⌊n(φ+1)⌋ = ⌊nφ⌋ + n`.
#[inline]
pub fn upper_wythoff(n: SequenceIndex) -> u64 {
    lower_wythoff(n) + n.0
}

/// `⌊n/φ⌋`, using `1/φ = φ − 1`.
#[inline]
pub fn floor_div_phi(n: SequenceIndex) -> u64 {
    lower_wythoff(n) - n.0
}

/// Inverts the upper sequence: returns `m` with `upper_wythoff(m) == k`, if any.
///
/// `⌊m(φ+1)⌋ ≤ k` iff `m < (k+1)/φ²`, so the only candidate is
/// `⌊(k+1)/φ²⌋ = 2(k+1) − ⌈(k+1)φ⌉`.
pub fn upper_index_of(k: u64) -> Option<u64> {
    let next = SequenceIndex::new(k.checked_add(1)?).ok()?;
    // ⌈jφ⌉ = ⌊jφ⌋ + 1 for j ≥ 1 since jφ is irrational
    let candidate = 2 * next.0 - (lower_wythoff(next) + 1);
    (upper_wythoff(SequenceIndex(candidate)) == k).then_some(candidate)
}

/// Which position the upper-sequence value takes among three consecutive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleCase {
    /// `upper(m), lower(n−1), lower(n)` are consecutive.
    UpperFirst,
    /// `lower(n−1), upper(m), lower(n)` are consecutive.
    UpperMiddle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConsecutiveTriple {
    pub case: TripleCase,
    pub n: u64,
    /// Witness index into the upper sequence.
    pub m: u64,
}

impl ConsecutiveTriple {
    /// The three integers in increasing order.
    pub fn values(&self) -> [u64; 3] {
        let prev = lower_wythoff(SequenceIndex(self.n - 1));
        let cur = lower_wythoff(SequenceIndex(self.n));
        let up = upper_wythoff(SequenceIndex(self.m));
        match self.case {
            TripleCase::UpperFirst => [up, prev, cur],
            TripleCase::UpperMiddle => [prev, up, cur],
        }
    }
}

/// Locates `lower(n)` relative to the nearest upper-sequence value below it.
///
/// When `lower(n) − lower(n−1) = 2` the gap holds an upper value; when the two
/// are adjacent, the upper value sits immediately below `lower(n−1)`. The
/// witness is found by inverting the upper sequence directly.
///
/// `n = 1` has no triple (`lower(0) = 0` has nothing below it), so `n ≥ 2` is required.
pub fn classify_triple(n: SequenceIndex) -> Result<ConsecutiveTriple, SequenceError> {
    if n.0 < 2 {
        return Err(SequenceError::Domain { op: "classify_triple", n: n.0, min: 2 });
    }
    let prev = lower_wythoff(SequenceIndex(n.0 - 1));
    let cur = lower_wythoff(n);
    let (case, target) = match cur - prev {
        2 => (TripleCase::UpperMiddle, cur - 1),
        1 => (TripleCase::UpperFirst, prev - 1),
        gap => unreachable!("lower Wythoff gap {gap} at n={n}"),
    };
    let m = upper_index_of(target)
        .unwrap_or_else(|| unreachable!("{target} is not an upper Wythoff value (n={n})"));
    Ok(ConsecutiveTriple { case, n: n.0, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u64) -> SequenceIndex {
        SequenceIndex::new(n).unwrap()
    }

    /// Wythoff pairs built by the greedy mex construction, independent of φ.
    fn greedy_pairs(count: usize) -> Vec<(u64, u64)> {
        let mut used = vec![false; 3 * count + 8];
        let mut pairs = Vec::with_capacity(count);
        let mut a = 0u64;
        for n in 0..count as u64 {
            while used[a as usize] {
                a += 1;
            }
            let b = a + n;
            used[a as usize] = true;
            used[b as usize] = true;
            pairs.push((a, b));
        }
        pairs
    }

    #[test]
    fn examples() {
        assert_eq!(lower_wythoff(idx(0)), 0);
        assert_eq!(lower_wythoff(idx(3)), 4);
        assert_eq!(upper_wythoff(idx(3)), 7);
        assert_eq!(lower_wythoff(idx(4)), 6);
        assert_eq!(upper_wythoff(idx(0)), 0);
        assert_eq!(upper_wythoff(idx(2)), 5);
        assert_eq!(upper_wythoff(idx(5)), 13);
        assert_eq!(floor_div_phi(idx(0)), 0);
        assert_eq!(floor_div_phi(idx(2)), 1);
        assert_eq!(floor_div_phi(idx(7)), 4);
    }

    #[test]
    fn matches_greedy_construction() {
        for (n, (a, b)) in greedy_pairs(20_000).into_iter().enumerate() {
            let n = idx(n as u64);
            assert_eq!(lower_wythoff(n), a, "lower({n})");
            assert_eq!(upper_wythoff(n), b, "upper({n})");
        }
    }

    #[test]
    fn range_is_enforced() {
        assert!(SequenceIndex::new(N_MAX).is_ok());
        assert_eq!(SequenceIndex::new(N_MAX + 1), Err(SequenceError::OutOfRange(N_MAX + 1)));
        // the largest index must not overflow
        let top = SequenceIndex::MAX;
        assert!(upper_wythoff(top) > lower_wythoff(top));
    }

    #[test]
    fn triple_examples() {
        let t = classify_triple(idx(2)).unwrap();
        assert_eq!((t.case, t.m), (TripleCase::UpperMiddle, 1));
        assert_eq!(t.values(), [1, 2, 3]);

        let t = classify_triple(idx(3)).unwrap();
        assert_eq!((t.case, t.m), (TripleCase::UpperFirst, 1));
        assert_eq!(t.values(), [2, 3, 4]);

        let t = classify_triple(idx(4)).unwrap();
        assert_eq!((t.case, t.m), (TripleCase::UpperMiddle, 2));
        assert_eq!(t.values(), [4, 5, 6]);

        assert_eq!(classify_triple(idx(0)), Err(SequenceError::Domain { op: "classify_triple", n: 0, min: 2 }));
        assert_eq!(classify_triple(idx(1)), Err(SequenceError::Domain { op: "classify_triple", n: 1, min: 2 }));
    }

    #[test]
    fn upper_inverse() {
        assert_eq!(upper_index_of(0), Some(0));
        assert_eq!(upper_index_of(1), None);
        assert_eq!(upper_index_of(2), Some(1));
        assert_eq!(upper_index_of(13), Some(5));
        assert_eq!(upper_index_of(14), None);
        for m in 0..5_000u64 {
            let k = upper_wythoff(idx(m));
            assert_eq!(upper_index_of(k), Some(m));
            assert_eq!(upper_index_of(k + 1), None);
        }
    }

    /// Brackets `nφ` between consecutive Fibonacci convergents `F(k+1)/F(k)`;
    /// when both floors agree they equal `⌊nφ⌋`.
    fn convergent_floor(n: u64) -> Option<u64> {
        let (mut a, mut b) = (1u128, 1u128);
        while b < (1 << 63) {
            (a, b) = (b, a + b);
        }
        // a = F(k), b = F(k+1), c = F(k+2)
        let c = a + b;
        let n = n as u128;
        let lo = n * b / a;
        let hi = n * c / b;
        (lo == hi).then_some(lo as u64)
    }

    proptest::proptest! {
        #[test]
        fn exact_against_convergents(n in 0u64..=N_MAX) {
            if let Some(expected) = convergent_floor(n) {
                proptest::prop_assert_eq!(lower_wythoff(idx(n)), expected);
            }
        }

        #[test]
        fn upper_is_lower_plus_index(n in 0u64..=N_MAX) {
            let n = idx(n);
            proptest::prop_assert_eq!(upper_wythoff(n), lower_wythoff(n) + n.get());
        }
    }
}
