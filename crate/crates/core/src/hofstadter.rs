//! Hofstadter's G-sequence and the 0/1 function `g` that shifts the variant's
//! P-positions off the classical Wythoff pairs.
//!
//! `g` has two independent evaluations here: the direct one through the upper
//! Wythoff sequence ([`g`], [`GTable`]) and the one driven by the G-sequence
//! ([`g_hofstadter`], [`GHofstadterTable`]). They share no code past the base
//! cases, so comparing them is meaningful.

use std::fmt;

use crate::beatty::{
    classify_triple, floor_div_phi, lower_wythoff, upper_wythoff, SequenceError, SequenceIndex,
    TripleCase,
};

/// A value of `g`, always 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GValue(u8);

impl GValue {
    pub const ZERO: GValue = GValue(0);
    pub const ONE: GValue = GValue(1);

    pub fn new(v: u8) -> Option<Self> {
        (v <= 1).then_some(GValue(v))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// `1 − g`.
    #[inline]
    pub fn complement(self) -> Self {
        GValue(1 - self.0)
    }
}

impl From<GValue> for u64 {
    fn from(v: GValue) -> u64 {
        v.0 as u64
    }
}

impl fmt::Display for GValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Memo table of the G-sequence `h(0) = 0`, `h(n) = n − h(h(n−1))`, filled bottom-up.
#[derive(Debug, Clone)]
pub struct HTable {
    values: Vec<u64>,
}

impl HTable {
    /// Table holding `h(0..=max)`.
    pub fn up_to(max: u64) -> Self {
        let mut table = HTable { values: vec![0] };
        table.extend_to(max);
        table
    }

    pub fn extend_to(&mut self, max: u64) {
        let max = usize::try_from(max).expect("index exceeds address space");
        self.values.reserve(max.saturating_sub(self.values.len()) + 1);
        for n in self.values.len()..=max {
            let inner = self.values[n - 1] as usize;
            self.values.push(n as u64 - self.values[inner]);
        }
    }

    #[inline]
    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(n as usize).copied()
    }

    /// Highest index held.
    pub fn max_index(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.values
    }
}

/// `h(n)` by the recurrence.
pub fn h(n: u64) -> u64 {
    HTable::up_to(n).values[n as usize]
}

/// `h(n) = ⌊(n+1)/φ⌋`.
pub fn h_closed(n: u64) -> Result<u64, SequenceError> {
    let next = n.checked_add(1).ok_or(SequenceError::OutOfRange(n))?;
    Ok(floor_div_phi(SequenceIndex::new(next)?))
}

/// The unique `m` with `⌊nφ⌋ − 2 ≤ ⌊m(φ+1)⌋ ≤ ⌊nφ⌋ − 1`, taken as `⌊n/φ⌋`.
///
/// # Panics
///
/// If the sandwich inequality fails for the computed `m`, which would mean the
/// exact arithmetic is broken.
pub fn f(n: u64) -> Result<u64, SequenceError> {
    if n == 0 {
        return Err(SequenceError::Domain { op: "f", n, min: 1 });
    }
    let idx = SequenceIndex::new(n)?;
    let m = floor_div_phi(idx);
    let low = lower_wythoff(idx);
    let up = upper_wythoff(SequenceIndex::new(m)?);
    assert!(
        up + 2 >= low && up < low,
        "f({n}) = {m} violates ⌊nφ⌋−2 ≤ ⌊m(φ+1)⌋ ≤ ⌊nφ⌋−1 ({} ≤ {up} ≤ {})",
        low as i128 - 2,
        low - 1
    );
    Ok(m)
}

/// `g(n)` evaluated directly, without a table.
///
/// Follows the chain `n → m` through every index whose `⌊nφ⌋` sits one above
/// an upper Wythoff value; each step flips the result. The chain shrinks by a
/// factor of about φ² per step, so the cost is logarithmic.
pub fn g(n: u64) -> Result<GValue, SequenceError> {
    let mut k = SequenceIndex::new(n)?;
    let mut flips = 0u32;
    let base = loop {
        match k.get() {
            0 => break GValue::ONE,
            1 => break GValue::ZERO,
            _ => {
                let triple = classify_triple(k)?;
                match triple.case {
                    TripleCase::UpperMiddle => {
                        flips += 1;
                        k = SequenceIndex::new(triple.m)?;
                    }
                    TripleCase::UpperFirst => break GValue::ONE,
                }
            }
        }
    };
    Ok(if flips.is_multiple_of(2) { base } else { base.complement() })
}

/// Memo table of `g`, filled bottom-up from the upper-sequence condition.
#[derive(Debug, Clone)]
pub struct GTable {
    values: Vec<GValue>,
}

impl GTable {
    pub fn up_to(max: u64) -> Result<Self, SequenceError> {
        let mut table = GTable { values: vec![GValue::ONE, GValue::ZERO] };
        table.extend_to(max)?;
        Ok(table)
    }

    pub fn extend_to(&mut self, max: u64) -> Result<(), SequenceError> {
        SequenceIndex::new(max)?;
        for n in self.values.len() as u64..=max {
            let triple = classify_triple(SequenceIndex::new(n)?)?;
            let v = match triple.case {
                TripleCase::UpperMiddle => self.values[triple.m as usize].complement(),
                TripleCase::UpperFirst => GValue::ONE,
            };
            self.values.push(v);
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, n: u64) -> Option<GValue> {
        self.values.get(n as usize).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `g` rebuilt from the G-sequence: for `n ≥ 2`,
/// `g(n) = 1 − g(h(n−1))` if `h(n−2) < h(n−1)`, else 1.
#[derive(Debug, Clone)]
pub struct GHofstadterTable {
    values: Vec<GValue>,
}

impl GHofstadterTable {
    pub fn up_to(max: u64) -> Self {
        let hs = HTable::up_to(max.max(1));
        Self::from_h(&hs, max)
    }

    /// Builds the table using a prefilled G-sequence holding at least `h(max−1)`.
    pub fn from_h(hs: &HTable, max: u64) -> Self {
        assert!(
            max < 2 || hs.max_index() + 1 >= max,
            "G-sequence table too short for g up to {max}"
        );
        let h = hs.as_slice();
        let mut values = vec![GValue::ONE, GValue::ZERO];
        values.truncate(max as usize + 1);
        for n in 2..=max as usize {
            let v = if h[n - 2] < h[n - 1] {
                values[h[n - 1] as usize].complement()
            } else {
                GValue::ONE
            };
            values.push(v);
        }
        GHofstadterTable { values }
    }

    #[inline]
    pub fn get(&self, n: u64) -> Option<GValue> {
        self.values.get(n as usize).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `g(n)` through the G-sequence route.
pub fn g_hofstadter(n: u64) -> GValue {
    GHofstadterTable::up_to(n).values[n as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive recursive G-sequence; fine for small n.
    fn h_recursive(n: u64) -> u64 {
        if n == 0 {
            0
        } else {
            n - h_recursive(h_recursive(n - 1))
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(0), 0);
        assert_eq!(h(1), 1);
        assert_eq!(h(5), 3);
        let first: Vec<u64> = HTable::up_to(9).as_slice().to_vec();
        assert_eq!(first, [0, 1, 1, 2, 3, 3, 4, 4, 5, 6]);
        for n in 0..60 {
            assert_eq!(h(n), h_recursive(n));
        }
    }

    #[test]
    fn h_closed_examples() {
        assert_eq!(h_closed(0), Ok(0));
        assert_eq!(h_closed(4), Ok(3));
        assert_eq!(h_closed(9), Ok(6));
        assert!(h_closed(u64::MAX).is_err());
    }

    #[test]
    fn h_steps_are_zero_or_one() {
        let t = HTable::up_to(10_000);
        for w in t.as_slice().windows(2) {
            assert!(w[1] - w[0] <= 1);
        }
    }

    #[test]
    fn f_examples() {
        assert_eq!(f(2), Ok(1));
        assert_eq!(f(3), Ok(1));
        assert_eq!(f(4), Ok(2));
        assert_eq!(f(1), Ok(0));
        assert_eq!(f(0), Err(SequenceError::Domain { op: "f", n: 0, min: 1 }));
    }

    #[test]
    fn f_agrees_with_brute_force_sandwich() {
        for n in 1..2_000u64 {
            let low = lower_wythoff(SequenceIndex::new(n).unwrap()) as i64;
            let brute: Vec<u64> = (0..=n)
                .filter(|&m| {
                    let up = upper_wythoff(SequenceIndex::new(m).unwrap()) as i64;
                    low - 2 <= up && up < low
                })
                .collect();
            assert_eq!(brute, vec![f(n).unwrap()], "n={n}");
        }
    }

    #[test]
    fn g_examples() {
        let first: Vec<u8> = (0..10).map(|n| g(n).unwrap().get()).collect();
        assert_eq!(first, [1, 0, 1, 1, 0, 0, 1, 1, 1, 1]);
        assert_eq!(g(4), Ok(GValue::ZERO));
    }

    #[test]
    fn g_hofstadter_examples() {
        assert_eq!(g_hofstadter(0), GValue::ONE);
        assert_eq!(g_hofstadter(1), GValue::ZERO);
        assert_eq!(g_hofstadter(2), GValue::ONE);
        assert_eq!(g_hofstadter(3), GValue::ONE);
        assert_eq!(g_hofstadter(4), GValue::ZERO);
        assert_eq!(GHofstadterTable::up_to(0).len(), 1);
    }

    #[test]
    fn table_and_chain_agree() {
        let table = GTable::up_to(5_000).unwrap();
        let hof = GHofstadterTable::up_to(5_000);
        for n in 0..=5_000 {
            let direct = g(n).unwrap();
            assert_eq!(table.get(n), Some(direct), "n={n}");
            assert_eq!(hof.get(n), Some(direct), "n={n}");
        }
    }

    #[test]
    fn g_value_bounds() {
        assert_eq!(GValue::new(2), None);
        assert_eq!(GValue::ONE.complement(), GValue::ZERO);
    }

    proptest::proptest! {
        #[test]
        fn chain_g_matches_hofstadter_route(n in 0u64..50_000) {
            proptest::prop_assert_eq!(g(n).unwrap(), g_hofstadter(n));
        }
    }
}
