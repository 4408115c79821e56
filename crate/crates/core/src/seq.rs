//! Finite binary sequences and the single-sequence statistics built on them:
//! period, inversions, weights, distances, adjacent-pair indicators and
//! membership in the periodic-constraint set `R(n, ℓ, t)`.
//!
//! A [`BitSeq`] is packed into one machine word. Public slicing is 1-based
//! and inclusive (`subword(x, l, k)` is `x_l … x_k`); the 0-based helpers are
//! crate-internal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest sequence representable by a [`BitSeq`].
pub const MAX_LEN: usize = 64;

/// Largest `n` for which whole-space enumeration of `Σ₂ⁿ` is attempted.
pub const ENUMERATION_CAP: usize = 26;

#[inline]
fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[inline]
fn shl(bits: u64, k: usize) -> u64 {
    if k >= 64 {
        0
    } else {
        bits << k
    }
}

#[inline]
fn shr(bits: u64, k: usize) -> u64 {
    if k >= 64 {
        0
    } else {
        bits >> k
    }
}

/// A binary sequence of length at most [`MAX_LEN`].
///
/// The first symbol is stored in the most significant of the `len` low bits,
/// so that for equal lengths integer order coincides with lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitSeq {
    bits: u64,
    len: u8,
}

impl BitSeq {
    pub const EMPTY: BitSeq = BitSeq { bits: 0, len: 0 };

    /// Builds a sequence from its packed value; `bits` must fit in `len` bits.
    pub fn from_packed(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong { len, max: MAX_LEN });
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::Parameter(format!(
                "packed value {bits:#x} does not fit in {len} bits"
            )));
        }
        Ok(BitSeq { bits, len: len as u8 })
    }

    #[inline]
    pub(crate) fn from_packed_unchecked(bits: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN && bits & !low_mask(len) == 0);
        BitSeq { bits, len: len as u8 }
    }

    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        if symbols.len() > MAX_LEN {
            return Err(Error::TooLong { len: symbols.len(), max: MAX_LEN });
        }
        let mut bits = 0u64;
        for &s in symbols {
            if s > 1 {
                return Err(Error::Parameter(format!("symbol {s} is not binary")));
            }
            bits = (bits << 1) | s as u64;
        }
        Ok(BitSeq { bits, len: symbols.len() as u8 })
    }

    /// The single-symbol sequence `a`.
    pub fn symbol(a: u8) -> Self {
        BitSeq { bits: (a & 1) as u64, len: 1 }
    }

    /// All `2ⁿ` sequences of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = BitSeq>> {
        if n > ENUMERATION_CAP {
            return Err(Error::EnumerationCap { n, cap: ENUMERATION_CAP });
        }
        Ok((0..1u64 << n).map(move |bits| BitSeq::from_packed_unchecked(bits, n)))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn packed(&self) -> u64 {
        self.bits
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// Symbol at 0-based position `i`, or 0 past the end (implicit zero padding).
    #[inline]
    pub(crate) fn bit_or_zero(&self, i: usize) -> u8 {
        if i < self.len() {
            self.bit(i)
        } else {
            0
        }
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.bit(0))
    }

    pub fn last(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.bit(self.len() - 1))
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.bit(i))
    }

    pub fn complement(&self) -> BitSeq {
        BitSeq { bits: !self.bits & low_mask(self.len()), len: self.len }
    }

    pub fn reverse(&self) -> BitSeq {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        BitSeq { bits: self.bits.reverse_bits() >> (64 - n), len: self.len }
    }

    pub fn concat(&self, other: &BitSeq) -> Result<BitSeq> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::TooLong { len, max: MAX_LEN });
        }
        Ok(BitSeq { bits: shl(self.bits, other.len()) | other.bits, len: len as u8 })
    }

    /// `self` repeated `times` times; `power(0)` is the empty sequence.
    pub fn power(&self, times: usize) -> Result<BitSeq> {
        let len = self.len().saturating_mul(times);
        if len > MAX_LEN {
            return Err(Error::TooLong { len, max: MAX_LEN });
        }
        let mut out = BitSeq::EMPTY;
        for _ in 0..times {
            out = out.concat(self)?;
        }
        Ok(out)
    }

    pub fn push(&self, a: u8) -> Result<BitSeq> {
        self.concat(&BitSeq::symbol(a))
    }

    /// Inserts `a` before 0-based position `pos` (`pos == len` appends).
    #[cfg(test)]
    pub(crate) fn insert(&self, pos: usize, a: u8) -> BitSeq {
        let n = self.len();
        debug_assert!(pos <= n && n < MAX_LEN);
        let tail_len = n - pos;
        let tail = self.bits & low_mask(tail_len);
        let head = shr(self.bits, tail_len);
        let bits = shl(shl(head, 1) | a as u64, tail_len) | tail;
        BitSeq { bits, len: (n + 1) as u8 }
    }

    /// Removes the symbol at 0-based position `pos`.
    pub(crate) fn remove(&self, pos: usize) -> BitSeq {
        let n = self.len();
        debug_assert!(pos < n);
        let tail_len = n - 1 - pos;
        let tail = self.bits & low_mask(tail_len);
        let head = shr(self.bits, tail_len + 1);
        BitSeq { bits: shl(head, tail_len) | tail, len: (n - 1) as u8 }
    }

    /// 0-based half-open slice `[start, end)`.
    pub(crate) fn slice(&self, start: usize, end: usize) -> BitSeq {
        debug_assert!(start <= end && end <= self.len());
        let len = end - start;
        let bits = shr(self.bits, self.len() - end) & low_mask(len);
        BitSeq { bits, len: len as u8 }
    }

    /// The subword `x[l:k] = x_l … x_k`, 1-based and inclusive.
    pub fn subword(&self, l: usize, k: usize) -> Result<BitSeq> {
        if l == 0 || l > k || k > self.len() {
            return Err(Error::IndexOutOfRange { l, k, len: self.len() });
        }
        Ok(self.slice(l - 1, k))
    }

    pub fn starts_with(&self, prefix: &BitSeq) -> bool {
        prefix.len() <= self.len() && self.slice(0, prefix.len()) == *prefix
    }

    pub fn ends_with(&self, suffix: &BitSeq) -> bool {
        suffix.len() <= self.len() && self.slice(self.len() - suffix.len(), self.len()) == *suffix
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of occurrences of symbol `a`.
    pub fn count(&self, a: u8) -> usize {
        if a == 1 {
            self.weight()
        } else {
            self.len() - self.weight()
        }
    }

    pub fn hamming_distance(&self, other: &BitSeq) -> Result<usize> {
        same_length(self, other)?;
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// Smallest `p` with `x_i = x_{i+p}` for every valid `i`. Sequences of
    /// length 0 or 1 report period 1.
    pub fn period(&self) -> PeriodReport {
        let n = self.len();
        if n <= 1 {
            return PeriodReport { period: 1, is_alternating: true };
        }
        let period = (1..=n)
            .find(|&p| has_shift_period(self, p))
            .expect("shift by n is vacuous");
        PeriodReport { period, is_alternating: period == 2 }
    }

    /// Adjacent symbols all differ. Constant runs of length ≥ 2 have
    /// period 1 and are not alternating.
    pub fn is_alternating(&self) -> bool {
        let n = self.len();
        n <= 1 || (self.bits ^ (self.bits >> 1)) & low_mask(n - 1) == low_mask(n - 1)
    }

    /// Number of pairs `i < j` with `x_i = 1` and `x_j = 0`.
    pub fn inversions(&self) -> u64 {
        let mut ones = 0u64;
        let mut inv = 0u64;
        for s in self.symbols() {
            if s == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    /// The `ab`-indicator: length `n − 1`, position `i` set iff
    /// `x_i = a` and `x_{i+1} = b`.
    pub fn indicator(&self, a: u8, b: u8) -> Result<BitSeq> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TooShort { len: n, min: 2 });
        }
        let want_hi = if a == 1 { self.bits >> 1 } else { !self.bits >> 1 };
        let want_lo = if b == 1 { self.bits } else { !self.bits };
        let bits = want_hi & want_lo & low_mask(n - 1);
        Ok(BitSeq { bits, len: (n - 1) as u8 })
    }

    /// Whether `self` can be obtained from `longer` by deleting symbols.
    pub fn is_subsequence_of(&self, longer: &BitSeq) -> bool {
        let mut want = self.symbols().peekable();
        for s in longer.symbols() {
            if want.peek() == Some(&s) {
                want.next();
            }
        }
        want.peek().is_none()
    }

    /// Length of a longest common subsequence.
    pub fn lcs_len(&self, other: &BitSeq) -> usize {
        let (n, m) = (self.len(), other.len());
        let mut prev = vec![0usize; m + 1];
        let mut cur = vec![0usize; m + 1];
        for i in 0..n {
            let xi = self.bit(i);
            for j in 0..m {
                cur[j + 1] = if xi == other.bit(j) {
                    prev[j] + 1
                } else {
                    prev[j + 1].max(cur[j])
                };
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        prev[m]
    }

    /// Smallest `ℓ` with `I_ℓ(x) ∩ I_ℓ(y) ≠ ∅`, evaluated as `n − LCS(x, y)`.
    pub fn levenshtein_insertion_distance(&self, other: &BitSeq) -> Result<usize> {
        same_length(self, other)?;
        Ok(self.len() - self.lcs_len(other))
    }

    /// Membership in `R(n, ℓ, t)`: every subword whose period is at most
    /// `ell` has length at most `t`.
    pub fn in_r(&self, ell: usize, t: usize) -> bool {
        let n = self.len();
        if n <= t {
            return true;
        }
        // Any window of length t + 1 has period ≤ t + 1.
        if ell > t {
            return false;
        }
        // A subword of period p longer than t exists iff some window of length
        // t + 1 satisfies x_i = x_{i+p} at its first t + 1 − p positions.
        for p in 1..=ell {
            let agree = !(self.bits ^ (self.bits >> p)) & low_mask(n - p);
            let mut run = agree;
            for _ in 1..(t + 1 - p) {
                run &= run >> 1;
            }
            if run != 0 {
                return false;
            }
        }
        true
    }
}

fn has_shift_period(x: &BitSeq, p: usize) -> bool {
    let n = x.len();
    p >= n || (x.bits ^ (x.bits >> p)) & low_mask(n - p) == 0
}

pub(crate) fn same_length(x: &BitSeq, y: &BitSeq) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(())
}

/// `|R(n, ℓ, t)|` by enumeration of `Σ₂ⁿ`.
pub fn count_r(n: usize, ell: usize, t: usize) -> Result<u64> {
    Ok(BitSeq::all(n)?.filter(|x| x.in_r(ell, t)).count() as u64)
}

/// The smallest period of a sequence together with the alternation flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodReport {
    pub period: usize,
    pub is_alternating: bool,
}

impl Ord for BitSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for BitSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for BitSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0usize;
        for c in s.chars() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                other => return Err(Error::InvalidSymbol(other)),
            };
            len += 1;
            if len > MAX_LEN {
                return Err(Error::TooLong { len: s.chars().count(), max: MAX_LEN });
            }
            bits = (bits << 1) | b;
        }
        Ok(BitSeq { bits, len: len as u8 })
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(if s == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Parses a sequence literal; panics on malformed input. Intended for tests
/// and constants.
pub fn seq(s: &str) -> BitSeq {
    s.parse().unwrap_or_else(|e| panic!("bad sequence literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_seq(max: usize) -> impl Strategy<Value = BitSeq> {
        proptest::collection::vec(0u8..2, 0..=max).prop_map(|v| BitSeq::from_symbols(&v).unwrap())
    }

    /// Period by literal definition over the symbol vector.
    fn naive_period(x: &BitSeq) -> usize {
        let s: Vec<u8> = x.symbols().collect();
        let n = s.len();
        if n <= 1 {
            return 1;
        }
        (1..=n).find(|&p| (0..n - p).all(|i| s[i] == s[i + p])).unwrap()
    }

    fn naive_in_r(x: &BitSeq, ell: usize, t: usize) -> bool {
        let n = x.len();
        for l in 1..=n {
            for k in l..=n {
                let w = x.subword(l, k).unwrap();
                if naive_period(&w) <= ell && w.len() > t {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn complement_examples() {
        assert_eq!(seq("101101").complement(), seq("010010"));
        assert_eq!(BitSeq::EMPTY.complement(), BitSeq::EMPTY);
        assert_eq!(seq("0").complement(), seq("1"));
    }

    #[test]
    fn concat_and_power() {
        assert_eq!(seq("10").concat(&seq("101")).unwrap(), seq("10101"));
        assert_eq!(seq("10").power(2).unwrap(), seq("1010"));
        assert_eq!(seq("10").power(0).unwrap(), BitSeq::EMPTY);
        assert!(seq("10").power(33).is_err());
        let long = seq("1").power(64).unwrap();
        assert_eq!(BitSeq::EMPTY.concat(&long).unwrap(), long);
    }

    #[test]
    fn subword_is_one_based_inclusive() {
        let x = seq("10011010");
        assert_eq!(x.subword(1, 3).unwrap(), seq("100"));
        assert_eq!(x.subword(8, 8).unwrap(), seq("0"));
        assert!(matches!(seq("10").subword(2, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(x.subword(0, 1).is_err());
        assert!(x.subword(1, 9).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(seq("111").period().period, 1);
        assert_eq!(seq("0011").period().period, 4);
        assert!(seq("101").period().is_alternating);
        assert!(!seq("0011").period().is_alternating);
        assert!(!seq("000").period().is_alternating);
        assert!(!seq("11").is_alternating());
        for s in ["", "0", "1", "10", "01", "101"] {
            let r = seq(s).period();
            assert!(r.is_alternating, "{s}");
        }
        assert_eq!(BitSeq::EMPTY.period().period, 1);
    }

    #[test]
    fn period_matches_definition_exhaustively() {
        for n in 0..=10 {
            for x in BitSeq::all(n).unwrap() {
                let r = x.period();
                assert_eq!(r.period, naive_period(&x), "{x}");
                assert_eq!(r.is_alternating, n <= 1 || r.period == 2);
                assert_eq!(x.is_alternating(), r.is_alternating);
            }
        }
    }

    #[test]
    fn in_r_examples() {
        assert!(!seq("110110").in_r(3, 3));
        assert!(seq("0011").in_r(3, 3));
        assert!(seq("0101").in_r(1, 5));
    }

    #[test]
    fn in_r_matches_definition_exhaustively() {
        for n in 0..=9 {
            for x in BitSeq::all(n).unwrap() {
                for ell in 1..=4 {
                    for t in 0..=6 {
                        assert_eq!(x.in_r(ell, t), naive_in_r(&x, ell, t), "{x} ell={ell} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn count_r_examples() {
        assert_eq!(count_r(3, 3, 2).unwrap(), 0);
        for n in 0..=8 {
            assert_eq!(count_r(n, 2, n).unwrap(), 1 << n);
        }
        assert!(count_r(10, 2, 7).unwrap() >= 1 << 9);
        assert!(matches!(count_r(40, 2, 3), Err(Error::EnumerationCap { .. })));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(seq("00000").inversions(), 0);
        assert_eq!(seq("10100").inversions(), 5);
        assert_eq!(seq("1000").inversions() - seq("0001").inversions(), 3);
    }

    #[test]
    fn inversion_identity_with_reverse() {
        for n in 0..=12 {
            for x in BitSeq::all(n).unwrap() {
                let w = x.weight() as u64;
                assert_eq!(x.inversions() + x.reverse().inversions(), w * (n as u64 - w));
            }
        }
    }

    #[test]
    fn inversion_difference_across_shifted_pair() {
        // |Inv(u a ā v ā w) − Inv(u ā v ā a w)| = N_v(ā) + 2
        for total in 0..=7 {
            for lu in 0..=total {
                for lv in 0..=total - lu {
                    let lw = total - lu - lv;
                    for u in BitSeq::all(lu).unwrap() {
                        for v in BitSeq::all(lv).unwrap() {
                            for w in BitSeq::all(lw).unwrap() {
                                for a in 0..2u8 {
                                    let (sa, sna) = (BitSeq::symbol(a), BitSeq::symbol(1 - a));
                                    let left = [u, sa, sna, v, sna, w];
                                    let right = [u, sna, v, sna, sa, w];
                                    let cat = |p: &[BitSeq]| {
                                        p.iter().fold(BitSeq::EMPTY, |acc, s| acc.concat(s).unwrap())
                                    };
                                    let d = cat(&left).inversions().abs_diff(cat(&right).inversions());
                                    assert_eq!(d, v.count(1 - a) as u64 + 2);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weights_and_distances() {
        assert_eq!(seq("0000").weight(), 0);
        assert_eq!(seq("11101010").hamming_distance(&seq("11010110")).unwrap(), 4);
        assert!(matches!(
            seq("01").hamming_distance(&seq("011")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn levenshtein_examples() {
        let d = |a: &str, b: &str| seq(a).levenshtein_insertion_distance(&seq(b)).unwrap();
        assert_eq!(d("10100", "01001"), 1);
        assert_eq!(d("10100", "10100"), 0);
        // 0011 vs 1110: LCS is "11", so two insertions each are needed.
        assert_eq!(d("0011", "1110"), 2);
        assert!(seq("0").levenshtein_insertion_distance(&seq("01")).is_err());
    }

    #[test]
    fn indicator_examples() {
        let x = seq("10011010");
        assert_eq!(x.indicator(1, 0).unwrap(), seq("1000101"));
        assert_eq!(x.indicator(0, 1).unwrap(), seq("0010010"));
        assert_eq!(seq("11111").indicator(1, 0).unwrap(), seq("0000"));
        assert!(matches!(seq("1").indicator(1, 0), Err(Error::TooShort { .. })));
    }

    #[test]
    fn insert_remove_slice() {
        let x = seq("1001");
        assert_eq!(x.insert(0, 0), seq("01001"));
        assert_eq!(x.insert(4, 1), seq("10011"));
        assert_eq!(x.insert(2, 1), seq("10101"));
        assert_eq!(x.remove(0), seq("001"));
        assert_eq!(x.remove(3), seq("100"));
        assert_eq!(x.slice(1, 3), seq("00"));
        assert_eq!(x.slice(2, 2), BitSeq::EMPTY);
    }

    #[test]
    fn parse_and_limits() {
        assert_eq!("".parse::<BitSeq>().unwrap(), BitSeq::EMPTY);
        assert!(matches!("012".parse::<BitSeq>(), Err(Error::InvalidSymbol('2'))));
        let s64 = "1".repeat(64);
        assert_eq!(s64.parse::<BitSeq>().unwrap().len(), 64);
        assert!(matches!("0".repeat(65).parse::<BitSeq>(), Err(Error::TooLong { .. })));
        assert_eq!(seq("0110").to_string(), "0110");
    }

    #[test]
    fn lexicographic_order_for_equal_lengths() {
        let mut v = [seq("110"), seq("010"), seq("101"), seq("100")];
        v.sort();
        let text: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(text, ["010", "100", "101", "110"]);
    }

    #[test]
    fn subsequence_test_matches_lcs() {
        assert!(seq("010").is_subsequence_of(&seq("00110")));
        assert!(!seq("111").is_subsequence_of(&seq("01010")));
        assert!(BitSeq::EMPTY.is_subsequence_of(&seq("1")));
        for n in 0..=5 {
            for m in n..=7 {
                for x in BitSeq::all(n).unwrap() {
                    for y in BitSeq::all(m).unwrap() {
                        assert_eq!(x.is_subsequence_of(&y), x.lcs_len(&y) == n, "{x} {y}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn complement_is_involution(x in arb_seq(64)) {
            prop_assert_eq!(x.complement().complement(), x);
        }

        #[test]
        fn indicators_have_no_adjacent_ones(x in arb_seq(64)) {
            prop_assume!(x.len() >= 2);
            for (a, b) in [(1, 0), (0, 1)] {
                let ind = x.indicator(a, b).unwrap();
                prop_assert_eq!(ind.packed() & (ind.packed() >> 1), 0);
            }
        }

        #[test]
        fn in_r_is_monotone(x in arb_seq(24), ell in 1usize..5, t in 0usize..8, dl in 0usize..3, dt in 0usize..4) {
            if x.in_r(ell, t) {
                prop_assert!(x.in_r(ell.saturating_sub(dl).max(1), t + dt));
            }
        }

        #[test]
        fn levenshtein_zero_iff_equal_and_symmetric(
            a in proptest::collection::vec(0u8..2, 0..16),
            b in proptest::collection::vec(0u8..2, 0..16),
        ) {
            let n = a.len().min(b.len());
            let x = BitSeq::from_symbols(&a[..n]).unwrap();
            let y = BitSeq::from_symbols(&b[..n]).unwrap();
            let dxy = x.levenshtein_insertion_distance(&y).unwrap();
            prop_assert_eq!(dxy, y.levenshtein_insertion_distance(&x).unwrap());
            prop_assert_eq!(dxy == 0, x == y);
        }

        #[test]
        fn text_round_trip(x in arb_seq(64)) {
            prop_assert_eq!(x.to_string().parse::<BitSeq>().unwrap(), x);
        }
    }
}
