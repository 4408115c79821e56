//! Type-A / Type-B confusability of sequence pairs, and what it predicts
//! about single- and double-insertion ball intersections.
//!
//! * Type-A: `x = u·w·v`, `y = u·w̄·v` with `w` alternating and non-empty
//!   (pairs at Hamming distance 1 are included).
//! * Type-B: `{x, y} = {u·a·ā·v·b·w, u·ā·v·b·b̄·w}`.
//!
//! Type-A pairs share exactly two single-insertion supersequences, Type-B
//! pairs that are not Type-A share exactly one, and all other pairs none.

use std::fmt;

use crate::balls::intersection_size;
use crate::error::{Error, Result};
use crate::seq::{same_length, BitSeq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfusabilityKind {
    Neither,
    TypeAOnly,
    TypeBOnly,
    Both,
}

impl ConfusabilityKind {
    pub fn is_type_a(self) -> bool {
        matches!(self, Self::TypeAOnly | Self::Both)
    }

    pub fn is_type_b(self) -> bool {
        matches!(self, Self::TypeBOnly | Self::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Neither => "Neither",
            Self::TypeAOnly => "TypeAOnly",
            Self::TypeBOnly => "TypeBOnly",
            Self::Both => "Both",
        }
    }
}

impl fmt::Display for ConfusabilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `x = u·w·v`, `y = u·w̄·v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeAWitness {
    pub u: BitSeq,
    pub w: BitSeq,
    pub v: BitSeq,
}

impl TypeAWitness {
    pub fn reassemble(&self) -> Result<(BitSeq, BitSeq)> {
        Ok((
            self.u.concat(&self.w)?.concat(&self.v)?,
            self.u.concat(&self.w.complement())?.concat(&self.v)?,
        ))
    }
}

/// `u·a·ā·v·b·w` and `u·ā·v·b·b̄·w`; `swapped` records that the first form is `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeBWitness {
    pub u: BitSeq,
    pub v: BitSeq,
    pub w: BitSeq,
    pub a: u8,
    pub b: u8,
    pub swapped: bool,
}

impl TypeBWitness {
    /// The two forms in `(u a ā v b w, u ā v b b̄ w)` order.
    pub fn forms(&self) -> Result<(BitSeq, BitSeq)> {
        let (a, na) = (BitSeq::symbol(self.a), BitSeq::symbol(1 - self.a));
        let (b, nb) = (BitSeq::symbol(self.b), BitSeq::symbol(1 - self.b));
        let first = self.u.concat(&a)?.concat(&na)?.concat(&self.v)?.concat(&b)?.concat(&self.w)?;
        let second = self.u.concat(&na)?.concat(&self.v)?.concat(&b)?.concat(&nb)?.concat(&self.w)?;
        Ok((first, second))
    }

    /// The pair `(x, y)` this witness was produced for.
    pub fn reassemble(&self) -> Result<(BitSeq, BitSeq)> {
        let (p, q) = self.forms()?;
        Ok(if self.swapped { (q, p) } else { (p, q) })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfusabilityVerdict {
    pub kind: ConfusabilityKind,
    pub type_a: Option<TypeAWitness>,
    pub type_b: Option<TypeBWitness>,
}

fn common_prefix_len(x: &BitSeq, y: &BitSeq) -> usize {
    let n = x.len();
    let diff = x.packed() ^ y.packed();
    if diff == 0 {
        n
    } else {
        n - (64 - diff.leading_zeros() as usize)
    }
}

fn common_suffix_len(x: &BitSeq, y: &BitSeq) -> usize {
    let diff = x.packed() ^ y.packed();
    if diff == 0 {
        x.len()
    } else {
        diff.trailing_zeros() as usize
    }
}

fn type_a_witness(x: &BitSeq, y: &BitSeq) -> Option<TypeAWitness> {
    // w and w̄ differ everywhere, so u and v are the maximal common affixes.
    let n = x.len();
    let i = common_prefix_len(x, y);
    let j = n - common_suffix_len(x, y);
    let w = x.slice(i, j);
    (w.complement() == y.slice(i, j) && w.is_alternating())
        .then(|| TypeAWitness { u: x.slice(0, i), w, v: x.slice(j, n) })
}

/// Tries `x = u a ā v b w`, `y = u ā v b b̄ w`. The outer positions of the
/// core are exactly the first and last differing indices.
fn type_b_oriented(x: &BitSeq, y: &BitSeq) -> Option<(BitSeq, BitSeq, BitSeq, u8, u8)> {
    let n = x.len();
    let i = common_prefix_len(x, y);
    let j = n - common_suffix_len(x, y);
    if j < i + 3 {
        return None;
    }
    let a = x.bit(i);
    let b = 1 - y.bit(j - 1);
    let ok = x.bit(i + 1) == 1 - a
        && y.bit(i) == 1 - a
        && x.bit(j - 1) == b
        && y.bit(j - 2) == b
        && x.slice(i + 2, j - 1) == y.slice(i + 1, j - 2);
    ok.then(|| (x.slice(0, i), x.slice(i + 2, j - 1), x.slice(j, n), a, b))
}

fn type_b_witness(x: &BitSeq, y: &BitSeq) -> Option<TypeBWitness> {
    if let Some((u, v, w, a, b)) = type_b_oriented(x, y) {
        return Some(TypeBWitness { u, v, w, a, b, swapped: false });
    }
    type_b_oriented(y, x).map(|(u, v, w, a, b)| TypeBWitness { u, v, w, a, b, swapped: true })
}

/// Classifies a pair of distinct, equal-length sequences.
pub fn classify_pair(x: &BitSeq, y: &BitSeq) -> Result<ConfusabilityVerdict> {
    same_length(x, y)?;
    if x == y {
        return Err(Error::Precondition("confusability needs two distinct sequences".into()));
    }
    let type_a = type_a_witness(x, y);
    let type_b = type_b_witness(x, y);
    let kind = match (type_a.is_some(), type_b.is_some()) {
        (false, false) => ConfusabilityKind::Neither,
        (true, false) => ConfusabilityKind::TypeAOnly,
        (false, true) => ConfusabilityKind::TypeBOnly,
        (true, true) => ConfusabilityKind::Both,
    };
    Ok(ConfusabilityVerdict { kind, type_a, type_b })
}

/// Predicted `|I₁(x) ∩ I₁(y)|`: 2 for Type-A, 1 for Type-B only, else 0.
pub fn predict_i1_size(x: &BitSeq, y: &BitSeq) -> Result<usize> {
    Ok(match classify_pair(x, y)?.kind {
        ConfusabilityKind::TypeAOnly | ConfusabilityKind::Both => 2,
        ConfusabilityKind::TypeBOnly => 1,
        ConfusabilityKind::Neither => 0,
    })
}

/// Where `|I₂(x) ∩ I₂(y)|` must fall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum I2Range {
    Exactly(usize),
    Within(usize, usize),
    AtMost(usize),
}

impl I2Range {
    pub fn contains(&self, value: usize) -> bool {
        match *self {
            I2Range::Exactly(v) => value == v,
            I2Range::Within(lo, hi) => (lo..=hi).contains(&value),
            I2Range::AtMost(hi) => value <= hi,
        }
    }
}

impl fmt::Display for I2Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            I2Range::Exactly(v) => write!(f, "exactly:{v}"),
            I2Range::Within(lo, hi) => write!(f, "within:{lo}..{hi}"),
            I2Range::AtMost(hi) => write!(f, "at-most:{hi}"),
        }
    }
}

/// Range of `|I₂(x) ∩ I₂(y)|` implied by the confusability class (`n ≥ 4`).
pub fn predict_i2_range(x: &BitSeq, y: &BitSeq) -> Result<I2Range> {
    let n = x.len();
    if n < 4 {
        return Err(Error::TooShort { len: n, min: 4 });
    }
    Ok(match predict_i1_size(x, y)? {
        2 => I2Range::Exactly(2 * n + 4),
        1 => I2Range::Within(n + 3, n + 5),
        _ => I2Range::AtMost(6),
    })
}

/// The pair stripped of its maximal common prefix and suffix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSplit {
    pub u: BitSeq,
    pub core_x: BitSeq,
    pub core_y: BitSeq,
    pub w: BitSeq,
    /// Leftmost differing index, 1-based.
    pub i: usize,
    /// Rightmost differing index, 1-based.
    pub j: usize,
}

impl WindowSplit {
    pub fn core_len(&self) -> usize {
        self.core_x.len()
    }
}

pub fn locate_window(x: &BitSeq, y: &BitSeq) -> Result<WindowSplit> {
    let d = x.hamming_distance(y)?;
    if d < 2 {
        return Err(Error::Precondition(format!("window needs Hamming distance ≥ 2, got {d}")));
    }
    let n = x.len();
    let i = common_prefix_len(x, y);
    let j = n - common_suffix_len(x, y);
    Ok(WindowSplit {
        u: x.slice(0, i),
        core_x: x.slice(i, j),
        core_y: y.slice(i, j),
        w: x.slice(j, n),
        i: i + 1,
        j,
    })
}

/// For `x, y ∈ R(n, 3, P)` whose two-insertion balls share 5 or 6 words,
/// checks that the differing window is at most `7P + 1` long.
pub fn localization_bound_holds(x: &BitSeq, y: &BitSeq, p: usize) -> Result<bool> {
    same_length(x, y)?;
    if !x.in_r(3, p) || !y.in_r(3, p) {
        return Err(Error::Precondition(format!("pair is not in R(n,3,{p})")));
    }
    let shared = intersection_size(x, y, 2)?;
    if !(5..=6).contains(&shared) {
        return Err(Error::Precondition(format!("|I2(x) ∩ I2(y)| = {shared}, expected 5 or 6")));
    }
    Ok(locate_window(x, y)?.core_len() <= 7 * p + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::intersect_balls;
    use crate::seq::seq;

    /// Type-B by the definition: every (u, v, w) length split and both orders.
    fn brute_type_b(x: &BitSeq, y: &BitSeq) -> bool {
        let n = x.len();
        if n < 3 {
            return false;
        }
        for lu in 0..=n - 3 {
            for lw in 0..=n - 3 - lu {
                let lv = n - 3 - lu - lw;
                for u in BitSeq::all(lu).unwrap() {
                    for v in BitSeq::all(lv).unwrap() {
                        for w in BitSeq::all(lw).unwrap() {
                            for a in 0..2 {
                                for b in 0..2 {
                                    let wit = TypeBWitness { u, v, w, a, b, swapped: false };
                                    let (p, q) = wit.forms().unwrap();
                                    if (p, q) == (*x, *y) || (q, p) == (*x, *y) {
                                        return true;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// Type-A by the definition: every (u, w, v) split with w alternating.
    fn brute_type_a(x: &BitSeq, y: &BitSeq) -> bool {
        let n = x.len();
        (0..n).any(|i| {
            (i + 1..=n).any(|j| {
                let w = x.slice(i, j);
                w.is_alternating()
                    && x.slice(0, i) == y.slice(0, i)
                    && x.slice(j, n) == y.slice(j, n)
                    && w.complement() == y.slice(i, j)
            })
        })
    }

    #[test]
    fn worked_example_pairs() {
        let k = |a: &str, b: &str| classify_pair(&seq(a), &seq(b)).unwrap().kind;
        assert_eq!(k("11101010", "11010110"), ConfusabilityKind::Both);
        assert_eq!(k("111010", "110110"), ConfusabilityKind::TypeAOnly);
        assert_eq!(k("1110100110", "1101001010"), ConfusabilityKind::TypeBOnly);
        assert_eq!(k("0011", "1110"), ConfusabilityKind::Neither);
        assert_eq!(k("110", "100"), ConfusabilityKind::TypeAOnly);
    }

    #[test]
    fn witnesses_match_the_worked_example() {
        let v = classify_pair(&seq("1110100110"), &seq("1101001010")).unwrap();
        let b = v.type_b.unwrap();
        assert_eq!((b.u, b.v, b.w, b.a, b.b), (seq("11"), seq("100"), seq("10"), 1, 1));
        let v = classify_pair(&seq("11101010"), &seq("11010110")).unwrap();
        let a = v.type_a.unwrap();
        assert_eq!((a.u, a.w, a.v), (seq("11"), seq("1010"), seq("10")));
    }

    #[test]
    fn classify_errors() {
        assert!(classify_pair(&seq("01"), &seq("01")).is_err());
        assert!(classify_pair(&seq("01"), &seq("011")).is_err());
    }

    #[test]
    fn classification_matches_definitions_exhaustively() {
        for n in 1..=7 {
            let all: Vec<_> = BitSeq::all(n).unwrap().collect();
            for x in &all {
                for y in &all {
                    if x == y {
                        continue;
                    }
                    let v = classify_pair(x, y).unwrap();
                    assert_eq!(v.kind.is_type_a(), brute_type_a(x, y), "{x} {y}");
                    assert_eq!(v.kind.is_type_b(), brute_type_b(x, y), "{x} {y}");
                    if let Some(w) = v.type_a {
                        assert_eq!(w.reassemble().unwrap(), (*x, *y));
                        assert!(w.w.is_alternating() && !w.w.is_empty());
                    }
                    if let Some(w) = v.type_b {
                        assert_eq!(w.reassemble().unwrap(), (*x, *y));
                    }
                }
            }
        }
    }

    #[test]
    fn type_a_and_b_overlap_exactly_on_long_alternating_blocks() {
        // w = a ā v b with w̄ = ā v b b̄ whenever w alternates and |w| ≥ 3.
        let overlap = |w: &BitSeq| w.len() >= 3;
        for n in 2..=9 {
            let all: Vec<_> = BitSeq::all(n).unwrap().collect();
            for x in &all {
                for y in &all {
                    if x == y {
                        continue;
                    }
                    let v = classify_pair(x, y).unwrap();
                    if let Some(a) = v.type_a {
                        assert_eq!(v.type_b.is_some(), overlap(&a.w), "{x} {y} w={}", a.w);
                    }
                }
            }
        }
    }

    #[test]
    fn i1_prediction_examples() {
        assert_eq!(predict_i1_size(&seq("10"), &seq("01")).unwrap(), 2);
        assert_eq!(predict_i1_size(&seq("1110100110"), &seq("1101001010")).unwrap(), 1);
        assert_eq!(predict_i1_size(&seq("0011"), &seq("1110")).unwrap(), 0);
        let s = intersect_balls(&seq("1110100110"), &seq("1101001010"), 1).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn i2_prediction_examples() {
        let (x, y) = (seq("111010"), seq("110110"));
        assert_eq!(predict_i2_range(&x, &y).unwrap(), I2Range::Exactly(16));
        assert_eq!(intersection_size(&x, &y, 2).unwrap(), 16);

        let (x, y) = (seq("1110100110"), seq("1101001010"));
        let r = predict_i2_range(&x, &y).unwrap();
        assert_eq!(r, I2Range::Within(13, 15));
        assert!(r.contains(intersection_size(&x, &y, 2).unwrap()));

        let (x, y) = (seq("0011"), seq("1110"));
        assert_eq!(predict_i2_range(&x, &y).unwrap(), I2Range::AtMost(6));
        assert!(intersection_size(&x, &y, 2).unwrap() <= 6);

        assert!(matches!(predict_i2_range(&seq("011"), &seq("110")), Err(Error::TooShort { .. })));
    }

    #[test]
    fn window_location() {
        let s = locate_window(&seq("10001"), &seq("00010")).unwrap();
        assert_eq!((s.u, s.w, s.i, s.j), (BitSeq::EMPTY, BitSeq::EMPTY, 1, 5));
        let s = locate_window(&seq("1100011"), &seq("1000101")).unwrap();
        assert_eq!((s.u, s.w, s.i, s.j), (seq("1"), seq("1"), 2, 6));
        assert_eq!((s.core_x, s.core_y), (seq("10001"), seq("00010")));
        assert!(locate_window(&seq("1000"), &seq("1001")).is_err());
    }

    #[test]
    fn localization_preconditions() {
        // Hamming-distance-1 pair: Type-A, |I2 ∩ I2| = 2n + 4.
        let r = localization_bound_holds(&seq("0110"), &seq("0100"), 3);
        assert!(matches!(r, Err(Error::Precondition(_))));
        // 0000 is not in R(4,3,3).
        let r = localization_bound_holds(&seq("0000"), &seq("0011"), 3);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
