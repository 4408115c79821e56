//! Insertion and deletion balls, their intersections, and read coverage.

use rayon::prelude::*;

use crate::confuse::{classify_pair, ConfusabilityKind};
use crate::error::{Error, Result};
use crate::formula;
use crate::seq::{same_length, BitSeq, MAX_LEN};
use crate::seqset::{intersection_count, SeqSet};

fn check_cap(n: usize, t: usize) -> Result<()> {
    if n + t > MAX_LEN {
        return Err(Error::TooLong { len: n + t, max: MAX_LEN });
    }
    Ok(())
}

/// All supersequences of `x` of length `|x| + t`.
///
/// Each supersequence is produced exactly once, from its leftmost embedding
/// of `x`: the symbols inserted before `x_i` all equal `x̄_i`, and the tail
/// after `x_n` is unconstrained.
pub fn insertion_ball(x: &BitSeq, t: usize) -> Result<SeqSet> {
    check_cap(x.len(), t)?;
    let mut out = Vec::with_capacity(formula::ball_size(x.len() as u64, t as u64)? as usize);
    extend_supersequences(x, 0, t, 0, &mut out);
    let len = x.len() + t;
    let members = out.into_iter().map(|b| BitSeq::from_packed_unchecked(b, len)).collect();
    Ok(SeqSet::from_unsorted_unchecked(len, members))
}

fn extend_supersequences(x: &BitSeq, i: usize, budget: usize, acc: u64, out: &mut Vec<u64>) {
    if i == x.len() {
        let base = if budget >= 64 { 0 } else { acc << budget };
        for tail in 0..1u64 << budget {
            out.push(base | tail);
        }
        return;
    }
    let xi = x.bit(i) as u64;
    let mut prefix = acc;
    for used in 0..=budget {
        extend_supersequences(x, i + 1, budget - used, (prefix << 1) | xi, out);
        prefix = (prefix << 1) | (1 - xi);
    }
}

/// All subsequences of `y` of length `|y| − t`.
pub fn deletion_ball(y: &BitSeq, t: usize) -> Result<SeqSet> {
    if t > y.len() {
        return Err(Error::Parameter(format!("cannot delete {t} symbols from a length-{} sequence", y.len())));
    }
    let mut level = vec![*y];
    for _ in 0..t {
        let mut next = Vec::with_capacity(level.len() * 4);
        for s in &level {
            // Deleting any symbol of a run gives the same result; use run starts.
            for p in 0..s.len() {
                if p == 0 || s.bit(p) != s.bit(p - 1) {
                    next.push(s.remove(p));
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(SeqSet::from_sorted_unchecked(y.len() - t, level))
}

/// `I_t(x) ∩ I_t(y)`.
pub fn intersect_balls(x: &BitSeq, y: &BitSeq, t: usize) -> Result<SeqSet> {
    same_length(x, y)?;
    if x == y {
        return insertion_ball(x, t);
    }
    Ok(insertion_ball(x, t)?.intersection(&insertion_ball(y, t)?))
}

/// `|I_t(x) ∩ I_t(y)|`.
pub fn intersection_size(x: &BitSeq, y: &BitSeq, t: usize) -> Result<usize> {
    same_length(x, y)?;
    if x.weight().abs_diff(y.weight()) > t {
        // Every common supersequence has weight in [max, min + t].
        check_cap(x.len(), t)?;
        return Ok(0);
    }
    let bx = insertion_ball(x, t)?;
    let by = insertion_ball(y, t)?;
    Ok(intersection_count(bx.as_slice(), by.as_slice()))
}

/// The two disjoint parts of `I₂(x) ∩ I₂(y)` for
/// `x = u a ā v b w`, `y = u ā v b b̄ w` (not Type-A confusable):
/// the single-insertion ball around `z = u a ā v b b̄ w`, and the window
/// remainder `u (I₂(aāvb) ∩ I₂(āvbb̄) ∖ I₁(aāvbb̄)) w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIntersection {
    pub x: BitSeq,
    pub y: BitSeq,
    pub z: BitSeq,
    pub ball: SeqSet,
    pub residual: SeqSet,
}

impl SplitIntersection {
    pub fn is_disjoint(&self) -> bool {
        self.ball.is_disjoint(&self.residual)
    }

    pub fn union(&self) -> SeqSet {
        self.ball.union(&self.residual)
    }
}

/// Builds the pair from its fragments and returns the decomposed
/// two-insertion intersection. Rejects Type-A confusable pairs.
pub fn intersect2_decomposed(
    u: &BitSeq,
    a: u8,
    v: &BitSeq,
    b: u8,
    w: &BitSeq,
) -> Result<SplitIntersection> {
    let (sa, sna) = (BitSeq::symbol(a), BitSeq::symbol(1 - a));
    let (sb, snb) = (BitSeq::symbol(b), BitSeq::symbol(1 - b));
    let core_x = sa.concat(&sna)?.concat(v)?.concat(&sb)?;
    let core_y = sna.concat(v)?.concat(&sb)?.concat(&snb)?;
    let core_z = core_x.concat(&snb)?;
    let x = u.concat(&core_x)?.concat(w)?;
    let y = u.concat(&core_y)?.concat(w)?;
    let z = u.concat(&core_z)?.concat(w)?;

    let verdict = classify_pair(&x, &y)?;
    if matches!(verdict.kind, ConfusabilityKind::TypeAOnly | ConfusabilityKind::Both) {
        return Err(Error::Precondition(format!("{x} and {y} are Type-A confusable")));
    }

    let ball = insertion_ball(&z, 1)?;
    let window = intersect_balls(&core_x, &core_y, 2)?.difference(&insertion_ball(&core_z, 1)?);
    let members = window
        .iter()
        .map(|s| u.concat(s).and_then(|s| s.concat(w)))
        .collect::<Result<Vec<_>>>()?;
    let residual = SeqSet::from_unsorted_unchecked(x.len() + 2, members);
    Ok(SplitIntersection { x, y, z, ball, residual })
}

/// Exact read coverage together with one maximizing pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub value: usize,
    pub pair: (BitSeq, BitSeq),
}

fn code_balls(code: &SeqSet, t: usize) -> Result<Vec<SeqSet>> {
    check_cap(code.common_length(), t)?;
    code.as_slice().par_iter().map(|x| insertion_ball(x, t)).collect()
}

/// `ν_t(C)`: the largest `|I_t(x) ∩ I_t(y)|` over distinct `x, y ∈ C`.
/// Every pair is examined; ties resolve to the lexicographically first pair.
pub fn read_coverage(code: &SeqSet, t: usize) -> Result<Coverage> {
    if code.len() < 2 {
        return Err(Error::CodeTooSmall { size: code.len(), min: 2 });
    }
    let words = code.as_slice();
    let balls = code_balls(code, t)?;
    let best = (0..words.len() - 1)
        .into_par_iter()
        .map(|i| {
            let mut row = (0usize, usize::MAX - i, usize::MAX - (i + 1));
            for j in i + 1..words.len() {
                if words[i].weight().abs_diff(words[j].weight()) > t {
                    continue;
                }
                let c = intersection_count(balls[i].as_slice(), balls[j].as_slice());
                if c > row.0 {
                    row = (c, usize::MAX - i, usize::MAX - j);
                }
            }
            row
        })
        .max()
        .expect("at least one pair");
    let (i, j) = (usize::MAX - best.1, usize::MAX - best.2);
    Ok(Coverage { value: best.0, pair: (words[i], words[j]) })
}

/// Whether `ν_t(C) < limit`. May stop early and may skip pairs that provably
/// cannot reach `limit`; the answer is exact.
pub fn coverage_below(code: &SeqSet, t: usize, limit: usize) -> Result<bool> {
    if code.len() < 2 {
        return Err(Error::CodeTooSmall { size: code.len(), min: 2 });
    }
    let words = code.as_slice();
    let n = code.common_length();
    // Pairs at Levenshtein distance ≥ 2 meet in at most N⁺(n,2,2) = 6 words.
    let skip_far = t == 2 && limit > 6;
    let balls = code_balls(code, t)?;
    let hit = (0..words.len()).into_par_iter().any(|i| {
        (i + 1..words.len()).any(|j| {
            if words[i].weight().abs_diff(words[j].weight()) > t {
                return false;
            }
            if skip_far && words[i].lcs_len(&words[j]) + 1 < n {
                return false;
            }
            intersection_count(balls[i].as_slice(), balls[j].as_slice()) >= limit
        })
    });
    Ok(!hit)
}
