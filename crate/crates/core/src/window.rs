//! Exact size of `I₂(aāvb) ∩ I₂(āvbb̄)` read off the shape of `v`.
//!
//! The window pair always shares `n' + 3`, `n' + 4` or `n' + 5` double
//! supersequences (`n' = |v| + 3`). The two larger values occur exactly for
//! a handful of run-length families, listed in [`CASE_I_FAMILIES`] and
//! [`TABLE_ROWS`]; everything else is `n' + 3`.

use std::fmt;

use crate::error::{Error, Result};
use crate::seq::BitSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindowOffset {
    Plus3,
    Plus4,
    Plus5,
}

impl WindowOffset {
    pub fn value(self) -> usize {
        match self {
            WindowOffset::Plus3 => 3,
            WindowOffset::Plus4 => 4,
            WindowOffset::Plus5 => 5,
        }
    }
}

impl fmt::Display for WindowOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plus{}", self.value())
    }
}

/// One factor of a template: `block` repeated a variable number of times
/// (at least `min`), or exactly once when `var` is `None`. Blocks are spelled
/// with `A` for `a` and `N` for `ā`.
#[derive(Debug, Clone, Copy)]
struct Factor {
    block: &'static str,
    var: Option<usize>,
    min: usize,
}

const fn rep(block: &'static str, var: usize, min: usize) -> Factor {
    Factor { block, var: Some(var), min }
}

const fn once(block: &'static str) -> Factor {
    Factor { block, var: None, min: 1 }
}

/// Which relation between `a` and `b` a template applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Complementary,
}

impl Relation {
    fn of(a: u8, b: u8) -> Self {
        if a == b {
            Relation::Equal
        } else {
            Relation::Complementary
        }
    }
}

pub struct Template {
    pub relation: Relation,
    pub label: &'static str,
    factors: &'static [Factor],
}

/// Families giving `n' + 5`, two per relation.
pub const CASE_I_FAMILIES: [Template; 4] = [
    Template {
        relation: Relation::Equal,
        label: "(aā)^i a (aā)^j",
        factors: &[rep("AN", 0, 0), once("A"), rep("AN", 1, 0)],
    },
    Template {
        relation: Relation::Equal,
        label: "(aā)^i (āa)^j ā",
        factors: &[rep("AN", 0, 0), rep("NA", 1, 0), once("N")],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i (āa)^j",
        factors: &[rep("AN", 0, 0), rep("NA", 1, 0)],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i aa (āa)^j",
        factors: &[rep("AN", 0, 0), once("AA"), rep("NA", 1, 0)],
    },
];

/// Families giving `n' + 4`; row `r` is `TABLE_ROWS[r - 1]`.
pub const TABLE_ROWS: [Template; 8] = [
    Template {
        relation: Relation::Equal,
        label: "(aā)^i ā^j (aā)^k",
        factors: &[rep("AN", 0, 0), rep("N", 1, 2), rep("AN", 2, 0)],
    },
    Template {
        relation: Relation::Equal,
        label: "(aā)^i a^j (aā)^k",
        factors: &[rep("AN", 0, 0), rep("A", 1, 2), rep("AN", 2, 0)],
    },
    Template {
        relation: Relation::Equal,
        label: "(aā)^i (āaā)^j (āa)^k ā",
        factors: &[rep("AN", 0, 0), rep("NAN", 1, 1), rep("NA", 2, 0), once("N")],
    },
    Template {
        relation: Relation::Equal,
        label: "(aā)^i a (aāa)^j (aā)^k",
        factors: &[rep("AN", 0, 0), once("A"), rep("ANA", 1, 1), rep("AN", 2, 0)],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i ā^j (āa)^k",
        factors: &[rep("AN", 0, 0), rep("N", 1, 1), rep("NA", 2, 0)],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i a^j (āa)^k",
        factors: &[rep("AN", 0, 0), rep("A", 1, 3), rep("NA", 2, 0)],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i (āaā)^j (āa)^k",
        factors: &[rep("AN", 0, 0), rep("NAN", 1, 1), rep("NA", 2, 0)],
    },
    Template {
        relation: Relation::Complementary,
        label: "(aā)^i a (aāa)^j (aā)^k a",
        factors: &[rep("AN", 0, 0), once("A"), rep("ANA", 1, 1), rep("AN", 2, 0), once("A")],
    },
];

impl Template {
    /// Smallest parameter vector (lexicographically, `i` first) spelling `v`.
    pub fn match_params(&self, a: u8, v: &BitSeq) -> Option<[usize; 3]> {
        let symbols: Vec<u8> = v.symbols().collect();
        let mut params = [0usize; 3];
        search(self.factors, a, &symbols, 0, &mut params).then_some(params)
    }

    /// Spells the template for the given `a` and parameters.
    pub fn instantiate(&self, a: u8, params: [usize; 3]) -> Result<BitSeq> {
        let mut out = BitSeq::EMPTY;
        for f in self.factors {
            let times = f.var.map_or(1, |k| params[k]);
            for _ in 0..times {
                for c in f.block.bytes() {
                    out = out.concat(&BitSeq::symbol(if c == b'A' { a } else { 1 - a }))?;
                }
            }
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.factors.iter().filter_map(|f| f.var).max().map_or(0, |k| k + 1)
    }
}

fn block_matches(block: &str, a: u8, symbols: &[u8], pos: usize) -> bool {
    block.len() <= symbols.len() - pos
        && block
            .bytes()
            .zip(&symbols[pos..])
            .all(|(c, &s)| s == if c == b'A' { a } else { 1 - a })
}

fn search(factors: &[Factor], a: u8, symbols: &[u8], pos: usize, params: &mut [usize; 3]) -> bool {
    let Some((first, rest)) = factors.split_first() else {
        return pos == symbols.len();
    };
    let Some(var) = first.var else {
        return block_matches(first.block, a, symbols, pos)
            && search(rest, a, symbols, pos + first.block.len(), params);
    };
    // Consume the mandatory repetitions, then try each extra count in turn.
    let step = first.block.len();
    let mut at = pos;
    for _ in 0..first.min {
        if !block_matches(first.block, a, symbols, at) {
            return false;
        }
        at += step;
    }
    let mut count = first.min;
    loop {
        params[var] = count;
        if search(rest, a, symbols, at, params) {
            return true;
        }
        if !block_matches(first.block, a, symbols, at) {
            return false;
        }
        at += step;
        count += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchedForm {
    /// `family` indexes [`CASE_I_FAMILIES`].
    CaseI { family: usize, i: usize, j: usize },
    /// `row` is 1-based, as in [`TABLE_ROWS`].
    TableRow { row: usize, i: usize, j: usize, k: usize },
}

impl fmt::Display for MatchedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MatchedForm::CaseI { family, i, j } => {
                write!(f, "case-I {} i={i} j={j}", CASE_I_FAMILIES[family].label)
            }
            MatchedForm::TableRow { row, i, j, k } => {
                write!(f, "row-{row} {} i={i} j={j} k={k}", TABLE_ROWS[row - 1].label)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowClass {
    pub offset: WindowOffset,
    /// Present exactly when the offset is 4 or 5.
    pub matched_form: Option<MatchedForm>,
}

/// True for the `(a, b, v)` whose window pair is Type-A confusable:
/// `a = b` with `v = (aā)^m`, or `a ≠ b` with `v = (aā)^m a`.
pub fn excluded_by_rsv(a: u8, b: u8, v: &BitSeq) -> bool {
    let n = v.len();
    let alternating_from_a = n == 0 || (v.first() == Some(a) && v.is_alternating());
    if a == b {
        alternating_from_a && n.is_multiple_of(2)
    } else {
        alternating_from_a && n % 2 == 1
    }
}

fn check_symbol(s: u8) -> Result<()> {
    if s > 1 {
        return Err(Error::Parameter(format!("symbol must be 0 or 1, got {s}")));
    }
    Ok(())
}

/// Classifies the window pair `(aāvb, āvbb̄)`.
pub fn classify_window(a: u8, b: u8, v: &BitSeq) -> Result<WindowClass> {
    check_symbol(a)?;
    check_symbol(b)?;
    if v.len() + 4 > crate::seq::MAX_LEN {
        return Err(Error::TooLong { len: v.len() + 4, max: crate::seq::MAX_LEN });
    }
    if excluded_by_rsv(a, b, v) {
        return Err(Error::Precondition(format!(
            "window a={a} b={b} v={v} is Type-A confusable"
        )));
    }
    let relation = Relation::of(a, b);
    for (family, t) in CASE_I_FAMILIES.iter().enumerate() {
        if t.relation != relation {
            continue;
        }
        if let Some([i, j, _]) = t.match_params(a, v) {
            return Ok(WindowClass {
                offset: WindowOffset::Plus5,
                matched_form: Some(MatchedForm::CaseI { family, i, j }),
            });
        }
    }
    for (idx, t) in TABLE_ROWS.iter().enumerate() {
        if t.relation != relation {
            continue;
        }
        if let Some([i, j, k]) = t.match_params(a, v) {
            return Ok(WindowClass {
                offset: WindowOffset::Plus4,
                matched_form: Some(MatchedForm::TableRow { row: idx + 1, i, j, k }),
            });
        }
    }
    Ok(WindowClass { offset: WindowOffset::Plus3, matched_form: None })
}

/// The window pair `(aāvb, āvbb̄)` itself.
pub fn window_pair(a: u8, b: u8, v: &BitSeq) -> Result<(BitSeq, BitSeq)> {
    let (sa, na) = (BitSeq::symbol(a), BitSeq::symbol(1 - a));
    let (sb, nb) = (BitSeq::symbol(b), BitSeq::symbol(1 - b));
    Ok((
        sa.concat(&na)?.concat(v)?.concat(&sb)?,
        na.concat(v)?.concat(&sb)?.concat(&nb)?,
    ))
}
