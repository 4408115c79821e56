use std::fmt;

use crate::error::{Error, Result};
use crate::seq::BitSeq;

/// A deduplicated set of equal-length sequences, kept sorted so that
/// iteration (and serialization) is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeqSet {
    members: Vec<BitSeq>,
    length: usize,
}

impl SeqSet {
    pub fn empty(length: usize) -> Self {
        SeqSet { members: Vec::new(), length }
    }

    pub fn singleton(x: BitSeq) -> Self {
        SeqSet { members: vec![x], length: x.len() }
    }

    /// Collects, sorts and deduplicates; every member must have `length` symbols.
    pub fn from_iter_checked(length: usize, items: impl IntoIterator<Item = BitSeq>) -> Result<Self> {
        let mut members: Vec<BitSeq> = items.into_iter().collect();
        if let Some(bad) = members.iter().find(|s| s.len() != length) {
            return Err(Error::LengthMismatch { left: length, right: bad.len() });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SeqSet { members, length })
    }

    pub(crate) fn from_sorted_unchecked(length: usize, members: Vec<BitSeq>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|s| s.len() == length));
        SeqSet { members, length }
    }

    pub(crate) fn from_unsorted_unchecked(length: usize, mut members: Vec<BitSeq>) -> Self {
        members.sort_unstable();
        members.dedup();
        SeqSet::from_sorted_unchecked(length, members)
    }

    /// Length shared by every member.
    pub fn common_length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &BitSeq) -> bool {
        self.members.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BitSeq> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[BitSeq] {
        &self.members
    }

    pub fn first(&self) -> Option<&BitSeq> {
        self.members.first()
    }

    pub fn intersection(&self, other: &SeqSet) -> SeqSet {
        let mut out = Vec::new();
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        SeqSet { members: out, length: self.length }
    }

    pub fn union(&self, other: &SeqSet) -> SeqSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        SeqSet::from_unsorted_unchecked(self.length, members)
    }

    pub fn difference(&self, other: &SeqSet) -> SeqSet {
        let members = self.members.iter().filter(|x| !other.contains(x)).copied().collect();
        SeqSet { members, length: self.length }
    }

    pub fn is_disjoint(&self, other: &SeqSet) -> bool {
        intersection_count(&self.members, &other.members) == 0
    }

    pub fn is_subset(&self, other: &SeqSet) -> bool {
        self.members.iter().all(|x| other.contains(x))
    }

    pub fn retain(&mut self, keep: impl FnMut(&BitSeq) -> bool) {
        self.members.retain(keep);
    }

    /// One sequence per line, sorted, each line newline-terminated.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.members.len() * (self.length + 1));
        for s in &self.members {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the line format of [`SeqSet::to_lines`]; blank lines are skipped.
    pub fn parse_lines(length: usize, text: &str) -> Result<SeqSet> {
        let items = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse::<BitSeq>)
            .collect::<Result<Vec<_>>>()?;
        SeqSet::from_iter_checked(length, items)
    }
}

/// Size of the intersection of two sorted, duplicate-free slices.
pub fn intersection_count(a: &[BitSeq], b: &[BitSeq]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

impl<'a> IntoIterator for &'a SeqSet {
    type Item = &'a BitSeq;
    type IntoIter = std::slice::Iter<'a, BitSeq>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Debug for SeqSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}
