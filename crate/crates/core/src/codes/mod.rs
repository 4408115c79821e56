//! Code constructions as membership predicates over `Σ₂ⁿ`, with coset
//! enumeration, redundancy and reconstruction-code verification.
//!
//! Every family is described by a [`CodeFamily`] (the ambient constraint and
//! which syndromes are taken) and every concrete code by a [`CodeParams`]
//! (the family plus one residue per syndrome). Codes are materialized by
//! filtering all of `Σ₂ⁿ`, so [`ENUMERATION_CAP`] bounds `n` for anything
//! that builds a set; membership tests work up to [`MAX_LEN`].

pub mod file;
pub mod parity;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::balls::read_coverage;
use crate::error::{Error, Result};
use crate::seq::{BitSeq, ENUMERATION_CAP, MAX_LEN};
use crate::seqset::SeqSet;
use parity::{padded_tilde_sums, parity_checks, HWeight};

/// `Σ i·x_i mod (n+1)`, positions counted from 1.
pub fn vt_syndrome(x: &BitSeq) -> u64 {
    let n = x.len() as u64;
    let sum: u64 = x.symbols().enumerate().map(|(i, b)| (i as u64 + 1) * b as u64).sum();
    sum % (n + 1)
}

/// Segment length `7P + 1` of the segmented construction.
pub fn segment_len(p: usize) -> usize {
    7 * p + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeFamily {
    /// All of `Σ₂ⁿ`; no syndromes.
    Full { n: usize },
    /// Single-deletion VT cosets.
    Vt { n: usize },
    /// `R(n,2,2P)` split by inversions mod `1+P` and weight parity.
    C1 { n: usize, p: usize },
    /// `R(n,3,P/3)` split by inversions mod `1+P` and weight parity.
    Construction1 { n: usize, p: usize },
    /// `R(n,2,2P/3)` split by inversions mod `1+P` and weight parity.
    C2 { n: usize, p: usize },
    /// Whole-sequence higher-order parity checks.
    ParityChecks { n: usize, h_weight: HWeight },
    /// `R(n,3,P)` split by VT syndrome and the even/odd window sums.
    E { n: usize, p: usize },
}

impl CodeFamily {
    pub fn n(&self) -> usize {
        match *self {
            CodeFamily::Full { n }
            | CodeFamily::Vt { n }
            | CodeFamily::C1 { n, .. }
            | CodeFamily::Construction1 { n, .. }
            | CodeFamily::C2 { n, .. }
            | CodeFamily::ParityChecks { n, .. }
            | CodeFamily::E { n, .. } => n,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CodeFamily::Full { .. } => "full",
            CodeFamily::Vt { .. } => "vt",
            CodeFamily::C1 { .. } => "c1",
            CodeFamily::Construction1 { .. } => "c",
            CodeFamily::C2 { .. } => "c2",
            CodeFamily::ParityChecks { .. } => "parity",
            CodeFamily::E { .. } => "e",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n > MAX_LEN {
            return Err(Error::TooLong { len: n, max: MAX_LEN });
        }
        let bad = |msg: String| Err(Error::Parameter(msg));
        match *self {
            CodeFamily::Full { .. } => Ok(()),
            CodeFamily::Vt { n: 0 } => bad("VT needs n ≥ 1".into()),
            CodeFamily::Vt { .. } => Ok(()),
            CodeFamily::C1 { p: 0, .. } => bad("C1 needs P ≥ 1".into()),
            CodeFamily::C1 { .. } => Ok(()),
            CodeFamily::Construction1 { n, p } if n < 4 || p < 6 || p % 3 != 0 => {
                bad(format!("construction needs n ≥ 4, P ≥ 6 and 3 | P (n={n}, P={p})"))
            }
            CodeFamily::Construction1 { .. } => Ok(()),
            CodeFamily::C2 { p, .. } if p == 0 || p % 3 != 0 => {
                bad(format!("C2 needs 3 | P with P ≥ 3 (P={p})"))
            }
            CodeFamily::C2 { .. } => Ok(()),
            CodeFamily::ParityChecks { n, .. } if n < 2 => Err(Error::TooShort { len: n, min: 2 }),
            CodeFamily::ParityChecks { .. } => Ok(()),
            CodeFamily::E { p: 0, .. } => bad("E needs P ≥ 1".into()),
            CodeFamily::E { n, p } if segment_len(p) >= n => {
                bad(format!("E needs m = 7P+1 < n (m={}, n={n})", segment_len(p)))
            }
            CodeFamily::E { .. } => Ok(()),
        }
    }

    /// One modulus per syndrome, in residue order.
    pub fn moduli(&self) -> Vec<u64> {
        match *self {
            CodeFamily::Full { .. } => vec![],
            CodeFamily::Vt { n } => vec![n as u64 + 1],
            CodeFamily::C1 { p, .. } | CodeFamily::Construction1 { p, .. } | CodeFamily::C2 { p, .. } => {
                vec![p as u64 + 1, 2]
            }
            CodeFamily::ParityChecks { n, .. } => {
                let n = n as u64;
                vec![2 * n, n * n, n * n * n, 3, 2 * n]
            }
            CodeFamily::E { n, p } => {
                let w = parity::window_moduli(segment_len(p));
                let mut v = vec![n as u64 + 1];
                v.extend_from_slice(&w);
                v.extend_from_slice(&w);
                v
            }
        }
    }

    /// Whether `x` lies in the ambient set every coset is carved from.
    pub fn in_ambient(&self, x: &BitSeq) -> bool {
        if x.len() != self.n() {
            return false;
        }
        match *self {
            CodeFamily::Full { .. } | CodeFamily::Vt { .. } | CodeFamily::ParityChecks { .. } => true,
            CodeFamily::C1 { p, .. } => x.in_r(2, 2 * p),
            CodeFamily::Construction1 { p, .. } => x.in_r(3, p / 3),
            CodeFamily::C2 { p, .. } => x.in_r(2, 2 * p / 3),
            CodeFamily::E { p, .. } => x.in_r(3, p),
        }
    }

    /// Syndromes of `x`, or `None` when `x` is outside the ambient set.
    /// The family must already be valid.
    pub fn residues(&self, x: &BitSeq) -> Option<Vec<u64>> {
        if !self.in_ambient(x) {
            return None;
        }
        Some(match *self {
            CodeFamily::Full { .. } => vec![],
            CodeFamily::Vt { .. } => vec![vt_syndrome(x)],
            CodeFamily::C1 { p, .. } | CodeFamily::Construction1 { p, .. } | CodeFamily::C2 { p, .. } => {
                vec![x.inversions() % (p as u64 + 1), x.weight() as u64 % 2]
            }
            CodeFamily::ParityChecks { h_weight, .. } => {
                parity_checks(x, h_weight).ok()?.residues().to_vec()
            }
            CodeFamily::E { p, .. } => {
                let sums = padded_tilde_sums(x, segment_len(p)).ok()?;
                let mut v = vec![vt_syndrome(x)];
                v.extend_from_slice(&sums.even.residues());
                v.extend_from_slice(&sums.odd.residues());
                v
            }
        })
    }

    /// The coset of this family selected by `residues`.
    pub fn with_residues(&self, residues: &[u64]) -> Result<CodeParams> {
        let moduli = self.moduli();
        if residues.len() != moduli.len() {
            return Err(Error::Parameter(format!(
                "{} takes {} residues, got {}",
                self.tag(),
                moduli.len(),
                residues.len()
            )));
        }
        let r = residues;
        let params = match *self {
            CodeFamily::Full { n } => CodeParams::Full { n },
            CodeFamily::Vt { n } => CodeParams::Vt { n, a: r[0] },
            CodeFamily::C1 { n, p } => CodeParams::C1 { n, p, c: r[0], d: r[1] },
            CodeFamily::Construction1 { n, p } => CodeParams::Construction1 { n, p, c: r[0], d: r[1] },
            CodeFamily::C2 { n, p } => CodeParams::C2 { n, p, c: r[0], d: r[1] },
            CodeFamily::ParityChecks { n, h_weight } => CodeParams::ParityChecks {
                n,
                h_weight,
                residues: [r[0], r[1], r[2], r[3], r[4]],
            },
            CodeFamily::E { n, p } => CodeParams::E {
                n,
                p,
                a: r[0],
                even: [r[1], r[2], r[3], r[4], r[5]],
                odd: [r[6], r[7], r[8], r[9], r[10]],
            },
        };
        params.validate()?;
        Ok(params)
    }
}

/// A concrete code: a family together with one residue per syndrome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeParams {
    Full { n: usize },
    Vt { n: usize, a: u64 },
    C1 { n: usize, p: usize, c: u64, d: u64 },
    Construction1 { n: usize, p: usize, c: u64, d: u64 },
    C2 { n: usize, p: usize, c: u64, d: u64 },
    ParityChecks { n: usize, h_weight: HWeight, residues: [u64; 5] },
    E { n: usize, p: usize, a: u64, even: [u64; 5], odd: [u64; 5] },
}

impl CodeParams {
    pub fn family(&self) -> CodeFamily {
        match *self {
            CodeParams::Full { n } => CodeFamily::Full { n },
            CodeParams::Vt { n, .. } => CodeFamily::Vt { n },
            CodeParams::C1 { n, p, .. } => CodeFamily::C1 { n, p },
            CodeParams::Construction1 { n, p, .. } => CodeFamily::Construction1 { n, p },
            CodeParams::C2 { n, p, .. } => CodeFamily::C2 { n, p },
            CodeParams::ParityChecks { n, h_weight, .. } => CodeFamily::ParityChecks { n, h_weight },
            CodeParams::E { n, p, .. } => CodeFamily::E { n, p },
        }
    }

    pub fn n(&self) -> usize {
        self.family().n()
    }

    pub fn residues(&self) -> Vec<u64> {
        match *self {
            CodeParams::Full { .. } => vec![],
            CodeParams::Vt { a, .. } => vec![a],
            CodeParams::C1 { c, d, .. } | CodeParams::Construction1 { c, d, .. } | CodeParams::C2 { c, d, .. } => {
                vec![c, d]
            }
            CodeParams::ParityChecks { residues, .. } => residues.to_vec(),
            CodeParams::E { a, even, odd, .. } => {
                let mut v = vec![a];
                v.extend_from_slice(&even);
                v.extend_from_slice(&odd);
                v
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let family = self.family();
        family.validate()?;
        for (r, m) in self.residues().iter().zip(family.moduli()) {
            if *r >= m {
                return Err(Error::Parameter(format!("residue {r} out of range for modulus {m}")));
            }
        }
        Ok(())
    }

    /// Membership test; works for any `n ≤ 64`.
    pub fn contains(&self, x: &BitSeq) -> bool {
        self.family().residues(x).is_some_and(|r| r == self.residues())
    }

    /// All members, by exhaustive filtering of `Σ₂ⁿ`.
    pub fn build(&self) -> Result<SeqSet> {
        self.validate()?;
        let n = self.n();
        if n > ENUMERATION_CAP {
            return Err(Error::EnumerationCap { n, cap: ENUMERATION_CAP });
        }
        let members: Vec<BitSeq> = (0..1u64 << n)
            .into_par_iter()
            .map(|bits| BitSeq::from_packed_unchecked(bits, n))
            .filter(|x| self.contains(x))
            .collect();
        Ok(SeqSet::from_sorted_unchecked(n, members))
    }

    /// `key=value` pairs after the family tag and `n`, e.g. `P=9,c=3,d=1`.
    pub fn params_string(&self) -> String {
        let tuple = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(":");
        match *self {
            CodeParams::Full { .. } => String::new(),
            CodeParams::Vt { a, .. } => format!("a={a}"),
            CodeParams::C1 { p, c, d, .. } | CodeParams::Construction1 { p, c, d, .. } | CodeParams::C2 { p, c, d, .. } => {
                format!("P={p},c={c},d={d}")
            }
            CodeParams::ParityChecks { h_weight, residues, .. } => {
                format!("h-weight={},f={},h={}", h_weight.tag(), tuple(&residues[..3]), tuple(&residues[3..]))
            }
            CodeParams::E { p, a, even, odd, .. } => {
                format!("P={p},a={a},even={},odd={}", tuple(&even), tuple(&odd))
            }
        }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={} n={} params={}", self.family().tag(), self.n(), self.params_string())
    }
}

/// Every nonempty coset of `family`, keyed by its residue tuple.
pub fn cosets(family: &CodeFamily) -> Result<BTreeMap<Vec<u64>, SeqSet>> {
    family.validate()?;
    let n = family.n();
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap { n, cap: ENUMERATION_CAP });
    }
    let groups = (0..1u64 << n)
        .into_par_iter()
        .fold(BTreeMap::<Vec<u64>, Vec<BitSeq>>::new, |mut acc, bits| {
            let x = BitSeq::from_packed_unchecked(bits, n);
            if let Some(r) = family.residues(&x) {
                acc.entry(r).or_default().push(x);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, mut v) in b {
                a.entry(k).or_default().append(&mut v);
            }
            a
        });
    Ok(groups
        .into_iter()
        .map(|(k, v)| (k, SeqSet::from_unsorted_unchecked(n, v)))
        .collect())
}

/// The largest coset of `family`; ties go to the smallest residue tuple.
pub fn best_coset(family: &CodeFamily) -> Result<(CodeParams, SeqSet)> {
    let mut best: Option<(Vec<u64>, SeqSet)> = None;
    for (key, set) in cosets(family)? {
        if best.as_ref().is_none_or(|(_, b)| set.len() > b.len()) {
            best = Some((key, set));
        }
    }
    let (key, set) = best.ok_or(Error::AllCosetsEmpty)?;
    Ok((family.with_residues(&key)?, set))
}

/// `n − log₂|C|`.
pub fn redundancy(code: &SeqSet) -> Result<f64> {
    if code.is_empty() {
        return Err(Error::CodeTooSmall { size: 0, min: 1 });
    }
    Ok(code.common_length() as f64 - (code.len() as f64).log2())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    /// `ν_t(C) < N`.
    pub holds: bool,
    /// The code has fewer than two words, so the property holds trivially.
    pub vacuous: bool,
    /// `ν_t(C)`, absent for vacuous codes.
    pub coverage: Option<usize>,
}

/// Whether any `N` distinct `t`-insertion reads determine the codeword.
pub fn verify_reconstruction_code(code: &SeqSet, t: usize, reads: usize) -> Result<Verification> {
    if code.len() < 2 {
        return Ok(Verification { holds: true, vacuous: true, coverage: None });
    }
    let cov = read_coverage(code, t)?.value;
    Ok(Verification { holds: cov < reads, vacuous: false, coverage: Some(cov) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::{deletion_ball, intersection_size};
    use crate::seq::seq;

    fn sset(items: &[&str]) -> SeqSet {
        SeqSet::from_iter_checked(items[0].len(), items.iter().map(|s| seq(s))).unwrap()
    }

    #[test]
    fn vt_examples() {
        assert_eq!(vt_syndrome(&seq("0000")), 0);
        let c = CodeParams::Vt { n: 4, a: 0 }.build().unwrap();
        assert_eq!(c, sset(&["0000", "1001", "0110", "1111"]));
        assert_eq!(redundancy(&c).unwrap(), 2.0);
        assert!(CodeParams::Vt { n: 4, a: 5 }.build().is_err());
    }

    #[test]
    fn vt_cosets_correct_one_deletion() {
        for n in 1..=10 {
            for (_, code) in cosets(&CodeFamily::Vt { n }).unwrap() {
                let balls: Vec<_> = code.iter().map(|x| deletion_ball(x, 1).unwrap()).collect();
                for i in 0..balls.len() {
                    for j in i + 1..balls.len() {
                        assert!(balls[i].is_disjoint(&balls[j]), "n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn best_vt_coset_is_zero() {
        let (params, set) = best_coset(&CodeFamily::Vt { n: 4 }).unwrap();
        assert_eq!(params, CodeParams::Vt { n: 4, a: 0 });
        assert_eq!(set.len(), 4);
        // n = 3: all four cosets have two members, so the tie goes to a = 0.
        let (params, _) = best_coset(&CodeFamily::Vt { n: 3 }).unwrap();
        assert_eq!(params, CodeParams::Vt { n: 3, a: 0 });
    }

    #[test]
    fn single_nonempty_coset_is_chosen() {
        let (params, set) = best_coset(&CodeFamily::Full { n: 5 }).unwrap();
        assert_eq!(params, CodeParams::Full { n: 5 });
        assert_eq!(set.len(), 32);
        assert_eq!(redundancy(&set).unwrap(), 0.0);
        assert!(matches!(
            best_coset(&CodeFamily::E { n: 12, p: 1 }),
            Err(Error::AllCosetsEmpty)
        ));
    }

    #[test]
    fn cosets_partition_the_ambient_set() {
        for n in 4..=12 {
            let families = [
                CodeFamily::Vt { n },
                CodeFamily::C1 { n, p: 2 },
                CodeFamily::Construction1 { n, p: 9 },
                CodeFamily::C2 { n, p: 3 },
                CodeFamily::ParityChecks { n, h_weight: HWeight::M1 },
                CodeFamily::E { n, p: 1 },
            ];
            for fam in families {
                if fam.validate().is_err() {
                    continue;
                }
                let groups = cosets(&fam).unwrap();
                let total: usize = groups.values().map(SeqSet::len).sum();
                let ambient = BitSeq::all(n).unwrap().filter(|x| fam.in_ambient(x)).count();
                assert_eq!(total, ambient, "{fam:?}");
                for (key, set) in &groups {
                    let params = fam.with_residues(key).unwrap();
                    assert_eq!(&params.build().unwrap(), set, "{params}");
                }
            }
        }
    }

    #[test]
    fn construction_parameter_checks() {
        assert!(CodeFamily::Construction1 { n: 12, p: 8 }.validate().is_err());
        assert!(CodeFamily::Construction1 { n: 3, p: 9 }.validate().is_err());
        assert!(CodeFamily::C2 { n: 12, p: 4 }.validate().is_err());
        assert!(CodeFamily::E { n: 8, p: 1 }.validate().is_err());
        assert!(CodeFamily::E { n: 9, p: 1 }.validate().is_ok());
        assert!(matches!(
            CodeParams::Full { n: 27 }.build(),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn construction1_with_p6_is_empty() {
        for n in 4..=10 {
            assert!(cosets(&CodeFamily::Construction1 { n, p: 6 }).unwrap().is_empty());
        }
    }

    #[test]
    fn construction1_p9_n12_members_are_constrained() {
        let groups = cosets(&CodeFamily::Construction1 { n: 12, p: 9 }).unwrap();
        assert!(!groups.is_empty());
        for set in groups.values() {
            assert!(set.iter().all(|x| x.in_r(3, 3)));
        }
    }

    #[test]
    fn c1_reduces_to_inversion_cosets_for_large_p() {
        let n = 8;
        let fam = CodeFamily::C1 { n, p: n };
        assert!(BitSeq::all(n).unwrap().all(|x| fam.in_ambient(&x)));
    }

    #[test]
    fn c1_cosets_have_single_insertion_coverage_at_most_one() {
        for n in 4..=10 {
            for p in [1, 2, 3] {
                for (_, code) in cosets(&CodeFamily::C1 { n, p }).unwrap() {
                    let v = verify_reconstruction_code(&code, 1, 2).unwrap();
                    assert!(v.holds, "n={n} P={p} {v:?}");
                }
            }
        }
    }

    #[test]
    fn c2_ambient_is_contained_in_c1_ambient() {
        for x in BitSeq::all(10).unwrap() {
            if (CodeFamily::C2 { n: 10, p: 9 }).in_ambient(&x) {
                assert!((CodeFamily::C1 { n: 10, p: 9 }).in_ambient(&x));
            }
        }
    }

    #[test]
    fn parity_check_cosets_correct_two_insertions_small_n() {
        for n in 4..=8 {
            for (key, code) in cosets(&CodeFamily::ParityChecks { n, h_weight: HWeight::M1 }).unwrap() {
                for (i, x) in code.iter().enumerate() {
                    for y in code.iter().skip(i + 1) {
                        assert_eq!(intersection_size(x, y, 2).unwrap(), 0, "n={n} {key:?} {x} {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn full_space_verification() {
        for n in 2..=7 {
            let full = CodeParams::Full { n }.build().unwrap();
            assert!(verify_reconstruction_code(&full, 2, 2 * n + 5).unwrap().holds);
            let v = verify_reconstruction_code(&full, 2, 2 * n + 4).unwrap();
            assert!(!v.holds);
            assert_eq!(v.coverage, Some(2 * n + 4));
        }
        let v = verify_reconstruction_code(&SeqSet::singleton(seq("0101")), 2, 1).unwrap();
        assert!(v.holds && v.vacuous);
        assert!(redundancy(&SeqSet::empty(4)).is_err());
    }

    #[test]
    fn membership_works_beyond_the_enumeration_cap() {
        let x = BitSeq::from_packed(0x5555_5555_5555, 48).unwrap();
        let fam = CodeFamily::E { n: 48, p: 3 };
        let r = fam.residues(&x);
        assert!(r.is_none(), "an alternating word has period 2");
        // x_{i+3} = x̄_i everywhere, so no window of length 4 has period ≤ 3.
        let y = seq("001110").power(8).unwrap();
        assert!(y.in_r(3, 3));
        let r = fam.residues(&y).unwrap();
        assert!(fam.with_residues(&r).unwrap().contains(&y));
    }

    #[test]
    fn params_display() {
        let p = CodeParams::Construction1 { n: 12, p: 9, c: 3, d: 1 };
        assert_eq!(p.to_string(), "family=c n=12 params=P=9,c=3,d=1");
        let s = CodeParams::ParityChecks { n: 8, h_weight: HWeight::M0, residues: [1, 2, 3, 0, 5] };
        assert_eq!(s.to_string(), "family=parity n=8 params=h-weight=m0,f=1:2:3,h=0:5");
    }
}
