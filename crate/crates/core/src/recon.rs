//! Reads, decoding and seeded reconstruction experiments.
//!
//! A read is a length-`n+t` supersequence of the stored word. Decoding keeps
//! every codeword that is a subsequence of all reads; the code is a
//! reconstruction code for `N` reads exactly when that set is a singleton
//! for every bundle of `N` distinct reads.

use std::fmt;
use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::balls::{deletion_ball, insertion_ball};
use crate::error::{Error, Result};
use crate::seq::BitSeq;
use crate::seqset::SeqSet;

/// Distinct reads of a common length `n + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadBundle {
    pub reads: SeqSet,
    pub n: usize,
    pub t: usize,
    /// The transmitted word, when known.
    pub source_hint: Option<BitSeq>,
}

impl ReadBundle {
    pub fn new(reads: SeqSet, n: usize, t: usize) -> Result<Self> {
        if !reads.is_empty() && reads.common_length() != n + t {
            return Err(Error::LengthMismatch { left: reads.common_length(), right: n + t });
        }
        Ok(ReadBundle { reads, n, t, source_hint: None })
    }

    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }
}

fn sample_with(x: &BitSeq, t: usize, count: usize, rng: &mut ChaCha8Rng) -> Result<ReadBundle> {
    let ball = insertion_ball(x, t)?;
    if count > ball.len() {
        return Err(Error::Parameter(format!(
            "asked for {count} distinct reads but the ball holds only {}",
            ball.len()
        )));
    }
    let picked = sample(rng, ball.len(), count).into_iter().map(|i| ball.as_slice()[i]);
    let reads = SeqSet::from_iter_checked(x.len() + t, picked)?;
    Ok(ReadBundle { reads, n: x.len(), t, source_hint: Some(*x) })
}

/// `count` distinct elements of `I_t(x)`, uniformly without replacement.
pub fn sample_reads(x: &BitSeq, t: usize, count: usize, seed: u64) -> Result<ReadBundle> {
    sample_with(x, t, count, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    Unique,
    Ambiguous,
    NoCandidate,
}

impl DecodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodeStatus::Unique => "unique",
            DecodeStatus::Ambiguous => "ambiguous",
            DecodeStatus::NoCandidate => "no-candidate",
        }
    }
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    /// Every codeword consistent with all reads, sorted.
    pub candidates: SeqSet,
}

impl DecodeOutcome {
    pub fn unique(&self) -> Option<BitSeq> {
        (self.status == DecodeStatus::Unique).then(|| self.candidates.as_slice()[0])
    }
}

/// Codewords lying in the `t`-deletion ball of every read.
pub fn decode(bundle: &ReadBundle, code: &SeqSet, t: usize) -> Result<DecodeOutcome> {
    if bundle.t != t {
        return Err(Error::Parameter(format!("bundle was made with t = {}, decoding with t = {t}", bundle.t)));
    }
    if !code.is_empty() && code.common_length() != bundle.n {
        return Err(Error::LengthMismatch { left: code.common_length(), right: bundle.n });
    }
    let mut candidates = match bundle.reads.first() {
        Some(first) => deletion_ball(first, t)?.intersection(code),
        None => code.clone(),
    };
    for read in bundle.reads.iter().skip(1) {
        candidates.retain(|c| c.is_subsequence_of(read));
    }
    let status = match candidates.len() {
        0 => DecodeStatus::NoCandidate,
        1 => DecodeStatus::Unique,
        _ => DecodeStatus::Ambiguous,
    };
    Ok(DecodeOutcome { status, candidates })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRow {
    pub trial: u64,
    pub source: BitSeq,
    pub status: DecodeStatus,
    pub n_candidates: usize,
    /// Unique decode equal to the source.
    pub correct: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub t: usize,
    pub reads: usize,
    pub seed: u64,
    pub trials: u64,
    /// `None` when no trials were run.
    pub unique_rate: Option<f64>,
    pub ambiguous_rate: Option<f64>,
    pub no_candidate_rate: Option<f64>,
    pub correct_rate: Option<f64>,
    pub mean_candidates: Option<f64>,
    pub rows: Vec<TrialRow>,
}

impl ExperimentSummary {
    /// `key=value` lines, then one `trial,status,n_candidates` row per trial.
    pub fn to_records(&self) -> String {
        let rate = |r: Option<f64>| r.map_or_else(|| "n/a".to_string(), |v| format!("{v:.6}"));
        let mut out = String::new();
        let _ = writeln!(out, "t={}", self.t);
        let _ = writeln!(out, "N={}", self.reads);
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "trials={}", self.trials);
        let _ = writeln!(out, "unique_rate={}", rate(self.unique_rate));
        let _ = writeln!(out, "ambiguous_rate={}", rate(self.ambiguous_rate));
        let _ = writeln!(out, "no_candidate_rate={}", rate(self.no_candidate_rate));
        let _ = writeln!(out, "correct_rate={}", rate(self.correct_rate));
        let _ = writeln!(out, "mean_candidates={}", rate(self.mean_candidates));
        let _ = writeln!(out, "rows=trial,status,n_candidates");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{}", r.trial, r.status, r.n_candidates);
        }
        out
    }
}

/// Runs `trials` independent transmissions. Trial `i` draws its codeword and
/// its reads from a generator seeded with `seed + i`, so the result does not
/// depend on scheduling.
pub fn run_experiment(code: &SeqSet, t: usize, reads: usize, trials: u64, seed: u64) -> Result<ExperimentSummary> {
    if code.is_empty() {
        return Err(Error::CodeTooSmall { size: 0, min: 1 });
    }
    let rows: Vec<TrialRow> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial));
            let source = code.as_slice()[rng.gen_range(0..code.len())];
            let bundle = sample_with(&source, t, reads, &mut rng)?;
            let outcome = decode(&bundle, code, t)?;
            Ok(TrialRow {
                trial,
                source,
                status: outcome.status,
                n_candidates: outcome.candidates.len(),
                correct: outcome.unique() == Some(source),
            })
        })
        .collect::<Result<_>>()?;
    let frac = |pred: &dyn Fn(&TrialRow) -> bool| {
        (trials > 0).then(|| rows.iter().filter(|r| pred(r)).count() as f64 / trials as f64)
    };
    Ok(ExperimentSummary {
        t,
        reads,
        seed,
        trials,
        unique_rate: frac(&|r| r.status == DecodeStatus::Unique),
        ambiguous_rate: frac(&|r| r.status == DecodeStatus::Ambiguous),
        no_candidate_rate: frac(&|r| r.status == DecodeStatus::NoCandidate),
        correct_rate: frac(&|r| r.correct),
        mean_candidates: (trials > 0)
            .then(|| rows.iter().map(|r| r.n_candidates as f64).sum::<f64>() / trials as f64),
        rows,
    })
}
