//! Desk-scale redundancy table for double insertions.
//!
//! For every `n` the sweep takes the largest coset of each candidate
//! construction, measures its read coverage once, and then for each
//! read-count regime reports the smallest redundancy among the candidates
//! that reconstruct from the regime's representative `N`.

use anyhow::Result;
use rayon::prelude::*;

use insrecon::{best_coset, read_coverage, redundancy, CodeFamily, CodeParams, Error, HWeight};

use crate::Format;

struct Regime {
    label: &'static str,
    /// Representative read count, if the regime is nonempty at this `n`.
    reads: fn(usize) -> Option<usize>,
    /// Asymptotic optimal redundancy for the regime.
    bound: &'static str,
}

const REGIMES: [Regime; 5] = [
    Regime { label: "N>2n+4", reads: |n| Some(2 * n + 5), bound: "0" },
    Regime { label: "n+5<N<=2n+4", reads: |n| (n + 6 <= 2 * n + 4).then_some(n + 6), bound: "log2log2(n)+Θ(1)" },
    Regime { label: "N=n+4,n+5", reads: |n| Some(n + 4), bound: "≥log2log2(n)+Ω(1)" },
    Regime { label: "6<N<=n+3", reads: |n| (7 <= n + 3).then_some(7), bound: "log2(n)+Θ(1)" },
    Regime { label: "1<=N<=6", reads: |_| Some(5), bound: "Θ(log2(n))" },
];

fn candidates(n: usize) -> Vec<CodeFamily> {
    let mut out = vec![CodeFamily::Full { n }, CodeFamily::Vt { n }];
    out.extend((1..=4).map(|p| CodeFamily::C1 { n, p }));
    out.extend([6, 9].map(|p| CodeFamily::Construction1 { n, p }));
    out.extend([3, 6, 9].map(|p| CodeFamily::C2 { n, p }));
    out.push(CodeFamily::ParityChecks { n, h_weight: HWeight::M1 });
    out.push(CodeFamily::E { n, p: 3 });
    out
}

struct Measured {
    params: CodeParams,
    redundancy: f64,
    /// `ν₂`, or `None` for codes with fewer than two words.
    coverage: Option<usize>,
}

fn measure(family: &CodeFamily) -> Result<Option<Measured>> {
    if family.validate().is_err() {
        return Ok(None);
    }
    let (params, code) = match best_coset(family) {
        Ok(found) => found,
        Err(Error::AllCosetsEmpty) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let coverage = if code.len() < 2 { None } else { Some(read_coverage(&code, 2)?.value) };
    Ok(Some(Measured { params, redundancy: redundancy(&code)?, coverage }))
}

fn describe(p: &CodeParams) -> String {
    format!("{}[{}]", p.family().tag(), p.params_string())
}

pub(crate) fn print(format: Format, lo: usize, hi: usize) -> Result<()> {
    const COLUMNS: [&str; 6] = ["n", "regime", "N", "redundancy", "code", "bound"];
    match format {
        Format::Records => println!("columns={}", COLUMNS.join(",")),
        Format::Human => println!("{:>3}  {:<12} {:>4}  {:>10}  {:<28} bound", "n", "regime", "N", "redundancy", "code"),
    }
    for n in lo..=hi {
        let measured: Vec<Measured> = candidates(n)
            .par_iter()
            .map(measure)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        for regime in &REGIMES {
            let reads = (regime.reads)(n);
            let best = reads.and_then(|reads| {
                measured
                    .iter()
                    .filter(|m| m.coverage.is_none_or(|c| c < reads))
                    .min_by(|a, b| a.redundancy.total_cmp(&b.redundancy))
            });
            let reads = reads.map_or_else(|| "-".to_string(), |r| r.to_string());
            let (red, code) = best.map_or_else(
                || ("none".to_string(), "-".to_string()),
                |m| (format!("{:.4}", m.redundancy), describe(&m.params)),
            );
            match format {
                Format::Records => println!(
                    "n={n} regime={} N={reads} redundancy={red} code={code} bound={}",
                    regime.label, regime.bound
                ),
                Format::Human => {
                    println!("{n:>3}  {:<12} {reads:>4}  {red:>10}  {code:<28} {}", regime.label, regime.bound)
                }
            }
        }
    }
    Ok(())
}
