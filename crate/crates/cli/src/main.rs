use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use insrecon::window::window_pair;
use insrecon::{
    ball_size, best_coset, classify_pair, classify_window, excluded_by_rsv, insertion_ball, intersection_size, nplus,
    nplus_ell, predict_i1_size, predict_i2_range, read_coverage, redundancy, run_experiment, t_insertion_bound,
    verify_reconstruction_code, BitSeq, CodeFamily, CodeFile, CodeParams, HWeight, ENUMERATION_CAP,
};

mod table;

/// Largest insertion ball `ball` will list.
const MAX_BALL_LISTING: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "insrecon", version, about = "Insertion balls, confusability and reconstruction codes for binary sequences")]
struct Cli {
    /// Output style: aligned text, or one `key=value` record per line.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the t-insertion ball of a sequence.
    Ball {
        x: BitSeq,
        #[arg(long)]
        t: usize,
        /// Print only the number of supersequences.
        #[arg(long)]
        size_only: bool,
    },
    /// Classify a pair as Type-A / Type-B confusable and predict its ball intersections.
    Classify {
        x: BitSeq,
        y: BitSeq,
        /// Also compute both intersections by enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Classify the window pair a·ā·v·b and ā·v·b·b̄.
    Window {
        #[arg(long)]
        a: u8,
        #[arg(long)]
        b: u8,
        /// Middle fragment; may be empty.
        #[arg(default_value = "")]
        v: BitSeq,
        /// Also compute the intersection size by enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Build one coset of a code family and write it as a code file.
    Build(BuildArgs),
    /// Check whether any N distinct t-insertion reads determine each codeword.
    Verify {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long = "N")]
        reads: usize,
    },
    /// Compute the read coverage ν_t of a code file.
    Coverage {
        file: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Run seeded transmit-and-decode trials against a code file.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long = "N")]
        reads: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Best redundancy found per read-count regime, swept over a range of n.
    Table {
        /// Inclusive range such as `6..10`.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Evaluate the closed-form ball and intersection sizes.
    Formulas {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Full,
    Vt,
    C1,
    C,
    C2,
    Parity,
    E,
}

#[derive(Args, Debug)]
struct BuildArgs {
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long = "P")]
    p: Option<usize>,
    #[arg(long)]
    c: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    /// Weight used in the h checks of `parity`.
    #[arg(long, default_value = "m1")]
    h_weight: HWeight,
    /// `parity` residues of the three f checks, as `r1:r2:r3`.
    #[arg(long)]
    f: Option<String>,
    /// `parity` residues of the two h checks, as `r4:r5`.
    #[arg(long)]
    h: Option<String>,
    /// `e` residues of the even-window sums, as five `:`-separated numbers.
    #[arg(long)]
    even: Option<String>,
    /// `e` residues of the odd-window sums.
    #[arg(long)]
    odd: Option<String>,
    /// Pick the largest coset instead of the one given by residue flags.
    #[arg(long)]
    best: bool,
    /// Write the code file here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let num = |v: &str| v.trim().parse::<usize>().map_err(|_| format!("{v:?} is not a number"));
    Ok((num(lo)?, num(hi)?))
}

fn residues<const K: usize>(flag: &str, value: Option<&String>) -> Result<[u64; K]> {
    let value = value.with_context(|| format!("--{flag} is required"))?;
    let parts = value
        .split(':')
        .map(|p| p.trim().parse::<u64>().with_context(|| format!("--{flag}: {p:?} is not a number")))
        .collect::<Result<Vec<_>>>()?;
    parts
        .try_into()
        .map_err(|_| anyhow::anyhow!("--{flag} needs {K} ':'-separated residues, got {value:?}"))
}

fn required<T: Copy>(flag: &str, value: Option<T>) -> Result<T> {
    value.with_context(|| format!("--{flag} is required for this family"))
}

impl BuildArgs {
    fn family(&self) -> Result<CodeFamily> {
        let n = self.n;
        let p = || required("P", self.p);
        Ok(match self.family {
            FamilyArg::Full => CodeFamily::Full { n },
            FamilyArg::Vt => CodeFamily::Vt { n },
            FamilyArg::C1 => CodeFamily::C1 { n, p: p()? },
            FamilyArg::C => CodeFamily::Construction1 { n, p: p()? },
            FamilyArg::C2 => CodeFamily::C2 { n, p: p()? },
            FamilyArg::Parity => CodeFamily::ParityChecks { n, h_weight: self.h_weight },
            FamilyArg::E => CodeFamily::E { n, p: p()? },
        })
    }

    fn params(&self) -> Result<CodeParams> {
        let n = self.n;
        let (c, d, a) = (|| required("c", self.c), || required("d", self.d), || required("a", self.a));
        Ok(match self.family()? {
            CodeFamily::Full { n } => CodeParams::Full { n },
            CodeFamily::Vt { n } => CodeParams::Vt { n, a: a()? },
            CodeFamily::C1 { p, .. } => CodeParams::C1 { n, p, c: c()?, d: d()? },
            CodeFamily::Construction1 { p, .. } => CodeParams::Construction1 { n, p, c: c()?, d: d()? },
            CodeFamily::C2 { p, .. } => CodeParams::C2 { n, p, c: c()?, d: d()? },
            CodeFamily::ParityChecks { h_weight, .. } => {
                let f: [u64; 3] = residues("f", self.f.as_ref())?;
                let h: [u64; 2] = residues("h", self.h.as_ref())?;
                CodeParams::ParityChecks { n, h_weight, residues: [f[0], f[1], f[2], h[0], h[1]] }
            }
            CodeFamily::E { p, .. } => CodeParams::E {
                n,
                p,
                a: a()?,
                even: residues("even", self.even.as_ref())?,
                odd: residues("odd", self.odd.as_ref())?,
            },
        })
    }
}

/// Collects output lines as `(key, value)` pairs and renders them in the chosen format.
struct Report {
    format: Format,
    fields: Vec<(String, String)>,
}

impl Report {
    fn new(format: Format) -> Self {
        Report { format, fields: Vec::new() }
    }

    fn add(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    fn print(&self) {
        let width = self.fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            match self.format {
                Format::Records => println!("{k}={v}"),
                Format::Human => println!("{k:<width$}  {v}"),
            }
        }
    }
}

/// Sequences print as bits, with `ε` for the empty word.
fn show(x: &BitSeq) -> String {
    if x.is_empty() {
        "ε".to_string()
    } else {
        x.to_string()
    }
}

fn guard_enumeration(n: usize) -> Result<()> {
    ensure!(n <= ENUMERATION_CAP, "n = {n} exceeds the enumeration cap of {ENUMERATION_CAP}; refusing 2^{n} work");
    Ok(())
}

fn load_code(path: &Path) -> Result<CodeFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    CodeFile::parse(&text).with_context(|| format!("invalid code file {}", path.display()))
}

fn cmd_ball(x: &BitSeq, t: usize, size_only: bool) -> Result<()> {
    let size = ball_size(x.len() as u64, t as u64)?;
    if size_only {
        println!("{size}");
        return Ok(());
    }
    ensure!(size <= MAX_BALL_LISTING, "ball has {size} sequences, more than the listing limit of {MAX_BALL_LISTING}");
    print!("{}", insertion_ball(x, t)?.to_lines());
    Ok(())
}

fn cmd_classify(format: Format, x: &BitSeq, y: &BitSeq, verify: bool) -> Result<()> {
    ensure!(x != y, "classify needs two distinct sequences");
    let verdict = classify_pair(x, y)?;
    let i1 = predict_i1_size(x, y)?;
    let mut r = Report::new(format);
    r.add("kind", verdict.kind);
    match verdict.type_a {
        Some(w) => r.add("type_a_u", show(&w.u)).add("type_a_w", show(&w.w)).add("type_a_v", show(&w.v)),
        None => r.add("type_a", "none"),
    };
    match verdict.type_b {
        Some(w) => r
            .add("type_b_u", show(&w.u))
            .add("type_b_a", w.a)
            .add("type_b_v", show(&w.v))
            .add("type_b_b", w.b)
            .add("type_b_w", show(&w.w))
            .add("type_b_swapped", w.swapped),
        None => r.add("type_b", "none"),
    };
    r.add("i1", i1);
    let i2 = if x.len() >= 4 { Some(predict_i2_range(x, y)?) } else { None };
    r.add("i2", i2.map_or_else(|| "n/a".to_string(), |range| range.to_string()));
    if verify {
        let i1_brute = intersection_size(x, y, 1)?;
        let i2_brute = intersection_size(x, y, 2)?;
        r.add("i1_brute", i1_brute).add("i2_brute", i2_brute);
        let agrees = i1 == i1_brute && i2.is_none_or(|range| range.contains(i2_brute));
        r.add("verified", agrees);
        r.print();
        ensure!(agrees, "prediction disagrees with enumeration for {x}, {y}");
        return Ok(());
    }
    r.print();
    Ok(())
}

fn cmd_window(format: Format, a: u8, b: u8, v: &BitSeq, verify: bool) -> Result<()> {
    ensure!(a <= 1 && b <= 1, "--a and --b must be 0 or 1");
    ensure!(!excluded_by_rsv(a, b, v), "this window pair is Type-A confusable; its intersection is not covered by the window table");
    let class = classify_window(a, b, v)?;
    let (x, y) = window_pair(a, b, v)?;
    let mut r = Report::new(format);
    r.add("x", x).add("y", y).add("offset", class.offset.value());
    r.add("predicted", v.len() + 3 + class.offset.value());
    r.add("form", class.matched_form.map_or_else(|| "generic".to_string(), |m| m.to_string()));
    if verify {
        let brute = intersection_size(&x, &y, 2)?;
        r.add("brute", brute);
        r.print();
        ensure!(brute == v.len() + 3 + class.offset.value(), "classification disagrees with enumeration");
        return Ok(());
    }
    r.print();
    Ok(())
}

fn cmd_build(format: Format, args: &BuildArgs) -> Result<()> {
    guard_enumeration(args.n)?;
    let (params, code) = if args.best {
        best_coset(&args.family()?)?
    } else {
        let params = args.params()?;
        (params, params.build()?)
    };
    let file = CodeFile { params: Some(params), code };
    match &args.out {
        None => print!("{}", file.to_text()),
        Some(path) => {
            fs::write(path, file.to_text()).with_context(|| format!("cannot write {}", path.display()))?;
            let mut r = Report::new(format);
            r.add("family", params.family().tag()).add("n", params.n()).add("params", params.params_string());
            r.add("size", file.code.len());
            if !file.code.is_empty() {
                r.add("redundancy", format!("{:.4}", redundancy(&file.code)?));
            }
            r.add("written", path.display());
            r.print();
        }
    }
    Ok(())
}

fn cmd_verify(format: Format, path: &Path, t: usize, reads: usize) -> Result<()> {
    let file = load_code(path)?;
    let v = verify_reconstruction_code(&file.code, t, reads)?;
    let mut r = Report::new(format);
    r.add("size", file.code.len()).add("t", t).add("N", reads).add("holds", v.holds).add("vacuous", v.vacuous);
    r.add("coverage", v.coverage.map_or_else(|| "n/a".to_string(), |c| c.to_string()));
    r.print();
    Ok(())
}

fn cmd_coverage(format: Format, path: &Path, t: usize) -> Result<()> {
    let file = load_code(path)?;
    let cov = read_coverage(&file.code, t)?;
    let mut r = Report::new(format);
    r.add("size", file.code.len()).add("t", t).add("coverage", cov.value);
    r.add("pair", format!("{},{}", cov.pair.0, cov.pair.1));
    r.print();
    Ok(())
}

fn cmd_simulate(format: Format, path: &Path, t: usize, reads: usize, trials: u64, seed: u64) -> Result<()> {
    let file = load_code(path)?;
    let summary = run_experiment(&file.code, t, reads, trials, seed)?;
    match format {
        Format::Records => print!("{}", summary.to_records()),
        Format::Human => {
            let rate = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), |v| format!("{v:.4}"));
            let mut r = Report::new(format);
            r.add("code size", file.code.len()).add("t", t).add("N", reads).add("seed", seed).add("trials", trials);
            r.add("unique", rate(summary.unique_rate));
            r.add("ambiguous", rate(summary.ambiguous_rate));
            r.add("no candidate", rate(summary.no_candidate_rate));
            r.add("correct", rate(summary.correct_rate));
            r.add("mean candidates", rate(summary.mean_candidates));
            r.print();
        }
    }
    Ok(())
}

fn cmd_formulas(format: Format, n: u64, t: u64) -> Result<()> {
    let mut r = Report::new(format);
    r.add("ball_size", ball_size(n, t)?);
    r.add("nplus", nplus(n, t)?);
    for ell in 0..=t {
        r.add(&format!("nplus_ell{ell}"), nplus_ell(n, t, ell)?);
    }
    if t >= 2 && n >= 3 {
        r.add("t_insertion_bound", t_insertion_bound(n, t)?);
    }
    r.print();
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Ball { x, t, size_only } => cmd_ball(&x, t, size_only),
        Command::Classify { x, y, verify } => cmd_classify(format, &x, &y, verify),
        Command::Window { a, b, v, verify } => cmd_window(format, a, b, &v, verify),
        Command::Build(args) => cmd_build(format, &args),
        Command::Verify { file, t, reads } => cmd_verify(format, &file, t, reads),
        Command::Coverage { file, t } => cmd_coverage(format, &file, t),
        Command::Simulate { file, t, reads, trials, seed } => cmd_simulate(format, &file, t, reads, trials, seed),
        Command::Table { n_range: (lo, hi), t } => {
            if t != 2 {
                bail!("table covers double insertions only (--t 2)");
            }
            if lo <= hi {
                guard_enumeration(hi)?;
            }
            table::print(format, lo, hi)
        }
        Command::Formulas { n, t } => cmd_formulas(format, n, t),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}
