//! Binary sequences under insertion errors: insertion and deletion balls,
//! Type-A/Type-B confusability, the exact structure of double-insertion ball
//! intersections, reconstruction-code constructions, and a read-based
//! decoder with a seeded channel simulator.
//!
//! ```
//! use insrecon::{intersection_size, BitSeq};
//!
//! let x: BitSeq = "111010".parse().unwrap();
//! let y: BitSeq = "110110".parse().unwrap();
//! assert_eq!(intersection_size(&x, &y, 2).unwrap(), 2 * 6 + 4);
//! ```

pub mod balls;
pub mod codes;
pub mod confuse;
pub mod error;
pub mod formula;
pub mod recon;
pub mod seq;
pub mod seqset;
pub mod window;

pub use balls::{
    coverage_below, deletion_ball, insertion_ball, intersect2_decomposed, intersect_balls, intersection_size,
    read_coverage, Coverage, SplitIntersection,
};
pub use codes::file::CodeFile;
pub use codes::parity::{HWeight, ParityVector};
pub use codes::{best_coset, cosets, redundancy, verify_reconstruction_code, CodeFamily, CodeParams, Verification};
pub use confuse::{
    classify_pair, locate_window, localization_bound_holds, predict_i1_size, predict_i2_range, ConfusabilityKind,
    ConfusabilityVerdict, I2Range, WindowSplit,
};
pub use error::{Error, Result};
pub use formula::{ball_size, binomial, nplus, nplus_ell, t_insertion_bound};
pub use recon::{decode, run_experiment, sample_reads, DecodeOutcome, DecodeStatus, ExperimentSummary, ReadBundle};
pub use seq::{count_r, BitSeq, ENUMERATION_CAP, MAX_LEN};
pub use seqset::SeqSet;
pub use window::{classify_window, excluded_by_rsv, WindowClass, WindowOffset};
