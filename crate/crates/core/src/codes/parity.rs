//! Higher-order parity checks on the `10`- and `01`-indicators, for whole
//! sequences and for overlapping length-`2m` windows.

use std::fmt;

use crate::error::{Error, Result};
use crate::seq::BitSeq;

/// Weight vector entries `i`, `i(i+1)/2` and `i(i+1)(2i+1)/6` for `i = 1..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVectors {
    pub m0: Vec<u64>,
    pub m1: Vec<u64>,
    pub m2: Vec<u64>,
}

impl WeightVectors {
    /// Vectors of length `len`, built as running sums of `1`, `i` and `i²`.
    pub fn new(len: usize) -> Self {
        let (mut m0, mut m1, mut m2) = (Vec::with_capacity(len), Vec::with_capacity(len), Vec::with_capacity(len));
        let (mut s1, mut s2) = (0u64, 0u64);
        for i in 1..=len as u64 {
            s1 += i;
            s2 += i * i;
            m0.push(i);
            m1.push(s1);
            m2.push(s2);
        }
        WeightVectors { m0, m1, m2 }
    }
}

fn m1_at(i: u128) -> u128 {
    i * (i + 1) / 2
}

fn m2_at(i: u128) -> u128 {
    i * (i + 1) * (2 * i + 1) / 6
}

/// Which weight vector the second `h` component is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HWeight {
    /// `𝟙₀₁ · m1`, the whole-sequence form.
    M1,
    /// `𝟙₀₁ · m0`, the form used for windows.
    M0,
}

impl HWeight {
    pub fn tag(self) -> &'static str {
        match self {
            HWeight::M1 => "m1",
            HWeight::M0 => "m0",
        }
    }
}

impl std::str::FromStr for HWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m1" => Ok(HWeight::M1),
            "m0" => Ok(HWeight::M0),
            other => Err(Error::Parse(format!("unknown h weight {other:?} (expected m1 or m0)"))),
        }
    }
}

/// `f` residues followed by `h` residues, with the moduli they live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityVector {
    pub f: [u64; 3],
    pub h: [u64; 2],
    pub moduli: [u64; 5],
}

impl ParityVector {
    pub fn zero(moduli: [u64; 5]) -> Self {
        ParityVector { f: [0; 3], h: [0; 2], moduli }
    }

    pub fn residues(&self) -> [u64; 5] {
        [self.f[0], self.f[1], self.f[2], self.h[0], self.h[1]]
    }

    fn from_residues(r: [u64; 5], moduli: [u64; 5]) -> Self {
        ParityVector { f: [r[0], r[1], r[2]], h: [r[3], r[4]], moduli }
    }

    /// Componentwise sum in the shared moduli.
    pub fn add(&self, other: &ParityVector) -> ParityVector {
        debug_assert_eq!(self.moduli, other.moduli);
        let (a, b) = (self.residues(), other.residues());
        let r = std::array::from_fn(|i| (a[i] + b[i]) % self.moduli[i]);
        ParityVector::from_residues(r, self.moduli)
    }

    /// Componentwise difference `self − other` in the shared moduli.
    pub fn sub(&self, other: &ParityVector) -> ParityVector {
        debug_assert_eq!(self.moduli, other.moduli);
        let (a, b) = (self.residues(), other.residues());
        let r = std::array::from_fn(|i| (a[i] + self.moduli[i] - b[i]) % self.moduli[i]);
        ParityVector::from_residues(r, self.moduli)
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: [u64; 5]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{} mod {}", join(self.residues()), join(self.moduli))
    }
}

fn whole_moduli(n: usize) -> [u64; 5] {
    let n = n as u64;
    [2 * n, n * n, n * n * n, 3, 2 * n]
}

/// Moduli of the length-`2m` window checks: `(4m, 4m², 8m³, 3, 4m)`.
pub fn window_moduli(m: usize) -> [u64; 5] {
    whole_moduli(2 * m)
}

/// Checks of the length-`len` word whose `i`-th symbol (0-based) is `sym(i)`.
fn checks_over(len: usize, sym: impl Fn(usize) -> u8, moduli: [u64; 5], h_weight: HWeight) -> ParityVector {
    let mut acc = [0u128; 5];
    for i in 1..len {
        let (prev, cur) = (sym(i - 1), sym(i));
        let idx = i as u128;
        if prev == 1 && cur == 0 {
            acc[0] += idx;
            acc[1] += m1_at(idx);
            acc[2] += m2_at(idx);
        } else if prev == 0 && cur == 1 {
            acc[3] += 1;
            acc[4] += match h_weight {
                HWeight::M1 => m1_at(idx),
                HWeight::M0 => idx,
            };
        }
    }
    let r = std::array::from_fn(|k| (acc[k] % moduli[k] as u128) as u64);
    ParityVector::from_residues(r, moduli)
}

/// Whole-sequence checks `f(x)`, `h(x)` with moduli `(2n, n², n³, 3, 2n)`.
pub fn parity_checks(x: &BitSeq, h_weight: HWeight) -> Result<ParityVector> {
    let n = x.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    Ok(checks_over(n, |i| x.bit(i), whole_moduli(n), h_weight))
}

fn segment_count(n: usize, m: usize) -> Result<usize> {
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Parameter(format!("segment length {m} does not divide {n}")));
    }
    let s = n / m;
    if s < 2 {
        return Err(Error::Parameter(format!("need at least two segments, got {s}")));
    }
    Ok(s)
}

/// Checks of the window `x[km+1 : km+2m]` (`0 ≤ k ≤ s−2`) under the window
/// moduli; the second `h` component uses `m0`.
pub fn segment_checks(x: &BitSeq, k: usize, m: usize) -> Result<ParityVector> {
    let s = segment_count(x.len(), m)?;
    if k + 2 > s {
        return Err(Error::Parameter(format!("window index {k} out of range 0..={}", s - 2)));
    }
    Ok(window_checks(x, k, m))
}

fn window_checks(x: &BitSeq, k: usize, m: usize) -> ParityVector {
    let start = k * m;
    checks_over(2 * m, |i| x.bit_or_zero(start + i), window_moduli(m), HWeight::M0)
}

/// Window checks summed separately over even and odd window indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TildeSums {
    pub even: ParityVector,
    pub odd: ParityVector,
}

/// Sums of [`segment_checks`] over even and odd `k`; requires `m | n`.
pub fn tilde_sums(x: &BitSeq, m: usize) -> Result<TildeSums> {
    let s = segment_count(x.len(), m)?;
    Ok(tilde_sums_over(x, s, m))
}

/// Smallest multiple of `m` strictly greater than `n`.
pub fn padded_len(n: usize, m: usize) -> usize {
    (n / m + 1) * m
}

/// Tilde sums of `x` itself when `m | n`, otherwise of `x` followed by zeros
/// up to [`padded_len`]. The padded word is never materialized, so it may be
/// longer than a `BitSeq` can hold.
pub fn padded_tilde_sums(x: &BitSeq, m: usize) -> Result<TildeSums> {
    let n = x.len();
    if m == 0 || m >= n {
        return Err(Error::Parameter(format!("segment length {m} must satisfy 0 < m < n = {n}")));
    }
    let total = if n.is_multiple_of(m) { n } else { padded_len(n, m) };
    Ok(tilde_sums_over(x, total / m, m))
}

fn tilde_sums_over(x: &BitSeq, s: usize, m: usize) -> TildeSums {
    let moduli = window_moduli(m);
    let mut sums = [ParityVector::zero(moduli); 2];
    for k in 0..s - 1 {
        sums[k % 2] = sums[k % 2].add(&window_checks(x, k, m));
    }
    TildeSums { even: sums[0], odd: sums[1] }
}
