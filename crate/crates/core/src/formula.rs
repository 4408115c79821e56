//! Closed-form sizes of insertion balls and of their maximal pairwise
//! intersections. All arithmetic is checked; overflow is an error, never a
//! silent wraparound.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

/// `I(n, t) = Σ_{i=0}^{t} C(n+t, i)`, the size of every `t`-insertion ball
/// around a length-`n` sequence.
pub fn ball_size(n: u64, t: u64) -> Result<u64> {
    let m = n.checked_add(t).ok_or(Error::Overflow("I(n,t)"))?;
    (0..=t).try_fold(0u64, |acc, i| {
        acc.checked_add(binomial(m, i)?).ok_or(Error::Overflow("I(n,t)"))
    })
}

/// `N⁺(n, t) = Σ_{i=0}^{t−1} C(n+t, i)(1 − (−1)^{t−i})`, the largest
/// intersection of two distinct `t`-insertion balls.
pub fn nplus(n: u64, t: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Parameter("N⁺(n,t) needs n ≥ 1".into()));
    }
    let m = n.checked_add(t).ok_or(Error::Overflow("N+(n,t)"))?;
    (0..t).filter(|i| (t - i) % 2 == 1).try_fold(0u64, |acc, i| {
        binomial(m, i)?
            .checked_mul(2)
            .and_then(|v| acc.checked_add(v))
            .ok_or(Error::Overflow("N+(n,t)"))
    })
}

/// `N⁺(n, t, ℓ)`: the largest intersection of two `t`-insertion balls whose
/// centres are at Levenshtein distance at least `ℓ`.
pub fn nplus_ell(n: u64, t: u64, ell: u64) -> Result<u64> {
    if ell > t {
        return Err(Error::Parameter(format!("N⁺(n,t,ℓ) needs t ≥ ℓ (t={t}, ℓ={ell})")));
    }
    let overflow = || Error::Overflow("N+(n,t,l)");
    let m = n.checked_add(t).ok_or_else(overflow)?;
    let mut total: i128 = 0;
    for j in ell..=t {
        for i in 0..=(t - j) {
            let c_m = binomial(m, i)? as i128;
            let term = (binomial(2 * j, j)? as i128)
                .checked_mul(binomial(t + j - i, 2 * j)? as i128)
                .and_then(|v| v.checked_mul(c_m))
                .ok_or_else(overflow)?;
            let signed = if (t + j - i).is_multiple_of(2) { term } else { -term };
            total = total.checked_add(signed).ok_or_else(overflow)?;
        }
    }
    u64::try_from(total).map_err(|_| overflow())
}

/// Upper bound on `|I_t(x) ∩ I_t(y)|` for pairs with `|I₁(x) ∩ I₁(y)| = 1`:
/// `I(n+1, t−1) + N⁺(n−1, t−1)`.
pub fn t_insertion_bound(n: u64, t: u64) -> Result<u64> {
    if t < 2 || n < 3 {
        return Err(Error::Parameter(format!("bound needs t ≥ 2 and n ≥ 3 (n={n}, t={t})")));
    }
    ball_size(n + 1, t - 1)?
        .checked_add(nplus(n - 1, t - 1)?)
        .ok_or(Error::Overflow("t-insertion bound"))
}
