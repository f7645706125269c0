//! Number of determinants needed to partition the parameter space, for the
//! determinantal gcd methods and for the cell enumeration used here.

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantCounts {
    pub vardulakis: BigUint,
    pub barnett: BigUint,
    pub kakie_ho: BigUint,
    pub proposed: BigUint,
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Counts for minimum degree `d0`, maximum degree `m` and `n + 1` inputs.
pub fn run_counts(d0: usize, m: usize, n: usize) -> Result<DeterminantCounts> {
    if d0 == 0 || d0 > m {
        return Err(Error::BadRange(format!("need 1 <= d0 <= m, got d0={d0}, m={m}")));
    }
    if n == 0 {
        return Err(Error::BadRange("need n >= 1".into()));
    }
    let vardulakis = ((2 * m - d0)..=(2 * m)).map(|k| binomial(m * (n + 1), k) * binomial(2 * m, k)).sum();
    let barnett = ((m - d0)..=m).map(|k| binomial(m * (n + 1), k)).sum();
    let kakie_ho = (0..=d0).map(|k| binomial(d0 - k + n, n) * binomial(m + d0, k)).sum();
    Ok(DeterminantCounts { vardulakis, barnett, kakie_ho, proposed: binomial(d0 + n, n) })
}
