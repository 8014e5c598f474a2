use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::System;

/// Symbolic form of [`efficiency_ratio`].
pub const EFFICIENCY_FORMULA: &str = "8 ln2 / (5 ln3)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyRow {
    pub n: usize,
    /// `S(N)`: W-NAF strings of length at most `N`.
    pub strings: BigUint,
    /// `R(N)`: nonzero digits summed over those strings.
    pub nonzero: BigUint,
    /// `R(N) / (N · S(N))`.
    pub ratio: BigRational,
}

/// `S(N)`, `R(N)` and the digit frequency for `N = 1..=n_max`.
///
/// Convention: a string of length at most `N` is identified with its
/// left-zero-padded form of length exactly `N`, so `S(N)` counts the
/// elements whose W-NAF has at most `N` digits, zero (the empty string)
/// included. The count runs over "digits still blocked after the last
/// nonzero digit" rather than over ring elements.
pub fn frequency_table(sys: System, n_max: usize) -> Vec<FrequencyRow> {
    let w = sys.window();
    let choices = BigUint::from(sys.digit_count() - 1);
    // state s: the next s digits must be zero
    let mut count = vec![BigUint::zero(); w];
    let mut weight = vec![BigUint::zero(); w];
    count[0] = BigUint::one();
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut c2 = vec![BigUint::zero(); w];
        let mut w2 = vec![BigUint::zero(); w];
        for s in 0..w {
            let zero_to = s.saturating_sub(1);
            c2[zero_to] += &count[s];
            w2[zero_to] += &weight[s];
        }
        c2[w - 1] += &count[0] * &choices;
        w2[w - 1] += (&weight[0] + &count[0]) * &choices;
        count = c2;
        weight = w2;
        let strings: BigUint = count.iter().sum();
        let nonzero: BigUint = weight.iter().sum();
        let ratio = BigRational::new(
            BigInt::from(nonzero.clone()),
            BigInt::from(n) * BigInt::from(strings.clone()),
        );
        rows.push(FrequencyRow { n, strings, nonzero, ratio });
    }
    rows
}

/// Relative efficiency of the Eisenstein system against the Gauss one:
/// `(2/5 · 2/ln 3) / (1/4 · 2/ln 2) = 8 ln 2 / (5 ln 3)`.
pub fn efficiency_ratio() -> f64 {
    8.0 * std::f64::consts::LN_2 / (5.0 * 3f64.ln())
}
