use num_bigint::BigUint;
use num_traits::Zero;

/// Dominant root of `x³ = x² + 2x + 2`, the growth rate of `r_N`.
pub const GROWTH_RATE: f64 = 2.269_530_842_081_143;

/// Maximal number of optimal representations over Gaussian 3-NAFs with `N`
/// nonzero digits: `1, 1, 3, 8, 17` for `N ≤ 4`, then
/// `r_(N+3) = r_(N+2) + 2 r_(N+1) + 2 r_N`.
pub fn r_seq(n: usize) -> BigUint {
    const HEAD: [u32; 5] = [1, 1, 3, 8, 17];
    if n < HEAD.len() {
        return HEAD[n].into();
    }
    let (mut a, mut b, mut c) = (BigUint::from(3u32), BigUint::from(8u32), BigUint::from(17u32));
    for _ in 5..=n {
        let next: BigUint = &c + 2u32 * &b + 2u32 * &a;
        (a, b, c) = (b, c, next);
    }
    c
}

/// The Eisenstein maximum `s_N = ⌊(6·2^N + 1) / 7⌋`, and 0 for `N < 0`.
pub fn s_seq(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let num: BigUint = (BigUint::from(6u32) << n as usize) + 1u32;
    num / 7u32
}
