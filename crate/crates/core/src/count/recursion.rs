use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::ring::{RingElem, System};

/// Memoized evaluator of `r(x, k)`, the number of normalized
/// representations of `x` with exactly `k` nonzero digits.
///
/// `r(0, 0) = 1`, `r(0, k+1) = 0`, `r(x, 0) = 0` for `x ≠ 0`; if `β | x`
/// then `r(x, k+1) = r(x/β, k+1)`, otherwise `r(x, k+1)` sums
/// `r((x-d)/β, k)` over the nonzero digits `d` with `β | x - d`.
#[derive(Debug, Default)]
pub struct RCounter {
    memo: HashMap<(System, BigInt, BigInt, usize), BigUint>,
}

impl RCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, x: &RingElem, k: usize) -> BigUint {
        let mut x = x.clone();
        if x.is_zero() {
            return if k == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if k == 0 {
            return BigUint::zero();
        }
        // strip trailing zero digits; they do not change the count
        while x.divisible_by_beta() {
            x = x.div_beta().expect("divisibility checked");
        }
        let key = (x.ring(), x.a().clone(), x.b().clone(), k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let sys = x.ring();
        let mut total = BigUint::zero();
        for d in sys.nonzero_digits() {
            let rest = &x - &sys.digit_value(d);
            if rest.divisible_by_beta() {
                total += self.count(&rest.div_beta().expect("divisibility checked"), k - 1);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `r(x, k)` with a fresh memo table.
pub fn r_count(x: &RingElem, k: usize) -> BigUint {
    RCounter::new().count(x, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> RingElem {
        RingElem::new(System::Gauss, a, b)
    }

    #[test]
    fn examples() {
        assert_eq!(r_count(&g(1, 0), 3), 9u32.into());
        assert_eq!(r_count(&g(0, 0), 0), 1u32.into());
        assert_eq!(r_count(&g(0, 0), 2), 0u32.into());
        assert_eq!(r_count(&g(2, 1), 2), 3u32.into());
        assert_eq!(r_count(&g(2, 1), 1), 0u32.into());
    }

    #[test]
    fn powers_of_three_for_one() {
        let mut rc = RCounter::new();
        for k in 0..=8u32 {
            assert_eq!(rc.count(&g(1, 0), k as usize + 1), BigUint::from(3u32).pow(k));
        }
    }

    #[test]
    fn symmetric_under_units_beta_and_conjugation() {
        let mut rc = RCounter::new();
        for sys in System::ALL {
            for (a, b) in [(2, 1), (-2, 5), (3, -4), (7, 2)] {
                let x = RingElem::new(sys, a, b);
                for k in 1..6 {
                    let base = rc.count(&x, k);
                    assert_eq!(rc.count(&x.unit_mul(1), k), base);
                    assert_eq!(rc.count(&x.mul_beta(), k), base);
                    if sys == System::Gauss {
                        assert_eq!(rc.count(&x.conj(), k), base);
                    }
                }
            }
        }
    }
}
