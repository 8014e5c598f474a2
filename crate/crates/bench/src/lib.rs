//! Shared inputs for the benchmarks.

use optrep::extremal::extremal_string;
use optrep::{DigitString, RingElem, System, Variant};

/// Value of the first extremal prefix of weight `n`: a worst case for
/// enumeration, whose size is maximal for its weight.
pub fn extremal_value(sys: System, n: usize) -> RingElem {
    let variant = Variant::for_system(sys)[0];
    extremal_string(sys, variant, n).expect("variant matches system").eval()
}

/// Every digit pattern of a fixed mixed-radix walk, `len` digits long:
/// dense, non-NAF input for the transducer.
pub fn dense_string(sys: System, len: usize) -> DigitString {
    let k = sys.digit_count();
    let digits = (0..len).map(|i| optrep::Digit(((i * 3 + i / k) % k) as u8)).collect();
    DigitString::new(sys, digits).expect("digits in range")
}

/// A square grid of elements with coordinates in `-r..=r`.
pub fn grid(sys: System, r: i64) -> Vec<RingElem> {
    (-r..=r).flat_map(|a| (-r..=r).map(move |b| RingElem::new(sys, a, b))).collect()
}
