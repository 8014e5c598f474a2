//! W-NAF strings attaining the maximal number of optimal representations.
//!
//! Gauss: prefixes of `S₁ = g₁h₁h₁⋯`, `S₂ = g₂h₁h₁⋯`, `S₃ = g₁h₂h₂⋯`,
//! `S₄ = g₂h₂h₂⋯` with
//!
//! ```text
//! g₁ = 001 00j 00j      h₁ = 001 00j 00m 00i
//! g₂ = 001 00m 00j      h₂ = 00j 00i
//! ```
//!
//! Eisenstein: prefixes of `S = ghgh⋯` and `gS`, with `g = 01 0w 0q` and
//! `h = 0m 0v 0p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::count::{max_optimal_bounded, optimal_count, r_seq, s_seq};
use crate::error::{Error, Result};
use crate::repr::{Block, BlockString, DigitString};
use crate::ring::{Digit, RingElem, System};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    S1,
    S2,
    S3,
    S4,
    /// Eisenstein `S = ghgh⋯`.
    S,
    /// Eisenstein `gS = gghgh⋯`.
    GS,
}

impl Variant {
    pub fn for_system(sys: System) -> &'static [Variant] {
        match sys {
            System::Gauss => &[Variant::S1, Variant::S2, Variant::S3, Variant::S4],
            System::Eisenstein => &[Variant::S, Variant::GS],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::S1 => "S1",
            Variant::S2 => "S2",
            Variant::S3 => "S3",
            Variant::S4 => "S4",
            Variant::S => "S",
            Variant::GS => "gS",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    /// Accepts `S1`..`S4` (or `1`..`4`), `S` and `gS`.
    fn from_str(s: &str) -> Result<Variant> {
        match s.trim() {
            "S1" | "s1" | "1" => Ok(Variant::S1),
            "S2" | "s2" | "2" => Ok(Variant::S2),
            "S3" | "s3" | "3" => Ok(Variant::S3),
            "S4" | "s4" | "4" => Ok(Variant::S4),
            "S" | "s" => Ok(Variant::S),
            "gS" | "gs" | "GS" => Ok(Variant::GS),
            other => Err(Error::Parse { input: other.into(), reason: "unknown extremal variant".into() }),
        }
    }
}

fn blocks(sys: System, text: &[&str]) -> Vec<Digit> {
    text.iter()
        .map(|c| sys.digit_from_char(c.chars().next().unwrap()).expect("fixed word"))
        .collect()
}

/// `(head, period)` of the variant's sequence of nonzero block digits.
fn word(sys: System, variant: Variant) -> Result<(Vec<Digit>, Vec<Digit>)> {
    if !Variant::for_system(sys).contains(&variant) {
        return Err(Error::UnknownVariant { variant: variant.name().into(), system: sys });
    }
    let w = |t: &[&str]| blocks(sys, t);
    let gh = || [w(&["1", "w", "q"]), w(&["m", "v", "p"])].concat();
    Ok(match variant {
        Variant::S1 => (w(&["1", "j", "j"]), w(&["1", "j", "m", "i"])),
        Variant::S2 => (w(&["1", "m", "j"]), w(&["1", "j", "m", "i"])),
        Variant::S3 => (w(&["1", "j", "j"]), w(&["j", "i"])),
        Variant::S4 => (w(&["1", "m", "j"]), w(&["j", "i"])),
        Variant::S => (Vec::new(), gh()),
        Variant::GS => (w(&["1", "w", "q"]), gh()),
    })
}

/// The prefix of the variant's sequence with exactly `n` nonzero digits,
/// normalized.
pub fn extremal_string(sys: System, variant: Variant, n: usize) -> Result<DigitString> {
    if n == 0 {
        return Err(Error::OutOfRange { what: "N", detail: "need at least one nonzero digit".into() });
    }
    let (head, period) = word(sys, variant)?;
    let digits = head.iter().chain(period.iter().cycle()).take(n).map(|&d| Block::Digit(d)).collect();
    Ok(BlockString::new(sys, digits).to_digit_string().normalize())
}

/// The theoretical maximum for weight `n`: `r_N` or `s_N`.
pub fn max_count(sys: System, n: usize) -> BigUint {
    match sys {
        System::Gauss => r_seq(n),
        System::Eisenstein => s_seq(n as i64),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRow {
    pub variant: Variant,
    pub n: usize,
    pub string: DigitString,
    pub count: BigUint,
    pub attains_max: bool,
}

/// One row per variant: the prefix, its optimal count, and whether that
/// count equals the maximum.
pub fn extremal_rows(sys: System, n: usize) -> Result<Vec<ExtremalRow>> {
    let target = max_count(sys, n);
    Variant::for_system(sys)
        .iter()
        .map(|&variant| {
            let string = extremal_string(sys, variant, n)?;
            let count = optimal_count(&string.eval());
            Ok(ExtremalRow { variant, n, attains_max: count == target, string, count })
        })
        .collect()
}

/// True iff every variant's prefix of weight `n` attains the maximum.
pub fn verify_extremal(sys: System, n: usize) -> bool {
    extremal_rows(sys, n).is_ok_and(|rows| rows.iter().all(|r| r.attains_max))
}

/// All normalized W-NAFs of weight `n` (gaps bounded by `gap_bound`) with
/// nonzero last digit that attain the maximal count, sorted.
pub fn attainers(sys: System, n: usize, gap_bound: usize) -> Result<Vec<DigitString>> {
    Ok(max_optimal_bounded(sys, n, gap_bound)?.attainers)
}

/// `s` with every digit multiplied by `u^k`, for each `k`, without repeats.
pub fn unit_orbit(s: &DigitString) -> Vec<DigitString> {
    let mut out: Vec<DigitString> = Vec::new();
    for k in 0..s.system().unit_order() as i64 {
        let t = s.unit_mul(k);
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// For Gauss, the W-NAF of `conj(eval(s))`: since `conj(β) = iβ`, the digit
/// at position `k` (from the least significant end) becomes `conj(d)·i^k`.
pub fn conjugate_string(s: &DigitString) -> DigitString {
    let sys = s.system();
    let len = s.len();
    let digits = s
        .digits()
        .iter()
        .enumerate()
        .map(|(pos, &d)| sys.digit_unit_mul(sys.digit_conj(d), (len - 1 - pos) as i64))
        .collect();
    DigitString::new(sys, digits).expect("digits stay in range")
}

/// Ring elements of the attainers, for reporting.
pub fn attainer_values(strings: &[DigitString]) -> Vec<RingElem> {
    strings.iter().map(DigitString::eval).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn prefixes() {
        let s = |sys, v, n| extremal_string(sys, v, n).unwrap().to_string();
        assert_eq!(s(System::Gauss, Variant::S1, 3), "100j00j");
        assert_eq!(s(System::Gauss, Variant::S1, 4), "100j00j001");
        assert_eq!(s(System::Eisenstein, Variant::S, 2), "10w");
        assert_eq!(s(System::Eisenstein, Variant::GS, 4), "10w0q01");
        assert!(extremal_string(System::Gauss, Variant::S, 3).is_err());
        assert!(extremal_string(System::Eisenstein, Variant::S1, 3).is_err());
    }

    #[test]
    fn prefixes_are_wnafs() {
        for sys in System::ALL {
            for &v in Variant::for_system(sys) {
                for n in 1..30 {
                    let s = extremal_string(sys, v, n).unwrap();
                    assert!(s.is_wnaf() && s.is_normalized());
                    assert_eq!(s.hamming_weight(), n);
                    assert!(!s.digits().last().unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn verify_examples() {
        assert!(verify_extremal(System::Gauss, 4));
        assert!(verify_extremal(System::Gauss, 13));
        assert!(verify_extremal(System::Eisenstein, 5));
        let rows = extremal_rows(System::Gauss, 13).unwrap();
        assert!(rows.iter().all(|r| r.count == 27509u32.into()));
        let rows = extremal_rows(System::Eisenstein, 5).unwrap();
        assert!(rows.iter().all(|r| r.count == 27u32.into()));
    }

    #[test]
    fn orbits() {
        let g = DigitString::parse("1", System::Gauss).unwrap();
        let names: Vec<String> = unit_orbit(&g).iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["1", "i", "m", "j"]);
        let e = DigitString::parse("10w", System::Eisenstein).unwrap();
        assert_eq!(unit_orbit(&e).len(), 6);
        assert_eq!(unit_orbit(&DigitString::empty(System::Gauss)).len(), 1);
    }

    #[test]
    fn conjugate_string_evaluates_to_conjugate() {
        for text in ["100j", "i0i", "j1", "100m00j", "1000i00j"] {
            let s = DigitString::parse(text, System::Gauss).unwrap();
            assert_eq!(conjugate_string(&s).eval(), s.eval().conj());
        }
    }

    #[test]
    fn census_matches_extremal_orbits() {
        for (sys, range) in [(System::Gauss, 4..=6), (System::Eisenstein, 4..=6)] {
            for n in range {
                let found: BTreeSet<_> = attainers(sys, n, 2).unwrap().into_iter().collect();
                let expected: BTreeSet<_> = Variant::for_system(sys)
                    .iter()
                    .flat_map(|&v| unit_orbit(&extremal_string(sys, v, n).unwrap()))
                    .collect();
                assert_eq!(found, expected, "{sys} N={n}");
                for s in &found {
                    assert!(found.is_superset(&unit_orbit(s).into_iter().collect()));
                    if sys == System::Gauss {
                        assert!(found.contains(&conjugate_string(s)));
                    }
                }
            }
        }
    }
}
