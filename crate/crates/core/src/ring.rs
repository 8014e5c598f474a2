//! Exact arithmetic in the Gaussian integers `Z[i]` and the Eisenstein
//! integers `Z[w]`, together with the two numeration systems built on them:
//!
//! * Gauss: base `i - 1`, digits `{0, ±1, ±i}`, window width 3;
//! * Eisenstein: base `w - 1`, digits `{0, ±1, ±w, ±w²}`, window width 2.
//!
//! Eisenstein elements are stored on the basis `{1, w}` with `w² = -1 - w`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{consistency, Error, Result};

/// One of the two supported numeration systems. Doubles as the ring tag of
/// [`RingElem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    Gauss,
    Eisenstein,
}

/// Digit coordinates in system order. Index 0 is always the zero digit.
const GAUSS_DIGITS: [(i64, i64); 5] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)];
const EISENSTEIN_DIGITS: [(i64, i64); 7] =
    [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1)];

const GAUSS_CHARS: [char; 5] = ['0', '1', 'm', 'i', 'j'];
const EISENSTEIN_CHARS: [char; 7] = ['0', '1', 'm', 'w', 'v', 'p', 'q'];

/// Index of a digit in its system's digit list (see [`System::digits`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digit(pub u8);

impl Digit {
    pub const ZERO: Digit = Digit(0);
    pub const ONE: Digit = Digit(1);
    pub const MINUS_ONE: Digit = Digit(2);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl System {
    pub const ALL: [System; 2] = [System::Gauss, System::Eisenstein];

    pub fn name(self) -> &'static str {
        match self {
            System::Gauss => "gauss",
            System::Eisenstein => "eisenstein",
        }
    }

    /// Window width `W` of the non-adjacent form.
    pub fn window(self) -> usize {
        match self {
            System::Gauss => 3,
            System::Eisenstein => 2,
        }
    }

    /// Order of the generating unit: `i` (4) or `λ = -w²` (6).
    pub fn unit_order(self) -> u32 {
        match self {
            System::Gauss => 4,
            System::Eisenstein => 6,
        }
    }

    /// Symbol used for the imaginary coordinate in element text.
    pub fn unit_symbol(self) -> char {
        match self {
            System::Gauss => 'i',
            System::Eisenstein => 'w',
        }
    }

    pub fn beta(self) -> RingElem {
        RingElem::new(self, -1, 1)
    }

    /// `β^W`: `2 + 2i` for Gauss, `-3w` for Eisenstein.
    pub fn beta_window(self) -> RingElem {
        match self {
            System::Gauss => RingElem::new(self, 2, 2),
            System::Eisenstein => RingElem::new(self, 0, -3),
        }
    }

    /// The generating unit `i` resp. `λ = -w² = 1 + w`.
    pub fn unit(self) -> RingElem {
        match self {
            System::Gauss => RingElem::new(self, 0, 1),
            System::Eisenstein => RingElem::new(self, 1, 1),
        }
    }

    pub(crate) fn digit_coords(self) -> &'static [(i64, i64)] {
        match self {
            System::Gauss => &GAUSS_DIGITS,
            System::Eisenstein => &EISENSTEIN_DIGITS,
        }
    }

    pub fn digit_count(self) -> usize {
        self.digit_coords().len()
    }

    /// All digits, zero first.
    pub fn digits(self) -> impl Iterator<Item = Digit> + Clone {
        (0..self.digit_count() as u8).map(Digit)
    }

    pub fn nonzero_digits(self) -> impl Iterator<Item = Digit> + Clone {
        (1..self.digit_count() as u8).map(Digit)
    }

    pub fn digit_value(self, d: Digit) -> RingElem {
        let (a, b) = self.digit_coords()[d.index()];
        RingElem::new(self, a, b)
    }

    /// Looks up the digit equal to `x`, if any.
    pub fn digit_of(self, x: &RingElem) -> Option<Digit> {
        if x.ring != self {
            return None;
        }
        self.digit_coords()
            .iter()
            .position(|&(a, b)| x.a == BigInt::from(a) && x.b == BigInt::from(b))
            .map(|i| Digit(i as u8))
    }

    pub fn digit_char(self, d: Digit) -> char {
        match self {
            System::Gauss => GAUSS_CHARS[d.index()],
            System::Eisenstein => EISENSTEIN_CHARS[d.index()],
        }
    }

    pub fn digit_from_char(self, c: char) -> Option<Digit> {
        let chars: &[char] = match self {
            System::Gauss => &GAUSS_CHARS,
            System::Eisenstein => &EISENSTEIN_CHARS,
        };
        chars.iter().position(|&x| x == c).map(|i| Digit(i as u8))
    }

    /// `d · u^k` as a digit; the nonzero digits are closed under the unit.
    pub fn digit_unit_mul(self, d: Digit, k: i64) -> Digit {
        self.digit_of(&self.digit_value(d).unit_mul(k))
            .expect("digit set is closed under unit multiplication")
    }

    pub fn digit_conj(self, d: Digit) -> Digit {
        self.digit_of(&self.digit_value(d).conj())
            .expect("digit set is closed under conjugation")
    }

    pub fn digit_neg(self, d: Digit) -> Digit {
        self.digit_of(&-self.digit_value(d))
            .expect("digit set is closed under negation")
    }

    /// The unique nonzero digit `d` with `β^W | x - d`.
    ///
    /// Every nonzero digit is tried; finding zero or several matches is a
    /// consistency failure.
    pub fn digit_for(self, x: &RingElem) -> Result<Digit> {
        if x.ring != self {
            return Err(Error::RingMismatch { left: self, right: x.ring });
        }
        if x.divisible_by_beta() {
            return Err(Error::NotDivisible(format!("digit_for({x}): argument divisible by the base")));
        }
        let mut found = None;
        for d in self.nonzero_digits() {
            let diff = x - &self.digit_value(d);
            if diff.divisible_by_beta_pow(self.window()) {
                if found.is_some() {
                    return Err(consistency(format!("two digits match residue of {x}")));
                }
                found = Some(d);
            }
        }
        found.ok_or_else(|| consistency(format!("no digit matches residue of {x}")))
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" | "gaussian" => Ok(System::Gauss),
            "eisenstein" => Ok(System::Eisenstein),
            _ => Err(Error::Parse { input: s.into(), reason: "expected gauss or eisenstein".into() }),
        }
    }
}

/// An element `a + b·i` of `Z[i]` or `a + b·w` of `Z[w]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: System,
    a: BigInt,
    b: BigInt,
}

impl RingElem {
    pub fn new(ring: System, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RingElem { ring, a: a.into(), b: b.into() }
    }

    pub fn zero(ring: System) -> Self {
        RingElem::new(ring, 0, 0)
    }

    pub fn one(ring: System) -> Self {
        RingElem::new(ring, 1, 0)
    }

    pub fn ring(&self) -> System {
        self.ring
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        match self.ring {
            System::Gauss => &self.a * &self.a + &self.b * &self.b,
            System::Eisenstein => &self.a * &self.a - &self.a * &self.b + &self.b * &self.b,
        }
    }

    fn check_ring(&self, other: &RingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring, right: other.ring })
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ring(other)?;
        Ok(RingElem::new(self.ring, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ring(other)?;
        Ok(RingElem::new(self.ring, &self.a - &other.a, &self.b - &other.b))
    }

    /// Exact product using `i² = -1` resp. `w² = -1 - w`.
    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check_ring(other)?;
        let (a, b, c, d) = (&self.a, &self.b, &other.a, &other.b);
        let bd = b * d;
        Ok(match self.ring {
            System::Gauss => RingElem::new(self.ring, a * c - &bd, a * d + b * c),
            System::Eisenstein => RingElem::new(self.ring, a * c - &bd, a * d + b * c - &bd),
        })
    }

    /// `x · u^k` with `u = i` (Gauss) or `u = λ = -w²` (Eisenstein).
    pub fn unit_mul(&self, k: i64) -> RingElem {
        let k = k.rem_euclid(self.ring.unit_order() as i64);
        let mut x = self.clone();
        for _ in 0..k {
            x = match self.ring {
                // i(a + bi) = -b + ai
                System::Gauss => RingElem::new(self.ring, -&x.b, x.a),
                // (1 + w)(a + bw) = (a - b) + aw
                System::Eisenstein => RingElem::new(self.ring, &x.a - &x.b, x.a),
            };
        }
        x
    }

    pub fn conj(&self) -> RingElem {
        match self.ring {
            System::Gauss => RingElem::new(self.ring, self.a.clone(), -&self.b),
            // conj(w) = w² = -1 - w
            System::Eisenstein => RingElem::new(self.ring, &self.a - &self.b, -&self.b),
        }
    }

    pub fn divisible_by_beta(&self) -> bool {
        let s = &self.a + &self.b;
        match self.ring {
            System::Gauss => s.is_even(),
            System::Eisenstein => (s % 3u32).is_zero(),
        }
    }

    pub fn divisible_by_beta_pow(&self, n: usize) -> bool {
        let mut x = self.clone();
        for _ in 0..n {
            if x.is_zero() {
                return true;
            }
            match x.div_beta() {
                Ok(y) => x = y,
                Err(_) => return false,
            }
        }
        true
    }

    /// Exact quotient `x / β`.
    pub fn div_beta(&self) -> Result<RingElem> {
        if !self.divisible_by_beta() {
            return Err(Error::NotDivisible(self.to_string()));
        }
        let (a, b) = (&self.a, &self.b);
        Ok(match self.ring {
            System::Gauss => RingElem::new(self.ring, (b - a) / 2, -(a + b) / 2),
            System::Eisenstein => RingElem::new(self.ring, (b - a * 2) / 3, -(a + b) / 3),
        })
    }

    /// Exact quotient `x / β^n`.
    pub fn div_beta_pow(&self, n: usize) -> Result<RingElem> {
        let mut x = self.clone();
        for _ in 0..n {
            x = x.div_beta()?;
        }
        Ok(x)
    }

    pub fn mul_beta(&self) -> RingElem {
        self * &self.ring.beta()
    }

    /// Parses the canonical text form (`2+i`, `-2+5i`, `5w`, `-3`, `w`).
    ///
    /// Terms may appear in any order (`5i-2` is accepted); the unit symbol is
    /// `i` for Gauss and `w` for Eisenstein.
    pub fn parse(text: &str, ring: System) -> Result<RingElem> {
        let err = |reason: &str| Error::Parse { input: text.into(), reason: reason.into() };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty element"));
        }
        let unit = ring.unit_symbol();
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            let mut negative = false;
            if chars[pos] == '+' || chars[pos] == '-' {
                negative = chars[pos] == '-';
                pos += 1;
            } else if pos != 0 {
                return Err(err("expected '+' or '-' between terms"));
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[start..pos].iter().collect();
            let is_unit = pos < chars.len() && chars[pos] == unit;
            if is_unit {
                pos += 1;
            }
            if digits.is_empty() && !is_unit {
                return Err(err("empty term"));
            }
            let mut coeff = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| err("bad integer"))?
            };
            if negative {
                coeff = -coeff;
            }
            if is_unit {
                b += coeff;
            } else {
                a += coeff;
            }
            if pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
                return Err(err(&format!("unexpected character {:?}", chars[pos])));
            }
        }
        Ok(RingElem::new(ring, a, b))
    }

    /// Sort key used for deterministic state orders: `(norm, a, b)`.
    pub fn sort_key(&self) -> (BigInt, BigInt, BigInt) {
        (self.norm(), self.a.clone(), self.b.clone())
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.ring.unit_symbol();
        let imag = |f: &mut fmt::Formatter<'_>, b: &BigInt, leading: bool| -> fmt::Result {
            let sign = if b.is_negative() { "-" } else if leading { "" } else { "+" };
            let mag = b.abs();
            if mag.is_one() {
                write!(f, "{sign}{unit}")
            } else {
                write!(f, "{sign}{mag}{unit}")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => imag(f, &self.b, true),
            (false, false) => {
                write!(f, "{}", self.a)?;
                imag(f, &self.b, false)
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a RingElem> for &'a RingElem {
            type Output = RingElem;

            /// Panics when the operands belong to different rings; use the
            /// `try_` form to get an error instead.
            fn $method(self, rhs: &'a RingElem) -> RingElem {
                self.$checked(rhs).expect("ring mismatch")
            }
        }

        impl $trait<RingElem> for RingElem {
            type Output = RingElem;

            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem::new(self.ring, -self.a, -self.b)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem::new(self.ring, -&self.a, -&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> RingElem {
        RingElem::new(System::Gauss, a, b)
    }

    fn e(a: i64, b: i64) -> RingElem {
        RingElem::new(System::Eisenstein, a, b)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&g(1, 2) + &g(3, -1), g(4, 1));
        assert_eq!(&g(7, -3) + &RingElem::zero(System::Gauss), g(7, -3));
        assert_eq!(&e(1, 1) + &e(-1, -1), RingElem::zero(System::Eisenstein));
        assert!(matches!(g(1, 0).try_add(&e(1, 0)), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        let beta = System::Gauss.beta();
        assert_eq!(&beta * &beta, g(0, -2));
        assert_eq!(&(&beta * &beta) * &beta, g(2, 2));
        assert_eq!(System::Gauss.beta_window(), g(2, 2));
        let beta = System::Eisenstein.beta();
        assert_eq!(&beta * &beta, e(0, -3));
        assert!(g(1, 1).try_mul(&e(1, 1)).is_err());
    }

    #[test]
    fn unit_mul_examples() {
        assert_eq!(g(1, 0).unit_mul(1), g(0, 1));
        assert_eq!(g(2, 1).unit_mul(2), g(-2, -1));
        assert_eq!(e(1, 0).unit_mul(6), e(1, 0));
        // λ = -w², λ³ = -1
        assert_eq!(e(1, 0).unit_mul(1), e(1, 1));
        assert_eq!(e(1, 0).unit_mul(3), e(-1, 0));
        assert_eq!(g(3, 4).unit_mul(-1), g(3, 4).unit_mul(3));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(g(2, 1).conj(), g(2, -1));
        assert_eq!(g(0, 0).conj(), g(0, 0));
        assert_eq!(e(0, 1).conj(), e(-1, -1));
        // conj(β) = iβ in Z[i]
        let beta = System::Gauss.beta();
        assert_eq!(beta.conj(), beta.unit_mul(1));
    }

    #[test]
    fn divisibility_examples() {
        assert!(g(1, 1).divisible_by_beta());
        assert_eq!(&g(0, -1) * &System::Gauss.beta(), g(1, 1));
        assert!(!g(1, 0).divisible_by_beta());
        assert!(e(2, 1).divisible_by_beta());
        let q = e(2, 1).div_beta().unwrap();
        assert_eq!(&q * &System::Eisenstein.beta(), e(2, 1));
    }

    #[test]
    fn div_beta_examples() {
        assert_eq!(g(2, 2).div_beta().unwrap(), g(0, -2));
        assert_eq!(g(-1, 1).div_beta().unwrap(), g(1, 0));
        assert_eq!(e(0, -3).div_beta().unwrap(), e(-1, 1));
        assert!(matches!(g(1, 0).div_beta(), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn digit_for_examples() {
        let s = System::Gauss;
        assert_eq!(s.digit_for(&g(2, 1)).unwrap(), s.digit_of(&g(0, -1)).unwrap());
        assert_eq!(s.digit_for(&g(1, 0)).unwrap(), Digit::ONE);
        let s = System::Eisenstein;
        assert_eq!(s.digit_for(&e(0, 1)).unwrap(), s.digit_of(&e(0, 1)).unwrap());
        assert!(System::Gauss.digit_for(&g(2, 0)).is_err());
    }

    #[test]
    fn digit_sets() {
        for sys in System::ALL {
            let nonzero: Vec<_> = sys.nonzero_digits().collect();
            assert_eq!(nonzero.len(), if sys == System::Gauss { 4 } else { 6 });
            for &d in &nonzero {
                let v = sys.digit_value(d);
                assert!(!v.divisible_by_beta());
                assert!(!sys.digit_unit_mul(d, 1).is_zero());
                assert_eq!(sys.digit_for(&v).unwrap(), d);
            }
        }
    }

    /// Brute-force check that each β-indivisible element of small norm has
    /// exactly one matching digit (digit_for errors otherwise).
    #[test]
    fn digit_for_unique_up_to_norm_100() {
        for sys in System::ALL {
            for a in -12i64..=12 {
                for b in -12i64..=12 {
                    let x = RingElem::new(sys, a, b);
                    if x.norm() > BigInt::from(100) || x.divisible_by_beta() {
                        continue;
                    }
                    let matches = sys
                        .nonzero_digits()
                        .filter(|&d| (&x - &sys.digit_value(d)).divisible_by_beta_pow(sys.window()))
                        .count();
                    assert_eq!(matches, 1, "{x}");
                    assert!(sys.digit_for(&x).is_ok());
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let cases = [
            ("2+i", g(2, 1)),
            ("-2+5i", g(-2, 5)),
            ("5i-2", g(-2, 5)),
            ("5i", g(0, 5)),
            ("-i", g(0, -1)),
            ("-2", g(-2, 0)),
            ("0", g(0, 0)),
            ("3-i", g(3, -1)),
        ];
        for (text, x) in cases {
            assert_eq!(RingElem::parse(text, System::Gauss).unwrap(), x, "{text}");
        }
        assert_eq!(RingElem::parse("w", System::Eisenstein).unwrap(), e(0, 1));
        assert_eq!(RingElem::parse("-2+5w", System::Eisenstein).unwrap(), e(-2, 5));
        assert_eq!(g(2, 1).to_string(), "2+i");
        assert_eq!(g(2, -1).to_string(), "2-i");
        assert_eq!(g(-2, 5).to_string(), "-2+5i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(-7, 0).to_string(), "-7");
        assert_eq!(e(0, 1).to_string(), "w");
        assert_eq!(e(3, -2).to_string(), "3-2w");
        for bad in ["", "2+", "2i+w", "++1", "2x", "i2"] {
            assert!(RingElem::parse(bad, System::Gauss).is_err(), "{bad}");
        }
    }

    fn arb_elem() -> impl Strategy<Value = RingElem> {
        (prop_oneof![Just(System::Gauss), Just(System::Eisenstein)], -1000i64..1000, -1000i64..1000)
            .prop_map(|(s, a, b)| RingElem::new(s, a, b))
    }

    proptest! {
        #[test]
        fn div_beta_inverts_mul_beta(x in arb_elem()) {
            prop_assert_eq!(x.mul_beta().div_beta().unwrap(), x);
        }

        #[test]
        fn norm_is_multiplicative(x in arb_elem(), a in -100i64..100, b in -100i64..100) {
            let y = RingElem::new(x.ring(), a, b);
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            prop_assert!(x.norm() >= BigInt::zero());
            prop_assert_eq!(x.norm().is_zero(), x.is_zero());
        }

        #[test]
        fn unit_and_conj_symmetries(x in arb_elem(), k in -20i64..20) {
            let order = x.ring().unit_order() as i64;
            prop_assert_eq!(x.unit_mul(order), x.clone());
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(x.unit_mul(k).norm(), x.norm());
            prop_assert_eq!(x.conj().norm(), x.norm());
            prop_assert_eq!(x.unit_mul(k), &x * &x.ring().unit().unit_mul(k - 1));
        }

        #[test]
        fn text_round_trip(x in arb_elem()) {
            prop_assert_eq!(RingElem::parse(&x.to_string(), x.ring()).unwrap(), x);
        }
    }
}
