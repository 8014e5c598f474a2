//! Finite digit strings over a system's digit set.
//!
//! Strings are stored most-significant digit first, exactly as written. The
//! empty string is the (only normalized) representation of zero.
//!
//! Text encoding, one character per digit:
//!
//! | system     | `0` | `+1` | `-1` | `+i`/`+w` | `-i`/`-w` | `+w²` | `-w²` |
//! |------------|-----|------|------|-----------|-----------|-------|-------|
//! | Gauss      | `0` | `1`  | `m`  | `i`       | `j`       |       |       |
//! | Eisenstein | `0` | `1`  | `m`  | `w`       | `v`       | `p`   | `q`   |

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Digit, RingElem, System};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitString {
    sys: System,
    digits: Vec<Digit>,
}

impl DigitString {
    pub fn new(sys: System, digits: Vec<Digit>) -> Result<Self> {
        if let Some(d) = digits.iter().find(|d| d.index() >= sys.digit_count()) {
            return Err(Error::OutOfRange { what: "digit", detail: format!("{} in {sys}", d.0) });
        }
        Ok(DigitString { sys, digits })
    }

    pub fn empty(sys: System) -> Self {
        DigitString { sys, digits: Vec::new() }
    }

    pub(crate) fn from_digits_unchecked(sys: System, digits: Vec<Digit>) -> Self {
        DigitString { sys, digits }
    }

    pub fn system(&self) -> System {
        self.sys
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Horner evaluation of `Σ d_k β^k`.
    pub fn eval(&self) -> RingElem {
        let beta = self.sys.beta();
        self.digits.iter().fold(RingElem::zero(self.sys), |acc, &d| {
            &(&acc * &beta) + &self.sys.digit_value(d)
        })
    }

    pub fn hamming_weight(&self) -> usize {
        self.digits.iter().filter(|d| !d.is_zero()).count()
    }

    /// True iff every `W` consecutive digits hold at most one nonzero digit.
    pub fn is_wnaf(&self) -> bool {
        let w = self.sys.window();
        let mut last_nonzero: Option<usize> = None;
        for (i, d) in self.digits.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            if let Some(j) = last_nonzero {
                if i - j < w {
                    return false;
                }
            }
            last_nonzero = Some(i);
        }
        true
    }

    /// Strips leading zeros.
    pub fn normalize(&self) -> DigitString {
        let start = self.digits.iter().position(|d| !d.is_zero()).unwrap_or(self.digits.len());
        DigitString { sys: self.sys, digits: self.digits[start..].to_vec() }
    }

    pub fn is_normalized(&self) -> bool {
        self.digits.first().map_or(true, |d| !d.is_zero())
    }

    /// Appends `d` as the new least significant digit.
    pub fn push(&mut self, d: Digit) {
        self.digits.push(d);
    }

    /// Multiplies every digit by `u^k`.
    pub fn unit_mul(&self, k: i64) -> DigitString {
        let digits = self.digits.iter().map(|&d| self.sys.digit_unit_mul(d, k)).collect();
        DigitString { sys: self.sys, digits }
    }

    /// Decomposes a W-NAF into the block alphabet `{0} ∪ {0^(W-1) d}`.
    ///
    /// Scanning from the least significant end, a nonzero digit takes itself
    /// and the `W - 1` positions above it. The string is left-padded with the
    /// fewest zeros that complete the top block.
    pub fn block_decompose(&self) -> Result<BlockString> {
        let w = self.sys.window();
        if !self.is_wnaf() {
            return Err(Error::NotWnaf { window: w });
        }
        let mut blocks = Vec::new();
        let mut i = self.digits.len();
        while i > 0 {
            let d = self.digits[i - 1];
            if d.is_zero() {
                blocks.push(Block::Zero);
                i -= 1;
            } else {
                blocks.push(Block::Digit(d));
                // W-NAF guarantees the covered digits above are zero
                i = i.saturating_sub(w);
            }
        }
        blocks.reverse();
        Ok(BlockString { sys: self.sys, blocks })
    }

    pub fn parse(text: &str, sys: System) -> Result<DigitString> {
        let digits = text
            .trim()
            .chars()
            .map(|c| {
                sys.digit_from_char(c).ok_or_else(|| Error::Parse {
                    input: text.into(),
                    reason: format!("unknown {sys} digit {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DigitString { sys, digits })
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", self.sys.digit_char(d))?;
        }
        Ok(())
    }
}

/// A letter of the block alphabet: a lone `0`, or `0^(W-1) d` for nonzero `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    Zero,
    Digit(Digit),
}

impl Block {
    /// The block's last (least significant) digit.
    pub fn last_digit(self) -> Digit {
        match self {
            Block::Zero => Digit::ZERO,
            Block::Digit(d) => d,
        }
    }

    pub fn len(self, sys: System) -> usize {
        match self {
            Block::Zero => 1,
            Block::Digit(_) => sys.window(),
        }
    }

    pub fn digits(self, sys: System) -> Vec<Digit> {
        match self {
            Block::Zero => vec![Digit::ZERO],
            Block::Digit(d) => {
                let mut v = vec![Digit::ZERO; sys.window() - 1];
                v.push(d);
                v
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockString {
    sys: System,
    blocks: Vec<Block>,
}

impl BlockString {
    pub fn new(sys: System, blocks: Vec<Block>) -> Self {
        BlockString { sys, blocks }
    }

    pub fn system(&self) -> System {
        self.sys
    }

    /// Blocks, most significant first.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The concatenated (padded) digit string.
    pub fn to_digit_string(&self) -> DigitString {
        let digits = self.blocks.iter().flat_map(|b| b.digits(self.sys)).collect();
        DigitString { sys: self.sys, digits }
    }
}

impl fmt::Display for BlockString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.digits(self.sys).iter().map(|&d| self.sys.digit_char(d)).collect())
            .collect();
        f.write_str(&parts.join("."))
    }
}
