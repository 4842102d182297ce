//! The cyclic group of order three.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(into = "u8", try_from = "u8")]
pub struct Z3(u8);

impl Z3 {
    pub const ZERO: Z3 = Z3(0);
    pub const ONE: Z3 = Z3(1);
    pub const TWO: Z3 = Z3(2);
    pub const ALL: [Z3; 3] = [Z3::ZERO, Z3::ONE, Z3::TWO];

    /// Reduces any integer modulo 3.
    pub fn new(value: i64) -> Self {
        Z3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// `0`, `+` or `-`.
    pub fn sign_char(self) -> char {
        match self.0 {
            0 => '0',
            1 => '+',
            _ => '-',
        }
    }

    pub fn from_sign_char(c: char) -> Option<Z3> {
        match c {
            '0' => Some(Z3::ZERO),
            '+' | '1' => Some(Z3::ONE),
            '-' | '2' | '\u{2212}' => Some(Z3::TWO),
            _ => None,
        }
    }
}

impl From<Z3> for u8 {
    fn from(z: Z3) -> u8 {
        z.0
    }
}

impl TryFrom<u8> for Z3 {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, String> {
        if v < 3 {
            Ok(Z3(v))
        } else {
            Err(format!("{v} is not an element of Z_3"))
        }
    }
}

impl Add for Z3 {
    type Output = Z3;
    fn add(self, rhs: Z3) -> Z3 {
        Z3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Z3 {
    type Output = Z3;
    fn sub(self, rhs: Z3) -> Z3 {
        Z3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Z3 {
    type Output = Z3;
    fn neg(self) -> Z3 {
        Z3((3 - self.0) % 3)
    }
}

impl std::iter::Sum for Z3 {
    fn sum<I: Iterator<Item = Z3>>(iter: I) -> Z3 {
        iter.fold(Z3::ZERO, Add::add)
    }
}

impl fmt::Display for Z3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
