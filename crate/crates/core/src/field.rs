//! Prime fields GF(p) with residues stored in a single byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`Field::new`]; products of two residues fit in a `u16`.
pub const MAX_PRIME: u16 = 251;

/// A prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u16", into = "u16")]
pub struct Field {
    p: u8,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(p: u16) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::input(format!(
                "modulus {p} exceeds the supported maximum {MAX_PRIME}"
            )));
        }
        if !is_prime(p as u64) {
            return Err(Error::input(format!("modulus {p} is not prime")));
        }
        Ok(Field { p: p as u8 })
    }

    pub const fn gf2() -> Self {
        Field { p: 2 }
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn order(self) -> usize {
        self.p as usize
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        // a^(p-2) by square-and-multiply
        let mut base = a % self.p;
        let mut exp = self.p as u32 - 2;
        let mut acc = 1u8;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }
}

impl TryFrom<u16> for Field {
    type Error = Error;

    fn try_from(p: u16) -> Result<Self> {
        Field::new(p)
    }
}

impl From<Field> for u16 {
    fn from(f: Field) -> u16 {
        f.p as u16
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.p)
    }
}
