//! Prime-field arithmetic context underlying every other module.
//!
//! Elements are canonical residues in `[0, q)` stored as `u64`; products go
//! through `u128` so any prime below `2^63` is safe.

use serde::{Deserialize, Serialize};

use crate::Error;

/// A canonical residue mod `q`.
pub type Elem = u64;

/// The prime field `F_q`. Immutable after construction; all operations are pure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Builds the field, verifying that `q` is prime.
    pub fn new(q: u64) -> Result<PrimeField, Error> {
        if q < 2 || !is_prime_u64(q) {
            return Err(Error::CompositeModulus(q));
        }
        Ok(PrimeField { q })
    }

    #[inline]
    pub fn q(self) -> u64 {
        self.q
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce_i128(self, x: i128) -> Elem {
        let q = self.q as i128;
        (((x % q) + q) % q) as Elem
    }

    #[inline]
    pub fn add(self, a: Elem, b: Elem) -> Elem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Elem, b: Elem) -> Elem {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: Elem) -> Elem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: Elem, b: Elem) -> Elem {
        ((a as u128 * b as u128) % self.q as u128) as Elem
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc: Elem = 1 % self.q;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(self, a: Elem) -> Result<Elem, Error> {
        if a % self.q == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(self, a: Elem, b: Elem) -> Result<Elem, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    // This witness set decides primality for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
