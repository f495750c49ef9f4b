//! The prime field F_q for an odd prime q.

use crate::error::Error;

/// Residue ring Z/qZ with q an odd prime below 2^31.
///
/// Elements are plain `u32` residues in `[0, q)`; the struct only carries the
/// modulus, so it is `Copy` and cheap to pass around.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq {
    q: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Fq {
    pub fn new(q: u64) -> Result<Self, Error> {
        if !(3..(1 << 31)).contains(&q) || !is_prime(q) {
            return Err(Error::NotOddPrime(q));
        }
        Ok(Fq { q: q as u32 })
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    /// Reduces an arbitrary signed integer into `[0, q)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.q - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.q) {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    /// Legendre symbol of `a` as -1, 0 or 1.
    pub fn legendre(self, a: u32) -> i8 {
        let a = a % self.q;
        if a == 0 {
            return 0;
        }
        if self.pow(a, (self.q as u64 - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(self, a: u32) -> bool {
        self.legendre(a) >= 0
    }

    /// Square root by Tonelli-Shanks, returning the smaller of the two roots.
    pub fn sqrt(self, a: u32) -> Option<u32> {
        let a = a % self.q;
        if a == 0 {
            return Some(0);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let p = self.q as u64;
        let mut s = 0u32;
        let mut odd = p - 1;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let mut z = 2u32;
        while self.legendre(z) != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r.min(self.q - r))
    }

    /// Quadratic character of -1 in the extension of degree `k`.
    pub fn minus_one_character(self, k: usize) -> i8 {
        if k.is_multiple_of(2) {
            1
        } else {
            self.legendre(self.q - 1)
        }
    }
}

impl core::fmt::Display for Fq {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_and_composite() {
        assert!(Fq::new(2).is_err());
        assert!(Fq::new(9).is_err());
        assert!(Fq::new(1).is_err());
        assert!(Fq::new(1 << 31).is_err());
        assert!(Fq::new(2_147_483_647).is_ok());
    }

    #[test]
    fn sqrt_is_canonical() {
        for q in [3u64, 5, 7, 13, 17, 97, 65537] {
            let f = Fq::new(q).unwrap();
            for a in 0..(q.min(500) as u32) {
                match f.sqrt(a) {
                    Some(r) => {
                        assert_eq!(f.mul(r, r), a);
                        assert!(r <= f.neg(r) || r == 0);
                    }
                    None => assert_eq!(f.legendre(a), -1),
                }
            }
        }
    }

    #[test]
    fn minus_one() {
        let f3 = Fq::new(3).unwrap();
        assert_eq!(f3.minus_one_character(1), -1);
        assert_eq!(f3.minus_one_character(2), 1);
        let f5 = Fq::new(5).unwrap();
        assert_eq!(f5.minus_one_character(1), 1);
    }
}
