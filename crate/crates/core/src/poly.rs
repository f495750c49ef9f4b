//! Dense univariate polynomials over F_q.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::field::Fq;

/// An element of F_q[t].
///
/// `coeffs[i]` is the coefficient of `t^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Fq,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, reducing each mod q.
    pub fn new(field: Fq, mut coeffs: Vec<u32>) -> Self {
        let q = field.q();
        for c in coeffs.iter_mut() {
            *c %= q;
        }
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: Fq, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    pub fn zero(field: Fq) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Fq) -> Self {
        Poly::constant(field, 1)
    }

    pub fn constant(field: Fq, c: u32) -> Self {
        Poly::new(field, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: Fq) -> Self {
        Poly::monomial(field, 1, 1)
    }

    /// `c * t^k`.
    pub fn monomial(field: Fq, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    fn trim(&mut self) {
        while let Some(&0) = self.coeffs.last() {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> Fq {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, with `None` for the zero polynomial. `None < Some(_)`, so the
    /// sentinel orders below every integer degree.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Result<u32, Error> {
        self.coeffs
            .last()
            .copied()
            .ok_or(Error::ZeroPolynomial("leading coefficient"))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn monic(&self) -> Result<Poly, Error> {
        let lc = self.lc()?;
        let inv = self.field.inv(lc).expect("nonzero leading coefficient");
        Ok(self.scale(inv))
    }

    fn same_field(&self, other: &Poly) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.q(), other.field.q()))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, Error> {
        self.same_field(other)?;
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, Error> {
        self.same_field(other)?;
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, Error> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let q = self.field.q() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % q;
            }
        }
        Ok(Poly::new(self.field, acc.into_iter().map(|c| c as u32).collect()))
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: u32) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field, coeffs }
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), Error> {
        self.same_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv = f.inv(divisor.coeffs[dd]).expect("nonzero leading coefficient");
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, inv);
            quot[i - dd] = factor;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(factor, dc));
            }
        }
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, Error> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly, otherwise `None`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>, Error> {
        let (quot, rem) = self.divrem(divisor)?;
        Ok(if rem.is_zero() { Some(quot) } else { None })
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, Error> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly), Error> {
        self.same_field(other)?;
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            let t2 = &t0 - &(&quot * &t1);
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
            t0 = core::mem::replace(&mut t1, t2);
        }
        match r0.lc() {
            Ok(lc) => {
                let inv = f.inv(lc).expect("nonzero");
                Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
            }
            Err(_) => Ok((r0, s0, t0)),
        }
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inv_mod(&self, modulus: &Poly) -> Result<Option<Poly>, Error> {
        let (g, s, _) = self.ext_gcd(modulus)?;
        if g.is_one() {
            Ok(Some(s.rem(modulus)?))
        } else {
            Ok(None)
        }
    }

    pub fn pow(&self, mut exp: u64) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly, Error> {
        self.checked_mul(other)?.rem(modulus)
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Result<Poly, Error> {
        let mut acc = Poly::one(self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Horner evaluation at `x` in F_q.
    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let q = f.q() as u64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, (i as u64 % q) as u32))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Splits off the largest power of `p`: returns `(v, self / p^v)`.
    pub fn split_power(&self, p: &Poly) -> Result<(u32, Poly), Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("valuation"));
        }
        if p.is_constant() {
            return Err(Error::ConstantPolynomial("valuation base"));
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (quot, rem) = cur.divrem(p)?;
            if !rem.is_zero() {
                return Ok((v, cur));
            }
            v += 1;
            cur = quot;
        }
    }

    /// Exponent of `p` in `self`; `None` for the zero polynomial.
    pub fn valuation(&self, p: &Poly) -> Result<Option<u32>, Error> {
        if self.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.split_power(p)?.0))
    }

    /// Square root with canonical leading coefficient, or `None` when `self`
    /// is not a square in F_q[t].
    ///
    /// Recovers the root top-down from the coefficients and verifies it with
    /// one multiplication; no factorization is involved.
    pub fn sqrt(&self) -> Option<Poly> {
        let f = self.field;
        let deg = match self.degree() {
            None => return Some(self.clone()),
            Some(d) => d,
        };
        if deg % 2 == 1 {
            return None;
        }
        let k = deg / 2;
        let top = f.sqrt(self.coeffs[deg])?;
        let inv_two_top = f.inv(f.mul(2, top)).expect("odd characteristic");
        let mut s = vec![0u32; k + 1];
        s[k] = top;
        for i in (0..k).rev() {
            // coefficient of t^(k+i) in s^2, excluding the two s_k*s_i terms
            let mut known = 0u32;
            for j in (i + 1)..k {
                let l = k + i - j;
                if l > i && l < k {
                    known = f.add(known, f.mul(s[j], s[l]));
                }
            }
            let target = f.sub(self.coeffs[k + i], known);
            s[i] = f.mul(target, inv_two_top);
        }
        let root = Poly::new(f, s);
        if &root * &root == *self {
            Some(root)
        } else {
            None
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by field, then degree (zero first), then coefficients from the top
/// term down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over the same field")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly { field: f, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Canonical text form: descending powers, residues in `[0, q)`, unit
/// coefficients omitted on non-constant terms, e.g. `2*t^3+t^2+2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}
