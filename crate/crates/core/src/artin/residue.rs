//! Polynomials in an auxiliary variable `X` over the residue field
//! F_q[t]/(l), enough to read off the factorization pattern of a defining
//! polynomial modulo a prime.

use alloc::vec;
use alloc::vec::Vec;

use alloc::string::ToString;

use crate::error::Error;
use crate::poly::Poly;

pub(crate) struct ResidueRing<'a> {
    modulus: &'a Poly,
}

type XPoly = Vec<Poly>;

impl<'a> ResidueRing<'a> {
    pub(crate) fn new(modulus: &'a Poly) -> Self {
        ResidueRing { modulus }
    }

    fn zero(&self) -> Poly {
        Poly::zero(self.modulus.field())
    }

    fn trim(mut f: XPoly) -> XPoly {
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        f
    }

    pub(crate) fn reduce(&self, coeffs: &[Poly]) -> Result<XPoly, Error> {
        let out = coeffs.iter().map(|c| c.rem(self.modulus)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::trim(out))
    }

    fn add(&self, a: &[Poly], b: &[Poly]) -> XPoly {
        let n = a.len().max(b.len());
        let zero = self.zero();
        let out = (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect();
        Self::trim(out)
    }

    fn neg(&self, a: &[Poly]) -> XPoly {
        a.iter().map(|c| -c).collect()
    }

    fn mul(&self, a: &[Poly], b: &[Poly]) -> Result<XPoly, Error> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (&out[i + j] + &(x * y)).rem(self.modulus)?;
            }
        }
        Ok(Self::trim(out))
    }

    fn inv(&self, c: &Poly) -> Result<Poly, Error> {
        c.inv_mod(self.modulus)?.ok_or(Error::DivisionByZero)
    }

    fn rem(&self, a: &[Poly], b: &[Poly]) -> Result<XPoly, Error> {
        let lead = b.last().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.inv(lead)?;
        let mut r: XPoly = a.to_vec();
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let factor = r.last().expect("nonempty").mul_mod(&lead_inv, self.modulus)?;
            for (j, c) in b.iter().enumerate() {
                r[shift + j] = (&r[shift + j] - &(&factor * c)).rem(self.modulus)?;
            }
            r = Self::trim(r);
        }
        Ok(r)
    }

    fn monic(&self, a: XPoly) -> Result<XPoly, Error> {
        match a.last() {
            None => Ok(a),
            Some(lead) => {
                let inv = self.inv(lead)?;
                a.iter().map(|c| c.mul_mod(&inv, self.modulus)).collect()
            }
        }
    }

    fn gcd(&self, a: &[Poly], b: &[Poly]) -> Result<XPoly, Error> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        self.monic(x)
    }

    fn div_exact(&self, a: &[Poly], b: &[Poly]) -> Result<XPoly, Error> {
        let lead_inv = self.inv(b.last().ok_or(Error::DivisionByZero)?)?;
        let mut r: XPoly = a.to_vec();
        let mut quot = vec![self.zero(); a.len().saturating_sub(b.len()) + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let factor = r.last().expect("nonempty").mul_mod(&lead_inv, self.modulus)?;
            for (j, c) in b.iter().enumerate() {
                r[shift + j] = (&r[shift + j] - &(&factor * c)).rem(self.modulus)?;
            }
            quot[shift] = factor;
            r = Self::trim(r);
        }
        Ok(Self::trim(quot))
    }

    fn derivative(&self, a: &[Poly]) -> XPoly {
        let q = self.modulus.field().q() as u64;
        let out = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale((i as u64 % q) as u32))
            .collect();
        Self::trim(out)
    }

    fn pow_mod(&self, base: &[Poly], mut exp: u64, m: &[Poly]) -> Result<XPoly, Error> {
        let one = vec![Poly::one(self.modulus.field())];
        let mut acc = self.rem(&one, m)?;
        let mut b = self.rem(base, m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b)?, m)?;
            }
            exp >>= 1;
            if exp > 0 {
                b = self.rem(&self.mul(&b, &b)?, m)?;
            }
        }
        Ok(acc)
    }

    /// `f^Q mod m` with `Q = q^deg(l)` the residue field size.
    fn frobenius(&self, f: &[Poly], m: &[Poly]) -> Result<XPoly, Error> {
        let q = self.modulus.field().q() as u64;
        let k = self.modulus.degree().expect("nonconstant modulus");
        let mut cur = f.to_vec();
        for _ in 0..k {
            cur = self.pow_mod(&cur, q, m)?;
        }
        Ok(cur)
    }

    /// Degrees of the irreducible factors of a squarefree `h`, via
    /// distinct-degree splitting. A repeated factor is reported as `Ramified`.
    pub(crate) fn factor_degrees(&self, h: &[Poly]) -> Result<Vec<usize>, Error> {
        let h = self.monic(h.to_vec())?;
        if h.len() < 2 {
            return Err(Error::InvalidSpec("defining polynomial is constant modulo l".into()));
        }
        if self.gcd(&h, &self.derivative(&h))?.len() > 1 {
            return Err(Error::Ramified(self.modulus.to_string()));
        }
        let field = self.modulus.field();
        let x = vec![Poly::zero(field), Poly::one(field)];
        let mut rest = h;
        let mut power = self.rem(&x, &rest)?;
        let mut degrees = Vec::new();
        let mut j = 1;
        while rest.len() > 1 {
            let deg = rest.len() - 1;
            if deg < 2 * j {
                degrees.push(deg);
                break;
            }
            power = self.frobenius(&power, &rest)?;
            let g = self.gcd(&rest, &self.add(&power, &self.neg(&x)))?;
            let gdeg = g.len() - 1;
            if gdeg > 0 {
                degrees.extend(core::iter::repeat_n(j, gdeg / j));
                rest = self.div_exact(&rest, &g)?;
                power = self.rem(&power, &rest)?;
            }
            j += 1;
        }
        Ok(degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fq;

    #[test]
    fn patterns_over_f9() {
        let f3 = Fq::new(3).unwrap();
        let l = Poly::from_i64(f3, &[1, 0, 1]); // F_9
        let ring = ResidueRing::new(&l);
        let c = |v: &[i64]| Poly::from_i64(f3, v);
        // X^2 - t: t is a square in F_9? t^4 = 1 mod t^2+1, so yes
        let h = ring.reduce(&[c(&[0, -1]), c(&[]), c(&[1])]).unwrap();
        assert_eq!(ring.factor_degrees(&h).unwrap(), [1, 1]);
        // X^2 - (t+1): (t+1)^4 = -1 mod t^2+1, a nonsquare
        let h = ring.reduce(&[c(&[-1, -1]), c(&[]), c(&[1])]).unwrap();
        assert_eq!(ring.factor_degrees(&h).unwrap(), [2]);
        // (X - 1)^2 is not squarefree
        let h = ring.reduce(&[c(&[1]), c(&[-2]), c(&[1])]).unwrap();
        assert!(matches!(ring.factor_degrees(&h), Err(Error::Ramified(_))));
        // X^4 - 1 = (X-1)(X+1)(X^2+1), and X^2+1 splits in F_9
        let h = ring.reduce(&[c(&[-1]), c(&[]), c(&[]), c(&[]), c(&[1])]).unwrap();
        assert_eq!(ring.factor_degrees(&h).unwrap(), [1, 1, 1, 1]);
    }
}
