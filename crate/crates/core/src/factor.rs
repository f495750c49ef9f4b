//! Irreducibility testing and complete factorization in F_q[t].
//!
//! Factorization runs the classical three stages: squarefree decomposition
//! (with p-th root extraction when the derivative vanishes), distinct-degree
//! splitting, and Cantor-Zassenhaus equal-degree splitting driven by a seeded
//! ChaCha stream.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::field::Fq;
use crate::poly::Poly;

/// Seed used when the caller does not pick one ("QFORMS" in ASCII).
pub const DEFAULT_SEED: u64 = 0x5146_4f52_4d53;

/// `u * prod p_k^{m_k}` with monic irreducible, pairwise distinct `p_k`
/// sorted by degree and then coefficients from the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: u32,
    pub factors: Vec<(Poly, u32)>,
}

impl FactoredPoly {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: Fq) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(field, self.unit), |acc, (p, m)| &acc * &p.pow(*m as u64))
    }

    pub fn multiplicity(&self, p: &Poly) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == p)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// `x^q mod modulus`, applied `times` times.
fn frobenius(x: &Poly, times: usize, modulus: &Poly) -> Result<Poly, Error> {
    let q = x.field().q() as u64;
    let mut cur = x.rem(modulus)?;
    for _ in 0..times {
        cur = cur.pow_mod(q, modulus)?;
    }
    Ok(cur)
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly) -> Result<bool, Error> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial("irreducibility test")),
        Some(0) => return Err(Error::ConstantPolynomial("irreducibility test")),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic()?;
    let field = f.field();
    let t = Poly::t(field);
    // powers[i] = t^(q^i) mod f
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(t.rem(&f)?);
    for i in 0..n {
        let next = frobenius(&powers[i], 1, &f)?;
        powers.push(next);
    }
    if powers[n] != t.rem(&f)? {
        return Ok(false);
    }
    for r in prime_divisors(n) {
        let h = &powers[n / r] - &t;
        if !h.gcd(&f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pth_root(f: &Poly) -> Poly {
    let q = f.field().q() as usize;
    let coeffs = f.coeffs().iter().step_by(q).copied().collect();
    Poly::new(f.field(), coeffs)
}

/// Squarefree decomposition of a monic polynomial as `(part, multiplicity)`.
fn squarefree_parts(f: &Poly) -> Result<Vec<(Poly, u32)>, Error> {
    let field = f.field();
    let q = field.q();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        for (part, m) in squarefree_parts(&pth_root(f))? {
            out.push((part, m * q));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.exact_div(&c)?.expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?.expect("gcd divides");
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.exact_div(&y)?.expect("gcd divides");
        w = y;
    }
    if !c.is_one() {
        for (part, m) in squarefree_parts(&pth_root(&c))? {
            out.push((part, m * q));
        }
    }
    Ok(out)
}

/// Splits a monic squarefree polynomial into products of equal-degree factors.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>, Error> {
    let field = f.field();
    let t = Poly::t(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.rem(&rest)?;
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg < 2 * d {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        h = frobenius(&h, 1, &rest)?;
        let g = (&h - &t).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?.expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    Ok(out)
}

fn random_poly(field: Fq, below_degree: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = field.q() as u64;
    let coeffs = (0..below_degree).map(|_| (rng.next_u64() % q) as u32).collect();
    Poly::new(field, coeffs)
}

/// `a^((q^d - 1)/2) mod f`, computed as `(a * a^q * ... * a^(q^(d-1)))^((q-1)/2)`
/// so no exponent exceeds q.
pub(crate) fn half_order_power(a: &Poly, d: usize, f: &Poly) -> Result<Poly, Error> {
    let q = a.field().q() as u64;
    let mut cur = a.rem(f)?;
    let mut acc = cur.clone();
    for _ in 1..d {
        cur = frobenius(&cur, 1, f)?;
        acc = acc.mul_mod(&cur, f)?;
    }
    acc.pow_mod((q - 1) / 2, f)
}

/// Cantor-Zassenhaus splitting of a monic product of degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<(), Error> {
    let n = f.degree().expect("nonzero");
    if n == d {
        out.push(f.clone());
        return Ok(());
    }
    let field = f.field();
    loop {
        let a = random_poly(field, n, rng);
        if a.is_constant() {
            continue;
        }
        let b = &half_order_power(&a, d, f)? - &Poly::one(field);
        let g = b.gcd(f)?;
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let other = f.exact_div(&g)?.expect("gcd divides");
                equal_degree(&g, d, rng, out)?;
                equal_degree(&other, d, rng, out)?;
                return Ok(());
            }
        }
    }
}

pub fn factorize(f: &Poly) -> Result<FactoredPoly, Error> {
    factorize_with_seed(f, DEFAULT_SEED)
}

/// Complete factorization; the seed only steers equal-degree splitting, the
/// sorted result does not depend on it.
pub fn factorize_with_seed(f: &Poly, seed: u64) -> Result<FactoredPoly, Error> {
    let unit = f.lc().map_err(|_| Error::ZeroPolynomial("factorization"))?;
    let monic = f.monic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, m) in squarefree_parts(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            let mut irreducibles = Vec::new();
            equal_degree(&block, d, &mut rng, &mut irreducibles)?;
            factors.extend(irreducibles.into_iter().map(|p| (p, m)));
        }
    }
    factors.sort();
    let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
    for (p, m) in factors {
        match merged.last_mut() {
            Some((last, lm)) if *last == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    Ok(FactoredPoly { unit, factors: merged })
}

/// Distinct monic irreducible divisors of `f`, sorted.
pub fn prime_support(f: &Poly, seed: u64) -> Result<Vec<Poly>, Error> {
    Ok(factorize_with_seed(f, seed)?
        .factors
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

pub fn is_squarefree(f: &Poly) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree test"));
    }
    Ok(f.gcd(&f.derivative())?.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f3() -> Fq {
        Fq::new(3).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(f3(), c)
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p(&[-1, -1, 1])).unwrap());
        assert!(!is_irreducible(&p(&[-1, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[1, 0, 1])).unwrap());
        assert!(is_irreducible(&Poly::zero(f3())).is_err());
        assert!(is_irreducible(&p(&[2])).is_err());
    }

    #[test]
    fn t2_plus_1_has_no_roots() {
        let f = p(&[1, 0, 1]);
        assert!((0..3).all(|x| f.eval(x) != 0));
    }

    #[test]
    fn factor_examples() {
        let f = factorize(&p(&[1, 0, 1, 1])).unwrap();
        assert_eq!(f.unit, 1);
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[-1, -1, 1]), 1)]);

        let f = factorize(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[0, 1]), 3)]);

        let sq = &p(&[1, 0, 1]) * &p(&[1, 0, 1]);
        assert_eq!(sq, p(&[1, 0, 2, 0, 1]));
        let f = factorize(&sq).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, 1]), 2)]);

        assert!(factorize(&Poly::zero(f3())).is_err());
    }

    #[test]
    fn vanishing_derivative() {
        // (t^2+1)^3 * (t+1)^3 * 2 has f' = 0 over F_3
        let base = &p(&[1, 0, 1]) * &p(&[1, 1]);
        let f = base.pow(3).scale(2);
        assert!(f.derivative().is_zero());
        let fac = factorize(&f).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.factors, vec![(p(&[1, 1]), 3), (p(&[1, 0, 1]), 3)]);
        assert_eq!(fac.expand(f3()), f);

        // t^9 * (t+1)^4: mixed multiplicities across the p-th root branch
        let g = &p(&[0, 1]).pow(9) * &p(&[1, 1]).pow(4);
        let fac = factorize(&g).unwrap();
        assert_eq!(fac.factors, vec![(p(&[0, 1]), 9), (p(&[1, 1]), 4)]);
    }

    #[test]
    fn seed_does_not_change_output() {
        let f = &(&p(&[1, 0, 1]) * &p(&[-1, -1, 1])) * &(&p(&[2, 1, 0, 1]) * &p(&[1, 2, 0, 1]));
        let a = factorize_with_seed(&f, 1).unwrap();
        let b = factorize_with_seed(&f, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.expand(f3()), f);
    }
}
