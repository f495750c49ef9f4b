//! Quadratic residue symbols over F_q[t] and quadratic Hilbert symbols at the
//! places of F_q(t).

use core::fmt;
use core::ops::Mul;

use alloc::string::ToString;

use crate::error::Error;
use crate::factor::{factorize_with_seed, half_order_power, is_irreducible, DEFAULT_SEED};
use crate::place::Place;
use crate::poly::Poly;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolValue {
    Minus,
    Zero,
    Plus,
}

impl SymbolValue {
    pub fn as_i8(self) -> i8 {
        match self {
            SymbolValue::Minus => -1,
            SymbolValue::Zero => 0,
            SymbolValue::Plus => 1,
        }
    }

    pub fn from_sign(s: i8) -> SymbolValue {
        match s.signum() {
            1 => SymbolValue::Plus,
            -1 => SymbolValue::Minus,
            _ => SymbolValue::Zero,
        }
    }

    /// `(-1)^k`
    pub fn parity(k: u64) -> SymbolValue {
        if k.is_multiple_of(2) {
            SymbolValue::Plus
        } else {
            SymbolValue::Minus
        }
    }

    pub fn pow(self, k: u64) -> SymbolValue {
        match self {
            SymbolValue::Minus => SymbolValue::parity(k),
            SymbolValue::Zero if k == 0 => SymbolValue::Plus,
            s => s,
        }
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;
    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        SymbolValue::from_sign(self.as_i8() * rhs.as_i8())
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// Euler criterion in F_q[t]/(p) without validating `p`.
pub(crate) fn residue_symbol_unchecked(f: &Poly, p: &Poly) -> Result<SymbolValue, Error> {
    let r = f.rem(p)?;
    if r.is_zero() {
        return Ok(SymbolValue::Zero);
    }
    let deg = p.degree().expect("nonconstant modulus");
    let e = half_order_power(&r, deg, p)?;
    Ok(if e.is_one() { SymbolValue::Plus } else { SymbolValue::Minus })
}

/// `(f / p)` for a monic irreducible `p`.
pub fn residue_symbol(f: &Poly, p: &Poly) -> Result<SymbolValue, Error> {
    if !p.is_monic() || p.is_constant() || !is_irreducible(p)? {
        return Err(Error::NotMonicIrreducible(p.to_string()));
    }
    residue_symbol_unchecked(f, p)
}

/// Multiplicative extension of the residue symbol over the factorization of `m`.
pub fn jacobi_symbol(f: &Poly, m: &Poly) -> Result<SymbolValue, Error> {
    jacobi_symbol_with_seed(f, m, DEFAULT_SEED)
}

pub fn jacobi_symbol_with_seed(f: &Poly, m: &Poly, seed: u64) -> Result<SymbolValue, Error> {
    if m.is_constant() {
        return Err(Error::ConstantPolynomial("Jacobi modulus"));
    }
    let mut acc = SymbolValue::Plus;
    for (p, e) in factorize_with_seed(m, seed)?.factors {
        acc = acc * residue_symbol_unchecked(f, &p)?.pow(e as u64);
        if acc == SymbolValue::Zero {
            break;
        }
    }
    Ok(acc)
}

/// Quadratic character of the residue of a unit at `v`.
fn unit_character(unit: &Poly, v: &Place) -> Result<SymbolValue, Error> {
    match v {
        Place::Finite(p) => residue_symbol_unchecked(unit, p),
        Place::Infinite => {
            let field = unit.field();
            Ok(SymbolValue::from_sign(field.legendre(unit.lc()?)))
        }
    }
}

/// The tame quadratic Hilbert symbol `(a, b)_v`.
///
/// With `a = pi^alpha u` and `b = pi^beta w` for units `u, w`, the value is
/// `chi(-1)^(alpha beta) chi(u)^beta chi(w)^alpha`. At infinity the
/// uniformizer is `1/t`, so `alpha = -deg a` and `u` reduces to `lc(a)`.
pub fn hilbert_symbol(a: &Poly, b: &Poly, v: &Place) -> Result<SymbolValue, Error> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial("Hilbert symbol"));
    }
    let field = a.field();
    let (alpha, u, beta, w) = match v {
        Place::Finite(p) => {
            let (alpha, u) = a.split_power(p)?;
            let (beta, w) = b.split_power(p)?;
            (alpha as u64, u, beta as u64, w)
        }
        Place::Infinite => (
            a.degree().expect("nonzero") as u64,
            a.clone(),
            b.degree().expect("nonzero") as u64,
            b.clone(),
        ),
    };
    let minus_one = SymbolValue::from_sign(field.minus_one_character(v.residue_degree()));
    Ok(minus_one.pow(alpha * beta) * unit_character(&u, v)?.pow(beta) * unit_character(&w, v)?.pow(alpha))
}
