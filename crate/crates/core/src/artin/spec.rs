use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::residue::ResidueRing;
use crate::error::Error;
use crate::factor::{factorize, is_irreducible};
use crate::field::Fq;
use crate::poly::Poly;
use crate::symbols::{residue_symbol_unchecked, SymbolValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKind {
    /// `K = E(sqrt(m))`, with the Frobenius sign of each ramified prime of
    /// `E/F` supplied explicitly.
    QuadraticKummer {
        m: Poly,
        ramified_frob: Vec<(Poly, SymbolValue)>,
    },
    /// `K = E(alpha)` with `alpha` a root of `minpoly` (ascending coefficients
    /// in the auxiliary variable, each a polynomial in t).
    PrimitiveElement {
        minpoly: Vec<Poly>,
        group_orders: Vec<u32>,
    },
}

/// An explicit abelian extension `K` of `E = F(sqrt(-d))`, supplied as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFieldSpec {
    field: Fq,
    d: Poly,
    kind: SpecKind,
    label: String,
}

fn check_base(d: &Poly) -> Result<(), Error> {
    if d.is_zero() || (-d).sqrt().is_some() {
        return Err(Error::InvalidSpec("-d must be a nonsquare".into()));
    }
    Ok(())
}

impl ClassFieldSpec {
    pub fn quadratic_kummer(
        d: Poly,
        m: Poly,
        mut ramified_frob: Vec<(Poly, SymbolValue)>,
        label: impl Into<String>,
    ) -> Result<Self, Error> {
        check_base(&d)?;
        let field = d.field();
        if m.field() != field {
            return Err(Error::FieldMismatch(field.q(), m.field().q()));
        }
        if m.is_constant() {
            return Err(Error::InvalidSpec("Kummer generator must be nonconstant".into()));
        }
        if m.sqrt().is_some() {
            return Err(Error::InvalidSpec(alloc::format!("Kummer generator {m} is a square")));
        }
        ramified_frob.sort();
        let keys: Vec<Poly> = ramified_frob.iter().map(|(p, _)| p.clone()).collect();
        let primes: Vec<Poly> = factorize(&d)?.factors.into_iter().map(|(p, _)| p).collect();
        if keys != primes {
            return Err(Error::InvalidSpec(
                "ramified Frobenius data must be keyed exactly by the primes dividing d".into(),
            ));
        }
        if ramified_frob.iter().any(|(_, s)| *s == SymbolValue::Zero) {
            return Err(Error::InvalidSpec("Frobenius signs must be +1 or -1".into()));
        }
        Ok(ClassFieldSpec {
            field,
            d,
            kind: SpecKind::QuadraticKummer { m, ramified_frob },
            label: label.into(),
        })
    }

    pub fn primitive_element(
        d: Poly,
        minpoly: Vec<Poly>,
        group_orders: Vec<u32>,
        label: impl Into<String>,
    ) -> Result<Self, Error> {
        check_base(&d)?;
        let field = d.field();
        if minpoly.iter().any(|c| c.field() != field) {
            return Err(Error::InvalidSpec("coefficients over a different field".into()));
        }
        if minpoly.len() < 2 || !minpoly.last().is_some_and(|c| c.is_one()) {
            return Err(Error::InvalidSpec("minimal polynomial must be monic of positive degree".into()));
        }
        let degree = minpoly.len() - 1;
        let order: u64 = group_orders.iter().map(|&o| o as u64).product();
        if group_orders.is_empty() || order != degree as u64 {
            return Err(Error::InvalidSpec(alloc::format!(
                "group orders multiply to {order}, minimal polynomial has degree {degree}"
            )));
        }
        Ok(ClassFieldSpec {
            field,
            d,
            kind: SpecKind::PrimitiveElement { minpoly, group_orders },
            label: label.into(),
        })
    }

    /// Hilbert class field of `F_3(t)(sqrt(-(t-1)(t^2-t-1)))`, which is
    /// `E(sqrt(t^2-t-1))`; both ramified primes have Frobenius `-1`.
    pub fn f3_example() -> Self {
        let f3 = Fq::new(3).expect("3 is prime");
        let d = Poly::from_i64(f3, &[1, 0, 1, 1]);
        let m = Poly::from_i64(f3, &[-1, -1, 1]);
        let frob = alloc::vec![
            (Poly::from_i64(f3, &[-1, 1]), SymbolValue::Minus),
            (m.clone(), SymbolValue::Minus),
        ];
        ClassFieldSpec::quadratic_kummer(d, m, frob, "f3-example").expect("valid preset")
    }

    /// The same field through the minimal polynomial `X^2 - (t^2-t-1)`.
    pub fn f3_example_primitive() -> Self {
        let f3 = Fq::new(3).expect("3 is prime");
        let d = Poly::from_i64(f3, &[1, 0, 1, 1]);
        let minpoly = alloc::vec![Poly::from_i64(f3, &[1, 1, -1]), Poly::zero(f3), Poly::one(f3)];
        ClassFieldSpec::primitive_element(d, minpoly, alloc::vec![2], "f3-example-primitive")
            .expect("valid preset")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "f3-example" => Some(Self::f3_example()),
            "f3-example-primitive" => Some(Self::f3_example_primitive()),
            _ => None,
        }
    }

    pub fn field(&self) -> Fq {
        self.field
    }
    pub fn d(&self) -> &Poly {
        &self.d
    }
    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether `E = F(sqrt(-other_d))` is the base field of this description.
    pub fn same_base(&self, other_d: &Poly) -> bool {
        other_d.field() == self.field && (&self.d * other_d).sqrt().is_some()
    }

    /// Checks `l` is monic irreducible and unramified for this description,
    /// returning whether `l` splits in `E`.
    fn unramified_prime(&self, l: &Poly) -> Result<bool, Error> {
        if l.field() != self.field {
            return Err(Error::FieldMismatch(self.field.q(), l.field().q()));
        }
        if !l.is_monic() || l.is_constant() || !is_irreducible(l)? {
            return Err(Error::NotMonicIrreducible(l.to_string()));
        }
        match residue_symbol_unchecked(&-&self.d, l)? {
            SymbolValue::Zero => Err(Error::Ramified(l.to_string())),
            s => {
                if let SpecKind::QuadraticKummer { m, .. } = &self.kind {
                    if m.rem(l)?.is_zero() {
                        return Err(Error::Ramified(l.to_string()));
                    }
                }
                Ok(s == SymbolValue::Plus)
            }
        }
    }

    fn factor_degrees_mod(&self, l: &Poly) -> Result<Vec<usize>, Error> {
        match &self.kind {
            SpecKind::QuadraticKummer { m, .. } => Ok(match residue_symbol_unchecked(m, l)? {
                SymbolValue::Plus => alloc::vec![1, 1],
                _ => alloc::vec![2],
            }),
            SpecKind::PrimitiveElement { minpoly, .. } => {
                let ring = ResidueRing::new(l);
                ring.factor_degrees(&ring.reduce(minpoly)?)
            }
        }
    }

    /// `l` splits completely in `K`: it splits in `E`, and the defining
    /// polynomial splits into distinct linear factors modulo `l`.
    pub fn splits_completely(&self, l: &Poly) -> Result<bool, Error> {
        if !self.unramified_prime(l)? {
            return Ok(false);
        }
        Ok(self.factor_degrees_mod(l)?.iter().all(|&k| k == 1))
    }

    /// Residue degree in `K/E` of a prime above `l`; `l` must split in `E`.
    pub fn relative_degree(&self, l: &Poly) -> Result<usize, Error> {
        if !self.unramified_prime(l)? {
            return Err(Error::SpecScope(alloc::format!("{l} does not split in E")));
        }
        let degrees = self.factor_degrees_mod(l)?;
        let first = degrees[0];
        if degrees.iter().any(|&k| k != first) {
            return Err(Error::UnequalFactorDegrees(l.to_string()));
        }
        Ok(first)
    }

    /// Frobenius sign recorded for a ramified prime.
    pub fn ramified_frobenius(&self, p: &Poly) -> Option<SymbolValue> {
        match &self.kind {
            SpecKind::QuadraticKummer { ramified_frob, .. } => {
                ramified_frob.iter().find(|(r, _)| r == p).map(|(_, s)| *s)
            }
            SpecKind::PrimitiveElement { .. } => None,
        }
    }
}
