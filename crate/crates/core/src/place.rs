use core::fmt;

use alloc::string::ToString;

use crate::error::Error;
use crate::factor::is_irreducible;
use crate::poly::Poly;

/// A place of F_q(t): a monic irreducible polynomial, or the place at
/// infinity with valuation `-deg`.
///
/// Finite places sort by their polynomial; infinity sorts last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinite,
}

impl Place {
    /// Validated constructor for a finite place.
    pub fn finite(p: Poly) -> Result<Place, Error> {
        if !p.is_monic() || p.is_constant() || !is_irreducible(&p)? {
            return Err(Error::NotMonicIrreducible(p.to_string()));
        }
        Ok(Place::Finite(p))
    }

    pub fn prime(&self) -> Option<&Poly> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite => None,
        }
    }

    /// Degree of the residue field over F_q.
    pub fn residue_degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinite => 1,
        }
    }

    /// Valuation of a nonzero polynomial at this place.
    pub fn valuation(&self, f: &Poly) -> Result<i64, Error> {
        match self {
            Place::Finite(p) => Ok(f.split_power(p)?.0 as i64),
            Place::Infinite => f
                .degree()
                .map(|d| -(d as i64))
                .ok_or(Error::ZeroPolynomial("valuation")),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => f.write_str("inf"),
        }
    }
}
