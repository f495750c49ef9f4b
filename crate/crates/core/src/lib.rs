//! Solvability of `a x^2 + b x y + c y^2 + g = 0` over F_q[t], q an odd
//! prime.
//!
//! The crate is `no_std` and only needs `alloc`. Polynomial arithmetic and
//! factorization live in [`poly`] and [`factor`], residue and Hilbert symbols
//! in [`symbols`], local solvability in [`local`], the exhaustive search in
//! [`oracle`] and the Artin conditions and decision pipeline in [`artin`].

#![no_std]

extern crate alloc;

pub mod artin;
pub mod error;
pub mod factor;
pub mod field;
pub mod instance;
pub mod local;
pub mod oracle;
pub mod place;
pub mod poly;
pub mod symbols;

pub use artin::{decide, ClassFieldSpec, SpecKind};
pub use error::Error;
pub use factor::{factorize, is_irreducible, FactoredPoly, DEFAULT_SEED};
pub use field::Fq;
pub use instance::EquationInstance;
pub use oracle::{SolveReport, Stage, Verdict, Witness};
pub use place::Place;
pub use poly::Poly;
pub use symbols::SymbolValue;
