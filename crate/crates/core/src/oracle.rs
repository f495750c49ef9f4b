//! Exhaustive search for global solutions.
//!
//! For an imaginary instance the leading terms of `x~^2` and `d y~^2` cannot
//! cancel, which caps both degrees by `deg n`; enumerating every `y~` under
//! that cap and extracting `x~` as a square root is then a complete decision
//! procedure.

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::error::Error;
use crate::field::Fq;
use crate::instance::EquationInstance;
use crate::local::is_imaginary;
use crate::place::Place;
use crate::poly::Poly;

/// A solution `(x, y)` together with its normalized coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: Poly,
    pub y: Poly,
    pub x_tilde: Poly,
    pub y_tilde: Poly,
}

impl Witness {
    pub fn new(inst: &EquationInstance, x: Poly, y: Poly) -> Self {
        let two = Poly::constant(inst.field(), 2);
        let x_tilde = &(&two * &(inst.a() * &x)) + &(inst.b() * &y);
        let y_tilde = y.clone();
        Witness { x, y, x_tilde, y_tilde }
    }

    /// Checks both the original and the normalized equation exactly.
    pub fn verify(&self, inst: &EquationInstance) -> bool {
        let original = inst.evaluate(&self.x, &self.y).is_zero();
        let normalized =
            &(&self.x_tilde * &self.x_tilde) + &(inst.d() * &(&self.y_tilde * &self.y_tilde)) == *inst.n();
        original && normalized
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Solvable,
    Unsolvable,
    UnknownWithinBound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Solvable => "solvable",
            Verdict::Unsolvable => "unsolvable",
            Verdict::UnknownWithinBound => "unknown",
        })
    }
}

/// Which part of the pipeline settled the verdict.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    /// `n = 0`
    Trivial,
    /// A local obstruction.
    Local,
    /// Local conditions hold, the Artin condition fails.
    Artin,
    /// The Artin condition holds and the search produced a witness.
    ArtinOracle,
    /// The exhaustive search alone.
    Oracle,
    /// A bounded, incomplete search on a non-imaginary instance.
    BoundedOracle,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Trivial => "trivial",
            Stage::Local => "local",
            Stage::Artin => "artin",
            Stage::ArtinOracle => "artin+oracle",
            Stage::Oracle => "oracle",
            Stage::BoundedOracle => "bounded-oracle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub failed_place: Option<Place>,
    /// Parity of the Artin sum, when a class field description applied.
    pub artin_parity: Option<u8>,
    pub complete: bool,
    pub stage: Stage,
    /// Filled in by callers that time the run.
    pub elapsed: Duration,
}

impl SolveReport {
    pub(crate) fn new(verdict: Verdict, stage: Stage, complete: bool) -> Self {
        SolveReport {
            verdict,
            witnesses: Vec::new(),
            failed_place: None,
            artin_parity: None,
            complete,
            stage,
            elapsed: Duration::ZERO,
        }
    }
}

/// `(floor(deg n / 2), floor((deg n - deg d) / 2))`; a negative second bound
/// means `y~ = 0` is forced.
pub fn degree_bounds(inst: &EquationInstance) -> Result<(i64, i64), Error> {
    if !is_imaginary(inst) {
        return Err(Error::NotImaginary);
    }
    let deg_n = inst.n().degree().ok_or(Error::TrivialInstance)? as i64;
    let deg_d = inst.d().degree().expect("d is nonzero") as i64;
    Ok((deg_n.div_euclid(2), (deg_n - deg_d).div_euclid(2)))
}

/// Every polynomial of degree at most `max_deg` (just zero when negative).
fn polys_up_to(field: Fq, max_deg: i64) -> Result<impl Iterator<Item = Poly>, Error> {
    let q = field.q() as u64;
    let count = if max_deg < 0 {
        1
    } else {
        u32::try_from(max_deg + 1)
            .ok()
            .and_then(|e| q.checked_pow(e))
            .ok_or(Error::SearchTooLarge)?
    };
    Ok((0..count).map(move |mut idx| {
        let mut coeffs = Vec::new();
        while idx > 0 {
            coeffs.push((idx % q) as u32);
            idx /= q;
        }
        Poly::new(field, coeffs)
    }))
}

/// Every solution within the degree bounds, ordered by `(y, x)`.
///
/// Complete for imaginary instances. Other instances need `bound_override`
/// (a cap on `deg y~`) and never report `Unsolvable`.
pub fn enumerate_solutions(inst: &EquationInstance, bound_override: Option<u32>) -> Result<SolveReport, Error> {
    let field = inst.field();
    if inst.n().is_zero() {
        let mut report = SolveReport::new(Verdict::Solvable, Stage::Trivial, true);
        report.witnesses.push(Witness::new(inst, Poly::zero(field), Poly::zero(field)));
        return Ok(report);
    }
    let imaginary = is_imaginary(inst);
    let y_bound = if imaginary {
        degree_bounds(inst)?.1
    } else {
        bound_override.ok_or(Error::MissingBound)? as i64
    };
    let two_a = &Poly::constant(field, 2) * inst.a();
    let mut witnesses = Vec::new();
    for y in polys_up_to(field, y_bound)? {
        let rest = inst.n() - &(inst.d() * &(&y * &y));
        let Some(root) = rest.sqrt() else { continue };
        let mut roots = alloc::vec![root.clone()];
        if !root.is_zero() {
            roots.push(-&root);
        }
        for x_tilde in roots {
            if let Some(x) = (&x_tilde - &(inst.b() * &y)).exact_div(&two_a)? {
                witnesses.push(Witness::new(inst, x, y.clone()));
            }
        }
    }
    witnesses.sort_by(|l, r| (&l.y, &l.x).cmp(&(&r.y, &r.x)));
    let verdict = match (witnesses.is_empty(), imaginary) {
        (false, _) => Verdict::Solvable,
        (true, true) => Verdict::Unsolvable,
        (true, false) => Verdict::UnknownWithinBound,
    };
    let stage = if imaginary { Stage::Oracle } else { Stage::BoundedOracle };
    let mut report = SolveReport::new(verdict, stage, imaginary);
    report.witnesses = witnesses;
    Ok(report)
}

pub fn is_solvable_bruteforce(inst: &EquationInstance) -> Result<bool, Error> {
    Ok(enumerate_solutions(inst, None)?.verdict == Verdict::Solvable)
}
