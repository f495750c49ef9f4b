//! Splitting of places in `E = F(sqrt(-d))` and integral solvability of the
//! equation over the completions of F_q(t).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::factor::{factorize_with_seed, is_irreducible};
use crate::instance::EquationInstance;
use crate::place::Place;
use crate::poly::Poly;
use crate::symbols::{hilbert_symbol, residue_symbol_unchecked, SymbolValue};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingType::Split => "split",
            SplittingType::Inert => "inert",
            SplittingType::Ramified => "ramified",
        })
    }
}

/// How a descent on `A X^2 + B Y^2 = N` over the valuation ring ended.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum DescentCase {
    /// Unit form, isotropic mod p: represents everything.
    Isotropic,
    /// Anisotropic unit form, target of even valuation.
    EvenValuation,
    /// Anisotropic unit form, target of odd valuation.
    OddValuation,
    /// `u X^2 = e` mod p with `u e` a square.
    ResidueSquare,
    /// `u X^2 = e` mod p with `u e` a nonsquare.
    ResidueNonSquare,
    /// Every term of the form is divisible by more of p than the target.
    ValuationGap,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum LocalMethod {
    /// `g = 0`
    Trivial,
    /// The place does not divide `a d n`.
    Unramified,
    Descent { steps: u32, case: DescentCase },
    /// Field-level test at infinity through `(-d, n)_inf`.
    InfiniteHilbert,
}

impl fmt::Display for LocalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalMethod::Trivial => f.write_str("trivial"),
            LocalMethod::Unramified => f.write_str("unit-form"),
            LocalMethod::Descent { steps, case } => write!(f, "descent({case:?}, steps={steps})"),
            LocalMethod::InfiniteHilbert => f.write_str("hilbert-at-infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalVerdict {
    pub place: Place,
    pub solvable: bool,
    pub method: LocalMethod,
    pub note: Option<String>,
}

pub fn splitting_type(inst: &EquationInstance, v: &Place) -> Result<SplittingType, Error> {
    let minus_d = inst.minus_d();
    match v {
        Place::Finite(p) => Ok(match residue_symbol_unchecked(&minus_d, p)? {
            SymbolValue::Plus => SplittingType::Split,
            SymbolValue::Minus => SplittingType::Inert,
            SymbolValue::Zero => SplittingType::Ramified,
        }),
        Place::Infinite => {
            let deg = minus_d.degree().expect("-d is not a square, hence nonzero");
            Ok(if deg % 2 == 1 {
                SplittingType::Ramified
            } else if !inst.field().is_square(minus_d.lc()?) {
                SplittingType::Inert
            } else {
                SplittingType::Split
            })
        }
    }
}

/// A single place of `E` lies above infinity.
pub fn is_imaginary(inst: &EquationInstance) -> bool {
    !matches!(splitting_type(inst, &Place::Infinite), Ok(SplittingType::Split))
}

/// Finite places dividing `a d n`, then infinity. Every place not listed has
/// a unit form and a unit target, so the equation is solvable there.
pub fn critical_places(inst: &EquationInstance) -> Result<Vec<Place>, Error> {
    if inst.n().is_zero() {
        return Err(Error::TrivialInstance);
    }
    let mut primes = BTreeSet::new();
    for f in [inst.a(), inst.d(), inst.n()] {
        for (p, _) in factorize_with_seed(f, inst.seed())?.factors {
            primes.insert(p);
        }
    }
    let mut out: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
    out.push(Place::Infinite);
    Ok(out)
}

/// Valuation and unit-part character of a nonzero element at `p`.
#[derive(Copy, Clone, Debug)]
struct Term {
    v: u32,
    chi: i8,
}

fn term(f: &Poly, p: &Poly) -> Result<Term, Error> {
    let (v, unit) = f.split_power(p)?;
    Ok(Term { v, chi: residue_symbol_unchecked(&unit, p)?.as_i8() })
}

fn val(f: &Poly, p: &Poly) -> Result<Option<u32>, Error> {
    f.valuation(p)
}

/// Solvability of `A X^2 + B Y^2 = N` over the valuation ring, given only the
/// valuations and unit characters. Each round strictly lowers `v(N)`.
fn descend(mut a: Term, mut b: Term, mut n: Term, chi_minus_one: i8) -> (bool, DescentCase, u32) {
    let mut steps = 0;
    loop {
        if a.v > b.v {
            core::mem::swap(&mut a, &mut b);
        }
        if a.v > 0 {
            if n.v < a.v {
                return (false, DescentCase::ValuationGap, steps);
            }
            b.v -= a.v;
            n.v -= a.v;
            a.v = 0;
        }
        if b.v == 0 {
            if chi_minus_one * a.chi * b.chi == 1 {
                return (true, DescentCase::Isotropic, steps);
            }
            return if n.v.is_multiple_of(2) {
                (true, DescentCase::EvenValuation, steps)
            } else {
                (false, DescentCase::OddValuation, steps)
            };
        }
        if n.v == 0 {
            return if a.chi * n.chi == 1 {
                (true, DescentCase::ResidueSquare, steps)
            } else {
                (false, DescentCase::ResidueNonSquare, steps)
            };
        }
        // A X^2 = 0 mod p forces X = pX'
        a.v += 2;
        steps += 1;
    }
}

fn local_solvable_finite(inst: &EquationInstance, p: &Poly) -> Result<LocalVerdict, Error> {
    let place = Place::Finite(p.clone());
    let (va, vb, vc) = (val(inst.a(), p)?, val(inst.b(), p)?, val(inst.c(), p)?);
    let lowest = [va, vb, vc].into_iter().flatten().min().expect("a is nonzero");
    // pick a diagonal entry of minimal valuation; if only b has it, the
    // unimodular change x -> x + y puts a + b + c in the y^2 slot
    let pivot = if va == Some(lowest) {
        inst.a().clone()
    } else if vc == Some(lowest) {
        inst.c().clone()
    } else {
        &(inst.a() + inst.b()) + inst.c()
    };
    let first = term(&pivot, p)?;
    let disc = term(inst.d(), p)?;
    if disc.v == 0 && first.v == 0 && inst.g().valuation(p)? == Some(0) {
        return Ok(LocalVerdict { place, solvable: true, method: LocalMethod::Unramified, note: None });
    }
    // completing the square: pivot X^2 + d/(4 pivot) Y^2
    let second = Term { v: disc.v - first.v, chi: disc.chi * first.chi };
    let target = term(&-inst.g(), p)?;
    let chi_minus_one = inst.field().minus_one_character(place.residue_degree());
    let (solvable, case, steps) = descend(first, second, target, chi_minus_one);
    Ok(LocalVerdict { place, solvable, method: LocalMethod::Descent { steps, case }, note: None })
}

/// Integral solvability at `v`. At infinity the whole completion is used.
pub fn local_solvable(inst: &EquationInstance, v: &Place) -> Result<LocalVerdict, Error> {
    if inst.g().is_zero() {
        return Ok(LocalVerdict { place: v.clone(), solvable: true, method: LocalMethod::Trivial, note: None });
    }
    match v {
        Place::Finite(p) => local_solvable_finite(inst, p),
        Place::Infinite => {
            let sym = hilbert_symbol(&inst.minus_d(), inst.n(), v)?;
            let note = (splitting_type(inst, v)? == SplittingType::Split).then(|| String::from("split at infinity"));
            Ok(LocalVerdict {
                place: Place::Infinite,
                solvable: sym == SymbolValue::Plus,
                method: LocalMethod::InfiniteHilbert,
                note,
            })
        }
    }
}

/// Local conditions at every critical place. On failure only the failing
/// verdicts are returned.
pub fn everywhere_locally_solvable(inst: &EquationInstance) -> Result<(bool, Vec<LocalVerdict>), Error> {
    if inst.n().is_zero() {
        return Ok((true, Vec::new()));
    }
    let verdicts = critical_places(inst)?
        .iter()
        .map(|v| local_solvable(inst, v))
        .collect::<Result<Vec<_>, _>>()?;
    if verdicts.iter().all(|v| v.solvable) {
        Ok((true, verdicts))
    } else {
        Ok((false, verdicts.into_iter().filter(|v| !v.solvable).collect()))
    }
}

/// Smallest precision `local_oracle` accepts: `v_p(4adn) + 3`.
pub fn minimum_oracle_precision(inst: &EquationInstance, p: &Poly) -> Result<u32, Error> {
    let mut total = 3;
    for f in [inst.a(), inst.d(), inst.n()] {
        total += val(f, p)?.unwrap_or(0);
    }
    Ok(total)
}

/// A precision at which `local_oracle` is also complete: a solution with
/// `min(v(f_x), v(f_y)) = m` satisfies `2m + 1 <= v(g) + 2 v(d) + 1`.
pub fn complete_oracle_precision(inst: &EquationInstance, p: &Poly) -> Result<u32, Error> {
    Ok(minimum_oracle_precision(inst, p)? + val(inst.d(), p)?.unwrap_or(0))
}

/// Brute-force local solvability at the finite place `p`.
///
/// Walks residue pairs modulo `p, p^2, ...` that keep the equation
/// divisible by the current power, and accepts a pair once it satisfies the
/// Hensel bound `v(f) >= 2m + 1` with `m = min(v(f_x), v(f_y))`.
pub fn local_oracle(inst: &EquationInstance, p: &Poly, precision: u32) -> Result<bool, Error> {
    if !p.is_monic() || p.is_constant() || !is_irreducible(p)? {
        return Err(Error::NotMonicIrreducible(p.to_string()));
    }
    if inst.g().is_zero() {
        return Ok(true);
    }
    let required = minimum_oracle_precision(inst, p)?;
    if precision < required {
        return Err(Error::PrecisionTooSmall { given: precision, required });
    }
    let field = inst.field();
    let q = field.q() as usize;
    let k = p.degree().expect("nonconstant");
    let residues: Vec<Poly> = (0..q.pow(k as u32))
        .map(|mut idx| {
            let coeffs = (0..k)
                .map(|_| {
                    let c = (idx % q) as u32;
                    idx /= q;
                    c
                })
                .collect();
            Poly::new(field, coeffs)
        })
        .collect();
    let search = Search { inst, p, residues: &residues, depth: precision };
    search.visit(0, &Poly::one(field), &Poly::zero(field), &Poly::zero(field))
}

struct Search<'a> {
    inst: &'a EquationInstance,
    p: &'a Poly,
    residues: &'a [Poly],
    depth: u32,
}

impl Search<'_> {
    fn accepts(&self, x: &Poly, y: &Poly) -> Result<bool, Error> {
        let value = self.inst.evaluate(x, y);
        let vf = match val(&value, self.p)? {
            None => return Ok(true),
            Some(v) => v,
        };
        let two = Poly::constant(self.inst.field(), 2);
        let fx = &(&two * &(self.inst.a() * x)) + &(self.inst.b() * y);
        let fy = &(self.inst.b() * x) + &(&two * &(self.inst.c() * y));
        let m = match (val(&fx, self.p)?, val(&fy, self.p)?) {
            (None, None) => return Ok(false),
            (a, b) => a.into_iter().chain(b).min().expect("one is finite"),
        };
        Ok(vf > 2 * m)
    }

    fn visit(&self, level: u32, pk: &Poly, x: &Poly, y: &Poly) -> Result<bool, Error> {
        if self.accepts(x, y)? {
            return Ok(true);
        }
        if level == self.depth {
            return Ok(false);
        }
        let next = pk * self.p;
        for r in self.residues {
            let x1 = x + &(pk * r);
            for s in self.residues {
                let y1 = y + &(pk * s);
                if self.inst.evaluate(&x1, &y1).rem(&next)?.is_zero() && self.visit(level + 1, &next, &x1, &y1)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}
