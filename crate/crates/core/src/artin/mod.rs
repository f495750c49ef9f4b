//! Artin conditions against explicit class field descriptions, the criterion
//! for `x^2 + D y^2 = l`, and the decision pipeline.

mod residue;
mod spec;

pub use spec::{ClassFieldSpec, SpecKind};

use alloc::format;
use alloc::string::ToString;
use core::fmt;

use crate::error::Error;
use crate::factor::{factorize, factorize_with_seed, is_irreducible};
use crate::field::Fq;
use crate::instance::EquationInstance;
use crate::local::{everywhere_locally_solvable, is_imaginary};
use crate::oracle::{enumerate_solutions, SolveReport, Stage, Verdict};
use crate::poly::Poly;
use crate::symbols::{residue_symbol_unchecked, SymbolValue};

/// Data at the infinite place attached to a prime `l` and `E = F(sqrt(-D))`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SignData {
    /// Residue degree of the place of `E` above infinity: 1 when ramified, 2
    /// when inert.
    pub d_infinity: usize,
    pub deg_star: usize,
    pub sgn_l: u32,
}

fn check_prime(l: &Poly) -> Result<(), Error> {
    if !l.is_monic() || l.is_constant() || !is_irreducible(l)? {
        return Err(Error::NotMonicIrreducible(l.to_string()));
    }
    Ok(())
}

pub fn sign_data(d: &Poly, l: &Poly) -> Result<SignData, Error> {
    if d.field() != l.field() {
        return Err(Error::FieldMismatch(d.field().q(), l.field().q()));
    }
    check_prime(l)?;
    let field = d.field();
    let minus_d = -d;
    let deg_d = d.degree().ok_or(Error::ZeroPolynomial("D"))?;
    let lc_minus_d = minus_d.lc()?;
    let d_infinity = if deg_d % 2 == 1 {
        1
    } else if !field.is_square(lc_minus_d) {
        2
    } else {
        return Err(Error::NotImaginary);
    };
    let deg_l = l.degree().expect("nonconstant");
    if !deg_l.is_multiple_of(d_infinity) {
        return Err(Error::NonIntegralDegStar { deg_l, d_infinity });
    }
    let deg_star = deg_l / d_infinity;
    let lc_inv = field.inv(lc_minus_d).expect("nonzero");
    let sgn_l = field.mul(l.lc()?, field.pow(lc_inv, deg_star as u64));
    Ok(SignData { d_infinity, deg_star, sgn_l })
}

/// Which branch of the criterion for `x^2 + D y^2 = l` was evaluated.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CriterionBranch {
    /// `sgn(l) (-1)^deg* l` is a square.
    SquareSign,
    /// `sgn(l) (-1)^deg* l` is a nonsquare.
    NonSquareSign,
    /// `deg* l` is not an integer, so `l` is not a local norm at infinity.
    InfinitePlace,
}

impl fmt::Display for CriterionBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriterionBranch::SquareSign => "square-sign",
            CriterionBranch::NonSquareSign => "nonsquare-sign",
            CriterionBranch::InfinitePlace => "infinite-place",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub branch: CriterionBranch,
    /// Whether `(l / r) = 1` for every prime `r | D`.
    pub residue_conditions: bool,
}

/// Whether `x^2 + D y^2 = l` is solvable, from residue symbols and the
/// splitting of `l` in the supplied class fields. `spec_plus` describes the
/// narrow field and `spec_hilbert` the wide one; they coincide when `deg D`
/// is odd.
pub fn criterion_x2_dy2(
    d: &Poly,
    l: &Poly,
    spec_plus: &ClassFieldSpec,
    spec_hilbert: &ClassFieldSpec,
) -> Result<CriterionOutcome, Error> {
    if !crate::factor::is_squarefree(d)? || d.is_constant() {
        return Err(Error::NotSquarefree(d.to_string()));
    }
    check_prime(l)?;
    if d.rem(l)?.is_zero() {
        return Err(Error::Ramified(l.to_string()));
    }
    let field = d.field();
    let sign = match sign_data(d, l) {
        Ok(s) => s,
        Err(Error::NonIntegralDegStar { .. }) => {
            return Ok(CriterionOutcome {
                holds: false,
                branch: CriterionBranch::InfinitePlace,
                residue_conditions: false,
            })
        }
        Err(e) => return Err(e),
    };
    let mut residue_conditions = true;
    for (r, _) in factorize(d)?.factors {
        if residue_symbol_unchecked(l, &r)? != SymbolValue::Plus {
            residue_conditions = false;
        }
    }
    let signed = if sign.deg_star % 2 == 0 { sign.sgn_l } else { field.neg(sign.sgn_l) };
    let (holds, branch) = if field.is_square(signed) {
        (residue_conditions && spec_plus.splits_completely(l)?, CriterionBranch::SquareSign)
    } else {
        let holds = residue_conditions
            && spec_hilbert.splits_completely(l)?
            && spec_plus.relative_degree(l)? == 2;
        (holds, CriterionBranch::NonSquareSign)
    };
    Ok(CriterionOutcome { holds, branch, residue_conditions })
}

/// True when `deg D` is odd or every prime factor of `D` has even degree.
pub fn hilbert_redundancy(d: &Poly) -> Result<bool, Error> {
    if d.is_constant() {
        return Err(Error::ConstantPolynomial("D"));
    }
    let fac = factorize(d)?;
    if !fac.is_squarefree() {
        return Err(Error::NotSquarefree(d.to_string()));
    }
    if d.degree().expect("nonconstant") % 2 == 1 {
        return Ok(true);
    }
    Ok(fac.factors.iter().all(|(p, _)| p.degree().expect("prime") % 2 == 0))
}

/// Checks that `spec` is a quadratic extension of the instance's `E`,
/// unramified everywhere, with `d` squarefree.
pub fn check_scope(inst: &EquationInstance, spec: &ClassFieldSpec) -> Result<(), Error> {
    let scope = |msg: &str| Err(Error::SpecScope(msg.to_string()));
    if spec.field() != inst.field() {
        return Err(Error::FieldMismatch(inst.field().q(), spec.field().q()));
    }
    let SpecKind::QuadraticKummer { m, .. } = spec.kind() else {
        return scope("only quadratic Kummer descriptions are evaluated");
    };
    if !is_imaginary(inst) {
        return Err(Error::NotImaginary);
    }
    let d_fac = factorize_with_seed(inst.d(), inst.seed())?;
    if !d_fac.is_squarefree() {
        return scope("d is not squarefree");
    }
    if !spec.same_base(inst.d()) {
        return scope("the description is over a different quadratic field");
    }
    for (p, e) in factorize_with_seed(m, inst.seed())?.factors {
        if e % 2 == 1 && d_fac.multiplicity(&p) == 0 {
            return Err(Error::SpecScope(format!("ramified at {p}")));
        }
    }
    let deg_m = m.degree().expect("nonconstant");
    let deg_d = inst.d().degree().expect("nonzero");
    if deg_m % 2 == 1 || (deg_d % 2 == 1 && !inst.field().is_square(m.lc()?)) {
        return scope("the place above infinity does not split");
    }
    Ok(())
}

/// Parity of the Artin sum: `v_p(n)` counted at every ramified prime with
/// Frobenius `-1` and every split prime inert in `K`.
pub fn artin_parity(inst: &EquationInstance, spec: &ClassFieldSpec) -> Result<u8, Error> {
    check_scope(inst, spec)?;
    let SpecKind::QuadraticKummer { m, .. } = spec.kind() else { unreachable!("scope checked") };
    if inst.n().is_zero() {
        return Ok(0);
    }
    let minus_d = inst.minus_d();
    let mut sum = 0u64;
    for (p, v) in factorize_with_seed(inst.n(), inst.seed())?.factors {
        let counts = match residue_symbol_unchecked(&minus_d, &p)? {
            SymbolValue::Zero => spec.ramified_frobenius(&p) == Some(SymbolValue::Minus),
            SymbolValue::Plus => residue_symbol_unchecked(m, &p)? == SymbolValue::Minus,
            SymbolValue::Minus => false,
        };
        if counts {
            sum += v as u64;
        }
    }
    Ok((sum % 2) as u8)
}

pub fn artin_condition_quadratic(inst: &EquationInstance, spec: &ClassFieldSpec) -> Result<bool, Error> {
    Ok(artin_parity(inst, spec)? == 0)
}

/// The explicit solvability conditions for `-x^2 + t x y - (t^3 - t^2 + 1) y^2 + g = 0` over
/// F_3, read directly off the factorization of `g`.
pub fn criterion_example_f3(g: &Poly) -> Result<bool, Error> {
    let f3 = Fq::new(3).expect("3 is prime");
    if g.field() != f3 {
        return Err(Error::FieldMismatch(3, g.field().q()));
    }
    if g.is_zero() {
        return Ok(true);
    }
    let p1 = Poly::from_i64(f3, &[-1, 1]);
    let p2 = Poly::from_i64(f3, &[-1, -1, 1]);
    let minus_d = -&(&p1 * &p2);
    // unit part of g at each ramified prime
    for p in [&p1, &p2] {
        let (v, unit) = g.split_power(p)?;
        if residue_symbol_unchecked(&unit, p)? != SymbolValue::parity(v as u64) {
            return Ok(false);
        }
    }
    let mut sum = 0u64;
    for (p, e) in factorize(g)?.factors {
        if p == p1 || p == p2 {
            sum += e as u64;
            continue;
        }
        let split = residue_symbol_unchecked(&minus_d, &p)? == SymbolValue::Plus;
        // odd multiplicity needs a split prime
        if e % 2 == 1 && !split {
            return Ok(false);
        }
        if split && residue_symbol_unchecked(&p2, &p)? == SymbolValue::Minus {
            sum += e as u64;
        }
    }
    // parity of the Artin sum
    Ok(sum.is_multiple_of(2))
}

/// Decides solvability.
///
/// Imaginary instances are always settled: by a local obstruction, by the
/// Artin condition when `spec` applies, or by the exhaustive search.
/// Solvable verdicts always carry witnesses. Other instances are checked
/// locally and then searched up to `bound`, so they can end up unknown.
pub fn decide(
    inst: &EquationInstance,
    spec: Option<&ClassFieldSpec>,
    bound: Option<u32>,
) -> Result<SolveReport, Error> {
    if inst.n().is_zero() {
        return enumerate_solutions(inst, None);
    }
    let parity = match spec {
        Some(s) if is_imaginary(inst) => match artin_parity(inst, s) {
            Ok(p) => Some(p),
            Err(Error::SpecScope(_)) | Err(Error::FieldMismatch(..)) => None,
            Err(e) => return Err(e),
        },
        _ => None,
    };
    let (locally_ok, failures) = everywhere_locally_solvable(inst)?;
    if !locally_ok {
        let mut report = SolveReport::new(Verdict::Unsolvable, Stage::Local, true);
        report.failed_place = failures.into_iter().next().map(|v| v.place);
        report.artin_parity = parity;
        return Ok(report);
    }
    if !is_imaginary(inst) {
        return enumerate_solutions(inst, Some(bound.ok_or(Error::MissingBound)?));
    }
    if parity == Some(1) {
        let mut report = SolveReport::new(Verdict::Unsolvable, Stage::Artin, true);
        report.artin_parity = parity;
        return Ok(report);
    }
    let mut report = enumerate_solutions(inst, None)?;
    report.artin_parity = parity;
    if parity.is_some() && report.verdict == Verdict::Solvable {
        report.stage = Stage::ArtinOracle;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::is_solvable_bruteforce;
    use alloc::vec::Vec;

    fn f3() -> Fq {
        Fq::new(3).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(f3(), c)
    }

    fn big_d() -> Poly {
        p(&[1, 0, 1, 1])
    }

    fn example(g: &[i64]) -> EquationInstance {
        EquationInstance::f3_example(p(g)).unwrap()
    }

    #[test]
    fn sign_data_examples() {
        let s = sign_data(&big_d(), &p(&[2, 2, 2, 1])).unwrap();
        assert_eq!(s, SignData { d_infinity: 1, deg_star: 3, sgn_l: 2 });
        let s = sign_data(&big_d(), &p(&[1, 0, 1])).unwrap();
        assert_eq!(s, SignData { d_infinity: 1, deg_star: 2, sgn_l: 1 });
        // D = t^2 + 1: -D has nonsquare leading coefficient -1 over F_3
        let err = sign_data(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap_err();
        assert_eq!(err, Error::NonIntegralDegStar { deg_l: 1, d_infinity: 2 });
        assert_eq!(sign_data(&p(&[-1, 0, -1]), &p(&[0, 1])), Err(Error::NotImaginary));
    }

    #[test]
    fn criterion_examples() {
        let spec = ClassFieldSpec::f3_example();
        let c = criterion_x2_dy2(&big_d(), &p(&[2, 2, 2, 1]), &spec, &spec).unwrap();
        assert!(c.holds);
        assert_eq!(c.branch, CriterionBranch::SquareSign);
        assert!(!criterion_x2_dy2(&big_d(), &p(&[1, 0, 1]), &spec, &spec).unwrap().holds);
        assert!(matches!(
            criterion_x2_dy2(&big_d(), &p(&[-1, 1]), &spec, &spec),
            Err(Error::Ramified(_))
        ));
    }

    #[test]
    fn redundancy() {
        assert!(hilbert_redundancy(&big_d()).unwrap());
        assert!(hilbert_redundancy(&(&p(&[1, 0, 1]) * &p(&[-1, -1, 1]))).unwrap());
        assert!(!hilbert_redundancy(&(&p(&[0, 1]) * &p(&[-1, 1]))).unwrap());
        assert!(hilbert_redundancy(&p(&[1, 2, 1])).is_err());
    }

    #[test]
    fn artin_examples() {
        let spec = ClassFieldSpec::f3_example();
        assert!(artin_condition_quadratic(&example(&[1]), &spec).unwrap());
        assert!(!artin_condition_quadratic(&example(&[-1, 1]), &spec).unwrap());
        let g = &p(&[-1, 1]) * &p(&[-1, -1, 1]);
        assert!(artin_condition_quadratic(&EquationInstance::f3_example(g).unwrap(), &spec).unwrap());
        let primitive = ClassFieldSpec::f3_example_primitive();
        assert!(matches!(artin_parity(&example(&[1]), &primitive), Err(Error::SpecScope(_))));
    }

    #[test]
    fn example_criterion() {
        assert!(criterion_example_f3(&p(&[1])).unwrap());
        assert!(!criterion_example_f3(&p(&[-1, 1])).unwrap());
        assert!(!criterion_example_f3(&p(&[0, 1])).unwrap());
        assert!(criterion_example_f3(&p(&[])).unwrap());
        assert!(criterion_example_f3(&(&p(&[-1, 1]) * &p(&[-1, -1, 1]))).unwrap());
    }

    #[test]
    fn example_criterion_matches_oracle_low_degree() {
        for idx in 0..243u32 {
            let mut coeffs = Vec::new();
            let mut k = idx;
            while k > 0 {
                coeffs.push((k % 3) as i64);
                k /= 3;
            }
            let g = p(&coeffs);
            let inst = EquationInstance::f3_example(g.clone()).unwrap();
            assert_eq!(criterion_example_f3(&g).unwrap(), is_solvable_bruteforce(&inst).unwrap(), "g = {g}");
        }
    }

    #[test]
    fn decide_examples() {
        let spec = ClassFieldSpec::f3_example();
        let r = decide(&example(&[1]), Some(&spec), None).unwrap();
        assert_eq!((r.verdict, r.stage), (Verdict::Solvable, Stage::ArtinOracle));
        assert_eq!((r.witnesses[0].x.clone(), r.witnesses[0].y.clone()), (p(&[1]), p(&[])));
        let r = decide(&example(&[-1, 1]), Some(&spec), None).unwrap();
        assert_eq!((r.verdict, r.stage), (Verdict::Unsolvable, Stage::Local));
        assert_eq!(r.failed_place, Some(crate::place::Place::Finite(p(&[-1, 1]))));
        assert_eq!(r.artin_parity, Some(1));
        let g = &p(&[-1, 1]) * &p(&[-1, -1, 1]);
        let inst = EquationInstance::f3_example(g).unwrap();
        let r = decide(&inst, Some(&spec), None).unwrap();
        assert_eq!(r.verdict, Verdict::Solvable);
        assert!(r.witnesses.iter().all(|w| w.verify(&inst)));
        let r = decide(&example(&[0, 1]), None, None).unwrap();
        assert_eq!(r.verdict, Verdict::Unsolvable);
    }
}
