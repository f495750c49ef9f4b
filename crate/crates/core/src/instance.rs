use crate::error::Error;
use crate::factor::DEFAULT_SEED;
use crate::field::Fq;
use crate::poly::Poly;

/// The equation `a x^2 + b x y + c y^2 + g = 0` over F_q[t].
///
/// `d` and `n` are derived once at construction: `-d = b^2 - 4ac` and
/// `n = -4ag`, so that with `x~ = 2ax + by`, `y~ = y` the equation becomes
/// `x~^2 + d y~^2 = n`. The seed drives every factorization done on behalf of
/// this instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInstance {
    field: Fq,
    a: Poly,
    b: Poly,
    c: Poly,
    g: Poly,
    d: Poly,
    n: Poly,
    seed: u64,
}

impl EquationInstance {
    pub fn new(a: Poly, b: Poly, c: Poly, g: Poly) -> Result<Self, Error> {
        let field = a.field();
        for other in [&b, &c, &g] {
            if other.field() != field {
                return Err(Error::FieldMismatch(field.q(), other.field().q()));
            }
        }
        if a.is_zero() {
            return Err(Error::InvalidInstance("a must be nonzero"));
        }
        let four = Poly::constant(field, 4);
        let minus_d = &(&b * &b) - &(&four * &(&a * &c));
        if minus_d.sqrt().is_some() {
            return Err(Error::InvalidInstance("b^2 - 4ac must not be a square"));
        }
        let d = -minus_d;
        let n = -(&four * &(&a * &g));
        Ok(EquationInstance { field, a, b, c, g, d, n, seed: DEFAULT_SEED })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn field(&self) -> Fq {
        self.field
    }
    pub fn a(&self) -> &Poly {
        &self.a
    }
    pub fn b(&self) -> &Poly {
        &self.b
    }
    pub fn c(&self) -> &Poly {
        &self.c
    }
    pub fn g(&self) -> &Poly {
        &self.g
    }
    pub fn d(&self) -> &Poly {
        &self.d
    }
    pub fn n(&self) -> &Poly {
        &self.n
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `b^2 - 4ac`
    pub fn minus_d(&self) -> Poly {
        -&self.d
    }

    /// `a x^2 + b x y + c y^2 + g`
    pub fn evaluate(&self, x: &Poly, y: &Poly) -> Poly {
        &(&(&(&self.a * &(x * x)) + &(&self.b * &(x * y))) + &(&self.c * &(y * y))) + &self.g
    }

    /// The same quadratic form with a different constant term.
    pub fn with_g(&self, g: Poly) -> Result<Self, Error> {
        Ok(EquationInstance::new(self.a.clone(), self.b.clone(), self.c.clone(), g)?.with_seed(self.seed))
    }

    /// `-x^2 + t x y - (t^3 - t^2 + 1) y^2 + g = 0` over F_3.
    pub fn f3_example(g: Poly) -> Result<Self, Error> {
        let f3 = Fq::new(3).expect("3 is prime");
        if g.field() != f3 {
            return Err(Error::FieldMismatch(3, g.field().q()));
        }
        EquationInstance::new(
            Poly::from_i64(f3, &[-1]),
            Poly::t(f3),
            Poly::from_i64(f3, &[-1, 0, 1, -1]),
            g,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_invariants() {
        let f3 = Fq::new(3).unwrap();
        let inst = EquationInstance::f3_example(Poly::one(f3)).unwrap();
        // -d = -(t-1)(t^2-t-1)
        let prod = &Poly::from_i64(f3, &[-1, 1]) * &Poly::from_i64(f3, &[-1, -1, 1]);
        assert_eq!(inst.d(), &prod);
        assert_eq!(inst.n(), &Poly::one(f3));
        assert_eq!(inst.c(), &Poly::from_i64(f3, &[2, 0, 1, 2]));
    }

    #[test]
    fn rejects_square_discriminant_and_zero_a() {
        let f3 = Fq::new(3).unwrap();
        let one = Poly::one(f3);
        let zero = Poly::zero(f3);
        // x^2 - y^2: b^2 - 4ac = 4, a square
        assert!(EquationInstance::new(one.clone(), zero.clone(), -&one, one.clone()).is_err());
        assert!(EquationInstance::new(zero.clone(), one.clone(), one.clone(), one.clone()).is_err());
        let f5 = Poly::one(Fq::new(5).unwrap());
        assert!(EquationInstance::new(one.clone(), zero, one.clone(), f5).is_err());
    }
}
