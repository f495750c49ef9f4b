#![allow(dead_code)]

use qforms_core::{is_irreducible, EquationInstance, Fq, Poly};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub fn f3() -> Fq {
    Fq::new(3).unwrap()
}

pub fn p3(c: &[i64]) -> Poly {
    Poly::from_i64(f3(), c)
}

/// `(t-1)(t^2-t-1)` over F_3.
pub fn big_d() -> Poly {
    p3(&[1, 0, 1, 1])
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform polynomial of degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, field: Fq, max_deg: usize) -> Poly {
    let coeffs = (0..=max_deg).map(|_| rng.next_u32() % field.q()).collect();
    Poly::new(field, coeffs)
}

pub fn random_nonzero(rng: &mut ChaCha8Rng, field: Fq, max_deg: usize) -> Poly {
    loop {
        let f = random_poly(rng, field, max_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

/// The `idx`-th polynomial in base-q digit order.
pub fn poly_from_index(field: Fq, mut idx: u64) -> Poly {
    let q = field.q() as u64;
    let mut coeffs = Vec::new();
    while idx > 0 {
        coeffs.push((idx % q) as u32);
        idx /= q;
    }
    Poly::new(field, coeffs)
}

/// Every polynomial of degree at most `max_deg`, zero first.
pub fn all_polys(field: Fq, max_deg: u32) -> impl Iterator<Item = Poly> {
    let count = (field.q() as u64).pow(max_deg + 1);
    (0..count).map(move |i| poly_from_index(field, i))
}

/// Monic irreducibles of degree `1..=max_deg`, by trial over all monics.
pub fn monic_irreducibles(field: Fq, max_deg: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for deg in 1..=max_deg {
        for i in 0..(field.q() as u64).pow(deg as u32) {
            let f = &poly_from_index(field, i) + &Poly::monomial(field, 1, deg);
            if is_irreducible(&f).unwrap() {
                out.push(f);
            }
        }
    }
    out
}

pub fn random_monic_irreducible(rng: &mut ChaCha8Rng, field: Fq, max_deg: usize) -> Poly {
    loop {
        let deg = 1 + (rng.next_u32() as usize % max_deg);
        let f = &random_poly(rng, field, deg - 1) + &Poly::monomial(field, 1, deg);
        if is_irreducible(&f).unwrap() {
            return f;
        }
    }
}

/// Random valid instance with every coefficient of degree at most `max_deg`
/// and `g` nonzero.
pub fn random_instance(rng: &mut ChaCha8Rng, field: Fq, max_deg: usize) -> EquationInstance {
    loop {
        let a = random_nonzero(rng, field, max_deg);
        let b = random_poly(rng, field, max_deg);
        let c = random_poly(rng, field, max_deg);
        let g = random_nonzero(rng, field, max_deg);
        if let Ok(inst) = EquationInstance::new(a, b, c, g) {
            return inst;
        }
    }
}
