//! Seeded random elements for property checks.
//!
//! All randomness flows through [`Rng`], a ChaCha8 stream seeded from a
//! `u64`, so every check is reproducible from its seed.

use std::sync::Arc;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::Blade;
use crate::scalar::{GaussianRational, Monomial, Ring, SymbolicScalar, LinearExponent};
use crate::tensor::{CVForm, PairedBlade, Space};

/// Name of the generator, recorded in report headers.
pub const PRNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3)";

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Which blades a random element may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// Form blades only (value factor is the unit).
    FormOnly,
    /// Blade-diagonal pairs only.
    Mirror,
    /// Any pair.
    Any,
}

/// Small rational in `[-3, 3]` with denominator 1, 2 or 3.
pub fn small_rational(rng: &mut Rng) -> GaussianRational {
    let den = rng.gen_range(1..=3);
    GaussianRational::from_parts(rng.gen_range(-3..=3), den, 0, 1)
}

/// Small Gaussian rational, real half of the time.
pub fn small_gaussian(rng: &mut Rng) -> GaussianRational {
    let re = small_rational(rng);
    if rng.gen_bool(0.5) {
        re
    } else {
        &re + &(&small_rational(rng) * &GaussianRational::i())
    }
}

/// Random polynomial with up to `max_terms` monomials of degree `<= max_degree`.
pub fn polynomial(
    rng: &mut Rng,
    arity: usize,
    max_degree: u32,
    max_terms: usize,
    complex: bool,
) -> SymbolicScalar {
    let mut out = SymbolicScalar::zero().with_arity(arity);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let degree = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; arity];
        for _ in 0..degree {
            exps[rng.gen_range(0..arity)] += 1;
        }
        let c = if complex {
            small_gaussian(rng)
        } else {
            small_rational(rng)
        };
        out = out.add(&SymbolicScalar::term(arity, Monomial::new(exps), LinearExponent::zero(), c));
    }
    out
}

/// Polynomial times, occasionally, `exp` of a random linear form.
pub fn symbolic(rng: &mut Rng, arity: usize, max_degree: u32) -> SymbolicScalar {
    let p = polynomial(rng, arity, max_degree, 3, true);
    if rng.gen_bool(0.3) {
        let idx = rng.gen_range(0..arity);
        let l = LinearExponent::from_coeffs([(idx, small_gaussian(rng))]);
        p.mul(&SymbolicScalar::exp_linear(arity, l))
    } else {
        p
    }
}

pub fn blade_pair(rng: &mut Rng, space: &Space, support: Support) -> PairedBlade {
    let n = space.dim();
    let form = Blade(rng.gen_range(0..(1u16 << n)) as u8);
    let value = match support {
        Support::FormOnly => Blade::UNIT,
        Support::Mirror => form,
        Support::Any => Blade(rng.gen_range(0..(1u16 << n)) as u8),
    };
    PairedBlade::new(form, value)
}

/// Random element with up to `max_terms` terms and polynomial coefficients.
pub fn cvform(
    rng: &mut Rng,
    space: &Arc<Space>,
    support: Support,
    max_terms: usize,
    max_degree: u32,
) -> CVForm<SymbolicScalar> {
    let mut out = CVForm::zero(space.clone());
    for _ in 0..rng.gen_range(1..=max_terms) {
        let b = blade_pair(rng, space, support);
        let c = polynomial(rng, space.dim(), max_degree, 2, true);
        out.add_term(b, c);
    }
    out
}

/// Random element with constant Gaussian-rational coefficients.
pub fn constant_cvform(
    rng: &mut Rng,
    space: &Arc<Space>,
    support: Support,
    max_terms: usize,
) -> CVForm<GaussianRational> {
    let mut out = CVForm::zero(space.clone());
    for _ in 0..rng.gen_range(1..=max_terms) {
        let b = blade_pair(rng, space, support);
        out.add_term(b, small_gaussian(rng));
    }
    out
}

/// Random homogeneous element of form grade `grade`.
pub fn homogeneous_cvform(
    rng: &mut Rng,
    space: &Arc<Space>,
    grade: usize,
    max_terms: usize,
    max_degree: u32,
) -> CVForm<SymbolicScalar> {
    let blades: Vec<Blade> = space
        .form_sig()
        .blades()
        .filter(|b| b.grade() == grade)
        .collect();
    let mut out = CVForm::zero(space.clone());
    for _ in 0..rng.gen_range(1..=max_terms) {
        let b = blades[rng.gen_range(0..blades.len())];
        out.add_term(
            PairedBlade::new(b, Blade::UNIT),
            polynomial(rng, space.dim(), max_degree, 2, true),
        );
    }
    out
}
