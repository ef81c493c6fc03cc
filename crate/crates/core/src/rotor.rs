//! Reflections, rotors and conjugations in the Euclidean tangent algebra,
//! in binary64 (complex binary64 where the idempotents need `i`).

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num::complex::Complex64;
use rand::Rng as _;

use crate::clifford::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::sample::Rng;
use crate::scalar::FloatLike;

/// Absolute tolerance per coefficient.
pub const TOL: f64 = 1e-12;

pub type Mv = Multivector<f64>;
pub type CMv = Multivector<Complex64>;

/// `a1, a2, a3` with unit squares.
pub fn tangent3() -> Arc<Signature> {
    Arc::new(Signature::euclidean3_tangent())
}

/// `a_axis` for `axis` in `1..=3`.
pub fn axis_vector(sig: &Arc<Signature>, axis: usize) -> Result<Mv> {
    if !(1..=sig.n()).contains(&axis) {
        return Err(Error::InvalidAxis(axis));
    }
    Multivector::generator(sig.clone(), axis - 1)
}

pub fn max_deviation<F: FloatLike>(a: &Multivector<F>, b: &Multivector<F>) -> f64 {
    a.sub(b)
        .terms()
        .map(|(_, c)| c.abs_diff(&F::zero()))
        .fold(0.0, f64::max)
}

pub fn approx_eq<F: FloatLike>(a: &Multivector<F>, b: &Multivector<F>) -> bool {
    max_deviation(a, b) <= TOL
}

/// `sqrt(⟨u ũ⟩₀)`.
pub fn norm(u: &Mv) -> f64 {
    u.gp(&u.reverse()).scalar_part().abs().sqrt()
}

pub fn complexify(u: &Mv) -> CMv {
    u.map_ring(|c| Complex64::new(*c, 0.0))
}

/// `cos(φ/2) + sin(φ/2) a_i a_j`, with the sandwich `R⁻¹ u R`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rotor {
    element: Mv,
    plane: Option<(usize, usize)>,
    angle: Option<f64>,
}

impl Rotor {
    pub fn in_plane(sig: &Arc<Signature>, i: usize, j: usize, angle: f64) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidPlane(i, j));
        }
        let bivector = axis_vector(sig, i)?.gp(&axis_vector(sig, j)?);
        let element = Mv::scalar(sig.clone(), (angle / 2.0).cos()).add(&bivector.scale(&(angle / 2.0).sin()));
        Ok(Self {
            element,
            plane: Some((i, j)),
            angle: Some(angle),
        })
    }

    /// Any element with `R̃ R = 1` within tolerance.
    pub fn from_element(element: Mv) -> Result<Self> {
        let one = Mv::one(element.signature().clone());
        if !approx_eq(&element.reverse().gp(&element), &one) {
            return Err(Error::Singular);
        }
        Ok(Self {
            element,
            plane: None,
            angle: None,
        })
    }

    pub fn element(&self) -> &Mv {
        &self.element
    }

    pub fn plane(&self) -> Option<(usize, usize)> {
        self.plane
    }

    pub fn angle(&self) -> Option<f64> {
        self.angle
    }

    /// `R⁻¹ = R̃` for a unit rotor.
    pub fn inverse(&self) -> Mv {
        self.element.reverse()
    }

    /// `self ∨ other`: rotating by `self` then `other`.
    pub fn compose(&self, other: &Rotor) -> Rotor {
        Rotor {
            element: self.element.gp(&other.element),
            plane: None,
            angle: None,
        }
    }

    /// Unit bivector `a_i a_j` of the rotation plane.
    pub fn bivector(&self) -> Option<Mv> {
        let (i, j) = self.plane?;
        let sig = self.element.signature();
        Some(axis_vector(sig, i).ok()?.gp(&axis_vector(sig, j).ok()?))
    }
}

/// `t u t` for a unit vector `t`.
pub fn reflect_direction(u: &Mv, t: &Mv) -> Result<Mv> {
    if t.homogeneous_grade() != Some(1) {
        return Err(Error::NotUnitVector(format!("{t:?} is not a vector")));
    }
    let one = Mv::one(t.signature().clone());
    if !approx_eq(&t.gp(t), &one) {
        return Err(Error::NotUnitVector(format!("t∨t = {:?}", t.gp(t))));
    }
    Ok(t.gp(u).gp(t))
}

/// `R⁻¹ u R`.
pub fn rotate(u: &Mv, r: &Rotor) -> Mv {
    r.inverse().gp(u).gp(&r.element)
}

/// `R⁻¹ (A e) R` against `(R⁻¹ A R) e` for both `e = ½(1 ± iΣ)`.
pub fn ideal_invariance_check(a: &Mv, r: &Rotor, sigma: &Mv) -> Result<CheckReport> {
    const ANCHOR: &str = "R⁻¹(A e)R = (R⁻¹AR) e, e = ½(1±iΣ)";
    let sig = sigma.signature().clone();
    let minus_one = Mv::scalar(sig.clone(), -1.0);
    if !approx_eq(&sigma.gp(sigma), &minus_one) {
        return Err(Error::BadSquare {
            expected: -1,
            detail: format!("{:?}", sigma.gp(sigma)),
        });
    }
    let (ca, cs) = (complexify(a), complexify(sigma));
    let (rc, ric) = (complexify(&r.element), complexify(&r.inverse()));
    let half = Complex64::new(0.5, 0.0);
    let mut worst = 0.0_f64;
    let mut sides = (String::new(), String::new());
    for sign in [1.0, -1.0] {
        let e = CMv::one(sig.clone())
            .add(&cs.scale(&Complex64::new(0.0, sign)))
            .scale(&half);
        let lhs = ric.gp(&ca.gp(&e)).gp(&rc);
        let rhs = ric.gp(&ca).gp(&rc).gp(&e);
        let dev = max_deviation(&lhs, &rhs);
        if dev >= worst {
            worst = dev;
            sides = (lhs.to_string(), rhs.to_string());
        }
    }
    Ok(CheckReport::boolean(
        "EQ50",
        ANCHOR,
        worst <= TOL,
        sides.0,
        sides.1,
        format!("max deviation {worst:e}"),
    ))
}

/// Inverse of a general element, by solving `R x = 1` for left
/// multiplication over the blade basis.
pub fn inverse(r: &Mv) -> Result<Mv> {
    let sig = r.signature().clone();
    let blades: Vec<Blade> = sig.blades().collect();
    let n = blades.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (col, b) in blades.iter().enumerate() {
        let image = r.gp(&Mv::blade(sig.clone(), *b, 1.0));
        for (row, target) in blades.iter().enumerate() {
            m[(row, col)] = image.coeff(*target);
        }
    }
    let mut rhs = DVector::<f64>::zeros(n);
    rhs[0] = 1.0;
    let x = m.lu().solve(&rhs).ok_or(Error::Singular)?;
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::Singular);
    }
    let inv = Mv::from_terms(sig.clone(), blades.iter().zip(x.iter()).map(|(b, v)| (*b, *v)));
    let one = Mv::one(sig);
    if !approx_eq(&r.gp(&inv), &one) || !approx_eq(&inv.gp(r), &one) {
        return Err(Error::Singular);
    }
    Ok(inv)
}

/// `(R⁻¹ A R, R⁻¹ ψ)`.
pub fn gauge_pair(a: &Mv, psi: &Mv, r: &Mv) -> Result<(Mv, Mv)> {
    let r_inv = inverse(r)?;
    Ok((r_inv.gp(a).gp(r), r_inv.gp(psi)))
}

/// `cosh β + sinh β a_axis`, invertible although not a rotor.
pub fn hyperbolic_element(sig: &Arc<Signature>, axis: usize, beta: f64) -> Result<Mv> {
    Ok(Mv::scalar(sig.clone(), beta.cosh()).add(&axis_vector(sig, axis)?.scale(&beta.sinh())))
}

/// Random plane from `{12, 23, 31}` and angle in `[-π, π)`.
pub fn random_rotor(rng: &mut Rng, sig: &Arc<Signature>) -> Rotor {
    let (i, j) = [(1, 2), (2, 3), (3, 1)][rng.gen_range(0..3)];
    Rotor::in_plane(sig, i, j, rng.gen_range(-PI..PI)).expect("valid plane")
}

pub fn random_vector(rng: &mut Rng, sig: &Arc<Signature>) -> Mv {
    Mv::from_terms(
        sig.clone(),
        (0..sig.n()).map(|i| (Blade::generator(i), rng.gen_range(-1.0..1.0))),
    )
}

pub fn random_unit_vector(rng: &mut Rng, sig: &Arc<Signature>) -> Mv {
    loop {
        let v = random_vector(rng, sig);
        let n = norm(&v);
        if n > 1e-3 {
            return v.scale(&(1.0 / n));
        }
    }
}

/// Random element with coefficients in `[-1, 1)` on every blade.
pub fn random_element(rng: &mut Rng, sig: &Arc<Signature>) -> Mv {
    Mv::from_terms(sig.clone(), sig.blades().map(|b| (b, rng.gen_range(-1.0..1.0))))
}
