//! Differential operators on clifforms with symbolic coefficients.
//!
//! Operators act on the form factor only; value blades ride along as
//! constants. The Kähler derivative is `∂ = d + δ` with
//!
//! * `d u = Σ dx^μ ∧ ∂_μ u`
//! * `δ u = Σ dx^μ ⌋ ∂_μ u` (metric-signed contraction, so `δ(t dt) = -1`
//!   in Lorentzian signature).

use std::fmt;
use std::str::FromStr;

use crate::clifford::{Blade, ProductKind};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalar::{GaussianRational, Ring, SymbolicScalar};
use crate::tensor::{CVForm, PairedBlade, Space};

/// Clifform with symbolic coefficients.
pub type Form = CVForm<SymbolicScalar>;

fn coordinate_count(u: &Form) -> usize {
    u.space().dim()
}

/// `∂u/∂x^index`, coefficient-wise.
pub fn partial(u: &Form, index: usize) -> Result<Form> {
    let n = coordinate_count(u);
    if index >= n {
        return Err(Error::IndexOutOfRange { index, len: n });
    }
    Ok(u.map(|c| c.partial_derivative(index)))
}

fn form_gen(u: &Form, mu: usize) -> Form {
    CVForm::form_generator(u.space().clone(), mu).expect("index within dimension")
}

/// `Σ_μ dx^μ ⋆ ∂_μ u` with `⋆` the given product on the form factor.
fn sum_over_coordinates(u: &Form, kind: ProductKind) -> Form {
    let mut out = CVForm::zero(u.space().clone());
    for mu in 0..coordinate_count(u) {
        let du = u.map(|c| c.partial_derivative(mu));
        if du.is_zero() {
            continue;
        }
        let term = form_gen(u, mu)
            .paired_product(&du, kind, ProductKind::Clifford)
            .expect("same space");
        out = out.add(&term);
    }
    out
}

pub fn ext_d(u: &Form) -> Form {
    sum_over_coordinates(u, ProductKind::Exterior)
}

pub fn codiff(u: &Form) -> Form {
    sum_over_coordinates(u, ProductKind::LeftContraction)
}

/// `∂u = d u + δ u`, i.e. `Σ dx^μ ∨ ∂_μ u`.
pub fn kahler_derivative(u: &Form) -> Form {
    sum_over_coordinates(u, ProductKind::Clifford)
}

/// Metric-free contraction `e_index u` with the coordinate vector field
/// `∂/∂x^index` (so `e_t dt = 1` even where `dt² = -1`).
pub fn interior(u: &Form, index: usize) -> Result<Form> {
    let sig = u.space().form_sig().clone();
    let g = Blade::generator(index);
    if index >= sig.n() {
        return Err(Error::IndexOutOfRange { index, len: sig.n() });
    }
    let square = sig.square(index);
    Ok(u.map_blades(|b| {
        let (sign, form) = ProductKind::LeftContraction.blade_rule(g, b.form, &sig)?;
        Some((sign * square, PairedBlade::new(form, b.value)))
    }))
}

/// Vector field `ξ^i ∂/∂x^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField {
    components: Vec<SymbolicScalar>,
}

impl VectorField {
    pub fn new(components: Vec<SymbolicScalar>) -> Self {
        Self { components }
    }

    /// Rotation field about spatial axis `axis` (1..=3):
    /// `x^j ∂_k − x^k ∂_j` for cyclic `(axis, j, k)`.
    pub fn rotation(space: &Space, axis: usize) -> Result<Self> {
        let (j, k) = cyclic_pair(space, axis)?;
        let n = space.dim();
        let mut components = vec![SymbolicScalar::zero().with_arity(n); n];
        components[k] = SymbolicScalar::coordinate(n, j);
        components[j] = SymbolicScalar::coordinate(n, k).neg();
        Ok(Self { components })
    }

    pub fn components(&self) -> &[SymbolicScalar] {
        &self.components
    }

    fn check(&self, u: &Form) -> Result<()> {
        if self.components.len() == coordinate_count(u) {
            Ok(())
        } else {
            Err(Error::ComponentCount {
                expected: coordinate_count(u),
                found: self.components.len(),
            })
        }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| c.display_with(&[]).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Coordinate indices `(j, k)` following `axis` cyclically in the spatial block.
fn cyclic_pair(space: &Space, axis: usize) -> Result<(usize, usize)> {
    if !(1..=3).contains(&axis) {
        return Err(Error::InvalidAxis(axis));
    }
    let s = space.spatial()?;
    Ok((s[axis % 3], s[(axis + 1) % 3]))
}

/// `ξ^i ∂u/∂x^i` only: the coefficient-wise derivative.
pub fn naive_derivative(u: &Form, xi: &VectorField) -> Result<Form> {
    xi.check(u)?;
    let mut out = CVForm::zero(u.space().clone());
    for (i, c) in xi.components.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&u.map(|a| c.mul(&a.partial_derivative(i))));
    }
    Ok(out)
}

/// `A u = ξ^i ∂u/∂x^i + dξ^i ∧ e_i u`.
pub fn lie_derivative(u: &Form, xi: &VectorField) -> Result<Form> {
    let mut out = naive_derivative(u, xi)?;
    let space = u.space().clone();
    for (i, c) in xi.components.iter().enumerate() {
        let dxi = ext_d(&CVForm::scalar(space.clone(), c.clone()));
        if dxi.is_zero() {
            continue;
        }
        let eu = interior(u, i)?;
        out = out.add(&dxi.paired_product(&eu, ProductKind::Exterior, ProductKind::Clifford)?);
    }
    Ok(out)
}

/// `w_axis = dx^j dx^k ⊗ 1`.
pub fn w(space: &std::sync::Arc<Space>, axis: usize) -> Result<Form> {
    let (j, k) = cyclic_pair(space, axis)?;
    // ordered product: w_2 = dz dx = -dx dz
    Ok(CVForm::form_generator(space.clone(), j)?.gp(&CVForm::form_generator(space.clone(), k)?))
}

/// `J_i u = x^j ∂_k u − x^k ∂_j u + ½ w_i u − ½ u w_i`.
pub fn angular_momentum(u: &Form, axis: usize) -> Result<Form> {
    let space = u.space().clone();
    let (j, k) = cyclic_pair(&space, axis)?;
    let n = space.dim();
    let xj = SymbolicScalar::coordinate(n, j);
    let xk = SymbolicScalar::coordinate(n, k);
    let orbital = u
        .map(|c| xj.mul(&c.partial_derivative(k)))
        .sub(&u.map(|c| xk.mul(&c.partial_derivative(j))));
    let wi = w(&space, axis)?;
    let half = SymbolicScalar::from_ratio(1, 2);
    let spin = wi.gp(u).sub(&u.gp(&wi)).scale(&half);
    Ok(orbital.add(&spin))
}

/// `((K+1)u, K u)` with `(K+1)u = Σ_i J_i u ∨ w_i`.
pub fn total_k(u: &Form) -> Result<(Form, Form)> {
    let space = u.space().clone();
    let mut kp1 = CVForm::zero(space.clone());
    for axis in 1..=3 {
        kp1 = kp1.add(&angular_momentum(u, axis)?.gp(&w(&space, axis)?));
    }
    let k = kp1.sub(u);
    Ok((kp1, k))
}

/// Named operator.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorId {
    J(usize),
    KPlusOne,
    K,
    KahlerD,
    ExtD,
    Codiff,
    Lie(VectorField),
}

impl OperatorId {
    pub fn apply(&self, u: &Form) -> Result<Form> {
        match self {
            OperatorId::J(axis) => angular_momentum(u, *axis),
            OperatorId::KPlusOne => Ok(total_k(u)?.0),
            OperatorId::K => Ok(total_k(u)?.1),
            OperatorId::KahlerD => Ok(kahler_derivative(u)),
            OperatorId::ExtD => Ok(ext_d(u)),
            OperatorId::Codiff => Ok(codiff(u)),
            OperatorId::Lie(xi) => lie_derivative(u, xi),
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorId::J(axis) => write!(f, "J{axis}"),
            OperatorId::KPlusOne => f.write_str("Kplus1"),
            OperatorId::K => f.write_str("K"),
            OperatorId::KahlerD => f.write_str("kahler_d"),
            OperatorId::ExtD => f.write_str("ext_d"),
            OperatorId::Codiff => f.write_str("codiff"),
            OperatorId::Lie(xi) => write!(f, "lie{xi}"),
        }
    }
}

/// Parses the fixed operator names (`lie` fields are not parseable).
impl FromStr for OperatorId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "J1" => OperatorId::J(1),
            "J2" => OperatorId::J(2),
            "J3" => OperatorId::J(3),
            "Kplus1" | "K+1" => OperatorId::KPlusOne,
            "K" => OperatorId::K,
            "kahler_d" | "d+delta" => OperatorId::KahlerD,
            "ext_d" | "d" => OperatorId::ExtD,
            "codiff" | "delta" => OperatorId::Codiff,
            other => {
                return Err(format!(
                    "unknown operator `{other}` (expected J1, J2, J3, Kplus1, K, kahler_d, ext_d, codiff)"
                ))
            }
        })
    }
}

/// Result of comparing `op(u)` with `λ ∨ u`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenOutcome {
    pub holds: bool,
    pub image: Form,
    pub expected: Form,
}

pub fn eigencheck(op: &OperatorId, u: &Form, lambda: &Form) -> Result<EigenOutcome> {
    let image = op.apply(u)?;
    let expected = lambda.paired_product(u, ProductKind::Clifford, ProductKind::Clifford)?;
    Ok(EigenOutcome {
        holds: image == expected,
        image,
        expected,
    })
}

/// `Σ_i J_i² u`.
pub fn sum_j_squared(u: &Form) -> Result<Form> {
    let mut out = CVForm::zero(u.space().clone());
    for axis in 1..=3 {
        out = out.add(&angular_momentum(&angular_momentum(u, axis)?, axis)?);
    }
    Ok(out)
}

/// Both sides of `(K+1)²u = Σ J_i²u + (K+1)u` and `(K+1)K u = Σ J_i²u`,
/// taken literally.
pub fn identity_28_sides(u: &Form) -> Result<[(Form, Form); 2]> {
    let (kp1, k) = total_k(u)?;
    let j2 = sum_j_squared(u)?;
    Ok([(total_k(&kp1)?.0, j2.add(&kp1)), (total_k(&k)?.0, j2)])
}

/// Same pair with `Σ J_i²` entering with a minus sign, which is what the
/// definitions of `J_i` and `K+1` above actually satisfy:
/// `(K+1)²u = −Σ J_i²u + (K+1)u`, `(K+1)K u = −Σ J_i²u`.
pub fn identity_28_signed_sides(u: &Form) -> Result<[(Form, Form); 2]> {
    let (kp1, k) = total_k(u)?;
    let j2 = sum_j_squared(u)?.neg();
    Ok([(total_k(&kp1)?.0, j2.add(&kp1)), (total_k(&k)?.0, j2)])
}

fn identity_report(
    id: &str,
    anchor: &str,
    samples: &[Form],
    sides: fn(&Form) -> Result<[(Form, Form); 2]>,
) -> CheckReport {
    for (n, u) in samples.iter().enumerate() {
        let pairs = match sides(u) {
            Ok(p) => p,
            Err(e) => return CheckReport::boolean(id, anchor, false, "error", e.to_string(), format!("sample {n}")),
        };
        for (which, (lhs, rhs)) in pairs.iter().enumerate() {
            if lhs != rhs {
                return CheckReport::compare(
                    id,
                    anchor,
                    lhs.to_string(),
                    rhs.to_string(),
                    format!("identity {} fails on sample {n}: u = {u}", ["(K+1)²", "(K+1)K"][which]),
                );
            }
        }
    }
    let ok = "both identities hold";
    CheckReport::boolean(id, anchor, true, ok, ok, format!("{} samples, exact", samples.len()))
}

/// Checks both literal identities on every sample; the first failure is reported.
pub fn operator_identity_28(samples: &[Form]) -> CheckReport {
    identity_report(
        "EQ28",
        "(K+1)²u = Σ J_i²u + (K+1)u ; (K+1)Ku = Σ J_i² u",
        samples,
        identity_28_sides,
    )
}

/// The sign-corrected pair, see [`identity_28_signed_sides`].
pub fn operator_identity_28_signed(samples: &[Form]) -> CheckReport {
    identity_report(
        "PROP-K-CASIMIR",
        "(K+1)²u = −Σ J_i²u + (K+1)u ; (K+1)Ku = −Σ J_i² u",
        samples,
        identity_28_signed_sides,
    )
}

/// `R⁻¹ (∂ − a) R (R⁻¹ψ)` and `R⁻¹ (∂ − a) ψ`, for constant invertible `R`.
pub fn gauge_covariance(r: &Form, r_inv: &Form, a: &Form, psi: &Form) -> Result<(Form, Form)> {
    let one = CVForm::one(r.space().clone());
    if r.gp(r_inv) != one || r_inv.gp(r) != one {
        return Err(Error::Singular);
    }
    let dirac = |v: &Form| kahler_derivative(v).sub(&a.gp(v));
    let transformed = r_inv.gp(&dirac(&r.gp(&r_inv.gp(psi))));
    let direct = r_inv.gp(&dirac(psi));
    Ok((transformed, direct))
}

/// Symbolic form from a constant Gaussian-rational form.
pub fn lift(u: &CVForm<GaussianRational>) -> Form {
    let n = u.space().dim();
    u.map_ring(|c| SymbolicScalar::constant(c.clone()).with_arity(n))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::report::Status;
    use crate::sample::{self, Support};
    use crate::scalar::{LinearExponent, Monomial};

    fn mono(space: &Arc<Space>, exps: &[u32], form: &[usize], value: &[usize], c: i64) -> Form {
        let n = space.dim();
        let mut e = exps.to_vec();
        e.resize(n, 0);
        CVForm::term(
            space.clone(),
            PairedBlade::new(Blade::from_indices(form), Blade::from_indices(value)),
            SymbolicScalar::term(n, Monomial::new(e), LinearExponent::zero(), GaussianRational::int(c)),
        )
    }

    fn blade(space: &Arc<Space>, form: &[usize], value: &[usize]) -> Form {
        mono(space, &[], form, value, 1)
    }

    fn gi() -> SymbolicScalar {
        SymbolicScalar::constant(GaussianRational::i())
    }

    #[test]
    fn exterior_derivative_examples() {
        let e = Space::euclidean3();
        assert_eq!(ext_d(&mono(&e, &[1], &[1], &[], 1)), blade(&e, &[0, 1], &[]));
        assert!(ext_d(&blade(&e, &[0, 2], &[0])).is_zero());
        let u = mono(&e, &[2, 1], &[2], &[], 1);
        assert!(!ext_d(&u).is_zero());
        assert!(ext_d(&ext_d(&u)).is_zero());
    }

    #[test]
    fn codifferential_examples() {
        let e = Space::euclidean3();
        assert_eq!(codiff(&mono(&e, &[1], &[0], &[], 1)), CVForm::one(e.clone()));
        let l = Space::lorentzian();
        assert_eq!(codiff(&mono(&l, &[1], &[0], &[], 1)), CVForm::one(l.clone()).neg());
        assert!(codiff(&mono(&l, &[3, 1, 0, 2], &[], &[1], 1)).is_zero());
    }

    #[test]
    fn kahler_derivative_of_plane_wave() {
        let l = Space::lorentzian();
        let e = GaussianRational::from_parts(5, 2, 0, 1);
        let minus_ie = &(-&GaussianRational::i()) * &e;
        let wave = SymbolicScalar::exp_linear(4, LinearExponent::from_coeffs([(0, minus_ie.clone())]));
        let u = CVForm::scalar(l.clone(), wave.clone());
        let expected = CVForm::term(
            l.clone(),
            PairedBlade::new(Blade::generator(0), Blade::UNIT),
            wave.scale(&minus_ie),
        );
        assert_eq!(kahler_derivative(&u), expected);
        assert_eq!(kahler_derivative(&u), ext_d(&u).add(&codiff(&u)));
    }

    #[test]
    fn lie_rotation_examples() {
        let e = Space::euclidean3();
        let rz = VectorField::rotation(&e, 3).unwrap();
        assert_eq!(rz.components()[0], SymbolicScalar::coordinate(3, 1).neg());
        assert_eq!(lie_derivative(&blade(&e, &[0], &[]), &rz).unwrap(), blade(&e, &[1], &[]).neg());

        // x dy: naive gives -y dy, the full derivative adds x dx
        let u = mono(&e, &[1], &[1], &[], 1);
        let naive = naive_derivative(&u, &rz).unwrap();
        let full = lie_derivative(&u, &rz).unwrap();
        assert_eq!(naive, mono(&e, &[0, 1], &[1], &[], -1));
        assert_eq!(full, naive.add(&mono(&e, &[1], &[0], &[], 1)));
        assert_ne!(naive, full);
    }

    #[test]
    fn constant_field_is_directional_derivative() {
        let e = Space::euclidean3();
        let c = |v| SymbolicScalar::constant(GaussianRational::int(v)).with_arity(3);
        let xi = VectorField::new(vec![c(2), c(-1), c(0)]);
        let u = mono(&e, &[2, 1], &[0, 2], &[1], 1);
        assert_eq!(lie_derivative(&u, &xi).unwrap(), naive_derivative(&u, &xi).unwrap());
        assert!(matches!(
            lie_derivative(&u, &VectorField::new(vec![c(1)])),
            Err(Error::ComponentCount { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn j_actions() {
        let e = Space::euclidean3();
        let w = |a| w(&e, a).unwrap();
        assert_eq!(angular_momentum(&w(3), 1).unwrap(), w(2));
        assert_eq!(angular_momentum(&w(3), 2).unwrap(), w(1).neg());

        let u = blade(&e, &[0], &[0]);
        let images: Vec<Form> = (1..=3).map(|a| angular_momentum(&u, a).unwrap()).collect();
        assert!(images[0].is_zero());
        assert_eq!(images[1], blade(&e, &[2], &[0]));
        assert_eq!(images[2], blade(&e, &[1], &[0]).neg());

        let half = SymbolicScalar::from_ratio(1, 2);
        let ixy = CVForm::one(e.clone()).add(&w(3).scale(&gi())).scale(&half);
        assert!(angular_momentum(&ixy, 3).unwrap().is_zero());
        assert!(matches!(angular_momentum(&u, 4), Err(Error::InvalidAxis(4))));
    }

    #[test]
    fn j_requires_spatial_block() {
        let sig = crate::clifford::Signature::new(["du", "dv"], &[1, 1]).unwrap();
        let s = Arc::new(Space::new(["u", "v"], sig.clone(), sig).unwrap());
        assert!(angular_momentum(&CVForm::one(s), 1).is_err());
    }

    #[test]
    fn total_k_examples() {
        let e = Space::euclidean3();
        let half = SymbolicScalar::from_ratio(1, 2);
        for axis in 1..=3 {
            let wk = w(&e, axis).unwrap();
            assert_eq!(total_k(&wk).unwrap().0, wk.scale(&SymbolicScalar::from_int(2)));
            for sign in [1, -1] {
                let s = gi().scale(&GaussianRational::int(sign));
                let plus = CVForm::one(e.clone()).add(&wk.scale(&s)).scale(&half);
                let flipped = CVForm::one(e.clone()).sub(&wk.scale(&s)).scale(&half);
                assert_eq!(total_k(&plus).unwrap().1, flipped.neg());
            }
        }
        let u = blade(&e, &[0], &[0]);
        assert_eq!(total_k(&u).unwrap().0, u.scale(&SymbolicScalar::from_int(2)));
        let u = blade(&e, &[0, 1], &[0, 1]);
        assert_eq!(total_k(&u).unwrap().0, u.scale(&SymbolicScalar::from_int(2)));
        // zero on constant 0-forms and the mirror volume
        assert!(total_k(&mono(&e, &[], &[], &[2], 3)).unwrap().0.is_zero());
        assert!(total_k(&blade(&e, &[0, 1, 2], &[0, 1, 2])).unwrap().0.is_zero());
    }

    #[test]
    fn mirror_i_k_actions() {
        let l = Space::lorentzian();
        let half = SymbolicScalar::from_ratio(1, 2);
        let wa = blade(&l, &[1, 2], &[1, 2]);
        let i = |s: i64| CVForm::one(l.clone()).add(&wa.scale(&SymbolicScalar::from_int(s))).scale(&half);
        for s in [1, -1] {
            let (kp1, k) = total_k(&i(s)).unwrap();
            assert_eq!(kp1, wa.scale(&SymbolicScalar::from_int(s)));
            assert_eq!(k.neg(), i(-s));
            assert_eq!(total_k(&k).unwrap().1, i(s));
        }
    }

    #[test]
    fn eigen_examples() {
        let e = Space::euclidean3();
        let x = SymbolicScalar::coordinate(3, 0);
        let y = SymbolicScalar::coordinate(3, 1);
        let z = x.add(&y.mul(&gi()));
        let a12 = blade(&e, &[], &[0, 1]);
        let geo = CVForm::scalar(e.clone(), x.clone()).add(&a12.scale(&y));
        for m in 1..=4u32 {
            let u = CVForm::scalar(e.clone(), z.pow(m));
            let lambda = CVForm::scalar(e.clone(), gi().scale(&GaussianRational::int(m.into())));
            assert!(eigencheck(&OperatorId::J(3), &u, &lambda).unwrap().holds);

            let lambda = a12.scale(&SymbolicScalar::from_int(m.into()));
            assert!(eigencheck(&OperatorId::J(3), &geo.pow(m), &lambda).unwrap().holds);
        }
        let u = blade(&e, &[0, 1], &[0, 1]);
        assert!(eigencheck(&OperatorId::K, &u, &CVForm::one(e.clone())).unwrap().holds);
        let out = eigencheck(&OperatorId::J(3), &blade(&e, &[0], &[]), &CVForm::one(e.clone())).unwrap();
        assert!(!out.holds);
        assert_eq!(out.image, blade(&e, &[1], &[]).neg());
    }

    #[test]
    fn operator_names_round_trip() {
        for name in ["J1", "J2", "J3", "Kplus1", "K", "kahler_d", "ext_d", "codiff"] {
            let op: OperatorId = name.parse().unwrap();
            assert_eq!(op.to_string(), name);
        }
        assert!("J4".parse::<OperatorId>().is_err());
    }

    fn basis_samples(space: &Arc<Space>) -> Vec<Form> {
        space
            .form_sig()
            .blades()
            .map(|b| CVForm::term(space.clone(), PairedBlade::new(b, Blade::UNIT), SymbolicScalar::from_int(3)))
            .collect()
    }

    #[test]
    fn identity_28_literal_sign_fails_on_one_forms() {
        let e = Space::euclidean3();
        let samples = basis_samples(&e);
        assert_eq!(samples.len(), 8);
        assert_eq!(operator_identity_28(&samples).status, Status::Fail);

        // J₂²w₁ = J₃²w₁ = −w₁ by J_i w_k = w_j, J_j w_k = −w_i
        let w1 = w(&e, 1).unwrap();
        assert_eq!(sum_j_squared(&w1).unwrap(), w1.scale(&SymbolicScalar::from_int(-2)));
        let [(sq, _), (kp1_k, _)] = identity_28_sides(&w1).unwrap();
        assert_eq!(sq, w1.scale(&SymbolicScalar::from_int(4)));
        assert_eq!(kp1_k, w1.scale(&SymbolicScalar::from_int(2)));
    }

    #[test]
    fn identity_28_signed_holds() {
        let e = Space::euclidean3();
        assert_eq!(operator_identity_28_signed(&basis_samples(&e)).status, Status::Pass);
        let mut rng = sample::rng(28);
        let samples: Vec<Form> = (0..20).map(|_| sample::cvform(&mut rng, &e, Support::FormOnly, 3, 2)).collect();
        assert_eq!(operator_identity_28_signed(&samples).status, Status::Pass);
    }

    #[test]
    fn gauge_covariance_holds() {
        let l = Space::lorentzian();
        let mut rng = sample::rng(11);
        // (dx dy)² = -1, so (1 + dx dy)⁻¹ = (1 - dx dy)/2
        let r = CVForm::one(l.clone()).add(&blade(&l, &[1, 2], &[]));
        let r_inv = CVForm::one(l.clone()).sub(&blade(&l, &[1, 2], &[])).scale(&SymbolicScalar::from_ratio(1, 2));
        let a = sample::cvform(&mut rng, &l, Support::Any, 3, 1);
        let psi = sample::cvform(&mut rng, &l, Support::Any, 3, 2);
        let (lhs, rhs) = gauge_covariance(&r, &r_inv, &a, &psi).unwrap();
        assert_eq!(lhs, rhs);
        assert!(matches!(
            gauge_covariance(&r, &r, &a, &psi),
            Err(Error::Singular)
        ));
    }
}
