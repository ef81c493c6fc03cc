//! Tensor product of the form algebra with the tangent (value) algebra.
//!
//! An element is a sparse map from `(form blade, value blade)` pairs to
//! coefficients. Products multiply the form blades with one product kind
//! and the value blades with another; the two factors do not pick up any
//! extra sign when passed through each other.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::clifford::{add_term, signed, Blade, Multivector, ProductKind, Signature};
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Coordinates plus the two Clifford factors built on them.
///
/// Form generator `μ` and value generator `μ` correspond to coordinate `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    coords: Vec<String>,
    form: Arc<Signature>,
    value: Arc<Signature>,
    time: Option<usize>,
    spatial: Option<[usize; 3]>,
}

impl Space {
    pub fn new<C: Into<String>>(
        coords: impl IntoIterator<Item = C>,
        form: Signature,
        value: Signature,
    ) -> Result<Self> {
        let coords: Vec<String> = coords.into_iter().map(Into::into).collect();
        if coords.len() != form.n() || form.n() != value.n() {
            return Err(Error::InvalidSignature(format!(
                "{} coordinates, {} form generators, {} value generators",
                coords.len(),
                form.n(),
                value.n()
            )));
        }
        let find = |name: &str, square: i8| {
            coords
                .iter()
                .position(|c| c == name)
                .filter(|i| form.square(*i) == square)
        };
        let time = find("t", -1);
        let spatial = match (find("x", 1), find("y", 1), find("z", 1)) {
            (Some(x), Some(y), Some(z)) => Some([x, y, z]),
            _ => None,
        };
        Ok(Self {
            coords,
            form: Arc::new(form),
            value: Arc::new(value),
            time,
            spatial,
        })
    }

    /// `(t, x, y, z)` with `dt² = e0² = -1` and unit spatial squares.
    pub fn lorentzian() -> Arc<Self> {
        Arc::new(
            Self::new(
                ["t", "x", "y", "z"],
                Signature::lorentzian_forms(),
                Signature::lorentzian_tangent(),
            )
            .unwrap(),
        )
    }

    /// `(x, y, z)` with every square `+1`.
    pub fn euclidean3() -> Arc<Self> {
        Arc::new(
            Self::new(
                ["x", "y", "z"],
                Signature::euclidean3_forms(),
                Signature::euclidean3_tangent(),
            )
            .unwrap(),
        )
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn form_sig(&self) -> &Arc<Signature> {
        &self.form
    }

    pub fn value_sig(&self) -> &Arc<Signature> {
        &self.value
    }

    pub fn time_index(&self) -> Result<usize> {
        self.time.ok_or(Error::NoTimeCoordinate)
    }

    /// Coordinate indices of `x`, `y`, `z`.
    pub fn spatial(&self) -> Result<[usize; 3]> {
        self.spatial.ok_or(Error::NoSpatialBlock)
    }

    /// Coordinate index of spatial axis `axis ∈ {1, 2, 3}`.
    pub fn spatial_index(&self, axis: usize) -> Result<usize> {
        if !(1..=3).contains(&axis) {
            return Err(Error::InvalidAxis(axis));
        }
        Ok(self.spatial()?[axis - 1])
    }

    /// Every `(form, value)` blade pair: `2^n × 2^n` of them.
    pub fn paired_blades(&self) -> Vec<PairedBlade> {
        self.form
            .blades()
            .flat_map(|f| self.value.blades().map(move |v| PairedBlade::new(f, v)))
            .collect()
    }

    /// The `2^n` blade-diagonal pairs spanning the mirror subalgebra.
    pub fn mirror_blades(&self) -> Vec<PairedBlade> {
        self.form.blades().map(|b| PairedBlade::new(b, b)).collect()
    }
}

/// Basis element `form ⊗ value` of the tensor product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairedBlade {
    pub form: Blade,
    pub value: Blade,
}

impl PairedBlade {
    pub const UNIT: PairedBlade = PairedBlade {
        form: Blade::UNIT,
        value: Blade::UNIT,
    };

    pub fn new(form: Blade, value: Blade) -> Self {
        Self { form, value }
    }

    pub fn is_mirror(self) -> bool {
        self.form == self.value
    }
}

/// Clifford-valued differential form.
#[derive(Clone, Debug, PartialEq)]
pub struct CVForm<S: Ring> {
    space: Arc<Space>,
    terms: BTreeMap<PairedBlade, S>,
}

impl<S: Ring> CVForm<S> {
    pub fn zero(space: Arc<Space>) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(space: Arc<Space>, value: S) -> Self {
        Self::term(space, PairedBlade::UNIT, value)
    }

    pub fn one(space: Arc<Space>) -> Self {
        Self::scalar(space, S::one())
    }

    pub fn term(space: Arc<Space>, blade: PairedBlade, value: S) -> Self {
        let mut out = Self::zero(space);
        out.add_term(blade, value);
        out
    }

    pub fn from_terms(space: Arc<Space>, terms: impl IntoIterator<Item = (PairedBlade, S)>) -> Self {
        let mut out = Self::zero(space);
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    /// Form generator `dx^index ⊗ 1`.
    pub fn form_generator(space: Arc<Space>, index: usize) -> Result<Self> {
        let b = space.form.generator(index)?;
        Ok(Self::term(space, PairedBlade::new(b, Blade::UNIT), S::one()))
    }

    /// Value generator `1 ⊗ a_index`.
    pub fn value_generator(space: Arc<Space>, index: usize) -> Result<Self> {
        let b = space.value.generator(index)?;
        Ok(Self::term(space, PairedBlade::new(Blade::UNIT, b), S::one()))
    }

    /// `dx^index ⊗ a_index`.
    pub fn mirror_generator(space: Arc<Space>, index: usize) -> Result<Self> {
        let b = space.form.generator(index)?;
        Ok(Self::term(space, PairedBlade::new(b, b), S::one()))
    }

    /// Pairs every blade of a form-algebra element with the value unit.
    pub fn embed_form(space: Arc<Space>, u: &Multivector<S>) -> Result<Self> {
        if **u.signature() != *space.form {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self::from_terms(
            space,
            u.terms().map(|(b, c)| (PairedBlade::new(b, Blade::UNIT), c.clone())),
        ))
    }

    /// Pairs every blade of a tangent-algebra element with the form unit.
    pub fn embed_value(space: Arc<Space>, a: &Multivector<S>) -> Result<Self> {
        if **a.signature() != *space.value {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self::from_terms(
            space,
            a.terms().map(|(b, c)| (PairedBlade::new(Blade::UNIT, b), c.clone())),
        ))
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (PairedBlade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: PairedBlade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, blade: PairedBlade, value: S) {
        assert!(
            self.space.form.contains(blade.form) && self.space.value.contains(blade.value),
            "blade {blade:?} outside space"
        );
        add_term(&mut self.terms, blade, value);
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            add_term(&mut out.terms, *b, c.clone());
        }
        Ok(out)
    }

    /// Sum; panics on a space mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("space mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|c| c.mul(factor))
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.space.clone(), self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn map_ring<T: Ring>(&self, f: impl Fn(&S) -> T) -> CVForm<T> {
        CVForm::from_terms(self.space.clone(), self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    /// Same terms with the blades changed by `f` (sign folded into the
    /// coefficient); terms mapped to `None` are dropped.
    pub fn map_blades(&self, f: impl Fn(PairedBlade) -> Option<(i8, PairedBlade)>) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (b, c) in &self.terms {
            if let Some((sign, nb)) = f(*b) {
                out.add_term(nb, signed(c, sign < 0));
            }
        }
        out
    }

    /// Bilinear product: form blades multiplied with `form_kind`, value
    /// blades with `value_kind`, signs and coefficients multiplied.
    pub fn paired_product(
        &self,
        other: &Self,
        form_kind: ProductKind,
        value_kind: ProductKind,
    ) -> Result<Self> {
        self.check_space(other)?;
        let mut out = Self::zero(self.space.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let Some((sf, fb)) = form_kind.blade_rule(a.form, b.form, &self.space.form) else {
                    continue;
                };
                let Some((sv, vb)) = value_kind.blade_rule(a.value, b.value, &self.space.value)
                else {
                    continue;
                };
                add_term(
                    &mut out.terms,
                    PairedBlade::new(fb, vb),
                    signed(&ca.mul(cb), sf * sv < 0),
                );
            }
        }
        Ok(out)
    }

    /// The `(∨, ∨)` product; panics on a space mismatch.
    pub fn gp(&self, other: &Self) -> Self {
        self.paired_product(other, ProductKind::Clifford, ProductKind::Clifford)
            .expect("space mismatch")
    }

    /// Product with `kind` in both factors.
    pub fn mirror_product(&self, other: &Self, kind: ProductKind) -> Result<Self> {
        self.paired_product(other, kind, kind)
    }

    /// Every term pairs a form blade with the value blade of the same index set.
    pub fn is_mirror(&self) -> bool {
        self.terms.keys().all(|b| b.is_mirror())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.gp(other) == other.gp(self)
    }

    /// Form grade of every term when they agree; `None` for zero or mixed.
    pub fn homogeneous_form_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.form.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    /// `(∨, ∨)` power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.space.clone());
        for _ in 0..exp {
            acc = acc.gp(self);
        }
        acc
    }

    pub fn scalar_part(&self) -> S {
        self.coeff(PairedBlade::UNIT)
    }

    /// True if the element is `c · 1`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == PairedBlade::UNIT)
    }
}
