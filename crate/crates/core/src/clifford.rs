//! Single-factor Clifford algebra over a diagonal signature.
//!
//! Blades are bitmasks (bit `i` set means generator `i` is present, in
//! ascending order); multivectors are sparse `Blade -> coefficient` maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Upper bound on the number of generators; a blade fits in one byte.
pub const MAX_GENERATORS: usize = 8;

/// Ordered generator names with their metric squares (`+1` or `-1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    labels: Vec<String>,
    squares: Vec<i8>,
}

impl Signature {
    pub fn new<L: Into<String>>(labels: impl IntoIterator<Item = L>, squares: &[i8]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != squares.len() {
            return Err(Error::InvalidSignature(format!(
                "{} labels for {} squares",
                labels.len(),
                squares.len()
            )));
        }
        if labels.is_empty() || labels.len() > MAX_GENERATORS {
            return Err(Error::InvalidSignature(format!(
                "generator count {} outside 1..={MAX_GENERATORS}",
                labels.len()
            )));
        }
        if let Some(bad) = squares.iter().find(|s| **s != 1 && **s != -1) {
            return Err(Error::InvalidSignature(format!("metric square {bad} is not ±1")));
        }
        Ok(Self {
            labels,
            squares: squares.to_vec(),
        })
    }

    /// Differential forms of Minkowski space: `dt² = -1`, `dx² = dy² = dz² = +1`.
    pub fn lorentzian_forms() -> Self {
        Self::new(["dt", "dx", "dy", "dz"], &[-1, 1, 1, 1]).unwrap()
    }

    /// Tangent algebra paired with [`Signature::lorentzian_forms`]:
    /// `e0² = -1`, `a_i² = +1`.
    pub fn lorentzian_tangent() -> Self {
        Self::new(["e0", "a1", "a2", "a3"], &[-1, 1, 1, 1]).unwrap()
    }

    pub fn euclidean3_forms() -> Self {
        Self::new(["dx", "dy", "dz"], &[1, 1, 1]).unwrap()
    }

    pub fn euclidean3_tangent() -> Self {
        Self::new(["a1", "a2", "a3"], &[1, 1, 1]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn square(&self, index: usize) -> i8 {
        self.squares[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// All `2^n` blades in mask order.
    pub fn blades(&self) -> impl Iterator<Item = Blade> {
        (0..(1u16 << self.n())).map(|m| Blade(m as u8))
    }

    pub fn pseudoscalar(&self) -> Blade {
        Blade(((1u16 << self.n()) - 1) as u8)
    }

    pub fn contains(&self, blade: Blade) -> bool {
        (u16::from(blade.0) >> self.n()) == 0
    }

    pub fn generator(&self, index: usize) -> Result<Blade> {
        if index >= self.n() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.n(),
            });
        }
        Ok(Blade::generator(index))
    }
}

/// Basis blade as a generator bitmask; the empty mask is the unit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u8);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    pub fn generator(index: usize) -> Self {
        assert!(index < MAX_GENERATORS);
        Blade(1 << index)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Blade(indices.iter().fold(0u8, |m, i| m | (1 << i)))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..MAX_GENERATORS).filter(move |i| self.0 & (1 << i) != 0)
    }

    pub fn contains(self, other: Blade) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }
}

/// Number of transpositions needed to bring `a · b` (both ascending) into
/// ascending order: for every generator of `b`, count the generators of
/// `a` with a higher index.
pub fn reorder_swaps(a: Blade, b: Blade) -> u32 {
    let mut swaps = 0;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (u16::from(a.0) >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps
}

/// Clifford product of two basis blades: sign and resulting blade.
pub fn blade_product(a: Blade, b: Blade, sig: &Signature) -> (i8, Blade) {
    let mut sign: i8 = if reorder_swaps(a, b).is_multiple_of(2) { 1 } else { -1 };
    for i in Blade(a.0 & b.0).indices() {
        sign *= sig.square(i);
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Bilinear products available on multivectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Clifford,
    Exterior,
    LeftContraction,
}

impl ProductKind {
    /// Blade-level rule: `None` when the product of the two blades vanishes.
    pub fn blade_rule(self, a: Blade, b: Blade, sig: &Signature) -> Option<(i8, Blade)> {
        match self {
            ProductKind::Clifford => Some(blade_product(a, b, sig)),
            ProductKind::Exterior => a.is_disjoint(b).then(|| blade_product(a, b, sig)),
            ProductKind::LeftContraction => b.contains(a).then(|| blade_product(a, b, sig)),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Clifford => "*",
            ProductKind::Exterior => "^",
            ProductKind::LeftContraction => "_|",
        }
    }
}

/// The involutions of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `(-1)^r` on grade `r`.
    Grade,
    /// `(-1)^{r(r-1)/2}` on grade `r`.
    Reversion,
    /// Conjugates coefficients, leaves blades alone.
    ComplexConjugation,
}

pub(crate) fn grade_involution_sign(grade: usize) -> bool {
    grade % 2 == 1
}

pub(crate) fn reversion_sign(grade: usize) -> bool {
    (grade * grade.saturating_sub(1) / 2) % 2 == 1
}

pub(crate) fn add_term<K: Ord, S: Ring>(map: &mut BTreeMap<K, S>, key: K, value: S) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(existing) => {
            let sum = existing.add(&value);
            if sum.is_zero() {
                map.remove(&key);
            } else {
                *existing = sum;
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

pub(crate) fn signed<S: Ring>(value: &S, negative: bool) -> S {
    if negative {
        value.neg()
    } else {
        value.clone()
    }
}

/// Sparse element of the Clifford algebra of one signature.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S: Ring> {
    sig: Arc<Signature>,
    terms: BTreeMap<Blade, S>,
}

impl<S: Ring> Multivector<S> {
    pub fn zero(sig: Arc<Signature>) -> Self {
        Self {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Arc<Signature>, value: S) -> Self {
        Self::blade(sig, Blade::UNIT, value)
    }

    pub fn one(sig: Arc<Signature>) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn blade(sig: Arc<Signature>, blade: Blade, value: S) -> Self {
        let mut out = Self::zero(sig);
        out.add_blade(blade, value);
        out
    }

    /// The generator `index` with unit coefficient.
    pub fn generator(sig: Arc<Signature>, index: usize) -> Result<Self> {
        let b = sig.generator(index)?;
        Ok(Self::blade(sig, b, S::one()))
    }

    pub fn from_terms(sig: Arc<Signature>, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut out = Self::zero(sig);
        for (b, c) in terms {
            out.add_blade(b, c);
        }
        out
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: Blade) -> S {
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

    pub fn add_blade(&mut self, blade: Blade, value: S) {
        assert!(self.sig.contains(blade), "blade {blade:?} outside signature");
        add_term(&mut self.terms, blade, value);
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            add_term(&mut out.terms, *b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// Sum; panics on a signature mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("signature mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("signature mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|c| c.mul(factor))
    }

    /// Applies `f` to every coefficient (zero results are dropped).
    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_terms(self.sig.clone(), self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    /// Changes the coefficient ring.
    pub fn map_ring<T: Ring>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector::from_terms(self.sig.clone(), self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn product(&self, other: &Self, kind: ProductKind) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, blade)) = kind.blade_rule(*a, *b, &self.sig) {
                    add_term(&mut out.terms, blade, signed(&ca.mul(cb), sign < 0));
                }
            }
        }
        Ok(out)
    }

    /// Clifford product; panics on a signature mismatch.
    pub fn gp(&self, other: &Self) -> Self {
        self.product(other, ProductKind::Clifford).expect("signature mismatch")
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.product(other, ProductKind::Exterior).expect("signature mismatch")
    }

    pub fn left_contract(&self, other: &Self) -> Self {
        self.product(other, ProductKind::LeftContraction)
            .expect("signature mismatch")
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self> {
        if grade > self.sig.n() {
            return Err(Error::InvalidGrade {
                grade,
                n: self.sig.n(),
            });
        }
        Ok(Self::from_terms(
            self.sig.clone(),
            self.terms
                .iter()
                .filter(|(b, _)| b.grade() == grade)
                .map(|(b, c)| (*b, c.clone())),
        ))
    }

    /// Grade of every term when they all agree; `None` for zero or mixed.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn involution(&self, kind: Involution) -> Self {
        Self::from_terms(
            self.sig.clone(),
            self.terms.iter().map(|(b, c)| {
                let value = match kind {
                    Involution::Grade => signed(c, grade_involution_sign(b.grade())),
                    Involution::Reversion => signed(c, reversion_sign(b.grade())),
                    Involution::ComplexConjugation => c.conj(),
                };
                (*b, value)
            }),
        )
    }

    pub fn reverse(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    /// `½(w u − u w)`.
    pub fn half_commutator(w: &Self, u: &Self) -> Result<Self> {
        let wu = w.product(u, ProductKind::Clifford)?;
        let uw = u.product(w, ProductKind::Clifford)?;
        Ok(wu.sub(&uw).scale(&S::from_ratio(1, 2)))
    }

    /// Scalar (grade-0) part.
    pub fn scalar_part(&self) -> S {
        self.coeff(Blade::UNIT)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.sig.clone());
        for _ in 0..exp {
            acc = acc.gp(self);
        }
        acc
    }
}

/// Formats a blade as its generator labels joined by `*`, or `1`.
pub fn blade_label(blade: Blade, sig: &Signature) -> String {
    if blade == Blade::UNIT {
        return "1".to_owned();
    }
    blade.indices().map(|i| sig.label(i)).collect::<Vec<_>>().join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    type Mv = Multivector<GaussianRational>;

    fn lorentz() -> Arc<Signature> {
        Arc::new(Signature::lorentzian_forms())
    }

    fn gen(sig: &Arc<Signature>, i: usize) -> Mv {
        Mv::generator(sig.clone(), i).unwrap()
    }

    #[test]
    fn blade_product_examples() {
        let sig = Signature::lorentzian_forms();
        let (dt, dx, dy) = (Blade::generator(0), Blade::generator(1), Blade::generator(2));
        assert_eq!(blade_product(dx, dy, &sig), (1, Blade::from_indices(&[1, 2])));
        assert_eq!(blade_product(dy, dx, &sig), (-1, Blade::from_indices(&[1, 2])));
        assert_eq!(blade_product(dt, dt, &sig), (-1, Blade::UNIT));
    }

    #[test]
    fn swap_count_matches_naive_bubble_sort() {
        // brute force: concatenate index lists and count inversions
        for a in 0u8..16 {
            for b in 0u8..16 {
                let seq: Vec<usize> = Blade(a).indices().chain(Blade(b).indices()).collect();
                let mut inversions = 0;
                for i in 0..seq.len() {
                    for j in i + 1..seq.len() {
                        if seq[i] > seq[j] {
                            inversions += 1;
                        }
                    }
                }
                assert_eq!(reorder_swaps(Blade(a), Blade(b)) % 2, inversions % 2, "{a} {b}");
            }
        }
    }

    #[test]
    fn generator_anticommutation() {
        let sig = lorentz();
        for i in 0..4 {
            for j in 0..4 {
                let (gi, gj) = (gen(&sig, i), gen(&sig, j));
                let anti = gi.gp(&gj).add(&gj.gp(&gi));
                let expected = if i == j {
                    Mv::scalar(sig.clone(), GaussianRational::int(2 * i64::from(sig.square(i))))
                } else {
                    Mv::zero(sig.clone())
                };
                assert_eq!(anti, expected);
            }
        }
    }

    #[test]
    fn bivector_squares_to_minus_one() {
        let sig = Arc::new(Signature::euclidean3_tangent());
        let a12 = gen(&sig, 0).gp(&gen(&sig, 1));
        assert_eq!(a12.gp(&a12), Mv::scalar(sig, GaussianRational::int(-1)));
    }

    #[test]
    fn contraction_example() {
        let sig = lorentz();
        let (dx, dy) = (gen(&sig, 1), gen(&sig, 2));
        assert_eq!(dx.left_contract(&dx.wedge(&dy)), dy);
        assert!(dx.wedge(&dx).is_zero());
    }

    #[test]
    fn grade_projection_examples() {
        let sig = lorentz();
        let (dx, dy) = (gen(&sig, 1), gen(&sig, 2));
        let dxdy = dx.gp(&dy);
        let u = Mv::one(sig.clone()).add(&dxdy);
        assert_eq!(u.grade_project(2).unwrap(), dxdy);
        assert!(dxdy.grade_project(0).unwrap().is_zero());
        // dx (dx ∧ dy) = dy, expanded by hand
        assert_eq!(dx.gp(&dx.wedge(&dy)).grade_project(1).unwrap(), dy);
        assert!(matches!(u.grade_project(5), Err(Error::InvalidGrade { .. })));
    }

    #[test]
    fn involution_examples() {
        let sig = lorentz();
        let (dx, dy) = (gen(&sig, 1), gen(&sig, 2));
        let dxdy = dx.gp(&dy);
        assert_eq!(dx.involution(Involution::Grade), dx.neg());
        assert_eq!(dxdy.involution(Involution::Grade), dxdy);
        assert_eq!(dxdy.involution(Involution::Reversion), dxdy.neg());
        let idx = dx.scale(&GaussianRational::i());
        assert_eq!(idx.involution(Involution::ComplexConjugation), idx.neg());
    }

    #[test]
    fn half_commutator_examples() {
        let sig = Arc::new(Signature::euclidean3_forms());
        let (dx, dy) = (gen(&sig, 0), gen(&sig, 1));
        let w3 = dx.gp(&dy);
        assert_eq!(Mv::half_commutator(&w3, &dx).unwrap(), dy.neg());
        assert!(Mv::half_commutator(&w3, &Mv::one(sig.clone())).unwrap().is_zero());
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = Mv::one(lorentz());
        let b = Mv::one(Arc::new(Signature::euclidean3_forms()));
        assert_eq!(a.product(&b, ProductKind::Clifford), Err(Error::SignatureMismatch));
    }

    #[test]
    fn signature_validation() {
        assert!(Signature::new(["a"], &[1, 1]).is_err());
        assert!(Signature::new(Vec::<String>::new(), &[]).is_err());
        assert!(Signature::new(["a"], &[2]).is_err());
        assert!(Signature::new((0..9).map(|i| format!("g{i}")), &[1; 9]).is_err());
    }
}
