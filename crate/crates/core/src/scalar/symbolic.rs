use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{ComplexRing, GaussianRational, Ring};
use crate::error::{Error, Result};

/// Exponent vector of a monomial `x_0^{e_0} x_1^{e_1} ...`.
///
/// Trailing zero exponents are trimmed so the same monomial has one
/// representation regardless of how many coordinates are in play.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn variable(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Self(e)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, rhs: &Self) -> Self {
        let len = self.0.len().max(rhs.0.len());
        Self::new((0..len).map(|i| self.exponent(i) + rhs.exponent(i)).collect())
    }

    /// `∂/∂x_index`: returns the multiplicity and the lowered monomial.
    fn differentiate(&self, index: usize) -> Option<(u32, Self)> {
        let e = self.exponent(index);
        if e == 0 {
            return None;
        }
        let mut out = self.0.clone();
        out[index] -= 1;
        Some((e, Self::new(out)))
    }
}

/// The linear form `Σ λ_μ x^μ` in the exponent of `exp(Σ λ_μ x^μ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExponent(BTreeMap<usize, GaussianRational>);

impl LinearExponent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, GaussianRational)>) -> Self {
        let mut out = Self::default();
        for (idx, c) in coeffs {
            out.add_coeff(idx, &c);
        }
        out
    }

    pub fn coeff(&self, index: usize) -> GaussianRational {
        self.0.get(&index).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    fn add_coeff(&mut self, index: usize, c: &GaussianRational) {
        let sum = &self.coeff(index) + c;
        if Ring::is_zero(&sum) {
            self.0.remove(&index);
        } else {
            self.0.insert(index, sum);
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &rhs.0 {
            out.add_coeff(*idx, c);
        }
        out
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct TermKey {
    monomial: Monomial,
    exponent: LinearExponent,
}

/// Which ring operation [`SymbolicScalar::combine`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineKind {
    Add,
    Mul,
}

/// Finite sum of `c · x^α · exp(ℓ·x)` with `c` a Gaussian rational.
///
/// `arity` is the length of the coordinate list the scalar was built over;
/// `0` marks a coordinate-free constant that combines with anything. Two
/// scalars with different non-zero arity cannot be combined through the
/// checked API.
#[derive(Clone, Debug)]
pub struct SymbolicScalar {
    arity: usize,
    terms: BTreeMap<TermKey, GaussianRational>,
}

impl PartialEq for SymbolicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SymbolicScalar {}

impl Hash for SymbolicScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl SymbolicScalar {
    pub fn constant(value: GaussianRational) -> Self {
        let mut out = Self {
            arity: 0,
            terms: BTreeMap::new(),
        };
        out.push(Monomial::one(), LinearExponent::zero(), value);
        out
    }

    /// The coordinate function `x_index` over a list of `arity` coordinates.
    pub fn coordinate(arity: usize, index: usize) -> Self {
        assert!(index < arity, "coordinate {index} outside list of {arity}");
        Self::term(arity, Monomial::variable(index), LinearExponent::zero(), GaussianRational::int(1))
    }

    /// `coeff · monomial · exp(exponent)`.
    pub fn term(
        arity: usize,
        monomial: Monomial,
        exponent: LinearExponent,
        coeff: GaussianRational,
    ) -> Self {
        let mut out = Self {
            arity,
            terms: BTreeMap::new(),
        };
        out.push(monomial, exponent, coeff);
        out
    }

    /// `exp(exponent)`.
    pub fn exp_linear(arity: usize, exponent: LinearExponent) -> Self {
        Self::term(arity, Monomial::one(), exponent, GaussianRational::int(1))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Re-tag the scalar with a coordinate list length.
    pub fn with_arity(mut self, arity: usize) -> Self {
        self.arity = arity;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LinearExponent, &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (&k.monomial, &k.exponent, c))
    }

    /// Largest coordinate index referenced by any term.
    pub fn max_coordinate(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|k| {
                let m = k.monomial.0.len().checked_sub(1);
                m.max(k.exponent.max_index())
            })
            .max()
    }

    /// The value when the scalar is a plain constant (including zero).
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                (k.monomial.is_one() && k.exponent.is_zero()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Highest total polynomial degree over all terms.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|k| k.monomial.degree()).max().unwrap_or(0)
    }

    /// True if every term is exponential-free.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k.exponent.is_zero())
    }

    /// Interprets a homogeneous degree-one polynomial as a linear form.
    pub fn as_linear_form(&self) -> Option<LinearExponent> {
        let mut out = LinearExponent::zero();
        for (k, c) in &self.terms {
            if !k.exponent.is_zero() || k.monomial.degree() != 1 {
                return None;
            }
            let idx = k.monomial.0.iter().position(|e| *e == 1)?;
            out.add_coeff(idx, c);
        }
        Some(out)
    }

    fn push(&mut self, monomial: Monomial, exponent: LinearExponent, coeff: GaussianRational) {
        if Ring::is_zero(&coeff) {
            return;
        }
        let key = TermKey { monomial, exponent };
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if Ring::is_zero(&sum) {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    fn joint_arity(&self, rhs: &Self) -> Result<usize> {
        match (self.arity, rhs.arity) {
            (0, b) => Ok(b),
            (a, 0) => Ok(a),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::CoordinateMismatch { left: a, right: b }),
        }
    }

    /// Checked ring operation: fails when the operands were built over
    /// coordinate lists of different length.
    pub fn combine(&self, rhs: &Self, kind: CombineKind) -> Result<Self> {
        let arity = self.joint_arity(rhs)?;
        let mut out = match kind {
            CombineKind::Add => self.add_terms(rhs),
            CombineKind::Mul => self.mul_terms(rhs),
        };
        out.arity = arity;
        Ok(out)
    }

    fn add_terms(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.arity = self.arity.max(rhs.arity);
        for (k, c) in &rhs.terms {
            out.push(k.monomial.clone(), k.exponent.clone(), c.clone());
        }
        out
    }

    fn mul_terms(&self, rhs: &Self) -> Self {
        let mut out = Self {
            arity: self.arity.max(rhs.arity),
            terms: BTreeMap::new(),
        };
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.push(
                    ka.monomial.mul(&kb.monomial),
                    ka.exponent.add(&kb.exponent),
                    ca * cb,
                );
            }
        }
        out
    }

    /// Multiply every coefficient by a constant.
    pub fn scale(&self, factor: &GaussianRational) -> Self {
        let mut out = Self {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            out.push(k.monomial.clone(), k.exponent.clone(), c * factor);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one().with_arity(self.arity);
        for _ in 0..exp {
            acc = acc.mul_terms(self);
        }
        acc
    }

    /// `∂/∂x^index`, applied term-wise as `(∂p + λ_index·p)·exp(ℓ)`.
    pub fn partial_derivative(&self, index: usize) -> Self {
        let mut out = Self {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            if let Some((mult, lowered)) = k.monomial.differentiate(index) {
                out.push(lowered, k.exponent.clone(), c * &GaussianRational::int(i64::from(mult)));
            }
            let lambda = k.exponent.coeff(index);
            if !Ring::is_zero(&lambda) {
                out.push(k.monomial.clone(), k.exponent.clone(), c * &lambda);
            }
        }
        out
    }

    /// Formats the scalar in the expression grammar using `names` for
    /// coordinates (falls back to `x{index}` past the end of the list).
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        SymbolicDisplay { value: self, names }
    }

    /// Whether the printed form needs parentheses to be used as a factor.
    pub(crate) fn needs_parens(&self) -> bool {
        self.terms.len() > 1
    }
}

impl From<GaussianRational> for SymbolicScalar {
    fn from(value: GaussianRational) -> Self {
        Self::constant(value)
    }
}

impl Ring for SymbolicScalar {
    fn zero() -> Self {
        Self {
            arity: 0,
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(GaussianRational::int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.add_terms(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_terms(rhs)
    }
    fn neg(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(numer, denom))
    }
    fn conj(&self) -> Self {
        let mut out = Self {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            let exponent = LinearExponent(k.exponent.0.iter().map(|(i, l)| (*i, l.conj())).collect());
            out.push(k.monomial.clone(), exponent, c.conj());
        }
        out
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if !k.monomial.is_one() {
            return None;
        }
        Some(Self::term(
            self.arity,
            Monomial::one(),
            k.exponent.neg(),
            c.inv()?,
        ))
    }
}

impl ComplexRing for SymbolicScalar {
    fn imaginary_unit() -> Self {
        Self::constant(GaussianRational::i())
    }
}

struct SymbolicDisplay<'a> {
    value: &'a SymbolicScalar,
    names: &'a [String],
}

fn coord_name(names: &[String], idx: usize) -> String {
    names.get(idx).cloned().unwrap_or_else(|| format!("x{idx}"))
}

fn fmt_linear(l: &LinearExponent, names: &[String]) -> String {
    let terms = l
        .coeffs()
        .map(|(idx, c)| product_string(c, vec![coord_name(names, idx)]))
        .collect::<Vec<_>>();
    join_signed(terms)
}

/// `c * f1 * f2 ...` with the unit coefficient elided.
pub(crate) fn product_string(c: &GaussianRational, factors: Vec<String>) -> String {
    if factors.is_empty() {
        return c.to_string();
    }
    let body = factors.join("*");
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{c}*{body}")
    }
}

/// Joins signed term strings with ` + ` / ` - `.
pub(crate) fn join_signed(terms: Vec<String>) -> String {
    let mut out = String::new();
    for (n, t) in terms.into_iter().enumerate() {
        if n == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SymbolicDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .value
            .terms
            .iter()
            .map(|(k, c)| {
                let mut factors = Vec::new();
                for (idx, e) in k.monomial.0.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(coord_name(self.names, idx)),
                        _ => factors.push(format!("{}**{e}", coord_name(self.names, idx))),
                    }
                }
                if !k.exponent.is_zero() {
                    factors.push(format!("exp({})", fmt_linear(&k.exponent, self.names)));
                }
                product_string(c, factors)
            })
            .collect();
        write!(f, "{}", join_signed(terms))
    }
}

impl fmt::Display for SymbolicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::int(n)
    }

    fn coord(i: usize) -> SymbolicScalar {
        SymbolicScalar::coordinate(4, i)
    }

    #[test]
    fn gaussian_norm_through_combine() {
        let a = SymbolicScalar::constant(GaussianRational::from_parts(1, 1, 1, 1));
        let b = SymbolicScalar::constant(GaussianRational::from_parts(1, 1, -1, 1));
        assert_eq!(a.combine(&b, CombineKind::Mul).unwrap(), SymbolicScalar::constant(g(2)));
    }

    #[test]
    fn square_of_coordinate() {
        let x = coord(1);
        let x2 = SymbolicScalar::term(4, Monomial::new(vec![0, 2]), LinearExponent::zero(), g(1));
        assert_eq!(x.combine(&x, CombineKind::Mul).unwrap(), x2);
    }

    #[test]
    fn exponents_add_under_multiplication() {
        let l1 = LinearExponent::from_coeffs([(0, g(2))]);
        let l2 = LinearExponent::from_coeffs([(0, g(-5)), (3, GaussianRational::i())]);
        let p = coord(1).mul(&SymbolicScalar::exp_linear(4, l1.clone()));
        let q = coord(2).mul(&SymbolicScalar::exp_linear(4, l2.clone()));
        let expected = coord(1)
            .mul(&coord(2))
            .mul(&SymbolicScalar::exp_linear(4, l1.add(&l2)));
        assert_eq!(p.mul(&q), expected);
    }

    #[test]
    fn mismatched_coordinate_lists() {
        let a = SymbolicScalar::coordinate(3, 0);
        let b = SymbolicScalar::coordinate(4, 0);
        assert_eq!(
            a.combine(&b, CombineKind::Add),
            Err(Error::CoordinateMismatch { left: 3, right: 4 })
        );
        // constants are coordinate-free
        assert!(a.combine(&SymbolicScalar::one(), CombineKind::Mul).is_ok());
    }

    #[test]
    fn derivative_of_polynomial() {
        // ∂/∂x (x² y) = 2 x y, coordinates (t, x, y, z)
        let x2y = coord(1).mul(&coord(1)).mul(&coord(2));
        let expected = coord(1).mul(&coord(2)).scale(&g(2));
        assert_eq!(x2y.partial_derivative(1), expected);
    }

    #[test]
    fn derivative_of_exponential() {
        // ∂/∂t exp(-iEt) = -iE exp(-iEt) with E = 3
        let minus_i_e = GaussianRational::from_parts(0, 1, -3, 1);
        let phase = SymbolicScalar::exp_linear(4, LinearExponent::from_coeffs([(0, minus_i_e.clone())]));
        assert_eq!(phase.partial_derivative(0), phase.scale(&minus_i_e));
        assert!(phase.partial_derivative(1).is_zero());
    }

    #[test]
    fn derivative_of_complex_square() {
        let i = SymbolicScalar::constant(GaussianRational::i());
        let w = coord(1).add(&i.mul(&coord(2)));
        assert_eq!(w.pow(2).partial_derivative(1), w.scale(&g(2)));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let x = coord(1);
        let zero = x.sub(&x);
        assert!(zero.is_zero());
        assert_eq!(zero, SymbolicScalar::zero());
    }

    #[test]
    fn inverse_of_exponential_term() {
        let e = SymbolicScalar::exp_linear(4, LinearExponent::from_coeffs([(0, g(1))])).scale(&g(2));
        assert!(e.mul(&e.try_inv().unwrap()).is_one());
        assert!(coord(1).try_inv().is_none());
    }

    #[test]
    fn linear_form_roundtrip() {
        let l = coord(0).scale(&g(2)).sub(&coord(1).scale(&GaussianRational::i()));
        let lin = l.as_linear_form().unwrap();
        assert_eq!(lin.coeff(0), g(2));
        assert_eq!(lin.coeff(1), -&GaussianRational::i());
        assert!(coord(0).mul(&coord(1)).as_linear_form().is_none());
    }

    #[test]
    fn display_uses_names() {
        let names: Vec<String> = ["t", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let s = coord(1).pow(2).scale(&g(3)).sub(&coord(2));
        assert_eq!(s.display_with(&names).to_string(), "-y + 3*x**2");
    }
}
