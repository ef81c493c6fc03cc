//! Idempotent families, resolutions of unity, ideal representatives and
//! the canonical ternary idempotents of the Lorentzian mirror algebra.
//!
//! Every family element has the shape `½(1 + c·S)` for one paired blade
//! `S` and a unit `c ∈ {±1, ±i}`; it is idempotent iff `(c·S)² = 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::complex::Complex64;

use crate::clifford::ProductKind;
use crate::error::{Error, Result};
use crate::scalar::{ExactCoeff, FloatLike, GaussianRational, Ring};
use crate::tensor::{CVForm, PairedBlade, Space};

pub type Exact = CVForm<GaussianRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `½(1 ∓ i dt)`
    KahlerEps,
    /// `½(1 ± i dx^i dx^j)`
    KahlerI,
    /// `½(1 ± i dx^i)`; `(i dx)² = −1`, so this one is *not* idempotent.
    KahlerP,
    /// `½(1 ± dx^i)`
    RealTranslation,
    /// `½(1 ± dt dx^i)`
    Hyperbolic,
    /// `½(1 ∓ dt e0)`
    MirrorEps,
    /// `½(1 ± w_k a_ij)`
    MirrorI,
    /// `½(1 ± dx^i a_i)`
    MirrorP,
}

/// Spatial plane `(i, j)` with distinct axes in `1..=3`; `k` completes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Plane(pub usize, pub usize);

impl Plane {
    pub const CANONICAL: [Plane; 3] = [Plane(1, 2), Plane(2, 3), Plane(3, 1)];

    pub fn new(i: usize, j: usize) -> Result<Self> {
        let p = Plane(i, j);
        p.validate()?;
        Ok(p)
    }

    fn validate(self) -> Result<()> {
        let ok = |a| (1..=3).contains(&a);
        if ok(self.0) && ok(self.1) && self.0 != self.1 {
            Ok(())
        } else {
            Err(Error::InvalidPlane(self.0, self.1))
        }
    }

    /// The axis orthogonal to the plane.
    pub fn normal(self) -> usize {
        6 - self.0 - self.1
    }

    /// Parses `"12"`, `"23"`, `"31"` (any two distinct digits 1..3).
    pub fn parse(text: &str) -> Result<Self> {
        let digits: Vec<usize> = text
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or(Error::InvalidPlane(0, 0))?;
        match digits[..] {
            [i, j] => Plane::new(i, j),
            _ => Err(Error::InvalidPlane(0, 0)),
        }
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    None,
    Axis(usize),
    Plane(Plane),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdempotentSpec {
    pub family: Family,
    pub index: Index,
    pub sign: Sign,
}

impl IdempotentSpec {
    pub fn kahler_eps(sign: Sign) -> Self {
        Self { family: Family::KahlerEps, index: Index::None, sign }
    }
    pub fn kahler_i(plane: Plane, sign: Sign) -> Self {
        Self { family: Family::KahlerI, index: Index::Plane(plane), sign }
    }
    pub fn kahler_p(axis: usize, sign: Sign) -> Self {
        Self { family: Family::KahlerP, index: Index::Axis(axis), sign }
    }
    pub fn real_translation(axis: usize, sign: Sign) -> Self {
        Self { family: Family::RealTranslation, index: Index::Axis(axis), sign }
    }
    pub fn hyperbolic(axis: usize, sign: Sign) -> Self {
        Self { family: Family::Hyperbolic, index: Index::Axis(axis), sign }
    }
    pub fn mirror_eps(sign: Sign) -> Self {
        Self { family: Family::MirrorEps, index: Index::None, sign }
    }
    pub fn mirror_i(plane: Plane, sign: Sign) -> Self {
        Self { family: Family::MirrorI, index: Index::Plane(plane), sign }
    }
    pub fn mirror_p(axis: usize, sign: Sign) -> Self {
        Self { family: Family::MirrorP, index: Index::Axis(axis), sign }
    }

    fn axis(&self) -> Result<usize> {
        match self.index {
            Index::Axis(a) if (1..=3).contains(&a) => Ok(a),
            Index::Axis(a) => Err(Error::InvalidAxis(a)),
            _ => Err(Error::InvalidAxis(0)),
        }
    }

    fn plane(&self) -> Result<Plane> {
        match self.index {
            Index::Plane(p) => {
                p.validate()?;
                Ok(p)
            }
            _ => Err(Error::InvalidPlane(0, 0)),
        }
    }

    /// `(c, S)` with the element equal to `½(1 + c·S)`.
    fn generator(&self, space: &Arc<Space>) -> Result<(GaussianRational, Exact)> {
        let gen = |i: usize| Exact::form_generator(space.clone(), i);
        let mirror = |i: usize| Exact::mirror_generator(space.clone(), i);
        let spatial = |a: usize| space.spatial_index(a);
        let s = GaussianRational::int(self.sign.value());
        let i = GaussianRational::i();
        Ok(match self.family {
            Family::KahlerEps => (-&(&s * &i), gen(space.time_index()?)?),
            Family::KahlerI => {
                let p = self.plane()?;
                (&s * &i, gen(spatial(p.0)?)?.gp(&gen(spatial(p.1)?)?))
            }
            Family::KahlerP => (&s * &i, gen(spatial(self.axis()?)?)?),
            Family::RealTranslation => (s, gen(spatial(self.axis()?)?)?),
            Family::Hyperbolic => (s, gen(space.time_index()?)?.gp(&gen(spatial(self.axis()?)?)?)),
            Family::MirrorEps => (-&s, mirror(space.time_index()?)?),
            Family::MirrorI => {
                let p = self.plane()?;
                (s, mirror(spatial(p.0)?)?.gp(&mirror(spatial(p.1)?)?))
            }
            Family::MirrorP => (s, mirror(spatial(self.axis()?)?)?),
        })
    }

    /// The element `½(1 + c·S)` without checking idempotency.
    pub fn element(&self, space: &Arc<Space>) -> Result<Exact> {
        let (c, s) = self.generator(space)?;
        let half = GaussianRational::from_parts(1, 2, 0, 1);
        Ok(Exact::one(space.clone()).add(&s.scale(&c)).scale(&half))
    }
}

impl fmt::Display for IdempotentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.sign.symbol();
        match (self.family, self.index) {
            (Family::KahlerEps, _) => write!(f, "eps{s}"),
            (Family::KahlerI, Index::Plane(p)) => write!(f, "I{p}{s}"),
            (Family::KahlerP, Index::Axis(a)) => write!(f, "P{a}{s}"),
            (Family::RealTranslation, Index::Axis(a)) => write!(f, "T{a}{s}"),
            (Family::Hyperbolic, Index::Axis(a)) => write!(f, "H{a}{s}"),
            (Family::MirrorEps, _) => write!(f, "mEps{s}"),
            (Family::MirrorI, Index::Plane(p)) => write!(f, "mI{p}{s}"),
            (Family::MirrorP, Index::Axis(a)) => write!(f, "mP{a}{s}"),
            (family, index) => write!(f, "{family:?}{index:?}{s}"),
        }
    }
}

/// Builds the element and checks `e ∨ e = e` exactly.
pub fn make_idempotent(space: &Arc<Space>, spec: IdempotentSpec) -> Result<Exact> {
    let e = spec.element(space)?;
    if e.gp(&e) == e {
        Ok(e)
    } else {
        Err(Error::NotIdempotent(format!("{spec}: {e}")))
    }
}

/// All `(∨, ∨)` products `a_1 ∨ b_1`, `a_1 ∨ b_2`, … of two families.
pub fn products(left: &[Exact], right: &[Exact]) -> Vec<Exact> {
    left.iter().flat_map(|a| right.iter().map(move |b| a.gp(b))).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionReport {
    pub sum: Exact,
    pub sums_to_one: bool,
    /// Index pairs `(a, b)`, `a ≠ b`, with `E_a ∨ E_b ≠ 0`.
    pub non_orthogonal: Vec<(usize, usize)>,
    /// Index pairs with `E_a ∨ E_b ≠ E_b ∨ E_a`.
    pub non_commuting: Vec<(usize, usize)>,
}

impl ResolutionReport {
    pub fn is_resolution(&self) -> bool {
        self.sums_to_one && self.non_orthogonal.is_empty()
    }
}

/// Whether a family sums to one, and which ordered pairs fail to annihilate or commute.
pub fn resolution_check(family: &[Exact]) -> Result<ResolutionReport> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    let mut sum = Exact::zero(first.space().clone());
    for e in family {
        sum = sum.try_add(e)?;
    }
    let mut non_orthogonal = Vec::new();
    let mut non_commuting = Vec::new();
    for (a, ea) in family.iter().enumerate() {
        for (b, eb) in family.iter().enumerate() {
            if a == b {
                continue;
            }
            let ab = ea.gp(eb);
            if !ab.is_zero() {
                non_orthogonal.push((a, b));
            }
            if a < b && ab != eb.gp(ea) {
                non_commuting.push((a, b));
            }
        }
    }
    Ok(ResolutionReport {
        sums_to_one: sum == Exact::one(first.space().clone()),
        sum,
        non_orthogonal,
        non_commuting,
    })
}

/// Components `u ∨ E_k`; fails unless `Σ E_k = 1`.
pub fn resolve<S: ExactCoeff>(u: &CVForm<S>, family: &[Exact]) -> Result<Vec<CVForm<S>>> {
    let report = resolution_check(family)?;
    if !report.sums_to_one {
        return Err(Error::IncompleteFamily);
    }
    Ok(family.iter().map(|e| u.gp(&lift(e))).collect())
}

/// Gaussian-rational element in any exact ring.
pub fn lift<S: ExactCoeff>(e: &Exact) -> CVForm<S> {
    e.map_ring(S::from_gaussian)
}

/// `(u⁺, u⁻)` with `u = u⁺ ∨ e⁺ + u⁻ ∨ e⁻`, `e± = ½(1 ± s)`.
///
/// `s` must be a single term `c·S` with `s ∨ s = 1`. Blades pair up as
/// `(B, B·S)`; `u±` live on the smaller mask of each pair.
pub fn ideal_representative<S: ExactCoeff>(
    u: &CVForm<S>,
    s: &Exact,
) -> Result<(CVForm<S>, CVForm<S>)> {
    let space = u.space().clone();
    if s.gp(s) != Exact::one(space.clone()) {
        return Err(Error::NotInvolution(format!("{s} does not square to 1")));
    }
    let mut terms = s.terms();
    let (blade_s, c) = match (terms.next(), terms.next()) {
        (Some((b, c)), None) => (b, c.clone()),
        _ => return Err(Error::NotInvolution(format!("{s} is not a single term"))),
    };
    let mut plus = CVForm::zero(space.clone());
    let mut minus = CVForm::zero(space.clone());
    if blade_s == PairedBlade::UNIT {
        // s = ±1: one of e± is 1, the other 0
        let target = if c == GaussianRational::int(1) { &mut plus } else { &mut minus };
        *target = u.clone();
        return Ok((plus, minus));
    }
    let unit = Exact::term(space.clone(), blade_s, GaussianRational::int(1));
    let mut seen = std::collections::BTreeSet::new();
    for (b, _) in u.terms() {
        let probe = Exact::term(space.clone(), b, GaussianRational::int(1)).gp(&unit);
        let (partner, _) = probe.terms().next().expect("blade product is a single term");
        let rep = b.min(partner);
        if !seen.insert(rep) {
            continue;
        }
        let rep_times_s = Exact::term(space.clone(), rep, GaussianRational::int(1)).gp(&unit);
        let (partner, sigma) = rep_times_s.terms().next().map(|(p, c)| (p, c.clone())).unwrap();
        // R e± = ½(R ± cσ R')
        let inv = (&c * &sigma).inv().expect("unit");
        let alpha = u.coeff(rep);
        let beta = u.coeff(partner).mul(&S::from_gaussian(&inv));
        plus.add_term(rep, alpha.add(&beta));
        minus.add_term(rep, alpha.sub(&beta));
    }
    Ok((plus, minus))
}

/// One of the 72 raw products `𝛆^a 𝐈_ij^b 𝐏_m^c`.
#[derive(Clone, Debug, PartialEq)]
pub struct TernaryProduct {
    pub eps_sign: Sign,
    pub plane: Plane,
    pub i_sign: Sign,
    pub axis: usize,
    pub p_sign: Sign,
    pub expansion: Exact,
}

impl TernaryProduct {
    pub fn build(space: &Arc<Space>, eps: Sign, plane: Plane, i: Sign, axis: usize, p: Sign) -> Result<Self> {
        let e = make_idempotent(space, IdempotentSpec::mirror_eps(eps))?;
        let ii = make_idempotent(space, IdempotentSpec::mirror_i(plane, i))?;
        let pp = make_idempotent(space, IdempotentSpec::mirror_p(axis, p))?;
        Ok(Self {
            eps_sign: eps,
            plane,
            i_sign: i,
            axis,
            p_sign: p,
            expansion: e.gp(&ii).gp(&pp),
        })
    }

    pub fn label(&self) -> String {
        format!(
            "E{} I{}{} P{}{}",
            self.eps_sign.symbol(),
            self.plane,
            self.i_sign.symbol(),
            self.axis,
            self.p_sign.symbol()
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationReport {
    pub raw_count: usize,
    pub equality_class_count: usize,
    pub reflection_class_count: usize,
    /// Labels of the products in each equality class, in build order.
    pub equality_classes: Vec<Vec<String>>,
    /// Labels per reflection class (union of equality classes).
    pub reflection_classes: Vec<Vec<String>>,
    pub all_idempotent: bool,
    pub rank: usize,
    pub products: Vec<TernaryProduct>,
}

fn key(e: &Exact) -> Vec<(PairedBlade, GaussianRational)> {
    e.terms().map(|(b, c)| (b, c.clone())).collect()
}

/// Ternary products restricted to the given planes.
pub fn ternary_products(space: &Arc<Space>, planes: &[Plane]) -> Result<Vec<TernaryProduct>> {
    let mut out = Vec::new();
    for eps in Sign::BOTH {
        for &plane in planes {
            for i in Sign::BOTH {
                for axis in 1..=3 {
                    for p in Sign::BOTH {
                        out.push(TernaryProduct::build(space, eps, plane, i, axis, p)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Builds and classifies the raw products over `planes`.
pub fn enumerate_ternary(space: &Arc<Space>, planes: &[Plane]) -> Result<EnumerationReport> {
    let products = ternary_products(space, planes)?;
    let all_idempotent = products.iter().all(|t| t.expansion.gp(&t.expansion) == t.expansion);

    // equality classes, numbered by first appearance
    let mut class_of_key: BTreeMap<Vec<(PairedBlade, GaussianRational)>, usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(products.len());
    for t in &products {
        let n = class_of_key.len();
        class_of.push(*class_of_key.entry(key(&t.expansion)).or_insert(n));
    }
    let n_classes = class_of_key.len();
    let mut equality_classes = vec![Vec::new(); n_classes];
    for (t, &c) in products.iter().zip(&class_of) {
        equality_classes[c].push(t.label());
    }

    // reflection: I^s P_k^t ~ I^-s P_k^-t for k normal to the plane
    let mut parent: Vec<usize> = (0..n_classes).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let position = |eps, plane, i, axis, p| {
        products.iter().position(|t| {
            (t.eps_sign, t.plane, t.i_sign, t.axis, t.p_sign) == (eps, plane, i, axis, p)
        })
    };
    for t in &products {
        if t.axis != t.plane.normal() {
            continue;
        }
        let a = position(t.eps_sign, t.plane, t.i_sign, t.axis, t.p_sign).unwrap();
        let b = position(t.eps_sign, t.plane, t.i_sign.flip(), t.axis, t.p_sign.flip()).unwrap();
        let (ra, rb) = (find(&mut parent, class_of[a]), find(&mut parent, class_of[b]));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut reflection: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for c in 0..n_classes {
        let r = find(&mut parent, c);
        reflection.entry(r).or_default().extend(equality_classes[c].iter().cloned());
    }

    let distinct: Vec<Exact> = {
        let mut firsts = vec![None; n_classes];
        for (t, &c) in products.iter().zip(&class_of) {
            firsts[c].get_or_insert_with(|| t.expansion.clone());
        }
        firsts.into_iter().flatten().collect()
    };
    let rank = rank_of_span(&distinct)?;

    Ok(EnumerationReport {
        raw_count: products.len(),
        equality_class_count: n_classes,
        reflection_class_count: reflection.len(),
        equality_classes,
        reflection_classes: reflection.into_values().collect(),
        all_idempotent,
        rank,
        products,
    })
}

/// Rank of the coefficient matrix over the mirror basis blades, by exact
/// elimination over `Q(i)`.
pub fn rank_of_span(elements: &[Exact]) -> Result<usize> {
    let Some(first) = elements.first() else {
        return Ok(0);
    };
    if elements.iter().any(|e| !e.is_mirror()) {
        return Err(Error::NonMirror);
    }
    let basis = first.space().mirror_blades();
    let mut rows: Vec<Vec<GaussianRational>> = elements
        .iter()
        .map(|e| basis.iter().map(|b| e.coeff(*b)).collect())
        .collect();
    Ok(row_reduce(&mut rows))
}

/// In-place Gaussian elimination; returns the rank.
pub fn row_reduce(rows: &mut [Vec<GaussianRational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<GaussianRational> = rows[rank].iter().map(|c| c * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row) {
                *c = &*c - &(&factor * p);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Cell of the 2×3 table for one plane.
#[derive(Clone, Debug, PartialEq)]
pub struct TableCell {
    pub eps_sign: Sign,
    pub p_sign: Sign,
    pub column: usize,
    pub product: TernaryProduct,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table12 {
    pub plane: Plane,
    /// Column headers as `(I sign, P axis)`: `(+, i)`, `(−, j)`, `(+, k)`.
    pub columns: [(Sign, usize); 3],
    pub cells: Vec<TableCell>,
}

/// Twelve ternary idempotents of one plane: rows by P sign, columns
/// `I⁺P_i`, `I⁻P_j`, `I⁺P_k`, each for `𝛆⁺` and `𝛆⁻`.
pub fn table_12(space: &Arc<Space>, plane: Plane) -> Result<Table12> {
    plane.validate()?;
    let columns = [(Sign::Plus, plane.0), (Sign::Minus, plane.1), (Sign::Plus, plane.normal())];
    let mut cells = Vec::new();
    for eps in Sign::BOTH {
        for p in Sign::BOTH {
            for (column, (i, axis)) in columns.iter().enumerate() {
                cells.push(TableCell {
                    eps_sign: eps,
                    p_sign: p,
                    column,
                    product: TernaryProduct::build(space, eps, plane, *i, *axis, p)?,
                });
            }
        }
    }
    Ok(Table12 { plane, columns, cells })
}

impl fmt::Display for Table12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|(s, a)| format!("I{}{} P{a}", self.plane, s.symbol()))
            .collect();
        writeln!(f, "plane {}: columns [{}]", self.plane, header.join(" | "))?;
        for cell in &self.cells {
            writeln!(
                f,
                "  [{}][{}] {:<18} = {}",
                match (cell.eps_sign, cell.p_sign) {
                    (Sign::Plus, Sign::Plus) => "E+ row P+",
                    (Sign::Plus, Sign::Minus) => "E+ row P-",
                    (Sign::Minus, Sign::Plus) => "E- row P+",
                    (Sign::Minus, Sign::Minus) => "E- row P-",
                },
                cell.column + 1,
                cell.product.label(),
                cell.product.expansion
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseKind {
    Circular,
    Hyperbolic,
}

/// `cos θ + s sin θ` (`s² = −1`) or `cosh θ + s sinh θ` (`s² = +1`).
pub fn phase_factor<F: FloatLike>(kind: PhaseKind, s: &CVForm<F>, theta: f64) -> Result<CVForm<F>> {
    const TOL: f64 = 1e-12;
    let (expected, c, sn) = match kind {
        PhaseKind::Circular => (-1, theta.cos(), theta.sin()),
        PhaseKind::Hyperbolic => (1, theta.cosh(), theta.sinh()),
    };
    let sq = s.gp(s);
    let target = CVForm::scalar(s.space().clone(), F::from_f64(f64::from(expected)));
    if max_deviation(&sq, &target) > TOL {
        return Err(Error::BadSquare {
            expected,
            detail: format!("{sq:?}"),
        });
    }
    Ok(CVForm::scalar(s.space().clone(), F::from_f64(c)).add(&s.scale(&F::from_f64(sn))))
}

/// Largest coefficient deviation between two float elements.
pub fn max_deviation<F: FloatLike>(a: &CVForm<F>, b: &CVForm<F>) -> f64 {
    a.sub(b)
        .terms()
        .map(|(_, c)| c.abs_diff(&F::zero()))
        .fold(0.0, f64::max)
}

pub fn to_complex(e: &Exact) -> CVForm<Complex64> {
    e.map_ring(|c| {
        let (re, im) = c.to_f64_pair();
        Complex64::new(re, im)
    })
}

/// Whether every pair in `family` commutes under `(∨, ∨)`.
pub fn mutually_commute(family: &[Exact]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(a, x)| family[a + 1..].iter().all(|y| x.commutes_with(y)))
}

/// `(∨, ∧)` product, which leaves the mirror subalgebra.
pub fn mixed_product(a: &Exact, b: &Exact) -> Result<Exact> {
    a.paired_product(b, ProductKind::Clifford, ProductKind::Exterior)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;

    fn g(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
        GaussianRational::from_parts(re_n, re_d, im_n, im_d)
    }

    fn pb(form: &[usize], value: &[usize]) -> PairedBlade {
        PairedBlade::new(Blade::from_indices(form), Blade::from_indices(value))
    }

    #[test]
    fn kahler_eps_and_i() {
        let l = Space::lorentzian();
        let ep = make_idempotent(&l, IdempotentSpec::kahler_eps(Sign::Plus)).unwrap();
        let em = make_idempotent(&l, IdempotentSpec::kahler_eps(Sign::Minus)).unwrap();
        assert_eq!(ep, Exact::from_terms(l.clone(), [(PairedBlade::UNIT, g(1, 2, 0, 1)), (pb(&[0], &[]), g(0, 1, -1, 2))]));
        assert!(ep.gp(&em).is_zero());
        assert_eq!(ep.add(&em), Exact::one(l.clone()));

        let ip = make_idempotent(&l, IdempotentSpec::kahler_i(Plane(1, 2), Sign::Plus)).unwrap();
        let im = make_idempotent(&l, IdempotentSpec::kahler_i(Plane(1, 2), Sign::Minus)).unwrap();
        assert!(ip.gp(&im).is_zero());
        assert!(ep.commutes_with(&ip));
    }

    #[test]
    fn kahler_p_is_not_idempotent() {
        let l = Space::lorentzian();
        let spec = IdempotentSpec::kahler_p(1, Sign::Plus);
        assert!(matches!(make_idempotent(&l, spec), Err(Error::NotIdempotent(_))));
        let p = spec.element(&l).unwrap();
        let ep = make_idempotent(&l, IdempotentSpec::kahler_eps(Sign::Plus)).unwrap();
        assert!(!p.commutes_with(&ep));
    }

    #[test]
    fn real_families() {
        let l = Space::lorentzian();
        for s in Sign::BOTH {
            for spec in [
                IdempotentSpec::real_translation(3, s),
                IdempotentSpec::hyperbolic(3, s),
                IdempotentSpec::mirror_eps(s),
                IdempotentSpec::mirror_i(Plane(3, 1), s),
                IdempotentSpec::mirror_p(2, s),
            ] {
                let e = make_idempotent(&l, spec).unwrap();
                assert!(e.terms().all(|(_, c)| c.is_real()), "{spec}");
            }
        }
        let me = make_idempotent(&l, IdempotentSpec::mirror_eps(Sign::Plus)).unwrap();
        assert_eq!(me.coeff(pb(&[0], &[0])), g(-1, 2, 0, 1));
        assert!(me.is_mirror());
    }

    #[test]
    fn invalid_specs() {
        let l = Space::lorentzian();
        let e3 = Space::euclidean3();
        assert!(matches!(
            make_idempotent(&l, IdempotentSpec::mirror_i(Plane(1, 1), Sign::Plus)),
            Err(Error::InvalidPlane(1, 1))
        ));
        assert!(matches!(
            make_idempotent(&l, IdempotentSpec::mirror_p(4, Sign::Plus)),
            Err(Error::InvalidAxis(4))
        ));
        assert!(matches!(
            make_idempotent(&e3, IdempotentSpec::mirror_eps(Sign::Plus)),
            Err(Error::NoTimeCoordinate)
        ));
        assert_eq!(Plane::parse("31").unwrap(), Plane(3, 1));
        assert!(Plane::parse("11").is_err());
        assert!(Plane::parse("1").is_err());
    }

    #[test]
    fn mirror_sign_on_negative_square_is_rejected() {
        // value generators all square to +1 while the forms keep dt² = −1
        let forms = crate::clifford::Signature::lorentzian_forms();
        let values = crate::clifford::Signature::new(["e0", "a1", "a2", "a3"], &[1, 1, 1, 1]).unwrap();
        let s = Arc::new(Space::new(["t", "x", "y", "z"], forms, values).unwrap());
        assert!(matches!(
            make_idempotent(&s, IdempotentSpec::mirror_eps(Sign::Plus)),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn resolution_examples() {
        let l = Space::lorentzian();
        let eps: Vec<Exact> = Sign::BOTH.iter().map(|s| make_idempotent(&l, IdempotentSpec::kahler_eps(*s)).unwrap()).collect();
        let ixy: Vec<Exact> = Sign::BOTH.iter().map(|s| make_idempotent(&l, IdempotentSpec::kahler_i(Plane(1, 2), *s)).unwrap()).collect();
        let px: Vec<Exact> = Sign::BOTH.iter().map(|s| IdempotentSpec::kahler_p(1, *s).element(&l).unwrap()).collect();

        let r = resolution_check(&products(&eps, &ixy)).unwrap();
        assert!(r.is_resolution());
        assert!(r.non_commuting.is_empty());

        let r = resolution_check(&products(&px, &ixy)).unwrap();
        assert!(r.sums_to_one);
        assert!(!r.non_orthogonal.is_empty());

        let mirror: Vec<Exact> = [
            IdempotentSpec::mirror_eps(Sign::Plus),
            IdempotentSpec::mirror_eps(Sign::Minus),
            IdempotentSpec::mirror_i(Plane(1, 2), Sign::Plus),
            IdempotentSpec::mirror_i(Plane(2, 3), Sign::Minus),
            IdempotentSpec::mirror_p(1, Sign::Plus),
            IdempotentSpec::mirror_p(3, Sign::Minus),
        ]
        .into_iter()
        .map(|s| make_idempotent(&l, s).unwrap())
        .collect();
        assert!(mutually_commute(&mirror));
        assert!(matches!(resolution_check(&[]), Err(Error::EmptyFamily)));
    }

    #[test]
    fn resolve_examples() {
        let l = Space::lorentzian();
        let eps: Vec<Exact> = Sign::BOTH.iter().map(|s| make_idempotent(&l, IdempotentSpec::kahler_eps(*s)).unwrap()).collect();
        let one = Exact::one(l.clone());
        assert_eq!(resolve(&one, &eps).unwrap(), eps);
        let dt = Exact::form_generator(l.clone(), 0).unwrap();
        let parts = resolve(&dt, &eps).unwrap();
        assert_eq!(parts[0].add(&parts[1]), dt);
        assert!(matches!(resolve(&dt, &eps[..1]), Err(Error::IncompleteFamily)));
    }

    #[test]
    fn ideal_representative_examples() {
        let l = Space::lorentzian();
        let i = GaussianRational::i();
        let s_eps = Exact::term(l.clone(), pb(&[0], &[]), -&i);
        let (p, m) = ideal_representative(&Exact::one(l.clone()), &s_eps).unwrap();
        assert_eq!((p.clone(), m.clone()), (Exact::one(l.clone()), Exact::one(l.clone())));

        let dt = Exact::form_generator(l.clone(), 0).unwrap();
        let (p, m) = ideal_representative(&dt, &s_eps).unwrap();
        assert_eq!(p, Exact::scalar(l.clone(), i.clone()));
        assert_eq!(m, Exact::scalar(l.clone(), -&i));

        let s_i = Exact::term(l.clone(), pb(&[1, 2], &[]), i.clone());
        let dxdy = Exact::term(l.clone(), pb(&[1, 2], &[]), GaussianRational::int(1));
        let (p, m) = ideal_representative(&dxdy, &s_i).unwrap();
        assert_eq!(p, Exact::scalar(l.clone(), -&i));
        assert_eq!(m, Exact::scalar(l.clone(), i.clone()));

        let bad = Exact::form_generator(l.clone(), 0).unwrap();
        assert!(matches!(ideal_representative(&dt, &bad), Err(Error::NotInvolution(_))));
    }

    #[test]
    fn rank_examples() {
        let l = Space::lorentzian();
        let basis: Vec<Exact> = l
            .mirror_blades()
            .into_iter()
            .map(|b| Exact::term(l.clone(), b, GaussianRational::int(1)))
            .collect();
        assert_eq!(rank_of_span(&basis).unwrap(), 16);
        let e = make_idempotent(&l, IdempotentSpec::mirror_p(1, Sign::Plus)).unwrap();
        assert_eq!(rank_of_span(&[e.clone(), e]).unwrap(), 1);
        let dx = Exact::form_generator(l.clone(), 1).unwrap();
        assert!(matches!(rank_of_span(&[dx]), Err(Error::NonMirror)));
    }

    #[test]
    fn merge_identities() {
        let l = Space::lorentzian();
        let four = GaussianRational::int(4);
        let ii = |s| make_idempotent(&l, IdempotentSpec::mirror_i(Plane(1, 2), s)).unwrap();
        let pp = |a, s| make_idempotent(&l, IdempotentSpec::mirror_p(a, s)).unwrap();
        let one = Exact::one(l.clone());
        let dx = Exact::mirror_generator(l.clone(), 1).unwrap();
        let dy = Exact::mirror_generator(l.clone(), 2).unwrap();
        for s in Sign::BOTH {
            let sv = GaussianRational::int(s.value());
            let lhs = ii(Sign::Plus).gp(&pp(1, s)).scale(&four);
            assert_eq!(lhs, one.add(&dx.gp(&dy)).gp(&one.add(&dx.scale(&sv))));
            assert_eq!(lhs, ii(Sign::Plus).gp(&pp(2, s)).scale(&four));

            let lhs = ii(Sign::Minus).gp(&pp(1, s)).scale(&four);
            assert_eq!(lhs, one.sub(&dx.gp(&dy)).gp(&one.sub(&dy.scale(&sv))));
            assert_eq!(lhs, ii(Sign::Minus).gp(&pp(2, s.flip())).scale(&four));
        }
    }

    #[test]
    fn enumeration_counts() {
        let l = Space::lorentzian();
        let r = enumerate_ternary(&l, &Plane::CANONICAL).unwrap();
        assert_eq!(r.raw_count, 72);
        assert!(r.all_idempotent);
        assert_eq!(r.equality_class_count, 48);
        assert_eq!(r.reflection_class_count, 36);
        assert_eq!(r.rank, 16);
        assert!(r.products.iter().all(|t| t.expansion.is_mirror()));
    }

    #[test]
    fn table_layout() {
        let l = Space::lorentzian();
        let t = table_12(&l, Plane(1, 2)).unwrap();
        assert_eq!(t.cells.len(), 12);
        assert_eq!(t.columns, [(Sign::Plus, 1), (Sign::Minus, 2), (Sign::Plus, 3)]);
        for (a, x) in t.cells.iter().enumerate() {
            let e = &x.product.expansion;
            assert_eq!(&e.gp(e), e);
            for y in &t.cells[a + 1..] {
                assert_ne!(e, &y.product.expansion);
            }
        }
        let t = table_12(&l, Plane(2, 3)).unwrap();
        assert_eq!(t.columns[2], (Sign::Plus, 1));
        assert!(t.to_string().starts_with("plane 23"));
    }

    #[test]
    fn phase_factors() {
        let l = Space::lorentzian();
        let a12 = to_complex(&Exact::term(l.clone(), pb(&[], &[1, 2]), GaussianRational::int(1)));
        let half_turn = phase_factor(PhaseKind::Circular, &a12, std::f64::consts::PI).unwrap();
        assert!(max_deviation(&half_turn, &CVForm::scalar(l.clone(), Complex64::new(-1.0, 0.0))) < 1e-12);
        let a3 = to_complex(&Exact::value_generator(l.clone(), 3).unwrap());
        let one = phase_factor(PhaseKind::Hyperbolic, &a3, 0.0).unwrap();
        assert!(max_deviation(&one, &CVForm::one(l.clone())) < 1e-12);
        assert!(matches!(phase_factor(PhaseKind::Circular, &a3, 1.0), Err(Error::BadSquare { expected: -1, .. })));

        let dt = to_complex(&Exact::form_generator(l.clone(), 0).unwrap());
        for s in Sign::BOTH {
            let eps = to_complex(&make_idempotent(&l, IdempotentSpec::kahler_eps(s)).unwrap());
            let theta = 0.7;
            let lhs = phase_factor(PhaseKind::Circular, &dt, theta).unwrap().gp(&eps);
            let phase = Complex64::new(0.0, s.value() as f64 * theta).exp();
            assert!(max_deviation(&lhs, &eps.scale(&phase)) < 1e-12);
        }
    }
}
