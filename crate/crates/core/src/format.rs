//! Canonical text form of algebra elements, in the expression grammar.
//!
//! Terms are printed in blade order (form mask, then value mask) as
//! `coefficient*form-generators*value-generators`, so exact elements print
//! to a string that parses back to the same element.

use std::fmt;

use num::complex::Complex64;

use crate::clifford::{blade_label, Blade, Multivector, Signature};
use crate::scalar::symbolic::{join_signed, product_string};
use crate::scalar::{GaussianRational, Ring, SymbolicScalar};
use crate::tensor::CVForm;

/// Coefficient rings that can print themselves as grammar factors.
pub trait FormatCoeff: Ring {
    /// Text of `self` followed by `factors`, e.g. `3/2*x*dx`.
    fn term_string(&self, coords: &[String], factors: Vec<String>) -> String;
}

impl FormatCoeff for GaussianRational {
    fn term_string(&self, _coords: &[String], factors: Vec<String>) -> String {
        product_string(self, factors)
    }
}

impl FormatCoeff for SymbolicScalar {
    fn term_string(&self, coords: &[String], factors: Vec<String>) -> String {
        if factors.is_empty() {
            return self.display_with(coords).to_string();
        }
        if self.needs_parens() {
            return format!("({})*{}", self.display_with(coords), factors.join("*"));
        }
        // single term: splice the coefficient's own factors in front
        let text = self.display_with(coords).to_string();
        match text.as_str() {
            "1" => factors.join("*"),
            "-1" => format!("-{}", factors.join("*")),
            _ => format!("{text}*{}", factors.join("*")),
        }
    }
}

impl FormatCoeff for f64 {
    fn term_string(&self, _coords: &[String], factors: Vec<String>) -> String {
        if factors.is_empty() {
            format!("{self:e}")
        } else {
            format!("{self:e}*{}", factors.join("*"))
        }
    }
}

impl FormatCoeff for Complex64 {
    fn term_string(&self, _coords: &[String], factors: Vec<String>) -> String {
        let c = format!("({:e} + {:e}*i)", self.re, self.im);
        if factors.is_empty() {
            c
        } else {
            format!("{c}*{}", factors.join("*"))
        }
    }
}

fn blade_factors(blade: Blade, sig: &Signature) -> Vec<String> {
    if blade == Blade::UNIT {
        Vec::new()
    } else {
        vec![blade_label(blade, sig)]
    }
}

impl<S: FormatCoeff> fmt::Display for CVForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = self.space();
        let terms = self
            .terms()
            .map(|(b, c)| {
                let mut factors = blade_factors(b.form, space.form_sig());
                factors.extend(blade_factors(b.value, space.value_sig()));
                c.term_string(space.coords(), factors)
            })
            .collect();
        write!(f, "{}", join_signed(terms))
    }
}

impl<S: FormatCoeff> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = self.signature();
        let terms = self
            .terms()
            .map(|(b, c)| c.term_string(&[], blade_factors(b, sig)))
            .collect();
        write!(f, "{}", join_signed(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{PairedBlade, Space};

    #[test]
    fn gaussian_cvform_text() {
        let s = Space::lorentzian();
        let half = GaussianRational::from_parts(1, 2, 0, 1);
        let e = CVForm::scalar(s.clone(), half.clone()).add(&CVForm::term(
            s,
            PairedBlade::new(Blade::from_indices(&[0]), Blade::UNIT),
            GaussianRational::from_parts(0, 1, -1, 2),
        ));
        assert_eq!(e.to_string(), "1/2 - 1/2*i*dt");
    }

    #[test]
    fn symbolic_cvform_text() {
        let s = Space::euclidean3();
        let x = SymbolicScalar::coordinate(3, 0);
        let y = SymbolicScalar::coordinate(3, 1);
        let b = PairedBlade::new(Blade::from_indices(&[0]), Blade::from_indices(&[0]));
        let e = CVForm::term(s.clone(), b, x.add(&y));
        assert_eq!(e.to_string(), "(y + x)*dx*a1");
        let e = CVForm::term(s, b, y.neg());
        assert_eq!(e.to_string(), "-y*dx*a1");
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(CVForm::<GaussianRational>::zero(Space::euclidean3()).to_string(), "0");
    }
}
