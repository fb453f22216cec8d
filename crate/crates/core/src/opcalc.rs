//! Operator calculus on polynomials.
//!
//! A truncated series `f` acts on a polynomial as `f(D) p = sum_k f_k D^k p`,
//! which is a finite sum once `f` carries at least `deg p` coefficients. The
//! dual vector field `Y = x W(D)` raises degree by one whenever `W(0) != 0`.

use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::ratio::{rat_to_f64, rat_to_string, Rat};

/// Dense exact-rational polynomial in one variable.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial stores
/// an empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Polynomial from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly { coeffs: vec![Rat::one()] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Constant polynomial.
    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero when `k` exceeds the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `x`.
    pub fn mul_x(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| &self.coeffs[k] * Rat::from_integer(k.into()))
            .collect();
        Poly { coeffs }
    }

    /// Substitute `x -> c x`; coefficient `k` picks up `c^k`.
    pub fn scale_var(&self, c: &Rat) -> Poly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let r = a * &pow;
                pow *= c;
                r
            })
            .collect();
        Poly::new(coeffs)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn subst(&self, arg: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * arg) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Render with an arbitrary variable name.
    ///
    /// `descending` lists the leading term first (the order used in the
    /// pretty and LaTeX tables); otherwise ascending. With `float` the
    /// coefficients are shown as decimals (display only).
    pub fn format(&self, var: &str, descending: bool, float: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let indices: Vec<usize> = if descending {
            (0..self.coeffs.len()).rev().collect()
        } else {
            (0..self.coeffs.len()).collect()
        };
        for k in indices {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let coeff_str = if float {
                format!("{}", rat_to_f64(&mag))
            } else {
                rat_to_string(&mag)
            };
            let unit = mag.is_one() && !float;
            if k == 0 {
                out.push_str(&coeff_str);
            } else {
                if !unit {
                    out.push_str(&coeff_str);
                    out.push(' ');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format("x", true, false))
    }
}

/// Apply `f(D)` to `p`: the finite sum of scaled derivatives.
pub fn apply_d_series(f: &Series, p: &Poly) -> Result<Poly> {
    let deg = p.degree().unwrap_or(0);
    if f.order() < deg {
        return Err(Error::OrderTooLow { required: deg, actual: f.order() });
    }
    let mut acc = p.scale(f.coeff(0));
    let mut deriv = p.clone();
    for k in 1..=deg {
        deriv = deriv.derivative();
        if !f.coeff(k).is_zero() {
            acc = &acc + &deriv.scale(f.coeff(k));
        }
    }
    Ok(acc)
}

/// Apply the dual vector field `Y = x W(D)` to `p`.
pub fn apply_dvf(w: &Series, p: &Poly) -> Result<Poly> {
    Ok(apply_d_series(w, p)?.mul_x())
}

/// The commutator `[f(D), x W(D)]` applied to `p`.
pub fn commutator_on_poly(f: &Series, w: &Series, p: &Poly) -> Result<Poly> {
    let left = apply_d_series(f, &apply_dvf(w, p)?)?;
    let right = apply_dvf(w, &apply_d_series(f, p)?)?;
    Ok(&left - &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};

    fn poly_i(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn exp_neg(order: usize) -> Series {
        Series::identity(order).scale(&rat_int(-1)).exp().unwrap()
    }

    #[test]
    fn shift_operator_on_square() {
        // e^{-D} x^2 = (x-1)^2
        let p = apply_d_series(&exp_neg(4), &poly_i(&[0, 0, 1])).unwrap();
        assert_eq!(p, poly_i(&[1, -2, 1]));
    }

    #[test]
    fn constant_series_is_identity_operator() {
        let p = poly_i(&[3, 0, -2, 5]);
        assert_eq!(apply_d_series(&Series::one(5), &p).unwrap(), p);
    }

    #[test]
    fn d_differentiates() {
        let p = apply_d_series(&Series::identity(4), &poly_i(&[0, 0, 0, 1])).unwrap();
        assert_eq!(p, poly_i(&[0, 0, 3]));
    }

    #[test]
    fn order_too_low_is_reported_with_requirement() {
        let err = apply_d_series(&Series::one(2), &poly_i(&[0, 0, 0, 1])).unwrap_err();
        assert_eq!(err, Error::OrderTooLow { required: 3, actual: 2 });
    }

    #[test]
    fn poisson_dvf_builds_falling_factorials() {
        let w = exp_neg(6);
        let mut p = Poly::one();
        for _ in 0..3 {
            p = apply_dvf(&w, &p).unwrap();
        }
        assert_eq!(p, poly_i(&[0, 2, -3, 1])); // x(x-1)(x-2)
    }

    #[test]
    fn trivial_dvf_multiplies_by_x() {
        let p = apply_dvf(&Series::one(5), &poly_i(&[0, 0, 0, 1])).unwrap();
        assert_eq!(p, poly_i(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn hermite_bessel_dvf_builds_bessel_polys() {
        let w = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 8)
            .reciprocal()
            .unwrap();
        let mut p = Poly::one();
        for _ in 0..4 {
            p = apply_dvf(&w, &p).unwrap();
        }
        assert_eq!(p, poly_i(&[0, 15, 15, 6, 1]));
    }

    #[test]
    fn dvf_raises_degree_by_one() {
        let w = exp_neg(9);
        let p = poly_i(&[5, -1, 0, 2]);
        let q = apply_dvf(&w, &p).unwrap();
        assert_eq!(q.degree(), Some(4));
    }

    #[test]
    fn hw_commutator_is_identity_for_poisson() {
        let order = 6;
        let v = &Series::identity(order).exp().unwrap() - &Series::one(order);
        let w = exp_neg(order);
        let p = poly_i(&[0, 0, 1]);
        assert_eq!(commutator_on_poly(&v, &w, &p).unwrap(), p);
    }

    #[test]
    fn hw_commutator_standard_realization() {
        for n in 0..6 {
            let p = Poly::monomial(rat_int(1), n);
            let got = commutator_on_poly(&Series::identity(8), &Series::one(8), &p).unwrap();
            assert_eq!(got, p);
        }
    }

    #[test]
    fn hw_commutator_hermite_bessel() {
        let v = Series::from_polynomial(&[rat_int(0), rat_int(1), rat(-1, 2)], 8);
        let w = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 8)
            .reciprocal()
            .unwrap();
        let p = poly_i(&[0, 1, 0, 1]); // x^3 + x
        assert_eq!(commutator_on_poly(&v, &w, &p).unwrap(), p);
    }

    #[test]
    fn poly_canonical_form_trims_zeros() {
        let p = Poly::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.coeffs().len(), 1);
        assert!(Poly::new(vec![rat_int(0)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn formatting_matches_listing_style() {
        let p = poly_i(&[0, -6, 11, -6, 1]);
        assert_eq!(p.format("x", true, false), "x^4 - 6 x^3 + 11 x^2 - 6 x");
        assert_eq!(poly_i(&[0, 1]).format("y", true, false), "y");
        assert_eq!(Poly::zero().format("x", true, false), "0");
        let half = Poly::new(vec![rat(1, 2)]);
        assert_eq!(half.format("x", true, false), "1/2");
    }
}
