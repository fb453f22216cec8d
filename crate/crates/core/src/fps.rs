//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` stores coefficients for powers `0..=order`; terms of degree
//! greater than `order` are *unknown*, not zero. Binary operations return the
//! minimum of the two orders and never silently zero-pad, so an identity that
//! holds "to truncation order" is exactly the equality of the stored
//! coefficients.

use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ratio::{rat_to_string, Rat};

/// Truncated univariate formal power series over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
    order: usize,
}

/// Analytic germs applicable through [`Series::analytic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Analytic {
    /// `exp(f)`, requires `f(0) = 0`.
    Exp,
    /// `log(f)`, requires `f(0) = 1`.
    Log,
    /// `sqrt(f)`, requires `f(0) = 1`.
    Sqrt,
    /// `f^r` for rational `r`, requires `f(0) = 1`.
    Pow(Rat),
}

impl Series {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list (an order-0 series still has one
    /// known coefficient).
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        let order = coeffs.len() - 1;
        Series { coeffs, order }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rat::zero(); order + 1], order }
    }

    /// The constant series `1` at the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// A constant series at the given order.
    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs, order }
    }

    /// The identity series `v` at the given order (order must be >= 1).
    pub fn identity(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    /// `c * v^k` at the given order. Panics if `k > order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        assert!(k <= order, "monomial degree exceeds the truncation order");
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[k] = c;
        Series { coeffs, order }
    }

    /// Interpret a finite coefficient list as an exact polynomial and expand
    /// it to the given order (higher coefficients are genuinely zero).
    pub fn from_polynomial(poly_coeffs: &[Rat], order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (k, c) in poly_coeffs.iter().enumerate() {
            if k > order {
                break;
            }
            coeffs[k] = c.clone();
        }
        Series { coeffs, order }
    }

    /// Truncation order: coefficients are known for powers `0..=order`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `v^k`. Panics if `k > order` (that term is unknown).
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(k <= self.order, "coefficient of degree {k} is beyond the truncation order");
        &self.coeffs[k]
    }

    /// All known coefficients, ascending powers.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The constant term `f(0)`.
    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restrict to a lower truncation order.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order {
            return Err(Error::OrderTooLow { required: order, actual: self.order });
        }
        Ok(Series { coeffs: self.coeffs[..=order].to_vec(), order })
    }

    /// True when the two series agree on all coefficients up to `through`.
    pub fn agrees_with(&self, other: &Series, through: usize) -> bool {
        if through > self.order || through > other.order {
            return false;
        }
        self.coeffs[..=through] == other.coeffs[..=through]
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Substitute `v -> c v`; coefficient `k` picks up `c^k`.
    pub fn scale_var(&self, c: &Rat) -> Series {
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
        Series { coeffs, order: self.order }
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Series> {
        if self.order == 0 {
            return Err(Error::OrderTooLow { required: 1, actual: 0 });
        }
        let coeffs = (1..=self.order)
            .map(|k| &self.coeffs[k] * Rat::from_integer(k.into()))
            .collect();
        Ok(Series { coeffs, order: self.order - 1 })
    }

    /// Termwise antiderivative with zero constant term; the order rises by one.
    pub fn integrate(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(Rat::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rat::from_integer((k + 1).into()));
        }
        Series { coeffs, order: self.order + 1 }
    }

    /// Composition `f(g(v))`; requires `g(0) = 0`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let g = inner.truncate(order)?;
        // Horner evaluation in the truncated ring; coefficients of f beyond
        // the result order cannot reach degrees <= order because g has
        // positive valuation.
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &(&acc * &g) + &Series::constant(self.coeffs[k].clone(), order);
        }
        Ok(acc)
    }

    /// Multiplicative inverse; requires `f(0) != 0`.
    pub fn reciprocal(&self) -> Result<Series> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_a0 = a0.recip();
        let mut out = vec![Rat::zero(); self.order + 1];
        out[0] = inv_a0.clone();
        for n in 1..=self.order {
            let mut sum = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    sum += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -&inv_a0 * sum;
        }
        Ok(Series { coeffs: out, order: self.order })
    }

    /// Compositional inverse `g` with `g(f(v)) = f(g(v)) = v` to truncation
    /// order; requires `f(0) = 0` and `f'(0) != 0`.
    ///
    /// Solved degree by degree from `sum_k g_k f(z)^k = z`, which is
    /// triangular because `[z^n] f^k` depends on no `g` coefficient.
    pub fn comp_inverse(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::NotInvertible("constant term must vanish"));
        }
        if self.order < 1 {
            return Err(Error::OrderTooLow { required: 1, actual: self.order });
        }
        let f1 = &self.coeffs[1];
        if f1.is_zero() {
            return Err(Error::NotInvertible("linear coefficient must be nonzero"));
        }
        let n_max = self.order;
        let powers = self.powers(n_max);
        let mut g = vec![Rat::zero(); n_max + 1];
        g[1] = f1.recip();
        for n in 2..=n_max {
            let mut sum = Rat::zero();
            for k in 1..n {
                if !g[k].is_zero() {
                    sum += &g[k] * powers[k].coeff(n);
                }
            }
            // [z^n] f^n = f1^n
            let diag = powers[n].coeff(n);
            g[n] = -sum / diag;
        }
        Ok(Series { coeffs: g, order: n_max })
    }

    /// `[1, f, f^2, ..., f^kmax]`, all truncated at this series' order.
    pub fn powers(&self, kmax: usize) -> Vec<Series> {
        let mut table = Vec::with_capacity(kmax + 1);
        table.push(Series::one(self.order));
        for _ in 1..=kmax {
            let last = table.last().unwrap();
            table.push(last * self);
        }
        table
    }

    /// Apply an analytic germ.
    pub fn analytic(&self, f: Analytic) -> Result<Series> {
        match f {
            Analytic::Exp => self.exp(),
            Analytic::Log => self.log(),
            Analytic::Sqrt => self.pow(&crate::ratio::rat(1, 2)),
            Analytic::Pow(r) => self.pow(&r),
        }
    }

    /// `exp(f)`; requires `f(0) = 0`.
    pub fn exp(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::BadConstantTerm {
                expected: "0",
                found: rat_to_string(self.constant_term()),
            });
        }
        let mut g = vec![Rat::zero(); self.order + 1];
        g[0] = Rat::one();
        for n in 1..=self.order {
            let mut sum = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    sum += Rat::from_integer(k.into()) * &self.coeffs[k] * &g[n - k];
                }
            }
            g[n] = sum / Rat::from_integer(n.into());
        }
        Ok(Series { coeffs: g, order: self.order })
    }

    /// `log(f)`; requires `f(0) = 1`.
    pub fn log(&self) -> Result<Series> {
        if !self.constant_term().is_one() {
            return Err(Error::BadConstantTerm {
                expected: "1",
                found: rat_to_string(self.constant_term()),
            });
        }
        if self.order == 0 {
            return Ok(Series::zero(0));
        }
        // log f = integral of f'/f, exact termwise.
        let ratio = &self.derivative()? * &self.reciprocal()?;
        Ok(ratio.integrate())
    }

    /// `sqrt(f)`; requires `f(0) = 1`.
    pub fn sqrt(&self) -> Result<Series> {
        self.pow(&crate::ratio::rat(1, 2))
    }

    /// `f^r` for rational `r`; requires `f(0) = 1`.
    ///
    /// Uses the Miller recurrence `n g_n = sum_k (r k - (n - k)) f_k g_{n-k}`.
    pub fn pow(&self, r: &Rat) -> Result<Series> {
        if !self.constant_term().is_one() {
            return Err(Error::BadConstantTerm {
                expected: "1",
                found: rat_to_string(self.constant_term()),
            });
        }
        let mut g = vec![Rat::zero(); self.order + 1];
        g[0] = Rat::one();
        for n in 1..=self.order {
            let mut sum = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let weight = r * Rat::from_integer(k.into())
                        - Rat::from_integer((n - k).into());
                    sum += weight * &self.coeffs[k] * &g[n - k];
                }
            }
            g[n] = sum / Rat::from_integer(n.into());
        }
        Ok(Series { coeffs: g, order: self.order })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        Series { coeffs, order }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        Series { coeffs, order }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs, order }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            if k == 1 {
                write!(f, "{}v", if show_coeff { " " } else { "" })?;
            } else if k > 1 {
                write!(f, "{}v^{}", if show_coeff { " " } else { "" }, k)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(v^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};

    fn s(coeffs: &[(i64, i64)]) -> Series {
        Series::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// exp series coefficients 1/k! up to order.
    fn exp_series(order: usize) -> Series {
        Series::identity(order).exp().unwrap()
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = Series::from_polynomial(&[rat_int(1), rat_int(1)], 4);
        let b = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 4);
        let prod = &a * &b;
        assert_eq!(prod, Series::from_polynomial(&[rat_int(1), rat_int(0), rat_int(-1)], 4));
    }

    #[test]
    fn mul_exp_by_exp_of_negative_is_one() {
        let e = exp_series(8);
        let e_neg = Series::identity(8).scale(&rat_int(-1)).exp().unwrap();
        assert_eq!(&e * &e_neg, Series::one(8));
    }

    #[test]
    fn mul_binomial_square() {
        let a = Series::from_polynomial(&[rat_int(1), rat_int(1)], 5);
        assert_eq!(
            &a * &a,
            Series::from_polynomial(&[rat_int(1), rat_int(2), rat_int(1)], 5)
        );
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = Series::one(7);
        let b = Series::one(3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn compose_log_with_exp_minus_one() {
        let em1 = &exp_series(8) - &Series::one(8);
        let log1p = Series::from_polynomial(&[rat_int(1), rat_int(1)], 8).log().unwrap();
        let composed = log1p.compose(&em1).unwrap();
        assert_eq!(composed, Series::identity(8));
    }

    #[test]
    fn compose_laguerre_pair_is_identity() {
        // v/(1-v) composed with v/(1+v)
        let geom = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 8).reciprocal().unwrap();
        let f = &Series::identity(8) * &geom;
        let geom_p = Series::from_polynomial(&[rat_int(1), rat_int(1)], 8).reciprocal().unwrap();
        let g = &Series::identity(8) * &geom_p;
        assert_eq!(f.compose(&g).unwrap(), Series::identity(8));
    }

    #[test]
    fn compose_with_zero_gives_constant() {
        let f = s(&[(3, 1), (1, 2), (5, 7)]);
        let z = Series::zero(2);
        assert_eq!(f.compose(&z).unwrap(), Series::constant(rat(3, 1), 2));
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = Series::identity(4);
        let g = Series::one(4);
        assert_eq!(f.compose(&g), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn reciprocal_geometric() {
        let f = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 6);
        let r = f.reciprocal().unwrap();
        assert_eq!(r, Series::new(vec![rat_int(1); 7]));
    }

    #[test]
    fn reciprocal_of_exp() {
        // 1/e^z = e^{-z}: coefficients (-1)^n / n!
        let r = exp_series(7).reciprocal().unwrap();
        let expect = Series::identity(7).scale(&rat_int(-1)).exp().unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn reciprocal_of_inverse_square() {
        // 1/(1-z)^2 inverted back to (1-z)^2
        let sq = Series::from_polynomial(&[rat_int(1), rat_int(-2), rat_int(1)], 9);
        let r = sq.reciprocal().unwrap().reciprocal().unwrap();
        assert_eq!(r, sq);
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        assert_eq!(Series::identity(3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn comp_inverse_of_exp_minus_one() {
        let em1 = &exp_series(9) - &Series::one(9);
        let z = em1.comp_inverse().unwrap();
        // log(1+v): 0, 1, -1/2, 1/3, -1/4, ...
        let expect: Vec<Rat> = (0..=9)
            .map(|k| {
                if k == 0 {
                    Rat::zero()
                } else {
                    rat(if k % 2 == 1 { 1 } else { -1 }, k as i64)
                }
            })
            .collect();
        assert_eq!(z, Series::new(expect));
    }

    #[test]
    fn comp_inverse_of_laguerre_symbol() {
        let geom = Series::from_polynomial(&[rat_int(1), rat_int(-1)], 8).reciprocal().unwrap();
        let f = &Series::identity(8) * &geom; // z/(1-z)
        let inv = f.comp_inverse().unwrap();
        // v/(1+v) = v - v^2 + v^3 - ...
        let expect: Vec<Rat> =
            (0..=8).map(|k| if k == 0 { Rat::zero() } else { rat(if k % 2 == 1 { 1 } else { -1 }, 1) }).collect();
        assert_eq!(inv, Series::new(expect));
    }

    #[test]
    fn comp_inverse_of_hermite_bessel_symbol() {
        // inverse of z - z^2/2 is 1 - sqrt(1-2v): 0, 1, 1/2, 1/2, 5/8, ...
        let f = Series::from_polynomial(&[rat_int(0), rat_int(1), rat(-1, 2)], 6);
        let inv = f.comp_inverse().unwrap();
        let head: Vec<Rat> = inv.coeffs()[..5].to_vec();
        assert_eq!(head, vec![rat_int(0), rat_int(1), rat(1, 2), rat(1, 2), rat(5, 8)]);
    }

    #[test]
    fn comp_inverse_rejects_bad_input() {
        assert!(matches!(Series::one(4).comp_inverse(), Err(Error::NotInvertible(_))));
        let no_linear = Series::monomial(rat_int(1), 2, 4);
        assert!(matches!(no_linear.comp_inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn derivative_basics() {
        let f = Series::from_polynomial(&[rat_int(0), rat_int(1), rat(-1, 2)], 5);
        assert_eq!(
            f.derivative().unwrap(),
            Series::from_polynomial(&[rat_int(1), rat_int(-1)], 4)
        );
        let c = Series::constant(rat_int(3), 4);
        assert!(c.derivative().unwrap().is_zero());
        assert_eq!(
            Series::one(0).derivative(),
            Err(Error::OrderTooLow { required: 1, actual: 0 })
        );
    }

    #[test]
    fn derivative_of_tanh_is_one_minus_square() {
        // tanh = (e^{2z}-1)/(e^{2z}+1)
        let e2 = Series::identity(10).scale(&rat_int(2)).exp().unwrap();
        let tanh = &(&e2 - &Series::one(10))
            * &(&e2 + &Series::one(10)).reciprocal().unwrap();
        let lhs = tanh.derivative().unwrap();
        let rhs = &Series::one(9) - &(&tanh * &tanh).truncate(9).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sqrt_of_perfect_square() {
        let f = Series::from_polynomial(&[rat_int(1), rat_int(2), rat_int(1)], 6);
        assert_eq!(
            f.sqrt().unwrap(),
            Series::from_polynomial(&[rat_int(1), rat_int(1)], 6)
        );
    }

    #[test]
    fn log_of_gegenbauer_reciprocal_at_alpha_one() {
        // -log(1 - 2z + z^2) = 2 sum z^n / n
        let inner = Series::from_polynomial(&[rat_int(1), rat_int(-2), rat_int(1)], 8);
        let v = -&inner.log().unwrap();
        for n in 1..=8 {
            assert_eq!(v.coeff(n), &rat(2, n as i64), "coefficient {n}");
        }
    }

    #[test]
    fn exp_log_round_trip() {
        let f = Series::from_polynomial(&[rat_int(1), rat_int(1)], 8);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn analytic_rejects_bad_constant_terms() {
        assert!(matches!(Series::one(4).exp(), Err(Error::BadConstantTerm { .. })));
        assert!(matches!(Series::identity(4).log(), Err(Error::BadConstantTerm { .. })));
        assert!(matches!(Series::identity(4).sqrt(), Err(Error::BadConstantTerm { .. })));
        assert!(matches!(
            Series::constant(rat_int(2), 4).pow(&rat(1, 3)),
            Err(Error::BadConstantTerm { .. })
        ));
    }

    #[test]
    fn pow_general_binomial() {
        // (1+v)^{-2} = 1 - 2v + 3v^2 - 4v^3 + ...
        let f = Series::from_polynomial(&[rat_int(1), rat_int(1)], 6);
        let g = f.pow(&rat_int(-2)).unwrap();
        for k in 0..=6 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(g.coeff(k), &rat(sign * (k as i64 + 1), 1));
        }
    }

    #[test]
    fn scale_var_scales_powers() {
        let f = s(&[(1, 1), (1, 1), (1, 1)]);
        let g = f.scale_var(&rat_int(2));
        assert_eq!(g.coeffs(), &[rat_int(1), rat_int(2), rat_int(4)]);
    }

    #[test]
    fn display_is_readable() {
        let f = s(&[(1, 1), (-1, 2), (0, 1), (1, 1)]);
        assert_eq!(format!("{f}"), "1 - 1/2 v + v^3 + O(v^4)");
        assert_eq!(format!("{}", Series::zero(2)), "0 + O(v^3)");
    }
}
