//! Canonical polynomial systems.
//!
//! A symbol `V` with `V(0) = 0`, `V'(0) != 0` determines the bundle
//! `(V, Z, V', Z', W)` and with it two polynomial sequences: the
//! `p`-polynomials generated by the dual vector field `Y = x W(D)` and the
//! `q`-polynomials of the inverse symbol. Coefficients come from powering the
//! symbol: `p_{nk} = (n!/k!) [v^n] Z(v)^k`, the expansion of `e^{x Z(v)}`.
//! Operator iteration is kept as a test-side oracle.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::opcalc::{apply_d_series, apply_dvf, Poly};
use crate::ratio::{factorial_rat, rat_to_string, stirling_second, Rat};

/// Validated `(V, Z, V', Z', W)` bundle at a shared truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSystem {
    v: Series,
    z: Series,
    vprime: Series,
    zprime: Series,
    w: Series,
    order: usize,
}

impl CanonicalSystem {
    /// Build the system from its symbol.
    ///
    /// `V` must satisfy `V(0) = 0` and `V'(0) != 0` and carry order >= 2.
    /// All derived series are computed here and cross-checked; `V` and `Z`
    /// keep the full input order while the primed series hold one order less,
    /// so `order()` reports the index range on which every series is valid.
    pub fn new(v: Series) -> Result<Self> {
        if v.order() < 2 {
            return Err(Error::OrderTooLow { required: 2, actual: v.order() });
        }
        if !v.constant_term().is_zero() {
            return Err(Error::NotCanonical("V(0) must be 0"));
        }
        if v.coeff(1).is_zero() {
            return Err(Error::NotCanonical("V'(0) must be nonzero"));
        }
        let vprime = v.derivative()?;
        let w = vprime.reciprocal()?;
        let z = v.comp_inverse()?;
        let zprime = vprime.compose(&z)?.reciprocal()?;
        // W(Z(v)) = Z'(v), with Z' also available as the termwise derivative.
        if w.compose(&z)?.coeffs() != zprime.coeffs()
            || z.derivative()?.coeffs() != zprime.coeffs()
        {
            return Err(Error::NotCanonical("derived series are inconsistent"));
        }
        let order = vprime.order();
        Ok(CanonicalSystem { v, z, vprime, zprime, w, order })
    }

    /// Largest polynomial index / matrix size the stored orders support.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn v(&self) -> &Series {
        &self.v
    }

    pub fn z(&self) -> &Series {
        &self.z
    }

    pub fn vprime(&self) -> &Series {
        &self.vprime
    }

    pub fn zprime(&self) -> &Series {
        &self.zprime
    }

    pub fn w(&self) -> &Series {
        &self.w
    }

    /// The inverse-pair partner: the system whose symbol is this system's `Z`.
    pub fn dual(&self) -> Result<CanonicalSystem> {
        CanonicalSystem::new(self.z.clone())
    }

    /// `p_n`, by coefficient extraction from `e^{x Z(v)}`.
    pub fn p_poly(&self, n: usize) -> Result<Poly> {
        self.check_index(n)?;
        Ok(Poly::new(coeff_row(&self.z, n)))
    }

    /// `q_n`, by coefficient extraction from `e^{y V(z)}`.
    pub fn q_poly(&self, n: usize) -> Result<Poly> {
        self.check_index(n)?;
        Ok(Poly::new(coeff_row(&self.v, n)))
    }

    /// Rows `0..=n_max` of the p-coefficient matrix.
    pub fn p_matrix(&self, n_max: usize) -> Result<CoeffMatrix> {
        self.check_index(n_max)?;
        Ok(CoeffMatrix { entries: coeff_rows(&self.z, n_max) })
    }

    /// Rows `0..=n_max` of the q-coefficient matrix.
    pub fn q_matrix(&self, n_max: usize) -> Result<CoeffMatrix> {
        self.check_index(n_max)?;
        Ok(CoeffMatrix { entries: coeff_rows(&self.v, n_max) })
    }

    /// Umbral composition: replace `x^m` by `p_m(x)`, i.e. `f(Y) 1`.
    pub fn umbral_compose(&self, f: &Poly) -> Result<Poly> {
        let deg = f.degree().unwrap_or(0);
        self.check_index(deg)?;
        let rows = coeff_rows(&self.z, deg);
        let mut acc = Poly::zero();
        for (m, row) in rows.into_iter().enumerate() {
            let c = f.coeff(m);
            if !c.is_zero() {
                acc = &acc + &Poly::new(row).scale(&c);
            }
        }
        Ok(acc)
    }

    /// Apply the raising operator `Y = x W(D)`.
    pub fn raise(&self, p: &Poly) -> Result<Poly> {
        apply_dvf(&self.w, p)
    }

    /// Apply the lowering operator `V(D)`.
    pub fn lower(&self, p: &Poly) -> Result<Poly> {
        apply_d_series(&self.v, p)
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n > self.order {
            return Err(Error::OrderTooLow { required: n, actual: self.order });
        }
        Ok(())
    }
}

/// Row `n` of the coefficient matrix of `symbol`: `(n!/k!) [v^n] symbol^k`.
fn coeff_row(symbol: &Series, n: usize) -> Vec<Rat> {
    let powers = symbol.powers(n);
    row_from_powers(&powers, n)
}

fn coeff_rows(symbol: &Series, n_max: usize) -> Vec<Vec<Rat>> {
    let powers = symbol.powers(n_max);
    (0..=n_max).map(|n| row_from_powers(&powers, n)).collect()
}

fn row_from_powers(powers: &[Series], n: usize) -> Vec<Rat> {
    let n_fact = factorial_rat(n);
    (0..=n)
        .map(|k| &n_fact / factorial_rat(k) * powers[k].coeff(n))
        .collect()
}

/// Compose two systems with scale factors:
/// `Z_12(v) = Z_1(sigma Z_2(gamma v))`, `V_12(z) = (1/gamma) V_2(V_1(z)/sigma)`.
pub fn compose_systems(
    sys1: &CanonicalSystem,
    sys2: &CanonicalSystem,
    sigma: &Rat,
    gamma: &Rat,
) -> Result<CanonicalSystem> {
    if sigma.is_zero() || gamma.is_zero() {
        return Err(Error::NotCanonical("scale factors must be nonzero"));
    }
    let inner = sys1.v().scale(&sigma.recip());
    let v12 = sys2.v().compose(&inner)?.scale(&gamma.recip());
    CanonicalSystem::new(v12)
}

/// Poisson subordination: `gamma^n sum_m S(n,m) sigma^m p_m(x)` over the base
/// system, which equals `p_n` of the composition with the Stirling kernel
/// `Z_2(v) = e^v - 1`.
pub fn poisson_subordinate(
    sys1: &CanonicalSystem,
    sigma: &Rat,
    gamma: &Rat,
    n: usize,
) -> Result<Poly> {
    if n > sys1.order() {
        return Err(Error::OrderTooLow { required: n, actual: sys1.order() });
    }
    let rows = coeff_rows(sys1.z(), n);
    let mut acc = Poly::zero();
    let mut sigma_pow = Rat::one();
    for (m, row) in rows.into_iter().enumerate() {
        let s = Rat::from_integer(stirling_second(n, m));
        if !s.is_zero() {
            acc = &acc + &Poly::new(row).scale(&(&s * &sigma_pow));
        }
        sigma_pow *= sigma;
    }
    let mut gamma_pow = Rat::one();
    for _ in 0..n {
        gamma_pow *= gamma;
    }
    Ok(acc.scale(&gamma_pow))
}

/// Lower-triangular matrix of polynomial coefficients, entry `(n, k)` being
/// the coefficient of `x^k` in the `n`-th polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    entries: Vec<Vec<Rat>>,
}

impl CoeffMatrix {
    /// Build from explicit rows; row `n` must have `n + 1` entries.
    pub fn from_rows(entries: Vec<Vec<Rat>>) -> Result<Self> {
        for (n, row) in entries.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Parse(format!(
                    "row {n} must have {} entries, found {}",
                    n + 1,
                    row.len()
                )));
            }
        }
        Ok(CoeffMatrix { entries })
    }

    /// Identity matrix with `n` rows.
    pub fn identity(n_rows: usize) -> Self {
        let entries = (0..n_rows)
            .map(|n| {
                let mut row = vec![Rat::zero(); n + 1];
                row[n] = Rat::one();
                row
            })
            .collect();
        CoeffMatrix { entries }
    }

    pub fn n_rows(&self) -> usize {
        self.entries.len()
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Rat {
        self.entries[n].get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    /// Row `n` as a polynomial.
    pub fn row_poly(&self, n: usize) -> Poly {
        Poly::new(self.entries[n].clone())
    }

    /// Lower-triangular matrix product.
    pub fn mul(&self, rhs: &CoeffMatrix) -> CoeffMatrix {
        let n_rows = self.n_rows().min(rhs.n_rows());
        let entries = (0..n_rows)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let mut acc = Rat::zero();
                        for m in k..=n {
                            acc += self.entry(n, m) * rhs.entry(m, k);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        CoeffMatrix { entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(k, e)| if k == n { e.is_one() } else { e.is_zero() })
        })
    }

    /// CSV: one line per row, entries comma-joined, ascending power.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(rat_to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// LaTeX array environment with the same numeric content as the CSV.
    pub fn to_latex(&self) -> String {
        let cols = self.n_rows();
        let mut out = format!("\\begin{{array}}{{{}}}\n", "r".repeat(cols.max(1)));
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(latex_rat).collect();
            out.push_str(&line.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{array}\n");
        out
    }
}

fn latex_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.numer() < &num::BigInt::zero() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}
