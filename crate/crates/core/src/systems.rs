//! The six named systems and their independent oracles.
//!
//! `build` constructs each symbol exactly from analytic germs. `oracle_p` and
//! `oracle_q` rebuild the same polynomials from the per-system recurrences
//! alone, with no series machinery, so the generic engine can be validated
//! against them. The classical-family helpers (Stirling, Touchard, Bessel,
//! Hermite) use their textbook closed forms.

use num::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::canonical::CanonicalSystem;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::opcalc::Poly;
use crate::ratio::{
    factorial, rat, rat_int, stirling_first as stirling_first_int,
    stirling_second as stirling_second_int, Rat,
};

/// Identifier of a built-in system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemName {
    Poisson,
    Laguerre,
    HermiteBessel,
    Arcsinh,
    Tanh,
    Gegenbauer,
}

impl SystemName {
    /// All built-in names, in section order.
    pub const ALL: [SystemName; 6] = [
        SystemName::Poisson,
        SystemName::Laguerre,
        SystemName::HermiteBessel,
        SystemName::Arcsinh,
        SystemName::Tanh,
        SystemName::Gegenbauer,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SystemName::Poisson => "poisson",
            SystemName::Laguerre => "laguerre",
            SystemName::HermiteBessel => "hermite_bessel",
            SystemName::Arcsinh => "arcsinh",
            SystemName::Tanh => "tanh",
            SystemName::Gegenbauer => "gegenbauer",
        }
    }
}

impl fmt::Display for SystemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SystemName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "poisson" => Ok(SystemName::Poisson),
            "laguerre" => Ok(SystemName::Laguerre),
            "hermite_bessel" => Ok(SystemName::HermiteBessel),
            "arcsinh" => Ok(SystemName::Arcsinh),
            "tanh" => Ok(SystemName::Tanh),
            "gegenbauer" => Ok(SystemName::Gegenbauer),
            other => Err(Error::Parse(format!("unknown system `{other}`"))),
        }
    }
}

/// A built-in system together with its name and optional parameter.
#[derive(Debug, Clone)]
pub struct NamedSystem {
    pub name: SystemName,
    pub param: Option<Rat>,
    pub system: CanonicalSystem,
}

/// Build a named system at the requested index order.
///
/// The symbol is expanded two orders past the request, so every series in the
/// bundle stays valid through index `order + 1`.
pub fn build(name: SystemName, param: Option<&Rat>, order: usize) -> Result<NamedSystem> {
    if order < 2 {
        return Err(Error::OrderTooLow { required: 2, actual: order });
    }
    check_param(name, param)?;
    let expand = order + 2;
    let v = match name {
        SystemName::Poisson => poisson_v(expand)?,
        SystemName::Laguerre => laguerre_v(expand)?,
        SystemName::HermiteBessel => hermite_bessel_v(expand),
        SystemName::Arcsinh => arcsinh_v(expand)?,
        SystemName::Tanh => tanh_v(expand)?,
        SystemName::Gegenbauer => gegenbauer_v(param.unwrap(), expand)?,
    };
    Ok(NamedSystem {
        name,
        param: param.cloned(),
        system: CanonicalSystem::new(v)?,
    })
}

fn check_param(name: SystemName, param: Option<&Rat>) -> Result<()> {
    match (name, param) {
        (SystemName::Gegenbauer, None) => Err(Error::MissingParam("gegenbauer")),
        (SystemName::Gegenbauer, Some(a)) if a.is_zero() => Err(Error::ZeroAlpha),
        (SystemName::Gegenbauer, Some(_)) => Ok(()),
        (other, Some(_)) => Err(Error::UnexpectedParam(other.as_str())),
        (_, None) => Ok(()),
    }
}

/// `V'(0)` of a named system: `2 alpha` for Gegenbauer, 1 otherwise.
pub fn vprime_at_zero(name: SystemName, param: Option<&Rat>) -> Rat {
    match name {
        SystemName::Gegenbauer => rat_int(2) * param.expect("gegenbauer parameter"),
        _ => Rat::one(),
    }
}

fn poisson_v(order: usize) -> Result<Series> {
    // e^z - 1
    Ok(&Series::identity(order).exp()? - &Series::one(order))
}

fn laguerre_v(order: usize) -> Result<Series> {
    // z / (1 - z)
    let geom = Series::from_polynomial(&[rat_int(1), rat_int(-1)], order).reciprocal()?;
    Ok(&Series::identity(order) * &geom)
}

fn hermite_bessel_v(order: usize) -> Series {
    // z - z^2/2
    Series::from_polynomial(&[rat_int(0), rat_int(1), rat(-1, 2)], order)
}

fn arcsinh_v(order: usize) -> Result<Series> {
    // log(z + sqrt(1 + z^2))
    let root = Series::from_polynomial(&[rat_int(1), rat_int(0), rat_int(1)], order).sqrt()?;
    (&Series::identity(order) + &root).log()
}

fn tanh_v(order: usize) -> Result<Series> {
    // (e^{2z} - 1) / (e^{2z} + 1)
    let e2 = Series::identity(order).scale(&rat_int(2)).exp()?;
    let num = &e2 - &Series::one(order);
    let den = (&e2 + &Series::one(order)).reciprocal()?;
    Ok(&num * &den)
}

fn gegenbauer_v(alpha: &Rat, order: usize) -> Result<Series> {
    // -log(1 - 2 alpha z + z^2)
    let inner = Series::from_polynomial(
        &[Rat::one(), rat_int(-2) * alpha, Rat::one()],
        order,
    );
    Ok(-&inner.log()?)
}

/// `p_n` from the per-system recurrence alone.
pub fn oracle_p(name: SystemName, param: Option<&Rat>, n: usize) -> Result<Poly> {
    check_param(name, param)?;
    if name == SystemName::Gegenbauer {
        return gegenbauer_oracle_p(param.unwrap(), n);
    }
    let mut polys: Vec<Poly> = vec![Poly::one(), Poly::x()];
    for m in 1..n.max(1) {
        let next = match name {
            SystemName::Poisson => {
                // p_{n+1} = (x - n) p_n
                let step = &Poly::new(vec![rat_int(-(m as i64)), rat_int(1)]);
                step * &polys[m]
            }
            SystemName::Laguerre => {
                // p_{n+1} = (x - 2n) p_n - n(n-1) p_{n-1}
                let step = &Poly::new(vec![rat_int(-2 * m as i64), rat_int(1)]);
                &(step * &polys[m]) - &polys[m - 1].scale(&rat_int((m * (m - 1)) as i64))
            }
            SystemName::HermiteBessel => {
                // p_{n+1} = (2n - 1) p_n + x^2 p_{n-1}
                let x2 = Poly::monomial(Rat::one(), 2);
                &polys[m].scale(&rat_int(2 * m as i64 - 1)) + &(&x2 * &polys[m - 1])
            }
            SystemName::Arcsinh => {
                // p_{n+2} = x^2 p_n + (x d/dx)^2 p_n
                let p = &polys[m - 1];
                let x2 = Poly::monomial(Rat::one(), 2);
                let xd = |q: &Poly| q.derivative().mul_x();
                &(&x2 * p) + &xd(&xd(p))
            }
            SystemName::Tanh => {
                // p_{n+1} = x p_n + n(n-1) p_{n-1}
                &polys[m].mul_x() + &polys[m - 1].scale(&rat_int((m * (m - 1)) as i64))
            }
            SystemName::Gegenbauer => unreachable!(),
        };
        polys.push(next);
    }
    Ok(polys.swap_remove(n))
}

/// `q_n` from the per-system recurrence alone.
pub fn oracle_q(name: SystemName, param: Option<&Rat>, n: usize) -> Result<Poly> {
    check_param(name, param)?;
    let q1 = Poly::monomial(vprime_at_zero(name, param), 1);
    let mut polys: Vec<Poly> = vec![Poly::one(), q1];
    for m in 1..n.max(1) {
        let next = match name {
            SystemName::Poisson => {
                // q_{n+1} = y q_n + y q_n'
                &polys[m].mul_x() + &polys[m].derivative().mul_x()
            }
            SystemName::Laguerre => {
                // q_{n+1} = (y + 2n) q_n - n(n-1) q_{n-1}
                let step = &Poly::new(vec![rat_int(2 * m as i64), rat_int(1)]);
                &(step * &polys[m]) - &polys[m - 1].scale(&rat_int((m * (m - 1)) as i64))
            }
            SystemName::HermiteBessel => {
                // q_{n+1} = y (q_n - n q_{n-1})
                (&polys[m] - &polys[m - 1].scale(&rat_int(m as i64))).mul_x()
            }
            SystemName::Arcsinh => {
                // q_{n+2} = (y^2 - n^2) q_n
                let k = (m - 1) as i64;
                let step = &Poly::new(vec![rat_int(-k * k), rat_int(0), rat_int(1)]);
                step * &polys[m - 1]
            }
            SystemName::Tanh => {
                // q_{n+1} = y (q_n - q_n'')
                (&polys[m] - &polys[m].derivative().derivative()).mul_x()
            }
            SystemName::Gegenbauer => {
                // q_{n+1} = 2a (y + n) q_n - n (2y + n - 1) q_{n-1}
                let a = param.unwrap();
                let lin = Poly::new(vec![rat_int(m as i64), rat_int(1)])
                    .scale(&(rat_int(2) * a));
                let back = Poly::new(vec![rat_int(m as i64 - 1), rat_int(2)])
                    .scale(&rat_int(m as i64));
                &(&lin * &polys[m]) - &(&back * &polys[m - 1])
            }
        };
        polys.push(next);
    }
    Ok(polys.swap_remove(n))
}

/// Gegenbauer `p_n` via Poisson subordination by the Hermite-Bessel
/// recurrence oracle: `gamma = -1`, `sigma = -1/(2 a^2)`, then `x -> a x`.
fn gegenbauer_oracle_p(alpha: &Rat, n: usize) -> Result<Poly> {
    let sigma = -(rat_int(2) * alpha * alpha).recip();
    let mut acc = Poly::zero();
    let mut sigma_pow = Rat::one();
    for m in 0..=n {
        let s = Rat::from_integer(stirling_second_int(n, m));
        if !s.is_zero() {
            let base = oracle_p(SystemName::HermiteBessel, None, m)?;
            acc = &acc + &base.scale(&(&s * &sigma_pow));
        }
        sigma_pow *= &sigma;
    }
    let gamma_pow = if n % 2 == 0 { Rat::one() } else { -Rat::one() };
    Ok(acc.scale(&gamma_pow).scale_var(alpha))
}

/// Signed Stirling number of the first kind as a rational.
pub fn stirling1(n: usize, k: usize) -> Rat {
    Rat::from_integer(stirling_first_int(n, k))
}

/// Stirling number of the second kind as a rational.
pub fn stirling2(n: usize, k: usize) -> Rat {
    Rat::from_integer(stirling_second_int(n, k))
}

/// Touchard polynomial `T_n(y) = sum_k S(n,k) y^k`.
pub fn touchard(n: usize) -> Poly {
    Poly::new((0..=n).map(|k| stirling2(n, k)).collect())
}

/// `x theta_{n-1}(x)`, the Bessel polynomial of the Hermite-Bessel p-side:
/// `sum_k Gamma(n+k) / (Gamma(n-k) k!) x^{n-k} / 2^k`.
pub fn bessel_poly(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let mut coeffs = vec![Rat::zero(); n + 1];
    let mut two_pow = Rat::one();
    for k in 0..n {
        let num = Rat::from_integer(factorial(n + k - 1));
        let den = Rat::from_integer(factorial(n - k - 1) * factorial(k));
        coeffs[n - k] = num / den / &two_pow;
        two_pow *= rat_int(2);
    }
    Poly::new(coeffs)
}

/// Probabilists' Hermite polynomial `He_n(x, t)` with `t` specialized:
/// coefficients from `e^{xz - z^2 t/2}`.
pub fn hermite_he(n: usize, t: &Rat) -> Poly {
    let mut coeffs = vec![Rat::zero(); n + 1];
    let mut t_pow = Rat::one();
    for k in 0..=n / 2 {
        coeffs[n - 2 * k] = &hermite_he_weight(n, k) * &t_pow;
        t_pow *= t;
    }
    Poly::new(coeffs)
}

/// `He_n(y, y)`: both arguments the same variable, as in the Hermite-Bessel
/// q-polynomials.
pub fn hermite_he_diag(n: usize) -> Poly {
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in 0..=n / 2 {
        coeffs[n - k] = hermite_he_weight(n, k);
    }
    Poly::new(coeffs)
}

/// Coefficient of `x^{n-2k} t^k` in `He_n(x, t)`.
pub fn hermite_he_weight(n: usize, k: usize) -> Rat {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let num = rat_int(sign) * Rat::from_integer(factorial(n));
    let den = Rat::from_integer(factorial(k) * factorial(n - 2 * k))
        * Rat::from_integer(num::BigInt::from(1u32) << k);
    num / den
}

/// Falling factorial with a polynomial argument:
/// `arg (arg - 1) ... (arg - m + 1)`.
pub fn falling_factorial_poly(arg: &Poly, m: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 0..m {
        acc = &acc * &(arg - &Poly::constant(rat_int(i as i64)));
    }
    acc
}

pub use crate::ratio::falling_factorial;
