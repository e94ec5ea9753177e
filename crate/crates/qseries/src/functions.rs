//! Builders for the named q-series: Euler products, Jacobi and Ramanujan
//! theta functions, Rogers-Ramanujan functions, Borwein cubic thetas, eta
//! quotients, and the Eisenstein series P.
//!
//! Sum-mode builders enumerate exact integer windows: a convex quadratic
//! exponent is walked outward from its vertex until it reaches the order, so
//! no term below the order is ever missed and none above it is kept. All
//! bounds are rational comparisons; nothing is estimated.

use std::fmt;

use num_traits::{One, Zero};

use crate::series::{coeff, exp, Coeff, Exp, PuiseuxSeries};
use crate::{Error, Result};

/// `prod_{n >= 0} (1 - sign * q^(a + n b))` below order `t`; `a, b > 0`.
pub fn pochhammer_inf(sign: i8, a: Exp, b: Exp, t: Exp) -> PuiseuxSeries {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    assert!(a > Exp::zero() && b > Exp::zero(), "exponents must be positive");
    let mut acc = PuiseuxSeries::one(t);
    let mut e = a;
    while e < t {
        let factor = PuiseuxSeries::from_exp_terms(
            [
                (Exp::zero(), Coeff::one()),
                (e, -Coeff::from_integer(i64::from(sign).into())),
            ],
            t,
        );
        acc = acc.mul(&factor);
        e += b;
    }
    acc
}

/// Sum of `w(n) q^(c2 n^2 + c1 n + c0)` over all integers `n` with exponent
/// below `t`. The exponent must be convex (`c2 > 0`); the integer window is
/// found exactly by walking outward from the vertex.
pub fn weighted_theta_sum<W>(w: W, c2: Exp, c1: Exp, c0: Exp, t: Exp) -> PuiseuxSeries
where
    W: Fn(i64) -> Coeff,
{
    assert!(c2 > Exp::zero(), "quadratic exponent must open upward");
    let q = |n: i64| {
        let n = Exp::from_integer(n);
        c2 * n * n + c1 * n + c0
    };
    // Integer nearest the vertex -c1 / (2 c2); the exponent is monotone on
    // each side of it.
    let n0 = (-c1 / (c2 * 2) + exp(1, 2)).floor().to_integer();
    let mut pairs: Vec<(Exp, Coeff)> = Vec::new();
    let mut n = n0;
    while q(n) < t {
        pairs.push((q(n), w(n)));
        n += 1;
    }
    n = n0 - 1;
    while q(n) < t {
        pairs.push((q(n), w(n)));
        n -= 1;
    }
    PuiseuxSeries::from_exp_terms(pairs, t)
}

/// Sum of `w(x, y) q^Q(x, y)` over all integer pairs with
/// `Q = c20 x^2 + c11 xy + c02 y^2 + c10 x + c01 y + c00` below `t`.
/// Errors unless the quadratic part is positive definite
/// (`c20 > 0` and `4 c20 c02 > c11^2`), which makes every window finite.
#[allow(clippy::too_many_arguments)] // the six form coefficients are one datum
pub fn binary_quadratic_sum<W>(
    w: W,
    c20: Exp,
    c11: Exp,
    c02: Exp,
    c10: Exp,
    c01: Exp,
    c00: Exp,
    t: Exp,
) -> Result<PuiseuxSeries>
where
    W: Fn(i64, i64) -> Coeff,
{
    let four = Exp::from_integer(4);
    if c20 <= Exp::zero() || c02 <= Exp::zero() || four * c20 * c02 <= c11 * c11 {
        return Err(Error::IndefiniteForm);
    }
    // Minimum of Q over real y at fixed x: a convex quadratic in x that
    // bounds the outer loop.
    let qa = c20 - c11 * c11 / (four * c02);
    let qb = c10 - c11 * c01 / (c02 * 2);
    let qc = c00 - c01 * c01 / (four * c02);
    let row_min = |x: i64| {
        let x = Exp::from_integer(x);
        qa * x * x + qb * x + qc
    };
    let q = |x: i64, y: i64| {
        let x = Exp::from_integer(x);
        let y = Exp::from_integer(y);
        c20 * x * x + c11 * x * y + c02 * y * y + c10 * x + c01 * y + c00
    };
    let mut pairs: Vec<(Exp, Coeff)> = Vec::new();
    let mut sweep_row = |x: i64| {
        let lin = c11 * Exp::from_integer(x) + c01;
        let y0 = (-lin / (c02 * 2) + exp(1, 2)).floor().to_integer();
        let mut y = y0;
        while q(x, y) < t {
            pairs.push((q(x, y), w(x, y)));
            y += 1;
        }
        y = y0 - 1;
        while q(x, y) < t {
            pairs.push((q(x, y), w(x, y)));
            y -= 1;
        }
    };
    let x0 = (-qb / (qa * 2) + exp(1, 2)).floor().to_integer();
    let mut x = x0;
    while row_min(x) < t {
        sweep_row(x);
        x += 1;
    }
    x = x0 - 1;
    while row_min(x) < t {
        sweep_row(x);
        x -= 1;
    }
    Ok(PuiseuxSeries::from_exp_terms(pairs, t))
}

/// Euler's product `(q; q)_inf`.
pub fn euler_phi(t: Exp) -> PuiseuxSeries {
    pochhammer_inf(1, Exp::one(), Exp::one(), t)
}

/// `(q^r; q^r)_inf` for rational `r > 0`, to order `t`.
pub fn euler_phi_at(r: Exp, t: Exp) -> PuiseuxSeries {
    euler_phi(t / r).substitute(r)
}

/// Dedekind eta without the modular framing: `q^(1/24) (q; q)_inf`.
pub fn eta(t: Exp) -> PuiseuxSeries {
    euler_phi(t).shift(exp(1, 24))
}

/// Quotient `prod phi(q^r)^p` over the given `(scale, power)` parts.
pub fn eta_quotient(parts: &[(Exp, i32)], t: Exp) -> PuiseuxSeries {
    let mut acc = PuiseuxSeries::one(t);
    for &(r, p) in parts {
        let phi = euler_phi_at(r, t);
        let factor = if p < 0 {
            phi.invert().expect("Euler product has leading 1").pow(p.unsigned_abs())
        } else {
            phi.pow(p as u32)
        };
        acc = acc.mul(&factor);
    }
    acc
}

/// `theta2(q) = sum q^((n + 1/2)^2)`.
pub fn theta2(t: Exp) -> PuiseuxSeries {
    weighted_theta_sum(|_| Coeff::one(), Exp::one(), Exp::one(), exp(1, 4), t)
}

/// `theta3(q) = sum q^(n^2)`.
pub fn theta3(t: Exp) -> PuiseuxSeries {
    weighted_theta_sum(|_| Coeff::one(), Exp::one(), Exp::zero(), Exp::zero(), t)
}

/// `theta4(q) = sum (-1)^n q^(n^2)`.
pub fn theta4(t: Exp) -> PuiseuxSeries {
    weighted_theta_sum(
        |n| if n.rem_euclid(2) == 0 { Coeff::one() } else { -Coeff::one() },
        Exp::one(),
        Exp::zero(),
        Exp::zero(),
        t,
    )
}

/// `psi_k(q) = sum q^((n + 1/k)^2)`; `psi_2 = theta2`.
pub fn psi_k(k: i64, t: Exp) -> PuiseuxSeries {
    assert!(k >= 1, "psi_k needs k >= 1");
    weighted_theta_sum(
        |_| Coeff::one(),
        Exp::one(),
        exp(2, k),
        exp(1, k * k),
        t,
    )
}

/// Ramanujan's `phi(q) = sum q^(n^2)`.
pub fn ram_phi(t: Exp) -> PuiseuxSeries {
    theta3(t)
}

/// Product form `(-q; q^2)^2 (q^2; q^2)` of Ramanujan's phi.
pub fn ram_phi_product(t: Exp) -> PuiseuxSeries {
    let odd = pochhammer_inf(-1, Exp::one(), Exp::from_integer(2), t);
    odd.pow(2).mul(&pochhammer_inf(1, Exp::from_integer(2), Exp::from_integer(2), t))
}

/// Ramanujan's `psi(q) = sum_{n >= 0} q^(n(n+1)/2)`.
pub fn ram_psi(t: Exp) -> PuiseuxSeries {
    weighted_theta_sum(
        |n| if n >= 0 { Coeff::one() } else { Coeff::zero() },
        exp(1, 2),
        exp(1, 2),
        Exp::zero(),
        t,
    )
}

/// Product form `(q^2; q^2) / (q; q^2)` of Ramanujan's psi.
pub fn ram_psi_product(t: Exp) -> Result<PuiseuxSeries> {
    let even = pochhammer_inf(1, Exp::from_integer(2), Exp::from_integer(2), t);
    let odd = pochhammer_inf(1, Exp::one(), Exp::from_integer(2), t);
    Ok(even.mul(&odd.invert()?))
}

/// Ramanujan's `f(-q) = sum (-1)^n q^(n(3n-1)/2)`, the pentagonal series.
pub fn ram_f(t: Exp) -> PuiseuxSeries {
    weighted_theta_sum(
        |n| if n.rem_euclid(2) == 0 { Coeff::one() } else { -Coeff::one() },
        exp(3, 2),
        exp(-1, 2),
        Exp::zero(),
        t,
    )
}

/// `chi(q) = (-q; q^2)_inf`.
pub fn chi(t: Exp) -> PuiseuxSeries {
    pochhammer_inf(-1, Exp::one(), Exp::from_integer(2), t)
}

fn rr_sum(offset: i64, t: Exp) -> PuiseuxSeries {
    let mut acc = PuiseuxSeries::zero(t);
    // recip holds 1/(q; q)_n, extended one factor per step.
    let mut recip = PuiseuxSeries::one(t);
    let mut n: i64 = 0;
    loop {
        let e = Exp::from_integer(n * n + offset * n);
        if e >= t {
            return acc;
        }
        if n > 0 {
            let mut geo: Vec<(Exp, Coeff)> = Vec::new();
            let mut k = Exp::zero();
            while k < t {
                geo.push((k, Coeff::one()));
                k += Exp::from_integer(n);
            }
            recip = recip.mul(&PuiseuxSeries::from_exp_terms(geo, t));
        }
        acc = acc.add(&recip.shift(e));
        n += 1;
    }
}

/// Rogers-Ramanujan `G(q) = sum q^(n^2) / (q; q)_n`.
pub fn big_g(t: Exp) -> PuiseuxSeries {
    rr_sum(0, t)
}

/// Rogers-Ramanujan `H(q) = sum q^(n(n+1)) / (q; q)_n`.
pub fn big_h(t: Exp) -> PuiseuxSeries {
    rr_sum(1, t)
}

/// Product form `1 / ((q; q^5)(q^4; q^5))` of G.
pub fn big_g_product(t: Exp) -> Result<PuiseuxSeries> {
    let five = Exp::from_integer(5);
    pochhammer_inf(1, Exp::one(), five, t)
        .mul(&pochhammer_inf(1, Exp::from_integer(4), five, t))
        .invert()
}

/// Product form `1 / ((q^2; q^5)(q^3; q^5))` of H.
pub fn big_h_product(t: Exp) -> Result<PuiseuxSeries> {
    let five = Exp::from_integer(5);
    pochhammer_inf(1, Exp::from_integer(2), five, t)
        .mul(&pochhammer_inf(1, Exp::from_integer(3), five, t))
        .invert()
}

/// Borwein `a(q) = sum q^(x^2 + xy + y^2)` over integer pairs.
pub fn borwein_a(t: Exp) -> PuiseuxSeries {
    binary_quadratic_sum(
        |_, _| Coeff::one(),
        Exp::one(),
        Exp::one(),
        Exp::one(),
        Exp::zero(),
        Exp::zero(),
        Exp::zero(),
        t,
    )
    .expect("x^2 + xy + y^2 is positive definite")
}

/// Borwein `b(q)`: same lattice sum twisted by a cube root of unity,
/// folded to its exact real value `1` or `-1/2` by conjugate symmetry.
pub fn borwein_b(t: Exp) -> PuiseuxSeries {
    binary_quadratic_sum(
        |x, y| {
            if (x - y).rem_euclid(3) == 0 {
                Coeff::one()
            } else {
                coeff(-1, 2)
            }
        },
        Exp::one(),
        Exp::one(),
        Exp::one(),
        Exp::zero(),
        Exp::zero(),
        Exp::zero(),
        t,
    )
    .expect("x^2 + xy + y^2 is positive definite")
}

/// Eta-quotient form `phi(q)^3 / phi(q^3)` of Borwein b.
pub fn borwein_b_eta(t: Exp) -> PuiseuxSeries {
    eta_quotient(&[(Exp::one(), 3), (Exp::from_integer(3), -1)], t)
}

/// Borwein `c(q) = sum q^((x + 1/3)^2 + (x + 1/3)(y + 1/3) + (y + 1/3)^2)`.
pub fn borwein_c(t: Exp) -> PuiseuxSeries {
    binary_quadratic_sum(
        |_, _| Coeff::one(),
        Exp::one(),
        Exp::one(),
        Exp::one(),
        Exp::one(),
        Exp::one(),
        exp(1, 3),
        t,
    )
    .expect("x^2 + xy + y^2 is positive definite")
}

/// Eta-quotient form `3 q^(1/3) phi(q^3)^3 / phi(q)` of Borwein c.
pub fn borwein_c_eta(t: Exp) -> PuiseuxSeries {
    let inner = t - exp(1, 3);
    eta_quotient(&[(Exp::from_integer(3), 3), (Exp::one(), -1)], inner)
        .scale(&Coeff::from_integer(3.into()))
        .shift(exp(1, 3))
}

/// Eisenstein `P(q) = 1 - 24 sum sigma_1(n) q^n`.
pub fn eisenstein_p(t: Exp) -> PuiseuxSeries {
    let limit = t.ceil().to_integer().max(1);
    let mut sigma = vec![0i64; limit as usize];
    for d in 1..limit {
        let mut m = d;
        while m < limit {
            sigma[m as usize] += d;
            m += d;
        }
    }
    let mut pairs = vec![(Exp::zero(), Coeff::one())];
    for n in 1..limit {
        if Exp::from_integer(n) < t {
            pairs.push((
                Exp::from_integer(n),
                Coeff::from_integer((-24 * sigma[n as usize]).into()),
            ));
        }
    }
    PuiseuxSeries::from_exp_terms(pairs, t)
}

/// `w(q) = phi2^2 phi3^3 / (phi1 phi6^2)` (phi_k is `(q^k; q^k)_inf`).
pub fn w_series(t: Exp) -> PuiseuxSeries {
    quotient_1236(&[(2, 2), (3, 3), (1, -1), (6, -2)], t)
}

/// `x(q) = phi1^3 phi6^2 / (phi2^2 phi3)`.
pub fn x_series(t: Exp) -> PuiseuxSeries {
    quotient_1236(&[(1, 3), (6, 2), (2, -2), (3, -1)], t)
}

/// `y(q) = phi1^2 phi6^3 / (phi2 phi3^2)`.
pub fn y_series(t: Exp) -> PuiseuxSeries {
    quotient_1236(&[(1, 2), (6, 3), (2, -1), (3, -2)], t)
}

/// `z(q) = phi2^3 phi3^2 / (phi1^2 phi6)`.
pub fn z_series(t: Exp) -> PuiseuxSeries {
    quotient_1236(&[(2, 3), (3, 2), (1, -2), (6, -1)], t)
}

fn quotient_1236(parts: &[(i64, i32)], t: Exp) -> PuiseuxSeries {
    let parts: Vec<(Exp, i32)> = parts
        .iter()
        .map(|&(k, p)| (Exp::from_integer(k), p))
        .collect();
    eta_quotient(&parts, t)
}

/// `f(a, b) = sum a^(n(n+1)/2) b^(n(n-1)/2)` with `a = sign_a q^ra`,
/// `b = sign_b q^rb`. Errors when `ra + rb = 0`, where the exponent does not
/// grow and the sum has no expansion.
pub fn general_theta(sign_a: i8, ra: Exp, sign_b: i8, rb: Exp, t: Exp) -> Result<PuiseuxSeries> {
    assert!(sign_a.abs() == 1 && sign_b.abs() == 1, "signs must be +1 or -1");
    assert!(ra >= Exp::zero() && rb >= Exp::zero(), "exponents must be nonnegative");
    let c2 = (ra + rb) / 2;
    let c1 = (ra - rb) / 2;
    if c2 <= Exp::zero() {
        return Err(Error::DivergentSpec);
    }
    let parity = |m: i64| m.rem_euclid(2);
    let w = move |n: i64| {
        let ta = n * (n + 1) / 2;
        let tb = n * (n - 1) / 2;
        let mut sign = 1i64;
        if sign_a < 0 && parity(ta) == 1 {
            sign = -sign;
        }
        if sign_b < 0 && parity(tb) == 1 {
            sign = -sign;
        }
        Coeff::from_integer(sign.into())
    };
    Ok(weighted_theta_sum(w, c2, c1, Exp::zero(), t))
}

/// `f_{a,b}(q) = sum q^(a (n + b/(2a))^2)`, exponents in `(1/(4a)) Z`.
pub fn kw_f(a: i64, b: i64, t: Exp) -> PuiseuxSeries {
    assert!(a >= 1, "leading coefficient must be positive");
    weighted_theta_sum(
        |_| Coeff::one(),
        Exp::from_integer(a),
        Exp::from_integer(b),
        exp(b * b, 4 * a),
        t,
    )
}

/// The named series a [`FunctionSpec`] can ask for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionName {
    EulerPhi,
    Eta,
    Theta2,
    Theta3,
    Theta4,
    PsiK(i64),
    RamPhi,
    RamPsi,
    RamF,
    Chi,
    BigG,
    BigH,
    BorweinA,
    BorweinB,
    BorweinC,
    EisensteinP,
    W,
    X,
    Y,
    Z,
}

impl fmt::Display for FunctionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionName::EulerPhi => write!(f, "euler_phi"),
            FunctionName::Eta => write!(f, "eta"),
            FunctionName::Theta2 => write!(f, "theta2"),
            FunctionName::Theta3 => write!(f, "theta3"),
            FunctionName::Theta4 => write!(f, "theta4"),
            FunctionName::PsiK(k) => write!(f, "psi_{k}"),
            FunctionName::RamPhi => write!(f, "ram_phi"),
            FunctionName::RamPsi => write!(f, "ram_psi"),
            FunctionName::RamF => write!(f, "ram_f"),
            FunctionName::Chi => write!(f, "chi"),
            FunctionName::BigG => write!(f, "G"),
            FunctionName::BigH => write!(f, "H"),
            FunctionName::BorweinA => write!(f, "borwein_a"),
            FunctionName::BorweinB => write!(f, "borwein_b"),
            FunctionName::BorweinC => write!(f, "borwein_c"),
            FunctionName::EisensteinP => write!(f, "eisenstein_P"),
            FunctionName::W => write!(f, "w"),
            FunctionName::X => write!(f, "x"),
            FunctionName::Y => write!(f, "y"),
            FunctionName::Z => write!(f, "z"),
        }
    }
}

/// How to realize a named series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sum,
    Product,
    EtaQuotient,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Sum => write!(f, "sum"),
            Mode::Product => write!(f, "product"),
            Mode::EtaQuotient => write!(f, "eta_quotient"),
        }
    }
}

/// A named series evaluated at `q^scale` in a chosen mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSpec {
    pub name: FunctionName,
    pub scale: Exp,
    pub mode: Mode,
}

impl FunctionSpec {
    /// Plain-variable spec in the name's canonical mode.
    pub fn new(name: FunctionName) -> Self {
        let mode = match name {
            FunctionName::EulerPhi | FunctionName::Eta | FunctionName::Chi => Mode::Product,
            FunctionName::W | FunctionName::X | FunctionName::Y | FunctionName::Z => {
                Mode::EtaQuotient
            }
            _ => Mode::Sum,
        };
        FunctionSpec {
            name,
            scale: Exp::one(),
            mode,
        }
    }

    pub fn with_scale(mut self, scale: Exp) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }
}

/// Builds the named series at `q^scale` to order `t`. Errors with
/// [`Error::UnsupportedMode`] when the name has no formula in the mode.
pub fn build(spec: &FunctionSpec, t: Exp) -> Result<PuiseuxSeries> {
    assert!(spec.scale > Exp::zero(), "scale must be positive");
    let it = t / spec.scale;
    let base = match (spec.name, spec.mode) {
        (FunctionName::EulerPhi, Mode::Product) => euler_phi(it),
        (FunctionName::Eta, Mode::Product) => eta(it),
        (FunctionName::Theta2, Mode::Sum) => theta2(it),
        (FunctionName::Theta3, Mode::Sum) => theta3(it),
        (FunctionName::Theta4, Mode::Sum) => theta4(it),
        (FunctionName::PsiK(k), Mode::Sum) => psi_k(k, it),
        (FunctionName::RamPhi, Mode::Sum) => ram_phi(it),
        (FunctionName::RamPhi, Mode::Product) => ram_phi_product(it),
        (FunctionName::RamPsi, Mode::Sum) => ram_psi(it),
        (FunctionName::RamPsi, Mode::Product) => ram_psi_product(it)?,
        (FunctionName::RamF, Mode::Sum) => ram_f(it),
        (FunctionName::RamF, Mode::Product) => euler_phi(it),
        (FunctionName::Chi, Mode::Product) => chi(it),
        (FunctionName::BigG, Mode::Sum) => big_g(it),
        (FunctionName::BigG, Mode::Product) => big_g_product(it)?,
        (FunctionName::BigH, Mode::Sum) => big_h(it),
        (FunctionName::BigH, Mode::Product) => big_h_product(it)?,
        (FunctionName::BorweinA, Mode::Sum) => borwein_a(it),
        (FunctionName::BorweinB, Mode::Sum) => borwein_b(it),
        (FunctionName::BorweinB, Mode::EtaQuotient) => borwein_b_eta(it),
        (FunctionName::BorweinC, Mode::Sum) => borwein_c(it),
        (FunctionName::BorweinC, Mode::EtaQuotient) => borwein_c_eta(it),
        (FunctionName::EisensteinP, Mode::Sum) => eisenstein_p(it),
        (FunctionName::W, Mode::EtaQuotient) => w_series(it),
        (FunctionName::X, Mode::EtaQuotient) => x_series(it),
        (FunctionName::Y, Mode::EtaQuotient) => y_series(it),
        (FunctionName::Z, Mode::EtaQuotient) => z_series(it),
        (name, mode) => {
            return Err(Error::UnsupportedMode(name.to_string(), mode.to_string()))
        }
    };
    Ok(if spec.scale == Exp::one() {
        base
    } else {
        base.substitute(spec.scale)
    })
}
