//! Registry of q-series identities, each stored as two independent builders
//! and verified coefficient by coefficient.
//!
//! Both sides of every entry are constructed from scratch at the requested
//! order (sum modes against product modes, lattice sums against eta
//! quotients), so a passing report means two genuinely different
//! computations produced the same coefficients, not that one formula was
//! compared with itself.

use crate::functions::{
    big_g, big_g_product, big_h, big_h_product, binary_quadratic_sum, borwein_a, borwein_b,
    borwein_b_eta, borwein_c, borwein_c_eta, chi, eisenstein_p, eta_quotient, euler_phi,
    euler_phi_at, general_theta, pochhammer_inf, ram_f, ram_phi, ram_phi_product, ram_psi,
    ram_psi_product, theta2, theta3, theta4, w_series, weighted_theta_sum, x_series, y_series,
    z_series,
};
use num_traits::{One, Zero};

use crate::series::{coeff, eq_to_order, exp, Coeff, Exp, PuiseuxSeries, VerificationReport};
use crate::{Error, Result};

/// A builder produces one side of an identity at the requested order.
pub type Builder = Box<dyn Fn(Exp) -> Result<PuiseuxSeries> + Send + Sync>;

/// One identity: a stable id, a short name, the formula as displayed, and
/// independent builders for the two sides.
pub struct IdentityCase {
    pub id: &'static str,
    pub citation: &'static str,
    pub quote: &'static str,
    pub lhs: Builder,
    pub rhs: Builder,
}

fn case<L, R>(
    id: &'static str,
    citation: &'static str,
    quote: &'static str,
    lhs: L,
    rhs: R,
) -> IdentityCase
where
    L: Fn(Exp) -> Result<PuiseuxSeries> + Send + Sync + 'static,
    R: Fn(Exp) -> Result<PuiseuxSeries> + Send + Sync + 'static,
{
    IdentityCase {
        id,
        citation,
        quote,
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

/// Evaluates `f` at `q^r` to order `t` by building the inner series to the
/// order the substitution chain requires.
fn at(f: fn(Exp) -> PuiseuxSeries, r: i64, t: Exp) -> PuiseuxSeries {
    at_frac(f, Exp::from_integer(r), t)
}

fn at_frac(f: fn(Exp) -> PuiseuxSeries, r: Exp, t: Exp) -> PuiseuxSeries {
    if r == Exp::one() {
        f(t)
    } else {
        f(t / r).substitute(r)
    }
}

/// `phi(q^k) = (q^k; q^k)_inf` to order `t`.
fn phi(k: i64, t: Exp) -> PuiseuxSeries {
    euler_phi_at(Exp::from_integer(k), t)
}

/// `chi(-q^k) = (q^k; q^(2k))_inf` to order `t`.
fn chi_neg(k: i64, t: Exp) -> PuiseuxSeries {
    pochhammer_inf(1, Exp::from_integer(k), Exp::from_integer(2 * k), t)
}

/// `sum q^(c20 x^2 + c11 xy + c02 y^2 + c10 x + c01 y + c00)` over integer
/// pairs; errors unless the quadratic part is positive definite.
pub fn quadratic_form_sum(
    c20: Exp,
    c11: Exp,
    c02: Exp,
    c10: Exp,
    c01: Exp,
    c00: Exp,
    t: Exp,
) -> Result<PuiseuxSeries> {
    binary_quadratic_sum(|_, _| Coeff::one(), c20, c11, c02, c10, c01, c00, t)
}

fn x_dissection_rhs(k: i64, t: Exp) -> PuiseuxSeries {
    let third = exp(1, 3);
    let z2 = at(z_series, 2, t);
    let c4 = at_frac(borwein_c, Exp::from_integer(4), t + third)
        .shift(-third)
        .scale(&Coeff::from_integer(k.into()));
    z2.sub(&c4)
}

/// Compares `x(q)` against `z(q^2) - k q^(-1/3) c(q^4)`. The identity holds
/// with `k = 1` and fails with `k = 3`; the suite asserts both directions.
pub fn x_dissection_check(k: i64, t: Exp) -> Result<VerificationReport> {
    let id = format!("x = z(q^2) - {k} q^(-1/3) c(q^4)");
    eq_to_order(&x_series(t), &x_dissection_rhs(k, t), t, &id)
}

/// All registered identities, in a fixed order with unique ids.
pub fn registry() -> Vec<IdentityCase> {
    vec![
        case(
            "prop3.2.1",
            "theta fourth powers",
            "theta3(q)^4 = theta2(q)^4 + theta4(q)^4",
            |t| Ok(theta3(t).pow(4)),
            |t| Ok(theta2(t).pow(4).add(&theta4(t).pow(4))),
        ),
        case(
            "prop3.2.2",
            "theta3 square contraction",
            "theta3(q)^2 = theta3(q^2)^2 + theta2(q^2)^2",
            |t| Ok(theta3(t).pow(2)),
            |t| Ok(at(theta3, 2, t).pow(2).add(&at(theta2, 2, t).pow(2))),
        ),
        case(
            "prop3.2.3",
            "theta4 square contraction",
            "theta4(q)^2 = theta3(q^2)^2 - theta2(q^2)^2",
            |t| Ok(theta4(t).pow(2)),
            |t| Ok(at(theta3, 2, t).pow(2).sub(&at(theta2, 2, t).pow(2))),
        ),
        case(
            "prop3.2.4",
            "psi_3 from theta3",
            "psi_3(q) = (theta3(q^(1/9)) - theta3(q)) / 2",
            |t| Ok(crate::functions::psi_k(3, t)),
            |t| Ok(at_frac(theta3, exp(1, 9), t).sub(&theta3(t)).scale(&coeff(1, 2))),
        ),
        case(
            "prop3.2.5",
            "psi_6 from theta2",
            "psi_6(q) = (theta2(q^(1/9)) - theta2(q)) / 2",
            |t| Ok(crate::functions::psi_k(6, t)),
            |t| Ok(at_frac(theta2, exp(1, 9), t).sub(&theta2(t)).scale(&coeff(1, 2))),
        ),
        case(
            "prop3.4.1",
            "triangular series symmetry",
            "f(a, b) = f(b, a) at a = q, b = q^2",
            |t| general_theta(1, Exp::one(), 1, Exp::from_integer(2), t),
            |t| general_theta(1, Exp::from_integer(2), 1, Exp::one(), t),
        ),
        case(
            "prop3.4.2",
            "triangular series doubling",
            "f(1, a) = 2 f(a, a^3) at a = q",
            |t| general_theta(1, Exp::zero(), 1, Exp::one(), t),
            |t| {
                Ok(general_theta(1, Exp::one(), 1, Exp::from_integer(3), t)?
                    .scale(&Coeff::from_integer(2.into())))
            },
        ),
        case(
            "prop3.4.3",
            "triangular series vanishing",
            "f(-1, a) = 0 at a = q",
            |t| general_theta(-1, Exp::zero(), 1, Exp::one(), t),
            |t| Ok(PuiseuxSeries::zero(t)),
        ),
        case(
            "prop3.4.4",
            "triple product",
            "f(a, b) = (-a; ab)(-b; ab)(ab; ab) at a = q, b = q^2",
            |t| general_theta(1, Exp::one(), 1, Exp::from_integer(2), t),
            |t| {
                let three = Exp::from_integer(3);
                Ok(pochhammer_inf(-1, Exp::one(), three, t)
                    .mul(&pochhammer_inf(-1, Exp::from_integer(2), three, t))
                    .mul(&pochhammer_inf(1, three, three, t)))
            },
        ),
        case(
            "phieis.1",
            "phi^4 from P",
            "phi(q)^4 = (4 P(q^4) - P(q)) / 3",
            |t| Ok(ram_phi(t).pow(4)),
            |t| {
                Ok(at(eisenstein_p, 4, t)
                    .scale(&Coeff::from_integer(4.into()))
                    .sub(&eisenstein_p(t))
                    .scale(&coeff(1, 3)))
            },
        ),
        case(
            "phieis.2",
            "phi(-q)^4 from P",
            "phi(-q)^4 = (P(q) - 6 P(q^2) + 8 P(q^4)) / 3",
            |t| Ok(ram_phi(t).negate_argument()?.pow(4)),
            |t| {
                Ok(eisenstein_p(t)
                    .sub(&at(eisenstein_p, 2, t).scale(&Coeff::from_integer(6.into())))
                    .add(&at(eisenstein_p, 4, t).scale(&Coeff::from_integer(8.into())))
                    .scale(&coeff(1, 3)))
            },
        ),
        case(
            "prop3.8.1",
            "G product form",
            "G(q) = 1 / ((q; q^5)(q^4; q^5))",
            |t| Ok(big_g(t)),
            big_g_product,
        ),
        case(
            "prop3.8.2",
            "H product form",
            "H(q) = 1 / ((q^2; q^5)(q^3; q^5))",
            |t| Ok(big_h(t)),
            big_h_product,
        ),
        case(
            "rrr.1",
            "G H cross sum",
            "G(q^2) G(q^3) + q H(q^2) H(q^3) = chi(-q^3) / chi(-q)",
            |t| {
                Ok(at(big_g, 2, t)
                    .mul(&at(big_g, 3, t))
                    .add(&at(big_h, 2, t).mul(&at(big_h, 3, t)).shift(Exp::one())))
            },
            |t| Ok(chi_neg(3, t).mul(&chi_neg(1, t).invert()?)),
        ),
        case(
            "rrr.2",
            "G H cross difference",
            "G(q^6) H(q) - q G(q) H(q^6) = chi(-q) / chi(-q^3)",
            |t| {
                Ok(at(big_g, 6, t)
                    .mul(&big_h(t))
                    .sub(&big_g(t).mul(&at(big_h, 6, t)).shift(Exp::one())))
            },
            |t| Ok(chi_neg(1, t).mul(&chi_neg(3, t).invert()?)),
        ),
        case(
            "prop3.10.1",
            "cubic a from thetas",
            "a(q) = theta3(q) theta3(q^3) + theta2(q) theta2(q^3)",
            |t| Ok(borwein_a(t)),
            |t| {
                Ok(theta3(t)
                    .mul(&at(theta3, 3, t))
                    .add(&theta2(t).mul(&at(theta2, 3, t))))
            },
        ),
        case(
            "prop3.10.2",
            "cubic b eta quotient",
            "b(q) = phi1^3 / phi3",
            |t| Ok(borwein_b(t)),
            |t| Ok(borwein_b_eta(t)),
        ),
        case(
            "prop3.10.3",
            "cubic c eta quotient",
            "c(q) = 3 q^(1/3) phi3^3 / phi1",
            |t| Ok(borwein_c(t)),
            |t| Ok(borwein_c_eta(t)),
        ),
        case(
            "prop3.10.4",
            "cubic a fourth-power argument",
            "a(q^4) = (theta3(q) theta3(q^3) + theta4(q) theta4(q^3)) / 2",
            |t| Ok(at(borwein_a, 4, t)),
            |t| {
                Ok(theta3(t)
                    .mul(&at(theta3, 3, t))
                    .add(&theta4(t).mul(&at(theta4, 3, t)))
                    .scale(&coeff(1, 2)))
            },
        ),
        case(
            "prop3.10.5",
            "cubic Fermat relation",
            "a(q)^3 = b(q)^3 + c(q)^3",
            |t| Ok(borwein_a(t).pow(3)),
            |t| Ok(borwein_b(t).pow(3).add(&borwein_c(t).pow(3))),
        ),
        case(
            "prop3.10.6",
            "b from a",
            "b(q) = (3 a(q^3) - a(q)) / 2",
            |t| Ok(borwein_b(t)),
            |t| {
                Ok(at(borwein_a, 3, t)
                    .scale(&coeff(3, 2))
                    .sub(&borwein_a(t).scale(&coeff(1, 2))))
            },
        ),
        case(
            "prop3.10.7",
            "c from a",
            "c(q) = (a(q^(1/3)) - a(q)) / 2",
            |t| Ok(borwein_c(t)),
            |t| {
                Ok(at_frac(borwein_a, exp(1, 3), t)
                    .sub(&borwein_a(t))
                    .scale(&coeff(1, 2)))
            },
        ),
        case(
            "prop3.10.8",
            "a argument negation",
            "a(q) + a(-q) = 2 a(q^4)",
            |t| Ok(borwein_a(t).add(&borwein_a(t).negate_argument()?)),
            |t| Ok(at(borwein_a, 4, t).scale(&Coeff::from_integer(2.into()))),
        ),
        case(
            "prop3.10.9",
            "b argument negation",
            "b(q) + b(-q) = 2 b(q^4)",
            |t| Ok(borwein_b(t).add(&borwein_b(t).negate_argument()?)),
            |t| Ok(at(borwein_b, 4, t).scale(&Coeff::from_integer(2.into()))),
        ),
        case(
            "prop3.10.10",
            "c argument negation",
            "c(q) + c(-q) = 2 c(q^4)",
            |t| Ok(borwein_c(t).add(&borwein_c(t).negate_argument()?)),
            |t| Ok(at(borwein_c, 4, t).scale(&Coeff::from_integer(2.into()))),
        ),
        case(
            "prop3.10.11",
            "b from a and c",
            "b(q) = a(q^3) - c(q^3)",
            |t| Ok(borwein_b(t)),
            |t| Ok(at(borwein_a, 3, t).sub(&at(borwein_c, 3, t))),
        ),
        case(
            "prop3.10.12",
            "a difference as psi product",
            "a(q) - a(q^4) = 6 q psi(q^2) psi(q^6)",
            |t| Ok(borwein_a(t).sub(&at(borwein_a, 4, t))),
            |t| {
                Ok(at(ram_psi, 2, t)
                    .mul(&at(ram_psi, 6, t))
                    .shift(Exp::one())
                    .scale(&Coeff::from_integer(6.into())))
            },
        ),
        case(
            "prop3.10.13",
            "a a(q^2) from P",
            "a(q) a(q^2) = (6 P(q^6) - 3 P(q^3) + 2 P(q^2) - P(q)) / 4",
            |t| Ok(borwein_a(t).mul(&at(borwein_a, 2, t))),
            |t| {
                Ok(at(eisenstein_p, 6, t)
                    .scale(&Coeff::from_integer(6.into()))
                    .sub(&at(eisenstein_p, 3, t).scale(&Coeff::from_integer(3.into())))
                    .add(&at(eisenstein_p, 2, t).scale(&Coeff::from_integer(2.into())))
                    .sub(&eisenstein_p(t))
                    .scale(&coeff(1, 4)))
            },
        ),
        case(
            "prop3.10.14",
            "b b(q^2) from P",
            "b(q) b(q^2) = (18 P(q^6) - 9 P(q^3) - 2 P(q^2) + P(q)) / 8",
            |t| Ok(borwein_b(t).mul(&at(borwein_b, 2, t))),
            |t| {
                Ok(at(eisenstein_p, 6, t)
                    .scale(&Coeff::from_integer(18.into()))
                    .sub(&at(eisenstein_p, 3, t).scale(&Coeff::from_integer(9.into())))
                    .sub(&at(eisenstein_p, 2, t).scale(&Coeff::from_integer(2.into())))
                    .add(&eisenstein_p(t))
                    .scale(&coeff(1, 8)))
            },
        ),
        case(
            "prop3.10.15",
            "c c(q^2) from P",
            "c(q) c(q^2) = 3 (-2 P(q^6) + P(q^3) + 2 P(q^2) - P(q)) / 8",
            |t| Ok(borwein_c(t).mul(&at(borwein_c, 2, t))),
            |t| {
                Ok(at(eisenstein_p, 6, t)
                    .scale(&Coeff::from_integer((-2).into()))
                    .add(&at(eisenstein_p, 3, t))
                    .add(&at(eisenstein_p, 2, t).scale(&Coeff::from_integer(2.into())))
                    .sub(&eisenstein_p(t))
                    .scale(&coeff(3, 8)))
            },
        ),
        case(
            "cor3.11",
            "a(q^4) from phi and psi",
            "phi(-q) phi(-q^3) + 2 q psi(q^2) psi(q^6) = a(q^4)",
            |t| {
                Ok(ram_phi(t)
                    .negate_argument()?
                    .mul(&at(ram_phi, 3, t).negate_argument()?)
                    .add(
                        &at(ram_psi, 2, t)
                            .mul(&at(ram_psi, 6, t))
                            .shift(Exp::one())
                            .scale(&Coeff::from_integer(2.into())),
                    ))
            },
            |t| Ok(at(borwein_a, 4, t)),
        ),
        case(
            "cor3.11.scalar",
            "psi product as theta2 product",
            "6 q psi(q^2) psi(q^6) = (3/2) theta2(q) theta2(q^3)",
            |t| {
                Ok(at(ram_psi, 2, t)
                    .mul(&at(ram_psi, 6, t))
                    .shift(Exp::one())
                    .scale(&Coeff::from_integer(6.into())))
            },
            |t| Ok(theta2(t).mul(&at(theta2, 3, t)).scale(&coeff(3, 2))),
        ),
        case(
            "prop3.12.1",
            "eta quotient theta (6n+1)^2/24",
            "eta2 eta3^2 / (eta1 eta6) = sum q^((6n+1)^2 / 24)",
            |t| {
                let s = exp(1, 24);
                Ok(eta_quotient(
                    &[
                        (Exp::from_integer(2), 1),
                        (Exp::from_integer(3), 2),
                        (Exp::one(), -1),
                        (Exp::from_integer(6), -1),
                    ],
                    t - s,
                )
                .shift(s))
            },
            |t| Ok(weighted_theta_sum(|_| Coeff::one(), exp(3, 2), exp(1, 2), exp(1, 24), t)),
        ),
        case(
            "prop3.12.2",
            "eta quotient theta (3n+1)^2/3",
            "eta1 eta6^2 / (eta2 eta3) = sum (-1)^n q^((3n+1)^2 / 3)",
            |t| {
                let s = exp(1, 3);
                Ok(eta_quotient(
                    &[
                        (Exp::one(), 1),
                        (Exp::from_integer(6), 2),
                        (Exp::from_integer(2), -1),
                        (Exp::from_integer(3), -1),
                    ],
                    t - s,
                )
                .shift(s))
            },
            |t| {
                Ok(weighted_theta_sum(
                    |n| {
                        if n.rem_euclid(2) == 0 {
                            Coeff::one()
                        } else {
                            -Coeff::one()
                        }
                    },
                    Exp::from_integer(3),
                    Exp::from_integer(2),
                    exp(1, 3),
                    t,
                ))
            },
        ),
        case(
            "prop3.12.3",
            "eta quotient theta (2n+1)^2/8",
            "eta1^2 eta6 / (eta2 eta3) = sum nu6^(2n+1) q^((2n+1)^2 / 8)",
            |t| {
                let s = exp(1, 8);
                Ok(eta_quotient(
                    &[
                        (Exp::one(), 2),
                        (Exp::from_integer(6), 1),
                        (Exp::from_integer(2), -1),
                        (Exp::from_integer(3), -1),
                    ],
                    t - s,
                )
                .shift(s))
            },
            |t| {
                // nu6^(2n+1) summed with its conjugate: cos((2n+1) pi / 3).
                Ok(weighted_theta_sum(
                    |n| match n.rem_euclid(3) {
                        1 => -Coeff::one(),
                        _ => coeff(1, 2),
                    },
                    exp(1, 2),
                    exp(1, 2),
                    exp(1, 8),
                    t,
                ))
            },
        ),
        case(
            "prop3.12.4",
            "eta quotient theta n^2",
            "eta2^2 eta3 / (eta1 eta6) = sum nu6^n q^(n^2)",
            |t| {
                Ok(eta_quotient(
                    &[
                        (Exp::from_integer(2), 2),
                        (Exp::from_integer(3), 1),
                        (Exp::one(), -1),
                        (Exp::from_integer(6), -1),
                    ],
                    t,
                ))
            },
            |t| {
                // nu6^n folded with its conjugate: cos(n pi / 3).
                Ok(weighted_theta_sum(
                    |n| match n.rem_euclid(6) {
                        0 => Coeff::one(),
                        1 | 5 => coeff(1, 2),
                        2 | 4 => coeff(-1, 2),
                        _ => -Coeff::one(),
                    },
                    Exp::one(),
                    Exp::zero(),
                    Exp::zero(),
                    t,
                ))
            },
        ),
        case(
            "remark3.12.psi",
            "psi eta quotient",
            "psi(q) = phi2^2 / phi1",
            |t| Ok(ram_psi(t)),
            |t| Ok(eta_quotient(&[(Exp::from_integer(2), 2), (Exp::one(), -1)], t)),
        ),
        case(
            "remark3.12.phi",
            "phi eta quotient",
            "phi(q) = phi2^5 / (phi1^2 phi4^2)",
            |t| Ok(ram_phi(t)),
            |t| {
                Ok(eta_quotient(
                    &[
                        (Exp::from_integer(2), 5),
                        (Exp::one(), -2),
                        (Exp::from_integer(4), -2),
                    ],
                    t,
                ))
            },
        ),
        case(
            "prop3.13",
            "a a + 2 c c as half-argument thetas",
            "a(q) a(q^2) + 2 c(q) c(q^2) = (theta3(q^(1/2))^4 + theta4(q^(1/2))^4) / 2",
            |t| {
                Ok(borwein_a(t).mul(&at(borwein_a, 2, t)).add(
                    &borwein_c(t)
                        .mul(&at(borwein_c, 2, t))
                        .scale(&Coeff::from_integer(2.into())),
                ))
            },
            |t| {
                let h = exp(1, 2);
                Ok(at_frac(theta3, h, t)
                    .pow(4)
                    .add(&at_frac(theta4, h, t).pow(4))
                    .scale(&coeff(1, 2)))
            },
        ),
        case(
            "thm3.15",
            "w dissection",
            "w(q) = phi(-q^3) phi(-q^9) + q x(q^3)",
            |t| Ok(w_series(t)),
            |t| {
                Ok(at(ram_phi, 3, t)
                    .negate_argument()?
                    .mul(&at(ram_phi, 9, t).negate_argument()?)
                    .add(&at(x_series, 3, t).shift(Exp::one())))
            },
        ),
        case(
            "thm3.16",
            "y dissection",
            "y(q) = z(q^3) - 2 q psi(q^3) psi(q^9)",
            |t| Ok(y_series(t)),
            |t| {
                Ok(at(z_series, 3, t).sub(
                    &at(ram_psi, 3, t)
                        .mul(&at(ram_psi, 9, t))
                        .shift(Exp::one())
                        .scale(&Coeff::from_integer(2.into())),
                ))
            },
        ),
        case(
            "lem3.18",
            "hex shell shift",
            "sum q^(2x^2+2xy+2y^2+x+y) = sum q^(2x^2+2xy+2y^2+2x+3y+1)",
            |t| {
                quadratic_form_sum(
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::one(),
                    Exp::one(),
                    Exp::zero(),
                    t,
                )
            },
            |t| {
                quadratic_form_sum(
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::from_integer(3),
                    Exp::one(),
                    t,
                )
            },
        ),
        case(
            "lem3.19",
            "hex shell sum is z",
            "sum q^(2x^2+2xy+2y^2+x+y) = z(q)",
            |t| {
                quadratic_form_sum(
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::from_integer(2),
                    Exp::one(),
                    Exp::one(),
                    Exp::zero(),
                    t,
                )
            },
            |t| Ok(z_series(t)),
        ),
        case(
            "thm3.20",
            "x dissection",
            "x(q) = z(q^2) - q^(-1/3) c(q^4)",
            |t| Ok(x_series(t)),
            |t| Ok(x_dissection_rhs(1, t)),
        ),
        case(
            "cor3.21",
            "z dissection",
            "q^(1/6) z(q) = (c(q^(1/2)) - c(q^2)) / 3",
            |t| Ok(z_series(t).shift(exp(1, 6))),
            |t| {
                Ok(at_frac(borwein_c, exp(1, 2), t)
                    .sub(&at(borwein_c, 2, t))
                    .scale(&coeff(1, 3)))
            },
        ),
        case(
            "prop5.9.1",
            "quintic cross sum",
            "G(q) G(q^4) + q H(q) H(q^4) = phi(q) / phi1(q^2)",
            |t| {
                Ok(big_g(t)
                    .mul(&at(big_g, 4, t))
                    .add(&big_h(t).mul(&at(big_h, 4, t)).shift(Exp::one())))
            },
            |t| Ok(ram_phi(t).mul(&phi(2, t).invert()?)),
        ),
        case(
            "prop5.9.2",
            "quintic cross difference",
            "G(q) G(q^4) - q H(q) H(q^4) = phi(q^5) / phi1(q^2)",
            |t| {
                Ok(big_g(t)
                    .mul(&at(big_g, 4, t))
                    .sub(&big_h(t).mul(&at(big_h, 4, t)).shift(Exp::one())))
            },
            |t| Ok(at(ram_phi, 5, t).mul(&phi(2, t).invert()?)),
        ),
        case(
            "prop5.9.3",
            "quintic twisted sum",
            "G(q) H(-q) + G(-q) H(q) = 2 psi(q^2) / phi1(q^2)",
            |t| {
                Ok(big_g(t)
                    .mul(&big_h(t).negate_argument()?)
                    .add(&big_g(t).negate_argument()?.mul(&big_h(t))))
            },
            |t| {
                Ok(at(ram_psi, 2, t)
                    .scale(&Coeff::from_integer(2.into()))
                    .mul(&phi(2, t).invert()?))
            },
        ),
        case(
            "prop5.9.4",
            "quintic twisted difference",
            "G(q) H(-q) - G(-q) H(q) = 2 q psi(q^10) / phi1(q^2)",
            |t| {
                Ok(big_g(t)
                    .mul(&big_h(t).negate_argument()?)
                    .sub(&big_g(t).negate_argument()?.mul(&big_h(t))))
            },
            |t| {
                Ok(at(ram_psi, 10, t)
                    .shift(Exp::one())
                    .scale(&Coeff::from_integer(2.into()))
                    .mul(&phi(2, t).invert()?))
            },
        ),
        case(
            "lem5.11",
            "psi phi balance",
            "psi(q^2) phi(q^5) - q psi(q^10) phi(q) = phi1(q) phi1(q^5)",
            |t| {
                Ok(at(ram_psi, 2, t)
                    .mul(&at(ram_phi, 5, t))
                    .sub(&at(ram_psi, 10, t).mul(&ram_phi(t)).shift(Exp::one())))
            },
            |t| Ok(euler_phi(t).mul(&phi(5, t))),
        ),
        case(
            "eq2.14",
            "phi1(-q)^2 split",
            "phi1(-q)^2 = phi1(q^2) phi(q)",
            |t| Ok(euler_phi(t).negate_argument()?.pow(2)),
            |t| Ok(phi(2, t).mul(&ram_phi(t))),
        ),
        case(
            "ch5.1id",
            "degree collapse for G",
            "phi1(-q)^2 G(-q) - phi1(q)^2 G(q) = 2 q phi1(q^4)^2 H(q^4)",
            |t| {
                Ok(euler_phi(t)
                    .negate_argument()?
                    .pow(2)
                    .mul(&big_g(t).negate_argument()?)
                    .sub(&euler_phi(t).pow(2).mul(&big_g(t))))
            },
            |t| {
                Ok(phi(4, t)
                    .pow(2)
                    .mul(&at(big_h, 4, t))
                    .shift(Exp::one())
                    .scale(&Coeff::from_integer(2.into())))
            },
        ),
        case(
            "ch5.2id",
            "degree collapse for H",
            "phi1(-q)^2 H(-q) + phi1(q)^2 H(q) = 2 phi1(q^4)^2 G(q^4)",
            |t| {
                Ok(euler_phi(t)
                    .negate_argument()?
                    .pow(2)
                    .mul(&big_h(t).negate_argument()?)
                    .add(&euler_phi(t).pow(2).mul(&big_h(t))))
            },
            |t| {
                Ok(phi(4, t)
                    .pow(2)
                    .mul(&at(big_g, 4, t))
                    .scale(&Coeff::from_integer(2.into())))
            },
        ),
        case(
            "aux.pentagonal",
            "pentagonal numbers",
            "phi1(q) = f(-q, -q^2)",
            |t| Ok(euler_phi(t)),
            |t| general_theta(-1, Exp::one(), -1, Exp::from_integer(2), t),
        ),
        case(
            "aux.ramphi.product",
            "phi product form",
            "phi(q) = (-q; q^2)^2 (q^2; q^2)",
            |t| Ok(ram_phi(t)),
            |t| Ok(ram_phi_product(t)),
        ),
        case(
            "aux.rampsi.product",
            "psi product form",
            "psi(q) = (q^2; q^2) / (q; q^2)",
            |t| Ok(ram_psi(t)),
            ram_psi_product,
        ),
        case(
            "aux.ramf.product",
            "pentagonal product form",
            "f(-q) = (q; q)",
            |t| Ok(ram_f(t)),
            |t| Ok(euler_phi(t)),
        ),
        case(
            "aux.chi.quotient",
            "chi as phi quotient",
            "chi(-q) = phi1(q) / phi1(q^2)",
            |t| chi(t).negate_argument(),
            |t| Ok(euler_phi(t).mul(&phi(2, t).invert()?)),
        ),
    ]
}

/// Runs one identity at order `t`.
pub fn verify_case(case: &IdentityCase, t: Exp) -> Result<VerificationReport> {
    let lhs = (case.lhs)(t)?;
    let rhs = (case.rhs)(t)?;
    eq_to_order(&lhs, &rhs, t, case.id)
}

/// Runs the whole registry at order `t >= 5`.
pub fn verify_all(t: Exp) -> Result<Vec<VerificationReport>> {
    verify_filtered(&[], t)
}

/// Runs the registry entries whose id starts with any of `prefixes`
/// (all entries when `prefixes` is empty).
pub fn verify_filtered(prefixes: &[String], t: Exp) -> Result<Vec<VerificationReport>> {
    if t < Exp::from_integer(5) {
        return Err(Error::InvalidParameters(format!(
            "verification order must be at least 5, got {t}"
        )));
    }
    registry()
        .iter()
        .filter(|c| prefixes.is_empty() || prefixes.iter().any(|p| c.id.starts_with(p.as_str())))
        .map(|c| verify_case(c, t))
        .collect()
}
