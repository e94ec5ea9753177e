//! Named series checked against brute-force counting oracles, frozen
//! coefficients, and their alternate presentations.

use num_traits::{One, Zero};
use qseries::functions::{
    big_g, big_h, binary_quadratic_sum, borwein_a, borwein_b, build, chi, eisenstein_p, eta,
    euler_phi, general_theta, kw_f, psi_k, ram_phi, ram_psi, theta2, theta3, theta4,
    weighted_theta_sum, FunctionName, FunctionSpec, Mode,
};
use qseries::series::{coeff, eq_to_order, exp, Coeff, Exp, PuiseuxSeries};
use qseries::Error;

fn int(n: i64) -> Exp {
    Exp::from_integer(n)
}

fn assert_coeffs(s: &PuiseuxSeries, expect: &[i64], label: &str) {
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(
            s.coefficient(int(n as i64)).unwrap(),
            Coeff::from_integer((*e).into()),
            "{label} at q^{n}"
        );
    }
}

fn assert_same(a: &PuiseuxSeries, b: &PuiseuxSeries, t: i64, label: &str) {
    let report = eq_to_order(a, b, int(t), label).unwrap();
    assert!(report.passed, "{}", report.summary_line());
}

/// Representations of `n` by `x^2 + xy + y^2`, by brute scan over a box that
/// provably contains every solution (the form bounds `(x^2 + y^2) / 2`).
fn hexagonal_oracle(n: i64) -> i64 {
    let bound = 1 + (1..).find(|b| b * b >= 2 * n).unwrap();
    let mut count = 0;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x * x + x * y + y * y == n {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn hexagonal_lattice_sum_counts_representations() {
    let a = borwein_a(int(25));
    for n in 0..25 {
        assert_eq!(
            a.coefficient(int(n)).unwrap(),
            Coeff::from_integer(hexagonal_oracle(n).into()),
            "representation count at q^{n}"
        );
    }
}

#[test]
fn frozen_leading_coefficients() {
    assert_coeffs(&borwein_a(int(8)), &[1, 6, 0, 6, 6, 0, 0, 12], "borwein_a");
    assert_coeffs(&theta3(int(10)), &[1, 2, 0, 0, 2, 0, 0, 0, 0, 2], "theta3");
    assert_coeffs(&theta4(int(10)), &[1, -2, 0, 0, 2, 0, 0, 0, 0, -2], "theta4");
    assert_coeffs(
        &ram_psi(int(11)),
        &[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        "ram_psi",
    );
    assert_coeffs(&chi(int(8)), &[1, 1, 0, 1, 1, 1, 1, 1], "chi");
    assert_coeffs(&big_g(int(7)), &[1, 1, 1, 1, 2, 2, 3], "G");
    assert_coeffs(&big_h(int(7)), &[1, 0, 1, 1, 1, 1, 2], "H");
    assert_coeffs(&eisenstein_p(int(5)), &[1, -24, -72, -96, -168], "P");
    // All six norm-1 vectors have x != y mod 3, so each carries the twisted
    // weight -1/2.
    assert_eq!(borwein_b(int(4)).coefficient(int(1)).unwrap(), coeff(-3, 1));
    assert_eq!(borwein_b(int(4)).coefficient(int(0)).unwrap(), Coeff::one());
}

#[test]
fn theta2_lives_on_quarter_integers() {
    let s = theta2(int(10));
    assert_eq!(s.valuation(), Some(exp(1, 4)));
    assert_eq!(s.coefficient(exp(1, 4)).unwrap(), coeff(2, 1));
    assert_eq!(s.coefficient(exp(9, 4)).unwrap(), coeff(2, 1));
    assert_eq!(s.coefficient(exp(3, 4)).unwrap(), Coeff::zero());
    assert_same(&psi_k(2, int(12)), &theta2(int(12)), 12, "psi_2");
}

#[test]
fn eta_carries_the_standard_prefactor() {
    let e = eta(int(6));
    assert_eq!(e.valuation(), Some(exp(1, 24)));
    assert_eq!(e.coefficient(exp(25, 24)).unwrap(), coeff(-1, 1));
    let phi = euler_phi(int(6));
    assert_same(&e.shift(exp(-1, 24)), &phi, 5, "eta.phi");
}

#[test]
fn vertex_offset_windows_are_exact() {
    // Completing the square: sum q^(n^2 - 10n + 25) is theta3 again, but the
    // walk must start near n = 5 to see it.
    let shifted = weighted_theta_sum(|_| Coeff::one(), int(1), int(-10), int(25), int(12));
    assert_same(&shifted, &theta3(int(12)), 12, "vertex.shift");
}

#[test]
fn general_theta_degenerate_and_pentagonal_cases() {
    // f(-1, b) vanishes identically.
    let zero = general_theta(-1, int(0), 1, int(1), int(20)).unwrap();
    assert!(zero.is_zero());
    // f(-q, -q^2) is Euler's product.
    let pent = general_theta(-1, int(1), -1, int(2), int(15)).unwrap();
    assert_same(&pent, &euler_phi(int(15)), 15, "pentagonal");
    // A constant-exponent spec has no expansion.
    assert!(matches!(
        general_theta(1, int(0), 1, int(0), int(5)),
        Err(Error::DivergentSpec)
    ));
}

#[test]
fn unary_theta_specializations() {
    assert_same(&kw_f(1, 0, int(12)), &theta3(int(12)), 12, "f.theta3");
    assert_same(&kw_f(1, 1, int(12)), &theta2(int(12)), 12, "f.theta2");
    // Shifting n by 1 re-centers b modulo 2a.
    assert_same(&kw_f(3, 1, int(12)), &kw_f(3, 7, int(12)), 12, "f.recenter");
    assert_same(&ram_phi(int(12)), &theta3(int(12)), 12, "ram_phi");
}

#[test]
fn indefinite_forms_are_rejected() {
    let r = binary_quadratic_sum(
        |_, _| Coeff::one(),
        int(1),
        int(0),
        int(-1),
        int(0),
        int(0),
        int(0),
        int(5),
    );
    assert!(matches!(r, Err(Error::IndefiniteForm)));
    let r = binary_quadratic_sum(
        |_, _| Coeff::one(),
        int(1),
        int(3),
        int(1),
        int(0),
        int(0),
        int(0),
        int(5),
    );
    assert!(matches!(r, Err(Error::IndefiniteForm)));
}

#[test]
fn sum_and_product_presentations_agree() {
    let t = int(40);
    let pairs = [
        (FunctionName::RamPhi, Mode::Sum, Mode::Product),
        (FunctionName::RamPsi, Mode::Sum, Mode::Product),
        (FunctionName::RamF, Mode::Sum, Mode::Product),
        (FunctionName::BigG, Mode::Sum, Mode::Product),
        (FunctionName::BigH, Mode::Sum, Mode::Product),
        (FunctionName::BorweinB, Mode::Sum, Mode::EtaQuotient),
        (FunctionName::BorweinC, Mode::Sum, Mode::EtaQuotient),
    ];
    for (name, m1, m2) in pairs {
        let a = build(&FunctionSpec::new(name).with_mode(m1), t).unwrap();
        let b = build(&FunctionSpec::new(name).with_mode(m2), t).unwrap();
        let report = eq_to_order(&a, &b, t, &format!("{name}.{m1}.{m2}")).unwrap();
        assert!(report.passed, "{}", report.summary_line());
    }
}

#[test]
fn unsupported_modes_are_reported() {
    let r = build(&FunctionSpec::new(FunctionName::Theta2).with_mode(Mode::Product), int(10));
    match r {
        Err(Error::UnsupportedMode(name, mode)) => {
            assert_eq!(name, "theta2");
            assert_eq!(mode, "product");
        }
        other => panic!("expected UnsupportedMode, got {other:?}"),
    }
    assert!(build(&FunctionSpec::new(FunctionName::EulerPhi).with_mode(Mode::Sum), int(10)).is_err());
}

#[test]
fn scale_rewrites_the_variable() {
    let spec = FunctionSpec::new(FunctionName::Theta3).with_scale(int(2));
    let s = build(&spec, int(10)).unwrap();
    assert_eq!(s.order(), int(10));
    assert_same(&s, &theta3(int(5)).substitute(int(2)), 10, "theta3.scaled");
    assert_eq!(s.coefficient(int(2)).unwrap(), coeff(2, 1));
    assert_eq!(s.coefficient(int(1)).unwrap(), Coeff::zero());

    let half = FunctionSpec::new(FunctionName::EulerPhi).with_scale(exp(1, 2));
    let s = build(&half, int(4)).unwrap();
    assert_eq!(s.coefficient(exp(1, 2)).unwrap(), coeff(-1, 1));
}
