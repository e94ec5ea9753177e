//! Core arithmetic checked against independent combinatorial oracles and
//! frozen small cases.

use num_traits::{One, Zero};
use qseries::functions::{chi, euler_phi, theta2, theta3};
use qseries::series::{coeff, eq_to_order, exp, Coeff, Exp, PuiseuxSeries};
use qseries::Error;

fn int(n: i64) -> Exp {
    Exp::from_integer(n)
}

/// Partition counts by dynamic programming over allowed part sizes; shares
/// nothing with the Euler-product inversion it checks.
fn partition_oracle(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p
}

/// Representations of `n` as an ordered pair of squares, by brute scan.
fn two_squares_oracle(n: i64) -> i64 {
    let mut count = 0;
    for a in -n..=n {
        for b in -n..=n {
            if a * a + b * b == n {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn euler_product_inverse_counts_partitions() {
    let series = euler_phi(int(31)).invert().unwrap();
    let oracle = partition_oracle(30);
    for (n, expected) in oracle.iter().enumerate() {
        assert_eq!(
            series.coefficient(int(n as i64)).unwrap(),
            Coeff::from_integer((*expected).into()),
            "partition count at q^{n}"
        );
    }
}

#[test]
fn theta3_square_counts_two_square_representations() {
    let sq = theta3(int(21)).pow(2);
    for n in 0..21 {
        assert_eq!(
            sq.coefficient(int(n)).unwrap(),
            Coeff::from_integer(two_squares_oracle(n).into()),
            "representation count at q^{n}"
        );
    }
}

#[test]
fn theta3_square_leading_terms() {
    let sq = theta3(int(5)).pow(2);
    let expect = [1, 4, 4, 0, 4];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(
            sq.coefficient(int(n as i64)).unwrap(),
            Coeff::from_integer((*e).into())
        );
    }
}

#[test]
fn coefficient_respects_truncation_order() {
    let s = theta3(int(10));
    assert_eq!(s.coefficient(int(4)).unwrap(), coeff(2, 1));
    assert_eq!(s.coefficient(int(3)).unwrap(), Coeff::zero());
    assert_eq!(s.coefficient(exp(1, 2)).unwrap(), Coeff::zero());
    match s.coefficient(int(10)) {
        Err(Error::InsufficientOrder {
            requested,
            available,
        }) => {
            assert_eq!(requested, int(10));
            assert_eq!(available, int(10));
        }
        other => panic!("expected InsufficientOrder, got {other:?}"),
    }
}

#[test]
fn substitution_scales_exponents_and_order() {
    let s = theta2(int(8)).substitute(exp(1, 2));
    assert_eq!(s.order(), int(4));
    assert_eq!(s.valuation(), Some(exp(1, 8)));
    assert_eq!(s.coefficient(exp(1, 8)).unwrap(), coeff(2, 1));
}

#[test]
fn inversion_handles_negative_valuation() {
    // 1 / (q + q^2) = q^-1 - 1 + q - q^2 + ...
    let s = PuiseuxSeries::from_exp_terms([(int(1), Coeff::one()), (int(2), Coeff::one())], int(10));
    let inv = s.invert().unwrap();
    assert_eq!(inv.order(), int(8));
    assert_eq!(inv.valuation(), Some(int(-1)));
    for (e, expected) in [(-1, 1), (0, -1), (1, 1), (2, -1), (3, 1)] {
        assert_eq!(
            inv.coefficient(int(e)).unwrap(),
            Coeff::from_integer(expected.into()),
            "inverse coefficient at q^{e}"
        );
    }
    let product = s.mul(&inv);
    assert!(eq_to_order(&product, &PuiseuxSeries::one(int(8)), int(8), "recip")
        .unwrap()
        .passed);
}

#[test]
fn inversion_requires_a_leading_term() {
    assert!(matches!(
        PuiseuxSeries::zero(int(5)).invert(),
        Err(Error::ZeroLeadingTerm)
    ));
}

#[test]
fn argument_negation_follows_the_real_branch() {
    // Integer exponents flip sign on odd powers.
    let c = chi(int(8));
    let cn = c.negate_argument().unwrap();
    assert_eq!(cn.coefficient(int(1)).unwrap(), coeff(-1, 1));
    assert_eq!(cn.coefficient(int(4)).unwrap(), coeff(1, 1));

    // Odd denominators follow the real cube-root branch.
    let m = PuiseuxSeries::monomial(Coeff::one(), exp(1, 3), int(2));
    assert_eq!(
        m.negate_argument().unwrap().coefficient(exp(1, 3)).unwrap(),
        coeff(-1, 1)
    );
    let even = PuiseuxSeries::monomial(Coeff::one(), exp(7, 3), int(4));
    assert_eq!(
        even.negate_argument()
            .unwrap()
            .coefficient(exp(7, 3))
            .unwrap(),
        coeff(-1, 1)
    );

    // Even denominators have no real branch.
    assert!(matches!(
        theta2(int(4)).negate_argument(),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn comparison_reports_first_divergence() {
    let a = theta3(int(10));
    let b = a.add(&PuiseuxSeries::monomial(coeff(3, 1), int(5), int(10)));
    let report = eq_to_order(&a, &b, int(10), "probe").unwrap();
    assert!(!report.passed);
    let d = report.first_divergence.as_ref().expect("must locate the divergence");
    assert_eq!(d.exponent, int(5));
    assert_eq!(d.lhs, Coeff::zero());
    assert_eq!(d.rhs, coeff(3, 1));
    assert!(report.summary_line().starts_with("FAIL probe (order 10)"));

    let same = eq_to_order(&a, &a, int(10), "refl").unwrap();
    assert!(same.passed);
    assert_eq!(same.summary_line(), "PASS refl (order 10)");
}

#[test]
fn comparison_rejects_unknown_orders() {
    let a = theta3(int(10));
    let b = theta3(int(6));
    assert!(matches!(
        eq_to_order(&a, &b, int(8), "short"),
        Err(Error::InsufficientOrder { .. })
    ));
}

#[test]
fn product_order_tracks_valuations() {
    // Multiplying by q^3 * (...) extends how far the product is known.
    let a = theta3(int(10));
    let b = theta3(int(10)).shift(int(3));
    assert_eq!(a.mul(&b).order(), int(13));

    // Multiplying two truncations of different orders keeps the weaker one.
    let c = theta3(int(6));
    assert_eq!(a.mul(&c).order(), int(6));

    // A zero factor pins the order to its own uncertainty.
    let z = PuiseuxSeries::zero(int(7));
    assert_eq!(a.mul(&z).order(), int(7));
    assert!(a.mul(&z).is_zero());
}

#[test]
fn truncation_drops_terms_and_order() {
    let s = theta3(int(10)).truncate(int(4));
    assert_eq!(s.order(), int(4));
    assert!(s.coefficient(int(4)).is_err());
    assert_eq!(s.coefficient(int(1)).unwrap(), coeff(2, 1));
    // Truncating cannot extend knowledge.
    assert_eq!(theta3(int(4)).truncate(int(9)).order(), int(4));
}

#[test]
fn shift_moves_the_whole_series() {
    let s = theta3(int(5)).shift(exp(-1, 3));
    assert_eq!(s.valuation(), Some(exp(-1, 3)));
    assert_eq!(s.order(), int(5) + exp(-1, 3));
    assert_eq!(s.coefficient(exp(2, 3)).unwrap(), coeff(2, 1));
}

#[test]
fn display_formats_fractional_exponents() {
    let s = PuiseuxSeries::from_exp_terms(
        [(exp(5, 2), coeff(3, 1)), (int(0), coeff(-1, 2))],
        int(4),
    );
    let text = s.to_string();
    assert_eq!(text, "-1/2 + 3*q^(5/2) + O(q^(4))");
    assert_eq!(PuiseuxSeries::zero(int(2)).to_string(), "0 + O(q^(2))");
}

#[test]
fn repeated_exponents_accumulate() {
    let s = PuiseuxSeries::from_exp_terms(
        [
            (int(1), coeff(2, 1)),
            (int(1), coeff(-2, 1)),
            (int(2), coeff(1, 1)),
        ],
        int(5),
    );
    assert_eq!(s.coefficient(int(1)).unwrap(), Coeff::zero());
    assert_eq!(s.coefficient(int(2)).unwrap(), Coeff::one());
    // Cancelled terms are not stored.
    assert_eq!(s.terms().count(), 1);
}
