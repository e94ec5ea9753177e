//! Exact linear-algebra facts about the root systems and the two-stage
//! foldings, plus frozen basis data.

use qseries::roots::{algebra, folding, mstar_gram, verify_root_systems};
use qseries::series::{exp, Exp};
use qseries::Error;

fn int(n: i64) -> Exp {
    Exp::from_integer(n)
}

#[test]
fn full_root_system_suite_passes() {
    let reports = verify_root_systems().unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.passed, "{}", r.summary_line());
    }
}

#[test]
fn frozen_cartan_and_form_entries() {
    let f4 = algebra("F4").unwrap();
    assert_eq!(f4.cartan[2], vec![0, -2, 2, -1]);
    // The short-root block of the form.
    assert_eq!(f4.inner[2][2], int(1));
    assert_eq!(f4.inner[2][3], exp(-1, 2));

    let g2 = algebra("G2").unwrap();
    assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
    assert_eq!(g2.inner[0], vec![int(2), int(-1)]);
    assert_eq!(g2.inner[1], vec![int(-1), exp(2, 3)]);

    let e8 = algebra("E8").unwrap();
    assert_eq!(
        e8.weights[7],
        [2, 4, 6, 8, 10, 5, 7, 4].map(int).to_vec()
    );
    assert!(algebra("B3").is_err());
}

#[test]
fn norms_and_pairings() {
    let f4 = algebra("F4").unwrap();
    let b3 = f4.simple_root(3);
    assert_eq!(f4.inner(&b3, &b3).unwrap(), int(1));
    let g2 = algebra("G2").unwrap();
    let z2 = g2.simple_root(2);
    assert_eq!(g2.inner(&z2, &z2).unwrap(), exp(2, 3));
    // Weights are dual to coroots: <w_i, a_j^v> = delta_ij.
    for name in ["E8", "E6", "F4", "D4", "G2"] {
        let alg = algebra(name).unwrap();
        for i in 1..=alg.rank() {
            for j in 1..=alg.rank() {
                let expected = int((i == j) as i64);
                assert_eq!(
                    alg.pairing(&alg.weight(i), j).unwrap(),
                    expected,
                    "{name} weight {i} against coroot {j}"
                );
            }
        }
    }
    let e8 = algebra("E8").unwrap();
    assert_eq!(
        e8.inner(&e8.weight(1), &e8.simple_root(1)).unwrap(),
        int(1)
    );
}

#[test]
fn cross_algebra_vectors_are_rejected() {
    let e8 = algebra("E8").unwrap();
    let f4 = algebra("F4").unwrap();
    let r = e8.inner(&e8.simple_root(1), &f4.simple_root(1));
    assert!(matches!(r, Err(Error::AlgebraMismatch(_, _))));
}

#[test]
fn reflections_are_involutions() {
    let f4 = algebra("F4").unwrap();
    let v = f4.weight(4);
    for i in 1..=4 {
        let twice = f4.reflect(i, &f4.reflect(i, &v).unwrap()).unwrap();
        assert_eq!(twice, v);
    }
    assert_eq!(f4.apply_word(&[], &v).unwrap(), v);
    // A word acts right-to-left: w = s1 s2 applied to v is s1(s2(v)).
    let via_word = f4.apply_word(&[1, 2], &v).unwrap();
    let by_hand = f4.reflect(1, &f4.reflect(2, &v).unwrap()).unwrap();
    assert_eq!(via_word, by_hand);
}

#[test]
fn first_projection_annihilates_the_affine_node() {
    let p1 = folding("p1").unwrap();
    let e8 = algebra("E8").unwrap();
    let image = p1.projection.apply(&e8.simple_root(1)).unwrap();
    assert!(image.coords.iter().all(|c| *c == int(0)));
    // e1 is orthogonal to the fixed subspace, so it has no preimage there.
    assert!(matches!(
        p1.iso.apply(&e8.simple_root(1)),
        Err(Error::NotInImage)
    ));
}

#[test]
fn second_projection_splits_half_integrally() {
    let p2 = folding("p2").unwrap();
    let e8 = algebra("E8").unwrap();
    let image = p2.projection.apply(&e8.simple_root(3)).unwrap();
    let expected = vec![
        int(0),
        int(0),
        int(1),
        int(1),
        int(1),
        exp(1, 2),
        exp(1, 2),
        int(0),
    ];
    assert_eq!(image.coords, expected);
    assert_eq!(p2.image_rank, 4);
    assert_eq!(p2.kernel.len(), 4);
}

#[test]
fn diagram_foldings_average_the_orbits() {
    let t = folding("t").unwrap();
    let e6 = algebra("E6").unwrap();
    let image = t.projection.apply(&e6.simple_root(1)).unwrap();
    let mut expected = vec![int(0); 6];
    expected[0] = exp(1, 2);
    expected[5] = exp(1, 2);
    assert_eq!(image.coords, expected);

    let s = folding("s").unwrap();
    let d4 = algebra("D4").unwrap();
    let center = d4.simple_root(2);
    assert_eq!(s.projection.apply(&center).unwrap(), center);
    let folded = s.iso.apply(&center).unwrap();
    assert_eq!(folded.algebra, "G2");
    assert_eq!(folded.coords, vec![int(1), int(0)]);
}

#[test]
fn restricted_gram_matrices() {
    let f4 = mstar_gram("F4").unwrap();
    let expected = [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ];
    for (row, want) in f4.iter().zip(expected.iter()) {
        assert_eq!(row, &want.map(int).to_vec());
    }
    let g2 = mstar_gram("G2").unwrap();
    assert_eq!(g2[0], vec![int(1), exp(-1, 2)]);
    assert_eq!(g2[1], vec![exp(-1, 2), int(1)]);
}
