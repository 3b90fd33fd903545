mod common;

use common::*;
use knotcolor::alexander::{
    alexander_from_minor, determinant, determinant_cofactor, eval_mod, relation_matrix_t,
    AlexanderShape,
};
use knotcolor::linear::relation_matrix;
use knotcolor::{alexander_polynomial, LaurentPoly, LinearQuandleParams};

#[test]
fn every_polynomial_has_knot_shape() {
    for (name, d) in knot_corpus().into_iter().chain(small_diagrams()) {
        let p = alexander_polynomial(&d).unwrap();
        assert!(AlexanderShape::of(&p).all(), "{name}: {p}");
        for m in 2..30 {
            assert_eq!(eval_mod(&p, 1, m), 1 % m);
        }
    }
}

#[test]
fn palindromic_identity() {
    for (name, d) in knot_corpus() {
        let p = alexander_polynomial(&d).unwrap();
        let d_deg = p.high_degree();
        let mirrored = p.reflect().shift(d_deg);
        assert_eq!(mirrored, p, "{name}");
    }
}

#[test]
fn all_minors_agree() {
    for (name, d) in small_diagrams() {
        let c = d.crossing_count();
        let expected = alexander_polynomial(&d).unwrap();
        for row in 0..c {
            for col in 0..c {
                assert_eq!(
                    alexander_from_minor(&d, row, col).unwrap(),
                    expected,
                    "{name} ({row},{col})"
                );
            }
        }
    }
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    for (name, d) in knot_corpus().into_iter().chain(small_diagrams()) {
        if d.crossing_count() > 8 {
            continue;
        }
        let m = relation_matrix_t(&d);
        let c = m.size();
        let minor = m.minor(c - 1, c - 1);
        assert_eq!(determinant(&minor), determinant_cofactor(&minor), "{name}");
        assert!(determinant(&m).is_zero(), "{name}");
    }
}

#[test]
fn substitution_gives_linear_relation_matrix() {
    for (name, d) in knot_corpus() {
        let m = relation_matrix_t(&d);
        for n in [3u64, 5, 7, 9, 11, 31] {
            for k in 1..n {
                let Ok(p) = LinearQuandleParams::new(n, 1, k) else {
                    continue;
                };
                let linear = relation_matrix(&d, &p).reduced_mod(n);
                assert_eq!(m.eval_mod(-(k as i64), n), linear, "{name} n={n} k={k}");
            }
        }
    }
}

#[test]
fn mirror_reflects_polynomial() {
    for (name, d) in knot_corpus() {
        let p = alexander_polynomial(&d).unwrap();
        let q = alexander_polynomial(&d.mirror()).unwrap();
        assert_eq!(p, q, "{name}");
    }
}

#[test]
fn torus_knot_values() {
    let p = alexander_polynomial(&torus_3_5()).unwrap();
    assert_eq!(p, LaurentPoly::from_coeffs(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    assert_eq!(eval_mod(&p, -21, 31), 0);
    assert_eq!(eval_mod(&p, -3, 31), 0);
}
