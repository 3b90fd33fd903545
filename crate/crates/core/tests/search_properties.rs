mod common;

use std::ops::ControlFlow;

use common::*;
use knotcolor::catalog::QS6_TO_Z3;
use knotcolor::linear::{coloring_count, ColoringSystem};
use knotcolor::search::{
    brute_force_quandle_count, colorability_bound, find_nonconstant_coloring,
    for_each_quandle_coloring, is_linear_n_colorable, minimal_linear_order, quandle_coloring_count,
    SearchLimits,
};
use knotcolor::twist::twist_diagram;
use knotcolor::{
    alexander_polynomial, is_quandle_colorable, make_linear_quandle, minimal_quandle_order,
    CatalogId, LinearQuandleParams, QuandleOrder,
};
use num_bigint::BigUint;

#[test]
fn polynomial_verdict_matches_matrix_search() {
    for (name, d) in knot_corpus() {
        let delta = alexander_polynomial(&d).unwrap();
        let systems: Vec<_> = admissible(1, 40)
            .into_iter()
            .map(|(ell, k)| ColoringSystem::new(&d, ell, k))
            .collect();
        for n in 2..=40u64 {
            let verdict = is_linear_n_colorable(&delta, n);
            let any = systems.iter().any(|s| {
                s.ell() < n
                    && s.k() < n
                    && LinearQuandleParams::new(n, s.ell(), s.k()).is_ok()
                    && s.is_colorable(n)
            });
            assert_eq!(verdict.colorable, any, "{name} n={n}");
            if let Some(w) = verdict.witness {
                assert_eq!(n % w.p, 0);
                assert_eq!(knotcolor::eval_mod(&delta, -(w.k as i64), w.p), 0);
            }
        }
    }
}

#[test]
fn bounds_hold_and_dominate_the_minimum() {
    for (name, d) in knot_corpus() {
        let delta = alexander_polynomial(&d).unwrap();
        let bound = colorability_bound(&delta).unwrap();
        assert!(bound.invariants_hold(), "{name}");
        let found = minimal_linear_order(&delta).unwrap();
        assert!(
            BigUint::from(found.n) <= bound.n_bound.magnitude().clone(),
            "{name}"
        );
        for n in 3..found.n {
            assert!(!is_linear_n_colorable(&delta, n).colorable, "{name} n={n}");
        }
    }
}

#[test]
fn backtracking_matches_snf_on_linear_quandles() {
    for (name, d) in small_diagrams().into_iter().chain(knot_corpus()) {
        for n in 2..=7u64 {
            for (ell, k) in admissible(n, n - 1) {
                let p = LinearQuandleParams::new(n, ell, k).unwrap();
                let q = make_linear_quandle(&p);
                assert_eq!(
                    quandle_coloring_count(&d, &q).unwrap(),
                    coloring_count(&d, &p),
                    "{name} {}",
                    p.label()
                );
            }
        }
    }
}

#[test]
fn backtracking_matches_exhaustive_on_catalog() {
    for (name, d) in small_diagrams() {
        for id in CatalogId::ALL {
            let q = id.quandle();
            assert_eq!(
                quandle_coloring_count(&d, &q).unwrap(),
                BigUint::from(brute_force_quandle_count(&d, &q)),
                "{name} {id}"
            );
        }
    }
}

#[test]
fn order_six_colorings_project_to_three_colorings() {
    let z3 = CatalogId::Z3_1x1.quandle();
    for c in 3..=40 {
        let d = twist_diagram(c).unwrap();
        for id in [CatalogId::QS6, CatalogId::QS6p] {
            let Some(psi) =
                find_nonconstant_coloring(&d, &id.quandle(), SearchLimits::default()).unwrap()
            else {
                continue;
            };
            assert!(is_quandle_colorable(&d, &z3).unwrap(), "c={c} {id}");
            let projected: Vec<usize> = psi.iter().map(|&a| QS6_TO_Z3[a]).collect();
            assert!(d
                .crossings()
                .iter()
                .all(|x| z3.op(projected[x.right], projected[x.over]) == projected[x.left]));
            assert!(
                projected.windows(2).any(|w| w[0] != w[1]),
                "c={c} {id}: projection is constant"
            );
        }
    }
}

#[test]
fn every_qs6_coloring_projects() {
    let z3 = CatalogId::Z3_1x1.quandle();
    let d = twist_diagram(6).unwrap();
    let mut seen = 0;
    for_each_quandle_coloring(
        &d,
        &CatalogId::QS6.quandle(),
        SearchLimits::default(),
        |psi| {
            let projected: Vec<usize> = psi.iter().map(|&a| QS6_TO_Z3[a]).collect();
            assert!(d
                .crossings()
                .iter()
                .all(|x| z3.op(projected[x.right], projected[x.over]) == projected[x.left]));
            seen += 1;
            ControlFlow::Continue(())
        },
    )
    .unwrap();
    assert!(seen > 6);
}

#[test]
fn minimal_order_is_never_six() {
    for (name, d) in knot_corpus() {
        let q = minimal_quandle_order(&d).unwrap();
        assert_ne!(q.order(), Some(6), "{name}");
    }
    // no roots of Δ mod 3, 5 or 7, and Δ is coprime to t² + t + 1 over F_2
    assert_eq!(
        minimal_quandle_order(&torus_3_5()).unwrap(),
        QuandleOrder::AtLeastEight
    );
}
