#![allow(dead_code)]

use knotcolor::diagram::samples::*;
use knotcolor::twist::twist_diagram;
use knotcolor::OrientedDiagram;

pub fn torus_3_5() -> OrientedDiagram {
    OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap()
}

pub fn figure_eight() -> OrientedDiagram {
    OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap()
}

/// Twist knots with 3..=12 crossings plus the (3,5) torus knot.
pub fn knot_corpus() -> Vec<(String, OrientedDiagram)> {
    let mut out: Vec<(String, OrientedDiagram)> = (3..=12)
        .map(|c| (format!("twist c={c}"), twist_diagram(c).unwrap()))
        .collect();
    out.push(("T(3,5)".into(), torus_3_5()));
    out
}

/// Diagrams with at most six crossings, including non-reduced ones.
pub fn small_diagrams() -> Vec<(String, OrientedDiagram)> {
    let mut out = vec![
        ("unknot 1".to_string(), unknot_one()),
        ("unknot 2".to_string(), unknot_two()),
        ("trefoil".to_string(), trefoil()),
        ("trefoil kink+".to_string(), trefoil_with_kink(true)),
        ("trefoil kink-".to_string(), trefoil_with_kink(false)),
        ("figure-eight pd".to_string(), figure_eight()),
        (
            "trefoil pd".to_string(),
            OrientedDiagram::from_pd(&TREFOIL_PD).unwrap(),
        ),
    ];
    for c in 3..=6 {
        out.push((format!("twist c={c}"), twist_diagram(c).unwrap()));
    }
    out
}

/// Admissible `(ℓ, k)` with both at most `max` for modulus `n`.
pub fn admissible(n: u64, max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for ell in 1..=max {
        for k in 1..=max {
            if knotcolor::arith::gcd(n, ell) == 1 && knotcolor::arith::gcd(n, k) == 1 {
                out.push((ell, k));
            }
        }
    }
    out
}
