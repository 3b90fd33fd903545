//! Quandle colorings by depth-first search with forced-value propagation.
//!
//! Arcs are branched on in breadth-first order. Whenever a crossing has its
//! right and over arcs colored the left arc is forced (`l = r * o`), and
//! with left and over colored the right arc is forced (`r = l / o`). A
//! crossing whose three arcs are colored is checked directly.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigUint;

use super::{SearchError, SearchLimits};
use crate::diagram::OrientedDiagram;
use crate::quandle::FiniteQuandle;

const UNSET: usize = usize::MAX;

struct Engine<'a> {
    q: usize,
    table: Vec<usize>,
    div: Vec<usize>,
    diagram: &'a OrientedDiagram,
    incidence: Vec<Vec<usize>>,
    order: Vec<usize>,
    colors: Vec<usize>,
    trail: Vec<usize>,
    pending: Vec<(usize, usize)>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Engine<'a> {
    fn new(d: &'a OrientedDiagram, quandle: &FiniteQuandle, limits: SearchLimits) -> Self {
        let q = quandle.order();
        let table = (0..q * q).map(|i| quandle.op(i / q, i % q)).collect();
        Engine {
            q,
            table,
            div: quandle.division_table(),
            diagram: d,
            incidence: d.incidence(),
            order: d.bfs_arc_order(),
            colors: vec![UNSET; d.arc_count()],
            trail: Vec::with_capacity(d.arc_count()),
            pending: Vec::new(),
            nodes: 0,
            max_nodes: limits.max_nodes,
        }
    }

    /// Colors `arc` and everything it forces; `false` on a contradiction.
    /// The caller undoes via the trail either way.
    fn assign(&mut self, arc: usize, value: usize) -> bool {
        self.pending.clear();
        self.pending.push((arc, value));
        while let Some((a, v)) = self.pending.pop() {
            let current = self.colors[a];
            if current != UNSET {
                if current != v {
                    return false;
                }
                continue;
            }
            self.colors[a] = v;
            self.trail.push(a);
            for &i in &self.incidence[a] {
                let x = self.diagram.crossings()[i];
                let (o, r, l) = (
                    self.colors[x.over],
                    self.colors[x.right],
                    self.colors[x.left],
                );
                match (o != UNSET, r != UNSET, l != UNSET) {
                    (true, true, true) => {
                        if self.table[r * self.q + o] != l {
                            return false;
                        }
                    }
                    (true, true, false) => self.pending.push((x.left, self.table[r * self.q + o])),
                    (true, false, true) => self.pending.push((x.right, self.div[l * self.q + o])),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.colors[a] = UNSET;
        }
    }

    fn dfs<F>(&mut self, pos: usize, visit: &mut F) -> Result<ControlFlow<()>, SearchError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(next) = (pos..self.order.len()).find(|&i| self.colors[self.order[i]] == UNSET)
        else {
            return Ok(visit(&self.colors));
        };
        let arc = self.order[next];
        for v in 0..self.q {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(SearchError::ScaleCapExceeded {
                    max_nodes: self.max_nodes,
                });
            }
            let mark = self.trail.len();
            if self.assign(arc, v) {
                if let ControlFlow::Break(()) = self.dfs(next + 1, visit)? {
                    self.undo(mark);
                    return Ok(ControlFlow::Break(()));
                }
            }
            self.undo(mark);
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Calls `visit` on every coloring until it breaks. Colorings arrive in
/// lexicographic order of the breadth-first arc sequence.
pub fn for_each_quandle_coloring<F>(
    d: &OrientedDiagram,
    quandle: &FiniteQuandle,
    limits: SearchLimits,
    mut visit: F,
) -> Result<(), SearchError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut engine = Engine::new(d, quandle, limits);
    engine.dfs(0, &mut visit).map(|_| ())
}

pub fn quandle_coloring_count_with(
    d: &OrientedDiagram,
    quandle: &FiniteQuandle,
    limits: SearchLimits,
) -> Result<BigUint, SearchError> {
    let mut count = 0u64;
    for_each_quandle_coloring(d, quandle, limits, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}

/// Number of maps from arcs to `Q` with `ψ(right) * ψ(over) = ψ(left)` at
/// every crossing, under the default node budget.
pub fn quandle_coloring_count(
    d: &OrientedDiagram,
    quandle: &FiniteQuandle,
) -> Result<BigUint, SearchError> {
    quandle_coloring_count_with(d, quandle, SearchLimits::default())
}

/// The first non-constant coloring, if any.
pub fn find_nonconstant_coloring(
    d: &OrientedDiagram,
    quandle: &FiniteQuandle,
    limits: SearchLimits,
) -> Result<Option<Vec<usize>>, SearchError> {
    let mut found = None;
    for_each_quandle_coloring(d, quandle, limits, |colors| {
        if colors.windows(2).any(|w| w[0] != w[1]) {
            found = Some(colors.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Colorable means more colorings than the `|Q|` constant ones; since
/// every constant map is a coloring this is the same as finding a
/// non-constant one, which lets the search stop early.
pub fn is_quandle_colorable(
    d: &OrientedDiagram,
    quandle: &FiniteQuandle,
) -> Result<bool, SearchError> {
    Ok(find_nonconstant_coloring(d, quandle, SearchLimits::default())?.is_some())
}

/// Exhaustive count over all `|Q|^arcs` maps.
pub fn brute_force_quandle_count(d: &OrientedDiagram, quandle: &FiniteQuandle) -> u64 {
    let q = quandle.order();
    let arcs = d.arc_count();
    let mut psi = vec![0usize; arcs];
    let mut count = 0;
    loop {
        if d.crossings()
            .iter()
            .all(|x| quandle.op(psi[x.right], psi[x.over]) == psi[x.left])
        {
            count += 1;
        }
        let mut i = arcs;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            psi[i] += 1;
            if psi[i] < q {
                break;
            }
            psi[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogId;
    use crate::diagram::samples::*;

    #[test]
    fn trefoil_z3() {
        let z3 = CatalogId::Z3_1x1.quandle();
        assert_eq!(
            quandle_coloring_count(&trefoil(), &z3).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(brute_force_quandle_count(&trefoil(), &z3), 9);
        assert!(is_quandle_colorable(&trefoil(), &z3).unwrap());
    }

    #[test]
    fn constants_always_color() {
        for id in CatalogId::ALL {
            let q = id.quandle();
            for d in [unknot_one(), unknot_two()] {
                assert_eq!(
                    quandle_coloring_count(&d, &q).unwrap(),
                    BigUint::from(q.order())
                );
                assert!(!is_quandle_colorable(&d, &q).unwrap());
            }
        }
    }

    #[test]
    fn figure_eight_s4() {
        let d = OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap();
        let s4 = CatalogId::S4.quandle();
        let count = quandle_coloring_count(&d, &s4).unwrap();
        assert!(count > BigUint::from(4u32));
        assert_eq!(count, BigUint::from(brute_force_quandle_count(&d, &s4)));
    }

    #[test]
    fn engine_matches_exhaustive() {
        let diagrams = [
            trefoil(),
            trefoil_with_kink(true),
            trefoil_with_kink(false),
            OrientedDiagram::from_pd(&FIGURE_EIGHT_PD).unwrap(),
        ];
        for d in &diagrams {
            for id in CatalogId::ALL {
                let q = id.quandle();
                assert_eq!(
                    quandle_coloring_count(d, &q).unwrap(),
                    BigUint::from(brute_force_quandle_count(d, &q)),
                    "{id}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let q = CatalogId::Z7_1x1.quandle();
        let d = OrientedDiagram::from_pd(&TORUS_3_5_PD).unwrap();
        let err = quandle_coloring_count_with(&d, &q, SearchLimits { max_nodes: 3 }).unwrap_err();
        assert_eq!(err, SearchError::ScaleCapExceeded { max_nodes: 3 });
    }
}
