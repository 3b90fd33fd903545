//! Oriented knot diagrams as crossing triples over arc labels.
//!
//! A crossing is recorded as `(over, right, left)`: the arc passing over,
//! the under-arc on the right of the over-arc's direction, and the under-arc
//! on its left. Every coloring rule in this crate reads only these three
//! slots.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingTriple {
    pub over: usize,
    pub right: usize,
    pub left: usize,
}

impl CrossingTriple {
    pub const fn new(over: usize, right: usize, left: usize) -> Self {
        CrossingTriple { over, right, left }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    NoCrossings,
    IdOutOfRange {
        crossing: usize,
        id: usize,
        arc_count: usize,
    },
    RightEqualsLeft {
        crossing: usize,
    },
    /// An arc must end exactly twice at undercrossings (once per end).
    UnderSlotCount {
        arc: usize,
        count: usize,
    },
    /// The under-arcs do not close up into a single cycle.
    Disconnected {
        crossing: usize,
    },
    PdLabelOutOfRange {
        crossing: usize,
        label: usize,
        max: usize,
    },
    PdLabelCount {
        label: usize,
        count: usize,
    },
    PdOrientation {
        crossing: usize,
    },
    MultiComponent {
        components: usize,
    },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::NoCrossings => write!(f, "no crossings"),
            DiagramError::IdOutOfRange { crossing, id, arc_count } => write!(
                f,
                "crossing {crossing}: id out of range ({id} not in 0..{arc_count})"
            ),
            DiagramError::RightEqualsLeft { crossing } => {
                write!(f, "crossing {crossing}: right and left under-arcs coincide")
            }
            DiagramError::UnderSlotCount { arc, count } => write!(
                f,
                "arc {arc} occupies {count} under slots, expected exactly 2"
            ),
            DiagramError::Disconnected { crossing } => write!(
                f,
                "crossing {crossing}: diagram is not a single connected knot"
            ),
            DiagramError::PdLabelOutOfRange { crossing, label, max } => {
                write!(f, "crossing {crossing}: edge label {label} not in 1..={max}")
            }
            DiagramError::PdLabelCount { label, count } => {
                write!(f, "edge label {label} appears {count} times, expected 2")
            }
            DiagramError::PdOrientation { crossing } => write!(
                f,
                "crossing {crossing}: inconsistent orientation (labels must increase by 1 along the knot)"
            ),
            DiagramError::MultiComponent { components } => {
                write!(f, "knots only: input has {components} components")
            }
        }
    }
}

impl core::error::Error for DiagramError {}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Checks the structural invariants of a knot diagram with one arc per
/// crossing.
pub fn validate(crossings: &[CrossingTriple]) -> Result<(), DiagramError> {
    let c = crossings.len();
    if c == 0 {
        return Err(DiagramError::NoCrossings);
    }
    for (i, x) in crossings.iter().enumerate() {
        for id in [x.over, x.right, x.left] {
            if id >= c {
                return Err(DiagramError::IdOutOfRange {
                    crossing: i,
                    id,
                    arc_count: c,
                });
            }
        }
        if c > 1 && x.right == x.left {
            return Err(DiagramError::RightEqualsLeft { crossing: i });
        }
    }

    let mut slots = vec![0usize; c];
    for x in crossings {
        slots[x.right] += 1;
        slots[x.left] += 1;
    }
    if let Some((arc, &count)) = slots.iter().enumerate().find(|(_, &n)| n != 2) {
        return Err(DiagramError::UnderSlotCount { arc, count });
    }

    // Each arc has under-degree 2, so one connected component means the
    // arcs chain into a single closed curve.
    let mut parent: Vec<usize> = (0..c).collect();
    for x in crossings {
        union(&mut parent, x.right, x.left);
    }
    let root = find(&mut parent, 0);
    if let Some(i) = crossings
        .iter()
        .position(|x| find(&mut parent, x.right) != root)
    {
        return Err(DiagramError::Disconnected { crossing: i });
    }
    Ok(())
}

/// A validated knot diagram; arc ids are `0..crossing_count()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    crossings: Vec<CrossingTriple>,
}

impl OrientedDiagram {
    pub fn new(crossings: Vec<CrossingTriple>) -> Result<Self, DiagramError> {
        validate(&crossings)?;
        Ok(OrientedDiagram { crossings })
    }

    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Result<Self, DiagramError> {
        OrientedDiagram::new(
            triples
                .iter()
                .map(|&(o, r, l)| CrossingTriple::new(o, r, l))
                .collect(),
        )
    }

    /// Converts an oriented PD code. Each entry lists 1-based edge labels
    /// counterclockwise from the incoming under-edge `a`; along the knot the
    /// labels increase by one modulo `2c`.
    ///
    /// The outgoing under-edge is `c`. When the over-strand runs `d → b`,
    /// the incoming under-edge lies on its right; when it runs `b → d`, on
    /// its left. Arcs are numbered by their smallest edge label.
    pub fn from_pd(pd: &[[usize; 4]]) -> Result<Self, DiagramError> {
        let c = pd.len();
        if c == 0 {
            return Err(DiagramError::NoCrossings);
        }
        let edges = 2 * c;
        let mut count = vec![0usize; edges + 1];
        for (i, x) in pd.iter().enumerate() {
            for &label in x {
                if label == 0 || label > edges {
                    return Err(DiagramError::PdLabelOutOfRange {
                        crossing: i,
                        label,
                        max: edges,
                    });
                }
                count[label] += 1;
            }
        }
        if let Some(label) = (1..=edges).find(|&l| count[l] != 2) {
            return Err(DiagramError::PdLabelCount {
                label,
                count: count[label],
            });
        }

        // components: strands continue straight through every crossing
        let mut parent: Vec<usize> = (0..=edges).collect();
        for &[a, b, cc, d] in pd {
            union(&mut parent, a, cc);
            union(&mut parent, b, d);
        }
        let mut roots: Vec<usize> = (1..=edges).map(|l| find(&mut parent, l)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() > 1 {
            return Err(DiagramError::MultiComponent {
                components: roots.len(),
            });
        }

        let next = |l: usize| l % edges + 1;
        let mut incoming_on_right = Vec::with_capacity(c);
        for (i, &[a, b, cc, d]) in pd.iter().enumerate() {
            if cc != next(a) {
                return Err(DiagramError::PdOrientation { crossing: i });
            }
            if b == next(d) {
                incoming_on_right.push(true);
            } else if d == next(b) {
                incoming_on_right.push(false);
            } else {
                return Err(DiagramError::PdOrientation { crossing: i });
            }
        }

        // arcs: edges joined where they pass over a crossing
        let mut parent: Vec<usize> = (0..=edges).collect();
        for &[_, b, _, d] in pd {
            union(&mut parent, b, d);
        }
        let mut arc_of_root = vec![usize::MAX; edges + 1];
        let mut arcs = 0;
        for label in 1..=edges {
            let root = find(&mut parent, label);
            if arc_of_root[root] == usize::MAX {
                arc_of_root[root] = arcs;
                arcs += 1;
            }
        }
        if arcs != c {
            return Err(DiagramError::Disconnected { crossing: 0 });
        }
        let mut arc = |label: usize| arc_of_root[find(&mut parent, label)];

        let crossings = pd
            .iter()
            .zip(incoming_on_right)
            .map(|(&[a, b, cc, _], in_right)| {
                let (incoming, outgoing) = (arc(a), arc(cc));
                let (right, left) = if in_right {
                    (incoming, outgoing)
                } else {
                    (outgoing, incoming)
                };
                CrossingTriple::new(arc(b), right, left)
            })
            .collect();
        OrientedDiagram::new(crossings)
    }

    pub fn crossings(&self) -> &[CrossingTriple] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.crossings.len()
    }

    /// Swaps right and left everywhere, which yields the mirror image.
    pub fn mirror(&self) -> Self {
        OrientedDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|x| CrossingTriple::new(x.over, x.left, x.right))
                .collect(),
        }
    }

    /// For each arc, the crossings it touches in any slot (deduplicated).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.arc_count()];
        for (i, x) in self.crossings.iter().enumerate() {
            for arc in [x.over, x.right, x.left] {
                if out[arc].last() != Some(&i) {
                    out[arc].push(i);
                }
            }
        }
        out
    }

    /// Arcs in breadth-first order from arc 0, moving between arcs that
    /// share a crossing.
    pub fn bfs_arc_order(&self) -> Vec<usize> {
        let incidence = self.incidence();
        let mut seen = vec![false; self.arc_count()];
        let mut order = Vec::with_capacity(self.arc_count());
        let mut queue = VecDeque::new();
        for start in 0..self.arc_count() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            while let Some(arc) = queue.pop_front() {
                order.push(arc);
                for &i in &incidence[arc] {
                    let x = self.crossings[i];
                    for next in [x.over, x.right, x.left] {
                        if !seen[next] {
                            seen[next] = true;
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        order
    }
}

/// Standard small diagrams used throughout the tests and examples.
pub mod samples {
    use super::OrientedDiagram;

    /// Alternating three-crossing trefoil.
    pub fn trefoil() -> OrientedDiagram {
        OrientedDiagram::from_triples(&[(0, 2, 1), (1, 0, 2), (2, 1, 0)]).unwrap()
    }

    /// The trefoil with an extra kink on arc 0; `positive` picks its sign.
    pub fn trefoil_with_kink(positive: bool) -> OrientedDiagram {
        let kink = if positive { (3, 0, 3) } else { (3, 3, 0) };
        OrientedDiagram::from_triples(&[(0, 2, 1), (1, 3, 2), (2, 1, 0), kink]).unwrap()
    }

    /// One crossing, one arc.
    pub fn unknot_one() -> OrientedDiagram {
        OrientedDiagram::from_triples(&[(0, 0, 0)]).unwrap()
    }

    /// Two kinks in a circle.
    pub fn unknot_two() -> OrientedDiagram {
        OrientedDiagram::from_triples(&[(1, 0, 1), (0, 1, 0)]).unwrap()
    }

    pub const TREFOIL_PD: [[usize; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

    pub const FIGURE_EIGHT_PD: [[usize; 4]; 4] =
        [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

    /// The (3, 5)-torus knot as the closure of `(σ1 σ2)^5`.
    pub const TORUS_3_5_PD: [[usize; 4]; 10] = [
        [1, 15, 2, 14],
        [8, 16, 9, 15],
        [9, 3, 10, 2],
        [16, 4, 17, 3],
        [17, 11, 18, 10],
        [4, 12, 5, 11],
        [5, 19, 6, 18],
        [12, 20, 13, 19],
        [13, 7, 14, 6],
        [20, 8, 1, 7],
    ];

    pub const HOPF_PD: [[usize; 4]; 2] = [[4, 1, 3, 2], [2, 3, 1, 4]];
}
