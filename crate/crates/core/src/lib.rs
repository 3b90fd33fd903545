//! Quandle and linear colorings of knot diagrams.
//!
//! Diagrams are lists of crossings `(over, right, left)` over arc ids. The
//! crate computes Alexander polynomials, counts `(Z_n, ℓ*k)`-colorings via
//! the Smith normal form, colors by arbitrary finite quandles, and
//! classifies twist knots by minimal quandle order.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alexander;
pub mod arith;
pub mod catalog;
pub mod diagram;
pub mod linear;
pub mod poly;
pub mod quandle;
pub mod search;
pub mod smith;
pub mod twist;

pub use alexander::{alexander_polynomial, eval_mod, AlexanderError};
pub use catalog::{catalog_indecomposable, CatalogId};
pub use diagram::{CrossingTriple, DiagramError, OrientedDiagram};
pub use linear::{colorable_by_alexander, coloring_count, is_colorable, ColoringSystem};
pub use poly::LaurentPoly;
pub use quandle::{make_linear_quandle, FiniteQuandle, LinearQuandleParams, QuandleError};
pub use search::{
    is_linear_n_colorable, is_quandle_colorable, minimal_linear_order, minimal_quandle_order,
    quandle_coloring_count, QuandleOrder, SearchError,
};
pub use twist::{TwistError, TwistKnot};
