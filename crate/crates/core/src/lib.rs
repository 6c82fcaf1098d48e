//! Power domination on the triangular grid `T_k` with hexagonal border.
//!
//! The crate builds `T_k` in cubic coordinates, runs the power-domination
//! process (domination step, then forcing rounds) with full traces, produces
//! power-dominating sets of size `ceil(k/3)`, and provides the border and
//! shifting tools used to show no smaller set can work. An exhaustive solver
//! computes exact power domination numbers for small `k`.
//!
//! ```
//! use powerdom::{construction, propagation, TriGrid};
//!
//! let grid = TriGrid::new(7).unwrap();
//! let s = construction::construct_pds(&grid);
//! assert_eq!(s.len(), 3);
//! assert!(propagation::is_power_dominating(&grid, &s).unwrap());
//! ```

pub mod cli;
pub mod construction;
pub mod error;
pub mod experiments;
pub mod grid;
pub mod propagation;
pub mod render;
pub mod set;
pub mod shift;
pub mod solver;
pub mod symmetry;

pub use error::{Error, Result};
pub use grid::{Axis, CubicCoord, TriGrid};
pub use set::VertexSet;
