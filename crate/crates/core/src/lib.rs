//! Cramer–Castillon problem on a triangle's incircle and excircles.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains every numeric
//! routine: barycentric plumbing, the Möbius-composition and perspectrix
//! solvers, the golden-ratio closed forms, Brocard geometry of the solution
//! triangles, the inconic transport and a small triangle-center registry.
//! File formats, the CLI and figure output live in the `castillon` crate.
//!
//! ```
//! use castillon_core::{ccp_closed, TriangleData};
//!
//! let t = TriangleData::from_sides(6.0, 9.0, 13.0).unwrap();
//! let (t1, t2) = ccp_closed::incircle_solutions(&t);
//! let k1 = ccp_closed::solution_symmedian(&t1, &t).unwrap();
//! let k2 = ccp_closed::solution_symmedian(&t2, &t).unwrap();
//! // both symmedians sit at the reference's Gergonne point
//! let x7 = ccp_closed::gergonne(&t.sides());
//! assert!(k1.angular_distance(&x7) < 1e-10 && k2.angular_distance(&x7) < 1e-10);
//! ```

#![no_std]

extern crate alloc;

pub mod brocard;
pub mod ccp_closed;
pub mod ccp_general;
pub mod centers;
pub mod conic;
mod error;
pub mod geom;
pub mod inconic;
pub mod linalg;
mod math;
pub mod report;

pub use error::{Error, Result};
pub use geom::{CircleData, CircleTag, HomoBary, LineH, Point, Sides, TriangleData, Vertex};
