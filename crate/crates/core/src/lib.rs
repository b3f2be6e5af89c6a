//! Wiener polynomials of trees: exact construction, root analysis,
//! tree families, density searches, and exhaustive censuses.
//!
//! The Wiener polynomial of a connected graph is `W(G;x) = sum d_i x^i`
//! where `d_i` counts unordered vertex pairs at distance `i`. This crate
//! works exclusively with trees: it builds the polynomial exactly from a
//! distance distribution, locates its complex roots numerically with
//! residual certificates, certifies real roots exactly (Sturm chains over
//! the rationals), generates the extremal tree families used throughout,
//! and runs exhaustive censuses over all non-isomorphic trees of a given
//! order.

pub mod census;
pub mod density;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod families;
pub mod io;
pub mod poly;
pub mod roots;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use poly::WienerPoly;
pub use tree::{DistanceDistribution, Tree, WeightedCaterpillar};
