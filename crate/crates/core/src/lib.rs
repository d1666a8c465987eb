//! Finite-model laboratory for selection games on finite topological spaces.
//!
//! The crate represents finite spaces ([`topology`]), enumerates their
//! cover families ([`covers`]), solves bounded-horizon selection games such
//! as the Rothberger, mildly Rothberger, point-open, point-clopen and
//! quasi-component-clopen games ([`game`]), and machine-checks strategy
//! translations and dualities between them ([`lab`]).
//!
//! ```
//! use topogame::game::{make_mildly_rothberger, solve, Caps, Player};
//! use topogame::topology::FiniteSpace;
//!
//! let space = FiniteSpace::discrete(2);
//! let game = make_mildly_rothberger(&space, 2, &Caps::default()).unwrap();
//! assert_eq!(solve(&game).unwrap().winner, Player::Bob);
//! ```

pub mod covers;
pub mod error;
pub mod game;
pub mod lab;
pub mod pointset;
pub mod session;
pub mod topology;

pub use error::{Error, Result};
pub use pointset::PointSet;
pub use topology::FiniteSpace;
