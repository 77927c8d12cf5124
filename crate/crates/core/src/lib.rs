//! Colored square/domino tilings of boards and bracelets, the fold/unfold
//! correspondences between them, and exact verification of two families of
//! Fibonacci–Lucas identities.
//!
//! The crate is organized bottom-up:
//!
//! * [`sequences`] computes Fibonacci, Lucas and general C-finite sequences
//!   in exact arithmetic, and builds annihilating recurrences;
//! * [`tiling`] enumerates, counts and classifies `(n, m)`-tilings;
//! * [`bijection`] implements the fold/unfold maps and checks the 1-to-2
//!   correspondence between boards and bracelets;
//! * [`genfun`] is exact rational generating-function arithmetic and the
//!   closed forms for weighted sums;
//! * [`identity`] verifies the identity catalog by direct summation, tiling
//!   enumeration, closed forms and C-finite certificates;
//! * [`cli`] is the command-line front end used by the `fibtile` binary.
//!
//! ```
//! use fibtile::tiling::{count_board, ColorScheme};
//!
//! let scheme = ColorScheme::new(2).unwrap();
//! assert_eq!(count_board(2, scheme), 8.into());
//! ```

pub mod bijection;
pub mod cli;
pub mod error;
pub mod genfun;
pub mod identity;
pub mod sequences;
pub mod tiling;

pub use error::{Error, Result};
