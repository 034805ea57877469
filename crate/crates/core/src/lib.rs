//! Tokens on a square grid that move only by global pushes.
//!
//! A push in direction `d` makes every token fall one cell toward `d` inside
//! the bounding box, if the cell it would fall into is free.

pub mod compact;
pub mod compaction;
pub mod error;
pub mod grid;
pub mod oracles;
pub mod perm;
pub mod puzzle;

pub use compact::{canonical_form, canonicalize, compatible, invert_push, invert_sequence, is_compact, is_canonical, CanonicalShape};
pub use error::{Error, Result};
pub use grid::{Configuration, Direction, PushSequence, TokenId};
