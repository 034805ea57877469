//! Brute-force checks of the theory: labeled empty cells, the dual puzzle,
//! and groups enumerated state by state.

mod dual;
mod enumerate;
mod extended;

pub use dual::{dual_config, dual_pull, DualBoard};
pub use enumerate::{enumerate_group, group_report, is_two_transitive, GroupEnumeration, GroupReport};
pub use extended::{closed_sequence_parity, ClosedParity, ExtendedBoard, Mark};
