//! Command line and HTTP front ends for the `linepush` engine.

pub mod api;
pub mod cli;
pub mod solve;
pub mod store;
