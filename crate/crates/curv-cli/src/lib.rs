//! Support library for the `curv` binary: the JSON input format.

pub mod input;
