//! Rendering, sequence and verification plumbing behind the `rhofield`
//! binary, exposed as a library so the integration suites can drive the
//! exact same code paths.

pub mod render;
pub mod seq;
pub mod verify;
