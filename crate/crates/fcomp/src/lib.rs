//! Workbench for zero-error distributed compression of vector-linear
//! functions over finite fields.
//!
//! An instance (s, m, Omega, T) has s sources, m encoders, a connectivity
//! state Omega saying which encoders each source reaches, and an s x r
//! target matrix T over GF(q); the decoder must recover x_S * T with zero
//! error from the encoder outputs. The crate models instances, computes
//! exact rational cut lower bounds and closed-form capacities, verifies
//! admissibility and rates of explicit k-shot codes, and exhaustively
//! searches for codes on small instances.
//!
//! See the runnable examples for each capability, and `SCHEMA.md` at the
//! repository root for the JSON formats spoken by the `fcomp` binary.

pub mod bounds;
pub mod capacity;
pub mod codes;
pub mod ffield;
pub mod json;
pub mod model;
pub mod network;
pub mod search;
