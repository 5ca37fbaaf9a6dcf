//! Exact Alexander polynomials of plane-curve complements.

pub mod io;
pub mod ring;
pub mod fox;
pub mod group;
pub mod braid;
pub mod linkpoly;
pub mod curve;
pub mod verify;
