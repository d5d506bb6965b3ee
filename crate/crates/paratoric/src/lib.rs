//! Exact combinatorics of parabolic ruled surfaces: Hirzebruch-Jung
//! continued fractions, cyclic quotient singularities and their toric
//! resolutions, iterated blow-up chains, parabolic slope computations, and
//! symbolic Kähler class solving on curve configurations.

pub mod chains;
pub mod exact;
pub mod hjcf;
pub mod json;
pub mod kahler;
pub mod surface;
pub mod toric;

pub mod cli;
