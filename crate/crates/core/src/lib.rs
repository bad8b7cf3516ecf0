//! Invariants of the extended dihedral group acting on k[x0, x1, x2], the
//! Togliatti systems they generate and the Hilbert, syzygy and Betti data
//! of the associated GT-surfaces. All arithmetic is exact.

pub mod betti;
pub mod error;
pub mod exactmath;
pub mod group;
pub mod hilbert;
pub mod invariants;
pub mod monomial;
pub mod par;
pub mod syzygy;
pub mod verify;
pub mod wlp;

pub use error::{GtError, Result};
pub use par::Strategy;
