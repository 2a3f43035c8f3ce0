//! Qubit-qutrit density matrices under local phase damping.
//!
//! The crate evolves a 2 (x) 3 state family through operator-sum dephasing
//! channels, measures entanglement by the negativity of the partial
//! transpose, and locates the finite time at which entanglement disappears
//! even though coherence decays only asymptotically.
//!
//! Module map:
//! - [`linalg`]: dense complex matrices, Kronecker products, partial trace and
//!   transpose, Hermitian eigenvalues.
//! - [`states`]: validated density matrices and the incoherent-subsystem family.
//! - [`channels`]: Kraus channels and the qubit / qutrit dephasing operators.
//! - [`entanglement`]: negativity and the PPT test.
//! - [`esd`]: scenarios, closed forms, disentanglement times and sweeps.
//! - [`cli`]: the `esd` command-line front end.

pub mod channels;
pub mod cli;
pub mod entanglement;
pub mod error;
pub mod esd;
pub mod linalg;
pub mod sampling;
pub mod selfcheck;
pub mod states;
pub mod tolerances;

pub use error::{Error, Result};
pub use num_complex::Complex64;
