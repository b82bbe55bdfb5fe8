//! Exact computations with edge ideals of finite simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: small labelled graphs on a bit-matrix, induced-pattern search,
//!   chordality, cliques, vertex multiplication and twin collapse.
//! * [`catalog`]: the named graphs `C_n`, `K_n`, `P_n`, `G_0`..`G_10` and their
//!   multiplied families.
//! * [`ideal`]: monomial ideals with canonical minimal generators, powers,
//!   colons, sums and polarization.
//! * [`even`]: even-connections, colon graphs and the ordered generator
//!   decomposition of powers of edge ideals.
//! * [`betti`]: graded Betti numbers through Hochster's formula over exact
//!   fields, plus the Fröberg shortcut.
//! * [`structure`]: dominating cliques, the (gap, diamond)-free classifier and
//!   executable lemma checks.
//! * [`verify`]: named verification suites with machine-readable reports.

pub mod betti;
pub mod catalog;
mod error;
pub mod even;
pub mod graph;
pub mod ideal;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
