//! Orbits of irreducible binary forms over GF(p) under GL(2,p).
//!
//! The crate counts orbits with an exact Burnside assembly over the
//! conjugacy classes of GL(2,p) ([`counting`]), tabulates the counts as
//! polynomials on residue classes of p ([`porc`]), checks everything against
//! brute-force enumeration ([`oracle`]) and writes down presentations of the
//! indecomposable class-two exponent-p groups whose isomorphism types the
//! orbits parametrize ([`presentations`]).
//!
//! ```
//! use formcount::counting::orbit_count;
//!
//! let report = orbit_count(5, 5).unwrap();
//! assert_eq!(report.orbit_count, 6u32.into());
//! ```

pub mod census;
pub mod cli;
pub mod counting;
pub mod error;
pub mod finitefield;
pub mod forms;
pub mod numtheory;
pub mod oracle;
pub mod porc;
pub mod presentations;

pub use error::{Error, Result};

/// Default ceiling on `p^n` for anything that enumerates forms.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 2_000_000;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_BOUND`] in the CLI.
pub const BOUND_ENV_VAR: &str = "FORMCOUNT_BOUND";
