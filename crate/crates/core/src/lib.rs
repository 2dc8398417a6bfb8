//! Exact symbolic calculus for Dunkl operators attached to finite reflection
//! groups with rational root coordinates.
//!
//! The exact core (`poly`, `rootsys`, `dunkl`, `radial`, `harmonic`,
//! `integrate`) works over arbitrary precision rationals. The `transform`
//! module checks the transform-side identities numerically for `Z2^d`, where
//! the Dunkl kernel factorises into one-dimensional series.

pub mod cli;
pub mod dunkl;
pub mod error;
pub mod harmonic;
pub mod integrate;
pub mod poly;
pub mod radial;
pub mod random;
pub mod rational;
pub mod report;
pub mod rootsys;
pub mod suites;
pub mod transform;

pub use dunkl::DunklContext;
pub use error::{DunklError, Result};
pub use poly::{parse_poly, Monomial, Poly};
pub use radial::{RadialProfile, WeightedFunction};
pub use rational::Rational;
pub use report::{CaseStatus, VerificationReport};
pub use rootsys::{DunklConstants, RootSystemData};
