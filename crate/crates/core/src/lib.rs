//! D-optimal approximate designs for paired comparisons with full or partial
//! profiles under a second-order interactions model.
//!
//! The crate is organised bottom-up:
//!
//! * [`problem`]: the `(K, S, v)` problem triple, parameter bookkeeping, depth
//!   orbit counts and invariant designs (mixtures of uniform depth designs).
//! * [`effects`]: effects-coded regression vectors, paired differences and
//!   streaming enumeration of the partial-profile design region.
//! * [`closed_form`]: the diagonal information multipliers, the variance
//!   function and the D-criterion, each in exact and floating arithmetic.
//! * [`optimizer`]: optimal depths per effect block and the D-optimal
//!   invariant design for the full parameter vector, with an equivalence
//!   theorem certificate.
//! * [`oracle`]: brute-force verification in exact rational arithmetic.

pub mod closed_form;
pub mod effects;
mod error;
pub mod matrix;
pub mod optimizer;
pub mod oracle;
pub mod problem;
mod scalar;

pub use closed_form::{EffectOrder, InfoSummary, OneWayBrick};
pub use effects::{PairedComparison, Profile, RegressionVector};
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use optimizer::{KwCertificate, OptimalDesignResult, SolverOptions};
pub use problem::{DepthOrbit, DesignProblem, InvariantDesign, ParameterLayout};
pub use scalar::{Rational, Scalar};
