//! Exact verification workbench for the universal symmetric two-valued group.
//!
//! The library verifies, at desk scale, the chain of equivalences between the
//! associativity of the two-valued multiplication defined by the Buchstaber
//! polynomial, the Chazy III equation, horizontality of the Ramanujan vector
//! field for the Gauss-Manin connection, the associativity of a 3D
//! Dubrovin-Frobenius structure, and the quantum Yang-Baxter equation for the
//! associated Casimir R-matrix.
//!
//! All symbolic checks run over exact rationals (no floating point, no
//! tolerances); numeric checks (elliptic coset products, flow integration) use
//! complex floating point with explicit tolerances.

pub mod chazy;
pub mod elliptic;
pub mod exact;
pub mod formalgroup;
pub mod frobenius;
pub mod gaussmanin;
pub mod numeric;
pub mod quasimodular;
pub mod report;
pub mod series;
pub mod suites;
pub mod twovalued;
pub mod yangbaxter;

pub use exact::{MPoly, Rat, RatFunc, Var};
pub use series::{MSeries, Series1};

/// Complex scalar used by the numeric (non-exact) checks.
pub type C64 = num_complex::Complex<f64>;

/// Truncated q-expansion with exact rational coefficients.
pub type QSeries = Series1<Rat>;

/// Univariate truncated series with polynomial coefficients.
pub type PSeries1 = Series1<MPoly>;

/// Multivariate truncated series with polynomial coefficients.
pub type PSeries2 = MSeries<MPoly>;
