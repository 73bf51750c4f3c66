//! Exact spectral-threshold computations for the half-line operator family
//!
//! ```text
//!     (-1)^n d^{2n}/dx^{2n} + c / x^{2n}   on (0, infinity)
//! ```
//!
//! For each order parameter `n` the power-type solutions `x^alpha` of the
//! zero-energy equation are governed by the indicial polynomial
//!
//! ```text
//!     D_{2n}(z; c) = z (z-1) (z-2) ... (z-(2n-1)) + (-1)^n c,
//! ```
//!
//! and the number of roots with real part `> -1/2` decides how many
//! solutions are square-integrable near the origin, hence the deficiency
//! indices and (essential) self-adjointness of the minimal operator.
//!
//! This crate computes, exactly where possible and by certified numerics
//! otherwise:
//!
//! * the root counts of `D_{2n}(.; c)` relative to the line `Re = -1/2`
//!   ([`rootcount`]), by two independent routes (Hurwitz minor signs and
//!   certified Aberth iteration) that are cross-checked against each other;
//! * the Hurwitz matrix `H_{2n}(c)`, its determinant
//!   `[q_0 + (-1)^n c] * h_{n-1}(c)`, and the Orlando product identity for
//!   `h_{n-1}` ([`hurwitz`]);
//! * the n certified threshold constants where roots cross the line, the
//!   classification bands, deficiency indices and the self-adjointness
//!   threshold `c_n` ([`thresholds`]);
//! * mod-p factorization evidence (degree multisets, Dedekind cycle types)
//!   for the normalized threshold polynomials `g_{n-1}` ([`galois`]);
//! * generic Frobenius power-series solutions and their truncation
//!   residuals ([`frobenius`]);
//! * high-precision evaluations of `c_n` and the asymptotic comparison
//!   tables ([`asymptotics`]).
//!
//! All exact arithmetic is over arbitrary-precision rationals; the dense
//! polynomial and matrix kernels ([`poly`], [`matrix`]) are generic over
//! the coefficient type via `num-traits`, with the concrete aliases
//! [`Rat`], [`QPoly`] and [`QPolyMatrix`] used throughout the higher
//! layers. Floating-point work uses explicit-precision binary floats (see
//! [`mp`]); no result ever silently depends on `f64`.

pub mod asymptotics;
pub mod figure;
pub mod frobenius;
pub mod galois;
pub mod hurwitz;
pub mod indicial;
pub mod matrix;
pub mod mp;
pub mod poly;
pub mod rational;
pub mod rootcount;
pub mod sturm;
pub mod thresholds;

/// Exact rational scalar used everywhere arithmetic must not round.
pub type Rat = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Dense univariate polynomial with exact rational coefficients.
pub type QPoly = poly::Polynomial<Rat>;

/// Matrix of rational polynomials (row-major), used for Hurwitz matrices
/// whose entries have degree at most one in the coupling parameter.
pub type QPolyMatrix = matrix::PolyMatrix<Rat>;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("inexact division")]
    InexactDivision,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("order parameter must be a positive integer")]
    InvalidOrder,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("root iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("cannot certify root positions against Re = -1/2 at {0} bits")]
    Uncertifiable(usize),
    #[error("resonant exponent: the recurrence denominator vanishes at step {0}")]
    Resonant(usize),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
