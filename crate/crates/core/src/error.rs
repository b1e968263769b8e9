//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("target degree {target} is not a multiple of the source degree {source}")]
    NonDivisibleLevel { source: usize, target: usize },

    #[error("field elements belong to towers with different characteristics ({0} vs {1})")]
    MixedTower(u64, u64),

    #[error("division by zero in F_{{{p}^{deg}}}")]
    DivisionByZero { p: u64, deg: usize },

    #[error("e = 0 admits no unit with kappa^e != 1")]
    ZeroExponent,

    #[error("({a}, {b}) is not a real root")]
    NonRealRoot { a: String, b: String },

    #[error("torus coordinates must be nonzero units")]
    ZeroTorus,

    #[error("m*n <= 4 is of affine or finite type; the engine requires an indefinite Cartan matrix (m*n > 4)")]
    NotIndefinite,

    #[error("m = 1 or n = 1 produces non-trivial commutation relations between prenilpotent root pairs, which this engine does not cover")]
    NonTrivialCommutation,

    #[error("matrix determinant must be 1")]
    DetNotOne,

    #[error("element does not lie in the rank-1 subgroup S_delta")]
    NotInRankOne,

    #[error("ball radius must be non-negative")]
    NegativeRadius,

    #[error("covolume series requires q >= 2")]
    CovolumeBase,

    #[error("tau-commutator replay requires j >= 1 (gamma_j is a positive root only for j >= 1)")]
    ReplayIndex,

    #[error("commutator argument c = 0 is degenerate (the commutator is trivial)")]
    DegenerateCommutator,

    #[error("saturation requires a non-central starting element")]
    CentralSeed,

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
