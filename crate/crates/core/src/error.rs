use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Variants fall into two groups: domain precondition violations (a caller
/// asked for something the mathematics does not define), and internal
/// consistency failures (a computed quantity that must be an integer or a
/// rational turned out not to be). The latter always indicate a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// The message names the violated congruence, e.g. `p ≡ 3 (mod 4) required`.
    #[error("p ≡ {residue} (mod {modulus}) required (got p = {p})")]
    Congruence { p: u64, residue: u64, modulus: u64 },

    #[error("p > {bound} required (got p = {p})")]
    TooSmall { p: u64, bound: u64 },

    #[error("q = {0} is not supported (q must be 2, 6 or 10)")]
    UnsupportedConductor(u32),

    #[error("{g} is not a primitive root mod {p}")]
    NotPrimitiveRoot { p: u64, g: u64 },

    #[error("p = {p} divides {value}")]
    Divisible { p: u64, value: i128 },

    #[error("base b = {0} must be at least 2")]
    BaseTooSmall(u64),

    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("{0} out of range")]
    OutOfRange(String),

    /// A precondition that is not a plain congruence (order conditions,
    /// residue/nonresidue requirements).
    #[error("{0}")]
    Precondition(String),

    #[error("cyclotomic element is not rational: {0}")]
    NotRational(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("malformed CSV field {field:?}: {value:?}")]
    Parse { field: String, value: String },
}

impl Error {
    /// True for errors that reject the caller's input, as opposed to I/O
    /// failures or internal inconsistencies.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::Io { .. } | Error::Csv { .. } | Error::Inconsistent(_) | Error::NotRational(_)
        )
    }
}
