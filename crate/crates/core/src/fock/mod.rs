//! Truncated Fock spaces, oscillator generator matrices, sparse
//! tensor-product operators, and the 0-oscillator normal-form engine.

mod op;
mod word;

pub use op::{FockOp, Generator};
pub use word::{OscWord, TraceError};

use crate::qscalar::{q2_factorial, QRat};
use thiserror::Error;

/// Which oscillator algebra the space carries: the generic-q one or its q=0
/// degeneration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMode {
    Generic,
    Zero,
}

/// Fock space truncated at `cutoff`, with basis `|0>..|cutoff>`.
///
/// The bilinear pairing is `<m|m'> = (q^2)_m delta_{m,m'}` in generic mode and
/// the plain Kronecker pairing in zero mode (where `(q^2)_m` degenerates to 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockSpace {
    pub cutoff: u32,
    pub mode: QMode,
}

impl FockSpace {
    pub fn generic(cutoff: u32) -> Self {
        FockSpace { cutoff, mode: QMode::Generic }
    }

    pub fn zero(cutoff: u32) -> Self {
        FockSpace { cutoff, mode: QMode::Zero }
    }

    pub fn dim(&self) -> usize {
        self.cutoff as usize + 1
    }

    /// Diagonal pairing weight `<m|m>`.
    pub fn pairing(&self, m: u32) -> QRat {
        match self.mode {
            QMode::Generic => QRat::from_poly(q2_factorial(m)),
            QMode::Zero => QRat::one(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("operator shapes do not match: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<u32>, Vec<u32>),
}
