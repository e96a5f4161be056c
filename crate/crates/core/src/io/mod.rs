//! Matrix Market coordinate files and tab-separated edge lists.
//!
//! Readers return a [`CooMatrix`] whose domain follows the file: Matrix
//! Market `integer` and `pattern` give `i64` (pattern entries are 1), `real`
//! gives `f64`, `complex` gives [`Complex64`]. Repeated coordinates are summed.

mod edge_list;
mod matrix_market;

pub use edge_list::read_edge_list;
pub use matrix_market::{
    read_matrix_market, read_matrix_market_as, write_matrix_market, MatrixMarketHeader, MmField, MmSymmetry, MmValue,
};

use crate::domain::{Complex64, Scalar, ValueDomain};
use crate::sparse::{CompressedMatrix, CooMatrix, MatrixDescriptor, Orientation};

/// A matrix read from a file, in whichever domain the file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyCoo {
    Int64(CooMatrix<i64>),
    Float64(CooMatrix<f64>),
    Complex64(CooMatrix<Complex64>),
}

macro_rules! each {
    ($self:expr, $m:ident => $e:expr) => {
        match $self {
            AnyCoo::Int64($m) => $e,
            AnyCoo::Float64($m) => $e,
            AnyCoo::Complex64($m) => $e,
        }
    };
}

impl AnyCoo {
    pub fn domain(&self) -> ValueDomain {
        match self {
            AnyCoo::Int64(_) => ValueDomain::Int64,
            AnyCoo::Float64(_) => ValueDomain::Float64,
            AnyCoo::Complex64(_) => ValueDomain::Complex64,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        each!(self, m => m.dims())
    }

    pub fn nvals(&self) -> usize {
        each!(self, m => m.nvals())
    }

    pub fn descriptor(&self) -> MatrixDescriptor {
        each!(self, m => m.descriptor())
    }

    /// Writes the matrix back out as a general Matrix Market file.
    pub fn write_matrix_market<W: std::io::Write>(&self, out: W) -> crate::Result<()> {
        each!(self, m => write_matrix_market(m, out))
    }
}

/// Pattern matrix of the stored positions, for code that only needs the
/// structure of a graph.
pub fn structure<T: Scalar>(m: &CooMatrix<T>, orientation: Orientation) -> CompressedMatrix<bool> {
    let c = m.to_compressed(orientation);
    let pattern = crate::kernels::apply_unary(&c, &crate::UnaryOp::constant(true), None);
    pattern.with_descriptor(m.descriptor())
}
