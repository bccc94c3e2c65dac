//! Error type shared by the library operations.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("depth undefined for zero module")]
    ZeroModuleDepth,
    #[error("suspension requires a Cohen-Macaulay module")]
    SuspensionNeedsCm,
    #[error("pd_finite decision requires a hypersurface")]
    PdFiniteNeedsHypersurface,
    #[error("rigidity oracle requires a hypersurface")]
    RigidityNeedsHypersurface,
    #[error("unsupported ring for classification oracle: {0}")]
    UnsupportedRing(String),
    #[error("classification over a locally-hypersurface ring requires the category to contain the d-th syzygy of the residue field")]
    MissingSyzygyOfResidueField,
    #[error("{0} must be contained in the singular locus")]
    OutsideSingularLocus(String),
    #[error("inhomogeneous generator: {0}")]
    Inhomogeneous(String),
    #[error("defining ideal must be proper and contained in the square of the irrelevant ideal; offending generator: {0}")]
    BadDefiningIdeal(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("membership oracle does not decide {0} closures")]
    UnsupportedClosureKind(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
