use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature is not hyperbolic (euler characteristic {0} >= 0)")]
    NonHyperbolic(String),
    #[error("cone order {0} is smaller than 2")]
    InvalidConeOrder(i64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("|lambda| = {0} is not 1")]
    NonUnitModulusLambda(f64),
    #[error("random representations need genus >= 1; use a catalog preset")]
    GenusZeroUnsupported,
    #[error("no admissible eigenvalue pattern for this lambda: {0}")]
    InfeasibleLambda(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("matrix for c_{0} is not diagonalizable within tolerance")]
    NotDiagonalizable(usize),
    #[error("complex is not acyclic: {0}")]
    NotAcyclic(String),
    #[error("ill-conditioned pivot block after retries: {0}")]
    IllConditioned(String),
    #[error("det(I - core) vanishes")]
    NonAcyclicTorus,
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("weight m is zero; use the asymptotic routine")]
    WeightZero,
    #[error("weight m is nonzero; the asymptotic routine needs m = 0")]
    WeightNonzero,
    #[error("endpoint {0} lies on a pole of the integrand")]
    PoleOnEndpoint(String),
    #[error("cutoff > 0 but the spectrum is empty")]
    EmptySpectrum,
    #[error("no hyperbolic element below the cutoff")]
    CutoffTooSmall,
    #[error("translation number did not converge: residual {0}")]
    NonConvergent(f64),
    #[error("Re(s) too small for the requested tolerance: {0}")]
    ConvergenceDomain(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Numerical (as opposed to input) failures.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotDiagonalizable(_)
                | Error::IllConditioned(_)
                | Error::QuadratureFailure(_)
                | Error::NonConvergent(_)
                | Error::ConvergenceDomain(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
