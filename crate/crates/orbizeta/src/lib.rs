//! Reidemeister–Turaev torsion of unit tangent bundles of hyperbolic orbisurfaces and the
//! behaviour at zero of twisted Ruelle zeta functions, computed along independent routes.

pub mod cover;
pub mod error;
pub mod groups;
pub mod json;
pub mod linalg;
pub mod orbifold;
pub mod quadrature;
pub mod representation;
pub mod spectrum;
pub mod torsion;
pub mod trace;
pub mod zeta_contour;

pub use error::{Error, Result};
pub use orbifold::{new_signature, EllipticClassDatum, OrbifoldSignature};

