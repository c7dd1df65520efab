//! Hilbert geometry on convex polygons and Holmes–Thompson areas of positive
//! tuples of flags in the projective plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`projective`] holds vectors, cross ratios, projective maps and convex polygons.
//! * [`flags`] holds flags, triple and double ratios, positivity and the passage
//!   between positive tuples and inscribed polygon pairs.
//! * [`hilbert`] holds the Hilbert distance, Finsler norm, unit tangent balls and
//!   their polar duals.
//! * [`quadrature`] integrates dual-ball areas over inscribed polygons.
//! * [`regions`] builds the model regions inside the normalized square.
//! * [`closed_forms`] holds the dilogarithm and the exact area formulas.
//! * [`surfaces`] covers the thrice-punctured sphere family and surface bounds.

pub mod closed_forms;
pub mod error;
pub mod flags;
pub mod hilbert;
pub mod projective;
pub mod quadrature;
pub mod regions;
pub mod surfaces;
pub mod tol;

pub use error::{Error, Result};
pub use flags::{FGQuadCoords, Flag, FlagTuple, InscribedPair, NormalizedQuadParams};
pub use hilbert::TangentVector;
pub use projective::{
    CentrallySymmetricPolygon, ConvexPolygon, Line, ProjPoint, ProjTransform, Vec2, Vec3,
};
pub use quadrature::{AreaResult, QuadratureSpec, Strategy};
pub use surfaces::S03Params;

#[cfg(test)]
pub(crate) mod testutil;
