//! Relative tolerances shared by every degeneracy test.

/// Determinants and transform invertibility, relative to the matrix scale.
pub const DET: f64 = 1e-12;
/// Strict convexity of polygons: sine of the turning angle at each vertex.
pub const CONV: f64 = 1e-10;
/// General position of flags, on normalized wedges.
pub const GENERAL_POSITION: f64 = 1e-10;
/// Merging of nearly coincident or collinear unit-ball vertices.
pub const MERGE: f64 = 1e-12;
/// Incidence of an inner vertex with its outer edge, relative to the polygon size.
pub const INCIDENCE: f64 = 1e-9;
