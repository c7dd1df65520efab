//! Vectors, determinants, cross ratios, projective maps and convex polygons.

use nalgebra::{Matrix3, Vector2, Vector3};

use crate::error::{Error, Result};
use crate::tol;

pub type Vec2 = Vector2<f64>;
pub type Vec3 = Vector3<f64>;

/// Determinant of the 3×3 matrix with columns `a`, `b`, `c`.
pub fn wedge3(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    Matrix3::from_columns(&[*a, *b, *c]).determinant()
}

/// Wedge of unit representatives, used for scale-free degeneracy tests.
pub(crate) fn normalized_wedge3(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    wedge3(a, b, c) / (a.norm() * b.norm() * c.norm())
}

/// z-component of the planar cross product.
pub fn cross2(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Lift to the affine chart z = 1.
pub fn lift(p: &Vec2) -> Vec3 {
    Vec3::new(p.x, p.y, 1.0)
}

/// A point of the projective line: a real number or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjPoint {
    Finite(f64),
    Infinity,
}

impl ProjPoint {
    fn homogeneous(self) -> Vec2 {
        let v = match self {
            ProjPoint::Finite(x) => Vec2::new(x, 1.0),
            ProjPoint::Infinity => Vec2::new(1.0, 0.0),
        };
        v / v.norm()
    }
}

impl From<f64> for ProjPoint {
    fn from(x: f64) -> Self {
        ProjPoint::Finite(x)
    }
}

/// Cross ratio `(c−a)/(c−b) · (d−b)/(d−a)`, so that `[t:1:0:∞] = t`.
///
/// Each difference is evaluated as a 2×2 determinant of homogeneous
/// coordinates, which handles the point at infinity without special cases.
pub fn cross_ratio(
    a: impl Into<ProjPoint>,
    b: impl Into<ProjPoint>,
    c: impl Into<ProjPoint>,
    d: impl Into<ProjPoint>,
) -> Result<f64> {
    let [a, b, c, d] = [a.into(), b.into(), c.into(), d.into()].map(ProjPoint::homogeneous);
    let diff = |u: &Vec2, v: &Vec2| {
        let w = cross2(v, u);
        if w.abs() <= tol::DET * u.norm() * v.norm() {
            Err(Error::DegenerateCrossRatio)
        } else {
            Ok(w)
        }
    };
    // the formula stays finite when a = b or c = d, but the points must be distinct
    diff(&b, &a)?;
    diff(&d, &c)?;
    Ok(diff(&c, &a)? / diff(&c, &b)? * diff(&d, &b)? / diff(&d, &a)?)
}

/// An invertible 3×3 matrix acting on the projective plane, defined up to scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjTransform(Matrix3<f64>);

impl ProjTransform {
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let scale = m.norm();
        if !scale.is_finite() || m.determinant().abs() <= tol::DET * scale.powi(3) {
            return Err(Error::DegenerateConfiguration(
                "singular projective transform".into(),
            ));
        }
        Ok(Self(m / scale))
    }

    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn apply_h(&self, v: &Vec3) -> Vec3 {
        self.0 * v
    }

    pub fn apply(&self, p: &Vec2) -> Result<Vec2> {
        let v = self.apply_h(&lift(p));
        if v.z.abs() <= tol::DET * v.norm() {
            return Err(Error::PointAtInfinity);
        }
        Ok(Vec2::new(v.x / v.z, v.y / v.z))
    }

    pub fn inverse(&self) -> Self {
        // invertibility was checked on construction
        Self(self.0.try_inverse().expect("checked invertible"))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ProjTransform) -> Self {
        let m = other.0 * self.0;
        Self(m / m.norm())
    }

    /// The unique map sending each `src[i]` to `dst[i]`.
    pub fn from_correspondence(src: &[Vec2; 4], dst: &[Vec2; 4]) -> Result<Self> {
        let from = frame(src)?;
        let to = frame(dst)?;
        Self::new(
            to * from
                .try_inverse()
                .ok_or_else(|| degenerate("source frame"))?,
        )
    }

    /// The affine map sending each `src[i]` to `dst[i]`.
    pub fn affine(src: &[Vec2; 3], dst: &[Vec2; 3]) -> Result<Self> {
        let cols = |p: &[Vec2; 3]| Matrix3::from_columns(&[lift(&p[0]), lift(&p[1]), lift(&p[2])]);
        let from = cols(src);
        let inv = from
            .try_inverse()
            .ok_or_else(|| degenerate("collinear source triangle"))?;
        if normalized_wedge3(&lift(&src[0]), &lift(&src[1]), &lift(&src[2])).abs()
            <= tol::GENERAL_POSITION
        {
            return Err(degenerate("collinear source triangle"));
        }
        Self::new(cols(dst) * inv)
    }
}

fn degenerate(what: &str) -> Error {
    Error::DegenerateConfiguration(what.to_string())
}

/// Columns `λᵢ pᵢ` with `Σ λᵢ pᵢ = p₄`, the projective frame of four points.
fn frame(points: &[Vec2; 4]) -> Result<Matrix3<f64>> {
    let h = points.map(|p| lift(&p));
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if normalized_wedge3(&h[i], &h[j], &h[k]).abs() <= tol::GENERAL_POSITION {
            return Err(degenerate("three of the four points are collinear"));
        }
    }
    let basis = Matrix3::from_columns(&[h[0], h[1], h[2]]);
    let lambda = basis
        .try_inverse()
        .ok_or_else(|| degenerate("collinear frame"))?
        * h[3];
    Ok(Matrix3::from_columns(&[
        h[0] * lambda.x,
        h[1] * lambda.y,
        h[2] * lambda.z,
    ]))
}

/// Convenience wrapper around [`ProjTransform::from_correspondence`].
pub fn transform_from_correspondence(src: &[Vec2; 4], dst: &[Vec2; 4]) -> Result<ProjTransform> {
    ProjTransform::from_correspondence(src, dst)
}

/// The line `normal · x = offset` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub normal: Vec2,
    pub offset: f64,
}

impl Line {
    /// Oriented line from `p` to `q`; points on its left have positive side.
    pub fn through(p: &Vec2, q: &Vec2) -> Result<Self> {
        let d = q - p;
        let len = d.norm();
        if len <= tol::DET * p.norm().max(q.norm()).max(1.0) {
            return Err(degenerate("line through coincident points"));
        }
        let normal = Vec2::new(-d.y, d.x) / len;
        Ok(Self {
            normal,
            offset: normal.dot(p),
        })
    }

    /// Signed distance, positive on the left.
    pub fn side(&self, p: &Vec2) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

pub fn line_intersect(a: &Line, b: &Line) -> Result<Vec2> {
    let det = cross2(&a.normal, &b.normal);
    if det.abs() <= tol::DET {
        return Err(Error::ParallelLines);
    }
    Ok(Vec2::new(
        (a.offset * b.normal.y - b.offset * a.normal.y) / det,
        (a.normal.x * b.offset - b.normal.x * a.offset) / det,
    ))
}

/// Whether `p` lies on the closed segment `[a, b]`, up to `tol::CONV` of its length.
pub fn point_on_segment(p: &Vec2, a: &Vec2, b: &Vec2) -> bool {
    let d = b - a;
    let len2 = d.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm() == 0.0;
    }
    let len = len2.sqrt();
    let s = (p - a).dot(&d) / len2;
    cross2(&d, &(p - a)).abs() <= tol::CONV * len * len
        && (-tol::CONV..=1.0 + tol::CONV).contains(&s)
}

/// Whether `p` is inside `poly`; points within tolerance of the boundary are ambiguous.
pub fn polygon_contains(poly: &ConvexPolygon, p: &Vec2) -> Result<bool> {
    let eps = tol::CONV * poly.size();
    let min_side = poly
        .edge_lines()
        .map(|l| l.side(p))
        .fold(f64::INFINITY, f64::min);
    if min_side.abs() <= eps {
        Err(Error::BoundaryAmbiguous)
    } else {
        Ok(min_side > 0.0)
    }
}

/// A bounded, strictly convex polygon with counter-clockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Validates the vertex cycle; clockwise input is reversed.
    pub fn new(mut vertices: Vec<Vec2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "{n} vertices, need at least 3"
            )));
        }
        if vertices
            .iter()
            .any(|v| !v.x.is_finite() || !v.y.is_finite())
        {
            return Err(Error::InvalidPolygon("non-finite vertex".into()));
        }
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let size = spread(&vertices);
        for i in 0..n {
            for j in i + 1..n {
                if (vertices[i] - vertices[j]).norm() <= tol::MERGE * size {
                    return Err(Error::InvalidPolygon(format!(
                        "vertices {i} and {j} coincide"
                    )));
                }
            }
        }
        let mut turning = 0.0;
        for i in 0..n {
            let e0 = vertices[(i + 1) % n] - vertices[i];
            let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            let c = cross2(&e0, &e1);
            if c <= tol::CONV * e0.norm() * e1.norm() {
                return Err(Error::InvalidPolygon(format!(
                    "not strictly convex at vertex {}",
                    (i + 1) % n
                )));
            }
            turning += c.atan2(e0.dot(&e1));
        }
        if (turning - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(Error::InvalidPolygon(
                "vertex cycle winds more than once".into(),
            ));
        }
        Ok(Self { vertices })
    }

    /// Builds a polygon from a cyclic point list produced by clipping, dropping
    /// coincident and collinear points. Returns `None` for degenerate results.
    pub(crate) fn from_points_lenient(points: Vec<Vec2>) -> Option<Self> {
        let size = spread(&points);
        if size == 0.0 {
            return None;
        }
        let mut pts: Vec<Vec2> = Vec::with_capacity(points.len());
        for p in points {
            if pts
                .last()
                .is_none_or(|q: &Vec2| (p - q).norm() > tol::MERGE * size)
            {
                pts.push(p);
            }
        }
        while pts.len() > 1 && (pts[0] - pts[pts.len() - 1]).norm() <= tol::MERGE * size {
            pts.pop();
        }
        loop {
            let n = pts.len();
            if n < 3 {
                return None;
            }
            let flat = (0..n).find(|&i| {
                let prev = pts[(i + n - 1) % n];
                let (e0, e1) = (pts[i] - prev, pts[(i + 1) % n] - pts[i]);
                cross2(&e0, &e1) <= tol::CONV * e0.norm() * e1.norm()
            });
            match flat {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        if signed_area(&pts).abs() <= 1e-14 * size * size {
            return None;
        }
        Self::new(pts).ok()
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// Mean of the vertices; always interior.
    pub fn centroid(&self) -> Vec2 {
        self.vertices.iter().sum::<Vec2>() / self.len() as f64
    }

    /// Largest distance from the centroid to a vertex.
    pub fn size(&self) -> f64 {
        spread(&self.vertices)
    }

    /// Line through edge `i`, from vertex `i` to vertex `i+1`; the interior is on its left.
    pub fn edge_line(&self, i: usize) -> Line {
        let n = self.len();
        Line::through(&self.vertices[i % n], &self.vertices[(i + 1) % n])
            .expect("distinct vertices")
    }

    pub fn edge_lines(&self) -> impl Iterator<Item = Line> + '_ {
        (0..self.len()).map(move |i| self.edge_line(i))
    }

    /// Whether `p` is strictly inside, with no tolerance.
    pub fn contains_strictly(&self, p: &Vec2) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            cross2(&(b - a), &(p - a)) > 0.0
        })
    }

    /// Keeps the part on the non-negative side of `line`.
    pub fn clip(&self, line: &Line) -> Option<ConvexPolygon> {
        let eps = 1e-13 * self.size();
        let snap = |s: f64| if s.abs() <= eps { 0.0 } else { s };
        let n = self.len();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let cur = self.vertices[i];
            let nxt = self.vertices[(i + 1) % n];
            let (sc, sn) = (snap(line.side(&cur)), snap(line.side(&nxt)));
            if sc >= 0.0 {
                out.push(cur);
            }
            if (sc > 0.0 && sn < 0.0) || (sc < 0.0 && sn > 0.0) {
                out.push(cur + (nxt - cur) * (sc / (sc - sn)));
            }
        }
        Self::from_points_lenient(out)
    }

    /// Whether `line` passes through the interior, splitting the polygon.
    pub fn is_split_by(&self, line: &Line) -> bool {
        let eps = 1e-12 * self.size();
        let sides = self.vertices.iter().map(|v| line.side(v));
        let (lo, hi) = sides.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s), hi.max(s))
        });
        lo < -eps && hi > eps
    }

    /// Image under a projective map that keeps the polygon bounded.
    pub fn transformed(&self, map: &ProjTransform) -> Result<ConvexPolygon> {
        let images: Vec<Vec3> = self
            .vertices
            .iter()
            .map(|v| map.apply_h(&lift(v)))
            .collect();
        let sign = images[0].z.signum();
        if images.iter().any(|v| v.z * sign <= tol::DET * v.norm()) {
            return Err(Error::PointAtInfinity);
        }
        ConvexPolygon::new(
            images
                .iter()
                .map(|v| Vec2::new(v.x / v.z, v.y / v.z))
                .collect(),
        )
    }
}

/// Euclidean area of a convex polygon.
pub fn shoelace_area(p: &ConvexPolygon) -> f64 {
    p.area()
}

fn signed_area(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    0.5 * (0..n)
        .map(|i| cross2(&vertices[i], &vertices[(i + 1) % n]))
        .sum::<f64>()
}

fn spread(points: &[Vec2]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let c = points.iter().sum::<Vec2>() / points.len() as f64;
    points.iter().map(|p| (p - c).norm()).fold(0.0, f64::max)
}

/// An origin-symmetric convex polygon stored by its upper half.
///
/// The half holds the vertices with `y > 0`, plus the one on the positive
/// x-axis if present, ordered from left to right (by decreasing polar angle).
#[derive(Debug, Clone, PartialEq)]
pub struct CentrallySymmetricPolygon {
    half: Vec<Vec2>,
}

impl CentrallySymmetricPolygon {
    /// Convex hull of `{±p}`, with collinear and coincident points merged.
    pub fn from_generators(points: &[Vec2]) -> Result<Self> {
        let scale = points.iter().map(|p| p.norm()).fold(0.0, f64::max);
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::OriginNotInterior);
        }
        let all: Vec<Vec2> = points.iter().flat_map(|p| [*p, -*p]).collect();
        let hull = convex_hull(all, tol::MERGE * scale * scale);
        if hull.len() < 3 || signed_area(&hull) <= tol::MERGE * scale * scale {
            return Err(Error::OriginNotInterior);
        }
        let y_eps = tol::MERGE * scale;
        let upper = |v: &Vec2| v.y > y_eps || (v.y.abs() <= y_eps && v.x > 0.0);
        let mut half: Vec<Vec2> = Vec::new();
        for v in hull.iter().flat_map(|h| [*h, -*h]).filter(upper) {
            if half.iter().all(|w| (w - v).norm() > tol::MERGE * scale) {
                half.push(v);
            }
        }
        let angle = |v: &Vec2| {
            if v.y.abs() <= y_eps {
                0.0
            } else {
                v.y.atan2(v.x)
            }
        };
        half.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
        Ok(Self { half })
    }

    /// Upper-half vertices, left to right.
    pub fn half_vertices(&self) -> &[Vec2] {
        &self.half
    }

    /// All vertices, counter-clockwise.
    pub fn vertices(&self) -> Vec<Vec2> {
        let mut full: Vec<Vec2> = self.half.iter().rev().copied().collect();
        full.extend(self.half.iter().rev().map(|v| -v));
        full
    }

    /// Vertex count of the full polygon.
    pub fn len(&self) -> usize {
        2 * self.half.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices())
    }

    pub fn to_polygon(&self) -> Result<ConvexPolygon> {
        ConvexPolygon::new(self.vertices())
    }
}

/// Andrew's monotone chain, counter-clockwise, dropping points whose turn is within `eps`.
fn convex_hull(mut pts: Vec<Vec2>, eps: f64) -> Vec<Vec2> {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let turn = |o: &Vec2, a: &Vec2, b: &Vec2| cross2(&(a - o), &(b - o));
    let mut lower: Vec<Vec2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= eps {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= eps {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
