//! Model regions inside the normalized square used to bound the area of the
//! symmetric quadrilateral `Q_{α,β}` with vertices `(1,α), (β,1), (−1,α), (β,−1)`.

use crate::closed_forms::gamma_of;
use crate::error::{Error, Result};
use crate::flags::NormalizedQuadParams;
use crate::projective::{ConvexPolygon, Line, Vec2};

fn check(alpha: f64, beta: f64) -> Result<f64> {
    gamma_of(alpha, beta)
}

/// The quadrilateral `Q_{α,β}`.
pub fn region_q(alpha: f64, beta: f64) -> Result<ConvexPolygon> {
    check(alpha, beta)?;
    Ok(NormalizedQuadParams::new(alpha, alpha, beta, beta)?
        .inscribed_pair()
        .inner()
        .clone())
}

/// Triangle between `y = ±x` below `y = α`; empty, hence an error, at `α = 0`.
pub fn region_t_alpha(alpha: f64) -> Result<ConvexPolygon> {
    check(alpha, 0.0)?;
    if alpha == 0.0 {
        return Err(Error::Domain("the triangle is empty at alpha = 0".into()));
    }
    ConvexPolygon::new(vec![
        Vec2::zeros(),
        Vec2::new(alpha, alpha),
        Vec2::new(-alpha, alpha),
    ])
}

/// Triangle between `y = ±x` left of `x = β`; empty, hence an error, at `β = 0`.
pub fn region_t_beta(beta: f64) -> Result<ConvexPolygon> {
    check(0.0, beta)?;
    if beta == 0.0 {
        return Err(Error::Domain("the triangle is empty at beta = 0".into()));
    }
    ConvexPolygon::new(vec![
        Vec2::zeros(),
        Vec2::new(beta, -beta),
        Vec2::new(beta, beta),
    ])
}

/// The central square `[−γ, γ]²`.
pub fn region_q_prime(alpha: f64, beta: f64) -> Result<ConvexPolygon> {
    let g = check(alpha, beta)?;
    ConvexPolygon::new(vec![
        Vec2::new(g, g),
        Vec2::new(-g, g),
        Vec2::new(-g, -g),
        Vec2::new(g, -g),
    ])
}

/// Half-planes `y ≥ γ`, `x ≥ γ`, `y ≤ −γ`, `x ≤ −γ`, as lines with the kept side on the left.
fn caps(g: f64) -> [Line; 4] {
    let l = |a: Vec2, b: Vec2| Line::through(&a, &b).expect("distinct points");
    [
        l(Vec2::new(0.0, g), Vec2::new(1.0, g)),
        l(Vec2::new(g, 1.0), Vec2::new(g, 0.0)),
        l(Vec2::new(1.0, -g), Vec2::new(0.0, -g)),
        l(Vec2::new(-g, 0.0), Vec2::new(-g, 1.0)),
    ]
}

/// `Q_{α,β} ∩ Q′`.
pub fn region_q_cap_q_prime(alpha: f64, beta: f64) -> Result<ConvexPolygon> {
    let g = check(alpha, beta)?;
    let mut poly = region_q(alpha, beta)?;
    for cap in caps(g) {
        let inside = Line {
            normal: -cap.normal,
            offset: -cap.offset,
        };
        poly = poly
            .clip(&inside)
            .ok_or_else(|| Error::DegenerateConfiguration("empty intersection".into()))?;
    }
    Ok(poly)
}

/// A component of `Q_{α,β} \ Q′` and the index of its vertex on the square's boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaRegion {
    pub polygon: ConvexPolygon,
    pub ideal: usize,
}

/// The four components of `Q_{α,β} \ Q′`: above `y = γ`, right of `x = γ`,
/// below `y = −γ`, left of `x = −γ`.
pub fn regions_delta(alpha: f64, beta: f64) -> Result<[DeltaRegion; 4]> {
    let g = check(alpha, beta)?;
    let q = region_q(alpha, beta)?;
    let tips = [
        Vec2::new(beta, 1.0),
        Vec2::new(1.0, alpha),
        Vec2::new(beta, -1.0),
        Vec2::new(-1.0, alpha),
    ];
    let mut out = Vec::with_capacity(4);
    for (cap, tip) in caps(g).iter().zip(tips) {
        let polygon = q
            .clip(cap)
            .ok_or_else(|| Error::DegenerateConfiguration("empty component".into()))?;
        let ideal = polygon
            .vertices()
            .iter()
            .position(|v| (v - tip).norm() < 1e-12)
            .ok_or_else(|| {
                Error::DegenerateConfiguration("component lost its boundary vertex".into())
            })?;
        out.push(DeltaRegion { polygon, ideal });
    }
    Ok(out.try_into().expect("four components"))
}
