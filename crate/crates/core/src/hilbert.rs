//! Hilbert distance, Finsler norm, unit tangent balls, polar duals and the
//! closed-form dual-ball areas of the model triangle and square.

use crate::error::{Error, Result};
use crate::projective::{cross2, CentrallySymmetricPolygon, ConvexPolygon, Vec2};

/// A tangent vector `dir` at the base point `base`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub base: Vec2,
    pub dir: Vec2,
}

impl TangentVector {
    pub fn new(base: Vec2, dir: Vec2) -> Self {
        Self { base, dir }
    }
}

/// Rejects base points that are not strictly interior.
fn check_interior(omega: &ConvexPolygon, p: &Vec2) -> Result<()> {
    let eps = 1e-15 * omega.size();
    let v = omega.vertices();
    let n = v.len();
    let inside = (0..n).all(|i| {
        let e = v[(i + 1) % n] - v[i];
        cross2(&e, &(p - v[i])) > eps * e.norm()
    });
    if inside && p.x.is_finite() && p.y.is_finite() {
        Ok(())
    } else {
        Err(Error::PointOutsideDomain)
    }
}

/// Smallest `τ > 0` with `p + τ·dir` on the boundary, from the edge half-planes.
fn exit_time(omega: &ConvexPolygon, p: &Vec2, dir: &Vec2) -> f64 {
    let v = omega.vertices();
    let n = v.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let e = v[(i + 1) % n] - v[i];
        let rate = cross2(&e, dir);
        if rate < 0.0 {
            best = best.min(cross2(&e, &(p - v[i])) / -rate);
        }
    }
    best
}

/// Hilbert distance between interior points `p` and `q`.
///
/// With `a` and `b` the boundary hits behind `p` and beyond `q`, the chord is
/// parametrized so that `p = 0`, `q = 1`, `a = −τ_a`, `b = τ_b`, and the cross
/// ratio `[q:p:a:b]` factors as `(1 + 1/τ_a)·(1 − 1/τ_b)⁻¹`.
pub fn hilbert_distance(omega: &ConvexPolygon, p: &Vec2, q: &Vec2) -> Result<f64> {
    check_interior(omega, p)?;
    check_interior(omega, q)?;
    let dir = q - p;
    if dir.norm() == 0.0 {
        return Ok(0.0);
    }
    let tau_b = exit_time(omega, p, &dir);
    let tau_a = exit_time(omega, p, &-dir);
    Ok(0.5 * ((1.0 / tau_a).ln_1p() - (-1.0 / tau_b).ln_1p()))
}

/// Finsler norm `½(σ⁺ + σ⁻)` with `σ± = 1/τ±` from the forward and backward exits.
pub fn finsler_norm(omega: &ConvexPolygon, v: &TangentVector) -> Result<f64> {
    check_interior(omega, &v.base)?;
    if v.dir.x == 0.0 && v.dir.y == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(0.5 * (1.0 / exit_time(omega, &v.base, &v.dir) + 1.0 / exit_time(omega, &v.base, &-v.dir)))
}

/// Unit tangent ball at `p`: the hull of `±ξ_z` over the vertices `z`, where
/// `ξ_z` is the unit vector at `p` pointing to `z`.
pub fn unit_ball(omega: &ConvexPolygon, p: &Vec2) -> Result<CentrallySymmetricPolygon> {
    check_interior(omega, p)?;
    let xis: Vec<Vec2> = omega
        .vertices()
        .iter()
        .map(|z| {
            let dir = z - p;
            // the forward exit toward a vertex is the vertex itself
            dir / (0.5 * (1.0 + 1.0 / exit_time(omega, p, &-dir)))
        })
        .collect();
    CentrallySymmetricPolygon::from_generators(&xis)
}

/// Polar dual `{w : ⟨w, v⟩ ≤ 1 for all v ∈ B}`.
///
/// With the half-vertices `z₁, …, z_k` ordered left to right and `z₀ = −z_k`,
/// the dual vertices are `(y_i − y_{i−1}, x_{i−1} − x_i) / (x_{i−1}y_i − x_i y_{i−1})`.
pub fn dual_polygon(ball: &CentrallySymmetricPolygon) -> Result<CentrallySymmetricPolygon> {
    let half = ball.half_vertices();
    let k = half.len();
    if k < 2 {
        return Err(Error::OriginNotInterior);
    }
    let scale = half.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut prev = -half[k - 1];
    let mut dual = Vec::with_capacity(k);
    for z in half {
        let den = prev.x * z.y - z.x * prev.y;
        // left-to-right order is clockwise, so every denominator is negative
        if den.is_nan() || den >= -1e-14 * scale * scale {
            return Err(Error::OriginNotInterior);
        }
        dual.push(Vec2::new(z.y - prev.y, prev.x - z.x) / den);
        prev = *z;
    }
    CentrallySymmetricPolygon::from_generators(&dual)
}

/// Euclidean area of the dual unit ball at `p`.
pub fn dual_ball_area(omega: &ConvexPolygon, p: &Vec2) -> Result<f64> {
    Ok(dual_polygon(&unit_ball(omega, p)?)?.area())
}

/// Dual-ball area on the triangle `(0,0), (2,0), (0,2)`.
pub fn integrand_t0(x: f64, y: f64) -> Result<f64> {
    if x > 0.0 && y > 0.0 && x + y < 2.0 {
        Ok(t0_formula(x, y))
    } else {
        Err(Error::PointOutsideDomain)
    }
}

/// Half the dual-ball area on the square `[−1, 1]²`, continuous across the diagonals.
///
/// This is the normalization under which the quadrilateral closed forms in
/// [`crate::closed_forms`] hold; [`dual_ball_area`] on [`model_square`] is twice it.
pub fn integrand_q0(x: f64, y: f64) -> Result<f64> {
    if x.abs() < 1.0 && y.abs() < 1.0 {
        Ok(q0_formula(x, y))
    } else {
        Err(Error::PointOutsideDomain)
    }
}

pub(crate) fn t0_formula(x: f64, y: f64) -> f64 {
    3.0 / (2.0 * x * y * (2.0 - x - y))
}

pub(crate) fn q0_formula(x: f64, y: f64) -> f64 {
    (2.0 + x.abs().max(y.abs())) / (2.0 * (1.0 - x * x) * (1.0 - y * y))
}

/// The model triangle with vertices `(0,0), (2,0), (0,2)`.
pub fn model_triangle() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Vec2::new(0.0, 0.0),
        Vec2::new(2.0, 0.0),
        Vec2::new(0.0, 2.0),
    ])
    .expect("valid triangle")
}

/// The model square `[−1, 1]²`, starting at `(1, 1)`.
pub fn model_square() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Vec2::new(1.0, 1.0),
        Vec2::new(-1.0, 1.0),
        Vec2::new(-1.0, -1.0),
        Vec2::new(1.0, -1.0),
    ])
    .expect("valid square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::cross_ratio;
    use crate::testutil::{random_convex_polygon, random_transform, rng};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::Rng;

    fn random_interior(r: &mut impl Rng, omega: &ConvexPolygon) -> Vec2 {
        // convex combination of vertices with weights bounded away from zero
        let w: Vec<f64> = omega
            .vertices()
            .iter()
            .map(|_| r.random_range(0.05..1.0))
            .collect();
        let s: f64 = w.iter().sum();
        omega
            .vertices()
            .iter()
            .zip(&w)
            .map(|(v, wi)| v * (wi / s))
            .sum()
    }

    fn contains_point(points: &[Vec2], p: Vec2, eps: f64) -> bool {
        points.iter().any(|q| (q - p).norm() < eps)
    }

    #[test]
    fn distance_along_axis_of_square() {
        let q0 = model_square();
        for x in [0.1, 0.5, 0.9, -0.7] {
            let d = hilbert_distance(&q0, &Vec2::zeros(), &Vec2::new(x, 0.0)).unwrap();
            assert_relative_eq!(d, f64::atanh(x.abs()), epsilon = 1e-14);
        }
        let half = hilbert_distance(&q0, &Vec2::zeros(), &Vec2::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(half, 0.5 * 3.0f64.ln(), epsilon = 1e-15);
        assert_eq!(
            hilbert_distance(&q0, &Vec2::new(0.3, 0.2), &Vec2::new(0.3, 0.2)).unwrap(),
            0.0
        );
        assert_eq!(
            hilbert_distance(&q0, &Vec2::new(1.0, 0.2), &Vec2::zeros()),
            Err(Error::PointOutsideDomain)
        );
    }

    #[test]
    fn distance_matches_cross_ratio_of_boundary_hits() {
        let mut r = rng(21);
        for _ in 0..100 {
            let omega = random_convex_polygon(&mut r, 5);
            let (p, q) = (
                random_interior(&mut r, &omega),
                random_interior(&mut r, &omega),
            );
            let dir = q - p;
            let (tb, ta) = (exit_time(&omega, &p, &dir), exit_time(&omega, &p, &-dir));
            let direct = 0.5 * cross_ratio(1.0, 0.0, -ta, tb).unwrap().ln();
            assert_relative_eq!(
                hilbert_distance(&omega, &p, &q).unwrap(),
                direct,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn triangle_inequality() {
        let mut r = rng(22);
        for _ in 0..1000 {
            let k = r.random_range(3..8);
            let omega = random_convex_polygon(&mut r, k);
            let [a, b, c] = [(); 3].map(|_| random_interior(&mut r, &omega));
            let d = |x: &Vec2, y: &Vec2| hilbert_distance(&omega, x, y).unwrap();
            assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
            assert_relative_eq!(d(&a, &b), d(&b, &a), epsilon = 1e-12);
            assert!(d(&a, &b) >= 0.0);
        }
    }

    #[test]
    fn finsler_norm_examples() {
        let q0 = model_square();
        assert_eq!(
            finsler_norm(&q0, &TangentVector::new(Vec2::zeros(), Vec2::new(1.0, 0.0))).unwrap(),
            1.0
        );
        assert_eq!(
            finsler_norm(&q0, &TangentVector::new(Vec2::zeros(), Vec2::zeros())),
            Err(Error::ZeroVector)
        );
        let mut r = rng(23);
        for _ in 0..100 {
            let omega = random_convex_polygon(&mut r, 6);
            let p = random_interior(&mut r, &omega);
            let xi = Vec2::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
            let c: f64 = r.random_range(-4.0..4.0);
            let n = finsler_norm(&omega, &TangentVector::new(p, xi)).unwrap();
            let scaled = finsler_norm(&omega, &TangentVector::new(p, xi * c)).unwrap();
            assert_relative_eq!(scaled, c.abs() * n, max_relative = 1e-12);
            // one-sided difference quotient with one Richardson step
            let h = 1e-5;
            let dq = |s: f64| hilbert_distance(&omega, &p, &(p + xi * s)).unwrap() / s;
            let fd = 2.0 * dq(h) - dq(2.0 * h);
            assert!((fd - n).abs() <= 1e-6 * n.max(1.0), "{fd} vs {n}");
        }
    }

    #[test]
    fn unit_ball_of_triangle() {
        let t0 = model_triangle();
        let (x, y) = (0.4, 0.7);
        let ball = unit_ball(&t0, &Vec2::new(x, y)).unwrap().vertices();
        let expected = [
            Vec2::new(x, y) * (x + y - 2.0),
            Vec2::new(x * (2.0 - x), -x * y),
            Vec2::new(-x * y, y * (2.0 - y)),
        ];
        assert_eq!(ball.len(), 6);
        for e in expected {
            assert!(contains_point(&ball, e, 1e-14) && contains_point(&ball, -e, 1e-14));
        }
    }

    #[test]
    fn unit_ball_of_square() {
        let q0 = model_square();
        let ball = unit_ball(&q0, &Vec2::new(0.5, 0.0)).unwrap().vertices();
        for e in [
            Vec2::new(0.5, 1.0),
            Vec2::new(-0.75, 0.5),
            Vec2::new(-0.75, -0.5),
            Vec2::new(0.5, -1.0),
        ] {
            assert!(contains_point(&ball, e, 1e-14));
        }
        // case |y| < x in general
        let (x, y) = (0.6, -0.2);
        let ball = unit_ball(&q0, &Vec2::new(x, y)).unwrap().vertices();
        let cases = [
            Vec2::new(1.0 - x, 1.0 - y) * (1.0 + y),
            Vec2::new(-(1.0 + x), 1.0 - y) * (1.0 - x),
            -Vec2::new(1.0 + x, 1.0 + y) * (1.0 - x),
            -Vec2::new(-(1.0 - x), 1.0 + y) * (1.0 - y),
        ];
        for e in cases {
            assert!(contains_point(&ball, e, 1e-14), "{e}");
        }
    }

    #[test]
    fn unit_ball_on_diagonal_merges() {
        let ball = unit_ball(&model_square(), &Vec2::zeros()).unwrap();
        assert_eq!(ball.len(), 4);
    }

    #[test]
    fn dual_examples() {
        let diamond =
            CentrallySymmetricPolygon::from_generators(&[Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)])
                .unwrap();
        let square = dual_polygon(&diamond).unwrap();
        assert_eq!(square.len(), 4);
        for v in square.vertices() {
            assert_relative_eq!(v.x.abs(), 1.0, epsilon = 1e-15);
            assert_relative_eq!(v.y.abs(), 1.0, epsilon = 1e-15);
        }
        let back = dual_polygon(&square).unwrap();
        assert!(back
            .vertices()
            .iter()
            .all(|v| (v.x.abs() + v.y.abs() - 1.0).abs() < 1e-15 && v.x * v.y == 0.0));
    }

    #[test]
    fn dual_support_function() {
        let mut r = rng(24);
        for _ in 0..200 {
            let gens: Vec<Vec2> = (0..3)
                .map(|_| Vec2::new(r.random_range(-2.0..2.0), r.random_range(-2.0..2.0)))
                .collect();
            let Ok(ball) = CentrallySymmetricPolygon::from_generators(&gens) else {
                continue;
            };
            let dual = dual_polygon(&ball).unwrap();
            let verts = ball.vertices();
            for w in dual.vertices() {
                let support = verts
                    .iter()
                    .map(|v| v.dot(&w))
                    .fold(f64::NEG_INFINITY, f64::max);
                assert_relative_eq!(support, 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn dual_ball_area_examples() {
        assert_relative_eq!(
            dual_ball_area(&model_triangle(), &Vec2::new(2.0 / 3.0, 2.0 / 3.0)).unwrap(),
            81.0 / 16.0,
            epsilon = 1e-13
        );
        assert_relative_eq!(
            integrand_t0(2.0 / 3.0, 2.0 / 3.0).unwrap(),
            81.0 / 16.0,
            epsilon = 1e-14
        );
        // the unit ball at the centre of the square is the square itself, whose dual is the
        // diamond of area 2; at (1/2, 0) the octagon dual has area 10/3
        assert_relative_eq!(
            dual_ball_area(&model_square(), &Vec2::zeros()).unwrap(),
            2.0,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            dual_ball_area(&model_square(), &Vec2::new(0.5, 0.0)).unwrap(),
            10.0 / 3.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(integrand_q0(0.5, 0.0).unwrap(), 5.0 / 3.0, epsilon = 1e-15);
        assert_eq!(integrand_q0(0.0, 0.0).unwrap(), 1.0);
        assert!(integrand_q0(1.0, 0.0).is_err());
        assert!(integrand_t0(1.0, 1.0).is_err());
    }

    #[test]
    fn closed_form_symmetries() {
        let mut r = rng(25);
        for _ in 0..100 {
            let (x, y) = (r.random_range(-0.99..0.99), r.random_range(-0.99..0.99));
            let a = integrand_q0(x, y).unwrap();
            for (u, v) in [
                (y, x),
                (-x, y),
                (x, -y),
                (-y, -x),
                (-x, -y),
                (y, -x),
                (-y, x),
            ] {
                assert_eq!(integrand_q0(u, v).unwrap(), a);
            }
            let (s, t) = (r.random_range(0.01..1.0), r.random_range(0.01..0.99));
            assert_relative_eq!(
                integrand_t0(s, t).unwrap(),
                integrand_t0(t, s).unwrap(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn closed_forms_match_pipeline() {
        let mut r = rng(26);
        for _ in 0..1000 {
            let (x, y) = (r.random_range(-0.99..0.99), r.random_range(-0.99..0.99));
            let pipe = dual_ball_area(&model_square(), &Vec2::new(x, y)).unwrap();
            // the square integrand carries half the dual-ball area
            assert!((pipe - 2.0 * integrand_q0(x, y).unwrap()).abs() <= 1e-10 * pipe.max(1.0));
            let (s, t) = (r.random_range(0.01..1.99), r.random_range(0.01..1.99));
            if s + t < 1.99 {
                let pipe = dual_ball_area(&model_triangle(), &Vec2::new(s, t)).unwrap();
                assert!((pipe - integrand_t0(s, t).unwrap()).abs() <= 1e-10 * pipe.max(1.0));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn unit_ball_vertices_have_norm_one(seed in any::<u64>(), k in 3usize..9) {
            let mut r = rng(seed);
            let omega = random_convex_polygon(&mut r, k);
            let p = random_interior(&mut r, &omega);
            let ball = unit_ball(&omega, &p).unwrap();
            let verts = ball.vertices();
            prop_assert!(verts.len() >= k && verts.len() <= 2 * k);
            for (i, v) in verts.iter().enumerate() {
                let n = finsler_norm(&omega, &TangentVector::new(p, *v)).unwrap();
                prop_assert!((n - 1.0).abs() <= 1e-10);
                let mid = (v + verts[(i + 1) % verts.len()]) / 2.0;
                prop_assert!(finsler_norm(&omega, &TangentVector::new(p, mid)).unwrap() <= 1.0 + 1e-10);
            }
            // every vertex lies on a line through the origin and a vertex of Ω − p
            for v in &verts {
                prop_assert!(omega.vertices().iter().any(|z| cross2(v, &(z - p)).abs() <= 1e-10 * v.norm() * (z - p).norm()));
            }
        }

        #[test]
        fn duality_is_an_involution(seed in any::<u64>(), k in 3usize..9) {
            let mut r = rng(seed);
            let omega = random_convex_polygon(&mut r, k);
            let ball = unit_ball(&omega, &random_interior(&mut r, &omega)).unwrap();
            let back = dual_polygon(&dual_polygon(&ball).unwrap()).unwrap();
            prop_assert_eq!(back.len(), ball.len());
            for (a, b) in back.vertices().iter().zip(ball.vertices()) {
                prop_assert!((a - b).norm() <= 1e-10 * b.norm().max(1.0));
            }
        }

        #[test]
        fn dual_area_decreases_with_the_domain(seed in any::<u64>(), k in 3usize..8, grow in 1.01f64..2.0) {
            let mut r = rng(seed);
            let omega = random_convex_polygon(&mut r, k);
            let p = random_interior(&mut r, &omega);
            // a larger domain: scale about p, then add an extra vertex outside
            let c = omega.centroid();
            let mut bigger: Vec<Vec2> = omega.vertices().iter().map(|v| p + (v - p) * grow).collect();
            let v0 = bigger[0];
            bigger.insert(1, v0 + (v0 - c) * 0.01 + (bigger[1] - v0) * 0.5);
            let big = ConvexPolygon::new(bigger).or_else(|_| ConvexPolygon::new(omega.vertices().iter().map(|v| p + (v - p) * grow).collect())).unwrap();
            prop_assert!(dual_ball_area(&omega, &p).unwrap() >= dual_ball_area(&big, &p).unwrap() * (1.0 - 1e-12));
        }

        #[test]
        fn distance_is_projectively_invariant(seed in any::<u64>(), k in 3usize..8) {
            let mut r = rng(seed);
            let omega = random_convex_polygon(&mut r, k);
            let map = random_transform(&mut r, omega.vertices());
            let (p, q) = (random_interior(&mut r, &omega), random_interior(&mut r, &omega));
            let image = omega.transformed(&map).unwrap();
            let d0 = hilbert_distance(&omega, &p, &q).unwrap();
            let d1 = hilbert_distance(&image, &map.apply(&p).unwrap(), &map.apply(&q).unwrap()).unwrap();
            prop_assert!((d0 - d1).abs() <= 1e-9 * d0.max(1.0));
        }
    }

    #[test]
    fn triangle_closed_form_matches_pipeline() {
        let mut r = rng(27);
        for _ in 0..1000 {
            let (x, y) = (r.random_range(0.01..1.98), r.random_range(0.01..1.98));
            if x + y >= 1.99 {
                continue;
            }
            let pipe = dual_ball_area(&model_triangle(), &Vec2::new(x, y)).unwrap();
            let closed = integrand_t0(x, y).unwrap();
            assert!(
                (pipe - closed).abs() <= 1e-10 * closed,
                "{x} {y}: {pipe} vs {closed}"
            );
        }
    }
}
