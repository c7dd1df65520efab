use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::projective::{ConvexPolygon, ProjTransform, Vec2};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Points on a random ellipse at well separated random angles.
pub fn random_convex_polygon(r: &mut impl Rng, n: usize) -> ConvexPolygon {
    loop {
        let mut angles: Vec<f64> = (0..n)
            .map(|_| r.random_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|i| {
            let next = if i + 1 < n {
                angles[i + 1]
            } else {
                angles[0] + std::f64::consts::TAU
            };
            next - angles[i] > 0.15 && next - angles[i] < 2.6
        });
        if !gaps_ok {
            continue;
        }
        let (a, b) = (r.random_range(0.5..2.0), r.random_range(0.5..2.0));
        let rot: f64 = r.random_range(0.0..std::f64::consts::PI);
        let c = Vec2::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
        let pts = angles
            .iter()
            .map(|t| {
                let (x, y) = (a * t.cos(), b * t.sin());
                c + Vec2::new(rot.cos() * x - rot.sin() * y, rot.sin() * x + rot.cos() * y)
            })
            .collect();
        if let Ok(p) = ConvexPolygon::new(pts) {
            return p;
        }
    }
}

/// A random projective map whose line at infinity stays well away from `keep`.
pub fn random_transform(r: &mut impl Rng, keep: &[Vec2]) -> ProjTransform {
    loop {
        let m = nalgebra::Matrix3::from_fn(|i, j| {
            let base = if i == j { 1.0 } else { 0.0 };
            let spread = if i == 2 { 0.25 } else { 1.0 };
            base + spread * r.random_range(-1.0..1.0)
        });
        let Ok(t) = ProjTransform::new(m) else {
            continue;
        };
        let z: Vec<f64> = keep
            .iter()
            .map(|p| t.apply_h(&crate::projective::lift(p)).z)
            .collect();
        let norm = t.matrix().norm();
        let positive = z.iter().all(|&w| w > 0.2 * norm) || z.iter().all(|&w| w < -0.2 * norm);
        if positive && m.determinant().abs() > 0.1 {
            return t;
        }
    }
}

/// A random outer polygon with one random point inside each edge.
pub fn random_inscribed_pair(r: &mut impl Rng, k: usize) -> crate::flags::InscribedPair {
    let outer = random_convex_polygon(r, k);
    let v = outer.vertices();
    let inner = (0..k)
        .map(|i| v[i] + (v[(i + 1) % k] - v[i]) * r.random_range(0.15..0.85))
        .collect();
    crate::flags::InscribedPair::new(inner, v.to_vec(), (0..k).collect())
        .expect("valid random pair")
}
