#![allow(dead_code)]

use htarea::flags::{fg_to_normalized, flags_from_inscribed_pair, triple_ratio};
use htarea::{FGQuadCoords, InscribedPair};

pub fn triangle_pair(t: f64) -> InscribedPair {
    htarea::flags::triangle_pair(t).unwrap()
}

pub fn triangle_ratio(pair: &InscribedPair) -> f64 {
    let tuple = flags_from_inscribed_pair(pair).unwrap();
    let f = tuple.flags();
    triple_ratio(&f[0], &f[1], &f[2]).unwrap()
}

/// The quadrilateral with coordinates `(1, 1, d, d)`.
pub fn hyperbolic_pair(d: f64) -> InscribedPair {
    fg_to_normalized(&FGQuadCoords::new(1.0, 1.0, d, d).unwrap()).inscribed_pair()
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi / lo).ln() * i as f64 / (n - 1) as f64).exp())
        .collect()
}
