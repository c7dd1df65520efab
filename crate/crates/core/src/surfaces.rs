//! The thrice-punctured sphere family and lower bounds for surface areas.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::closed_forms::triangle_volume;
use crate::error::{Error, Result};
use crate::flags::{fg_to_normalized, polygons_from_flags, FGQuadCoords, FlagTuple};
use crate::quadrature::{ht_area, AreaResult, QuadratureSpec};

/// Fock–Goncharov parameters of the balanced ideal triangulation of the
/// thrice-punctured sphere: edge ratios `r, b, g` and triangle ratios `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct S03Params {
    pub r1: f64,
    pub r2: f64,
    pub b1: f64,
    pub b2: f64,
    pub g1: f64,
    pub g2: f64,
    pub t1: f64,
    pub t2: f64,
}

impl S03Params {
    /// `r₁g₂, b₁r₂, g₁b₂, r₂g₁t₁t₂, b₁r₂t₁t₂, g₁b₂t₁t₂`, each minus one.
    pub fn residuals(&self) -> [f64; 6] {
        let tt = self.t1 * self.t2;
        [
            self.r1 * self.g2 - 1.0,
            self.b1 * self.r2 - 1.0,
            self.g1 * self.b2 - 1.0,
            self.r2 * self.g1 * tt - 1.0,
            self.b1 * self.r2 * tt - 1.0,
            self.g1 * self.b2 * tt - 1.0,
        ]
    }
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {x}")))
    }
}

/// Parameters determined by one double ratio `d` and one triple ratio `t`,
/// closing the system with `r₁r₂ = 1`.
pub fn s03_parameters(d: f64, t: f64) -> Result<S03Params> {
    let (d, t) = (positive("d", d)?, positive("t", t)?);
    Ok(S03Params {
        r1: d,
        r2: 1.0 / d,
        b1: d,
        b2: 1.0 / d,
        g1: d,
        g2: 1.0 / d,
        t1: t,
        t2: 1.0 / t,
    })
}

/// The normalized quadruple with coordinates `(t, 1/t, d, 1/d)`.
pub fn quadruple_family(d: f64, t: f64) -> Result<FlagTuple> {
    let (d, t) = (positive("d", d)?, positive("t", t)?);
    Ok(fg_to_normalized(&FGQuadCoords::new(t, 1.0 / t, d, 1.0 / d)?).flags())
}

/// Area of the quadrilateral formed by two adjacent ideal triangles, a lower
/// bound for the area of the whole surface.
pub fn s03_area_lower_bound(d: f64, t: f64, spec: &QuadratureSpec) -> Result<AreaResult> {
    ht_area(&polygons_from_flags(&quadruple_family(d, t)?)?, spec)
}

/// `s03_area_lower_bound / (ln²d + ln²t)`.
pub fn asymptotic_ratio(d: f64, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    let (ld, lt) = (positive("d", d)?.ln(), positive("t", t)?.ln());
    let scale = ld * ld + lt * lt;
    if scale == 0.0 {
        return Err(Error::Domain("the ratio is undefined at d = t = 1".into()));
    }
    Ok(s03_area_lower_bound(d, t, spec)?.value / scale)
}

/// Sum of the ideal-triangle areas of a triangulated surface of Euler
/// characteristic `euler_char`, given its `−2χ` triple ratios.
pub fn surface_lower_bound(euler_char: i64, triple_ratios: &[f64]) -> Result<f64> {
    if euler_char >= 0 {
        return Err(Error::Domain(format!(
            "Euler characteristic must be negative, got {euler_char}"
        )));
    }
    let expected = (-2 * euler_char) as usize;
    if triple_ratios.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: triple_ratios.len(),
        });
    }
    let mut logs = 0.0;
    for &t in triple_ratios {
        logs += positive("triple ratio", t)?.ln().powi(2);
    }
    Ok(3.0 / 8.0 * (-2.0 * PI * euler_char as f64) + 3.0 / (8.0 * PI) * logs)
}

/// The same bound as a sum of per-triangle areas.
pub fn surface_lower_bound_by_triangles(triple_ratios: &[f64]) -> Result<f64> {
    triple_ratios.iter().map(|&t| triangle_volume(t)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::normalized_to_fg;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn parameters_at_the_symmetric_point() {
        let p = s03_parameters(1.0, 1.0).unwrap();
        assert_eq!([p.r1, p.r2, p.b1, p.b2, p.g1, p.g2, p.t1, p.t2], [1.0; 8]);
        assert!(s03_parameters(0.0, 1.0).is_err());
        assert!(s03_parameters(1.0, -2.0).is_err());
    }

    #[test]
    fn parameter_residuals_vanish() {
        let p = s03_parameters(2.0, 3.0).unwrap();
        assert!(
            p.residuals().iter().all(|r| r.abs() < 1e-14),
            "{:?}",
            p.residuals()
        );
    }

    proptest! {
        #[test]
        fn relation_chains_hold(ld in -10.0f64..10.0, lt in -10.0f64..10.0) {
            let p = s03_parameters(ld.exp(), lt.exp()).unwrap();
            prop_assert!(p.residuals().iter().all(|r| r.abs() <= 1e-12));
            // adjacent triangles: tt′ = 1 and dd′ = r₁r₂ = 1
            prop_assert!((p.t1 * p.t2 - 1.0).abs() <= 1e-12 && (p.r1 * p.r2 - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn family_is_positive_with_the_requested_coords(ld in -6.0f64..6.0, lt in -6.0f64..6.0) {
            let (d, t) = (ld.exp(), lt.exp());
            let quad = quadruple_family(d, t).unwrap();
            prop_assert!(quad.is_positive());
            let c = quad.quad_coords().unwrap();
            for (got, want) in [(c.t, t), (c.tp, 1.0 / t), (c.d, d), (c.dp, 1.0 / d)] {
                prop_assert!((got - want).abs() <= 1e-10 * want.max(1.0));
            }
        }
    }

    #[test]
    fn family_at_the_symmetric_point_is_the_square() {
        let c = quadruple_family(1.0, 1.0).unwrap().quad_coords().unwrap();
        let p = fg_to_normalized(&c);
        for x in [p.alpha1, p.alpha2, p.beta1, p.beta2] {
            assert!(x.abs() < 1e-14);
        }
        let back = normalized_to_fg(&p);
        assert_relative_eq!(back.t, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn surface_bound_examples() {
        assert_eq!(
            surface_lower_bound(-1, &[1.0, 1.0]).unwrap(),
            3.0 * PI / 4.0
        );
        let e = std::f64::consts::E;
        assert_relative_eq!(
            surface_lower_bound(-1, &[e, 1.0 / e]).unwrap(),
            3.0 * PI / 4.0 + 3.0 / (4.0 * PI),
            max_relative = 1e-15
        );
        assert_eq!(
            surface_lower_bound(-2, &[1.0; 3]),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 3
            })
        );
        assert!(surface_lower_bound(0, &[]).is_err());
        assert!(surface_lower_bound(-1, &[1.0, 0.0]).is_err());
    }

    #[test]
    fn ratio_undefined_at_the_symmetric_point() {
        assert!(asymptotic_ratio(1.0, 1.0, &QuadratureSpec::default()).is_err());
    }
}
