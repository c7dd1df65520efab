//! The real dilogarithm and the exact area formulas.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// `B_n / (n+1)!` for even `n = 2, 4, …, 20`.
const BERNOULLI: [f64; 10] = [
    1.0 / 36.0,
    -1.0 / 3600.0,
    1.0 / 211680.0,
    -1.0 / 10886400.0,
    1.0 / 526901760.0,
    -4.064761645144226e-11,
    8.921691020456453e-13,
    -1.993929586072108e-14,
    4.518980029619918e-16,
    -1.035651761218125e-17,
];

/// Real dilogarithm `Li₂(x) = −∫₀ˣ ln(1−v)/v dv` for `x ≤ 1`.
pub fn li2(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(Error::Domain(format!("li2 needs x <= 1, got {x}")));
    }
    Ok(if x == 1.0 {
        PI2_6
    } else if x < -1.0 {
        let l = (-x).ln();
        -PI2_6 - 0.5 * l * l - li2_series(1.0 / x)
    } else if x > 0.5 {
        PI2_6 - x.ln() * (-x).ln_1p() - li2_series(1.0 - x)
    } else {
        li2_series(x)
    })
}

/// Series in `u = −ln(1−x)`; converges fast for `x ∈ [−1, ½]`, where `|u| ≤ ln 2`.
fn li2_series(x: f64) -> f64 {
    let u = -(-x).ln_1p();
    let u2 = u * u;
    let mut power = u * u2;
    let mut tail = 0.0;
    for c in BERNOULLI {
        tail += c * power;
        power *= u2;
    }
    u - 0.25 * u2 + tail
}

fn li2_unchecked(x: f64) -> f64 {
    li2(x).expect("argument within the real branch")
}

/// Holmes–Thompson area of the ideal triangle with triple ratio `t`.
pub fn triangle_volume(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!(
            "triple ratio must be positive, got {t}"
        )));
    }
    let l = t.ln();
    Ok(3.0 / (8.0 * PI) * (PI * PI + l * l))
}

/// Area of the hyperbolic quadrilateral with double ratio `d`.
///
/// For `d > 10⁶` the formula is evaluated at `1/d`; the area is symmetric under
/// `d ↦ 1/d` and the small-argument side is free of cancellation.
pub fn hyperbolic_quad_volume(d: f64) -> Result<f64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::Domain(format!(
            "double ratio must be positive, got {d}"
        )));
    }
    let d = if d > 1e6 { 1.0 / d } else { d };
    let li = li2_unchecked;
    let dilogs = -li(-2.0 * d) + 2.0 * li(-d / (1.0 + d))
        - 2.0 * li(-(1.0 + d))
        - 2.0 * li(d / (1.0 + d))
        - li(d / (2.0 + d))
        + li(-d / (2.0 + d))
        - 2.0 * li(-d)
        - li(-(1.0 + 2.0 * d));
    let l2 = (2.0 / (1.0 + d)).ln();
    let logs = -2.0 * d.ln_1p() * (2.0 * d / (1.0 + d)).ln()
        + l2 * (-3.0 * l2 + ((2.0 + 4.0 * d) / (1.0 + d)).ln() + 4.0f64.ln())
        - (4.0 * d / (1.0 + d)).ln() * (2.0 * d).ln_1p();
    Ok((dilogs + logs + PI * PI / 2.0) / (2.0 * PI))
}

/// `∫_Q A` over the hyperbolic quadrilateral with parameter `α ∈ (−1, 1)`,
/// written directly in `α`. Equals `π · hyperbolic_quad_volume((1+α)/(1−α))`.
pub fn hyperbolic_quad_integral_alpha(alpha: f64) -> Result<f64> {
    if !(alpha > -1.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "alpha must lie in (-1, 1), got {alpha}"
        )));
    }
    let a = alpha;
    let li = li2_unchecked;
    let dilogs = -2.0 * li(-2.0 * (1.0 + a) / (1.0 - a)) + 4.0 * li(-(a + 1.0) / 2.0)
        - 4.0 * li(2.0 / (a - 1.0))
        - 4.0 * li((a + 1.0) / 2.0)
        - 2.0 * li((a + 1.0) / (3.0 - a))
        + 2.0 * li((a + 1.0) / (a - 3.0))
        - 4.0 * li((a + 1.0) / (a - 1.0))
        - 2.0 * li((a + 3.0) / (a - 1.0));
    let l1 = (-a).ln_1p();
    let logs = -4.0 * (2.0 / (1.0 - a)).ln() * a.ln_1p()
        + 2.0 * l1 * (-3.0 * l1 + (a + 3.0).ln() + 4.0f64.ln())
        + 2.0 * (2.0 * (a + 1.0)).ln() * ((1.0 - a) / (3.0 + a)).ln();
    Ok((dilogs + logs + PI * PI) / 4.0)
}

/// The α-parameter of the hyperbolic quadrilateral with double ratio `d`.
pub fn hyperbolic_alpha(d: f64) -> f64 {
    (d - 1.0) / (d + 1.0)
}

/// Second α-derivative of `4∫_Q A` at the symmetric square.
pub fn hyperbolic_second_derivative_at_sym() -> f64 {
    32.0 * LN_2 / 9.0 + 8.0 * 3.0f64.ln() - 16.0
}

/// `2∫_{T_α} A` in closed form, for `α ∈ [0, 1)`.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha must lie in [0, 1), got {alpha}"
        )));
    }
    let lp = alpha.ln_1p();
    let lm = (-alpha).ln_1p();
    Ok(li2_unchecked((1.0 - alpha) / 2.0) - PI * PI / 12.0
        + LN_2 * LN_2 / 2.0
        + 0.25 * (lp * lp - 4.0 * LN_2 * lm + 3.0 * lm * lm - 2.0 * lm * lp))
}

/// Half-width of the central square `Q′`: `(1−αβ)/(2−α−β)`.
pub fn gamma_of(alpha: f64, beta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) || !(0.0..1.0).contains(&beta) {
        return Err(Error::Domain(format!(
            "need 0 <= alpha, beta < 1, got ({alpha}, {beta})"
        )));
    }
    Ok((1.0 - alpha * beta) / (2.0 - alpha - beta))
}
