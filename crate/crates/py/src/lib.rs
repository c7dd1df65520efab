//! Python bindings for the htarea library.

use htarea::closed_forms;
use htarea::flags::{self, fg_to_normalized, normalized_to_fg};
use htarea::hilbert;
use htarea::quadrature::ht_area;
use htarea::surfaces;
use htarea::{ConvexPolygon, FGQuadCoords, QuadratureSpec, Strategy, TangentVector, Vec2};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: htarea::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn points(vertices: &[(f64, f64)]) -> Vec<Vec2> {
    vertices.iter().map(|&(x, y)| Vec2::new(x, y)).collect()
}

fn polygon(vertices: &[(f64, f64)]) -> PyResult<ConvexPolygon> {
    ConvexPolygon::new(points(vertices)).map_err(py_err)
}

fn spec(tol: f64, general: bool) -> PyResult<QuadratureSpec> {
    let strategy = if general {
        Strategy::GeneralDualBall
    } else {
        Strategy::ClosedForm
    };
    Ok(QuadratureSpec::with_tol(tol)
        .map_err(py_err)?
        .with_strategy(strategy))
}

/// Holmes-Thompson area with its error estimate.
#[pyclass(frozen, get_all, skip_from_py_object)]
#[derive(Clone, Copy)]
struct Area {
    value: f64,
    error_estimate: f64,
    node_count: usize,
}

#[pymethods]
impl Area {
    fn __repr__(&self) -> String {
        format!(
            "Area(value={}, error_estimate={:e})",
            self.value, self.error_estimate
        )
    }

    fn __float__(&self) -> f64 {
        self.value
    }
}

impl From<htarea::AreaResult> for Area {
    fn from(r: htarea::AreaResult) -> Self {
        Area {
            value: r.value,
            error_estimate: r.error_estimate,
            node_count: r.node_count,
        }
    }
}

/// Triple and double ratios `(t, tp, d, dp)` of a positive quadruple of flags.
#[pyclass(frozen, get_all, skip_from_py_object)]
#[derive(Clone, Copy)]
struct QuadCoords {
    t: f64,
    tp: f64,
    d: f64,
    dp: f64,
}

impl QuadCoords {
    fn inner(&self) -> FGQuadCoords {
        FGQuadCoords {
            t: self.t,
            tp: self.tp,
            d: self.d,
            dp: self.dp,
        }
    }
}

impl From<FGQuadCoords> for QuadCoords {
    fn from(c: FGQuadCoords) -> Self {
        QuadCoords {
            t: c.t,
            tp: c.tp,
            d: c.d,
            dp: c.dp,
        }
    }
}

#[pymethods]
impl QuadCoords {
    #[new]
    fn new(t: f64, tp: f64, d: f64, dp: f64) -> PyResult<Self> {
        Ok(FGQuadCoords::new(t, tp, d, dp).map_err(py_err)?.into())
    }

    /// Parameters `(alpha1, alpha2, beta1, beta2)` of the normalized quadrilateral.
    fn normalized(&self) -> (f64, f64, f64, f64) {
        let p = fg_to_normalized(&self.inner());
        (p.alpha1, p.alpha2, p.beta1, p.beta2)
    }

    /// The same quadruple read along the other diagonal.
    fn flip(&self) -> QuadCoords {
        flags::flip_diagonal(&self.inner()).into()
    }

    #[pyo3(signature = (tol = 1e-7, general = false))]
    fn area(&self, tol: f64, general: bool) -> PyResult<Area> {
        let pair = fg_to_normalized(&self.inner()).inscribed_pair();
        Ok(ht_area(&pair, &spec(tol, general)?).map_err(py_err)?.into())
    }

    #[staticmethod]
    fn from_normalized(alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> PyResult<QuadCoords> {
        let p = flags::NormalizedQuadParams::new(alpha1, alpha2, beta1, beta2).map_err(py_err)?;
        Ok(normalized_to_fg(&p).into())
    }

    fn __repr__(&self) -> String {
        format!(
            "QuadCoords(t={}, tp={}, d={}, dp={})",
            self.t, self.tp, self.d, self.dp
        )
    }
}

/// Area of an inner polygon inscribed in an outer one; `incidence[i]` is the
/// outer edge carrying inner vertex `i`.
#[pyfunction]
#[pyo3(signature = (inner, outer, incidence, tol = 1e-7, general = false))]
fn inscribed_area(
    inner: Vec<(f64, f64)>,
    outer: Vec<(f64, f64)>,
    incidence: Vec<usize>,
    tol: f64,
    general: bool,
) -> PyResult<Area> {
    let pair =
        htarea::InscribedPair::new(points(&inner), points(&outer), incidence).map_err(py_err)?;
    Ok(ht_area(&pair, &spec(tol, general)?).map_err(py_err)?.into())
}

/// Area of the model triangle pair with triple ratio `t`.
#[pyfunction]
#[pyo3(signature = (t, tol = 1e-7))]
fn triangle_area(t: f64, tol: f64) -> PyResult<Area> {
    let pair = flags::triangle_pair(t).map_err(py_err)?;
    Ok(ht_area(&pair, &spec(tol, false)?).map_err(py_err)?.into())
}

/// Area of the inscribed pair given by a flag tuple, each flag a 3x2 matrix
/// `[[x1, x2], [y1, y2], [z1, z2]]` whose first column is the point.
#[pyfunction]
#[pyo3(signature = (tuple, tol = 1e-7))]
fn flag_tuple_area(tuple: Vec<[[f64; 2]; 3]>, tol: f64) -> PyResult<Area> {
    let flags = tuple
        .iter()
        .map(htarea::Flag::from_rows)
        .collect::<htarea::Result<Vec<_>>>()
        .map_err(py_err)?;
    let tuple = htarea::FlagTuple::new(flags).map_err(py_err)?;
    let pair = flags::polygons_from_flags(&tuple).map_err(py_err)?;
    Ok(ht_area(&pair, &spec(tol, false)?).map_err(py_err)?.into())
}

#[pyfunction]
fn hilbert_distance(outer: Vec<(f64, f64)>, p: (f64, f64), q: (f64, f64)) -> PyResult<f64> {
    hilbert::hilbert_distance(
        &polygon(&outer)?,
        &Vec2::new(p.0, p.1),
        &Vec2::new(q.0, q.1),
    )
    .map_err(py_err)
}

#[pyfunction]
fn finsler_norm(outer: Vec<(f64, f64)>, base: (f64, f64), direction: (f64, f64)) -> PyResult<f64> {
    let v = TangentVector::new(
        Vec2::new(base.0, base.1),
        Vec2::new(direction.0, direction.1),
    );
    hilbert::finsler_norm(&polygon(&outer)?, &v).map_err(py_err)
}

/// Vertices of the unit tangent ball at `p`, counter-clockwise.
#[pyfunction]
fn unit_ball(outer: Vec<(f64, f64)>, p: (f64, f64)) -> PyResult<Vec<(f64, f64)>> {
    let ball = hilbert::unit_ball(&polygon(&outer)?, &Vec2::new(p.0, p.1)).map_err(py_err)?;
    Ok(ball.vertices().iter().map(|v| (v.x, v.y)).collect())
}

#[pyfunction]
fn dual_ball_area(outer: Vec<(f64, f64)>, p: (f64, f64)) -> PyResult<f64> {
    hilbert::dual_ball_area(&polygon(&outer)?, &Vec2::new(p.0, p.1)).map_err(py_err)
}

#[pyfunction]
fn integrand_t0(x: f64, y: f64) -> PyResult<f64> {
    hilbert::integrand_t0(x, y).map_err(py_err)
}

#[pyfunction]
fn integrand_q0(x: f64, y: f64) -> PyResult<f64> {
    hilbert::integrand_q0(x, y).map_err(py_err)
}

#[pyfunction]
fn li2(x: f64) -> PyResult<f64> {
    closed_forms::li2(x).map_err(py_err)
}

#[pyfunction]
fn triangle_volume(t: f64) -> PyResult<f64> {
    closed_forms::triangle_volume(t).map_err(py_err)
}

#[pyfunction]
fn hyperbolic_quad_volume(d: f64) -> PyResult<f64> {
    closed_forms::hyperbolic_quad_volume(d).map_err(py_err)
}

#[pyfunction]
fn f_alpha(alpha: f64) -> PyResult<f64> {
    closed_forms::f_alpha(alpha).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (d, t, tol = 1e-7))]
fn s03_area_lower_bound(d: f64, t: f64, tol: f64) -> PyResult<Area> {
    Ok(surfaces::s03_area_lower_bound(d, t, &spec(tol, false)?)
        .map_err(py_err)?
        .into())
}

#[pyfunction]
#[pyo3(signature = (d, t, tol = 1e-7))]
fn asymptotic_ratio(d: f64, t: f64, tol: f64) -> PyResult<f64> {
    surfaces::asymptotic_ratio(d, t, &spec(tol, false)?).map_err(py_err)
}

#[pyfunction]
fn surface_lower_bound(chi: i64, ratios: Vec<f64>) -> PyResult<f64> {
    surfaces::surface_lower_bound(chi, &ratios).map_err(py_err)
}

#[pymodule]
fn htarea_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Area>()?;
    m.add_class::<QuadCoords>()?;
    m.add_function(wrap_pyfunction!(inscribed_area, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_area, m)?)?;
    m.add_function(wrap_pyfunction!(flag_tuple_area, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_distance, m)?)?;
    m.add_function(wrap_pyfunction!(finsler_norm, m)?)?;
    m.add_function(wrap_pyfunction!(unit_ball, m)?)?;
    m.add_function(wrap_pyfunction!(dual_ball_area, m)?)?;
    m.add_function(wrap_pyfunction!(integrand_t0, m)?)?;
    m.add_function(wrap_pyfunction!(integrand_q0, m)?)?;
    m.add_function(wrap_pyfunction!(li2, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_volume, m)?)?;
    m.add_function(wrap_pyfunction!(hyperbolic_quad_volume, m)?)?;
    m.add_function(wrap_pyfunction!(f_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(s03_area_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(asymptotic_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(surface_lower_bound, m)?)?;
    Ok(())
}
