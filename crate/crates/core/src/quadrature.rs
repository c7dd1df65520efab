//! Holmes–Thompson areas by adaptive cubature over convex regions whose
//! vertices may touch the singular boundary of the ambient polygon.
//!
//! A region is first cut along the integrand's kink lines and fan-triangulated.
//! Triangles touching an ideal vertex are integrated with a collapsed
//! Gauss–Legendre rule whose apex is the ideal vertex: the Jacobian of the
//! collapse cancels the inverse-distance growth of the integrand there. A
//! global priority queue then splits the cell with the largest discrepancy
//! between its own rule and the sum over its four children.

use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::InscribedPair;
use crate::hilbert::{dual_ball_area, model_square, model_triangle, q0_formula, t0_formula};
use crate::projective::{ConvexPolygon, Line, ProjTransform, Vec2};

const GAUSS_ORDER: usize = 12;
/// Refinement budget per integral, in cells.
const MAX_CELLS: usize = 400_000;

/// How [`ht_area`] evaluates dual-ball areas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Normalize triangles and quadrilaterals to the model domains and use
    /// their closed-form integrands; other polygons fall back to the general path.
    ClosedForm,
    /// Build the unit ball and its dual at every node.
    GeneralDualBall,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub max_depth: u32,
    pub strategy: Strategy,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-7,
            max_depth: 30,
            strategy: Strategy::ClosedForm,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, max_depth: u32, strategy: Strategy) -> Result<Self> {
        let spec = Self {
            rel_tol,
            max_depth,
            strategy,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_tol(rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, Self::default().max_depth, Strategy::ClosedForm)
    }

    pub fn with_strategy(self, strategy: Strategy) -> Self {
        Self { strategy, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-2) {
            return Err(Error::InvalidSpec(format!(
                "rel_tol must lie in (0, 1e-2], got {}",
                self.rel_tol
            )));
        }
        if self.max_depth > 40 {
            return Err(Error::InvalidSpec(format!(
                "max_depth must be at most 40, got {}",
                self.max_depth
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaResult {
    pub value: f64,
    pub error_estimate: f64,
    pub node_count: usize,
}

impl AreaResult {
    fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.abs(),
            ..self
        }
    }
}

/// A function on the plane, with the lines across which it fails to be smooth.
pub trait Integrand: Sync {
    fn eval(&self, p: &Vec2) -> f64;

    fn kinks(&self) -> Vec<Line> {
        Vec::new()
    }
}

/// Wraps a closure as a smooth integrand.
pub struct FnIntegrand<F>(pub F);

impl<F: Fn(&Vec2) -> f64 + Sync> Integrand for FnIntegrand<F> {
    fn eval(&self, p: &Vec2) -> f64 {
        (self.0)(p)
    }
}

/// Closed-form dual-ball area on the model square; kinked along `y = ±x`.
pub struct SquareIntegrand;

impl Integrand for SquareIntegrand {
    fn eval(&self, p: &Vec2) -> f64 {
        q0_formula(p.x, p.y)
    }

    fn kinks(&self) -> Vec<Line> {
        let o = Vec2::zeros();
        vec![
            Line::through(&o, &Vec2::new(1.0, 1.0)).expect("distinct points"),
            Line::through(&o, &Vec2::new(1.0, -1.0)).expect("distinct points"),
        ]
    }
}

/// Closed-form dual-ball area on the model triangle; smooth inside.
pub struct TriangleIntegrand;

impl Integrand for TriangleIntegrand {
    fn eval(&self, p: &Vec2) -> f64 {
        t0_formula(p.x, p.y)
    }
}

/// Dual-ball area of an arbitrary convex polygon, evaluated through the unit ball.
///
/// The combinatorics of the unit ball change only where the base point crosses
/// a line through two vertices of the polygon.
pub struct DualBallIntegrand<'a> {
    pub outer: &'a ConvexPolygon,
}

impl Integrand for DualBallIntegrand<'_> {
    fn eval(&self, p: &Vec2) -> f64 {
        dual_ball_area(self.outer, p).unwrap_or(f64::NAN)
    }

    fn kinks(&self) -> Vec<Line> {
        let v = self.outer.vertices();
        let n = v.len();
        let mut lines = Vec::new();
        for i in 0..n {
            // lines through adjacent vertices are edges and never cut the interior
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                lines.push(Line::through(&v[i], &v[j]).expect("distinct vertices"));
            }
        }
        lines
    }
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_ORDER;
        let mut rule = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            rule.push(((1.0 + x) / 2.0, w / 2.0));
        }
        rule
    })
}

/// Collapsed rule on the triangle `(apex, b, c)`: `x = apex + u(b − apex) + uv(c − b)`.
fn triangle_rule(f: &dyn Integrand, tri: &[Vec2; 3], evals: &mut usize) -> Result<f64> {
    let [a, b, c] = *tri;
    let jac = ((b - a).x * (c - a).y - (b - a).y * (c - a).x).abs();
    let rule = gauss_legendre();
    let mut sum = 0.0;
    for &(u, wu) in rule {
        let mut inner = 0.0;
        for &(v, wv) in rule {
            let p = a + (b - a) * u + (c - b) * (u * v);
            let y = f.eval(&p);
            if !y.is_finite() {
                return Err(Error::NonFiniteIntegrand { x: p.x, y: p.y });
            }
            inner += wv * y;
        }
        sum += wu * u * inner;
    }
    *evals += rule.len() * rule.len();
    Ok(sum * jac)
}

/// Four children; the first keeps the apex so singular cells stay singular at vertex 0.
fn split(tri: &[Vec2; 3]) -> [[Vec2; 3]; 4] {
    let [a, b, c] = *tri;
    let (ab, bc, ca) = ((a + b) / 2.0, (b + c) / 2.0, (c + a) / 2.0);
    [[a, ab, ca], [ab, b, bc], [ca, bc, c], [bc, ca, ab]]
}

struct Cell {
    tri: [Vec2; 3],
    depth: u32,
    /// Rule values of the four children.
    children: [f64; 4],
    value: f64,
    error: f64,
    id: usize,
}

impl Cell {
    fn new(
        f: &dyn Integrand,
        tri: [Vec2; 3],
        coarse: f64,
        depth: u32,
        id: usize,
        evals: &mut usize,
    ) -> Result<Self> {
        let kids = split(&tri);
        let mut children = [0.0; 4];
        for (slot, kid) in children.iter_mut().zip(&kids) {
            *slot = triangle_rule(f, kid, evals)?;
        }
        let value = pairwise_sum(&children);
        Ok(Self {
            tri,
            depth,
            children,
            value,
            error: (coarse - value).abs(),
            id,
        })
    }
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error
            .total_cmp(&other.error)
            .then(other.id.cmp(&self.id))
    }
}

/// Summation by recursive halving; deterministic and accurate.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n if n <= 8 => values.iter().sum(),
        n => pairwise_sum(&values[..n / 2]) + pairwise_sum(&values[n / 2..]),
    }
}

/// Integrates `f` over `region`. The vertices listed in `ideal` may sit on the
/// singular set of `f`; every other point of the closed region must not.
pub fn integrate_region(
    f: &dyn Integrand,
    region: &ConvexPolygon,
    ideal: &[usize],
    spec: &QuadratureSpec,
) -> Result<AreaResult> {
    spec.validate()?;
    let ideal_points: Vec<Vec2> = ideal
        .iter()
        .map(|&i| {
            region
                .vertices()
                .get(i)
                .copied()
                .ok_or_else(|| Error::Domain(format!("no vertex {i}")))
        })
        .collect::<Result<_>>()?;

    let mut pieces = vec![region.clone()];
    for line in f.kinks() {
        pieces = pieces
            .into_iter()
            .flat_map(|p| {
                if p.is_split_by(&line) {
                    let flipped = Line {
                        normal: -line.normal,
                        offset: -line.offset,
                    };
                    [p.clip(&line), p.clip(&flipped)]
                        .into_iter()
                        .flatten()
                        .collect()
                } else {
                    vec![p]
                }
            })
            .collect();
    }

    let snap = 1e-12 * region.size();
    let is_ideal = |v: &Vec2| ideal_points.iter().any(|q| (q - v).norm() <= snap);
    let mut triangles: Vec<[Vec2; 3]> = Vec::new();
    for piece in &pieces {
        let c = piece.centroid();
        let v = piece.vertices();
        let n = v.len();
        for i in 0..n {
            let (p, q) = (v[i], v[(i + 1) % n]);
            match (is_ideal(&p), is_ideal(&q)) {
                (true, true) => {
                    let m = (p + q) / 2.0;
                    triangles.push([p, m, c]);
                    triangles.push([q, c, m]);
                }
                (false, true) => triangles.push([q, c, p]),
                _ => triangles.push([p, q, c]),
            }
        }
    }

    let mut evals = 0;
    let mut heap = BinaryHeap::new();
    let mut done: Vec<Cell> = Vec::new();
    let mut next_id = 0;
    for tri in triangles {
        let coarse = triangle_rule(f, &tri, &mut evals)?;
        heap.push(Cell::new(f, tri, coarse, 0, next_id, &mut evals)?);
        next_id += 1;
    }

    let total = |heap: &BinaryHeap<Cell>, done: &[Cell]| {
        let mut cells: Vec<&Cell> = heap.iter().chain(done.iter()).collect();
        cells.sort_by_key(|c| c.id);
        let values: Vec<f64> = cells.iter().map(|c| c.value).collect();
        let errors: Vec<f64> = cells.iter().map(|c| c.error).collect();
        (pairwise_sum(&values), pairwise_sum(&errors))
    };
    let (mut value, mut error) = total(&heap, &done);
    let mut since_resum = 0;
    loop {
        if error <= spec.rel_tol * value.abs() {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        if worst.depth >= spec.max_depth {
            done.push(worst);
            continue;
        }
        if next_id >= MAX_CELLS {
            heap.push(worst);
            break;
        }
        value -= worst.value;
        error -= worst.error;
        for (kid, coarse) in split(&worst.tri).into_iter().zip(worst.children) {
            let cell = Cell::new(f, kid, coarse, worst.depth + 1, next_id, &mut evals)?;
            next_id += 1;
            value += cell.value;
            error += cell.error;
            heap.push(cell);
        }
        since_resum += 1;
        if since_resum == 256 {
            (value, error) = total(&heap, &done);
            since_resum = 0;
        }
    }
    let (value, error_estimate) = total(&heap, &done);
    let result = AreaResult {
        value,
        error_estimate,
        node_count: evals,
    };
    if error_estimate <= spec.rel_tol * value.abs() {
        Ok(result)
    } else {
        Err(Error::ToleranceNotReached {
            value,
            error_estimate,
            node_count: evals,
        })
    }
}

/// Holmes–Thompson area of the inner polygon in the Hilbert geometry of the outer one.
pub fn ht_area(pair: &InscribedPair, spec: &QuadratureSpec) -> Result<AreaResult> {
    spec.validate()?;
    let outer = pair.outer();
    let all: Vec<usize> = (0..pair.len()).collect();
    let integral = match (spec.strategy, pair.len()) {
        (Strategy::ClosedForm, 3) => {
            let v = outer.vertices();
            let m = model_triangle();
            let t = m.vertices();
            let map = ProjTransform::affine(&[v[0], v[1], v[2]], &[t[0], t[1], t[2]])?;
            integrate_region(
                &TriangleIntegrand,
                &pair.inner().transformed(&map)?,
                &all,
                spec,
            )?
        }
        (Strategy::ClosedForm, 4) => {
            let v = outer.vertices();
            let m = model_square();
            let s = m.vertices();
            let map = ProjTransform::from_correspondence(
                &[v[0], v[1], v[2], v[3]],
                &[s[0], s[1], s[2], s[3]],
            )?;
            integrate_region(
                &SquareIntegrand,
                &pair.inner().transformed(&map)?,
                &all,
                spec,
            )?
        }
        _ => integrate_region(&DualBallIntegrand { outer }, pair.inner(), &all, spec)?,
    };
    Ok(integral.scaled(1.0 / PI))
}
