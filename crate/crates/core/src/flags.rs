//! Flags in ℝ³, their triple and double ratios, positivity, and the
//! correspondence between positive tuples and inscribed polygon pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projective::{
    cross2, lift, normalized_wedge3, wedge3, ConvexPolygon, ProjTransform, Vec2, Vec3,
};
use crate::tol;

/// A point on a line of the projective plane, given by `e1` (the point) and a
/// second vector `e2` so that `e1, e2` span the line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flag {
    e1: Vec3,
    e2: Vec3,
}

impl Flag {
    pub fn new(e1: Vec3, e2: Vec3) -> Result<Self> {
        let finite = e1.iter().chain(e2.iter()).all(|c| c.is_finite());
        if !finite || e1.cross(&e2).norm() <= tol::GENERAL_POSITION * e1.norm() * e2.norm() {
            return Err(Error::DegenerateConfiguration(
                "flag vectors are dependent".into(),
            ));
        }
        Ok(Self { e1, e2 })
    }

    /// The flag at affine point `p` on the line through `p` and `q`.
    pub fn from_points(p: &Vec2, q: &Vec2) -> Result<Self> {
        Self::new(lift(p), lift(q))
    }

    pub fn e1(&self) -> &Vec3 {
        &self.e1
    }

    pub fn e2(&self) -> &Vec3 {
        &self.e2
    }

    /// Normal of the plane spanned by `e1, e2`.
    pub fn line(&self) -> Vec3 {
        self.e1.cross(&self.e2)
    }

    pub fn transformed(&self, map: &ProjTransform) -> Flag {
        Flag {
            e1: map.apply_h(&self.e1),
            e2: map.apply_h(&self.e2),
        }
    }

    /// 3×2 matrix with columns `e1, e2`, row-major.
    pub fn to_rows(&self) -> [[f64; 2]; 3] {
        [0, 1, 2].map(|i| [self.e1[i], self.e2[i]])
    }

    pub fn from_rows(rows: &[[f64; 2]; 3]) -> Result<Self> {
        Self::new(
            Vec3::from_fn(|i, _| rows[i][0]),
            Vec3::from_fn(|i, _| rows[i][1]),
        )
    }
}

/// A wedge factor of a ratio, rejected when it vanishes relative to its inputs.
fn factor(a: &Vec3, b: &Vec3, c: &Vec3) -> Result<f64> {
    let w = wedge3(a, b, c);
    if w.abs() <= tol::GENERAL_POSITION * a.norm() * b.norm() * c.norm() {
        Err(Error::NotGeneralPosition)
    } else {
        Ok(w)
    }
}

/// Triple ratio `T(E, F, G)`.
pub fn triple_ratio(e: &Flag, f: &Flag, g: &Flag) -> Result<f64> {
    let (e1, e2, f1, f2, g1, g2) = (&e.e1, &e.e2, &f.e1, &f.e2, &g.e1, &g.e2);
    Ok(
        factor(e1, e2, f1)? / factor(f1, g1, g2)? * factor(e1, g1, g2)? / factor(e1, f1, f2)?
            * factor(f1, f2, g1)?
            / factor(e1, e2, g1)?,
    )
}

/// First double ratio `D₁(E, F, G, H)`.
pub fn double_ratio_1(e: &Flag, f: &Flag, g: &Flag, h: &Flag) -> Result<f64> {
    let (e1, f1, g1, g2, h1) = (&e.e1, &f.e1, &g.e1, &g.e2, &h.e1);
    Ok(-factor(e1, g1, f1)? / factor(e1, g1, h1)? * factor(g1, g2, h1)? / factor(g1, g2, f1)?)
}

/// Second double ratio `D₂(E, F, G, H)`.
pub fn double_ratio_2(e: &Flag, f: &Flag, g: &Flag, h: &Flag) -> Result<f64> {
    let (e1, e2, f1, g1, h1) = (&e.e1, &e.e2, &f.e1, &g.e1, &h.e1);
    Ok(-factor(e1, e2, f1)? / factor(e1, e2, h1)? * factor(e1, g1, h1)? / factor(e1, g1, f1)?)
}

/// An ordered tuple of at least three flags in general position, stored in
/// counter-clockwise boundary order when positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[[f64; 2]; 3]>", into = "Vec<[[f64; 2]; 3]>")]
pub struct FlagTuple {
    flags: Vec<Flag>,
}

impl FlagTuple {
    /// Validates general position. A positive tuple given in clockwise order is
    /// reversed to `(F₀, F_{k−1}, …, F₁)`.
    pub fn new(flags: Vec<Flag>) -> Result<Self> {
        let k = flags.len();
        if k < 3 {
            return Err(Error::InvalidPolygon(format!("{k} flags, need at least 3")));
        }
        check_general_position(&flags)?;
        let mut tuple = Self { flags };
        if tuple.is_positive() {
            if let Ok(chart) = Chart::select(&tuple.flags) {
                if chart.signed_area() < 0.0 {
                    tuple.flags[1..].reverse();
                }
            }
        }
        Ok(tuple)
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Positivity over all order-respecting sub-triples and sub-quadruples.
    pub fn is_positive(&self) -> bool {
        let f = &self.flags;
        let k = f.len();
        let pos = |r: Result<f64>| matches!(r, Ok(v) if v > 0.0);
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    if !pos(triple_ratio(&f[i], &f[j], &f[l])) {
                        return false;
                    }
                    for m in l + 1..k {
                        if !pos(double_ratio_1(&f[i], &f[j], &f[l], &f[m]))
                            || !pos(double_ratio_2(&f[i], &f[j], &f[l], &f[m]))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn transformed(&self, map: &ProjTransform) -> Result<FlagTuple> {
        FlagTuple::new(self.flags.iter().map(|f| f.transformed(map)).collect())
    }

    /// `(t, t′, d, d′)` of a quadruple `(E, F, G, H)`.
    pub fn quad_coords(&self) -> Result<FGQuadCoords> {
        let [e, f, g, h] = self.flags[..] else {
            return Err(Error::InvalidPolygon(format!(
                "{} flags, need 4",
                self.len()
            )));
        };
        FGQuadCoords::new(
            triple_ratio(&e, &f, &g)?,
            triple_ratio(&e, &g, &h)?,
            double_ratio_1(&e, &f, &g, &h)?,
            double_ratio_2(&e, &f, &g, &h)?,
        )
    }
}

impl TryFrom<Vec<[[f64; 2]; 3]>> for FlagTuple {
    type Error = Error;

    fn try_from(rows: Vec<[[f64; 2]; 3]>) -> Result<Self> {
        FlagTuple::new(rows.iter().map(Flag::from_rows).collect::<Result<_>>()?)
    }
}

impl From<FlagTuple> for Vec<[[f64; 2]; 3]> {
    fn from(t: FlagTuple) -> Self {
        t.flags.iter().map(Flag::to_rows).collect()
    }
}

/// Three distinct points never collinear; no point on another flag's line.
fn check_general_position(flags: &[Flag]) -> Result<()> {
    let k = flags.len();
    for i in 0..k {
        let line = flags[i].line();
        for (j, other) in flags.iter().enumerate() {
            if i != j
                && line.dot(&other.e1).abs()
                    <= tol::GENERAL_POSITION * line.norm() * other.e1.norm()
            {
                return Err(Error::NotGeneralPosition);
            }
        }
        for j in i + 1..k {
            for l in j + 1..k {
                if normalized_wedge3(&flags[i].e1, &flags[j].e1, &flags[l].e1).abs()
                    <= tol::GENERAL_POSITION
                {
                    return Err(Error::NotGeneralPosition);
                }
            }
        }
    }
    Ok(())
}

/// Whether a positive tuple is valid; free-function form of [`FlagTuple::is_positive`].
pub fn is_positive(tuple: &FlagTuple) -> bool {
    tuple.is_positive()
}

/// Sign-consistent lifts of the inner and outer vertices together with an
/// affine chart in which they are all finite.
struct Chart {
    inner: Vec<Vec3>,
    outer: Vec<Vec3>,
    /// Rows: chart coordinates `u₁, u₂` and the chart normal `c`, right-handed.
    basis: [Vec3; 3],
}

impl Chart {
    fn select(flags: &[Flag]) -> Result<Self> {
        let k = flags.len();
        let lines: Vec<Vec3> = flags.iter().map(|f| f.line().normalize()).collect();
        let mut outer: Vec<Vec3> = (0..k)
            .map(|i| lines[(i + k - 1) % k].cross(&lines[i]).normalize())
            .collect();
        let mut inner: Vec<Vec3> = flags.iter().map(|f| f.e1.normalize()).collect();
        for i in 0..k {
            let (o, o_next) = (outer[i], outer[(i + 1) % k]);
            let c = o.cross(&o_next);
            let c2 = c.norm_squared();
            if c2 <= tol::GENERAL_POSITION {
                return Err(Error::NotGeneralPosition);
            }
            let x = inner[i];
            let a = x.cross(&o_next).dot(&c) / c2;
            let mut b = o.cross(&x).dot(&c) / c2;
            if a.abs() <= tol::GENERAL_POSITION || b.abs() <= tol::GENERAL_POSITION {
                return Err(Error::NotGeneralPosition);
            }
            if a * b < 0.0 {
                if i + 1 == k {
                    return Err(Error::NotPositive);
                }
                outer[i + 1] = -outer[i + 1];
                b = -b;
            }
            debug_assert!(a * b > 0.0);
            if a < 0.0 {
                inner[i] = -inner[i];
            }
        }

        let standard = outer.iter().all(|v| v.z > 0.0) || outer.iter().all(|v| v.z < 0.0);
        let margin = outer
            .iter()
            .map(|v| v.z.abs())
            .fold(f64::INFINITY, f64::min);
        if standard && margin >= 1e-3 {
            if outer[0].z < 0.0 {
                outer
                    .iter_mut()
                    .chain(inner.iter_mut())
                    .for_each(|v| *v = -*v);
            }
            return Ok(Self {
                inner,
                outer,
                basis: [Vec3::x(), Vec3::y(), Vec3::z()],
            });
        }

        let normal = max_margin_normal(&outer).ok_or(Error::NoBoundedChart)?;
        let helper = if normal.x.abs() < 0.9 {
            Vec3::x()
        } else {
            Vec3::y()
        };
        let u1 = (helper - normal * normal.dot(&helper)).normalize();
        let u2 = normal.cross(&u1);
        Ok(Self {
            inner,
            outer,
            basis: [u1, u2, normal],
        })
    }

    fn project(&self, v: &Vec3) -> Vec2 {
        let w = v.dot(&self.basis[2]);
        Vec2::new(v.dot(&self.basis[0]) / w, v.dot(&self.basis[1]) / w)
    }

    fn signed_area(&self) -> f64 {
        let pts: Vec<Vec2> = self.outer.iter().map(|v| self.project(v)).collect();
        let n = pts.len();
        (0..n)
            .map(|i| cross2(&pts[i], &pts[(i + 1) % n]))
            .sum::<f64>()
            / 2.0
    }
}

/// Unit vector `c` maximizing `min ⟨c, v⟩` over the given unit vectors, if positive.
///
/// The optimum is attained at a single vector, the normalized sum of two, or the
/// direction equiangular to three, so enumerating those candidates suffices.
fn max_margin_normal(vs: &[Vec3]) -> Option<Vec3> {
    let n = vs.len();
    let mut candidates: Vec<Vec3> = vs.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            let s = vs[i] + vs[j];
            if s.norm() > 1e-12 {
                candidates.push(s.normalize());
            }
            for l in j + 1..n {
                let c = (vs[i] - vs[j]).cross(&(vs[i] - vs[l]));
                if c.norm() > 1e-12 {
                    let c = c.normalize();
                    candidates.push(if c.dot(&vs[i]) < 0.0 { -c } else { c });
                }
            }
        }
    }
    let margin = |c: &Vec3| vs.iter().map(|v| v.dot(c)).fold(f64::INFINITY, f64::min);
    candidates
        .into_iter()
        .map(|c| (margin(&c), c))
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .filter(|(m, _)| *m > tol::GENERAL_POSITION)
        .map(|(_, c)| c)
}

/// Inner polygon inscribed in an outer polygon, one inner vertex in the open
/// interior of each outer edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct InscribedPair {
    inner: ConvexPolygon,
    outer: ConvexPolygon,
    incidence: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    inner: Vec<[f64; 2]>,
    outer: Vec<[f64; 2]>,
    incidence: Vec<usize>,
}

impl InscribedPair {
    /// `inner[i]` must lie on the edge from `outer[incidence[i]]` to the next
    /// outer vertex. Both cycles may be given clockwise; they are then reversed
    /// together with inner vertex 0 kept first.
    pub fn new(
        mut inner: Vec<Vec2>,
        mut outer: Vec<Vec2>,
        mut incidence: Vec<usize>,
    ) -> Result<Self> {
        let k = outer.len();
        if k < 3 || inner.len() != k || incidence.len() != k {
            return Err(Error::InvalidPair(format!(
                "need k >= 3 matching lengths, got {} inner, {} outer, {} incidences",
                inner.len(),
                k,
                incidence.len()
            )));
        }
        let mut seen = vec![false; k];
        for &j in &incidence {
            if j >= k || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPair(
                    "incidence is not a permutation of the edges".into(),
                ));
            }
        }
        let signed: f64 = (0..k).map(|i| cross2(&outer[i], &outer[(i + 1) % k])).sum();
        if signed < 0.0 {
            // inner vertex 0 keeps its index, matching the flag tuple reversal;
            // old edge (j, j+1) becomes the new edge starting at k-j
            inner = (0..k).map(|n| inner[(k - n) % k]).collect();
            outer = (0..k).map(|m| outer[(k + 1 - m) % k]).collect();
            incidence = (0..k).map(|n| (k - incidence[(k - n) % k]) % k).collect();
        }
        let outer_poly = ConvexPolygon::new(outer.clone())?;
        if outer_poly.vertices() != outer.as_slice() {
            return Err(Error::InvalidPair(
                "outer polygon changed under normalization".into(),
            ));
        }
        for i in 0..k {
            if incidence[(i + 1) % k] != (incidence[i] + 1) % k {
                return Err(Error::InvalidPair(
                    "inner vertices are not in boundary order".into(),
                ));
            }
            let (a, b) = (outer[incidence[i]], outer[(incidence[i] + 1) % k]);
            let edge = b - a;
            let rel = inner[i] - a;
            let s = rel.dot(&edge) / edge.norm_squared();
            let off = cross2(&edge, &rel).abs() / edge.norm();
            if off > tol::INCIDENCE * outer_poly.size()
                || s <= tol::INCIDENCE
                || s >= 1.0 - tol::INCIDENCE
            {
                return Err(Error::InvalidPair(format!(
                    "inner vertex {i} is not inside its outer edge"
                )));
            }
        }
        let inner_poly = ConvexPolygon::new(inner.clone())?;
        if inner_poly.vertices() != inner.as_slice() {
            return Err(Error::InvalidPair(
                "inner and outer orientations disagree".into(),
            ));
        }
        Ok(Self {
            inner: inner_poly,
            outer: outer_poly,
            incidence,
        })
    }

    pub fn inner(&self) -> &ConvexPolygon {
        &self.inner
    }

    pub fn outer(&self) -> &ConvexPolygon {
        &self.outer
    }

    pub fn incidence(&self) -> &[usize] {
        &self.incidence
    }

    pub fn len(&self) -> usize {
        self.outer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    /// Image under a projective map keeping the outer polygon bounded.
    pub fn transformed(&self, map: &ProjTransform) -> Result<InscribedPair> {
        let image = |p: &ConvexPolygon| {
            p.vertices()
                .iter()
                .map(|v| map.apply(v))
                .collect::<Result<Vec<_>>>()
        };
        InscribedPair::new(
            image(&self.inner)?,
            image(&self.outer)?,
            self.incidence.clone(),
        )
    }
}

impl TryFrom<PairRepr> for InscribedPair {
    type Error = Error;

    fn try_from(r: PairRepr) -> Result<Self> {
        let pts = |v: &[[f64; 2]]| v.iter().map(|p| Vec2::new(p[0], p[1])).collect();
        InscribedPair::new(pts(&r.inner), pts(&r.outer), r.incidence)
    }
}

impl From<InscribedPair> for PairRepr {
    fn from(p: InscribedPair) -> Self {
        let arr = |poly: &ConvexPolygon| poly.vertices().iter().map(|v| [v.x, v.y]).collect();
        PairRepr {
            inner: arr(&p.inner),
            outer: arr(&p.outer),
            incidence: p.incidence,
        }
    }
}

/// Inner and outer polygons of a positive tuple, in an affine chart where both
/// are bounded. Outer vertex `i` is `F²_{i−1} ∩ F²_i`, so inner vertex `i` lies
/// on outer edge `i`.
pub fn polygons_from_flags(tuple: &FlagTuple) -> Result<InscribedPair> {
    if !tuple.is_positive() {
        return Err(Error::NotPositive);
    }
    let chart = Chart::select(tuple.flags())?;
    let inner = chart.inner.iter().map(|v| chart.project(v)).collect();
    let outer = chart.outer.iter().map(|v| chart.project(v)).collect();
    InscribedPair::new(inner, outer, (0..tuple.len()).collect())
}

/// Flag `i` is inner vertex `i` on the line of its outer edge.
pub fn flags_from_inscribed_pair(pair: &InscribedPair) -> Result<FlagTuple> {
    let k = pair.len();
    let (inner, outer) = (pair.inner.vertices(), pair.outer.vertices());
    let flags = (0..k)
        .map(|i| Flag::from_points(&inner[i], &outer[(pair.incidence[i] + 1) % k]))
        .collect::<Result<Vec<_>>>()?;
    FlagTuple::new(flags)
}

/// Triple and double ratios `(t, t′, d, d′)` of a positive quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FGQuadCoords {
    pub t: f64,
    pub tp: f64,
    pub d: f64,
    pub dp: f64,
}

impl FGQuadCoords {
    pub fn new(t: f64, tp: f64, d: f64, dp: f64) -> Result<Self> {
        if [t, tp, d, dp].iter().all(|v| *v > 0.0 && v.is_finite()) {
            Ok(Self { t, tp, d, dp })
        } else {
            Err(Error::Domain(format!(
                "coordinates must be positive, got ({t}, {tp}, {d}, {dp})"
            )))
        }
    }
}

/// Inner quadrilateral `(β₁,1), (−1,α₁), (β₂,−1), (1,α₂)` inscribed in the square `[−1,1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedQuadParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
}

impl NormalizedQuadParams {
    pub fn new(alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> Result<Self> {
        if [alpha1, alpha2, beta1, beta2].iter().all(|v| v.abs() < 1.0) {
            Ok(Self {
                alpha1,
                alpha2,
                beta1,
                beta2,
            })
        } else {
            Err(Error::Domain(format!(
                "parameters must lie in (-1, 1), got ({alpha1}, {alpha2}, {beta1}, {beta2})"
            )))
        }
    }

    pub fn inner_vertices(&self) -> [Vec2; 4] {
        [
            Vec2::new(self.beta1, 1.0),
            Vec2::new(-1.0, self.alpha1),
            Vec2::new(self.beta2, -1.0),
            Vec2::new(1.0, self.alpha2),
        ]
    }

    /// The normalized quadruple `(E, F, G, H)` with these parameters.
    pub fn flags(&self) -> FlagTuple {
        let [e, f, g, h] = self.inner_vertices();
        let corner = [Vec2::new(1.0, 1.0), Vec2::new(-1.0, -1.0)];
        let flags = vec![
            Flag::from_points(&e, &corner[0]),
            Flag::from_points(&f, &corner[1]),
            Flag::from_points(&g, &corner[1]),
            Flag::from_points(&h, &corner[0]),
        ];
        FlagTuple::new(
            flags
                .into_iter()
                .collect::<Result<_>>()
                .expect("inner vertices avoid the corners"),
        )
        .expect("normalized quadruples are in general position")
    }

    /// The pair (inner quadrilateral, square).
    pub fn inscribed_pair(&self) -> InscribedPair {
        let square = vec![
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
        ];
        InscribedPair::new(self.inner_vertices().to_vec(), square, vec![0, 1, 2, 3])
            .expect("normalized parameters give an inscribed pair")
    }
}

/// An inner triangle in the model triangle `(0,0), (2,0), (0,2)` whose flags have
/// triple ratio `t` up to orientation.
///
/// Each inner vertex splits its edge in the ratio `t^(1/3)`, which keeps the
/// vertices away from the corners for extreme `t`.
pub fn triangle_pair(t: f64) -> Result<InscribedPair> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!(
            "triple ratio must be positive, got {t}"
        )));
    }
    let s = 1.0 / (1.0 + t.cbrt().recip());
    let outer = vec![
        Vec2::new(0.0, 0.0),
        Vec2::new(2.0, 0.0),
        Vec2::new(0.0, 2.0),
    ];
    let inner = (0..3)
        .map(|i| outer[i] * (1.0 - s) + outer[(i + 1) % 3] * s)
        .collect();
    InscribedPair::new(inner, outer, vec![0, 1, 2])
}

pub fn fg_to_normalized(c: &FGQuadCoords) -> NormalizedQuadParams {
    let FGQuadCoords { t, tp, d, dp } = *c;
    let r = (1.0 + tp) / (1.0 + t);
    let dd = d * dp;
    NormalizedQuadParams {
        alpha1: (d * (1.0 - t) * r + tp - dd) / (d * (1.0 + t) * r + tp + dd),
        alpha2: (dp * (tp - 1.0) / r + dd - t) / (dp * (1.0 + tp) / r + t + dd),
        beta1: -(tp - d * r) / (tp + d * r),
        beta2: (t - dp / r) / (t + dp / r),
    }
}

pub fn normalized_to_fg(p: &NormalizedQuadParams) -> FGQuadCoords {
    let NormalizedQuadParams {
        alpha1,
        alpha2,
        beta1,
        beta2,
    } = *p;
    let t = (1.0 - alpha1) / (1.0 + alpha1) * (1.0 + beta2) / (1.0 + beta1);
    let tp = (1.0 + alpha2) / (1.0 - alpha2) * (1.0 - beta1) / (1.0 - beta2);
    FGQuadCoords {
        t,
        tp,
        d: (1.0 + beta1) / (1.0 - beta1) * tp * (1.0 + t) / (1.0 + tp),
        dp: (1.0 - beta2) / (1.0 + beta2) * t * (1.0 + tp) / (1.0 + t),
    }
}

/// Coordinates of the same quadruple read along the other diagonal, from `F`
/// to `H`: the ratios of `(F, E, H, G)`.
pub fn flip_diagonal(c: &FGQuadCoords) -> FGQuadCoords {
    let quad = fg_to_normalized(c).flags();
    let [e, f, g, h] = quad.flags()[..] else {
        unreachable!("normalized quadruples have four flags")
    };
    let ratio = |r: Result<f64>| r.expect("positive quadruples are in general position");
    FGQuadCoords {
        t: ratio(triple_ratio(&f, &e, &h)),
        tp: ratio(triple_ratio(&f, &h, &g)),
        d: ratio(double_ratio_1(&f, &e, &h, &g)),
        dp: ratio(double_ratio_2(&f, &e, &h, &g)),
    }
}
