//! General Cramer–Castillon solver.
//!
//! Points of the circle are parametrized by the tangent half-angle
//! `t = tan(θ/2)`, kept homogeneous as `[p : q]` so that `θ = π` is the
//! ordinary value `[1 : 0]`. In that parameter the map "second intersection
//! of the chord through `P`" is a real 2×2 projective involution, so a closed
//! N-gon is a fixed point of the composed map: the roots of one quadratic.
//!
//! The perspectrix construction at the bottom is a second, purely cartesian
//! algorithm for the triangle case; it never touches the Möbius machinery.

use alloc::vec::Vec;

use crate::ccp_closed::{SolutionLabel, VertexMatrix};
use crate::geom::{cartesian_to_bary, circle_for, touch_point, CircleData, CircleTag, Point, TriangleData, Vertex};
use crate::linalg::{cross3, sine_distance, Vec3};
use crate::math::{hypot, sqrt};
use crate::{Error, Result};

/// Homogeneous circle parameter `[p : q]`, `t = p / q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleParam {
    pub p: f64,
    pub q: f64,
}

impl CircleParam {
    pub fn new(p: f64, q: f64) -> Self {
        let n = hypot(p, q);
        CircleParam { p: p / n, q: q / n }
    }

    /// Parameter of a point assumed to lie on `circle`.
    pub fn of_point(circle: &CircleData, pt: Point) -> Self {
        let d = (pt - circle.center) * (1.0 / circle.radius);
        // tan(θ/2) = y / (1 + x) = (1 − x) / y, pick the better-conditioned one
        if d.x >= 0.0 {
            CircleParam::new(d.y, 1.0 + d.x)
        } else {
            CircleParam::new(1.0 - d.x, d.y)
        }
    }

    pub fn point_on(&self, circle: &CircleData) -> Point {
        let (p, q) = (self.p, self.q);
        let n = p * p + q * q;
        let cos = (q * q - p * p) / n;
        let sin = 2.0 * p * q / n;
        circle.center + Point::new(cos, sin) * circle.radius
    }

    /// Finite parameter value, `None` at `t = ∞`.
    pub fn value(&self) -> Option<f64> {
        if self.q.abs() < 1e-300 {
            None
        } else {
            Some(self.p / self.q)
        }
    }

    pub fn distance(&self, other: &CircleParam) -> f64 {
        (self.p * other.q - self.q * other.p).abs()
    }
}

/// Real 2×2 matrix acting projectively on [`CircleParam`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusMap {
    pub m: [[f64; 2]; 2],
}

impl MobiusMap {
    pub const IDENTITY: MobiusMap = MobiusMap { m: [[1.0, 0.0], [0.0, 1.0]] };

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn norm(&self) -> f64 {
        sqrt(self.m.iter().flatten().map(|v| v * v).sum())
    }

    fn max_abs(&self) -> f64 {
        self.m.iter().flatten().fold(0.0_f64, |a, v| a.max(v.abs()))
    }

    /// Divide by the largest entry; same projective map.
    pub fn normalized(&self) -> MobiusMap {
        let k = self.max_abs();
        if k == 0.0 {
            return *self;
        }
        MobiusMap { m: self.m.map(|row| row.map(|v| v / k)) }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &MobiusMap) -> MobiusMap {
        let (a, b) = (&self.m, &inner.m);
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        MobiusMap { m: out }.normalized()
    }

    /// Image of a parameter. A rank-one map (chord point on the circle)
    /// sends everything to its column space, which is where the vanishing
    /// product is routed too.
    pub fn apply(&self, t: &CircleParam) -> CircleParam {
        let m = &self.m;
        let p = m[0][0] * t.p + m[0][1] * t.q;
        let q = m[1][0] * t.p + m[1][1] * t.q;
        if hypot(p, q) > 1e-12 * self.max_abs() {
            return CircleParam::new(p, q);
        }
        let c0 = hypot(m[0][0], m[1][0]);
        let c1 = hypot(m[0][1], m[1][1]);
        if c0 >= c1 {
            CircleParam::new(m[0][0], m[1][0])
        } else {
            CircleParam::new(m[0][1], m[1][1])
        }
    }

    /// `max |M² − λI| / ‖M‖²` for the best `λ`; zero for an involution.
    pub fn involution_defect(&self) -> f64 {
        let sq = self.after(self);
        let lam = 0.5 * (sq.m[0][0] + sq.m[1][1]);
        let off = sq.m[0][1].abs().max(sq.m[1][0].abs());
        let diag = (sq.m[0][0] - lam).abs().max((sq.m[1][1] - lam).abs());
        off.max(diag) / sq.max_abs().max(1e-300)
    }

    /// Coefficients `(A, B, C)` of `A p² + B pq + C q² = 0`, whose roots are
    /// the fixed points.
    pub fn fixed_point_quadratic(&self) -> (f64, f64, f64) {
        let m = &self.m;
        (m[1][0], m[1][1] - m[0][0], -m[0][1])
    }

    /// `B² − 4AC` of [`MobiusMap::fixed_point_quadratic`], the squared trace minus
    /// four times the determinant.
    pub fn fixed_point_discriminant(&self) -> f64 {
        let (a, b, c) = self.fixed_point_quadratic();
        b * b - 4.0 * a * c
    }
}

/// Chord involution of `circle` through `pt`.
///
/// For `pt` on the circle the matrix drops to rank one: every chord ends at
/// `pt`, whose parameter is then the (only) fixed value.
pub fn chord_involution(circle: &CircleData, pt: Point) -> Result<MobiusMap> {
    if !pt.is_finite() {
        return Err(Error::InvalidInput("non-finite chord point"));
    }
    let d = (pt - circle.center) * (1.0 / circle.radius);
    // P on the chord x(1 − t t') + y(t + t') = 1 + t t' of the unit circle
    Ok(MobiusMap { m: [[-d.y, 1.0 - d.x], [-(1.0 + d.x), d.y]] })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CcpProblem {
    circle: CircleData,
    points: Vec<Point>,
}

impl CcpProblem {
    pub fn new(circle: CircleData, points: Vec<Point>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidInput("at least three points are required"));
        }
        if !points.iter().all(|p| p.is_finite()) {
            return Err(Error::InvalidInput("non-finite point"));
        }
        Ok(CcpProblem { circle, points })
    }

    pub fn circle(&self) -> &CircleData {
        &self.circle
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Triangle vertices `A, B, C` with the given circle.
    pub fn for_triangle(t: &TriangleData, circle: CircleData) -> Self {
        CcpProblem { circle, points: t.vertices().to_vec() }
    }

    pub fn chord_maps(&self) -> Result<Vec<MobiusMap>> {
        self.points.iter().map(|p| chord_involution(&self.circle, *p)).collect()
    }

    /// `ι_{P_N} ∘ … ∘ ι_{P_1}`, renormalized after every product.
    pub fn composed_map(&self) -> Result<MobiusMap> {
        let maps = self.chord_maps()?;
        Ok(maps.iter().fold(MobiusMap::IDENTITY, |acc, m| m.after(&acc)))
    }

    /// Distance (in radii) between `M_1` at `param` and the point reached after
    /// walking the whole chord cycle from it; zero exactly on a solution.
    pub fn closure_residual(&self, param: &CircleParam) -> Result<f64> {
        let maps = self.chord_maps()?;
        let end = maps.iter().fold(*param, |t, m| m.apply(&t));
        Ok(end.point_on(&self.circle).distance(param.point_on(&self.circle)) / self.circle.radius)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    /// One of two distinct real solutions.
    Distinct,
    /// The double root of a vanishing discriminant.
    Tangent,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CcpSolution {
    pub vertices: Vec<Point>,
    pub multiplicity: Multiplicity,
}

impl CcpSolution {
    pub fn on_circle_residual(&self, circle: &CircleData) -> f64 {
        self.vertices.iter().map(|p| circle.on_circle_residual(*p)).fold(0.0, f64::max)
    }

    /// Largest distance (in radii) between `P_i` and side `M_i M_{i+1}`. A side
    /// whose endpoints coincide is read as the tangent at that vertex.
    pub fn incidence_residual(&self, prob: &CcpProblem) -> f64 {
        let circle = prob.circle();
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (m0, m1) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let p = prob.points()[i];
                let dir = if m0.distance(m1) < 1e-7 * circle.radius {
                    (m0 - circle.center).perp()
                } else {
                    m1 - m0
                };
                (p - m0).cross(dir).abs() / dir.norm() / circle.radius
            })
            .fold(0.0, f64::max)
    }
}

/// Fixed-point solve of the composed chord map.
pub fn solve_ccp_mobius(prob: &CcpProblem) -> Result<Vec<CcpSolution>> {
    let composed = prob.composed_map()?;
    let roots = fixed_points(&composed)?;
    let maps = prob.chord_maps()?;
    let multiplicity = if roots.len() == 1 { Multiplicity::Tangent } else { Multiplicity::Distinct };
    Ok(roots
        .iter()
        .map(|root| {
            let mut vertices = Vec::with_capacity(maps.len());
            let mut t = *root;
            for m in &maps[..maps.len() - 1] {
                vertices.push(t.point_on(prob.circle()));
                t = m.apply(&t);
            }
            vertices.push(t.point_on(prob.circle()));
            CcpSolution { vertices, multiplicity }
        })
        .collect())
}

/// Real fixed points of a Möbius map: 0, 1 (double) or 2 parameters.
pub fn fixed_points(map: &MobiusMap) -> Result<Vec<CircleParam>> {
    let map = map.normalized();
    let scale = map.norm();
    let (a, b, c) = map.fixed_point_quadratic();
    if a.abs().max(b.abs()).max(c.abs()) <= 1e-10 * scale {
        return Err(Error::DegenerateComposition);
    }
    let disc = b * b - 4.0 * a * c;
    let tol = 1e-10 * scale * scale;
    let mut out = Vec::new();
    if disc > tol {
        let root = sqrt(disc);
        let sign = if b >= 0.0 { 1.0 } else { -1.0 };
        let qq = -0.5 * (b + sign * root);
        // t₁ = qq / A and t₂ = C / qq, both written homogeneously
        out.push(CircleParam::new(qq, a));
        out.push(CircleParam::new(c, qq));
    } else if disc >= -tol {
        let first = (-b, 2.0 * a);
        let second = (2.0 * c, -b);
        if hypot(first.0, first.1) >= hypot(second.0, second.1) {
            out.push(CircleParam::new(first.0, first.1));
        } else {
            out.push(CircleParam::new(second.0, second.1));
        }
    }
    Ok(out)
}

/// Hausdorff distance between two finite point sets.
pub fn set_deviation(a: &[Point], b: &[Point]) -> f64 {
    let one_way = |x: &[Point], y: &[Point]| {
        x.iter()
            .map(|p| y.iter().map(|q| p.distance(*q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Second intersection of the line through `on_circle` and `through`.
fn second_intersection(circle: &CircleData, on_circle: Point, through: Point) -> Point {
    let d = through - on_circle;
    let dd = d.dot(d);
    if dd == 0.0 {
        return on_circle;
    }
    let k = -2.0 * (on_circle - circle.center).dot(d) / dd;
    on_circle + d * k
}

fn hom(p: Point) -> Vec3 {
    [p.x, p.y, 1.0]
}

fn join(p: Point, q: Point) -> Vec3 {
    cross3(&hom(p), &hom(q))
}

fn line_circle(circle: &CircleData, line: &Vec3) -> Result<(Point, Point)> {
    let k = hypot(line[0], line[1]);
    if !(k > 0.0) {
        return Err(Error::NoRealIntersection);
    }
    let n = Point::new(line[0] / k, line[1] / k);
    let dist = (n.dot(circle.center) + line[2] / k).abs();
    let signed = n.dot(circle.center) + line[2] / k;
    let r = circle.radius;
    if dist > r * (1.0 + 1e-12) {
        return Err(Error::NoRealIntersection);
    }
    let half = sqrt((r * r - signed * signed).max(0.0));
    let foot = circle.center - n * signed;
    Ok((foot + n.perp() * half, foot - n.perp() * half))
}

/// Outcome of [`solve_ccp_perspectrix`].
#[derive(Clone, Debug, PartialEq)]
pub struct PerspectrixSolution {
    pub first: VertexMatrix,
    pub second: VertexMatrix,
    /// Cartesian vertices of both triangles, `M₁M₂M₃` and `M₄M₅M₆`.
    pub cartesian: [[Point; 3]; 2],
    /// Seed choices rejected before one produced a usable axis.
    pub reseeds: usize,
}

/// Tritangent circle `circle` belongs to, if any.
pub fn identify_tritangent(t: &TriangleData, circle: &CircleData) -> Option<CircleTag> {
    CircleTag::ALL.into_iter().find(|tag| {
        let c = circle_for(t, *tag);
        c.center.distance(circle.center) <= 1e-9 * c.radius && (c.radius - circle.radius).abs() <= 1e-9 * c.radius
    })
}

/// Cross-axis construction for the triangle case.
///
/// Three chord paths are walked through `A`, then `B`, then `C`. Their cross
/// joins meet on the axis of the composed projectivity, and that axis cuts
/// the circle in the first vertices of the two solutions.
pub fn solve_ccp_perspectrix(t: &TriangleData, circle: &CircleData) -> Result<PerspectrixSolution> {
    let tag = identify_tritangent(t, circle).ok_or(Error::NotTritangent)?;
    let [va, vb, vc] = t.vertices();
    let walk = |x: Point| {
        let x2 = second_intersection(circle, x, va);
        let x3 = second_intersection(circle, x2, vb);
        second_intersection(circle, x3, vc)
    };
    let touches = [Vertex::A, Vertex::B, Vertex::C].map(|v| touch_point(circle, t, v));
    let reflect = |p: Point| circle.center * 2.0 - p;
    // The first entry is the textbook seed: the BC contact point pushed
    // through the center, the other two contacts as they are.
    const REFLECTIONS: [[bool; 3]; 8] = [
        [true, false, false],
        [false, false, false],
        [false, true, false],
        [false, false, true],
        [true, true, false],
        [true, false, true],
        [false, true, true],
        [true, true, true],
    ];
    let r = circle.radius;
    let mut reseeds = 0;
    for flips in REFLECTIONS {
        let seeds: [Point; 3] =
            core::array::from_fn(|i| if flips[i] { reflect(touches[i]) } else { touches[i] });
        let [a1, b1, c1] = seeds;
        let (a4, b4, c4) = (walk(a1), walk(b1), walk(c1));
        let closed = a1.distance(a4) < 1e-9 * r || b1.distance(b4) < 1e-9 * r || c1.distance(c4) < 1e-9 * r;
        let distinct = a1.distance(b1) > 1e-9 * r && a1.distance(c1) > 1e-9 * r && b1.distance(c1) > 1e-9 * r;
        if closed || !distinct {
            reseeds += 1;
            continue;
        }
        let h1 = cross3(&join(a1, b4), &join(a4, b1));
        let h2 = cross3(&join(a1, c4), &join(a4, c1));
        if sine_distance(&h1, &h2) < 1e-9 {
            reseeds += 1;
            continue;
        }
        let axis = cross3(&h1, &h2);
        let (m1, m4) = line_circle(circle, &axis)?;
        let complete = |m: Point| {
            let m2 = second_intersection(circle, m, va);
            let m3 = second_intersection(circle, m2, vb);
            [m, m2, m3]
        };
        let cartesian = [complete(m1), complete(m4)];
        let to_matrix = |tri: &[Point; 3], label| VertexMatrix {
            rows: tri.map(|p| cartesian_to_bary(p, t)),
            label,
            circle: tag,
            side_through: [Vertex::A, Vertex::B, Vertex::C],
        };
        return Ok(PerspectrixSolution {
            first: to_matrix(&cartesian[0], SolutionLabel::T1),
            second: to_matrix(&cartesian[1], SolutionLabel::T2),
            cartesian,
            reseeds,
        });
    }
    Err(Error::PathClosed)
}
