//! The triangle problem on an arbitrary inconic, by affine transport to a
//! tritangent circle of the image triangle.
//!
//! An affine map keeps barycentrics, so the closed forms evaluated on the
//! image triangle are already the answer relative to the original one.

use alloc::vec::Vec;

use crate::brocard::BrocardInellipse;
use crate::ccp_closed::{solutions_for, VertexMatrix};
use crate::conic::{conic_from_tangent_lines, ConicMatrix, Ellipse};
use crate::geom::{cartesian_to_bary, circle_for, touch_point, CircleData, CircleTag, HomoBary, LineH, Point, TriangleData, Vertex};
use crate::linalg::{Mat3, Vec3};
use crate::report::Report;
use crate::{Error, Result};

/// Invertible map of homogeneous cartesian coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Projectivity {
    h: Mat3,
    inv: Mat3,
}

impl Projectivity {
    pub fn new(h: Mat3) -> Result<Self> {
        let inv = h.inverse().ok_or(Error::InvalidInput("singular projectivity"))?;
        Ok(Projectivity { h, inv })
    }

    /// `x ↦ L x + offset`.
    pub fn affine(lin: [[f64; 2]; 2], offset: Point) -> Result<Self> {
        Projectivity::new(Mat3([
            [lin[0][0], lin[0][1], offset.x],
            [lin[1][0], lin[1][1], offset.y],
            [0.0, 0.0, 1.0],
        ]))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.h
    }

    pub fn inverse(&self) -> Projectivity {
        Projectivity { h: self.inv, inv: self.h }
    }

    pub fn apply(&self, p: Point) -> Result<Point> {
        let v = self.h.mul_vec(&p.homogeneous());
        if v[2].abs() < 1e-300 {
            return Err(Error::InfinitePoint);
        }
        Ok(Point::new(v[0] / v[2], v[1] / v[2]))
    }

    /// Image of a cartesian line `[α, β, γ]`.
    pub fn apply_line(&self, line: &Vec3) -> Vec3 {
        self.inv.transpose().mul_vec(line)
    }

    /// Image of a cartesian conic (either form).
    pub fn apply_conic(&self, c: &ConicMatrix) -> Result<ConicMatrix> {
        c.pull_back(&self.inv)
    }

    /// `max |H·H⁻¹ − I|`.
    pub fn inverse_defect(&self) -> f64 {
        let p = self.h * self.inv;
        let mut worst = 0.0_f64;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.0[i][j] - want).abs());
            }
        }
        worst
    }

    fn linear_part(&self) -> [[f64; 2]; 2] {
        let m = &self.h.0;
        [[m[0][0], m[0][1]], [m[1][0], m[1][1]]]
    }

    fn offset(&self) -> Point {
        Point::new(self.h.0[0][2], self.h.0[1][2])
    }
}

/// Inconic with a given perspector (Brianchon point).
#[derive(Clone, Debug, PartialEq)]
pub struct InconicSpec {
    pub perspector: HomoBary,
    /// Barycentric line conic `[[0, pq, pr], [pq, 0, qr], [pr, qr, 0]]`; the
    /// pole of side `BC` is `[0 : q : r]`.
    pub dual: ConicMatrix,
    /// Barycentric point conic.
    pub conic: ConicMatrix,
    /// Cartesian metric form.
    pub ellipse: Ellipse,
}

impl InconicSpec {
    /// Contact point with the side opposite `v`: the cevian trace of the
    /// perspector.
    pub fn contact(&self, v: Vertex) -> HomoBary {
        let mut c = self.perspector.to_array();
        c[v.index()] = 0.0;
        HomoBary::from_array(c)
    }

    pub fn side_tangency_residual(&self) -> f64 {
        Vertex::ALL
            .iter()
            .map(|v| self.dual.tangency_residual(&LineH::side(*v).to_array()))
            .fold(0.0, f64::max)
    }
}

/// Inconic through the cevian traces of `p`.
///
/// Every perspector whose inconic is a real ellipse is accepted, including
/// ones outside the triangle (the excircles among them).
pub fn inconic_from_perspector(p: &HomoBary, t: &TriangleData) -> Result<InconicSpec> {
    let (x, y, z) = normalized_perspector(p)?;
    let dual = ConicMatrix::line(Mat3([[0.0, x * y, x * z], [x * y, 0.0, y * z], [x * z, y * z, 0.0]]));
    let conic = dual.as_point_conic();
    let circ = transport(p, t)?;
    let back = circ.map.inverse();
    let ellipse = Ellipse::circle(circ.circle.center, circ.circle.radius).mapped(back.linear_part(), back.offset())?;
    Ok(InconicSpec { perspector: *p, dual, conic, ellipse })
}

fn normalized_perspector(p: &HomoBary) -> Result<(f64, f64, f64)> {
    if !p.is_finite() {
        return Err(Error::InvalidInput("non-finite perspector"));
    }
    let n = p.max_abs();
    if !(n > 0.0) {
        return Err(Error::InvalidInput("zero perspector"));
    }
    let [x, y, z] = p.scaled(1.0 / n).to_array();
    if x.abs().min(y.abs()).min(z.abs()) < 1e-12 {
        return Err(Error::NonEllipse);
    }
    Ok((x, y, z))
}

/// Affine circularization of an inconic.
#[derive(Clone, Debug, PartialEq)]
pub struct Circularization {
    /// Takes the inconic to `circle`.
    pub map: Projectivity,
    pub image: TriangleData,
    /// The unit circle at the origin, up to rounding.
    pub circle: CircleData,
    /// Which tritangent circle of `image` the inconic becomes.
    pub tag: CircleTag,
}

impl Circularization {
    /// `|(p−c)ᵀS(p−c) − 1|` for the inconic, evaluated as `|L(p−c)|²` in the
    /// image, where thin inconics do not lose digits.
    pub fn point_residual(&self, p: Point) -> Result<f64> {
        let d = (self.map.apply(p)? - self.circle.center) * (1.0 / self.circle.radius);
        Ok((d.dot(d) - 1.0).abs())
    }
}

/// Affine map taking the inconic of `spec` to a tritangent circle.
pub fn circularizing_projectivity(spec: &InconicSpec, t: &TriangleData) -> Result<Circularization> {
    transport(&spec.perspector, t)
}

/// The image triangle is read off the perspector: an interior `x : y : z` is
/// the Gergonne point of sides with tangent lengths `1/x, 1/y, 1/z`, and one
/// negative coordinate marks the contact cevian point of an excircle. Affine
/// maps keep barycentrics, so the vertex correspondence is the map.
fn transport(p: &HomoBary, t: &TriangleData) -> Result<Circularization> {
    let (x, y, z) = normalized_perspector(p)?;
    let mut w = [x, y, z];
    if w.iter().filter(|v| **v < 0.0).count() >= 2 {
        w = w.map(|v| -v);
    }
    let (sides, tag) = match (0..3).find(|i| w[*i] < 0.0) {
        None => {
            let u = w.map(|v| 1.0 / v);
            ([u[1] + u[2], u[0] + u[2], u[0] + u[1]], CircleTag::Incircle)
        }
        Some(i) => {
            // excircle opposite vertex i: semiperimeter −1/wᵢ, and the
            // tangent lengths s − side_k = 1/w_j, s − side_j = 1/w_k
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let s = -1.0 / w[i];
            let (tj, tk) = (1.0 / w[j], 1.0 / w[k]);
            let mut sides = [0.0; 3];
            sides[i] = tj + tk;
            sides[j] = s - tk;
            sides[k] = s - tj;
            if !(s > tj + tk) {
                return Err(Error::NonEllipse);
            }
            (sides, CircleTag::Excircle(Vertex::from_index(i)))
        }
    };
    let m = sides[0].max(sides[1]).max(sides[2]);
    let unit = TriangleData::from_sides(sides[0] / m, sides[1] / m, sides[2] / m)?;
    let c0 = circle_for(&unit, tag);
    let verts = unit.vertices().map(|v| (v - c0.center) * (1.0 / c0.radius));
    let image = TriangleData::from_vertices(verts)?;
    let circle = circle_for(&image, tag);

    let [a, b, c] = t.vertices();
    let (e1, e2) = (b - a, c - a);
    let (f1, f2) = (verts[1] - verts[0], verts[2] - verts[0]);
    let det = e1.cross(e2);
    // L [e1 e2] = [f1 f2]
    let lin = [
        [(f1.x * e2.y - f2.x * e1.y) / det, (f2.x * e1.x - f1.x * e2.x) / det],
        [(f1.y * e2.y - f2.y * e1.y) / det, (f2.y * e1.x - f1.y * e2.x) / det],
    ];
    let offset = verts[0] - Point::new(lin[0][0] * a.x + lin[0][1] * a.y, lin[1][0] * a.x + lin[1][1] * a.y);
    let map = Projectivity::affine(lin, offset)?;

    let residual = Vertex::ALL
        .iter()
        .map(|v| {
            let want = HomoBary::from_array({
                let mut c = w;
                c[v.index()] = 0.0;
                c
            });
            cartesian_to_bary(touch_point(&circle, &image, *v), &image).angular_distance(&want)
        })
        .fold(0.0, f64::max);
    if !(residual <= 1e-8) {
        return Err(Error::Inconsistent { check: "circle touches at the cevian traces", residual });
    }
    Ok(Circularization { map, image, circle, tag })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InconicSolution {
    /// Rows in barycentrics of the original triangle; `circle` names the
    /// tritangent circle of the circularized image.
    pub solutions: (VertexMatrix, VertexMatrix),
    pub cartesian: [[Point; 3]; 2],
    /// Common inscribed conic of both solutions, cartesian.
    pub common: Ellipse,
    pub common_conic: ConicMatrix,
    pub circularization: Circularization,
    pub report: Report,
}

/// Tolerances for the transported claims.
pub const SIDE_TANGENCY_TOL: f64 = 1e-8;
pub const INCIDENCE_TOL: f64 = 1e-9;
pub const FIT_TOL: f64 = 1e-7;

pub fn solve_ccp_inconic(spec: &InconicSpec, t: &TriangleData) -> Result<InconicSolution> {
    let circ = circularizing_projectivity(spec, t)?;
    let (m1, m2) = solutions_for(&circ.image, circ.tag);
    let cartesian = [m1.cartesian(t)?, m2.cartesian(t)?];
    let image_tri = m1.cartesian(&circ.image)?;
    let image_common = BrocardInellipse::for_frame(&crate::brocard::brocard_frame(image_tri)?)?;
    let back = circ.map.inverse();
    let common = image_common.ellipse.mapped(back.linear_part(), back.offset())?;
    let common_conic = common.to_conic();

    let mut report = Report::new();
    let mut sides: Vec<crate::linalg::Vec3> = Vec::with_capacity(6);
    for tri in &cartesian {
        for i in 0..3 {
            sides.push(crate::geom::cartesian_line(tri[i], tri[(i + 1) % 3]));
        }
    }
    let tangency = sides.iter().map(|l| common.tangency_residual(l)).fold(0.0, f64::max);
    report.check("six sides tangent to common conic", tangency, SIDE_TANGENCY_TOL);
    let incidence = m1.side_incidence_residual().max(m2.side_incidence_residual());
    report.check("sides pass through A, B, C cyclically", incidence, INCIDENCE_TOL);
    let mut on = 0.0_f64;
    for p in cartesian.iter().flatten() {
        on = on.max(circ.point_residual(*p)?);
    }
    report.check("vertices on the inconic", on, INCIDENCE_TOL);
    report.check("fitted conic equals transported one", fit_deviation(&m1, &m2, &common_conic, t)?, FIT_TOL);
    let mut solutions = (m1, m2);
    solutions.0.circle = circ.tag;
    solutions.1.circle = circ.tag;
    Ok(InconicSolution { solutions, cartesian, common, common_conic, circularization: circ, report })
}

/// Worst angular distance, over the six ways to leave one side out, between
/// the conic fitted to five solution sides and `target` (barycentric line
/// forms of `t`).
pub fn fit_deviation(m1: &VertexMatrix, m2: &VertexMatrix, target: &ConicMatrix, t: &TriangleData) -> Result<f64> {
    let target = target.to_barycentric(t)?.as_line_conic();
    let mut lines = Vec::with_capacity(6);
    lines.extend_from_slice(&m1.side_lines()?);
    lines.extend_from_slice(&m2.side_lines()?);
    let mut worst = 0.0_f64;
    for skip in 0..6 {
        let five: Vec<LineH> = (0..6).filter(|i| *i != skip).map(|i| lines[i]).collect();
        let five: [LineH; 5] = [five[0], five[1], five[2], five[3], five[4]];
        let fitted = conic_from_tangent_lines(&five)?;
        worst = worst.max(fitted.angular_distance(&target));
    }
    Ok(worst)
}
