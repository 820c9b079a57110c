//! Brocard geometry of a triangle, and the checks that the two solution
//! triangles share it.
//!
//! Objects in a [`BrocardFrame`] are in barycentrics of the triangle the frame
//! was built from; use [`transfer_point`] / [`transfer_line`] to compare
//! frames of different triangles.

use alloc::format;

use crate::ccp_closed::{incircle_solutions, solutions_for, VertexMatrix};
use crate::centers;
use crate::conic::{ConicMatrix, Ellipse};
use crate::geom::{
    bary_to_cartesian, cartesian_line, cartesian_of_line, line_through, transfer_line, transfer_point,
    CircleTag, HomoBary, LineH, Point, TriangleData, Vertex,
};
use crate::math::{atan, sin, sqrt, tan};
use crate::report::Report;
use crate::{Error, Result};

/// Below this `δ/R` the axis, `X16` and `X187` are treated as undefined.
pub const EQUILATERAL_CUTOFF: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct BrocardFrame {
    pub triangle: TriangleData,
    /// `triangle` moved by `−origin`. Cartesian work happens here, where
    /// coordinates have the size of the triangle rather than its position.
    pub local: TriangleData,
    pub origin: Point,
    pub x3: HomoBary,
    pub x6: HomoBary,
    /// `|X6 − X3|`.
    pub delta: f64,
    pub circumradius: f64,
    pub omega: f64,
    pub omega1: HomoBary,
    pub omega2: HomoBary,
    /// `None` when `X3 = X6`.
    pub axis: Option<LineH>,
    /// Center (in `local` coordinates) and radius of the circle on diameter
    /// `X3X6`; the radius may be 0.
    pub circle_center: Point,
    pub circle_radius: f64,
    pub lemoine: LineH,
    pub x15: HomoBary,
    pub x16: Option<HomoBary>,
    pub x187: Option<HomoBary>,
}

/// Circumcenter from the vertex formula, which stays accurate for flat
/// triangles where the barycentric weights nearly cancel.
fn circumcenter(t: &TriangleData) -> Point {
    let [pa, pb, pc] = t.vertices();
    let (b, c) = (pb - pa, pc - pa);
    let d = 2.0 * b.cross(c);
    let (bb, cc) = (b.dot(b), c.dot(c));
    pa + Point::new((c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d)
}

pub fn brocard_frame(tri: [Point; 3]) -> Result<BrocardFrame> {
    let t = TriangleData::from_vertices(tri)?;
    let origin = tri[0];
    let local = TriangleData::from_vertices(tri.map(|p| p - origin))?;
    let (a2, b2, c2) = (t.a() * t.a(), t.b() * t.b(), t.c() * t.c());
    let s2 = 2.0 * t.area();
    let (sa, sb, sc) = (0.5 * (b2 + c2 - a2), 0.5 * (c2 + a2 - b2), 0.5 * (a2 + b2 - c2));
    let x3 = HomoBary::new(a2 * sa, b2 * sb, c2 * sc);
    let x6 = HomoBary::new(a2, b2, c2);
    let p3 = circumcenter(&local);
    let p6 = bary_to_cartesian(&x6, &local)?;
    let r = t.circumradius();
    let delta = p3.distance(p6);
    let omega = atan(2.0 * s2 / (a2 + b2 + c2));
    let omega1 = HomoBary::new(a2 * c2, b2 * a2, c2 * b2);
    let omega2 = HomoBary::new(a2 * b2, b2 * c2, c2 * a2);
    let defined = delta > EQUILATERAL_CUTOFF * r;
    let axis = if defined { Some(line_through(&x3, &x6)?) } else { None };
    let lemoine = LineH::new(b2 * c2, c2 * a2, a2 * b2);
    let r3 = sqrt(3.0);
    let x15 = HomoBary::new(a2 * (r3 * sa + s2), b2 * (r3 * sb + s2), c2 * (r3 * sc + s2));
    let x16 = defined.then(|| HomoBary::new(a2 * (r3 * sa - s2), b2 * (r3 * sb - s2), c2 * (r3 * sc - s2)));
    let x187 = axis.map(|ax| ax.meet(&lemoine));
    Ok(BrocardFrame {
        triangle: t,
        local,
        origin,
        x3,
        x6,
        delta,
        circumradius: r,
        omega,
        omega1,
        omega2,
        axis,
        circle_center: p3.midpoint(p6),
        circle_radius: 0.5 * delta,
        lemoine,
        x15,
        x16,
        x187,
    })
}

/// `ω` from `tan ω = (√3/3)·√(1 − (δ/R)²)`.
pub fn brocard_angle_from_delta(delta: f64, r: f64) -> Result<f64> {
    if !(delta >= 0.0) || !(r > 0.0) || delta > r * (1.0 + 1e-12) {
        return Err(Error::OutOfRange);
    }
    let q = (delta / r).min(1.0);
    Ok(atan(sqrt(3.0) / 3.0 * sqrt(1.0 - q * q)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BrocardInellipse {
    /// Cartesian point conic.
    pub conic: ConicMatrix,
    pub ellipse: Ellipse,
    pub semi_axes: (f64, f64),
    pub foci: (Point, Point),
    /// The same ellipse in the frame's `local` coordinates.
    pub local: Ellipse,
}

impl BrocardInellipse {
    pub fn for_frame(f: &BrocardFrame) -> Result<Self> {
        let t = &f.local;
        let (l1, l2) = (bary_to_cartesian(&f.omega1, t)?, bary_to_cartesian(&f.omega2, t)?);
        let major = f.circumradius * sin(f.omega);
        let local = Ellipse::from_foci(l1, l2, major)?;
        let ellipse = Ellipse { center: local.center + f.origin, form: local.form };
        Ok(BrocardInellipse {
            conic: ellipse.to_conic(),
            semi_axes: local.semi_axes(),
            foci: (l1 + f.origin, l2 + f.origin),
            ellipse,
            local,
        })
    }
}

pub fn brocard_inellipse(tri: [Point; 3]) -> Result<BrocardInellipse> {
    BrocardInellipse::for_frame(&brocard_frame(tri)?)
}

/// Closed-form reference barycentrics of the Brocard points shared by the
/// two incircle solutions.
pub fn shared_brocard_points(t: &TriangleData) -> (HomoBary, HomoBary) {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let alpha = (a - b) * (a - b) - (a + b) * c;
    let beta = (b - c) * (b - c) - (b + c) * a;
    let gamma = (c - a) * (c - a) - (c + a) * b;
    let (u, v, w) = (t.u(), t.v(), t.w());
    let (vw, uw, uv) = (v * w, u * w, u * v);
    (HomoBary::new(alpha * vw, beta * uw, gamma * uv), HomoBary::new(gamma * vw, alpha * uw, beta * uv))
}

fn solution_frame(vm: &VertexMatrix, t: &TriangleData) -> Result<BrocardFrame> {
    brocard_frame(vm.cartesian(t)?)
}

/// Self-consistency of one frame: Brocard points on the circle, the
/// perpendicularity, the Schoute center, inter-Brocard distance, inellipse
/// semi-axes and tangency, and the Lemoine axis as a radical axis. Lengths
/// are compared in units of the circumradius.
fn frame_checks(report: &mut Report, tag: &str, f: &BrocardFrame, e: &BrocardInellipse) -> Result<()> {
    let t = &f.local;
    let r = f.circumradius;
    let w1 = bary_to_cartesian(&f.omega1, t)?;
    let w2 = bary_to_cartesian(&f.omega2, t)?;
    let on = |p: Point| (p.distance(f.circle_center) - f.circle_radius).abs() / r;
    report.check(format!("{tag} brocard points on brocard circle"), on(w1).max(on(w2)), 1e-10);
    // 3·tan²ω = 1 − (δ/R)², compared squared: the angle itself is
    // ill-conditioned as δ → R
    let q = f.delta / r;
    let tw = tan(f.omega);
    report.check(format!("{tag} tan-omega formula"), (3.0 * tw * tw - (1.0 - q * q)).abs(), 1e-10);
    let sw = sin(f.omega);
    let want = 4.0 * r * r * sw * sw * (1.0 - 4.0 * sw * sw);
    let got = w1.distance(w2) * w1.distance(w2);
    report.check(format!("{tag} inter-brocard distance"), (got - want).abs() / (r * r * sw * sw), 1e-10);
    let (ma, mi) = e.semi_axes;
    let axes = ((ma - r * sw).abs()).max((mi - 2.0 * r * sw * sw).abs()) / ma;
    report.check(format!("{tag} inellipse semi-axes"), axes, 1e-10);
    let tangency = Vertex::ALL.iter().map(|v| e.local.tangency_gap(&t.side_line(*v))).fold(0.0, f64::max) / r;
    report.check(format!("{tag} inellipse tangent to own sides"), tangency, 1e-10);
    match (f.axis, f.x187) {
        (Some(axis), Some(x187)) => {
            let d = bary_direction_of(&axis, t)?;
            let chord = w2 - w1;
            report.check(format!("{tag} brocard chord perpendicular to axis"), (chord.dot(d) / (chord.norm() * d.norm())).abs(), 1e-10);
            report.check(format!("{tag} X187 on axis and lemoine"), axis.incidence(&x187).max(f.lemoine.incidence(&x187)), 1e-10);
            // equal powers at two points of the lemoine axis a circumradius apart
            let o = circumcenter(t);
            let (cb, rho) = (f.circle_center, f.circle_radius);
            let lem = cartesian_of_line(&f.lemoine, t)?;
            let n = Point::new(lem[0], lem[1]);
            let len = n.norm();
            let foot = o - n * ((n.dot(o) + lem[2]) / (len * len));
            let along = n.perp() * (r / len);
            let gap = |p: Point| (((p - o).dot(p - o) - r * r) - ((p - cb).dot(p - cb) - rho * rho)).abs() / (r * r);
            report.check(format!("{tag} lemoine is radical axis"), gap(foot).max(gap(foot + along)), 1e-10);
        }
        _ => {
            report.skip(format!("{tag} brocard chord perpendicular to axis"), "X3 = X6");
            report.skip(format!("{tag} X187 on axis and lemoine"), "X3 = X6");
            report.skip(format!("{tag} lemoine is radical axis"), "X3 = X6");
        }
    }
    Ok(())
}

/// Cartesian direction of a barycentric line.
fn bary_direction_of(l: &LineH, t: &TriangleData) -> Result<Point> {
    let c = cartesian_of_line(l, t)?;
    Ok(Point::new(-c[1], c[0]))
}

fn point_dev(p: &HomoBary, q: &HomoBary, from: (&TriangleData, &TriangleData), to: &TriangleData) -> Result<f64> {
    Ok(transfer_point(p, from.0, to)?.angular_distance(&transfer_point(q, from.1, to)?))
}

/// Every shared-object claim for the two incircle solutions of `t`.
pub fn verify_shared_objects(t: &TriangleData) -> Result<Report> {
    let (m1, m2) = incircle_solutions(t);
    verify_pair(t, &m1, &m2, "")
}

/// Shared-object checks for an arbitrary pair of solution triangles.
pub fn verify_pair(t: &TriangleData, m1: &VertexMatrix, m2: &VertexMatrix, prefix: &str) -> Result<Report> {
    let f1 = solution_frame(m1, t)?;
    let f2 = solution_frame(m2, t)?;
    let e1 = BrocardInellipse::for_frame(&f1)?;
    let e2 = BrocardInellipse::for_frame(&f2)?;
    let (s1, s2) = (&f1.triangle, &f2.triangle);
    // adds to `f2.local` coordinates to give `f1.local` ones
    let shift = f2.origin - f1.origin;
    let mut rep = Report::new();
    rep.check(format!("{prefix}omega equal"), (f1.omega - f2.omega).abs(), 1e-12);
    for (name, p, q) in [
        ("omega1", &f1.omega1, &f2.omega1),
        ("omega2", &f1.omega2, &f2.omega2),
        ("X15", &f1.x15, &f2.x15),
        ("X3", &f1.x3, &f2.x3),
        ("X6", &f1.x6, &f2.x6),
    ] {
        rep.check(format!("{prefix}{name} equal"), point_dev(p, q, (s1, s2), t)?, 1e-9);
    }
    match (&f1.x16, &f2.x16) {
        (Some(p), Some(q)) => {
            rep.check(format!("{prefix}X16 equal"), point_dev(p, q, (s1, s2), t)?, 1e-9);
        }
        _ => rep.skip(format!("{prefix}X16 equal"), "X3 = X6"),
    }
    match (&f1.x187, &f2.x187) {
        (Some(p), Some(q)) => {
            rep.check(format!("{prefix}X187 equal"), point_dev(p, q, (s1, s2), t)?, 1e-9);
        }
        _ => rep.skip(format!("{prefix}X187 equal"), "X3 = X6"),
    }
    match (&f1.axis, &f2.axis) {
        (Some(p), Some(q)) => {
            let d = transfer_line(p, s1, t)?.angular_distance(&transfer_line(q, s2, t)?);
            rep.check(format!("{prefix}brocard axis equal"), d, 1e-9);
        }
        _ => rep.skip(format!("{prefix}brocard axis equal"), "X3 = X6"),
    }
    let lem = transfer_line(&f1.lemoine, s1, t)?.angular_distance(&transfer_line(&f2.lemoine, s2, t)?);
    rep.check(format!("{prefix}lemoine axis equal"), lem, 1e-9);
    let scale = f1.circumradius;
    let circle = (f1.circle_center.distance(f2.circle_center + shift) + (f1.circle_radius - f2.circle_radius).abs()) / scale;
    rep.check(format!("{prefix}brocard circle equal"), circle, 1e-9);
    let moved = Ellipse { center: e2.local.center + shift, form: e2.local.form };
    rep.check(format!("{prefix}inellipse matrix equal"), e1.local.to_conic().angular_distance(&moved.to_conic()), 1e-9);
    let second = f2.local.vertices().map(|p| p + shift);
    let mut six = 0.0_f64;
    for v in Vertex::ALL {
        six = six.max(e1.local.tangency_gap(&f1.local.side_line(v)));
    }
    for i in 0..3 {
        six = six.max(e1.local.tangency_gap(&cartesian_line(second[i], second[(i + 1) % 3])));
    }
    rep.check(format!("{prefix}inellipse tangent to six sides"), six / scale, 1e-9);
    frame_checks(&mut rep, &format!("{prefix}T1"), &f1, &e1)?;
    frame_checks(&mut rep, &format!("{prefix}T2"), &f2, &e2)?;
    Ok(rep)
}

/// Closed-form Brocard points against those computed from each solution.
pub fn verify_brocard_closed_form(t: &TriangleData) -> Result<Report> {
    let (w1, w2) = shared_brocard_points(t);
    let (m1, m2) = incircle_solutions(t);
    let mut rep = Report::new();
    for vm in [&m1, &m2] {
        let f = solution_frame(vm, t)?;
        let d1 = transfer_point(&f.omega1, &f.triangle, t)?.angular_distance(&w1);
        let d2 = transfer_point(&f.omega2, &f.triangle, t)?.angular_distance(&w2);
        rep.check(format!("{} closed-form brocard points", vm.label.name()), d1.max(d2), 1e-9);
    }
    Ok(rep)
}

/// Brocard axis of a solution pair in reference barycentrics, if defined.
pub fn shared_axis(vm: &VertexMatrix, t: &TriangleData) -> Result<Option<LineH>> {
    let f = solution_frame(vm, t)?;
    f.axis.map(|a| transfer_line(&a, &f.triangle, t)).transpose()
}

/// The four shared Brocard axes pass through `X20`, and the incircle one
/// through `X1` and `X7` as well.
pub fn de_longchamps_concurrence(t: &TriangleData) -> Result<Report> {
    let x20 = centers::center(20, t)?;
    let mut rep = Report::new();
    for tag in CircleTag::ALL {
        let (m1, _) = solutions_for(t, tag);
        match shared_axis(&m1, t)? {
            Some(axis) => {
                rep.check(format!("{} axis contains X20", tag.name()), axis.incidence(&x20), 1e-9);
                if tag == CircleTag::Incircle {
                    let x1 = centers::center(1, t)?;
                    let x7 = centers::center(7, t)?;
                    rep.check("incircle axis contains X1 and X7", axis.incidence(&x1).max(axis.incidence(&x7)), 1e-9);
                }
            }
            None => rep.skip(format!("{} axis contains X20", tag.name()), "X3 = X6"),
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn angle_at(p: Point, x: Point, y: Point) -> f64 {
        let (d1, d2) = (x - p, y - p);
        crate::math::acos(d1.dot(d2) / (d1.norm() * d2.norm()))
    }

    #[test]
    fn equilateral_limits() {
        let t = TriangleData::from_sides(2.0, 2.0, 2.0).unwrap();
        let f = brocard_frame(t.vertices()).unwrap();
        assert!((f.omega - PI / 6.0).abs() < 1e-15);
        assert!(f.delta < 1e-14);
        assert!(f.axis.is_none() && f.x16.is_none() && f.x187.is_none());
        let e = BrocardInellipse::for_frame(&f).unwrap();
        assert!((e.semi_axes.0 - f.circumradius / 2.0).abs() < 1e-14);
        assert!((e.semi_axes.0 - e.semi_axes.1).abs() < 1e-14);
    }

    #[test]
    fn right_triangle_brocard_points_by_angles() {
        let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
        let f = brocard_frame(t.vertices()).unwrap();
        assert!((f.omega - atan(12.0 / 25.0)).abs() < 1e-15);
        let [a, b, c] = t.vertices();
        let w1 = bary_to_cartesian(&f.omega1, &t).unwrap();
        let w2 = bary_to_cartesian(&f.omega2, &t).unwrap();
        for got in [angle_at(a, b, w1), angle_at(b, c, w1), angle_at(c, a, w1)] {
            assert!((got - f.omega).abs() < 1e-10);
        }
        for got in [angle_at(a, c, w2), angle_at(b, a, w2), angle_at(c, b, w2)] {
            assert!((got - f.omega).abs() < 1e-10);
        }
    }

    #[test]
    fn angle_from_delta_limits() {
        assert!((brocard_angle_from_delta(0.0, 1.0).unwrap() - PI / 6.0).abs() < 1e-15);
        assert!(brocard_angle_from_delta(1.0, 1.0).unwrap().abs() < 1e-15);
        assert_eq!(brocard_angle_from_delta(1.1, 1.0), Err(Error::OutOfRange));
    }

    #[test]
    fn shared_objects_on_sample_triangles() {
        for (a, b, c) in [(6.0, 9.0, 13.0), (3.0, 4.0, 5.0), (2.0, 2.0, 2.0)] {
            let t = TriangleData::from_sides(a, b, c).unwrap();
            let rep = verify_shared_objects(&t).unwrap();
            assert!(rep.passed(), "{:?}", rep.failures().collect::<alloc::vec::Vec<_>>());
            assert!(verify_brocard_closed_form(&t).unwrap().passed());
            assert!(de_longchamps_concurrence(&t).unwrap().passed());
        }
    }
}
