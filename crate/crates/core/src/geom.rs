//! Numeric foundation: triangles, barycentric points and lines, circles.
//!
//! Every homogeneous object is compared by the sine of the angle between its
//! coordinate vectors, never componentwise.

use core::ops::{Add, Mul, Neg, Sub};

use crate::conic::ConicMatrix;
use crate::linalg::{cross3, dot3, max_abs3, norm3, sine_distance, Mat3, Vec3};
use crate::math::{hypot, sqrt};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the planar cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        hypot(self.x, self.y)
    }

    pub fn distance(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Homogeneous `[x, y, 1]`.
    pub fn homogeneous(self) -> Vec3 {
        [self.x, self.y, 1.0]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Reference vertex of a triangle (also names the opposite side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        match self {
            Vertex::A => 0,
            Vertex::B => 1,
            Vertex::C => 2,
        }
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i % 3]
    }

    /// A → B → C → A.
    pub fn next(self) -> Vertex {
        Vertex::from_index(self.index() + 1)
    }

    pub fn letter(self) -> char {
        ['A', 'B', 'C'][self.index()]
    }
}

/// Which tritangent circle a construction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleTag {
    Incircle,
    Excircle(Vertex),
}

impl CircleTag {
    pub const ALL: [CircleTag; 4] = [
        CircleTag::Incircle,
        CircleTag::Excircle(Vertex::A),
        CircleTag::Excircle(Vertex::B),
        CircleTag::Excircle(Vertex::C),
    ];

    pub fn name(self) -> &'static str {
        match self {
            CircleTag::Incircle => "incircle",
            CircleTag::Excircle(Vertex::A) => "excircle-A",
            CircleTag::Excircle(Vertex::B) => "excircle-B",
            CircleTag::Excircle(Vertex::C) => "excircle-C",
        }
    }
}

/// Homogeneous barycentric coordinates `[x : y : z]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomoBary {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl HomoBary {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        HomoBary { x, y, z }
    }

    pub fn from_array(v: Vec3) -> Self {
        HomoBary::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> Vec3 {
        [self.x, self.y, self.z]
    }

    pub fn vertex(v: Vertex) -> Self {
        let mut c = [0.0; 3];
        c[v.index()] = 1.0;
        HomoBary::from_array(c)
    }

    pub fn sum(self) -> f64 {
        self.x + self.y + self.z
    }

    pub fn max_abs(self) -> f64 {
        max_abs3(&self.to_array())
    }

    /// True when the coordinate sum vanishes relative to the components.
    pub fn is_at_infinity(self) -> bool {
        self.sum().abs() < 1e-14 * self.max_abs()
    }

    /// Sum-one form for finite points; max-|component|-one form (first
    /// nonzero component positive) at infinity.
    pub fn normalized(self) -> HomoBary {
        if self.is_at_infinity() {
            let m = self.max_abs();
            let v = self.to_array();
            let lead = v.iter().copied().find(|c| c.abs() > 0.0).unwrap_or(1.0);
            let k = if lead < 0.0 { -1.0 / m } else { 1.0 / m };
            self.scaled(k)
        } else {
            self.scaled(1.0 / self.sum())
        }
    }

    pub fn scaled(self, k: f64) -> HomoBary {
        HomoBary::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn angular_distance(&self, other: &HomoBary) -> f64 {
        sine_distance(&self.to_array(), &other.to_array())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Barycentric line `l·x + m·y + n·z = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineH {
    pub l: f64,
    pub m: f64,
    pub n: f64,
}

impl LineH {
    pub const fn new(l: f64, m: f64, n: f64) -> Self {
        LineH { l, m, n }
    }

    pub fn from_array(v: Vec3) -> Self {
        LineH::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> Vec3 {
        [self.l, self.m, self.n]
    }

    /// Side line opposite `v` (e.g. BC for A).
    pub fn side(v: Vertex) -> Self {
        let mut c = [0.0; 3];
        c[v.index()] = 1.0;
        LineH::from_array(c)
    }

    /// Normalized incidence residual `|L·p| / (‖L‖‖p‖)`.
    pub fn incidence(&self, p: &HomoBary) -> f64 {
        let l = self.to_array();
        let q = p.to_array();
        let n = norm3(&l) * norm3(&q);
        if n == 0.0 {
            return 0.0;
        }
        dot3(&l, &q).abs() / n
    }

    pub fn meet(&self, other: &LineH) -> HomoBary {
        HomoBary::from_array(cross3(&self.to_array(), &other.to_array()))
    }

    pub fn angular_distance(&self, other: &LineH) -> f64 {
        sine_distance(&self.to_array(), &other.to_array())
    }
}

/// Line through two barycentric points.
pub fn line_through(p: &HomoBary, q: &HomoBary) -> Result<LineH> {
    if p.angular_distance(q) < 1e-14 {
        return Err(Error::CoincidentPoints);
    }
    Ok(LineH::from_array(cross3(&unit(p.to_array()), &unit(q.to_array()))))
}

fn unit(v: Vec3) -> Vec3 {
    let n = norm3(&v);
    [v[0] / n, v[1] / n, v[2] / n]
}

/// Signed sidelengths. Closed-form formulas are evaluated on this context so
/// that an exversion (negating one side) can be applied to any of them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Sides {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Sides { a, b, c }
    }

    pub fn s(&self) -> f64 {
        0.5 * (self.a + self.b + self.c)
    }

    pub fn u(&self) -> f64 {
        self.s() - self.a
    }

    pub fn v(&self) -> f64 {
        self.s() - self.b
    }

    pub fn w(&self) -> f64 {
        self.s() - self.c
    }

    pub fn get(&self, v: Vertex) -> f64 {
        self.to_array()[v.index()]
    }

    pub fn to_array(&self) -> Vec3 {
        [self.a, self.b, self.c]
    }

    pub fn from_array(v: Vec3) -> Self {
        Sides::new(v[0], v[1], v[2])
    }

    /// Negate the side opposite `v`.
    pub fn exversion(&self, v: Vertex) -> Sides {
        let mut x = self.to_array();
        x[v.index()] = -x[v.index()];
        Sides::from_array(x)
    }

    /// `(a, b, c) → (b, c, a)`.
    pub fn rotated(&self) -> Sides {
        Sides::new(self.b, self.c, self.a)
    }
}

/// A nondegenerate reference triangle with its standard derived lengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleData {
    a: f64,
    b: f64,
    c: f64,
    area: f64,
    vertices: [Point; 3],
}

impl TriangleData {
    /// Canonical embedding: `B = (0,0)`, `C = (a,0)`, `A` above the x-axis.
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a <= 0.0 || b <= 0.0 || c <= 0.0 {
            return Err(Error::DegenerateTriangle);
        }
        if !(a + b > c && b + c > a && c + a > b) {
            return Err(Error::DegenerateTriangle);
        }
        let area = heron_area(a, b, c);
        let s = 0.5 * (a + b + c);
        if !(area >= 1e-12 * s * s) {
            return Err(Error::DegenerateTriangle);
        }
        let ax = (a * a + c * c - b * b) / (2.0 * a);
        let ay = 2.0 * area / a;
        Ok(TriangleData {
            a,
            b,
            c,
            area,
            vertices: [Point::new(ax, ay), Point::new(0.0, 0.0), Point::new(a, 0.0)],
        })
    }

    /// Keeps the given placement (and orientation) of the vertices.
    pub fn from_vertices(vertices: [Point; 3]) -> Result<Self> {
        if !vertices.iter().all(|p| p.is_finite()) {
            return Err(Error::InvalidInput("non-finite vertex"));
        }
        let [pa, pb, pc] = vertices;
        let a = pb.distance(pc);
        let b = pc.distance(pa);
        let c = pa.distance(pb);
        let s = 0.5 * (a + b + c);
        let area = 0.5 * (pb - pa).cross(pc - pa).abs();
        if !(area >= 1e-12 * s * s) {
            return Err(Error::DegenerateTriangle);
        }
        Ok(TriangleData { a, b, c, area, vertices })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn sides(&self) -> Sides {
        Sides::new(self.a, self.b, self.c)
    }
    pub fn s(&self) -> f64 {
        0.5 * (self.a + self.b + self.c)
    }
    pub fn u(&self) -> f64 {
        self.s() - self.a
    }
    pub fn v(&self) -> f64 {
        self.s() - self.b
    }
    pub fn w(&self) -> f64 {
        self.s() - self.c
    }
    pub fn area(&self) -> f64 {
        self.area
    }
    pub fn inradius(&self) -> f64 {
        self.area / self.s()
    }
    pub fn circumradius(&self) -> f64 {
        self.a * self.b * self.c / (4.0 * self.area)
    }
    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }
    pub fn vertex(&self, v: Vertex) -> Point {
        self.vertices[v.index()]
    }
    pub fn max_side(&self) -> f64 {
        self.a.max(self.b).max(self.c)
    }

    /// Homogeneous map barycentric → `[x, y, w]` cartesian.
    pub fn frame(&self) -> Mat3 {
        let [p, q, r] = self.vertices;
        Mat3::from_columns(p.homogeneous(), q.homogeneous(), r.homogeneous())
    }

    /// Cartesian side line opposite `v` as `[α, β, γ]`, `αx + βy + γ = 0`,
    /// with `(α, β)` a unit normal.
    pub fn side_line(&self, v: Vertex) -> Vec3 {
        let p = self.vertex(v.next());
        let q = self.vertex(v.next().next());
        cartesian_line(p, q)
    }
}

/// Heron's formula in the cancellation-free ordering.
fn heron_area(a: f64, b: f64, c: f64) -> f64 {
    let mut x = [a, b, c];
    x.sort_by(|p, q| q.partial_cmp(p).unwrap_or(core::cmp::Ordering::Equal));
    let [a, b, c] = x;
    let prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    0.25 * sqrt(prod.max(0.0))
}

/// Line through two cartesian points, unit normal form.
pub fn cartesian_line(p: Point, q: Point) -> Vec3 {
    let d = q - p;
    let n = d.perp();
    let len = n.norm();
    let n = n * (1.0 / len);
    [n.x, n.y, -n.dot(p)]
}

/// Signed distance from a cartesian point to a unit-normal line.
pub fn line_distance(line: &Vec3, p: Point) -> f64 {
    let k = hypot(line[0], line[1]);
    (line[0] * p.x + line[1] * p.y + line[2]) / k
}

pub fn bary_to_cartesian(p: &HomoBary, t: &TriangleData) -> Result<Point> {
    if !p.is_finite() {
        return Err(Error::InvalidInput("non-finite barycentrics"));
    }
    let sum = p.sum();
    if sum.abs() < 1e-14 * p.max_abs() || sum == 0.0 {
        return Err(Error::InfinitePoint);
    }
    let [va, vb, vc] = t.vertices;
    // Weighted about the first vertex to keep the sum well scaled.
    let off = (vb - va) * (p.y / sum) + (vc - va) * (p.z / sum);
    Ok(va + off)
}

pub fn cartesian_to_bary(pt: Point, t: &TriangleData) -> HomoBary {
    let [va, vb, vc] = t.vertices;
    let x = (vb - pt).cross(vc - pt);
    let y = (vc - pt).cross(va - pt);
    let z = (va - pt).cross(vb - pt);
    let total = x + y + z;
    HomoBary::new(x / total, y / total, z / total)
}

/// Direction vector (cartesian) of a barycentric point at infinity.
pub fn bary_direction(p: &HomoBary, t: &TriangleData) -> Point {
    let h = t.frame().mul_vec(&p.to_array());
    Point::new(h[0], h[1])
}

/// Re-express a point (finite or not) given in `from` barycentrics in `to`.
pub fn transfer_point(p: &HomoBary, from: &TriangleData, to: &TriangleData) -> Result<HomoBary> {
    let inv = to.frame().inverse().ok_or(Error::DegenerateTriangle)?;
    Ok(HomoBary::from_array(inv.mul_vec(&from.frame().mul_vec(&p.to_array()))))
}

/// Re-express a barycentric line of `from` in `to` barycentrics.
pub fn transfer_line(l: &LineH, from: &TriangleData, to: &TriangleData) -> Result<LineH> {
    let inv = from.frame().inverse().ok_or(Error::DegenerateTriangle)?;
    let cart = inv.transpose().mul_vec(&l.to_array());
    Ok(LineH::from_array(to.frame().transpose().mul_vec(&cart)))
}

/// Barycentric line of `t` for a cartesian line `[α, β, γ]`.
pub fn bary_line(line: &Vec3, t: &TriangleData) -> LineH {
    LineH::from_array(t.frame().transpose().mul_vec(line))
}

/// Cartesian `[α, β, γ]` of a barycentric line of `t`.
pub fn cartesian_of_line(l: &LineH, t: &TriangleData) -> Result<Vec3> {
    let inv = t.frame().inverse().ok_or(Error::DegenerateTriangle)?;
    Ok(inv.transpose().mul_vec(&l.to_array()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleData {
    pub center: Point,
    pub radius: f64,
}

impl CircleData {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidInput("circle needs a finite center and positive radius"));
        }
        Ok(CircleData { center, radius })
    }

    /// `|‖p − center‖ − radius| / radius`.
    pub fn on_circle_residual(&self, p: Point) -> f64 {
        (p.distance(self.center) - self.radius).abs() / self.radius
    }

    /// Point-conic in homogeneous cartesian coordinates.
    pub fn to_conic(&self) -> ConicMatrix {
        let (cx, cy, r) = (self.center.x, self.center.y, self.radius);
        ConicMatrix::point(Mat3([
            [1.0, 0.0, -cx],
            [0.0, 1.0, -cy],
            [-cx, -cy, cx * cx + cy * cy - r * r],
        ]))
    }

    /// Tangency residual of a cartesian line: `|dist(center) − r| / r`.
    pub fn tangency_residual(&self, line: &Vec3) -> f64 {
        (line_distance(line, self.center).abs() - self.radius).abs() / self.radius
    }

    /// Point of the circle at angle `theta`.
    pub fn at_angle(&self, theta: f64) -> Point {
        self.center + Point::new(crate::math::cos(theta), crate::math::sin(theta)) * self.radius
    }
}

pub fn incircle(t: &TriangleData) -> CircleData {
    circle_for(t, CircleTag::Incircle)
}

pub fn excircle(t: &TriangleData, which: Vertex) -> CircleData {
    circle_for(t, CircleTag::Excircle(which))
}

pub fn circle_for(t: &TriangleData, tag: CircleTag) -> CircleData {
    match tag {
        CircleTag::Incircle => {
            let center = bary_to_cartesian(&HomoBary::new(t.a, t.b, t.c), t)
                .expect("tritangent centers are finite for a nondegenerate triangle");
            CircleData { center, radius: t.area / t.s() }
        }
        CircleTag::Excircle(v) => excircle_at(t, v),
    }
}

/// Excircle opposite `v`, built from the touch point on the far side and the
/// half-angle at an end of that side. `s − a` cancels on flat triangles; the
/// longer tangent length and the angle's cotangent do not.
fn excircle_at(t: &TriangleData, v: Vertex) -> CircleData {
    let sides = t.sides();
    let (p, q) = (v.next(), v.next().next());
    let tangent = |from: Vertex, other: Vertex| 0.5 * ((sides.get(v) + sides.get(from)) - sides.get(other));
    let (from, to, len) = if tangent(p, q) >= tangent(q, p) { (p, q, tangent(p, q)) } else { (q, p, tangent(q, p)) };
    let (pf, pt, pv) = (t.vertex(from), t.vertex(to), t.vertex(v));
    let (side, arm) = (pt - pf, pv - pf);
    let (side_len, arm_len) = (side.norm(), arm.norm());
    let cross = side.cross(arm);
    // cot of half the angle at `from`
    let cot = (side_len * arm_len + side.dot(arm)) / cross.abs();
    let radius = len * cot;
    let along = side * (1.0 / side_len);
    // normal pointing away from `v`
    let away = if cross > 0.0 { Point::new(along.y, -along.x) } else { Point::new(-along.y, along.x) };
    CircleData { center: pf + along * len + away * radius, radius }
}

/// Tangency point of a tritangent circle with the side line opposite `side`.
pub fn touch_point(circle: &CircleData, t: &TriangleData, side: Vertex) -> Point {
    let line = t.side_line(side);
    let d = line_distance(&line, circle.center);
    circle.center - Point::new(line[0], line[1]) * d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_triangle_embedding() {
        let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
        let [a, b, c] = t.vertices();
        assert!((b.distance(c) - 3.0).abs() < 1e-12);
        assert!((c.distance(a) - 4.0).abs() < 1e-12);
        assert!((a.distance(b) - 5.0).abs() < 1e-12);
        assert!((t.area() - 6.0).abs() < 1e-12);
        assert!((t.inradius() - 1.0).abs() < 1e-12);
        assert!((t.circumradius() - 2.5).abs() < 1e-12);
        assert!(a.y > 0.0);
    }

    #[test]
    fn rejects_bad_triangles() {
        assert_eq!(TriangleData::from_sides(1.0, 2.0, 3.0), Err(Error::DegenerateTriangle));
        assert_eq!(TriangleData::from_sides(-1.0, 2.0, 2.0), Err(Error::DegenerateTriangle));
        let flat = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 1e-13)];
        assert_eq!(TriangleData::from_vertices(flat), Err(Error::DegenerateTriangle));
        assert!(TriangleData::from_sides(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn vertices_and_centroid() {
        let t = TriangleData::from_sides(6.0, 9.0, 13.0).unwrap();
        let [a, b, c] = t.vertices();
        let g = bary_to_cartesian(&HomoBary::new(1.0, 1.0, 1.0), &t).unwrap();
        let want = (a + b + c) * (1.0 / 3.0);
        assert!(g.distance(want) < 1e-12);
        let pa = bary_to_cartesian(&HomoBary::new(1.0, 0.0, 0.0), &t).unwrap();
        assert!(pa.distance(a) < 1e-12);
        let back = cartesian_to_bary(a, &t).normalized();
        assert!(back.angular_distance(&HomoBary::new(1.0, 0.0, 0.0)) < 1e-14);
        let gb = cartesian_to_bary(want, &t);
        assert!(gb.angular_distance(&HomoBary::new(1.0, 1.0, 1.0)) < 1e-14);
    }

    #[test]
    fn incenter_is_unit_distance_from_sides_of_345() {
        let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
        let i = bary_to_cartesian(&HomoBary::new(3.0, 4.0, 5.0), &t).unwrap();
        for v in Vertex::ALL {
            let d = line_distance(&t.side_line(v), i).abs();
            assert!((d - 1.0).abs() < 1e-12, "{d}");
        }
    }

    #[test]
    fn point_at_infinity_has_no_position() {
        let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
        let p = HomoBary::new(1.0, -2.0, 1.0);
        assert_eq!(bary_to_cartesian(&p, &t), Err(Error::InfinitePoint));
        let n = p.normalized();
        assert!((n.max_abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn side_ab_through_two_vertices() {
        let l = line_through(&HomoBary::new(1.0, 0.0, 0.0), &HomoBary::new(0.0, 1.0, 0.0)).unwrap();
        assert!(l.angular_distance(&LineH::new(0.0, 0.0, 1.0)) < 1e-15);
        let p = HomoBary::new(2.0, 0.5, -1.0);
        let q = HomoBary::new(-0.3, 1.0, 4.0);
        let l = line_through(&p, &q).unwrap();
        assert!(l.incidence(&p) < 1e-15 && l.incidence(&q) < 1e-15);
        assert_eq!(line_through(&p, &p.scaled(-3.0)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn tritangent_circles() {
        let e = TriangleData::from_sides(2.0, 2.0, 2.0).unwrap();
        let ic = incircle(&e);
        let [a, b, c] = e.vertices();
        assert!(ic.center.distance((a + b + c) * (1.0 / 3.0)) < 1e-12);
        assert!((ic.radius - 1.0 / sqrt(3.0)).abs() < 1e-12);
        let radii: [f64; 3] = Vertex::ALL.map(|v| excircle(&e, v).radius);
        assert!((radii[0] - radii[1]).abs() < 1e-12 && (radii[1] - radii[2]).abs() < 1e-12);

        let t = TriangleData::from_sides(3.0, 4.0, 5.0).unwrap();
        assert!((incircle(&t).radius - 1.0).abs() < 1e-12);
        let ea = excircle(&t, Vertex::A);
        assert!((ea.radius - 2.0).abs() < 1e-12);
        for circle in [incircle(&t), ea, excircle(&t, Vertex::B), excircle(&t, Vertex::C)] {
            for v in Vertex::ALL {
                assert!(circle.tangency_residual(&t.side_line(v)) < 1e-12);
            }
        }
    }
}
