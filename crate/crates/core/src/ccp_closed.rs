//! Golden-ratio closed forms for the triangle case on a tritangent circle.
//!
//! Rows are stored with their denominators cleared: an incircle row written
//! as `[k₁/u, k₂/v, k₃/w]` is kept as `[k₁vw, k₂uw, k₃uv]`.
//!
//! Vertex labels follow side incidence. Side `i` of a matrix joins rows `i`
//! and `i + 1`, and `side_through[i]` is the reference vertex on it. A row is
//! named after the reference vertex on the side opposite to it.

use alloc::vec::Vec;

use crate::geom::{bary_to_cartesian, cartesian_to_bary, circle_for, line_through, CircleTag, HomoBary, LineH, Point, Sides, TriangleData, Vertex};
use crate::linalg::{collinearity, Vec3};
use crate::math::sqrt;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionLabel {
    T1,
    T2,
}

impl SolutionLabel {
    pub const ALL: [SolutionLabel; 2] = [SolutionLabel::T1, SolutionLabel::T2];

    pub fn name(self) -> &'static str {
        match self {
            SolutionLabel::T1 => "T1",
            SolutionLabel::T2 => "T2",
        }
    }
}

/// The golden ratio, or its conjugate, with the squares used by the matrices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GoldenConstants {
    pub phi: f64,
}

impl Default for GoldenConstants {
    fn default() -> Self {
        GoldenConstants::golden()
    }
}

impl GoldenConstants {
    pub fn golden() -> Self {
        GoldenConstants { phi: 0.5 * (1.0 + sqrt(5.0)) }
    }

    /// The other root of `x² = x + 1`.
    pub fn conjugate(&self) -> Self {
        GoldenConstants { phi: 1.0 - self.phi }
    }

    fn sq(x: f64) -> f64 {
        x * x
    }

    pub fn phi_sq(&self) -> f64 {
        Self::sq(self.phi)
    }
    pub fn phi_m1_sq(&self) -> f64 {
        Self::sq(self.phi - 1.0)
    }
    pub fn phi_m2_sq(&self) -> f64 {
        Self::sq(self.phi - 2.0)
    }
    pub fn two_phi_m3_sq(&self) -> f64 {
        Self::sq(2.0 * self.phi - 3.0)
    }
    pub fn phi_p1_sq(&self) -> f64 {
        Self::sq(self.phi + 1.0)
    }
    pub fn two_phi_p1_sq(&self) -> f64 {
        Self::sq(2.0 * self.phi + 1.0)
    }
    pub fn three_phi_p2_sq(&self) -> f64 {
        Self::sq(3.0 * self.phi + 2.0)
    }

    /// Largest defect among `φ² = φ + 1`, `(φ−1)² = 2 − φ`, `(φ−2)² = (φ−1)⁴`.
    pub fn identity_defect(&self) -> f64 {
        let p = self.phi;
        let d1 = (self.phi_sq() - (p + 1.0)).abs();
        let d2 = (self.phi_m1_sq() - (2.0 - p)).abs();
        let d3 = (self.phi_m2_sq() - Self::sq(self.phi_m1_sq())).abs();
        d1.max(d2).max(d3)
    }
}

/// One solution triangle in reference barycentrics.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexMatrix {
    pub rows: [HomoBary; 3],
    pub label: SolutionLabel,
    pub circle: CircleTag,
    /// Reference vertex on the side joining rows `i` and `i + 1`.
    pub side_through: [Vertex; 3],
}

impl VertexMatrix {
    pub fn cartesian(&self, t: &TriangleData) -> Result<[Point; 3]> {
        let [p, q, r] = &self.rows;
        Ok([bary_to_cartesian(p, t)?, bary_to_cartesian(q, t)?, bary_to_cartesian(r, t)?])
    }

    /// Vertex names of the rows, in row order.
    pub fn vertex_labels(&self) -> [Vertex; 3] {
        core::array::from_fn(|j| self.side_through[(j + 1) % 3])
    }

    pub fn row_for(&self, v: Vertex) -> HomoBary {
        let j = self.vertex_labels().iter().position(|x| *x == v).expect("labels are a permutation");
        self.rows[j]
    }

    pub fn side_lines(&self) -> Result<[LineH; 3]> {
        let r = &self.rows;
        Ok([line_through(&r[0], &r[1])?, line_through(&r[1], &r[2])?, line_through(&r[2], &r[0])?])
    }

    /// Largest `|dist(row, center) − radius| / radius` against the tagged circle.
    pub fn on_circle_residual(&self, t: &TriangleData) -> Result<f64> {
        let circle = circle_for(t, self.circle);
        Ok(self.cartesian(t)?.iter().map(|p| circle.on_circle_residual(*p)).fold(0.0, f64::max))
    }

    /// Largest normalized determinant of (row `i`, row `i + 1`, assigned vertex).
    pub fn side_incidence_residual(&self) -> f64 {
        (0..3)
            .map(|i| {
                let v = HomoBary::vertex(self.side_through[i]).to_array();
                collinearity(&self.rows[i].to_array(), &self.rows[(i + 1) % 3].to_array(), &v)
            })
            .fold(0.0, f64::max)
    }

    /// Side-to-vertex assignment read off numerically: for each side the
    /// unique reference vertex within `tol`, or `None`.
    pub fn detect_side_pattern(&self, tol: f64) -> Option<[Vertex; 3]> {
        let mut out = [Vertex::A; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let hits: Vec<Vertex> = Vertex::ALL
                .into_iter()
                .filter(|v| {
                    let e = HomoBary::vertex(*v).to_array();
                    collinearity(&self.rows[i].to_array(), &self.rows[(i + 1) % 3].to_array(), &e) <= tol
                })
                .collect();
            if hits.len() != 1 {
                return None;
            }
            *slot = hits[0];
        }
        Some(out)
    }
}

fn row(v: Vec3) -> HomoBary {
    HomoBary::from_array(v)
}

fn incircle_t1(s: &Sides, g: &GoldenConstants) -> [Vec3; 3] {
    let (u, v, w) = (s.u(), s.v(), s.w());
    let (vw, uw, uv) = (v * w, u * w, u * v);
    [
        [g.phi_sq() * vw, uw, g.phi_m1_sq() * uv],
        [g.phi_m2_sq() * vw, uw, g.phi_m1_sq() * uv],
        [g.phi_m2_sq() * vw, g.two_phi_m3_sq() * uw, g.phi_m1_sq() * uv],
    ]
}

fn incircle_t2(s: &Sides, g: &GoldenConstants) -> [Vec3; 3] {
    let (u, v, w) = (s.u(), s.v(), s.w());
    let (vw, uw, uv) = (v * w, u * w, u * v);
    [
        [vw, g.phi_sq() * uw, g.phi_p1_sq() * uv],
        [g.two_phi_p1_sq() * vw, g.phi_sq() * uw, g.phi_p1_sq() * uv],
        [g.two_phi_p1_sq() * vw, g.three_phi_p2_sq() * uw, g.phi_p1_sq() * uv],
    ]
}

fn a_excircle_t1(s: &Sides, g: &GoldenConstants) -> [Vec3; 3] {
    let (p, v, w) = (s.s(), s.v(), s.w());
    let (f1, f2) = (g.phi_m1_sq(), g.phi_m2_sq());
    [
        [-w * v * f1, p * v, w * p * f2],
        [-w * v * f2, p * v * f1, p * w],
        [-v * w, p * v * f2, w * p * f1],
    ]
}

fn a_excircle_t2(s: &Sides, g: &GoldenConstants) -> [Vec3; 3] {
    let (p, v, w) = (s.s(), s.v(), s.w());
    let (f1, f2) = (g.phi_m1_sq(), g.phi_m2_sq());
    [
        [-v * w * f1, v * p * f2, p * w],
        [-w * v, v * p * f1, p * w * f2],
        [-v * w * f2, p * v, p * w * f1],
    ]
}

/// `[p, q, r] → [r, p, q]`, the coordinate half of the cyclic relabeling.
fn rotate_coords(v: Vec3) -> Vec3 {
    [v[2], v[0], v[1]]
}

/// Excircle matrices opposite `which`; B and C are relabelings of A.
fn excircle_rows(s: &Sides, which: Vertex, label: SolutionLabel, g: &GoldenConstants) -> [Vec3; 3] {
    let base = |s: &Sides| match label {
        SolutionLabel::T1 => a_excircle_t1(s, g),
        SolutionLabel::T2 => a_excircle_t2(s, g),
    };
    match which {
        Vertex::A => base(s),
        Vertex::B => base(&s.rotated()).map(rotate_coords),
        Vertex::C => base(&s.rotated().rotated()).map(|r| rotate_coords(rotate_coords(r))),
    }
}

fn excircle_pattern(which: Vertex) -> [Vertex; 3] {
    match which {
        Vertex::A => [Vertex::C, Vertex::A, Vertex::B],
        Vertex::B => [Vertex::A, Vertex::B, Vertex::C],
        Vertex::C => [Vertex::B, Vertex::C, Vertex::A],
    }
}

const INCIRCLE_PATTERN: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

fn matrix(rows: [Vec3; 3], label: SolutionLabel, circle: CircleTag, side_through: [Vertex; 3]) -> VertexMatrix {
    VertexMatrix { rows: rows.map(row), label, circle, side_through }
}

pub fn incircle_solutions(t: &TriangleData) -> (VertexMatrix, VertexMatrix) {
    incircle_solutions_with(&GoldenConstants::golden(), &t.sides())
}

/// Incircle matrices for arbitrary constants and a signed side context.
pub fn incircle_solutions_with(g: &GoldenConstants, s: &Sides) -> (VertexMatrix, VertexMatrix) {
    (
        matrix(incircle_t1(s, g), SolutionLabel::T1, CircleTag::Incircle, INCIRCLE_PATTERN),
        matrix(incircle_t2(s, g), SolutionLabel::T2, CircleTag::Incircle, INCIRCLE_PATTERN),
    )
}

pub fn excircle_solutions(t: &TriangleData, which: Vertex) -> (VertexMatrix, VertexMatrix) {
    let g = GoldenConstants::golden();
    let s = t.sides();
    let tag = CircleTag::Excircle(which);
    let pat = excircle_pattern(which);
    (
        matrix(excircle_rows(&s, which, SolutionLabel::T1, &g), SolutionLabel::T1, tag, pat),
        matrix(excircle_rows(&s, which, SolutionLabel::T2, &g), SolutionLabel::T2, tag, pat),
    )
}

/// Both closed-form solutions on any tritangent circle.
pub fn solutions_for(t: &TriangleData, tag: CircleTag) -> (VertexMatrix, VertexMatrix) {
    match tag {
        CircleTag::Incircle => incircle_solutions(t),
        CircleTag::Excircle(v) => excircle_solutions(t, v),
    }
}

/// Evaluation context with the side opposite `vertex` negated.
pub fn exversion(t: &TriangleData, vertex: Vertex) -> Sides {
    t.sides().exversion(vertex)
}

/// Gergonne point `[1/u : 1/v : 1/w]` with cleared denominators.
pub fn gergonne(s: &Sides) -> HomoBary {
    let (u, v, w) = (s.u(), s.v(), s.w());
    HomoBary::new(v * w, u * w, u * v)
}

/// Symmedian point of a solution triangle, in reference barycentrics.
pub fn solution_symmedian(vm: &VertexMatrix, t: &TriangleData) -> Result<HomoBary> {
    let [p, q, r] = vm.cartesian(t)?;
    let (a2, b2, c2) = ((q - r).dot(q - r), (r - p).dot(r - p), (p - q).dot(p - q));
    let k = (p * a2 + q * b2 + r * c2) * (1.0 / (a2 + b2 + c2));
    Ok(cartesian_to_bary(k, t))
}

/// One formal move of the vertex generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `b ↔ c` with the last two coordinates exchanged.
    BicentricSwap,
    /// `a → b → c → a` with coordinates rotated `[p, q, r] → [r, p, q]`.
    Cyclic,
    /// Negate the side opposite the vertex.
    Exversion(Vertex),
}

/// The seed vertex formula: the A-vertex of the incircle solution stored as
/// `T2`, written over the signed sides.
pub fn seed_formula(s: &Sides) -> Vec3 {
    let g = GoldenConstants::golden();
    let (a, b, c, p) = (s.a, s.b, s.c, s.s());
    [
        (c - p) * (p - b) * g.phi_m1_sq(),
        (c - p) * (p - a),
        (b - p) * (p - a) * g.phi_m2_sq(),
    ]
}

/// Evaluate `steps` applied to the seed, first step innermost.
pub fn apply_substitutions(steps: &[Substitution], s: &Sides) -> Vec3 {
    match steps.split_last() {
        None => seed_formula(s),
        Some((last, rest)) => match last {
            Substitution::BicentricSwap => {
                let r = apply_substitutions(rest, &Sides::new(s.a, s.c, s.b));
                [r[0], r[2], r[1]]
            }
            Substitution::Cyclic => rotate_coords(apply_substitutions(rest, &s.rotated())),
            Substitution::Exversion(v) => apply_substitutions(rest, &s.exversion(*v)),
        },
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedVertex {
    pub circle: CircleTag,
    pub label: SolutionLabel,
    pub vertex: Vertex,
    pub steps: Vec<Substitution>,
    pub coords: HomoBary,
}

/// Solution label produced from the seed family (`swapped = false`) or its
/// bicentric image, on the given circle.
fn family_label(circle: CircleTag, swapped: bool) -> SolutionLabel {
    match (circle, swapped) {
        (CircleTag::Incircle, false) | (CircleTag::Excircle(_), true) => SolutionLabel::T2,
        _ => SolutionLabel::T1,
    }
}

/// Every vertex of all eight solutions from the single seed vertex.
///
/// `seed` must be the A-vertex of the incircle solution stored as `T2`; a
/// seed further than `1e−10` (angular) from it is rejected.
pub fn twenty_three_from_one(seed: &HomoBary, t: &TriangleData) -> Result<Vec<GeneratedVertex>> {
    let s = t.sides();
    if seed.angular_distance(&row(seed_formula(&s))) > 1e-10 {
        return Err(Error::SeedMismatch);
    }
    let mut out = Vec::with_capacity(24);
    for circle in CircleTag::ALL {
        for swapped in [false, true] {
            for vertex in Vertex::ALL {
                let mut steps = Vec::new();
                if swapped {
                    steps.push(Substitution::BicentricSwap);
                }
                for _ in 0..vertex.index() {
                    steps.push(Substitution::Cyclic);
                }
                if let CircleTag::Excircle(v) = circle {
                    steps.push(Substitution::Exversion(v));
                }
                let coords = row(apply_substitutions(&steps, &s));
                out.push(GeneratedVertex { circle, label: family_label(circle, swapped), vertex, steps, coords });
            }
        }
    }
    Ok(out)
}
