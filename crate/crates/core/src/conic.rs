//! Conics as symmetric homogeneous matrices, plus a metric ellipse type.
//!
//! A [`ConicMatrix`] carries no frame of its own: it is a conic in whatever
//! homogeneous coordinates the caller feeds it (cartesian `[x, y, 1]` or
//! barycentrics of some triangle). [`Ellipse`] is always cartesian.

use crate::geom::{line_distance, LineH, Point, TriangleData};
use crate::linalg::{dot3, norm3, null_vector6, sym2_eigen, Mat3, Vec3};
use crate::math::sqrt;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicKind {
    /// Locus of points `pᵀ M p = 0`.
    Point,
    /// Envelope of lines `Lᵀ M L = 0` (dual conic).
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConicMatrix {
    m: Mat3,
    kind: ConicKind,
}

impl ConicMatrix {
    pub fn point(m: Mat3) -> Self {
        ConicMatrix { m: m.symmetrized(), kind: ConicKind::Point }
    }

    pub fn line(m: Mat3) -> Self {
        ConicMatrix { m: m.symmetrized(), kind: ConicKind::Line }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn kind(&self) -> ConicKind {
        self.kind
    }

    /// Switches between point and line form (adjugate, rescaled to unit norm).
    pub fn dual(&self) -> ConicMatrix {
        let adj = self.m.adjugate();
        let n = adj.frobenius();
        let adj = if n > 0.0 { adj.scale(1.0 / n) } else { adj };
        match self.kind {
            ConicKind::Point => ConicMatrix::line(adj),
            ConicKind::Line => ConicMatrix::point(adj),
        }
    }

    pub fn as_point_conic(&self) -> ConicMatrix {
        match self.kind {
            ConicKind::Point => *self,
            ConicKind::Line => self.dual(),
        }
    }

    pub fn as_line_conic(&self) -> ConicMatrix {
        match self.kind {
            ConicKind::Line => *self,
            ConicKind::Point => self.dual(),
        }
    }

    /// Normalized `|pᵀ M p| / (‖p‖² ‖M‖)` against the point form.
    pub fn point_residual(&self, p: &Vec3) -> f64 {
        quad_residual(self.as_point_conic().matrix(), p)
    }

    /// Normalized `|Lᵀ M* L| / (‖L‖² ‖M*‖)` against the line form.
    pub fn tangency_residual(&self, line: &Vec3) -> f64 {
        quad_residual(self.as_line_conic().matrix(), line)
    }

    /// Angular distance of the two matrices in the same form. Both must be
    /// expressed in the same frame.
    pub fn angular_distance(&self, other: &ConicMatrix) -> f64 {
        match (self.kind, other.kind) {
            (ConicKind::Point, ConicKind::Point) | (ConicKind::Line, ConicKind::Line) => {
                self.m.angular_distance(&other.m)
            }
            _ => self.as_line_conic().m.angular_distance(&other.as_line_conic().m),
        }
    }

    /// Re-express in a new frame, where `old = frame·new` for point coordinates.
    pub fn pull_back(&self, frame: &Mat3) -> Result<ConicMatrix> {
        match self.kind {
            ConicKind::Point => Ok(ConicMatrix::point(self.m.congruence(frame))),
            ConicKind::Line => {
                // lines transform as L_new = frameᵀ L_old
                let inv = frame.inverse().ok_or(Error::InvalidInput("singular frame"))?;
                Ok(ConicMatrix::line(self.m.congruence(&inv.transpose())))
            }
        }
    }

    /// Cartesian point conic → barycentrics of `t`.
    pub fn to_barycentric(&self, t: &TriangleData) -> Result<ConicMatrix> {
        self.pull_back(&t.frame())
    }

    /// Barycentrics of `t` → cartesian.
    pub fn to_cartesian(&self, t: &TriangleData) -> Result<ConicMatrix> {
        let inv = t.frame().inverse().ok_or(Error::DegenerateTriangle)?;
        self.pull_back(&inv)
    }
}

fn quad_residual(m: &Mat3, v: &Vec3) -> f64 {
    let nv = norm3(v);
    let nm = m.frobenius();
    if nv == 0.0 || nm == 0.0 {
        return 0.0;
    }
    let u = [v[0] / nv, v[1] / nv, v[2] / nv];
    dot3(&u, &m.mul_vec(&u)).abs() / nm
}

/// Dual conic tangent to five lines.
///
/// Returned in line form, in the lines' own frame.
pub fn conic_from_tangent_lines(lines: &[LineH; 5]) -> Result<ConicMatrix> {
    let mut rows = [[0.0; 6]; 5];
    for (row, line) in rows.iter_mut().zip(lines.iter()) {
        let v = line.to_array();
        let n = norm3(&v);
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidInput("zero or non-finite line"));
        }
        let [l, m, k] = [v[0] / n, v[1] / n, v[2] / n];
        *row = [l * l, m * m, k * k, 2.0 * l * m, 2.0 * l * k, 2.0 * m * k];
    }
    let (x, pivot_ratio) = null_vector6(&rows);
    if pivot_ratio < 1e-10 {
        return Err(Error::DegenerateConic);
    }
    let d = Mat3([[x[0], x[3], x[4]], [x[3], x[1], x[5]], [x[4], x[5], x[2]]]);
    let dn = d.scale(1.0 / d.frobenius());
    // σ_min / σ_max, up to a constant: a thin conic is still a conic
    if dn.det().abs() < 1e-12 * dn.adjugate().frobenius() {
        return Err(Error::DegenerateConic);
    }
    Ok(ConicMatrix::line(dn))
}

/// `(p − center)ᵀ S (p − center) = 1` with `S` positive definite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ellipse {
    pub center: Point,
    /// Symmetric quadratic form `[[s00, s01], [s01, s11]]`.
    pub form: [f64; 3],
}

impl Ellipse {
    pub fn circle(center: Point, radius: f64) -> Self {
        let k = 1.0 / (radius * radius);
        Ellipse { center, form: [k, 0.0, k] }
    }

    /// Ellipse with the given foci and major semi-axis.
    pub fn from_foci(f1: Point, f2: Point, semi_major: f64) -> Result<Self> {
        let center = f1.midpoint(f2);
        let focal = 0.5 * f1.distance(f2);
        let b2 = semi_major * semi_major - focal * focal;
        if !(b2 > 0.0) {
            return Err(Error::NonEllipse);
        }
        let a2 = semi_major * semi_major;
        let (c, s) = if focal > 0.0 {
            let d = (f2 - f1) * (0.5 / focal);
            (d.x, d.y)
        } else {
            (1.0, 0.0)
        };
        // S = e eᵀ / a² + e⊥ e⊥ᵀ / b²
        let form = [c * c / a2 + s * s / b2, c * s / a2 - c * s / b2, s * s / a2 + c * c / b2];
        Ok(Ellipse { center, form })
    }

    /// Reads a cartesian point conic back as an ellipse.
    pub fn from_conic(conic: &ConicMatrix) -> Result<Self> {
        let q = conic.as_point_conic();
        let m = &q.matrix().0;
        let (p, r, t) = (m[0][0], m[0][1], m[1][1]);
        let det2 = p * t - r * r;
        let scale = p.abs().max(t.abs()).max(r.abs());
        if !(det2 > 1e-14 * scale * scale) {
            return Err(Error::NonEllipse);
        }
        let (g, h) = (m[0][2], m[1][2]);
        // center solves [[p, r],[r, t]] c = −(g, h)
        let cx = (-g * t + h * r) / det2;
        let cy = (-h * p + g * r) / det2;
        let k = -(g * cx + h * cy + m[2][2]);
        // (x−c)ᵀ S' (x−c) = k, k must have the sign of the definite block
        let sign = if p > 0.0 { 1.0 } else { -1.0 };
        if !(k * sign > 0.0) {
            return Err(Error::NonEllipse);
        }
        Ok(Ellipse { center: Point::new(cx, cy), form: [p / k, r / k, t / k] })
    }

    pub fn to_conic(&self) -> ConicMatrix {
        let [p, r, t] = self.form;
        let (cx, cy) = (self.center.x, self.center.y);
        let g = -(p * cx + r * cy);
        let h = -(r * cx + t * cy);
        let k = p * cx * cx + 2.0 * r * cx * cy + t * cy * cy - 1.0;
        ConicMatrix::point(Mat3([[p, r, g], [r, t, h], [g, h, k]]))
    }

    /// `(major, minor)` semi-axes.
    pub fn semi_axes(&self) -> (f64, f64) {
        let [p, r, t] = self.form;
        let (l1, l2, _) = sym2_eigen(p, r, t);
        (1.0 / sqrt(l2), 1.0 / sqrt(l1))
    }

    /// Foci, ordered along the major axis direction.
    pub fn foci(&self) -> (Point, Point) {
        let [p, r, t] = self.form;
        let (l1, l2, (c, s)) = sym2_eigen(p, r, t);
        let (a, b) = (1.0 / sqrt(l2), 1.0 / sqrt(l1));
        let f = sqrt((a * a - b * b).max(0.0));
        // the major axis is the eigenvector of the smaller eigenvalue
        let dir = Point::new(-s, c);
        (self.center - dir * f, self.center + dir * f)
    }

    /// `S⁻¹` as `[[i00, i01], [i01, i11]]`.
    fn inverse_form(&self) -> [f64; 3] {
        let [p, r, t] = self.form;
        let d = p * t - r * r;
        [t / d, -r / d, p / d]
    }

    /// Half-width of the ellipse along the unit normal `n`.
    pub fn support(&self, n: Point) -> f64 {
        let [i0, i1, i2] = self.inverse_form();
        sqrt(n.x * n.x * i0 + 2.0 * n.x * n.y * i1 + n.y * n.y * i2)
    }

    /// `|dist(center, line) − support|` for a cartesian line `[α, β, γ]`:
    /// how far the line is from touching, as a length.
    pub fn tangency_gap(&self, line: &Vec3) -> f64 {
        let k = crate::math::hypot(line[0], line[1]);
        let n = Point::new(line[0] / k, line[1] / k);
        (line_distance(line, self.center).abs() - self.support(n)).abs()
    }

    /// [`Ellipse::tangency_gap`] over the support along the line's normal.
    pub fn tangency_residual(&self, line: &Vec3) -> f64 {
        let k = crate::math::hypot(line[0], line[1]);
        let n = Point::new(line[0] / k, line[1] / k);
        self.tangency_gap(line) / self.support(n)
    }

    /// `|(p−c)ᵀS(p−c) − 1|`; zero on the ellipse.
    pub fn point_residual(&self, p: Point) -> f64 {
        let d = p - self.center;
        let [a, r, t] = self.form;
        (a * d.x * d.x + 2.0 * r * d.x * d.y + t * d.y * d.y - 1.0).abs()
    }

    /// Image under the affine map `x ↦ L x + offset` (`L` row-major 2×2).
    pub fn mapped(&self, lin: [[f64; 2]; 2], offset: Point) -> Result<Ellipse> {
        let d = lin[0][0] * lin[1][1] - lin[0][1] * lin[1][0];
        if d == 0.0 || !d.is_finite() {
            return Err(Error::InvalidInput("singular affine map"));
        }
        let inv = [[lin[1][1] / d, -lin[0][1] / d], [-lin[1][0] / d, lin[0][0] / d]];
        let c = self.center;
        let center = Point::new(
            lin[0][0] * c.x + lin[0][1] * c.y + offset.x,
            lin[1][0] * c.x + lin[1][1] * c.y + offset.y,
        );
        // S' = L⁻ᵀ S L⁻¹
        let [p, r, t] = self.form;
        let s = [[p, r], [r, t]];
        let mut tmp = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                tmp[i][j] = (0..2).map(|k| s[i][k] * inv[k][j]).sum();
            }
        }
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = (0..2).map(|k| inv[k][i] * tmp[k][j]).sum();
            }
        }
        Ok(Ellipse { center, form: [out[0][0], 0.5 * (out[0][1] + out[1][0]), out[1][1]] })
    }
}
