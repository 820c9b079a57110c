//! Fixed-size dense linear algebra used by the homogeneous machinery.

use core::ops::Mul;

use crate::math::sqrt;

pub type Vec3 = [f64; 3];

#[inline]
pub fn dot3(p: &Vec3, q: &Vec3) -> f64 {
    p[0] * q[0] + p[1] * q[1] + p[2] * q[2]
}

#[inline]
pub fn cross3(p: &Vec3, q: &Vec3) -> Vec3 {
    [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ]
}

#[inline]
pub fn norm3(p: &Vec3) -> f64 {
    sqrt(dot3(p, p))
}

pub fn max_abs3(p: &Vec3) -> f64 {
    p.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Sine of the angle between two coordinate vectors, the scale-free distance
/// between the homogeneous objects they represent. Zero vectors compare at
/// distance 1.
pub fn sine_distance(p: &Vec3, q: &Vec3) -> f64 {
    let np = norm3(p);
    let nq = norm3(q);
    if np == 0.0 || nq == 0.0 {
        return 1.0;
    }
    // Rescale first so the cross product stays well inside f64 range.
    let a = [p[0] / np, p[1] / np, p[2] / np];
    let b = [q[0] / nq, q[1] / nq, q[2] / nq];
    norm3(&cross3(&a, &b))
}

/// |det(p, q, r)| over the product of the norms: zero iff the three
/// homogeneous vectors are linearly dependent.
pub fn collinearity(p: &Vec3, q: &Vec3, r: &Vec3) -> f64 {
    let n = norm3(p) * norm3(q) * norm3(r);
    if n == 0.0 {
        return 0.0;
    }
    dot3(p, &cross3(q, r)).abs() / n
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn from_columns(c0: Vec3, c1: Vec3, c2: Vec3) -> Self {
        Mat3([
            [c0[0], c1[0], c2[0]],
            [c0[1], c1[1], c2[1]],
            [c0[2], c1[2], c2[2]],
        ])
    }

    pub fn from_rows(r0: Vec3, r1: Vec3, r2: Vec3) -> Self {
        Mat3([r0, r1, r2])
    }

    pub fn row(&self, i: usize) -> Vec3 {
        self.0[i]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        dot3(&m[0], &cross3(&m[1], &m[2]))
    }

    /// Classical adjugate, `adj(M)·M = det(M)·I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let c0 = cross3(&m[1], &m[2]);
        let c1 = cross3(&m[2], &m[0]);
        let c2 = cross3(&m[0], &m[1]);
        Mat3::from_columns(c0, c1, c2)
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        let scale = self.frobenius();
        if !(d.abs() > 1e-300) || d.abs() <= 1e-14 * scale * scale * scale {
            return None;
        }
        Some(self.adjugate().scale(1.0 / d))
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = self.0;
        for row in out.iter_mut() {
            for v in row.iter_mut() {
                *v *= k;
            }
        }
        Mat3(out)
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        [dot3(&self.0[0], v), dot3(&self.0[1], v), dot3(&self.0[2], v)]
    }

    pub fn frobenius(&self) -> f64 {
        sqrt(self.0.iter().flatten().map(|v| v * v).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `Xᵀ·self·X`, the congruence used to carry quadratic forms across frames.
    pub fn congruence(&self, x: &Mat3) -> Mat3 {
        x.transpose() * *self * *x
    }

    pub fn symmetrized(&self) -> Mat3 {
        let mut out = self.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let avg = 0.5 * (out[i][j] + out[j][i]);
                out[i][j] = avg;
                out[j][i] = avg;
            }
        }
        Mat3(out)
    }

    /// Sine of the angle between the two matrices viewed as 9-vectors (sign
    /// ignored), from `|a − b|·|a + b| / 2` on the unit vectors.
    pub fn angular_distance(&self, other: &Mat3) -> f64 {
        let na = self.frobenius();
        let nb = other.frobenius();
        if na == 0.0 || nb == 0.0 {
            return 1.0;
        }
        let (mut dm, mut dp) = (0.0, 0.0);
        for (x, y) in self.0.iter().flatten().zip(other.0.iter().flatten()) {
            let (x, y) = (x / na, y / nb);
            dm += (x - y) * (x - y);
            dp += (x + y) * (x + y);
        }
        0.5 * sqrt(dm) * sqrt(dp)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;

    fn mul(self, rhs: Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat3(out)
    }
}

/// Eigen-decomposition of a symmetric 2×2 matrix `[[p, q], [q, r]]`.
///
/// Returns `(λ₁, λ₂, (cos θ, sin θ))` with `λ₁ ≥ λ₂`; the first eigenvector is
/// `(cos θ, sin θ)`.
pub fn sym2_eigen(p: f64, q: f64, r: f64) -> (f64, f64, (f64, f64)) {
    let half_diff = 0.5 * (p - r);
    let rad = crate::math::hypot(half_diff, q);
    let mean = 0.5 * (p + r);
    let l1 = mean + rad;
    let l2 = mean - rad;
    if rad == 0.0 {
        return (l1, l2, (1.0, 0.0));
    }
    // Eigenvector of the larger eigenvalue, built from whichever row is
    // better conditioned.
    let (x, y) = if half_diff >= 0.0 {
        (half_diff + rad, q)
    } else {
        (q, rad - half_diff)
    };
    let n = crate::math::hypot(x, y);
    (l1, l2, (x / n, y / n))
}

/// Right null vector of a `ROWS × 6` system (ROWS ≤ 5) by Householder QR of
/// the transpose with column pivoting.
///
/// Returns the unit null vector together with the ratio of the smallest to the
/// largest pivot, from which the caller decides whether the null space is
/// one-dimensional.
pub fn null_vector6<const ROWS: usize>(rows: &[[f64; 6]; ROWS]) -> ([f64; 6], f64) {
    assert!(ROWS < 6);
    // Work on the transpose: 6 × ROWS, columns are the equations.
    let mut a = [[0.0_f64; 6]; ROWS];
    a.copy_from_slice(rows);
    // a[col][row] layout: column j is equation j
    let mut reflectors: [[f64; 6]; 5] = [[0.0; 6]; 5];
    let mut first_pivot = 0.0;
    let mut last_pivot = 0.0;
    for k in 0..ROWS {
        // pivot: the remaining column with the largest tail norm
        let tail_norm = |col: &[f64; 6]| sqrt(col[k..].iter().map(|v| v * v).sum());
        let (best, _) = (k..ROWS)
            .map(|j| (j, tail_norm(&a[j])))
            .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        a.swap(k, best);
        let alpha = tail_norm(&a[k]);
        if k == 0 {
            first_pivot = alpha;
        }
        last_pivot = alpha;
        let mut v = [0.0; 6];
        v[k..].copy_from_slice(&a[k][k..]);
        let sign = if v[k] >= 0.0 { 1.0 } else { -1.0 };
        v[k] += sign * alpha;
        let vn = sqrt(v.iter().map(|x| x * x).sum());
        if vn > 0.0 {
            for x in v.iter_mut() {
                *x /= vn;
            }
        }
        reflectors[k] = v;
        for col in a.iter_mut().skip(k) {
            let d: f64 = (k..6).map(|i| v[i] * col[i]).sum();
            for i in k..6 {
                col[i] -= 2.0 * d * v[i];
            }
        }
    }
    // Q e_last = H_0 H_1 … H_{ROWS-1} e_5
    let mut x = [0.0; 6];
    x[5] = 1.0;
    for k in (0..ROWS).rev() {
        let v = &reflectors[k];
        let d: f64 = (0..6).map(|i| v[i] * x[i]).sum();
        for i in 0..6 {
            x[i] -= 2.0 * d * v[i];
        }
    }
    let ratio = if first_pivot > 0.0 { last_pivot / first_pivot } else { 0.0 };
    (x, ratio)
}
