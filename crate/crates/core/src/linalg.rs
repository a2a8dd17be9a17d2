//! Minimal dense linear algebra for 2x2 complex and 2x2/4x4 real matrices.
//!
//! Everything the rest of the crate needs fits in fixed-size arrays, so there
//! is no external matrix dependency. Eigenvalues of Hermitian 2x2 matrices
//! come from the trace/determinant closed form rather than an iterative
//! solver.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// Complex double-precision scalar.
pub type C64 = Complex64;

/// Real 2x2 matrix.
pub type Mat2r = [[f64; 2]; 2];
/// Real 4x4 matrix.
pub type Mat4r = [[f64; 4]; 4];

/// Dense 2x2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub fn new(m: [[C64; 2]; 2]) -> Self {
        Self { m }
    }

    /// Build from real entries.
    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self {
            m: [
                [C64::new(m[0][0], 0.0), C64::new(m[0][1], 0.0)],
                [C64::new(m[1][0], 0.0), C64::new(m[1][1], 0.0)],
            ],
        }
    }

    pub fn zero() -> Self {
        Self::from_real([[0.0, 0.0], [0.0, 0.0]])
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn diag(a: C64, b: C64) -> Self {
        Self {
            m: [[a, C64::new(0.0, 0.0)], [C64::new(0.0, 0.0), b]],
        }
    }

    pub fn pauli_x() -> Self {
        Self::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    pub fn pauli_y() -> Self {
        Self::new([
            [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
            [C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
        ])
    }

    pub fn pauli_z() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, -1.0]])
    }

    pub fn scale(&self, s: f64) -> Self {
        self.scale_c(C64::new(s, 0.0))
    }

    pub fn scale_c(&self, s: C64) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new([
            [self.m[0][0].conj(), self.m[1][0].conj()],
            [self.m[0][1].conj(), self.m[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Largest absolute deviation from Hermiticity, max |a_ij - conj(a_ji)|.
    pub fn hermitian_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - self.m[j][i].conj()).norm());
            }
        }
        d
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }

    /// Eigenvalues of a Hermitian matrix, ordered `plus >= minus`.
    ///
    /// Uses the trace/determinant closed form; the discriminant is clamped at
    /// zero to absorb rounding on nearly degenerate spectra.
    pub fn hermitian_eigenvalues(&self) -> (f64, f64) {
        let t = self.trace().re;
        let d = self.det().re;
        let disc = (t * t / 4.0 - d).max(0.0).sqrt();
        (t / 2.0 + disc, t / 2.0 - disc)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j];
            }
        }
        out
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(-1.0)
    }
}

/// a*b + b*a
pub fn anticommutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b + *b * *a
}

pub fn mat2r_vec(a: &Mat2r, v: [f64; 2]) -> [f64; 2] {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

pub fn mat4_vec(a: &Mat4r, v: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, row) in a.iter().enumerate() {
        out[i] = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
    }
    out
}

pub fn mat4_mul(a: &Mat4r, b: &Mat4r) -> Mat4r {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat4_transpose(a: &Mat4r) -> Mat4r {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Kronecker product of two real 2x2 matrices.
pub fn kron2r(a: &Mat2r, b: &Mat2r) -> Mat4r {
    let mut out = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Determinant of a real 4x4 matrix by LU with partial pivoting.
pub fn mat4_det(a: &Mat4r) -> f64 {
    let mut m = *a;
    let mut det = 1.0;
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let pivot_row = m[col];
        for row_data in m.iter_mut().skip(col + 1) {
            let f = row_data[col] / pivot_row[col];
            for (entry, pivot) in row_data[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= f * pivot;
            }
        }
    }
    det
}
