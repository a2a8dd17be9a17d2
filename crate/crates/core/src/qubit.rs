//! Density matrices, Bloch vectors and physicality checks.
//!
//! A state is stored either as a trace-1 Hermitian 2x2 matrix or as the real
//! 3-vector r with rho = (I + r . sigma)/2. Unphysical Bloch vectors (norm
//! above 1) are representable on purpose; physicality is a query, never an
//! implicit constraint.

use crate::linalg::{Mat2, C64};
use crate::{Error, Result, TOL_ALG};

/// Real Bloch 3-vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Physical iff the vector fits in the closed unit ball.
    pub fn is_physical(&self, tol: f64) -> bool {
        self.norm() <= 1.0 + tol
    }

    /// Pure iff the vector sits on the unit sphere.
    pub fn is_pure(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(s * self.x, s * self.y, s * self.z)
    }

    /// Largest componentwise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2) + (self.z - other.z).powi(2))
            .sqrt()
    }
}

/// Ordered eigenvalue pair of a trace-1 Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    /// Larger eigenvalue.
    pub plus: f64,
    /// Smaller eigenvalue.
    pub minus: f64,
}

/// Trace-1 Hermitian 2x2 matrix.
///
/// Construction through [`DensityMatrix::new`] validates both invariants;
/// positivity is deliberately not enforced so that quasi-probability states
/// and tetrahedron points outside the insphere stay representable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: Mat2,
}

impl DensityMatrix {
    /// Validating constructor.
    pub fn new(mat: Mat2) -> Result<Self> {
        let defect = mat.hermitian_defect();
        if defect > TOL_ALG {
            return Err(Error::NonHermitian(defect));
        }
        let tr = mat.trace().re;
        if (tr - 1.0).abs() > TOL_ALG {
            return Err(Error::TraceNotOne(tr));
        }
        Ok(Self { mat })
    }

    /// Constructor for matrices that are Hermitian and trace-1 by
    /// construction (within rounding of the producing formula).
    pub(crate) fn new_unchecked(mat: Mat2) -> Self {
        debug_assert!(mat.hermitian_defect() < 1e-9);
        debug_assert!((mat.trace().re - 1.0).abs() < 1e-9);
        Self { mat }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.mat.m[i][j]
    }

    /// Bloch vector (x_i = Tr(sigma_i rho)).
    pub fn bloch(&self) -> BlochVector {
        BlochVector::new(
            2.0 * self.mat.m[1][0].re,
            2.0 * self.mat.m[1][0].im,
            (self.mat.m[0][0] - self.mat.m[1][1]).re,
        )
    }

    /// Closed-form eigenvalues, ordered.
    pub fn eigenvalues(&self) -> EigenPair {
        let (plus, minus) = self.mat.hermitian_eigenvalues();
        EigenPair { plus, minus }
    }

    /// Physical iff the smaller eigenvalue is above `-tol`.
    pub fn is_physical(&self, tol: f64) -> bool {
        self.eigenvalues().minus >= -tol
    }

    /// Tr(rho^2).
    pub fn purity(&self) -> f64 {
        let e = self.eigenvalues();
        e.plus * e.plus + e.minus * e.minus
    }

    /// Von Neumann entropy in bits; zero for pure states. Eigenvalues are
    /// clamped to [0, 1] so rounding at the spectrum edges cannot produce a
    /// negative entropy.
    pub fn von_neumann_entropy_bits(&self) -> f64 {
        let e = self.eigenvalues();
        let h = |l: f64| {
            let l = l.clamp(0.0, 1.0);
            if l > 0.0 {
                -l * l.log2()
            } else {
                0.0
            }
        };
        h(e.plus) + h(e.minus)
    }
}

/// rho = (I + r . sigma)/2. Accepts unphysical vectors.
pub fn bloch_to_density(r: &BlochVector) -> DensityMatrix {
    let half = 0.5;
    DensityMatrix::new_unchecked(Mat2::new([
        [
            C64::new(half * (1.0 + r.z), 0.0),
            C64::new(half * r.x, -half * r.y),
        ],
        [
            C64::new(half * r.x, half * r.y),
            C64::new(half * (1.0 - r.z), 0.0),
        ],
    ]))
}

/// Inverse of [`bloch_to_density`].
pub fn density_to_bloch(rho: &DensityMatrix) -> BlochVector {
    rho.bloch()
}

/// Closed-form eigenvalues of a trace-1 Hermitian matrix.
pub fn eigenvalues_2x2(rho: &DensityMatrix) -> EigenPair {
    rho.eigenvalues()
}

/// Physicality query: smallest eigenvalue above `-tol`.
pub fn is_physical(rho: &DensityMatrix, tol: f64) -> bool {
    rho.is_physical(tol)
}
