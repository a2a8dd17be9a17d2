//! Probability and quasi-probability phase-space representations.
//!
//! A qubit state is a probability 4-vector over an informationally complete
//! basis. Two bases are built in:
//!
//! - the QBism SIC-POVM basis, whose coordinates are genuine probabilities
//!   (non-negative for every physical state), and
//! - the Wootters basis (identical to the Feynman basis for qubits), whose
//!   coordinates form a quasi-distribution that may go negative.
//!
//! The module also carries the 4D rotation that maps the probability simplex
//! onto a tetrahedron in R^3 with the first rotated coordinate pinned at 1/2,
//! plus the affine Bloch <-> probability replacement rules and the
//! doubly-stochastic rescaling between Pauli and coarse-grained measurement
//! probabilities.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::linalg::{mat4_mul, mat4_transpose, mat4_vec, Mat2, Mat2r, Mat4r, C64};
use crate::qubit::{BlochVector, DensityMatrix};
use crate::{Error, Result, TOL_ALG};

/// Whether a 4-vector is a measurable probability distribution or a signed
/// quasi-distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbMode {
    NonNegative,
    Signed,
}

/// Normalized real 4-vector of (quasi-)probability weights.
///
/// The components always sum to 1; the mode records whether any component is
/// meaningfully negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbVector4 {
    p: [f64; 4],
    mode: ProbMode,
}

impl ProbVector4 {
    /// Validating constructor; the mode is inferred from the signs.
    pub fn new(p: [f64; 4]) -> Result<Self> {
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > TOL_ALG {
            return Err(Error::NotNormalized(sum));
        }
        Ok(Self::classify(p))
    }

    pub(crate) fn new_unchecked(p: [f64; 4]) -> Self {
        debug_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        Self::classify(p)
    }

    fn classify(p: [f64; 4]) -> Self {
        let min = p.iter().cloned().fold(f64::INFINITY, f64::min);
        let mode = if min >= -TOL_ALG {
            ProbMode::NonNegative
        } else {
            ProbMode::Signed
        };
        Self { p, mode }
    }

    /// Outer product of the binary distributions {p, 1-p} and {q, 1-q},
    /// ordered (pq, p(1-q), q(1-p), (1-p)(1-q)).
    pub fn outer_product(p: f64, q: f64) -> Self {
        Self::new_unchecked([
            p * q,
            p * (1.0 - q),
            q * (1.0 - p),
            (1.0 - p) * (1.0 - q),
        ])
    }

    pub fn uniform() -> Self {
        Self::new_unchecked([0.25; 4])
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.p
    }

    pub fn get(&self, i: usize) -> f64 {
        self.p[i]
    }

    pub fn mode(&self) -> ProbMode {
        self.mode
    }
}

/// Projected simplex coordinates in R^3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tetra3Point {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

impl Tetra3Point {
    pub fn as_array(&self) -> [f64; 3] {
        [self.u, self.v, self.w]
    }

    pub fn norm(&self) -> f64 {
        (self.u * self.u + self.v * self.v + self.w * self.w).sqrt()
    }
}

/// 4D rotation by theta in the plane spanned by (1,1,1,1) and (1,0,0,0).
#[derive(Clone, Copy, Debug)]
pub struct Rotation4 {
    theta: f64,
    matrix: Mat4r,
}

/// Build the rotation matrix for an arbitrary angle.
pub fn rotation_matrix(theta: f64) -> Rotation4 {
    let (s, c) = theta.sin_cos();
    let a = s / 3f64.sqrt();
    let d = (c + 2.0) / 3.0;
    let o = (c - 1.0) / 3.0;
    Rotation4 {
        theta,
        matrix: [
            [c, a, a, a],
            [-a, d, o, o],
            [-a, o, d, o],
            [-a, o, o, d],
        ],
    }
}

impl Rotation4 {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn matrix(&self) -> &Mat4r {
        &self.matrix
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        mat4_vec(&self.matrix, v)
    }

    /// Largest entry of M^T M - I.
    pub fn orthogonality_defect(&self) -> f64 {
        let mtm = mat4_mul(&mat4_transpose(&self.matrix), &self.matrix);
        let mut d: f64 = 0.0;
        for (i, row) in mtm.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                d = d.max((entry - target).abs());
            }
        }
        d
    }
}

/// The specific rotation (theta = pi/3) that pins the first coordinate of
/// every normalized vector at 1/2.
pub fn simplex_rotation() -> Rotation4 {
    rotation_matrix(PI / 3.0)
}

/// Rotate a normalized 4-vector and drop the constant first coordinate.
pub fn simplex_project(p: &ProbVector4) -> Tetra3Point {
    let r = simplex_rotation().apply(p.as_array());
    debug_assert!((r[0] - 0.5).abs() < 1e-9);
    Tetra3Point {
        u: r[1],
        v: r[2],
        w: r[3],
    }
}

/// The two built-in informationally complete bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    QBismSic,
    Wootters,
}

/// Four trace-1 Hermitian matrices spanning the space of 2x2 Hermitian
/// operators, together with the precomputed dual frame used for expansion.
#[derive(Clone, Debug)]
pub struct PhaseSpaceBasis {
    kind: BasisKind,
    elements: [Mat2; 4],
    dual: [Mat2; 4],
}

fn qbism_elements() -> [Mat2; 4] {
    let s3 = 3f64.sqrt();
    let amp = (1.5f64).sqrt();
    let lo = (1.0 - s3) / 2.0;
    let hi = (1.0 + s3) / 2.0;
    let e = |angle: f64| C64::from_polar(amp, angle);
    let r = |x: f64| C64::new(x, 0.0);
    [
        Mat2::new([[r(lo), e(-3.0 * FRAC_PI_4)], [e(3.0 * FRAC_PI_4), r(hi)]]),
        Mat2::new([[r(lo), e(FRAC_PI_4)], [e(-FRAC_PI_4), r(hi)]]),
        Mat2::new([[r(hi), e(3.0 * FRAC_PI_4)], [e(-3.0 * FRAC_PI_4), r(lo)]]),
        Mat2::new([[r(hi), e(-FRAC_PI_4)], [e(FRAC_PI_4), r(lo)]]),
    ]
}

fn wootters_elements() -> [Mat2; 4] {
    // Phase-point operators (I +/- X +/- Y +/- Z)/2 with an even number of
    // minus signs; entries are exact in binary floating point.
    let i = Mat2::identity();
    let x = Mat2::pauli_x();
    let y = Mat2::pauli_y();
    let z = Mat2::pauli_z();
    [
        (i + x + y + z).scale(0.5),
        (i + x - y - z).scale(0.5),
        (i - x - y + z).scale(0.5),
        (i - x + y - z).scale(0.5),
    ]
}

/// Dual frame via the Gram matrix: D_i = sum_j (G^-1)_ij E_j with
/// G_ij = Tr(E_i E_j).
fn gram_dual(elements: &[Mat2; 4]) -> Result<[Mat2; 4]> {
    let mut g = [[0.0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            g[i][j] = (elements[i] * elements[j]).trace().re;
        }
    }
    let ginv = invert4(&g).ok_or(Error::SingularBasis)?;
    let mut dual = [Mat2::zero(); 4];
    for i in 0..4 {
        let mut acc = Mat2::zero();
        for j in 0..4 {
            acc = acc + elements[j].scale(ginv[i][j]);
        }
        dual[i] = acc;
    }
    Ok(dual)
}

fn invert4(a: &Mat4r) -> Option<Mat4r> {
    // Gauss-Jordan with partial pivoting on [A | I].
    let mut aug = [[0.0f64; 8]; 4];
    for i in 0..4 {
        aug[i][..4].copy_from_slice(&a[i]);
        aug[i][4 + i] = 1.0;
    }
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| aug[i][col].abs().total_cmp(&aug[j][col].abs()))?;
        if aug[pivot][col].abs() < 1e-9 {
            return None;
        }
        aug.swap(pivot, col);
        let inv = 1.0 / aug[col][col];
        for entry in aug[col].iter_mut() {
            *entry *= inv;
        }
        let pivot_row = aug[col];
        for (row, row_data) in aug.iter_mut().enumerate() {
            if row != col {
                let f = row_data[col];
                for (entry, pivot) in row_data.iter_mut().zip(&pivot_row) {
                    *entry -= f * pivot;
                }
            }
        }
    }
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        out[i].copy_from_slice(&aug[i][4..]);
    }
    Some(out)
}

impl PhaseSpaceBasis {
    /// Build a basis from custom elements, validating trace, Hermiticity and
    /// informational completeness.
    pub fn from_elements(kind: BasisKind, elements: [Mat2; 4]) -> Result<Self> {
        for e in &elements {
            let defect = e.hermitian_defect();
            if defect > TOL_ALG {
                return Err(Error::NonHermitian(defect));
            }
            let tr = e.trace().re;
            if (tr - 1.0).abs() > TOL_ALG {
                return Err(Error::TraceNotOne(tr));
            }
        }
        let dual = gram_dual(&elements)?;
        Ok(Self {
            kind,
            elements,
            dual,
        })
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn elements(&self) -> &[Mat2; 4] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat2 {
        &self.elements[i]
    }

    pub fn dual(&self) -> &[Mat2; 4] {
        &self.dual
    }
}

/// Construct one of the two built-in bases.
pub fn basis(kind: BasisKind) -> PhaseSpaceBasis {
    let elements = match kind {
        BasisKind::QBismSic => qbism_elements(),
        BasisKind::Wootters => wootters_elements(),
    };
    PhaseSpaceBasis::from_elements(kind, elements)
        .expect("built-in phase-space bases are informationally complete")
}

/// rho = sum_i p_i E_i.
pub fn prob_to_density(p: &ProbVector4, basis: &PhaseSpaceBasis) -> DensityMatrix {
    let mut acc = Mat2::zero();
    for (w, e) in p.as_array().iter().zip(basis.elements()) {
        acc = acc + e.scale(*w);
    }
    DensityMatrix::new_unchecked(acc)
}

/// Expand a state over the basis: p_i = Tr(D_i rho) with the dual frame D.
///
/// For the QBism SIC-POVM the dual frame coincides with the POVM elements,
/// so the output is the Born-rule probability vector.
pub fn density_to_prob(rho: &DensityMatrix, basis: &PhaseSpaceBasis) -> ProbVector4 {
    let mut p = [0.0f64; 4];
    for (slot, d) in p.iter_mut().zip(basis.dual()) {
        *slot = (*d * *rho.matrix()).trace().re;
    }
    ProbVector4::new_unchecked(p)
}

/// Affine replacement rule from QBism SIC-POVM probabilities to the Bloch
/// vector.
pub fn prob_to_bloch(p: &ProbVector4) -> BlochVector {
    let s3 = 3f64.sqrt();
    let [p1, p2, p3, _] = p.as_array();
    BlochVector::new(
        s3 * (1.0 - 2.0 * p1 - 2.0 * p3),
        s3 * (1.0 - 2.0 * p2 - 2.0 * p3),
        s3 * (1.0 - 2.0 * p1 - 2.0 * p2),
    )
}

/// Inverse replacement rule; accepts unphysical Bloch vectors.
pub fn bloch_to_prob(r: &BlochVector) -> ProbVector4 {
    let s3 = 3f64.sqrt();
    ProbVector4::new_unchecked([
        0.25 * (1.0 - (r.x - r.y + r.z) / s3),
        0.25 * (1.0 + (r.x - r.y - r.z) / s3),
        0.25 * (1.0 - (r.x + r.y - r.z) / s3),
        0.25 * (1.0 + (r.x + r.y + r.z) / s3),
    ])
}

/// Doubly-stochastic matrix mapping a binary Pauli distribution to the
/// matching coarse-grained POVM distribution.
pub fn scaling_matrix() -> Mat2r {
    let s3 = 3f64.sqrt();
    let a = (3.0 + s3) / 6.0;
    let b = (3.0 - s3) / 6.0;
    [[a, b], [b, a]]
}

/// Scalar form of the rescaling: P -> (P - 1/2)/sqrt(3) + 1/2.
pub fn rescale_projective(prob: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::OutOfRange {
            name: "prob",
            value: prob,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(0.5 + (prob - 0.5) / 3f64.sqrt())
}
