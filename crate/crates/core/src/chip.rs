//! The potato-chip surfaces and everything attached to them: boundary charts
//! in both bases, the Bloch-space parametrizations, membership and
//! factorization tests, the three orientations, and the Matthews correlation
//! field.
//!
//! A chip point is the outer product of two binary distributions {p, 1-p}
//! and {q, 1-q}, viewed either in the probability simplex (projected to the
//! tetrahedron) or on the Bloch ball. The physical part of each surface is
//! its intersection with the insphere; the pure boundary is a closed curve
//! whose chart in q carries an explicit +/- branch.

use crate::phase_space::{
    bloch_to_prob, prob_to_bloch, simplex_project, BasisKind, ProbMode, ProbVector4, Tetra3Point,
};
use crate::qubit::BlochVector;
use crate::{Error, Result, TOL_ALG};

/// The three chip orientations. `O1` is the default orientation; the other
/// two arise from relabeling the outcome pairs of the probability 4-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    O1,
    O2,
    O3,
}

/// Sign branch of a boundary chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryBranch {
    Plus,
    Minus,
}

/// Outcome-relabeling permutations: `Sigma1` swaps the first two entries of
/// a probability 4-vector, `Sigma2` the last two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaPermutation {
    Sigma1,
    Sigma2,
}

/// Result of a membership query against one chip surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// A parametrized point of one chip surface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChipPoint {
    pub p: f64,
    pub q: f64,
    pub orientation: Orientation,
    pub basis: BasisKind,
}

impl ChipPoint {
    pub fn new(p: f64, q: f64, orientation: Orientation, basis: BasisKind) -> Result<Self> {
        for (name, value) in [("p", p), ("q", q)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange {
                    name,
                    value,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        Ok(Self {
            p,
            q,
            orientation,
            basis,
        })
    }
}

/// Reorder an outer-product 4-vector into the given orientation.
fn orient(v: [f64; 4], orientation: Orientation) -> [f64; 4] {
    match orientation {
        Orientation::O1 => v,
        Orientation::O2 => [v[0], v[2], v[3], v[1]],
        Orientation::O3 => [v[1], v[2], v[0], v[3]],
    }
}

/// The outer product of {p, 1-p} and {q, 1-q}, reordered for the requested
/// orientation.
pub fn oriented_outer_product(p: f64, q: f64, orientation: Orientation) -> ProbVector4 {
    let base = ProbVector4::outer_product(p, q).as_array();
    ProbVector4::new(orient(base, orientation)).expect("permutation preserves normalization")
}

/// Tetrahedron coordinates of a chip point: project the (possibly reordered)
/// outer product through the simplex rotation.
pub fn chip_surface(point: &ChipPoint) -> Tetra3Point {
    simplex_project(&oriented_outer_product(point.p, point.q, point.orientation))
}

/// Greatest lower / least upper bound of the p-support of the pure boundary
/// chart for the given basis.
pub fn chip_support(basis: BasisKind) -> (f64, f64) {
    match basis {
        BasisKind::QBismSic => {
            let h = 0.5 / 3f64.sqrt();
            (0.5 - h, 0.5 + h)
        }
        BasisKind::Wootters => (0.0, 1.0),
    }
}

/// Radicand and root scale of the boundary chart: q = 1/2 +/- scale * sqrt(g).
fn boundary_radicand(p: f64, basis: BasisKind) -> (f64, f64) {
    let d = 1.0 - 2.0 * p + 2.0 * p * p;
    match basis {
        BasisKind::QBismSic => ((-1.0 + 6.0 * p - 6.0 * p * p) / (3.0 * d), 0.5),
        BasisKind::Wootters => (p * (1.0 - p) / (2.0 * d), 1.0),
    }
}

/// q-coordinate of the pure boundary at parameter `p` on the chosen branch.
///
/// On the support endpoints the radicand vanishes and the two branches
/// coincide; radicands in [-TOL_ALG, 0] are clamped to zero so that endpoint
/// evaluation survives rounding.
pub fn boundary_q(p: f64, branch: BoundaryBranch, basis: BasisKind) -> Result<f64> {
    let (g, scale) = boundary_radicand(p, basis);
    if g < -TOL_ALG {
        return Err(Error::OutsideSupport(p));
    }
    let half_width = scale * g.max(0.0).sqrt();
    Ok(match branch {
        BoundaryBranch::Plus => 0.5 + half_width,
        BoundaryBranch::Minus => 0.5 - half_width,
    })
}

/// Bloch vector of a chip point.
///
/// The QBism forms follow from the probability replacement rule applied to
/// the oriented outer product; the Wootters forms from inverting the
/// quasi-probability expansion. Both are checked against those routes in the
/// test suite.
pub fn chip_bloch(point: &ChipPoint) -> Result<BlochVector> {
    // reject out-of-square parameters even for direct struct literals
    let point = ChipPoint::new(point.p, point.q, point.orientation, point.basis)?;
    let s3 = 3f64.sqrt();
    let fp = 2.0 * point.p - 1.0;
    let fq = 2.0 * point.q - 1.0;
    Ok(match (point.basis, point.orientation) {
        (BasisKind::QBismSic, Orientation::O1) => {
            BlochVector::new(-s3 * fq, s3 * fp * fq, -s3 * fp)
        }
        (BasisKind::QBismSic, Orientation::O2) => {
            BlochVector::new(-s3 * fp * fq, s3 * fp, -s3 * fq)
        }
        (BasisKind::QBismSic, Orientation::O3) => {
            BlochVector::new(-s3 * fp, -s3 * fq, s3 * fp * fq)
        }
        (BasisKind::Wootters, Orientation::O1) => BlochVector::new(fp, fp * fq, fq),
        (BasisKind::Wootters, Orientation::O2) => BlochVector::new(fq, fp, fp * fq),
        (BasisKind::Wootters, Orientation::O3) => BlochVector::new(-fp * fq, -fq, fp),
    })
}

/// Bloch-space chart of the default-orientation QBism chip boundary.
///
/// The radicand 2/(1 - 2p + 2p^2) - 3 is real exactly on the same support
/// interval as the q-chart. The sign pairing of the middle component is
/// fixed by cross-checking against `chip_bloch(1-p, boundary_q(1-p, .))`,
/// which this chart reproduces with swapped branch labels:
/// `Minus` here equals the `Plus` q-branch at parameter 1-p and vice versa.
pub fn boundary_bloch(p: f64, branch: BoundaryBranch) -> Result<BlochVector> {
    let d = 1.0 - 2.0 * p + 2.0 * p * p;
    let radicand = 2.0 / d - 3.0;
    if radicand < -3.0 * TOL_ALG {
        return Err(Error::OutsideSupport(p));
    }
    let root = radicand.max(0.0).sqrt();
    let s3 = 3f64.sqrt();
    Ok(match branch {
        BoundaryBranch::Minus => {
            BlochVector::new(-root, (1.0 - 2.0 * p) * root, s3 * (2.0 * p - 1.0))
        }
        BoundaryBranch::Plus => {
            BlochVector::new(root, (2.0 * p - 1.0) * root, s3 * (2.0 * p - 1.0))
        }
    })
}

/// Split a probability 4-vector into two binary distributions, if possible.
///
/// Succeeds iff the reshaped 2x2 table has rank 1, i.e. |p1 p4 - p2 p3| is
/// within `tol`; the reconstruction error of the returned outer product
/// equals that determinant exactly.
pub fn factorize(prob: &ProbVector4, tol: f64) -> Option<(f64, f64)> {
    let [p1, p2, p3, p4] = prob.as_array();
    if prob.mode() != ProbMode::NonNegative {
        return None;
    }
    if (p1 * p4 - p2 * p3).abs() > tol {
        return None;
    }
    Some((p1 + p2, p1 + p3))
}

/// Signed residual of the algebraic surface condition for one orientation.
///
/// The default-orientation surface is the zero set of sqrt(3) y - x z; the
/// other orientations permute the roles of the coordinates.
pub fn surface_residual(r: &BlochVector, orientation: Orientation) -> f64 {
    let s3 = 3f64.sqrt();
    match orientation {
        Orientation::O1 => s3 * r.y - r.x * r.z,
        Orientation::O2 => s3 * r.x - r.y * r.z,
        Orientation::O3 => s3 * r.z - r.x * r.y,
    }
}

/// Classify a Bloch vector against one chip surface.
pub fn chip_membership(r: &BlochVector, orientation: Orientation, tol: f64) -> Membership {
    if surface_residual(r, orientation).abs() <= tol {
        let n = r.norm();
        if n < 1.0 - tol {
            return Membership::Interior;
        }
        if (n - 1.0).abs() <= tol {
            return Membership::Boundary;
        }
    }
    Membership::Outside
}

/// Apply one of the outcome-relabeling transpositions.
pub fn permute_orientation(prob: &ProbVector4, which: SigmaPermutation) -> ProbVector4 {
    let mut v = prob.as_array();
    match which {
        SigmaPermutation::Sigma1 => v.swap(0, 1),
        SigmaPermutation::Sigma2 => v.swap(2, 3),
    }
    ProbVector4::new(v).expect("permutation preserves normalization")
}

/// Determine numerically which chip surfaces the sigma-image of the default
/// surface lands on.
///
/// This is the startup self-check for the orientation map: the claim that
/// each transposition carries one chip onto another is not taken on faith
/// but evaluated against the algebraic surface conditions on a parameter
/// grid. Both transpositions turn out to map the default surface onto the
/// `O2` surface (with reparametrized (p, q)), while the `O3` surface is
/// invariant under both.
pub fn sigma_image_orientations(which: SigmaPermutation) -> Vec<Orientation> {
    let mut candidates = vec![
        (Orientation::O1, true),
        (Orientation::O2, true),
        (Orientation::O3, true),
    ];
    let n = 9;
    for i in 1..n {
        for j in 1..n {
            let p = i as f64 / n as f64;
            let q = j as f64 / n as f64;
            let image = permute_orientation(&ProbVector4::outer_product(p, q), which);
            let r = prob_to_bloch(&image);
            for (o, ok) in candidates.iter_mut() {
                if surface_residual(&r, *o).abs() > 1e-9 {
                    *ok = false;
                }
            }
        }
    }
    candidates
        .into_iter()
        .filter_map(|(o, ok)| ok.then_some(o))
        .collect()
}

/// Matthews correlation of the 2x2 contingency table obtained by reshaping
/// the probability 4-vector row-major.
pub fn matthews_phi_prob(prob: &ProbVector4) -> Result<f64> {
    let [p1, p2, p3, p4] = prob.as_array();
    let marginals = [p1 + p2, p3 + p4, p1 + p3, p2 + p4];
    let min = marginals.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= TOL_ALG {
        return Err(Error::DegenerateMarginal(min));
    }
    let denom = marginals.iter().product::<f64>();
    if denom <= 0.0 {
        return Err(Error::DegenerateMarginal(min));
    }
    Ok((p1 * p4 - p2 * p3) / denom.sqrt())
}

/// Matthews correlation as a field over the Bloch ball,
/// (sqrt(3) y - x z) / sqrt((3 - x^2)(3 - z^2)).
pub fn matthews_phi_bloch(r: &BlochVector) -> Result<f64> {
    let dx = 3.0 - r.x * r.x;
    let dz = 3.0 - r.z * r.z;
    if dx <= TOL_ALG || dz <= TOL_ALG {
        return Err(Error::DegenerateMarginal(dx.min(dz)));
    }
    Ok((3f64.sqrt() * r.y - r.x * r.z) / (dx * dz).sqrt())
}

/// Matthews correlation in coordinates where the physical ball has radius
/// 1/sqrt(3): (y - x z) / sqrt((1 - x^2)(1 - z^2)).
///
/// Equals [`matthews_phi_bloch`] after mapping r -> r/sqrt(3).
pub fn matthews_phi_natural(r: &BlochVector) -> Result<f64> {
    let dx = 1.0 - r.x * r.x;
    let dz = 1.0 - r.z * r.z;
    if dx <= TOL_ALG || dz <= TOL_ALG {
        return Err(Error::DegenerateMarginal(dx.min(dz)));
    }
    Ok((r.y - r.x * r.z) / (dx * dz).sqrt())
}

/// Convenience: Matthews correlation of the QBism probability vector of a
/// Bloch state, through the replacement rule.
pub fn matthews_phi_of_state(r: &BlochVector) -> Result<f64> {
    matthews_phi_prob(&bloch_to_prob(r))
}
