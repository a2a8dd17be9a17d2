//! POVMs and projective measurements.
//!
//! Provides the QBism SIC-POVM, the coarse-grained two-outcome POVMs built
//! from pairs of its elements, Pauli projective probabilities, marginals of
//! probability 4-vectors, and reconstruction of chip states from two
//! projective measurements.
//!
//! Outcome ordering convention: the first outcome of an axis measurement is
//! the one whose Bloch vector points against the axis, so Pauli
//! probabilities read (1 - c)/2 first. This keeps the first coarse outcome
//! of the z/x measurements aligned with the chip parameters p and q.

use std::f64::consts::FRAC_PI_4;

use crate::chip::{chip_support, Orientation};
use crate::linalg::{Mat2, C64};
use crate::phase_space::{basis, prob_to_density, rescale_projective, BasisKind, ProbVector4};
use crate::qubit::{BlochVector, DensityMatrix};
use crate::{Error, Result, TOL_PHYS};

/// Measurement axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A positive operator-valued measure on a qubit.
#[derive(Clone, Debug)]
pub struct Povm {
    elements: Vec<Mat2>,
}

impl Povm {
    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    /// Largest entry of (sum_i E_i) - I.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = Mat2::zero();
        for e in &self.elements {
            sum = sum + *e;
        }
        sum.max_abs_diff(&Mat2::identity())
    }

    /// Smallest eigenvalue over all elements.
    pub fn min_eigenvalue(&self) -> f64 {
        self.elements
            .iter()
            .map(|e| e.hermitian_eigenvalues().1)
            .fold(f64::INFINITY, f64::min)
    }

    /// Born-rule outcome probabilities Tr(E_i rho).
    pub fn born_probabilities(&self, rho: &DensityMatrix) -> Vec<f64> {
        self.elements
            .iter()
            .map(|e| (*e * *rho.matrix()).trace().re)
            .collect()
    }
}

/// The four QBism SIC-POVM elements.
pub fn qbism_povm() -> Povm {
    let s3 = 3f64.sqrt();
    let amp = 6f64.sqrt() / 12.0;
    let lo = (3.0 - s3) / 12.0;
    let hi = (3.0 + s3) / 12.0;
    let e = |angle: f64| C64::from_polar(amp, angle);
    let r = |x: f64| C64::new(x, 0.0);
    Povm {
        elements: vec![
            Mat2::new([[r(lo), e(-3.0 * FRAC_PI_4)], [e(3.0 * FRAC_PI_4), r(hi)]]),
            Mat2::new([[r(lo), e(FRAC_PI_4)], [e(-FRAC_PI_4), r(hi)]]),
            Mat2::new([[r(hi), e(3.0 * FRAC_PI_4)], [e(-3.0 * FRAC_PI_4), r(lo)]]),
            Mat2::new([[r(hi), e(-FRAC_PI_4)], [e(FRAC_PI_4), r(lo)]]),
        ],
    }
}

/// Coarse-grained two-outcome POVM along one axis, built by pairing QBism
/// SIC-POVM elements: {Q1+Q3, rest} for x, {Q1+Q4, rest} for y and
/// {Q1+Q2, rest} for z.
///
/// Every element's Bloch vector has length 1/sqrt(3) along the axis; the
/// sign of the first element depends on the axis (minus for x and z, plus
/// for y), which follows from the pair sums.
pub fn coarse_povm(axis: Axis) -> Povm {
    let q = qbism_povm();
    let first = match axis {
        Axis::X => q.elements[0] + q.elements[2],
        Axis::Y => q.elements[0] + q.elements[3],
        Axis::Z => q.elements[0] + q.elements[1],
    };
    Povm {
        elements: vec![first, Mat2::identity() - first],
    }
}

/// A two-outcome projective measurement record along one axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementRecord {
    pub axis: Axis,
    /// ((1 - c)/2, (1 + c)/2) with c the Bloch component along the axis.
    pub probs: (f64, f64),
}

/// Exact Born probabilities of a Pauli measurement on a physical state.
pub fn pauli_probabilities(rho: &DensityMatrix, axis: Axis) -> Result<MeasurementRecord> {
    let eig = rho.eigenvalues();
    if eig.minus < -TOL_PHYS {
        return Err(Error::Unphysical(eig.minus));
    }
    let r = rho.bloch();
    let c = match axis {
        Axis::X => r.x,
        Axis::Y => r.y,
        Axis::Z => r.z,
    };
    Ok(MeasurementRecord {
        axis,
        probs: (0.5 * (1.0 - c), 0.5 * (1.0 + c)),
    })
}

/// Row and column marginals of the 4-vector reshaped row-major into a 2x2
/// table: row = (p1+p2, p3+p4), col = (p1+p3, p2+p4).
///
/// On outer-product vectors the row marginal is (p, 1-p) and the column
/// marginal (q, 1-q).
pub fn marginals(prob: &ProbVector4) -> ((f64, f64), (f64, f64)) {
    let [p1, p2, p3, p4] = prob.as_array();
    ((p1 + p2, p3 + p4), (p1 + p3, p2 + p4))
}

/// Outcome of a two-measurement reconstruction.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    /// Recovered row parameter.
    pub p: f64,
    /// Recovered column parameter.
    pub q: f64,
    /// Chip orientation implied by the axis pair.
    pub orientation: Orientation,
    /// Reconstructed probability 4-vector (outer product in chip order).
    pub probabilities: ProbVector4,
    /// Reconstructed state.
    pub rho: DensityMatrix,
    /// Recovered Bloch vector.
    pub bloch: BlochVector,
    /// False when the measurement pair is inconsistent with any chip state,
    /// i.e. the reconstructed point falls outside the physical chip region.
    pub physical: bool,
}

/// Reconstruct a chip state from its Pauli-Z and Pauli-X first-outcome
/// probabilities.
pub fn reconstruct_from_projective(pz: f64, px: f64) -> Result<Reconstruction> {
    reconstruct_from_axes((Axis::Z, pz), (Axis::X, px))
}

/// Reconstruct from any two distinct Pauli axes. The axis pair selects the
/// chip orientation: {Z, X} is the default chip, {Y, Z} and {X, Y} are the
/// relabeled ones.
pub fn reconstruct_from_axes(a: (Axis, f64), b: (Axis, f64)) -> Result<Reconstruction> {
    if a.0 == b.0 {
        return Err(Error::InvalidAxisPair);
    }
    // roles: (p-axis, q-axis) per orientation
    let (orientation, p_pair, q_pair) = match (a.0, b.0) {
        (Axis::Z, Axis::X) => (Orientation::O1, a, b),
        (Axis::X, Axis::Z) => (Orientation::O1, b, a),
        (Axis::Y, Axis::Z) => (Orientation::O2, a, b),
        (Axis::Z, Axis::Y) => (Orientation::O2, b, a),
        (Axis::X, Axis::Y) => (Orientation::O3, a, b),
        (Axis::Y, Axis::X) => (Orientation::O3, b, a),
        _ => unreachable!(),
    };
    for (name, value) in [("p_prob", p_pair.1), ("q_prob", q_pair.1)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange {
                name,
                value,
                min: 0.0,
                max: 1.0,
            });
        }
    }
    // The first projective outcome points against its axis. The oriented
    // chips carry a plus sign on exactly one Bloch component (the y
    // component of the O2 chip), where the complementary outcome feeds the
    // parameter instead.
    let p_prob = match (orientation, p_pair.0) {
        (Orientation::O2, Axis::Y) => 1.0 - p_pair.1,
        _ => p_pair.1,
    };
    let p = rescale_projective(p_prob)?;
    let q = rescale_projective(q_pair.1)?;
    let probabilities = crate::chip::oriented_outer_product(p, q, orientation);
    let rho = prob_to_density(&probabilities, &basis(BasisKind::QBismSic));
    let bloch = rho.bloch();
    // the rescaled p always lands in the support interval, but q may leave
    // the boundary chart; physicality of the state is the decisive test
    let (lo, hi) = chip_support(BasisKind::QBismSic);
    let physical = rho.is_physical(TOL_PHYS) && (lo - 1e-12..=hi + 1e-12).contains(&p);
    Ok(Reconstruction {
        p,
        q,
        orientation,
        probabilities,
        rho,
        bloch,
        physical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chip::{chip_bloch, ChipPoint};
    use crate::phase_space::density_to_prob;
    use crate::qubit::bloch_to_density;

    fn s3() -> f64 {
        3f64.sqrt()
    }

    fn chip_state(p: f64, q: f64) -> DensityMatrix {
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic).unwrap())
            .unwrap();
        bloch_to_density(&r)
    }

    #[test]
    fn qbism_povm_matches_matrix_entries() {
        let povm = qbism_povm();
        assert!((povm.elements()[0].m[0][0].re - (3.0 - s3()) / 12.0).abs() < 1e-15);
        assert!(povm.completeness_defect() < 1e-15);
        assert!(povm.min_eigenvalue() > -1e-15);

        let half = bloch_to_density(&BlochVector::new(0.0, 0.0, 0.0));
        for p in povm.born_probabilities(&half) {
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn projector_bloch_vectors() {
        let povm = qbism_povm();
        let signs = [
            [-1.0, 1.0, -1.0],
            [1.0, -1.0, -1.0],
            [-1.0, -1.0, 1.0],
            [1.0, 1.0, 1.0],
        ];
        for (q, s) in povm.elements().iter().zip(signs) {
            let projector = DensityMatrix::new(q.scale(2.0)).unwrap();
            let r = projector.bloch();
            for (c, e) in r.as_array().iter().zip(s) {
                assert!((c - e / s3()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn basis_elements_relate_to_povm() {
        // phase-space basis element = 6 Q - I, i.e. the dual relation
        let povm = qbism_povm();
        let b = basis(BasisKind::QBismSic);
        for (q, e) in povm.elements().iter().zip(b.elements()) {
            let reconstructed = q.scale(6.0) - Mat2::identity();
            assert!(reconstructed.max_abs_diff(e) < 1e-13);
        }
        // and the Gram dual of the basis is the POVM itself
        for (d, q) in b.dual().iter().zip(povm.elements()) {
            assert!(d.max_abs_diff(q) < 1e-13);
        }
    }

    #[test]
    fn coarse_povm_bloch_vectors_and_completeness() {
        let expected = [
            (Axis::X, [-1.0, 0.0, 0.0]),
            (Axis::Y, [0.0, 1.0, 0.0]),
            (Axis::Z, [0.0, 0.0, -1.0]),
        ];
        for (axis, dir) in expected {
            let povm = coarse_povm(axis);
            assert!(povm.completeness_defect() < 1e-15);
            assert!(povm.min_eigenvalue() > -1e-12);
            let r = DensityMatrix::new(povm.elements()[0]).unwrap().bloch();
            for (c, e) in r.as_array().iter().zip(dir) {
                assert!((c - e / s3()).abs() < 1e-14, "axis {axis:?}");
            }
        }
    }

    #[test]
    fn coarse_probabilities_on_worked_example() {
        let rho = chip_state(1.0 / 3.0, 2.0 / 5.0);
        let mz = coarse_povm(Axis::Z).born_probabilities(&rho);
        assert!((mz[0] - 1.0 / 3.0).abs() < 1e-13);
        assert!((mz[1] - 2.0 / 3.0).abs() < 1e-13);
        let mx = coarse_povm(Axis::X).born_probabilities(&rho);
        assert!((mx[0] - 2.0 / 5.0).abs() < 1e-13);
        assert!((mx[1] - 3.0 / 5.0).abs() < 1e-13);

        let half = bloch_to_density(&BlochVector::new(0.0, 0.0, 0.0));
        let m = coarse_povm(Axis::X).born_probabilities(&half);
        assert!((m[0] - 0.5).abs() < 1e-15 && (m[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn pauli_probability_examples() {
        let half = bloch_to_density(&BlochVector::new(0.0, 0.0, 0.0));
        let rec = pauli_probabilities(&half, Axis::Z).unwrap();
        assert_eq!(rec.probs, (0.5, 0.5));

        let rho = chip_state(1.0 / 3.0, 2.0 / 5.0);
        let z = pauli_probabilities(&rho, Axis::Z).unwrap();
        assert!((z.probs.0 - (3.0 - s3()) / 6.0).abs() < 1e-13);
        assert!((z.probs.1 - (3.0 + s3()) / 6.0).abs() < 1e-13);
        let x = pauli_probabilities(&rho, Axis::X).unwrap();
        assert!((x.probs.0 - (5.0 - s3()) / 10.0).abs() < 1e-13);
        assert!((x.probs.1 - (5.0 + s3()) / 10.0).abs() < 1e-13);

        let bad = bloch_to_density(&BlochVector::new(1.5, 0.0, 0.0));
        assert!(matches!(
            pauli_probabilities(&bad, Axis::Z),
            Err(Error::Unphysical(_))
        ));
    }

    #[test]
    fn marginal_examples() {
        let p = ProbVector4::new([2.0 / 15.0, 1.0 / 5.0, 4.0 / 15.0, 2.0 / 5.0]).unwrap();
        let (row, col) = marginals(&p);
        assert!((row.0 - 1.0 / 3.0).abs() < 1e-14 && (row.1 - 2.0 / 3.0).abs() < 1e-14);
        assert!((col.0 - 2.0 / 5.0).abs() < 1e-14 && (col.1 - 3.0 / 5.0).abs() < 1e-14);

        let (row, col) = marginals(&ProbVector4::uniform());
        assert_eq!(row, (0.5, 0.5));
        assert_eq!(col, (0.5, 0.5));

        // column sums of a Wootters quasi-distribution give the Pauli-Z pair
        let w = basis(BasisKind::Wootters);
        let r = BlochVector::new(0.3, -0.2, 0.4);
        let quasi = density_to_prob(&bloch_to_density(&r), &w);
        let (_, col) = marginals(&quasi);
        assert!((col.0 - 0.5 * (1.0 + r.z)).abs() < 1e-13);
        assert!((col.1 - 0.5 * (1.0 - r.z)).abs() < 1e-13);
    }

    #[test]
    fn reconstruction_examples() {
        let rec = reconstruct_from_projective(0.5, 0.5).unwrap();
        assert!((rec.p - 0.5).abs() < 1e-15 && (rec.q - 0.5).abs() < 1e-15);
        for v in rec.probabilities.as_array() {
            assert!((v - 0.25).abs() < 1e-14);
        }
        assert!(rec.physical);

        let rec =
            reconstruct_from_projective((3.0 - s3()) / 6.0, (5.0 - s3()) / 10.0).unwrap();
        let expect = [2.0 / 15.0, 1.0 / 5.0, 4.0 / 15.0, 2.0 / 5.0];
        for (a, e) in rec.probabilities.as_array().iter().zip(expect) {
            assert!((a - e).abs() < 1e-13);
        }
        assert!(rec.physical);

        assert!(reconstruct_from_projective(-0.1, 0.5).is_err());
        assert!(matches!(
            reconstruct_from_axes((Axis::Z, 0.5), (Axis::Z, 0.5)),
            Err(Error::InvalidAxisPair)
        ));

        // an extreme pair cannot come from any chip state
        let rec = reconstruct_from_projective(0.0, 0.0).unwrap();
        assert!(!rec.physical);
    }

    #[test]
    fn reconstruction_round_trip_on_chip_states() {
        for i in 1..8 {
            for j in 1..8 {
                let p = 0.25 + 0.5 * i as f64 / 8.0;
                let q_lo =
                    crate::chip::boundary_q(p, crate::chip::BoundaryBranch::Minus, BasisKind::QBismSic)
                        .unwrap();
                let q_hi =
                    crate::chip::boundary_q(p, crate::chip::BoundaryBranch::Plus, BasisKind::QBismSic)
                        .unwrap();
                let q = q_lo + (q_hi - q_lo) * j as f64 / 8.0;
                let rho = chip_state(p, q);
                let pz = pauli_probabilities(&rho, Axis::Z).unwrap().probs.0;
                let px = pauli_probabilities(&rho, Axis::X).unwrap().probs.0;
                let rec = reconstruct_from_projective(pz, px).unwrap();
                assert!((rec.p - p).abs() < 1e-12);
                assert!((rec.q - q).abs() < 1e-12);
                assert!(rec.bloch.max_abs_diff(&rho.bloch()) < 1e-12);
                assert!(rec.physical);
            }
        }
    }

    #[test]
    fn reconstruction_fails_off_chip() {
        // a state off the chip is not recovered by the two-measurement protocol
        let r = BlochVector::new(0.0, 1.0, 0.0);
        let rho = bloch_to_density(&r);
        let pz = pauli_probabilities(&rho, Axis::Z).unwrap().probs.0;
        let px = pauli_probabilities(&rho, Axis::X).unwrap().probs.0;
        let rec = reconstruct_from_projective(pz, px).unwrap();
        assert!(rec.bloch.distance(&r) > 0.1);
    }

    #[test]
    fn alternate_axis_pairs_pick_other_orientations() {
        // a state on the O3 chip is recovered from the {X, Y} pair
        let p = 0.45;
        let q = 0.6;
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O3, BasisKind::QBismSic).unwrap())
            .unwrap();
        let rho = bloch_to_density(&r);
        let px = pauli_probabilities(&rho, Axis::X).unwrap().probs.0;
        let py = pauli_probabilities(&rho, Axis::Y).unwrap().probs.0;
        let rec = reconstruct_from_axes((Axis::X, px), (Axis::Y, py)).unwrap();
        assert_eq!(rec.orientation, Orientation::O3);
        assert!((rec.p - p).abs() < 1e-12);
        assert!((rec.q - q).abs() < 1e-12);
        assert!(rec.bloch.max_abs_diff(&r) < 1e-12);
    }
}
