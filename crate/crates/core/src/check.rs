//! Named runtime invariant suites.
//!
//! These back the `check` CLI subcommand: each suite evaluates the
//! randomized and grid-based invariants of one module and reports
//! pass/fail per check. Randomized checks use a fixed, caller-visible seed
//! so that runs are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::{
    apply_channel, chip_image, chip_image_kraus, make_channel, preserves_chip, ChannelKind,
    ChipPreservation,
};
use crate::chip::{
    boundary_bloch, boundary_q, chip_bloch, chip_membership, chip_support, chip_surface,
    factorize, matthews_phi_bloch, matthews_phi_prob, oriented_outer_product,
    permute_orientation, sigma_image_orientations, surface_residual, BoundaryBranch, ChipPoint,
    Membership, Orientation, SigmaPermutation,
};
use crate::linalg::mat4_det;
use crate::liouvillian::{
    boundary_state, chip_entropy, combined_generator, evolve_boundary, jump_operators,
    kronecker_sum_generator, marginal_generators, max_chip_entropy,
};
use crate::measurement::{
    coarse_povm, marginals, pauli_probabilities, qbism_povm, reconstruct_from_projective, Axis,
};
use crate::phase_space::{
    basis, bloch_to_prob, density_to_prob, prob_to_bloch, prob_to_density, rescale_projective,
    simplex_rotation, BasisKind, ProbVector4,
};
use crate::qubit::{bloch_to_density, BlochVector};

/// Seed used by the CLI when none is given.
pub const DEFAULT_SEED: u64 = 987654321;

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

struct SuiteBuilder {
    suite: &'static str,
    out: Vec<CheckOutcome>,
}

impl SuiteBuilder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            out: Vec::new(),
        }
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.out.push(CheckOutcome {
            suite: self.suite,
            name,
            passed,
            detail,
        });
    }

    /// Record a worst-case value against its bound.
    fn bound(&mut self, name: &'static str, worst: f64, limit: f64) {
        self.push(
            name,
            worst <= limit,
            format!("worst {worst:.3e}, limit {limit:.0e}"),
        );
    }

    fn finish(self) -> Vec<CheckOutcome> {
        self.out
    }
}

fn random_unit_vector(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let z: f64 = 2.0 * rng.random::<f64>() - 1.0;
    let phi = std::f64::consts::TAU * rng.random::<f64>();
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

fn random_ball_point(rng: &mut ChaCha8Rng) -> BlochVector {
    let dir = random_unit_vector(rng);
    let r = rng.random::<f64>().cbrt();
    BlochVector::new(r * dir[0], r * dir[1], r * dir[2])
}

fn random_simplex_point(rng: &mut ChaCha8Rng) -> ProbVector4 {
    let mut e = [0.0f64; 4];
    for v in e.iter_mut() {
        *v = -(1.0 - rng.random::<f64>()).ln();
    }
    let sum: f64 = e.iter().sum();
    ProbVector4::new([e[0] / sum, e[1] / sum, e[2] / sum, e[3] / sum])
        .expect("normalized by construction")
}

/// Interior grid of the physical chip region for the default basis.
fn chip_region_grid(n: usize) -> Vec<(f64, f64)> {
    let (lo, hi) = chip_support(BasisKind::QBismSic);
    let mut pts = Vec::new();
    for i in 1..n {
        let p = lo + (hi - lo) * i as f64 / n as f64;
        let q_lo = boundary_q(p, BoundaryBranch::Minus, BasisKind::QBismSic).unwrap();
        let q_hi = boundary_q(p, BoundaryBranch::Plus, BasisKind::QBismSic).unwrap();
        for j in 1..n {
            pts.push((p, q_lo + (q_hi - q_lo) * j as f64 / n as f64));
        }
    }
    pts
}

fn qubit_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("qubit-core");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let r = random_ball_point(&mut rng);
        let back = bloch_to_density(&r).bloch();
        worst = worst.max(r.max_abs_diff(&back));
    }
    b.bound("bloch-density round trip", worst, 1e-12);

    // closed-form eigenvalues against the polynomial radicand in the
    // probability coordinates
    let qbism = basis(BasisKind::QBismSic);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = random_simplex_point(&mut rng);
        let [p1, p2, p3, _] = p.as_array();
        let inner = 8.0 * (p1 * p1 + p1 * (p2 + p3 - 1.0) + p2 * p2 + p2 * p3 + p3 * p3)
            - 8.0 * p2
            - 8.0 * p3
            + 3.0;
        let root = 3f64.sqrt() * inner.max(0.0).sqrt();
        let eig = prob_to_density(&p, &qbism).eigenvalues();
        worst = worst
            .max((eig.plus - 0.5 * (1.0 + root)).abs())
            .max((eig.minus - 0.5 * (1.0 - root)).abs());
    }
    b.bound("eigenvalue closed form vs polynomial route", worst, 1e-10);

    // physicality agrees with the Bloch-ball condition on radii straddling 1
    let mut ok = true;
    for i in 0..40 {
        let radius = 0.9 + 0.2 * i as f64 / 39.0;
        if (radius - 1.0).abs() < 1e-6 {
            continue;
        }
        for _ in 0..50 {
            let d = random_unit_vector(&mut rng);
            let r = BlochVector::new(radius * d[0], radius * d[1], radius * d[2]);
            let physical = bloch_to_density(&r).is_physical(crate::TOL_PHYS);
            if physical != (radius <= 1.0) {
                ok = false;
            }
        }
    }
    b.push(
        "physicality equals ball membership",
        ok,
        "radial grid straddling the unit sphere".into(),
    );

    b.finish()
}

fn phase_space_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("phase-space");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));

    let rot = simplex_rotation();
    b.bound("rotation orthogonality", rot.orthogonality_defect(), 1e-12);
    b.bound(
        "rotation determinant +1",
        (mat4_det(rot.matrix()) - 1.0).abs(),
        1e-12,
    );

    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = random_simplex_point(&mut rng);
        let rotated = rot.apply(p.as_array());
        worst = worst.max((rotated[0] - 0.5).abs());
    }
    b.bound("first rotated coordinate pinned at 1/2", worst, 1e-12);

    let qbism = basis(BasisKind::QBismSic);
    let wootters = basis(BasisKind::Wootters);
    let mut worst = 0.0f64;
    let mut prob_range_ok = true;
    for _ in 0..10_000 {
        let r = random_ball_point(&mut rng);
        let rho = bloch_to_density(&r);
        for base in [&qbism, &wootters] {
            let p = density_to_prob(&rho, base);
            let back = prob_to_density(&p, base);
            worst = worst.max(back.matrix().max_abs_diff(rho.matrix()));
        }
        let p = density_to_prob(&rho, &qbism);
        for v in p.as_array() {
            if !(-1e-12..=0.5 + 1e-12).contains(&v) {
                prob_range_ok = false;
            }
        }
    }
    b.bound("probability expansion round trip", worst, 1e-12);
    b.push(
        "physical probabilities lie in [0, 1/2]",
        prob_range_ok,
        "insphere containment of the probability image".into(),
    );

    // the two replacement rules invert each other; checked at four affinely
    // independent points and a random sample
    let mut worst = 0.0f64;
    let corners = [
        BlochVector::new(0.0, 0.0, 0.0),
        BlochVector::new(1.0, 0.0, 0.0),
        BlochVector::new(0.0, 1.0, 0.0),
        BlochVector::new(0.0, 0.0, 1.0),
    ];
    for r in corners.iter().copied().chain((0..1000).map(|_| random_ball_point(&mut rng))) {
        let back = prob_to_bloch(&bloch_to_prob(&r));
        worst = worst.max(back.max_abs_diff(&r));
    }
    for _ in 0..1000 {
        let p = random_simplex_point(&mut rng);
        let back = bloch_to_prob(&prob_to_bloch(&p));
        for (a, e) in back.as_array().iter().zip(p.as_array()) {
            worst = worst.max((a - e).abs());
        }
    }
    b.bound("replacement rules are mutually inverse", worst, 1e-12);

    b.finish()
}

fn chip_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("chip-geometry");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));

    // surfaces stay inside the projected tetrahedron: the reordered outer
    // product keeps non-negative entries, which is exactly hull membership
    let mut ok = true;
    for o in [Orientation::O1, Orientation::O2, Orientation::O3] {
        for i in 0..=20 {
            for j in 0..=20 {
                let (p, q) = (i as f64 / 20.0, j as f64 / 20.0);
                let v = oriented_outer_product(p, q, o);
                if v.as_array().iter().any(|&x| x < -1e-15) {
                    ok = false;
                }
                let _ = chip_surface(&ChipPoint::new(p, q, o, BasisKind::QBismSic).unwrap());
            }
        }
    }
    b.push(
        "surfaces contained in the tetrahedron",
        ok,
        "non-negative preimage over the whole parameter square".into(),
    );

    let (lo, hi) = chip_support(BasisKind::QBismSic);
    b.bound(
        "support endpoints",
        (lo - (1.0 - 1.0 / 3f64.sqrt()) / 2.0)
            .abs()
            .max((hi - (1.0 + 1.0 / 3f64.sqrt()) / 2.0).abs()),
        1e-12,
    );

    // pure boundary in both bases
    let mut worst = 0.0f64;
    for k in 0..1000 {
        for branch in [BoundaryBranch::Plus, BoundaryBranch::Minus] {
            let t = (k as f64 + 0.5) / 1000.0;
            let p = lo + (hi - lo) * t;
            let q = boundary_q(p, branch, BasisKind::QBismSic).unwrap();
            let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic).unwrap())
                .unwrap();
            worst = worst.max((r.norm() - 1.0).abs());

            let pw = t;
            let qw = boundary_q(pw, branch, BasisKind::Wootters).unwrap();
            let rw =
                chip_bloch(&ChipPoint::new(pw, qw, Orientation::O1, BasisKind::Wootters).unwrap())
                    .unwrap();
            worst = worst.max((rw.norm() - 1.0).abs());
        }
    }
    b.bound("boundary states are pure (both bases)", worst, 1e-10);

    // Bloch chart of the boundary agrees with the q-chart composition
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let p = lo + (hi - lo) * (k as f64 + 0.5) / 1000.0;
        for (branch, q_branch) in [
            (BoundaryBranch::Minus, BoundaryBranch::Plus),
            (BoundaryBranch::Plus, BoundaryBranch::Minus),
        ] {
            let direct = boundary_bloch(p, branch).unwrap();
            worst = worst.max((direct.norm() - 1.0).abs());
            let q = boundary_q(1.0 - p, q_branch, BasisKind::QBismSic).unwrap();
            let via = chip_bloch(
                &ChipPoint::new(1.0 - p, q, Orientation::O1, BasisKind::QBismSic).unwrap(),
            )
            .unwrap();
            worst = worst.max(direct.max_abs_diff(&via));
        }
    }
    b.bound("boundary Bloch chart identity", worst, 1e-10);

    // the correlation field vanishes identically on the chip
    let mut worst = 0.0f64;
    for &(p, q) in &chip_region_grid(50) {
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic).unwrap())
            .unwrap();
        worst = worst.max(matthews_phi_bloch(&r).unwrap().abs());
    }
    b.bound("correlation vanishes on the chip", worst, 1e-12);

    // and vanishes only on the chip surface inside the ball
    let mut ok = true;
    let n = 40;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = BlochVector::new(
                    -1.0 + 2.0 * (i as f64 + 0.5) / n as f64,
                    -1.0 + 2.0 * (j as f64 + 0.5) / n as f64,
                    -1.0 + 2.0 * (k as f64 + 0.5) / n as f64,
                );
                if r.norm() > 1.0 {
                    continue;
                }
                let phi = matthews_phi_bloch(&r).unwrap();
                let res = surface_residual(&r, Orientation::O1);
                if phi.abs() < 1e-9 && res.abs() > 1e-6 {
                    ok = false;
                }
                if res.abs() < 1e-9 && phi.abs() > 1e-6 {
                    ok = false;
                }
            }
        }
    }
    b.push(
        "correlation zero set is the chip surface",
        ok,
        "grid over the Bloch ball".into(),
    );

    // extrema at the poles
    let top = matthews_phi_bloch(&BlochVector::new(0.0, 1.0, 0.0)).unwrap();
    let bottom = matthews_phi_bloch(&BlochVector::new(0.0, -1.0, 0.0)).unwrap();
    b.bound(
        "correlation extrema at the poles",
        (top - 1.0 / 3f64.sqrt())
            .abs()
            .max((bottom + 1.0 / 3f64.sqrt()).abs()),
        1e-12,
    );

    // every chip probability vector factorizes back to its parameters
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (plo, phi_) = (lo + 1e-6, hi - 1e-6);
        let p = plo + (phi_ - plo) * rng.random::<f64>();
        let q_lo = boundary_q(p, BoundaryBranch::Minus, BasisKind::QBismSic).unwrap();
        let q_hi = boundary_q(p, BoundaryBranch::Plus, BasisKind::QBismSic).unwrap();
        let q = q_lo + (q_hi - q_lo) * rng.random::<f64>();
        let v = ProbVector4::outer_product(p, q);
        match factorize(&v, 1e-10) {
            Some((fp, fq)) => {
                worst = worst.max((fp - p).abs()).max((fq - q).abs());
            }
            None => worst = f64::INFINITY,
        }
    }
    b.bound("chip vectors factorize to their parameters", worst, 1e-10);

    // membership trichotomy on constructed cases
    let mut ok = true;
    for _ in 0..200 {
        let scale = rng.random::<f64>();
        let (p, q) = {
            let p = lo + (hi - lo) * rng.random::<f64>();
            let q_lo = boundary_q(p, BoundaryBranch::Minus, BasisKind::QBismSic).unwrap();
            let q_hi = boundary_q(p, BoundaryBranch::Plus, BasisKind::QBismSic).unwrap();
            (p, q_lo + (q_hi - q_lo) * rng.random::<f64>())
        };
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic).unwrap())
            .unwrap();
        if r.norm() < 1.0 - 1e-6
            && chip_membership(&r, Orientation::O1, 1e-9) != Membership::Interior
        {
            ok = false;
        }
        // points off the surface
        let off = BlochVector::new(r.x, r.y + 0.05 + 0.4 * scale, r.z);
        if surface_residual(&off, Orientation::O1).abs() > 1e-6
            && chip_membership(&off, Orientation::O1, 1e-9) != Membership::Outside
        {
            ok = false;
        }
    }
    b.push("membership trichotomy", ok, "sampled chip and off-chip points".into());

    // the relabeling transpositions are involutions mapping the default
    // surface onto the second orientation
    let s1 = sigma_image_orientations(SigmaPermutation::Sigma1);
    let s2 = sigma_image_orientations(SigmaPermutation::Sigma2);
    let mut ok = s1 == vec![Orientation::O2] && s2 == vec![Orientation::O2];
    for _ in 0..100 {
        let v = random_simplex_point(&mut rng);
        for sig in [SigmaPermutation::Sigma1, SigmaPermutation::Sigma2] {
            let twice = permute_orientation(&permute_orientation(&v, sig), sig);
            if twice
                .as_array()
                .iter()
                .zip(v.as_array())
                .any(|(a, e)| (a - e).abs() > 0.0)
            {
                ok = false;
            }
        }
    }
    b.push(
        "relabelings are involutions onto the second surface",
        ok,
        format!("sigma1 -> {s1:?}, sigma2 -> {s2:?}"),
    );

    // probability and Bloch forms of the correlation agree
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let r = random_ball_point(&mut rng).scale(0.98);
        let a = matthews_phi_bloch(&r).unwrap();
        if let Ok(bb) = matthews_phi_prob(&bloch_to_prob(&r)) {
            worst = worst.max((a - bb).abs());
        }
    }
    b.bound("correlation forms agree", worst, 1e-12);

    b.finish()
}

fn measurement_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("measurement");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));

    let mut completeness = qbism_povm().completeness_defect();
    let mut min_eig = qbism_povm().min_eigenvalue();
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let povm = coarse_povm(axis);
        completeness = completeness.max(povm.completeness_defect());
        min_eig = min_eig.min(povm.min_eigenvalue());
    }
    b.bound("POVM completeness", completeness, 1e-12);
    b.push(
        "POVM positivity",
        min_eig >= -crate::TOL_PHYS,
        format!("smallest element eigenvalue {min_eig:.3e}"),
    );

    // coarse probabilities are the rescaled Pauli probabilities; the first
    // coarse outcome pairs with the first Pauli outcome on x and z and with
    // the second on y
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let rho = bloch_to_density(&random_ball_point(&mut rng));
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let coarse = coarse_povm(axis).born_probabilities(&rho);
            let pauli = pauli_probabilities(&rho, axis).unwrap().probs;
            let matched = match axis {
                Axis::Y => rescale_projective(pauli.1).unwrap(),
                _ => rescale_projective(pauli.0).unwrap(),
            };
            worst = worst.max((coarse[0] - matched).abs());
        }
    }
    b.bound("coarse equals rescaled Pauli", worst, 1e-12);

    // two-measurement reconstruction is exact on the chip
    let (lo, hi) = chip_support(BasisKind::QBismSic);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = lo + (hi - lo) * rng.random::<f64>();
        let q_lo = boundary_q(p, BoundaryBranch::Minus, BasisKind::QBismSic).unwrap();
        let q_hi = boundary_q(p, BoundaryBranch::Plus, BasisKind::QBismSic).unwrap();
        let q = q_lo + (q_hi - q_lo) * rng.random::<f64>();
        let r = chip_bloch(&ChipPoint::new(p, q, Orientation::O1, BasisKind::QBismSic).unwrap())
            .unwrap();
        let rho = bloch_to_density(&r);
        let pz = pauli_probabilities(&rho, Axis::Z).unwrap().probs.0;
        let px = pauli_probabilities(&rho, Axis::X).unwrap().probs.0;
        let rec = reconstruct_from_projective(pz, px).unwrap();
        worst = worst
            .max((rec.p - p).abs())
            .max((rec.q - q).abs())
            .max(rec.bloch.max_abs_diff(&r));
        let (row, col) = marginals(&rec.probabilities);
        worst = worst.max((row.0 - p).abs()).max((col.0 - q).abs());
    }
    b.bound("chip reconstruction round trip", worst, 1e-10);

    // and provably not exact away from the chip
    let r = BlochVector::new(0.0, 1.0, 0.0);
    let rho = bloch_to_density(&r);
    let pz = pauli_probabilities(&rho, Axis::Z).unwrap().probs.0;
    let px = pauli_probabilities(&rho, Axis::X).unwrap().probs.0;
    let rec = reconstruct_from_projective(pz, px).unwrap();
    let miss = rec.bloch.distance(&r);
    b.push(
        "off-chip states are not recovered",
        miss > 0.1,
        format!("distance {miss:.3}"),
    );

    b.finish()
}

fn channel_suite(seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("channels");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(4));

    let mut worst = 0.0f64;
    for kind in ChannelKind::ALL {
        for xi in [0.0, 0.25, 0.5, 0.75, 1.0] {
            worst = worst.max(make_channel(kind, xi).unwrap().completeness_defect());
        }
    }
    b.bound("Kraus completeness", worst, 1e-12);

    let grid = chip_region_grid(20);
    let mut strict = 0.0f64;
    let mut ad_gap = 0.0f64;
    for &(p, q) in &grid {
        for xi in [0.1, 1.0 / 3.0, 0.9] {
            for kind in [
                ChannelKind::BitFlip,
                ChannelKind::PhaseFlip,
                ChannelKind::BitPhaseFlip,
                ChannelKind::Depolarizing,
                ChannelKind::PhaseDamping,
            ] {
                let a = chip_image(kind, xi, p, q).unwrap();
                let k = chip_image_kraus(kind, xi, p, q).unwrap();
                strict = strict.max(a.max_abs_diff(&k));
            }
            // amplitude damping: y and z agree, x carries the tabulated
            // (1-xi) in place of the Kraus sqrt(1-xi)
            let a = chip_image(ChannelKind::AmplitudeDamping, xi, p, q).unwrap();
            let k = chip_image_kraus(ChannelKind::AmplitudeDamping, xi, p, q).unwrap();
            strict = strict.max((a.y - k.y).abs()).max((a.z - k.z).abs());
            let fq = 2.0 * q - 1.0;
            let predicted = 3f64.sqrt() * fq.abs() * ((1.0 - xi).sqrt() - (1.0 - xi));
            ad_gap = ad_gap.max(((a.x - k.x).abs() - predicted).abs());
        }
    }
    b.bound("closed forms match the Kraus route", strict, 1e-12);
    b.bound(
        "amplitude-damping x gap has the predicted shape",
        ad_gap,
        1e-12,
    );

    let mut worst = 0.0f64;
    for kind in [
        ChannelKind::BitFlip,
        ChannelKind::PhaseFlip,
        ChannelKind::PhaseDamping,
    ] {
        let ChipPreservation::Preserves(reparam) = preserves_chip(kind) else {
            worst = f64::INFINITY;
            continue;
        };
        for &(p, q) in &grid {
            for xi in [0.1, 1.0 / 3.0, 0.5, 0.9] {
                let image = chip_image_kraus(kind, xi, p, q).unwrap();
                let (pp, qq) = reparam(p, q, xi);
                let expect =
                    chip_bloch(&ChipPoint::new(pp, qq, Orientation::O1, BasisKind::QBismSic).unwrap())
                        .unwrap();
                worst = worst.max(image.max_abs_diff(&expect));
            }
        }
    }
    b.bound("preserving channels reparametrize the chip", worst, 1e-12);

    let mut min_residual = f64::INFINITY;
    for kind in [
        ChannelKind::BitPhaseFlip,
        ChannelKind::Depolarizing,
        ChannelKind::AmplitudeDamping,
    ] {
        let best = grid
            .iter()
            .map(|&(p, q)| {
                let image = chip_image_kraus(kind, 1.0 / 3.0, p, q).unwrap();
                surface_residual(&image, Orientation::O1).abs()
            })
            .fold(0.0f64, f64::max);
        min_residual = min_residual.min(best);
    }
    b.push(
        "non-preserving channels leave the chip",
        min_residual > 1e-2,
        format!("weakest witness residual {min_residual:.3e}"),
    );

    let mut worst = 0.0f64;
    for _ in 0..2000 {
        let rho = bloch_to_density(&random_ball_point(&mut rng));
        let kind = ChannelKind::ALL[rng.random_range(0..6)];
        let xi = rng.random::<f64>();
        let out = apply_channel(&make_channel(kind, xi).unwrap(), &rho);
        worst = worst.max(out.bloch().norm() - 1.0);
    }
    b.bound("channel outputs stay physical", worst, 1e-9);

    b.finish()
}

fn liouvillian_suite(_seed: u64) -> Vec<CheckOutcome> {
    let mut b = SuiteBuilder::new("liouvillian");

    let mut worst = 0.0f64;
    let mut sums = 0.0f64;
    for k in 0..20 {
        let p = if k < 10 {
            0.05 + 0.04 * k as f64
        } else {
            0.55 + 0.04 * (k - 10) as f64
        };
        let a = combined_generator(p).unwrap();
        let s = kronecker_sum_generator(p).unwrap();
        for i in 0..4 {
            sums = sums
                .max(a[i].iter().sum::<f64>().abs())
                .max((0..4).map(|j| a[j][i]).sum::<f64>().abs());
            for j in 0..4 {
                worst = worst.max((a[i][j] - s[i][j]).abs());
            }
        }
    }
    b.bound("combined generator equals the Kronecker sum", worst, 1e-9);
    b.bound("generator rows and columns sum to zero", sums, 1e-9);

    let mut worst = 0.0f64;
    let h = 1e-6;
    for p in [0.1, 0.2, 0.35, 0.45, 0.6, 0.8] {
        let (_, g2) = marginal_generators(p).unwrap();
        let q = |t: f64| boundary_q(t, BoundaryBranch::Minus, BasisKind::Wootters).unwrap();
        let dq = (q(p + h) - q(p - h)) / (2.0 * h);
        let got = g2.apply([q(p), 1.0 - q(p)]);
        worst = worst.max((got[0] - dq).abs());
    }
    b.bound("marginal generator matches finite differences", worst, 1e-7);

    let (j1, _) = jump_operators(0.25).unwrap();
    let (k1, k2) = jump_operators(0.75).unwrap();
    b.push(
        "damping rates swap sign across the singularity",
        j1.rate == 1.0 && k1.rate == -1.0 && k2.rate == 1.0,
        "gamma_1(1/4) = +1, gamma_1(3/4) = -1".into(),
    );

    let wootters = basis(BasisKind::Wootters);
    let mut deviation = 0.0f64;
    let mut entropy_vn = 0.0f64;
    let mut norm_drift = 0.0f64;
    let mut shannon_lo = f64::INFINITY;
    let mut shannon_hi = 0.0f64;
    for branch in [BoundaryBranch::Minus, BoundaryBranch::Plus] {
        match evolve_boundary(1e-3, 1.0 - 1e-3, branch, 1000) {
            Ok(t) => {
                for s in &t.samples {
                    let analytic = boundary_state(s.p, branch).unwrap();
                    deviation = deviation.max(s.rho.bloch().max_abs_diff(&analytic.bloch()));
                    entropy_vn = entropy_vn.max(s.rho.von_neumann_entropy_bits());
                    let quasi = density_to_prob(&s.rho, &wootters);
                    norm_drift =
                        norm_drift.max((quasi.as_array().iter().sum::<f64>() - 1.0).abs());
                    let (row, col) = marginals(&quasi);
                    let hbits = crate::liouvillian::binary_entropy_bits(row.0)
                        + crate::liouvillian::binary_entropy_bits(col.0);
                    shannon_lo = shannon_lo.min(hbits);
                    shannon_hi = shannon_hi.max(hbits);
                }
            }
            Err(e) => {
                b.push("trajectory integration", false, format!("{e}"));
                return b.finish();
            }
        }
    }
    b.bound("trajectory tracks the analytic boundary", deviation, 1e-4);
    b.bound("trajectory purity (von Neumann entropy)", entropy_vn, 1e-6);
    b.bound("quasi-probability stays normalized", norm_drift, 1e-9);
    b.push(
        "trajectory entropy stays within the bound",
        shannon_lo >= 1.0 - 1e-6 && shannon_hi <= 1.35226 + 1e-3,
        format!("range [{shannon_lo:.6}, {shannon_hi:.6}]"),
    );

    let min = chip_entropy(0.5, BoundaryBranch::Minus).unwrap();
    b.bound("entropy minimum of one bit", (min - 1.0).abs(), 1e-9);
    let (_, h_max) = max_chip_entropy();
    b.bound("entropy maximum", (h_max - 1.35226).abs(), 1e-4);

    b.finish()
}

/// Names understood by [`run_suite`].
pub fn available_suites() -> &'static [&'static str] {
    &[
        "qubit-core",
        "phase-space",
        "chip-geometry",
        "measurement",
        "channels",
        "liouvillian",
        "all",
    ]
}

/// Run one named suite (or `"all"`); `None` for unknown names.
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CheckOutcome>> {
    match name {
        "qubit-core" => Some(qubit_suite(seed)),
        "phase-space" => Some(phase_space_suite(seed)),
        "chip-geometry" => Some(chip_suite(seed)),
        "measurement" => Some(measurement_suite(seed)),
        "channels" => Some(channel_suite(seed)),
        "liouvillian" => Some(liouvillian_suite(seed)),
        "all" => {
            let mut out = Vec::new();
            for suite in [
                "qubit-core",
                "phase-space",
                "chip-geometry",
                "measurement",
                "channels",
                "liouvillian",
            ] {
                out.extend(run_suite(suite, seed).unwrap());
            }
            Some(out)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_default_seed() {
        let outcomes = run_suite("all", DEFAULT_SEED).unwrap();
        assert!(outcomes.len() > 20);
        for o in &outcomes {
            assert!(o.passed, "{}::{} failed: {}", o.suite, o.name, o.detail);
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope", 1).is_none());
    }
}
