//! Boundary-confined Liouvillian evolution.
//!
//! The pure boundary of the Wootters chip is a one-parameter family of
//! states; the parameter p plays the role of time. Each binary marginal
//! {p, 1-p} and {q(p), 1-q(p)} evolves under a 2x2 transition generator
//! with a single rate, the combined 4x4 generator is their Kronecker sum,
//! and in Hilbert space the same motion is a master equation with two jump
//! operators whose damping rates are opposite in sign and swap at the
//! singular point p = 1/2.
//!
//! For p above 1/2 the printed jump operators acquire imaginary radicands;
//! the integrator works with the rate-weighted dissipators instead, where
//! only |1 - 2p| enters after the sign swap, so every stored quantity stays
//! real.

use crate::chip::{boundary_q, chip_bloch, BoundaryBranch, ChipPoint, Orientation};
use crate::linalg::{anticommutator, kron2r, Mat2, Mat2r, Mat4r};
use crate::phase_space::BasisKind;
use crate::qubit::{bloch_to_density, DensityMatrix};
use crate::{Error, Result, EPS_SING};

/// Default local error tolerance of the embedded Runge-Kutta pair. Tight
/// enough that trajectory purity survives a full sweep across the chip
/// boundary (von Neumann entropy stays below 1e-6).
pub const DEFAULT_LOCAL_TOL: f64 = 1e-11;

/// Default acceptance tolerance for the distance between integrated samples
/// and the analytic boundary curve.
pub const DEFAULT_TOL_TRAJ: f64 = 1e-4;

/// 2x2 transition generator r * [[-1, 1], [1, -1]]; rows and columns sum
/// to zero by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionGenerator2 {
    rate: f64,
}

impl TransitionGenerator2 {
    pub fn new(rate: f64) -> Self {
        Self { rate }
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn matrix(&self) -> Mat2r {
        let r = self.rate;
        [[-r, r], [r, -r]]
    }

    /// Matrix exponential: with K = [[-1,1],[1,-1]], K^2 = -2K collapses the
    /// series to exp(rK) = I + K (1 - e^(-2r))/2.
    pub fn exp(&self) -> Mat2r {
        let f = (1.0 - (-2.0 * self.rate).exp()) / 2.0;
        [[1.0 - f, f], [f, 1.0 - f]]
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let r = self.rate;
        [r * (v[1] - v[0]), r * (v[0] - v[1])]
    }
}

fn check_open_unit(p: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}

fn check_nonsingular(p: f64) -> Result<()> {
    check_open_unit(p)?;
    // strictly inside, so the integrator may evaluate on the zone edge
    if (p - 0.5).abs() < EPS_SING {
        return Err(Error::SingularParameter(p));
    }
    Ok(())
}

/// Rates of the two marginal generators: x = 1/(1-2p) drives {p, 1-p} and
/// y = -(1-2p) / (4p(1-p)((1-p)^2 + p^2)) drives the lower branch of
/// {q, 1-q} along the Wootters boundary.
pub fn marginal_generators(p: f64) -> Result<(TransitionGenerator2, TransitionGenerator2)> {
    check_nonsingular(p)?;
    let x = 1.0 / (1.0 - 2.0 * p);
    let d = (1.0 - p) * (1.0 - p) + p * p;
    let y = -(1.0 - 2.0 * p) / (4.0 * p * (1.0 - p) * d);
    Ok((TransitionGenerator2::new(x), TransitionGenerator2::new(y)))
}

/// Combined 4x4 generator in its rational closed form. Equals the Kronecker
/// sum of the marginal generators (they commute after lifting, so the
/// logarithm of the product of exponentials collapses to the sum).
pub fn combined_generator(p: f64) -> Result<Mat4r> {
    check_nonsingular(p)?;
    let u = (p - 1.0) * p;
    let d2 = 2.0 * u + 1.0;
    let diag = (8.0 * u * (u + 1.0) + 1.0) / (4.0 * u * (2.0 * p - 1.0) * d2);
    let y = (1.0 - 2.0 * p) / (4.0 * u * d2);
    let x = 1.0 / (1.0 - 2.0 * p);
    Ok([
        [diag, y, x, 0.0],
        [y, diag, 0.0, x],
        [x, 0.0, diag, y],
        [0.0, x, y, diag],
    ])
}

/// Kronecker sum L1 (+) L2 of the marginal generators.
pub fn kronecker_sum_generator(p: f64) -> Result<Mat4r> {
    let (g1, g2) = marginal_generators(p)?;
    let id: Mat2r = [[1.0, 0.0], [0.0, 1.0]];
    let a = kron2r(&g1.matrix(), &id);
    let b = kron2r(&id, &g2.matrix());
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    Ok(out)
}

/// A jump operator together with its signed damping rate.
#[derive(Clone, Debug)]
pub struct JumpOperator {
    pub matrix: Mat2,
    pub rate: f64,
}

/// The two Lindblad jump operators at parameter p, with damping rates
/// gamma_1 = -gamma_2 = +1 below the singular point and -1 above it.
///
/// Square roots are taken of |1 - 2p|; together with the rate swap this
/// reproduces the same rate-weighted dissipators on both sides.
pub fn jump_operators(p: f64) -> Result<(JumpOperator, JumpOperator)> {
    check_nonsingular(p)?;
    let abs_f = (1.0 - 2.0 * p).abs();
    let l1 = Mat2::from_real([[2.0 / abs_f.sqrt(), 0.0], [0.0, 0.0]]);
    let d = (1.0 - p) * (1.0 - p) + p * p;
    let b = 0.5 * (abs_f / (p * (1.0 - p) * d)).sqrt();
    let l2 = Mat2::pauli_x().scale(b);
    let gamma1 = if p < 0.5 { 1.0 } else { -1.0 };
    Ok((
        JumpOperator {
            matrix: l1,
            rate: gamma1,
        },
        JumpOperator {
            matrix: l2,
            rate: -gamma1,
        },
    ))
}

/// The pure boundary state of the Wootters chip at parameter p.
pub fn boundary_state(p: f64, branch: BoundaryBranch) -> Result<DensityMatrix> {
    let q = boundary_q(p, branch, BasisKind::Wootters)?;
    let point = ChipPoint::new(p, q, Orientation::O1, BasisKind::Wootters)?;
    Ok(bloch_to_density(&chip_bloch(&point)?))
}

/// One sample of an integrated trajectory.
#[derive(Clone, Debug)]
pub struct TrajectorySample {
    pub p: f64,
    pub rho: DensityMatrix,
}

/// An integrated boundary trajectory; `p` is strictly increasing across the
/// samples.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    pub branch: BoundaryBranch,
}

fn dissipator(l: &Mat2, rho: &Mat2) -> Mat2 {
    let ldl = l.adjoint() * *l;
    *l * *rho * l.adjoint() - anticommutator(&ldl, rho).scale(0.5)
}

fn master_rhs(p: f64, rho: &Mat2) -> Result<Mat2> {
    let (j1, j2) = jump_operators(p)?;
    Ok(dissipator(&j1.matrix, rho).scale(j1.rate) + dissipator(&j2.matrix, rho).scale(j2.rate))
}

fn rho_err(a: &Mat2, b: &Mat2) -> f64 {
    a.max_abs_diff(b)
}

/// Dormand-Prince 5(4) step: returns (5th-order state, error estimate).
fn dp45_step(p: f64, h: f64, rho: &Mat2) -> Result<(Mat2, f64)> {
    const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 6] = [
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mut k = [Mat2::zero(); 7];
    k[0] = master_rhs(p, rho)?;
    for stage in 0..6 {
        let mut arg = *rho;
        for (j, kj) in k.iter().enumerate().take(stage + 1) {
            if A[stage][j] != 0.0 {
                arg = arg + kj.scale(h * A[stage][j]);
            }
        }
        k[stage + 1] = master_rhs(p + C[stage] * h, &arg)?;
    }
    // the 5th-order solution reuses the last stage row
    let mut y5 = *rho;
    for (j, kj) in k.iter().enumerate().take(6) {
        if A[5][j] != 0.0 {
            y5 = y5 + kj.scale(h * A[5][j]);
        }
    }
    let mut y4 = *rho;
    for (j, kj) in k.iter().enumerate() {
        if B4[j] != 0.0 {
            y4 = y4 + kj.scale(h * B4[j]);
        }
    }
    Ok((y5, rho_err(&y5, &y4)))
}

/// Integrate the master equation from `from` to `to`; the interval must not
/// touch the exclusion zone around p = 1/2.
fn advance(rho: &mut Mat2, from: f64, to: f64, local_tol: f64) -> Result<()> {
    if to <= from {
        return Ok(());
    }
    let mut p = from;
    let mut h = (to - from).min(1e-3);
    let h_min = 1e-13;
    while p < to {
        h = h.min(to - p);
        let (next, err) = dp45_step(p, h, rho)?;
        if err <= local_tol {
            p += h;
            *rho = next;
            let grow = if err == 0.0 {
                5.0
            } else {
                0.9 * (local_tol / err).powf(0.2)
            };
            h *= grow.clamp(0.2, 5.0);
        } else {
            h *= (0.9 * (local_tol / err).powf(0.2)).clamp(0.2, 0.9);
            if h < h_min {
                return Err(Error::IntegrationFailure(format!(
                    "step size underflow at p = {p}"
                )));
            }
        }
    }
    Ok(())
}

/// Integrate the boundary-confined master equation from p0 to p1, emitting
/// `steps + 1` evenly spaced samples (a single sample when p0 = p1).
///
/// The initial state is the pure boundary state at p0 on the chosen branch.
/// When the sweep reaches the exclusion zone around p = 1/2 the rates swap
/// sign; the crossing itself is a removable point handled by symmetric
/// continuation, re-anchoring on the analytic boundary state just past the
/// zone. Every emitted sample is validated against the analytic boundary
/// curve.
pub fn evolve_boundary(
    p0: f64,
    p1: f64,
    branch: BoundaryBranch,
    steps: usize,
) -> Result<Trajectory> {
    check_open_unit(p0)?;
    check_open_unit(p1)?;
    if p1 < p0 {
        return Err(Error::OutOfRange {
            name: "p1",
            value: p1,
            min: p0,
            max: 1.0,
        });
    }
    for endpoint in [p0, p1] {
        if (endpoint - 0.5).abs() <= EPS_SING && p0 != p1 {
            return Err(Error::SingularParameter(endpoint));
        }
    }

    let mut samples = Vec::with_capacity(steps + 1);
    let mut rho = *boundary_state(p0, branch)?.matrix();
    samples.push(TrajectorySample {
        p: p0,
        rho: DensityMatrix::new_unchecked(rho),
    });
    if p0 == p1 {
        return Ok(Trajectory { samples, branch });
    }

    // the integrator stops strictly outside the generator's rejection zone
    let zone_lo = 0.5 - 2.0 * EPS_SING;
    let zone_hi = 0.5 + 2.0 * EPS_SING;
    let mut cur = p0;
    for k in 1..=steps.max(1) {
        let target = p0 + (p1 - p0) * k as f64 / steps.max(1) as f64;
        if cur < zone_lo && target > zone_lo {
            advance(&mut rho, cur, zone_lo, DEFAULT_LOCAL_TOL)?;
            if target <= zone_hi {
                rho = *boundary_state(target, branch)?.matrix();
            } else {
                rho = *boundary_state(zone_hi, branch)?.matrix();
                advance(&mut rho, zone_hi, target, DEFAULT_LOCAL_TOL)?;
            }
        } else if (zone_lo..=zone_hi).contains(&cur) {
            if target <= zone_hi {
                rho = *boundary_state(target, branch)?.matrix();
            } else {
                rho = *boundary_state(zone_hi, branch)?.matrix();
                advance(&mut rho, zone_hi, target, DEFAULT_LOCAL_TOL)?;
            }
        } else {
            advance(&mut rho, cur, target, DEFAULT_LOCAL_TOL)?;
        }
        cur = target;
        samples.push(TrajectorySample {
            p: target,
            rho: DensityMatrix::new_unchecked(rho),
        });
    }

    for sample in &samples {
        let analytic = boundary_state(sample.p, branch)?;
        let dev = sample.rho.bloch().max_abs_diff(&analytic.bloch());
        if dev > DEFAULT_TOL_TRAJ {
            return Err(Error::IntegrationFailure(format!(
                "sample at p = {} deviates from the analytic boundary by {dev:.3e}",
                sample.p
            )));
        }
    }
    Ok(Trajectory { samples, branch })
}

/// Binary entropy in bits, zero at the endpoints.
pub fn binary_entropy_bits(x: f64) -> f64 {
    let term = |t: f64| if t > 0.0 { -t * t.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

/// Shannon entropy (bits) of the product distribution on the boundary at
/// parameter p: H2(p) + H2(q(p)).
pub fn chip_entropy(p: f64, branch: BoundaryBranch) -> Result<f64> {
    check_open_unit(p)?;
    let q = boundary_q(p, branch, BasisKind::Wootters)?;
    Ok(binary_entropy_bits(p) + binary_entropy_bits(q))
}

/// Numeric maximizer of the boundary entropy on (0, 1/2]; by the p -> 1-p
/// symmetry the mirrored point attains the same value.
pub fn max_chip_entropy() -> (f64, f64) {
    let h = |p: f64| chip_entropy(p, BoundaryBranch::Minus).unwrap();
    let mut best_p = 0.25;
    let mut best = h(best_p);
    let n = 4000;
    for i in 1..n {
        let p = 0.5 * i as f64 / n as f64;
        let v = h(p);
        if v > best {
            best = v;
            best_p = p;
        }
    }
    // golden-section refinement around the grid winner
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let mut lo = (best_p - 1e-3).max(1e-9);
    let mut hi = (best_p + 1e-3).min(0.5);
    let mut x1 = hi - golden * (hi - lo);
    let mut x2 = lo + golden * (hi - lo);
    let mut f1 = h(x1);
    let mut f2 = h(x2);
    for _ in 0..80 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = h(x1);
        }
    }
    let p_star = 0.5 * (lo + hi);
    (p_star, h(p_star))
}
