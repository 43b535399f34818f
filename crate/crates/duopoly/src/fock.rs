//! Truncated Fock-space verification of the two-mode-squeezing quantity
//! map. The continuous-variable operators are represented on a finite
//! photon-number basis, exponentiated by scaling-and-squaring, and applied
//! to the two-mode vacuum; the quadrature expectations must reproduce the
//! closed-form map up to the truncation tail.
//!
//! This is an acceptance oracle, not a runtime path: quantities are always
//! computed from the closed form in [`crate::ldm`].

use crate::error::{Error, Result};
use crate::ldm::LdmStrategy;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::f64::consts::SQRT_2;

/// Tail mass above which the truncation is declared insufficient.
pub const TAIL_MASS_THRESHOLD: f64 = 1e-8;

/// Photon-number truncation: each mode keeps levels 0..cutoff-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockConfig {
    cutoff: usize,
}

impl FockConfig {
    pub fn new(cutoff: usize) -> Result<Self> {
        if cutoff < 2 {
            return Err(Error::InvalidParameter(format!(
                "cutoff >= 2 violated (cutoff = {cutoff})"
            )));
        }
        Ok(Self { cutoff })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }
}

/// Quadrature expectations of the simulated final state, with the measured
/// truncation tail mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockVerification {
    pub q1: f64,
    pub q2: f64,
    /// Probability of occupying the top two levels of either mode.
    pub tail_mass: f64,
}

fn annihilation(dim: usize) -> DMatrix<Complex64> {
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// exp(A) v through applications of A only: scale until the 1-norm bound is
/// at most 1, sum the Taylor series, and square by repeated application.
/// Exact to machine precision for the anti-Hermitian generators used here.
fn expmv(
    apply: &dyn Fn(&DVector<Complex64>) -> DVector<Complex64>,
    norm1: f64,
    v: &DVector<Complex64>,
) -> DVector<Complex64> {
    let s = if norm1 > 1.0 { norm1.log2().ceil() as u32 } else { 0 };
    let scale = (0.5f64).powi(s as i32);
    let mut out = v.clone();
    for _ in 0..(1u64 << s) {
        let mut term = out.clone();
        let mut sum = out;
        for k in 1..=40 {
            term = apply(&term) * Complex64::new(scale / k as f64, 0.0);
            sum += &term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        out = sum;
    }
    out
}

/// Action of the squeezing generator -g (a1d a2d - a1 a2) on a two-mode
/// state vector, using the ladder structure directly (two terms per entry).
fn squeeze_apply(gamma: f64, dim: usize, v: &DVector<Complex64>) -> DVector<Complex64> {
    let mut out = DVector::<Complex64>::zeros(dim * dim);
    for n1 in 0..dim {
        for n2 in 0..dim {
            let mut z = Complex64::new(0.0, 0.0);
            // -g a1d a2d term: from (n1-1, n2-1)
            if n1 > 0 && n2 > 0 {
                z -= v[(n1 - 1) * dim + (n2 - 1)] * ((n1 * n2) as f64).sqrt();
            }
            // +g a1 a2 term: from (n1+1, n2+1)
            if n1 + 1 < dim && n2 + 1 < dim {
                z += v[(n1 + 1) * dim + (n2 + 1)] * (((n1 + 1) * (n2 + 1)) as f64).sqrt();
            }
            out[n1 * dim + n2] = z * gamma;
        }
    }
    out
}

/// Simulate J(g)^dag (D1 (x) D2) J(g) |00> on the truncated two-mode space
/// and measure X_i = (a_i^dag + a_i) / sqrt(2).
pub fn fock_verify_quantity_map(s: LdmStrategy, cfg: FockConfig) -> Result<FockVerification> {
    let dim = cfg.cutoff();
    let a = annihilation(dim);
    let ad = a.adjoint();
    let id = DMatrix::<Complex64>::identity(dim, dim);

    // single-mode displacement unitaries D_i = exp(x_i (ad - a)/sqrt(2))
    let gen1 = (&ad - &a) * Complex64::new(s.x1 / SQRT_2, 0.0);
    let gen2 = (&ad - &a) * Complex64::new(s.x2 / SQRT_2, 0.0);
    let d = gen1.exp().kronecker(&gen2.exp());

    // two-mode squeezing J = exp(-g (a1d a2d - a1 a2)), applied to the
    // state vectors directly; the generator is anti-Hermitian so J dag is
    // the exponential of its negation. Column sums of the generator are
    // bounded by 2 g dim.
    let norm_bound = 2.0 * s.gamma.abs() * dim as f64;
    let fwd = |v: &DVector<Complex64>| squeeze_apply(s.gamma, dim, v);
    let bwd = |v: &DVector<Complex64>| squeeze_apply(-s.gamma, dim, v);

    let mut vacuum = DVector::<Complex64>::zeros(dim * dim);
    vacuum[0] = Complex64::new(1.0, 0.0);
    let psi = expmv(&bwd, norm_bound, &(&d * expmv(&fwd, norm_bound, &vacuum)));

    let mut tail_mass = 0.0;
    for n1 in 0..dim {
        for n2 in 0..dim {
            if n1 >= dim - 2 || n2 >= dim - 2 {
                tail_mass += psi[n1 * dim + n2].norm_sqr();
            }
        }
    }
    if tail_mass >= TAIL_MASS_THRESHOLD {
        return Err(Error::TailMassTooLarge {
            tail_mass,
            threshold: TAIL_MASS_THRESHOLD,
        });
    }

    let a1 = a.kronecker(&id);
    let a2 = id.kronecker(&a);
    let x1_op = (a1.adjoint() + &a1) / Complex64::new(SQRT_2, 0.0);
    let x2_op = (a2.adjoint() + &a2) / Complex64::new(SQRT_2, 0.0);
    let q1 = psi.dotc(&(&x1_op * &psi)).re;
    let q2 = psi.dotc(&(&x2_op * &psi)).re;
    Ok(FockVerification { q1, q2, tail_mass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ldm::quantity_map;

    fn strat(x1: f64, x2: f64, g: f64) -> LdmStrategy {
        LdmStrategy::new(x1, x2, g).unwrap()
    }

    #[test]
    fn cutoff_validation() {
        assert!(FockConfig::new(1).is_err());
        assert!(FockConfig::new(2).is_ok());
    }

    #[test]
    fn vacuum_has_zero_quadratures() {
        let cfg = FockConfig::new(16).unwrap();
        for g in [0.0, 0.3] {
            let v = fock_verify_quantity_map(strat(0.0, 0.0, g), cfg).unwrap();
            assert!(v.q1.abs() < 1e-8 && v.q2.abs() < 1e-8, "g={g}: {v:?}");
        }
    }

    #[test]
    fn pure_displacement_of_vacuum() {
        let cfg = FockConfig::new(16).unwrap();
        let v = fock_verify_quantity_map(strat(1.0, 0.0, 0.0), cfg).unwrap();
        assert!((v.q1 - 1.0).abs() < 1e-8, "{v:?}");
        assert!(v.q2.abs() < 1e-8);
    }

    #[test]
    fn matches_closed_form_with_squeezing() {
        let cfg = FockConfig::new(24).unwrap();
        let s = strat(0.5, 0.3, 0.4);
        let v = fock_verify_quantity_map(s, cfg).unwrap();
        let q = quantity_map(s);
        assert!((v.q1 - q.q1).abs() < 1e-6, "{v:?} vs {q:?}");
        assert!((v.q2 - q.q2).abs() < 1e-6);
        assert!(v.tail_mass < 1e-8);
    }

    #[test]
    fn insufficient_cutoff_is_flagged() {
        let cfg = FockConfig::new(3).unwrap();
        let err = fock_verify_quantity_map(strat(2.0, 2.0, 0.5), cfg).unwrap_err();
        assert!(matches!(err, Error::TailMassTooLarge { .. }), "{err:?}");
    }
}
