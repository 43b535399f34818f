//! Minimal two-qubit density-operator engine: basis states, the correlated
//! bit-flip mixture, diagonal observables, expectations and partial traces.
//!
//! States are stored as dense 4x4 complex matrices even though most of them
//! are diagonal; the entangled initial states carry off-diagonal terms and
//! the full matrix keeps every invariant checkable in one place.

use crate::error::{Error, Result};
use crate::market::Player;
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

/// Hermiticity and unit-trace tolerance for density operators.
pub const STATE_TOL: f64 = 1e-12;
/// Eigenvalue floor for the positive-semidefiniteness check; absorbs
/// floating-point noise from the mixture map.
pub const PSD_FLOOR: f64 = -1e-10;

/// A 4x4 Hermitian, PSD, unit-trace density operator on two qubits,
/// indexed by the computational basis |j1 j2> with j2 varying fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    m: Matrix4<Complex64>,
}

/// A 2x2 density operator for a single qubit (a partial-trace marginal).
#[derive(Debug, Clone, PartialEq)]
pub struct SingleQubitState {
    m: Matrix2<Complex64>,
}

/// A real-weighted sum of basis projectors w00|00><00| + ... + w11|11><11|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalObservable {
    /// Weights on |00>, |01>, |10>, |11| in that order.
    pub weights: [f64; 4],
}

/// A single-qubit diagonal observable w0|0><0| + w1|1><1|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitObservable {
    pub w0: f64,
    pub w1: f64,
}

fn basis_index(j1: u8, j2: u8) -> usize {
    (j1 as usize) * 2 + j2 as usize
}

impl TwoQubitState {
    /// Validate a raw matrix against the density-operator invariants.
    pub fn from_matrix(m: Matrix4<Complex64>) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                let d = m[(i, j)] - m[(j, i)].conj();
                if d.norm() > STATE_TOL {
                    return Err(Error::InvalidState(format!(
                        "not Hermitian at ({i},{j}): asymmetry {:.3e}",
                        d.norm()
                    )));
                }
            }
        }
        let tr: Complex64 = (0..4).map(|i| m[(i, i)]).sum();
        if (tr - Complex64::new(1.0, 0.0)).norm() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace {} != 1", tr)));
        }
        let eig = m.symmetric_eigen();
        for k in 0..4 {
            if eig.eigenvalues[k] < PSD_FLOOR {
                return Err(Error::InvalidState(format!(
                    "negative eigenvalue {:.3e}",
                    eig.eigenvalues[k]
                )));
            }
        }
        Ok(Self { m })
    }

    /// Rank-1 projector onto the basis state |j1 j2>.
    pub fn basis_state(j1: u8, j2: u8) -> Result<Self> {
        if j1 > 1 || j2 > 1 {
            return Err(Error::InvalidState(format!("bits must be 0 or 1, got ({j1},{j2})")));
        }
        let mut m = Matrix4::zeros();
        let k = basis_index(j1, j2);
        m[(k, k)] = Complex64::new(1.0, 0.0);
        Ok(Self { m })
    }

    /// Outer product |psi><psi| of a unit-norm amplitude vector.
    pub fn pure_state(amplitudes: [Complex64; 4]) -> Result<Self> {
        let v = Vector4::from_row_slice(&amplitudes);
        let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "amplitude vector norm^2 = {norm2}, expected 1"
            )));
        }
        let m = Matrix4::from_fn(|i, j| v[i] * v[j].conj());
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.m
    }

    /// Diagonal entry rho[j1 j2, j1 j2] as a real probability.
    pub fn diagonal(&self) -> [f64; 4] {
        [
            self.m[(0, 0)].re,
            self.m[(1, 1)].re,
            self.m[(2, 2)].re,
            self.m[(3, 3)].re,
        ]
    }

    /// The four-term correlated bit-flip mixture
    /// xy rho + x(1-y) (1 (x) sx) rho (1 (x) sx)
    ///       + (1-x)y (sx (x) 1) rho (sx (x) 1)
    ///       + (1-x)(1-y) (sx (x) sx) rho (sx (x) sx).
    ///
    /// Each conjugation permutes basis indices, so the map reduces to a
    /// weighted sum of index-permuted copies of rho.
    pub fn correlated_flip_mixture(&self, x: f64, y: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&x) || !(0.0..=1.0).contains(&y) {
            return Err(Error::InvalidParameter(format!(
                "probabilities must be in [0,1], got x = {x}, y = {y}"
            )));
        }
        // flips: (f1, f2) acting by index XOR on each qubit
        let terms = [
            (x * y, 0usize, 0usize),
            (x * (1.0 - y), 0, 1),
            ((1.0 - x) * y, 1, 0),
            ((1.0 - x) * (1.0 - y), 1, 1),
        ];
        let mut out = Matrix4::zeros();
        for (w, f1, f2) in terms {
            if w == 0.0 {
                continue;
            }
            let flip = f1 * 2 + f2;
            for i in 0..4 {
                for j in 0..4 {
                    out[(i ^ flip, j ^ flip)] += Complex64::new(w, 0.0) * self.m[(i, j)];
                }
            }
        }
        Self::from_matrix(out)
    }

    /// Expectation tr(rho M) of a diagonal observable; real by construction.
    pub fn expectation(&self, obs: &DiagonalObservable) -> f64 {
        self.diagonal()
            .iter()
            .zip(obs.weights.iter())
            .map(|(p, w)| p * w)
            .sum()
    }

    /// Partial trace over the discarded qubit, keeping `keep`.
    pub fn partial_trace(&self, keep: Player) -> SingleQubitState {
        let mut m = Matrix2::zeros();
        match keep {
            Player::One => {
                // sum over the second qubit
                for i in 0..2 {
                    for j in 0..2 {
                        for k in 0..2 {
                            m[(i, j)] += self.m[(i * 2 + k, j * 2 + k)];
                        }
                    }
                }
            }
            Player::Two => {
                for i in 0..2 {
                    for j in 0..2 {
                        for k in 0..2 {
                            m[(i, j)] += self.m[(k * 2 + i, k * 2 + j)];
                        }
                    }
                }
            }
        }
        SingleQubitState { m }
    }
}

impl SingleQubitState {
    pub fn from_matrix(m: Matrix2<Complex64>) -> Result<Self> {
        if (m[(0, 1)] - m[(1, 0)].conj()).norm() > STATE_TOL
            || m[(0, 0)].im.abs() > STATE_TOL
            || m[(1, 1)].im.abs() > STATE_TOL
        {
            return Err(Error::InvalidState("not Hermitian".into()));
        }
        let tr = m[(0, 0)].re + m[(1, 1)].re;
        if (tr - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} != 1")));
        }
        let eig = m.symmetric_eigen();
        if eig.eigenvalues.iter().any(|&l| l < PSD_FLOOR) {
            return Err(Error::InvalidState("negative eigenvalue".into()));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.m
    }

    pub fn diagonal(&self) -> [f64; 2] {
        [self.m[(0, 0)].re, self.m[(1, 1)].re]
    }

    /// Expectation tr(rho M) of a single-qubit diagonal observable.
    pub fn expectation(&self, obs: &QubitObservable) -> f64 {
        let d = self.diagonal();
        d[0] * obs.w0 + d[1] * obs.w1
    }
}

impl DiagonalObservable {
    pub fn new(w00: f64, w01: f64, w10: f64, w11: f64) -> Self {
        Self {
            weights: [w00, w01, w10, w11],
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            weights: [
                self.weights[0] * s,
                self.weights[1] * s,
                self.weights[2] * s,
                self.weights[3] * s,
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_states() {
        assert_eq!(
            TwoQubitState::basis_state(0, 0).unwrap().diagonal(),
            [1.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(
            TwoQubitState::basis_state(0, 1).unwrap().diagonal(),
            [0.0, 1.0, 0.0, 0.0]
        );
        assert_eq!(
            TwoQubitState::basis_state(1, 1).unwrap().diagonal(),
            [0.0, 0.0, 0.0, 1.0]
        );
        assert!(TwoQubitState::basis_state(2, 0).is_err());
    }

    #[test]
    fn pure_state_outer_product() {
        let s = TwoQubitState::pure_state([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert_eq!(s, TwoQubitState::basis_state(0, 0).unwrap());

        let g = FRAC_PI_4;
        let s = TwoQubitState::pure_state([
            c(g.cos(), 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, g.sin()),
        ])
        .unwrap();
        let d = s.diagonal();
        assert!((d[0] - 0.5).abs() < 1e-15 && (d[3] - 0.5).abs() < 1e-15);
        assert!((s.matrix()[(0, 3)].norm() - 0.5).abs() < 1e-15);

        // non-normalized input is rejected
        assert!(
            TwoQubitState::pure_state([c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
                .is_err()
        );
    }

    #[test]
    fn flip_mixture_cases() {
        let rho = TwoQubitState::basis_state(0, 0).unwrap();
        assert_eq!(rho.correlated_flip_mixture(1.0, 1.0).unwrap(), rho);
        assert_eq!(
            rho.correlated_flip_mixture(0.0, 0.0).unwrap(),
            TwoQubitState::basis_state(1, 1).unwrap()
        );
        let mixed = rho.correlated_flip_mixture(0.5, 0.5).unwrap();
        for p in mixed.diagonal() {
            assert!((p - 0.25).abs() < 1e-15);
        }
        assert!(rho.correlated_flip_mixture(-0.1, 0.5).is_err());
        assert!(rho.correlated_flip_mixture(0.5, 1.1).is_err());
    }

    #[test]
    fn expectation_values() {
        let uniform = TwoQubitState::basis_state(0, 0)
            .unwrap()
            .correlated_flip_mixture(0.5, 0.5)
            .unwrap();
        assert!((uniform.expectation(&DiagonalObservable::new(1.0, 1.0, 1.0, 1.0)) - 1.0).abs() < 1e-15);

        let s = TwoQubitState::basis_state(0, 1).unwrap();
        assert_eq!(s.expectation(&DiagonalObservable::new(5.0, 7.0, 11.0, 13.0)), 7.0);

        let m = Matrix4::from_diagonal(&Vector4::new(c(0.1, 0.0), c(0.2, 0.0), c(0.3, 0.0), c(0.4, 0.0)));
        let s = TwoQubitState::from_matrix(m).unwrap();
        assert!((s.expectation(&DiagonalObservable::new(1.0, 2.0, 3.0, 4.0)) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn partial_traces() {
        let s = TwoQubitState::basis_state(0, 1).unwrap();
        assert_eq!(s.partial_trace(Player::One).diagonal(), [1.0, 0.0]);
        assert_eq!(s.partial_trace(Player::Two).diagonal(), [0.0, 1.0]);

        let g = 0.7f64;
        let s = TwoQubitState::pure_state([
            c(g.cos(), 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, g.sin()),
        ])
        .unwrap();
        let r = s.partial_trace(Player::One);
        assert!((r.diagonal()[0] - g.cos() * g.cos()).abs() < 1e-15);
        assert!((r.diagonal()[1] - g.sin() * g.sin()).abs() < 1e-15);

        let uniform = TwoQubitState::basis_state(0, 0)
            .unwrap()
            .correlated_flip_mixture(0.5, 0.5)
            .unwrap();
        let r = uniform.partial_trace(Player::Two);
        assert!((r.diagonal()[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_of_product_recovers_marginals() {
        // rho = diag(p) (x) diag(q)
        let (p, q) = ([0.3, 0.7], [0.9, 0.1]);
        let mut m = Matrix4::zeros();
        for i in 0..2 {
            for j in 0..2 {
                m[(i * 2 + j, i * 2 + j)] = c(p[i] * q[j], 0.0);
            }
        }
        let s = TwoQubitState::from_matrix(m).unwrap();
        let r1 = s.partial_trace(Player::One).diagonal();
        let r2 = s.partial_trace(Player::Two).diagonal();
        assert!((r1[0] - p[0]).abs() < 1e-15 && (r1[1] - p[1]).abs() < 1e-15);
        assert!((r2[0] - q[0]).abs() < 1e-15 && (r2[1] - q[1]).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn mixture_preserves_state_invariants(
            w in prop::array::uniform4(0.0f64..1.0),
            x in 0.0f64..=1.0,
            y in 0.0f64..=1.0,
        ) {
            let total: f64 = w.iter().sum::<f64>().max(1e-9);
            let m = Matrix4::from_diagonal(&Vector4::new(
                c(w[0] / total, 0.0), c(w[1] / total, 0.0),
                c(w[2] / total, 0.0), c(w[3] / total, 0.0)));
            let rho = TwoQubitState::from_matrix(m).unwrap();
            // from_matrix re-validates Hermiticity, trace and PSD
            let out = rho.correlated_flip_mixture(x, y).unwrap();
            // a diagonal input stays diagonal: the map permutes projectors
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        prop_assert!(out.matrix()[(i, j)].norm() < 1e-15);
                    }
                }
            }
        }

        #[test]
        fn expectation_is_linear(
            w in prop::array::uniform4(-5.0f64..5.0),
            v in prop::array::uniform4(-5.0f64..5.0),
            t in -3.0f64..3.0,
        ) {
            let rho = TwoQubitState::basis_state(0, 0).unwrap()
                .correlated_flip_mixture(0.3, 0.8).unwrap();
            let a = DiagonalObservable::new(w[0], w[1], w[2], w[3]);
            let b = DiagonalObservable::new(v[0], v[1], v[2], v[3]);
            let sum = DiagonalObservable::new(
                w[0] + t * v[0], w[1] + t * v[1], w[2] + t * v[2], w[3] + t * v[3]);
            let lhs = rho.expectation(&sum);
            let rhs = rho.expectation(&a) + t * rho.expectation(&b);
            prop_assert!((lhs - rhs).abs() < 1e-10);
        }
    }
}
