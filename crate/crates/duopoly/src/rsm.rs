//! The qubit-entanglement duopoly scheme: the initial state is entangled by
//! I(g) = 1 cos(g) + i (sx (x) sx) sin(g), each player's value weights a
//! diagonal positive operator, and the quantities are expectations of those
//! operators against the reduced single-qubit states.
//!
//! The quantity map is evaluated through the matrix path (entangled state,
//! partial trace, expectation); the closed form serves as a test oracle.

use crate::error::{Error, Result};
use crate::market::{MarketParams, Player, QuantityPair};
use crate::qstate::{QubitObservable, TwoQubitState};
use crate::solver::EquilibriumResult;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

/// A strategy pair (x1, x2) with entanglement angle gamma in [0, pi/4].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RsmStrategy {
    pub x1: f64,
    pub x2: f64,
    pub gamma: f64,
}

impl RsmStrategy {
    pub fn new(x1: f64, x2: f64, gamma: f64) -> Result<Self> {
        if !(x1 >= 0.0 && x2 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "strategies must be nonnegative (x1 = {x1}, x2 = {x2})"
            )));
        }
        check_gamma(gamma)?;
        Ok(Self { x1, x2, gamma })
    }
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_4 + 1e-15).contains(&gamma) {
        return Err(Error::InvalidParameter(format!(
            "gamma in [0, pi/4] violated (gamma = {gamma})"
        )));
    }
    Ok(())
}

/// The entangled initial state cos(g)|00> + i sin(g)|11>.
pub fn entangled_state(gamma: f64) -> Result<TwoQubitState> {
    check_gamma(gamma)?;
    TwoQubitState::pure_state([
        Complex64::new(gamma.cos(), 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, gamma.sin()),
    ])
}

/// The strategy-valued measurement operators
/// M1 = x1|0><0| + x2|1><1| and M2 = x2|0><0| + x1|1><1|.
pub fn strategy_observables(x1: f64, x2: f64) -> (QubitObservable, QubitObservable) {
    (
        QubitObservable { w0: x1, w1: x2 },
        QubitObservable { w0: x2, w1: x1 },
    )
}

/// q_i = tr(M_i rho_i) over the reduced states of the entangled pair:
/// q1 = x1 cos^2(g) + x2 sin^2(g) and symmetrically for q2.
pub fn quantity_map(s: RsmStrategy) -> Result<QuantityPair> {
    let state = entangled_state(s.gamma)?;
    let (m1, m2) = strategy_observables(s.x1, s.x2);
    let q1 = state.partial_trace(Player::One).expectation(&m1);
    let q2 = state.partial_trace(Player::Two).expectation(&m2);
    QuantityPair::new(q1.max(0.0), q2.max(0.0))
}

/// Scheme payoff: q_i (a - c - x1 - x2) while x1 + x2 <= a, else -c q_i.
pub fn rsm_payoff(player: Player, s: RsmStrategy, params: &MarketParams) -> Result<f64> {
    let q = quantity_map(s)?;
    let qi = q.of(player);
    if s.x1 + s.x2 <= params.a() {
        Ok(qi * (params.margin() - s.x1 - s.x2))
    } else {
        Ok(-params.c() * qi)
    }
}

/// Analytic best reply [(a-c) cos^2(g) - x] / (2 cos^2(g)) while the
/// opponent stays below (a-c) cos^2(g), else 0.
pub fn best_reply(opponent: f64, gamma: f64, params: &MarketParams) -> Result<f64> {
    check_gamma(gamma)?;
    let cos2 = gamma.cos().powi(2);
    if opponent <= params.margin() * cos2 {
        Ok((params.margin() * cos2 - opponent) / (2.0 * cos2))
    } else {
        Ok(0.0)
    }
}

fn is_maximal(gamma: f64) -> bool {
    (gamma - FRAC_PI_4).abs() < 1e-12
}

/// Nash equilibria: the symmetric point (a-c)cos^2(g)/(2cos^2(g)+1) away
/// from maximal entanglement, and the whole segment x1 + x2 = (a-c)/2 at
/// gamma = pi/4.
pub fn equilibrium_set(gamma: f64, params: &MarketParams) -> Result<EquilibriumResult> {
    check_gamma(gamma)?;
    if params.c() <= 0.0 {
        return Err(Error::InvalidParameter("equilibrium set requires c > 0".into()));
    }
    if is_maximal(gamma) {
        let half = params.margin() / 2.0;
        let mut r = EquilibriumResult::segment((0.0, half), (half, 0.0));
        for profile in r.sample_segment(5) {
            let s = RsmStrategy::new(profile.0, profile.1, gamma)?;
            let u1 = rsm_payoff(Player::One, s, params)?;
            let u2 = rsm_payoff(Player::Two, s, params)?;
            r.payoffs.push((profile, (u1, u2)));
        }
        Ok(r)
    } else {
        let cos2 = gamma.cos().powi(2);
        let x = params.margin() * cos2 / (2.0 * cos2 + 1.0);
        let s = RsmStrategy::new(x, x, gamma)?;
        let u1 = rsm_payoff(Player::One, s, params)?;
        let u2 = rsm_payoff(Player::Two, s, params)?;
        Ok(EquilibriumResult::point((x, x), (u1, u2)))
    }
}

/// Equilibrium payoff obtained by substituting the symmetric equilibrium
/// profile into the payoff function. At gamma = pi/4 the symmetric point
/// of the segment is used; the value interpolates (a-c)^2/9 at gamma = 0
/// to the Pareto-optimal (a-c)^2/8 at gamma = pi/4.
pub fn equilibrium_payoff(gamma: f64, params: &MarketParams) -> Result<f64> {
    check_gamma(gamma)?;
    let cos2 = gamma.cos().powi(2);
    let x = params.margin() * cos2 / (2.0 * cos2 + 1.0);
    let s = RsmStrategy::new(x, x, gamma)?;
    rsm_payoff(Player::One, s, params)
}
