//! The Marinatto-Weber style quantum Cournot scheme: quantities map to
//! bit-flip probabilities, the final state is a correlated flip mixture,
//! and payoffs are traces against diagonal measurement operators.
//!
//! Payoffs are always computed through the trace pairing; the closed-form
//! shortcuts appear only in tests as oracles.

use crate::error::{Error, Result};
use crate::market::{BertrandParams, MarketParams, Player, QuantityPair};
use crate::qstate::{DiagonalObservable, TwoQubitState};
use crate::solver::{eps_nash_verify, EpsNashReport, GridSpec, PayoffPair};
use nalgebra::{Matrix4, Vector4};

/// Bit-flip probabilities x = 1/(1+q1), y = 1/(1+q2); both in (0, 1].
pub fn probability_map(q: QuantityPair) -> (f64, f64) {
    (1.0 / (1.0 + q.q1), 1.0 / (1.0 + q.q2))
}

/// The family of payoff operators the scheme admits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorVariant {
    /// The original operator: q_i [(a-c)|00><00| - |01><01| - |10><10|].
    M,
    /// M with a -c|00><00| branch when q1 + q2 > a; reproduces the full
    /// classical payoff including the zero-price region.
    MPrime,
    /// An alternative operator agreeing with M only for rho_in = |00><00|.
    MDoublePrime,
    /// Arbitrary basis-projector weights (x1, x2, x3, x4).
    General([f64; 4]),
}

/// Final state of the scheme: the correlated flip mixture of `rho_in` at
/// the probabilities derived from the quantities.
pub fn final_state(q: QuantityPair, rho_in: &TwoQubitState) -> Result<TwoQubitState> {
    let (x, y) = probability_map(q);
    rho_in.correlated_flip_mixture(x, y)
}

/// The measurement operator for `variant`, including the common
/// (1+q1)(1+q2) normalization factor.
pub fn payoff_operator(
    variant: OperatorVariant,
    player: Player,
    q: QuantityPair,
    params: &MarketParams,
) -> DiagonalObservable {
    let norm = (1.0 + q.q1) * (1.0 + q.q2);
    let qi = q.of(player);
    let m = params.margin();
    match variant {
        OperatorVariant::M => DiagonalObservable::new(m, -1.0, -1.0, 0.0).scale(norm * qi),
        OperatorVariant::MPrime => {
            if q.total() <= params.a() {
                payoff_operator(OperatorVariant::M, player, q, params)
            } else {
                DiagonalObservable::new(-params.c(), 0.0, 0.0, 0.0).scale(norm * qi)
            }
        }
        OperatorVariant::MDoublePrime => match player {
            Player::One => DiagonalObservable::new(m * q.q1, 0.0, -q.q1, -1.0).scale(norm),
            Player::Two => DiagonalObservable::new(m * q.q2, -q.q2, 0.0, -1.0).scale(norm),
        },
        OperatorVariant::General(x) => DiagonalObservable::new(x[0], x[1], x[2], x[3]).scale(norm),
    }
}

/// Payoff tr(rho_fin M_i) for the chosen operator and initial state.
pub fn mw_payoff(
    player: Player,
    q: QuantityPair,
    rho_in: &TwoQubitState,
    variant: OperatorVariant,
    params: &MarketParams,
) -> Result<f64> {
    let rho_fin = final_state(q, rho_in)?;
    Ok(rho_fin.expectation(&payoff_operator(variant, player, q, params)))
}

/// Payoff under the price-aware operator M'.
pub fn refined_payoff(
    player: Player,
    q: QuantityPair,
    rho_in: &TwoQubitState,
    params: &MarketParams,
) -> Result<f64> {
    mw_payoff(player, q, rho_in, OperatorVariant::MPrime, params)
}

/// The demand-intercept threshold above which (a/2, a/2) is an
/// equilibrium of the refined |11> game: (c + sqrt(c^2 + 16)) / 2.
pub fn half_a_threshold(c: f64) -> f64 {
    (c + (c * c + 16.0).sqrt()) / 2.0
}

/// Outcome of checking the (a/2, a/2) profile of the refined |11> game.
#[derive(Debug, Clone)]
pub struct HalfAReport {
    /// Whether a >= (c + sqrt(c^2 + 16)) / 2 holds.
    pub condition_satisfied: bool,
    pub report: EpsNashReport,
}

/// Check that (a/2, a/2) is eps-Nash for the refined |11> payoffs on the
/// given grid. When the threshold condition fails the profile may well not
/// be an equilibrium; the report carries the gains either way.
pub fn half_a_equilibrium_check(
    params: &MarketParams,
    grid: GridSpec,
    eps: f64,
) -> Result<HalfAReport> {
    if params.c() <= 0.0 {
        return Err(Error::InvalidParameter("half-a check requires c > 0".into()));
    }
    let rho_in = TwoQubitState::basis_state(1, 1)?;
    let p = *params;
    let u1 = move |q1: f64, q2: f64| {
        refined_payoff(Player::One, QuantityPair::new(q1, q2).unwrap(), &rho_in, &p).unwrap()
    };
    let rho_in2 = TwoQubitState::basis_state(1, 1)?;
    let u2 = move |q1: f64, q2: f64| {
        refined_payoff(Player::Two, QuantityPair::new(q1, q2).unwrap(), &rho_in2, &p).unwrap()
    };
    let pair = PayoffPair::new(&u1, &u2);
    let half = params.a() / 2.0;
    let report = eps_nash_verify(&pair, (half, half), grid, eps);
    Ok(HalfAReport {
        condition_satisfied: params.a() >= half_a_threshold(params.c()),
        report,
    })
}

/// Result of solving the four-initial-state consistency system for a
/// general payoff operator.
#[derive(Debug, Clone, PartialEq)]
pub enum TrivialOperatorSolution {
    /// The generic case: a unique coefficient vector, necessarily all-equal.
    Unique([f64; 4]),
    /// Rank-deficient coefficient matrix (e.g. q1 = 1 or q2 = 1).
    Degenerate { rank: usize, manifold_dim: usize },
}

/// Solve the linear system that forces a general operator to reproduce the
/// classical payoff for all four basis initial states.
///
/// The coefficient matrix is the tensor product of [[1, q], [q, 1]] blocks,
/// so it is singular exactly when q1 = 1 or q2 = 1.
pub fn trivial_operator_solve(
    q: QuantityPair,
    player: Player,
    params: &MarketParams,
) -> TrivialOperatorSolution {
    let (q1, q2) = (q.q1, q.q2);
    // rows: initial states |00>, |11>, |01>, |10>; columns x1..x4
    let m = Matrix4::new(
        1.0,
        q2,
        q1,
        q1 * q2,
        q1 * q2,
        q1,
        q2,
        1.0,
        q2,
        1.0,
        q1 * q2,
        q1,
        q1,
        q1 * q2,
        1.0,
        q2,
    );
    let rhs_value = q.of(player) * (params.margin() - q1 - q2);
    let svd = m.svd(true, true);
    let smax = svd.singular_values.max();
    let rank = svd.rank(1e-10 * smax.max(1.0));
    if rank < 4 {
        return TrivialOperatorSolution::Degenerate {
            rank,
            manifold_dim: 4 - rank,
        };
    }
    let rhs = Vector4::from_element(rhs_value);
    let x = svd.solve(&rhs, 0.0).expect("full-rank solve");
    TrivialOperatorSolution::Unique([x[0], x[1], x[2], x[3]])
}

/// Find a quantity pair whose |11>-state payoff under M exceeds `target`.
///
/// Doubles both quantities from (1, 1); the payoff grows cubically so the
/// search terminates quickly for any positive target.
pub fn unboundedness_witness(params: &MarketParams, target: f64) -> Result<QuantityPair> {
    if !(target > 0.0) {
        return Err(Error::InvalidParameter(format!("target > 0 violated (target = {target})")));
    }
    let rho_in = TwoQubitState::basis_state(1, 1)?;
    let mut q = 1.0f64;
    for _ in 0..1000 {
        let pair = QuantityPair::new(q, q)?;
        let u = mw_payoff(Player::One, pair, &rho_in, OperatorVariant::M, params)?;
        if u > target {
            return Ok(pair);
        }
        q *= 2.0;
    }
    Err(Error::InvalidParameter(format!(
        "no witness below q = {q} for target {target}"
    )))
}

/// The quantum Bertrand payoffs of the scheme for the entangled initial
/// state cos(g)|00> + sin(g)|11>.
pub fn bertrand_quantum_payoffs(
    p1: f64,
    p2: f64,
    gamma: f64,
    params: &BertrandParams,
) -> (f64, f64) {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let cos2 = gamma.cos().powi(2);
    let sin2 = gamma.sin().powi(2);
    let u1 = (a - p1 + b * p2)
        * ((p1 - c) * cos2 + (p2 + p1 * (-1.0 - c * p2 + p2 * p2)) * sin2);
    let u2 = (a - p2 + b * p1)
        * ((p2 - c) * cos2 + (p1 + p2 * (-1.0 - c * p1 + p1 * p1)) * sin2);
    (u1, u2)
}

/// Evidence that the scheme's payoff set escapes the classical convex hull.
#[derive(Debug, Clone)]
pub struct HullViolationReport {
    pub witness: QuantityPair,
    pub witness_payoffs: (f64, f64),
    /// The classical joint maximum (a-c)^2 / 4.
    pub classical_joint_max: f64,
    pub violated: bool,
}

/// Exhibit a |11>-state payoff profile whose sum exceeds the classical
/// joint maximum (a-c)^2 / 4.
pub fn convex_hull_violation_check(params: &MarketParams) -> Result<HullViolationReport> {
    if params.c() <= 0.0 {
        return Err(Error::InvalidParameter("hull check requires c > 0".into()));
    }
    let bound = params.margin() * params.margin() / 4.0;
    let witness = unboundedness_witness(params, bound)?;
    let rho_in = TwoQubitState::basis_state(1, 1)?;
    let u1 = mw_payoff(Player::One, witness, &rho_in, OperatorVariant::M, params)?;
    let u2 = mw_payoff(Player::Two, witness, &rho_in, OperatorVariant::M, params)?;
    Ok(HullViolationReport {
        witness,
        witness_payoffs: (u1, u2),
        classical_joint_max: bound,
        violated: u1 + u2 > bound,
    })
}
