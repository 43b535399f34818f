//! The two-mode-squeezing duopoly scheme: strategies are real displacements
//! whose entangled combination sets the quantities, the payoff is the
//! classical one applied to those quantities, and the refined variant adds
//! the zero-price branch so the classical game is recovered at gamma = 0.

use crate::error::{Error, Result};
use crate::market::{MarketParams, Player, QuantityPair};
use crate::solver::EquilibriumResult;

/// A strategy pair (x1, x2) with squeezing parameter gamma >= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LdmStrategy {
    pub x1: f64,
    pub x2: f64,
    pub gamma: f64,
}

impl LdmStrategy {
    pub fn new(x1: f64, x2: f64, gamma: f64) -> Result<Self> {
        if !(x1 >= 0.0 && x2 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "strategies must be nonnegative (x1 = {x1}, x2 = {x2})"
            )));
        }
        if !(gamma >= 0.0) {
            return Err(Error::InvalidParameter(format!("gamma >= 0 violated (gamma = {gamma})")));
        }
        Ok(Self { x1, x2, gamma })
    }

    pub fn of(self, player: Player) -> f64 {
        match player {
            Player::One => self.x1,
            Player::Two => self.x2,
        }
    }
}

/// q1 = x1 cosh(g) + x2 sinh(g), q2 = x2 cosh(g) + x1 sinh(g).
///
/// The sum satisfies q1 + q2 = e^g (x1 + x2).
pub fn quantity_map(s: LdmStrategy) -> QuantityPair {
    let (ch, sh) = (s.gamma.cosh(), s.gamma.sinh());
    QuantityPair {
        q1: s.x1 * ch + s.x2 * sh,
        q2: s.x2 * ch + s.x1 * sh,
    }
}

/// Payoff of the scheme. `refined = false` evaluates the original formula
/// everywhere; `refined = true` switches to -c q_i once the total quantity
/// e^g (x1 + x2) exceeds a (ties stay on the positive-price branch).
pub fn ldm_payoff(player: Player, s: LdmStrategy, params: &MarketParams, refined: bool) -> f64 {
    let q = quantity_map(s);
    let qi = q.of(player);
    let total = s.gamma.exp() * (s.x1 + s.x2);
    if !refined || total <= params.a() {
        qi * (params.margin() - total)
    } else {
        -params.c() * qi
    }
}

/// Analytic best reply: [(a-c) cosh(g) - e^{2g} x] / (e^{2g} + 1) while the
/// opponent stays below (a-c) e^{-2g} cosh(g), else 0.
pub fn best_reply(opponent: f64, gamma: f64, params: &MarketParams) -> f64 {
    let e2 = (2.0 * gamma).exp();
    if opponent <= params.margin() * gamma.cosh() / e2 {
        (params.margin() * gamma.cosh() - e2 * opponent) / (e2 + 1.0)
    } else {
        0.0
    }
}

/// The symmetric equilibrium x* = (a-c) cosh(g) / (1 + 2 e^{2g}) for c > 0;
/// for c = 0 the region {x1, x2 >= a e^{-g}} of zero-payoff profiles.
pub fn equilibrium(gamma: f64, params: &MarketParams) -> EquilibriumResult {
    if params.c() > 0.0 {
        let x = params.margin() * gamma.cosh() / (1.0 + 2.0 * (2.0 * gamma).exp());
        let s = LdmStrategy::new(x, x, gamma).expect("equilibrium strategy is nonnegative");
        let u1 = ldm_payoff(Player::One, s, params, true);
        let u2 = ldm_payoff(Player::Two, s, params, true);
        EquilibriumResult::point((x, x), (u1, u2))
    } else {
        let bound = params.a() * (-gamma).exp();
        EquilibriumResult::region(bound, bound)
    }
}

/// The symmetric Pareto-optimal profile ((a-c) e^{-g}/4, same) and its
/// per-player payoff (a-c)^2 / 8, independent of gamma.
pub fn pareto_symmetric_optimum(gamma: f64, params: &MarketParams) -> ((f64, f64), f64) {
    let x = params.margin() * (-gamma).exp() / 4.0;
    let m = params.margin();
    ((x, x), m * m / 8.0)
}
