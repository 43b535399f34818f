//! Classical Cournot and Bertrand duopolies: prices, payoffs and their
//! closed-form equilibria. Every quantum scheme in this crate must reduce
//! to these payoffs at zero entanglement.

use crate::error::{Error, Result};
use crate::solver::EquilibriumResult;

/// Which of the two firms a payoff refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn index(self) -> usize {
        match self {
            Player::One => 1,
            Player::Two => 2,
        }
    }
}

/// Linear-demand market: price intercept `a`, marginal cost `c`.
///
/// Requires `a > c >= 0`. `c = 0` is admitted only to exercise the
/// degenerate continuum of equilibria.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarketParams {
    a: f64,
    c: f64,
}

impl MarketParams {
    pub fn new(a: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && c.is_finite()) {
            return Err(Error::InvalidParameter("a and c must be finite".into()));
        }
        if c < 0.0 {
            return Err(Error::InvalidParameter(format!("c >= 0 violated (c = {c})")));
        }
        if a <= c {
            return Err(Error::InvalidParameter(format!("a > c violated (a = {a}, c = {c})")));
        }
        Ok(Self { a, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `a - c`, the demand margin every equilibrium formula is built from.
    pub fn margin(&self) -> f64 {
        self.a - self.c
    }
}

/// Differentiated Bertrand market with substitution coefficient `b` in (0,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BertrandParams {
    a: f64,
    b: f64,
    c: f64,
}

impl BertrandParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidParameter("a, b, c must be finite".into()));
        }
        if !(b > 0.0 && b < 1.0) {
            return Err(Error::InvalidParameter(format!("0 < b < 1 violated (b = {b})")));
        }
        if c < 0.0 {
            return Err(Error::InvalidParameter(format!("c >= 0 violated (c = {c})")));
        }
        if a <= 0.0 {
            return Err(Error::InvalidParameter(format!("a > 0 violated (a = {a})")));
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }
}

/// A pair of nonnegative quantities offered by the two firms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantityPair {
    pub q1: f64,
    pub q2: f64,
}

impl QuantityPair {
    pub fn new(q1: f64, q2: f64) -> Result<Self> {
        if !(q1 >= 0.0 && q2 >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "quantities must be nonnegative (q1 = {q1}, q2 = {q2})"
            )));
        }
        Ok(Self { q1, q2 })
    }

    pub fn of(self, player: Player) -> f64 {
        match player {
            Player::One => self.q1,
            Player::Two => self.q2,
        }
    }

    pub fn total(self) -> f64 {
        self.q1 + self.q2
    }
}

/// Market price `max(a - q1 - q2, 0)`.
pub fn price(q: QuantityPair, params: &MarketParams) -> f64 {
    if q.total() <= params.a {
        params.a - q.total()
    } else {
        0.0
    }
}

/// Cournot payoff `q_i * P(q1, q2) - c * q_i`.
pub fn cournot_payoff(player: Player, q: QuantityPair, params: &MarketParams) -> f64 {
    let qi = q.of(player);
    qi * price(q, params) - params.c * qi
}

/// The Cournot equilibrium: the unique point ((a-c)/3, (a-c)/3) for c > 0,
/// or the unbounded region {q1, q2 >= a} of zero-payoff profiles for c = 0.
pub fn classical_equilibrium(params: &MarketParams) -> EquilibriumResult {
    if params.c > 0.0 {
        let q = params.margin() / 3.0;
        let u = params.margin() * params.margin() / 9.0;
        EquilibriumResult::point((q, q), (u, u))
    } else {
        EquilibriumResult::region(params.a, params.a)
    }
}

/// Monopoly quantity (a-c)/2 and the payoff ceiling (a-c)^2 / 4.
pub fn monopoly_bound(params: &MarketParams) -> (f64, f64) {
    let m = params.margin();
    (m / 2.0, m * m / 4.0)
}

/// Bertrand payoffs `u_i = (a - p_i + b p_j)(p_i - c)`.
pub fn bertrand_payoffs(p1: f64, p2: f64, params: &BertrandParams) -> (f64, f64) {
    let u1 = (params.a - p1 + params.b * p2) * (p1 - params.c);
    let u2 = (params.a - p2 + params.b * p1) * (p2 - params.c);
    (u1, u2)
}

/// Supremum of the joint Bertrand payoff, `[a - c(1-b)]^2 / (2(1-b))`.
pub fn bertrand_joint_supremum(params: &BertrandParams) -> f64 {
    let t = params.a - params.c * (1.0 - params.b);
    t * t / (2.0 * (1.0 - params.b))
}

/// Default search box edge for Bertrand price oracles; both payoffs are
/// decreasing beyond it.
pub fn bertrand_price_box(params: &BertrandParams) -> f64 {
    4.0 * params.a / (1.0 - params.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::EquilibriumKind;

    fn params(a: f64, c: f64) -> MarketParams {
        MarketParams::new(a, c).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(MarketParams::new(3.0, 5.0).is_err());
        assert!(MarketParams::new(3.0, 3.0).is_err());
        assert!(MarketParams::new(3.0, -1.0).is_err());
        assert!(MarketParams::new(1.0, 0.0).is_ok());
        assert!(BertrandParams::new(1.0, 0.0, 0.0).is_err());
        assert!(BertrandParams::new(1.0, 1.0, 0.0).is_err());
        assert!(QuantityPair::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn price_branches() {
        let p = params(30.0, 3.0);
        assert_eq!(price(QuantityPair::new(5.0, 5.0).unwrap(), &p), 20.0);
        assert_eq!(price(QuantityPair::new(10.0, 25.0).unwrap(), &p), 0.0);
        // boundary q1 + q2 = a: both branches agree
        assert_eq!(price(QuantityPair::new(30.0, 0.0).unwrap(), &p), 0.0);
    }

    #[test]
    fn cournot_payoff_values() {
        let p = params(30.0, 3.0);
        let eq = QuantityPair::new(9.0, 9.0).unwrap();
        assert_eq!(cournot_payoff(Player::One, eq, &p), 81.0);
        assert_eq!(
            cournot_payoff(Player::One, QuantityPair::new(0.0, 17.0).unwrap(), &p),
            0.0
        );
        // zero-price branch: payoff is -c q1
        let q = QuantityPair::new(20.0, 20.0).unwrap();
        assert_eq!(cournot_payoff(Player::One, q, &p), -3.0 * 20.0);
    }

    #[test]
    fn equilibrium_point_and_region() {
        let r = classical_equilibrium(&params(30.0, 3.0));
        match r.kind {
            EquilibriumKind::Point { profile } => assert_eq!(profile, (9.0, 9.0)),
            _ => panic!("expected point"),
        }
        assert_eq!(r.payoffs[0].1, (81.0, 81.0));

        let r = classical_equilibrium(&params(4.0, 1.0));
        match r.kind {
            EquilibriumKind::Point { profile } => assert_eq!(profile, (1.0, 1.0)),
            _ => panic!("expected point"),
        }
        assert_eq!(r.payoffs[0].1, (1.0, 1.0));

        let r = classical_equilibrium(&params(1.0, 0.0));
        match r.kind {
            EquilibriumKind::Region { min1, min2 } => {
                assert_eq!((min1, min2), (1.0, 1.0));
            }
            _ => panic!("expected region"),
        }
        assert!(!r.unique);
    }

    #[test]
    fn monopoly_bound_matches_grid_argmax() {
        for (a, c) in [(30.0, 3.0), (3.0, 1.0), (5.0, 3.0)] {
            let p = params(a, c);
            let (qm, um) = monopoly_bound(&p);
            // independent oracle: scan u1(q1, 0) on a fine grid
            let n = 20_001;
            let mut best = (0.0, f64::NEG_INFINITY);
            for j in 0..n {
                let q1 = a * j as f64 / (n - 1) as f64;
                let u = cournot_payoff(Player::One, QuantityPair::new(q1, 0.0).unwrap(), &p);
                if u > best.1 {
                    best = (q1, u);
                }
            }
            let h = a / (n - 1) as f64;
            assert!((best.0 - qm).abs() <= h, "a={a} c={c}");
            assert!((best.1 - um).abs() <= h * h + 1e-12);
        }
        assert_eq!(monopoly_bound(&params(30.0, 3.0)), (13.5, 182.25));
        assert_eq!(monopoly_bound(&params(3.0, 1.0)), (1.0, 1.0));
    }

    #[test]
    fn bertrand_payoff_values() {
        let p = BertrandParams::new(2.0, 0.5, 1.0).unwrap();
        assert_eq!(bertrand_payoffs(1.0, 1.0, &p), (0.0, 0.0));
        assert_eq!(bertrand_payoffs(0.0, 0.0, &p), (-2.0, -2.0));
        let p = BertrandParams::new(3.0, 0.5, 0.0).unwrap();
        // u1 = (3 - 1 + 1)(1) = 3, u2 = (3 - 2 + 0.5)(2) = 3
        assert_eq!(bertrand_payoffs(1.0, 2.0, &p), (3.0, 3.0));
    }

    #[test]
    fn joint_supremum_matches_grid_scan() {
        for (a, b, c) in [(1.0, 0.5, 0.0), (2.0, 0.5, 2.0), (1.0, 0.9, 0.0)] {
            let formula = bertrand_joint_supremum(&BertrandParams::new(a, b, c).unwrap());
            let pmax = 4.0 * a / (1.0 - b);
            let n = 801;
            let mut best = f64::NEG_INFINITY;
            for i in 0..n {
                for j in 0..n {
                    let p1 = pmax * i as f64 / (n - 1) as f64;
                    let p2 = pmax * j as f64 / (n - 1) as f64;
                    let u1 = (a - p1 + b * p2) * (p1 - c);
                    let u2 = (a - p2 + b * p1) * (p2 - c);
                    best = best.max(u1 + u2);
                }
            }
            assert!(
                (best - formula).abs() <= 1e-3 * formula.abs().max(1.0),
                "a={a} b={b} c={c}: grid {best} vs formula {formula}"
            );
        }
        let p = BertrandParams::new(1.0, 0.5, 0.0).unwrap();
        assert!((bertrand_joint_supremum(&p) - 1.0).abs() < 1e-12);
        let p = BertrandParams::new(1.0, 0.9, 0.0).unwrap();
        assert!((bertrand_joint_supremum(&p) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn price_monotone_and_best_reply_property() {
        let p = params(30.0, 3.0);
        // price nonincreasing in each argument
        let mut prev = f64::INFINITY;
        for j in 0..=100 {
            let q1 = 0.4 * j as f64;
            let v = price(QuantityPair::new(q1, 2.0).unwrap(), &p);
            assert!(v <= prev + 1e-12);
            prev = v;
        }
        // grid argmax of u1 given q2 equals (a - c - q2)/2 within one step
        let n = 3001;
        let h = 30.0 / (n - 1) as f64;
        for q2 in [0.0, 5.0, 13.0, 26.9] {
            let mut best = (0.0, f64::NEG_INFINITY);
            for j in 0..n {
                let q1 = h * j as f64;
                let u = cournot_payoff(Player::One, QuantityPair::new(q1, q2).unwrap(), &p);
                if u > best.1 {
                    best = (q1, u);
                }
            }
            assert!((best.0 - (27.0 - q2) / 2.0).abs() <= h, "q2={q2}");
        }
    }
}
