//! Scheme-agnostic numerical oracle for two-player continuous games on a
//! box: grid best responses, epsilon-Nash certification, best-response
//! iteration, exhaustive equilibrium search and Pareto scans.
//!
//! All searches use plain grid enumeration. Ties break toward the smaller
//! strategy value so results are deterministic regardless of evaluation
//! order.

use crate::error::{Error, Result};
use crate::market::Player;

/// Uniform grid on `[0, xmax]` with `n` points per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    xmax: f64,
    n: usize,
}

impl GridSpec {
    pub fn new(xmax: f64, n: usize) -> Result<Self> {
        if !(xmax > 0.0 && xmax.is_finite()) {
            return Err(Error::InvalidParameter(format!("xmax > 0 violated (xmax = {xmax})")));
        }
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n >= 2 violated (n = {n})")));
        }
        Ok(Self { xmax, n })
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Spacing between adjacent grid points.
    pub fn step(&self) -> f64 {
        self.xmax / (self.n - 1) as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        self.xmax * j as f64 / (self.n - 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|j| self.point(j))
    }
}

/// A two-player payoff pair `(u1, u2)` over nonnegative strategy pairs.
pub struct PayoffPair<'a> {
    pub u1: &'a dyn Fn(f64, f64) -> f64,
    pub u2: &'a dyn Fn(f64, f64) -> f64,
}

impl<'a> PayoffPair<'a> {
    pub fn new(u1: &'a dyn Fn(f64, f64) -> f64, u2: &'a dyn Fn(f64, f64) -> f64) -> Self {
        Self { u1, u2 }
    }

    /// Symmetric game: player 2's payoff is player 1's with arguments swapped.
    pub fn eval(&self, player: Player, s1: f64, s2: f64) -> f64 {
        match player {
            Player::One => (self.u1)(s1, s2),
            Player::Two => (self.u2)(s1, s2),
        }
    }
}

/// Outcome of checking one profile against all unilateral grid deviations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsNashReport {
    pub profile: (f64, f64),
    /// Best improvement player 1 found by deviating, floored at 0.
    pub max_gain_1: f64,
    /// Best improvement player 2 found by deviating, floored at 0.
    pub max_gain_2: f64,
    pub eps: f64,
    pub certified: bool,
}

impl EpsNashReport {
    pub fn max_gain(&self) -> f64 {
        self.max_gain_1.max(self.max_gain_2)
    }
}

/// How an equilibrium set is described: a single point, a line segment,
/// an unbounded half-open region `{s1 >= min1, s2 >= min2}`, or nothing.
#[derive(Debug, Clone, PartialEq)]
pub enum EquilibriumKind {
    Point { profile: (f64, f64) },
    Segment { from: (f64, f64), to: (f64, f64) },
    Region { min1: f64, min2: f64 },
    Empty,
}

/// An equilibrium set together with payoffs at representative profiles and
/// any epsilon-Nash certifications attached to them.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult {
    pub kind: EquilibriumKind,
    /// Representative profiles and their payoff pairs.
    pub payoffs: Vec<((f64, f64), (f64, f64))>,
    pub certifications: Vec<EpsNashReport>,
    pub unique: bool,
}

impl EquilibriumResult {
    pub fn point(profile: (f64, f64), payoff: (f64, f64)) -> Self {
        Self {
            kind: EquilibriumKind::Point { profile },
            payoffs: vec![(profile, payoff)],
            certifications: Vec::new(),
            unique: true,
        }
    }

    pub fn segment(from: (f64, f64), to: (f64, f64)) -> Self {
        Self {
            kind: EquilibriumKind::Segment { from, to },
            payoffs: Vec::new(),
            certifications: Vec::new(),
            unique: false,
        }
    }

    pub fn region(min1: f64, min2: f64) -> Self {
        Self {
            kind: EquilibriumKind::Region { min1, min2 },
            payoffs: vec![((min1, min2), (0.0, 0.0))],
            certifications: Vec::new(),
            unique: false,
        }
    }

    /// A representative profile, if the set is nonempty.
    pub fn representative(&self) -> Option<(f64, f64)> {
        match &self.kind {
            EquilibriumKind::Point { profile } => Some(*profile),
            EquilibriumKind::Segment { from, to } => {
                Some(((from.0 + to.0) / 2.0, (from.1 + to.1) / 2.0))
            }
            EquilibriumKind::Region { min1, min2 } => Some((*min1, *min2)),
            EquilibriumKind::Empty => None,
        }
    }

    /// Evenly spaced samples of a segment (endpoints included).
    pub fn sample_segment(&self, count: usize) -> Vec<(f64, f64)> {
        match &self.kind {
            EquilibriumKind::Segment { from, to } if count >= 2 => (0..count)
                .map(|k| {
                    let t = k as f64 / (count - 1) as f64;
                    (from.0 + t * (to.0 - from.0), from.1 + t * (to.1 - from.1))
                })
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn all_certified(&self) -> bool {
        !self.certifications.is_empty() && self.certifications.iter().all(|c| c.certified)
    }
}

/// The grid point maximizing the given player's payoff against a fixed
/// opponent value. Ties break toward the smaller strategy.
pub fn grid_best_response(
    u: &dyn Fn(f64, f64) -> f64,
    player: Player,
    opponent_value: f64,
    grid: GridSpec,
) -> f64 {
    let mut best_s = grid.point(0);
    let mut best_u = f64::NEG_INFINITY;
    for s in grid.points() {
        let v = match player {
            Player::One => u(s, opponent_value),
            Player::Two => u(opponent_value, s),
        };
        if v > best_u {
            best_u = v;
            best_s = s;
        }
    }
    best_s
}

/// Scan each player's full grid of unilateral deviations from `profile`.
/// Certified iff neither player improves by more than `eps`.
pub fn eps_nash_verify(
    u: &PayoffPair<'_>,
    profile: (f64, f64),
    grid: GridSpec,
    eps: f64,
) -> EpsNashReport {
    let base1 = (u.u1)(profile.0, profile.1);
    let base2 = (u.u2)(profile.0, profile.1);
    let mut gain1 = 0.0f64;
    let mut gain2 = 0.0f64;
    for s in grid.points() {
        gain1 = gain1.max((u.u1)(s, profile.1) - base1);
        gain2 = gain2.max((u.u2)(profile.0, s) - base2);
    }
    EpsNashReport {
        profile,
        max_gain_1: gain1,
        max_gain_2: gain2,
        eps,
        certified: gain1 <= eps && gain2 <= eps,
    }
}

/// Alternating best responses until successive profiles move less than
/// `tol`, or `max_iters` is exhausted.
pub fn best_response_iteration(
    u: &PayoffPair<'_>,
    init: (f64, f64),
    grid: GridSpec,
    max_iters: usize,
    tol: f64,
) -> std::result::Result<(f64, f64), Vec<(f64, f64)>> {
    let mut current = init;
    let mut trail: Vec<(f64, f64)> = vec![init];
    for _ in 0..max_iters {
        let s1 = grid_best_response(u.u1, Player::One, current.1, grid);
        let s2 = grid_best_response(u.u2, Player::Two, s1, grid);
        let next = (s1, s2);
        let moved = (next.0 - current.0).abs().max((next.1 - current.1).abs());
        trail.push(next);
        current = next;
        if moved < tol {
            return Ok(current);
        }
    }
    let tail = trail.split_off(trail.len().saturating_sub(8));
    Err(tail)
}

/// All grid profiles that are eps-Nash, in lexicographic order.
///
/// Column/row maxima are precomputed so the scan costs O(n^2) payoff
/// evaluations instead of O(n^3).
pub fn brute_force_equilibria(u: &PayoffPair<'_>, grid: GridSpec, eps: f64) -> Vec<(f64, f64)> {
    let n = grid.n();
    let mut table1 = vec![0.0f64; n * n];
    let mut table2 = vec![0.0f64; n * n];
    for i in 0..n {
        let s1 = grid.point(i);
        for j in 0..n {
            let s2 = grid.point(j);
            table1[i * n + j] = (u.u1)(s1, s2);
            table2[i * n + j] = (u.u2)(s1, s2);
        }
    }
    // col_max1[j]: player 1's best payoff against opponent j
    let mut col_max1 = vec![f64::NEG_INFINITY; n];
    let mut row_max2 = vec![f64::NEG_INFINITY; n];
    for i in 0..n {
        for j in 0..n {
            col_max1[j] = col_max1[j].max(table1[i * n + j]);
            row_max2[i] = row_max2[i].max(table2[i * n + j]);
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if table1[i * n + j] >= col_max1[j] - eps && table2[i * n + j] >= row_max2[i] - eps {
                out.push((grid.point(i), grid.point(j)));
            }
        }
    }
    out
}

/// Grid maximum of `u1 + u2` and all grid points attaining it within `eps`.
pub fn pareto_scan(u: &PayoffPair<'_>, grid: GridSpec, eps: f64) -> (f64, Vec<(f64, f64)>) {
    let mut max_sum = f64::NEG_INFINITY;
    for s1 in grid.points() {
        for s2 in grid.points() {
            max_sum = max_sum.max((u.u1)(s1, s2) + (u.u2)(s1, s2));
        }
    }
    let mut argmax = Vec::new();
    for s1 in grid.points() {
        for s2 in grid.points() {
            if (u.u1)(s1, s2) + (u.u2)(s1, s2) >= max_sum - eps {
                argmax.push((s1, s2));
            }
        }
    }
    (max_sum, argmax)
}
