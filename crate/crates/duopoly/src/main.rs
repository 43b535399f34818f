//! Command-line surface for the duopoly library: equilibrium reports,
//! payoff evaluation, CSV figure emission and verification batteries.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 verification or
//! certification failure.

use clap::{Parser, Subcommand, ValueEnum};
use duopoly::figures::{format_sig12, write_figures};
use duopoly::fock::{fock_verify_quantity_map, FockConfig};
use duopoly::market::{
    bertrand_joint_supremum, bertrand_payoffs, classical_equilibrium, cournot_payoff,
};
use duopoly::mw::{
    bertrand_quantum_payoffs, convex_hull_violation_check, half_a_equilibrium_check,
    half_a_threshold, mw_payoff, trivial_operator_solve, OperatorVariant,
    TrivialOperatorSolution,
};
use duopoly::solver::{eps_nash_verify, EquilibriumKind};
use duopoly::{
    ldm, rsm, BertrandParams, EquilibriumResult, GridSpec, MarketParams, PayoffPair, Player,
    QuantityPair, TwoQubitState,
};
use std::f64::consts::FRAC_PI_4;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "duopoly", version, about = "Classical and quantum duopoly equilibria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scheme {
    Classical,
    Bertrand,
    Mw,
    Ldm,
    Rsm,
}

#[derive(Subcommand)]
enum Command {
    /// Report the analytic Nash equilibrium and certify it on a grid.
    Equilibrium {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, default_value_t = 30.0)]
        a: f64,
        #[arg(long, default_value_t = 3.0)]
        c: f64,
        /// Entanglement parameter (required for ldm and rsm).
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, default_value_t = 601)]
        grid_points: usize,
        /// Grid box edge; defaults to a scheme-specific bound.
        #[arg(long)]
        xmax: Option<f64>,
        /// Certification tolerance; defaults to a grid-step-scaled value.
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Evaluate a payoff pair at a given strategy profile.
    Payoff {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, default_value_t = 30.0)]
        a: f64,
        #[arg(long, default_value_t = 3.0)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        b: f64,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        q1: Option<f64>,
        #[arg(long)]
        q2: Option<f64>,
        #[arg(long)]
        x1: Option<f64>,
        #[arg(long)]
        x2: Option<f64>,
        #[arg(long)]
        p1: Option<f64>,
        #[arg(long)]
        p2: Option<f64>,
        /// Initial basis state for the mw scheme: 00, 01, 10 or 11.
        #[arg(long)]
        initial: Option<String>,
        /// Payoff operator for the mw scheme: M, Mprime or Mdoubleprime.
        #[arg(long)]
        operator: Option<String>,
        /// Use the refined (zero-price aware) ldm payoff.
        #[arg(long)]
        refined: bool,
    },
    /// Write fig0.csv..fig3.csv reproducing the figure datasets.
    Figures {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 30.0)]
        a: f64,
        #[arg(long, default_value_t = 3.0)]
        c: f64,
    },
    /// Run a verification battery for a scheme.
    Verify {
        #[arg(long, value_enum)]
        scheme: Scheme,
        #[arg(long, default_value_t = 30.0)]
        a: f64,
        #[arg(long, default_value_t = 3.0)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        b: f64,
        #[arg(long)]
        gamma: Option<f64>,
        /// Fock-truncation check of the ldm quantity map.
        #[arg(long)]
        fock: bool,
        #[arg(long, default_value_t = 24)]
        cutoff: usize,
        /// Solve the general-operator uniqueness system at (q1, q2).
        #[arg(long)]
        trivial_operator: bool,
        #[arg(long)]
        q1: Option<f64>,
        #[arg(long)]
        q2: Option<f64>,
        /// Exhibit a payoff profile outside the classical convex hull.
        #[arg(long)]
        hull: bool,
    },
}

enum CmdError {
    Usage(String),
    Verification(String),
}

impl From<duopoly::Error> for CmdError {
    fn from(e: duopoly::Error) -> Self {
        CmdError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Equilibrium {
            scheme,
            a,
            c,
            gamma,
            grid_points,
            xmax,
            eps,
        } => cmd_equilibrium(scheme, a, c, gamma, grid_points, xmax, eps),
        Command::Payoff {
            scheme,
            a,
            c,
            b,
            gamma,
            q1,
            q2,
            x1,
            x2,
            p1,
            p2,
            initial,
            operator,
            refined,
        } => cmd_payoff(
            scheme, a, c, b, gamma, q1, q2, x1, x2, p1, p2, initial, operator, refined,
        ),
        Command::Figures { out, a, c } => cmd_figures(&out, a, c),
        Command::Verify {
            scheme,
            a,
            c,
            b,
            gamma,
            fock,
            cutoff,
            trivial_operator,
            q1,
            q2,
            hull,
        } => cmd_verify(scheme, a, c, b, gamma, fock, cutoff, trivial_operator, q1, q2, hull),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Verification(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn require(value: Option<f64>, name: &str) -> Result<f64, CmdError> {
    value.ok_or_else(|| CmdError::Usage(format!("--{name} is required for this scheme")))
}

fn print_certification(report: &duopoly::EpsNashReport) {
    println!(
        "certification: max unilateral gain = {} (player 1: {}, player 2: {}), eps = {}",
        format_sig12(report.max_gain()),
        format_sig12(report.max_gain_1),
        format_sig12(report.max_gain_2),
        format_sig12(report.eps),
    );
    println!("certified: {}", report.certified);
}

fn certify_result(
    result: &mut EquilibriumResult,
    u: &PayoffPair<'_>,
    grid: GridSpec,
    eps: f64,
) -> bool {
    let profiles: Vec<(f64, f64)> = match &result.kind {
        EquilibriumKind::Point { profile } => vec![*profile],
        EquilibriumKind::Segment { .. } => result.sample_segment(5),
        EquilibriumKind::Region { min1, min2 } => {
            vec![(*min1, *min2), (min1 * 1.5, min2 * 1.25), (min1 * 2.0, min2 * 2.0)]
        }
        EquilibriumKind::Empty => Vec::new(),
    };
    for p in profiles {
        result.certifications.push(eps_nash_verify(u, p, grid, eps));
    }
    result.all_certified()
}

fn describe_kind(kind: &EquilibriumKind) -> String {
    match kind {
        EquilibriumKind::Point { profile } => format!(
            "point ({}, {})",
            format_sig12(profile.0),
            format_sig12(profile.1)
        ),
        EquilibriumKind::Segment { from, to } => format!(
            "segment from ({}, {}) to ({}, {})",
            format_sig12(from.0),
            format_sig12(from.1),
            format_sig12(to.0),
            format_sig12(to.1)
        ),
        EquilibriumKind::Region { min1, min2 } => format!(
            "region {{ s1 >= {}, s2 >= {} }} (non-unique continuum)",
            format_sig12(*min1),
            format_sig12(*min2)
        ),
        EquilibriumKind::Empty => "empty".to_string(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_equilibrium(
    scheme: Scheme,
    a: f64,
    c: f64,
    gamma: Option<f64>,
    grid_points: usize,
    xmax: Option<f64>,
    eps: Option<f64>,
) -> Result<(), CmdError> {
    let params = MarketParams::new(a, c)?;
    let default_eps = |grid: GridSpec| 2.0 * (a + c) * grid.step();
    match scheme {
        Scheme::Classical => {
            let mut result = classical_equilibrium(&params);
            println!("scheme: classical Cournot (a = {a}, c = {c})");
            println!("equilibrium: {}", describe_kind(&result.kind));
            for (profile, payoff) in &result.payoffs {
                println!(
                    "payoffs at ({}, {}): ({}, {})",
                    format_sig12(profile.0),
                    format_sig12(profile.1),
                    format_sig12(payoff.0),
                    format_sig12(payoff.1)
                );
            }
            let box_edge = xmax.unwrap_or(if c > 0.0 { a } else { 2.0 * a });
            let grid = GridSpec::new(box_edge, grid_points)?;
            let eps = eps.unwrap_or_else(|| default_eps(grid));
            let u1 = |q1: f64, q2: f64| {
                cournot_payoff(Player::One, QuantityPair::new(q1, q2).unwrap(), &params)
            };
            let u2 = |q1: f64, q2: f64| {
                cournot_payoff(Player::Two, QuantityPair::new(q1, q2).unwrap(), &params)
            };
            let u = PayoffPair::new(&u1, &u2);
            let ok = certify_result(&mut result, &u, grid, eps);
            for report in &result.certifications {
                print_certification(report);
            }
            if ok {
                Ok(())
            } else {
                Err(CmdError::Verification("equilibrium not certified".into()))
            }
        }
        Scheme::Mw => {
            let grid = GridSpec::new(xmax.unwrap_or(a), grid_points)?;
            let eps = eps.unwrap_or(1e-9);
            let r = half_a_equilibrium_check(&params, grid, eps)?;
            println!("scheme: mw refined |11> (a = {a}, c = {c})");
            println!(
                "threshold a >= (c + sqrt(c^2 + 16))/2 = {}: {}",
                format_sig12(half_a_threshold(c)),
                if r.condition_satisfied { "satisfied" } else { "NOT satisfied" }
            );
            println!("profile: (a/2, a/2) = ({}, {})", format_sig12(a / 2.0), format_sig12(a / 2.0));
            let rho11 = TwoQubitState::basis_state(1, 1)?;
            let q = QuantityPair::new(a / 2.0, a / 2.0)?;
            let u1 = duopoly::mw::refined_payoff(Player::One, q, &rho11, &params)?;
            println!("payoff: {} each", format_sig12(u1));
            print_certification(&r.report);
            if r.report.certified {
                Ok(())
            } else {
                Err(CmdError::Verification("(a/2, a/2) not certified".into()))
            }
        }
        Scheme::Ldm => {
            let g = require(gamma, "gamma")?;
            if g < 0.0 {
                return Err(CmdError::Usage(format!("gamma >= 0 violated (gamma = {g})")));
            }
            let mut result = ldm::equilibrium(g, &params);
            println!("scheme: ldm refined (a = {a}, c = {c}, gamma = {g})");
            println!("equilibrium: {}", describe_kind(&result.kind));
            for (profile, payoff) in &result.payoffs {
                println!(
                    "payoffs at ({}, {}): ({}, {})",
                    format_sig12(profile.0),
                    format_sig12(profile.1),
                    format_sig12(payoff.0),
                    format_sig12(payoff.1)
                );
            }
            let box_edge = xmax.unwrap_or_else(|| {
                let base = a * (-g).exp();
                if c > 0.0 { base } else { 2.0 * base }
            });
            let grid = GridSpec::new(box_edge, grid_points)?;
            let eps = eps.unwrap_or_else(|| default_eps(grid));
            let u1 = |x1: f64, x2: f64| {
                ldm::ldm_payoff(Player::One, ldm::LdmStrategy::new(x1, x2, g).unwrap(), &params, true)
            };
            let u2 = |x1: f64, x2: f64| {
                ldm::ldm_payoff(Player::Two, ldm::LdmStrategy::new(x1, x2, g).unwrap(), &params, true)
            };
            let u = PayoffPair::new(&u1, &u2);
            let ok = certify_result(&mut result, &u, grid, eps);
            for report in &result.certifications {
                print_certification(report);
            }
            if ok {
                Ok(())
            } else {
                Err(CmdError::Verification("equilibrium not certified".into()))
            }
        }
        Scheme::Rsm => {
            let g = require(gamma, "gamma")?;
            let mut result = rsm::equilibrium_set(g, &params)?;
            println!("scheme: rsm (a = {a}, c = {c}, gamma = {g})");
            println!("equilibrium: {}", describe_kind(&result.kind));
            if let EquilibriumKind::Segment { from, to } = &result.kind {
                println!(
                    "segment condition: x1 + x2 = {}",
                    format_sig12(from.1.max(to.0))
                );
            }
            for (profile, payoff) in &result.payoffs {
                println!(
                    "payoffs at ({}, {}): ({}, {})",
                    format_sig12(profile.0),
                    format_sig12(profile.1),
                    format_sig12(payoff.0),
                    format_sig12(payoff.1)
                );
            }
            let grid = GridSpec::new(xmax.unwrap_or(a), grid_points)?;
            let eps = eps.unwrap_or_else(|| default_eps(grid));
            let u1 = |x1: f64, x2: f64| {
                rsm::rsm_payoff(Player::One, rsm::RsmStrategy::new(x1, x2, g).unwrap(), &params)
                    .unwrap()
            };
            let u2 = |x1: f64, x2: f64| {
                rsm::rsm_payoff(Player::Two, rsm::RsmStrategy::new(x1, x2, g).unwrap(), &params)
                    .unwrap()
            };
            let u = PayoffPair::new(&u1, &u2);
            let ok = certify_result(&mut result, &u, grid, eps);
            for report in &result.certifications {
                print_certification(report);
            }
            if ok {
                Ok(())
            } else {
                Err(CmdError::Verification("equilibrium not certified".into()))
            }
        }
        Scheme::Bertrand => Err(CmdError::Usage(
            "equilibrium analysis is not available for the bertrand scheme".into(),
        )),
    }
}

fn parse_initial(s: &str) -> Result<TwoQubitState, CmdError> {
    let bits = match s {
        "00" => (0, 0),
        "01" => (0, 1),
        "10" => (1, 0),
        "11" => (1, 1),
        other => {
            return Err(CmdError::Usage(format!(
                "--initial must be one of 00, 01, 10, 11 (got {other})"
            )))
        }
    };
    Ok(TwoQubitState::basis_state(bits.0, bits.1)?)
}

fn parse_operator(s: &str) -> Result<OperatorVariant, CmdError> {
    match s.to_ascii_lowercase().as_str() {
        "m" => Ok(OperatorVariant::M),
        "mprime" => Ok(OperatorVariant::MPrime),
        "mdoubleprime" => Ok(OperatorVariant::MDoublePrime),
        other => Err(CmdError::Usage(format!(
            "--operator must be M, Mprime or Mdoubleprime (got {other})"
        ))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_payoff(
    scheme: Scheme,
    a: f64,
    c: f64,
    b: f64,
    gamma: Option<f64>,
    q1: Option<f64>,
    q2: Option<f64>,
    x1: Option<f64>,
    x2: Option<f64>,
    p1: Option<f64>,
    p2: Option<f64>,
    initial: Option<String>,
    operator: Option<String>,
    refined: bool,
) -> Result<(), CmdError> {
    let (u1, u2) = match scheme {
        Scheme::Classical => {
            let params = MarketParams::new(a, c)?;
            let q = QuantityPair::new(require(q1, "q1")?, require(q2, "q2")?)?;
            (
                cournot_payoff(Player::One, q, &params),
                cournot_payoff(Player::Two, q, &params),
            )
        }
        Scheme::Bertrand => {
            let params = BertrandParams::new(a, b, c)?;
            let (p1, p2) = (require(p1, "p1")?, require(p2, "p2")?);
            match gamma {
                Some(g) => bertrand_quantum_payoffs(p1, p2, g, &params),
                None => bertrand_payoffs(p1, p2, &params),
            }
        }
        Scheme::Mw => {
            let params = MarketParams::new(a, c)?;
            let q = QuantityPair::new(require(q1, "q1")?, require(q2, "q2")?)?;
            let rho_in = parse_initial(initial.as_deref().unwrap_or("00"))?;
            let variant = parse_operator(operator.as_deref().unwrap_or("M"))?;
            (
                mw_payoff(Player::One, q, &rho_in, variant, &params)?,
                mw_payoff(Player::Two, q, &rho_in, variant, &params)?,
            )
        }
        Scheme::Ldm => {
            let params = MarketParams::new(a, c)?;
            let s = ldm::LdmStrategy::new(
                require(x1, "x1")?,
                require(x2, "x2")?,
                require(gamma, "gamma")?,
            )?;
            (
                ldm::ldm_payoff(Player::One, s, &params, refined),
                ldm::ldm_payoff(Player::Two, s, &params, refined),
            )
        }
        Scheme::Rsm => {
            let params = MarketParams::new(a, c)?;
            let s = rsm::RsmStrategy::new(
                require(x1, "x1")?,
                require(x2, "x2")?,
                require(gamma, "gamma")?,
            )?;
            (
                rsm::rsm_payoff(Player::One, s, &params)?,
                rsm::rsm_payoff(Player::Two, s, &params)?,
            )
        }
    };
    println!("u1 = {}", format_sig12(u1));
    println!("u2 = {}", format_sig12(u2));
    Ok(())
}

fn cmd_figures(out: &PathBuf, a: f64, c: f64) -> Result<(), CmdError> {
    let params = MarketParams::new(a, c)?;
    let paths = write_figures(out, &params)?;
    for p in paths {
        println!("wrote {}", p.display());
    }
    Ok(())
}

/// Deterministic xorshift generator for the verification batteries.
struct Xorshift(u64);

impl Xorshift {
    fn next_unit(&mut self) -> f64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        (x >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    scheme: Scheme,
    a: f64,
    c: f64,
    b: f64,
    gamma: Option<f64>,
    fock: bool,
    cutoff: usize,
    trivial_operator: bool,
    q1: Option<f64>,
    q2: Option<f64>,
    hull: bool,
) -> Result<(), CmdError> {
    match scheme {
        Scheme::Ldm => {
            if !fock {
                return Err(CmdError::Usage("verify --scheme ldm requires --fock".into()));
            }
            let g = require(gamma, "gamma")?;
            let cfg = FockConfig::new(cutoff)?;
            let mut worst = 0.0f64;
            let mut worst_tail = 0.0f64;
            for &x1 in &[0.0, 0.3, 0.7] {
                for &x2 in &[0.0, 0.3, 0.7] {
                    let s = ldm::LdmStrategy::new(x1, x2, g)?;
                    let v = fock_verify_quantity_map(s, cfg).map_err(|e| match e {
                        duopoly::Error::TailMassTooLarge { .. } => {
                            CmdError::Verification(e.to_string())
                        }
                        other => CmdError::Usage(other.to_string()),
                    })?;
                    let q = ldm::quantity_map(s);
                    worst = worst.max((v.q1 - q.q1).abs()).max((v.q2 - q.q2).abs());
                    worst_tail = worst_tail.max(v.tail_mass);
                }
            }
            println!(
                "fock check: max |simulated - closed form| = {}, max tail mass = {}",
                format_sig12(worst),
                format_sig12(worst_tail)
            );
            if worst < 1e-6 {
                println!("fock quantity map: pass");
                Ok(())
            } else {
                Err(CmdError::Verification("fock quantity map deviation exceeds 1e-6".into()))
            }
        }
        Scheme::Mw => {
            let params = MarketParams::new(a, c)?;
            if trivial_operator {
                let q = QuantityPair::new(require(q1, "q1")?, require(q2, "q2")?)?;
                match trivial_operator_solve(q, Player::One, &params) {
                    TrivialOperatorSolution::Unique(x) => {
                        let expect =
                            q.q1 * (params.margin() - q.total()) / ((1.0 + q.q1) * (1.0 + q.q2));
                        println!(
                            "solution: ({}, {}, {}, {})",
                            format_sig12(x[0]),
                            format_sig12(x[1]),
                            format_sig12(x[2]),
                            format_sig12(x[3])
                        );
                        let ok = x.iter().all(|v| (v - expect).abs() < 1e-9);
                        if ok {
                            println!("trivial operator: pass (all-equal solution)");
                            Ok(())
                        } else {
                            Err(CmdError::Verification(
                                "solution does not match the all-equal closed form".into(),
                            ))
                        }
                    }
                    TrivialOperatorSolution::Degenerate { rank, manifold_dim } => {
                        println!(
                            "singular system: rank {rank}, solution manifold dimension {manifold_dim}"
                        );
                        Ok(())
                    }
                }
            } else if hull {
                let r = convex_hull_violation_check(&params)?;
                println!(
                    "witness ({}, {}) with payoffs ({}, {}); classical joint max {}",
                    format_sig12(r.witness.q1),
                    format_sig12(r.witness.q2),
                    format_sig12(r.witness_payoffs.0),
                    format_sig12(r.witness_payoffs.1),
                    format_sig12(r.classical_joint_max)
                );
                if r.violated {
                    println!("violation exhibited");
                    Ok(())
                } else {
                    Err(CmdError::Verification("no hull violation found".into()))
                }
            } else {
                Err(CmdError::Usage(
                    "verify --scheme mw requires --trivial-operator or --hull".into(),
                ))
            }
        }
        Scheme::Rsm => {
            let mut rng = Xorshift(0x9E3779B97F4A7C15);
            let mut worst = 0.0f64;
            for _ in 0..500 {
                let x1 = 20.0 * rng.next_unit();
                let x2 = 20.0 * rng.next_unit();
                let g = FRAC_PI_4 * rng.next_unit();
                let s = rsm::RsmStrategy::new(x1, x2, g)?;
                let q = rsm::quantity_map(s)?;
                let (c2, s2) = (g.cos().powi(2), g.sin().powi(2));
                worst = worst
                    .max((q.q1 - (x1 * c2 + x2 * s2)).abs())
                    .max((q.q2 - (x2 * c2 + x1 * s2)).abs())
                    .max((q.total() - (x1 + x2)).abs());
            }
            println!(
                "matrix-path quantity map: max deviation {} over 500 samples",
                format_sig12(worst)
            );
            if worst < 1e-12 {
                println!("rsm matrix path: pass");
                Ok(())
            } else {
                Err(CmdError::Verification("matrix path deviates from the closed form".into()))
            }
        }
        Scheme::Bertrand => {
            let params = BertrandParams::new(a, b, c)?;
            let mut rng = Xorshift(0xD1B54A32D192ED03);
            let mut worst = 0.0f64;
            for _ in 0..1000 {
                let p1 = 3.0 * a * rng.next_unit();
                let p2 = 3.0 * a * rng.next_unit();
                let (u1, u2) = bertrand_quantum_payoffs(p1, p2, 0.0, &params);
                let (c1, c2) = bertrand_payoffs(p1, p2, &params);
                worst = worst.max((u1 - c1).abs()).max((u2 - c2).abs());
            }
            println!(
                "gamma = 0 reduction: max deviation {} over 1000 samples",
                format_sig12(worst)
            );
            println!(
                "joint supremum: {}",
                format_sig12(bertrand_joint_supremum(&params))
            );
            if worst < 1e-9 {
                println!("bertrand reduction: pass");
                Ok(())
            } else {
                Err(CmdError::Verification("quantum payoffs do not reduce at gamma = 0".into()))
            }
        }
        Scheme::Classical => {
            let params = MarketParams::new(a, c)?;
            let mut result = classical_equilibrium(&params);
            let grid = GridSpec::new(if c > 0.0 { a } else { 2.0 * a }, 601)?;
            let u1 = |s1: f64, s2: f64| {
                cournot_payoff(Player::One, QuantityPair::new(s1, s2).unwrap(), &params)
            };
            let u2 = |s1: f64, s2: f64| {
                cournot_payoff(Player::Two, QuantityPair::new(s1, s2).unwrap(), &params)
            };
            let u = PayoffPair::new(&u1, &u2);
            let ok = certify_result(&mut result, &u, grid, 1e-9);
            println!("equilibrium: {}", describe_kind(&result.kind));
            for r in &result.certifications {
                print_certification(r);
            }
            if ok {
                println!("classical equilibrium: pass");
                Ok(())
            } else {
                Err(CmdError::Verification("classical equilibrium not certified".into()))
            }
        }
    }
}
