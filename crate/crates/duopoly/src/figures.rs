//! CSV emission of the four figure datasets: the classical-vs-quantum
//! equilibrium payoff comparison, the two best-reply portraits, and the
//! equilibrium payoff curve over the entanglement angle.
//!
//! Output is byte-stable: fixed sample grids, 12 significant digits,
//! '.' decimal separator, '\n' line endings, header row first.

use crate::error::{Error, Result};
use crate::market::{MarketParams, Player, QuantityPair};
use crate::mw::refined_payoff;
use crate::qstate::TwoQubitState;
use crate::{ldm, rsm};
use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Entanglement parameter used for the best-reply portrait of the
/// squeezing scheme.
pub const FIG1_GAMMA: f64 = std::f64::consts::LN_2;
/// Entanglement angle used for the best-reply portrait of the qubit scheme.
pub const FIG2_GAMMA: f64 = std::f64::consts::FRAC_PI_6;

/// Format with 12 significant digits in plain decimal notation.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).clamp(0, 17) as usize;
    format!("{:.*}", decimals, x)
}

fn write_csv(path: &Path, header: &str, rows: &[Vec<f64>]) -> Result<()> {
    let mut out = String::new();
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| format_sig12(v)).collect();
        let _ = writeln!(out, "{}", line.join(","));
    }
    std::fs::write(path, out).map_err(|e| Error::InvalidParameter(format!(
        "cannot write {}: {e}",
        path.display()
    )))
}

/// Classical equilibrium payoff vs the (a/2, a/2) payoff of the refined
/// |11> flip scheme, for a swept from the equilibrium threshold upward at
/// fixed c.
pub fn fig0_rows(c: f64) -> Result<Vec<Vec<f64>>> {
    let rho11 = TwoQubitState::basis_state(1, 1)?;
    let mut rows = Vec::new();
    // threshold (3 + sqrt(25))/2 = 4 for c = 3; step 0.5 up to 40
    let mut a = crate::mw::half_a_threshold(c);
    while a <= 40.0 + 1e-9 {
        let params = MarketParams::new(a, c)?;
        let m = params.margin();
        let u_classical = m * m / 9.0;
        let q = QuantityPair::new(a / 2.0, a / 2.0)?;
        let u_quantum = refined_payoff(Player::One, q, &rho11, &params)?;
        rows.push(vec![a, u_classical, u_quantum]);
        a += 0.5;
    }
    Ok(rows)
}

fn fig1_rows(params: &MarketParams) -> Vec<Vec<f64>> {
    let xmax = params.a() * (-FIG1_GAMMA).exp();
    (0..=200)
        .map(|k| {
            let x = xmax * k as f64 / 200.0;
            let b = ldm::best_reply(x, FIG1_GAMMA, params);
            vec![x, b, b]
        })
        .collect()
}

fn fig2_rows(params: &MarketParams) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for k in 0..=200 {
        let x = params.a() * k as f64 / 200.0;
        let b = rsm::best_reply(x, FIG2_GAMMA, params)?;
        rows.push(vec![x, b, b]);
    }
    Ok(rows)
}

fn fig3_rows(params: &MarketParams) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for k in 0..200 {
        let g = FRAC_PI_4 * k as f64 / 199.0;
        rows.push(vec![g, rsm::equilibrium_payoff(g, params)?]);
    }
    Ok(rows)
}

/// Write fig0.csv..fig3.csv into `out_dir` (created if absent) and return
/// the paths written.
pub fn write_figures(out_dir: &Path, params: &MarketParams) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir).map_err(|e| {
        Error::InvalidParameter(format!("cannot create {}: {e}", out_dir.display()))
    })?;
    let files = [
        ("fig0.csv", "a,u_classical,u_quantum", fig0_rows(params.c())?),
        ("fig1.csv", "x,beta1,beta2", fig1_rows(params)),
        ("fig2.csv", "x,beta1,beta2", fig2_rows(params)?),
        ("fig3.csv", "gamma,payoff", fig3_rows(params)?),
    ];
    let mut paths = Vec::new();
    for (name, header, rows) in files {
        let path = out_dir.join(name);
        write_csv(&path, header, &rows)?;
        paths.push(path);
    }
    Ok(paths)
}
