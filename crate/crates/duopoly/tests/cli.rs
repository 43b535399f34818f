//! Black-box tests of the command-line binary: exit codes, output values
//! and byte-stability of the figure files.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duopoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["equilibrium", "--scheme", "classical", "--a", "3", "--c", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("a > c violated"), "{}", stderr(&out));

    let out = run(&["equilibrium", "--scheme", "bertrand"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["equilibrium", "--scheme", "ldm"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--gamma"), "{}", stderr(&out));

    let out = run(&["payoff", "--scheme", "classical"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn payoff_values() {
    let out = run(&[
        "payoff", "--scheme", "mw", "--a", "30", "--c", "3", "--q1", "15", "--q2", "15",
        "--initial", "11", "--operator", "Mprime",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("u1 = 90675.0000000"), "{text}");
    assert!(text.contains("u2 = 90675.0000000"), "{text}");

    let out = run(&[
        "payoff", "--scheme", "classical", "--a", "30", "--c", "3", "--q1", "9", "--q2", "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("u1 = 81.0000000000"), "{}", stdout(&out));

    let out = run(&[
        "payoff", "--scheme", "ldm", "--a", "30", "--c", "3", "--gamma", "0", "--x1", "9",
        "--x2", "9", "--refined",
    ]);
    assert!(stdout(&out).contains("u1 = 81.0000000000"), "{}", stdout(&out));

    let out = run(&[
        "payoff", "--scheme", "rsm", "--a", "30", "--c", "3", "--gamma",
        "0.7853981633974483", "--x1", "6.75", "--x2", "6.75",
    ]);
    assert!(stdout(&out).contains("u1 = 91.1250000000"), "{}", stdout(&out));

    let out = run(&[
        "payoff", "--scheme", "bertrand", "--a", "3", "--b", "0.5", "--c", "0", "--p1", "1",
        "--p2", "2",
    ]);
    assert!(stdout(&out).contains("u1 = 3.00000000000"), "{}", stdout(&out));
}

#[test]
fn equilibrium_reports() {
    let out = run(&["equilibrium", "--scheme", "classical"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("point (9.00000000000, 9.00000000000)"), "{text}");
    assert!(text.contains("certified: true"), "{text}");

    let out = run(&["equilibrium", "--scheme", "mw"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("90675"), "{}", stdout(&out));

    let out = run(&["equilibrium", "--scheme", "rsm", "--gamma", "0.7853981633974483"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("segment"), "{text}");
    assert!(text.contains("certified: true"), "{text}");

    let out = run(&["equilibrium", "--scheme", "classical", "--a", "1", "--c", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("region"), "{}", stdout(&out));
}

#[test]
fn verify_batteries() {
    let out = run(&["verify", "--scheme", "rsm"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"), "{}", stdout(&out));

    let out = run(&["verify", "--scheme", "bertrand", "--a", "2", "--b", "0.5", "--c", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&[
        "verify", "--scheme", "mw", "--trivial-operator", "--q1", "2", "--q2", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("3.66666666667"), "{}", stdout(&out));

    // singular system is a diagnosis, not a failure
    let out = run(&[
        "verify", "--scheme", "mw", "--trivial-operator", "--q1", "1", "--q2", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("singular"), "{}", stdout(&out));

    let out = run(&["verify", "--scheme", "mw", "--hull"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violation exhibited"), "{}", stdout(&out));

    let out = run(&["verify", "--scheme", "ldm", "--fock", "--gamma", "0.2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fock quantity map: pass"), "{}", stdout(&out));

    // missing battery flag
    let out = run(&["verify", "--scheme", "ldm"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn figures_are_byte_stable() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let out = run(&["figures", "--out", dir1.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["figures", "--out", dir2.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["fig0.csv", "fig1.csv", "fig2.csv", "fig3.csv"] {
        let b1 = std::fs::read(dir1.path().join(name)).unwrap();
        let b2 = std::fs::read(dir2.path().join(name)).unwrap();
        assert_eq!(b1, b2, "{name} differs");
    }
    let fig0 = std::fs::read_to_string(dir1.path().join("fig0.csv")).unwrap();
    assert!(fig0.starts_with("a,u_classical,u_quantum\n"));
    assert!(fig0.contains("30.0000000000,81.0000000000,90675.0000000"), "{fig0}");
}
