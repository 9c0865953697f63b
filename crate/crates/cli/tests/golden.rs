use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn data(name: &str) -> String {
    root().join("data").join(name).display().to_string()
}

fn waffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_waffle"))
        .args(args)
        .output()
        .expect("failed to spawn waffle")
}

/// Runs the command and compares standard output with a golden file.
fn assert_golden(golden: &str, args: &[&str]) {
    let output = waffle(args);
    assert!(
        output.status.success(),
        "{args:?} failed with {:?}\nstderr:\n{}",
        output.status,
        String::from_utf8_lossy(&output.stderr)
    );
    let path = root().join("golden").join(golden);
    let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&expected),
        "output of {args:?} differs from {golden}"
    );
}

#[test]
fn solve_game_two() {
    let dict = data("game2_words.txt");
    let puzzle = data("game2.waffle");
    assert_golden("solve_game2.txt", &["--dict", &dict, "solve", &puzzle]);
}

#[test]
fn solve_hard_game_tsv() {
    let dict = data("fig3c_words.txt");
    let puzzle = data("fig3c_hard.waffle");
    assert_golden("solve_fig3c.tsv", &["--dict", &dict, "--format", "tsv", "solve", &puzzle]);
}

#[test]
fn unscramble_game_two() {
    let puzzle = data("game2.waffle");
    assert_golden("unscramble_game2.txt", &["unscramble", &puzzle]);
    let text = fs::read_to_string(root().join("golden/unscramble_game2.txt")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[..10].iter().all(|l| l.starts_with("swap ")));
    assert_eq!(lines[10], "cycles=11 swaps=10 perfect=true");
}

#[test]
fn unscramble_without_solution_stanza_solves_first() {
    let dict = data("fig3c_words.txt");
    let text = fs::read_to_string(data("fig3c_hard.waffle")).unwrap();
    let without: Vec<&str> = text.split("\n\n").take(2).collect();
    let path = std::env::temp_dir().join(format!("waffle-fig3c-{}.waffle", std::process::id()));
    fs::write(&path, without.join("\n\n")).unwrap();
    let output = waffle(&["--dict", &dict, "unscramble", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.ends_with("cycles=11 swaps=10 perfect=true\n"), "{stdout}");
}

#[test]
fn color_game_two() {
    assert_golden("color_game2.txt", &["color", &data("game2.waffle")]);
}

#[test]
fn analyze_game_two() {
    let puzzle = data("game2.waffle");
    assert_golden("analyze_game2.txt", &["analyze", &puzzle]);
    assert_golden("analyze_game2.tsv", &["--format", "tsv", "analyze", &puzzle]);
}

#[test]
fn stats_outputs() {
    assert_golden("stats_avg_cycles_21.txt", &["stats", "--avg-cycles", "21"]);
    assert_golden("stats_default.txt", &["stats"]);
}

#[test]
fn swappable_listing() {
    let dict = data("smile_words.txt");
    assert_golden("swappable_smile.txt", &["--dict", &dict, "swappable"]);
}

#[test]
fn generate_is_reproducible() {
    assert_golden("generate_seed_7.waffle", &["generate", "--seed", "7"]);
    let a = waffle(&["generate", "--seed", "11", "--policy", "free", "--target-ng", "3..6"]);
    let b = waffle(&["generate", "--seed", "11", "--policy", "free", "--target-ng", "3..6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let puzzle = data("game2.waffle");
    let no_solution = waffle(&["--dict", &data("smile_words.txt"), "solve", &puzzle]);
    assert_eq!(no_solution.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&no_solution.stderr).contains("no solution"));

    let unknown_flag = waffle(&["solve", "--bogus", &puzzle]);
    assert_eq!(unknown_flag.status.code(), Some(2));
    assert!(unknown_flag.stdout.is_empty());

    let bad_config = waffle(&["generate", "--target-ng", "21..21"]);
    assert_eq!(bad_config.status.code(), Some(2));

    let missing = waffle(&["solve", &data("no-such-file.waffle")]);
    assert_eq!(missing.status.code(), Some(3));

    let missing_dict = waffle(&["--dict", &data("no-such-words.txt"), "solve", &puzzle]);
    assert_eq!(missing_dict.status.code(), Some(3));
}
