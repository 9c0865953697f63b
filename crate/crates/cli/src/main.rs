use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use waffle_core::board::Puzzle;
use waffle_core::BigUint;
use waffle_core::coloring::color_board;
use waffle_core::corpus::{load_word_list, swappable_words, WordList};
use waffle_core::difficulty::{analyze, hardness_count_reference, CountShape};
use waffle_core::generator::{generate_puzzle, FixedSquarePolicy, GeneratorConfig};
use waffle_core::perm::{
    average_cycle_count, format_decimal, k_disjoint_2cycle_count, log10, partition_count,
};
use waffle_core::solver::{solve_grid, DEFAULT_MAX_SOLUTIONS};
use waffle_core::unscramble::best_unscrambling;
use waffle_core::{CorpusError, SlotId};

#[derive(Parser)]
#[command(name = "waffle", version, about = "Solve, unscramble, analyze and generate Waffle puzzles")]
struct Cli {
    /// Word list, one five-letter word per line (default: bundled list).
    #[arg(long, global = true, value_name = "PATH")]
    dict: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Drop swappable words from the word list before use.
    #[arg(long, global = true, value_name = "BOOL", default_value_t = false, action = clap::ArgAction::Set)]
    filter_swappable: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Corners,
    Free,
}

#[derive(Subcommand)]
enum Command {
    /// List the word grids consistent with a scrambled board and its colors.
    Solve {
        puzzle: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_SOLUTIONS)]
        max_solutions: usize,
    },
    /// Print a shortest swap plan from the scrambled board to the solution.
    Unscramble { puzzle: PathBuf },
    /// Print the color grid of a scrambled board against its solution.
    Color { puzzle: PathBuf },
    /// Report difficulty diagnostics.
    Analyze { puzzle: PathBuf },
    /// Generate a puzzle file.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allowed green count, e.g. 5..8.
        #[arg(long, value_name = "LO..HI", default_value = "5..8", value_parser = parse_range)]
        target_ng: (usize, usize),
        #[arg(long, value_enum, default_value_t = Policy::Corners)]
        policy: Policy,
        #[arg(long, default_value_t = 200)]
        retries: u32,
    },
    /// List words that stay words when letters 2 and 4 are exchanged.
    Swappable,
    /// Permutation reference numbers.
    Stats {
        /// Print H_N, the mean cycle count of a random permutation of N points.
        #[arg(long, value_name = "N")]
        avg_cycles: Option<usize>,
        /// Print H_1 ..= H_N.
        #[arg(long, value_name = "N")]
        table: Option<usize>,
        /// Print the number of partitions of N.
        #[arg(long, value_name = "N")]
        partitions: Option<usize>,
        /// Print the number of permutations of N points that are K disjoint 2-cycles, as N,K.
        #[arg(long, value_name = "N,K", value_parser = parse_pair)]
        two_cycles: Option<(usize, usize)>,
        /// Print a reference count, e.g. multinomial:10,8,3 (over 21 points).
        #[arg(long, value_name = "SHAPE")]
        shape: Option<String>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    Ok((lo, hi))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected N,K, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad number in {s:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad number in {s:?}"))?;
    Ok((a, b))
}

/// An error carrying its own exit status.
#[derive(Debug)]
struct Exit {
    code: u8,
    message: String,
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

fn no_solution(message: impl Into<String>) -> anyhow::Error {
    Exit {
        code: 1,
        message: message.into(),
    }
    .into()
}

fn io_error(message: impl Into<String>) -> anyhow::Error {
    Exit {
        code: 3,
        message: message.into(),
    }
    .into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(exit) = err.downcast_ref::<Exit>() {
        return exit.code;
    }
    if let Some(CorpusError::Io { .. }) = err.downcast_ref::<CorpusError>() {
        return 3;
    }
    if err.downcast_ref::<io::Error>().is_some() {
        return 3;
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(()) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            print!("{out}");
            eprintln!("waffle: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| io_error(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| io_error(format!("cannot read {}: {e}", path.display())))
}

fn read_puzzle(path: &Path) -> Result<Puzzle> {
    let text = read_text(path)?;
    Puzzle::parse(&text).with_context(|| format!("{}", path.display()))
}

fn word_list(cli: &Cli) -> Result<WordList> {
    let wl = match &cli.dict {
        Some(path) => load_word_list(path)?,
        None => WordList::builtin(),
    };
    Ok(if cli.filter_swappable {
        wl.without_swappable()
    } else {
        wl
    })
}

fn run(cli: &Cli, out: &mut String) -> Result<()> {
    match &cli.command {
        Command::Solve {
            puzzle,
            max_solutions,
        } => solve(cli, puzzle, *max_solutions, out),
        Command::Unscramble { puzzle } => unscramble(cli, puzzle, out),
        Command::Color { puzzle } => {
            let p = read_puzzle(puzzle)?;
            let solution = p
                .solution
                .ok_or_else(|| anyhow!("color needs a solution stanza"))?;
            out.push_str(&color_board(&p.scrambled, &solution).to_string());
            Ok(())
        }
        Command::Analyze { puzzle } => {
            let p = read_puzzle(puzzle)?;
            let wl = if p.solution.is_none() || cli.dict.is_some() {
                Some(word_list(cli)?)
            } else {
                None
            };
            let report = analyze(&p, wl.as_ref())?;
            match cli.format {
                Format::Text => out.push_str(&report.render_text()),
                Format::Tsv => out.push_str(&report.render_key_values().replace('=', "\t")),
            }
            if report.classification.is_none() {
                return Err(no_solution("no solution found"));
            }
            Ok(())
        }
        Command::Generate {
            seed,
            target_ng,
            policy,
            retries,
        } => {
            let cfg = GeneratorConfig {
                seed: *seed,
                target_ng: *target_ng,
                policy: match policy {
                    Policy::Corners => FixedSquarePolicy::CornersAndCenter,
                    Policy::Free => FixedSquarePolicy::FreeChoice,
                },
                max_retries: *retries,
            };
            let wl = word_list(cli)?;
            let puzzle = generate_puzzle(&cfg, &wl).map_err(|e| match e {
                waffle_core::GenerateError::Config(_) => anyhow::Error::from(e),
                other => no_solution(other.to_string()),
            })?;
            out.push_str(&puzzle.render());
            Ok(())
        }
        Command::Swappable => {
            let wl = match &cli.dict {
                Some(path) => load_word_list(path)?,
                None => WordList::builtin(),
            };
            for w in swappable_words(&wl) {
                match cli.format {
                    Format::Text => out.push_str(&format!("{w} {}\n", w.even_swap())),
                    Format::Tsv => out.push_str(&format!("{w}\t{}\n", w.even_swap())),
                }
            }
            Ok(())
        }
        Command::Stats {
            avg_cycles,
            table,
            partitions,
            two_cycles,
            shape,
        } => stats(cli, *avg_cycles, *table, *partitions, *two_cycles, shape.as_deref(), out),
    }
}

fn solve(cli: &Cli, path: &Path, max_solutions: usize, out: &mut String) -> Result<()> {
    let p = read_puzzle(path)?;
    let colors = match (&p.colors, &p.solution) {
        (Some(c), _) => *c,
        (None, Some(sol)) => color_board(&p.scrambled, sol),
        (None, None) => return Err(anyhow!("solve needs a color stanza or a solution stanza")),
    };
    let wl = word_list(cli)?;
    let found = solve_grid(&p.scrambled, &colors, &wl, max_solutions);
    for (i, sol) in found.iter().enumerate() {
        match cli.format {
            Format::Text => {
                if i > 0 {
                    out.push('\n');
                }
                let words: Vec<String> = SlotId::ALL
                    .iter()
                    .map(|&s| format!("{}={}", s.name(), sol.word(s)))
                    .collect();
                out.push_str(&format!("solution {}: {}\n", i + 1, words.join(" ")));
                out.push_str(&sol.board().to_string());
            }
            Format::Tsv => {
                let words: Vec<String> = sol.words().iter().map(|w| w.to_string()).collect();
                out.push_str(&format!("{}\n", words.join("\t")));
            }
        }
    }
    if cli.format == Format::Text {
        out.push_str(&format!("solutions={}\n", found.len()));
    }
    if found.is_empty() {
        return Err(no_solution("no solution found"));
    }
    Ok(())
}

fn unscramble(cli: &Cli, path: &Path, out: &mut String) -> Result<()> {
    let p = read_puzzle(path)?;
    let solution = match p.solution {
        Some(sol) => sol,
        None => {
            let colors = p
                .colors
                .ok_or_else(|| anyhow!("unscramble needs a solution stanza or a color stanza"))?;
            let wl = word_list(cli)?;
            let found = solve_grid(&p.scrambled, &colors, &wl, 2);
            match found.len() {
                0 => return Err(no_solution("no solution found")),
                1 => *found[0].board(),
                _ => return Err(no_solution("solution is not unique; add a solution stanza")),
            }
        }
    };
    let result = best_unscrambling(&p.scrambled, &solution)?;
    for &(a, b) in result.swap_plan.swaps() {
        match cli.format {
            Format::Text => out.push_str(&format!("swap {a} {b}\n")),
            Format::Tsv => out.push_str(&format!("swap\t{a}\t{b}\n")),
        }
    }
    match cli.format {
        Format::Text => out.push_str(&format!(
            "cycles={} swaps={} perfect={}\n",
            result.cycle_count,
            result.swap_count(),
            result.perfect
        )),
        Format::Tsv => out.push_str(&format!(
            "summary\t{}\t{}\t{}\n",
            result.cycle_count,
            result.swap_count(),
            result.perfect
        )),
    }
    Ok(())
}

fn with_log(cli: &Cli, count: &BigUint) -> String {
    match cli.format {
        Format::Text => format!("{count} (log10 {:.3})", log10(count)),
        Format::Tsv => format!("{count}\t{:.3}", log10(count)),
    }
}

fn stats(
    cli: &Cli,
    avg_cycles: Option<usize>,
    table: Option<usize>,
    partitions: Option<usize>,
    two_cycles: Option<(usize, usize)>,
    shape: Option<&str>,
    out: &mut String,
) -> Result<()> {
    let sep = match cli.format {
        Format::Text => " = ",
        Format::Tsv => "\t",
    };
    let any = avg_cycles.is_some()
        || table.is_some()
        || partitions.is_some()
        || two_cycles.is_some()
        || shape.is_some();
    let harmonic = |n: usize| format_decimal(&average_cycle_count(n), 4);
    if let Some(n) = avg_cycles {
        out.push_str(&format!("H_{n}{sep}{}\n", harmonic(n)));
    }
    if let Some(n) = table {
        for k in 1..=n {
            out.push_str(&format!("H_{k}{sep}{}\n", harmonic(k)));
        }
    }
    if let Some(n) = partitions {
        out.push_str(&format!("p({n}){sep}{}\n", partition_count(n)));
    }
    if let Some((n, k)) = two_cycles {
        let count = k_disjoint_2cycle_count(n, k)?;
        out.push_str(&format!("2-cycles({n},{k}){sep}{}\n", with_log(cli, &count)));
    }
    if let Some(shape) = shape {
        let parsed: CountShape = shape.parse()?;
        let count = hardness_count_reference(21, &parsed)?;
        out.push_str(&format!("{shape}{sep}{}\n", with_log(cli, &count)));
    }
    if !any {
        out.push_str(&format!("H_21{sep}{}\n", harmonic(21)));
        out.push_str(&format!("H_15{sep}{}\n", harmonic(15)));
        out.push_str(&format!("p(21){sep}{}\n", partition_count(21)));
        let ten = k_disjoint_2cycle_count(20, 10)?;
        out.push_str(&format!("2-cycles(20,10){sep}{}\n", with_log(cli, &ten)));
    }
    Ok(())
}
