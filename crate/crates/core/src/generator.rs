//! Seeded puzzle generation: fill a grid with six distinct words, then
//! scramble it by a permutation with exactly eleven cycles, rejecting
//! scrambles that are degenerate, have the wrong number of greens, admit
//! a second solution or look too hard.
//!
//! All randomness comes from ChaCha8 seeded with the config seed; attempt
//! `i` uses stream `i`, so attempts are independent of each other and the
//! output depends only on (config, word list).

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::{LetterBoard, Puzzle, SlotId, SquareId, SQUARE_COUNT};
use crate::coloring::{color_board, color_counts};
use crate::corpus::{Word, WordList};
use crate::difficulty::{classify, nongreen_multiplicity_count, Classification, PerfectCount};
use crate::error::{GenerateError, UnscrambleError};
use crate::perm::Permutation;
use crate::solver::{uniqueness_report, GridSolution};
use crate::unscramble::{
    assignments_with_cycle_count_in, best_unscrambling, AssignmentScope, DEFAULT_ENUMERATION_CAP,
    PERFECT_CYCLES,
};

/// Squares kept green by [`FixedSquarePolicy::CornersAndCenter`].
pub const CORNERS_AND_CENTER: [usize; 5] = [1, 5, 11, 17, 21];

/// Search nodes allowed per grid fill attempt.
pub const GRID_NODE_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSquarePolicy {
    /// Corners and center always fixed, extra fixed squares at random.
    CornersAndCenter,
    /// Any fixed squares.
    FreeChoice,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Allowed realized green counts, inclusive.
    pub target_ng: (usize, usize),
    pub policy: FixedSquarePolicy,
    pub max_retries: u32,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            target_ng: (5, 8),
            policy: FixedSquarePolicy::CornersAndCenter,
            max_retries: 200,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<(), GenerateError> {
        let (lo, hi) = self.target_ng;
        if lo > hi {
            return Err(GenerateError::Config(format!("empty N_g range {lo}..{hi}")));
        }
        if lo < 1 || hi > 10 {
            return Err(GenerateError::Config(format!(
                "N_g range {lo}..{hi} not within 1..10"
            )));
        }
        if self.policy == FixedSquarePolicy::CornersAndCenter && hi < CORNERS_AND_CENTER.len() {
            return Err(GenerateError::Config(format!(
                "corners-and-center fixes 5 squares, N_g range {lo}..{hi} too low"
            )));
        }
        if self.max_retries == 0 {
            return Err(GenerateError::Config("max_retries must be positive".into()));
        }
        Ok(())
    }

    fn fixed_range(&self) -> (usize, usize) {
        let (lo, hi) = self.target_ng;
        match self.policy {
            FixedSquarePolicy::CornersAndCenter => (lo.max(CORNERS_AND_CENTER.len()), hi),
            FixedSquarePolicy::FreeChoice => (lo, hi),
        }
    }
}

/// The RNG for attempt `attempt` of a run seeded with `seed`.
pub fn attempt_rng(seed: u64, attempt: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng
}

struct GridIndex {
    words: Vec<Word>,
    by_first: HashMap<u8, Vec<Word>>,
    /// Keyed by letters at positions 0, 2, 4.
    by_odd: HashMap<[u8; 3], Vec<Word>>,
}

impl GridIndex {
    fn new(wl: &WordList) -> Self {
        let words: Vec<Word> = wl.iter().copied().collect();
        let mut by_first: HashMap<u8, Vec<Word>> = HashMap::new();
        let mut by_odd: HashMap<[u8; 3], Vec<Word>> = HashMap::new();
        for w in &words {
            by_first.entry(w.letter(0)).or_default().push(*w);
            by_odd
                .entry([w.letter(0), w.letter(2), w.letter(4)])
                .or_default()
                .push(*w);
        }
        GridIndex {
            words,
            by_first,
            by_odd,
        }
    }
}

struct Fill<'a, R: Rng> {
    index: &'a GridIndex,
    rng: &'a mut R,
    nodes: u64,
    /// H1, V1, V2, V3, H2, H3.
    chosen: Vec<Word>,
}

impl<R: Rng> Fill<'_, R> {
    fn candidates(&mut self) -> Vec<Word> {
        let c = &self.chosen;
        let list: &[Word] = match c.len() {
            0 => &self.index.words,
            1..=3 => {
                let first = c[0].letter(2 * (c.len() - 1));
                self.index.by_first.get(&first).map_or(&[], |v| v)
            }
            _ => {
                let row = 2 * (c.len() - 3);
                let key = [c[1].letter(row), c[2].letter(row), c[3].letter(row)];
                self.index.by_odd.get(&key).map_or(&[], |v| v)
            }
        };
        let mut out: Vec<Word> = list.iter().filter(|w| !c.contains(w)).copied().collect();
        out.shuffle(self.rng);
        out
    }

    fn run(&mut self) -> bool {
        if self.chosen.len() == 6 {
            return true;
        }
        for w in self.candidates() {
            if self.nodes >= GRID_NODE_BUDGET {
                return false;
            }
            self.nodes += 1;
            self.chosen.push(w);
            if self.run() {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Randomized backtracking fill with six distinct words. `None` when the
/// node budget runs out or no filling exists.
fn fill_grid<R: Rng>(index: &GridIndex, rng: &mut R) -> (Option<GridSolution>, u64) {
    let mut fill = Fill {
        index,
        rng,
        nodes: 0,
        chosen: Vec::with_capacity(6),
    };
    if !fill.run() {
        return (None, fill.nodes);
    }
    let c = &fill.chosen;
    let words = [(SlotId::H1, c[0]), (SlotId::V1, c[1]), (SlotId::V2, c[2]), (SlotId::V3, c[3]), (SlotId::H2, c[4]), (SlotId::H3, c[5])];
    let mut board = LetterBoard::from_letters(&"A".repeat(SQUARE_COUNT)).expect("valid board");
    for (slot, w) in words {
        for (sq, &l) in slot.squares().iter().zip(w.letters()) {
            board.set(*sq, l);
        }
    }
    (Some(GridSolution::from_board(board)), fill.nodes)
}

/// A grid of six distinct words from `wl`, found by randomized
/// backtracking driven by `rng`.
pub fn generate_solution_grid<R: Rng>(
    wl: &WordList,
    rng: &mut R,
) -> Result<GridSolution, GenerateError> {
    let index = GridIndex::new(wl);
    match fill_grid(&index, rng) {
        (Some(grid), _) => Ok(grid),
        (None, nodes) => Err(GenerateError::NoGrid { attempts: 1, nodes }),
    }
}

/// Why one scramble attempt was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Reject {
    NgOutOfRange,
    Degenerate,
}

/// Partitions of `m` into exactly `r` parts, each at least 2, as
/// non-increasing sequences.
pub fn cycle_type_partitions(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, r: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            if m == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let hi = max.min(m.saturating_sub(2 * (r - 1)));
        for part in (2..=hi).rev() {
            prefix.push(part);
            go(m - part, r - 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, r, m, &mut Vec::new(), &mut out);
    out
}

/// A random permutation of the squares with exactly eleven cycles whose
/// fixed points follow the policy.
fn random_eleven_cycle<R: Rng>(cfg: &GeneratorConfig, rng: &mut R) -> Permutation {
    let (lo, hi) = cfg.fixed_range();
    let n_fixed = rng.random_range(lo..=hi);
    let mut fixed: Vec<usize> = Vec::new();
    let mut free: Vec<usize> = (1..=SQUARE_COUNT).collect();
    if cfg.policy == FixedSquarePolicy::CornersAndCenter {
        fixed.extend(CORNERS_AND_CENTER);
        free.retain(|s| !CORNERS_AND_CENTER.contains(s));
    }
    free.shuffle(rng);
    let extra = n_fixed - fixed.len();
    fixed.extend(free.drain(..extra));

    let mut shapes = cycle_type_partitions(free.len(), PERFECT_CYCLES - n_fixed);
    let parts = shapes.swap_remove(rng.random_range(0..shapes.len()));
    free.shuffle(rng);
    let mut cycles = Vec::with_capacity(parts.len());
    let mut rest = &free[..];
    for len in parts {
        let (cycle, tail) = rest.split_at(len);
        cycles.push(cycle.to_vec());
        rest = tail;
    }
    Permutation::from_cycles(SQUARE_COUNT, &cycles).expect("disjoint cycles")
}

/// The board whose letter on `s` belongs at `g(s)`.
pub fn scramble_by(solution: &LetterBoard, g: &Permutation) -> LetterBoard {
    let mut out = *solution;
    for s in SquareId::all() {
        let t = SquareId::new(g.apply(s.get())).expect("permutation on 21 squares");
        out.set(s, solution.get(t));
    }
    out
}

fn try_scramble<R: Rng>(
    solution: &LetterBoard,
    cfg: &GeneratorConfig,
    rng: &mut R,
) -> Result<(LetterBoard, Permutation), Reject> {
    let g = random_eleven_cycle(cfg, rng);
    let scrambled = scramble_by(solution, &g);
    let colors = color_board(&scrambled, solution);
    // Repeated letters may make extra squares green or open up an
    // unscrambling with more than eleven cycles.
    if color_counts(&colors).green != g.fixed_points().len() {
        return Err(Reject::Degenerate);
    }
    let best = best_unscrambling(&scrambled, solution).expect("same letters");
    if best.cycle_count != PERFECT_CYCLES {
        return Err(Reject::Degenerate);
    }
    let n_green = color_counts(&colors).green;
    let (lo, hi) = cfg.target_ng;
    if n_green < lo || n_green > hi {
        return Err(Reject::NgOutOfRange);
    }
    Ok((scrambled, g))
}

/// Scrambles `solution` by a random eleven-cycle permutation. Returns the
/// scrambled board and the permutation `g` with
/// `solution[g(s)] == scrambled[s]`.
pub fn scramble_solution<R: Rng>(
    solution: &LetterBoard,
    cfg: &GeneratorConfig,
    rng: &mut R,
) -> Result<(LetterBoard, Permutation), GenerateError> {
    cfg.validate()?;
    for _ in 0..cfg.max_retries {
        if let Ok(out) = try_scramble(solution, cfg, rng) {
            return Ok(out);
        }
    }
    Err(GenerateError::NoScramble(cfg.max_retries))
}

/// Generates a puzzle with a unique solution under `wl` that is solvable
/// in exactly ten swaps and not classified hard.
pub fn generate_puzzle(cfg: &GeneratorConfig, wl: &WordList) -> Result<Puzzle, GenerateError> {
    cfg.validate()?;
    let index = GridIndex::new(wl);
    let mut no_grid = 0;
    let mut ng_out_of_range = 0;
    let mut degenerate = 0;
    let mut non_unique = 0;
    let mut too_hard = 0;
    for attempt in 0..cfg.max_retries {
        let mut rng = attempt_rng(cfg.seed, attempt);
        let Some(grid) = fill_grid(&index, &mut rng).0 else {
            no_grid += 1;
            continue;
        };
        let solution = *grid.board();
        let scrambled = match try_scramble(&solution, cfg, &mut rng) {
            Ok((scrambled, _)) => scrambled,
            Err(Reject::NgOutOfRange) => {
                ng_out_of_range += 1;
                continue;
            }
            Err(Reject::Degenerate) => {
                degenerate += 1;
                continue;
            }
        };
        let colors = color_board(&scrambled, &solution);
        let report = uniqueness_report(&scrambled, &colors, wl);
        if !report.is_unique() {
            non_unique += 1;
            continue;
        }
        let perfect = match assignments_with_cycle_count_in(
            &scrambled,
            &solution,
            PERFECT_CYCLES,
            AssignmentScope::NonGreen,
            DEFAULT_ENUMERATION_CAP,
        ) {
            Ok(n) => PerfectCount::Known(n),
            Err(UnscrambleError::CapExceeded { .. }) => PerfectCount::CapExceeded,
            Err(_) => unreachable!("boards share letters"),
        };
        let class_count = nongreen_multiplicity_count(&scrambled, &colors);
        if classify(color_counts(&colors).green, &class_count, &perfect) == Classification::Hard {
            too_hard += 1;
            continue;
        }
        return Ok(Puzzle {
            scrambled,
            colors: Some(colors),
            solution: Some(solution),
        });
    }
    Err(GenerateError::Exhausted {
        attempts: cfg.max_retries,
        no_grid,
        ng_out_of_range,
        degenerate,
        non_unique,
        too_hard,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::swap_count;

    #[test]
    fn partitions_into_parts_of_two_or_more() {
        assert_eq!(cycle_type_partitions(14, 4).len(), 9);
        assert_eq!(cycle_type_partitions(4, 2), vec![vec![2, 2]]);
        assert_eq!(cycle_type_partitions(20, 10), vec![vec![2; 10]]);
        assert!(cycle_type_partitions(5, 3).is_empty());
        for p in cycle_type_partitions(16, 6) {
            assert_eq!(p.iter().sum::<usize>(), 16);
            assert!(p.iter().all(|&x| x >= 2));
        }
    }

    #[test]
    fn config_validation() {
        assert!(GeneratorConfig::default().validate().is_ok());
        let bad = |lo, hi, policy| GeneratorConfig {
            target_ng: (lo, hi),
            policy,
            ..GeneratorConfig::default()
        };
        assert!(bad(21, 21, FixedSquarePolicy::FreeChoice).validate().is_err());
        assert!(bad(0, 3, FixedSquarePolicy::FreeChoice).validate().is_err());
        assert!(bad(2, 4, FixedSquarePolicy::CornersAndCenter).validate().is_err());
        assert!(bad(2, 4, FixedSquarePolicy::FreeChoice).validate().is_ok());
        assert!(bad(6, 5, FixedSquarePolicy::FreeChoice).validate().is_err());
    }

    #[test]
    fn random_permutations_have_eleven_cycles() {
        let cfg = GeneratorConfig::default();
        let mut rng = attempt_rng(7, 0);
        for _ in 0..200 {
            let g = random_eleven_cycle(&cfg, &mut rng);
            assert_eq!(g.cycle_count(), 11);
            assert_eq!(swap_count(&g), 10);
            for s in CORNERS_AND_CENTER {
                assert_eq!(g.apply(s), s);
            }
        }
    }

    #[test]
    fn six_word_list_fills_uniquely() {
        let wl = WordList::from_strs("fig", &["SNARL", "UNDID", "FORCE", "SNUFF", "AIDER", "LEDGE"]);
        let mut rng = attempt_rng(1, 0);
        let grid = generate_solution_grid(&wl, &mut rng).unwrap();
        let mut words: Vec<String> = grid.words().iter().map(|w| w.to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["AIDER", "FORCE", "LEDGE", "SNARL", "SNUFF", "UNDID"]);
    }

    #[test]
    fn no_filling_is_reported() {
        let wl = WordList::from_strs("t", &["ABCDE", "FGHIJ", "KLMNO", "PQRST", "UVWXY", "ZZZZZ"]);
        let mut rng = attempt_rng(1, 0);
        assert!(matches!(
            generate_solution_grid(&wl, &mut rng),
            Err(GenerateError::NoGrid { .. })
        ));
    }
}
