//! Modelling, solving, unscrambling and generating Waffle puzzles.
//!
//! Squares are numbered 1..=21 in reading order. Permutations act on
//! 1-based points; an unscrambling `g` sends the letter on square `s` to
//! square `g(s)`.

pub mod board;
pub mod coloring;
pub mod corpus;
pub mod difficulty;
pub mod error;
pub mod generator;
pub mod perm;
pub mod solver;
pub mod unscramble;

pub use board::{Color, ColorBoard, LetterBoard, Puzzle, SlotId, SquareId};
pub use coloring::{color_board, color_counts, ColorCounts};
pub use corpus::{load_word_list, swappable_words, Word, WordList};
pub use difficulty::{analyze, score_for_swaps, Classification, DifficultyReport};
pub use error::{
    AnalyzeError, BoardError, CorpusError, GenerateError, PermError, SolveError, UnscrambleError,
};
pub use generator::{generate_puzzle, FixedSquarePolicy, GeneratorConfig};
pub use perm::{decompose, swap_distance, Permutation, SwapPlan};
pub use solver::{solve_grid, uniqueness_report, GridSolution, UniquenessReport};
pub use unscramble::{best_unscrambling, verify_plan, UnscramblingResult};
pub use num_bigint::BigUint;
