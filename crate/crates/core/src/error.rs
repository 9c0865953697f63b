use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation on zero points")]
    Empty,
    #[error("point {point} outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("swap ({0},{0}) exchanges a point with itself")]
    DegenerateSwap(usize),
    #[error("permutation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("malformed cycle notation: {0:?}")]
    Syntax(String),
    #[error("BFS oracle limited to n <= {max}, got n = {n}")]
    OracleTooLarge { n: usize, max: usize },
    #[error("{k} disjoint 2-cycles need {} points, only {n} available", 2 * .k)]
    TooManyTwoCycles { n: usize, k: usize },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialParts { n: usize, sum: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("square id {0} outside 1..=21")]
    SquareOutOfRange(usize),
    #[error("cell ({row},{col}) outside the 5x5 grid")]
    CellOutOfRange { row: usize, col: usize },
    #[error("expected 5 lines, found {0}")]
    LineCount(usize),
    #[error("line {line}: expected 5 characters, found {len}")]
    LineLength { line: usize, len: usize },
    #[error("cell ({row},{col}) is a hole and must be '.', found {found:?}")]
    LetterAtHole { row: usize, col: usize, found: char },
    #[error("cell ({row},{col}): invalid character {found:?}")]
    InvalidChar { row: usize, col: usize, found: char },
    #[error("puzzle file: {0}")]
    Stanza(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("{source_name}:{line}: {word:?} is not a 5-letter word")]
    MalformedWord {
        source_name: String,
        line: usize,
        word: String,
    },
    #[error("cannot read word list {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("slot {slot}: letter {letter} is both required and excluded")]
    Infeasible { slot: String, letter: char },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnscrambleError {
    /// Letters whose counts differ, with (scrambled, solution) counts.
    #[error("boards hold different letters: {}", format_mismatch(.0))]
    MultisetMismatch(Vec<(char, usize, usize)>),
    #[error("{count} class bijections exceed the enumeration cap {cap}")]
    CapExceeded { count: String, cap: u64 },
}

fn format_mismatch(diff: &[(char, usize, usize)]) -> String {
    diff.iter()
        .map(|(c, a, b)| format!("{c} {a} vs {b}"))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("swaps used must be at least 10, got {0}")]
    TooFewSwaps(u32),
    #[error("unknown count shape {0:?}")]
    UnknownShape(String),
    #[error("puzzle needs a color stanza or a solution")]
    MissingColors,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Unscramble(#[from] UnscrambleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generator config: {0}")]
    Config(String),
    #[error("no grid filling found after {attempts} attempts ({nodes} search nodes)")]
    NoGrid { attempts: u32, nodes: u64 },
    #[error("scramble failed after {0} attempts")]
    NoScramble(u32),
    #[error(
        "gave up after {attempts} attempts: {no_grid} without grid, {ng_out_of_range} N_g out of range, \
         {degenerate} degenerate scrambles, {non_unique} non-unique, {too_hard} too hard"
    )]
    Exhausted {
        attempts: u32,
        no_grid: u32,
        ng_out_of_range: u32,
        degenerate: u32,
        non_unique: u32,
        too_hard: u32,
    },
}
