//! Difficulty diagnostics for a puzzle: color counts, how many letter-class
//! bijections a solver faces, how many of them are perfect, and a rough
//! heuristic classification.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::board::{Color, ColorBoard, LetterBoard, Puzzle, SquareId};
use crate::coloring::{color_board, color_counts};
use crate::corpus::WordList;
use crate::error::AnalyzeError;
use crate::perm::{
    average_cycle_count, format_decimal, k_disjoint_2cycle_count, log10, multinomial,
};
use crate::solver::{solve_grid, DEFAULT_MAX_SOLUTIONS};
use crate::unscramble::{
    best_unscrambling, multiplicity_product, assignments_with_cycle_count_in, AssignmentScope,
    DEFAULT_ENUMERATION_CAP, PERFECT_CYCLES,
};
use crate::error::UnscrambleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Easy,
    Goldilocks,
    Hard,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Easy => "easy",
            Classification::Goldilocks => "goldilocks",
            Classification::Hard => "hard",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of perfect class bijections, when it could be computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectCount {
    Known(BigUint),
    CapExceeded,
    /// No solution to count against.
    Unknown,
}

impl fmt::Display for PerfectCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerfectCount::Known(n) => write!(f, "{n}"),
            PerfectCount::CapExceeded => f.write_str("cap-exceeded"),
            PerfectCount::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifficultyReport {
    pub n_green: usize,
    pub n_yellow: usize,
    pub n_gray: usize,
    /// Π m! over letter multiplicities on the non-green squares.
    pub class_count: BigUint,
    pub perfect_count: PerfectCount,
    /// Solutions found under the word list, if one was given.
    pub solution_count: Option<usize>,
    /// Best cycle count over the class bijections, when a solution is known.
    pub max_cycles: Option<usize>,
    /// H_n for n non-green squares: the mean cycle count of a random
    /// permutation of them.
    pub baseline_avg_cycles: BigRational,
    /// Cycles a perfect unscrambling needs among the non-green squares.
    pub required_cycles: usize,
    pub classification: Option<Classification>,
}

impl DifficultyReport {
    pub fn non_green(&self) -> usize {
        self.n_yellow + self.n_gray
    }

    /// Aligned human-readable listing.
    pub fn render_text(&self) -> String {
        let rows = self.rows();
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out
    }

    /// One `key=value` per line.
    pub fn render_key_values(&self) -> String {
        self.key_values()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    fn rows(&self) -> Vec<(String, String)> {
        let n = self.non_green();
        vec![
            ("green".into(), self.n_green.to_string()),
            ("yellow".into(), self.n_yellow.to_string()),
            ("gray".into(), self.n_gray.to_string()),
            ("class bijections".into(), self.class_count.to_string()),
            ("perfect bijections".into(), self.perfect_count.to_string()),
            ("solutions".into(), opt(self.solution_count)),
            ("best cycles".into(), opt(self.max_cycles)),
            (
                format!("baseline H_{n}"),
                format_decimal(&self.baseline_avg_cycles, 4),
            ),
            (
                "required non-green cycles".into(),
                self.required_cycles.to_string(),
            ),
            (
                "classification (heuristic)".into(),
                self.classification
                    .map_or("withheld".to_string(), |c| c.to_string()),
            ),
        ]
    }

    fn key_values(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n_green", self.n_green.to_string()),
            ("n_yellow", self.n_yellow.to_string()),
            ("n_gray", self.n_gray.to_string()),
            ("class_count", self.class_count.to_string()),
            ("perfect_count", self.perfect_count.to_string()),
            ("solution_count", opt(self.solution_count)),
            ("max_cycles", opt(self.max_cycles)),
            ("baseline_n", self.non_green().to_string()),
            ("baseline_avg_cycles", format_decimal(&self.baseline_avg_cycles, 4)),
            ("required_cycles", self.required_cycles.to_string()),
            (
                "classification",
                self.classification
                    .map_or("withheld".to_string(), |c| c.to_string()),
            ),
        ]
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

/// Analyzes a puzzle. Colors come from the puzzle, or from the solution
/// when absent. Without a solution stanza the word list, if any, is used
/// to look for one; an unsolvable puzzle gets no classification.
pub fn analyze(puzzle: &Puzzle, wl: Option<&WordList>) -> Result<DifficultyReport, AnalyzeError> {
    let colors = match (&puzzle.colors, &puzzle.solution) {
        (Some(c), _) => *c,
        (None, Some(sol)) => color_board(&puzzle.scrambled, sol),
        (None, None) => return Err(AnalyzeError::MissingColors),
    };
    let counts = color_counts(&colors);
    let class_count = nongreen_multiplicity_count(&puzzle.scrambled, &colors);
    let non_green = counts.yellow + counts.gray;

    let mut solution_count = None;
    let mut solution = puzzle.solution;
    if let Some(wl) = wl {
        let found = solve_grid(&puzzle.scrambled, &colors, wl, DEFAULT_MAX_SOLUTIONS);
        solution_count = Some(found.len());
        if solution.is_none() {
            solution = found.first().map(|s| *s.board());
        }
    }

    let (perfect_count, max_cycles) = match &solution {
        None => (PerfectCount::Unknown, None),
        Some(sol) => {
            let best = best_unscrambling(&puzzle.scrambled, sol)?;
            let perfect = match assignments_with_cycle_count_in(
                &puzzle.scrambled,
                sol,
                PERFECT_CYCLES,
                AssignmentScope::NonGreen,
                DEFAULT_ENUMERATION_CAP,
            ) {
                Ok(n) => PerfectCount::Known(n),
                Err(UnscrambleError::CapExceeded { .. }) => PerfectCount::CapExceeded,
                Err(e) => return Err(e.into()),
            };
            (perfect, Some(best.cycle_count))
        }
    };

    let classification = if solution.is_none() {
        None
    } else {
        Some(classify(counts.green, &class_count, &perfect_count))
    };

    Ok(DifficultyReport {
        n_green: counts.green,
        n_yellow: counts.yellow,
        n_gray: counts.gray,
        class_count,
        perfect_count,
        solution_count,
        max_cycles,
        baseline_avg_cycles: average_cycle_count(non_green),
        required_cycles: PERFECT_CYCLES.saturating_sub(counts.green),
        classification,
    })
}

/// Heuristic thresholds. Hard is tested first: a board with almost no
/// greens is hard even when its letters happen to be all distinct.
pub fn classify(n_green: usize, class_count: &BigUint, perfect: &PerfectCount) -> Classification {
    if n_green <= 2 || *perfect == PerfectCount::CapExceeded {
        Classification::Hard
    } else if n_green >= 9 || class_count.is_one() {
        Classification::Easy
    } else {
        Classification::Goldilocks
    }
}

/// Π m! over letter multiplicities on the non-green squares. Only the
/// scrambled board is needed: its non-green letters are the solution's.
pub fn nongreen_multiplicity_count(scrambled: &LetterBoard, colors: &ColorBoard) -> BigUint {
    let mut counts = [0usize; 26];
    for s in SquareId::all() {
        if colors.get(s) != Color::Green {
            counts[(scrambled.get(s) - b'A') as usize] += 1;
        }
    }
    multiplicity_product(&counts)
}

/// Points left after a game finished with `swaps_used` swaps: five for a
/// perfect game, one fewer per extra swap, never below zero.
pub fn score_for_swaps(swaps_used: u32) -> Result<u32, AnalyzeError> {
    if swaps_used < 10 {
        return Err(AnalyzeError::TooFewSwaps(swaps_used));
    }
    Ok(5u32.saturating_sub(swaps_used - 10))
}

/// Count shapes for [`hardness_count_reference`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountShape {
    /// Permutations made of exactly `k` disjoint 2-cycles.
    TwoCycles(usize),
    /// Ways to split the points into labelled groups of these sizes.
    Multinomial(Vec<usize>),
}

impl FromStr for CountShape {
    type Err = AnalyzeError;

    /// Accepts `ten-2-cycles`, `2-cycles:K` and `multinomial:A,B,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || AnalyzeError::UnknownShape(s.to_string());
        let s = s.trim();
        if s == "ten-2-cycles" {
            return Ok(CountShape::TwoCycles(10));
        }
        if let Some(k) = s.strip_prefix("2-cycles:") {
            return k.parse().map(CountShape::TwoCycles).map_err(|_| unknown());
        }
        if let Some(parts) = s.strip_prefix("multinomial:") {
            let parts: Result<Vec<usize>, _> = parts.split(',').map(|p| p.trim().parse()).collect();
            return parts.map(CountShape::Multinomial).map_err(|_| unknown());
        }
        Err(unknown())
    }
}

pub fn hardness_count_reference(n: usize, shape: &CountShape) -> Result<BigUint, AnalyzeError> {
    Ok(match shape {
        CountShape::TwoCycles(k) => k_disjoint_2cycle_count(n, *k)?,
        CountShape::Multinomial(parts) => multinomial(n, parts)?,
    })
}

/// `log10` of a reference count, for display.
pub fn hardness_log10(n: usize, shape: &CountShape) -> Result<f64, AnalyzeError> {
    Ok(log10(&hardness_count_reference(n, shape)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::factorial;

    fn puzzle(scr: &str, sol: &str) -> Puzzle {
        let mut p = Puzzle::new(LetterBoard::from_letters(scr).unwrap());
        p.solution = Some(LetterBoard::from_letters(sol).unwrap());
        p
    }

    #[test]
    fn scores() {
        assert_eq!(score_for_swaps(10).unwrap(), 5);
        assert_eq!(score_for_swaps(12).unwrap(), 3);
        assert_eq!(score_for_swaps(15).unwrap(), 0);
        assert_eq!(score_for_swaps(40).unwrap(), 0);
        assert_eq!(score_for_swaps(9), Err(AnalyzeError::TooFewSwaps(9)));
    }

    #[test]
    fn game_two_report() {
        let p = puzzle("SCGOLNNDINDEERIUFFARE", "SNARLNIEUNDIDFEGFORCE");
        let r = analyze(&p, None).unwrap();
        assert_eq!((r.n_green, r.non_green()), (7, 14));
        assert_eq!(r.class_count, BigUint::from(8u32));
        assert_eq!(r.perfect_count, PerfectCount::Known(BigUint::from(1u32)));
        assert_eq!(r.max_cycles, Some(11));
        assert_eq!(r.required_cycles, 4);
        assert_eq!(r.solution_count, None);
        assert_eq!(r.classification, Some(Classification::Goldilocks));
        let kv = r.render_key_values();
        assert!(kv.contains("class_count=8\n"));
        assert!(kv.contains("classification=goldilocks\n"));
        assert!(r.render_text().contains("classification (heuristic)  goldilocks"));
    }

    #[test]
    fn five_and_two_multiplicities() {
        // Non-green letters AAAAABB + distinct rest.
        assert_eq!(multiplicity_product(&[5, 2, 1, 1]), BigUint::from(240u32));
    }

    #[test]
    fn missing_colors() {
        let p = Puzzle::new(LetterBoard::from_letters("SCGOLNNDINDEERIUFFARE").unwrap());
        assert_eq!(analyze(&p, None), Err(AnalyzeError::MissingColors));
    }

    #[test]
    fn reference_counts() {
        let ten = hardness_count_reference(20, &"ten-2-cycles".parse().unwrap()).unwrap();
        let oracle = factorial(20) / (BigUint::from(1024u32) * factorial(10));
        assert_eq!(ten, oracle);
        let m: CountShape = "multinomial:10,8,3".parse().unwrap();
        assert_eq!(
            hardness_count_reference(21, &m).unwrap(),
            factorial(21) / (factorial(10) * factorial(8) * factorial(3))
        );
        assert_eq!(
            hardness_count_reference(21, &"multinomial:21".parse().unwrap()).unwrap(),
            BigUint::from(1u32)
        );
        assert!("zigzag".parse::<CountShape>().is_err());
    }

    #[test]
    fn classification_order() {
        let one = BigUint::from(1u32);
        let known = PerfectCount::Known(one.clone());
        assert_eq!(classify(1, &one, &known), Classification::Hard);
        assert_eq!(classify(9, &BigUint::from(8u32), &known), Classification::Easy);
        assert_eq!(classify(5, &one, &known), Classification::Easy);
        assert_eq!(
            classify(6, &BigUint::from(8u32), &PerfectCount::CapExceeded),
            Classification::Hard
        );
        assert_eq!(classify(6, &BigUint::from(8u32), &known), Classification::Goldilocks);
    }
}
