//! From a scrambled board and its solution to a square permutation with as
//! many cycles as possible, and from there to a swap plan.
//!
//! An unscrambling is a permutation `g` of the squares with
//! `solution[g(s)] == scrambled[s]`: the letter on `s` travels to `g(s)`.
//! Repeated letters make `g` ambiguous; among all such class bijections we
//! want one with the most cycles, since it needs the fewest swaps.
//!
//! # Search
//!
//! Squares are assigned in increasing order, each to one of the still
//! unused targets holding its letter, smallest target first. The partial
//! map is a set of closed cycles plus open chains. A chain from head `h`
//! to tail `t` behaves like a single edge `solution[h] -> scrambled[t]` in
//! a letter multigraph, and every completion is a cycle decomposition of
//! that multigraph. With `E` open chains, `L` of them loops and `P`
//! disjoint opposite-edge pairs available, a decomposition into 1-cycles,
//! 2-cycles and longer ones has at most `(E + 2L + P) / 3` cycles, which
//! bounds what the branch can still reach.
//!
//! Green squares are fixed up front: moving a green square merges its
//! 1-cycle into another cycle, so no optimum does it. The target cycle
//! count starts at the root bound and decreases until a completion reaching
//! it exists. The first such completion in search order is the optimum with
//! the lexicographically smallest image.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::board::{LetterBoard, SquareId, SQUARE_COUNT};
use crate::error::UnscrambleError;
use crate::perm::{factorial, transposition_plan, Permutation, SwapPlan};

/// Cycle count of a perfect (exactly ten swap) unscrambling.
pub const PERFECT_CYCLES: usize = 11;
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterClass {
    pub letter: u8,
    /// Squares holding the letter on the scrambled board.
    pub sources: Vec<SquareId>,
    /// Squares holding the letter in the solution.
    pub targets: Vec<SquareId>,
}

impl LetterClass {
    pub fn multiplicity(&self) -> usize {
        self.sources.len()
    }
}

/// Letter classes of a (scrambled, solution) pair, sorted by letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterClassStructure {
    classes: Vec<LetterClass>,
}

impl LetterClassStructure {
    pub fn new(scrambled: &LetterBoard, solution: &LetterBoard) -> Result<Self, UnscrambleError> {
        check_multiset(scrambled, solution)?;
        let mut classes: Vec<LetterClass> = Vec::new();
        for letter in b'A'..=b'Z' {
            let sources: Vec<SquareId> =
                SquareId::all().filter(|&s| scrambled.get(s) == letter).collect();
            if sources.is_empty() {
                continue;
            }
            let targets = SquareId::all().filter(|&s| solution.get(s) == letter).collect();
            classes.push(LetterClass {
                letter,
                sources,
                targets,
            });
        }
        Ok(LetterClassStructure { classes })
    }

    pub fn classes(&self) -> &[LetterClass] {
        &self.classes
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(LetterClass::multiplicity).collect()
    }
}

fn check_multiset(scrambled: &LetterBoard, solution: &LetterBoard) -> Result<(), UnscrambleError> {
    let a = scrambled.letter_counts();
    let b = solution.letter_counts();
    let diff: Vec<(char, usize, usize)> = (0..26)
        .filter(|&i| a[i] != b[i])
        .map(|i| ((b'A' + i as u8) as char, a[i], b[i]))
        .collect();
    if diff.is_empty() {
        Ok(())
    } else {
        Err(UnscrambleError::MultisetMismatch(diff))
    }
}

/// Product of factorials of the given multiplicities.
pub fn multiplicity_product(multiplicities: &[usize]) -> BigUint {
    multiplicities
        .iter()
        .fold(BigUint::from(1u32), |acc, &m| acc * factorial(m))
}

/// Number of permutations `g` with `solution[g(s)] == scrambled[s]`.
pub fn class_bijection_count(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
) -> Result<BigUint, UnscrambleError> {
    let classes = LetterClassStructure::new(scrambled, solution)?;
    Ok(multiplicity_product(&classes.multiplicities()))
}

/// Same count with green squares held fixed: the product of `m!` over
/// letter multiplicities among the non-green squares.
pub fn nongreen_class_bijection_count(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
) -> Result<BigUint, UnscrambleError> {
    check_multiset(scrambled, solution)?;
    let mut counts = [0usize; 26];
    for s in SquareId::all() {
        if scrambled.get(s) != solution.get(s) {
            counts[(scrambled.get(s) - b'A') as usize] += 1;
        }
    }
    Ok(multiplicity_product(&counts))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnscramblingResult {
    pub permutation: Permutation,
    pub cycle_count: usize,
    pub swap_plan: SwapPlan,
    /// Exactly eleven cycles, i.e. exactly ten swaps.
    pub perfect: bool,
}

impl UnscramblingResult {
    pub fn swap_count(&self) -> usize {
        self.swap_plan.len()
    }
}

pub fn best_unscrambling(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
) -> Result<UnscramblingResult, UnscrambleError> {
    check_multiset(scrambled, solution)?;
    let mut search = Search::new(scrambled, solution, true);
    let root_bound = search.bound();
    let mut target = root_bound;
    let image = loop {
        if let Some(image) = search.first_reaching(target) {
            break image;
        }
        // Every bijection has at least one cycle, so this terminates.
        target -= 1;
    };
    let permutation = Permutation::from_image(image).expect("search builds a bijection");
    let cycle_count = permutation.cycle_count();
    let swap_plan = transposition_plan(&permutation);
    Ok(UnscramblingResult {
        perfect: cycle_count == PERFECT_CYCLES,
        permutation,
        cycle_count,
        swap_plan,
    })
}

/// Which class bijections an enumeration ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentScope {
    /// Every class bijection of the board.
    AllSquares,
    /// Green squares fixed; only the non-green squares move.
    NonGreen,
}

/// `histogram[k]` is the number of class bijections in scope with exactly
/// `k` cycles, `k` in `0..=21`. Enumerates, so the bijection count must not
/// exceed `cap`.
pub fn cycle_count_histogram(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
    scope: AssignmentScope,
    cap: u64,
) -> Result<Vec<BigUint>, UnscrambleError> {
    let total = match scope {
        AssignmentScope::AllSquares => class_bijection_count(scrambled, solution)?,
        AssignmentScope::NonGreen => nongreen_class_bijection_count(scrambled, solution)?,
    };
    if total > BigUint::from(cap) {
        return Err(UnscrambleError::CapExceeded {
            count: total.to_string(),
            cap,
        });
    }
    let mut search = Search::new(scrambled, solution, scope == AssignmentScope::NonGreen);
    let mut histogram = vec![0u64; SQUARE_COUNT + 1];
    search.enumerate(0, &mut histogram);
    Ok(histogram.into_iter().map(BigUint::from).collect())
}

/// Number of class bijections (all squares) with exactly `k` cycles.
pub fn assignments_with_cycle_count(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
    k: usize,
) -> Result<BigUint, UnscrambleError> {
    assignments_with_cycle_count_in(
        scrambled,
        solution,
        k,
        AssignmentScope::AllSquares,
        DEFAULT_ENUMERATION_CAP,
    )
}

pub fn assignments_with_cycle_count_in(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
    k: usize,
    scope: AssignmentScope,
    cap: u64,
) -> Result<BigUint, UnscrambleError> {
    let histogram = cycle_count_histogram(scrambled, solution, scope, cap)?;
    Ok(histogram.get(k).cloned().unwrap_or_else(BigUint::zero))
}

/// The board after applying the swaps in order.
pub fn apply_plan(board: &LetterBoard, plan: &SwapPlan) -> Option<LetterBoard> {
    let mut out = *board;
    for &(a, b) in plan.swaps() {
        out.swap(SquareId::new(a).ok()?, SquareId::new(b).ok()?);
    }
    Some(out)
}

/// Whether the swaps, applied in order, turn `scrambled` into `solution`.
pub fn verify_plan(scrambled: &LetterBoard, solution: &LetterBoard, plan: &SwapPlan) -> bool {
    apply_plan(scrambled, plan).is_some_and(|b| b == *solution)
}

/// Partial class bijection with chain bookkeeping.
struct Search {
    scrambled: [u8; SQUARE_COUNT],
    solution: [u8; SQUARE_COUNT],
    /// Squares still to assign, increasing.
    order: Vec<usize>,
    /// Candidate targets per square, increasing.
    targets: Vec<Vec<usize>>,
    image: [usize; SQUARE_COUNT],
    used: [bool; SQUARE_COUNT],
    /// For a chain tail, its head; for a chain head, its tail.
    head_of: [usize; SQUARE_COUNT],
    tail_of: [usize; SQUARE_COUNT],
    closed: usize,
}

const UNSET: usize = usize::MAX;

impl Search {
    fn new(scrambled: &LetterBoard, solution: &LetterBoard, fix_greens: bool) -> Self {
        let scrambled = *scrambled.letters();
        let solution = *solution.letters();
        let mut search = Search {
            scrambled,
            solution,
            order: Vec::new(),
            targets: vec![Vec::new(); SQUARE_COUNT],
            image: [UNSET; SQUARE_COUNT],
            used: [false; SQUARE_COUNT],
            head_of: std::array::from_fn(|i| i),
            tail_of: std::array::from_fn(|i| i),
            closed: 0,
        };
        for s in 0..SQUARE_COUNT {
            if fix_greens && scrambled[s] == solution[s] {
                search.image[s] = s;
                search.used[s] = true;
                search.closed += 1;
            } else {
                search.order.push(s);
            }
        }
        for &s in &search.order {
            search.targets[s] = search
                .order
                .iter()
                .copied()
                .filter(|&t| solution[t] == scrambled[s])
                .collect();
        }
        search
    }

    /// Assigns `s -> t`; returns the undo record.
    fn assign(&mut self, s: usize, t: usize) -> (usize, usize, bool) {
        self.image[s] = t;
        self.used[t] = true;
        let head = self.head_of[s];
        let tail = self.tail_of[t];
        if head == t {
            self.closed += 1;
            (head, tail, true)
        } else {
            self.tail_of[head] = tail;
            self.head_of[tail] = head;
            (head, tail, false)
        }
    }

    fn unassign(&mut self, s: usize, t: usize, (head, tail, closed): (usize, usize, bool)) {
        self.image[s] = UNSET;
        self.used[t] = false;
        if closed {
            self.closed -= 1;
        } else {
            // Restore the two chains head..s and t..tail.
            self.tail_of[head] = s;
            self.head_of[s] = head;
            self.head_of[tail] = t;
            self.tail_of[t] = tail;
        }
    }

    /// Upper bound on the cycle count of any completion.
    fn bound(&self) -> usize {
        let mut edges = [[0u8; 26]; 26];
        let mut open = 0usize;
        let mut loops = 0usize;
        for &s in &self.order {
            // Open chain tails are exactly the unassigned squares.
            if self.image[s] != UNSET {
                continue;
            }
            let head = self.head_of[s];
            let from = (self.solution[head] - b'A') as usize;
            let to = (self.scrambled[s] - b'A') as usize;
            open += 1;
            if from == to {
                loops += 1;
            } else {
                edges[from][to] += 1;
            }
        }
        let pairs: usize = (0..26)
            .flat_map(|a| (a + 1..26).map(move |b| (a, b)))
            .map(|(a, b)| edges[a][b].min(edges[b][a]) as usize)
            .sum();
        self.closed + (open + 2 * loops + pairs) / 3
    }

    fn first_reaching(&mut self, target: usize) -> Option<Vec<usize>> {
        if self.reach(0, target) {
            let image = self.image.iter().map(|&t| t + 1).collect();
            Some(image)
        } else {
            None
        }
    }

    /// Depth-first search for a completion with at least `target` cycles. On
    /// success the completed assignment is left in place.
    fn reach(&mut self, depth: usize, target: usize) -> bool {
        if depth == self.order.len() {
            return self.closed >= target;
        }
        if self.bound() < target {
            return false;
        }
        let s = self.order[depth];
        for i in 0..self.targets[s].len() {
            let t = self.targets[s][i];
            if self.used[t] {
                continue;
            }
            let undo = self.assign(s, t);
            if self.reach(depth + 1, target) {
                return true;
            }
            self.unassign(s, t, undo);
        }
        false
    }

    fn enumerate(&mut self, depth: usize, histogram: &mut [u64]) {
        if depth == self.order.len() {
            histogram[self.closed] += 1;
            return;
        }
        let s = self.order[depth];
        for i in 0..self.targets[s].len() {
            let t = self.targets[s][i];
            if self.used[t] {
                continue;
            }
            let undo = self.assign(s, t);
            self.enumerate(depth + 1, histogram);
            self.unassign(s, t, undo);
        }
    }
}

/// Maximum cycle count reachable, computed by the branch-and-bound.
pub fn max_cycle_count(
    scrambled: &LetterBoard,
    solution: &LetterBoard,
) -> Result<usize, UnscrambleError> {
    Ok(best_unscrambling(scrambled, solution)?.cycle_count)
}

/// Sum of a histogram as a plain integer, for reporting.
pub fn histogram_total(histogram: &[BigUint]) -> u64 {
    histogram.iter().map(|v| v.to_u64().unwrap_or(u64::MAX)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::decompose;

    fn board(s: &str) -> LetterBoard {
        LetterBoard::from_letters(s).unwrap()
    }

    const GAME2_SCRAMBLED: &str = "SCGOLNNDINDEERIUFFARE";
    const GAME2_SOLUTION: &str = "SNARLNIEUNDIDFEGFORCE";

    #[test]
    fn solved_board_gives_identity() {
        let b = board(GAME2_SOLUTION);
        let r = best_unscrambling(&b, &b).unwrap();
        assert!(r.permutation.is_identity());
        assert_eq!(r.cycle_count, 21);
        assert!(r.swap_plan.is_empty());
        assert!(!r.perfect);
    }

    #[test]
    fn game_two_is_perfect() {
        let (scr, sol) = (board(GAME2_SCRAMBLED), board(GAME2_SOLUTION));
        let r = best_unscrambling(&scr, &sol).unwrap();
        assert_eq!(r.cycle_count, 11);
        assert!(r.perfect);
        assert_eq!(r.swap_count(), 10);
        assert!(verify_plan(&scr, &sol, &r.swap_plan));
        let mut lengths = decompose(&r.permutation).cycle_type();
        lengths.retain(|&l| l > 1);
        assert_eq!(lengths, vec![7, 3, 2, 2]);
    }

    #[test]
    fn counts_for_game_two() {
        let (scr, sol) = (board(GAME2_SCRAMBLED), board(GAME2_SOLUTION));
        assert_eq!(
            nongreen_class_bijection_count(&scr, &sol).unwrap(),
            BigUint::from(8u32)
        );
        // N3 E3 and R, I, D, F twice each.
        assert_eq!(
            class_bijection_count(&scr, &sol).unwrap(),
            BigUint::from(576u32)
        );
    }

    #[test]
    fn distinct_letters_have_one_bijection() {
        let sol = board("ABCDEFGHIJKLMNOPQRSTU");
        let scr = board("BACDEFGHIJKLMNOPQRSTU");
        assert_eq!(class_bijection_count(&scr, &sol).unwrap(), BigUint::from(1u32));
        assert_eq!(
            assignments_with_cycle_count(&scr, &sol, 20).unwrap(),
            BigUint::from(1u32)
        );
        assert!(assignments_with_cycle_count(&scr, &sol, 11)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn multiset_mismatch_is_reported() {
        let err = class_bijection_count(&board(GAME2_SCRAMBLED), &board("SNARLNIEUNDIDFEGFORCA"))
            .unwrap_err();
        assert_eq!(
            err,
            UnscrambleError::MultisetMismatch(vec![('A', 1, 2), ('E', 3, 2)])
        );
        assert!(best_unscrambling(&board(GAME2_SCRAMBLED), &board("SNARLNIEUNDIDFEGFORCA")).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let sol = board("MAMMAAAMMAMMAMMSAMASS");
        let scr = board("MMAAMMMSAMAASAAAMSMMM");
        let err = cycle_count_histogram(&scr, &sol, AssignmentScope::AllSquares, 1000).unwrap_err();
        assert!(matches!(err, UnscrambleError::CapExceeded { cap: 1000, .. }));
    }

    #[test]
    fn plans_must_be_exact() {
        let (scr, sol) = (board(GAME2_SCRAMBLED), board(GAME2_SOLUTION));
        assert!(!verify_plan(&scr, &sol, &SwapPlan::default()));
        let plan = best_unscrambling(&scr, &sol).unwrap().swap_plan;
        for i in 0..plan.len() {
            assert!(!verify_plan(&scr, &sol, &plan.without(i)));
        }
        let oob = SwapPlan::new(vec![(1, 22)]).unwrap();
        assert!(!verify_plan(&scr, &sol, &oob));
    }
}
