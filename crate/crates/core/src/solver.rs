//! Finding the six words: per-slot candidate lists from the coloring, then a
//! join over the slots that respects crossings and the letter multiset.
//!
//! Per-slot filters only prune. A completed grid is accepted when it uses
//! exactly the scrambled letters, all six words are listed, and recoloring
//! the scrambled board against it reproduces the given colors.

use std::fmt;

use crate::board::{Color, ColorBoard, LetterBoard, Parity, SlotId, SquareId, SQUARE_COUNT};
use crate::coloring::color_board;
use crate::corpus::{Word, WordList};
use crate::error::SolveError;

pub const DEFAULT_MAX_SOLUTIONS: usize = 8;

/// A set of uppercase letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LetterSet(u32);

impl LetterSet {
    pub const ALL: LetterSet = LetterSet((1 << 26) - 1);

    pub fn insert(&mut self, letter: u8) {
        self.0 |= bit(letter);
    }

    pub fn contains(self, letter: u8) -> bool {
        self.0 & bit(letter) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 & other.0)
    }

    pub fn union(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: LetterSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn of_word(word: &Word) -> LetterSet {
        let mut set = LetterSet::default();
        for &b in word.letters() {
            set.insert(b);
        }
        set
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..26u8).filter(move |i| self.0 & (1 << i) != 0).map(|i| b'A' + i)
    }
}

fn bit(letter: u8) -> u32 {
    1 << (letter - b'A')
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{}", c as char)?;
        }
        Ok(())
    }
}

/// What the coloring says about one slot's solution word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotConstraints {
    pub slot: SlotId,
    /// Green positions.
    pub fixed: [Option<u8>; 5],
    /// Letters that may not sit at each position (every non-green square
    /// holds a letter that is wrong for it).
    pub banned_at: [LetterSet; 5],
    /// Yellow letters on even squares: must occur in this word.
    pub required: LetterSet,
    /// Yellow letters on odd squares: must occur here or in the crossing
    /// word. Checked when the grid is complete.
    pub required_either: LetterSet,
    /// Gray letters: may not occur in this word.
    pub excluded: LetterSet,
}

impl SlotConstraints {
    pub fn unconstrained(slot: SlotId) -> Self {
        SlotConstraints {
            slot,
            fixed: [None; 5],
            banned_at: [LetterSet::default(); 5],
            required: LetterSet::default(),
            required_either: LetterSet::default(),
            excluded: LetterSet::default(),
        }
    }

    pub fn admits(&self, word: &Word) -> bool {
        for pos in 0..5 {
            let letter = word.letter(pos);
            if let Some(f) = self.fixed[pos] {
                if f != letter {
                    return false;
                }
            }
            if self.banned_at[pos].contains(letter) {
                return false;
            }
        }
        let letters = LetterSet::of_word(word);
        self.required.is_subset(letters) && self.excluded.intersection(letters).is_empty()
    }
}

pub fn slot_constraints(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    slot: SlotId,
) -> Result<SlotConstraints, SolveError> {
    let mut c = SlotConstraints::unconstrained(slot);
    let mut present = LetterSet::default();
    for (pos, square) in slot.squares().into_iter().enumerate() {
        let letter = scrambled.get(square);
        match colors.get(square) {
            Color::Green => {
                c.fixed[pos] = Some(letter);
                present.insert(letter);
            }
            Color::Yellow => {
                c.banned_at[pos].insert(letter);
                match square.parity() {
                    Parity::Even => {
                        c.required.insert(letter);
                        present.insert(letter);
                    }
                    Parity::Odd => c.required_either.insert(letter),
                }
            }
            Color::Gray => {
                c.banned_at[pos].insert(letter);
                c.excluded.insert(letter);
            }
        }
    }
    if let Some(letter) = c.excluded.intersection(present).iter().next() {
        return Err(SolveError::Infeasible {
            slot: slot.name().to_string(),
            letter: letter as char,
        });
    }
    Ok(c)
}

/// Listed words admitted by the constraints, sorted.
pub fn candidate_words(wl: &WordList, c: &SlotConstraints) -> Vec<Word> {
    // BTreeSet iteration is already sorted.
    wl.iter().filter(|w| c.admits(w)).copied().collect()
}

/// A filled grid of six listed words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridSolution {
    // H1, H2, H3, V1, V2, V3; field order gives the output ordering
    words: [Word; 6],
    board: LetterBoard,
}

impl GridSolution {
    /// Reads the six words off a board.
    pub fn from_board(board: LetterBoard) -> Self {
        let words = SlotId::ALL.map(|slot| {
            Word::from_bytes(board.word(slot)).expect("board letters are uppercase")
        });
        GridSolution { words, board }
    }

    pub fn board(&self) -> &LetterBoard {
        &self.board
    }

    pub fn word(&self, slot: SlotId) -> Word {
        self.words[slot.index()]
    }

    pub fn words(&self) -> &[Word; 6] {
        &self.words
    }

    /// `H1,H2,H3,V1,V2,V3`.
    pub fn listing(&self) -> String {
        self.words
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Order in which the join fills slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotOrder {
    /// Next slot is the one with the fewest candidates still compatible.
    Adaptive,
    Fixed([SlotId; 6]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_solutions: usize,
    pub order: SlotOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_solutions: DEFAULT_MAX_SOLUTIONS,
            order: SlotOrder::Adaptive,
        }
    }
}

pub fn solve_grid(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    wl: &WordList,
    max_solutions: usize,
) -> Vec<GridSolution> {
    solve_grid_with(
        scrambled,
        colors,
        wl,
        SolveOptions {
            max_solutions,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_grid_with(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    wl: &WordList,
    options: SolveOptions,
) -> Vec<GridSolution> {
    if options.max_solutions == 0 {
        return Vec::new();
    }
    let mut candidates = Vec::with_capacity(6);
    for slot in SlotId::ALL {
        match slot_constraints(scrambled, colors, slot) {
            Ok(c) => candidates.push(candidate_words(wl, &c)),
            Err(_) => return Vec::new(),
        }
    }
    let mut join = Join {
        scrambled,
        colors,
        candidates,
        cells: [None; SQUARE_COUNT],
        budget: scrambled.letter_counts().map(|c| c as i32),
        chosen: [None; 6],
        options,
        found: Vec::new(),
    };
    join.search(0);
    let mut found = join.found;
    found.sort();
    found
}

struct Join<'a> {
    scrambled: &'a LetterBoard,
    colors: &'a ColorBoard,
    candidates: Vec<Vec<Word>>,
    cells: [Option<u8>; SQUARE_COUNT],
    budget: [i32; 26],
    chosen: [Option<Word>; 6],
    options: SolveOptions,
    found: Vec<GridSolution>,
}

impl Join<'_> {
    fn done(&self) -> bool {
        self.found.len() >= self.options.max_solutions
    }

    /// Whether `word` agrees with filled squares and fits the letter budget.
    fn fits(&self, slot: SlotId, word: &Word) -> bool {
        let mut need = [0i32; 26];
        for (pos, square) in slot.squares().into_iter().enumerate() {
            let letter = word.letter(pos);
            match self.cells[square.index()] {
                Some(existing) if existing != letter => return false,
                Some(_) => {}
                None => {
                    let i = (letter - b'A') as usize;
                    need[i] += 1;
                    if need[i] > self.budget[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn compatible(&self, slot: SlotId) -> Vec<Word> {
        self.candidates[slot.index()]
            .iter()
            .filter(|w| self.fits(slot, w))
            .copied()
            .collect()
    }

    fn next_slot(&self, depth: usize) -> Option<(SlotId, Vec<Word>)> {
        match self.options.order {
            SlotOrder::Fixed(order) => {
                let slot = order[depth];
                Some((slot, self.compatible(slot)))
            }
            SlotOrder::Adaptive => {
                let mut best: Option<(SlotId, Vec<Word>)> = None;
                for slot in SlotId::ALL {
                    if self.chosen[slot.index()].is_some() {
                        continue;
                    }
                    let options = self.compatible(slot);
                    let better = best.as_ref().is_none_or(|(_, b)| options.len() < b.len());
                    if better {
                        let empty = options.is_empty();
                        best = Some((slot, options));
                        if empty {
                            break;
                        }
                    }
                }
                best
            }
        }
    }

    fn place(&mut self, slot: SlotId, word: &Word) -> Vec<SquareId> {
        let mut placed = Vec::new();
        for (pos, square) in slot.squares().into_iter().enumerate() {
            if self.cells[square.index()].is_none() {
                let letter = word.letter(pos);
                self.cells[square.index()] = Some(letter);
                self.budget[(letter - b'A') as usize] -= 1;
                placed.push(square);
            }
        }
        self.chosen[slot.index()] = Some(*word);
        placed
    }

    fn unplace(&mut self, slot: SlotId, placed: Vec<SquareId>) {
        for square in placed {
            let letter = self.cells[square.index()].take().expect("placed");
            self.budget[(letter - b'A') as usize] += 1;
        }
        self.chosen[slot.index()] = None;
    }

    fn search(&mut self, depth: usize) {
        if self.done() {
            return;
        }
        if depth == 6 {
            self.accept();
            return;
        }
        let Some((slot, options)) = self.next_slot(depth) else {
            return;
        };
        for word in options {
            let placed = self.place(slot, &word);
            self.search(depth + 1);
            self.unplace(slot, placed);
            if self.done() {
                return;
            }
        }
    }

    fn accept(&mut self) {
        let mut letters = [0u8; SQUARE_COUNT];
        for (i, cell) in self.cells.iter().enumerate() {
            letters[i] = cell.expect("every square lies in some slot");
        }
        let board = LetterBoard::from_array(letters).expect("letters are uppercase");
        if board.letter_counts() != self.scrambled.letter_counts() {
            return;
        }
        if color_board(self.scrambled, &board) != *self.colors {
            return;
        }
        self.found.push(GridSolution::from_board(board));
    }
}

/// Number of solutions found with a cap of two, plus the witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub count: usize,
    pub solutions: Vec<GridSolution>,
}

impl UniquenessReport {
    pub fn is_unique(&self) -> bool {
        self.count == 1
    }
}

pub fn uniqueness_report(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    wl: &WordList,
) -> UniquenessReport {
    let solutions = solve_grid(scrambled, colors, wl, 2);
    UniquenessReport {
        count: solutions.len(),
        solutions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::parse_board;

    fn board(s: &str) -> LetterBoard {
        LetterBoard::from_letters(s).unwrap()
    }

    fn game_two() -> (LetterBoard, LetterBoard) {
        (
            board("SCGOLNNDINDEERIUFFARE"),
            board("SNARLNIEUNDIDFEGFORCE"),
        )
    }

    #[test]
    fn all_green_slot_is_fully_fixed() {
        let (_, solution) = game_two();
        let colors = color_board(&solution, &solution);
        let c = slot_constraints(&solution, &colors, SlotId::H3).unwrap();
        assert_eq!(c.fixed, [Some(b'F'), Some(b'O'), Some(b'R'), Some(b'C'), Some(b'E')]);
        assert!(c.excluded.is_empty() && c.required.is_empty());
    }

    #[test]
    fn game_two_bottom_row_constraints() {
        let (scrambled, solution) = game_two();
        let colors = color_board(&scrambled, &solution);
        let c = slot_constraints(&scrambled, &colors, SlotId::H3).unwrap();
        // F F A R E over squares 17..21, with 17 and 21 green.
        assert_eq!(c.fixed, [Some(b'F'), None, None, None, Some(b'E')]);
        // 18 holds F, yellow under plain membership (FORCE has an F).
        assert!(c.banned_at[1].contains(b'F'));
        assert!(c.required.contains(b'F'));
        // 19 holds A; FORCE has none but the crossing AIDER does.
        assert_eq!(colors.get(SquareId::new(19).unwrap()), Color::Yellow);
        assert!(c.required_either.contains(b'A'));
        assert!(c.banned_at[2].contains(b'A'));
        // 20 holds R, FORCE has R.
        assert!(c.required.contains(b'R'));
        assert!(c.admits(&Word::parse("FORCE").unwrap()));
    }

    #[test]
    fn gray_even_letter_is_excluded() {
        let (scrambled, solution) = game_two();
        let colors = color_board(&scrambled, &solution);
        // Square 2 holds a gray C.
        let c = slot_constraints(&scrambled, &colors, SlotId::H1).unwrap();
        assert!(c.excluded.contains(b'C'));
        let mut q = scrambled;
        q.set(SquareId::new(2).unwrap(), b'Q');
        let mut colors_q = *colors.colors();
        colors_q[1] = Color::Gray;
        let c = slot_constraints(&q, &ColorBoard::new(colors_q), SlotId::H1).unwrap();
        assert!(c.excluded.contains(b'Q'));
    }

    #[test]
    fn contradictory_coloring_is_infeasible() {
        let (_, solution) = game_two();
        let mut colors = *color_board(&solution, &solution).colors();
        // Green S on square 1 and a gray S on square 2 cannot both hold.
        let mut scrambled = solution;
        scrambled.set(SquareId::new(2).unwrap(), b'S');
        colors[1] = Color::Gray;
        let err = slot_constraints(&scrambled, &ColorBoard::new(colors), SlotId::H1).unwrap_err();
        assert_eq!(
            err,
            SolveError::Infeasible {
                slot: "H1".into(),
                letter: 'S'
            }
        );
    }

    #[test]
    fn candidate_filtering() {
        let wl = WordList::from_strs("t", &["FORCE", "FARCE", "SMILE", "ZZZZZ"]);
        let mut c = SlotConstraints::unconstrained(SlotId::H3);
        assert_eq!(candidate_words(&wl, &c).len(), 4);
        c.fixed = [Some(b'F'), Some(b'O'), Some(b'R'), Some(b'C'), Some(b'E')];
        assert_eq!(candidate_words(&wl, &c), vec![Word::parse("FORCE").unwrap()]);
        let mut all = SlotConstraints::unconstrained(SlotId::H3);
        all.excluded = LetterSet::ALL;
        assert!(candidate_words(&wl, &all).is_empty());
    }

    #[test]
    fn game_two_solves_uniquely() {
        let (scrambled, solution) = game_two();
        let colors = color_board(&scrambled, &solution);
        let wl = WordList::from_strs(
            "t",
            &["SNARL", "UNDID", "FORCE", "SNUFF", "AIDER", "LEDGE", "FARCE", "SNORE"],
        );
        let found = solve_grid(&scrambled, &colors, &wl, 8);
        assert_eq!(found.len(), 1);
        assert_eq!(*found[0].board(), solution);
        assert_eq!(found[0].listing(), "SNARL,UNDID,FORCE,SNUFF,AIDER,LEDGE");
        assert!(uniqueness_report(&scrambled, &colors, &wl).is_unique());
    }

    #[test]
    fn solved_board_with_all_green() {
        let solution = parse_board("SNARL\nN.I.E\nUNDID\nF.E.G\nFORCE\n").unwrap();
        let colors = color_board(&solution, &solution);
        let wl = WordList::from_strs("t", &["SNARL", "UNDID", "FORCE", "SNUFF", "AIDER", "LEDGE"]);
        let found = solve_grid(&solution, &colors, &wl, 8);
        assert_eq!(found.len(), 1);
        assert_eq!(*found[0].board(), solution);
    }

    #[test]
    fn missing_word_means_no_solution() {
        let (scrambled, solution) = game_two();
        let colors = color_board(&scrambled, &solution);
        let wl = WordList::from_strs("t", &["SNARL", "UNDID", "FORCE", "SNUFF", "AIDER"]);
        assert!(solve_grid(&scrambled, &colors, &wl, 8).is_empty());
        assert!(solve_grid(&scrambled, &colors, &wl, 0).is_empty());
    }
}
