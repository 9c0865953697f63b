//! The 21-square waffle grid.
//!
//! Squares are numbered 1..=21 row-major over the non-hole cells of a 5x5
//! grid; the holes sit where both row and column are even. Board text is
//! five lines of five characters with `.` at the holes.

use std::fmt;
use std::str::FromStr;

use crate::error::BoardError;

pub const SQUARE_COUNT: usize = 21;
pub const GRID_SIZE: usize = 5;

/// (row, col) of squares 1..=21.
#[rustfmt::skip]
const CELLS: [(u8, u8); SQUARE_COUNT] = [
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 1), (2, 3), (2, 5),
    (3, 1), (3, 2), (3, 3), (3, 4), (3, 5),
    (4, 1), (4, 3), (4, 5),
    (5, 1), (5, 2), (5, 3), (5, 4), (5, 5),
];

/// A square of the grid, 1..=21.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareId(u8);

impl SquareId {
    pub fn new(id: usize) -> Result<Self, BoardError> {
        if (1..=SQUARE_COUNT).contains(&id) {
            Ok(SquareId(id as u8))
        } else {
            Err(BoardError::SquareOutOfRange(id))
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = SquareId> {
        (1..=SQUARE_COUNT as u8).map(SquareId)
    }

    /// (row, col), both 1-based.
    pub fn cell(self) -> (usize, usize) {
        let (r, c) = CELLS[self.index()];
        (r as usize, c as usize)
    }

    pub fn parity(self) -> Parity {
        let (r, c) = self.cell();
        if r % 2 == 1 && c % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Horizontal and/or vertical word through this square.
    pub fn incident_slots(self) -> Vec<SlotId> {
        SlotId::ALL
            .into_iter()
            .filter(|slot| slot.squares().contains(&self))
            .collect()
    }
}

impl fmt::Display for SquareId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Square(SquareId),
    Hole,
}

pub fn square_cell(id: SquareId) -> (usize, usize) {
    id.cell()
}

pub fn cell_square(row: usize, col: usize) -> Result<Cell, BoardError> {
    if !(1..=GRID_SIZE).contains(&row) || !(1..=GRID_SIZE).contains(&col) {
        return Err(BoardError::CellOutOfRange { row, col });
    }
    Ok(CELLS
        .iter()
        .position(|&(r, c)| r as usize == row && c as usize == col)
        .map(|i| Cell::Square(SquareId(i as u8 + 1)))
        .unwrap_or(Cell::Hole))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

pub fn parity(id: SquareId) -> Parity {
    id.parity()
}

pub fn incident_slots(id: SquareId) -> Vec<SlotId> {
    id.incident_slots()
}

/// One of the six word positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotId {
    H1,
    H2,
    H3,
    V1,
    V2,
    V3,
}

const SLOT_SQUARES: [[u8; 5]; 6] = [
    [1, 2, 3, 4, 5],
    [9, 10, 11, 12, 13],
    [17, 18, 19, 20, 21],
    [1, 6, 9, 14, 17],
    [3, 7, 11, 15, 19],
    [5, 8, 13, 16, 21],
];

impl SlotId {
    /// Output order H1, H2, H3, V1, V2, V3.
    pub const ALL: [SlotId; 6] = [
        SlotId::H1,
        SlotId::H2,
        SlotId::H3,
        SlotId::V1,
        SlotId::V2,
        SlotId::V3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Left to right for horizontal slots, top to bottom for vertical ones.
    pub fn squares(self) -> [SquareId; 5] {
        SLOT_SQUARES[self.index()].map(SquareId)
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, SlotId::H1 | SlotId::H2 | SlotId::H3)
    }

    pub fn name(self) -> &'static str {
        match self {
            SlotId::H1 => "H1",
            SlotId::H2 => "H2",
            SlotId::H3 => "H3",
            SlotId::V1 => "V1",
            SlotId::V2 => "V2",
            SlotId::V3 => "V3",
        }
    }

    /// Slots sharing a square with this one, with (own position, their
    /// position), positions 0-based.
    pub fn crossings(self) -> Vec<(SlotId, usize, usize)> {
        let mine = self.squares();
        let mut out = Vec::new();
        for other in SlotId::ALL {
            if other == self {
                continue;
            }
            let theirs = other.squares();
            for (i, s) in mine.iter().enumerate() {
                if let Some(j) = theirs.iter().position(|t| t == s) {
                    out.push((other, i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for SlotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Uppercase letters on all 21 squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterBoard([u8; SQUARE_COUNT]);

impl LetterBoard {
    /// From 21 letters in square order; case-insensitive.
    pub fn from_letters(letters: &str) -> Result<Self, BoardError> {
        let bytes: Vec<u8> = letters.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        if bytes.len() != SQUARE_COUNT {
            return Err(BoardError::Stanza(format!(
                "expected {SQUARE_COUNT} letters, found {}",
                bytes.len()
            )));
        }
        let mut out = [0u8; SQUARE_COUNT];
        for (i, b) in bytes.into_iter().enumerate() {
            let (row, col) = CELLS[i];
            if !b.is_ascii_alphabetic() {
                return Err(BoardError::InvalidChar {
                    row: row as usize,
                    col: col as usize,
                    found: b as char,
                });
            }
            out[i] = b.to_ascii_uppercase();
        }
        Ok(LetterBoard(out))
    }

    pub fn from_array(letters: [u8; SQUARE_COUNT]) -> Result<Self, BoardError> {
        let s: String = letters.iter().map(|&b| b as char).collect();
        LetterBoard::from_letters(&s)
    }

    pub fn get(&self, id: SquareId) -> u8 {
        self.0[id.index()]
    }

    pub fn set(&mut self, id: SquareId, letter: u8) {
        self.0[id.index()] = letter.to_ascii_uppercase();
    }

    pub fn letters(&self) -> &[u8; SQUARE_COUNT] {
        &self.0
    }

    /// Letters of a slot in reading order.
    pub fn word(&self, slot: SlotId) -> [u8; 5] {
        slot.squares().map(|s| self.get(s))
    }

    pub fn word_string(&self, slot: SlotId) -> String {
        self.word(slot).iter().map(|&b| b as char).collect()
    }

    /// Per-letter counts, indexed `A = 0`.
    pub fn letter_counts(&self) -> [usize; 26] {
        let mut counts = [0usize; 26];
        for &b in &self.0 {
            counts[(b - b'A') as usize] += 1;
        }
        counts
    }

    pub fn swap(&mut self, a: SquareId, b: SquareId) {
        self.0.swap(a.index(), b.index());
    }

    /// 21 letters in square order.
    pub fn compact(&self) -> String {
        self.0.iter().map(|&b| b as char).collect()
    }
}

impl fmt::Display for LetterBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grid(|i| self.0[i] as char))
    }
}

impl FromStr for LetterBoard {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_board(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Green,
    Yellow,
    Gray,
}

impl Color {
    pub fn symbol(self) -> char {
        match self {
            Color::Green => 'G',
            Color::Yellow => 'Y',
            Color::Gray => 'X',
        }
    }

    pub fn from_symbol(c: char) -> Option<Color> {
        match c.to_ascii_uppercase() {
            'G' => Some(Color::Green),
            'Y' => Some(Color::Yellow),
            'X' => Some(Color::Gray),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorBoard([Color; SQUARE_COUNT]);

impl ColorBoard {
    pub fn new(colors: [Color; SQUARE_COUNT]) -> Self {
        ColorBoard(colors)
    }

    /// From 21 symbols `G`/`Y`/`X` in square order.
    pub fn from_symbols(symbols: &str) -> Result<Self, BoardError> {
        let chars: Vec<char> = symbols.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.len() != SQUARE_COUNT {
            return Err(BoardError::Stanza(format!(
                "expected {SQUARE_COUNT} colors, found {}",
                chars.len()
            )));
        }
        let mut out = [Color::Gray; SQUARE_COUNT];
        for (i, c) in chars.into_iter().enumerate() {
            let (row, col) = CELLS[i];
            out[i] = Color::from_symbol(c).ok_or(BoardError::InvalidChar {
                row: row as usize,
                col: col as usize,
                found: c,
            })?;
        }
        Ok(ColorBoard(out))
    }

    pub fn get(&self, id: SquareId) -> Color {
        self.0[id.index()]
    }

    pub fn colors(&self) -> &[Color; SQUARE_COUNT] {
        &self.0
    }

    pub fn squares_with(&self, color: Color) -> Vec<SquareId> {
        SquareId::all().filter(|&s| self.get(s) == color).collect()
    }

    pub fn compact(&self) -> String {
        self.0.iter().map(|c| c.symbol()).collect()
    }
}

impl fmt::Display for ColorBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_grid(|i| self.0[i].symbol()))
    }
}

impl FromStr for ColorBoard {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_color_board(s)
    }
}

fn render_grid(symbol: impl Fn(usize) -> char) -> String {
    let mut out = String::with_capacity(30);
    for row in 1..=GRID_SIZE {
        for col in 1..=GRID_SIZE {
            match cell_square(row, col).expect("in range") {
                Cell::Square(id) => out.push(symbol(id.index())),
                Cell::Hole => out.push('.'),
            }
        }
        out.push('\n');
    }
    out
}

/// Reads the 21 square characters of a grid, validating shape and holes.
fn parse_grid(text: &str, accept: impl Fn(char) -> bool) -> Result<Vec<char>, BoardError> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != GRID_SIZE {
        return Err(BoardError::LineCount(lines.len()));
    }
    let mut out = Vec::with_capacity(SQUARE_COUNT);
    for (r, line) in lines.iter().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        if chars.len() != GRID_SIZE {
            return Err(BoardError::LineLength {
                line: r + 1,
                len: chars.len(),
            });
        }
        for (c, &ch) in chars.iter().enumerate() {
            let (row, col) = (r + 1, c + 1);
            match cell_square(row, col)? {
                Cell::Hole if ch != '.' => {
                    return Err(BoardError::LetterAtHole { row, col, found: ch })
                }
                Cell::Hole => {}
                Cell::Square(_) if accept(ch) => out.push(ch.to_ascii_uppercase()),
                Cell::Square(_) => return Err(BoardError::InvalidChar { row, col, found: ch }),
            }
        }
    }
    Ok(out)
}

pub fn parse_board(text: &str) -> Result<LetterBoard, BoardError> {
    let chars = parse_grid(text, |c| c.is_ascii_alphabetic())?;
    let mut out = [0u8; SQUARE_COUNT];
    for (i, c) in chars.into_iter().enumerate() {
        out[i] = c as u8;
    }
    Ok(LetterBoard(out))
}

pub fn render_board(board: &LetterBoard) -> String {
    board.to_string()
}

pub fn parse_color_board(text: &str) -> Result<ColorBoard, BoardError> {
    let chars = parse_grid(text, |c| Color::from_symbol(c).is_some())?;
    let mut out = [Color::Gray; SQUARE_COUNT];
    for (i, c) in chars.into_iter().enumerate() {
        out[i] = Color::from_symbol(c).expect("accepted above");
    }
    Ok(ColorBoard(out))
}

pub fn render_color_board(colors: &ColorBoard) -> String {
    colors.to_string()
}

/// A scrambled board with optional coloring and known solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Puzzle {
    pub scrambled: LetterBoard,
    pub colors: Option<ColorBoard>,
    pub solution: Option<LetterBoard>,
}

impl Puzzle {
    pub fn new(scrambled: LetterBoard) -> Self {
        Puzzle {
            scrambled,
            colors: None,
            solution: None,
        }
    }

    /// Parses the stanza format: scrambled grid, then optionally a color
    /// grid and/or a solution grid, separated by blank lines. A second
    /// stanza made only of `G`/`Y`/`X` is read as colors.
    pub fn parse(text: &str) -> Result<Self, BoardError> {
        let normalized = text.replace("\r\n", "\n");
        let stanzas: Vec<String> = split_stanzas(&normalized);
        if stanzas.is_empty() || stanzas.len() > 3 {
            return Err(BoardError::Stanza(format!(
                "expected 1 to 3 stanzas, found {}",
                stanzas.len()
            )));
        }
        let scrambled = parse_board(&stanzas[0])?;
        let mut puzzle = Puzzle::new(scrambled);
        for stanza in &stanzas[1..] {
            let is_color = stanza
                .chars()
                .all(|c| c == '.' || c == '\n' || Color::from_symbol(c).is_some());
            if is_color && puzzle.colors.is_none() && puzzle.solution.is_none() {
                puzzle.colors = Some(parse_color_board(stanza)?);
            } else if puzzle.solution.is_none() {
                puzzle.solution = Some(parse_board(stanza)?);
            } else {
                return Err(BoardError::Stanza("more than one solution stanza".into()));
            }
        }
        Ok(puzzle)
    }

    pub fn render(&self) -> String {
        let mut parts = vec![self.scrambled.to_string()];
        if let Some(colors) = &self.colors {
            parts.push(colors.to_string());
        }
        if let Some(solution) = &self.solution {
            parts.push(solution.to_string());
        }
        parts.join("\n")
    }
}

fn split_stanzas(text: &str) -> Vec<String> {
    let mut stanzas = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                stanzas.push(std::mem::take(&mut current));
            }
        } else {
            current.push_str(line.trim_end());
            current.push('\n');
        }
    }
    if !current.is_empty() {
        stanzas.push(current);
    }
    stanzas
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(id: usize) -> SquareId {
        SquareId::new(id).unwrap()
    }

    #[test]
    fn numbering_follows_the_grid() {
        assert_eq!(square_cell(sq(1)), (1, 1));
        assert_eq!(square_cell(sq(21)), (5, 5));
        assert_eq!(square_cell(sq(7)), (2, 3));
        assert_eq!(square_cell(sq(15)), (4, 3));
        assert_eq!(cell_square(2, 2).unwrap(), Cell::Hole);
        assert_eq!(cell_square(4, 4).unwrap(), Cell::Hole);
        assert!(cell_square(0, 3).is_err());
        assert!(cell_square(3, 6).is_err());
        assert!(SquareId::new(0).is_err());
        assert!(SquareId::new(22).is_err());
    }

    #[test]
    fn cell_maps_are_inverse() {
        for s in SquareId::all() {
            let (r, c) = s.cell();
            assert_eq!(cell_square(r, c).unwrap(), Cell::Square(s));
        }
        let holes = (1..=5)
            .flat_map(|r| (1..=5).map(move |c| (r, c)))
            .filter(|&(r, c)| cell_square(r, c).unwrap() == Cell::Hole)
            .count();
        assert_eq!(holes, 4);
    }

    #[test]
    fn parity_and_slots() {
        assert_eq!(parity(sq(1)), Parity::Odd);
        assert_eq!(parity(sq(6)), Parity::Even);
        assert_eq!(parity(sq(11)), Parity::Odd);
        assert_eq!(incident_slots(sq(1)), vec![SlotId::H1, SlotId::V1]);
        assert_eq!(incident_slots(sq(2)), vec![SlotId::H1]);
        assert_eq!(incident_slots(sq(16)), vec![SlotId::V3]);

        let odd: Vec<_> = SquareId::all().filter(|s| s.parity() == Parity::Odd).collect();
        assert_eq!(odd.len(), 9);
        for s in SquareId::all() {
            let expected = if s.parity() == Parity::Odd { 2 } else { 1 };
            assert_eq!(s.incident_slots().len(), expected, "square {s}");
        }
        let membership: usize = SlotId::ALL.iter().map(|s| s.squares().len()).sum();
        assert_eq!(membership, 30);
    }

    #[test]
    fn slot_tables() {
        let ids = |slot: SlotId| slot.squares().map(|s| s.get());
        assert_eq!(ids(SlotId::H2), [9, 10, 11, 12, 13]);
        assert_eq!(ids(SlotId::V2), [3, 7, 11, 15, 19]);
        assert_eq!(ids(SlotId::V3), [5, 8, 13, 16, 21]);
        assert_eq!(SlotId::H1.crossings().len(), 3);
        assert!(SlotId::H1.crossings().contains(&(SlotId::V3, 4, 0)));
    }

    const FIG_1B: &str = "SNARL\nN.I.E\nUNDID\nF.E.G\nFORCE\n";

    #[test]
    fn solved_game_two_parses() {
        let b = parse_board(FIG_1B).unwrap();
        assert_eq!(b.word_string(SlotId::H3), "FORCE");
        assert_eq!(b.word_string(SlotId::V1), "SNUFF");
        assert_eq!(b.word_string(SlotId::V2), "AIDER");
        assert_eq!(b.word_string(SlotId::V3), "LEDGE");
        assert_eq!(render_board(&b), FIG_1B);
    }

    #[test]
    fn lowercase_is_normalized() {
        let b = parse_board(&FIG_1B.to_lowercase()).unwrap();
        assert_eq!(b.to_string(), FIG_1B);
    }

    #[test]
    fn grid_errors_carry_positions() {
        let err = parse_board("SNARL\nNZI.E\nUNDID\nF.E.G\nFORCE\n").unwrap_err();
        assert_eq!(
            err,
            BoardError::LetterAtHole {
                row: 2,
                col: 2,
                found: 'Z'
            }
        );
        assert_eq!(
            parse_board("SNARL\nN.I.E\nUN1ID\nF.E.G\nFORCE\n").unwrap_err(),
            BoardError::InvalidChar {
                row: 3,
                col: 3,
                found: '1'
            }
        );
        assert_eq!(
            parse_board("SNARL\nN.I.E\nUNDID\n").unwrap_err(),
            BoardError::LineCount(3)
        );
        assert_eq!(
            parse_board("SNARL\nN.I.E\nUNDIDS\nF.E.G\nFORCE\n").unwrap_err(),
            BoardError::LineLength { line: 3, len: 6 }
        );
        assert!(parse_board("SNARL\nN.I.E\nUND.D\nF.E.G\nFORCE\n").is_err());
    }

    #[test]
    fn color_grid_round_trip() {
        let text = "GXXXG\nG.X.Y\nYGGXY\nX.Y.X\nGXYYG\n";
        let colors = parse_color_board(text).unwrap();
        assert_eq!(colors.to_string(), text);
        assert_eq!(colors.squares_with(Color::Green).len(), 7);
        assert!(parse_color_board("GXXXG\nG.X.Y\nYGGXY\nX.Q.X\nGXYYG\n").is_err());
    }

    #[test]
    fn puzzle_stanzas() {
        let text = format!(
            "SCGOL\nN.N.D\nINDEE\nR.I.U\nFFARE\n\nGXXXG\nG.X.Y\nYGGXY\nX.Y.X\nGYYYG\n\n{FIG_1B}"
        );
        let p = Puzzle::parse(&text).unwrap();
        assert!(p.colors.is_some());
        assert_eq!(p.solution.unwrap().to_string(), FIG_1B);
        assert_eq!(Puzzle::parse(&text).unwrap().render(), text);

        let no_colors = format!("SCGOL\nN.N.D\nINDEE\nR.I.U\nFFARE\n\n{FIG_1B}");
        let p = Puzzle::parse(&no_colors).unwrap();
        assert!(p.colors.is_none() && p.solution.is_some());
        assert!(Puzzle::parse("").is_err());
    }
}
