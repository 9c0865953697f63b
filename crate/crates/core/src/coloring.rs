//! Green/Yellow/Gray coloring of a scrambled board against its solution.
//!
//! A square is green when it already holds its solution letter. Otherwise
//! it is yellow when its letter occurs anywhere in the solution word of at
//! least one slot through the square, and gray when it occurs in none.
//! Occurrences are not counted against each other: a letter that appears
//! once in a word can make several squares yellow.

use crate::board::{Color, ColorBoard, LetterBoard, SquareId, SQUARE_COUNT};

pub fn color_board(scrambled: &LetterBoard, solution: &LetterBoard) -> ColorBoard {
    let mut colors = [Color::Gray; SQUARE_COUNT];
    for s in SquareId::all() {
        let letter = scrambled.get(s);
        colors[s.index()] = if letter == solution.get(s) {
            Color::Green
        } else if s
            .incident_slots()
            .into_iter()
            .any(|slot| solution.word(slot).contains(&letter))
        {
            Color::Yellow
        } else {
            Color::Gray
        };
    }
    ColorBoard::new(colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorCounts {
    pub green: usize,
    pub yellow: usize,
    pub gray: usize,
}

pub fn color_counts(colors: &ColorBoard) -> ColorCounts {
    let count = |c: Color| colors.colors().iter().filter(|&&x| x == c).count();
    ColorCounts {
        green: count(Color::Green),
        yellow: count(Color::Yellow),
        gray: count(Color::Gray),
    }
}
