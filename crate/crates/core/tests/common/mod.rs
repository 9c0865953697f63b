#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use waffle_core::board::{ColorBoard, LetterBoard, Puzzle, SlotId};
use waffle_core::coloring::color_board;
use waffle_core::corpus::{load_word_list, Word, WordList};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn puzzle(name: &str) -> Puzzle {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    Puzzle::parse(&text).expect("fixture parses")
}

pub fn words(name: &str) -> WordList {
    load_word_list(data_path(name)).expect("fixture word list")
}

pub fn board(letters: &str) -> LetterBoard {
    LetterBoard::from_letters(letters).expect("21 letters")
}

/// Every grid over `wl` with the scrambled letters and the given coloring,
/// found by plain enumeration: all horizontal triples that fit the letter
/// budget, then verticals matching the crossings. Shares no code with the
/// solver beyond `color_board`.
pub fn brute_force_solutions(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    wl: &WordList,
) -> BTreeSet<String> {
    let budget = scrambled.letter_counts();
    let words: Vec<Word> = wl
        .iter()
        .copied()
        .filter(|w| fits(&[0; 26], w.letters(), &budget))
        .collect();
    let mut out = BTreeSet::new();
    let used = [0usize; 26];
    for h1 in &words {
        let u1 = add(&used, h1.letters());
        if !within(&u1, &budget) {
            continue;
        }
        for h2 in &words {
            let u2 = add(&u1, h2.letters());
            if !within(&u2, &budget) {
                continue;
            }
            for h3 in &words {
                let u3 = add(&u2, h3.letters());
                if !within(&u3, &budget) {
                    continue;
                }
                verticals(scrambled, colors, &words, [h1, h2, h3], &u3, &budget, &mut out);
            }
        }
    }
    out
}

fn verticals(
    scrambled: &LetterBoard,
    colors: &ColorBoard,
    words: &[Word],
    h: [&Word; 3],
    used: &[usize; 26],
    budget: &[usize; 26],
    out: &mut BTreeSet<String>,
) {
    let column = |c: usize| -> Vec<&Word> {
        words
            .iter()
            .filter(|v| (0..3).all(|r| v.letter(2 * r) == h[r].letter(2 * c)))
            .collect()
    };
    let (c0, c1, c2) = (column(0), column(1), column(2));
    for v1 in &c0 {
        let u1 = add_even(used, v1);
        if !within(&u1, budget) {
            continue;
        }
        for v2 in &c1 {
            let u2 = add_even(&u1, v2);
            if !within(&u2, budget) {
                continue;
            }
            for v3 in &c2 {
                let u3 = add_even(&u2, v3);
                if u3 != *budget {
                    continue;
                }
                let mut b = *scrambled;
                let slots = [
                    (SlotId::H1, h[0]),
                    (SlotId::H2, h[1]),
                    (SlotId::H3, h[2]),
                    (SlotId::V1, *v1),
                    (SlotId::V2, *v2),
                    (SlotId::V3, *v3),
                ];
                for (slot, w) in slots {
                    for (sq, &l) in slot.squares().iter().zip(w.letters()) {
                        b.set(*sq, l);
                    }
                }
                if color_board(scrambled, &b) == *colors {
                    out.insert(b.compact());
                }
            }
        }
    }
}

fn add(used: &[usize; 26], letters: &[u8]) -> [usize; 26] {
    let mut u = *used;
    for &l in letters {
        u[(l - b'A') as usize] += 1;
    }
    u
}

/// Vertical words only contribute their 2nd and 4th letters.
fn add_even(used: &[usize; 26], w: &Word) -> [usize; 26] {
    add(used, &[w.letter(1), w.letter(3)])
}

fn within(used: &[usize; 26], budget: &[usize; 26]) -> bool {
    used.iter().zip(budget).all(|(u, b)| u <= b)
}

fn fits(used: &[usize; 26], letters: &[u8], budget: &[usize; 26]) -> bool {
    within(&add(used, letters), budget)
}

/// Cycle count by walking the image directly.
pub fn count_cycles(image: &[usize]) -> usize {
    let mut seen = vec![false; image.len()];
    let mut cycles = 0;
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = image[x] - 1;
        }
    }
    cycles
}

/// All permutations of 1..=n as images.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for p in 0..used.len() {
            if !used[p] {
                used[p] = true;
                prefix.push(p + 1);
                go(prefix, used, out);
                prefix.pop();
                used[p] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every image `g` (1-based, by square) with `solution[g(s)] == scrambled[s]`,
/// listed by plain backtracking.
pub fn all_class_bijections(scrambled: &LetterBoard, solution: &LetterBoard) -> Vec<Vec<usize>> {
    fn go(
        s: usize,
        scr: &[u8; 21],
        sol: &[u8; 21],
        used: &mut [bool; 21],
        image: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if s == 21 {
            out.push(image.clone());
            return;
        }
        for t in 0..21 {
            if !used[t] && sol[t] == scr[s] {
                used[t] = true;
                image.push(t + 1);
                go(s + 1, scr, sol, used, image, out);
                image.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        0,
        scrambled.letters(),
        solution.letters(),
        &mut [false; 21],
        &mut Vec::new(),
        &mut out,
    );
    out
}
