//! wasm-bindgen exports for the static demo page in `www/`. Every export
//! takes plain values and returns a JSON string; errors become JS
//! exceptions carrying the message.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use waffle_core::board::Puzzle;
use waffle_core::coloring::{color_board, color_counts};
use waffle_core::corpus::WordList;
use waffle_core::generator::{generate_puzzle, FixedSquarePolicy, GeneratorConfig};
use waffle_core::perm::{decompose, swap_count, transposition_plan, Permutation};
use waffle_core::unscramble::{best_unscrambling, verify_plan};

fn to_js(result: Result<Value, String>) -> Result<String, JsValue> {
    result
        .map(|v| v.to_string())
        .map_err(|e| JsValue::from_str(&e))
}

fn plan_json(swaps: &[(usize, usize)]) -> Value {
    Value::Array(swaps.iter().map(|&(a, b)| json!([a, b])).collect())
}

/// Generates a puzzle from the bundled word list.
pub fn generate_json(seed: u64, ng_lo: usize, ng_hi: usize, corners: bool) -> Result<Value, String> {
    let cfg = GeneratorConfig {
        seed,
        target_ng: (ng_lo, ng_hi),
        policy: if corners {
            FixedSquarePolicy::CornersAndCenter
        } else {
            FixedSquarePolicy::FreeChoice
        },
        max_retries: 200,
    };
    let puzzle = generate_puzzle(&cfg, &WordList::builtin()).map_err(|e| e.to_string())?;
    let solution = puzzle.solution.expect("generated puzzles carry a solution");
    let colors = puzzle.colors.expect("generated puzzles carry colors");
    Ok(json!({
        "scrambled": puzzle.scrambled.compact(),
        "colors": colors.compact(),
        "solution": solution.compact(),
        "green": color_counts(&colors).green,
        "file": puzzle.render(),
    }))
}

/// Shortest swap plan for a puzzle file with a solution stanza.
pub fn unscramble_json(puzzle_text: &str) -> Result<Value, String> {
    let puzzle = Puzzle::parse(puzzle_text).map_err(|e| e.to_string())?;
    let solution = puzzle
        .solution
        .ok_or_else(|| "puzzle needs a solution stanza".to_string())?;
    let result = best_unscrambling(&puzzle.scrambled, &solution).map_err(|e| e.to_string())?;
    let mut boards = vec![puzzle.scrambled.compact()];
    let mut board = puzzle.scrambled;
    for &(a, b) in result.swap_plan.swaps() {
        let (a, b) = (
            waffle_core::SquareId::new(a).map_err(|e| e.to_string())?,
            waffle_core::SquareId::new(b).map_err(|e| e.to_string())?,
        );
        board.swap(a, b);
        boards.push(board.compact());
    }
    Ok(json!({
        "permutation": result.permutation.to_string(),
        "cycles": result.cycle_count,
        "swaps": plan_json(result.swap_plan.swaps()),
        "perfect": result.perfect,
        "verified": verify_plan(&puzzle.scrambled, &solution, &result.swap_plan),
        "boards": boards,
        "colors": color_board(&puzzle.scrambled, &solution).compact(),
    }))
}

/// Cycle structure and swap distance of a permutation in cycle notation.
pub fn explore_json(cycles: &str, n: usize) -> Result<Value, String> {
    let g = Permutation::parse_cycles(cycles, Some(n)).map_err(|e| e.to_string())?;
    let d = decompose(&g);
    Ok(json!({
        "canonical": d.to_string(),
        "image": g.image(),
        "cycle_count": d.count(),
        "cycle_type": d.cycle_type(),
        "swap_distance": swap_count(&g),
        "plan": plan_json(transposition_plan(&g).swaps()),
        "inverse": g.inverse().to_string(),
    }))
}

#[wasm_bindgen]
pub fn generate(seed: u64, ng_lo: usize, ng_hi: usize, corners: bool) -> Result<String, JsValue> {
    to_js(generate_json(seed, ng_lo, ng_hi, corners))
}

#[wasm_bindgen]
pub fn unscramble(puzzle_text: &str) -> Result<String, JsValue> {
    to_js(unscramble_json(puzzle_text))
}

#[wasm_bindgen]
pub fn explore(cycles: &str, n: usize) -> Result<String, JsValue> {
    to_js(explore_json(cycles, n))
}
