use serde_json::Value;

use waffle_web::{explore_json, generate_json, unscramble_json};

const GAME2: &str = "SCGOL\nN.N.D\nINDEE\nR.I.U\nFFARE\n\nSNARL\nN.I.E\nUNDID\nF.E.G\nFORCE\n";

#[test]
fn explore_reports_cycles_and_plan() {
    let v = explore_json("(1,3,2)(4,5)", 6).unwrap();
    assert_eq!(v["canonical"], "(1,3,2)(4,5)");
    assert_eq!(v["cycle_type"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["cycle_count"], 3);
    assert_eq!(v["swap_distance"], 3);
    assert_eq!(v["plan"].as_array().unwrap().len(), 3);
    assert!(explore_json("(1,1)", 3).is_err());
}

#[test]
fn unscramble_walks_to_solution() {
    let v = unscramble_json(GAME2).unwrap();
    assert_eq!(v["cycles"], 11);
    assert_eq!(v["perfect"], true);
    assert_eq!(v["verified"], true);
    let boards = v["boards"].as_array().unwrap();
    assert_eq!(boards.len(), 11);
    assert_eq!(boards[10], "SNARLNIEUNDIDFEGFORCE");
    assert!(unscramble_json("SCGOL\nN.N.D\nINDEE\nR.I.U\nFFARE\n").is_err());
}

#[test]
fn generate_is_seeded() {
    let a = generate_json(5, 5, 8, true).unwrap();
    let b = generate_json(5, 5, 8, true).unwrap();
    assert_eq!(a, b);
    let green = a["green"].as_u64().unwrap();
    assert!((5..=8).contains(&green));
    let file = a["file"].as_str().unwrap();
    let v: Value = unscramble_json(file).unwrap();
    assert_eq!(v["perfect"], true);
}
