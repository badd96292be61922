use serde_json::json;

use tca_wasm_demo::{closure_report, radical_report, schur_grid};

#[test]
fn radical_of_a_sum() {
    let r = radical_report("4,2; 3,3").unwrap();
    assert_eq!(r["radical"], json!("I(3,2)"));
    assert_eq!(r["radicalShape"]["corners"], json!([[1, 3], [2, 2]]));
    assert_eq!(
        r["primes"],
        json!([
            {"rows": 1, "cols": 3, "point": [0, 2]},
            {"rows": 2, "cols": 2, "point": [1, 1]},
        ])
    );
    assert_eq!(r["summands"][0]["corners"], json!([[1, 4], [2, 2]]));
}

#[test]
fn bad_input_is_reported() {
    assert!(radical_report("").is_err());
    assert!(radical_report("2,x").is_err());
    assert!(schur_grid("2,1", 9).is_err());
    assert!(closure_report(9, 0).is_err());
}

#[test]
fn schur_grid_vanishes_outside_the_hook() {
    let g = schur_grid("2,1", 2).unwrap();
    // From V^{⊗3} = Sym³ ⊕ Λ³ ⊕ 2·S_(2,1): (27 − 4 − 7)/2 = 8 on (1|2), (64 − 12 − 12)/2 = 20 on (2|2).
    assert_eq!(g["grid"], json!([[0, 0, 2], [0, 2, 8], [2, 8, 20]]));
    assert_eq!(g["transpose"], json!([2, 1]));
}

#[test]
fn closure_lists_points_below() {
    let c = closure_report(1, 1).unwrap();
    assert_eq!(c["prime"], json!("I(2,2)"));
    let points: Vec<_> = c["points"].as_array().unwrap().iter().map(|p| p["point"].clone()).collect();
    assert_eq!(points, vec![json!([0, 0]), json!([0, 1]), json!([1, 0]), json!([1, 1])]);
}
