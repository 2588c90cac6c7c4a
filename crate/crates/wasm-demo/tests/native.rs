use nfl_wasm_demo::{curve, hitting, landscape};

#[test]
fn curve_rows_are_y_major() {
    let doc = curve(8, "2,3,4").unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[3]["x"], 4);
    assert_eq!(rows[3]["y"], 2);
    assert_eq!(rows[3]["cup_count"], "31");
    assert_eq!(rows[3]["total_count"], "65535");
    assert_eq!(rows[8]["y"], 3);
}

#[test]
fn curve_rejects_bad_input() {
    assert!(curve(0, "2").is_err());
    assert!(curve(4, "").is_err());
    assert!(curve(4, "2,x").is_err());
}

#[test]
fn hitting_means_equal_formula_for_builtin_family() {
    let doc = hitting(6, "").unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["all_match"] == true));
    assert_eq!(rows[0]["formula"], "7/2");
    assert_eq!(rows[5]["formula"], "1/1");
}

#[test]
fn hitting_accepts_family_strings() {
    let doc = hitting(4, "lex,order:rev,hill:ring:3").unwrap();
    assert_eq!(doc["family"].as_array().unwrap().len(), 3);
    let first = &doc["rows"][0]["means"];
    assert_eq!(first[0]["mean"], "5/2");
    assert!(hitting(4, "bogus").is_err());
    assert!(hitting(11, "").is_err());
}

#[test]
fn parity_has_two_minima() {
    let doc = landscape("0,1,1,0", 2, "hypercube").unwrap();
    assert_eq!(doc["local_minima"], 2);
    assert_eq!(doc["minima"], serde_json::json!([0, 3]));
    assert_eq!(doc["l_max"], 2);
    assert_eq!(doc["s_max"], "1/1");
    assert_eq!(doc["orbit_size"], "6");
}

#[test]
fn landscape_on_a_ring() {
    let doc = landscape("0,2,1,3,0", 4, "ring").unwrap();
    assert_eq!(doc["minima"], serde_json::json!([2]));
    assert_eq!(doc["edges"].as_array().unwrap().len(), 5);
    assert!(landscape("0,1,2", 3, "hypercube").is_err());
    assert!(landscape("0,5", 2, "ring").is_err());
}
