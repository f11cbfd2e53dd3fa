//! The command line driven in-process through `spflag::cli::run`.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use spflag::cli::GeometryDoc;
use spflag::geometry::{random_open_cell_flag, FlagPoint, ResolutionPoint, Subspace};
use spflag::rootsys::FlagType;

use common::run_cli;

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run_cli(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("valid JSON")
}

#[test]
fn dim_prints_the_point_count() {
    assert_eq!(ok(&["dim", "--n", "2", "--lambda", "1,0"]), "4\n");
    assert_eq!(ok(&["dim", "--n", "2", "--lambda", "0,1"]), "5\n");
    assert_eq!(ok(&["dim", "--n", "2", "--lambda", "1,1"]), "16\n");
    assert_eq!(ok(&["dim", "--n", "3", "--lambda", "0,1,0"]), "14\n");
    assert_eq!(ok(&["dim", "--n", "2", "--lambda", "0,0"]), "1\n");
    assert_eq!(ok(&["dim", "--type", "a", "--n", "3", "--lambda", "1,1"]), "8\n");
    assert_eq!(ok(&["dim", "--type", "a", "--n", "4", "--lambda", "0,1,0"]), "6\n");
}

#[test]
fn fixed_point_count() {
    assert_eq!(ok(&["fixed-points", "--n", "1", "--count"]), "2\n");
    assert_eq!(ok(&["fixed-points", "--n", "2", "--count"]), "16\n");
    assert_eq!(ok(&["fixed-points", "--n", "3", "--count"]), "512\n");
    let all = json(&["fixed-points", "--n", "2"]);
    assert_eq!(all.as_array().unwrap().len(), 16);
    assert_eq!(all[0].as_array().unwrap().len(), 4);
}

#[test]
fn qchar_and_weyl_agree_at_q_one() {
    let q = json(&["qchar", "--n", "2", "--lambda", "1,1"]);
    let w = json(&["weyl", "--n", "2", "--lambda", "1,1"]);
    let mut collapsed = std::collections::BTreeMap::<String, i64>::new();
    for t in q.as_array().unwrap() {
        *collapsed.entry(t["weight"].to_string()).or_default() += t["mult"].as_i64().unwrap();
    }
    let weyl: std::collections::BTreeMap<String, i64> = w
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["weight"].to_string(), t["mult"].as_i64().unwrap()))
        .collect();
    assert_eq!(collapsed, weyl);
    assert_eq!(weyl.values().sum::<i64>(), 16);
}

#[test]
fn qchar_csv_has_one_column_per_coordinate() {
    let text = ok(&["qchar", "--n", "1", "--lambda", "2", "--format", "csv"]);
    assert_eq!(text, "q,e1,mult\n0,2,1\n1,0,1\n2,-2,1\n");
    let omega = ok(&["weyl", "--n", "2", "--lambda", "1,0", "--format", "csv", "--weight-basis", "omega"]);
    assert!(omega.starts_with("q,w1,w2,mult\n"), "{omega}");
}

#[test]
fn polytope_document() {
    let doc = json(&["polytope", "--n", "2", "--lambda", "1,0"]);
    assert_eq!(doc["system"], "sp_4");
    assert_eq!(doc["roots"].as_array().unwrap().len(), 4);
    assert_eq!(doc["points"].as_array().unwrap().len(), 4);
    let csv = ok(&["polytope", "--n", "1", "--lambda", "2", "--format", "csv"]);
    assert_eq!(csv, "s_1_1\n0\n1\n2\n");
}

#[test]
fn abl_verify_reports_a_match() {
    let doc = json(&["abl-verify", "--n", "2", "--lambda", "1,0", "--trials", "3", "--seed", "9"]);
    assert_eq!(doc["matched"], true);
    assert_eq!(doc["fixed_points"], 16);
    assert_eq!(doc["points"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_byte_stable_for_a_fixed_seed() {
    let args = ["abl-verify", "--n", "2", "--lambda", "0,1", "--trials", "4", "--seed", "123"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let threaded = ["--threads", "1", "abl-verify", "--n", "2", "--lambda", "0,1", "--trials", "4", "--seed", "123"];
    assert_eq!(first, ok(&threaded));
    let other = ok(&["abl-verify", "--n", "2", "--lambda", "0,1", "--trials", "4", "--seed", "124"]);
    assert_ne!(first, other);
}

#[test]
fn discrepancy_table() {
    let doc = json(&["discrepancy", "--n", "3"]);
    assert_eq!(doc["identity_holds"], true);
    assert_eq!(doc["oracle_agrees"], true);
    for row in doc["rows"].as_array().unwrap() {
        let (i, j, b) = (row["i"].as_u64().unwrap(), row["j"].as_u64().unwrap(), row["b"].as_i64().unwrap());
        let exceptional = j >= 3 && i + j < 6;
        assert_eq!(row["exceptional"], exceptional, "({i},{j})");
        assert_eq!(b, if exceptional { 2 } else { 1 }, "({i},{j})");
    }
    let csv = ok(&["discrepancy", "--n", "2", "--d", "1", "--format", "csv"]);
    assert_eq!(csv, "i,j,b,exceptional\n1,1,3,true\n1,2,2,true\n1,3,1,false\n");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["dim", "--n", "2", "--lambda", "1"],
        vec!["dim", "--n", "2", "--lambda", "1,-1"],
        vec!["dim", "--n", "0", "--lambda", ""],
        vec!["dim", "--n", "9", "--lambda", "1,0,0,0,0,0,0,0,0"],
        vec!["fixed-points", "--n", "5", "--count"],
        vec!["discrepancy", "--n", "3", "--d", "1,4"],
        vec!["discrepancy", "--n", "3", "--d", "2,1"],
        vec!["abl-verify", "--n", "2", "--lambda", "1,0", "--trials", "0"],
        vec!["nonsense"],
        vec!["lift", "--input", "/nonexistent/flag.json"],
    ] {
        let (code, out, err) = run_cli(&args);
        assert_eq!(code, 2, "{args:?}: {out} {err}");
        assert!(!err.is_empty(), "{args:?} wrote no diagnostic");
    }
}

#[test]
fn help_exits_with_zero() {
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("abl-verify"));
}

fn write_doc(dir: &tempfile::TempDir, name: &str, doc: &GeometryDoc) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(doc).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn lift_and_check_geometry_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let flag = FlagType::new(3, vec![1, 3]).unwrap();
    let f = random_open_cell_flag(&flag, &mut rng);
    let flag_path = write_doc(&dir, "flag.json", &GeometryDoc::Flag(f.clone()));

    let check = json(&["check-geometry", "--n", "3", "--d", "1,3", "--input", &flag_path]);
    assert_eq!(check["kind"], "flag");
    assert_eq!(check["in_sp_flag_a"], true);

    let lifted_path = dir.path().join("lifted.json");
    let lifted = lifted_path.to_string_lossy().into_owned();
    assert_eq!(ok(&["--output", &lifted, "lift", "--input", &flag_path]), "");
    let doc: GeometryDoc = serde_json::from_str(&std::fs::read_to_string(&lifted_path).unwrap()).unwrap();
    let GeometryDoc::Resolution(p) = doc else { panic!("lift returned a flag") };
    assert_eq!(spflag::geometry::project_pi(&p), f);

    let check = json(&["check-geometry", "--input", &lifted]);
    assert_eq!(check["kind"], "resolution");
    assert_eq!(check["in_resolution"], true);
    assert_eq!(check["projection_in_sp_flag_a"], true);

    let (code, _, _) = run_cli(&["check-geometry", "--n", "2", "--input", &flag_path]);
    assert_eq!(code, 2);
    let (code, _, _) = run_cli(&["lift", "--input", &lifted]);
    assert_eq!(code, 2);
}

#[test]
fn failed_membership_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let flag = FlagType::new(2, vec![1, 2]).unwrap();
    // <w_1, w_4> is not isotropic.
    let bad = FlagPoint {
        flag: flag.clone(),
        spaces: vec![
            Subspace::coordinate(4, [1]),
            Subspace::coordinate(4, [1, 4]),
        ],
    };
    let path = write_doc(&dir, "bad.json", &GeometryDoc::Flag(bad.clone()));
    let (code, out, _) = run_cli(&["check-geometry", "--input", &path]);
    assert_eq!(code, 1);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["in_sp_flag_a"], false);
    let (code, _, err) = run_cli(&["lift", "--input", &path]);
    assert_eq!(code, 1, "{err}");

    let mut p = ResolutionPoint::highest_weight(&flag);
    let key = *p.spaces.keys().next().unwrap();
    p.spaces.insert(key, Subspace::coordinate(4, [4]));
    let path = write_doc(&dir, "badres.json", &GeometryDoc::Resolution(p));
    let (code, out, _) = run_cli(&["check-geometry", "--input", &path]);
    assert_eq!(code, 1);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["in_resolution"], false);
}
