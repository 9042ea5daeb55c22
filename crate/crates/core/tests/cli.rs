use serde_json::Value;
use sfdepth::cli::{run, Outcome, Report, EXIT_CAPABILITY, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};

fn sfdepth(args: &[&str]) -> Outcome {
    run(std::iter::once("sfdepth").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = sfdepth(&full);
    (out.status, serde_json::from_str(&out.stdout).expect("json output"))
}

#[test]
fn depth_of_example2() {
    let (status, v) = json(&["depth", "--fixture", "example2"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["depth"], 2);
    assert_eq!(v["n"], 5);
    assert_eq!(v["mu"], 8);
    assert_eq!(v["field"], "GF(2)");
    assert_eq!(v["bounds"]["sdepth_max_n"], 8);
}

#[test]
fn sdepth_inline() {
    let (status, v) = json(&["sdepth", "--ideal", "n=3 {1,2} {2,3}"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["sdepth"], 2);
    let (_, v) = json(&["sdepth", "--fixture", "example2", "--full"]);
    assert_eq!(v["sdepth"], 3);
}

#[test]
fn rho_of_example2() {
    let (status, v) = json(&["rho", "--d", "2", "--fixture", "example2"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["rho"], 8);
    let (_, v) = json(&["rho", "--d", "3", "--fixture", "example2"]);
    assert_eq!(v["rho"], 10);
}

#[test]
fn non_minimal_input_is_normalized() {
    let (_, v) = json(&["depth", "--ideal", "n=3 {1,2} {1,2,3} {2,3}"]);
    assert_eq!(v["ideal"], "n=3 {1,2} {2,3}");
    assert_eq!(v["normalization"], "input normalized to minimal generators");
    assert_eq!(v["depth"], 2);
}

#[test]
fn field_flag() {
    let (_, v) = json(&["depth", "--family", "I:5", "--field", "0"]);
    assert_eq!(v["field"], "QQ (char 0)");
    assert_eq!(v["depth"], 3);
    let out = sfdepth(&["depth", "--fixture", "example1", "--field", "4"]);
    assert_eq!(out.status, EXIT_USAGE);
}

#[test]
fn parse_error_reports_position() {
    let (status, v) = json(&["depth", "--ideal", "n=3 {1,2} {1,9}"]);
    assert_eq!(status, EXIT_USAGE);
    assert!(v["error"].as_str().unwrap().contains("byte"), "{v}");
}

#[test]
fn zero_and_unit_ideals_are_rejected() {
    assert_eq!(sfdepth(&["depth", "--ideal", "n=3"]).status, EXIT_USAGE);
    assert_eq!(sfdepth(&["sdepth", "--ideal", "n=3 {}"]).status, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    assert_eq!(sfdepth(&["nonsense"]).status, EXIT_USAGE);
    assert_eq!(sfdepth(&["depth"]).status, EXIT_USAGE);
    assert_eq!(sfdepth(&["depth", "--fixture", "example1", "--family", "L:4"]).status, EXIT_USAGE);
    assert_eq!(sfdepth(&["depth", "--fixture", "nope"]).status, EXIT_USAGE);
    assert_eq!(sfdepth(&["family", "--kind", "L", "--n", "2"]).status, EXIT_USAGE);
}

#[test]
fn capability_and_budget_exit_3() {
    let (status, v) = json(&["sdepth", "--family", "L:9"]);
    assert_eq!(status, EXIT_CAPABILITY);
    assert!(v["error"].as_str().unwrap().contains("n <= 8"));
    assert_eq!(sfdepth(&["depth", "--family", "L:13"]).status, EXIT_CAPABILITY);
    assert_eq!(sfdepth(&["enumerate", "--n", "6"]).status, EXIT_CAPABILITY);
    let (status, v) = json(&["sdepth", "--fixture", "example2", "--budget", "3"]);
    assert_eq!(status, EXIT_CAPABILITY);
    assert_eq!(v["sdepth"], "unknown");
}

#[test]
fn check_partition() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# example 1\n[{1,2},{1,2,3}]\n\n[{2,3},{2,3}]\n").unwrap();
    let (status, v) = json(&["check-partition", good.to_str().unwrap(), "--fixture", "example1"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["valid"], true);
    assert_eq!(v["partition_sdepth"], 2);

    let missing = dir.path().join("missing.txt");
    std::fs::write(&missing, "[{1,2},{1,2,3}]\n").unwrap();
    let (status, v) = json(&["check-partition", missing.to_str().unwrap(), "--fixture", "example1"]);
    assert_eq!(status, EXIT_VERIFICATION);
    assert_eq!(v["valid"], false);
    assert_eq!(v["witness"], "{2,3}");

    let overlap = dir.path().join("overlap.txt");
    std::fs::write(&overlap, "[{1,2},{1,2,3}]\n[{2,3},{1,2,3}]\n").unwrap();
    let (status, v) = json(&["check-partition", overlap.to_str().unwrap(), "--fixture", "example1"]);
    assert_eq!(status, EXIT_VERIFICATION);
    assert_eq!(v["witness"], "{1,2,3}");

    let garbled = dir.path().join("garbled.txt");
    std::fs::write(&garbled, "[{1,2},{1,2,3}]\n[{2,3} {2,3}]\n").unwrap();
    assert_eq!(sfdepth(&["check-partition", garbled.to_str().unwrap(), "--fixture", "example1"]).status, EXIT_USAGE);
}

#[test]
fn ideal_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.txt");
    std::fs::write(&path, "n=4 {1,2} {3,4}\n").unwrap();
    let (status, v) = json(&["depth", "--file", path.to_str().unwrap()]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["depth"], 3);
}

#[test]
fn verify_commands() {
    let (status, v) = json(&["verify", "prop1", "--max-n", "3"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["ideals"], 23);
    assert_eq!(v["inconsistencies"], 0);
    let (status, v) = json(&["verify", "stanley", "--n", "4"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["checked"], 189);
    let (status, v) = json(&["verify", "stanley", "--n", "6", "--samples", "20", "--seed", "7"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["checked"], 20);
    let (status, v) = json(&["verify", "lemma5", "--max-n", "6"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn probe_remark_st() {
    let (status, v) = json(&["probe", "remark-st", "--max-n", "8"]);
    assert_eq!(status, EXIT_OK);
    assert_eq!(v["boundary_2d_ge_n_exact"], true);
    let rows = v["rows"].as_array().unwrap();
    let r52 = rows.iter().find(|r| r["n"] == 5 && r["d"] == 2).unwrap();
    assert_eq!(r52["holds"], false);
}

#[test]
fn family_and_enumerate() {
    let (_, v) = json(&["family", "--kind", "L", "--n", "4"]);
    assert_eq!(v["ideal"], "n=4 {1,2} {1,4} {3,4}");
    assert_eq!(v["mu"], 3);
    assert_eq!(v["degree"], 2);
    let (_, v) = json(&["enumerate", "--n", "3"]);
    assert_eq!(v["count"], 18);
    let (_, v) = json(&["enumerate", "--n", "3", "--min-degree", "2"]);
    assert_eq!(v["count"], 8);
}

#[test]
fn text_and_json_agree() {
    for args in [
        vec!["depth", "--fixture", "example2"],
        vec!["sdepth", "--fixture", "example1"],
        vec!["poset", "--family", "I:4"],
        vec!["verify", "lemma5", "--max-n", "5"],
        vec!["probe", "remark-st", "--max-n", "5"],
        vec!["sdepth", "--family", "L:9"],
    ] {
        let text = sfdepth(&args);
        let (status, v) = json(&args);
        assert_eq!(text.status, status);
        let parsed = Report::parse_text(&text.stdout).expect("text report parses");
        assert_eq!(parsed.to_json(), v, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["sdepth", "--fixture", "example2"], vec!["verify", "stanley", "--n", "6", "--samples", "30"]] {
        let a = sfdepth(&args);
        let b = sfdepth(&args);
        assert_eq!(a, b);
    }
}
