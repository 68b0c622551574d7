use std::process::{Command, Output};

fn tropcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = tropcount(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count_cubics() {
    let v = json(&["count", "-d", "3", "--pipeline", "ntrop", "--json"]);
    assert_eq!(v["value"], "12");
    assert_eq!(v["degree"], 3);
    assert_eq!(v["pipeline"], "ntrop");
    assert_eq!(v["paths"].as_array().unwrap().len(), 8);
}

#[test]
fn count_small_j_quartics() {
    let v = json(&["count", "-d", "4", "--pipeline", "small_j", "--json"]);
    assert_eq!(v["value"], "1860");
}

#[test]
fn count_large_j_conics_is_zero() {
    let v = json(&["count", "-d", "2", "--pipeline", "large_j", "--json"]);
    assert_eq!(v["value"], "0");
}

#[test]
fn corollary_lists_only_big_step_paths() {
    let v = json(&["count", "-d", "4", "--pipeline", "corollary", "--json"]);
    assert_eq!(v["value"], "620");
    assert_eq!(v["paths"].as_array().unwrap().len(), 213);
}

#[test]
fn json_is_byte_stable() {
    let args = ["count", "-d", "4", "--pipeline", "small_j", "--json"];
    assert_eq!(tropcount(&args).stdout, tropcount(&args).stdout);
}

#[test]
fn cross_check_passes() {
    let o = tropcount(&["count", "-d", "4", "--cross-check"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("cross-check ok"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(tropcount(&["count", "-d", "0"]).status.code(), Some(2));
    assert_eq!(
        tropcount(&["count", "-d", "2", "--pipeline", "corollary"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tropcount(&["count", "-d", "3", "--pipeline", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tropcount(&["render", "-d", "3", "--path-id", "99", "--out", "x.svg"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn paths_listing() {
    let v = json(&["paths", "-d", "3", "--big-steps-only", "--json"]);
    let paths = v["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 1);
    assert_eq!(paths[0]["multiplicity"], "4");
    assert_eq!(paths[0]["subdivisions"], 1);

    let v = json(&["paths", "-d", "3", "--json"]);
    let total: u64 = v["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["multiplicity"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 12);

    let v = json(&["paths", "-d", "1", "--json"]);
    assert_eq!(v["paths"].as_array().unwrap().len(), 1);

    let all = json(&["paths", "-d", "3", "--all", "--json"]);
    assert_eq!(all["paths"].as_array().unwrap().len(), 8);
}

#[test]
fn render_cubic_big_step_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cubic.svg");
    let listing = json(&["paths", "-d", "3", "--big-steps-only", "--json"]);
    let id = listing["paths"][0]["id"].to_string();
    let o = tropcount(&["render", "-d", "3", "--path-id", &id, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    let areas = svg
        .split("data-triangle-double-areas=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap();
    let big: Vec<&str> = areas.split(',').filter(|a| *a != "1").collect();
    assert_eq!(big, vec!["2", "2"]);
    assert_eq!(svg.matches("class=\"triangle\"").count(), 7);
}

#[test]
fn render_line_is_unimodular() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("line.svg");
    let o = tropcount(&["render", "-d", "1", "--path-id", "0", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.contains("data-triangle-double-areas=\"1\""));
    assert!(svg.contains("data-parallelograms=\"0\""));
}

#[test]
fn render_to_bad_location_is_io_error() {
    let o = tropcount(&["render", "-d", "1", "--path-id", "0", "--out", "/nonexistent-dir/x.svg"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "walls", "--trials", "1000", "--seed", "7"][..],
        &["verify", "pick", "--trials", "500", "--seed", "3"][..],
        &["verify", "factors", "-d", "4"][..],
        &["verify", "oracles", "-d", "4"][..],
    ] {
        let o = tropcount(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = tropcount(&["verify", "oracles", "-d", "4"]);
    assert!(stdout(&o).contains("675 with reducible curves, 620 irreducible"));
}
