use insdraw::drawing::json::GeometricJson;
use insdraw::reduction::{build_snail, SnailCell};
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn insdraw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_insdraw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn snail_file(name: &str, u: SnailCell, v: SnailCell) -> PathBuf {
    let cs = build_snail().with_endpoints(u, v);
    scratch(name, &serde_json::to_string(&GeometricJson::from_curve_set(&cs)).unwrap())
}

#[test]
fn roundtrip_single_repeated_literal() {
    let cnf = scratch("x1.cnf", "p cnf 1 1\n1 1 1 0\n");
    let o = insdraw(&["roundtrip", cnf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sat=true insertable=true agree=true"));
}

#[test]
fn roundtrip_contradiction() {
    let cnf = scratch("contra.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    let o = insdraw(&["roundtrip", cnf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sat=false insertable=false agree=true"));
}

#[test]
fn extend_without_circles_gives_empty_certificate() {
    let a = scratch(
        "empty.json",
        r#"{"circles": [], "sigma": {"u_point": [0, 0], "v_point": [3, 1], "points": []}}"#,
    );
    let o = insdraw(&["extend", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["crossings"], Value::Array(vec![]));
}

#[test]
fn extend_interlocked_pair_is_no() {
    let a = insdraw::pseudocircles::instances::interlocked_pair();
    let path = scratch("interlocked.json", &serde_json::to_string(&a.to_json()).unwrap());
    let o = insdraw(&["extend", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["obstruction"]["stage"], "initial");
    let o = insdraw(&["extend", path.to_str().unwrap(), "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn snail_x_to_y_is_no() {
    let path = snail_file("snail_xy.json", SnailCell::X, SnailCell::Y);
    for strategy in ["oracle", "fpt"] {
        let o = insdraw(&["insert", path.to_str().unwrap(), "--u", "u", "--v", "v", "--strategy", strategy]);
        assert_eq!(o.status.code(), Some(1), "{strategy}");
        assert_eq!(json(&o)["answer"], "no");
    }
}

#[test]
fn snail_x_to_b2_crosses_b2() {
    let path = snail_file("snail_xb2.json", SnailCell::X, SnailCell::B2);
    for strategy in ["oracle", "fpt"] {
        let o = insdraw(&["insert", path.to_str().unwrap(), "--u", "u", "--v", "v", "--strategy", strategy]);
        assert_eq!(o.status.code(), Some(0), "{strategy}");
        let crossed = json(&o)["crossed"].clone();
        assert!(crossed.as_array().unwrap().iter().any(|c| c == "b2"), "{crossed}");
    }
}

#[test]
fn validate_reports_simple_snail() {
    let path = snail_file("snail_v.json", SnailCell::X, SnailCell::A1);
    let o = insdraw(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["simple"], true);
}

#[test]
fn exit_codes_for_bad_input() {
    let o = insdraw(&["validate", "/definitely/not/here.json"]);
    assert_eq!(o.status.code(), Some(2));
    let junk = scratch("junk.json", "{ not json");
    assert_eq!(insdraw(&["validate", junk.to_str().unwrap()]).status.code(), Some(2));
    let cnf = scratch("bad.cnf", "p cnf 1 1\n1 2 0\n");
    assert_eq!(insdraw(&["roundtrip", cnf.to_str().unwrap()]).status.code(), Some(2));
    let path = snail_file("snail_e.json", SnailCell::X, SnailCell::Y);
    let o = insdraw(&["insert", path.to_str().unwrap(), "--u", "u", "--v", "nowhere"]);
    assert_eq!(o.status.code(), Some(3));
    let o = insdraw(&["insert", path.to_str().unwrap(), "--u", "u", "--v", "v", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(2), "clap rejects a zero budget");
}

#[test]
fn tiny_budget_times_out() {
    let cnf = scratch("contra_t.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    let o = insdraw(&["roundtrip", cnf.to_str().unwrap(), "--budget", "3"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn reduce_writes_both_files() {
    let cnf = scratch("red.cnf", "p cnf 2 1\n1 -2 2 0\n");
    let prefix = cnf.with_extension("");
    let o = insdraw(&["reduce", cnf.to_str().unwrap(), "--out", prefix.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let d = prefix.with_extension("drawing.json");
    let s = prefix.with_extension("sidecar.json");
    assert!(s.exists());
    let o = insdraw(&["validate", d.to_str().unwrap()]);
    assert_eq!(json(&o)["simple"], true);
}

#[test]
fn render_formats() {
    let path = snail_file("snail_r.json", SnailCell::X, SnailCell::B2);
    let p = path.to_str().unwrap();
    let dot = stdout(&insdraw(&["render", p]));
    assert!(dot.starts_with("graph planarization {"));
    let dual = stdout(&insdraw(&["render", p, "--dual", "--u", "u", "--v", "v"]));
    assert!(dual.contains("doublecircle"));
    let svg = stdout(&insdraw(&["render", p, "--format", "svg"]));
    assert!(svg.starts_with("<svg"));
}

#[test]
fn gen_output_feeds_other_commands() {
    let d = stdout(&insdraw(&["gen", "--kind", "drawing", "--seed", "7"]));
    let dp = scratch("gen_d.json", &d);
    let o = insdraw(&["insert", dp.to_str().unwrap(), "--u", "u", "--v", "v"]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
    let a = stdout(&insdraw(&["gen", "--kind", "arrangement", "--seed", "7"]));
    let ap = scratch("gen_a.json", &a);
    let o = insdraw(&["extend", ap.to_str().unwrap()]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
}

#[test]
fn outputs_are_deterministic() {
    let path = snail_file("snail_det.json", SnailCell::X, SnailCell::B2);
    let p = path.to_str().unwrap();
    let cnf = scratch("det.cnf", "p cnf 2 2\n1 2 -1 0\n-2 -2 1 0\n");
    let c = cnf.to_str().unwrap();
    let runs: [&[&str]; 7] = [
        &["gen", "--kind", "drawing", "--seed", "11"],
        &["gen", "--kind", "arrangement", "--seed", "11"],
        &["insert", p, "--u", "u", "--v", "v", "--strategy", "fpt"],
        &["validate", p],
        &["render", p, "--format", "svg"],
        &["reduce", c],
        &["roundtrip", c],
    ];
    for args in runs {
        let a = insdraw(args);
        let b = insdraw(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
