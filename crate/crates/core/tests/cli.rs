use std::fs;
use std::process::Command;

use serde_json::{json, Value};

fn toda_gauss(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_toda-gauss"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn worked_instance_passes_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("state.json");
    fs::write(
        &input,
        json!({"field": "Q", "I": ["1", "2", "3"], "V": ["4", "5", "6"]}).to_string(),
    )
    .unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    let run = |out: &std::path::Path, from: &std::path::Path| {
        toda_gauss(&[
            "verify-theorem1",
            "--in",
            from.to_str().unwrap(),
            "--steps",
            "3",
            "--out",
            out.to_str().unwrap(),
        ])
        .0
    };
    assert_eq!(run(&first, &input), 0);
    assert_eq!(run(&second, &first), 0);
    let a = fs::read(&first).unwrap();
    assert_eq!(a, fs::read(&second).unwrap());
    let trace: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(trace["schema"], "toda-gauss/1");
    assert_eq!(trace["outcome"], "pass");
    let ids: Vec<&str> = trace["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"translation.step3"));
}

#[test]
fn seeded_runs_are_byte_identical() {
    for mode in [
        "toda-run",
        "bbs-run",
        "jac-add",
        "verify-torsion",
        "verify-bbs-diagram",
        "gen-random",
    ] {
        let args = [mode, "--seed", "17", "--steps", "2", "--boxes", "16"];
        let (code, a) = toda_gauss(&args);
        assert_eq!(code, 0, "{mode}");
        assert_eq!(a, toda_gauss(&args).1, "{mode}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, v: Value| {
        let p = dir.path().join(name);
        fs::write(&p, v.to_string()).unwrap();
        p
    };
    // I'_1 = V_1 + 1 vanishes
    let exits = write(
        "exit.json",
        json!({"field": "Q", "I": ["1", "1"], "V": ["-1", "2"]}),
    );
    assert_eq!(
        toda_gauss(&["toda-run", "--in", exits.to_str().unwrap()]).0,
        1
    );

    let zero = write(
        "zero.json",
        json!({"field": "Q", "I": ["1", "0", "2"], "V": ["1", "1", "1"]}),
    );
    assert_eq!(
        toda_gauss(&["toda-run", "--in", zero.to_str().unwrap()]).0,
        3
    );
    let small = write(
        "small.json",
        json!({"field": "Q", "I": ["1", "2"], "V": ["1", "1"]}),
    );
    assert_eq!(
        toda_gauss(&["verify-torsion", "--in", small.to_str().unwrap()]).0,
        3
    );
    let dense = write("dense.json", json!("1111100000"));
    assert_eq!(
        toda_gauss(&["bbs-run", "--in", dense.to_str().unwrap()]).0,
        3
    );
    let few = write("few.json", json!("1101000000"));
    assert_eq!(
        toda_gauss(&["verify-bbs-diagram", "--in", few.to_str().unwrap()]).0,
        3
    );
    assert_eq!(toda_gauss(&["verify-theorem1", "--field", "R"]).0, 3);
    assert_eq!(toda_gauss(&["no-such-mode"]).0, 3);

    // a divisor that is not on the curve
    let off = write(
        "off.json",
        json!({
            "field": "Q",
            "curve": {"h": ["126", "-114", "21", "-1"], "f": "-720"},
            "a": {"P": ["0", "1"], "Q": ["1"], "d": 2},
            "b": {"P": ["1"], "Q": [], "d": 0},
        }),
    );
    assert_eq!(toda_gauss(&["jac-add", "--in", off.to_str().unwrap()]).0, 3);
}

#[test]
fn function_field_instances() {
    let (code, out) = toda_gauss(&["verify-torsion", "--field", "QT", "--seed", "5"]);
    assert_eq!(code, 0);
    let trace: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(trace["input"]["field"], "Q(T)");
}
