use std::process::Command;

use mosaic::moduli::ModuliComplex;

fn mosaic(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mosaic")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn counts_show_three_euler_values() {
    let (code, out, _) = mosaic(&["counts", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("euler: enumerated -3  proof-sum -3  closed form -3"), "{out}");
    let (code, out, _) = mosaic(&["counts", "--n", "6", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["euler"]["closed_form"], 0);
    assert_eq!(v["euler"]["enumerated"], 0);
    assert_eq!(v["consistent"], true);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(mosaic(&["counts", "--n", "11", "--enumerate"]).0, 64);
    assert_eq!(mosaic(&["divisor", "--n", "5", "--set", "1"]).0, 64);
    assert_eq!(mosaic(&["complex", "--n", "9"]).0, 64);
    assert_eq!(mosaic(&["quasibraid", "--n", "10", "gens"]).0, 64);
    assert_eq!(mosaic(&["complex", "--n", "5", "--mode", "sideways"]).0, 64);
    assert_eq!(mosaic(&["nonsense"]).0, 64);
    assert_eq!(mosaic(&["verify", "--n-max", "9"]).0, 64);
}

#[test]
fn complex_dot_outputs() {
    let (code, out, _) = mosaic(&["complex", "--n", "5", "--dot"]);
    assert_eq!(code, 0);
    let nodes = out.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("--")).count();
    assert_eq!(nodes, 12);
    assert_eq!(out.matches(" -- ").count(), 30);

    let (_, out, _) = mosaic(&["complex", "--n", "4", "--mode", "double-cover", "--format", "dot"]);
    assert_eq!(out.matches(" -- ").count(), 6);
}

#[test]
fn complex_json_round_trips() {
    let (code, out, _) = mosaic(&["complex", "--n", "5", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 57);
    assert_eq!(v["tiles"].as_array().unwrap().len(), 12);
    let c = ModuliComplex::from_json(&out).unwrap();
    assert_eq!(c.to_json() + "\n", out);
    let (_, again, _) = mosaic(&["complex", "--n", "5", "--json"]);
    assert_eq!(again, out);
}

#[test]
fn divisor_reports() {
    let (code, out, _) = mosaic(&["divisor", "--n", "6", "--set", "1,2,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("9 top cells") && out.trim_end().ends_with("PASS"), "{out}");
    let (code, out, _) = mosaic(&["divisor", "--n", "5", "--set", "1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("3 top cells"), "{out}");
}

#[test]
fn quasibraid_subcommands() {
    let (code, out, _) = mosaic(&["quasibraid", "--n", "5", "gens"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("5 generators"));
    let (code, out, _) = mosaic(&["quasibraid", "--n", "5", "phi"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS: all relations preserved, surjective"));
    let (_, a, _) = mosaic(&["quasibraid", "--n", "4", "export"]);
    let (_, b, _) = mosaic(&["quasibraid", "--n", "4", "export"]);
    assert_eq!(a, b);
    assert!(a.starts_with("generators: g1 g2\n"));
    let (code, out, _) = mosaic(&["quasibraid", "--n", "6", "relations"]);
    assert_eq!(code, 0);
    assert!(out.lines().skip(1).all(|l| l.contains(" = ")));
}

#[test]
fn verify_small() {
    let (code, out, _) = mosaic(&["verify", "--n-max", "6"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 11);
    let (code, out, _) = mosaic(&["verify", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert!(!out.contains("FAIL"));
}
