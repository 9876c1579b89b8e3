use std::process::Command;

use serde_json::Value;

fn a4(args: &[&str]) -> (Value, i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_a4")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (v, out.status.code().unwrap(), text)
}

#[test]
fn exit_codes() {
    assert_eq!(a4(&["classify", "--alpha", "1,0,0,0,0"]).1, 0);
    assert_eq!(a4(&["classify", "--alpha", "1/2,1/2,0,0,0"]).1, 1);
    assert_eq!(a4(&["classify", "--alpha", "1/2,1/2,x,0,0"]).1, 2);
    assert_eq!(a4(&["construct", "--alpha", "0.2,0.2,0.2,0.2,0.2"]).1, 2);
    assert_eq!(a4(&["expand", "--alpha", "1,0,0,0,0", "--type", "D(1)"]).1, 2);
    assert_eq!(a4(&["bogus"]).1, 2);
}

#[test]
fn inconclusive_on_word_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_a4"))
        .args(["classify", "--alpha", "40,-39,0,0,0"])
        .env("A4_WORD_CAP", "64")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "inconclusive");
}

#[test]
fn structured_construct_feeds_verify() {
    for alpha in ["-1,1,0,0,1", "1/3,1/3,1/3,0,0", "4/5,-2/5,4/5,2/5,-3/5", "2/3,-1,2/3,1/3,1/3"] {
        let (v, code, _) = a4(&["construct", "--alpha", alpha]);
        assert_eq!(code, 0, "{alpha}");
        assert_eq!(v["status"], "ok");
        let f: Vec<String> = v["payload"]["solution"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
        let mut args = vec!["verify".to_string(), "--alpha".into(), alpha.into()];
        for (i, x) in f.iter().enumerate() {
            args.push(format!("--f{i}"));
            args.push(x.clone());
        }
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (v, code, _) = a4(&refs);
        assert_eq!((code, v["status"].as_str()), (0, Some("ok")), "{alpha}");
    }
}

#[test]
fn text_output() {
    let (_, code, text) = a4(&["--format", "text", "construct", "--alpha", "1,0,0,0,0"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("f0 = t; f1 = 0; f2 = 0; f3 = 0; f4 = 0"), "{text}");
    let (_, _, text) = a4(&["--format", "text", "construct", "--alpha", "1/3,1/3,1/3,0,0"]);
    assert!(text.starts_with("f0 = t/3;"), "{text}");
}

#[test]
fn verify_reports_residuals() {
    let (v, code, _) = a4(&[
        "verify", "--alpha", "-1,1,0,0,1", "--f0", "t", "--f1", "1/t + 1", "--f2", "0", "--f3", "-1", "--f4", "-1/t",
    ]);
    assert_eq!(code, 1);
    assert!(!v["payload"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn tables_relations_hamiltonian() {
    let (v, code, _) = a4(&["tables"]);
    assert_eq!(code, 0);
    let row: Vec<&str> = v["payload"][0]["rows"][0]["entries"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(row, ["1/3", "1/3", "1/3", "2/3", "1/3"]);
    let (v, code, _) = a4(&["relations", "--samples", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["violations"].as_array().unwrap().len(), 0);
    let (v, code, _) = a4(&["hamiltonian", "--alpha", "1/5,1/5,1/5,1/5,1/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["expansion"]["hm1"], "0");
    assert_eq!(v["payload"]["balance"]["ok"], true);
}

#[test]
fn apply_reports_degenerate_letters() {
    let (v, code, _) = a4(&["apply", "--word", "s1 s0 s1", "--alpha", "1,0,0,0,0", "--f0", "t", "--f1", "0", "--f2", "0", "--f3", "0", "--f4", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["degenerate_at"], serde_json::json!([0]));
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}
