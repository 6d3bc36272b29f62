use downup::{run, run_with_stdin, Outcome};
use serde_json::{json, Value};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("downup").chain(args.iter().copied()))
}

fn call_with(args: &[&str], input: &str) -> Outcome {
    let owned = input.to_string();
    run_with_stdin(std::iter::once("downup").chain(args.iter().copied()), &mut || Ok(owned.clone()))
}

fn ok_json(args: &[&str]) -> Value {
    let out = call(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(ok_json(&["simples", "--params", "0,1,1", "--dim", "3"]), json!({"weights": ["-1"]}));
    assert_eq!(
        ok_json(&["iso", "--left", "1,2,0", "--right", "-1/2,1/2,0"]),
        json!({"isomorphic": true, "branch": "swapped_params"})
    );
    assert_eq!(
        ok_json(&["nf", "--params", "2,-1,1", "--expr", "d^2*u - 2*d*u*d + u*d^2 - d"]),
        json!({"zero": true})
    );
    // exact text, key order included
    assert_eq!(call(&["simples", "--params", "0,1,1", "--dim", "3"]).stdout, "{\"weights\":[\"-1\"]}\n");
}

#[test]
fn verdict_commands() {
    assert_eq!(
        ok_json(&["semisimple", "--params", "-1,2,1", "--bound", "3"]),
        json!({"answer": "not_semisimple", "witness": [3, 1], "bound": 3})
    );
    assert_eq!(ok_json(&["semisimple", "--params", "0,1,1"])["answer"], "semisimple");
    assert_eq!(ok_json(&["semisimple", "--params", "2,-1,1"])["answer"], "out_of_theorem_scope");
    let v = ok_json(&["verma", "--params", "-1,2,1", "--lambda", "0", "--bound", "16"]);
    assert_eq!((v["zeros"].clone(), v["length"].clone()), (json!([1, 3]), json!(3)));
    assert_eq!(ok_json(&["type", "--params", "2,-1,1"])["type"], "d");
    let t = ok_json(&["type", "--params", "1,2,1"]);
    assert_eq!(t["typec_invariant"]["matrix"], json!([["2", "0"], ["0", "-1"]]));
    assert_eq!(ok_json(&["ext", "--params", "-1,2,1", "--from", "0", "--to", "1"])["ext1"], 1);
    let probe = ok_json(&["probe", "--params", "0,1,1", "--dim-bound", "5"]);
    assert_eq!(probe["pairs"], json!([]));
}

#[test]
fn extension_field() {
    let field = "minpoly=t^2+t+1";
    let v = ok_json(&["--field", field, "simples", "--params", "1+w,-w,1", "--dim", "3"]);
    assert_eq!(v, json!({"weights": []}));
    let v = ok_json(&["--field", field, "simples", "--params", "1+w,-w,1", "--dim", "2"]);
    assert_eq!(v["weights"].as_array().unwrap().len(), 1);
    let o = ok_json(&["--field", field, "orbit", "--params", "-1,-1,0", "--point", "1,1"]);
    assert_eq!((o["period"].clone(), o["predicted"]["period"].clone()), (json!(3), json!(3)));
    // over Q the same orbit has no closed-form prediction
    assert_eq!(ok_json(&["orbit", "--params", "-1,-1,0", "--point", "1,1"])["predicted"], Value::Null);
}

#[test]
fn module_round_trip() {
    let cases: [&[&str]; 4] = [
        &["module", "--params", "-1,-1,0", "--orbit", "1,1"],
        &["module", "--params", "2,-1,1", "--simple", "-3/2"],
        &["module", "--params", "-1,2,1", "--verma", "0", "--dim", "3"],
        &["--field", "minpoly=t^2+t+1", "module", "--params", "1+w,-w,1", "--simple", "w"],
    ];
    for args in cases {
        let out = call(args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let mut pre: Vec<&str> = Vec::new();
        if args[0] == "--field" {
            pre.extend(&args[..2]);
        }
        let verify = call_with(&[&pre[..], &["verify", "--module", "-"]].concat(), &out.stdout);
        assert_eq!(verify.code, 0, "{}", verify.stderr);
        let v: Value = serde_json::from_str(&verify.stdout).unwrap();
        assert_eq!(v["ok"], true);
        let inline = call(&["verify", "--module", out.stdout.trim()]);
        assert_eq!(inline.stdout, verify.stdout);
        let dual = call_with(&["module", "--dual", "-"], &out.stdout);
        assert_eq!(dual.code, 0);
        let back = call_with(&["module", "--dual", "-"], &dual.stdout);
        let (a, b): (Value, Value) = (serde_json::from_str(&out.stdout).unwrap(), serde_json::from_str(&back.stdout).unwrap());
        assert_eq!((&a["D"], &a["U"]), (&b["D"], &b["U"]));
    }
    let m = ok_json(&["module", "--params", "-1,2,1", "--verma", "0", "--dim", "3"]);
    assert_eq!(ok_json(&["verify", "--module", &m.to_string()])["is_simple"], false);
}

#[test]
fn normal_form_round_trip() {
    let v = ok_json(&["nf", "--params", "1,2,3", "--expr", "u*d^3*u - 1/2*d"]);
    assert_eq!(v["zero"], false);
    let again = call_with(&["nf", "--params", "1,2,3", "--expr", "-"], "u*d^3*u - 1/2*d");
    assert_eq!(serde_json::from_str::<Value>(&again.stdout).unwrap(), v);
}

#[test]
fn deterministic_output() {
    let cases: [&[&str]; 4] = [
        &["probe", "--params", "-1,2,1", "--dim-bound", "4"],
        &["nf", "--params", "3,-5,2", "--expr", "(d*u - u*d)^3"],
        &["orbit", "--params", "0,1,0", "--point", "2,-3"],
        &["--pretty", "type", "--params", "4,-4,1"],
    ];
    for args in cases {
        let a = call(args);
        assert_eq!(a.code, 0);
        assert_eq!(a, call(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["semisimple", "--params", "1,1,1"]).code, 1);
    assert_eq!(call(&["simples", "--params", "1,0,1", "--dim", "1"]).code, 1);
    assert_eq!(call(&["--field", "minpoly=t^2-1", "simples", "--params", "0,1,1", "--dim", "1"]).code, 1);
    assert_eq!(call(&["module", "--params", "0,1,1", "--orbit", "0,0"]).code, 1);

    let bad_expr = call(&["nf", "--params", "1,1,1", "--expr", "d u"]);
    assert_eq!(bad_expr.code, 2);
    assert!(bad_expr.stderr.contains("--expr"));
    let short = call(&["simples", "--params", "0,1", "--dim", "3"]);
    assert_eq!(short.code, 2);
    assert!(short.stderr.contains("--params"));
    assert_eq!(call(&["simples", "--params", "0,1,1"]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["verify", "--module", "{\"dim\": 2}"]).code, 2);
    assert_eq!(call(&["--help"]).code, 0);
}
