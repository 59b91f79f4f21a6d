use radio_block_wasm::{analyze_report, exact_report, family_report};

#[test]
fn family_report_for_named_star() {
    let v = family_report(r#"{"family":"extended_star","m":3,"k":2,"h":2,"n":4}"#).unwrap();
    assert_eq!(v["span"], 82);
    assert_eq!(v["closed_form"], 82);
    assert_eq!(v["certificate"]["verdict"]["status"], "certified");
    assert_eq!(
        v["names"].as_array().unwrap().len(),
        v["order"].as_u64().unwrap() as usize
    );
}

#[test]
fn family_report_rejects_bad_specs() {
    assert!(family_report(r#"{"family":"extended_star","m":1,"k":1,"h":1,"n":2}"#).is_err());
    assert!(family_report("not json").is_err());
}

#[test]
fn analyze_and_exact_on_p5() {
    let p5 = "5\n0 1\n1 2\n2 3\n3 4\n";
    let a = analyze_report(p5).unwrap();
    assert_eq!(
        (a["lb"].as_u64(), a["diameter"].as_u64()),
        (Some(9), Some(4))
    );
    let e = exact_report(p5, 10).unwrap();
    assert_eq!(e["rn"], 10);
    assert_ne!(e["certificate"]["verdict"]["status"], "certified");
    assert!(exact_report(p5, 4).is_err());
}

#[test]
fn analyze_handles_cliques() {
    let k3 = analyze_report("3\n0 1\n1 2\n0 2\n").unwrap();
    assert!(k3["lb"].is_null());
    assert!(analyze_report("4\n0 1\n1 2\n2 3\n3 0\n").is_err());
}
