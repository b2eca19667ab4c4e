use repcoh::cli::{main_with_args, Outcome, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> Outcome {
    main_with_args(std::iter::once("repcoh").chain(args.iter().copied()))
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["theta", "--group", "G2", "--weight", "omega1"]).status, EXIT_OK);
    assert_eq!(run(&["xi", "--group", "G2", "--parabolic", "1"]).status, EXIT_MISMATCH);
    assert_eq!(run(&["xi", "--group", "G2", "--parabolic", "2"]).status, EXIT_OK);
    for bad in [
        &["xi", "--group", "H3", "--parabolic", "1"][..],
        &["xi", "--group", "G2", "--parabolic", "3"],
        &["duan", "--group", "A2", "--w", "1,2", "--u", "1", "--v", "1,2"],
        &["ogring", "--k", "2", "--n", "3"],
        &["ogring", "--k", "2", "--n", "4", "--mod2-injectivity"],
        &["verify", "--suite", "cache"],
        &["frobnicate"],
    ] {
        let o = run(bad);
        assert_eq!(o.status, EXIT_USAGE, "{bad:?}");
    }
}

#[test]
fn duan_constant_is_an_integer() {
    let values: Vec<String> = ["duan", "chevalley"]
        .iter()
        .map(|engine| {
            let o = run(&["--format", "json", "duan", "--group", "F4", "--w", "2,3,2,1", "--u", "2,1", "--v", "3,2", "--engine", engine]);
            assert_eq!(o.status, EXIT_OK);
            let v: serde_json::Value = serde_json::from_str(&o.report).unwrap();
            let s = v["value"].as_str().unwrap().to_string();
            assert!(s.parse::<i64>().is_ok(), "{s}");
            s
        })
        .collect();
    assert_eq!(values[0], values[1]);
}

#[test]
fn json_is_deterministic_across_jobs() {
    let args = |j: &'static str| vec!["--format", "json", "--jobs", j, "xi", "--group", "F4", "--parabolic", "1,2"];
    let a = run(&args("1"));
    let b = run(&args("4"));
    assert_eq!(a.report, b.report);
    let v: serde_json::Value = serde_json::from_str(&a.report).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn ogring_hilbert_json() {
    let o = run(&["--format", "json", "ogring", "--k", "2", "--n", "4", "--hilbert"]);
    assert_eq!(o.status, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.report).unwrap();
    let s = v.to_string();
    assert!(s.contains("[1,1,3,3,4,4,3,3,1,1]"), "{s}");
}

#[test]
fn corrupted_corpus_copy_is_refused() {
    let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let dir = std::env::temp_dir().join(format!("repcoh-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for e in std::fs::read_dir(&src).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), dir.join(e.file_name())).unwrap();
    }
    let d = dir.to_str().unwrap();
    let ok = run(&["verify", "--suite", "corpus", "--corpus-dir", d]);
    assert!(ok.error.is_none(), "{:?}", ok.error);
    let f = dir.join("theta_G2.txt");
    let text = std::fs::read_to_string(&f).unwrap();
    std::fs::write(&f, text.replacen('1', "2", 1)).unwrap();
    let bad = run(&["verify", "--suite", "corpus", "--corpus-dir", d]);
    assert_eq!(bad.status, EXIT_MISMATCH);
    assert!(bad.error.unwrap().contains("theta_G2.txt"));
    assert!(bad.report.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status, EXIT_OK, "{}", o.report);
    assert!(o.report.contains("7/7"));
}
