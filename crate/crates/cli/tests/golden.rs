use std::process::Command;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_graphcalc")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn exact_outputs() {
    let k4 = data("k4.txt");
    assert_eq!(ok(&["trees", &k4, "--method", "matrix"]), "16\n");
    assert_eq!(ok(&["egf", "all_matchings", "5"]), "1 2 4 10 26\n");
    assert_eq!(ok(&["heawood", "1"]), "7\n");
    assert_eq!(ok(&["chromatic", &k4]), "0 -6 11 -6 1\n");
    assert_eq!(ok(&["matchpoly", &k4]), "1 6 3\n");
    assert_eq!(ok(&["treepoly", &data("tree_poly6.txt")]), "2,0,2,0,0,0:1\n2,1,1,0,0,0:1\n3,0,1,0,0,0:1\n");
    assert_eq!(ok(&["rado", "adj", "1", "2"]), "true\n");
}

#[test]
fn methods_agree() {
    let k4 = data("k4.txt");
    for m in ["brute", "dpc", "matrix"] {
        assert_eq!(ok(&["trees", &k4, "--method", m]), "16\n");
    }
    let k8 = data("k8.txt");
    assert_eq!(ok(&["trees", &k8]), format!("{}\n", 8u64.pow(6)));
}

#[test]
fn structured_reports() {
    let mc = ok(&["mincut", &data("diamond_arcs.txt"), "--s", "0", "--t", "3"]);
    assert!(mc.starts_with("paths 2\n"), "{mc}");
    let tor = ok(&["torcheck", &data("k8.txt")]);
    assert!(tor.ends_with("verdict not toroidal\n"), "{tor}");
    let wgc = ok(&["puzzle", "wgc"]);
    assert!(wgc.contains("shortest 7\n") && wgc.ends_with("simple solutions 2\n"));
    let circ = ok(&["ramsey", "circulant", "17", "1,2,4,8"]);
    assert!(circ.contains("largest red clique 3\n") && circ.contains("largest blue clique 3\n"));
}

#[test]
fn json_output() {
    assert_eq!(ok(&["heawood", "1", "--json"]), "{\"bound\":7,\"genus\":1}\n");
    let v: serde_json::Value = serde_json::from_str(&ok(&["trees", &data("k4.txt"), "--json"])).unwrap();
    assert_eq!(v["trees"], "16");
}

#[test]
fn exit_codes() {
    let (code, out, err) = run(&["trees", "no/such/file.txt"]);
    assert_eq!((code, out.as_str()), (1, ""));
    assert!(err.starts_with("error:"));
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["heawood", "not-a-number"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["gnp", "40", "1/2", "9"];
    assert_eq!(run(&args), run(&args));
    let args = ["puzzle", "mc", "3", "3", "2"];
    assert_eq!(run(&args), run(&args));
}
