use std::process::{Command, Output};

fn gchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gchar"))
        .args(args)
        .output()
        .expect("gchar binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn gamma_examples() {
    for (args, want) in [
        (vec!["--lam", "3,2,1", "--mu", "3,2", "--j", "3", "--rho", "2,1"], "-1/2"),
        (vec!["--lam", "3", "--mu", "2", "--j", "3"], "1"),
        (vec!["--lam", "2,2", "--mu", "2,1", "--j", "4"], "0"),
        (vec!["--lam", "3,2,1", "--mu", "3,2", "--class", "3*,2,1"], "-1/2"),
    ] {
        let mut full = vec!["gamma"];
        full.extend(args);
        for method in ["mn", "syt", "def"] {
            let mut with_method = full.clone();
            with_method.extend(["--method", method]);
            let o = gchar(&with_method);
            assert_eq!(o.status.code(), Some(0), "{with_method:?}: {}", stderr(&o));
            assert_eq!(stdout(&o).trim(), want, "{with_method:?}");
        }
    }
}

#[test]
fn raw_degree_two_table() {
    let o = gchar(&["table", "--n", "2", "--scaling", "raw", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["scaling"], "raw");
    let rows: Vec<Vec<String>> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect())
        .collect();
    // Columns: the transposition (2*) first, then the identity.
    assert_eq!(rows, vec![vec!["1", "1"], vec!["-1", "1"]]);
}

#[test]
fn json_output_is_stable() {
    for args in [
        vec!["table", "--n", "5", "--format", "json"],
        vec!["table", "--n", "5", "--format", "json", "--parallel"],
        vec!["schur", "--lam", "3,1", "--mu", "2,1", "--basis", "powersum", "--format", "json"],
        vec!["verify", "--suite", "greene", "--n-max", "4", "--seed", "7", "--format", "json"],
    ] {
        let a = gchar(&args);
        let b = gchar(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
    let serial = stdout(&gchar(&["table", "--n", "5", "--format", "json"]));
    let parallel = stdout(&gchar(&["table", "--n", "5", "--format", "json", "--parallel"]));
    assert_eq!(serial, parallel);
}

#[test]
fn schur_methods_agree() {
    let mut outputs = Vec::new();
    for method in ["rule", "characters", "determinant"] {
        let o = gchar(&["schur", "--lam", "3,2", "--mu", "2,2", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        outputs.push(stdout(&o));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{outputs:?}");
    let o = gchar(&["schur", "--lam", "2", "--mu", "1"]);
    assert_eq!(stdout(&o).trim(), "s[1] + t·s[]");
}

#[test]
fn classes_listing() {
    let o = gchar(&["classes", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let orders: Vec<u64> = v.as_array().unwrap().iter().map(|c| c["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![6, 2, 6, 3, 3, 3, 1]);
}

#[test]
fn verify_examples_pass() {
    for args in [
        vec!["verify", "--suite", "oracles", "--n-max", "5"],
        vec!["verify", "--suite", "all", "--n-max", "4"],
    ] {
        let o = gchar(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: [(&[&str], &str); 6] = [
        (&["gamma", "--lam", "3,x,1", "--mu", "3,2", "--j", "3"], "position 2"),
        (&["gamma", "--lam", "3,2,1", "--mu", "2,2", "--j", "3", "--rho", "2,1"], "--lam/--mu"),
        (&["gamma", "--lam", "3,2,1", "--mu", "3,2", "--j", "2"], "S("),
        (&["verify", "--suite", "bogus"], "--suite"),
        (&["table", "--n", "9"], "--n"),
        (&["table", "--n", "1"], "--n"),
    ];
    for (args, needle) in cases {
        let o = gchar(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
    let o = gchar(&["gamma", "--lam", "3,2,1", "--mu", "3,2", "--class", "3*,2*,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--class"), "{}", stderr(&o));
}

#[test]
fn larger_tables_render() {
    let o = gchar(&["table", "--n", "8", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("Degree 8\n"));
    // Title, class and order lines, then one row per pair; pairs and classes are equinumerous.
    let classes = stdout(&gchar(&["classes", "--n", "8"])).lines().count();
    assert_eq!(classes, 45);
    assert_eq!(text.lines().count(), 3 + classes);
}
