use std::path::{Path, PathBuf};
use std::process::Command;

use gradual_cli::document::Document;
use tempfile::TempDir;

const S3_A3_GRADED: &str = r#"{"kind":"fuzzy-subgroup","elements":["()","(2 3)","(1 2)","(1 2 3)","(1 3 2)","(1 3)"],
  "grades":["1","1/4","1/4","1/2","1/2","1/4"]}"#;
const S3_TRANSPOSITION: &str = r#"{"kind":"fuzzy-subgroup","elements":["()","(2 3)","(1 2)","(1 2 3)","(1 3 2)","(1 3)"],
  "grades":["1","0","2/3","0","0","0"]}"#;
const S3_NOT_SUBGROUP: &str = r#"{"kind":"fuzzy-subgroup","elements":["()","(2 3)","(1 2)","(1 2 3)","(1 3 2)","(1 3)"],
  "grades":["1","0","1","1/4","0","1/2"]}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gradual(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gradual")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn s3_file(dir: &TempDir) -> PathBuf {
    let r = gradual(&["emit-group", "symmetric", "3"]);
    assert_eq!(r.code, 0);
    write(dir, "s3.json", &r.stdout)
}

fn no_floats(text: &str) -> bool {
    let b = text.as_bytes();
    !(1..b.len().saturating_sub(1)).any(|i| b[i] == b'.' && b[i - 1].is_ascii_digit() && b[i + 1].is_ascii_digit())
}

#[test]
fn empty_invocation_is_a_usage_error() {
    let r = gradual(&[]);
    assert_eq!(r.code, 64);
    assert!(r.stderr.contains("Usage"));
    assert_eq!(gradual(&["convert", "--to", "sideways", "-i", "x"]).code, 64);
    assert_eq!(gradual(&["--help"]).code, 0);
}

#[test]
fn fuzzy_to_gradual_has_breakpoint_one_half() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "mu.json", r#"{"kind":"fuzzy-subset","elements":["a","b"],"grades":["1","1/2"]}"#);
    let r = gradual(&["convert", "--to", "gradual", "-i", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = Document::parse(&r.stdout).unwrap().into_gradual().unwrap();
    let table: Vec<(String, String, Vec<String>)> = doc.pieces.iter().map(|p| (p.lo.clone(), p.hi.clone(), p.value.clone())).collect();
    assert_eq!(
        table,
        vec![
            ("0".into(), "1/2".into(), vec!["a".to_string(), "b".to_string()]),
            ("1/2".into(), "1".into(), vec!["a".to_string()]),
        ]
    );
    assert!(doc.pieces[0].hi_closed && !doc.pieces[1].lo_closed);
    assert!(no_floats(&r.stdout));
}

#[test]
fn strict_round_trip_reproduces_the_file() {
    let dir = TempDir::new().unwrap();
    let text = r#"{"kind":"fuzzy-subset","elements":["a","b","c"],"grades":["1","1/3","0"]}"#;
    let f = write(&dir, "mu.json", text);
    let g = dir.path().join("sigma.json");
    let back = dir.path().join("back.json");
    assert_eq!(gradual(&["convert", "--to", "gradual-strict", "-i", s(&f), "-o", s(&g)]).code, 0);
    assert_eq!(gradual(&["convert", "--to", "fuzzy-strict", "-i", s(&g), "-o", s(&back)]).code, 0);
    let original = Document::parse(text).unwrap();
    assert_eq!(Document::read(&back).unwrap(), original);
    // and the gradual side
    let again = dir.path().join("again.json");
    assert_eq!(gradual(&["convert", "--to", "gradual-strict", "-i", s(&back), "-o", s(&again)]).code, 0);
    assert_eq!(std::fs::read_to_string(&again).unwrap(), std::fs::read_to_string(&g).unwrap());
}

#[test]
fn property_f_violation_names_the_element() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "sigma.json",
        r#"{"kind":"gradual-subset","elements":["a","b"],"pieces":[
            {"lo":"0","hi":"1/2","lo_closed":false,"hi_closed":false,"value":["a","b"]},
            {"lo":"1/2","hi":"1","lo_closed":true,"hi_closed":true,"value":["a"]}]}"#,
    );
    let r = gradual(&["convert", "--to", "fuzzy", "-i", s(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("property (F)") && r.stderr.contains("element b"), "{}", r.stderr);
    // the same file is the strong level map of a = 1, b = 1/2
    let r = gradual(&["convert", "--to", "fuzzy-strict", "-i", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(Document::parse(&r.stdout).unwrap().into_fuzzy().unwrap().grades, vec!["1", "1/2"]);
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", r#"{"kind":"fuzzy-subset","elements":["a"],"grades":["0.5"]}"#);
    assert_eq!(gradual(&["convert", "--to", "gradual", "-i", s(&f)]).code, 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(gradual(&["convert", "--to", "gradual", "-i", s(&missing)]).code, 2);
}

const TWO_PIECES: &str = r#"{"kind":"gradual-subset","elements":["a","b","c"],"pieces":[
    {"lo":"0","hi":"1/2","lo_closed":false,"hi_closed":true,"value":["a"]},
    {"lo":"1/2","hi":"1","lo_closed":false,"hi_closed":true,"value":["b"]}]}"#;

#[test]
fn closure_merges_into_a_decreasing_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sigma.json", TWO_PIECES);
    let r = gradual(&["operator", "closure", "-i", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc = Document::parse(&r.stdout).unwrap().into_gradual().unwrap();
    let values: Vec<Vec<String>> = doc.pieces.iter().map(|p| p.value.clone()).collect();
    assert_eq!(values, vec![vec!["a".to_string(), "b".to_string()], vec!["b".to_string()]]);
}

#[test]
fn interior_of_closure_is_interior() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sigma.json", TWO_PIECES);
    let c = dir.path().join("c.json");
    assert_eq!(gradual(&["operator", "closure", "-i", s(&f), "-o", s(&c)]).code, 0);
    let cd = gradual(&["operator", "interior", "-i", s(&c)]);
    let d = gradual(&["operator", "interior", "-i", s(&f)]);
    assert_eq!(cd.code, 0);
    assert_eq!(cd.stdout, d.stdout);
}

#[test]
fn modified_intersection_of_strict_files_is_strict() {
    let dir = TempDir::new().unwrap();
    let mut files = Vec::new();
    for (i, grades) in [r#"["1","1/2","1/4"]"#, r#"["3/4","1/2","1/3"]"#].iter().enumerate() {
        let mu = write(&dir, &format!("mu{i}.json"), &format!(r#"{{"kind":"fuzzy-subset","elements":["a","b","c"],"grades":{grades}}}"#));
        let sigma = dir.path().join(format!("sigma{i}.json"));
        assert_eq!(gradual(&["convert", "--to", "gradual-strict", "-i", s(&mu), "-o", s(&sigma)]).code, 0);
        files.push(sigma);
    }
    let out = dir.path().join("meet.json");
    let r = gradual(&["operator", "modified-intersection", "-i", s(&files[0]), "-i", s(&files[1]), "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = gradual(&["convert", "--to", "fuzzy-strict", "-i", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let mu = Document::parse(&r.stdout).unwrap().into_fuzzy().unwrap();
    assert_eq!(mu.grades, vec!["3/4", "1/2", "1/4"]);
}

#[test]
fn ground_mismatch_exits_two() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", TWO_PIECES);
    let b = write(
        &dir,
        "b.json",
        r#"{"kind":"gradual-subset","elements":["x"],"pieces":[{"lo":"0","hi":"1","lo_closed":false,"hi_closed":true,"value":["x"]}]}"#,
    );
    let r = gradual(&["operator", "union", "-i", s(&a), "-i", s(&b)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("ground sets differ"));
}

#[test]
fn s3_fuzzy_subgroup_has_three_strong_pieces() {
    let dir = TempDir::new().unwrap();
    let g = s3_file(&dir);
    let mu = write(&dir, "mu.json", S3_A3_GRADED);
    let r = gradual(&["group", "check-fuzzy-subgroup", "-i", s(&g), "-i", s(&mu)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("valid fuzzy subgroup; normal: true"));
    let r = gradual(&["group", "to-gradual", "--strict", "-i", s(&g), "-i", s(&mu)]);
    assert_eq!(r.code, 0);
    let doc = Document::parse(&r.stdout).unwrap().into_gradual().unwrap();
    let orders: Vec<usize> = doc.pieces.iter().map(|p| p.value.len()).collect();
    assert_eq!(orders, vec![6, 3, 1]);
}

#[test]
fn non_subgroup_names_the_pair() {
    let dir = TempDir::new().unwrap();
    let g = s3_file(&dir);
    let mu = write(&dir, "mu.json", S3_NOT_SUBGROUP);
    let r = gradual(&["group", "check-fuzzy-subgroup", "-i", s(&g), "-i", s(&mu)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("x = ") && r.stderr.contains("y = "), "{}", r.stderr);
}

#[test]
fn product_report_is_equal() {
    let dir = TempDir::new().unwrap();
    let g = s3_file(&dir);
    let m1 = write(&dir, "m1.json", S3_A3_GRADED);
    let m2 = write(&dir, "m2.json", S3_TRANSPOSITION);
    let r = gradual(&["group", "product", "-i", s(&g), "-i", s(&m1), "-i", s(&m2)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.trim_end().ends_with("equal"));
    assert!(r.stdout.contains("strong levels of [mu1][mu2]"));
}

#[test]
fn normality_and_quotient_reports() {
    let dir = TempDir::new().unwrap();
    let g = s3_file(&dir);
    let m2 = write(&dir, "m2.json", S3_TRANSPOSITION);
    let r = gradual(&["group", "normality", "-i", s(&g), "-i", s(&m2)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("fuzzy subgroup normal: false") && r.stdout.contains("every strong level normal: false"));

    let m1 = write(&dir, "m1.json", S3_A3_GRADED);
    let sigma = dir.path().join("sigma.json");
    assert_eq!(gradual(&["group", "to-gradual", "-i", s(&g), "-i", s(&m1), "-o", s(&sigma)]).code, 0);
    let r = gradual(&["group", "quotient", "-i", s(&g), "-i", s(&sigma)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("order 6") && r.stdout.contains("order 2") && r.stdout.contains("order 1"));

    let t = dir.path().join("t.json");
    assert_eq!(gradual(&["group", "to-gradual", "-i", s(&g), "-i", s(&m2), "-o", s(&t)]).code, 0);
    assert_eq!(gradual(&["group", "quotient", "-i", s(&g), "-i", s(&t)]).code, 2);
}

const SYSTEM: &str = r#"{"kind":"system","elements":["a","b","c"],"levels":["1/2","1"],
  "objects":[["a","b","c"],["a","b"],["a","b"],["a"]],
  "transitions":[[0,1],[0,1],[0]]}"#;

#[test]
fn system_commands() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sys.json", SYSTEM);
    let r = gradual(&["system", "colimit", "-i", s(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("direct limit has 3 elements"));
    // c only occurs below 1/2, so its levels do not attain their supremum
    let r = gradual(&["system", "property-f", "-i", s(&f)]);
    assert_eq!(r.stdout.trim(), "property (F): fails");
    let attained = write(
        &dir,
        "attained.json",
        r#"{"kind":"system","elements":["a","b"],"levels":["1/2","1"],
            "objects":[["a","b"],["a","b"],["a"],["a"]],"transitions":[[0,1],[0],[0]]}"#,
    );
    let r = gradual(&["system", "property-f", "-i", s(&attained)]);
    assert_eq!(r.stdout.trim(), "property (F): holds", "{}", r.stderr);
    let r = gradual(&["system", "interior", "-i", s(&attained)]);
    assert_eq!(r.code, 0);
    let d = Document::parse(&r.stdout).unwrap().into_system().unwrap();
    assert_eq!(d.objects, vec![vec!["a", "b"], vec!["a"], vec!["a"], vec!["a"]]);
}

#[test]
fn eval_prints_exact_sets() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sigma.json", TWO_PIECES);
    assert_eq!(gradual(&["eval", "--alpha", "1/2", "-i", s(&f)]).stdout, "{a}\n");
    assert_eq!(gradual(&["eval", "--alpha", "2/3", "-i", s(&f)]).stdout, "{b}\n");
    assert_eq!(gradual(&["eval", "--alpha", "0", "-i", s(&f)]).code, 2);
    let mu = write(&dir, "mu.json", r#"{"kind":"fuzzy-subset","elements":["a","b"],"grades":["1","1/2"]}"#);
    assert_eq!(gradual(&["eval", "--alpha", "1/2", "-i", s(&mu)]).stdout, "level: {a, b}\nstrong level: {a}\n");
}

#[test]
fn emitted_documents_reparse() {
    for (family, n) in [("symmetric", "4"), ("cyclic", "12"), ("dihedral", "4")] {
        let r = gradual(&["emit-group", family, n]);
        assert_eq!(r.code, 0);
        let doc = Document::parse(&r.stdout).unwrap();
        assert_eq!(Document::parse(&doc.to_json()).unwrap(), doc);
        assert!(doc.into_group().unwrap().to_core().is_ok());
    }
}

#[test]
fn worked_examples_and_demo_run() {
    let r = gradual(&["worked-examples"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("4 of 4 blocks match"));
    assert!(no_floats(&r.stdout));
    let r = gradual(&["demo-zint", "--x", "2", "--window", "20", "--t-max", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("y = 20: value 7/18"));
    assert!(r.stdout.contains("contains 2: false"));
    assert_eq!(gradual(&["demo-zint", "--window", "0"]).code, 64);
}
