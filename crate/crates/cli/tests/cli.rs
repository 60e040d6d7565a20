use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-rank")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn counts() {
    for (file, count) in [
        ("triangle.json", "2"),
        ("k4.json", "8"),
        ("triangle_pendant.json", "4"),
        ("two_triangles.json", "12"),
        ("bowtie.json", "12"),
    ] {
        assert_eq!(stdout(&["count", "-g", &path(file)]), format!("{count}\n"), "{file}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "-g", &path("k5.json")]).status.code(), Some(2));
    assert_eq!(run(&["count", "-g", &path("reversed_edge.json")]).status.code(), Some(1));
    assert_eq!(run(&["count", "-g", &path("missing.json")]).status.code(), Some(1));
    assert_eq!(run(&["unrank", "-g", &path("k4.json"), "-r", "8"]).status.code(), Some(3));
    assert_eq!(run(&["unrank", "-g", &path("k4.json"), "-r", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["count"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let err = run(&["unrank", "-g", &path("k4.json"), "-r", "99"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("out of range"));
}

#[test]
fn unrank_then_rank() {
    let dir = tempfile::tempdir().unwrap();
    for (file, count) in [("bowtie.json", 12), ("two_triangles.json", 12), ("mixed.json", 20)] {
        for r in 0..count {
            let e = dir.path().join(format!("{file}.{r}"));
            let e = e.to_str().unwrap();
            stdout(&["unrank", "-g", &path(file), "-r", &r.to_string(), "-o", e]);
            assert_eq!(stdout(&["rank", "-g", &path(file), "-e", e]), format!("{r}\n"));
        }
    }
}

#[test]
fn rank_with_tuple() {
    let dir = tempfile::tempdir().unwrap();
    let e = dir.path().join("e.json");
    let e = e.to_str().unwrap();
    stdout(&["unrank", "-g", &path("k4.json"), "-r", "5", "-o", e]);
    let out = stdout(&["rank", "-g", &path("k4.json"), "-e", e, "--tuple"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("5"));
    let t: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(t["rank"], "5");
    assert_eq!(t["bounds"].as_array().unwrap().len(), t["values"].as_array().unwrap().len());
}

#[test]
fn enumerate_lists_every_rank_once() {
    let out = stdout(&["enumerate", "-g", &path("two_triangles.json"), "--from", "0", "--limit", "100"]);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 12);
    for (i, l) in lines.iter().enumerate() {
        assert_eq!(l["rank"], i.to_string());
    }
    let tail = stdout(&["enumerate", "-g", &path("two_triangles.json"), "--from", "10", "--limit", "5"]);
    assert_eq!(tail.lines().count(), 2);
    assert_eq!(tail.lines().next().unwrap(), out.lines().nth(10).unwrap());
}

#[test]
fn output_is_reproducible() {
    let g = path("mixed.json");
    let a = stdout(&["sample", "-g", &g, "--seed", "42", "-k", "50"]);
    assert_eq!(a, stdout(&["sample", "-g", &g, "--seed", "42", "-k", "50"]));
    assert_ne!(a, stdout(&["sample", "-g", &g, "--seed", "43", "-k", "50"]));
    assert_eq!(a.lines().count(), 50);
    for args in [&["enumerate", "-g", &g][..], &["decompose", "-g", &g], &["verify", "-g", &g]] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn verify_small_graphs() {
    for file in ["triangle.json", "k4.json", "bowtie.json", "two_triangles.json", "mixed.json"] {
        let out = stdout(&["verify", "-g", &path(file), "--max-n", "7"]);
        assert!(out.contains("oracle ok"), "{file}: {out}");
    }
    let out = stdout(&["verify", "-g", &path("mixed.json"), "--max-n", "3"]);
    assert!(out.contains("oracle skipped"));
}

#[test]
fn decompose_names_cut_vertices() {
    let out = stdout(&["decompose", "-g", &path("bowtie.json")]);
    assert!(out.contains("cut-vertex 3"));
    assert!(out.ends_with("count 12\n"));
}
