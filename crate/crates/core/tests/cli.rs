//! End-to-end runs of the binary, including golden-file replays.

mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use whiskerkit::io::{parse_complex_with_coloring, write_coloring, write_complex};

use common::{random_complex, random_coloring};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run_in(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_whiskerkit"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn run(args: &[&str]) -> Run {
    run_in(&golden_dir(), args)
}

/// Result lines, without the `#` header and diagnostics.
fn results(stdout: &str) -> Vec<&str> {
    stdout.lines().filter(|l| !l.starts_with('#')).collect()
}

fn replay(args: &[&str], golden: &str) {
    let r = run(args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let expected = std::fs::read_to_string(golden_dir().join(golden)).unwrap();
    assert_eq!(r.stdout, expected, "{golden} drifted");
}

#[test]
fn golden_whisker_running_example() {
    replay(&["whisker", "running.complex", "running.coloring"], "whisker_running.out");
}

#[test]
fn golden_betti_running_example() {
    replay(&["betti", "running.complex", "running.coloring", "--oracle"], "betti_running.out");
    let r = run(&["betti", "running.complex", "running.coloring"]);
    assert_eq!(results(&r.stdout), vec!["i\tj\tbeta", "0\t4\t11", "1\t5\t17", "2\t6\t8", "3\t7\t1"]);
}

#[test]
fn golden_facet_restrictions() {
    replay(&["facet-restriction", "strip.complex"], "facet_restriction_strip.out");
    replay(&["facet-restriction", "restrictable.complex"], "facet_restriction_restrictable.out");
    replay(&["reverse", "restrictable.complex"], "reverse_restrictable.out");
}

#[test]
fn reverse_without_facet_restriction_fails() {
    let r = run(&["reverse", "strip.complex"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert_eq!(r.stderr, "error: no facet restriction\n");
}

#[test]
fn reverse_unbalanced_fails() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("k4.complex"),
        "vertices: a b c d\nfacet: a b\nfacet: a c\nfacet: a d\nfacet: b c\nfacet: b d\nfacet: c d\n",
    )
    .unwrap();
    let r = run_in(dir.path(), &["reverse", "k4.complex"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error: not balanced\n");
}

#[test]
fn vectors() {
    assert_eq!(results(&run(&["fvec", "running.complex"]).stdout), vec!["(1, 4, 5, 1)"]);
    assert_eq!(results(&run(&["hvec", "restrictable.complex"]).stdout), vec!["(1, 3, 0, 0)"]);
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("irr.complex"), "vertices: a\nfacet:\n").unwrap();
    assert_eq!(results(&run_in(dir.path(), &["fvec", "irr.complex"]).stdout), vec!["(1)"]);
}

#[test]
fn whisker_of_irrelevant_complex_and_its_betti_row() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("irr.complex"), "vertices: a\nfacet:\n").unwrap();
    std::fs::write(dir.path().join("one.coloring"), "class: a\n").unwrap();
    let r = run_in(dir.path(), &["whisker", "irr.complex", "one.coloring"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(results(&r.stdout), vec!["vertices: a y1", "facet: y1", "class: a y1"]);
    let r = run_in(dir.path(), &["betti", "irr.complex", "one.coloring"]);
    assert_eq!(results(&r.stdout), vec!["i\tj\tbeta", "0\t1\t1"]);
}

#[test]
fn invalid_coloring_names_facet_and_class() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(golden_dir().join("running.complex"), dir.path().join("running.complex")).unwrap();
    std::fs::write(dir.path().join("bad.coloring"), "class: x1 x2\nclass: x3 x4\n").unwrap();
    let r = run_in(dir.path(), &["whisker", "running.complex", "bad.coloring"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error: invalid colouring: facet x3 x4 meets class 2 in more than one vertex\n");
}

#[test]
fn parse_errors_report_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("broken.complex"), "vertices: a b\n# fine\nfacet: a z\n").unwrap();
    let r = run_in(dir.path(), &["fvec", "broken.complex"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error: broken.complex: line 3: unknown vertex label `z`\n");
    let r = run_in(dir.path(), &["fvec", "missing.complex"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: cannot read missing.complex"));
}

#[test]
fn header_echoes_command_and_digests() {
    let r = run(&["fvec", "running.complex"]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "# whiskerkit fvec running.complex");
    assert!(lines[1].starts_with("# sha256 ") && lines[1].ends_with(" running.complex"));
    assert_eq!(lines[1].split(' ').nth(2).unwrap().len(), 64);
    assert!(r.stderr.contains("wall time"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("w.complex");
    let r = run(&["whisker", "running.complex", "running.coloring", "--out", target.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let (c, chi) = parse_complex_with_coloring(&written).unwrap();
    assert_eq!(c.facets().len(), 11);
    assert_eq!(chi.unwrap().class_count(), 3);
}

#[test]
fn whisker_then_reverse_recovers_the_source() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.complex");
    run(&["whisker", "running.complex", "running.coloring", "--out", w.to_str().unwrap()]);
    // the embedded colouring is used
    let r = run_in(dir.path(), &["reverse", "w.complex", "--facet", "y1 y2 y3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (back, chi) = parse_complex_with_coloring(&r.stdout).unwrap();
    let source = std::fs::read_to_string(golden_dir().join("running.complex")).unwrap();
    let (orig, _) = parse_complex_with_coloring(&source).unwrap();
    assert_eq!(back, orig);
    assert_eq!(
        write_coloring(&chi.unwrap(), back.universe()),
        "class: x1 x4\nclass: x2\nclass: x3\n"
    );
    assert!(r.stdout.contains("# facet restriction: y1 y2 y3\n"));
    // the first facet restriction in canonical order gives another complex
    // with the same f-vector
    let r = run_in(dir.path(), &["reverse", "w.complex"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("# facet restriction: x1 y2 y3\n"));
    assert!(r.stdout.contains("# f(restriction) = (1, 4, 5, 1)\n"));
}

#[test]
fn random_instances_are_stable_and_match_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut matched = 0;
    while matched < 20 {
        let n = rand::Rng::random_range(&mut rng, 1..=5);
        let c = random_complex(&mut rng, n);
        let chi = random_coloring(&mut rng, &c);
        if n + chi.class_count() > 10 {
            continue;
        }
        std::fs::write(dir.path().join("c.complex"), write_complex(&c)).unwrap();
        std::fs::write(dir.path().join("c.coloring"), write_coloring(&chi, c.universe())).unwrap();
        let r = run_in(dir.path(), &["betti", "c.complex", "c.coloring", "--oracle"]);
        assert_eq!(r.code, 0, "{}\n{}", r.stdout, r.stderr);
        assert_eq!(results(&r.stdout).last(), Some(&"MATCH"));
        let a = run_in(dir.path(), &["whisker", "c.complex", "c.coloring"]);
        let b = run_in(dir.path(), &["whisker", "c.complex", "c.coloring"]);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
        matched += 1;
    }
}

#[test]
fn oracle_scale_limit_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("big.complex"), "vertices: a b c d e f g h i j k\nfacet: a b\n").unwrap();
    std::fs::write(dir.path().join("big.coloring"), "class: a c d e f g h i j k\nclass: b\n").unwrap();
    let r = run_in(dir.path(), &["betti", "big.complex", "big.coloring", "--oracle"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("oracle scale limit is 12"), "{}", r.stderr);
}

#[test]
fn checks() {
    assert_eq!(results(&run(&["check", "pure", "running.complex"]).stdout), vec!["pure: no"]);
    let balanced = run(&["check", "balanced", "restrictable.complex"]);
    assert_eq!(
        results(&balanced.stdout),
        vec!["balanced: yes", "class: 1 5", "class: 2 6", "class: 3 4"]
    );
    assert_eq!(
        results(&run(&["check", "vd", "restrictable.complex"]).stdout),
        vec!["vertex decomposable: yes"]
    );
    assert_eq!(
        results(&run(&["check", "vd", "running.complex"]).stdout),
        vec!["vertex decomposable: no (not pure)"]
    );
    assert_eq!(results(&run(&["check", "shellable", "strip.complex"]).stdout), vec!["shellable: yes"]);
}

#[test]
fn ideals_and_duals() {
    let r = run(&["sr-ideal", "running.complex"]);
    assert_eq!(results(&r.stdout), vec!["x1 x4", "x2 x3 x4"]);
    let r = run(&["dual", "running.complex"]);
    assert_eq!(results(&r.stdout), vec!["vertices: x1 x2 x3 x4", "facet: x1", "facet: x2 x3"]);
}

#[test]
fn graph_commands() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("path.graph"), "vertex: a\nvertex: b\nvertex: c\nedge: a b\nedge: b c\n").unwrap();
    std::fs::write(
        dir.path().join("c4.graph"),
        "vertex: a\nvertex: b\nvertex: c\nvertex: d\nedge: a b\nedge: b c\nedge: c d\nedge: a d\n",
    )
    .unwrap();
    std::fs::write(dir.path().join("pi.coloring"), "class: a b\nclass: c\n").unwrap();
    let at = |args: &[&str]| run_in(dir.path(), args);
    assert_eq!(
        results(&at(&["ind", "path.graph"]).stdout),
        vec!["vertices: a b c", "facet: b", "facet: a c"]
    );
    assert_eq!(
        results(&at(&["cliquecomplex", "path.graph"]).stdout),
        vec!["vertices: a b c", "facet: a b", "facet: b c"]
    );
    let r = at(&["clique-whisker", "path.graph", "pi.coloring"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(
        results(&r.stdout),
        vec![
            "vertex: a", "vertex: b", "vertex: c", "vertex: y1", "vertex: y2", "edge: a b", "edge: a y1",
            "edge: b c", "edge: b y1", "edge: c y2",
        ]
    );
    assert_eq!(results(&at(&["chordal", "path.graph"]).stdout), vec!["chordal: yes"]);
    let r = at(&["chordal", "c4.graph"]);
    assert_eq!(results(&r.stdout), vec!["chordal: no"]);
    assert!(r.stdout.contains("# induced cycle: "));
    assert_eq!(
        results(&at(&["hhz", "path.graph"]).stdout),
        vec!["unmixed: no", "free-vertex partition: no"]
    );
    let r = at(&["hhz", "c4.graph"]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error: graph is not chordal\n"));
}

#[test]
fn explore_runs() {
    let r = run(&["explore", "--max-n", "4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("violations: 0\n"));
    assert!(r.stdout.contains("4\t11\t10\t6\t6\n"));
    let r = run(&["explore", "--max-n", "10"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--seed is required"));
    let a = run(&["explore", "--max-n", "10", "--seed", "5", "--samples", "20"]);
    let b = run(&["explore", "--max-n", "10", "--seed", "5", "--samples", "20"]);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
}
