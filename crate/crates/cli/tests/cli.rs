use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ordhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordhom"))
        .args(args)
        .env_remove("ORDHOM_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K2: &str = "og 2 1\ne 1 2\n";
const ONE: &str = "og 1 0\n";

#[test]
fn solve_k2_into_k2() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let o = ordhom(&["solve", s(&k2), s(&k2)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "YES\nmap 2\nf 1 1\nf 2 2\n");
}

#[test]
fn solve_k2_into_single_vertex() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let one = file(&dir, "one", ONE);
    let o = ordhom(&["solve", s(&k2), s(&one)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn shifted_with_bad_segments_names_condition() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let h = file(&dir, "h", "og 3 1\ne 1 3\n");
    let o = ordhom(&[
        "solve",
        s(&k2),
        s(&h),
        "--algo",
        "shifted",
        "--segments",
        "2,1",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("not a clique"), "{}", stderr(&o));

    // Nesting: vertex 1 sees 3 but not 2 inside segment {2, 3}.
    let h = file(&dir, "h2", "og 3 2\ne 1 3\ne 2 3\n");
    let o = ordhom(&[
        "solve",
        s(&k2),
        s(&h),
        "--algo",
        "shifted",
        "--segments",
        "1,2",
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("nesting"), "{}", stderr(&o));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let bad = file(&dir, "bad", "og 2 1\ne 2 1\n");
    let missing = dir.path().join("missing");
    let lists = file(&dir, "lists", "l 1 1\nl 2 5\n");
    for args in [
        vec!["solve", s(&k2)],
        vec!["solve", s(&k2), s(&bad)],
        vec!["solve", s(&k2), s(&missing)],
        vec!["solve", s(&k2), s(&k2), "--algo", "magic"],
        vec!["solve", s(&k2), s(&k2), "--segments", "2"],
        vec!["solve", s(&k2), s(&k2), "--lists", s(&lists)],
        vec!["chi", s(&bad)],
        vec!["gen", "random", "--n", "3", "--p", "1.5", "--seed", "1"],
        vec!["gen", "random", "--n", "3", "--p", "0.5"],
        vec!["gen", "shifted", "--segments", "1,0", "--seed", "1"],
    ] {
        let o = ordhom(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn bounds_and_lists_are_applied() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let k3 = file(&dir, "k3", "og 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    let bounds = file(&dir, "bounds", "b 1 2 2\nb 2 2 3\n");
    let o = ordhom(&["solve", s(&k2), s(&k3), "--bounds", s(&bounds)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "YES\nmap 2\nf 1 2\nf 2 3\n");
    let lists = file(&dir, "lists", "l 1 3\nl 2 1 2\n");
    let o = ordhom(&["solve", s(&k2), s(&k3), "--lists", s(&lists)]);
    assert_eq!(code(&o), 1);
}

#[test]
fn json_output() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let one = file(&dir, "one", ONE);
    let o = ordhom(&["solve", s(&k2), s(&k2), "--json", "--algo", "brute"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], true);
    assert_eq!(v["witness"], serde_json::json!([1, 2]));
    assert_eq!(v["algorithm"], "brute");
    assert!(v["stats"]["candidates"].as_u64().unwrap() > 0);

    let o = ordhom(&["solve", s(&k2), s(&one), "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], false);
    assert!(v["witness"].is_null());
}

#[test]
fn stats_are_comments() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let o = ordhom(&["solve", s(&k2), s(&k2), "--stats", "--algo", "dp"]);
    let text = stdout(&o);
    assert!(text.contains("# algorithm dp"), "{text}");
    assert!(text.contains("dp_entries="), "{text}");
}

#[test]
fn chi_and_recognize() {
    let dir = TempDir::new().unwrap();
    let edgeless = file(&dir, "e5", "og 5 0\n");
    assert_eq!(stdout(&ordhom(&["chi", s(&edgeless)])), "1\n");
    let path = file(&dir, "p3", "og 3 2\ne 1 2\ne 2 3\n");
    assert_eq!(stdout(&ordhom(&["chi", s(&path)])), "3\n");

    let k4 = file(
        &dir,
        "k4",
        "og 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    );
    let o = ordhom(&["recognize", s(&k4)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("shifted k=1\n"), "{out}");
    assert!(out.ends_with("c=0\n"), "{out}");

    let long = file(&dir, "e13", "og 3 1\ne 1 3\n");
    let out = stdout(&ordhom(&["recognize", s(&long)]));
    assert!(out.starts_with("shifted k=3\n"), "{out}");
    assert!(out.ends_with("c=1\n"), "{out}");

    let empty = file(&dir, "empty", "og 0 0\n");
    assert_eq!(
        stdout(&ordhom(&["recognize", s(&empty)])),
        "shifted none\nc=0\n"
    );
}

#[test]
fn reduce_mis_summary_and_files() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "f", "og 4 1\ne 2 3\n");
    let prefix = dir.path().join("m");
    let o = ordhom(&["reduce", "mis", s(&f), "--parts", "2", "--out", s(&prefix)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(
        stdout(&o).contains("|V(H')|=16 |V(G')|=20"),
        "{}",
        stdout(&o)
    );
    let g = std::fs::read_to_string(dir.path().join("m.g")).unwrap();
    let expected = include_str!("../../core/tests/golden/mis_nolist_k2_l2.txt");
    assert!(expected.starts_with(&g));
    assert!(dir.path().join("m.h.prov").exists());
    assert!(!dir.path().join("m.lists").exists());

    let o = ordhom(&[
        "reduce",
        "mis",
        s(&f),
        "--parts",
        "2",
        "--lists",
        "--out",
        s(&prefix),
    ]);
    assert!(stdout(&o).contains("|V(H)|=10 |V(G)|=14"), "{}", stdout(&o));
    let g = dir.path().join("m.g");
    let h = dir.path().join("m.h");
    let lists = dir.path().join("m.lists");
    let o = ordhom(&["solve", s(&g), s(&h), "--lists", s(&lists)]);
    assert_eq!(code(&o), 0);

    let o = ordhom(&["reduce", "mis", s(&f), "--parts", "3", "--out", s(&prefix)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("partition"), "{}", stderr(&o));
}

#[test]
fn reduce_struct_summary() {
    let dir = TempDir::new().unwrap();
    let edge = file(&dir, "edge", "struct 2 1\nrel E 2 1\nt 1 2\n");
    let three = file(
        &dir,
        "three",
        "struct 3 1\nrel E 2 6\nt 1 2\nt 1 3\nt 2 1\nt 2 3\nt 3 1\nt 3 2\n",
    );
    let prefix = dir.path().join("s");
    let o = ordhom(&[
        "reduce",
        "struct",
        s(&edge),
        s(&three),
        "--lists",
        "--out",
        s(&prefix),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("|V(G)|=3 |V(H)|=12"), "{}", stdout(&o));

    let o = ordhom(&["reduce", "struct", s(&edge), s(&three), "--out", s(&prefix)]);
    assert_eq!(code(&o), 0);
    let g = std::fs::read_to_string(dir.path().join("s.g")).unwrap();
    let h = std::fs::read_to_string(dir.path().join("s.h")).unwrap();
    let gp = std::fs::read_to_string(dir.path().join("s.g.prov")).unwrap();
    let hp = std::fs::read_to_string(dir.path().join("s.h.prov")).unwrap();
    assert_eq!(
        g + &gp + &h + &hp,
        include_str!("../../core/tests/golden/struct_nolist_edge_3col.txt")
    );

    let unary = file(&dir, "unary", "struct 2 1\nrel E 1 1\nt 1\n");
    let o = ordhom(&["reduce", "struct", s(&edge), s(&unary), "--out", s(&prefix)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("arity"), "{}", stderr(&o));
}

#[test]
fn reduce_coloring_then_solve() {
    let dir = TempDir::new().unwrap();
    let k3 = file(&dir, "k3", "og 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    let prefix = dir.path().join("c");
    let g = dir.path().join("c.g");
    let h = dir.path().join("c.h");
    for (colors, expected) in [("3", 0), ("2", 1)] {
        let o = ordhom(&[
            "reduce",
            "coloring",
            s(&k3),
            "--colors",
            colors,
            "--out",
            s(&prefix),
        ]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let o = ordhom(&["solve", s(&g), s(&h)]);
        assert_eq!(code(&o), expected, "colors {colors}");
        let o = ordhom(&["solve", s(&g), s(&h), "--algo", "brute"]);
        assert_eq!(code(&o), expected, "colors {colors}");
    }
}

#[test]
fn gen_is_deterministic() {
    let run = |args: &[&str]| {
        let o = ordhom(args);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        stdout(&o)
    };
    for args in [
        &["gen", "random", "--n", "8", "--p", "0.4", "--seed", "11"][..],
        &["gen", "shifted", "--segments", "2,3,1", "--seed", "5"][..],
        &[
            "gen",
            "partitioned",
            "--k",
            "3",
            "--l",
            "2",
            "--p",
            "0.5",
            "--seed",
            "9",
        ][..],
    ] {
        assert_eq!(run(args), run(args));
    }
    let a = run(&["gen", "random", "--n", "8", "--p", "0.5", "--seed", "1"]);
    let b = run(&["gen", "random", "--n", "8", "--p", "0.5", "--seed", "2"]);
    assert_ne!(a, b);
}

#[test]
fn gen_outputs() {
    let edgeless = stdout(&ordhom(&[
        "gen", "random", "--n", "6", "--p", "0", "--seed", "7",
    ]));
    assert!(edgeless.ends_with("og 6 0\n"), "{edgeless}");
    let k4 = stdout(&ordhom(&["gen", "clique", "--n", "4"]));
    assert!(k4.contains("og 4 6\n"), "{k4}");
    let parts = stdout(&ordhom(&[
        "gen",
        "partitioned",
        "--k",
        "2",
        "--l",
        "3",
        "--p",
        "1",
        "--seed",
        "1",
    ]));
    assert!(parts.contains("parts=2 size=3"), "{parts}");
    assert!(parts.contains("og 6 9\n"), "{parts}");

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("h");
    let o = ordhom(&[
        "gen",
        "shifted",
        "--segments",
        "1,2,2",
        "--seed",
        "3",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let o = ordhom(&["recognize", s(&out)]);
    let k: usize = stdout(&o).lines().next().unwrap()["shifted k=".len()..]
        .parse()
        .unwrap();
    assert!(k <= 3);
    let k2 = file(&dir, "k2", K2);
    let o = ordhom(&[
        "solve",
        s(&k2),
        s(&out),
        "--algo",
        "shifted",
        "--segments",
        "1,2,2",
    ]);
    assert_ne!(code(&o), 2, "{}", stderr(&o));
}

#[test]
fn every_algorithm_agrees_with_brute_in_exit_code() {
    let dir = TempDir::new().unwrap();
    for seed in 0..12u64 {
        let p = if seed % 2 == 0 { "0.3" } else { "0.6" };
        let seed = seed.to_string();
        let g = dir.path().join("g");
        let h = dir.path().join("h");
        ordhom(&[
            "gen",
            "random",
            "--n",
            "6",
            "--p",
            p,
            "--seed",
            &seed,
            "--out",
            s(&g),
        ]);
        ordhom(&[
            "gen",
            "random",
            "--n",
            "4",
            "--p",
            "0.6",
            "--seed",
            &seed,
            "--out",
            s(&h),
        ]);
        let brute = code(&ordhom(&["solve", s(&g), s(&h), "--algo", "brute"]));
        assert!(brute == 0 || brute == 1);
        for algo in ["auto", "shifted", "dp"] {
            let o = ordhom(&["solve", s(&g), s(&h), "--algo", algo]);
            assert_eq!(code(&o), brute, "seed {seed} algo {algo}");
        }
    }
}

#[test]
fn thread_count_from_environment() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2", K2);
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_ordhom"))
            .args(["solve", s(&k2), s(&k2), "--algo", "shifted"])
            .env("ORDHOM_THREADS", threads)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("1")), 0);
    assert_eq!(code(&run("0")), 2);
    assert_eq!(code(&run("many")), 2);
}
