use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flipsort"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["cost", "3276145"]), "4\n");
    assert_eq!(stdout(&["count", "p", "--max", "8"]), "1 1 3 11 49 263 1653 11877\n");
    assert_eq!(run(&["verify", "all", "--n", "7"]).status.code(), Some(0));
}

#[test]
fn permutation_commands() {
    assert_eq!(stdout(&["flip", "3276145"]), "2316745\n");
    assert_eq!(stdout(&["trace", "3412"]), "3412\n3142\n1324\n1234\n");
    assert_eq!(stdout(&["is-popstacked", "21"]), "false\n");
    assert_eq!(stdout(&["preimages", "2143"]), "2413\n");
    assert_eq!(stdout(&["preimages", "2413"]), "4231\n");
    assert_eq!(stdout(&["preimages", "12"]), "12\n21\n");
    assert_eq!(stdout(&["twopss", "encode", "12"]), "U+\n");
    let walk = stdout(&["twopss", "encode", "3142"]);
    assert_eq!(stdout(&["twopss", "decode", walk.trim()]), "3142\n");
}

#[test]
fn count_formats_and_json_round_trip() {
    assert_eq!(stdout(&["count", "p", "--max", "3", "--format", "bfile"]), "1 1\n2 1\n3 3\n");
    assert!(stdout(&["count", "p", "--max", "3", "--runs", "--format", "csv"]).starts_with("n,k,count\n1,1,1\n"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, stdout(&["count", "p", "--max", "12", "--runs", "--format", "json"])).unwrap();
    assert_eq!(stdout(&["count", "check", path.to_str().unwrap()]), "ok: p_1..p_12 agree\n");
    let text = std::fs::read_to_string(&path).unwrap().replace("\"11877\"", "\"11878\"");
    std::fs::write(&path, text).unwrap();
    assert_eq!(run(&["count", "check", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn automaton_and_series() {
    assert_eq!(stdout(&["automaton", "build", "--runs", "4"]), "states 68\n");
    assert_eq!(stdout(&["automaton", "minimize", "--runs", "4"]), "states 68 minimized 40\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.txt");
    let gf = stdout(&["automaton", "gf", "--runs", "2", "--export", path.to_str().unwrap()]);
    assert!(gf.lines().count() == 2);
    let dfa = flipsort::automaton::Dfa::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dfa.export(), flipsort::automaton::build_ak(2).export());
    // The dense line parses back to the same function.
    let dense = gf.lines().nth(1).unwrap();
    let parsed = flipsort::series::RationalFunction::from_dense_string(dense).unwrap();
    assert_eq!(parsed, flipsort::automaton::dfa_to_gf(&dfa).unwrap());
    assert_eq!(stdout(&["series", "dk", "--k", "0", "--order", "5"]), "1, 4, 20, 116, 708, 4452\n");
    assert!(stdout(&["series", "pk", "--k", "2", "--order", "6"]).contains("0, 0, 0, 2, 8, 22, 52"));
    assert!(stdout(&["twopss", "table", "--max", "3"]).contains("3,1,4\n"));
}

#[test]
fn worstcase_commands() {
    assert_eq!(stdout(&["worstcase", "bandwidth", "--n", "6"]), "bandwidth n=6: true\n");
    let im = stdout(&["worstcase", "im-n2", "--n", "6"]);
    assert!(im.contains("132546,563412\n"));
    assert!(im.ends_with("# 11 members, formula 11\n"));
    let w = stdout(&["worstcase", "witness", "--n", "5", "--m", "1", "--i", "1", "--j", "3"]);
    let p: flipsort::Permutation = w.trim().parse().unwrap();
    assert_eq!(p.flip().at(1), 3);
    assert_eq!(run(&["worstcase", "witness", "--n", "5", "--m", "3", "--i", "1", "--j", "4"]).status.code(), Some(2));
    assert!(stdout(&["worstcase", "hasse", "--k", "3", "--nk", "3"]).contains("LLLSSS -> LLSLSS [color=blue];"));
    let rep = stdout(&["worstcase", "skew-report", "--n", "5"]);
    assert!(rep.contains("52341,3,3,true\n") && rep.contains("45312,3,3,true\n"));
}

#[test]
fn diagrams_are_seeded() {
    let a = stdout(&["diagram", "random:50", "--seed", "3"]);
    assert_eq!(a, stdout(&["diagram", "random:50", "--seed", "3"]));
    assert_ne!(a, stdout(&["diagram", "random:50", "--seed", "4"]));
    assert!(a.starts_with("# source: random n=50 rng=ChaCha8 seed=3\n"));
    let dots: Vec<(usize, usize, usize)> = a
        .lines()
        .skip_while(|l| l.starts_with('#'))
        .skip(1)
        .map(|l| {
            let v: Vec<usize> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    assert!(dots.iter().all(|&(m, i, v)| i.abs_diff(v) + m <= 49));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dots.csv");
    stdout(&["diagram", "6317524", "--iter", "0", "--out", path.to_str().unwrap()]);
    assert!(std::fs::read_to_string(&path).unwrap().contains("m,i,value\n0,1,6\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cost", "1 1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["twopss", "encode", "3412"]).status.code(), Some(2));
    assert_eq!(run(&["worstcase", "skew-report", "--n", "21"]).status.code(), Some(2));
    assert_eq!(run(&["count", "p", "--max", "0"]).status.code(), Some(2));
}
