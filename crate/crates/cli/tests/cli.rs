use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyingrabbits"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

#[test]
fn compute_classical() {
    let o = cli(&["compute", "--fertile", "2", "--die", "inf", "--n", "11"]);
    assert!(o.status.success());
    assert_eq!(
        lines(&o),
        ["1", "1", "2", "3", "5", "8", "13", "21", "34", "55", "89"]
    );
}

#[test]
fn compute_last() {
    let o = cli(&[
        "compute",
        "--fertile",
        "3",
        "--die",
        "9",
        "--n",
        "20",
        "--last",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "715\n");
}

#[test]
fn compute_degenerate() {
    let o = cli(&[
        "compute",
        "--fertile",
        "4",
        "--die",
        "2",
        "--n",
        "6",
        "--method",
        "sim",
    ]);
    assert!(o.status.success());
    assert_eq!(lines(&o), ["1", "1", "0", "0", "0", "0"]);
    assert!(stderr(&o).is_empty());

    // default method reroutes to the simulator with a warning
    let o = cli(&["compute", "--fertile", "4", "--die", "2", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(lines(&o), ["1", "1", "0", "0", "0", "0"]);
    assert!(stderr(&o).starts_with("warning:"));

    for method in ["rec", "oller", "fast"] {
        let o = cli(&[
            "compute",
            "--fertile",
            "4",
            "--die",
            "2",
            "--n",
            "6",
            "--method",
            method,
        ]);
        assert_eq!(o.status.code(), Some(1), "{method}");
        assert!(stdout(&o).is_empty());
        assert!(stderr(&o).contains("degenerate"));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--fertile", "0", "--die", "3", "--n", "5"][..],
        &["compute", "--fertile", "2", "--die", "-1", "--n", "5"],
        &["compute", "--fertile", "2", "--die", "many", "--n", "5"],
        &["compute", "--fertile", "2", "--die", "inf", "--n", "0"],
        &[
            "compute",
            "--fertile",
            "2",
            "--die",
            "inf",
            "--n",
            "5",
            "--mod",
            "1",
        ],
        &[
            "compute",
            "--fertile",
            "2",
            "--die",
            "inf",
            "--n",
            "5",
            "--method",
            "magic",
        ],
        &["compute", "--fertile", "2", "--n", "5"],
        &["table", "--fertile", "2", "--die", "inf"],
        &["verify", "--max-f", "0", "--max-d", "3", "--max-n", "5"],
        &["bench", "--fertile", "2", "--die", "3", "--n", "5"],
        &["frobnicate"],
    ] {
        let o = cli(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn formats_carry_identical_values() {
    let base = ["compute", "--fertile", "2", "--die", "inf", "--n", "100"];
    let plain = lines(&cli(&base));
    let csv = lines(&cli(&[&base[..], &["--format", "csv"]].concat()));
    let json = lines(&cli(&[&base[..], &["--format", "json"]].concat()));

    assert_eq!(csv[0], "index,value");
    assert_eq!(plain.len(), 100);
    assert_eq!(plain[99], "354224848179261915075");
    for (i, value) in plain.iter().enumerate() {
        assert_eq!(csv[i + 1], format!("{},{value}", i + 1));
        let row: serde_json::Value = serde_json::from_str(&json[i]).unwrap();
        assert_eq!(row["n"], i as u64 + 1);
        assert_eq!(row["value"].as_str(), Some(value.as_str()));
    }
}

#[test]
fn methods_and_modulus_agree() {
    let run = |method: &str, extra: &[&str]| {
        let mut args = vec![
            "compute",
            "--fertile",
            "3",
            "--die",
            "9",
            "--n",
            "60",
            "--method",
            method,
        ];
        args.extend_from_slice(extra);
        let o = cli(&args);
        assert!(o.status.success());
        lines(&o)
    };
    let exact = run("sim", &[]);
    for method in ["rec", "oller", "fast"] {
        assert_eq!(run(method, &[]), exact, "{method}");
    }
    let reduced: Vec<String> = exact
        .iter()
        .map(|v| (v.parse::<u128>().unwrap() % 1000).to_string())
        .collect();
    for method in ["sim", "rec", "oller", "fast"] {
        assert_eq!(run(method, &["--mod", "1000"]), reduced, "{method}");
    }

    let o = cli(&[
        "compute",
        "--fertile",
        "3",
        "--die",
        "9",
        "--n",
        "21",
        "--method",
        "fast",
        "--mod",
        "1000",
        "--last",
    ]);
    assert_eq!(stdout(&o), "32\n");
}

#[test]
fn table_examples() {
    let o = cli(&["table", "--fertile", "3", "--die", "9", "--n", "20"]);
    assert!(o.status.success());
    let rows = lines(&o);
    assert_eq!(rows.len(), 20);
    assert_eq!(rows[19], "228 158 109 76 53 36 25 18 12 total 715");

    let o = cli(&["table", "--fertile", "1", "--die", "1", "--n", "5"]);
    assert!(lines(&o).iter().all(|r| r == "1 total 1"));
    assert_eq!(lines(&o).len(), 5);

    let o = cli(&[
        "table",
        "--fertile",
        "2",
        "--die",
        "3",
        "--n",
        "10",
        "--format",
        "csv",
    ]);
    let rows = lines(&o);
    assert_eq!(rows[0], "generation,age_1,age_2,age_3,total");
    assert!(rows[10].ends_with(",12"));
}

#[test]
fn table_totals_match_compute() {
    for (f, d) in [("2", "inf"), ("3", "9"), ("4", "2"), ("1", "3")] {
        let table = cli(&[
            "table",
            "--fertile",
            f,
            "--die",
            d,
            "--n",
            "30",
            "--format",
            "json",
        ]);
        let compute = cli(&[
            "compute",
            "--fertile",
            f,
            "--die",
            d,
            "--n",
            "30",
            "--method",
            "sim",
        ]);
        let totals: Vec<String> = lines(&table)
            .iter()
            .map(|r| {
                let row: serde_json::Value = serde_json::from_str(r).unwrap();
                let ages: u128 = row["ages"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|a| a.as_str().unwrap().parse::<u128>().unwrap())
                    .sum();
                let total = row["total"].as_str().unwrap().to_owned();
                assert_eq!(ages.to_string(), total);
                total
            })
            .collect();
        assert_eq!(totals, lines(&compute), "f={f} d={d}");
    }
}

#[test]
fn verify_examples() {
    let o = cli(&["verify", "--max-f", "6", "--max-d", "8", "--max-n", "120"]);
    assert_eq!(o.status.code(), Some(0));
    let out = lines(&o);
    assert_eq!(out.last().unwrap(), "all 33 parameter pairs agree");
    assert_eq!(out.len(), 34);

    let o = cli(&["verify", "--max-f", "1", "--max-d", "1", "--max-n", "50"]);
    assert!(o.status.success());
    assert_eq!(
        lines(&o),
        [
            "(f=1, d=1) n<=50: pass [simulation, theorem1, oller, fast-eval]",
            "all 1 parameter pairs agree"
        ]
    );

    let o = cli(&[
        "verify",
        "--max-f",
        "2",
        "--max-d",
        "2",
        "--max-n",
        "90",
        "--include-inf",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(f=2, d=inf) n<=90: pass"));
    assert!(stdout(&o).ends_with("all 5 parameter pairs agree\n"));
}

#[test]
fn verify_output_is_deterministic() {
    let args = [
        "verify",
        "--max-f",
        "4",
        "--max-d",
        "6",
        "--max-n",
        "40",
        "--include-inf",
    ];
    assert_eq!(stdout(&cli(&args)), stdout(&cli(&args)));
}

#[test]
fn bench_examples() {
    let o = cli(&[
        "bench",
        "--fertile",
        "2",
        "--die",
        "12",
        "--n",
        "1000000",
        "--mod",
        "2305843009213693951",
        "--repeats",
        "1",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("residues agree"));
    let residues: Vec<&str> = out
        .lines()
        .filter(|l| l.contains("residue "))
        .map(|l| l.split_whitespace().nth(2).unwrap())
        .collect();
    assert_eq!(residues.len(), 2);
    assert_eq!(residues[0], residues[1]);

    let o = cli(&[
        "bench",
        "--fertile",
        "2",
        "--die",
        "12",
        "--n",
        "10",
        "--mod",
        "97",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("residue 55"));

    let o = cli(&[
        "bench",
        "--fertile",
        "3",
        "--die",
        "9",
        "--n",
        "100000",
        "--mod",
        "1000000007",
        "--repeats",
        "1",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("residues agree"));

    let o = cli(&[
        "bench",
        "--fertile",
        "5",
        "--die",
        "2",
        "--n",
        "10",
        "--mod",
        "97",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
