use dickson_cli::{run, BenchRecord, CliError};
use dickson_core::verify::VerificationReport;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dickson(args: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dickson").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn eval_examples() {
    let lucas = dickson("eval --n 5 --x 1 --a -1 --ring int");
    assert_eq!((lucas.code, lucas.stdout.as_str()), (0, "11\n"));
    let d0 = dickson("eval --n 0 --x 9 --a 4 --ring int");
    assert_eq!((d0.code, d0.stdout.as_str()), (0, "2\n"));
}

#[test]
fn eval_methods_agree_across_rings() {
    for ring in [
        "--ring int",
        "--ring rat",
        "--ring fp --p 13",
        "--ring fq --p 3 --m 2",
    ] {
        let outs: Vec<String> = ["recurrence", "closed", "matrix"]
            .iter()
            .map(|m| {
                let o = dickson(&format!(
                    "eval --n 17 --x 2 --a 3 --kind 1 {ring} --method {m}"
                ));
                assert_eq!(o.code, 0, "{ring} {m}: {}", o.stderr);
                o.stdout
            })
            .collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{ring}: {outs:?}");
    }
}

#[test]
fn eval_rationals_and_field_elements() {
    // D_2(1/2, 1/3) = 1/4 - 2/3
    assert_eq!(
        dickson("eval --n 2 --x 1/2 --a 1/3 --ring rat").stdout,
        "-5/12\n"
    );
    // in F_7: D_3(3, 5) = 27 - 45 = -18 = 3
    assert_eq!(
        dickson("eval --n 3 --x 3 --a 5 --ring fp --p 7").stdout,
        "3\n"
    );
    // the generator g of F_9 = F_3[g]/(g^2 + 1): D_2(g, 1) = g^2 - 2 = -3 = 0
    assert_eq!(
        dickson("eval --n 2 --x g --a 1 --ring fq --p 3 --m 2").stdout,
        "0\n"
    );
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        "eval --n 5 --x 1 --ring int",
        "eval --n -1 --x 1 --a 1 --ring int",
        "eval --n 5 --x 1/2 --a 1 --ring int",
        "eval --n 5 --x 1/0 --a 1 --ring rat",
        "eval --n 5 --x 1 --a 1 --ring fp",
        "eval --n 5 --x 1 --a 1 --ring fp --p 12",
        "eval --n 5 --x 1 --a 1 --ring fp --p 5 --kind 5",
        "eval --n 513 --x 1 --a 1 --ring int --method closed",
        "table --n-max 3 --ring int --p 5",
        "brewer --p 9 --n 1 --a 1",
        "brewer --p 7 --n 1",
        "permcheck --q 12 --n-max 3",
        "verify --suite nope",
        "frobnicate",
    ] {
        let o = dickson(args);
        assert_eq!(o.code, 2, "{args}");
        assert!(o.stdout.is_empty(), "{args}");
        assert_eq!(
            o.stderr.trim_end().lines().count(),
            1,
            "{args}: {}",
            o.stderr
        );
        assert!(o.stderr.starts_with("error"), "{args}: {}", o.stderr);
    }
}

#[test]
fn matrix_method_reaches_huge_degree() {
    let o = dickson("eval --n 1000000000000 --x 3 --a 2 --ring fp --p 101");
    assert_eq!(o.code, 0);
    let v: u64 = o.stdout.trim().parse().unwrap();
    assert!(v < 101);
}

#[test]
fn table_formats() {
    let human = dickson("table --n-max 3 --ring int");
    assert_eq!(
        human.stdout,
        "D_0(x,a) = 2\nD_1(x,a) = x\nD_2(x,a) = x^2 - 2*a\nD_3(x,a) = x^3 - 3*a*x\n"
    );

    let csv = dickson("table --n-max 3 --ring int --a 2 --format csv");
    assert_eq!(
        csv.stdout,
        "n,x^3,x^2,x^1,x^0\n0,0,0,0,2\n1,0,0,1,0\n2,0,1,0,-4\n3,1,0,-6,0\n"
    );

    let json = dickson("table --n-max 2 --ring fp --p 5 --a 3 --format json");
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["ring"], "fp(5)");
    assert_eq!(
        v["polynomials"][2]["coefficients"],
        serde_json::json!(["4", "0", "1"])
    );

    let kind = dickson("table --n-max 2 --ring int --kind 1 --format latex");
    assert!(kind.stdout.contains("D_{0,1}(x,a)=1\\\\"));
    assert!(kind.stdout.contains("D_{2,1}(x,a)=x^{2}-a."));
}

#[test]
fn verify_example_and_determinism() {
    let first = dickson("verify --suite functional --seed 7 --trials 50");
    assert_eq!(first.code, 0);
    assert!(first.stdout.contains("failures=0"));
    assert!(first.stdout.contains("seed=7"));
    let second = dickson("verify --suite functional --seed 7 --trials 50");
    assert_eq!(first.stdout, second.stdout);

    let a = dickson("verify --suite kindk --seed 3 --trials 4 --format json");
    let b = dickson("verify --suite kindk --seed 3 --trials 4 --format json");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_round_trips() {
    let o = dickson("verify --suite carlitz --seed 2 --trials 3 --format json");
    assert_eq!(o.code, 0);
    let reports: Vec<VerificationReport> = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].seed, 2);
    assert!(reports[0].counterexample.is_none());
    let again = serde_json::to_string_pretty(&reports).unwrap();
    assert_eq!(again.trim_end(), o.stdout.trim_end());
}

#[test]
fn brewer_outputs() {
    assert_eq!(dickson("brewer --p 3 --n 1 --a 1").stdout, "-1\n");
    let all = dickson("brewer --p 5 --n 0 --all-a");
    assert_eq!(all.stdout, "a,lambda\n0,0\n1,0\n2,0\n3,0\n4,0\n");
}

#[test]
fn permcheck_outputs() {
    let o = dickson("permcheck --q 7 --n-max 5");
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "n,a,is_perm,gcd,agree");
    assert_eq!(lines.len(), 1 + 5 * 6);
    // gcd(5, 48) = 1: every D_5(x, a) permutes F_7
    assert!(lines
        .iter()
        .filter(|l| l.starts_with("5,"))
        .all(|l| l.ends_with(",true,1,true")));

    let mono = dickson("permcheck --q 9 --n-max 2 --a 0");
    assert_eq!(
        mono.stdout,
        "n,a,is_perm,gcd,agree\n1,0,true,1,true\n2,0,false,2,true\n"
    );
}

#[test]
fn bench_records() {
    let o = dickson("bench --n-list 4,600 --ring rat --reps 2 --format json --x 1/2 --a 3");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let records: Vec<BenchRecord> = serde_json::from_str(&o.stdout).unwrap();
    let methods: Vec<(&str, u64)> = records.iter().map(|r| (r.method.as_str(), r.n)).collect();
    assert_eq!(
        methods,
        [
            ("recurrence", 4),
            ("closed", 4),
            ("matrix", 4),
            ("matrix", 600)
        ]
    );
    assert!(records
        .iter()
        .all(|r| r.repetitions == 2 && r.ring == "rat"));

    assert_eq!(dickson("bench --n-list 4 --ring int --reps 0").code, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(CliError::Failed("disagreement".into()).exit_code(), 1);
    assert_eq!(CliError::Usage("bad flag".into()).exit_code(), 2);
    assert_eq!(dickson("--help").code, 0);
    assert_eq!(dickson("--version").stdout, "dickson 0.1.0\n");
}
