//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! case count and wall time against a fixed limit.

use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use fingrpd::verify::{self, CheckReport};

struct Criterion {
    id: u32,
    name: &'static str,
    min_cases: usize,
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        id: 1,
        name: "cardinality goldens and |LX| = #components",
        min_cases: 50,
        limit: secs(1),
    },
    Criterion {
        id: 2,
        name: "span functoriality",
        min_cases: 100,
        limit: secs(30),
    },
    Criterion {
        id: 3,
        name: "norm engine",
        min_cases: 200,
        limit: secs(120),
    },
    Criterion {
        id: 4,
        name: "Beck-Chevalley invertibility",
        min_cases: 50,
        limit: secs(60),
    },
    Criterion {
        id: 5,
        name: "induction squares at p = 2, 3",
        min_cases: 100,
        limit: secs(120),
    },
    Criterion {
        id: 6,
        name: "chromatic cardinalities",
        // 18 groups, three primes, heights 0 to 3
        min_cases: 216,
        limit: secs(60),
    },
    Criterion {
        id: 7,
        name: "linear cardinality",
        min_cases: 50,
        limit: secs(60),
    },
];

fn check(id: u32) -> (CheckReport, usize) {
    match id {
        1 => {
            let r = verify::cardinalities_and_free_loops();
            // the |LX| part alone must cover fifty groupoids
            (r, fingrpd::suite::groupoids().len())
        }
        2 => {
            let r = verify::span_functoriality(verify::SPAN_PAIRS);
            let n = r.cases;
            (r, n)
        }
        3 => {
            let r = verify::norm_engine();
            let n = r.cases;
            (r, n)
        }
        4 => {
            let r = verify::beck_chevalley();
            let n = r.cases;
            (r, n)
        }
        5 => {
            let r = verify::induction_squares(&[2, 3]);
            // instances are (H, G, rho); each contributes three squares
            let n = r.cases / 3;
            (r, n)
        }
        6 => {
            let r = verify::chromatic();
            let n = r.cases;
            (r, n)
        }
        7 => {
            let r = verify::linear_cardinality();
            let n = r.cases;
            (r, n)
        }
        _ => unreachable!(),
    }
}

fn run_suite() -> Output {
    Command::new(env!("CARGO_BIN_EXE_fingrpd"))
        .arg("suite")
        .output()
        .unwrap()
}

fn exit_code_of(args: &[&str], stdin: &str) -> Option<i32> {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_fingrpd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait().unwrap().code()
}

/// Criterion 8: two `suite` runs are byte-identical and all PASS, and the
/// documented exit codes hold.
fn cli_goldens() -> Result<String, String> {
    let a = run_suite();
    let b = run_suite();
    if a.stdout != b.stdout {
        return Err("suite output differs between runs".into());
    }
    let text = String::from_utf8_lossy(&a.stdout);
    if a.status.code() != Some(0) || text.lines().any(|l| l.starts_with("FAIL")) {
        return Err(format!("suite reported failures:\n{text}"));
    }
    let examples = text
        .lines()
        .filter(|l| l.starts_with("PASS  example:"))
        .count();
    let s3 = r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#;
    let codes = [
        (exit_code_of(&["cardinality"], "{oops"), 2),
        (exit_code_of(&["no-such-command"], ""), 2),
        (
            exit_code_of(&["loop", "--p", "2", "--h", "2", "--iso-bound", "2"], s3),
            3,
        ),
        (exit_code_of(&["chrom-card", "--p", "2", "--n", "1"], s3), 0),
    ];
    for (got, want) in codes {
        if got != Some(want) {
            return Err(format!("exit code {got:?}, expected {want}"));
        }
    }
    Ok(format!(
        "{examples} examples, two identical runs, exit codes 0/2/3"
    ))
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let (report, cases) = check(c.id);
        let elapsed = start.elapsed();
        let ok = report.passed() && cases >= c.min_cases && elapsed < c.limit;
        println!(
            "{} criterion {}: {} ({} cases, need {}; {:.2}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            cases,
            c.min_cases,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for f in report.failures.iter().take(10) {
            println!("     {f}");
        }
        if !ok {
            failed.push(c.id);
        }
    }
    let start = Instant::now();
    match cli_goldens() {
        Ok(detail) => println!(
            "PASS criterion 8: CLI goldens ({detail}; {:.2}s)",
            start.elapsed().as_secs_f64()
        ),
        Err(why) => {
            println!("FAIL criterion 8: CLI goldens ({why})");
            failed.push(8);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
