//! The `suite` subcommand: every whole-suite check, then the documented
//! examples replayed through the subcommands they belong to.

use fingrpd::grpd::DEFAULT_ISO_BOUND;
use fingrpd::verify::{self, CheckReport};
use serde_json::json;

use crate::commands::{self, Flags, Output};
use crate::input;

struct Golden {
    name: &'static str,
    command: &'static str,
    p: Option<u64>,
    h: Option<usize>,
    input: &'static str,
    expected: &'static str,
}

const fn golden(
    name: &'static str,
    command: &'static str,
    p: Option<u64>,
    h: Option<usize>,
    input: &'static str,
    expected: &'static str,
) -> Golden {
    Golden {
        name,
        command,
        p,
        h,
        input,
        expected,
    }
}

const S3_C2_SIGN: &str = r#"{"schema": 1, "group": {"perm_gens": [[1,0,2], [1,2,0]]}, "subgroup": [[1,0,2]], "rep": {"kind": "sign"}}"#;
const S3_A3_REGULAR: &str = r#"{"schema": 1, "group": {"perm_gens": [[1,0,2], [1,2,0]]}, "subgroup": [[1,2,0]], "rep": {"kind": "regular"}}"#;

const GOLDENS: &[Golden] = &[
    golden("cardinality BC6", "cardinality", None, None, r#"{"schema": 1, "groupoid": {"group": {"named": "C6"}}}"#, "1/6"),
    golden("cardinality S3//S3", "cardinality", None, None, r#"{"schema": 1, "groupoid": {"conjugation": {"named": "S3"}}}"#, "1"),
    golden("cardinality discrete 4", "cardinality", None, None, r#"{"schema": 1, "groupoid": {"discrete": 4}}"#, "4"),
    golden(
        "cardinality BC2 x discrete 3",
        "cardinality",
        None,
        None,
        r#"{"schema": 1, "groupoid": {"product": [{"group": {"named": "C2"}}, {"discrete": 3}]}}"#,
        "3/2",
    ),
    golden(
        "cardinality C2 acting on itself",
        "cardinality",
        None,
        None,
        r#"{"schema": 1, "groupoid": {"action": {"group": {"named": "C2"}, "points": 2, "table": [[0,1],[1,0]]}}}"#,
        "1",
    ),
    golden(
        "cardinality S3 on S3/C2",
        "cardinality",
        None,
        None,
        r#"{"schema": 1, "groupoid": {"cosets": {"group": {"named": "S3"}, "subgroup": [1]}}}"#,
        "1/2",
    ),
    golden(
        "free loops of BS3",
        "loop",
        None,
        None,
        r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#,
        "loops free\nobjects 6\ncomponents 3\ncardinality 1",
    ),
    golden(
        "2-adic loops of BS3",
        "loop",
        Some(2),
        Some(1),
        r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#,
        "loops p=2 h=1\nobjects 4\ncomponents 2\ncardinality 2/3\ncommuting tuples PASS",
    ),
    golden(
        "2-adic loops of BS3 at height 2",
        "loop",
        Some(2),
        Some(2),
        r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#,
        "loops p=2 h=2\nobjects 10\ncomponents 4\ncardinality 5/3\ncommuting tuples PASS",
    ),
    golden(
        "3-adic loops of BC3 at height 2",
        "loop",
        Some(3),
        Some(2),
        r#"{"schema": 1, "groupoid": {"group": {"named": "C3"}}}"#,
        "loops p=3 h=2\nobjects 9\ncomponents 9\ncardinality 3\ncommuting tuples PASS",
    ),
    golden(
        "2-adic loops of BC3",
        "loop",
        Some(2),
        Some(1),
        r#"{"schema": 1, "groupoid": {"group": {"named": "C3"}}}"#,
        "loops p=2 h=1\nobjects 1\ncomponents 1\ncardinality 1/3\ncommuting tuples PASS",
    ),
    golden(
        "cardinality span of BC2",
        "span",
        None,
        None,
        r#"{"schema": 1, "spans": [{"left": {"to_point": {"group": {"named": "C2"}}}, "right": {"to_point": {"group": {"named": "C2"}}}}]}"#,
        "[1/2]",
    ),
    golden(
        "induce then restrict along C2 <= S3",
        "span",
        None,
        None,
        INDUCE_RESTRICT,
        "[3]\nfunctorial PASS",
    ),
    golden(
        "span through BS3 from pt to pt",
        "span",
        None,
        None,
        THROUGH_BS3,
        "[6]\nfunctorial PASS",
    ),
    golden(
        "span through the fiber of BC2 -> BS3",
        "span",
        None,
        None,
        FIBER_C2_S3,
        "[3]\nfunctorial PASS",
    ),
    golden(
        "norm of constant Q along BS3 -> pt",
        "norm-check",
        None,
        None,
        r#"{"schema": 1, "map": {"to_point": {"group": {"named": "S3"}}}, "system": {"kind": "constant", "dim": 1}}"#,
        "PASS\nstructural_invertible true\ndualizing_invertible true\nagrees_with_direct true",
    ),
    golden(
        "norm of the sign of C2 along BC2 -> pt",
        "norm-check",
        None,
        None,
        r#"{"schema": 1, "map": {"to_point": {"group": {"named": "C2"}}}, "system": {"kind": "sign"}}"#,
        "PASS\nstructural_invertible true\ndualizing_invertible true\nagrees_with_direct true",
    ),
    golden(
        "norm of the regular C3 along BC3 -> pt",
        "norm-check",
        None,
        None,
        r#"{"schema": 1, "map": {"to_point": {"group": {"named": "C3"}}}, "system": {"kind": "regular"}}"#,
        "PASS\nstructural_invertible true\ndualizing_invertible true\nagrees_with_direct true",
    ),
    golden(
        "norm along discrete 2 -> pt",
        "norm-check",
        None,
        None,
        r#"{"schema": 1, "map": {"to_point": {"discrete": 2}}, "system": {"kind": "constant", "dim": 1}}"#,
        "PASS\nstructural_invertible true\ndualizing_invertible true\nagrees_with_direct true",
    ),
    golden(
        "Beck-Chevalley for BC2 x_BS3 BC2",
        "bc-check",
        None,
        None,
        BC_C2_S3,
        "PASS\nshriek_invertible true\nstar_invertible true",
    ),
    golden(
        "induce-check C2 <= S3 sign",
        "induce-check",
        None,
        None,
        S3_C2_SIGN,
        "PASS\nvalues (3, -1, 0)\nclass order size induced integrated\n[0,1,2] 1 1 3 3\n[0,2,1] 2 3 -1 -1\n[1,2,0] 3 2 0 0",
    ),
    golden(
        "induce-check A3 <= S3 regular",
        "induce-check",
        None,
        None,
        S3_A3_REGULAR,
        "PASS\nvalues (6, 0, 0)\nclass order size induced integrated\n[0,1,2] 1 1 6 6\n[0,2,1] 2 3 0 0\n[1,2,0] 3 2 0 0",
    ),
    golden(
        "2-typical induce-check C2 <= S3 sign",
        "induce-check",
        Some(2),
        None,
        S3_C2_SIGN,
        "PASS\nvalues (3, -1)\nclass order size induced integrated\n[0,1,2] 1 1 3 3\n[0,2,1] 2 3 -1 -1",
    ),
    golden(
        "3-typical induce-check A3 <= S3 regular",
        "induce-check",
        Some(3),
        None,
        S3_A3_REGULAR,
        "PASS\nvalues (6, 0)\nclass order size induced integrated\n[0,1,2] 1 1 6 6\n[1,2,0] 3 2 0 0",
    ),
    golden("chrom-card BS3 p=2 n=1", "chrom-card", Some(2), Some(1), r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#, "2/3"),
    golden("chrom-card BS3 p=2 n=2", "chrom-card", Some(2), Some(2), r#"{"schema": 1, "groupoid": {"group": {"named": "S3"}}}"#, "5/3"),
    golden("chrom-card BC2 p=2 n=3", "chrom-card", Some(2), Some(3), r#"{"schema": 1, "groupoid": {"group": {"named": "C2"}}}"#, "4"),
    golden("chrom-card BC3 p=3 n=2", "chrom-card", Some(3), Some(2), r#"{"schema": 1, "groupoid": {"group": {"named": "C3"}}}"#, "3"),
    golden("chrom-card BC5 p=5 n=3", "chrom-card", Some(5), Some(3), r#"{"schema": 1, "groupoid": {"group": {"named": "C5"}}}"#, "25"),
    golden("chrom-card pt p=7 n=2", "chrom-card", Some(7), Some(2), r#"{"schema": 1, "groupoid": {"discrete": 1}}"#, "1"),
    golden("chrom-card BC1 p=2 n=2", "chrom-card", Some(2), Some(2), r#"{"schema": 1, "groupoid": {"group": {"named": "C1"}}}"#, "1"),
];

const INDUCE_RESTRICT: &str = concat!(
    r#"{"schema": 1, "spans": ["#,
    r#"{"left": {"identity": {"group": {"named": "C2"}}}, "right": "#,
    r#"{"subgroup_inclusion": {"group": {"named": "S3"}, "subgroup": [1]}}},"#,
    r#"{"left": {"subgroup_inclusion": {"group": {"named": "S3"}, "subgroup": [1]}}, "right": "#,
    r#"{"identity": {"group": {"named": "C2"}}}}"#,
    r#"]}"#
);

// The first span is pt <- pt -> BS3, the second closes up at the point.
const THROUGH_BS3: &str = concat!(
    r#"{"schema": 1, "spans": ["#,
    r#"{"left": {"to_point": {"discrete": 1}}, "right": "#,
    r#"{"table": {"source": {"discrete": 1}, "target": {"group": {"named": "S3"}}, "objects": [0], "morphisms": [0]}}},"#,
    r#"{"left": {"table": {"source": {"discrete": 1}, "target": {"group": {"named": "S3"}}, "objects": [0], "morphisms": [0]}}, "#,
    r#""right": {"to_point": {"discrete": 1}}}"#,
    r#"]}"#
);

const FIBER_C2_S3: &str = concat!(
    r#"{"schema": 1, "spans": ["#,
    r#"{"left": {"to_point": {"discrete": 1}}, "right": "#,
    r#"{"table": {"source": {"discrete": 1}, "target": {"group": {"named": "S3"}}, "objects": [0], "morphisms": [0]}}},"#,
    r#"{"left": {"subgroup_inclusion": {"group": {"named": "S3"}, "subgroup": [1]}}, "#,
    r#""right": {"to_point": {"group": {"named": "C2"}}}}"#,
    r#"]}"#
);

const BC_C2_S3: &str = concat!(
    r#"{"schema": 1, "left": {"subgroup_inclusion": {"group": {"named": "S3"}, "subgroup": [1]}}, "#,
    r#""right": {"subgroup_inclusion": {"group": {"named": "S3"}, "subgroup": [1]}}, "#,
    r#""system": {"kind": "constant", "dim": 1}}"#
);

fn run_golden(g: &Golden) -> Result<(), String> {
    let flags = Flags {
        p: g.p,
        h: g.h,
        iso_bound: DEFAULT_ISO_BOUND,
    };
    let out = input::parse_document(g.input)
        .and_then(|doc| commands::run(g.command, &doc, flags))
        .map_err(|e| e.to_string())?;
    if out.plain == g.expected {
        Ok(())
    } else {
        Err(format!("got {:?}", out.plain))
    }
}

/// Runs every check and golden. Output carries no timings, so repeated
/// runs are byte-identical.
pub fn run() -> Output {
    let checks: [(&str, fn() -> CheckReport); 7] = [
        (
            "cardinalities and free loops",
            verify::cardinalities_and_free_loops,
        ),
        ("span functoriality", || {
            verify::span_functoriality(verify::SPAN_PAIRS)
        }),
        ("norm engine", verify::norm_engine),
        ("Beck-Chevalley", verify::beck_chevalley),
        ("induction squares p in {2, 3}", || {
            verify::induction_squares(&[2, 3])
        }),
        ("chromatic cardinalities", verify::chromatic),
        ("linear cardinality", verify::linear_cardinality),
    ];
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut all = true;
    for (name, check) in checks {
        let r = check();
        all &= r.passed();
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        lines.push(format!("{verdict}  {name} ({} cases)", r.cases));
        for f in &r.failures {
            lines.push(format!("      {f}"));
        }
        rows.push(
            json!({ "check": name, "result": verdict, "cases": r.cases, "failures": r.failures }),
        );
    }
    for g in GOLDENS {
        let outcome = run_golden(g);
        all &= outcome.is_ok();
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        lines.push(format!("{verdict}  example: {}", g.name));
        if let Err(why) = &outcome {
            lines.push(format!("      {why}"));
        }
        rows.push(json!({ "check": format!("example: {}", g.name), "result": verdict }));
    }
    let summary = if all {
        "all checks passed"
    } else {
        "some checks failed"
    };
    lines.push(summary.to_string());
    Output {
        plain: lines.join("\n"),
        json: json!({ "checks": rows, "passed": all }),
        passed: all,
    }
}
