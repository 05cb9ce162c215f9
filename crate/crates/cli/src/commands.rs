//! The subcommands other than `suite`.

use std::sync::Arc;

use fingrpd::characters::{
    chromatic_cardinality, chromatic_cardinality_oracle, p_typical_character_square,
    verify_induction_square, InductionReport,
};
use fingrpd::grpd::{
    cardinality, delooping, delooping_map, equivalence_check_bounded, FiniteGroup, FiniteGroupoid,
};
use fingrpd::linsys::{beck_chevalley_shriek, beck_chevalley_star, check_norm};
use fingrpd::loops::{commuting_tuples_direct, free_loop, iterated_p_free_loop, PAdicLoopParams};
use fingrpd::rational::format;
use fingrpd::spans::{linearize, span_compose, Span};
use fingrpd::suite;
use fingrpd::{Error, ExactMatrix, Result};
use serde_json::{json, Value};

use crate::input::{self, require, Document};

/// Result of a subcommand: its plain and JSON renderings, and whether the
/// checks it ran passed.
pub struct Output {
    pub plain: String,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    fn ok(plain: String, json: Value) -> Self {
        Output {
            plain,
            json,
            passed: true,
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format).collect())
        .collect()
}

fn matrix_plain(m: &ExactMatrix) -> String {
    matrix_rows(m)
        .iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cardinality_cmd(doc: &Document) -> Result<Output> {
    let x = input::build_groupoid(require(&doc.groupoid, "groupoid")?)?;
    let c = format(&cardinality(&x));
    Ok(Output::ok(c.clone(), json!({ "cardinality": c })))
}

/// The groupoid is `BG` for a group `G` given directly.
fn as_delooping(doc: &Document) -> Option<FiniteGroup> {
    match doc.groupoid.as_ref()? {
        input::GroupoidDesc::Group(g) => input::build_group(g).ok().map(|b| b.group),
        _ => None,
    }
}

pub fn loop_cmd(
    doc: &Document,
    p: Option<u64>,
    h: Option<usize>,
    iso_bound: usize,
) -> Result<Output> {
    let x = input::build_groupoid(require(&doc.groupoid, "groupoid")?)?;
    let (l, label): (Arc<FiniteGroupoid>, String) = match p {
        None => (free_loop(&x).underlying, "free".into()),
        Some(p) => {
            let h = h.unwrap_or(1);
            (
                iterated_p_free_loop(&x, PAdicLoopParams::new(p, h)?)?,
                format!("p={p} h={h}"),
            )
        }
    };
    let mut plain = vec![
        format!("loops {label}"),
        format!("objects {}", l.n_objects()),
        format!("components {}", l.n_components()),
        format!("cardinality {}", format(&l.cardinality())),
    ];
    let mut js = json!({
        "loops": label,
        "objects": l.n_objects(),
        "components": l.n_components(),
        "cardinality": format(&l.cardinality()),
    });
    let mut passed = true;
    if let (Some(p), Some(g)) = (p, as_delooping(doc)) {
        let direct = commuting_tuples_direct(&g, PAdicLoopParams::new(p, h.unwrap_or(1))?)?;
        passed = equivalence_check_bounded(&l, &direct, iso_bound)?;
        plain.push(format!("commuting tuples {}", verdict(passed)));
        js["commuting_tuples"] = json!(verdict(passed));
    }
    Ok(Output {
        plain: plain.join("\n"),
        json: js,
        passed,
    })
}

pub fn span_cmd(doc: &Document) -> Result<Output> {
    let descs = require(&doc.spans, "spans")?;
    if descs.is_empty() {
        return Err(Error::Format("\"spans\" is empty".into()));
    }
    let spans = descs
        .iter()
        .map(|s| Span::new(input::build_map(&s.left)?, input::build_map(&s.right)?))
        .collect::<Result<Vec<_>>>()?;
    let mut composite = spans[0].clone();
    let mut product = linearize(&spans[0])?;
    for s in &spans[1..] {
        composite = span_compose(&composite, s)?;
        product = linearize(s)?.mul(&product);
    }
    let m = linearize(&composite)?;
    let passed = m == product;
    let mut plain = matrix_plain(&m);
    if spans.len() > 1 {
        plain.push_str(&format!("\nfunctorial {}", verdict(passed)));
    }
    let js = json!({ "matrix": matrix_rows(&m), "functorial": passed });
    Ok(Output {
        plain,
        json: js,
        passed,
    })
}

pub fn norm_check_cmd(doc: &Document) -> Result<Output> {
    let f = input::build_map(require(&doc.map, "map")?)?;
    let kind = input::system_kind(require(&doc.system, "system")?);
    let sys = suite::system(f.source(), kind)?;
    let r = check_norm(&f, &sys)?;
    let passed = r.structural_invertible && r.dualizing_invertible && r.agrees_with_direct;
    let plain = format!(
        "{}\nstructural_invertible {}\ndualizing_invertible {}\nagrees_with_direct {}",
        verdict(passed),
        r.structural_invertible,
        r.dualizing_invertible,
        r.agrees_with_direct
    );
    let js = json!({
        "result": verdict(passed),
        "structural_invertible": r.structural_invertible,
        "dualizing_invertible": r.dualizing_invertible,
        "agrees_with_direct": r.agrees_with_direct,
    });
    Ok(Output {
        plain,
        json: js,
        passed,
    })
}

pub fn bc_check_cmd(doc: &Document) -> Result<Output> {
    let f = input::build_map(require(&doc.left, "left")?)?;
    let g = input::build_map(require(&doc.right, "right")?)?;
    let square = fingrpd::grpd::homotopy_pullback(&f, &g)?;
    let kind = input::system_kind(require(&doc.system, "system")?);
    let sys = suite::system(f.source(), kind)?;
    let shriek = beck_chevalley_shriek(&square, &sys)?.invertible;
    let star = beck_chevalley_star(&square, &sys)?.invertible;
    let passed = shriek && star;
    let plain = format!(
        "{}\nshriek_invertible {shriek}\nstar_invertible {star}",
        verdict(passed)
    );
    let js =
        json!({ "result": verdict(passed), "shriek_invertible": shriek, "star_invertible": star });
    Ok(Output {
        plain,
        json: js,
        passed,
    })
}

/// Report rows ordered by element order, then representative.
fn sorted_rows(g: &FiniteGroup, r: &InductionReport) -> Vec<(usize, usize, usize, String, String)> {
    let mut rows: Vec<_> = r
        .classes
        .iter()
        .map(|c| {
            (
                g.element_order(c.representative),
                c.representative,
                c.class_size,
                format(&c.induced),
                format(&c.integrated),
            )
        })
        .collect();
    rows.sort();
    rows
}

pub fn induce_check_cmd(doc: &Document, p: Option<u64>) -> Result<Output> {
    let g = input::build_group(require(&doc.group, "group")?)?;
    let sub = g.subgroup(require(&doc.subgroup, "subgroup")?)?;
    let (h, emb) = g.group.restrict_to(&sub)?;
    let f = delooping_map(Arc::new(delooping(&h)), Arc::new(delooping(&g.group)), emb)?;
    let rho = input::build_rep(require(&doc.rep, "rep")?, &g, &sub, &h)?;
    let report = match p {
        None => verify_induction_square(&f, &rho)?,
        Some(p) => p_typical_character_square(&f, &rho, p)?,
    };
    let rows = sorted_rows(&g.group, &report);
    let values: Vec<&str> = rows.iter().map(|r| r.3.as_str()).collect();
    let mut plain = vec![
        verdict(report.holds).to_string(),
        format!("values ({})", values.join(", ")),
        "class order size induced integrated".to_string(),
    ];
    for (order, rep, size, ind, int) in &rows {
        plain.push(format!("{} {order} {size} {ind} {int}", g.label(*rep)));
    }
    let js = json!({
        "result": verdict(report.holds),
        "values": values,
        "classes": rows.iter().map(|(order, rep, size, ind, int)| json!({
            "representative": g.label(*rep),
            "order": order,
            "size": size,
            "induced": ind,
            "integrated": int,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        plain: plain.join("\n"),
        json: js,
        passed: report.holds,
    })
}

pub fn chrom_card_cmd(doc: &Document, p: Option<u64>, n: Option<usize>) -> Result<Output> {
    let p = p.ok_or_else(|| Error::Format("chrom-card needs --p".into()))?;
    let n = n.unwrap_or(1);
    let x = input::build_groupoid(require(&doc.groupoid, "groupoid")?)?;
    let c = chromatic_cardinality(&x, p, n)?;
    if let Some(g) = as_delooping(doc) {
        let oracle = chromatic_cardinality_oracle(&g, p, n);
        if oracle != c {
            return Err(Error::TheoremViolation(format!(
                "loop count {} disagrees with commuting tuple count {}",
                format(&c),
                format(&oracle)
            )));
        }
    }
    let s = format(&c);
    Ok(Output::ok(
        s.clone(),
        json!({ "p": p, "n": n, "cardinality": s }),
    ))
}

/// Numeric flags shared by the subcommands.
#[derive(Clone, Copy, Debug)]
pub struct Flags {
    pub p: Option<u64>,
    pub h: Option<usize>,
    pub iso_bound: usize,
}

/// Runs the subcommand `name` on a parsed document.
pub fn run(name: &str, doc: &Document, flags: Flags) -> Result<Output> {
    match name {
        "cardinality" => cardinality_cmd(doc),
        "loop" => loop_cmd(doc, flags.p, flags.h, flags.iso_bound),
        "span" => span_cmd(doc),
        "norm-check" => norm_check_cmd(doc),
        "bc-check" => bc_check_cmd(doc),
        "induce-check" => induce_check_cmd(doc, flags.p),
        "chrom-card" => chrom_card_cmd(doc, flags.p, flags.h),
        other => Err(Error::Format(format!("unknown subcommand {other:?}"))),
    }
}
