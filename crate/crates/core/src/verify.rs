//! Whole-suite checks, shared by the `suite` subcommand and the acceptance
//! target. Each check runs every case and collects failures instead of
//! stopping at the first one.

use std::sync::Arc;

use crate::characters::{
    chromatic_cardinality, chromatic_cardinality_oracle, p_typical_character_square,
    verify_induction_square,
};
use crate::error::Result;
use crate::grpd::{cardinality, conjugation_groupoid, delooping, FiniteGroup};
use crate::linsys::{beck_chevalley_shriek, beck_chevalley_star, cardinality_linear, check_norm};
use crate::loops::free_loop;
use crate::rational::{self, format, Rational};
use crate::spans::{linearize, span_compose};
use crate::suite;

/// Number of random span pairs checked for functoriality.
pub const SPAN_PAIRS: usize = 120;

/// Outcome of one suite check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: impl FnOnce() -> String, outcome: Result<bool>) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(name()),
            Err(e) => self.failures.push(format!("{}: {e}", name())),
        }
    }

    fn expect_eq(&mut self, name: impl FnOnce() -> String, got: Result<Rational>, want: &Rational) {
        self.cases += 1;
        match got {
            Ok(q) if &q == want => {}
            Ok(q) => self.failures.push(format!(
                "{}: got {}, expected {}",
                name(),
                format(&q),
                format(want)
            )),
            Err(e) => self.failures.push(format!("{}: {e}", name())),
        }
    }
}

fn new_report() -> CheckReport {
    CheckReport {
        cases: 0,
        failures: Vec::new(),
    }
}

/// `|BG| = 1/|G|` for the suite groups, `|S3//S3| = 1`, and `|LX|` equal
/// to the number of components of `X` on the groupoid suite.
pub fn cardinalities_and_free_loops() -> CheckReport {
    let mut r = new_report();
    for (name, g) in suite::groups() {
        r.expect_eq(
            || format!("|B{name}|"),
            Ok(cardinality(&delooping(&g))),
            &rational::ratio(1, g.order() as i64),
        );
    }
    let s3 = FiniteGroup::symmetric(3);
    r.expect_eq(
        || "|S3//S3|".into(),
        Ok(cardinality(&conjugation_groupoid(&s3))),
        &rational::one(),
    );
    for (name, x) in suite::groupoids() {
        let l = free_loop(&x);
        r.expect_eq(
            || format!("|L {name}|"),
            Ok(l.underlying.cardinality()),
            &rational::from_usize(x.n_components()),
        );
    }
    r
}

/// `linearize(s2 ∘ s1) = linearize(s2) · linearize(s1)` on random pairs.
pub fn span_functoriality(n: usize) -> CheckReport {
    let mut r = new_report();
    for (i, (s1, s2)) in suite::random_span_pairs(suite::SPAN_SEED, n)
        .iter()
        .enumerate()
    {
        let outcome =
            (|| Ok(linearize(&span_compose(s1, s2)?)? == linearize(s2)?.mul(&linearize(s1)?)))();
        r.record(|| format!("span pair {i}"), outcome);
    }
    r
}

/// Structural norm and dualizing comparison invertible, and the norm equal
/// to the direct one, on every map case.
pub fn norm_engine() -> CheckReport {
    let mut r = new_report();
    for case in suite::map_cases() {
        let outcome = (|| {
            let c = check_norm(&case.map, &case.system()?)?;
            Ok(c.structural_invertible && c.dualizing_invertible && c.agrees_with_direct)
        })();
        r.record(|| case.name.clone(), outcome);
    }
    r
}

/// Both Beck-Chevalley maps invertible on every square case.
pub fn beck_chevalley() -> CheckReport {
    let mut r = new_report();
    for case in suite::square_cases() {
        let outcome = (|| {
            let sys = case.system()?;
            Ok(beck_chevalley_shriek(&case.square, &sys)?.invertible
                && beck_chevalley_star(&case.square, &sys)?.invertible)
        })();
        r.record(|| case.name.clone(), outcome);
    }
    r
}

/// The induction square, and its p-typical version for each prime in
/// `primes`, on every induction case.
pub fn induction_squares(primes: &[u64]) -> CheckReport {
    let mut r = new_report();
    for case in suite::induction_cases() {
        r.record(
            || case.name.clone(),
            verify_induction_square(&case.inclusion, &case.rep).map(|x| x.holds),
        );
        for &p in primes {
            let outcome =
                p_typical_character_square(&case.inclusion, &case.rep, p).map(|x| x.holds);
            r.record(|| format!("{} p={p}", case.name), outcome);
        }
    }
    r
}

/// Chromatic cardinalities of the suite deloopings against the tuple-count
/// oracle for `p ∈ {2, 3, 5}` and `n ≤ 3`, the `BC_p` and `BS3` goldens,
/// and p-locality at positive height.
pub fn chromatic() -> CheckReport {
    let mut r = new_report();
    for (name, g) in suite::groups() {
        let bg = Arc::new(delooping(&g));
        for p in [2u64, 3, 5] {
            for n in 0..=3 {
                let got = chromatic_cardinality(&bg, p, n);
                if n > 0 {
                    if let Ok(q) = &got {
                        r.record(
                            || format!("B{name} p={p} n={n} is {p}-local"),
                            Ok(rational::is_p_local_integer(q, p)),
                        );
                    }
                }
                r.expect_eq(
                    || format!("B{name} p={p} n={n}"),
                    got,
                    &chromatic_cardinality_oracle(&g, p, n),
                );
            }
        }
    }
    for p in [2u64, 3, 5] {
        let bc = Arc::new(delooping(&FiniteGroup::cyclic(p as usize)));
        for n in 1..=3u32 {
            let want = rational::int((p as i64).pow(n - 1));
            r.expect_eq(
                || format!("|BC{p}| at height {n}"),
                chromatic_cardinality(&bc, p, n as usize),
                &want,
            );
        }
    }
    let bs3 = Arc::new(delooping(&FiniteGroup::symmetric(3)));
    r.expect_eq(
        || "|BS3| p=2 n=1".into(),
        chromatic_cardinality(&bs3, 2, 1),
        &rational::ratio(2, 3),
    );
    r.expect_eq(
        || "|BS3| p=2 n=2".into(),
        chromatic_cardinality(&bs3, 2, 2),
        &rational::ratio(5, 3),
    );
    r
}

/// Cardinality through the norm equal to the combinatorial one on the
/// groupoid suite.
pub fn linear_cardinality() -> CheckReport {
    let mut r = new_report();
    for (name, x) in suite::groupoids() {
        r.expect_eq(|| name.clone(), cardinality_linear(&x), &cardinality(&x));
    }
    r
}
