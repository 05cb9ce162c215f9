use std::sync::{Arc, OnceLock};

use fingrpd::grpd::{
    cardinality, delooping, delooping_map, homotopy_fiber, FiniteGroup, GroupoidMap,
};
use fingrpd::rational::{self, Rational};
use fingrpd::spans::{
    integrate, linearize, restrict, span_compose, span_from_map_bwd, span_from_map_fwd,
    span_identity, ClassFunction,
};
use fingrpd::suite;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn linearization_is_functorial(seed in any::<u64>()) {
        for (s1, s2) in suite::random_span_pairs(seed, 2) {
            let comp = span_compose(&s1, &s2).unwrap();
            prop_assert_eq!(linearize(&comp).unwrap(), linearize(&s2).unwrap().mul(&linearize(&s1).unwrap()));
        }
    }

    #[test]
    fn identity_spans_are_units(seed in any::<u64>()) {
        let (s, _) = suite::random_span_pairs(seed, 1).pop().unwrap();
        let id = span_identity(&s.left_foot);
        prop_assert_eq!(linearize(&span_compose(&id, &s).unwrap()).unwrap(), linearize(&s).unwrap());
    }
}

fn maps() -> &'static [GroupoidMap] {
    static MAPS: OnceLock<Vec<GroupoidMap>> = OnceLock::new();
    MAPS.get_or_init(|| {
        suite::map_cases()
            .into_iter()
            .step_by(3)
            .map(|c| c.map)
            .collect()
    })
}

fn sample_function(x: &Arc<fingrpd::grpd::FiniteGroupoid>, salt: i64) -> ClassFunction {
    let values = (0..x.n_components())
        .map(|c| rational::ratio(c as i64 * 3 - 2 + salt, 1 + (c as i64 % 3)))
        .collect();
    ClassFunction::new(x.clone(), values).unwrap()
}

#[test]
fn integration_composes() {
    // inclusions H <= K <= G of subgroups of S4
    let g = FiniteGroup::symmetric(4);
    let bg = Arc::new(delooping(&g));
    let subs = g.subgroups();
    for k in subs.iter().step_by(3) {
        let (kg, ke) = g.restrict_to(k).unwrap();
        let bk = Arc::new(delooping(&kg));
        let fkg = delooping_map(bk.clone(), bg.clone(), ke.clone()).unwrap();
        for h in subs.iter().filter(|h| h.iter().all(|e| k.contains(e))) {
            let (hg, he) = g.restrict_to(h).unwrap();
            let in_k: Vec<usize> = he.iter().map(|e| k.binary_search(e).unwrap()).collect();
            let fhk = delooping_map(Arc::new(delooping(&hg)), bk.clone(), in_k).unwrap();
            let fhg = fhk.then(&fkg).unwrap();
            let phi = sample_function(fhk.source(), 1);
            let two_step = integrate(&fkg, &integrate(&fhk, &phi).unwrap()).unwrap();
            assert_eq!(two_step.values, integrate(&fhg, &phi).unwrap().values);
        }
    }
}

#[test]
fn projection_formula() {
    for f in maps() {
        let phi = sample_function(f.source(), 2);
        let psi = sample_function(f.target(), -1);
        let lhs = integrate(f, &restrict(f, &psi).unwrap().mul(&phi).unwrap()).unwrap();
        let rhs = psi.mul(&integrate(f, &phi).unwrap()).unwrap();
        assert_eq!(lhs.values, rhs.values);
    }
}

#[test]
fn integrals_do_not_depend_on_the_object() {
    for f in maps() {
        let y = f.target();
        for c in 0..y.n_components() {
            let weights: Vec<Vec<Rational>> = y
                .component_members(c)
                .iter()
                .map(|&o| {
                    let fib = homotopy_fiber(f, o).unwrap();
                    let mut row = vec![rational::zero(); f.source().n_components()];
                    for k in 0..fib.groupoid.n_components() {
                        let w = fib.groupoid.representative(k);
                        row[f.source().component_of(fib.objects[w].0)] +=
                            rational::ratio(1, fib.groupoid.aut_group(k).order() as i64);
                    }
                    row
                })
                .collect();
            assert!(weights.windows(2).all(|w| w[0] == w[1]));
        }
    }
}

#[test]
fn integration_along_subgroups_matches_induction_formula() {
    // (∫ φ)(g) = 1/|H| Σ_{s ∈ G, s⁻¹gs ∈ H} φ(s⁻¹gs) on L BH -> L BG
    let g = FiniteGroup::dihedral(4);
    let bg = Arc::new(delooping(&g));
    for sub in g.subgroups() {
        let (hg, he) = g.restrict_to(&sub).unwrap();
        let f = delooping_map(Arc::new(delooping(&hg)), bg.clone(), he.clone()).unwrap();
        let (lh, lg, lf) = fingrpd::loops::free_loop_map(&f).unwrap();
        let phi = sample_function(&lh.underlying, 0);
        let value_at = |h: usize| {
            phi.at_object(lh.objects.iter().position(|&(_, m)| m == h).unwrap())
                .clone()
        };
        let got = integrate(&lf, &phi).unwrap();
        for (o, &(_, x)) in lg.objects.iter().enumerate() {
            let mut sum = rational::zero();
            for s in g.elements() {
                let c = g.mul(g.inv(s), g.mul(x, s));
                if let Ok(i) = sub.binary_search(&c) {
                    sum += value_at(i);
                }
            }
            assert_eq!(*got.at_object(o), sum / rational::from_usize(sub.len()));
        }
    }
}

#[test]
fn golden_spans() {
    let pt = Arc::new(fingrpd::grpd::point());
    let g = FiniteGroup::symmetric(3);
    let bg = Arc::new(delooping(&g));
    let to_pt = GroupoidMap::to_point(bg.clone(), pt.clone()).unwrap();
    // pt <- BG -> pt is the cardinality
    let card = fingrpd::spans::Span::new(to_pt.clone(), to_pt.clone()).unwrap();
    assert_eq!(linearize(&card).unwrap().get(0, 0), &cardinality(&bg));
    // (pt <- pt -> BG) then (BG <- pt -> pt) is |G|
    let incl = GroupoidMap::point_inclusion(pt.clone(), bg.clone(), 0).unwrap();
    let comp = span_compose(&span_from_map_fwd(&incl), &span_from_map_bwd(&incl)).unwrap();
    assert_eq!(linearize(&comp).unwrap().get(0, 0), &rational::int(6));
}
