use std::sync::Arc;

use fingrpd::grpd::{
    cardinality, delooping, disjoint_union, equivalence_check, homotopy_pullback, product,
    FiniteGroupoid, MorId,
};
use fingrpd::loops::{
    commuting_tuples_direct, free_loop, free_loop_map, iterated_p_free_loop, p_free_loop,
    PAdicLoopParams,
};
use fingrpd::rational;
use fingrpd::suite;

#[test]
fn free_loop_cardinality_counts_components() {
    for (name, x) in suite::groupoids() {
        let l = free_loop(&x);
        assert_eq!(
            cardinality(&l.underlying),
            rational::from_usize(x.n_components()),
            "{name}"
        );
    }
}

#[test]
fn iterated_loops_match_commuting_tuples() {
    for (name, g) in suite::groups() {
        let bg = Arc::new(delooping(&g));
        for p in [2, 3] {
            for h in 0..=3 {
                let params = PAdicLoopParams::new(p, h).unwrap();
                let it = iterated_p_free_loop(&bg, params).unwrap();
                let direct = commuting_tuples_direct(&g, params).unwrap();
                assert!(
                    equivalence_check(&it, &direct).unwrap(),
                    "{name} p={p} h={h}"
                );
            }
        }
    }
}

fn small(x: &FiniteGroupoid) -> bool {
    x.n_morphisms() <= 16
}

#[test]
fn p_loops_commute_with_sums_and_products() {
    let pool: Vec<_> = suite::groupoids()
        .into_iter()
        .filter(|(_, x)| small(x))
        .collect();
    for (i, (_, x)) in pool.iter().enumerate().step_by(3) {
        for (_, y) in pool.iter().skip(i).step_by(4) {
            for p in [2, 3] {
                let sum = Arc::new(disjoint_union(&[x, y]));
                let lhs = p_free_loop(&sum, p).unwrap().underlying;
                let (lx, ly) = (
                    p_free_loop(x, p).unwrap().underlying,
                    p_free_loop(y, p).unwrap().underlying,
                );
                assert!(equivalence_check(&lhs, &disjoint_union(&[&lx, &ly])).unwrap());
                let prod = Arc::new(product(x, y));
                let lhs = p_free_loop(&prod, p).unwrap().underlying;
                assert!(equivalence_check(&lhs, &product(&lx, &ly)).unwrap());
            }
        }
    }
}

#[test]
fn loops_preserve_pullback_squares() {
    for case in suite::square_cases()
        .into_iter()
        .filter(|c| c.square.groupoid.n_morphisms() <= 200)
    {
        let sq = &case.square;
        let lp = free_loop(&sq.groupoid);
        let (_, _, la) = free_loop_map(&sq.proj_left).unwrap();
        let (_, _, lb) = free_loop_map(&sq.proj_right).unwrap();
        let (_, ly, lf) = free_loop_map(&sq.left).unwrap();
        let (_, _, lg) = free_loop_map(&sq.right).unwrap();
        let target = homotopy_pullback(&lf, &lg).unwrap();
        let y = sq.left.target();
        // the connecting morphism of the square, as a morphism of L Y
        let theta: Vec<MorId> = lp
            .objects
            .iter()
            .enumerate()
            .map(|(o, &(w, _))| ly.underlying.out(lf.obj(la.obj(o)))[y.out_pos(sq.connecting(w))])
            .collect();
        let comparison = target.induced_map(&la, &lb, &theta).unwrap();
        assert!(comparison.is_equivalence(), "{}", case.name);
    }
}
