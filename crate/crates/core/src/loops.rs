//! Free loop groupoids and their p-adic variants.
//!
//! The free loop groupoid of `X` has objects `(x, g)` with `g` an
//! automorphism of `x`, and morphisms `α: (x, g) -> (x', α g α⁻¹)`. The
//! p-adic version keeps the loops of p-power order; iterating it `h` times
//! models maps out of `B Z_p^h`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::group::{is_prime, FiniteGroup};
use crate::grpd::{action_groupoid, FiniteGroupoid, GroupoidMap, MorId};

#[derive(Clone, Debug)]
pub struct LoopGroupoid {
    pub underlying: Arc<FiniteGroupoid>,
    /// `(x, g)` per object.
    pub objects: Vec<(usize, MorId)>,
    pub base_projection: GroupoidMap,
}

impl LoopGroupoid {
    pub fn object_index(&self, x: usize, g: MorId) -> Option<usize> {
        self.objects.iter().position(|&o| o == (x, g))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PAdicLoopParams {
    pub p: u64,
    pub h: usize,
}

impl PAdicLoopParams {
    pub fn new(p: u64, h: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(PAdicLoopParams { p, h })
    }
}

fn order_of_loop(x: &FiniteGroupoid, g: MorId) -> usize {
    x.aut_group(x.component_of(x.src(g)))
        .element_order(x.slot(g))
}

fn is_p_power(mut n: usize, p: u64) -> bool {
    let p = p as usize;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Loop groupoid on the loops accepted by `keep`.
fn loop_groupoid_where(
    x: &Arc<FiniteGroupoid>,
    keep: impl Fn(MorId) -> bool,
) -> Result<LoopGroupoid> {
    let mut objects = Vec::new();
    let mut index: HashMap<(usize, MorId), usize> = HashMap::new();
    for a in 0..x.n_objects() {
        for g in x.automorphisms(a) {
            if keep(g) {
                index.insert((a, g), objects.len());
                objects.push((a, g));
            }
        }
    }
    let mut offset = Vec::with_capacity(objects.len());
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut base = Vec::new();
    for (o, &(a, g)) in objects.iter().enumerate() {
        offset.push(src.len());
        for &alpha in x.out(a) {
            let conj = x.compose(alpha, x.compose(g, x.inverse(alpha)));
            src.push(o);
            tgt.push(index[&(x.tgt(alpha), conj)]);
            base.push(alpha);
        }
    }
    let underlying =
        FiniteGroupoid::from_composition(objects.len(), src.clone(), tgt, |m2, m1| {
            offset[src[m1]] + x.out_pos(x.compose(base[m2], base[m1]))
        })?;
    let underlying = Arc::new(underlying);
    let base_projection = GroupoidMap::new(
        underlying.clone(),
        x.clone(),
        objects.iter().map(|o| o.0).collect(),
        base,
    )?;
    Ok(LoopGroupoid {
        underlying,
        objects,
        base_projection,
    })
}

/// The free loop groupoid.
pub fn free_loop(x: &Arc<FiniteGroupoid>) -> LoopGroupoid {
    loop_groupoid_where(x, |_| true).expect("free loop groupoid")
}

/// The full subgroupoid of the free loop groupoid on loops of p-power order.
pub fn p_free_loop(x: &Arc<FiniteGroupoid>, p: u64) -> Result<LoopGroupoid> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    loop_groupoid_where(x, |g| is_p_power(order_of_loop(x, g), p))
}

/// `h`-fold iterate of [`p_free_loop`]; `h = 0` returns `x`.
pub fn iterated_p_free_loop(
    x: &Arc<FiniteGroupoid>,
    params: PAdicLoopParams,
) -> Result<Arc<FiniteGroupoid>> {
    let mut cur = x.clone();
    for _ in 0..params.h {
        cur = p_free_loop(&cur, params.p)?.underlying;
    }
    Ok(cur)
}

/// The functor induced by `f` between p-adic free loop groupoids.
fn p_loop_map_once(f: &GroupoidMap, lx: &LoopGroupoid, ly: &LoopGroupoid) -> Result<GroupoidMap> {
    let y = f.target();
    let index: HashMap<(usize, MorId), usize> = ly
        .objects
        .iter()
        .enumerate()
        .map(|(i, &o)| (o, i))
        .collect();
    let obj_map: Vec<usize> = lx
        .objects
        .iter()
        .map(|&(a, g)| index[&(f.obj(a), f.mor(g))])
        .collect();
    let src_l = &lx.underlying;
    let tgt_l = &ly.underlying;
    let mor_map = (0..src_l.n_morphisms())
        .map(|m| {
            let alpha = f.mor(lx.base_projection.mor(m));
            tgt_l.out(obj_map[src_l.src(m)])[y.out_pos(alpha)]
        })
        .collect();
    GroupoidMap::new(src_l.clone(), tgt_l.clone(), obj_map, mor_map)
}

/// The map induced by `f` on `h`-fold p-adic free loop groupoids. Source
/// and target are freshly built, so they equal (but are not shared with)
/// the results of [`iterated_p_free_loop`].
pub fn loop_map(f: &GroupoidMap, params: PAdicLoopParams) -> Result<GroupoidMap> {
    let mut cur = f.clone();
    for _ in 0..params.h {
        let lx = p_free_loop(cur.source(), params.p)?;
        let ly = p_free_loop(cur.target(), params.p)?;
        cur = p_loop_map_once(&cur, &lx, &ly)?;
    }
    Ok(cur)
}

/// The map induced by `f` on free loop groupoids (no order restriction).
pub fn free_loop_map(f: &GroupoidMap) -> Result<(LoopGroupoid, LoopGroupoid, GroupoidMap)> {
    let lx = free_loop(f.source());
    let ly = free_loop(f.target());
    let m = p_loop_map_once(f, &lx, &ly)?;
    Ok((lx, ly, m))
}

/// Commuting `h`-tuples of p-power-order elements of `g`, lexicographically
/// ordered.
pub fn commuting_p_tuples(g: &FiniteGroup, params: PAdicLoopParams) -> Vec<Vec<usize>> {
    let elems: Vec<usize> = g
        .elements()
        .filter(|&e| g.is_p_power_order(e, params.p))
        .collect();
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..params.h {
        let mut next = Vec::new();
        for t in &tuples {
            for &e in &elems {
                if t.iter().all(|&a| g.commutes(a, e)) {
                    let mut u = t.clone();
                    u.push(e);
                    next.push(u);
                }
            }
        }
        tuples = next;
    }
    tuples
}

/// `g` acting by simultaneous conjugation on commuting `h`-tuples of
/// p-power-order elements, built in one step.
pub fn commuting_tuples_direct(g: &FiniteGroup, params: PAdicLoopParams) -> Result<FiniteGroupoid> {
    let tuples = commuting_p_tuples(g, params);
    let index: HashMap<&[usize], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    action_groupoid(g, tuples.len(), |c, s| {
        let conj: Vec<usize> = tuples[s].iter().map(|&a| g.conjugate(c, a)).collect();
        index[conj.as_slice()]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::{delooping, discrete, equivalence_check};
    use crate::rational;

    fn b(g: &FiniteGroup) -> Arc<FiniteGroupoid> {
        Arc::new(delooping(g))
    }

    #[test]
    fn free_loops_of_small_groupoids() {
        let d = Arc::new(discrete(3));
        let l = free_loop(&d);
        assert!(l.underlying.is_discrete());
        assert_eq!(l.underlying.n_objects(), 3);
        let s3 = FiniteGroup::symmetric(3);
        let l = free_loop(&b(&s3));
        assert_eq!(l.underlying.cardinality(), rational::one());
        let conj = crate::grpd::conjugation_groupoid(&s3);
        assert_eq!(*l.underlying, conj);
    }

    #[test]
    fn p_adic_loops() {
        let c3 = FiniteGroup::cyclic(3);
        let l = p_free_loop(&b(&c3), 2).unwrap();
        assert!(equivalence_check(&l.underlying, &delooping(&c3)).unwrap());
        let l = p_free_loop(&b(&FiniteGroup::cyclic(2)), 2).unwrap();
        assert_eq!(l.underlying.n_objects(), 2);
        assert_eq!(l.underlying.cardinality(), rational::one());
        let l = p_free_loop(&b(&FiniteGroup::symmetric(3)), 2).unwrap();
        assert_eq!(l.underlying.cardinality(), rational::ratio(2, 3));
        assert!(p_free_loop(&b(&c3), 4).is_err());
    }

    #[test]
    fn iterated_matches_tuple_counts() {
        let s3 = FiniteGroup::symmetric(3);
        let params = PAdicLoopParams::new(2, 2).unwrap();
        let it = iterated_p_free_loop(&b(&s3), params).unwrap();
        assert_eq!(it.cardinality(), rational::ratio(5, 3));
        let direct = commuting_tuples_direct(&s3, params).unwrap();
        assert_eq!(direct.n_objects(), 10);
        assert!(equivalence_check(&it, &direct).unwrap());
        let c3 = FiniteGroup::cyclic(3);
        let d = commuting_tuples_direct(&c3, PAdicLoopParams::new(3, 2).unwrap()).unwrap();
        assert_eq!(d.n_objects(), 9);
        assert_eq!(d.cardinality(), rational::int(3));
        let x = b(&c3);
        assert_eq!(
            *iterated_p_free_loop(&x, PAdicLoopParams::new(3, 0).unwrap()).unwrap(),
            *x
        );
    }

    #[test]
    fn loop_map_of_subgroup_inclusion() {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let f = crate::grpd::delooping_map(b(&FiniteGroup::cyclic(2)), b(&s3), vec![0, t]).unwrap();
        let lf = loop_map(&f, PAdicLoopParams::new(2, 1).unwrap()).unwrap();
        assert_eq!(lf.source().n_objects(), 2);
        assert_eq!(lf.obj(0), 0);
        // (pt, generator) goes to (pt, t)
        let ly = p_free_loop(&b(&s3), 2).unwrap();
        assert_eq!(ly.objects[lf.obj(1)], (0, t));
        for y in 0..lf.target().n_objects() {
            let fib = crate::grpd::homotopy_fiber(&lf, y).unwrap();
            let g = &fib.groupoid;
            assert!((0..g.n_components()).all(|c| g.aut_group(c).order() == 1));
        }
        let id = GroupoidMap::identity(b(&s3));
        let lid = loop_map(&id, PAdicLoopParams::new(3, 2).unwrap()).unwrap();
        assert_eq!(
            lid.obj_map(),
            GroupoidMap::identity(lid.source().clone()).obj_map()
        );
        assert_eq!(
            lid.mor_map(),
            GroupoidMap::identity(lid.source().clone()).mor_map()
        );
    }
}
