//! Standard groupoids and maps between them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::group::{Elem, FiniteGroup};
use crate::grpd::groupoid::{FiniteGroupoid, MorId};
use crate::grpd::map::GroupoidMap;

pub fn point() -> FiniteGroupoid {
    discrete(1)
}

/// `n` objects and only identity morphisms.
pub fn discrete(n: usize) -> FiniteGroupoid {
    let objs: Vec<usize> = (0..n).collect();
    FiniteGroupoid::from_composition(n, objs.clone(), objs, |_, f| f).expect("discrete groupoid")
}

/// One object whose morphisms are the elements of `g`.
pub fn delooping(g: &FiniteGroup) -> FiniteGroupoid {
    let n = g.order();
    FiniteGroupoid::from_composition(1, vec![0; n], vec![0; n], |a, b| g.mul(a, b))
        .expect("delooping")
}

/// The action groupoid of `g` acting on `0..n_points`; morphism
/// `s * |g| + e` is `e: s -> e·s`.
pub fn action_groupoid<A>(g: &FiniteGroup, n_points: usize, action: A) -> Result<FiniteGroupoid>
where
    A: Fn(Elem, usize) -> usize,
{
    let n = g.order();
    let mut table = vec![0; n * n_points];
    for s in 0..n_points {
        for e in g.elements() {
            let t = action(e, s);
            if t >= n_points {
                return Err(Error::InvalidInput(format!(
                    "action sends point {s} to {t}, out of range"
                )));
            }
            table[e * n_points + s] = t;
        }
    }
    let act = |e: Elem, s: usize| table[e * n_points + s];
    for s in 0..n_points {
        if act(g.identity(), s) != s {
            return Err(Error::InvalidInput(format!(
                "identity does not fix point {s}"
            )));
        }
        for a in g.elements() {
            for b in g.elements() {
                if act(a, act(b, s)) != act(g.mul(a, b), s) {
                    return Err(Error::InvalidInput(format!(
                        "action is not compatible with multiplication at ({a}, {b}, {s})"
                    )));
                }
            }
        }
    }
    let src: Vec<usize> = (0..n * n_points).map(|f| f / n).collect();
    let tgt: Vec<usize> = (0..n * n_points).map(|f| act(f % n, f / n)).collect();
    FiniteGroupoid::from_composition(n_points, src, tgt, |h, f| (f / n) * n + g.mul(h % n, f % n))
}

/// `g` acting on itself by conjugation.
pub fn conjugation_groupoid(g: &FiniteGroup) -> FiniteGroupoid {
    action_groupoid(g, g.order(), |c, x| g.conjugate(c, x)).expect("conjugation is an action")
}

/// Disjoint union; objects and morphisms of later parts are offset.
pub fn disjoint_union(parts: &[&FiniteGroupoid]) -> FiniteGroupoid {
    let mut obj_off = Vec::with_capacity(parts.len());
    let mut mor_off = Vec::with_capacity(parts.len());
    let (mut no, mut nm) = (0, 0);
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut part_of = Vec::new();
    for (i, x) in parts.iter().enumerate() {
        obj_off.push(no);
        mor_off.push(nm);
        for f in 0..x.n_morphisms() {
            src.push(no + x.src(f));
            tgt.push(no + x.tgt(f));
            part_of.push(i);
        }
        no += x.n_objects();
        nm += x.n_morphisms();
    }
    FiniteGroupoid::from_composition(no, src, tgt, |g, f| {
        let i = part_of[f];
        mor_off[i] + parts[i].compose(g - mor_off[i], f - mor_off[i])
    })
    .expect("disjoint union of groupoids")
}

/// Inclusions of the summands into [`disjoint_union`].
pub fn union_inclusions(
    parts: &[Arc<FiniteGroupoid>],
    union: &Arc<FiniteGroupoid>,
) -> Vec<GroupoidMap> {
    let (mut no, mut nm) = (0, 0);
    let mut maps = Vec::new();
    for x in parts {
        let obj_map = (no..no + x.n_objects()).collect();
        let mor_map = (nm..nm + x.n_morphisms()).collect();
        maps.push(
            GroupoidMap::new(x.clone(), union.clone(), obj_map, mor_map)
                .expect("summand inclusion"),
        );
        no += x.n_objects();
        nm += x.n_morphisms();
    }
    maps
}

/// Product; object `(x, y)` is `x * |Y| + y`, morphism `(f, g)` is
/// `f * |Mor Y| + g`.
pub fn product(x: &FiniteGroupoid, y: &FiniteGroupoid) -> FiniteGroupoid {
    let (ny, my) = (y.n_objects(), y.n_morphisms());
    let m = x.n_morphisms() * my;
    let src = (0..m).map(|h| x.src(h / my) * ny + y.src(h % my)).collect();
    let tgt = (0..m).map(|h| x.tgt(h / my) * ny + y.tgt(h % my)).collect();
    FiniteGroupoid::from_composition(x.n_objects() * ny, src, tgt, |g, f| {
        x.compose(g / my, f / my) * my + y.compose(g % my, f % my)
    })
    .expect("product of groupoids")
}

/// Product of several groupoids, associated to the left.
pub fn product_all(parts: &[&FiniteGroupoid]) -> FiniteGroupoid {
    parts.iter().fold(point(), |acc, x| product(&acc, x))
}

/// The two projections out of `product(x, y)`.
pub fn product_projections(
    x: &Arc<FiniteGroupoid>,
    y: &Arc<FiniteGroupoid>,
    xy: &Arc<FiniteGroupoid>,
) -> (GroupoidMap, GroupoidMap) {
    let (ny, my) = (y.n_objects(), y.n_morphisms());
    let p1 = GroupoidMap::new(
        xy.clone(),
        x.clone(),
        (0..xy.n_objects()).map(|o| o / ny).collect(),
        (0..xy.n_morphisms()).map(|h| h / my).collect(),
    )
    .expect("first projection");
    let p2 = GroupoidMap::new(
        xy.clone(),
        y.clone(),
        (0..xy.n_objects()).map(|o| o % ny).collect(),
        (0..xy.n_morphisms()).map(|h| h % my).collect(),
    )
    .expect("second projection");
    (p1, p2)
}

/// The map into `product(f.target, g.target)` with components `f` and `g`.
pub fn pairing(
    f: &GroupoidMap,
    g: &GroupoidMap,
    target: Arc<FiniteGroupoid>,
) -> Result<GroupoidMap> {
    if f.source() != g.source() {
        return Err(Error::Composition("pairing needs a common source".into()));
    }
    let (ny, my) = (g.target().n_objects(), g.target().n_morphisms());
    let x = f.source();
    GroupoidMap::new(
        x.clone(),
        target,
        (0..x.n_objects())
            .map(|o| f.obj(o) * ny + g.obj(o))
            .collect(),
        (0..x.n_morphisms())
            .map(|h| f.mor(h) * my + g.mor(h))
            .collect(),
    )
}

/// The diagonal `X -> X × X` into a product built by [`product`].
pub fn diagonal(x: &Arc<FiniteGroupoid>, xx: Arc<FiniteGroupoid>) -> GroupoidMap {
    let id = GroupoidMap::identity(x.clone());
    pairing(&id, &id, xx).expect("diagonal")
}

/// The full subgroupoid on `objects` (taken in increasing order), with its
/// inclusion. Morphisms keep their relative id order.
pub fn full_subgroupoid(
    x: &Arc<FiniteGroupoid>,
    objects: &[usize],
) -> Result<(Arc<FiniteGroupoid>, GroupoidMap)> {
    let mut objs = objects.to_vec();
    objs.sort_unstable();
    objs.dedup();
    if let Some(&o) = objs.iter().find(|&&o| o >= x.n_objects()) {
        return Err(Error::Index(format!(
            "object {o} out of range 0..{}",
            x.n_objects()
        )));
    }
    let mut new_obj = vec![usize::MAX; x.n_objects()];
    for (i, &o) in objs.iter().enumerate() {
        new_obj[o] = i;
    }
    let kept: Vec<MorId> = (0..x.n_morphisms())
        .filter(|&f| new_obj[x.src(f)] != usize::MAX && new_obj[x.tgt(f)] != usize::MAX)
        .collect();
    let mut new_mor = vec![usize::MAX; x.n_morphisms()];
    for (i, &f) in kept.iter().enumerate() {
        new_mor[f] = i;
    }
    let sub = FiniteGroupoid::from_composition(
        objs.len(),
        kept.iter().map(|&f| new_obj[x.src(f)]).collect(),
        kept.iter().map(|&f| new_obj[x.tgt(f)]).collect(),
        |g, f| new_mor[x.compose(kept[g], kept[f])],
    )?;
    let sub = Arc::new(sub);
    let incl = GroupoidMap::new(sub.clone(), x.clone(), objs, kept)?;
    Ok((sub, incl))
}

/// The map `BG -> BH` of a group homomorphism given by its image table.
pub fn delooping_map(
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
    images: Vec<Elem>,
) -> Result<GroupoidMap> {
    if source.n_objects() != 1 || target.n_objects() != 1 {
        return Err(Error::InvalidInput(
            "delooping maps need one-object groupoids".into(),
        ));
    }
    GroupoidMap::new(source, target, vec![0], images)
}

/// Product of two maps, between products built by [`product`].
pub fn product_map(
    f: &GroupoidMap,
    g: &GroupoidMap,
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
) -> Result<GroupoidMap> {
    let (sy, ty) = (g.source(), g.target());
    let obj_map = (0..source.n_objects())
        .map(|o| f.obj(o / sy.n_objects()) * ty.n_objects() + g.obj(o % sy.n_objects()))
        .collect();
    let mor_map = (0..source.n_morphisms())
        .map(|h| f.mor(h / sy.n_morphisms()) * ty.n_morphisms() + g.mor(h % sy.n_morphisms()))
        .collect();
    GroupoidMap::new(source, target, obj_map, mor_map)
}

/// Disjoint union of maps, between unions built by [`disjoint_union`].
pub fn union_map(
    parts: &[&GroupoidMap],
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
) -> Result<GroupoidMap> {
    let mut obj_map = Vec::with_capacity(source.n_objects());
    let mut mor_map = Vec::with_capacity(source.n_morphisms());
    let (mut to, mut tm) = (0, 0);
    for f in parts {
        obj_map.extend(f.obj_map().iter().map(|&y| y + to));
        mor_map.extend(f.mor_map().iter().map(|&g| g + tm));
        to += f.target().n_objects();
        tm += f.target().n_morphisms();
    }
    GroupoidMap::new(source, target, obj_map, mor_map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    #[test]
    fn delooping_shapes() {
        let t = delooping(&FiniteGroup::trivial());
        assert_eq!((t.n_objects(), t.n_morphisms()), (1, 1));
        let c2 = delooping(&FiniteGroup::cyclic(2));
        assert_eq!((c2.n_objects(), c2.n_morphisms()), (1, 2));
        let s3 = FiniteGroup::symmetric(3);
        let bs3 = delooping(&s3);
        assert_eq!(bs3.n_morphisms(), 6);
        for a in s3.elements() {
            for b in s3.elements() {
                assert_eq!(bs3.compose(a, b), s3.mul(a, b));
            }
        }
        assert_eq!(bs3.cardinality(), rational::ratio(1, 6));
    }

    #[test]
    fn action_groupoids() {
        let triv = action_groupoid(&FiniteGroup::trivial(), 3, |_, s| s).unwrap();
        assert!(triv.is_discrete());
        assert_eq!(triv.n_objects(), 3);
        let c2 = FiniteGroup::cyclic(2);
        let tr = action_groupoid(&c2, 2, |g, s| c2.mul(g, s)).unwrap();
        assert!(tr.is_connected());
        assert_eq!(tr.cardinality(), rational::one());
        let s3 = FiniteGroup::symmetric(3);
        let conj = conjugation_groupoid(&s3);
        let mut orders: Vec<usize> = (0..conj.n_components())
            .map(|c| conj.aut_group(c).order())
            .collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3, 6]);
        assert_eq!(conj.cardinality(), rational::one());
        // right multiplication is not a left action of a nonabelian group
        assert!(matches!(
            action_groupoid(&s3, 6, |g, s| s3.mul(s, g)),
            Err(Error::InvalidInput(_))
        ));
        assert!(action_groupoid(&c2, 2, |_, _| 5).is_err());
    }

    #[test]
    fn products_and_unions() {
        let c2 = FiniteGroup::cyclic(2);
        let bc2 = delooping(&c2);
        let sq = product(&bc2, &bc2);
        assert_eq!((sq.n_objects(), sq.n_morphisms()), (1, 4));
        let v4 = FiniteGroup::direct_product(&c2, &c2);
        assert_eq!(sq.aut_group(0).table(), v4.table());
        let d3 = discrete(3);
        assert_eq!(product(&bc2, &d3).cardinality(), rational::ratio(3, 2));
        let x = product(&d3, &point());
        assert_eq!((x.n_objects(), x.n_morphisms()), (3, 3));
        let u = disjoint_union(&[&bc2, &delooping(&FiniteGroup::cyclic(3))]);
        let sk = u.skeleton();
        let orders: Vec<usize> = sk
            .components
            .iter()
            .map(|c| c.automorphisms.order())
            .collect();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(u.cardinality(), rational::ratio(5, 6));
    }

    #[test]
    fn discrete_skeleton() {
        let d = discrete(4);
        let sk = d.skeleton();
        assert_eq!(sk.components.len(), 4);
        assert!(sk.components.iter().all(|c| c.automorphisms.order() == 1));
        assert_eq!(d.cardinality(), rational::int(4));
    }

    #[test]
    fn subgroupoids_and_maps() {
        let s3 = FiniteGroup::symmetric(3);
        let conj = Arc::new(conjugation_groupoid(&s3));
        let (sub, incl) = full_subgroupoid(&conj, &[0, 1]).unwrap();
        assert_eq!(sub.n_objects(), 2);
        assert_eq!(incl.target().n_objects(), 6);
        let bc2 = Arc::new(delooping(&FiniteGroup::cyclic(2)));
        let bs3 = Arc::new(delooping(&s3));
        // a transposition of S_3
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let f = delooping_map(bc2.clone(), bs3.clone(), vec![0, t]).unwrap();
        assert!(f.is_injective_on_morphisms());
        // not a homomorphism
        let r = s3.elements().find(|&g| s3.element_order(g) == 3).unwrap();
        assert!(delooping_map(bc2, bs3, vec![0, r]).is_err());
    }
}
