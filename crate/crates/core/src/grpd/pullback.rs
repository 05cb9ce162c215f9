//! Homotopy pullbacks (iso-comma groupoids) and homotopy fibers.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::constructions::point;
use crate::grpd::groupoid::{FiniteGroupoid, MorId};
use crate::grpd::map::GroupoidMap;

/// The groupoid of triples `(x, y, φ: f x -> g y)`.
///
/// Objects are ordered by `x`, then `y`, then the id of `φ`. A morphism
/// `(α, β)` out of `(x, y, φ)` goes to `(x', y', g(β) ∘ φ ∘ f(α)⁻¹)` and has
/// id `offset(x, y, φ) + pos(α) * |out(y)| + pos(β)`, where `pos` is the
/// position in the out-list.
#[derive(Clone, Debug)]
pub struct HomotopyPullback {
    pub groupoid: Arc<FiniteGroupoid>,
    /// `(x, y, φ)` per object.
    pub objects: Vec<(usize, usize, MorId)>,
    /// `(α, β)` per morphism.
    pub morphisms: Vec<(MorId, MorId)>,
    pub proj_left: GroupoidMap,
    pub proj_right: GroupoidMap,
    pub left: GroupoidMap,
    pub right: GroupoidMap,
    offsets: Vec<usize>,
    index: HashMap<(usize, usize, MorId), usize>,
}

impl HomotopyPullback {
    /// The connecting isomorphism `f(p1 o) -> g(p2 o)` at object `o`.
    pub fn connecting(&self, o: usize) -> MorId {
        self.objects[o].2
    }

    /// Object with the given triple, if present.
    pub fn object_index(&self, x: usize, y: usize, phi: MorId) -> Option<usize> {
        self.index.get(&(x, y, phi)).copied()
    }

    /// The map `W -> X ×_Z Y` induced by `a: W -> X`, `b: W -> Y` and
    /// isomorphisms `theta[w]: f(a w) -> g(b w)` natural in `w`.
    pub fn induced_map(
        &self,
        a: &GroupoidMap,
        b: &GroupoidMap,
        theta: &[MorId],
    ) -> Result<GroupoidMap> {
        let w = a.source();
        if !Arc::ptr_eq(w, b.source()) && **w != **b.source() {
            return Err(Error::Composition(
                "induced map needs legs with a common source".into(),
            ));
        }
        if theta.len() != w.n_objects() {
            return Err(Error::Shape(format!(
                "{} connecting morphisms for {} objects",
                theta.len(),
                w.n_objects()
            )));
        }
        let mut obj_map = Vec::with_capacity(w.n_objects());
        for o in 0..w.n_objects() {
            let idx = self
                .object_index(a.obj(o), b.obj(o), theta[o])
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "connecting morphism at object {o} has the wrong endpoints"
                    ))
                })?;
            obj_map.push(idx);
        }
        let y = self.right.source();
        let mor_map = (0..w.n_morphisms())
            .map(|m| {
                let (am, bm) = (a.mor(m), b.mor(m));
                self.offsets[obj_map[w.src(m)]]
                    + self.left.source().out_pos(am) * y.out(y.src(bm)).len()
                    + y.out_pos(bm)
            })
            .collect();
        GroupoidMap::new(w.clone(), self.groupoid.clone(), obj_map, mor_map)
    }

    /// The diagonal `X -> X ×_Y X` of a pullback of a map with itself.
    pub fn diagonal(&self) -> Result<GroupoidMap> {
        let f = &self.left;
        let id = GroupoidMap::identity(f.source().clone());
        let theta: Vec<MorId> = (0..f.source().n_objects())
            .map(|o| f.target().identity(f.obj(o)))
            .collect();
        self.induced_map(&id, &id, &theta)
    }
}

/// Homotopy pullback of `f: X -> Z` and `g: Y -> Z`.
pub fn homotopy_pullback(f: &GroupoidMap, g: &GroupoidMap) -> Result<HomotopyPullback> {
    let (x, y, z) = (f.source(), g.source(), f.target());
    if !Arc::ptr_eq(z, g.target()) && **z != **g.target() {
        return Err(Error::Composition(
            "pullback legs have different targets".into(),
        ));
    }
    let mut objects = Vec::new();
    let mut offset = Vec::new();
    let mut index: HashMap<(usize, usize, MorId), usize> = HashMap::new();
    let mut n_mor = 0;
    for a in 0..x.n_objects() {
        for b in 0..y.n_objects() {
            for phi in z.hom(f.obj(a), g.obj(b)) {
                index.insert((a, b, phi), objects.len());
                objects.push((a, b, phi));
                offset.push(n_mor);
                n_mor += x.out(a).len() * y.out(b).len();
            }
        }
    }
    let mut morphisms = Vec::with_capacity(n_mor);
    let mut src = Vec::with_capacity(n_mor);
    let mut tgt = Vec::with_capacity(n_mor);
    for (o, &(a, b, phi)) in objects.iter().enumerate() {
        for &alpha in x.out(a) {
            let fa_inv = z.inverse(f.mor(alpha));
            for &beta in y.out(b) {
                let phi2 = z.compose(g.mor(beta), z.compose(phi, fa_inv));
                morphisms.push((alpha, beta));
                src.push(o);
                tgt.push(index[&(x.tgt(alpha), y.tgt(beta), phi2)]);
            }
        }
    }
    let groupoid = FiniteGroupoid::from_composition(objects.len(), src.clone(), tgt, |m2, m1| {
        let (a1, b1) = morphisms[m1];
        let (a2, b2) = morphisms[m2];
        let (a, b) = (x.compose(a2, a1), y.compose(b2, b1));
        offset[src[m1]] + x.out_pos(a) * y.out(y.src(b)).len() + y.out_pos(b)
    })?;
    let groupoid = Arc::new(groupoid);
    let proj_left = GroupoidMap::new(
        groupoid.clone(),
        x.clone(),
        objects.iter().map(|t| t.0).collect(),
        morphisms.iter().map(|m| m.0).collect(),
    )?;
    let proj_right = GroupoidMap::new(
        groupoid.clone(),
        y.clone(),
        objects.iter().map(|t| t.1).collect(),
        morphisms.iter().map(|m| m.1).collect(),
    )?;
    Ok(HomotopyPullback {
        groupoid,
        objects,
        morphisms,
        proj_left,
        proj_right,
        left: f.clone(),
        right: g.clone(),
        offsets: offset,
        index,
    })
}

/// Homotopy fiber of `f` over object `y`: the pullback against the point
/// at `y`. Fiber objects are `(x, 0, φ: f x -> y)`.
pub fn homotopy_fiber(f: &GroupoidMap, y: usize) -> Result<HomotopyPullback> {
    let incl = GroupoidMap::point_inclusion(Arc::new(point()), f.target().clone(), y)?;
    homotopy_pullback(f, &incl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::constructions::{delooping, delooping_map, discrete, product};
    use crate::grpd::group::FiniteGroup;
    use crate::rational;

    fn c2_in_s3() -> GroupoidMap {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        delooping_map(
            Arc::new(delooping(&FiniteGroup::cyclic(2))),
            Arc::new(delooping(&s3)),
            vec![0, t],
        )
        .unwrap()
    }

    #[test]
    fn pullback_over_point_is_product() {
        let pt = Arc::new(point());
        let x = Arc::new(delooping(&FiniteGroup::cyclic(2)));
        let y = Arc::new(discrete(3));
        let f = GroupoidMap::to_point(x.clone(), pt.clone()).unwrap();
        let g = GroupoidMap::to_point(y.clone(), pt).unwrap();
        let pb = homotopy_pullback(&f, &g).unwrap();
        let xy = product(&x, &y);
        assert_eq!(pb.groupoid.n_objects(), xy.n_objects());
        assert_eq!(pb.groupoid.n_morphisms(), xy.n_morphisms());
        assert_eq!(pb.groupoid.cardinality(), xy.cardinality());
    }

    #[test]
    fn fiber_of_subgroup_inclusion_is_coset_set() {
        let f = c2_in_s3();
        let fib = homotopy_fiber(&f, 0).unwrap();
        let g = &fib.groupoid;
        // objects: the six elements of S_3; morphisms: C_2 translations
        assert_eq!(g.n_objects(), 6);
        assert_eq!(g.n_morphisms(), 12);
        assert_eq!(g.n_components(), 3);
        assert!((0..3).all(|c| g.aut_group(c).order() == 1));
        assert_eq!(g.cardinality(), rational::int(3));
        // same as the pullback of BH -> BG <- pt
        let pb = homotopy_pullback(&f, &fib.right).unwrap();
        assert_eq!(pb.groupoid.cardinality(), rational::int(3));
    }

    #[test]
    fn fiber_of_identity_is_contractible() {
        let x = Arc::new(delooping(&FiniteGroup::symmetric(3)));
        let fib = homotopy_fiber(&GroupoidMap::identity(x), 0).unwrap();
        assert!(fib.groupoid.is_connected());
        assert_eq!(fib.groupoid.aut_group(0).order(), 1);
        assert!(matches!(
            homotopy_fiber(&c2_in_s3(), 1),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn projections_and_connecting_isos() {
        let f = c2_in_s3();
        let pb = homotopy_pullback(&f, &f).unwrap();
        let z = f.target();
        for m in 0..pb.groupoid.n_morphisms() {
            let (o1, o2) = (pb.groupoid.src(m), pb.groupoid.tgt(m));
            // φ' ∘ f(α) = g(β) ∘ φ
            let lhs = z.compose(pb.connecting(o2), f.mor(pb.proj_left.mor(m)));
            let rhs = z.compose(f.mor(pb.proj_right.mor(m)), pb.connecting(o1));
            assert_eq!(lhs, rhs);
        }
    }
}
