//! Units and counits of `f_! ⊣ f^* ⊣ f_*`, and Beck–Chevalley maps of
//! homotopy pullback squares.
//!
//! All maps are read off the reduced-fiber presentations of
//! [`crate::linsys::pushforward`]: a block `(r, φ: f r -> y)` of the fiber
//! over `y` is a copy of `F(r)`.

use crate::error::{Error, Result};
use crate::grpd::{GroupoidMap, HomotopyPullback};
use crate::linsys::pushforward::{
    pushforward_left, pushforward_map, pushforward_map_with, pushforward_right, PushKind,
    PushforwardResult,
};
use crate::linsys::system::{pullback_map, pullback_system, LinearMapOfSystems, LocalSystem};
use crate::matrix::ExactMatrix;
use crate::sparse::SparseMatrix;

/// `G -> f_* f^* G`.
pub fn unit_star(f: &GroupoidMap, g: &LocalSystem) -> Result<LinearMapOfSystems> {
    let fg = pullback_system(f, g)?;
    let push = pushforward_right(f, &fg)?;
    unit_star_with(f, g, &push)
}

/// [`unit_star`] with `f_* f^* G` already computed.
pub fn unit_star_with(
    f: &GroupoidMap,
    g: &LocalSystem,
    push: &PushforwardResult,
) -> Result<LinearMapOfSystems> {
    let y = f.target();
    let components = (0..y.n_objects())
        .map(|o| {
            let pres = &push.fibers[o];
            let parts: Vec<ExactMatrix> = pres
                .blocks
                .iter()
                .map(|&(_, phi)| g.mat(y.inverse(phi)).clone())
                .collect();
            pres.project
                .mul_dense(&ExactMatrix::vstack(g.dim(o), &parts))
        })
        .collect();
    LinearMapOfSystems::new(g.clone(), push.system.clone(), components)
}

/// `f^* f_* F -> F`.
pub fn counit_star(f: &GroupoidMap, sys: &LocalSystem) -> Result<LinearMapOfSystems> {
    let push = pushforward_right(f, sys)?;
    counit_star_with(f, sys, &push)
}

/// [`counit_star`] with `f_* F` already computed.
pub fn counit_star_with(
    f: &GroupoidMap,
    sys: &LocalSystem,
    push: &PushforwardResult,
) -> Result<LinearMapOfSystems> {
    let x = f.source();
    let source = pullback_system(f, &push.system)?;
    let components = (0..x.n_objects())
        .map(|o| {
            let r = x.representative(x.component_of(o));
            let from = x.from_rep(o);
            let pres = &push.fibers[f.obj(o)];
            let b = pres.block(r, f.mor(from));
            sys.mat(from).mul(&pres.embed_block(b, sys.dim(r)))
        })
        .collect();
    LinearMapOfSystems::new(source, sys.clone(), components)
}

/// `F -> f^* f_! F`.
pub fn unit_shriek(f: &GroupoidMap, sys: &LocalSystem) -> Result<LinearMapOfSystems> {
    let push = pushforward_left(f, sys)?;
    unit_shriek_with(f, sys, &push)
}

/// [`unit_shriek`] with `f_! F` already computed.
pub fn unit_shriek_with(
    f: &GroupoidMap,
    sys: &LocalSystem,
    push: &PushforwardResult,
) -> Result<LinearMapOfSystems> {
    let x = f.source();
    let target = pullback_system(f, &push.system)?;
    let components = (0..x.n_objects())
        .map(|o| {
            let r = x.representative(x.component_of(o));
            let pres = &push.fibers[f.obj(o)];
            let b = pres.block(r, f.mor(x.from_rep(o)));
            pres.project_block(b, sys.dim(r)).mul(sys.mat(x.to_rep(o)))
        })
        .collect();
    LinearMapOfSystems::new(sys.clone(), target, components)
}

/// `f_! f^* G -> G`.
pub fn counit_shriek(f: &GroupoidMap, g: &LocalSystem) -> Result<LinearMapOfSystems> {
    let fg = pullback_system(f, g)?;
    let push = pushforward_left(f, &fg)?;
    counit_shriek_with(f, g, &push)
}

/// [`counit_shriek`] with `f_! f^* G` already computed.
pub fn counit_shriek_with(
    f: &GroupoidMap,
    g: &LocalSystem,
    push: &PushforwardResult,
) -> Result<LinearMapOfSystems> {
    let y = f.target();
    let components = (0..y.n_objects())
        .map(|o| {
            let pres = &push.fibers[o];
            let parts: Vec<ExactMatrix> = pres
                .blocks
                .iter()
                .map(|&(_, phi)| g.mat(phi).clone())
                .collect();
            SparseMatrix::dense_mul(&ExactMatrix::hstack(g.dim(o), &parts), &pres.embed)
        })
        .collect();
    LinearMapOfSystems::new(push.system.clone(), g.clone(), components)
}

/// `p1^* f^* H -> p2^* g^* H`, given by `H(φ)` at a triple `(x, y, φ)`.
pub fn twist(square: &HomotopyPullback, h: &LocalSystem) -> Result<LinearMapOfSystems> {
    let source = pullback_system(&square.proj_left, &pullback_system(&square.left, h)?)?;
    let target = pullback_system(&square.proj_right, &pullback_system(&square.right, h)?)?;
    let components = (0..square.groupoid.n_objects())
        .map(|o| h.mat(square.connecting(o)).clone())
        .collect();
    LinearMapOfSystems::new(source, target, components)
}

/// A comparison map together with its exact inverse when it has one.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub map: LinearMapOfSystems,
    pub invertible: bool,
    pub inverse: Option<LinearMapOfSystems>,
}

impl Comparison {
    fn new(map: LinearMapOfSystems) -> Self {
        let inverse = map.inverse();
        Comparison {
            invertible: inverse.is_some(),
            map,
            inverse,
        }
    }

    /// The inverse, or an internal error if the map is singular.
    pub fn require_inverse(&self, what: &str) -> Result<&LinearMapOfSystems> {
        self.inverse
            .as_ref()
            .ok_or_else(|| Error::Internal(format!("{what} is not invertible")))
    }
}

/// For the square `P = X ×_Y Z` of `f: X -> Y` and `g: Z -> Y`, the map
/// `p2_! p1^* F -> g^* f_! F`.
pub fn beck_chevalley_shriek(square: &HomotopyPullback, sys: &LocalSystem) -> Result<Comparison> {
    let push = pushforward_left(&square.left, sys)?;
    Ok(beck_chevalley_shriek_with(square, sys, &push)?.0)
}

/// [`beck_chevalley_shriek`] given `f_! F`; also returns `p2_! p1^* F`.
pub(crate) fn beck_chevalley_shriek_with(
    square: &HomotopyPullback,
    sys: &LocalSystem,
    push: &PushforwardResult,
) -> Result<(Comparison, PushforwardResult)> {
    let (f, g, p1, p2) = (
        &square.left,
        &square.right,
        &square.proj_left,
        &square.proj_right,
    );
    let h = &push.system;
    let eta = pullback_map(p1, &unit_shriek_with(f, sys, push)?)?;
    let inner = eta.then(&twist(square, h)?)?;
    let src = pushforward_left(p2, &inner.source)?;
    let gh = pullback_system(g, h)?;
    let tgt = pushforward_left(p2, &pullback_system(p2, &gh)?)?;
    let pushed = pushforward_map_with(p2, &inner, &src, &tgt)?;
    let eps = counit_shriek_with(p2, &gh, &tgt)?;
    Ok((Comparison::new(pushed.then(&eps)?), src))
}

/// For the square `P = X ×_Y Z` of `f: X -> Y` and `g: Z -> Y`, the map
/// `g^* f_* F -> p2_* p1^* F`.
pub fn beck_chevalley_star(square: &HomotopyPullback, sys: &LocalSystem) -> Result<Comparison> {
    let (f, g, p1, p2) = (
        &square.left,
        &square.right,
        &square.proj_left,
        &square.proj_right,
    );
    let push = pushforward_right(f, sys)?;
    let h = &push.system;
    let eta = unit_star(p2, &pullback_system(g, h)?)?;
    let tw = twist(square, h)?;
    let tw_inv = tw
        .inverse()
        .ok_or_else(|| Error::Internal("connecting isomorphisms act singularly".into()))?;
    let eps = pullback_map(p1, &counit_star_with(f, sys, &push)?)?;
    let inner = tw_inv.then(&eps)?;
    let pushed = pushforward_map(p2, &inner, PushKind::Right)?;
    Ok(Comparison::new(eta.then(&pushed)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::{
        delooping, delooping_map, homotopy_pullback, point, FiniteGroup, FiniteGroupoid,
    };
    use std::sync::Arc;

    fn regular(g: &FiniteGroup) -> LocalSystem {
        let base = Arc::new(delooping(g));
        let n = g.order();
        let mats = g
            .elements()
            .map(|a| ExactMatrix::permutation(&(0..n).map(|h| g.mul(a, h)).collect::<Vec<_>>()))
            .collect();
        LocalSystem::from_representation(base, n, mats).unwrap()
    }

    fn to_pt(x: &Arc<FiniteGroupoid>) -> GroupoidMap {
        GroupoidMap::to_point(x.clone(), Arc::new(point())).unwrap()
    }

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

    fn check_zigzags(f: &GroupoidMap, sys: &LocalSystem, g: &LocalSystem) {
        // f_! F -> f_! f^* f_! F -> f_! F
        let push = pushforward_left(f, sys).unwrap();
        let a = pushforward_map(f, &unit_shriek(f, sys).unwrap(), PushKind::Left).unwrap();
        let z = a.then(&counit_shriek(f, &push.system).unwrap()).unwrap();
        assert!(z.is_identity());
        // f^* G -> f^* f_! f^* G -> f^* G
        let fg = pullback_system(f, g).unwrap();
        let z = unit_shriek(f, &fg)
            .unwrap()
            .then(&pullback_map(f, &counit_shriek(f, g).unwrap()).unwrap())
            .unwrap();
        assert!(z.is_identity());
        // f^* G -> f^* f_* f^* G -> f^* G
        let z = pullback_map(f, &unit_star(f, g).unwrap())
            .unwrap()
            .then(&counit_star(f, &fg).unwrap())
            .unwrap();
        assert!(z.is_identity());
        // f_* F -> f_* f^* f_* F -> f_* F
        let push = pushforward_right(f, sys).unwrap();
        let b = pushforward_map(f, &counit_star(f, sys).unwrap(), PushKind::Right).unwrap();
        let z = unit_star(f, &push.system).unwrap().then(&b).unwrap();
        assert!(z.is_identity());
    }

    #[test]
    fn zigzags_hold() {
        let reg = regular(&FiniteGroup::cyclic(2));
        let f = to_pt(reg.base());
        check_zigzags(&f, &reg, &LocalSystem::constant(f.target().clone(), 2));
        let f = c2_in_s3();
        check_zigzags(&f, &reg, &regular(&FiniteGroup::symmetric(3)));
    }

    #[test]
    fn identity_units_are_identities() {
        let reg = regular(&FiniteGroup::symmetric(3));
        let id = GroupoidMap::identity(reg.base().clone());
        for m in [
            unit_star(&id, &reg),
            counit_star(&id, &reg),
            unit_shriek(&id, &reg),
            counit_shriek(&id, &reg),
        ] {
            assert!(m.unwrap().is_identity());
        }
    }

    #[test]
    fn unit_star_on_trivial_module() {
        let x = Arc::new(delooping(&FiniteGroup::dihedral(3)));
        let f = to_pt(&x);
        let u = unit_star(&f, &LocalSystem::constant(f.target().clone(), 1)).unwrap();
        assert!(u.is_identity());
    }

    #[test]
    fn beck_chevalley_examples() {
        let f = c2_in_s3();
        let sq = homotopy_pullback(&f, &f).unwrap();
        let q = LocalSystem::constant(f.source().clone(), 1);
        assert!(beck_chevalley_shriek(&sq, &q).unwrap().invertible);
        assert!(beck_chevalley_star(&sq, &q).unwrap().invertible);

        let id = GroupoidMap::identity(f.target().clone());
        let sq = homotopy_pullback(&id, &id).unwrap();
        let reg = regular(&FiniteGroup::symmetric(3));
        let bc = beck_chevalley_shriek(&sq, &reg).unwrap();
        assert!(bc.invertible);

        let x = Arc::new(crate::grpd::disjoint_union(&[
            &delooping(&FiniteGroup::cyclic(2)),
            &point(),
        ]));
        let z = Arc::new(delooping(&FiniteGroup::cyclic(3)));
        let sq = homotopy_pullback(&to_pt(&x), &to_pt(&z)).unwrap();
        let c = LocalSystem::constant(x.clone(), 2);
        for bc in [
            beck_chevalley_shriek(&sq, &c).unwrap(),
            beck_chevalley_star(&sq, &c).unwrap(),
        ] {
            assert!(bc.invertible);
            // two components of X, one of Z
            assert_eq!(bc.map.source.dims(), &[4]);
        }
    }
}
