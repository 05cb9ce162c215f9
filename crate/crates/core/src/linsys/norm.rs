//! Norm maps `f_! D_f -> f_*`, the dualizing system `D_f = π1_* Δ_!`, and
//! cardinality and integration as linear composites.
//!
//! [`norm_structural`] is the four-step composite through the square
//! `P = X ×_Y X` with projections `π1, π2` and diagonal `Δ`:
//!
//! `f_! K -> f_* f^* f_! K -> f_* π2_! π1^* K -> f_* π2_! Δ_! F -> f_* F`
//!
//! where `K = π1_* Δ_! F`. The last step uses `π2 ∘ Δ = id`. The map
//! [`norm_direct`] sums `F(α)` over fiber morphisms and serves as an
//! independent check.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::{homotopy_pullback, point, FiniteGroupoid, GroupoidMap, HomotopyPullback};
use crate::linsys::adjunction::{
    beck_chevalley_shriek_with, counit_shriek, counit_shriek_with, counit_star, counit_star_with,
    unit_shriek, unit_star, unit_star_with,
};
use crate::linsys::pushforward::{
    pushforward_left, pushforward_map, pushforward_map_with, pushforward_right, PushKind,
};
use crate::linsys::system::{pullback_map, pullback_system, LinearMapOfSystems, LocalSystem};
use crate::matrix::ExactMatrix;
use crate::rational::{self, Rational};
use crate::spans::ClassFunction;

/// The square `X ×_Y X` of `f` with itself and its diagonal.
pub fn diagonal_square(f: &GroupoidMap) -> Result<(HomotopyPullback, GroupoidMap)> {
    let square = homotopy_pullback(f, f)?;
    let delta = square.diagonal()?;
    Ok((square, delta))
}

/// `Nm_f: f_! D_f F -> f_* F`.
pub fn norm_structural(f: &GroupoidMap, sys: &LocalSystem) -> Result<LinearMapOfSystems> {
    let (square, delta) = diagonal_square(f)?;
    norm_structural_with(f, &square, &delta, sys)
}

fn norm_structural_with(
    f: &GroupoidMap,
    square: &HomotopyPullback,
    delta: &GroupoidMap,
    sys: &LocalSystem,
) -> Result<LinearMapOfSystems> {
    let (pi1, pi2) = (&square.proj_left, &square.proj_right);
    let d_push = pushforward_left(delta, sys)?;
    let d_sys = &d_push.system;
    let k_push = pushforward_right(pi1, d_sys)?;
    let k = &k_push.system;
    let fk_push = pushforward_left(f, k)?;

    // f_! K -> f_* f^* f_! K
    let ffk = pushforward_right(f, &pullback_system(f, &fk_push.system)?)?;
    let unit = unit_star_with(f, &fk_push.system, &ffk)?;

    // -> f_* π2_! π1^* K, inverting the Beck-Chevalley map
    let (bc, bc_src) = beck_chevalley_shriek_with(square, k, &fk_push)?;
    let bc_inv = bc.require_inverse("Beck-Chevalley map of the diagonal square")?;
    let f_bc_src = pushforward_right(f, &bc_src.system)?;
    let step2 = pushforward_map_with(f, bc_inv, &ffk, &f_bc_src)?;

    // -> f_* π2_! Δ_! F, by the counit of π1
    let p2_d = pushforward_left(pi2, d_sys)?;
    let c = pushforward_map_with(pi2, &counit_star_with(pi1, d_sys, &k_push)?, &bc_src, &p2_d)?;
    let f_p2_d = pushforward_right(f, &p2_d.system)?;
    let step3 = pushforward_map_with(f, &c, &f_bc_src, &f_p2_d)?;

    // -> f_* F, since π2 ∘ Δ = id: Δ^* π2^* F is F and Δ_! F is Δ_! Δ^* π2^* F
    let p2_sys = pullback_system(pi2, sys)?;
    let e_delta = counit_shriek_with(delta, &p2_sys, &d_push)?;
    let p2_p2 = pushforward_left(pi2, &p2_sys)?;
    let collapse = pushforward_map_with(pi2, &e_delta, &p2_d, &p2_p2)?
        .then(&counit_shriek_with(pi2, sys, &p2_p2)?)?;
    let step4 = pushforward_map_with(f, &collapse, &f_p2_d, &pushforward_right(f, sys)?)?;

    unit.then(&step2)?.then(&step3)?.then(&step4)
}

/// `D_f F = π1_* Δ_! F` with its comparison to `F` and the inverse.
#[derive(Clone, Debug)]
pub struct Dualizing {
    pub system: LocalSystem,
    pub comparison: LinearMapOfSystems,
    pub inverse: LinearMapOfSystems,
}

/// The comparison `π1_* Δ_! F -> π1_* Δ_* F -> F`, the first arrow being
/// `π1_*` of the norm of `Δ`.
pub fn dualizing_map(f: &GroupoidMap, sys: &LocalSystem) -> Result<Dualizing> {
    let (square, delta) = diagonal_square(f)?;
    dualizing_with(&square, &delta, sys, 0)
}

fn dualizing_with(
    square: &HomotopyPullback,
    delta: &GroupoidMap,
    sys: &LocalSystem,
    depth: usize,
) -> Result<Dualizing> {
    let comparison = dualizing_comparison(square, delta, sys, depth)?;
    let inverse = comparison
        .inverse()
        .ok_or_else(|| Error::Internal("dualizing comparison is not invertible".into()))?;
    Ok(Dualizing {
        system: comparison.source.clone(),
        comparison,
        inverse,
    })
}

fn dualizing_comparison(
    square: &HomotopyPullback,
    delta: &GroupoidMap,
    sys: &LocalSystem,
    depth: usize,
) -> Result<LinearMapOfSystems> {
    let pi1 = &square.proj_left;
    let nm_delta = norm_canonical_at(delta, sys, depth + 1)?;
    let src = pushforward_right(pi1, &nm_delta.source)?;
    let d_star = &nm_delta.target;
    let tgt = pushforward_right(pi1, d_star)?;
    let first = pushforward_map_with(pi1, &nm_delta, &src, &tgt)?;
    // π1 ∘ Δ = id, so Δ^* π1^* π1_* Δ_* F is π1_* Δ_* F on the nose
    let kappa = pullback_map(delta, &counit_star_with(pi1, d_star, &tgt)?)?
        .then(&counit_star(delta, sys)?)?;
    first.then(&kappa)
}

/// The norm `f_! F -> f_* F` under the identification `D_f F = F`.
pub fn norm_canonical(f: &GroupoidMap, sys: &LocalSystem) -> Result<LinearMapOfSystems> {
    norm_canonical_at(f, sys, 0)
}

fn norm_canonical_at(
    f: &GroupoidMap,
    sys: &LocalSystem,
    depth: usize,
) -> Result<LinearMapOfSystems> {
    // fully faithful maps have contractible or empty fibers, where both
    // pushforwards are extension by zero
    if f.is_fully_faithful() {
        let push = pushforward_left(f, sys)?;
        let eta = unit_shriek(f, sys)?;
        let eta_inv = eta.inverse().ok_or_else(|| {
            Error::Internal("unit of a fully faithful map is not invertible".into())
        })?;
        return unit_star(f, &push.system)?.then(&pushforward_map(f, &eta_inv, PushKind::Right)?);
    }
    // diagonals are faithful, and diagonals of faithful maps fully faithful
    if depth > 2 {
        return Err(Error::Internal("norm recursion did not terminate".into()));
    }
    let (square, delta) = diagonal_square(f)?;
    let dual = dualizing_with(&square, &delta, sys, depth)?;
    let twist = pushforward_map(f, &dual.inverse, PushKind::Left)?;
    twist.then(&norm_structural_with(f, &square, &delta, sys)?)
}

/// Outcome of [`check_norm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormCheck {
    pub structural_invertible: bool,
    pub dualizing_invertible: bool,
    /// `Nm_f ∘ f_!(D⁻¹)` equals [`norm_direct`]; false when `D` is singular.
    pub agrees_with_direct: bool,
}

/// Invertibility of the structural norm and the dualizing comparison, and
/// agreement of the norm with [`norm_direct`] after identifying `D_f F`
/// with `F`.
pub fn check_norm(f: &GroupoidMap, sys: &LocalSystem) -> Result<NormCheck> {
    let (square, delta) = diagonal_square(f)?;
    let nm = norm_structural_with(f, &square, &delta, sys)?;
    let comparison = dualizing_comparison(&square, &delta, sys, 0)?;
    let inverse = comparison.inverse();
    let agrees = match &inverse {
        Some(inv) => {
            let canonical = pushforward_map(f, inv, PushKind::Left)?.then(&nm)?;
            canonical.same_components(&norm_direct(f, sys)?)
        }
        None => false,
    };
    Ok(NormCheck {
        structural_invertible: nm.is_invertible(),
        dualizing_invertible: inverse.is_some(),
        agrees_with_direct: agrees,
    })
}

/// `f_! F -> f_* F` given at `y` by summing `F(α)` over the fiber
/// morphisms out of each fiber object.
pub fn norm_direct(f: &GroupoidMap, sys: &LocalSystem) -> Result<LinearMapOfSystems> {
    let (x, y) = (f.source(), f.target());
    let left = pushforward_left(f, sys)?;
    let right = pushforward_right(f, sys)?;
    let components = (0..y.n_objects())
        .map(|o| {
            let (pl, pr) = (&left.fibers[o], &right.fibers[o]);
            // the sum applied to the colimit lift, one target block at a time
            let mut lifted: Vec<ExactMatrix> = pr
                .blocks
                .iter()
                .map(|&(r, _)| ExactMatrix::zeros(sys.dim(r), pl.embed.cols()))
                .collect();
            for (b, &(r, phi)) in pl.blocks.iter().enumerate() {
                let c = x.component_of(r);
                let v = pl.embed_block(b, sys.dim(r));
                for e in x.aut_group(c).elements() {
                    let alpha = x.aut_morphism(c, e);
                    let b2 = pr.block(r, y.compose(phi, y.inverse(f.mor(alpha))));
                    lifted[b2] = lifted[b2].add(&sys.mat(alpha).mul(&v));
                }
            }
            pr.project
                .mul_dense(&ExactMatrix::vstack(pl.embed.cols(), &lifted))
        })
        .collect();
    LinearMapOfSystems::new(left.system, right.system, components)
}

/// The scalar of `Q -> f_* f^* Q -> f_! f^* Q -> Q` for `f: X -> pt`, with
/// the middle arrow the inverse norm.
pub fn cardinality_linear(x: &Arc<FiniteGroupoid>) -> Result<Rational> {
    let f = GroupoidMap::to_point(x.clone(), Arc::new(point()))?;
    let v = integrate_linear(&f, &ClassFunction::constant(x.clone(), rational::one()))?;
    Ok(v.values[0].clone())
}

/// Integration of a class function along `f`, as the composite
/// `Q -> f_* f^* Q -> f_* f^* Q -> f_! f^* Q -> Q` whose middle arrows are
/// multiplication by `φ` and the inverse norm.
pub fn integrate_linear(f: &GroupoidMap, phi: &ClassFunction) -> Result<ClassFunction> {
    let (x, y) = (f.source(), f.target());
    if !Arc::ptr_eq(&phi.base, x) && *phi.base != **x {
        return Err(Error::Shape(
            "class function does not live on the source".into(),
        ));
    }
    let q = LocalSystem::constant(y.clone(), 1);
    let fq = pullback_system(f, &q)?;
    let mult = LinearMapOfSystems::diagonal(&fq, &phi.values)?;
    let nm = norm_canonical(f, &fq)?;
    let nm_inv = nm
        .inverse()
        .ok_or_else(|| Error::Internal("norm is not invertible".into()))?;
    let total = unit_star(f, &q)?
        .then(&pushforward_map(f, &mult, PushKind::Right)?)?
        .then(&nm_inv)?
        .then(&counit_shriek(f, &q)?)?;
    let values = (0..y.n_components())
        .map(|c| total.components[y.representative(c)].get(0, 0).clone())
        .collect();
    ClassFunction::new(y.clone(), values)
}
