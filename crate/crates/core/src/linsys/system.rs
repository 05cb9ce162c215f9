//! Rational local systems and maps between them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::{FiniteGroupoid, GroupoidMap, MorId};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;

/// A functor from a finite groupoid to finite-dimensional rational vector
/// spaces: a dimension per object and a `dim(tgt) × dim(src)` matrix per
/// morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSystem {
    base: Arc<FiniteGroupoid>,
    dims: Vec<usize>,
    // shared so that pullbacks and clones do not copy matrices
    mats: Vec<Arc<ExactMatrix>>,
}

impl LocalSystem {
    /// Validates shapes and functoriality. As for groupoid maps, checking
    /// each representative's automorphism group, the chosen inverse pairs and
    /// the slot decomposition of every morphism suffices.
    pub fn new(
        base: Arc<FiniteGroupoid>,
        dims: Vec<usize>,
        mats: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if dims.len() != base.n_objects() || mats.len() != base.n_morphisms() {
            return Err(Error::Shape(format!(
                "local system has {} dimensions and {} matrices for {} objects and {} morphisms",
                dims.len(),
                mats.len(),
                base.n_objects(),
                base.n_morphisms()
            )));
        }
        for (f, m) in mats.iter().enumerate() {
            let want = (dims[base.tgt(f)], dims[base.src(f)]);
            if m.shape() != want {
                return Err(Error::Shape(format!(
                    "matrix of morphism {f} is {:?}, expected {want:?}",
                    m.shape()
                )));
            }
        }
        let sys = LocalSystem {
            base,
            dims,
            mats: mats.into_iter().map(Arc::new).collect(),
        };
        sys.check_functorial()?;
        Ok(sys)
    }

    /// Assembles a system from data that is functorial by construction.
    pub(crate) fn from_parts(
        base: Arc<FiniteGroupoid>,
        dims: Vec<usize>,
        mats: Vec<ExactMatrix>,
    ) -> Self {
        debug_assert_eq!(dims.len(), base.n_objects());
        debug_assert_eq!(mats.len(), base.n_morphisms());
        LocalSystem {
            base,
            dims,
            mats: mats.into_iter().map(Arc::new).collect(),
        }
    }

    /// Re-runs the functoriality check of [`LocalSystem::new`].
    pub fn validate(&self) -> Result<()> {
        self.check_functorial()
    }

    fn check_functorial(&self) -> Result<()> {
        let x = &*self.base;
        let bad = |what: String| {
            Err(Error::InvalidInput(format!(
                "local system is not functorial: {what}"
            )))
        };
        for o in 0..x.n_objects() {
            if !self.mats[x.identity(o)].is_identity() {
                return bad(format!("identity of object {o}"));
            }
            if !self.mats[x.from_rep(o)]
                .mul(&self.mats[x.to_rep(o)])
                .is_identity()
            {
                return bad(format!("inverse pair at object {o}"));
            }
        }
        for c in 0..x.n_components() {
            let aut = x.aut_group(c);
            // multiplicativity against a generating set propagates to all pairs
            let gens = aut.generators();
            for a in aut.elements() {
                for &b in &gens {
                    let lhs = &self.mats[x.aut_morphism(c, aut.mul(a, b))];
                    let rhs = self.mats[x.aut_morphism(c, a)].mul(&self.mats[x.aut_morphism(c, b)]);
                    if **lhs != rhs {
                        return bad(format!("automorphisms {a}, {b} of component {c}"));
                    }
                }
            }
        }
        for f in 0..x.n_morphisms() {
            let (a, b) = (x.src(f), x.tgt(f));
            if x.is_identity(x.to_rep(a)) && x.is_identity(x.from_rep(b)) {
                // f is itself an automorphism of a representative
                continue;
            }
            let s = x.aut_morphism(x.component_of(a), x.slot(f));
            let expect = self.mats[x.from_rep(b)].mul(&self.mats[s].mul(&self.mats[x.to_rep(a)]));
            if *self.mats[f] != expect {
                return bad(format!("morphism {f}"));
            }
        }
        Ok(())
    }

    /// The constant system with fiber `Q^dim` and identity matrices.
    pub fn constant(base: Arc<FiniteGroupoid>, dim: usize) -> Self {
        let dims = vec![dim; base.n_objects()];
        let mats = vec![Arc::new(ExactMatrix::identity(dim)); base.n_morphisms()];
        LocalSystem { base, dims, mats }
    }

    /// A system on a one-object groupoid from matrices indexed by morphism.
    pub fn from_representation(
        base: Arc<FiniteGroupoid>,
        dim: usize,
        images: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if base.n_objects() != 1 {
            return Err(Error::InvalidInput(
                "representations live on one-object groupoids".into(),
            ));
        }
        LocalSystem::new(base, vec![dim], images)
    }

    /// A system given on each component by a representation of the
    /// automorphism group of its representative, `reps[c] = (dim, images)`
    /// with images indexed by group element. A morphism `f` acts by the
    /// image of its slot.
    pub fn from_component_representations(
        base: Arc<FiniteGroupoid>,
        reps: &[(usize, Vec<ExactMatrix>)],
    ) -> Result<Self> {
        if reps.len() != base.n_components() {
            return Err(Error::Shape(format!(
                "{} representations for {} components",
                reps.len(),
                base.n_components()
            )));
        }
        let dims = (0..base.n_objects())
            .map(|x| reps[base.component_of(x)].0)
            .collect();
        let shared: Vec<Vec<Arc<ExactMatrix>>> = reps
            .iter()
            .map(|(_, images)| images.iter().cloned().map(Arc::new).collect())
            .collect();
        let mut mats = Vec::with_capacity(base.n_morphisms());
        for f in 0..base.n_morphisms() {
            let images = &shared[base.component_of(base.src(f))];
            let m = images
                .get(base.slot(f))
                .ok_or_else(|| Error::Shape("too few images for a component".into()))?;
            mats.push(m.clone());
        }
        let sys = LocalSystem { base, dims, mats };
        sys.validate()?;
        Ok(sys)
    }

    /// Componentwise direct sum.
    pub fn direct_sum(&self, other: &LocalSystem) -> Result<Self> {
        if !same_base(&self.base, &other.base) {
            return Err(Error::Shape(
                "direct sum of systems on different groupoids".into(),
            ));
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| Arc::new(ExactMatrix::block_diag(&[(**a).clone(), (**b).clone()])))
            .collect();
        Ok(LocalSystem {
            base: self.base.clone(),
            dims,
            mats,
        })
    }

    pub fn base(&self) -> &Arc<FiniteGroupoid> {
        &self.base
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mat(&self, f: MorId) -> &ExactMatrix {
        &self.mats[f]
    }

    /// Total dimension summed over component representatives.
    pub fn total_dim(&self) -> usize {
        (0..self.base.n_components())
            .map(|c| self.dims[self.base.representative(c)])
            .sum()
    }

    /// Whether `self` and `other` are the same functor.
    pub fn same_as(&self, other: &LocalSystem) -> bool {
        same_base(&self.base, &other.base) && self.dims == other.dims && self.mats == other.mats
    }
}

pub(crate) fn same_base(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `f^* F`: dimensions and matrices precomposed with `f`.
pub fn pullback_system(f: &GroupoidMap, sys: &LocalSystem) -> Result<LocalSystem> {
    if !same_base(f.target(), &sys.base) {
        return Err(Error::Shape(
            "system does not live on the target of the map".into(),
        ));
    }
    let x = f.source();
    let dims = (0..x.n_objects()).map(|o| sys.dims[f.obj(o)]).collect();
    let mats = (0..x.n_morphisms())
        .map(|m| sys.mats[f.mor(m)].clone())
        .collect();
    Ok(LocalSystem {
        base: x.clone(),
        dims,
        mats,
    })
}

/// A natural transformation of local systems on a common base.
#[derive(Clone, Debug)]
pub struct LinearMapOfSystems {
    pub source: LocalSystem,
    pub target: LocalSystem,
    pub components: Vec<ExactMatrix>,
}

impl LinearMapOfSystems {
    /// Validates shapes and naturality on every morphism.
    pub fn new(
        source: LocalSystem,
        target: LocalSystem,
        components: Vec<ExactMatrix>,
    ) -> Result<Self> {
        if !same_base(&source.base, &target.base) {
            return Err(Error::Shape(
                "map between systems on different groupoids".into(),
            ));
        }
        let x = source.base.clone();
        if components.len() != x.n_objects() {
            return Err(Error::Shape(format!(
                "{} components for {} objects",
                components.len(),
                x.n_objects()
            )));
        }
        for (o, c) in components.iter().enumerate() {
            if c.shape() != (target.dims[o], source.dims[o]) {
                return Err(Error::Shape(format!(
                    "component at object {o} has shape {:?}",
                    c.shape()
                )));
            }
        }
        // the arrows to representatives and the automorphism generators
        // generate every morphism, and naturality is closed under
        // composition and inverses
        let mut generating: Vec<MorId> = (0..x.n_objects()).map(|o| x.to_rep(o)).collect();
        for c in 0..x.n_components() {
            generating.extend(
                x.aut_group(c)
                    .generators()
                    .into_iter()
                    .map(|e| x.aut_morphism(c, e)),
            );
        }
        for f in generating {
            let (a, b) = (x.src(f), x.tgt(f));
            if components[b].mul(&source.mats[f]) != target.mats[f].mul(&components[a]) {
                return Err(Error::Internal(format!("naturality fails at morphism {f}")));
            }
        }
        Ok(LinearMapOfSystems {
            source,
            target,
            components,
        })
    }

    pub fn identity(sys: &LocalSystem) -> Self {
        let components = sys.dims.iter().map(|&d| ExactMatrix::identity(d)).collect();
        LinearMapOfSystems {
            source: sys.clone(),
            target: sys.clone(),
            components,
        }
    }

    /// Scalar endomorphism of a 1-dimensional-per-object system, given by
    /// a value per component.
    pub fn diagonal(sys: &LocalSystem, values: &[Rational]) -> Result<Self> {
        let x = &sys.base;
        if values.len() != x.n_components() {
            return Err(Error::Shape(format!(
                "{} values for {} components",
                values.len(),
                x.n_components()
            )));
        }
        let components = (0..x.n_objects())
            .map(|o| ExactMatrix::identity(sys.dims[o]).scale(&values[x.component_of(o)]))
            .collect();
        LinearMapOfSystems::new(sys.clone(), sys.clone(), components)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LinearMapOfSystems) -> Result<LinearMapOfSystems> {
        if !self.target.same_as(&next.source) {
            return Err(Error::Composition(
                "maps of systems are not composable".into(),
            ));
        }
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(a, b)| b.mul(a))
            .collect();
        Ok(LinearMapOfSystems {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<LinearMapOfSystems> {
        let components = self
            .components
            .iter()
            .map(ExactMatrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(LinearMapOfSystems {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_identity)
    }

    /// Equal components; source and target systems are not compared.
    pub fn same_components(&self, other: &LinearMapOfSystems) -> bool {
        self.components == other.components
    }
}

/// `f^* η`.
pub fn pullback_map(f: &GroupoidMap, eta: &LinearMapOfSystems) -> Result<LinearMapOfSystems> {
    let source = pullback_system(f, &eta.source)?;
    let target = pullback_system(f, &eta.target)?;
    let components = (0..f.source().n_objects())
        .map(|o| eta.components[f.obj(o)].clone())
        .collect();
    Ok(LinearMapOfSystems {
        source,
        target,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::{delooping, delooping_map, FiniteGroup, PermutationGroup};

    /// Regular representation: `g` acts on basis `e_h` by `e_h -> e_{gh}`.
    fn regular(g: &FiniteGroup) -> LocalSystem {
        let base = Arc::new(delooping(g));
        let n = g.order();
        let mats = g
            .elements()
            .map(|a| ExactMatrix::permutation(&(0..n).map(|h| g.mul(a, h)).collect::<Vec<_>>()))
            .collect();
        LocalSystem::from_representation(base, n, mats).unwrap()
    }

    #[test]
    fn rejects_non_functorial_data() {
        let c2 = FiniteGroup::cyclic(2);
        let base = Arc::new(delooping(&c2));
        let swap = ExactMatrix::permutation(&[1, 0]);
        assert!(LocalSystem::from_representation(
            base.clone(),
            2,
            vec![ExactMatrix::identity(2), swap.clone()]
        )
        .is_ok());
        // swap squared is the identity, but the identity must act trivially
        assert!(
            LocalSystem::from_representation(base.clone(), 2, vec![swap.clone(), swap]).is_err()
        );
        let two = ExactMatrix::scalar(crate::rational::int(2));
        assert!(
            LocalSystem::from_representation(base, 1, vec![ExactMatrix::identity(1), two]).is_err()
        );
    }

    #[test]
    fn regular_rep_restricted_to_c2_has_three_invariant_lines() {
        let pg = PermutationGroup::generate(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let s3 = pg.group.clone();
        let reg = regular(&s3);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let f = delooping_map(
            Arc::new(delooping(&FiniteGroup::cyclic(2))),
            reg.base().clone(),
            vec![0, t],
        )
        .unwrap();
        let res = pullback_system(&f, &reg).unwrap();
        assert_eq!(res.dim(0), 6);
        // rank of the averaging projector (1 + t)/2
        let avg = ExactMatrix::identity(6)
            .add(res.mat(1))
            .scale(&crate::rational::ratio(1, 2));
        assert_eq!(avg.rank(), 3);
    }

    #[test]
    fn naturality_is_enforced() {
        let c2 = FiniteGroup::cyclic(2);
        let reg = regular(&c2);
        let ok = LinearMapOfSystems::new(
            reg.clone(),
            reg.clone(),
            vec![ExactMatrix::permutation(&[1, 0])],
        );
        assert!(ok.is_ok());
        let bad = LinearMapOfSystems::new(
            reg.clone(),
            reg,
            vec![ExactMatrix::from_i64(&[&[1, 0], &[0, 0]])],
        );
        assert!(bad.is_err());
    }
}
