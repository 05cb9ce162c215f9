//! Functors between finite groupoids.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::groupoid::{FiniteGroupoid, MorId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidMap {
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
    obj_map: Vec<usize>,
    mor_map: Vec<MorId>,
}

impl GroupoidMap {
    /// Validates that the tables define a functor.
    ///
    /// Functoriality is checked on each automorphism group of a
    /// representative, on the chosen pairs `t_x`, `t_x⁻¹`, and on the
    /// decomposition `f = t_b⁻¹ ∘ slot(f) ∘ t_a` of every morphism, which
    /// together imply it on all composable pairs.
    pub fn new(
        source: Arc<FiniteGroupoid>,
        target: Arc<FiniteGroupoid>,
        obj_map: Vec<usize>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        if obj_map.len() != source.n_objects() || mor_map.len() != source.n_morphisms() {
            return Err(Error::Shape(format!(
                "map tables have sizes ({}, {}), source has {} objects and {} morphisms",
                obj_map.len(),
                mor_map.len(),
                source.n_objects(),
                source.n_morphisms()
            )));
        }
        if let Some(&y) = obj_map.iter().find(|&&y| y >= target.n_objects()) {
            return Err(Error::Index(format!("object image {y} out of range")));
        }
        if let Some(&g) = mor_map.iter().find(|&&g| g >= target.n_morphisms()) {
            return Err(Error::Index(format!("morphism image {g} out of range")));
        }
        for f in 0..source.n_morphisms() {
            let g = mor_map[f];
            if target.src(g) != obj_map[source.src(f)] || target.tgt(g) != obj_map[source.tgt(f)] {
                return Err(Error::InvalidInput(format!(
                    "morphism {f} is sent to {g} with the wrong endpoints"
                )));
            }
        }
        for x in 0..source.n_objects() {
            if mor_map[source.identity(x)] != target.identity(obj_map[x]) {
                return Err(Error::InvalidInput(format!(
                    "identity of object {x} is not preserved"
                )));
            }
        }
        for x in 0..source.n_objects() {
            let back = target.compose(mor_map[source.from_rep(x)], mor_map[source.to_rep(x)]);
            if back != target.identity(obj_map[x]) {
                return Err(Error::InvalidInput(format!(
                    "inverse pair at object {x} is not preserved"
                )));
            }
        }
        for c in 0..source.n_components() {
            let aut = source.aut_group(c);
            for a in aut.elements() {
                for b in aut.elements() {
                    let (fa, fb) = (source.aut_morphism(c, a), source.aut_morphism(c, b));
                    let fab = source.aut_morphism(c, aut.mul(a, b));
                    if mor_map[fab] != target.compose(mor_map[fa], mor_map[fb]) {
                        return Err(Error::InvalidInput(format!(
                            "composition of {fa} and {fb} is not preserved"
                        )));
                    }
                }
            }
        }
        for f in 0..source.n_morphisms() {
            let (a, b) = (source.src(f), source.tgt(f));
            let c = source.component_of(a);
            let s = source.aut_morphism(c, source.slot(f));
            let expect = target.compose(
                mor_map[source.from_rep(b)],
                target.compose(mor_map[s], mor_map[source.to_rep(a)]),
            );
            if mor_map[f] != expect {
                return Err(Error::InvalidInput(format!(
                    "morphism {f} breaks functoriality"
                )));
            }
        }
        Ok(GroupoidMap {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(x: Arc<FiniteGroupoid>) -> Self {
        let obj_map = (0..x.n_objects()).collect();
        let mor_map = (0..x.n_morphisms()).collect();
        GroupoidMap {
            source: x.clone(),
            target: x,
            obj_map,
            mor_map,
        }
    }

    /// The unique map to `target`, which must have one object and one morphism.
    pub fn to_point(source: Arc<FiniteGroupoid>, target: Arc<FiniteGroupoid>) -> Result<Self> {
        if target.n_objects() != 1 || target.n_morphisms() != 1 {
            return Err(Error::InvalidInput("target is not the point".into()));
        }
        let obj_map = vec![0; source.n_objects()];
        let mor_map = vec![0; source.n_morphisms()];
        Ok(GroupoidMap {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    /// The inclusion of the point at object `y`.
    pub fn point_inclusion(
        point: Arc<FiniteGroupoid>,
        target: Arc<FiniteGroupoid>,
        y: usize,
    ) -> Result<Self> {
        if y >= target.n_objects() {
            return Err(Error::Index(format!(
                "object {y} out of range 0..{}",
                target.n_objects()
            )));
        }
        GroupoidMap::new(point, target.clone(), vec![y], vec![target.identity(y)])
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        &self.target
    }

    pub fn obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f]
    }

    pub fn obj_map(&self) -> &[usize] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GroupoidMap) -> Result<GroupoidMap> {
        if !Arc::ptr_eq(&self.target, &next.source) && self.target != next.source {
            return Err(Error::Composition("maps are not composable".into()));
        }
        Ok(GroupoidMap {
            source: self.source.clone(),
            target: next.target.clone(),
            obj_map: self.obj_map.iter().map(|&y| next.obj_map[y]).collect(),
            mor_map: self.mor_map.iter().map(|&g| next.mor_map[g]).collect(),
        })
    }

    /// Component of the target hit by each source component.
    pub fn component_map(&self) -> Vec<usize> {
        (0..self.source.n_components())
            .map(|c| {
                self.target
                    .component_of(self.obj_map[self.source.representative(c)])
            })
            .collect()
    }

    pub fn is_injective_on_morphisms(&self) -> bool {
        let mut hit = vec![false; self.target.n_morphisms()];
        self.mor_map
            .iter()
            .all(|&g| !std::mem::replace(&mut hit[g], true))
    }

    /// Whether the map is an isomorphism of groupoids.
    pub fn is_isomorphism(&self) -> bool {
        self.source.n_objects() == self.target.n_objects()
            && self.source.n_morphisms() == self.target.n_morphisms()
            && self.is_injective_on_morphisms()
    }

    /// Whether the map is fully faithful: injective on components and
    /// bijective on automorphism groups.
    pub fn is_fully_faithful(&self) -> bool {
        self.fully_faithful_hits().is_some()
    }

    /// Whether the map is fully faithful and essentially surjective.
    pub fn is_equivalence(&self) -> bool {
        self.fully_faithful_hits()
            .is_some_and(|hit| hit.into_iter().all(|h| h))
    }

    /// For a fully faithful map, which target components are hit.
    fn fully_faithful_hits(&self) -> Option<Vec<bool>> {
        let (x, y) = (&*self.source, &*self.target);
        let mut hit = vec![false; y.n_components()];
        for c in 0..x.n_components() {
            let rep = x.representative(c);
            let d = y.component_of(self.obj_map[rep]);
            if std::mem::replace(&mut hit[d], true) {
                return None;
            }
            if x.aut_group(c).order() != y.automorphisms(self.obj_map[rep]).len() {
                return None;
            }
            let mut images: Vec<MorId> = x
                .automorphisms(rep)
                .iter()
                .map(|&f| self.mor_map[f])
                .collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != x.aut_group(c).order() {
                return None;
            }
        }
        Some(hit)
    }
}
