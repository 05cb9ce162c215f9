//! Finite groupoids.
//!
//! Every connected component is stored as a torsor over the automorphism
//! group of its representative (the lowest object index). Each object `x`
//! carries a chosen morphism `t_x: x -> rep` (the identity on the
//! representative, otherwise the lowest-id morphism), and a morphism
//! `f: a -> b` is encoded by its slot `t_b ∘ f ∘ t_a⁻¹` in `Aut(rep)`.
//! Composition is then group multiplication followed by a table lookup.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grpd::group::{Elem, FiniteGroup};
use crate::rational::{self, Rational};

/// Index of a morphism.
pub type MorId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Component {
    rep: usize,
    members: Vec<usize>,
    aut: FiniteGroup,
    /// Morphism id of each element of `aut`.
    aut_mor: Vec<MorId>,
    /// `homs[(la * k + lb) * n + s]` is the morphism `a -> b` with slot `s`.
    homs: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    n_obj: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<MorId>,
    out: Vec<Vec<MorId>>,
    out_pos: Vec<usize>,
    comp_of: Vec<usize>,
    local: Vec<usize>,
    to_rep: Vec<MorId>,
    from_rep: Vec<MorId>,
    slot: Vec<Elem>,
    components: Vec<Component>,
}

/// A skeleton: one representative per component with its automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub components: Vec<SkeletonComponent>,
    pub component_of: Vec<usize>,
    pub iso_to_rep: Vec<MorId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonComponent {
    pub representative: usize,
    pub automorphisms: FiniteGroup,
    /// Morphism id of each element of `automorphisms`.
    pub aut_morphisms: Vec<MorId>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from morphism endpoints and a composition function,
    /// validating the category and groupoid axioms on every composable pair.
    ///
    /// `comp(g, f)` is only called when `tgt(f) == src(g)`.
    pub fn from_composition<C>(
        n_objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        comp: C,
    ) -> Result<Self>
    where
        C: Fn(MorId, MorId) -> MorId,
    {
        let m = src.len();
        if tgt.len() != m {
            return Err(Error::Format(format!(
                "{m} sources but {} targets",
                tgt.len()
            )));
        }
        if let Some(&x) = src.iter().chain(&tgt).find(|&&x| x >= n_objects) {
            return Err(Error::Index(format!(
                "object {x} out of range 0..{n_objects}"
            )));
        }
        let checked = |g: MorId, f: MorId| -> Result<MorId> {
            let h = comp(g, f);
            if h >= m || src[h] != src[f] || tgt[h] != tgt[g] {
                return Err(Error::Composition(format!(
                    "composite of {g} after {f} has the wrong endpoints"
                )));
            }
            Ok(h)
        };

        let mut hom_lists: HashMap<(usize, usize), Vec<MorId>> = HashMap::new();
        let mut out = vec![Vec::new(); n_objects];
        let mut out_pos = vec![0; m];
        for f in 0..m {
            hom_lists.entry((src[f], tgt[f])).or_default().push(f);
            out_pos[f] = out[src[f]].len();
            out[src[f]].push(f);
        }

        // identities: the unique idempotent endomorphism of each object
        let mut identity = vec![usize::MAX; n_objects];
        for x in 0..n_objects {
            let ends = hom_lists.get(&(x, x)).map(Vec::as_slice).unwrap_or(&[]);
            for &e in ends {
                if checked(e, e)? == e {
                    identity[x] = e;
                    break;
                }
            }
            if identity[x] == usize::MAX {
                return Err(Error::Composition(format!(
                    "object {x} has no identity morphism"
                )));
            }
        }

        // connected components, indexed in order of their least object
        let mut parent: Vec<usize> = (0..n_objects).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for f in 0..m {
            let (a, b) = (find(&mut parent, src[f]), find(&mut parent, tgt[f]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comp_of = vec![usize::MAX; n_objects];
        let mut local = vec![0; n_objects];
        let mut members_of: Vec<Vec<usize>> = Vec::new();
        for x in 0..n_objects {
            let root = find(&mut parent, x);
            if comp_of[root] == usize::MAX {
                comp_of[root] = members_of.len();
                members_of.push(Vec::new());
            }
            let c = comp_of[root];
            comp_of[x] = c;
            local[x] = members_of[c].len();
            members_of[c].push(x);
        }

        // chosen morphisms to and from the representative
        let mut to_rep = vec![0; n_objects];
        let mut from_rep = vec![0; n_objects];
        for members in &members_of {
            let rep = members[0];
            for &x in members {
                if x == rep {
                    to_rep[x] = identity[x];
                    from_rep[x] = identity[x];
                    continue;
                }
                let t = *hom_lists
                    .get(&(x, rep))
                    .and_then(|v| v.first())
                    .ok_or_else(|| {
                        Error::Composition(format!("object {x} has no morphism to {rep}"))
                    })?;
                let back = hom_lists.get(&(rep, x)).map(Vec::as_slice).unwrap_or(&[]);
                let mut inv = None;
                for &u in back {
                    if checked(t, u)? == identity[rep] {
                        inv = Some(u);
                        break;
                    }
                }
                to_rep[x] = t;
                from_rep[x] =
                    inv.ok_or_else(|| Error::Composition(format!("morphism {t} has no inverse")))?;
            }
        }

        // automorphism groups and slots
        let mut slot = vec![usize::MAX; m];
        let mut components = Vec::with_capacity(members_of.len());
        for (c, members) in members_of.into_iter().enumerate() {
            let rep = members[0];
            let aut_mor = hom_lists[&(rep, rep)].clone();
            let n = aut_mor.len();
            let elem_of: HashMap<MorId, Elem> =
                aut_mor.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let mut table = Vec::with_capacity(n * n);
            for &a in &aut_mor {
                for &b in &aut_mor {
                    table.push(elem_of[&checked(a, b)?]);
                }
            }
            let aut = FiniteGroup::from_flat_table(n, table)
                .map_err(|e| Error::Composition(format!("automorphisms of object {rep}: {e}")))?;
            if aut_mor[aut.identity()] != identity[rep] {
                return Err(Error::Composition(format!(
                    "identity of object {rep} is not the group identity"
                )));
            }
            let k = members.len();
            let mut homs = vec![usize::MAX; k * k * n];
            for &a in &members {
                for &f in &out[a] {
                    let b = tgt[f];
                    let s_mor = checked(to_rep[b], checked(f, from_rep[a])?)?;
                    let s = elem_of[&s_mor];
                    slot[f] = s;
                    let cell = &mut homs[(local[a] * k + local[b]) * n + s];
                    if *cell != usize::MAX {
                        return Err(Error::Composition(format!(
                            "morphisms {} and {f} from {a} to {b} are indistinguishable",
                            *cell
                        )));
                    }
                    *cell = f;
                }
            }
            if homs.contains(&usize::MAX) {
                return Err(Error::Composition(format!(
                    "component {c} is not a groupoid: some hom-set is smaller than the automorphism group"
                )));
            }
            components.push(Component {
                rep,
                members,
                aut,
                aut_mor,
                homs,
            });
        }

        let g = FiniteGroupoid {
            n_obj: n_objects,
            src: src.clone(),
            tgt: tgt.clone(),
            identity,
            out,
            out_pos,
            comp_of,
            local,
            to_rep,
            from_rep,
            slot,
            components,
        };
        for x in 0..n_objects {
            if g.slot[g.identity[x]] != g.components[g.comp_of[x]].aut.identity() {
                return Err(Error::Composition(format!(
                    "identity of object {x} is inconsistent"
                )));
            }
        }
        // the encoded model is a groupoid; the input must agree with it
        for f in 0..m {
            for &h in &g.out[g.tgt[f]] {
                if checked(h, f)? != g.compose(h, f) {
                    return Err(Error::Composition(format!(
                        "composition fails associativity at ({h}, {f})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn n_objects(&self) -> usize {
        self.n_obj
    }

    pub fn n_morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: MorId) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: MorId) -> usize {
        self.tgt[f]
    }

    pub fn identity(&self, x: usize) -> MorId {
        self.identity[x]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.src[f]] == f
    }

    /// `g ∘ f`. Panics unless `tgt(f) == src(g)`.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        assert_eq!(
            self.tgt[f], self.src[g],
            "morphisms {g} and {f} are not composable"
        );
        let c = &self.components[self.comp_of[self.src[f]]];
        self.lookup(
            c,
            self.src[f],
            self.tgt[g],
            c.aut.mul(self.slot[g], self.slot[f]),
        )
    }

    /// `g ∘ f`, or a composition error when the endpoints do not match.
    pub fn try_compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        if g >= self.n_morphisms() || f >= self.n_morphisms() {
            return Err(Error::Index(format!(
                "morphism out of range 0..{}",
                self.n_morphisms()
            )));
        }
        if self.tgt[f] != self.src[g] {
            return Err(Error::Composition(format!(
                "morphisms {g} and {f} are not composable"
            )));
        }
        Ok(self.compose(g, f))
    }

    pub fn inverse(&self, f: MorId) -> MorId {
        let c = &self.components[self.comp_of[self.src[f]]];
        self.lookup(c, self.tgt[f], self.src[f], c.aut.inv(self.slot[f]))
    }

    fn lookup(&self, c: &Component, a: usize, b: usize, s: Elem) -> MorId {
        let k = c.members.len();
        c.homs[(self.local[a] * k + self.local[b]) * c.aut.order() + s]
    }

    /// Morphisms out of `x`, in increasing id order.
    pub fn out(&self, x: usize) -> &[MorId] {
        &self.out[x]
    }

    /// Position of `f` in `out(src(f))`.
    pub fn out_pos(&self, f: MorId) -> usize {
        self.out_pos[f]
    }

    /// Morphisms `a -> b` in increasing id order (empty across components).
    pub fn hom(&self, a: usize, b: usize) -> Vec<MorId> {
        if self.comp_of[a] != self.comp_of[b] {
            return Vec::new();
        }
        let c = &self.components[self.comp_of[a]];
        let n = c.aut.order();
        let k = c.members.len();
        let start = (self.local[a] * k + self.local[b]) * n;
        let mut v = c.homs[start..start + n].to_vec();
        v.sort_unstable();
        v
    }

    /// Automorphisms of `x` in increasing id order.
    pub fn automorphisms(&self, x: usize) -> Vec<MorId> {
        self.hom(x, x)
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, x: usize) -> usize {
        self.comp_of[x]
    }

    pub fn representative(&self, c: usize) -> usize {
        self.components[c].rep
    }

    pub fn component_members(&self, c: usize) -> &[usize] {
        &self.components[c].members
    }

    /// Automorphism group of the representative of component `c`.
    pub fn aut_group(&self, c: usize) -> &FiniteGroup {
        &self.components[c].aut
    }

    /// The morphism realizing element `e` of `aut_group(c)`.
    pub fn aut_morphism(&self, c: usize, e: Elem) -> MorId {
        self.components[c].aut_mor[e]
    }

    /// The chosen morphism `x -> rep`.
    pub fn to_rep(&self, x: usize) -> MorId {
        self.to_rep[x]
    }

    /// The inverse of [`to_rep`](Self::to_rep).
    pub fn from_rep(&self, x: usize) -> MorId {
        self.from_rep[x]
    }

    /// The element `t_b ∘ f ∘ t_a⁻¹` of the component's automorphism group.
    pub fn slot(&self, f: MorId) -> Elem {
        self.slot[f]
    }

    /// The unique morphism `a -> b` with the given slot.
    pub fn morphism_with_slot(&self, a: usize, b: usize, s: Elem) -> MorId {
        let c = &self.components[self.comp_of[a]];
        assert_eq!(
            self.comp_of[a], self.comp_of[b],
            "objects {a} and {b} lie in different components"
        );
        self.lookup(c, a, b, s)
    }

    pub fn skeleton(&self) -> Skeleton {
        Skeleton {
            components: self
                .components
                .iter()
                .map(|c| SkeletonComponent {
                    representative: c.rep,
                    automorphisms: c.aut.clone(),
                    aut_morphisms: c.aut_mor.clone(),
                })
                .collect(),
            component_of: self.comp_of.clone(),
            iso_to_rep: self.to_rep.clone(),
        }
    }

    /// Homotopy cardinality: the sum of `1/|Aut|` over components.
    pub fn cardinality(&self) -> Rational {
        self.components
            .iter()
            .map(|c| rational::ratio(1, c.aut.order() as i64))
            .fold(rational::zero(), |a, b| a + b)
    }

    pub fn is_discrete(&self) -> bool {
        self.n_morphisms() == self.n_obj
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

/// Connected components, representatives and automorphism groups.
pub fn skeletize(x: &FiniteGroupoid) -> Skeleton {
    x.skeleton()
}

/// Baez–Dolan homotopy cardinality.
pub fn cardinality(x: &FiniteGroupoid) -> Rational {
    x.cardinality()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_object_c2() -> FiniteGroupoid {
        // objects 0, 1; Hom(a, b) = {2 morphisms} for all a, b
        // morphism (a, b, s) has id (a*2 + b)*2 + s, slot s in C_2
        let src: Vec<usize> = (0..8).map(|i| i / 4).collect();
        let tgt: Vec<usize> = (0..8).map(|i| (i / 2) % 2).collect();
        FiniteGroupoid::from_composition(2, src, tgt, |g, f| {
            let (a, s1) = (f / 4, f % 2);
            let (c, s2) = ((g / 2) % 2, g % 2);
            (a * 2 + c) * 2 + (s1 ^ s2)
        })
        .unwrap()
    }

    #[test]
    fn torsor_encoding_recovers_composition() {
        let g = two_object_c2();
        assert_eq!(g.n_components(), 1);
        assert_eq!(g.aut_group(0).order(), 2);
        assert_eq!(g.to_rep(1), 4);
        for f in 0..8 {
            assert_eq!(g.compose(g.inverse(f), f), g.identity(g.src(f)));
            assert_eq!(g.compose(f, g.inverse(f)), g.identity(g.tgt(f)));
        }
        assert_eq!(g.cardinality(), rational::ratio(1, 2));
    }

    #[test]
    fn rejects_non_associative_or_partial_data() {
        // endpoints out of range
        assert!(FiniteGroupoid::from_composition(1, vec![0, 1], vec![0, 0], |_, f| f).is_err());
        // missing identity: one endomorphism squaring to a different one
        let bad = FiniteGroupoid::from_composition(1, vec![0, 0], vec![0, 0], |_, _| 1);
        assert!(bad.is_err());
        // a morphism 0 -> 1 with no inverse
        let bad = FiniteGroupoid::from_composition(2, vec![0, 1, 0], vec![0, 1, 1], |g, f| {
            if g == 0 || g == 1 {
                f
            } else {
                g
            }
        });
        assert!(matches!(bad, Err(Error::Composition(_))));
    }

    #[test]
    fn hom_sets_and_slots() {
        let g = two_object_c2();
        assert_eq!(g.hom(0, 1), vec![2, 3]);
        for f in 0..8 {
            let (a, b) = (g.src(f), g.tgt(f));
            assert_eq!(g.morphism_with_slot(a, b, g.slot(f)), f);
        }
        let sk = skeletize(&g);
        assert_eq!(sk.iso_to_rep, vec![g.identity(0), 4]);
    }
}
