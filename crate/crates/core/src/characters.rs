//! Rational representations of finite groups, induction, characters as
//! class functions on free loop groupoids, and chromatic cardinalities.
//!
//! A character of `G` is a class function on `L BG`, whose objects are the
//! elements of `G` and whose components are the conjugacy classes.
//! Induction along `H ≤ G` corresponds to integration along `L BH -> L BG`;
//! [`verify_induction_square`] and [`p_typical_character_square`] compare
//! the two sides exactly.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::{delooping, Elem, FiniteGroup, FiniteGroupoid, GroupoidMap};
use crate::loops::{
    free_loop, free_loop_map, iterated_p_free_loop, loop_map, p_free_loop, LoopGroupoid,
    PAdicLoopParams,
};
use crate::matrix::ExactMatrix;
use crate::rational::{self, Rational};
use crate::spans::{integrate, ClassFunction};

/// A representation of a finite group on `Q^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRep {
    group: FiniteGroup,
    dim: usize,
    images: Vec<ExactMatrix>,
}

impl RationalRep {
    /// Validates shapes and the homomorphism property. Multiplicativity is
    /// checked against a generating set, which determines it everywhere.
    pub fn new(group: FiniteGroup, images: Vec<ExactMatrix>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} images for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let dim = images[group.identity()].rows();
        if let Some(g) = images.iter().position(|m| m.shape() != (dim, dim)) {
            return Err(Error::Shape(format!(
                "image of element {g} is not {dim}x{dim}"
            )));
        }
        if !images[group.identity()].is_identity() {
            return Err(Error::InvalidInput(
                "the identity does not act as the identity".into(),
            ));
        }
        for s in group.generators() {
            for g in group.elements() {
                if images[group.mul(g, s)] != images[g].mul(&images[s]) {
                    return Err(Error::InvalidInput(format!(
                        "not a homomorphism at ({g}, {s})"
                    )));
                }
            }
        }
        Ok(RationalRep { group, dim, images })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, g: Elem) -> &ExactMatrix {
        &self.images[g]
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        let images = vec![ExactMatrix::identity(1); group.order()];
        RationalRep {
            group: group.clone(),
            dim: 1,
            images,
        }
    }

    /// Permutation representation of an action on `0..n_points`, with
    /// `g` sending basis vector `i` to basis vector `action(g, i)`.
    pub fn permutation(
        group: &FiniteGroup,
        n_points: usize,
        action: impl Fn(Elem, usize) -> usize,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(group.order());
        for g in group.elements() {
            let mut m = ExactMatrix::zeros(n_points, n_points);
            let mut hit = vec![false; n_points];
            for i in 0..n_points {
                let j = action(g, i);
                if j >= n_points || std::mem::replace(&mut hit[j], true) {
                    return Err(Error::InvalidInput(format!(
                        "element {g} does not act by a permutation"
                    )));
                }
                m.set(j, i, rational::one());
            }
            images.push(m);
        }
        RationalRep::new(group.clone(), images)
    }

    /// Left multiplication on the group itself.
    pub fn regular(group: &FiniteGroup) -> Self {
        RationalRep::permutation(group, group.order(), |g, i| group.mul(g, i))
            .expect("regular representation")
    }

    /// Left multiplication on the cosets `gK` of a subgroup, ordered as in
    /// [`FiniteGroup::left_cosets`].
    pub fn coset_permutation(group: &FiniteGroup, subgroup: &[Elem]) -> Result<Self> {
        if !group.is_subgroup(subgroup) {
            return Err(Error::InvalidInput("element set is not a subgroup".into()));
        }
        let cosets = group.left_cosets(subgroup);
        let mut coset_of = vec![0; group.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x] = i;
            }
        }
        RationalRep::permutation(group, cosets.len(), |g, i| {
            coset_of[group.mul(g, cosets[i][0])]
        })
    }

    /// The sign of left multiplication on the group's elements, a
    /// one-dimensional representation with values ±1. For `C_2` and `S_3`
    /// this is the usual sign character.
    pub fn sign(group: &FiniteGroup) -> Self {
        let images = group
            .elements()
            .map(|g| {
                // left multiplication by g has |G|/ord(g) cycles of length ord(g)
                let k = group.element_order(g);
                let odd = k.is_multiple_of(2) && (group.order() / k) % 2 == 1;
                ExactMatrix::scalar(rational::int(if odd { -1 } else { 1 }))
            })
            .collect();
        RationalRep {
            group: group.clone(),
            dim: 1,
            images,
        }
    }

    pub fn direct_sum(&self, other: &RationalRep) -> Result<Self> {
        self.same_group(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| ExactMatrix::block_diag(&[a.clone(), b.clone()]))
            .collect();
        Ok(RationalRep {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            images,
        })
    }

    pub fn tensor(&self, other: &RationalRep) -> Result<Self> {
        self.same_group(other)?;
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| kronecker(a, b))
            .collect();
        Ok(RationalRep {
            group: self.group.clone(),
            dim: self.dim * other.dim,
            images,
        })
    }

    fn same_group(&self, other: &RationalRep) -> Result<()> {
        if self.group != other.group {
            return Err(Error::InvalidInput(
                "representations of different groups".into(),
            ));
        }
        Ok(())
    }
}

fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (br, bc) = b.shape();
    ExactMatrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a.get(i / br, j / bc) * b.get(i % br, j % bc)
    })
}

/// Traces of `rho` on the objects of a loop groupoid over a one-object
/// groupoid whose automorphism group is `rho`'s group. Every object is
/// evaluated, so a value that is not constant on a class is reported.
fn character_on(rho: &RationalRep, loops: &LoopGroupoid) -> Result<ClassFunction> {
    let base = loops.base_projection.target();
    let lg = &loops.underlying;
    let mut values: Vec<Option<Rational>> = vec![None; lg.n_components()];
    for (o, &(_, g)) in loops.objects.iter().enumerate() {
        let t = rho.image(base.slot(g)).trace();
        match &values[lg.component_of(o)] {
            None => values[lg.component_of(o)] = Some(t),
            Some(v) if *v == t => {}
            Some(v) => {
                return Err(Error::TheoremViolation(format!(
                    "trace {t} at loop {o} differs from {v} elsewhere in its class"
                )))
            }
        }
    }
    ClassFunction::new(
        lg.clone(),
        values
            .into_iter()
            .map(|v| v.expect("every component has an object"))
            .collect(),
    )
}

/// The character of `rho` as a class function on `L BG`.
pub fn character(rho: &RationalRep) -> Result<ClassFunction> {
    character_on(rho, &free_loop(&Arc::new(delooping(rho.group()))))
}

/// The underlying group embedding of a map `BH -> BG`, in terms of the
/// automorphism groups of the two objects.
fn embedding(h_in_g: &GroupoidMap) -> Result<(FiniteGroup, FiniteGroup, Vec<Elem>)> {
    let (bh, bg) = (h_in_g.source(), h_in_g.target());
    if bh.n_objects() != 1 || bg.n_objects() != 1 {
        return Err(Error::InvalidInput(
            "induction needs a map between one-object groupoids".into(),
        ));
    }
    if !h_in_g.is_injective_on_morphisms() {
        return Err(Error::InvalidInput(
            "the map on morphisms is not injective".into(),
        ));
    }
    let h = bh.aut_group(0).clone();
    let g = bg.aut_group(0).clone();
    let phi = h
        .elements()
        .map(|e| bg.slot(h_in_g.mor(bh.aut_morphism(0, e))))
        .collect();
    Ok((h, g, phi))
}

/// The induced representation, on `⊕_j t_j V` for the coset representatives
/// `t_j` (least element of each coset). The block `(j, i)` of `g` is
/// `ρ(t_j⁻¹ g t_i)` when that lies in `H`, and zero otherwise.
pub fn induce(h_in_g: &GroupoidMap, rho: &RationalRep) -> Result<RationalRep> {
    let (h, g, phi) = embedding(h_in_g)?;
    if &h != rho.group() {
        return Err(Error::InvalidInput(
            "representation is not of the source group".into(),
        ));
    }
    let mut pre = vec![None; g.order()];
    for e in h.elements() {
        pre[phi[e]] = Some(e);
    }
    let image: Vec<Elem> = g.elements().filter(|&x| pre[x].is_some()).collect();
    let reps: Vec<Elem> = g
        .left_cosets(&image)
        .iter()
        .map(|c| *c.iter().min().expect("nonempty coset"))
        .collect();
    let d = rho.dim();
    let n = reps.len();
    let images = g
        .elements()
        .map(|x| {
            let mut m = ExactMatrix::zeros(n * d, n * d);
            for (i, &ti) in reps.iter().enumerate() {
                for (j, &tj) in reps.iter().enumerate() {
                    if let Some(e) = pre[g.mul(g.inv(tj), g.mul(x, ti))] {
                        m.paste(j * d, i * d, rho.image(e));
                    }
                }
            }
            m
        })
        .collect();
    RationalRep::new(g, images).map_err(|e| {
        Error::TheoremViolation(format!("induced representation is not a homomorphism: {e}"))
    })
}

/// Integrates a class function on `L BH` along `L BH -> L BG`.
pub fn induced_character_via_integration(
    h_in_g: &GroupoidMap,
    phi: &ClassFunction,
) -> Result<ClassFunction> {
    let (lx, _, lf) = free_loop_map(h_in_g)?;
    if phi.base != lx.underlying {
        return Err(Error::InvalidInput(
            "class function is not on the free loop groupoid of the source".into(),
        ));
    }
    integrate(&lf, phi)
}

/// One row of an induction report: a class of loops in `L BG` (or its
/// p-typical part), named by a representative element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassValues {
    pub representative: Elem,
    pub class_size: usize,
    /// Character of the induced representation.
    pub induced: Rational,
    /// Integral of the character along the loop map.
    pub integrated: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionReport {
    pub holds: bool,
    pub classes: Vec<ClassValues>,
}

fn report(
    loops: &LoopGroupoid,
    induced: &ClassFunction,
    integrated: &ClassFunction,
) -> InductionReport {
    let lg = &loops.underlying;
    let base = loops.base_projection.target();
    let classes: Vec<ClassValues> = (0..lg.n_components())
        .map(|c| ClassValues {
            representative: base.slot(loops.objects[lg.representative(c)].1),
            class_size: lg.component_members(c).len(),
            induced: induced.values[c].clone(),
            integrated: integrated.values[c].clone(),
        })
        .collect();
    let holds = classes.iter().all(|r| r.induced == r.integrated);
    InductionReport { holds, classes }
}

fn square(h_in_g: &GroupoidMap, rho: &RationalRep, p: Option<u64>) -> Result<InductionReport> {
    let (h, _, _) = embedding(h_in_g)?;
    if &h != rho.group() {
        return Err(Error::InvalidInput(
            "representation is not of the source group".into(),
        ));
    }
    let (lx, ly, lf) = match p {
        None => free_loop_map(h_in_g)?,
        Some(p) => {
            let lf = loop_map(h_in_g, PAdicLoopParams::new(p, 1)?)?;
            (
                p_free_loop(h_in_g.source(), p)?,
                p_free_loop(h_in_g.target(), p)?,
                lf,
            )
        }
    };
    let induced = character_on(&induce(h_in_g, rho)?, &ly)?;
    let integrated = integrate(&lf, &character_on(rho, &lx)?)?;
    Ok(report(&ly, &induced, &integrated))
}

/// Compares the character of the induced representation with the integral
/// of the character along `L BH -> L BG`.
pub fn verify_induction_square(h_in_g: &GroupoidMap, rho: &RationalRep) -> Result<InductionReport> {
    square(h_in_g, rho, None)
}

/// The same comparison on loops of p-power order.
pub fn p_typical_character_square(
    h_in_g: &GroupoidMap,
    rho: &RationalRep,
    p: u64,
) -> Result<InductionReport> {
    square(h_in_g, rho, Some(p))
}

/// `|L_p^n X|`. For `n ≥ 1` the result is checked to lie in Z_(p); at
/// `n = 0` it is the plain cardinality, which need not.
pub fn chromatic_cardinality(x: &Arc<FiniteGroupoid>, p: u64, n: usize) -> Result<Rational> {
    let lx = iterated_p_free_loop(x, PAdicLoopParams::new(p, n)?)?;
    let c = lx.cardinality();
    if n > 0 && !rational::is_p_local_integer(&c, p) {
        return Err(Error::TheoremViolation(format!(
            "height {n} cardinality {c} is not {p}-local"
        )));
    }
    Ok(c)
}

/// Pairwise commuting `n`-tuples of p-power-order elements of `g`, counted
/// by exhaustive search and divided by `|G|`.
pub fn chromatic_cardinality_oracle(g: &FiniteGroup, p: u64, n: usize) -> Rational {
    fn count(g: &FiniteGroup, pool: &[Elem], chosen: &mut Vec<Elem>, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &e in pool {
            if chosen.iter().all(|&a| g.mul(a, e) == g.mul(e, a)) {
                chosen.push(e);
                total += count(g, pool, chosen, left - 1);
                chosen.pop();
            }
        }
        total
    }
    let pool: Vec<Elem> = g
        .elements()
        .filter(|&e| {
            let mut k = g.element_order(e) as u64;
            while k.is_multiple_of(p) {
                k /= p;
            }
            k == 1
        })
        .collect();
    rational::ratio(count(g, &pool, &mut Vec::new(), n) as i64, g.order() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::{delooping_map, point};
    use crate::rational::int;

    fn inclusion(g: &FiniteGroup, sub: &[Elem]) -> (FiniteGroup, GroupoidMap) {
        let (h, emb) = g.restrict_to(sub).unwrap();
        let m = delooping_map(Arc::new(delooping(&h)), Arc::new(delooping(g)), emb).unwrap();
        (h, m)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    // S_3 classes come out as (e, transpositions, 3-cycles) in this encoding.
    fn s3_class_order(cf: &ClassFunction) -> Vec<Rational> {
        let l = free_loop(&Arc::new(delooping(&FiniteGroup::symmetric(3))));
        let g = FiniteGroup::symmetric(3);
        let mut by_order: Vec<(usize, Rational)> = (0..cf.values.len())
            .map(|c| {
                (
                    g.element_order(l.objects[l.underlying.representative(c)].1),
                    cf.values[c].clone(),
                )
            })
            .collect();
        by_order.sort_by_key(|e| e.0);
        by_order.into_iter().map(|e| e.1).collect()
    }

    #[test]
    fn basic_characters() {
        let s3 = FiniteGroup::symmetric(3);
        let triv = character(&RationalRep::trivial(&s3)).unwrap();
        assert!(triv.values.iter().all(|v| *v == int(1)));
        assert_eq!(
            s3_class_order(&character(&RationalRep::regular(&s3)).unwrap()),
            ints(&[6, 0, 0])
        );
        let points = RationalRep::coset_permutation(&s3, &inclusion_subgroup(&s3, 2)).unwrap();
        assert_eq!(points.dim(), 3);
        assert_eq!(
            s3_class_order(&character(&points).unwrap()),
            ints(&[3, 1, 0])
        );
        assert_eq!(
            s3_class_order(&character(&RationalRep::sign(&s3)).unwrap()),
            ints(&[1, -1, 1])
        );
    }

    fn inclusion_subgroup(g: &FiniteGroup, order: usize) -> Vec<Elem> {
        g.subgroups()
            .into_iter()
            .find(|s| s.len() == order)
            .unwrap()
    }

    #[test]
    fn sums_and_tensors() {
        let d4 = FiniteGroup::dihedral(4);
        let a = RationalRep::regular(&d4);
        let b = RationalRep::sign(&d4);
        let (ca, cb) = (character(&a).unwrap(), character(&b).unwrap());
        let sum: Vec<Rational> = ca
            .values
            .iter()
            .zip(&cb.values)
            .map(|(x, y)| x + y)
            .collect();
        assert_eq!(character(&a.direct_sum(&b).unwrap()).unwrap().values, sum);
        assert_eq!(
            character(&a.tensor(&b).unwrap()).unwrap(),
            ca.mul(&cb).unwrap()
        );
    }

    #[test]
    fn induction_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let (c2, f) = inclusion(&s3, &inclusion_subgroup(&s3, 2));
        let ind = induce(&f, &RationalRep::sign(&c2)).unwrap();
        assert_eq!(ind.dim(), 3);
        assert_eq!(s3_class_order(&character(&ind).unwrap()), ints(&[3, -1, 0]));
        let r = verify_induction_square(&f, &RationalRep::sign(&c2)).unwrap();
        assert!(r.holds);
        let phi = character(&RationalRep::sign(&c2)).unwrap();
        let via = induced_character_via_integration(&f, &phi).unwrap();
        assert_eq!(s3_class_order(&via), ints(&[3, -1, 0]));

        let (a3, f) = inclusion(&s3, &inclusion_subgroup(&s3, 3));
        let r = verify_induction_square(&f, &RationalRep::regular(&a3)).unwrap();
        assert!(r.holds);
        let mut vals: Vec<(usize, Rational)> = r
            .classes
            .iter()
            .map(|c| (s3.element_order(c.representative), c.induced.clone()))
            .collect();
        vals.sort_by_key(|v| v.0);
        assert_eq!(
            vals.into_iter().map(|v| v.1).collect::<Vec<_>>(),
            ints(&[6, 0, 0])
        );

        let r = p_typical_character_square(&f, &RationalRep::regular(&a3), 3).unwrap();
        assert!(r.holds);
        assert_eq!(r.classes.len(), 2);
        let (c2, f) = inclusion(&s3, &inclusion_subgroup(&s3, 2));
        let r = p_typical_character_square(&f, &RationalRep::sign(&c2), 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.classes.len(), 2);
        let r = p_typical_character_square(&f, &RationalRep::sign(&c2), 5).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert!(r.holds);
    }

    #[test]
    fn induction_of_trivial_is_coset_permutation() {
        let s4 = FiniteGroup::symmetric(4);
        for sub in s4.subgroups() {
            let (h, f) = inclusion(&s4, &sub);
            let ind = character(&induce(&f, &RationalRep::trivial(&h)).unwrap()).unwrap();
            let perm = character(&RationalRep::coset_permutation(&s4, &sub).unwrap()).unwrap();
            assert_eq!(ind, perm);
        }
    }

    #[test]
    fn non_injective_maps_are_rejected() {
        let c2 = FiniteGroup::cyclic(2);
        let f = GroupoidMap::to_point(Arc::new(delooping(&c2)), Arc::new(point())).unwrap();
        assert!(matches!(
            induce(&f, &RationalRep::trivial(&c2)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn chromatic_examples() {
        let pt = Arc::new(point());
        assert_eq!(chromatic_cardinality(&pt, 5, 3).unwrap(), int(1));
        for p in [2u64, 3, 5] {
            let bc = Arc::new(delooping(&FiniteGroup::cyclic(p as usize)));
            for n in 1..=3 {
                assert_eq!(
                    chromatic_cardinality(&bc, p, n).unwrap(),
                    int((p as i64).pow(n as u32 - 1))
                );
            }
            assert_eq!(
                chromatic_cardinality_oracle(&FiniteGroup::cyclic(p as usize), p, 2),
                int(p as i64)
            );
        }
        let s3 = FiniteGroup::symmetric(3);
        let bs3 = Arc::new(delooping(&s3));
        assert_eq!(
            chromatic_cardinality(&bs3, 2, 1).unwrap(),
            rational::ratio(2, 3)
        );
        assert_eq!(
            chromatic_cardinality(&bs3, 2, 2).unwrap(),
            rational::ratio(5, 3)
        );
        assert_eq!(
            chromatic_cardinality_oracle(&s3, 2, 2),
            rational::ratio(5, 3)
        );
        assert_eq!(
            chromatic_cardinality_oracle(&FiniteGroup::trivial(), 3, 2),
            int(1)
        );
        assert_eq!(
            chromatic_cardinality(&bs3, 3, 0).unwrap(),
            rational::ratio(1, 6)
        );
    }
}
