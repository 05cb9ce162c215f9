//! Spans of finite groupoids and their linearization to class functions.
//!
//! A span `X <- A -> Y` acts on rational class functions by restricting
//! along the left leg and integrating along the right leg. Integration sums
//! over the components of each homotopy fiber, weighted by the inverse
//! order of their automorphism groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grpd::{homotopy_fiber, homotopy_pullback, FiniteGroupoid, GroupoidMap, Skeleton};
use crate::matrix::ExactMatrix;
use crate::rational::{self, Rational};

#[derive(Clone, Debug)]
pub struct Span {
    pub left_foot: Arc<FiniteGroupoid>,
    pub right_foot: Arc<FiniteGroupoid>,
    pub apex: Arc<FiniteGroupoid>,
    pub left_leg: GroupoidMap,
    pub right_leg: GroupoidMap,
}

impl Span {
    pub fn new(left_leg: GroupoidMap, right_leg: GroupoidMap) -> Result<Self> {
        if !same(left_leg.source(), right_leg.source()) {
            return Err(Error::Composition(
                "span legs must share their source".into(),
            ));
        }
        Ok(Span {
            left_foot: left_leg.target().clone(),
            right_foot: right_leg.target().clone(),
            apex: left_leg.source().clone(),
            left_leg,
            right_leg,
        })
    }

    pub fn linearize(&self) -> Result<ExactMatrix> {
        linearize(self)
    }
}

fn same(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `X <- X -> X` with identity legs.
pub fn span_identity(x: &Arc<FiniteGroupoid>) -> Span {
    let id = GroupoidMap::identity(x.clone());
    Span::new(id.clone(), id).expect("identity span")
}

/// `X <- X -> Y` with right leg `f`.
pub fn span_from_map_fwd(f: &GroupoidMap) -> Span {
    Span::new(GroupoidMap::identity(f.source().clone()), f.clone()).expect("forward span")
}

/// `Y <- X -> X` with left leg `f`.
pub fn span_from_map_bwd(f: &GroupoidMap) -> Span {
    Span::new(f.clone(), GroupoidMap::identity(f.source().clone())).expect("backward span")
}

/// Composite of `s1: X -> Y` and `s2: Y -> Z`, with apex the homotopy
/// pullback of the inner legs.
pub fn span_compose(s1: &Span, s2: &Span) -> Result<Span> {
    if !same(&s1.right_foot, &s2.left_foot) {
        return Err(Error::Composition(
            "spans do not share the middle foot".into(),
        ));
    }
    let pb = homotopy_pullback(&s1.right_leg, &s2.left_leg)?;
    let left = pb.proj_left.then(&s1.left_leg)?;
    let right = pb.proj_right.then(&s2.right_leg)?;
    Span::new(left, right)
}

/// Rational class functions on a groupoid, indexed by its components.
#[derive(Clone, Debug)]
pub struct ClassFunctionSpace {
    pub base: Arc<FiniteGroupoid>,
    pub skeleton: Skeleton,
    pub dimension: usize,
}

impl ClassFunctionSpace {
    pub fn new(base: Arc<FiniteGroupoid>) -> Self {
        let skeleton = base.skeleton();
        let dimension = skeleton.components.len();
        ClassFunctionSpace {
            base,
            skeleton,
            dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub base: Arc<FiniteGroupoid>,
    pub values: Vec<Rational>,
}

impl ClassFunction {
    pub fn new(base: Arc<FiniteGroupoid>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != base.n_components() {
            return Err(Error::Shape(format!(
                "{} values for a groupoid with {} components",
                values.len(),
                base.n_components()
            )));
        }
        Ok(ClassFunction { base, values })
    }

    pub fn constant(base: Arc<FiniteGroupoid>, q: Rational) -> Self {
        let values = vec![q; base.n_components()];
        ClassFunction { base, values }
    }

    /// Value on the component of object `x`.
    pub fn at_object(&self, x: usize) -> &Rational {
        &self.values[self.base.component_of(x)]
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.values.len() != other.values.len() {
            return Err(Error::Shape(
                "class functions on different groupoids".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(ClassFunction {
            base: self.base.clone(),
            values,
        })
    }
}

/// `(f^* φ)([x]) = φ([f x])`.
pub fn restrict(f: &GroupoidMap, phi: &ClassFunction) -> Result<ClassFunction> {
    let m = restriction_matrix(f);
    let values = apply(&m, &phi.values)?;
    ClassFunction::new(f.source().clone(), values)
}

/// Integral of `φ` along the homotopy fibers of `f`.
pub fn integrate(f: &GroupoidMap, phi: &ClassFunction) -> Result<ClassFunction> {
    let m = integration_matrix(f)?;
    let values = apply(&m, &phi.values)?;
    ClassFunction::new(f.target().clone(), values)
}

fn apply(m: &ExactMatrix, v: &[Rational]) -> Result<Vec<Rational>> {
    if v.len() != m.cols() {
        return Err(Error::Shape(format!(
            "class function has {} values, expected {}",
            v.len(),
            m.cols()
        )));
    }
    Ok(m.mul_vec(v))
}

/// Matrix of restriction, `#π0(X) × #π0(Y)`.
pub fn restriction_matrix(f: &GroupoidMap) -> ExactMatrix {
    let x = f.source();
    let cm = f.component_map();
    ExactMatrix::from_fn(x.n_components(), f.target().n_components(), |i, j| {
        if cm[i] == j {
            rational::one()
        } else {
            rational::zero()
        }
    })
}

/// Matrix of integration, `#π0(Y) × #π0(X)`.
///
/// Each row is computed from the fiber over every object of the
/// corresponding component, and the results are required to agree.
pub fn integration_matrix(f: &GroupoidMap) -> Result<ExactMatrix> {
    let (x, y) = (f.source(), f.target());
    let mut rows: Vec<Option<Vec<Rational>>> = vec![None; y.n_components()];
    for obj in 0..y.n_objects() {
        let row = fiber_row(f, obj)?;
        let slot = &mut rows[y.component_of(obj)];
        match slot {
            None => *slot = Some(row),
            Some(prev) if *prev != row => {
                return Err(Error::Internal(format!(
                    "integral depends on the representative at object {obj}"
                )));
            }
            Some(_) => {}
        }
    }
    let rows: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|r| r.expect("every component has an object"))
        .collect();
    ExactMatrix::from_rows(x.n_components(), rows)
}

/// `Σ 1/|Aut(w)|` over fiber components `w` at `y`, sorted by the source
/// component they lie over.
fn fiber_row(f: &GroupoidMap, y: usize) -> Result<Vec<Rational>> {
    let x = f.source();
    let fib = homotopy_fiber(f, y)?;
    let g = &fib.groupoid;
    let mut row = vec![rational::zero(); x.n_components()];
    for c in 0..g.n_components() {
        let w = g.representative(c);
        let xc = x.component_of(fib.objects[w].0);
        row[xc] += rational::ratio(1, g.aut_group(c).order() as i64);
    }
    Ok(row)
}

/// Matrix of the span acting on class functions: integrate after restrict.
pub fn linearize(s: &Span) -> Result<ExactMatrix> {
    Ok(integration_matrix(&s.right_leg)?.mul(&restriction_matrix(&s.left_leg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpd::{delooping, delooping_map, point, FiniteGroup};
    use crate::loops::free_loop_map;

    fn bc2_in_bs3() -> (FiniteGroup, GroupoidMap) {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        let f = delooping_map(
            Arc::new(delooping(&FiniteGroup::cyclic(2))),
            Arc::new(delooping(&s3)),
            vec![0, t],
        )
        .unwrap();
        (s3, f)
    }

    #[test]
    fn identity_and_cardinality_spans() {
        let pt = Arc::new(point());
        let s = span_identity(&pt);
        assert_eq!(s.apex.n_objects(), 1);
        assert_eq!(linearize(&s).unwrap(), ExactMatrix::identity(1));
        let bg = Arc::new(delooping(&FiniteGroup::symmetric(3)));
        let to_pt = GroupoidMap::to_point(bg.clone(), pt.clone()).unwrap();
        let card = Span::new(to_pt.clone(), to_pt.clone()).unwrap();
        assert_eq!(
            linearize(&card).unwrap(),
            ExactMatrix::scalar(rational::ratio(1, 6))
        );
    }

    #[test]
    fn torsor_composite_is_group_order() {
        // (pt <- pt -> BG) then (BG <- pt -> pt): the apex is the G-torsor,
        // |G| points with trivial automorphisms
        let pt = Arc::new(point());
        let g = FiniteGroup::symmetric(3);
        let bg = Arc::new(delooping(&g));
        let incl = GroupoidMap::point_inclusion(pt.clone(), bg.clone(), 0).unwrap();
        let s1 = span_from_map_fwd(&incl);
        let s2 = span_from_map_bwd(&incl);
        let comp = span_compose(&s1, &s2).unwrap();
        assert_eq!(comp.apex.n_objects(), 6);
        let product = linearize(&s2).unwrap().mul(&linearize(&s1).unwrap());
        assert_eq!(product, ExactMatrix::scalar(rational::int(6)));
        assert_eq!(linearize(&comp).unwrap(), product);
    }

    #[test]
    fn double_coset_composite() {
        let (s3, f) = bc2_in_bs3();
        let comp = span_compose(&span_from_map_fwd(&f), &span_from_map_bwd(&f)).unwrap();
        // oracle: Σ over double cosets HsH of |H| / |H ∩ sHs⁻¹|
        let h: Vec<usize> = f.mor_map().to_vec();
        let mut seen = [false; 6];
        let mut total = rational::zero();
        for s in s3.elements() {
            if seen[s] {
                continue;
            }
            for &a in &h {
                for &b in &h {
                    seen[s3.mul(a, s3.mul(s, b))] = true;
                }
            }
            let conj: Vec<usize> = h.iter().map(|&x| s3.conjugate(s, x)).collect();
            let meet = h.iter().filter(|x| conj.contains(x)).count();
            total += rational::ratio(h.len() as i64, meet as i64);
        }
        assert_eq!(total, rational::int(3));
        assert_eq!(linearize(&comp).unwrap(), ExactMatrix::scalar(total));
    }

    #[test]
    fn backward_span_is_component_incidence() {
        let (_, f) = bc2_in_bs3();
        let (_, _, lf) = free_loop_map(&f).unwrap();
        let m = linearize(&span_from_map_bwd(&lf)).unwrap();
        assert_eq!(m, restriction_matrix(&lf));
        let lx = lf.source();
        for i in 0..lx.n_components() {
            let hits: usize = (0..m.cols())
                .filter(|&j| m.get(i, j) == &rational::one())
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn restriction_along_loop_inclusion() {
        let (s3, f) = bc2_in_bs3();
        let (_, ly, lf) = free_loop_map(&f).unwrap();
        // classes of S_3 by element order: identity, transpositions, 3-cycles
        let order_of = |c: usize| s3.element_order(ly.objects[ly.underlying.representative(c)].1);
        let values: Vec<Rational> = (0..ly.underlying.n_components())
            .map(|c| rational::int([0, 10, 20, 30][order_of(c)]))
            .collect();
        let phi = ClassFunction::new(ly.underlying.clone(), values).unwrap();
        let r = restrict(&lf, &phi).unwrap();
        // components of L(BC_2): the identity loop, then the generator
        assert_eq!(r.values, vec![rational::int(10), rational::int(20)]);
        let bad = ClassFunction {
            base: ly.underlying.clone(),
            values: vec![rational::one()],
        };
        assert!(matches!(restrict(&lf, &bad), Err(Error::Shape(_))));
    }

    #[test]
    fn sign_character_integrates_to_zero() {
        let c2 = Arc::new(delooping(&FiniteGroup::cyclic(2)));
        let pt = Arc::new(point());
        let l = crate::loops::free_loop(&c2);
        let to_pt = GroupoidMap::to_point(l.underlying.clone(), pt).unwrap();
        let sign = ClassFunction::new(
            l.underlying.clone(),
            vec![rational::one(), rational::int(-1)],
        )
        .unwrap();
        assert_eq!(
            integrate(&to_pt, &sign).unwrap().values,
            vec![rational::zero()]
        );
        let one = ClassFunction::constant(l.underlying.clone(), rational::one());
        assert_eq!(
            integrate(&to_pt, &one).unwrap().values,
            vec![l.underlying.cardinality()]
        );
    }

    #[test]
    fn mismatched_feet_do_not_compose() {
        let (_, f) = bc2_in_bs3();
        let s = span_from_map_fwd(&f);
        assert!(matches!(span_compose(&s, &s), Err(Error::Composition(_))));
    }
}
