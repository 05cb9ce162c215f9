//! Deterministic fixture families: groupoids, maps with local systems,
//! pullback squares, random span pairs and induction instances.
//!
//! Sizes are chosen so that the norm and Beck-Chevalley checks over the
//! whole family stay within a few tens of seconds on one core.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::RationalRep;
use crate::error::Result;
use crate::grpd::{
    action_groupoid, conjugation_groupoid, delooping, delooping_map, discrete, disjoint_union,
    homotopy_pullback, point, product, union_inclusions, Elem, FiniteGroup, FiniteGroupoid,
    GroupoidMap, HomotopyPullback,
};
use crate::linsys::LocalSystem;
use crate::loops::{free_loop, iterated_p_free_loop, PAdicLoopParams};
use crate::spans::Span;

/// Seed of the random span family.
pub const SPAN_SEED: u64 = 0x5eed_2024;

/// The groups used throughout the suite.
pub fn groups() -> Vec<(String, FiniteGroup)> {
    let c = FiniteGroup::cyclic;
    vec![
        ("C1".into(), FiniteGroup::trivial()),
        ("C2".into(), c(2)),
        ("C3".into(), c(3)),
        ("C4".into(), c(4)),
        ("C5".into(), c(5)),
        ("C6".into(), c(6)),
        ("C7".into(), c(7)),
        ("C8".into(), c(8)),
        ("C2xC2".into(), FiniteGroup::direct_product(&c(2), &c(2))),
        ("C3xC3".into(), FiniteGroup::direct_product(&c(3), &c(3))),
        ("C4xC2".into(), FiniteGroup::direct_product(&c(4), &c(2))),
        ("S3".into(), FiniteGroup::symmetric(3)),
        ("D4".into(), FiniteGroup::dihedral(4)),
        ("Q8".into(), FiniteGroup::quaternion()),
        ("D5".into(), FiniteGroup::dihedral(5)),
        ("D6".into(), FiniteGroup::dihedral(6)),
        ("A4".into(), FiniteGroup::alternating(4)),
        ("S4".into(), FiniteGroup::symmetric(4)),
    ]
}

fn group(name: &str) -> FiniteGroup {
    groups()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .expect("suite group")
}

/// `g` acting on its left cosets of `sub` by left multiplication.
pub fn coset_action(g: &FiniteGroup, sub: &[Elem]) -> FiniteGroupoid {
    let cosets = g.left_cosets(sub);
    let mut coset_of = vec![0; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x] = i;
        }
    }
    action_groupoid(g, cosets.len(), |e, i| coset_of[g.mul(e, cosets[i][0])]).expect("coset action")
}

fn subgroup_of_order(g: &FiniteGroup, order: usize) -> Vec<Elem> {
    g.subgroups()
        .into_iter()
        .find(|s| s.len() == order)
        .expect("subgroup of the requested order")
}

/// At least fifty groupoids of varied shape.
pub fn groupoids() -> Vec<(String, Arc<FiniteGroupoid>)> {
    let mut out: Vec<(String, FiniteGroupoid)> = vec![
        ("pt".into(), point()),
        ("discrete(2)".into(), discrete(2)),
        ("discrete(3)".into(), discrete(3)),
        ("discrete(5)".into(), discrete(5)),
    ];
    // BS4 is left out: the linear cardinality of BG builds groupoids with
    // |G|^3 morphisms
    for (name, g) in groups().into_iter().filter(|(_, g)| g.order() <= 12) {
        out.push((format!("B{name}"), delooping(&g)));
    }
    for name in ["C3", "C2xC2", "S3", "D4", "Q8"] {
        out.push((
            format!("{name}//{name}"),
            conjugation_groupoid(&group(name)),
        ));
    }
    let s3 = group("S3");
    let d4 = group("D4");
    out.push((
        "S3 on S3/C2".into(),
        coset_action(&s3, &subgroup_of_order(&s3, 2)),
    ));
    out.push((
        "S3 on S3/A3".into(),
        coset_action(&s3, &subgroup_of_order(&s3, 3)),
    ));
    out.push(("S3 on S3".into(), coset_action(&s3, &[s3.identity()])));
    out.push((
        "D4 on D4/C2".into(),
        coset_action(&d4, &subgroup_of_order(&d4, 2)),
    ));
    out.push(("D4 on D4/C4".into(), coset_action(&d4, &[0, 1, 2, 3])));
    out.push(("C4 on C4".into(), coset_action(&group("C4"), &[0])));
    out.push(("C2 on C2".into(), coset_action(&group("C2"), &[0])));
    let a4 = group("A4");
    out.push((
        "A4 on A4/C3".into(),
        coset_action(&a4, &subgroup_of_order(&a4, 3)),
    ));
    let q8 = group("Q8");
    out.push((
        "Q8 on Q8/C4".into(),
        coset_action(&q8, &subgroup_of_order(&q8, 4)),
    ));
    out.push((
        "C3 on 2 fixed points".into(),
        action_groupoid(&group("C3"), 2, |_, s| s).expect("trivial action"),
    ));
    out.push((
        "C6 on 3 points".into(),
        action_groupoid(&group("C6"), 3, |e, s| (s + e) % 3).expect("rotation action"),
    ));

    let b = |n: &str| delooping(&group(n));
    out.push(("BC2+pt".into(), disjoint_union(&[&b("C2"), &point()])));
    out.push(("BS3+BC3".into(), disjoint_union(&[&b("S3"), &b("C3")])));
    out.push((
        "BC2+BC2+BC3".into(),
        disjoint_union(&[&b("C2"), &b("C2"), &b("C3")]),
    ));
    out.push(("2pt+BQ8".into(), disjoint_union(&[&discrete(2), &b("Q8")])));
    out.push(("BS3+BS3".into(), disjoint_union(&[&b("S3"), &b("S3")])));
    out.push(("BC2xBC3".into(), product(&b("C2"), &b("C3"))));
    out.push(("BC2xBC2".into(), product(&b("C2"), &b("C2"))));
    out.push(("BS3xdiscrete(2)".into(), product(&b("S3"), &discrete(2))));
    out.push((
        "(S3 on S3/C2)xBC2".into(),
        product(&coset_action(&s3, &subgroup_of_order(&s3, 2)), &b("C2")),
    ));

    let arc = |n: &str| Arc::new(b(n));
    let iterate = |x: Arc<FiniteGroupoid>, p, h| {
        (*iterated_p_free_loop(&x, PAdicLoopParams::new(p, h).expect("prime"))
            .expect("p-adic loops"))
        .clone()
    };
    out.push(("L_2 BS3".into(), iterate(arc("S3"), 2, 1)));
    out.push(("L_3 BA4".into(), iterate(arc("A4"), 3, 1)));
    out.push(("L_2 BD4".into(), iterate(arc("D4"), 2, 1)));
    out.push(("L_2^2 BS3".into(), iterate(arc("S3"), 2, 2)));
    out.push((
        "L(BC2+pt)".into(),
        (*free_loop(&Arc::new(disjoint_union(&[&b("C2"), &point()]))).underlying).clone(),
    ));

    out.into_iter().map(|(n, x)| (n, Arc::new(x))).collect()
}

/// Kinds of local systems placed on the source of a map, built
/// componentwise from representations of the automorphism groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// Trivial representation of dimension `d`.
    Constant(usize),
    /// Sign of left multiplication.
    Sign,
    /// Trivial plus sign.
    TrivialPlusSign,
    /// Regular representation.
    Regular,
}

impl SystemKind {
    fn rep(self, g: &FiniteGroup) -> RationalRep {
        match self {
            SystemKind::Constant(d) => (1..d).fold(RationalRep::trivial(g), |acc, _| {
                acc.direct_sum(&RationalRep::trivial(g))
                    .expect("same group")
            }),
            SystemKind::Sign => RationalRep::sign(g),
            SystemKind::TrivialPlusSign => RationalRep::trivial(g)
                .direct_sum(&RationalRep::sign(g))
                .expect("same group"),
            SystemKind::Regular => RationalRep::regular(g),
        }
    }

    pub fn label(self) -> String {
        match self {
            SystemKind::Constant(d) => format!("const{d}"),
            SystemKind::Sign => "sign".into(),
            SystemKind::TrivialPlusSign => "1+sign".into(),
            SystemKind::Regular => "regular".into(),
        }
    }
}

/// The system of `kind` on `x`.
pub fn system(x: &Arc<FiniteGroupoid>, kind: SystemKind) -> Result<LocalSystem> {
    let reps: Vec<(usize, Vec<_>)> = (0..x.n_components())
        .map(|c| {
            let g = x.aut_group(c);
            let rho = kind.rep(g);
            (
                rho.dim(),
                g.elements().map(|e| rho.image(e).clone()).collect(),
            )
        })
        .collect();
    LocalSystem::from_component_representations(x.clone(), &reps)
}

/// Largest fiber dimension of `kind` over `x`.
pub fn max_dim(x: &FiniteGroupoid, kind: SystemKind) -> usize {
    (0..x.n_components())
        .map(|c| match kind {
            SystemKind::Constant(d) => d,
            SystemKind::Sign => 1,
            SystemKind::TrivialPlusSign => 2,
            SystemKind::Regular => x.aut_group(c).order(),
        })
        .max()
        .unwrap_or(0)
}

/// A map with a local system on its source.
#[derive(Clone, Debug)]
pub struct MapCase {
    pub name: String,
    pub map: GroupoidMap,
    pub kind: SystemKind,
}

impl MapCase {
    pub fn system(&self) -> Result<LocalSystem> {
        system(self.map.source(), self.kind)
    }
}

fn push(out: &mut Vec<MapCase>, name: String, map: GroupoidMap, kinds: &[SystemKind]) {
    for &kind in kinds {
        debug_assert!(max_dim(map.source(), kind) <= 6);
        out.push(MapCase {
            name: format!("{name} [{}]", kind.label()),
            map: map.clone(),
            kind,
        });
    }
}

fn inclusion(
    g: &FiniteGroup,
    bg: &Arc<FiniteGroupoid>,
    sub: &[Elem],
) -> (FiniteGroup, GroupoidMap) {
    let (h, emb) = g.restrict_to(sub).expect("subgroup");
    let map = delooping_map(Arc::new(delooping(&h)), bg.clone(), emb).expect("subgroup inclusion");
    (h, map)
}

/// At least two hundred maps between small groupoids, each with a system
/// of dimension at most six on its source.
pub fn map_cases() -> Vec<MapCase> {
    use SystemKind::*;
    let pt = Arc::new(point());
    let mut out = Vec::new();

    // maps to the point
    for (name, x) in groupoids() {
        let max_aut = (0..x.n_components())
            .map(|c| x.aut_group(c).order())
            .max()
            .unwrap_or(1);
        if max_aut > 8 || x.n_objects() > 6 {
            continue;
        }
        let f = GroupoidMap::to_point(x.clone(), pt.clone()).expect("map to the point");
        let mut kinds = vec![Constant(1), Sign];
        if max_aut <= 4 {
            kinds.push(TrivialPlusSign);
        }
        if max_aut <= 6 && x.n_objects() <= 3 {
            kinds.push(Regular);
        }
        if x.n_objects() <= 2 {
            kinds.push(Constant(6));
        }
        push(&mut out, format!("{name} -> pt"), f, &kinds);
    }

    // subgroup inclusions
    for name in ["S3", "D4", "Q8", "C4", "C6", "C2xC2", "C4xC2"] {
        let g = group(name);
        let bg = Arc::new(delooping(&g));
        for sub in g.subgroups() {
            let (h, f) = inclusion(&g, &bg, &sub);
            let kinds: &[SystemKind] = if h.order() <= 6 {
                &[Constant(1), Sign, Regular]
            } else {
                &[Constant(1), Sign, TrivialPlusSign]
            };
            push(
                &mut out,
                format!(
                    "B{{{}}} -> B{name}",
                    sub.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                f,
                kinds,
            );
        }
    }

    // homomorphisms between small groups
    for (a, b) in [
        ("S3", "C2"),
        ("C4", "C2"),
        ("C2xC2", "C2"),
        ("C6", "C3"),
        ("C6", "S3"),
        ("C4", "C4"),
        ("C2", "S3"),
        ("D4", "C2"),
        ("Q8", "C2xC2"),
    ] {
        let (ga, gb) = (group(a), group(b));
        let (ba, bb) = (Arc::new(delooping(&ga)), Arc::new(delooping(&gb)));
        for (i, hom) in ga.homomorphisms_to(&gb).into_iter().enumerate() {
            let f = delooping_map(ba.clone(), bb.clone(), hom).expect("homomorphism");
            push(
                &mut out,
                format!("B{a} -> B{b} #{i}"),
                f,
                &[Constant(1), Sign],
            );
        }
    }

    // action groupoids over their groups, fold maps, loop projections, identities
    let s3 = group("S3");
    let bs3 = Arc::new(delooping(&s3));
    for sub in s3.subgroups() {
        let x = Arc::new(coset_action(&s3, &sub));
        let proj = GroupoidMap::new(
            x.clone(),
            bs3.clone(),
            vec![0; x.n_objects()],
            (0..x.n_morphisms()).map(|m| m % 6).collect(),
        )
        .expect("action projection");
        push(
            &mut out,
            format!("S3 on S3/H{} -> BS3", sub.len()),
            proj,
            &[Constant(1), Sign, Constant(2)],
        );
    }
    for (name, x) in groupoids()
        .into_iter()
        .filter(|(_, x)| x.n_morphisms() <= 8)
    {
        let xx = Arc::new(disjoint_union(&[&x, &x]));
        let id = GroupoidMap::identity(x.clone());
        let twice = |n: usize| (0..n).chain(0..n).collect::<Vec<_>>();
        let fold = GroupoidMap::new(xx, x.clone(), twice(x.n_objects()), twice(x.n_morphisms()))
            .expect("fold map");
        push(
            &mut out,
            format!("{name}+{name} -> {name}"),
            fold,
            &[Constant(1)],
        );
        push(&mut out, format!("id {name}"), id, &[Constant(2)]);
    }
    for name in ["C2", "C3", "S3", "C2xC2"] {
        let x = Arc::new(delooping(&group(name)));
        let l = free_loop(&x);
        push(
            &mut out,
            format!("L B{name} -> B{name}"),
            l.base_projection.clone(),
            &[Constant(1), Sign],
        );
    }
    out
}

/// A pullback square together with a system on the source of its left map.
#[derive(Clone, Debug)]
pub struct SquareCase {
    pub name: String,
    pub square: HomotopyPullback,
    pub kind: SystemKind,
}

impl SquareCase {
    pub fn system(&self) -> Result<LocalSystem> {
        system(self.square.left.source(), self.kind)
    }
}

/// At least fifty homotopy pullback squares of maps into small groupoids.
pub fn square_cases() -> Vec<SquareCase> {
    let mut out = Vec::new();
    for name in ["S3", "D4", "C4", "C2xC2"] {
        let g = group(name);
        let bg = Arc::new(delooping(&g));
        let pt = Arc::new(point());
        let mut maps: Vec<(String, GroupoidMap)> = Vec::new();
        maps.push((
            "pt".into(),
            GroupoidMap::point_inclusion(pt, bg.clone(), 0).expect("point"),
        ));
        for sub in proper_subgroup_classes(&g) {
            let (_, f) = inclusion(&g, &bg, &sub);
            maps.push((format!("H{}", sub.len()), f));
        }
        let x = Arc::new(coset_action(&g, &subgroup_of_order(&g, 2)));
        let proj = GroupoidMap::new(
            x.clone(),
            bg.clone(),
            vec![0; x.n_objects()],
            (0..x.n_morphisms()).map(|m| m % g.order()).collect(),
        )
        .expect("action projection");
        maps.push(("G/C2".into(), proj));
        for (i, (ln, l)) in maps.iter().enumerate() {
            for (rn, r) in maps.iter().skip(i) {
                let square = homotopy_pullback(l, r).expect("pullback");
                let kind = if l.source().n_objects() == 1 && l.source().n_morphisms() <= 4 {
                    SystemKind::TrivialPlusSign
                } else {
                    SystemKind::Sign
                };
                out.push(SquareCase {
                    name: format!("{ln} x_B{name} {rn} [{}]", kind.label()),
                    square,
                    kind,
                });
            }
        }
    }
    out
}

/// One subgroup per conjugacy class, the whole group excluded.
fn proper_subgroup_classes(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    g.subgroup_class_representatives()
        .into_iter()
        .filter(|s| s.len() < g.order())
        .collect()
}

/// Groups of order at most twelve for the random span family.
fn span_groups() -> Vec<FiniteGroup> {
    groups()
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| g.order() <= 12)
        .collect()
}

/// A disjoint union of one to four deloopings (or points) chosen at random.
fn random_foot(
    rng: &mut ChaCha8Rng,
    pool: &[FiniteGroup],
) -> (Vec<FiniteGroup>, Arc<FiniteGroupoid>) {
    let k = rng.gen_range(1..=4);
    let parts: Vec<FiniteGroup> = (0..k)
        .map(|_| {
            if rng.gen_bool(0.2) {
                FiniteGroup::trivial()
            } else {
                pool.choose(rng).expect("nonempty").clone()
            }
        })
        .collect();
    let bs: Vec<FiniteGroupoid> = parts.iter().map(delooping).collect();
    let refs: Vec<&FiniteGroupoid> = bs.iter().collect();
    (parts, Arc::new(disjoint_union(&refs)))
}

/// A random map from `apex` (a union of deloopings of `apex_groups`) into
/// the union of deloopings of `foot_groups`.
fn random_leg(
    rng: &mut ChaCha8Rng,
    apex_groups: &[FiniteGroup],
    apex: &Arc<FiniteGroupoid>,
    foot_groups: &[FiniteGroup],
    foot: &Arc<FiniteGroupoid>,
) -> GroupoidMap {
    let foot_parts: Vec<Arc<FiniteGroupoid>> =
        foot_groups.iter().map(|g| Arc::new(delooping(g))).collect();
    let incl = union_inclusions(&foot_parts, foot);
    let parts: Vec<GroupoidMap> = apex_groups
        .iter()
        .map(|h| {
            let j = rng.gen_range(0..foot_groups.len());
            let homs = h.homomorphisms_to(&foot_groups[j]);
            let hom = homs
                .choose(rng)
                .expect("trivial homomorphism exists")
                .clone();
            let f = delooping_map(Arc::new(delooping(h)), foot_parts[j].clone(), hom)
                .expect("homomorphism");
            f.then(&incl[j]).expect("composable")
        })
        .collect();
    // re-express each part as a map between the summands and the whole foot
    let mut obj_map = Vec::new();
    let mut mor_map = Vec::new();
    for p in &parts {
        obj_map.extend_from_slice(p.obj_map());
        mor_map.extend_from_slice(p.mor_map());
    }
    GroupoidMap::new(apex.clone(), foot.clone(), obj_map, mor_map).expect("random leg")
}

/// `n` composable span pairs over groupoids whose automorphism groups have
/// order at most twelve, from a fixed seed.
pub fn random_span_pairs(seed: u64, n: usize) -> Vec<(Span, Span)> {
    let pool = span_groups();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let (xg, x) = random_foot(&mut rng, &pool);
            let (yg, y) = random_foot(&mut rng, &pool);
            let (vg, v) = random_foot(&mut rng, &pool);
            let (ag, a) = random_foot(&mut rng, &pool);
            let (bg, b) = random_foot(&mut rng, &pool);
            let s1 = Span::new(
                random_leg(&mut rng, &ag, &a, &xg, &x),
                random_leg(&mut rng, &ag, &a, &yg, &y),
            )
            .expect("span");
            let s2 = Span::new(
                random_leg(&mut rng, &bg, &b, &yg, &y),
                random_leg(&mut rng, &bg, &b, &vg, &v),
            )
            .expect("span");
            (s1, s2)
        })
        .collect()
}

/// A subgroup inclusion with a representation of the subgroup.
#[derive(Clone, Debug)]
pub struct InductionCase {
    pub name: String,
    pub inclusion: GroupoidMap,
    pub rep: RationalRep,
}

/// Every subgroup `H` of S3, S4, D4, Q8 and A4 with its trivial and regular
/// representations and its permutation representations on `H/K`.
pub fn induction_cases() -> Vec<InductionCase> {
    let mut out = Vec::new();
    for name in ["S3", "S4", "D4", "Q8", "A4"] {
        let g = group(name);
        let bg = Arc::new(delooping(&g));
        for sub in g.subgroups() {
            let (h, f) = inclusion(&g, &bg, &sub);
            let label = format!(
                "H{}#{} <= {name}",
                h.order(),
                sub.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out.push(InductionCase {
                name: format!("{label} trivial"),
                inclusion: f.clone(),
                rep: RationalRep::trivial(&h),
            });
            out.push(InductionCase {
                name: format!("{label} regular"),
                inclusion: f.clone(),
                rep: RationalRep::regular(&h),
            });
            for k in h.subgroups() {
                if k.len() == 1 || k.len() == h.order() {
                    continue; // regular and trivial
                }
                let rep = RationalRep::coset_permutation(&h, &k).expect("subgroup");
                out.push(InductionCase {
                    name: format!("{label} on H/K{}", k.len()),
                    inclusion: f.clone(),
                    rep,
                });
            }
        }
    }
    out
}
