//! The JSON input schema (version 1) and its translation into library
//! objects. See `docs/schema.md`.

use std::sync::Arc;

use fingrpd::characters::RationalRep;
use fingrpd::grpd::{
    action_groupoid, conjugation_groupoid, delooping, delooping_map, discrete, disjoint_union,
    point, product, Elem, FiniteGroup, FiniteGroupoid, GroupoidMap, PermutationGroup,
};
use fingrpd::suite::{coset_action, SystemKind};
use fingrpd::{Error, Result};
use serde::Deserialize;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupDesc {
    Table {
        order: usize,
        mul: Vec<Vec<usize>>,
    },
    Perms {
        perm_gens: Vec<Vec<usize>>,
        degree: Option<usize>,
    },
    Named {
        named: String,
    },
}

/// An element, by index or (for permutation groups) as a permutation.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Perm(Vec<usize>),
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupoidDesc {
    Group(GroupDesc),
    Discrete(usize),
    Action {
        group: GroupDesc,
        points: usize,
        table: Vec<Vec<usize>>,
    },
    Cosets {
        group: GroupDesc,
        subgroup: Vec<ElemRef>,
    },
    Conjugation(GroupDesc),
    DisjointUnion(Vec<GroupoidDesc>),
    Product(Vec<GroupoidDesc>),
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum MapDesc {
    Table {
        source: GroupoidDesc,
        target: GroupoidDesc,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    },
    Identity(GroupoidDesc),
    ToPoint(GroupoidDesc),
    SubgroupInclusion {
        group: GroupDesc,
        subgroup: Vec<ElemRef>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanDesc {
    pub left: MapDesc,
    pub right: MapDesc,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemDesc {
    Constant {
        dim: usize,
    },
    Sign,
    Regular,
    #[serde(rename = "trivial+sign")]
    TrivialPlusSign,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RepDesc {
    Trivial,
    Sign,
    Regular,
    /// Left multiplication on `H/K`; `subgroup` generates `K` inside `G`.
    Permutation {
        subgroup: Vec<ElemRef>,
    },
}

/// Every input document, with the fields each subcommand reads.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema: u64,
    pub groupoid: Option<GroupoidDesc>,
    pub spans: Option<Vec<SpanDesc>>,
    pub map: Option<MapDesc>,
    pub left: Option<MapDesc>,
    pub right: Option<MapDesc>,
    pub system: Option<SystemDesc>,
    pub group: Option<GroupDesc>,
    pub subgroup: Option<Vec<ElemRef>>,
    pub rep: Option<RepDesc>,
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("malformed input: {e}")))?;
    if doc.schema != SCHEMA_VERSION {
        return Err(Error::Format(format!(
            "unsupported schema version {}, expected {SCHEMA_VERSION}",
            doc.schema
        )));
    }
    Ok(doc)
}

pub fn require<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| Error::Format(format!("missing field \"{name}\"")))
}

/// A group with, for permutation groups, the permutation of each element.
pub struct BuiltGroup {
    pub group: FiniteGroup,
    pub perms: Option<Vec<Vec<usize>>>,
}

impl BuiltGroup {
    pub fn elem(&self, r: &ElemRef) -> Result<Elem> {
        match r {
            ElemRef::Index(i) if *i < self.group.order() => Ok(*i),
            ElemRef::Index(i) => Err(Error::Index(format!(
                "element {i} in a group of order {}",
                self.group.order()
            ))),
            ElemRef::Perm(p) => {
                let perms = self.perms.as_ref().ok_or_else(|| {
                    Error::Format(
                        "permutation element for a group not given by permutations".into(),
                    )
                })?;
                perms
                    .iter()
                    .position(|q| q == p)
                    .ok_or_else(|| Error::InvalidInput(format!("{p:?} is not in the group")))
            }
        }
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[ElemRef]) -> Result<Vec<Elem>> {
        let gens = gens
            .iter()
            .map(|g| self.elem(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.group.subgroup_generated(&gens))
    }

    /// Display form of an element: its permutation when known.
    pub fn label(&self, e: Elem) -> String {
        match &self.perms {
            Some(p) => format!("{:?}", p[e]).replace(' ', ""),
            None => e.to_string(),
        }
    }
}

fn named_group(name: &str) -> Result<BuiltGroup> {
    let bad = || Error::Format(format!("unknown group name {name:?}"));
    let (kind, n) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
    let n: usize = n.parse().map_err(|_| bad())?;
    let group = match kind {
        "C" if n >= 1 => FiniteGroup::cyclic(n),
        "S" if n >= 1 => FiniteGroup::symmetric(n),
        "A" if n >= 1 => FiniteGroup::alternating(n),
        "D" if n >= 1 => FiniteGroup::dihedral(n),
        "Q" if n == 8 => FiniteGroup::quaternion(),
        _ => return Err(bad()),
    };
    Ok(BuiltGroup { group, perms: None })
}

pub fn build_group(desc: &GroupDesc) -> Result<BuiltGroup> {
    match desc {
        GroupDesc::Table { order, mul } => {
            if mul.len() != *order {
                return Err(Error::Format(format!(
                    "table has {} rows for order {order}",
                    mul.len()
                )));
            }
            Ok(BuiltGroup {
                group: FiniteGroup::from_table(mul.clone())?,
                perms: None,
            })
        }
        GroupDesc::Perms { perm_gens, degree } => {
            let degree = degree
                .or_else(|| perm_gens.first().map(Vec::len))
                .unwrap_or(1);
            let pg = PermutationGroup::generate(degree, perm_gens)?;
            Ok(BuiltGroup {
                group: pg.group,
                perms: Some(pg.perms),
            })
        }
        GroupDesc::Named { named } => named_group(named),
    }
}

pub fn build_groupoid(desc: &GroupoidDesc) -> Result<Arc<FiniteGroupoid>> {
    Ok(Arc::new(build_groupoid_owned(desc)?))
}

fn build_groupoid_owned(desc: &GroupoidDesc) -> Result<FiniteGroupoid> {
    Ok(match desc {
        GroupoidDesc::Group(g) => delooping(&build_group(g)?.group),
        GroupoidDesc::Discrete(n) => discrete(*n),
        GroupoidDesc::Action {
            group,
            points,
            table,
        } => {
            let g = build_group(group)?.group;
            if table.len() != g.order() || table.iter().any(|row| row.len() != *points) {
                return Err(Error::Format(format!(
                    "action table must be {} rows of {points} points",
                    g.order()
                )));
            }
            action_groupoid(&g, *points, |e, s| table[e][s])?
        }
        GroupoidDesc::Cosets { group, subgroup } => {
            let g = build_group(group)?;
            coset_action(&g.group, &g.subgroup(subgroup)?)
        }
        GroupoidDesc::Conjugation(g) => conjugation_groupoid(&build_group(g)?.group),
        GroupoidDesc::DisjointUnion(parts) => {
            let parts = parts
                .iter()
                .map(build_groupoid_owned)
                .collect::<Result<Vec<_>>>()?;
            disjoint_union(&parts.iter().collect::<Vec<_>>())
        }
        GroupoidDesc::Product(parts) => {
            let mut acc = point();
            for p in parts {
                acc = product(&acc, &build_groupoid_owned(p)?);
            }
            acc
        }
    })
}

pub fn build_map(desc: &MapDesc) -> Result<GroupoidMap> {
    match desc {
        MapDesc::Table {
            source,
            target,
            objects,
            morphisms,
        } => GroupoidMap::new(
            build_groupoid(source)?,
            build_groupoid(target)?,
            objects.clone(),
            morphisms.clone(),
        ),
        MapDesc::Identity(x) => Ok(GroupoidMap::identity(build_groupoid(x)?)),
        MapDesc::ToPoint(x) => GroupoidMap::to_point(build_groupoid(x)?, Arc::new(point())),
        MapDesc::SubgroupInclusion { group, subgroup } => {
            let g = build_group(group)?;
            let (h, emb) = g.group.restrict_to(&g.subgroup(subgroup)?)?;
            delooping_map(Arc::new(delooping(&h)), Arc::new(delooping(&g.group)), emb)
        }
    }
}

pub fn system_kind(desc: &SystemDesc) -> SystemKind {
    match desc {
        SystemDesc::Constant { dim } => SystemKind::Constant(*dim),
        SystemDesc::Sign => SystemKind::Sign,
        SystemDesc::Regular => SystemKind::Regular,
        SystemDesc::TrivialPlusSign => SystemKind::TrivialPlusSign,
    }
}

/// The representation of `h` (the subgroup `sub` of `g`, renumbered in
/// increasing order) described by `desc`.
pub fn build_rep(
    desc: &RepDesc,
    g: &BuiltGroup,
    sub: &[Elem],
    h: &FiniteGroup,
) -> Result<RationalRep> {
    match desc {
        RepDesc::Trivial => Ok(RationalRep::trivial(h)),
        RepDesc::Sign => Ok(RationalRep::sign(h)),
        RepDesc::Regular => Ok(RationalRep::regular(h)),
        RepDesc::Permutation { subgroup } => {
            let k = g.subgroup(subgroup)?;
            let in_h = k
                .iter()
                .map(|e| {
                    sub.binary_search(e)
                        .map_err(|_| Error::InvalidInput("K is not contained in H".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            RationalRep::coset_permutation(h, &in_h)
        }
    }
}
