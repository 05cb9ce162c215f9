//! Right and left pushforwards `f_*` and `f_!` as fiberwise limits and
//! colimits.
//!
//! The fiber of `f: X -> Y` over `y` is replaced by the equivalent reduced
//! fiber with objects `(r, φ)`, where `r` runs over component
//! representatives of `X` and `φ: f r -> y`, and `α ∈ Aut(r)` acts by
//! `(r, φ) -> (r, φ ∘ f(α)⁻¹)`. Each block of the product/coproduct is a
//! copy of `F(r)`. Orbits are independent; on the orbit of `(r, φ0)` the
//! limit is `F(r)^K` and the colimit is `F(r)_K` for `K = ker(f|Aut r)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grpd::{GroupoidMap, MorId};
use crate::linsys::system::{same_base, LinearMapOfSystems, LocalSystem};
use crate::matrix::ExactMatrix;
use crate::sparse::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushKind {
    /// `f_*`, fiberwise limit.
    Right,
    /// `f_!`, fiberwise colimit.
    Left,
}

/// The presentation of a (co)limit at one object of the target.
///
/// `embed` is `total × dim` and `project` is `dim × total`, with
/// `project · embed = I`. For a limit, `embed` includes compatible families
/// and `project` reads coordinates; for a colimit, `project` is the
/// quotient map and `embed` a chosen lift.
#[derive(Clone, Debug)]
pub struct FiberPresentation {
    pub blocks: Vec<(usize, MorId)>,
    pub offsets: Vec<usize>,
    pub total: usize,
    pub embed: SparseMatrix,
    pub project: SparseMatrix,
    index: HashMap<(usize, MorId), usize>,
}

impl FiberPresentation {
    pub fn block(&self, r: usize, phi: MorId) -> usize {
        self.index[&(r, phi)]
    }

    /// The rows of `embed` at block `b`, which has dimension `dim`.
    pub fn embed_block(&self, b: usize, dim: usize) -> ExactMatrix {
        self.embed.row_block(self.offsets[b], dim)
    }

    /// The columns of `project` at block `b`, which has dimension `dim`.
    pub fn project_block(&self, b: usize, dim: usize) -> ExactMatrix {
        self.project.col_block(self.offsets[b], dim)
    }
}

#[derive(Clone, Debug)]
pub struct PushforwardResult {
    pub kind: PushKind,
    pub system: LocalSystem,
    pub fibers: Vec<FiberPresentation>,
}

pub fn pushforward_right(f: &GroupoidMap, sys: &LocalSystem) -> Result<PushforwardResult> {
    pushforward(f, sys, PushKind::Right)
}

pub fn pushforward_left(f: &GroupoidMap, sys: &LocalSystem) -> Result<PushforwardResult> {
    pushforward(f, sys, PushKind::Left)
}

pub fn pushforward(
    f: &GroupoidMap,
    sys: &LocalSystem,
    kind: PushKind,
) -> Result<PushforwardResult> {
    if !same_base(f.source(), sys.base()) {
        return Err(Error::Shape(
            "system does not live on the source of the map".into(),
        ));
    }
    let y = f.target();
    let fibers: Vec<FiberPresentation> = (0..y.n_objects())
        .map(|o| fiber_presentation(f, sys, o, kind))
        .collect();
    let dims: Vec<usize> = fibers.iter().map(|p| p.project.rows()).collect();
    let mats = (0..y.n_morphisms())
        .map(|beta| {
            let (a, b) = (y.src(beta), y.tgt(beta));
            let rows = transport_rows(f, sys, &fibers[a], &fibers[b], beta);
            fibers[b].project.mul_gathered(&fibers[a].embed, &rows)
        })
        .collect();
    let system = LocalSystem::from_parts(y.clone(), dims, mats);
    Ok(PushforwardResult {
        kind,
        system,
        fibers,
    })
}

/// For each row of `to`, the row of `from` it receives when block
/// `(r, φ)` is moved to block `(r, β ∘ φ)`.
pub(crate) fn transport_rows(
    f: &GroupoidMap,
    sys: &LocalSystem,
    from: &FiberPresentation,
    to: &FiberPresentation,
    beta: MorId,
) -> Vec<Option<usize>> {
    let y = f.target();
    let mut rows = vec![None; to.total];
    for (b, &(r, phi)) in from.blocks.iter().enumerate() {
        let target_block = to.block(r, y.compose(beta, phi));
        for t in 0..sys.dim(r) {
            rows[to.offsets[target_block] + t] = Some(from.offsets[b] + t);
        }
    }
    rows
}

fn fiber_presentation(
    f: &GroupoidMap,
    sys: &LocalSystem,
    y0: usize,
    kind: PushKind,
) -> FiberPresentation {
    let (x, y) = (f.source(), f.target());
    let mut blocks = Vec::new();
    let mut offsets = Vec::new();
    let mut index = HashMap::new();
    let mut total = 0;
    for c in 0..x.n_components() {
        let r = x.representative(c);
        for phi in y.hom(f.obj(r), y0) {
            index.insert((r, phi), blocks.len());
            blocks.push((r, phi));
            offsets.push(total);
            total += sys.dim(r);
        }
    }
    // per-orbit pieces, as (row range of project, column range of embed)
    let mut pieces: Vec<(usize, Vec<(usize, ExactMatrix, ExactMatrix)>)> = Vec::new();
    let mut seen = vec![false; blocks.len()];
    for b0 in 0..blocks.len() {
        if seen[b0] {
            continue;
        }
        let (r, phi0) = blocks[b0];
        let c = x.component_of(r);
        let aut = x.aut_group(c);
        let d = sys.dim(r);
        // τ(b): the automorphism carrying block b0 to block b
        let mut tau: Vec<(usize, MorId)> = Vec::new();
        let mut kernel: Vec<MorId> = Vec::new();
        for e in aut.elements() {
            let alpha = x.aut_morphism(c, e);
            let fa = f.mor(alpha);
            if y.is_identity(fa) {
                kernel.push(alpha);
            }
            let phi = y.compose(phi0, y.inverse(fa));
            let b = index[&(r, phi)];
            if !seen[b] {
                seen[b] = true;
                tau.push((b, alpha));
            }
        }
        let relations: Vec<ExactMatrix> = kernel
            .iter()
            .map(|&k| sys.mat(k).sub(&ExactMatrix::identity(d)))
            .collect();
        match kind {
            PushKind::Right => {
                let ns = ExactMatrix::vstack(d, &relations).nullspace();
                let mut sel = ExactMatrix::zeros(ns.free.len(), d);
                for (i, &j) in ns.free.iter().enumerate() {
                    sel.set(i, j, crate::rational::one());
                }
                // (block, rows of embed there, columns of project there)
                let parts = tau
                    .iter()
                    .map(|&(b, alpha)| {
                        let proj = if b == b0 {
                            sel.clone()
                        } else {
                            ExactMatrix::zeros(ns.free.len(), d)
                        };
                        (b, sys.mat(alpha).mul(&ns.basis), proj)
                    })
                    .collect();
                pieces.push((ns.free.len(), parts));
            }
            PushKind::Left => {
                let (q, kept) = coinvariant_quotient(d, &relations);
                let mut lift = ExactMatrix::zeros(d, kept.len());
                for (i, &j) in kept.iter().enumerate() {
                    lift.set(j, i, crate::rational::one());
                }
                let parts = tau
                    .iter()
                    .map(|&(b, alpha)| {
                        let emb = if b == b0 {
                            lift.clone()
                        } else {
                            ExactMatrix::zeros(d, kept.len())
                        };
                        (b, emb, q.mul(sys.mat(x.inverse(alpha))))
                    })
                    .collect();
                pieces.push((kept.len(), parts));
            }
        }
    }
    let dim: usize = pieces.iter().map(|p| p.0).sum();
    let mut embed = SparseMatrix::zeros(total, dim);
    let mut project = SparseMatrix::zeros(dim, total);
    let mut at = 0;
    for (k, parts) in &pieces {
        for (b, emb, proj) in parts {
            embed.paste(offsets[*b], at, emb);
            project.paste(at, offsets[*b], proj);
        }
        at += k;
    }
    FiberPresentation {
        blocks,
        offsets,
        total,
        embed,
        project,
        index,
    }
}

/// Quotient of `Q^d` by the column spaces of `relations`: the quotient map
/// and the coordinates it keeps (the non-pivot columns of the echelon form
/// of the relation vectors).
fn coinvariant_quotient(d: usize, relations: &[ExactMatrix]) -> (ExactMatrix, Vec<usize>) {
    let rows: Vec<ExactMatrix> = relations.iter().map(ExactMatrix::transpose).collect();
    let (rref, pivots) = ExactMatrix::vstack(d, &rows).rref();
    let mut is_pivot = vec![false; d];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kept: Vec<usize> = (0..d).filter(|&j| !is_pivot[j]).collect();
    let mut q = ExactMatrix::zeros(kept.len(), d);
    for (i, &j) in kept.iter().enumerate() {
        q.set(i, j, crate::rational::one());
        for (row, &p) in pivots.iter().enumerate() {
            let v = rref.get(row, j);
            if !num_traits::Zero::is_zero(v) {
                q.set(i, p, -v.clone());
            }
        }
    }
    (q, kept)
}

/// `f_* η` or `f_! η` for a map of systems on the source of `f`.
pub fn pushforward_map(
    f: &GroupoidMap,
    eta: &LinearMapOfSystems,
    kind: PushKind,
) -> Result<LinearMapOfSystems> {
    let src = pushforward(f, &eta.source, kind)?;
    let tgt = pushforward(f, &eta.target, kind)?;
    pushforward_map_with(f, eta, &src, &tgt)
}

pub(crate) fn pushforward_map_with(
    f: &GroupoidMap,
    eta: &LinearMapOfSystems,
    src: &PushforwardResult,
    tgt: &PushforwardResult,
) -> Result<LinearMapOfSystems> {
    let components = (0..f.target().n_objects())
        .map(|y| {
            let (ps, pt) = (&src.fibers[y], &tgt.fibers[y]);
            let parts: Vec<ExactMatrix> = ps
                .blocks
                .iter()
                .enumerate()
                .map(|(b, &(r, _))| eta.components[r].mul(&ps.embed_block(b, eta.source.dim(r))))
                .collect();
            pt.project
                .mul_dense(&ExactMatrix::vstack(ps.embed.cols(), &parts))
        })
        .collect();
    LinearMapOfSystems::new(src.system.clone(), tgt.system.clone(), components)
}
