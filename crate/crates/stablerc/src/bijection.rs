//! The box-removal maps `delta_l`, the bijection `Psi` onto pairs of a
//! type-A rigged configuration and an LR tableau, and the inverse maps
//! `delta~_k` and `Psi~`.
//!
//! Only the canonical algebra of each kind is supported: `D_{n+1}^(2)`
//! for the single box, `C_n^(1)` for the horizontal domino and `D_n^(1)`
//! for the vertical domino.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine_data::{canonical_algebra, AffineType, Family, Kind};
use crate::error::{invalid, precondition, Error, Result};
use crate::half::Half;
use crate::rigged::{vacancy_unchecked, Configuration, RiggedConfiguration, Row};
use crate::tableaux::{is_lr, is_tileable, Partition, SkewTableau};

/// Result of one `delta_l`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaOutcome {
    pub rc: RiggedConfiguration,
    /// Node where the removal chain stopped.
    pub k: usize,
    /// Length, before removal, of the row shortened at each node.
    pub removed: BTreeMap<usize, Half>,
}

/// One application of `delta` inside `Psi`, with the tableau after it.
#[derive(Clone, Debug, Serialize)]
pub struct PsiStep {
    pub l: Half,
    pub letter: u32,
    pub k: usize,
    pub rc: RiggedConfiguration,
    pub tableau: SkewTableau,
}

/// The image of `Psi` together with the data it is indexed by.
#[derive(Clone, Debug, Serialize)]
pub struct PsiOutput {
    pub rc: RiggedConfiguration,
    pub tableau: SkewTableau,
    pub lambda: Partition,
    pub mu: Partition,
    pub eta: Partition,
    pub trace: Vec<PsiStep>,
}

/// The groups of letters of an LR tableau; `groups[g][j - 1]` is the row
/// of letter `j` in group `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupDecomposition {
    pub groups: Vec<Vec<usize>>,
}

impl GroupDecomposition {
    /// Cardinalities `h_1 >= h_2 >= ...`.
    pub fn sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    /// The nodes `k` of the `delta~_k` in the order they are applied.
    pub fn application_order(&self) -> Vec<usize> {
        self.groups.iter().flat_map(|g| g.iter().rev().copied()).collect()
    }
}

/// One application of `delta~` inside `Psi~`.
#[derive(Clone, Debug, Serialize)]
pub struct TildeStep {
    pub k: usize,
    pub rc: RiggedConfiguration,
}

/// The image of `Psi~` with its intermediate states.
#[derive(Clone, Debug, Serialize)]
pub struct PsiTildeOutput {
    pub rc: RiggedConfiguration,
    pub groups: GroupDecomposition,
    pub trace: Vec<TildeStep>,
}

fn bijective_kind(ty: AffineType) -> Result<Kind> {
    let kind = ty.kind();
    if kind == Kind::Empty {
        return precondition("box removal is not defined for the empty kind");
    }
    if canonical_algebra(kind, ty.rank())?.family() != ty.family() {
        return precondition(format!(
            "the bijection runs in the canonical algebra of the {kind} kind, not in {ty}"
        ));
    }
    Ok(kind)
}

/// States off the lattice of a stable configuration: unequal spin areas
/// for the vertical domino, odd rows at node `n` for the horizontal one.
fn is_relaxed_state(cfg: &Configuration, kind: Kind) -> bool {
    let n = cfg.affine_type().rank();
    match kind {
        Kind::VDomino => cfg.area(n - 1) != cfg.area(n),
        Kind::HDomino => cfg.lengths(n).iter().any(|l| l.twice() % 4 != 0),
        _ => false,
    }
}

/// Node at which `delta` removes its topmost box.
fn spin_node_for_removal(cfg: &Configuration, kind: Kind) -> usize {
    let n = cfg.affine_type().rank();
    match kind {
        Kind::VDomino if cfg.area(n - 1) == cfg.area(n) => n - 1,
        _ => n,
    }
}

/// Node at which `delta~` adds its topmost box.
fn spin_node_for_addition(cfg: &Configuration, kind: Kind) -> usize {
    let n = cfg.affine_type().rank();
    match kind {
        Kind::VDomino if cfg.area(n - 1) != cfg.area(n) => n - 1,
        _ => n,
    }
}

struct Pick {
    a: usize,
    len: Half,
    singular: bool,
}

/// Shifts each picked row by `step` boxes and resets the riggings of the
/// changed rows to their new vacancy numbers. Riggings above `zero_above`
/// are cleared.
fn apply_picks(
    rc: &RiggedConfiguration,
    kind: Kind,
    picks: &[Pick],
    step: i64,
    zero_above: Option<usize>,
) -> Result<RiggedConfiguration> {
    let ty = rc.affine_type();
    let cfg = rc.configuration();
    let mut nodes: Vec<Vec<Row>> = (1..=ty.rank()).map(|a| rc.rows(a).to_vec()).collect();
    let mut changed = Vec::new();
    for p in picks {
        if p.len != Half::ZERO {
            let pos = nodes[p.a - 1]
                .iter()
                .position(|r| r.len == p.len && (!p.singular || rc.is_singular(&cfg, p.a, r)))
                .ok_or_else(|| Error::Invalid(format!("node {} has no row of length {}", p.a, p.len)))?;
            nodes[p.a - 1].remove(pos);
        }
        let len = p.len + Half::from_int(step);
        if len.twice() > 0 {
            changed.push((p.a, len));
        }
    }
    let mut lengths: Vec<Vec<Half>> = nodes.iter().map(|v| v.iter().map(|r| r.len).collect()).collect();
    for &(a, len) in &changed {
        lengths[a - 1].push(len);
    }
    let new_cfg = Configuration::new(ty, lengths)?;
    for &(a, len) in &changed {
        nodes[a - 1].push(Row::new(len, vacancy_unchecked(&new_cfg, rc.space(), a, len)));
    }
    if let Some(top) = zero_above {
        for node in nodes.iter_mut().skip(top) {
            for r in node.iter_mut() {
                r.rigging = 0;
            }
        }
    }
    let mut out = RiggedConfiguration::new(ty, rc.space().clone(), nodes)?;
    out.set_relaxed(is_relaxed_state(&new_cfg, kind));
    Ok(out)
}

/// `delta_l`: removes one box from a length-`l` row at the top and walks
/// down through shortest singular rows until none is long enough.
///
/// For the vertical domino a single application leaves a relaxed state;
/// [`delta_pair`] applies two.
pub fn delta(rc: &RiggedConfiguration, l: Half) -> Result<DeltaOutcome> {
    let ty = rc.affine_type();
    let kind = bijective_kind(ty)?;
    let cfg = rc.configuration();
    let top = spin_node_for_removal(&cfg, kind);
    let ad = kind.a_diamond(ty.rank());
    for a in [top, ad] {
        if !cfg.lengths(a).contains(&l) {
            return invalid(format!("no removable row of length {l} at node {a}"));
        }
    }
    let mut picks = vec![
        Pick {
            a: top,
            len: l,
            singular: false,
        },
        Pick {
            a: ad,
            len: l,
            singular: false,
        },
    ];
    let mut current = l;
    let mut k = ad;
    for a in (1..ad).rev() {
        let best = rc
            .rows(a)
            .iter()
            .filter(|r| r.len >= current && rc.is_singular(&cfg, a, r))
            .map(|r| r.len)
            .min();
        let Some(len) = best else { break };
        picks.push(Pick { a, len, singular: true });
        current = len;
        k = a;
    }
    let removed = picks.iter().map(|p| (p.a, p.len)).collect();
    let out = apply_picks(rc, kind, &picks, -1, None)?;
    if kind != Kind::VDomino {
        let new_cfg = out.configuration();
        for p in &picks {
            let len = p.len - Half::from_int(1);
            if len.twice() > 0 && p.a <= ad && vacancy_unchecked(&new_cfg, out.space(), p.a, len) < 0 {
                return invalid(format!("delta_{l} produced a negative vacancy at node {}", p.a));
            }
        }
    }
    Ok(DeltaOutcome { rc: out, k, removed })
}

/// Two successive `delta_l` for the vertical domino, checking that the
/// second chain runs weakly right of the first.
pub fn delta_pair(rc: &RiggedConfiguration, l: Half) -> Result<(DeltaOutcome, DeltaOutcome)> {
    if rc.kind() != Kind::VDomino {
        return precondition("pairing only for vertical-domino kind");
    }
    let first = delta(rc, l)?;
    let second = delta(&first.rc, l)?;
    if !chains_nest(&first, &second, rc.kind().a_diamond(rc.affine_type().rank())) {
        return precondition(format!("the two delta_{l} chains cross"));
    }
    if second.rc.is_relaxed() {
        return precondition(format!("delta_{l} twice left a relaxed state"));
    }
    Ok((first, second))
}

/// `l^(a-1) <= l'^(a)` for `a <= a_diamond`, an absent removal counting as
/// infinitely long.
pub fn chains_nest(first: &DeltaOutcome, second: &DeltaOutcome, a_diamond: usize) -> bool {
    (2..=a_diamond).all(|a| match (first.removed.get(&(a - 1)), second.removed.get(&a)) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    })
}

/// Retags a configuration with empty nodes above the type-A range as an
/// `A^(1)` configuration large enough to carry the weight `eta`.
fn to_type_a(rc: &RiggedConfiguration, eta: &Partition) -> Result<RiggedConfiguration> {
    let last = rc.configuration().last_nonempty();
    let rank = last.max(eta.len()).max(rc.space().max_node()) + 1;
    let ty = AffineType::new(Family::A1, rank)?;
    let mut nodes: Vec<Vec<Row>> = (1..=last).map(|a| rc.rows(a).to_vec()).collect();
    nodes.resize(rank, Vec::new());
    RiggedConfiguration::new(ty, rc.space().clone(), nodes)
}

/// `Psi`: applies `delta_l` once per box of `mu = nu^(a_diamond)`, column
/// by column from the right, and records each stopping node in `T`.
///
/// The rank condition `a_diamond >= len(wt) + len(mu)` guarantees success;
/// below it the run is attempted and a failure is reported against it.
pub fn psi(rc: &RiggedConfiguration) -> Result<PsiOutput> {
    let lambda = rc.weight()?;
    if rc.kind() == Kind::Empty {
        return Ok(PsiOutput {
            rc: rc.clone(),
            tableau: SkewTableau::straight_empty(lambda.clone()),
            mu: Partition::empty(),
            eta: lambda.clone(),
            lambda,
            trace: Vec::new(),
        });
    }
    let ty = rc.affine_type();
    let kind = bijective_kind(ty)?;
    if rc.is_relaxed() {
        return precondition("Psi needs a stable rigged configuration, not a relaxed state");
    }
    let violations = rc.validate(&lambda);
    if let Some(v) = violations.first() {
        return invalid(format!("input is not a rigged configuration: {v}"));
    }
    let ad = kind.a_diamond(ty.rank());
    let cfg = rc.configuration();
    let mu = cfg
        .shape(ad)
        .ok_or_else(|| Error::Invalid(format!("node {ad} has fractional rows")))?;
    let bound = lambda.len() + mu.len();
    let low_rank = ad < bound;
    let rank_error = |e: Error| {
        if low_rank {
            Error::Precondition(format!("rank too small: a = {ad} < len(wt) + len(mu) = {bound} ({e})"))
        } else {
            e
        }
    };
    let run = || -> Result<PsiOutput> {
        let columns = mu.conjugate();
        let mut current = rc.clone();
        let mut tableau = SkewTableau::straight_empty(lambda.clone());
        let mut trace = Vec::new();
        for l in (1..=mu.part(1)).rev() {
            let len = Half::from_int(l as i64);
            for letter in 1..=columns.part(l) as u32 {
                let out = delta(&current, len)?;
                tableau.push(out.k, letter)?;
                current = out.rc;
                trace.push(PsiStep {
                    l: len,
                    letter,
                    k: out.k,
                    rc: current.clone(),
                    tableau: tableau.clone(),
                });
            }
        }
        let eta = tableau.outer.clone();
        let image = to_type_a(&current, &eta)?;
        if let Some(v) = image.validate(&eta).first() {
            return invalid(format!(
                "image is not a type-A rigged configuration of weight {eta}: {v}"
            ));
        }
        Ok(PsiOutput {
            rc: image,
            tableau,
            lambda: lambda.clone(),
            mu: mu.clone(),
            eta,
            trace,
        })
    };
    run().map_err(rank_error)
}

/// Groups the letters of an LR tableau: repeatedly take the rightmost
/// occurrence of each of `1..=h`, `h` the largest remaining letter, ties
/// going to the topmost row.
pub fn group_tableau(t: &SkewTableau) -> Result<GroupDecomposition> {
    if !is_lr(t) {
        return invalid("not an LR tableau");
    }
    let mut cells: Vec<(usize, usize, u32)> = Vec::new();
    for (r, row) in t.rows.iter().enumerate() {
        let lo = t.inner.part(r + 1);
        for (j, &x) in row.iter().enumerate() {
            cells.push((r + 1, lo + j + 1, x));
        }
    }
    let mut groups = Vec::new();
    while let Some(h) = cells.iter().map(|c| c.2).max() {
        let mut group = Vec::new();
        for letter in 1..=h {
            let pos = cells
                .iter()
                .enumerate()
                .filter(|(_, c)| c.2 == letter)
                .max_by_key(|(_, c)| (c.1, std::cmp::Reverse(c.0)))
                .map(|(i, _)| i)
                .ok_or_else(|| Error::Invalid(format!("letter {letter} is missing below {h}")))?;
            group.push(cells.remove(pos).0);
        }
        groups.push(group);
    }
    Ok(GroupDecomposition { groups })
}

/// `delta~_k`: adds one box along longest singular rows from node `k` up to
/// `a_diamond` (creating rows of length 1 where none fits), then one box at
/// the spin node. Riggings above `a_diamond` become 0.
pub fn delta_tilde(rc: &RiggedConfiguration, k: usize) -> Result<RiggedConfiguration> {
    let ty = rc.affine_type();
    let kind = bijective_kind(ty)?;
    let ad = kind.a_diamond(ty.rank());
    if k == 0 || k > ad {
        return invalid(format!("delta~_{k} needs 1 <= k <= {ad}"));
    }
    let cfg = rc.configuration();
    let mut picks = Vec::new();
    let mut cap: Option<Half> = None;
    for a in k..=ad {
        let len = rc
            .rows(a)
            .iter()
            .filter(|r| cap.is_none_or(|c| r.len <= c) && rc.is_singular(&cfg, a, r))
            .map(|r| r.len)
            .max()
            .unwrap_or(Half::ZERO);
        picks.push(Pick {
            a,
            len,
            singular: len != Half::ZERO,
        });
        cap = Some(len);
    }
    let l = cap.unwrap_or(Half::ZERO);
    let top = spin_node_for_addition(&cfg, kind);
    if l != Half::ZERO && !cfg.lengths(top).contains(&l) {
        return invalid(format!("node {top} has no row of length {l} to extend"));
    }
    picks.push(Pick {
        a: top,
        len: l,
        singular: false,
    });
    apply_picks(rc, kind, &picks, 1, Some(ad))
}

/// `Psi~` with its intermediate states.
pub fn psi_tilde_traced(rc_a: &RiggedConfiguration, t: &SkewTableau, target: AffineType) -> Result<PsiTildeOutput> {
    if rc_a.affine_type().family() != Family::A1 {
        return invalid(format!(
            "Psi~ takes a type-A rigged configuration, not {}",
            rc_a.affine_type()
        ));
    }
    let eta = rc_a.weight()?;
    if t.outer != eta {
        return precondition(format!("outer shape {} differs from the weight {eta}", t.outer));
    }
    let groups = group_tableau(t)?;
    let kind = target.kind();
    if kind == Kind::Empty {
        if t.cell_count() > 0 {
            return precondition("a nonempty tableau has no preimage of the empty kind");
        }
        let rc = rc_a.retype(target)?;
        return Ok(PsiTildeOutput {
            rc,
            groups,
            trace: Vec::new(),
        });
    }
    bijective_kind(target)?;
    let lambda = t.inner.clone();
    let mu = Partition::from_parts(groups.sizes()).conjugate();
    if !is_tileable(&mu, kind) {
        return precondition(format!("mu = {mu} is not tiled by the {kind} tile"));
    }
    let ad = kind.a_diamond(target.rank());
    if eta.len() > ad {
        return precondition(format!("rank too small: len(eta) = {} exceeds a = {ad}", eta.len()));
    }
    let mut current = rc_a.retype(target)?;
    let mut trace = Vec::new();
    for k in groups.application_order() {
        current = delta_tilde(&current, k)?;
        trace.push(TildeStep { k, rc: current.clone() });
    }
    if current.is_relaxed() {
        return precondition("Psi~ ended in a relaxed state");
    }
    if let Some(v) = current.validate(&lambda).first() {
        return precondition(format!("image is not a rigged configuration of weight {lambda}: {v}"));
    }
    if current.configuration().shape(ad).as_ref() != Some(&mu) {
        return precondition(format!("node {ad} of the image differs from mu = {mu}"));
    }
    Ok(PsiTildeOutput {
        rc: current,
        groups,
        trace,
    })
}

/// `Psi~`: the inverse of [`psi`], landing in `target`.
pub fn psi_tilde(rc_a: &RiggedConfiguration, t: &SkewTableau, target: AffineType) -> Result<RiggedConfiguration> {
    psi_tilde_traced(rc_a, t, target).map(|o| o.rc)
}

#[cfg(test)]
mod tests;
