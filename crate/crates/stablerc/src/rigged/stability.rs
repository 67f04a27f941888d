//! The stable tail of a rigged configuration and the structural properties
//! that hold on valid ones.

use serde::Serialize;

use super::{vacancy_unchecked, Configuration, RiggedConfiguration};
use crate::affine_data::{Family, TailShape};
use crate::error::{precondition, Result};
use crate::half::Half;
use crate::tableaux::{is_tileable, Partition};

/// `k`, the stable shape `nu*` and `l* = k + len(nu*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableProfile {
    pub k: usize,
    pub nu_star: Partition,
    pub l_star: usize,
}

fn double_columns(p: &Partition) -> Partition {
    let cols: Vec<usize> = p.conjugate().parts().iter().map(|h| 2 * h).collect();
    Partition::from_parts(cols).conjugate()
}

fn halve_columns(p: &Partition) -> Option<Partition> {
    let cols = p.conjugate();
    if cols.parts().iter().any(|h| h % 2 == 1) {
        return None;
    }
    Some(Partition::from_parts(cols.parts().iter().map(|h| h / 2).collect()).conjugate())
}

/// Lattice of admissible row lengths at node `a`, up to two boxes past the
/// longest row.
fn probe_lengths(rc: &RiggedConfiguration, cfg: &Configuration, a: usize) -> Vec<Half> {
    let unit = rc.ty.constants().unit_half(a) as i64;
    let top = cfg.longest(a).twice() + 2 * unit;
    (1..=top / unit).map(|j| Half(j * unit)).collect()
}

/// Reads off `k`, `nu*` and `l*`, checking the tail shape, the area chain
/// and the vanishing of vacancy numbers beyond `l*`.
pub fn stable_profile(rc: &RiggedConfiguration) -> Result<StableProfile> {
    let ty = rc.ty;
    let n = ty.rank();
    let cfg = rc.configuration();
    let lambda = rc.weight()?;
    let k = lambda.len().max(rc.space.max_node());
    let tail = ty.spin_tail();
    let shape = |a: usize| {
        cfg.shape(a)
            .ok_or_else(|| crate::Error::Precondition(format!("node {a} has fractional rows")))
    };
    let nu_star = match tail.last() {
        None => shape(n)?,
        Some(&(_, TailShape::Same)) => shape(n)?,
        Some(&(_, TailShape::HalvedColumns)) => double_columns(&shape(n)?),
    };
    if !is_tileable(&nu_star, ty.kind()) {
        return precondition(format!("stable shape {nu_star} is not tiled by the {} tile", ty.kind()));
    }
    let l_star = k + nu_star.len();
    let halved = halve_columns(&nu_star);
    for a in l_star.max(1)..=n {
        let want = match tail.iter().find(|&&(b, _)| b == a) {
            Some((_, TailShape::HalvedColumns)) => halved.clone(),
            _ => Some(nu_star.clone()),
        };
        if cfg.shape(a) != want {
            return precondition(format!(
                "node {a} differs from the stable shape {nu_star} (l* = {l_star})"
            ));
        }
    }
    // area chain starting at node k
    let scale = |a: usize| -> i64 {
        let halved_node = tail.iter().any(|&(b, s)| b == a && s == TailShape::HalvedColumns);
        if halved_node {
            2
        } else {
            1
        }
    };
    let first = cfg.area(k.max(1)).twice() * scale(k.max(1));
    for a in k.max(1)..=n {
        let v = cfg.area(a).twice() * scale(a);
        let expect = if ty.family() == Family::A1 { 0 } else { first };
        if k >= 1 && (v != first || v != expect) {
            return precondition(format!("area chain breaks at node {a} (k = {k})"));
        }
    }
    for a in (l_star + 1)..=n {
        for len in probe_lengths(rc, &cfg, a) {
            let p = vacancy_unchecked(&cfg, &rc.space, a, len);
            if p != 0 {
                return precondition(format!("vacancy {p} at node {a}, length {len} beyond l* = {l_star}"));
            }
        }
    }
    Ok(StableProfile { k, nu_star, l_star })
}

/// Checks the convexity and positivity of vacancy numbers, the equal-width
/// singular chain above `k`, the stable tail, and agreement of the two
/// charge formulas. Returns a description of every failure.
pub fn check_stability(rc: &RiggedConfiguration) -> Vec<String> {
    let mut out = Vec::new();
    let ty = rc.ty;
    let n = ty.rank();
    let cfg = rc.configuration();
    let p = |a: usize, len: Half| vacancy_unchecked(&cfg, &rc.space, a, len);
    for a in 1..=n {
        let unit = ty.constants().unit_half(a) as i64;
        let probes = probe_lengths(rc, &cfg, a);
        for &len in &probes {
            if p(a, len) < 0 {
                out.push(format!("negative vacancy at node {a}, length {len}"));
            }
        }
        // gaps between consecutive occupied lengths, including 0 and a far point
        let mut marks: Vec<i64> = vec![0];
        marks.extend(cfg.multiplicities(a).iter().rev().map(|(l, _)| l.twice()));
        marks.push(probes.last().map_or(2 * unit, |h| h.twice()));
        marks.dedup();
        for w in marks.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mut i = lo + unit;
            while i < hi {
                let second = p(a, Half(i - unit)) + p(a, Half(i + unit)) - 2 * p(a, Half(i));
                if second > 0 {
                    out.push(format!("vacancy at node {a} is not concave at length {}", Half(i)));
                }
                i += unit;
            }
            let mid = (lo + hi) / 2;
            if (lo + hi) % 2 == 0
                && mid % unit == 0
                && lo < mid
                && p(a, Half(lo)) + p(a, Half(hi)) > 2 * p(a, Half(mid))
            {
                out.push(format!(
                    "midpoint inequality fails at node {a} on [{}, {}]",
                    Half(lo),
                    Half(hi)
                ));
            }
        }
    }
    let profile = match stable_profile(rc) {
        Ok(pr) => pr,
        Err(e) => {
            out.push(e.to_string());
            return out;
        }
    };
    let width = cfg.longest((profile.k + 1).min(n));
    for a in (profile.k + 1)..=n {
        if cfg.longest(a) != width {
            out.push(format!("longest row of node {a} differs from node {}", profile.k + 1));
        }
        if let Some(row) = rc.rows(a).first() {
            if !rc.is_singular(&cfg, a, row) {
                out.push(format!("longest row of node {a} is not singular"));
            }
        }
    }
    match (rc.charge(), rc.charge_stable()) {
        (Ok(full), Ok(stable)) if full == stable => {}
        (Ok(full), Ok(stable)) => out.push(format!("charge {full} differs from stable charge {stable}")),
        (Err(e), _) | (_, Err(e)) => out.push(e.to_string()),
    }
    out
}
