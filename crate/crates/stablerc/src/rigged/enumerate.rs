//! Exhaustive enumeration of admissible configurations and rigged
//! configurations by depth-first search over the nodes.

use std::collections::HashMap;

use super::{box_counts, check_space, vacancy_unchecked, Configuration, RiggedConfiguration, Row};
use crate::affine_data::AffineType;
use crate::error::{Error, Result};
use crate::half::Half;
use crate::tableaux::{all_partitions, Partition, QuantumSpace};

/// Default cap on candidate partial assignments.
pub const DEFAULT_MAX_CONFIGS: u64 = 1_000_000;

struct Search<'a> {
    ty: AffineType,
    space: &'a QuantumSpace,
    candidates: Vec<Vec<Vec<Half>>>,
    /// `ready[a]` lists the nodes whose vacancy numbers are fixed once
    /// nodes `1..=a` are chosen.
    ready: Vec<Vec<usize>>,
    cfg: Configuration,
    tried: u64,
    limit: u64,
    out: Vec<Configuration>,
}

impl Search<'_> {
    fn admissible(&self, b: usize) -> bool {
        self.cfg
            .multiplicities(b)
            .iter()
            .all(|&(len, _)| vacancy_unchecked(&self.cfg, self.space, b, len) >= 0)
    }

    fn run(&mut self, a: usize) -> Result<()> {
        let n = self.ty.rank();
        if a > n {
            self.out.push(self.cfg.clone());
            return Ok(());
        }
        for c in 0..self.candidates[a - 1].len() {
            self.tried += 1;
            if self.tried > self.limit {
                return Err(Error::Budget {
                    what: "candidate configurations",
                    limit: self.limit,
                });
            }
            self.cfg.nodes[a - 1] = self.candidates[a - 1][c].clone();
            if self.ready[a].iter().all(|&b| self.admissible(b)) {
                self.run(a + 1)?;
            }
        }
        self.cfg.nodes[a - 1].clear();
        Ok(())
    }
}

/// Index areas forced by the weight, or `None` when some area is negative
/// or fractional (the set is then empty).
fn forced_areas(ty: AffineType, lambda: &Partition, space: &QuantumSpace) -> Result<Option<Vec<usize>>> {
    check_space(ty, space)?;
    let areas = box_counts(ty, lambda, space)?;
    Ok(areas
        .iter()
        .map(|r| (r.is_integer() && *r.numer() >= 0).then(|| r.to_integer() as usize))
        .collect())
}

/// All `L`-admissible `lambda`-configurations, in canonical order.
pub fn enumerate_configurations(
    ty: AffineType,
    lambda: &Partition,
    space: &QuantumSpace,
    limit: u64,
) -> Result<Vec<Configuration>> {
    let Some(areas) = forced_areas(ty, lambda, space)? else {
        return Ok(Vec::new());
    };
    let n = ty.rank();
    let c = ty.constants();
    let mut by_area: HashMap<usize, Vec<Partition>> = HashMap::new();
    let candidates = (1..=n)
        .map(|a| {
            let unit = c.unit_half(a) as i64;
            by_area
                .entry(areas[a - 1])
                .or_insert_with(|| all_partitions(areas[a - 1]))
                .iter()
                .map(|p| p.parts().iter().map(|&k| Half(k as i64 * unit)).collect())
                .collect()
        })
        .collect();
    let mut ready = vec![Vec::new(); n + 1];
    for b in 1..=n {
        let last = super::stencil(ty, b).iter().map(|&(x, _)| x).max().unwrap_or(b).max(b);
        ready[last].push(b);
    }
    let mut s = Search {
        ty,
        space,
        candidates,
        ready,
        cfg: Configuration::empty(ty),
        tried: 0,
        limit,
        out: Vec::new(),
    };
    s.run(1)?;
    s.out.sort();
    Ok(s.out)
}

/// Weakly decreasing sequences of length `m` with entries in `0..=p`.
pub(crate) fn rigging_choices(m: usize, p: i64) -> Vec<Vec<i64>> {
    fn go(m: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in (0..=max).rev() {
            cur.push(v);
            go(m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p >= 0 {
        go(m, p, &mut Vec::new(), &mut out);
    }
    out
}

/// All rigged configurations in `RC(lambda, L)`, in canonical order.
pub fn enumerate_rc(
    ty: AffineType,
    lambda: &Partition,
    space: &QuantumSpace,
    limit: u64,
) -> Result<Vec<RiggedConfiguration>> {
    let configs = enumerate_configurations(ty, lambda, space, limit)?;
    let mut out = Vec::new();
    for cfg in configs {
        // one block per (node, distinct length)
        let mut blocks: Vec<(usize, Half, Vec<Vec<i64>>)> = Vec::new();
        for a in 1..=ty.rank() {
            for (len, m) in cfg.multiplicities(a) {
                let p = vacancy_unchecked(&cfg, space, a, len);
                blocks.push((a, len, rigging_choices(m, p)));
            }
        }
        let mut idx = vec![0usize; blocks.len()];
        'odometer: loop {
            if out.len() as u64 >= limit {
                return Err(Error::Budget {
                    what: "rigged configurations",
                    limit,
                });
            }
            let mut nodes = vec![Vec::new(); ty.rank()];
            for (b, (a, len, choices)) in blocks.iter().enumerate() {
                nodes[a - 1].extend(choices[idx[b]].iter().map(|&j| Row::new(*len, j)));
            }
            out.push(RiggedConfiguration::new(ty, space.clone(), nodes)?);
            let mut b = blocks.len();
            loop {
                if b == 0 {
                    break 'odometer;
                }
                b -= 1;
                idx[b] += 1;
                if idx[b] < blocks[b].2.len() {
                    continue 'odometer;
                }
                idx[b] = 0;
            }
        }
    }
    out.sort();
    Ok(out)
}
