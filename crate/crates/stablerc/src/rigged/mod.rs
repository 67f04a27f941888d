//! Rigged configurations: vacancy numbers, validation, weight and charge.
//!
//! Row lengths are physical (a row of index `k` at node `a` has length
//! `k * upsilon_a`) and are stored as [`Half`] so the half-width boxes of
//! `B_n^(1)` need no fractions.

mod enumerate;
mod stability;

use std::cmp::Reverse;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::affine_data::{AffineType, Family, Kind, Rat};
use crate::error::{invalid, precondition, Error, Result};
use crate::half::Half;
use crate::tableaux::{Partition, QuantumSpace};

pub use enumerate::{enumerate_configurations, enumerate_rc, DEFAULT_MAX_CONFIGS};
pub use stability::{check_stability, stable_profile, StableProfile};

/// One row of a rigged partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub len: Half,
    pub rigging: i64,
}

impl Row {
    pub fn new(len: Half, rigging: i64) -> Row {
        Row { len, rigging }
    }
}

/// Coefficients `(b, c)` with `p^(a) = L-term + sum_b c Q^(b)`, all `Q`
/// evaluated at the physical length of the row.
pub fn stencil(ty: AffineType, a: usize) -> Vec<(usize, i64)> {
    let n = ty.rank();
    let special: &[(usize, i64)] = match (ty.family(), n - a) {
        (Family::B1 | Family::A2odd, 1) => &[(n - 2, 1), (n - 1, -2), (n, 2)],
        (Family::B1, 0) => &[(n - 1, 2), (n, -4)],
        (Family::C1 | Family::A2even, 0) => &[(n - 1, 1), (n, -1)],
        (Family::D1, 2) => &[(n - 3, 1), (n - 2, -2), (n - 1, 1), (n, 1)],
        (Family::D1, 1) => &[(n - 2, 1), (n - 1, -2)],
        (Family::D1, 0) => &[(n - 2, 1), (n, -2)],
        (Family::A2odd, 0) => &[(n - 1, 1), (n, -2)],
        (Family::D2, 0) => &[(n - 1, 2), (n, -2)],
        _ => &[(a.wrapping_sub(1), 1), (a, -2), (a + 1, 1)],
    };
    special.iter().copied().filter(|&(b, _)| (1..=n).contains(&b)).collect()
}

/// Fails when `L` has entries outside `1..=n` or at a node with a
/// type-specific vacancy expression.
pub fn check_space(ty: AffineType, space: &QuantumSpace) -> Result<()> {
    let special = ty.special_nodes();
    for (a, i, _) in space.entries() {
        if a > ty.rank() {
            return invalid(format!("L_{i}^({a}) lies outside the nodes of {ty}"));
        }
        if special.contains(&a) {
            return invalid(format!("L_{i}^({a}) must vanish for {ty}"));
        }
    }
    Ok(())
}

fn rat_to_half(r: Rat, what: &str) -> Result<Half> {
    let twice = r * 2;
    if !twice.is_integer() {
        return Err(Error::Invalid(format!("{what} = {r} is not a half-integer")));
    }
    Ok(Half(twice.to_integer()))
}

/// A configuration: the row lengths of every `nu^(a)`, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    ty: AffineType,
    nodes: Vec<Vec<Half>>,
}

impl Configuration {
    pub fn new(ty: AffineType, mut nodes: Vec<Vec<Half>>) -> Result<Configuration> {
        if nodes.len() != ty.rank() {
            return invalid(format!("{ty} needs {} partitions, got {}", ty.rank(), nodes.len()));
        }
        for node in &mut nodes {
            if node.iter().any(|l| l.twice() <= 0) {
                return invalid("row lengths must be positive");
            }
            node.sort_unstable_by(|x, y| y.cmp(x));
        }
        Ok(Configuration { ty, nodes })
    }

    pub fn empty(ty: AffineType) -> Configuration {
        Configuration {
            ty,
            nodes: vec![Vec::new(); ty.rank()],
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    /// Row lengths of `nu^(a)`; empty outside `1..=n`.
    pub fn lengths(&self, a: usize) -> &[Half] {
        match a.checked_sub(1).and_then(|i| self.nodes.get(i)) {
            Some(v) => v,
            None => &[],
        }
    }

    /// `Q_p(nu^(a))`: the area in the first `p` physical columns.
    pub fn q(&self, a: usize, p: Half) -> Half {
        Half(self.lengths(a).iter().map(|l| l.twice().min(p.twice())).sum())
    }

    /// Physical area of `nu^(a)`.
    pub fn area(&self, a: usize) -> Half {
        Half(self.lengths(a).iter().map(|l| l.twice()).sum())
    }

    /// `sum_i i m_i^(a)` with `i` the row index in units of `upsilon_a`.
    pub fn index_area(&self, a: usize) -> Rat {
        Rat::new(self.area(a).twice(), 2) / self.ty.constants().upsilon[a - 1]
    }

    pub fn longest(&self, a: usize) -> Half {
        self.lengths(a).first().copied().unwrap_or_default()
    }

    /// Distinct lengths of `nu^(a)` in decreasing order with multiplicities.
    pub fn multiplicities(&self, a: usize) -> Vec<(Half, usize)> {
        let mut out: Vec<(Half, usize)> = Vec::new();
        for &l in self.lengths(a) {
            match out.last_mut() {
                Some((last, m)) if *last == l => *m += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// The physical diagram of `nu^(a)`, if every length is an integer.
    pub fn shape(&self, a: usize) -> Option<Partition> {
        let parts: Option<Vec<usize>> = self.lengths(a).iter().map(|l| l.to_int().map(|v| v as usize)).collect();
        parts.and_then(|p| Partition::new(p).ok())
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.iter().all(Vec::is_empty)
    }

    /// Largest node with a nonempty partition, or 0.
    pub fn last_nonempty(&self) -> usize {
        self.nodes.iter().rposition(|v| !v.is_empty()).map_or(0, |i| i + 1)
    }
}

/// The vacancy number `p^(a)` at physical length `len`.
pub fn vacancy(cfg: &Configuration, space: &QuantumSpace, a: usize, len: Half) -> Result<i64> {
    let ty = cfg.ty;
    if a == 0 || a > ty.rank() {
        return invalid(format!("node {a} is outside 1..={}", ty.rank()));
    }
    check_space(ty, space)?;
    Ok(vacancy_unchecked(cfg, space, a, len))
}

pub(crate) fn vacancy_unchecked(cfg: &Configuration, space: &QuantumSpace, a: usize, len: Half) -> i64 {
    let mut twice = 0i64;
    for (i, mult) in space.at_node(a) {
        twice += mult as i64 * len.twice().min(2 * i as i64);
    }
    for (b, c) in stencil(cfg.ty, a) {
        twice += c * cfg.q(b, len).twice();
    }
    debug_assert!(twice % 2 == 0, "vacancy number off the integer lattice");
    twice.div_euclid(2)
}

/// Expected `sum_i i m_i^(a)` for every node, from the weight `lambda`.
pub fn box_counts(ty: AffineType, lambda: &Partition, space: &QuantumSpace) -> Result<Vec<Rat>> {
    let n = ty.rank();
    if lambda.len() > ty.max_weight_length() {
        return invalid(format!(
            "weight {lambda} has more than {} rows, the limit for {ty}",
            ty.max_weight_length()
        ));
    }
    let c = ty.constants();
    let coeff: Vec<Rat> = (1..=n)
        .map(|b| {
            let pairing = lambda.part(b) as i64 - lambda.part(b + 1) as i64;
            Rat::from_integer(c.epsilon[b - 1] * (space.node_mass(b) as i64 - pairing))
        })
        .collect();
    Ok((0..n)
        .map(|a| {
            let s: Rat = (0..n).map(|b| coeff[b] * c.weight_form[a][b]).sum();
            s * 2 / c.pairing[a][a]
        })
        .collect())
}

/// `c(nu)` computed from the full double sum.
pub fn charge_config(cfg: &Configuration, space: &QuantumSpace) -> Result<Half> {
    let ty = cfg.ty;
    let c = ty.constants();
    let n = ty.rank();
    let index = |a: usize, l: Half| Rat::new(l.twice(), 2) / c.upsilon[a - 1];
    let mut total = Rat::zero();
    for a in 1..=n {
        for b in 1..=n {
            let g = c.pair(a, b);
            if g.is_zero() {
                continue;
            }
            for &la in cfg.lengths(a) {
                for &lb in cfg.lengths(b) {
                    let (j, k) = (index(a, la), index(b, lb));
                    total += g * (c.t[b - 1] * j).min(c.t[a - 1] * k) / 2;
                }
            }
        }
        for (i, mult) in space.at_node(a) {
            let i = Rat::from_integer(i as i64);
            for &l in cfg.lengths(a) {
                total -= c.t_check[a - 1] * i.min(index(a, l)) * mult as i64;
            }
        }
    }
    rat_to_half(total, "charge")
}

/// The simplified charge of a stable configuration, summing nodes up to `cut`.
pub fn charge_stable(kind: Kind, cfg: &Configuration, space: &QuantumSpace, cut: usize) -> Result<Half> {
    if cut > cfg.ty.rank() {
        return invalid(format!("cut {cut} exceeds the rank {}", cfg.ty.rank()));
    }
    let gamma = kind.gamma();
    let pair_sum = |a: usize, b: usize| -> i64 {
        let mut s = 0;
        for la in cfg.lengths(a) {
            for lb in cfg.lengths(b) {
                s += la.twice().min(lb.twice());
            }
        }
        s
    };
    // four times the value: pair sums and L-terms run over doubled lengths
    let mut quad = 0i64;
    for a in 1..=cut {
        let diag = if a == cut { 1 } else { 2 };
        quad += gamma * diag * pair_sum(a, a);
        if a < cut {
            quad -= 2 * gamma * pair_sum(a, a + 1);
        }
        for (i, mult) in space.at_node(a) {
            for l in cfg.lengths(a) {
                quad -= 2 * gamma * mult as i64 * l.twice().min(2 * i as i64);
            }
        }
    }
    if quad % 2 != 0 {
        return Err(Error::Invalid("stable charge is not a half-integer".into()));
    }
    Ok(Half(quad / 2))
}

/// A violated condition found by [`RiggedConfiguration::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Space(String),
    Weight(String),
    BoxCount {
        a: usize,
        expected: Rat,
        found: Rat,
    },
    Width {
        a: usize,
        len: Half,
    },
    NegativeVacancy {
        a: usize,
        len: Half,
        vacancy: i64,
    },
    RiggingExceedsVacancy {
        a: usize,
        len: Half,
        rigging: i64,
        vacancy: i64,
    },
    NegativeRigging {
        a: usize,
        len: Half,
        rigging: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Space(m) | Violation::Weight(m) => f.write_str(m),
            Violation::BoxCount { a, expected, found } => {
                write!(f, "box count mismatch at node {a}: expected {expected}, found {found}")
            }
            Violation::Width { a, len } => {
                write!(f, "row of length {len} at node {a} is not a multiple of the box width")
            }
            Violation::NegativeVacancy { a, len, vacancy } => {
                write!(f, "negative vacancy {vacancy} at node {a}, length {len}")
            }
            Violation::RiggingExceedsVacancy {
                a,
                len,
                rigging,
                vacancy,
            } => write!(
                f,
                "rigging exceeds vacancy at node {a}, length {len}: {rigging} > {vacancy}"
            ),
            Violation::NegativeRigging { a, len, rigging } => {
                write!(f, "negative rigging {rigging} at node {a}, length {len}")
            }
        }
    }
}

/// A rigged configuration together with its quantum space.
///
/// Rows are kept in canonical order: length descending, then rigging
/// descending. `relaxed` marks the intermediate states visited by the
/// bijection, where a spin node of the vertical-domino kind may carry a
/// vacancy of `-1` and the horizontal-domino node `n` may hold odd rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    ty: AffineType,
    space: QuantumSpace,
    nodes: Vec<Vec<Row>>,
    relaxed: bool,
}

impl RiggedConfiguration {
    pub fn new(ty: AffineType, space: QuantumSpace, nodes: Vec<Vec<Row>>) -> Result<Self> {
        if nodes.len() != ty.rank() {
            return invalid(format!(
                "{ty} needs {} rigged partitions, got {}",
                ty.rank(),
                nodes.len()
            ));
        }
        if nodes.iter().flatten().any(|r| r.len.twice() <= 0) {
            return invalid("row lengths must be positive");
        }
        check_space(ty, &space)?;
        let mut rc = RiggedConfiguration {
            ty,
            space,
            nodes,
            relaxed: false,
        };
        rc.canonicalize();
        Ok(rc)
    }

    pub fn empty(ty: AffineType, space: QuantumSpace) -> Result<Self> {
        RiggedConfiguration::new(ty, space, vec![Vec::new(); ty.rank()])
    }

    /// Attaches riggings to a configuration; `riggings[a - 1]` follows the
    /// order of `cfg.lengths(a)`.
    pub fn from_parts(cfg: &Configuration, space: QuantumSpace, riggings: &[Vec<i64>]) -> Result<Self> {
        let nodes = (1..=cfg.ty.rank())
            .map(|a| {
                let lens = cfg.lengths(a);
                let rigs = riggings.get(a - 1).map(Vec::as_slice).unwrap_or(&[]);
                if lens.len() != rigs.len() {
                    return invalid(format!("node {a}: {} rows but {} riggings", lens.len(), rigs.len()));
                }
                Ok(lens.iter().zip(rigs).map(|(&l, &r)| Row::new(l, r)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        RiggedConfiguration::new(cfg.ty, space, nodes)
    }

    pub(crate) fn canonicalize(&mut self) {
        for node in &mut self.nodes {
            node.sort_unstable_by_key(|r| Reverse(*r));
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    pub fn kind(&self) -> Kind {
        self.ty.kind()
    }

    pub fn space(&self) -> &QuantumSpace {
        &self.space
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    pub(crate) fn set_relaxed(&mut self, relaxed: bool) {
        self.relaxed = relaxed;
    }

    /// Rows of `nu^(a)`; empty outside `1..=n`.
    pub fn rows(&self, a: usize) -> &[Row] {
        match a.checked_sub(1).and_then(|i| self.nodes.get(i)) {
            Some(v) => v,
            None => &[],
        }
    }

    pub fn configuration(&self) -> Configuration {
        let nodes = self.nodes.iter().map(|v| v.iter().map(|r| r.len).collect()).collect();
        Configuration { ty: self.ty, nodes }
    }

    pub fn vacancy(&self, a: usize, len: Half) -> i64 {
        vacancy_unchecked(&self.configuration(), &self.space, a, len)
    }

    /// Every row as `(length, vacancy, rigging)`, node by node.
    pub fn annotated(&self) -> Vec<Vec<(Half, i64, i64)>> {
        let cfg = self.configuration();
        (1..=self.ty.rank())
            .map(|a| {
                self.rows(a)
                    .iter()
                    .map(|r| (r.len, vacancy_unchecked(&cfg, &self.space, a, r.len), r.rigging))
                    .collect()
            })
            .collect()
    }

    /// Rows whose rigging equals the vacancy number.
    pub fn is_singular(&self, cfg: &Configuration, a: usize, row: &Row) -> bool {
        row.rigging == vacancy_unchecked(cfg, &self.space, a, row.len)
    }

    /// Reinterprets the rows in another type of at least the same extent.
    pub fn retype(&self, ty: AffineType) -> Result<Self> {
        let mut nodes = self.nodes.clone();
        if nodes[ty.rank().min(nodes.len())..].iter().any(|v| !v.is_empty()) {
            return invalid(format!("rows above node {} do not fit in {ty}", ty.rank()));
        }
        nodes.resize(ty.rank(), Vec::new());
        RiggedConfiguration::new(ty, self.space.clone(), nodes)
    }

    fn tolerated(&self, a: usize, vacancy: i64, rigging: i64) -> bool {
        self.relaxed
            && self.kind() == Kind::VDomino
            && self.ty.spin_tail().iter().any(|&(b, _)| b == a)
            && vacancy == -1
            && rigging == 0
    }

    fn check_rows(&self, strict: bool, out: &mut Vec<Violation>) {
        let cfg = self.configuration();
        let c = self.ty.constants();
        for a in 1..=self.ty.rank() {
            let unit = c.unit_half(a) as i64;
            let odd_allowed = self.relaxed && self.kind() == Kind::HDomino && a == self.ty.rank();
            for (len, _) in cfg.multiplicities(a) {
                if len.twice() % unit != 0 && !odd_allowed {
                    out.push(Violation::Width { a, len });
                }
            }
            let mut lengths: Vec<Half> = cfg.multiplicities(a).into_iter().map(|(l, _)| l).collect();
            if strict {
                let top = cfg.longest(a).twice() + 2 * unit;
                lengths = (1..=top / unit).rev().map(|j| Half(j * unit)).collect();
            }
            for len in lengths {
                let p = vacancy_unchecked(&cfg, &self.space, a, len);
                let occupied: Vec<&Row> = self.rows(a).iter().filter(|r| r.len == len).collect();
                let all_tolerated = !occupied.is_empty() && occupied.iter().all(|r| self.tolerated(a, p, r.rigging));
                if p < 0 && !all_tolerated {
                    out.push(Violation::NegativeVacancy { a, len, vacancy: p });
                }
                for r in occupied {
                    if r.rigging < 0 {
                        out.push(Violation::NegativeRigging {
                            a,
                            len,
                            rigging: r.rigging,
                        });
                    } else if r.rigging > p && !self.tolerated(a, p, r.rigging) {
                        out.push(Violation::RiggingExceedsVacancy {
                            a,
                            len,
                            rigging: r.rigging,
                            vacancy: p,
                        });
                    }
                }
            }
        }
    }

    /// All violated conditions for membership in `RC(lambda, L)`. Vacancy
    /// numbers are checked at occupied lengths only.
    pub fn validate(&self, lambda: &Partition) -> Vec<Violation> {
        self.validate_with(lambda, false)
    }

    /// As [`validate`](Self::validate), also checking vacancy numbers at
    /// every length up to two boxes past the longest row.
    pub fn validate_strict(&self, lambda: &Partition) -> Vec<Violation> {
        self.validate_with(lambda, true)
    }

    fn validate_with(&self, lambda: &Partition, strict: bool) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Err(e) = check_space(self.ty, &self.space) {
            out.push(Violation::Space(e.to_string()));
            return out;
        }
        match box_counts(self.ty, lambda, &self.space) {
            Err(e) => out.push(Violation::Weight(e.to_string())),
            Ok(expected) => {
                let cfg = self.configuration();
                for (a, want) in (1..=self.ty.rank()).zip(expected) {
                    let found = cfg.index_area(a);
                    if found != want {
                        out.push(Violation::BoxCount {
                            a,
                            expected: want,
                            found,
                        });
                    }
                }
            }
        }
        self.check_rows(strict, &mut out);
        out
    }

    /// The weight `lambda_a = sum_{b >= a} sum_i i L_i^(b) + |nu^(a-1)| - |nu^(a)|`.
    ///
    /// Fails when the result is not a partition reproducing the box counts,
    /// which happens when the configuration is not stable at its rank.
    pub fn weight(&self) -> Result<Partition> {
        let cfg = self.configuration();
        let n = self.ty.rank();
        let mut parts = Vec::new();
        for a in 1..=self.ty.max_weight_length() {
            let tail: i64 = (a..=n).map(|b| self.space.node_mass(b) as i64).sum();
            let v = Half::from_int(tail) + cfg.area(a - 1) - cfg.area(a);
            match v.to_int() {
                Some(x) if x >= 0 => parts.push(x as usize),
                _ => return precondition(format!("weight entry {a} is {v}; not a stable configuration")),
            }
        }
        let lambda =
            Partition::new(parts).map_err(|e| Error::Precondition(format!("weight is not a partition: {e}")))?;
        if !self.relaxed {
            let expected = box_counts(self.ty, &lambda, &self.space)?;
            if (1..=n).any(|a| cfg.index_area(a) != expected[a - 1]) {
                return precondition(format!(
                    "weight {lambda} does not reproduce the box counts; not a stable configuration"
                ));
            }
        }
        Ok(lambda)
    }

    /// `|J| = sum_a t^vee_a sum of riggings at a`.
    pub fn rigging_mass(&self) -> Result<Half> {
        let c = self.ty.constants();
        let total: Rat = (1..=self.ty.rank())
            .map(|a| c.t_check[a - 1] * self.rows(a).iter().map(|r| r.rigging).sum::<i64>())
            .sum();
        rat_to_half(total, "rigging mass")
    }

    /// `c(nu) + |J|`.
    pub fn charge(&self) -> Result<Half> {
        Ok(charge_config(&self.configuration(), &self.space)? + self.rigging_mass()?)
    }

    /// The simplified charge with nodes up to `cut`, including `gamma` times
    /// the riggings there.
    pub fn charge_stable_at(&self, cut: usize) -> Result<Half> {
        let kind = self.kind();
        let base = charge_stable(kind, &self.configuration(), &self.space, cut)?;
        let rig: i64 = (1..=cut).flat_map(|a| self.rows(a)).map(|r| r.rigging).sum();
        Ok(base + Half::from_int(kind.gamma() * rig))
    }

    /// The simplified charge cut at `l*` (or the last node carrying the full
    /// stable shape, if smaller).
    pub fn charge_stable(&self) -> Result<Half> {
        let profile = stable_profile(self)?;
        self.charge_stable_at(profile.l_star.min(self.ty.core_node()))
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space: Vec<String> = self
            .space
            .entries()
            .map(|(a, i, m)| format!("L_{i}^({a})={m}"))
            .collect();
        writeln!(
            f,
            "{}  {}",
            self.ty,
            if space.is_empty() {
                "L=0".into()
            } else {
                space.join(" ")
            }
        )?;
        for (a, rows) in self.annotated().into_iter().enumerate() {
            let cells: Vec<String> = rows.iter().map(|(l, p, j)| format!("{l}[{p}|{j}]")).collect();
            writeln!(
                f,
                "  {:>2}: {}",
                a + 1,
                if cells.is_empty() { "-".into() } else { cells.join(" ") }
            )?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NodeRepr {
    a: usize,
    rows: Vec<(Half, i64)>,
}

#[derive(Serialize, Deserialize)]
struct RcRepr {
    #[serde(rename = "type")]
    family: Family,
    rank: usize,
    #[serde(rename = "L", default)]
    space: QuantumSpace,
    nodes: Vec<NodeRepr>,
}

impl Serialize for RiggedConfiguration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RcRepr {
            family: self.ty.family(),
            rank: self.ty.rank(),
            space: self.space.clone(),
            nodes: (1..=self.ty.rank())
                .map(|a| NodeRepr {
                    a,
                    rows: self.rows(a).iter().map(|r| (r.len, r.rigging)).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RiggedConfiguration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RcRepr::deserialize(d)?;
        let ty = AffineType::new(r.family, r.rank).map_err(D::Error::custom)?;
        let mut nodes = vec![Vec::new(); ty.rank()];
        for node in r.nodes {
            if node.a == 0 || node.a > ty.rank() {
                return Err(D::Error::custom(format!(
                    "node {} is outside 1..={}",
                    node.a,
                    ty.rank()
                )));
            }
            nodes[node.a - 1].extend(node.rows.into_iter().map(|(l, j)| Row::new(l, j)));
        }
        RiggedConfiguration::new(ty, r.space, nodes).map_err(D::Error::custom)
    }
}
