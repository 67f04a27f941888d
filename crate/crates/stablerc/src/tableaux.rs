//! Partitions, skew tableaux and Littlewood-Richardson tableaux.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine_data::Kind;
use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return invalid(format!("{parts:?} is not a partition"));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_parts(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts; zero for the empty partition.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// Whether the diagram of `p` can be tiled by copies of the tile of `kind`.
pub fn is_tileable(p: &Partition, kind: Kind) -> bool {
    match kind {
        Kind::Empty => p.is_empty(),
        Kind::SingleBox => true,
        Kind::HDomino => p.parts().iter().all(|x| x % 2 == 0),
        Kind::VDomino => p.conjugate().parts().iter().all(|x| x % 2 == 0),
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` tiled by `kind`.
pub fn partitions_of(n: usize, kind: Kind) -> Vec<Partition> {
    all_partitions(n).into_iter().filter(|p| is_tileable(p, kind)).collect()
}

/// Multiplicities `L_i^(a)` of a tensor product of rectangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumSpace(BTreeMap<(usize, usize), u64>);

impl QuantumSpace {
    pub fn new() -> QuantumSpace {
        QuantumSpace::default()
    }

    /// Sets `L_i^(a) = m`.
    pub fn set(&mut self, a: usize, i: usize, m: u64) {
        if m == 0 {
            self.0.remove(&(a, i));
        } else {
            self.0.insert((a, i), m);
        }
    }

    pub fn get(&self, a: usize, i: usize) -> u64 {
        self.0.get(&(a, i)).copied().unwrap_or(0)
    }

    /// `(a, i, L_i^(a))` for every nonzero entry.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.0.iter().map(|(&(a, i), &m)| (a, i, m))
    }

    /// Entries `(i, L_i^(a))` at one node.
    pub fn at_node(&self, a: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.range((a, 0)..(a + 1, 0)).map(|(&(_, i), &m)| (i, m))
    }

    /// `|L| = sum a i L_i^(a)`.
    pub fn size(&self) -> usize {
        self.entries().map(|(a, i, m)| a * i * m as usize).sum()
    }

    /// `sum_i i L_i^(a)`.
    pub fn node_mass(&self, a: usize) -> u64 {
        self.at_node(a).map(|(i, m)| i as u64 * m).sum()
    }

    /// Largest node with a nonzero entry.
    pub fn max_node(&self) -> usize {
        self.0.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `(a, i, m)` triples, sorted.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.entries().map(|(a, i, m)| [a, i, m as usize]).collect()
    }

    pub fn from_triples(triples: &[[usize; 3]]) -> Result<QuantumSpace> {
        let mut l = QuantumSpace::new();
        for &[a, i, m] in triples {
            if a == 0 || i == 0 {
                return invalid(format!("quantum space entry ({a},{i},{m}) must have a, i >= 1"));
            }
            l.set(a, i, l.get(a, i) + m as u64);
        }
        Ok(l)
    }
}

impl Serialize for QuantumSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuantumSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = Vec::<[usize; 3]>::deserialize(d)?;
        QuantumSpace::from_triples(&t).map_err(serde::de::Error::custom)
    }
}

/// A filling of the skew shape `outer / inner`; `rows[r]` lists the letters
/// in columns `inner_r + 1 ..= outer_r` of row `r + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewTableau {
    pub inner: Partition,
    pub outer: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(inner: Partition, outer: Partition, rows: Vec<Vec<u32>>) -> Result<SkewTableau> {
        let t = SkewTableau { inner, outer, rows };
        t.check_shape()?;
        Ok(t)
    }

    /// The tableau with no cells and both shapes equal to `shape`.
    pub fn straight_empty(shape: Partition) -> SkewTableau {
        let rows = vec![Vec::new(); shape.len()];
        SkewTableau {
            inner: shape.clone(),
            outer: shape,
            rows,
        }
    }

    pub fn check_shape(&self) -> Result<()> {
        if !self.outer.contains(&self.inner) {
            return invalid(format!("{} does not contain {}", self.outer, self.inner));
        }
        if self.rows.len() != self.outer.len() {
            return invalid(format!(
                "tableau has {} rows but the outer shape has {}",
                self.rows.len(),
                self.outer.len()
            ));
        }
        for (r, row) in self.rows.iter().enumerate() {
            let want = self.outer.part(r + 1) - self.inner.part(r + 1);
            if row.len() != want {
                return invalid(format!("row {} has {} letters, expected {want}", r + 1, row.len()));
            }
            if row.contains(&0) {
                return invalid("letters must be positive");
            }
        }
        Ok(())
    }

    /// Letter in row `r`, column `c` (both 1-based), if the cell is in the skew shape.
    pub fn letter(&self, r: usize, c: usize) -> Option<u32> {
        let lo = self.inner.part(r);
        if r == 0 || r > self.rows.len() || c <= lo {
            return None;
        }
        self.rows[r - 1].get(c - lo - 1).copied()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        if self.check_shape().is_err() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let lo = self.inner.part(r + 1);
            for (j, &x) in row.iter().enumerate() {
                if let Some(above) = self.letter(r, lo + j + 1) {
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Appends `letter` at the end of row `r` (1-based), growing the outer shape.
    pub fn push(&mut self, r: usize, letter: u32) -> Result<()> {
        let outer = self.outer.parts().to_vec();
        let mut grown = outer.clone();
        if r > grown.len() + 1 || r == 0 {
            return invalid(format!("cannot add a box in row {r}"));
        }
        if r == grown.len() + 1 {
            grown.push(0);
            self.rows.push(Vec::new());
        }
        grown[r - 1] += 1;
        self.outer =
            Partition::new(grown).map_err(|_| Error::Invalid(format!("adding a box to row {r} breaks the shape")))?;
        self.rows[r - 1].push(letter);
        Ok(())
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            let dots = ".".repeat(self.inner.part(r + 1));
            let letters: String = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{dots}{letters}")?;
        }
        Ok(())
    }
}

/// Rows from top to bottom, each read from right to left.
pub fn reverse_row_word(t: &SkewTableau) -> Vec<u32> {
    t.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
}

/// Every prefix contains at least as many `i` as `i + 1`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut count: Vec<usize> = Vec::new();
    for &x in word {
        let x = x as usize;
        if x == 0 {
            return false;
        }
        if count.len() <= x {
            count.resize(x + 1, 0);
        }
        count[x] += 1;
        if x > 1 && count[x] > count[x - 1] {
            return false;
        }
    }
    true
}

pub fn is_lr(t: &SkewTableau) -> bool {
    t.is_semistandard() && is_yamanouchi(&reverse_row_word(t))
}

/// Letter multiplicities; a partition whenever `t` is an LR tableau.
pub fn weight_of(t: &SkewTableau) -> Vec<usize> {
    let mut w: Vec<usize> = Vec::new();
    for &x in t.rows.iter().flatten() {
        let x = x as usize;
        if w.len() < x {
            w.resize(x, 0);
        }
        w[x - 1] += 1;
    }
    w
}

struct LrSearch<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    mu: &'a Partition,
    rows: Vec<Vec<u32>>,
    count: Vec<usize>,
    limit: Option<u64>,
    found: u64,
    keep: bool,
    out: Vec<SkewTableau>,
}

impl LrSearch<'_> {
    // Fills cells in reading order: rows top to bottom, right to left.
    fn run(&mut self, r: usize, c: usize) -> Result<()> {
        let nrows = self.outer.len();
        if r > nrows {
            self.found += 1;
            if let Some(limit) = self.limit {
                if self.found > limit {
                    return Err(Error::Budget {
                        what: "tableaux",
                        limit,
                    });
                }
            }
            if self.keep {
                self.out.push(SkewTableau {
                    inner: self.inner.clone(),
                    outer: self.outer.clone(),
                    rows: self.rows.clone(),
                });
            }
            return Ok(());
        }
        let lo = self.inner.part(r);
        if c <= lo {
            return self.run(r + 1, self.outer.part(r + 1));
        }
        let offset = c - lo - 1;
        let right = self.rows[r - 1].get(offset + 1).copied();
        let above = if r > 1 && c > self.inner.part(r - 1) {
            Some(self.rows[r - 2][c - self.inner.part(r - 1) - 1])
        } else {
            None
        };
        let max = right.unwrap_or(self.mu.len() as u32);
        let min = above.map_or(1, |x| x + 1);
        for x in min..=max {
            let i = x as usize;
            if self.count[i] >= self.mu.part(i) || (i > 1 && self.count[i] >= self.count[i - 1]) {
                continue;
            }
            self.count[i] += 1;
            self.rows[r - 1][offset] = x;
            self.run(r, c - 1)?;
            self.count[i] -= 1;
        }
        Ok(())
    }
}

fn lr_search(
    eta: &Partition,
    lambda: &Partition,
    mu: &Partition,
    limit: Option<u64>,
    keep: bool,
) -> Result<(u64, Vec<SkewTableau>)> {
    if !eta.contains(lambda) {
        return invalid(format!("{lambda} is not contained in {eta}"));
    }
    if eta.size() != lambda.size() + mu.size() {
        return Ok((0, Vec::new()));
    }
    let rows = (1..=eta.len()).map(|r| vec![0; eta.part(r) - lambda.part(r)]).collect();
    let mut s = LrSearch {
        inner: lambda,
        outer: eta,
        mu,
        rows,
        count: vec![0; mu.len() + 2],
        limit,
        found: 0,
        keep,
        out: Vec::new(),
    };
    s.run(1, eta.part(1))?;
    s.out.sort();
    Ok((s.found, s.out))
}

/// All LR tableaux of shape `eta / lambda` and weight `mu`, ordered
/// lexicographically by their row-major filling.
pub fn enumerate_lr(eta: &Partition, lambda: &Partition, mu: &Partition) -> Result<Vec<SkewTableau>> {
    lr_search(eta, lambda, mu, None, true).map(|(_, v)| v)
}

/// As [`enumerate_lr`], failing once more than `limit` tableaux are found.
pub fn enumerate_lr_bounded(
    eta: &Partition,
    lambda: &Partition,
    mu: &Partition,
    limit: u64,
) -> Result<Vec<SkewTableau>> {
    lr_search(eta, lambda, mu, Some(limit), true).map(|(_, v)| v)
}

/// The Littlewood-Richardson coefficient `c^eta_{lambda mu}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, eta: &Partition) -> u64 {
    if !eta.contains(lambda) {
        return 0;
    }
    lr_search(eta, lambda, mu, None, false).map_or(0, |(n, _)| n)
}
