//! Static data attached to the seven nonexceptional affine families.
//!
//! Nodes are numbered `1..=n` throughout; node 0 only enters through the Kac
//! labels used to derive `t` and `t^vee`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::tableaux::{Partition, QuantumSpace};

/// Exact rational used for the bilinear form and the `t` constants.
pub type Rat = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `A_n^(1)`
    A1,
    /// `B_n^(1)`
    B1,
    /// `C_n^(1)`
    C1,
    /// `D_n^(1)`
    D1,
    /// `A_{2n}^(2)`
    A2even,
    /// `A_{2n-1}^(2)`
    A2odd,
    /// `D_{n+1}^(2)`
    D2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A1,
        Family::B1,
        Family::C1,
        Family::D1,
        Family::A2even,
        Family::A2odd,
        Family::D2,
    ];

    pub fn min_rank(self) -> usize {
        match self {
            Family::A1 | Family::A2even => 1,
            Family::C1 | Family::A2odd | Family::D2 => 2,
            Family::B1 => 3,
            Family::D1 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::B1 => "B1",
            Family::C1 => "C1",
            Family::D1 => "D1",
            Family::A2even => "A2even",
            Family::A2odd => "A2odd",
            Family::D2 => "D2",
        }
    }

    fn twisted(self) -> bool {
        matches!(self, Family::A2even | Family::A2odd | Family::D2)
    }

    /// Kac labels `a_0..a_n` and dual labels `a^vee_0..a^vee_n`.
    fn kac_labels(self, n: usize) -> (Vec<i64>, Vec<i64>) {
        let ones = vec![1; n + 1];
        // 1,1,2,...,2 followed by `tail`
        let mid = |tail: &[i64]| {
            let mut v = vec![1, 1];
            v.resize(n + 1 - tail.len(), 2);
            v.extend_from_slice(tail);
            v
        };
        let inner = |ends: i64| {
            let mut v = vec![2; n + 1];
            v[0] = ends;
            v[n] = ends;
            v
        };
        match self {
            Family::A1 => (ones.clone(), ones),
            Family::B1 => (mid(&[2]), mid(&[1])),
            Family::C1 => (inner(1), ones),
            Family::D1 => (mid(&[1, 1]), mid(&[1, 1])),
            Family::A2even => {
                let mut a = vec![2; n + 1];
                a[n] = 1;
                let mut av = vec![2; n + 1];
                av[0] = 1;
                (a, av)
            }
            Family::A2odd => (mid(&[1]), mid(&[2])),
            Family::D2 => (ones, inner(1)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Invalid(format!("unknown family {s:?}")))
    }
}

/// An affine family together with its rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineType {
    family: Family,
    rank: usize,
}

impl AffineType {
    pub fn new(family: Family, rank: usize) -> Result<AffineType> {
        if rank < family.min_rank() {
            return invalid(format!(
                "rank {rank} is below the minimum {} for family {family}",
                family.min_rank()
            ));
        }
        Ok(AffineType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> Kind {
        kind_of(*self)
    }

    pub fn constants(&self) -> TypeConstants {
        constants_of(*self)
    }

    /// Largest node carrying a full copy of the stable shape.
    pub fn core_node(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A1 | Family::A2even => n,
            Family::B1 | Family::C1 | Family::A2odd | Family::D2 => n - 1,
            Family::D1 => n - 2,
        }
    }

    /// Nodes above [`core_node`](Self::core_node) and how they relate to the
    /// stable shape.
    pub fn spin_tail(&self) -> Vec<(usize, TailShape)> {
        let n = self.rank;
        match self.family {
            Family::A1 | Family::A2even => vec![],
            Family::C1 | Family::D2 => vec![(n, TailShape::Same)],
            Family::B1 | Family::A2odd => vec![(n, TailShape::HalvedColumns)],
            Family::D1 => vec![(n - 1, TailShape::HalvedColumns), (n, TailShape::HalvedColumns)],
        }
    }

    /// Maximal length of a weight identified with a partition.
    pub fn max_weight_length(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A1 => n,
            Family::D1 => n - 2,
            _ => n - 1,
        }
    }

    /// Nodes whose vacancy numbers use a type-specific expression; the
    /// quantum space must vanish there.
    pub fn special_nodes(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A1 | Family::C1 | Family::A2even | Family::D2 => vec![n],
            Family::B1 | Family::A2odd => vec![n - 1, n],
            Family::D1 => vec![n - 2, n - 1, n],
        }
    }

    /// Notation such as `D_8^(1)`.
    pub fn symbol(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A1 => format!("A_{n}^(1)"),
            Family::B1 => format!("B_{n}^(1)"),
            Family::C1 => format!("C_{n}^(1)"),
            Family::D1 => format!("D_{n}^(1)"),
            Family::A2even => format!("A_{}^(2)", 2 * n),
            Family::A2odd => format!("A_{}^(2)", 2 * n - 1),
            Family::D2 => format!("D_{}^(2)", n + 1),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

/// Relation between a spin-tail node and the stable shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailShape {
    Same,
    HalvedColumns,
}

/// The tile attached to a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Empty,
    SingleBox,
    HDomino,
    VDomino,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Empty, Kind::SingleBox, Kind::HDomino, Kind::VDomino];

    /// Number of columns of the tile; undefined for the empty tile.
    pub fn width(self) -> Option<usize> {
        match self {
            Kind::Empty => None,
            Kind::SingleBox | Kind::VDomino => Some(1),
            Kind::HDomino => Some(2),
        }
    }

    /// Number of cells of the tile.
    pub fn cell_count(self) -> usize {
        match self {
            Kind::Empty => 0,
            Kind::SingleBox => 1,
            Kind::HDomino | Kind::VDomino => 2,
        }
    }

    pub fn gamma(self) -> i64 {
        if self == Kind::SingleBox {
            2
        } else {
            1
        }
    }

    /// The node `a` whose partition is tiled by the kind.
    pub fn a_diamond(self, n: usize) -> usize {
        match self {
            Kind::Empty => n,
            Kind::SingleBox | Kind::HDomino => n - 1,
            Kind::VDomino => n - 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Empty => "empty",
            Kind::SingleBox => "singlebox",
            Kind::HDomino => "hdomino",
            Kind::VDomino => "vdomino",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        Kind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(&key))
            .ok_or_else(|| Error::Invalid(format!("unknown kind {s:?}")))
    }
}

/// Constants of a fixed type. Vectors are indexed by `a - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeConstants {
    pub t: Vec<Rat>,
    pub t_check: Vec<Rat>,
    pub epsilon: Vec<i64>,
    pub upsilon: Vec<Rat>,
    pub gamma: i64,
    /// `(alpha_a | alpha_b)` on `I_0`.
    pub pairing: Vec<Vec<Rat>>,
    /// `(Lambda_a | Lambda_b)` on `I_0`.
    pub weight_form: Vec<Vec<Rat>>,
    pub a_diamond: usize,
}

impl TypeConstants {
    pub fn pair(&self, a: usize, b: usize) -> Rat {
        self.pairing[a - 1][b - 1]
    }

    /// Box width of node `a` in half-units.
    pub fn unit_half(&self, a: usize) -> u32 {
        let u = self.upsilon[a - 1] * 2;
        u.to_integer() as u32
    }
}

pub fn kind_of(ty: AffineType) -> Kind {
    match ty.family {
        Family::A1 => Kind::Empty,
        Family::A2even | Family::D2 => Kind::SingleBox,
        Family::C1 => Kind::HDomino,
        Family::B1 | Family::A2odd | Family::D1 => Kind::VDomino,
    }
}

fn canonical_family(kind: Kind) -> Family {
    match kind {
        Kind::Empty => Family::A1,
        Kind::SingleBox => Family::D2,
        Kind::HDomino => Family::C1,
        Kind::VDomino => Family::D1,
    }
}

pub fn canonical_algebra(kind: Kind, rank: usize) -> Result<AffineType> {
    AffineType::new(canonical_family(kind), rank)
}

/// Smallest rank of the canonical algebra at which every configuration
/// of `RC(lambda, L)` is stable and every `mu` tiled by `kind` with
/// `|mu| = |L| - |lambda|` fits under the rank condition of the bijection.
pub fn minimum_rank(kind: Kind, lambda: &Partition, space: &QuantumSpace) -> Result<usize> {
    let (total, size) = (space.size(), lambda.size());
    if total < size {
        return invalid(format!("|L| = {total} is smaller than |lambda| = {size}"));
    }
    let k = lambda.len().max(space.max_node());
    let family = canonical_family(kind);
    let rows = match kind.width() {
        Some(width) => (total - size).div_ceil(width),
        None => 0,
    };
    // a_diamond >= k + rows, and L clear of the special nodes
    let (offset, special) = match kind {
        Kind::Empty => (1, 1),
        Kind::VDomino => (2, 3),
        _ => (1, 1),
    };
    let n = (k + rows + offset).max(space.max_node() + special);
    Ok(n.max(family.min_rank()))
}

fn edge_list(family: Family, n: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|a| (a, a + 1)).collect();
    if family == Family::D1 {
        edges.pop();
        edges.push((n - 2, n));
    }
    edges
}

fn pairing_matrix(family: Family, n: usize) -> Vec<Vec<Rat>> {
    let r = if family.twisted() { 2 } else { 1 };
    let long = Rat::from_integer(2 * r);
    let short = long / 2;
    let mut g = vec![vec![Rat::zero(); n]; n];
    match family {
        Family::A1 | Family::D1 => {
            for (a, row) in g.iter_mut().enumerate() {
                row[a] = long;
            }
            for (a, b) in edge_list(family, n) {
                g[a - 1][b - 1] = -long / 2;
                g[b - 1][a - 1] = -long / 2;
            }
        }
        // B_n: alpha_1..alpha_{n-1} long, alpha_n short.
        Family::B1 | Family::A2even | Family::D2 => {
            for (a, row) in g.iter_mut().enumerate() {
                row[a] = if a + 1 == n { short } else { long };
            }
            for a in 1..n {
                g[a - 1][a] = -short;
                g[a][a - 1] = -short;
            }
        }
        // C_n: alpha_1..alpha_{n-1} short, alpha_n long.
        Family::C1 | Family::A2odd => {
            for (a, row) in g.iter_mut().enumerate() {
                row[a] = if a + 1 == n { long } else { short };
            }
            for a in 1..n {
                let v = if a + 1 == n { -short } else { -short / 2 };
                g[a - 1][a] = v;
                g[a][a - 1] = v;
            }
        }
    }
    g
}

/// Inverse of a nonsingular square matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("form matrix is nonsingular");
        a.swap(col, piv);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= f * pv;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn constants_of(ty: AffineType) -> TypeConstants {
    let (family, n) = (ty.family, ty.rank);
    let (a, av) = family.kac_labels(n);
    let ratio = |p: i64, q: i64| Rat::new(p, q);
    let t = (1..=n)
        .map(|i| ratio(a[i], av[i]).max(Rat::from_integer(av[0])))
        .collect();
    let t_check = (1..=n)
        .map(|i| ratio(av[i], a[i]).max(Rat::from_integer(a[0])))
        .collect();
    let mut epsilon = vec![1; n];
    if family == Family::A2even {
        epsilon[n - 1] = 2;
    }
    let mut upsilon = vec![Rat::one(); n];
    match family {
        Family::C1 => upsilon[n - 1] = Rat::from_integer(2),
        Family::B1 => upsilon[n - 1] = Rat::new(1, 2),
        _ => {}
    }
    let pairing = pairing_matrix(family, n);
    let inv = invert(&pairing);
    let half_len: Vec<Rat> = (0..n).map(|i| pairing[i][i] / 2).collect();
    let weight_form = (0..n)
        .map(|i| (0..n).map(|j| half_len[i] * inv[i][j] * half_len[j]).collect())
        .collect();
    let kind = kind_of(ty);
    TypeConstants {
        t,
        t_check,
        epsilon,
        upsilon,
        gamma: if matches!(family, Family::A2even | Family::D2) {
            2
        } else {
            1
        },
        pairing,
        weight_form,
        a_diamond: kind.a_diamond(n),
    }
}
