//! Laurent polynomials in `q^(1/2)`, Gaussian binomials, the fermionic
//! formula and the identity expressing `M^kind` through type-A data.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

use crate::affine_data::{canonical_algebra, minimum_rank, AffineType, Kind};
use crate::error::{invalid, Error, Result};
use crate::half::Half;
use crate::rigged::{charge_config, enumerate_configurations, enumerate_rc, vacancy_unchecked};
use crate::tableaux::{all_partitions, lr_coefficient, partitions_of, Partition, QuantumSpace};

/// A finitely supported sum of `c q^e` with `e` on the half-integer
/// lattice. Keys are `2e`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial(BTreeMap<i64, i64>);

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial::default()
    }

    pub fn one() -> QPolynomial {
        QPolynomial::monomial(Half::ZERO, 1)
    }

    pub fn monomial(exponent: Half, coeff: i64) -> QPolynomial {
        let mut p = QPolynomial::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn add_term(&mut self, exponent: Half, coeff: i64) {
        let e = self.0.entry(exponent.twice()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exponent.twice());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Half, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (Half(e), c))
    }

    pub fn coeff(&self, exponent: Half) -> i64 {
        self.0.get(&exponent.twice()).copied().unwrap_or(0)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn min_exponent(&self) -> Option<Half> {
        self.0.keys().next().map(|&e| Half(e))
    }

    pub fn max_exponent(&self) -> Option<Half> {
        self.0.keys().next_back().map(|&e| Half(e))
    }

    /// `q^shift * self`.
    pub fn shift(&self, shift: Half) -> QPolynomial {
        QPolynomial(self.0.iter().map(|(&e, &c)| (e + shift.twice(), c)).collect())
    }

    /// The substitution `q -> q^k`.
    pub fn substitute_power(&self, k: i64) -> QPolynomial {
        assert!(k > 0, "substitution power must be positive");
        QPolynomial(self.0.iter().map(|(&e, &c)| (e * k, c)).collect())
    }

    /// Coefficients are symmetric about the middle exponent.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return true;
        };
        self.terms()
            .all(|(e, c)| self.coeff(Half(lo.twice() + hi.twice() - e.twice())) == c)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &rhs.0 {
                out.add_term(Half(e1 + e2), c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            let power = match e.to_int() {
                Some(0) => String::new(),
                Some(1) => "q".to_string(),
                Some(k) => format!("q^{k}"),
                None => format!("q^({e})"),
            };
            match (a, power.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{power}")?,
                _ => write!(f, "{a}{power}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.0.iter().map(|(&e, &c)| [e, c]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[i64; 2]>::deserialize(d)?;
        let mut p = QPolynomial::zero();
        for [e, c] in pairs {
            p.add_term(Half(e), c);
        }
        Ok(p)
    }
}

/// The Gaussian binomial `[p + m choose m]` in the variable `q^step`,
/// counted as partitions inside an `m x p` box.
pub fn qbinomial(p: i64, m: i64, step: i64) -> Result<QPolynomial> {
    if p < 0 || m < 0 {
        return invalid(format!("qbinomial needs p, m >= 0, got p = {p}, m = {m}"));
    }
    if step <= 0 {
        return invalid(format!("qbinomial step must be positive, got {step}"));
    }
    let (p, m) = (p as usize, m as usize);
    let top = p * m;
    // ways[j][k]: partitions of k into at most j parts, parts <= current size
    let mut ways = vec![vec![0i64; top + 1]; m + 1];
    for row in ways.iter_mut() {
        row[0] = 1;
    }
    for size in 1..=p {
        for j in 1..=m {
            for k in size..=top {
                ways[j][k] += ways[j - 1][k - size];
            }
        }
    }
    let mut out = QPolynomial::zero();
    for (k, &c) in ways[m].iter().enumerate() {
        out.add_term(Half::from_int(k as i64 * step), c);
    }
    Ok(out)
}

/// One configuration's contribution to the fermionic formula.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationTerm {
    pub nodes: Vec<Vec<Half>>,
    pub charge: Half,
    pub contribution: QPolynomial,
}

/// The fermionic formula with its per-configuration terms.
#[derive(Clone, Debug, Serialize)]
pub struct FermionicResult {
    pub polynomial: QPolynomial,
    pub per_configuration: Vec<ConfigurationTerm>,
}

fn step_of(ty: AffineType, a: usize) -> Result<i64> {
    let t = ty.constants().t_check[a - 1];
    if !t.is_integer() {
        return Err(Error::Invalid(format!("t^vee_{a} = {t} is not an integer")));
    }
    Ok(t.to_integer())
}

/// `M(lambda, L; q)` as a sum over admissible configurations of
/// `q^c(nu)` times Gaussian binomials in `q^(t^vee_a)`.
pub fn fermionic_m(ty: AffineType, lambda: &Partition, space: &QuantumSpace, limit: u64) -> Result<FermionicResult> {
    let steps = (1..=ty.rank()).map(|a| step_of(ty, a)).collect::<Result<Vec<_>>>()?;
    let mut per_configuration = Vec::new();
    let mut polynomial = QPolynomial::zero();
    for cfg in enumerate_configurations(ty, lambda, space, limit)? {
        let charge = charge_config(&cfg, space)?;
        let mut term = QPolynomial::monomial(charge, 1);
        for a in 1..=ty.rank() {
            for (len, m) in cfg.multiplicities(a) {
                let p = vacancy_unchecked(&cfg, space, a, len);
                term = &term * &qbinomial(p, m as i64, steps[a - 1])?;
            }
        }
        polynomial += &term;
        let nodes = (1..=ty.rank()).map(|a| cfg.lengths(a).to_vec()).collect();
        per_configuration.push(ConfigurationTerm {
            nodes,
            charge,
            contribution: term,
        });
    }
    Ok(FermionicResult {
        polynomial,
        per_configuration,
    })
}

/// `sum q^charge` over all rigged configurations.
pub fn m_by_enumeration(ty: AffineType, lambda: &Partition, space: &QuantumSpace, limit: u64) -> Result<QPolynomial> {
    let mut out = QPolynomial::zero();
    for rc in enumerate_rc(ty, lambda, space, limit)? {
        out.add_term(rc.charge()?, 1);
    }
    Ok(out)
}

/// Rank used for the stable fermionic formula of `kind`.
pub fn stable_rank(kind: Kind, lambda: &Partition, space: &QuantumSpace, margin: usize) -> Result<usize> {
    Ok(minimum_rank(kind, lambda, space)? + margin)
}

/// `M^kind(lambda, L; q)`, computed in the canonical algebra at
/// `minimum_rank + margin`. For the empty kind it vanishes unless
/// `|lambda| = |L|`.
pub fn stable_m(
    kind: Kind,
    lambda: &Partition,
    space: &QuantumSpace,
    margin: usize,
    limit: u64,
) -> Result<QPolynomial> {
    if space.size() < lambda.size() {
        return invalid(format!(
            "|L| = {} is smaller than |lambda| = {}",
            space.size(),
            lambda.size()
        ));
    }
    if kind == Kind::Empty && space.size() != lambda.size() {
        return Ok(QPolynomial::zero());
    }
    let ty = canonical_algebra(kind, stable_rank(kind, lambda, space, margin)?)?;
    Ok(fermionic_m(ty, lambda, space, limit)?.polynomial)
}

/// One nonzero `c^eta_{lambda mu}` of the right-hand side.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub mu: Partition,
    pub eta: Partition,
    pub coefficient: u64,
    pub m_empty: QPolynomial,
}

/// Both sides of `M^kind(lambda, L; q) = q^(-gamma (|L| - |lambda|) / 2)
/// sum c^eta_{lambda mu} M^empty(eta, L; q^gamma)`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub equal: bool,
    pub witnesses: Vec<Witness>,
}

pub fn verify_identity(
    kind: Kind,
    lambda: &Partition,
    space: &QuantumSpace,
    margin: usize,
    limit: u64,
) -> Result<IdentityCheck> {
    if kind == Kind::Empty {
        return invalid("the identity relates a nonempty kind to the empty one");
    }
    let lhs = stable_m(kind, lambda, space, margin, limit)?;
    let gamma = kind.gamma();
    let excess = space.size() - lambda.size();
    let mut witnesses = Vec::new();
    let mut sum = QPolynomial::zero();
    let mut cache: BTreeMap<Partition, QPolynomial> = BTreeMap::new();
    for mu in partitions_of(excess, kind) {
        for eta in all_partitions(space.size()) {
            let c = lr_coefficient(lambda, &mu, &eta);
            if c == 0 {
                continue;
            }
            let m = match cache.get(&eta) {
                Some(m) => m.clone(),
                None => {
                    let m = stable_m(Kind::Empty, &eta, space, margin, limit)?;
                    cache.insert(eta.clone(), m.clone());
                    m
                }
            };
            let scaled = m.substitute_power(gamma);
            for _ in 0..c {
                sum += &scaled;
            }
            witnesses.push(Witness {
                mu: mu.clone(),
                eta,
                coefficient: c,
                m_empty: m,
            });
        }
    }
    let rhs = sum.shift(Half(-gamma * excess as i64));
    Ok(IdentityCheck {
        equal: lhs == rhs,
        lhs,
        rhs,
        witnesses,
    })
}

#[cfg(test)]
mod tests;
