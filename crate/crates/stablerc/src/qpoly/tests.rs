use proptest::prelude::*;

use super::*;
use crate::affine_data::Family;
use crate::rigged::DEFAULT_MAX_CONFIGS;

/// `[n choose k]_q` by the q-Pascal rule `[n-1 choose k-1] + q^k [n-1 choose k]`.
fn pascal_oracle(n: i64, k: i64) -> QPolynomial {
    if k < 0 || k > n {
        return QPolynomial::zero();
    }
    if k == 0 || k == n {
        return QPolynomial::one();
    }
    &pascal_oracle(n - 1, k - 1) + &pascal_oracle(n - 1, k).shift(Half::from_int(k))
}

fn space(triples: &[[usize; 3]]) -> QuantumSpace {
    QuantumSpace::from_triples(triples).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn small_binomials() {
    assert_eq!(qbinomial(5, 0, 3).unwrap(), QPolynomial::one());
    assert_eq!(qbinomial(1, 1, 1).unwrap().to_string(), "1 + q");
    assert_eq!(qbinomial(2, 2, 1).unwrap().to_string(), "1 + q + 2q^2 + q^3 + q^4");
    assert_eq!(qbinomial(2, 2, 1).unwrap(), pascal_oracle(4, 2));
    assert!(qbinomial(-1, 2, 1).is_err());
    assert!(qbinomial(1, -2, 1).is_err());
}

#[test]
fn display_and_json() {
    let mut p = QPolynomial::monomial(Half(-3), 2);
    p.add_term(Half::from_int(1), -1);
    assert_eq!(p.to_string(), "2q^(-3/2) - q");
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, "[[-3,2],[2,-1]]");
    assert_eq!(serde_json::from_str::<QPolynomial>(&json).unwrap(), p);
    assert_eq!(QPolynomial::zero().to_string(), "0");
}

#[test]
fn empty_weight_and_space_give_one() {
    for kind in Kind::ALL {
        let ty = canonical_algebra(kind, 5).unwrap();
        let m = fermionic_m(ty, &Partition::empty(), &QuantumSpace::new(), DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(m.polynomial, QPolynomial::one());
        let e = m_by_enumeration(ty, &Partition::empty(), &QuantumSpace::new(), DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(e, QPolynomial::one());
    }
}

#[test]
fn a2_single_configuration() {
    let ty = AffineType::new(Family::A1, 2).unwrap();
    let l = space(&[[1, 1, 2]]);
    let m = fermionic_m(ty, &part(&[1, 1]), &l, DEFAULT_MAX_CONFIGS).unwrap();
    assert_eq!(m.per_configuration.len(), 1);
    // nu^(1) = (1): c = Q_1(nu)^2 - 2 Q_1(nu) = -1, p = 0
    assert_eq!(m.polynomial, QPolynomial::monomial(Half::from_int(-1), 1));
    assert_eq!(
        m_by_enumeration(ty, &part(&[1, 1]), &l, DEFAULT_MAX_CONFIGS).unwrap(),
        m.polynomial
    );
}

#[test]
fn fermionic_formula_matches_enumeration_on_small_instances() {
    let cases = [
        (Family::D1, 6, vec![1], vec![[1, 1, 3]]),
        (Family::C1, 4, vec![2], vec![[1, 1, 2], [2, 1, 1]]),
        (Family::D2, 4, vec![1, 1], vec![[1, 2, 1], [1, 1, 1]]),
        (Family::A1, 4, vec![2, 1, 1], vec![[1, 1, 4]]),
        (Family::B1, 5, vec![], vec![[1, 1, 2]]),
        (Family::A2even, 3, vec![1], vec![[1, 1, 3]]),
        (Family::A2odd, 4, vec![1], vec![[1, 1, 3]]),
    ];
    for (family, n, lam, l) in cases {
        let ty = AffineType::new(family, n).unwrap();
        let (lam, l) = (part(&lam), space(&l));
        let f = fermionic_m(ty, &lam, &l, DEFAULT_MAX_CONFIGS).unwrap();
        let e = m_by_enumeration(ty, &lam, &l, DEFAULT_MAX_CONFIGS).unwrap();
        assert_eq!(f.polynomial, e, "{ty}");
        let total: QPolynomial = f.per_configuration.iter().map(|t| t.contribution.clone()).sum();
        assert_eq!(total, f.polynomial);
        let count = enumerate_rc(ty, &lam, &l, DEFAULT_MAX_CONFIGS).unwrap().len() as i64;
        assert_eq!(f.polynomial.at_one(), count);
    }
}

#[test]
fn stable_m_of_the_empty_kind_is_type_a() {
    let l = space(&[[1, 1, 3]]);
    let lam = part(&[2, 1]);
    let ty = AffineType::new(Family::A1, 4).unwrap();
    let direct = fermionic_m(ty, &lam, &l, DEFAULT_MAX_CONFIGS).unwrap().polynomial;
    assert_eq!(stable_m(Kind::Empty, &lam, &l, 1, DEFAULT_MAX_CONFIGS).unwrap(), direct);
    assert!(stable_m(Kind::Empty, &part(&[1]), &l, 1, DEFAULT_MAX_CONFIGS)
        .unwrap()
        .is_zero());
    assert!(stable_m(Kind::SingleBox, &part(&[2, 2]), &l, 1, DEFAULT_MAX_CONFIGS).is_err());
}

#[test]
fn stable_m_does_not_depend_on_the_margin() {
    let l = space(&[[1, 1, 2], [2, 1, 1]]);
    for kind in [Kind::SingleBox, Kind::HDomino, Kind::VDomino] {
        for lam in [part(&[]), part(&[1, 1]), part(&[2])] {
            let a = stable_m(kind, &lam, &l, 1, DEFAULT_MAX_CONFIGS).unwrap();
            let b = stable_m(kind, &lam, &l, 2, DEFAULT_MAX_CONFIGS).unwrap();
            assert_eq!(a, b, "{kind} {lam}");
        }
    }
}

#[test]
fn single_box_identity_with_two_boxes() {
    let l = space(&[[1, 1, 2]]);
    let check = verify_identity(Kind::SingleBox, &Partition::empty(), &l, 1, DEFAULT_MAX_CONFIGS).unwrap();
    assert!(check.equal, "{} vs {}", check.lhs, check.rhs);
    let etas: Vec<Partition> = check.witnesses.iter().map(|w| w.eta.clone()).collect();
    assert_eq!(etas, vec![part(&[2]), part(&[1, 1])]);
}

#[test]
fn horizontal_domino_with_odd_excess_is_empty() {
    let l = space(&[[1, 1, 3]]);
    let check = verify_identity(Kind::HDomino, &part(&[1, 1]), &l, 1, DEFAULT_MAX_CONFIGS).unwrap();
    assert!(check.witnesses.is_empty());
    assert!(check.lhs.is_zero());
    assert!(check.equal);
}

proptest! {
    #[test]
    fn binomials_match_q_pascal(p in 0i64..7, m in 0i64..7) {
        prop_assert_eq!(qbinomial(p, m, 1).unwrap(), pascal_oracle(p + m, m));
    }

    #[test]
    fn binomials_are_palindromic_of_full_degree(p in 0i64..7, m in 0i64..7, step in 1i64..4) {
        let b = qbinomial(p, m, step).unwrap();
        prop_assert!(b.is_palindromic());
        prop_assert_eq!(b.max_exponent(), Some(Half::from_int(p * m * step)));
        prop_assert_eq!(b, pascal_oracle(p + m, m).substitute_power(step));
    }
}
