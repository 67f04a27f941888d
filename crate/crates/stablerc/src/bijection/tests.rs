use super::*;
use crate::fixtures::{d8_arrows, d8_lambda, d8_space, d8_state, d8_state_rows, d8_tableau, d8_type};
use crate::tableaux::QuantumSpace;

fn triples(rc: &RiggedConfiguration) -> Vec<Vec<(i64, i64, i64)>> {
    rc.annotated()
        .into_iter()
        .map(|v| v.into_iter().map(|(l, p, j)| (l.to_int().unwrap(), p, j)).collect())
        .collect()
}

#[test]
fn d8_trace_reproduces_every_state_and_tableau() {
    let out = psi(&d8_state(0)).unwrap();
    assert_eq!(out.trace.len(), 10);
    for (i, step) in out.trace.iter().enumerate() {
        assert_eq!(step.l, Half::from_int(d8_arrows()[i]), "arrow {i}");
        assert_eq!(triples(&step.rc), d8_state_rows(i + 1), "state {}", i + 1);
        assert_eq!(step.tableau, d8_tableau(i), "tableau {i}");
    }
    assert_eq!(out.eta, Partition::new(vec![4, 3, 3, 3, 1, 1]).unwrap());
    assert_eq!(out.mu, Partition::new(vec![3, 3, 2, 2]).unwrap());
    assert_eq!(out.lambda, d8_lambda());
    let last = d8_state_rows(10);
    let image = triples(&out.rc);
    assert_eq!(&image[..5], &last[..5]);
    assert!(image[5..].iter().all(Vec::is_empty));
    assert!(is_lr(&out.tableau));
}

#[test]
fn d8_first_delta_stops_at_node_three() {
    let out = delta(&d8_state(0), Half::from_int(3)).unwrap();
    assert_eq!(out.k, 3);
    assert!(out.rc.is_relaxed());
    assert_eq!(triples(&out.rc), d8_state_rows(1));
    let second = delta(&out.rc, Half::from_int(3)).unwrap();
    assert_eq!(second.k, 4);
    assert!(!second.rc.is_relaxed());
}

#[test]
fn d8_charge_rises_by_half_per_delta() {
    let out = psi(&d8_state(0)).unwrap();
    // the simplified charge up to node 6 ignores the spin nodes
    let mut prev = d8_state(0).charge_stable_at(6).unwrap();
    for step in &out.trace {
        let c = step.rc.charge_stable_at(6).unwrap();
        assert_eq!(c - prev, Half(1));
        prev = c;
    }
    // charge_in = gamma * charge_A(out) - (gamma / 2)(|L| - |lambda|), gamma = 1
    let a = out.rc.charge().unwrap();
    assert_eq!(d8_state(0).charge().unwrap(), a - Half(10));
}

#[test]
fn d8_groups_follow_the_worked_order() {
    let t = d8_tableau(9);
    let g = group_tableau(&t).unwrap();
    assert_eq!(g.sizes(), vec![4, 4, 2]);
    assert_eq!(g.application_order(), vec![4, 3, 2, 1, 6, 5, 4, 1, 4, 3]);
}

#[test]
fn d8_psi_tilde_recovers_the_initial_state() {
    let out = psi(&d8_state(0)).unwrap();
    let back = psi_tilde_traced(&out.rc, &out.tableau, d8_type()).unwrap();
    assert_eq!(back.rc, d8_state(0));
    // reversing the arrows visits the recorded states backwards
    for (i, step) in back.trace.iter().enumerate() {
        assert_eq!(triples(&step.rc), d8_state_rows(9 - i), "state {}", 9 - i);
    }
}

#[test]
fn delta_needs_a_row_of_the_given_length() {
    let ty = AffineType::new(Family::D1, 6).unwrap();
    let rc = RiggedConfiguration::empty(ty, QuantumSpace::new()).unwrap();
    let err = delta(&rc, Half::from_int(1)).unwrap_err();
    assert!(err.to_string().contains("no removable row"));
}

#[test]
fn delta_pair_rejects_other_kinds() {
    let ty = AffineType::new(Family::C1, 4).unwrap();
    let rc = RiggedConfiguration::empty(ty, QuantumSpace::new()).unwrap();
    let err = delta_pair(&rc, Half::from_int(2)).unwrap_err();
    assert!(err.to_string().contains("pairing only for vertical-domino kind"));
}

#[test]
fn delta_pair_on_d8_is_clean() {
    let (a, b) = delta_pair(&d8_state(0), Half::from_int(3)).unwrap();
    assert_eq!((a.k, b.k), (3, 4));
    assert_eq!(triples(&b.rc), d8_state_rows(2));
}

#[test]
fn delta_tilde_on_the_empty_configuration_adds_a_box_at_every_node() {
    let ty = AffineType::new(Family::D2, 5).unwrap();
    let rc = RiggedConfiguration::empty(ty, QuantumSpace::new()).unwrap();
    let out = delta_tilde(&rc, 1).unwrap();
    for a in 1..=5 {
        assert_eq!(out.configuration().lengths(a), &[Half::from_int(1)], "node {a}");
    }
    let back = delta(&out, Half::from_int(1)).unwrap();
    assert_eq!(back.k, 1);
    assert_eq!(back.rc, rc);
}

#[test]
fn delta_tilde_then_delta_is_the_identity_on_d8() {
    let start = d8_state(10);
    let up = delta_tilde(&start, 4).unwrap();
    assert_eq!(triples(&up), d8_state_rows(9));
    let down = delta(&up, Half::from_int(1)).unwrap();
    assert_eq!(down.k, 4);
    assert_eq!(down.rc, start);
}

#[test]
fn psi_on_the_empty_kind_is_the_identity() {
    let ty = AffineType::new(Family::A1, 3).unwrap();
    let l = QuantumSpace::from_triples(&[[1, 1, 2]]).unwrap();
    let rc = RiggedConfiguration::new(ty, l, vec![vec![Row::new(Half::from_int(1), 0)], vec![], vec![]]).unwrap();
    let out = psi(&rc).unwrap();
    assert_eq!(out.rc, rc);
    assert_eq!(out.tableau.cell_count(), 0);
}

#[test]
fn group_tableau_of_a_column_is_one_group() {
    let t = SkewTableau::new(
        Partition::empty(),
        Partition::new(vec![1, 1, 1]).unwrap(),
        vec![vec![1], vec![2], vec![3]],
    )
    .unwrap();
    let g = group_tableau(&t).unwrap();
    assert_eq!(g.groups, vec![vec![1, 2, 3]]);
    let empty = SkewTableau::straight_empty(Partition::new(vec![2]).unwrap());
    assert!(group_tableau(&empty).unwrap().groups.is_empty());
}

#[test]
fn psi_rejects_types_outside_the_canonical_algebras() {
    let ty = AffineType::new(Family::B1, 5).unwrap();
    let rc = RiggedConfiguration::empty(ty, d8_space()).unwrap();
    assert!(matches!(delta(&rc, Half::from_int(1)), Err(Error::Precondition(_))));
}
