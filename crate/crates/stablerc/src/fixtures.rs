//! The bundled `D_8^(1)` worked instance, shared by unit tests.

use serde_json::Value;

use crate::affine_data::{AffineType, Family};
use crate::half::Half;
use crate::rigged::{RiggedConfiguration, Row};
use crate::tableaux::{Partition, QuantumSpace, SkewTableau};

pub(crate) fn d8_json() -> Value {
    serde_json::from_str(include_str!("../tests/data/d8_worked_instance.json")).unwrap()
}

pub(crate) fn d8_type() -> AffineType {
    AffineType::new(Family::D1, 8).unwrap()
}

pub(crate) fn d8_space() -> QuantumSpace {
    QuantumSpace::from_triples(&[[1, 3, 3], [1, 2, 2], [1, 1, 2]]).unwrap()
}

/// State `s` as `(len, vacancy, rigging)` per node.
pub(crate) fn d8_state_rows(s: usize) -> Vec<Vec<(i64, i64, i64)>> {
    d8_json()["states"][s]
        .as_array()
        .unwrap()
        .iter()
        .map(|node| {
            node.as_array()
                .unwrap()
                .iter()
                .map(|r| (r[0].as_i64().unwrap(), r[1].as_i64().unwrap(), r[2].as_i64().unwrap()))
                .collect()
        })
        .collect()
}

pub(crate) fn d8_state(s: usize) -> RiggedConfiguration {
    let nodes = d8_state_rows(s)
        .iter()
        .map(|v| v.iter().map(|&(l, _, j)| Row::new(Half::from_int(l), j)).collect())
        .collect();
    RiggedConfiguration::new(d8_type(), d8_space(), nodes).unwrap()
}

pub(crate) fn d8_tableau(s: usize) -> SkewTableau {
    serde_json::from_value(d8_json()["tableaux"][s].clone()).unwrap()
}

pub(crate) fn d8_arrows() -> Vec<i64> {
    d8_json()["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect()
}

pub(crate) fn d8_lambda() -> Partition {
    Partition::new(vec![2, 2, 1]).unwrap()
}
