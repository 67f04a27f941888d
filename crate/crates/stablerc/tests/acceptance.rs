//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::Value;
use stablerc::affine_data::{canonical_algebra, minimum_rank};
use stablerc::bijection::{group_tableau, psi, psi_tilde_traced};
use stablerc::qpoly::{fermionic_m, m_by_enumeration, verify_identity};
use stablerc::rigged::{check_stability, enumerate_rc, DEFAULT_MAX_CONFIGS};
use stablerc::tableaux::{all_partitions, is_lr, lr_coefficient, reverse_row_word, weight_of};
use stablerc::{AffineType, Family, Half, Kind, Partition, QuantumSpace, RiggedConfiguration, Row, SkewTableau};

type Outcome = Result<String, String>;

const BIJECTIVE: [Kind; 3] = [Kind::SingleBox, Kind::HDomino, Kind::VDomino];

fn worked() -> Value {
    serde_json::from_str(include_str!("data/d8_worked_instance.json")).unwrap()
}

fn worked_state(v: &Value, s: usize) -> Vec<Vec<(i64, i64, i64)>> {
    serde_json::from_value(v["states"][s].clone()).unwrap()
}

fn worked_space() -> QuantumSpace {
    QuantumSpace::from_triples(&[[1, 3, 3], [1, 2, 2], [1, 1, 2]]).unwrap()
}

fn worked_rc(v: &Value, s: usize) -> RiggedConfiguration {
    let ty = AffineType::new(Family::D1, 8).unwrap();
    let nodes = worked_state(v, s)
        .iter()
        .map(|node| node.iter().map(|&(l, _, j)| Row::new(Half::from_int(l), j)).collect())
        .collect();
    RiggedConfiguration::new(ty, worked_space(), nodes).unwrap()
}

fn triples(rc: &RiggedConfiguration) -> Vec<Vec<(i64, i64, i64)>> {
    rc.annotated()
        .into_iter()
        .map(|v| v.into_iter().map(|(l, p, j)| (l.to_int().unwrap(), p, j)).collect())
        .collect()
}

/// Every `L` supported on nodes `a <= 2` and lengths `i <= 2` with `|L| <= 4`.
fn small_spaces() -> Vec<QuantumSpace> {
    let slots = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let mut out = Vec::new();
    fn go(slots: &[(usize, usize)], budget: usize, cur: &mut Vec<[usize; 3]>, out: &mut Vec<QuantumSpace>) {
        let Some((&(a, i), rest)) = slots.split_first() else {
            out.push(QuantumSpace::from_triples(cur).unwrap());
            return;
        };
        let w = a * i;
        for m in 0..=budget / w {
            if m > 0 {
                cur.push([a, i, m]);
            }
            go(rest, budget - m * w, cur, out);
            if m > 0 {
                cur.pop();
            }
        }
    }
    go(&slots, 4, &mut Vec::new(), &mut out);
    out
}

/// `(lambda, L)` with `|lambda| <= |L| <= 4`.
fn small_instances() -> Vec<(Partition, QuantumSpace)> {
    let mut out = Vec::new();
    for l in small_spaces() {
        for s in 0..=l.size() {
            for lam in all_partitions(s) {
                out.push((lam, l.clone()));
            }
        }
    }
    out
}

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{detail}; {:.3}s", t.as_secs_f64()))
    } else {
        Err(format!(
            "{detail}; took {:.3}s, limit {:.0}s",
            t.as_secs_f64(),
            limit.as_secs_f64()
        ))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let v = worked();
    let out = psi(&worked_rc(&v, 0)).map_err(|e| e.to_string())?;
    if out.trace.len() != 10 {
        return Err(format!("{} steps instead of 10", out.trace.len()));
    }
    for (i, step) in out.trace.iter().enumerate() {
        if triples(&step.rc) != worked_state(&v, i + 1) {
            return Err(format!("state {} differs", i + 1));
        }
        let t: SkewTableau = serde_json::from_value(v["tableaux"][i].clone()).unwrap();
        if step.tableau != t {
            return Err(format!("tableau after arrow {} differs", i + 1));
        }
        if step.l != Half::from_int(v["arrows"][i].as_i64().unwrap()) {
            return Err(format!("arrow {} removes the wrong length", i + 1));
        }
    }
    let last = worked_state(&v, 10);
    let image = triples(&out.rc);
    if image[..5] != last[..5] || image[5..].iter().any(|n| !n.is_empty()) {
        return Err("final type-A configuration differs".into());
    }
    let expected = Partition::new(vec![4, 3, 3, 3, 1, 1]).unwrap();
    if out.eta != expected || reverse_row_word(&out.tableau) != [1, 1, 2, 3, 1, 4, 2, 2, 3, 4] {
        return Err("final LR tableau differs".into());
    }
    within(start, Duration::from_secs(1), "11 states and 10 tableaux match".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let v = worked();
    let t: SkewTableau = serde_json::from_value(v["tableaux"][9].clone()).unwrap();
    let groups = group_tableau(&t).map_err(|e| e.to_string())?;
    let order = groups.application_order();
    if order != [4, 3, 2, 1, 6, 5, 4, 1, 4, 3] {
        return Err(format!("application order {order:?}"));
    }
    let out = psi(&worked_rc(&v, 0)).map_err(|e| e.to_string())?;
    let back = psi_tilde_traced(&out.rc, &t, AffineType::new(Family::D1, 8).unwrap()).map_err(|e| e.to_string())?;
    if back.rc != worked_rc(&v, 0) {
        return Err("Psi~ does not recover the initial configuration".into());
    }
    within(
        start,
        Duration::from_secs(1),
        format!("order {order:?}, initial state recovered"),
    )
}

/// Runs Psi and Psi~ over every enumerated kind-`kind` configuration,
/// collecting bijection, charge and stability failures.
struct SweepStats {
    instances: usize,
    configurations: usize,
    deltas: usize,
    bijection_failures: Vec<String>,
    charge_failures: Vec<String>,
    stability_failures: Vec<String>,
}

fn sweep() -> Result<SweepStats, String> {
    let mut s = SweepStats {
        instances: 0,
        configurations: 0,
        deltas: 0,
        bijection_failures: Vec::new(),
        charge_failures: Vec::new(),
        stability_failures: Vec::new(),
    };
    for kind in BIJECTIVE {
        for (lam, l) in small_instances() {
            let n = minimum_rank(kind, &lam, &l).map_err(|e| e.to_string())? + 1;
            let ty = canonical_algebra(kind, n).map_err(|e| e.to_string())?;
            let rcs = enumerate_rc(ty, &lam, &l, DEFAULT_MAX_CONFIGS).map_err(|e| e.to_string())?;
            s.instances += 1;
            let gamma = kind.gamma();
            let ad = kind.a_diamond(n);
            let excess = (l.size() - lam.size()) as i64;
            for rc in rcs {
                s.configurations += 1;
                let tag = format!(
                    "{ty} lambda={lam} L={:?} rc={}",
                    l.triples(),
                    serde_json::to_string(&rc).unwrap()
                );
                for v in check_stability(&rc) {
                    s.stability_failures.push(format!("{tag}: {v}"));
                }
                let out = match psi(&rc) {
                    Ok(o) => o,
                    Err(e) => {
                        s.bijection_failures.push(format!("{tag}: psi: {e}"));
                        continue;
                    }
                };
                let mu = rc.configuration().shape(ad).unwrap_or_default();
                let t = &out.tableau;
                let lr_ok = is_lr(t)
                    && t.inner == lam
                    && t.outer == out.eta
                    && Partition::new(weight_of(t)).map(|w| w == mu).unwrap_or(false);
                if !lr_ok || !out.rc.validate(&out.eta).is_empty() || out.rc.weight().ok() != Some(out.eta.clone()) {
                    s.bijection_failures
                        .push(format!("{tag}: image not in RC(eta, L) x LR"));
                }
                match psi_tilde_traced(&out.rc, t, ty) {
                    Ok(back) if back.rc == rc => {}
                    Ok(back) => s.bijection_failures.push(format!(
                        "{tag}: roundtrip gives {}",
                        serde_json::to_string(&back.rc).unwrap()
                    )),
                    Err(e) => s.bijection_failures.push(format!("{tag}: psi~: {e}")),
                }
                // charge of the part below the spin nodes rises by gamma/2 per delta
                let mut prev = rc.charge_stable_at(ad).map_err(|e| e.to_string())?;
                for step in &out.trace {
                    s.deltas += 1;
                    let c = step.rc.charge_stable_at(ad).map_err(|e| e.to_string())?;
                    if c - prev != Half(gamma) {
                        s.charge_failures
                            .push(format!("{tag}: delta changed the charge by {}", c - prev));
                    }
                    prev = c;
                }
                let lhs = rc.charge().map_err(|e| e.to_string())?;
                let rhs = out.rc.charge().map_err(|e| e.to_string())? * gamma - Half(gamma * excess);
                if lhs != rhs {
                    s.charge_failures.push(format!(
                        "{tag}: charge {lhs} but gamma c_A - gamma/2 (|L|-|lambda|) = {rhs}"
                    ));
                }
            }
        }
    }
    Ok(s)
}

fn summarize(failures: &[String], ok: String) -> Outcome {
    match failures.first() {
        None => Ok(ok),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

fn criteria_3_4_8() -> [Outcome; 3] {
    let start = Instant::now();
    let s = match sweep() {
        Ok(s) => s,
        Err(e) => return [Err(e.clone()), Err(e.clone()), Err(e)],
    };
    let scope = format!("{} instances, {} configurations", s.instances, s.configurations);
    let c3 = summarize(&s.bijection_failures, scope.clone()).and_then(|d| within(start, Duration::from_secs(300), d));
    let c4 = summarize(&s.charge_failures, format!("{} deltas, {scope}", s.deltas));
    let c8 = summarize(&s.stability_failures, scope);
    [c3, c4, c8]
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    let mut failures = Vec::new();
    let mut check = |ty: AffineType, lam: &Partition, l: &QuantumSpace| -> Result<(), String> {
        if l.max_node() > ty.rank() || ty.special_nodes().iter().any(|&a| l.node_mass(a) > 0) {
            return Ok(());
        }
        if lam.len() > ty.max_weight_length() {
            return Ok(());
        }
        runs += 1;
        let f = fermionic_m(ty, lam, l, DEFAULT_MAX_CONFIGS).map_err(|e| e.to_string())?;
        let e = m_by_enumeration(ty, lam, l, DEFAULT_MAX_CONFIGS).map_err(|e| e.to_string())?;
        if f.polynomial != e {
            failures.push(format!(
                "{ty} lambda={lam} L={:?}: {} vs {e}",
                l.triples(),
                f.polynomial
            ));
        }
        Ok(())
    };
    for (lam, l) in small_instances() {
        for kind in BIJECTIVE {
            let n = minimum_rank(kind, &lam, &l).map_err(|e| e.to_string())? + 1;
            check(canonical_algebra(kind, n).unwrap(), &lam, &l)?;
        }
        for kind in Kind::ALL {
            let family = canonical_algebra(kind, 8).unwrap().family();
            for n in family.min_rank()..=8 {
                check(AffineType::new(family, n).unwrap(), &lam, &l)?;
            }
        }
    }
    summarize(&failures, format!("{runs} exact comparisons")).and_then(|d| within(start, Duration::from_secs(300), d))
}

fn criterion_6() -> Outcome {
    let (mut runs, mut nonzero) = (0, 0);
    let mut failures = Vec::new();
    for kind in BIJECTIVE {
        for (lam, l) in small_instances() {
            runs += 1;
            let check = verify_identity(kind, &lam, &l, 1, DEFAULT_MAX_CONFIGS).map_err(|e| e.to_string())?;
            nonzero += usize::from(!check.lhs.is_zero());
            if !check.equal {
                failures.push(format!(
                    "{kind} lambda={lam} L={:?}: {} vs {}",
                    l.triples(),
                    check.lhs,
                    check.rhs
                ));
            }
        }
    }
    summarize(&failures, format!("{runs} identities, {nonzero} with a nonzero side"))
}

fn criterion_7() -> Outcome {
    let groups = [
        (Kind::VDomino, vec![Family::D1, Family::B1, Family::A2odd]),
        (Kind::SingleBox, vec![Family::D2, Family::A2even]),
    ];
    let (mut runs, mut nonzero) = (0, 0);
    let mut failures = Vec::new();
    for (kind, families) in groups {
        for (lam, l) in small_instances() {
            let n = minimum_rank(kind, &lam, &l).map_err(|e| e.to_string())? + 2;
            let polys = families
                .iter()
                .map(|&f| {
                    let ty = AffineType::new(f, n).unwrap();
                    fermionic_m(ty, &lam, &l, DEFAULT_MAX_CONFIGS).map(|r| (ty, r.polynomial))
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            runs += 1;
            nonzero += usize::from(!polys[0].1.is_zero());
            for (ty, p) in &polys[1..] {
                if *p != polys[0].1 {
                    failures.push(format!(
                        "lambda={lam} L={:?}: {} gives {p}, {} gives {}",
                        l.triples(),
                        ty,
                        polys[0].0,
                        polys[0].1
                    ));
                }
            }
        }
    }
    summarize(
        &failures,
        format!("{runs} instances agree across families, {nonzero} nonzero"),
    )
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for size in 0..=6 {
        for eta in all_partitions(size) {
            for s in 0..=size {
                for lam in all_partitions(s) {
                    for mu in all_partitions(size - s) {
                        let c = lr_coefficient(&lam, &mu, &eta);
                        if c != lr_coefficient(&mu, &lam, &eta) {
                            return Err(format!("c^{eta}_{{{lam},{mu}}} is not symmetric"));
                        }
                        checked += 1;
                    }
                    if s + 1 == size {
                        let single = Partition::new(vec![1]).unwrap();
                        let pieri = u64::from(eta.contains(&lam));
                        if lr_coefficient(&lam, &single, &eta) != pieri {
                            return Err(format!("Pieri fails for {lam} in {eta}"));
                        }
                    }
                }
            }
        }
    }
    let v = worked();
    let t: SkewTableau = serde_json::from_value(v["tableaux"][9].clone()).unwrap();
    if !is_lr(&t) || reverse_row_word(&t) != [1, 1, 2, 3, 1, 4, 2, 2, 3, 4] {
        return Err("worked LR tableau rejected".into());
    }
    within(
        start,
        Duration::from_secs(60),
        format!("{checked} symmetric pairs, Pieri rule, worked tableau accepted"),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "golden Psi trace", criterion_1()),
        (2, "golden Psi~ order", criterion_2()),
    ];
    let [c3, c4, c8] = criteria_3_4_8();
    results.push((3, "roundtrip", c3));
    results.push((4, "charge decrement", c4));
    results.push((5, "fermionic equivalence", criterion_5()));
    results.push((6, "M identity", criterion_6()));
    results.push((7, "stability across families", criterion_7()));
    results.push((8, "structural invariants", c8));
    results.push((9, "LR engine", criterion_9()));
    results.sort_by_key(|r| r.0);
    let mut failed = false;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(d) => println!("criterion {n} ({name}): PASS ({d})"),
            Err(d) => {
                failed = true;
                println!("criterion {n} ({name}): FAIL ({d})");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
