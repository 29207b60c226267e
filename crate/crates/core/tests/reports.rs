use sylowlab::experiments::{suite, Gates, Runner};
use sylowlab::{Exec, GroupSpec};

fn runners() -> [Runner; 2] {
    [
        Runner::new(Gates::default(), Exec::Sequential),
        Runner::new(Gates::default(), Exec::Parallel),
    ]
}

#[test]
fn reports_are_schedule_independent() {
    let spec = GroupSpec::psl(9, 2).unwrap();
    let [seq, par] = runners();
    let pairs = [
        (
            seq.opposite_pair_prob(&spec, 3000, 5).unwrap(),
            par.opposite_pair_prob(&spec, 3000, 5).unwrap(),
        ),
        (
            seq.criterion_soundness_test(&spec, 10, 5).unwrap(),
            par.criterion_soundness_test(&spec, 10, 5).unwrap(),
        ),
        (
            seq.ruzsa_selfcheck(&spec, 40, 5).unwrap(),
            par.ruzsa_selfcheck(&spec, 40, 5).unwrap(),
        ),
    ];
    for (a, b) in pairs {
        let (a, b) = (a.without_timing(), b.without_timing());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.per_trial, b.per_trial);
    }
}

#[test]
fn seeds_change_the_sample() {
    let spec = GroupSpec::psl(11, 2).unwrap();
    let r = Runner::default();
    let a = r.triple_product_stats(&spec, 200, 1).unwrap();
    let b = r.triple_product_stats(&spec, 200, 2).unwrap();
    assert_ne!(a.per_trial, b.per_trial);
}

#[test]
fn json_schema_keys() {
    let r = Runner::default()
        .verify_uuuv(&GroupSpec::psl(4, 2).unwrap())
        .unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["experiment", "spec", "seed", "trials", "pass", "runtime_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let v = serde_json::to_value(r.without_timing()).unwrap();
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn work_cap_is_a_resource_error() {
    let gates = Gates {
        work_cap: 1000,
        ..Gates::default()
    };
    let e = Runner::new(gates, Exec::default())
        .triple_product_stats(&GroupSpec::psl(13, 2).unwrap(), 5, 0)
        .unwrap_err();
    assert!(e.is_resource_cap());
}

#[test]
fn suite_criteria_cover_the_battery() {
    let ids: Vec<u32> = suite::CRITERIA.iter().map(|c| c.0).collect();
    assert_eq!(ids, (1..=11).collect::<Vec<_>>());
}
