use catb2::catalan::{Model, Perturbation};
use catb2::poly::bp_from_text;
use catb2::sweep::{
    exit_code, json_record, parse_checks, render, run_verify, Format, IndexRange, Outcome,
    SweepConfig,
};
use catb2::{FamilyIndex, Rat};
use proptest::prelude::*;

fn small_config(checks: &str, model: Model, jobs: usize) -> SweepConfig {
    SweepConfig {
        i_range: IndexRange::new(0, 2).unwrap(),
        m_range: IndexRange::new(0, 2).unwrap(),
        k_extra: 1,
        checks: parse_checks(checks).unwrap(),
        format: Format::Json,
        jobs,
        model,
    }
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..50, 1i64..50, any::<bool>())
        .prop_map(|(n, d, neg)| Rat::frac(if neg { -n } else { n }, d))
}

fn perturbation() -> impl Strategy<Value = Perturbation> {
    (0u32..=2, 0u32..=2)
        .prop_flat_map(|(i, m)| (Just(i), Just(m), 0..=m, nonzero_rat()))
        .prop_map(|(i, m, k, delta)| Perturbation {
            index: FamilyIndex::new(i, m),
            k,
            delta,
        })
}

fn witness_of(o: &Outcome) -> Option<&str> {
    match o {
        Outcome::Ran(r) => r.witness.as_deref(),
        Outcome::Skipped(_) => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mutations_are_caught_with_nonzero_witness(p in perturbation()) {
        let (i, m) = (i64::from(p.index.i), i64::from(p.index.m));
        let cfg = small_config("expansion,ftilde-forms,theorem", Model::perturbed(p), 1);
        let outcomes = run_verify(&cfg).unwrap();
        prop_assert_eq!(exit_code(&outcomes), 1);
        for o in &outcomes {
            let Outcome::Ran(r) = o else { continue };
            let at_mutation = r.param("i") == Some(i) && r.param("m") == Some(m);
            if r.check_name != "theorem" {
                // oracle-backed checks fail exactly at the mutated cell
                prop_assert_eq!(!r.passed, at_mutation, "{}", r.check_name);
            } else if !at_mutation {
                prop_assert!(r.passed);
            }
            if !r.passed {
                let w = r.witness.as_deref().unwrap();
                prop_assert!(!bp_from_text(w).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn exit_code_tracks_failures(p in proptest::option::of(perturbation())) {
        let model = p.map_or_else(Model::exact, Model::perturbed);
        let outcomes = run_verify(&small_config("expansion,prop1,parity", model, 2)).unwrap();
        let any_failed = outcomes.iter().any(|o| matches!(o, Outcome::Ran(r) if !r.passed));
        prop_assert_eq!(exit_code(&outcomes) == 0, !any_failed);
    }

    #[test]
    fn output_order_independent_of_jobs(p in perturbation(), jobs in 2usize..6) {
        let model = Model::perturbed(p);
        let seq = run_verify(&small_config("all", model.clone(), 1)).unwrap();
        let par = run_verify(&small_config("all", model, jobs)).unwrap();
        prop_assert_eq!(render(&seq, Format::Text), render(&par, Format::Text));
        prop_assert_eq!(seq, par);
    }
}

#[test]
fn json_witnesses_round_trip() {
    let p = Perturbation {
        index: FamilyIndex::new(1, 2),
        k: 1,
        delta: Rat::frac(-3, 11),
    };
    let outcomes = run_verify(&small_config("all", Model::perturbed(p), 1)).unwrap();
    let mut seen = 0;
    for o in &outcomes {
        let line = json_record(o).to_string();
        let rec: serde_json::Value = serde_json::from_str(&line).unwrap();
        if let Some(w) = rec.get("witness") {
            let text = w.as_str().unwrap();
            assert_eq!(Some(text), witness_of(o));
            assert_eq!(catb2::poly::bp_to_text(&bp_from_text(text).unwrap()), text);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
