//! DIMACS and JSON exchange formats.

use kneser_lab::graph::dimacs::{read_dimacs, write_dimacs};
use kneser_lab::harness::{run_suite, Status, SuiteManifest, VerificationReport};
use kneser_lab::homsolver::{chromatic_number, find_homomorphism, Certificate, Homomorphism};
use kneser_lab::{Exec, FamilySpec, Graph, SearchBudget};
use proptest::prelude::*;

fn specs() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (2usize..8, 1usize..4).prop_filter_map("n >= 2k", |(n, k)| (n >= 2 * k).then_some(FamilySpec::Kneser { n, k })),
        (2usize..4, 2usize..4, 0usize..4).prop_map(|(k, s, extra)| FamilySpec::StableKneser { n: k * s + extra, k, s }),
        (3usize..14, 1usize..4).prop_filter_map("n >= 2k", |(n, k)| (n >= 2 * k).then_some(FamilySpec::Circular { n, k })),
        (3usize..14, 1usize..4).prop_filter_map("n >= 2a", |(n, a)| (n >= 2 * a).then_some(FamilySpec::CyclePower { n, a })),
    ]
}

proptest! {
    #[test]
    fn dimacs_round_trip(spec in specs()) {
        let g = spec.build().unwrap();
        let back = read_dimacs(&write_dimacs(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn spec_text_round_trip(spec in specs()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<FamilySpec>().unwrap(), spec.clone());
        let json = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(json, format!("\"{text}\""));
    }
}

#[test]
fn unlabelled_dimacs_round_trip() {
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let text = write_dimacs(&g);
    assert_eq!(text, "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    assert_eq!(read_dimacs(&text).unwrap(), g);
    assert!(read_dimacs("p edge 2 1\ne 1 3\n").is_err());
}

#[test]
fn certificates_recheck_after_reload() {
    let spec: FamilySpec = "stable:n=10,k=2,s=4".parse().unwrap();
    let g = spec.build().unwrap();
    let c = chromatic_number(&g, &SearchBudget::default()).unwrap();
    let cert = Certificate::from_json(&Certificate::coloring(&spec.to_string(), &c).to_json()).unwrap();
    assert!(cert.recheck(&g, None));
    // recheck needs no search: tampering is caught by the checker alone
    let mut bad = cert.clone();
    bad.coloring.as_mut().unwrap()[0] = bad.coloring.as_ref().unwrap()[1];
    if g.has_edge(0, 1) {
        assert!(!bad.recheck(&g, None));
    }

    let h = Graph::complete(6);
    let hom = find_homomorphism(&g, &h, &SearchBudget::default());
    let found: &Homomorphism = hom.found().unwrap();
    let cert = Certificate::homomorphism(&spec.to_string(), "K6", found, Default::default());
    let back = Certificate::from_json(&cert.to_json()).unwrap();
    assert!(back.recheck(&g, Some(&h)));
    assert!(!back.recheck(&g, Some(&Graph::complete(5))));
}

#[test]
fn report_json_round_trip() {
    let reports = run_suite("core", &SuiteManifest::bundled(), &SearchBudget::default(), Exec::Sequential).unwrap();
    let json = serde_json::to_string(&reports).unwrap();
    let back: Vec<VerificationReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, reports);
    assert!(back.iter().all(|r| r.status == Status::Pass));
    let ids: Vec<&str> = back.iter().map(|r| r.claim_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}
