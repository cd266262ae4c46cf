//! The acceptance gate: one test per shipping criterion, each printing a
//! single `ACCEPTANCE criterion N (...): PASS`/`FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`).  The expensive default
//! claim audit runs once and is shared by the criteria that inspect it.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use msetspace::audit::{self, AuditBounds, AuditReport, ClaimStatus};
use msetspace::interop::{parikh_kharal, parikh_vector};
use msetspace::{metrics, KharalMap, Multiset, OpMap, Space};
use msetspace_cli::document::Environment;

fn report(number: u32, what: &str, check: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(check));
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE criterion {number} ({what}): {verdict}");
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
}

fn space(elements: &[&str], bound: u32) -> Space<String> {
    Space::new(elements.iter().map(|s| s.to_string()), bound).unwrap()
}

fn mset(space: &Space<String>, counts: &[u32]) -> Multiset<String> {
    Multiset::from_counts(space, counts.to_vec()).unwrap()
}

fn assignments(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// The default-bounds audit, run once and shared across criteria.
fn default_audit() -> &'static (AuditReport, Duration) {
    static RUN: OnceLock<(AuditReport, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let report = audit::run_all(&AuditBounds::default());
        (report, start.elapsed())
    })
}

#[test]
fn criterion_1_worked_example() {
    report(1, "worked mapping example, evaluated in under a millisecond", || {
        let x = space(&["a", "b", "c", "d"], 4);
        let y = space(&["s", "t", "x", "y", "z"], 5);
        let f = KharalMap::new(
            &x,
            &y,
            assignments(&[("a", "y"), ("b", "y"), ("c", "z"), ("d", "s")]),
            OpMap::new(4, 5, vec![0, 1, 5, 5, 5]).unwrap(),
        )
        .unwrap();
        let a = mset(&x, &[1, 4, 2, 4]);
        let m = mset(&y, &[1, 2, 1, 1, 5]);

        // Warm up once, then time the two evaluations themselves.
        assert_eq!(f.image(&a).unwrap().counts(), [5, 0, 0, 5, 5]);
        assert_eq!(f.preimage(&m).unwrap().counts(), [1, 1, 4, 1]);
        let start = Instant::now();
        let image = f.image(&a).unwrap();
        let back = f.preimage(&m).unwrap();
        let spent = start.elapsed();

        assert_eq!(image.to_string(), "{ 5/s, 0/t, 0/x, 5/y, 5/z }");
        assert_eq!(back.to_string(), "{ 1/a, 1/b, 4/c, 1/d }");
        assert!(spent < Duration::from_millis(1), "evaluation took {spent:?}");
    });
}

#[test]
fn criterion_2_counterexample_walkthrough() {
    report(2, "non-inclusion, round-trip, and complement counterexamples", || {
        let x = space(&["a", "b", "c", "d"], 5);
        let y = space(&["x", "y", "z"], 7);
        let f = KharalMap::new(
            &x,
            &y,
            assignments(&[("a", "z"), ("b", "z"), ("c", "x"), ("d", "y")]),
            OpMap::new(5, 7, vec![0, 0, 4, 5, 5, 7]).unwrap(),
        )
        .unwrap();
        let a = mset(&x, &[4, 0, 0, 4]);
        let b = mset(&x, &[1, 2, 4, 4]);
        let m = mset(&y, &[1, 2, 6]);

        // The image of a meet sits strictly below the meet of the images.
        let fa = f.image(&a).unwrap();
        let fb = f.image(&b).unwrap();
        let meet_of_images = fa.intersect(&fb).unwrap();
        let image_of_meet = f.image(&a.intersect(&b).unwrap()).unwrap();
        assert_eq!(meet_of_images.to_string(), "{ 0/x, 5/y, 4/z }");
        assert_eq!(image_of_meet.to_string(), "{ 0/x, 5/y, 0/z }");
        assert!(image_of_meet.is_submset(&meet_of_images, false).unwrap());
        assert!(!meet_of_images.is_submset(&image_of_meet, false).unwrap());

        // Round trips move: preimage-of-image grows, image-of-preimage shrinks.
        assert_eq!(f.preimage(&fa).unwrap().to_string(), "{ 4/a, 4/b, 1/c, 4/d }");
        let forward_back = f.image(&f.preimage(&m).unwrap()).unwrap();
        assert_eq!(forward_back.to_string(), "{ 0/x, 0/y, 0/z }");
        assert_ne!(forward_back, m);

        // With equal bounds and an identity count map, complements still do
        // not commute with the image.
        let x7 = space(&["a", "b", "c", "d"], 7);
        let y7 = space(&["s", "t", "x", "y", "z"], 7);
        let g = KharalMap::new(
            &x7,
            &y7,
            assignments(&[("a", "s"), ("b", "z"), ("c", "x"), ("d", "y")]),
            OpMap::identity(7),
        )
        .unwrap();
        let a7 = mset(&x7, &[3, 2, 5, 1]);
        let ga = g.image(&a7).unwrap();
        assert_eq!(ga.to_string(), "{ 3/s, 0/t, 5/x, 1/y, 2/z }");
        assert_eq!(ga.complement().to_string(), "{ 4/s, 7/t, 2/x, 6/y, 5/z }");
        let g_of_complement = g.image(&a7.complement()).unwrap();
        assert_eq!(g_of_complement.to_string(), "{ 4/s, 0/t, 2/x, 6/y, 5/z }");
        assert_ne!(ga.complement(), g_of_complement);
    });
}

#[test]
fn criterion_3_counting_vector_identity() {
    report(3, "counting vector equals the representation sum", || {
        let v = space(&["a", "b", "c", "d", "e"], 5);
        let a = mset(&v, &[4, 3, 1, 0, 3]);
        let order: Vec<String> = ["e", "a", "b", "d", "c"].iter().map(|s| s.to_string()).collect();
        let psi = parikh_vector(&a, &order).unwrap();
        assert_eq!(psi.to_string(), "(3,4,3,0,1)");
        let rep = parikh_kharal(&a, &order).unwrap();
        assert_eq!(rep.vector_sum, psi);
    });
}

/// Claims the default audit must report as holding with no counterexample.
const EXPECTED_CLEAN: [&str; 53] = [
    "T1.1", "T1.2", "T1.3", "T1.4", "T1.5", "T1.6", "T1.7", "T1.8", "T1.9", "T1.10", "T1.11",
    "T1.12", "T1.13", "T1.14", "T1.15", "T1.16", "T1.17", "T1.18", "T1.19", "P.1", "P.2", "P.3",
    "P.4", "P.5", "P.6", "P.7", "P.8", "P.9", "TA.1", "TA.2", "TA.3", "TA.4", "TA.5", "TA.6a",
    "TA.6b", "TA.7", "TA.8", "TA.9", "TA.10", "TA.11", "TA.12", "TA.13", "TA.14", "TA.15",
    "TH.1", "TH.2", "TH.C", "MC.1", "MC.2", "PS.1", "NZ.1", "TM.1", "TM.3",
];

#[test]
fn criterion_4_catalog_audit_is_clean() {
    report(4, "default audit holds on every law expected to hold", || {
        let (audit_report, spent) = default_audit();
        for id in EXPECTED_CLEAN {
            let r = audit_report.result(id).unwrap_or_else(|| panic!("{id} missing from report"));
            assert_eq!(r.status, ClaimStatus::Holds, "{id} is not clean");
            assert!(r.counterexample.is_none(), "{id} carries a counterexample");
            assert!(r.instances_checked > 0, "{id} was never exercised");
        }
        assert!(*spent < Duration::from_secs(300), "audit took {spent:?}");
    });
}

#[test]
fn criterion_5_expected_failures_are_found_and_replayable() {
    report(5, "stated equality and excluded middle fail with replayable witnesses", || {
        let (audit_report, _) = default_audit();

        let stated = audit_report.result("TA.2-equality-as-stated").unwrap();
        assert_eq!(stated.status, ClaimStatus::Violated);
        let cex = stated.counterexample.as_ref().expect("violation carries a witness");
        assert_eq!(audit::replay("TA.2-equality-as-stated", cex), Ok(false));

        assert_eq!(audit_report.result("TA.2-amended").unwrap().status, ClaimStatus::Holds);

        for id in ["LEM.1", "LEM.2"] {
            let r = audit_report.result(id).unwrap();
            assert_eq!(r.status, ClaimStatus::Violated, "{id}");
            let cex = r.counterexample.as_ref().expect("violation carries a witness");
            assert_eq!(cex.to_string(), "X={ a }^2 ; A={ 1/a }", "{id}");
            assert_eq!(audit::replay(id, cex), Ok(false), "{id}");
        }
    });
}

#[test]
fn criterion_6_metric_and_similarity_axioms() {
    report(6, "metric and similarity axioms hold exhaustively on tiny spaces", || {
        for universe in 0..=2usize {
            for bound in 0..=2u32 {
                let names = ["a", "b"];
                let sp = space(&names[..universe], bound);
                let all: Vec<_> = audit::enumerate_multisets(&sp).collect();
                for a in &all {
                    for b in &all {
                        let dsq = metrics::distance_squared(a, b).unwrap();
                        // Identity of indiscernibles and symmetry, exactly
                        // on squared values.
                        assert_eq!(dsq == 0, a == b);
                        assert_eq!(dsq, metrics::distance_squared(b, a).unwrap());
                        let d_ab = metrics::distance(a, b).unwrap();
                        assert!((d_ab - metrics::distance(b, a).unwrap()).abs() <= 1e-9);

                        // Similarity: bounded, 1 only on equality, symmetric.
                        let s = metrics::similarity(a, b).unwrap().value();
                        assert!(s > 0.0 && s <= 1.0);
                        assert_eq!(s == 1.0, a == b);
                        assert!((s - metrics::similarity(b, a).unwrap().value()).abs() <= 1e-9);

                        for c in &all {
                            // Triangle inequality on rooted values.
                            let d_bc = metrics::distance(b, c).unwrap();
                            let d_ac = metrics::distance(a, c).unwrap();
                            assert!(d_ac <= d_ab + d_bc + 1e-9);
                            // Similarity shrinks along containment chains.
                            if a.is_submset(b, false).unwrap() && b.is_submset(c, false).unwrap() {
                                let s_ac = metrics::similarity(a, c).unwrap().value();
                                assert!(s_ac <= metrics::similarity(a, b).unwrap().value() + 1e-9);
                                assert!(s_ac <= metrics::similarity(b, c).unwrap().value() + 1e-9);
                            }
                        }
                    }
                }
            }
        }

        // Distance and similarity survive structure-preserving mappings
        // exactly; the audit checks this on squared values at its default
        // bounds.
        let (audit_report, _) = default_audit();
        assert_eq!(audit_report.result("TM.1").unwrap().status, ClaimStatus::Holds);
    });
}

#[test]
fn criterion_7_determinism_and_round_trips() {
    report(7, "byte-identical audits and a round-tripping corpus", || {
        let (first, _) = default_audit();
        let second = audit::run_all(&AuditBounds::default());
        assert_eq!(first.render(), second.render());
        assert_eq!(first.render_kv(), second.render_kv());

        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
        let mut paths: Vec<_> =
            std::fs::read_dir(&dir).unwrap().map(|entry| entry.unwrap().path()).collect();
        paths.sort();
        assert!(paths.len() >= 20, "corpus holds only {} documents", paths.len());
        for required in [
            "worked_example.mset",
            "non_inclusion.mset",
            "complement_gap.mset",
            "counting_vector.mset",
            "excluded_middle.mset",
        ] {
            assert!(
                paths.iter().any(|p| p.file_name().unwrap() == required),
                "{required} missing from the corpus"
            );
        }
        for path in &paths {
            let text = std::fs::read_to_string(path).unwrap();
            let env = Environment::parse(&text).unwrap_or_else(|e| panic!("{path:?}: {e}"));
            let again = Environment::parse(&env.render())
                .unwrap_or_else(|e| panic!("{path:?} re-parse: {e}"));
            assert_eq!(env, again, "{path:?} does not round-trip");
        }
    });
}
