//! The acceptance suite: runs every criterion of the verification ledger,
//! prints one PASS/FAIL line per criterion, and pins each outcome.
//!
//! Two criteria fail *as stated* because the mechanical computation
//! contradicts printed claims (extra typos in the printed reflection-products
//! table; toric rank 1 for the two proper rank-6 sublattice configurations).
//! Those failures are themselves frozen expectations here: the suite turns
//! red if they ever silently change.

use kanev::verify::{render_ledger, run_acceptance};

#[test]
fn acceptance_ledger() {
    let results = run_acceptance(false);
    print!("{}", render_ledger(&results));
    assert_eq!(results.len(), 10);

    for r in &results {
        assert!(
            r.as_expected,
            "criterion {} deviated from the frozen analysis:\n{}",
            r.id,
            r.details.join("\n")
        );
    }

    let expected_pass = [1u8, 3, 4, 5, 6, 8, 9, 10];
    let expected_fail = [2u8, 7];
    for r in &results {
        if expected_pass.contains(&r.id) {
            assert!(
                r.passed,
                "criterion {} must pass:\n{}",
                r.id,
                r.details.join("\n")
            );
        } else {
            assert!(expected_fail.contains(&r.id));
            assert!(
                !r.passed,
                "criterion {} unexpectedly passes as stated; the printed-source \
                 deviation analysis needs updating:\n{}",
                r.id,
                r.details.join("\n")
            );
        }
    }

    // criterion 2 failure is exactly the known print-vs-recompute gap
    let c2 = &results[1];
    let joined = c2.details.join("\n");
    for needle in [
        "10a printed 58/5, recomputed 6/5",
        "6a printed 11/3, recomputed 1",
        "8a printed 7/8, recomputed 15/8",
        "3a printed 1/3, recomputed 3",
        "12a printed 19/6, recomputed 1/2",
        "6c printed (6^3,2^3,1^3), computed (6^4,3)",
    ] {
        assert!(
            joined.contains(needle),
            "missing `{needle}` in criterion 2 details"
        );
    }

    // criterion 7 failure is exactly the two rank-6 configurations
    let c7 = &results[6];
    let joined = c7.details.join("\n");
    assert!(joined.contains("E_A5A1: toric rank 1 (claimed 0)"));
    assert!(joined.contains("E_A2^3: toric rank 1 (claimed 0)"));
    assert!(joined.contains("E_E6: toric rank 1 (claimed 1)"));
    for ok in ["E_A5", "E_D5", "E_A4A1", "E_A3A1^2", "E_A2^2A1"] {
        assert!(
            joined.contains(&format!("{ok}: toric rank 0 (claimed 0)")),
            "{ok}"
        );
    }
}

#[test]
fn fast_mode_reaches_the_same_verdicts() {
    let fast = run_acceptance(true);
    let per_criterion: Vec<(u8, bool)> = fast.iter().map(|r| (r.id, r.passed)).collect();
    assert_eq!(
        per_criterion,
        vec![
            (1, true),
            (2, false),
            (3, true),
            (4, true),
            (5, true),
            (6, true),
            (7, false),
            (8, true),
            (9, true),
            (10, true)
        ]
    );
    assert!(fast.iter().all(|r| r.as_expected));
}

#[test]
fn required_identity_checks_are_present_and_green() {
    let ledger = kanev::divisors::identity_ledger();
    for name in kanev::verify::required_identity_names() {
        let entry = ledger
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("identity `{name}` missing from the ledger"));
        assert!(entry.passed, "{name}: {}", entry.detail);
    }
}
