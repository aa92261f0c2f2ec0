//! Acceptance suite: every regression criterion is exercised at its exact
//! tolerance (everything here is exact arithmetic), with one pass/fail line
//! per criterion.

use gvbranch_core::regress::{run_suite, CaseResult};

struct Criterion {
    name: &'static str,
    suite: &'static str,
    prefixes: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "1. structure: generated subalgebra and weight projections",
        suite: "structure",
        prefixes: &[
            "structure: generated subalgebra",
            "structure: pr maps",
            "structure: iota",
            "structure: Dynkin",
            "structure: Jacobi",
        ],
    },
    Criterion {
        name: "2. Casimir expansions, exact and term-for-term",
        suite: "structure",
        prefixes: &[
            "structure: 36 x quadratic Casimir",
            "structure: 12 x embedded Casimir",
            "structure: the quadratic Casimir commutes",
        ],
    },
    Criterion {
        name: "3. Harish-Chandra scalars across the appendix families",
        suite: "fd-tables",
        prefixes: &["fd-tables: constituents and p1 rows"],
    },
    Criterion {
        name: "4. finite-dimensional branching and printed singular vectors",
        suite: "fd-tables",
        prefixes: &[
            "fd-tables: decomposition of the",
            "fd-tables: printed singular vectors annihilated",
            "fd-tables: monomial basis",
            "fd-tables: raising actions",
            "fd-tables: canonical basis indexing",
        ],
    },
    Criterion {
        name: "5. Verma singular vectors for the six theorem families",
        suite: "singular",
        prefixes: &[
            "singular: family lambda",
            "singular: the multiplicity-two weight",
            "singular: top level of parabolic",
            "singular: strong condition fails",
        ],
    },
    Criterion {
        name: "6. Shapovalov certificates including the degree-14 polynomial",
        suite: "certificates",
        prefixes: &["certificates:"],
    },
    Criterion {
        name: "7. condition reports for all eight parabolics",
        suite: "branching",
        prefixes: &["branching: all parabolics"],
    },
    Criterion {
        name: "8. truncated character identity on three parabolics",
        suite: "branching",
        prefixes: &["branching: truncated character identity"],
    },
    Criterion {
        name: "9. oracle equivalence: partition counts and m = n",
        suite: "branching",
        prefixes: &[
            "branching: partition function agrees",
            "branching: multiplicities match the inducing decomposition",
        ],
    },
    Criterion {
        name: "10. direct-sum dimensions through degree 6",
        suite: "branching",
        prefixes: &[
            "branching: direct-sum dimensions",
            "branching: the six corollary families",
            "branching: quasi-polynomial degree bounds",
        ],
    },
];

#[test]
fn acceptance_criteria() {
    let mut results: std::collections::BTreeMap<&str, Vec<CaseResult>> =
        std::collections::BTreeMap::new();
    for suite in ["structure", "fd-tables", "branching", "singular", "certificates"] {
        results.insert(suite, run_suite(suite).expect("suite runs"));
    }
    let mut all_ok = true;
    for criterion in CRITERIA {
        let cases: Vec<&CaseResult> = results[criterion.suite]
            .iter()
            .filter(|c| criterion.prefixes.iter().any(|p| c.name.starts_with(p)))
            .collect();
        assert!(
            !cases.is_empty(),
            "criterion `{}` matched no cases",
            criterion.name
        );
        let ok = cases.iter().all(|c| c.passed);
        println!(
            "{} criterion {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            criterion.name,
            cases.len()
        );
        if !ok {
            for c in cases.iter().filter(|c| !c.passed) {
                println!("       failing: {} — {}", c.name, c.detail);
            }
            all_ok = false;
        }
    }
    // Nothing in any suite may fail, matched or not.
    for (suite, cases) in &results {
        for c in cases {
            if !c.passed {
                println!("FAIL [{suite}] {} — {}", c.name, c.detail);
                all_ok = false;
            }
        }
    }
    assert!(all_ok, "acceptance criteria failed");
}
