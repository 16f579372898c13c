//! End-to-end acceptance suite: runs every built-in criterion at its pinned
//! tolerance and runtime limit, printing one line per criterion.

use postlie::suite::{criteria_list, run_one, CriterionStatus, SuiteOptions};

#[test]
fn acceptance_criteria() {
    let opts = SuiteOptions::default();
    let mut failures = Vec::new();
    for (id, _, _) in criteria_list() {
        let result = run_one(id, &opts);
        let status = match result.status {
            CriterionStatus::Pass => "pass",
            CriterionStatus::Fail => "FAIL",
            CriterionStatus::Budget => "budget",
            CriterionStatus::Contingent => "contingent",
        };
        println!(
            "criterion {:2}: {:10} ({:?}, limit {:?}) {}",
            result.id, status, result.elapsed, result.limit, result.title
        );
        let acceptable = match result.status {
            CriterionStatus::Pass => true,
            // the externally-referenced basis check may report contingent
            // without failing the suite
            CriterionStatus::Contingent => result.id == 16,
            _ => false,
        };
        if !acceptable {
            failures.push((result.id, result.details.clone()));
        }
        if result.elapsed > result.limit {
            failures.push((
                result.id,
                vec![format!(
                    "runtime {:?} exceeded the limit {:?}",
                    result.elapsed, result.limit
                )],
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance failures: {failures:#?}"
    );
}
