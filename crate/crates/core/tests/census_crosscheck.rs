use pocfrob_core::census::{crosscheck, enumerate, CheckStatus};

#[test]
fn every_row_to_15000_matches_brute_force() {
    let rows = enumerate(15_000);
    let report = crosscheck(&rows, 15_000);
    assert_eq!(report.len(), 39);
    let failures: Vec<String> = report
        .iter()
        .filter(|e| e.status != CheckStatus::Passed)
        .map(|e| e.to_string())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}
