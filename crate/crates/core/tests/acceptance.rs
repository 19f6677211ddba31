//! The full verification battery at its pinned tolerances.

use su2_pfaffian::battery::{run_battery, BatteryConfig};

#[test]
fn acceptance() {
    let results = run_battery(&BatteryConfig::default());
    assert_eq!(results.len(), 12);
    for r in &results {
        println!(
            "{} {:<26} max residual {:.3e}",
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.max_residual
        );
        if !r.pass {
            println!("    expected: {}", r.expected);
            println!("    observed: {}", r.observed);
        }
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
