//! Theorem-registry tests: closed-form values on known points and the
//! cross-check harness on small grids.

use edgering::registry::*;

#[test]
fn closed_form_values() {
    assert_eq!(reg_power_formula(3, 1), 2);
    assert_eq!(reg_power_formula(3, 2), 4);
    assert_eq!(reg_power_formula(2, 1), 1);
    assert_eq!(depth_formula(3, 3), 5);
    assert_eq!(depth_limit(2, 5), 6);
    assert_eq!(depth_limit(4, 9), 3);
    assert_eq!(analytic_spread(2, 5), 4);
    assert_eq!(analytic_spread(4, 4), 13);
    assert_eq!(match_formula(4, 6), 11);
    assert_eq!(rees_reg_formula(4, 6), 11);
    assert_eq!(cochord_bound(5), 4);
    assert_eq!(a_inv_formula(6, 8), 24);
    assert_eq!(a_inv_formula(6, 7), 22);
    assert_eq!(fiber_reg_formula(6, 8), 21);
    assert_eq!(fiber_reg_formula(6, 7), 17);
    assert_eq!(fiber_reg_formula(3, 9), 0);
    assert_eq!(fiber_reg_formula(2, 4), 0);
}

#[test]
fn empty_grid_gives_empty_report() {
    let report = verify_all(&[]);
    assert!(report.entries.is_empty());
    assert!(report.all_agree());
}

#[test]
fn small_grid_all_agree() {
    let report = verify_all(&[(2, 3, 1), (2, 3, 2)]);
    assert!(!report.entries.is_empty());
    for e in &report.entries {
        assert!(e.agree, "{} at {:?}: oracle {:?}, note {}", e.check, e.params, e.oracle, e.note);
    }
}

#[test]
fn depth_oracle_on_3x3() {
    let report = verify_all(&[(3, 3, 1)]);
    let depth = report
        .entries
        .iter()
        .find(|e| e.check == "depth")
        .expect("depth entry present");
    assert_eq!(depth.formula, 5);
    assert_eq!(depth.oracle, Some(5));
    assert!(depth.agree);
}

#[test]
fn certificate_entries_appear_for_wide_grids() {
    let report = verify_all(&[(4, 3, 1)]);
    assert!(report.entries.iter().any(|e| e.check == "a-invariant certificate"));
    assert!(report.entries.iter().any(|e| e.check == "a-invariant brute force"));
    assert!(report.all_agree(), "\n{}", report.to_table());
}

#[test]
fn report_serialization() {
    let report = verify_all(&[(2, 3, 1)]);
    let v = report.to_json();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), report.entries.len());
    for row in rows {
        assert!(row["check"].is_string());
        assert!(row["agree"].is_boolean());
    }
    let table = report.to_table();
    assert!(table.lines().count() >= report.entries.len() + 2);
    assert!(table.contains("matching number"));
}
