//! Every catalog group against invariants computed independently in GAP.

mod common;

use rayon::prelude::*;
use subform_core::formation::{ABELIAN, NILPOTENT, SOLUBLE, SUPERSOLUBLE};
use subform_core::structure::conjugacy_representatives;
use subform_core::{all_subgroups, is_schmidt, normal_subgroups, residual};

#[test]
fn manifest_matches_catalog() {
    let rows = common::manifest();
    let entries = common::small_catalog();
    assert_eq!(rows.len(), 1237);
    assert_eq!(entries.len(), rows.len());
    let mismatches: Vec<String> = rows
        .par_iter()
        .zip(entries.par_iter())
        .flat_map_iter(|(row, e)| {
            let g = &e.group;
            let mut bad = Vec::new();
            let mut check = |what: &str, got: String, want: String| {
                if got != want {
                    bad.push(format!("{} {what}: got {got}, want {want}", e.label));
                }
            };
            check("label", e.label.clone(), row.label());
            check("order", g.order().to_string(), row.order.to_string());
            let lat = all_subgroups(g).unwrap();
            check("subgroups", lat.len().to_string(), row.subgroups.to_string());
            let classes = conjugacy_representatives(g, lat.nodes().to_vec()).len();
            check("classes", classes.to_string(), row.subgroup_classes.to_string());
            check("normal", normal_subgroups(g).unwrap().len().to_string(), row.normal_subgroups.to_string());
            check("derived", g.derived_subgroup().order().to_string(), row.derived_order.to_string());
            check("nilpotent residual", g.lower_central_limit().order().to_string(), row.nilpotent_residual_order.to_string());
            check("fitting", g.fitting().unwrap().order().to_string(), row.fitting_order.to_string());
            check("frattini", g.frattini().unwrap().order().to_string(), row.frattini_order.to_string());
            check("center", g.center().order().to_string(), row.center_order.to_string());
            check("abelian", ABELIAN.contains(g).unwrap().to_string(), row.abelian.to_string());
            check("nilpotent", NILPOTENT.contains(g).unwrap().to_string(), row.nilpotent.to_string());
            check("supersoluble", SUPERSOLUBLE.contains(g).unwrap().to_string(), row.supersoluble.to_string());
            check("soluble", SOLUBLE.contains(g).unwrap().to_string(), row.soluble.to_string());
            check("schmidt", is_schmidt(g).unwrap().to_string(), row.schmidt.to_string());
            check("residual A", (residual(&ABELIAN, g).unwrap() == g.derived_subgroup()).to_string(), "true".into());
            check("residual N", (residual(&NILPOTENT, g).unwrap() == g.lower_central_limit()).to_string(), "true".into());
            bad
        })
        .collect();
    assert!(mismatches.is_empty(), "{} mismatches, first: {:#?}", mismatches.len(), &mismatches[..mismatches.len().min(10)]);
}
