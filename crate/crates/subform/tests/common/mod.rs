#![allow(dead_code)]

use std::path::PathBuf;

use subform::catalog::{self, Entry};
use subform_core::Limits;

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn small_catalog() -> Vec<Entry> {
    catalog::load(&root().join("catalog/small"), &Limits::default()).expect("catalog loads")
}

pub fn example_path() -> PathBuf {
    root().join("catalog/example/sg_864_4670.pgrp")
}

/// One row of `catalog/manifest.csv`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Deserialize)]
pub struct ManifestRow {
    pub order: usize,
    pub id: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersoluble: bool,
    pub soluble: bool,
    pub subgroups: usize,
    pub subgroup_classes: usize,
    pub normal_subgroups: usize,
    pub derived_order: usize,
    pub nilpotent_residual_order: usize,
    pub fitting_order: usize,
    pub frattini_order: usize,
    pub schmidt: bool,
    pub center_order: usize,
}

impl ManifestRow {
    pub fn label(&self) -> String {
        format!("sg_{:03}_{:03}", self.order, self.id)
    }
}

pub fn manifest() -> Vec<ManifestRow> {
    let mut r = csv::Reader::from_path(root().join("catalog/manifest.csv")).unwrap();
    r.deserialize().collect::<Result<_, _>>().unwrap()
}
