//! Finite permutation groups, their subgroup lattices, formations and
//! F-subnormality.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod formation;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod perm;
pub mod product;
pub mod series;
pub mod structure;
pub mod subgroup;
pub mod subnormality;
pub mod verdict;

#[cfg(test)]
mod testgroups;

pub use error::{Error, Result};
pub use group::{Elem, Embedding, FiniteGroup, Limits};
pub use hom::GroupHom;
pub use lattice::{all_subgroups, interval, maximal_subgroups, minimal_overgroups, normal_subgroups, SubgroupLattice};
pub use perm::Permutation;
pub use product::{automorphism_from_images, direct_product, semidirect_product, Automorphism, ProductGroup};
pub use subgroup::Subgroup;
pub use formation::{residual, Formation, FormationFlags};
pub use verdict::{CheckResult, Hypothesis, Statement, TheoremVerdict, VerdictReport, Violation, Witness};
pub use subnormality::{
    is_abnormal, is_absolutely_f_subnormal, is_f_abnormal, is_f_subnormal, is_f_subnormal_via_residual, Analyzer, ChainWitness,
};
pub use structure::{
    carter_subgroups, check_corollary1, check_corollary2, check_theorem1, check_theorem2, is_ef_group, is_minimal_non_f, is_schmidt,
    primary_cyclic_subgroups, verify_paper_example, verify_paper_example_in,
};
