//! Formations as membership predicates with declared closure flags, and
//! formation residuals.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::normal_subgroups;
use crate::perm::Permutation;
use crate::subgroup::Subgroup;
use crate::verdict::{CheckResult, Hypothesis, Violation, Witness};

/// Declared closure properties. Never computed, only spot-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormationFlags {
    pub subgroup_closed: bool,
    pub saturated: bool,
    pub superradical: bool,
    pub contains_nilpotents: bool,
}

/// A class of groups given by an isomorphism-invariant predicate.
#[derive(Clone, Copy)]
pub struct Formation {
    pub name: &'static str,
    pub description: &'static str,
    pub membership: fn(&FiniteGroup) -> Result<bool>,
    pub flags: FormationFlags,
}

impl core::fmt::Debug for Formation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Formation").field("name", &self.name).field("flags", &self.flags).finish()
    }
}

impl PartialEq for Formation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.flags == other.flags
    }
}

impl Eq for Formation {}

fn abelian(g: &FiniteGroup) -> Result<bool> {
    Ok(g.is_abelian())
}

fn nilpotent(g: &FiniteGroup) -> Result<bool> {
    Ok(g.is_nilpotent())
}

fn supersoluble(g: &FiniteGroup) -> Result<bool> {
    g.is_supersoluble()
}

fn nilpotent_derived(g: &FiniteGroup) -> Result<bool> {
    Ok(g.is_nilpotent_subgroup(&g.derived_subgroup()))
}

fn soluble(g: &FiniteGroup) -> Result<bool> {
    Ok(g.is_soluble())
}

/// Abelian groups.
pub const ABELIAN: Formation = Formation {
    name: "A",
    description: "abelian groups",
    membership: abelian,
    flags: FormationFlags { subgroup_closed: true, saturated: false, superradical: false, contains_nilpotents: false },
};

/// Nilpotent groups.
pub const NILPOTENT: Formation = Formation {
    name: "N",
    description: "nilpotent groups",
    membership: nilpotent,
    flags: FormationFlags { subgroup_closed: true, saturated: true, superradical: true, contains_nilpotents: true },
};

/// Supersoluble groups.
pub const SUPERSOLUBLE: Formation = Formation {
    name: "U",
    description: "supersoluble groups",
    membership: supersoluble,
    flags: FormationFlags { subgroup_closed: true, saturated: true, superradical: false, contains_nilpotents: true },
};

/// Groups with nilpotent derived subgroup.
pub const NILPOTENT_BY_ABELIAN: Formation = Formation {
    name: "NA",
    description: "groups with nilpotent derived subgroup",
    membership: nilpotent_derived,
    flags: FormationFlags { subgroup_closed: true, saturated: true, superradical: false, contains_nilpotents: true },
};

/// Soluble groups.
pub const SOLUBLE: Formation = Formation {
    name: "Sol",
    description: "soluble groups",
    membership: soluble,
    flags: FormationFlags { subgroup_closed: true, saturated: true, superradical: false, contains_nilpotents: true },
};

pub const BUILT_IN: [Formation; 5] = [ABELIAN, NILPOTENT, SUPERSOLUBLE, NILPOTENT_BY_ABELIAN, SOLUBLE];

impl Formation {
    pub fn by_name(name: &str) -> Option<Formation> {
        BUILT_IN.iter().find(|f| f.name.eq_ignore_ascii_case(name)).copied()
    }

    pub fn contains(&self, g: &FiniteGroup) -> Result<bool> {
        (self.membership)(g)
    }

    /// Membership of a subgroup regarded as a group.
    pub fn contains_subgroup(&self, g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
        if h.order() == g.order() {
            return self.contains(g);
        }
        self.contains(&g.restrict(h)?.group)
    }

    /// Membership of `upper / lower`.
    pub fn contains_section(&self, g: &FiniteGroup, upper: &Subgroup, lower: &Subgroup) -> Result<bool> {
        if lower.is_trivial() {
            return self.contains_subgroup(g, upper);
        }
        self.contains(&g.section(upper, lower)?)
    }

    /// Whether the cyclic group of order `p` belongs to the class.
    pub fn contains_cyclic(&self, p: u32) -> Result<bool> {
        let n = p.max(1) as usize;
        let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let g = FiniteGroup::generate(&[Permutation::from_images(images)?], n)?;
        self.contains(&g)
    }

    /// Declared: subgroup-closed and containing `C_p` for every `p ∈ π(G)`.
    pub fn contains_prime_cyclics_for(&self, g: &FiniteGroup) -> Result<bool> {
        for p in g.prime_divisors() {
            if !self.contains_cyclic(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `G^F`: the intersection of the normal subgroups with quotient in `F`.
/// Fails if `G / G^F ∉ F`, which means the predicate is not a formation.
pub fn residual(f: &Formation, g: &FiniteGroup) -> Result<Subgroup> {
    if f.contains(g)? {
        return Ok(g.trivial_subgroup());
    }
    let mut members = g.whole().members().clone();
    for n in normal_subgroups(g)?.iter().rev() {
        g.check_cancelled()?;
        if n.order() == g.order() || members.is_subset(n.members()) {
            continue;
        }
        if f.contains(&g.section(&g.whole(), n)?)? {
            members.intersect_with(n.members());
        }
    }
    let r = g.subgroup_from_members(&members);
    // G ∉ F here, so a trivial intersection already fails
    if r.is_trivial() || !f.contains(&g.section(&g.whole(), &r)?)? {
        return Err(Error::FormationViolation(format!(
            "{}: quotient by the intersection of F-kernels is not in F (order {})",
            f.name,
            g.order() / r.order()
        )));
    }
    Ok(r)
}

/// Residual of a subgroup, as a subgroup of the parent.
pub fn residual_of(f: &Formation, g: &FiniteGroup, l: &Subgroup) -> Result<Subgroup> {
    if l.order() == g.order() {
        return residual(f, g);
    }
    let e = g.restrict(l)?;
    Ok(e.lift(g, &residual(f, &e.group)?))
}

/// Empirical closure checks on one group: quotient closure, closure under
/// intersections of kernels, and (if flagged) subgroup closure.
pub fn verify_formation_closure(f: &Formation, g: &FiniteGroup, label: &str) -> Result<CheckResult> {
    let mut out = CheckResult::new("formation-closure", Hypothesis::Declared);
    let normals = normal_subgroups(g)?;
    let whole = g.whole();
    let mut in_f = Vec::with_capacity(normals.len());
    for n in &normals {
        in_f.push(f.contains(&g.section(&whole, n)?)?);
    }
    let g_in = in_f[0];
    for (i, n) in normals.iter().enumerate() {
        out.cases += 1;
        if g_in && !in_f[i] {
            out.violations.push(Violation::new(
                label,
                "quotient closure: G in F but G/N not in F",
                alloc::vec![Witness::subgroup("N", g, n)],
            ));
        }
    }
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            if !(in_f[i] && in_f[j]) {
                continue;
            }
            out.cases += 1;
            let m = g.intersection(&normals[i], &normals[j]);
            let k = normals.binary_search(&m).map_err(|_| Error::NotNormal)?;
            if !in_f[k] {
                out.violations.push(Violation::new(
                    label,
                    "intersection closure: G/N, G/M in F but G/(N∩M) not in F",
                    alloc::vec![Witness::subgroup("N", g, &normals[i]), Witness::subgroup("M", g, &normals[j])],
                ));
            }
        }
    }
    if f.flags.subgroup_closed && g_in && g.order() <= g.limits().lattice_budget {
        let lat = crate::lattice::all_subgroups(g)?;
        for h in lat.nodes() {
            out.cases += 1;
            if !f.contains_subgroup(g, h)? {
                out.violations.push(Violation::new(
                    label,
                    "subgroup closure: G in F but H not in F",
                    alloc::vec![Witness::subgroup("H", g, h)],
                ));
            }
        }
    }
    out.finish();
    Ok(out)
}

/// Formation names accepted by [`Formation::by_name`].
pub fn names() -> String {
    BUILT_IN.iter().map(|f| f.name).collect::<Vec<_>>().join("|")
}
