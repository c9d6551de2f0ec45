//! Subgroups as member sets of a parent [`FiniteGroup`], and the classical
//! constructions on them (closure, normalizer, core, conjugates).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;

/// A subgroup of a parent group: a closed member set plus a generating set.
///
/// Equality and hashing use the parent fingerprint and the member set only.
/// The ordering is by order, then by the sorted member list.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: u64,
    members: FixedBitSet,
    order: usize,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    /// Builds a subgroup record without checking closure.
    pub(crate) fn from_parts_unchecked(
        parent: &FiniteGroup,
        members: impl IntoIterator<Item = Elem>,
        gens: Vec<Elem>,
    ) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(parent.order());
        for m in members {
            bits.insert(m as usize);
        }
        let order = bits.count_ones(..);
        Subgroup { parent: parent.fingerprint(), members: bits, order, gens }
    }

    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e as usize)
    }

    /// Members in increasing element order.
    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|e| e as Elem)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts_unchecked(self, [0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts_unchecked(self, 0..self.order() as Elem, self.generator_elems().to_vec())
    }

    /// `⟨base, g⟩`, by adding whole right cosets of `base` (Dimino's method).
    pub fn extend(&self, base: &Subgroup, g: Elem) -> Subgroup {
        if base.contains(g) {
            return base.clone();
        }
        let base_elems: Vec<Elem> = base.iter().collect();
        let mut members = base.members.clone();
        let mut gens = base.gens.clone();
        gens.push(g);
        let mut reps: Vec<Elem> = alloc::vec![0];
        let add_coset = |rep: Elem, members: &mut FixedBitSet| {
            for &h in &base_elems {
                members.insert(self.mul(h, rep) as usize);
            }
        };
        add_coset(g, &mut members);
        reps.push(g);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let t = self.mul(r, s);
                if !members.contains(t as usize) {
                    add_coset(t, &mut members);
                    reps.push(t);
                }
            }
            i += 1;
        }
        let order = members.count_ones(..);
        Subgroup { parent: self.fingerprint(), members, order, gens }
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        b.gens.iter().fold(a.clone(), |acc, &g| self.extend(&acc, g))
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_generated(&self, seed: &[Elem]) -> Result<Subgroup> {
        if let Some(&bad) = seed.iter().find(|&&e| e as usize >= self.order()) {
            return Err(Error::NotAnElement(bad as usize));
        }
        Ok(seed.iter().fold(self.trivial_subgroup(), |acc, &g| self.extend(&acc, g)))
    }

    pub fn subgroup_from_perms(&self, seed: &[Permutation]) -> Result<Subgroup> {
        let idx = seed
            .iter()
            .enumerate()
            .map(|(i, p)| self.index_of(p).ok_or(Error::NotAnElement(i)))
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_generated(&idx)
    }

    pub fn cyclic_subgroup(&self, g: Elem) -> Subgroup {
        self.extend(&self.trivial_subgroup(), g)
    }

    /// Subgroup record for a member set already known to be closed; picks a
    /// small generating set greedily.
    pub fn subgroup_from_members(&self, members: &FixedBitSet) -> Subgroup {
        let mut cur = self.trivial_subgroup();
        for e in members.ones() {
            if !cur.contains(e as Elem) {
                cur = self.extend(&cur, e as Elem);
            }
        }
        debug_assert_eq!(&cur.members, members);
        cur
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut m = a.members.clone();
        m.intersect_with(&b.members);
        self.subgroup_from_members(&m)
    }

    /// `h^g = g⁻¹ h g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let gens = h.gens.iter().map(|&s| self.conj(s, g)).collect();
        Subgroup::from_parts_unchecked(self, h.iter().map(|x| self.conj(x, g)), gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generator_elems().iter().all(|&g| h.gens.iter().all(|&s| h.contains(self.conj(s, g))))
    }

    /// Whether `h` is normalized by every element of `l`.
    pub fn is_normal_in(&self, h: &Subgroup, l: &Subgroup) -> bool {
        l.gens.iter().all(|&g| h.gens.iter().all(|&s| h.contains(self.conj(s, g))))
    }

    pub fn normalizes(&self, g: Elem, h: &Subgroup) -> bool {
        h.gens.iter().all(|&s| h.contains(self.conj(s, g)))
    }

    /// `N_G(h)`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.own(h)?;
        let mut m = FixedBitSet::with_capacity(self.order());
        for g in 0..self.order() as Elem {
            if self.normalizes(g, h) {
                m.insert(g as usize);
            }
        }
        Ok(self.subgroup_from_members(&m))
    }

    pub fn is_self_normalizing(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.normalizer(h)?.order() == h.order())
    }

    /// `C_l(x)` for `x` ranging over `set`.
    pub fn centralizer_in(&self, l: &Subgroup, set: &[Elem]) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.order());
        for g in l.iter() {
            if set.iter().all(|&x| self.mul(g, x) == self.mul(x, g)) {
                m.insert(g as usize);
            }
        }
        self.subgroup_from_members(&m)
    }

    /// Core of `a` in `b`: the intersection of the `b`-conjugates of `a`.
    pub fn core_in(&self, b: &Subgroup, a: &Subgroup) -> Result<Subgroup> {
        self.own(a)?;
        self.own(b)?;
        if !a.is_subgroup_of(b) {
            return Err(Error::NotContained("core: A is not contained in B"));
        }
        if self.is_normal_in(a, b) {
            return Ok(a.clone());
        }
        let mut m = a.members.clone();
        let mut seen = FixedBitSet::with_capacity(self.order());
        for g in b.iter() {
            // A^g depends only on the coset A·g
            if seen.contains(g as usize) {
                continue;
            }
            let mut conj = FixedBitSet::with_capacity(self.order());
            for x in a.iter() {
                conj.insert(self.conj(x, g) as usize);
            }
            for x in a.iter() {
                seen.insert(self.mul(x, g) as usize);
            }
            m.intersect_with(&conj);
            if m.count_ones(..) == 1 {
                break;
            }
        }
        Ok(self.subgroup_from_members(&m))
    }

    pub fn core(&self, a: &Subgroup) -> Result<Subgroup> {
        self.core_in(&self.whole(), a)
    }

    /// Normal closure of `seed` inside `l` (`seed ⊆ l`).
    pub fn normal_closure_in(&self, l: &Subgroup, seed: &[Elem]) -> Subgroup {
        let mut n = seed.iter().fold(self.trivial_subgroup(), |acc, &g| self.extend(&acc, g));
        loop {
            let mut grew = false;
            let gens = n.gens.clone();
            'outer: for &s in &gens {
                for &g in &l.gens {
                    let c = self.conj(s, g);
                    if !n.contains(c) {
                        n = self.extend(&n, c);
                        grew = true;
                        break 'outer;
                    }
                }
            }
            if !grew {
                return n;
            }
        }
    }

    /// Right coset representatives of `h` in `l`, least element of each coset.
    pub fn right_transversal(&self, l: &Subgroup, h: &Subgroup) -> Vec<Elem> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let hs: Vec<Elem> = h.iter().collect();
        let mut reps = Vec::new();
        for g in l.iter() {
            if seen.contains(g as usize) {
                continue;
            }
            reps.push(g);
            for &x in &hs {
                seen.insert(self.mul(x, g) as usize);
            }
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgroups::*;

    #[test]
    fn generated_subgroups() {
        let s3 = symmetric(3);
        assert_eq!(s3.subgroup_generated(&[0]).unwrap().order(), 1);
        let c3 = s3.subgroup_from_perms(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(c3.order(), 3);
        let s4 = symmetric(4);
        let all = s4.subgroup_from_perms(&[perm(4, &[&[1, 2]]), perm(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert_eq!(all, s4.whole());
        assert_eq!(s4.subgroup_generated(&[99]), Err(Error::NotAnElement(99)));
    }

    #[test]
    fn normalizers() {
        let s3 = symmetric(3);
        assert_eq!(s3.normalizer(&s3.whole()).unwrap(), s3.whole());
        let t = s3.subgroup_from_perms(&[perm(3, &[&[1, 2]])]).unwrap();
        assert_eq!(s3.normalizer(&t).unwrap(), t);
        let s4 = symmetric(4);
        let d8 = s4.subgroup_from_perms(&[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(s4.normalizer(&d8).unwrap().order(), 8);
    }

    #[test]
    fn cores() {
        let s3 = symmetric(3);
        let a3 = s3.subgroup_from_perms(&[perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.core(&a3).unwrap(), a3);
        let t = s3.subgroup_from_perms(&[perm(3, &[&[1, 2]])]).unwrap();
        assert!(s3.core(&t).unwrap().is_trivial());
        let s4 = symmetric(4);
        let d8 = s4.subgroup_from_perms(&[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]).unwrap();
        let v4 = s4
            .subgroup_from_perms(&[perm(4, &[&[1, 2], &[3, 4]]), perm(4, &[&[1, 3], &[2, 4]])])
            .unwrap();
        assert_eq!(s4.core(&d8).unwrap(), v4);
        assert!(s4.core_in(&d8, &s4.whole()).is_err());
    }

    #[test]
    fn foreign_subgroups_are_rejected() {
        let s3 = symmetric(3);
        let s4 = symmetric(4);
        assert_eq!(s4.normalizer(&s3.whole()), Err(Error::ForeignSubgroup));
    }
}
