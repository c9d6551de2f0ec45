//! Quotient maps realized on coset spaces.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;

/// The natural map `G → G/N`, with `G/N` acting on the right cosets of `N`.
#[derive(Debug, Clone)]
pub struct GroupHom {
    source: u64,
    kernel: Subgroup,
    image: FiniteGroup,
    map: Vec<Elem>,
}

impl GroupHom {
    pub fn source_fingerprint(&self) -> u64 {
        self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &FiniteGroup {
        &self.image
    }

    pub fn into_image(self) -> FiniteGroup {
        self.image
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e as usize]
    }

    /// `HN/N` as a subgroup of the image.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.image.order());
        for x in h.iter() {
            m.insert(self.map[x as usize] as usize);
        }
        let gens: Vec<Elem> = h.generators().iter().map(|&g| self.apply(g)).filter(|&g| g != 0).collect();
        let sub = self.image.subgroup_generated(&gens).unwrap();
        debug_assert_eq!(sub.members(), &m);
        sub
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, source: &FiniteGroup, k: &Subgroup) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(source.order());
        for (x, &y) in self.map.iter().enumerate() {
            if k.contains(y) {
                m.insert(x);
            }
        }
        source.subgroup_from_members(&m)
    }
}

impl FiniteGroup {
    /// `G → G/N`; `n` must be normal.
    pub fn quotient(&self, n: &Subgroup) -> Result<GroupHom> {
        self.own(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let (image, map) = self.coset_quotient(&self.whole(), n);
        Ok(GroupHom { source: self.fingerprint(), kernel: n.clone(), image, map })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgroups::*;

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let s3 = symmetric(3);
        let q = s3.quotient(&s3.trivial_subgroup()).unwrap();
        assert_eq!(q.image().order(), 6);
        assert!(!q.image().is_abelian());
    }

    #[test]
    fn a4_mod_v4_and_s4_mod_v4() {
        let a4 = alternating(4);
        let v4 = a4.sylow_subgroup(2).unwrap();
        let q = a4.quotient(&v4).unwrap();
        assert_eq!(q.image().order(), 3);
        assert!(q.image().is_cyclic_subgroup(&q.image().whole()));
        assert_eq!(q.image().degree(), 3);

        let s4 = symmetric(4);
        let v4 = s4.fitting().unwrap();
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.image().order(), 6);
        assert!(!q.image().is_abelian());
    }

    #[test]
    fn quotient_map_is_a_homomorphism_with_the_right_kernel() {
        let s4 = symmetric(4);
        let v4 = s4.fitting().unwrap();
        let q = s4.quotient(&v4).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(q.apply(s4.mul(a, b)), q.image().mul(q.apply(a), q.apply(b)));
            }
            assert_eq!(q.apply(a) == 0, v4.contains(a));
        }
        let d8 = s4.sylow_subgroup(2).unwrap();
        let img = q.image_of(&d8);
        assert_eq!(img.order(), 2);
        assert_eq!(q.preimage(&s4, &img), d8);
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let s3 = symmetric(3);
        let t = s3.subgroup_from_perms(&[perm(3, &[&[1, 2]])]).unwrap();
        assert_eq!(s3.quotient(&t).unwrap_err(), Error::NotNormal);
    }
}
