//! On-disk cache of (possibly partial) subgroup lattices.
//!
//! The file is JSON. Nodes are stored by generator indices into the
//! canonical element order, so the cache is only valid for a group whose
//! canonical element list hashes to the stored checksum.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use subform_core::{Elem, FiniteGroup, SubgroupLattice};

use crate::error::{Error, Result};

pub const CACHE_FORMAT: &str = "subform-lattice";
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedNode {
    pub order: usize,
    pub generators: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCache {
    pub format: String,
    pub version: u32,
    pub checksum: String,
    pub order: usize,
    pub complete: bool,
    pub nodes: Vec<CachedNode>,
    pub covers: Vec<Option<Vec<usize>>>,
}

/// SHA-256 over the degree and the canonical element list.
pub fn group_checksum(g: &FiniteGroup) -> String {
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for p in g.elements() {
        for &x in p.images() {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

impl LatticeCache {
    pub fn from_lattice(g: &FiniteGroup, lat: &SubgroupLattice) -> Self {
        LatticeCache {
            format: CACHE_FORMAT.to_string(),
            version: CACHE_VERSION,
            checksum: group_checksum(g),
            order: g.order(),
            complete: lat.is_complete(),
            nodes: lat.nodes().iter().map(|h| CachedNode { order: h.order(), generators: h.generators().to_vec() }).collect(),
            covers: lat.raw_covers().to_vec(),
        }
    }

    pub fn into_lattice(self, g: &FiniteGroup) -> Result<SubgroupLattice> {
        if self.format != CACHE_FORMAT {
            return Err(Error::CacheFormat(format!("unknown format `{}`", self.format)));
        }
        if self.version != CACHE_VERSION {
            return Err(Error::CacheVersion { expected: CACHE_VERSION, found: self.version });
        }
        if self.order != g.order() || self.checksum != group_checksum(g) {
            return Err(Error::StaleChecksum);
        }
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (i, n) in self.nodes.iter().enumerate() {
            let h = g.subgroup_generated(&n.generators)?;
            if h.order() != n.order {
                return Err(Error::CacheFormat(format!("node {i} has order {} but {} was recorded", h.order(), n.order)));
            }
            nodes.push(h);
        }
        Ok(SubgroupLattice::from_raw(g, nodes, self.covers, self.complete)?)
    }
}

pub fn save(g: &FiniteGroup, lat: &SubgroupLattice, path: &Path) -> Result<()> {
    let text = serde_json::to_string(&LatticeCache::from_lattice(g, lat))?;
    std::fs::write(path, text + "\n").map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

pub fn load(g: &FiniteGroup, path: &Path) -> Result<SubgroupLattice> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    let cache: LatticeCache = serde_json::from_str(&text).map_err(|e| Error::from(e).in_file(path))?;
    cache.into_lattice(g).map_err(|e| e.in_file(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::build_named;
    use subform_core::{all_subgroups, Limits};

    fn group(name: &str) -> FiniteGroup {
        build_named(name, &Limits::default()).unwrap().1
    }

    #[test]
    fn round_trip_s3() {
        let g = group("S3");
        let lat = all_subgroups(&g).unwrap();
        let c = LatticeCache::from_lattice(&g, &lat);
        let json = serde_json::to_string(&c).unwrap();
        let back: LatticeCache = serde_json::from_str(&json).unwrap();
        let lat2 = back.into_lattice(&g).unwrap();
        assert_eq!(lat2.nodes(), lat.nodes());
        assert_eq!(lat2.raw_covers(), lat.raw_covers());
        assert!(lat2.is_complete());
    }

    #[test]
    fn rejects_other_groups_and_versions() {
        let g = group("S3");
        let c = LatticeCache::from_lattice(&g, &all_subgroups(&g).unwrap());
        assert!(matches!(c.clone().into_lattice(&group("C6")), Err(Error::StaleChecksum)));
        assert!(matches!(c.clone().into_lattice(&group("semidirect(C3, C2, inversion)")), Err(Error::StaleChecksum)));
        let mut v = c.clone();
        v.version = 9;
        assert!(matches!(v.into_lattice(&g), Err(Error::CacheVersion { found: 9, .. })));
        let mut bad = c;
        bad.nodes[1].order = 5;
        assert!(matches!(bad.into_lattice(&g), Err(Error::CacheFormat(_))));
    }
}
