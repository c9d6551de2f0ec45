//! Subgroup lattices: complete enumeration for groups within the lattice
//! budget, and lazily explored intervals above a fixed subgroup for larger
//! groups.

use alloc::boxed::Box;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use hashbrown::HashMap;

use crate::arith::{is_prime, prime_power_base};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;

/// A set of subgroups of one group with their covering relation.
///
/// `covers[i]` lists the minimal overgroups of node `i` once it has been
/// expanded. A complete lattice has every subgroup as a node, sorted by
/// order then member list, and every node expanded. A partial lattice only
/// holds what interval searches have touched so far, in discovery order.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    parent: u64,
    group_order: usize,
    nodes: Vec<Subgroup>,
    index: HashMap<FixedBitSet, usize>,
    covers: Vec<Option<Vec<usize>>>,
    complete: bool,
}

impl SubgroupLattice {
    /// An empty partial lattice for `g`.
    pub fn partial(g: &FiniteGroup) -> Self {
        SubgroupLattice {
            parent: g.fingerprint(),
            group_order: g.order(),
            nodes: Vec::new(),
            index: HashMap::new(),
            covers: Vec::new(),
            complete: false,
        }
    }

    /// Rebuilds a lattice from stored nodes and covers (cache loading).
    pub fn from_raw(
        g: &FiniteGroup,
        nodes: Vec<Subgroup>,
        covers: Vec<Option<Vec<usize>>>,
        complete: bool,
    ) -> Result<Self> {
        if covers.len() != nodes.len() || covers.iter().flatten().flatten().any(|&c| c >= nodes.len()) {
            return Err(Error::NotContained("lattice: cover index out of range"));
        }
        let mut lat = SubgroupLattice::partial(g);
        for node in nodes {
            g.own(&node)?;
            lat.insert(node);
        }
        if lat.nodes.len() != covers.len() {
            return Err(Error::NotContained("lattice: duplicate nodes"));
        }
        lat.covers = covers;
        lat.complete = complete;
        Ok(lat)
    }

    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn find(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.members()).copied()
    }

    pub fn find_members(&self, m: &FixedBitSet) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `h`, adding it as an unexpanded node if new.
    pub fn insert(&mut self, h: Subgroup) -> usize {
        if let Some(&i) = self.index.get(h.members()) {
            return i;
        }
        let i = self.nodes.len();
        self.index.insert(h.members().clone(), i);
        self.nodes.push(h);
        self.covers.push(None);
        i
    }

    /// Already-computed minimal overgroups of node `i`.
    pub fn known_covers(&self, i: usize) -> Option<&[usize]> {
        self.covers[i].as_deref()
    }

    pub fn raw_covers(&self) -> &[Option<Vec<usize>>] {
        &self.covers
    }

    /// Minimal overgroups of node `i`, computing them on first use.
    pub fn covers(&mut self, g: &FiniteGroup, i: usize) -> Result<&[usize]> {
        if self.covers[i].is_none() {
            let ups = minimal_overgroups(g, &self.nodes[i])?;
            let ids: Vec<usize> = ups.into_iter().map(|h| self.insert(h)).collect();
            self.covers[i] = Some(ids);
        }
        Ok(self.covers[i].as_deref().unwrap())
    }

    /// Every node `L` with `node(i) ≤ L ≤ G`, sorted by order then members.
    pub fn interval(&mut self, g: &FiniteGroup, i: usize) -> Result<Vec<usize>> {
        let mut seen = alloc::vec![false; self.nodes.len()];
        seen[i] = true;
        let mut out = alloc::vec![i];
        let mut k = 0;
        while k < out.len() {
            g.check_cancelled()?;
            let ups = self.covers(g, out[k])?.to_vec();
            for u in ups {
                if u >= seen.len() {
                    seen.resize(self.nodes.len(), false);
                }
                if !seen[u] {
                    seen[u] = true;
                    out.push(u);
                }
            }
            k += 1;
        }
        out.sort_by(|&a, &b| self.nodes[a].cmp(&self.nodes[b]));
        Ok(out)
    }

    /// Maximal subgroups of node `i` (complete lattices only).
    pub fn maximal_below(&self, i: usize) -> Vec<usize> {
        debug_assert!(self.complete);
        (0..self.nodes.len()).filter(|&k| self.covers[k].as_ref().is_some_and(|c| c.contains(&i))).collect()
    }

    /// Nodes contained in node `i`.
    pub fn below(&self, i: usize) -> Vec<usize> {
        let top = &self.nodes[i];
        (0..self.nodes.len()).filter(|&k| self.nodes[k].is_subgroup_of(top)).collect()
    }

    /// Conjugacy class label per node (complete lattices only): the least
    /// node index in the class.
    pub fn class_ids(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut class = alloc::vec![usize::MAX; self.nodes.len()];
        for i in 0..self.nodes.len() {
            if class[i] != usize::MAX {
                continue;
            }
            class[i] = i;
            let mut queue = alloc::vec![i];
            let mut k = 0;
            while k < queue.len() {
                let h = &self.nodes[queue[k]];
                for &s in g.generator_elems() {
                    let c = g.conjugate_subgroup(h, s);
                    if let Some(j) = self.find(&c) {
                        if class[j] == usize::MAX {
                            class[j] = i;
                            queue.push(j);
                        }
                    }
                }
                k += 1;
            }
        }
        class
    }

    pub fn whole_index(&self) -> Option<usize> {
        self.nodes.iter().position(|h| h.order() == self.group_order)
    }
}

/// Every subgroup of `g`, by closing the prime-power cyclic subgroups under
/// joins with one another.
pub fn all_subgroups(g: &FiniteGroup) -> Result<SubgroupLattice> {
    let budget = g.limits().lattice_budget;
    if g.order() > budget {
        return Err(Error::LatticeBudgetExceeded { order: g.order(), budget });
    }
    let mut lat = SubgroupLattice::partial(g);
    lat.insert(g.trivial_subgroup());
    let mut cyclic_gens = Vec::new();
    for x in 1..g.order() as Elem {
        if prime_power_base(g.element_order(x) as u64).is_some() {
            let c = g.cyclic_subgroup(x);
            if lat.find(&c).is_none() {
                lat.insert(c);
                cyclic_gens.push(x);
            }
        }
    }
    let mut i = 1;
    while i < lat.nodes.len() {
        if i % 32 == 0 {
            g.check_cancelled()?;
        }
        for &x in &cyclic_gens {
            if lat.nodes[i].contains(x) {
                continue;
            }
            let j = g.extend(&lat.nodes[i], x);
            if lat.find(&j).is_none() {
                lat.insert(j);
            }
        }
        i += 1;
    }

    let mut nodes = core::mem::take(&mut lat.nodes);
    nodes.sort();
    let mut lat = SubgroupLattice::partial(g);
    for h in nodes {
        lat.insert(h);
    }
    let n = lat.nodes.len();
    for k in 0..n {
        if k % 64 == 0 {
            g.check_cancelled()?;
        }
        let hk = &lat.nodes[k];
        let mut mins: Vec<usize> = Vec::new();
        for l in k + 1..n {
            let hl = &lat.nodes[l];
            if hl.order() == hk.order() || hl.order() % hk.order() != 0 || !hk.is_subgroup_of(hl) {
                continue;
            }
            if !mins.iter().any(|&m| lat.nodes[m].is_subgroup_of(hl)) {
                mins.push(l);
            }
        }
        lat.covers[k] = Some(mins);
    }
    lat.complete = true;
    Ok(lat)
}

/// All `K` with `H ⋖ K ≤ G`: the minimal members of `{⟨H, x⟩ : x ∉ H}`.
pub fn minimal_overgroups(g: &FiniteGroup, h: &Subgroup) -> Result<Vec<Subgroup>> {
    g.own(h)?;
    if h.order() == g.order() {
        return Ok(Vec::new());
    }
    let hs: Vec<Elem> = h.iter().collect();
    let mut done = h.members().clone();
    let mut cands: Vec<Subgroup> = Vec::new();
    for x in 0..g.order() as Elem {
        if done.contains(x as usize) {
            continue;
        }
        g.check_cancelled()?;
        // ⟨H, x⟩ only depends on the coset Hx
        for &y in &hs {
            done.insert(g.mul(y, x) as usize);
        }
        let j = g.extend(h, x);
        if is_prime((j.order() / h.order()) as u64) {
            // prime index: nothing lies strictly between, so every y ∈ J∖H yields J
            done.union_with(j.members());
        }
        if !cands.iter().any(|c| c == &j) {
            cands.push(j);
        }
    }
    cands.sort();
    let mut mins: Vec<Subgroup> = Vec::new();
    for c in cands {
        if !mins.iter().any(|m| m.is_subgroup_of(&c)) {
            mins.push(c);
        }
    }
    Ok(mins)
}

/// Every `L` with `H ≤ L ≤ G`, sorted by order then members.
pub fn interval(g: &FiniteGroup, h: &Subgroup) -> Result<Vec<Subgroup>> {
    let mut lat = SubgroupLattice::partial(g);
    let i = lat.insert(h.clone());
    let ids = lat.interval(g, i)?;
    Ok(ids.into_iter().map(|k| lat.nodes[k].clone()).collect())
}

/// Normal subgroups, as joins of normal closures of conjugacy classes.
/// Sorted by order then members.
pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let whole = g.whole();
    let mut closures: Vec<Subgroup> = Vec::new();
    for class in g.conjugacy_classes().iter().skip(1) {
        let c = g.normal_closure_in(&whole, &class[..1]);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    let mut lat = SubgroupLattice::partial(g);
    lat.insert(g.trivial_subgroup());
    for c in &closures {
        lat.insert(c.clone());
    }
    let mut i = 0;
    while i < lat.nodes.len() {
        g.check_cancelled()?;
        for c in &closures {
            if c.is_subgroup_of(&lat.nodes[i]) {
                continue;
            }
            let j = g.join(&lat.nodes[i], c);
            lat.insert(j);
        }
        i += 1;
    }
    let mut out = lat.nodes;
    out.sort();
    Ok(out)
}

/// Maximal subgroups of `g`, sorted.
pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    let lat = all_subgroups(g)?;
    let top = lat.len() - 1;
    Ok(lat.maximal_below(top).into_iter().map(|k| lat.nodes[k].clone()).collect())
}

impl FiniteGroup {
    /// `Φ(G)`: intersection of the maximal subgroups.
    pub fn frattini(&self) -> Result<Subgroup> {
        if let Some(f) = self.cache.frattini.get() {
            return Ok(f.clone());
        }
        let mut m = self.whole().members().clone();
        for h in maximal_subgroups(self)? {
            m.intersect_with(h.members());
        }
        let f = self.subgroup_from_members(&m);
        Ok(self.cache.frattini.get_or_init(|| Box::new(f)).clone())
    }

    /// Supersoluble iff every maximal subgroup has prime index.
    pub fn is_supersoluble(&self) -> Result<bool> {
        if !self.is_soluble() {
            return Ok(false);
        }
        Ok(maximal_subgroups(self)?.iter().all(|h| is_prime((self.order() / h.order()) as u64)))
    }
}
