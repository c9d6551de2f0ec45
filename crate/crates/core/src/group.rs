//! Fully enumerated permutation groups.
//!
//! A [`FiniteGroup`] keeps every element, sorted lexicographically by image
//! array, together with its Cayley table. Elements are addressed by their
//! position in that order ([`Elem`]); the identity is always element `0`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicBool, Ordering};

use hashbrown::HashMap;
use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// Index of an element in its group's canonical element order.
pub type Elem = u32;

pub const DEFAULT_MAX_ORDER: usize = 2000;
pub const DEFAULT_LATTICE_BUDGET: usize = 400;

/// Resource limits shared by a group and everything derived from it.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_order: usize,
    /// Largest group order for which the full subgroup lattice is enumerated.
    pub lattice_budget: usize,
    cancel: Option<Arc<AtomicBool>>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: DEFAULT_MAX_ORDER, lattice_budget: DEFAULT_LATTICE_BUDGET, cancel: None }
    }
}

impl Limits {
    pub fn new(max_order: usize, lattice_budget: usize) -> Self {
        Limits { max_order, lattice_budget, cancel: None }
    }

    /// Attaches a cancellation flag; long computations poll it and stop with
    /// [`Error::Cancelled`] once it is set.
    pub fn with_cancel_flag(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn check(&self) -> Result<()> {
        match &self.cancel {
            Some(flag) if flag.load(Ordering::Relaxed) => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

#[derive(Default)]
pub(crate) struct Cache {
    pub derived: OnceBox<Subgroup>,
    pub center: OnceBox<Subgroup>,
    pub fitting: OnceBox<Subgroup>,
    pub frattini: OnceBox<Subgroup>,
    pub classes: OnceBox<Vec<Vec<Elem>>>,
}

pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Elem>,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    orders: Vec<u32>,
    fingerprint: u64,
    limits: Limits,
    pub(crate) cache: Cache,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("fingerprint", &self.fingerprint)
            .finish()
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            degree: self.degree,
            elements: self.elements.clone(),
            generators: self.generators.clone(),
            table: self.table.clone(),
            inverses: self.inverses.clone(),
            orders: self.orders.clone(),
            fingerprint: self.fingerprint,
            limits: self.limits.clone(),
            cache: Cache::default(),
        }
    }
}

impl FiniteGroup {
    pub fn generate(generators: &[Permutation], degree: usize) -> Result<Self> {
        Self::generate_with(generators, degree, Limits::default())
    }

    /// Closes `generators` under composition; fails once the closure passes
    /// `limits.max_order`.
    pub fn generate_with(generators: &[Permutation], degree: usize, limits: Limits) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let ng = generators.len();
        let mut elements = alloc::vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, Elem> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // parent[b] = (a, s) with element b = a * gen[s], a discovered before b
        let mut parent: Vec<(Elem, u32)> = alloc::vec![(0, 0)];
        let mut rmul: Vec<Elem> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            if i % 256 == 0 {
                limits.check()?;
            }
            for (s, gen) in generators.iter().enumerate() {
                let y = elements[i].compose(gen);
                let idx = match index.get(&y) {
                    Some(&k) => k,
                    None => {
                        if elements.len() >= limits.max_order {
                            return Err(Error::OrderLimitExceeded { max: limits.max_order });
                        }
                        let k = elements.len() as Elem;
                        index.insert(y.clone(), k);
                        elements.push(y);
                        parent.push((i as Elem, s as u32));
                        k
                    }
                };
                rmul.push(idx);
            }
            i += 1;
        }
        drop(index);
        let n = elements.len();
        let mut table = alloc::vec![0 as Elem; n * n];
        for a in 0..n {
            if a % 64 == 0 {
                limits.check()?;
            }
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as Elem;
            for b in 1..n {
                let (pb, s) = parent[b];
                row[b] = rmul[row[pb as usize] as usize * ng + s as usize];
            }
        }
        let gens: Vec<Elem> = (0..ng).map(|s| rmul[s]).collect();
        Ok(Self::from_parts(degree, elements, table, gens, limits).0)
    }

    /// Canonicalizes a group given in arbitrary element order. The identity
    /// must be present. Returns the group and the old-to-new index map.
    pub(crate) fn from_parts(
        degree: usize,
        elements: Vec<Permutation>,
        table: Vec<Elem>,
        generators: Vec<Elem>,
        limits: Limits,
    ) -> (Self, Vec<Elem>) {
        let n = elements.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| elements[a].cmp(&elements[b]));
        let mut pos = alloc::vec![0 as Elem; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new as Elem;
        }
        let mut sorted_table = alloc::vec![0 as Elem; n * n];
        for (new_a, &old_a) in order.iter().enumerate() {
            let src = &table[old_a * n..(old_a + 1) * n];
            let dst = &mut sorted_table[new_a * n..(new_a + 1) * n];
            for (old_b, &v) in src.iter().enumerate() {
                dst[pos[old_b] as usize] = pos[v as usize];
            }
        }
        let mut slots: Vec<Option<Permutation>> = elements.into_iter().map(Some).collect();
        let elements: Vec<Permutation> = order.iter().map(|&o| slots[o].take().unwrap()).collect();
        debug_assert!(elements[0].is_identity());

        let mut inverses = alloc::vec![0 as Elem; n];
        for a in 0..n {
            let row = &sorted_table[a * n..(a + 1) * n];
            inverses[a] = row.iter().position(|&v| v == 0).unwrap() as Elem;
        }
        let mut orders = alloc::vec![1u32; n];
        for (a, o) in orders.iter_mut().enumerate().skip(1) {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = sorted_table[x * n + a] as usize;
                k += 1;
            }
            *o = k;
        }
        let mut generators: Vec<Elem> = generators.iter().map(|&g| pos[g as usize]).collect();
        generators.dedup();

        let fingerprint = fingerprint(degree, &elements);
        let group = FiniteGroup {
            degree,
            elements,
            generators,
            table: sorted_table,
            inverses,
            orders,
            fingerprint,
            limits,
            cache: Cache::default(),
        };
        (group, pos)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, e: Elem) -> &Permutation {
        &self.elements[e as usize]
    }

    /// Generators as element indices.
    pub fn generator_elems(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.generators.iter().map(move |&g| &self.elements[g as usize])
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.elements.binary_search(p).ok().map(|i| i as Elem)
    }

    pub const fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    #[inline]
    pub fn element_order(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Hash of the canonical element list; identifies the group.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn check_cancelled(&self) -> Result<()> {
        self.limits.check()
    }

    /// Replaces the limits (and cancellation flag) carried by this group.
    pub fn set_limits(&mut self, limits: Limits) {
        self.limits = limits;
    }

    /// The subgroup `h` realized as a group in its own right, with the
    /// embedding of its elements into `self`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Embedding> {
        self.own(h)?;
        let members: Vec<Elem> = h.iter().collect();
        let m = members.len();
        let mut local = alloc::vec![u32::MAX; self.order()];
        for (i, &x) in members.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let mut table = alloc::vec![0 as Elem; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * m + j] = local[self.mul(a, b) as usize];
            }
        }
        let elements = members.iter().map(|&x| self.elements[x as usize].clone()).collect();
        let gens = h.generators().iter().map(|&g| local[g as usize]).collect();
        let (group, pos) = Self::from_parts(self.degree, elements, table, gens, self.limits.clone());
        let mut embed = alloc::vec![0 as Elem; m];
        for (i, &x) in members.iter().enumerate() {
            embed[pos[i] as usize] = x;
        }
        Ok(Embedding { group, embed })
    }

    /// `upper / lower` realized by the right-multiplication action on the
    /// cosets of `lower` (degree = index). Returns the quotient and, for every
    /// element of `self`, its image (`u32::MAX` outside `upper`).
    pub(crate) fn coset_quotient(&self, upper: &Subgroup, lower: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
        let n = self.order();
        let mut label = alloc::vec![u32::MAX; n];
        let mut reps: Vec<Elem> = Vec::new();
        let lower_elems: Vec<Elem> = lower.iter().collect();
        for x in upper.iter() {
            if label[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &y in &lower_elems {
                label[self.mul(y, x) as usize] = c;
            }
        }
        let m = reps.len();
        let mut table = alloc::vec![0 as Elem; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = label[self.mul(a, b) as usize];
            }
        }
        let perms = (0..m)
            .map(|c| Permutation::from_images((0..m).map(|d| table[d * m + c]).collect()).unwrap())
            .collect();
        let gens = upper.generators().iter().map(|&g| label[g as usize]).collect();
        let (group, pos) = Self::from_parts(m, perms, table, gens, self.limits.clone());
        for l in label.iter_mut() {
            if *l != u32::MAX {
                *l = pos[*l as usize];
            }
        }
        (group, label)
    }

    /// `upper / lower` as a group. `lower` must be normal in `upper`.
    pub fn section(&self, upper: &Subgroup, lower: &Subgroup) -> Result<FiniteGroup> {
        self.own(upper)?;
        self.own(lower)?;
        if !lower.is_subgroup_of(upper) {
            return Err(Error::NotContained("section: lower not contained in upper"));
        }
        if !self.is_normal_in(lower, upper) {
            return Err(Error::NotNormal);
        }
        Ok(self.coset_quotient(upper, lower).0)
    }

    pub(crate) fn own(&self, h: &Subgroup) -> Result<()> {
        if h.parent() == self.fingerprint && h.members().len() == self.order() {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }
}

/// A subgroup realized as a standalone group.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub group: FiniteGroup,
    /// `embed[e]` is the parent element corresponding to element `e` of `group`.
    pub embed: Vec<Elem>,
}

impl Embedding {
    /// Pushes a subgroup of the embedded group into the parent.
    pub fn lift(&self, parent: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let gens: Vec<Elem> = h.generators().iter().map(|&g| self.embed[g as usize]).collect();
        let members = h.iter().map(|e| self.embed[e as usize]);
        Subgroup::from_parts_unchecked(parent, members, gens)
    }

    /// Pulls a parent subgroup contained in the embedded one down into it.
    pub fn pull(&self, parent: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
        let mut local = alloc::vec![u32::MAX; parent.order()];
        for (i, &x) in self.embed.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        if h.iter().any(|x| local[x as usize] == u32::MAX) {
            return Err(Error::NotContained("pull: subgroup not inside the embedded group"));
        }
        let gens: Vec<Elem> = h.generators().iter().map(|&g| local[g as usize]).collect();
        Ok(Subgroup::from_parts_unchecked(&self.group, h.iter().map(|x| local[x as usize]), gens))
    }
}

fn fingerprint(degree: usize, elements: &[Permutation]) -> u64 {
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u64| {
        for byte in v.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    eat(degree as u64);
    eat(elements.len() as u64);
    for p in elements {
        for &x in p.images() {
            eat(x as u64);
        }
    }
    h
}
