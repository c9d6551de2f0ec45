//! Commutator series, classical characteristic subgroups, Sylow and Hall
//! subgroups, and the nilpotent/soluble/abelian tests built on them.

use alloc::boxed::Box;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::arith::{factorize, is_prime, p_part, prime_power_base};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;

impl FiniteGroup {
    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let g = h.generators();
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Nilpotent iff every Sylow subgroup is normal, i.e. for each prime `p`
    /// the `p`-elements number exactly the `p`-part of the order.
    pub fn is_nilpotent_subgroup(&self, h: &Subgroup) -> bool {
        let n = h.order() as u64;
        factorize(n).iter().all(|&(p, _)| {
            let count = h.iter().filter(|&x| prime_power_base(self.element_order(x) as u64) == Some(p) || x == 0).count();
            count as u64 == p_part(n, p)
        })
    }

    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.iter().any(|x| self.element_order(x) as usize == h.order())
    }

    /// Prime-power order (the trivial subgroup is not primary).
    pub fn is_primary_subgroup(&self, h: &Subgroup) -> bool {
        prime_power_base(h.order() as u64).is_some()
    }

    pub fn is_elementary_abelian_subgroup(&self, h: &Subgroup) -> bool {
        match prime_power_base(h.order() as u64) {
            Some(p) => {
                self.is_abelian_subgroup(h) && h.iter().skip(1).all(|x| self.element_order(x) as u64 == p)
            }
            None => h.is_trivial(),
        }
    }

    /// `[L, L]`.
    pub fn derived_of(&self, l: &Subgroup) -> Subgroup {
        let g = l.generators();
        let mut seed = Vec::new();
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    seed.push(c);
                }
            }
        }
        self.normal_closure_in(l, &seed)
    }

    /// `L = L⁽⁰⁾ ≥ L⁽¹⁾ ≥ …` until it stabilizes.
    pub fn derived_series_of(&self, l: &Subgroup) -> Vec<Subgroup> {
        let mut series = alloc::vec![l.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_of(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// `γ₁ = L, γᵢ₊₁ = [γᵢ, L]` until it stabilizes.
    pub fn lower_central_series_of(&self, l: &Subgroup) -> Vec<Subgroup> {
        let mut series = alloc::vec![l.clone()];
        loop {
            let last = series.last().unwrap();
            let mut seed = Vec::new();
            for &a in last.generators() {
                for &b in l.generators() {
                    let c = self.commutator(a, b);
                    if c != 0 {
                        seed.push(c);
                    }
                }
            }
            let next = self.normal_closure_in(l, &seed);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_soluble_subgroup(&self, l: &Subgroup) -> bool {
        self.derived_series_of(l).last().unwrap().is_trivial()
    }

    pub fn center_of(&self, l: &Subgroup) -> Subgroup {
        self.centralizer_in(l, l.generators())
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.cache.derived.get_or_init(|| Box::new(self.derived_of(&self.whole()))).clone()
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        self.derived_series_of(&self.whole())
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        self.lower_central_series_of(&self.whole())
    }

    /// The stable term of the lower central series.
    pub fn lower_central_limit(&self) -> Subgroup {
        self.lower_central_series().pop().unwrap()
    }

    pub fn center(&self) -> Subgroup {
        self.cache.center.get_or_init(|| Box::new(self.center_of(&self.whole()))).clone()
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian_subgroup(&self.whole())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subgroup(&self.whole())
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    /// π(G), increasing.
    pub fn prime_divisors(&self) -> Vec<u32> {
        factorize(self.order() as u64).into_iter().map(|(p, _)| p as u32).collect()
    }

    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<Elem>] {
        self.cache.classes.get_or_init(|| {
            let n = self.order();
            let mut seen = FixedBitSet::with_capacity(n);
            let mut classes = Vec::new();
            for x in 0..n as Elem {
                if seen.contains(x as usize) {
                    continue;
                }
                seen.insert(x as usize);
                let mut class = alloc::vec![x];
                let mut i = 0;
                while i < class.len() {
                    let y = class[i];
                    for &g in self.generator_elems() {
                        let z = self.conj(y, g);
                        if !seen.contains(z as usize) {
                            seen.insert(z as usize);
                            class.push(z);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            Box::new(classes)
        })
    }

    /// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time
    /// (always the least available one, so the result is deterministic).
    pub fn sylow_subgroup(&self, p: u32) -> Result<Subgroup> {
        let n = self.order() as u64;
        if !is_prime(p as u64) || n % p as u64 != 0 {
            return Err(Error::NotAPrimeDivisor(p));
        }
        let target = p_part(n, p as u64) as usize;
        let mut sylow = self.trivial_subgroup();
        while sylow.order() < target {
            self.check_cancelled()?;
            let g = (1..n as Elem)
                .find(|&g| {
                    !sylow.contains(g)
                        && prime_power_base(self.element_order(g) as u64) == Some(p as u64)
                        && self.normalizes(g, &sylow)
                })
                .expect("a p-subgroup below Sylow order has a normalizing p-element outside it");
            sylow = self.extend(&sylow, g);
        }
        Ok(sylow)
    }

    /// A Hall π-subgroup of a soluble group. Every π-subgroup of a soluble
    /// group lies in a Hall π-subgroup, so greedily adding π-elements that
    /// keep the subgroup a π-group cannot get stuck.
    pub fn hall_subgroup(&self, primes: &[u32]) -> Result<Subgroup> {
        if !self.is_soluble() {
            return Err(Error::NotSoluble);
        }
        let n = self.order() as u64;
        let is_pi = |m: u64| factorize(m).iter().all(|(q, _)| primes.contains(&(*q as u32)));
        let target: u64 = factorize(n)
            .iter()
            .filter(|(q, _)| primes.contains(&(*q as u32)))
            .map(|&(q, _)| p_part(n, q))
            .product();
        let mut hall = self.trivial_subgroup();
        while (hall.order() as u64) < target {
            self.check_cancelled()?;
            let mut grown = None;
            for g in 1..n as Elem {
                if hall.contains(g) || !is_pi(self.element_order(g) as u64) {
                    continue;
                }
                let cand = self.extend(&hall, g);
                if is_pi(cand.order() as u64) {
                    grown = Some(cand);
                    break;
                }
            }
            hall = grown.ok_or_else(|| Error::Hypothesis("no Hall subgroup extension found".into()))?;
        }
        Ok(hall)
    }

    /// `O_p(G)`: the core of a Sylow `p`-subgroup.
    pub fn p_core(&self, p: u32) -> Result<Subgroup> {
        self.core(&self.sylow_subgroup(p)?)
    }

    /// `F(G)`, the product of the `O_p(G)`.
    pub fn fitting(&self) -> Result<Subgroup> {
        if let Some(f) = self.cache.fitting.get() {
            return Ok(f.clone());
        }
        let mut f = self.trivial_subgroup();
        for p in self.prime_divisors() {
            f = self.join(&f, &self.p_core(p)?);
        }
        debug_assert!(self.is_nilpotent_subgroup(&f) && self.is_normal(&f));
        Ok(self.cache.fitting.get_or_init(|| Box::new(f)).clone())
    }
}
