//! F-subnormality, F-abnormality, absolute F-subnormality and abnormality,
//! evaluated over the cover graph of a subgroup lattice with memoization.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::formation::{residual_of, Formation};
use crate::group::{Elem, FiniteGroup};
use crate::hom::GroupHom;
use crate::lattice::{all_subgroups, SubgroupLattice};
use crate::subgroup::Subgroup;
use crate::verdict::{CheckResult, Hypothesis, Violation, Witness};

/// One step `K ⋖ L` of an F-subnormal chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub lower: Subgroup,
    pub upper: Subgroup,
    /// `|core_L(K)|`.
    pub core_order: usize,
    /// `L / core_L(K) ∈ F`; always true in a returned witness.
    pub in_formation: bool,
}

/// `H = H₀ ⋖ H₁ ⋖ … ⋖ Hₙ = G` with every step quotient in F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub steps: Vec<ChainStep>,
}

impl ChainWitness {
    pub fn subgroups(&self) -> Vec<&Subgroup> {
        let mut out: Vec<&Subgroup> = self.steps.iter().map(|s| &s.lower).collect();
        if let Some(last) = self.steps.last() {
            out.push(&last.upper);
        }
        out
    }
}

/// Memoized predicates for one group and one formation.
pub struct Analyzer<'g> {
    g: &'g FiniteGroup,
    f: Formation,
    lat: SubgroupLattice,
    edge: HashMap<(usize, usize), bool>,
    edge_res: HashMap<(usize, usize), bool>,
    residuals: HashMap<usize, FixedBitSet>,
    fsn: HashMap<usize, bool>,
    fsn_res: HashMap<usize, bool>,
    fsn_in: HashMap<(usize, usize), bool>,
    member: HashMap<usize, bool>,
    abnormal: HashMap<usize, bool>,
}

impl<'g> Analyzer<'g> {
    /// Explores only what each query needs.
    pub fn partial(g: &'g FiniteGroup, f: Formation) -> Self {
        Self::with_lattice(g, f, SubgroupLattice::partial(g))
    }

    /// Starts from the full subgroup lattice (within the lattice budget).
    pub fn complete(g: &'g FiniteGroup, f: Formation) -> Result<Self> {
        Ok(Self::with_lattice(g, f, all_subgroups(g)?))
    }

    pub fn with_lattice(g: &'g FiniteGroup, f: Formation, lat: SubgroupLattice) -> Self {
        Analyzer {
            g,
            f,
            lat,
            edge: HashMap::new(),
            edge_res: HashMap::new(),
            residuals: HashMap::new(),
            fsn: HashMap::new(),
            fsn_res: HashMap::new(),
            fsn_in: HashMap::new(),
            member: HashMap::new(),
            abnormal: HashMap::new(),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.g
    }

    pub fn formation(&self) -> &Formation {
        &self.f
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lat
    }

    pub fn lattice_mut(&mut self) -> &mut SubgroupLattice {
        &mut self.lat
    }

    pub fn into_lattice(self) -> SubgroupLattice {
        self.lat
    }

    /// Switches formation, keeping the lattice and abnormality results.
    pub fn set_formation(&mut self, f: Formation) {
        self.f = f;
        self.edge.clear();
        self.edge_res.clear();
        self.residuals.clear();
        self.fsn.clear();
        self.fsn_res.clear();
        self.fsn_in.clear();
        self.member.clear();
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        self.lat.node(i)
    }

    /// Node index of `h`, adding it to the lattice if needed.
    pub fn index(&mut self, h: &Subgroup) -> Result<usize> {
        self.g.own(h)?;
        Ok(self.lat.insert(h.clone()))
    }

    fn top(&self, i: usize) -> bool {
        self.lat.node(i).order() == self.g.order()
    }

    pub fn covers(&mut self, i: usize) -> Result<Vec<usize>> {
        Ok(self.lat.covers(self.g, i)?.to_vec())
    }

    /// `L / core_L(K) ∈ F` for a cover `K ⋖ L`.
    pub fn edge(&mut self, k: usize, l: usize) -> Result<bool> {
        if let Some(&v) = self.edge.get(&(k, l)) {
            return Ok(v);
        }
        let (kk, ll) = (self.lat.node(k), self.lat.node(l));
        let core = self.g.core_in(ll, kk)?;
        let v = self.f.contains_section(self.g, ll, &core)?;
        self.edge.insert((k, l), v);
        Ok(v)
    }

    /// `L^F ≤ K` for a cover `K ⋖ L`.
    pub fn edge_via_residual(&mut self, k: usize, l: usize) -> Result<bool> {
        if let Some(&v) = self.edge_res.get(&(k, l)) {
            return Ok(v);
        }
        if !self.residuals.contains_key(&l) {
            let r = residual_of(&self.f, self.g, self.lat.node(l))?;
            self.residuals.insert(l, r.members().clone());
        }
        let v = self.residuals[&l].is_subset(self.lat.node(k).members());
        self.edge_res.insert((k, l), v);
        Ok(v)
    }

    /// F-subnormal in G.
    pub fn is_fsn(&mut self, i: usize) -> Result<bool> {
        if let Some(&v) = self.fsn.get(&i) {
            return Ok(v);
        }
        self.g.check_cancelled()?;
        let mut v = self.top(i);
        if !v {
            let covers = self.covers(i)?;
            // covers already known to reach G first
            let (known, rest): (Vec<usize>, Vec<usize>) =
                covers.into_iter().partition(|c| self.fsn.get(c) == Some(&true));
            for c in known.into_iter().chain(rest) {
                if self.edge(i, c)? && self.is_fsn(c)? {
                    v = true;
                    break;
                }
            }
        }
        self.fsn.insert(i, v);
        Ok(v)
    }

    /// F-subnormal in G, with step condition `L^F ≤ K`.
    pub fn is_fsn_via_residual(&mut self, i: usize) -> Result<bool> {
        if let Some(&v) = self.fsn_res.get(&i) {
            return Ok(v);
        }
        self.g.check_cancelled()?;
        let mut v = self.top(i);
        if !v {
            for c in self.covers(i)? {
                if self.edge_via_residual(i, c)? && self.is_fsn_via_residual(c)? {
                    v = true;
                    break;
                }
            }
        }
        self.fsn_res.insert(i, v);
        Ok(v)
    }

    /// A chain certifying F-subnormality, if one exists.
    pub fn chain(&mut self, i: usize) -> Result<Option<ChainWitness>> {
        if !self.is_fsn(i)? {
            return Ok(None);
        }
        let mut steps = Vec::new();
        let mut k = i;
        while !self.top(k) {
            let mut next = None;
            for c in self.covers(k)? {
                if self.edge(k, c)? && self.is_fsn(c)? {
                    next = Some(c);
                    break;
                }
            }
            let c = next.expect("an F-subnormal node has a qualifying cover");
            let (lower, upper) = (self.lat.node(k).clone(), self.lat.node(c).clone());
            let core_order = self.g.core_in(&upper, &lower)?.order();
            steps.push(ChainStep { lower, upper, core_order, in_formation: true });
            k = c;
        }
        Ok(Some(ChainWitness { steps }))
    }

    /// `K` is F-subnormal in `H` (`K ≤ H`). Maximality does not depend on
    /// the ambient group, so the chain runs over G's covers inside `H`.
    pub fn is_fsn_in(&mut self, k: usize, h: usize) -> Result<bool> {
        if !self.lat.node(k).is_subgroup_of(self.lat.node(h)) {
            return Err(Error::NotContained("F-subnormal in: K is not contained in H"));
        }
        if self.top(h) {
            return self.is_fsn(k);
        }
        self.fsn_in_rec(k, h)
    }

    fn fsn_in_rec(&mut self, k: usize, h: usize) -> Result<bool> {
        if k == h {
            return Ok(true);
        }
        if let Some(&v) = self.fsn_in.get(&(k, h)) {
            return Ok(v);
        }
        let mut v = false;
        for c in self.covers(k)? {
            if self.lat.node(c).is_subgroup_of(self.lat.node(h)) && self.edge(k, c)? && self.fsn_in_rec(c, h)? {
                v = true;
                break;
            }
        }
        self.fsn_in.insert((k, h), v);
        Ok(v)
    }

    /// No cover `K ⋖ L` with `H ≤ K` has `L / core_L(K) ∈ F`.
    pub fn is_fabnormal(&mut self, i: usize) -> Result<bool> {
        for k in self.lat.interval(self.g, i)? {
            for c in self.covers(k)? {
                if self.edge(k, c)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every overgroup of the node is F-subnormal.
    pub fn is_absolutely_fsn(&mut self, i: usize) -> Result<bool> {
        for k in self.lat.interval(self.g, i)? {
            if !self.is_fsn(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The node, as a group, belongs to F.
    pub fn in_formation(&mut self, i: usize) -> Result<bool> {
        if let Some(&v) = self.member.get(&i) {
            return Ok(v);
        }
        let v = self.f.contains_subgroup(self.g, self.lat.node(i))?;
        self.member.insert(i, v);
        Ok(v)
    }

    pub fn is_self_normalizing(&self, i: usize) -> Result<bool> {
        self.g.is_self_normalizing(self.lat.node(i))
    }

    /// `x ∈ ⟨H, H^x⟩` for all `x`.
    pub fn is_abnormal(&mut self, i: usize) -> Result<bool> {
        if let Some(&v) = self.abnormal.get(&i) {
            return Ok(v);
        }
        let v = abnormal(self.g, self.lat.node(i))?;
        self.abnormal.insert(i, v);
        Ok(v)
    }
}

/// `x ∈ ⟨H, H^x⟩` for all `x`. Only one `x` per right coset `Hx` matters,
/// and any `x ∈ N_G(H) ∖ H` fails at once.
pub fn abnormal(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    g.own(h)?;
    for x in g.right_transversal(&g.whole(), h) {
        if h.contains(x) {
            continue;
        }
        g.check_cancelled()?;
        if g.normalizes(x, h) {
            return Ok(false);
        }
        let mut j = h.clone();
        for &s in h.generators() {
            j = g.extend(&j, g.conj(s, x));
            if j.contains(x) {
                break;
            }
        }
        if !j.contains(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_f_subnormal(g: &FiniteGroup, h: &Subgroup, f: &Formation) -> Result<bool> {
    let mut an = Analyzer::partial(g, *f);
    let i = an.index(h)?;
    an.is_fsn(i)
}

pub fn f_subnormal_chain(g: &FiniteGroup, h: &Subgroup, f: &Formation) -> Result<Option<ChainWitness>> {
    let mut an = Analyzer::partial(g, *f);
    let i = an.index(h)?;
    an.chain(i)
}

pub fn is_f_subnormal_via_residual(g: &FiniteGroup, h: &Subgroup, f: &Formation) -> Result<bool> {
    let mut an = Analyzer::partial(g, *f);
    let i = an.index(h)?;
    an.is_fsn_via_residual(i)
}

pub fn is_f_abnormal(g: &FiniteGroup, h: &Subgroup, f: &Formation) -> Result<bool> {
    let mut an = Analyzer::partial(g, *f);
    let i = an.index(h)?;
    an.is_fabnormal(i)
}

pub fn is_absolutely_f_subnormal(g: &FiniteGroup, h: &Subgroup, f: &Formation) -> Result<bool> {
    let mut an = Analyzer::partial(g, *f);
    let i = an.index(h)?;
    an.is_absolutely_fsn(i)
}

pub fn is_abnormal(g: &FiniteGroup, h: &Subgroup) -> Result<bool> {
    abnormal(g, h)
}

fn w(label: &str, g: &FiniteGroup, h: &Subgroup) -> Witness {
    Witness::subgroup(label, g, h)
}

fn flag_hypothesis(ok: bool) -> Hypothesis {
    if ok {
        Hypothesis::Satisfied
    } else {
        Hypothesis::Empirical
    }
}

/// The two chain conditions agree on every node.
pub fn check_definitions_agree(an: &mut Analyzer<'_>, label: &str) -> Result<CheckResult> {
    let mut out = CheckResult::new("fsn-definitions-agree", Hypothesis::Satisfied);
    let g = an.group();
    for i in 0..an.lattice().len() {
        out.cases += 1;
        if an.is_fsn(i)? != an.is_fsn_via_residual(i)? {
            out.violations.push(Violation::new(label, "quotient and residual chain conditions disagree", alloc::vec![w("H", g, an.node(i))]));
        }
    }
    out.finish();
    Ok(out)
}

/// No proper subgroup is both F-subnormal and F-abnormal.
pub fn check_alternativity(an: &mut Analyzer<'_>, label: &str) -> Result<CheckResult> {
    let mut out = CheckResult::new("alternativity", Hypothesis::Satisfied);
    let g = an.group();
    for i in 0..an.lattice().len() {
        if an.node(i).order() == g.order() {
            continue;
        }
        out.cases += 1;
        if an.is_fsn(i)? && an.is_fabnormal(i)? {
            out.violations.push(Violation::new(label, "proper subgroup both F-subnormal and F-abnormal", alloc::vec![w("H", g, an.node(i))]));
        }
    }
    out.finish();
    Ok(out)
}

/// Parts (1), (4), (5), (6) of the F-subnormality lemma: the ones that
/// stay inside G. Requires a complete lattice.
pub fn check_lemma1_internal(an: &mut Analyzer<'_>, label: &str) -> Result<[CheckResult; 4]> {
    let g = an.group();
    let f = *an.formation();
    let sc = flag_hypothesis(f.flags.subgroup_closed);
    let mut t = CheckResult::new("lemma1.1-transitivity", Hypothesis::Satisfied);
    let mut r = CheckResult::new("lemma1.4-residual-below", sc);
    let mut x = CheckResult::new("lemma1.5-intersection", sc);
    let mut m = CheckResult::new("lemma1.6-subgroups-of-members", sc);
    let n = an.lattice().len();
    let residual = crate::formation::residual(&f, g)?;
    for h in 0..n {
        g.check_cancelled()?;
        let h_sn = an.is_fsn(h)?;
        let below = an.lattice().below(h);
        // (1): K F-sn in H, H F-sn in G => K F-sn in G
        if h_sn {
            for &k in &below {
                t.cases += 1;
                if an.is_fsn_in(k, h)? && !an.is_fsn(k)? {
                    t.violations.push(Violation::new(label, "K F-sn in H, H F-sn in G, K not F-sn in G", alloc::vec![w("K", g, an.node(k)), w("H", g, an.node(h))]));
                }
            }
        }
        // (4): G^F <= H => H F-sn
        if residual.is_subgroup_of(an.node(h)) {
            r.cases += 1;
            if !h_sn {
                r.violations.push(Violation::new(label, "G^F <= H but H not F-sn", alloc::vec![w("H", g, an.node(h))]));
            }
        }
        // (5): H F-sn => H ∩ K F-sn in K
        if h_sn {
            for k in 0..n {
                x.cases += 1;
                let meet = g.intersection(an.node(h), an.node(k));
                let hk = an.index(&meet)?;
                if !an.is_fsn_in(hk, k)? {
                    x.violations.push(Violation::new(label, "H F-sn in G but H∩K not F-sn in K", alloc::vec![w("H", g, an.node(h)), w("K", g, an.node(k))]));
                }
            }
        }
        // (6): K <= H, H F-sn, H in F => K F-sn
        if h_sn && an.in_formation(h)? {
            for &k in &below {
                m.cases += 1;
                if !an.is_fsn(k)? {
                    m.violations.push(Violation::new(label, "H F-sn in G and in F, K <= H not F-sn", alloc::vec![w("K", g, an.node(k)), w("H", g, an.node(h))]));
                }
            }
        }
    }
    for c in [&mut t, &mut r, &mut x, &mut m] {
        c.finish();
    }
    Ok([t, r, x, m])
}

/// The F-abnormality lemma: upward closure with self-normalization, and
/// abnormality in soluble groups.
pub fn check_lemma2(an: &mut Analyzer<'_>, label: &str) -> Result<[CheckResult; 2]> {
    let g = an.group();
    let f = *an.formation();
    let hyp = f.flags.subgroup_closed && f.contains_prime_cyclics_for(g)?;
    let mut up = CheckResult::new("lemma2.1-upward-closed", flag_hypothesis(hyp));
    let mut ab = if g.is_soluble() {
        CheckResult::new("lemma2.2-abnormal-in-soluble", flag_hypothesis(hyp))
    } else {
        CheckResult::not_applicable("lemma2.2-abnormal-in-soluble", "group is insoluble")
    };
    let n = an.lattice().len();
    for a in 0..n {
        g.check_cancelled()?;
        if !an.is_fabnormal(a)? {
            continue;
        }
        for b in an.lattice_mut().interval(g, a)? {
            up.cases += 1;
            if !an.is_fabnormal(b)? || !an.is_self_normalizing(b)? {
                up.violations.push(Violation::new(label, "A F-abnormal, A <= B, B not F-abnormal or not self-normalizing", alloc::vec![w("A", g, an.node(a)), w("B", g, an.node(b))]));
            }
        }
        if ab.hypothesis != Hypothesis::NotApplicable {
            ab.cases += 1;
            if !an.is_abnormal(a)? {
                ab.violations.push(Violation::new(label, "F-abnormal but not abnormal", alloc::vec![w("A", g, an.node(a))]));
            }
        }
    }
    up.finish();
    ab.finish();
    Ok([up, ab])
}

/// The abnormality lemma inside G: Sylow normalizers are abnormal,
/// abnormality is upward closed, abnormal subgroups are self-normalizing.
pub fn check_lemma3_internal(an: &mut Analyzer<'_>, label: &str) -> Result<[CheckResult; 3]> {
    let g = an.group();
    let mut syl = CheckResult::new("lemma3.1-sylow-normalizers", Hypothesis::Satisfied);
    let mut up = CheckResult::new("lemma3.2-upward-closed", Hypothesis::Satisfied);
    let mut sn = CheckResult::new("abnormal-self-normalizing", Hypothesis::Satisfied);
    let n = an.lattice().len();
    for p in g.prime_divisors() {
        let target = crate::arith::p_part(g.order() as u64, p as u64) as usize;
        for i in 0..n {
            if an.node(i).order() != target {
                continue;
            }
            syl.cases += 1;
            let nrm = g.normalizer(an.node(i))?;
            let j = an.index(&nrm)?;
            if !an.is_abnormal(j)? {
                syl.violations.push(Violation::new(label, "normalizer of a Sylow subgroup not abnormal", alloc::vec![w("P", g, an.node(i))]));
            }
        }
    }
    for a in 0..n {
        g.check_cancelled()?;
        if !an.is_abnormal(a)? {
            continue;
        }
        sn.cases += 1;
        if !an.is_self_normalizing(a)? {
            sn.violations.push(Violation::new(label, "abnormal but not self-normalizing", alloc::vec![w("A", g, an.node(a))]));
        }
        for b in an.lattice_mut().interval(g, a)? {
            up.cases += 1;
            if !an.is_abnormal(b)? || !an.is_self_normalizing(b)? {
                up.violations.push(Violation::new(label, "A abnormal, A <= B, B not abnormal or not self-normalizing", alloc::vec![w("A", g, an.node(a)), w("B", g, an.node(b))]));
            }
        }
    }
    for c in [&mut syl, &mut up, &mut sn] {
        c.finish();
    }
    Ok([syl, up, sn])
}

/// Every proper quotient `G/N` with its full lattice, for checks that
/// compare G with its quotients.
pub struct QuotientFamily {
    pub quotients: Vec<(Subgroup, GroupHom, SubgroupLattice)>,
}

impl QuotientFamily {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let mut quotients = Vec::new();
        for n in crate::lattice::normal_subgroups(g)? {
            if n.is_trivial() {
                continue;
            }
            let hom = g.quotient(&n)?;
            let lat = all_subgroups(hom.image())?;
            quotients.push((n, hom, lat));
        }
        Ok(QuotientFamily { quotients })
    }
}

/// Quotient parts of the two lemmas: (2) `K/N` F-sn in `G/N` ⇒ `K` F-sn,
/// (3) `H` F-sn ⇒ `HN/N` F-sn, and abnormality passing to `AN/N`.
pub fn check_quotient_lemmas(an: &mut Analyzer<'_>, family: &QuotientFamily, label: &str) -> Result<[CheckResult; 3]> {
    let g = an.group();
    let f = *an.formation();
    let mut l2 = CheckResult::new("lemma1.2-lift-from-quotient", Hypothesis::Satisfied);
    let mut l3 = CheckResult::new("lemma1.3-image-in-quotient", Hypothesis::Satisfied);
    let mut a3 = CheckResult::new("lemma3.3-abnormal-image", Hypothesis::Satisfied);
    let n = an.lattice().len();
    for (kernel, hom, lat) in &family.quotients {
        g.check_cancelled()?;
        let mut q = Analyzer::with_lattice(hom.image(), f, lat.clone());
        for h in 0..n {
            let img = hom.image_of(an.node(h));
            let qi = q.index(&img)?;
            if kernel.is_subgroup_of(an.node(h)) {
                l2.cases += 1;
                if q.is_fsn(qi)? && !an.is_fsn(h)? {
                    l2.violations.push(Violation::new(label, "K/N F-sn in G/N but K not F-sn", alloc::vec![w("K", g, an.node(h)), w("N", g, kernel)]));
                }
            }
            l3.cases += 1;
            if an.is_fsn(h)? && !q.is_fsn(qi)? {
                l3.violations.push(Violation::new(label, "H F-sn but HN/N not F-sn in G/N", alloc::vec![w("H", g, an.node(h)), w("N", g, kernel)]));
            }
            if an.is_abnormal(h)? {
                a3.cases += 1;
                if !q.is_abnormal(qi)? {
                    a3.violations.push(Violation::new(label, "A abnormal but AN/N not abnormal in G/N", alloc::vec![w("A", g, an.node(h)), w("N", g, kernel)]));
                }
            }
        }
    }
    for c in [&mut l2, &mut l3, &mut a3] {
        c.finish();
    }
    Ok([l2, l3, a3])
}

/// Right coset representatives of `h` in `g`, least element of each coset.
pub fn coset_representatives(g: &FiniteGroup, h: &Subgroup) -> Vec<Elem> {
    g.right_transversal(&g.whole(), h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formation::{ABELIAN, NILPOTENT, NILPOTENT_BY_ABELIAN, SUPERSOLUBLE};
    use crate::testgroups::*;

    #[test]
    fn s3_examples() {
        let s3 = symmetric(3);
        let a3 = s3.derived_subgroup();
        let t = s3.subgroup_from_perms(&[perm(3, &[&[1, 2]])]).unwrap();
        let n = &NILPOTENT;
        assert!(is_f_subnormal(&s3, &s3.whole(), n).unwrap());
        assert!(is_f_subnormal(&s3, &a3, n).unwrap());
        assert!(!is_f_subnormal(&s3, &t, n).unwrap());
        assert!(is_f_subnormal_via_residual(&s3, &a3, n).unwrap());
        assert!(!is_f_subnormal_via_residual(&s3, &t, n).unwrap());
        assert!(is_f_abnormal(&s3, &s3.whole(), n).unwrap());
        assert!(is_f_abnormal(&s3, &t, n).unwrap());
        assert!(!is_f_abnormal(&s3, &a3, n).unwrap());
        assert!(!is_absolutely_f_subnormal(&s3, &t, n).unwrap());
        assert!(is_abnormal(&s3, &t).unwrap() && s3.is_self_normalizing(&t).unwrap());
        assert!(is_abnormal(&s3, &s3.whole()).unwrap());
        assert!(!is_abnormal(&s3, &a3).unwrap());
    }

    #[test]
    fn chain_witness_steps_are_certified() {
        let s4 = symmetric(4);
        let c2 = s4.subgroup_from_perms(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap();
        let chain = f_subnormal_chain(&s4, &c2, &SUPERSOLUBLE).unwrap().unwrap();
        let subs = chain.subgroups();
        assert_eq!(subs.first().unwrap().order(), 2);
        assert_eq!(subs.last().unwrap().order(), 24);
        for s in &chain.steps {
            assert!(minimal_overgroups_contains(&s4, &s.lower, &s.upper));
            let core = s4.core_in(&s.upper, &s.lower).unwrap();
            assert_eq!(core.order(), s.core_order);
            assert!(SUPERSOLUBLE.contains(&s4.section(&s.upper, &core).unwrap()).unwrap());
        }
        let t = s4.subgroup_from_perms(&[perm(4, &[&[1, 2]])]).unwrap();
        assert!(f_subnormal_chain(&s4, &t, &NILPOTENT).unwrap().is_none());
    }

    fn minimal_overgroups_contains(g: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> bool {
        crate::lattice::minimal_overgroups(g, k).unwrap().contains(l)
    }

    #[test]
    fn a4_involutions_are_absolutely_subnormal() {
        let a4 = alternating(4);
        let c2 = a4.subgroup_from_perms(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap();
        assert!(is_absolutely_f_subnormal(&a4, &c2, &NILPOTENT).unwrap());
        let c3 = a4.subgroup_from_perms(&[perm(4, &[&[1, 2, 3]])]).unwrap();
        assert!(is_f_abnormal(&a4, &c3, &NILPOTENT).unwrap());
        assert!(is_abnormal(&a4, &c3).unwrap());
    }

    #[test]
    fn batteries_pass_on_small_groups() {
        for g in [symmetric(3), alternating(4), symmetric(4), dihedral(6), sl23()] {
            let family = QuotientFamily::new(&g).unwrap();
            for f in [ABELIAN, NILPOTENT, SUPERSOLUBLE, NILPOTENT_BY_ABELIAN] {
                let mut an = Analyzer::complete(&g, f).unwrap();
                let mut all = alloc::vec![check_definitions_agree(&mut an, "g").unwrap(), check_alternativity(&mut an, "g").unwrap()];
                all.extend(check_lemma1_internal(&mut an, "g").unwrap());
                all.extend(check_lemma2(&mut an, "g").unwrap());
                all.extend(check_lemma3_internal(&mut an, "g").unwrap());
                all.extend(check_quotient_lemmas(&mut an, &family, "g").unwrap());
                for c in all {
                    assert!(c.violations.is_empty(), "{} {} {:?}", f.name, c.name, c.violations);
                }
            }
        }
    }

    #[test]
    fn fsn_in_subgroup() {
        let s4 = symmetric(4);
        let mut an = Analyzer::complete(&s4, NILPOTENT).unwrap();
        let s3 = s4.subgroup_from_perms(&[perm(4, &[&[1, 2, 3]]), perm(4, &[&[1, 2]])]).unwrap();
        let t = s4.subgroup_from_perms(&[perm(4, &[&[1, 2]])]).unwrap();
        let (i, j) = (an.index(&t).unwrap(), an.index(&s3).unwrap());
        assert!(!an.is_fsn_in(i, j).unwrap());
        let a3 = s4.derived_of(&s3);
        let k = an.index(&a3).unwrap();
        assert!(an.is_fsn_in(k, j).unwrap());
        assert!(an.is_fsn_in(j, k).is_err());
    }
}
