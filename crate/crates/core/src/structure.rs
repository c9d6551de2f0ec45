//! Carter and Schmidt subgroups, E_F-groups, and checkers for the
//! equivalence theorems on primary cyclic subgroups.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::arith::{is_prime, p_part, prime_power_base};
use crate::error::{Error, Result};
use crate::formation::{residual, Formation, NILPOTENT, NILPOTENT_BY_ABELIAN};
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::Subgroup;
use crate::subnormality::Analyzer;
use crate::verdict::{CheckResult, Hypothesis, Statement, TheoremVerdict, VerdictReport, Violation, Witness};

/// Non-trivial cyclic subgroups of prime-power order, sorted.
pub fn primary_cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 1..g.order() as Elem {
        if prime_power_base(g.element_order(x) as u64).is_none() {
            continue;
        }
        let c = g.cyclic_subgroup(x);
        if seen.insert(c.members().clone()) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// One subgroup from each conjugacy class of `subs`, least first.
pub fn conjugacy_representatives(g: &FiniteGroup, mut subs: Vec<Subgroup>) -> Vec<Subgroup> {
    subs.sort();
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for h in subs {
        if seen.contains(h.members()) {
            continue;
        }
        let mut orbit = alloc::vec![h.clone()];
        seen.insert(h.members().clone());
        let mut i = 0;
        while i < orbit.len() {
            for &s in g.generator_elems() {
                let c = g.conjugate_subgroup(&orbit[i], s);
                if seen.insert(c.members().clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        reps.push(h);
    }
    reps
}

fn need_complete(an: &Analyzer<'_>) -> Result<()> {
    if an.lattice().is_complete() {
        Ok(())
    } else {
        let g = an.group();
        Err(Error::LatticeBudgetExceeded { order: g.order(), budget: g.limits().lattice_budget })
    }
}

/// Nilpotent self-normalizing subgroups.
pub fn carter_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let lat = crate::lattice::all_subgroups(g)?;
    let mut out = Vec::new();
    for h in lat.nodes() {
        if g.is_nilpotent_subgroup(h) && g.is_self_normalizing(h)? {
            out.push(h.clone());
        }
    }
    Ok(out)
}

/// `G ∉ F` and every proper subgroup lies in F, checked on every subgroup.
pub fn is_minimal_non_f(g: &FiniteGroup, f: &Formation) -> Result<bool> {
    if f.contains(g)? {
        return Ok(false);
    }
    let lat = crate::lattice::all_subgroups(g)?;
    for h in lat.nodes() {
        if h.order() < g.order() && !f.contains_subgroup(g, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-nilpotent with every maximal subgroup nilpotent.
pub fn is_schmidt(g: &FiniteGroup) -> Result<bool> {
    if g.is_nilpotent() {
        return Ok(false);
    }
    Ok(crate::lattice::maximal_subgroups(g)?.iter().all(|m| g.is_nilpotent_subgroup(m)))
}

/// `G ∉ F` and every non-trivial subgroup is F-subnormal or F-abnormal.
pub fn is_ef_group(an: &mut Analyzer<'_>) -> Result<bool> {
    if an.formation().contains(an.group())? {
        return Ok(false);
    }
    Ok(ef_counterexample(an)?.is_none())
}

fn ef_counterexample(an: &mut Analyzer<'_>) -> Result<Option<usize>> {
    need_complete(an)?;
    for i in 0..an.lattice().len() {
        if an.node(i).is_trivial() {
            continue;
        }
        if !an.is_fsn(i)? && !an.is_fabnormal(i)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

fn w(label: &str, g: &FiniteGroup, h: &Subgroup) -> Witness {
    Witness::subgroup(label, g, h)
}

fn missing_flags(f: &Formation, superradical: bool) -> Vec<&'static str> {
    let mut out = Vec::new();
    if !f.flags.subgroup_closed {
        out.push("subgroup-closed");
    }
    if !f.flags.saturated {
        out.push("saturated");
    }
    if superradical && !f.flags.superradical {
        out.push("superradical");
    }
    if !f.flags.contains_nilpotents {
        out.push("contains nilpotent groups");
    }
    out
}

fn set_hypothesis(t: &mut TheoremVerdict, f: &Formation, superradical: bool) {
    let missing = missing_flags(f, superradical);
    if missing.is_empty() {
        t.hypothesis = Hypothesis::Satisfied;
        t.hypothesis_note = String::from("all formation flags declared");
    } else {
        t.hypothesis = Hypothesis::Empirical;
        t.hypothesis_note = format!("{} not flagged {}: empirical only", f.name, missing.join(", "));
    }
}

fn soluble_not_in_f(g: &FiniteGroup, f: &Formation) -> Result<()> {
    if !g.is_soluble() {
        return Err(Error::Hypothesis(String::from("group is insoluble")));
    }
    if f.contains(g)? {
        return Err(Error::Hypothesis(format!("group belongs to {}", f.name)));
    }
    Ok(())
}

/// Every listed primary cyclic subgroup satisfies `pred`; first failure.
fn all_primary_cyclic(
    an: &mut Analyzer<'_>,
    reps: &[Subgroup],
    mut pred: impl FnMut(&mut Analyzer<'_>, usize) -> Result<bool>,
) -> Result<Option<Subgroup>> {
    for h in reps {
        let i = an.index(h)?;
        if !pred(an, i)? {
            return Ok(Some(h.clone()));
        }
    }
    Ok(None)
}

fn statement_from(name: &str, g: &FiniteGroup, failure: Option<Subgroup>, label: &str) -> Statement {
    let mut s = Statement::new(name, Some(failure.is_none()));
    if let Some(h) = failure {
        s.witnesses.push(w(label, g, &h));
    }
    s
}

/// Search for `x` with `G = G′ ⋊ ⟨x⟩`, `⟨x⟩` a self-normalizing cyclic
/// Sylow subgroup, `G′ = target` and `G′⟨x^p⟩ ∈ F`. Returns the least such `x`.
fn semidirect_shape(g: &FiniteGroup, f: &Formation, target: &Subgroup, reps: &[Subgroup]) -> Result<Option<Elem>> {
    let d = g.derived_subgroup();
    if &d != target {
        return Ok(None);
    }
    let mut best: Option<Elem> = None;
    for c in reps {
        let p = prime_power_base(c.order() as u64).unwrap();
        if c.order() as u64 != p_part(g.order() as u64, p) || d.order() * c.order() != g.order() {
            continue;
        }
        if !g.intersection(&d, c).is_trivial() || !g.is_self_normalizing(c)? {
            continue;
        }
        let x = c.iter().find(|&e| g.element_order(e) as usize == c.order()).unwrap();
        let j = g.join(&d, &g.cyclic_subgroup(g.pow(x, p as u32)));
        if f.contains_subgroup(g, &j)? {
            best = Some(best.map_or(x, |b| b.min(x)));
        }
    }
    Ok(best)
}

/// Every Sylow-type candidate is conjugate to one in `reps`, but the least
/// generator is taken over all primary cyclic subgroups.
fn shape_statement(name: &str, g: &FiniteGroup, f: &Formation, target: &Subgroup, all_pc: &[Subgroup]) -> Result<Statement> {
    let x = semidirect_shape(g, f, target, all_pc)?;
    let mut s = Statement::new(name, Some(x.is_some()));
    if let Some(x) = x {
        s.witnesses.push(Witness::element("x", g, x));
    }
    Ok(s)
}

/// Theorem on primary cyclic subgroups that are F-subnormal or
/// self-normalizing: S1 ⇔ S2 ⇔ S3, each evaluated independently.
pub fn check_theorem1(an: &mut Analyzer<'_>, label: &str) -> Result<TheoremVerdict> {
    let g = an.group();
    let f = *an.formation();
    soluble_not_in_f(g, &f)?;
    let mut t = TheoremVerdict::new("theorem1", label, f.name);
    set_hypothesis(&mut t, &f, true);
    let all_pc = primary_cyclic_subgroups(g);
    let reps = conjugacy_representatives(g, all_pc.clone());

    // S1: every primary cyclic subgroup F-subnormal or self-normalizing
    let fail = all_primary_cyclic(an, &reps, |an, i| Ok(an.is_self_normalizing(i)? || an.is_fsn(i)?))?;
    t.push(statement_from("S1", g, fail, "H"));

    // S2: every non-abnormal subgroup F-subnormal and in F
    if an.lattice().is_complete() {
        let mut fail = None;
        for i in 0..an.lattice().len() {
            g.check_cancelled()?;
            if an.is_fsn(i)? && an.in_formation(i)? {
                continue;
            }
            if !an.is_abnormal(i)? {
                fail = Some(an.node(i).clone());
                break;
            }
        }
        t.push(statement_from("S2", g, fail, "H"));
    } else {
        let mut s = Statement::new("S2", None);
        s.note = String::from("needs every subgroup: group exceeds the lattice budget");
        t.push(s);
    }

    // S3: G = G′ ⋊ ⟨x⟩ with ⟨x⟩ a cyclic Sylow and Carter subgroup, G′ = G^N
    let gn = g.lower_central_limit();
    t.push(shape_statement("S3", g, &f, &gn, &all_pc)?);
    Ok(t)
}

/// Corollary on Carter subgroups: under S1, a proper subgroup is abnormal
/// when its order is divisible by `|K|`, and F-subnormal in F otherwise.
pub fn check_corollary1(an: &mut Analyzer<'_>, label: &str) -> Result<TheoremVerdict> {
    let g = an.group();
    let f = *an.formation();
    soluble_not_in_f(g, &f)?;
    need_complete(an)?;
    let reps = conjugacy_representatives(g, primary_cyclic_subgroups(g));
    if all_primary_cyclic(an, &reps, |an, i| Ok(an.is_self_normalizing(i)? || an.is_fsn(i)?))?.is_some() {
        return Err(Error::Hypothesis(String::from("a primary cyclic subgroup is neither F-subnormal nor self-normalizing")));
    }
    let mut k = None;
    for i in 0..an.lattice().len() {
        let h = an.node(i);
        if g.is_nilpotent_subgroup(h) && g.is_self_normalizing(h)? {
            k = Some(h.clone());
            break;
        }
    }
    let k = k.ok_or_else(|| Error::Hypothesis(String::from("no Carter subgroup")))?;
    let mut t = TheoremVerdict::new("corollary1", label, f.name);
    t.conjunction = true;
    set_hypothesis(&mut t, &f, true);
    let (mut fail1, mut fail2) = (None, None);
    for i in 0..an.lattice().len() {
        let h = an.node(i).clone();
        if h.order() == g.order() {
            continue;
        }
        if h.order() % k.order() == 0 {
            if fail1.is_none() && !an.is_abnormal(i)? {
                fail1 = Some(h);
            }
        } else if fail2.is_none() && !(an.is_fsn(i)? && an.in_formation(i)?) {
            fail2 = Some(h);
        }
    }
    let mut s1 = statement_from("divisible-abnormal", g, fail1, "A");
    s1.witnesses.insert(0, w("K", g, &k));
    t.push(s1);
    t.push(statement_from("coprime-subnormal-in-F", g, fail2, "A"));
    Ok(t)
}

/// Corollary on E_F-groups: primary cyclic subgroups F-subnormal or
/// F-abnormal ⇔ E_F-group ⇔ the split shape with `G′ = G^F`.
pub fn check_corollary2(an: &mut Analyzer<'_>, label: &str) -> Result<TheoremVerdict> {
    let g = an.group();
    let f = *an.formation();
    soluble_not_in_f(g, &f)?;
    let mut t = TheoremVerdict::new("corollary2", label, f.name);
    set_hypothesis(&mut t, &f, true);
    let all_pc = primary_cyclic_subgroups(g);
    let reps = conjugacy_representatives(g, all_pc.clone());
    let fail = all_primary_cyclic(an, &reps, |an, i| Ok(an.is_fsn(i)? || an.is_fabnormal(i)?))?;
    t.push(statement_from("C1", g, fail, "H"));
    if an.lattice().is_complete() {
        let fail = ef_counterexample(an)?.map(|i| an.node(i).clone());
        t.push(statement_from("C2", g, fail, "H"));
    } else {
        let mut s = Statement::new("C2", None);
        s.note = String::from("needs every subgroup: group exceeds the lattice budget");
        t.push(s);
    }
    let gf = residual(&f, g)?;
    t.push(shape_statement("C3", g, &f, &gf, &all_pc)?);
    Ok(t)
}

/// Theorem on absolutely F-subnormal or self-normalizing primary cyclic
/// subgroups: left side versus the explicit structure, independently.
pub fn check_theorem2(an: &mut Analyzer<'_>, label: &str) -> Result<TheoremVerdict> {
    let g = an.group();
    let f = *an.formation();
    if f.contains(g)? {
        return Err(Error::Hypothesis(format!("group belongs to {}", f.name)));
    }
    let mut t = TheoremVerdict::new("theorem2", label, f.name);
    set_hypothesis(&mut t, &f, false);
    let all_pc = primary_cyclic_subgroups(g);
    let reps = conjugacy_representatives(g, all_pc.clone());
    let fail = all_primary_cyclic(an, &reps, |an, i| Ok(an.is_self_normalizing(i)? || an.is_absolutely_fsn(i)?))?;
    let left = fail.is_none();
    t.push(statement_from("left", g, fail, "H"));

    let right = if !an.lattice().is_complete() {
        let mut s = Statement::new("right", None);
        s.note = String::from("needs every subgroup: group exceeds the lattice budget");
        s
    } else if g.is_nilpotent() {
        let mut s = Statement::new("right", Some(false));
        s.note = String::from("group is nilpotent");
        s
    } else if let Some(h) = an.lattice().nodes().iter().find(|h| h.order() < g.order() && h.order() > 1 && prime_power_base(h.order() as u64).is_none()) {
        let mut s = Statement::new("right", Some(false));
        s.note = String::from("a proper subgroup is not primary");
        s.witnesses.push(w("H", g, h));
        s
    } else {
        let x = minimal_split(an, &all_pc)?;
        let mut s = Statement::new("right", Some(x.is_some()));
        match x {
            Some(x) => s.witnesses.push(Witness::element("x", g, x)),
            None => s.note = String::from("no complement of prime order that is maximal and Carter over an elementary abelian G′"),
        }
        s
    };
    t.push(right);
    if left {
        let mut s = Statement::new("soluble", Some(g.is_soluble()));
        s.note = String::from("left side holds");
        t.observations.push(s);
    }
    Ok(t)
}

/// Least `x` of prime order `q` with `G = G′ ⋊ ⟨x⟩`, `G′` an elementary
/// abelian `p`-group, `p ≠ q`, and `⟨x⟩` maximal and self-normalizing.
fn minimal_split(an: &mut Analyzer<'_>, all_pc: &[Subgroup]) -> Result<Option<Elem>> {
    let g = an.group();
    let d = g.derived_subgroup();
    let Some(p) = prime_power_base(d.order() as u64) else {
        return Ok(None);
    };
    if !g.is_elementary_abelian_subgroup(&d) {
        return Ok(None);
    }
    let mut best: Option<Elem> = None;
    for c in all_pc {
        let q = c.order() as u64;
        if !is_prime(q) || q == p || d.order() * c.order() != g.order() || !g.intersection(&d, c).is_trivial() {
            continue;
        }
        let i = an.index(c)?;
        let covers = an.covers(i)?;
        let maximal = covers.len() == 1 && an.node(covers[0]).order() == g.order();
        if maximal && an.is_self_normalizing(i)? {
            let x = c.iter().find(|&e| e != 0).unwrap();
            best = Some(best.map_or(x, |b| b.min(x)));
        }
    }
    Ok(best)
}

/// Every maximal subgroup F-subnormal ⇒ `G ∈ F`.
pub fn check_lemma4(an: &mut Analyzer<'_>, label: &str) -> Result<CheckResult> {
    let g = an.group();
    let f = *an.formation();
    let flags = f.flags.subgroup_closed && f.flags.saturated;
    let mut out = CheckResult::new("lemma4", if flags { Hypothesis::Satisfied } else { Hypothesis::Empirical });
    if !flags {
        out.note = format!("{} not flagged subgroup-closed and saturated", f.name);
    }
    need_complete(an)?;
    if g.order() == 1 {
        out.finish();
        return Ok(out);
    }
    let top = an.lattice().len() - 1;
    let maximals = an.lattice().maximal_below(top);
    out.cases = 1;
    let mut all_sn = true;
    for &m in &maximals {
        if !an.is_fsn(m)? {
            all_sn = false;
            break;
        }
    }
    if all_sn && !f.contains(g)? {
        let ws = maximals.iter().map(|&m| w("M", g, an.node(m))).collect();
        out.violations.push(Violation::new(label, "every maximal subgroup F-subnormal but G not in F", ws));
    }
    out.finish();
    Ok(out)
}

/// For soluble G: `G ∈ F` ⇔ every primary cyclic subgroup is F-subnormal.
pub fn check_lemma5(an: &mut Analyzer<'_>, label: &str) -> Result<CheckResult> {
    let g = an.group();
    let f = *an.formation();
    if !g.is_soluble() {
        return Ok(CheckResult::not_applicable("lemma5", "group is insoluble"));
    }
    let missing = missing_flags(&f, true);
    let mut out = CheckResult::new("lemma5", if missing.is_empty() { Hypothesis::Satisfied } else { Hypothesis::Empirical });
    if !missing.is_empty() {
        out.note = format!("{} not flagged {}", f.name, missing.join(", "));
    }
    let reps = conjugacy_representatives(g, primary_cyclic_subgroups(g));
    let fail = all_primary_cyclic(an, &reps, |an, i| an.is_fsn(i))?;
    out.cases = 1;
    let member = f.contains(g)?;
    if member != fail.is_none() {
        let ws = fail.iter().map(|h| w("H", g, h)).collect();
        let cond = if member { "G in F but a primary cyclic subgroup is not F-subnormal" } else { "every primary cyclic subgroup F-subnormal but G not in F" };
        out.violations.push(Violation::new(label, cond, ws));
    }
    out.finish();
    Ok(out)
}

/// `G ∈ F` ⇔ every primary cyclic subgroup is absolutely F-subnormal.
pub fn check_lemma6(an: &mut Analyzer<'_>, label: &str) -> Result<CheckResult> {
    let g = an.group();
    let f = *an.formation();
    let missing = missing_flags(&f, false);
    let mut out = CheckResult::new("lemma6", if missing.is_empty() { Hypothesis::Satisfied } else { Hypothesis::Empirical });
    if !missing.is_empty() {
        out.note = format!("{} not flagged {}", f.name, missing.join(", "));
    }
    let reps = conjugacy_representatives(g, primary_cyclic_subgroups(g));
    let fail = all_primary_cyclic(an, &reps, |an, i| an.is_absolutely_fsn(i))?;
    out.cases = 1;
    let member = f.contains(g)?;
    if member != fail.is_none() {
        let ws = fail.iter().map(|h| w("H", g, h)).collect();
        let cond = if member { "G in F but a primary cyclic subgroup is not absolutely F-subnormal" } else { "every primary cyclic subgroup absolutely F-subnormal but G not in F" };
        out.violations.push(Violation::new(label, cond, ws));
    }
    out.finish();
    Ok(out)
}

/// Every lemma check on one group for one formation. `family` enables the
/// quotient parts.
pub fn lemma_suite(
    an: &mut Analyzer<'_>,
    family: Option<&crate::subnormality::QuotientFamily>,
    label: &str,
) -> Result<Vec<CheckResult>> {
    use crate::subnormality::*;
    let mut out = alloc::vec![check_definitions_agree(an, label)?, check_alternativity(an, label)?];
    out.extend(check_lemma1_internal(an, label)?);
    if let Some(family) = family {
        out.extend(check_quotient_lemmas(an, family, label)?);
    }
    out.extend(check_lemma2(an, label)?);
    out.extend(check_lemma3_internal(an, label)?);
    out.push(check_lemma4(an, label)?);
    out.push(check_lemma5(an, label)?);
    out.push(check_lemma6(an, label)?);
    Ok(out)
}

fn claim(name: &str, holds: bool, note: String, witnesses: Vec<Witness>) -> CheckResult {
    let mut c = CheckResult::new(name, Hypothesis::Satisfied);
    c.cases = 1;
    c.note = note;
    if !holds {
        c.violations.push(Violation::new("", name, witnesses));
    }
    c.finish();
    c
}

/// Every claim of the worked example for the order-864 group with the
/// formation of groups with nilpotent derived subgroup.
pub fn verify_paper_example(g: &FiniteGroup, label: &str) -> Result<VerdictReport> {
    let mut an = Analyzer::partial(g, NILPOTENT_BY_ABELIAN);
    verify_paper_example_in(&mut an, label)
}

/// [`verify_paper_example`] on an existing analyzer, so that a lattice
/// loaded from a cache is reused and the explored part can be saved.
pub fn verify_paper_example_in(an: &mut Analyzer<'_>, label: &str) -> Result<VerdictReport> {
    let g = an.group();
    if g.order() != 864 {
        return Err(Error::Hypothesis(format!("expected a group of order 864, got {}", g.order())));
    }
    let f = NILPOTENT_BY_ABELIAN;
    if an.formation() != &f {
        an.set_formation(f);
    }
    let mut rep = VerdictReport::new(label, g.order(), f.name);
    let claims = &mut rep.checks;

    let p3 = g.sylow_subgroup(3)?;
    claims.push(claim(
        "sylow3-elementary-abelian-27",
        p3.order() == 27 && g.is_elementary_abelian_subgroup(&p3),
        format!("|P3| = {}", p3.order()),
        alloc::vec![w("P3", g, &p3)],
    ));
    let i3 = an.index(&p3)?;
    let p3_sn = an.is_fsn(i3)?;
    claims.push(claim("sylow3-f-subnormal", p3_sn, String::new(), alloc::vec![w("P3", g, &p3)]));

    let p2 = g.sylow_subgroup(2)?;
    let i2 = an.index(&p2)?;
    let p2_self = g.is_self_normalizing(&p2)?;
    claims.push(claim(
        "sylow2-order-32-self-normalizing",
        p2.order() == 32 && p2_self,
        format!("|P2| = {}, |N(P2)| = {}", p2.order(), g.normalizer(&p2)?.order()),
        alloc::vec![w("P2", g, &p2)],
    ));
    let p2_sn = an.is_fsn(i2)?;
    claims.push(claim("sylow2-not-f-subnormal", !p2_sn, String::new(), alloc::vec![w("P2", g, &p2)]));
    let p2_abn = an.is_fabnormal(i2)?;
    claims.push(claim("sylow2-not-f-abnormal", !p2_abn, String::new(), alloc::vec![w("P2", g, &p2)]));

    // subgroups of the Sylow subgroups: up to conjugacy, every primary subgroup
    let mut primary = Vec::new();
    for (p, sylow) in [(2, &p2), (3, &p3)] {
        let e = g.restrict(sylow)?;
        let lat = crate::lattice::all_subgroups(&e.group)?;
        for h in lat.nodes() {
            if !h.is_trivial() {
                primary.push((p, e.lift(g, h)));
            }
        }
    }
    let mut bad = Vec::new();
    let mut bad_cyclic = Vec::new();
    let (mut count, mut count_cyclic) = (0, 0);
    for (p, h) in &primary {
        if *p == 2 && h.order() < p2.order() {
            let cyclic = g.is_cyclic_subgroup(h);
            count += 1;
            count_cyclic += cyclic as usize;
            let i = an.index(h)?;
            if !an.is_fsn(i)? {
                bad.push(w("H", g, h));
                if cyclic {
                    bad_cyclic.push(w("H", g, h));
                }
            }
        }
    }
    claims.push(claim(
        "sylow2-proper-subgroups-f-subnormal",
        bad.is_empty(),
        format!("{count} proper non-trivial subgroups of P2 checked, {} not F-subnormal", bad.len()),
        bad,
    ));
    claims.push(claim(
        "sylow2-cyclic-subgroups-f-subnormal",
        bad_cyclic.is_empty(),
        format!("{count_cyclic} non-trivial cyclic subgroups of P2 checked"),
        bad_cyclic,
    ));

    let gf = residual(&f, g)?;
    let fit = g.fitting()?;
    claims.push(claim(
        "residual-36-equals-fitting",
        gf.order() == 36 && gf == fit,
        format!("|G^F| = {}, |F(G)| = {}", gf.order(), fit.order()),
        alloc::vec![w("G^F", g, &gf)],
    ));
    let gn = g.lower_central_limit();
    claims.push(claim("nilpotent-residual-108", gn.order() == 108, format!("|G^N| = {}", gn.order()), alloc::vec![w("G^N", g, &gn)]));
    let gn_res = residual(&NILPOTENT, g)?;
    claims.push(claim("nilpotent-residual-agrees", gn_res == gn, String::new(), Vec::new()));
    let d = g.derived_subgroup();
    claims.push(claim("derived-216", d.order() == 216, format!("|G'| = {}", d.order()), alloc::vec![w("G'", g, &d)]));
    let strict = gf.is_subgroup_of(&gn) && gn.is_subgroup_of(&d) && gf.order() < gn.order() && gn.order() < d.order();
    claims.push(claim("strict-chain", strict, String::new(), Vec::new()));

    // primary subgroups: F-subnormal or self-normalizing; some neither
    // F-subnormal nor F-abnormal
    let mut bad = Vec::new();
    let mut bad_cyclic = Vec::new();
    let mut neither = None;
    let mut count_cyclic = 0;
    for (_, h) in &primary {
        let i = an.index(h)?;
        let sn = an.is_fsn(i)?;
        let cyclic = g.is_cyclic_subgroup(h);
        count_cyclic += cyclic as usize;
        if !sn && !g.is_self_normalizing(h)? {
            bad.push(w("H", g, h));
            if cyclic {
                bad_cyclic.push(w("H", g, h));
            }
        }
        if neither.is_none() && !sn && !an.is_fabnormal(i)? {
            neither = Some(h.clone());
        }
    }
    claims.push(claim(
        "primary-f-subnormal-or-self-normalizing",
        bad.is_empty(),
        format!("{} non-trivial subgroups of P2 and P3 checked, {} fail", primary.len(), bad.len()),
        bad,
    ));
    claims.push(claim(
        "primary-cyclic-f-subnormal-or-self-normalizing",
        bad_cyclic.is_empty(),
        format!("{count_cyclic} non-trivial cyclic subgroups of P2 and P3 checked"),
        bad_cyclic,
    ));
    let found = neither.is_some();
    claims.push(claim(
        "primary-not-all-f-subnormal-or-f-abnormal",
        found,
        String::new(),
        neither.iter().map(|h| w("H", g, h)).collect(),
    ));
    for c in rep.checks.iter_mut() {
        for v in c.violations.iter_mut() {
            v.group = String::from(label);
        }
    }
    rep.theorems.push(check_theorem1(an, label)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formation::{ABELIAN, SUPERSOLUBLE};
    use crate::testgroups::*;

    fn orders(hs: &[Subgroup]) -> Vec<usize> {
        hs.iter().map(|h| h.order()).collect()
    }

    #[test]
    fn primary_cyclics() {
        assert!(primary_cyclic_subgroups(&cyclic(1)).is_empty());
        assert_eq!(orders(&primary_cyclic_subgroups(&symmetric(3))), [2, 2, 2, 3]);
        assert_eq!(orders(&primary_cyclic_subgroups(&cyclic(6))), [2, 3]);
    }

    #[test]
    fn carter_and_schmidt() {
        let c4 = cyclic(4);
        assert_eq!(carter_subgroups(&c4).unwrap(), [c4.whole()]);
        assert_eq!(orders(&carter_subgroups(&symmetric(3)).unwrap()), [2, 2, 2]);
        assert_eq!(orders(&carter_subgroups(&alternating(4)).unwrap()), [3, 3, 3, 3]);
        assert!(carter_subgroups(&alternating(5)).unwrap().is_empty());
        for (g, s) in [(symmetric(3), true), (alternating(4), true), (symmetric(4), false), (cyclic(6), false)] {
            assert_eq!(is_schmidt(&g).unwrap(), s);
            assert_eq!(is_minimal_non_f(&g, &NILPOTENT).unwrap(), s);
        }
    }

    #[test]
    fn ef_groups() {
        for (g, v) in [(symmetric(3), true), (alternating(4), true), (symmetric(4), false), (cyclic(5), false)] {
            let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
            assert_eq!(is_ef_group(&mut an).unwrap(), v);
        }
    }

    #[test]
    fn theorem1_small() {
        for g in [symmetric(3), alternating(4)] {
            let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
            let t = check_theorem1(&mut an, "g").unwrap();
            assert_eq!(t.hypothesis, Hypothesis::Satisfied);
            assert!(t.statements.iter().all(|s| s.value == Some(true)), "{t:?}");
            assert_eq!(t.equivalent, Some(true));
        }
        let c6 = cyclic(6);
        let mut an = Analyzer::complete(&c6, NILPOTENT).unwrap();
        assert!(matches!(check_theorem1(&mut an, "C6"), Err(Error::Hypothesis(_))));
        let a5 = alternating(5);
        let mut an = Analyzer::complete(&a5, NILPOTENT).unwrap();
        assert!(matches!(check_theorem1(&mut an, "A5"), Err(Error::Hypothesis(_))));
        let s4 = symmetric(4);
        let mut an = Analyzer::complete(&s4, SUPERSOLUBLE).unwrap();
        let t = check_theorem1(&mut an, "S4").unwrap();
        assert_eq!(t.hypothesis, Hypothesis::Empirical);
    }

    #[test]
    fn theorem2_small() {
        for (g, v) in [(alternating(4), true), (symmetric(3), true), (sl23(), false), (symmetric(4), false)] {
            let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
            let t = check_theorem2(&mut an, "g").unwrap();
            assert_eq!(t.statement("left").unwrap().value, Some(v));
            assert_eq!(t.statement("right").unwrap().value, Some(v));
            assert_eq!(t.equivalent, Some(true));
        }
    }

    #[test]
    fn corollaries_small() {
        for g in [symmetric(3), alternating(4)] {
            let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
            let c1 = check_corollary1(&mut an, "g").unwrap();
            assert_eq!(c1.holds, Some(true));
            let c2 = check_corollary2(&mut an, "g").unwrap();
            assert_eq!(c2.holds, Some(true));
            assert!(c2.statements.iter().all(|s| s.value == Some(true)));
        }
    }

    #[test]
    fn lemma_checks_small() {
        for g in [symmetric(3), alternating(4), symmetric(4), sl23(), dihedral(4)] {
            for f in [NILPOTENT, SUPERSOLUBLE, NILPOTENT_BY_ABELIAN] {
                let mut an = Analyzer::complete(&g, f).unwrap();
                for c in [check_lemma4(&mut an, "g").unwrap(), check_lemma5(&mut an, "g").unwrap(), check_lemma6(&mut an, "g").unwrap()] {
                    if c.hypothesis == Hypothesis::Satisfied {
                        assert!(c.violations.is_empty(), "{} {}", f.name, c.name);
                    }
                }
            }
        }
        // abelian formation is not saturated: the quaternion group breaks the lemma
        let sl = sl23();
        let q8 = sl.restrict(&sl.sylow_subgroup(2).unwrap()).unwrap().group;
        assert!(q8.order() == 8 && !q8.is_abelian() && q8.center().order() == 2);
        let mut an = Analyzer::complete(&q8, ABELIAN).unwrap();
        let c = check_lemma4(&mut an, "Q8").unwrap();
        assert_eq!(c.hypothesis, Hypothesis::Empirical);
        assert_eq!(c.holds, Some(false));
        assert!(!c.is_failure());
    }

    #[test]
    fn example_gate() {
        assert!(matches!(verify_paper_example(&symmetric(4), "S4"), Err(Error::Hypothesis(_))));
    }
}
