//! Hand-derived values for small groups.

use subform_core::formation::{ABELIAN, NILPOTENT, NILPOTENT_BY_ABELIAN, SUPERSOLUBLE};
use subform_core::structure::conjugacy_representatives;
use subform_core::*;

fn p(degree: usize, cycles: &[&[u32]]) -> Permutation {
    let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

fn gen(degree: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
    let gens: Vec<Permutation> = gens.iter().map(|c| p(degree, c)).collect();
    FiniteGroup::generate(&gens, degree).unwrap()
}

fn s3() -> FiniteGroup {
    gen(3, &[&[&[1, 2, 3]], &[&[1, 2]]])
}
fn s4() -> FiniteGroup {
    gen(4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]])
}
fn a4() -> FiniteGroup {
    gen(4, &[&[&[1, 2, 3]], &[&[2, 3, 4]]])
}
fn cyclic(n: u32) -> FiniteGroup {
    let c: Vec<u32> = (1..=n).collect();
    gen(n as usize, &[&[&c]])
}

fn sub(g: &FiniteGroup, gens: &[&[&[u32]]]) -> Subgroup {
    let perms: Vec<Permutation> = gens.iter().map(|c| p(g.degree(), c)).collect();
    g.subgroup_from_perms(&perms).unwrap()
}

fn orders(hs: &[Subgroup]) -> Vec<usize> {
    let mut v: Vec<usize> = hs.iter().map(|h| h.order()).collect();
    v.sort();
    v
}

#[test]
fn generation() {
    assert_eq!(FiniteGroup::generate(&[], 1).unwrap().order(), 1);
    assert_eq!(s3().order(), 6);
    assert_eq!(gen(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]).order(), 4);
    assert_eq!(FiniteGroup::generate_with(&[p(6, &[&[1, 2, 3, 4, 5, 6]]), p(6, &[&[1, 2]])], 6, Limits::new(100, 50)).err(), Some(Error::OrderLimitExceeded { max: 100 }));
}

#[test]
fn subgroups_normalizers_cores() {
    let g = s3();
    assert!(g.subgroup_generated(&[0]).unwrap().is_trivial());
    assert_eq!(sub(&g, &[&[&[1, 2, 3]]]).order(), 3);
    let s4 = s4();
    assert_eq!(sub(&s4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]).order(), 24);

    let t = sub(&g, &[&[&[1, 2]]]);
    assert_eq!(g.normalizer(&t).unwrap(), t);
    assert!(g.core(&t).unwrap().is_trivial());
    let a3 = sub(&g, &[&[&[1, 2, 3]]]);
    assert_eq!(g.core(&a3).unwrap(), a3);

    let p2 = s4.sylow_subgroup(2).unwrap();
    assert_eq!(p2.order(), 8);
    assert_eq!(s4.normalizer(&p2).unwrap(), p2);
    let klein = sub(&s4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    assert_eq!(s4.core(&p2).unwrap(), klein);
}

#[test]
fn series_and_quotients() {
    assert!(cyclic(6).derived_subgroup().is_trivial());
    let g = s3();
    assert_eq!(g.derived_subgroup(), sub(&g, &[&[&[1, 2, 3]]]));
    let s4 = s4();
    let a4_in_s4 = sub(&s4, &[&[&[1, 2, 3]], &[&[2, 3, 4]]]);
    assert_eq!(s4.derived_subgroup(), a4_in_s4);

    let a4 = a4();
    let v4 = sub(&a4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    let q = a4.quotient(&v4).unwrap();
    assert_eq!(q.image().order(), 3);
    assert!(q.image().is_cyclic_subgroup(&q.image().whole()));
    let v4s = sub(&s4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    let q = s4.quotient(&v4s).unwrap();
    assert_eq!(q.image().order(), 6);
    assert!(!q.image().is_abelian());
}

#[test]
fn sylow_hall_fitting_frattini_primes() {
    let c8 = cyclic(8);
    assert_eq!(c8.sylow_subgroup(2).unwrap(), c8.whole());
    let a4 = a4();
    assert_eq!(a4.hall_subgroup(&[3]).unwrap().order(), 3);
    assert_eq!(a4.hall_subgroup(&[2]).unwrap(), sub(&a4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]));
    let c4 = cyclic(4);
    assert_eq!(c4.fitting().unwrap(), c4.whole());
    assert_eq!(c4.frattini().unwrap().order(), 2);
    let s4 = s4();
    assert_eq!(s4.fitting().unwrap().order(), 4);
    assert!(cyclic(1).prime_divisors().is_empty());
    assert_eq!(s4.prime_divisors(), [2, 3]);
    assert_eq!(cyclic(30).prime_divisors(), [2, 3, 5]);
}

#[test]
fn products() {
    let c3 = cyclic(3);
    let c2 = cyclic(2);
    let triv: Automorphism = (0..3).collect();
    let d = semidirect_product(&c3, &c2, &[triv]).unwrap();
    assert!(d.group.is_abelian());
    assert_eq!(d.group.order(), 6);
    let inv: Automorphism = (0..3).map(|x| c3.inv(x)).collect();
    let s = semidirect_product(&c3, &c2, &[inv]).unwrap();
    assert_eq!(s.group.order(), 6);
    assert!(!s.group.is_abelian());
    assert!(s.group.is_normal(&s.normal));

    // V4 ⋊ C3 with the coordinate 3-cycle
    let v4 = gen(4, &[&[&[1, 2]], &[&[3, 4]]]);
    let a = v4.index_of(&p(4, &[&[1, 2]])).unwrap();
    let b = v4.index_of(&p(4, &[&[3, 4]])).unwrap();
    let ab = v4.mul(a, b);
    let images: Vec<Elem> = v4.generator_elems().iter().map(|&x| if x == a { b } else { ab }).collect();
    let phi = automorphism_from_images(&v4, &images).unwrap();
    let r = semidirect_product(&v4, &c3, &[phi]).unwrap();
    assert_eq!(r.group.order(), 12);
    assert_eq!(r.group.derived_subgroup().order(), 4);
    assert!(!r.group.is_nilpotent());
    assert_eq!(all_subgroups(&r.group).unwrap().len(), 10);
}

#[test]
fn lattices() {
    assert_eq!(all_subgroups(&cyclic(5)).unwrap().len(), 2);
    assert_eq!(all_subgroups(&s3()).unwrap().len(), 6);
    assert_eq!(orders(all_subgroups(&a4()).unwrap().nodes()), [1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
    let c4 = cyclic(4);
    assert_eq!(normal_subgroups(&c4).unwrap().len(), all_subgroups(&c4).unwrap().len());
    assert_eq!(orders(&normal_subgroups(&s3()).unwrap()), [1, 3, 6]);
    assert_eq!(orders(&normal_subgroups(&a4()).unwrap()), [1, 4, 12]);
    assert_eq!(orders(&maximal_subgroups(&cyclic(7)).unwrap()), [1]);
    assert_eq!(orders(&maximal_subgroups(&s3()).unwrap()), [2, 2, 2, 3]);
    assert_eq!(orders(&maximal_subgroups(&a4()).unwrap()), [3, 3, 3, 3, 4]);

    let g = s3();
    assert!(minimal_overgroups(&g, &g.whole()).unwrap().is_empty());
    let a3 = sub(&g, &[&[&[1, 2, 3]]]);
    assert_eq!(minimal_overgroups(&g, &a3).unwrap(), [g.whole()]);
    assert_eq!(interval(&g, &a3).unwrap(), [a3.clone(), g.whole()]);
    let a4 = a4();
    let v4 = sub(&a4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    assert_eq!(minimal_overgroups(&a4, &v4).unwrap(), [a4.whole()]);
    let c6 = cyclic(6);
    assert_eq!(interval(&c6, &c6.trivial_subgroup()).unwrap().len(), 4);
    let s4 = s4();
    let lat = all_subgroups(&s4).unwrap();
    assert_eq!(lat.len(), 30);
    assert_eq!(conjugacy_representatives(&s4, lat.nodes().to_vec()).len(), 11);
}

#[test]
fn formations() {
    let (s3, s4) = (s3(), s4());
    assert!(!NILPOTENT.contains(&s3).unwrap());
    assert!(NILPOTENT_BY_ABELIAN.contains(&s3).unwrap());
    assert!(!SUPERSOLUBLE.contains(&s4).unwrap());
    assert!(maximal_subgroups(&s4).unwrap().iter().any(|m| 24 / m.order() == 4));
    let c6 = cyclic(6);
    assert!(residual(&NILPOTENT, &c6).unwrap().is_trivial());
    assert_eq!(residual(&ABELIAN, &s3).unwrap(), s3.derived_subgroup());
    assert_eq!(residual(&ABELIAN, &s3).unwrap().order(), 3);
    assert_eq!(residual(&NILPOTENT, &s4).unwrap(), s4.derived_subgroup());
}

#[test]
fn broken_formation_is_reported() {
    fn even_or_trivial(g: &FiniteGroup) -> Result<bool> {
        Ok(g.order() == 1 || g.order() % 2 == 0)
    }
    let f = Formation { name: "even", description: "order even or 1", membership: even_or_trivial, flags: FormationFlags { subgroup_closed: false, saturated: false, superradical: false, contains_nilpotents: false } };
    // C6 is in, its quotient C3 is not
    let c6 = subform_core::formation::verify_formation_closure(&f, &cyclic(6), "C6").unwrap();
    assert_eq!(c6.holds, Some(false));
    assert!(c6.is_failure());
}

#[test]
fn subnormality_examples() {
    let g = s3();
    let a3 = sub(&g, &[&[&[1, 2, 3]]]);
    let t = sub(&g, &[&[&[1, 2]]]);
    assert!(is_f_subnormal(&g, &g.whole(), &NILPOTENT).unwrap());
    assert!(is_f_subnormal(&g, &a3, &NILPOTENT).unwrap());
    assert!(!is_f_subnormal(&g, &t, &NILPOTENT).unwrap());
    assert!(is_f_subnormal_via_residual(&g, &g.whole(), &NILPOTENT).unwrap());
    assert!(is_f_subnormal_via_residual(&g, &a3, &NILPOTENT).unwrap());
    assert!(is_f_abnormal(&g, &g.whole(), &NILPOTENT).unwrap());
    assert!(is_f_abnormal(&g, &t, &NILPOTENT).unwrap());
    assert!(!is_f_abnormal(&g, &a3, &NILPOTENT).unwrap());
    assert!(is_absolutely_f_subnormal(&g, &g.whole(), &NILPOTENT).unwrap());
    assert!(!is_absolutely_f_subnormal(&g, &t, &NILPOTENT).unwrap());
    assert!(is_abnormal(&g, &g.whole()).unwrap());
    assert!(g.is_self_normalizing(&g.whole()).unwrap());
    assert!(is_abnormal(&g, &t).unwrap());
    assert!(g.is_self_normalizing(&t).unwrap());

    let a4 = a4();
    let c2 = sub(&a4, &[&[&[1, 2], &[3, 4]]]);
    assert!(is_absolutely_f_subnormal(&a4, &c2, &NILPOTENT).unwrap());
}

#[test]
fn structure_examples() {
    assert!(primary_cyclic_subgroups(&cyclic(1)).is_empty());
    assert_eq!(orders(&primary_cyclic_subgroups(&s3())), [2, 2, 2, 3]);
    assert_eq!(orders(&primary_cyclic_subgroups(&cyclic(6))), [2, 3]);
    let c4 = cyclic(4);
    assert_eq!(carter_subgroups(&c4).unwrap(), [c4.whole()]);
    assert_eq!(orders(&carter_subgroups(&s3()).unwrap()), [2, 2, 2]);
    assert_eq!(orders(&carter_subgroups(&a4()).unwrap()), [3, 3, 3, 3]);
    assert!(!is_minimal_non_f(&c4, &NILPOTENT).unwrap());
    for (g, v) in [(s3(), true), (a4(), true), (s4(), false)] {
        assert_eq!(is_minimal_non_f(&g, &NILPOTENT).unwrap(), v);
        assert_eq!(is_schmidt(&g).unwrap(), v);
        let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
        assert_eq!(is_ef_group(&mut an).unwrap(), v);
    }
    let mut an = Analyzer::complete(&c4, NILPOTENT).unwrap();
    assert!(!is_ef_group(&mut an).unwrap());
}

#[test]
fn theorem_examples() {
    for g in [s3(), a4()] {
        let mut an = Analyzer::complete(&g, NILPOTENT).unwrap();
        let t = check_theorem1(&mut an, "g").unwrap();
        assert!(t.statements.iter().all(|s| s.value == Some(true)));
        let t = check_theorem2(&mut an, "g").unwrap();
        assert_eq!(t.statements.iter().map(|s| s.value).collect::<Vec<_>>(), [Some(true), Some(true)]);
        let t = check_corollary1(&mut an, "g").unwrap();
        assert_eq!(t.holds, Some(true));
    }
    // SL(2,3) on the non-zero vectors of F_3^2
    let vecs: Vec<(u32, u32)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vecs.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let sl23 = FiniteGroup::generate(&[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])], 8).unwrap();
    assert_eq!(sl23.order(), 24);
    let mut an = Analyzer::complete(&sl23, NILPOTENT).unwrap();
    let t = check_theorem2(&mut an, "SL(2,3)").unwrap();
    assert_eq!(t.statements.iter().map(|s| s.value).collect::<Vec<_>>(), [Some(false), Some(false)]);
}
