use proptest::prelude::*;
use subform_core::formation::{ABELIAN, BUILT_IN, NILPOTENT};
use subform_core::subnormality::{check_alternativity, check_definitions_agree, check_lemma1_internal, check_lemma2, check_lemma3_internal};
use subform_core::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Groups generated by one to three random permutations of degree at most 5.
fn group() -> impl Strategy<Value = FiniteGroup> {
    (1usize..=5).prop_flat_map(|d| prop::collection::vec(perm(d), 1..=3).prop_map(move |gens| FiniteGroup::generate(&gens, d).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_laws(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(Permutation::from_cycles(7, &a.cycles()).unwrap(), a.clone());
        let mut x = Permutation::identity(7);
        for _ in 0..a.order() {
            x = x.compose(&a);
        }
        prop_assert!(x.is_identity());
    }

    #[test]
    fn group_basics(g in group()) {
        prop_assert_eq!(g.element(0), &Permutation::identity(g.degree()));
        let lat = all_subgroups(&g).unwrap();
        for h in lat.nodes() {
            prop_assert_eq!(g.order() % h.order(), 0);
            let n = g.normalizer(h).unwrap();
            prop_assert!(h.is_subgroup_of(&n));
            let core = g.core(h).unwrap();
            prop_assert!(core.is_subgroup_of(h));
            prop_assert!(g.is_normal(&core));
            prop_assert_eq!(g.core(&core).unwrap(), core);
        }
        for n in normal_subgroups(&g).unwrap() {
            let q = g.quotient(&n).unwrap();
            prop_assert_eq!(q.image().order() * n.order(), g.order());
            for x in n.iter() {
                prop_assert_eq!(q.apply(x), 0);
            }
        }
        if g.order() > 1 {
            prop_assert!(!maximal_subgroups(&g).unwrap().is_empty());
        }
    }

    #[test]
    fn sylow_subgroups_are_conjugate(g in group()) {
        let lat = all_subgroups(&g).unwrap();
        for p in g.prime_divisors() {
            let s = g.sylow_subgroup(p).unwrap();
            for h in lat.nodes().iter().filter(|h| h.order() == s.order()) {
                prop_assert!((0..g.order() as Elem).any(|x| &g.conjugate_subgroup(&s, x) == h));
            }
        }
    }

    #[test]
    fn lattice_structure(g in group()) {
        let mut lat = all_subgroups(&g).unwrap();
        let all: Vec<Subgroup> = lat.nodes().to_vec();
        let mut from_bottom = interval(&g, &g.trivial_subgroup()).unwrap();
        from_bottom.sort();
        let mut sorted = all.clone();
        sorted.sort();
        prop_assert_eq!(from_bottom, sorted);
        for i in 0..all.len() {
            let covers = lat.covers(&g, i).unwrap().to_vec();
            for &j in &covers {
                prop_assert!(all[i].is_subgroup_of(&all[j]) && all[i] != all[j]);
                prop_assert!(!all.iter().any(|m| m != &all[i] && m != &all[j] && all[i].is_subgroup_of(m) && m.is_subgroup_of(&all[j])));
            }
            let over = minimal_overgroups(&g, &all[i]).unwrap();
            for a in &over {
                prop_assert!(all[i].is_subgroup_of(a) && &all[i] != a);
                for b in &over {
                    prop_assert!(a == b || !a.is_subgroup_of(b));
                }
            }
        }
    }

    #[test]
    fn residual_oracles(g in group()) {
        prop_assert_eq!(residual(&ABELIAN, &g).unwrap(), g.derived_subgroup());
        prop_assert_eq!(residual(&NILPOTENT, &g).unwrap(), g.lower_central_limit());
        for f in &BUILT_IN {
            let r = residual(f, &g).unwrap();
            prop_assert_eq!(f.contains(&g).unwrap(), r.is_trivial());
            prop_assert!(g.is_normal(&r));
            for n in normal_subgroups(&g).unwrap() {
                let q = g.quotient(&n).unwrap();
                prop_assert_eq!(q.image_of(&r), residual(f, q.image()).unwrap());
            }
        }
    }

    #[test]
    fn subnormality_batteries(g in group()) {
        for f in &BUILT_IN {
            let mut an = Analyzer::complete(&g, *f).unwrap();
            let mut checks = vec![check_definitions_agree(&mut an, "g").unwrap(), check_alternativity(&mut an, "g").unwrap()];
            checks.extend(check_lemma1_internal(&mut an, "g").unwrap());
            checks.extend(check_lemma2(&mut an, "g").unwrap());
            checks.extend(check_lemma3_internal(&mut an, "g").unwrap());
            for c in checks {
                prop_assert!(!c.is_failure(), "{} {:?}", f.name, c);
            }
            for i in 0..an.lattice().len() {
                if an.is_abnormal(i).unwrap() {
                    prop_assert!(an.is_self_normalizing(i).unwrap());
                }
            }
        }
    }
}
