mod common;

use std::sync::Arc;

use common::oracle::{self, all_subgroups};
use gassmann_core::character::{
    char_equal, frobenius_inner_product, induce, induce_with_transversal, inner_product, linear_characters,
    permutation_character, restrict, ClassFunction, LinearCharacter,
};
use gassmann_core::cyclotomic::Cyclotomic;
use gassmann_core::gassmann::{build_gl3_f2, catalog_instance};
use gassmann_core::group::{
    conjugacy_classes, left_cosets, ConjugacyClassTable, FiniteGroup, PermGroup, Subgroup,
};
use gassmann_core::tilde::TildeGroup;
use gassmann_core::DEFAULT_ELEMENT_CAP;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn classes<G: FiniteGroup>(g: &G, k: &Subgroup) -> Arc<ConjugacyClassTable> {
    Arc::new(conjugacy_classes(g, Arc::new(k.clone())))
}

fn subgroups(g: &PermGroup) -> Vec<Arc<Subgroup>> {
    all_subgroups(g).into_iter().map(|e| Arc::new(Subgroup::from_elements(g, e).unwrap())).collect()
}

/// A class function with small random Gaussian-like values in ℚ(ζ_12).
fn random_class_function(rng: &mut StdRng, table: &Arc<ConjugacyClassTable>) -> ClassFunction {
    let values = (0..table.len())
        .map(|_| {
            let a = Cyclotomic::from_integer(12, rng.random_range(-3..=3));
            let b = Cyclotomic::root_of_unity(12, rng.random_range(0..12))
                .scale(&num_rational::BigRational::from_integer(rng.random_range(-2..=2).into()));
            a.try_add(&b).unwrap()
        })
        .collect();
    ClassFunction::new(table.clone(), values).unwrap()
}

#[test]
fn frobenius_reciprocity_on_random_s4_cases() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    let subs = subgroups(&g);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let k = subs[rng.random_range(0..subs.len())].clone();
        let chars = linear_characters(&g, k, None).unwrap();
        let lam = &chars[rng.random_range(0..chars.len())];
        let psi = random_class_function(&mut rng, &whole);
        let lhs = inner_product(&induce(&g, &whole, lam).unwrap(), &psi).unwrap();
        let rhs = frobenius_inner_product(lam, &psi).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn transversal_formula_matches_full_group_sum() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    for k in subgroups(&g) {
        for lam in linear_characters(&g, k.clone(), None).unwrap() {
            let ind = induce(&g, &whole, &lam).unwrap();
            for &r in whole.representatives() {
                let reference = oracle::induce_full_sum(&g, k.elements(), |x| lam.value(x).unwrap(), r, 12);
                assert_eq!(ind.value_at(r).unwrap(), &reference);
            }
        }
    }
}

#[test]
fn induction_does_not_depend_on_the_transversal() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    for k in subgroups(&g) {
        // key-minimal coset representatives instead of the breadth-first ones
        let other = left_cosets(&g, &k).unwrap().representatives().to_vec();
        for lam in linear_characters(&g, k.clone(), None).unwrap() {
            let a = induce(&g, &whole, &lam).unwrap();
            let b = induce_with_transversal(&g, &whole, &lam, &other).unwrap();
            assert!(char_equal(&a, &b).unwrap());
        }
    }
}

#[test]
fn induction_is_transitive() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    let subs = subgroups(&g);
    let mut chains = 0;
    for k in &subs {
        let k_table = classes(&g, k);
        for j in subs.iter().filter(|j| j.is_subgroup_of(k)) {
            for lam in linear_characters(&g, j.clone(), None).unwrap() {
                let step = induce(&g, &k_table, &lam).unwrap();
                let two_steps = induce(&g, &whole, &step).unwrap();
                assert_eq!(two_steps, induce(&g, &whole, &lam).unwrap());
                chains += 1;
            }
        }
    }
    assert!(chains > 100);
}

#[test]
fn permutation_characters_count_fixed_cosets() {
    let groups = [
        oracle::s3(),
        oracle::s4(),
        oracle::a4(),
        oracle::d4(),
        oracle::c3_x_s3(),
        oracle::a5(),
        oracle::s5(),
        build_gl3_f2().group,
    ];
    for g in &groups {
        assert!(g.order() <= 200);
        let whole = classes(g, &Subgroup::whole(g));
        for k in subgroups(g) {
            let pi = permutation_character(g, &whole, &k).unwrap();
            for &r in whole.representatives() {
                let expected = Cyclotomic::from_integer(1, oracle::fixed_cosets(g, k.elements(), r));
                assert_eq!(pi.value_at(r).unwrap(), &expected);
            }
        }
    }
}

#[test]
fn inner_products_match_the_element_sum() {
    let g = oracle::s3();
    let whole = classes(&g, &Subgroup::whole(&g));
    let h = Arc::new(Subgroup::from_elements(&g, vec![0, 1]).unwrap());
    let pi = permutation_character(&g, &whole, &h).unwrap();
    let reference = oracle::inner_product_full_sum(
        &g,
        |x| pi.value_at(x).unwrap().clone(),
        |x| pi.value_at(x).unwrap().clone(),
        1,
    );
    assert_eq!(reference, Cyclotomic::from_integer(1, 2));
    assert_eq!(inner_product(&pi, &pi).unwrap(), reference);
}

#[test]
fn norms_of_characters_are_positive_integers() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    for k in subgroups(&g) {
        for lam in linear_characters(&g, k.clone(), None).unwrap() {
            let ind = induce(&g, &whole, &lam).unwrap();
            let norm = inner_product(&ind, &ind).unwrap().to_integer().expect("integer norm");
            assert!(norm >= 1.into());
        }
    }
}

#[test]
fn restriction_rebuckets_values() {
    let g = oracle::s4();
    let whole = classes(&g, &Subgroup::whole(&g));
    let mut rng = StdRng::seed_from_u64(7);
    for k in subgroups(&g) {
        let k_table = classes(&g, &k);
        let psi = random_class_function(&mut rng, &whole);
        let r = restrict(&psi, &k_table).unwrap();
        for &x in k.elements() {
            assert_eq!(r.value_at(x), psi.value_at(x));
        }
        assert_eq!(r.degree(), psi.degree());
    }
}

fn s3_tilde() -> (TildeGroup, Arc<ConjugacyClassTable>, Arc<Subgroup>) {
    let m = catalog_instance("s3-c2").unwrap().materialize(DEFAULT_ELEMENT_CAP).unwrap();
    let t = TildeGroup::new(m.group, &m.h, 3, DEFAULT_ELEMENT_CAP).unwrap();
    let table = classes(&t, &Subgroup::whole(&t));
    let h_tilde = Arc::new(t.h_tilde());
    (t, table, h_tilde)
}

#[test]
fn chi_is_among_the_order_three_characters_of_h_tilde() {
    let (t, _, h_tilde) = s3_tilde();
    let chi = t.chi(&h_tilde).unwrap();
    let found = linear_characters(&t, h_tilde.clone(), Some(3)).unwrap();
    let matching: Vec<&LinearCharacter> =
        found.iter().filter(|lam| h_tilde.elements().iter().all(|&x| lam.value(x) == chi.value(x))).collect();
    assert_eq!(matching.len(), 1);
    assert!(found.iter().all(|lam| lam.order() == 3));
}

#[test]
fn induced_chi_and_its_conjugate_differ() {
    let (t, table, h_tilde) = s3_tilde();
    let chi = t.chi(&h_tilde).unwrap();
    let a = induce(&t, &table, &chi).unwrap();
    let b = induce(&t, &table, &chi.conjugate()).unwrap();
    assert!(!char_equal(&a, &b).unwrap());
    assert_eq!(a.conjugate(), b);
    assert!(char_equal(&a, &a).unwrap());
    assert_eq!(a.degree(), &Cyclotomic::from_integer(1, 3));
    let u = Arc::new(t.chi_kernel());
    let ind_u = induce(&t, &table, &LinearCharacter::trivial(u)).unwrap();
    assert_eq!(ind_u.degree(), &Cyclotomic::from_integer(1, 9));
}

#[test]
fn reciprocity_for_the_trivial_character_counts_orbits() {
    // (1, π|_H̃)_H̃ is the number of H̃-orbits on G̃/H̃
    let (t, table, h_tilde) = s3_tilde();
    let pi = permutation_character(&t, &table, &h_tilde).unwrap();
    let value = frobenius_inner_product(&LinearCharacter::trivial(h_tilde.clone()), &pi).unwrap();
    let cosets = left_cosets(&t, &h_tilde).unwrap();
    let mut seen = vec![false; cosets.len()];
    let mut orbits = 0;
    for start in 0..cosets.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for &x in h_tilde.elements() {
                let j = cosets.act(&t, x, i);
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    assert_eq!(value, Cyclotomic::from_integer(1, orbits));
}
