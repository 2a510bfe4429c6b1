//! Brute-force reference computations. Everything here works from the group
//! multiplication alone and deliberately avoids the library's own algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gassmann_core::cyclotomic::{Cyclotomic, Rational};
use gassmann_core::group::{FiniteGroup, PermGroup, Permutation};
use gassmann_core::DEFAULT_ELEMENT_CAP;
use num_bigint::BigInt;

pub fn perm_group(degree: usize, gens: &[&[u32]]) -> PermGroup {
    let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::new(g.to_vec()).unwrap()).collect();
    PermGroup::generate(degree, &gens, DEFAULT_ELEMENT_CAP).unwrap()
}

pub fn s3() -> PermGroup {
    perm_group(3, &[&[1, 0, 2], &[1, 2, 0]])
}

pub fn s4() -> PermGroup {
    perm_group(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
}

pub fn a4() -> PermGroup {
    perm_group(4, &[&[1, 2, 0, 3], &[0, 2, 3, 1]])
}

pub fn d4() -> PermGroup {
    perm_group(4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]])
}

pub fn a5() -> PermGroup {
    perm_group(5, &[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]])
}

pub fn s5() -> PermGroup {
    perm_group(5, &[&[1, 0, 2, 3, 4], &[1, 2, 3, 4, 0]])
}

/// `C_3 × S_3` on six points, order 18.
pub fn c3_x_s3() -> PermGroup {
    perm_group(6, &[&[1, 2, 0, 3, 4, 5], &[0, 1, 2, 4, 3, 5], &[0, 1, 2, 4, 5, 3]])
}

/// Subgroup generated by `gens`, by breadth-first multiplication.
pub fn closure<G: FiniteGroup>(g: &G, gens: &[usize]) -> BTreeSet<usize> {
    let mut set = BTreeSet::from([g.identity()]);
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

/// Every subgroup, as sorted element sets: start from the trivial group and join
/// cyclic subgroups until nothing new appears. Every subgroup is a join of the
/// cyclic subgroups of its elements, so this is exhaustive.
pub fn all_subgroups<G: FiniteGroup>(g: &G) -> Vec<Vec<usize>> {
    let mut cyclic: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    for x in 0..g.order() {
        let c = closure(g, &[x]);
        if !cyclic.iter().any(|(_, d)| *d == c) {
            cyclic.push((x, c));
        }
    }
    let trivial = BTreeSet::from([g.identity()]);
    let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::from([trivial.clone()]);
    let mut frontier: Vec<(BTreeSet<usize>, Vec<usize>)> = vec![(trivial, Vec::new())];
    while let Some((s, gens)) = frontier.pop() {
        for (x, c) in &cyclic {
            if c.is_subset(&s) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*x);
            let joined = closure(g, &joined_gens);
            if all.insert(joined.clone()) {
                frontier.push((joined, joined_gens));
            }
        }
    }
    all.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// `g` conjugates `a` onto `b`, checked elementwise.
pub fn conjugates_onto<G: FiniteGroup>(g: &G, t: usize, a: &[usize], b: &[usize]) -> bool {
    let mut image: Vec<usize> = a.iter().map(|&x| g.conj(t, x)).collect();
    image.sort_unstable();
    image == b
}

pub fn brute_conjugate<G: FiniteGroup>(g: &G, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..g.order()).any(|t| conjugates_onto(g, t, a, b))
}

/// Number of left cosets `xK` with `g x K = x K`, counted over all of `G`:
/// `#{x : x⁻¹ g x ∈ K} / |K|`.
pub fn fixed_cosets<G: FiniteGroup>(g: &G, k: &[usize], x: usize) -> i64 {
    let members: BTreeSet<usize> = k.iter().copied().collect();
    let hits = (0..g.order()).filter(|&y| members.contains(&g.mul(g.mul(g.inv(y), x), y))).count();
    (hits / k.len()) as i64
}

/// `Ind_K^G φ (g) = (1/|K|) Σ_{x ∈ G, x⁻¹gx ∈ K} φ(x⁻¹gx)`, the full-group formula.
pub fn induce_full_sum<G: FiniteGroup>(
    g: &G,
    k: &[usize],
    phi: impl Fn(usize) -> Cyclotomic,
    at: usize,
    order: u32,
) -> Cyclotomic {
    let members: BTreeSet<usize> = k.iter().copied().collect();
    let mut total = Cyclotomic::zero(order);
    for x in 0..g.order() {
        let y = g.mul(g.mul(g.inv(x), at), x);
        if members.contains(&y) {
            total = total.try_add(&phi(y).embed(order).unwrap()).unwrap();
        }
    }
    total.scale(&Rational::new(BigInt::from(1), BigInt::from(k.len())))
}

/// `(1/|G|) Σ_{g ∈ G} φ(g) conj(ψ(g))` over every element.
pub fn inner_product_full_sum<G: FiniteGroup>(
    g: &G,
    phi: impl Fn(usize) -> Cyclotomic,
    psi: impl Fn(usize) -> Cyclotomic,
    order: u32,
) -> Cyclotomic {
    let mut total = Cyclotomic::zero(order);
    for x in 0..g.order() {
        let term = phi(x).embed(order).unwrap().try_mul(&psi(x).conjugate().embed(order).unwrap()).unwrap();
        total = total.try_add(&term).unwrap();
    }
    total.scale(&Rational::new(BigInt::from(1), BigInt::from(g.order())))
}

/// Exact polynomial long division over ℤ for monic divisors, low degree first.
pub fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dl = den.len();
    assert_eq!(*den.last().unwrap(), 1, "monic divisor");
    let mut q = vec![0; r.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = r[i + dl - 1];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "division leaves a remainder");
    q
}
