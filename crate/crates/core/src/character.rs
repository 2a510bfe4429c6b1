//! Class functions with exact cyclotomic values, induction, restriction and inner
//! products, plus linear characters of subgroups.
//!
//! The inner product is `(φ, ψ)_G = (1/|G|) Σ_g φ(g)·conj(ψ(g))`: linear in the
//! first argument, conjugate-linear in the second.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{lcm, CyclicSum, Cyclotomic, Rational};
use crate::group::{abelianization, left_transversal, ConjugacyClassTable, FiniteGroup, Subgroup};
use crate::{Error, Result};

/// A function on a subgroup that can be summed exactly. Induction accepts any of
/// these.
pub trait SubgroupFunction {
    fn domain(&self) -> &Subgroup;

    /// Every value lies in `ℚ(ζ_m)` for this `m`.
    fn value_order(&self) -> u32;

    /// Adds the value at `x` (a member of the domain) to `sum`, whose order is a
    /// multiple of [`SubgroupFunction::value_order`].
    fn accumulate(&self, x: usize, sum: &mut CyclicSum);
}

/// A class function on the domain of a conjugacy class table. All values share
/// one cyclotomic order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    table: Arc<ConjugacyClassTable>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.values == other.values
    }
}

impl ClassFunction {
    /// Values are given per class, in table order, and lifted to a common order.
    pub fn new(table: Arc<ConjugacyClassTable>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::Usage(format!(
                "{} values for {} conjugacy classes",
                values.len(),
                table.len()
            )));
        }
        let m = values.iter().fold(1, |m, v| lcm(m, v.order()));
        let values = values.iter().map(|v| v.embed(m)).collect::<Result<_>>()?;
        Ok(ClassFunction { table, values })
    }

    pub fn constant(table: Arc<ConjugacyClassTable>, value: Cyclotomic) -> Self {
        let values = vec![value; table.len()];
        ClassFunction { table, values }
    }

    pub fn zero(table: Arc<ConjugacyClassTable>) -> Self {
        Self::constant(table, Cyclotomic::zero(1))
    }

    pub fn trivial(table: Arc<ConjugacyClassTable>) -> Self {
        Self::constant(table, Cyclotomic::one(1))
    }

    pub fn table(&self) -> &Arc<ConjugacyClassTable> {
        &self.table
    }

    /// Values per class, in table order.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Common cyclotomic order of the values.
    pub fn order(&self) -> u32 {
        self.values.first().map_or(1, Cyclotomic::order)
    }

    /// Value at the identity. The identity has the smallest key, so it is always
    /// the representative of class 0.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn value_at(&self, x: usize) -> Option<&Cyclotomic> {
        self.table.class_of(x).map(|c| &self.values[c])
    }

    pub fn conjugate(&self) -> Self {
        ClassFunction {
            table: self.table.clone(),
            values: self.values.iter().map(Cyclotomic::conjugate).collect(),
        }
    }

    fn same_table(&self, other: &Self) -> Result<()> {
        if self.table == other.table {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}

impl SubgroupFunction for ClassFunction {
    fn domain(&self) -> &Subgroup {
        self.table.domain()
    }

    fn value_order(&self) -> u32 {
        self.order()
    }

    fn accumulate(&self, x: usize, sum: &mut CyclicSum) {
        let v = self.value_at(x).expect("argument lies in the domain");
        sum.add_value(v).expect("sum order is a multiple of the value order");
    }
}

/// A homomorphism `λ: K → μ_m`, stored as exponents `λ(x) = ζ_m^{e(x)}` aligned
/// with the sorted elements of `K`. The order `m` is always the exact order of
/// `λ` in the dual group, so equal characters have equal representations.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCharacter {
    domain: Arc<Subgroup>,
    order: u32,
    exps: Vec<u32>,
}

impl LinearCharacter {
    pub fn trivial(domain: Arc<Subgroup>) -> Self {
        let exps = vec![0; domain.order()];
        LinearCharacter { domain, order: 1, exps }
    }

    /// Checks multiplicativity as `λ(x s) = λ(x) λ(s)` for every `x ∈ K` and every
    /// generator `s` of `K`, which covers all products.
    pub fn from_exponents<G: FiniteGroup + ?Sized>(
        group: &G,
        domain: Arc<Subgroup>,
        order: u32,
        exps: Vec<u32>,
    ) -> Result<Self> {
        if order == 0 || exps.len() != domain.order() {
            return Err(Error::Usage("exponent list does not match the subgroup".into()));
        }
        if exps.iter().any(|&e| e >= order) {
            return Err(Error::Usage(format!("exponents must lie in 0..{order}")));
        }
        let e0 = domain.position(group.identity()).expect("subgroups contain the identity");
        if exps[e0] != 0 {
            return Err(Error::Inconsistent("λ(1) ≠ 1".into()));
        }
        for &s in domain.generators() {
            let es = exps[domain.position(s).expect("generators lie in the subgroup")];
            for (p, &x) in domain.elements().iter().enumerate() {
                let q = domain.position(group.mul(x, s)).expect("subgroups are closed");
                if (exps[p] + es) % order != exps[q] {
                    return Err(Error::Inconsistent("character is not multiplicative".into()));
                }
            }
        }
        Ok(Self::normalized(domain, order, exps))
    }

    fn normalized(domain: Arc<Subgroup>, order: u32, mut exps: Vec<u32>) -> Self {
        let g = exps.iter().fold(order, |g, &e| g.gcd(&e));
        if g > 1 {
            for e in &mut exps {
                *e /= g;
            }
        }
        LinearCharacter { domain, order: order / g, exps }
    }

    pub fn domain_arc(&self) -> &Arc<Subgroup> {
        &self.domain
    }

    /// Order of the character in the dual group; all values lie in `μ_order`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// `e` with `λ(x) = ζ_order^e`.
    pub fn exponent(&self, x: usize) -> Option<u32> {
        self.domain.position(x).map(|p| self.exps[p])
    }

    pub fn value(&self, x: usize) -> Option<Cyclotomic> {
        self.exponent(x).map(|e| Cyclotomic::root_of_unity(self.order, e as i64))
    }

    pub fn conjugate(&self) -> Self {
        let exps = self.exps.iter().map(|&e| (self.order - e) % self.order).collect();
        LinearCharacter { domain: self.domain.clone(), order: self.order, exps }
    }

    pub fn kernel<G: FiniteGroup + ?Sized>(&self, group: &G) -> Result<Subgroup> {
        let elements =
            self.domain.elements().iter().zip(&self.exps).filter(|(_, &e)| e == 0).map(|(&x, _)| x).collect();
        Subgroup::from_elements(group, elements)
    }

    /// The character `t x t⁻¹ ↦ λ(x)` of `t K t⁻¹`.
    pub fn transport<G: FiniteGroup + ?Sized>(&self, group: &G, t: usize) -> Self {
        let domain = Arc::new(self.domain.conjugate(group, t));
        let mut exps = vec![0; self.exps.len()];
        for (p, &x) in self.domain.elements().iter().enumerate() {
            let q = domain.position(group.conj(t, x)).expect("conjugate subgroup");
            exps[q] = self.exps[p];
        }
        LinearCharacter { domain, order: self.order, exps }
    }
}

impl SubgroupFunction for LinearCharacter {
    fn domain(&self) -> &Subgroup {
        &self.domain
    }

    fn value_order(&self) -> u32 {
        self.order
    }

    fn accumulate(&self, x: usize, sum: &mut CyclicSum) {
        let e = self.exponent(x).expect("argument lies in the domain") as u64;
        sum.add_root(e * (sum.order() / self.order) as u64);
    }
}

fn check_inside(k: &Subgroup, table: &ConjugacyClassTable) -> Result<()> {
    if k.is_subgroup_of(table.domain()) {
        Ok(())
    } else {
        Err(Error::NotSubgroup("subgroup is not contained in the class table's group".into()))
    }
}

/// `Ind_K^G φ` evaluated by the transversal formula
/// `Σ_{x ∈ T, x⁻¹gx ∈ K} φ(x⁻¹gx)` over a breadth-first left transversal `T`.
pub fn induce<G, F>(group: &G, table: &Arc<ConjugacyClassTable>, phi: &F) -> Result<ClassFunction>
where
    G: FiniteGroup + ?Sized,
    F: SubgroupFunction + ?Sized,
{
    check_inside(phi.domain(), table)?;
    let transversal = left_transversal(group, table.domain(), phi.domain());
    induce_with_transversal(group, table, phi, &transversal)
}

/// As [`induce`], with a caller-supplied left transversal of `K` in `G`.
pub fn induce_with_transversal<G, F>(
    group: &G,
    table: &Arc<ConjugacyClassTable>,
    phi: &F,
    transversal: &[usize],
) -> Result<ClassFunction>
where
    G: FiniteGroup + ?Sized,
    F: SubgroupFunction + ?Sized,
{
    let k = phi.domain();
    check_inside(k, table)?;
    if transversal.len() != table.group_order() / k.order() {
        return Err(Error::Usage("transversal has the wrong length".into()));
    }
    let pairs: Vec<(usize, usize)> = transversal.iter().map(|&x| (x, group.inv(x))).collect();
    let m = phi.value_order();
    let values = table
        .representatives()
        .iter()
        .map(|&g| {
            let mut sum = CyclicSum::new(m);
            for &(x, xi) in &pairs {
                let y = group.mul(group.mul(xi, g), x);
                if k.contains(y) {
                    phi.accumulate(y, &mut sum);
                }
            }
            sum.finish()
        })
        .collect();
    ClassFunction::new(table.clone(), values)
}

/// The permutation character of `G` on `G/H`, from the counting formula
/// `π(c) = |G|·|c ∩ H| / (|c|·|H|)`, cross-checked against `Ind_H^G 1`.
pub fn permutation_character<G: FiniteGroup + ?Sized>(
    group: &G,
    table: &Arc<ConjugacyClassTable>,
    h: &Arc<Subgroup>,
) -> Result<ClassFunction> {
    check_inside(h, table)?;
    let mut meets = vec![0usize; table.len()];
    for &x in h.elements() {
        meets[table.class_of(x).expect("H lies in the group")] += 1;
    }
    let g_order = table.group_order();
    let values = meets
        .iter()
        .zip(table.sizes())
        .map(|(&m, &size)| {
            let num = g_order * m;
            let den = size * h.order();
            if !num.is_multiple_of(den) {
                return Err(Error::Inconsistent("fixed-point count is not an integer".into()));
            }
            Ok(Cyclotomic::from_integer(1, (num / den) as i64))
        })
        .collect::<Result<Vec<_>>>()?;
    let counted = ClassFunction::new(table.clone(), values)?;
    let induced = induce(group, table, &LinearCharacter::trivial(h.clone()))?;
    if counted != induced {
        return Err(Error::Inconsistent(
            "permutation character disagrees with the induced trivial character".into(),
        ));
    }
    Ok(counted)
}

/// Restriction of `phi` to the domain of `sub_table`.
pub fn restrict(phi: &ClassFunction, sub_table: &Arc<ConjugacyClassTable>) -> Result<ClassFunction> {
    check_inside(sub_table.domain(), phi.table())?;
    let values = sub_table
        .representatives()
        .iter()
        .map(|&x| phi.value_at(x).expect("checked containment").clone())
        .collect();
    ClassFunction::new(sub_table.clone(), values)
}

pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic> {
    phi.same_table(psi)?;
    let m = lcm(phi.order(), psi.order());
    let mut total = Cyclotomic::zero(m);
    for ((a, b), &size) in phi.values.iter().zip(&psi.values).zip(phi.table.sizes()) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = a.embed(m)?.try_mul(&b.conjugate().embed(m)?)?;
        total = total.try_add(&term.scale(&Rational::from_integer(BigInt::from(size))))?;
    }
    Ok(total.scale(&Rational::new(BigInt::from(1), BigInt::from(phi.table.group_order()))))
}

/// `(λ, Θ|_K)_K = (1/|K|) Σ_{h ∈ K} λ(h)·conj(Θ(h))`, summed directly over `K`.
///
/// The elements of `K` are grouped by their class in `Θ`'s table, so each class
/// costs one root-of-unity tally and a single exact product.
pub fn frobenius_inner_product(chi: &LinearCharacter, theta: &ClassFunction) -> Result<Cyclotomic> {
    let k = chi.domain();
    check_inside(k, theta.table())?;
    let mut tallies: Vec<Option<CyclicSum>> = vec![None; theta.table().len()];
    for (&x, &e) in k.elements().iter().zip(&chi.exps) {
        let c = theta.table().class_of(x).expect("checked containment");
        tallies[c].get_or_insert_with(|| CyclicSum::new(chi.order)).add_root(e as u64);
    }
    let m = lcm(chi.order, theta.order());
    let mut total = Cyclotomic::zero(m);
    for (tally, value) in tallies.into_iter().zip(&theta.values) {
        let Some(tally) = tally else { continue };
        if value.is_zero() {
            continue;
        }
        let term = tally.finish().embed(m)?.try_mul(&value.conjugate().embed(m)?)?;
        total = total.try_add(&term)?;
    }
    Ok(total.scale(&Rational::new(BigInt::from(1), BigInt::from(k.order()))))
}

/// Equality of class functions, i.e. isomorphism of the underlying
/// representations when both are characters.
pub fn char_equal(phi: &ClassFunction, psi: &ClassFunction) -> Result<bool> {
    phi.same_table(psi)?;
    Ok(phi.values == psi.values)
}

pub fn direct_sum(parts: &[&ClassFunction]) -> Result<ClassFunction> {
    let (first, rest) = parts.split_first().ok_or(Error::Usage("empty direct sum".into()))?;
    for p in rest {
        first.same_table(p)?;
    }
    let m = parts.iter().fold(1, |m, p| lcm(m, p.order()));
    let mut values = Vec::with_capacity(first.values.len());
    for c in 0..first.values.len() {
        let mut v = Cyclotomic::zero(m);
        for p in parts {
            v = v.try_add(&p.values[c].embed(m)?)?;
        }
        values.push(v);
    }
    ClassFunction::new(first.table.clone(), values)
}

/// All linear characters of `domain`, read off its abelianization
/// `ℤ/d_1 × … × ℤ/d_r`: a tuple `(a_i)` with `a_i mod d_i` sends the `i`-th
/// generator to `ζ_{d_i}^{a_i}`. With `order_filter = Some(d)` only characters of
/// order exactly `d` are kept. Tuples are enumerated lexicographically.
pub fn linear_characters<G: FiniteGroup + ?Sized>(
    group: &G,
    domain: Arc<Subgroup>,
    order_filter: Option<u32>,
) -> Result<Vec<LinearCharacter>> {
    let ab = abelianization(group, &domain);
    let d: Vec<u32> = ab.invariants().iter().map(|&x| x as u32).collect();
    let m = ab.exponent() as u32;
    let coords: Vec<&[u32]> =
        domain.elements().iter().map(|&x| ab.project(x).expect("abelianization covers the domain")).collect();
    let mut out = Vec::new();
    let mut a = vec![0u32; d.len()];
    loop {
        let char_order = a.iter().zip(&d).fold(1, |o, (&ai, &di)| lcm(o, di / ai.gcd(&di)));
        if order_filter.is_none_or(|f| f == char_order) {
            let exps = coords
                .iter()
                .map(|c| {
                    let e: u64 = c
                        .iter()
                        .zip(&a)
                        .zip(&d)
                        .map(|((&ci, &ai), &di)| ci as u64 * ai as u64 * (m / di) as u64)
                        .sum();
                    (e % m as u64) as u32
                })
                .collect();
            let chi = LinearCharacter::normalized(domain.clone(), m, exps);
            debug_assert_eq!(chi.order(), char_order);
            out.push(chi);
        }
        // odometer over the tuple, last coordinate fastest
        let mut i = d.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            a[i] += 1;
            if a[i] < d[i] {
                break;
            }
            a[i] = 0;
        }
    }
}

/// Whether every value of `phi` is zero.
pub fn is_zero_function(phi: &ClassFunction) -> bool {
    phi.values.iter().all(|v| v.coeffs().iter().all(Zero::is_zero))
}
