use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// A subgroup of an enumerated group, stored as its sorted element keys.
///
/// Membership is a constant-time lookup in a parent-sized position table.
/// Equality is element-set equality; the generator list is informational.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
    position: Vec<u32>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn empty(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            elements: Vec::new(),
            position: vec![ABSENT; parent_order],
            generators: Vec::new(),
        }
    }

    fn push(&mut self, x: usize) {
        self.position[x] = self.elements.len() as u32;
        self.elements.push(x);
    }

    pub fn trivial<G: FiniteGroup + ?Sized>(group: &G) -> Self {
        let mut s = Self::empty(group.order());
        s.push(group.identity());
        s
    }

    /// The whole group, with the group's own generators.
    pub fn whole<G: FiniteGroup + ?Sized>(group: &G) -> Self {
        let n = group.order();
        Subgroup {
            parent_order: n,
            elements: (0..n).collect(),
            position: (0..n as u32).collect(),
            generators: group.generators().to_vec(),
        }
    }

    pub fn generated<G: FiniteGroup + ?Sized>(group: &G, generators: &[usize]) -> Self {
        Self::generated_capped(group, generators, usize::MAX).expect("no cap")
    }

    pub fn generated_capped<G: FiniteGroup + ?Sized>(
        group: &G,
        generators: &[usize],
        cap: usize,
    ) -> Result<Self> {
        let mut s = Self::trivial(group);
        for &t in generators {
            if !s.contains(t) {
                s.extend(group, t, cap)?;
            }
        }
        s.finish();
        Ok(s)
    }

    /// Validates that `elements` form a subgroup and finds a generating set for it.
    pub fn from_elements<G: FiniteGroup + ?Sized>(group: &G, mut elements: Vec<usize>) -> Result<Self> {
        let n = group.order();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&x| x >= n) {
            return Err(Error::NotSubgroup(format!("element key {bad} outside a group of order {n}")));
        }
        let mut s = Self::trivial(group);
        for &x in &elements {
            if !s.contains(x) {
                // growing past the candidate set means it is not closed
                s.extend(group, x, elements.len())
                    .map_err(|_| Error::NotSubgroup("element set is not closed".into()))?;
            }
        }
        s.finish();
        if s.elements != elements {
            return Err(Error::NotSubgroup("element set is not closed".into()));
        }
        Ok(s)
    }

    pub fn from_predicate<G: FiniteGroup + ?Sized>(group: &G, pred: impl Fn(usize) -> bool) -> Result<Self> {
        Self::from_elements(group, (0..group.order()).filter(|&x| pred(x)).collect())
    }

    /// `⟨self, t⟩`, in place.
    pub(crate) fn adjoin<G: FiniteGroup + ?Sized>(&mut self, group: &G, t: usize) {
        if !self.contains(t) {
            self.extend(group, t, usize::MAX).expect("no cap");
            self.finish();
        }
    }

    /// Adds `t` (not yet a member) and closes, enumerating right cosets of the
    /// current subgroup.
    fn extend<G: FiniteGroup + ?Sized>(&mut self, group: &G, t: usize, cap: usize) -> Result<()> {
        let base = self.elements.clone();
        self.generators.push(t);
        let mut reps = vec![group.identity()];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for gi in 0..self.generators.len() {
                let y = group.mul(r, self.generators[gi]);
                if !self.contains(y) {
                    if self.elements.len() + base.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    for &h in &base {
                        self.push(group.mul(h, y));
                    }
                    reps.push(y);
                }
            }
        }
        Ok(())
    }

    fn finish(&mut self) {
        self.elements.sort_unstable();
        for (i, &x) in self.elements.iter().enumerate() {
            self.position[x] = i as u32;
        }
        assert_eq!(self.parent_order % self.elements.len(), 0, "subgroup order must divide the group order");
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// `[G : K]` in the parent group.
    pub fn index(&self) -> usize {
        self.parent_order / self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position.get(x).is_some_and(|&p| p != ABSENT)
    }

    /// Position of `x` in [`Subgroup::elements`].
    pub fn position(&self, x: usize) -> Option<usize> {
        self.position.get(x).filter(|&&p| p != ABSENT).map(|&p| p as usize)
    }

    /// Sorted element keys.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent_order == other.parent_order && self.elements.iter().all(|&x| other.contains(x))
    }

    /// `t K t⁻¹`
    pub fn conjugate<G: FiniteGroup + ?Sized>(&self, group: &G, t: usize) -> Subgroup {
        let mut s = Self::empty(self.parent_order);
        for &x in &self.elements {
            s.push(group.conj(t, x));
        }
        s.generators = self.generators.iter().map(|&x| group.conj(t, x)).collect();
        s.finish();
        s
    }

    /// Whether `self` is normalized by every generator of `within`.
    pub fn is_normal_in<G: FiniteGroup + ?Sized>(&self, group: &G, within: &Subgroup) -> bool {
        within.generators.iter().all(|&s| {
            let si = group.inv(s);
            self.generators.iter().all(|&x| self.contains(group.mul(group.mul(s, x), si)))
        })
    }
}

/// The coset space `G/H` of left cosets, with `X_1 = 1`.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    representatives: Vec<usize>,
    label: Vec<u32>,
    subgroup_order: usize,
}

impl CosetSpace {
    /// Number of cosets `n = [G : H]`.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    /// Index of the coset `gH`.
    pub fn coset_of(&self, g: usize) -> usize {
        self.label[g] as usize
    }

    /// Index `j` with `g X_i ∈ X_j H`.
    pub fn act<G: FiniteGroup + ?Sized>(&self, group: &G, g: usize, i: usize) -> usize {
        self.coset_of(group.mul(g, self.representatives[i]))
    }
}

/// Left cosets of `h` in `group`. Representatives are the key-minimal elements of
/// their cosets, except that the first one is always the identity.
pub fn left_cosets<G: FiniteGroup + ?Sized>(group: &G, h: &Subgroup) -> Result<CosetSpace> {
    let n = group.order();
    if h.parent_order() != n {
        return Err(Error::NotSubgroup(format!(
            "subgroup lives in a group of order {}, not {n}",
            h.parent_order()
        )));
    }
    let mut label = vec![ABSENT; n];
    let mut representatives = Vec::with_capacity(h.index());
    let e = group.identity();
    let starts = core::iter::once(e).chain((0..n).filter(|&x| x != e));
    for x in starts {
        if label[x] != ABSENT {
            continue;
        }
        let c = representatives.len() as u32;
        representatives.push(x);
        for &k in h.elements() {
            label[group.mul(x, k)] = c;
        }
    }
    Ok(CosetSpace { representatives, label, subgroup_order: h.order() })
}

/// A left transversal of `sub` inside `within`, found by breadth-first search over
/// cosets under left multiplication by the generators of `within`. Only the
/// membership predicate of `sub` is used; the identity comes first.
pub fn left_transversal<G: FiniteGroup + ?Sized>(group: &G, within: &Subgroup, sub: &Subgroup) -> Vec<usize> {
    let target = within.order() / sub.order();
    let mut reps = vec![group.identity()];
    let mut inverses = vec![group.identity()];
    let mut i = 0;
    while i < reps.len() && reps.len() < target {
        let r = reps[i];
        i += 1;
        for &s in within.generators() {
            let c = group.mul(s, r);
            if !inverses.iter().any(|&ri| sub.contains(group.mul(ri, c))) {
                reps.push(c);
                inverses.push(group.inv(c));
            }
        }
    }
    reps
}

/// Searches `group` for `g` with `g A g⁻¹ = B`, returning the key-minimal witness.
pub fn are_conjugate_subgroups<G: FiniteGroup + ?Sized>(
    group: &G,
    a: &Subgroup,
    b: &Subgroup,
) -> Option<usize> {
    if a.order() != b.order() || a.parent_order() != b.parent_order() {
        return None;
    }
    // gAg⁻¹ ⊆ B follows from the generators, and equality from |A| = |B|.
    let gens: Vec<usize> = if a.generators().is_empty() && a.order() > 1 {
        a.elements().to_vec()
    } else {
        a.generators().to_vec()
    };
    (0..group.order()).find(|&g| gens.iter().all(|&x| b.contains(group.conj(g, x))))
}

/// Size of `⟨S, t⟩` for a closed `s`, using `scratch` as a membership table.
fn extended_order<G: FiniteGroup + ?Sized>(group: &G, s: &Subgroup, t: usize, scratch: &mut [bool]) -> usize {
    let mut touched: Vec<usize> = s.elements().to_vec();
    for &x in &touched {
        scratch[x] = true;
    }
    let mut reps = vec![group.identity()];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        i += 1;
        for &gen in s.generators().iter().chain(core::iter::once(&t)) {
            let y = group.mul(r, gen);
            if !scratch[y] {
                for &h in s.elements() {
                    let z = group.mul(h, y);
                    scratch[z] = true;
                    touched.push(z);
                }
                reps.push(y);
            }
        }
    }
    let size = touched.len();
    for x in touched {
        scratch[x] = false;
    }
    size
}

/// Greedy generating set of `k`: repeatedly adds the element that makes the
/// generated subgroup largest (ties go to the smaller key).
pub fn small_generating_set<G: FiniteGroup + ?Sized>(
    group: &G,
    k: &Subgroup,
    budget: usize,
) -> Result<Vec<usize>> {
    let mut current = Subgroup::trivial(group);
    let mut scratch = vec![false; group.order()];
    while current.order() < k.order() {
        if current.generators().len() >= budget {
            return Err(Error::BudgetInsufficient { budget });
        }
        let mut best: Option<(usize, usize)> = None;
        for &x in k.elements() {
            if current.contains(x) {
                continue;
            }
            let size = extended_order(group, &current, x, &mut scratch);
            if best.is_none_or(|(b, _)| size > b) {
                best = Some((size, x));
                if size == k.order() {
                    break;
                }
            }
        }
        let (_, x) = best.expect("a proper subgroup misses some element");
        current.extend(group, x, usize::MAX)?;
        current.finish();
    }
    Ok(current.generators().to_vec())
}
