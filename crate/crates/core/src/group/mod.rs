//! Finite groups with dense integer element encodings.
//!
//! Every group in this crate is fully enumerated: its elements are the keys
//! `0..order()`, and the key order is the canonical total order used for class
//! representatives, iteration and deduplication. Subgroups are element sets inside
//! such a parent.

mod abelian;
mod classes;
mod perm;
mod subgroup;

pub use abelian::{abelianization, commutator_subgroup, Abelianization};
pub use classes::{conjugacy_classes, ConjugacyClassTable};
pub use perm::{enumerate_elements, PermGroup, Permutation};
pub use subgroup::{
    are_conjugate_subgroups, left_cosets, left_transversal, small_generating_set, CosetSpace, Subgroup,
};

/// A finite group whose elements are encoded as `0..order()`.
pub trait FiniteGroup {
    fn order(&self) -> usize;

    fn identity(&self) -> usize;

    fn mul(&self, a: usize, b: usize) -> usize;

    fn inv(&self, a: usize) -> usize;

    /// A generating set of the whole group.
    fn generators(&self) -> &[usize];

    /// `g x g⁻¹`
    fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    fn pow(&self, a: usize, k: u64) -> usize {
        let mut result = self.identity();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }
}

/// Least `k ≥ 1` with `x^k = 1`.
pub fn element_order<G: FiniteGroup + ?Sized>(group: &G, x: usize) -> usize {
    let e = group.identity();
    let mut k = 1;
    let mut y = x;
    while y != e {
        y = group.mul(y, x);
        k += 1;
    }
    k
}
