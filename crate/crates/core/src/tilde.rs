//! The groups `G̃ = C_l^n ⋊ G` and `H̃ = C_l^n ⋊ H`.
//!
//! `G` permutes the `n` copies of `C_l` the way it permutes the left cosets
//! `X_1 H, …, X_n H`. Elements are pairs `(v, g)` with `v ∈ (ℤ/l)^n`, multiplied by
//!
//! ```text
//! (v, g) · (w, h) = (v + g·w, gh),   (g·w)_i = w_{σ_g⁻¹(i)}
//! ```
//!
//! where `σ_g(i) = j` iff `g X_i ∈ X_j H`. With this convention the projection
//! `χ(v, h) = ζ_l^{v_1}` is multiplicative on `H̃` exactly because every `h ∈ H`
//! fixes the first coset: `χ((v,h)(w,h')) = ζ^{v_1 + w_{σ_h⁻¹(1)}} = ζ^{v_1 + w_1}`.
//!
//! Elements are encoded structurally as `value(v) · |G| + key(g)`, where `value`
//! reads `v` as base-`l` digits with `v_1` least significant.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::character::LinearCharacter;
use crate::group::{left_cosets, CosetSpace, FiniteGroup, PermGroup, Subgroup};
use crate::{Error, Result};

const MAX_COPIES: usize = 64;

pub fn is_odd_prime(l: u32) -> bool {
    l >= 3 && l % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= l).all(|d| !l.is_multiple_of(d))
}

/// `g ↦ σ_g`, the permutation action of `G` on `G/H`.
#[derive(Clone, Debug)]
pub struct CosetActionMap {
    cosets: CosetSpace,
    sigma: Vec<Vec<u32>>,
}

impl CosetActionMap {
    /// Number of cosets.
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    /// `σ_g` as an image list on `0..n` (coset 0 is `H` itself).
    pub fn sigma(&self, g: usize) -> &[u32] {
        &self.sigma[g]
    }
}

pub fn coset_action<G: FiniteGroup + ?Sized>(group: &G, h: &Subgroup) -> Result<CosetActionMap> {
    let cosets = left_cosets(group, h)?;
    let n = cosets.len();
    let sigma: Vec<Vec<u32>> =
        (0..group.order()).map(|g| (0..n).map(|i| cosets.act(group, g, i) as u32).collect()).collect();
    let gens = group.generators();
    for &s in gens {
        for &t in gens {
            let st = group.mul(s, t);
            let composed: Vec<u32> = sigma[t].iter().map(|&i| sigma[s][i as usize]).collect();
            if composed != sigma[st] {
                return Err(Error::Inconsistent("coset action is not a homomorphism".into()));
            }
        }
    }
    if let Some(&bad) = h.generators().iter().find(|&&x| sigma[x][0] != 0) {
        return Err(Error::Inconsistent(format!("element {bad} of H moves the first coset")));
    }
    Ok(CosetActionMap { cosets, sigma })
}

/// Structural form of an element of `G̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeElement {
    /// `v_i` encodes the `i`-th coordinate `ζ_l^{v_i}`.
    pub exps: Vec<u32>,
    pub base: usize,
}

#[derive(Clone, Debug)]
pub struct TildeGroup {
    l: u32,
    n: usize,
    base: PermGroup,
    h: Subgroup,
    action: CosetActionMap,
    translations: usize,
    order: usize,
    generators: Vec<usize>,
}

impl TildeGroup {
    pub fn new(base: PermGroup, h: &Subgroup, l: u32, cap: usize) -> Result<Self> {
        if !is_odd_prime(l) {
            return Err(Error::InvalidPrime(l));
        }
        if h.parent_order() != base.order() {
            return Err(Error::NotSubgroup("H does not live in G".into()));
        }
        let action = coset_action(&base, h)?;
        let n = action.degree();
        if n > MAX_COPIES {
            return Err(Error::CapExceeded { cap });
        }
        let translations = (l as usize).checked_pow(n as u32).ok_or(Error::CapExceeded { cap })?;
        let order = translations.checked_mul(base.order()).ok_or(Error::CapExceeded { cap })?;
        if order > cap {
            return Err(Error::CapExceeded { cap });
        }
        let mut t =
            TildeGroup { l, n, base, h: h.clone(), action, translations, order, generators: Vec::new() };
        let mut gens = Vec::new();
        gens.push(t.translation(0));
        gens.extend(t.base.generators().iter().map(|&g| t.base_element(g)));
        t.generators = gens;
        Ok(t)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Number of copies of `C_l`, i.e. `[G : H]`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    /// The subgroup `H ≤ G` the construction was built from.
    pub fn base_subgroup(&self) -> &Subgroup {
        &self.h
    }

    pub fn action(&self) -> &CosetActionMap {
        &self.action
    }

    fn digits(&self, mut value: usize, out: &mut [u32; MAX_COPIES]) {
        let l = self.l as usize;
        for d in out.iter_mut().take(self.n) {
            *d = (value % l) as u32;
            value /= l;
        }
    }

    fn value(&self, digits: &[u32; MAX_COPIES]) -> usize {
        let l = self.l as usize;
        digits[..self.n].iter().rev().fold(0, |acc, &d| acc * l + d as usize)
    }

    pub fn encode(&self, x: &TildeElement) -> usize {
        assert_eq!(x.exps.len(), self.n);
        let mut d = [0u32; MAX_COPIES];
        for (slot, &e) in d.iter_mut().zip(&x.exps) {
            *slot = e % self.l;
        }
        self.value(&d) * self.base.order() + x.base
    }

    pub fn decode(&self, key: usize) -> TildeElement {
        let mut d = [0u32; MAX_COPIES];
        self.digits(key / self.base.order(), &mut d);
        TildeElement { exps: d[..self.n].to_vec(), base: key % self.base.order() }
    }

    /// `(e_i, 1)`
    pub fn translation(&self, i: usize) -> usize {
        (self.l as usize).pow(i as u32) * self.base.order()
    }

    /// `(0, g)`
    pub fn base_element(&self, g: usize) -> usize {
        g
    }

    /// The projection `G̃ → G`.
    pub fn project(&self, key: usize) -> usize {
        key % self.base.order()
    }

    /// Exponent of the first coordinate, so that `χ(x) = ζ_l^{first_exponent(x)}`.
    pub fn first_exponent(&self, key: usize) -> u32 {
        ((key / self.base.order()) % self.l as usize) as u32
    }

    /// Order of the translation subgroup `C_l^n`.
    pub fn translation_count(&self) -> usize {
        self.translations
    }

    /// `K̃ = {(v, k) : k ∈ K}` for `K ≤ G`.
    pub fn lift_subgroup(&self, k: &Subgroup) -> Result<Subgroup> {
        if k.parent_order() != self.base.order() {
            return Err(Error::NotSubgroup("subgroup does not live in G".into()));
        }
        // base generators first: conjugacy searches reject on them soonest
        let mut gens: Vec<usize> = k.generators().iter().map(|&g| self.base_element(g)).collect();
        gens.extend((0..self.n).map(|i| self.translation(i)));
        let lifted = Subgroup::generated(self, &gens);
        if lifted.order() != self.translations * k.order()
            || lifted.elements().iter().any(|&x| !k.contains(self.project(x)))
        {
            return Err(Error::Inconsistent("lifted subgroup is not C_l^n ⋊ K".into()));
        }
        Ok(lifted)
    }

    /// `H̃`, the lift of the defining subgroup.
    pub fn h_tilde(&self) -> Subgroup {
        self.lift_subgroup(&self.h).expect("H lives in G")
    }

    /// The first-coordinate character `χ(v, h) = ζ_l^{v_1}` of `H̃`.
    pub fn chi(&self, h_tilde: &Arc<Subgroup>) -> Result<LinearCharacter> {
        if **h_tilde != self.h_tilde() {
            return Err(Error::Usage("χ is only a homomorphism on the distinguished subgroup H̃".into()));
        }
        let exps = h_tilde.elements().iter().map(|&x| self.first_exponent(x)).collect();
        let chi = LinearCharacter::from_exponents(self, h_tilde.clone(), self.l, exps)?;
        if chi.is_trivial() {
            return Err(Error::Inconsistent("χ is trivial".into()));
        }
        Ok(chi)
    }

    /// `U = ker χ = {(v, h) ∈ H̃ : v_1 = 0}`.
    pub fn chi_kernel(&self) -> Subgroup {
        let mut gens: Vec<usize> = (1..self.n).map(|i| self.translation(i)).collect();
        gens.extend(self.h.generators().iter().map(|&g| self.base_element(g)));
        let u = Subgroup::generated(self, &gens);
        debug_assert_eq!(u.order() * self.l as usize, self.translations * self.h.order());
        debug_assert!(u.elements().iter().all(|&x| self.first_exponent(x) == 0));
        u
    }
}

impl FiniteGroup for TildeGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.base.order();
        let (ga, gb) = (a % m, b % m);
        let mut v = [0u32; MAX_COPIES];
        let mut w = [0u32; MAX_COPIES];
        self.digits(a / m, &mut v);
        self.digits(b / m, &mut w);
        let sigma = self.action.sigma(ga);
        for j in 0..self.n {
            let i = sigma[j] as usize;
            v[i] = (v[i] + w[j]) % self.l;
        }
        self.value(&v) * m + self.base.mul(ga, gb)
    }

    fn inv(&self, a: usize) -> usize {
        let m = self.base.order();
        let g_inv = self.base.inv(a % m);
        let mut v = [0u32; MAX_COPIES];
        let mut r = [0u32; MAX_COPIES];
        self.digits(a / m, &mut v);
        let sigma = self.action.sigma(g_inv);
        for j in 0..self.n {
            r[sigma[j] as usize] = (self.l - v[j]) % self.l;
        }
        self.value(&r) * m + g_inv
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// Builds `G̃` and `H̃` from `(G, H, l)`.
pub fn tilde_build(base: PermGroup, h: &Subgroup, l: u32, cap: usize) -> Result<(TildeGroup, Subgroup)> {
    let t = TildeGroup::new(base, h, l, cap)?;
    let h_tilde = t.h_tilde();
    Ok((t, h_tilde))
}
