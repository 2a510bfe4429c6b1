//! Theorem oracles over the tilde construction. Each returns a report with one
//! record per checked case; the outcome is a pass exactly when every case passes.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::character::{
    char_equal, direct_sum, frobenius_inner_product, induce, inner_product, linear_characters,
    permutation_character, ClassFunction, LinearCharacter,
};
use crate::cyclotomic::Cyclotomic;
use crate::gassmann::is_gassmann_triple;
use crate::group::{
    are_conjugate_subgroups, conjugacy_classes, small_generating_set, ConjugacyClassTable, FiniteGroup,
    PermGroup, Subgroup,
};
use crate::tilde::TildeGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Detail {
    Bool(bool),
    Integer(i64),
    Text(String),
    Value(Cyclotomic),
    Values(Vec<Cyclotomic>),
    Integers(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseRecord {
    pub id: String,
    pub passed: bool,
    pub fields: Vec<(&'static str, Detail)>,
}

impl CaseRecord {
    fn new(id: impl Into<String>, passed: bool) -> Self {
        CaseRecord { id: id.into(), passed, fields: Vec::new() }
    }

    fn with(mut self, key: &'static str, value: Detail) -> Self {
        self.fields.push((key, value));
        self
    }

    pub fn field(&self, key: &str) -> Option<&Detail> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub instance: String,
    pub outcome: Outcome,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    fn new(theorem: &'static str, instance: String, cases: Vec<CaseRecord>) -> Self {
        let outcome = if cases.iter().all(|c| c.passed) { Outcome::Pass } else { Outcome::Fail };
        VerificationReport { theorem, instance, outcome, cases }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(1, n)
}

fn degree_of(phi: &ClassFunction) -> i64 {
    phi.degree().to_integer().and_then(|d| i64::try_from(d).ok()).expect("character degrees are integers")
}

/// `G̃`, its class table, `H̃` and `χ`, shared by every oracle.
pub struct TildeSetup {
    pub tilde: TildeGroup,
    pub classes: Arc<ConjugacyClassTable>,
    pub h_tilde: Arc<Subgroup>,
    pub chi: LinearCharacter,
}

impl TildeSetup {
    pub fn new(base: &PermGroup, h: &Subgroup, l: u32, cap: usize) -> Result<Self> {
        let tilde = TildeGroup::new(base.clone(), h, l, cap)?;
        let h_tilde = Arc::new(tilde.h_tilde());
        let chi = tilde.chi(&h_tilde)?;
        let classes = Arc::new(conjugacy_classes(&tilde, Arc::new(Subgroup::whole(&tilde))));
        Ok(TildeSetup { tilde, classes, h_tilde, chi })
    }

    fn describe(&self) -> String {
        format!(
            "|G| = {}, [G : H] = {}, l = {}, |G̃| = {}",
            self.tilde.base().order(),
            self.tilde.n(),
            self.tilde.l(),
            self.tilde.order()
        )
    }
}

/// `Ind_{H̃}^{G̃} χ` is irreducible: its norm is 1 both as a sum over `G̃` and,
/// through Frobenius reciprocity, as a sum over `H̃`.
pub fn verify_irreducibility(
    base: &PermGroup,
    h: &Subgroup,
    l: u32,
    cap: usize,
) -> Result<VerificationReport> {
    let s = TildeSetup::new(base, h, l, cap)?;
    let ind = induce(&s.tilde, &s.classes, &s.chi)?;
    let g_side = inner_product(&ind, &ind)?;
    let h_side = frobenius_inner_product(&s.chi, &ind)?;
    let cases = vec![
        CaseRecord::new("degree", degree_of(&ind) == s.tilde.n() as i64)
            .with("degree", Detail::Integer(degree_of(&ind)))
            .with("index", Detail::Integer(s.tilde.n() as i64)),
        CaseRecord::new("norm-over-G~", g_side == int(1)).with("value", Detail::Value(g_side.clone())),
        CaseRecord::new("norm-over-H~", h_side == int(1)).with("value", Detail::Value(h_side.clone())),
        CaseRecord::new("reciprocity", g_side == h_side),
    ];
    Ok(VerificationReport::new("irreducibility", s.describe(), cases))
}

/// `Ind_U 1 = Ind_{H̃} 1 ⊕ Ind_{H̃} χ ⊕ Ind_{H̃} χ̄` for `U = ker χ`, with a negative
/// control that replaces `χ̄` by the trivial character.
pub fn verify_decomposition(
    base: &PermGroup,
    h: &Subgroup,
    l: u32,
    cap: usize,
) -> Result<VerificationReport> {
    if l != 3 {
        return Err(Error::Usage(format!("the decomposition is stated for l = 3, got {l}")));
    }
    let s = TildeSetup::new(base, h, l, cap)?;
    let u = Arc::new(s.tilde.chi_kernel());
    let ind_u = induce(&s.tilde, &s.classes, &LinearCharacter::trivial(u.clone()))?;
    let ind_one = induce(&s.tilde, &s.classes, &LinearCharacter::trivial(s.h_tilde.clone()))?;
    let ind_chi = induce(&s.tilde, &s.classes, &s.chi)?;
    let ind_bar = induce(&s.tilde, &s.classes, &s.chi.conjugate())?;
    let sum = direct_sum(&[&ind_one, &ind_chi, &ind_bar])?;
    let mismatched = ind_u.values().iter().zip(sum.values()).filter(|(a, b)| a != b).count();
    let control = direct_sum(&[&ind_one, &ind_chi, &ind_one])?;
    let parts = [degree_of(&ind_one), degree_of(&ind_chi), degree_of(&ind_bar)];
    let cases = vec![
        CaseRecord::new("kernel-index", s.h_tilde.order() == 3 * u.order())
            .with("index", Detail::Integer((s.h_tilde.order() / u.order()) as i64)),
        CaseRecord::new("degrees", degree_of(&ind_u) == parts.iter().sum::<i64>())
            .with("total", Detail::Integer(degree_of(&ind_u)))
            .with("parts", Detail::Integers(parts.to_vec())),
        CaseRecord::new("pointwise", char_equal(&ind_u, &sum)?)
            .with("classes", Detail::Integer(s.classes.len() as i64))
            .with("mismatched-classes", Detail::Integer(mismatched as i64)),
        CaseRecord::new("negative-control", !char_equal(&ind_u, &control)?),
        CaseRecord::new("conjugates-differ", !char_equal(&ind_chi, &ind_bar)?),
    ];
    Ok(VerificationReport::new("decomposition", s.describe(), cases))
}

const MAX_LOW_INDEX: usize = 5;
const MAX_LOW_INDEX_GENERATORS: usize = 3;

type SmallPerm = [u8; MAX_LOW_INDEX];

fn small_identity() -> SmallPerm {
    core::array::from_fn(|i| i as u8)
}

/// `a ∘ b`, applying `b` first.
fn small_compose(a: &SmallPerm, b: &SmallPerm, n: usize) -> SmallPerm {
    let mut out = small_identity();
    for i in 0..n {
        out[i] = a[b[i] as usize];
    }
    out
}

fn all_small_perms(n: usize) -> Vec<SmallPerm> {
    let mut out = Vec::new();
    let mut current = small_identity();
    fn rec(
        pos: usize,
        n: usize,
        used: &mut [bool; MAX_LOW_INDEX],
        current: &mut SmallPerm,
        out: &mut Vec<SmallPerm>,
    ) {
        if pos == n {
            out.push(*current);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current[pos] = v as u8;
                rec(pos + 1, n, used, current, out);
                used[v] = false;
            }
        }
    }
    rec(0, n, &mut [false; MAX_LOW_INDEX], &mut current, &mut out);
    out
}

/// All subgroups of index exactly `n`, sorted by element set.
///
/// Index-`n` subgroups correspond to transitive actions on `n` points with a
/// marked point. Every assignment of the generators to `S_n` is extended over the
/// whole group breadth first; it is a homomorphism iff no element receives two
/// different images. Transitive ones contribute the stabilizer of point 0.
pub fn low_index_subgroups<G: FiniteGroup + ?Sized>(group: &G, n: usize) -> Result<Vec<Subgroup>> {
    if n == 0 || n > MAX_LOW_INDEX {
        return Err(Error::Usage(format!("index must lie in 1..={MAX_LOW_INDEX}, got {n}")));
    }
    if !group.order().is_multiple_of(n) {
        return Ok(Vec::new());
    }
    let gens = small_generating_set(group, &Subgroup::whole(group), MAX_LOW_INDEX_GENERATORS)?;
    let perms = all_small_perms(n);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut images: Vec<Option<SmallPerm>> = vec![None; group.order()];
    let mut order: Vec<usize> = Vec::with_capacity(group.order());
    let mut choice = vec![0usize; gens.len()];
    'tuples: loop {
        let assigned: Vec<&SmallPerm> = choice.iter().map(|&c| &perms[c]).collect();
        for slot in images.iter_mut() {
            *slot = None;
        }
        order.clear();
        let e = group.identity();
        images[e] = Some(small_identity());
        order.push(e);
        let mut i = 0;
        let mut consistent = true;
        'bfs: while i < order.len() {
            let x = order[i];
            i += 1;
            let px = images[x].expect("visited");
            for (&s, ps) in gens.iter().zip(&assigned) {
                let y = group.mul(x, s);
                let py = small_compose(&px, ps, n);
                match images[y] {
                    None => {
                        images[y] = Some(py);
                        order.push(y);
                    }
                    Some(q) if q == py => {}
                    Some(_) => {
                        consistent = false;
                        break 'bfs;
                    }
                }
            }
        }
        if consistent && is_transitive(&assigned, n) {
            let mut stab: Vec<usize> =
                order.iter().copied().filter(|&x| images[x].expect("visited")[0] == 0).collect();
            stab.sort_unstable();
            found.insert(stab);
        }
        // next tuple
        let mut k = choice.len();
        loop {
            if k == 0 {
                break 'tuples;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < perms.len() {
                break;
            }
            choice[k] = 0;
        }
    }
    found.into_iter().map(|elements| Subgroup::from_elements(group, elements)).collect()
}

fn is_transitive(gens: &[&SmallPerm], n: usize) -> bool {
    let mut seen = [false; MAX_LOW_INDEX];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g[p] as usize;
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen[..n].iter().all(|&s| s)
}

/// For every subgroup `H̃′` of index `[G̃ : H̃]` and every linear character `χ′` of
/// it, `Ind χ′ = Ind χ` forces `H̃′` to be conjugate to `H̃`.
///
/// Only index `[G̃ : H̃]` needs searching: `Ind χ′` has degree `[G̃ : H̃′]`, and
/// equal characters have equal degrees.
pub fn verify_theorem_group_exhaustive(
    base: &PermGroup,
    h: &Subgroup,
    l: u32,
    cap: usize,
) -> Result<VerificationReport> {
    let s = TildeSetup::new(base, h, l, cap)?;
    let g = &s.tilde;
    let n = s.tilde.n();
    let target = induce(g, &s.classes, &s.chi)?;
    let subgroups = low_index_subgroups(g, n)?;
    let mut cases = Vec::new();
    let mut hits = 0i64;
    let mut characters = 0i64;
    for (i, k) in subgroups.iter().enumerate() {
        let k = Arc::new(k.clone());
        let conjugate = are_conjugate_subgroups(g, &k, &s.h_tilde).is_some();
        for (j, chi2) in linear_characters(g, k.clone(), None)?.iter().enumerate() {
            characters += 1;
            let hit = char_equal(&induce(g, &s.classes, chi2)?, &target)?;
            if hit {
                hits += 1;
            }
            cases.push(
                CaseRecord::new(format!("subgroup-{i}/character-{j}"), !hit || conjugate)
                    .with("character-order", Detail::Integer(chi2.order() as i64))
                    .with("induced-equal", Detail::Bool(hit))
                    .with("conjugate", Detail::Bool(conjugate)),
            );
        }
    }

    // positive control: a conjugate of H̃ that H̃ is not normalized by, if any
    let t = (0..g.order()).find(|&t| s.h_tilde.conjugate(g, t) != *s.h_tilde).unwrap_or(g.identity());
    for (id, t) in [("positive-control-identity", g.identity()), ("positive-control-conjugate", t)] {
        let moved = s.chi.transport(g, t);
        let listed = subgroups.iter().any(|k| k == moved.domain_arc().as_ref());
        let equal = char_equal(&induce(g, &s.classes, &moved)?, &target)?;
        cases.push(
            CaseRecord::new(id, equal && listed)
                .with("element", Detail::Integer(t as i64))
                .with("listed", Detail::Bool(listed)),
        );
    }

    // negative control: the trivial character of H̃ has the same degree but is
    // separated by its multiplicity of the trivial character of G̃
    let one = ClassFunction::trivial(s.classes.clone());
    let ind_one = induce(g, &s.classes, &LinearCharacter::trivial(s.h_tilde.clone()))?;
    let m_one = inner_product(&ind_one, &one)?;
    let m_chi = inner_product(&target, &one)?;
    cases.push(
        CaseRecord::new(
            "negative-control",
            !char_equal(&ind_one, &target)? && m_one == int(1) && m_chi == int(0),
        )
        .with("multiplicity-of-1-in-Ind1", Detail::Value(m_one))
        .with("multiplicity-of-1-in-Ind-chi", Detail::Value(m_chi)),
    );
    cases.push(
        CaseRecord::new("search-space", hits > 0)
            .with("subgroups", Detail::Integer(subgroups.len() as i64))
            .with("characters", Detail::Integer(characters))
            .with("hits", Detail::Integer(hits)),
    );
    Ok(VerificationReport::new("theorem-group", s.describe(), cases))
}

/// For a non-trivial Gassmann triple `(G, H, H′)`:
/// (a) `Ind_{H̃} 1 = Ind_{H̃′} 1`; (b) `H̃` and `H̃′` are not conjugate in `G̃`;
/// (c) `Ind_{ker χ′} 1 ≠ Ind_{ker χ} 1` for every order-3 linear character `χ′` of `H̃′`.
pub fn verify_main_distinguish(
    base: &PermGroup,
    h: &Subgroup,
    h_prime: &Subgroup,
    l: u32,
    cap: usize,
) -> Result<VerificationReport> {
    let base_classes = Arc::new(conjugacy_classes(base, Arc::new(Subgroup::whole(base))));
    let triple = is_gassmann_triple(base, &base_classes, &Arc::new(h.clone()), &Arc::new(h_prime.clone()))?;
    if !triple.is_gassmann {
        return Err(Error::Hypothesis("(G, H, H′) is not a Gassmann triple".into()));
    }
    if triple.is_trivial {
        return Err(Error::Hypothesis("H and H′ are conjugate; the statement is vacuous".into()));
    }

    let s = TildeSetup::new(base, h, l, cap)?;
    let g = &s.tilde;
    let h2_tilde = Arc::new(g.lift_subgroup(h_prime)?);
    let mut cases = Vec::new();

    let lifted = char_equal(
        &permutation_character(g, &s.classes, &s.h_tilde)?,
        &permutation_character(g, &s.classes, &h2_tilde)?,
    )?;
    cases.push(CaseRecord::new("a:lifted-gassmann", lifted));

    let witness = are_conjugate_subgroups(g, &s.h_tilde, &h2_tilde);
    cases.push(
        CaseRecord::new("b:not-conjugate", witness.is_none())
            .with("witness", Detail::Text(witness.map_or("none".to_string(), |w| w.to_string()))),
    );

    let u = Arc::new(g.chi_kernel());
    let ind_u = induce(g, &s.classes, &LinearCharacter::trivial(u))?;
    let order3 = linear_characters(g, h2_tilde.clone(), Some(3))?;
    cases.push(
        CaseRecord::new("c:character-count", !order3.is_empty() && order3.len() % 2 == 0)
            .with("count", Detail::Integer(order3.len() as i64)),
    );
    for (j, chi2) in order3.iter().enumerate() {
        let kernel = Arc::new(chi2.kernel(g)?);
        let index = h2_tilde.order() / kernel.order();
        let ind = induce(g, &s.classes, &LinearCharacter::trivial(kernel))?;
        let equal = char_equal(&ind, &ind_u)?;
        cases.push(
            CaseRecord::new(format!("c:character-{j}"), !equal && index == 3)
                .with("kernel-index", Detail::Integer(index as i64))
                .with("induced-equal", Detail::Bool(equal)),
        );
    }
    Ok(VerificationReport::new("distinguish", s.describe(), cases))
}
