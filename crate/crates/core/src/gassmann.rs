//! Gassmann triples and a small catalog of pinned instances.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::character::{char_equal, permutation_character};
use crate::group::{
    are_conjugate_subgroups, ConjugacyClassTable, FiniteGroup, PermGroup, Permutation, Subgroup,
};
use crate::{Error, Result};

/// `|c ∩ H|` for every class `c` of the table.
pub fn class_intersection_counts(table: &ConjugacyClassTable, h: &Subgroup) -> Result<Vec<usize>> {
    let mut counts = alloc::vec![0; table.len()];
    for &x in h.elements() {
        let c =
            table.class_of(x).ok_or(Error::NotSubgroup("subgroup is not contained in the group".into()))?;
        counts[c] += 1;
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GassmannReport {
    pub is_gassmann: bool,
    /// `H` and `H′` are conjugate.
    pub is_trivial: bool,
    /// `(|c ∩ H|, |c ∩ H′|)` per class.
    pub class_intersections: Vec<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    /// `g` with `g H g⁻¹ = H′`, when one exists.
    pub witness: Option<usize>,
}

/// Decides whether `(G, H, H′)` is a Gassmann triple, by class intersection
/// counts and independently by equality of permutation characters.
pub fn is_gassmann_triple<G: FiniteGroup + ?Sized>(
    group: &G,
    table: &Arc<ConjugacyClassTable>,
    h: &Arc<Subgroup>,
    h2: &Arc<Subgroup>,
) -> Result<GassmannReport> {
    let a = class_intersection_counts(table, h)?;
    let b = class_intersection_counts(table, h2)?;
    let by_counts = a == b;
    let by_characters =
        char_equal(&permutation_character(group, table, h)?, &permutation_character(group, table, h2)?)?;
    if by_counts != by_characters {
        return Err(Error::Inconsistent(
            "class counts and permutation characters disagree on the Gassmann property".into(),
        ));
    }
    let witness = are_conjugate_subgroups(group, h, h2);
    if witness.is_some() && !by_counts {
        return Err(Error::Inconsistent("conjugate subgroups with different class counts".into()));
    }
    Ok(GassmannReport {
        is_gassmann: by_counts,
        is_trivial: witness.is_some(),
        class_intersections: a.into_iter().zip(b).collect(),
        class_sizes: table.sizes().to_vec(),
        witness,
    })
}

type Matrix = [[u8; 3]; 3];

/// Points are the nonzero vectors of `𝔽₂³` by binary value `001, 010, …, 111`,
/// the leftmost coordinate being the most significant bit; vector value `v` is
/// point `v - 1`.
fn vector_of(point: u32) -> [u8; 3] {
    let v = point + 1;
    [(v >> 2 & 1) as u8, (v >> 1 & 1) as u8, (v & 1) as u8]
}

fn point_of(v: [u8; 3]) -> u32 {
    ((v[0] as u32) << 2 | (v[1] as u32) << 1 | v[2] as u32) - 1
}

fn matrix_permutation(a: &Matrix) -> Permutation {
    let images = (0..7)
        .map(|p| {
            let v = vector_of(p);
            let w: [u8; 3] = core::array::from_fn(|i| (0..3).fold(0, |s, j| s ^ (a[i][j] & v[j])));
            point_of(w)
        })
        .collect();
    Permutation::new(images).expect("invertible matrices permute nonzero vectors")
}

/// The elementary transvections `I + E_ij`, `i ≠ j`.
fn transvections() -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut a = [[0u8; 3]; 3];
                for (k, row) in a.iter_mut().enumerate() {
                    row[k] = 1;
                }
                a[i][j] = 1;
                out.push(a);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Gl3F2 {
    pub group: PermGroup,
    /// Stabilizer of the vector `001`.
    pub point_stabilizer: Subgroup,
    /// Setwise stabilizer of the plane `{v : v_1 = 0}`.
    pub plane_stabilizer: Subgroup,
}

/// `GL₃(𝔽₂)` acting on the seven nonzero vectors, generated by the elementary
/// transvections.
pub fn build_gl3_f2() -> Gl3F2 {
    let gens: Vec<Permutation> = transvections().iter().map(matrix_permutation).collect();
    let group = PermGroup::generate(7, &gens, 168).expect("GL3(F2) has 168 elements");
    let point = point_of([0, 0, 1]);
    let plane: Vec<u32> = (0..7).filter(|&p| vector_of(p)[0] == 0).collect();
    let point_stabilizer = Subgroup::from_predicate(&group, |x| group.element(x).apply(point) == point)
        .expect("stabilizers are subgroups");
    let plane_stabilizer = Subgroup::from_predicate(&group, |x| {
        plane.iter().all(|&p| plane.contains(&group.element(x).apply(p)))
    })
    .expect("stabilizers are subgroups");
    Gl3F2 { group, point_stabilizer, plane_stabilizer }
}

/// A named `(G, H, H′)` given by generator image lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogInstance {
    pub name: &'static str,
    pub description: &'static str,
    pub degree: usize,
    pub g: Vec<Vec<u32>>,
    pub h: Vec<Vec<u32>>,
    pub h_prime: Vec<Vec<u32>>,
}

/// A catalog instance with its groups enumerated.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub group: PermGroup,
    pub h: Subgroup,
    pub h_prime: Subgroup,
}

/// Enumerates `G` and the subgroups generated by `gens` inside it.
pub fn subgroup_from_images(group: &PermGroup, gens: &[Vec<u32>]) -> Result<Subgroup> {
    let keys = gens
        .iter()
        .map(|images| {
            let p = Permutation::new(images.clone())?;
            if p.degree() != group.degree() {
                return Err(Error::NotSubgroup("generator degree differs from the group".into()));
            }
            group.key_of(&p).ok_or_else(|| Error::NotSubgroup(alloc::format!("{p:?} is not in the group")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subgroup::generated(group, &keys))
}

impl CatalogInstance {
    pub fn materialize(&self, cap: usize) -> Result<Materialized> {
        let gens =
            self.g.iter().map(|images| Permutation::new(images.clone())).collect::<Result<Vec<_>>>()?;
        let group = PermGroup::generate(self.degree, &gens, cap)?;
        let h = subgroup_from_images(&group, &self.h)?;
        let h_prime = subgroup_from_images(&group, &self.h_prime)?;
        Ok(Materialized { group, h, h_prime })
    }
}

fn lists(rows: &[&[u32]]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn catalog() -> Vec<CatalogInstance> {
    alloc::vec![
        CatalogInstance {
            name: "s3-c2",
            description: "S3 with two conjugate subgroups of order 2 (a trivial triple, index 3)",
            degree: 3,
            g: lists(&[&[1, 0, 2], &[1, 2, 0]]),
            h: lists(&[&[1, 0, 2]]),
            h_prime: lists(&[&[0, 2, 1]]),
        },
        CatalogInstance {
            name: "gl3f2",
            description: "GL3(F2) on the 7 nonzero vectors with point and plane stabilizers",
            degree: 7,
            g: lists(GL3_GENERATORS),
            h: lists(GL3_POINT_STABILIZER),
            h_prime: lists(GL3_PLANE_STABILIZER),
        },
    ]
}

pub fn catalog_instance(name: &str) -> Result<CatalogInstance> {
    catalog().into_iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownInstance(name.into()))
}

// The transvections I + E_ij in the order (i, j) = (0,1), (0,2), (1,0), (1,2), (2,0), (2,1).
const GL3_GENERATORS: &[&[u32]] = &[
    &[0, 5, 6, 3, 4, 1, 2],
    &[4, 1, 6, 3, 0, 5, 2],
    &[0, 1, 2, 5, 6, 3, 4],
    &[2, 1, 0, 3, 6, 5, 4],
    &[0, 1, 2, 4, 3, 6, 5],
    &[0, 2, 1, 3, 4, 6, 5],
];
const GL3_POINT_STABILIZER: &[&[u32]] = &[&[0, 2, 1, 5, 6, 4, 3], &[0, 3, 4, 1, 2, 5, 6]];
const GL3_PLANE_STABILIZER: &[&[u32]] = &[&[0, 2, 1, 5, 6, 4, 3], &[1, 0, 2, 3, 5, 4, 6]];
