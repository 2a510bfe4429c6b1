use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::FiniteGroup;
use crate::{Error, Result};

/// A bijection of `{0, …, d-1}` stored by its image list.
///
/// Products are composed right to left: `(a * b)(x) = a(b(x))`, so groups of
/// permutations act on points from the left.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = alloc::vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d {
                return Err(Error::InvalidPermutation(format!("image {x} out of range 0..{d}")));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if x as usize >= degree || next as usize >= degree {
                    return Err(Error::InvalidPermutation(format!("point out of range 0..{degree}")));
                }
                images[x as usize] = next;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Closure of `generators` under composition, sorted lexicographically by image list.
///
/// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements are found.
pub fn enumerate_elements(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(format!(
            "generator of degree {} in a group of degree {degree}",
            bad.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.compose(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

// Above this order products are looked up through the element index instead.
const CAYLEY_TABLE_LIMIT: usize = 1024;

/// A permutation group, fully enumerated. Element keys follow the lexicographic
/// order of image lists, so the identity is key 0.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    generators: Vec<usize>,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        let elements = enumerate_elements(degree, generators, cap)?;
        let index: BTreeMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut gens: Vec<usize> = Vec::new();
        for g in generators {
            let k = index[g];
            if k != 0 && !gens.contains(&k) {
                gens.push(k);
            }
        }
        let inverses = elements.iter().map(|p| index[&p.inverse()] as u32).collect();
        let n = elements.len();
        let table = (n <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        });
        Ok(PermGroup { degree, elements, index, generators: gens, inverses, table })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, key: usize) -> &Permutation {
        &self.elements[key]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn key_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Permutations of the generator keys, in the order they were supplied.
    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.generators.iter().map(|&k| self.elements[k].clone()).collect()
    }
}

impl FiniteGroup for PermGroup {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }
}
