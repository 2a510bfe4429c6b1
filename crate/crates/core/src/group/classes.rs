use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{FiniteGroup, Subgroup};

const ABSENT: u32 = u32::MAX;

/// Conjugacy classes of a subgroup `K` (possibly the whole group), numbered by
/// ascending representative key. Each representative is the key-minimal element
/// of its class.
#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    domain: Arc<Subgroup>,
    representatives: Vec<usize>,
    sizes: Vec<usize>,
    class_index: Vec<u32>,
}

impl PartialEq for ConjugacyClassTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.domain, &other.domain)
            || (self.domain == other.domain && self.representatives == other.representatives)
    }
}

impl ConjugacyClassTable {
    pub fn domain(&self) -> &Arc<Subgroup> {
        &self.domain
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.domain.order()
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Class of `x`, or `None` when `x` is outside the domain.
    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.class_index.get(x).filter(|&&c| c != ABSENT).map(|&c| c as usize)
    }
}

/// Orbits of `domain` acting on itself by conjugation, closed under conjugation
/// by the domain's generators.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(group: &G, domain: Arc<Subgroup>) -> ConjugacyClassTable {
    let gens: Vec<(usize, usize)> = domain.generators().iter().map(|&s| (s, group.inv(s))).collect();
    let mut class_index = vec![ABSENT; group.order()];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    for &x in domain.elements() {
        if class_index[x] != ABSENT {
            continue;
        }
        let c = representatives.len() as u32;
        representatives.push(x);
        class_index[x] = c;
        queue.push_back(x);
        let mut size = 1;
        while let Some(y) = queue.pop_front() {
            for &(s, si) in &gens {
                let z = group.mul(group.mul(s, y), si);
                if class_index[z] == ABSENT {
                    class_index[z] = c;
                    size += 1;
                    queue.push_back(z);
                }
            }
        }
        sizes.push(size);
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), domain.order());
    ConjugacyClassTable { domain, representatives, sizes, class_index }
}
