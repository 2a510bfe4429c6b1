use alloc::vec;
use alloc::vec::Vec;

use super::{FiniteGroup, Subgroup};

const ABSENT: u32 = u32::MAX;

/// `[K, K]`, as the normal closure in `K` of the commutators of generator pairs.
pub fn commutator_subgroup<G: FiniteGroup + ?Sized>(group: &G, k: &Subgroup) -> Subgroup {
    let gens = k.generators();
    let e = group.identity();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = group.commutator(a, b);
            if c != e {
                seeds.push(c);
            }
        }
    }
    let mut n = Subgroup::generated(group, &seeds);
    loop {
        let mut grown = false;
        for &s in gens {
            for c in n.generators().to_vec() {
                let y = group.conj(s, c);
                if !n.contains(y) {
                    n.adjoin(group, y);
                    grown = true;
                }
            }
        }
        if !grown {
            break;
        }
    }
    debug_assert!(n.is_normal_in(group, k));
    n
}

/// `K / [K, K] ≅ ℤ/d_1 × … × ℤ/d_r` with `1 < d_1 | d_2 | … | d_r`, together with
/// the coordinates of every element of `K` under the projection.
#[derive(Clone, Debug)]
pub struct Abelianization {
    invariants: Vec<u64>,
    coords: Vec<Vec<u32>>,
    commutator: Subgroup,
    domain_positions: Vec<usize>,
}

impl Abelianization {
    /// Invariant factors, all greater than one.
    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    /// `|K / [K, K]|`
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    /// Exponent of the quotient (the last invariant factor, or 1).
    pub fn exponent(&self) -> u64 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn commutator_subgroup(&self) -> &Subgroup {
        &self.commutator
    }

    /// Coordinates of `x` in the product of cyclic groups; `x` must lie in `K`.
    pub fn project(&self, x: usize) -> Option<&[u32]> {
        self.domain_positions.get(x).filter(|&&p| p != usize::MAX).map(|&p| self.coords[p].as_slice())
    }
}

/// Diagonalizes the integer relation matrix `rows` (each of length `k`) by
/// elementary operations, returning the diagonal and the column transform `V`.
#[allow(clippy::needless_range_loop)]
fn smith_form(mut a: Vec<Vec<i128>>, k: usize) -> (Vec<i128>, Vec<Vec<i128>>) {
    let r = a.len();
    let mut v: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect();

    fn swap_cols(m: &mut [Vec<i128>], i: usize, j: usize) {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
    fn sub_col(m: &mut [Vec<i128>], dst: usize, src: usize, q: i128) {
        for row in m.iter_mut() {
            row[dst] -= q * row[src];
        }
    }

    for t in 0..k.min(r) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let pivot = (t..r)
            .flat_map(|i| (t..k).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..k {
                        a[i][j] -= q * a[t][j];
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..k {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    sub_col(&mut a, j, t, q);
                    sub_col(&mut v, j, t, q);
                    clean &= a[t][j] == 0;
                }
            }
            if !clean {
                let col = (t + 1..r).filter(|&i| a[i][t] != 0).min_by_key(|&i| a[i][t].abs());
                let row = (t + 1..k).filter(|&j| a[t][j] != 0).min_by_key(|&j| a[t][j].abs());
                let col_min = col.map(|i| a[i][t].abs());
                let row_min = row.map(|j| a[t][j].abs());
                if col_min.is_some() && (row_min.is_none() || col_min <= row_min) {
                    a.swap(t, col.unwrap());
                } else if let Some(j) = row {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                }
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..k).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..k {
                        let x = a[i][j];
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
    }

    let mut diag = vec![0i128; k];
    for (i, d) in diag.iter_mut().enumerate() {
        if i < r && a[i][i] != 0 {
            if a[i][i] < 0 {
                for row in v.iter_mut() {
                    row[i] = -row[i];
                }
            }
            *d = a[i][i].abs();
        }
    }
    (diag, v)
}

pub fn abelianization<G: FiniteGroup + ?Sized>(group: &G, k: &Subgroup) -> Abelianization {
    let commutator = commutator_subgroup(group, k);
    let gens = k.generators().to_vec();
    let ngens = gens.len();

    // label every element of K by its coset of [K, K], spanning the quotient from
    // the identity coset and recording the relations met along the way
    let mut label = vec![ABSENT; k.order()];
    for &x in commutator.elements() {
        label[k.position(x).expect("[K,K] lies in K")] = 0;
    }
    let mut reps = vec![group.identity()];
    let mut words: Vec<Vec<i128>> = vec![vec![0; ngens]];
    let mut relations: Vec<Vec<i128>> = Vec::new();
    let mut c = 0;
    while c < reps.len() {
        for (i, &s) in gens.iter().enumerate() {
            let y = group.mul(reps[c], s);
            let py = k.position(y).expect("K is closed");
            let mut w = words[c].clone();
            w[i] += 1;
            if label[py] == ABSENT {
                let new = reps.len() as u32;
                for &n in commutator.elements() {
                    label[k.position(group.mul(y, n)).expect("K is closed")] = new;
                }
                reps.push(y);
                words.push(w);
            } else {
                let target = &words[label[py] as usize];
                let rel: Vec<i128> = w.iter().zip(target).map(|(a, b)| a - b).collect();
                if rel.iter().any(|&x| x != 0) {
                    relations.push(rel);
                }
            }
        }
        c += 1;
    }
    let quotient_order = reps.len() as u64;

    let (diag, v) = smith_form(relations, ngens);
    assert!(diag.iter().all(|&d| d > 0), "finite quotient has full-rank relations");
    let kept: Vec<usize> = (0..ngens).filter(|&i| diag[i] > 1).collect();
    let mut invariants: Vec<u64> = kept.iter().map(|&i| diag[i] as u64).collect();
    let coset_coords: Vec<Vec<u32>> = words
        .iter()
        .map(|w| {
            kept.iter()
                .map(|&j| {
                    let y: i128 = (0..ngens).map(|i| w[i] * v[i][j]).sum();
                    y.rem_euclid(diag[j]) as u32
                })
                .collect()
        })
        .collect();
    assert_eq!(invariants.iter().product::<u64>(), quotient_order);

    // the diagonalization already yields a divisibility chain; keep it ascending
    debug_assert!(invariants.windows(2).all(|w| w[1] % w[0] == 0));
    invariants.shrink_to_fit();

    let coords = (0..k.order()).map(|p| coset_coords[label[p] as usize].clone()).collect();
    let mut domain_positions = vec![usize::MAX; group.order()];
    for (p, &x) in k.elements().iter().enumerate() {
        domain_positions[x] = p;
    }
    Abelianization { invariants, coords, commutator, domain_positions }
}
