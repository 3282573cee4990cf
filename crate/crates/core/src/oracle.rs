//! Independent ground-truth engines for the counting formulas:
//! Laplacian determinants, their all-minors extension, the rooted-forest
//! determinant, and an exhaustive edge-subset census.
//!
//! Everything here counts by linear algebra or brute force and never
//! touches the closed formulas, so agreement between the two is
//! meaningful evidence.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigCount, IntMatrix};
use crate::graph::{LabeledGraph, Part, RootProfile};
use crate::unionfind::UnionFind;

/// Largest edge count the census will attempt by default; 2^22 subsets.
pub const DEFAULT_CENSUS_EDGE_LIMIT: usize = 22;

/// Graph Laplacian L = D - A.
pub fn laplacian(g: &LabeledGraph) -> IntMatrix {
    let mut l = IntMatrix::zero(g.vertex_count());
    for &(u, v) in g.edges() {
        l.add_assign(u, u, 1);
        l.add_assign(v, v, 1);
        l.add_assign(u, v, -1);
        l.add_assign(v, u, -1);
    }
    l
}

fn nonnegative_det(m: &IntMatrix) -> BigCount {
    let det = m.det_bareiss();
    assert!(
        !det.is_negative(),
        "count determinant came out negative: {det}"
    );
    det.to_biguint().expect("non-negative")
}

/// Spanning-tree count as the Laplacian cofactor: delete row and column
/// 0, take the determinant. Disconnected graphs yield 0.
pub fn spanning_tree_count_kirchhoff(g: &LabeledGraph) -> BigCount {
    nonnegative_det(&laplacian(g).delete_rows_cols(&[0]))
}

/// Number of spanning forests in which each component contains exactly
/// one vertex of `roots` (its root): delete all root rows and columns
/// from the Laplacian and take the determinant.
pub fn forest_count_for_root_set(g: &LabeledGraph, roots: &BTreeSet<usize>) -> Result<BigCount> {
    if roots.is_empty() {
        return Err(Error::InvalidInput("root set must be non-empty".into()));
    }
    if roots.iter().any(|&v| v >= g.vertex_count()) {
        return Err(Error::InvalidInput("root vertex out of range".into()));
    }
    let drop: Vec<usize> = roots.iter().copied().collect();
    Ok(nonnegative_det(&laplacian(g).delete_rows_cols(&drop)))
}

/// Number of spanning forests with exactly `r` roots, all in the third
/// part: sum of all-minors determinants over the r-subsets of that part.
pub fn forest_count_r_in_part_oracle(g: &LabeledGraph, r: u32) -> Result<BigCount> {
    let parts = g.parts();
    if r == 0 || r > parts.p {
        return Err(Error::InvalidInput(format!(
            "need 1 <= r <= p, got r={r} with p={}",
            parts.p
        )));
    }
    let mut acc = BigCount::zero();
    for subset in parts.part_range(Part::P).combinations(r as usize) {
        let roots: BTreeSet<usize> = subset.into_iter().collect();
        acc += forest_count_for_root_set(g, &roots)?;
    }
    Ok(acc)
}

/// Total number of rooted spanning forests over all root placements:
/// det(L + I), the classical identity.
pub fn total_rooted_forest_oracle(g: &LabeledGraph) -> BigCount {
    nonnegative_det(&laplacian(g).plus_identity())
}

/// Exact tally of all rooted spanning forests of a graph, grouped by the
/// root profile (l, k, r).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForestCensus {
    counts: BTreeMap<RootProfile, BigCount>,
}

impl ForestCensus {
    pub fn add(&mut self, profile: RootProfile, amount: BigCount) {
        if amount.is_zero() {
            return;
        }
        *self.counts.entry(profile).or_default() += amount;
    }

    /// Count for one profile; profiles never seen count 0.
    pub fn get(&self, profile: RootProfile) -> BigCount {
        self.counts.get(&profile).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigCount {
        self.counts.values().sum()
    }

    /// Nonzero profiles in lexicographic (l, k, r) order.
    pub fn iter(&self) -> impl Iterator<Item = (&RootProfile, &BigCount)> {
        self.counts.iter()
    }

    pub fn profile_count(&self) -> usize {
        self.counts.len()
    }

    /// Sum over profiles with the given number of third-part roots and
    /// no roots elsewhere.
    pub fn third_part_only(&self, r: u32) -> BigCount {
        self.get(RootProfile { l: 0, k: 0, r })
    }
}

/// Brute-force census: iterates every edge subset, keeps the acyclic
/// ones (spanning forests, isolated vertices counting as singleton
/// components), and distributes each forest's root choices over profiles
/// by expanding the product of per-component polynomials
/// `a_i x + b_i y + c_i z`, where (a_i, b_i, c_i) are the component's
/// part sizes.
pub fn exhaustive_census(g: &LabeledGraph, max_edges: usize) -> Result<ForestCensus> {
    let edges = g.edges();
    if edges.len() > max_edges {
        return Err(Error::ResourceLimit(format!(
            "census over {} edges exceeds the {max_edges}-edge limit",
            edges.len()
        )));
    }
    let parts = g.parts();
    let n = g.vertex_count();
    let (dm, dn, dp) = (
        parts.m as usize + 1,
        parts.n as usize + 1,
        parts.p as usize + 1,
    );
    let dims = dm * dn * dp;
    let idx = |l: usize, k: usize, r: usize| (l * dn + k) * dp + r;

    let mut census = ForestCensus::default();
    let mut comp_slot = vec![usize::MAX; n];
    'mask: for mask in 0u64..(1u64 << edges.len()) {
        let mut uf = UnionFind::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 && !uf.union(u, v) {
                continue 'mask;
            }
        }
        // Per-component (a, b, c) part sizes.
        comp_slot.fill(usize::MAX);
        let mut comps: Vec<[u64; 3]> = Vec::new();
        for v in 0..n {
            let root = uf.find(v);
            let slot = if comp_slot[root] == usize::MAX {
                comp_slot[root] = comps.len();
                comps.push([0; 3]);
                comps.len() - 1
            } else {
                comp_slot[root]
            };
            let axis = match parts.part_of(v) {
                Part::M => 0,
                Part::N => 1,
                Part::P => 2,
            };
            comps[slot][axis] += 1;
        }
        // Root-choice polynomial. Per-forest values fit u64 easily: the
        // product of component sizes is tiny at census scale.
        let mut cur = vec![0u64; dims];
        cur[idx(0, 0, 0)] = 1;
        for [a, b, c] in comps {
            let mut next = vec![0u64; dims];
            for l in 0..dm {
                for k in 0..dn {
                    for r in 0..dp {
                        let w = cur[idx(l, k, r)];
                        if w == 0 {
                            continue;
                        }
                        if a > 0 && l + 1 < dm {
                            next[idx(l + 1, k, r)] += w * a;
                        }
                        if b > 0 && k + 1 < dn {
                            next[idx(l, k + 1, r)] += w * b;
                        }
                        if c > 0 && r + 1 < dp {
                            next[idx(l, k, r + 1)] += w * c;
                        }
                    }
                }
            }
            cur = next;
        }
        for l in 0..dm {
            for k in 0..dn {
                for r in 0..dp {
                    let w = cur[idx(l, k, r)];
                    if w > 0 {
                        census.add(
                            RootProfile {
                                l: l as u32,
                                k: k as u32,
                                r: r as u32,
                            },
                            BigCount::from(w),
                        );
                    }
                }
            }
        }
    }
    Ok(census)
}
