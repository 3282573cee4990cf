//! Uniform random spanning trees via loop-erased random walks.
//!
//! From each vertex not yet in the tree, walk randomly until the tree is
//! hit, overwriting the successor pointer on revisits; the surviving
//! pointers form the loop erasure of the walk. Repeating from every
//! vertex yields an exactly uniform spanning tree rooted at vertex 0.
//!
//! Randomness comes from a ChaCha8 stream cipher generator seeded with a
//! caller-supplied 64-bit value, so every sample is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, RootedForest};

/// Reusable sampler owning its generator state; successive calls draw
/// independent trees from one seeded stream.
pub struct TreeSampler {
    rng: ChaCha8Rng,
}

impl TreeSampler {
    pub fn new(seed: u64) -> Self {
        TreeSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Draws one uniformly random spanning tree rooted at vertex 0.
    pub fn sample(&mut self, g: &LabeledGraph) -> Result<RootedForest> {
        if !g.is_connected() {
            return Err(Error::InvalidInput(
                "spanning-tree sampling needs a connected graph".into(),
            ));
        }
        let n = g.vertex_count();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut in_tree = vec![false; n];
        in_tree[0] = true;
        for start in 1..n {
            if in_tree[start] {
                continue;
            }
            let mut v = start;
            while !in_tree[v] {
                let nbrs = g.neighbors(v);
                parent[v] = Some(nbrs[self.rng.random_range(0..nbrs.len())]);
                v = parent[v].unwrap();
            }
            let mut v = start;
            while !in_tree[v] {
                in_tree[v] = true;
                v = parent[v].unwrap();
            }
        }
        Ok(RootedForest { parent })
    }
}

/// One-shot convenience wrapper around [`TreeSampler`].
pub fn sample_spanning_tree(g: &LabeledGraph, seed: u64) -> Result<RootedForest> {
    TreeSampler::new(seed).sample(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete_multipartite, is_rooted_spanning_forest, PartSizes};
    use std::collections::BTreeSet;

    #[test]
    fn samples_are_valid_trees() {
        let g = build_complete_multipartite(PartSizes::new(1, 1, 2)).unwrap();
        let roots: BTreeSet<usize> = [0].into();
        let mut sampler = TreeSampler::new(42);
        for _ in 0..50 {
            let tree = sampler.sample(&g).unwrap();
            assert!(is_rooted_spanning_forest(&g, &tree, &roots));
        }
    }

    #[test]
    fn triangle_samples_land_in_the_tree_set() {
        let g = build_complete_multipartite(PartSizes::new(1, 1, 1)).unwrap();
        // The triangle's three spanning trees rooted at 0.
        let trees: Vec<Vec<Option<usize>>> = vec![
            vec![None, Some(0), Some(0)],
            vec![None, Some(0), Some(1)],
            vec![None, Some(2), Some(0)],
        ];
        let mut sampler = TreeSampler::new(3);
        let mut seen = BTreeSet::new();
        for _ in 0..60 {
            let tree = sampler.sample(&g).unwrap();
            let which = trees.iter().position(|t| t == &tree.parent);
            seen.insert(which.expect("sample must be one of the 3 trees"));
        }
        // 60 draws miss one of three equally likely trees with
        // probability under 1e-10.
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn same_seed_gives_identical_trees() {
        let g = build_complete_multipartite(PartSizes::new(2, 2, 2)).unwrap();
        let a = sample_spanning_tree(&g, 7).unwrap();
        let b = sample_spanning_tree(&g, 7).unwrap();
        assert_eq!(a, b);
        let mut s1 = TreeSampler::new(9);
        let mut s2 = TreeSampler::new(9);
        for _ in 0..10 {
            assert_eq!(s1.sample(&g).unwrap(), s2.sample(&g).unwrap());
        }
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = build_complete_multipartite(PartSizes::new(0, 0, 2)).unwrap();
        assert!(sample_spanning_tree(&g, 1).is_err());
    }

    #[test]
    fn single_vertex_graph_samples_itself() {
        let g = build_complete_multipartite(PartSizes::new(1, 0, 0)).unwrap();
        let tree = sample_spanning_tree(&g, 5).unwrap();
        assert_eq!(tree.parent, vec![None]);
    }
}
