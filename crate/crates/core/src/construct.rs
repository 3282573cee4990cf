//! Constructive decomposition of third-part-rooted spanning forests.
//!
//! Every spanning forest of K_{m,n,p} whose roots all lie in the third
//! part factors uniquely into a plan: a rooted spanning forest of the
//! bipartite base on the first two parts, an attachment edge from each
//! non-root third-part vertex into the base, a set of merge edges from
//! base roots into non-root third-part vertices, and closing edges from
//! the remaining base roots to the designated roots. Replaying a plan
//! rebuilds the forest; decomposing a forest recovers its plan; and
//! enumerating all plans at desk scale re-derives the counts one forest
//! at a time.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exact::BigCount;
use crate::graph::{
    build_complete_multipartite, is_rooted_spanning_forest, PartSizes, RootedForest,
};
use crate::unionfind::UnionFind;

/// Largest vertex count exhaustive plan enumeration will attempt by
/// default.
pub const DEFAULT_CONSTRUCTION_VERTEX_LIMIT: usize = 8;

/// Complete recipe for one third-part-rooted spanning forest.
///
/// `base_forest` lives on the first m+n vertices; `attachments` maps
/// each non-root third-part vertex to its base parent; `merge_edges`
/// pairs (base root, non-root third-part vertex); `closing` maps each
/// base root not used as a merge source to a designated root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub base_forest: RootedForest,
    pub p_roots: BTreeSet<usize>,
    pub attachments: BTreeMap<usize, usize>,
    pub merge_edges: BTreeSet<(usize, usize)>,
    pub closing: BTreeMap<usize, usize>,
}

/// Partially built forest between construction phases.
#[derive(Clone, Debug)]
pub struct ConstructionState {
    parts: PartSizes,
    parent: Vec<Option<usize>>,
    uf: UnionFind,
    p_roots: BTreeSet<usize>,
    merges_applied: usize,
}

impl ConstructionState {
    fn base_len(&self) -> usize {
        self.parts.m as usize + self.parts.n as usize
    }

    pub fn component_count(&self) -> usize {
        self.uf.components()
    }

    pub fn parent_map(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Base vertices still without a parent, i.e. the roots available as
    /// merge sources or closing sources.
    pub fn open_base_roots(&self) -> BTreeSet<usize> {
        (0..self.base_len())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }
}

/// Finished replay: the forest plus the number of merge edges applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionOutcome {
    pub forest: RootedForest,
    pub applied_t: usize,
}

fn check_base_forest(parts: PartSizes, f: &RootedForest) -> Result<()> {
    let m = parts.m as usize;
    let base = m + parts.n as usize;
    if f.vertex_count() != base {
        return Err(Error::InvalidPlan(format!(
            "base forest covers {} vertices, the bipartite base has {base}",
            f.vertex_count()
        )));
    }
    for v in 0..base {
        if let Some(q) = f.parent[v] {
            if q >= base || (v < m) == (q < m) {
                return Err(Error::InvalidPlan(format!(
                    "base forest edge ({v},{q}) is not a bipartite base edge"
                )));
            }
        }
    }
    for v in 0..base {
        f.root_of(v)
            .map_err(|_| Error::InvalidPlan("base forest has a cycle".into()))?;
    }
    Ok(())
}

/// Phase one: spread the non-root third-part vertices over the base
/// forest. Each gets out-degree 1 into the base; designated roots stay
/// isolated. The resulting component count is (base roots) + (designated
/// roots).
pub fn attach_free_part(
    parts: PartSizes,
    base_forest: &RootedForest,
    p_roots: &BTreeSet<usize>,
    attachments: &BTreeMap<usize, usize>,
) -> Result<ConstructionState> {
    let base = parts.m as usize + parts.n as usize;
    let total = parts.total();
    if p_roots.is_empty() {
        return Err(Error::InvalidPlan(
            "at least one designated root is required".into(),
        ));
    }
    if p_roots.iter().any(|&z| z < base || z >= total) {
        return Err(Error::InvalidPlan(
            "designated roots must lie in the third part".into(),
        ));
    }
    check_base_forest(parts, base_forest)?;
    for z in base..total {
        if !p_roots.contains(&z) && !attachments.contains_key(&z) {
            return Err(Error::InvalidPlan(format!(
                "free vertex {z} has no attachment"
            )));
        }
    }
    for (&z, &target) in attachments {
        if p_roots.contains(&z) {
            return Err(Error::InvalidPlan(format!(
                "attachment from designated root {z}"
            )));
        }
        if z < base || z >= total {
            return Err(Error::InvalidPlan(format!(
                "attachment source {z} is not a third-part vertex"
            )));
        }
        if target >= base {
            return Err(Error::InvalidPlan(format!(
                "attachment target {target} is outside the bipartite base"
            )));
        }
    }
    let mut parent = vec![None; total];
    parent[..base].clone_from_slice(&base_forest.parent);
    let mut uf = UnionFind::new(total);
    for (v, q) in parent.iter().enumerate().take(base) {
        if let Some(q) = *q {
            uf.union(v, q);
        }
    }
    for (&z, &target) in attachments {
        parent[z] = Some(target);
        uf.union(z, target);
    }
    let base_roots = (0..base).filter(|&v| parent[v].is_none()).count();
    debug_assert_eq!(uf.components(), base_roots + p_roots.len());
    Ok(ConstructionState {
        parts,
        parent,
        uf,
        p_roots: p_roots.clone(),
        merges_applied: 0,
    })
}

/// Phase two: fold base-rooted components into components owned by free
/// third-part vertices. Each edge runs from a still-open base root to a
/// non-root third-part vertex in a different component and lowers the
/// component count by one.
///
/// Edges are applied in canonical set order, which loses nothing: a set
/// of merge edges is jointly applicable exactly when no chain of them
/// closes a cycle, and such a set succeeds in every order.
pub fn add_merge_edges(
    mut state: ConstructionState,
    merge_edges: &BTreeSet<(usize, usize)>,
) -> Result<ConstructionState> {
    let base = state.base_len();
    let total = state.parts.total();
    for &(a, b) in merge_edges {
        if a >= base {
            return Err(Error::InvalidPlan(format!(
                "merge source {a} is outside the bipartite base"
            )));
        }
        if b < base || b >= total || state.p_roots.contains(&b) {
            return Err(Error::InvalidPlan(format!(
                "merge target {b} is not a free third-part vertex"
            )));
        }
        if state.parent[a].is_some() {
            return Err(Error::InvalidPlan(format!(
                "merge source {a} is not an open root"
            )));
        }
        if state.uf.same(a, b) {
            return Err(Error::MergeCycle(format!(
                "merge edge ({a},{b}) joins vertices already in one component"
            )));
        }
        state.parent[a] = Some(b);
        state.uf.union(a, b);
        state.merges_applied += 1;
    }
    Ok(state)
}

/// Phase three: route every remaining open base root to a designated
/// root. Designated roots have no outgoing edges at this point, so no
/// closing edge can form a cycle; the result is a spanning forest rooted
/// exactly at the designated roots.
pub fn close_to_roots(
    mut state: ConstructionState,
    closing: &BTreeMap<usize, usize>,
) -> Result<ConstructionOutcome> {
    let open = state.open_base_roots();
    for (&v, &z) in closing {
        if !open.contains(&v) {
            return Err(Error::InvalidPlan(format!(
                "closing source {v} is not an open root"
            )));
        }
        if !state.p_roots.contains(&z) {
            return Err(Error::InvalidPlan(format!(
                "closing target {z} is not a designated root"
            )));
        }
    }
    for &v in &open {
        if !closing.contains_key(&v) {
            return Err(Error::IncompletePlan(format!(
                "open root {v} has neither merge nor closing edge"
            )));
        }
    }
    for (&v, &z) in closing {
        state.parent[v] = Some(z);
        state.uf.union(v, z);
    }
    let forest = RootedForest {
        parent: state.parent,
    };
    debug_assert_eq!(forest.roots(), state.p_roots);
    Ok(ConstructionOutcome {
        forest,
        applied_t: state.merges_applied,
    })
}

/// Runs all three phases of a plan.
pub fn replay(parts: PartSizes, plan: &ConstructionPlan) -> Result<ConstructionOutcome> {
    let state = attach_free_part(parts, &plan.base_forest, &plan.p_roots, &plan.attachments)?;
    let state = add_merge_edges(state, &plan.merge_edges)?;
    close_to_roots(state, &plan.closing)
}

/// Inverts the construction: reads the unique plan off a spanning forest
/// whose roots all lie in the third part. Edges inside the base stay in
/// the base forest; edges leaving the base split into merge and closing
/// edges by whether the target is a designated root.
pub fn decompose(parts: PartSizes, forest: &RootedForest) -> Result<ConstructionPlan> {
    let base = parts.m as usize + parts.n as usize;
    let total = parts.total();
    let graph = build_complete_multipartite(parts)?;
    let roots = forest.roots();
    if forest.vertex_count() != total || !is_rooted_spanning_forest(&graph, forest, &roots) {
        return Err(Error::InvalidInput(
            "not a rooted spanning forest of this graph".into(),
        ));
    }
    if roots.iter().any(|&v| v < base) {
        return Err(Error::Unsupported(
            "decomposition expects every root in the third part".into(),
        ));
    }
    let base_forest = RootedForest {
        parent: (0..base)
            .map(|v| forest.parent[v].filter(|&q| q < base))
            .collect(),
    };
    let mut attachments = BTreeMap::new();
    let mut merge_edges = BTreeSet::new();
    let mut closing = BTreeMap::new();
    for z in base..total {
        if !roots.contains(&z) {
            attachments.insert(z, forest.parent[z].expect("non-root has a parent"));
        }
    }
    for v in 0..base {
        if let Some(q) = forest.parent[v] {
            if q >= base {
                if roots.contains(&q) {
                    closing.insert(v, q);
                } else {
                    merge_edges.insert((v, q));
                }
            }
        }
    }
    Ok(ConstructionPlan {
        base_forest,
        p_roots: roots,
        attachments,
        merge_edges,
        closing,
    })
}

/// Visits every digit vector of the given mixed-radix counter. A zero
/// radix means no vectors at all; an empty radix list means exactly one
/// (the empty vector).
fn for_each_mixed_radix<F>(radices: &[usize], mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> Result<()>,
{
    if radices.contains(&0) {
        return Ok(());
    }
    let mut digits = vec![0usize; radices.len()];
    loop {
        visit(&digits)?;
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(());
            }
            digits[i] += 1;
            if digits[i] < radices[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// All rooted spanning forests of the complete bipartite graph on parts
/// of sizes m and n, as parent maps on m+n vertices. Brute force over
/// parent assignments with a cycle filter; the empty graph yields the
/// single empty forest.
pub fn enumerate_bipartite_rooted_forests(m: u32, n: u32) -> Vec<RootedForest> {
    let (m, n) = (m as usize, n as usize);
    let base = m + n;
    let radices: Vec<usize> = (0..base)
        .map(|v| if v < m { n + 1 } else { m + 1 })
        .collect();
    let mut out = Vec::new();
    for_each_mixed_radix(&radices, |digits| {
        let parent: Vec<Option<usize>> = digits
            .iter()
            .enumerate()
            .map(|(v, &c)| match c {
                0 => None,
                c if v < m => Some(m + c - 1),
                c => Some(c - 1),
            })
            .collect();
        let mut uf = UnionFind::new(base);
        let acyclic = parent
            .iter()
            .enumerate()
            .all(|(v, &q)| q.map_or(true, |q| uf.union(v, q)));
        if acyclic {
            out.push(RootedForest { parent });
        }
        Ok(())
    })
    .expect("visitor never fails");
    out
}

/// Result of exhausting all plans for one designated root set.
#[derive(Clone, Debug, Default)]
pub struct ConstructionEnumeration {
    /// Every forest produced, each exactly once.
    pub outcomes: BTreeSet<RootedForest>,
    /// Outcome counts grouped by the (l, k) root profile of the plan's
    /// base forest.
    pub by_base_profile: BTreeMap<(u32, u32), BigCount>,
}

impl ConstructionEnumeration {
    pub fn count(&self) -> BigCount {
        BigCount::from(self.outcomes.len() as u64)
    }
}

/// Replays every valid plan for the given designated root set: every
/// base forest, every attachment map, and for each base root every
/// choice of closing target or merge target. Plans whose merge set
/// closes a cycle are skipped; each surviving plan must produce a forest
/// no other plan produces.
pub fn enumerate_constructions_for_roots(
    parts: PartSizes,
    p_roots: &BTreeSet<usize>,
    max_vertices: usize,
) -> Result<ConstructionEnumeration> {
    let total = parts.total();
    if total > max_vertices {
        return Err(Error::ResourceLimit(format!(
            "plan enumeration over {total} vertices exceeds the {max_vertices}-vertex limit"
        )));
    }
    let base = parts.m as usize + parts.n as usize;
    if p_roots.is_empty() || p_roots.iter().any(|&z| z < base || z >= total) {
        return Err(Error::InvalidInput(
            "designated roots must be a non-empty subset of the third part".into(),
        ));
    }
    let roots_vec: Vec<usize> = p_roots.iter().copied().collect();
    let free: Vec<usize> = (base..total).filter(|z| !p_roots.contains(z)).collect();
    let r = roots_vec.len();

    let mut enumeration = ConstructionEnumeration::default();
    for base_forest in enumerate_bipartite_rooted_forests(parts.m, parts.n) {
        let base_roots: Vec<usize> = base_forest.roots().into_iter().collect();
        let l = base_roots.iter().filter(|&&v| v < parts.m as usize).count() as u32;
        let k = base_roots.len() as u32 - l;
        let attachment_radices = vec![base; free.len()];
        for_each_mixed_radix(&attachment_radices, |targets| {
            let attachments: BTreeMap<usize, usize> =
                free.iter().zip(targets).map(|(&z, &t)| (z, t)).collect();
            // Each base root picks one of r closing targets or one of
            // p-r merge targets.
            let decision_radices = vec![r + free.len(); base_roots.len()];
            for_each_mixed_radix(&decision_radices, |decisions| {
                let mut merge_edges = BTreeSet::new();
                let mut closing = BTreeMap::new();
                for (&v, &d) in base_roots.iter().zip(decisions) {
                    if d < r {
                        closing.insert(v, roots_vec[d]);
                    } else {
                        merge_edges.insert((v, free[d - r]));
                    }
                }
                let plan = ConstructionPlan {
                    base_forest: base_forest.clone(),
                    p_roots: p_roots.clone(),
                    attachments: attachments.clone(),
                    merge_edges,
                    closing,
                };
                match replay(parts, &plan) {
                    Ok(outcome) => {
                        assert!(
                            enumeration.outcomes.insert(outcome.forest),
                            "two plans produced the same forest"
                        );
                        *enumeration.by_base_profile.entry((l, k)).or_default() +=
                            BigCount::from(1u32);
                    }
                    Err(Error::MergeCycle(_)) => {}
                    Err(e) => return Err(e),
                }
                Ok(())
            })
        })?;
    }
    Ok(enumeration)
}

/// Enumeration over the canonical designated root set: the first `r`
/// vertices of the third part.
pub fn enumerate_constructions(
    parts: PartSizes,
    r: u32,
    max_vertices: usize,
) -> Result<ConstructionEnumeration> {
    if r == 0 || r > parts.p {
        return Err(Error::InvalidInput(format!(
            "need 1 <= r <= p, got r={r} with p={}",
            parts.p
        )));
    }
    let base = parts.m as usize + parts.n as usize;
    let p_roots: BTreeSet<usize> = (base..base + r as usize).collect();
    enumerate_constructions_for_roots(parts, &p_roots, max_vertices)
}
