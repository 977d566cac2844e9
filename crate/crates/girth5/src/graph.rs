//! Simple undirected graphs with exact girth/diameter computation, degree
//! profiles and Cayley colors relative to an abelian group labeling.
//!
//! Vertex identity is a dense index assigned at construction; group labels are
//! attached data. All-sources BFS sweeps (girth, diameter) fan out across
//! sources with rayon and reduce by min/max, which is schedule independent.

use crate::group::Group;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph carries no group labeling")]
    MissingLabels,
    #[error("vertex {0} has no label")]
    UnlabeledVertex(usize),
    #[error("graphs are labeled over different groups")]
    GroupMismatch,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("label {0} outside the group carrier")]
    LabelOutOfRange(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
    group: Option<Group>,
    labels: Option<Vec<u64>>,
}

impl LabeledGraph {
    pub fn new(n: usize) -> LabeledGraph {
        LabeledGraph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            group: None,
            labels: None,
        }
    }

    /// A graph whose vertex i carries label `labels[i]` from `group`.
    pub fn with_labels(group: Group, labels: Vec<u64>) -> Result<LabeledGraph, GraphError> {
        for &l in &labels {
            if !group.contains(l) {
                return Err(GraphError::LabelOutOfRange(l));
            }
        }
        Ok(LabeledGraph {
            adj: vec![Vec::new(); labels.len()],
            edges: Vec::new(),
            group: Some(group),
            labels: Some(labels),
        })
    }

    /// Convenience: vertex i labeled i over the whole carrier of `group`.
    pub fn with_identity_labels(group: Group) -> LabeledGraph {
        let n = group.order();
        LabeledGraph::with_labels(group, (0..n).collect()).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn group(&self) -> Option<Group> {
        self.group
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<u64> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let pos_u = self.adj[u].binary_search(&(v as u32)).unwrap_err();
        self.adj[u].insert(pos_u, v as u32);
        let pos_v = self.adj[v].binary_search(&(u as u32)).unwrap_err();
        self.adj[v].insert(pos_v, u as u32);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.push((a as u32, b as u32));
        Ok(())
    }

    /// Exact degree histogram as (degree, count), ascending by degree.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for nbrs in &self.adj {
            *hist.entry(nbrs.len()).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|nbrs| nbrs.len() == k)
    }

    /// True when every degree lies in {k1, k2}.
    pub fn is_biregular(&self, k1: usize, k2: usize) -> bool {
        self.adj.iter().all(|n| n.len() == k1 || n.len() == k2)
    }

    /// Exact girth via shortest-cycle BFS from every vertex, None for forests.
    /// Each BFS is cut off at depth floor((best-1)/2), which still sees every
    /// cycle through its source shorter than the current best.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 || self.edges.is_empty() {
            return None;
        }
        let best = AtomicUsize::new(usize::MAX);
        (0..n).into_par_iter().for_each_init(
            || (vec![u32::MAX; n], vec![u32::MAX; n], VecDeque::new()),
            |(dist, parent, queue), s| {
                let bound = best.load(Ordering::Relaxed);
                if let Some(found) = self.shortest_cycle_from(s, bound, dist, parent, queue) {
                    best.fetch_min(found, Ordering::Relaxed);
                }
            },
        );
        match best.load(Ordering::Relaxed) {
            usize::MAX => None,
            g => Some(g),
        }
    }

    /// Shortest cycle visible from source `s` that is shorter than `bound`.
    fn shortest_cycle_from(
        &self,
        s: usize,
        bound: usize,
        dist: &mut [u32],
        parent: &mut [u32],
        queue: &mut VecDeque<u32>,
    ) -> Option<usize> {
        // A cycle of length c < bound through s is witnessed by a non-tree
        // edge whose shallower endpoint sits at depth <= ceil(bound/2) - 1,
        // so expanding vertices strictly below ceil(bound/2) suffices.
        let radius = match bound {
            usize::MAX => self.vertex_count(),
            b => b.div_ceil(2),
        };
        let mut best_here = usize::MAX;
        dist.fill(u32::MAX);
        queue.clear();
        dist[s] = 0;
        parent[s] = u32::MAX;
        queue.push_back(s as u32);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize] as usize;
            if du >= radius {
                continue;
            }
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = (du + 1) as u32;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    // Non-tree edge: closes a cycle through paths to s.
                    let len = du + dist[w as usize] as usize + 1;
                    if len < best_here {
                        best_here = len;
                    }
                }
            }
        }
        (best_here < bound).then_some(best_here)
    }

    /// Maximum eccentricity over all vertices via all-sources BFS.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(0);
        }
        let ecc: Vec<Option<usize>> = (0..n)
            .into_par_iter()
            .map(|s| self.eccentricity(s))
            .collect();
        let mut diameter = 0;
        for e in ecc {
            match e {
                Some(e) => diameter = diameter.max(e),
                None => return Err(GraphError::Disconnected),
            }
        }
        Ok(diameter)
    }

    fn eccentricity(&self, s: usize) -> Option<usize> {
        let n = self.vertex_count();
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s as u32);
        let mut seen = 1;
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    ecc = ecc.max(dist[w as usize] as usize);
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        (seen == n).then_some(ecc)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.eccentricity(0).is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u as usize] {
                    if side[w as usize] == u8::MAX {
                        side[w as usize] = 1 - side[u as usize];
                        queue.push_back(w);
                    } else if side[w as usize] == side[u as usize] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The set { +-(label(u) - label(v)) : uv an edge }. Never contains the
    /// group zero on loop-free graphs with distinct endpoint labels.
    pub fn cayley_colors(&self) -> Result<BTreeSet<u64>, GraphError> {
        let group = self.group.ok_or(GraphError::MissingLabels)?;
        let labels = self.labels.as_ref().ok_or(GraphError::MissingLabels)?;
        let mut colors = BTreeSet::new();
        for &(u, v) in &self.edges {
            let d = group.sub(labels[u as usize], labels[v as usize]);
            colors.insert(d);
            colors.insert(group.neg(d));
        }
        Ok(colors)
    }

    /// Edge set as unordered label pairs (lo, hi).
    pub fn edge_labels(&self) -> Result<BTreeSet<(u64, u64)>, GraphError> {
        let labels = self.labels.as_ref().ok_or(GraphError::MissingLabels)?;
        Ok(self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labels[u as usize], labels[v as usize]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect())
    }

    /// True when the labeling is a bijection onto the full group carrier.
    pub fn labels_cover_group(&self) -> bool {
        match (&self.group, &self.labels) {
            (Some(g), Some(labels)) => {
                let set: BTreeSet<u64> = labels.iter().copied().collect();
                set.len() == labels.len() && labels.len() as u64 == g.order()
            }
            _ => false,
        }
    }

    /// Subgraph induced by `keep` (ids renumbered in the order given).
    pub fn induced(&self, keep: &[usize]) -> LabeledGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut out = LabeledGraph::new(keep.len());
        out.group = self.group;
        out.labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&old| l[old]).collect());
        for &(u, v) in &self.edges {
            let (nu, nv) = (index[u as usize], index[v as usize]);
            if nu != usize::MAX && nv != usize::MAX {
                out.add_edge(nu, nv).unwrap();
            }
        }
        out
    }
}

pub fn colors_disjoint(g0: &LabeledGraph, g1: &LabeledGraph) -> Result<bool, GraphError> {
    match (g0.group(), g1.group()) {
        (Some(a), Some(b)) if a == b => {}
        (Some(_), Some(_)) => return Err(GraphError::GroupMismatch),
        _ => return Err(GraphError::MissingLabels),
    }
    let c0 = g0.cayley_colors()?;
    let c1 = g1.cayley_colors()?;
    Ok(c0.intersection(&c1).next().is_none())
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> LabeledGraph {
    let mut g = LabeledGraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, 5 + i).unwrap();
    }
    g
}

pub fn cycle_graph(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

pub fn complete_graph(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_of_cycles() {
        for n in 3..=12 {
            assert_eq!(cycle_graph(n).girth(), Some(n));
        }
    }

    #[test]
    fn girth_of_petersen() {
        let p = petersen();
        assert_eq!(p.girth(), Some(5));
        assert_eq!(p.degree_profile(), vec![(3, 10)]);
        assert_eq!(p.diameter().unwrap(), 2);
    }

    #[test]
    fn girth_of_forest_is_infinite() {
        let mut g = LabeledGraph::new(5);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(3, 4).unwrap();
        assert_eq!(g.girth(), None);
        assert_eq!(LabeledGraph::new(3).girth(), None);
    }

    #[test]
    fn degree_profile_of_empty_graph() {
        assert_eq!(LabeledGraph::new(7).degree_profile(), vec![(0, 7)]);
    }

    #[test]
    fn diameter_of_complete_graph() {
        assert_eq!(complete_graph(4).diameter().unwrap(), 1);
    }

    #[test]
    fn diameter_of_disconnected_graph_errors() {
        let mut g = LabeledGraph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert_eq!(g.diameter().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = LabeledGraph::new(3);
        assert_eq!(g.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop(1));
        g.add_edge(0, 1).unwrap();
        assert_eq!(
            g.add_edge(1, 0).unwrap_err(),
            GraphError::DuplicateEdge(1, 0)
        );
        assert_eq!(
            g.add_edge(0, 9).unwrap_err(),
            GraphError::VertexOutOfRange(9)
        );
    }

    #[test]
    fn cayley_colors_of_edgeless_graph() {
        let g = LabeledGraph::with_identity_labels(Group::Cyclic(9));
        assert!(g.cayley_colors().unwrap().is_empty());
    }

    #[test]
    fn cayley_colors_are_negation_closed() {
        let mut g = LabeledGraph::with_identity_labels(Group::Cyclic(10));
        g.add_edge(0, 3).unwrap();
        let colors = g.cayley_colors().unwrap();
        assert_eq!(colors, BTreeSet::from([3, 7]));
        assert!(!colors.contains(&0));
    }

    #[test]
    fn colors_translation_invariant() {
        let group = Group::Cyclic(12);
        let mut g = LabeledGraph::with_identity_labels(group);
        g.add_edge(0, 5).unwrap();
        g.add_edge(2, 3).unwrap();
        let base = g.cayley_colors().unwrap();
        for shift in 0..12 {
            let labels = (0..12).map(|v| group.add(v, shift)).collect();
            let mut h = LabeledGraph::with_labels(group, labels).unwrap();
            h.add_edge(0, 5).unwrap();
            h.add_edge(2, 3).unwrap();
            assert_eq!(h.cayley_colors().unwrap(), base);
        }
    }

    #[test]
    fn colors_disjoint_self_is_false() {
        let mut g = LabeledGraph::with_identity_labels(Group::Cyclic(6));
        g.add_edge(0, 1).unwrap();
        assert!(!colors_disjoint(&g, &g).unwrap());
    }

    #[test]
    fn colors_disjoint_group_mismatch() {
        let g0 = LabeledGraph::with_identity_labels(Group::Cyclic(6));
        let g1 = LabeledGraph::with_identity_labels(Group::Cyclic(8));
        assert_eq!(
            colors_disjoint(&g0, &g1).unwrap_err(),
            GraphError::GroupMismatch
        );
    }

    #[test]
    fn girth_after_vertex_deletion_never_decreases() {
        let g = petersen();
        let g_girth = g.girth().unwrap();
        for drop in 0..10 {
            let keep: Vec<usize> = (0..10).filter(|&v| v != drop).collect();
            let sub = g.induced(&keep);
            if let Some(sub_girth) = sub.girth() {
                assert!(sub_girth >= g_girth);
            }
        }
    }
}
