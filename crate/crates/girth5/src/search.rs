//! Backtracking search for graphs satisfying palette/degree/girth
//! constraints, and for relabelings that steer Cayley colors away from a
//! forbidden set.
//!
//! The graph search grows edge sets lexicographically over the candidate
//! list (all allowed pairs sorted by endpoint labels), propagating degree
//! saturation and per-vertex suffix availability, and rejecting any edge
//! whose endpoints are already within distance girth_floor - 2. The first
//! solution in this order is therefore deterministic.

use crate::graph::LabeledGraph;
use crate::group::Group;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search budget of {limit} nodes exhausted{}", stage.as_ref().map(|s| format!(" in stage {s}")).unwrap_or_default())]
    Budget { limit: u64, stage: Option<String> },
    #[error("infeasible problem: {0}")]
    Infeasible(String),
    #[error("malformed problem: {0}")]
    BadProblem(String),
    #[error("carrier of {0} labels exceeds the 64-vertex search capacity")]
    TooLarge(usize),
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum DegreeSpec {
    Regular(usize),
    /// Every carrier label gets `base`, the `upgraded` set gets `base + 1`.
    BiRegular {
        base: usize,
        upgraded: BTreeSet<u64>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchProblem {
    pub group: Group,
    /// Vertex labels; sorted and deduplicated on validation.
    pub carrier: Vec<u64>,
    pub degrees: DegreeSpec,
    /// Allowed Cayley colors (negation-closed, no zero); None allows all.
    pub palette: Option<BTreeSet<u64>>,
    /// Unordered label pairs that may not become edges.
    pub forbidden: BTreeSet<(u64, u64)>,
    /// Any produced graph has girth >= this floor.
    pub girth_floor: usize,
}

impl SearchProblem {
    fn target_degree(&self, label: u64) -> usize {
        match &self.degrees {
            DegreeSpec::Regular(r) => *r,
            DegreeSpec::BiRegular { base, upgraded } => {
                base + usize::from(upgraded.contains(&label))
            }
        }
    }

    fn validate(&self) -> Result<Vec<u64>, SearchError> {
        let mut carrier = self.carrier.clone();
        carrier.sort_unstable();
        carrier.dedup();
        if carrier.len() != self.carrier.len() {
            return Err(SearchError::BadProblem(
                "carrier has repeated labels".into(),
            ));
        }
        if carrier.len() > 64 {
            return Err(SearchError::TooLarge(carrier.len()));
        }
        for &l in &carrier {
            if !self.group.contains(l) {
                return Err(SearchError::BadProblem(format!("label {l} outside group")));
            }
        }
        if let Some(palette) = &self.palette {
            if palette.contains(&self.group.zero()) {
                return Err(SearchError::BadProblem(
                    "palette contains the group zero".into(),
                ));
            }
            for &c in palette {
                if !palette.contains(&self.group.neg(c)) {
                    return Err(SearchError::BadProblem(format!(
                        "palette not closed under negation at {c}"
                    )));
                }
            }
        }
        if let DegreeSpec::BiRegular { upgraded, .. } = &self.degrees {
            for l in upgraded {
                if !carrier.contains(l) {
                    return Err(SearchError::BadProblem(format!(
                        "upgraded label {l} outside carrier"
                    )));
                }
            }
        }
        let total: usize = carrier.iter().map(|&l| self.target_degree(l)).sum();
        if !total.is_multiple_of(2) {
            return Err(SearchError::Infeasible("odd degree sum".into()));
        }
        if self.girth_floor < 3 {
            return Err(SearchError::BadProblem("girth floor below 3".into()));
        }
        Ok(carrier)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Control {
    Stop,
    Continue,
}

struct Searcher<'a> {
    problem: &'a SearchProblem,
    carrier: Vec<u64>,
    candidates: Vec<(usize, usize)>,
    /// suffix[v][pos] = candidates at index >= pos incident to v.
    suffix: Vec<Vec<u32>>,
    target: Vec<usize>,
    deg: Vec<usize>,
    adj: Vec<u64>,
    picked: Vec<(usize, usize)>,
    nodes: u64,
    budget: u64,
}

impl<'a> Searcher<'a> {
    fn new(problem: &'a SearchProblem, budget: u64) -> Result<Self, SearchError> {
        let carrier = problem.validate()?;
        let n = carrier.len();
        let group = problem.group;
        let mut candidates = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (carrier[i], carrier[j]);
                if problem.forbidden.contains(&(a, b)) {
                    continue;
                }
                if let Some(palette) = &problem.palette {
                    if !palette.contains(&group.sub(a, b)) {
                        continue;
                    }
                }
                candidates.push((i, j));
            }
        }
        let mut suffix = vec![vec![0u32; candidates.len() + 1]; n];
        for pos in (0..candidates.len()).rev() {
            for row in suffix.iter_mut() {
                row[pos] = row[pos + 1];
            }
            let (i, j) = candidates[pos];
            suffix[i][pos] += 1;
            suffix[j][pos] += 1;
        }
        let target: Vec<usize> = carrier.iter().map(|&l| problem.target_degree(l)).collect();
        Ok(Searcher {
            problem,
            deg: vec![0; n],
            adj: vec![0; n],
            picked: Vec::new(),
            nodes: 0,
            budget,
            candidates,
            suffix,
            target,
            carrier,
        })
    }

    /// Up-front infeasibility: some vertex cannot reach its target degree
    /// even using every candidate edge.
    fn feasible(&self) -> Result<(), SearchError> {
        for v in 0..self.carrier.len() {
            if (self.suffix[v][0] as usize) < self.target[v] {
                return Err(SearchError::Infeasible(format!(
                    "label {} needs degree {} but only {} candidate edges touch it",
                    self.carrier[v], self.target[v], self.suffix[v][0]
                )));
            }
        }
        Ok(())
    }

    /// True when u and v are within `limit` hops in the partial graph.
    fn within_distance(&self, u: usize, v: usize, limit: usize) -> bool {
        let mut ball = 1u64 << u;
        for _ in 0..limit {
            let mut next = ball;
            let mut rest = ball;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[w];
            }
            if next == ball {
                break;
            }
            ball = next;
        }
        ball >> v & 1 == 1
    }

    fn solution_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::with_labels(self.problem.group, self.carrier.clone()).unwrap();
        for &(i, j) in &self.picked {
            g.add_edge(i, j).unwrap();
        }
        g
    }

    fn run(
        &mut self,
        start: usize,
        visitor: &mut dyn FnMut(&LabeledGraph) -> Control,
    ) -> Result<Control, SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::Budget {
                limit: self.budget,
                stage: None,
            });
        }
        let n = self.carrier.len();
        let mut deficit_total = 0;
        for v in 0..n {
            let deficit = self.target[v] - self.deg[v];
            deficit_total += deficit;
            if deficit > self.suffix[v][start] as usize {
                return Ok(Control::Continue);
            }
        }
        if deficit_total == 0 {
            let g = self.solution_graph();
            debug_assert!(g.girth().is_none_or(|g| g >= self.problem.girth_floor));
            return Ok(visitor(&g));
        }
        if deficit_total > 2 * (self.candidates.len() - start) {
            return Ok(Control::Continue);
        }
        let floor_gap = self.problem.girth_floor - 2;
        for pos in start..self.candidates.len() {
            let (u, v) = self.candidates[pos];
            let fits = self.deg[u] < self.target[u]
                && self.deg[v] < self.target[v]
                && !self.within_distance(u, v, floor_gap);
            if fits {
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.adj[u] |= 1 << v;
                self.adj[v] |= 1 << u;
                self.picked.push((u, v));
                let flow = self.run(pos + 1, visitor)?;
                self.picked.pop();
                self.adj[u] &= !(1 << v);
                self.adj[v] &= !(1 << u);
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                if flow == Control::Stop {
                    return Ok(Control::Stop);
                }
            }
            // Moving past `pos` discards this edge for the whole subtree; if
            // an endpoint depended on it, the subtree is empty.
            if self.target[u] - self.deg[u] > self.suffix[u][pos + 1] as usize
                || self.target[v] - self.deg[v] > self.suffix[v][pos + 1] as usize
            {
                return Ok(Control::Continue);
            }
        }
        Ok(Control::Continue)
    }
}

/// Enumerates solutions in deterministic lexicographic order, calling
/// `visitor` on each; stops early when the visitor says so.
pub fn enumerate_solutions(
    problem: &SearchProblem,
    budget: u64,
    visitor: &mut dyn FnMut(&LabeledGraph) -> Control,
) -> Result<(), SearchError> {
    let mut searcher = Searcher::new(problem, budget)?;
    searcher.feasible()?;
    searcher.run(0, visitor)?;
    Ok(())
}

/// First solution in deterministic branch order, or None when the space is
/// exhausted. Budget overruns are an error, not a silent miss.
pub fn search_graph(
    problem: &SearchProblem,
    budget: u64,
) -> Result<Option<LabeledGraph>, SearchError> {
    let mut found = None;
    enumerate_solutions(problem, budget, &mut |g| {
        found = Some(g.clone());
        Control::Stop
    })?;
    if let Some(g) = &found {
        debug_assert!(g.girth().is_none_or(|gi| gi >= problem.girth_floor));
    }
    Ok(found)
}

/// The four graphs of a bi-regular amalgamation, in install order.
#[derive(Clone, Debug)]
pub struct Quadruple {
    pub h0: LabeledGraph,
    pub h1: LabeledGraph,
    pub g0: LabeledGraph,
    pub g1: LabeledGraph,
}

/// Constraint data for one searched quadruple: the degree-4 label set shared
/// by both block graphs, their color palettes, and the regularity of the
/// restricted graphs.
#[derive(Clone, Debug)]
pub struct QuadrupleConstraints {
    pub q: u64,
    pub group: Group,
    pub degree4: BTreeSet<u64>,
    pub palette_g0: BTreeSet<u64>,
    pub palette_g1: BTreeSet<u64>,
    pub base_degree: usize,
}

impl QuadrupleConstraints {
    fn block_graph_problem(&self, palette: &BTreeSet<u64>) -> SearchProblem {
        SearchProblem {
            group: self.group,
            carrier: self.group.elements().collect(),
            degrees: DegreeSpec::BiRegular {
                base: self.base_degree,
                upgraded: self.degree4.clone(),
            },
            palette: Some(palette.clone()),
            forbidden: BTreeSet::new(),
            girth_floor: 5,
        }
    }

    fn restricted_problem(&self, forbidden: BTreeSet<(u64, u64)>) -> SearchProblem {
        SearchProblem {
            group: self.group,
            carrier: self
                .group
                .elements()
                .filter(|l| !self.degree4.contains(l))
                .collect(),
            degrees: DegreeSpec::Regular(self.base_degree),
            palette: None,
            forbidden,
            girth_floor: 5,
        }
    }
}

fn stage_err(e: SearchError, stage: &str) -> SearchError {
    match e {
        SearchError::Budget { limit, .. } => SearchError::Budget {
            limit,
            stage: Some(stage.to_string()),
        },
        other => other,
    }
}

/// Solves the four stages in sequence with full cross-stage backtracking:
/// g0, then g1, then h0 avoiding E(g1), then h1 avoiding E(h0) and E(g0).
/// The result passes the bi-regular quadruple check by construction; the
/// first quadruple in lexicographic stage order is returned.
pub fn search_quadruple(
    constraints: &QuadrupleConstraints,
    budget_per_stage: u64,
) -> Result<Quadruple, SearchError> {
    use std::cell::RefCell;
    let result: RefCell<Option<Quadruple>> = RefCell::new(None);
    let error: RefCell<Option<SearchError>> = RefCell::new(None);

    let p_g0 = constraints.block_graph_problem(&constraints.palette_g0);
    let p_g1 = constraints.block_graph_problem(&constraints.palette_g1);

    let outcome = enumerate_solutions(&p_g0, budget_per_stage, &mut |g0| {
        let g0_edges = g0.edge_labels().unwrap();
        let inner = enumerate_solutions(&p_g1, budget_per_stage, &mut |g1| {
            let g1_edges = g1.edge_labels().unwrap();
            let p_h0 = constraints.restricted_problem(g1_edges.clone());
            let inner = enumerate_solutions(&p_h0, budget_per_stage, &mut |h0| {
                let mut blocked = h0.edge_labels().unwrap();
                blocked.extend(g0_edges.iter().copied());
                let p_h1 = constraints.restricted_problem(blocked);
                let inner = enumerate_solutions(&p_h1, budget_per_stage, &mut |h1| {
                    let quad = Quadruple {
                        h0: h0.clone(),
                        h1: h1.clone(),
                        g0: g0.clone(),
                        g1: g1.clone(),
                    };
                    let report = crate::amalgam::check_biregular_quadruple(
                        &quad.h0, &quad.h1, &quad.g0, &quad.g1,
                    )
                    .expect("searched graphs share the group");
                    if report.ok() {
                        *result.borrow_mut() = Some(quad);
                        Control::Stop
                    } else {
                        Control::Continue
                    }
                });
                match inner {
                    Err(e) => {
                        *error.borrow_mut() = Some(stage_err(e, "h1"));
                        Control::Stop
                    }
                    Ok(()) if result.borrow().is_some() => Control::Stop,
                    Ok(()) => Control::Continue,
                }
            });
            match inner {
                Err(e) => {
                    if error.borrow().is_none() {
                        *error.borrow_mut() = Some(stage_err(e, "h0"));
                    }
                    Control::Stop
                }
                Ok(()) if result.borrow().is_some() || error.borrow().is_some() => Control::Stop,
                Ok(()) => Control::Continue,
            }
        });
        match inner {
            Err(e) => {
                if error.borrow().is_none() {
                    *error.borrow_mut() = Some(stage_err(e, "g1"));
                }
                Control::Stop
            }
            Ok(()) if result.borrow().is_some() || error.borrow().is_some() => Control::Stop,
            Ok(()) => Control::Continue,
        }
    });
    if let Err(e) = outcome {
        return Err(stage_err(e, "g0"));
    }
    if let Some(e) = error.into_inner() {
        return Err(e);
    }
    result
        .into_inner()
        .ok_or_else(|| SearchError::Infeasible("quadruple space exhausted".into()))
}

/// Searches for a vertex relabeling of `g` (labeled bijectively onto its
/// group) whose image has no Cayley color inside `forbidden`. Returns the
/// permutation as a map old-label -> new-label, or None when exhausted.
pub fn search_relabel_partner(
    g: &LabeledGraph,
    forbidden: &BTreeSet<u64>,
    budget: u64,
) -> Result<Option<Vec<u64>>, SearchError> {
    if !g.labels_cover_group() {
        return Err(SearchError::BadProblem(
            "relabeling needs a bijective labeling onto the group".into(),
        ));
    }
    let group = g.group().unwrap();
    let n = group.order() as usize;
    if n > 64 {
        return Err(SearchError::TooLarge(n));
    }
    // adjacency by label
    let labels = g.labels().unwrap();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        let (a, b) = (labels[u as usize] as usize, labels[v as usize] as usize);
        adj[a].push(b);
        adj[b].push(a);
    }
    struct RelabelSearch<'a> {
        group: Group,
        adj: &'a [Vec<usize>],
        forbidden: &'a BTreeSet<u64>,
        image: Vec<u64>,
        used: Vec<bool>,
        nodes: u64,
        budget: u64,
    }

    impl RelabelSearch<'_> {
        /// Assigns an image to label v, images tried in ascending order;
        /// every edge to an already-assigned label must avoid the forbidden
        /// colors.
        fn assign(&mut self, v: usize) -> Result<bool, SearchError> {
            let n = self.image.len();
            if v == n {
                return Ok(true);
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(SearchError::Budget {
                    limit: self.budget,
                    stage: Some("relabel".into()),
                });
            }
            'candidate: for c in 0..n as u64 {
                if self.used[c as usize] {
                    continue;
                }
                for &w in &self.adj[v] {
                    if w < v {
                        let color = self.group.sub(c, self.image[w]);
                        if self.forbidden.contains(&color)
                            || self.forbidden.contains(&self.group.neg(color))
                        {
                            continue 'candidate;
                        }
                    }
                }
                self.image[v] = c;
                self.used[c as usize] = true;
                if self.assign(v + 1)? {
                    return Ok(true);
                }
                self.used[c as usize] = false;
                self.image[v] = u64::MAX;
            }
            Ok(false)
        }
    }

    let mut search = RelabelSearch {
        group,
        adj: &adj,
        forbidden,
        image: vec![u64::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
    };
    let found = search.assign(0)?;
    Ok(found.then_some(search.image))
}

/// Applies a label permutation: edge {a, b} becomes {perm[a], perm[b]} on the
/// identity-labeled copy of the group.
pub fn apply_relabeling(g: &LabeledGraph, perm: &[u64]) -> LabeledGraph {
    let group = g.group().expect("relabeling needs a group");
    let labels = g.labels().expect("relabeling needs labels");
    let mut out = LabeledGraph::with_identity_labels(group);
    for &(u, v) in g.edges() {
        let a = perm[labels[u as usize] as usize];
        let b = perm[labels[v as usize] as usize];
        out.add_edge(a as usize, b as usize).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semicirculant::SemicirculantSpec;

    fn pm(group: &Group, vals: &[i64]) -> BTreeSet<u64> {
        vals.iter()
            .flat_map(|&v| {
                let x = v.rem_euclid(group.order() as i64) as u64;
                [x, group.neg(x)]
            })
            .collect()
    }

    #[test]
    fn single_color_class_cannot_reach_degree_three() {
        let group = Group::Cyclic(17);
        let problem = SearchProblem {
            group,
            carrier: group.elements().collect(),
            degrees: DegreeSpec::Regular(3),
            palette: Some(pm(&group, &[1])),
            forbidden: BTreeSet::new(),
            girth_floor: 5,
        };
        // A single +-color gives maximum degree 2.
        match search_graph(&problem, 1_000_000) {
            Err(SearchError::Infeasible(_)) => {}
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn petersen_shape_from_ten_labels() {
        // 3-regular girth-5 on 10 vertices forces the Petersen parameters.
        let group = Group::Cyclic(16);
        let carrier: Vec<u64> = vec![1, 2, 4, 5, 7, 8, 10, 11, 13, 14];
        let problem = SearchProblem {
            group,
            carrier,
            degrees: DegreeSpec::Regular(3),
            palette: None,
            forbidden: BTreeSet::new(),
            girth_floor: 5,
        };
        let g = search_graph(&problem, 10_000_000).unwrap().expect("exists");
        assert_eq!(g.vertex_count(), 10);
        assert!(g.is_regular(3));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn search_is_deterministic() {
        let group = Group::Cyclic(12);
        let problem = SearchProblem {
            group,
            carrier: group.elements().collect(),
            degrees: DegreeSpec::Regular(3),
            palette: None,
            forbidden: BTreeSet::new(),
            girth_floor: 5,
        };
        let a = search_graph(&problem, 10_000_000).unwrap().unwrap();
        let b = search_graph(&problem, 10_000_000).unwrap().unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.girth(), Some(5));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let group = Group::Cyclic(16);
        let problem = SearchProblem {
            group,
            carrier: group.elements().collect(),
            degrees: DegreeSpec::Regular(3),
            palette: None,
            forbidden: BTreeSet::new(),
            girth_floor: 6,
        };
        match search_graph(&problem, 5) {
            Err(SearchError::Budget { limit: 5, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn relabel_identity_when_nothing_forbidden() {
        let g = SemicirculantSpec::finite(14, None, &[1, -1, 5])
            .unwrap()
            .build()
            .unwrap();
        let perm = search_relabel_partner(&g, &BTreeSet::new(), 1_000_000)
            .unwrap()
            .unwrap();
        assert_eq!(perm, (0..14).collect::<Vec<u64>>());
    }

    #[test]
    fn relabel_partner_for_order_40_cage() {
        let g = SemicirculantSpec::finite(40, Some((8, 16)), &[1, -1, 5, -13])
            .unwrap()
            .build()
            .unwrap();
        let mut forbidden = g.cayley_colors().unwrap();
        forbidden.insert(0);
        let perm = search_relabel_partner(&g, &forbidden, DEFAULT_BUDGET)
            .unwrap()
            .expect("a color-avoiding relabeling exists");
        let partner = apply_relabeling(&g, &perm);
        assert!(partner.cayley_colors().unwrap().is_disjoint(&forbidden));
        assert!(partner.is_regular(6));
        assert_eq!(partner.girth(), Some(5));
    }

    #[test]
    fn relabel_partner_for_foster_graph() {
        let g = SemicirculantSpec::finite(30, Some((6, 12)), &[1, -1, 9])
            .unwrap()
            .build()
            .unwrap();
        let mut forbidden = g.cayley_colors().unwrap();
        forbidden.insert(0);
        let perm = search_relabel_partner(&g, &forbidden, DEFAULT_BUDGET)
            .unwrap()
            .expect("a color-avoiding relabeling exists");
        let partner = apply_relabeling(&g, &perm);
        let colors = partner.cayley_colors().unwrap();
        assert!(colors.is_disjoint(&forbidden));
        assert!(partner.is_regular(5));
        assert_eq!(partner.girth(), Some(5));
    }
}
