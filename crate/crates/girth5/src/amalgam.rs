//! Amalgamation of labeled graphs into the blocks of a Levi graph, block-pair
//! deletion, and the closed-form order bounds.
//!
//! For type L a suitable pair (g0, g1) is copied into every point block and
//! every line block through the in-block labels. For type C the bi-regular
//! form installs g0/g1 into the nonzero blocks and the degree-completing
//! graphs h0/h1 into the restricted zero blocks P'_0/L'_0, which keep only
//! the labels of V(h0)/V(h1); the regular form is the special case h_i = g_i.
//!
//! Every amalgam and every deletion is re-verified by direct degree and girth
//! computation before it is returned: the construction predicts, BFS decides.

use crate::graph::{colors_disjoint, LabeledGraph};
use crate::semiplane::{BlockedLevi, LeviKind};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AmalgamError {
    #[error("installed graphs must be labeled over the base block group")]
    GroupMismatch,
    #[error("labels of graph {0} are not injective into the block group")]
    BadLabels(usize),
    #[error("pair rejected: {0}")]
    PairRejected(SuitabilityReport),
    #[error("quadruple rejected: {0}")]
    QuadrupleRejected(QuadrupleReport),
    #[error("amalgam failed verification: expected {expected_k}-regular girth >= 5, got degrees {profile:?} girth {girth:?}")]
    VerificationFailed {
        expected_k: usize,
        profile: Vec<(usize, usize)>,
        girth: Option<usize>,
    },
    #[error("cannot delete {requested} block pairs, only {removable} are removable")]
    TooManyDeletions { requested: usize, removable: usize },
    #[error("regularity {k} out of range for this bound (max {max})")]
    BoundOutOfRange { k: u64, max: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuitabilityViolation {
    NotRegular { which: usize },
    DifferentRegularity { left: usize, right: usize },
    GirthBelowFive { which: usize, girth: usize },
    SharedColors { count: usize },
}

#[derive(Clone, Debug)]
pub struct SuitabilityReport {
    pub regularity: Option<usize>,
    pub violations: Vec<SuitabilityViolation>,
}

impl SuitabilityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SuitabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "suitable pair, regularity {:?}", self.regularity)
        } else {
            write!(f, "{:?}", self.violations)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadrupleViolation {
    BlockGraphLabels {
        which: usize,
    },
    BlockGraphDegrees {
        which: usize,
    },
    BlockGraphGirth {
        which: usize,
        girth: usize,
    },
    RestrictedVertexSet {
        which: usize,
    },
    RestrictedNotRegular {
        which: usize,
    },
    RestrictedGirth {
        which: usize,
        girth: usize,
    },
    SharedEdges {
        left: &'static str,
        right: &'static str,
    },
    SharedColors {
        count: usize,
    },
}

impl QuadrupleViolation {
    /// Which hypothesis clause the violation falls under.
    pub fn clause(&self) -> &'static str {
        match self {
            QuadrupleViolation::BlockGraphLabels { .. }
            | QuadrupleViolation::BlockGraphDegrees { .. }
            | QuadrupleViolation::BlockGraphGirth { .. } => "(i)",
            QuadrupleViolation::RestrictedVertexSet { .. }
            | QuadrupleViolation::RestrictedNotRegular { .. }
            | QuadrupleViolation::RestrictedGirth { .. } => "(ii)",
            QuadrupleViolation::SharedEdges { .. } | QuadrupleViolation::SharedColors { .. } => {
                "(iii)"
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadrupleReport {
    pub regularity: Option<usize>,
    pub violations: Vec<QuadrupleViolation>,
}

impl QuadrupleReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for QuadrupleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "valid quadruple, regularity {:?}", self.regularity)
        } else {
            let clauses: Vec<String> = self
                .violations
                .iter()
                .map(|v| format!("{} {:?}", v.clause(), v))
                .collect();
            write!(f, "{}", clauses.join("; "))
        }
    }
}

fn girth_at_least_5(g: &LabeledGraph) -> (bool, Option<usize>) {
    let girth = g.girth();
    (girth.is_none_or(|g| g >= 5), girth)
}

/// Both graphs r-regular for a common r, girth >= 5, labeled bijectively onto
/// the same group carrier, with disjoint Cayley colors.
pub fn check_suitable_pair(
    g0: &LabeledGraph,
    g1: &LabeledGraph,
) -> Result<SuitabilityReport, AmalgamError> {
    for (i, g) in [g0, g1].into_iter().enumerate() {
        if !g.labels_cover_group() {
            return Err(AmalgamError::BadLabels(i));
        }
    }
    if g0.group() != g1.group() {
        return Err(AmalgamError::GroupMismatch);
    }
    let mut violations = Vec::new();
    let mut regularity = None;
    let r0 = g0.degree(0);
    let r1 = g1.degree(0);
    match (g0.is_regular(r0), g1.is_regular(r1)) {
        (true, true) if r0 == r1 => regularity = Some(r0),
        (true, true) => violations.push(SuitabilityViolation::DifferentRegularity {
            left: r0,
            right: r1,
        }),
        (a, b) => {
            if !a {
                violations.push(SuitabilityViolation::NotRegular { which: 0 });
            }
            if !b {
                violations.push(SuitabilityViolation::NotRegular { which: 1 });
            }
        }
    }
    for (i, g) in [g0, g1].into_iter().enumerate() {
        let (ok, girth) = girth_at_least_5(g);
        if !ok {
            violations.push(SuitabilityViolation::GirthBelowFive {
                which: i,
                girth: girth.unwrap(),
            });
        }
    }
    if !colors_disjoint(g0, g1).expect("labels checked above") {
        let shared = g0
            .cayley_colors()
            .unwrap()
            .intersection(&g1.cayley_colors().unwrap())
            .count();
        violations.push(SuitabilityViolation::SharedColors { count: shared });
    }
    Ok(SuitabilityReport {
        regularity,
        violations,
    })
}

/// Literal check of the three amalgamation hypotheses for the quadruple
/// (h0, h1, g0, g1): the block graphs g_i are (r, r+1)-regular of girth at
/// least 5 on the full carrier; each restricted graph h_i is r-regular of
/// girth at least 5 on exactly the degree-r vertices of the opposite block
/// graph; the edge sets h0/h1, h0/g1, h1/g0 are disjoint and g0, g1 have
/// disjoint Cayley colors. Regular g_i (with h_i = g_i) satisfy the same
/// conditions.
pub fn check_biregular_quadruple(
    h0: &LabeledGraph,
    h1: &LabeledGraph,
    g0: &LabeledGraph,
    g1: &LabeledGraph,
) -> Result<QuadrupleReport, AmalgamError> {
    let group = g0.group().ok_or(AmalgamError::GroupMismatch)?;
    for g in [h0, h1, g1] {
        if g.group() != Some(group) {
            return Err(AmalgamError::GroupMismatch);
        }
    }
    for (i, g) in [h0, h1, g0, g1].into_iter().enumerate() {
        let labels = g.labels().ok_or(AmalgamError::BadLabels(i))?;
        let set: BTreeSet<u64> = labels.iter().copied().collect();
        if set.len() != labels.len() {
            return Err(AmalgamError::BadLabels(i));
        }
    }

    let mut violations = Vec::new();
    // r is the smaller degree of the block graphs.
    let r = g0.degree_profile().first().map(|&(d, _)| d).unwrap_or(0);

    // (i) block graphs
    for (i, g) in [g0, g1].into_iter().enumerate() {
        if !g.labels_cover_group() {
            violations.push(QuadrupleViolation::BlockGraphLabels { which: i });
            continue;
        }
        if !g.is_biregular(r, r + 1) {
            violations.push(QuadrupleViolation::BlockGraphDegrees { which: i });
        }
        let (ok, girth) = girth_at_least_5(g);
        if !ok {
            violations.push(QuadrupleViolation::BlockGraphGirth {
                which: i,
                girth: girth.unwrap(),
            });
        }
    }

    // (ii) restricted graphs live on the degree-r vertices of the opposite
    // block graph.
    for (i, (h, opposite)) in [(h0, g1), (h1, g0)].into_iter().enumerate() {
        let want: BTreeSet<u64> = opposite
            .labels()
            .unwrap()
            .iter()
            .enumerate()
            .filter(|&(v, _)| opposite.degree(v) == r)
            .map(|(_, &l)| l)
            .collect();
        let have: BTreeSet<u64> = h.labels().unwrap().iter().copied().collect();
        if want != have {
            violations.push(QuadrupleViolation::RestrictedVertexSet { which: i });
        }
        if !h.is_regular(r) {
            violations.push(QuadrupleViolation::RestrictedNotRegular { which: i });
        }
        let (ok, girth) = girth_at_least_5(h);
        if !ok {
            violations.push(QuadrupleViolation::RestrictedGirth {
                which: i,
                girth: girth.unwrap(),
            });
        }
    }

    // (iii) edge disjointness and color disjointness.
    let edge_sets: Vec<BTreeSet<(u64, u64)>> = [h0, h1, g0, g1]
        .into_iter()
        .map(|g| g.edge_labels().expect("labels checked above"))
        .collect();
    for (a, b, left, right) in [
        (0usize, 1usize, "h0", "h1"),
        (0, 3, "h0", "g1"),
        (1, 2, "h1", "g0"),
    ] {
        if edge_sets[a].intersection(&edge_sets[b]).next().is_some() {
            violations.push(QuadrupleViolation::SharedEdges { left, right });
        }
    }
    if !colors_disjoint(g0, g1).expect("groups checked above") {
        let shared = g0
            .cayley_colors()
            .unwrap()
            .intersection(&g1.cayley_colors().unwrap())
            .count();
        violations.push(QuadrupleViolation::SharedColors { count: shared });
    }

    Ok(QuadrupleReport {
        regularity: Some(r),
        violations,
    })
}

/// A verified amalgam together with its surviving block partition.
#[derive(Clone, Debug)]
pub struct AmalgamOutput {
    pub graph: LabeledGraph,
    pub kind: LeviKind,
    pub q: u64,
    /// Regularity r of the installed graphs.
    pub install_regularity: usize,
    /// Current regularity: q + r - deletions.
    pub regularity: usize,
    pub deletions: usize,
    pub girth: usize,
    pub point_blocks: Vec<Vec<u32>>,
    pub line_blocks: Vec<Vec<u32>>,
}

impl AmalgamOutput {
    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }
}

fn verify(graph: &LabeledGraph, expected_k: usize) -> Result<usize, AmalgamError> {
    let girth = graph.girth();
    let girth_ok = girth.is_some_and(|g| g >= 5);
    if !graph.is_regular(expected_k) || !girth_ok {
        return Err(AmalgamError::VerificationFailed {
            expected_k,
            profile: graph.degree_profile(),
            girth,
        });
    }
    Ok(girth.unwrap())
}

/// Copies `install` into the block whose vertex for label l is `lookup(l)`.
fn install_block(graph: &mut LabeledGraph, install: &LabeledGraph, lookup: impl Fn(u64) -> u32) {
    let labels = install.labels().expect("installed graphs are labeled");
    for &(u, v) in install.edges() {
        let a = lookup(labels[u as usize]);
        let b = lookup(labels[v as usize]);
        graph
            .add_edge(a as usize, b as usize)
            .expect("block copies never collide with Levi edges");
    }
}

/// Bi-regular amalgamation into the type-C Levi graph. The zero blocks are
/// restricted to the labels of V(h0) resp. V(h1) and receive h0/h1; every
/// other point block receives g0 and every other line block g1.
pub fn amalgamate_c(
    base: &BlockedLevi,
    h0: &LabeledGraph,
    h1: &LabeledGraph,
    g0: &LabeledGraph,
    g1: &LabeledGraph,
) -> Result<AmalgamOutput, AmalgamError> {
    assert!(matches!(base.kind, LeviKind::TypeC), "base must be type C");
    let group = base.block_group;
    if g0.group() != Some(group) {
        return Err(AmalgamError::GroupMismatch);
    }
    let report = check_biregular_quadruple(h0, h1, g0, g1)?;
    if !report.ok() {
        return Err(AmalgamError::QuadrupleRejected(report));
    }
    let r = report.regularity.unwrap();
    let q = base.field.order();
    let field = &base.field;

    let kept_point: BTreeSet<u64> = h0.labels().unwrap().iter().copied().collect();
    let kept_line: BTreeSet<u64> = h1.labels().unwrap().iter().copied().collect();

    // Dense ids: restricted point block, full point blocks, restricted line
    // block, full line blocks; labels ascending inside each block.
    let mut point_blocks: Vec<Vec<u32>> = Vec::with_capacity(q as usize);
    let mut line_blocks: Vec<Vec<u32>> = Vec::with_capacity(q as usize);
    let mut point_of = vec![vec![u32::MAX; q as usize]; q as usize];
    let mut line_of = vec![vec![u32::MAX; q as usize]; q as usize];
    let mut next = 0u32;
    for x in 0..q {
        let mut block = Vec::new();
        for y in 0..q {
            if x == 0 && !kept_point.contains(&y) {
                continue;
            }
            point_of[x as usize][y as usize] = next;
            block.push(next);
            next += 1;
        }
        point_blocks.push(block);
    }
    for m in 0..q {
        let mut block = Vec::new();
        for b in 0..q {
            if m == 0 && !kept_line.contains(&b) {
                continue;
            }
            line_of[m as usize][b as usize] = next;
            block.push(next);
            next += 1;
        }
        line_blocks.push(block);
    }

    let mut graph = LabeledGraph::new(next as usize);
    // Induced Levi edges: y = mx + b.
    for x in 0..q {
        for y in 0..q {
            let p = point_of[x as usize][y as usize];
            if p == u32::MAX {
                continue;
            }
            for m in 0..q {
                let b = field.sub(y, field.mul(m, x));
                let l = line_of[m as usize][b as usize];
                if l != u32::MAX {
                    graph.add_edge(p as usize, l as usize).unwrap();
                }
            }
        }
    }
    // Block copies.
    for (x, ids) in point_of.iter().enumerate() {
        let install = if x == 0 { h0 } else { g0 };
        install_block(&mut graph, install, |l| ids[l as usize]);
    }
    for (m, ids) in line_of.iter().enumerate() {
        let install = if m == 0 { h1 } else { g1 };
        install_block(&mut graph, install, |l| ids[l as usize]);
    }

    let expected_order = 2 * (q * q - q) as usize + kept_point.len() + kept_line.len();
    debug_assert_eq!(graph.vertex_count(), expected_order);
    let girth = verify(&graph, (q as usize) + r)?;
    Ok(AmalgamOutput {
        graph,
        kind: LeviKind::TypeC,
        q,
        install_regularity: r,
        regularity: q as usize + r,
        deletions: 0,
        girth,
        point_blocks,
        line_blocks,
    })
}

/// Regular amalgamation into type C: both zero blocks stay full.
pub fn amalgamate_c_pair(
    base: &BlockedLevi,
    g0: &LabeledGraph,
    g1: &LabeledGraph,
) -> Result<AmalgamOutput, AmalgamError> {
    amalgamate_c(base, g0, g1, g0, g1)
}

/// Amalgamation of a suitable pair into the type-L Levi graph: g0 into every
/// point block, g1 into every line block, through the in-block labels.
pub fn amalgamate_l(
    base: &BlockedLevi,
    g0: &LabeledGraph,
    g1: &LabeledGraph,
) -> Result<AmalgamOutput, AmalgamError> {
    assert!(matches!(base.kind, LeviKind::TypeL), "base must be type L");
    if g0.group() != Some(base.block_group) {
        return Err(AmalgamError::GroupMismatch);
    }
    let report = check_suitable_pair(g0, g1)?;
    if !report.ok() {
        return Err(AmalgamError::PairRejected(report));
    }
    let r = report.regularity.unwrap();
    let q = base.field.order();

    let mut graph = base.graph.clone();
    for block in &base.point_blocks {
        install_block(&mut graph, g0, |l| block[l as usize]);
    }
    for block in &base.line_blocks {
        install_block(&mut graph, g1, |l| block[l as usize]);
    }
    let girth = verify(&graph, q as usize + r)?;
    Ok(AmalgamOutput {
        graph,
        kind: LeviKind::TypeL,
        q,
        install_regularity: r,
        regularity: q as usize + r,
        deletions: 0,
        girth,
        point_blocks: base.point_blocks.clone(),
        line_blocks: base.line_blocks.clone(),
    })
}

/// Removes the last d removable point blocks and the last d removable line
/// blocks (for type C the zero blocks are never removable). Regularity drops
/// by exactly d; girth cannot decrease and is re-verified.
pub fn delete_block_pairs(am: &AmalgamOutput, d: usize) -> Result<AmalgamOutput, AmalgamError> {
    let removable = match am.kind {
        LeviKind::TypeC => am.point_blocks.len() - 1,
        LeviKind::TypeL => am.point_blocks.len(),
    };
    if d > removable {
        return Err(AmalgamError::TooManyDeletions {
            requested: d,
            removable,
        });
    }
    if d == 0 {
        return Ok(am.clone());
    }
    let keep_blocks = am.point_blocks.len() - d;
    let mut keep: Vec<usize> = Vec::new();
    for block in &am.point_blocks[..keep_blocks] {
        keep.extend(block.iter().map(|&v| v as usize));
    }
    for block in &am.line_blocks[..keep_blocks] {
        keep.extend(block.iter().map(|&v| v as usize));
    }
    let mut renumber = vec![u32::MAX; am.graph.vertex_count()];
    for (new, &old) in keep.iter().enumerate() {
        renumber[old] = new as u32;
    }
    let graph = am.graph.induced(&keep);
    let remap = |blocks: &[Vec<u32>]| -> Vec<Vec<u32>> {
        blocks[..keep_blocks]
            .iter()
            .map(|b| b.iter().map(|&v| renumber[v as usize]).collect())
            .collect()
    };
    let expected_k = am.regularity - d;
    let girth = verify(&graph, expected_k)?;
    debug_assert!(girth >= am.girth);
    Ok(AmalgamOutput {
        point_blocks: remap(&am.point_blocks),
        line_blocks: remap(&am.line_blocks),
        graph,
        kind: am.kind,
        q: am.q,
        install_regularity: am.install_regularity,
        regularity: expected_k,
        deletions: am.deletions + d,
        girth,
    })
}

/// What goes into the blocks of a Levi graph.
#[derive(Clone, Debug)]
pub enum Installation {
    Pair {
        g0: LabeledGraph,
        g1: LabeledGraph,
    },
    Quadruple {
        h0: LabeledGraph,
        h1: LabeledGraph,
        g0: LabeledGraph,
        g1: LabeledGraph,
    },
}

#[derive(Clone, Debug)]
pub struct AmalgamRecipe {
    pub base: BlockedLevi,
    pub install: Installation,
    pub deletions: usize,
}

impl AmalgamRecipe {
    pub fn execute(&self) -> Result<AmalgamOutput, AmalgamError> {
        let base = match (&self.base.kind, &self.install) {
            (LeviKind::TypeC, Installation::Pair { g0, g1 }) => {
                amalgamate_c_pair(&self.base, g0, g1)?
            }
            (LeviKind::TypeC, Installation::Quadruple { h0, h1, g0, g1 }) => {
                amalgamate_c(&self.base, h0, h1, g0, g1)?
            }
            (LeviKind::TypeL, Installation::Pair { g0, g1 }) => amalgamate_l(&self.base, g0, g1)?,
            (LeviKind::TypeL, Installation::Quadruple { .. }) => {
                panic!("type L amalgamation installs a pair, not a quadruple")
            }
        };
        delete_block_pairs(&base, self.deletions)
    }
}

/// Deletion bound for type-L amalgams: n(k,5) <= 2(q-1)(k-r+1) for k <= q+r.
pub fn bound_deleted_l(q: u64, r: u64, k: u64) -> Result<u64, AmalgamError> {
    if k > q + r {
        return Err(AmalgamError::BoundOutOfRange { k, max: q + r });
    }
    Ok(2 * (q - 1) * (k - r + 1))
}

/// Closed form for the 6-regular odd-characteristic family: 2(q-1)(k-5),
/// k <= q+6.
pub fn bound_odd_family(q: u64, k: u64) -> Result<u64, AmalgamError> {
    if k > q + 6 {
        return Err(AmalgamError::BoundOutOfRange { k, max: q + 6 });
    }
    Ok(2 * (q - 1) * (k - 5))
}

/// Closed form for the 6-regular characteristic-two family: 2q(k-6),
/// k <= q+6.
pub fn bound_even_family(q: u64, k: u64) -> Result<u64, AmalgamError> {
    if k > q + 6 {
        return Err(AmalgamError::BoundOutOfRange { k, max: q + 6 });
    }
    Ok(2 * q * (k - 6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::graph::petersen;
    use crate::group::Group;
    use crate::semicirculant::SemicirculantSpec;
    use crate::semiplane::build_type_l;

    fn construction2_q29() -> (LabeledGraph, LabeledGraph) {
        let g0 = SemicirculantSpec::finite(28, Some((4, 8)), &[1, -1])
            .unwrap()
            .build()
            .unwrap();
        let g1 = SemicirculantSpec::finite(28, Some((2, 6)), &[3, -7])
            .unwrap()
            .build()
            .unwrap();
        (g0, g1)
    }

    #[test]
    fn q29_pair_is_suitable() {
        let (g0, g1) = construction2_q29();
        let report = check_suitable_pair(&g0, &g1).unwrap();
        assert!(report.ok(), "{report}");
        assert_eq!(report.regularity, Some(4));
        let c0 = g0.cayley_colors().unwrap();
        let c1 = g1.cayley_colors().unwrap();
        let pm = |v: &[i64]| -> std::collections::BTreeSet<u64> {
            v.iter()
                .flat_map(|&x| [x.rem_euclid(28) as u64, (-x).rem_euclid(28) as u64])
                .collect()
        };
        assert_eq!(c0, pm(&[1, 4, 8]));
        assert_eq!(c1, pm(&[2, 3, 6, 7]));
    }

    #[test]
    fn pair_with_itself_shares_colors() {
        let mut g = petersen();
        let mut labeled = LabeledGraph::with_identity_labels(Group::Cyclic(10));
        for &(u, v) in g.edges() {
            labeled.add_edge(u as usize, v as usize).unwrap();
        }
        g = labeled;
        let report = check_suitable_pair(&g, &g).unwrap();
        assert!(!report.ok());
        assert!(matches!(
            report.violations[0],
            SuitabilityViolation::SharedColors { .. }
        ));
    }

    #[test]
    fn l29_amalgam_and_deletion() {
        let field = Field::new(29, 1).unwrap();
        let base = build_type_l(&field).unwrap();
        let (g0, g1) = construction2_q29();
        let am = amalgamate_l(&base, &g0, &g1).unwrap();
        assert_eq!(am.order(), 1680);
        assert_eq!(am.regularity, 33);
        assert_eq!(am.girth, 5);
        let cut = delete_block_pairs(&am, 1).unwrap();
        assert_eq!(cut.order(), 1624);
        assert_eq!(cut.regularity, 32);
        assert_eq!(cut.girth, 5);
        assert_eq!(bound_deleted_l(29, 4, 32).unwrap() as usize, cut.order());
        let too_many = delete_block_pairs(&am, 31);
        assert!(matches!(
            too_many.unwrap_err(),
            AmalgamError::TooManyDeletions { .. }
        ));
    }

    #[test]
    fn regular_quadruple_reduces_to_pair_check() {
        let (g0, g1) = construction2_q29();
        let quad = check_biregular_quadruple(&g0, &g1, &g0, &g1).unwrap();
        assert!(quad.ok(), "{quad}");
        assert_eq!(quad.regularity, Some(4));
    }

    #[test]
    fn shared_edge_names_clause_iii() {
        let (g0, g1) = construction2_q29();
        // h0 = g1 makes E(h0) and E(g1) identical while every clause-(i)/(ii)
        // hypothesis still holds.
        let report = check_biregular_quadruple(&g1, &g0, &g0, &g1).unwrap();
        assert!(!report.ok());
        assert_eq!(report.violations[0].clause(), "(iii)");
        assert!(matches!(
            report.violations[0],
            QuadrupleViolation::SharedEdges {
                left: "h0",
                right: "g1"
            }
        ));
    }

    #[test]
    fn bounds_match_quoted_values() {
        assert_eq!(bound_deleted_l(37, 5, 41).unwrap(), 2664);
        assert_eq!(bound_odd_family(49, 55).unwrap(), 4800);
        assert_eq!(bound_even_family(64, 70).unwrap(), 8192);
        assert!(bound_odd_family(49, 56).is_err());
    }
}
