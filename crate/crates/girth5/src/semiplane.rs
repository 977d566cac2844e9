//! Levi graphs of elliptic semiplanes of types C and L, with their block
//! partitions and in-block group labelings, plus the Moore bound.
//!
//! Type C is the biaffine incidence graph: points (x,y) and lines (m,b) over
//! F_q, adjacent iff y = mx + b. Blocks are the columns P_x and L_m, labeled
//! by y resp. b in (F_q, +); every (P_x, L_m) pair induces a perfect matching
//! that translates labels by -mx.
//!
//! Type L deletes a non-incident point/line pair from PG(2,q): here the point
//! (0:0:1) and the line [0:0:1] together with their pencils. The remaining
//! q^2-1 points (x,y,1) split into punctured lines through the deleted point
//! (one block per direction), the remaining lines [u,v,1] into parallel
//! classes; blocks carry Z_{q-1} labels through the discrete log, negated on
//! the line side so that every nonempty block pair is a label translation.

use crate::field::Field;
use crate::graph::LabeledGraph;
use crate::group::Group;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemiplaneError {
    #[error("type L needs q >= 3, got {0}")]
    OrderTooSmall(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeviKind {
    TypeC,
    TypeL,
}

#[derive(Clone, Debug)]
pub struct BlockedLevi {
    pub kind: LeviKind,
    pub field: Field,
    pub graph: LabeledGraph,
    pub block_group: Group,
    /// point_blocks[b][j] is the vertex with in-block label j in point block b.
    pub point_blocks: Vec<Vec<u32>>,
    pub line_blocks: Vec<Vec<u32>>,
}

impl BlockedLevi {
    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn point_count(&self) -> usize {
        self.point_blocks.iter().map(|b| b.len()).sum()
    }

    /// (side, block, label) of a vertex; side 0 = point, 1 = line.
    pub fn locate(&self, v: u32) -> (u8, usize, u64) {
        let points = self.point_count() as u32;
        let block_size = self.point_blocks[0].len() as u32;
        if v < points {
            (0, (v / block_size) as usize, (v % block_size) as u64)
        } else {
            let w = v - points;
            (1, (w / block_size) as usize, (w % block_size) as u64)
        }
    }
}

/// The biaffine Levi graph of type C: 2q^2 vertices, q-regular, girth 6 for
/// q >= 3. Point (x,y) has id x*q + y, line (m,b) has id q^2 + m*q + b.
pub fn build_type_c(field: &Field) -> BlockedLevi {
    let q = field.order();
    let n = (2 * q * q) as usize;
    let mut graph = LabeledGraph::new(n);
    let line_base = (q * q) as usize;
    for x in 0..q {
        for y in 0..q {
            let point = (x * q + y) as usize;
            for m in 0..q {
                let b = field.sub(y, field.mul(m, x));
                graph
                    .add_edge(point, line_base + (m * q + b) as usize)
                    .unwrap();
            }
        }
    }
    let point_blocks: Vec<Vec<u32>> = (0..q)
        .map(|x| (0..q).map(|y| (x * q + y) as u32).collect())
        .collect();
    let line_blocks: Vec<Vec<u32>> = (0..q)
        .map(|m| {
            (0..q)
                .map(|b| (line_base as u64 + m * q + b) as u32)
                .collect()
        })
        .collect();
    BlockedLevi {
        kind: LeviKind::TypeC,
        field: field.clone(),
        graph,
        block_group: field.additive_group(),
        point_blocks,
        line_blocks,
    }
}

/// Canonical projective direction representatives: (0,1) then (1,t) in field
/// order.
fn directions(field: &Field) -> Vec<(u64, u64)> {
    let mut dirs = vec![(0, 1)];
    dirs.extend(field.elements().map(|t| (1, t)));
    dirs
}

/// The Levi graph of type L: 2(q^2-1) vertices, q-regular, girth >= 6.
///
/// Point blocks are indexed by the q+1 directions; the point mu*(a,b) sits in
/// the block of (a:b) with label dlog(mu). Line blocks use the same direction
/// list: the lines through the infinite point (c:d) are nu*(d,-c) with label
/// -dlog(nu). Exactly the equal-direction block pairs are empty; all others
/// are translation matchings.
pub fn build_type_l(field: &Field) -> Result<BlockedLevi, SemiplaneError> {
    let q = field.order();
    if q < 3 {
        return Err(SemiplaneError::OrderTooSmall(q));
    }
    let dirs = directions(field);
    let block_size = (q - 1) as usize;
    let points_total = dirs.len() * block_size;
    let mut graph = LabeledGraph::new(2 * points_total);

    let point_id = |block: usize, label: u64| (block * block_size) as u32 + label as u32;
    let line_id =
        |block: usize, label: u64| (points_total + block * block_size) as u32 + label as u32;

    let neg_dlog = |nu: u64| -> u64 {
        let e = field.dlog(nu).expect("nu ranges over GF(q)*");
        (q - 1 - e) % (q - 1)
    };

    for (pblock, &(a, b)) in dirs.iter().enumerate() {
        for mu in field.elements().skip(1) {
            let (x, y) = (field.mul(mu, a), field.mul(mu, b));
            let p = point_id(pblock, field.dlog(mu).unwrap());
            for (lblock, &(c, d)) in dirs.iter().enumerate() {
                // Lines through (c:d at infinity) are nu*(d, -c); incidence
                // demands nu * (dx - cy) = -1.
                let det = field.sub(field.mul(d, x), field.mul(c, y));
                if det == 0 {
                    continue;
                }
                let nu = field.neg(field.inv(det).unwrap());
                graph
                    .add_edge(p as usize, line_id(lblock, neg_dlog(nu)) as usize)
                    .unwrap();
            }
        }
    }

    let point_blocks: Vec<Vec<u32>> = (0..dirs.len())
        .map(|blk| (0..q - 1).map(|j| point_id(blk, j)).collect())
        .collect();
    let line_blocks: Vec<Vec<u32>> = (0..dirs.len())
        .map(|blk| (0..q - 1).map(|j| line_id(blk, j)).collect())
        .collect();
    Ok(BlockedLevi {
        kind: LeviKind::TypeL,
        field: field.clone(),
        graph,
        block_group: Group::Cyclic(q - 1),
        point_blocks,
        line_blocks,
    })
}

/// How a (point block, line block) pair interacts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingClass {
    Empty,
    /// Perfect matching sending point label j to line label j + c.
    Translation(u64),
    /// Perfect matching sending point label j to line label -j + c.
    Reflection(u64),
    /// Perfect matching that is not an affine map on labels.
    NonAffine,
    /// Induced edges are not a perfect matching at all.
    Irregular,
}

#[derive(Clone, Debug)]
pub struct BlockStructureReport {
    /// classes[point_block][line_block]
    pub classes: Vec<Vec<MatchingClass>>,
}

impl BlockStructureReport {
    pub fn all_pairs_matched(&self) -> bool {
        self.classes.iter().flatten().all(|c| {
            matches!(
                c,
                MatchingClass::Translation(_)
                    | MatchingClass::Reflection(_)
                    | MatchingClass::NonAffine
            )
        })
    }

    pub fn nonempty_all_translations(&self) -> bool {
        self.classes
            .iter()
            .flatten()
            .all(|c| matches!(c, MatchingClass::Empty | MatchingClass::Translation(_)))
    }

    pub fn empty_count_per_point_block(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|c| matches!(c, MatchingClass::Empty))
                    .count()
            })
            .collect()
    }

    pub fn structural_failures(&self) -> usize {
        self.classes
            .iter()
            .flatten()
            .filter(|c| matches!(c, MatchingClass::NonAffine | MatchingClass::Irregular))
            .count()
    }
}

/// Classifies the induced edges of every block pair as empty / translation /
/// reflection / non-affine matching, or irregular when not a matching.
pub fn verify_block_structure(levi: &BlockedLevi) -> BlockStructureReport {
    let group = levi.block_group;
    let size = levi.point_blocks[0].len();
    // line vertex -> (line block, label)
    let mut line_pos = std::collections::BTreeMap::new();
    for (blk, ids) in levi.line_blocks.iter().enumerate() {
        for (label, &v) in ids.iter().enumerate() {
            line_pos.insert(v, (blk, label as u64));
        }
    }
    let classes = levi
        .point_blocks
        .iter()
        .map(|pblock| {
            let mut per_line: Vec<Vec<(u64, u64)>> = vec![Vec::new(); levi.line_blocks.len()];
            for (j, &p) in pblock.iter().enumerate() {
                for &l in levi.graph.neighbors(p as usize) {
                    if let Some(&(blk, label)) = line_pos.get(&l) {
                        per_line[blk].push((j as u64, label));
                    }
                }
            }
            per_line
                .into_iter()
                .map(|pairs| classify(&pairs, group, size))
                .collect()
        })
        .collect();
    BlockStructureReport { classes }
}

fn classify(pairs: &[(u64, u64)], group: Group, size: usize) -> MatchingClass {
    if pairs.is_empty() {
        return MatchingClass::Empty;
    }
    let mut points: Vec<u64> = pairs.iter().map(|p| p.0).collect();
    let mut lines: Vec<u64> = pairs.iter().map(|p| p.1).collect();
    points.sort_unstable();
    points.dedup();
    lines.sort_unstable();
    lines.dedup();
    if pairs.len() != size || points.len() != size || lines.len() != size {
        return MatchingClass::Irregular;
    }
    let c = group.sub(pairs[0].1, pairs[0].0);
    if pairs.iter().all(|&(j, l)| group.sub(l, j) == c) {
        return MatchingClass::Translation(c);
    }
    let c = group.add(pairs[0].1, pairs[0].0);
    if pairs.iter().all(|&(j, l)| group.add(l, j) == c) {
        return MatchingClass::Reflection(c);
    }
    MatchingClass::NonAffine
}

/// Distance-partition lower bound n_0(k, g) on the order of a (k,g)-graph.
pub fn moore_bound(k: u64, g: u64) -> u64 {
    assert!(k >= 2 && g >= 3, "moore bound needs k >= 2, g >= 3");
    if g % 2 == 1 {
        // 1 + k + k(k-1) + ... + k(k-1)^((g-3)/2)
        let mut total = 1u64;
        let mut layer = k;
        for _ in 0..(g - 1) / 2 {
            total += layer;
            layer *= k - 1;
        }
        total
    } else {
        // 2(1 + (k-1) + ... + (k-1)^(g/2 - 1))
        let mut total = 0u64;
        let mut layer = 1;
        for _ in 0..g / 2 {
            total += layer;
            layer *= k - 1;
        }
        2 * total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_c_small_orders() {
        let f3 = Field::new(3, 1).unwrap();
        let c3 = build_type_c(&f3);
        assert_eq!(c3.order(), 18);
        assert!(c3.graph.is_regular(3));
        assert_eq!(c3.graph.girth(), Some(6));

        let f2 = Field::new(2, 1).unwrap();
        let c2 = build_type_c(&f2);
        assert_eq!(c2.order(), 8);
        assert!(c2.graph.is_regular(2));
        assert_eq!(c2.graph.girth(), Some(8));
        assert!(c2.graph.is_connected());
    }

    #[test]
    fn type_c_order_16() {
        let f = Field::new(2, 4).unwrap();
        let c = build_type_c(&f);
        assert_eq!(c.order(), 512);
        assert!(c.graph.is_regular(16));
        assert_eq!(c.graph.girth(), Some(6));
    }

    #[test]
    fn type_c_matchings_translate_by_minus_mx() {
        let f = Field::new(5, 1).unwrap();
        let c = build_type_c(&f);
        let report = verify_block_structure(&c);
        assert!(report.all_pairs_matched());
        for x in 0..5u64 {
            for m in 0..5u64 {
                let expect = f.neg(f.mul(m, x));
                assert_eq!(
                    report.classes[x as usize][m as usize],
                    MatchingClass::Translation(expect)
                );
            }
        }
    }

    #[test]
    fn type_c_q2_all_pairs_matched() {
        let f = Field::new(2, 1).unwrap();
        let report = verify_block_structure(&build_type_c(&f));
        assert!(report.all_pairs_matched());
        assert_eq!(report.classes.len(), 2);
    }

    #[test]
    fn type_l_small_orders() {
        for q in [3u64, 4, 5] {
            let f = Field::of_order(q).unwrap();
            let l = build_type_l(&f).unwrap();
            assert_eq!(l.order() as u64, 2 * (q * q - 1), "order of L_{q}");
            assert!(l.graph.is_regular(q as usize), "L_{q} regularity");
            assert!(l.graph.girth().unwrap() >= 6, "L_{q} girth");
            assert_eq!(l.point_blocks.len() as u64, q + 1);
            assert_eq!(l.point_blocks[0].len() as u64, q - 1);
        }
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(build_type_l(&f3).unwrap().order(), 16);
    }

    #[test]
    fn type_l_block_structure() {
        for q in [3u64, 4, 5, 7] {
            let f = Field::of_order(q).unwrap();
            let l = build_type_l(&f).unwrap();
            let report = verify_block_structure(&l);
            assert!(report.nonempty_all_translations(), "L_{q} matchings");
            assert_eq!(report.structural_failures(), 0);
            // Exactly one empty line-block partner per point block: the one
            // sharing its direction.
            assert!(report.empty_count_per_point_block().iter().all(|&c| c == 1));
            for (i, row) in report.classes.iter().enumerate() {
                assert_eq!(row[i], MatchingClass::Empty, "L_{q} partner block");
            }
        }
    }

    #[test]
    fn type_l_rejects_tiny_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(
            build_type_l(&f2).unwrap_err(),
            SemiplaneError::OrderTooSmall(2)
        );
    }

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_bound(7, 5), 50);
        assert_eq!(moore_bound(3, 5), 10);
        assert_eq!(moore_bound(3, 6), 14);
        for k in 2..=100u64 {
            assert_eq!(moore_bound(k, 5), 1 + k * k);
        }
    }
}
