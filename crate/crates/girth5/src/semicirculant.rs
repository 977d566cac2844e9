//! The semicirculant families S_{2t}(k_1..k_w) and S_{2t}(P,Q; k_1..k_w):
//! matchings between even and odd residues along odd offsets, optionally
//! augmented by an even-offset cycle P on the evens and Q on the odds.
//!
//! Girth is decided analytically: girth >= 6 for the matching-only graph iff
//! all ordered differences k_i - k_j are distinct, and girth >= 5 for the
//! augmented graph iff additionally no such difference meets a difference of
//! {0, +-P, +-Q} and the even cycles themselves have no 3- or 4-cycles.
//! The infinite-offset variant is never materialized; its span bounds the
//! orders at which the finite graphs inherit girth 5.

use crate::graph::LabeledGraph;
use crate::group::Group;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemiError {
    #[error("order {0} must be even")]
    OddOrder(u64),
    #[error("order {0} is degenerate, need 2t >= 10")]
    OrderTooSmall(u64),
    #[error("offset {0} must be odd")]
    EvenOffset(i64),
    #[error("duplicate odd offset {0}")]
    DuplicateOffset(i64),
    #[error("at least one odd offset is required")]
    NoOffsets,
    #[error("even offset {0} must be even and strictly between 0 and t")]
    EvenOffsetOutOfRange(i64),
    #[error("the two even offsets must differ")]
    EqualEvenOffsets,
    #[error("operation requires a finite order")]
    RequiresFinite,
    #[error("operation requires the infinite order")]
    RequiresInfinite,
    #[error("operation applies only to offset-only specs (no P,Q)")]
    RequiresOddPart,
    #[error("operation requires the two even offsets P,Q")]
    RequiresEvenPart,
    #[error("order {0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error("girth-5 conditions fail over the integers")]
    InfiniteGirth5Fails,
    #[error("spec text malformed: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecOrder {
    Finite(u64),
    Infinite,
}

/// Which girth-5 clause failed, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth5Clause {
    /// (i) one of 3P, 4P, 3Q, 4Q vanishes, so an even cycle is too short.
    ShortEvenCycle,
    /// (ii) two ordered pairs of odd offsets share a difference.
    OddDifferenceRepeat,
    /// (iii) an odd-offset difference equals a difference of {0,+-P,+-Q}.
    OddDifferenceMeetsEvenSpan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicirculantSpec {
    order: SpecOrder,
    evens: Option<(i64, i64)>,
    odds: Vec<i64>,
}

impl SemicirculantSpec {
    /// Validates and normalizes. Finite odd offsets are reduced to
    /// representatives in (-t, t]; even offsets must already lie in (0, t).
    pub fn new(
        order: SpecOrder,
        evens: Option<(i64, i64)>,
        odds: &[i64],
    ) -> Result<SemicirculantSpec, SemiError> {
        if odds.is_empty() {
            return Err(SemiError::NoOffsets);
        }
        match order {
            SpecOrder::Finite(n) => {
                if n % 2 != 0 {
                    return Err(SemiError::OddOrder(n));
                }
                if n < 10 {
                    return Err(SemiError::OrderTooSmall(n));
                }
                let t = (n / 2) as i64;
                let mut norm = Vec::with_capacity(odds.len());
                for &k in odds {
                    if k.rem_euclid(2) != 1 {
                        return Err(SemiError::EvenOffset(k));
                    }
                    let mut r = k.rem_euclid(2 * t);
                    if r > t {
                        r -= 2 * t;
                    }
                    if norm.contains(&r) {
                        return Err(SemiError::DuplicateOffset(k));
                    }
                    norm.push(r);
                }
                if let Some((p, q)) = evens {
                    for v in [p, q] {
                        if v <= 0 || v >= t || v % 2 != 0 {
                            return Err(SemiError::EvenOffsetOutOfRange(v));
                        }
                    }
                    if p == q {
                        return Err(SemiError::EqualEvenOffsets);
                    }
                }
                Ok(SemicirculantSpec {
                    order,
                    evens,
                    odds: norm,
                })
            }
            SpecOrder::Infinite => {
                let mut norm = Vec::with_capacity(odds.len());
                for &k in odds {
                    if k.rem_euclid(2) != 1 {
                        return Err(SemiError::EvenOffset(k));
                    }
                    if norm.contains(&k) {
                        return Err(SemiError::DuplicateOffset(k));
                    }
                    norm.push(k);
                }
                if let Some((p, q)) = evens {
                    for v in [p, q] {
                        if v <= 0 || v % 2 != 0 {
                            return Err(SemiError::EvenOffsetOutOfRange(v));
                        }
                    }
                    if p == q {
                        return Err(SemiError::EqualEvenOffsets);
                    }
                }
                Ok(SemicirculantSpec {
                    order,
                    evens,
                    odds: norm,
                })
            }
        }
    }

    pub fn finite(order: u64, evens: Option<(i64, i64)>, odds: &[i64]) -> Result<Self, SemiError> {
        SemicirculantSpec::new(SpecOrder::Finite(order), evens, odds)
    }

    pub fn infinite(evens: Option<(i64, i64)>, odds: &[i64]) -> Result<Self, SemiError> {
        SemicirculantSpec::new(SpecOrder::Infinite, evens, odds)
    }

    pub fn order(&self) -> SpecOrder {
        self.order
    }

    pub fn evens(&self) -> Option<(i64, i64)> {
        self.evens
    }

    pub fn odds(&self) -> &[i64] {
        &self.odds
    }

    /// Regularity of the built graph: w for the matching part alone, w + 2
    /// once the even cycles are added.
    pub fn regularity(&self) -> usize {
        self.odds.len() + if self.evens.is_some() { 2 } else { 0 }
    }

    /// The same offsets over Z_{2t}. Fails if an even offset leaves (0, t) or
    /// two odd offsets collide modulo 2t.
    pub fn instantiate(&self, order: u64) -> Result<SemicirculantSpec, SemiError> {
        SemicirculantSpec::finite(order, self.evens, &self.odds)
    }

    /// Builds the graph over Z_{2t} with identity labels: matchings
    /// {2v, 2v+k_i} for each odd offset, plus, when P,Q are present, the
    /// cycles {2v, 2v+P} on evens and {2v+1, 2v+1+Q} on odds.
    pub fn build(&self) -> Result<LabeledGraph, SemiError> {
        let n = match self.order {
            SpecOrder::Finite(n) => n,
            SpecOrder::Infinite => return Err(SemiError::RequiresFinite),
        };
        let t = n / 2;
        let mut g = LabeledGraph::with_identity_labels(Group::Cyclic(n));
        for &k in &self.odds {
            let k = k.rem_euclid(n as i64) as u64;
            for v in 0..t {
                let a = 2 * v;
                let b = (a + k) % n;
                g.add_edge(a as usize, b as usize)
                    .expect("distinct offsets give distinct matching edges");
            }
        }
        if let Some((p, q)) = self.evens {
            let (p, q) = (p as u64, q as u64);
            for v in 0..t {
                let a = 2 * v;
                g.add_edge(a as usize, ((a + p) % n) as usize)
                    .expect("0 < P < t yields simple cycles on the evens");
            }
            for v in 0..t {
                let a = 2 * v + 1;
                g.add_edge(a as usize, ((a + q) % n) as usize)
                    .expect("0 < Q < t yields simple cycles on the odds");
            }
        }
        Ok(g)
    }

    /// Graph with the same edges read through the binary-code bijection, so
    /// labels live in (Z_2)^m and Cayley colors are computed by XOR.
    pub fn build_binary_labeled(&self) -> Result<LabeledGraph, SemiError> {
        let n = match self.order {
            SpecOrder::Finite(n) => n,
            SpecOrder::Infinite => return Err(SemiError::RequiresFinite),
        };
        if !n.is_power_of_two() {
            return Err(SemiError::NotPowerOfTwo(n));
        }
        let m = n.trailing_zeros();
        let plain = self.build()?;
        let mut g = LabeledGraph::with_identity_labels(Group::elem_abelian(2, m));
        for &(u, v) in plain.edges() {
            g.add_edge(u as usize, v as usize).unwrap();
        }
        Ok(g)
    }

    fn ambient_reduce(&self, x: i64) -> i64 {
        match self.order {
            SpecOrder::Finite(n) => x.rem_euclid(n as i64),
            SpecOrder::Infinite => x,
        }
    }

    fn ordered_differences(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (i, &ki) in self.odds.iter().enumerate() {
            for (j, &kj) in self.odds.iter().enumerate() {
                if i != j {
                    out.push(self.ambient_reduce(ki - kj));
                }
            }
        }
        out
    }

    fn even_offset_differences(&self) -> Result<Vec<i64>, SemiError> {
        let (p, q) = self.evens.ok_or(SemiError::RequiresEvenPart)?;
        let omega = [0, p, -p, q, -q];
        let mut out = Vec::new();
        for &a in &omega {
            for &b in &omega {
                out.push(self.ambient_reduce(a - b));
            }
        }
        Ok(out)
    }

    /// Girth >= 6 test for the matching-only graph: all ordered differences
    /// of odd offsets distinct in the ambient group.
    pub fn girth6_condition(&self) -> Result<bool, SemiError> {
        if self.evens.is_some() {
            return Err(SemiError::RequiresOddPart);
        }
        let diffs = self.ordered_differences();
        let mut seen = std::collections::BTreeSet::new();
        Ok(diffs.into_iter().all(|d| seen.insert(d)))
    }

    /// Girth >= 5 test for the augmented graph; reports the first violated
    /// clause.
    pub fn girth5_conditions(&self) -> Result<Result<(), Girth5Clause>, SemiError> {
        let (p, q) = self.evens.ok_or(SemiError::RequiresEvenPart)?;
        for mult in [3, 4] {
            for v in [p, q] {
                if self.ambient_reduce(mult * v) == 0 {
                    return Ok(Err(Girth5Clause::ShortEvenCycle));
                }
            }
        }
        let diffs = self.ordered_differences();
        let mut seen = std::collections::BTreeSet::new();
        for &d in &diffs {
            if !seen.insert(d) {
                return Ok(Err(Girth5Clause::OddDifferenceRepeat));
            }
        }
        let forbidden: std::collections::BTreeSet<i64> =
            self.even_offset_differences()?.into_iter().collect();
        if diffs.iter().any(|d| forbidden.contains(d)) {
            return Ok(Err(Girth5Clause::OddDifferenceMeetsEvenSpan));
        }
        Ok(Ok(()))
    }

    /// Span of an infinite spec: the largest magnitude among the odd offsets,
    /// their pairwise differences, and the differences of {0, +-P, +-Q}.
    pub fn span(&self) -> Result<u64, SemiError> {
        if self.order != SpecOrder::Infinite {
            return Err(SemiError::RequiresInfinite);
        }
        let mut best: i64 = self.odds.iter().map(|k| k.abs()).max().unwrap_or(0);
        for d in self.ordered_differences() {
            best = best.max(d.abs());
        }
        for d in self.even_offset_differences()? {
            best = best.max(d.abs());
        }
        Ok(best as u64)
    }

    /// Smallest even order 2(D+1) at which the span argument guarantees a
    /// (w+2)-regular girth >= 5 instantiation. Requires the infinite-order
    /// girth-5 conditions to hold.
    pub fn min_girth5_order(&self) -> Result<u64, SemiError> {
        if self.girth5_conditions()?.is_err() {
            return Err(SemiError::InfiniteGirth5Fails);
        }
        let span = self.span()?;
        let order = 2 * (span + 1);
        debug_assert!(
            self.instantiate(order)
                .map(|s| s.girth5_conditions().unwrap().is_ok())
                .unwrap_or(false),
            "span bound must certify its own order"
        );
        Ok(order)
    }
}

/// Bit decomposition of n into m bits, index i holding the coefficient of 2^i.
pub fn to_bits(m: u32, n: u64) -> Result<Vec<u8>, SemiError> {
    if n >= 1 << m {
        return Err(SemiError::Parse(format!("{n} out of range for {m} bits")));
    }
    Ok((0..m).map(|i| ((n >> i) & 1) as u8).collect())
}

pub fn from_bits(bits: &[u8]) -> u64 {
    bits.iter()
        .enumerate()
        .map(|(i, &b)| (b as u64 & 1) << i)
        .sum()
}

/// Block-diagonal lift: the graph on (Z_2)^m whose restriction to each coset
/// of the low bits is a copy of `g`. Colors carry over unchanged as codes.
pub fn lift_graph(g: &LabeledGraph, m: u32) -> Result<LabeledGraph, SemiError> {
    let group = g
        .group()
        .ok_or_else(|| SemiError::Parse("lift requires a graph labeled over (Z_2)^r".into()))?;
    let rank = match group {
        Group::ElemAbelian { p: 2, m } => m,
        Group::Cyclic(2) => 1,
        _ => {
            return Err(SemiError::Parse(
                "lift requires an elementary abelian 2-group".into(),
            ))
        }
    };
    if !g.labels_cover_group() {
        return Err(SemiError::Parse(
            "lift requires a labeling onto the full carrier".into(),
        ));
    }
    if m <= rank {
        return Err(SemiError::Parse(format!(
            "lift target rank {m} must exceed the base rank {rank}"
        )));
    }
    let base = 1u64 << rank;
    let copies = 1u64 << (m - rank);
    let labels = g.labels().unwrap();
    let mut out = LabeledGraph::with_identity_labels(Group::elem_abelian(2, m));
    for hi in 0..copies {
        for &(u, v) in g.edges() {
            let a = hi * base + labels[u as usize];
            let b = hi * base + labels[v as usize];
            out.add_edge(a as usize, b as usize).unwrap();
        }
    }
    Ok(out)
}

impl fmt::Display for SemicirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S:2t=")?;
        match self.order {
            SpecOrder::Finite(n) => write!(f, "{n}")?,
            SpecOrder::Infinite => write!(f, "inf")?,
        }
        if let Some((p, q)) = self.evens {
            write!(f, ";P={p};Q={q}")?;
        }
        let odds: Vec<String> = self.odds.iter().map(|k| k.to_string()).collect();
        write!(f, ";K={}", odds.join(","))
    }
}

impl FromStr for SemicirculantSpec {
    type Err = SemiError;

    /// Text form `S:2t=28;P=4;Q=8;K=1,-1` (P and Q optional, `2t=inf` for the
    /// infinite spec).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .strip_prefix("S:")
            .ok_or_else(|| SemiError::Parse("expected `S:` prefix".into()))?;
        let mut order = None;
        let mut p = None;
        let mut q = None;
        let mut odds = None;
        for part in body.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| SemiError::Parse(format!("bad field `{part}`")))?;
            match key {
                "2t" => {
                    order = Some(if value == "inf" {
                        SpecOrder::Infinite
                    } else {
                        SpecOrder::Finite(
                            value
                                .parse()
                                .map_err(|_| SemiError::Parse(format!("bad order `{value}`")))?,
                        )
                    })
                }
                "P" => {
                    p = Some(
                        value
                            .parse::<i64>()
                            .map_err(|_| SemiError::Parse(format!("bad even offset `{value}`")))?,
                    )
                }
                "Q" => {
                    q = Some(
                        value
                            .parse::<i64>()
                            .map_err(|_| SemiError::Parse(format!("bad even offset `{value}`")))?,
                    )
                }
                "K" => {
                    let parsed: Result<Vec<i64>, _> =
                        value.split(',').map(|v| v.trim().parse::<i64>()).collect();
                    odds =
                        Some(parsed.map_err(|_| {
                            SemiError::Parse(format!("bad odd offset list `{value}`"))
                        })?)
                }
                other => return Err(SemiError::Parse(format!("unknown field `{other}`"))),
            }
        }
        let order = order.ok_or_else(|| SemiError::Parse("missing 2t".into()))?;
        let odds = odds.ok_or_else(|| SemiError::Parse("missing K".into()))?;
        let evens = match (p, q) {
            (Some(p), Some(q)) => Some((p, q)),
            (None, None) => None,
            _ => return Err(SemiError::Parse("P and Q must appear together".into())),
        };
        SemicirculantSpec::new(order, evens, &odds)
    }
}
