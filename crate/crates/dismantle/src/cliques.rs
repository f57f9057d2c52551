//! Maximal-clique machinery, clique number, star-cluster cliques, and the
//! constructive dismantling of a graph onto a clique that meets every
//! maximal clique.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cert::{Certificate, FinalGraph, Move};
use crate::graph::{Graph, Mask, MaskIter};

#[derive(Debug, Error)]
pub enum StarClusterError {
    #[error("A is not a clique")]
    NotAClique,
    #[error("A misses a maximal clique")]
    MissesMaximalClique,
    #[error("A must be nonempty")]
    EmptyClique,
    #[error("internal: no deletable vertex outside A (precondition violated)")]
    Stuck,
}

/// All maximal cliques, each reported once, by pivoted Bron-Kerbosch over
/// bit masks. Output is sorted ascending by mask, so the order is
/// deterministic.
pub fn maximal_cliques(g: &Graph) -> Vec<Mask> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    bron_kerbosch(g, 0, g.full_mask(), 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(g: &Graph, r: Mask, mut p: Mask, mut x: Mask, out: &mut Vec<Mask>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot: vertex of p|x with the most neighbours in p (ties: least index)
    let pivot = MaskIter(p | x)
        .max_by_key(|&v| ((g.row(v) & p).count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    let candidates = p & !g.row(pivot);
    for v in MaskIter(candidates) {
        let bit = 1u64 << v;
        bron_kerbosch(g, r | bit, p & g.row(v), x & g.row(v), out);
        p &= !bit;
        x |= bit;
    }
}

/// Size of the largest clique.
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g)
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn is_clique(g: &Graph, a: Mask) -> bool {
    MaskIter(a).all(|v| a & !(g.row(v) | (1 << v)) == 0)
}

/// Does the clique `a` intersect every maximal clique?
pub fn is_star_cluster(g: &Graph, a: Mask) -> bool {
    is_clique(g, a) && a != 0 && maximal_cliques(g).iter().all(|&k| k & a != 0)
}

/// A minimum-cardinality clique meeting every maximal clique, or `None`.
/// Cliques are scanned in nondecreasing size, lexicographically least
/// vertex set first, with early exit on the first hit.
pub fn star_cluster_clique(g: &Graph) -> Option<Mask> {
    if g.n() == 0 {
        return None;
    }
    let maximal = maximal_cliques(g);
    let omega = maximal
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0);
    for size in 1..=omega {
        if let Some(a) = find_hitting_clique(g, &maximal, size) {
            return Some(a);
        }
    }
    None
}

fn find_hitting_clique(g: &Graph, maximal: &[Mask], size: usize) -> Option<Mask> {
    // DFS over ascending-vertex cliques yields lexicographic order.
    fn go(g: &Graph, maximal: &[Mask], clique: Mask, from: usize, left: usize) -> Option<Mask> {
        if left == 0 {
            return maximal.iter().all(|&k| k & clique != 0).then_some(clique);
        }
        for v in from..g.n() {
            if clique & !g.row(v) != 0 {
                continue;
            }
            if let Some(hit) = go(g, maximal, clique | (1 << v), v + 1, left - 1) {
                return Some(hit);
            }
        }
        None
    }
    go(g, maximal, 0, 0, size)
}

/// Constructive dismantling of `g` onto a clique `a` that meets every
/// maximal clique: emits an (|a|-2)-level certificate ending at `a`.
///
/// With every vertex of `a` an apex (and always when |a| <= 2), the moves
/// are plain 0-deletions of currently dominated vertices; otherwise the
/// least vertex missing some of `a` is deleted at level |a|-2 and the
/// argument recurses on the remainder.
pub fn dismantle_to_star_clique(g: &Graph, a: Mask) -> Result<Certificate, StarClusterError> {
    if a == 0 {
        return Err(StarClusterError::EmptyClique);
    }
    if !is_clique(g, a) {
        return Err(StarClusterError::NotAClique);
    }
    if !maximal_cliques(g).iter().all(|&k| k & a != 0) {
        return Err(StarClusterError::MissesMaximalClique);
    }
    let size = a.count_ones() as usize;
    let level = size.saturating_sub(2) as i64;
    let mut s = g.full_mask();
    let mut moves = Vec::new();
    while s != a {
        let outside = s & !a;
        let all_apex = MaskIter(outside).all(|x| a & !g.row(x) == 0);
        let pick = if size <= 2 || all_apex {
            // some outside vertex is currently dominated; delete it at level 0
            MaskIter(outside)
                .find(|&x| {
                    let nb = g.row(x) & s;
                    nb != 0 && MaskIter(nb).any(|c| nb & !g.closed_row(c, s) == 0)
                })
                .map(|x| (x, 0))
        } else {
            MaskIter(outside)
                .find(|&x| a & !g.row(x) != 0)
                .map(|x| (x, level))
        };
        match pick {
            Some((x, k)) => {
                moves.push(Move::Delete { v: x, k });
                s &= !(1u64 << x);
            }
            None => return Err(StarClusterError::Stuck),
        }
    }
    Ok(Certificate::new(
        g,
        moves,
        FinalGraph::Vertices(MaskIter(a).collect()),
    ))
}

/// JSON-facing clique report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CliqueReport {
    pub schema: String,
    pub n: usize,
    pub maximal_cliques: Vec<Vec<usize>>,
    pub omega: usize,
    pub star_cluster: Option<Vec<usize>>,
}

pub fn clique_report(g: &Graph) -> CliqueReport {
    let maximal = maximal_cliques(g);
    let omega = maximal
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0);
    CliqueReport {
        schema: "clique_report_v1".to_string(),
        n: g.n(),
        maximal_cliques: maximal.iter().map(|&m| MaskIter(m).collect()).collect(),
        omega,
        star_cluster: star_cluster_clique(g).map(|m| MaskIter(m).collect()),
    }
}
