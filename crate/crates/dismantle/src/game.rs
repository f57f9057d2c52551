//! Independent ground truth: the evasiveness query game by full minimax,
//! exhaustive small-graph enumeration, and the searched witness for
//! order-sensitive 1-dismantling.
//!
//! The game asks "is the hidden vertex set A a clique?" one vertex-
//! membership question at a time. A state assigns each vertex in / out /
//! unasked, so the minimax table has 3^n entries. The empty set counts as
//! a clique, which keeps the game total.

use thiserror::Error;

use rand::prelude::*;

use crate::cert::{Certificate, FinalGraph, Move};
use crate::engine::Solver;
use crate::graph::{canonical_key, Graph, GraphError, Mask, MaskIter};

/// 3^n state table cap for the game minimax.
pub const GAME_LIMIT: usize = 14;

#[derive(Debug, Error)]
pub enum GameError {
    #[error("game minimax limited to {GAME_LIMIT} vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Optimal worst-case number of membership questions needed to decide
/// whether a hidden vertex set induces a clique (the empty set counts).
/// The graph is non-evasive exactly when this is at most n - 1.
pub fn evasiveness_game_depth(g: &Graph) -> Result<usize, GameError> {
    if g.is_empty() {
        return Err(GameError::Graph(GraphError::Empty));
    }
    if g.n() > GAME_LIMIT {
        return Err(GameError::TooLarge(g.n()));
    }
    let n = g.n();
    let pow3: Vec<usize> = {
        let mut p = vec![1usize];
        for _ in 0..n {
            p.push(p.last().unwrap() * 3);
        }
        p
    };
    // state encoding: digit v is 0 (unasked), 1 (in A), 2 (out)
    let mut memo: Vec<u8> = vec![u8::MAX; pow3[n]];
    let full = g.full_mask();

    fn is_clique(g: &Graph, s: Mask) -> bool {
        MaskIter(s).all(|v| s & !(g.row(v) | (1 << v)) == 0)
    }

    struct Ctx<'a> {
        g: &'a Graph,
        pow3: &'a [usize],
        full: Mask,
    }

    fn depth(ctx: &Ctx, memo: &mut [u8], inside: Mask, outside: Mask) -> u8 {
        let idx: usize = (0..ctx.g.n())
            .map(|v| {
                ctx.pow3[v]
                    * if inside >> v & 1 == 1 {
                        1
                    } else if outside >> v & 1 == 1 {
                        2
                    } else {
                        0
                    }
            })
            .sum();
        if memo[idx] != u8::MAX {
            return memo[idx];
        }
        let free = ctx.full & !inside & !outside;
        let value = if !is_clique(ctx.g, inside) {
            // every completion already fails
            0
        } else if is_clique(ctx.g, inside | free) {
            // every completion is a clique
            0
        } else {
            MaskIter(free)
                .map(|v| {
                    let bit = 1u64 << v;
                    1 + depth(ctx, memo, inside | bit, outside).max(depth(
                        ctx,
                        memo,
                        inside,
                        outside | bit,
                    ))
                })
                .min()
                .expect("non-terminal state has free vertices")
        };
        memo[idx] = value;
        value
    }

    let ctx = Ctx {
        g,
        pow3: &pow3,
        full,
    };
    Ok(depth(&ctx, &mut memo, 0, 0) as usize)
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(n <= 7, "exhaustive enumeration capped at n = 7");
    (0u64..1 << pairs.len()).map(move |m| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("enumerated graph is valid")
    })
}

/// Seeded uniform sample of labeled graphs on n vertices.
pub fn sample_labeled_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).expect("sampled graph is valid")
        })
        .collect()
}

/// A graph that 1-dismantles to two non-isomorphic 1-stiff graphs, with
/// both witnessing deletion sequences.
#[derive(Debug, Clone)]
pub struct OrderSensitivityWitness {
    pub graph: Graph,
    pub certificates: (Certificate, Certificate),
    /// Canonical keys of the two distinct stiff cores.
    pub core_keys: (Vec<u8>, Vec<u8>),
}

/// Smallest graph (by vertex count, then edge count, then canonical key)
/// that 1-dismantles to two non-isomorphic 1-stiff graphs. `None` if no
/// graph up to `max_n` vertices qualifies.
pub fn find_order_sensitivity_witness(max_n: usize) -> Option<OrderSensitivityWitness> {
    assert!(max_n <= 9, "witness search capped at 9 vertices");
    for n in 1..=max_n {
        let mut by_edges: Vec<Vec<Graph>> = vec![Vec::new(); n * (n - 1) / 2 + 1];
        for g in enumerate_labeled_graphs(n) {
            by_edges[g.edge_count()].push(g);
        }
        for bucket in by_edges {
            let mut best: Option<(Vec<u8>, Graph)> = None;
            let mut seen = std::collections::HashSet::new();
            for g in bucket {
                let key = canonical_key(&g).expect("witness search stays small");
                if !seen.insert(key.clone()) {
                    continue;
                }
                if two_stiff_cores(&g).is_some() && best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, g));
                }
            }
            if let Some((_, g)) = best {
                let (a, b) = two_stiff_cores(&g).expect("re-running the search");
                let cert_a = walk_to_core(&g, a);
                let cert_b = walk_to_core(&g, b);
                let ka = canonical_key(&g.induced(a).0).unwrap();
                let kb = canonical_key(&g.induced(b).0).unwrap();
                return Some(OrderSensitivityWitness {
                    graph: g,
                    certificates: (cert_a, cert_b),
                    core_keys: (ka, kb),
                });
            }
        }
    }
    None
}

/// Two reachable 1-stiff cores of different isomorphism type, if any.
/// Exhaustive DFS over 1-deletion orders with a per-subset cache of
/// reachable core keys.
fn two_stiff_cores(g: &Graph) -> Option<(Mask, Mask)> {
    use std::collections::HashMap;
    let mut solver = Solver::new(g, u64::MAX);
    let mut cache: HashMap<Mask, Vec<(Vec<u8>, Mask)>> = HashMap::new();
    fn cores(
        g: &Graph,
        solver: &mut Solver<'_>,
        cache: &mut std::collections::HashMap<Mask, Vec<(Vec<u8>, Mask)>>,
        s: Mask,
    ) -> Vec<(Vec<u8>, Mask)> {
        if let Some(known) = cache.get(&s) {
            return known.clone();
        }
        let eligible = solver.level_vertices(s, 1).expect("unbounded budget");
        let mut out: Vec<(Vec<u8>, Mask)> = Vec::new();
        if eligible == 0 {
            let key = canonical_key(&g.induced(s).0).unwrap();
            out.push((key, s));
        } else {
            for x in MaskIter(eligible) {
                for item in cores(g, solver, cache, s & !(1u64 << x)) {
                    if !out.iter().any(|(k, _)| *k == item.0) {
                        out.push(item);
                    }
                }
            }
        }
        cache.insert(s, out.clone());
        out
    }
    let all = cores(g, &mut solver, &mut cache, g.full_mask());
    if all.len() >= 2 {
        let mut sorted = all;
        sorted.sort();
        Some((sorted[0].1, sorted[1].1))
    } else {
        None
    }
}

/// Greedy 1-deletion walk from the full graph to the target core.
fn walk_to_core(g: &Graph, core: Mask) -> Certificate {
    let mut solver = Solver::new(g, u64::MAX);
    let mut s = g.full_mask();
    let mut moves = Vec::new();
    'outer: while s != core {
        let eligible = solver.level_vertices(s, 1).expect("unbounded budget");
        for x in MaskIter(eligible & !core) {
            if reaches(&mut solver, s & !(1u64 << x), core) {
                moves.push(Move::Delete { v: x, k: 1 });
                s &= !(1u64 << x);
                continue 'outer;
            }
        }
        panic!("core unreachable; two_stiff_cores promised otherwise");
    }
    Certificate::new(g, moves, FinalGraph::Vertices(MaskIter(core).collect()))
}

fn reaches(solver: &mut Solver<'_>, s: Mask, core: Mask) -> bool {
    if s == core {
        return true;
    }
    if s & core != core {
        return false;
    }
    let eligible = solver.level_vertices(s, 1).expect("unbounded budget");
    MaskIter(eligible & !core).any(|x| reaches(solver, s & !(1u64 << x), core))
}
