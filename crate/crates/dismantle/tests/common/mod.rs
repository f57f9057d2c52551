//! Reference implementations used as independent oracles: direct
//! transcriptions of the definitions, no memoization, no pruning, no
//! shortcuts. Exponential, so callers keep them to a handful of vertices.

use dismantle::graph::{Graph, Mask, MaskIter};
use rand::{Rng, SeedableRng};

fn closed(g: &Graph, v: usize, sub: Mask) -> Mask {
    (g.row(v) & sub) | (1 << v)
}

pub fn naive_is_cone(g: &Graph, sub: Mask) -> bool {
    MaskIter(sub).any(|v| closed(g, v, sub) == sub)
}

/// Direct definition of "induced subgraph on `sub` is k-dismantlable".
pub fn naive_in_dk(g: &Graph, sub: Mask, k: i64) -> bool {
    if sub == 0 {
        return false;
    }
    if k == -1 {
        return naive_is_cone(g, sub);
    }
    if sub.count_ones() == 1 {
        return true;
    }
    MaskIter(sub)
        .any(|x| naive_in_dk(g, g.row(x) & sub, k - 1) && naive_in_dk(g, sub & !(1u64 << x), k))
}

/// Direct least-fixed-point recursion for non-evasiveness.
pub fn naive_ne(g: &Graph, sub: Mask) -> bool {
    if sub == 0 {
        return false;
    }
    if sub.count_ones() == 1 {
        return true;
    }
    MaskIter(sub).any(|x| {
        let nb = g.row(x) & sub;
        nb != 0 && naive_ne(g, nb) && naive_ne(g, sub & !(1u64 << x))
    })
}

/// Direct search for ws-dismantlability: vertex deletions with a
/// 0-dismantlable neighbourhood and edge deletions with a 0-dismantlable
/// common neighbourhood, every state re-derived from the definitions.
pub fn naive_ws(g: &Graph) -> bool {
    fn graph_of(n: usize, rows: &[Mask], alive: Mask) -> Graph {
        let mut edges = Vec::new();
        for u in MaskIter(alive) {
            for v in MaskIter(rows[u] & alive) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }
    fn rec(
        n: usize,
        rows: &[Mask],
        alive: Mask,
        seen: &mut std::collections::HashSet<(Mask, Vec<Mask>)>,
    ) -> bool {
        if alive.count_ones() == 1 {
            return true;
        }
        let key = (alive, MaskIter(alive).map(|v| rows[v] & alive).collect());
        if !seen.insert(key) {
            return false;
        }
        let cur = graph_of(n, rows, alive);
        for x in MaskIter(alive) {
            let nb = rows[x] & alive;
            if nb != 0 && naive_in_dk(&cur, nb, 0) && rec(n, rows, alive & !(1u64 << x), seen) {
                return true;
            }
        }
        for u in MaskIter(alive) {
            for v in MaskIter(rows[u] & alive) {
                if v <= u {
                    continue;
                }
                let common = rows[u] & rows[v] & alive;
                if common != 0 && naive_in_dk(&cur, common, 0) {
                    let mut next = rows.to_vec();
                    next[u] &= !(1u64 << v);
                    next[v] &= !(1u64 << u);
                    if rec(n, &next, alive, seen) {
                        return true;
                    }
                }
            }
        }
        false
    }
    let rows: Vec<Mask> = g.rows().to_vec();
    let mut seen = std::collections::HashSet::new();
    rec(g.n(), &rows, g.full_mask(), &mut seen)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random graph is valid")
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
