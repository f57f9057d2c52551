//! Finite simple graphs over `0..n` with word-parallel adjacency rows.
//!
//! Everything downstream (the dismantling engine, clique machinery, the
//! query game) works on induced subgraphs of a fixed root graph, encoded
//! as bit masks over the root's vertices. Graphs are immutable after
//! construction; "deleting" a vertex means shrinking a mask.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Bit mask over the vertices of a root graph.
pub type Mask = u64;

/// Hard cap imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// Vertex count limit for exact isomorphism and automorphism search.
pub const ISO_LIMIT: usize = 32;

/// Vertex count limit for canonical keys.
pub const CANONICAL_LIMIT: usize = 16;

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices, limit is {1}")]
    TooLarge(usize, usize),
    #[error("operation requires at least one vertex")]
    Empty,
    #[error("labels must be unique and cover every vertex")]
    BadLabels,
}

/// Immutable finite simple graph. Adjacency is stored as one bit row per
/// vertex so neighbourhood restriction and domination tests are single
/// word operations.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<Mask>,
    labels: Option<Vec<String>>,
    id: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows && self.labels == other.labels
    }
}
impl Eq for Graph {}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if rows[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph {
            n,
            rows,
            labels: None,
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
        })
    }

    pub fn with_labels(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n, edges)?;
        if labels.len() != n {
            return Err(GraphError::BadLabels);
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(GraphError::BadLabels);
        }
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Identity used by memo keys and `VertexSet` equality.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Open neighbourhood of `v` as a bit row.
    pub fn row(&self, v: usize) -> Mask {
        self.rows[v]
    }

    pub fn rows(&self) -> &[Mask] {
        &self.rows
    }

    /// Closed neighbourhood N[v] restricted to `within`.
    pub fn closed_row(&self, v: usize, within: Mask) -> Mask {
        (self.rows[v] & within) | (1 << v)
    }

    pub fn full_mask(&self) -> Mask {
        if self.n == MAX_VERTICES {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|s| s == name))
    }

    /// Open neighbourhood of `v` as an induced-subgraph view.
    pub fn open_neighbourhood(&self, v: usize) -> Result<VertexSet<'_>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        Ok(VertexSet::new(self, self.rows[v]))
    }

    pub fn vertex_set(&self, bits: Mask) -> VertexSet<'_> {
        VertexSet::new(self, bits & self.full_mask())
    }

    pub fn all_vertices(&self) -> VertexSet<'_> {
        VertexSet::new(self, self.full_mask())
    }

    /// All apexes, i.e. vertices with N[v] = V. Nonempty iff the graph is a
    /// cone (the class of (-1)-dismantlable graphs).
    pub fn cone_apexes(&self) -> Result<Vec<usize>, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let full = self.full_mask();
        Ok((0..self.n)
            .filter(|&v| self.closed_row(v, full) == full)
            .collect())
    }

    pub fn is_cone(&self) -> bool {
        matches!(self.cone_apexes(), Ok(a) if !a.is_empty())
    }

    /// Vertices dominated by some other vertex, each with its smallest-index
    /// witness `a` satisfying N[x] <= N[a].
    pub fn dominated_vertices(&self) -> Result<Vec<(usize, usize)>, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let full = self.full_mask();
        let mut out = Vec::new();
        for x in 0..self.n {
            let cx = self.closed_row(x, full);
            for a in 0..self.n {
                if a != x && cx & !self.closed_row(a, full) == 0 {
                    out.push((x, a));
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Quotient by the closed-neighbourhood-equality relation, together with
    /// the partition of the root's vertices into twin classes.
    pub fn twin_quotient(&self) -> Result<(Graph, VertexPartition), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let full = self.full_mask();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut closed: Vec<Mask> = Vec::new();
        for v in 0..self.n {
            let cv = self.closed_row(v, full);
            match closed.iter().position(|&c| c == cv) {
                Some(b) => blocks[b].push(v),
                None => {
                    blocks.push(vec![v]);
                    closed.push(cv);
                }
            }
        }
        let mut edges = Vec::new();
        for (b, block) in blocks.iter().enumerate() {
            let rep = block[0];
            for (c, other) in blocks.iter().enumerate().skip(b + 1) {
                if self.adjacent(rep, other[0]) {
                    edges.push((b, c));
                }
            }
        }
        let quotient = Graph::new(blocks.len(), &edges)?;
        Ok((quotient, VertexPartition { blocks }))
    }

    /// Induced subgraph on `bits`, re-indexed to `0..popcount`. Returns the
    /// graph and the old-index-per-new-index map. Labels carry over.
    pub fn induced(&self, bits: Mask) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = MaskIter(bits & self.full_mask()).collect();
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Graph::new(verts.len(), &edges).expect("induced subgraph is valid");
        if let Some(labels) = &self.labels {
            g.labels = Some(verts.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, verts)
    }

    /// Structural hash over (n, sorted edge list); labels are ignored.
    /// Binds certificates to the exact indexed graph they were issued for.
    pub fn structural_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        for (u, v) in self.edges() {
            h.update((u as u32).to_le_bytes());
            h.update((v as u32).to_le_bytes());
        }
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Subset of a root graph's vertices; the induced-subgraph view used all
/// over the engine. Equality and hashing depend only on the root's identity
/// and the member bits.
#[derive(Clone, Copy)]
pub struct VertexSet<'g> {
    graph: &'g Graph,
    bits: Mask,
}

impl<'g> VertexSet<'g> {
    pub fn new(graph: &'g Graph, bits: Mask) -> Self {
        debug_assert_eq!(bits & !graph.full_mask(), 0);
        VertexSet { graph, bits }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn bits(&self) -> Mask {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits >> v & 1 == 1
    }

    pub fn iter(&self) -> MaskIter {
        MaskIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Materialize the induced subgraph (re-indexed).
    pub fn induced(&self) -> Graph {
        self.graph.induced(self.bits).0
    }
}

impl PartialEq for VertexSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.graph.id == other.graph.id && self.bits == other.bits
    }
}
impl Eq for VertexSet<'_> {}

impl std::hash::Hash for VertexSet<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.graph.id.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for VertexSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{:?}", self.to_vec())
    }
}

/// Iterator over the set bits of a mask, ascending.
pub struct MaskIter(pub Mask);

impl Iterator for MaskIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub fn mask_of(vertices: &[usize]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

/// Disjoint nonempty blocks covering the root's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }

    /// Smallest-index representative per block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

/// Connectivity of the induced subgraph on `sub` (false for the empty set).
pub fn connected(rows: &[Mask], sub: Mask) -> bool {
    if sub == 0 {
        return false;
    }
    let start = sub.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v] & sub;
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen == sub
}

// ---------------------------------------------------------------------------
// Exact isomorphism by degree-refined backtracking.
// ---------------------------------------------------------------------------

/// Edge-preserving bijection from `g` to `h`, if one exists. Exact search,
/// intended for graphs with at most `ISO_LIMIT` vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.n == 0 {
        return Some(Vec::new());
    }
    let mut gdeg: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut hdeg: Vec<usize> = (0..h.n).map(|v| h.degree(v)).collect();
    gdeg.sort_unstable();
    hdeg.sort_unstable();
    if gdeg != hdeg {
        return None;
    }
    // Refinement invariant: sorted multiset of neighbour degrees per vertex.
    let sig = |g: &Graph, v: usize| {
        let mut s: Vec<usize> = MaskIter(g.row(v)).map(|u| g.degree(u)).collect();
        s.sort_unstable();
        (g.degree(v), s)
    };
    let gsig: Vec<_> = (0..g.n).map(|v| sig(g, v)).collect();
    let hsig: Vec<_> = (0..h.n).map(|v| sig(h, v)).collect();
    {
        let mut a = gsig.clone();
        let mut b = hsig.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    // Map source vertices in descending degree order; candidates must match
    // the signature and all adjacencies to already-mapped vertices.
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by(|&a, &b| gsig[b].cmp(&gsig[a]));
    let mut map = vec![usize::MAX; g.n];
    let mut used: Mask = 0;
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        gsig: &[(usize, Vec<usize>)],
        hsig: &[(usize, Vec<usize>)],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Mask,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 0..h.n() {
            if *used >> w & 1 == 1 || hsig[w] != gsig[v] {
                continue;
            }
            // adjacency to every already-mapped vertex must match exactly
            let ok = (0..g.n()).all(|u| {
                let m = map[u];
                m == usize::MAX || h.adjacent(m, w) == g.adjacent(u, v)
            });
            if !ok {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if go(g, h, order, gsig, hsig, pos + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            *used &= !(1 << w);
        }
        false
    }
    if go(g, h, &order, &gsig, &hsig, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Canonical keys by individualization-refinement.
// ---------------------------------------------------------------------------

/// Canonical byte key: equal keys iff isomorphic. Deterministic across runs.
/// Limited to `CANONICAL_LIMIT` vertices.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>, GraphError> {
    if g.n > CANONICAL_LIMIT {
        return Err(GraphError::TooLarge(g.n, CANONICAL_LIMIT));
    }
    let mut best: Option<Vec<u8>> = None;
    let cells: Vec<Vec<usize>> = initial_partition(g);
    canon_search(g, cells, &mut best);
    let mut key = vec![g.n as u8];
    key.extend(best.unwrap_or_default());
    Ok(key)
}

fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_deg: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for v in 0..g.n() {
        by_deg[g.degree(v)].push(v);
    }
    for c in by_deg.into_iter().filter(|c| !c.is_empty()) {
        cells.push(c);
    }
    refine(g, cells)
}

/// Equitable refinement: split cells by neighbour counts into every cell
/// until stable. Cell order is kept deterministic.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<Mask> = cells.iter().map(|c| mask_of(c)).collect();
        let mut split = false;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let key = |v: usize| -> Vec<u32> {
                masks.iter().map(|&m| (g.row(v) & m).count_ones()).collect()
            };
            let mut grouped: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
            for &v in cell {
                let k = key(v);
                match grouped.iter_mut().find(|(gk, _)| *gk == k) {
                    Some((_, vs)) => vs.push(v),
                    None => grouped.push((k, vec![v])),
                }
            }
            grouped.sort_by(|a, b| a.0.cmp(&b.0));
            if grouped.len() > 1 {
                split = true;
            }
            for (_, vs) in grouped {
                next.push(vs);
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn canon_search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    if let Some(pos) = cells.iter().position(|c| c.len() > 1) {
        for &v in &cells[pos] {
            let mut split: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == pos {
                    split.push(vec![v]);
                    split.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    split.push(c.clone());
                }
            }
            canon_search(g, refine(g, split), best);
        }
        return;
    }
    // Discrete partition: encode the adjacency matrix in this order.
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let mut bits: Vec<u8> = Vec::with_capacity(g.n() * (g.n() + 7) / 8);
    let mut acc = 0u8;
    let mut nb = 0;
    for i in 0..order.len() {
        for j in (i + 1)..order.len() {
            acc = (acc << 1) | g.adjacent(order[i], order[j]) as u8;
            nb += 1;
            if nb == 8 {
                bits.push(acc);
                acc = 0;
                nb = 0;
            }
        }
    }
    if nb > 0 {
        bits.push(acc << (8 - nb));
    }
    if best.as_ref().is_none_or(|b| bits < *b) {
        *best = Some(bits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generators::generate(&FamilySpec::Cycle(n)).unwrap()
    }

    #[test]
    fn neighbourhood_examples() {
        let k4 = generators::generate(&FamilySpec::Complete(4)).unwrap();
        let nb = k4.open_neighbourhood(0).unwrap();
        assert_eq!(nb.to_vec(), vec![1, 2, 3]);

        let c5 = cycle(5);
        for v in 0..5 {
            let nb = c5.open_neighbourhood(v).unwrap();
            assert_eq!(nb.len(), 2);
            let vs = nb.to_vec();
            assert!(!c5.adjacent(vs[0], vs[1]));
        }
        assert!(matches!(
            c5.open_neighbourhood(7),
            Err(GraphError::VertexOutOfRange(7, 5))
        ));
    }

    #[test]
    fn cubion_alpha_neighbourhood_is_smaller_cubion() {
        let q2 = generators::generate(&FamilySpec::Cubion(2)).unwrap();
        let a10 = q2.vertex_by_label("alpha_1_0").unwrap();
        let nb = q2.open_neighbourhood(a10).unwrap();
        let names: Vec<&str> = nb
            .to_vec()
            .into_iter()
            .map(|v| q2.label(v).unwrap())
            .collect();
        assert_eq!(names, vec!["alpha_2_0", "alpha_2_1", "x_00", "x_01"]);
        let q1 = generators::generate(&FamilySpec::Cubion(1)).unwrap();
        assert!(are_isomorphic(&nb.induced(), &q1).is_some());
        // Q_1 is the 4-path
        let p4 = generators::generate(&FamilySpec::Path(4)).unwrap();
        assert!(are_isomorphic(&q1, &p4).is_some());
    }

    #[test]
    fn cone_apexes() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.cone_apexes().unwrap(), vec![0]);
        let w12 = generators::generate(&FamilySpec::Wheel(12)).unwrap();
        assert_eq!(w12.cone_apexes().unwrap(), vec![12]);
        assert_eq!(w12.label(12), Some("z"));
        let c4 = cycle(4);
        assert!(c4.cone_apexes().unwrap().is_empty());
    }

    #[test]
    fn dominated_vertices_examples() {
        let q2 = generators::generate(&FamilySpec::Cubion(2)).unwrap();
        assert!(q2.dominated_vertices().unwrap().is_empty());

        // 2-path u-x-v plus y adjacent to u, x, v: x is dominated by y.
        let y = Graph::new(4, &[(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        let dom = y.dominated_vertices().unwrap();
        assert!(dom.contains(&(1, 3)));

        let k5 = generators::generate(&FamilySpec::Complete(5)).unwrap();
        let dom = k5.dominated_vertices().unwrap();
        assert_eq!(dom.len(), 5);
        assert_eq!(dom[0], (0, 1));
    }

    #[test]
    fn twin_quotient_examples() {
        let k6 = generators::generate(&FamilySpec::Complete(6)).unwrap();
        let (q, part) = k6.twin_quotient().unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(part.blocks, vec![vec![0, 1, 2, 3, 4, 5]]);

        let c4 = cycle(4);
        let (q, part) = c4.twin_quotient().unwrap();
        assert_eq!(q.n(), 4);
        assert!(part.blocks.iter().all(|b| b.len() == 1));
        assert!(are_isomorphic(&q, &c4).is_some());
    }

    #[test]
    fn twin_quotient_idempotent_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let (q, _) = g.twin_quotient().unwrap();
            let (qq, part) = q.twin_quotient().unwrap();
            assert_eq!(qq.n(), q.n(), "quotient must be twin-free");
            assert!(part.blocks.iter().all(|b| b.len() == 1));
            assert_eq!(qq.rows(), q.rows());
            // a subgraph of g induced by block representatives is isomorphic
            // to the quotient
            let (_, p) = g.twin_quotient().unwrap();
            let reps = mask_of(&p.representatives());
            assert!(are_isomorphic(&g.induced(reps).0, &g.twin_quotient().unwrap().0).is_some());
        }
    }

    #[test]
    fn isomorphic_graphs_have_isomorphic_quotients() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        for _ in 0..50 {
            let n = rng.gen_range(2..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = Graph::new(
                n,
                &edges
                    .iter()
                    .map(|&(u, v)| (perm[u], perm[v]))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let (qg, _) = g.twin_quotient().unwrap();
            let (qh, _) = h.twin_quotient().unwrap();
            assert!(are_isomorphic(&qg, &qh).is_some());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle(4);
        let c5 = cycle(5);
        assert!(are_isomorphic(&c4, &c5).is_none());
        let p4 = generators::generate(&FamilySpec::Path(4)).unwrap();
        assert!(are_isomorphic(&c4, &p4).is_none());

        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let pedges: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::new(n, &pedges).unwrap();
            let map = are_isomorphic(&g, &h).expect("relabelled graph must match");
            for (u, v) in g.edges() {
                assert!(h.adjacent(map[u], map[v]));
            }
        }
    }

    #[test]
    fn canonical_key_examples() {
        let c5 = cycle(5);
        let relabeled = Graph::new(5, &[(1, 3), (3, 0), (0, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(
            canonical_key(&c5).unwrap(),
            canonical_key(&relabeled).unwrap()
        );
        let c4 = cycle(4);
        let p4 = generators::generate(&FamilySpec::Path(4)).unwrap();
        assert_ne!(canonical_key(&c4).unwrap(), canonical_key(&p4).unwrap());

        let big = generators::generate(&FamilySpec::Complete(17)).unwrap();
        assert!(canonical_key(&big).is_err());
    }

    // Independent oracle: brute-force isomorphism classification of all 64
    // labeled 4-vertex graphs by permutation enumeration, then check the
    // canonical keys split them identically (11 classes).
    #[test]
    fn canonical_key_four_vertex_classes() {
        let perms = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
            [1, 0, 2, 3],
            [1, 0, 3, 2],
            [1, 2, 0, 3],
            [1, 2, 3, 0],
            [1, 3, 0, 2],
            [1, 3, 2, 0],
            [2, 0, 1, 3],
            [2, 0, 3, 1],
            [2, 1, 0, 3],
            [2, 1, 3, 0],
            [2, 3, 0, 1],
            [2, 3, 1, 0],
            [3, 0, 1, 2],
            [3, 0, 2, 1],
            [3, 1, 0, 2],
            [3, 1, 2, 0],
            [3, 2, 0, 1],
            [3, 2, 1, 0],
        ];
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let pair_bit = |u: usize, v: usize| {
            pairs
                .iter()
                .position(|&(a, b)| (a, b) == (u.min(v), v.max(u)))
                .unwrap()
        };
        // orbit representative per labeled graph
        let canon_mask = |m: u32| -> u32 {
            perms
                .iter()
                .map(|p| {
                    let mut out = 0u32;
                    for (i, &(u, v)) in pairs.iter().enumerate() {
                        if m >> i & 1 == 1 {
                            out |= 1 << pair_bit(p[u], p[v]);
                        }
                    }
                    out
                })
                .min()
                .unwrap()
        };
        let mut reps = std::collections::BTreeSet::new();
        let mut keys = std::collections::BTreeSet::new();
        for m in 0u32..64 {
            reps.insert(canon_mask(m));
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            keys.insert(canonical_key(&Graph::new(4, &edges).unwrap()).unwrap());
        }
        assert_eq!(reps.len(), 11);
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn vertex_count_cap() {
        let edges: Vec<(usize, usize)> = (0..64).map(|i| (i, (i + 1) % 65)).collect();
        assert!(matches!(
            Graph::new(65, &edges),
            Err(GraphError::TooLarge(65, 64))
        ));
        assert!(Graph::new(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn domination_witness_is_sound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            for (x, a) in g.dominated_vertices().unwrap() {
                assert_ne!(x, a);
                let full = g.full_mask();
                assert_eq!(g.closed_row(x, full) & !g.closed_row(a, full), 0);
            }
        }
    }
}
