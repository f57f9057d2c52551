//! Automorphism search and the transitivity notions built on it:
//! vertex-transitivity and transitivity on ordered cliques of bounded
//! size. Groups are held as full permutation lists, which is exact and
//! ample at desk scale; no stabilizer chains.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Mask, MaskIter, ISO_LIMIT};

#[derive(Debug, Error)]
pub enum AutError {
    #[error("automorphism search limited to {ISO_LIMIT} vertices, got {0}")]
    TooLarge(usize),
    #[error("automorphism group exceeds the {0} element listing cap")]
    GroupTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Cap on the explicit group listing.
pub const GROUP_CAP: usize = 1 << 20;

#[derive(Debug, Clone)]
pub struct AutomorphismSet {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl AutomorphismSet {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Orbit of a vertex.
    pub fn vertex_orbit(&self, v: usize) -> Mask {
        self.perms.iter().fold(0, |m, p| m | (1 << p[v]))
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The full automorphism group of `g`, by degree-refined backtracking.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismSet, AutError> {
    if g.is_empty() {
        return Err(AutError::Graph(GraphError::Empty));
    }
    if g.n() > ISO_LIMIT {
        return Err(AutError::TooLarge(g.n()));
    }
    let sig = |v: usize| {
        let mut s: Vec<usize> = MaskIter(g.row(v)).map(|u| g.degree(u)).collect();
        s.sort_unstable();
        (g.degree(v), s)
    };
    let sigs: Vec<_> = (0..g.n()).map(sig).collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| sigs[b].cmp(&sigs[a]));

    let mut perms = Vec::new();
    let mut map = vec![usize::MAX; g.n()];
    let mut used: Mask = 0;
    fn go(
        g: &Graph,
        order: &[usize],
        sigs: &[(usize, Vec<usize>)],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Mask,
        perms: &mut Vec<Vec<usize>>,
    ) -> Result<(), AutError> {
        if pos == order.len() {
            perms.push(map.clone());
            if perms.len() > GROUP_CAP {
                return Err(AutError::GroupTooLarge(GROUP_CAP));
            }
            return Ok(());
        }
        let v = order[pos];
        for w in 0..g.n() {
            if *used >> w & 1 == 1 || sigs[w] != sigs[v] {
                continue;
            }
            let ok = (0..g.n()).all(|u| {
                let m = map[u];
                m == usize::MAX || g.adjacent(m, w) == g.adjacent(u, v)
            });
            if !ok {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            go(g, order, sigs, pos + 1, map, used, perms)?;
            map[v] = usize::MAX;
            *used &= !(1 << w);
        }
        Ok(())
    }
    go(g, &order, &sigs, 0, &mut map, &mut used, &mut perms)?;
    Ok(AutomorphismSet { n: g.n(), perms })
}

/// Single vertex orbit under the automorphism group.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool, AutError> {
    let aut = automorphisms(g)?;
    Ok(aut.vertex_orbit(0) == g.full_mask())
}

/// For every k <= i, the group acts transitively on ordered k-tuples of
/// pairwise distinct vertices inducing a complete subgraph. i = 1 is
/// vertex-transitivity.
pub fn is_i_complete_transitive(g: &Graph, i: usize) -> Result<bool, AutError> {
    assert!(i >= 1, "i ranges over positive integers");
    let aut = automorphisms(g)?;
    for k in 1..=i {
        let tuples = ordered_cliques(g, k);
        if tuples.len() <= 1 {
            continue;
        }
        let mut orbit: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        for p in aut.perms() {
            orbit.insert(tuples[0].iter().map(|&v| p[v]).collect());
        }
        if orbit.len() != tuples.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All ordered k-tuples of distinct vertices inducing a clique.
pub fn ordered_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k);
    fn go(g: &Graph, k: usize, tuple: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if tuple.len() == k {
            out.push(tuple.clone());
            return;
        }
        for v in 0..g.n() {
            if tuple.contains(&v) || !tuple.iter().all(|&u| g.adjacent(u, v)) {
                continue;
            }
            tuple.push(v);
            go(g, k, tuple, out);
            tuple.pop();
        }
    }
    go(g, k, &mut tuple, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, FamilySpec};

    #[test]
    fn group_orders() {
        let c5 = generators::generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(automorphisms(&c5).unwrap().order(), 10);
        let k4 = generators::generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(automorphisms(&k4).unwrap().order(), 24);
        let petersen = generators::generate(&FamilySpec::Kneser(5, 2)).unwrap();
        assert_eq!(automorphisms(&petersen).unwrap().order(), 120);
    }

    #[test]
    fn vertex_transitivity() {
        for n in 3..=8 {
            let c = generators::generate(&FamilySpec::Cycle(n)).unwrap();
            assert!(is_vertex_transitive(&c).unwrap());
        }
        let p4 = generators::generate(&FamilySpec::Path(4)).unwrap();
        assert!(!is_vertex_transitive(&p4).unwrap());
        let petersen = generators::generate(&FamilySpec::Kneser(5, 2)).unwrap();
        assert!(is_vertex_transitive(&petersen).unwrap());
    }

    #[test]
    fn complete_transitivity_examples() {
        let k5 = generators::generate(&FamilySpec::Complete(5)).unwrap();
        for i in 1..=4 {
            assert!(is_i_complete_transitive(&k5, i).unwrap());
        }
        let petersen = generators::generate(&FamilySpec::Kneser(5, 2)).unwrap();
        assert!(is_i_complete_transitive(&petersen, 2).unwrap());

        let c6 = generators::generate(&FamilySpec::Cycle(6)).unwrap();
        assert!(is_i_complete_transitive(&c6, 2).unwrap());

        // circulant(6, {1,2}) is the octahedron and stays transitive on
        // ordered edges; one vertex more and the two edge orbits separate
        let octa = generators::circulant(6, &[1, 2]).unwrap();
        assert!(is_i_complete_transitive(&octa, 2).unwrap());
        let circ = generators::circulant(7, &[1, 2]).unwrap();
        assert!(is_i_complete_transitive(&circ, 1).unwrap());
        assert!(!is_i_complete_transitive(&circ, 2).unwrap());
    }

    #[test]
    fn i_complete_at_one_is_vertex_transitivity() {
        let graphs = [
            generators::generate(&FamilySpec::Cycle(7)).unwrap(),
            generators::generate(&FamilySpec::Path(5)).unwrap(),
            generators::generate(&FamilySpec::Kneser(5, 2)).unwrap(),
            generators::circulant(8, &[1, 3]).unwrap(),
            generators::generate(&FamilySpec::Octahedron(3)).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                is_i_complete_transitive(g, 1).unwrap(),
                is_vertex_transitive(g).unwrap()
            );
        }
    }

    #[test]
    fn clique_neighbourhood_forms_component_when_transitive() {
        // vertex-transitive graph with a complete closed neighbourhood:
        // the component of that vertex is exactly N[x]
        let g = Graph::new(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(is_vertex_transitive(&g).unwrap());
        for x in 0..6 {
            let closed = g.closed_row(x, g.full_mask());
            if crate::cliques::is_clique(&g, closed) {
                let mut comp = 1u64 << x;
                loop {
                    let grown = MaskIter(comp).fold(comp, |m, v| m | g.row(v));
                    if grown == comp {
                        break;
                    }
                    comp = grown;
                }
                assert_eq!(comp, closed);
            }
        }
    }

    #[test]
    fn size_limit_reported() {
        let big = generators::circulant(33, &[1]).unwrap();
        assert!(matches!(automorphisms(&big), Err(AutError::TooLarge(33))));
    }

    // On a vertex-transitive graph the dominated vertices are exactly the
    // vertices with a twin, and the twin quotient stays vertex-transitive.
    #[test]
    fn transitive_graphs_twins_equal_dominated() {
        let mut corpus: Vec<Graph> = Vec::new();
        for n in 3..=12 {
            corpus.push(generators::generate(&FamilySpec::Cycle(n)).unwrap());
        }
        for (n, d) in [
            (6usize, vec![1usize, 2]),
            (6, vec![2]),
            (8, vec![1, 2]),
            (8, vec![4]),
            (9, vec![3]),
            (10, vec![1, 2, 5]),
            (10, vec![5]),
            (12, vec![1, 2]),
            (12, vec![1, 2, 3]),
        ] {
            corpus.push(generators::circulant(n, &d).unwrap());
        }
        corpus.push(generators::generate(&FamilySpec::Kneser(5, 2)).unwrap());
        for g in &corpus {
            assert!(is_vertex_transitive(g).unwrap());
            let full = g.full_mask();
            let dominated: std::collections::BTreeSet<usize> = g
                .dominated_vertices()
                .unwrap()
                .into_iter()
                .map(|(x, _)| x)
                .collect();
            let twins: std::collections::BTreeSet<usize> = (0..g.n())
                .filter(|&x| {
                    (0..g.n()).any(|y| y != x && g.closed_row(x, full) == g.closed_row(y, full))
                })
                .collect();
            assert_eq!(dominated, twins, "{:?}", g.edges());

            let (q, _) = g.twin_quotient().unwrap();
            if q.n() >= 1 {
                assert!(
                    is_vertex_transitive(&q).unwrap(),
                    "quotient of {:?}",
                    g.edges()
                );
            }
        }
    }
}
