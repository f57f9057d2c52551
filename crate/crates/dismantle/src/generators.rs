//! Named graph families and edge-list / DOT file handling.
//!
//! The dunce-hat and Bing's-house skeletons ship as data files (compiled in,
//! overridable through `DISMANTLE_DATA_DIR`); everything else is constructed
//! from its defining rule.

use std::fmt;

use thiserror::Error;

use crate::graph::{mask_of, Graph, GraphError, MaskIter};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bundled data file {0}: {1}")]
    Data(String, String),
}

#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum ParseErrorKind {
    #[error("expected \"n m\" header")]
    BadHeader,
    #[error("expected \"u v\" with 0 <= u < v < n, got {0:?}")]
    BadEdge(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("bad label directive")]
    BadLabel,
    #[error("labels must be unique and cover every vertex")]
    BadLabels,
    #[error("graph too large ({0} vertices, limit 64)")]
    TooLarge(usize),
}

/// The graph families exposed by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Complement of n disjoint edges on 2n vertices.
    Octahedron(usize),
    Cubion(usize),
    Parasol,
    /// Parasol plus the extra vertex B' over B1's truncated neighbourhood.
    ParasolPlus,
    DunceHat,
    BingsHouse,
    Kneser(usize, usize),
    /// n-cycle plus a hub adjacent to every rim vertex.
    Wheel(usize),
    /// Complete graph on the binary n-tuples, labeled by tuple.
    HypercubeClique(usize),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Octahedron(n) => write!(f, "octahedron({n})"),
            FamilySpec::Cubion(n) => write!(f, "cubion({n})"),
            FamilySpec::Parasol => write!(f, "parasol"),
            FamilySpec::ParasolPlus => write!(f, "parasol_plus"),
            FamilySpec::DunceHat => write!(f, "dunce_hat"),
            FamilySpec::BingsHouse => write!(f, "bings_house"),
            FamilySpec::Kneser(n, k) => write!(f, "kneser({n},{k})"),
            FamilySpec::Wheel(n) => write!(f, "wheel({n})"),
            FamilySpec::HypercubeClique(n) => write!(f, "hypercube_clique({n})"),
        }
    }
}

fn param_err(family: &str, reason: &str) -> GenError {
    GenError::InvalidParameter {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenError> {
    match *spec {
        FamilySpec::Complete(n) => {
            if n == 0 {
                return Err(param_err("complete", "n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(param_err("cycle", "n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).map(ord).collect();
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(param_err("path", "n >= 1"));
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(Graph::new(n, &edges)?)
        }
        FamilySpec::Octahedron(n) => {
            if n == 0 {
                return Err(param_err("octahedron", "n >= 1"));
            }
            octahedron(n).map_err(Into::into)
        }
        FamilySpec::Cubion(n) => {
            if n == 0 {
                return Err(param_err("cubion", "n >= 1"));
            }
            if 2 * n + (1usize << n) > 64 {
                return Err(param_err("cubion", "2^n + 2n exceeds 64 vertices"));
            }
            Ok(cubion(n)?)
        }
        FamilySpec::Parasol => Ok(parasol()?),
        FamilySpec::ParasolPlus => Ok(parasol_plus()?),
        FamilySpec::DunceHat => load_bundled("dunce_hat.txt"),
        FamilySpec::BingsHouse => load_bundled("bings_house.txt"),
        FamilySpec::Kneser(n, k) => {
            if k == 0 || n <= 2 * k {
                return Err(param_err("kneser", "requires n > 2k >= 2"));
            }
            kneser(n, k)
        }
        FamilySpec::Wheel(n) => {
            if n < 3 {
                return Err(param_err("wheel", "n >= 3"));
            }
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).map(ord).collect();
            for v in 0..n {
                edges.push((v, n));
            }
            let mut labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
            labels.push("z".to_string());
            Ok(Graph::with_labels(n + 1, &edges, labels)?)
        }
        FamilySpec::HypercubeClique(n) => {
            if n == 0 || (1usize << n) > 64 {
                return Err(param_err("hypercube_clique", "1 <= n <= 6"));
            }
            let m = 1usize << n;
            let mut edges = Vec::new();
            for u in 0..m {
                for v in (u + 1)..m {
                    edges.push((u, v));
                }
            }
            let labels = (0..m).map(|x| format!("x_{}", tuple_bits(x, n))).collect();
            Ok(Graph::with_labels(m, &edges, labels)?)
        }
    }
}

fn ord((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn tuple_bits(x: usize, n: usize) -> String {
    (0..n)
        .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Complement of n disjoint edges: vertices 2i, 2i+1 are the only
/// non-adjacent pairs.
fn octahedron(n: usize) -> Result<Graph, GraphError> {
    let m = 2 * n;
    let mut edges = Vec::new();
    for u in 0..m {
        for v in (u + 1)..m {
            if !(u / 2 == v / 2) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(m, &edges)
}

/// The n-cubion: a 2^n-clique on binary n-tuples plus an n-octahedron of
/// apex vertices alpha_{i,eps}, each coning the tuples with i-th entry eps.
///
/// Vertex layout: alpha_{i,eps} at index 2(i-1)+eps for i in 1..=n, tuple x
/// at index 2n + x (bit i-1 of x is the i-th entry).
pub fn cubion(n: usize) -> Result<Graph, GraphError> {
    let tuples = 1usize << n;
    let total = 2 * n + tuples;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for e1 in 0..2 {
                for e2 in 0..2 {
                    edges.push((2 * i + e1, 2 * j + e2));
                }
            }
        }
    }
    for x in 0..tuples {
        for y in (x + 1)..tuples {
            edges.push((2 * n + x, 2 * n + y));
        }
    }
    for i in 0..n {
        for eps in 0..2 {
            for x in 0..tuples {
                if x >> i & 1 == eps {
                    edges.push((2 * i + eps, 2 * n + x));
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(total);
    for i in 1..=n {
        labels.push(format!("alpha_{i}_0"));
        labels.push(format!("alpha_{i}_1"));
    }
    for x in 0..tuples {
        labels.push(format!("x_{}", tuple_bits(x, n)));
    }
    Graph::with_labels(total, &edges, labels)
}

/// Builds the (n+1)-cubion from the n-cubion by doubling the tuple clique
/// and attaching the two new apexes. Must agree with `cubion(n + 1)` up to
/// isomorphism; the tests check that.
pub fn cubion_iterative(n: usize) -> Result<Graph, GraphError> {
    let mut g = cubion(1)?;
    for k in 1..n {
        g = extend_cubion(&g, k)?;
    }
    Ok(g)
}

fn extend_cubion(q: &Graph, n: usize) -> Result<Graph, GraphError> {
    // old layout: 2n apexes then 2^n tuples; new: 2(n+1) apexes, 2^{n+1} tuples
    let old_tuples = 1usize << n;
    let new_tuples = old_tuples << 1;
    let nn = n + 1;
    let total = 2 * nn + new_tuples;
    let apex = |i: usize, e: usize| 2 * i + e;
    let tup = |x: usize| 2 * nn + x;
    let old_apex = |v: usize| v; // same index range 0..2n
    let mut edges = Vec::new();
    // apex-apex edges among the first n coordinates follow the old graph
    for a in 0..2 * n {
        for b in (a + 1)..2 * n {
            if q.adjacent(old_apex(a), old_apex(b)) {
                edges.push((a, b));
            }
        }
    }
    // the two new apexes join every old apex but not each other
    for a in 0..2 * n {
        edges.push((a, apex(n, 0)));
        edges.push((a, apex(n, 1)));
    }
    // tuple clique
    for x in 0..new_tuples {
        for y in (x + 1)..new_tuples {
            edges.push((tup(x), tup(y)));
        }
    }
    // old attachments, copied onto both halves; new coordinate splits them
    for x in 0..old_tuples {
        for i in 0..n {
            for e in 0..2 {
                if q.adjacent(old_apex(apex(i, e)), 2 * n + x) {
                    edges.push((apex(i, e), tup(x)));
                    edges.push((apex(i, e), tup(x | (1 << n))));
                }
            }
        }
        edges.push((apex(n, 0), tup(x)));
        edges.push((apex(n, 1), tup(x | (1 << n))));
    }
    let mut labels = Vec::with_capacity(total);
    for i in 1..=nn {
        labels.push(format!("alpha_{i}_0"));
        labels.push(format!("alpha_{i}_1"));
    }
    for x in 0..new_tuples {
        labels.push(format!("x_{}", tuple_bits(x, nn)));
    }
    Graph::with_labels(total, &edges, labels)
}

/// Parasol: hub I over the 7-cycle A1..A7, brim circulant B1..B7 with
/// connections at distances 1 and 2, spokes Ai-Bi and Ai-B(i+1).
pub fn parasol() -> Result<Graph, GraphError> {
    let a = |i: usize| 1 + (i - 1) % 7;
    let b = |i: usize| 8 + (i - 1) % 7;
    let mut edges = Vec::new();
    for i in 1..=7 {
        edges.push(ord((0, a(i))));
        edges.push(ord((a(i), a(i % 7 + 1))));
        edges.push(ord((b(i), b(i % 7 + 1))));
        edges.push(ord((b(i), b((i + 1) % 7 + 1))));
        edges.push(ord((a(i), b(i))));
        edges.push(ord((a(i), b(i % 7 + 1))));
    }
    edges.sort_unstable();
    edges.dedup();
    let mut labels = vec!["I".to_string()];
    labels.extend((1..=7).map(|i| format!("A{i}")));
    labels.extend((1..=7).map(|i| format!("B{i}")));
    Graph::with_labels(15, &edges, labels)
}

/// Parasol plus B': a new vertex adjacent to B1 and to N(B1) minus {B3, B6}.
pub fn parasol_plus() -> Result<Graph, GraphError> {
    let p = parasol()?;
    let b1 = p.vertex_by_label("B1").unwrap();
    let b3 = p.vertex_by_label("B3").unwrap();
    let b6 = p.vertex_by_label("B6").unwrap();
    let mut edges = p.edges();
    edges.push((b1, 15));
    for u in MaskIter(p.row(b1)) {
        if u != b3 && u != b6 {
            edges.push((u, 15));
        }
    }
    let mut labels: Vec<String> = p.labels().unwrap().to_vec();
    labels.push("B'".to_string());
    Graph::with_labels(16, &edges, labels)
}

/// Kneser graph: vertices are the k-subsets of {0..n-1}, adjacent iff
/// disjoint. Requires n > 2k.
fn kneser(n: usize, k: usize) -> Result<Graph, GenError> {
    let mut subsets: Vec<u32> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    subsets.sort_unstable();
    if subsets.len() > 64 {
        return Err(param_err("kneser", "more than 64 vertices"));
    }
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    let labels = subsets
        .iter()
        .map(|&s| {
            let elems: Vec<String> = (0..n)
                .filter(|&i| s >> i & 1 == 1)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    Ok(Graph::with_labels(subsets.len(), &edges, labels)?)
}

/// Circulant graph on n vertices with the given connection distances.
/// Not part of `FamilySpec`; used by the transitivity harnesses.
pub fn circulant(n: usize, dists: &[usize]) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for v in 0..n {
        for &d in dists {
            if d == 0 || 2 * d > n || (2 * d == n && v >= n / 2) {
                continue;
            }
            edges.push(ord((v, (v + d) % n)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, &edges)
}

/// 1-skeleton of the d-dimensional hypercube (vertices are bit strings,
/// edges flip one bit). Used by the transitivity harnesses.
pub fn hypercube_skeleton(d: usize) -> Result<Graph, GraphError> {
    let m = 1usize << d;
    let mut edges = Vec::new();
    for x in 0..m {
        for i in 0..d {
            let y = x ^ (1 << i);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    Graph::new(m, &edges)
}

// ---------------------------------------------------------------------------
// Bundled data
// ---------------------------------------------------------------------------

const BUNDLED: &[(&str, &str)] = &[
    ("parasol.txt", include_str!("../data/parasol.txt")),
    ("dunce_hat.txt", include_str!("../data/dunce_hat.txt")),
    ("bings_house.txt", include_str!("../data/bings_house.txt")),
    (
        "dh_wheel.cert.json",
        include_str!("../data/dh_wheel.cert.json"),
    ),
    (
        "dh_remark.cert.json",
        include_str!("../data/dh_remark.cert.json"),
    ),
    (
        "bings_house.cert.json",
        include_str!("../data/bings_house.cert.json"),
    ),
    (
        "parasol_ws.cert.json",
        include_str!("../data/parasol_ws.cert.json"),
    ),
];

/// Contents of a bundled data file. `DISMANTLE_DATA_DIR` overrides the
/// compiled-in copy.
pub fn data_file(name: &str) -> Result<String, GenError> {
    if let Ok(dir) = std::env::var("DISMANTLE_DATA_DIR") {
        let path = std::path::Path::new(&dir).join(name);
        return std::fs::read_to_string(&path)
            .map_err(|e| GenError::Data(name.to_string(), e.to_string()));
    }
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, body)| body.to_string())
        .ok_or_else(|| GenError::Data(name.to_string(), "no such bundled file".to_string()))
}

fn load_bundled(name: &str) -> Result<Graph, GenError> {
    let body = data_file(name)?;
    read_graph(&body).map_err(|e| GenError::Data(name.to_string(), e.to_string()))
}

// ---------------------------------------------------------------------------
// Edge-list format
// ---------------------------------------------------------------------------

/// Parses the native edge-list format: header `n m`, then m lines `u v`
/// with 0 <= u < v < n, then optional `# label v name` directives. Other
/// `#` lines are comments.
pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let fail = |line, kind| Err(ParseError { line, kind });
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(spec) = rest.strip_prefix("label ") {
                let mut it = spec.split_whitespace();
                let (v, name) = match (it.next(), it.next(), it.next()) {
                    (Some(v), Some(name), None) => (v, name),
                    _ => return fail(lineno, ParseErrorKind::BadLabel),
                };
                let v: usize = match v.parse() {
                    Ok(v) => v,
                    Err(_) => return fail(lineno, ParseErrorKind::BadLabel),
                };
                labels.push((v, name.to_string()));
            }
            continue;
        }
        let mut nums = line.split_whitespace();
        let (a, b) = match (nums.next(), nums.next(), nums.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return fail(
                    lineno,
                    if header.is_none() {
                        ParseErrorKind::BadHeader
                    } else {
                        ParseErrorKind::BadEdge(line.to_string())
                    },
                )
            }
        };
        let (a, b): (usize, usize) = match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                return fail(
                    lineno,
                    if header.is_none() {
                        ParseErrorKind::BadHeader
                    } else {
                        ParseErrorKind::BadEdge(line.to_string())
                    },
                )
            }
        };
        match header {
            None => {
                if a > 64 {
                    return fail(lineno, ParseErrorKind::TooLarge(a));
                }
                header = Some((a, b));
            }
            Some((n, _)) => {
                if a == b {
                    return fail(lineno, ParseErrorKind::Loop(a));
                }
                if a > b {
                    return fail(lineno, ParseErrorKind::BadEdge(line.to_string()));
                }
                if b >= n {
                    return fail(lineno, ParseErrorKind::OutOfRange(b));
                }
                if edges.contains(&(a, b)) {
                    return fail(lineno, ParseErrorKind::DuplicateEdge(a, b));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = match header {
        Some(h) => h,
        None => return fail(1, ParseErrorKind::BadHeader),
    };
    if edges.len() != m {
        return fail(
            text.lines().count(),
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        );
    }
    if labels.is_empty() {
        Graph::new(n, &edges).map_err(|_| ParseError {
            line: 1,
            kind: ParseErrorKind::BadHeader,
        })
    } else {
        let mut names = vec![String::new(); n];
        for (v, name) in labels {
            if v >= n {
                return fail(1, ParseErrorKind::OutOfRange(v));
            }
            names[v] = name;
        }
        Graph::with_labels(n, &edges, names).map_err(|_| ParseError {
            line: 1,
            kind: ParseErrorKind::BadLabels,
        })
    }
}

/// Writes the native edge-list format; labels go last.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(labels) = g.labels() {
        for (v, name) in labels.iter().enumerate() {
            out.push_str(&format!("# label {v} {name}\n"));
        }
    }
    out
}

/// DOT export (write-only).
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(name) => out.push_str(&format!("  {v} [label=\"{name}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses a family name plus parameters as used by the CLI.
pub fn parse_family(
    name: &str,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<FamilySpec, GenError> {
    let need_n = || n.ok_or_else(|| param_err(name, "missing --n"));
    Ok(match name {
        "complete" => FamilySpec::Complete(need_n()?),
        "cycle" => FamilySpec::Cycle(need_n()?),
        "path" => FamilySpec::Path(need_n()?),
        "octahedron" => FamilySpec::Octahedron(need_n()?),
        "cubion" => FamilySpec::Cubion(need_n()?),
        "parasol" => FamilySpec::Parasol,
        "parasol_plus" => FamilySpec::ParasolPlus,
        "dunce_hat" => FamilySpec::DunceHat,
        "bings_house" => FamilySpec::BingsHouse,
        "kneser" => FamilySpec::Kneser(need_n()?, k.ok_or_else(|| param_err(name, "missing --k"))?),
        "wheel" => FamilySpec::Wheel(need_n()?),
        "hypercube_clique" => FamilySpec::HypercubeClique(need_n()?),
        other => {
            return Err(param_err(other, "unknown family"));
        }
    })
}

pub fn mask_of_labels(g: &Graph, names: &[&str]) -> crate::graph::Mask {
    mask_of(
        &names
            .iter()
            .map(|n| g.vertex_by_label(n).expect("label"))
            .collect::<Vec<_>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn cubion_counts() {
        for n in 1..=4 {
            let q = generate(&FamilySpec::Cubion(n)).unwrap();
            assert_eq!(q.n(), (1 << n) + 2 * n);
        }
        let q2 = generate(&FamilySpec::Cubion(2)).unwrap();
        assert_eq!(q2.edge_count(), 18);
    }

    #[test]
    fn octahedron_is_complement_of_matching() {
        let o3 = generate(&FamilySpec::Octahedron(3)).unwrap();
        assert_eq!(o3.n(), 6);
        for v in 0..6 {
            assert_eq!(o3.degree(v), 4);
        }
    }

    #[test]
    fn cubion_alpha_links_recurse() {
        for n in 2..=4 {
            let q = generate(&FamilySpec::Cubion(n)).unwrap();
            let smaller = generate(&FamilySpec::Cubion(n - 1)).unwrap();
            for i in 1..=n {
                for eps in 0..2 {
                    let v = q.vertex_by_label(&format!("alpha_{i}_{eps}")).unwrap();
                    let link = q.open_neighbourhood(v).unwrap().induced();
                    assert!(
                        are_isomorphic(&link, &smaller).is_some(),
                        "alpha_{i}_{eps} link in cubion({n})"
                    );
                }
            }
        }
    }

    #[test]
    fn cubion_tuple_links_collapse_to_octahedra() {
        use crate::engine::Solver;
        for n in 1..=4usize {
            let q = generate(&FamilySpec::Cubion(n)).unwrap();
            let octa = generate(&FamilySpec::Octahedron(n)).unwrap();
            let solver = Solver::new(&q, u64::MAX);
            for x in 0..1usize << n {
                let v = 2 * n + x;
                let mut s = q.row(v);
                while let Some(d) = solver.dominated_in(s) {
                    s &= !(1u64 << d);
                }
                let core = q.induced(s).0;
                assert!(
                    are_isomorphic(&core, &octa).is_some(),
                    "tuple {x} of cubion({n}) must collapse onto the {n}-octahedron"
                );
            }
        }
    }

    #[test]
    fn hypercube_clique_family() {
        let hc = generate(&FamilySpec::HypercubeClique(3)).unwrap();
        assert_eq!(hc.n(), 8);
        assert_eq!(hc.edge_count(), 28);
        assert_eq!(hc.label(5), Some("x_101"));
    }

    #[test]
    fn iterative_cubion_agrees() {
        for n in 1..=4 {
            let direct = generate(&FamilySpec::Cubion(n)).unwrap();
            let iterative = cubion_iterative(n).unwrap();
            assert_eq!(direct.n(), iterative.n());
            assert!(are_isomorphic(&direct, &iterative).is_some(), "cubion({n})");
        }
    }

    #[test]
    fn parasol_neighbourhood_shapes() {
        let p = generate(&FamilySpec::Parasol).unwrap();
        assert_eq!(p.n(), 15);
        assert_eq!(p.edge_count(), 42);
        let is_cycle = |g: &Graph, len: usize| {
            g.n() == len && (0..g.n()).all(|v| g.degree(v) == 2) && {
                crate::graph::connected(g.rows(), g.full_mask())
            }
        };
        let i = p.vertex_by_label("I").unwrap();
        assert!(is_cycle(&p.open_neighbourhood(i).unwrap().induced(), 7));
        for idx in 1..=7 {
            let a = p.vertex_by_label(&format!("A{idx}")).unwrap();
            assert!(is_cycle(&p.open_neighbourhood(a).unwrap().induced(), 5));
        }
        for idx in 1..=7 {
            let b = p.vertex_by_label(&format!("B{idx}")).unwrap();
            let link = p.open_neighbourhood(b).unwrap().induced();
            // C4 with two pendant edges on two consecutive cycle vertices
            assert_eq!(link.n(), 6);
            let mut degs: Vec<usize> = (0..6).map(|v| link.degree(v)).collect();
            degs.sort_unstable();
            assert_eq!(degs, vec![1, 1, 2, 2, 3, 3]);
            let threes: Vec<usize> = (0..6).filter(|&v| link.degree(v) == 3).collect();
            assert!(link.adjacent(threes[0], threes[1]));
        }
        // consistency with the B' rule: B3 and B6 are neighbours of B1
        let b1 = p.vertex_by_label("B1").unwrap();
        for other in ["B3", "B6"] {
            let v = p.vertex_by_label(other).unwrap();
            assert!(p.adjacent(b1, v));
        }
    }

    #[test]
    fn parasol_plus_attachment() {
        let pp = generate(&FamilySpec::ParasolPlus).unwrap();
        assert_eq!(pp.n(), 16);
        let bp = pp.vertex_by_label("B'").unwrap();
        let nbrs: Vec<&str> = pp
            .open_neighbourhood(bp)
            .unwrap()
            .to_vec()
            .into_iter()
            .map(|v| pp.label(v).unwrap())
            .collect();
        assert_eq!(nbrs, vec!["A1", "A7", "B1", "B2", "B7"]);
    }

    #[test]
    fn dunce_hat_and_bings_house_load() {
        let dh = generate(&FamilySpec::DunceHat).unwrap();
        assert_eq!(dh.n(), 17);
        assert_eq!(dh.edge_count(), 52);
        let expected: Vec<String> = ["1", "2", "3", "4"]
            .iter()
            .map(|s| s.to_string())
            .chain(('a'..='l').map(|c| c.to_string()))
            .chain(std::iter::once("z".to_string()))
            .collect();
        assert_eq!(dh.labels().unwrap(), &expected[..]);
        // the rim a..l is a 12-cycle and z is adjacent to exactly the rim
        let z = dh.vertex_by_label("z").unwrap();
        assert_eq!(dh.degree(z), 12);

        let bh = generate(&FamilySpec::BingsHouse).unwrap();
        assert_eq!(bh.n(), 21);
        assert_eq!(bh.edge_count(), 68);
        assert_eq!(bh.label(0), Some("u1"));
        assert_eq!(bh.label(20), Some("w7"));
    }

    // The partially collapsed skeletons expose pinned path neighbourhoods;
    // these nail the bundled adjacency data down to the exact edges the
    // certificates rely on.
    #[test]
    fn dunce_hat_stage_three_neighbourhood_path() {
        let dh = generate(&FamilySpec::DunceHat).unwrap();
        let idx = |n: &str| dh.vertex_by_label(n).unwrap();
        // dh + 1' + 1'' - 1 + 2' - 2 + 3' - 3, primes at indices 17..=20
        let mut edges = dh.edges();
        for (prime, nbrs) in [
            (17, vec!["1", "2", "j", "i", "h"]),
            (18, vec!["1", "3", "d", "e", "f"]),
        ] {
            edges.extend(nbrs.iter().map(|n| (idx(n), prime)));
        }
        edges.extend([("2", 19), ("h", 19), ("4", 19), ("j", 19)].map(|(n, p)| (idx(n), p)));
        edges.push((17, 19)); // 2' is also tied to 1'
        edges.extend([("3", 20), ("d", 20), ("4", 20), ("f", 20)].map(|(n, p)| (idx(n), p)));
        edges.push((18, 20)); // 3' to 1''
        let g = Graph::new(21, &edges).unwrap();
        let deleted = crate::graph::mask_of(&[idx("1"), idx("2"), idx("3")]);
        let alive = g.full_mask() & !deleted;
        let nb = g.row(idx("4")) & alive;
        let want: Vec<usize> = ["b", "c", "d"]
            .iter()
            .map(|n| idx(n))
            .chain([20])
            .chain(["f", "g", "h"].iter().map(|n| idx(n)))
            .chain([19])
            .chain(["j", "k", "l"].iter().map(|n| idx(n)))
            .collect();
        assert_eq!(path_order(&g, nb).expect("a path"), want);
    }

    #[test]
    fn bings_house_stage_four_neighbourhood_paths() {
        let bh = generate(&FamilySpec::BingsHouse).unwrap();
        let idx = |n: &str| bh.vertex_by_label(n).unwrap();
        let mut edges = bh.edges();
        let additions: [(usize, &[&str]); 8] = [
            (21, &["u1", "v1", "u2", "u7", "v7"]),
            (22, &["u1", "v1", "u4", "u5", "v5"]),
            (23, &["v1", "u2", "v2", "v7"]),
            (24, &["v1", "u4", "v4", "v5"]),
            (25, &["w6", "v6", "v5", "w5", "w4"]),
            (26, &["w6", "v6", "w2", "w7", "v7"]),
            (27, &["v6", "v5", "v4", "w4"]),
            (28, &["v6", "w2", "v2", "v7"]),
        ];
        for (prime, nbrs) in additions {
            edges.extend(nbrs.iter().map(|n| (idx(n), prime)));
        }
        // prime-to-prime attachments
        edges.extend([(21, 23), (22, 24), (25, 27), (26, 28)]);
        let g = Graph::new(29, &edges).unwrap();
        let deleted = crate::graph::mask_of(&[idx("u1"), idx("v1"), idx("w6"), idx("v6")]);
        let alive = g.full_mask() & !deleted;

        let nb5 = g.row(idx("v5")) & alive;
        let want5: Vec<usize> = vec![
            idx("u6"),
            idx("u5"),
            22,
            24,
            idx("v4"),
            27,
            25,
            idx("w5"),
            idx("w1"),
        ];
        assert_eq!(path_order(&g, nb5).expect("a path"), want5);

        let nb7 = g.row(idx("v7")) & alive;
        let want7: Vec<usize> = vec![
            idx("u6"),
            idx("u7"),
            21,
            23,
            idx("v2"),
            28,
            26,
            idx("w7"),
            idx("w1"),
        ];
        assert_eq!(path_order(&g, nb7).expect("a path"), want7);
    }

    // induced-path recognizer: returns the vertex order from the endpoint
    // with the smaller index
    fn path_order(g: &Graph, sub: crate::graph::Mask) -> Option<Vec<usize>> {
        let vs: Vec<usize> = MaskIter(sub).collect();
        let deg = |v: usize| (g.row(v) & sub).count_ones();
        let mut ends: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) == 1).collect();
        if ends.len() != 2 || vs.iter().any(|&v| deg(v) > 2) {
            return None;
        }
        ends.sort_unstable();
        let mut order = vec![ends[0]];
        let mut seen = 1u64 << ends[0];
        while order.len() < vs.len() {
            let next = g.row(*order.last().unwrap()) & sub & !seen;
            if next.count_ones() != 1 {
                return None;
            }
            let v = next.trailing_zeros() as usize;
            order.push(v);
            seen |= 1 << v;
        }
        Some(order)
    }

    #[test]
    fn kneser_petersen() {
        let pet = generate(&FamilySpec::Kneser(5, 2)).unwrap();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
        for v in 0..10 {
            assert_eq!(pet.degree(v), 3);
        }
        assert!(generate(&FamilySpec::Kneser(4, 2)).is_err());
    }

    #[test]
    fn read_write_round_trip() {
        let p3 = read_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let q3 = generate(&FamilySpec::Cubion(3)).unwrap();
        let text = write_graph(&q3);
        let back = read_graph(&text).unwrap();
        assert_eq!(back, q3);
        assert!(are_isomorphic(&back, &q3).is_some());
    }

    #[test]
    fn dot_export() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let dot = write_dot(&c4);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = read_graph("3 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::DuplicateEdge(0, 1)));

        let err = read_graph("3 1\n2 2\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Loop(2)));

        let err = read_graph("3 1\n1 0\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::BadEdge(_)));

        let err = read_graph("3 2\n0 1\n").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::EdgeCount {
                expected: 2,
                found: 1
            }
        ));

        assert!(read_graph("0 0\n").is_ok(), "empty graph tolerated by io");
    }

    #[test]
    fn circulant_and_hypercube_helpers() {
        let c = circulant(6, &[1, 2]).unwrap();
        assert_eq!(c.edge_count(), 12);
        let h = hypercube_skeleton(3).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.edge_count(), 12);
    }
}
