//! The dismantling engine: D_k membership with certificates, minimal
//! dismantling index, non-evasiveness, stiff cores, ws-dismantling and
//! Mazurkiewicz-style derivability.
//!
//! All searches run over vertex subsets of a fixed root graph, memoized on
//! (subset, level). Level 0 never searches: deletion order is irrelevant
//! for 0-dismantling, so a greedy pass decides it. Negative results are
//! cached permanently; running out of budget surfaces as `Indeterminate`,
//! never as a guessed `No`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU8, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::cert::{Certificate, FinalGraph, Move};
use crate::cliques;
use crate::graph::{connected, Graph, GraphError, Mask, MaskIter};

/// Search-tree node budget was exhausted before the answer was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchStats {
    pub expanded: u64,
    pub memo_hits: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DismantleResult {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
    pub budget: u64,
}

impl DismantleResult {
    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinIndexValue {
    /// Smallest k with the graph in D_k; -1 means cone.
    Index(i64),
    NotInDInfinity,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinIndexResult {
    pub value: MinIndexValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
    pub budget: u64,
}

/// Vertex-set answer that may be cut short by the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KVertices {
    Decided(Vec<usize>),
    Indeterminate,
}

#[derive(Debug, Clone, Copy)]
pub enum StiffOrder {
    /// Smallest eligible index first.
    Deterministic,
    /// Uniform choice among eligible vertices, seeded.
    Seeded(u64),
}

const UNKNOWN: u8 = 0;
const YES: u8 = 1;
const NO: u8 = 2;

/// Subsets of graphs this small get flat atomic tables; larger roots fall
/// back to hash maps. Flat tables stay valid under concurrent use
/// (identical values, last writer wins).
const FLAT_LIMIT: usize = 24;

enum Table {
    Flat(Vec<AtomicU8>),
    Map(HashMap<Mask, bool>),
}

impl Table {
    fn new(n: usize) -> Table {
        if n <= FLAT_LIMIT {
            let mut v = Vec::new();
            v.resize_with(1usize << n, || AtomicU8::new(UNKNOWN));
            Table::Flat(v)
        } else {
            Table::Map(HashMap::new())
        }
    }

    fn get(&self, s: Mask) -> u8 {
        match self {
            Table::Flat(v) => v[s as usize].load(Ordering::Relaxed),
            Table::Map(m) => m.get(&s).map_or(UNKNOWN, |&b| if b { YES } else { NO }),
        }
    }

    fn set(&mut self, s: Mask, yes: bool) {
        match self {
            Table::Flat(v) => v[s as usize].store(if yes { YES } else { NO }, Ordering::Relaxed),
            Table::Map(m) => {
                m.insert(s, yes);
            }
        }
    }
}

/// Memoized decision procedures over the subsets of one root graph.
pub struct Solver<'g> {
    g: &'g Graph,
    budget: u64,
    expanded: u64,
    memo_hits: u64,
    /// levels[k] memoizes D_k membership of subsets; allocated lazily.
    levels: Vec<Option<Table>>,
    ne_table: Option<Table>,
    prunes: bool,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, budget: u64) -> Solver<'g> {
        Solver {
            g,
            budget,
            expanded: 0,
            memo_hits: 0,
            levels: Vec::new(),
            ne_table: None,
            prunes: true,
        }
    }

    /// Plain memoized recursion with the connectivity, triangle-free and
    /// greedy-D_0 shortcuts switched off. Slower but structurally
    /// assumption-free; the verification suite uses it where one of those
    /// shortcuts is itself the fact under test.
    pub fn new_without_prunes(g: &'g Graph, budget: u64) -> Solver<'g> {
        Solver {
            prunes: false,
            ..Solver::new(g, budget)
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn expanded(&self) -> u64 {
        self.expanded
    }

    pub fn memo_hits(&self) -> u64 {
        self.memo_hits
    }

    fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.expanded += 1;
        if self.expanded > self.budget {
            Err(BudgetExhausted)
        } else {
            Ok(())
        }
    }

    fn table(&mut self, k: usize) -> &mut Table {
        if self.levels.len() <= k {
            self.levels.resize_with(k + 1, || None);
        }
        let n = self.g.n();
        self.levels[k].get_or_insert_with(|| Table::new(n))
    }

    /// Is the induced subgraph on `s` a cone? (D_{-1})
    pub fn is_cone_mask(&self, s: Mask) -> bool {
        MaskIter(s).any(|v| self.g.closed_row(v, s) == s)
    }

    /// Some vertex of `s` dominated within `s`, least index first.
    pub fn dominated_in(&self, s: Mask) -> Option<usize> {
        for x in MaskIter(s) {
            let cx = self.g.closed_row(x, s);
            for a in MaskIter(s) {
                if a != x && cx & !self.g.closed_row(a, s) == 0 {
                    return Some(x);
                }
            }
        }
        None
    }

    /// D_0 membership by greedy deletion of dominated vertices; the order
    /// does not matter for level 0, so no search is needed.
    pub fn d0(&mut self, s: Mask) -> Result<bool, BudgetExhausted> {
        if s == 0 {
            return Ok(false);
        }
        if s.count_ones() == 1 {
            return Ok(true);
        }
        match self.table(0).get(s) {
            YES => {
                self.memo_hits += 1;
                return Ok(true);
            }
            NO => {
                self.memo_hits += 1;
                return Ok(false);
            }
            _ => {}
        }
        self.tick()?;
        let mut t = s;
        while t.count_ones() > 1 {
            match self.dominated_in(t) {
                Some(x) => t &= !(1u64 << x),
                None => break,
            }
        }
        let yes = t.count_ones() == 1;
        self.table(0).set(s, yes);
        Ok(yes)
    }

    fn triangle_free(&self, s: Mask) -> bool {
        for v in MaskIter(s) {
            let nb = self.g.row(v) & s;
            for u in MaskIter(nb) {
                if u > v && self.g.row(u) & nb != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn edge_count_in(&self, s: Mask) -> usize {
        MaskIter(s)
            .map(|v| (self.g.row(v) & s).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Is the induced subgraph on `s` in D_j? Handles j = -1 (cone) and
    /// caps j at |s| - 2, which is exact: a non-evasive graph on m
    /// vertices is already (m-2)-dismantlable.
    pub fn in_level(&mut self, s: Mask, j: i64) -> Result<bool, BudgetExhausted> {
        let m = s.count_ones() as i64;
        if m == 0 {
            return Ok(false);
        }
        if j <= -1 {
            return Ok(j == -1 && self.is_cone_mask(s));
        }
        if m == 1 {
            return Ok(true);
        }
        // m >= 2 here, so the cap keeps j >= 0
        let j = j.min(m - 2);
        if j == 0 {
            return self.d0(s);
        }
        self.dk(s, j as usize)
    }

    /// Backtracking search for D_k membership, k >= 1. Order matters at
    /// these levels, so this explores deletion choices with memoization
    /// on (subset, k) and permanent negative entries.
    fn dk(&mut self, s: Mask, k: usize) -> Result<bool, BudgetExhausted> {
        debug_assert!(k >= 1);
        if s.count_ones() == 1 {
            return Ok(true);
        }
        match self.table(k).get(s) {
            YES => {
                self.memo_hits += 1;
                return Ok(true);
            }
            NO => {
                self.memo_hits += 1;
                return Ok(false);
            }
            _ => {}
        }
        self.tick()?;
        let yes = self.dk_expand(s, k)?;
        self.table(k).set(s, yes);
        Ok(yes)
    }

    fn dk_expand(&mut self, s: Mask, k: usize) -> Result<bool, BudgetExhausted> {
        if self.prunes {
            if !connected(self.g.rows(), s) {
                return Ok(false);
            }
            if self.triangle_free(s) {
                // connected triangle-free: dismantlable at any level iff a tree
                return Ok(self.edge_count_in(s) == s.count_ones() as usize - 1);
            }
        }
        for x in MaskIter(s) {
            let nb = self.g.row(x) & s;
            if self.in_level(nb, k as i64 - 1)? && self.dk(s & !(1u64 << x), k)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Non-evasiveness: membership in some D_k, decided by the direct
    /// least-fixed-point recursion.
    pub fn ne(&mut self, s: Mask) -> Result<bool, BudgetExhausted> {
        if s == 0 {
            return Ok(false);
        }
        if s.count_ones() == 1 {
            return Ok(true);
        }
        let n = self.g.n();
        match self.ne_table.get_or_insert_with(|| Table::new(n)).get(s) {
            YES => {
                self.memo_hits += 1;
                return Ok(true);
            }
            NO => {
                self.memo_hits += 1;
                return Ok(false);
            }
            _ => {}
        }
        self.tick()?;
        let yes = self.ne_expand(s)?;
        self.ne_table.as_mut().unwrap().set(s, yes);
        Ok(yes)
    }

    fn ne_expand(&mut self, s: Mask) -> Result<bool, BudgetExhausted> {
        if self.prunes {
            if !connected(self.g.rows(), s) {
                return Ok(false);
            }
            if self.triangle_free(s) {
                return Ok(self.edge_count_in(s) == s.count_ones() as usize - 1);
            }
            if self.d0(s)? {
                return Ok(true);
            }
        }
        for x in MaskIter(s) {
            let nb = self.g.row(x) & s;
            if nb != 0 && self.ne(nb)? && self.ne(s & !(1u64 << x))? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Vertices of `s` whose neighbourhood within `s` is in D_{k-1}.
    pub fn level_vertices(&mut self, s: Mask, k: i64) -> Result<Mask, BudgetExhausted> {
        let mut out = 0;
        for x in MaskIter(s) {
            if self.in_level(self.g.row(x) & s, k - 1)? {
                out |= 1 << x;
            }
        }
        Ok(out)
    }

    /// Deletion sequence witnessing `s` in D_k (all moves at level k);
    /// call only after `in_level(s, k)` returned true.
    fn dk_walk(&mut self, mut s: Mask, k: i64) -> Result<Vec<Move>, BudgetExhausted> {
        let mut moves = Vec::new();
        while s.count_ones() > 1 {
            let mut picked = None;
            for x in MaskIter(s) {
                let nb = self.g.row(x) & s;
                if self.in_level(nb, k - 1)? && self.in_level(s & !(1u64 << x), k)? {
                    picked = Some(x);
                    break;
                }
            }
            let x = picked.expect("a positive D_k result must admit a first deletion");
            moves.push(Move::Delete { v: x, k });
            s &= !(1u64 << x);
        }
        Ok(moves)
    }

    /// Deletion sequence witnessing non-evasiveness. Claimed levels are
    /// per-move: 0 for cone neighbourhoods, else |N(x)| - 1, which the
    /// size cap makes sound for any non-evasive neighbourhood.
    fn ne_walk(&mut self, mut s: Mask) -> Result<Vec<Move>, BudgetExhausted> {
        let mut moves = Vec::new();
        while s.count_ones() > 1 {
            let mut picked = None;
            for x in MaskIter(s) {
                let nb = self.g.row(x) & s;
                if nb != 0 && self.ne(nb)? && self.ne(s & !(1u64 << x))? {
                    picked = Some(x);
                    break;
                }
            }
            let x = picked.expect("a positive result must admit a first deletion");
            let nb = self.g.row(x) & s;
            let k = if self.is_cone_mask(nb) {
                0
            } else {
                nb.count_ones() as i64 - 1
            };
            moves.push(Move::Delete { v: x, k });
            s &= !(1u64 << x);
        }
        Ok(moves)
    }
}

fn finish(
    g: &Graph,
    start: Instant,
    budget: u64,
    solver: Solver<'_>,
    outcome: Result<Option<Vec<Move>>, BudgetExhausted>,
) -> DismantleResult {
    let stats = SearchStats {
        expanded: solver.expanded,
        memo_hits: solver.memo_hits,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    match outcome {
        Ok(Some(moves)) => DismantleResult {
            status: Status::Yes,
            certificate: Some(Certificate::new(g, moves, FinalGraph::Point)),
            stats,
            budget,
        },
        Ok(None) => DismantleResult {
            status: Status::No,
            certificate: None,
            stats,
            budget,
        },
        Err(BudgetExhausted) => DismantleResult {
            status: Status::Indeterminate,
            certificate: None,
            stats,
            budget,
        },
    }
}

/// Is `g` k-dismantlable? k = -1 asks whether `g` is a cone; the answer
/// then carries no certificate (there is nothing to replay).
pub fn is_k_dismantlable(g: &Graph, k: i64, budget: u64) -> Result<DismantleResult, GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut solver = Solver::new(g, budget);
    let full = g.full_mask();
    if k <= -1 {
        let yes = k == -1 && solver.is_cone_mask(full);
        let mut r = finish(g, start, budget, solver, Ok(yes.then(Vec::new)));
        r.certificate = None;
        return Ok(r);
    }
    let outcome = match solver.in_level(full, k) {
        Ok(true) => solver.dk_walk(full, k).map(Some),
        Ok(false) => Ok(None),
        Err(e) => Err(e),
    };
    // moves claim the level that was asked for
    let outcome = outcome.map(|o| {
        o.map(|moves| {
            moves
                .into_iter()
                .map(|m| match m {
                    Move::Delete { v, .. } => Move::Delete { v, k },
                    other => other,
                })
                .collect()
        })
    });
    Ok(finish(g, start, budget, solver, outcome))
}

/// The set D_k(g) of k-dismantlable vertices.
pub fn k_dismantlable_vertices(
    g: &Graph,
    k: i64,
    budget: u64,
) -> Result<(KVertices, SearchStats), GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut solver = Solver::new(g, budget);
    let res = solver.level_vertices(g.full_mask(), k);
    let stats = SearchStats {
        expanded: solver.expanded,
        memo_hits: solver.memo_hits,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(match res {
        Ok(mask) => (KVertices::Decided(MaskIter(mask).collect()), stats),
        Err(BudgetExhausted) => (KVertices::Indeterminate, stats),
    })
}

/// Smallest k with `g` in D_k (-1 for cones), `NotInDInfinity` after
/// exhausting k <= min(n-2, omega-2), or `Indeterminate` on budget
/// exhaustion.
pub fn min_dismantling_index(g: &Graph, budget: u64) -> Result<MinIndexResult, GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut solver = Solver::new(g, budget);
    let full = g.full_mask();
    let done = |value, certificate, solver: Solver<'_>| MinIndexResult {
        value,
        certificate,
        stats: SearchStats {
            expanded: solver.expanded,
            memo_hits: solver.memo_hits,
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
        budget,
    };
    if solver.is_cone_mask(full) {
        // a cone 0-dismantles by deleting dominated vertices; certify that
        let moves = solver.dk_walk(full, 0).unwrap_or_default();
        let cert = Certificate::new(g, moves, FinalGraph::Point);
        return Ok(done(MinIndexValue::Index(-1), Some(cert), solver));
    }
    let omega = cliques::clique_number(g) as i64;
    let cap = (g.n() as i64 - 2).min(omega - 2);
    for k in 0..=cap.max(-1) {
        match solver.in_level(full, k) {
            Ok(true) => {
                let outcome = solver.dk_walk(full, k).map(|moves| {
                    moves
                        .into_iter()
                        .map(|m| match m {
                            Move::Delete { v, .. } => Move::Delete { v, k },
                            other => other,
                        })
                        .collect::<Vec<_>>()
                });
                return Ok(match outcome {
                    Ok(moves) => {
                        let cert = Certificate::new(g, moves, FinalGraph::Point);
                        done(MinIndexValue::Index(k), Some(cert), solver)
                    }
                    Err(BudgetExhausted) => done(MinIndexValue::Indeterminate, None, solver),
                });
            }
            Ok(false) => {}
            Err(BudgetExhausted) => {
                return Ok(done(MinIndexValue::Indeterminate, None, solver));
            }
        }
    }
    Ok(done(MinIndexValue::NotInDInfinity, None, solver))
}

/// Non-evasiveness: `g` is in D_k for some k. Agrees with
/// `min_dismantling_index` by construction of the hierarchy.
pub fn is_non_evasive(g: &Graph, budget: u64) -> Result<DismantleResult, GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut solver = Solver::new(g, budget);
    let full = g.full_mask();
    let outcome = match solver.ne(full) {
        Ok(true) => solver.ne_walk(full).map(Some),
        Ok(false) => Ok(None),
        Err(e) => Err(e),
    };
    Ok(finish(g, start, budget, solver, outcome))
}

/// Greedy k-stiff core: delete k-dismantlable vertices until none remain.
/// Returns the surviving vertex set and a replayable certificate. For
/// k = 0 the core is unique up to isomorphism whatever the order.
pub fn stiff_core(
    g: &Graph,
    k: i64,
    order: StiffOrder,
) -> Result<(Vec<usize>, Certificate), GraphError> {
    use rand::prelude::*;
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let mut solver = Solver::new(g, u64::MAX);
    let mut rng = match order {
        StiffOrder::Deterministic => None,
        StiffOrder::Seeded(seed) => Some(rand_chacha::ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut s = g.full_mask();
    let mut moves = Vec::new();
    while s.count_ones() > 1 {
        let eligible = solver
            .level_vertices(s, k)
            .expect("unbounded budget cannot exhaust");
        if eligible == 0 {
            break;
        }
        let x = match &mut rng {
            None => eligible.trailing_zeros() as usize,
            Some(rng) => {
                let opts: Vec<usize> = MaskIter(eligible).collect();
                opts[rng.gen_range(0..opts.len())]
            }
        };
        moves.push(Move::Delete { v: x, k });
        s &= !(1u64 << x);
    }
    let core: Vec<usize> = MaskIter(s).collect();
    let cert = Certificate::new(g, moves, FinalGraph::Vertices(core.clone()));
    Ok((core, cert))
}

/// ws-dismantling: reduce to a point by deletions of vertices whose
/// neighbourhood is in D_0 and of edges whose endpoints' neighbourhoods
/// meet in a D_0 graph. Edge deletions change the graph beyond induced
/// subgraphs, so states are memoized by their full adjacency rows.
pub fn ws_dismantlable(g: &Graph, budget: u64) -> Result<DismantleResult, GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut failed: std::collections::HashSet<(Mask, Vec<Mask>)> = std::collections::HashSet::new();
    let mut expanded = 0u64;
    let mut memo_hits = 0u64;
    let rows: Vec<Mask> = g.rows().to_vec();
    let outcome = ws_search(
        &rows,
        g.full_mask(),
        &mut failed,
        &mut expanded,
        &mut memo_hits,
        budget,
    );
    let stats = SearchStats {
        expanded,
        memo_hits,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(match outcome {
        Ok(Some(mut moves)) => {
            moves.reverse();
            DismantleResult {
                status: Status::Yes,
                certificate: Some(Certificate::new(g, moves, FinalGraph::Point)),
                stats,
                budget,
            }
        }
        Ok(None) => DismantleResult {
            status: Status::No,
            certificate: None,
            stats,
            budget,
        },
        Err(BudgetExhausted) => DismantleResult {
            status: Status::Indeterminate,
            certificate: None,
            stats,
            budget,
        },
    })
}

/// Greedy D_0 test on explicit rows (ws states mutate edges, so the
/// root-subset memo does not apply).
fn d0_rows(rows: &[Mask], s: Mask) -> bool {
    if s == 0 {
        return false;
    }
    let mut t = s;
    'outer: while t.count_ones() > 1 {
        for x in MaskIter(t) {
            let cx = (rows[x] & t) | (1 << x);
            for a in MaskIter(t) {
                if a != x && cx & !((rows[a] & t) | (1 << a)) == 0 {
                    t &= !(1u64 << x);
                    continue 'outer;
                }
            }
        }
        return false;
    }
    true
}

fn ws_search(
    rows: &[Mask],
    alive: Mask,
    failed: &mut std::collections::HashSet<(Mask, Vec<Mask>)>,
    expanded: &mut u64,
    memo_hits: &mut u64,
    budget: u64,
) -> Result<Option<Vec<Move>>, BudgetExhausted> {
    if alive.count_ones() == 1 {
        return Ok(Some(Vec::new()));
    }
    if !connected(rows, alive) {
        return Ok(None);
    }
    let key = (
        alive,
        MaskIter(alive).map(|v| rows[v] & alive).collect::<Vec<_>>(),
    );
    if failed.contains(&key) {
        *memo_hits += 1;
        return Ok(None);
    }
    *expanded += 1;
    if *expanded > budget {
        return Err(BudgetExhausted);
    }
    // vertex moves first: they shrink the state
    for x in MaskIter(alive) {
        let nb = rows[x] & alive;
        if nb != 0 && d0_rows(rows, nb) {
            let next = alive & !(1u64 << x);
            if let Some(mut moves) = ws_search(rows, next, failed, expanded, memo_hits, budget)? {
                let k = if MaskIter(nb).any(|c| nb & !((rows[c] & nb) | (1 << c)) == 0) {
                    0
                } else {
                    1
                };
                moves.push(Move::Delete { v: x, k });
                return Ok(Some(moves));
            }
        }
    }
    // edge moves, ascending
    for u in MaskIter(alive) {
        for v in MaskIter(rows[u] & alive) {
            if v <= u {
                continue;
            }
            let common = rows[u] & rows[v] & alive;
            if common != 0 && d0_rows(rows, common) {
                let mut next_rows = rows.to_vec();
                next_rows[u] &= !(1u64 << v);
                next_rows[v] &= !(1u64 << u);
                if let Some(mut moves) =
                    ws_search(&next_rows, alive, failed, expanded, memo_hits, budget)?
                {
                    moves.push(Move::DeleteEdge { u, v });
                    return Ok(Some(moves));
                }
            }
        }
    }
    failed.insert(key);
    Ok(None)
}

/// Mazurkiewicz-style derivability: `g` reduces to a point by deleting
/// vertices whose open neighbourhood satisfies `pred`. With `pred` =
/// "is in D_{k-1}" this coincides with D_k membership.
///
/// A certificate is attached when every deleted neighbourhood happens to
/// be non-evasive (then sound levels exist); for arbitrary predicates no
/// claimed level need be valid, and the certificate is omitted.
pub fn derivable(
    g: &Graph,
    pred: &dyn Fn(&Graph) -> bool,
    budget: u64,
) -> Result<DismantleResult, GraphError> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    let start = Instant::now();
    let mut memo: HashMap<Mask, bool> = HashMap::new();
    let mut expanded = 0u64;
    let mut memo_hits = 0u64;
    let outcome = der_search(
        g,
        g.full_mask(),
        pred,
        &mut memo,
        &mut expanded,
        &mut memo_hits,
        budget,
    );
    let mut solver = Solver::new(g, budget);
    let result = match outcome {
        Ok(Some(mut moves)) => {
            moves.reverse();
            // attach the move list only if sound levels exist throughout
            let mut s = g.full_mask();
            let mut certifiable = true;
            let mut leveled = Vec::with_capacity(moves.len());
            for mv in &moves {
                let Move::Delete { v, .. } = mv else {
                    unreachable!()
                };
                let nb = g.row(*v) & s;
                match solver.ne(nb) {
                    Ok(true) => {
                        let k = if solver.is_cone_mask(nb) {
                            0
                        } else {
                            nb.count_ones() as i64 - 1
                        };
                        leveled.push(Move::Delete { v: *v, k });
                    }
                    _ => {
                        certifiable = false;
                        break;
                    }
                }
                s &= !(1u64 << *v);
            }
            DismantleResult {
                status: Status::Yes,
                certificate: certifiable.then(|| Certificate::new(g, leveled, FinalGraph::Point)),
                stats: SearchStats {
                    expanded: expanded + solver.expanded(),
                    memo_hits: memo_hits + solver.memo_hits(),
                    elapsed_ms: start.elapsed().as_millis() as u64,
                },
                budget,
            }
        }
        Ok(None) => DismantleResult {
            status: Status::No,
            certificate: None,
            stats: SearchStats {
                expanded,
                memo_hits,
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
            budget,
        },
        Err(BudgetExhausted) => DismantleResult {
            status: Status::Indeterminate,
            certificate: None,
            stats: SearchStats {
                expanded,
                memo_hits,
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
            budget,
        },
    };
    Ok(result)
}

fn der_search(
    g: &Graph,
    s: Mask,
    pred: &dyn Fn(&Graph) -> bool,
    memo: &mut HashMap<Mask, bool>,
    expanded: &mut u64,
    memo_hits: &mut u64,
    budget: u64,
) -> Result<Option<Vec<Move>>, BudgetExhausted> {
    if s.count_ones() == 1 {
        return Ok(Some(Vec::new()));
    }
    // success unwinds the whole search, so only failures can be re-queried
    if memo.contains_key(&s) {
        *memo_hits += 1;
        return Ok(None);
    }
    *expanded += 1;
    if *expanded > budget {
        return Err(BudgetExhausted);
    }
    for x in MaskIter(s) {
        let nb = g.row(x) & s;
        let (sub, _) = g.induced(nb);
        if pred(&sub) {
            if let Some(mut moves) =
                der_search(g, s & !(1u64 << x), pred, memo, expanded, memo_hits, budget)?
            {
                moves.push(Move::Delete { v: x, k: 0 });
                return Ok(Some(moves));
            }
        }
    }
    memo.insert(s, false);
    Ok(None)
}
