//! Replayable dismantling certificates.
//!
//! A certificate pins the exact indexed graph it was issued for (by
//! structural hash), lists moves, and names the final graph. Verification
//! replays the moves and re-decides every side condition from scratch, so
//! a certificate is evidence independent of whatever search produced it.
//!
//! Vertices added by `add` moves take consecutive fresh indices starting
//! at the initial vertex count.

use serde::{Deserialize, Serialize};

use crate::engine::Solver;
use crate::graph::{mask_of, Graph, Mask, MaskIter, MAX_VERTICES};

pub const CERT_VERSION: &str = "cert_v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Move {
    /// Delete `v`, claiming its current open neighbourhood is (k-1)-dismantlable.
    Delete { v: usize, k: i64 },
    /// Insert a fresh vertex `v` adjacent to `nbrs`, claiming the set induces
    /// a (k-1)-dismantlable graph.
    Add { v: usize, k: i64, nbrs: Vec<usize> },
    /// Delete the edge `{u, v}`, claiming N(u) and N(v) meet in a
    /// 0-dismantlable graph.
    DeleteEdge { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinalGraph {
    Point,
    Vertices(Vec<usize>),
}

// JSON shape: "point" | {"vertices": [...]}
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FinalRepr {
    Tag(String),
    Vertices { vertices: Vec<usize> },
}

impl Serialize for FinalGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FinalGraph::Point => FinalRepr::Tag("point".to_string()).serialize(s),
            FinalGraph::Vertices(v) => FinalRepr::Vertices {
                vertices: v.clone(),
            }
            .serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for FinalGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match FinalRepr::deserialize(d)? {
            FinalRepr::Tag(t) if t == "point" => Ok(FinalGraph::Point),
            FinalRepr::Tag(t) => Err(serde::de::Error::custom(format!(
                "unknown final graph tag {t:?}"
            ))),
            FinalRepr::Vertices { vertices } => Ok(FinalGraph::Vertices(vertices)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub version: String,
    pub graph_hash: String,
    pub moves: Vec<Move>,
    #[serde(rename = "final")]
    pub final_graph: FinalGraph,
}

impl Certificate {
    pub fn new(g: &Graph, moves: Vec<Move>, final_graph: FinalGraph) -> Certificate {
        Certificate {
            version: CERT_VERSION.to_string(),
            graph_hash: g.structural_hash(),
            moves,
            final_graph,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VerifyOutcome {
    Valid,
    /// Structurally unusable: wrong version, wrong graph, bad indices.
    Malformed {
        reason: String,
    },
    /// Replay reached the move but its side condition failed.
    FailedMove {
        index: usize,
        reason: String,
    },
    /// A side-condition decision ran out of budget.
    Indeterminate {
        index: usize,
    },
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub outcome: VerifyOutcome,
    /// Search-tree expansions spent re-deciding side conditions.
    pub expanded: u64,
}

/// Replays `cert` against `g`, re-checking every side condition.
pub fn verify_move_sequence(g: &Graph, cert: &Certificate, budget: u64) -> VerifyReport {
    let mut expanded = 0u64;
    let malformed = |reason: String, expanded| VerifyReport {
        outcome: VerifyOutcome::Malformed { reason },
        expanded,
    };
    if cert.version != CERT_VERSION {
        return malformed(format!("unknown version {:?}", cert.version), expanded);
    }
    if cert.graph_hash != g.structural_hash() {
        return malformed("graph hash mismatch".to_string(), expanded);
    }

    let mut rows: Vec<Mask> = g.rows().to_vec();
    let mut alive: Mask = g.full_mask();

    // decide "induced subgraph on `sub` is in D_j" on the replay state
    let decide = |rows: &[Mask], sub: Mask, j: i64, expanded: &mut u64| -> Result<bool, ()> {
        let (induced, _) = induced_graph(rows, sub);
        let mut solver = Solver::new(&induced, budget.saturating_sub(*expanded));
        let res = solver.in_level(induced.full_mask(), j);
        *expanded += solver.expanded();
        res.map_err(|_| ())
    };

    for (index, mv) in cert.moves.iter().enumerate() {
        let fail = |reason: String, expanded| VerifyReport {
            outcome: VerifyOutcome::FailedMove { index, reason },
            expanded,
        };
        match mv {
            Move::Delete { v, k } => {
                if *v >= rows.len() || alive >> *v & 1 == 0 {
                    return malformed(format!("delete of absent vertex {v}"), expanded);
                }
                if *k < 0 {
                    return malformed(format!("delete level {k} out of range"), expanded);
                }
                let nb = rows[*v] & alive;
                match decide(&rows, nb, *k - 1, &mut expanded) {
                    Ok(true) => {}
                    Ok(false) => {
                        return fail(format!("N({v}) is not {}-dismantlable", *k - 1), expanded)
                    }
                    Err(()) => {
                        return VerifyReport {
                            outcome: VerifyOutcome::Indeterminate { index },
                            expanded,
                        }
                    }
                }
                alive &= !(1u64 << *v);
            }
            Move::Add { v, k, nbrs } => {
                if *v != rows.len() {
                    return malformed(
                        format!(
                            "added vertex {v} is not the next fresh index {}",
                            rows.len()
                        ),
                        expanded,
                    );
                }
                if rows.len() == MAX_VERTICES {
                    return malformed("replay exceeds 64 vertices".to_string(), expanded);
                }
                if *k < 0 {
                    return malformed(format!("add level {k} out of range"), expanded);
                }
                let mut nb: Mask = 0;
                for &u in nbrs {
                    if u >= rows.len() || alive >> u & 1 == 0 {
                        return malformed(format!("add references absent vertex {u}"), expanded);
                    }
                    if nb >> u & 1 == 1 {
                        return malformed(format!("add lists vertex {u} twice"), expanded);
                    }
                    nb |= 1 << u;
                }
                match decide(&rows, nb, *k - 1, &mut expanded) {
                    Ok(true) => {}
                    Ok(false) => {
                        return fail(
                            format!("declared neighbour set is not {}-dismantlable", *k - 1),
                            expanded,
                        )
                    }
                    Err(()) => {
                        return VerifyReport {
                            outcome: VerifyOutcome::Indeterminate { index },
                            expanded,
                        }
                    }
                }
                rows.push(nb);
                let v_new = rows.len() - 1;
                for u in MaskIter(nb) {
                    rows[u] |= 1 << v_new;
                }
                alive |= 1 << v_new;
            }
            Move::DeleteEdge { u, v } => {
                if *u >= rows.len() || *v >= rows.len() || *u == *v {
                    return malformed(format!("bad edge {u}-{v}"), expanded);
                }
                if alive >> *u & 1 == 0 || alive >> *v & 1 == 0 || rows[*u] >> *v & 1 == 0 {
                    return malformed(format!("edge {u}-{v} not present"), expanded);
                }
                let common = rows[*u] & rows[*v] & alive;
                match decide(&rows, common, 0, &mut expanded) {
                    Ok(true) => {}
                    Ok(false) => {
                        return fail(
                            format!("N({u}) and N({v}) do not meet in a 0-dismantlable graph"),
                            expanded,
                        )
                    }
                    Err(()) => {
                        return VerifyReport {
                            outcome: VerifyOutcome::Indeterminate { index },
                            expanded,
                        }
                    }
                }
                rows[*u] &= !(1u64 << *v);
                rows[*v] &= !(1u64 << *u);
            }
        }
    }

    let final_ok = match &cert.final_graph {
        FinalGraph::Point => alive.count_ones() == 1,
        FinalGraph::Vertices(vs) => vs.iter().all(|&v| v < rows.len()) && alive == mask_of(vs),
    };
    if !final_ok {
        return VerifyReport {
            outcome: VerifyOutcome::FailedMove {
                index: cert.moves.len(),
                reason: "final graph does not match the replay state".to_string(),
            },
            expanded,
        };
    }
    VerifyReport {
        outcome: VerifyOutcome::Valid,
        expanded,
    }
}

/// Induced subgraph of a replay state (re-indexed, ascending).
fn induced_graph(rows: &[Mask], sub: Mask) -> (Graph, Vec<usize>) {
    let verts: Vec<usize> = MaskIter(sub).collect();
    let mut edges = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if rows[u] >> v & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    (
        Graph::new(verts.len(), &edges).expect("induced replay graph is valid"),
        verts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, FamilySpec};

    #[test]
    fn json_round_trip_and_field_names() {
        let g = generators::generate(&FamilySpec::Path(3)).unwrap();
        let cert = Certificate::new(
            &g,
            vec![
                Move::Add {
                    v: 3,
                    k: 0,
                    nbrs: vec![0, 1, 2],
                },
                Move::Delete { v: 1, k: 0 },
                Move::DeleteEdge { u: 0, v: 3 },
            ],
            FinalGraph::Point,
        );
        let json = cert.to_json();
        assert!(json.contains("\"op\": \"delete_edge\""));
        assert!(json.contains("\"cert_v1\""));
        assert!(json.contains("\"final\": \"point\""));
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, cert);

        let named = Certificate::new(&g, vec![], FinalGraph::Vertices(vec![0, 1, 2]));
        let back = Certificate::from_json(&named.to_json()).unwrap();
        assert_eq!(back.final_graph, FinalGraph::Vertices(vec![0, 1, 2]));
    }

    // The 2-path u-x-v: adding y over {u,x,v} at level 0 then 0-deleting x
    // is valid, while deleting x directly is invalid at every level.
    #[test]
    fn two_path_exchange() {
        let y = generators::generate(&FamilySpec::Path(3)).unwrap();
        let good = Certificate::new(
            &y,
            vec![
                Move::Add {
                    v: 3,
                    k: 0,
                    nbrs: vec![0, 1, 2],
                },
                Move::Delete { v: 1, k: 0 },
            ],
            FinalGraph::Vertices(vec![0, 2, 3]),
        );
        assert!(verify_move_sequence(&y, &good, 1 << 20).outcome.is_valid());

        for k in 0..6 {
            let bad = Certificate::new(
                &y,
                vec![Move::Delete { v: 1, k }],
                FinalGraph::Vertices(vec![0, 2]),
            );
            let report = verify_move_sequence(&y, &bad, 1 << 20);
            assert!(
                matches!(report.outcome, VerifyOutcome::FailedMove { index: 0, .. }),
                "level {k} deletion of the middle vertex must fail"
            );
        }
    }

    #[test]
    fn malformed_certificates_are_reported() {
        let g = generators::generate(&FamilySpec::Cycle(4)).unwrap();
        let other = generators::generate(&FamilySpec::Cycle(5)).unwrap();
        let cert = Certificate::new(&other, vec![], FinalGraph::Point);
        let report = verify_move_sequence(&g, &cert, 1 << 20);
        assert!(matches!(report.outcome, VerifyOutcome::Malformed { .. }));

        let cert = Certificate::new(&g, vec![Move::Delete { v: 9, k: 0 }], FinalGraph::Point);
        let report = verify_move_sequence(&g, &cert, 1 << 20);
        assert!(matches!(report.outcome, VerifyOutcome::Malformed { .. }));

        let mut cert = Certificate::new(&g, vec![], FinalGraph::Point);
        cert.version = "cert_v0".to_string();
        let report = verify_move_sequence(&g, &cert, 1 << 20);
        assert!(matches!(report.outcome, VerifyOutcome::Malformed { .. }));
    }

    #[test]
    fn budget_exhaustion_reports_indeterminate() {
        let g = generators::generate(&FamilySpec::Cubion(3)).unwrap();
        let a30 = g.vertex_by_label("alpha_3_0").unwrap();
        let cert = Certificate::new(
            &g,
            vec![Move::Delete { v: a30, k: 2 }],
            FinalGraph::Vertices((0..g.n()).filter(|&v| v != a30).collect()),
        );
        let report = verify_move_sequence(&g, &cert, 2);
        assert!(matches!(
            report.outcome,
            VerifyOutcome::Indeterminate { index: 0 }
        ));
        let report = verify_move_sequence(&g, &cert, 1 << 22);
        assert!(report.outcome.is_valid());
    }

    #[test]
    fn final_graph_must_match() {
        let g = generators::generate(&FamilySpec::Complete(3)).unwrap();
        let cert = Certificate::new(&g, vec![Move::Delete { v: 0, k: 0 }], FinalGraph::Point);
        let report = verify_move_sequence(&g, &cert, 1 << 20);
        assert!(
            matches!(report.outcome, VerifyOutcome::FailedMove { index: 1, .. }),
            "two vertices remain, not a point"
        );
    }
}
