//! Dominance reductions and the drivers that run them to a fixpoint.
//!
//! Three rules are implemented:
//!
//! * [`DominanceRule::VertexDom`] deletes a vertex `a` when a non-adjacent
//!   vertex `b` has `N(a) ⊆ N(b)`. Any clique through `a` can swap `a` for
//!   `b`, so the clique number is kept, though individual k-cliques may go.
//! * [`DominanceRule::EdgeDomShared`] deletes the edge `{a, u}` when an edge
//!   `{u, b}` with `b ∉ N(a)` has `N(a) ∩ N(u) ⊆ N(b)`.
//! * [`DominanceRule::EdgeDomDisjoint`] deletes the edge `{x, y}` when an
//!   edge `{u, v}` on two other vertices, neither adjacent to both `x` and
//!   `y`, has `N(x) ∩ N(y) ⊆ N(u) ∩ N(v)`.
//!
//! Edge rules never delete vertices.
//!
//! # Execution
//!
//! [`ExecMode::Serial`] deletes eagerly while scanning for the edge rules.
//! The vertex rule uses snapshot rounds in both modes, so its survivors do
//! not depend on the mode. In
//! [`ExecMode::ParallelSnapshot`] each round scans a frozen graph on a
//! worker pool, collecting `(candidate, witness)` proposals into private
//! buffers. The proposals are then applied in descending candidate order;
//! a proposal whose witness no longer holds is re-checked against the
//! current graph and dropped if no witness remains. Every applied deletion
//! is therefore valid at the moment it happens, and the outcome does not
//! depend on the number of workers. For mutually dominating pairs the
//! descending order deletes the larger candidate and keeps the smaller.

mod permutation;
mod rules;

use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use permutation::{next_tuple, permutation_count, rank_tuple, unrank_tuple};
pub use rules::{dominates_vertex, SharedWitness};

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::report::{Counters, ReductionReport};
use rules::{
    disjoint_witness, disjoint_witness_holds, shared_witness, shared_witness_at,
    shared_witness_holds, vertex_witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominanceRule {
    VertexDom,
    EdgeDomShared,
    EdgeDomDisjoint,
}

impl DominanceRule {
    pub const ALL: [DominanceRule; 3] = [
        DominanceRule::VertexDom,
        DominanceRule::EdgeDomShared,
        DominanceRule::EdgeDomDisjoint,
    ];

    /// Name used in benchmark reports.
    pub fn name(self) -> &'static str {
        match self {
            DominanceRule::VertexDom => "DOM. ALG-1",
            DominanceRule::EdgeDomShared => "DOM. ALG-2",
            DominanceRule::EdgeDomDisjoint => "EdgeDom v1",
        }
    }
}

impl fmt::Display for DominanceRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DominanceRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vertex" | "alg1" | "alg-1" | "dom. alg-1" => Ok(DominanceRule::VertexDom),
            "shared" | "alg2" | "alg-2" | "dom. alg-2" => Ok(DominanceRule::EdgeDomShared),
            "disjoint" | "edgedom" | "edgedom v1" => Ok(DominanceRule::EdgeDomDisjoint),
            other => Err(format!(
                "unknown rule {other:?} (expected vertex/alg1, shared/alg2 or disjoint/edgedom)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Serial,
    ParallelSnapshot { workers: NonZeroUsize },
}

impl ExecMode {
    /// Panics if `workers` is zero.
    pub fn parallel(workers: usize) -> Self {
        ExecMode::ParallelSnapshot {
            workers: NonZeroUsize::new(workers).expect("at least one worker"),
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            ExecMode::Serial => "SERIAL",
            ExecMode::ParallelSnapshot { .. } => "PARALLEL",
        }
    }

    /// Process label such as `SERIAL DOM. ALG-1`.
    pub fn label(self, rule: DominanceRule) -> String {
        format!("{} {}", self.prefix(), rule.name())
    }

    fn workers(self) -> usize {
        match self {
            ExecMode::Serial => 1,
            ExecMode::ParallelSnapshot { workers } => workers.get(),
        }
    }
}

/// Runs one rule until a round deletes nothing.
pub fn run_pass(g: &mut Graph, rule: DominanceRule, exec: ExecMode) -> ReductionReport {
    let start = Instant::now();
    let before = Counters::of(g);
    let mut report = ReductionReport::new(exec.label(rule));
    let pool = match exec {
        ExecMode::Serial => None,
        ExecMode::ParallelSnapshot { workers } => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers.get())
                .build()
                .expect("failed to start worker pool"),
        ),
    };
    // Candidates whose endpoints were untouched since their last scan cannot
    // have become dominated, so later rounds rescan only the frontier.
    let mut frontier: Option<BitSet> = None;
    loop {
        report.rounds += 1;
        let mut touched = BitSet::new(g.n());
        let deleted = match &pool {
            None => serial_round(g, rule, frontier.as_ref(), &mut touched),
            Some(pool) => {
                let (deleted, scan) = snapshot_round(
                    g,
                    rule,
                    pool,
                    exec.workers(),
                    frontier.as_ref(),
                    &mut touched,
                );
                report.scan_time += scan;
                deleted
            }
        };
        if deleted == 0 {
            break;
        }
        frontier = Some(touched);
    }
    (report.deleted_edges, report.deleted_vertices) = before.delta(g);
    report.duration = start.elapsed();
    report
}

pub fn vertex_dominance_pass(g: &mut Graph, exec: ExecMode) -> ReductionReport {
    run_pass(g, DominanceRule::VertexDom, exec)
}

pub fn edge_dominance_shared_pass(g: &mut Graph, exec: ExecMode) -> ReductionReport {
    run_pass(g, DominanceRule::EdgeDomShared, exec)
}

pub fn edge_dominance_disjoint_pass(g: &mut Graph, exec: ExecMode) -> ReductionReport {
    run_pass(g, DominanceRule::EdgeDomDisjoint, exec)
}

/// Cycles through `rules`, each run to its own fixpoint, until a whole
/// cycle deletes nothing. `rounds` in the result counts cycles.
pub fn run_to_fixpoint(g: &mut Graph, rules: &[DominanceRule], exec: ExecMode) -> ReductionReport {
    assert!(!rules.is_empty(), "run_to_fixpoint needs at least one rule");
    let start = Instant::now();
    let names: Vec<&str> = rules.iter().map(|r| r.name()).collect();
    let mut total = ReductionReport::new(format!("{} {}", exec.prefix(), names.join(" + ")));
    loop {
        total.rounds += 1;
        let mut deleted = 0;
        for &rule in rules {
            let pass = run_pass(g, rule, exec);
            deleted += pass.deletions();
            total.absorb(&pass);
        }
        if deleted == 0 {
            break;
        }
    }
    total.duration = start.elapsed();
    total
}

#[inline]
fn in_frontier(frontier: Option<&BitSet>, v: usize) -> bool {
    frontier.is_none_or(|f| f.contains(v))
}

fn delete_vertex(g: &mut Graph, a: usize, touched: &mut BitSet) {
    touched.union_with(g.row(a));
    touched.insert(a);
    g.remove_vertex(a).expect("witness implies active");
}

fn delete_edge(g: &mut Graph, x: usize, y: usize, touched: &mut BitSet) {
    touched.insert(x);
    touched.insert(y);
    g.remove_edge(x, y).expect("in range");
}

/// One sweep; eager for the edge rules. Returns the number of deletions.
fn serial_round(
    g: &mut Graph,
    rule: DominanceRule,
    frontier: Option<&BitSet>,
    touched: &mut BitSet,
) -> usize {
    let mut deleted = 0;
    match rule {
        // Snapshot semantics, single-threaded: eager deletion would let the
        // scan order decide mutual-domination ties differently.
        DominanceRule::VertexDom => {
            let proposals = scan_vertices(g, rule, 0..g.n(), frontier);
            deleted = apply_proposals(g, proposals, touched);
        }
        DominanceRule::EdgeDomShared => {
            let mut neighbors = Vec::new();
            for a in 0..g.n() {
                neighbors.clear();
                neighbors.extend(g.row(a).iter());
                let a_fresh = in_frontier(frontier, a);
                for &u in &neighbors {
                    if (a_fresh || in_frontier(frontier, u)) && shared_witness_at(g, a, u).is_some()
                    {
                        delete_edge(g, a, u, touched);
                        deleted += 1;
                    }
                }
            }
        }
        DominanceRule::EdgeDomDisjoint => {
            let edges: Vec<(usize, usize)> = g
                .edges()
                .filter(|&(x, y)| in_frontier(frontier, x) || in_frontier(frontier, y))
                .collect();
            for (x, y) in edges {
                if disjoint_witness(g, x, y).is_some() {
                    delete_edge(g, x, y, touched);
                    deleted += 1;
                }
            }
        }
    }
    deleted
}

#[derive(Debug, Clone, Copy)]
enum Proposal {
    Vertex {
        a: usize,
        b: usize,
    },
    Shared(SharedWitness),
    Disjoint {
        x: usize,
        y: usize,
        u: usize,
        v: usize,
    },
}

impl Proposal {
    /// Candidate being deleted; proposals are applied in descending order
    /// of this key.
    fn key(&self) -> (usize, usize) {
        match *self {
            Proposal::Vertex { a, .. } => (a, 0),
            Proposal::Shared(SharedWitness { a, u, .. }) => (a.min(u), a.max(u)),
            Proposal::Disjoint { x, y, .. } => (x, y),
        }
    }

    fn still_holds(&self, g: &Graph) -> bool {
        match *self {
            Proposal::Vertex { a, b } => rules::beats(g, b, a),
            Proposal::Shared(SharedWitness { a, u, b }) => shared_witness_holds(g, a, u, b),
            Proposal::Disjoint { x, y, u, v } => disjoint_witness_holds(g, x, y, u, v),
        }
    }

    fn recheck(&self, g: &Graph) -> bool {
        match *self {
            Proposal::Vertex { a, .. } => vertex_witness(g, a).is_some(),
            Proposal::Shared(SharedWitness { a, u, .. }) => shared_witness(g, a, u).is_some(),
            Proposal::Disjoint { x, y, .. } => disjoint_witness(g, x, y).is_some(),
        }
    }

    fn apply(&self, g: &mut Graph, touched: &mut BitSet) {
        match *self {
            Proposal::Vertex { a, .. } => delete_vertex(g, a, touched),
            Proposal::Shared(SharedWitness { a, u, .. }) => delete_edge(g, a, u, touched),
            Proposal::Disjoint { x, y, .. } => delete_edge(g, x, y, touched),
        }
    }
}

/// Chunks per worker; more than one so uneven chunks balance out.
const CHUNKS_PER_WORKER: usize = 4;

/// Scan against the frozen graph, then apply. Returns the number of
/// deletions and the time spent scanning.
fn snapshot_round(
    g: &mut Graph,
    rule: DominanceRule,
    pool: &rayon::ThreadPool,
    workers: usize,
    frontier: Option<&BitSet>,
    touched: &mut BitSet,
) -> (usize, Duration) {
    let scan_start = Instant::now();
    let frozen: &Graph = g;
    let proposals: Vec<Proposal> = pool.install(|| match rule {
        DominanceRule::VertexDom | DominanceRule::EdgeDomShared => {
            let n = frozen.n();
            let chunk = n.div_ceil(workers * CHUNKS_PER_WORKER).max(1);
            (0..n.div_ceil(chunk))
                .into_par_iter()
                .flat_map_iter(|c| {
                    let range = c * chunk..((c + 1) * chunk).min(n);
                    scan_vertices(frozen, rule, range, frontier)
                })
                .collect()
        }
        DominanceRule::EdgeDomDisjoint => {
            let n = frozen.n();
            let total = if n < 2 {
                0
            } else {
                permutation_count(n, 2).expect("fits u64")
            };
            let parts = (workers * CHUNKS_PER_WORKER) as u64;
            let chunk = total.div_ceil(parts).max(1);
            (0..total.div_ceil(chunk))
                .into_par_iter()
                .flat_map_iter(|c| {
                    scan_pairs(frozen, c * chunk, ((c + 1) * chunk).min(total), frontier)
                })
                .collect()
        }
    });
    let scan_time = scan_start.elapsed();

    (apply_proposals(g, proposals, touched), scan_time)
}

/// Applies proposals in descending candidate order. One whose witness was
/// invalidated by an earlier deletion is re-checked on the current graph.
fn apply_proposals(g: &mut Graph, mut proposals: Vec<Proposal>, touched: &mut BitSet) -> usize {
    proposals.sort_by_key(|p| std::cmp::Reverse(p.key()));
    proposals.dedup_by_key(|p| p.key());
    let mut deleted = 0;
    for p in &proposals {
        if p.still_holds(g) || p.recheck(g) {
            p.apply(g, touched);
            deleted += 1;
        }
    }
    deleted
}

fn scan_vertices(
    g: &Graph,
    rule: DominanceRule,
    range: std::ops::Range<usize>,
    frontier: Option<&BitSet>,
) -> Vec<Proposal> {
    let mut out = Vec::new();
    for a in range {
        let a_fresh = in_frontier(frontier, a);
        match rule {
            DominanceRule::VertexDom => {
                if !a_fresh {
                    continue;
                }
                if let Some(b) = vertex_witness(g, a) {
                    out.push(Proposal::Vertex { a, b });
                }
            }
            DominanceRule::EdgeDomShared => {
                for u in g.row(a).iter() {
                    if !a_fresh && !in_frontier(frontier, u) {
                        continue;
                    }
                    if let Some(b) = shared_witness_at(g, a, u) {
                        out.push(Proposal::Shared(SharedWitness { a, u, b }));
                    }
                }
            }
            DominanceRule::EdgeDomDisjoint => unreachable!("disjoint rule scans pairs"),
        }
    }
    out
}

/// Scans ordered pairs with lexicographic ranks in `start..end`, keeping
/// those that are edges `(x, y)` with `x < y`.
fn scan_pairs(g: &Graph, start: u64, end: u64, frontier: Option<&BitSet>) -> Vec<Proposal> {
    let mut out = Vec::new();
    if start >= end {
        return out;
    }
    let n = g.n();
    let mut pair = unrank_tuple(start, n, 2).expect("start is in range");
    for _ in start..end {
        let (x, y) = (pair[0], pair[1]);
        if x < y && g.adjacent(x, y) && (in_frontier(frontier, x) || in_frontier(frontier, y)) {
            if let Some((u, v)) = disjoint_witness(g, x, y) {
                out.push(Proposal::Disjoint { x, y, u, v });
            }
        }
        if !next_tuple(&mut pair, n) {
            break;
        }
    }
    out
}
