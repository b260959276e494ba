use std::time::Duration;

use crate::graph::Graph;

/// Statistics of one reduction pass or fixpoint run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub rule: String,
    pub deleted_edges: usize,
    pub deleted_vertices: usize,
    /// Sweeps over the graph, including the final one that changed nothing.
    pub rounds: usize,
    pub duration: Duration,
    /// Time spent in the read-only scan phase of snapshot rounds. Zero for
    /// serial passes.
    pub scan_time: Duration,
}

impl ReductionReport {
    pub fn new(rule: impl Into<String>) -> Self {
        ReductionReport {
            rule: rule.into(),
            deleted_edges: 0,
            deleted_vertices: 0,
            rounds: 0,
            duration: Duration::ZERO,
            scan_time: Duration::ZERO,
        }
    }

    pub fn deletions(&self) -> usize {
        self.deleted_edges + self.deleted_vertices
    }

    /// Folds `other` into `self`, keeping `self`'s rule name and rounds.
    pub fn absorb(&mut self, other: &ReductionReport) {
        self.deleted_edges += other.deleted_edges;
        self.deleted_vertices += other.deleted_vertices;
        self.duration += other.duration;
        self.scan_time += other.scan_time;
    }
}

/// Snapshot of a graph's deletion counters, used to fill a report with the
/// exact deltas of a pass.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Counters {
    edges: usize,
    vertices: usize,
}

impl Counters {
    pub(crate) fn of(g: &Graph) -> Self {
        Counters {
            edges: g.deleted_edges(),
            vertices: g.deleted_vertices(),
        }
    }

    pub(crate) fn delta(self, g: &Graph) -> (usize, usize) {
        (
            g.deleted_edges() - self.edges,
            g.deleted_vertices() - self.vertices,
        )
    }
}
