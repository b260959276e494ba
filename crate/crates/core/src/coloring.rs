//! Legal vertex colorings and the color-index reduction rules.
//!
//! With respect to a legal coloring, the color index of a vertex is the
//! number of classes holding at least one of its neighbors, and the color
//! index of an edge `{u, v}` is the number of classes holding a common
//! neighbor of `u` and `v`. A vertex of a k-clique has k−1 neighbors in
//! k−1 distinct classes, and an edge of a k-clique has k−2 common
//! neighbors in distinct classes, so anything below those thresholds
//! belongs to no k-clique.

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use crate::bitset::BitSet;
use crate::error::{ColoringError, GraphError, ParseError};
use crate::graph::Graph;
use crate::report::{Counters, ReductionReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    class_of: Vec<Option<usize>>,
    k_colors: usize,
}

impl Coloring {
    /// Builds a coloring from per-vertex classes (`None` for deleted
    /// vertices). The class count is one past the largest class id.
    pub fn from_classes(class_of: Vec<Option<usize>>) -> Self {
        let k_colors = class_of.iter().flatten().max().map_or(0, |&c| c + 1);
        Coloring { class_of, k_colors }
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of.get(v).copied().flatten()
    }

    pub fn k_colors(&self) -> usize {
        self.k_colors
    }

    /// Checks that every active vertex has a class and no edge joins two
    /// vertices of the same class.
    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.class_of.len() != g.n() {
            return Err(ColoringError::SizeMismatch {
                expected: g.n(),
                found: self.class_of.len(),
            });
        }
        for v in g.active_vertices() {
            if self.class_of[v].is_none() {
                return Err(ColoringError::Uncolored(v));
            }
        }
        for (u, v) in g.edges() {
            if self.class_of[u] == self.class_of[v] {
                return Err(ColoringError::Illegal(u, v, self.class_of[u].unwrap()));
            }
        }
        Ok(())
    }

    fn classes_hit(&self, set: &BitSet) -> usize {
        let mut seen = vec![false; self.k_colors];
        let mut count = 0;
        for w in set.iter() {
            if let Some(c) = self.class_of[w] {
                if !seen[c] {
                    seen[c] = true;
                    count += 1;
                    if count == self.k_colors {
                        break;
                    }
                }
            }
        }
        count
    }

    /// Writes one class id per active vertex, in vertex order.
    pub fn write<W: Write>(&self, g: &Graph, mut out: W) -> io::Result<()> {
        for v in g.active_vertices() {
            writeln!(out, "{}", self.class_of[v].unwrap_or(0))?;
        }
        Ok(())
    }

    pub fn save(&self, g: &Graph, path: impl AsRef<Path>) -> io::Result<()> {
        let mut buf = Vec::new();
        self.write(g, &mut buf)?;
        fs::write(path, buf)
    }

    /// Parses the format of [`Coloring::write`] against `g` and rejects
    /// colorings that are not legal on it.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, ParseError> {
        let values: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let active: Vec<usize> = g.active_vertices().collect();
        if values.len() != active.len() {
            return Err(ParseError::Syntax {
                line: values.last().map_or(0, |&(l, _)| l),
                message: format!(
                    "{} classes for {} active vertices",
                    values.len(),
                    active.len()
                ),
            });
        }
        let mut class_of = vec![None; g.n()];
        for (&v, &(line, token)) in active.iter().zip(&values) {
            let c = token.parse().map_err(|_| ParseError::Syntax {
                line,
                message: format!("expected a class id, found {token:?}"),
            })?;
            class_of[v] = Some(c);
        }
        let coloring = Coloring::from_classes(class_of);
        coloring.validate(g).map_err(|e| ParseError::Syntax {
            line: 0,
            message: e.to_string(),
        })?;
        Ok(coloring)
    }

    pub fn load(g: &Graph, path: impl AsRef<Path>) -> Result<Self, ParseError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
            path: path.to_owned(),
            source,
        })?;
        Coloring::parse(g, &text)
    }
}

/// Greedy coloring: vertices in descending degree order (ties by index),
/// each taking the smallest class unused by its colored neighbors.
pub fn greedy_color(g: &Graph) -> Coloring {
    let mut order: Vec<usize> = g.active_vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut class_of = vec![None; g.n()];
    let mut used = Vec::new();
    for v in order {
        used.clear();
        used.extend(g.row(v).iter().filter_map(|u| class_of[u]));
        used.sort_unstable();
        used.dedup();
        let class = used
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(used.len(), |(i, _)| i);
        class_of[v] = Some(class);
    }
    Coloring::from_classes(class_of)
}

pub fn node_color_index(g: &Graph, c: &Coloring, v: usize) -> Result<usize, ColoringError> {
    Ok(c.classes_hit(g.neighbors(v)?))
}

pub fn edge_color_index(
    g: &Graph,
    c: &Coloring,
    u: usize,
    v: usize,
) -> Result<usize, ColoringError> {
    if !g.is_edge(u, v)? {
        return Err(GraphError::NotAnEdge(u, v).into());
    }
    Ok(c.classes_hit(&g.row(u).intersection(g.row(v))))
}

/// Deletes every vertex with color index below `k − 1` and every edge with
/// color index below `k − 2`, sweeping until a sweep deletes nothing. The
/// set of k-cliques is unchanged.
pub fn reduce_by_color_index(
    g: &mut Graph,
    c: &Coloring,
    k: usize,
) -> Result<ReductionReport, ColoringError> {
    if k < 2 {
        return Err(ColoringError::TargetTooSmall(k));
    }
    c.validate(g)?;
    let start = Instant::now();
    let before = Counters::of(g);
    let mut report = ReductionReport::new(format!("COLOR-INDEX k={k}"));
    loop {
        report.rounds += 1;
        let mut changed = false;
        for v in 0..g.n() {
            if g.is_active(v) && c.classes_hit(g.row(v)) < k - 1 {
                g.remove_vertex(v)?;
                changed = true;
            }
        }
        if k > 2 {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            for (u, v) in edges {
                if c.classes_hit(&g.row(u).intersection(g.row(v))) < k - 2 {
                    g.remove_edge(u, v)?;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (report.deleted_edges, report.deleted_vertices) = before.delta(g);
    report.duration = start.elapsed();
    Ok(report)
}
