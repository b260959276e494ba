//! The struction transformation.
//!
//! Given a pivot `p`, let `A = N(p)` and `B` the remaining active vertices
//! other than `p`. The derived graph has one node per vertex of `A` and one
//! node `c(bx, by)` per edge of `G[B]` with `bx < by`. Its edges are
//!
//! * `a_i ~ a_j` iff `{a_i, a_j} ∈ E`,
//! * `c(bx, by) ~ c(bx, bm)` iff `{by, bm} ∈ E` (same first component),
//! * `a_i ~ c(bx, by)` iff `a_i` is adjacent to both `bx` and `by`.
//!
//! Its clique number is exactly one less than that of the source graph,
//! and [`lift_clique`] maps a clique of the derived graph back to a clique
//! of the source one vertex larger.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{ParseError, StructionError};
use crate::graph::Graph;
use crate::oracle::is_clique;

/// Where a node of the derived graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NodeOrigin {
    /// A neighbor of the pivot.
    A(usize),
    /// The edge `{bx, by}`, `bx < by`, between two non-neighbors of the pivot.
    C(usize, usize),
}

impl fmt::Display for NodeOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeOrigin::A(v) => write!(f, "A {v}"),
            NodeOrigin::C(bx, by) => write!(f, "C {bx} {by}"),
        }
    }
}

impl FromStr for NodeOrigin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("bad vertex {t:?}"));
        match fields.as_slice() {
            ["A", v] => Ok(NodeOrigin::A(num(v)?)),
            ["C", bx, by] => {
                let (bx, by) = (num(bx)?, num(by)?);
                if bx >= by {
                    return Err(format!("C pair must be ascending, got {bx} {by}"));
                }
                Ok(NodeOrigin::C(bx, by))
            }
            _ => Err(format!("expected 'A <v>' or 'C <bx> <by>', found {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructionResult {
    pub graph: Graph,
    /// Indexed by node of `graph`: all A-nodes in ascending vertex order,
    /// then C-nodes in lexicographic pair order.
    pub node_origin: Vec<NodeOrigin>,
    pub pivot: usize,
}

impl StructionResult {
    /// One origin per line, `A <v>` or `C <bx> <by>`.
    pub fn write_origins<W: Write>(&self, mut out: W) -> io::Result<()> {
        for origin in &self.node_origin {
            writeln!(out, "{origin}")?;
        }
        Ok(())
    }

    pub fn save_origins(&self, path: impl AsRef<Path>) -> io::Result<()> {
        let mut buf = Vec::new();
        self.write_origins(&mut buf)?;
        fs::write(path, buf)
    }
}

pub fn parse_origins(text: &str) -> Result<Vec<NodeOrigin>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.parse().map_err(|message| ParseError::Syntax {
                line: i + 1,
                message,
            })
        })
        .collect()
}

pub fn load_origins(path: impl AsRef<Path>) -> Result<Vec<NodeOrigin>, ParseError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_origins(&text)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StructionOptions {
    /// Refuse when the derived graph would have more nodes than this.
    /// `None` means the default of four times the source vertex count.
    pub node_budget: Option<usize>,
}

impl StructionOptions {
    pub fn unbounded() -> Self {
        StructionOptions {
            node_budget: Some(usize::MAX),
        }
    }
}

/// Active vertex of least degree, lowest index first.
pub fn default_pivot(g: &Graph) -> Option<usize> {
    g.active_vertices().min_by_key(|&v| (g.degree(v), v))
}

pub fn struction(g: &Graph, pivot: usize) -> Result<StructionResult, StructionError> {
    struction_with(g, pivot, StructionOptions::default())
}

pub fn struction_with(
    g: &Graph,
    pivot: usize,
    options: StructionOptions,
) -> Result<StructionResult, StructionError> {
    let a_side: Vec<usize> = g.neighbors(pivot)?.iter().collect();
    let b_side: Vec<usize> = g
        .active_vertices()
        .filter(|&v| v != pivot && !g.adjacent(pivot, v))
        .collect();

    let mut c_side = Vec::new();
    for (i, &bx) in b_side.iter().enumerate() {
        for &by in &b_side[i + 1..] {
            if g.adjacent(bx, by) {
                c_side.push((bx, by));
            }
        }
    }

    let needed = a_side.len() + c_side.len();
    let budget = options.node_budget.unwrap_or(4 * g.n());
    if needed > budget {
        return Err(StructionError::OverBudget { needed, budget });
    }

    let mut derived = Graph::new(needed);
    let offset = a_side.len();
    let mut link = |i: usize, j: usize| {
        derived
            .add_edge(i, j)
            .expect("derived nodes are distinct and in range");
    };
    for (i, &ai) in a_side.iter().enumerate() {
        for (j, &aj) in a_side.iter().enumerate().skip(i + 1) {
            if g.adjacent(ai, aj) {
                link(i, j);
            }
        }
        for (j, &(bx, by)) in c_side.iter().enumerate() {
            if g.adjacent(ai, bx) && g.adjacent(ai, by) {
                link(i, offset + j);
            }
        }
    }
    // C-nodes sharing a first component are contiguous.
    let mut start = 0;
    while start < c_side.len() {
        let bx = c_side[start].0;
        let end = start + c_side[start..].iter().take_while(|c| c.0 == bx).count();
        for i in start..end {
            for j in i + 1..end {
                if g.adjacent(c_side[i].1, c_side[j].1) {
                    link(offset + i, offset + j);
                }
            }
        }
        start = end;
    }

    let node_origin = a_side
        .iter()
        .map(|&a| NodeOrigin::A(a))
        .chain(c_side.iter().map(|&(bx, by)| NodeOrigin::C(bx, by)))
        .collect();
    Ok(StructionResult {
        graph: derived,
        node_origin,
        pivot,
    })
}

/// Maps a clique of the derived graph to a clique of the source graph with
/// one more vertex. Returns ascending vertex indices.
pub fn lift_clique(res: &StructionResult, clique: &[usize]) -> Result<Vec<usize>, StructionError> {
    if !is_clique(&res.graph, clique) {
        return Err(StructionError::NotAClique(format!("{clique:?}")));
    }
    let mut lifted = Vec::with_capacity(clique.len() + 1);
    let mut shared: Option<usize> = None;
    for &node in clique {
        match res.node_origin[node] {
            NodeOrigin::A(a) => lifted.push(a),
            NodeOrigin::C(bx, by) => {
                if shared.is_some_and(|b| b != bx) {
                    return Err(StructionError::NotAClique(format!(
                        "C-nodes with different first components in {clique:?}"
                    )));
                }
                shared = Some(bx);
                lifted.push(by);
            }
        }
    }
    lifted.push(shared.unwrap_or(res.pivot));
    lifted.sort_unstable();
    Ok(lifted)
}
