//! Exact clique facts for small graphs, used as ground truth by the tests
//! of every reduction rule.
//!
//! Two independent engines are provided: a branch-and-bound search with a
//! greedy-coloring bound ([`max_clique`]) and a plain subset scan
//! ([`max_clique_exhaustive`]). They are cross-checked against each other
//! on small graphs.

use crate::error::OracleError;
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 30;

/// Largest active-vertex count accepted by [`max_clique_exhaustive`].
pub const EXHAUSTIVE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub size: usize,
    /// Ascending vertex indices.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    fn admit(&self, g: &Graph) -> Result<(), OracleError> {
        if g.active_count() > self.cap {
            Err(OracleError::CapExceeded {
                active: g.active_count(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// A maximum clique; among all maximum cliques, the lexicographically
    /// smallest one.
    pub fn max_clique(&self, g: &Graph) -> Result<CliqueWitness, OracleError> {
        self.admit(g)?;
        let size = clique_number(g);
        let members = lex_first_clique(g, size).expect("a clique of the bound size exists");
        Ok(CliqueWitness { size, members })
    }

    /// Every clique of exactly `k` active vertices, each ascending, in
    /// lexicographic order.
    pub fn enumerate_k_cliques(&self, g: &Graph, k: usize) -> Result<Vec<Vec<usize>>, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroSize);
        }
        self.admit(g)?;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        let vertices: Vec<usize> = g.active_vertices().collect();
        extend_k(g, &vertices, k, &mut current, &mut out);
        Ok(out)
    }
}

pub fn max_clique(g: &Graph) -> Result<CliqueWitness, OracleError> {
    Oracle::default().max_clique(g)
}

pub fn enumerate_k_cliques(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    Oracle::default().enumerate_k_cliques(g, k)
}

/// ω(G) by branch and bound. No cap check.
pub fn clique_number(g: &Graph) -> usize {
    let mut order: Vec<usize> = g.active_vertices().collect();
    // Highest degree first tends to find a large clique early.
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = 0;
    expand(g, 0, order, &mut best);
    best
}

fn expand(g: &Graph, depth: usize, candidates: Vec<usize>, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(depth);
        return;
    }
    let (order, bounds) = color_bound(g, &candidates);
    // Vertices are taken from the back, where color bounds are largest.
    let mut remaining = candidates.clone();
    for i in (0..order.len()).rev() {
        if depth + bounds[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&u| g.adjacent(v, u))
            .collect();
        expand(g, depth + 1, next, best);
        remaining.retain(|&u| u != v);
    }
}

/// Greedy sequential coloring of `candidates`. Returns the vertices sorted by
/// color and, for each position, the number of colors used up to it, which
/// bounds the clique size among that prefix.
fn color_bound(g: &Graph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !g.adjacent(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut bounds = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            bounds.push(c + 1);
        }
    }
    (order, bounds)
}

/// Depth-first search in ascending vertex order, so the first clique of
/// `size` vertices found is the lexicographically smallest.
fn lex_first_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, size: usize, current: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if current.len() == size {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i < size {
                return false;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| g.adjacent(v, u))
                .collect();
            current.push(v);
            if go(g, size, current, &next) {
                return true;
            }
            current.pop();
        }
        false
    }
    let vertices: Vec<usize> = g.active_vertices().collect();
    let mut current = Vec::with_capacity(size);
    go(g, size, &mut current, &vertices).then_some(current)
}

fn extend_k(
    g: &Graph,
    candidates: &[usize],
    k: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i < k {
            break;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| g.adjacent(v, u))
            .collect();
        current.push(v);
        extend_k(g, &next, k, current, out);
        current.pop();
    }
}

/// Maximum clique by scanning every subset of the active vertices. Returns
/// the lexicographically smallest maximum clique. Intended only as an
/// independent check on [`max_clique`].
pub fn max_clique_exhaustive(g: &Graph) -> Result<CliqueWitness, OracleError> {
    let vertices: Vec<usize> = g.active_vertices().collect();
    let k = vertices.len();
    if k > EXHAUSTIVE_CAP {
        return Err(OracleError::CapExceeded {
            active: k,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let adjacency: Vec<u32> = vertices
        .iter()
        .map(|&u| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.adjacent(u, v))
                .fold(0u32, |mask, (j, _)| mask | 1 << j)
        })
        .collect();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1u32 << k) {
        let members: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        let is_clique = members
            .iter()
            .all(|&i| mask & !(1 << i) & !adjacency[i] == 0);
        if !is_clique {
            continue;
        }
        let members: Vec<usize> = members.into_iter().map(|i| vertices[i]).collect();
        let better = match &best {
            None => true,
            Some(b) => members.len() > b.len() || (members.len() == b.len() && members < *b),
        };
        if better {
            best = Some(members);
        }
    }
    let members = best.unwrap_or_default();
    Ok(CliqueWitness {
        size: members.len(),
        members,
    })
}

/// `true` if `vertices` are distinct, active and pairwise adjacent.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        u < g.n()
            && g.is_active(u)
            && vertices[i + 1..]
                .iter()
                .all(|&v| u != v && g.adjacent(u, v))
    })
}
