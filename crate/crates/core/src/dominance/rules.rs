//! Dominance conditions and witness searches.
//!
//! Each search returns the deterministic first witness for a candidate, so
//! serial and parallel drivers agree on what a proposal means. Candidate
//! witnesses are narrowed with whole-word masks before any subset test:
//! a witness must be adjacent to every vertex of the set it has to cover,
//! in particular to the first one.

use crate::bitset::BitSet;
use crate::error::GraphError;
use crate::graph::Graph;

/// `b` dominates `a`: distinct, non-adjacent, and `N(a) ⊆ N(b)`.
pub fn dominates_vertex(g: &Graph, a: usize, b: usize) -> Result<bool, GraphError> {
    if a == b {
        return Err(GraphError::SameVertex(a));
    }
    let na = g.neighbors(a)?;
    let nb = g.neighbors(b)?;
    Ok(!na.contains(b) && na.is_subset(nb))
}

/// `b` may delete `a` in a vertex-dominance round: `b` dominates `a`, and
/// when the two dominate each other only the higher index is deletable.
#[inline]
pub(crate) fn beats(g: &Graph, b: usize, a: usize) -> bool {
    if a == b || !g.is_active(a) || !g.is_active(b) || g.adjacent(a, b) {
        return false;
    }
    let (na, nb) = (g.row(a), g.row(b));
    na.is_subset(nb) && (b < a || !nb.is_subset(na))
}

/// Lowest-index vertex that [`beats`] `a`.
pub(crate) fn vertex_witness(g: &Graph, a: usize) -> Option<usize> {
    if !g.is_active(a) {
        return None;
    }
    let na = g.row(a).words();
    let anchor = g.row(a).first().map(|w| g.row(w).words());
    for (i, &act) in g.active().words().iter().enumerate() {
        let mut word = act & !na[i];
        if let Some(anchor) = anchor {
            word &= anchor[i];
        }
        while word != 0 {
            let b = i * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            if beats(g, b, a) {
                return Some(b);
            }
        }
    }
    None
}

/// Witness for deleting `{a, u}` through the shared endpoint `u`: some
/// `b ≠ a` with `{u, b} ∈ E`, `b ∉ N(a)` and `N(a) ∩ N(u) ⊆ N(b)`.
#[inline]
pub(crate) fn shared_witness_at(g: &Graph, a: usize, u: usize) -> Option<usize> {
    if !g.adjacent(a, u) {
        return None;
    }
    let (na, nu) = (g.row(a).words(), g.row(u).words());
    let first_common = na.iter().zip(nu).enumerate().find_map(|(i, (p, q))| {
        let w = p & q;
        (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
    });
    let anchor = first_common.map(|w| g.row(w).words());
    for i in 0..nu.len() {
        let mut word = nu[i] & !na[i];
        if let Some(anchor) = anchor {
            word &= anchor[i];
        }
        while word != 0 {
            let b = i * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            if b == a {
                continue;
            }
            let nb = g.row(b).words();
            if na.iter().zip(nu).zip(nb).all(|((p, q), r)| p & q & !r == 0) {
                return Some(b);
            }
        }
    }
    None
}

pub(crate) fn shared_witness_holds(g: &Graph, a: usize, u: usize, b: usize) -> bool {
    b != a
        && g.adjacent(a, u)
        && g.adjacent(u, b)
        && !g.adjacent(a, b)
        && g.row(a).intersection(g.row(u)).is_subset(g.row(b))
}

/// A witness that edge `{a, u}` is dominated by `{u, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedWitness {
    pub a: usize,
    pub u: usize,
    pub b: usize,
}

/// Tries both orientations of `{x, y}`: first `y` as the shared endpoint,
/// then `x`.
pub(crate) fn shared_witness(g: &Graph, x: usize, y: usize) -> Option<SharedWitness> {
    shared_witness_at(g, x, y)
        .map(|b| SharedWitness { a: x, u: y, b })
        .or_else(|| shared_witness_at(g, y, x).map(|b| SharedWitness { a: y, u: x, b }))
}

/// Witness `(u, v)`, `u < v`, for deleting `{x, y}` by the disjoint-edge
/// rule: `{u, v} ∈ E`, neither `u` nor `v` is adjacent to both `x` and `y`,
/// all four distinct, and `N(x) ∩ N(y) ⊆ N(u) ∩ N(v)`.
pub(crate) fn disjoint_witness(g: &Graph, x: usize, y: usize) -> Option<(usize, usize)> {
    if !g.adjacent(x, y) {
        return None;
    }
    let (nx, ny) = (g.row(x).words(), g.row(y).words());
    let first_common = nx.iter().zip(ny).enumerate().find_map(|(i, (a, b))| {
        let w = a & b;
        (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
    });
    // Vertices outside N(x) ∩ N(y), other than x and y, adjacent to all of it.
    let active = g.active().words();
    let anchor = first_common.map(|w| g.row(w).words());
    let mut covering: Vec<usize> = Vec::new();
    for (i, &act) in active.iter().enumerate() {
        let mut word = act & !(nx[i] & ny[i]);
        if let Some(anchor) = anchor {
            word &= anchor[i];
        }
        while word != 0 {
            let w = i * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            if w == x || w == y {
                continue;
            }
            let nw = g.row(w).words();
            if nx.iter().zip(ny).zip(nw).all(|((a, b), c)| a & b & !c == 0) {
                covering.push(w);
            }
        }
    }
    if covering.len() < 2 {
        return None;
    }
    if covering.len() <= 64 {
        for (i, &u) in covering.iter().enumerate() {
            if let Some(&v) = covering[i + 1..].iter().find(|&&v| g.adjacent(u, v)) {
                return Some((u, v));
            }
        }
        return None;
    }
    let set = BitSet::from_indices(g.n(), covering.iter().copied());
    covering
        .iter()
        .find_map(|&u| g.row(u).iter().find(|&v| set.contains(v)).map(|v| (u, v)))
}

pub(crate) fn disjoint_witness_holds(g: &Graph, x: usize, y: usize, u: usize, v: usize) -> bool {
    if !(g.adjacent(x, y) && g.adjacent(u, v)) || u == x || u == y || v == x || v == y {
        return false;
    }
    let covers_both = |w: usize| g.adjacent(w, x) && g.adjacent(w, y);
    !covers_both(u)
        && !covers_both(v)
        && g.row(x)
            .intersection(g.row(y))
            .is_subset_of_both(g.row(u), g.row(v))
}
