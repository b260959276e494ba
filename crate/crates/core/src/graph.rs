//! Undirected simple graph stored as a square bit matrix.
//!
//! Vertices are never reindexed: deletion clears the vertex's active bit
//! and zeroes its row and column, so reduction passes and their reports
//! work over one stable index space. [`Graph::compact`] produces a
//! reindexed copy of the surviving subgraph when one is needed.

use crate::bitset::BitSet;
use crate::error::GraphError;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    active: BitSet,
    edges: usize,
    deleted_edges: usize,
    deleted_vertices: usize,
}

impl Graph {
    /// Edgeless graph on `n` active vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
            active: BitSet::full(n),
            edges: 0,
            deleted_edges: 0,
            deleted_vertices: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.link(0, n - 1);
        }
        g
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    /// Total number of vertex slots, deleted ones included.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn active_count(&self) -> usize {
        self.n() - self.deleted_vertices
    }

    #[inline]
    pub fn deleted_edges(&self) -> usize {
        self.deleted_edges
    }

    #[inline]
    pub fn deleted_vertices(&self) -> usize {
        self.deleted_vertices
    }

    /// Current edges plus everything deleted so far.
    pub fn initial_edge_count(&self) -> usize {
        self.edges + self.deleted_edges
    }

    #[inline]
    pub fn active(&self) -> &BitSet {
        &self.active
    }

    #[inline]
    pub fn is_active(&self, v: usize) -> bool {
        self.active.contains(v)
    }

    pub fn active_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter()
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    fn check_active(&self, v: usize) -> Result<(), GraphError> {
        self.check(v)?;
        if self.is_active(v) {
            Ok(())
        } else {
            Err(GraphError::Inactive(v))
        }
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edges += 1;
        }
    }

    /// Adds `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_active(u)?;
        self.check_active(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let fresh = !self.adj[u].contains(v);
        self.link(u, v);
        Ok(fresh)
    }

    /// Constant-time edge query with range checking.
    pub fn is_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacent(u, v))
    }

    /// Unchecked variant of [`Graph::is_edge`] for inner loops. Panics on an
    /// out-of-range `u`.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// N(v) as a row of the adjacency matrix.
    pub fn neighbors(&self, v: usize) -> Result<&BitSet, GraphError> {
        self.check_active(v)?;
        Ok(&self.adj[v])
    }

    /// Row `v` without checks. Rows of deleted vertices are empty.
    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Removes `{u, v}` and leaves both endpoints in place. Returns `false`
    /// (and counts nothing) when the edge is absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if !self.adj[u].remove(v) {
            return Ok(false);
        }
        self.adj[v].remove(u);
        self.edges -= 1;
        self.deleted_edges += 1;
        Ok(true)
    }

    /// Deletes `v` and every edge still incident to it. Returns the degree
    /// charged to the deleted-edge counter.
    pub fn remove_vertex(&mut self, v: usize) -> Result<usize, GraphError> {
        self.check_active(v)?;
        let n = self.n();
        let row = std::mem::replace(&mut self.adj[v], BitSet::new(n));
        let degree = row.count();
        for u in row.iter() {
            self.adj[u].remove(v);
        }
        self.active.remove(v);
        self.edges -= degree;
        self.deleted_edges += degree;
        self.deleted_vertices += 1;
        Ok(degree)
    }

    /// All edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().skip_while(move |&v| v <= u).map(move |v| (u, v)))
    }

    /// The surviving subgraph with vertices renumbered `0..active_count`,
    /// plus the original index of each new vertex.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let origin: Vec<usize> = self.active_vertices().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in origin.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(origin.len());
        for (u, v) in self.edges() {
            g.link(index[u], index[v]);
        }
        (g, origin)
    }

    /// Full scan of the structural invariants. Meant for tests.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        let mut counted = 0;
        for u in 0..n {
            if self.adj[u].len() != n {
                return Err(format!("row {u} has length {}", self.adj[u].len()));
            }
            if self.adj[u].contains(u) {
                return Err(format!("loop at {u}"));
            }
            if !self.is_active(u) && !self.adj[u].is_empty() {
                return Err(format!("inactive vertex {u} has a nonzero row"));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(format!("asymmetric at ({u}, {v})"));
                }
                if !self.is_active(v) {
                    return Err(format!("inactive vertex {v} has a nonzero column"));
                }
                counted += 1;
            }
        }
        if counted != 2 * self.edges {
            return Err(format!(
                "edge counter {} but {} edges present",
                self.edges,
                counted / 2
            ));
        }
        if self.deleted_vertices != n - self.active.count() {
            return Err("deleted-vertex counter disagrees with active mask".into());
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("active", &self.active)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("deleted_edges", &self.deleted_edges)
            .field("deleted_vertices", &self.deleted_vertices)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph() {
        let g = Graph::new(0);
        assert_eq!(g.n(), 0);
        assert_eq!(g.edge_count(), 0);

        let g = Graph::new(3);
        assert_eq!(g.active_count(), 3);
        for u in 0..3 {
            for v in 0..3 {
                assert!(!g.is_edge(u, v).unwrap());
            }
        }

        let mut g = Graph::new(5);
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g, Graph::complete(5));
    }

    #[test]
    fn add_edge() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(g.is_edge(0, 1).unwrap() && g.is_edge(1, 0).unwrap());
        assert!(!g.add_edge(0, 1).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(2, 2), Err(GraphError::Loop(2)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn is_edge() {
        assert!(Graph::complete(3).is_edge(0, 2).unwrap());
        assert!(!Graph::path(3).is_edge(0, 2).unwrap());
        let mut g = Graph::complete(3);
        g.remove_vertex(1).unwrap();
        assert!(!g.is_edge(0, 1).unwrap());
        assert!(g.is_edge(0, 9).is_err());
    }

    #[test]
    fn neighbors() {
        let star = Graph::star(3);
        assert_eq!(
            star.neighbors(0).unwrap().iter().collect::<Vec<_>>(),
            [1, 2, 3]
        );
        assert!(Graph::new(2).neighbors(1).unwrap().is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.neighbors(2).unwrap().iter().collect::<Vec<_>>(),
            [0, 1, 3]
        );

        let mut g = Graph::complete(3);
        g.remove_vertex(0).unwrap();
        assert_eq!(g.neighbors(0), Err(GraphError::Inactive(0)));
        assert!(g.neighbors(5).is_err());
    }

    #[test]
    fn remove_edge() {
        let mut g = Graph::complete(3);
        assert!(g.remove_edge(0, 1).unwrap());
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.active_count(), 3);
        assert_eq!(g.deleted_edges(), 1);
        assert!(!g.remove_edge(0, 1).unwrap());
        assert_eq!(g.deleted_edges(), 1);

        let mut p = Graph::path(3);
        p.remove_edge(0, 1).unwrap();
        assert!(p.is_active(0));
        assert_eq!(p.degree(0), 0);
        p.validate().unwrap();
    }

    #[test]
    fn remove_vertex() {
        let mut g = Graph::complete(3);
        assert_eq!(g.remove_vertex(0).unwrap(), 2);
        assert_eq!(g.deleted_vertices(), 1);
        assert_eq!(g.deleted_edges(), 2);
        assert_eq!(g.remove_vertex(0), Err(GraphError::Inactive(0)));

        let mut g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        g.remove_vertex(2).unwrap();
        assert_eq!(g.deleted_edges(), 0);

        let mut g = Graph::complete(4);
        g.remove_vertex(0).unwrap();
        g.remove_vertex(1).unwrap();
        assert_eq!(g.deleted_edges(), 5);
        assert_eq!(g.initial_edge_count(), 6);
        g.validate().unwrap();
    }

    #[test]
    fn edges_iterate_in_order() {
        let g = Graph::from_edges(5, &[(3, 1), (0, 4), (2, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 2), (0, 4), (1, 3)]);
    }

    #[test]
    fn compact_renumbers_survivors() {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 3), (2, 3)]).unwrap();
        g.remove_vertex(2).unwrap();
        let (k, origin) = g.compact();
        assert_eq!(origin, [0, 1, 3]);
        assert_eq!(k.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
    }
}
