//! Finite simple undirected graphs on the vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{GraphError, Result};

/// A finite simple undirected graph with vertices labelled `0..n`.
///
/// Adjacency lists are kept sorted and duplicate-free; the graph is immutable
/// once built, every modifying operation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { u, v, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from per-vertex neighbour bitmasks (at most 128 vertices).
    pub fn from_masks(masks: &[u128]) -> Self {
        let adj = masks
            .iter()
            .map(|&m| crate::bits::iter(m).collect())
            .collect();
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Neighbour bitmasks; `None` when the graph has more than 128 vertices.
    pub fn masks(&self) -> Option<Vec<u128>> {
        if self.n() > 128 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|l| l.iter().fold(0u128, |m, &v| m | (1u128 << v)))
                .collect(),
        )
    }

    pub(crate) fn require_masks(&self, what: &'static str) -> Result<Vec<u128>> {
        self.masks().ok_or(GraphError::TooLarge {
            n: self.n(),
            max: 128,
            what,
        })
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph { adj })
    }

    /// Removes `v`; the remaining vertices keep their relative order and are
    /// relabelled `0..n-1`. The returned map sends each old label to its new
    /// label (`None` for `v` itself).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        if v >= self.n() {
            return Err(GraphError::NoSuchVertex(v));
        }
        let keep: Vec<usize> = self.vertices().filter(|&w| w != v).collect();
        let (g, map) = self.induced_subgraph(&keep);
        Ok((g, map))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    /// Also returns the old-to-new label map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = Some(i);
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v].iter().filter_map(|&w| map[w]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        (Graph { adj }, map)
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n(),
            "permutation length must equal vertex count"
        );
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            let mut l: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            l.sort_unstable();
            adj[perm[u]] = l;
        }
        Graph { adj }
    }

    /// Adds a new vertex 0 adjacent to every vertex; old vertex `v` becomes `v + 1`.
    pub fn with_hub(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n() + 1);
        adj.push((1..=self.n()).collect());
        for list in &self.adj {
            let mut l = Vec::with_capacity(list.len() + 1);
            l.push(0);
            l.extend(list.iter().map(|&w| w + 1));
            adj.push(l);
        }
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + off).collect()),
        );
        Graph { adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph with one vertex is connected; the 0-vertex graph is not.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.n();
        self.vertices()
            .filter(|&v| self.degree(v) + 1 == n)
            .collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("valid complete graph")
    }

    /// `K_{1,n}`: centre 0, leaves `1..=n`.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
        Graph::new(n + 1, &edges).expect("valid star")
    }

    /// `W_n` on `n` vertices: hub 0 joined to the cycle `1..n`.
    pub fn wheel(n: usize) -> Graph {
        assert!(n >= 4, "wheels need at least 4 vertices");
        cycle(n - 1).with_hub()
    }

    /// Friendship graph `T_n`: `n` triangles sharing vertex 0.
    pub fn friendship(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            edges.extend([(0, a), (0, b), (a, b)]);
        }
        Graph::new(2 * n + 1, &edges).expect("valid friendship graph")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &edges).expect("valid Petersen graph")
    }
}
