//! Cut vertices, bridges and block decomposition (low-link DFS), plus the
//! cactus / block-graph / tree recognisers built on top of them.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// A block: maximal connected subgraph without a cut vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_k2(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block with as many edges as vertices is a cycle.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.edges.len() == self.order()
    }

    pub fn is_complete(&self) -> bool {
        let k = self.order();
        self.edges.len() == k * (k - 1) / 2
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// For a cycle block, its vertices in cyclic order starting at the
    /// smallest label and continuing towards the smaller neighbour.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if !self.is_cycle() {
            return None;
        }
        let nbrs = |v: usize| -> Vec<usize> {
            let mut out: Vec<usize> = self
                .edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            out.sort_unstable();
            out
        };
        let start = self.vertices[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = nbrs(start)[0];
        while cur != start {
            order.push(cur);
            let next = nbrs(cur).into_iter().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

/// Blocks, cut vertices and the block-cut tree of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Block-cut tree edges `(block index, cut vertex)`.
    pub tree_edges: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Indices of blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains(v))
            .map(|(i, _)| i)
            .collect()
    }
}

struct LowLink {
    edge_blocks: Vec<Vec<(usize, usize)>>,
    is_cut: Vec<bool>,
    bridges: Vec<(usize, usize)>,
}

fn low_link(g: &Graph) -> LowLink {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut edge_blocks = Vec::new();
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        let mut estack: Vec<(usize, usize)> = Vec::new();

        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    estack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u == root {
                            root_children += 1;
                        } else {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        edge_blocks.push(block);
                    }
                    if low[v] > disc[u] {
                        bridges.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    bridges.sort_unstable();
    LowLink {
        edge_blocks,
        is_cut,
        bridges,
    }
}

impl Graph {
    pub fn cut_vertices(&self) -> Vec<usize> {
        let ll = low_link(self);
        self.vertices().filter(|&v| ll.is_cut[v]).collect()
    }

    /// Bridges (cut edges) as `(u, v)` with `u < v`, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        low_link(self).bridges
    }

    pub fn block_decomposition(&self) -> Result<BlockDecomposition> {
        if self.is_empty() {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected("block decomposition"));
        }
        let ll = low_link(self);
        let mut blocks: Vec<Block> = ll
            .edge_blocks
            .into_iter()
            .map(|edges| {
                let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                Block { vertices, edges }
            })
            .collect();
        if blocks.is_empty() {
            // K1 is its own (trivial) block.
            blocks.push(Block {
                vertices: vec![0],
                edges: Vec::new(),
            });
        }
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        let cut_vertices: Vec<usize> = self.vertices().filter(|&v| ll.is_cut[v]).collect();
        let mut tree_edges = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for &c in &cut_vertices {
                if b.contains(c) {
                    tree_edges.push((i, c));
                }
            }
        }
        Ok(BlockDecomposition {
            blocks,
            cut_vertices,
            tree_edges,
        })
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Connected and every block is a cycle or `K_2`.
    pub fn is_cactus(&self) -> bool {
        match self.block_decomposition() {
            Ok(bd) => bd
                .blocks
                .iter()
                .all(|b| b.edges.is_empty() || b.is_k2() || b.is_cycle()),
            Err(_) => false,
        }
    }

    /// Connected and every block is complete.
    pub fn is_block_graph(&self) -> bool {
        match self.block_decomposition() {
            Ok(bd) => bd.blocks.iter().all(Block::is_complete),
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn path_blocks() {
        let p4 = path(4);
        assert_eq!(p4.cut_vertices(), vec![1, 2]);
        assert_eq!(p4.bridges(), vec![(0, 1), (1, 2), (2, 3)]);
        let bd = p4.block_decomposition().unwrap();
        assert_eq!(bd.blocks.len(), 3);
        assert!(bd.blocks.iter().all(Block::is_k2));
    }

    #[test]
    fn cycle_is_one_block() {
        let c5 = cycle(5);
        assert!(c5.cut_vertices().is_empty());
        assert!(c5.bridges().is_empty());
        let bd = c5.block_decomposition().unwrap();
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.blocks[0].is_cycle());
        assert_eq!(bd.blocks[0].cycle_order().unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn friendship_hub_is_only_cut_vertex() {
        let t2 = friendship(2);
        assert_eq!(t2.cut_vertices(), vec![0]);
        assert!(t2.bridges().is_empty());
        assert_eq!(t2.block_decomposition().unwrap().tree_edges.len(), 2);
    }

    #[test]
    fn recognisers() {
        assert!(!complete(4).is_cactus());
        assert!(complete(4).is_block_graph());
        assert!(path(5).is_cactus() && path(5).is_tree() && path(5).is_block_graph());
        assert!(star(4).is_cactus());
        assert!(!cycle(4).is_block_graph());
        assert!(cycle(4).is_cactus());
        assert!(!petersen().is_cactus());
        assert!(!Graph::empty(2).is_cactus());
        assert!(Graph::empty(1).is_tree() && Graph::empty(1).is_cactus());
    }

    #[test]
    fn disconnected_decomposition_fails() {
        assert!(Graph::empty(2).block_decomposition().is_err());
    }

    #[test]
    fn two_triangles_sharing_vertex_plus_tail() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        assert_eq!(g.cut_vertices(), vec![0, 4]);
        assert_eq!(g.bridges(), vec![(4, 5)]);
        let bd = g.block_decomposition().unwrap();
        assert_eq!(bd.blocks.len(), 3);
        assert!(g.is_cactus());
    }
}
