//! Shortest-path distances, eccentricities, radius, diameter and centre.

use std::collections::VecDeque;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// All-pairs BFS distances. Pairs in different components are unreachable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![Self::UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == Self::UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw distance with [`Self::UNREACHABLE`] as the marker.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.raw(u, v);
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.dist.iter().all(|&d| d != Self::UNREACHABLE)
    }

    fn require_connected(&self, what: &'static str) -> Result<()> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected(what));
        }
        Ok(())
    }

    pub fn eccentricity(&self, u: usize) -> Result<u32> {
        if u >= self.n {
            return Err(GraphError::NoSuchVertex(u));
        }
        let row = &self.dist[u * self.n..(u + 1) * self.n];
        match row.iter().copied().max() {
            Some(Self::UNREACHABLE) => Err(GraphError::Disconnected("eccentricity")),
            Some(e) => Ok(e),
            None => Err(GraphError::Empty),
        }
    }

    fn eccentricities(&self, what: &'static str) -> Result<Vec<u32>> {
        self.require_connected(what)?;
        (0..self.n).map(|u| self.eccentricity(u)).collect()
    }

    pub fn radius(&self) -> Result<u32> {
        Ok(self
            .eccentricities("radius")?
            .into_iter()
            .min()
            .unwrap_or(0))
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self
            .eccentricities("diameter")?
            .into_iter()
            .max()
            .unwrap_or(0))
    }

    pub fn center(&self) -> Result<Vec<usize>> {
        let ecc = self.eccentricities("center")?;
        let rad = ecc.iter().copied().min().unwrap_or(0);
        Ok((0..self.n).filter(|&u| ecc[u] == rad).collect())
    }

    /// Vertices within distance `r` of `u` (including `u`), as a bitmask.
    /// Requires `n <= 128`.
    pub fn ball_mask(&self, u: usize, r: u32) -> u128 {
        let row = &self.dist[u * self.n..(u + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(|&(_, &d)| d <= r)
            .fold(0u128, |m, (v, _)| m | (1u128 << v))
    }
}

impl Graph {
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    pub fn eccentricity(&self, u: usize) -> Result<u32> {
        self.distances().eccentricity(u)
    }

    pub fn radius(&self) -> Result<u32> {
        self.distances().radius()
    }

    pub fn diameter(&self) -> Result<u32> {
        self.distances().diameter()
    }

    pub fn center(&self) -> Result<Vec<usize>> {
        self.distances().center()
    }
}
