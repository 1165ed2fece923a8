//! Canonical labelling for small graphs (at most 16 vertices).
//!
//! Individualisation-refinement: colour refinement splits vertices by the
//! multiset of neighbouring colours, the first non-singleton cell is split by
//! individualising each of its vertices in turn, and the leaf whose relabelled
//! upper triangle is largest wins. Subtrees are skipped when the branching
//! vertex is a twin of, or in the same automorphism orbit as, an
//! already-explored sibling.

use crate::bits;
use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const MAX_CANON_N: usize = 16;

/// Upper-triangle certificate; equal certificates (for equal `n`) mean
/// isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub n: u8,
    pub bits: u128,
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub certificate: Certificate,
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.position)
    }
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    canonical_form_coloured(g, &vec![0; g.n()])
}

/// Canonical form of `g` with `v` distinguished (placed first). Two vertices
/// get equal certificates iff some automorphism maps one onto the other.
pub fn canonical_form_rooted(g: &Graph, v: usize) -> Result<Canonical> {
    let mut colours = vec![1; g.n()];
    colours[v] = 0;
    canonical_form_coloured(g, &colours)
}

pub fn certificate(g: &Graph) -> Result<Certificate> {
    canonical_form(g).map(|c| c.certificate)
}

pub fn canonical_form_coloured(g: &Graph, colours: &[u32]) -> Result<Canonical> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(GraphError::TooLarge {
            n,
            max: MAX_CANON_N,
            what: "canonical labelling",
        });
    }
    let adj = g.masks().expect("n <= 16");
    let mut search = Search {
        adj: &adj,
        n,
        best: None,
        autos: Vec::new(),
    };
    let mut start = colours.to_vec();
    rerank(&mut start);
    refine(&adj, &mut start);
    search.descend(start, &mut Vec::new());
    let (bits, order) = search.best.expect("at least one leaf");
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    Ok(Canonical {
        certificate: Certificate { n: n as u8, bits },
        position,
    })
}

fn rerank(colours: &mut [u32]) {
    let mut distinct: Vec<u32> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colours.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
}

fn count_distinct(colours: &[u32]) -> usize {
    let mut d: Vec<u32> = colours.to_vec();
    d.sort_unstable();
    d.dedup();
    d.len()
}

/// Colour refinement to the coarsest equitable partition finer than `colours`.
/// New colours are ranks of `(old colour, sorted neighbour colours)`, so the
/// result depends only on the coloured graph up to isomorphism.
fn refine(adj: &[u128], colours: &mut [u32]) {
    let mut classes = count_distinct(colours);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = adj
            .iter()
            .enumerate()
            .map(|(v, &m)| {
                let mut nb: Vec<u32> = bits::iter(m).map(|w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        for (v, s) in sigs.iter().enumerate() {
            colours[v] = uniq.binary_search(s).unwrap() as u32;
        }
        if uniq.len() == classes {
            break;
        }
        classes = uniq.len();
    }
}

struct Search<'a> {
    adj: &'a [u128],
    n: usize,
    best: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, colours: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.n;
        let distinct = count_distinct(&colours);
        if distinct == n {
            self.leaf(&colours);
            return;
        }
        // First non-singleton cell in colour order.
        let mut sizes = vec![0usize; distinct];
        for &c in &colours {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();

        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if explored.iter().any(|&x| self.twins(x, w)) {
                continue;
            }
            if !explored.is_empty() && self.same_orbit(w, &explored, prefix) {
                continue;
            }
            let mut next: Vec<u32> = colours.iter().map(|&c| 2 * c + 1).collect();
            next[w] = 2 * colours[w];
            rerank(&mut next);
            refine(self.adj, &mut next);
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(w);
        }
    }

    fn twins(&self, x: usize, w: usize) -> bool {
        (self.adj[x] & !bits::bit(w)) == (self.adj[w] & !bits::bit(x))
    }

    /// Whether `w` lies in the orbit of an explored vertex under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = bits::bit(w);
        let mut frontier = vec![w];
        while let Some(v) = frontier.pop() {
            for a in &gens {
                let u = a[v];
                if orbit & bits::bit(u) == 0 {
                    orbit |= bits::bit(u);
                    frontier.push(u);
                }
            }
        }
        explored.iter().any(|&x| orbit & bits::bit(x) != 0)
    }

    fn leaf(&mut self, colours: &[u32]) {
        let n = self.n;
        let mut order = vec![0; n];
        for (v, &c) in colours.iter().enumerate() {
            order[c as usize] = v;
        }
        let mut cert: u128 = 0;
        for j in 1..n {
            for i in 0..j {
                cert = (cert << 1) | ((self.adj[order[i]] >> order[j]) & 1);
            }
        }
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((b, best_order)) => {
                if cert > *b {
                    self.best = Some((cert, order));
                } else if cert == *b {
                    let mut auto = vec![0; n];
                    for p in 0..n {
                        auto[order[p]] = best_order[p];
                    }
                    if auto.iter().enumerate().any(|(v, &u)| v != u) {
                        self.autos.push(auto);
                    }
                }
            }
        }
    }
}
