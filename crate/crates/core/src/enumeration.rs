//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! A graph on `n` vertices is produced from each representative on `n - 1`
//! vertices by adding a vertex with some neighbour set. The child is kept
//! only when the new vertex is in the automorphism orbit of its canonical
//! deletion vertex (the deletable vertex with the largest canonical label);
//! survivors are then deduplicated by certificate. Deletable vertices are
//! those whose removal stays inside the class: any vertex for all graphs,
//! non-cut vertices otherwise.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::canon::{canonical_form, canonical_form_rooted, Certificate, MAX_CANON_N};
use crate::error::{GraphError, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructuralClass {
    All,
    Tree,
    Cactus,
    BlockGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub general: usize,
    /// Trees, cacti and block graphs.
    pub structured: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            general: 8,
            structured: 11,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationFilter {
    pub min_n: usize,
    pub max_n: usize,
    /// Ignored for trees, cacti and block graphs, which are connected.
    pub connected: bool,
    pub class: StructuralClass,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
}

impl EnumerationFilter {
    pub fn new(class: StructuralClass, min_n: usize, max_n: usize) -> Self {
        EnumerationFilter {
            min_n,
            max_n,
            connected: class != StructuralClass::All,
            class,
            radius: None,
            diameter: None,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn radius(mut self, r: u32) -> Self {
        self.radius = Some(r);
        self
    }

    pub fn diameter(mut self, d: u32) -> Self {
        self.diameter = Some(d);
        self
    }

    fn is_connected_class(&self) -> bool {
        self.connected || self.class != StructuralClass::All
    }

    fn check(&self, caps: Caps) -> Result<()> {
        let (cap, what) = match self.class {
            StructuralClass::All => (caps.general, "general graph enumeration"),
            _ => (caps.structured, "structured graph enumeration"),
        };
        let cap = cap.min(MAX_CANON_N);
        if self.max_n > cap {
            return Err(GraphError::TooLarge {
                n: self.max_n,
                max: cap,
                what,
            });
        }
        Ok(())
    }

    fn accepts(&self, g: &Graph) -> bool {
        if g.n() < self.min_n {
            return false;
        }
        if self.radius.is_none() && self.diameter.is_none() {
            return true;
        }
        let dm = g.distances();
        let ok = |want: Option<u32>, got: Result<u32>| want.is_none_or(|w| got.ok() == Some(w));
        ok(self.radius, dm.radius()) && ok(self.diameter, dm.diameter())
    }
}

/// One canonically labelled representative per isomorphism class matching
/// `filter`, ordered by vertex count and then certificate.
pub fn enumerate_graphs(filter: &EnumerationFilter) -> Result<Vec<Graph>> {
    enumerate_with_caps(filter, Caps::default())
}

pub fn enumerate_cacti(filter: &EnumerationFilter) -> Result<Vec<Graph>> {
    enumerate_graphs(&EnumerationFilter {
        class: StructuralClass::Cactus,
        connected: true,
        ..*filter
    })
}

pub fn enumerate_with_caps(filter: &EnumerationFilter, caps: Caps) -> Result<Vec<Graph>> {
    filter.check(caps)?;
    let mut out = Vec::new();
    if filter.max_n == 0 {
        return Ok(out);
    }
    if filter.min_n == 0 && !filter.is_connected_class() {
        out.push(Graph::empty(0));
    }
    let mut level = vec![Graph::empty(1)];
    for n in 1..=filter.max_n {
        if n > 1 {
            level = next_level(&level, filter);
        }
        out.extend(level.iter().filter(|g| filter.accepts(g)).cloned());
    }
    Ok(out)
}

fn next_level(parents: &[Graph], filter: &EnumerationFilter) -> Vec<Graph> {
    let found: Vec<(Certificate, Graph)> = parents
        .par_iter()
        .flat_map_iter(|p| children(p, filter))
        .collect();
    let unique: BTreeMap<Certificate, Graph> = found.into_iter().collect();
    unique.into_values().collect()
}

fn neighbour_sets(parent: &Graph, filter: &EnumerationFilter) -> Vec<u128> {
    let n = parent.n();
    let adj = parent.masks().expect("small graph");
    let all = 0..1u128 << n;
    match filter.class {
        StructuralClass::All if !filter.connected => all.collect(),
        StructuralClass::All => all.skip(1).collect(),
        StructuralClass::Tree => (0..n).map(bits::bit).collect(),
        StructuralClass::Cactus => {
            let mut sets: Vec<u128> = (0..n).map(bits::bit).collect();
            for j in 0..n {
                for i in 0..j {
                    sets.push(bits::bit(i) | bits::bit(j));
                }
            }
            sets
        }
        StructuralClass::BlockGraph => all
            .skip(1)
            .filter(|&s| bits::iter(s).all(|v| (s & !bits::bit(v)) & !adj[v] == 0))
            .collect(),
    }
}

fn in_class(g: &Graph, class: StructuralClass) -> bool {
    match class {
        StructuralClass::All => true,
        StructuralClass::Tree => g.is_tree(),
        StructuralClass::Cactus => g.is_cactus(),
        StructuralClass::BlockGraph => g.is_block_graph(),
    }
}

fn deletable(g: &Graph, filter: &EnumerationFilter) -> u128 {
    let all = bits::full(g.n());
    if filter.is_connected_class() {
        all & !bits::from_slice(&g.cut_vertices())
    } else {
        all
    }
}

fn children(parent: &Graph, filter: &EnumerationFilter) -> Vec<(Certificate, Graph)> {
    let n = parent.n();
    let mut masks = parent.masks().expect("small graph");
    masks.push(0);
    let mut out = Vec::new();
    for s in neighbour_sets(parent, filter) {
        let mut child_masks = masks.clone();
        child_masks[n] = s;
        for v in bits::iter(s) {
            child_masks[v] |= bits::bit(n);
        }
        let child = Graph::from_masks(&child_masks);
        if !in_class(&child, filter.class) {
            continue;
        }
        let canon = canonical_form(&child).expect("within canonical limit");
        let w = bits::iter(deletable(&child, filter))
            .max_by_key(|&v| canon.position[v])
            .expect("every graph in the class has a deletable vertex");
        let accepted = w == n
            || canonical_form_rooted(&child, w).unwrap().certificate
                == canonical_form_rooted(&child, n).unwrap().certificate;
        if accepted {
            out.push((canon.certificate, canon.graph(&child)));
        }
    }
    out
}

/// Cacti built directly from blocks: start from `K1` and repeatedly glue a
/// pendant `K2` or cycle at one vertex. Same output contract as
/// [`enumerate_cacti`]; used to cross-check it.
pub fn enumerate_cacti_by_blocks(filter: &EnumerationFilter) -> Result<Vec<Graph>> {
    let filter = EnumerationFilter {
        class: StructuralClass::Cactus,
        connected: true,
        ..*filter
    };
    filter.check(Caps::default())?;
    let max_n = filter.max_n;
    let mut by_n: Vec<BTreeMap<Certificate, Graph>> = vec![BTreeMap::new(); max_n + 1];
    if max_n >= 1 {
        let k1 = Graph::empty(1);
        by_n[1].insert(canonical_form(&k1)?.certificate, k1);
    }
    for n in 1..max_n {
        let graphs: Vec<Graph> = by_n[n].values().cloned().collect();
        let grown: Vec<(Certificate, Graph)> = graphs
            .par_iter()
            .flat_map_iter(|g| {
                let mut out = Vec::new();
                for v in g.vertices() {
                    for len in 2..=max_n + 1 - n {
                        let h = glue_cycle(g, v, len);
                        let c = canonical_form(&h).expect("within canonical limit");
                        out.push((c.certificate, c.graph(&h)));
                    }
                }
                out
            })
            .collect();
        for (c, h) in grown {
            let k = h.n();
            by_n[k].entry(c).or_insert(h);
        }
    }
    Ok(by_n
        .into_iter()
        .flat_map(|m| m.into_values())
        .filter(|g| filter.accepts(g))
        .collect())
}

/// `g` with a new block through `v`: an edge when `len == 2`, else a cycle
/// on `len` vertices.
fn glue_cycle(g: &Graph, v: usize, len: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let ring: Vec<usize> = std::iter::once(v).chain(n..n + len - 1).collect();
    for i in 0..ring.len() - 1 {
        edges.push((ring[i], ring[i + 1]));
    }
    if len > 2 {
        edges.push((ring[len - 1], v));
    }
    Graph::new(n + len - 1, &edges).expect("valid gluing")
}
