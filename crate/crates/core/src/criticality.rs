//! Packing-chromatic criticality under single edge or vertex deletions.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::packing::chi_rho;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Deletion {
    Edge(usize, usize),
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub base_chi_rho: u32,
    pub critical: bool,
    /// First deletion (in table order) that keeps the packing chromatic number.
    pub witness: Option<Deletion>,
    /// Packing chromatic number after each deletion, edges in lexicographic
    /// order or vertices ascending.
    pub table: Vec<(Deletion, u32)>,
}

fn report(base: u32, table: Vec<(Deletion, u32)>) -> CriticalityReport {
    let witness = table.iter().find(|&&(_, v)| v >= base).map(|&(d, _)| d);
    CriticalityReport {
        base_chi_rho: base,
        critical: witness.is_none(),
        witness,
        table,
    }
}

/// Edge-deletion criticality. Graphs with isolated vertices are rejected,
/// since only without them does the edge test capture criticality.
pub fn is_edge_critical(g: &Graph) -> Result<CriticalityReport> {
    if let Some(&v) = g.isolated_vertices().first() {
        if g.n() > 1 {
            return Err(GraphError::Precondition(format!("vertex {v} is isolated")));
        }
    }
    let base = chi_rho(g)?.value;
    let table = g
        .edges()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(u, v)| {
            let h = g.delete_edge(u, v).expect("edge exists");
            chi_rho(&h).map(|r| (Deletion::Edge(u, v), r.value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report(base, table))
}

pub fn is_vertex_critical(g: &Graph) -> Result<CriticalityReport> {
    if g.n() < 2 {
        return Err(GraphError::Precondition(
            "vertex criticality needs at least 2 vertices".into(),
        ));
    }
    let base = chi_rho(g)?.value;
    let table = g
        .vertices()
        .into_par_iter()
        .map(|v| {
            let (h, _) = g.delete_vertex(v).expect("vertex exists");
            chi_rho(&h).map(|r| (Deletion::Vertex(v), r.value))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(report(base, table))
}

/// The least leaf of a radius-1 graph on at least three vertices. A critical
/// graph of this kind has none.
pub fn has_leaf_violation(g: &Graph) -> Result<Option<usize>> {
    if g.n() < 3 {
        return Err(GraphError::Precondition(format!(
            "{} vertices; need at least 3",
            g.n()
        )));
    }
    let rad = g.radius()?;
    if rad != 1 {
        return Err(GraphError::Precondition(format!("radius {rad} != 1")));
    }
    Ok(g.leaves().first().copied())
}
