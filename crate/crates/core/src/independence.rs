//! Maximum independent sets and α-criticality.

use serde::Serialize;

use crate::bits;
use crate::error::{GraphError, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MisResult {
    pub alpha: usize,
    /// Lexicographically smallest maximum independent set, sorted.
    pub witness: Vec<usize>,
}

/// Size of a maximum independent set of the subgraph induced by `within`.
pub fn alpha_within(adj: &[u128], within: u128) -> usize {
    let mut best = 0;
    branch(adj, within, 0, &mut best);
    best
}

fn branch(adj: &[u128], p: u128, size: usize, best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + bits::count(p) <= *best {
        return;
    }
    let mut min_v = 0;
    let mut min_d = usize::MAX;
    let mut max_v = 0;
    let mut max_d = 0;
    for v in bits::iter(p) {
        let d = bits::count(adj[v] & p);
        if d < min_d {
            min_d = d;
            min_v = v;
        }
        if d > max_d {
            max_d = d;
            max_v = v;
        }
    }
    // A vertex of degree <= 1 lies in some maximum independent set.
    if min_d <= 1 {
        branch(adj, p & !(bits::bit(min_v) | adj[min_v]), size + 1, best);
        return;
    }
    if max_d == 2 {
        // Disjoint union of cycles: floor(len / 2) each.
        let mut rest = p;
        let mut total = size;
        while let Some(s) = bits::first(rest) {
            let mut comp = bits::bit(s);
            let mut frontier = bits::bit(s);
            while frontier != 0 {
                let v = bits::first(frontier).unwrap();
                frontier &= frontier - 1;
                let fresh = adj[v] & p & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            total += bits::count(comp) / 2;
            rest &= !comp;
        }
        *best = (*best).max(total);
        return;
    }
    branch(adj, p & !(bits::bit(max_v) | adj[max_v]), size + 1, best);
    branch(adj, p & !bits::bit(max_v), size, best);
}

/// Lexicographically smallest independent set of size `target` inside
/// `within`, assuming one exists.
fn lex_smallest(adj: &[u128], within: u128, target: usize) -> Vec<usize> {
    let mut chosen = Vec::with_capacity(target);
    let mut avail = within;
    while chosen.len() < target {
        let need = target - chosen.len();
        let v = bits::iter(avail)
            .find(|&v| {
                let rest = avail & !(bits::bit(v) | adj[v]) & !bits::full(v + 1);
                1 + alpha_within(adj, rest) >= need
            })
            .expect("target size is achievable");
        chosen.push(v);
        avail &= !(bits::bit(v) | adj[v]) & !bits::full(v + 1);
    }
    chosen
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = g
        .require_masks("independence number")
        .unwrap_or_else(|e| panic!("{e}"));
    alpha_within(&adj, bits::full(g.n()))
}

/// Exact maximum independent set. Panics on graphs with more than 128 vertices.
pub fn max_independent_set(g: &Graph) -> MisResult {
    let adj = g
        .require_masks("maximum independent set")
        .unwrap_or_else(|e| panic!("{e}"));
    let all = bits::full(g.n());
    let alpha = alpha_within(&adj, all);
    MisResult {
        alpha,
        witness: lex_smallest(&adj, all, alpha),
    }
}

/// A maximum independent set of `g` disjoint from `forbidden`, if any.
pub fn mis_avoiding(g: &Graph, forbidden: &[usize]) -> Option<MisResult> {
    let adj = g
        .require_masks("maximum independent set")
        .unwrap_or_else(|e| panic!("{e}"));
    let all = bits::full(g.n());
    let alpha = alpha_within(&adj, all);
    let allowed = all & !bits::from_slice(forbidden);
    (alpha_within(&adj, allowed) == alpha).then(|| MisResult {
        alpha,
        witness: lex_smallest(&adj, allowed, alpha),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCriticality {
    pub critical: bool,
    /// An edge whose removal leaves α unchanged, when not critical.
    pub witness_edge: Option<(usize, usize)>,
}

/// `α(G − e) > α(G)` for every edge `e`; edgeless graphs qualify vacuously.
pub fn is_alpha_critical(g: &Graph) -> AlphaCriticality {
    let mut adj = g
        .require_masks("alpha-criticality")
        .unwrap_or_else(|e| panic!("{e}"));
    let all = bits::full(g.n());
    let alpha = alpha_within(&adj, all);
    for (u, v) in g.edges() {
        adj[u] &= !bits::bit(v);
        adj[v] &= !bits::bit(u);
        let after = alpha_within(&adj, all);
        adj[u] |= bits::bit(v);
        adj[v] |= bits::bit(u);
        if after == alpha {
            return AlphaCriticality {
                critical: false,
                witness_edge: Some((u, v)),
            };
        }
    }
    AlphaCriticality {
        critical: true,
        witness_edge: None,
    }
}

/// For every edge `uv`, some maximum independent set contains `u` and has
/// `u` as the only neighbour of `v` in it. Such a set is `{u}` plus an
/// independent set avoiding `N[u] ∪ N[v]`, and the condition is symmetric in
/// `u` and `v`.
pub fn haynes_check(g: &Graph) -> bool {
    let adj = g
        .require_masks("Haynes criterion")
        .unwrap_or_else(|e| panic!("{e}"));
    let all = bits::full(g.n());
    let alpha = alpha_within(&adj, all);
    g.edges().all(|(u, v)| {
        let closed = bits::bit(u) | adj[u] | bits::bit(v) | adj[v];
        1 + alpha_within(&adj, all & !closed) == alpha
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rad3Report {
    pub holds: bool,
    pub pairs_checked: usize,
    pub failing_pair: Option<(usize, usize)>,
}

/// Distance-3 avoidance property of α-critical graphs of radius at least 3:
/// every pair at distance exactly 3 is avoided by some maximum independent
/// set. Precondition failures are errors; a property failure is reported in
/// the returned value with the offending pair.
pub fn check_lemma_rad3(g: &Graph) -> Result<Rad3Report> {
    let dm = g.distances();
    let rad = dm.radius()?;
    if rad < 3 {
        return Err(GraphError::Precondition(format!("radius {rad} < 3")));
    }
    if !is_alpha_critical(g).critical {
        return Err(GraphError::Precondition(
            "graph is not alpha-critical".into(),
        ));
    }
    let mut pairs_checked = 0;
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if dm.get(x, y) == Some(3) {
                pairs_checked += 1;
                if mis_avoiding(g, &[x, y]).is_none() {
                    return Ok(Rad3Report {
                        holds: false,
                        pairs_checked,
                        failing_pair: Some((x, y)),
                    });
                }
            }
        }
    }
    Ok(Rad3Report {
        holds: true,
        pairs_checked,
        failing_pair: None,
    })
}
