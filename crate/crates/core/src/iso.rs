//! Graph isomorphism by backtracking, pruned by degree and distance profiles.

use crate::graph::Graph;
use crate::metric::DistanceMatrix;

/// Per-vertex invariant: degree plus the histogram of distances to all
/// other vertices (last bucket counts unreachable vertices).
fn vertex_profiles(g: &Graph, dm: &DistanceMatrix) -> Vec<(usize, Vec<usize>)> {
    let n = g.n();
    (0..n)
        .map(|u| {
            let mut hist = vec![0usize; n + 1];
            for v in 0..n {
                match dm.get(u, v) {
                    Some(d) => hist[d as usize] += 1,
                    None => hist[n] += 1,
                }
            }
            (g.degree(u), hist)
        })
        .collect()
}

/// Returns a bijection `f` with `f[v]` the image in `h` of vertex `v` of `g`,
/// such that `uv ∈ E(g) ⟺ f(u)f(v) ∈ E(h)`, or `None` if none exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let (dg, dh) = (g.distances(), h.distances());
    let (pg, ph) = (vertex_profiles(g, &dg), vertex_profiles(h, &dh));
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return None;
    }

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&x| ph[x] == pg[u]).collect())
        .collect();

    // Visit g in BFS order from the vertex with the fewest candidates so each
    // new vertex is constrained by already-mapped neighbours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| (candidates[u].len(), u))
            .expect("unplaced vertex");
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !placed[w])
                .collect();
            next.sort_by_key(|&w| (candidates[w].len(), w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(0, &order, &candidates, &dg, &dh, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    depth: usize,
    order: &[usize],
    candidates: &[Vec<usize>],
    dg: &DistanceMatrix,
    dh: &DistanceMatrix,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for &x in &candidates[u] {
        if used[x] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| dg.raw(u, w) == dh.raw(x, map[w]));
        if !consistent {
            continue;
        }
        map[u] = x;
        used[x] = true;
        if extend(depth + 1, order, candidates, dg, dh, map, used) {
            return true;
        }
        used[x] = false;
        map[u] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Checks that `map` is an isomorphism from `g` onto `h`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &x in map {
        if x >= h.n() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}
