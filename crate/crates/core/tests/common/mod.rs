//! Brute-force oracles that share nothing with the library beyond `Graph`
//! construction and edge iteration.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use packcrit::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// All-pairs BFS distances; `usize::MAX` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn eccentricities(g: &Graph) -> Option<Vec<usize>> {
    let d = distances(g);
    d.iter()
        .map(|row| row.iter().copied().max().filter(|&m| m != usize::MAX))
        .collect()
}

pub fn radius(g: &Graph) -> Option<usize> {
    eccentricities(g)?.into_iter().min()
}

pub fn diameter(g: &Graph) -> Option<usize> {
    eccentricities(g)?.into_iter().max()
}

fn edge_masks(g: &Graph) -> Vec<u32> {
    let mut m = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

/// Independence number by scanning every subset (n <= 20).
pub fn alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj = edge_masks(g);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Checks every pair directly: same colour `i` needs distance greater than `i`.
pub fn is_packing_coloring(g: &Graph, colors: &[u32]) -> bool {
    let d = distances(g);
    colors.len() == g.n()
        && colors.iter().all(|&c| c >= 1)
        && (0..g.n())
            .all(|u| (u + 1..g.n()).all(|v| colors[u] != colors[v] || d[u][v] > colors[u] as usize))
}

/// Maximal `i`-packings, as bitmasks.
fn maximal_packings(d: &[Vec<usize>], i: usize) -> Vec<u32> {
    let n = d.len();
    let conflict: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && d[u][v] <= i)
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();
    let mut out = Vec::new();
    for s in 0u32..1 << n {
        let packing = (0..n).all(|v| s >> v & 1 == 0 || conflict[v] & s == 0);
        let maximal = packing && (0..n).all(|v| s >> v & 1 == 1 || conflict[v] & s != 0);
        if maximal {
            out.push(s);
        }
    }
    out
}

/// Packing chromatic number by dynamic programming over covered vertex sets:
/// after `i` rounds the reachable sets are unions of one maximal `j`-packing
/// for each `j <= i` (n <= 16).
pub fn chi_rho(g: &Graph) -> u32 {
    let n = g.n();
    assert!((1..=16).contains(&n));
    let d = distances(g);
    let full = (1u32 << n) - 1;
    let mut reach = vec![false; 1 << n];
    reach[0] = true;
    for i in 1..=n {
        let packs = maximal_packings(&d, i);
        let mut next = vec![false; 1 << n];
        for s in 0..1usize << n {
            if reach[s] {
                for &p in &packs {
                    next[s | p as usize] = true;
                }
            }
        }
        if next[full as usize] {
            return i as u32;
        }
        reach = next;
    }
    unreachable!("n colours always suffice")
}

pub fn is_edge_critical(g: &Graph) -> bool {
    let base = chi_rho(g);
    g.edges()
        .all(|(u, v)| chi_rho(&g.delete_edge(u, v).unwrap()) < base)
}

/// Canonical adjacency string: the lexicographically largest upper triangle
/// over all vertex permutations (n <= 7).
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Vec<bool> = Vec::new();
    loop {
        let code: Vec<bool> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| adj[perm[i]][perm[j]])
            .collect();
        if code > best {
            best = code;
        }
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism classes of labelled graphs on `n` vertices, by brute force.
pub fn labelled_classes(n: usize, connected_only: bool) -> BTreeSet<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = BTreeSet::new();
    for s in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| s >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if connected_only && n > 0 && diameter(&Graph::new(n, &edges).unwrap()).is_none() {
            continue;
        }
        classes.insert(brute_canonical(n, &edges));
    }
    classes
}

/// Connected graphs on seven vertices up to isomorphism (OEIS A001349).
pub const CONNECTED_ON_SEVEN: usize = 853;
