//! Packing colourings: verification, the exact packing chromatic number, and
//! counting bounds.

use serde::Serialize;

use crate::bits;
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::independence::{alpha_within, independence_number};
use crate::metric::DistanceMatrix;

/// Colour `colors[v]` for every vertex, colours starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingColoring {
    colors: Vec<u32>,
}

impl PackingColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(GraphError::ZeroColor(v));
        }
        Ok(PackingColoring { colors })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Largest colour used (0 for the empty colouring).
    pub fn k(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of colour `i`, ascending.
    pub fn class(&self, i: u32) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == i)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verification {
    Valid,
    /// Two vertices of colour `color` at distance `distance <= color`.
    Violation {
        color: u32,
        u: usize,
        v: usize,
        distance: u32,
    },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

/// Checks that every colour class `X_i` is an `i`-packing. The first violating
/// pair in `(u, v)` order is reported.
pub fn verify_packing_coloring(g: &Graph, colors: &[u32]) -> Result<Verification> {
    if colors.len() != g.n() {
        return Err(GraphError::ColoringLength {
            expected: g.n(),
            got: colors.len(),
        });
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(GraphError::ZeroColor(v));
    }
    let dm = g.distances();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if colors[u] != colors[v] {
                continue;
            }
            if let Some(d) = dm.get(u, v) {
                if d <= colors[u] {
                    return Ok(Verification::Violation {
                        color: colors[u],
                        u,
                        v,
                        distance: d,
                    });
                }
            }
        }
    }
    Ok(Verification::Valid)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiRho {
    pub value: u32,
    pub witness: PackingColoring,
}

/// Exact packing chromatic number with a witness colouring. Disconnected graphs
/// take the maximum over components; colour classes span components freely.
pub fn chi_rho(g: &Graph) -> Result<ChiRho> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    g.require_masks("packing chromatic number")?;
    let mut colors = vec![0u32; g.n()];
    let mut value = 0;
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp);
        let (k, sub_colors) = solve_connected(&sub);
        value = value.max(k);
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = sub_colors[i];
        }
    }
    Ok(ChiRho {
        value,
        witness: PackingColoring { colors },
    })
}

/// Whether `g` has a packing colouring with colours `1..=k`, and one if so.
pub fn packing_colorable(g: &Graph, k: u32) -> Result<Option<PackingColoring>> {
    g.require_masks("packing colourability")?;
    if k == 0 {
        return Ok(g.is_empty().then(|| PackingColoring { colors: Vec::new() }));
    }
    let mut colors = vec![0u32; g.n()];
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp);
        match Solver::new(&sub).feasible(k) {
            Some(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    colors[v] = c[i];
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(PackingColoring { colors }))
}

fn solve_connected(g: &Graph) -> (u32, Vec<u32>) {
    if g.n() == 1 {
        return (1, vec![1]);
    }
    let solver = Solver::new(g);
    let lower = lower_bound_from(g, &solver.dm);
    let upper = (g.n() - independence_number(g) + 1) as u32;
    for k in lower..=upper {
        if let Some(colors) = solver.feasible(k) {
            return (k, colors);
        }
    }
    unreachable!("a maximum independent set plus singletons always gives n - alpha + 1 colours")
}

struct Solver {
    n: usize,
    dm: DistanceMatrix,
    diam: u32,
    order: Vec<usize>,
    /// `balls[c - 1][v]`: vertices within distance `c` of `v`, for `c < diam`.
    balls: Vec<Vec<u128>>,
}

const BIG: u32 = u32::MAX;

impl Solver {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let dm = g.distances();
        let diam = dm.diameter().expect("component is connected");
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let balls = (1..diam)
            .map(|c| (0..n).map(|v| dm.ball_mask(v, c)).collect())
            .collect();
        Solver {
            n,
            dm,
            diam,
            order,
            balls,
        }
    }

    /// Colours below the diameter are searched explicitly. Colours `diam..=k`
    /// admit only singleton classes and are interchangeable, so they are
    /// counted against a budget and handed out in vertex order afterwards.
    fn feasible(&self, k: u32) -> Option<Vec<u32>> {
        let small = k.min(self.diam.saturating_sub(1)) as usize;
        let budget = if k >= self.diam {
            (k - self.diam + 1) as usize
        } else {
            0
        };
        let mut st = State {
            blocked: vec![0; small],
            assign: vec![0; self.n],
            big_used: 0,
        };
        if !self.dfs(0, bits::full(self.n), budget, &mut st) {
            return None;
        }
        let mut next_big = self.diam.max(1);
        for &v in &self.order {
            if st.assign[v] == BIG {
                st.assign[v] = next_big;
                next_big += 1;
            }
        }
        Some(st.assign)
    }

    fn dfs(&self, idx: usize, remaining: u128, budget: usize, st: &mut State) -> bool {
        if idx == self.n {
            return true;
        }
        let open = st.blocked.iter().fold(0u128, |acc, &b| acc | !b);
        if st.big_used + bits::count(remaining & !open) > budget {
            return false;
        }
        let v = self.order[idx];
        let rest = remaining & !bits::bit(v);
        for c in 0..st.blocked.len() {
            if st.blocked[c] & bits::bit(v) != 0 {
                continue;
            }
            let saved = st.blocked[c];
            st.blocked[c] |= self.balls[c][v];
            st.assign[v] = c as u32 + 1;
            if self.dfs(idx + 1, rest, budget, st) {
                return true;
            }
            st.blocked[c] = saved;
        }
        if st.big_used < budget {
            st.big_used += 1;
            st.assign[v] = BIG;
            if self.dfs(idx + 1, rest, budget, st) {
                return true;
            }
            st.big_used -= 1;
        }
        false
    }
}

struct State {
    blocked: Vec<u128>,
    assign: Vec<u32>,
    big_used: usize,
}

/// `n - α + 1`, which equals the packing chromatic number on diameter-2 graphs.
pub fn diam2_formula(g: &Graph) -> Result<u32> {
    let d = g.diameter()?;
    if d != 2 {
        return Err(GraphError::Precondition(format!("diameter {d} != 2")));
    }
    Ok((g.n() - independence_number(g) + 1) as u32)
}

/// Largest `i`-packing: a maximum independent set of the graph joining
/// vertices at distance at most `i`.
pub fn max_i_packing(g: &Graph, i: u32) -> Result<usize> {
    if i == 0 {
        return Err(GraphError::Precondition(
            "packing index must be positive".into(),
        ));
    }
    g.require_masks("maximum i-packing")?;
    Ok(packing_size(&g.distances(), i))
}

fn packing_size(dm: &DistanceMatrix, i: u32) -> usize {
    let n = dm.n();
    let power: Vec<u128> = (0..n).map(|v| dm.ball_mask(v, i) & !bits::bit(v)).collect();
    alpha_within(&power, bits::full(n))
}

/// Least `ℓ` with `max_1_packing + … + max_ℓ_packing ≥ n`; every class of
/// colour at least the diameter holds one vertex.
pub fn chi_rho_lower_bound(g: &Graph) -> Result<u32> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected("chi_rho_lower_bound"));
    }
    g.require_masks("packing lower bound")?;
    Ok(lower_bound_from(g, &g.distances()))
}

fn lower_bound_from(g: &Graph, dm: &DistanceMatrix) -> u32 {
    let n = g.n();
    let diam = dm.diameter().expect("connected");
    let mut covered = 0;
    let mut l = 0u32;
    while covered < n {
        l += 1;
        covered += if l >= diam { 1 } else { packing_size(dm, l) };
    }
    l
}
