//! Named graph families: builders, closed forms and recognition.
//!
//! Specs use the text grammar `G{q}^{r}(k1,m1;...;kq,mq)`, `H(k1,m1;k2,m2)`,
//! `T{n}`, `C{n}`, `P{n}`, `K{n}`, `K1,{n}` and `W{n}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::Block;
use crate::error::Result;
use crate::graph::Graph;
use crate::iso::is_isomorphic;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K1,n`: a centre with `n` leaves.
    Star(usize),
    /// `W_n`: a hub joined to every vertex of `C_{n-1}`.
    Wheel(usize),
    /// `T_n`: `n` triangles sharing one vertex.
    Friendship(usize),
    /// Main cycle `C_r`; the `i`-th of `q` consecutive cycle vertices carries
    /// `pairs[i].0` pendant edges and `pairs[i].1` pendant triangles.
    Gqr {
        r: usize,
        pairs: Vec<(usize, usize)>,
    },
    /// Adjacent hubs carrying `(k1, m1)` and `(k2, m2)` pendant edges and triangles.
    H {
        k1: usize,
        m1: usize,
        k2: usize,
        m2: usize,
    },
}

/// What a built vertex is. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Role {
    /// Vertex of a path, cycle, complete graph or main cycle (`x_i`).
    Base(usize),
    Hub(usize),
    Leaf {
        at: usize,
        j: usize,
    },
    TriangleU {
        at: usize,
        j: usize,
    },
    TriangleV {
        at: usize,
        j: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Built {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}\n  {input}\n  {caret:>width$}", caret = "^", width = position + 1)]
pub struct SpecError {
    pub input: String,
    /// Byte offset of the problem in `input`.
    pub position: usize,
    pub message: String,
}

impl FamilySpec {
    pub fn validate(&self) -> std::result::Result<(), String> {
        let at_least = |name: &str, n: usize, min: usize| {
            if n < min {
                Err(format!("{name} needs n >= {min}, got {n}"))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) => at_least("P/K", *n, 1),
            FamilySpec::Cycle(n) => at_least("C", *n, 3),
            FamilySpec::Star(n) => at_least("K1,n", *n, 1),
            FamilySpec::Wheel(n) => at_least("W", *n, 4),
            FamilySpec::Friendship(n) => at_least("T", *n, 1),
            FamilySpec::Gqr { r, pairs } => {
                if !(3..=5).contains(r) {
                    return Err(format!("main cycle length r = {r} not in {{3, 4, 5}}"));
                }
                if pairs.is_empty() || pairs.len() > *r {
                    return Err(format!("q = {} not in [1, r = {r}]", pairs.len()));
                }
                if let Some(i) = pairs.iter().position(|&(k, m)| k + m == 0) {
                    return Err(format!("cut vertex x{} has k + m = 0", i + 1));
                }
                Ok(())
            }
            FamilySpec::H { k1, m1, k2, m2 } => {
                if k1 + m1 == 0 || k2 + m2 == 0 {
                    return Err("each hub needs k + m >= 1".into());
                }
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n) => *n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::Friendship(n) => 2 * n + 1,
            FamilySpec::Gqr { r, pairs } => {
                r + pairs.iter().map(|&(k, m)| k + 2 * m).sum::<usize>()
            }
            FamilySpec::H { k1, m1, k2, m2 } => 2 + k1 + 2 * m1 + k2 + 2 * m2,
        }
    }

    pub fn build(&self) -> std::result::Result<Built, String> {
        self.validate()?;
        let mut b = Builder::default();
        match self {
            FamilySpec::Path(n) => {
                b.base(*n);
                for i in 1..*n {
                    b.edge(i - 1, i);
                }
            }
            FamilySpec::Cycle(n) => {
                b.base(*n);
                b.cycle(0, *n);
            }
            FamilySpec::Complete(n) => {
                b.base(*n);
                for j in 0..*n {
                    for i in 0..j {
                        b.edge(i, j);
                    }
                }
            }
            FamilySpec::Star(n) => {
                let c = b.vertex(Role::Hub(1));
                b.pendants(c, 1, *n, 0);
            }
            FamilySpec::Wheel(n) => {
                let h = b.vertex(Role::Hub(1));
                b.base(n - 1);
                b.cycle(1, n - 1);
                for v in 1..*n {
                    b.edge(h, v);
                }
            }
            FamilySpec::Friendship(n) => {
                let h = b.vertex(Role::Hub(1));
                b.pendants(h, 1, 0, *n);
            }
            FamilySpec::Gqr { r, pairs } => {
                b.base(*r);
                b.cycle(0, *r);
                for (i, &(k, m)) in pairs.iter().enumerate() {
                    b.pendants(i, i + 1, k, m);
                }
            }
            FamilySpec::H { k1, m1, k2, m2 } => {
                let u1 = b.vertex(Role::Hub(1));
                let u2 = b.vertex(Role::Hub(2));
                b.edge(u1, u2);
                b.pendants(u1, 1, *k1, *m1);
                b.pendants(u2, 2, *k2, *m2);
            }
        }
        let graph = Graph::new(b.roles.len(), &b.edges).expect("builder emits valid edges");
        Ok(Built {
            graph,
            roles: b.roles,
        })
    }

    /// Packing chromatic number when a closed form is known for this spec.
    pub fn closed_form_chi_rho(&self) -> Option<u32> {
        let v = match self {
            FamilySpec::Complete(n) => *n,
            FamilySpec::Star(_) => 2,
            FamilySpec::Cycle(3) | FamilySpec::Cycle(4) => 3,
            FamilySpec::Cycle(5) => 4,
            FamilySpec::Path(4) | FamilySpec::Path(5) => 3,
            FamilySpec::Wheel(6) => 5,
            FamilySpec::Friendship(n) => n + 2,
            FamilySpec::Gqr { r: 5, pairs } if pairs.len() == 1 => {
                let m1 = pairs[0].1;
                if m1 == 0 {
                    4
                } else {
                    m1 + 3
                }
            }
            FamilySpec::Gqr { r: 5, pairs } if pairs.len() == 2 => {
                let (m1, m2) = (pairs[0].1, pairs[1].1);
                match (m1, m2) {
                    (0, 0) => 4,
                    (0, _) | (_, 0) => m1 + m2 + 3,
                    _ => m1 + m2 + 2,
                }
            }
            FamilySpec::Gqr { r: 4, pairs } if pairs.len() == 1 => {
                let m1 = pairs[0].1;
                if m1 == 0 {
                    3
                } else {
                    m1 + 2
                }
            }
            FamilySpec::Gqr { r: 4, pairs } if pairs.len() == 2 => {
                let t = pairs[0].1 + pairs[1].1;
                if t == 0 {
                    4
                } else {
                    t + 3
                }
            }
            FamilySpec::H { k1, m1, k2, m2 } => match (*m1, *m2) {
                (m, 0) if m >= 1 && *k2 >= 2 => m + 3,
                (0, m) if m >= 1 && *k1 >= 2 => m + 3,
                _ => return None,
            },
            _ => return None,
        };
        Some(v as u32)
    }

    /// Whether the spec's graph is packing-chromatic critical, when a
    /// characterization covers it.
    pub fn closed_form_critical(&self) -> Option<bool> {
        match self {
            FamilySpec::Complete(_) => Some(true),
            FamilySpec::Path(n) if *n <= 2 => Some(true),
            FamilySpec::Path(4) => Some(true),
            FamilySpec::Path(3) => Some(false),
            FamilySpec::Cycle(3) | FamilySpec::Cycle(5) => Some(true),
            FamilySpec::Cycle(4) => Some(false),
            FamilySpec::Star(1) => Some(true),
            FamilySpec::Star(_) => Some(false),
            FamilySpec::Wheel(6) => Some(false),
            FamilySpec::Gqr { r: 5, pairs } if pairs.len() == 1 => {
                Some(pairs[0].0 == 0 && pairs[0].1 >= 2)
            }
            FamilySpec::Gqr { r: 5, pairs } if pairs.len() == 2 => Some(false),
            FamilySpec::Gqr { r: 4, pairs } if pairs.len() == 1 => Some(false),
            FamilySpec::Gqr { r: 4, pairs } if pairs.len() == 2 => {
                let [(k1, m1), (k2, m2)] = [pairs[0], pairs[1]];
                Some(
                    (k1 == 1 && k2 == 1 && m1 == 0 && m2 == 0)
                        || (k1 == 0 && k2 == 0 && m1 >= 1 && m2 >= 1),
                )
            }
            FamilySpec::Gqr { r: 3, pairs } if pairs.len() >= 2 => {
                Some(triangle_clause(self).is_some())
            }
            FamilySpec::H { .. } => Some(triangle_clause(self).is_some()),
            _ => None,
        }
    }
}

/// Clause of the triangle-main-block characterization matched by a
/// `G3^3` or `H` spec: "i".."viii", or `P4` for the double star `H(1,0;1,0)`.
pub fn triangle_clause(spec: &FamilySpec) -> Option<&'static str> {
    match spec {
        FamilySpec::Gqr { r: 3, pairs } if pairs.len() == 3 => {
            let mut p = pairs.clone();
            p.sort();
            let big = |&(k, m): &(usize, usize)| k == 0 && m >= 2;
            let two = |&(k, m): &(usize, usize)| k == 2 && m == 0;
            if p == [(1, 0); 3] {
                Some("i")
            } else if p == [(0, 1), (2, 0), (2, 0)] {
                Some("ii")
            } else if p.iter().all(big) {
                Some("iii")
            } else if big(&p[0]) && big(&p[1]) && two(&p[2]) {
                Some("iv")
            } else if big(&p[0]) && two(&p[1]) && two(&p[2]) {
                Some("v")
            } else {
                None
            }
        }
        FamilySpec::H { k1, m1, k2, m2 } => {
            let mut sides = [(*k1, *m1), (*k2, *m2)];
            sides.sort();
            match sides {
                [(1, 0), (1, 0)] => Some("P4"),
                [(0, 1), (2, 0)] => Some("vi"),
                [(0, a), (0, b)] if a >= 2 && b >= 2 => Some("vii"),
                [(0, a), (2, 0)] if a >= 2 => Some("viii"),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn base(&mut self, n: usize) {
        for i in 0..n {
            self.vertex(Role::Base(i + 1));
        }
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn cycle(&mut self, start: usize, len: usize) {
        for i in 0..len {
            self.edge(start + i, start + (i + 1) % len);
        }
    }

    fn pendants(&mut self, x: usize, at: usize, k: usize, m: usize) {
        for j in 1..=k {
            let l = self.vertex(Role::Leaf { at, j });
            self.edge(x, l);
        }
        for j in 1..=m {
            let u = self.vertex(Role::TriangleU { at, j });
            let v = self.vertex(Role::TriangleV { at, j });
            self.edge(x, u);
            self.edge(x, v);
            self.edge(u, v);
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = |f: &mut fmt::Formatter<'_>, p: &[(usize, usize)]| {
            let body: Vec<String> = p.iter().map(|(k, m)| format!("{k},{m}")).collect();
            write!(f, "({})", body.join(";"))
        };
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Star(n) => write!(f, "K1,{n}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::Friendship(n) => write!(f, "T{n}"),
            FamilySpec::Gqr { r, pairs: p } => {
                write!(f, "G{}^{r}", p.len())?;
                pairs(f, p)
            }
            FamilySpec::H { k1, m1, k2, m2 } => write!(f, "H({k1},{m1};{k2},{m2})"),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> std::result::Result<T, SpecError> {
        Err(SpecError {
            input: self.input.to_string(),
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> std::result::Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> std::result::Result<usize, SpecError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.input[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("number out of range")
        })
    }

    fn pair(&mut self) -> std::result::Result<(usize, usize), SpecError> {
        let k = self.number()?;
        self.expect(b',')?;
        Ok((k, self.number()?))
    }

    fn pair_list(&mut self) -> std::result::Result<Vec<(usize, usize)>, SpecError> {
        self.expect(b'(')?;
        let mut out = vec![self.pair()?];
        while self.peek() == Some(b';') {
            self.pos += 1;
            out.push(self.pair()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn spec(&mut self) -> std::result::Result<FamilySpec, SpecError> {
        let head = self.peek();
        self.pos += 1;
        let spec = match head {
            Some(b'P') => FamilySpec::Path(self.number()?),
            Some(b'C') => FamilySpec::Cycle(self.number()?),
            Some(b'T') => FamilySpec::Friendship(self.number()?),
            Some(b'W') => FamilySpec::Wheel(self.number()?),
            Some(b'K') => {
                let n = self.number()?;
                if self.peek() == Some(b',') {
                    if n != 1 {
                        self.pos -= 1;
                        return self.err("stars are written K1,n");
                    }
                    self.pos += 1;
                    FamilySpec::Star(self.number()?)
                } else {
                    FamilySpec::Complete(n)
                }
            }
            Some(b'G') => {
                let q_pos = self.pos;
                let q = self.number()?;
                self.expect(b'^')?;
                let r = self.number()?;
                let pairs = self.pair_list()?;
                if pairs.len() != q {
                    self.pos = q_pos;
                    return self.err(format!("q = {q} but {} pairs given", pairs.len()));
                }
                FamilySpec::Gqr { r, pairs }
            }
            Some(b'H') => {
                let pairs = self.pair_list()?;
                let [(k1, m1), (k2, m2)] = pairs[..] else {
                    self.pos -= 1;
                    return self.err("H takes exactly two pairs");
                };
                FamilySpec::H { k1, m1, k2, m2 }
            }
            _ => {
                self.pos -= 1;
                return self.err("expected one of P C K T W G H");
            }
        };
        if self.pos != self.bytes.len() {
            return self.err("unexpected trailing input");
        }
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = SpecError;

    /// Parses and validates a spec.
    fn from_str(s: &str) -> std::result::Result<Self, SpecError> {
        let mut p = Parser {
            input: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        spec.validate().map_err(|message| SpecError {
            input: s.to_string(),
            position: 0,
            message,
        })?;
        Ok(spec)
    }
}

/// Identifies `g` as a member of a named family. Simple families are tried
/// first, then `G_q^(r)` with each largest cycle as main block, then `H`.
/// The result always builds a graph isomorphic to `g`.
pub fn recognize(g: &Graph) -> Option<FamilySpec> {
    if g.is_empty() || !g.is_connected() {
        return None;
    }
    let spec = recognize_simple(g).or_else(|| recognize_cactus(g))?;
    let built = spec.build().ok()?;
    is_isomorphic(&built.graph, g).then_some(spec)
}

fn recognize_simple(g: &Graph) -> Option<FamilySpec> {
    let n = g.n();
    let m = g.edge_count();
    let max_deg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    if m == n * (n - 1) / 2 {
        return Some(FamilySpec::Complete(n));
    }
    if m == n - 1 {
        if max_deg <= 2 {
            return Some(FamilySpec::Path(n));
        }
        if max_deg == n - 1 {
            return Some(FamilySpec::Star(n - 1));
        }
    }
    if m == n && max_deg == 2 {
        return Some(FamilySpec::Cycle(n));
    }
    let hub = g.universal_vertices().first().copied()?;
    let (rest, _) = g.delete_vertex(hub).ok()?;
    let rest_deg: Vec<usize> = rest.vertices().map(|v| rest.degree(v)).collect();
    if rest_deg.iter().all(|&d| d == 2) && rest.is_connected() {
        return Some(FamilySpec::Wheel(n));
    }
    if n % 2 == 1 && rest_deg.iter().all(|&d| d == 1) {
        return Some(FamilySpec::Friendship(n / 2));
    }
    None
}

/// A pendant block at `x`: a `K2` or triangle whose other vertices lie in no
/// other block. Returns `(is_triangle, x)`.
fn pendant_at(g: &Graph, b: &Block, cut: &[usize]) -> Option<(bool, usize)> {
    let cuts: Vec<usize> = b
        .vertices
        .iter()
        .copied()
        .filter(|v| cut.contains(v))
        .collect();
    if cuts.len() != 1 {
        return None;
    }
    let x = cuts[0];
    let others_private = b
        .vertices
        .iter()
        .all(|&v| v == x || g.degree(v) == b.order() - 1);
    match (b.is_k2(), b.is_cycle() && b.order() == 3, others_private) {
        (true, _, true) => Some((false, x)),
        (_, true, true) => Some((true, x)),
        _ => None,
    }
}

fn recognize_cactus(g: &Graph) -> Option<FamilySpec> {
    if !g.is_cactus() {
        return None;
    }
    let dec = g.block_decomposition().ok()?;
    let cut = &dec.cut_vertices;
    let largest = dec
        .blocks
        .iter()
        .filter(|b| b.is_cycle())
        .map(|b| b.order())
        .max();
    if let Some(r) = largest.filter(|r| (3..=5).contains(r)) {
        for (idx, main) in dec.blocks.iter().enumerate() {
            if main.is_cycle() && main.order() == r {
                if let Some(spec) = gqr_with_main(g, &dec.blocks, idx, cut) {
                    return Some(spec);
                }
            }
        }
    }
    recognize_h(g, &dec.blocks, cut)
}

fn gqr_with_main(
    g: &Graph,
    blocks: &[Block],
    main_idx: usize,
    cut: &[usize],
) -> Option<FamilySpec> {
    let main = &blocks[main_idx];
    let cyc = main.cycle_order()?;
    let r = cyc.len();
    let mut load = vec![(0usize, 0usize); r];
    for (i, b) in blocks.iter().enumerate() {
        if i == main_idx {
            continue;
        }
        let (tri, x) = pendant_at(g, b, cut)?;
        let pos = cyc.iter().position(|&c| c == x)?;
        if tri {
            load[pos].1 += 1;
        } else {
            load[pos].0 += 1;
        }
    }
    let loaded: Vec<bool> = load.iter().map(|&(k, m)| k + m > 0).collect();
    let q = loaded.iter().filter(|&&b| b).count();
    if q == 0 {
        return None;
    }
    // Every start and direction that reads the loaded vertices as one run.
    let mut best: Option<Vec<(usize, usize)>> = None;
    for s in 0..r {
        for dir in [1, r - 1] {
            let run: Vec<usize> = (0..q).map(|i| (s + i * dir) % r).collect();
            if run.iter().all(|&p| loaded[p]) {
                let pairs: Vec<(usize, usize)> = run.iter().map(|&p| load[p]).collect();
                if best.as_ref().is_none_or(|b| pairs < *b) {
                    best = Some(pairs);
                }
            }
        }
    }
    best.map(|pairs| FamilySpec::Gqr { r, pairs })
}

fn recognize_h(g: &Graph, blocks: &[Block], cut: &[usize]) -> Option<FamilySpec> {
    let centre = blocks
        .iter()
        .position(|b| b.is_k2() && b.vertices.iter().all(|v| cut.contains(v)))?;
    let (a, b) = (blocks[centre].vertices[0], blocks[centre].vertices[1]);
    let mut sides = [(0usize, 0usize); 2];
    for (i, blk) in blocks.iter().enumerate() {
        if i == centre {
            continue;
        }
        let (tri, x) = pendant_at(g, blk, cut)?;
        let side = if x == a {
            0
        } else if x == b {
            1
        } else {
            return None;
        };
        if tri {
            sides[side].1 += 1;
        } else {
            sides[side].0 += 1;
        }
    }
    sides.sort();
    let [(k1, m1), (k2, m2)] = sides;
    (k1 + m1 > 0 && k2 + m2 > 0).then_some(FamilySpec::H { k1, m1, k2, m2 })
}

/// Builds and unwraps; for callers holding a spec already validated.
pub fn build_graph(spec: &FamilySpec) -> Result<Graph> {
    spec.build()
        .map(|b| b.graph)
        .map_err(crate::error::GraphError::Precondition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap_or_else(|e| panic!("{e}"))
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "G1^5(1,2)",
            "G2^4(1,2;2,1)",
            "G3^3(1,0;1,0;1,0)",
            "H(1,1;2,0)",
            "T3",
            "C5",
            "P4",
            "K4",
            "K1,7",
            "W6",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert_eq!(spec("K1,7"), FamilySpec::Star(7));
        assert_eq!(spec("K1"), FamilySpec::Complete(1));
    }

    #[test]
    fn parse_errors_point_at_the_problem() {
        let e = "G2^4(1,2;2x1)".parse::<FamilySpec>().unwrap_err();
        assert_eq!(e.position, 10);
        assert!(e.to_string().contains("expected ','"));
        assert_eq!("G2^4(1,2)".parse::<FamilySpec>().unwrap_err().position, 1);
        assert_eq!("Q5".parse::<FamilySpec>().unwrap_err().position, 0);
        assert_eq!("C5x".parse::<FamilySpec>().unwrap_err().position, 2);
        assert!("G1^6(1,0)".parse::<FamilySpec>().is_err());
        assert!("H(0,0;1,0)".parse::<FamilySpec>().is_err());
        assert!("C2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn orders_match_figures() {
        assert_eq!(spec("G1^5(1,2)").build().unwrap().graph.n(), 10);
        assert_eq!(spec("G2^4(1,2;2,1)").build().unwrap().graph.n(), 13);
        assert_eq!(spec("H(1,1;2,0)").build().unwrap().graph.n(), 7);
        assert_eq!(spec("T3").build().unwrap().graph.n(), 7);
        for s in [
            "G1^5(1,2)",
            "G2^4(1,2;2,1)",
            "H(1,1;2,0)",
            "T3",
            "W6",
            "K1,4",
        ] {
            let sp = spec(s);
            let b = sp.build().unwrap();
            assert_eq!(b.graph.n(), sp.order());
            assert_eq!(b.roles.len(), sp.order());
        }
    }

    #[test]
    fn fig4_blocks() {
        let g = spec("G1^5(1,2)").build().unwrap().graph;
        let dec = g.block_decomposition().unwrap();
        let mut orders: Vec<usize> = dec.blocks.iter().map(|b| b.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3, 3, 5]);
        assert_eq!(dec.cut_vertices, vec![0]);
    }

    #[test]
    fn recognition() {
        let cases = [
            ("G1^5(1,2)", "G1^5(1,2)"),
            ("H(1,1;2,0)", "H(1,1;2,0)"),
            ("H(2,0;1,1)", "H(1,1;2,0)"),
            ("G2^4(2,1;1,2)", "G2^4(1,2;2,1)"),
            ("G3^3(0,1;0,1;0,1)", "G3^3(0,1;0,1;0,1)"),
            ("G1^3(0,1)", "T2"),
            ("H(1,0;1,0)", "P4"),
            ("W4", "K4"),
            ("W6", "W6"),
        ];
        for (input, expected) in cases {
            let g = spec(input).build().unwrap().graph;
            assert_eq!(recognize(&g), Some(spec(expected)), "{input}");
            let shuffled = g.relabel(&(0..g.n()).rev().collect::<Vec<_>>());
            assert_eq!(
                recognize(&shuffled),
                Some(spec(expected)),
                "{input} reversed"
            );
        }
        assert_eq!(recognize(&crate::graph::named::petersen()), None);
        // Pendants at opposite vertices of C4 do not form a run.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        assert_eq!(recognize(&g), None);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(spec("G1^5(0,2)").closed_form_chi_rho(), Some(5));
        assert_eq!(spec("G2^5(0,1;0,1)").closed_form_chi_rho(), Some(4));
        assert_eq!(spec("G2^4(1,0;1,0)").closed_form_chi_rho(), Some(4));
        assert_eq!(spec("G3^3(1,0;1,0;1,0)").closed_form_chi_rho(), None);
        assert_eq!(spec("G1^5(1,2)").closed_form_critical(), Some(false));
        assert_eq!(spec("G1^5(0,1)").closed_form_critical(), Some(false));
        assert_eq!(spec("H(0,2;0,2)").closed_form_critical(), Some(true));
        assert_eq!(triangle_clause(&spec("G3^3(2,0;0,3;0,2)")), Some("iv"));
        assert_eq!(triangle_clause(&spec("H(2,0;0,1)")), Some("vi"));
    }
}
