//! Structural decision procedures for packing-chromatic criticality.
//!
//! Every predicate here is decided from structure alone (universal vertices,
//! α-criticality, family recognition, block degrees). None of them computes a
//! packing chromatic number; comparing against that is the job of the tests.

use serde::Serialize;

use crate::blocks::BlockDecomposition;
use crate::error::{GraphError, Result};
use crate::families::{recognize, triangle_clause, FamilySpec};
use crate::graph::Graph;
use crate::independence::is_alpha_critical;
use crate::iso::is_isomorphic;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    /// Recognized family, in spec syntax.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub universal_vertex: Option<usize>,
    /// Components of `G - u`, in labels of `G`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Vec<usize>>,
    /// An edge of `G - u` (labels of `G`) whose removal keeps α.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_witness_edge: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_after_hub: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub central_block: Vec<usize>,
    /// Sub-properties each central vertex satisfies (`c1`, `c2`, `c3`).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subclauses: Vec<(usize, Vec<&'static str>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub theorem: &'static str,
    pub applicable: bool,
    pub predicted_critical: bool,
    pub clause: String,
    pub evidence: Evidence,
}

impl Verdict {
    fn new(
        theorem: &'static str,
        critical: bool,
        clause: impl Into<String>,
        evidence: Evidence,
    ) -> Self {
        Verdict {
            theorem,
            applicable: true,
            predicted_critical: critical,
            clause: clause.into(),
            evidence,
        }
    }

    fn out_of_scope(reason: String) -> Self {
        Verdict {
            theorem: "none",
            applicable: false,
            predicted_critical: false,
            clause: "out-of-scope".into(),
            evidence: Evidence {
                note: Some(reason),
                ..Evidence::default()
            },
        }
    }
}

fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(GraphError::Precondition(msg.into()))
}

/// Radius-1 graphs: complete graphs are critical; otherwise a leaf rules
/// criticality out, and the structure of `G - u` for a universal vertex `u`
/// decides. The verdict is computed for every universal vertex and must agree.
pub fn classify_radius1(g: &Graph) -> Result<Verdict> {
    let rad = g.radius()?;
    if rad != 1 {
        return precondition(format!("radius {rad} != 1"));
    }
    let diam = g.diameter()?;
    if diam == 1 {
        let ev = Evidence {
            family: Some(FamilySpec::Complete(g.n()).to_string()),
            ..Evidence::default()
        };
        return Ok(Verdict::new("obs-complete", true, "obs-complete", ev));
    }
    if let Some(&leaf) = g.leaves().first() {
        let ev = Evidence {
            leaf: Some(leaf),
            ..Evidence::default()
        };
        return Ok(Verdict::new("pro14", false, "pro14-leaf", ev));
    }
    let mut verdicts = g
        .universal_vertices()
        .into_iter()
        .map(|u| hub_verdict(g, u));
    let first = verdicts
        .next()
        .expect("radius 1 means a universal vertex exists")?;
    for other in verdicts {
        let other = other?;
        if other.predicted_critical != first.predicted_critical {
            return precondition(format!(
                "verdict depends on the universal vertex: {} at {:?}, {} at {:?}",
                first.clause,
                first.evidence.universal_vertex,
                other.clause,
                other.evidence.universal_vertex
            ));
        }
    }
    Ok(first)
}

fn hub_verdict(g: &Graph, u: usize) -> Result<Verdict> {
    let (rest, map) = g.delete_vertex(u)?;
    let back: Vec<usize> = g.vertices().filter(|&v| v != u).collect();
    debug_assert!(back.iter().enumerate().all(|(i, &v)| map[v] == Some(i)));
    let comps = rest.components();
    let mut ev = Evidence {
        universal_vertex: Some(u),
        components: comps
            .iter()
            .map(|c| c.iter().map(|&v| back[v]).collect())
            .collect(),
        ..Evidence::default()
    };
    let mut all_critical = true;
    for comp in &comps {
        let (h, _) = rest.induced_subgraph(comp);
        if let Some((a, b)) = is_alpha_critical(&h).witness_edge {
            ev.alpha_witness_edge = Some((back[comp[a]], back[comp[b]]));
            all_critical = false;
            break;
        }
    }
    if comps.len() == 1 {
        let r = rest.radius()?;
        ev.radius_after_hub = Some(r);
        let critical = all_critical && r >= 3;
        let clause = if critical {
            "thm12-(i)"
        } else {
            "thm12-not-(i)"
        };
        Ok(Verdict::new("thm12", critical, clause, ev))
    } else {
        let clause = if all_critical {
            "thm12-(ii)"
        } else {
            "thm12-not-(ii)"
        };
        Ok(Verdict::new("thm12", all_critical, clause, ev))
    }
}

fn require_cactus_rad2(g: &Graph, diam: u32) -> Result<()> {
    if !g.is_cactus() {
        return precondition("graph is not a cactus");
    }
    let (r, d) = (g.radius()?, g.diameter()?);
    if (r, d) != (2, diam) {
        return precondition(format!(
            "radius {r}, diameter {d}; need radius 2, diameter {diam}"
        ));
    }
    Ok(())
}

/// Cacti of radius 2 and diameter 2: only `C4` and `C5` exist, and `C5` is
/// the critical one. Any other input would contradict that and is an error.
pub fn classify_cactus_rad2_diam2(g: &Graph) -> Result<Verdict> {
    require_cactus_rad2(g, 2)?;
    for (n, critical, clause) in [(5, true, "teo3-C5"), (4, false, "teo3-C4")] {
        if g.n() == n && is_isomorphic(g, &crate::graph::named::cycle(n)) {
            let ev = Evidence {
                family: Some(FamilySpec::Cycle(n).to_string()),
                ..Evidence::default()
            };
            return Ok(Verdict::new("teo3", critical, clause, ev));
        }
    }
    precondition("radius-2 diameter-2 cactus other than C4 or C5")
}

const ROMAN: [&str; 12] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii",
];

/// Position (1-based) of `spec` in the list of critical radius-2 diameter-3 cacti.
fn teo4_clause(spec: &FamilySpec) -> Option<usize> {
    match spec {
        FamilySpec::Path(4) => Some(1),
        FamilySpec::Gqr { r: 5, pairs } if pairs.len() == 1 => {
            (pairs[0].0 == 0 && pairs[0].1 >= 2).then_some(2)
        }
        FamilySpec::Gqr { r: 4, pairs } if pairs.len() == 2 => match (pairs[0], pairs[1]) {
            ((1, 0), (1, 0)) => Some(3),
            ((0, a), (0, b)) if a >= 1 && b >= 1 => Some(4),
            _ => None,
        },
        FamilySpec::Gqr { r: 3, .. } | FamilySpec::H { .. } => {
            let c = triangle_clause(spec)?;
            if c == "P4" {
                return Some(1);
            }
            let i = ROMAN.iter().position(|&r| r == c)?;
            Some(i + 5)
        }
        _ => None,
    }
}

/// Cacti of radius 2 and diameter 3: critical exactly for the twelve listed
/// families, decided by recognition and parameter checks.
pub fn classify_cactus_rad2_diam3(g: &Graph) -> Result<Verdict> {
    require_cactus_rad2(g, 3)?;
    let Some(spec) = recognize(g) else {
        return Ok(Verdict::new(
            "teo4",
            false,
            "teo4-nomatch",
            Evidence::default(),
        ));
    };
    let ev = Evidence {
        family: Some(spec.to_string()),
        ..Evidence::default()
    };
    Ok(match teo4_clause(&spec) {
        Some(i) => Verdict::new("teo4", true, format!("teo4-({})", ROMAN[i - 1]), ev),
        None => Verdict::new("teo4", false, "teo4-outside", ev),
    })
}

/// The same class restricted to a triangle main block, through the
/// eight-clause list for that case.
pub fn classify_triangle_main_block(g: &Graph) -> Result<Verdict> {
    require_cactus_rad2(g, 3)?;
    let dec = g.block_decomposition()?;
    let longest = dec
        .blocks
        .iter()
        .filter(|b| b.is_cycle())
        .map(|b| b.order())
        .max();
    if longest != Some(3) {
        return precondition("main block is not a triangle");
    }
    let Some(spec) = recognize(g) else {
        return Ok(Verdict::new(
            "teo1",
            false,
            "teo1-nomatch",
            Evidence::default(),
        ));
    };
    let ev = Evidence {
        family: Some(spec.to_string()),
        ..Evidence::default()
    };
    Ok(match triangle_clause(&spec) {
        Some(c) if c != "P4" => Verdict::new("teo1", true, format!("teo1-({c})"), ev),
        _ => Verdict::new("teo1", false, "teo1-outside", ev),
    })
}

/// Block graphs of diameter 3, judged on the central block `B` (the block
/// induced by the centre): (a) every vertex of `B` has degree `|B|`; (b) every
/// vertex has degree `|B| + 1` and exactly `|B| - 1` of them have two leaf
/// neighbours; (c) every vertex satisfies c1, c2 or c3. Degrees are taken in
/// `G`; a side block is any other block through a vertex of `B`.
pub fn block_graph_diam3_criterion(g: &Graph) -> Result<Verdict> {
    if !g.is_block_graph() {
        return precondition("graph is not a block graph");
    }
    let d = g.diameter()?;
    if d != 3 {
        return precondition(format!("diameter {d} != 3"));
    }
    let centre = g.center()?;
    let dec: BlockDecomposition = g.block_decomposition()?;
    let Some(bi) = dec.blocks.iter().position(|b| b.vertices == centre) else {
        return precondition(format!("centre {centre:?} is not a block"));
    };
    let b = centre.len();
    let leaf_nbrs = |x: usize| g.neighbors(x).iter().filter(|&&w| g.degree(w) == 1).count();
    let side_orders = |x: usize| -> Vec<usize> {
        dec.blocks_of(x)
            .into_iter()
            .filter(|&i| i != bi)
            .map(|i| dec.blocks[i].order())
            .collect()
    };

    let mut ev = Evidence {
        central_block: centre.clone(),
        ..Evidence::default()
    };
    if centre.iter().all(|&x| g.degree(x) == b) {
        return Ok(Verdict::new("lemma8", true, "lemma8-(a)", ev));
    }
    if centre.iter().all(|&x| g.degree(x) == b + 1)
        && centre.iter().filter(|&&x| leaf_nbrs(x) == 2).count() == b - 1
    {
        return Ok(Verdict::new("lemma8", true, "lemma8-(b)", ev));
    }
    let c12: Vec<(bool, bool)> = centre
        .iter()
        .map(|&x| {
            let sides = side_orders(x);
            let no_leaf = leaf_nbrs(x) == 0;
            (
                no_leaf && sides.iter().any(|&o| o >= 4),
                no_leaf && sides.iter().filter(|&&o| o == 3).count() >= 2,
            )
        })
        .collect();
    let some_c12 = c12.iter().any(|&(a, b)| a || b);
    let mut all = true;
    for (i, &x) in centre.iter().enumerate() {
        let mut tags = Vec::new();
        if c12[i].0 {
            tags.push("c1");
        }
        if c12[i].1 {
            tags.push("c2");
        }
        if some_c12 && g.degree(x) == b + 1 && leaf_nbrs(x) == 2 {
            tags.push("c3");
        }
        all &= !tags.is_empty();
        ev.subclauses.push((x, tags));
    }
    Ok(if all {
        Verdict::new("lemma8", true, "lemma8-(c)", ev)
    } else {
        Verdict::new("lemma8", false, "lemma8-none", ev)
    })
}

/// Picks the characterization whose hypotheses `g` meets. Graphs outside all
/// of them get a non-applicable verdict naming the reason.
pub fn classify(g: &Graph) -> Result<Verdict> {
    if g.is_empty() {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Ok(Verdict::out_of_scope("graph is disconnected".into()));
    }
    if g.n() == 1 {
        return Ok(Verdict::out_of_scope("single vertex".into()));
    }
    let (rad, diam) = (g.radius()?, g.diameter()?);
    if rad == 1 {
        return classify_radius1(g);
    }
    if rad == 2 && g.is_cactus() {
        match diam {
            2 => return classify_cactus_rad2_diam2(g),
            3 => return classify_cactus_rad2_diam3(g),
            _ => {}
        }
    }
    if diam == 3 && g.is_block_graph() {
        return block_graph_diam3_criterion(g);
    }
    let kind = if g.is_cactus() {
        "cactus"
    } else {
        "non-cactus"
    };
    Ok(Verdict::out_of_scope(format!(
        "{kind} with radius {rad}, diameter {diam}"
    )))
}
