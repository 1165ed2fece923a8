//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use packcrit::classify::classify;
use packcrit::criticality::{is_edge_critical, Deletion};
use packcrit::enumeration::{enumerate_graphs, EnumerationFilter, StructuralClass};
use packcrit::families::FamilySpec;
use packcrit::graph::named;
use packcrit::io::{emit_graph6, parse_graph6};
use packcrit::packing::{chi_rho, verify_packing_coloring};
use packcrit::verify::{
    run_sweep, tree_criticality_agreement, triangle_clause_instances, Report, SweepConfig,
};
use packcrit::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(id: &str, max_vertices: Option<usize>, base_max: Option<usize>) -> Result<Report, String> {
    let r = run_sweep(
        id,
        SweepConfig {
            max_vertices,
            base_max,
        },
    )
    .map_err(|e| format!("{id}: {e}"))?;
    ensure(r.disagreed == 0, || {
        let bad = r.records.iter().find(|x| !x.agree).unwrap();
        format!(
            "{id}: {} disagreements, first {} {:?} predicted {} oracle {}",
            r.disagreed, bad.instance_g6, bad.spec, bad.predicted, bad.oracle
        )
    })?;
    ensure(!r.records.is_empty(), || format!("{id}: no instances"))?;
    Ok(r)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn pairs(spec: &str) -> Vec<(usize, usize)> {
    match spec.parse::<FamilySpec>().unwrap() {
        FamilySpec::Gqr { pairs, .. } => pairs,
        other => panic!("not a G family: {other}"),
    }
}

fn record_values(r: &Report) -> impl Iterator<Item = (Vec<(usize, usize)>, u64)> + '_ {
    r.records.iter().map(|x| {
        (
            pairs(x.spec.as_deref().unwrap()),
            x.oracle.as_u64().unwrap(),
        )
    })
}

fn c1() -> Check {
    let start = Instant::now();
    let mut cases: Vec<(String, Graph, u32)> = vec![
        ("C5".into(), named::cycle(5), 4),
        ("C4".into(), named::cycle(4), 3),
        ("P4".into(), named::path(4), 3),
        ("P5".into(), named::path(5), 3),
        ("W6".into(), named::wheel(6), 5),
    ];
    cases.extend((1..=5).map(|n| (format!("T{n}"), named::friendship(n), n as u32 + 2)));
    for (name, g, want) in &cases {
        let got = chi_rho(g).map_err(|e| e.to_string())?.value;
        ensure(got == *want, || {
            format!("chi_rho({name}) = {got}, expected {want}")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{} spot values", cases.len()))
}

fn c2() -> Check {
    let start = Instant::now();
    let r = sweep("pro4", Some(14), None)?;
    ensure(r.records.len() == 29, || {
        format!("{} instances, expected 29", r.records.len())
    })?;
    for (p, v) in record_values(&r) {
        let m = p[0].1 as u64;
        let want = if m == 0 { 4 } else { m + 3 };
        ensure(v == want, || format!("{p:?}: {v} != {want}"))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{} members of G1^5 agree", r.records.len()))
}

fn c3() -> Check {
    let start = Instant::now();
    let mut total = 0;
    for id in ["pro8", "pro10", "pro12"] {
        let r = sweep(id, Some(14), None)?;
        for (p, v) in record_values(&r) {
            let t = p.iter().map(|x| x.1 as u64).sum::<u64>();
            let want = match id {
                "pro8" if t == 0 => 4,
                "pro8" if p[0].1 == 0 || p[1].1 == 0 => t + 3,
                "pro8" => t + 2,
                "pro10" if t == 0 => 3,
                "pro10" => t + 2,
                _ if t == 0 => 4,
                _ => t + 3,
            };
            ensure(v == want, || format!("{id} {p:?}: {v} != {want}"))?;
        }
        total += r.records.len();
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{total} members agree"))
}

fn c4() -> Check {
    let r = sweep("lemma7", Some(13), None)?;
    for rec in &r.records {
        let g = parse_graph6(rec.instance_g6.as_bytes()).unwrap();
        let want = (g.n() - common::alpha(&g) + 1) as u64;
        ensure(rec.oracle.as_u64() == Some(want), || {
            format!("{:?}: chi_rho {} != {want}", rec.spec, rec.oracle)
        })?;
    }
    Ok(format!("{} members of H(k1,m1;k2,0)", r.records.len()))
}

fn c5() -> Check {
    let mut total = 0;
    for id in ["pro7", "pro9", "pro11", "pro13"] {
        let r = sweep(id, Some(12), None)?;
        for rec in &r.records {
            let p = pairs(rec.spec.as_deref().unwrap());
            let want = match id {
                "pro7" => p[0].0 == 0 && p[0].1 >= 2,
                "pro13" => {
                    p == [(1, 0), (1, 0)]
                        || (p[0].0 == 0 && p[1].0 == 0 && p[0].1 >= 1 && p[1].1 >= 1)
                }
                _ => false,
            };
            ensure(rec.oracle.as_bool() == Some(want), || {
                format!("{id} {p:?}: oracle {}", rec.oracle)
            })?;
        }
        total += r.records.len();
    }
    let mut clauses = Vec::new();
    for spec in triangle_clause_instances() {
        let g = spec.build().unwrap().graph;
        let v = classify(&g).map_err(|e| e.to_string())?;
        let o = is_edge_critical(&g).map_err(|e| e.to_string())?.critical;
        ensure(o && v.predicted_critical, || {
            format!("{spec}: predicted {} oracle {o}", v.predicted_critical)
        })?;
        clauses.push(v.clause);
    }
    let seen: std::collections::BTreeSet<String> = clauses.into_iter().collect();
    let want: std::collections::BTreeSet<String> =
        ["v", "vi", "vii", "viii", "ix", "x", "xi", "xii"]
            .iter()
            .map(|c| format!("teo4-({c})"))
            .collect();
    ensure(seen == want, || format!("clauses {seen:?}"))?;
    Ok(format!(
        "{total} family members and {} clause instances agree",
        triangle_clause_instances().len()
    ))
}

fn c6() -> Check {
    let start = Instant::now();
    let r = sweep("thm12", None, Some(6))?;
    ensure(r.records.len() == 208, || {
        format!("{} hub graphs, expected 208", r.records.len())
    })?;
    let w6 = named::wheel(6);
    let rep = is_edge_critical(&w6).map_err(|e| e.to_string())?;
    let Some(Deletion::Edge(u, v)) = rep.witness else {
        return Err("W6 reported critical".into());
    };
    let after = w6.delete_edge(u, v).unwrap();
    ensure(
        chi_rho(&after).unwrap().value == 5 && common::chi_rho(&after) == 5,
        || format!("chi_rho(W6 - {u}{v}) != 5"),
    )?;
    let verdict = classify(&w6).map_err(|e| e.to_string())?;
    ensure(!verdict.predicted_critical, || {
        "classifier calls W6 critical".into()
    })?;
    within(start, Duration::from_secs(900))?;
    Ok(format!("208 hub graphs agree; W6 - {u}{v} keeps chi_rho 5"))
}

fn c7() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for id in ["teo3", "teo4", "pro2", "pro3"] {
        let r = sweep(id, Some(10), None)?;
        parts.push(format!("{id} {}", r.records.len()));
    }
    within(start, Duration::from_secs(1800))?;
    Ok(parts.join(", "))
}

fn connected(max_n: usize) -> Vec<Graph> {
    enumerate_graphs(&EnumerationFilter::new(StructuralClass::All, 1, max_n).connected()).unwrap()
}

fn c8() -> Check {
    for (id, n) in [
        ("lemma4", 7),
        ("teo2", 7),
        ("cor-haynes", 7),
        ("lem-rad3", 11),
        ("obsv1", 7),
    ] {
        sweep(id, Some(n), None)?;
    }
    let graphs = connected(7);
    for g in &graphs {
        let a = common::alpha(g);
        let base = chi_rho(g).unwrap().value;
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).unwrap();
            let b = common::alpha(&h);
            ensure(a <= b && b <= a + 1, || {
                format!("alpha bound fails on {}", emit_graph6(g).unwrap())
            })?;
            ensure(chi_rho(&h).unwrap().value <= base, || {
                format!("edge monotonicity fails on {}", emit_graph6(g).unwrap())
            })?;
        }
        if g.n() > 1 {
            for v in g.vertices() {
                let h = g.delete_vertex(v).unwrap().0;
                ensure(chi_rho(&h).unwrap().value <= base, || {
                    format!("vertex monotonicity fails on {}", emit_graph6(g).unwrap())
                })?;
            }
        }
    }
    let trees = enumerate_graphs(&EnumerationFilter::new(StructuralClass::Tree, 2, 10)).unwrap();
    for t in &trees {
        ensure(tree_criticality_agreement(t).unwrap(), || {
            format!(
                "tree {} edge/vertex criticality differ",
                emit_graph6(t).unwrap()
            )
        })?;
    }
    Ok(format!(
        "5 sweeps, {} connected graphs, {} trees",
        graphs.len(),
        trees.len()
    ))
}

fn c9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    let mut check = |g: &Graph| -> Result<(), String> {
        let r = chi_rho(g).map_err(|e| e.to_string())?;
        let g6 = emit_graph6(g).unwrap();
        ensure(
            verify_packing_coloring(g, r.witness.colors())
                .unwrap()
                .is_valid(),
            || format!("{g6}: witness rejected"),
        )?;
        ensure(common::is_packing_coloring(g, r.witness.colors()), || {
            format!("{g6}: witness rejected by oracle")
        })?;
        ensure(r.witness.k() == r.value, || {
            format!("{g6}: witness uses {} colours", r.witness.k())
        })?;
        ensure(common::chi_rho(g) == r.value, || {
            format!("{g6}: oracle disagrees with {}", r.value)
        })?;
        checked += 1;
        Ok(())
    };
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let p: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        check(&Graph::new(n, &edges).unwrap())?;
    }
    let mut specs: Vec<FamilySpec> = Vec::new();
    for (id, n) in [
        ("pro4", 14),
        ("pro8", 14),
        ("pro10", 14),
        ("pro12", 14),
        ("lemma7", 13),
        ("pro7", 12),
        ("pro9", 12),
        ("pro11", 12),
        ("pro13", 12),
    ] {
        specs.extend(
            sweep(id, Some(n), None)?
                .records
                .iter()
                .map(|r| r.spec.as_deref().unwrap().parse().unwrap()),
        );
    }
    let mut large = 0;
    for spec in triangle_clause_instances() {
        if spec.order() <= 14 {
            specs.push(spec);
        } else {
            large += 1;
        }
    }
    specs.sort();
    specs.dedup();
    for spec in &specs {
        check(&spec.build().unwrap().graph)?;
    }
    Ok(format!("{checked} graphs confirmed minimal ({} family members); {large} clause instances above 14 vertices checked by sweep only", specs.len()))
}

fn c10() -> Check {
    let graphs = enumerate_graphs(&EnumerationFilter::new(StructuralClass::All, 0, 8)).unwrap();
    for g in &graphs {
        let s = emit_graph6(g).map_err(|e| e.to_string())?;
        let back = parse_graph6(s.as_bytes()).map_err(|e| e.to_string())?;
        ensure(&back == g, || format!("parse(emit) differs for {s}"))?;
        ensure(emit_graph6(&back).unwrap() == s, || {
            format!("emit(parse) differs for {s}")
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("spot values", c1),
        ("G1^5 formula sweep", c2),
        ("G2^5, G1^4, G2^4 formula sweeps", c3),
        ("H(k1,m1;k2,0) equals |V| - alpha + 1", c4),
        ("criticality characterizations", c5),
        ("radius-1 characterization", c6),
        ("radius-2 cactus characterizations", c7),
        ("property suites", c8),
        ("witnesses and minimality", c9),
        ("graph6 round-trip", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
