//! Acceptance suite: twelve criteria, each with its own time limit. Prints
//! one PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_core::constructions::{construct, parameter_grid, predicted_edge_count, ConstructionSpec, Family};
use rainbow_core::extremal::{bound_report, enumerate, theta_scan, theta_shapes, Extremal, ExtremalRecord, RowStatus};
use rainbow_core::graph::{theta_graph, vertex_connectivity};
use rainbow_core::rainbow::{find_disjoint_rainbow_paths, verify_rainbow_k_connected, EdgeColouring};
use rainbow_core::solver::{rc_exact, search_colouring, SolverConfig};
use rainbow_core::Graph;

type Outcome = Result<String, String>;

/// Accepted colourings gathered by criteria 1-8 for criterion 9.
#[derive(Default)]
struct Ctx {
    accepted: Vec<(Graph, EdgeColouring)>,
}

impl Ctx {
    fn accept(&mut self, g: &Graph, c: &EdgeColouring, k: usize) -> Result<(), String> {
        if !verify_rainbow_k_connected(g, c, k).unwrap().is_connected() {
            return Err(format!(
                "witness colouring of {:?} is not rainbow {k}-connected",
                g.edges()
            ));
        }
        if k == 2 {
            self.accepted.push((g.clone(), c.clone()));
        }
        Ok(())
    }

    fn accept_record(&mut self, rec: &ExtremalRecord) -> Result<(), String> {
        if let (Some(g), Some(c)) = (&rec.witness_graph, &rec.witness_colouring) {
            self.accept(g, c, rec.k)?;
        }
        Ok(())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:.1?}, limit {limit:?}"))
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn c1_complete_graphs(ctx: &mut Ctx) -> Outcome {
    for n in 4..=7 {
        let start = Instant::now();
        let res = rc_exact(&Graph::complete(n), 2, &cfg()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(10), &format!("K{n}"))?;
        ensure(res.rc_value == 2, || {
            format!("rc2(K{n}) = {}, expected 2", res.rc_value)
        })?;
        ctx.accept(&Graph::complete(n), &res.witness, 2)?;
    }
    Ok("rc2(K_n) = 2 for n = 4..7".into())
}

fn c2_cycles(ctx: &mut Ctx) -> Outcome {
    let mut nodes = Vec::new();
    for n in 4..=7 {
        let start = Instant::now();
        let g = Graph::cycle(n);
        let res = rc_exact(&g, 2, &cfg()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(300), &format!("C{n}"))?;
        ensure(res.rc_value == n as u32, || {
            format!("rc2(C{n}) = {}, expected {n}", res.rc_value)
        })?;
        let refuted = res.exhausted.last().map(|l| l.colours);
        ensure(refuted == Some(n as u32 - 1), || {
            format!("C{n}: no exhausted search at {} colours", n - 1)
        })?;
        nodes.push(res.exhausted.last().unwrap().nodes);
        ctx.accept(&g, &res.witness, 2)?;
    }
    Ok(format!(
        "rc2(C_n) = n for n = 4..7; n-1 colours refuted in {nodes:?} nodes"
    ))
}

fn c3_dense_threshold(ctx: &mut Ctx) -> Outcome {
    let mut ex = Extremal::new(cfg());
    let classes = ex.graphs(7, 2).map_err(|e| e.to_string())?.len();
    ensure(classes == 468, || {
        format!("{classes} 2-connected classes at n = 7, expected 468")
    })?;
    let mut cases = Vec::new();
    for n in 4..=7 {
        cases.push((n, n - 1, n + 1));
    }
    cases.extend([(6, 4, 8), (7, 5, 9)]);
    for (n, r, expected) in cases {
        let rec = ex.extremal_t(n, r as u32, 2).map_err(|e| e.to_string())?;
        ensure(rec.value == Some(expected), || {
            format!("t2({n},{r}) = {:?}, expected {expected}", rec.value)
        })?;
        ctx.accept_record(&rec)?;
    }
    Ok("t2(n,n-1) = n+1 for n = 4..7, t2(n,n-2) = n+2 for n = 6,7; 468 classes at n = 7".into())
}

fn c4_chain(ctx: &mut Ctx) -> Outcome {
    let mut ex = Extremal::new(cfg());
    for n in 4..=7 {
        for r in n..=n * (n - 1) / 2 {
            let rec = ex.extremal_t(n, r as u32, 2).map_err(|e| e.to_string())?;
            ensure(rec.value == Some(n), || {
                format!("t2({n},{r}) = {:?}, expected {n}", rec.value)
            })?;
            ctx.accept_record(&rec)?;
        }
    }
    Ok("t2(n,r) = n for n <= r <= C(n,2), n = 4..7".into())
}

fn c5_constructions(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for family in Family::ALL {
        let max_n = if family == Family::T2R2 { 40 } else { 20 };
        for spec in parameter_grid(family, max_n) {
            let b = construct(&spec).map_err(|e| e.to_string())?;
            ensure(b.graph.edge_count() == b.predicted_edges, || {
                format!(
                    "{spec:?}: {} edges, predicted {}",
                    b.graph.edge_count(),
                    b.predicted_edges
                )
            })?;
            let kappa = vertex_connectivity(&b.graph).map_err(|e| e.to_string())?;
            let needed = match family {
                Family::Harary => spec.k.unwrap(),
                Family::T1Cycles | Family::T1Bipartite | Family::S1CliquePath => 1,
                _ => 2,
            };
            ensure(kappa >= needed, || format!("{spec:?}: connectivity {kappa} < {needed}"))?;
            if let Some(c) = &b.colouring {
                ctx.accept(&b.graph, c, 2).map_err(|e| format!("{spec:?}: {e}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} parameter sets: edge counts, connectivity and colourings all check"
    ))
}

fn c6_s2_constructions(_: &mut Ctx) -> Outcome {
    let cases = [
        (Family::S2a, 6, 4),
        (Family::S2a, 7, 4),
        (Family::S2a, 6, 5),
        (Family::S2b, 6, 5),
    ];
    let mut detail = Vec::new();
    for (family, n, r) in cases {
        let start = Instant::now();
        let b = construct(&ConstructionSpec::new(family, n).with_r(r)).map_err(|e| e.to_string())?;
        let out = search_colouring(&b.graph, 2, r as u32 - 1, &cfg()).map_err(|e| e.to_string())?;
        within(start, Duration::from_secs(120), &format!("{family}({n},{r})"))?;
        ensure(out.colouring.is_none(), || {
            format!("{family}({n},{r}) has a rainbow 2-connected {}-colouring", r - 1)
        })?;
        detail.push(format!("{family}({n},{r}): {} nodes", out.nodes));
    }
    Ok(format!("no (r-1)-colouring exists: {}", detail.join(", ")))
}

fn c7_theta(ctx: &mut Ctx) -> Outcome {
    let mut detail = Vec::new();
    for n in [6, 7] {
        let scan = theta_scan(n, &cfg()).map_err(|e| e.to_string())?;
        ensure(scan.min_rc2 as usize >= n - 1, || {
            format!("n = {n}: a theta graph has rc2 = {}", scan.min_rc2)
        })?;
        for row in &scan.rows {
            let g = theta_graph(row.path_sizes).unwrap();
            ctx.accept(&g, &EdgeColouring::new(&g, row.colours.clone(), row.rc2).unwrap(), 2)?;
        }
        detail.push(format!(
            "n = {n}: {} shapes, min rc2 = {}",
            scan.rows.len(),
            scan.min_rc2
        ));
    }
    Ok(detail.join("; "))
}

fn c8_s_table(ctx: &mut Ctx) -> Outcome {
    let mut ex = Extremal::new(cfg());
    let n = 6usize;
    let mut values = Vec::new();
    for r in 2..=6usize {
        let rec = ex.extremal_s(n, r as u32, 2).map_err(|e| e.to_string())?;
        ctx.accept_record(&rec)?;
        let s = rec.value.ok_or_else(|| format!("s2(6,{r}) undefined"))?;
        if r == 2 {
            ensure(s == 15, || format!("s2(6,2) = {s}, expected 15"))?;
        }
        if r == 6 {
            ensure(s == 6, || format!("s2(6,6) = {s}, expected 6"))?;
        }
        if (3..n).contains(&r) {
            let a = (n - r + 2) * (n - r + 1) / 2 + r - 1;
            ensure(s >= a, || format!("s2(6,{r}) = {s} < {a}"))?;
        }
        if n + 4 <= 2 * r && r < n {
            let b = (n - r + 3) * (n - r + 2) / 2 + r - 3;
            ensure(s >= b, || format!("s2(6,{r}) = {s} < {b}"))?;
        }
        values.push(s);
    }
    Ok(format!("s2(6,r) for r = 2..6: {values:?}"))
}

fn c9_segments(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for (g, c) in &ctx.accepted {
        if vertex_connectivity(g).unwrap() < 2 {
            continue;
        }
        let bad = common::non_rainbow_long_segments(g, c);
        ensure(bad.is_empty(), || {
            format!(
                "accepted colouring {:?} of {:?} leaves {bad:?} non-rainbow",
                c.colours(),
                g.edges()
            )
        })?;
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let shapes: Vec<[usize; 3]> = (4..=8).flat_map(theta_shapes).collect();
    let mut accepted_random = 0;
    for _ in 0..10_000 {
        let shape = shapes[rng.random_range(0..shapes.len())];
        let g = theta_graph(shape).unwrap();
        let n = g.vertex_count() as u32;
        let r = rng.random_range(n - 1..=n + 1);
        let colours: Vec<u32> = (0..g.edge_count()).map(|_| rng.random_range(1..=r)).collect();
        let c = EdgeColouring::new(&g, colours, r).unwrap();
        if verify_rainbow_k_connected(&g, &c, 2).unwrap().is_connected() {
            accepted_random += 1;
            let bad = common::non_rainbow_long_segments(&g, &c);
            ensure(bad.is_empty(), || {
                format!(
                    "random colouring {:?} of {shape:?} leaves {bad:?} non-rainbow",
                    c.colours()
                )
            })?;
        }
    }
    Ok(format!("{checked} accepted colourings from criteria 1-8, 10000 random theta colourings ({accepted_random} accepted): no violations"))
}

fn c10_t2r2(_: &mut Ctx) -> Outcome {
    let mut ratios = Vec::new();
    for n in [100usize, 1_000, 10_000, 100_000] {
        let edges = predicted_edge_count(&ConstructionSpec::new(Family::T2R2, n)).map_err(|e| e.to_string())?;
        if n <= 1_000 {
            let b = construct(&ConstructionSpec::new(Family::T2R2, n)).map_err(|e| e.to_string())?;
            ensure(b.graph.edge_count() == edges, || {
                format!("T2_R2({n}) built with {} edges, counted {edges}", b.graph.edge_count())
            })?;
        }
        let ratio = edges as f64 / (n as f64 * (n as f64).log2());
        ensure((0.5..=1.5).contains(&ratio), || {
            format!("T2_R2({n}): ratio {ratio:.3} outside [0.5, 1.5]")
        })?;
        ratios.push(format!("{n}: {ratio:.3}"));
    }
    for n in 7..=40 {
        let b = construct(&ConstructionSpec::new(Family::T2R2, n)).map_err(|e| e.to_string())?;
        let c = b.colouring.unwrap();
        ensure(c.colour_count() == 2, || {
            format!("T2_R2({n}) uses {} colours", c.colour_count())
        })?;
        ensure(
            verify_rainbow_k_connected(&b.graph, &c, 2).unwrap().is_connected(),
            || format!("T2_R2({n}) fails verification"),
        )?;
    }
    Ok(format!(
        "|E|/(n log2 n): {}; verified rainbow 2-connected for n = 7..40",
        ratios.join(", ")
    ))
}

fn c11_bounds(_: &mut Ctx) -> Outcome {
    let mut ex = Extremal::new(cfg());
    let report = bound_report(&mut ex, 4..=7, 2..=8, 2, 60).map_err(|e| e.to_string())?;
    if let Some(row) = report.rows.iter().find(|r| r.status == RowStatus::Violation) {
        return Err(format!("{} violations, first: {row:?}", report.violations));
    }
    let exact = report.rows.iter().filter(|r| r.source == "exact").count();
    let diameter = report.rows.iter().filter(|r| r.rule.starts_with("|E| >=")).count();
    Ok(format!(
        "{} rows ({exact} on exact values, {diameter} diameter-bound checks), 0 violations",
        report.rows.len()
    ))
}

fn c12_oracles(_: &mut Ctx) -> Outcome {
    // path systems: every graph class with n <= 6 and at most 9 edges, every
    // first-use colouring with r <= 3 (colour permutations cannot matter)
    let mut systems = 0u64;
    for n in 2..=6 {
        for g in enumerate::all_graphs(n).map_err(|e| e.to_string())? {
            if g.edge_count() > 9 || g.edge_count() == 0 {
                continue;
            }
            for colours in common::first_use_colourings(g.edge_count(), 3) {
                let c = EdgeColouring::new(&g, colours.clone(), 3).unwrap();
                for u in 0..n {
                    for v in u + 1..n {
                        for k in 1..=2 {
                            let got = find_disjoint_rainbow_paths(&g, &c, u, v, k).unwrap();
                            let want = common::has_path_system(&g, &colours, u, v, k);
                            ensure(got.is_some() == want, || {
                                format!(
                                    "{:?} colours {colours:?} pair {u}-{v} k={k}: search {}, oracle {want}",
                                    g.edges(),
                                    got.is_some()
                                )
                            })?;
                            systems += 1;
                        }
                    }
                }
            }
        }
    }
    // symmetry-broken search against all r^|E| colourings
    let mut searches = 0;
    for n in 3..=5 {
        for k in 1..=2 {
            for g in enumerate::enumerate_k_connected(n, k).map_err(|e| e.to_string())? {
                for r in 1..=3 {
                    let got = search_colouring(&g, k, r, &cfg())
                        .map_err(|e| e.to_string())?
                        .colouring
                        .is_some();
                    let want = common::some_colouring_works(&g, k, r);
                    ensure(got == want, || {
                        format!("{:?} k={k} r={r}: search {got}, enumeration {want}", g.edges())
                    })?;
                    searches += 1;
                }
            }
        }
    }
    // connectivity: max-flow against vertex-cut enumeration on labelled graphs
    let mut graphs = 0;
    for n in 2..=6 {
        for g in common::labelled_graphs(n) {
            let flow = vertex_connectivity(&g).unwrap();
            let cuts = common::connectivity_by_cuts(&g);
            ensure(flow == cuts, || format!("{:?}: flow {flow}, cuts {cuts}", g.edges()))?;
            graphs += 1;
        }
    }
    Ok(format!(
        "{systems} path-system queries, {searches} colouring searches, {graphs} connectivity checks: no disagreements"
    ))
}

fn main() {
    type Criterion = fn(&mut Ctx) -> Outcome;
    let criteria: [(&str, u64, Criterion); 12] = [
        ("complete-graph oracle", 40, c1_complete_graphs),
        ("cycle oracle", 20 * 60, c2_cycles),
        ("t2(n,n-1) and t2(n,n-2) by enumeration", 30 * 60, c3_dense_threshold),
        ("t2(n,r) = n for r >= n", 30 * 60, c4_chain),
        ("construction validity sweep", 10 * 60, c5_constructions),
        ("rc2 >= r for the s2 constructions", 8 * 60, c6_s2_constructions),
        ("theta scan", 15 * 60, c7_theta),
        ("s2 table anchors", 30 * 60, c8_s_table),
        ("rainbow degree-two segments", 30 * 60, c9_segments),
        ("T2_R2 edge ratio and verification", 60, c10_t2r2),
        ("bound formulas on exact and constructed values", 30 * 60, c11_bounds),
        ("oracle equivalence", 30 * 60, c12_oracles),
    ];
    let mut ctx = Ctx::default();
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut ctx))).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.1?}, limit {limit} s"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!(
                "PASS criterion {:2} ({name}): {msg} [{:.2} s]",
                i + 1,
                elapsed.as_secs_f64()
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "FAIL criterion {:2} ({name}): {msg} [{:.2} s]",
                    i + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
