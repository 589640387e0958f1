//! Acceptance checks. Each test prints one `ACCEPTANCE <n> PASS|FAIL` line
//! to the real stdout, bypassing the test harness capture.

use std::io::Write;
use std::time::{Duration, Instant};

use crossbound::drawing::DrawingJson;
use crossbound::format::{parse_graph6, to_graph6};
use crossbound_core::bounds::{bound_thm32, verify_lemma21};
use crossbound_core::critical::{certify_critical_bounds, is_k_crossing_critical, AnalysisBudget, Verdict};
use crossbound_core::generate;
use crossbound_core::light_cycle::{is_cycle, light_cycle_general, light_cycle_planar, mu};
use crossbound_core::oracle::{crossing_number, OracleBudget};
use crossbound_core::planar::{is_planar, triangulate, RotationEmbedding};
use crossbound_core::router::{build_drawing, insert_edge, planarize_route};
use crossbound_core::skewness::{default_budget, skewness_exact};
use crossbound_core::{Graph, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, pass: bool, detail: &str, elapsed: Duration, limit: Duration) -> bool {
    let ok = pass && elapsed <= limit;
    let line = format!(
        "ACCEPTANCE {id} {} {name}: {detail} [{:.2}s, limit {}s]\n",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    ok
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn acceptance_1_k5_tightness() {
    let start = Instant::now();
    let k5 = generate::complete(5);
    let cert = skewness_exact(&k5, default_budget(&k5)).unwrap();
    let drawing = build_drawing(&k5, &cert).unwrap();
    let bound = bound_thm32(5, cert.value);
    let cr = crossing_number(&k5, &OracleBudget::default()).unwrap();
    let pass = cert.value == 1 && cert.exact && drawing.crossing_count == 1 && bound == Rational::from_integer(1) && cr == 1;
    let detail = format!(
        "sk={} crossing_count={} bound_thm32={} cr={}",
        cert.value, drawing.crossing_count, bound, cr
    );
    assert!(report(1, "K5 tightness", pass, &detail, start.elapsed(), Duration::from_secs(1)));
}

#[test]
fn acceptance_2_single_insertion_bound() {
    let start = Instant::now();
    let mut within = 0;
    let mut worst = String::new();
    for i in 0..300u64 {
        let mut r = rng(0x2000 + i);
        let n = r.gen_range(5..=30);
        let base = generate::random_maximal_planar(n, &mut r);
        let (_, extra) = generate::add_random_non_edges(&base, 1, &mut r);
        let e = *extra.first().unwrap();
        let emb = RotationEmbedding::embed(&base).unwrap();
        let route = insert_edge(&emb, e, true).unwrap();
        let limit = (2 * n - 7) / 3;
        if route.crossing_count() <= limit && route.is_valid_for(&emb) {
            within += 1;
        } else {
            worst = format!(" first violation: n={n} crossings={}", route.crossing_count());
        }
    }
    let detail = format!("{within}/300 within floor((2n-7)/3){worst}");
    assert!(report(2, "single insertion bound", within == 300, &detail, start.elapsed(), Duration::from_secs(30)));
}

#[test]
fn acceptance_3_planar_light_cycle() {
    let start = Instant::now();
    let mut ok = 0;
    let mut max_mu = 0;
    for i in 0..200u64 {
        let mut r = rng(0x3000 + i);
        let n = r.gen_range(4..=40);
        let g = generate::random_planar_min_degree3(n, &mut r);
        assert!(g.min_degree().unwrap() >= 3);
        let w = light_cycle_planar(&g).unwrap();
        max_mu = max_mu.max(w.mu);
        if w.mu <= 10 && w.len() <= 5 && is_cycle(&g, &w.cycle) && mu(&g, &w.cycle).unwrap().0 == w.mu {
            ok += 1;
        }
    }
    let detail = format!("{ok}/200 with mu <= 10 and face length <= 5 (max mu {max_mu})");
    assert!(report(3, "planar light cycle", ok == 200, &detail, start.elapsed(), Duration::from_secs(30)));
}

#[test]
fn acceptance_4_general_light_cycle() {
    let start = Instant::now();
    let (mut ok, mut fallback) = (0, 0);
    for i in 0..200u64 {
        let mut r = rng(0x4000 + i);
        let n = r.gen_range(8..=30);
        let t = r.gen_range(0..=5);
        let base = generate::random_planar_min_degree3(n, &mut r);
        let (g, e0) = generate::add_random_non_edges(&base, t, &mut r);
        let w = light_cycle_general(&g, &e0).unwrap();
        if w.mu <= t + 10 && is_cycle(&g, &w.cycle) && mu(&g, &w.cycle).unwrap().0 == w.mu {
            ok += 1;
        }
        if w.is_fallback() {
            fallback += 1;
        }
    }
    let non_fallback = 200 - fallback;
    let detail = format!("{ok}/200 with mu <= t+10; {non_fallback}/200 without fallback (target >= 190)");
    let pass = ok == 200 && non_fallback >= 190;
    assert!(report(4, "general light cycle", pass, &detail, start.elapsed(), Duration::from_secs(60)));
}

#[test]
fn acceptance_5_oracle_ground_truth() {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let cases = [
        ("K5", generate::complete(5), 1),
        ("K3,3", generate::complete_bipartite(3, 3), 1),
        ("K6", generate::complete(6), 3),
        ("Petersen", generate::petersen(), 2),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, expected) in &cases {
        let got = crossing_number(g, &budget);
        pass &= got == Ok(*expected);
        parts.push(format!("{name}={}", got.map_or("error".into(), |c| c.to_string())));
    }
    assert!(report(5, "oracle ground truth", pass, &parts.join(" "), start.elapsed(), Duration::from_secs(300)));
}

#[test]
fn acceptance_6_criticality_and_bounds() {
    let start = Instant::now();
    let budget = AnalysisBudget::default();
    let cases = [
        ("K5", generate::complete(5), 1),
        ("K3,3", generate::complete_bipartite(3, 3), 1),
        ("K6", generate::complete(6), 3),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, k) in &cases {
        let critical = is_k_crossing_critical(g, *k, &budget.oracle) == Ok(true);
        let report = certify_critical_bounds(g, *k, &budget);
        let holds = report.as_ref().is_ok_and(|r| {
            r.satisfied.len() == 3 && r.satisfied.iter().all(|&(_, v)| v == Verdict::Holds)
        });
        pass &= critical && holds;
        let thm42 = report
            .as_ref()
            .ok()
            .and_then(|r| r.bound_thm42.as_ref().map(|b| format!("{:.4}", b.approx())))
            .unwrap_or_default();
        parts.push(format!("{name}: critical={critical} bounds_hold={holds} thm42={thm42}"));
    }
    assert!(report(6, "criticality and bounds", pass, &parts.join("; "), start.elapsed(), Duration::from_secs(300)));
}

#[test]
fn acceptance_7_degree_sum_inequalities() {
    let start = Instant::now();
    let ok = verify_lemma21(60);
    assert!(report(7, "degree-sum inequalities", ok, &format!("verify(60)={ok}"), start.elapsed(), Duration::from_secs(5)));
}

fn check_embedding(emb: &RotationEmbedding) -> bool {
    let g = emb.graph();
    let recs = emb.face_records();
    let w = recs.iter().fold(Rational::zero(), |a, r| a + r.weight);
    emb.euler_characteristic() == 2
        && w == Rational::from_integer(g.vertex_count() as i128)
        && recs.iter().map(|r| r.length).sum::<usize>() == 2 * g.edge_count()
}

#[test]
fn acceptance_8_invariant_suite() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut embeddings = 0;
    let mut dual_oracle = 0;
    let mut drawings = 0;

    let mut corpus: Vec<(String, Graph)> = ["K5", "K3,3", "K6", "petersen", "cube", "dodecahedron", "icosahedron"]
        .iter()
        .map(|&name| (name.to_string(), crossbound::cli::graph_by_name(name).unwrap()))
        .collect();
    for i in 0..40u64 {
        let mut r = rng(0x8000 + i);
        let n = r.gen_range(6..=14);
        let t = r.gen_range(0..=3);
        let (g, _) = generate::planar_plus(n, t, &mut r);
        corpus.push((format!("planar-plus#{i}"), g));
    }
    for i in 0..20u64 {
        let mut r = rng(0x8100 + i);
        let n = r.gen_range(5..=7);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if r.gen_bool(0.6) {
                    edges.push((a, b));
                }
            }
        }
        corpus.push((format!("random#{i}"), Graph::from_edges(n as usize, edges).unwrap()));
    }

    for (name, g) in &corpus {
        let Ok(cert) = skewness_exact(g, default_budget(g)) else {
            violations.push(format!("{name}: skewness budget"));
            continue;
        };
        let planar_part = g.delete_edges(&cert.removed).unwrap();
        if !is_planar(&planar_part) {
            violations.push(format!("{name}: certificate not planar"));
        }
        if planar_part.is_connected() && planar_part.edge_count() > 0 {
            let emb = RotationEmbedding::embed(&planar_part).unwrap();
            embeddings += 1;
            if !check_embedding(&emb) {
                violations.push(format!("{name}: base embedding identities"));
            }
            if planar_part.vertex_count() >= 3 {
                let (t, _) = triangulate(&emb);
                embeddings += 1;
                if !check_embedding(&t) || t.graph().edge_count() != 3 * t.graph().vertex_count() - 6 {
                    violations.push(format!("{name}: triangulation"));
                }
            }
            for &e in &cert.removed {
                if let Ok(route) = insert_edge(&emb, e, true) {
                    let p = planarize_route(&emb, &route).unwrap();
                    embeddings += 1;
                    if !check_embedding(&p.embedding) {
                        violations.push(format!("{name}: planarized embedding"));
                    }
                }
            }
        }
        if g.edge_count() > 0 {
            let d = build_drawing(g, &cert).unwrap();
            drawings += 1;
            if let Some(p) = &d.planarization {
                embeddings += 1;
                if !check_embedding(p) || !is_planar(&d.planarized_graph()) {
                    violations.push(format!("{name}: drawing planarization"));
                }
            }
            let text = DrawingJson::from_drawing(&d).to_json();
            if DrawingJson::from_json(&text).ok().map(|j| j.to_json()).as_deref() != Some(text.as_str()) {
                violations.push(format!("{name}: drawing JSON round trip"));
            }
        }
        if parse_graph6(to_graph6(g).as_bytes()).as_ref() != Ok(g) {
            violations.push(format!("{name}: graph6 round trip"));
        }
        if g.edge_count() <= 20 {
            if let Ok(cr) = crossing_number(g, &OracleBudget::default()) {
                dual_oracle += 1;
                if cert.value > cr {
                    violations.push(format!("{name}: sk={} > cr={cr}", cert.value));
                }
            }
        }
    }
    let detail = format!(
        "{} violations over {} embeddings, {} drawings, {} graphs with both sk and cr{}",
        violations.len(),
        embeddings,
        drawings,
        dual_oracle,
        violations.first().map(|v| format!(" (first: {v})")).unwrap_or_default()
    );
    assert!(report(8, "invariant suite", violations.is_empty(), &detail, start.elapsed(), Duration::from_secs(300)));
}
