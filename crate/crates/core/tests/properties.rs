use std::collections::{BTreeMap, BTreeSet};

use crossbound_core::bounds::{bound_thm41, bound_thm32};
use crossbound_core::generate;
use crossbound_core::light_cycle::{brute_force_min_mu, is_cycle, light_cycle_general, light_cycle_planar, mu};
use crossbound_core::oracle::{cr_at_most, crossing_number, planarize_config, OracleBudget};
use crossbound_core::planar::{is_planar, kuratowski_subgraph, triangulate, KuratowskiKind, RotationEmbedding};
use crossbound_core::router::{build_drawing, insert_edge, planarize_route};
use crossbound_core::skewness::{planar_subgraph_heuristic, skewness_exact, skewness_lower_bound};
use crossbound_core::{Edge, EdgeSet, Graph, Rational, Vertex};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n as Vertex {
        for b in a + 1..n as Vertex {
            if mask >> (bit % 64) & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

type Simple = BTreeSet<(Vertex, Vertex)>;

fn degrees(g: &Simple) -> BTreeMap<Vertex, usize> {
    let mut d = BTreeMap::new();
    for &(a, b) in g {
        *d.entry(a).or_insert(0) += 1;
        *d.entry(b).or_insert(0) += 1;
    }
    d
}

/// Drops vertices of degree ≤ 1 and smooths degree-2 vertices until every
/// vertex has degree ≥ 3.
fn reduce(mut g: Simple) -> Simple {
    loop {
        let d = degrees(&g);
        let Some((&v, &dv)) = d.iter().find(|(_, &x)| x <= 2) else {
            return g;
        };
        let inc: Vec<(Vertex, Vertex)> = g.iter().copied().filter(|&(a, b)| a == v || b == v).collect();
        for e in &inc {
            g.remove(e);
        }
        if dv == 2 {
            let other = |(a, b): (Vertex, Vertex)| if a == v { b } else { a };
            let (u, w) = (other(inc[0]), other(inc[1]));
            g.insert((u.min(w), u.max(w)));
        }
    }
}

fn is_kuratowski_graph(g: &Simple) -> bool {
    let d = degrees(g);
    let n = d.len();
    if n == 5 && g.len() == 10 {
        return true;
    }
    if n == 6 && g.len() == 9 && d.values().all(|&x| x == 3) {
        let h = Graph::with_vertices(d.keys().copied(), g.iter().copied()).unwrap();
        return h.is_bipartite();
    }
    false
}

/// Brute-force search for a subdivided K5 or K3,3: reduce, then try every
/// single-edge deletion.
fn has_kuratowski_subdivision(g: Simple, memo: &mut BTreeMap<Simple, bool>) -> bool {
    let g = reduce(g);
    let n = degrees(&g).len();
    if n < 5 {
        return false;
    }
    if let Some(&r) = memo.get(&g) {
        return r;
    }
    let r = is_kuratowski_graph(&g)
        || g.iter().any(|e| {
            let mut h = g.clone();
            h.remove(e);
            has_kuratowski_subdivision(h, memo)
        });
    memo.insert(g, r);
    r
}

fn independent_planarity(g: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    let simple: Simple = g.edges().map(|e| e.ends()).collect();
    !has_kuratowski_subdivision(simple, &mut BTreeMap::new())
}

fn check_embedding(emb: &RotationEmbedding) {
    let g = emb.graph();
    assert_eq!(emb.euler_characteristic(), 2);
    let recs = emb.face_records();
    let w = recs.iter().fold(Rational::zero(), |a, r| a + r.weight);
    assert_eq!(w, Rational::from_integer(g.vertex_count() as i128));
    assert_eq!(recs.iter().map(|r| r.length).sum::<usize>(), 2 * g.edge_count());
}

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planarity_agrees_with_kuratowski_search(n in 5usize..=8, mask in any::<u64>(), thin in any::<u64>()) {
        let g = random_graph(n, mask & (thin | thin >> 7));
        let expected = independent_planarity(&g);
        prop_assert_eq!(is_planar(&g), expected);
        match kuratowski_subgraph(&g) {
            None => prop_assert!(expected),
            Some(w) => {
                let reduced = reduce(w.edges.iter().map(|e| e.ends()).collect());
                prop_assert!(is_kuratowski_graph(&reduced));
                let d = degrees(&reduced);
                prop_assert_eq!(d.len(), if w.kind == KuratowskiKind::K5 { 5 } else { 6 });
            }
        }
    }

    #[test]
    fn embeddings_satisfy_face_identities(n in 4usize..30, seed in any::<u64>()) {
        let g = generate::random_planar_min_degree3(n, &mut seeded(seed));
        let emb = RotationEmbedding::embed(&g).unwrap();
        check_embedding(&emb);
        let (t, fill) = triangulate(&emb);
        check_embedding(&t);
        prop_assert_eq!(t.graph().edge_count(), 3 * n - 6);
        prop_assert_eq!(t.graph().edge_count(), g.edge_count() + fill.len());
    }

    #[test]
    fn light_faces_are_short(n in 4usize..40, seed in any::<u64>()) {
        let g = generate::random_planar_min_degree3(n, &mut seeded(seed));
        let emb = RotationEmbedding::embed(&g).unwrap();
        let positive: Vec<_> = emb.face_records().into_iter().filter(|r| r.charge() > Rational::zero()).collect();
        prop_assert!(!positive.is_empty());
        prop_assert!(positive.iter().all(|r| r.length <= 5));
        let w = light_cycle_planar(&g).unwrap();
        prop_assert!(w.mu <= 10);
        prop_assert_eq!(mu(&g, &w.cycle).unwrap(), (w.mu, w.apex));
        prop_assert!(brute_force_min_mu(&g, 6).unwrap().mu <= w.mu);
    }

    #[test]
    fn general_light_cycle(n in 8usize..25, t in 0usize..=5, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let base = generate::random_planar_min_degree3(n, &mut rng);
        let (g, e0) = generate::add_random_non_edges(&base, t, &mut rng);
        let w = light_cycle_general(&g, &e0).unwrap();
        prop_assert!(is_cycle(&g, &w.cycle));
        prop_assert!(w.mu <= e0.len() + 10);
        prop_assert_eq!(mu(&g, &w.cycle).unwrap().0, w.mu);
        prop_assert!(brute_force_min_mu(&g, w.len()).unwrap().mu <= w.mu);
    }

    #[test]
    fn edge_deletion_and_contraction_counts(n in 3usize..9, mask in any::<u64>(), pick in any::<u64>()) {
        let g = random_graph(n, mask);
        for e in g.edges() {
            let h = g.delete_edge(e).unwrap();
            prop_assert_eq!(h.edge_count(), g.edge_count() - 1);
            prop_assert_eq!(h.vertex_count(), g.vertex_count());
        }
        let set: EdgeSet = g.edges().enumerate().filter(|(i, _)| pick >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
        let c = g.contract_edges(&set).unwrap();
        let classes: BTreeSet<Vertex> = c.mapping.values().copied().collect();
        prop_assert_eq!(c.graph.vertex_count(), classes.len());
        prop_assert_eq!(c.graph.edge_count() + c.dropped_loops + c.merged_parallel, g.edge_count());
        for e in g.edges() {
            let (a, b) = (c.mapping[&e.lo()], c.mapping[&e.hi()]);
            prop_assert!(a == b || c.graph.has_edge(a, b));
        }
    }

    #[test]
    fn skewness_certificates(n in 5usize..9, mask in any::<u64>()) {
        let g = random_graph(n, mask);
        let exact = skewness_exact(&g, skewness_lower_bound(&g) + 6).unwrap();
        prop_assert!(exact.verify(&g));
        prop_assert!(exact.value >= skewness_lower_bound(&g));
        let h = planar_subgraph_heuristic(&g);
        prop_assert!(h.verify(&g));
        prop_assert!(h.value >= exact.value);
        if g.edge_count() <= 14 {
            if let Ok(cr) = crossing_number(&g, &OracleBudget::with_max_k(3)) {
                prop_assert!(exact.value <= cr);
            }
        }
    }

    #[test]
    fn single_insertion_bound(n in 5usize..=30, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let base = generate::random_maximal_planar(n, &mut rng);
        let (_, extra) = generate::add_random_non_edges(&base, 1, &mut rng);
        let e = *extra.first().unwrap();
        let emb = RotationEmbedding::embed(&base).unwrap();
        let route = insert_edge(&emb, e, true).unwrap();
        prop_assert!(route.is_valid_for(&emb));
        prop_assert!(3 * route.crossing_count() + 7 <= 2 * n);
        let plain = insert_edge(&emb, e, false).unwrap();
        prop_assert_eq!(plain.crossing_count(), route.crossing_count());
        let p = planarize_route(&emb, &route).unwrap();
        check_embedding(&p.embedding);
        prop_assert_eq!(p.dummies.len(), route.crossing_count());
    }

    #[test]
    fn drawings_are_valid(n in 8usize..16, t in 1usize..=4, seed in any::<u64>()) {
        let (g, e0) = generate::planar_plus(n, t, &mut seeded(seed));
        let cert = crossbound_core::skewness::SkewnessCertificate { value: e0.len(), removed: e0, exact: false };
        let d = build_drawing(&g, &cert).unwrap();
        let p = d.planarization.as_ref().unwrap();
        check_embedding(p);
        prop_assert!(is_planar(&d.planarized_graph()));
        prop_assert_eq!(p.graph().vertex_count(), n + d.crossing_count);
        prop_assert_eq!(&d.strip_routes().unwrap(), d.base.as_ref().unwrap().rotation());
        prop_assert_eq!(d.bound_thm32, bound_thm32(n, t));
        for c in &d.crossings {
            prop_assert!(g.contains_edge(c.with) && c.edge.independent_of(c.with));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_witnesses_and_monotonicity(n in 5usize..8, mask in any::<u64>()) {
        let g = random_graph(n, mask);
        prop_assume!(g.edge_count() <= 13);
        let budget = OracleBudget::with_max_k(3);
        let Ok(cr) = crossing_number(&g, &budget) else { return Ok(()) };
        for k in cr..=3 {
            let w = cr_at_most(&g, k, &budget).unwrap().unwrap();
            prop_assert!(w.is_good());
            prop_assert!(w.crossing_count() <= k);
            let h = planarize_config(&g, &w);
            prop_assert!(is_planar(&h));
            prop_assert_eq!(h.vertex_count(), g.vertex_count() + w.crossing_count());
        }
        if cr > 0 {
            prop_assert!(cr_at_most(&g, cr - 1, &budget).unwrap().is_none());
        }
        for e in g.edges() {
            let h = g.delete_edge(e).unwrap();
            prop_assert!(crossing_number(&h, &budget).unwrap() <= cr);
        }
    }
}

#[test]
fn thm41_formula_properties() {
    for k in 1..=50usize {
        for s in 0..40usize {
            let b3 = bound_thm41(k, 3, s, 0).unwrap();
            assert_eq!(b3, Rational::from_integer(2 * k as i128) + Rational::new(s as i128 - 5, 2));
            for delta in 4..8 {
                for sk in 0..10 {
                    assert!(bound_thm41(k, delta, s, sk + 1).unwrap() <= bound_thm41(k, delta, s, sk).unwrap());
                }
            }
        }
        for sk in 0..=k {
            let b = bound_thm41(k, 3, sk + 10, sk).unwrap();
            assert_eq!(b, Rational::from_integer(2 * k as i128) + Rational::new(5, 2) + Rational::new(sk as i128, 2));
            assert!(b <= Rational::new(5, 2) * Rational::from_integer(k as i128 + 1));
        }
    }
}

#[test]
fn independent_planarity_oracle_sanity() {
    assert!(!independent_planarity(&generate::complete(5)));
    assert!(!independent_planarity(&generate::complete_bipartite(3, 3)));
    assert!(!independent_planarity(&generate::petersen()));
    assert!(independent_planarity(&generate::cube()));
    assert!(independent_planarity(&generate::complete(4)));
    let k5e = generate::complete(5).delete_edge(Edge::new(0, 1)).unwrap();
    assert!(independent_planarity(&k5e));
}
