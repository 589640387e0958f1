use crossbound::drawing::DrawingJson;
use crossbound::format::{parse_graph, serialize_graph, Format};
use crossbound_core::router::build_drawing;
use crossbound_core::skewness::SkewnessCertificate;
use crossbound_core::{generate, Graph, Vertex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// graph6 bytes computed by hand from the bit layout: the upper triangle
/// column by column, six bits per byte, offset by 63.
fn graph6_by_hand(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i as Vertex, j as Vertex));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        out.push(chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8) + 63);
    }
    out
}

#[test]
fn known_graph6_strings() {
    let k5 = generate::complete(5);
    assert_eq!(graph6_by_hand(&k5), b"D~{");
    assert_eq!(serialize_graph(&k5, Format::Graph6), "D~{");
    for (g, s) in [
        (generate::petersen(), None),
        (generate::cube(), None),
        (generate::complete_bipartite(3, 3), None),
        (generate::cycle(3), Some("Bw")),
    ] {
        let text = serialize_graph(&g, Format::Graph6);
        assert_eq!(text.as_bytes(), graph6_by_hand(&g));
        if let Some(s) = s {
            assert_eq!(text, s);
        }
    }
}

proptest! {
    #[test]
    fn round_trips(n in 1usize..40, density in 0.0f64..1.0, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for a in 0..n as Vertex {
            for b in a + 1..n as Vertex {
                if rng.gen_bool(density) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        for format in [Format::Graph6, Format::EdgeList] {
            let text = serialize_graph(&g, format);
            prop_assert_eq!(&parse_graph(text.as_bytes(), format).unwrap(), &g);
        }
        if n <= 62 {
            prop_assert_eq!(serialize_graph(&g, Format::Graph6).into_bytes(), graph6_by_hand(&g));
        }
    }

    #[test]
    fn drawing_json_round_trip(n in 8usize..20, t in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, e0) = generate::planar_plus(n, t, &mut rng);
        let cert = SkewnessCertificate { value: e0.len(), removed: e0, exact: false };
        let d = build_drawing(&g, &cert).unwrap();
        let text = DrawingJson::from_drawing(&d).to_json();
        let back = DrawingJson::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.crossing_count, back.inserted.iter().map(|i| i.crossings.len()).sum::<usize>());
        prop_assert_eq!(back.base_edges.len() + back.inserted.len(), g.edge_count());
    }

    #[test]
    fn garbage_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let _ = parse_graph(&bytes, Format::Graph6);
        let _ = parse_graph(&bytes, Format::EdgeList);
    }
}
