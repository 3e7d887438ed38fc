//! Library answers against independent oracles written here.

use clawfree_core::edge_graph::{bipartition, edge_graph, graph_two_coloring, parity_coloring};
use clawfree_core::harness::enumerate_labeled;
use clawfree_core::recon::{check_prop_down, hypomorphic_utc, iso_utc};
use clawfree_core::schema::DecomposeDoc;
use clawfree_core::theorem::{all_decompositions, classify, decompose, lemma_ggu_check};
use clawfree_core::{emit_graph6, find_claw, h3, named, parse_graph6, Graph, Name};

/// Claw oracle: every 4-set, every choice of centre.
fn has_claw(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    for &x in &q {
                        let rest: Vec<usize> = q.iter().copied().filter(|&y| y != x).collect();
                        let star = rest.iter().all(|&y| g.has_edge(x, y));
                        let indep = !g.has_edge(rest[0], rest[1])
                            && !g.has_edge(rest[0], rest[2])
                            && !g.has_edge(rest[1], rest[2]);
                        if star && indep {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

#[test]
fn graph6_matches_reference_strings() {
    // produced by networkx.to_graph6_bytes on the same labelled graphs
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (6, 9),
            (6, 8),
            (5, 8),
        ],
    )
    .unwrap();
    let path7 = Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
    let cases = [
        (named(Name::P9).unwrap(), "H{S{aSf"),
        (named(Name::Cycle(5)).unwrap(), "Dhc"),
        (Graph::complete(2).unwrap(), "A_"),
        (Graph::empty(1).unwrap(), "@"),
        (petersen, "IheA@GUAo"),
        (path7, "FhCGG"),
    ];
    for (g, s) in cases {
        assert_eq!(emit_graph6(&g), s);
        assert_eq!(parse_graph6(s).unwrap(), g);
    }
    let k62 = emit_graph6(&Graph::complete(62).unwrap());
    assert_eq!(k62.len(), 317);
    assert!(k62.starts_with("}~~~~"));
}

#[test]
fn claw_search_matches_four_set_oracle() {
    for g in enumerate_labeled(6).unwrap() {
        let found = find_claw(&g);
        assert_eq!(found.is_some(), has_claw(&g), "{g:?}");
        if let Some(w) = found {
            assert!(w.is_valid_in(&g));
        }
    }
}

#[test]
fn h3_matches_triple_scan() {
    for g in enumerate_labeled(5).unwrap() {
        let mut expect = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    let e = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                    if e.iter().all(|&x| x) || e.iter().all(|&x| !x) {
                        expect.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(h3(&g).hyperedges, expect);
        assert_eq!(h3(&g), h3(&g.complement()));
    }
}

#[test]
fn c4_bipartition_by_hand() {
    let c4 = named(Name::Cycle(4)).unwrap();
    let s = edge_graph(&c4);
    let c = bipartition(&s).unwrap();
    let colour_of = |u, v| c.color[s.index_of(u, v).unwrap()];
    assert_eq!((colour_of(0, 1), colour_of(2, 3)), (0, 0));
    assert_eq!((colour_of(1, 2), colour_of(0, 3)), (1, 1));
    let c5 = named(Name::Cycle(5)).unwrap();
    assert_eq!(bipartition(&edge_graph(&c5)).unwrap_err().len(), 5);
    assert!(bipartition(&edge_graph(&Graph::empty(4).unwrap()))
        .unwrap()
        .color
        .is_empty());
}

#[test]
fn parity_colouring_examples() {
    let u = Graph::from_edges(4, &[(0, 1)]).unwrap();
    let c = clawfree_core::edge_graph::TwoColoring {
        color: vec![0, 1, 0, 0],
        components: Vec::new(),
    };
    let p = parity_coloring(&u, &c).unwrap();
    let sc = edge_graph(&u.complement());
    let colour_of = |a, b| p.color[sc.index_of(a, b).unwrap()];
    assert_eq!(colour_of(2, 3), 0);
    assert_eq!(colour_of(0, 2), 0);
    assert_eq!(colour_of(1, 2), 1);
    assert!(p.is_proper(sc.adjacency()));

    let c6 = named(Name::Cycle(6)).unwrap();
    let col = graph_two_coloring(&c6).unwrap();
    let p = parity_coloring(&c6, &col).unwrap();
    assert!(p.is_proper(edge_graph(&c6.complement()).adjacency()));

    let bad = clawfree_core::edge_graph::TwoColoring {
        color: vec![0, 0, 0, 0],
        components: Vec::new(),
    };
    assert!(parity_coloring(&u, &bad).is_err());
}

#[test]
fn decompositions_satisfy_the_lemma() {
    // pairs built from decompositions are exactly the pairs the lemma is
    // about, and uniform random pairs almost never are
    let mut seen = 0;
    for g in enumerate_labeled(6).unwrap().step_by(7) {
        let Ok(all) = all_decompositions(&g, false) else {
            continue;
        };
        for d in all {
            let r = lemma_ggu_check(&d.g, &d.g2).unwrap();
            assert!(r.a && r.b && r.c, "{g:?}");
            seen += 1;
        }
    }
    assert!(seen > 1000, "{seen}");
}

#[test]
fn decompose_documents_roundtrip() {
    for g in enumerate_labeled(5).unwrap() {
        let doc = DecomposeDoc::new(&decompose(&g));
        let text = serde_json::to_string(&doc).unwrap();
        let back: DecomposeDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        back.validate(&g).unwrap();
        let cert = classify(&g);
        let text = serde_json::to_string(&cert).unwrap();
        let back: clawfree_core::ForbCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        back.validate(&g).unwrap();
    }
}

#[test]
fn hypomorphy_invariants() {
    let graphs: Vec<Graph> = enumerate_labeled(4).unwrap().collect();
    for g in &graphs {
        for k in 1..=4 {
            assert!(hypomorphic_utc(g, &g.complement(), k).unwrap().result);
        }
        for h in graphs.iter().step_by(5) {
            let full = hypomorphic_utc(g, h, 4).unwrap().result;
            assert_eq!(full, iso_utc(g, h).unwrap());
            for k in 1..=4 {
                let gh = hypomorphic_utc(g, h, k).unwrap();
                assert_eq!(gh.result, hypomorphic_utc(h, g, k).unwrap().result);
                assert_eq!(
                    gh.result,
                    hypomorphic_utc(&g.complement(), &h.complement(), k)
                        .unwrap()
                        .result
                );
                if let Some(sub) = gh.failing_subset {
                    let bits = sub.iter().fold(0u64, |b, &v| b | 1 << v);
                    assert!(!iso_utc(&g.induced_bits(bits), &h.induced_bits(bits)).unwrap());
                }
            }
        }
    }
    // relabelling is invisible at k = n
    let p = named(Name::Path(5)).unwrap();
    let q = p.relabel(&[3, 0, 4, 1, 2]);
    assert!(hypomorphic_utc(&p, &q, 5).unwrap().result);
}

#[test]
fn iso_utc_examples() {
    let b5 = named(Name::B5).unwrap();
    assert!(iso_utc(&b5, &b5.complement()).unwrap());
    assert!(iso_utc(&Graph::complete(3).unwrap(), &Graph::empty(3).unwrap()).unwrap());
    assert!(!iso_utc(
        &named(Name::Cycle(5)).unwrap(),
        &named(Name::Path(5)).unwrap()
    )
    .unwrap());
    assert!(iso_utc(&b5, &Graph::empty(4).unwrap()).is_err());
}

#[test]
fn prop_down_trivial_pairs() {
    for g in enumerate_labeled(5).unwrap().step_by(3) {
        assert!(check_prop_down(&g, &g, 3, 2).unwrap());
        assert!(check_prop_down(&g, &g.complement(), 3, 2).unwrap());
    }
    let g = Graph::empty(5).unwrap();
    assert!(check_prop_down(&g, &g, 3, 3).is_err());
}
