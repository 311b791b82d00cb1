//! The automorphism engine against exhaustive enumeration on every small
//! graph family the library ships.

mod common;

use common::{brute_automorphism_count, brute_automorphisms};
use cubecover::{
    automorphism_group, complete_bipartite, complete_graph, cycle_graph, hypercube, path_graph,
    petersen, Graph, PermGroup, Permutation,
};
use num_bigint::BigUint;

fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = Vec::new();
    for n in 3..=10 {
        graphs.push((format!("C{n}"), cycle_graph(n).unwrap()));
    }
    for n in 3..=6 {
        graphs.push((format!("P{n}"), path_graph(n).unwrap()));
    }
    for n in 3..=6 {
        graphs.push((format!("K{n}"), complete_graph(n)));
    }
    graphs.push(("Q3".into(), hypercube(3).unwrap()));
    graphs.push(("Petersen".into(), petersen()));
    graphs.push(("K33".into(), complete_bipartite(3, 3)));
    graphs.push(("K15".into(), complete_bipartite(1, 5)));
    graphs
}

#[test]
fn engine_matches_brute_force_on_corpus() {
    let graphs = corpus();
    assert_eq!(graphs.len(), 20);
    for (name, graph) in &graphs {
        let engine = automorphism_group(graph).unwrap();
        let brute = brute_automorphism_count(graph);
        assert_eq!(
            engine.order(),
            BigUint::from(brute),
            "order mismatch on {name}"
        );
    }
}

#[test]
fn engine_membership_matches_brute_enumeration() {
    // Same groups, element-level: every brute automorphism sifts to
    // identity in the engine's chain, and the orders already agree.
    for (name, graph) in corpus() {
        if graph.n() > 8 {
            continue;
        }
        let engine = automorphism_group(&graph).unwrap();
        for images in brute_automorphisms(&graph) {
            let p = Permutation::from_images(images).unwrap();
            assert!(engine.contains(&p), "missing element on {name}: {p}");
        }
    }
}

#[test]
fn orbit_stabilizer_identity_on_corpus() {
    for (name, graph) in corpus() {
        let engine = automorphism_group(&graph).unwrap();
        for v in 0..graph.n() {
            let orbit = engine.orbit(v).len();
            let stab = engine.stabilizer(v).unwrap().order();
            assert_eq!(
                BigUint::from(orbit) * stab,
                engine.order(),
                "orbit-stabilizer failure on {name} at {v}"
            );
        }
    }
}

#[test]
fn random_cayley_like_quotients_agree() {
    // A couple of structured graphs outside the named corpus.
    let mut wheel = Graph::new(7);
    for i in 0..6 {
        wheel.add_edge(i, (i + 1) % 6).unwrap();
        wheel.add_edge(i, 6).unwrap();
    }
    let engine = automorphism_group(&wheel).unwrap();
    assert_eq!(
        engine.order(),
        BigUint::from(brute_automorphism_count(&wheel))
    );

    let mut two_comp = Graph::new(7);
    two_comp.add_edge(0, 1).unwrap();
    two_comp.add_edge(1, 2).unwrap();
    two_comp.add_edge(3, 4).unwrap();
    two_comp.add_edge(4, 5).unwrap();
    // vertex 6 isolated
    let engine = automorphism_group(&two_comp).unwrap();
    assert_eq!(
        engine.order(),
        BigUint::from(brute_automorphism_count(&two_comp))
    );
}

#[test]
fn stabilizer_counts_match_pinned_search() {
    for (name, graph) in corpus() {
        let engine = automorphism_group(&graph).unwrap();
        let stab = engine.stabilizer(0).unwrap();
        let brute = brute_stabilizer(&graph);
        assert_eq!(
            stab.order(),
            BigUint::from(brute),
            "stabilizer mismatch on {name}"
        );
    }
}

fn brute_stabilizer(graph: &Graph) -> usize {
    common::brute_stabilizer_count(graph, 0)
}

#[test]
fn permgroup_elements_are_closed_under_product() {
    let graph = cycle_graph(6).unwrap();
    let group: PermGroup = automorphism_group(&graph).unwrap();
    let elems = group.elements().unwrap();
    assert_eq!(elems.len(), 12);
    for a in &elems {
        for b in &elems {
            assert!(group.contains(&a.compose(b)));
        }
    }
}
