//! Local symmetry invariants of the covers: what the vertex stabilizer
//! does to the central vertex, how neighborhood kernels propagate, and
//! what the generator-permutation lifts achieve on a neighborhood.

use cubecover::{
    automorphism_group, build_cayley, pointwise_neighborhood_stabilizer,
    sigma_tilde_generator_perms, ExtraspecialGroup, PermGroup, Permutation,
};
use num_bigint::BigUint;

fn cover(r: usize) -> (ExtraspecialGroup, cubecover::Graph) {
    let group = ExtraspecialGroup::from_symmetric_generators(r).unwrap();
    let graph = build_cayley(&group, &group.generators()).unwrap();
    (group, graph)
}

#[test]
fn stabilizer_fixes_center_at_ranks_1_and_3() {
    for r in [1usize, 3] {
        let (group, graph) = cover(r);
        let z_vertex = group.element_id(&group.z()) as usize;
        let aut = automorphism_group(&graph).unwrap();
        let stab = aut.stabilizer(0).unwrap();
        for p in stab.elements().unwrap() {
            assert_eq!(p.apply(z_vertex), z_vertex, "r={r}: {p}");
        }
    }
}

#[test]
fn rank_2_stabilizer_moves_the_center_vertex() {
    // The order-3 neighborhood kernel displaces the central vertex; its
    // image is the vertex of the same coset class at the top weight.
    let (group, graph) = cover(2);
    let z_vertex = group.element_id(&group.z()) as usize;
    let aut = automorphism_group(&graph).unwrap();
    let stab = aut.stabilizer(0).unwrap();
    let mover = stab
        .elements()
        .unwrap()
        .into_iter()
        .find(|p| p.apply(z_vertex) != z_vertex);
    assert!(mover.is_some());
}

#[test]
fn neighborhood_kernels_are_equal_only_when_trivial() {
    for r in 1..=3usize {
        let (_, graph) = cover(r);
        let aut = automorphism_group(&graph).unwrap();
        let at_zero = pointwise_neighborhood_stabilizer(&graph, &aut, 0).unwrap();
        let mut all_equal = true;
        for v in graph.neighbors(0).iter() {
            let at_v = pointwise_neighborhood_stabilizer(&graph, &aut, v).unwrap();
            let equal = at_zero.order() == at_v.order()
                && at_zero.elements().unwrap().iter().all(|p| at_v.contains(p));
            if !equal {
                all_equal = false;
            }
        }
        // If the kernel were shared along every edge, connectivity would
        // force it to fix everything; so equality holds exactly when the
        // kernel is trivial. Ranks 1 and 3: trivial and equal. Rank 2:
        // order 3 and necessarily unequal somewhere.
        assert_eq!(all_equal, at_zero.is_trivial(), "r={r}");
        assert_eq!(at_zero.is_trivial(), r != 2, "r={r}");
    }
}

#[test]
fn generator_lifts_act_two_transitively_on_the_neighborhood() {
    for r in 1..=3usize {
        let (group, graph) = cover(r);
        let perms = sigma_tilde_generator_perms(&group).unwrap();
        for p in &perms {
            assert_eq!(p.apply(0), 0);
        }
        let nbrs: Vec<usize> = graph.neighbors(0).iter().collect();
        let k = nbrs.len();
        // orbit of an ordered pair under the lift subgroup
        let mut seen = std::collections::HashSet::new();
        let start = (nbrs[0], nbrs[if k > 1 { 1 } else { 0 }]);
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some((a, b)) = frontier.pop() {
            for p in &perms {
                let next = (p.apply(a), p.apply(b));
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        if k >= 2 {
            assert_eq!(seen.len(), k * (k - 1), "r={r}");
        }
        // and the lift subgroup has full symmetric order on the indices
        let lifted = PermGroup::from_generators(graph.n(), perms).unwrap();
        let fact: BigUint = (1..=(2 * r) as u64).map(BigUint::from).product();
        assert_eq!(lifted.order(), fact, "r={r}");
    }
}

#[test]
fn center_flip_is_a_fixed_point_free_automorphism() {
    // Multiplying by z on the right is the deck transformation of the
    // double cover: an automorphism commuting with every translation,
    // swapping each fiber.
    for r in 1..=3usize {
        let (group, graph) = cover(r);
        let n = graph.n();
        let z = group.z();
        let images: Vec<usize> = (0..group.order())
            .map(|id| {
                let e = group.element_from_id(id).unwrap();
                group.element_id(&group.multiply(&e, &z).unwrap()) as usize
            })
            .collect();
        let flip = Permutation::from_images(images).unwrap();
        let aut = automorphism_group(&graph).unwrap();
        assert!(aut.contains(&flip), "r={r}");
        for v in 0..n {
            assert_ne!(flip.apply(v), v);
        }
    }
}
