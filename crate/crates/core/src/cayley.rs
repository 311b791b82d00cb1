//! Cayley graphs of the extraspecial groups, their central quotients,
//! and the cycle bookkeeping used by the symmetry certificates.
//!
//! Vertex ids are element ids, so the quotient by the center is a
//! shift-and-mask: dropping the top bit of an id is the projection onto
//! the coset word, and fiber `c` of the projection is `{c, c + 2^2r}`.

use crate::error::{Error, Result};
use crate::extraspecial::{ExtraspecialGroup, GroupElement};
use crate::graph::{Graph, Labels};

/// `Cay(G, S)`: vertices are all of `G`, edges `{g, s·g}` for `s` in `S`.
/// `S` must avoid the identity, be closed under inverses, and generate;
/// the graph is then `|S|`-regular and connected.
pub fn build_cayley(group: &ExtraspecialGroup, s: &[GroupElement]) -> Result<Graph> {
    if group.r() > 5 {
        return Err(Error::GuardExceeded {
            what: "cayley graph construction r",
            limit: 5,
            got: group.r(),
        });
    }
    if s.is_empty() {
        return Err(Error::ConnectionSet {
            reason: "empty".into(),
        });
    }
    for (k, el) in s.iter().enumerate() {
        if el.is_identity() {
            return Err(Error::ConnectionSet {
                reason: "contains the identity".into(),
            });
        }
        if s[..k].contains(el) {
            return Err(Error::ConnectionSet {
                reason: format!("element {el} repeats"),
            });
        }
        let inv = group.inverse(el)?;
        if !s.contains(&inv) {
            return Err(Error::ConnectionSet {
                reason: format!("not inverse-closed: {el} is in, {inv} is not"),
            });
        }
    }

    let n = group.order() as usize;
    let mut graph = Graph::new(n);
    for id in 0..group.order() {
        let g = group.element_from_id(id)?;
        for el in s {
            let sg = group.multiply(el, &g)?;
            let other = group.element_id(&sg) as usize;
            if (id as usize) < other {
                graph.add_edge(id as usize, other)?;
            }
        }
    }

    let component = graph.component_of(0);
    if component.count() < n {
        return Err(Error::ConnectionSet {
            reason: format!(
                "does not generate: component of the identity has {} of {} vertices",
                component.count(),
                n
            ),
        });
    }
    graph.set_labels(Some(Labels::Group(group.clone())));
    Ok(graph)
}

/// Fibers of the central projection, indexed by coset word: fiber `c`
/// is `{c, z·c}` as vertex ids.
pub fn center_fibers(group: &ExtraspecialGroup) -> Vec<Vec<usize>> {
    let half = (group.order() / 2) as usize;
    (0..half).map(|c| vec![c, c + half]).collect()
}

/// Collapses each center fiber to a point. The result is labeled by the
/// coset words of `G/Z`, and for the standard connection set it is the
/// `2r`-dimensional hypercube on the nose.
pub fn quotient_by_center(group: &ExtraspecialGroup, graph: &Graph) -> Result<Graph> {
    match graph.labels() {
        Some(Labels::Group(g)) if g == group => {}
        Some(_) => {
            return Err(Error::GraphShape {
                property: "labeled by this group",
            })
        }
        None => return Err(Error::MissingLabels { expected: "group" }),
    }
    let n = group.order() as usize;
    if graph.n() != n {
        return Err(Error::GraphShape {
            property: "a Cayley graph of this group (vertex count mismatch)",
        });
    }
    let low = (group.order() / 2) as usize - 1;
    let mut quotient = Graph::new((group.order() / 2) as usize);
    for (u, v) in graph.edges() {
        let (pu, pv) = (u & low, v & low);
        if pu != pv {
            quotient.add_edge(pu, pv)?;
        }
    }
    quotient.set_labels(Some(Labels::Cosets { dim: 2 * group.r() }));
    Ok(quotient)
}

/// A cycle together with the generator steps that trace it: consecutive
/// vertices satisfy `c_{i+1} = s_i · c_i`, wrapping at the end, and the
/// steps multiply out to the identity.
#[derive(Clone, Debug)]
pub struct CycleSequence {
    cycle: Vec<usize>,
    seq: Vec<GroupElement>,
}

impl CycleSequence {
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn steps(&self) -> &[GroupElement] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// Recovers the step sequence of a cycle in a group-labeled graph:
/// `s_i = c_{i+1} · c_i^-1`. Validates that the input is a genuine cycle,
/// that the steps multiply to the identity, and that consecutive steps
/// (cyclically) differ.
pub fn extract_cycle_sequence(graph: &Graph, cycle: &[usize]) -> Result<CycleSequence> {
    let group = match graph.labels() {
        Some(Labels::Group(g)) => g,
        _ => return Err(Error::MissingLabels { expected: "group" }),
    };
    let t = cycle.len();
    if t < 3 {
        return Err(Error::NotACycle {
            reason: format!("length {t} is below 3"),
        });
    }
    for (k, &v) in cycle.iter().enumerate() {
        if v >= graph.n() {
            return Err(Error::NotACycle {
                reason: format!("vertex {v} out of range"),
            });
        }
        if cycle[..k].contains(&v) {
            return Err(Error::NotACycle {
                reason: format!("vertex {v} repeats"),
            });
        }
    }
    for i in 0..t {
        let (u, v) = (cycle[i], cycle[(i + 1) % t]);
        if !graph.has_edge(u, v) {
            return Err(Error::NotACycle {
                reason: format!("vertices {u} and {v} are not adjacent"),
            });
        }
    }

    let elements: Vec<GroupElement> = cycle
        .iter()
        .map(|&v| group.element_from_id(v as u64))
        .collect::<Result<_>>()?;
    let mut seq = Vec::with_capacity(t);
    for i in 0..t {
        let next = &elements[(i + 1) % t];
        let step = group.multiply(next, &group.inverse(&elements[i])?)?;
        seq.push(step);
    }

    let mut product = seq[0];
    for step in &seq[1..] {
        product = group.multiply(&product, step)?;
    }
    if !product.is_identity() {
        return Err(Error::NotACycle {
            reason: format!("step product is {product}, not the identity"),
        });
    }
    for i in 0..t {
        if seq[i] == seq[(i + 1) % t] {
            return Err(Error::NotACycle {
                reason: format!("steps {} and {} coincide", i + 1, (i + 1) % t + 1),
            });
        }
    }
    Ok(CycleSequence {
        cycle: cycle.to_vec(),
        seq,
    })
}

/// The 8-cycle traced from the identity by alternating two distinct
/// generators `g_i, g_j` (1-based indices): its fifth vertex is `z` and
/// its eighth is `g_j`. Needs the all-commuting involution generators.
pub fn eight_cycle(group: &ExtraspecialGroup, i: usize, j: usize) -> Result<Vec<usize>> {
    if !group.has_symmetric_generators() {
        return Err(Error::WrongGroupFlavor);
    }
    if i == j {
        return Err(Error::DistinctIndicesRequired);
    }
    for idx in [i, j] {
        if idx == 0 || idx > 2 * group.r() {
            return Err(Error::GeneratorIndex {
                index: idx,
                count: 2 * group.r(),
            });
        }
    }
    let gi = group.generator(i - 1)?;
    let gj = group.generator(j - 1)?;
    let mut vertices = vec![group.element_id(&group.identity()) as usize];
    let mut current = group.identity();
    for k in 0..7 {
        let step = if k % 2 == 0 { &gi } else { &gj };
        current = group.multiply(step, &current)?;
        vertices.push(group.element_id(&current) as usize);
    }
    debug_assert_eq!(vertices.len(), 8);
    Ok(vertices)
}

/// Closed-walk parity property: whenever the product of `seq` is central,
/// every element of `seq` must occur an even number of times. Returns
/// true when that holds (vacuously if the product is not central).
pub fn even_occurrence_check(group: &ExtraspecialGroup, seq: &[GroupElement]) -> Result<bool> {
    let mut product = group.identity();
    for el in seq {
        product = group.multiply(&product, el)?;
    }
    if !product.is_central() {
        return Ok(true);
    }
    let mut counts = std::collections::HashMap::new();
    for el in seq {
        *counts.entry(group.element_id(el)).or_insert(0usize) += 1;
    }
    Ok(counts.values().all(|&c| c % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{hypercube, is_cover};

    fn standard_gamma(r: usize) -> (ExtraspecialGroup, Graph) {
        let group = ExtraspecialGroup::from_symmetric_generators(r).unwrap();
        let graph = build_cayley(&group, &group.generators()).unwrap();
        (group, graph)
    }

    #[test]
    fn r1_cayley_is_an_eight_cycle() {
        let (_, graph) = standard_gamma(1);
        assert_eq!(graph.n(), 8);
        assert_eq!(graph.valency(), Some(2));
        assert!(graph.is_connected());
    }

    #[test]
    fn r2_cayley_shape() {
        let (_, graph) = standard_gamma(2);
        assert_eq!(graph.n(), 32);
        assert_eq!(graph.valency(), Some(4));
        assert!(graph.is_connected());
    }

    #[test]
    fn connection_set_rejections() {
        let group = ExtraspecialGroup::from_symmetric_generators(2).unwrap();
        let mut with_id = group.generators();
        with_id.push(group.identity());
        assert!(matches!(
            build_cayley(&group, &with_id),
            Err(Error::ConnectionSet { .. })
        ));

        let g1 = group.generator(0).unwrap();
        let g2 = group.generator(1).unwrap();
        let order4 = group.multiply(&g1, &g2).unwrap();
        let err = build_cayley(&group, &[order4]).unwrap_err();
        assert!(err.to_string().contains("inverse-closed"));

        let missing: Vec<_> = group.generators().into_iter().take(3).collect();
        let err = build_cayley(&group, &missing).unwrap_err();
        assert!(err.to_string().contains("16 of 32"), "{err}");

        let mut doubled = group.generators();
        doubled.push(group.generator(0).unwrap());
        assert!(build_cayley(&group, &doubled).is_err());
    }

    #[test]
    fn quotient_is_the_hypercube_by_identity_relabeling() {
        for r in 1..=3 {
            let (group, graph) = standard_gamma(r);
            let quotient = quotient_by_center(&group, &graph).unwrap();
            let cube = hypercube(2 * r).unwrap();
            assert_eq!(quotient.n(), cube.n());
            assert_eq!(quotient.edges(), cube.edges());
        }
    }

    #[test]
    fn cayley_covers_its_central_quotient() {
        for r in 1..=3 {
            let (group, graph) = standard_gamma(r);
            let quotient = quotient_by_center(&group, &graph).unwrap();
            let report = is_cover(&graph, &quotient, &center_fibers(&group)).unwrap();
            assert!(report.is_cover(), "r = {r}: {:?}", report.failure);
            assert!(report.uniform_fibers);
            assert_eq!(report.fiber_size, Some(2));
        }
    }

    #[test]
    fn quotient_needs_matching_labels() {
        let (group, graph) = standard_gamma(1);
        let mut unlabeled = graph.clone();
        unlabeled.set_labels(None);
        assert!(matches!(
            quotient_by_center(&group, &unlabeled),
            Err(Error::MissingLabels { .. })
        ));
        let other = ExtraspecialGroup::from_symmetric_generators(2).unwrap();
        assert!(quotient_by_center(&other, &graph).is_err());
    }

    #[test]
    fn eight_cycle_landmarks() {
        let (group, graph) = standard_gamma(2);
        let cycle = eight_cycle(&group, 1, 2).unwrap();
        assert_eq!(cycle[0], group.element_id(&group.identity()) as usize);
        assert_eq!(cycle[4], group.element_id(&group.z()) as usize);
        assert_eq!(
            cycle[7],
            group.element_id(&group.generator(1).unwrap()) as usize
        );
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        for k in 0..8 {
            assert!(graph.has_edge(cycle[k], cycle[(k + 1) % 8]));
        }
    }

    #[test]
    fn eight_cycle_rejects_bad_indices_and_flavor() {
        let group = ExtraspecialGroup::from_symmetric_generators(2).unwrap();
        assert!(matches!(
            eight_cycle(&group, 2, 2),
            Err(Error::DistinctIndicesRequired)
        ));
        assert!(matches!(
            eight_cycle(&group, 0, 1),
            Err(Error::GeneratorIndex { .. })
        ));
        assert!(eight_cycle(&group, 1, 5).is_err());
        let std =
            ExtraspecialGroup::from_standard_presentation(2, crate::FormType::Elliptic).unwrap();
        assert!(matches!(
            eight_cycle(&std, 1, 2),
            Err(Error::WrongGroupFlavor)
        ));
    }

    #[test]
    fn cycle_sequence_of_the_eight_cycle_alternates() {
        let (group, graph) = standard_gamma(2);
        let cycle = eight_cycle(&group, 1, 2).unwrap();
        let cs = extract_cycle_sequence(&graph, &cycle).unwrap();
        let g1 = group.generator(0).unwrap();
        let g2 = group.generator(1).unwrap();
        let expected: Vec<_> = (0..8).map(|k| if k % 2 == 0 { g1 } else { g2 }).collect();
        assert_eq!(cs.steps(), &expected[..]);
        assert_eq!(cs.len(), 8);
    }

    #[test]
    fn cycle_sequence_rejects_non_cycles() {
        let (_, graph) = standard_gamma(1);
        assert!(extract_cycle_sequence(&graph, &[0, 1]).is_err());
        assert!(extract_cycle_sequence(&graph, &[0, 1, 0]).is_err());
        // A path whose endpoints are not adjacent.
        let err = extract_cycle_sequence(&graph, &[0, 1, 3]).unwrap_err();
        assert!(matches!(err, Error::NotACycle { .. }));
    }

    #[test]
    fn even_occurrence_cases() {
        let group = ExtraspecialGroup::from_symmetric_generators(2).unwrap();
        let g1 = group.generator(0).unwrap();
        let g2 = group.generator(1).unwrap();
        let g3 = group.generator(2).unwrap();
        assert!(even_occurrence_check(&group, &[g1, g2, g1, g2]).unwrap());
        assert!(even_occurrence_check(&group, &[g1, g2, g3]).unwrap());
        assert!(even_occurrence_check(&group, &[g1, g1]).unwrap());
        // Central product with odd multiplicities is the failing shape.
        let a = group.multiply(&g1, &g2).unwrap();
        let za = group.multiply(&group.z(), &a).unwrap();
        assert!(even_occurrence_check(&group, &[a, a]).unwrap());
        assert!(!even_occurrence_check(&group, &[a, za]).unwrap());
    }
}
