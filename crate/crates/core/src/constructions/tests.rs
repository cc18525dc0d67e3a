use super::*;
use crate::graph::{canon::is_isomorphic, vertex_connectivity};
use crate::rainbow::verify_rainbow_k_connected;
use crate::solver::{rc_exact, SolverConfig};

fn spec(family: Family, n: usize) -> ConstructionSpec {
    ConstructionSpec::new(family, n)
}

#[test]
fn examples() {
    let gnr = construct(&spec(Family::Gnr, 12).with_r(6)).unwrap();
    assert_eq!((gnr.derived["m"], gnr.derived["b"]), (2, 1));
    assert_eq!(gnr.graph.edge_count(), 20);
    assert_eq!(gnr.colouring.as_ref().unwrap().colour_count(), 6);
    assert_eq!(gnr.predicted_rc_relation.to_string(), "rc2 <= 6");

    let g1 = construct(&spec(Family::G1, 5)).unwrap();
    assert_eq!(g1.graph.edge_count(), 6);
    assert_eq!(g1.colouring.as_ref().unwrap().colour_count(), 4);
    assert_eq!(g1.predicted_rc_relation, RcRelation::AtMost { k: 2, value: 4 });

    let harary = construct(&spec(Family::Harary, 6).with_k(2)).unwrap();
    assert_eq!(harary.graph.edge_count(), 6);
    assert!(is_isomorphic(&harary.graph, &Graph::cycle(6)));

    let s2a = construct(&spec(Family::S2a, 6).with_r(4)).unwrap();
    assert_eq!(s2a.graph.edge_count(), 9);
    assert!(s2a.colouring.is_none());
    assert_eq!(s2a.predicted_rc_relation.to_string(), "rc2 >= 4");

    let t2 = construct(&spec(Family::T2R2, 11)).unwrap();
    assert_eq!(t2.derived["a"], 4);
    assert_eq!(t2.graph.edge_count(), 34);

    assert_eq!(predicted_edge_count(&spec(Family::Gn3, 6).with_r(3)), Ok(10));
    assert_eq!(predicted_edge_count(&spec(Family::Gn5, 7)), Ok(10));
    assert_eq!(predicted_edge_count(&spec(Family::S2b, 6).with_r(5)), Ok(8));
}

#[test]
fn hypotheses_are_named() {
    let err = construct(&spec(Family::Gnr, 8).with_r(6)).unwrap_err();
    assert_eq!(err.to_string(), "GNR requires 6 ≤ r ≤ n−3");
    assert!(matches!(
        construct(&spec(Family::Gnr, 12)),
        Err(ConstructionError::MissingParameter { param: "r", .. })
    ));
    assert!(construct(&spec(Family::Gn5, 6)).is_err());
    assert!(construct(&spec(Family::Gn3, 4).with_r(4)).is_err());
    assert!(construct(&spec(Family::G2, 5)).is_err());
    assert!(construct(&spec(Family::S2b, 10).with_r(6)).is_err());
    assert!(construct(&spec(Family::T2R2, 6)).is_err());
    assert_eq!("t2-r2".parse::<Family>(), Ok(Family::T2R2));
    assert_eq!("kn_rc2".parse::<Family>(), Ok(Family::KnRc2));
    assert!("gn4".parse::<Family>().is_err());
}

#[test]
fn edge_counts_match_formulas() {
    for family in Family::ALL {
        for s in parameter_grid(family, 60) {
            let bundle = construct(&s).unwrap();
            assert_eq!(bundle.graph.edge_count(), bundle.predicted_edges, "{s:?}");
            assert_eq!(bundle.graph.vertex_count(), s.n);
        }
    }
}

#[test]
fn connectivity_of_every_family() {
    for family in Family::ALL {
        for s in parameter_grid(family, 30) {
            let bundle = construct(&s).unwrap();
            let needed = match family {
                Family::Harary => s.k.unwrap(),
                Family::T1Cycles | Family::T1Bipartite | Family::S1CliquePath => 1,
                _ => 2,
            };
            assert!(vertex_connectivity(&bundle.graph).unwrap() >= needed, "{s:?}");
            if family == Family::Harary {
                assert_eq!(vertex_connectivity(&bundle.graph).unwrap(), needed);
            }
        }
    }
}

#[test]
fn colourings_verify_on_small_parameters() {
    for family in Family::ALL.into_iter().filter(|f| f.is_coloured()) {
        for s in parameter_grid(family, 13) {
            let bundle = construct(&s).unwrap();
            let c = bundle.colouring.as_ref().unwrap();
            assert!(
                verify_rainbow_k_connected(&bundle.graph, c, 2).unwrap().is_connected(),
                "{s:?}"
            );
        }
    }
}

#[test]
fn t2r2_vector_assignment() {
    for n in 7..=70 {
        let a = t2r2_part_size(n).unwrap();
        let vectors = families::t2r2_vectors(a, n - a);
        assert_eq!(vectors.len(), n - a);
        let mut sorted = vectors.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), vectors.len(), "distinct");
        for v in &vectors {
            let twos = v.iter().filter(|&&c| c == 2).count();
            assert!(twos > 0 && twos % 2 == 0);
        }
        for j in 1..a {
            assert!(vectors
                .iter()
                .any(|v| v[0] == 2 && v[j] == 2 && v.iter().filter(|&&c| c == 2).count() == 2));
        }
    }
}

#[test]
fn gnr_decomposes_into_gadgets() {
    for s in parameter_grid(Family::Gnr, 24) {
        let bundle = construct(&s).unwrap();
        let (r, m, b) = (s.r.unwrap(), bundle.derived["m"], bundle.derived["b"]);
        assert_eq!(s.n, 4 * m + r - 3 + b);
        assert!(b <= 3 && m >= 1);
        // deleting x and y leaves m 4-cycles, the ear interior and b isolated vertices
        let rest: Vec<(usize, usize)> = bundle.graph.edges().iter().copied().filter(|&(u, _)| u > 1).collect();
        let mut comp_sizes = components(s.n, &rest);
        comp_sizes.sort();
        let mut expected = vec![4; m];
        expected.push(r - 5);
        expected.extend(std::iter::repeat_n(1, b));
        expected.sort();
        assert_eq!(comp_sizes, expected, "{s:?}");
        // every F6 copy is coloured identically
        let c = bundle.colouring.unwrap();
        let copy = |i: usize| -> Vec<Colour> {
            let base = 2 + 4 * i;
            bundle
                .graph
                .edges()
                .iter()
                .zip(c.colours())
                .filter(|&(&(u, v), _)| (base..base + 4).contains(&v) && (u < 2 || (base..base + 4).contains(&u)))
                .map(|(_, &col)| col)
                .collect()
        };
        assert!((1..m).all(|i| copy(i) == copy(0)));
    }
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut sizes = std::collections::BTreeMap::new();
    for v in 2..n {
        *sizes.entry(find(&mut parent, v)).or_insert(0) += 1;
    }
    sizes.into_values().collect()
}

#[test]
fn uncoloured_relations_hold_at_small_n() {
    let cfg = SolverConfig::default();
    for family in [
        Family::S2a,
        Family::S2b,
        Family::T1Cycles,
        Family::T1Bipartite,
        Family::S1CliquePath,
    ] {
        for s in parameter_grid(family, 7) {
            let bundle = construct(&s).unwrap();
            let k = bundle.predicted_rc_relation.k().unwrap();
            let rc = rc_exact(&bundle.graph, k, &cfg).unwrap().rc_value;
            assert!(bundle.predicted_rc_relation.holds(rc), "{s:?}: rc{k} = {rc}");
        }
    }
}

#[test]
fn kn_colouring_classes() {
    let k4 = construct(&spec(Family::KnRc2, 4)).unwrap();
    let c = k4.colouring.unwrap();
    let red: Vec<_> = k4
        .graph
        .edges()
        .iter()
        .zip(c.colours())
        .filter(|(_, &x)| x == 1)
        .map(|(&e, _)| e)
        .collect();
    assert_eq!(red, vec![(0, 1), (1, 2), (2, 3)]);
    let k6 = construct(&spec(Family::KnRc2, 6)).unwrap();
    let c = k6.colouring.unwrap();
    assert_eq!(c.colours().iter().filter(|&&x| x == 1).count(), 6);
}
