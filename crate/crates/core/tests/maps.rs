use regmap::graph::{complete, hamming, is_isomorphic, verify_isomorphism};
use regmap::map::{self, validate_admissible, AdmissibleTriple, MapError, MapType};
use regmap::perm::{closure, evaluate_word, Perm};
use regmap::wreath::{beta, CanonicalTripleParams};
use regmap::RegularMap;

const CAP: usize = 1_000_000;

fn cycles(n: usize, c: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, c).unwrap()
}

fn hamming_triple(n: usize, sigma: Vec<Perm>) -> AdmissibleTriple {
    let d = sigma.len();
    CanonicalTripleParams::new(d, n, sigma, beta(d)).unwrap().triple()
}

fn h23(sigma1: Perm) -> AdmissibleTriple {
    hamming_triple(3, vec![cycles(3, &[&[0, 1]]), sigma1])
}

fn h26_icosahedral() -> AdmissibleTriple {
    hamming_triple(6, vec![cycles(6, &[&[0, 1], &[2, 5]]), cycles(6, &[&[1, 2], &[4, 5]])])
}

fn h26_dodecahedral() -> AdmissibleTriple {
    hamming_triple(6, vec![cycles(6, &[&[0, 1], &[3, 4]]), cycles(6, &[&[1, 4], &[2, 5]])])
}

fn k6_icosahedral() -> AdmissibleTriple {
    hamming_triple(6, vec![cycles(6, &[&[0, 1], &[2, 5]])])
}

#[test]
fn octagon_quotient_is_projective_c4() {
    let map = RegularMap::new(map::h22_octagon(), CAP).unwrap();
    assert_eq!(map.group_order(), 16);
    let inv = map.invariants().unwrap();
    assert_eq!(inv.map_type, MapType { p: 8, q: 2, r: 8 });
    assert_eq!(
        (inv.vertices, inv.edges, inv.faces, inv.euler, inv.genus),
        (4, 4, 1, 1, 1)
    );
    assert!(!inv.orientable);
    let g = map.coset_graph().unwrap().graph;
    let c4 = hamming(2, 2).unwrap();
    let phi = is_isomorphic(&g, &c4).unwrap();
    assert!(verify_isomorphism(&g, &c4, &phi));
}

#[test]
fn degenerate_rho_fails_the_first_check() {
    let t = map::h22_octagon();
    let bad = AdmissibleTriple::new(t.lambda().clone(), Perm::identity(8), t.tau().clone());
    let report = match bad {
        Ok(t) => validate_admissible(&t, CAP),
        Err(_) => return,
    };
    assert!(!report.ok);
    assert_eq!(report.first_failure().unwrap().name, "involutions");
}

#[test]
fn h23_orientability_depends_on_sigma1() {
    let orientable = h23(cycles(3, &[&[1, 2]]));
    let nonorientable = h23(Perm::identity(3));
    assert!(map::is_orientable(&orientable, CAP).unwrap());
    assert!(!map::is_orientable(&nonorientable, CAP).unwrap());
    assert_eq!(map::nonorientability_witness(&orientable, 8), None);
    assert_eq!(map::nonorientability_witness(&nonorientable, 6), Some(vec![2, 2, 2]));
    let g = closure(&nonorientable.generators(), CAP).unwrap();
    assert_eq!(g.order(), 72);
    let rl = closure(&[nonorientable.rotation(), nonorientable.l()], CAP).unwrap();
    assert!(rl.contains(nonorientable.tau()));
    assert_eq!(
        g.subgroup_index(&[nonorientable.rotation(), nonorientable.l()])
            .unwrap(),
        1
    );
}

#[test]
fn relations_from_the_construction_hold() {
    let t = h23(Perm::identity(3));
    assert_eq!(&evaluate_word(&t.l(), &t.rotation(), &[2, 2, 2]).unwrap(), t.tau());

    let t = h26_icosahedral();
    assert_eq!(&evaluate_word(&t.l(), &t.rotation(), &[4, 6, 4]).unwrap(), t.tau());

    let k = k6_icosahedral();
    assert_eq!(k.rotation(), regmap::wreath::gamma(6));
    assert_eq!(k.l(), cycles(6, &[&[0, 1], &[2, 5]]));
    assert_eq!(&evaluate_word(&k.l(), &k.rotation(), &[1, 4, 2, 2]).unwrap(), k.tau());
    // The shortest relation is shorter than the quoted one.
    let w = map::nonorientability_witness(&k, 6).unwrap();
    assert!(w.len() <= 4);
    assert_eq!(&evaluate_word(&k.l(), &k.rotation(), &w).unwrap(), k.tau());
}

#[test]
fn icosahedral_clique_has_covalency_three() {
    let t = h26_icosahedral();
    let k = t.clique_submap(2).unwrap();
    let lr2 = t.l().then(&t.rotation().pow(2));
    assert!(lr2.pow(3).is_identity());
    assert!(k.l().then(&k.rotation()).pow(3).is_identity());
    let inv = map::invariants(&k, CAP).unwrap();
    assert_eq!(inv.map_type.p, 3);
    assert!(!inv.orientable);
}

#[test]
fn dodecahedral_clique_has_covalency_five() {
    let k = h26_dodecahedral().clique_submap(2).unwrap();
    let report = validate_admissible(&k, CAP);
    assert!(report.ok);
    // 2(n-1)n for n = 6.
    assert_eq!(report.group_order, Some(60));
    let inv = map::invariants(&k, CAP).unwrap();
    assert_eq!(inv.map_type, MapType { p: 5, q: 5, r: 3 });
    assert!(!inv.orientable);
}

#[test]
fn clique_submap_of_d1_is_identity() {
    let t = k6_icosahedral();
    assert_eq!(t.clique_submap(1).unwrap(), t);
}

#[test]
fn clique_submap_with_wrong_power_is_not_a_k6_map() {
    let t = h26_icosahedral();
    match t.clique_submap(3) {
        Err(MapError::NotCliqueTriple { power }) => assert_eq!(power, 3),
        Err(e) => panic!("unexpected error {e}"),
        Ok(k) => {
            let report = validate_admissible(&k, CAP);
            assert!(!report.ok || report.group_order != Some(60));
        }
    }
}

#[test]
fn petrie_dual_is_an_involution() {
    for t in [map::h22_octagon(), h23(Perm::identity(3)), h26_dodecahedral()] {
        let pd = t.petrie_dual();
        assert_eq!(pd.petrie_dual(), t);
        let (a, b) = (map::invariants(&t, CAP).unwrap(), map::invariants(&pd, CAP).unwrap());
        assert_eq!(
            (a.map_type.p, a.map_type.q, a.map_type.r),
            (b.map_type.r, b.map_type.q, b.map_type.p)
        );
        assert_eq!(
            (a.vertices, a.edges, a.group_order),
            (b.vertices, b.edges, b.group_order)
        );
    }
}

#[test]
fn coset_graph_of_h23_is_the_hamming_graph() {
    let t = h23(Perm::identity(3));
    let cg = map::coset_graph(&t, CAP).unwrap();
    let relabelled = cg.graph.relabel(&cg.point_labels(0)).unwrap();
    assert!(relabelled.same_edges(&hamming(2, 3).unwrap()));
}

#[test]
fn coset_graph_of_k6_map_is_complete() {
    let cg = map::coset_graph(&k6_icosahedral(), CAP).unwrap();
    assert!(is_isomorphic(&cg.graph, &complete(6).unwrap()).is_some());
}

#[test]
fn hexagon_carries_k3() {
    let map = RegularMap::new(map::k3_hexagon(), CAP).unwrap();
    let inv = map.invariants().unwrap();
    assert_eq!(inv.group_order, 12);
    assert_eq!(inv.map_type, MapType { p: 6, q: 2, r: 3 });
    assert!(!inv.orientable);
    assert_eq!(inv.genus, 1);
    let g = map.coset_graph().unwrap().graph;
    assert!(is_isomorphic(&g, &complete(3).unwrap()).is_some());
}

#[test]
fn triple_file_roundtrip() {
    let t = h26_dodecahedral();
    assert_eq!(AdmissibleTriple::parse(&t.to_text()).unwrap(), t);
    assert!(AdmissibleTriple::parse("degree 3\nlambda 0 1 2\n").is_err());
}

#[test]
fn conjugation_preserves_invariants() {
    let t = h26_icosahedral();
    let phi = Perm::from_images((0..36u16).rev()).unwrap();
    let u = t.conjugate(&phi);
    assert_eq!(map::invariants(&t, CAP).unwrap(), map::invariants(&u, CAP).unwrap());
    let found = map::conjugating_map(&t, &u).unwrap();
    assert_eq!(t.conjugate(&found), u);
}

#[test]
fn parallel_edges_are_reported() {
    // The antipodal square quotient is a 2-cycle: two vertices, two edges.
    let t = map::antipodal_polygon(2);
    let map = RegularMap::new(t, CAP).unwrap();
    let inv = map.invariants().unwrap();
    assert_eq!((inv.vertices, inv.edges), (2, 2));
    match map.coset_graph() {
        Err(MapError::NotSimple(map::Incidence::MultiEdge { vertices, .. })) => assert_ne!(vertices.0, vertices.1),
        other => panic!("expected a multi-edge, got {other:?}"),
    }
}
