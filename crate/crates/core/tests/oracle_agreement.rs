mod common;

use common::{gf, mat, oracle, oracle_rep, raw_rows, rep};
use matroid_depth::depth::{
    certificate_holds, min_dual_td_row_equiv, verify_certificate, DepthSolver, Limits, Param,
};
use matroid_depth::graph::{dual_graph, dual_tree_depth, tree_depth, Graph};
use matroid_depth::{dual, Matrix, RepMatroid, SubspaceMatroid};
use proptest::prelude::*;

fn small_matrix(p: u16, max_h: usize, max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_h, 1..=max_n).prop_flat_map(move |(h, n)| {
        proptest::collection::vec(0..p as u8, h * n)
            .prop_map(move |d| Matrix::new(gf(p), h, n, d).unwrap())
    })
}

fn any_small() -> impl Strategy<Value = Matrix> {
    prop_oneof![small_matrix(2, 3, 5), small_matrix(3, 2, 4), small_matrix(5, 2, 3)]
}

#[test]
fn worked_values_match_the_oracle() {
    let u12 = rep(2, &[&[1, 1]]);
    let u23 = rep(2, &[&[1, 0, 1], &[0, 1, 1]]);
    let u13 = rep(2, &[&[1, 1, 1]]);
    let free = rep(3, &[&[1, 0], &[0, 1]]);
    let mut s = DepthSolver::unmemoized(Limits::default());
    for (m, cd, dd, csd, dsd) in [
        (&u12, 2, 2, 1, 1),
        (&u23, 3, 2, 2, 1),
        (&u13, 2, 3, 1, 2),
        (&free, 1, 1, 1, 0),
    ] {
        let o = oracle_rep(m.matrix());
        assert_eq!((o.matroid().cd(), s.value(Param::Cd, m).unwrap()), (cd, cd));
        assert_eq!((o.matroid().dd(), s.value(Param::Dd, m).unwrap()), (dd, dd));
        assert_eq!((o.csd(), s.value(Param::Csd, m).unwrap()), (csd, csd));
        assert_eq!((o.dsd(), s.value(Param::Dsd, m).unwrap()), (dsd, dsd));
    }
}

#[test]
fn dd_of_u13_is_three() {
    // deleting one element of U13 leaves the parallel pair, which stays connected
    let u13 = rep(2, &[&[1, 1, 1]]);
    let o = oracle_rep(u13.matrix()).matroid();
    assert_eq!(o.dd(), 3);
    assert_eq!(o.dual().cd(), 3);
    let mut s = DepthSolver::default();
    assert_eq!(s.dd(&u13).unwrap().0, 3);
}

#[test]
fn certificates_are_optimal_at_oracle_scale() {
    // no certificate of smaller value exists: the value matches the oracle,
    // and the oracle value is a lower bound for every certificate
    let mut s = DepthSolver::default();
    for rows in [
        &[&[1u8, 0, 1][..], &[0, 1, 1]][..],
        &[&[1, 1, 1, 1]],
        &[&[1, 0, 1, 1], &[0, 1, 0, 1]],
    ] {
        let m = rep(2, rows);
        let o = oracle_rep(m.matrix());
        for (param, v) in [
            (Param::Cd, o.matroid().cd()),
            (Param::Dd, o.matroid().dd()),
            (Param::Csd, o.csd()),
            (Param::Dsd, o.dsd()),
        ] {
            let (value, mut cert) = s.solve(param, &m).unwrap();
            assert_eq!(value, v, "{param} on {}", m.matrix());
            assert!(certificate_holds(&m, param, &cert));
            if value > 0 {
                cert.value -= 1;
                assert!(verify_certificate(&m, param, &cert).is_err());
            }
        }
    }
}

#[test]
fn tree_depth_matches_brute_force() {
    let graphs: [(usize, &[(usize, usize)]); 5] = [
        (4, &[(0, 1), (1, 2), (2, 3)]),
        (4, &[(0, 1), (0, 2), (0, 3)]),
        (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        (5, &[(0, 1), (2, 3)]),
        (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ];
    for (n, edges) in graphs {
        let (td, forest) = tree_depth(&Graph::from_edges(n, edges)).unwrap();
        assert_eq!(td, oracle::tree_depth(n, edges));
        assert!(forest.is_witness_for(&Graph::from_edges(n, edges)));
    }
}

#[test]
fn row_equivalence_examples() {
    for (rows, expected) in [
        (&[&[1u8, 0, 1][..], &[0, 1, 1]][..], 2),
        (&[&[1, 0], &[0, 1]], 1),
        (&[&[1, 1], &[0, 1]], 1),
    ] {
        let a = mat(2, rows);
        assert_eq!(min_dual_td_row_equiv(&a).unwrap().0, expected);
        assert_eq!(oracle::min_dual_td_row_equiv(&raw_rows(&a), 2), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn element_depths_match_the_oracle(a in any_small()) {
        let m = RepMatroid::new(a.clone());
        let o = oracle_rep(&a).matroid();
        let mut s = DepthSolver::default();
        prop_assert_eq!(s.value(Param::Cd, &m).unwrap(), o.cd());
        prop_assert_eq!(s.value(Param::Dd, &m).unwrap(), o.dd());
    }

    #[test]
    fn independence_matches_the_oracle(a in any_small()) {
        let m = RepMatroid::new(a.clone());
        let o = oracle_rep(&a).matroid();
        for mask in 0..=m.full_mask() {
            prop_assert_eq!(m.is_independent_mask(mask), o.indep[mask as usize]);
        }
        let comps: Vec<usize> = m
            .component_masks(20)
            .unwrap()
            .into_iter()
            .map(|c| c as usize)
            .collect();
        prop_assert_eq!(comps, o.components());
        prop_assert_eq!(oracle_rep(dual(&m).matrix()).matroid(), o.dual());
    }

    #[test]
    fn dual_tree_depth_matches_the_oracle(a in any_small()) {
        prop_assert_eq!(dual_tree_depth(&a).unwrap(), oracle::dual_tree_depth(&raw_rows(&a)));
        let g = dual_graph(&a);
        prop_assert_eq!(g.edges(), oracle::dual_graph_edges(&raw_rows(&a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vector_depths_match_the_oracle(a in prop_oneof![small_matrix(2, 3, 4), small_matrix(3, 2, 3)]) {
        let m = RepMatroid::new(a.clone());
        let o = oracle_rep(&a);
        let mut s = DepthSolver::default();
        prop_assert_eq!(s.value(Param::Csd, &m).unwrap(), o.csd());
        prop_assert_eq!(s.value(Param::Dsd, &m).unwrap(), o.dsd());
        let w = SubspaceMatroid::from_rep(&m);
        prop_assert_eq!(s.cbd(&w).unwrap(), o.csd());
        prop_assert_eq!(s.dbd(&w).unwrap(), o.dsd());
    }
}
