use proptest::prelude::*;
use zeuthen::{
    build_maximal_path, find_pivot, lattice_points, marked_selections, mu, mu_real, mu_side,
    step_vectors, BoundaryEdge, LatticePath, LatticePoint, MarkedConfig, NewtonTriangle, Side,
    Sign, SignSequence,
};

fn edge_subset() -> impl Strategy<Value = Vec<BoundaryEdge>> {
    (0u8..8).prop_map(|bits| {
        BoundaryEdge::ALL
            .into_iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, e)| e)
            .collect()
    })
}

/// A valid marked configuration with degree in `2..=8`.
fn config() -> impl Strategy<Value = MarkedConfig> {
    (2i64..=8, edge_subset(), any::<u64>()).prop_map(|(d, edges, pick)| {
        let all = marked_selections(d, &edges).unwrap();
        all[(pick % all.len() as u64) as usize].clone()
    })
}

fn signs(len: usize) -> impl Strategy<Value = SignSequence> {
    proptest::collection::vec((0u8..4).prop_map(Sign::from_index), len).prop_map(SignSequence)
}

fn assert_valid(path: &LatticePath) {
    let t = NewtonTriangle::new(path.degree()).unwrap();
    assert!(LatticePath::new(path.degree(), path.points().to_vec()).is_ok());
    assert_eq!(path.points().first(), Some(&t.start()));
    assert_eq!(path.points().last(), Some(&t.end()));
    assert!(step_vectors(path).iter().all(|v| !v.is_zero()));
}

proptest! {
    #[test]
    fn maximal_path_visits_every_unmarked_point(cfg in config()) {
        let path = build_maximal_path(&cfg);
        assert_valid(&path);
        prop_assert_eq!(path.len(), cfg.path_length());
        let mut expected: Vec<LatticePoint> = lattice_points(cfg.triangle())
            .into_iter()
            .filter(|p| !cfg.marked_points().contains(p))
            .collect();
        let mut got = path.points().to_vec();
        expected.sort();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn multiplicity_is_product_of_sides(cfg in config()) {
        let path = build_maximal_path(&cfg);
        let (plus, tp) = mu_side(&path, Side::Plus);
        let (minus, tm) = mu_side(&path, Side::Minus);
        prop_assert_eq!(mu(&path), plus * minus);
        prop_assert_eq!(tp.replay(), plus);
        prop_assert_eq!(tm.replay(), minus);
        // Every corner cut removes a triangle of positive area.
        prop_assert!(tp.steps.iter().chain(&tm.steps).all(|s| s.factor > 0));
    }

    #[test]
    fn real_never_exceeds_complex((cfg, s) in config().prop_flat_map(|cfg| {
        let n = cfg.path_length();
        (Just(cfg), signs(n))
    })) {
        let path = build_maximal_path(&cfg);
        let real = mu_real(&path, &s).unwrap();
        prop_assert!(real <= mu(&path));
        for c in Sign::ALL {
            prop_assert_eq!(mu_real(&path, &s.shifted(c)).unwrap(), real);
        }
    }

    #[test]
    fn wrong_length_signs_rejected(cfg in config(), extra in 1usize..3) {
        let path = build_maximal_path(&cfg);
        let s = SignSequence::constant(Sign::PP, path.len() + extra);
        prop_assert!(mu_real(&path, &s).is_err());
    }
}

#[test]
fn pivots_are_interior_indices() {
    for d in 2..=6 {
        let cfg = MarkedConfig::new(d, vec![]).unwrap();
        let path = build_maximal_path(&cfg);
        for side in Side::BOTH {
            if let Some(k) = find_pivot(&path, side) {
                assert!(k >= 1 && k < path.len());
            }
        }
    }
}
