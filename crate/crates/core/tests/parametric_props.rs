use feyncomb::parametric::{
    nc_u, symanzik_u, symanzik_u_via_det, symanzik_v, theta_degree, ExternalAssignment,
};
use feyncomb::{random, EdgeSubset, Rational};
use num_traits::One;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn u_is_a_multi_affine_tree_sum(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::connected_multigraph(&mut rng, 5, 7, 0);
        let u = symanzik_u(&g).unwrap();
        prop_assert_eq!(u.num_terms(), g.spanning_trees().unwrap().len());
        for (m, c) in u.terms() {
            prop_assert!(c.is_one());
            prop_assert!(m.powers().iter().all(|&(_, e)| e == 1));
        }
    }

    #[test]
    fn determinant_ignores_column_and_orientation(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let g = random::connected_multigraph(&mut rng, 5, 7, 0);
        let u = symanzik_u(&g).unwrap();
        let flip = EdgeSubset(rng.gen::<u64>() & g.all_edges().0);
        let h = g.reoriented(flip);
        for v in 0..g.num_vertices() {
            prop_assert_eq!(&symanzik_u_via_det(&g, v).unwrap(), &u);
            prop_assert_eq!(&symanzik_u_via_det(&h, v).unwrap(), &u);
        }
    }

    #[test]
    fn v_shape(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let legs = rng.gen_range(2..5);
        let g = random::connected_multigraph(&mut rng, 5, 7, legs);
        prop_assert!(symanzik_v(&g, &ExternalAssignment::zero(&g)).unwrap().is_zero());
        let v = symanzik_v(&g, &random::momenta(&mut rng, &g)).unwrap();
        // a two-tree has |V| − 2 edges, so its complement has L + 1
        let degree = g.loop_number() + 1;
        for (m, _) in v.terms() {
            prop_assert!(m.powers().iter().all(|&(_, e)| e == 1));
            prop_assert_eq!(m.degree() as usize, degree);
        }
    }

    #[test]
    fn nc_u_has_positive_coefficients_and_bounded_theta(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let rg = random::ribbon(&mut rng, 4, 6, 0);
        let u = nc_u(&rg).unwrap().to_poly().unwrap();
        for (m, c) in u.terms() {
            prop_assert!(*c > Rational::from_integer(0.into()));
            prop_assert!(m.exponent(&feyncomb::parametric::theta()) as usize <= rg.num_edges());
        }
        prop_assert!(theta_degree(&u) as usize <= rg.num_edges());
    }
}
