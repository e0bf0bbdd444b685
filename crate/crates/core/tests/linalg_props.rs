use feyncomb::linalg::PolyMatrix;
use feyncomb::{random, Poly, Rational};
use proptest::prelude::*;
use rand::Rng;

fn matrix(rng: &mut random::Rng64, n: usize) -> PolyMatrix<Rational> {
    let mut m = PolyMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, random::poly_xy(rng));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn det_is_transpose_invariant_and_matches_laplace(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(1..=4);
        let m = matrix(&mut rng, n);
        prop_assert_eq!(m.det(), m.transpose().det());
        prop_assert_eq!(m.det(), m.det_laplace());
    }

    #[test]
    fn det_is_alternating(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(2..=4);
        let m = matrix(&mut rng, n);
        let (i, j) = (0, rng.gen_range(1..n));
        let mut swapped = m.clone();
        let mut repeated = m.clone();
        for c in 0..n {
            swapped.set(i, c, m.get(j, c).clone());
            swapped.set(j, c, m.get(i, c).clone());
            repeated.set(i, c, m.get(j, c).clone());
        }
        prop_assert_eq!(swapped.det(), -m.det());
        prop_assert!(repeated.det().is_zero());
    }

    #[test]
    fn det_is_linear_in_a_row(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(1..=3);
        let (a, b) = (matrix(&mut rng, n), matrix(&mut rng, n));
        let s = random::poly_xy(&mut rng);
        let mut sum = a.clone();
        let mut other = a.clone();
        for c in 0..n {
            sum.set(0, c, a.get(0, c) + &(&s * b.get(0, c)));
            other.set(0, c, b.get(0, c).clone());
        }
        prop_assert_eq!(sum.det(), &a.det() + &(&s * &other.det()));
    }

    #[test]
    fn pfaffian_routes_agree(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = 2 * rng.gen_range(1..=3);
        let a = random::skew_poly(&mut rng, n);
        let pf = a.pfaffian().unwrap();
        prop_assert_eq!(&pf, &a.pfaffian_expansion().unwrap());
        prop_assert_eq!(&pf * &pf, a.det());
    }
}

#[test]
fn odd_skew_determinant_vanishes() {
    let mut rng = random::rng(7);
    for n in [1, 3, 5] {
        assert_eq!(random::skew_rational(&mut rng, n).det(), Poly::zero());
    }
}
