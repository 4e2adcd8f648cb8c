mod common;

use common::{interpolate, lp, r};
use proptest::prelude::*;
use weighted_ehrhart::algebra::{
    lagrange_interpolate, rat, AlgebraError, CharacterSum, HomogPoly, LaurentPoly, Rat, ZPoly,
};

fn homog(n: usize, monos: &[(&[u32], i64)]) -> HomogPoly {
    HomogPoly::new(n, monos.iter().map(|(e, c)| (e.to_vec(), r(*c)))).unwrap()
}

#[test]
fn substitute_inverse_examples() {
    assert_eq!(lp(&[(0, 1), (1, 1)]).substitute_inverse(), lp(&[(0, 1), (-1, 1)]));
    assert_eq!(LaurentPoly::from_int(5).substitute_inverse(), LaurentPoly::from_int(5));
    assert_eq!(lp(&[(-2, -1), (1, 3)]).substitute_inverse(), lp(&[(2, -1), (-1, 3)]));
}

#[test]
fn phi_eval_examples() {
    assert_eq!(homog(1, &[(&[1], 1)]).eval(&[3]).unwrap(), r(3));
    assert_eq!(homog(2, &[(&[2, 0], 1), (&[0, 2], 1)]).eval(&[1, 2]).unwrap(), r(5));
    let mixed = homog(2, &[(&[1, 1], 1)]);
    assert_eq!(mixed.eval(&[-1, 4]).unwrap(), r(-4));
    assert_eq!(mixed.eval(&[1, -4]).unwrap(), r(-4));
    assert!(matches!(
        mixed.eval(&[1, 2, 3]),
        Err(AlgebraError::DimensionMismatch { expected: 2, got: 3 })
    ));
}

#[test]
fn inhomogeneous_polynomial_is_rejected() {
    let err = HomogPoly::new(2, [(vec![1, 0], r(1)), (vec![0, 0], r(1))]).unwrap_err();
    assert!(matches!(err, AlgebraError::NotHomogeneous { .. }));
}

#[test]
fn interpolating_constant_data_gives_a_constant() {
    let c = lp(&[(-1, 2), (3, -7)]);
    let z = lagrange_interpolate(&[(r(1), c.clone()), (r(2), c.clone())], 1).unwrap();
    assert_eq!(z, ZPoly::new(vec![c]));
    assert_eq!(z.degree(), Some(0));
}

#[test]
fn interpolation_matches_direct_linear_solve() {
    let samples = vec![(1, LaurentPoly::from_int(2)), (2, lp(&[(0, 3), (1, 1)]))];
    let oracle = interpolate(&[1, 2], &[samples[0].1.clone(), samples[1].1.clone()]);
    let z = lagrange_interpolate(
        &samples.iter().map(|(x, v)| (r(*x), v.clone())).collect::<Vec<_>>(),
        1,
    )
    .unwrap();
    assert_eq!(z.coeffs(), &oracle[..]);
    // (1+y) z + (1-y)
    assert_eq!(z, ZPoly::new(vec![lp(&[(0, 1), (1, -1)]), lp(&[(0, 1), (1, 1)])]));
}

#[test]
fn interpolation_of_square_samples() {
    let u = LaurentPoly::one_plus_y();
    let u2 = u.pow(2);
    let four = LaurentPoly::from_int(4);
    let values = vec![
        four.clone(),
        &(&four + &u.scale(&r(4))) + &u2,
        &(&four + &u.scale(&r(8))) + &u2.scale(&r(4)),
    ];
    let oracle = interpolate(&[1, 2, 3], &values);
    let samples: Vec<(Rat, LaurentPoly)> = values.iter().enumerate().map(|(i, v)| (r(i as i64 + 1), v.clone())).collect();
    let z = lagrange_interpolate(&samples, 2).unwrap();
    assert_eq!(z.coeffs(), &oracle[..]);
    let expected = ZPoly::new(vec![
        &(&four - &u.scale(&r(4))) + &u2,
        &u.scale(&r(4)) - &u2.scale(&r(2)),
        u2.clone(),
    ]);
    assert_eq!(z, expected);
    // at y = 0 this is (z+1)^2
    for l in -3..=3 {
        assert_eq!(z.eval_int(l).eval(&r(0)), r((l + 1) * (l + 1)));
    }
}

#[test]
fn interpolation_errors() {
    assert!(matches!(lagrange_interpolate(&[], 0), Err(AlgebraError::NoSamples)));
    let c = LaurentPoly::one();
    assert!(matches!(
        lagrange_interpolate(&[(r(1), c.clone()), (r(1), c.clone())], 1),
        Err(AlgebraError::DuplicateNode(_))
    ));
    assert!(matches!(
        lagrange_interpolate(&[(r(1), c.clone()), (r(2), c)], 2),
        Err(AlgebraError::SampleCount { .. })
    ));
}

#[test]
fn canonical_rendering() {
    assert_eq!(lp(&[(-1, -1), (0, 2), (2, 3)]).to_string(), "-1*y^-1 + 2 + 3*y^2");
    assert_eq!(LaurentPoly::zero().to_string(), "0");
    assert_eq!(LaurentPoly::monomial(rat(1, 2), 1).to_string(), "1/2*y");
}

#[test]
fn charsum_normalization_drops_zero_values() {
    let mut s = CharacterSum::single(vec![1, 2], LaurentPoly::y());
    s.add_term(vec![1, 2], &LaurentPoly::y().scale(&r(-1)));
    assert!(s.is_zero());
    assert_eq!(s, CharacterSum::zero(2));
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6, 1i64..=3), 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
}

fn charsum(n: usize) -> impl Strategy<Value = CharacterSum> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), laurent()), 0..5).prop_map(move |ts| {
        let mut s = CharacterSum::zero(n);
        for (m, p) in ts {
            s.add_term(m, &p);
        }
        s
    })
}

fn homog_strategy() -> impl Strategy<Value = HomogPoly> {
    (0u32..=3).prop_flat_map(|deg| {
        prop::collection::vec(((0..=deg), -5i64..=5), 1..4).prop_map(move |ms| {
            HomogPoly::new(2, ms.into_iter().map(|(a, c)| (vec![a, deg - a], r(c)))).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn substitute_inverse_is_an_involution(p in laurent()) {
        prop_assert_eq!(p.substitute_inverse().substitute_inverse(), p);
    }

    #[test]
    fn phi_sign_law(phi in homog_strategy(), a in -6i64..=6, b in -6i64..=6) {
        let sign = if phi.degree() % 2 == 0 { r(1) } else { r(-1) };
        prop_assert_eq!(phi.eval(&[-a, -b]).unwrap(), sign * phi.eval(&[a, b]).unwrap());
    }

    #[test]
    fn interpolation_reproduces_samples(values in prop::collection::vec(laurent(), 1..6)) {
        let samples: Vec<(Rat, LaurentPoly)> =
            values.iter().enumerate().map(|(i, v)| (r(2 * i as i64 - 3), v.clone())).collect();
        let z = lagrange_interpolate(&samples, values.len() - 1).unwrap();
        prop_assert!(z.degree().map_or(true, |d| d < values.len()));
        for (x, v) in &samples {
            prop_assert_eq!(&z.eval(x), v);
        }
    }

    #[test]
    fn charsum_addition_is_commutative_and_associative(a in charsum(2), b in charsum(2), c in charsum(2)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        let neg = a.scale(&LaurentPoly::from_int(-1));
        prop_assert!(a.add(&neg).unwrap().is_zero());
    }

    #[test]
    fn scaling_distributes(a in charsum(1), b in charsum(1), p in laurent()) {
        prop_assert_eq!(a.add(&b).unwrap().scale(&p), a.scale(&p).add(&b.scale(&p)).unwrap());
    }

    #[test]
    fn negate_characters_is_an_involution(a in charsum(3)) {
        prop_assert_eq!(a.negate_characters().negate_characters(), a);
    }

    #[test]
    fn json_round_trips(p in laurent(), s in charsum(2), phi in homog_strategy()) {
        let p2: LaurentPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(p2, p);
        let s2: CharacterSum = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(s2, s);
        let phi2: HomogPoly = serde_json::from_str(&serde_json::to_string(&phi).unwrap()).unwrap();
        prop_assert_eq!(phi2, phi);
    }
}
