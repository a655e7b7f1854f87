//! Field-arithmetic properties of `Q(rho(n))` over random elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rhofield::minpoly::{field_inv, field_mul, field_pow, FieldElement};
use rhofield::numthy::delta;

fn element(n: u64) -> impl Strategy<Value = FieldElement> {
    let d = delta(n) as usize;
    proptest::collection::vec((-20i64..=20, 1i64..=6), d).prop_map(move |pairs| {
        FieldElement::new(
            n,
            pairs
                .into_iter()
                .map(|(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
                .collect(),
        )
    })
}

fn any_field() -> impl Strategy<Value = u64> {
    prop_oneof![Just(5u64), Just(7), Just(8), Just(12), Just(15), Just(30)]
}

proptest! {
    #[test]
    fn mul_commutative_associative(n in any_field(), seed in proptest::collection::vec((-20i64..=20, 1i64..=6), 3 * 16)) {
        let d = delta(n) as usize;
        let take = |i: usize| {
            FieldElement::new(
                n,
                seed[i * d..(i + 1) * d]
                    .iter()
                    .map(|&(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
                    .collect(),
            )
        };
        let (a, b, c) = (take(0), take(1), take(2));
        prop_assert_eq!(field_mul(&a, &b).unwrap(), field_mul(&b, &a).unwrap());
        prop_assert_eq!(
            field_mul(&field_mul(&a, &b).unwrap(), &c).unwrap(),
            field_mul(&a, &field_mul(&b, &c).unwrap()).unwrap()
        );
    }

    #[test]
    fn inverse_round_trip(n in any_field(), a in element(30)) {
        // rebuild the element in the sampled field
        let coords: Vec<BigRational> = a.coords().iter().take(delta(n) as usize).cloned().collect();
        let mut coords = coords;
        coords.resize(delta(n) as usize, BigRational::new(BigInt::from(0), BigInt::from(1)));
        let a = FieldElement::new(n, coords);
        prop_assume!(!a.is_zero());
        let inv = field_inv(&a).unwrap();
        prop_assert_eq!(field_mul(&a, &inv).unwrap(), FieldElement::one(n));
        prop_assert_eq!(field_pow(&a, -1).unwrap(), inv);
    }

    #[test]
    fn pow_laws(n in any_field(), a in element(30), e1 in 0i64..6, e2 in 0i64..6) {
        let coords: Vec<BigRational> = a.coords().iter().take(delta(n) as usize).cloned().collect();
        let mut coords = coords;
        coords.resize(delta(n) as usize, BigRational::new(BigInt::from(0), BigInt::from(1)));
        let a = FieldElement::new(n, coords);
        let lhs = field_pow(&a, e1 + e2).unwrap();
        let rhs = field_mul(&field_pow(&a, e1).unwrap(), &field_pow(&a, e2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn heptagon_power_sequences() {
    // powers of rho(7) in the <1, rho, sigma> basis obey the linear
    // recurrence of C(7, x) = x^3 - x^2 - 2x + 1: a(k+3) = a(k+2) + 2a(k+1) - a(k)
    let rho = FieldElement::rho(7);
    let to_sigma_basis = |e: &FieldElement| -> Vec<BigRational> {
        vec![
            &e.coords()[0] + &e.coords()[2],
            e.coords()[1].clone(),
            e.coords()[2].clone(),
        ]
    };
    let powers: Vec<Vec<BigRational>> = (0..=8)
        .map(|k| to_sigma_basis(&field_pow(&rho, k).unwrap()))
        .collect();
    for coord in 0..3 {
        for k in 0..=5 {
            let expect = &powers[k + 2][coord] + &(&powers[k + 1][coord] + &powers[k + 1][coord])
                - &powers[k][coord];
            assert_eq!(powers[k + 3][coord], expect, "coord {coord}, k {k}");
        }
    }
    // same law for negative powers via the inverse
    let inv_powers: Vec<FieldElement> = (0..=5)
        .map(|k| field_pow(&rho, -k).unwrap())
        .collect();
    for k in 0..=4usize {
        assert_eq!(
            field_mul(&inv_powers[k + 1], &rho).unwrap(),
            inv_powers[k],
            "k = {k}"
        );
    }
    // first few powers explicitly: rho^2 = 1 + sigma, rho^3 = rho + rho sigma
    let one = BigRational::from_integer(BigInt::from(1));
    let zero = BigRational::from_integer(BigInt::from(0));
    let two = BigRational::from_integer(BigInt::from(2));
    assert_eq!(powers[0], vec![one.clone(), zero.clone(), zero.clone()]);
    assert_eq!(powers[1], vec![zero.clone(), one.clone(), zero.clone()]);
    assert_eq!(powers[2], vec![one.clone(), zero.clone(), one.clone()]);
    assert_eq!(powers[3], vec![zero.clone(), two, one]);
}
