//! Factorisation theorems tying the t-hat and q families to the minimal
//! polynomials, verified as stated over their full index ranges.

use num_bigint::BigInt;
use rhofield::chebyshev::{cheb_q, cheb_s, cheb_that};
use rhofield::minpoly::{minimal_poly_recursive, s_factorization_check};
use rhofield::numthy::{divisors, odd_part, two_adic_valuation};
use rhofield::polycore::IntPoly;

fn c(n: u64) -> IntPoly {
    minimal_poly_recursive(n).unwrap().poly
}

#[test]
fn that_factors_into_c_polynomials() {
    // t-hat(n) = prod over d | op(n) of C(2^(k+1) d), 2^k || n
    for n in 1..=128u64 {
        let k = two_adic_valuation(n);
        let mut prod = IntPoly::one();
        for d in divisors(odd_part(n)) {
            prod = prod.mul(&c((1 << (k + 1)) * d));
        }
        assert_eq!(cheb_that(n), prod, "n = {n}");
    }
}

#[test]
fn q_factors_into_c_polynomials() {
    // q(n) = prod over divisors d > 1 of 2n+1 of C(d)
    for n in 1..=100u64 {
        let mut prod = IntPoly::one();
        for d in divisors(2 * n + 1) {
            if d > 1 {
                prod = prod.mul(&c(d));
            }
        }
        assert_eq!(cheb_q(n), prod, "n = {n}");
    }
}

#[test]
fn multi_index_product_forms() {
    // t-hat(2^(k-1) p1^e1 ... pN^eN) as the full product over exponent boxes
    let full_that = |k: u32, primes: &[(u64, u32)]| -> IntPoly {
        let mut prod = IntPoly::one();
        let mut stack = vec![(0usize, 1u64)];
        while let Some((i, m)) = stack.pop() {
            if i == primes.len() {
                prod = prod.mul(&c((1 << k) * m));
            } else {
                let (p, e) = primes[i];
                let mut pw = 1u64;
                for _ in 0..=e {
                    stack.push((i + 1, m * pw));
                    pw *= p;
                }
            }
        }
        prod
    };
    assert_eq!(cheb_that(45), full_that(1, &[(3, 2), (5, 1)]));
    assert_eq!(cheb_that(105), full_that(1, &[(3, 1), (5, 1), (7, 1)]));
    assert_eq!(cheb_that(675), full_that(1, &[(3, 3), (5, 2)]));

    // q(n) with 2n+1 = p1^e1 ... pN^eN as the same box product over odd
    // prime powers, divided by C(1)
    let full_q = |primes: &[(u64, u32)]| -> IntPoly {
        let mut prod = IntPoly::one();
        let mut stack = vec![(0usize, 1u64)];
        while let Some((i, m)) = stack.pop() {
            if i == primes.len() {
                prod = prod.mul(&c(m));
            } else {
                let (p, e) = primes[i];
                let mut pw = 1u64;
                for _ in 0..=e {
                    stack.push((i + 1, m * pw));
                    pw *= p;
                }
            }
        }
        prod.div_exact(&c(1)).unwrap()
    };
    assert_eq!(cheb_q(22), full_q(&[(3, 2), (5, 1)]));
    assert_eq!(cheb_q(52), full_q(&[(3, 1), (5, 1), (7, 1)]));
    assert_eq!(cheb_q(337), full_q(&[(3, 3), (5, 2)]));
}

#[test]
fn worked_factorization_examples() {
    // C(1350) = t-hat(675) t-hat(45) / (t-hat(135) t-hat(225))
    assert_eq!(
        c(1350).mul(&cheb_that(135)).mul(&cheb_that(225)),
        cheb_that(675).mul(&cheb_that(45))
    );
    // t-hat(10) = C(20) C(4)
    assert_eq!(cheb_that(10), c(20).mul(&c(4)));
    // C(45) = q(22) q(1) / (q(7) q(4))
    assert_eq!(
        c(45).mul(&cheb_q(7)).mul(&cheb_q(4)),
        cheb_q(22).mul(&cheb_q(1))
    );
    // q(17) = C(5) C(7) C(35)
    assert_eq!(cheb_q(17), c(5).mul(&c(7)).mul(&c(35)));
}

#[test]
fn that_congruence_full_range() {
    // t-hat(k) = (-1)^floor(k/n) t-hat(k mod n) modulo C(n), for n <= 40 and
    // k <= 400. The left side is carried by the reduced recurrence
    // t-hat(k) = x t-hat(k-1) - t-hat(k-2) mod C(n), never materialising the
    // large polynomial, so the two sides arrive by different routes.
    let x = IntPoly::x();
    for n in 1..=40u64 {
        let cn = c(n);
        let mut prev = IntPoly::constant(BigInt::from(2)); // t-hat(0)
        let mut cur = x.divmod_monic(&cn).1; // t-hat(1) reduced
        for k in 1..=400u64 {
            let reduced_small = cheb_that(k % n).divmod_monic(&cn).1;
            let expected = if (k / n) % 2 == 0 {
                reduced_small
            } else {
                reduced_small.neg()
            };
            assert_eq!(cur, expected, "n = {n}, k = {k}");
            let next = x.mul(&cur).sub(&prev).divmod_monic(&cn).1;
            prev = cur;
            cur = next;
        }
    }
}

#[test]
fn c_divides_s_family_and_psi_factorization() {
    // Prop 9 factorisation of S plus the C(n) | S(ln - 1) family
    for n in 2..=100 {
        assert!(s_factorization_check(n), "n = {n}");
    }
    // spot: C(10) divides S(9), S(19), S(29)
    let c10 = c(10);
    assert_eq!(c10, IntPoly::from_i64(&[5, 0, -5, 0, 1]));
    for l in 1..=3i64 {
        assert!(cheb_s(10 * l - 1).divisible_by(&c10));
    }
}
