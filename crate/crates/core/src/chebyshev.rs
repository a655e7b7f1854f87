//! The three monic integer polynomial families `S`, `t-hat` and `q`.
//!
//! `S(k, x)` is the Chebyshev polynomial of the second kind rescaled to
//! `U(k, x/2)`; `t-hat(k, x) = 2T(k, x/2)` is the monic first-kind analogue;
//! `q(k, x) = S(k, x) - S(k-1, x)`. All three are computed by their own
//! integer recurrences, so the cross-family identities stay checkable facts
//! rather than definitions.

use std::sync::Mutex;

use crate::polycore::IntPoly;

// Append-only caches, indexed by k. Filled under a single lock so concurrent
// readers either find the entry or recompute the missing prefix themselves.
static S_CACHE: Mutex<Vec<IntPoly>> = Mutex::new(Vec::new());
static THAT_CACHE: Mutex<Vec<IntPoly>> = Mutex::new(Vec::new());

fn cached(cache: &Mutex<Vec<IntPoly>>, k: usize, seed0: IntPoly, seed1: IntPoly) -> IntPoly {
    let mut guard = cache.lock().unwrap();
    if guard.is_empty() {
        guard.push(seed0);
        guard.push(seed1);
    }
    let x = IntPoly::x();
    while guard.len() <= k {
        let next = x
            .mul(&guard[guard.len() - 1])
            .sub(&guard[guard.len() - 2]);
        guard.push(next);
    }
    guard[k].clone()
}

/// `S(k, x)` with the negative-index rule `S(-1) = 0`, `S(-k) = -S(k-2)`.
pub fn cheb_s(k: i64) -> IntPoly {
    if k == -1 {
        return IntPoly::zero();
    }
    if k < -1 {
        return cheb_s(-k - 2).neg();
    }
    cached(&S_CACHE, k as usize, IntPoly::one(), IntPoly::x())
}

/// `t-hat(k, x)`: `t-hat(0) = 2`, `t-hat(1) = x`, same three-term recurrence.
pub fn cheb_that(k: u64) -> IntPoly {
    cached(
        &THAT_CACHE,
        k as usize,
        IntPoly::constant(2.into()),
        IntPoly::x(),
    )
}

/// `q(k, x) = S(k, x) - S(k-1, x)`, monic of degree `k`.
pub fn cheb_q(k: u64) -> IntPoly {
    cheb_s(k as i64).sub(&cheb_s(k as i64 - 1))
}

/// Coefficient of `x^m` in `q(k, x)` by the closed binomial form.
pub fn q_coefficient_closed_form(k: u64, m: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if m > k {
        return BigInt::zero();
    }
    let sign = if ((k - m + 1) / 2) % 2 == 0 { 1 } else { -1 };
    BigInt::from(sign) * binomial((k + m) / 2, m)
}

fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Outcome of the exact inter-family identity battery up to `k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub k_max: u64,
    /// Product formula for S-polynomials after clearing the `x^2 - 4` prefactor.
    pub product_formula: bool,
    /// `t-hat(n+m) - t-hat(n-m) = (x^2 - 4) S(n-1) S(m-1)`.
    pub shifted_difference: bool,
    /// `t-hat(m) * S(m-1) = S(2m-1)`.
    pub index_doubling: bool,
    /// `S(2n) = S(n)^2 - S(n-1)^2`.
    pub square_difference: bool,
    /// `t-hat(n) o t-hat(m) = t-hat(nm)`.
    pub composition: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.product_formula
            && self.shifted_difference
            && self.index_doubling
            && self.square_difference
            && self.composition
    }
}

/// Verify the five identities as exact polynomial equalities for every index
/// pair up to `k_max` (the product formula and shifted difference only for
/// `n >= m`, the range the source states them on).
pub fn identity_suite(k_max: u64) -> IdentityReport {
    assert!(k_max >= 2);
    let prefactor = IntPoly::from_i64(&[-4, 0, 1]);

    let mut product_formula = true;
    let mut shifted_difference = true;
    for n in 1..=k_max as i64 {
        for m in 1..=n {
            let lhs = prefactor.mul(&cheb_s(m - 1)).mul(&cheb_s(n - 1));
            let rhs = cheb_s(n + m)
                .sub(&cheb_s(n + m - 2))
                .sub(&cheb_s(n - m))
                .add(&cheb_s(n - m - 2));
            if lhs != rhs {
                product_formula = false;
            }
            let lhs2 = cheb_that((n + m) as u64).sub(&cheb_that((n - m) as u64));
            if lhs2 != lhs {
                shifted_difference = false;
            }
        }
    }

    let mut index_doubling = true;
    let mut square_difference = true;
    for m in 1..=k_max {
        if cheb_that(m).mul(&cheb_s(m as i64 - 1)) != cheb_s(2 * m as i64 - 1) {
            index_doubling = false;
        }
        let sq = cheb_s(m as i64)
            .mul(&cheb_s(m as i64))
            .sub(&cheb_s(m as i64 - 1).mul(&cheb_s(m as i64 - 1)));
        if sq != cheb_s(2 * m as i64) {
            square_difference = false;
        }
    }

    let mut composition = true;
    for n in 0..=k_max.min(12) {
        for m in 0..=k_max.min(12) {
            if cheb_that(n).compose(&cheb_that(m)) != cheb_that(n * m) {
                composition = false;
            }
        }
    }

    IdentityReport {
        k_max,
        product_formula,
        shifted_difference,
        index_doubling,
        square_difference,
        composition,
    }
}

/// Bisection: returns `S(2n, y)` and the expansion of
/// `S(n, y^2 - 2) + S(n-1, y^2 - 2)`; the two must agree.
pub fn s_bisection_shift(n: u64) -> (IntPoly, IntPoly) {
    let shifted = IntPoly::from_i64(&[-2, 0, 1]);
    let lhs = cheb_s(2 * n as i64);
    let rhs = cheb_s(n as i64)
        .compose(&shifted)
        .add(&cheb_s(n as i64 - 1).compose(&shifted));
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn s_base_and_negative_indices() {
        assert!(cheb_s(-1).is_zero());
        assert_eq!(cheb_s(-3), IntPoly::x().neg());
        assert_eq!(cheb_s(6), IntPoly::from_i64(&[-1, 0, 6, 0, -5, 0, 1]));
    }

    #[test]
    fn that_examples() {
        assert_eq!(cheb_that(0), IntPoly::from_i64(&[2]));
        assert_eq!(cheb_that(5), IntPoly::from_i64(&[0, 5, 0, -5, 0, 1]));
        assert_eq!(
            cheb_that(10),
            IntPoly::from_i64(&[-2, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1])
        );
    }

    #[test]
    fn q_examples() {
        assert_eq!(cheb_q(0), IntPoly::one());
        assert_eq!(cheb_q(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cheb_q(4), IntPoly::from_i64(&[1, 2, -3, -1, 1]));
    }

    #[test]
    fn q_closed_form_matches_recurrence() {
        for k in 0..=30u64 {
            let q = cheb_q(k);
            for m in 0..=k {
                assert_eq!(
                    q.coeff(m as usize),
                    q_coefficient_closed_form(k, m),
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn degree_monicity_parity() {
        for k in 1..=50i64 {
            let s = cheb_s(k);
            assert_eq!(s.degree(), Some(k as usize));
            assert!(s.is_monic());
            let t = cheb_that(k as u64);
            assert_eq!(t.degree(), Some(k as usize));
            assert!(t.is_monic());
            let q = cheb_q(k as u64);
            assert_eq!(q.degree(), Some(k as usize));
            assert!(q.is_monic());
            // terms of parity k only, for S and t-hat
            for (i, c) in s.coeffs().iter().enumerate() {
                if (i as i64 - k) % 2 != 0 {
                    assert!(c.is_zero());
                }
            }
            for (i, c) in t.coeffs().iter().enumerate() {
                if (i as i64 - k) % 2 != 0 {
                    assert!(c.is_zero());
                }
            }
        }
        // evaluations at zero
        for m in 0..=50u64 {
            let even = cheb_that(2 * m).coeff(0);
            let expected = if m % 2 == 0 { 2 } else { -2 };
            assert_eq!(even, BigInt::from(expected));
            assert!(cheb_that(2 * m + 1).coeff(0).is_zero());
        }
    }

    #[test]
    fn identity_suite_holds() {
        let report = identity_suite(24);
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn suite_spot_checks() {
        // composition with n = m = 3 gives t-hat(9)
        assert_eq!(cheb_that(3).compose(&cheb_that(3)), cheb_that(9));
        // S(4) = S(2)^2 - S(1)^2 = x^4 - 3x^2 + 1
        assert_eq!(cheb_s(4), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        // t-hat(2) - t-hat(0) = x^2 - 4
        assert_eq!(
            cheb_that(2).sub(&cheb_that(0)),
            IntPoly::from_i64(&[-4, 0, 1])
        );
    }

    #[test]
    fn bisection_shift() {
        for n in 0..=12u64 {
            let (lhs, rhs) = s_bisection_shift(n);
            assert_eq!(lhs, rhs, "n={n}");
        }
        let (l0, r0) = s_bisection_shift(0);
        assert_eq!(l0, IntPoly::one());
        assert_eq!(r0, IntPoly::one());
        let (l1, r1) = s_bisection_shift(1);
        assert_eq!(l1, IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(r1, IntPoly::from_i64(&[-1, 0, 1]));
    }
}
