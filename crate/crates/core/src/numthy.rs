//! Elementary number-theoretic helpers shared by every other module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Canonical prime factorisation, primes strictly ascending, exponents >= 1.
///
/// `factorize(1)` is the empty product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Reassemble the factored integer.
    pub fn product(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn distinct_primes(&self) -> Vec<u64> {
        self.pairs.iter().map(|&(p, _)| p).collect()
    }

    pub fn odd_primes(&self) -> Vec<u64> {
        self.pairs
            .iter()
            .map(|&(p, _)| p)
            .filter(|&p| p != 2)
            .collect()
    }

    /// Exponent of `p` in the factorisation (0 if `p` does not divide).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }
}

/// Factor `n >= 1` by trial division. All inputs here are desk-scale.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut pairs = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).pairs == [(n, 1)]
}

/// Euler's totient, with `phi(1) = 1` by convention.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .pairs
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * p.pow(e - 1) * (p - 1))
}

/// Moebius function: 0 unless squarefree, else (-1)^(number of primes).
pub fn moebius_mu(n: u64) -> i8 {
    let f = factorize(n);
    if f.pairs.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.pairs.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The set of distinct primes dividing `n` (primes of the squarefree kernel).
pub fn sqfk_set(n: u64) -> Vec<u64> {
    factorize(n).distinct_primes()
}

/// Squarefree kernel (radical) of `n`.
pub fn sqfk(n: u64) -> u64 {
    sqfk_set(n).iter().product::<u64>().max(1)
}

/// Largest power of 2 dividing `n`, as an exponent.
pub fn two_adic_valuation(n: u64) -> u32 {
    assert!(n >= 1);
    n.trailing_zeros()
}

/// Odd part of `n`.
pub fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

/// Degree of the minimal polynomial of 2cos(pi/n): 1 for n = 1, phi(2n)/2 otherwise.
pub fn delta(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        1
    } else {
        euler_phi(2 * n) / 2
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Sum of the residues below `n` coprime to `n` equals `(n^2/2) * prod(1 - 1/p)`,
/// computed exactly over rationals (equivalently `n * phi(n) / 2`).
pub fn coprime_sum_identity_check(n: u64) -> bool {
    assert!(n >= 2);
    let brute: u64 = (1..n).filter(|&k| gcd(k, n) == 1).sum();
    let mut rhs = BigRational::new(BigInt::from(n) * BigInt::from(n), BigInt::from(2));
    for p in sqfk_set(n) {
        rhs *= BigRational::new(BigInt::from(p - 1), BigInt::from(p));
    }
    rhs == BigRational::from_integer(BigInt::from(brute))
        && 2 * brute == n * euler_phi(n)
}

/// Exact restatement of the full-angle cosine product over the `S`-polynomials:
/// `(-1)^(n-1) S(n-1, 0)` is `(-1)^((n-1)/2)` for odd `n` and 0 for even `n`,
/// and the sine-product specialisation gives `S(n-1, 2) = n`.
pub fn cosine_product_check(n: u64) -> bool {
    assert!(n >= 2);
    let s = crate::chebyshev::cheb_s(n as i64 - 1);
    let at_zero = s.coeff(0);
    let product = if (n - 1) % 2 == 0 {
        at_zero.clone()
    } else {
        -at_zero.clone()
    };
    let cos_ok = if n % 2 == 1 {
        let expected = if ((n - 1) / 2) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        product == expected
    } else {
        product.is_zero()
    };
    let sin_ok = s.eval_int(&BigInt::from(2)) == BigInt::from(n);
    cos_ok && sin_ok
}
