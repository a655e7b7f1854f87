//! The Modd-n equivalence relation and its multiplicative group on the
//! reduced odd residue system `M(n)`, which realises `Gal(Q(rho(n))/Q)`.
//!
//! `a_n(k)` folds the ordinary residue by the parity of `floor(k/n)`:
//! multiplication survives the fold, addition does not.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chebyshev::cheb_that;
use crate::minpoly::{eval_int_poly_at, FieldElement};
use crate::numthy::{delta, divisors, euler_phi, factorize, gcd, is_prime};
use crate::polycore::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModdError {
    #[error("operation requires an odd modulus, got {0}")]
    OddOnly(u64),
    #[error("operation requires a prime congruent to 1 mod 4, got {0}")]
    NotOneModFour(u64),
}

/// Modulus `n` with the cached degree `delta(n)` and fundamental set `M(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModdContext {
    n: u64,
    delta: u64,
    members: Vec<u64>,
}

impl ModdContext {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1);
        let members = crate::minpoly::fundamental_m_set(n);
        let delta = delta(n);
        debug_assert_eq!(members.len() as u64, delta);
        debug_assert_eq!(members[0], 1);
        if n % 2 == 1 && n >= 3 {
            debug_assert_eq!(*members.last().unwrap(), n - 2);
        }
        ModdContext { n, delta, members }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }
}

/// The Modd-n representative `a_n(k)`: the ordinary residue when
/// `floor(k/n)` is even, its mirror `n - r` otherwise.
pub fn modd_reduce(ctx: &ModdContext, k: i64) -> u64 {
    reduce_i128(ctx.n, k as i128)
}

fn reduce_i128(n: u64, k: i128) -> u64 {
    let n = n as i128;
    let q = k.div_euclid(n);
    let r = k.rem_euclid(n);
    if q % 2 == 0 {
        r as u64
    } else if r == 0 {
        0
    } else {
        (n - r) as u64
    }
}

/// `a_n(k * l)`; multiplicativity gives `a_n(kl) = a_n(a_n(k) a_n(l))`.
pub fn modd_mul(ctx: &ModdContext, k: i64, l: i64) -> u64 {
    reduce_i128(ctx.n, k as i128 * l as i128)
}

/// `a^e` under Modd-n multiplication (the trivial n = 1 group stays at its
/// printed representative 1).
pub fn modd_pow(ctx: &ModdContext, a: u64, e: u64) -> u64 {
    if ctx.n == 1 {
        return 1;
    }
    let mut acc = 1u64;
    let mut base = modd_reduce(ctx, a as i64);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = modd_mul(ctx, acc as i64, base as i64);
        }
        base = modd_mul(ctx, base as i64, base as i64);
        e >>= 1;
    }
    acc
}

/// First `count` non-negative members of the residue class `[m]`, ascending:
/// `(k-1) n` for the zero class, `floor(k/2) * 2n` plus `m` for odd `k` and
/// minus `m` for even `k` otherwise (so the gaps alternate `2(n-m)`, `2m`).
pub fn residue_class_members(ctx: &ModdContext, m: u64, count: u64) -> Vec<u64> {
    assert!(m < ctx.n);
    (1..=count)
        .map(|k| {
            if m == 0 {
                (k - 1) * ctx.n
            } else {
                let base = (k / 2) * 2 * ctx.n;
                if k % 2 == 1 {
                    base + m
                } else {
                    base - m
                }
            }
        })
        .collect()
}

/// Parity sign `p_n(k) = (-1)^floor(k/n)`.
pub fn parity_sign(ctx: &ModdContext, k: i64) -> i8 {
    if (k as i128).div_euclid(ctx.n as i128) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn residue(n: u64, k: i64) -> u64 {
    (k as i128).rem_euclid(n as i128) as u64
}

/// Pointwise verification of the residue/parity lemmas over a k-range,
/// plus a witness that addition is not class-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModdLemmaReport {
    pub n: u64,
    /// Members of each nonzero class share the parity of the class label.
    pub class_parity: bool,
    /// `p_n(k) = p_n(k + 2n)`.
    pub parity_periodic: bool,
    /// `p_n(-k) = p_n(k)` on multiples of `n`, `-p_n(k)` otherwise.
    pub parity_antisymmetric: bool,
    /// `r_n(kl) = r_n(k) r_n(l) mod n`.
    pub residue_product: bool,
    /// `r_2n(k)` is `r_n(k)` or `r_n(k) + n`.
    pub residue_doubling: bool,
    /// `r_n(-k)` is `0` or `n - r_n(k)`.
    pub residue_negation: bool,
    /// `a_n(-k) = a_n(k)`.
    pub reduce_symmetric: bool,
    /// Some `(k, l)` with `a_n(k + l) != a_n(a_n(k) + a_n(l))`, when one exists.
    pub non_additivity_witness: Option<(i64, i64)>,
}

impl ModdLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.class_parity
            && self.parity_periodic
            && self.parity_antisymmetric
            && self.residue_product
            && self.residue_doubling
            && self.residue_negation
            && self.reduce_symmetric
            && (self.n <= 2 || self.non_additivity_witness.is_some())
    }
}

pub fn modd_lemma_suite(ctx: &ModdContext, k_lo: i64, k_hi: i64) -> ModdLemmaReport {
    let n = ctx.n;
    let ctx2 = ModdContext::new(2 * n);

    let mut class_parity = true;
    if n % 2 == 0 {
        for m in 0..n {
            for c in residue_class_members(ctx, m, 12) {
                if c % 2 != m % 2 {
                    class_parity = false;
                }
            }
        }
    } else {
        for m in 1..n {
            for c in residue_class_members(ctx, m, 12) {
                if c % 2 != m % 2 {
                    class_parity = false;
                }
            }
        }
        // in class [0] the parity alternates, starting even
        for (i, c) in residue_class_members(ctx, 0, 12).iter().enumerate() {
            if c % 2 != (i as u64) % 2 {
                class_parity = false;
            }
        }
    }

    let mut parity_periodic = true;
    let mut parity_antisymmetric = true;
    let mut residue_product = true;
    let mut residue_doubling = true;
    let mut residue_negation = true;
    let mut reduce_symmetric = true;
    for k in k_lo..=k_hi {
        if parity_sign(ctx, k) != parity_sign(ctx, k + 2 * n as i64) {
            parity_periodic = false;
        }
        if k >= 0 {
            let expected = if residue(n, k) == 0 {
                parity_sign(ctx, k)
            } else {
                -parity_sign(ctx, k)
            };
            if parity_sign(ctx, -k) != expected {
                parity_antisymmetric = false;
            }
            let rn = residue(n, -k);
            let expect_neg = if residue(n, k) == 0 {
                0
            } else {
                n - residue(n, k)
            };
            if rn != expect_neg {
                residue_negation = false;
            }
            if modd_reduce(ctx, -k) != modd_reduce(ctx, k) {
                reduce_symmetric = false;
            }
        }
        let r2 = residue(2 * n, k);
        let r1 = residue(n, k);
        let expected2 = if r2 < n { r1 } else { r1 + n };
        if r2 != expected2 {
            residue_doubling = false;
        }
        let _ = &ctx2;
        for l in k_lo..=k_hi {
            if residue(n, k.wrapping_mul(l))
                != residue(n, (residue(n, k) * residue(n, l)) as i64)
            {
                residue_product = false;
            }
        }
    }

    let mut non_additivity_witness = None;
    'outer: for k in 0..(4 * n as i64) {
        for l in 0..(4 * n as i64) {
            let folded = modd_reduce(ctx, modd_reduce(ctx, k) as i64 + modd_reduce(ctx, l) as i64);
            if modd_reduce(ctx, k + l) != folded {
                non_additivity_witness = Some((k, l));
                break 'outer;
            }
        }
    }

    ModdLemmaReport {
        n,
        class_parity,
        parity_periodic,
        parity_antisymmetric,
        residue_product,
        residue_doubling,
        residue_negation,
        reduce_symmetric,
        non_additivity_witness,
    }
}

/// `M-hat(n)`, its first differences, and the list `F(n)` for odd `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalSets {
    pub m_hat: Vec<u64>,
    pub delta_m_hat: Vec<u64>,
    pub f_list: Vec<u64>,
}

/// `M-hat(n) = {0} + M(n) + {n+2}`; `F(n)` is built by mirroring the first
/// differences at the final 4, dropping 2 everywhere, halving, omitting the
/// final 0 and reversing.
pub fn fundamental_sets(n: u64) -> Result<FundamentalSets, ModdError> {
    if n % 2 == 0 {
        return Err(ModdError::OddOnly(n));
    }
    assert!(n >= 3);
    let ctx = ModdContext::new(n);
    let mut m_hat = vec![0u64];
    m_hat.extend_from_slice(ctx.members());
    m_hat.push(n + 2);
    let delta_m_hat: Vec<u64> = m_hat.windows(2).map(|w| w[1] - w[0]).collect();
    debug_assert_eq!(delta_m_hat.first(), Some(&1));
    debug_assert_eq!(delta_m_hat.last(), Some(&4));

    let d = ctx.delta() as usize;
    let mut f_list = vec![0u64; 2 * d];
    for j in 1..d {
        f_list[j - 1] = (delta_m_hat[j] - 2) / 2;
    }
    f_list[d - 1] = 1;
    for j in 1..d {
        f_list[d - 1 + j] = f_list[d - 1 - j];
    }
    f_list[2 * d - 1] = 0;
    Ok(FundamentalSets {
        m_hat,
        delta_m_hat,
        f_list,
    })
}

/// The k-th positive odd number coprime to odd `n`, by the floor formula
/// `o*(k) = 2k - 1 + 2 sum_j f(n, j) floor((k + j - 1) / (2 delta))`.
pub fn reduced_odd_sequence(n: u64, k: u64) -> Result<u64, ModdError> {
    let sets = fundamental_sets(n)?;
    assert!(k >= 1);
    let period = sets.f_list.len() as i64;
    let mut acc = 2 * k as i64 - 1;
    for (j, &f) in sets.f_list.iter().enumerate() {
        acc += 2 * f as i64 * (k as i64 + j as i64).div_euclid(period);
    }
    Ok(acc as u64)
}

/// Direct enumeration counterpart of `reduced_odd_sequence`.
pub fn reduced_odd_by_enumeration(n: u64, k: u64) -> u64 {
    assert!(n % 2 == 1 && k >= 1);
    let mut seen = 0;
    let mut v = 1u64;
    loop {
        if gcd(v, n) == 1 {
            seen += 1;
            if seen == k {
                return v;
            }
        }
        v += 2;
    }
}

/// Numerator coefficients `[1, delta o*(2), ..., delta o*(2 delta), 1]` of
/// the generating function of the reduced odd numbers.
pub fn reduced_odd_ogf_numerator(n: u64) -> Result<IntPoly, ModdError> {
    let period = 2 * delta(n);
    let mut coeffs = Vec::with_capacity(period as usize + 1);
    coeffs.push(BigInt::one());
    for k in 2..=period {
        let diff = reduced_odd_sequence(n, k)? - reduced_odd_sequence(n, k - 1)?;
        coeffs.push(BigInt::from(diff));
    }
    coeffs.push(BigInt::one());
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Expand `x * numerator / ((1 - x^period)(1 - x))` as a power series and
/// return the first `terms` coefficients (offset 1).
pub fn ogf_series(numerator: &IntPoly, period: u64, terms: u64) -> Vec<BigInt> {
    // series of 1/(1 - x^period) * 1/(1 - x) is sum over multiples
    let mut out = Vec::with_capacity(terms as usize);
    for k in 1..=terms as usize {
        // coefficient of x^k in x * num * sum_{a,b} x^(a*period + b)
        let mut acc = BigInt::zero();
        for (i, c) in numerator.coeffs().iter().enumerate() {
            if i + 1 > k {
                break;
            }
            // count pairs (a, b >= 0): a*period + b = k - 1 - i
            let rem = (k - 1 - i) as u64;
            acc += c * BigInt::from(rem / period + 1);
        }
        out.push(acc);
    }
    out
}

/// `sum_(j=0)^(L-1) floor((k+j)/L) = k` over the given range of `k`.
pub fn floor_identity_check(l: u64, k_lo: i64, k_hi: i64) -> bool {
    assert!(l >= 1);
    (k_lo..=k_hi).all(|k| {
        let s: i64 = (0..l as i64).map(|j| (k + j).div_euclid(l as i64)).sum();
        s == k
    })
}

/// Smallest `h >= 1` with `a^h = 1 Modd n`; always divides `delta(n)`.
pub fn element_order(ctx: &ModdContext, a: u64) -> u64 {
    assert!(a % 2 == 1 && gcd(a, ctx.n) == 1, "a must lie in M(n)");
    if ctx.n == 1 {
        return 1;
    }
    let mut h = 1u64;
    let mut cur = modd_reduce(ctx, a as i64);
    while cur != 1 {
        cur = modd_mul(ctx, cur as i64, a as i64);
        h += 1;
    }
    h
}

/// Smallest element of `M(n)` of full order `delta(n)`, when one exists.
pub fn primitive_root(ctx: &ModdContext) -> Option<u64> {
    ctx.members()
        .iter()
        .copied()
        .find(|&a| element_order(ctx, a) == ctx.delta())
}

/// `phi(delta(n))` when the group is cyclic, 0 otherwise.
pub fn primitive_root_count(ctx: &ModdContext) -> u64 {
    if primitive_root(ctx).is_some() {
        euler_phi(ctx.delta())
    } else {
        0
    }
}

/// Maximal cyclic subgroups, each written as the orbit of its smallest
/// generator ending at 1 and ordered by leading element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    pub cycles: Vec<Vec<u64>>,
    /// `(order, count)` pairs, descending by order.
    pub signature: Vec<(u64, u64)>,
}

impl CycleStructure {
    fn from_cycles(mut cycles: Vec<Vec<u64>>) -> Self {
        cycles.sort_by_key(|c| c[0]);
        let mut counts: Vec<(u64, u64)> = Vec::new();
        for c in &cycles {
            let len = c.len() as u64;
            match counts.iter_mut().find(|(o, _)| *o == len) {
                Some((_, cnt)) => *cnt += 1,
                None => counts.push((len, 1)),
            }
        }
        counts.sort_by(|a, b| b.0.cmp(&a.0));
        CycleStructure {
            cycles,
            signature: counts,
        }
    }

    pub fn cycle_count(&self) -> u64 {
        self.cycles.len() as u64
    }
}

fn orbit<F: Fn(u64, u64) -> u64>(g: u64, mul: F) -> Vec<u64> {
    let mut cycle = vec![g];
    let mut cur = g;
    while cur != 1 {
        cur = mul(cur, g);
        cycle.push(cur);
    }
    cycle
}

fn cycle_structure_generic<F: Fn(u64, u64) -> u64 + Copy>(
    elements: &[u64],
    mul: F,
) -> CycleStructure {
    if elements == [1] {
        return CycleStructure::from_cycles(vec![vec![1]]);
    }
    // smallest generator per distinct cyclic subgroup
    let mut subgroups: Vec<(Vec<u64>, u64)> = Vec::new();
    for &g in elements {
        let mut set: Vec<u64> = orbit(g, mul);
        set.sort_unstable();
        set.dedup();
        match subgroups.iter_mut().find(|(s, _)| *s == set) {
            Some((_, gen)) => *gen = (*gen).min(g),
            None => subgroups.push((set, g)),
        }
    }
    let maximal: Vec<&(Vec<u64>, u64)> = subgroups
        .iter()
        .filter(|(s, _)| {
            !subgroups
                .iter()
                .any(|(t, _)| t.len() > s.len() && s.iter().all(|v| t.binary_search(v).is_ok()))
        })
        .collect();
    CycleStructure::from_cycles(maximal.iter().map(|(_, g)| orbit(*g, mul)).collect())
}

/// Cycle structure of the multiplicative group Modd n on `M(n)`.
pub fn cycle_structure(ctx: &ModdContext) -> CycleStructure {
    let n = ctx.n;
    cycle_structure_generic(ctx.members(), |a, b| {
        reduce_i128(n, a as i128 * b as i128)
    })
}

/// Primary decomposition of a finite abelian group as cyclic prime-power
/// factors `(p, a)` meaning `Z_(p^a)`; canonically ordered by descending
/// prime, then descending exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianType {
    pub factors: Vec<(u64, u32)>,
}

impl AbelianType {
    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&(p, a)| p.pow(a)).product()
    }

    /// Cyclic iff no prime contributes more than one factor.
    pub fn is_cyclic(&self) -> bool {
        let mut primes: Vec<u64> = self.factors.iter().map(|&(p, _)| p).collect();
        let before = primes.len();
        primes.dedup();
        primes.len() == before
    }

    fn canonicalize(mut self) -> Self {
        self.factors.sort_by(|a, b| b.cmp(a));
        self
    }
}

fn abelian_type_generic<F: Fn(u64, u64) -> u64 + Copy>(elements: &[u64], mul: F) -> AbelianType {
    let order = elements.len() as u64;
    let pow = |a: u64, mut e: u64| -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let mut factors = Vec::new();
    for (p, _) in factorize(order).pairs {
        // f(j) = #{g : g^(p^j) = 1} = p^(sum_i min(a_i, j)); the jumps in
        // log_p f give the number of factors with exponent >= j
        let mut logs = vec![0u32];
        let mut j = 1u32;
        loop {
            let count = elements
                .iter()
                .filter(|&&g| pow(g, p.pow(j)) == 1)
                .count() as u64;
            let log = count.ilog(p);
            if log == *logs.last().unwrap() {
                break;
            }
            logs.push(log);
            j += 1;
        }
        let ge: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        for (idx, &count_ge) in ge.iter().enumerate() {
            let count_next = ge.get(idx + 1).copied().unwrap_or(0);
            for _ in 0..(count_ge - count_next) {
                factors.push((p, idx as u32 + 1));
            }
        }
    }
    AbelianType { factors }.canonicalize()
}

/// Abelian type of the Modd-n group (isomorphic to `Gal(Q(rho(n))/Q)`).
pub fn abelian_type(ctx: &ModdContext) -> AbelianType {
    if ctx.delta() == 1 {
        return AbelianType { factors: vec![] };
    }
    let n = ctx.n;
    abelian_type_generic(ctx.members(), |a, b| {
        reduce_i128(n, a as i128 * b as i128)
    })
}

/// Abelian type of the ordinary multiplicative group mod `n`, for comparison.
pub fn classical_modn_group_type(n: u64) -> AbelianType {
    assert!(n >= 1);
    let elements: Vec<u64> = if n == 1 {
        vec![1]
    } else {
        (1..n).filter(|&k| gcd(k, n) == 1).collect()
    };
    if elements.len() == 1 {
        return AbelianType { factors: vec![] };
    }
    abelian_type_generic(&elements, |a, b| a * b % n)
}

/// Cycle structure of the ordinary multiplicative group mod `n`.
pub fn classical_modn_cycle_structure(n: u64) -> CycleStructure {
    assert!(n >= 1);
    let elements: Vec<u64> = if n == 1 {
        vec![1]
    } else {
        (1..n).filter(|&k| gcd(k, n) == 1).collect()
    };
    cycle_structure_generic(&elements, |a, b| a * b % n)
}

/// Smallest `s > 1` in `M(n)` with `s^2 = 1 Modd n`, or `None` when the
/// group order `delta(n)` is odd. For even cyclic `n` the solution is
/// pinned to `n - 1`; for primes `1 mod 4` to `2K + 1`.
pub fn nontrivial_sqrt_one(ctx: &ModdContext) -> Option<u64> {
    if ctx.delta() % 2 == 1 {
        debug_assert!(ctx
            .members()
            .iter()
            .all(|&s| s == 1 || modd_mul(ctx, s as i64, s as i64) != 1));
        return None;
    }
    let s = ctx
        .members()
        .iter()
        .copied()
        .find(|&s| s > 1 && modd_mul(ctx, s as i64, s as i64) == 1)?;
    let n = ctx.n;
    if n % 2 == 0 && n >= 4 && primitive_root(ctx).is_some() {
        assert_eq!(s, n - 1, "even cyclic case must give s = n - 1");
    }
    if n % 4 == 1 && is_prime(n) {
        let nice = solve_nice_congruence(n).expect("n = 1 mod 4 prime");
        assert_eq!(s, 2 * nice.k + 1, "prime case must give s = 2K + 1");
    }
    Some(s)
}

/// Solutions of `2X^2 + 2X + 1 = 0 mod p` for a prime `p = 1 mod 4`,
/// with the triangular-number parameter of the nice equation
/// `4T(K) + 1 = (4k + 1)(4l + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceCongruence {
    pub k: u64,
    pub k2: u64,
    pub l: u64,
}

pub fn solve_nice_congruence(p_hat: u64) -> Result<NiceCongruence, ModdError> {
    if p_hat % 4 != 1 || !is_prime(p_hat) {
        return Err(ModdError::NotOneModFour(p_hat));
    }
    let k = (0..p_hat)
        .find(|&x| (2 * x * x + 2 * x + 1) % p_hat == 0)
        .expect("two solutions exist for p = 1 mod 4");
    let k2 = p_hat - 1 - k;
    debug_assert_eq!((2 * k2 * k2 + 2 * k2 + 1) % p_hat, 0);
    let t = k * (k + 1) / 2;
    debug_assert_eq!((4 * t + 1) % p_hat, 0);
    let l = ((4 * t + 1) / p_hat - 1) / 4;

    // cross-check against the l-algorithm: minimal l >= 0 such that
    // k0 (1 + 4l) + l is triangular, with k0 = (p - 1) / 4
    let k0 = (p_hat - 1) / 4;
    let is_triangular = |v: u64| {
        // v = T(s) iff 8v + 1 is a perfect square
        let d = 8 * v + 1;
        let mut r = (d as f64).sqrt() as u64;
        while r * r > d {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= d {
            r += 1;
        }
        r * r == d
    };
    let l_min = (0..=l).find(|&cand| is_triangular(k0 * (1 + 4 * cand) + cand));
    debug_assert_eq!(l_min, Some(l), "l-algorithm must agree");

    Ok(NiceCongruence { k, k2, l })
}

/// Wilson analog: the Modd-p product over `M(p)` is 1 when `(p-1)/2` is odd
/// and the nontrivial square root of unity when it is even.
pub fn wilson_analog_check(p: u64) -> bool {
    assert!(is_prime(p) && p >= 3);
    let ctx = ModdContext::new(p);
    let mut prod = 1u64;
    for &m in ctx.members() {
        prod = modd_mul(&ctx, prod as i64, m as i64);
    }
    if ((p - 1) / 2) % 2 == 1 {
        prod == 1
    } else {
        prod == nontrivial_sqrt_one(&ctx).expect("even group order")
    }
}

/// Iterate the field automorphism `rho -> t-hat(m_(j+1), rho)` `k_pow` times
/// and compare with `t-hat(a_n(m^k_pow), rho)` - the computational content
/// of the isomorphism between the Modd-n group and the Galois group.
pub fn galois_automorphism_check(n: u64, j: u64, k_pow: u32) -> bool {
    let ctx = ModdContext::new(n);
    assert!(j < ctx.delta());
    if n == 1 {
        // Q(rho(1)) = Q carries only the identity automorphism
        return true;
    }
    let m = ctx.members()[j as usize];
    let rho = FieldElement::rho(n);
    let t = cheb_that(m);
    let mut image = rho.clone();
    for _ in 0..k_pow {
        image = eval_int_poly_at(&t, &image);
    }
    let power = (m as i128).pow(k_pow);
    let folded = reduce_i128(n, power);
    image == eval_int_poly_at(&cheb_that(folded), &rho)
}

/// All divisor orders realised in `M(p)` with their element counts
/// (exploratory check for the solution-count question).
pub fn order_statistics(ctx: &ModdContext) -> Vec<(u64, u64)> {
    let mut stats: Vec<(u64, u64)> = Vec::new();
    for d in divisors(ctx.delta()) {
        let count = ctx
            .members()
            .iter()
            .filter(|&&a| element_order(ctx, a) == d)
            .count() as u64;
        stats.push((d, count));
    }
    stats
}
