//! Dense exact univariate polynomial arithmetic over arbitrary-precision
//! integers and rationals. Everything else in the crate computes in here.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division was requested but the division left a remainder.
    /// When this comes out of a minimal-polynomial construction it signals
    /// a mis-assembled product upstream, not bad input.
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
}

/// Dense univariate polynomial with `BigInt` coefficients, ascending degree.
///
/// The empty coefficient list is the zero polynomial; otherwise the last
/// entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPoly { coeffs }.normalized()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
        .normalized()
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly { coeffs: out }.normalized()
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly { coeffs: out }.normalized()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly { coeffs: out }.normalized()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `p(-x)`.
    pub fn substitute_neg_x(&self) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Division with remainder by a monic divisor of degree >= 1.
    /// The quotient and remainder stay integral because `m` is monic.
    pub fn divmod_monic(&self, m: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(m.is_monic(), "divmod_monic requires a monic divisor");
        let md = m.degree().expect("monic divisor is nonzero");
        assert!(md >= 1, "divmod_monic requires degree >= 1");
        let mut rem = self.coeffs.clone();
        if rem.len() <= md {
            return (IntPoly::zero(), self.clone());
        }
        let qlen = rem.len() - md;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = std::mem::replace(&mut rem[i + md], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m.coeffs.iter().enumerate().take(md) {
                rem[i + j] -= &c * mj;
            }
            quot[i] = c;
        }
        rem.truncate(md);
        (
            IntPoly { coeffs: quot }.normalized(),
            IntPoly { coeffs: rem }.normalized(),
        )
    }

    /// Exact division by a monic divisor; errors if a remainder is left.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        assert!(den.is_monic(), "div_exact requires a monic divisor");
        if den.degree() == Some(0) {
            return Ok(self.clone());
        }
        let (q, r) = self.divmod_monic(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonzeroRemainder)
        }
    }

    /// True iff `den` divides `self` exactly (monic `den`).
    pub fn divisible_by(&self, den: &IntPoly) -> bool {
        self.div_exact(den).is_ok()
    }

    /// `outer(inner(x))`, expanded by Horner over polynomials.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        }
        .normalized()
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn eval_rational(&self, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, v: f64) -> f64 {
        let mut acc = 0.0f64;
        for c in self.coeffs.iter().rev() {
            acc = acc * v + bigint_to_f64(c);
        }
        acc
    }

    /// Content: gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Resultant of `self` and `other` by the fraction-free subresultant
    /// polynomial remainder sequence (Collins). Exact over the integers.
    /// Oriented so that `resultant(x - a, x - b) = b - a`.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        let r = resultant(self, other);
        match (self.degree(), other.degree()) {
            (Some(d1), Some(d2)) if d1 % 2 == 1 && d2 % 2 == 1 => -r,
            _ => r,
        }
    }

    /// Discriminant: `(-1)^(d(d-1)/2) * resultant(p, p') / lc(p)`, with the
    /// degree-1 case fixed to 1 by convention.
    pub fn discriminant(&self) -> BigInt {
        let d = self
            .degree()
            .expect("discriminant requires a nonzero polynomial");
        assert!(d >= 1, "discriminant requires degree >= 1");
        if d == 1 {
            return BigInt::one();
        }
        let res = resultant(self, &self.derivative());
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let num = BigInt::from(sign) * res;
        let (q, r) = num_integer::Integer::div_rem(&num, &self.leading());
        debug_assert!(r.is_zero());
        q
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`, all integral.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    debug_assert!(da >= db);
    let lb = b.leading();
    let mut rem = a.coeffs.clone();
    for i in (db..=da).rev() {
        // scale everything below the current degree, then eliminate it
        let c = rem[i].clone();
        for (j, r) in rem.iter_mut().enumerate() {
            if j == i {
                continue;
            }
            *r *= &lb;
        }
        rem[i] = BigInt::zero();
        if !c.is_zero() {
            for j in 0..db {
                rem[i - db + j] -= &c * &b.coeffs[j];
            }
        }
    }
    IntPoly { coeffs: rem }.normalized()
}

/// Subresultant PRS resultant (Cohen, Algorithm 3.3.7).
fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    if p.is_zero() || q.is_zero() {
        return BigInt::zero();
    }
    if p.degree() == Some(0) {
        return p.leading().pow(q.degree().unwrap() as u32);
    }
    if q.degree() == Some(0) {
        return q.leading().pow(p.degree().unwrap() as u32);
    }

    let mut a;
    let mut b;
    let mut sign = 1i8;
    if p.degree() >= q.degree() {
        a = p.clone();
        b = q.clone();
    } else {
        a = q.clone();
        b = p.clone();
        if p.degree().unwrap() % 2 == 1 && q.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
    }

    let ca = a.content();
    let cb = b.content();
    a = exact_scale_down(&a, &ca);
    b = exact_scale_down(&b, &cb);
    let acc_num = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let d = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * h.pow(d);
        b = exact_scale_down(&r, &divisor);
        g = a.leading();
        // h <- g^d / h^(d-1), exact by the subresultant theory
        h = if d == 0 {
            h
        } else {
            exact_div(&g.pow(d), &h.pow(d - 1))
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => break,
            Some(_) => {}
        }
    }
    // deg b == 0: resultant = s * acc * lc(b)^(deg a) / h^(deg a - 1)
    let da = a.degree().unwrap() as u32;
    let t = exact_div(&b.leading().pow(da), &h.pow(da.saturating_sub(1)));
    BigInt::from(sign) * acc_num * t
}

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(num, den);
    debug_assert!(r.is_zero(), "exact_div left remainder");
    q
}

fn exact_scale_down(p: &IntPoly, den: &BigInt) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    if den.is_one() {
        return p.clone();
    }
    IntPoly {
        coeffs: p.coeffs.iter().map(|c| exact_div(c, den)).collect(),
    }
}

/// Dense polynomial over exact rationals, ascending degree, used for field
/// arithmetic in `Q(rho(n))`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly {
            coeffs: (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        }
        .normalized()
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly {
            coeffs: (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        }
        .normalized()
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly { coeffs: out }.normalized()
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn divmod(&self, den: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dd = den.degree().unwrap();
        if self.coeffs.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let inv_lead = den.leading().recip();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigRational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = std::mem::replace(&mut rem[i + dd], BigRational::zero()) * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for j in 0..dd {
                let t = &c * &den.coeffs[j];
                rem[i + j] -= t;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (
            RatPoly { coeffs: quot }.normalized(),
            RatPoly { coeffs: rem }.normalized(),
        )
    }

    /// Extended Euclidean algorithm: returns `(g, s, t)` with
    /// `s*self + t*other = g` and `g` monic (or zero).
    pub fn extended_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading().recip();
        let scale = BigRational::from(lead);
        (r0.scale(&scale), s0.scale(&scale), t0.scale(&scale))
    }

    /// True iff every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPoly::from_coeffs(
            self.coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "RatPoly[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn mul_examples() {
        // (x-1)(x+1) = x^2 - 1
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), p(&[-1, 0, 1]));
        // (x^2-2)(x^8-8x^6+19x^4-12x^2+1) = x^10-10x^8+35x^6-50x^4+25x^2-2
        let a = p(&[-2, 0, 1]);
        let b = p(&[1, 0, -12, 0, 19, 0, -8, 0, 1]);
        assert_eq!(a.mul(&b), p(&[-2, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1]));
        // additive identity
        let q = p(&[3, -1, 7]);
        assert_eq!(q.add(&IntPoly::zero()), q);
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p(&[0, 0, 1]).divmod_monic(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert_eq!(r, p(&[1]));

        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[-1, 1])),
            Err(PolyError::NonzeroRemainder)
        );
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
        let q = p(&[4, -3, 0, 2]);
        assert_eq!(q.compose(&IntPoly::x()), q);
    }

    #[test]
    fn resultant_examples() {
        // resultant(x - a, x - b) = b - a
        for a in -4i64..4 {
            for b in -4i64..4 {
                assert_eq!(
                    p(&[-a, 1]).resultant(&p(&[-b, 1])),
                    BigInt::from(b - a),
                    "a={a} b={b}"
                );
            }
        }
        // 2x2 Sylvester by hand: res(x^2 - 2, 2x) = -8
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[0, 2])), BigInt::from(-8));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[2, 1]).discriminant(), BigInt::one());
        assert_eq!(p(&[-1, -1, 1]).discriminant(), BigInt::from(5));
        assert_eq!(p(&[2, 0, -4, 0, 1]).discriminant(), BigInt::from(2048));
        // squareful polynomial: (x-1)^2 (x+2) has discriminant 0
        let sq = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(sq.discriminant(), BigInt::zero());
        let sep = p(&[-1, 1]).mul(&p(&[2, 1]));
        assert_ne!(sep.discriminant(), BigInt::zero());
    }

    #[test]
    fn eval_examples() {
        use num_bigint::BigInt;
        assert_eq!(
            p(&[-2, 0, 1]).eval_rational(&BigRational::zero()),
            BigRational::from_integer(BigInt::from(-2))
        );
        // C(5, x) at the Fibonacci convergent 987/610 is tiny but nonzero
        let c5 = p(&[-1, -1, 1]);
        let v = BigRational::new(BigInt::from(987), BigInt::from(610));
        let r = c5.eval_rational(&v);
        assert!(!r.is_zero());
        assert!(r.abs() < BigRational::new(BigInt::one(), BigInt::from(100_000)));
        assert_eq!(p(&[-1, -3, 0, 1]).derivative(), p(&[-3, 0, 3]));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-9i64..=9, 0..=13).prop_map(|v| IntPoly::from_i64(&v))
    }

    fn monic_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-9i64..=9, 1..=8).prop_map(|mut v| {
            v.push(1);
            IntPoly::from_i64(&v)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn divmod_round_trip(a in small_poly(), m in monic_poly()) {
            let (q, r) = a.divmod_monic(&m);
            prop_assert_eq!(m.mul(&q).add(&r), a);
            if let Some(rd) = r.degree() {
                prop_assert!(rd < m.degree().unwrap());
            }
        }

        #[test]
        fn resultant_swap_symmetry(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let lhs = a.resultant(&b);
            let sign = if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 { -1 } else { 1 };
            prop_assert_eq!(lhs, BigInt::from(sign) * b.resultant(&a));
        }

        #[test]
        fn rat_divmod_round_trip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (ar, br) = (a.to_rat(), b.to_rat());
            let (q, r) = ar.divmod(&br);
            prop_assert_eq!(br.mul(&q).add(&r), ar);
        }
    }
}
