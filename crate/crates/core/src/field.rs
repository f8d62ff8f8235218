//! Exact coefficient domains.
//!
//! Arithmetic goes through a *context* value implementing [`Ring`] or
//! [`Field`]; elements are plain data. For the rationals the context is a
//! zero-sized marker, for `F_p` it carries the modulus, so prime-field
//! elements stay a single machine word.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus for finite-field oracles.
pub const DEFAULT_PRIME: u32 = 32003;

/// A commutative ring with exact division where it exists.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `a / b` when `b` divides `a` exactly, `None` otherwise.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Renders an element in the polynomial text grammar.
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {
    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic(&self) -> u64;

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Image of a rational number; fails when the denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// The element as a rational number, when the field embeds in `Q`.
    fn to_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }

    /// Nonzero scalar `c` making `c * coeffs` canonical: the first nonzero
    /// entry becomes 1. Fields with a notion of integrality override this.
    fn canonical_scale(&self, coeffs: &[Self::Elem]) -> Self::Elem {
        match coeffs.iter().find(|c| !self.is_zero(c)) {
            Some(c) => self.inv(c).expect("nonzero"),
            None => self.one(),
        }
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        format_rational(a)
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
}

impl Field for Rationals {
    fn characteristic(&self) -> u64 {
        0
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    /// Scales to coprime integers with the first nonzero entry positive.
    fn canonical_scale(&self, coeffs: &[BigRational]) -> BigRational {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in coeffs {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        let first = coeffs.iter().find(|c| !c.is_zero()).unwrap();
        let scale = BigRational::new(den, num);
        if first.is_negative() {
            -scale
        } else {
            scale
        }
    }
}

/// Canonical `a/b` (or `a`) rendering of a rational.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn rational(num: i64, den: i64) -> Result<BigRational> {
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Element of a prime field; the modulus lives in the [`PrimeField`] context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u32);

impl Fp {
    /// Canonical representative in `[0, p)`.
    pub fn value(self) -> u32 {
        self.0
    }
}

/// The prime field `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    /// Element from an arbitrary integer, reduced mod `p`.
    pub fn elem(&self, n: i64) -> Fp {
        Fp(n.rem_euclid(self.p as i64) as u32)
    }

    /// Fails with [`Error::ModulusMismatch`] unless both contexts agree.
    pub fn ensure_same(&self, other: &PrimeField) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch { left: self.p as u64, right: other.p as u64 })
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: Fp) -> i64 {
        let v = a.0 as i64;
        if v > self.p as i64 / 2 {
            v - self.p as i64
        } else {
            v
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Ring for PrimeField {
    type Elem = Fp;

    #[inline]
    fn zero(&self) -> Fp {
        Fp(0)
    }
    #[inline]
    fn one(&self) -> Fp {
        Fp(1)
    }
    fn from_i64(&self, n: i64) -> Fp {
        self.elem(n)
    }
    #[inline]
    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }
    #[inline]
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        Fp(if s >= p { s - p } else { s } as u32)
    }
    #[inline]
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        if a.0 >= b.0 {
            Fp(a.0 - b.0)
        } else {
            Fp(a.0 + (self.p - b.0))
        }
    }
    #[inline]
    fn neg(&self, a: &Fp) -> Fp {
        if a.0 == 0 {
            *a
        } else {
            Fp(self.p - a.0)
        }
    }
    #[inline]
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }
    fn div_exact(&self, a: &Fp, b: &Fp) -> Option<Fp> {
        self.div(a, b).ok()
    }
    fn format_elem(&self, a: &Fp) -> String {
        self.signed(*a).to_string()
    }
}

impl Field for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn inv(&self, a: &Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        modular_inverse(a.0 as i64, self.p as u64).map(|v| Fp(v as u32))
    }
    fn from_rational(&self, q: &BigRational) -> Result<Fp> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().expect("reduced below p");
        let den = q.denom().mod_floor(&p).to_u64().expect("reduced below p");
        if den == 0 {
            return Err(Error::NotRepresentable(format_rational(q)));
        }
        let den_inv = modular_inverse(den as i64, self.p as u64)?;
        Ok(Fp(((num * den_inv) % self.p as u64) as u32))
    }
}

/// Primes below `bound`, largest first.
pub fn primes_below(bound: u64) -> impl Iterator<Item = u64> {
    (2..bound).rev().filter(|&n| is_prime(n))
}

/// Chinese remaindering: the `x` in `[0, m*p)` with `x = a mod m` and `x = b mod p`.
pub fn crt_step(a: &BigInt, m: &BigInt, b: u64, p: u64) -> Result<BigInt> {
    let pb = BigInt::from(p);
    let a_mod = a.mod_floor(&pb).to_i64().expect("below p");
    let m_mod = m.mod_floor(&pb).to_i64().expect("below p");
    let m_inv = modular_inverse(m_mod, p)?;
    let k = ((b as i128 - a_mod as i128).rem_euclid(p as i128) * m_inv as i128) % p as i128;
    Ok(a + m * BigInt::from(k))
}

/// The fraction `r/s` with `|r|, |s| <= sqrt(m/2)` congruent to `a` mod `m`, if any.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Inverse of `a` modulo the prime `p` by the extended Euclidean algorithm.
pub fn modular_inverse(a: i64, p: u64) -> Result<u64> {
    let m = p as i128;
    let a_red = (a as i128).rem_euclid(m);
    if a_red == 0 {
        return Err(Error::NotInvertible(a, p));
    }
    let (mut r0, mut r1) = (m, a_red);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible(a, p));
    }
    Ok(t0.rem_euclid(m) as u64)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_sum() {
        let q = Rationals;
        let s = q.add(&rational(1, 2).unwrap(), &rational(1, 3).unwrap());
        assert_eq!(s, rational(5, 6).unwrap());
        assert_eq!(format_rational(&s), "5/6");
    }

    #[test]
    fn rational_normalizes_on_construction() {
        let h = rational(2, 4).unwrap();
        assert_eq!(h.numer(), &BigInt::from(1));
        assert_eq!(h.denom(), &BigInt::from(2));
        let z = rational(0, -7).unwrap();
        assert_eq!(z.denom(), &BigInt::from(1));
        assert!(rational(1, 0).is_err());
    }

    #[test]
    fn inverse_in_f7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(&f.elem(3)).unwrap(), f.elem(5));
        assert_eq!(f.div(&f.elem(1), &f.elem(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn modular_inverse_examples() {
        assert_eq!(modular_inverse(1, 32003).unwrap(), 1);
        assert_eq!(modular_inverse(2, 32003).unwrap(), 16002);
        assert_eq!((2 * 16002) % 32003, 1);
        assert!(modular_inverse(0, 32003).is_err());
        assert!(modular_inverse(32003, 32003).is_err());
    }

    #[test]
    fn crt_and_reconstruction() {
        let target = rational(-17, 12).unwrap();
        let mut m = BigInt::one();
        let mut a = BigInt::zero();
        for p in primes_below(1000).take(3) {
            let b = PrimeField::new(p).unwrap().from_rational(&target).unwrap().value() as u64;
            a = crt_step(&a, &m, b, p).unwrap();
            m *= p;
        }
        assert_eq!(rational_reconstruction(&a, &m), Some(target));
        assert_eq!(primes_below(20).collect::<Vec<_>>(), vec![19, 17, 13, 11, 7, 5, 3, 2]);
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = PrimeField::new(7).unwrap();
        let b = PrimeField::new(11).unwrap();
        assert_eq!(a.ensure_same(&b), Err(Error::ModulusMismatch { left: 7, right: 11 }));
        assert!(a.ensure_same(&a).is_ok());
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = PrimeField::default();
        let half = f.from_rational(&rational(1, 2).unwrap()).unwrap();
        assert_eq!(half, f.elem(16002));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(32003));
        assert!(f.from_rational(&bad).is_err());
        assert_eq!(f.format_elem(&f.elem(-3)), "-3");
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rational(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            let q = Rationals;
            prop_assert_eq!(q.add(&q.add(&a, &b), &c), q.add(&a, &q.add(&b, &c)));
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            if !a.is_zero() {
                prop_assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
            }
        }

        #[test]
        fn prime_field_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let f = PrimeField::default();
            let (a, b, c) = (f.elem(a), f.elem(b), f.elem(c));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.sub(&f.add(&a, &b), &b), a);
            if !f.is_zero(&a) {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }

        #[test]
        fn canonical_scale_gives_primitive_integers(v in prop::collection::vec(small_rational(), 1..6)) {
            let q = Rationals;
            prop_assume!(v.iter().any(|c| !c.is_zero()));
            let c = q.canonical_scale(&v);
            let w: Vec<_> = v.iter().map(|x| x * &c).collect();
            prop_assert!(w.iter().all(|x| x.is_integer()));
            let g = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
            prop_assert!(g.is_one());
            prop_assert!(w.iter().find(|x| !x.is_zero()).unwrap().is_positive());
        }

        #[test]
        fn normalization_idempotent(n in -1000i64..1000, d in 1i64..1000) {
            let x = rational(n, d).unwrap();
            let again = BigRational::new(x.numer().clone(), x.denom().clone());
            prop_assert_eq!(&again, &x);
            prop_assert!(x.numer().gcd(x.denom()).is_one());
        }
    }
}
