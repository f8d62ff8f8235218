use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial, coefficients stored from the constant term up.
/// The coefficient vector never ends in a zero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// `unit * prod parts[i].0 ^ parts[i].1`, parts squarefree, pairwise coprime,
/// sorted by multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct UniSquarefree<F: Field> {
    pub unit: F::Elem,
    pub parts: Vec<(UniPoly<F>, u32)>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    /// `x - a`
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let c = vec![field.neg(a), field.one()];
        Self::new(field, c)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f.clone(), (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(f.clone(), (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, a)| f.mul(a, &f.from_i64(i as i64))).collect();
        Self::new(f.clone(), c)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let lc = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let lc_inv = f.inv(lc)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lc_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, b));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Quotient when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    fn check_characteristic(&self, degree: usize) -> Result<()> {
        let p = self.field.characteristic();
        if p != 0 && p <= degree as u64 {
            return Err(Error::CharacteristicTooSmall { characteristic: p, degree });
        }
        Ok(())
    }

    /// Yun's squarefree decomposition.
    ///
    /// Refuses fields whose characteristic does not exceed the degree, since
    /// derivatives there can vanish on non-constant polynomials.
    pub fn squarefree_decomposition(&self) -> Result<UniSquarefree<F>> {
        let deg = self.degree().ok_or(Error::ZeroForm)?;
        self.check_characteristic(deg)?;
        let unit = self.leading_coeff().unwrap().clone();
        let mut parts = Vec::new();
        if deg == 0 {
            return Ok(UniSquarefree { unit, parts });
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = fp.div_exact(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                parts.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides b");
            let c = d.div_exact(&a).expect("gcd divides d");
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(UniSquarefree { unit, parts })
    }
}

impl<F: Field> UniSquarefree<F> {
    pub fn expand(&self, field: &F) -> UniPoly<F> {
        let mut acc = UniPoly::constant(field.clone(), self.unit.clone());
        for (p, m) in &self.parts {
            acc = acc.mul(&p.pow(*m));
        }
        acc
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let mut s = self.field.format_elem(c);
            let neg = s.starts_with('-');
            if neg {
                s.remove(0);
            }
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{s}")?;
            } else if s == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{s}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Ring};
    use proptest::prelude::*;

    fn q(c: &[i64]) -> UniPoly<Rationals> {
        UniPoly::new(Rationals, c.iter().map(|&v| Rationals.from_i64(v)).collect())
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])), q(&[-1, 1]));
        assert_eq!(q(&[4, 0, 2]).gcd(&UniPoly::zero(Rationals)), q(&[2, 0, 1]));
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2)
        let f = q(&[-1, 1]).pow(2).mul(&q(&[2, 1]));
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq.parts, vec![(q(&[2, 1]), 1), (q(&[-1, 1]), 2)]);
        let g = q(&[-3, 1, 2]);
        let sq = g.squarefree_decomposition().unwrap();
        assert_eq!(sq.parts, vec![(g.monic(), 1)]);
        assert_eq!(sq.expand(&Rationals), g);
    }

    #[test]
    fn small_characteristic_refused() {
        let f7 = PrimeField::new(7).unwrap();
        let x7 = UniPoly::new(f7, (0..8).map(|i| f7.elem(if i == 7 { 1 } else { 0 })).collect());
        assert!(matches!(x7.squarefree_decomposition(), Err(Error::CharacteristicTooSmall { .. })));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = q(&[5, -3, 0, 2, 7]);
        let b = q(&[1, 2, 3]);
        let (qq, r) = a.divrem(&b).unwrap();
        assert_eq!(qq.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.divrem(&UniPoly::zero(Rationals)), Err(Error::DivisionByZero));
    }

    proptest! {
        #[test]
        fn squarefree_reconstructs(roots in prop::collection::vec((-5i64..5, 1u32..4), 1..4), lc in 1i64..5) {
            let f = PrimeField::default();
            let mut p = UniPoly::constant(f, f.elem(lc));
            for (r, m) in &roots {
                p = p.mul(&UniPoly::linear_root(f, &f.elem(*r)).pow(*m));
            }
            let sq = p.squarefree_decomposition().unwrap();
            prop_assert_eq!(sq.expand(&f), p.clone());
            for (part, _) in &sq.parts {
                prop_assert!(part.is_squarefree());
            }
            let total: usize = sq.parts.iter().map(|(q, m)| q.degree().unwrap() * *m as usize).sum();
            prop_assert_eq!(total, p.degree().unwrap());
        }
    }
}
