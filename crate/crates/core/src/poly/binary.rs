use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Ring};

use super::multi::{MultiPoly, PolyRing};
use super::profile::MultiplicityProfile;
use super::resultant::sylvester_resultant;
use super::univariate::UniPoly;

/// Homogeneous form `sum_i coeffs[i] * s^(m-i) * t^i` of declared degree `m`.
///
/// The zero form keeps its declared degree.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// `unit * prod parts[i].0 ^ parts[i].1` with squarefree, pairwise coprime parts
/// sorted by multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct BinarySquarefree<F: Field> {
    pub unit: F::Elem,
    pub parts: Vec<(BinaryForm<F>, u32)>,
}

impl<R: Ring> BinaryForm<R> {
    /// `coeffs[i]` multiplies `s^(m-i) t^i`; `m = coeffs.len() - 1`.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { ring, coeffs }
    }

    pub fn zero(ring: R, degree: usize) -> Self {
        let coeffs = vec![ring.zero(); degree + 1];
        BinaryForm { ring, coeffs }
    }

    pub fn from_ints(ring: R, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&v| ring.from_i64(v)).collect();
        Self::new(ring, c)
    }

    /// `s^a t^b`
    pub fn monomial(ring: R, a: usize, b: usize) -> Self {
        let mut f = Self::zero(ring, a + b);
        f.coeffs[b] = f.ring.one();
        f
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::Invalid("binary forms of different degrees".into()));
        }
        let r = &self.ring;
        Ok(Self::new(r.clone(), self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| r.add(a, b)).collect()))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = &self.ring;
        Self::new(r.clone(), self.coeffs.iter().map(|a| r.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        Self::new(r.clone(), out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::new(self.ring.clone(), vec![self.ring.one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, s: &R::Elem, t: &R::Elem) -> R::Elem {
        let r = &self.ring;
        let m = self.degree() as u32;
        let mut acc = r.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = r.mul(c, &r.mul(&r.pow(s, m - i as u32), &r.pow(t, i as u32)));
            acc = r.add(&acc, &term);
        }
        acc
    }

    /// `dF/ds`, declared degree `m - 1` (degree-0 forms differentiate to the zero constant).
    pub fn derivative_s(&self) -> Self {
        let r = &self.ring;
        let m = self.degree();
        if m == 0 {
            return Self::zero(r.clone(), 0);
        }
        let c = (0..m).map(|i| r.mul(&self.coeffs[i], &r.from_i64((m - i) as i64))).collect();
        Self::new(r.clone(), c)
    }

    /// `dF/dt`, declared degree `m - 1`.
    pub fn derivative_t(&self) -> Self {
        let r = &self.ring;
        let m = self.degree();
        if m == 0 {
            return Self::zero(r.clone(), 0);
        }
        let c = (1..=m).map(|i| r.mul(&self.coeffs[i], &r.from_i64(i as i64))).collect();
        Self::new(r.clone(), c)
    }

    /// Sylvester resultant at the declared degrees.
    ///
    /// A zero result means a common root over the closure, or that both
    /// leading coefficients vanish (a joint root at `(1:0)`).
    pub fn resultant(&self, other: &Self) -> Result<R::Elem> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(sylvester_resultant(&self.ring, &self.coeffs, &other.coeffs))
    }

    /// `Res(dF/ds, dF/dt)`; used only as a vanishing test for repeated roots.
    pub fn discriminant(&self) -> Result<R::Elem> {
        self.derivative_s().resultant(&self.derivative_t())
    }

    /// Maps coefficients through `f` into another ring.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> BinaryForm<S> {
        BinaryForm::new(ring, self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> BinaryForm<F> {
    /// Reads a polynomial homogeneous in variables `s`, `t` of `poly`'s ring
    /// (other variables must not occur) as a form of degree `degree`.
    pub fn from_poly(poly: &MultiPoly<F>, s: usize, t: usize, degree: usize) -> Result<Self> {
        let field = poly.field().clone();
        let mut coeffs = vec![field.zero(); degree + 1];
        for (m, c) in poly.terms() {
            let e = m.exponents();
            let other = e.iter().enumerate().any(|(i, &k)| i != s && i != t && k > 0);
            if other || (e[s] + e[t]) as usize != degree {
                return Err(Error::NotHomogeneous);
            }
            coeffs[e[t] as usize] = c.clone();
        }
        Ok(Self::new(field, coeffs))
    }

    /// The form as a polynomial in a ring with variables `s`, `t`.
    pub fn to_poly(&self, ring: &PolyRing<F>) -> MultiPoly<F> {
        assert_eq!(ring.nvars(), 2);
        let m = self.degree() as u32;
        let mut out = ring.zero_poly();
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = ring.term(vec![m - i as u32, i as u32], c.clone());
            out = &out + &term;
        }
        out
    }

    /// Dehomogenization `F(x, 1)`.
    pub fn to_univariate(&self) -> UniPoly<F> {
        UniPoly::new(self.ring.clone(), self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenizes `p` to the given degree (which must be at least `deg p`).
    pub fn from_univariate(p: &UniPoly<F>, degree: usize) -> Self {
        let f = p.field().clone();
        let mut coeffs = vec![f.zero(); degree + 1];
        for (j, c) in p.coeffs().iter().enumerate() {
            coeffs[degree - j] = c.clone();
        }
        Self::new(f, coeffs)
    }

    /// Multiplicity of the root `(1:0)`, i.e. the largest `k` with `t^k | F`.
    fn t_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    fn check_characteristic(&self) -> Result<()> {
        let p = self.ring.characteristic();
        let m = self.degree();
        if p != 0 && p <= m as u64 {
            return Err(Error::CharacteristicTooSmall { characteristic: p, degree: m });
        }
        Ok(())
    }

    /// Squarefree decomposition over the closure's point set `P^1`.
    pub fn squarefree_decomposition(&self) -> Result<BinarySquarefree<F>> {
        self.check_characteristic()?;
        let k = self.t_order().ok_or(Error::ZeroForm)?;
        let uni = self.to_univariate();
        let usq = uni.squarefree_decomposition()?;
        let mut parts: Vec<(BinaryForm<F>, u32)> = usq
            .parts
            .iter()
            .map(|(p, m)| (Self::from_univariate(p, p.degree().unwrap()), *m))
            .collect();
        if k > 0 {
            let t = Self::monomial(self.ring.clone(), 0, 1);
            match parts.iter_mut().find(|(_, m)| *m as usize == k) {
                Some(entry) => entry.0 = entry.0.mul(&t),
                None => parts.push((t, k as u32)),
            }
            parts.sort_by_key(|(_, m)| *m);
        }
        Ok(BinarySquarefree { unit: usq.unit, parts })
    }

    pub fn multiplicity_profile(&self) -> Result<MultiplicityProfile> {
        let sq = self.squarefree_decomposition()?;
        let pairs: Vec<(u32, u32)> = sq.parts.iter().map(|(p, m)| (*m, p.degree() as u32)).collect();
        Ok(MultiplicityProfile::from_pairs(&pairs))
    }

    /// Normalized gcd: monic in `s` after removing the `t`-power, which is reattached.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.t_order(), other.t_order()) {
            (None, None) => Err(Error::ZeroForm),
            (None, Some(_)) => Ok(other.normalized()),
            (Some(_), None) => Ok(self.normalized()),
            (Some(a), Some(b)) => {
                let g = self.to_univariate().gcd(&other.to_univariate());
                let gd = g.degree().unwrap();
                let base = Self::from_univariate(&g, gd);
                let k = a.min(b);
                Ok(base.mul(&Self::monomial(self.ring.clone(), 0, k)))
            }
        }
    }

    fn normalized(&self) -> Self {
        let k = self.t_order().expect("nonzero form");
        let g = self.to_univariate().monic();
        let base = Self::from_univariate(&g, g.degree().unwrap());
        base.mul(&Self::monomial(self.ring.clone(), 0, k))
    }

    /// `self / divisor` when the quotient is a form of degree `m - n`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let m = self.degree();
        let n = divisor.degree();
        if n > m || divisor.is_zero() {
            return None;
        }
        let q = self.to_univariate().div_exact(&divisor.to_univariate())?;
        if q.degree().is_some_and(|d| d > m - n) {
            return None;
        }
        Some(Self::from_univariate(&q, m - n))
    }
}

impl<F: Field> BinarySquarefree<F> {
    pub fn expand(&self, field: &F) -> BinaryForm<F> {
        let mut acc = BinaryForm::new(field.clone(), vec![self.unit.clone()]);
        for (p, m) in &self.parts {
            acc = acc.mul(&p.pow(*m));
        }
        acc
    }
}

impl<R: Ring> fmt::Display for BinaryForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            let mut s = self.ring.format_elem(c);
            let compound = s.contains(' ');
            let neg = !compound && s.starts_with('-');
            if neg {
                s.remove(0);
            }
            if compound {
                s = format!("({s})");
            }
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mut mono = Vec::new();
            match m - i {
                0 => {}
                1 => mono.push("s".to_string()),
                e => mono.push(format!("s^{e}")),
            }
            match i {
                0 => {}
                1 => mono.push("t".to_string()),
                e => mono.push(format!("t^{e}")),
            }
            if mono.is_empty() {
                write!(f, "{s}")?;
            } else if s == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{s}*{}", mono.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::multi::PolyRing;
    use crate::poly::parse::parse_poly;
    use proptest::prelude::*;

    fn bf(c: &[i64]) -> BinaryForm<Rationals> {
        BinaryForm::from_ints(Rationals, c)
    }

    #[test]
    fn resultant_examples() {
        // Res(s^2, s t) = 0
        assert!(Rationals.is_zero(&bf(&[1, 0, 0]).resultant(&bf(&[0, 1, 0])).unwrap()));
        assert!(bf(&[0, 0]).resultant(&bf(&[0, 0])).is_err());
        // Res(s - t, s + t) = 2
        assert_eq!(bf(&[1, -1]).resultant(&bf(&[1, 1])).unwrap(), Rationals.from_i64(2));
    }

    #[test]
    fn symbolic_cubic_resultant() {
        let names = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"];
        let r = PolyRing::new(Rationals, &names);
        let a = BinaryForm::new(r.clone(), (0..4).map(|i| r.var(i)).collect());
        let b = BinaryForm::new(r.clone(), (4..8).map(|i| r.var(i)).collect());
        let res = a.resultant(&b).unwrap();
        assert!(res.is_homogeneous());
        assert_eq!(res.total_degree(), Some(6));
        // specializing to s^3 and t^3 gives a unit
        let q = Rationals;
        let mut point = vec![q.zero(); 8];
        point[0] = q.one();
        point[7] = q.one();
        assert_eq!(res.eval(&point), q.one());
        // and to a pair with the common root (1:1) gives zero
        let vals = [1, -1, 0, 0, 2, 0, -3, 1];
        let point: Vec<_> = vals.iter().map(|&v| q.from_i64(v)).collect();
        assert!(q.is_zero(&res.eval(&point)));
        let expected_term = parse_poly(&r, "a0^3*b3^3").unwrap();
        let (lm, _) = expected_term.leading_term().unwrap();
        assert_eq!(res.coeff(lm), q.from_i64(1));
    }

    #[test]
    fn squarefree_of_monomial() {
        // s^2 t^3
        let f = BinaryForm::monomial(Rationals, 2, 3);
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq.parts, vec![(bf(&[1, 0]), 2), (bf(&[0, 1]), 3)]);
    }

    #[test]
    fn profile_examples() {
        assert_eq!(bf(&[1, 0, 1]).multiplicity_profile().unwrap(), MultiplicityProfile::from_pairs(&[(1, 2)]));
        assert_eq!(bf(&[0, 0, -1]).multiplicity_profile().unwrap(), MultiplicityProfile::from_pairs(&[(2, 1)]));
        // s t (s - t)^2
        let f = bf(&[0, 1, 0]).mul(&bf(&[1, -1]).pow(2));
        assert_eq!(f.multiplicity_profile().unwrap(), MultiplicityProfile::from_pairs(&[(1, 2), (2, 1)]));
        assert_eq!(bf(&[0, 0, 0]).multiplicity_profile(), Err(Error::ZeroForm));
    }

    #[test]
    fn gcd_and_division() {
        let g = bf(&[0, 1, 0, 0]).gcd(&bf(&[0, 0, 1, 0])).unwrap();
        assert_eq!(g, bf(&[0, 1, 0]));
        let g = bf(&[0, 0, 1]).gcd(&bf(&[0, 0, 0, 1])).unwrap();
        assert_eq!(g, bf(&[0, 0, 1]));
        assert_eq!(bf(&[1, 0, -1]).div_exact(&bf(&[1, 1])).unwrap(), bf(&[1, -1]));
        assert!(bf(&[1, 0]).div_exact(&bf(&[0, 1])).is_none());
    }

    #[test]
    fn discriminant_detects_double_root() {
        let q = Rationals;
        assert!(q.is_zero(&bf(&[1, -2, 1]).discriminant().unwrap()));
        assert!(!q.is_zero(&bf(&[1, 0, -1]).discriminant().unwrap()));
    }

    fn small_form(deg: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-6i64..6, deg + 1)
    }

    proptest! {
        #[test]
        fn resultant_antisymmetry(a in small_form(2), b in small_form(3)) {
            let f = PrimeField::default();
            let fa = BinaryForm::from_ints(f, &a);
            let fb = BinaryForm::from_ints(f, &b);
            prop_assume!(!fa.is_zero() || !fb.is_zero());
            let r1 = fa.resultant(&fb).unwrap();
            let r2 = fb.resultant(&fa).unwrap();
            // (-1)^(2*3) = 1
            prop_assert_eq!(r1, r2);
            let fc = BinaryForm::from_ints(f, &b[..2]);
            prop_assume!(!fc.is_zero());
            let r3 = fa.resultant(&fc).unwrap();
            let r4 = fc.resultant(&fa).unwrap();
            prop_assert_eq!(r3, r4);
            let fd = BinaryForm::from_ints(f, &a[..2]);
            prop_assume!(!fd.is_zero());
            let r5 = fd.resultant(&fb).unwrap();
            let r6 = fb.resultant(&fd).unwrap();
            prop_assert_eq!(r5, f.neg(&r6));
        }

        #[test]
        fn resultant_multiplicative(a in small_form(2), b in small_form(1), c in small_form(2)) {
            let f = PrimeField::default();
            let fa = BinaryForm::from_ints(f, &a);
            let fb = BinaryForm::from_ints(f, &b);
            let fc = BinaryForm::from_ints(f, &c);
            prop_assume!(!fa.is_zero());
            let lhs = fa.resultant(&fb.mul(&fc)).unwrap();
            let rhs = f.mul(&fa.resultant(&fb).unwrap(), &fa.resultant(&fc).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn profile_weights_sum_to_degree(a in small_form(5)) {
            let f = PrimeField::default();
            let fa = BinaryForm::from_ints(f, &a);
            prop_assume!(!fa.is_zero());
            let p = fa.multiplicity_profile().unwrap();
            prop_assert_eq!(p.degree() as usize, fa.degree());
            let sq = fa.squarefree_decomposition().unwrap();
            prop_assert_eq!(sq.expand(&f), fa);
        }
    }
}
