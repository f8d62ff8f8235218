use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Ring};

use super::monomial::Monomial;

#[derive(Debug)]
struct RingInner<F> {
    field: F,
    vars: Vec<String>,
}

/// Polynomial ring `F[x_0, ..., x_{n-1}]` with named variables.
///
/// Cheap to clone; equal rings compare equal even when built separately.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    inner: Arc<RingInner<F>>,
}

impl<F: Field> Clone for PolyRing<F> {
    fn clone(&self) -> Self {
        PolyRing { inner: Arc::clone(&self.inner) }
    }
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field && self.inner.vars == other.inner.vars)
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str]) -> Self {
        Self::with_names(field, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn with_names(field: F, vars: Vec<String>) -> Self {
        PolyRing { inner: Arc::new(RingInner { field, vars }) }
    }

    /// Ring with variables `prefix0, prefix1, ...`.
    pub fn indexed(field: F, prefix: &str, n: usize) -> Self {
        Self::with_names(field, (0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn field(&self) -> &F {
        &self.inner.field
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub fn zero_poly(&self) -> MultiPoly<F> {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F> {
        let mut p = self.zero_poly();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    pub fn int(&self, n: i64) -> MultiPoly<F> {
        self.constant(self.field().from_i64(n))
    }

    pub fn var(&self, i: usize) -> MultiPoly<F> {
        assert!(i < self.nvars(), "variable index {i} out of range");
        let mut p = self.zero_poly();
        p.add_term(Monomial::var(self.nvars(), i), self.field().one());
        p
    }

    /// Single term `c * x^exps`.
    pub fn term(&self, exps: Vec<u32>, c: F::Elem) -> MultiPoly<F> {
        assert_eq!(exps.len(), self.nvars());
        let mut p = self.zero_poly();
        p.add_term(Monomial::from_exponents(exps), c);
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> MultiPoly<F> {
        assert_eq!(coeffs.len(), self.nvars());
        let mut p = self.zero_poly();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(self.nvars(), i), c.clone());
        }
        p
    }

    /// All monomials of total degree exactly `d`, in ascending grevlex order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = MultiPoly<F>;

    fn zero(&self) -> MultiPoly<F> {
        self.zero_poly()
    }
    fn one(&self) -> MultiPoly<F> {
        self.int(1)
    }
    fn from_i64(&self, n: i64) -> MultiPoly<F> {
        self.int(n)
    }
    fn is_zero(&self, a: &MultiPoly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a + b
    }
    fn sub(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a - b
    }
    fn neg(&self, a: &MultiPoly<F>) -> MultiPoly<F> {
        -a
    }
    fn mul(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a * b
    }
    fn div_exact(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> Option<MultiPoly<F>> {
        a.div_exact(b)
    }
    fn format_elem(&self, a: &MultiPoly<F>) -> String {
        a.to_string()
    }
}

/// Sparse multivariate polynomial; terms are kept in grevlex order with no
/// stored zero coefficients.
pub struct MultiPoly<F: Field> {
    ring: PolyRing<F>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Clone for MultiPoly<F> {
    fn clone(&self) -> Self {
        MultiPoly { ring: self.ring.clone(), terms: self.terms.clone() }
    }
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the grevlex-largest down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    /// Constant coefficient value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<F::Elem> {
        match self.terms.len() {
            0 => Some(self.field().zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::Invalid("zero polynomial has no degree".into()));
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.total_degree().unwrap())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F::Elem) {
        let field = self.ring.field().clone();
        if field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = field.add(v, &c);
                if field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero_poly();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), field.mul(v, c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero_poly();
        }
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), field.mul(v, c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        self.ring.pow(self, e)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let field = self.field();
        let mut out = self.ring.zero_poly();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            *dm.exponent_mut(var) -= 1;
            out.add_term(dm, field.mul(c, &field.from_i64(e as i64)));
        }
        out
    }

    /// Polar polynomial `sum_i y_i * df/dx_i` of a nonzero homogeneous `f`.
    pub fn polar(&self, y: &[F::Elem]) -> Result<Self> {
        if y.len() != self.ring.nvars() {
            return Err(Error::Invalid(format!(
                "polar point has {} coordinates, ring has {} variables",
                y.len(),
                self.ring.nvars()
            )));
        }
        self.homogeneous_degree()?;
        let field = self.field();
        let mut out = self.ring.zero_poly();
        for (i, yi) in y.iter().enumerate() {
            if field.is_zero(yi) {
                continue;
            }
            out = &out + &self.derivative(i).scale(yi);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = field.mul(&t, &field.pow(x, e));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes `x_i -> images[i]`, producing a polynomial in the images' ring.
    pub fn compose(&self, target: &PolyRing<F>, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Invalid("wrong number of substitution images".into()));
        }
        if images.iter().any(|g| g.ring != *target) {
            return Err(Error::RingMismatch);
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly<F>>> = vec![vec![target.int(1)]; images.len()];
        let mut out = target.zero_poly();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Coefficients with respect to `var`: entry `k` collects the terms with
    /// `var^k`, with that variable's exponent cleared.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly<F>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![self.ring.zero_poly(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponents()[var] as usize;
            let mut m2 = m.clone();
            *m2.exponent_mut(var) = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    /// Moves the polynomial into `target`, sending variable `i` to `map[i]`.
    /// Variables mapped to `None` must not occur.
    pub fn remap(&self, target: &PolyRing<F>, map: &[Option<usize>]) -> Result<MultiPoly<F>> {
        if map.len() != self.ring.nvars() || target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let mut out = target.zero_poly();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += k,
                    None => {
                        return Err(Error::Invalid(format!(
                            "variable {} occurs but has no image",
                            self.ring.var_names()[i]
                        )))
                    }
                }
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly<F>) -> Option<MultiPoly<F>> {
        let (lm, lc) = divisor.leading_term()?;
        let field = self.field();
        let lc_inv = field.inv(lc).ok()?;
        let mut rem = self.clone();
        let mut quot = self.ring.zero_poly();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = field.mul(c, &lc_inv);
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.var_names();
        for (idx, (m, c)) in self.terms().enumerate() {
            let mut coeff = field.format_elem(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if mono.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> Add<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;

    /// Panics if the operands live in different rings; see [`MultiPoly::try_add`].
    fn add(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert!(self.ring == rhs.ring, "ring mismatch in polynomial addition");
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;

    fn sub(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert!(self.ring == rhs.ring, "ring mismatch in polynomial subtraction");
        let field = self.field();
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), field.neg(c));
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;

    fn mul(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert!(self.ring == rhs.ring, "ring mismatch in polynomial multiplication");
        let field = self.field();
        let mut out = self.ring.zero_poly();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), field.mul(ca, cb));
            }
        }
        out
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;

    fn neg(self) -> MultiPoly<F> {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }
}

/// Determinant of the 3x3 matrix of second partials of a ternary form.
pub fn hessian3<F: Field>(f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    if f.ring().nvars() != 3 {
        return Err(Error::Invalid("hessian3 needs a polynomial in 3 variables".into()));
    }
    let d = f.homogeneous_degree()?;
    if d < 2 {
        return Err(Error::OutOfRange { what: "degree", detail: format!("hessian3 needs degree >= 2, got {d}") });
    }
    let first: Vec<_> = (0..3).map(|i| f.derivative(i)).collect();
    let h: Vec<Vec<_>> = (0..3).map(|i| (0..3).map(|j| first[i].derivative(j)).collect()).collect();
    let minor = |a: usize, b: usize, c: usize, e: usize| &(&h[a][b] * &h[c][e]) - &(&h[a][e] * &h[c][b]);
    let t0 = &h[0][0] * &minor(1, 1, 2, 2);
    let t1 = &h[0][1] * &minor(1, 0, 2, 2);
    let t2 = &h[0][2] * &minor(1, 0, 2, 1);
    Ok(&(&t0 - &t1) + &t2)
}
