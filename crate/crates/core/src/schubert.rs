//! The Chow ring of the Grassmannian of lines in `P^3` on the Schubert basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};

/// Integer combination `c0 s0 + c1 s1 + c11 s11 + c2 s2 + c21 s21 + c22 s22`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchubertClass {
    pub c0: i64,
    pub c1: i64,
    pub c11: i64,
    pub c2: i64,
    pub c21: i64,
    pub c22: i64,
}

/// Order and class of a congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Bidegree {
    pub order: u64,
    pub class: u64,
}

impl Bidegree {
    pub fn new(order: u64, class: u64) -> Self {
        Bidegree { order, class }
    }

    pub fn swap(self) -> Self {
        Bidegree { order: self.class, class: self.order }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.order, self.class)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Basis {
    S0,
    S1,
    S11,
    S2,
    S21,
    S22,
}

const BASIS: [Basis; 6] = [Basis::S0, Basis::S1, Basis::S11, Basis::S2, Basis::S21, Basis::S22];

impl Basis {
    fn codim(self) -> u32 {
        match self {
            Basis::S0 => 0,
            Basis::S1 => 1,
            Basis::S11 | Basis::S2 => 2,
            Basis::S21 => 3,
            Basis::S22 => 4,
        }
    }

    fn class(self) -> SchubertClass {
        let mut c = SchubertClass::ZERO;
        *c.coeff_mut(self) = 1;
        c
    }
}

/// Product of two basis cycles.
fn basis_product(a: Basis, b: Basis) -> SchubertClass {
    use Basis::*;
    if a.codim() + b.codim() > 4 {
        return SchubertClass::ZERO;
    }
    match (a, b) {
        (S0, x) | (x, S0) => x.class(),
        (S1, S1) => SchubertClass { c2: 1, c11: 1, ..SchubertClass::ZERO },
        (S1, S11) | (S11, S1) | (S1, S2) | (S2, S1) => S21.class(),
        (S1, S21) | (S21, S1) => S22.class(),
        (S11, S11) | (S2, S2) => S22.class(),
        (S11, S2) | (S2, S11) => SchubertClass::ZERO,
        _ => unreachable!("codimension bound handled above"),
    }
}

impl SchubertClass {
    pub const ZERO: SchubertClass = SchubertClass { c0: 0, c1: 0, c11: 0, c2: 0, c21: 0, c22: 0 };
    pub const ONE: SchubertClass = SchubertClass { c0: 1, ..Self::ZERO };
    pub const SIGMA1: SchubertClass = SchubertClass { c1: 1, ..Self::ZERO };
    pub const SIGMA11: SchubertClass = SchubertClass { c11: 1, ..Self::ZERO };
    pub const SIGMA2: SchubertClass = SchubertClass { c2: 1, ..Self::ZERO };
    pub const SIGMA21: SchubertClass = SchubertClass { c21: 1, ..Self::ZERO };
    pub const SIGMA22: SchubertClass = SchubertClass { c22: 1, ..Self::ZERO };

    fn coeff(&self, b: Basis) -> i64 {
        match b {
            Basis::S0 => self.c0,
            Basis::S1 => self.c1,
            Basis::S11 => self.c11,
            Basis::S2 => self.c2,
            Basis::S21 => self.c21,
            Basis::S22 => self.c22,
        }
    }

    fn coeff_mut(&mut self, b: Basis) -> &mut i64 {
        match b {
            Basis::S0 => &mut self.c0,
            Basis::S1 => &mut self.c1,
            Basis::S11 => &mut self.c11,
            Basis::S2 => &mut self.c2,
            Basis::S21 => &mut self.c21,
            Basis::S22 => &mut self.c22,
        }
    }

    pub fn scale(self, k: i64) -> Self {
        SchubertClass {
            c0: k * self.c0,
            c1: k * self.c1,
            c11: k * self.c11,
            c2: k * self.c2,
            c21: k * self.c21,
            c22: k * self.c22,
        }
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(Self::ONE, |acc, _| acc * self)
    }

    /// Codimension if the class is homogeneous and nonzero.
    pub fn codim(&self) -> Option<u32> {
        let mut codims = BASIS.iter().filter(|b| self.coeff(**b) != 0).map(|b| b.codim());
        let first = codims.next()?;
        codims.all(|c| c == first).then_some(first)
    }

    /// Only `s2` and `s11` present, both non-negative.
    pub fn is_congruence(&self) -> bool {
        self.c0 == 0 && self.c1 == 0 && self.c21 == 0 && self.c22 == 0 && self.c2 >= 0 && self.c11 >= 0
    }

    /// Swaps the roles of points and planes: `s2 <-> s11`.
    pub fn perp(self) -> Self {
        SchubertClass { c2: self.c11, c11: self.c2, ..self }
    }
}

impl Add for SchubertClass {
    type Output = SchubertClass;
    fn add(self, o: Self) -> Self {
        SchubertClass {
            c0: self.c0 + o.c0,
            c1: self.c1 + o.c1,
            c11: self.c11 + o.c11,
            c2: self.c2 + o.c2,
            c21: self.c21 + o.c21,
            c22: self.c22 + o.c22,
        }
    }
}

impl Neg for SchubertClass {
    type Output = SchubertClass;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for SchubertClass {
    type Output = SchubertClass;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for SchubertClass {
    type Output = SchubertClass;
    fn mul(self, o: Self) -> Self {
        let mut acc = SchubertClass::ZERO;
        for a in BASIS {
            let ca = self.coeff(a);
            if ca == 0 {
                continue;
            }
            for b in BASIS {
                let cb = o.coeff(b);
                if cb != 0 {
                    acc = acc + basis_product(a, b).scale(ca * cb);
                }
            }
        }
        acc
    }
}

pub fn sch_mul(a: SchubertClass, b: SchubertClass) -> SchubertClass {
    a * b
}

/// `(coefficient of s2, coefficient of s11)` of a congruence class.
pub fn bidegree_of(a: &SchubertClass) -> Result<Bidegree> {
    if !a.is_congruence() {
        return Err(Error::NotCongruence(a.to_string()));
    }
    Ok(Bidegree::new(a.c2 as u64, a.c11 as u64))
}

pub fn class_of(b: Bidegree) -> SchubertClass {
    SchubertClass { c2: b.order as i64, c11: b.class as i64, ..SchubertClass::ZERO }
}

pub fn perp(a: SchubertClass) -> SchubertClass {
    a.perp()
}

/// Degree of the product: its `s22` coefficient.
pub fn intersection_count(a: &SchubertClass, b: &SchubertClass) -> i64 {
    (*a * *b).c22
}

/// `c2` of the universal quotient bundle.
pub const C2_Q: SchubertClass = SchubertClass::SIGMA2;
/// `c2` of the tautological subbundle.
pub const C2_S: SchubertClass = SchubertClass::SIGMA11;
/// `c1` of the quotient bundle.
pub const C1_Q: SchubertClass = SchubertClass::SIGMA1;
/// `c1` of the dual tautological bundle.
pub const C1_S_DUAL: SchubertClass = SchubertClass::SIGMA1;

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `(c1, c2)` of the tangent bundle of `P^n` as multiples of `H` and `H^2`.
pub fn chern_tangent_pn(n: i64) -> Result<(i64, i64)> {
    if n < 1 {
        return Err(out_of_range("n", format!("need n >= 1, got {n}")));
    }
    Ok((n + 1, binom2(n + 1)))
}

/// `(c1, c2)` of the tangent bundle of a degree-`d` hypersurface in `P^n`,
/// as multiples of the hyperplane class `h` and `h^2`.
pub fn chern_tangent_hypersurface(n: i64, d: i64) -> Result<(i64, i64)> {
    if n < 2 {
        return Err(out_of_range("n", format!("need n >= 2, got {n}")));
    }
    if d < 1 {
        return Err(out_of_range("d", format!("need d >= 1, got {d}")));
    }
    let (c1p, c2p) = chern_tangent_pn(n)?;
    // c(T_Y) = c(T_P^n) / (1 + d h)
    let c1 = c1p - d;
    let c2 = c2p - c1 * d;
    Ok((c1, c2))
}

/// Degree of the polar class `deg(3h - c1(T_S)) * deg(h)` of a surface of degree `d`.
pub fn polar_degree(d: i64) -> Result<i64> {
    if d < 2 {
        return Err(out_of_range("d", format!("need d >= 2, got {d}")));
    }
    let (c1, _) = chern_tangent_hypersurface(3, d)?;
    Ok((3 - c1) * d)
}

const NAMES: [(&str, Basis); 6] = [
    ("s0", Basis::S0),
    ("s1", Basis::S1),
    ("s2", Basis::S2),
    ("s11", Basis::S11),
    ("s21", Basis::S21),
    ("s22", Basis::S22),
];

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, b) in NAMES {
            let c = self.coeff(b);
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            match (first, c < 0) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if mag == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for SchubertClass {
    type Err = Error;

    /// Parses sums like `3*s2 + s11 - 2*s22`; `sigma` may replace `s`.
    fn from_str(src: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(err(0, "empty class"));
        }
        if cleaned == "0" {
            return Ok(SchubertClass::ZERO);
        }
        let mut out = SchubertClass::ZERO;
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(err(i, "expected '+' or '-'"));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &cleaned[start..i];
            let (coef, name) = match term.split_once('*') {
                Some((c, n)) => (c.parse::<i64>().map_err(|_| err(start, "bad coefficient"))?, n),
                None => (1, term),
            };
            let name = name.replace("sigma", "s").replace(['_', ','], "");
            let b = NAMES
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, b)| *b)
                .ok_or_else(|| err(start, "unknown Schubert cycle; use s0 s1 s2 s11 s21 s22"))?;
            *out.coeff_mut(b) += sign * coef;
        }
        Ok(out)
    }
}

impl Serialize for SchubertClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
