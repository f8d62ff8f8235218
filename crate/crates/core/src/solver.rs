//! Buchberger's algorithm, normal forms and quotient dimensions.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{grevlex_cmp, Monomial, MultiPoly, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order on permuted variables.
///
/// `perm[0]` is the ring index of the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, perm: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: (0..nvars).collect() }
    }

    pub fn with_perm(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || seen[i] {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Compare two monomials of the ring.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_keys(&self.key(a.exponents()), &self.key(b.exponents()))
    }

    fn key(&self, exps: &[u32]) -> Vec<u32> {
        self.perm.iter().map(|&i| exps[i]).collect()
    }

    fn unkey(&self, key: &[u32]) -> Vec<u32> {
        let mut e = vec![0; key.len()];
        for (pos, &i) in self.perm.iter().enumerate() {
            e[i] = key[pos];
        }
        e
    }

    fn cmp_keys(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Grevlex => grevlex_cmp(a, b),
            OrderKind::Lex => a.cmp(b),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
        };
        write!(f, "{name}{:?}", self.perm)
    }
}

type Key = Vec<u32>;

/// Polynomial with terms in permuted exponent keys, sorted descending.
#[derive(Clone, Debug)]
struct Sparse<E> {
    terms: Vec<(Key, E)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Key {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(num: &[u32], den: &[u32]) -> Key {
    num.iter().zip(den).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct Engine<'a, F: Field> {
    field: &'a F,
    order: &'a MonomialOrder,
}

impl<F: Field> Engine<'_, F> {
    fn from_poly(&self, p: &MultiPoly<F>) -> Sparse<F::Elem> {
        let mut terms: Vec<(Key, F::Elem)> =
            p.terms().map(|(m, c)| (self.order.key(m.exponents()), c.clone())).collect();
        terms.sort_by(|a, b| self.order.cmp_keys(&b.0, &a.0));
        Sparse { terms }
    }

    fn to_poly(&self, ring: &PolyRing<F>, s: &Sparse<F::Elem>) -> MultiPoly<F> {
        let mut p = ring.zero_poly();
        for (k, c) in &s.terms {
            p.add_term(Monomial::from_exponents(self.order.unkey(k)), c.clone());
        }
        p
    }

    fn monic(&self, s: &mut Sparse<F::Elem>) {
        if let Some((_, lc)) = s.terms.first() {
            if self.field.is_one(lc) {
                return;
            }
            let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
            for (_, c) in s.terms.iter_mut() {
                *c = self.field.mul(c, &inv);
            }
        }
    }

    /// `p - c * x^m * g`.
    fn sub_mul(&self, p: &Sparse<F::Elem>, c: &F::Elem, m: &[u32], g: &Sparse<F::Elem>) -> Sparse<F::Elem> {
        let mut out = Vec::with_capacity(p.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(k, v)| (k.iter().zip(m).map(|(a, b)| a + b).collect::<Key>(), v));
        let mut next_g = gi.next();
        while i < p.terms.len() || next_g.is_some() {
            let ord = match (&next_g, p.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some((gk, _)), Some((pk, _))) => self.order.cmp_keys(pk, gk),
            };
            match ord {
                Ordering::Greater => {
                    out.push(p.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (gk, gv) = next_g.take().unwrap();
                    out.push((gk, self.field.neg(&self.field.mul(c, gv))));
                    next_g = gi.next();
                }
                Ordering::Equal => {
                    let (gk, gv) = next_g.take().unwrap();
                    let v = self.field.sub(&p.terms[i].1, &self.field.mul(c, gv));
                    if !self.field.is_zero(&v) {
                        out.push((gk, v));
                    }
                    i += 1;
                    next_g = gi.next();
                }
            }
        }
        Sparse { terms: out }
    }

    /// Full reduction of `p` by `basis` (indices in `active`).
    fn reduce(&self, p: Sparse<F::Elem>, basis: &[Sparse<F::Elem>], active: &[usize]) -> Sparse<F::Elem> {
        let mut rem: Vec<(Key, F::Elem)> = Vec::new();
        let mut p = p;
        let mut start = 0;
        while start < p.terms.len() {
            let (lk, lc) = &p.terms[start];
            let div = active.iter().map(|&j| &basis[j]).find(|g| divides(&g.terms[0].0, lk));
            match div {
                Some(g) => {
                    let (gk, gc) = &g.terms[0];
                    let c = self.field.div(lc, gc).expect("leading coefficient is nonzero");
                    let m = quotient(lk, gk);
                    p.terms.drain(..start);
                    start = 0;
                    p = self.sub_mul(&p, &c, &m, g);
                }
                None => {
                    rem.push(p.terms[start].clone());
                    start += 1;
                }
            }
        }
        Sparse { terms: rem }
    }

    fn spoly(&self, f: &Sparse<F::Elem>, g: &Sparse<F::Elem>) -> Sparse<F::Elem> {
        let (fk, fc) = &f.terms[0];
        let (gk, gc) = &g.terms[0];
        let l = lcm(fk, gk);
        let mf = quotient(&l, fk);
        let mg = quotient(&l, gk);
        let finv = self.field.inv(fc).expect("nonzero");
        let scaled_f = Sparse {
            terms: f
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(&mf).map(|(a, b)| a + b).collect(), self.field.mul(v, &finv)))
                .collect(),
        };
        let c = self.field.inv(gc).expect("nonzero");
        self.sub_mul(&scaled_f, &c, &mg, g)
    }
}

/// Reduced Gröbner basis of an ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    order: MonomialOrder,
    gens: Vec<MultiPoly<F>>,
    reduced: bool,
}

/// Dimension of `R / I` as a vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Leading monomials in the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| leading_monomial(g, &self.order)).collect()
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> bool {
        normal_form(f, self).is_zero()
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        let eng = Engine { field: self.ring.field(), order: &self.order };
        let sparse: Vec<_> = self.gens.iter().map(|g| eng.from_poly(g)).collect();
        let active: Vec<usize> = (0..sparse.len()).collect();
        for i in 0..sparse.len() {
            for j in i + 1..sparse.len() {
                let s = eng.spoly(&sparse[i], &sparse[j]);
                if !eng.reduce(s, &sparse, &active).terms.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Leading monomial of a nonzero polynomial under `order`.
pub fn leading_monomial<F: Field>(f: &MultiPoly<F>, order: &MonomialOrder) -> Monomial {
    f.terms().map(|(m, _)| m).max_by(|a, b| order.cmp(a, b)).expect("nonzero polynomial").clone()
}

fn chain_ok(pending: &HashSet<(usize, usize)>, i: usize, j: usize, k: usize) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[MultiPoly<F>], order: &MonomialOrder) -> Result<GroebnerBasis<F>> {
    if order.nvars() != ring.nvars() {
        return Err(Error::Invalid(format!(
            "order on {} variables for a ring with {}",
            order.nvars(),
            ring.nvars()
        )));
    }
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let field = ring.field();
    let eng = Engine { field, order };
    let mut basis: Vec<Sparse<F::Elem>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |mut s: Sparse<F::Elem>,
                   basis: &mut Vec<Sparse<F::Elem>>,
                   active: &mut Vec<usize>,
                   pending: &mut HashSet<(usize, usize)>| {
        eng.monic(&mut s);
        let new = basis.len();
        for &a in active.iter() {
            pending.insert((a, new));
        }
        basis.push(s);
        active.push(new);
    };

    for g in gens {
        let s = eng.reduce(eng.from_poly(g), &basis, &active);
        if !s.terms.is_empty() {
            add(s, &mut basis, &mut active, &mut pending);
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lcm(&basis[a.0].terms[0].0, &basis[a.1].terms[0].0);
                let lb = lcm(&basis[b.0].terms[0].0, &basis[b.1].terms[0].0);
                order.cmp_keys(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i].terms[0].0, &basis[j].terms[0].0);
        if coprime(li, lj) {
            continue;
        }
        let l = lcm(li, lj);
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && divides(&basis[k].terms[0].0, &l) && chain_ok(&pending, i, j, k));
        if chain {
            continue;
        }
        let s = eng.spoly(&basis[i], &basis[j]);
        let r = eng.reduce(s, &basis, &active);
        if r.terms.is_empty() {
            continue;
        }
        if r.terms[0].0.iter().all(|&e| e == 0) {
            basis.clear();
            active.clear();
            pending.clear();
            basis.push(Sparse { terms: vec![(vec![0; ring.nvars()], field.one())] });
            active.push(0);
            break;
        }
        add(r, &mut basis, &mut active, &mut pending);
    }

    // minimalize
    let mut keep: Vec<usize> = Vec::new();
    for &i in &active {
        let li = &basis[i].terms[0].0;
        let redundant = active.iter().any(|&j| {
            let lj = &basis[j].terms[0].0;
            j != i && divides(lj, li) && (lj != li || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    // interreduce tails
    let mut reduced: Vec<Sparse<F::Elem>> = Vec::new();
    for &i in &keep {
        let others: Vec<usize> = keep.iter().copied().filter(|&j| j != i).collect();
        let g = &basis[i];
        let head = Sparse { terms: vec![g.terms[0].clone()] };
        let tail = Sparse { terms: g.terms[1..].to_vec() };
        let tail = eng.reduce(tail, &basis, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        let mut s = Sparse { terms };
        eng.monic(&mut s);
        reduced.push(s);
    }
    reduced.sort_by(|a, b| order.cmp_keys(&a.terms[0].0, &b.terms[0].0));
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        gens: reduced.iter().map(|s| eng.to_poly(ring, s)).collect(),
        reduced: true,
    })
}

/// Remainder of `f` on division by `g`.
pub fn normal_form<F: Field>(f: &MultiPoly<F>, g: &GroebnerBasis<F>) -> MultiPoly<F> {
    let eng = Engine { field: g.ring.field(), order: &g.order };
    let sparse: Vec<_> = g.gens.iter().map(|p| eng.from_poly(p)).collect();
    let active: Vec<usize> = (0..sparse.len()).collect();
    let r = eng.reduce(eng.from_poly(f), &sparse, &active);
    eng.to_poly(&g.ring, &r)
}

/// Number of standard monomials of the leading-term ideal.
pub fn quotient_dimension<F: Field>(g: &GroebnerBasis<F>) -> QuotientDim {
    let n = g.ring.nvars();
    let lead: Vec<Vec<u32>> = g.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect();
    if lead.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return QuotientDim::Finite(0);
    }
    for v in 0..n {
        let pure = lead.iter().any(|m| m[v] > 0 && m.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !pure {
            return QuotientDim::Infinite;
        }
    }
    // depth-first walk of the staircase, raising variables in nondecreasing index order
    let mut count = 0u64;
    let mut stack: Vec<(Vec<u32>, usize)> = vec![(vec![0; n], 0)];
    while let Some((m, from)) = stack.pop() {
        count += 1;
        for v in from..n {
            let mut next = m.clone();
            next[v] += 1;
            if !lead.iter().any(|l| divides(l, &next)) {
                stack.push((next, v));
            }
        }
    }
    QuotientDim::Finite(count)
}

/// Convenience: Gröbner basis in grevlex and its quotient dimension.
pub fn ideal_dimension<F: Field>(ring: &PolyRing<F>, gens: &[MultiPoly<F>]) -> Result<QuotientDim> {
    let gb = buchberger(ring, gens, &MonomialOrder::grevlex(ring.nvars()))?;
    Ok(quotient_dimension(&gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::parse_poly;
    use crate::rng::GenericRng;
    use proptest::prelude::*;

    fn q2() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, &["x", "y"])
    }

    fn p(r: &PolyRing<Rationals>, s: &str) -> MultiPoly<Rationals> {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn trivial_bases() {
        let r = q2();
        let g = buchberger(&r, &[p(&r, "x"), p(&r, "y")], &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(g.gens().len(), 2);
        assert_eq!(quotient_dimension(&g), QuotientDim::Finite(1));
        let single = buchberger(&r, &[p(&r, "3*x^2 - y")], &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(single.gens(), &[p(&r, "x^2 - 1/3*y")]);
        let zero = buchberger(&r, &[], &MonomialOrder::grevlex(2)).unwrap();
        assert!(zero.is_empty());
        assert_eq!(quotient_dimension(&zero), QuotientDim::Infinite);
        let unit = buchberger(&r, &[p(&r, "x"), p(&r, "x + 1")], &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(quotient_dimension(&unit), QuotientDim::Finite(0));
    }

    #[test]
    fn hand_s_polynomial() {
        let r = q2();
        let g = buchberger(&r, &[p(&r, "x^2 + y^2"), p(&r, "x*y")], &MonomialOrder::grevlex(2)).unwrap();
        assert!(g.gens().contains(&p(&r, "y^3")));
        assert!(g.check_s_pairs());
        assert_eq!(quotient_dimension(&g), QuotientDim::Finite(4));
    }

    #[test]
    fn normal_form_examples() {
        let r = q2();
        let g = buchberger(&r, &[p(&r, "x"), p(&r, "y")], &MonomialOrder::grevlex(2)).unwrap();
        assert!(normal_form(&p(&r, "x^2"), &g).is_zero());
        let gx = buchberger(&r, &[p(&r, "x")], &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(normal_form(&p(&r, "x + y + 1"), &gx), p(&r, "y + 1"));
    }

    #[test]
    fn staircase() {
        let r = q2();
        let g = buchberger(&r, &[p(&r, "x^2"), p(&r, "y^3")], &MonomialOrder::lex(2)).unwrap();
        assert_eq!(quotient_dimension(&g), QuotientDim::Finite(6));
        let h = buchberger(&r, &[p(&r, "x^2")], &MonomialOrder::lex(2)).unwrap();
        assert_eq!(quotient_dimension(&h), QuotientDim::Infinite);
    }

    fn random_poly(r: &PolyRing<PrimeField>, rng: &mut GenericRng, deg: u32) -> MultiPoly<PrimeField> {
        let mut f = r.zero_poly();
        for d in 0..=deg {
            for m in r.monomials_of_degree(d) {
                let c = rng.elem(r.field());
                f = &f + &r.term(m.exponents().to_vec(), c);
            }
        }
        f
    }

    #[test]
    fn two_conics_meet_in_four_points() {
        let fp = PrimeField::new(32003).unwrap();
        let r = PolyRing::new(fp, &["x", "y"]);
        let mut rng = GenericRng::new(3);
        for _ in 0..3 {
            let f = random_poly(&r, &mut rng, 2);
            let g = random_poly(&r, &mut rng, 2);
            let gb = buchberger(&r, &[f.clone(), g.clone()], &MonomialOrder::grevlex(2)).unwrap();
            assert!(gb.check_s_pairs());
            assert_eq!(quotient_dimension(&gb), QuotientDim::Finite(4));
            let lex = buchberger(&r, &[f, g], &MonomialOrder::lex(2)).unwrap();
            assert_eq!(quotient_dimension(&lex), QuotientDim::Finite(4));
        }
    }

    #[test]
    fn order_independence_on_random_systems() {
        let fp = PrimeField::new(32003).unwrap();
        let r = PolyRing::new(fp, &["x", "y", "z"]);
        let mut rng = GenericRng::new(11);
        for k in 0..10 {
            let degs = [1 + k % 2, 2, 1 + (k / 3) % 2];
            let gens: Vec<_> = degs.iter().map(|&d| random_poly(&r, &mut rng, d as u32)).collect();
            let a = buchberger(&r, &gens, &MonomialOrder::grevlex(3)).unwrap();
            let perm = MonomialOrder::with_perm(OrderKind::Lex, vec![2, 0, 1]).unwrap();
            let b = buchberger(&r, &gens, &perm).unwrap();
            assert!(a.check_s_pairs() && b.check_s_pairs());
            let expected = degs.iter().product::<usize>() as u64;
            assert_eq!(quotient_dimension(&a), QuotientDim::Finite(expected));
            assert_eq!(quotient_dimension(&b), QuotientDim::Finite(expected));
        }
    }

    #[test]
    fn bad_permutation() {
        assert!(MonomialOrder::with_perm(OrderKind::Lex, vec![0, 0]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn ideal_absorption_and_idempotence(seed in any::<u64>()) {
            let fp = PrimeField::new(32003).unwrap();
            let r = PolyRing::new(fp, &["x", "y", "z"]);
            let mut rng = GenericRng::new(seed);
            let gens: Vec<_> = (0..2).map(|_| random_poly(&r, &mut rng, 2)).collect();
            let g = buchberger(&r, &gens, &MonomialOrder::grevlex(3)).unwrap();
            prop_assert!(g.check_s_pairs());
            let f = random_poly(&r, &mut rng, 2);
            let h = random_poly(&r, &mut rng, 3);
            let g1 = &g.gens()[0];
            let lhs = normal_form(&(&(&f * g1) + &h), &g);
            prop_assert_eq!(&lhs, &normal_form(&h, &g));
            prop_assert_eq!(normal_form(&lhs, &g), lhs.clone());
            for gen in &gens {
                prop_assert!(g.contains(gen));
            }
        }
    }
}
