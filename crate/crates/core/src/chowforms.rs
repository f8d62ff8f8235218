//! Chow forms of rational space curves and line-contact classification.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::field::{crt_step, primes_below, rational_reconstruction, Field, Fp, PrimeField, Rationals, Ring};
use crate::linalg::{rank, EchelonBasis};
use crate::linegeom::{LineP3, ProjPoint3};
use crate::poly::{BinaryForm, Monomial, MultiPoly, MultiplicityProfile, PolyRing};
use crate::rng::{GenericRng, DEFAULT_SEED};

/// Variable names of the dual Plücker coordinate ring.
pub const Q_VARS: [&str; 6] = ["q01", "q02", "q03", "q12", "q13", "q23"];

/// The ring `F[q01, ..., q23]` in which Chow forms live.
pub fn dual_plucker_ring<F: Field>(field: F) -> PolyRing<F> {
    PolyRing::new(field, &Q_VARS)
}

/// Image of `P^1` under four binary forms of a common degree.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSpaceCurve<F: Field> {
    phi: [BinaryForm<F>; 4],
}

impl<F: Field> RationalSpaceCurve<F> {
    pub fn new(phi: [BinaryForm<F>; 4]) -> Result<Self> {
        let d = phi[0].degree();
        if d == 0 {
            return Err(Error::Invalid("curve degree must be at least 1".into()));
        }
        if phi.iter().any(|p| p.degree() != d) {
            return Err(Error::Invalid("components must share one degree".into()));
        }
        let field = phi[0].ring().clone();
        let rows: Vec<Vec<F::Elem>> = phi.iter().map(|p| p.coeffs().to_vec()).collect();
        if rank(&field, &rows) < 2 {
            return Err(Error::Invalid("the parametrization maps to a point".into()));
        }
        let mut g = phi[0].clone();
        for p in &phi[1..] {
            g = g.gcd(p)?;
        }
        if g.degree() > 0 {
            return Err(Error::Invalid(format!("components share the factor {g}")));
        }
        Ok(RationalSpaceCurve { phi })
    }

    pub fn from_ints(field: F, coeffs: [&[i64]; 4]) -> Result<Self> {
        Self::new(coeffs.map(|c| BinaryForm::from_ints(field.clone(), c)))
    }

    /// Monomial curve `(s^d : s^(d-a) t^a : s^(d-b) t^b : t^d)`.
    pub fn monomial(field: F, d: usize, a: usize, b: usize) -> Result<Self> {
        let m = |k: usize| BinaryForm::monomial(field.clone(), d - k, k);
        Self::new([m(0), m(a), m(b), m(d)])
    }

    /// `(s^3 : s^2 t : s t^2 : t^3)`
    pub fn twisted_cubic(field: F) -> Self {
        Self::monomial(field, 3, 1, 2).expect("valid curve")
    }

    /// `(s^4 : s^3 t : s t^3 : t^4)`, smooth of genus 0.
    pub fn rational_quartic(field: F) -> Self {
        Self::monomial(field, 4, 1, 3).expect("valid curve")
    }

    /// `(s^5 : s^4 t : s t^4 : t^5)`, smooth of genus 0.
    pub fn rational_quintic(field: F) -> Self {
        Self::monomial(field, 5, 1, 4).expect("valid curve")
    }

    /// `(s^2 : s t : t^2 : 0)`, a conic in the plane `x3 = 0`.
    pub fn plane_conic(field: F) -> Self {
        let z = BinaryForm::zero(field.clone(), 2);
        let m = |k: usize| BinaryForm::monomial(field.clone(), 2 - k, k);
        Self::new([m(0), m(1), m(2), z]).expect("valid curve")
    }

    pub fn field(&self) -> &F {
        self.phi[0].ring()
    }

    pub fn degree(&self) -> usize {
        self.phi[0].degree()
    }

    pub fn components(&self) -> &[BinaryForm<F>; 4] {
        &self.phi
    }

    pub fn point_at(&self, s: &F::Elem, t: &F::Elem) -> ProjPoint3<F> {
        let c = std::array::from_fn(|i| self.phi[i].eval(s, t));
        ProjPoint3::new(self.field().clone(), c).expect("coprime components never vanish together")
    }

    /// True when the curve spans only a plane.
    pub fn is_planar(&self) -> bool {
        let rows: Vec<Vec<F::Elem>> = self.phi.iter().map(|p| p.coeffs().to_vec()).collect();
        rank(self.field(), &rows) < 4
    }

    /// `sum_i h_i phi_i` for a plane `h`.
    pub fn restrict_plane(&self, h: &[F::Elem; 4]) -> BinaryForm<F> {
        let f = self.field();
        let mut acc = BinaryForm::zero(f.clone(), self.degree());
        for (c, p) in h.iter().zip(&self.phi) {
            acc = acc.add(&p.scale(c)).expect("same degree");
        }
        acc
    }
}

impl<F: Field> fmt::Display for RationalSpaceCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.phi.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// A surface `V(f)` in `P^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceP3<F: Field> {
    f: MultiPoly<F>,
}

impl<F: Field> SurfaceP3<F> {
    pub fn new(f: MultiPoly<F>) -> Result<Self> {
        if f.ring().nvars() != 4 {
            return Err(Error::Invalid("surface equation needs 4 variables".into()));
        }
        f.homogeneous_degree()?;
        Ok(SurfaceP3 { f })
    }

    pub fn equation(&self) -> &MultiPoly<F> {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree().unwrap()
    }
}

/// Restrictions of `C` to two independent planes through `L`.
pub fn curve_restrictions<F: Field>(line: &LineP3<F>, curve: &RationalSpaceCurve<F>) -> (BinaryForm<F>, BinaryForm<F>) {
    let [a, b] = line.spanning_planes();
    (curve.restrict_plane(a.coeffs()), curve.restrict_plane(b.coeffs()))
}

pub fn meets_curve<F: Field>(line: &LineP3<F>, curve: &RationalSpaceCurve<F>) -> Result<bool> {
    let (fa, fb) = curve_restrictions(line, curve);
    if fa.is_zero() && fb.is_zero() {
        return Err(Error::LineOnAllPlanes);
    }
    let r = fa.resultant(&fb)?;
    Ok(curve.field().is_zero(&r))
}

/// Parameter-side intersection scheme of `L` and `C`: the profile of the gcd
/// of the two restrictions.
pub fn curve_line_profile<F: Field>(line: &LineP3<F>, curve: &RationalSpaceCurve<F>) -> Result<MultiplicityProfile> {
    let (fa, fb) = curve_restrictions(line, curve);
    if fa.is_zero() && fb.is_zero() {
        return Err(Error::LineOnAllPlanes);
    }
    fa.gcd(&fb)?.multiplicity_profile()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SecantClass {
    SmoothPointOfSec,
    SingularPointOfSec,
    NotInSec,
}

impl fmt::Display for SecantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SecantClass::SmoothPointOfSec => "SMOOTH_POINT_OF_SEC",
            SecantClass::SingularPointOfSec => "SINGULAR_POINT_OF_SEC",
            SecantClass::NotInSec => "NOT_IN_SEC",
        })
    }
}

/// Position of a line relative to `Sec(C)` given its intersection profile with `C`.
pub fn classify_secant_singularity(profile: &MultiplicityProfile) -> SecantClass {
    let n = profile.distinct_roots();
    let top = profile.max_multiplicity();
    match n {
        0 => SecantClass::NotInSec,
        1 if top == 1 => SecantClass::NotInSec,
        1 if top == 2 => SecantClass::SmoothPointOfSec,
        1 => SecantClass::SingularPointOfSec,
        2 if top == 1 => SecantClass::SmoothPointOfSec,
        _ => SecantClass::SingularPointOfSec,
    }
}

/// Rewrites every `q01 q23` as `q02 q13 - q03 q12`.
pub fn reduce_plucker<F: Field>(p: &MultiPoly<F>) -> MultiPoly<F> {
    let ring = p.ring();
    assert_eq!(ring.nvars(), 6);
    let field = ring.field();
    let lead = Monomial::from_exponents(vec![1, 0, 0, 0, 0, 1]);
    let tail = &ring.term(vec![0, 1, 0, 0, 1, 0], field.one()) - &ring.term(vec![0, 0, 1, 1, 0, 0], field.one());
    let mut work = p.clone();
    loop {
        let next = work.terms().find(|(m, _)| lead.divides(m)).map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = next else { break };
        let q = lead.quotient_of(&m);
        let one = ring.term(m.exponents().to_vec(), c.clone());
        work = &(&work - &one) + &tail.mul_term(&q, &c);
    }
    work
}

/// Canonical representative: Plücker-reduced, then scaled by
/// [`Field::canonical_scale`] taken from the grevlex-leading term down.
pub fn normalize_chow_form<F: Field>(p: &MultiPoly<F>) -> MultiPoly<F> {
    let r = reduce_plucker(p);
    let coeffs: Vec<F::Elem> = r.terms().map(|(_, c)| c.clone()).collect();
    let c = r.field().canonical_scale(&coeffs);
    r.scale(&c)
}

fn chow_basis<F: Field>(ring: &PolyRing<F>, d: u32) -> Vec<Monomial> {
    let lead = Monomial::from_exponents(vec![1, 0, 0, 0, 0, 1]);
    ring.monomials_of_degree(d).into_iter().filter(|m| !lead.divides(m)).collect()
}

fn monomial_value<F: Field>(field: &F, m: &Monomial, point: &[F::Elem]) -> F::Elem {
    let mut acc = field.one();
    for (x, &e) in point.iter().zip(m.exponents()) {
        if e > 0 {
            acc = field.mul(&acc, &field.pow(x, e));
        }
    }
    acc
}

/// Chow form with the default seed.
pub fn chow_form<F: Field>(curve: &RationalSpaceCurve<F>) -> Result<MultiPoly<F>> {
    chow_form_seeded(curve, DEFAULT_SEED)
}

/// Chow form by exact interpolation on lines through curve points.
///
/// Constraints come from lines joining `C(s_i : 1)` to random points; the
/// nullspace of the constraint matrix must be one-dimensional. Over `Q` the
/// system is solved modulo several primes and lifted by rational
/// reconstruction, then checked exactly against every constraint.
pub fn chow_form_seeded<F: Field>(curve: &RationalSpaceCurve<F>, seed: u64) -> Result<MultiPoly<F>> {
    let field = curve.field().clone();
    if field.characteristic() == 0 {
        let lifted: Option<Vec<BinaryForm<Rationals>>> = curve
            .phi
            .iter()
            .map(|f| {
                let c: Option<Vec<_>> = f.coeffs().iter().map(|c| field.to_rational(c)).collect();
                c.map(|c| BinaryForm::new(Rationals, c))
            })
            .collect();
        if let Some(forms) = lifted {
            let q_curve = RationalSpaceCurve::new(forms.try_into().expect("four components"))?;
            let form = chow_form_multimodular(&q_curve, seed)?;
            let ring = dual_plucker_ring(field.clone());
            let mut out = ring.zero_poly();
            for (m, c) in form.terms() {
                out = &out + &ring.term(m.exponents().to_vec(), field.from_rational(c)?);
            }
            return Ok(out);
        }
    }
    let ring = dual_plucker_ring(field.clone());
    let basis = chow_basis(&ring, curve.degree() as u32);
    let mut rows = Constraints::new(curve, &basis, seed);
    let echelon = rows.solve(field.clone(), |r| Some(r.to_vec()))?;
    let null = echelon.nullspace();
    if null.len() != 1 {
        return Err(Error::Interpolation(format!("nullspace has dimension {}, expected 1", null.len())));
    }
    Ok(normalize_chow_form(&form_from(&ring, &basis, &null[0])))
}

fn form_from<F: Field>(ring: &PolyRing<F>, basis: &[Monomial], coeffs: &[F::Elem]) -> MultiPoly<F> {
    let mut form = ring.zero_poly();
    for (m, c) in basis.iter().zip(coeffs) {
        form = &form + &ring.term(m.exponents().to_vec(), c.clone());
    }
    form
}

/// Interpolation conditions: monomial values at lines meeting the curve.
struct Constraints<'a, F: Field> {
    curve: &'a RationalSpaceCurve<F>,
    basis: &'a [Monomial],
    rng: GenericRng,
    s_param: i64,
    rows: Vec<Vec<F::Elem>>,
}

impl<'a, F: Field> Constraints<'a, F> {
    fn new(curve: &'a RationalSpaceCurve<F>, basis: &'a [Monomial], seed: u64) -> Self {
        Constraints { curve, basis, rng: GenericRng::new(seed).with_bound(16), s_param: 0, rows: Vec::new() }
    }

    fn next_row(&mut self) -> Option<Vec<F::Elem>> {
        let field = self.curve.field().clone();
        self.s_param += 1;
        let s = field.from_i64(self.s_param / 2 * if self.s_param % 2 == 0 { 1 } else { -1 });
        let a = self.curve.point_at(&s, &field.one());
        let b = crate::linegeom::random_point(&mut self.rng, &field);
        let line = LineP3::join(&a, &b).ok()?;
        let row: Vec<F::Elem> = self.basis.iter().map(|m| monomial_value(&field, m, line.dual())).collect();
        self.rows.push(row.clone());
        Some(row)
    }

    /// Draws rows until the rank over `target` stalls one short of full for
    /// a dozen extra rows. `reduce` maps a row into `target`.
    fn solve<G: Field>(
        &mut self,
        target: G,
        reduce: impl Fn(&[F::Elem]) -> Option<Vec<G::Elem>>,
    ) -> Result<EchelonBasis<G>> {
        let n = self.basis.len();
        let mut echelon = EchelonBasis::new(target, n);
        let mut checks_left = 12;
        for _ in 0..4 * n + 40 {
            let Some(row) = self.next_row() else { continue };
            let Some(row) = reduce(&row) else { continue };
            echelon.insert(&row);
            if echelon.rank() == n {
                return Err(Error::Interpolation("constraints admit only the zero form".into()));
            }
            if echelon.rank() == n - 1 {
                if checks_left == 0 {
                    break;
                }
                checks_left -= 1;
            }
        }
        Ok(echelon)
    }
}

fn reduce_row(p: &PrimeField, row: &[BigRational]) -> Option<Vec<Fp>> {
    row.iter().map(|c| p.from_rational(c).ok()).collect()
}

/// Kernel vector modulo `p`, scaled so that entry `pivot` is 1.
fn kernel_mod(p: &PrimeField, rows: &[Vec<BigRational>], n: usize, pivot: usize) -> Option<Vec<Fp>> {
    let mut echelon = EchelonBasis::new(*p, n);
    for r in rows {
        echelon.insert(&reduce_row(p, r)?);
    }
    let null = echelon.nullspace();
    if null.len() != 1 || p.is_zero(&null[0][pivot]) {
        return None;
    }
    let inv = p.inv(&null[0][pivot]).ok()?;
    Some(null[0].iter().map(|x| p.mul(x, &inv)).collect())
}

fn chow_form_multimodular(curve: &RationalSpaceCurve<Rationals>, seed: u64) -> Result<MultiPoly<Rationals>> {
    const MAX_PRIMES: usize = 200;
    let ring = dual_plucker_ring(Rationals);
    let basis = chow_basis(&ring, curve.degree() as u32);
    let n = basis.len();
    let mut primes = primes_below(1 << 31).map(PrimeField::new).filter_map(Result::ok);
    let first = primes.next().expect("primes exist");
    let mut constraints = Constraints::new(curve, &basis, seed);
    let echelon = constraints.solve(first, |r| reduce_row(&first, r))?;
    if echelon.rank() != n - 1 {
        return Err(Error::Interpolation(format!("nullspace has dimension {}, expected 1", n - echelon.rank())));
    }
    let rows = constraints.rows;
    let v0 = &echelon.nullspace()[0];
    let pivot = v0.iter().position(|x| !first.is_zero(x)).expect("kernel vector is nonzero");
    let v0 = kernel_mod(&first, &rows, n, pivot).expect("first prime has the kernel");
    let mut residues: Vec<BigInt> = v0.iter().map(|x| BigInt::from(x.value())).collect();
    let mut modulus = BigInt::from(first.modulus());
    let mut previous: Option<Vec<BigRational>> = None;
    for p in primes.take(MAX_PRIMES) {
        let Some(v) = kernel_mod(&p, &rows, n, pivot) else { continue };
        for (a, x) in residues.iter_mut().zip(&v) {
            *a = crt_step(a, &modulus, x.value() as u64, p.modulus())?;
        }
        modulus *= p.modulus();
        let candidate: Option<Vec<BigRational>> =
            residues.iter().map(|a| rational_reconstruction(a, &modulus)).collect();
        if let (Some(c), true) = (&candidate, candidate == previous) {
            let satisfied = rows.iter().all(|r| {
                r.iter().zip(c.iter()).fold(BigRational::zero(), |acc, (x, y)| acc + x * y).is_zero()
            });
            if satisfied {
                return Ok(normalize_chow_form(&form_from(&ring, &basis, c)));
            }
        }
        previous = candidate;
    }
    Err(Error::Interpolation(format!("rational reconstruction did not stabilize after {MAX_PRIMES} primes")))
}

/// Value of a form in the `q` variables on a line.
pub fn eval_on_line<F: Field>(form: &MultiPoly<F>, line: &LineP3<F>) -> F::Elem {
    form.eval(line.dual())
}

/// Contact of a line with a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HurwitzProfile {
    Profile(MultiplicityProfile),
    Contained,
}

impl fmt::Display for HurwitzProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HurwitzProfile::Profile(p) => write!(f, "{p}"),
            HurwitzProfile::Contained => write!(f, "CONTAINED"),
        }
    }
}

pub fn hurwitz_profile<F: Field>(line: &LineP3<F>, surface: &SurfaceP3<F>) -> Result<HurwitzProfile> {
    let r = line.restrict(&surface.f)?;
    if r.is_zero() {
        return Ok(HurwitzProfile::Contained);
    }
    Ok(HurwitzProfile::Profile(r.multiplicity_profile()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ContactKind {
    NoContact,
    Transversal,
    SimpleTangent,
    Bitangent,
    Inflectional,
    InflAtTwoPoints,
    ContactOrderGe4,
    Contained,
}

impl fmt::Display for ContactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContactKind::NoContact => "NO_CONTACT",
            ContactKind::Transversal => "TRANSVERSAL",
            ContactKind::SimpleTangent => "SIMPLE_TANGENT",
            ContactKind::Bitangent => "BITANGENT",
            ContactKind::Inflectional => "INFLECTIONAL",
            ContactKind::InflAtTwoPoints => "INFL_AT_TWO_POINTS",
            ContactKind::ContactOrderGe4 => "CONTACT_ORDER_GE_4",
            ContactKind::Contained => "CONTAINED",
        })
    }
}

/// Every contact flag a line carries, plus the profile it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactClass {
    pub kinds: BTreeSet<ContactKind>,
    pub profile: MultiplicityProfile,
}

impl ContactClass {
    pub fn has(&self, k: ContactKind) -> bool {
        self.kinds.contains(&k)
    }

    /// Singular point of the Hurwitz hypersurface: bitangent or inflectional.
    pub fn in_sing_ch1(&self) -> bool {
        self.has(ContactKind::Bitangent) || self.has(ContactKind::Inflectional)
    }

    /// Singular point of the inflectional congruence.
    pub fn in_sing_infl(&self) -> bool {
        self.has(ContactKind::InflAtTwoPoints) || self.has(ContactKind::ContactOrderGe4)
    }
}

impl fmt::Display for ContactClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self.kinds.iter().map(|k| k.to_string()).collect();
        write!(f, "{} {}", k.join("+"), self.profile)
    }
}

pub fn classify_hurwitz_singularity(h: &HurwitzProfile) -> Result<ContactClass> {
    let profile = match h {
        HurwitzProfile::Contained => return Err(Error::SurfaceContainsLine),
        HurwitzProfile::Profile(p) => p.clone(),
    };
    let mut kinds = BTreeSet::new();
    let doubles = profile.roots_with_mult_at_least(2);
    let top = profile.max_multiplicity();
    if profile.is_empty() {
        kinds.insert(ContactKind::NoContact);
    } else if top == 1 {
        kinds.insert(ContactKind::Transversal);
    } else if doubles == 1 && top == 2 {
        kinds.insert(ContactKind::SimpleTangent);
    }
    if doubles >= 2 {
        kinds.insert(ContactKind::Bitangent);
    }
    if top >= 3 {
        kinds.insert(ContactKind::Inflectional);
    }
    if profile.roots_with_mult_at_least(3) >= 2 {
        kinds.insert(ContactKind::InflAtTwoPoints);
    }
    if top >= 4 {
        kinds.insert(ContactKind::ContactOrderGe4);
    }
    Ok(ContactClass { kinds, profile })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Ring};
    use crate::linegeom::{random_line, random_line_through, random_point, ProjPlane3};
    use crate::poly::parse_poly;

    fn e(i: usize) -> ProjPoint3<Rationals> {
        let mut c = [0; 4];
        c[i] = 1;
        ProjPoint3::from_ints(Rationals, c).unwrap()
    }

    fn meet(i: usize, j: usize) -> LineP3<Rationals> {
        LineP3::meet(&ProjPlane3::coordinate(Rationals, i), &ProjPlane3::coordinate(Rationals, j)).unwrap()
    }

    fn prof(p: &[(u32, u32)]) -> MultiplicityProfile {
        MultiplicityProfile::from_pairs(p)
    }

    #[test]
    fn restriction_examples() {
        let c = RationalSpaceCurve::twisted_cubic(Rationals);
        let (a, b) = curve_restrictions(&meet(2, 3), &c);
        assert_eq!((a.to_string(), b.to_string()), ("s*t^2".into(), "t^3".into()));
        let (a, b) = curve_restrictions(&meet(0, 3), &c);
        assert_eq!((a.to_string(), b.to_string()), ("s^3".into(), "t^3".into()));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn meets_curve_examples() {
        let c = RationalSpaceCurve::twisted_cubic(Rationals);
        // the line x0 = x3 = 0 misses the curve
        assert!(!meets_curve(&meet(0, 3), &c).unwrap());
        // span{e0, e3} is the chord x1 = x2 = 0
        let chord = LineP3::join(&e(0), &e(3)).unwrap();
        assert!(chord.proj_eq(&meet(1, 2)));
        assert!(meets_curve(&chord, &c).unwrap());
        let mut rng = GenericRng::new(3);
        let v = ProjPoint3::from_ints(Rationals, [1, 1, 1, 1]).unwrap();
        assert!(meets_curve(&random_line_through(&mut rng, &v), &c).unwrap());
    }

    #[test]
    fn line_profile_examples() {
        let c = RationalSpaceCurve::twisted_cubic(Rationals);
        assert_eq!(curve_line_profile(&meet(1, 2), &c).unwrap(), prof(&[(1, 2)]));
        let tangent = LineP3::join(&e(0), &e(1)).unwrap();
        assert_eq!(curve_line_profile(&tangent, &c).unwrap(), prof(&[(2, 1)]));
        assert!(curve_line_profile(&meet(0, 3), &c).unwrap().is_empty());
    }

    #[test]
    fn secant_classification() {
        assert_eq!(classify_secant_singularity(&prof(&[(1, 2)])), SecantClass::SmoothPointOfSec);
        assert_eq!(classify_secant_singularity(&prof(&[(2, 1)])), SecantClass::SmoothPointOfSec);
        assert_eq!(classify_secant_singularity(&prof(&[(3, 1)])), SecantClass::SingularPointOfSec);
        assert_eq!(classify_secant_singularity(&prof(&[(1, 1), (2, 1)])), SecantClass::SingularPointOfSec);
        assert_eq!(classify_secant_singularity(&prof(&[(1, 1)])), SecantClass::NotInSec);
        assert_eq!(classify_secant_singularity(&prof(&[])), SecantClass::NotInSec);
        for k in 3..=6 {
            assert_eq!(classify_secant_singularity(&prof(&[(1, k)])), SecantClass::SingularPointOfSec);
        }
    }

    #[test]
    fn chow_form_of_a_line() {
        let c = RationalSpaceCurve::from_ints(Rationals, [&[1, 0], &[0, 1], &[0, 0], &[0, 0]]).unwrap();
        let f = chow_form(&c).unwrap();
        assert_eq!(f.to_string(), "q01");
    }

    #[test]
    fn twisted_cubic_chow_form() {
        let c = RationalSpaceCurve::twisted_cubic(Rationals);
        let f = chow_form(&c).unwrap();
        let ring = dual_plucker_ring(Rationals);
        let printed = "q03^3 + q03^2*q12 - 2*q02*q03*q13 + q01*q13^2 + q02^2*q23 - q01*q03*q23 - q01*q12*q23";
        let expected = normalize_chow_form(&parse_poly(&ring, printed).unwrap());
        assert_eq!(f, expected);
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn conic_chow_form_vanishes_on_chords_only() {
        let f = PrimeField::default();
        let c = RationalSpaceCurve::plane_conic(f);
        let form = chow_form(&c).unwrap();
        assert_eq!(form.total_degree(), Some(2));
        let mut rng = GenericRng::new(11);
        for k in 0..20 {
            let a = c.point_at(&f.from_i64(k), &f.one());
            let b = c.point_at(&f.from_i64(k + 100), &f.one());
            let chord = LineP3::join(&a, &b).unwrap();
            assert!(f.is_zero(&eval_on_line(&form, &chord)));
        }
        let mut misses = 0;
        while misses < 20 {
            let l = random_line(&mut rng, &f);
            if !meets_curve(&l, &c).unwrap() {
                assert!(!f.is_zero(&eval_on_line(&form, &l)));
                misses += 1;
            }
        }
    }

    #[test]
    fn chow_form_agrees_with_meets_curve() {
        let f = PrimeField::default();
        let c = RationalSpaceCurve::rational_quartic(f);
        let form = chow_form(&c).unwrap();
        assert_eq!(form.total_degree(), Some(4));
        let mut rng = GenericRng::new(5);
        for k in 0..50 {
            let a = c.point_at(&f.from_i64(k * 7 + 1), &f.one());
            let x = random_point(&mut rng, &f);
            let l = LineP3::join(&a, &x).unwrap();
            assert!(f.is_zero(&eval_on_line(&form, &l)));
        }
        for _ in 0..100 {
            let l = random_line(&mut rng, &f);
            assert_eq!(meets_curve(&l, &c).unwrap(), f.is_zero(&eval_on_line(&form, &l)));
        }
    }

    #[test]
    fn hurwitz_examples() {
        let r = PolyRing::indexed(Rationals, "x", 4);
        let l = LineP3::join(&e(0), &e(1)).unwrap();
        let s = |src: &str| SurfaceP3::new(parse_poly(&r, src).unwrap()).unwrap();
        assert_eq!(
            hurwitz_profile(&l, &s("x0^2 + x1^2 + x2^2 + x3^2")).unwrap(),
            HurwitzProfile::Profile(prof(&[(1, 2)]))
        );
        assert_eq!(hurwitz_profile(&l, &s("x0*x3 - x1^2")).unwrap(), HurwitzProfile::Profile(prof(&[(2, 1)])));
        assert_eq!(hurwitz_profile(&l, &s("x0*x3 - x1*x2")).unwrap(), HurwitzProfile::Contained);
        assert_eq!(classify_hurwitz_singularity(&HurwitzProfile::Contained), Err(Error::SurfaceContainsLine));
    }

    #[test]
    fn contact_table() {
        let d = 7;
        let c = classify_hurwitz_singularity(&HurwitzProfile::Profile(prof(&[(2, 1), (1, d - 2)]))).unwrap();
        assert_eq!(c.kinds, BTreeSet::from([ContactKind::SimpleTangent]));
        assert!(!c.in_sing_ch1());
        let c = classify_hurwitz_singularity(&HurwitzProfile::Profile(prof(&[(2, 2), (1, d - 4)]))).unwrap();
        assert_eq!(c.kinds, BTreeSet::from([ContactKind::Bitangent]));
        let c = classify_hurwitz_singularity(&HurwitzProfile::Profile(prof(&[(4, 1), (1, d - 4)]))).unwrap();
        assert_eq!(c.kinds, BTreeSet::from([ContactKind::Inflectional, ContactKind::ContactOrderGe4]));
        assert!(c.in_sing_infl());
        let c = classify_hurwitz_singularity(&HurwitzProfile::Profile(prof(&[(3, 2), (1, 1)]))).unwrap();
        assert!(c.has(ContactKind::Bitangent) && c.has(ContactKind::InflAtTwoPoints));
        let c = classify_hurwitz_singularity(&HurwitzProfile::Profile(prof(&[(1, 4)]))).unwrap();
        assert_eq!(c.kinds, BTreeSet::from([ContactKind::Transversal]));
    }

    #[test]
    fn generic_restrictions_of_a_smooth_surface_are_squarefree() {
        let f = PrimeField::default();
        let r = PolyRing::indexed(f, "x", 4);
        let s = SurfaceP3::new(parse_poly(&r, "x0^4 + x1^4 + x2^4 + x3^4").unwrap()).unwrap();
        let mut rng = GenericRng::new(8);
        for _ in 0..20 {
            let l = random_line(&mut rng, &f);
            let res = l.restrict(s.equation()).unwrap();
            assert!(!f.is_zero(&res.discriminant().unwrap()));
        }
    }
}
