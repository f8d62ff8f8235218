//! Brute-force counts that reconstruct the enumerative numbers from first
//! principles: projections, pencils, polar systems, Hessians, resultants and
//! Gröbner bases. Nothing here calls into [`crate::formulas`].

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::chowforms::{RationalSpaceCurve, SurfaceP3};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rank, EchelonBasis};
use crate::linegeom::{random_plane, random_point, random_point_in, ProjPoint3};
use crate::poly::{hessian3, sylvester_resultant, BinaryForm, MultiPoly, PolyRing};
use crate::rng::GenericRng;
use crate::solver::{ideal_dimension, QuotientDim};

/// Fresh random draws allowed before an oracle gives up.
pub const MAX_ATTEMPTS: u32 = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub seed: u64,
    pub count: u64,
    /// True when `count` counts points with multiplicity (a quotient dimension).
    pub multiplicity_counted: bool,
    /// Total with multiplicity, when it differs in meaning from `count`.
    pub count_with_multiplicity: Option<u64>,
    pub retries: u32,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl OracleReport {
    /// Equality of everything except the elapsed time.
    pub fn same_result(&self, other: &Self) -> bool {
        self.name == other.name
            && self.seed == other.seed
            && self.count == other.count
            && self.multiplicity_counted == other.multiplicity_counted
            && self.count_with_multiplicity == other.count_with_multiplicity
            && self.retries == other.retries
    }
}

enum Attempt<T> {
    Done(T),
    Retry(String),
}

struct Outcome {
    count: u64,
    with_mult: Option<u64>,
}

fn run<F>(name: &str, seed: u64, multiplicity_counted: bool, mut attempt: F) -> Result<OracleReport>
where
    F: FnMut(&mut GenericRng) -> Result<Attempt<Outcome>>,
{
    let start = Instant::now();
    let mut last = String::new();
    for k in 0..MAX_ATTEMPTS {
        let mut rng = GenericRng::stream(seed, k as u64);
        match attempt(&mut rng)? {
            Attempt::Done(o) => {
                return Ok(OracleReport {
                    name: name.to_string(),
                    seed,
                    count: o.count,
                    multiplicity_counted,
                    count_with_multiplicity: o.with_mult,
                    retries: k,
                    elapsed: start.elapsed(),
                })
            }
            Attempt::Retry(why) => last = why,
        }
    }
    Err(Error::NonGeneric { condition: last, attempts: MAX_ATTEMPTS })
}

fn done(count: u64) -> Result<Attempt<Outcome>> {
    Ok(Attempt::Done(Outcome { count, with_mult: None }))
}

fn retry<T>(why: impl Into<String>) -> Result<Attempt<T>> {
    Ok(Attempt::Retry(why.into()))
}

fn random_invertible<F: Field>(rng: &mut GenericRng, field: &F, n: usize) -> Vec<Vec<F::Elem>> {
    loop {
        let m: Vec<Vec<F::Elem>> = (0..n).map(|_| rng.elems(field, n)).collect();
        if rank(field, &m) == n {
            return m;
        }
    }
}

/// `f(A x)`.
fn linear_change<F: Field>(f: &MultiPoly<F>, a: &[Vec<F::Elem>]) -> Result<MultiPoly<F>> {
    let ring = f.ring();
    let images: Vec<_> = a.iter().map(|row| ring.linear_form(row)).collect();
    f.compose(ring, &images)
}

/// Random linear change followed by setting the last variable to 1.
fn affine_chart<F: Field>(
    polys: &[MultiPoly<F>],
    rng: &mut GenericRng,
) -> Result<(PolyRing<F>, Vec<MultiPoly<F>>)> {
    let ring = polys[0].ring().clone();
    let field = ring.field().clone();
    let n = ring.nvars();
    let a = random_invertible(rng, &field, n);
    let names: Vec<String> = ring.var_names()[..n - 1].to_vec();
    let target = PolyRing::with_names(field, names);
    let mut images: Vec<MultiPoly<F>> = (0..n - 1).map(|i| target.var(i)).collect();
    images.push(target.int(1));
    let mut out = Vec::with_capacity(polys.len());
    for p in polys {
        out.push(linear_change(p, &a)?.compose(&target, &images)?);
    }
    Ok((target, out))
}

/// Quotient dimension of a projective system in two independent random charts.
fn chart_count<F: Field>(polys: &[MultiPoly<F>], rng: &mut GenericRng) -> Result<Attempt<Outcome>> {
    let mut seen = Vec::new();
    for _ in 0..2 {
        let (ring, affine) = affine_chart(polys, rng)?;
        match ideal_dimension(&ring, &affine)? {
            QuotientDim::Finite(n) => seen.push(n),
            QuotientDim::Infinite => return retry("zero-dimensional affine chart"),
        }
    }
    if seen[0] != seen[1] {
        return retry(format!("chart-independent count (charts gave {} and {})", seen[0], seen[1]));
    }
    done(seen[0])
}

fn distinct_roots<F: Field>(form: &BinaryForm<F>) -> Result<u64> {
    Ok(form.multiplicity_profile()?.distinct_roots() as u64)
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Random 2x2 reparametrization `(s, t) -> (a s + b t, c s + e t)` applied to
/// binary forms, returned as polynomials in `ring` variables `s_var`, `t_var`.
fn reparametrize<F: Field>(
    forms: &[BinaryForm<F>],
    m: &[Vec<F::Elem>],
    ring: &PolyRing<F>,
    s_var: usize,
    t_var: usize,
) -> Result<Vec<MultiPoly<F>>> {
    let field = ring.field();
    let st = PolyRing::new(field.clone(), &["s", "t"]);
    let (s, t) = (ring.var(s_var), ring.var(t_var));
    let img = |a: &F::Elem, b: &F::Elem| &s.scale(a) + &t.scale(b);
    let images = [img(&m[0][0], &m[0][1]), img(&m[1][0], &m[1][1])];
    forms.iter().map(|f| f.to_poly(&st).compose(ring, &images)).collect()
}

/// Order of the secant congruence: nodes of the projection of `C` from a
/// random point.
pub fn oracle_sec_order<F: Field>(curve: &RationalSpaceCurve<F>, seed: u64) -> Result<OracleReport> {
    let field = curve.field().clone();
    run("sec_order", seed, false, |rng| {
        let mut counts = Vec::new();
        for _ in 0..2 {
            match projected_nodes(curve, &field, rng)? {
                Some(n) => counts.push(n),
                None => return retry("simple nodes of the projected curve"),
            }
        }
        if counts[0] != counts[1] {
            return retry(format!("projection-independent node count ({} vs {})", counts[0], counts[1]));
        }
        done(counts[0])
    })
}

fn projected_nodes<F: Field>(curve: &RationalSpaceCurve<F>, field: &F, rng: &mut GenericRng) -> Result<Option<u64>> {
    let v = random_point(rng, field);
    let mut eb = EchelonBasis::new(field.clone(), 4);
    eb.insert(v.coords());
    let through_v = eb.nullspace();
    let mix = random_invertible(rng, field, 3);
    let planes: Vec<[F::Elem; 4]> = mix
        .iter()
        .map(|row| {
            std::array::from_fn(|i| {
                row.iter().zip(&through_v).fold(field.zero(), |acc, (c, h)| field.add(&acc, &field.mul(c, &h[i])))
            })
        })
        .collect();
    let projected: Vec<BinaryForm<F>> = planes.iter().map(|h| curve.restrict_plane(h)).collect();
    let reparam = random_invertible(rng, field, 2);

    let ring = PolyRing::new(field.clone(), &["s", "u", "t", "w"]);
    let at_st = reparametrize(&projected, &reparam, &ring, 0, 2)?;
    let at_uw = reparametrize(&projected, &reparam, &ring, 1, 3)?;
    let affine = PolyRing::new(field.clone(), &["s", "u"]);
    let images = [affine.var(0), affine.var(1), affine.int(1), affine.int(1)];
    let diagonal = &affine.var(0) - &affine.var(1);
    let mut quotients = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let minor = &(&at_st[i] * &at_uw[j]) - &(&at_st[j] * &at_uw[i]);
        let minor = minor.compose(&affine, &images)?;
        match minor.div_exact(&diagonal) {
            Some(q) => quotients.push(q),
            None => return Err(Error::Invalid("collinearity minor is not divisible by s - u".into())),
        }
    }
    match ideal_dimension(&affine, &quotients)? {
        QuotientDim::Finite(n) if n % 2 == 0 => Ok(Some(n / 2)),
        _ => Ok(None),
    }
}

/// Class of the secant congruence: pairs among the points of `C` on a random plane.
pub fn oracle_sec_class<F: Field>(curve: &RationalSpaceCurve<F>, seed: u64) -> Result<OracleReport> {
    let field = curve.field().clone();
    let d = curve.degree() as u64;
    run("sec_class", seed, false, |rng| {
        let h = random_plane(rng, &field);
        let n = distinct_roots(&curve.restrict_plane(h.coeffs()))?;
        if n != d {
            return retry("plane meeting the curve transversally");
        }
        done(binom2(n))
    })
}

/// Degree of the Chow hypersurface: lines of a pencil in a random plane that meet `C`.
pub fn oracle_ch0_degree<F: Field>(curve: &RationalSpaceCurve<F>, seed: u64) -> Result<OracleReport> {
    let field = curve.field().clone();
    run("ch0_degree", seed, false, |rng| {
        let h = random_plane(rng, &field);
        let v = random_point_in(rng, &h);
        let a = random_point_in(rng, &h);
        let b = random_point_in(rng, &h);
        let z = random_point(rng, &field);
        if h.contains(&z) {
            return retry("auxiliary point off the plane");
        }
        // gamma(s,t) lies on the pencil line through v and u0 a + u1 b
        // iff det[v, u0 a + u1 b, gamma, z] = 0
        let comps = curve.components();
        let det_with = |p: &ProjPoint3<F>| -> BinaryForm<F> {
            let mut acc = BinaryForm::zero(field.clone(), curve.degree());
            for k in 0..4 {
                let mut rows = vec![v.coords().to_vec(), p.coords().to_vec(), vec![field.zero(); 4], z.coords().to_vec()];
                rows[2][k] = field.one();
                let c = crate::poly::det_bareiss(&field, rows);
                acc = acc.add(&comps[k].scale(&c)).expect("same degree");
            }
            acc
        };
        let da = det_with(&a);
        let db = det_with(&b);
        let pencil = PolyRing::new(field.clone(), &["u0", "u1"]);
        let lift = |f: &BinaryForm<F>| f.map(pencil.clone(), |c| pencil.constant(c.clone()));
        let in_plane = lift(&curve.restrict_plane(h.coeffs()));
        let cond = lift(&da)
            .scale(&pencil.var(0))
            .add(&lift(&db).scale(&pencil.var(1)))
            .expect("same degree");
        let res = sylvester_resultant(&pencil, in_plane.coeffs(), cond.coeffs());
        if res.is_zero() {
            return retry("pencil base point off the curve");
        }
        let deg = res.homogeneous_degree()? as usize;
        let n = distinct_roots(&BinaryForm::from_poly(&res, 0, 1, deg)?)?;
        if n != deg as u64 {
            return retry("pencil lines through distinct curve points");
        }
        done(n)
    })
}

/// Degree of the Hurwitz hypersurface: tangent lines to `S ∩ H` in a pencil
/// through a random point of a random plane `H`.
pub fn oracle_ch1_degree<F: Field>(surface: &SurfaceP3<F>, seed: u64) -> Result<OracleReport> {
    let f = surface.equation();
    let field = f.field().clone();
    let d = surface.degree() as usize;
    if d < 2 {
        return Err(Error::Invalid("a plane has no tangent lines in this sense".into()));
    }
    run("ch1_degree", seed, false, |rng| {
        let h = random_plane(rng, &field);
        let v = random_point_in(rng, &h);
        let a = random_point_in(rng, &h);
        let b = random_point_in(rng, &h);
        let big = PolyRing::new(field.clone(), &["u0", "u1", "s", "t"]);
        let (u0, u1, s, t) = (big.var(0), big.var(1), big.var(2), big.var(3));
        let images: Vec<MultiPoly<F>> = (0..4)
            .map(|i| {
                let w = &u0.scale(&a.coords()[i]) + &u1.scale(&b.coords()[i]);
                &s.scale(&v.coords()[i]) + &(&t * &w)
            })
            .collect();
        let restricted = f.compose(&big, &images)?;
        let pencil = PolyRing::new(field.clone(), &["u0", "u1"]);
        let mut coeffs = vec![pencil.zero_poly(); d + 1];
        for (m, c) in restricted.terms() {
            let e = m.exponents();
            let k = e[3] as usize;
            coeffs[k] = &coeffs[k] + &pencil.term(vec![e[0], e[1]], c.clone());
        }
        let form = BinaryForm::new(pencil.clone(), coeffs);
        let disc = form.discriminant()?;
        if disc.is_zero() {
            return retry("pencil without a tangent base point");
        }
        let deg = disc.homogeneous_degree()? as usize;
        let bin = BinaryForm::from_poly(&disc, 0, 1, deg)?;
        done(distinct_roots(&bin)?)
    })
}

/// Gröbner test: the partial derivatives have no common projective zero.
pub fn is_smooth_hypersurface<F: Field>(f: &MultiPoly<F>) -> Result<bool> {
    let ring = f.ring();
    let partials: Vec<_> = (0..ring.nvars()).map(|i| f.derivative(i)).collect();
    Ok(matches!(ideal_dimension(ring, &partials)?, QuotientDim::Finite(_)))
}

fn check_plane_curve<F: Field>(f: &MultiPoly<F>) -> Result<u32> {
    if f.ring().nvars() != 3 {
        return Err(Error::Invalid("plane curve equation needs 3 variables".into()));
    }
    let d = f.homogeneous_degree()?;
    if !is_smooth_hypersurface(f)? {
        return Err(Error::NonGeneric { condition: "smooth plane curve; the partial derivatives share a zero".into(), attempts: 1 });
    }
    Ok(d)
}

/// Inflection points of a smooth plane curve as `V(f) ∩ V(Hess f)`,
/// eliminating one variable by a resultant in a random chart.
pub fn oracle_plane_inflections<F: Field>(f: &MultiPoly<F>, seed: u64) -> Result<OracleReport> {
    let d = check_plane_curve(f)?;
    if d < 3 {
        return Err(Error::Invalid("inflections need degree at least 3".into()));
    }
    let field = f.field().clone();
    run("plane_inflections", seed, false, |rng| {
        let mut seen = Vec::new();
        for _ in 0..2 {
            let a = random_invertible(rng, &field, 3);
            let g = linear_change(f, &a)?;
            let hess = hessian3(&g)?;
            let gz = g.coefficients_in(2);
            let hz = hess.coefficients_in(2);
            if gz.len() != d as usize + 1 || hz.len() != 3 * (d as usize - 2) + 1 {
                return retry("projection centre off the curve and its Hessian");
            }
            let rev = |v: Vec<MultiPoly<F>>| v.into_iter().rev().collect::<Vec<_>>();
            let ring = g.ring().clone();
            let res = sylvester_resultant(&ring, &rev(gz), &rev(hz));
            if res.is_zero() {
                return Err(Error::Invalid("curve shares a component with its Hessian".into()));
            }
            let deg = res.homogeneous_degree()? as usize;
            let bin = BinaryForm::from_poly(&res, 0, 1, deg)?;
            seen.push((distinct_roots(&bin)?, deg as u64));
        }
        if seen[0] != seen[1] {
            return retry("chart-independent inflection count");
        }
        Ok(Attempt::Done(Outcome { count: seen[0].0, with_mult: Some(seen[0].1) }))
    })
}

/// Bitangents of a smooth plane quartic: lines `y = m x + b` with
/// `f(x, m x + b, 1) = c (x^2 + p x + q)^2`, counted by a quotient dimension.
pub fn oracle_plane_bitangents<F: Field>(f: &MultiPoly<F>, seed: u64) -> Result<OracleReport> {
    let d = check_plane_curve(f)?;
    if d != 4 {
        return Err(Error::Invalid(format!("bitangent oracle handles quartics only, got degree {d}")));
    }
    let field = f.field().clone();
    run("plane_bitangents", seed, true, |rng| {
        let mut seen = Vec::new();
        for _ in 0..2 {
            let a = random_invertible(rng, &field, 3);
            let g = linear_change(f, &a)?;
            let big = PolyRing::new(field.clone(), &["m", "b", "p", "q", "X"]);
            let (m, b, p, q, x) = (big.var(0), big.var(1), big.var(2), big.var(3), big.var(4));
            let on_line = g.compose(&big, &[x.clone(), &(&m * &x) + &b, big.int(1)])?;
            let cx = on_line.coefficients_in(4);
            if cx.len() != 5 {
                return retry("quartic with full degree along the chart's lines");
            }
            let two = big.int(2);
            let square = [&q * &q, &two * &(&p * &q), &(&p * &p) + &(&two * &q), &two * &p];
            let c = &cx[4];
            let eqs: Vec<MultiPoly<F>> = (0..4).map(|k| &cx[k] - &(c * &square[k])).collect();
            let small = PolyRing::new(field.clone(), &["m", "b", "p", "q"]);
            let map = [Some(0), Some(1), Some(2), Some(3), None];
            let eqs: Vec<_> = eqs.iter().map(|e| e.remap(&small, &map)).collect::<Result<_>>()?;
            match ideal_dimension(&small, &eqs)? {
                QuotientDim::Finite(n) => seen.push(n),
                QuotientDim::Infinite => return retry("zero-dimensional bitangent system"),
            }
        }
        if seen[0] != seen[1] {
            return retry(format!("chart-independent bitangent count ({} vs {})", seen[0], seen[1]));
        }
        done(seen[0])
    })
}

fn check_surface<F: Field>(surface: &SurfaceP3<F>) -> Result<u32> {
    if surface.degree() < 2 {
        return Err(Error::Invalid("surface degree must be at least 2".into()));
    }
    Ok(surface.degree())
}

/// Points of `S` whose tangent line through a random `y` has contact at
/// least 3: `V(f, P_y f, P_y^2 f)`.
pub fn oracle_infl_through_point<F: Field>(surface: &SurfaceP3<F>, seed: u64) -> Result<OracleReport> {
    check_surface(surface)?;
    let f = surface.equation();
    let field = f.field().clone();
    run("infl_through_point", seed, true, |rng| {
        let y = random_point(rng, &field);
        if f.eval(y.coords()) == field.zero() {
            return retry("centre off the surface");
        }
        let g = f.polar(y.coords())?;
        let h = g.polar(y.coords())?;
        chart_count(&[f.clone(), g, h], rng)
    })
}

/// Degree of the dual surface: tangent planes through a random line,
/// `V(f, P_y f, P_z f)`.
pub fn oracle_dual_surface_degree<F: Field>(surface: &SurfaceP3<F>, seed: u64) -> Result<OracleReport> {
    check_surface(surface)?;
    let f = surface.equation();
    let field = f.field().clone();
    run("dual_surface_degree", seed, true, |rng| {
        let y = random_point(rng, &field);
        let z = random_point(rng, &field);
        let g = f.polar(y.coords())?;
        let gt = f.polar(z.coords())?;
        chart_count(&[f.clone(), g, gt], rng)
    })
}

/// A rational plane curve `(phi_0 : phi_1 : phi_2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneParametrization<F: Field> {
    phi: [BinaryForm<F>; 3],
}

impl<F: Field> PlaneParametrization<F> {
    pub fn new(phi: [BinaryForm<F>; 3]) -> Result<Self> {
        let d = phi[0].degree();
        if d == 0 || phi.iter().any(|p| p.degree() != d) {
            return Err(Error::Invalid("components must share one positive degree".into()));
        }
        if content(&phi)?.degree() > 0 {
            return Err(Error::Invalid("components share a common factor".into()));
        }
        Ok(PlaneParametrization { phi })
    }

    pub fn from_ints(field: F, coeffs: [&[i64]; 3]) -> Result<Self> {
        Self::new(coeffs.map(|c| BinaryForm::from_ints(field.clone(), c)))
    }

    /// `(s^2 : s t : t^2)`.
    pub fn conic(field: F) -> Self {
        Self::from_ints(field, [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    /// `(s^3 : s t^2 : t^3)`, one cusp at `(1:0:0)`.
    pub fn cuspidal_cubic(field: F) -> Self {
        Self::from_ints(field, [&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    /// `((s^2 - t^2) t : s (s^2 - t^2) : t^3)`, the node of `y^2 z = x^2 (x + z)`.
    pub fn nodal_cubic(field: F) -> Self {
        Self::from_ints(field, [&[0, 1, 0, -1], &[1, 0, -1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    pub fn components(&self) -> &[BinaryForm<F>; 3] {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.phi[0].degree()
    }
}

fn content<F: Field>(forms: &[BinaryForm<F>]) -> Result<BinaryForm<F>> {
    let mut g = forms[0].clone();
    for p in &forms[1..] {
        g = g.gcd(p)?;
    }
    Ok(g)
}

fn sub_forms<F: Field>(a: &BinaryForm<F>, b: &BinaryForm<F>) -> BinaryForm<F> {
    let field = a.ring().clone();
    a.add(&b.scale(&field.neg(&field.one()))).expect("same degree")
}

/// Number of parameters over a random image point, from the gcd of the
/// 2x2 minors `phi_i(s,t) phi_j(p) - phi_j(s,t) phi_i(p)`.
fn fibre_degree<F: Field>(phi: &[BinaryForm<F>; 3], rng: &mut GenericRng) -> Result<Option<usize>> {
    let field = phi[0].ring().clone();
    let s0 = rng.elem(&field);
    let t0 = rng.nonzero_elem(&field);
    let at: Vec<F::Elem> = phi.iter().map(|p| p.eval(&s0, &t0)).collect();
    if at.iter().all(|c| field.is_zero(c)) {
        return Ok(None);
    }
    let mut minors = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let m = sub_forms(&phi[i].scale(&at[j]), &phi[j].scale(&at[i]));
        if !m.is_zero() {
            minors.push(m);
        }
    }
    Ok(Some(content(&minors)?.degree()))
}

/// Degree of the dual curve from the tangent-line parametrization
/// `phi_s x phi_t`, after removing its content.
pub fn oracle_dual_curve_degree<F: Field>(curve: &PlaneParametrization<F>, seed: u64) -> Result<OracleReport> {
    let field = curve.phi[0].ring().clone();
    let [a0, a1, a2] = curve.phi.clone().map(|p| p.derivative_s());
    let [b0, b1, b2] = curve.phi.clone().map(|p| p.derivative_t());
    let cross = [
        sub_forms(&a1.mul(&b2), &a2.mul(&b1)),
        sub_forms(&a2.mul(&b0), &a0.mul(&b2)),
        sub_forms(&a0.mul(&b1), &a1.mul(&b0)),
    ];
    if cross.iter().all(|c| c.is_zero()) {
        return Err(Error::Invalid("the parametrization maps onto a line".into()));
    }
    let g = content(&cross)?;
    let reduced: [BinaryForm<F>; 3] =
        cross.map(|c| if c.is_zero() { BinaryForm::zero(field.clone(), 0) } else { c.div_exact(&g).expect("content divides") });
    let deg = reduced.iter().map(|c| c.degree()).max().unwrap();
    let reduced = reduced.map(|c| if c.is_zero() { BinaryForm::zero(field.clone(), deg) } else { c });
    run("dual_curve_degree", seed, false, |rng| {
        let input = fibre_degree(&curve.phi, rng)?;
        let dual = fibre_degree(&reduced, rng)?;
        match (input, dual) {
            (Some(1), Some(k)) if k >= 1 && deg % k == 0 => done((deg / k) as u64),
            (Some(k), _) if k > 1 => {
                let again = fibre_degree(&curve.phi, rng)?;
                if again == Some(k) {
                    Err(Error::Invalid(format!("the parametrization is {k}-to-1 onto its image")))
                } else {
                    retry("general point of the curve")
                }
            }
            _ => retry("general point of the curve"),
        }
    })
}

/// Named test objects.
pub mod named {
    use super::*;

    pub fn surface_ring<F: Field>(field: F) -> PolyRing<F> {
        PolyRing::indexed(field, "x", 4)
    }

    pub fn plane_ring<F: Field>(field: F) -> PolyRing<F> {
        PolyRing::new(field, &["x", "y", "z"])
    }

    fn fermat<F: Field>(ring: &PolyRing<F>, d: u32) -> MultiPoly<F> {
        let n = ring.nvars();
        let mut f = ring.zero_poly();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = d;
            f = &f + &ring.term(e, ring.field().one());
        }
        f
    }

    fn random_form<F: Field>(ring: &PolyRing<F>, d: u32, seed: u64) -> MultiPoly<F> {
        let mut rng = GenericRng::new(seed);
        let mut f = ring.zero_poly();
        for m in ring.monomials_of_degree(d) {
            f = &f + &ring.term(m.exponents().to_vec(), rng.elem(ring.field()));
        }
        f
    }

    pub fn fermat_surface<F: Field>(field: F, d: u32) -> Result<SurfaceP3<F>> {
        SurfaceP3::new(fermat(&surface_ring(field), d))
    }

    pub fn random_surface<F: Field>(field: F, d: u32, seed: u64) -> Result<SurfaceP3<F>> {
        SurfaceP3::new(random_form(&surface_ring(field), d, seed))
    }

    pub fn fermat_plane_curve<F: Field>(field: F, d: u32) -> MultiPoly<F> {
        fermat(&plane_ring(field), d)
    }

    pub fn random_plane_curve<F: Field>(field: F, d: u32, seed: u64) -> MultiPoly<F> {
        random_form(&plane_ring(field), d, seed)
    }

    /// `x^3 y + y^3 z + z^3 x`.
    pub fn klein_quartic<F: Field>(field: F) -> MultiPoly<F> {
        crate::poly::parse_poly(&plane_ring(field), "x^3*y + y^3*z + z^3*x").unwrap()
    }

    /// `(x^2 + y^2 - z^2) (x^2 - 2 y^2 + 3 z^2)`, singular where the conics meet.
    pub fn conic_pair<F: Field>(field: F) -> MultiPoly<F> {
        crate::poly::parse_poly(&plane_ring(field), "(x^2 + y^2 - z^2)*(x^2 - 2*y^2 + 3*z^2)").unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn secant_class_counts() {
        let tc = RationalSpaceCurve::twisted_cubic(fp());
        assert_eq!(oracle_sec_class(&tc, 1).unwrap().count, 3);
        assert_eq!(oracle_sec_class(&RationalSpaceCurve::rational_quartic(fp()), 1).unwrap().count, 6);
        assert_eq!(oracle_sec_class(&RationalSpaceCurve::plane_conic(fp()), 1).unwrap().count, 1);
    }

    #[test]
    fn secant_order_counts() {
        assert_eq!(oracle_sec_order(&RationalSpaceCurve::twisted_cubic(fp()), 1).unwrap().count, 1);
        assert_eq!(oracle_sec_order(&RationalSpaceCurve::rational_quartic(fp()), 2).unwrap().count, 3);
        assert_eq!(oracle_sec_order(&RationalSpaceCurve::twisted_cubic(Rationals), 3).unwrap().count, 1);
    }

    #[test]
    fn chow_and_hurwitz_degrees() {
        assert_eq!(oracle_ch0_degree(&RationalSpaceCurve::twisted_cubic(fp()), 4).unwrap().count, 3);
        let quadric = fermat_surface(fp(), 2).unwrap();
        assert_eq!(oracle_ch1_degree(&quadric, 5).unwrap().count, 2);
        let cubic = random_surface(fp(), 3, 9).unwrap();
        assert_eq!(oracle_ch1_degree(&cubic, 5).unwrap().count, 6);
    }

    #[test]
    fn plane_inflection_counts() {
        let cubic = fermat_plane_curve(fp(), 3);
        let r = oracle_plane_inflections(&cubic, 1).unwrap();
        assert_eq!((r.count, r.count_with_multiplicity), (9, Some(9)));
        let fermat4 = fermat_plane_curve(fp(), 4);
        let r = oracle_plane_inflections(&fermat4, 1).unwrap();
        assert_eq!((r.count, r.count_with_multiplicity), (12, Some(24)));
    }

    #[test]
    fn singular_curves_are_refused() {
        let err = oracle_plane_bitangents(&conic_pair(fp()), 1).unwrap_err();
        assert!(matches!(err, Error::NonGeneric { .. }));
        assert!(!is_smooth_hypersurface(&conic_pair(fp())).unwrap());
        assert!(is_smooth_hypersurface(&klein_quartic(fp())).unwrap());
    }

    #[test]
    fn polar_counts_small_degree() {
        let quadric = fermat_surface(fp(), 2).unwrap();
        assert_eq!(oracle_infl_through_point(&quadric, 1).unwrap().count, 0);
        assert_eq!(oracle_dual_surface_degree(&quadric, 1).unwrap().count, 2);
        let cubic = random_surface(fp(), 3, 2).unwrap();
        assert_eq!(oracle_infl_through_point(&cubic, 1).unwrap().count, 6);
        assert_eq!(oracle_dual_surface_degree(&cubic, 1).unwrap().count, 12);
    }

    #[test]
    fn dual_curve_degrees() {
        for field_seed in [1u64, 2] {
            assert_eq!(oracle_dual_curve_degree(&PlaneParametrization::conic(Rationals), field_seed).unwrap().count, 2);
            assert_eq!(oracle_dual_curve_degree(&PlaneParametrization::cuspidal_cubic(Rationals), field_seed).unwrap().count, 3);
            assert_eq!(oracle_dual_curve_degree(&PlaneParametrization::nodal_cubic(Rationals), field_seed).unwrap().count, 4);
        }
        let double_cover = PlaneParametrization::from_ints(Rationals, [&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]]).unwrap();
        assert!(oracle_dual_curve_degree(&double_cover, 1).is_err());
    }

    #[test]
    fn reports_are_seed_stable() {
        let tc = RationalSpaceCurve::twisted_cubic(fp());
        let a = oracle_sec_order(&tc, 77).unwrap();
        let b = oracle_sec_order(&tc, 77).unwrap();
        assert!(a.same_result(&b));
        let c = oracle_sec_order(&tc, 78).unwrap();
        assert_eq!(a.count, c.count);
    }
}
