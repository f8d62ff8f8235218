//! Points, planes and lines of `P^3` in Plücker coordinates.
//!
//! Coordinate order for both vectors is `01, 02, 03, 12, 13, 23`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::rref;
use crate::poly::{BinaryForm, MultiPoly, PolyRing};
use crate::rng::GenericRng;

/// Index pairs of the six Plücker coordinates.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("i < j < 4")
}

fn minors<F: Field>(field: &F, a: &[F::Elem; 4], b: &[F::Elem; 4]) -> [F::Elem; 6] {
    PAIRS.map(|(i, j)| field.sub(&field.mul(&a[i], &b[j]), &field.mul(&a[j], &b[i])))
}

fn all_zero<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// Proportionality of two vectors via all 2x2 minors.
fn proportional<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let m = field.sub(&field.mul(&a[i], &b[j]), &field.mul(&a[j], &b[i]));
            if !field.is_zero(&m) {
                return false;
            }
        }
    }
    true
}

fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// `p01 p23 - p02 p13 + p03 p12`
pub fn plucker_relation<F: Field>(field: &F, v: &[F::Elem; 6]) -> F::Elem {
    let t1 = field.mul(&v[0], &v[5]);
    let t2 = field.mul(&v[1], &v[4]);
    let t3 = field.mul(&v[2], &v[3]);
    field.add(&field.sub(&t1, &t2), &t3)
}

/// The signed permutation taking primal to dual coordinates.
/// It is an involution, so it also maps dual to primal.
fn swap_coordinates<F: Field>(field: &F, v: &[F::Elem; 6]) -> [F::Elem; 6] {
    [v[5].clone(), field.neg(&v[4]), v[3].clone(), v[2].clone(), field.neg(&v[1]), v[0].clone()]
}

/// Dual coordinates of a primal Plücker vector.
pub fn primal_to_dual<F: Field>(field: &F, p: &[F::Elem; 6]) -> Result<[F::Elem; 6]> {
    if !field.is_zero(&plucker_relation(field, p)) {
        return Err(Error::PluckerRelation);
    }
    Ok(swap_coordinates(field, p))
}

/// Primal coordinates of a dual Plücker vector.
pub fn dual_to_primal<F: Field>(field: &F, q: &[F::Elem; 6]) -> Result<[F::Elem; 6]> {
    primal_to_dual(field, q)
}

/// A point `(x0:x1:x2:x3)`.
#[derive(Clone, Debug)]
pub struct ProjPoint3<F: Field> {
    field: F,
    coords: [F::Elem; 4],
}

/// A plane `a0 x0 + a1 x1 + a2 x2 + a3 x3 = 0`.
#[derive(Clone, Debug)]
pub struct ProjPlane3<F: Field> {
    field: F,
    coeffs: [F::Elem; 4],
}

impl<F: Field> ProjPoint3<F> {
    pub fn new(field: F, coords: [F::Elem; 4]) -> Result<Self> {
        if all_zero(&field, &coords) {
            return Err(Error::Invalid("all point coordinates are zero".into()));
        }
        Ok(ProjPoint3 { field, coords })
    }

    pub fn from_ints(field: F, c: [i64; 4]) -> Result<Self> {
        let coords = c.map(|v| field.from_i64(v));
        Self::new(field, coords)
    }

    pub fn coords(&self) -> &[F::Elem; 4] {
        &self.coords
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn proj_eq(&self, other: &Self) -> bool {
        proportional(&self.field, &self.coords, &other.coords)
    }
}

impl<F: Field> PartialEq for ProjPoint3<F> {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl<F: Field> ProjPlane3<F> {
    pub fn new(field: F, coeffs: [F::Elem; 4]) -> Result<Self> {
        if all_zero(&field, &coeffs) {
            return Err(Error::Invalid("all plane coefficients are zero".into()));
        }
        Ok(ProjPlane3 { field, coeffs })
    }

    pub fn from_ints(field: F, c: [i64; 4]) -> Result<Self> {
        let coeffs = c.map(|v| field.from_i64(v));
        Self::new(field, coeffs)
    }

    /// Coordinate hyperplane `x_i = 0`.
    pub fn coordinate(field: F, i: usize) -> Self {
        let mut c = [0i64; 4];
        c[i] = 1;
        Self::from_ints(field, c).unwrap()
    }

    pub fn coeffs(&self) -> &[F::Elem; 4] {
        &self.coeffs
    }

    pub fn contains(&self, x: &ProjPoint3<F>) -> bool {
        self.field.is_zero(&dot(&self.field, &self.coeffs, &x.coords))
    }

    pub fn proj_eq(&self, other: &Self) -> bool {
        proportional(&self.field, &self.coeffs, &other.coeffs)
    }
}

impl<F: Field> PartialEq for ProjPlane3<F> {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

/// A line of `P^3` carrying synchronized primal (`p`) and dual (`q`) coordinates.
#[derive(Clone, Debug)]
pub struct LineP3<F: Field> {
    field: F,
    p: [F::Elem; 6],
    q: [F::Elem; 6],
}

impl<F: Field> LineP3<F> {
    pub fn from_primal(field: F, p: [F::Elem; 6]) -> Result<Self> {
        if all_zero(&field, &p) {
            return Err(Error::Invalid("all Plücker coordinates are zero".into()));
        }
        let q = primal_to_dual(&field, &p)?;
        Ok(LineP3 { field, p, q })
    }

    pub fn from_dual(field: F, q: [F::Elem; 6]) -> Result<Self> {
        if all_zero(&field, &q) {
            return Err(Error::Invalid("all Plücker coordinates are zero".into()));
        }
        let p = dual_to_primal(&field, &q)?;
        Ok(LineP3 { field, p, q })
    }

    /// Line through two distinct points.
    pub fn join(a: &ProjPoint3<F>, b: &ProjPoint3<F>) -> Result<Self> {
        let field = a.field.clone();
        let p = minors(&field, &a.coords, &b.coords);
        if all_zero(&field, &p) {
            return Err(Error::CoincidentPoints);
        }
        let q = swap_coordinates(&field, &p);
        Ok(LineP3 { field, p, q })
    }

    /// Intersection of two distinct planes.
    pub fn meet(h1: &ProjPlane3<F>, h2: &ProjPlane3<F>) -> Result<Self> {
        let field = h1.field.clone();
        let q = minors(&field, &h1.coeffs, &h2.coeffs);
        if all_zero(&field, &q) {
            return Err(Error::CoincidentPlanes);
        }
        let p = swap_coordinates(&field, &q);
        Ok(LineP3 { field, p, q })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn primal(&self) -> &[F::Elem; 6] {
        &self.p
    }

    pub fn dual(&self) -> &[F::Elem; 6] {
        &self.q
    }

    fn skew(&self, v: &[F::Elem; 6]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = vec![vec![f.zero(); 4]; 4];
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            m[i][j] = v[k].clone();
            m[j][i] = f.neg(&v[k]);
        }
        m
    }

    pub fn contains_point(&self, x: &ProjPoint3<F>) -> bool {
        let f = &self.field;
        self.skew(&self.q).iter().all(|row| f.is_zero(&dot(f, row, &x.coords)))
    }

    pub fn lies_in_plane(&self, h: &ProjPlane3<F>) -> bool {
        let f = &self.field;
        self.skew(&self.p).iter().all(|row| f.is_zero(&dot(f, row, &h.coeffs)))
    }

    /// Bilinear pairing `p(self) . q(other)`; zero iff the lines meet.
    pub fn pairing(&self, other: &Self) -> F::Elem {
        dot(&self.field, &self.p, &other.q)
    }

    pub fn meets(&self, other: &Self) -> bool {
        self.field.is_zero(&self.pairing(other))
    }

    pub fn proj_eq(&self, other: &Self) -> bool {
        proportional(&self.field, &self.p, &other.p)
    }

    fn echelon_pair(&self, v: &[F::Elem; 6]) -> [[F::Elem; 4]; 2] {
        let (rows, _) = rref(&self.field, &self.skew(v));
        assert_eq!(rows.len(), 2, "a valid line has rank-2 Plücker matrices");
        let to4 = |r: &Vec<F::Elem>| [r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()];
        [to4(&rows[0]), to4(&rows[1])]
    }

    /// Two points spanning the line: the reduced row echelon rows of its
    /// point matrix. Deterministic for a given projective line.
    pub fn spanning_points(&self) -> [ProjPoint3<F>; 2] {
        let [a, b] = self.echelon_pair(&self.p);
        [ProjPoint3 { field: self.field.clone(), coords: a }, ProjPoint3 { field: self.field.clone(), coords: b }]
    }

    /// Two planes containing the line, chosen the same way from the dual side.
    pub fn spanning_planes(&self) -> [ProjPlane3<F>; 2] {
        let [a, b] = self.echelon_pair(&self.q);
        [ProjPlane3 { field: self.field.clone(), coeffs: a }, ProjPlane3 { field: self.field.clone(), coeffs: b }]
    }

    /// The point `s P + t Q` for the spanning points `P, Q`.
    pub fn point_at(&self, s: &F::Elem, t: &F::Elem) -> ProjPoint3<F> {
        let f = &self.field;
        let [a, b] = self.spanning_points();
        let coords = std::array::from_fn(|i| f.add(&f.mul(s, &a.coords[i]), &f.mul(t, &b.coords[i])));
        ProjPoint3 { field: f.clone(), coords }
    }

    /// `f(s P + t Q)` for a homogeneous `f` in four variables; the zero form
    /// signals that the line lies on `V(f)`.
    pub fn restrict(&self, f: &MultiPoly<F>) -> Result<BinaryForm<F>> {
        if f.ring().nvars() != 4 {
            return Err(Error::Invalid("restriction to a line needs a polynomial in 4 variables".into()));
        }
        let d = f.homogeneous_degree()? as usize;
        let st = PolyRing::new(self.field.clone(), &["s", "t"]);
        let [a, b] = self.spanning_points();
        let images: Vec<_> = (0..4)
            .map(|i| st.linear_form(&[a.coords[i].clone(), b.coords[i].clone()]))
            .collect();
        let g = f.compose(&st, &images)?;
        BinaryForm::from_poly(&g, 0, 1, d)
    }

    /// `p01,p02,p03,p12,p13,p23` as comma-separated scalars.
    pub fn primal_string(&self) -> String {
        self.p.iter().map(|c| self.field.format_elem(c)).collect::<Vec<_>>().join(",")
    }

    pub fn dual_string(&self) -> String {
        self.q.iter().map(|c| self.field.format_elem(c)).collect::<Vec<_>>().join(",")
    }
}

impl<F: Field> PartialEq for LineP3<F> {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl<F: Field> fmt::Display for LineP3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p=({}) q=({})", self.primal_string(), self.dual_string())
    }
}

/// `restrict_to_line` as a free function.
pub fn restrict_to_line<F: Field>(f: &MultiPoly<F>, line: &LineP3<F>) -> Result<BinaryForm<F>> {
    line.restrict(f)
}

/// Index of `p_{ij}` (or `q_{ij}`) in the coordinate vectors.
pub fn join_points<F: Field>(a: &ProjPoint3<F>, b: &ProjPoint3<F>) -> Result<LineP3<F>> {
    LineP3::join(a, b)
}

pub fn meet_planes<F: Field>(h1: &ProjPlane3<F>, h2: &ProjPlane3<F>) -> Result<LineP3<F>> {
    LineP3::meet(h1, h2)
}

/// `sum_i y_i * df/dx_i` for a surface equation `f` and a point `y`.
pub fn polar_poly<F: Field>(f: &MultiPoly<F>, y: &ProjPoint3<F>) -> Result<MultiPoly<F>> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    f.polar(y.coords())
}

pub fn coordinate_index(i: usize, j: usize) -> usize {
    if i < j {
        pair_index(i, j)
    } else {
        pair_index(j, i)
    }
}

/// Incidence flag `v in L subset H`.
#[derive(Clone, Debug)]
pub struct Flag<F: Field> {
    pub point: ProjPoint3<F>,
    pub line: LineP3<F>,
    pub plane: ProjPlane3<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    Point,
    Plane,
    LineThroughPoint,
    LineInPlane,
    Flag,
}

#[derive(Clone, Debug)]
pub enum Config<F: Field> {
    Point(ProjPoint3<F>),
    Plane(ProjPlane3<F>),
    /// A random point and a random line through it.
    LineThroughPoint(ProjPoint3<F>, LineP3<F>),
    /// A random plane and a random line inside it.
    LineInPlane(ProjPlane3<F>, LineP3<F>),
    Flag(Flag<F>),
}

pub fn random_point<F: Field>(rng: &mut GenericRng, field: &F) -> ProjPoint3<F> {
    loop {
        let c: [F::Elem; 4] = std::array::from_fn(|_| rng.elem(field));
        if let Ok(p) = ProjPoint3::new(field.clone(), c) {
            return p;
        }
    }
}

pub fn random_plane<F: Field>(rng: &mut GenericRng, field: &F) -> ProjPlane3<F> {
    loop {
        let c: [F::Elem; 4] = std::array::from_fn(|_| rng.elem(field));
        if let Ok(h) = ProjPlane3::new(field.clone(), c) {
            return h;
        }
    }
}

pub fn random_line<F: Field>(rng: &mut GenericRng, field: &F) -> LineP3<F> {
    let a = random_point(rng, field);
    random_line_through(rng, &a)
}

pub fn random_line_through<F: Field>(rng: &mut GenericRng, v: &ProjPoint3<F>) -> LineP3<F> {
    loop {
        let b = random_point(rng, &v.field);
        if let Ok(l) = LineP3::join(v, &b) {
            return l;
        }
    }
}

pub fn random_line_in<F: Field>(rng: &mut GenericRng, h: &ProjPlane3<F>) -> LineP3<F> {
    loop {
        let k = random_plane(rng, &h.field);
        if let Ok(l) = LineP3::meet(h, &k) {
            return l;
        }
    }
}

/// A random point of the plane `h`.
pub fn random_point_in<F: Field>(rng: &mut GenericRng, h: &ProjPlane3<F>) -> ProjPoint3<F> {
    let f = &h.field;
    let k = (0..4).find(|&i| !f.is_zero(&h.coeffs[i])).expect("plane is nonzero");
    loop {
        let mut c: [F::Elem; 4] = std::array::from_fn(|_| rng.elem(f));
        c[k] = f.zero();
        // solve h . c = 0 for the k-th coordinate
        let rest = dot(f, &h.coeffs, &c);
        c[k] = f.neg(&f.div(&rest, &h.coeffs[k]).expect("nonzero pivot"));
        if let Ok(p) = ProjPoint3::new(f.clone(), c) {
            return p;
        }
    }
}

pub fn random_flag<F: Field>(rng: &mut GenericRng, field: &F) -> Flag<F> {
    let plane = random_plane(rng, field);
    let point = random_point_in(rng, &plane);
    loop {
        let other = random_point_in(rng, &plane);
        if let Ok(line) = LineP3::join(&point, &other) {
            return Flag { point, line, plane };
        }
    }
}

/// Deterministic random configuration of the requested kind.
pub fn random_config<F: Field>(rng: &mut GenericRng, field: &F, kind: ConfigKind) -> Config<F> {
    match kind {
        ConfigKind::Point => Config::Point(random_point(rng, field)),
        ConfigKind::Plane => Config::Plane(random_plane(rng, field)),
        ConfigKind::LineThroughPoint => {
            let v = random_point(rng, field);
            let l = random_line_through(rng, &v);
            Config::LineThroughPoint(v, l)
        }
        ConfigKind::LineInPlane => {
            let h = random_plane(rng, field);
            let l = random_line_in(rng, &h);
            Config::LineInPlane(h, l)
        }
        ConfigKind::Flag => Config::Flag(random_flag(rng, field)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, Ring};
    use crate::poly::parse_poly;
    use crate::rng::DEFAULT_SEED;
    use proptest::prelude::*;

    fn pt(c: [i64; 4]) -> ProjPoint3<Rationals> {
        ProjPoint3::from_ints(Rationals, c).unwrap()
    }

    fn ints(v: &[i64]) -> [num_rational::BigRational; 6] {
        std::array::from_fn(|i| Rationals.from_i64(v[i]))
    }

    fn e(i: usize) -> ProjPoint3<Rationals> {
        let mut c = [0; 4];
        c[i] = 1;
        pt(c)
    }

    #[test]
    fn join_examples() {
        let l = LineP3::join(&e(0), &e(1)).unwrap();
        assert_eq!(l.primal(), &ints(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(LineP3::join(&e(0), &e(0)).unwrap_err(), Error::CoincidentPoints);
        let l = LineP3::join(&pt([1, 2, 3, 4]), &pt([0, 1, 1, 1])).unwrap();
        assert_eq!(l.primal(), &ints(&[1, 1, 1, -1, -2, -1]));
    }

    #[test]
    fn meet_examples() {
        let h2 = ProjPlane3::coordinate(Rationals, 2);
        let h3 = ProjPlane3::coordinate(Rationals, 3);
        let l = LineP3::meet(&h2, &h3).unwrap();
        assert!(l.proj_eq(&LineP3::from_primal(Rationals, ints(&[1, 0, 0, 0, 0, 0])).unwrap()));
        assert_eq!(LineP3::meet(&h2, &h2).unwrap_err(), Error::CoincidentPlanes);
        assert!(l.proj_eq(&LineP3::meet(&h3, &h2).unwrap()));
    }

    #[test]
    fn dual_map_examples() {
        let q = Rationals;
        assert_eq!(primal_to_dual(&q, &ints(&[1, 0, 0, 0, 0, 0])).unwrap(), ints(&[0, 0, 0, 0, 0, 1]));
        let p = ints(&[1, 1, 1, -1, -2, -1]);
        let d = primal_to_dual(&q, &p).unwrap();
        assert_eq!(d, ints(&[-1, 2, -1, 1, -1, 1]));
        assert_eq!(dual_to_primal(&q, &d).unwrap(), p);
        assert_eq!(primal_to_dual(&q, &ints(&[1, 0, 0, 0, 0, 1])), Err(Error::PluckerRelation));
    }

    #[test]
    fn incidence_examples() {
        let l01 = LineP3::join(&e(0), &e(1)).unwrap();
        let l23 = LineP3::join(&e(2), &e(3)).unwrap();
        let l12 = LineP3::join(&e(1), &e(2)).unwrap();
        assert!(l01.contains_point(&e(0)));
        assert!(!l01.contains_point(&e(2)));
        assert!(!l01.meets(&l23));
        assert!(l01.meets(&l12));
        assert!(l01.lies_in_plane(&ProjPlane3::coordinate(Rationals, 3)));
        assert!(!l01.lies_in_plane(&ProjPlane3::coordinate(Rationals, 0)));
    }

    #[test]
    fn restriction_examples() {
        let r = PolyRing::indexed(Rationals, "x", 4);
        let l = LineP3::join(&e(0), &e(1)).unwrap();
        assert!(l.restrict(&parse_poly(&r, "x2").unwrap()).unwrap().is_zero());
        let sphere = l.restrict(&parse_poly(&r, "x0^2 + x1^2 + x2^2 + x3^2").unwrap()).unwrap();
        assert_eq!(sphere, BinaryForm::from_ints(Rationals, &[1, 0, 1]));
        let cone = l.restrict(&parse_poly(&r, "x0*x3 - x1^2").unwrap()).unwrap();
        assert_eq!(cone, BinaryForm::from_ints(Rationals, &[0, 0, -1]));
    }

    #[test]
    fn random_configs_are_deterministic_and_incident() {
        let f = PrimeField::default();
        let a = random_flag(&mut GenericRng::new(DEFAULT_SEED), &f);
        let b = random_flag(&mut GenericRng::new(DEFAULT_SEED), &f);
        assert!(a.point == b.point && a.line == b.line && a.plane == b.plane);
        assert!(a.line.contains_point(&a.point));
        assert!(a.line.lies_in_plane(&a.plane));
        let mut rng = GenericRng::new(7);
        match random_config(&mut rng, &f, ConfigKind::LineThroughPoint) {
            Config::LineThroughPoint(v, l) => assert!(l.contains_point(&v)),
            _ => unreachable!(),
        }
        match random_config(&mut rng, &f, ConfigKind::LineInPlane) {
            Config::LineInPlane(h, l) => assert!(l.lies_in_plane(&h)),
            _ => unreachable!(),
        }
    }

    fn small_point() -> impl Strategy<Value = [i64; 4]> {
        prop::array::uniform4(-20i64..20).prop_filter("nonzero", |c| c.iter().any(|&v| v != 0))
    }

    proptest! {
        #[test]
        fn joins_satisfy_plucker(a in small_point(), b in small_point()) {
            let f = PrimeField::default();
            let pa = ProjPoint3::from_ints(f, a).unwrap();
            let pb = ProjPoint3::from_ints(f, b).unwrap();
            if let Ok(l) = LineP3::join(&pa, &pb) {
                prop_assert!(f.is_zero(&plucker_relation(&f, l.primal())));
                prop_assert!(f.is_zero(&plucker_relation(&f, l.dual())));
                prop_assert!(l.contains_point(&pa) && l.contains_point(&pb));
                for k in 0..5 {
                    let s = f.from_i64(k + 1);
                    let t = f.from_i64(3 - 2 * k);
                    let c = std::array::from_fn(|i| f.add(&f.mul(&s, &pa.coords()[i]), &f.mul(&t, &pb.coords()[i])));
                    if let Ok(pc) = ProjPoint3::new(f, c) {
                        prop_assert!(l.contains_point(&pc));
                    }
                }
            }
        }

        #[test]
        fn join_equals_meet(seed in any::<u64>()) {
            let f = PrimeField::default();
            let mut rng = GenericRng::new(seed);
            let a = random_point(&mut rng, &f);
            let b = random_point(&mut rng, &f);
            prop_assume!(!a.proj_eq(&b));
            let l = LineP3::join(&a, &b).unwrap();
            // two planes containing both points
            let [h1, h2] = l.spanning_planes();
            prop_assert!(h1.contains(&a) && h1.contains(&b) && h2.contains(&a) && h2.contains(&b));
            let m = LineP3::meet(&h1, &h2).unwrap();
            prop_assert!(m.proj_eq(&l));
        }

        #[test]
        fn restriction_zero_iff_contained(seed in any::<u64>()) {
            let f = PrimeField::default();
            let r = PolyRing::indexed(f, "x", 4);
            let mut rng = GenericRng::new(seed).with_bound(3);
            let l = random_line(&mut rng, &f);
            let [h1, h2] = l.spanning_planes();
            let lin1 = r.linear_form(h1.coeffs());
            let lin2 = r.linear_form(h2.coeffs());
            let other = r.linear_form(&rng.elems(&f, 4));
            // contains the line by construction, then a generic quadric
            for g in [&(&lin1 * &other) + &(&lin2 * &lin2), &(&other * &other) + &(&lin1 * &lin2)] {
                let res = l.restrict(&g).unwrap();
                let on_line = (0..3).all(|k| {
                    let x = l.point_at(&f.from_i64(k), &f.from_i64(1));
                    f.is_zero(&g.eval(x.coords()))
                });
                prop_assert_eq!(res.is_zero(), on_line);
            }
        }
    }
}
