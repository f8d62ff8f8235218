//! Names and literal syntaxes for the geometric objects the commands accept.

use congruence_core::field::rational;
use congruence_core::oracles::named;
use congruence_core::poly::parse_poly;
use congruence_core::{
    BinaryForm, Error, Field, LineP3, MultiPoly, PlaneCurveSing, PlaneParametrization, ProjPlane3, ProjPoint3,
    RationalSpaceCurve, Result, SurfaceP3,
};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

/// An integer or `a/b`.
pub fn parse_scalar<F: Field>(field: &F, s: &str) -> Result<F::Elem> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = num.parse().map_err(|_| bad(format!("`{s}` is not a number")))?;
    let d: i64 = den.parse().map_err(|_| bad(format!("`{s}` is not a number")))?;
    field.from_rational(&rational(n, d)?)
}

fn parse_list<F: Field>(field: &F, s: &str) -> Result<Vec<F::Elem>> {
    s.split(',').map(|x| parse_scalar(field, x)).collect()
}

fn parse_fixed<F: Field, const N: usize>(field: &F, s: &str) -> Result<[F::Elem; N]> {
    let v = parse_list(field, s)?;
    let len = v.len();
    v.try_into().map_err(|_| bad(format!("expected {N} coordinates, got {len}")))
}

fn parse_int_forms<F: Field, const N: usize>(field: &F, rest: &str, what: &str) -> Result<[BinaryForm<F>; N]> {
    let comps: Vec<&str> = rest.split('/').collect();
    if comps.len() != N {
        return Err(bad(format!("{what} needs {N} integer components separated by `/`")));
    }
    let forms = comps
        .iter()
        .map(|c| Ok(BinaryForm::new(field.clone(), parse_int_list(c)?.into_iter().map(|x| field.from_i64(x)).collect())))
        .collect::<Result<Vec<_>>>()?;
    Ok(forms.try_into().unwrap_or_else(|_| unreachable!("length checked")))
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| bad(format!("`{x}` is not an integer"))))
        .collect()
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| bad(format!("{what} `{s}` is not a nonnegative integer")))
}

/// `twisted-cubic`, `rational-quartic`, `rational-quintic`, `plane-conic`,
/// `monomial:<d>:<a>:<b>` or `forms:<c,..>/<c,..>/<c,..>/<c,..>` with
/// integer coefficients of `s^d, s^(d-1) t, ..., t^d`.
pub fn parse_curve<F: Field>(field: &F, s: &str) -> Result<RationalSpaceCurve<F>> {
    let f = field.clone();
    match s {
        "twisted-cubic" => return Ok(RationalSpaceCurve::twisted_cubic(f)),
        "rational-quartic" => return Ok(RationalSpaceCurve::rational_quartic(f)),
        "rational-quintic" => return Ok(RationalSpaceCurve::rational_quintic(f)),
        "plane-conic" => return Ok(RationalSpaceCurve::plane_conic(f)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("monomial:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("monomial curves are written monomial:<d>:<a>:<b>"));
        }
        let d = parse_usize(parts[0], "degree")?;
        let a = parse_usize(parts[1], "exponent")?;
        let b = parse_usize(parts[2], "exponent")?;
        if !(a < b && b < d) {
            return Err(bad("monomial curves need 0 < a < b < d"));
        }
        return RationalSpaceCurve::monomial(f, d, a, b);
    }
    if let Some(rest) = s.strip_prefix("forms:") {
        return RationalSpaceCurve::new(parse_int_forms(field, rest, "a space curve")?);
    }
    Err(bad(format!("unknown curve `{s}`")))
}

fn named_degree(rest: &str) -> Result<u32> {
    let d = parse_usize(rest, "degree")?;
    if d == 0 {
        return Err(bad("degree must be positive"));
    }
    Ok(d as u32)
}

fn random_args(rest: &str, seed: u64) -> Result<(u32, u64)> {
    match rest.split_once(':') {
        Some((d, s)) => {
            let s = s.trim().parse().map_err(|_| bad(format!("seed `{s}` is not an integer")))?;
            Ok((named_degree(d)?, s))
        }
        None => Ok((named_degree(rest)?, seed)),
    }
}

/// `fermat:<d>`, `random:<d>[:<seed>]`, or a polynomial in `x0..x3`.
pub fn parse_surface<F: Field>(field: &F, s: &str, seed: u64) -> Result<SurfaceP3<F>> {
    if let Some(rest) = s.strip_prefix("fermat:") {
        return named::fermat_surface(field.clone(), named_degree(rest)?);
    }
    if let Some(rest) = s.strip_prefix("random:") {
        let (d, sd) = random_args(rest, seed)?;
        return named::random_surface(field.clone(), d, sd);
    }
    SurfaceP3::new(parse_poly(&named::surface_ring(field.clone()), s)?)
}

/// `fermat:<d>`, `random:<d>[:<seed>]`, `klein`, `conic-pair`, or a
/// polynomial in `x, y, z`.
pub fn parse_plane_curve<F: Field>(field: &F, s: &str, seed: u64) -> Result<MultiPoly<F>> {
    let f = field.clone();
    match s {
        "klein" => return Ok(named::klein_quartic(f)),
        "conic-pair" => return Ok(named::conic_pair(f)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("fermat:") {
        return Ok(named::fermat_plane_curve(f, named_degree(rest)?));
    }
    if let Some(rest) = s.strip_prefix("random:") {
        let (d, sd) = random_args(rest, seed)?;
        return Ok(named::random_plane_curve(f, d, sd));
    }
    let p = parse_poly(&named::plane_ring(f), s)?;
    p.homogeneous_degree()?;
    Ok(p)
}

/// A plane parametrization and, for named ones, its cusp and node counts.
pub fn parse_parametrization<F: Field>(
    field: &F,
    s: &str,
) -> Result<(PlaneParametrization<F>, Option<PlaneCurveSing>)> {
    let f = field.clone();
    let sing = |degree, cusps, nodes| Some(PlaneCurveSing { degree, cusps, nodes });
    match s {
        "conic" => return Ok((PlaneParametrization::conic(f), sing(2, 0, 0))),
        "cuspidal-cubic" => return Ok((PlaneParametrization::cuspidal_cubic(f), sing(3, 1, 0))),
        "nodal-cubic" => return Ok((PlaneParametrization::nodal_cubic(f), sing(3, 0, 1))),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("forms:") {
        return Ok((PlaneParametrization::new(parse_int_forms(field, rest, "a plane parametrization")?)?, None));
    }
    Err(bad(format!("unknown plane parametrization `{s}`")))
}

/// `p:<6 coords>`, `q:<6 coords>`, `join:<point>;<point>` or `meet:<plane>;<plane>`.
pub fn parse_line<F: Field>(field: &F, s: &str) -> Result<LineP3<F>> {
    let f = field.clone();
    let (kind, rest) = s.split_once(':').ok_or_else(|| bad(format!("line `{s}` has no `kind:` prefix")))?;
    let pair = || -> Result<(&str, &str)> {
        rest.split_once(';').ok_or_else(|| bad("two vectors separated by `;` expected"))
    };
    match kind.trim() {
        "p" => LineP3::from_primal(f, parse_fixed(field, rest)?),
        "q" => LineP3::from_dual(f, parse_fixed(field, rest)?),
        "join" => {
            let (a, b) = pair()?;
            let a = ProjPoint3::new(f.clone(), parse_fixed(field, a)?)?;
            let b = ProjPoint3::new(f, parse_fixed(field, b)?)?;
            LineP3::join(&a, &b)
        }
        "meet" => {
            let (a, b) = pair()?;
            let a = ProjPlane3::new(f.clone(), parse_fixed(field, a)?)?;
            let b = ProjPlane3::new(f, parse_fixed(field, b)?)?;
            LineP3::meet(&a, &b)
        }
        other => Err(bad(format!("unknown line kind `{other}`"))),
    }
}

/// Comma-separated multiplicities, possibly empty.
pub fn parse_mults(s: Option<&str>) -> Result<Vec<u64>> {
    match s {
        None => Ok(Vec::new()),
        Some(s) if s.trim().is_empty() => Ok(Vec::new()),
        Some(s) => parse_int_list(s)?
            .into_iter()
            .map(|r| u64::try_from(r).map_err(|_| bad("multiplicities are nonnegative")))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use congruence_core::{PrimeField, Rationals};

    #[test]
    fn lines() {
        let l = parse_line(&Rationals, "join:1,0,0,0;0,1,0,0").unwrap();
        assert_eq!(l.primal_string(), "1,0,0,0,0,0");
        let m = parse_line(&Rationals, "meet:0,0,1,0;0,0,0,1").unwrap();
        assert!(l.proj_eq(&m));
        assert!(parse_line(&Rationals, "p:1,0,0,0,0,1").is_err());
        assert!(parse_line(&Rationals, "x:1").is_err());
    }

    #[test]
    fn objects() {
        let fp = PrimeField::default();
        assert_eq!(parse_curve(&fp, "monomial:4:1:3").unwrap().degree(), 4);
        assert!(parse_curve(&fp, "monomial:4:3:1").is_err());
        assert_eq!(parse_surface(&fp, "random:3:7", 0).unwrap().degree(), 3);
        assert_eq!(parse_surface(&fp, "x0^2 + x1*x2 - x3^2", 0).unwrap().degree(), 2);
        assert!(parse_surface(&fp, "x0^2 + x1", 0).is_err());
        assert!(parse_plane_curve(&fp, "w^2", 0).is_err());
        assert_eq!(parse_scalar(&Rationals, "-3/6").unwrap(), rational(-1, 2).unwrap());
        assert_eq!(parse_mults(Some("2,2")).unwrap(), vec![2, 2]);
        assert!(parse_parametrization(&Rationals, "forms:1,0/0,1/1,1").is_ok());
    }
}
