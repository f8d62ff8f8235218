//! Closed-form enumerative formulas with validated hypotheses.

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::schubert::{class_of, intersection_count, Bidegree};

/// Numeric invariants of a curve with ordinary singularities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveData {
    pub degree: u64,
    pub genus: u64,
    /// Multiplicities of the ordinary singular points, each at least 2.
    pub mults: Vec<u64>,
    pub planar: bool,
}

impl CurveData {
    pub fn new(degree: u64, genus: u64, mults: Vec<u64>, planar: bool) -> Result<Self> {
        if degree < 1 {
            return Err(out_of_range("degree", "curve degree must be at least 1"));
        }
        if let Some(r) = mults.iter().find(|&&r| r < 2) {
            return Err(out_of_range("multiplicity", format!("singular multiplicities are at least 2, got {r}")));
        }
        Ok(CurveData { degree, genus, mults, planar })
    }

    /// Smooth space curve.
    pub fn smooth(degree: u64, genus: u64) -> Self {
        CurveData { degree, genus, mults: Vec::new(), planar: false }
    }

    pub fn singular_points(&self) -> u64 {
        self.mults.len() as u64
    }

    fn mult_correction(&self) -> i64 {
        self.mults.iter().map(|&r| binom2(r as i64)).sum()
    }
}

/// Degree, cusp count and node count of a plane curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneCurveSing {
    pub degree: u64,
    pub cusps: u64,
    pub nodes: u64,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn need(what: &'static str, value: u64, min: u64) -> Result<i64> {
    if value < min {
        return Err(out_of_range(what, format!("need {what} >= {min}, got {value}")));
    }
    Ok(value as i64)
}

fn nonneg(what: &'static str, v: i64) -> Result<u64> {
    if v < 0 {
        return Err(out_of_range(what, format!("{what} would be negative ({v}); the invariants are inconsistent")));
    }
    Ok(v as u64)
}

fn space_order(c: &CurveData) -> Result<i64> {
    let d = c.degree as i64;
    Ok(binom2(d - 1) - c.genus as i64 - c.mult_correction())
}

/// Bidegree of the secant congruence.
pub fn sec_bidegree(c: &CurveData) -> Result<Bidegree> {
    let d = need("d", c.degree, 2)?;
    if c.planar {
        return Ok(Bidegree::new(0, 1));
    }
    let order = nonneg("order", space_order(c)?)?;
    Ok(Bidegree::new(order, binom2(d) as u64))
}

/// Bidegree of the singular locus of the Chow hypersurface.
pub fn sing_ch0_bidegree(c: &CurveData) -> Result<Bidegree> {
    let d = need("d", c.degree, 2)?;
    let s = c.singular_points();
    if c.planar {
        return Ok(Bidegree::new(s, 1));
    }
    let order = nonneg("order", space_order(c)?)?;
    Ok(Bidegree::new(order + s, binom2(d) as u64))
}

/// Bidegree of the bitangent congruence of a general surface of degree `d >= 4`.
pub fn bit_bidegree(d: u64) -> Result<Bidegree> {
    let d = need("d", d, 4)?;
    let order = d * (d - 1) * (d - 2) * (d - 3) / 2;
    let class = d * (d - 2) * (d - 3) * (d + 3) / 2;
    Ok(Bidegree::new(order as u64, class as u64))
}

/// Bidegree of the inflectional congruence of a general surface of degree `d >= 4`.
pub fn infl_bidegree(d: u64) -> Result<Bidegree> {
    let d = need("d", d, 4)?;
    Ok(Bidegree::new((d * (d - 1) * (d - 2)) as u64, (3 * d * (d - 2)) as u64))
}

pub fn ch0_degree(d: u64) -> Result<u64> {
    need("d", d, 1)?;
    Ok(d)
}

pub fn ch1_degree(d: u64) -> Result<u64> {
    let d = need("d", d, 2)?;
    Ok((d * (d - 1)) as u64)
}

/// Plücker formula `d(d-1) - 3 kappa - 2 delta`.
pub fn dual_curve_degree(p: &PlaneCurveSing) -> Result<u64> {
    let d = p.degree as i64;
    let v = d * (d - 1) - 3 * p.cusps as i64 - 2 * p.nodes as i64;
    if v <= 0 {
        return Err(out_of_range("dual degree", format!("{v} is not positive; the invariants are inconsistent")));
    }
    Ok(v as u64)
}

/// Genus of a plane curve of degree `d` with ordinary singularities.
pub fn plane_genus(d: u64, mults: &[u64]) -> Result<u64> {
    let d = need("d", d, 1)?;
    if let Some(r) = mults.iter().find(|&&r| r < 2) {
        return Err(out_of_range("multiplicity", format!("singular multiplicities are at least 2, got {r}")));
    }
    let g = binom2(d - 1) - mults.iter().map(|&r| binom2(r as i64)).sum::<i64>();
    nonneg("genus", g)
}

pub fn plane_bitangent_count(d: u64) -> Result<u64> {
    let d = need("d", d, 4)?;
    Ok((d * (d - 2) * (d - 3) * (d + 3) / 2) as u64)
}

pub fn plane_infl_count(d: u64) -> Result<u64> {
    let d = need("d", d, 3)?;
    Ok((3 * d * (d - 2)) as u64)
}

pub fn dual_surface_degree(d: u64) -> Result<u64> {
    let d = need("d", d, 2)?;
    Ok((d * (d - 1) * (d - 1)) as u64)
}

/// Inflectional tangents through a general point, `d(d-1)(d-2)`.
pub fn infl_through_point(d: u64) -> Result<u64> {
    let d = need("d", d, 3)?;
    Ok((d * (d - 1) * (d - 2)) as u64)
}

/// Bitangents through a general point, `d(d-1)(d-2)(d-3)/2`.
pub fn bit_through_point(d: u64) -> Result<u64> {
    let d = need("d", d, 4)?;
    Ok((d * (d - 1) * (d - 2) * (d - 3) / 2) as u64)
}

/// Lines bitangent to two general surfaces, via the Schubert product.
pub fn bitangent_pair_count(d1: u64, d2: u64) -> Result<u64> {
    let a = class_of(bit_bidegree(d1)?);
    let b = class_of(bit_bidegree(d2)?);
    nonneg("count", intersection_count(&a, &b))
}

/// The same count from the expanded closed form.
pub fn bitangent_pair_count_closed(d1: u64, d2: u64) -> Result<u64> {
    let a = need("d1", d1, 4)?;
    let b = need("d2", d2, 4)?;
    let v = a * (a - 1) * (a - 2) * (a - 3) * b * (b - 1) * (b - 2) * (b - 3)
        + a * (a - 2) * (a - 3) * (a + 3) * b * (b - 2) * (b - 3) * (b + 3);
    Ok((v / 4) as u64)
}

/// Lines bitangent to a general surface of degree `d1` and secant to a
/// nonplanar curve, via the Schubert product.
pub fn bit_sec_count(d1: u64, c: &CurveData) -> Result<u64> {
    if c.planar {
        return Err(Error::Invalid("the curve must not lie in a plane".into()));
    }
    let a = class_of(bit_bidegree(d1)?);
    let b = class_of(sec_bidegree(c)?);
    nonneg("count", intersection_count(&a, &b))
}

/// Closed form of [`bit_sec_count`] for a smooth curve of degree `d2` and genus `g`.
pub fn bit_sec_count_closed(d1: u64, d2: u64, g: u64) -> Result<u64> {
    let a = need("d1", d1, 4)?;
    let b = need("d2", d2, 2)?;
    let g = g as i64;
    let sec_part = (b - 1) * (b - 2) - 2 * g;
    if sec_part < 0 {
        return Err(out_of_range("genus", "genus exceeds the bound for a space curve of this degree"));
    }
    let v = a * (a - 1) * (a - 2) * (a - 3) * sec_part + a * (a - 2) * (a - 3) * (a + 3) * b * (b - 1);
    Ok((v / 4) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::perp;

    #[test]
    fn secant_examples() {
        assert_eq!(sec_bidegree(&CurveData::smooth(3, 0)).unwrap(), Bidegree::new(1, 3));
        assert_eq!(sec_bidegree(&CurveData::smooth(4, 1)).unwrap(), Bidegree::new(2, 6));
        let nodal = CurveData::new(4, 0, vec![2], false).unwrap();
        assert_eq!(sec_bidegree(&nodal).unwrap(), Bidegree::new(2, 6));
        assert!(sec_bidegree(&CurveData::smooth(3, 5)).is_err());
        assert!(sec_bidegree(&CurveData::smooth(1, 0)).is_err());
        let conic = CurveData::new(2, 0, vec![], true).unwrap();
        assert_eq!(sec_bidegree(&conic).unwrap(), Bidegree::new(0, 1));
    }

    #[test]
    fn sing_ch0_examples() {
        assert_eq!(sing_ch0_bidegree(&CurveData::smooth(3, 0)).unwrap(), Bidegree::new(1, 3));
        let nodal = CurveData::new(4, 0, vec![2], false).unwrap();
        assert_eq!(sing_ch0_bidegree(&nodal).unwrap(), Bidegree::new(3, 6));
        let planar_nodal = CurveData::new(3, 0, vec![2], true).unwrap();
        assert_eq!(sing_ch0_bidegree(&planar_nodal).unwrap(), Bidegree::new(1, 1));
    }

    #[test]
    fn surface_bidegrees() {
        assert_eq!(bit_bidegree(4).unwrap(), Bidegree::new(12, 28));
        assert_eq!(infl_bidegree(4).unwrap(), Bidegree::new(24, 24));
        assert_eq!(bit_bidegree(5).unwrap(), Bidegree::new(60, 120));
        assert!(bit_bidegree(3).is_err());
        assert!(infl_bidegree(3).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(ch0_degree(3).unwrap(), 3);
        assert_eq!(ch1_degree(2).unwrap(), 2);
        assert_eq!(ch1_degree(4).unwrap(), 12);
        assert!(ch1_degree(1).is_err());
        let pc = |d, cusps, nodes| PlaneCurveSing { degree: d, cusps, nodes };
        assert_eq!(dual_curve_degree(&pc(2, 0, 0)).unwrap(), 2);
        assert_eq!(dual_curve_degree(&pc(3, 0, 1)).unwrap(), 4);
        assert_eq!(dual_curve_degree(&pc(3, 1, 0)).unwrap(), 3);
        assert!(dual_curve_degree(&pc(3, 2, 0)).is_err());
        assert_eq!(plane_genus(4, &[]).unwrap(), 3);
        assert_eq!(plane_genus(3, &[2]).unwrap(), 0);
        assert_eq!(plane_genus(3, &[]).unwrap(), 1);
        assert!(plane_genus(3, &[3]).is_err());
        assert_eq!(plane_bitangent_count(4).unwrap(), 28);
        assert_eq!(plane_infl_count(3).unwrap(), 9);
        assert_eq!(plane_infl_count(4).unwrap(), 24);
        assert_eq!(dual_surface_degree(4).unwrap(), 36);
        assert_eq!(infl_through_point(4).unwrap(), 24);
        assert_eq!(bit_through_point(4).unwrap(), 12);
    }

    #[test]
    fn pair_counts() {
        assert_eq!(bitangent_pair_count(4, 4).unwrap(), 928);
        assert_eq!(bitangent_pair_count(4, 5).unwrap(), 4080);
        for a in 4..=8 {
            for b in 4..=8 {
                assert_eq!(bitangent_pair_count(a, b).unwrap(), bitangent_pair_count_closed(a, b).unwrap());
            }
        }
        assert_eq!(bit_sec_count(4, &CurveData::smooth(3, 0)).unwrap(), 96);
        assert_eq!(bit_sec_count(4, &CurveData::smooth(4, 1)).unwrap(), 192);
        assert_eq!(bit_sec_count_closed(4, 3, 0).unwrap(), 96);
        assert_eq!(bit_sec_count_closed(4, 4, 1).unwrap(), 192);
    }

    #[test]
    fn bit_sec_two_ways() {
        let mut rng = crate::rng::GenericRng::new(21);
        let mut checked = 0;
        while checked < 10 {
            let d1 = 4 + (rng.next_u64() % 5);
            let d2 = 2 + (rng.next_u64() % 7);
            let g = rng.next_u64() % 4;
            let c = CurveData::smooth(d2, g);
            if let Ok(v) = bit_sec_count(d1, &c) {
                assert_eq!(v, bit_sec_count_closed(d1, d2, g).unwrap());
                checked += 1;
            }
        }
    }

    #[test]
    fn identity_chains() {
        for d in 4..=12u64 {
            let dd = (d * (d - 1)) as i64;
            let lhs = dual_surface_degree(d).unwrap() as i64;
            let rhs = dd * (dd - 1) - 3 * infl_through_point(d).unwrap() as i64 - 2 * bit_through_point(d).unwrap() as i64;
            assert_eq!(lhs, rhs, "Plücker chain at d = {d}");
            let genus = binom2(d as i64 - 1);
            let dual_genus =
                binom2(dd - 1) - plane_infl_count(d).unwrap() as i64 - plane_bitangent_count(d).unwrap() as i64;
            assert_eq!(genus, dual_genus, "genus chain at d = {d}");
        }
    }

    #[test]
    fn secant_rearrangement_and_perp() {
        for d in 3..=9u64 {
            for g in 0..3 {
                let c = CurveData::new(d, g, vec![2; (d as usize) % 3], false).unwrap();
                if let Ok(b) = sec_bidegree(&c) {
                    let lhs = b.order as i64 + c.mult_correction() + g as i64;
                    assert_eq!(lhs, binom2(d as i64 - 1));
                    let swapped = crate::schubert::bidegree_of(&perp(class_of(b))).unwrap();
                    assert_eq!(swapped, b.swap());
                }
            }
        }
    }
}
