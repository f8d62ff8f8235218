use serde::Serialize;
use serde_json::json;

use congruence_core::chowforms::{
    chow_form_seeded, classify_hurwitz_singularity, classify_secant_singularity, curve_line_profile, hurwitz_profile,
    meets_curve, HurwitzProfile,
};
use congruence_core::formulas::{self, CurveData};
use congruence_core::schubert::{bidegree_of, intersection_count, perp};
use congruence_core::{Field, PrimeField, Rationals, SchubertClass};

use crate::objects::{parse_curve, parse_line, parse_mults, parse_surface};
use crate::{BidegreeKind, ClassifyKind, Ctx, CurveParams, DualOp, Failure, FieldArg, SchubertOp};

/// Runs `$body` with `$f` bound to the selected field.
macro_rules! with_field {
    ($ctx:expr, $default:expr, $f:ident => $body:expr) => {
        match $ctx.field.unwrap_or($default) {
            FieldArg::Q => {
                let $f = Rationals;
                $body
            }
            FieldArg::Fp => {
                let $f = PrimeField::new($ctx.prime)?;
                $body
            }
        }
    };
}
pub(crate) use with_field;

pub fn field_name(ctx: &Ctx, default: FieldArg) -> String {
    match ctx.field.unwrap_or(default) {
        FieldArg::Q => "Q".to_string(),
        FieldArg::Fp => format!("F_{}", ctx.prime),
    }
}

pub fn chowform(ctx: &Ctx, curve: &str) -> Result<(), Failure> {
    with_field!(ctx, FieldArg::Q, f => chowform_in(ctx, &f, curve))
}

fn chowform_in<F: Field>(ctx: &Ctx, field: &F, name: &str) -> Result<(), Failure> {
    let curve = parse_curve(field, name)?;
    let form = chow_form_seeded(&curve, ctx.seed)?;
    let text = form.to_string();
    let record = json!({
        "curve": name,
        "field": field_name(ctx, FieldArg::Q),
        "degree": curve.degree(),
        "chow_form": text,
    });
    ctx.out.emit(&record, || text.clone());
    Ok(())
}

fn curve_data(p: &CurveParams) -> Result<CurveData, Failure> {
    Ok(CurveData::new(p.d, p.g, parse_mults(p.mults.as_deref())?, p.planar)?)
}

pub fn bidegree(ctx: &Ctx, kind: &BidegreeKind) -> Result<(), Failure> {
    let b = match kind {
        BidegreeKind::Sec(p) => formulas::sec_bidegree(&curve_data(p)?)?,
        BidegreeKind::SingCh0(p) => formulas::sing_ch0_bidegree(&curve_data(p)?)?,
        BidegreeKind::Bit { d } => formulas::bit_bidegree(*d)?,
        BidegreeKind::Infl { d } => formulas::infl_bidegree(*d)?,
    };
    ctx.out.emit(&b, || format!("({}, {})", b.order, b.class));
    Ok(())
}

fn class(s: &str) -> Result<SchubertClass, Failure> {
    Ok(s.parse::<SchubertClass>()?)
}

pub fn schubert(ctx: &Ctx, op: &SchubertOp) -> Result<(), Failure> {
    match op {
        SchubertOp::Mul { a, b } => {
            let p = class(a)? * class(b)?;
            let text = p.to_string();
            ctx.out.emit(&json!({ "op": "mul", "a": a, "b": b, "product": text }), || text.clone());
        }
        SchubertOp::Count { a, b } => {
            let n = intersection_count(&class(a)?, &class(b)?);
            ctx.out.emit(&json!({ "op": "count", "a": a, "b": b, "count": n }), || n.to_string());
        }
    }
    Ok(())
}

pub fn dual(ctx: &Ctx, op: &DualOp) -> Result<(), Failure> {
    match op {
        DualOp::Perp { class: c } => {
            let a = class(c)?;
            let p = perp(a);
            let text = p.to_string();
            let bidegrees = bidegree_of(&a).ok().map(|b| (b, bidegree_of(&p).expect("perp keeps codimension")));
            let record = json!({
                "class": a.to_string(),
                "perp": text,
                "bidegree": bidegrees.map(|(b, _)| b),
                "perp_bidegree": bidegrees.map(|(_, q)| q),
            });
            ctx.out.emit(&record, || text.clone());
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CurveContact {
    line: String,
    curve: String,
    meets: bool,
    profile: Option<String>,
    class: String,
}

#[derive(Serialize)]
struct SurfaceContact {
    line: String,
    surface: String,
    profile: String,
    kinds: Vec<String>,
    in_sing_ch1: Option<bool>,
    in_sing_infl: Option<bool>,
}

pub fn classify(ctx: &Ctx, what: &ClassifyKind) -> Result<(), Failure> {
    with_field!(ctx, FieldArg::Q, f => classify_in(ctx, &f, what))
}

fn classify_in<F: Field>(ctx: &Ctx, field: &F, what: &ClassifyKind) -> Result<(), Failure> {
    match what {
        ClassifyKind::LineCurve { line, curve } => {
            let l = parse_line(field, line)?;
            let c = parse_curve(field, curve)?;
            let meets = meets_curve(&l, &c)?;
            let profile = curve_line_profile(&l, &c)?;
            let class = classify_secant_singularity(&profile);
            let record = CurveContact {
                line: l.to_string(),
                curve: curve.clone(),
                meets,
                profile: Some(profile.to_string()),
                class: class.to_string(),
            };
            ctx.out.emit(&record, || format!("{class} {profile}"));
        }
        ClassifyKind::LineSurface { line, surface } => {
            let l = parse_line(field, line)?;
            let s = parse_surface(field, surface, ctx.seed)?;
            let h = hurwitz_profile(&l, &s)?;
            let record = match &h {
                HurwitzProfile::Contained => SurfaceContact {
                    line: l.to_string(),
                    surface: surface.clone(),
                    profile: h.to_string(),
                    kinds: vec!["CONTAINED".into()],
                    in_sing_ch1: None,
                    in_sing_infl: None,
                },
                HurwitzProfile::Profile(_) => {
                    let c = classify_hurwitz_singularity(&h)?;
                    SurfaceContact {
                        line: l.to_string(),
                        surface: surface.clone(),
                        profile: c.profile.to_string(),
                        kinds: c.kinds.iter().map(|k| k.to_string()).collect(),
                        in_sing_ch1: Some(c.in_sing_ch1()),
                        in_sing_infl: Some(c.in_sing_infl()),
                    }
                }
            };
            ctx.out.emit(&record, || format!("{} {}", record.kinds.join("+"), record.profile));
        }
    }
    Ok(())
}
