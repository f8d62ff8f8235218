use clap::ValueEnum;
use serde::Serialize;

use congruence_core::formulas::{self, CurveData, PlaneCurveSing};
use congruence_core::oracles::*;
use congruence_core::{Field, OracleReport, PrimeField, Rationals, Result as CoreResult};

use crate::commands::{field_name, with_field};
use crate::objects::{parse_curve, parse_parametrization, parse_plane_curve, parse_surface};
use crate::{Ctx, Failure, FieldArg, VerifyArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleName {
    SecOrder,
    SecClass,
    Ch0Degree,
    Ch1Degree,
    PlaneInflections,
    PlaneBitangents,
    InflThroughPoint,
    DualSurfaceDegree,
    DualCurveDegree,
}

impl std::fmt::Display for OracleName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

impl OracleName {
    fn default_object(self) -> &'static str {
        match self {
            OracleName::SecOrder | OracleName::SecClass | OracleName::Ch0Degree => "twisted-cubic",
            OracleName::DualCurveDegree => "conic",
            _ => "random:4",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    /// Distinct count differs, the count with multiplicity agrees.
    MatchWithMultiplicity,
    Mismatch,
    /// The formula's hypotheses exclude this input.
    NoFormula,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::MatchWithMultiplicity => "MATCH_WITH_MULTIPLICITY",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NoFormula => "NO_FORMULA",
        })
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub oracle: OracleName,
    pub object: String,
    pub field: String,
    pub report: OracleReport,
    pub expected: Option<u64>,
    pub verdict: Verdict,
}

struct Job {
    oracle: OracleName,
    object: String,
    sing: (Option<u64>, Option<u64>),
}

fn object_for(args: &VerifyArgs, oracle: OracleName) -> String {
    let given = match oracle {
        OracleName::SecOrder | OracleName::SecClass | OracleName::Ch0Degree => &args.curve,
        OracleName::Ch1Degree | OracleName::InflThroughPoint | OracleName::DualSurfaceDegree => &args.surface,
        OracleName::PlaneInflections | OracleName::PlaneBitangents => &args.plane_curve,
        OracleName::DualCurveDegree => &args.param,
    };
    given.clone().unwrap_or_else(|| oracle.default_object().to_string())
}

fn standard_jobs() -> Vec<Job> {
    use OracleName::*;
    let families: &[(OracleName, &[&str])] = &[
        (SecOrder, &["twisted-cubic", "rational-quartic", "rational-quintic"]),
        (SecClass, &["twisted-cubic", "rational-quartic", "rational-quintic", "plane-conic"]),
        (Ch0Degree, &["twisted-cubic", "rational-quartic"]),
        (Ch1Degree, &["random:2", "random:3", "random:4"]),
        (PlaneInflections, &["fermat:3", "random:4"]),
        (PlaneBitangents, &["random:4", "klein"]),
        (InflThroughPoint, &["random:3", "random:4"]),
        (DualSurfaceDegree, &["random:2", "random:3", "random:4"]),
        (DualCurveDegree, &["conic", "cuspidal-cubic", "nodal-cubic"]),
    ];
    families.iter()
        .flat_map(|(o, objs)| objs.iter().map(move |obj| Job { oracle: *o, object: obj.to_string(), sing: (None, None) }))
        .collect()
}

fn compare(report: &OracleReport, expected: CoreResult<u64>) -> (Option<u64>, Verdict) {
    match expected {
        Err(_) => (None, Verdict::NoFormula),
        Ok(e) if report.count == e => (Some(e), Verdict::Match),
        Ok(e) if report.count_with_multiplicity == Some(e) => (Some(e), Verdict::MatchWithMultiplicity),
        Ok(e) => (Some(e), Verdict::Mismatch),
    }
}

fn run_in<F: Field>(ctx: &Ctx, field: &F, job: &Job) -> Result<VerifyRecord, Failure> {
    let seed = ctx.seed;
    let obj = job.object.as_str();
    let (report, expected) = match job.oracle {
        OracleName::SecOrder | OracleName::SecClass | OracleName::Ch0Degree => {
            let c = parse_curve(field, obj)?;
            let d = c.degree() as u64;
            // rational curves are taken smooth, so of genus 0
            let data = CurveData::new(d, 0, Vec::new(), c.is_planar())?;
            match job.oracle {
                OracleName::SecOrder => (oracle_sec_order(&c, seed)?, formulas::sec_bidegree(&data).map(|b| b.order)),
                OracleName::SecClass => (oracle_sec_class(&c, seed)?, formulas::sec_bidegree(&data).map(|b| b.class)),
                _ => (oracle_ch0_degree(&c, seed)?, formulas::ch0_degree(d)),
            }
        }
        OracleName::Ch1Degree | OracleName::InflThroughPoint | OracleName::DualSurfaceDegree => {
            let s = parse_surface(field, obj, seed)?;
            let d = s.degree() as u64;
            match job.oracle {
                OracleName::Ch1Degree => (oracle_ch1_degree(&s, seed)?, formulas::ch1_degree(d)),
                OracleName::InflThroughPoint => (oracle_infl_through_point(&s, seed)?, formulas::infl_through_point(d)),
                _ => (oracle_dual_surface_degree(&s, seed)?, formulas::dual_surface_degree(d)),
            }
        }
        OracleName::PlaneInflections | OracleName::PlaneBitangents => {
            let f = parse_plane_curve(field, obj, seed)?;
            let d = f.total_degree().unwrap_or(0) as u64;
            if job.oracle == OracleName::PlaneInflections {
                (oracle_plane_inflections(&f, seed)?, formulas::plane_infl_count(d))
            } else {
                (oracle_plane_bitangents(&f, seed)?, formulas::plane_bitangent_count(d))
            }
        }
        OracleName::DualCurveDegree => {
            let (param, named) = parse_parametrization(field, obj)?;
            let sing = named.unwrap_or(PlaneCurveSing {
                degree: param.degree() as u64,
                cusps: job.sing.0.unwrap_or(0),
                nodes: job.sing.1.unwrap_or(0),
            });
            (oracle_dual_curve_degree(&param, seed)?, formulas::dual_curve_degree(&sing))
        }
    };
    let (expected, verdict) = compare(&report, expected);
    Ok(VerifyRecord {
        oracle: job.oracle,
        object: job.object.clone(),
        field: field_name(ctx, FieldArg::Fp),
        report,
        expected,
        verdict,
    })
}

fn run_job(ctx: &Ctx, job: &Job) -> Result<VerifyRecord, Failure> {
    with_field!(ctx, FieldArg::Fp, f => run_in(ctx, &f, job))
}

fn print(ctx: &Ctx, r: &VerifyRecord) {
    ctx.out.emit(r, || {
        let expected = r.expected.map_or("none".to_string(), |e| e.to_string());
        format!(
            "{} {}: count {}, expected {}, {} (seed {}, retries {}, {:.3} s)",
            r.oracle,
            r.object,
            r.report.count,
            expected,
            r.verdict,
            r.report.seed,
            r.report.retries,
            r.report.elapsed.as_secs_f64()
        )
    });
}

fn mismatch(r: &VerifyRecord) -> Failure {
    Failure::Mismatch(format!(
        "{} on {}: oracle counted {}, formula gives {}",
        r.oracle,
        r.object,
        r.report.count,
        r.expected.unwrap_or(0)
    ))
}

pub fn verify(ctx: &Ctx, args: &VerifyArgs) -> Result<(), Failure> {
    if args.all {
        return verify_all(ctx);
    }
    let oracle = args.oracle.expect("clap enforces an oracle unless --all");
    let job = Job { oracle, object: object_for(args, oracle), sing: (args.cusps, args.nodes) };
    let r = run_job(ctx, &job)?;
    print(ctx, &r);
    if r.verdict == Verdict::Mismatch {
        return Err(mismatch(&r));
    }
    Ok(())
}

fn verify_all(ctx: &Ctx) -> Result<(), Failure> {
    let jobs = standard_jobs();
    let results: Vec<Result<VerifyRecord, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.iter().map(|job| scope.spawn(move || run_job(ctx, job))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Failure::Internal("oracle thread panicked".into()))))
            .collect()
    });
    let mut worst: Option<Failure> = None;
    let mut keep = |f: Failure| {
        let rank = |f: &Failure| match f {
            Failure::Mismatch(_) => 4,
            Failure::NonGeneric(_) => 3,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 1,
        };
        if worst.as_ref().map_or(true, |w| rank(&f) > rank(w)) {
            worst = Some(f);
        }
    };
    for (job, res) in jobs.iter().zip(results) {
        match res {
            Ok(r) => {
                print(ctx, &r);
                if r.verdict == Verdict::Mismatch {
                    keep(mismatch(&r));
                }
            }
            Err(f) => {
                eprintln!("congruence-lab: {} on {}: {}", job.oracle, job.object, f.message());
                keep(f);
            }
        }
    }
    match worst {
        Some(f) => Err(f),
        None => Ok(()),
    }
}
