//! JSON views of library results. Exact values are rational strings.

use ballconv::lab::SuiteReport;
use ballconv::rational::format_rational;
use ballconv::{
    BallHull, CertificateKind, CircumResult, CompletionReport, ExposedBFace, Hull, Polytope, ProbeStatus,
    SeparationCertificate, SpindleProbeResult, Vector,
};
use serde_json::{json, Value};

use crate::instance::vector_strings;

pub fn vector(v: &Vector) -> Value {
    json!(vector_strings(v))
}

fn vectors(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn polytope(p: &Polytope) -> Value {
    json!({
        "affine_dim": p.affine_dim(),
        "vrep": vectors(p.vertices()),
        "hrep": p.hrep().iter().map(|h| json!({
            "normal": vector(h.normal()),
            "offset": format_rational(h.offset()),
        })).collect::<Vec<_>>(),
    })
}

pub fn hull_value(h: &Hull) -> Value {
    match h {
        Hull::Body(p) => polytope(p),
        Hull::WholeSpace => json!("whole-space"),
    }
}

pub fn ball_hull(norm: &str, h: &BallHull) -> Value {
    json!({
        "norm": norm,
        "hull": hull_value(&h.hull),
        "center_set": h.center_set.polytope.as_ref().map(polytope),
    })
}

pub fn circumball(c: &CircumResult) -> Value {
    json!({
        "radius": format_rational(&c.radius),
        "witness_center": vector(&c.witness_center),
        "center_set": polytope(&c.center_set),
    })
}

pub fn certificate(c: &SeparationCertificate) -> Value {
    let kind = match c.kind {
        CertificateKind::SupportingAtPoint => "supporting_at_point",
        CertificateKind::PointExcluded => "point_excluded",
        CertificateKind::StrictWithRadius => "strict_with_radius",
    };
    json!({
        "kind": kind,
        "y0": vector(&c.y0),
        "shrink_radius": c.shrink_radius.as_ref().map(format_rational),
        "excluded_point": c.excluded_point.as_ref().map(vector),
    })
}

pub fn face(f: &ExposedBFace) -> Value {
    json!({
        "center": vector(&f.center),
        "is_singleton": f.is_singleton,
        "pieces": f.pieces.iter().map(|p| vectors(p.vertices())).collect::<Vec<_>>(),
    })
}

pub fn completion(r: &CompletionReport) -> Value {
    json!({
        "input_diam": format_rational(&r.input_diam),
        "hull": hull_value(&r.hull),
        "is_complete_hull": r.is_complete_hull,
        "unique_completion": r.unique_completion.as_ref().map(polytope),
        "criterion_I": r.criterion_i,
        "criterion_II": r.criterion_ii,
        "criterion_III": r.criterion_iii,
    })
}

pub fn probe(p: &SpindleProbeResult) -> Value {
    json!({
        "status": match p.status {
            ProbeStatus::Violated => "Violated",
            ProbeStatus::NoViolationFound => "NoViolationFound",
        },
        "witness_points": p.witness_points.as_deref().map(vectors),
        "witness_outside": p.witness_outside.as_ref().map(vector),
        "trials": p.trials,
    })
}

pub fn suite(r: &SuiteReport) -> Value {
    json!({
        "suite": r.name,
        "passed": r.passed(),
        "checks": r.checks,
        "failures": r.failures,
        "notes": r.notes,
        "approx": r.name == "example4",
    })
}
