//! JSON encodings. Rationals are always `"num/den"` strings; integers are
//! exact JSON numbers of any size.

use serde_json::{json, Map, Number, Value};
use sfcontact::consistency::{ImplicationSweepReport, RouteSweepReport};
use sfcontact::decide::Evidence;
use sfcontact::{
    BigInt, BlowdownState, Decision, GammaVector, NormalizedSeifert, PlumbingGraph, Rational,
    RealizabilityCertificate, RouteVerdict,
};

pub fn int(n: &BigInt) -> Value {
    Value::Number(serde_json::from_str::<Number>(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn gammas(g: &GammaVector) -> Value {
    Value::Array(g.as_slice().iter().map(rational).collect())
}

pub fn invariants(m: &NormalizedSeifert) -> Value {
    json!({
        "normalized": m.to_string(),
        "euler": rational(&m.euler_number()),
        "e0": int(&m.e_zero()),
        "gamma": gammas(&m.gamma_vector()),
        "chi": int(&m.chi()),
    })
}

pub fn certificate(c: &RealizabilityCertificate) -> Value {
    json!({ "m": int(&c.m), "a": int(&c.a), "assignment": c.assignment })
}

fn evidence(e: &Evidence<BigInt>) -> Value {
    json!({
        "normalized": e.normalized.to_string(),
        "euler": rational(&e.euler),
        "e0": int(&e.e0),
        "chi": int(&e.chi),
        "r": e.r,
        "reversed_e0": e.reversed_e0.as_ref().map_or(Value::Null, int),
        "certificate": e.certificate.as_ref().map_or(Value::Null, certificate),
        "route_agrees": e.route_agrees,
    })
}

pub fn decision(d: &Decision) -> Value {
    json!({ "answer": d.answer, "case": d.case.to_string(), "evidence": evidence(&d.evidence) })
}

pub fn plumbing(g: &PlumbingGraph) -> Value {
    let vertices: Vec<Value> = g
        .vertices()
        .map(|(id, s)| json!({ "id": id, "selfint": int(&s.selfint), "genus": int(&s.genus) }))
        .collect();
    let edges: Vec<Value> =
        g.edges().map(|(u, v, m)| json!({ "u": u, "v": v, "multiplicity": int(m) })).collect();
    json!({ "vertices": vertices, "edges": edges })
}

pub fn trace(states: &[BlowdownState]) -> Value {
    Value::Array(
        states
            .iter()
            .map(|s| {
                json!({
                    "stage": s.stage,
                    "x": int(&s.x),
                    "p": int(&s.p),
                    "q": int(&s.q),
                    "genus": int(&s.genus),
                })
            })
            .collect(),
    )
}

pub fn verdict(v: &RouteVerdict) -> Value {
    match v {
        RouteVerdict::Realizable { certificate: c, case, stage } => json!({
            "kind": "Realizable",
            "case": case.to_string(),
            "stage": stage,
            "certificate": certificate(c),
        }),
        RouteVerdict::Obstructed { reason, stage } => json!({
            "kind": "Obstructed",
            "reason": reason.to_string(),
            "stage": stage,
        }),
        RouteVerdict::Inconclusive { diagnostic } => json!({
            "kind": "Inconclusive",
            "diagnostic": diagnostic,
        }),
    }
}

pub fn route_sweep(r: &RouteSweepReport) -> Value {
    json!({
        "r": r.r,
        "max_denominator": r.max_denominator,
        "checked": r.checked,
        "realizable": r.realizable,
        "disagreements": r.disagreements,
        "inconclusive": r.inconclusive,
        "bad_certificates": r.bad_certificates,
    })
}

pub fn implication_sweep(r: &ImplicationSweepReport) -> Value {
    json!({
        "checked": r.checked,
        "with_foliation": r.with_foliation,
        "with_contact": r.with_contact,
        "failures": r.failures,
    })
}

/// An object with keys in the given order.
pub fn object(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}
