//! JSON and CSV renderings of library values.
//!
//! Big integers are written as decimal strings and rationals as
//! `[numerator, denominator]` string pairs. `serde_json::Map` keeps keys
//! sorted, so output is byte-deterministic.

use rank2_roots::num_bigint::BigInt;
use rank2_roots::num_rational::BigRational;
use rank2_roots::verify::SuiteReport;
use rank2_roots::{
    IndexSets, PhiSubsystem, Progression, RealRoot, RootSystem, RootVector, SubsystemClass, SumVerdict,
    SystemParams,
};
use serde_json::{json, Value};

pub fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn rational(q: &BigRational) -> Value {
    json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn system(p: &SystemParams) -> Value {
    json!({ "a": p.a(), "b": p.b() })
}

pub fn vector(v: &RootVector) -> Value {
    json!({ "x": big(&v.x), "y": big(&v.y) })
}

pub fn real_root(sys: &RootSystem, r: &RealRoot) -> Value {
    let v = sys.coords(r);
    json!({
        "label": r.to_string(),
        "family": r.family.as_str(),
        "index": r.index,
        "x": big(&v.x),
        "y": big(&v.y),
        "height": big(&v.height()),
        "length": sys.length_class(r).as_str(),
        "positive": r.is_positive(),
    })
}

pub fn imaginary_root(v: &RootVector) -> Value {
    json!({
        "x": big(&v.x),
        "y": big(&v.y),
        "height": big(&v.height()),
        "positive": v.is_positive(),
    })
}

pub fn verdict(sys: &RootSystem, v: &SumVerdict, sum: &RootVector) -> Value {
    let root = match v {
        SumVerdict::RealSum(r) => real_root(sys, r),
        _ => Value::Null,
    };
    json!({ "verdict": v.tag(), "coords": vector(sum), "root": root })
}

fn progression(p: &Option<Progression>) -> Value {
    match p {
        None => Value::Null,
        Some(p) => json!({ "rep": p.rep, "modulus": p.modulus }),
    }
}

pub fn index_sets(ix: &IndexSets) -> Value {
    json!({ "long": progression(&ix.long), "short": progression(&ix.short) })
}

pub fn class(c: &SubsystemClass) -> Value {
    match c {
        SubsystemClass::Hyperbolic { p, q } => json!({ "tag": c.tag(), "p": big(p), "q": big(q) }),
        _ => json!({ "tag": c.tag() }),
    }
}

pub fn subsystem(sys: &RootSystem, sub: &PhiSubsystem) -> Value {
    let matrix = |m: &Vec<Vec<BigInt>>| -> Value {
        m.iter().map(|row| row.iter().map(big).collect::<Vec<_>>()).collect()
    };
    let inner: Value = sub
        .inner_product
        .iter()
        .map(|row| row.iter().map(rational).collect::<Vec<_>>())
        .collect();
    json!({
        "type": sub.kind.tag(),
        "r": sub.kind.r(),
        "d": sub.kind.d(),
        "base": sub.base.iter().map(|r| real_root(sys, r)).collect::<Vec<_>>(),
        "cartan": matrix(&sub.cartan),
        "inner_product": inner,
        "class": class(&sys.subsystem_class(sub)),
    })
}

pub fn report(r: &SuiteReport) -> Value {
    json!({
        "system": system(&r.system),
        "suite": r.suite.as_str(),
        "checks": r.checks,
        "passed": r.passed(),
        "failure": r.failure,
    })
}

/// One CSV field; the values written here never contain separators.
pub fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}
