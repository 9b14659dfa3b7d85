//! Report documents and their JSON, CSV and text renderings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use cosetlab_core::typea::SymFunc;
use cosetlab_core::{BurnsideElement, Group, Rational};

use crate::config::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct ResultBlock {
    pub name: String,
    pub kind: String,
    pub payload: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub version: String,
    pub config: Value,
    pub results: Vec<ResultBlock>,
}

impl ReportDocument {
    pub fn new(config: Value) -> Self {
        ReportDocument { version: env!("CARGO_PKG_VERSION").to_string(), config, results: Vec::new() }
    }

    pub fn push(&mut self, name: &str, kind: &str, payload: Value) {
        self.results.push(ResultBlock { name: name.to_string(), kind: kind.to_string(), payload });
    }

    pub fn result(&self, name: &str) -> Option<&ResultBlock> {
        self.results.iter().find(|r| r.name == name)
    }

    /// Results of kind `check` whose status is `fail`.
    pub fn failures(&self) -> Vec<&ResultBlock> {
        self.results.iter().filter(|r| r.kind == "check" && r.payload["status"] == "fail").collect()
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> =
            self.results.iter().map(|r| json!({"name": r.name, "kind": r.kind, "payload": r.payload})).collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "version": self.version,
            "config": self.config,
            "results": results,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "kind", "key", "value"]).expect("in-memory write");
        for r in &self.results {
            for (key, value) in flatten(&r.payload) {
                w.write_record([r.name.as_str(), r.kind.as_str(), key.as_str(), value.as_str()]).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
    }

    fn to_text(&self) -> String {
        let mut out = format!("cosetlab {}\n", self.version);
        for r in &self.results {
            let rows = flatten(&r.payload);
            match rows.as_slice() {
                [(k, v)] if k.is_empty() => out.push_str(&format!("{}: {v}\n", r.name)),
                _ => {
                    out.push_str(&format!("{}:\n", r.name));
                    for (k, v) in rows {
                        out.push_str(&format!("  {k} = {v}\n"));
                    }
                }
            }
        }
        out
    }
}

/// Leaf values of a JSON tree keyed by dotted paths; objects iterate in key
/// order, so the result is deterministic.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    go(&join(k), x, out);
                }
            }
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let items: Vec<String> = a.iter().map(scalar_text).collect();
                out.push((prefix.to_string(), items.join(" ")));
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    go(&join(&i.to_string()), x, out);
                }
            }
            _ => out.push((prefix.to_string(), scalar_text(v))),
        }
    }
    let mut out = Vec::new();
    go("", v, &mut out);
    out
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn int_value(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn rational_value(x: &Rational) -> Value {
    if x.is_integer() {
        int_value(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

/// Orbit key: the block shape in type A, the hex reflection set otherwise.
pub fn orbit_key(group: &Group, label: cosetlab_core::OrbitLabel) -> String {
    if group.symbol().is_type_a() {
        if let Ok(shape) = cosetlab_core::typea::orbit_shape(group, label) {
            return shape.to_string();
        }
    }
    label.to_string()
}

pub fn burnside_value(group: &Group, b: &BurnsideElement) -> Value {
    let m: Map<String, Value> = b.terms().map(|(label, c)| (orbit_key(group, label), int_value(c))).collect();
    Value::Object(m)
}

pub fn symfunc_value(f: &SymFunc) -> Value {
    let m: Map<String, Value> = f.terms().map(|(p, c)| (p.to_string(), rational_value(c))).collect();
    json!({ "basis": format!("{:?}", f.basis()), "degree": f.degree(), "terms": Value::Object(m) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> ReportDocument {
        let mut d = ReportDocument::new(json!({"group": "A2"}));
        d.push("dimension", "scalar", json!(4));
        d.push("xi", "burnside", json!({"1,1,1": 2, "3": 1}));
        d
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = doc().render(Format::Json);
        let c = s.find("\"config\"").unwrap();
        let r = s.find("\"results\"").unwrap();
        let v = s.find("\"schema_version\"").unwrap();
        assert!(c < r && r < v);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back, doc().to_json());
    }

    #[test]
    fn csv_has_one_row_per_leaf() {
        let s = doc().render(Format::Csv);
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines[0], "name,kind,key,value");
        assert_eq!(lines[1], "dimension,scalar,,4");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(u64::MAX) * 3;
        assert!(int_value(&big).is_string());
        assert_eq!(int_value(&BigInt::from(-5)), json!(-5));
        assert_eq!(rational_value(&Rational::new(1.into(), 2.into())), json!("1/2"));
    }
}
