//! JSON records for class field descriptions.
//!
//! ```json
//! {"kind": "quadratic_kummer", "q": 3, "d": "t^3+t^2+1", "m": "t^2+2*t+2",
//!  "ramified_frob": [["t+2", -1], ["t^2+2*t+2", -1]], "label": "f3-example"}
//! ```
//!
//! A `primitive_element` record carries `minpoly` (coefficients in ascending
//! order of the auxiliary variable) and `group_orders` instead of `m` and
//! `ramified_frob`.

use std::path::Path;

use qforms_core::{ClassFieldSpec, Fq, Poly, SpecKind, SymbolValue};
use serde::{Deserialize, Serialize};

use crate::error::InputError;
use crate::parse::parse_poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpecRecord {
    QuadraticKummer {
        q: u64,
        d: String,
        m: String,
        ramified_frob: Vec<(String, i8)>,
        #[serde(default)]
        label: String,
    },
    PrimitiveElement {
        q: u64,
        d: String,
        minpoly: Vec<String>,
        group_orders: Vec<u32>,
        #[serde(default)]
        label: String,
    },
}

fn poly(field: Fq, name: &str, src: &str) -> Result<Poly, InputError> {
    parse_poly(src, field).map_err(|e| InputError::parse(name, e))
}

impl SpecRecord {
    pub fn from_spec(spec: &ClassFieldSpec) -> Self {
        let q = spec.field().q() as u64;
        let d = spec.d().to_string();
        let label = spec.label().to_string();
        match spec.kind() {
            SpecKind::QuadraticKummer { m, ramified_frob } => SpecRecord::QuadraticKummer {
                q,
                d,
                m: m.to_string(),
                ramified_frob: ramified_frob.iter().map(|(p, s)| (p.to_string(), s.as_i8())).collect(),
                label,
            },
            SpecKind::PrimitiveElement { minpoly, group_orders } => SpecRecord::PrimitiveElement {
                q,
                d,
                minpoly: minpoly.iter().map(Poly::to_string).collect(),
                group_orders: group_orders.clone(),
                label,
            },
        }
    }

    pub fn to_spec(&self) -> Result<ClassFieldSpec, InputError> {
        match self {
            SpecRecord::QuadraticKummer { q, d, m, ramified_frob, label } => {
                let field = Fq::new(*q)?;
                let frob = ramified_frob
                    .iter()
                    .map(|(p, s)| match s {
                        1 | -1 => Ok((poly(field, "ramified_frob", p)?, SymbolValue::from_sign(*s))),
                        _ => Err(InputError::new("Frobenius signs must be 1 or -1").in_input("ramified_frob")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ClassFieldSpec::quadratic_kummer(poly(field, "d", d)?, poly(field, "m", m)?, frob, label.as_str())?)
            }
            SpecRecord::PrimitiveElement { q, d, minpoly, group_orders, label } => {
                let field = Fq::new(*q)?;
                let coeffs = minpoly.iter().map(|c| poly(field, "minpoly", c)).collect::<Result<Vec<_>, _>>()?;
                Ok(ClassFieldSpec::primitive_element(poly(field, "d", d)?, coeffs, group_orders.clone(), label.as_str())?)
            }
        }
    }
}

pub fn spec_to_json(spec: &ClassFieldSpec) -> String {
    serde_json::to_string_pretty(&SpecRecord::from_spec(spec)).expect("records serialize")
}

pub fn spec_from_json(text: &str) -> Result<ClassFieldSpec, InputError> {
    let record: SpecRecord =
        serde_json::from_str(text).map_err(|e| InputError::new(e.to_string()).in_input("spec"))?;
    record.to_spec()
}

/// A preset name, an inline JSON record, or a path to a JSON file.
pub fn load_spec(arg: &str) -> Result<ClassFieldSpec, InputError> {
    if let Some(spec) = ClassFieldSpec::preset(arg) {
        return Ok(spec);
    }
    if arg.trim_start().starts_with('{') {
        return spec_from_json(arg);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(InputError::new(format!("unknown preset or missing file '{arg}'")).in_input("spec"));
    }
    let text = std::fs::read_to_string(path).map_err(|e| InputError::new(e.to_string()).in_input("spec"))?;
    spec_from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_round_trip() {
        for spec in [ClassFieldSpec::f3_example(), ClassFieldSpec::f3_example_primitive()] {
            assert_eq!(spec_from_json(&spec_to_json(&spec)).unwrap(), spec);
        }
    }

    #[test]
    fn documented_record() {
        let text = r#"{"kind": "quadratic_kummer", "q": 3, "d": "(t-1)*(t^2-t-1)", "m": "t^2-t-1",
            "ramified_frob": [["t^2-t-1", -1], ["t-1", -1]], "label": "f3-example"}"#;
        assert_eq!(load_spec(text).unwrap(), ClassFieldSpec::f3_example());
    }

    #[test]
    fn bad_records() {
        assert!(spec_from_json(r#"{"kind": "other"}"#).is_err());
        let bad_sign = r#"{"kind": "quadratic_kummer", "q": 3, "d": "t^3+t^2+1", "m": "t^2-t-1",
            "ramified_frob": [["t-1", 0], ["t^2-t-1", -1]]}"#;
        assert!(spec_from_json(bad_sign).is_err());
        let err = spec_from_json(r#"{"kind": "quadratic_kummer", "q": 3, "d": "t^3+", "m": "t", "ramified_frob": []}"#)
            .unwrap_err();
        assert_eq!((err.input.as_deref(), err.column), (Some("d"), Some(5)));
        assert!(load_spec("/nonexistent/spec.json").is_err());
    }
}
