//! The instance document and JSON encodings of library values.

use std::collections::BTreeSet;

use devres::laurent::{format_rational, parse_rational};
use devres::{Covector, ExponentVector, LatticePolytope, LaurentPoly, Rational, SystemInstance};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<i64>,
    pub coef: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub terms: Vec<TermDoc>,
}

/// `{"n", "polynomials", "declared_polytopes"?}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub n: usize,
    pub polynomials: Vec<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_polytopes: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("{0}")]
pub struct SchemaError(pub String);

fn schema<T>(msg: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError(msg.into()))
}

impl PolyDoc {
    pub fn to_poly(&self, n: usize, label: &str) -> Result<LaurentPoly, SchemaError> {
        let mut seen = BTreeSet::new();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, t) in self.terms.iter().enumerate() {
            if t.exp.len() != n {
                return schema(format!(
                    "{label}, term {}: exponent has {} entries, expected {n}",
                    k + 1,
                    t.exp.len()
                ));
            }
            if !seen.insert(t.exp.clone()) {
                return schema(format!("{label}: exponent {:?} appears twice", t.exp));
            }
            let Some(c) = parse_rational(&t.coef) else {
                return schema(format!(
                    "{label}, term {}: coefficient {:?} is not a rational p/q",
                    k + 1,
                    t.coef
                ));
            };
            terms.push((ExponentVector::new(t.exp.clone()), c));
        }
        LaurentPoly::from_terms(n, terms).map_err(|e| SchemaError(format!("{label}: {e}")))
    }

    pub fn from_poly(f: &LaurentPoly) -> Self {
        Self {
            terms: f
                .terms()
                .map(|(e, c)| TermDoc {
                    exp: e.coords().to_vec(),
                    coef: format_rational(c),
                })
                .collect(),
        }
    }
}

impl InstanceDoc {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        serde_json::from_str(text)
            .map_err(|e| SchemaError(format!("invalid instance document: {e}")))
    }

    pub fn to_system(&self) -> Result<SystemInstance, SchemaError> {
        let n = self.n;
        if n == 0 {
            return schema("n must be positive");
        }
        if self.polynomials.is_empty() {
            return schema("at least one polynomial is required");
        }
        let polys = self
            .polynomials
            .iter()
            .enumerate()
            .map(|(i, p)| p.to_poly(n, &format!("polynomial {}", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        let declared = match &self.declared_polytopes {
            None => polys
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    f.newton_polytope().map_err(|_| {
                        SchemaError(format!(
                            "polynomial {} is zero and has no declared polytope",
                            i + 1
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
            Some(list) => {
                if list.len() != polys.len() {
                    return schema(format!(
                        "{} declared polytopes for {} polynomials",
                        list.len(),
                        polys.len()
                    ));
                }
                list.iter()
                    .enumerate()
                    .map(|(i, pts)| {
                        polytope_from_points(pts, n, &format!("declared polytope {}", i + 1))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        SystemInstance::with_declared(polys, declared).map_err(|e| match e {
            devres::Error::OutsideDeclaredPolytope { index } => SchemaError(format!(
                "polynomial {} has terms outside its declared polytope",
                index + 1
            )),
            other => SchemaError(other.to_string()),
        })
    }

    /// The canonical document of an instance: terms in lexicographic
    /// exponent order, declared polytopes by their sorted vertices.
    pub fn from_system(system: &SystemInstance, with_declared: bool) -> Self {
        Self {
            n: system.n(),
            polynomials: system.polys().iter().map(PolyDoc::from_poly).collect(),
            declared_polytopes: with_declared.then(|| {
                system
                    .declared()
                    .iter()
                    .map(|p| p.vertices().iter().map(|v| v.coords().to_vec()).collect())
                    .collect()
            }),
        }
    }
}

pub fn polytope_from_points(
    pts: &[Vec<i64>],
    n: usize,
    label: &str,
) -> Result<LatticePolytope, SchemaError> {
    if pts.is_empty() {
        return schema(format!("{label} has no points"));
    }
    if let Some(p) = pts.iter().find(|p| p.len() != n) {
        return schema(format!(
            "{label}: point {p:?} does not have {n} coordinates"
        ));
    }
    let pts: Vec<ExponentVector> = pts.iter().map(|p| ExponentVector::new(p.clone())).collect();
    LatticePolytope::from_points(&pts).map_err(|e| SchemaError(format!("{label}: {e}")))
}

pub fn rat(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn point(e: &ExponentVector) -> Value {
    json!(e.coords())
}

pub fn covector(v: &Covector) -> Value {
    json!(v.coords())
}

/// An `i128` as a JSON number when it fits in `i64`, otherwise a string.
pub fn wide(x: i128) -> Value {
    i64::try_from(x)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(x.to_string()))
}

pub fn polytope(p: &LatticePolytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(point).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(|f| json!({
            "normal": covector(&f.normal),
            "offset": wide(f.offset),
        })).collect::<Vec<_>>(),
    })
}
