//! JSON formats for spacetimes, measures, certificates and time functions.
//!
//! Rationals are always emitted as strings (`"1/2"`); inputs may also be
//! integer or decimal strings, or JSON numbers. Emitted pair lists are
//! sorted by (cause label, effect label).
//!
//! Spacetime documents:
//!
//! ```json
//! {"events": ["a", "b"], "relation": {"kind": "explicit", "pairs": [["a", "b"]]}}
//! {"relation": {"kind": "minkowski", "points": [[0, 0], [1, 0.5]]}}
//! {"kind": "sprinkle", "n": 100, "dim": 2, "box": [[0, 1], [-1, 1]], "seed": 42}
//! {"kind": "random-dag", "n": 10, "edge_prob": 0.3, "seed": 1}
//! ```
//!
//! The relation object may be nested under `"relation"` or given flat at
//! the top level. `events` is required for explicit relations, optional for
//! Minkowski points and rejected for seeded generators, which number their
//! events `e0, e1, ...`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::causal::{CausalRelation, CausalSpace, EventSet, EventSubset};
use crate::error::{Error, Result};
use crate::generate::{generate, GeneratorSpec};
use crate::measure::Measure;
use crate::rational::{self, Rational};
use crate::timefn::TimeFunction;
use crate::transport::{Certificate, Coupling};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RelationDoc {
    Explicit {
        pairs: Vec<[String; 2]>,
    },
    Minkowski {
        points: Vec<Vec<f64>>,
    },
    Sprinkle {
        n: usize,
        dim: usize,
        #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
        bounds: Option<Vec<[f64; 2]>>,
        seed: u64,
    },
    RandomDag {
        n: usize,
        edge_prob: f64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpacetimeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub events: Option<Vec<String>>,
    pub relation: RelationDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Vec<f64>>>,
}

impl SpacetimeDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let mut value: Value = serde_json::from_str(text)?;
        if value.get("relation").is_some() {
            return Ok(serde_json::from_value(value)?);
        }
        let obj = value
            .as_object_mut()
            .ok_or_else(|| Error::Format("spacetime must be a JSON object".into()))?;
        let events = obj.remove("events").map(serde_json::from_value).transpose()?;
        let coords = obj.remove("coords").map(serde_json::from_value).transpose()?;
        let relation = serde_json::from_value(value)?;
        Ok(SpacetimeDoc {
            events,
            relation,
            coords,
        })
    }

    pub fn to_generator_spec(&self) -> Result<GeneratorSpec> {
        let no_events = |kind: &str| -> Result<()> {
            if self.events.is_some() {
                return Err(Error::Generator(format!("`events` is not accepted for {kind}; events are numbered")));
            }
            Ok(())
        };
        Ok(match &self.relation {
            RelationDoc::Explicit { pairs } => GeneratorSpec::Explicit {
                labels: self
                    .events
                    .clone()
                    .ok_or_else(|| Error::Generator("explicit relation requires `events`".into()))?,
                pairs: pairs.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
            },
            RelationDoc::Minkowski { points } => GeneratorSpec::Minkowski {
                labels: self.events.clone(),
                points: points.clone(),
            },
            RelationDoc::Sprinkle { n, dim, bounds, seed } => {
                no_events("sprinkle")?;
                GeneratorSpec::Sprinkle {
                    n: *n,
                    dim: *dim,
                    bounds: match bounds {
                        Some(b) => b.iter().map(|[lo, hi]| (*lo, *hi)).collect(),
                        None => vec![(0.0, 1.0); *dim],
                    },
                    seed: *seed,
                }
            }
            RelationDoc::RandomDag { n, edge_prob, seed } => {
                no_events("random-dag")?;
                GeneratorSpec::RandomDag {
                    n: *n,
                    edge_prob: *edge_prob,
                    seed: *seed,
                }
            }
        })
    }

    pub fn build(&self) -> Result<CausalSpace> {
        let space = generate(&self.to_generator_spec()?)?;
        match &self.coords {
            None => Ok(space),
            Some(coords) => {
                let events = (**space.events()).clone().with_coords(coords.clone())?;
                CausalSpace::new(events, space.raw().clone())
            }
        }
    }

    /// Explicit document for a relation on the given events.
    pub fn explicit(events: &EventSet, relation: &CausalRelation, with_coords: bool) -> Self {
        let mut pairs: Vec<[String; 2]> = relation
            .pairs()
            .map(|(p, q)| [events.label(p).to_string(), events.label(q).to_string()])
            .collect();
        pairs.sort();
        SpacetimeDoc {
            events: Some(events.labels().to_vec()),
            relation: RelationDoc::Explicit { pairs },
            coords: if with_coords {
                events.coords().map(<[_]>::to_vec)
            } else {
                None
            },
        }
    }
}

pub fn parse_spacetime(text: &str) -> Result<CausalSpace> {
    SpacetimeDoc::parse(text)?.build()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeasureDoc {
    weights: BTreeMap<String, Value>,
}

pub fn parse_measure(text: &str, events: &Arc<EventSet>) -> Result<Measure> {
    let doc: MeasureDoc = serde_json::from_str(text)?;
    let mut entries = Vec::with_capacity(doc.weights.len());
    for (label, v) in &doc.weights {
        entries.push((label.as_str(), rational::from_json(v)?));
    }
    Measure::from_labels(events.clone(), entries)
}

pub fn measure_to_value(mu: &Measure) -> Value {
    let weights: BTreeMap<&str, String> = mu
        .support()
        .iter()
        .map(|p| (mu.events().label(p), rational::format(mu.weight(p))))
        .collect();
    serde_json::json!({ "weights": weights })
}

fn sorted_labels(events: &EventSet, subset: &EventSubset) -> Vec<String> {
    let mut labels: Vec<String> = events.labels_of(subset).into_iter().map(String::from).collect();
    labels.sort();
    labels
}

pub fn coupling_to_value(omega: &Coupling) -> Value {
    let e = omega.events();
    let mut pairs: Vec<[String; 3]> = omega
        .entries()
        .map(|((p, q), w)| [e.label(p).to_string(), e.label(q).to_string(), rational::format(w)])
        .collect();
    pairs.sort();
    serde_json::json!({ "pairs": pairs })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CouplingDoc {
    pairs: Vec<(String, String, Value)>,
}

pub fn parse_coupling(text: &str, events: &Arc<EventSet>) -> Result<Coupling> {
    let doc: CouplingDoc = serde_json::from_str(text)?;
    coupling_from_doc(doc, events)
}

fn coupling_from_doc(doc: CouplingDoc, events: &Arc<EventSet>) -> Result<Coupling> {
    let mut entries = Vec::with_capacity(doc.pairs.len());
    for (a, b, w) in doc.pairs {
        entries.push((a, b, rational::from_json(&w)?));
    }
    Coupling::from_labels(events.clone(), entries)
}

/// Certificate document; the violator is listed by label in sorted order.
pub fn certificate_json(cert: &Certificate, events: &EventSet) -> Value {
    match cert {
        Certificate::Feasible { witness } => serde_json::json!({
            "verdict": "feasible",
            "witness": coupling_to_value(witness),
        }),
        Certificate::Infeasible {
            violator,
            mu_b,
            nu_future_b,
        } => serde_json::json!({
            "verdict": "infeasible",
            "violator": sorted_labels(events, violator),
            "mu_B": rational::format(mu_b),
            "nu_KplusB": rational::format(nu_future_b),
        }),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    verdict: String,
    #[serde(default)]
    witness: Option<CouplingDoc>,
    #[serde(default)]
    violator: Option<Vec<String>>,
    #[serde(default, rename = "mu_B")]
    mu_b: Option<Value>,
    #[serde(default, rename = "nu_KplusB")]
    nu_future_b: Option<Value>,
}

pub fn parse_certificate(text: &str, events: &Arc<EventSet>) -> Result<Certificate> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    let missing = |what: &str| Error::Format(format!("certificate is missing `{what}`"));
    match doc.verdict.as_str() {
        "feasible" => Ok(Certificate::Feasible {
            witness: coupling_from_doc(doc.witness.ok_or_else(|| missing("witness"))?, events)?,
        }),
        "infeasible" => Ok(Certificate::Infeasible {
            violator: events.subset(doc.violator.ok_or_else(|| missing("violator"))?)?,
            mu_b: rational::from_json(&doc.mu_b.ok_or_else(|| missing("mu_B"))?)?,
            nu_future_b: rational::from_json(&doc.nu_future_b.ok_or_else(|| missing("nu_KplusB"))?)?,
        }),
        other => Err(Error::Format(format!("unknown verdict `{other}`"))),
    }
}

pub fn time_function_to_value(t: &TimeFunction) -> Value {
    let values: BTreeMap<&str, String> = t
        .values()
        .iter()
        .enumerate()
        .map(|(p, v)| (t.events().label(p), rational::format(v)))
        .collect();
    serde_json::json!({ "values": values })
}

pub fn parse_time_function(text: &str, space: &CausalSpace) -> Result<TimeFunction> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Doc {
        values: BTreeMap<String, Value>,
    }
    let doc: Doc = serde_json::from_str(text)?;
    let mut values = vec![None; space.len()];
    for (label, v) in &doc.values {
        values[space.events().index_of(label)?] = Some(rational::from_json(v)?);
    }
    let values: Option<Vec<Rational>> = values.into_iter().collect();
    let values = values.ok_or_else(|| Error::Format("time function must assign every event".into()))?;
    TimeFunction::new(space, values)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::transport::decide_k_causal;

    const CHAIN: &str = r#"{"events":["a","b","c"],"relation":{"kind":"explicit","pairs":[["a","b"],["b","c"]]}}"#;

    #[test]
    fn explicit_and_flat_forms() {
        let s = parse_spacetime(CHAIN).unwrap();
        assert_eq!(s.kplus().pair_count(), 6);
        let flat = parse_spacetime(r#"{"kind":"minkowski","points":[[0,0],[1,0.5]]}"#).unwrap();
        assert!(flat.raw().contains(0, 1));
        assert_eq!(flat.events().labels(), ["e0", "e1"]);
        let nested = parse_spacetime(r#"{"events":["p","q"],"relation":{"kind":"minkowski","points":[[0,0],[1,2]]}}"#).unwrap();
        assert!(!nested.raw().contains(0, 1));
        let sprinkle = parse_spacetime(r#"{"kind":"sprinkle","n":100,"dim":2,"box":[[0,1],[-1,1]],"seed":42}"#).unwrap();
        assert_eq!(sprinkle.len(), 100);
        let dag = parse_spacetime(r#"{"kind":"random-dag","n":6,"edge_prob":0.5,"seed":3}"#).unwrap();
        assert_eq!(dag.len(), 6);
    }

    #[test]
    fn malformed_spacetimes() {
        for bad in [
            "[]",
            r#"{"relation":{"kind":"explicit","pairs":[]}}"#,
            r#"{"kind":"warp","n":3}"#,
            r#"{"events":["a"],"kind":"sprinkle","n":1,"dim":2,"seed":1}"#,
            r#"{"events":["a"],"relation":{"kind":"explicit","pairs":[["a","z"]]}}"#,
            r#"{"kind":"sprinkle","n":0,"dim":2,"seed":1}"#,
        ] {
            assert!(parse_spacetime(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn explicit_round_trip_of_closure() {
        let s = parse_spacetime(CHAIN).unwrap();
        let doc = SpacetimeDoc::explicit(s.events(), s.kplus(), false);
        let text = to_pretty(&doc);
        let back = parse_spacetime(&text).unwrap();
        assert_eq!(back.raw(), s.kplus());
        assert_eq!(back.kplus(), s.kplus());
    }

    #[test]
    fn measure_formats() {
        let s = parse_spacetime(CHAIN).unwrap();
        let mu = parse_measure(r#"{"weights":{"a":"1/2","b":"0.25","c":0.25}}"#, s.events()).unwrap();
        assert_eq!(mu.weights(), &[ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
        assert_eq!(
            measure_to_value(&mu).to_string(),
            r#"{"weights":{"a":"1/2","b":"1/4","c":"1/4"}}"#
        );
        assert!(matches!(
            parse_measure(r#"{"weights":{"a":"1/2"}}"#, s.events()),
            Err(Error::NotNormalized(_))
        ));
        assert!(parse_measure(r#"{"weights":{"z":"1"}}"#, s.events()).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let s = parse_spacetime(CHAIN).unwrap();
        let a = parse_measure(r#"{"weights":{"a":"1"}}"#, s.events()).unwrap();
        let c = parse_measure(r#"{"weights":{"c":"1"}}"#, s.events()).unwrap();
        for (mu, nu) in [(&a, &c), (&c, &a)] {
            let cert = decide_k_causal(&s, mu, nu).unwrap();
            let text = certificate_json(&cert, s.events()).to_string();
            let back = parse_certificate(&text, s.events()).unwrap();
            assert_eq!(back, cert);
            assert!(back.is_sound(&s, mu, nu));
        }
        let cert = decide_k_causal(&s, &c, &a).unwrap();
        assert_eq!(
            certificate_json(&cert, s.events()).to_string(),
            r#"{"mu_B":"1","nu_KplusB":"0","verdict":"infeasible","violator":["c"]}"#
        );
    }

    #[test]
    fn time_function_round_trip() {
        let s = parse_spacetime(CHAIN).unwrap();
        let t = TimeFunction::new(&s, vec![int(0), ratio(1, 2), int(3)]).unwrap();
        let v = time_function_to_value(&t);
        assert_eq!(v.to_string(), r#"{"values":{"a":"0","b":"1/2","c":"3"}}"#);
        assert_eq!(parse_time_function(&v.to_string(), &s).unwrap(), t);
        assert!(parse_time_function(r#"{"values":{"a":"0"}}"#, &s).is_err());
    }
}
