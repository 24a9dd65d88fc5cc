//! Instance generators: explicit pair lists, Minkowski light cones,
//! seeded sprinklings and seeded random DAGs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::causal::{CausalRelation, CausalSpace, EventSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Explicit {
        labels: Vec<String>,
        pairs: Vec<(String, String)>,
    },
    /// Points with time as the first coordinate. Labels default to `e0..`.
    Minkowski {
        labels: Option<Vec<String>>,
        points: Vec<Vec<f64>>,
    },
    /// `n` points uniform in an axis-aligned box of dimension `dim` (time first).
    Sprinkle {
        n: usize,
        dim: usize,
        bounds: Vec<(f64, f64)>,
        seed: u64,
    },
    /// Each pair `i < j` becomes an edge with probability `edge_prob`.
    RandomDag { n: usize, edge_prob: f64, seed: u64 },
}

impl GeneratorSpec {
    /// Sprinkling into the unit box `[0,1]^dim`.
    pub fn unit_sprinkle(n: usize, dim: usize, seed: u64) -> Self {
        GeneratorSpec::Sprinkle {
            n,
            dim,
            bounds: vec![(0.0, 1.0); dim],
            seed,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<CausalSpace> {
    match spec {
        GeneratorSpec::Explicit { labels, pairs } => {
            CausalSpace::from_labelled_pairs(labels.iter().cloned(), pairs.iter())
        }
        GeneratorSpec::Minkowski { labels, points } => {
            let events = match labels {
                Some(l) => EventSet::new(l.iter().cloned())?,
                None => EventSet::numbered(points.len())?,
            };
            minkowski_space(events, points.clone())
        }
        GeneratorSpec::Sprinkle {
            n,
            dim,
            bounds,
            seed,
        } => {
            if *dim < 2 {
                return Err(Error::Generator(format!("dimension {dim} < 2")));
            }
            if bounds.len() != *dim {
                return Err(Error::Generator(format!(
                    "box has {} intervals for dimension {dim}",
                    bounds.len()
                )));
            }
            if let Some((lo, hi)) = bounds.iter().find(|(lo, hi)| lo > hi || !lo.is_finite() || !hi.is_finite()) {
                return Err(Error::Generator(format!("bad interval [{lo}, {hi}]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let points: Vec<Vec<f64>> = (0..*n)
                .map(|_| {
                    bounds
                        .iter()
                        .map(|(lo, hi)| lo + (hi - lo) * rng.gen::<f64>())
                        .collect()
                })
                .collect();
            minkowski_space(EventSet::numbered(*n)?, points)
        }
        GeneratorSpec::RandomDag { n, edge_prob, seed } => {
            if !(0.0..=1.0).contains(edge_prob) {
                return Err(Error::Generator(format!("edge probability {edge_prob} outside [0,1]")));
            }
            let events = EventSet::numbered(*n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut pairs = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    if rng.gen_bool(*edge_prob) {
                        pairs.push((i, j));
                    }
                }
            }
            let raw = CausalRelation::from_pairs(*n, pairs)?;
            CausalSpace::new(events, raw)
        }
    }
}

/// Closed-cone rule: `p → q` iff `t_q − t_p ≥ |x_q − x_p|`.
pub fn cone_precedes(p: &[f64], q: &[f64]) -> bool {
    let dt = q[0] - p[0];
    if dt < 0.0 {
        return false;
    }
    let dx2: f64 = p[1..].iter().zip(&q[1..]).map(|(a, b)| (b - a) * (b - a)).sum();
    dt * dt >= dx2
}

fn minkowski_space(events: EventSet, points: Vec<Vec<f64>>) -> Result<CausalSpace> {
    if points.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Generator("non-finite coordinate".into()));
    }
    let n = points.len();
    let mut pairs = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            if i != j && cone_precedes(p, q) {
                pairs.push((i, j));
            }
        }
    }
    let events = events.with_coords(points)?;
    let raw = CausalRelation::from_pairs(n, pairs)?;
    CausalSpace::new(events, raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_inequality_examples() {
        assert!(cone_precedes(&[0.0, 0.0], &[1.0, 0.5]));
        assert!(!cone_precedes(&[0.0, 0.0], &[1.0, 2.0]));
        assert!(cone_precedes(&[0.0, 0.0], &[1.0, 1.0]));
        assert!(!cone_precedes(&[1.0, 0.5], &[0.0, 0.0]));
    }

    #[test]
    fn minkowski_pair() {
        let s = generate(&GeneratorSpec::Minkowski {
            labels: Some(vec!["p".into(), "q".into(), "r".into()]),
            points: vec![vec![0.0, 0.0], vec![1.0, 0.5], vec![1.0, 2.0]],
        })
        .unwrap();
        assert!(s.raw().contains(0, 1));
        assert!(!s.raw().contains(0, 2));
        assert!(!s.raw().contains(1, 0));
    }

    #[test]
    fn sprinkle_is_deterministic() {
        let spec = GeneratorSpec::Sprinkle {
            n: 100,
            dim: 2,
            bounds: vec![(0.0, 1.0), (-1.0, 1.0)],
            seed: 42,
        };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.raw(), b.raw());
        assert_eq!(a.kplus(), b.kplus());
        assert_eq!(a.events().coords(), b.events().coords());
    }

    #[test]
    fn minkowski_raw_is_already_a_partial_order() {
        let s = generate(&GeneratorSpec::unit_sprinkle(150, 3, 9)).unwrap();
        let f = s.raw().flags();
        assert!(f.transitive && f.antisymmetric);
        assert!(s.is_stably_causal());
    }

    #[test]
    fn coincident_points_relate_both_ways() {
        let s = generate(&GeneratorSpec::Minkowski {
            labels: None,
            points: vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        })
        .unwrap();
        assert!(s.raw().contains(0, 1) && s.raw().contains(1, 0));
        assert!(!s.is_stably_causal());
    }

    #[test]
    fn random_dag_is_acyclic_and_seeded() {
        let spec = GeneratorSpec::RandomDag {
            n: 30,
            edge_prob: 0.3,
            seed: 5,
        };
        let a = generate(&spec).unwrap();
        assert!(a.is_stably_causal());
        assert_eq!(a.raw(), generate(&spec).unwrap().raw());
    }

    #[test]
    fn malformed_specs_are_rejected() {
        let bad = [
            GeneratorSpec::unit_sprinkle(10, 1, 0),
            GeneratorSpec::Sprinkle {
                n: 3,
                dim: 2,
                bounds: vec![(0.0, 1.0)],
                seed: 0,
            },
            GeneratorSpec::Sprinkle {
                n: 3,
                dim: 2,
                bounds: vec![(1.0, 0.0), (0.0, 1.0)],
                seed: 0,
            },
            GeneratorSpec::RandomDag {
                n: 3,
                edge_prob: 1.5,
                seed: 0,
            },
            GeneratorSpec::RandomDag {
                n: 0,
                edge_prob: 0.5,
                seed: 0,
            },
        ];
        for spec in bad {
            assert!(generate(&spec).is_err(), "{spec:?}");
        }
    }
}
