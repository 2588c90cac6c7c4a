//! JSON documents: function sets, probability vectors, neighborhoods, and
//! report fragments. Rationals are written as `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{CountReport, CurveRow};
use crate::error::{ClosureWitness, NflError, Result};
use crate::hitting::HittingReport;
use crate::nfl::{
    ConditionViolation, Counterexample, FunctionDistribution, PerformanceDistribution, SweepCell,
    Verdict,
};
use crate::rational::{self, Rational};
use crate::search::SearchAlgorithm;
use crate::space::{CostDomain, FunctionSet, Guards, Histogram, ObjectiveFunction, SearchSpace};
use crate::structure::{NeighborhoodRelation, StructureReport};

/// A rational given as `"p/q"`, a decimal string, or a JSON integer.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            RationalText::Text(s) => rational::parse(s),
            RationalText::Integer(n) => Ok(rational::int(*n)),
        }
    }
}

impl From<&Rational> for RationalText {
    fn from(r: &Rational) -> Self {
        RationalText::Text(rational::format(r))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSetDoc {
    pub domain_size: usize,
    pub codomain: Vec<RationalText>,
    pub functions: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FunctionSetDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Validates the document. The function list must be non-empty.
    pub fn to_set(&self) -> Result<FunctionSet> {
        let space = match &self.labels {
            Some(labels) => SearchSpace::with_labels(self.domain_size, labels.clone())?,
            None => SearchSpace::new(self.domain_size)?,
        };
        let costs = CostDomain::new(
            self.codomain
                .iter()
                .map(RationalText::to_rational)
                .collect::<Result<_>>()?,
        )?;
        if self.functions.is_empty() {
            return Err(NflError::EmptySet);
        }
        let members = self
            .functions
            .iter()
            .map(|t| ObjectiveFunction::new(t.clone(), costs.size()))
            .collect::<Result<Vec<_>>>()?;
        FunctionSet::new(space, costs, members)
    }

    pub fn from_set(set: &FunctionSet) -> Self {
        FunctionSetDoc {
            domain_size: set.space().size(),
            codomain: set.costs().values().iter().map(RationalText::from).collect(),
            functions: set.iter().map(|f| f.table().to_vec()).collect(),
            labels: set.space().labels().map(<[String]>::to_vec),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbabilityDoc {
    pub weights: Vec<RationalText>,
}

impl ProbabilityDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Weights aligned with the rank order of all `|Y|^|X|` functions, or,
    /// when the vector has one entry per listed function, with the functions
    /// of `functions` in the order they are listed (every other function then
    /// has probability zero).
    pub fn to_distribution(&self, functions: &FunctionSetDoc, guards: &Guards) -> Result<FunctionDistribution> {
        let set = functions.to_set()?;
        let weights = self
            .weights
            .iter()
            .map(RationalText::to_rational)
            .collect::<Result<Vec<_>>>()?;
        let total = crate::space::function_count(set.space(), set.costs());
        if num_bigint::BigUint::from(weights.len()) == total {
            return FunctionDistribution::from_full_vector(
                set.space().clone(),
                set.costs().clone(),
                weights,
                guards,
            );
        }
        if weights.len() != functions.functions.len() {
            return Err(NflError::InvalidDistribution(format!(
                "{} weights match neither the {} listed functions nor all {} functions",
                weights.len(),
                functions.functions.len(),
                total
            )));
        }
        if set.len() != functions.functions.len() {
            return Err(NflError::InvalidDistribution(
                "a function is listed twice, so listed weights are ambiguous".into(),
            ));
        }
        let by_function: BTreeMap<ObjectiveFunction, Rational> = functions
            .functions
            .iter()
            .map(|t| ObjectiveFunction::new(t.clone(), set.costs().size()))
            .zip(weights)
            .map(|(f, w)| f.map(|f| (f, w)))
            .collect::<Result<_>>()?;
        let ordered = set.iter().map(|f| by_function[f].clone()).collect();
        FunctionDistribution::new(&set, ordered)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeighborhoodDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

impl NeighborhoodDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Builds the relation for a space of `size` points. `param` is the
    /// bit length for a hypercube and the point count for a ring; it may
    /// be omitted when implied by `size`.
    pub fn to_relation(&self, size: usize) -> Result<NeighborhoodRelation> {
        let rel = match self.kind.as_str() {
            "hypercube" => {
                let bits = match self.param {
                    Some(b) => b as u32,
                    None if size.is_power_of_two() => size.trailing_zeros(),
                    None => {
                        return Err(NflError::MalformedNeighborhood(format!(
                            "{size} points do not form a hypercube"
                        )))
                    }
                };
                NeighborhoodRelation::hypercube(bits)?
            }
            "ring" => NeighborhoodRelation::ring(self.param.map_or(size, |p| p as usize))?,
            "custom" => {
                let edges: Vec<(usize, usize)> = self
                    .edges
                    .as_ref()
                    .ok_or_else(|| NflError::MalformedNeighborhood("custom needs `edges`".into()))?
                    .iter()
                    .map(|&[a, b]| (a, b))
                    .collect();
                NeighborhoodRelation::custom(size, &edges)?
            }
            other => {
                return Err(NflError::MalformedNeighborhood(format!(
                    "unknown type `{other}`"
                )))
            }
        };
        if rel.size() != size {
            return Err(NflError::MalformedNeighborhood(format!(
                "relation has {} points, the function set {}",
                rel.size(),
                size
            )));
        }
        Ok(rel)
    }
}

pub fn r(value: &Rational) -> Value {
    Value::String(rational::format(value))
}

pub fn table(f: &ObjectiveFunction) -> Value {
    json!(f.table())
}

pub fn histogram(h: &Histogram) -> Value {
    json!(h.counts())
}

pub fn closure_witness(w: &ClosureWitness) -> Value {
    json!({
        "function": table(&w.function),
        "permutation": w.permutation.image(),
        "image": table(&w.image),
    })
}

pub fn function_set(set: &FunctionSet) -> Value {
    serde_json::to_value(FunctionSetDoc::from_set(set)).expect("serializable")
}

pub fn distribution(d: &PerformanceDistribution) -> Value {
    let masses: Vec<Value> = d
        .masses()
        .iter()
        .map(|(k, v)| json!({ "k": r(k), "mass": r(v) }))
        .collect();
    json!({
        "algorithm": d.algorithm,
        "m": d.m,
        "measure": d.measure,
        "masses": masses,
    })
}

pub fn sweep_cell(cell: &SweepCell) -> Value {
    json!({
        "m": cell.m,
        "measure": cell.measure,
        "equal": cell.equal(),
        "distributions": cell.distributions.iter().map(distribution).collect::<Vec<_>>(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "equal": v.equal,
        "witness": v.witness.as_ref().map(|w| json!({
            "k": r(&w.k),
            "left_algorithm": w.left_algorithm,
            "right_algorithm": w.right_algorithm,
            "measure": w.measure,
            "m": w.m,
            "left_mass": r(&w.left_mass),
            "right_mass": r(&w.right_mass),
        })),
    })
}

pub fn counterexample(c: &Counterexample) -> Value {
    json!({
        "f": table(&c.f),
        "g": table(&c.g),
        "permutation": c.permutation.image(),
        "a": c.a.name(),
        "b": c.b.name(),
        "measure": crate::search::PerformanceMeasure::name(&c.measure),
        "k": r(&c.k),
        "m": c.m,
        "left_mass": r(&c.left_mass),
        "right_mass": r(&c.right_mass),
    })
}

pub fn condition_violation(v: &ConditionViolation) -> Value {
    json!({
        "histogram": histogram(&v.histogram),
        "f": table(&v.f),
        "g": table(&v.g),
        "permutation": v.permutation.image(),
        "p_f": r(&v.p_f),
        "p_g": r(&v.p_g),
    })
}

pub fn count_report(c: &CountReport) -> Value {
    json!({
        "x": c.x,
        "y": c.y,
        "histogram_count": c.histogram_count.to_string(),
        "cup_subsets": c.cup_subsets.to_string(),
        "all_subsets": c.all_subsets.as_ref().map(ToString::to_string),
        "fraction_log10": c.fraction_log10,
        "fraction_exact": c.fraction_exact.as_ref().map(r),
    })
}

pub fn curve_row(row: &CurveRow) -> Value {
    json!({
        "x": row.x,
        "y": row.y,
        "histogram_count": row.histogram_count.to_string(),
        "cup_count": row.cup_count.to_string(),
        "total_count": row.total_count.to_string(),
        "fraction_log10": row.fraction_log10,
    })
}

pub fn hitting_report(h: &HittingReport, with_times: bool) -> Value {
    let mut v = json!({
        "algorithm": h.algorithm,
        "x": h.size,
        "n": h.desirable,
        "mean": r(&h.mean),
        "formula": r(&h.formula),
        "match": h.matches(),
    });
    if with_times {
        v["times"] = json!(h.times);
    }
    v
}

pub fn structure_report(f: &ObjectiveFunction, s: &StructureReport) -> Value {
    json!({
        "function": table(f),
        "s_max": s.s_max.as_ref().map(r),
        "d_max": r(&s.d_max),
        "local_minima": s.local_minima,
        "l_max": s.l_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_function_set() {
        let doc = FunctionSetDoc::parse(
            r#"{"domain_size": 4, "codomain": ["0/1", "1"], "functions": [[1,0,0,0],[0,1,0,0]],
                "labels": ["00","01","10","11"]}"#,
        )
        .unwrap();
        let set = doc.to_set().unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.space().label(3), "11");
        let back = FunctionSetDoc::from_set(&set);
        assert_eq!(back.to_set().unwrap(), set);
    }

    #[test]
    fn rejects_bad_documents() {
        let empty = FunctionSetDoc::parse(r#"{"domain_size": 2, "codomain": ["0/1"], "functions": []}"#)
            .unwrap();
        assert!(matches!(empty.to_set(), Err(NflError::EmptySet)));
        let bad = FunctionSetDoc::parse(r#"{"domain_size": 2, "codomain": ["0/1"], "functions": [[0,1]]}"#)
            .unwrap();
        assert!(bad.to_set().is_err());
        let err = FunctionSetDoc::parse("{\n\"domain_size\": 2,\n\"codomain\": [\n").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
        let unsorted = FunctionSetDoc::parse(r#"{"domain_size": 1, "codomain": ["1", "0"], "functions": [[0]]}"#)
            .unwrap();
        assert!(unsorted.to_set().is_err());
    }

    #[test]
    fn probability_alignment() {
        // Listed out of rank order: (0,1,0,0) has rank 2, (1,0,0,0) rank 1.
        let set = FunctionSetDoc::parse(
            r#"{"domain_size": 4, "codomain": ["0", "1"], "functions": [[0,1,0,0],[1,0,0,0]]}"#,
        )
        .unwrap();
        let g = Guards::default();
        let short = ProbabilityDoc::parse(r#"{"weights": ["3/4", "1/4"]}"#).unwrap();
        let d = short.to_distribution(&set, &g).unwrap();
        assert_eq!(d.weight(&ObjectiveFunction::from_rank(2, 4, 2)), rational::ratio(3, 4));
        assert_eq!(d.weight(&ObjectiveFunction::from_rank(1, 4, 2)), rational::ratio(1, 4));
        let mut full = vec!["0".to_string(); 16];
        full[15] = "1".into();
        let doc = ProbabilityDoc {
            weights: full.into_iter().map(RationalText::Text).collect(),
        };
        let d = doc.to_distribution(&set, &g).unwrap();
        assert_eq!(d.weight(&ObjectiveFunction::from_rank(15, 4, 2)), rational::int(1));
        let odd = ProbabilityDoc::parse(r#"{"weights": ["1"]}"#).unwrap();
        assert!(odd.to_distribution(&set, &g).is_err());
        let twice = FunctionSetDoc::parse(
            r#"{"domain_size": 4, "codomain": ["0", "1"], "functions": [[0,1,0,0],[0,1,0,0]]}"#,
        )
        .unwrap();
        assert!(short.to_distribution(&twice, &g).is_err());
    }

    #[test]
    fn neighborhoods() {
        let h = NeighborhoodDoc::parse(r#"{"type": "hypercube", "param": 2}"#).unwrap();
        assert_eq!(h.to_relation(4).unwrap().edge_count(), 4);
        assert!(h.to_relation(8).is_err());
        let implied = NeighborhoodDoc::parse(r#"{"type": "hypercube"}"#).unwrap();
        assert_eq!(implied.to_relation(8).unwrap().edge_count(), 12);
        let ring = NeighborhoodDoc::parse(r#"{"type": "ring"}"#).unwrap();
        assert_eq!(ring.to_relation(5).unwrap().edge_count(), 5);
        let custom = NeighborhoodDoc::parse(r#"{"type": "custom", "edges": [[0,1],[1,2]]}"#).unwrap();
        assert_eq!(custom.to_relation(3).unwrap().edge_count(), 2);
        let bad = NeighborhoodDoc::parse(r#"{"type": "torus"}"#).unwrap();
        assert!(bad.to_relation(4).is_err());
    }
}
