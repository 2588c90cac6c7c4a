//! Performance distributions and the no-free-lunch equality checks.
//!
//! For an algorithm `a`, a length `m` and a measure `c`, the performance
//! distribution maps every realized value `k` to `Σ_f w(f)·δ(k, c(Y(f,m,a)))`,
//! with `w ≡ 1` over a plain function set or `w = p` for a distribution over
//! all functions. Values that are never realized carry zero mass on every
//! side and are left out, so two distributions are equal iff their mass maps
//! are equal.
//!
//! The uniform check holds for closed sets; the weighted check holds iff
//! the weights are constant on every basis class. Both "only if" directions
//! are certified constructively: two fixed-order enumerations related by the
//! witness permutation and the full-sequence indicator of the witness
//! function produce different masses at `k = 1`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{NflError, Result};
use crate::rational::{self, Rational};
use crate::search::{
    run, CostSequence, OrderDriven, PerformanceMeasure, SearchAlgorithm, SequenceIndicator,
};
use crate::space::{
    enumerate_functions, enumerate_histograms, function_count, orbit_of, CostDomain,
    FunctionSet, Guards, Histogram, ObjectiveFunction, Permutation, SearchSpace,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerformanceDistribution {
    pub algorithm: String,
    pub m: usize,
    pub measure: String,
    masses: BTreeMap<Rational, Rational>,
}

impl PerformanceDistribution {
    pub fn masses(&self) -> &BTreeMap<Rational, Rational> {
        &self.masses
    }

    pub fn mass(&self, k: &Rational) -> Rational {
        self.masses.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        rational::sum(self.masses.values())
    }

    /// Same masses, regardless of the context labels.
    pub fn same_masses(&self, other: &Self) -> bool {
        self.masses == other.masses
    }

    /// Every mass multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        PerformanceDistribution {
            masses: self
                .masses
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
            ..self.clone()
        }
    }

    /// Smallest `k` whose mass differs between the two distributions.
    pub fn first_difference(&self, other: &Self) -> Option<Rational> {
        self.masses
            .keys()
            .chain(other.masses.keys())
            .filter(|k| self.mass(k) != other.mass(k))
            .min()
            .cloned()
    }
}

fn distribution_over<'a>(
    weighted: impl IntoIterator<Item = (&'a ObjectiveFunction, &'a Rational)>,
    costs: &CostDomain,
    algorithm: &dyn SearchAlgorithm,
    m: usize,
    measure: &dyn PerformanceMeasure,
) -> Result<PerformanceDistribution> {
    let mut masses: BTreeMap<Rational, Rational> = BTreeMap::new();
    for (f, w) in weighted {
        if w.is_zero() {
            continue;
        }
        let trace = run(algorithm, f, m)?;
        let seq = trace.cost_indices();
        let k = measure.evaluate(CostSequence::new(costs, &seq))?;
        *masses.entry(k).or_insert_with(Rational::zero) += w;
    }
    Ok(PerformanceDistribution {
        algorithm: algorithm.name(),
        m,
        measure: measure.name(),
        masses,
    })
}

/// Counts per performance value over a plain function set.
pub fn performance_distribution(
    set: &FunctionSet,
    algorithm: &dyn SearchAlgorithm,
    m: usize,
    measure: &dyn PerformanceMeasure,
) -> Result<PerformanceDistribution> {
    let one = Rational::one();
    distribution_over(set.iter().map(|f| (f, &one)), set.costs(), algorithm, m, measure)
}

/// Probability mass per performance value under a function distribution.
pub fn weighted_performance_distribution(
    dist: &FunctionDistribution,
    algorithm: &dyn SearchAlgorithm,
    m: usize,
    measure: &dyn PerformanceMeasure,
) -> Result<PerformanceDistribution> {
    distribution_over(dist.weights.iter(), &dist.costs, algorithm, m, measure)
}

/// A probability distribution over functions `X -> Y`. Functions that are
/// not listed have probability zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionDistribution {
    space: SearchSpace,
    costs: CostDomain,
    weights: BTreeMap<ObjectiveFunction, Rational>,
}

impl FunctionDistribution {
    /// `weights` aligned with the set's rank order; must be non-negative
    /// and sum to one.
    pub fn new(set: &FunctionSet, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != set.len() {
            return Err(NflError::InvalidDistribution(format!(
                "{} weights for {} functions",
                weights.len(),
                set.len()
            )));
        }
        Self::from_pairs(
            set.space().clone(),
            set.costs().clone(),
            set.iter().cloned().zip(weights),
        )
    }

    fn from_pairs(
        space: SearchSpace,
        costs: CostDomain,
        pairs: impl IntoIterator<Item = (ObjectiveFunction, Rational)>,
    ) -> Result<Self> {
        let mut weights = BTreeMap::new();
        let mut total = Rational::zero();
        for (f, w) in pairs {
            if w.is_negative() {
                return Err(NflError::InvalidDistribution(format!(
                    "negative weight {} for {f}",
                    rational::format(&w)
                )));
            }
            total += &w;
            weights.insert(f, w);
        }
        if !total.is_one() {
            return Err(NflError::InvalidDistribution(format!(
                "weights sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(FunctionDistribution {
            space,
            costs,
            weights,
        })
    }

    pub fn uniform(set: &FunctionSet) -> Result<Self> {
        if set.is_empty() {
            return Err(NflError::EmptySet);
        }
        let w = rational::ratio(1, set.len() as i64);
        Self::new(set, vec![w; set.len()])
    }

    /// Weights aligned with the rank order of all `|Y|^|X|` functions.
    pub fn from_full_vector(
        space: SearchSpace,
        costs: CostDomain,
        weights: Vec<Rational>,
        guards: &Guards,
    ) -> Result<Self> {
        let functions: Vec<_> = enumerate_functions(&space, &costs, guards)?.collect();
        if weights.len() != functions.len() {
            return Err(NflError::InvalidDistribution(format!(
                "{} weights for {} functions",
                weights.len(),
                functions.len()
            )));
        }
        Self::from_pairs(space, costs, functions.into_iter().zip(weights))
    }

    /// Independent, identically distributed cost values: `p(f) = Π_x q(f(x))`.
    pub fn iid(space: SearchSpace, costs: CostDomain, q: &[Rational], guards: &Guards) -> Result<Self> {
        if q.len() != costs.size() {
            return Err(NflError::InvalidDistribution(format!(
                "{} per-value probabilities for {} cost values",
                q.len(),
                costs.size()
            )));
        }
        let pairs: Vec<_> = enumerate_functions(&space, &costs, guards)?
            .map(|f| {
                let p = f.table().iter().fold(Rational::one(), |acc, &c| acc * &q[c]);
                (f, p)
            })
            .collect();
        Self::from_pairs(space, costs, pairs)
    }

    /// Constant on each basis class: every function with histogram `h`
    /// gets weight proportional to `class_weights[h]`, normalized so the
    /// total is one. Histograms not listed get zero.
    pub fn from_class_weights(
        space: SearchSpace,
        costs: CostDomain,
        class_weights: &BTreeMap<Histogram, Rational>,
        guards: &Guards,
    ) -> Result<Self> {
        let mut total = Rational::zero();
        for (h, w) in class_weights {
            if h.total() != space.size() || h.counts().len() != costs.size() {
                return Err(NflError::InvalidHistogram(h.clone()));
            }
            total += w * Rational::from_integer(h.orbit_size().into());
        }
        if total.is_zero() {
            return Err(NflError::InvalidDistribution("all class weights are zero".into()));
        }
        let mut pairs = Vec::new();
        for (h, w) in class_weights {
            let p = w / &total;
            for f in orbit_of(&h.representative(), guards)? {
                pairs.push((f, p.clone()));
            }
        }
        Self::from_pairs(space, costs, pairs)
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn costs(&self) -> &CostDomain {
        &self.costs
    }

    pub fn weight(&self, f: &ObjectiveFunction) -> Rational {
        self.weights.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    /// Listed functions with their weights, in rank order.
    pub fn iter(&self) -> impl Iterator<Item = (&ObjectiveFunction, &Rational)> + '_ {
        self.weights.iter()
    }

    /// Functions with positive weight.
    pub fn support(&self) -> Result<FunctionSet> {
        FunctionSet::new(
            self.space.clone(),
            self.costs.clone(),
            self.weights
                .iter()
                .filter(|(_, w)| !w.is_zero())
                .map(|(f, _)| f.clone()),
        )
    }

    /// A copy with the weights of `a` and `b` exchanged.
    pub fn with_swapped(&self, a: &ObjectiveFunction, b: &ObjectiveFunction) -> Self {
        let (wa, wb) = (self.weight(a), self.weight(b));
        let mut out = self.clone();
        out.weights.insert(a.clone(), wb);
        out.weights.insert(b.clone(), wa);
        out
    }
}

/// `p_x(y)`: probability that point `x` is mapped to cost index `y`.
pub fn marginal_pxy(dist: &FunctionDistribution, x: usize, y: usize) -> Rational {
    dist.weights
        .iter()
        .filter(|(f, _)| f.at(x) == y)
        .fold(Rational::zero(), |acc, (_, w)| acc + w)
}

/// Two members of one basis class with different weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionViolation {
    pub histogram: Histogram,
    pub f: ObjectiveFunction,
    pub g: ObjectiveFunction,
    /// `g = f∘π`.
    pub permutation: Permutation,
    pub p_f: Rational,
    pub p_g: Rational,
}

/// Checks that the weights are constant on every basis class of the full
/// function space, counting unlisted functions as weight zero.
///
/// On failure reports the smallest member `f` of the first offending class
/// and the first member `g` whose weight differs from `p(f)`.
pub fn check_nonuniform_condition(
    dist: &FunctionDistribution,
    guards: &Guards,
) -> Result<Option<ConditionViolation>> {
    guards.check_functions("|Y|^|X| functions", &function_count(&dist.space, &dist.costs))?;
    for h in enumerate_histograms(&dist.space, &dist.costs, guards)? {
        let orbit = orbit_of(&h.representative(), guards)?;
        let f = &orbit[0];
        let p_f = dist.weight(f);
        if let Some(g) = orbit.iter().find(|g| dist.weight(g) != p_f) {
            return Ok(Some(ConditionViolation {
                permutation: f.permutation_to(g).expect("same basis class"),
                p_g: dist.weight(g),
                histogram: h,
                f: f.clone(),
                g: g.clone(),
                p_f,
            }));
        }
    }
    Ok(None)
}

/// One `(m, measure)` cell of a sweep: the distribution of every algorithm.
#[derive(Debug, Clone)]
pub struct SweepCell {
    pub m: usize,
    pub measure: String,
    pub distributions: Vec<PerformanceDistribution>,
}

impl SweepCell {
    /// First pair of algorithms (by position) with different masses.
    pub fn mismatch(&self) -> Option<VerdictWitness> {
        let first = self.distributions.first()?;
        self.distributions[1..].iter().find_map(|d| {
            let k = first.first_difference(d)?;
            Some(VerdictWitness {
                left_mass: first.mass(&k),
                right_mass: d.mass(&k),
                k,
                left_algorithm: first.algorithm.clone(),
                right_algorithm: d.algorithm.clone(),
                measure: self.measure.clone(),
                m: self.m,
            })
        })
    }

    pub fn equal(&self) -> bool {
        self.mismatch().is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictWitness {
    pub k: Rational,
    pub left_algorithm: String,
    pub right_algorithm: String,
    pub measure: String,
    pub m: usize,
    pub left_mass: Rational,
    pub right_mass: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    pub witness: Option<VerdictWitness>,
}

impl Verdict {
    pub fn from_cells(cells: &[SweepCell]) -> Self {
        let witness = cells.iter().find_map(SweepCell::mismatch);
        Verdict {
            equal: witness.is_none(),
            witness,
        }
    }
}

fn check_lengths(ms: &[usize], size: usize) -> Result<()> {
    match ms.iter().find(|&&m| m == 0 || m > size) {
        Some(&m) => Err(NflError::InvalidLength { m, size }),
        None => Ok(()),
    }
}

/// Distributions of every algorithm for every `(m, measure)` over a set.
pub fn sweep_uniform(
    set: &FunctionSet,
    algorithms: &[&dyn SearchAlgorithm],
    ms: &[usize],
    measures: &[&dyn PerformanceMeasure],
) -> Result<Vec<SweepCell>> {
    check_lengths(ms, set.space().size())?;
    let mut cells = Vec::new();
    for &m in ms {
        for &c in measures {
            let distributions = algorithms
                .iter()
                .map(|&a| performance_distribution(set, a, m, c))
                .collect::<Result<_>>()?;
            cells.push(SweepCell {
                m,
                measure: c.name(),
                distributions,
            });
        }
    }
    Ok(cells)
}

/// Distributions of every algorithm for every `(m, measure)` under weights.
pub fn sweep_weighted(
    dist: &FunctionDistribution,
    algorithms: &[&dyn SearchAlgorithm],
    ms: &[usize],
    measures: &[&dyn PerformanceMeasure],
) -> Result<Vec<SweepCell>> {
    check_lengths(ms, dist.space.size())?;
    let mut cells = Vec::new();
    for &m in ms {
        for &c in measures {
            let distributions = algorithms
                .iter()
                .map(|&a| weighted_performance_distribution(dist, a, m, c))
                .collect::<Result<_>>()?;
            cells.push(SweepCell {
                m,
                measure: c.name(),
                distributions,
            });
        }
    }
    Ok(cells)
}

/// Whether all algorithms have identical performance distributions over
/// `set` for every supplied `m` and measure.
pub fn verify_uniform_nfl(
    set: &FunctionSet,
    algorithms: &[&dyn SearchAlgorithm],
    ms: &[usize],
    measures: &[&dyn PerformanceMeasure],
) -> Result<Verdict> {
    Ok(Verdict::from_cells(&sweep_uniform(set, algorithms, ms, measures)?))
}

/// Weighted counterpart of [`verify_uniform_nfl`].
pub fn verify_nonuniform_nfl(
    dist: &FunctionDistribution,
    algorithms: &[&dyn SearchAlgorithm],
    ms: &[usize],
    measures: &[&dyn PerformanceMeasure],
) -> Result<Verdict> {
    Ok(Verdict::from_cells(&sweep_weighted(dist, algorithms, ms, measures)?))
}

/// Two fixed-order algorithms, a full-sequence indicator and the masses
/// they produce at `k = 1` for `m = |X|`.
#[derive(Debug, Clone)]
pub struct Counterexample {
    /// `f` and `g = f∘π`.
    pub f: ObjectiveFunction,
    pub g: ObjectiveFunction,
    pub permutation: Permutation,
    /// Enumerates `0, 1, ..., n-1`.
    pub a: OrderDriven,
    /// Enumerates `π⁻¹(0), ..., π⁻¹(n-1)`.
    pub b: OrderDriven,
    /// Indicator of `⟨f(0), ..., f(n-1)⟩`.
    pub measure: SequenceIndicator,
    pub k: Rational,
    pub m: usize,
    pub left_mass: Rational,
    pub right_mass: Rational,
}

fn counterexample_parts(
    f: &ObjectiveFunction,
    g: &ObjectiveFunction,
    permutation: &Permutation,
    costs: &CostDomain,
) -> (OrderDriven, OrderDriven, SequenceIndicator) {
    debug_assert_eq!(f.compose(permutation).ok().as_ref(), Some(g));
    let n = f.size();
    (
        OrderDriven::new(Permutation::identity(n)),
        OrderDriven::new(permutation.inverse()),
        SequenceIndicator::of_function(f, costs),
    )
}

/// Certifies that the performance of two algorithms differs over a set
/// that is not closed under permutation.
pub fn construct_counterexample(set: &FunctionSet, guards: &Guards) -> Result<Counterexample> {
    let witness = set
        .closure_witness(guards)?
        .ok_or(NflError::CalledOnClosedSet)?;
    let (a, b, measure) =
        counterexample_parts(&witness.function, &witness.image, &witness.permutation, set.costs());
    let m = set.space().size();
    let k = Rational::one();
    let left_mass = performance_distribution(set, &a, m, &measure)?.mass(&k);
    let right_mass = performance_distribution(set, &b, m, &measure)?.mass(&k);
    Ok(Counterexample {
        f: witness.function,
        g: witness.image,
        permutation: witness.permutation,
        a,
        b,
        measure,
        k,
        m,
        left_mass,
        right_mass,
    })
}

/// Certifies that the weighted performance of two algorithms differs when
/// the weights are not constant on some basis class. The masses are
/// `p(f)` and `p(g)` for the violating pair.
pub fn construct_nonuniform_counterexample(
    dist: &FunctionDistribution,
    guards: &Guards,
) -> Result<Counterexample> {
    let v = check_nonuniform_condition(dist, guards)?
        .ok_or(NflError::CalledOnCompliantDistribution)?;
    let (a, b, measure) = counterexample_parts(&v.f, &v.g, &v.permutation, &dist.costs);
    let m = dist.space.size();
    let k = Rational::one();
    let left_mass = weighted_performance_distribution(dist, &a, m, &measure)?.mass(&k);
    let right_mass = weighted_performance_distribution(dist, &b, m, &measure)?.mass(&k);
    Ok(Counterexample {
        f: v.f,
        g: v.g,
        permutation: v.permutation,
        a,
        b,
        measure,
        k,
        m,
        left_mass,
        right_mass,
    })
}
