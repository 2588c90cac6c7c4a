//! Neighborhood relations on the search space and landscape functionals
//! defined through them: steepness, range diameter, strict local minima.
//!
//! A non-trivial neighborhood is never invariant under all permutations, so
//! classes of functions constrained through one (bounded steepness, bounded
//! number of local minima) are generally not closed under permutation.
//! [`constrained_class`] builds such classes and certifies non-closure with
//! an explicit witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{ClosureWitness, NflError, Result};
use crate::rational::{self, Rational};
use crate::space::{
    enumerate_functions, orbit_of, CostDomain, FunctionSet, Guards, Histogram,
    ObjectiveFunction, Permutation, SearchSpace,
};

/// Symmetric, irreflexive adjacency on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodRelation {
    name: String,
    adjacency: Vec<BTreeSet<usize>>,
}

impl NeighborhoodRelation {
    fn from_edges(name: String, size: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![BTreeSet::new(); size];
        for (a, b) in edges {
            if a >= size || b >= size {
                return Err(NflError::MalformedNeighborhood(format!(
                    "edge ({a}, {b}) outside 0..{size}"
                )));
            }
            if a == b {
                return Err(NflError::MalformedNeighborhood(format!("self-edge at {a}")));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(NeighborhoodRelation { name, adjacency })
    }

    /// `{0,1}^bits` with Hamming-distance-1 adjacency.
    pub fn hypercube(bits: u32) -> Result<Self> {
        if bits == 0 || bits >= 24 {
            return Err(NflError::MalformedNeighborhood(format!(
                "hypercube dimension {bits} outside 1..24"
            )));
        }
        let mut rel = Self::hamming(1 << bits);
        rel.name = format!("hypercube({bits})");
        Ok(rel)
    }

    /// Hamming-distance-1 adjacency restricted to `0..size`; the hypercube
    /// when `size` is a power of two.
    fn hamming(size: usize) -> Self {
        let edges = (0..size).flat_map(|i| {
            (0..usize::BITS)
                .map(move |b| i ^ (1 << b))
                .filter(move |&j| j > i && j < size)
                .map(move |j| (i, j))
        });
        Self::from_edges(format!("hamming({size})"), size, edges).expect("in range")
    }

    /// Cycle `i ~ i±1 mod size`.
    pub fn ring(size: usize) -> Result<Self> {
        if size < 3 {
            return Err(NflError::MalformedNeighborhood(format!(
                "ring needs at least 3 points, got {size}"
            )));
        }
        Self::from_edges(
            format!("ring({size})"),
            size,
            (0..size).map(|i| (i, (i + 1) % size)),
        )
    }

    /// Arbitrary edges, symmetrized and deduplicated.
    pub fn custom(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return Err(NflError::MalformedNeighborhood("empty space".into()));
        }
        Self::from_edges(format!("custom({size})"), size, edges.iter().copied())
    }

    pub fn complete(size: usize) -> Self {
        let edges = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j)));
        Self::from_edges(format!("complete({size})"), size, edges).expect("in range")
    }

    pub fn empty(size: usize) -> Self {
        Self::from_edges(format!("empty({size})"), size, std::iter::empty()).expect("in range")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.adjacency.len()
    }

    pub fn are_neighbors(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|s| s.contains(&b))
    }

    /// Neighbors of `p` in increasing order.
    pub fn neighbors(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[p].iter().copied()
    }

    /// Each edge once, as `(low, high)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Some distinct pair is adjacent and some distinct pair is not.
    pub fn is_nontrivial(&self) -> bool {
        let n = self.size();
        let pairs = n * n.saturating_sub(1) / 2;
        let edges = self.edge_count();
        edges > 0 && edges < pairs
    }

    pub fn is_invariant_under(&self, perm: &Permutation) -> bool {
        perm.len() == self.size() && self.broken_pair(perm).is_none()
    }

    /// A pair whose adjacency differs from that of its image under `perm`.
    pub fn broken_pair(&self, perm: &Permutation) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.are_neighbors(i, j) != self.are_neighbors(perm.apply(i), perm.apply(j)))
    }

    /// A permutation that does not preserve the relation. Transpositions
    /// `(i j)` are tried in lexicographic order; they generate all
    /// permutations, so one of them works exactly when the relation is
    /// non-trivial.
    pub fn find_noninvariant_permutation(&self) -> Result<Permutation> {
        let n = self.size();
        for i in 0..n {
            for j in i + 1..n {
                let t = Permutation::transposition(n, i, j)?;
                if !self.is_invariant_under(&t) {
                    return Ok(t);
                }
            }
        }
        Err(NflError::NoWitness)
    }
}

/// A neighborhood that is built once the space size is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborhoodSpec {
    /// Hamming-1 adjacency on the binary encoding of the indices (the
    /// hypercube for power-of-two sizes, truncated otherwise).
    Hypercube,
    /// The cycle; for fewer than 3 points, the complete graph.
    Ring,
    Fixed(NeighborhoodRelation),
}

impl NeighborhoodSpec {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "hypercube" => Ok(NeighborhoodSpec::Hypercube),
            "ring" => Ok(NeighborhoodSpec::Ring),
            other => Err(NflError::Parse(format!("unknown neighborhood `{other}`"))),
        }
    }

    pub fn build(&self, size: usize) -> Result<NeighborhoodRelation> {
        match self {
            NeighborhoodSpec::Hypercube => Ok(NeighborhoodRelation::hamming(size)),
            NeighborhoodSpec::Ring if size < 3 => Ok(NeighborhoodRelation::complete(size)),
            NeighborhoodSpec::Ring => NeighborhoodRelation::ring(size),
            NeighborhoodSpec::Fixed(rel) if rel.size() == size => Ok(rel.clone()),
            NeighborhoodSpec::Fixed(rel) => Err(NflError::SizeMismatch {
                expected: size,
                actual: rel.size(),
            }),
        }
    }
}

impl fmt::Display for NeighborhoodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborhoodSpec::Hypercube => f.write_str("hypercube"),
            NeighborhoodSpec::Ring => f.write_str("ring"),
            NeighborhoodSpec::Fixed(rel) => f.write_str(rel.name()),
        }
    }
}

/// Exact distance on cost values.
pub trait CostMetric {
    fn distance(&self, a: &Rational, b: &Rational) -> Rational;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AbsoluteDifference;

impl CostMetric for AbsoluteDifference {
    fn distance(&self, a: &Rational, b: &Rational) -> Rational {
        rational::abs_diff(a, b)
    }
}

/// 0 for equal values, 1 otherwise.
#[derive(Debug, Clone, Copy, Default)]
pub struct DiscreteMetric;

impl CostMetric for DiscreteMetric {
    fn distance(&self, a: &Rational, b: &Rational) -> Rational {
        rational::int((a != b) as i64)
    }
}

/// Largest cost distance over neighbored pairs.
pub fn steepness(
    f: &ObjectiveFunction,
    relation: &NeighborhoodRelation,
    costs: &CostDomain,
    metric: &dyn CostMetric,
) -> Result<Rational> {
    relation
        .edges()
        .into_iter()
        .map(|(a, b)| metric.distance(costs.value(f.at(a)), costs.value(f.at(b))))
        .max()
        .ok_or(NflError::UndefinedSteepness)
}

/// Largest cost distance over all pairs of points.
pub fn diameter(f: &ObjectiveFunction, costs: &CostDomain, metric: &dyn CostMetric) -> Rational {
    let n = f.size();
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(a, b)| metric.distance(costs.value(f.at(a)), costs.value(f.at(b))))
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Points whose cost is strictly below the cost of every neighbor. A point
/// without neighbors satisfies this vacuously.
pub fn local_minima(f: &ObjectiveFunction, relation: &NeighborhoodRelation) -> Vec<usize> {
    (0..f.size())
        .filter(|&p| relation.neighbors(p).all(|q| f.at(p) < f.at(q)))
        .collect()
}

pub fn local_minima_count(f: &ObjectiveFunction, relation: &NeighborhoodRelation) -> usize {
    local_minima(f, relation).len()
}

/// Largest number of local minima over the basis class of `f`.
pub fn l_max(f: &ObjectiveFunction, relation: &NeighborhoodRelation, guards: &Guards) -> Result<usize> {
    if f.size() != relation.size() {
        return Err(NflError::SizeMismatch {
            expected: relation.size(),
            actual: f.size(),
        });
    }
    Ok(orbit_of(f, guards)?
        .iter()
        .map(|g| local_minima_count(g, relation))
        .max()
        .unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// `None` for a neighborhood without edges.
    pub s_max: Option<Rational>,
    pub d_max: Rational,
    pub local_minima: usize,
    pub l_max: usize,
}

pub fn structure_report(
    f: &ObjectiveFunction,
    relation: &NeighborhoodRelation,
    costs: &CostDomain,
    metric: &dyn CostMetric,
    guards: &Guards,
) -> Result<StructureReport> {
    let s_max = match steepness(f, relation, costs, metric) {
        Ok(s) => Some(s),
        Err(NflError::UndefinedSteepness) => None,
        Err(e) => return Err(e),
    };
    Ok(StructureReport {
        s_max,
        d_max: diameter(f, costs, metric),
        local_minima: local_minima_count(f, relation),
        l_max: l_max(f, relation, guards)?,
    })
}

/// Membership predicate for a constraint-defined class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// `s_max(f) <= bound`.
    SteepnessAtMost(Rational),
    /// At most `bound` local minima.
    MinimaAtMost(usize),
}

#[derive(Debug, Clone)]
pub struct ConstrainedClass {
    pub class: FunctionSet,
    /// The unconstrained maximum the bound has to stay below: the largest
    /// `d_max` (steepness) or `l_max` (minima) over the class.
    pub max_possible: Rational,
    /// Largest constrained value actually attained within the class.
    pub max_attained: Rational,
    /// Non-closure certificate. Always present when the bound is binding.
    pub witness: Option<ClosureWitness>,
}

/// Enumerates every function satisfying `constraint` and certifies that the
/// class is not closed under permutation.
///
/// Fails with [`NflError::BoundNotBinding`] unless every member stays
/// strictly below the largest possible value of the constrained quantity
/// over the class.
pub fn constrained_class(
    space: &SearchSpace,
    costs: &CostDomain,
    relation: &NeighborhoodRelation,
    metric: &dyn CostMetric,
    constraint: &Constraint,
    guards: &Guards,
) -> Result<ConstrainedClass> {
    if relation.size() != space.size() {
        return Err(NflError::SizeMismatch {
            expected: space.size(),
            actual: relation.size(),
        });
    }
    let mut members = Vec::new();
    let mut attained: Vec<Rational> = Vec::new();
    for f in enumerate_functions(space, costs, guards)? {
        let value = match constraint {
            Constraint::SteepnessAtMost(bound) => {
                let s = steepness(&f, relation, costs, metric)?;
                (s <= *bound).then_some(s)
            }
            Constraint::MinimaAtMost(bound) => {
                let k = local_minima_count(&f, relation);
                (k <= *bound).then(|| rational::int(k as i64))
            }
        };
        if let Some(v) = value {
            members.push(f);
            attained.push(v);
        }
    }
    if members.is_empty() {
        return Err(NflError::EmptyClass);
    }
    let max_possible = match constraint {
        Constraint::SteepnessAtMost(_) => members
            .iter()
            .map(|f| diameter(f, costs, metric))
            .max()
            .expect("non-empty"),
        Constraint::MinimaAtMost(_) => {
            let mut per_class: BTreeMap<Histogram, usize> = BTreeMap::new();
            for f in &members {
                let h = f.histogram(costs.size());
                if let std::collections::btree_map::Entry::Vacant(slot) = per_class.entry(h) {
                    slot.insert(l_max(f, relation, guards)?);
                }
            }
            rational::int(*per_class.values().max().expect("non-empty") as i64)
        }
    };
    let max_attained = attained.iter().max().expect("non-empty").clone();
    if max_attained >= max_possible {
        return Err(NflError::BoundNotBinding(format!(
            "members reach {} but the largest possible value is {}",
            rational::format(&max_attained),
            rational::format(&max_possible)
        )));
    }
    let class = FunctionSet::new(space.clone(), costs.clone(), members)?;
    let witness = class.closure_witness(guards)?;
    Ok(ConstrainedClass {
        class,
        max_possible,
        max_attained,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn f(rank: u64) -> ObjectiveFunction {
        ObjectiveFunction::from_rank(rank, 4, 2)
    }

    fn bits() -> CostDomain {
        CostDomain::range(2).unwrap()
    }

    #[test]
    fn constructors() {
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(NeighborhoodRelation::ring(4).unwrap().edge_count(), 4);
        let c = NeighborhoodRelation::custom(3, &[(2, 0), (0, 2)]).unwrap();
        assert!(c.are_neighbors(0, 2) && c.are_neighbors(2, 0));
        assert_eq!(c.edge_count(), 1);
        assert!(NeighborhoodRelation::custom(3, &[(0, 3)]).is_err());
        assert!(NeighborhoodRelation::custom(3, &[(1, 1)]).is_err());
        assert!(NeighborhoodRelation::ring(2).is_err());
        assert!(NeighborhoodRelation::hypercube(0).is_err());
    }

    #[test]
    fn nontriviality() {
        assert!(NeighborhoodRelation::hypercube(2).unwrap().is_nontrivial());
        assert!(!NeighborhoodRelation::complete(4).is_nontrivial());
        assert!(!NeighborhoodRelation::empty(4).is_nontrivial());
        assert!(!NeighborhoodRelation::complete(1).is_nontrivial());
    }

    #[test]
    fn noninvariant_permutations() {
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        let p = h.find_noninvariant_permutation().unwrap();
        assert_eq!(p, Permutation::transposition(4, 0, 1).unwrap());
        // (00,10) is an edge, its image (01,10) is the diagonal non-edge
        assert!(h.are_neighbors(0, 2) && !h.are_neighbors(p.apply(0), p.apply(2)));
        // the transposition of 01 and 11 also works
        let t = Permutation::transposition(4, 1, 3).unwrap();
        assert!(h.are_neighbors(0, 1) && !h.are_neighbors(t.apply(0), t.apply(1)));

        let r = NeighborhoodRelation::ring(5).unwrap();
        assert!(r.broken_pair(&r.find_noninvariant_permutation().unwrap()).is_some());
        assert!(matches!(
            NeighborhoodRelation::complete(4).find_noninvariant_permutation(),
            Err(NflError::NoWitness)
        ));
    }

    #[test]
    fn steepness_and_diameter() {
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        let m = AbsoluteDifference;
        assert_eq!(steepness(&f(6), &h, &bits(), &m).unwrap(), int(1));
        assert_eq!(diameter(&f(6), &bits(), &m), int(1));
        assert_eq!(steepness(&f(0), &h, &bits(), &m).unwrap(), int(0));
        assert_eq!(diameter(&f(0), &bits(), &m), int(0));
        // ring 0-1-2-3-0 with values 0,0,1,1: edges (1,2) and (3,0) differ
        let r = NeighborhoodRelation::ring(4).unwrap();
        let g = ObjectiveFunction::new(vec![0, 0, 1, 1], 2).unwrap();
        assert_eq!(steepness(&g, &r, &bits(), &m).unwrap(), int(1));
        // a single differing edge on a path-like custom relation
        let path = NeighborhoodRelation::custom(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let three = CostDomain::range(3).unwrap();
        let k = ObjectiveFunction::new(vec![0, 0, 0, 2], 3).unwrap();
        assert_eq!(steepness(&k, &path, &three, &m).unwrap(), int(2));
        assert!(matches!(
            steepness(&f(1), &NeighborhoodRelation::empty(4), &bits(), &m),
            Err(NflError::UndefinedSteepness)
        ));
    }

    #[test]
    fn parity_minima() {
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        assert_eq!(local_minima(&f(6), &h), vec![0, 3]);
        assert_eq!(local_minima_count(&f(0), &h), 0);
        assert_eq!(l_max(&f(6), &h, &Guards::default()).unwrap(), 2);
        assert_eq!(l_max(&f(3), &h, &Guards::default()).unwrap(), 2);
    }

    #[test]
    fn isolated_points_are_minima() {
        let rel = NeighborhoodRelation::custom(3, &[(0, 1)]).unwrap();
        let g = ObjectiveFunction::new(vec![0, 1, 1], 2).unwrap();
        assert_eq!(local_minima(&g, &rel), vec![0, 2]);
    }

    #[test]
    fn minima_bounded_class_is_not_closed() {
        let space = SearchSpace::bit_strings(2).unwrap();
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        let out = constrained_class(
            &space,
            &bits(),
            &h,
            &AbsoluteDifference,
            &Constraint::MinimaAtMost(1),
            &Guards::default(),
        )
        .unwrap();
        assert_eq!(out.class.len(), 14);
        assert!(!out.class.contains(&f(6)) && !out.class.contains(&f(9)));
        let w = out.witness.unwrap();
        assert_eq!(w.image, f(6));
        assert_eq!(w.function.compose(&w.permutation).unwrap(), f(6));
        assert_eq!(out.max_possible, int(2));
    }

    #[test]
    fn degenerate_steepness_bound() {
        let space = SearchSpace::bit_strings(2).unwrap();
        let h = NeighborhoodRelation::hypercube(2).unwrap();
        let err = constrained_class(
            &space,
            &bits(),
            &h,
            &AbsoluteDifference,
            &Constraint::SteepnessAtMost(int(0)),
            &Guards::default(),
        )
        .unwrap_err();
        assert!(matches!(err, NflError::BoundNotBinding(_)));
        let err = constrained_class(
            &space,
            &bits(),
            &h,
            &AbsoluteDifference,
            &Constraint::SteepnessAtMost(int(-1)),
            &Guards::default(),
        )
        .unwrap_err();
        assert!(matches!(err, NflError::EmptyClass));
    }

    #[test]
    fn neighborhood_specs() {
        assert_eq!(NeighborhoodSpec::Ring.build(2).unwrap().edge_count(), 1);
        assert_eq!(NeighborhoodSpec::Ring.build(5).unwrap().edge_count(), 5);
        let cube = NeighborhoodSpec::Hypercube.build(8).unwrap();
        assert_eq!(cube, {
            let mut c = NeighborhoodRelation::hypercube(3).unwrap();
            c.name = cube.name.clone();
            c
        });
        // truncated hypercube on 0..6
        assert_eq!(NeighborhoodSpec::Hypercube.build(6).unwrap().edge_count(), 7);
        let fixed = NeighborhoodSpec::Fixed(NeighborhoodRelation::ring(4).unwrap());
        assert!(fixed.build(5).is_err());
        assert!(NeighborhoodSpec::parse("torus").is_err());
    }
}
