//! Finite search spaces, objective functions as value tables, histograms,
//! permutations and closure under permutation.
//!
//! Points are canonical indices `0..|X|`. Cost values live once in a
//! [`CostDomain`] in ascending order and functions store indices into it,
//! so comparing indices is the same as comparing cost values.
//!
//! Functions are ordered by their *rank*: the table read as a base-`|Y|`
//! number with point 0 as the least significant digit. For `{0,1}^2 -> {0,1}`
//! the function of rank `i` is the i-th column `f_i` of the usual table of
//! all sixteen Boolean functions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{ClosureWitness, NflError, Result};
use crate::rational::Rational;

/// Limits for operations whose cost grows with `|Y|^|X|` or orbit sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Largest `|Y|^|X|` (or ensemble size) that may be enumerated.
    pub max_functions: u64,
    /// Largest orbit that may be enumerated.
    pub max_orbit: u64,
    /// Largest exponent `n` for which `2^n` is materialized exactly.
    pub max_exponent: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_functions: 1 << 20,
            max_orbit: 1_000_000,
            max_exponent: 1 << 20,
        }
    }
}

impl Guards {
    pub(crate) fn check_functions(&self, what: &'static str, required: &BigUint) -> Result<u64> {
        match required.to_u64() {
            Some(n) if n <= self.max_functions => Ok(n),
            _ => Err(NflError::guard(what, required, self.max_functions)),
        }
    }

    pub(crate) fn check_orbit(&self, required: &BigUint) -> Result<u64> {
        match required.to_u64() {
            Some(n) if n <= self.max_orbit => Ok(n),
            _ => Err(NflError::guard("orbit size", required, self.max_orbit)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchSpace {
    size: usize,
    labels: Option<Vec<String>>,
}

impl SearchSpace {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(NflError::InvalidSpace("size must be at least 1".into()));
        }
        Ok(SearchSpace { size, labels: None })
    }

    pub fn with_labels(size: usize, labels: Vec<String>) -> Result<Self> {
        let mut space = SearchSpace::new(size)?;
        if labels.len() != size {
            return Err(NflError::InvalidSpace(format!(
                "{} labels for {} points",
                labels.len(),
                size
            )));
        }
        let unique: BTreeSet<&String> = labels.iter().collect();
        if unique.len() != labels.len() {
            return Err(NflError::InvalidSpace("labels must be unique".into()));
        }
        space.labels = Some(labels);
        Ok(space)
    }

    /// `{0,1}^bits`, labelled by bit-strings in standard binary encoding.
    pub fn bit_strings(bits: u32) -> Result<Self> {
        let size = 1usize
            .checked_shl(bits)
            .filter(|_| bits < usize::BITS)
            .ok_or_else(|| NflError::InvalidSpace(format!("{bits} bits is too many")))?;
        let labels = (0..size)
            .map(|i| format!("{:0width$b}", i, width = bits as usize))
            .collect();
        SearchSpace::with_labels(size, labels)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, point: usize) -> String {
        match &self.labels {
            Some(l) => l[point].clone(),
            None => point.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostDomain {
    values: Vec<Rational>,
}

impl CostDomain {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(NflError::InvalidCostDomain("needs at least one value".into()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(NflError::InvalidCostDomain(
                "values must be strictly ascending".into(),
            ));
        }
        Ok(CostDomain { values })
    }

    /// The integers `0..size`.
    pub fn range(size: usize) -> Result<Self> {
        CostDomain::new((0..size as i64).map(crate::rational::int).collect())
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, index: usize) -> &Rational {
        &self.values[index]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// A total function `X -> Y` stored as cost indices per point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ObjectiveFunction {
    table: Vec<usize>,
}

impl ObjectiveFunction {
    pub fn new(table: Vec<usize>, num_costs: usize) -> Result<Self> {
        if table.is_empty() {
            return Err(NflError::InvalidTable("table is empty".into()));
        }
        if let Some(bad) = table.iter().find(|&&c| c >= num_costs) {
            return Err(NflError::InvalidTable(format!(
                "cost index {bad} out of range for {num_costs} cost values"
            )));
        }
        Ok(ObjectiveFunction { table })
    }

    /// The function whose rank is `rank` (see the module docs).
    pub fn from_rank(mut rank: u64, size: usize, num_costs: usize) -> Self {
        let mut table = Vec::with_capacity(size);
        for _ in 0..size {
            table.push((rank % num_costs as u64) as usize);
            rank /= num_costs as u64;
        }
        ObjectiveFunction { table }
    }

    pub fn rank(&self, num_costs: usize) -> BigUint {
        self.table.iter().rev().fold(BigUint::from(0u32), |acc, &c| {
            acc * BigUint::from(num_costs) + BigUint::from(c)
        })
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn at(&self, point: usize) -> usize {
        self.table[point]
    }

    pub fn histogram(&self, num_costs: usize) -> Histogram {
        let mut counts = vec![0usize; num_costs];
        for &c in &self.table {
            counts[c] += 1;
        }
        Histogram { counts }
    }

    /// `f∘π`: the table at `i` is `f(π(i))`.
    pub fn compose(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.size() {
            return Err(NflError::SizeMismatch {
                expected: self.size(),
                actual: perm.len(),
            });
        }
        Ok(ObjectiveFunction {
            table: perm.image.iter().map(|&p| self.table[p]).collect(),
        })
    }

    /// A permutation `π` with `self∘π = other`. Points where both functions
    /// already agree are kept fixed.
    pub fn permutation_to(&self, other: &ObjectiveFunction) -> Option<Permutation> {
        if self.size() != other.size() {
            return None;
        }
        let mut sources: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (j, (&a, &b)) in self.table.iter().zip(&other.table).enumerate() {
            if a != b {
                sources.entry(a).or_default().push(j);
            }
        }
        for list in sources.values_mut() {
            list.reverse();
        }
        let mut image = Vec::with_capacity(self.size());
        for (i, (&a, &b)) in self.table.iter().zip(&other.table).enumerate() {
            if a == b {
                image.push(i);
            } else {
                image.push(sources.get_mut(&b)?.pop()?);
            }
        }
        Some(Permutation { image })
    }
}

impl Ord for ObjectiveFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.table
            .len()
            .cmp(&other.table.len())
            .then_with(|| self.table.iter().rev().cmp(other.table.iter().rev()))
    }
}

impl PartialOrd for ObjectiveFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ObjectiveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicity of each cost index. Sums to `|X|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Histogram {
    counts: Vec<usize>,
}

impl Histogram {
    pub fn new(counts: Vec<usize>, space_size: usize) -> Result<Self> {
        let h = Histogram { counts };
        if h.total() != space_size || h.counts.is_empty() {
            return Err(NflError::InvalidHistogram(h));
        }
        Ok(h)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, cost: usize) -> usize {
        self.counts.get(cost).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `|X|! / Π h(y)!`, the size of the basis class.
    pub fn orbit_size(&self) -> BigUint {
        let mut result = BigUint::one();
        let mut placed = 0usize;
        // product of binomials C(placed + c, c)
        for &c in &self.counts {
            for k in 1..=c {
                placed += 1;
                result *= BigUint::from(placed);
                result /= BigUint::from(k);
            }
        }
        result
    }

    /// The smallest function (by rank) with this histogram.
    pub fn representative(&self) -> ObjectiveFunction {
        // the highest cost indices go to the lowest points
        let mut table = Vec::with_capacity(self.total());
        for (cost, &c) in self.counts.iter().enumerate().rev() {
            table.extend(std::iter::repeat_n(cost, c));
        }
        ObjectiveFunction { table }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &p in &image {
            if p >= image.len() || std::mem::replace(&mut seen[p], true) {
                return Err(NflError::InvalidPermutation(format!(
                    "{image:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(size: usize) -> Self {
        Permutation {
            image: (0..size).collect(),
        }
    }

    pub fn reversal(size: usize) -> Self {
        Permutation {
            image: (0..size).rev().collect(),
        }
    }

    pub fn transposition(size: usize, i: usize, j: usize) -> Result<Self> {
        if i >= size || j >= size {
            return Err(NflError::InvalidPermutation(format!(
                "transposition ({i} {j}) outside 0..{size}"
            )));
        }
        let mut p = Permutation::identity(size);
        p.image.swap(i, j);
        Ok(p)
    }

    /// `i -> (i + shift) mod size`.
    pub fn cyclic_shift(size: usize, shift: usize) -> Self {
        Permutation {
            image: (0..size).map(|i| (i + shift) % size).collect(),
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &p) in self.image.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Rearranges `items` into the next lexicographically larger arrangement.
/// Returns `false` (leaving `items` sorted ascending) after the last one.
/// Repeated values are handled, so only distinct arrangements are visited.
pub(crate) fn next_arrangement<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// All distinct rearrangements of `f`'s table, that is the orbit
/// `{ f∘π : π ∈ Π(X) }`, in increasing rank order.
pub fn orbit_of(f: &ObjectiveFunction, guards: &Guards) -> Result<Vec<ObjectiveFunction>> {
    let num_costs = f.table.iter().max().map_or(1, |m| m + 1);
    let size = f.histogram(num_costs).orbit_size();
    let expected = guards.check_orbit(&size)? as usize;
    // Arrangements of the reversed table in lexicographic order are the
    // orbit in rank order.
    let mut work: Vec<usize> = f.table.clone();
    work.sort_unstable();
    let mut orbit = Vec::with_capacity(expected);
    loop {
        orbit.push(ObjectiveFunction {
            table: work.iter().rev().copied().collect(),
        });
        if !next_arrangement(&mut work) {
            break;
        }
    }
    debug_assert_eq!(orbit.len(), expected);
    Ok(orbit)
}

/// A deduplicated set of functions over one space and cost domain,
/// iterated in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSet {
    space: SearchSpace,
    costs: CostDomain,
    members: BTreeSet<ObjectiveFunction>,
}

impl FunctionSet {
    pub fn new(
        space: SearchSpace,
        costs: CostDomain,
        members: impl IntoIterator<Item = ObjectiveFunction>,
    ) -> Result<Self> {
        let mut set = FunctionSet {
            space,
            costs,
            members: BTreeSet::new(),
        };
        for f in members {
            set.insert(f)?;
        }
        Ok(set)
    }

    /// Builds a set from raw tables, e.g. `FunctionSet::from_tables(4, 2, ..)`.
    pub fn from_tables(size: usize, num_costs: usize, tables: &[&[usize]]) -> Result<Self> {
        let space = SearchSpace::new(size)?;
        let costs = CostDomain::range(num_costs)?;
        let members = tables
            .iter()
            .map(|t| ObjectiveFunction::new(t.to_vec(), num_costs))
            .collect::<Result<Vec<_>>>()?;
        FunctionSet::new(space, costs, members)
    }

    /// Builds a set from function ranks over the integer cost domain `0..num_costs`.
    pub fn from_ranks(size: usize, num_costs: usize, ranks: &[u64]) -> Result<Self> {
        let space = SearchSpace::new(size)?;
        let costs = CostDomain::range(num_costs)?;
        let members = ranks
            .iter()
            .map(|&r| ObjectiveFunction::from_rank(r, size, num_costs));
        FunctionSet::new(space, costs, members)
    }

    pub fn empty(space: SearchSpace, costs: CostDomain) -> Self {
        FunctionSet {
            space,
            costs,
            members: BTreeSet::new(),
        }
    }

    /// Every function `X -> Y`.
    pub fn full(space: SearchSpace, costs: CostDomain, guards: &Guards) -> Result<Self> {
        let members = enumerate_functions(&space, &costs, guards)?.collect::<BTreeSet<_>>();
        Ok(FunctionSet {
            space,
            costs,
            members,
        })
    }

    pub fn insert(&mut self, f: ObjectiveFunction) -> Result<bool> {
        if f.size() != self.space.size() {
            return Err(NflError::SizeMismatch {
                expected: self.space.size(),
                actual: f.size(),
            });
        }
        if f.table.iter().any(|&c| c >= self.costs.size()) {
            return Err(NflError::InvalidTable(format!(
                "{f} uses a cost index outside 0..{}",
                self.costs.size()
            )));
        }
        Ok(self.members.insert(f))
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn costs(&self) -> &CostDomain {
        &self.costs
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &ObjectiveFunction) -> bool {
        self.members.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ObjectiveFunction> + '_ {
        self.members.iter()
    }

    pub fn histogram_of(&self, f: &ObjectiveFunction) -> Histogram {
        f.histogram(self.costs.size())
    }

    /// The basis class of `f` as a set over this set's space and costs.
    pub fn orbit_set(&self, f: &ObjectiveFunction, guards: &Guards) -> Result<FunctionSet> {
        let orbit = orbit_of(f, guards)?;
        FunctionSet::new(self.space.clone(), self.costs.clone(), orbit)
    }

    /// `None` if the set is closed under permutation, otherwise the
    /// smallest member (by rank) whose orbit leaves the set, with the first
    /// missing orbit member and a permutation reaching it.
    pub fn closure_witness(&self, guards: &Guards) -> Result<Option<ClosureWitness>> {
        if self.members.is_empty() {
            return Err(NflError::EmptySet);
        }
        let mut checked: BTreeSet<Histogram> = BTreeSet::new();
        for f in &self.members {
            let h = self.histogram_of(f);
            if checked.contains(&h) {
                continue;
            }
            for g in orbit_of(f, guards)? {
                if !self.members.contains(&g) {
                    let permutation = f
                        .permutation_to(&g)
                        .expect("orbit members share a histogram");
                    return Ok(Some(ClosureWitness {
                        function: f.clone(),
                        permutation,
                        image: g,
                    }));
                }
            }
            checked.insert(h);
        }
        Ok(None)
    }

    pub fn is_cup(&self, guards: &Guards) -> Result<bool> {
        Ok(self.closure_witness(guards)?.is_none())
    }

    /// The smallest superset closed under permutation: the union of the
    /// orbits of all members.
    pub fn closure(&self, guards: &Guards) -> Result<FunctionSet> {
        if self.members.is_empty() {
            return Err(NflError::EmptySet);
        }
        let mut out = FunctionSet::empty(self.space.clone(), self.costs.clone());
        let mut done: BTreeSet<Histogram> = BTreeSet::new();
        for f in &self.members {
            if done.insert(self.histogram_of(f)) {
                out.members.extend(orbit_of(f, guards)?);
            }
        }
        Ok(out)
    }

    /// Splits a closed set into its basis classes, ordered by smallest member.
    pub fn decompose_basis_classes(&self, guards: &Guards) -> Result<Vec<(Histogram, FunctionSet)>> {
        if let Some(w) = self.closure_witness(guards)? {
            return Err(NflError::NotClosed(Box::new(w)));
        }
        let mut parts: Vec<(Histogram, FunctionSet)> = Vec::new();
        let mut index: BTreeMap<Histogram, usize> = BTreeMap::new();
        for f in &self.members {
            let h = self.histogram_of(f);
            let slot = *index.entry(h.clone()).or_insert_with(|| {
                parts.push((h, FunctionSet::empty(self.space.clone(), self.costs.clone())));
                parts.len() - 1
            });
            parts[slot].1.members.insert(f.clone());
        }
        Ok(parts)
    }
}

/// Number of functions `|Y|^|X|`.
pub fn function_count(space: &SearchSpace, costs: &CostDomain) -> BigUint {
    num_traits::pow(BigUint::from(costs.size()), space.size())
}

/// Every function in increasing rank order (point 0 varies fastest).
pub fn enumerate_functions(
    space: &SearchSpace,
    costs: &CostDomain,
    guards: &Guards,
) -> Result<impl Iterator<Item = ObjectiveFunction>> {
    let total = guards.check_functions("|Y|^|X| functions", &function_count(space, costs))?;
    let (size, num_costs) = (space.size(), costs.size());
    Ok((0..total).map(move |r| ObjectiveFunction::from_rank(r, size, num_costs)))
}

/// Every histogram, i.e. every way to distribute `|X|` points over `|Y|`
/// cost values, in lexicographic order of the count vectors.
pub fn enumerate_histograms(
    space: &SearchSpace,
    costs: &CostDomain,
    guards: &Guards,
) -> Result<HistogramIter> {
    let count = crate::combinatorics::count_histograms(space.size() as u64, costs.size() as u64);
    guards.check_functions("histograms", &count)?;
    Ok(HistogramIter::new(space.size(), costs.size()))
}

/// Weak compositions of `total` into `parts` parts in lexicographic order.
#[derive(Debug, Clone)]
pub struct HistogramIter {
    total: usize,
    current: Option<Vec<usize>>,
}

impl HistogramIter {
    fn new(total: usize, parts: usize) -> Self {
        let mut first = vec![0; parts];
        first[parts - 1] = total;
        HistogramIter {
            total,
            current: Some(first),
        }
    }
}

impl Iterator for HistogramIter {
    type Item = Histogram;

    fn next(&mut self) -> Option<Histogram> {
        let cur = self.current.take()?;
        let out = Histogram {
            counts: cur.clone(),
        };
        // next composition: find the rightmost non-last position that can
        // grow, i.e. some mass remains to its right
        let n = cur.len();
        let mut next = cur;
        let mut advanced = false;
        if n > 1 {
            for i in (0..n - 1).rev() {
                let tail: usize = next[i + 1..].iter().sum();
                if tail > 0 {
                    next[i] += 1;
                    for v in &mut next[i + 1..] {
                        *v = 0;
                    }
                    let head: usize = next[..n - 1].iter().sum();
                    next[n - 1] = self.total - head;
                    advanced = true;
                    break;
                }
            }
        }
        if advanced {
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(rank: u64) -> ObjectiveFunction {
        ObjectiveFunction::from_rank(rank, 4, 2)
    }

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn ranks_match_boolean_table_columns() {
        assert_eq!(f(1).table(), &[1, 0, 0, 0]);
        assert_eq!(f(3).table(), &[1, 1, 0, 0]);
        assert_eq!(f(6).table(), &[0, 1, 1, 0]);
        assert_eq!(f(8).table(), &[0, 0, 0, 1]);
        assert_eq!(f(13).rank(2), BigUint::from(13u32));
    }

    #[test]
    fn histograms_of_table_functions() {
        assert_eq!(f(1).histogram(2).counts(), &[3, 1]);
        assert_eq!(f(0).histogram(2).counts(), &[4, 0]);
        assert_eq!(f(6).histogram(2).counts(), &[2, 2]);
    }

    #[test]
    fn compose_examples() {
        let swap = Permutation::transposition(4, 1, 2).unwrap();
        assert_eq!(f(3).compose(&swap).unwrap(), f(5));
        assert_eq!(f(9).compose(&Permutation::identity(4)).unwrap(), f(9));
        let shift = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(f(1).compose(&shift).unwrap(), f(8));
        assert!(matches!(
            f(1).compose(&Permutation::identity(3)),
            Err(NflError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn orbit_examples() {
        let orbit = orbit_of(&f(1), &g()).unwrap();
        assert_eq!(orbit, vec![f(1), f(2), f(4), f(8)]);
        assert_eq!(orbit_of(&f(0), &g()).unwrap(), vec![f(0)]);
        let six: Vec<_> = [3, 5, 6, 9, 10, 12].iter().map(|&r| f(r)).collect();
        assert_eq!(orbit_of(&f(3), &g()).unwrap(), six);
    }

    #[test]
    fn orbit_guard() {
        let guards = Guards {
            max_orbit: 5,
            ..Guards::default()
        };
        assert!(orbit_of(&f(1), &guards).is_ok());
        assert!(matches!(
            orbit_of(&f(3), &guards),
            Err(NflError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn cup_examples() {
        let closed = FunctionSet::from_ranks(4, 2, &[1, 2, 4, 8]).unwrap();
        assert!(closed.is_cup(&g()).unwrap());
        let with_zero = FunctionSet::from_ranks(4, 2, &[0, 1, 2, 4, 8]).unwrap();
        assert!(with_zero.is_cup(&g()).unwrap());

        let open = FunctionSet::from_ranks(4, 2, &[1, 2, 3, 4, 8]).unwrap();
        let w = open.closure_witness(&g()).unwrap().unwrap();
        assert_eq!(w.function, f(3));
        assert_eq!(w.image, f(5));
        assert_eq!(w.permutation, Permutation::transposition(4, 1, 2).unwrap());
        assert_eq!(w.function.compose(&w.permutation).unwrap(), w.image);

        let all = FunctionSet::full(SearchSpace::new(4).unwrap(), CostDomain::range(2).unwrap(), &g())
            .unwrap();
        assert_eq!(all.len(), 16);
        assert!(all.is_cup(&g()).unwrap());
    }

    #[test]
    fn empty_set_is_rejected() {
        let empty = FunctionSet::from_ranks(4, 2, &[]).unwrap();
        assert!(matches!(empty.is_cup(&g()), Err(NflError::EmptySet)));
        assert!(matches!(empty.closure(&g()), Err(NflError::EmptySet)));
    }

    #[test]
    fn closure_examples() {
        let one = FunctionSet::from_ranks(4, 2, &[1]).unwrap();
        assert_eq!(
            one.closure(&g()).unwrap(),
            FunctionSet::from_ranks(4, 2, &[1, 2, 4, 8]).unwrap()
        );
        let closed = FunctionSet::from_ranks(4, 2, &[0, 1, 2, 4, 8]).unwrap();
        assert_eq!(closed.closure(&g()).unwrap(), closed);
        let two = FunctionSet::from_ranks(4, 2, &[1, 3]).unwrap();
        assert_eq!(two.closure(&g()).unwrap().len(), 10);
    }

    #[test]
    fn decomposition_examples() {
        let set = FunctionSet::from_ranks(4, 2, &[1, 2, 4, 8, 15]).unwrap();
        let parts = set.decompose_basis_classes(&g()).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0.counts(), &[3, 1]);
        assert_eq!(parts[0].1, FunctionSet::from_ranks(4, 2, &[1, 2, 4, 8]).unwrap());
        assert_eq!(parts[1].0.counts(), &[0, 4]);
        assert_eq!(parts[1].1, FunctionSet::from_ranks(4, 2, &[15]).unwrap());

        let all = FunctionSet::full(SearchSpace::new(4).unwrap(), CostDomain::range(2).unwrap(), &g())
            .unwrap();
        let sizes: Vec<usize> = all
            .decompose_basis_classes(&g())
            .unwrap()
            .iter()
            .map(|(_, p)| p.len())
            .collect();
        assert_eq!(sizes, vec![1, 4, 6, 4, 1]);

        let open = FunctionSet::from_ranks(4, 2, &[1, 3]).unwrap();
        assert!(matches!(
            open.decompose_basis_classes(&g()),
            Err(NflError::NotClosed(_))
        ));
    }

    #[test]
    fn enumeration_counts() {
        let space = SearchSpace::new(4).unwrap();
        let costs = CostDomain::range(2).unwrap();
        let all: Vec<_> = enumerate_functions(&space, &costs, &g()).unwrap().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[6].table(), &[0, 1, 1, 0]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        let one = SearchSpace::new(1).unwrap();
        let three = CostDomain::range(3).unwrap();
        assert_eq!(enumerate_functions(&one, &three, &g()).unwrap().count(), 3);

        let hs: Vec<_> = enumerate_histograms(&space, &costs, &g()).unwrap().collect();
        assert_eq!(hs.len(), 5);
        assert!(hs.iter().all(|h| h.total() == 4));

        let tight = Guards {
            max_functions: 15,
            ..Guards::default()
        };
        assert!(enumerate_functions(&space, &costs, &tight).is_err());
    }

    #[test]
    fn invalid_inputs() {
        assert!(SearchSpace::new(0).is_err());
        assert!(SearchSpace::with_labels(2, vec!["a".into(), "a".into()]).is_err());
        assert!(SearchSpace::with_labels(2, vec!["a".into()]).is_err());
        assert!(CostDomain::new(vec![]).is_err());
        assert!(CostDomain::new(vec![crate::rational::int(1), crate::rational::int(1)]).is_err());
        assert!(ObjectiveFunction::new(vec![0, 2], 2).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Histogram::new(vec![1, 1], 3).is_err());
    }

    #[test]
    fn bit_string_labels() {
        let s = SearchSpace::bit_strings(2).unwrap();
        assert_eq!(s.labels().unwrap(), &["00", "01", "10", "11"]);
    }

    #[test]
    fn orbit_sizes_are_multinomials() {
        let h = Histogram::new(vec![2, 2], 4).unwrap();
        assert_eq!(h.orbit_size(), BigUint::from(6u32));
        let h = Histogram::new(vec![4, 4], 8).unwrap();
        assert_eq!(h.orbit_size(), BigUint::from(70u32));
        assert_eq!(h.representative().histogram(2), h);
    }
}
