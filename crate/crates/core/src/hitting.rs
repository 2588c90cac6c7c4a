//! Mean first hitting time of desirable points.
//!
//! The ensemble `F_n` over `|X|` points consists of all placements of `n`
//! desirable points, modelled as two-valued functions (desirable = cost 0,
//! other = cost 1). Averaged over the ensemble, every non-repeating
//! black-box algorithm needs `(|X| + 1) / (n + 1)` evaluations to hit the
//! first desirable point, even algorithms that adapt to the observed costs.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinatorics::binomial;
use crate::error::{NflError, Result};
use crate::rational::{self, Rational};
use crate::search::{run_until, SearchAlgorithm};
use crate::space::{orbit_of, Guards, Histogram, ObjectiveFunction};

/// Cost index of desirable points.
pub const DESIRABLE: usize = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesirabilityEnsemble {
    size: usize,
    desirable: usize,
}

impl DesirabilityEnsemble {
    pub fn new(size: usize, desirable: usize) -> Result<Self> {
        if size == 0 || desirable == 0 || desirable > size {
            return Err(NflError::InvalidSpace(format!(
                "need 1 <= n <= |X|, got n = {desirable}, |X| = {size}"
            )));
        }
        Ok(DesirabilityEnsemble { size, desirable })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn desirable(&self) -> usize {
        self.desirable
    }

    /// `C(|X|, n)`.
    pub fn member_count(&self) -> BigUint {
        binomial(self.size as u64, self.desirable as u64)
    }

    /// Every placement, in rank order.
    pub fn members(&self, guards: &Guards) -> Result<Vec<ObjectiveFunction>> {
        guards.check_functions("ensemble members C(|X|, n)", &self.member_count())?;
        let h = Histogram::new(vec![self.desirable, self.size - self.desirable], self.size)?;
        let mut guards = *guards;
        guards.max_orbit = guards.max_orbit.max(guards.max_functions);
        orbit_of(&h.representative(), &guards)
    }

    /// Builds the member whose desirable points are `points`.
    pub fn member(&self, points: &[usize]) -> Result<ObjectiveFunction> {
        let mut table = vec![1; self.size];
        for &p in points {
            if p >= self.size {
                return Err(NflError::InvalidTable(format!("point {p} outside 0..{}", self.size)));
            }
            table[p] = DESIRABLE;
        }
        if table.iter().filter(|&&c| c == DESIRABLE).count() != self.desirable {
            return Err(NflError::InvalidTable(format!(
                "{points:?} is not a set of {} distinct points",
                self.desirable
            )));
        }
        ObjectiveFunction::new(table, 2)
    }
}

/// Step (1-based) at which `algorithm` first evaluates a desirable point.
pub fn first_hit_time(algorithm: &dyn SearchAlgorithm, member: &ObjectiveFunction) -> Result<usize> {
    if !member.table().contains(&DESIRABLE) {
        return Err(NflError::InvalidTable(format!("{member} has no desirable point")));
    }
    let trace = run_until(algorithm, member, |c| c == DESIRABLE)?;
    Ok(trace.len())
}

/// `(|X| + 1) / (n + 1)`.
pub fn hitting_formula(size: usize, desirable: usize) -> Rational {
    rational::ratio(size as i64 + 1, desirable as i64 + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingReport {
    pub algorithm: String,
    pub size: usize,
    pub desirable: usize,
    pub mean: Rational,
    pub formula: Rational,
    /// First-hit time per ensemble member, in rank order.
    pub times: Vec<usize>,
}

impl HittingReport {
    pub fn matches(&self) -> bool {
        self.mean == self.formula
    }
}

/// Exact average of the first hitting time over the whole ensemble.
pub fn mean_first_hit(
    algorithm: &dyn SearchAlgorithm,
    size: usize,
    desirable: usize,
    guards: &Guards,
) -> Result<HittingReport> {
    let ensemble = DesirabilityEnsemble::new(size, desirable)?;
    let members = ensemble.members(guards)?;
    let times = members
        .iter()
        .map(|m| first_hit_time(algorithm, m))
        .collect::<Result<Vec<_>>>()?;
    let total: u64 = times.iter().map(|&t| t as u64).sum();
    let mean = if members.is_empty() {
        Rational::zero()
    } else {
        Rational::new((total as i64).into(), (members.len() as i64).into())
    };
    Ok(HittingReport {
        algorithm: algorithm.name(),
        size,
        desirable,
        mean,
        formula: hitting_formula(size, desirable),
        times,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::search::{Lexicographic, OrderDriven};
    use crate::space::Permutation;

    #[test]
    fn first_hits() {
        let e = DesirabilityEnsemble::new(4, 1).unwrap();
        assert_eq!(first_hit_time(&Lexicographic, &e.member(&[0]).unwrap()).unwrap(), 1);
        assert_eq!(first_hit_time(&Lexicographic, &e.member(&[3]).unwrap()).unwrap(), 4);
        let rev = OrderDriven::new(Permutation::reversal(4));
        assert_eq!(first_hit_time(&rev, &e.member(&[3]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn ensemble_means() {
        let g = Guards::default();
        assert_eq!(mean_first_hit(&Lexicographic, 4, 4, &g).unwrap().mean, int(1));
        assert_eq!(mean_first_hit(&Lexicographic, 4, 1, &g).unwrap().mean, ratio(5, 2));
        let r = mean_first_hit(&Lexicographic, 8, 2, &g).unwrap();
        assert_eq!(r.times.len(), 28);
        assert_eq!(r.mean, int(3));
        assert!(r.matches());
    }

    #[test]
    fn invalid_ensembles() {
        assert!(DesirabilityEnsemble::new(4, 0).is_err());
        assert!(DesirabilityEnsemble::new(4, 5).is_err());
        let e = DesirabilityEnsemble::new(4, 2).unwrap();
        assert!(e.member(&[1, 1]).is_err());
        assert!(e.member(&[1, 7]).is_err());
        let none = ObjectiveFunction::new(vec![1, 1], 2).unwrap();
        assert!(first_hit_time(&Lexicographic, &none).is_err());
        let tight = Guards {
            max_functions: 10,
            ..Guards::default()
        };
        assert!(mean_first_hit(&Lexicographic, 8, 2, &tight).is_err());
    }
}
