//! Algorithm family strings and the built-in family.
//!
//! A family is a comma-separated list of entries:
//!
//! ```text
//! lex                       lexicographic enumeration
//! order:<image>             fixed order, e.g. order:3210 or order:10.9.8.7.6.5.4.3.2.1.0
//! order:rev                 reversed enumeration
//! rand:<seed>               seeded uniformly random order
//! hill:<nbh>:<seed>         hill climber on `hypercube` or `ring`
//! memo:<inner>              memoized heuristic, where <inner> is any entry above or
//!                           rwr:<seed> | const:<point> | local:<nbh>:<seed>
//! ```
//!
//! A missing seed (`rand`, `hill:ring`, `memo:rwr`) expands to one entry per
//! default seed.

use std::fmt;
use std::str::FromStr;

use crate::error::{NflError, Result};
use crate::search::{
    format_order, memoize, AlgorithmHeuristic, ConstantProposal, HeuristicRun, HillClimber,
    Lexicographic, LocalSearch, OrderDriven, RandomWithReplacement, RepeatingHeuristic,
    SearchAlgorithm, SearchRun, SeededRandom,
};
use crate::space::Permutation;
use crate::structure::NeighborhoodSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    Reversal,
    Image(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgorithmSpec {
    Lex,
    Order(OrderSpec),
    Random(u64),
    Hill(NeighborhoodSpec, u64),
    Memo(Box<HeuristicSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeuristicSpec {
    Algorithm(AlgorithmSpec),
    RandomWithReplacement(u64),
    Constant(usize),
    Local(NeighborhoodSpec, u64),
}

fn parse_seed(s: &str, entry: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| NflError::Parse(format!("bad seed `{s}` in `{entry}`")))
}

fn parse_order(s: &str, entry: &str) -> Result<OrderSpec> {
    if s == "rev" {
        return Ok(OrderSpec::Reversal);
    }
    let items: Vec<usize> = if s.contains('.') {
        s.split('.')
            .map(|t| t.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| NflError::Parse(format!("bad order `{s}` in `{entry}`")))?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| NflError::Parse(format!("bad order `{s}` in `{entry}`")))?
    };
    Permutation::new(items.clone())?;
    Ok(OrderSpec::Image(items))
}

/// Parses one entry; `seeds` fills in omitted seeds.
fn parse_entry(entry: &str, seeds: &[u64]) -> Result<Vec<AlgorithmSpec>> {
    let parts: Vec<&str> = entry.split(':').collect();
    let expand = |make: &dyn Fn(u64) -> AlgorithmSpec| seeds.iter().map(|&s| make(s)).collect();
    Ok(match parts.as_slice() {
        ["lex"] => vec![AlgorithmSpec::Lex],
        ["order", image] => vec![AlgorithmSpec::Order(parse_order(image, entry)?)],
        ["rand"] => expand(&AlgorithmSpec::Random),
        ["rand", seed] => vec![AlgorithmSpec::Random(parse_seed(seed, entry)?)],
        ["hill", nbh] => {
            let n = NeighborhoodSpec::parse(nbh)?;
            expand(&|s| AlgorithmSpec::Hill(n.clone(), s))
        }
        ["hill", nbh, seed] => vec![AlgorithmSpec::Hill(
            NeighborhoodSpec::parse(nbh)?,
            parse_seed(seed, entry)?,
        )],
        ["memo", ..] => {
            let inner = &entry["memo:".len()..];
            parse_heuristic(inner, entry, seeds)?
                .into_iter()
                .map(|h| AlgorithmSpec::Memo(Box::new(h)))
                .collect()
        }
        _ => return Err(NflError::Parse(format!("unknown algorithm entry `{entry}`"))),
    })
}

fn parse_heuristic(inner: &str, entry: &str, seeds: &[u64]) -> Result<Vec<HeuristicSpec>> {
    let parts: Vec<&str> = inner.split(':').collect();
    let expand = |make: &dyn Fn(u64) -> HeuristicSpec| seeds.iter().map(|&s| make(s)).collect();
    Ok(match parts.as_slice() {
        ["rwr"] => expand(&HeuristicSpec::RandomWithReplacement),
        ["rwr", seed] => vec![HeuristicSpec::RandomWithReplacement(parse_seed(seed, entry)?)],
        ["const", point] => vec![HeuristicSpec::Constant(point.parse().map_err(|_| {
            NflError::Parse(format!("bad point `{point}` in `{entry}`"))
        })?)],
        ["local", nbh] => {
            let n = NeighborhoodSpec::parse(nbh)?;
            expand(&|s| HeuristicSpec::Local(n.clone(), s))
        }
        ["local", nbh, seed] => vec![HeuristicSpec::Local(
            NeighborhoodSpec::parse(nbh)?,
            parse_seed(seed, entry)?,
        )],
        _ => parse_entry(inner, seeds)?
            .into_iter()
            .map(HeuristicSpec::Algorithm)
            .collect(),
    })
}

/// Parses a family string, expanding omitted seeds with `seeds`.
pub fn parse_family(spec: &str, seeds: &[u64]) -> Result<Vec<AlgorithmSpec>> {
    let mut out = Vec::new();
    for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        out.extend(parse_entry(entry, seeds)?);
    }
    if out.is_empty() {
        return Err(NflError::Parse("empty algorithm family".into()));
    }
    Ok(out)
}

impl FromStr for AlgorithmSpec {
    type Err = NflError;

    fn from_str(s: &str) -> Result<Self> {
        let mut all = parse_entry(s.trim(), &[0])?;
        if all.len() != 1 {
            return Err(NflError::Parse(format!("`{s}` is not a single algorithm")));
        }
        Ok(all.remove(0))
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl AlgorithmSpec {
    fn order_permutation(order: &OrderSpec, size: usize) -> Result<Permutation> {
        match order {
            OrderSpec::Reversal => Ok(Permutation::reversal(size)),
            OrderSpec::Image(image) => {
                if image.len() != size {
                    return Err(NflError::SizeMismatch {
                        expected: size,
                        actual: image.len(),
                    });
                }
                Permutation::new(image.clone())
            }
        }
    }
}

impl SearchAlgorithm for AlgorithmSpec {
    fn name(&self) -> String {
        match self {
            AlgorithmSpec::Lex => Lexicographic.name(),
            AlgorithmSpec::Order(OrderSpec::Reversal) => "order:rev".into(),
            AlgorithmSpec::Order(OrderSpec::Image(image)) => {
                format!("order:{}", format_order(&Permutation::new(image.clone()).expect("validated")))
            }
            AlgorithmSpec::Random(seed) => SeededRandom { seed: *seed }.name(),
            AlgorithmSpec::Hill(n, seed) => format!("hill:{n}:{seed}"),
            AlgorithmSpec::Memo(h) => format!("memo:{}", h.name()),
        }
    }

    fn start(&self, space_size: usize) -> Result<Box<dyn SearchRun>> {
        match self {
            AlgorithmSpec::Lex => Lexicographic.start(space_size),
            AlgorithmSpec::Order(order) => {
                OrderDriven::new(Self::order_permutation(order, space_size)?).start(space_size)
            }
            AlgorithmSpec::Random(seed) => SeededRandom { seed: *seed }.start(space_size),
            AlgorithmSpec::Hill(n, seed) => HillClimber {
                neighborhood: n.clone(),
                seed: *seed,
            }
            .start(space_size),
            AlgorithmSpec::Memo(h) => memoize((**h).clone()).start(space_size),
        }
    }
}

impl RepeatingHeuristic for HeuristicSpec {
    fn name(&self) -> String {
        match self {
            HeuristicSpec::Algorithm(a) => a.name(),
            HeuristicSpec::RandomWithReplacement(seed) => RandomWithReplacement { seed: *seed }.name(),
            HeuristicSpec::Constant(point) => ConstantProposal { point: *point }.name(),
            HeuristicSpec::Local(n, seed) => format!("local:{n}:{seed}"),
        }
    }

    fn start(&self, space_size: usize) -> Result<Box<dyn HeuristicRun>> {
        match self {
            HeuristicSpec::Algorithm(a) => AlgorithmHeuristic(a.clone()).start(space_size),
            HeuristicSpec::RandomWithReplacement(seed) => {
                RandomWithReplacement { seed: *seed }.start(space_size)
            }
            HeuristicSpec::Constant(point) => ConstantProposal { point: *point }.start(space_size),
            HeuristicSpec::Local(n, seed) => LocalSearch {
                neighborhood: n.clone(),
                seed: *seed,
            }
            .start(space_size),
        }
    }
}

/// Seeds used by the built-in family for its random members.
pub const FAMILY_SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

/// Largest space for which every single transposition order joins the family.
pub const TRANSPOSITION_LIMIT: usize = 6;

/// The built-in family for a space of `size` points:
///
/// * lexicographic, reversed and cyclically shifted orders,
/// * the order of every single transposition (for `size <= 6`),
/// * five seeded random orders,
/// * hill climbers on the hypercube and ring neighborhoods,
/// * memoized repeating heuristics: random with replacement, stochastic
///   local search, and a constant proposer.
pub fn builtin_family(size: usize) -> Vec<AlgorithmSpec> {
    let mut family = vec![AlgorithmSpec::Lex, AlgorithmSpec::Order(OrderSpec::Reversal)];
    if size > 1 {
        family.push(AlgorithmSpec::Order(OrderSpec::Image(
            Permutation::cyclic_shift(size, 1).image().to_vec(),
        )));
    }
    if size <= TRANSPOSITION_LIMIT {
        for i in 0..size {
            for j in i + 1..size {
                let t = Permutation::transposition(size, i, j).expect("in range");
                family.push(AlgorithmSpec::Order(OrderSpec::Image(t.image().to_vec())));
            }
        }
    }
    family.extend(FAMILY_SEEDS.iter().map(|&s| AlgorithmSpec::Random(s)));
    family.push(AlgorithmSpec::Hill(NeighborhoodSpec::Hypercube, 1));
    family.push(AlgorithmSpec::Hill(NeighborhoodSpec::Ring, 2));
    family.push(AlgorithmSpec::Memo(Box::new(HeuristicSpec::RandomWithReplacement(1))));
    family.push(AlgorithmSpec::Memo(Box::new(HeuristicSpec::Local(
        NeighborhoodSpec::Hypercube,
        3,
    ))));
    family.push(AlgorithmSpec::Memo(Box::new(HeuristicSpec::Constant(0))));
    family
}

/// The built-in family as a family string.
pub fn builtin_family_string(size: usize) -> String {
    builtin_family(size)
        .iter()
        .map(|a| a.name())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::run;
    use crate::space::ObjectiveFunction;

    #[test]
    fn parses_entries() {
        let fam = parse_family("lex,order:3210,rand:7,hill:ring:2,memo:rwr:4", &[0]).unwrap();
        assert_eq!(fam.len(), 5);
        assert_eq!(fam[1], AlgorithmSpec::Order(OrderSpec::Image(vec![3, 2, 1, 0])));
        let names: Vec<String> = fam.iter().map(|a| a.name()).collect();
        assert_eq!(names, ["lex", "order:3210", "rand:7", "hill:ring:2", "memo:rwr:4"]);
    }

    #[test]
    fn expands_missing_seeds() {
        let fam = parse_family("rand,memo:local:hypercube", &[1, 2]).unwrap();
        let names: Vec<String> = fam.iter().map(|a| a.name()).collect();
        assert_eq!(
            names,
            ["rand:1", "rand:2", "memo:local:hypercube:1", "memo:local:hypercube:2"]
        );
    }

    #[test]
    fn names_round_trip() {
        for a in builtin_family(5) {
            let again: AlgorithmSpec = a.name().parse().unwrap();
            assert_eq!(again, a);
        }
        let long: AlgorithmSpec = "order:10.9.8.7.6.5.4.3.2.1.0".parse().unwrap();
        assert_eq!(long.name(), "order:10.9.8.7.6.5.4.3.2.1.0");
    }

    #[test]
    fn rejects_bad_entries() {
        for bad in ["", "foo", "order:3310", "order:3a", "rand:x", "hill:torus:1", "memo:const:x"] {
            assert!(parse_family(bad, &[0]).is_err(), "{bad}");
        }
    }

    #[test]
    fn order_size_is_checked_at_start() {
        let a: AlgorithmSpec = "order:210".parse().unwrap();
        let f = ObjectiveFunction::from_rank(0, 4, 2);
        assert!(matches!(run(&a, &f, 2), Err(NflError::SizeMismatch { .. })));
    }

    #[test]
    fn builtin_family_shape() {
        let fam = builtin_family(4);
        assert_eq!(fam.len(), 3 + 6 + 5 + 2 + 3);
        assert!(fam.iter().any(|a| matches!(a, AlgorithmSpec::Hill(..))));
        assert!(fam.iter().any(|a| matches!(a, AlgorithmSpec::Memo(..))));
        assert_eq!(builtin_family(1).len(), 2 + 5 + 2 + 3);
        assert_eq!(builtin_family(10).len(), 3 + 5 + 2 + 3);
    }
}
