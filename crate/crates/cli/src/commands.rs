use std::path::Path;

use serde_json::{json, Value};

use nfl_core::combinatorics::{count_report, fraction_curve, write_curve_csv};
use nfl_core::family::{builtin_family, parse_family, AlgorithmSpec};
use nfl_core::hitting::mean_first_hit;
use nfl_core::io::{self, FunctionSetDoc, NeighborhoodDoc, ProbabilityDoc};
use nfl_core::nfl::{
    check_nonuniform_condition, construct_counterexample, construct_nonuniform_counterexample,
    sweep_uniform, sweep_weighted, SweepCell, Verdict,
};
use nfl_core::rational::{self, Rational};
use nfl_core::search::{MeanValue, MinSoFar, PerformanceMeasure, SearchAlgorithm, ValueAtEnd};
use nfl_core::space::{FunctionSet, Guards};
use nfl_core::structure::{
    constrained_class, structure_report, AbsoluteDifference, Constraint, CostMetric,
    DiscreteMetric, NeighborhoodRelation,
};
use nfl_core::NflError;

use crate::report::{CliError, CliResult, Report, Table, EXIT_NOT_CLOSED};

pub struct Context {
    pub guards: Guards,
    pub seeds: Vec<u64>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_set_doc(path: &Path) -> CliResult<(FunctionSetDoc, FunctionSet)> {
    let name = path.display().to_string();
    let text = read(path)?;
    let doc = FunctionSetDoc::parse(&text).map_err(CliError::at(&name))?;
    let set = doc.to_set().map_err(CliError::at(&name))?;
    Ok((doc, set))
}

pub fn load_set(path: &Path) -> CliResult<FunctionSet> {
    Ok(load_set_doc(path)?.1)
}

fn load_relation(path: &Path, size: usize) -> CliResult<NeighborhoodRelation> {
    let name = path.display().to_string();
    let text = read(path)?;
    let doc = NeighborhoodDoc::parse(&text).map_err(CliError::at(&name))?;
    doc.to_relation(size).map_err(CliError::at(&name))
}

fn resolve_family(spec: Option<&str>, size: usize, seeds: &[u64]) -> CliResult<Vec<AlgorithmSpec>> {
    let family = match spec {
        Some(s) => parse_family(s, seeds)?,
        None => builtin_family(size),
    };
    if family.is_empty() {
        return Err(CliError::Input("the algorithm family is empty".into()));
    }
    Ok(family)
}

pub fn parse_measure(name: &str) -> CliResult<Box<dyn PerformanceMeasure>> {
    Ok(match name {
        "min-so-far" => Box::new(MinSoFar),
        "value-at-end" => Box::new(ValueAtEnd),
        "mean" => Box::new(MeanValue),
        other => {
            return Err(CliError::Input(format!(
                "unknown measure `{other}` (expected min-so-far, value-at-end or mean)"
            )))
        }
    })
}

fn resolve_lengths(ms: &[usize], size: usize) -> CliResult<Vec<usize>> {
    if ms.is_empty() {
        return Ok((1..=size).collect());
    }
    match ms.iter().find(|&&m| m == 0 || m > size) {
        Some(m) => Err(CliError::Input(format!("trace length {m} outside 1..={size}"))),
        None => Ok(ms.to_vec()),
    }
}

pub fn check_cup(ctx: &Context, functions: &Path) -> CliResult<Report> {
    let set = load_set(functions)?;
    match set.closure_witness(&ctx.guards)? {
        Some(w) => {
            let mut table = Table::new(vec!["function", "permutation", "image"]);
            table.push(vec![
                w.function.to_string(),
                format!("{:?}", w.permutation.image()),
                w.image.to_string(),
            ]);
            let result = json!({
                "closed": false,
                "size": set.len(),
                "witness": io::closure_witness(&w),
            });
            Ok(Report::new(result, table).with_exit(EXIT_NOT_CLOSED, "function set is not closed under permutation"))
        }
        None => {
            let classes = set.decompose_basis_classes(&ctx.guards)?;
            let mut table = Table::new(vec!["class", "histogram", "function"]);
            let mut out = Vec::new();
            for (i, (h, part)) in classes.iter().enumerate() {
                for f in part.iter() {
                    table.push(vec![i.to_string(), format!("{:?}", h.counts()), f.to_string()]);
                }
                out.push(json!({
                    "histogram": io::histogram(h),
                    "size": part.len(),
                    "functions": part.iter().map(io::table).collect::<Vec<_>>(),
                }));
            }
            let result = json!({ "closed": true, "size": set.len(), "classes": out });
            Ok(Report::new(result, table))
        }
    }
}

pub fn closure(ctx: &Context, functions: &Path) -> CliResult<Report> {
    let set = load_set(functions)?;
    let closed = set.closure(&ctx.guards)?;
    let mut table = Table::new(vec!["function", "in_input"]);
    let mut added = Vec::new();
    for f in closed.iter() {
        let present = set.contains(f);
        table.push(vec![f.to_string(), present.to_string()]);
        if !present {
            added.push(io::table(f));
        }
    }
    let result = json!({
        "input_size": set.len(),
        "closure_size": closed.len(),
        "added": added,
        "closure": io::function_set(&closed),
    });
    Ok(Report::new(result, table))
}

pub struct VerifyOptions<'a> {
    pub functions: &'a Path,
    pub probs: Option<&'a Path>,
    pub family: Option<&'a str>,
    pub ms: &'a [usize],
    pub measures: &'a [String],
    pub distributions: bool,
}

fn pair_rows(cells: &[SweepCell]) -> (Table, Vec<Value>) {
    let mut table = Table::new(vec!["m", "measure", "left", "right", "equal"]);
    let mut rows = Vec::new();
    for cell in cells {
        let ds = &cell.distributions;
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                let equal = ds[i].same_masses(&ds[j]);
                table.push(vec![
                    cell.m.to_string(),
                    cell.measure.clone(),
                    ds[i].algorithm.clone(),
                    ds[j].algorithm.clone(),
                    equal.to_string(),
                ]);
                rows.push(json!({
                    "m": cell.m,
                    "measure": cell.measure,
                    "left": ds[i].algorithm,
                    "right": ds[j].algorithm,
                    "equal": equal,
                }));
            }
        }
    }
    (table, rows)
}

fn cells_json(cells: &[SweepCell], with_distributions: bool) -> Vec<Value> {
    cells
        .iter()
        .map(|c| {
            if with_distributions {
                io::sweep_cell(c)
            } else {
                json!({ "m": c.m, "measure": c.measure, "equal": c.equal() })
            }
        })
        .collect()
}

pub fn verify_nfl(ctx: &Context, opts: &VerifyOptions) -> CliResult<Report> {
    let (set_doc, set) = load_set_doc(opts.functions)?;
    let n = set.space().size();
    let family = resolve_family(opts.family, n, &ctx.seeds)?;
    let algorithms: Vec<&dyn SearchAlgorithm> = family.iter().map(|a| a as &dyn SearchAlgorithm).collect();
    let ms = resolve_lengths(opts.ms, n)?;
    let measures = opts
        .measures
        .iter()
        .map(|m| parse_measure(m))
        .collect::<CliResult<Vec<_>>>()?;
    let measure_refs: Vec<&dyn PerformanceMeasure> = measures.iter().map(|m| m.as_ref()).collect();

    let mut result = json!({
        "size": set.len(),
        "family": family.iter().map(|a| a.name()).collect::<Vec<_>>(),
        "m": ms,
        "measures": opts.measures,
    });
    let (cells, inconsistency) = match opts.probs {
        None => {
            let witness = set.closure_witness(&ctx.guards)?;
            let cells = sweep_uniform(&set, &algorithms, &ms, &measure_refs)?;
            let verdict = Verdict::from_cells(&cells);
            result["mode"] = json!("uniform");
            result["closed"] = json!(witness.is_none());
            result["witness"] = json!(witness.as_ref().map(io::closure_witness));
            result["verdict"] = io::verdict(&verdict);
            let inconsistency = match &witness {
                None if !verdict.equal => Some("closed set but performance differs".to_string()),
                None => None,
                Some(_) => {
                    let c = construct_counterexample(&set, &ctx.guards)?;
                    result["counterexample"] = io::counterexample(&c);
                    (c.left_mass == c.right_mass)
                        .then(|| "counterexample masses coincide".to_string())
                }
            };
            (cells, inconsistency)
        }
        Some(path) => {
            let name = path.display().to_string();
            let doc = ProbabilityDoc::parse(&read(path)?).map_err(CliError::at(&name))?;
            let dist = doc.to_distribution(&set_doc, &ctx.guards).map_err(CliError::at(&name))?;
            let violation = check_nonuniform_condition(&dist, &ctx.guards)?;
            let cells = sweep_weighted(&dist, &algorithms, &ms, &measure_refs)?;
            let verdict = Verdict::from_cells(&cells);
            result["mode"] = json!("weighted");
            result["condition_holds"] = json!(violation.is_none());
            result["violation"] = json!(violation.as_ref().map(io::condition_violation));
            result["verdict"] = io::verdict(&verdict);
            let inconsistency = match &violation {
                None if !verdict.equal => {
                    Some("weights constant on basis classes but performance differs".to_string())
                }
                None => None,
                Some(v) => {
                    let c = construct_nonuniform_counterexample(&dist, &ctx.guards)?;
                    result["counterexample"] = io::counterexample(&c);
                    (c.left_mass != v.p_f || c.right_mass != v.p_g || c.left_mass == c.right_mass)
                        .then(|| "counterexample masses do not match p(f) and p(g)".to_string())
                }
            };
            (cells, inconsistency)
        }
    };
    result["cells"] = json!(cells_json(&cells, opts.distributions));
    let (table, pairs) = pair_rows(&cells);
    result["pairs"] = json!(pairs);
    let report = Report::new(result, table);
    Ok(match inconsistency {
        Some(what) => report.falsified(what),
        None => report,
    })
}

pub fn count(ctx: &Context, x: u64, y: u64, exact: bool) -> CliResult<Report> {
    let report = count_report(x, y, &ctx.guards)?;
    if exact && report.all_subsets.is_none() {
        return Err(NflError::ExactOverflowGuard {
            exponent: nfl_core::combinatorics::count_functions(x, y).to_string(),
            limit: ctx.guards.max_exponent,
        }
        .into());
    }
    let mut table = Table::new(vec![
        "x",
        "y",
        "histogram_count",
        "cup_subsets",
        "all_subsets",
        "fraction_exact",
        "fraction_log10",
    ]);
    table.push(vec![
        x.to_string(),
        y.to_string(),
        report.histogram_count.to_string(),
        report.cup_subsets.to_string(),
        report.all_subsets.as_ref().map(ToString::to_string).unwrap_or_default(),
        report.fraction_exact.as_ref().map(rational::format).unwrap_or_default(),
        format!("{:.12}", report.fraction_log10),
    ]);
    Ok(Report::new(io::count_report(&report), table))
}

pub fn curve(x_min: u64, x_max: u64, ys: &[u64]) -> CliResult<(Report, Vec<u8>)> {
    if x_min == 0 || x_min > x_max {
        return Err(CliError::Input(format!("x range {x_min}..={x_max} is empty or starts at 0")));
    }
    if ys.is_empty() || ys.contains(&0) {
        return Err(CliError::Input("y values must be positive".into()));
    }
    let rows = fraction_curve(x_min..=x_max, ys);
    let mut csv = Vec::new();
    write_curve_csv(&rows, &mut csv)?;
    let result = json!({ "rows": rows.iter().map(io::curve_row).collect::<Vec<_>>() });
    Ok((Report::new(result, Table::default()), csv))
}

pub fn hitting_time(ctx: &Context, x: usize, n: usize, family: Option<&str>, times: bool) -> CliResult<Report> {
    if n == 0 || n > x {
        return Err(CliError::Input(format!("n = {n} outside 1..={x}")));
    }
    let family = resolve_family(family, x, &ctx.seeds)?;
    let mut table = Table::new(vec!["algorithm", "x", "n", "mean", "formula", "match"]);
    let mut rows = Vec::new();
    let mut all_match = true;
    for a in &family {
        let h = mean_first_hit(a, x, n, &ctx.guards)?;
        all_match &= h.matches();
        table.push(vec![
            h.algorithm.clone(),
            x.to_string(),
            n.to_string(),
            rational::format(&h.mean),
            rational::format(&h.formula),
            h.matches().to_string(),
        ]);
        rows.push(io::hitting_report(&h, times));
    }
    let result = json!({ "x": x, "n": n, "all_match": all_match, "algorithms": rows });
    let report = Report::new(result, table);
    Ok(if all_match {
        report
    } else {
        report.falsified("an ensemble mean differs from (x+1)/(n+1)")
    })
}

pub struct AnalyzeOptions<'a> {
    pub functions: &'a Path,
    pub neighborhood: &'a Path,
    pub metric: &'a str,
    pub max_minima: Option<usize>,
    pub max_steepness: Option<&'a str>,
}

fn parse_metric(name: &str) -> CliResult<Box<dyn CostMetric>> {
    match name {
        "abs" => Ok(Box::new(AbsoluteDifference)),
        "discrete" => Ok(Box::new(DiscreteMetric)),
        other => Err(CliError::Input(format!("unknown metric `{other}` (expected abs or discrete)"))),
    }
}

pub fn analyze(ctx: &Context, opts: &AnalyzeOptions) -> CliResult<Report> {
    let set = load_set(opts.functions)?;
    let relation = load_relation(opts.neighborhood, set.space().size())?;
    let metric = parse_metric(opts.metric)?;
    let mut table = Table::new(vec!["function", "s_max", "d_max", "local_minima", "l_max"]);
    let mut functions = Vec::new();
    for f in set.iter() {
        let s = structure_report(f, &relation, set.costs(), metric.as_ref(), &ctx.guards)?;
        table.push(vec![
            f.to_string(),
            s.s_max.as_ref().map(rational::format).unwrap_or_default(),
            rational::format(&s.d_max),
            s.local_minima.to_string(),
            s.l_max.to_string(),
        ]);
        functions.push(io::structure_report(f, &s));
    }

    let mut constraints = Vec::new();
    if let Some(k) = opts.max_minima {
        constraints.push(Constraint::MinimaAtMost(k));
    }
    if let Some(text) = opts.max_steepness {
        let bound: Rational = rational::parse(text)?;
        constraints.push(Constraint::SteepnessAtMost(bound));
    }
    let mut classes = Vec::new();
    let mut inconsistency = None;
    for constraint in &constraints {
        let (kind, bound) = match constraint {
            Constraint::MinimaAtMost(k) => ("max-minima", k.to_string()),
            Constraint::SteepnessAtMost(b) => ("max-steepness", rational::format(b)),
        };
        let entry = match constrained_class(set.space(), set.costs(), &relation, metric.as_ref(), constraint, &ctx.guards) {
            Ok(c) => {
                if c.witness.is_none() {
                    inconsistency = Some(format!("binding {kind} class is closed under permutation"));
                }
                json!({
                    "constraint": kind,
                    "bound": bound,
                    "status": "certified",
                    "class_size": c.class.len(),
                    "max_attained": io::r(&c.max_attained),
                    "max_possible": io::r(&c.max_possible),
                    "closed": c.witness.is_none(),
                    "witness": c.witness.as_ref().map(io::closure_witness),
                })
            }
            Err(NflError::BoundNotBinding(why)) => json!({
                "constraint": kind,
                "bound": bound,
                "status": "not-binding",
                "detail": why,
            }),
            Err(NflError::EmptyClass) => json!({
                "constraint": kind,
                "bound": bound,
                "status": "empty",
            }),
            Err(e) => return Err(e.into()),
        };
        classes.push(entry);
    }
    let result = json!({
        "neighborhood": relation.name(),
        "edges": relation.edge_count(),
        "metric": opts.metric,
        "functions": functions,
        "classes": classes,
    });
    let report = Report::new(result, table);
    Ok(match inconsistency {
        Some(what) => report.falsified(what),
        None => report,
    })
}
