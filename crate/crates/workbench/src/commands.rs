//! Command implementations. Each returns a report, an exit code and a
//! short human-readable summary.

use std::path::Path;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use ramsey_core::constructions::{
    build_witness, lower_bound_value, verify_witness, ConstructionSpec, Evidence, Family, Verdict,
};
use ramsey_core::cycles::{check_bondy, check_dirac, circumference_with, has_cycle_of_length, BondyVerdict};
use ramsey_core::lemmas::{
    check_component_lemma, check_figaj_luczak, check_star_matching_small, claims_audit, dirac_chain_check,
    random_component_instance, random_figaj_luczak_instance, CheckStatus, ClaimsRegime, PartialTwoColoring,
    StarMatchingOutcome,
};
use ramsey_core::matching::{connected_matching_number, find_fan, max_fan_blades};
use ramsey_core::search::{
    ramsey_exact_with, random_coloring_audit, AuditMode, SearchProblem, SearchReport, SearchResult,
};
use ramsey_core::{parse_rational, RatioParam, SimpleGraph, TwoColoring, VertexSet};

use crate::checkpoint::Checkpoint;
use crate::cli::{
    Cli, Command, ConstructArgs, DetectArgs, DetectKind, HarnessKind, LemmaCommand, RegimeArg, SearchCommand,
    SearchTuning, TableArgs, VerifyArgs,
};
use crate::driver::run_arrows;
use crate::error::{exit, WorkbenchError};
use crate::formats::{read_coloring, read_graph, write_coloring, write_file};
use crate::report::{JsonReport, Witness};

pub struct Outcome {
    pub report: JsonReport,
    pub exit_code: i32,
    pub summary: String,
}

type CmdResult = Result<Outcome, WorkbenchError>;

fn outcome(report: JsonReport, exit_code: i32, summary: String) -> CmdResult {
    Ok(Outcome { report, exit_code, summary })
}

fn params(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        _ => Map::new(),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report payload serializes")
}

fn ratio(text: &str) -> Result<RatioParam, WorkbenchError> {
    Ok(RatioParam::try_from(parse_rational(text)?)?)
}

fn fresh_seed() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos() as u64).unwrap_or(0)
}

/// Runs one parsed command line; `--stable-output` and timing are applied here.
pub fn execute(cli: &Cli) -> CmdResult {
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Detect(a) => detect(a),
        Command::Search(s) => search(s),
        Command::Lemma(l) => lemma(l),
        Command::Table(t) => table(t),
    }?;
    out.report.timing.wall_seconds = (!cli.stable_output).then(|| start.elapsed().as_secs_f64());
    Ok(out)
}

fn construct(args: &ConstructArgs) -> CmdResult {
    let family: Family = args.family.parse()?;
    let a = args.a.as_deref().map(ratio).transpose()?;
    let spec = ConstructionSpec::new(family, if family == Family::W5 { None } else { a }, args.n);
    let order = spec.order()?;
    let m = spec.cycle_length()? as usize;
    let c = build_witness(&spec)?;
    let cert = verify_witness(&c, m, args.n as usize)?;
    if cert.verdict != Verdict::Avoids {
        return Err(
            ramsey_core::Error::Inconsistent(format!("{family} construction does not avoid its targets")).into()
        );
    }
    let lower_bound = match spec.a {
        Some(a) => lower_bound_value(a, args.n),
        None => order as i64 + 1,
    };
    let inequality = format!("R(C_{m}, F_{}) >= {lower_bound}", args.n);
    write_file(&args.out, &write_coloring(&c))?;
    let mut report = JsonReport::new(
        "construct",
        params(json!({
            "family": family.to_string(),
            "a": spec.a.map(|a| a.to_string()),
            "n": args.n,
            "out": args.out.display().to_string(),
        })),
        json!({
            "family": family.to_string(),
            "order": order,
            "cycle": m,
            "fan": args.n,
            "red_edges": c.red().edge_count(),
            "verdict": cert.verdict,
            "lower_bound_value": lower_bound,
            "inequality": inequality,
        }),
    );
    report.witnesses.push(Witness::coloring("good-coloring", &c));
    let summary = format!("{family}: {order} vertices written to {}; {inequality}", args.out.display());
    outcome(report, exit::OK, summary)
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let c = read_coloring(&args.coloring)?;
    let cert = verify_witness(&c, args.cycle, args.fan)?;
    let mut report = JsonReport::new(
        "verify",
        params(json!({
            "coloring": args.coloring.display().to_string(),
            "cycle": args.cycle,
            "fan": args.fan,
        })),
        to_value(&cert),
    );
    let (code, summary) = match &cert.evidence {
        Evidence::RedCycle(cycle) => {
            report.witnesses.push(Witness::coloring("input-coloring", &c));
            report.witnesses.push(Witness::cycle("red-cycle", cycle));
            (exit::COUNTEREXAMPLE, format!("red C_{} found: {:?}", args.cycle, cycle.vertices))
        }
        Evidence::BlueFan(fan) => {
            report.witnesses.push(Witness::coloring("input-coloring", &c));
            report.witnesses.push(Witness::fan("blue-fan", fan));
            (exit::COUNTEREXAMPLE, format!("blue F_{} found: center {}, blades {:?}", args.fan, fan.center, fan.blades))
        }
        Evidence::Structure { .. } => {
            report.witnesses.push(Witness::coloring("good-coloring", &c));
            (exit::OK, format!("avoids: no red C_{} and no blue F_{} on {} vertices", args.cycle, args.fan, c.n()))
        }
    };
    outcome(report, code, summary)
}

fn detect(args: &DetectArgs) -> CmdResult {
    let g = read_graph(&args.graph)?;
    let parameters = params(json!({
        "graph": args.graph.display().to_string(),
        "length": args.length,
        "blades": args.blades,
        "heuristic": args.heuristic,
    }));
    let input = Witness::graph("graph", &g);
    match args.kind {
        DetectKind::Cycle => {
            let circ = circumference_with(&g, args.heuristic)?;
            let mut report = JsonReport::new("detect-cycle", parameters, Value::Null);
            report.witnesses.push(input);
            let mut summary =
                format!("circumference {}{}", circ.length, if circ.exact { "" } else { " (heuristic lower bound)" });
            let found = match args.length {
                Some(k) => {
                    let found = has_cycle_of_length(&g, k)?;
                    summary = match &found {
                        Some(c) => format!("C_{k} found: {:?}; {summary}", c.vertices),
                        None => format!("no C_{k}; {summary}"),
                    };
                    if let Some(c) = &found {
                        report.witnesses.push(Witness::cycle("cycle", c));
                    }
                    Some(found.is_some())
                }
                None => {
                    if let Some(w) = &circ.witness {
                        report.witnesses.push(Witness::cycle("cycle", w));
                    }
                    None
                }
            };
            report.result = json!({
                "circumference": circ.length,
                "exact": circ.exact,
                "length": args.length,
                "found": found,
            });
            outcome(report, exit::OK, summary)
        }
        DetectKind::Fan => {
            let mut best = (0, None);
            for v in 0..g.n() {
                let (k, fan) = max_fan_blades(&g, v)?;
                if k > best.0 || best.1.is_none() {
                    best = (k, Some(fan));
                }
            }
            let mut report = JsonReport::new("detect-fan", parameters, Value::Null);
            report.witnesses.push(input);
            let (summary, found) = match args.blades {
                Some(b) => {
                    let fan = find_fan(&g, b)?;
                    let s = match &fan {
                        Some(f) => format!("F_{b} found: center {}, blades {:?}", f.center, f.blades),
                        None => format!("no F_{b}; max blades {}", best.0),
                    };
                    if let Some(f) = &fan {
                        report.witnesses.push(Witness::fan("fan", f));
                    }
                    (s, Some(fan.is_some()))
                }
                None => {
                    if let Some(f) = &best.1 {
                        report.witnesses.push(Witness::fan("fan", f));
                    }
                    (format!("max blades {}", best.0), None)
                }
            };
            report.result = json!({ "max_blades": best.0, "blades": args.blades, "found": found });
            outcome(report, exit::OK, summary)
        }
        DetectKind::Cmatching => {
            let cm = connected_matching_number(&g);
            let mut report = JsonReport::new(
                "detect-cmatching",
                parameters,
                json!({ "connected_matching_number": cm.size, "component": cm.component }),
            );
            report.witnesses.push(input);
            report.witnesses.push(Witness::edges("matching", &cm.matching.edges));
            outcome(report, exit::OK, format!("connected matching number {}", cm.size))
        }
    }
}

fn deadline(budget: Option<f64>) -> Result<Option<Instant>, WorkbenchError> {
    match budget {
        None => Ok(None),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Some(Instant::now() + Duration::from_secs_f64(s))),
        Some(s) => Err(WorkbenchError::Usage(format!("invalid budget {s}"))),
    }
}

fn result_name(r: SearchResult) -> Value {
    to_value(&r)
}

fn step_json(r: &SearchReport) -> Value {
    json!({
        "n": r.problem.n,
        "result": result_name(r.result),
        "nodes_expanded": r.nodes_expanded,
        "tasks_total": r.tasks_total,
        "witness_task": r.witness_task,
    })
}

fn tuning_json(t: &SearchTuning) -> Value {
    json!({
        "budget_seconds": t.budget,
        "symmetry": !t.no_symmetry,
        "split_depth": t.split_depth,
        "threads": t.workers.threads,
        "resume": t.resume.as_ref().map(|p| p.display().to_string()),
    })
}

fn merge(mut a: Value, b: Value) -> Map<String, Value> {
    if let (Some(x), Value::Object(y)) = (a.as_object_mut(), b) {
        x.extend(y);
    }
    params(a)
}

fn search(cmd: &SearchCommand) -> CmdResult {
    match cmd {
        SearchCommand::Arrows { n, cycle, fan, tuning } => {
            let problem = SearchProblem::new(*n, *cycle, *fan)?
                .with_symmetry(!tuning.no_symmetry)
                .with_split_depth(tuning.split_depth);
            let resume = tuning.resume.as_deref().map(Checkpoint::load).transpose()?;
            let run = run_arrows(problem, tuning.workers.threads, deadline(tuning.budget)?, resume.as_ref())?;
            let r = &run.report;
            let checkpoint_path = match &run.checkpoint {
                Some(cp) => {
                    cp.save(&tuning.checkpoint)?;
                    Some(tuning.checkpoint.display().to_string())
                }
                None => None,
            };
            let mut report = JsonReport::new(
                "search-arrows",
                merge(json!({ "n": n, "cycle": cycle, "fan": fan }), tuning_json(tuning)),
                json!({
                    "question": "arrows",
                    "result": result_name(r.result),
                    "arrows": match r.result {
                        SearchResult::Arrows => Some(true),
                        SearchResult::GoodColoringFound => Some(false),
                        _ => None,
                    },
                    "nodes_expanded": r.nodes_expanded,
                    "tasks_total": r.tasks_total,
                    "witness_task": r.witness_task,
                    "checkpoint": checkpoint_path,
                }),
            );
            report.provenance.thread_count = tuning.workers.threads;
            if let Some(w) = &r.witness {
                report.witnesses.push(Witness::coloring("good-coloring", w));
            }
            let (code, summary) = match r.result {
                SearchResult::Arrows => (exit::OK, format!("K_{n} arrows (C_{cycle}, F_{fan})")),
                SearchResult::GoodColoringFound => {
                    (exit::OK, format!("good coloring of K_{n} found: K_{n} does not arrow (C_{cycle}, F_{fan})"))
                }
                _ => (exit::BUDGET, format!("budget exhausted; checkpoint written to {}", tuning.checkpoint.display())),
            };
            outcome(report, code, summary)
        }
        SearchCommand::Exact { cycle, fan, max_n, tuning } => {
            let template = SearchProblem::new(1, *cycle, *fan)?
                .with_symmetry(!tuning.no_symmetry)
                .with_split_depth(tuning.split_depth);
            let resume = tuning.resume.as_deref().map(Checkpoint::load).transpose()?;
            let deadline = deadline(tuning.budget)?;
            let mut pending: Option<Checkpoint> = None;
            let exact = ramsey_exact_with(*cycle, *fan, *max_n, template, |p| {
                let cp = resume.as_ref().filter(|cp| cp.problem == p);
                let run = run_arrows(p, tuning.workers.threads, deadline, cp).map_err(|e| match e {
                    WorkbenchError::Core(c) => c,
                    other => ramsey_core::Error::InvalidParameter(other.to_string()),
                })?;
                pending = run.checkpoint;
                Ok(run.report)
            })?;
            let checkpoint_path = match &pending {
                Some(cp) => {
                    cp.save(&tuning.checkpoint)?;
                    Some(tuning.checkpoint.display().to_string())
                }
                None => None,
            };
            let mut report = JsonReport::new(
                "search-exact",
                merge(json!({ "cycle": cycle, "fan": fan, "max_n": max_n }), tuning_json(tuning)),
                json!({
                    "question": "exact",
                    "result": result_name(exact.result),
                    "value": exact.value(),
                    "nodes_expanded": exact.nodes_expanded(),
                    "steps": exact.steps.iter().map(step_json).collect::<Vec<_>>(),
                    "checkpoint": checkpoint_path,
                }),
            );
            report.provenance.thread_count = tuning.workers.threads;
            if let Some(w) = &exact.witness {
                report.witnesses.push(Witness::coloring("good-coloring", w));
            }
            let (code, summary) = match exact.result {
                SearchResult::ExactValue(v) => (exit::OK, format!("R(C_{cycle}, F_{fan}) = {v}")),
                SearchResult::ExceedsMax => (exit::BUDGET, format!("R(C_{cycle}, F_{fan}) > {max_n}")),
                _ => (exit::BUDGET, format!("budget exhausted; checkpoint written to {}", tuning.checkpoint.display())),
            };
            outcome(report, code, summary)
        }
        SearchCommand::Audit { n, cycle, fan, samples, exhaustive, seed } => {
            let mode = match (samples, exhaustive) {
                (_, true) => AuditMode::Exhaustive,
                (Some(s), false) => AuditMode::Random { samples: *s },
                (None, false) => return Err(WorkbenchError::Usage("give --samples or --exhaustive".into())),
            };
            let seed = seed.unwrap_or_else(fresh_seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_coloring_audit(*n, *cycle, *fan, mode, &mut rng)?;
            let mut report = JsonReport::new(
                "search-audit",
                params(json!({
                    "n": n, "cycle": cycle, "fan": fan,
                    "samples": samples, "exhaustive": exhaustive, "seed": seed,
                })),
                json!({
                    "samples": a.samples,
                    "red_cycle_hits": a.red_cycle_hits,
                    "blue_fan_hits": a.blue_fan_hits,
                    "good_count": a.good_count,
                    "fraction": a.fraction(),
                    "example": a.example,
                }),
            );
            report.provenance.seed = Some(seed);
            for c in &a.good_colorings {
                report.witnesses.push(Witness::coloring("good-coloring", c));
            }
            let summary = format!(
                "{} of {} colorings contain a red C_{cycle} or a blue F_{fan} (fraction {})",
                a.samples - a.good_count,
                a.samples,
                a.fraction()
            );
            outcome(report, exit::OK, summary)
        }
    }
}

fn status_exit(status: &CheckStatus) -> i32 {
    if status.is_violation() {
        exit::INCONSISTENT
    } else {
        exit::OK
    }
}

fn status_text(status: &CheckStatus) -> String {
    match status {
        CheckStatus::Holds => "holds".into(),
        CheckStatus::HypothesisNotMet(why) => format!("hypothesis not met ({why})"),
        CheckStatus::Violated => "VIOLATED".into(),
    }
}

fn parse_vertex_list(text: &str) -> Result<VertexSet, WorkbenchError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| WorkbenchError::Parse(format!("bad vertex {s:?}"))))
        .collect()
}

fn lemma(cmd: &LemmaCommand) -> CmdResult {
    match cmd {
        LemmaCommand::Component { coloring, host, red } => {
            let (host_graph, red_graph, parameters) = match (coloring, host, red) {
                (Some(path), _, _) => {
                    let c = read_coloring(path)?;
                    (SimpleGraph::complete(c.n()), c.into_red(), json!({ "coloring": path.display().to_string() }))
                }
                (None, Some(h), Some(r)) => (
                    read_graph(h)?,
                    read_graph(r)?,
                    json!({ "host": h.display().to_string(), "red": r.display().to_string() }),
                ),
                _ => return Err(WorkbenchError::Usage("give --coloring, or --host with --red".into())),
            };
            let r = check_component_lemma(&host_graph, &red_graph)?;
            let summary = format!(
                "{}: {:?} component of order {} vs minimum degree {}",
                status_text(&r.status),
                r.color,
                r.component.len(),
                r.min_degree
            );
            let mut report = JsonReport::new("lemma-component", params(parameters), to_value(&r));
            report.witnesses.push(Witness::graph("host", &host_graph));
            outcome(report, status_exit(&r.status), summary)
        }
        LemmaCommand::Bimatch { graph, part1, eps } => {
            let g = read_graph(graph)?;
            let eps_value = parse_rational(eps)?;
            let (v1, v2) = match part1 {
                Some(list) => {
                    let v1 = parse_vertex_list(list)?;
                    v1.check_range(g.n())?;
                    let v2: VertexSet = (0..g.n()).filter(|&v| !v1.contains(v)).collect();
                    (v1, v2)
                }
                None => {
                    let (x, y) =
                        g.bipartition().ok_or_else(|| WorkbenchError::Usage("graph is not bipartite".into()))?;
                    if x.len() >= y.len() {
                        (x, y)
                    } else {
                        (y, x)
                    }
                }
            };
            let r = check_figaj_luczak(&g, &v1, &v2, eps_value)?;
            let summary = format!(
                "{}: component of order {}, matching of size {}",
                status_text(&r.status),
                r.component.len(),
                r.matching.size()
            );
            let mut report = JsonReport::new(
                "lemma-bimatch",
                params(json!({ "graph": graph.display().to_string(), "part1": v1, "eps": eps_value.to_string() })),
                to_value(&r),
            );
            report.witnesses.push(Witness::graph("graph", &g));
            report.witnesses.push(Witness::edges("matching", &r.matching.edges));
            outcome(report, status_exit(&r.status), summary)
        }
        LemmaCommand::Starmatch { k, n1, n2, budget } => {
            let deadline = deadline(*budget)?;
            let stop = || deadline.is_some_and(|d| Instant::now() >= d);
            let r = check_star_matching_small(*k, *n1, *n2, &stop)?;
            let code = match r.outcome {
                StarMatchingOutcome::Confirmed => exit::OK,
                StarMatchingOutcome::Refuted => exit::INCONSISTENT,
                StarMatchingOutcome::BudgetExhausted => exit::BUDGET,
            };
            let summary = format!("R(S_{k}, {n1}K_2, {n2}K_2) = {}: {:?}", r.formula_value, r.outcome);
            let report = JsonReport::new(
                "lemma-starmatch",
                params(json!({ "k": k, "n1": n1, "n2": n2, "budget_seconds": budget })),
                to_value(&r),
            );
            outcome(report, code, summary)
        }
        LemmaCommand::Dirac { graph } => {
            let g = read_graph(graph)?;
            let r = check_dirac(&g)?;
            let summary = format!(
                "{}: bound {}, circumference {}",
                status_text(&r.status),
                r.bound,
                r.circumference.map_or("-".into(), |c| c.to_string())
            );
            let mut report =
                JsonReport::new("lemma-dirac", params(json!({ "graph": graph.display().to_string() })), to_value(&r));
            report.witnesses.push(Witness::graph("graph", &g));
            if let Some(w) = &r.witness {
                report.witnesses.push(Witness::cycle("cycle", w));
            }
            outcome(report, status_exit(&r.status), summary)
        }
        LemmaCommand::Bondy { graph } => {
            let g = read_graph(graph)?;
            let r = check_bondy(&g)?;
            let (code, summary) = match &r.verdict {
                BondyVerdict::Pancyclic => (exit::OK, "pancyclic".to_string()),
                BondyVerdict::ExceptionKrr { r } => (exit::OK, format!("exception K_{{{r},{r}}}")),
                BondyVerdict::HypothesisNotMet => {
                    (exit::OK, format!("hypothesis not met: minimum degree {} < n/2 = {}/2", r.min_degree, r.n))
                }
                BondyVerdict::Violated { missing } => {
                    (exit::INCONSISTENT, format!("VIOLATED: missing lengths {missing:?}"))
                }
            };
            let mut report =
                JsonReport::new("lemma-bondy", params(json!({ "graph": graph.display().to_string() })), to_value(&r));
            report.witnesses.push(Witness::graph("graph", &g));
            outcome(report, code, summary)
        }
        LemmaCommand::Chain { graph } => {
            let g = read_graph(graph)?;
            let r = dirac_chain_check(&g)?;
            let summary = format!(
                "{}: circumference {}, connected matching {}",
                status_text(&r.status),
                r.circumference,
                r.connected_matching
            );
            let mut report =
                JsonReport::new("lemma-chain", params(json!({ "graph": graph.display().to_string() })), to_value(&r));
            report.witnesses.push(Witness::graph("graph", &g));
            outcome(report, status_exit(&r.status), summary)
        }
        LemmaCommand::Claims { coloring, red, blue, a, beta, regime, defect_cap } => {
            let h = match (coloring, red, blue) {
                (Some(path), _, _) => PartialTwoColoring::from_coloring(&read_coloring(path)?),
                (None, Some(r), Some(b)) => PartialTwoColoring::from_graphs(read_graph(r)?, read_graph(b)?)?,
                _ => return Err(WorkbenchError::Usage("give --coloring, or --red with --blue".into())),
            };
            let a_value = ratio(a)?;
            let beta_value = parse_rational(beta)?;
            let regime_value = match regime {
                RegimeArg::PartI => ClaimsRegime::PartI,
                RegimeArg::PartIi => ClaimsRegime::PartII,
            };
            let cap = defect_cap.unwrap_or(h.n());
            let audit = claims_audit(&h, a_value, beta_value, regime_value, cap)?;
            let failing: Vec<&str> = audit.claims.iter().filter(|c| !c.satisfied).map(|c| c.claim.as_str()).collect();
            let summary = format!(
                "t = {}: {} of {} claim thresholds satisfied{}",
                audit.t,
                audit.claims.len() - failing.len(),
                audit.claims.len(),
                if failing.is_empty() { String::new() } else { format!(" (failing: {})", failing.join(", ")) }
            );
            let mut report = JsonReport::new(
                "lemma-claims",
                params(json!({
                    "coloring": coloring.as_ref().map(|p| p.display().to_string()),
                    "red": red.as_ref().map(|p| p.display().to_string()),
                    "blue": blue.as_ref().map(|p| p.display().to_string()),
                    "a": a_value.to_string(),
                    "beta": beta_value.to_string(),
                    "regime": regime_value,
                    "defect_cap": cap,
                })),
                to_value(&audit),
            );
            report.witnesses.push(Witness::graph("red", h.red()));
            report.witnesses.push(Witness::graph("blue", h.blue()));
            outcome(report, exit::OK, summary)
        }
        LemmaCommand::Harness { kind, instances, seed, max_n, artifacts, workers } => {
            let seed = seed.unwrap_or_else(fresh_seed);
            let h = run_harness(*kind, *instances, seed, *max_n, workers.threads)?;
            if let Some(dir) = artifacts {
                save_artifacts(dir, &h)?;
            }
            let violations = h.violations.len();
            let summary = format!(
                "{:?}: {} instances, {} met the hypothesis, {} violations",
                kind, h.instances, h.hypothesis_met, violations
            );
            let mut report = JsonReport::new(
                "lemma-harness",
                params(json!({
                    "kind": format!("{kind:?}").to_lowercase(),
                    "instances": instances,
                    "seed": seed,
                    "max_n": max_n,
                    "threads": workers.threads,
                })),
                json!({
                    "instances": h.instances,
                    "hypothesis_met": h.hypothesis_met,
                    "violations": h.violations.iter().map(|v| v.index).collect::<Vec<_>>(),
                }),
            );
            report.provenance.seed = Some(seed);
            report.provenance.thread_count = workers.threads;
            for v in &h.violations {
                report.witnesses.push(Witness::graph("violation", &v.graph));
            }
            outcome(report, if violations == 0 { exit::OK } else { exit::INCONSISTENT }, summary)
        }
    }
}

/// Result of a randomized lemma harness.
#[derive(Clone, Debug, PartialEq)]
pub struct HarnessReport {
    pub instances: u64,
    pub hypothesis_met: u64,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub index: u64,
    pub graph: SimpleGraph,
    /// Red subgraph for the component lemma.
    pub red: Option<SimpleGraph>,
}

/// Instance index, whether it met the hypothesis, and any violation.
type InstanceResult = (u64, bool, Option<Violation>);

/// A random graph on `3..=max_n` vertices with edge density drawn from `[lo, 1]`.
fn random_dense_graph(rng: &mut ChaCha8Rng, max_n: usize, lo: f64) -> SimpleGraph {
    let n = rng.gen_range(3..=max_n.max(3));
    let p = rng.gen_range(lo..=1.0);
    let mut g = SimpleGraph::new(n);
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// One instance; returns (hypothesis met, violation).
fn harness_instance(
    kind: HarnessKind,
    index: u64,
    seed: u64,
    max_n: usize,
) -> Result<(bool, Option<Violation>), WorkbenchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index));
    let violation = |graph: SimpleGraph, red: Option<SimpleGraph>| Violation { index, graph, red };
    Ok(match kind {
        HarnessKind::Component => {
            let (host, red) = random_component_instance(&mut rng, max_n);
            let r = check_component_lemma(&host, &red)?;
            let met = !matches!(r.status, CheckStatus::HypothesisNotMet(_));
            (met, r.status.is_violation().then(|| violation(host, Some(red))))
        }
        HarnessKind::FigajLuczak => {
            let (g, v1, v2, eps) = random_figaj_luczak_instance(&mut rng, max_n);
            let r = check_figaj_luczak(&g, &v1, &v2, eps)?;
            let met = !matches!(r.status, CheckStatus::HypothesisNotMet(_));
            (met, r.status.is_violation().then(|| violation(g, None)))
        }
        HarnessKind::Dirac => {
            let g = random_dense_graph(&mut rng, max_n, 0.3);
            let r = check_dirac(&g)?;
            let met = !matches!(r.status, CheckStatus::HypothesisNotMet(_));
            (met, r.status.is_violation().then(|| violation(g, None)))
        }
        HarnessKind::Bondy => {
            let g = random_dense_graph(&mut rng, max_n, 0.5);
            let r = check_bondy(&g)?;
            let met = !matches!(r.verdict, BondyVerdict::HypothesisNotMet);
            (met, matches!(r.verdict, BondyVerdict::Violated { .. }).then(|| violation(g, None)))
        }
        HarnessKind::Chain => {
            let g = random_dense_graph(&mut rng, max_n, 0.1);
            let r = dirac_chain_check(&g)?;
            (true, r.status.is_violation().then(|| violation(g, None)))
        }
    })
}

/// Instance `i` uses a ChaCha8 stream seeded with `seed + i`, so the result
/// does not depend on the number of threads.
pub fn run_harness(
    kind: HarnessKind,
    instances: u64,
    seed: u64,
    max_n: usize,
    threads: usize,
) -> Result<HarnessReport, WorkbenchError> {
    let threads = threads.max(1) as u64;
    let results: Vec<Result<Vec<InstanceResult>, WorkbenchError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                scope.spawn(move || {
                    (w..instances)
                        .step_by(threads as usize)
                        .map(|i| harness_instance(kind, i, seed, max_n).map(|(met, v)| (i, met, v)))
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("harness worker panicked")).collect()
    });
    let mut all = Vec::new();
    for r in results {
        all.extend(r?);
    }
    all.sort_by_key(|x| x.0);
    Ok(HarnessReport {
        instances,
        hypothesis_met: all.iter().filter(|x| x.1).count() as u64,
        violations: all.into_iter().filter_map(|x| x.2).collect(),
    })
}

fn save_artifacts(dir: &Path, h: &HarnessReport) -> Result<(), WorkbenchError> {
    if h.violations.is_empty() {
        return Ok(());
    }
    std::fs::create_dir_all(dir).map_err(|e| WorkbenchError::Io(format!("{}: {e}", dir.display())))?;
    for v in &h.violations {
        let g6 = ramsey_core::graph6::write_graph6(&v.graph);
        write_file(&dir.join(format!("violation-{}.g6", v.index)), &(g6 + "\n"))?;
        if let Some(red) = &v.red {
            let c = TwoColoring::from_red(red.clone());
            write_file(&dir.join(format!("violation-{}.coloring", v.index)), &write_coloring(&c))?;
        }
    }
    Ok(())
}

fn table(args: &TableArgs) -> CmdResult {
    let list: Vec<RatioParam> =
        args.a_list.split(',').filter(|s| !s.trim().is_empty()).map(ratio).collect::<Result<_, _>>()?;
    let rows = ramsey_core::constructions::asymptotic_table(&list, args.n);
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "a": r.a.to_string(),
                "family": Family::for_ratio(r.a).to_string(),
                "lower_bound": r.lower_bound,
                "main_term_n": r.main_term_n.map(|x| x.to_string()),
                "gap": r.gap.map(|x| x.to_string()),
            })
        })
        .collect();
    let mut text = format!("{:>10} {:>6} {:>16} {:>16} {:>12}\n", "a", "family", "lower_bound", "main_term*n", "gap");
    for r in &rows {
        let opt = |x: Option<ramsey_core::Rational>| x.map_or("-".to_string(), |x| x.to_string());
        text.push_str(&format!(
            "{:>10} {:>6} {:>16} {:>16} {:>12}\n",
            r.a.to_string(),
            Family::for_ratio(r.a).to_string(),
            r.lower_bound,
            opt(r.main_term_n),
            opt(r.gap)
        ));
    }
    let report = JsonReport::new(
        "table",
        params(json!({ "a_list": list.iter().map(|a| a.to_string()).collect::<Vec<_>>(), "n": args.n })),
        json!({ "rows": json_rows }),
    );
    outcome(report, exit::OK, text.trim_end().to_string())
}
