//! Command-line front end. Every subcommand maps onto one library
//! operation; this crate only parses files and flags and renders reports.
//!
//! Exit codes: 0 = success / found / PASS, 1 = well-formed negative outcome
//! (not found, FAIL, not Hamiltonian), 2 = input or guard error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indsys::auxiliary::{auxiliary_triple, check_structural, CheckDetail, StructuralCheck};
use indsys::family::FamilyRegistry;
use indsys::model::{objective, Solution};
use indsys::oracle::CallStats;
use indsys::problems::{
    alternating_transform_search, hamiltonian_partition_bruteforce, min_chain_partition,
    ChainPartition, PartitionPart,
};
use indsys::solver::{
    enumerate_support, extremal_support, find_support_with_value, frontier_run, greedy_construct,
    lookahead_profile, nontriviality_profile, LookaheadClass, ProfileMode, Sense,
};

use indsys_cli::instance_file::{load_system, parse_file, Parsed};

#[derive(Parser)]
#[command(
    name = "indsys",
    version,
    about = "Weighted independence systems: auxiliary sets, support solutions, oracle profiling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SenseArg {
    Max,
    Min,
}

#[derive(Subcommand)]
enum Command {
    /// Auxiliary sets W/S/R, objective and support status of one solution
    Analyze {
        file: PathBuf,
        /// Comma-separated element ids, e.g. 0,2 (empty string for ∅)
        #[arg(long)]
        solution: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all support solutions
    Enumerate {
        file: PathBuf,
        /// Stop after this many supports (result flagged truncated)
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Grow one support solution by residual-driven extension
    Greedy {
        file: PathBuf,
        #[arg(long, value_enum)]
        sense: SenseArg,
        #[arg(long)]
        json: bool,
    },
    /// Find a support solution with the given objective value
    Target {
        file: PathBuf,
        #[arg(long)]
        value: u64,
        #[arg(long)]
        json: bool,
    },
    /// Breadth-first expansion of all feasible solutions, layer by layer
    Frontier {
        file: PathBuf,
        /// Report layer widths only, without the support list
        #[arg(long = "stats-only")]
        stats_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Support-count growth table for a generator family
    Profile {
        /// power | coloring-path | coloring-cycle | kn-matching | random-antichain
        #[arg(long)]
        family: String,
        /// Inclusive size range, e.g. 3..6 (or a single size)
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Minimum chain partition of an acyclic digraph
    Mcp {
        file: PathBuf,
        /// Search maximum matchings for a partition whose consecutive
        /// pairs are all original arcs
        #[arg(long = "original-arcs-only")]
        original_arcs_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Hamiltonicity via the minimum cycles-and-edges partition
    Hamiltonian {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Structural checks 1-3 (adjoint monotonicity, residual extension,
    /// support characterization)
    Check {
        file: PathBuf,
        /// Comma-separated list drawn from 1,2,3
        #[arg(long)]
        theorems: String,
        #[arg(long)]
        json: bool,
    },
    /// Extremal support solution (exhaustive over the support set)
    Extremal {
        file: PathBuf,
        #[arg(long, value_enum)]
        sense: SenseArg,
        #[arg(long)]
        json: bool,
    },
    /// Measure the extension-query budget of adjoint-set computation
    Lookahead {
        file: PathBuf,
        /// Profile this many sampled feasible solutions instead of all
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// What a command hands back to the shared renderer.
struct Outcome {
    label: String,
    payload: Value,
    human: Vec<String>,
    stats: Option<CallStats>,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (name, json_mode) = describe(&cli.command);
    match run(cli.command) {
        Ok(outcome) => {
            if json_mode {
                let envelope = json!({
                    "command": name,
                    "label": outcome.label,
                    "result": outcome.payload,
                    "stats": outcome.stats.map(|s| json!({
                        "full_membership_calls": s.full_membership_calls,
                        "extension_predicate_calls": s.extension_predicate_calls,
                    })),
                    "exit_status": outcome.exit,
                });
                println!("{envelope}");
            } else {
                for line in &outcome.human {
                    println!("{line}");
                }
                if let Some(stats) = outcome.stats {
                    println!(
                        "oracle calls: {} membership, {} extension",
                        stats.full_membership_calls, stats.extension_predicate_calls
                    );
                }
                println!("wall time: {:.3?}", started.elapsed());
            }
            ExitCode::from(outcome.exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn describe(command: &Command) -> (&'static str, bool) {
    match command {
        Command::Analyze { json, .. } => ("analyze", *json),
        Command::Enumerate { json, .. } => ("enumerate", *json),
        Command::Greedy { json, .. } => ("greedy", *json),
        Command::Target { json, .. } => ("target", *json),
        Command::Frontier { json, .. } => ("frontier", *json),
        Command::Profile { json, .. } => ("profile", *json),
        Command::Mcp { json, .. } => ("mcp", *json),
        Command::Hamiltonian { json, .. } => ("hamiltonian", *json),
        Command::Check { json, .. } => ("check", *json),
        Command::Extremal { json, .. } => ("extremal", *json),
        Command::Lookahead { json, .. } => ("lookahead", *json),
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Analyze { file, solution, .. } => analyze(&file, &solution),
        Command::Enumerate { file, limit, .. } => enumerate(&file, limit),
        Command::Greedy { file, sense, .. } => greedy(&file, sense.into()),
        Command::Target { file, value, .. } => target(&file, value),
        Command::Frontier {
            file, stats_only, ..
        } => frontier(&file, stats_only),
        Command::Profile {
            family,
            sizes,
            seed,
            ..
        } => profile(&family, &sizes, seed),
        Command::Mcp {
            file,
            original_arcs_only,
            ..
        } => mcp(&file, original_arcs_only),
        Command::Hamiltonian { file, .. } => hamiltonian(&file),
        Command::Check { file, theorems, .. } => check(&file, &theorems),
        Command::Extremal { file, sense, .. } => extremal(&file, sense.into()),
        Command::Lookahead {
            file, sample, seed, ..
        } => lookahead(&file, sample, seed),
    }
}

impl From<SenseArg> for Sense {
    fn from(arg: SenseArg) -> Self {
        match arg {
            SenseArg::Max => Sense::Max,
            SenseArg::Min => Sense::Min,
        }
    }
}

fn parse_solution(text: &str) -> Result<Solution, String> {
    if text.trim().is_empty() {
        return Ok(Solution::empty());
    }
    let ids = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid element id {part:?} in --solution"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Solution::new(ids).map_err(|e| e.to_string())
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("invalid --sizes {text:?}: expected A..B or a single size");
    if let Some((a, b)) = text.split_once("..") {
        let from: usize = a.trim().parse().map_err(|_| bad())?;
        let to: usize = b.trim().parse().map_err(|_| bad())?;
        if from > to {
            return Err(bad());
        }
        Ok((from..=to).collect())
    } else {
        let single: usize = text.trim().parse().map_err(|_| bad())?;
        Ok(vec![single])
    }
}

fn solution_json(solution: &Solution) -> Value {
    json!(solution.elements())
}

fn render_elements(solution: &Solution, legend: &Option<Vec<String>>) -> Option<String> {
    legend.as_ref().map(|legend| {
        solution
            .elements()
            .iter()
            .map(|&e| legend[e].as_str())
            .collect::<Vec<_>>()
            .join(", ")
    })
}

fn analyze(file: &Path, solution_text: &str) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let solution = parse_solution(solution_text)?;
    let (probe, counters) = loaded.instance.instrumented();
    let triple = auxiliary_triple(&probe, &solution).map_err(|e| e.to_string())?;
    let value = objective(&probe, &solution).map_err(|e| e.to_string())?;
    let support = triple.residual.is_empty();
    let mut human = vec![
        format!(
            "instance: {} (n = {})",
            probe.label(),
            probe.element_count()
        ),
        format!("solution: {solution}"),
    ];
    if let Some(rendered) = render_elements(&solution, &loaded.legend) {
        human.push(format!("solution elements: {rendered}"));
    }
    human.extend([
        format!("objective: {value}"),
        format!("closure union W(π): {}", triple.closure_union),
        format!("adjoint S(π): {}", triple.adjoint),
        format!("residual R(π): {}", triple.residual),
        format!("support: {support}"),
    ]);
    Ok(Outcome {
        label: probe.label().to_string(),
        payload: json!({
            "n": probe.element_count(),
            "solution": solution_json(&solution),
            "objective": value,
            "closure_union": solution_json(&triple.closure_union),
            "adjoint": solution_json(&triple.adjoint),
            "residual": solution_json(&triple.residual),
            "support": support,
        }),
        human,
        stats: Some(counters.snapshot()),
        exit: 0,
    })
}

fn enumerate(file: &Path, limit: Option<u64>) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let (probe, counters) = loaded.instance.instrumented();
    let supports = enumerate_support(&probe, limit).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "instance: {} (n = {})",
        probe.label(),
        probe.element_count()
    )];
    for s in supports.solutions() {
        let value = objective(&probe, s).map_err(|e| e.to_string())?;
        match render_elements(s, &loaded.legend) {
            Some(rendered) => human.push(format!("support: {s} (f = {value}) [{rendered}]")),
            None => human.push(format!("support: {s} (f = {value})")),
        }
    }
    human.push(format!("Card(B) = {}", supports.cardinality()));
    if supports.truncated() {
        human.push("truncated at limit; more supports exist".to_string());
    }
    Ok(Outcome {
        label: probe.label().to_string(),
        payload: json!({
            "supports": supports.solutions().iter().map(solution_json).collect::<Vec<_>>(),
            "cardinality": supports.cardinality(),
            "truncated": supports.truncated(),
        }),
        human,
        stats: Some(counters.snapshot()),
        exit: 0,
    })
}

fn greedy(file: &Path, sense: Sense) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let (probe, counters) = loaded.instance.instrumented();
    let (result, trace) = greedy_construct(&probe, sense);
    let value = objective(&probe, &result).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "instance: {} (n = {}), greedy {sense}",
        probe.label(),
        probe.element_count()
    )];
    for step in &trace.steps {
        human.push(format!(
            "picked {} (weight {}, residual had {} elements, {} predicate calls)",
            step.chosen,
            probe.weight(step.chosen),
            step.residual_size,
            step.predicate_calls
        ));
    }
    human.push(format!("support: {result} (f = {value})"));
    Ok(Outcome {
        label: probe.label().to_string(),
        payload: json!({
            "sense": sense.to_string(),
            "result": solution_json(&result),
            "objective": value,
            "steps": trace.steps.iter().map(|s| json!({
                "chosen": s.chosen,
                "residual_size": s.residual_size,
                "predicate_calls": s.predicate_calls,
            })).collect::<Vec<_>>(),
            "total_extension_calls": trace.total_extension_calls,
        }),
        human,
        stats: Some(counters.snapshot()),
        exit: 0,
    })
}

fn target(file: &Path, value: u64) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let (probe, counters) = loaded.instance.instrumented();
    let found = find_support_with_value(&probe, value).map_err(|e| e.to_string())?;
    let label = probe.label().to_string();
    let (human, payload, exit) = match &found {
        Some(solution) => (
            vec![format!("support with f = {value}: {solution}")],
            json!({ "value": value, "found": solution_json(solution) }),
            0,
        ),
        None => (
            vec![format!("no support with f = {value}: none")],
            json!({ "value": value, "found": null }),
            1,
        ),
    };
    Ok(Outcome {
        label,
        payload,
        human,
        stats: Some(counters.snapshot()),
        exit,
    })
}

fn extremal(file: &Path, sense: Sense) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let (probe, counters) = loaded.instance.instrumented();
    let (solution, value) = extremal_support(&probe, sense).map_err(|e| e.to_string())?;
    Ok(Outcome {
        label: probe.label().to_string(),
        human: vec![format!("{sense} support: {solution} (f = {value})")],
        payload: json!({
            "sense": sense.to_string(),
            "result": solution_json(&solution),
            "objective": value,
        }),
        stats: Some(counters.snapshot()),
        exit: 0,
    })
}

fn frontier(file: &Path, stats_only: bool) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let (probe, counters) = loaded.instance.instrumented();
    let (stats, harvested) = frontier_run(&probe, stats_only).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "instance: {} (n = {})",
        probe.label(),
        probe.element_count()
    )];
    for &(depth, width) in &stats.layers {
        human.push(format!("layer {depth}: {width} feasible solution(s)"));
    }
    human.push(format!("max layer width: {}", stats.max_layer_width));
    human.push(format!("supports: {}", stats.support_count));
    if let Some(set) = &harvested {
        for s in set.solutions() {
            human.push(format!("support: {s}"));
        }
    }
    Ok(Outcome {
        label: probe.label().to_string(),
        payload: json!({
            "layers": stats.layers,
            "max_layer_width": stats.max_layer_width,
            "support_count": stats.support_count,
            "supports": harvested.map(|set| {
                set.solutions().iter().map(solution_json).collect::<Vec<_>>()
            }),
        }),
        human,
        stats: Some(counters.snapshot()),
        exit: 0,
    })
}

fn profile(family_name: &str, sizes_text: &str, seed: u64) -> Result<Outcome, String> {
    let registry = FamilyRegistry::builtin();
    let family = registry.get(family_name).map_err(|e| {
        format!("{e}; available: {}", registry.names().join(", "))
    })?;
    let sizes = parse_sizes(sizes_text)?;
    let rows = nontriviality_profile(family, &sizes, seed).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "family {} (seed {seed}): {}",
        family.name(),
        family.describe()
    )];
    human.push("size  elements  Card(B)  ratio".to_string());
    for row in &rows {
        let ratio = row
            .ratio
            .map(|r| format!("{r:.3}"))
            .unwrap_or_else(|| "-".to_string());
        human.push(format!(
            "{:<5} {:<9} {:<8} {ratio}",
            row.size, row.elements, row.support_count
        ));
    }
    Ok(Outcome {
        label: family.name().to_string(),
        payload: json!({
            "family": family.name(),
            "seed": seed,
            "rows": rows.iter().map(|r| json!({
                "size": r.size,
                "elements": r.elements,
                "support_count": r.support_count,
                "ratio": r.ratio,
            })).collect::<Vec<_>>(),
        }),
        human,
        stats: None,
        exit: 0,
    })
}

fn chain_json(partition: &ChainPartition) -> Value {
    json!(partition.chains())
}

fn render_chain(chain: &[usize], original: impl Fn(usize, usize) -> bool) -> String {
    let mut out = String::new();
    for (i, &v) in chain.iter().enumerate() {
        if i > 0 {
            let u = chain[i - 1];
            out.push_str(if original(u, v) { " -> " } else { " ->* " });
        }
        out.push_str(&v.to_string());
    }
    out
}

fn mcp(file: &Path, original_arcs_only: bool) -> Result<Outcome, String> {
    let parsed = parse_file(file)?;
    let Parsed::Digraph { digraph, label } = parsed else {
        return Err(format!("{}: mcp expects a digraph file", file.display()));
    };
    let closure = digraph.transitive_closure().map_err(|e| e.to_string())?;
    let partition = min_chain_partition(&digraph).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "instance: {label} ({} vertices, {} arcs, {} closure arcs)",
        digraph.vertex_count(),
        digraph.arcs().len(),
        closure.arcs().len()
    )];
    human.push(format!(
        "matching size: {}, chain count: {}",
        partition.matching().len(),
        partition.chain_count()
    ));
    for chain in partition.chains() {
        human.push(format!(
            "chain: {}",
            render_chain(chain, |u, v| digraph.has_arc(u, v))
        ));
    }
    if !partition.uses_only_original_arcs(&digraph) {
        human.push("(->* marks consecutive pairs joined only by a closure arc)".to_string());
    }
    let mut payload = json!({
        "vertices": digraph.vertex_count(),
        "arcs": digraph.arcs().len(),
        "closure_arcs": closure.arcs().len(),
        "matching": partition.matching(),
        "chain_count": partition.chain_count(),
        "chains": chain_json(&partition),
        "uses_only_original_arcs": partition.uses_only_original_arcs(&digraph),
    });
    let mut exit = 0;
    if original_arcs_only {
        let outcome = alternating_transform_search(&digraph, &partition)
            .map_err(|e| e.to_string())?;
        match &outcome.result {
            Some(found) => {
                human.push(format!(
                    "original-arcs-only partition found after examining {} maximum matching(s):",
                    outcome.matchings_examined
                ));
                for chain in found.chains() {
                    human.push(format!(
                        "chain: {}",
                        render_chain(chain, |u, v| digraph.has_arc(u, v))
                    ));
                }
                payload["search"] = json!({
                    "found": chain_json(found),
                    "matchings_examined": outcome.matchings_examined,
                });
            }
            None => {
                human.push(format!(
                    "no original-arcs-only partition exists ({} maximum matchings examined)",
                    outcome.matchings_examined
                ));
                payload["search"] = json!({
                    "found": null,
                    "matchings_examined": outcome.matchings_examined,
                });
                exit = 1;
            }
        }
    }
    Ok(Outcome {
        label,
        payload,
        human,
        stats: None,
        exit,
    })
}

fn hamiltonian(file: &Path) -> Result<Outcome, String> {
    let parsed = parse_file(file)?;
    let Parsed::Graph { graph, label } = parsed else {
        return Err(format!("{}: hamiltonian expects a graph file", file.display()));
    };
    let partition = hamiltonian_partition_bruteforce(&graph).map_err(|e| e.to_string())?;
    let mut human = vec![format!(
        "instance: {label} ({} vertices, {} edges)",
        graph.vertex_count(),
        graph.edges().len()
    )];
    let (payload, hamiltonian) = match &partition {
        None => {
            human.push("no partition into cycles and edges exists".to_string());
            (
                json!({ "feasible": false, "parts": null, "part_count": null, "hamiltonian": false }),
                false,
            )
        }
        Some(partition) => {
            let mut parts = Vec::new();
            for part in &partition.parts {
                match part {
                    PartitionPart::Cycle(vs) => {
                        human.push(format!(
                            "cycle: {}",
                            vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> ")
                        ));
                        parts.push(json!({ "cycle": vs }));
                    }
                    PartitionPart::Edge(a, b) => {
                        human.push(format!("edge: {a} - {b}"));
                        parts.push(json!({ "edge": [a, b] }));
                    }
                }
            }
            let hamiltonian =
                partition.part_count() == 1 && partition.parts[0].is_cycle();
            human.push(format!("part count: {}", partition.part_count()));
            (
                json!({
                    "feasible": true,
                    "parts": parts,
                    "part_count": partition.part_count(),
                    "hamiltonian": hamiltonian,
                }),
                hamiltonian,
            )
        }
    };
    human.push(format!("hamiltonian: {hamiltonian}"));
    Ok(Outcome {
        label,
        payload,
        human,
        stats: None,
        exit: u8::from(!hamiltonian),
    })
}

fn check(file: &Path, theorems: &str) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let numbers = theorems
        .split(',')
        .map(|part| {
            let k: u8 = part
                .trim()
                .parse()
                .map_err(|_| format!("invalid theorem number {part:?}"))?;
            StructuralCheck::from_number(k).ok_or(format!("theorem number {k} out of range 1..3"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (probe, counters) = loaded.instance.instrumented();
    let mut human = vec![format!(
        "instance: {} (n = {})",
        probe.label(),
        probe.element_count()
    )];
    let mut reports = Vec::new();
    let mut all_pass = true;
    for check in numbers {
        let report = check_structural(&probe, check).map_err(|e| e.to_string())?;
        all_pass &= report.pass;
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        let detail = match &report.detail {
            CheckDetail::Monotonicity { strict, equal } => {
                format!(" ({} pairs: {strict} strict, {equal} equal)", report.cases_checked)
            }
            CheckDetail::Extension => format!(" ({} extensions)", report.cases_checked),
            CheckDetail::Supports(supports) => {
                let rendered = supports
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                format!(" (supports: {rendered})")
            }
        };
        human.push(match &report.counterexample {
            Some(cx) => format!("theorem {}: {verdict} — {cx}", check.number()),
            None => format!("theorem {}: {verdict}{detail}", check.number()),
        });
        reports.push(json!({
            "theorem": check.number(),
            "pass": report.pass,
            "cases_checked": report.cases_checked,
            "counterexample": report.counterexample,
            "detail": match &report.detail {
                CheckDetail::Monotonicity { strict, equal } => json!({
                    "strict": strict, "equal": equal,
                }),
                CheckDetail::Extension => Value::Null,
                CheckDetail::Supports(supports) => json!(supports
                    .iter()
                    .map(solution_json)
                    .collect::<Vec<_>>()),
            },
        }));
    }
    Ok(Outcome {
        label: probe.label().to_string(),
        payload: json!({ "checks": reports }),
        human,
        stats: Some(counters.snapshot()),
        exit: u8::from(!all_pass),
    })
}

fn lookahead(file: &Path, sample: Option<u64>, seed: u64) -> Result<Outcome, String> {
    let loaded = load_system(file)?;
    warn(&loaded.instance);
    let mode = match sample {
        Some(count) => ProfileMode::Sample { count, seed },
        None => ProfileMode::Exhaustive,
    };
    let profile = lookahead_profile(&loaded.instance, mode).map_err(|e| e.to_string())?;
    let no_lookahead = profile.classification == LookaheadClass::NoLookahead;
    let mut human = vec![format!(
        "instance: {} (n = {})",
        loaded.instance.label(),
        loaded.instance.element_count()
    )];
    for (&size, &calls) in &profile.per_size_calls {
        human.push(format!(
            "solutions of size {size}: {calls} extension call(s) per adjoint set"
        ));
    }
    human.push(format!(
        "profiled {} feasible solution(s), {} membership call(s)",
        profile.solutions_profiled, profile.membership_calls
    ));
    human.push(format!("oracle wall time: {:.3?}", profile.oracle_wall_time));
    human.push(format!("classification: {}", profile.classification));
    Ok(Outcome {
        label: loaded.instance.label().to_string(),
        payload: json!({
            "per_size_calls": profile.per_size_calls,
            "solutions_profiled": profile.solutions_profiled,
            "membership_calls": profile.membership_calls,
            "classification": profile.classification.to_string(),
        }),
        human,
        stats: None,
        exit: u8::from(!no_lookahead),
    })
}

fn warn(instance: &indsys::model::ProblemInstance) {
    for warning in instance.warnings() {
        eprintln!("warning: {warning}");
    }
}
