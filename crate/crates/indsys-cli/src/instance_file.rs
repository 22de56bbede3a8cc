//! Instance files: one UTF-8 JSON document per instance, dispatched on the
//! `kind` field. Unknown keys and duplicate elements are rejected.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use indsys::model::ProblemInstance;
use indsys::oracle::ExplicitOracle;
use indsys::problems::{chain_partition_system, coloring_system, ColoringSystem, Digraph, Graph};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ExplicitFile {
    kind: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<u64>>,
    maximal_feasible: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ColoringFile {
    kind: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
    colors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct DigraphFile {
    kind: String,
    vertices: usize,
    arcs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    kind: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// A parsed and validated instance file.
pub enum Parsed {
    Explicit {
        instance: ProblemInstance,
        oracle: ExplicitOracle,
    },
    Coloring {
        system: ColoringSystem,
    },
    Digraph {
        digraph: Digraph,
        label: String,
    },
    Graph {
        graph: Graph,
        label: String,
    },
}

impl Parsed {
    pub fn label(&self) -> String {
        match self {
            Parsed::Explicit { instance, .. } => instance.label().to_string(),
            Parsed::Coloring { system } => system.instance.label().to_string(),
            Parsed::Digraph { label, .. } | Parsed::Graph { label, .. } => label.clone(),
        }
    }

    /// Canonical serialization; parsing it again yields an identical
    /// instance.
    pub fn to_canonical_json(&self) -> Value {
        match self {
            Parsed::Explicit { instance, oracle } => serde_json::json!({
                "kind": "explicit",
                "n": instance.element_count(),
                "weights": instance.weights(),
                "maximal_feasible": oracle.maximal_sets(),
                "label": instance.label(),
            }),
            Parsed::Coloring { system } => serde_json::json!({
                "kind": "coloring",
                "vertices": system.graph.vertex_count(),
                "edges": system.graph.edges(),
                "colors": system.colors,
                "label": system.instance.label(),
            }),
            Parsed::Digraph { digraph, label } => serde_json::json!({
                "kind": "digraph",
                "vertices": digraph.vertex_count(),
                "arcs": digraph.arcs(),
                "label": label,
            }),
            Parsed::Graph { graph, label } => serde_json::json!({
                "kind": "graph",
                "vertices": graph.vertex_count(),
                "edges": graph.edges(),
                "label": label,
            }),
        }
    }
}

/// An instance usable by the solution-centric commands, with the element
/// legend where elements encode something richer than plain ids.
pub struct LoadedSystem {
    pub instance: ProblemInstance,
    /// `legend[i]` renders element `i` (arc or vertex:color), when encoded.
    pub legend: Option<Vec<String>>,
}

fn default_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".to_string())
}

/// Reads and validates a file; all failures are input errors (exit 2).
pub fn parse_file(path: &Path) -> Result<Parsed, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| format!("{}: invalid JSON: {e}", path.display()))?;
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| format!("{}: missing string field \"kind\"", path.display()))?
        .to_string();
    let fail = |e: String| format!("{}: {e}", path.display());
    match kind.as_str() {
        "explicit" => {
            let file: ExplicitFile =
                serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
            let weights = file.weights.unwrap_or_else(|| vec![1; file.n]);
            let oracle = ExplicitOracle::new(file.n, file.maximal_feasible)
                .map_err(|e| fail(e.to_string()))?;
            let label = file.label.unwrap_or_else(|| default_label(path));
            let instance = ProblemInstance::new(weights, Arc::new(oracle.clone()), label)
                .map_err(|e| fail(e.to_string()))?;
            Ok(Parsed::Explicit { instance, oracle })
        }
        "coloring" => {
            let file: ColoringFile =
                serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
            let graph = Graph::new(file.vertices, file.edges).map_err(|e| fail(e.to_string()))?;
            let label = file.label.unwrap_or_else(|| default_label(path));
            let system =
                coloring_system(graph, file.colors, label).map_err(|e| fail(e.to_string()))?;
            Ok(Parsed::Coloring { system })
        }
        "digraph" => {
            let file: DigraphFile =
                serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
            let digraph =
                Digraph::new(file.vertices, file.arcs).map_err(|e| fail(e.to_string()))?;
            let label = file.label.unwrap_or_else(|| default_label(path));
            Ok(Parsed::Digraph { digraph, label })
        }
        "graph" => {
            let file: GraphFile =
                serde_json::from_value(value).map_err(|e| fail(e.to_string()))?;
            let graph = Graph::new(file.vertices, file.edges).map_err(|e| fail(e.to_string()))?;
            let label = file.label.unwrap_or_else(|| default_label(path));
            Ok(Parsed::Graph { graph, label })
        }
        other => Err(fail(format!(
            "unknown kind {other:?} (expected explicit, coloring, digraph or graph)"
        ))),
    }
}

/// Loads a file as a problem instance for the solution-centric commands.
/// Digraph files are interpreted as their arc-selection system (elements
/// are the closure arcs in sorted order); plain graphs have no system view.
pub fn load_system(path: &Path) -> Result<LoadedSystem, String> {
    match parse_file(path)? {
        Parsed::Explicit { instance, .. } => Ok(LoadedSystem {
            instance,
            legend: None,
        }),
        Parsed::Coloring { system } => {
            let legend = (0..system.instance.element_count())
                .map(|e| {
                    let (v, c) = system.assignment_of(e);
                    format!("v{v}:c{c}")
                })
                .collect();
            Ok(LoadedSystem {
                instance: system.instance,
                legend: Some(legend),
            })
        }
        Parsed::Digraph { digraph, label } => {
            let system = chain_partition_system(&digraph, label)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let legend = system
                .arcs
                .iter()
                .map(|(u, v)| format!("{u}->{v}"))
                .collect();
            Ok(LoadedSystem {
                instance: system.instance,
                legend: Some(legend),
            })
        }
        Parsed::Graph { .. } => Err(format!(
            "{}: kind \"graph\" has no independence-system view; use the hamiltonian command",
            path.display()
        )),
    }
}
