//! The fixture format shared by the library, tests and CLI:
//!
//! ```json
//! {"type": "ribbon",
//!  "vertices": ["v1"],
//!  "edges": [{"id": "e1", "tail": "v1", "head": "v1"}],
//!  "external": [{"id": "f1", "vertex": "v1", "dir": "in"}],
//!  "rotation": {"v1": ["e1.t", "f1", "e1.h"]}}
//! ```
//!
//! `rotation` is required exactly when `type` is `"ribbon"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph::{Graph, LegDir};
use super::ribbon::RibbonGraph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LegJson {
    id: String,
    vertex: String,
    dir: LegDir,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    #[serde(rename = "type")]
    kind: String,
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
    #[serde(default)]
    external: Vec<LegJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<String>>>,
}

/// A parsed fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Graph(Graph),
    Ribbon(RibbonGraph),
}

impl Fixture {
    pub fn graph(&self) -> &Graph {
        match self {
            Fixture::Graph(g) => g,
            Fixture::Ribbon(r) => r.graph(),
        }
    }

    pub fn ribbon(&self) -> Option<&RibbonGraph> {
        match self {
            Fixture::Ribbon(r) => Some(r),
            Fixture::Graph(_) => None,
        }
    }
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut b = Graph::builder().vertices(&raw.vertices.iter().map(String::as_str).collect::<Vec<_>>());
    for e in &raw.edges {
        b = b.edge(&e.id, &e.tail, &e.head);
    }
    for l in &raw.external {
        b = b.leg(&l.id, &l.vertex, l.dir);
    }
    let g = b.build().map_err(|e| Error::Parse(format!("field `edges`/`external`: {e}")))?;
    match (raw.kind.as_str(), raw.rotation) {
        ("graph", None) => Ok(Fixture::Graph(g)),
        ("graph", Some(_)) => Err(Error::Parse("field `rotation` is only allowed when `type` is \"ribbon\"".into())),
        ("ribbon", Some(rot)) => RibbonGraph::from_names(g, &rot)
            .map(Fixture::Ribbon)
            .map_err(|e| Error::Parse(format!("field `rotation`: {e}"))),
        ("ribbon", None) => Err(Error::Parse("missing field `rotation` for a ribbon graph".into())),
        (other, _) => Err(Error::Parse(format!(
            "field `type` must be \"graph\" or \"ribbon\", got \"{other}\""
        ))),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_fixture(text).map(|f| f.graph().clone())
}

pub fn parse_ribbon(text: &str) -> Result<RibbonGraph> {
    match parse_fixture(text)? {
        Fixture::Ribbon(r) => Ok(r),
        Fixture::Graph(_) => Err(Error::Parse("field `type`: expected a ribbon graph".into())),
    }
}

fn to_raw(g: &Graph, rotation: Option<BTreeMap<String, Vec<String>>>) -> GraphJson {
    let v = |i: usize| g.vertices()[i].clone();
    GraphJson {
        kind: if rotation.is_some() { "ribbon" } else { "graph" }.into(),
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeJson { id: e.id.clone(), tail: v(e.tail), head: v(e.head) })
            .collect(),
        external: g
            .legs()
            .iter()
            .map(|l| LegJson { id: l.id.clone(), vertex: v(l.vertex), dir: l.dir })
            .collect(),
        rotation,
    }
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(to_raw(g, None)).expect("serializable")
}

pub fn ribbon_to_json(r: &RibbonGraph) -> serde_json::Value {
    serde_json::to_value(to_raw(r.graph(), Some(r.rotation_names()))).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"type":"ribbon","vertices":["v1"],
            "edges":[{"id":"e1","tail":"v1","head":"v1"}],
            "external":[{"id":"f1","vertex":"v1","dir":"in"},{"id":"f2","vertex":"v1","dir":"out"}],
            "rotation":{"v1":["e1.t","f1","e1.h","f2"]}}"#;
        let r = parse_ribbon(text).unwrap();
        assert_eq!(r.faces().len(), 2);
        let again = parse_ribbon(&ribbon_to_json(&r).to_string()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn errors_name_the_field() {
        let e = parse_fixture(r#"{"type":"graph","edges":[]}"#).unwrap_err();
        assert!(e.to_string().contains("vertices"), "{e}");
        let e = parse_fixture(r#"{"type":"ribbon","vertices":["v"],"edges":[]}"#).unwrap_err();
        assert!(e.to_string().contains("rotation"), "{e}");
        let e = parse_fixture(r#"{"type":"graph","vertices":["v"],"edges":[{"id":"e","tail":"v","head":"w"}]}"#)
            .unwrap_err();
        assert!(e.to_string().contains("edges"), "{e}");
    }
}
