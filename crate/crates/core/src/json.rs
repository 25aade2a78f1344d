//! File formats for diagrams and worlds.
//!
//! A diagram is `{"n": 4, "edges": [[1,2,1,1], ...]}` with `n` optional. A world is given by
//! `{"represent": [[0,1],[0,0]]}`, by `{"seed_diagram": {...}}`, or by a bare diagram.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diagram::{Edge, WebDiagram};
use crate::enumeration::{represent, represent_of, RepresentMatrix};
use crate::error::{Error, Result};
use crate::world::{web_world_with_limits, Limits, WebWorld};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub edges: Vec<[u32; 4]>,
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<WebDiagram> {
        let edges = self
            .edges
            .iter()
            .map(|&[x, y, a, b]| Edge::new(x, y, a, b))
            .collect::<Result<Vec<_>>>()?;
        WebDiagram::new(edges, self.n)
    }
}

impl From<&WebDiagram> for DiagramJson {
    fn from(d: &WebDiagram) -> Self {
        Self {
            n: Some(d.n()),
            edges: d.edges().iter().map(Edge::as_array).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum WorldJson {
    Represent { represent: RepresentMatrix },
    Seed { seed_diagram: DiagramJson },
    Diagram(DiagramJson),
}

impl WorldJson {
    /// A representative diagram of the world.
    pub fn seed(&self) -> Result<WebDiagram> {
        match self {
            WorldJson::Represent { represent } => Ok(represent.seed_diagram()),
            WorldJson::Seed { seed_diagram: d } | WorldJson::Diagram(d) => d.to_diagram(),
        }
    }

    pub fn represent(&self) -> Result<RepresentMatrix> {
        match self {
            WorldJson::Represent { represent } => Ok(represent.clone()),
            _ => Ok(represent_of(&self.seed()?)),
        }
    }

    pub fn world(&self, limits: &Limits) -> Result<WebWorld> {
        web_world_with_limits(&self.seed()?, limits)
    }
}

fn input_error(e: serde_json::Error) -> Error {
    Error::Input(e.to_string())
}

pub fn parse_diagram(text: &str) -> Result<WebDiagram> {
    serde_json::from_str::<DiagramJson>(text)
        .map_err(input_error)?
        .to_diagram()
}

pub fn parse_world(text: &str) -> Result<WorldJson> {
    serde_json::from_str(text).map_err(input_error)
}

pub fn diagram_json(d: &WebDiagram) -> Value {
    serde_json::to_value(DiagramJson::from(d)).expect("plain data")
}

/// `{"n", "size", "represent", "diagrams"}` with diagrams in canonical world order.
pub fn world_json(w: &WebWorld) -> Value {
    let diagrams: Vec<Vec<[u32; 4]>> = w
        .diagrams()
        .iter()
        .map(|d| d.edges().iter().map(Edge::as_array).collect())
        .collect();
    json!({
        "n": w.n(),
        "size": w.len(),
        "represent": represent(w),
        "diagrams": diagrams,
    })
}
