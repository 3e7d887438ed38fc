//! JSON documents shared by the command-line tool and its tests.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6};
use crate::theorem::{Decomposition, Flips, Obstruction};

/// A decomposition with `G` and `G2` in graph6 and the four edge classes as
/// edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    #[serde(rename = "G")]
    pub g: String,
    #[serde(rename = "G2")]
    pub g2: String,
    #[serde(rename = "A1")]
    pub a1: Vec<(usize, usize)>,
    #[serde(rename = "A2")]
    pub a2: Vec<(usize, usize)>,
    #[serde(rename = "B1")]
    pub b1: Vec<(usize, usize)>,
    #[serde(rename = "B2")]
    pub b2: Vec<(usize, usize)>,
    pub flips: Flips,
}

impl From<&Decomposition> for DecompositionDoc {
    fn from(d: &Decomposition) -> Self {
        Self {
            g: emit_graph6(&d.g),
            g2: emit_graph6(&d.g2),
            a1: d.a1.clone(),
            a2: d.a2.clone(),
            b1: d.b1.clone(),
            b2: d.b2.clone(),
            flips: d.flips.clone(),
        }
    }
}

impl DecompositionDoc {
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        Ok(Decomposition {
            g: parse_graph6(&self.g)?,
            g2: parse_graph6(&self.g2)?,
            a1: self.a1.clone(),
            a2: self.a2.clone(),
            b1: self.b1.clone(),
            b2: self.b2.clone(),
            flips: self.flips.clone(),
        })
    }
}

/// Output of `decompose`: either a decomposition or an odd-cycle obstruction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DecomposeDoc {
    Decomposition(DecompositionDoc),
    Obstruction { obstruction: Obstruction },
}

impl DecomposeDoc {
    pub fn new(result: &std::result::Result<Decomposition, Obstruction>) -> Self {
        match result {
            Ok(d) => DecomposeDoc::Decomposition(d.into()),
            Err(o) => DecomposeDoc::Obstruction {
                obstruction: o.clone(),
            },
        }
    }

    /// Re-checks the document against `u`.
    pub fn validate(&self, u: &Graph) -> std::result::Result<(), String> {
        match self {
            DecomposeDoc::Decomposition(doc) => doc
                .to_decomposition()
                .map_err(|e| e.to_string())?
                .validate(u)
                .map_err(str::to_string),
            DecomposeDoc::Obstruction { obstruction } => {
                obstruction.validate(u).map_err(str::to_string)
            }
        }
    }
}
