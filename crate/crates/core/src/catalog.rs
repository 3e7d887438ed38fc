//! Fixed labelled representatives of the named graphs used throughout the
//! crate.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{make_graph, Graph, VertexSubset};
use crate::iso::find_induced_embedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Name {
    K3,
    K3Bar,
    Claw,
    ClawBar,
    Cycle(usize),
    Path(usize),
    A6,
    A6Bar,
    /// The bull.
    B5,
    E6,
    E6Bar,
    P9,
    P9Bar,
    /// P9 with one vertex deleted.
    P9MinusV,
    /// P9 with both endpoints of one edge deleted.
    P9MinusEdge,
    P9MinusEdgeBar,
}

impl Name {
    /// The nine graphs that contain both a triangle and an independent
    /// triple while avoiding claws on both sides.
    pub const NINE: [Name; 9] = [
        Name::B5,
        Name::A6,
        Name::A6Bar,
        Name::E6,
        Name::E6Bar,
        Name::P9MinusEdge,
        Name::P9MinusEdgeBar,
        Name::P9MinusV,
        Name::P9,
    ];

    /// Every fixed (parameterless) name.
    pub const FIXED: [Name; 14] = [
        Name::K3,
        Name::K3Bar,
        Name::Claw,
        Name::ClawBar,
        Name::A6,
        Name::A6Bar,
        Name::B5,
        Name::E6,
        Name::E6Bar,
        Name::P9,
        Name::P9Bar,
        Name::P9MinusV,
        Name::P9MinusEdge,
        Name::P9MinusEdgeBar,
    ];

    pub fn graph(self) -> Result<Graph> {
        named(self)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Name::K3 => f.write_str("K3"),
            Name::K3Bar => f.write_str("K3bar"),
            Name::Claw => f.write_str("claw"),
            Name::ClawBar => f.write_str("clawbar"),
            Name::Cycle(n) => write!(f, "cycle:{n}"),
            Name::Path(n) => write!(f, "path:{n}"),
            Name::A6 => f.write_str("A6"),
            Name::A6Bar => f.write_str("A6bar"),
            Name::B5 => f.write_str("B5"),
            Name::E6 => f.write_str("E6"),
            Name::E6Bar => f.write_str("E6bar"),
            Name::P9 => f.write_str("P9"),
            Name::P9Bar => f.write_str("P9bar"),
            Name::P9MinusV => f.write_str("P9_minus_v"),
            Name::P9MinusEdge => f.write_str("P9_minus_edge"),
            Name::P9MinusEdgeBar => f.write_str("P9_minus_edge_bar"),
        }
    }
}

impl FromStr for Name {
    type Err = Error;

    /// Accepts the [`fmt::Display`] spellings (case-insensitive) plus
    /// `cycle(n)` / `path(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let param = |prefix: &str| -> Option<Result<usize>> {
            let rest = lower.strip_prefix(prefix)?;
            let digits = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))?;
            Some(
                digits
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad size in `{s}`"))),
            )
        };
        if let Some(k) = param("cycle") {
            return Ok(Name::Cycle(k?));
        }
        if let Some(k) = param("path") {
            return Ok(Name::Path(k?));
        }
        Ok(match lower.as_str() {
            "k3" => Name::K3,
            "k3bar" => Name::K3Bar,
            "claw" | "k13" => Name::Claw,
            "clawbar" | "k13bar" => Name::ClawBar,
            "a6" => Name::A6,
            "a6bar" => Name::A6Bar,
            "b5" | "bull" => Name::B5,
            "e6" => Name::E6,
            "e6bar" => Name::E6Bar,
            "p9" => Name::P9,
            "p9bar" => Name::P9Bar,
            "p9_minus_v" => Name::P9MinusV,
            "p9_minus_edge" => Name::P9MinusEdge,
            "p9_minus_edge_bar" => Name::P9MinusEdgeBar,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

fn p9() -> Graph {
    let k3 = Graph::complete(3).unwrap();
    k3.cartesian_product(&k3).unwrap()
}

fn e6_bar() -> Graph {
    // x=0 a=1 b=2 c=3 e=4 f=5
    make_graph(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4)]).unwrap()
}

fn p9_minus_edge() -> Graph {
    let g = p9();
    let (u, v) = g.edges().next().unwrap();
    let keep = VertexSubset::all(9).unwrap().without(u).without(v);
    g.induced(&keep).unwrap().0
}

pub fn named(name: Name) -> Result<Graph> {
    Ok(match name {
        Name::K3 => Graph::complete(3)?,
        Name::K3Bar => Graph::empty(3)?,
        Name::Claw => make_graph(4, &[(0, 1), (0, 2), (0, 3)])?,
        Name::ClawBar => make_graph(4, &[(1, 2), (1, 3), (2, 3)])?,
        Name::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            make_graph(n, &edges)?
        }
        Name::Path(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter("path needs n >= 1".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            make_graph(n, &edges)?
        }
        Name::A6 => make_graph(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 3),
                (1, 4),
                (2, 4),
                (0, 5),
                (2, 5),
            ],
        )?,
        Name::A6Bar => named(Name::A6)?.complement(),
        Name::B5 => make_graph(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])?,
        Name::E6 => e6_bar().complement(),
        Name::E6Bar => e6_bar(),
        Name::P9 => p9(),
        Name::P9Bar => p9().complement(),
        Name::P9MinusV => {
            let keep = VertexSubset::all(9)?.without(0);
            p9().induced(&keep)?.0
        }
        Name::P9MinusEdge => p9_minus_edge(),
        Name::P9MinusEdgeBar => p9_minus_edge().complement(),
    })
}

/// A catalog graph with an induced embedding into P9 where one exists.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: Name,
    pub graph: Graph,
    pub p9_embedding: Option<Vec<usize>>,
}

/// The nine graphs of [`Name::NINE`], with their P9 embeddings, built once.
pub fn nine() -> &'static [NamedGraph] {
    static NINE: OnceLock<Vec<NamedGraph>> = OnceLock::new();
    NINE.get_or_init(|| {
        let host = p9();
        Name::NINE
            .iter()
            .map(|&name| {
                let graph = named(name).unwrap();
                let p9_embedding = find_induced_embedding(&graph, &host);
                NamedGraph {
                    name,
                    graph,
                    p9_embedding,
                }
            })
            .collect()
    })
}

/// The P9 host graph shared by certificate checks.
pub fn p9_host() -> &'static Graph {
    static P9: OnceLock<Graph> = OnceLock::new();
    P9.get_or_init(p9)
}
