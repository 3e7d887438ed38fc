use serde::{Deserialize, Serialize};

use crate::detect::h3;
use crate::edge_graph::{bipartition, edge_graph, EdgeGraph, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest total number of edge-graph components [`all_decompositions`]
/// will enumerate flips over.
pub const MAX_FLIP_COMPONENTS: usize = 20;

/// Per-component colour flips relative to the canonical colourings of
/// `S(U)` and `S(complement U)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flips {
    #[serde(rename = "S(U)")]
    pub direct: Vec<bool>,
    #[serde(rename = "S(U_bar)")]
    pub complement: Vec<bool>,
}

/// A pair `(G, G2)` with `G + G2 = U` built from bipartitions of the two
/// edge-graphs: `E(G) = A1 u B1` and `E(G2) = A2 u B1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub g: Graph,
    pub g2: Graph,
    pub a1: Vec<(usize, usize)>,
    pub a2: Vec<(usize, usize)>,
    pub b1: Vec<(usize, usize)>,
    pub b2: Vec<(usize, usize)>,
    pub flips: Flips,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeGraphSide {
    #[serde(rename = "S(U)")]
    Direct,
    #[serde(rename = "S(U_bar)")]
    Complement,
}

/// An odd cycle in `S(U)` or `S(complement U)`, as a cyclic list of base
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Obstruction {
    #[serde(rename = "in")]
    pub side: EdgeGraphSide,
    pub odd_cycle: Vec<(usize, usize)>,
}

impl Obstruction {
    pub fn validate(&self, u: &Graph) -> Result<(), &'static str> {
        let base = match self.side {
            EdgeGraphSide::Direct => u.clone(),
            EdgeGraphSide::Complement => u.complement(),
        };
        let s = edge_graph(&base);
        let ids: Option<Vec<usize>> = self
            .odd_cycle
            .iter()
            .map(|&(x, y)| s.index_of(x, y))
            .collect();
        let Some(vertices) = ids else {
            return Err("cycle uses a pair that is not a vertex of the edge-graph");
        };
        if (crate::edge_graph::OddCycle { vertices }).is_valid_in(s.adjacency()) {
            Ok(())
        } else {
            Err("not an odd closed walk")
        }
    }
}

struct Bipartitions {
    su: EdgeGraph,
    cu: TwoColoring,
    sc: EdgeGraph,
    cc: TwoColoring,
}

fn bipartitions(u: &Graph) -> Result<Bipartitions, Obstruction> {
    let obstruction = |side, s: &EdgeGraph, cycle: crate::edge_graph::OddCycle| Obstruction {
        side,
        odd_cycle: cycle.vertices.iter().map(|&k| s.edge(k)).collect(),
    };
    let su = edge_graph(u);
    let cu = bipartition(&su).map_err(|c| obstruction(EdgeGraphSide::Direct, &su, c))?;
    let sc = edge_graph(&u.complement());
    let cc = bipartition(&sc).map_err(|c| obstruction(EdgeGraphSide::Complement, &sc, c))?;
    Ok(Bipartitions { su, cu, sc, cc })
}

type Pairs = Vec<(usize, usize)>;

fn split(s: &EdgeGraph, c: &TwoColoring, flips: &[bool]) -> (Pairs, Pairs) {
    let mut color = c.color.clone();
    for (comp, &flip) in c.components.iter().zip(flips) {
        if flip {
            for &v in &comp.vertices {
                color[v] ^= 1;
            }
        }
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (k, &col) in color.iter().enumerate() {
        if col == 0 {
            first.push(s.edge(k));
        } else {
            second.push(s.edge(k));
        }
    }
    (first, second)
}

fn assemble(u: &Graph, parts: &Bipartitions, flips: Flips) -> Decomposition {
    let (a1, a2) = split(&parts.su, &parts.cu, &flips.direct);
    let (b1, b2) = split(&parts.sc, &parts.cc, &flips.complement);
    let n = u.n();
    let g_edges: Vec<_> = a1.iter().chain(&b1).copied().collect();
    let g2_edges: Vec<_> = a2.iter().chain(&b1).copied().collect();
    Decomposition {
        g: Graph::from_edges(n, &g_edges).unwrap(),
        g2: Graph::from_edges(n, &g2_edges).unwrap(),
        a1,
        a2,
        b1,
        b2,
        flips,
    }
}

/// Canonical decomposition of `u` as a Boolean sum of two graphs with the same
/// homogeneous triples, or the odd cycle that rules one out.
pub fn decompose(u: &Graph) -> Result<Decomposition, Obstruction> {
    let parts = bipartitions(u)?;
    let flips = Flips {
        direct: vec![false; parts.cu.components.len()],
        complement: vec![false; parts.cc.components.len()],
    };
    Ok(assemble(u, &parts, flips))
}

/// Every decomposition reachable by flipping the colours of individual
/// edge-graph components: `2^(c1 + c2)` of them, canonical one first.
///
/// With `dedup_swap` the flip of the first `S(U)` component is pinned, which
/// keeps one of each `(G, G2)` / `(G2, G)` pair.
pub fn all_decompositions(u: &Graph, dedup_swap: bool) -> Result<Vec<Decomposition>> {
    let parts = bipartitions(u).map_err(|_| Error::NotBipartite)?;
    let c1 = parts.cu.components.len();
    let c2 = parts.cc.components.len();
    if c1 + c2 > MAX_FLIP_COMPONENTS {
        return Err(Error::Guard {
            what: "edge-graph component count",
            value: c1 + c2,
            max: MAX_FLIP_COMPONENTS,
        });
    }
    let total = c1 + c2;
    let mut out = Vec::new();
    for assignment in 0u32..1 << total {
        if dedup_swap && c1 > 0 && assignment & 1 == 1 {
            continue;
        }
        let bit = |k: usize| assignment >> k & 1 == 1;
        let flips = Flips {
            direct: (0..c1).map(bit).collect(),
            complement: (c1..total).map(bit).collect(),
        };
        out.push(assemble(u, &parts, flips));
    }
    Ok(out)
}

impl Decomposition {
    /// Checks every structural invariant of the decomposition against `u`.
    pub fn validate(&self, u: &Graph) -> Result<(), &'static str> {
        let n = u.n();
        if self.g.n() != n || self.g2.n() != n {
            return Err("vertex counts differ");
        }
        let g_expected: Vec<_> = self.a1.iter().chain(&self.b1).copied().collect();
        let g2_expected: Vec<_> = self.a2.iter().chain(&self.b1).copied().collect();
        if Graph::from_edges(n, &g_expected).ok().as_ref() != Some(&self.g)
            || Graph::from_edges(n, &g2_expected).ok().as_ref() != Some(&self.g2)
        {
            return Err("E(G) != A1 u B1 or E(G2) != A2 u B1");
        }
        let mut a: Vec<_> = self.a1.iter().chain(&self.a2).copied().collect();
        let mut b: Vec<_> = self.b1.iter().chain(&self.b2).copied().collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != u.edges().collect::<Vec<_>>() || b != u.non_edges().collect::<Vec<_>>() {
            return Err("A1/A2 or B1/B2 do not partition the edges / non-edges");
        }
        if self.g.boolean_sum(&self.g2).ok().as_ref() != Some(u) {
            return Err("G + G2 != U");
        }
        if h3(&self.g) != h3(&self.g2) {
            return Err("G and G2 have different homogeneous triples");
        }
        let independent = |s: &EdgeGraph, class: &[(usize, usize)]| {
            let ids: Vec<usize> = class
                .iter()
                .filter_map(|&(x, y)| s.index_of(x, y))
                .collect();
            ids.iter()
                .all(|&p| ids.iter().all(|&q| !s.is_adjacent(p, q)))
        };
        let su = edge_graph(u);
        let sc = edge_graph(&u.complement());
        if !(independent(&su, &self.a1)
            && independent(&su, &self.a2)
            && independent(&sc, &self.b1)
            && independent(&sc, &self.b2))
        {
            return Err("an edge class is not independent in its edge-graph");
        }
        Ok(())
    }
}

pub fn same_h3(g: &Graph, g2: &Graph) -> Result<bool> {
    g.same_order(g2)?;
    Ok(h3(g) == h3(g2))
}

/// The three conditions of the Boolean sum lemma, each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LemmaGgu {
    /// Same homogeneous triples.
    pub a: bool,
    /// `U(xy) = U(xz) != U(yz)` forces `G(xy) != G(xz)`.
    pub b: bool,
    /// `E(G)` splits both edge-graphs into independent sets.
    pub c: bool,
}

impl LemmaGgu {
    pub fn agree(&self) -> bool {
        self.a == self.b && self.b == self.c
    }
}

pub fn lemma_ggu_check(g: &Graph, g2: &Graph) -> Result<LemmaGgu> {
    let a = same_h3(g, g2)?;
    let u = g.boolean_sum(g2)?;
    let n = u.n();
    let mut b = true;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if x == y || x == z {
                    continue;
                }
                let (uxy, uxz, uyz) = (u.has_edge(x, y), u.has_edge(x, z), u.has_edge(y, z));
                if uxy == uxz && uxz != uyz && g.has_edge(x, y) == g.has_edge(x, z) {
                    b = false;
                    break 'outer;
                }
            }
        }
    }
    let split_independent = |s: &EdgeGraph| {
        s.adjacent_pairs().all(|(p, q)| {
            let (e, f) = (s.edge(p), s.edge(q));
            g.has_edge(e.0, e.1) != g.has_edge(f.0, f.1)
        })
    };
    let c = split_independent(&edge_graph(&u)) && split_independent(&edge_graph(&u.complement()));
    Ok(LemmaGgu { a, b, c })
}
