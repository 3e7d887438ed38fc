//! The edge-graph `S(U)` and canonical BFS two-colourings.
//!
//! `S(U)` has one vertex per edge of `U`, numbered in edge-index order. Two
//! edges `{x, y}` and `{x, z}` are adjacent iff `{y, z}` is not an edge of
//! `U`. It is a spanning subgraph of the line graph, not the line graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, pair_count, pair_index, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    base: Graph,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl EdgeGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    /// Base edge represented by vertex `k`.
    pub fn edge(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    pub fn edges_of_base(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of vertex `k`.
    pub fn neighbors(&self, k: usize) -> &[usize] {
        &self.adj[k]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Vertex number of base edge `{u, v}`.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    /// Adjacent pairs `(a, b)`, `a < b`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    /// Finds the least triple of pairwise adjacent vertices.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (a, b) in self.adjacent_pairs() {
            for &c in &self.adj[b] {
                if c > b && self.is_adjacent(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }
}

pub fn edge_graph(u: &Graph) -> EdgeGraph {
    let n = u.n();
    let edges: Vec<(usize, usize)> = u.edges().collect();
    let mut number = vec![usize::MAX; pair_count(n)];
    for (k, &(i, j)) in edges.iter().enumerate() {
        number[pair_index(i, j, n)] = k;
    }
    let id = |a: usize, b: usize| number[pair_index(a.min(b), a.max(b), n)];
    let mut adj = vec![Vec::new(); edges.len()];
    for x in 0..n {
        let nb = u.neighbors(x);
        for y in bits(nb) {
            // z > y with {y, z} a non-edge
            for z in bits(nb & !u.neighbors(y) & !((2u64 << y) - 1)) {
                let (a, b) = (id(x, y), id(x, z));
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    EdgeGraph {
        base: u.clone(),
        edges,
        adj,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorComponent {
    pub root: usize,
    pub vertices: Vec<usize>,
}

/// A 2-colouring together with the connected components it was built over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoColoring {
    pub color: Vec<u8>,
    pub components: Vec<ColorComponent>,
}

impl TwoColoring {
    pub fn is_proper(&self, adj: &[Vec<usize>]) -> bool {
        self.color.len() == adj.len()
            && adj
                .iter()
                .enumerate()
                .all(|(a, nb)| nb.iter().all(|&b| self.color[a] != self.color[b]))
    }

    /// Vertices of colour `c`, increasing.
    pub fn class(&self, c: u8) -> Vec<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == c)
            .collect()
    }
}

/// An odd closed walk `v0 v1 .. v(k-1) v0` certifying non-bipartiteness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid_in(&self, adj: &[Vec<usize>]) -> bool {
        let k = self.vertices.len();
        k % 2 == 1
            && self.vertices.iter().all(|&v| v < adj.len())
            && (0..k).all(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                adj[a].contains(&b)
            })
    }
}

/// Canonical BFS 2-colouring of an adjacency-list graph.
///
/// Components are visited in increasing order of their least vertex, which is
/// the root and gets colour 0; neighbours are explored in increasing order.
pub fn two_color(adj: &[Vec<usize>]) -> Result<TwoColoring, OddCycle> {
    let n = adj.len();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        let mut vertices = vec![root];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if color[w] == u8::MAX {
                    color[w] = color[v] ^ 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    vertices.push(w);
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return Err(odd_cycle(v, w, &parent, &depth));
                }
            }
        }
        vertices.sort_unstable();
        components.push(ColorComponent { root, vertices });
    }
    Ok(TwoColoring { color, components })
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    // a and b are adjacent with equal colour: join their tree paths at the LCA
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddCycle { vertices: left }
}

pub fn bipartition(s: &EdgeGraph) -> Result<TwoColoring, OddCycle> {
    two_color(&s.adj)
}

/// Adjacency lists of a bitset graph.
pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| bits(g.neighbors(v)).collect()).collect()
}

/// Canonical 2-colouring of `U` itself.
pub fn graph_two_coloring(g: &Graph) -> Result<TwoColoring, OddCycle> {
    two_color(&adjacency_lists(g))
}

/// Colours each non-edge `{x, y}` of `u` by `c(x) + c(y) mod 2`; the result
/// is a proper colouring of `S(complement(u))`.
///
/// Component roots are the least vertices, but unlike [`bipartition`] a root
/// may carry colour 1.
pub fn parity_coloring(u: &Graph, c: &TwoColoring) -> Result<TwoColoring> {
    if c.color.len() != u.n() {
        return Err(Error::ColoringSize {
            expected: u.n(),
            found: c.color.len(),
        });
    }
    if let Some((x, y)) = u.edges().find(|&(x, y)| c.color[x] == c.color[y]) {
        return Err(Error::ImproperColoring(x, y));
    }
    let s = edge_graph(&u.complement());
    let color: Vec<u8> = s
        .edges
        .iter()
        .map(|&(x, y)| (c.color[x] ^ c.color[y]) & 1)
        .collect();
    let components = connected_components(&s.adj);
    Ok(TwoColoring { color, components })
}

fn connected_components(adj: &[Vec<usize>]) -> Vec<ColorComponent> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for root in 0..adj.len() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let mut vertices = Vec::new();
        while let Some(v) = stack.pop() {
            vertices.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        out.push(ColorComponent { root, vertices });
    }
    out
}
