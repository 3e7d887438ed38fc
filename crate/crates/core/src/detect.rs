//! Small pattern searches: homogeneous triples, claws, triangles and the
//! shapes of connected components.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, low_bits, Graph};

/// The 3-uniform hypergraph of homogeneous triples of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleHypergraph {
    pub n: usize,
    /// Sorted triples, in lexicographic order.
    pub hyperedges: Vec<[usize; 3]>,
}

impl TripleHypergraph {
    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }

    pub fn contains(&self, mut t: [usize; 3]) -> bool {
        t.sort_unstable();
        self.hyperedges.binary_search(&t).is_ok()
    }
}

#[inline]
fn above(v: usize) -> u64 {
    !low_bits(v + 1)
}

/// Is `{a, b, c}` a clique or an independent set?
#[inline]
pub fn is_homogeneous(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let s = g.has_edge(a, b) as u8 + g.has_edge(a, c) as u8 + g.has_edge(b, c) as u8;
    s == 0 || s == 3
}

pub fn h3(g: &Graph) -> TripleHypergraph {
    let n = g.n();
    let mut hyperedges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_homogeneous(g, a, b, c) {
                    hyperedges.push([a, b, c]);
                }
            }
        }
    }
    TripleHypergraph { n, hyperedges }
}

/// An induced claw: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl ClawWitness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.leaves;
        let all = [self.center, a, b, c];
        all.iter().all(|&v| v < g.n())
            && all
                .iter()
                .enumerate()
                .all(|(i, v)| !all[i + 1..].contains(v))
            && self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && !g.has_edge(a, b)
            && !g.has_edge(a, c)
            && !g.has_edge(b, c)
    }
}

/// Lexicographically least induced claw `(center, leaves)`, if any.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for center in 0..g.n() {
        let nb = g.neighbors(center);
        if nb.count_ones() < 3 {
            continue;
        }
        for a in bits(nb) {
            let after_a = nb & !g.neighbors(a) & above(a);
            for b in bits(after_a) {
                if let Some(c) = bits(after_a & !g.neighbors(b) & above(b)).next() {
                    return Some(ClawWitness {
                        center,
                        leaves: [a, b, c],
                    });
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// Least triple inducing a triangle.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for b in bits(g.neighbors(a) & above(a)) {
            if let Some(c) = bits(g.neighbors(a) & g.neighbors(b) & above(b)).next() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Least triple inducing an independent set.
pub fn find_cotriangle(g: &Graph) -> Option<[usize; 3]> {
    let all = g.vertex_mask();
    for a in 0..g.n() {
        let na = !g.neighbors(a) & all & above(a);
        for b in bits(na) {
            if let Some(c) = bits(na & !g.neighbors(b) & above(b)).next() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Membership in the class of graphs where neither the graph nor its
/// complement has an induced claw, decided by direct search.
pub fn is_forb_bruteforce(g: &Graph) -> bool {
    is_claw_free(g) && is_claw_free(&g.complement())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    /// A cycle on `length` vertices.
    Cycle {
        length: usize,
    },
    /// A path on `length >= 2` vertices.
    Path {
        length: usize,
    },
    Isolated,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentShape {
    #[serde(flatten)]
    pub shape: Shape,
    pub vertices: Vec<usize>,
}

impl ComponentShape {
    /// Cycle of length at least `min_cycle`, path or isolated vertex; with
    /// `even_cycles` set, cycles must also have even length.
    pub fn is_simple(&self, min_cycle: usize, even_cycles: bool) -> bool {
        match self.shape {
            Shape::Cycle { length } => length >= min_cycle && (!even_cycles || length % 2 == 0),
            Shape::Path { .. } | Shape::Isolated => true,
            Shape::Other => false,
        }
    }

    /// Recomputes the shape from the graph and compares.
    pub fn is_exact_in(&self, g: &Graph) -> bool {
        let mut vs = 0u64;
        for &v in &self.vertices {
            if v >= g.n() {
                return false;
            }
            vs |= 1 << v;
        }
        // must be a whole connected component
        if vs == 0 || component_of(g, self.vertices[0]) != vs {
            return false;
        }
        classify_component(g, vs) == self.shape
    }
}

/// Vertex set of the connected component containing `v`.
pub fn component_of(g: &Graph, v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0u64, |acc, w| acc | g.neighbors(w)) & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Vertex sets of connected components, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut left = g.vertex_mask();
    let mut out = Vec::new();
    while left != 0 {
        let c = component_of(g, left.trailing_zeros() as usize);
        out.push(c);
        left &= !c;
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || component_of(g, 0) == g.vertex_mask()
}

fn classify_component(g: &Graph, comp: u64) -> Shape {
    let k = comp.count_ones() as usize;
    if k == 1 {
        return Shape::Isolated;
    }
    let mut max_deg = 0;
    let mut degree_sum = 0;
    for v in bits(comp) {
        let d = (g.neighbors(v) & comp).count_ones() as usize;
        max_deg = max_deg.max(d);
        degree_sum += d;
    }
    let e = degree_sum / 2;
    match (max_deg <= 2, e) {
        (true, e) if e + 1 == k => Shape::Path { length: k },
        (true, e) if e == k => Shape::Cycle { length: k },
        _ => Shape::Other,
    }
}

pub fn component_shapes(g: &Graph) -> Vec<ComponentShape> {
    components(g)
        .into_iter()
        .map(|c| ComponentShape {
            shape: classify_component(g, c),
            vertices: bits(c).collect(),
        })
        .collect()
}
