//! Isomorphism, induced embeddings and canonical codes for small graphs.
//!
//! All three share one backtracking matcher: pattern vertices are placed in
//! a connectivity-first order, and a host vertex is accepted only if its
//! adjacency to every already-placed image agrees with the pattern.

use crate::error::{Error, Result};
use crate::graph::{bits, pair_count, Graph};

/// Largest vertex count accepted by [`canonical_code`].
pub const MAX_CANONICAL_VERTICES: usize = 10;

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    allowed: Vec<u64>,
    image: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Graph, host: &'a Graph, allowed: Vec<u64>) -> Self {
        let n = pattern.n();
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        while order.len() < n {
            // most placed neighbours first, then fewest candidates
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        std::cmp::Reverse(allowed[v].count_ones()),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            order.push(next);
            placed |= 1 << next;
        }
        Self {
            pattern,
            host,
            order,
            allowed,
            image: vec![usize::MAX; n],
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.search(0, 0) {
            Some(self.image)
        } else {
            None
        }
    }

    fn search(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let pattern_nb = self.pattern.neighbors(v);
        let mut want_adj = 0u64;
        let mut placed_img = 0u64;
        for &u in &self.order[..depth] {
            placed_img |= 1 << self.image[u];
            if pattern_nb >> u & 1 == 1 {
                want_adj |= 1 << self.image[u];
            }
        }
        for w in bits(self.allowed[v] & !used) {
            if self.host.neighbors(w) & placed_img != want_adj {
                continue;
            }
            self.image[v] = w;
            if self.search(depth + 1, used | 1 << w) {
                return true;
            }
        }
        self.image[v] = usize::MAX;
        false
    }
}

fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Returns `phi` with `{i, j} in E(g) <=> {phi[i], phi[j]} in E(h)`, or `None`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sg: Vec<_> = (0..g.n()).map(|v| signature(g, v)).collect();
    let sh: Vec<_> = (0..h.n()).map(|v| signature(h, v)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let allowed = sg
        .iter()
        .map(|s| {
            sh.iter()
                .enumerate()
                .filter(|(_, t)| *t == s)
                .fold(0u64, |acc, (w, _)| acc | 1 << w)
        })
        .collect();
    Matcher::new(g, h, allowed).run()
}

/// Finds an injection `phi` of the vertices of `pattern` into `host` such that
/// `pattern` is isomorphic to the subgraph of `host` induced on the image.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let (pn, hn) = (pattern.n(), host.n());
    let allowed = (0..pn)
        .map(|v| {
            let (d, cd) = (pattern.degree(v), pn - 1 - pattern.degree(v));
            (0..hn)
                .filter(|&w| host.degree(w) >= d && hn - 1 - host.degree(w) >= cd)
                .fold(0u64, |acc, w| acc | 1 << w)
        })
        .collect();
    Matcher::new(pattern, host, allowed).run()
}

/// Checks that `phi` is an induced embedding of `pattern` into `host`.
pub fn is_induced_embedding(pattern: &Graph, host: &Graph, phi: &[usize]) -> bool {
    if phi.len() != pattern.n() || phi.iter().any(|&w| w >= host.n()) {
        return false;
    }
    let mut seen = 0u64;
    for &w in phi {
        if seen >> w & 1 == 1 {
            return false;
        }
        seen |= 1 << w;
    }
    (0..pattern.n()).all(|i| {
        (i + 1..pattern.n()).all(|j| pattern.has_edge(i, j) == host.has_edge(phi[i], phi[j]))
    })
}

/// Checks that `phi` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    g.n() == h.n() && is_induced_embedding(g, h, phi)
}

/// Minimum of the lexicographic edge bit sequence over all relabellings.
///
/// The sequence is packed into a `u64` with the first pair in the most
/// significant used position, so integer order is sequence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    code: u64,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.code
    }

    pub fn to_bits(&self) -> Vec<bool> {
        let m = pair_count(self.n);
        (0..m).map(|p| self.code >> (m - 1 - p) & 1 == 1).collect()
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::Guard {
            what: "canonical_code vertex count",
            value: n,
            max: MAX_CANONICAL_VERTICES,
        });
    }
    let m = pair_count(n);
    let code_of = |q: &[usize]| {
        let mut code = 0u64;
        for i in 0..n {
            let row = g.neighbors(q[i]);
            for &qj in &q[i + 1..n] {
                code = code << 1 | (row >> qj & 1);
            }
        }
        code
    };
    // Heap's algorithm over the inverse permutation q (new position -> old vertex).
    let mut q: Vec<usize> = (0..n).collect();
    let mut best = code_of(&q);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                q.swap(0, i);
            } else {
                q.swap(c[i], i);
            }
            best = best.min(code_of(&q));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    debug_assert!(m == 0 || best >> m == 0);
    Ok(CanonicalCode { n, code: best })
}
