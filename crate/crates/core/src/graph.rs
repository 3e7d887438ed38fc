//! Finite simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Each vertex keeps its neighbourhood as a `u64` bit set. The canonical
//! serialized view is the edge bit sequence over all pairs `{i, j}`, `i < j`,
//! in lexicographic order; the position of a pair in that sequence is its
//! *edge index* and is what [`crate::edge_graph::EdgeGraph`] uses to number
//! its vertices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (the single-byte graph6 size field).
pub const MAX_VERTICES: usize = 62;

/// Largest vertex count whose edge bit sequence fits in a `u64` mask.
pub const MAX_MASK_VERTICES: usize = 11;

/// `n choose 2`.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}` (`i < j < n`) in lexicographic pair order.
#[inline]
pub const fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Iterates the set bits of `bits` in increasing order.
#[inline]
pub fn bits(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_n(n)?;
        let all = low_bits(n);
        Ok(Self {
            n,
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        })
    }

    /// Builds a graph from a list of pairs. Duplicates collapse; the order of
    /// the endpoints inside a pair does not matter.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from its edge bit mask: bit `p` is the pair with edge
    /// index `p`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_MASK_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_MASK_VERTICES,
            });
        }
        let m = pair_count(n);
        if m < 64 && mask >> m != 0 {
            return Err(Error::Precondition(format!(
                "mask {mask:#x} has bits beyond the {m} pairs of a {n}-vertex graph"
            )));
        }
        let mut g = Self { n, adj: vec![0; n] };
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> p & 1 == 1 {
                    g.set_edge(i, j);
                }
                p += 1;
            }
        }
        Ok(g)
    }

    /// Builds a graph from the lexicographic edge bit sequence.
    pub fn from_edge_bits(n: usize, edge_bits: &[bool]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        if edge_bits.len() != pair_count(n) {
            return Err(Error::Precondition(format!(
                "expected {} edge bits, found {}",
                pair_count(n),
                edge_bits.len()
            )));
        }
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                if edge_bits[p] {
                    g.set_edge(i, j);
                }
                p += 1;
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Self { n, adj }
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bit set of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(i, j)` with `i < j` in edge-index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| bits(self.adj[i] & !low_bits(i + 1)).map(move |j| (i, j)))
    }

    /// Non-edges `(i, j)` with `i < j` in edge-index order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n)
            .flat_map(move |i| bits(!self.adj[i] & all & !low_bits(i + 1)).map(move |j| (i, j)))
    }

    /// The lexicographic edge bit sequence.
    pub fn edge_bits(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(pair_count(self.n));
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.has_edge(i, j));
            }
        }
        out
    }

    /// Edge bit mask, the inverse of [`Graph::from_mask`].
    ///
    /// Panics if the graph has more than [`MAX_MASK_VERTICES`] vertices.
    pub fn mask(&self) -> u64 {
        assert!(
            self.n <= MAX_MASK_VERTICES,
            "graph too large for a u64 mask"
        );
        let mut mask = 0u64;
        let mut p = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    mask |= 1 << p;
                }
                p += 1;
            }
        }
        mask
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        Self {
            n: self.n,
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &r)| !r & all & !(1 << v))
                .collect(),
        }
    }

    /// Subgraph induced on `subset`, relabelled `0..|subset|` in increasing
    /// order, together with the old-to-new index map.
    pub fn induced(&self, subset: &VertexSubset) -> Result<(Self, Vec<Option<usize>>)> {
        if subset.n != self.n {
            return Err(Error::VertexCountMismatch {
                left: self.n,
                right: subset.n,
            });
        }
        let mut map = vec![None; self.n];
        for (new, old) in bits(subset.bits).enumerate() {
            map[old] = Some(new);
        }
        Ok((self.induced_bits(subset.bits), map))
    }

    /// Induced subgraph on the vertex bit set `keep` (no bounds checks).
    pub fn induced_bits(&self, keep: u64) -> Self {
        let members: Vec<usize> = bits(keep & self.vertex_mask()).collect();
        let adj = members
            .iter()
            .map(|&old| {
                let row = self.adj[old];
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| row >> w & 1 == 1)
                    .fold(0u64, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        Self::from_rows(members.len(), adj)
    }

    /// Graph on the same vertices whose edge set is the symmetric difference.
    pub fn boolean_sum(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            n: self.n,
            adj: self
                .adj
                .iter()
                .zip(&other.adj)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Cartesian product; vertex `(i, j)` is numbered `i * other.n() + j`.
    pub fn cartesian_product(&self, other: &Self) -> Result<Self> {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        check_n(n)?;
        let mut g = Self::empty(n)?;
        for i in 0..n1 {
            for j in 0..n2 {
                let v = i * n2 + j;
                for j2 in bits(other.adj[j]) {
                    g.adj[v] |= 1 << (i * n2 + j2);
                }
                for i2 in bits(self.adj[i]) {
                    g.adj[v] |= 1 << (i2 * n2 + j);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_n(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Self { n, adj })
    }

    /// Image of the graph under the vertex map `old -> perm[old]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (old, &new) in perm.iter().enumerate() {
            adj[new] = bits(self.adj[old]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Self { n: self.n, adj }
    }

    pub(crate) fn same_order(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VertexCountMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "])")
    }
}

/// Convenience form of [`Graph::from_edges`].
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

/// A subset of the vertices of an `n`-vertex graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    bits: u64,
}

impl VertexSubset {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u64;
        for &v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << v;
        }
        Ok(Self { n, bits })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_n(n)?;
        if bits & !low_bits(n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - bits.leading_zeros() as usize,
                n,
            });
        }
        Ok(Self { n, bits })
    }

    pub fn all(n: usize) -> Result<Self> {
        Self::from_bits(n, low_bits(n))
    }

    pub fn without(self, v: usize) -> Self {
        Self {
            bits: self.bits & !(1 << v),
            ..self
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    pub fn members(&self) -> impl Iterator<Item = usize> {
        bits(self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        make_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn c4() -> Graph {
        make_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn construction() {
        let g = k3();
        assert_eq!(g, Graph::complete(3).unwrap());
        let single = make_graph(1, &[]).unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.edge_count(), 0);
        let c = c4();
        assert_eq!(c.degrees(), vec![2; 4]);
        assert_eq!(
            c.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            make_graph(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(make_graph(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert!(matches!(
            make_graph(63, &[]),
            Err(Error::TooManyVertices { n: 63, .. })
        ));
        assert!(make_graph(62, &[(0, 61)]).is_ok());
    }

    #[test]
    fn duplicates_collapse() {
        let g = make_graph(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let n = 7;
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(i, j, n), p);
                p += 1;
            }
        }
        assert_eq!(p, pair_count(n));
    }

    #[test]
    fn complement_cases() {
        assert_eq!(k3().complement(), Graph::empty(3).unwrap());
        assert_eq!(c4().complement().complement(), c4());
        let big = make_graph(62, &[(0, 61), (5, 7)]).unwrap();
        assert_eq!(big.complement().complement(), big);
        assert_eq!(big.complement().edge_count(), pair_count(62) - 2);
    }

    #[test]
    fn induced_cases() {
        let s = VertexSubset::new(3, &[0, 1]).unwrap();
        let (g, map) = k3().induced(&s).unwrap();
        assert_eq!(g, make_graph(2, &[(0, 1)]).unwrap());
        assert_eq!(map, vec![Some(0), Some(1), None]);
        let s = VertexSubset::new(4, &[0, 1, 2]).unwrap();
        let (p3, _) = c4().induced(&s).unwrap();
        assert_eq!(p3, make_graph(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(VertexSubset::new(4, &[4]).is_err());
        let wrong = VertexSubset::new(5, &[0]).unwrap();
        assert!(c4().induced(&wrong).is_err());
    }

    #[test]
    fn boolean_sum_cases() {
        let g = c4();
        assert_eq!(g.boolean_sum(&g).unwrap(), Graph::empty(4).unwrap());
        assert_eq!(g.boolean_sum(&Graph::empty(4).unwrap()).unwrap(), g);
        let p3 = make_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            k3().boolean_sum(&p3).unwrap(),
            make_graph(3, &[(0, 2)]).unwrap()
        );
        assert!(g.boolean_sum(&k3()).is_err());
    }

    #[test]
    fn cartesian_product_cases() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.cartesian_product(&c4()).unwrap(), c4());
        let k2 = Graph::complete(2).unwrap();
        let sq = k2.cartesian_product(&k2).unwrap();
        // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
        assert_eq!(
            sq,
            make_graph(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
        );
        let p9 = k3().cartesian_product(&k3()).unwrap();
        assert_eq!(p9.edge_count(), 18);
        assert!(p9.degrees().iter().all(|&d| d == 4));
        let big = Graph::empty(8).unwrap();
        assert!(big.cartesian_product(&big).is_err());
    }

    #[test]
    fn mask_and_bits_roundtrip() {
        let g = c4();
        assert_eq!(Graph::from_mask(4, g.mask()).unwrap(), g);
        assert_eq!(Graph::from_edge_bits(4, &g.edge_bits()).unwrap(), g);
        assert_eq!(Graph::from_mask(4, 0).unwrap(), Graph::empty(4).unwrap());
        assert_eq!(
            Graph::from_mask(4, 63).unwrap(),
            Graph::complete(4).unwrap()
        );
        assert!(Graph::from_mask(3, 8).is_err());
        assert!(Graph::from_mask(12, 0).is_err());
    }

    #[test]
    fn relabel_preserves_edge_count() {
        let g = c4().relabel(&[2, 0, 1, 3]);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(2, 0));
    }
}
