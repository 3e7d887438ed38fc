//! The checkable properties. Each check compares two independently computed
//! answers, or re-validates a certificate, on a single graph (or pair).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::catalog::{named, nine, Name};
use crate::detect::{
    component_shapes, find_claw, find_cotriangle, find_triangle, h3, is_claw_free, is_connected,
    is_forb_bruteforce,
};
use crate::edge_graph::{bipartition, edge_graph, graph_two_coloring, parity_coloring};
use crate::error::Error;
use crate::graph::{bits, Graph};
use crate::iso::is_isomorphic;
use crate::theorem::{classify, condition3, decompose, lemma_ggu_check};

pub type Tally = BTreeMap<String, u64>;
pub type Check = Result<(), &'static str>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Classifier verdicts agree with the brute-force claw search, and every
    /// certificate re-validates.
    Theorem1,
    /// Decomposable iff both edge-graphs are bipartite iff the structural
    /// condition holds; every decomposition is sound.
    Theorem2,
    /// Claw-free iff the edge-graph is triangle-free.
    Formula1,
    /// Claw-free and triangle-free iff every component is a cycle of length
    /// at least 4, a path or an isolated vertex.
    LemmaTrivial,
    /// Members with a triangle and an independent triple are among the nine
    /// catalog graphs.
    CaseAnalysis,
    /// The auxiliary claims used by the case analysis.
    Claims,
    /// The three conditions of the Boolean sum lemma agree (pairs of graphs).
    LemmaGgu,
    /// Structural consequences for decomposable graphs.
    Thm2Consequences,
    /// Parity colourings of bipartite graphs properly colour `S(complement)`.
    Parity,
    /// BFS bipartition agrees with an exhaustive odd-cycle search.
    Bipartition,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Theorem1,
        Property::Theorem2,
        Property::Formula1,
        Property::LemmaTrivial,
        Property::CaseAnalysis,
        Property::Claims,
        Property::LemmaGgu,
        Property::Thm2Consequences,
        Property::Parity,
        Property::Bipartition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Theorem1 => "theorem1",
            Property::Theorem2 => "theorem2",
            Property::Formula1 => "formula1",
            Property::LemmaTrivial => "lemma_trivial",
            Property::CaseAnalysis => "caseanalysis",
            Property::Claims => "claims",
            Property::LemmaGgu => "lemma_ggu",
            Property::Thm2Consequences => "thm2_consequences",
            Property::Parity => "parity",
            Property::Bipartition => "bipartition",
        }
    }

    /// Quantifies over ordered pairs of graphs rather than single graphs.
    pub fn is_pair_property(self) -> bool {
        self == Property::LemmaGgu
    }

    pub(crate) fn check(self, u: &Graph, tally: &mut Tally) -> Check {
        match self {
            Property::Theorem1 => theorem1(u),
            Property::Theorem2 => theorem2(u),
            Property::Formula1 => formula1(u),
            Property::LemmaTrivial => lemma_trivial(u),
            Property::CaseAnalysis => case_analysis(u, tally),
            Property::Claims => claims(u),
            Property::Thm2Consequences => thm2_consequences(u),
            Property::Parity => parity(u),
            Property::Bipartition => bipartition_oracle(u),
            Property::LemmaGgu => unreachable!("pair property"),
        }
    }

    pub(crate) fn check_pair(self, g: &Graph, g2: &Graph, tally: &mut Tally) -> Check {
        debug_assert_eq!(self, Property::LemmaGgu);
        let r = lemma_ggu_check(g, g2).map_err(|_| "vertex counts differ")?;
        let key = if r.a {
            "equivalent_true"
        } else {
            "equivalent_false"
        };
        if r.agree() {
            *tally.entry(key.to_string()).or_default() += 1;
            Ok(())
        } else {
            Err("conditions (a), (b), (c) disagree")
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

fn theorem1(u: &Graph) -> Check {
    let cert = classify(u);
    if cert.is_member() != is_forb_bruteforce(u) {
        return Err("classifier disagrees with brute force");
    }
    cert.validate(u)
}

fn formula1(u: &Graph) -> Check {
    if is_claw_free(u) == edge_graph(u).find_triangle().is_none() {
        Ok(())
    } else {
        Err("claw-freeness and triangle-freeness of S(U) disagree")
    }
}

fn lemma_trivial(u: &Graph) -> Check {
    let lhs = is_claw_free(u) && find_triangle(u).is_none();
    let rhs = component_shapes(u).iter().all(|s| s.is_simple(4, false));
    if lhs == rhs {
        Ok(())
    } else {
        Err("claw- and triangle-freeness disagree with component shapes")
    }
}

/// Exhaustive odd-cycle search: walks in the doubled graph (vertex, parity)
/// from each start; an odd closed walk exists iff some `(s, 1)` is reached
/// from `(s, 0)`.
pub(crate) fn has_odd_cycle(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    for s in 0..n {
        let mut seen = vec![[false; 2]; n];
        seen[s][0] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, p)) = stack.pop() {
            for &w in &adj[v] {
                let q = p ^ 1;
                if !seen[w][q] {
                    if w == s && q == 1 {
                        return true;
                    }
                    seen[w][q] = true;
                    stack.push((w, q));
                }
            }
        }
    }
    false
}

fn theorem2(u: &Graph) -> Check {
    let su = edge_graph(u);
    let sc = edge_graph(&u.complement());
    let both_bipartite = !has_odd_cycle(su.adjacency()) && !has_odd_cycle(sc.adjacency());
    let cond = condition3(u);
    cond.validate(u)?;
    let decomposition = decompose(u);
    match &decomposition {
        Ok(d) => d.validate(u)?,
        Err(o) => o.validate(u)?,
    }
    if decomposition.is_ok() != both_bipartite {
        return Err("decompose disagrees with bipartiteness of the edge-graphs");
    }
    if cond.holds() != both_bipartite {
        return Err("structural condition disagrees with bipartiteness of the edge-graphs");
    }
    Ok(())
}

fn thm2_consequences(u: &Graph) -> Check {
    if decompose(u).is_err() {
        return Ok(());
    }
    let triangle_free = find_triangle(u).is_none();
    if !is_connected(u) && !triangle_free {
        return Err("decomposable, disconnected and not triangle-free");
    }
    if triangle_free {
        if !component_shapes(u).iter().all(|s| s.is_simple(3, true)) {
            return Err("decomposable triangle-free graph has a bad component");
        }
        if graph_two_coloring(u).is_err() {
            return Err("decomposable triangle-free graph is not bipartite");
        }
    }
    Ok(())
}

fn parity(u: &Graph) -> Check {
    let Ok(c) = graph_two_coloring(u) else {
        return Ok(());
    };
    let p = parity_coloring(u, &c).map_err(|_| "parity colouring rejected a proper colouring")?;
    let sc = edge_graph(&u.complement());
    if !p.is_proper(sc.adjacency()) {
        return Err("parity colouring is not proper on S(complement U)");
    }
    if bipartition(&sc).is_err() {
        return Err("bipartite U with non-bipartite S(complement U)");
    }
    Ok(())
}

fn bipartition_oracle(u: &Graph) -> Check {
    for base in [u.clone(), u.complement()] {
        let s = edge_graph(&base);
        let odd = has_odd_cycle(s.adjacency());
        match bipartition(&s) {
            Ok(c) => {
                if odd {
                    return Err("coloured a graph with an odd cycle");
                }
                if !c.is_proper(s.adjacency()) {
                    return Err("BFS colouring is not proper");
                }
                if c.components.iter().any(|comp| c.color[comp.root] != 0) {
                    return Err("component root not coloured 0");
                }
            }
            Err(cycle) => {
                if !odd {
                    return Err("odd-cycle certificate for a bipartite graph");
                }
                if !cycle.is_valid_in(s.adjacency()) {
                    return Err("odd-cycle certificate is not an odd closed walk");
                }
            }
        }
    }
    Ok(())
}

fn triangles(u: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    for a in 0..u.n() {
        for b in bits(u.neighbors(a) >> (a + 1) << (a + 1)) {
            for c in bits(u.neighbors(a) & u.neighbors(b) >> (b + 1) << (b + 1)) {
                out.push(1 << a | 1 << b | 1 << c);
            }
        }
    }
    out
}

fn case_analysis(u: &Graph, tally: &mut Tally) -> Check {
    if !is_forb_bruteforce(u) || find_triangle(u).is_none() || find_cotriangle(u).is_none() {
        return Ok(());
    }
    let Some(entry) = nine().iter().find(|e| is_isomorphic(u, &e.graph).is_some()) else {
        return Err("member with a triangle and an independent triple outside the nine");
    };
    *tally.entry(entry.name.to_string()).or_default() += 1;
    if u.n() == 5 && entry.name != Name::B5 {
        return Err("five-vertex case is not the bull");
    }
    // disjoint triangle and independent triple only in A6 and its complement
    let ind = triangles(&u.complement());
    let disjoint = triangles(u).iter().any(|t| ind.iter().any(|i| t & i == 0));
    if disjoint != matches!(entry.name, Name::A6 | Name::A6Bar) {
        return Err("disjoint triangle and independent triple outside A6 / complement");
    }
    Ok(())
}

fn claims(u: &Graph) -> Check {
    let n = u.n();
    let all = u.vertex_mask();
    let comp = u.complement();
    let forb = is_forb_bruteforce(u);
    let tri = triangles(u);
    let ind = triangles(&comp);

    // every vertex of degree >= 3 in a claw-free graph lies in a triangle
    if find_claw(u).is_none() {
        for x in 0..n {
            if u.degree(x) >= 3 && !tri.iter().any(|t| t >> x & 1 == 1) {
                return Err("claim triangle: degree >= 3 vertex outside every triangle");
            }
        }
    }

    // a triangle and an independent triple can be chosen to meet; when a
    // disjoint pair exists there are at least five homogeneous triples (the
    // bull, with a meeting pair only, has two)
    if !tri.is_empty() && !ind.is_empty() {
        if !tri.iter().any(|t| ind.iter().any(|i| t & i != 0)) {
            return Err("claim disjointtriangle: no meeting triangle / independent triple");
        }
        let disjoint = tri.iter().any(|t| ind.iter().any(|i| t & i == 0));
        if disjoint && h3(u).len() < 5 {
            return Err(
                "claim disjointtriangle: disjoint pair but fewer than five homogeneous triples",
            );
        }
    }

    // the four-point exchange condition characterises the class
    let mut syntactic = true;
    'syn: for x in 0..n {
        for y in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if x == y || a == b || [a, b].iter().any(|&v| v == x || v == y) {
                        continue;
                    }
                    let (xa, xb, ya, yb) = (
                        u.has_edge(x, a),
                        u.has_edge(x, b),
                        u.has_edge(y, a),
                        u.has_edge(y, b),
                    );
                    if xa == xb && xb != ya && ya == yb && u.has_edge(x, y) != u.has_edge(a, b) {
                        syntactic = false;
                        break 'syn;
                    }
                }
            }
        }
    }
    if syntactic != forb {
        return Err("claim syntaxic: exchange condition disagrees with membership");
    }
    if !forb {
        return Ok(());
    }

    for x in 0..n {
        for y in 0..n {
            if x != y && (u.neighbors(x) & comp.neighbors(y)).count_ones() > 2 {
                return Err("claim voisinage: |N(x) n N_bar(y)| > 2");
            }
        }
    }

    let bull = named(Name::B5).unwrap();
    for &t in &tri {
        for &i in &ind {
            if t & i != 0 && is_isomorphic(&u.induced_bits(t | i), &bull).is_none() {
                return Err(
                    "claim bull1: meeting triangle and independent triple do not form a bull",
                );
            }
        }
    }

    let a6bar = named(Name::A6Bar).unwrap();
    let e6bar = named(Name::E6Bar).unwrap();
    let p9eb = named(Name::P9MinusEdgeBar).unwrap();
    for &i in &ind {
        for x in bits(i) {
            let nx = u.neighbors(x);
            // two triangles through x never share a further vertex
            for b in bits(nx) {
                if (nx & u.neighbors(b)).count_ones() > 1 {
                    return Err("claim 2k3k3bar: two triangles through x share an edge");
                }
            }
            let d = nx.count_ones();
            if d > 4 {
                return Err("claim degre4: degree above 4");
            }
            let w = u.induced_bits((i | nx) & all);
            let ok = match d {
                3 => is_isomorphic(&w, &a6bar).is_some() || is_isomorphic(&w, &e6bar).is_some(),
                4 => is_isomorphic(&w, &p9eb).is_some(),
                _ => true,
            };
            if !ok {
                return Err("claim degre4: neighbourhood graph has the wrong shape");
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge_graph::adjacency_lists;

    #[test]
    fn names_roundtrip() {
        for p in Property::ALL {
            assert_eq!(p.as_str().parse::<Property>().unwrap(), p);
        }
        assert!("theorem3".parse::<Property>().is_err());
    }

    #[test]
    fn odd_cycle_oracle() {
        let c5 = named(Name::Cycle(5)).unwrap();
        assert!(has_odd_cycle(&adjacency_lists(&c5)));
        let c6 = named(Name::Cycle(6)).unwrap();
        assert!(!has_odd_cycle(&adjacency_lists(&c6)));
        assert!(!has_odd_cycle(&[]));
    }

    #[test]
    fn catalog_graphs_pass_every_single_graph_property() {
        let mut tally = Tally::new();
        for name in Name::FIXED {
            let g = named(name).unwrap();
            for p in Property::ALL.into_iter().filter(|p| !p.is_pair_property()) {
                assert_eq!(p.check(&g, &mut tally), Ok(()), "{p} on {name}");
            }
        }
    }
}
