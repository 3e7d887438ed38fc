use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses `n` on the first line, then one `u v` pair per line. `#` starts a
/// comment; blank lines are skipped; duplicate edges collapse.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, message: String| Error::EdgeList { line, message };

    let (line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(line, format!("expected a vertex count, found {header:?}")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<_> = l.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(err(line, format!("expected two endpoints, found {l:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line, format!("bad vertex {s:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(err(
                line,
                format!("vertex {} out of range for n = {n}", u.max(v)),
            ));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
