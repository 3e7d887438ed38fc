use crate::catalog::{named, Name};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{parse_edgelist, parse_graph6};

/// Resolves an inline graph literal. Tried in order:
///
/// * `g6:<graph6>` or `mask:<n>:<edge-bit mask>` (explicit forms),
/// * a catalog name such as `P9`, `A6bar` or `cycle:5`,
/// * edge-list text (it starts with a digit or `#`; `;` also separates
///   lines),
/// * bare graph6.
///
/// File references (`@path`) are left to the caller.
pub fn parse_graph_literal(text: &str) -> Result<Graph> {
    let t = text.trim();
    if let Some(g6) = t.strip_prefix("g6:") {
        return parse_graph6(g6);
    }
    if let Some(rest) = t.strip_prefix("mask:") {
        let bad = || Error::InvalidParameter(format!("expected mask:<n>:<mask>, found {t:?}"));
        let (n, mask) = rest.split_once(':').ok_or_else(bad)?;
        let n = n.parse().map_err(|_| bad())?;
        let mask = mask.parse().map_err(|_| bad())?;
        return Graph::from_mask(n, mask);
    }
    if let Ok(name) = t.parse::<Name>() {
        return named(name);
    }
    if t.starts_with(|c: char| c.is_ascii_digit() || c == '#') {
        return parse_edgelist(&t.replace(';', "\n"));
    }
    parse_graph6(t).map_err(|e| match e {
        // reads more like a mistyped catalog name than graph6
        Error::Graph6Byte { .. } | Error::Graph6Length { .. }
            if t.chars()
                .all(|c| c.is_ascii_alphanumeric() || "_:()".contains(c)) =>
        {
            Error::UnknownName(t.to_string())
        }
        e => e,
    })
}
