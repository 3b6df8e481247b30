//! Plain edge-list text: the vertex count on the first line, then one `u v`
//! pair per line. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line, message: String| Error::EdgeList { line, message };
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| err(first, format!("bad vertex count {header:?}")))?;

    let mut g = Graph::with_vertices(n)?;
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(err(line, format!("expected `u v`, got {l:?}")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("bad vertex {s:?}")));
        g.insert_edge(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
