use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{arg, Error, Result};

/// A digraph on `0..n` with a sorted, duplicate-free arc list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    symmetric: bool,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
            return arg(format!("arc ({u},{v}) out of range for {n} vertices"));
        }
        arcs.sort_unstable();
        arcs.dedup();
        let symmetric = arcs.iter().all(|&(u, v)| arcs.binary_search(&(v, u)).is_ok());
        Ok(Digraph { n, arcs, symmetric })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Whether the arc set is closed under reversal.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    /// Out-neighbour lists, each sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
        }
        adj
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    /// The common out-valency, if every vertex has the same one.
    pub fn out_valency(&self) -> Option<usize> {
        let deg = self.out_degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// Arc set closed under reversal.
    pub fn underlying_graph(&self) -> Digraph {
        let arcs: BTreeSet<(usize, usize)> = self.arcs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        Digraph {
            n: self.n,
            arcs: arcs.into_iter().collect(),
            symmetric: true,
        }
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (v, u))).expect("same vertex set")
    }

    /// Text export: `n m`, then one line per edge `u v` with `u < v` for
    /// symmetric digraphs; otherwise every arc followed by a `directed` line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.symmetric {
            let edges: Vec<_> = self.arcs.iter().filter(|(u, v)| u < v).collect();
            writeln!(out, "{} {}", self.n, edges.len()).unwrap();
            for (u, v) in edges {
                writeln!(out, "{u} {v}").unwrap();
            }
        } else {
            writeln!(out, "{} {}", self.n, self.arcs.len()).unwrap();
            for (u, v) in &self.arcs {
                writeln!(out, "{u} {v}").unwrap();
            }
            out.push_str("directed\n");
        }
        out
    }

    /// Inverse of [`Digraph::to_edge_list`].
    pub fn from_edge_list(text: &str) -> Result<Digraph> {
        let parse_err = |line: usize, column: usize, message: &str| Error::Parse {
            line,
            column,
            message: message.into(),
        };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| parse_err(1, 1, "missing header"))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let [n, m] = nums.as_slice() else {
            return Err(parse_err(hl + 1, 1, "header must be `n m`"));
        };
        let n: usize = n.parse().map_err(|_| parse_err(hl + 1, 1, "bad vertex count"))?;
        let m: usize = m.parse().map_err(|_| parse_err(hl + 1, 1, "bad edge count"))?;
        let mut pairs = Vec::with_capacity(m);
        let mut directed = false;
        for (i, line) in lines {
            let t = line.trim();
            if t == "directed" {
                directed = true;
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(parse_err(i + 1, 1, "expected `u v`"));
            };
            let u: usize = u.parse().map_err(|_| parse_err(i + 1, 1, "bad vertex"))?;
            let v: usize = v.parse().map_err(|_| parse_err(i + 1, line.find(v).unwrap_or(0) + 1, "bad vertex"))?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(parse_err(1, 1, &format!("header announces {m} lines, found {}", pairs.len())));
        }
        if directed {
            Digraph::new(n, pairs)
        } else {
            Digraph::new(n, pairs.into_iter().flat_map(|(u, v)| [(u, v), (v, u)]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_becomes_edge() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(!d.is_symmetric());
        let g = d.underlying_graph();
        assert_eq!(g.arcs(), &[(0, 1), (1, 0)]);
        assert!(g.is_symmetric());
        assert_eq!(g.underlying_graph(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(Digraph::from_edge_list(&d.to_edge_list()).unwrap(), d);
        let g = d.underlying_graph();
        let text = g.to_edge_list();
        assert!(text.starts_with("3 3\n"));
        assert_eq!(Digraph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(Digraph::new(2, [(0, 2)]).is_err());
    }
}
