//! Plane two-terminal series-parallel networks.
//!
//! A network is an alternating expression tree over series and parallel
//! joins of single edges; realized, it is a connected acyclic digraph with
//! a source `+`, a sink `−`, all paths oriented source to sink, and edges
//! labeled `1..m` by recursively decomposing the plane drawing left to
//! right and top to bottom. The two arity-2 generators (a 2-chain and a
//! 2-bundle) each span a copy of the associative operad, and the blue/red
//! vertices of a bicolored tree map onto series/parallel joins.

use std::fmt;

use super::bitree::{BicoloredTree, Color};

/// Alternating series-parallel expression: no `Series` child is `Series`,
/// no `Parallel` child is `Parallel`, internal nodes have ≥ 2 children.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpNetwork {
    Edge,
    Series(Vec<SpNetwork>),
    Parallel(Vec<SpNetwork>),
}

impl SpNetwork {
    /// Number of edges of the realized graph.
    pub fn edge_count(&self) -> usize {
        match self {
            SpNetwork::Edge => 1,
            SpNetwork::Series(kids) | SpNetwork::Parallel(kids) => {
                kids.iter().map(|k| k.edge_count()).sum()
            }
        }
    }
}

/// Blue vertices become series joins (the chain pairs with the blue
/// corolla), red vertices parallel joins.
pub fn sp_from_tree(tree: &BicoloredTree) -> SpNetwork {
    match tree {
        BicoloredTree::Leaf => SpNetwork::Edge,
        BicoloredTree::Node { color, children } => {
            let kids = children.iter().map(sp_from_tree).collect();
            match color {
                Color::Blue => SpNetwork::Series(kids),
                Color::Red => SpNetwork::Parallel(kids),
            }
        }
    }
}

/// A node of the realized two-terminal graph: the source `+`, the sink `−`,
/// or a numbered internal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NetNode {
    Source,
    Sink,
    Internal(usize),
}

impl fmt::Display for NetNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetNode::Source => write!(f, "+"),
            NetNode::Sink => write!(f, "-"),
            NetNode::Internal(k) => write!(f, "v{k}"),
        }
    }
}

/// The realized two-terminal digraph: labeled directed edges in canonical
/// order (labels are 1-based and assigned left-to-right within series,
/// top-to-bottom within parallel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedNetwork {
    internal_nodes: usize,
    edges: Vec<(NetNode, NetNode, usize)>,
}

impl RealizedNetwork {
    pub fn edges(&self) -> &[(NetNode, NetNode, usize)] {
        &self.edges
    }

    pub fn internal_node_count(&self) -> usize {
        self.internal_nodes
    }

    /// One `label: from -> to` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (from, to, label) in &self.edges {
            s.push_str(&format!("{label}: {from} -> {to}\n"));
        }
        s
    }

    /// GraphViz rendering with the source labeled `+` and the sink `−`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph sp {\n  rankdir=LR;\n");
        s.push_str("  source [label=\"+\"];\n  sink [label=\"-\"];\n");
        for k in 1..=self.internal_nodes {
            s.push_str(&format!("  v{k} [label=\"\"];\n"));
        }
        let name = |node: &NetNode| match node {
            NetNode::Source => "source".to_string(),
            NetNode::Sink => "sink".to_string(),
            NetNode::Internal(k) => format!("v{k}"),
        };
        for (from, to, label) in &self.edges {
            s.push_str(&format!(
                "  {} -> {} [label=\"{label}\"];\n",
                name(from),
                name(to)
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Realizes the expression tree as a two-terminal digraph, creating
/// internal vertices between consecutive series parts and numbering edges
/// in traversal order.
pub fn sp_realize(net: &SpNetwork) -> RealizedNetwork {
    let mut out = RealizedNetwork {
        internal_nodes: 0,
        edges: Vec::with_capacity(net.edge_count()),
    };
    realize_between(net, NetNode::Source, NetNode::Sink, &mut out);
    out
}

fn realize_between(net: &SpNetwork, from: NetNode, to: NetNode, out: &mut RealizedNetwork) {
    match net {
        SpNetwork::Edge => {
            let label = out.edges.len() + 1;
            out.edges.push((from, to, label));
        }
        SpNetwork::Series(kids) => {
            let mut current = from;
            for (idx, kid) in kids.iter().enumerate() {
                let next = if idx + 1 == kids.len() {
                    to
                } else {
                    out.internal_nodes += 1;
                    NetNode::Internal(out.internal_nodes)
                };
                realize_between(kid, current, next, out);
                current = next;
            }
        }
        SpNetwork::Parallel(kids) => {
            for kid in kids {
                realize_between(kid, from, to, out);
            }
        }
    }
}

/// Number of plane series-parallel networks with `m` edges, by direct
/// generation of alternating expressions.
pub fn count_sp_networks(m: usize) -> u64 {
    generate_sp_networks(m).len() as u64
}

/// Every network with `m` edges. Exponential; for desk-scale cross-checks.
pub fn generate_sp_networks(m: usize) -> Vec<SpNetwork> {
    match m {
        0 => Vec::new(),
        1 => vec![SpNetwork::Edge],
        _ => {
            let mut out = Vec::new();
            collect_compound(m, true, &mut out);
            collect_compound(m, false, &mut out);
            out
        }
    }
}

// All Series (or Parallel) nodes with m total edges whose children are
// edges or the opposite compound kind.
fn collect_compound(m: usize, series: bool, out: &mut Vec<SpNetwork>) {
    fn admissible(n: usize, series: bool) -> Vec<SpNetwork> {
        generate_sp_networks(n)
            .into_iter()
            .filter(|net| match net {
                SpNetwork::Series(_) => !series,
                SpNetwork::Parallel(_) => series,
                SpNetwork::Edge => true,
            })
            .collect()
    }
    fn go(remaining: usize, series: bool, parts: &mut Vec<SpNetwork>, out: &mut Vec<SpNetwork>) {
        if remaining == 0 {
            if parts.len() >= 2 {
                out.push(if series {
                    SpNetwork::Series(parts.clone())
                } else {
                    SpNetwork::Parallel(parts.clone())
                });
            }
            return;
        }
        for size in 1..=remaining {
            if parts.is_empty() && size == remaining {
                continue;
            }
            for part in admissible(size, series) {
                parts.push(part);
                go(remaining - size, series, parts, out);
                parts.pop();
            }
        }
    }
    go(m, series, &mut Vec::new(), out);
}
