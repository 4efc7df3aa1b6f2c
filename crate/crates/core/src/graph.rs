//! Per-document disambiguation graph.
//!
//! Nodes are `(mention index, candidate entity)` pairs: an entity that is a
//! candidate of two mentions appears twice. Node `u` links to node `v` when
//! they belong to different mentions and the link index holds
//! `u.entity → v.entity`. Edges are unweighted.

use std::fmt::Write as _;

use crate::candidates::Candidate;
use crate::dict::EntityLinkIndex;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphNode {
    pub entity: String,
    pub mention: usize,
    pub rank: usize,
    pub count: u64,
    pub popularity: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DisambGraph {
    nodes: Vec<GraphNode>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    edge_count: usize,
}

impl DisambGraph {
    /// Builds the graph over the retained candidates of each mention.
    /// `mentions[i]` holds the candidates of mention `i`, in rank order.
    pub fn build(mentions: &[Vec<Candidate>], index: &EntityLinkIndex) -> Self {
        let nodes: Vec<GraphNode> = mentions
            .iter()
            .enumerate()
            .flat_map(|(m, cands)| {
                cands.iter().map(move |c| GraphNode {
                    entity: c.entity.clone(),
                    mention: m,
                    rank: c.rank,
                    count: c.count,
                    popularity: c.popularity,
                })
            })
            .collect();

        let n = nodes.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if nodes[u].mention != nodes[v].mention
                    && index.has_edge(&nodes[u].entity, &nodes[v].entity)
                {
                    edges.push((u, v));
                }
            }
        }
        Self::assemble(nodes, edges)
    }

    /// A graph over `n` anonymous nodes (`"n{i}"`, each its own mention).
    /// Self-loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let nodes = (0..n)
            .map(|i| GraphNode {
                entity: format!("n{i}"),
                mention: i,
                rank: 1,
                count: 1,
                popularity: 1.0,
            })
            .collect();
        let edges: Vec<(usize, usize)> = edges
            .into_iter()
            .inspect(|&(u, v)| assert!(u < n && v < n, "edge ({u}, {v}) out of range"))
            .collect();
        Self::assemble(nodes, edges)
    }

    fn assemble(nodes: Vec<GraphNode>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.retain(|&(u, v)| u != v);
        edges.sort_unstable();
        edges.dedup();
        let n = nodes.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out[u].push(v);
            inc[v].push(u);
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        DisambGraph {
            nodes,
            out,
            inc,
            edge_count: edges.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &GraphNode {
        &self.nodes[i]
    }

    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        &self.inc[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out[i].len()
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.inc[i].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Edges in `(source, target)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Indices of the nodes belonging to `mention`, in rank order.
    pub fn mention_nodes(&self, mention: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(move |(_, n)| n.mention == mention)
            .map(|(i, _)| i)
    }

    /// Graphviz rendering; node labels are `entity` and mention index.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {} {{", quote(name));
        for (i, node) in self.nodes.iter().enumerate() {
            let label = format!("{}\\nmention {}", escape(&node.entity), node.mention);
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  n{u} -> n{v};");
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", escape(s))
}
