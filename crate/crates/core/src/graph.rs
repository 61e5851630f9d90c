//! Simple undirected graphs with dense 0-based vertex indices, plus the
//! structural operations every solver relies on: line graphs with their
//! edge/vertex correspondence, Cartesian products, isolated-vertex padding
//! and connected components.
//!
//! Edges are kept in canonical lexicographic order so that an [`EdgeId`]
//! doubles as the index of the corresponding vertex of the line graph,
//! deterministically across runs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an edge in a graph's canonical (lexicographic) edge order.
///
/// For a graph `G`, `EdgeId` `i` is also the index of the vertex of `L(G)`
/// that corresponds to that edge.
pub type EdgeId = usize;

/// A finite simple undirected graph: no loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a validated simple graph from a vertex count and an edge list.
    ///
    /// Rejects loops, duplicate pairs (in either orientation) and endpoints
    /// that are not `< n`.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order; entry `i` is the edge with [`EdgeId`] `i`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Endpoints of the edge with canonical id `id`.
    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Number of degree-0 vertices.
    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertex partition into connected components, each sorted ascending,
    /// components ordered by their smallest vertex. The empty graph yields
    /// an empty partition.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// The subgraph induced by `vertices` (which must be sorted), with
    /// vertices renumbered 0..k in that order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        Self::from_sorted_edges(vertices.len(), edges)
    }

    /// Per-vertex adjacency bitmasks. Only valid for `n <= 64`; solvers
    /// check their search budgets before calling this.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// DOT rendering with optional vertex and edge labels.
    pub fn to_dot_labelled(
        &self,
        vertex_label: Option<&dyn Fn(usize) -> String>,
        edge_label: Option<&dyn Fn(EdgeId) -> String>,
    ) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            match vertex_label {
                Some(f) => writeln!(out, "  v{v} [label=\"{}\"];", f(v)).unwrap(),
                None => writeln!(out, "  v{v};").unwrap(),
            }
        }
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            match edge_label {
                Some(f) => writeln!(out, "  v{u} -- v{v} [label=\"{}\"];", f(id)).unwrap(),
                None => writeln!(out, "  v{u} -- v{v};").unwrap(),
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_labelled(None, None)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// A graph together with its line graph and the edge/vertex correspondence.
///
/// Vertex `i` of the line graph is the edge `base.edge(i)`; two line
/// vertices are adjacent exactly when the corresponding edges share an
/// endpoint.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    base: Graph,
    line: Graph,
}

impl LineGraphMap {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn line(&self) -> &Graph {
        &self.line
    }

    /// The edge of the base graph represented by line vertex `v`.
    pub fn edge_of_vertex(&self, v: usize) -> (usize, usize) {
        self.base.edge(v)
    }

    /// The line vertex representing base edge `{u, v}`, if present.
    pub fn vertex_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.base.edge_id(u, v)
    }
}

/// Constructs the line graph of `g`.
///
/// An edgeless graph yields the empty line graph. Since distinct edges of a
/// simple graph share at most one endpoint, every adjacent line pair arises
/// from exactly one shared endpoint.
pub fn line_graph(g: &Graph) -> LineGraphMap {
    let m = g.edge_count();
    let mut line_edges = Vec::new();
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    for ids in &incident {
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                line_edges.push((ids[i].min(ids[j]), ids[i].max(ids[j])));
            }
        }
    }
    line_edges.sort_unstable();
    LineGraphMap {
        base: g.clone(),
        line: Graph::from_sorted_edges(m, line_edges),
    }
}

/// Cartesian product. Vertex `(i, j)` of `g x h` is flattened to
/// `i * h.vertex_count() + j`; `(i,j) ~ (i',j')` iff the pairs agree in one
/// coordinate and are adjacent in the other factor.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let mut edges = Vec::with_capacity(
        g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count(),
    );
    for i in 0..g.vertex_count() {
        for &(a, b) in h.edges() {
            edges.push((i * nh + a, i * nh + b));
        }
    }
    for &(x, y) in g.edges() {
        for j in 0..nh {
            edges.push((x * nh + j, y * nh + j));
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_edges(g.vertex_count() * nh, edges)
}

/// Returns `g` plus `k` new degree-0 vertices. The line graph of the result
/// is identical (not merely isomorphic) to the line graph of `g`.
pub fn add_isolated(g: &Graph, k: usize) -> Graph {
    Graph::from_sorted_edges(g.vertex_count() + k, g.edges().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn cycle_graph_from_edge_list() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn line_graph_of_path_and_star() {
        // P_3 -> P_2
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let l = line_graph(&p3);
        assert_eq!(l.line().vertex_count(), 2);
        assert_eq!(l.line().edge_count(), 1);

        // K_{1,3} -> K_3: star edges are pairwise incident
        let star = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        let l = line_graph(&star);
        assert_eq!(l.line().vertex_count(), 3);
        assert_eq!(l.line().edge_count(), 3);
    }

    #[test]
    fn line_graph_of_c6_is_c6() {
        // the cycle is the one connected graph isomorphic to its line graph
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let l = line_graph(&c6).line().clone();
        assert_eq!(l.vertex_count(), 6);
        assert_eq!(l.edge_count(), 6);
        assert!((0..6).all(|v| l.degree(v) == 2));
        assert!(l.is_connected());
    }

    #[test]
    fn line_degree_identity() {
        let g = generate(&FamilySpec::CompleteBipartite { m: 2, n: 3 }).unwrap();
        let lgm = line_graph(&g);
        for v in 0..lgm.line().vertex_count() {
            let (a, b) = lgm.edge_of_vertex(v);
            assert_eq!(lgm.line().degree(v), g.degree(a) + g.degree(b) - 2);
        }
    }

    #[test]
    fn product_counts() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let prod = cartesian_product(&p3, &c4);
        assert_eq!(prod.vertex_count(), 12);
        assert_eq!(prod.edge_count(), 20);
    }

    #[test]
    fn product_of_two_edges_is_a_square() {
        let p2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let sq = cartesian_product(&p2, &p2);
        assert_eq!(sq.vertex_count(), 4);
        assert_eq!(sq.edge_count(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
    }

    #[test]
    fn product_with_single_vertex_is_identity() {
        let p1 = generate(&FamilySpec::Path { n: 1 }).unwrap();
        let g = generate(&FamilySpec::Star { leaves: 4 }).unwrap();
        assert_eq!(cartesian_product(&p1, &g), g);
    }

    #[test]
    fn isolated_padding() {
        let c3 = generate(&FamilySpec::Cycle { n: 3 }).unwrap();
        let padded = add_isolated(&c3, 2);
        assert_eq!(padded.vertex_count(), 5);
        assert_eq!(padded.edge_count(), 3);
        assert_eq!(line_graph(&padded).line(), line_graph(&c3).line());

        let k1 = add_isolated(&Graph::empty(0), 1);
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(add_isolated(&generate(&FamilySpec::Path { n: 2 }).unwrap(), 0).vertex_count(), 2);
    }

    #[test]
    fn components() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert_eq!(c4.connected_components(), vec![vec![0, 1, 2, 3]]);

        let g = add_isolated(&generate(&FamilySpec::Cycle { n: 3 }).unwrap(), 2);
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].len(), 3);

        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn json_round_trip_normalizes() {
        let g = Graph::new(3, &[(2, 1), (0, 2)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":3,"edges":[[0,2],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);

        let bad: std::result::Result<Graph, _> = serde_json::from_str(r#"{"n":2,"edges":[[0,0]]}"#);
        assert!(bad.is_err());
    }
}
