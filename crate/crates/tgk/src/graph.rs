//! Simple undirected graphs, complete multipartite recognition, and
//! maximal clique enumeration.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {0} out of range (order {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0} not allowed")]
    LoopEdge(usize),
    #[error("part size list must be nonempty")]
    EmptyPartList,
    #[error("part sizes must be positive")]
    ZeroPartSize,
}

/// A finite simple graph on vertices `0..n`. No loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the complete multipartite graph with the given part sizes,
    /// vertices numbered consecutively part by part.
    pub fn complete_multipartite(
        sizes: &[usize],
    ) -> Result<(Self, MultipartitePartition), GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::EmptyPartList);
        }
        if sizes.contains(&0) {
            return Err(GraphError::ZeroPartSize);
        }
        let n: usize = sizes.iter().sum();
        let mut g = Graph::new(n)?;
        let mut parts = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            parts.push((start..start + s).collect::<Vec<_>>());
            start += s;
        }
        for (i, p) in parts.iter().enumerate() {
            for q in parts.iter().skip(i + 1) {
                for &u in p {
                    for &v in q {
                        g.add_edge(u, v)?;
                    }
                }
            }
        }
        Ok((g, MultipartitePartition::canonical(parts)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(u, self.n))
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// Ordered partition of a complete multipartite graph into independent parts.
/// Canonical form: parts sorted by size, then least member; vertices within a
/// part ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipartitePartition {
    parts: Vec<Vec<usize>>,
}

impl MultipartitePartition {
    fn canonical(mut parts: Vec<Vec<usize>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort_by_key(|p| (p.len(), p[0]));
        MultipartitePartition { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Index of the part containing `v`, if any.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }
}

/// Result of complete-multipartite recognition. Failure carries a triple
/// (u, v, w) with vw an edge but u adjacent to neither v nor w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultipartiteOutcome {
    Multipartite(MultipartitePartition),
    NotMultipartite { witness: (usize, usize, usize) },
}

impl MultipartiteOutcome {
    pub fn partition(&self) -> Option<&MultipartitePartition> {
        match self {
            MultipartiteOutcome::Multipartite(p) => Some(p),
            MultipartiteOutcome::NotMultipartite { .. } => None,
        }
    }
}

/// Recognizes complete multipartite graphs via the non-adjacency relation:
/// u ~ v iff u = v or uv is not an edge. The graph is complete multipartite
/// exactly when ~ is transitive, in which case its classes are the parts.
///
/// Classes are computed as connected components of the complement; the graph
/// is complete multipartite iff every such component is an independent set.
pub fn recognize_multipartite(g: &Graph) -> MultipartiteOutcome {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for (v, seen_v) in seen.iter_mut().enumerate() {
                if v != u && !*seen_v && !g.has_edge(u, v) {
                    *seen_v = true;
                    comp.push(v);
                    queue.push(v);
                }
            }
        }
        comp.sort_unstable();
        parts.push(comp);
    }
    for p in &parts {
        for (i, &u) in p.iter().enumerate() {
            for &v in &p[i + 1..] {
                if g.has_edge(u, v) {
                    // not multipartite; a violating triple must exist
                    let w = edge_condition_witness(g)
                        .expect("edge inside a complement component implies a violating triple");
                    return MultipartiteOutcome::NotMultipartite { witness: w };
                }
            }
        }
    }
    MultipartiteOutcome::Multipartite(MultipartitePartition::canonical(parts))
}

/// Lexicographically first triple (u, v, w) with vw an edge, uv and uw
/// non-edges. Independent of `recognize_multipartite`'s class construction.
pub fn edge_condition_witness(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.order();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u == v || u == w || v == w {
                    continue;
                }
                if g.has_edge(v, w) && !g.has_edge(v, u) && !g.has_edge(w, u) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFamily {
    Complete,
    Star,
    CompleteBipartite,
    CompleteMultipartite { parts: usize },
    NotMultipartite,
}

impl std::fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphFamily::Complete => write!(f, "complete"),
            GraphFamily::Star => write!(f, "star"),
            GraphFamily::CompleteBipartite => write!(f, "complete_bipartite"),
            GraphFamily::CompleteMultipartite { parts } => {
                write!(f, "complete_multipartite({parts})")
            }
            GraphFamily::NotMultipartite => write!(f, "not_multipartite"),
        }
    }
}

/// Most specific family label for the recognized partition.
pub fn classify_family(g: &Graph) -> GraphFamily {
    match recognize_multipartite(g) {
        MultipartiteOutcome::NotMultipartite { .. } => GraphFamily::NotMultipartite,
        MultipartiteOutcome::Multipartite(p) => {
            let sizes = p.sizes();
            if sizes.iter().all(|&s| s == 1) {
                GraphFamily::Complete
            } else if sizes.len() == 2 && sizes[0] == 1 {
                GraphFamily::Star
            } else if sizes.len() == 2 {
                GraphFamily::CompleteBipartite
            } else {
                GraphFamily::CompleteMultipartite { parts: sizes.len() }
            }
        }
    }
}

/// A graph carries a travel groupoid iff it is connected, or disconnected
/// with no tree component.
pub fn has_travel_groupoid(g: &Graph) -> bool {
    let comps = g.components();
    if comps.len() == 1 {
        return true;
    }
    comps.iter().all(|c| {
        let edges_within = c
            .iter()
            .map(|&u| g.neighbors(u).iter().filter(|v| c.contains(v)).count())
            .sum::<usize>()
            / 2;
        edges_within != c.len() - 1
    })
}

/// All inclusion-maximal cliques, Bron-Kerbosch with pivoting. Each clique
/// is sorted; the list is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: Vec<usize> = (0..g.order()).collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // pivot: highest-degree vertex of P union X
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| g.degree(u))
        .unwrap();
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    let mut p = p;
    for v in candidates {
        r.push(v);
        let next_p = p.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
        let next_x = x.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
        bron_kerbosch(g, r, next_p, next_x, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}
