//! v-spanning trees: rooted spanning trees forced to contain every edge at
//! the root. Enumeration goes through star contraction plus recursive edge
//! contraction/deletion; counting goes through the Kirchhoff minor of the
//! contracted multigraph. The tree-family correspondence with non-confusing
//! travel groupoids is implemented in both directions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::groupoid::{Groupoid, GroupoidError, Pair};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {0} out of range (order {1})")]
    VertexOutOfRange(usize, usize),
    #[error("root has no next hop")]
    NextHopOfRoot,
    #[error("parent map has {got} entries for {expected} vertices")]
    BadParentLength { expected: usize, got: usize },
    #[error("parent edge {{{u},{parent}}} is not an edge of the host graph")]
    MissingHostEdge { u: usize, parent: usize },
    #[error("parent links from {0} do not reach the root")]
    NotSpanning(usize),
    #[error("tree is missing root edge {{{root},{neighbor}}}")]
    MissingRootEdge { root: usize, neighbor: usize },
    #[error("family tree at index {index} is rooted at {root}")]
    MisplacedRoot { index: usize, root: usize },
    #[error("family trees disagree on the vertex count")]
    InconsistentFamily,
    #[error("groupoid has confusing pair ({0}, {1})")]
    Confusing(usize, usize),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

/// A spanning tree of a host graph encoded as a parent map toward a root,
/// containing every host edge incident to the root. `parent[root] == root`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedSpanningTree {
    root: usize,
    parent: Vec<usize>,
}

impl RootedSpanningTree {
    pub fn new(host: &Graph, root: usize, parent: Vec<usize>) -> Result<Self, TreeError> {
        let n = host.order();
        if root >= n {
            return Err(TreeError::VertexOutOfRange(root, n));
        }
        if parent.len() != n {
            return Err(TreeError::BadParentLength {
                expected: n,
                got: parent.len(),
            });
        }
        for (u, &p) in parent.iter().enumerate() {
            if u == root {
                if p != root {
                    return Err(TreeError::MissingHostEdge { u, parent: p });
                }
                continue;
            }
            if !host.has_edge(u, p) {
                return Err(TreeError::MissingHostEdge { u, parent: p });
            }
        }
        // every parent chain must reach the root within n steps
        for u in 0..n {
            let mut w = u;
            let mut steps = 0;
            while w != root {
                w = parent[w];
                steps += 1;
                if steps > n {
                    return Err(TreeError::NotSpanning(u));
                }
            }
        }
        // all root-incident host edges belong to the tree
        for w in host.neighbors(root) {
            if parent[w] != root {
                return Err(TreeError::MissingRootEdge { root, neighbor: w });
            }
        }
        Ok(RootedSpanningTree { root, parent })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    /// The neighbor of `u` on the unique u-root path.
    pub fn next_hop(&self, u: usize) -> Result<usize, TreeError> {
        if u >= self.parent.len() {
            return Err(TreeError::VertexOutOfRange(u, self.parent.len()));
        }
        if u == self.root {
            return Err(TreeError::NextHopOfRoot);
        }
        Ok(self.parent[u])
    }

    pub fn parent_map(&self) -> &[usize] {
        &self.parent
    }

    /// Tree edges as undirected (min, max) pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.parent.len())
            .filter(|&u| u != self.root)
            .map(|u| (u.min(self.parent[u]), u.max(self.parent[u])))
            .collect();
        out.sort_unstable();
        out
    }
}

/// One v-spanning tree per vertex of a common host graph, indexed by root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFamily {
    host: Graph,
    trees: Vec<RootedSpanningTree>,
}

impl TreeFamily {
    pub fn new(host: Graph, trees: Vec<RootedSpanningTree>) -> Result<Self, TreeError> {
        if trees.len() != host.order() {
            return Err(TreeError::InconsistentFamily);
        }
        for (index, t) in trees.iter().enumerate() {
            if t.root() != index {
                return Err(TreeError::MisplacedRoot {
                    index,
                    root: t.root(),
                });
            }
            // revalidate against the shared host
            RootedSpanningTree::new(&host, t.root(), t.parent.clone())?;
        }
        Ok(TreeFamily { host, trees })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn tree(&self, v: usize) -> &RootedSpanningTree {
        &self.trees[v]
    }

    pub fn trees(&self) -> &[RootedSpanningTree] {
        &self.trees
    }
}

fn check_connected_vertex(g: &Graph, v: usize) -> Result<(), TreeError> {
    if v >= g.order() {
        return Err(TreeError::VertexOutOfRange(v, g.order()));
    }
    if !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    Ok(())
}

/// The contracted multigraph for v-tree enumeration: the root and its
/// neighborhood collapse to node 0, remaining vertices become 1.., and each
/// surviving host edge keeps its original endpoints as a label. Host edges
/// inside the star set cannot occur in any v-tree and are dropped.
struct StarContraction {
    node_count: usize,
    edges: Vec<(usize, usize, (usize, usize))>,
    star_edges: Vec<(usize, usize)>,
}

fn contract_star(g: &Graph, v: usize) -> StarContraction {
    let n = g.order();
    let mut in_star = vec![false; n];
    in_star[v] = true;
    let star_edges: Vec<(usize, usize)> = g
        .neighbors(v)
        .into_iter()
        .map(|w| {
            in_star[w] = true;
            (v, w)
        })
        .collect();
    let mut id = vec![0usize; n];
    let mut next = 1;
    for u in 0..n {
        if !in_star[u] {
            id[u] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        if in_star[a] && in_star[b] {
            continue;
        }
        edges.push((id[a], id[b], (a, b)));
    }
    StarContraction {
        node_count: next,
        edges,
        star_edges,
    }
}

fn multigraph_connected(alive: &[bool], edges: &[(usize, usize, (usize, usize))]) -> bool {
    let count = alive.iter().filter(|&&a| a).count();
    if count <= 1 {
        return true;
    }
    let start = alive.iter().position(|&a| a).unwrap();
    let mut seen = vec![false; alive.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &(a, b, _) in edges {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                reached += 1;
                stack.push(other);
            }
        }
    }
    reached == count
}

/// Contraction/deletion enumeration of all spanning trees of a labeled
/// multigraph, collected as sets of edge labels.
fn spanning_edge_sets(
    alive: &[bool],
    edges: &[(usize, usize, (usize, usize))],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let count = alive.iter().filter(|&&a| a).count();
    if count == 1 {
        out.push(chosen.clone());
        return;
    }
    if !multigraph_connected(alive, edges) {
        return;
    }
    let (a, b, label) = edges[0];
    // include the edge: contract b into a
    let mut alive2 = alive.to_vec();
    alive2[b] = false;
    let contracted: Vec<_> = edges[1..]
        .iter()
        .filter_map(|&(x, y, l)| {
            let x2 = if x == b { a } else { x };
            let y2 = if y == b { a } else { y };
            if x2 == y2 {
                None
            } else {
                Some((x2, y2, l))
            }
        })
        .collect();
    chosen.push(label);
    spanning_edge_sets(&alive2, &contracted, chosen, out);
    chosen.pop();
    // exclude the edge
    spanning_edge_sets(alive, &edges[1..], chosen, out);
}

/// All v-spanning trees of a connected graph, ordered by parent map
/// ascending in vertex order.
pub fn enumerate_v_trees(g: &Graph, v: usize) -> Result<Vec<RootedSpanningTree>, TreeError> {
    check_connected_vertex(g, v)?;
    let contraction = contract_star(g, v);
    let alive = vec![true; contraction.node_count];
    let mut edge_sets = Vec::new();
    spanning_edge_sets(&alive, &contraction.edges, &mut Vec::new(), &mut edge_sets);
    let n = g.order();
    let mut trees = Vec::with_capacity(edge_sets.len());
    for set in edge_sets {
        // lift: forced star plus the chosen original edges, oriented toward v
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in contraction.star_edges.iter().chain(set.iter()) {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut parent = vec![usize::MAX; n];
        parent[v] = v;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        trees.push(RootedSpanningTree::new(g, v, parent)?);
    }
    trees.sort_by(|a, b| a.parent.cmp(&b.parent));
    Ok(trees)
}

/// Fraction-free determinant (Bareiss), exact over integers.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// |S_G(v)| via the matrix-tree theorem applied to the star-contracted
/// multigraph: the determinant of the Laplacian with the supernode row and
/// column removed.
pub fn count_v_trees(g: &Graph, v: usize) -> Result<BigUint, TreeError> {
    check_connected_vertex(g, v)?;
    let contraction = contract_star(g, v);
    let m = contraction.node_count;
    let mut laplacian = vec![vec![BigInt::zero(); m]; m];
    for &(a, b, _) in &contraction.edges {
        laplacian[a][a] += 1;
        laplacian[b][b] += 1;
        laplacian[a][b] -= 1;
        laplacian[b][a] -= 1;
    }
    let minor: Vec<Vec<BigInt>> = (1..m)
        .map(|i| (1..m).map(|j| laplacian[i][j].clone()).collect())
        .collect();
    let det = determinant(minor);
    debug_assert!(!det.is_negative());
    Ok(det.magnitude().clone())
}

/// The forward direction of the tree correspondence: each T_v collects the
/// edges {u, u*v}. Requires a non-confusing travel groupoid.
pub fn family_from_groupoid(g: &Groupoid) -> Result<TreeFamily, TreeError> {
    if let Some(&(u, v)) = g.confusing_pairs()?.first() {
        return Err(TreeError::Confusing(u, v));
    }
    let host = g.associated_graph();
    let n = g.order();
    let mut trees = Vec::with_capacity(n);
    for v in 0..n {
        let parent: Vec<usize> = (0..n).map(|u| if u == v { v } else { g.op(u, v) }).collect();
        trees.push(RootedSpanningTree::new(&host, v, parent)?);
    }
    TreeFamily::new(host, trees)
}

/// The converse direction: u*v is the next hop of u toward v in T_v. The
/// result is checked to be a non-confusing travel groupoid on the host.
pub fn groupoid_from_family(f: &TreeFamily) -> Result<Groupoid, TreeError> {
    let n = f.host.order();
    let mut table = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            table.push(if u == v { u } else { f.trees[v].parent[u] });
        }
    }
    let g = Groupoid::new(n, table)?;
    if let Some(&(u, v)) = g.confusing_pairs()?.first() {
        return Err(TreeError::Confusing(u, v));
    }
    assert_eq!(
        g.associated_graph(),
        f.host,
        "tree-family groupoid must live on the family's host graph"
    );
    Ok(g)
}

/// Whether every pair of family trees shares a connecting path: for all
/// u != v there is a u-v path using only edges present in both T_u and T_v.
/// Returns the first pair without one.
pub fn simple_family_violation(f: &TreeFamily) -> Option<Pair> {
    let n = f.host.order();
    for u in 0..n {
        for v in u + 1..n {
            let eu = f.trees[u].edges();
            let ev = f.trees[v].edges();
            let shared: Vec<(usize, usize)> =
                eu.iter().copied().filter(|e| ev.contains(e)).collect();
            if !path_exists(n, &shared, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn is_simple_family(f: &TreeFamily) -> bool {
    simple_family_violation(f).is_none()
}

fn path_exists(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> bool {
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for &(a, b) in edges {
            let other = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    false
}
