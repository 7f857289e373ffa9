//! Exhaustive travel-groupoid generation. The primary route streams the
//! Cartesian product of per-root v-tree lists (exactly the non-confusing
//! travel groupoids); a table-level backtracking search over small orders
//! serves as an independent oracle and covers confusing groupoids on
//! non-multipartite graphs.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::graph::Graph;
use crate::groupoid::Groupoid;
use crate::trees::{count_v_trees, enumerate_v_trees, RootedSpanningTree, TreeError};

/// Largest order accepted by the brute-force table search.
pub const BRUTE_FORCE_MAX_ORDER: usize = 6;

/// Default census ceiling; the CLI lets TGK_MAX_CENSUS override it.
pub const DEFAULT_CENSUS_CEILING: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("predicted census size {predicted} exceeds ceiling {ceiling}; pass --force to run anyway")]
    TooLarge { predicted: BigUint, ceiling: u64 },
    #[error("brute force limited to order {max}, got {n}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("unknown predicate '{0}' (expected simple | smooth | semi_smooth | tcm | tcb | associative | has_left_unit)")]
    UnknownPredicate(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Exact number of non-confusing travel groupoids on a connected graph,
/// via the matrix-tree count of each v-tree set.
pub fn predicted_census_size(g: &Graph) -> Result<BigUint, EnumerationError> {
    let mut product = BigUint::one();
    for v in 0..g.order() {
        product *= count_v_trees(g, v)?;
    }
    Ok(product)
}

/// Streams every non-confusing travel groupoid on a connected graph exactly
/// once, in ascending product-index order over the per-root tree lists
/// (root 0 most significant, each list in its deterministic order).
#[derive(Debug)]
pub struct Census {
    trees: Vec<Vec<RootedSpanningTree>>,
    digits: Vec<usize>,
    done: bool,
}

impl Census {
    /// Total number of groupoids this census will yield.
    pub fn len(&self) -> BigUint {
        self.trees
            .iter()
            .fold(BigUint::one(), |acc, t| acc * BigUint::from(t.len()))
    }

    pub fn is_empty(&self) -> bool {
        self.trees.iter().any(|t| t.is_empty())
    }
}

impl Iterator for Census {
    type Item = Groupoid;

    fn next(&mut self) -> Option<Groupoid> {
        if self.done {
            return None;
        }
        let n = self.trees.len();
        let mut table = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                table.push(if u == v {
                    u
                } else {
                    self.trees[v][self.digits[v]].next_hop(u).expect("u != root")
                });
            }
        }
        let g = Groupoid::new(n, table).expect("tree next hops are in range");
        debug_assert!(g.is_travel());
        // odometer: last root varies fastest
        self.done = true;
        for v in (0..n).rev() {
            if self.digits[v] + 1 < self.trees[v].len() {
                self.digits[v] += 1;
                self.done = false;
                break;
            }
            self.digits[v] = 0;
        }
        Some(g)
    }
}

/// Builds the non-confusing census for a connected graph. Refuses when the
/// predicted size exceeds `ceiling`; pass `None` to skip the guard.
pub fn enumerate_nonconfusing(
    g: &Graph,
    ceiling: Option<u64>,
) -> Result<Census, EnumerationError> {
    if let Some(limit) = ceiling {
        let predicted = predicted_census_size(g)?;
        if predicted > BigUint::from(limit) {
            return Err(EnumerationError::TooLarge {
                predicted,
                ceiling: limit,
            });
        }
    }
    let trees: Vec<Vec<RootedSpanningTree>> = (0..g.order())
        .map(|v| enumerate_v_trees(g, v))
        .collect::<Result<_, _>>()?;
    let done = trees.iter().any(|t| t.is_empty());
    Ok(Census {
        digits: vec![0; trees.len()],
        trees,
        done,
    })
}

/// Every travel groupoid whose associated graph equals G, by backtracking
/// over the free table cells. Edge cells are forced to u*v = v, the diagonal
/// to u*u = u, and each non-edge cell u*v ranges over the neighbors of u
/// (any other value would change the associated graph or break the walk
/// property). Includes confusing groupoids. Output is in ascending table
/// order.
pub fn enumerate_bruteforce(g: &Graph) -> Result<Vec<Groupoid>, EnumerationError> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(EnumerationError::OrderTooLarge {
            n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let mut table = vec![0usize; n * n];
    let mut free_cells = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                table[u * n + v] = u;
            } else if g.has_edge(u, v) {
                table[u * n + v] = v;
            } else {
                free_cells.push((u, v));
            }
        }
    }
    let mut out = Vec::new();
    fill_cells(g, n, &free_cells, 0, &mut table, &mut out);
    Ok(out)
}

fn fill_cells(
    g: &Graph,
    n: usize,
    cells: &[(usize, usize)],
    idx: usize,
    table: &mut Vec<usize>,
    out: &mut Vec<Groupoid>,
) {
    if idx == cells.len() {
        let candidate = Groupoid::new(n, table.clone()).expect("entries are vertices");
        if candidate.is_travel() {
            debug_assert_eq!(candidate.associated_graph(), *g);
            out.push(candidate);
        }
        return;
    }
    let (u, v) = cells[idx];
    for w in g.neighbors(u) {
        // w != u and w != v: u is not its own neighbor and uv is a non-edge
        table[u * n + v] = w;
        fill_cells(g, n, cells, idx + 1, table, out);
    }
}

/// Named groupoid predicates for census filtering.
pub fn predicate_by_name(name: &str) -> Result<fn(&Groupoid) -> bool, EnumerationError> {
    Ok(match name {
        "simple" => Groupoid::is_simple,
        "smooth" => Groupoid::is_smooth,
        "semi_smooth" => Groupoid::is_semi_smooth,
        "tcm" => Groupoid::satisfies_tcm,
        "tcb" => Groupoid::satisfies_tcb,
        "associative" => Groupoid::is_associative,
        "has_left_unit" => Groupoid::has_left_unit,
        other => return Err(EnumerationError::UnknownPredicate(other.to_string())),
    })
}
