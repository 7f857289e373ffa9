//! Finite groupoids as operation tables, with the travel-groupoid axioms
//! and every derived predicate as a checkable property.
//!
//! Predicates accept arbitrary tables so that non-examples can be
//! classified; operations whose meaning depends on the travel axioms
//! (orbit walks, subgroupoid structure) reject non-travel input.
//! All violation witnesses are the lexicographically first violating tuple.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{maximal_cliques, Graph};

pub type Pair = (usize, usize);
pub type Triple = (usize, usize, usize);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("groupoid must have at least one element")]
    EmptyCarrier,
    #[error("table must be {n}x{n}, got {got} entries")]
    BadTableShape { n: usize, got: usize },
    #[error("table entry {value} at ({u},{v}) out of range (order {n})")]
    EntryOutOfRange { u: usize, v: usize, value: usize, n: usize },
    #[error("vertex {0} out of range (order {1})")]
    VertexOutOfRange(usize, usize),
    #[error("operation requires a travel groupoid (t1/t2 must hold)")]
    NotTravel,
}

/// A finite groupoid: a carrier `0..n` and a total binary operation stored
/// row-major, entry (u, v) holding u*v.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Groupoid {
    n: usize,
    table: Vec<usize>,
}

impl Groupoid {
    pub fn new(n: usize, table: Vec<usize>) -> Result<Self, GroupoidError> {
        if n == 0 {
            return Err(GroupoidError::EmptyCarrier);
        }
        if table.len() != n * n {
            return Err(GroupoidError::BadTableShape { n, got: table.len() });
        }
        for u in 0..n {
            for v in 0..n {
                let w = table[u * n + v];
                if w >= n {
                    return Err(GroupoidError::EntryOutOfRange { u, v, value: w, n });
                }
            }
        }
        Ok(Groupoid { n, table })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, GroupoidError> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(GroupoidError::BadTableShape { n, got: row.len() });
            }
            table.extend_from_slice(row);
        }
        Groupoid::new(n, table)
    }

    /// The right-projection table u*v = v, the unique travel groupoid on K_n.
    pub fn right_projection(n: usize) -> Self {
        let table = (0..n).flat_map(|_| 0..n).collect();
        Groupoid { n, table }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, u: usize, v: usize) -> usize {
        self.table[u * self.n + v]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| self.table[u * self.n..(u + 1) * self.n].to_vec())
            .collect()
    }

    fn check_vertex(&self, u: usize) -> Result<(), GroupoidError> {
        if u < self.n {
            Ok(())
        } else {
            Err(GroupoidError::VertexOutOfRange(u, self.n))
        }
    }

    fn require_travel(&self) -> Result<(), GroupoidError> {
        if self.is_travel() {
            Ok(())
        } else {
            Err(GroupoidError::NotTravel)
        }
    }

    /// The iterate u *^i v: u *^0 v = u, u *^(i+1) v = (u *^i v) * v.
    pub fn iterate(&self, u: usize, v: usize, i: usize) -> Result<usize, GroupoidError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut w = u;
        for _ in 0..i {
            w = self.op(w, v);
        }
        Ok(w)
    }

    /// (t1): (u*v)*u = u for all u, v.
    pub fn t1_violation(&self) -> Option<Pair> {
        for u in 0..self.n {
            for v in 0..self.n {
                if self.op(self.op(u, v), u) != u {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn satisfies_t1(&self) -> bool {
        self.t1_violation().is_none()
    }

    /// (t2): (u*v)*v = u implies u = v.
    pub fn t2_violation(&self) -> Option<Pair> {
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && self.op(self.op(u, v), v) == u {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn satisfies_t2(&self) -> bool {
        self.t2_violation().is_none()
    }

    pub fn is_travel(&self) -> bool {
        self.satisfies_t1() && self.satisfies_t2()
    }

    pub fn idempotent_violation(&self) -> Option<usize> {
        (0..self.n).find(|&u| self.op(u, u) != u)
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotent_violation().is_none()
    }

    /// (t3): v*u != u implies u*(v*u) = u*v.
    pub fn simple_violation(&self) -> Option<Pair> {
        for u in 0..self.n {
            for v in 0..self.n {
                let vu = self.op(v, u);
                if vu != u && self.op(u, vu) != self.op(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.simple_violation().is_none()
    }

    /// (t4): u*v = u*w implies u*(w*v) = u*v.
    pub fn smooth_violation(&self) -> Option<Triple> {
        for u in 0..self.n {
            for v in 0..self.n {
                for w in 0..self.n {
                    let uv = self.op(u, v);
                    if uv == self.op(u, w) && self.op(u, self.op(w, v)) != uv {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth_violation().is_none()
    }

    /// (t5): u*v = u*w implies u*(v*w) = u*v or u*((v*w)*w) = u*v.
    pub fn semi_smooth_violation(&self) -> Option<Triple> {
        for u in 0..self.n {
            for v in 0..self.n {
                for w in 0..self.n {
                    let uv = self.op(u, v);
                    if uv != self.op(u, w) {
                        continue;
                    }
                    let vw = self.op(v, w);
                    if self.op(u, vw) != uv && self.op(u, self.op(vw, w)) != uv {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn is_semi_smooth(&self) -> bool {
        self.semi_smooth_violation().is_none()
    }

    /// (tcm): for pairwise distinct u, v, w: v*w = w implies v*u = u or w*u = u.
    pub fn tcm_violation(&self) -> Option<Triple> {
        for u in 0..self.n {
            for v in 0..self.n {
                for w in 0..self.n {
                    if u == v || u == w || v == w {
                        continue;
                    }
                    if self.op(v, w) == w && self.op(v, u) != u && self.op(w, u) != u {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_tcm(&self) -> bool {
        self.tcm_violation().is_none()
    }

    /// (tcb): for pairwise distinct u, v, w: v*w = w implies exactly one of
    /// v*u = u and w*u = u. The "either ... or" is read exclusively; the
    /// inclusive reading is (tcm).
    pub fn tcb_violation(&self) -> Option<Triple> {
        for u in 0..self.n {
            for v in 0..self.n {
                for w in 0..self.n {
                    if u == v || u == w || v == w {
                        continue;
                    }
                    if self.op(v, w) == w && (self.op(v, u) == u) == (self.op(w, u) == u) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_tcb(&self) -> bool {
        self.tcb_violation().is_none()
    }

    pub fn associativity_violation(&self) -> Option<Triple> {
        for u in 0..self.n {
            for v in 0..self.n {
                for w in 0..self.n {
                    if self.op(self.op(u, v), w) != self.op(u, self.op(v, w)) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// All e with e*v = v for every v, ascending.
    pub fn left_units(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&e| (0..self.n).all(|v| self.op(e, v) == v))
            .collect()
    }

    pub fn has_left_unit(&self) -> bool {
        !self.left_units().is_empty()
    }

    /// All ordered pairs (u, v), u != v, such that u recurs in the orbit
    /// u, u*v, u*^2 v, ... Requires the travel axioms: under them any
    /// recurrence of u with u != v happens at some i >= 3, matching the
    /// confusing-pair definition. The orbit is walked with a visited set,
    /// so at most n steps are taken.
    pub fn confusing_pairs(&self) -> Result<Vec<Pair>, GroupoidError> {
        self.require_travel()?;
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u == v {
                    continue;
                }
                let mut visited = vec![false; self.n];
                let mut w = self.op(u, v);
                while !visited[w] {
                    if w == u {
                        out.push((u, v));
                        break;
                    }
                    visited[w] = true;
                    w = self.op(w, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_non_confusing(&self) -> Result<bool, GroupoidError> {
        Ok(self.confusing_pairs()?.is_empty())
    }

    /// The iterate sequence u, u*v, u*^2 v, ..., stopped at v or at the
    /// first recurrence. For a non-confusing travel groupoid this is a
    /// u-v path in the associated graph.
    pub fn path_sequence(&self, u: usize, v: usize) -> Result<Vec<usize>, GroupoidError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.require_travel()?;
        let mut seq = vec![u];
        if u == v {
            return Ok(seq);
        }
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut w = u;
        loop {
            w = self.op(w, v);
            if seen[w] {
                return Ok(seq);
            }
            seen[w] = true;
            seq.push(w);
            if w == v {
                return Ok(seq);
            }
        }
    }

    /// The associated graph: edge {u, v} iff u != u*v = v.
    pub fn associated_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("carrier is nonempty");
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && self.op(u, v) == v {
                    g.add_edge(u, v).expect("u != v");
                }
            }
        }
        g
    }

    /// Maximal subsets closed under * with associative restriction. For a
    /// travel groupoid these are exactly the maximal cliques of the
    /// associated graph; closure and associativity are re-checked on each.
    pub fn maximal_associative_subgroupoids(&self) -> Result<Vec<Vec<usize>>, GroupoidError> {
        self.require_travel()?;
        let cliques = maximal_cliques(&self.associated_graph());
        for w in &cliques {
            assert!(
                self.is_closed_associative(w),
                "maximal clique {w:?} is not a closed associative subgroupoid"
            );
        }
        Ok(cliques)
    }

    fn is_closed_associative(&self, set: &[usize]) -> bool {
        for &a in set {
            for &b in set {
                if !set.contains(&self.op(a, b)) {
                    return false;
                }
                for &c in set {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exchange property over maximal associative subgroupoids: for each
    /// such W and each v outside W, some w in W makes (W - {w}) + {v}
    /// maximal associative again. Holds exactly when the groupoid is on a
    /// complete multipartite graph. Uniqueness of the replaced w is
    /// reported separately.
    pub fn exchange_property(&self) -> Result<ExchangeReport, GroupoidError> {
        let subgroupoids = self.maximal_associative_subgroupoids()?;
        let is_maximal = |set: &[usize]| subgroupoids.iter().any(|s| s == set);
        let mut holds = true;
        let mut witness = None;
        let mut replacement_unique = true;
        for w_set in &subgroupoids {
            for v in 0..self.n {
                if w_set.contains(&v) {
                    continue;
                }
                let mut count = 0;
                for &w in w_set {
                    let mut candidate: Vec<usize> = w_set
                        .iter()
                        .copied()
                        .filter(|&x| x != w)
                        .chain(std::iter::once(v))
                        .collect();
                    candidate.sort_unstable();
                    if is_maximal(&candidate) {
                        count += 1;
                    }
                }
                if count == 0 && holds {
                    holds = false;
                    witness = Some((w_set.clone(), v));
                }
                if count > 1 {
                    replacement_unique = false;
                }
            }
        }
        Ok(ExchangeReport {
            holds,
            witness,
            replacement_unique,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub holds: bool,
    /// A maximal associative subgroupoid and an outside vertex with no
    /// valid replacement, when the property fails.
    pub witness: Option<(Vec<usize>, usize)>,
    /// Whether the replaced element was unique wherever a replacement exists.
    pub replacement_unique: bool,
}

/// Every predicate of a groupoid evaluated at once, with a witness for each
/// failed flag. Orbit-based fields are only populated for travel groupoids.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub idempotent: bool,
    pub t1: bool,
    pub t2: bool,
    pub travel: bool,
    pub simple: bool,
    pub smooth: bool,
    pub semi_smooth: bool,
    pub tcm: bool,
    pub tcb: bool,
    pub associative: bool,
    pub non_confusing: Option<bool>,
    pub confusing_pairs: Option<Vec<Pair>>,
    pub left_units: Vec<usize>,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    pub idempotent: Option<usize>,
    pub t1: Option<Pair>,
    pub t2: Option<Pair>,
    pub simple: Option<Pair>,
    pub smooth: Option<Triple>,
    pub semi_smooth: Option<Triple>,
    pub tcm: Option<Triple>,
    pub tcb: Option<Triple>,
    pub associative: Option<Triple>,
}

impl PropertyReport {
    pub fn analyze(g: &Groupoid) -> Self {
        let witnesses = Witnesses {
            idempotent: g.idempotent_violation(),
            t1: g.t1_violation(),
            t2: g.t2_violation(),
            simple: g.simple_violation(),
            smooth: g.smooth_violation(),
            semi_smooth: g.semi_smooth_violation(),
            tcm: g.tcm_violation(),
            tcb: g.tcb_violation(),
            associative: g.associativity_violation(),
        };
        let travel = witnesses.t1.is_none() && witnesses.t2.is_none();
        let confusing = if travel {
            Some(g.confusing_pairs().expect("travel groupoid"))
        } else {
            None
        };
        PropertyReport {
            order: g.order(),
            idempotent: witnesses.idempotent.is_none(),
            t1: witnesses.t1.is_none(),
            t2: witnesses.t2.is_none(),
            travel,
            simple: witnesses.simple.is_none(),
            smooth: witnesses.smooth.is_none(),
            semi_smooth: witnesses.semi_smooth.is_none(),
            tcm: witnesses.tcm.is_none(),
            tcb: witnesses.tcb.is_none(),
            associative: witnesses.associative.is_none(),
            non_confusing: confusing.as_ref().map(|c| c.is_empty()),
            confusing_pairs: confusing,
            left_units: g.left_units(),
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k23_example, remark_diamond};
    use crate::graph::{classify_family, Graph, GraphFamily};

    /// 2-element table with 0*1=0, 1*0=1, diagonal fixed: satisfies (t1)
    /// but not (t2).
    fn t1_only() -> Groupoid {
        Groupoid::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn iterate_zero_returns_first_argument() {
        let g = k23_example();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.iterate(u, v, 0).unwrap(), u);
            }
        }
    }

    #[test]
    fn iterate_on_fixture_tables() {
        // u4 *^2 u1 = u2 on the diamond table
        assert_eq!(remark_diamond().iterate(3, 0, 2).unwrap(), 1);
        // u3 *^2 u4 = u4 on the K_{2,3} table (u3*u4=u1, u1*u4=u4)
        assert_eq!(k23_example().iterate(2, 3, 2).unwrap(), 3);
    }

    #[test]
    fn iterate_rejects_out_of_range() {
        let g = k23_example();
        assert_eq!(
            g.iterate(5, 0, 1).unwrap_err(),
            GroupoidError::VertexOutOfRange(5, 5)
        );
    }

    #[test]
    fn t1_t2_on_fixtures() {
        assert!(k23_example().satisfies_t1());
        assert!(k23_example().satisfies_t2());
        assert!(remark_diamond().is_travel());
        assert!(Groupoid::right_projection(4).satisfies_t1());
        assert!(Groupoid::right_projection(3).is_travel());
        let g = t1_only();
        assert!(g.satisfies_t1());
        assert_eq!(g.t2_violation(), Some((0, 1)));
    }

    #[test]
    fn one_element_groupoid() {
        let g = Groupoid::from_rows(&[vec![0]]).unwrap();
        assert!(g.is_travel());
        assert!(g.is_simple());
        assert!(g.is_semi_smooth());
        assert!(g.is_associative());
    }

    #[test]
    fn idempotency() {
        assert!(k23_example().is_idempotent());
        let constant = Groupoid::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(!constant.is_idempotent());
        assert_eq!(constant.idempotent_violation(), Some(1));
    }

    #[test]
    fn smoothness_witness_on_k23_example() {
        let g = k23_example();
        assert_eq!(g.smooth_violation(), Some((2, 3, 4)));
        assert!(Groupoid::right_projection(4).is_smooth());
    }

    #[test]
    fn semi_smooth_on_fixtures() {
        assert!(k23_example().is_semi_smooth());
        // smooth implies semi-smooth
        assert!(Groupoid::right_projection(5).is_semi_smooth());
    }

    #[test]
    fn simple_scan_of_k23_example() {
        // computed by the exhaustive (u,v) scan, not assumed
        let g = k23_example();
        // u=u3,v=u5: u5*u3=u2 != u3, u3*(u2)=u2 but u3*u5=u1: violation
        assert!(!g.is_simple());
        assert!(Groupoid::right_projection(4).is_simple());
    }

    #[test]
    fn confusing_pairs_empty_on_multipartite_tables() {
        assert!(k23_example().confusing_pairs().unwrap().is_empty());
        assert!(Groupoid::right_projection(3)
            .confusing_pairs()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn confusing_pairs_rejects_non_travel() {
        assert_eq!(
            t1_only().confusing_pairs().unwrap_err(),
            GroupoidError::NotTravel
        );
    }

    #[test]
    fn path_sequences() {
        assert_eq!(k23_example().path_sequence(2, 4).unwrap(), vec![2, 0, 4]);
        assert_eq!(
            remark_diamond().path_sequence(3, 0).unwrap(),
            vec![3, 2, 1, 0]
        );
        assert_eq!(
            Groupoid::right_projection(3).path_sequence(0, 2).unwrap(),
            vec![0, 2]
        );
        assert_eq!(k23_example().path_sequence(1, 1).unwrap(), vec![1]);
    }

    #[test]
    fn associated_graphs_of_fixtures() {
        let g23 = k23_example().associated_graph();
        let (expected, _) = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g23, expected);

        let gd = remark_diamond().associated_graph();
        let expected = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(gd, expected);

        let kn = Groupoid::right_projection(4).associated_graph();
        let (k4, _) = Graph::complete_multipartite(&[1, 1, 1, 1]).unwrap();
        assert_eq!(kn, k4);
    }

    #[test]
    fn tcm_on_fixtures() {
        assert!(k23_example().satisfies_tcm());
        assert_eq!(remark_diamond().tcm_violation(), Some((0, 2, 3)));
        let k11 = Groupoid::right_projection(2);
        assert!(k11.satisfies_tcm());
    }

    #[test]
    fn tcb_on_fixtures() {
        assert!(k23_example().satisfies_tcb());
        // on K_3 both disjuncts hold, so the exclusive reading fails
        assert!(!Groupoid::right_projection(3).satisfies_tcb());
        assert!(!remark_diamond().satisfies_tcb());
    }

    #[test]
    fn left_units_on_fixtures() {
        assert_eq!(Groupoid::right_projection(4).left_units(), vec![0, 1, 2, 3]);
        assert_eq!(k23_example().left_units(), Vec::<usize>::new());
    }

    #[test]
    fn associativity() {
        assert!(Groupoid::right_projection(5).is_associative());
        assert!(!k23_example().is_associative());
    }

    #[test]
    fn maximal_associative_subgroupoids_of_k23() {
        let subs = k23_example().maximal_associative_subgroupoids().unwrap();
        assert_eq!(
            subs,
            vec![
                vec![0, 2],
                vec![0, 3],
                vec![0, 4],
                vec![1, 2],
                vec![1, 3],
                vec![1, 4]
            ]
        );
        let all = Groupoid::right_projection(4)
            .maximal_associative_subgroupoids()
            .unwrap();
        assert_eq!(all, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn exchange_property_on_fixtures() {
        let rep = k23_example().exchange_property().unwrap();
        assert!(rep.holds);
        assert!(rep.replacement_unique);
        let rep = remark_diamond().exchange_property().unwrap();
        assert!(!rep.holds);
        // complete graph: V \ W is empty, vacuously true
        let rep = Groupoid::right_projection(3).exchange_property().unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn report_invariants_on_k23_example() {
        let rep = PropertyReport::analyze(&k23_example());
        assert!(rep.travel && rep.t1 && rep.t2 && rep.idempotent);
        assert_eq!(rep.non_confusing, Some(true));
        assert!(!rep.smooth);
        assert_eq!(rep.witnesses.smooth, Some((2, 3, 4)));
        assert!(rep.semi_smooth && rep.tcm && rep.tcb);
        assert!(!rep.simple && !rep.associative);
        assert_eq!(
            classify_family(&k23_example().associated_graph()),
            GraphFamily::CompleteBipartite
        );
    }

    #[test]
    fn report_witnesses_reproduce_violations() {
        let g = remark_diamond();
        let rep = PropertyReport::analyze(&g);
        if let Some((u, v, w)) = rep.witnesses.tcm {
            assert_eq!(g.op(v, w), w);
            assert_ne!(g.op(v, u), u);
            assert_ne!(g.op(w, u), u);
        } else {
            panic!("diamond table must violate (tcm)");
        }
    }

    #[test]
    fn new_rejects_bad_tables() {
        assert_eq!(Groupoid::new(0, vec![]).unwrap_err(), GroupoidError::EmptyCarrier);
        assert!(matches!(
            Groupoid::new(2, vec![0, 1, 1]).unwrap_err(),
            GroupoidError::BadTableShape { .. }
        ));
        assert!(matches!(
            Groupoid::new(2, vec![0, 2, 1, 1]).unwrap_err(),
            GroupoidError::EntryOutOfRange { value: 2, .. }
        ));
    }
}
