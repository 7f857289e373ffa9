//! End-to-end acceptance checks. Each test covers one numbered criterion and
//! prints a single pass line (visible with `--nocapture`); a panic marks the
//! criterion failed.

use std::collections::HashSet;

use num_bigint::BigUint;

use tgk::counting::{
    count_s, count_s_closed, count_simple_closed, count_simple_travel_groupoids,
    count_travel_groupoids, PartSizes,
};
use tgk::enumeration::{enumerate_bruteforce, enumerate_nonconfusing};
use tgk::graph::GraphFamily;
use tgk::trees::{count_v_trees, enumerate_v_trees, family_from_groupoid, is_simple_family};
use tgk::{classify_family, recognize_multipartite, Graph, Groupoid};
use tgk::{fixtures, groupoid_from_family, PropertyReport};

fn pass(n: usize, name: &str) {
    println!("acceptance criterion {n} ({name}): pass");
}

fn multipartite(sizes: &[usize]) -> Graph {
    Graph::complete_multipartite(sizes).unwrap().0
}

fn census(sizes: &[usize]) -> Vec<Groupoid> {
    enumerate_nonconfusing(&multipartite(sizes), None)
        .unwrap()
        .collect()
}

/// Criterion 1: Both golden tables classify exactly as documented, including the
/// smoothness witness and the two-step iterate on the diamond.
#[test]
fn criterion_1_golden_fixtures() {
    let k23 = fixtures::k23_example();
    let rep = PropertyReport::analyze(&k23);
    assert!(rep.travel);
    assert_eq!(rep.non_confusing, Some(true));
    assert!(rep.semi_smooth);
    assert!(!rep.smooth);
    assert_eq!(rep.witnesses.smooth, Some((2, 3, 4)));
    assert!(rep.tcm);
    assert!(rep.tcb);
    assert_eq!(
        classify_family(&k23.associated_graph()),
        GraphFamily::CompleteBipartite
    );

    let diamond = fixtures::remark_diamond();
    let rep = PropertyReport::analyze(&diamond);
    assert!(rep.travel);
    assert!(!rep.tcm);
    assert_eq!(
        classify_family(&diamond.associated_graph()),
        GraphFamily::NotMultipartite
    );
    assert_eq!(diamond.iterate(3, 0, 2).unwrap(), 1);
    pass(1, "golden fixtures");
}

/// Criterion 2: The streamed census size equals the closed-form count exactly on five
/// part-size lists.
#[test]
fn criterion_2_census_equals_formula() {
    let cases: [(&[usize], u64); 5] = [
        (&[2, 2], 16),
        (&[2, 3], 576),
        (&[1, 3], 1),
        (&[3, 3], 531_441),
        (&[2, 2, 2], 4096),
    ];
    for (sizes, expected) in cases {
        let streamed = enumerate_nonconfusing(&multipartite(sizes), None)
            .unwrap()
            .count() as u64;
        let formula = count_travel_groupoids(&PartSizes::new(sizes.to_vec()).unwrap()).unwrap();
        assert_eq!(streamed, expected, "streamed census on {sizes:?}");
        assert_eq!(formula, BigUint::from(expected), "formula on {sizes:?}");
    }
    pass(2, "census equals formula");
}

/// Criterion 3: Simple-filtered census counts equal both the literal multinomial sum
/// and its closed form.
#[test]
fn criterion_3_simple_census_equals_formula() {
    let cases: [(&[usize], Option<u64>); 3] =
        [(&[2, 2], Some(4)), (&[2, 3], Some(24)), (&[3, 3], None)];
    for (sizes, expected) in cases {
        let filtered = enumerate_nonconfusing(&multipartite(sizes), None)
            .unwrap()
            .filter(Groupoid::is_simple)
            .count();
        let part_sizes = PartSizes::new(sizes.to_vec()).unwrap();
        let literal = count_simple_travel_groupoids(&part_sizes).unwrap();
        let closed = count_simple_closed(&part_sizes).unwrap();
        assert_eq!(literal, closed, "literal vs closed on {sizes:?}");
        assert_eq!(
            BigUint::from(filtered),
            literal,
            "filtered census vs literal sum on {sizes:?}"
        );
        if let Some(e) = expected {
            assert_eq!(filtered as u64, e, "expected count on {sizes:?}");
        }
    }
    pass(3, "simple census equals formula");
}

/// Criterion 4: The brute-force table search and the tree-product census produce the
/// same set of groupoids on K_{2,3} and K_{2,2}.
#[test]
fn criterion_4_bruteforce_matches_census() {
    for sizes in [&[2usize, 3] as &[usize], &[2, 2]] {
        let g = multipartite(sizes);
        let from_trees: HashSet<Groupoid> =
            enumerate_nonconfusing(&g, None).unwrap().collect();
        let from_tables: HashSet<Groupoid> =
            enumerate_bruteforce(&g).unwrap().into_iter().collect();
        assert_eq!(from_trees, from_tables, "on sizes {sizes:?}");
    }
    pass(4, "brute force matches census");
}

/// Criterion 5: The tree-family correspondence round-trips as the identity on every
/// K_{2,3} and K_{2,2} census member, in both directions.
#[test]
fn criterion_5_bijection_round_trips() {
    let mut checked = 0;
    for sizes in [&[2usize, 3] as &[usize], &[2, 2]] {
        for g in census(sizes) {
            let family = family_from_groupoid(&g).unwrap();
            assert_eq!(groupoid_from_family(&family).unwrap(), g);
            let again = family_from_groupoid(&groupoid_from_family(&family).unwrap()).unwrap();
            assert_eq!(again.trees(), family.trees());
            checked += 1;
        }
    }
    assert_eq!(checked, 576 + 16);
    pass(5, "bijection round trips");
}

/// Criterion 6: Structural identities hold on every census member of K_{2,3} and
/// K_{2,2,2}: the basic travel identities, two-step iterates returning the
/// second argument, semi-smoothness, family-level simplicity agreeing with
/// (t3), and smoothness of all sixteen K_{2,2} members.
#[test]
fn criterion_6_property_sweeps() {
    for sizes in [&[2usize, 3] as &[usize], &[2, 2, 2]] {
        let graph = multipartite(sizes);
        for g in census(sizes) {
            let n = g.order();
            for u in 0..n {
                assert_eq!(g.op(u, u), u);
                for v in 0..n {
                    assert_eq!(g.op(u, v) == v, g.op(v, u) == u);
                    assert_eq!(g.op(u, v) == u, u == v);
                    assert_eq!(g.op(u, g.op(u, v)), g.op(u, v));
                    if u != v {
                        assert!(graph.has_edge(u, g.op(u, v)));
                    }
                    assert_eq!(g.iterate(u, v, 2).unwrap(), v);
                }
            }
            assert!(g.is_semi_smooth());
            let family = family_from_groupoid(&g).unwrap();
            assert_eq!(is_simple_family(&family), g.is_simple());
        }
    }
    let k22 = census(&[2, 2]);
    assert_eq!(k22.len(), 16);
    assert!(k22.iter().all(Groupoid::is_smooth));
    pass(6, "property sweeps");
}

fn partitions_up_to(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(total: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for next in min..=total {
            prefix.push(next);
            extend(total - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_total {
        extend(total, 1, &mut Vec::new(), out.as_mut());
    }
    out
}

/// Criterion 7: Per-part tree counts agree three ways on every part-size list with at
/// most 8 vertices: the literal multinomial sum, its power form, the
/// matrix-tree determinant, and the length of the explicit tree list.
#[test]
fn criterion_7_counting_identities() {
    for sizes in partitions_up_to(8) {
        let part_sizes = PartSizes::new(sizes.clone()).unwrap();
        let (graph, _) = Graph::complete_multipartite(&sizes).unwrap();
        let connected = graph.is_connected();
        let mut start = 0;
        for (p, &size) in sizes.iter().enumerate() {
            let literal = count_s(&part_sizes, p).unwrap();
            let closed = count_s_closed(&part_sizes, p).unwrap();
            assert_eq!(literal, closed, "sizes {sizes:?}, part {p}");
            if connected {
                // vertices are numbered consecutively part by part, so the
                // first vertex of part p represents it
                let v = start;
                assert_eq!(
                    count_v_trees(&graph, v).unwrap(),
                    literal,
                    "determinant, sizes {sizes:?}, root {v}"
                );
                assert_eq!(
                    BigUint::from(enumerate_v_trees(&graph, v).unwrap().len()),
                    literal,
                    "enumeration, sizes {sizes:?}, root {v}"
                );
            }
            start += size;
        }
    }
    pass(7, "counting identities");
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let slots = n * (n - 1) / 2;
    (0..1u32 << slots)
        .map(|mask| {
            let mut g = Graph::new(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> idx & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
        .collect()
}

/// A star here means complete bipartite with a singleton part, which for
/// two vertices includes K_2.
fn is_star(g: &Graph) -> bool {
    recognize_multipartite(g)
        .partition()
        .is_some_and(|p| p.part_count() == 2 && p.sizes()[0] == 1)
}

/// Criterion 8: Characterizations hold for every travel groupoid found by brute force
/// on every labeled graph with 2..=5 vertices: (tcm) iff the graph is
/// complete multipartite; associativity iff the table is right projection
/// iff the graph is complete; (tcb) with a left unit iff the graph is a star.
#[test]
fn criterion_8_characterizations_order_5() {
    let mut seen = 0usize;
    for n in 2..=5 {
        for g in all_graphs(n) {
            let multipartite = recognize_multipartite(&g).partition().is_some();
            let complete = g.edge_count() == n * (n - 1) / 2;
            let star = is_star(&g);
            for t in enumerate_bruteforce(&g).unwrap() {
                seen += 1;
                assert_eq!(t.satisfies_tcm(), multipartite, "{:?}", t.rows());
                let right_proj = t == Groupoid::right_projection(n);
                assert_eq!(t.is_associative(), right_proj, "{:?}", t.rows());
                assert_eq!(right_proj, complete, "{:?}", t.rows());
                assert_eq!(
                    t.satisfies_tcb() && t.has_left_unit(),
                    star,
                    "{:?}",
                    t.rows()
                );
            }
        }
    }
    assert!(seen > 0);
    pass(8, "order-5 characterizations");
}

/// Criterion 9: At least one K_{2,3} census member is simultaneously simple and smooth.
#[test]
fn criterion_9_simple_smooth_exists() {
    let found = census(&[2, 3])
        .into_iter()
        .any(|g| g.is_simple() && g.is_smooth());
    assert!(found);
    pass(9, "simple smooth existence");
}
