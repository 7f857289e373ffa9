//! Golden operation tables used throughout the test suite, with vertices
//! u_1..u_n mapped to 0..n-1.

use crate::groupoid::Groupoid;

/// The 5-element travel groupoid on K_{2,3} with parts {0,1} and {2,3,4}.
/// It is semi-smooth but not smooth.
pub fn k23_example() -> Groupoid {
    Groupoid::from_rows(&[
        vec![0, 2, 2, 3, 4],
        vec![4, 1, 2, 3, 4],
        vec![0, 1, 2, 0, 0],
        vec![0, 1, 1, 3, 1],
        vec![0, 1, 1, 1, 4],
    ])
    .expect("fixture table is well formed")
}

/// A 4-element travel groupoid on the diamond (edges 01, 12, 13, 23), a
/// diameter-2 graph that is not complete multipartite; u4 *^2 u1 = u2.
pub fn remark_diamond() -> Groupoid {
    Groupoid::from_rows(&[
        vec![0, 1, 1, 1],
        vec![0, 1, 2, 3],
        vec![1, 1, 2, 3],
        vec![2, 1, 2, 3],
    ])
    .expect("fixture table is well formed")
}
