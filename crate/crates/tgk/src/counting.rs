//! Exact big-integer evaluation of the census formulas for complete
//! multipartite graphs. The multinomial sums are evaluated literally, as
//! printed; the power-form simplifications are kept as separate functions so
//! the two routes can be checked against each other.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("part size list must be nonempty")]
    EmptyPartList,
    #[error("part sizes must be positive")]
    ZeroPartSize,
    #[error("part index {p} out of range ({parts} parts)")]
    PartIndexOutOfRange { p: usize, parts: usize },
    #[error("multinomial parts sum to {total}, expected {n}")]
    SumMismatch { n: usize, total: usize },
    #[error("an edgeless graph on {n} > 1 vertices has no travel groupoid")]
    EdgelessGraph { n: usize },
}

/// Part sizes (n_1, ..., n_l) of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSizes {
    sizes: Vec<usize>,
}

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self, CountingError> {
        if sizes.is_empty() {
            return Err(CountingError::EmptyPartList);
        }
        if sizes.contains(&0) {
            return Err(CountingError::ZeroPartSize);
        }
        Ok(PartSizes { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn check_part(&self, p: usize) -> Result<usize, CountingError> {
        self.sizes
            .get(p)
            .copied()
            .ok_or(CountingError::PartIndexOutOfRange {
                p,
                parts: self.sizes.len(),
            })
    }

    fn reject_edgeless(&self) -> Result<(), CountingError> {
        if self.part_count() == 1 && self.total() > 1 {
            return Err(CountingError::EdgelessGraph { n: self.total() });
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// n! / (parts_1! ... parts_k!); the parts must sum to n.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint, CountingError> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(CountingError::SumMismatch { n, total });
    }
    let denom = parts
        .iter()
        .fold(BigUint::one(), |acc, &k| acc * factorial(k));
    Ok(factorial(n) / denom)
}

/// All compositions of `total` into `k` nonnegative parts, colexicographic
/// over the part indices.
pub struct Compositions {
    k: usize,
    current: Option<Vec<usize>>,
}

pub fn compositions(total: usize, k: usize) -> Compositions {
    let current = if k == 0 {
        if total == 0 {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        let mut first = vec![0; k];
        first[0] = total;
        Some(first)
    };
    Compositions { k, current }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let comp = self.current.take()?;
        if self.k > 0 {
            // move one unit rightward from the first nonzero slot
            if let Some(i) = (0..self.k - 1).find(|&i| comp[i] > 0) {
                let mut next = comp.clone();
                let head = next[i] - 1;
                next[i] = 0;
                next[0] = head;
                next[i + 1] += 1;
                self.current = Some(next);
            }
        }
        Some(comp)
    }
}

/// |S_G(x)| for any x in part p (0-based): the multinomial sum over all
/// ways the n_p - 1 non-root vertices of part p attach to the n - n_p
/// vertices outside it.
pub fn count_s(sizes: &PartSizes, p: usize) -> Result<BigUint, CountingError> {
    let n_p = sizes.check_part(p)?;
    let outside = sizes.total() - n_p;
    let mut sum = BigUint::zero();
    for comp in compositions(n_p - 1, outside) {
        sum += multinomial(n_p - 1, &comp)?;
    }
    Ok(sum)
}

/// The power form of `count_s`: (n - n_p)^(n_p - 1), equal to the literal
/// sum by the multinomial theorem.
pub fn count_s_closed(sizes: &PartSizes, p: usize) -> Result<BigUint, CountingError> {
    let n_p = sizes.check_part(p)?;
    let outside = sizes.total() - n_p;
    Ok(BigUint::from(outside).pow((n_p - 1) as u32))
}

/// Number of travel groupoids on K_{n_1,...,n_l}: the product over parts of
/// count_s(p)^(n_p).
pub fn count_travel_groupoids(sizes: &PartSizes) -> Result<BigUint, CountingError> {
    sizes.reject_edgeless()?;
    let mut product = BigUint::one();
    for p in 0..sizes.part_count() {
        product *= count_s(sizes, p)?.pow(sizes.sizes[p] as u32);
    }
    Ok(product)
}

/// Number of simple travel groupoids on K_{n_1,...,n_l}: for each part p the
/// product over k = 1..n_p of the multinomial sum over compositions of
/// n_p - k, evaluated literally.
pub fn count_simple_travel_groupoids(sizes: &PartSizes) -> Result<BigUint, CountingError> {
    sizes.reject_edgeless()?;
    let mut product = BigUint::one();
    for p in 0..sizes.part_count() {
        let n_p = sizes.sizes[p];
        let outside = sizes.total() - n_p;
        for k in 1..=n_p {
            let mut sum = BigUint::zero();
            for comp in compositions(n_p - k, outside) {
                sum += multinomial(n_p - k, &comp)?;
            }
            product *= sum;
        }
    }
    Ok(product)
}

/// The power form of the simple count: the product over parts of
/// (n - n_p)^(n_p (n_p - 1) / 2).
pub fn count_simple_closed(sizes: &PartSizes) -> Result<BigUint, CountingError> {
    sizes.reject_edgeless()?;
    let n = sizes.total();
    let mut product = BigUint::one();
    for &n_p in &sizes.sizes {
        let exponent = n_p * (n_p - 1) / 2;
        product *= BigUint::from(n - n_p).pow(exponent as u32);
    }
    Ok(product)
}
