//! Permutation genomes and the two variation operators that act on them.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A permutation of `0..n`, `n >= 1`.
///
/// For N-queens position `i` is a column and the value its row; for TSP the
/// sequence is the visiting order of point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genome(Vec<usize>);

impl Genome {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm)?;
        Ok(Self(perm))
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGenome);
        }
        Ok(Self((0..n).collect()))
    }

    /// Uniformly random permutation (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut g = Self::identity(n)?;
        g.0.shuffle(rng);
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl AsRef<[usize]> for Genome {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for Genome {
    type Error = Error;

    fn try_from(perm: Vec<usize>) -> Result<Self> {
        Self::new(perm)
    }
}

impl fmt::Display for Genome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn is_permutation(values: &[usize]) -> bool {
    check_permutation(values).is_ok()
}

fn check_permutation(values: &[usize]) -> Result<()> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyGenome);
    }
    let mut seen = vec![false; n];
    for &v in values {
        if v >= n {
            return Err(Error::NotAPermutation {
                len: n,
                reason: format!("value {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation {
                len: n,
                reason: format!("value {v} repeated"),
            });
        }
    }
    Ok(())
}

/// Order crossover (OX) with a uniformly random segment.
///
/// The child keeps `a[start..=end]` in place and fills the other slots,
/// starting after the segment and wrapping around, with the remaining genes in
/// the order they appear in `b` (also read from just after the segment).
/// Asymmetric: `order_crossover(a, b)` and `order_crossover(b, a)` differ in
/// general.
pub fn order_crossover<R: Rng + ?Sized>(a: &Genome, b: &Genome, rng: &mut R) -> Result<Genome> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: b.len(),
        });
    }
    let i = rng.gen_range(0..n);
    let j = rng.gen_range(0..n);
    order_crossover_segment(a, b, i.min(j), i.max(j))
}

/// Order crossover with an explicit inclusive segment `start..=end`.
pub fn order_crossover_segment(a: &Genome, b: &Genome, start: usize, end: usize) -> Result<Genome> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: b.len(),
        });
    }
    if start > end || end >= n {
        return Err(Error::Config(format!(
            "crossover segment {start}..={end} invalid for length {n}"
        )));
    }

    let mut child = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for k in start..=end {
        child[k] = a.0[k];
        taken[a.0[k]] = true;
    }

    let mut write = (end + 1) % n;
    for offset in 1..=n {
        let gene = b.0[(end + offset) % n];
        if taken[gene] {
            continue;
        }
        child[write] = gene;
        taken[gene] = true;
        write = (write + 1) % n;
    }
    debug_assert!(is_permutation(&child));
    Ok(Genome(child))
}

/// With probability `p_m` swap two distinct uniformly chosen positions.
///
/// The Bernoulli draw is always consumed so the stream position does not depend
/// on the genome length. Single-gene genomes are returned unchanged.
pub fn swap_mutation<R: Rng + ?Sized>(mut g: Genome, p_m: f64, rng: &mut R) -> Genome {
    let fire = rng.gen::<f64>() < p_m;
    let n = g.len();
    if fire && n >= 2 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        g.0.swap(i, j);
    }
    g
}
