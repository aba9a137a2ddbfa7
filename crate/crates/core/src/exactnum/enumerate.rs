//! Index sets for the explicit sums: compositions and partition vectors.

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Ordered tuples of `parts` integers, each at least `min_part`, summing to
/// `total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositionSpec {
    pub total: usize,
    pub parts: usize,
    pub min_part: usize,
}

impl CompositionSpec {
    /// Only minimum parts 0 and 1 occur in the formulas.
    pub fn new(total: usize, parts: usize, min_part: usize) -> Result<Self> {
        if parts == 0 {
            return Err(Error::InvalidArgument("a composition needs at least one part".into()));
        }
        if min_part > 1 {
            return Err(Error::InvalidArgument(format!(
                "minimum part must be 0 or 1, got {min_part}"
            )));
        }
        Ok(CompositionSpec {
            total,
            parts,
            min_part,
        })
    }

    pub fn positive(total: usize, parts: usize) -> Result<Self> {
        Self::new(total, parts, 1)
    }

    pub fn nonnegative(total: usize, parts: usize) -> Result<Self> {
        Self::new(total, parts, 0)
    }

    pub fn iter(&self) -> Compositions {
        Compositions::new(*self)
    }
}

/// Lexicographic stream of compositions.
#[derive(Clone, Debug)]
pub struct Compositions {
    spec: CompositionSpec,
    current: Option<Vec<usize>>,
}

impl Compositions {
    fn new(spec: CompositionSpec) -> Self {
        let k = spec.parts;
        let floor = k * spec.min_part;
        let current = (k > 0 && spec.total >= floor).then(|| {
            let mut v = vec![spec.min_part; k];
            v[k - 1] = spec.total - (k - 1) * spec.min_part;
            v
        });
        Compositions { spec, current }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        let k = cur.len();
        let min = self.spec.min_part;
        // rightmost i < k-1 whose tail can give up one unit
        let mut tail = cur[k - 1];
        let mut i = k - 1;
        let found = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if tail > (k - 1 - i) * min {
                break Some(i);
            }
            tail += cur[i];
        };
        match found {
            None => self.current = None,
            Some(i) => {
                cur[i] += 1;
                let rest = tail - 1;
                for slot in cur.iter_mut().take(k - 1).skip(i + 1) {
                    *slot = min;
                }
                cur[k - 1] = rest - (k - 2 - i) * min;
            }
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        self.advance();
        Some(out)
    }
}

pub fn enumerate_compositions(spec: CompositionSpec) -> Compositions {
    spec.iter()
}

/// Multiplicity form of a partition of `m`: `t[i-1]` copies of the part `i`,
/// with `sum i * t_i = m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionVector {
    m: usize,
    t: Vec<usize>,
}

impl PartitionVector {
    pub fn new(m: usize, t: Vec<usize>) -> Result<Self> {
        let weight: usize = t.iter().enumerate().map(|(i, ti)| (i + 1) * ti).sum();
        if weight != m || t.len() != m {
            return Err(Error::InvalidArgument(format!(
                "multiplicities {t:?} do not describe a partition of {m}"
            )));
        }
        Ok(PartitionVector { m, t })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `t_1, ..., t_m`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.t
    }

    /// `t_1 + ... + t_m`, the number of parts.
    pub fn part_count(&self) -> usize {
        self.t.iter().sum()
    }

    fn from_parts(m: usize, parts: &[usize]) -> Self {
        let mut t = vec![0; m];
        for &p in parts {
            t[p - 1] += 1;
        }
        PartitionVector { m, t }
    }
}

/// All partitions of `m`, from `m` itself down to `1 + 1 + ... + 1`
/// (reverse lexicographic order of the nonincreasing part lists).
#[derive(Clone, Debug)]
pub struct PartitionVectors {
    m: usize,
    parts: Option<Vec<usize>>,
}

impl Iterator for PartitionVectors {
    type Item = PartitionVector;

    fn next(&mut self) -> Option<PartitionVector> {
        let parts = self.parts.as_mut()?;
        let out = PartitionVector::from_parts(self.m, parts);
        match parts.iter().rposition(|&p| p > 1) {
            None => self.parts = None,
            Some(i) => {
                let ones = parts.len() - i - 1;
                let v = parts[i] - 1;
                parts.truncate(i);
                parts.push(v);
                let mut rest = ones + 1;
                while rest >= v {
                    parts.push(v);
                    rest -= v;
                }
                if rest > 0 {
                    parts.push(rest);
                }
            }
        }
        Some(out)
    }
}

pub fn enumerate_partition_vectors(m: usize) -> Result<PartitionVectors> {
    if m == 0 {
        return Err(Error::InvalidArgument("partition vectors need m >= 1".into()));
    }
    Ok(PartitionVectors {
        m,
        parts: Some(vec![m]),
    })
}

/// For `k = 0..=max_parts`, the sum over compositions of `total` into `k`
/// parts (each `>= min_part`) of `prod weights[part]`.
///
/// Same value as enumerating the compositions, but by repeated convolution,
/// so it stays cheap when the number of nonnegative compositions explodes.
/// Weights beyond `weights.len()` count as zero.
pub fn composition_sums(
    weights: &[Rational],
    total: usize,
    max_parts: usize,
    min_part: usize,
) -> Vec<Rational> {
    let w = |i: usize| weights.get(i);
    let mut out = Vec::with_capacity(max_parts + 1);
    // cur[s]: sum over compositions of s into the current number of parts
    let mut cur = vec![Rational::zero(); total + 1];
    cur[0] = Rational::one();
    out.push(cur[total].clone());
    for _ in 0..max_parts {
        let mut next = vec![Rational::zero(); total + 1];
        for (s, slot) in next.iter_mut().enumerate() {
            for i in min_part..=s {
                if let Some(wi) = w(i) {
                    if !wi.is_zero() && !cur[s - i].is_zero() {
                        *slot += wi * &cur[s - i];
                    }
                }
            }
        }
        cur = next;
        out.push(cur[total].clone());
    }
    out
}
