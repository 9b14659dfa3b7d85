//! Integer partitions and set partitions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Union of the multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut out = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.0[i..].iter().take_while(|&&q| q == p).count();
            out *= num_traits::pow(BigInt::from(p), m) * factorial(m);
            i += m;
        }
        out
    }

    /// Parses `2,1,1` (or `211` for single-digit parts).
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim();
        let parts: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        parts.map(Partition::new)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Partitions of `n` in decreasing lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `n! / prod k_i!`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let n: usize = parts.iter().sum();
    factorial(n) / parts.iter().map(|&k| factorial(k)).product::<BigInt>()
}

/// A set partition of `{0, ..., n-1}`, stored as the restricted growth
/// string: `labels[x]` is the index of the block of `x`, blocks numbered by
/// their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
}

impl SetPartition {
    /// Builds from arbitrary block labels, renumbering canonically.
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let labels = raw
            .iter()
            .map(|&l| match map.iter().find(|(k, _)| *k == l) {
                Some(&(_, v)) => v,
                None => {
                    let v = map.len();
                    map.push((l, v));
                    v
                }
            })
            .collect();
        SetPartition { labels }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                raw[x] = b;
            }
        }
        assert!(raw.iter().all(|&l| l != usize::MAX), "blocks must cover the ground set");
        Self::from_labels(&raw)
    }

    pub fn discrete(n: usize) -> Self {
        SetPartition { labels: (0..n).collect() }
    }

    pub fn single_block(n: usize) -> Self {
        SetPartition { labels: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x]
    }

    /// Number of blocks `l(pi)`.
    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks in canonical order, each increasing.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Sorted block sizes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks().iter().map(Vec::len).collect())
    }

    /// `self <= other` in the refinement order (every block of `self` lies
    /// in a block of `other`).
    pub fn refines(&self, other: &SetPartition) -> bool {
        let mut image = vec![usize::MAX; self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            if image[b] == usize::MAX {
                image[b] = other.labels[x];
            } else if image[b] != other.labels[x] {
                return false;
            }
        }
        true
    }

    /// Image under a permutation `sigma` (0-based one-line notation).
    pub fn permute(&self, sigma: &[usize]) -> SetPartition {
        let mut raw = vec![0; self.n()];
        for (x, &b) in self.labels.iter().enumerate() {
            raw[sigma[x]] = b;
        }
        SetPartition::from_labels(&raw)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// All set partitions of `{0..n-1}`, in lexicographic order of their
/// restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            out.push(SetPartition { labels: labels.clone() });
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            labels.push(l);
            rec(labels, max.max(l), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetPartition { labels: Vec::new() });
    } else {
        rec(&mut Vec::new(), 0, n, &mut out);
    }
    out
}

/// `mu(pi, 1̂)` in the partition lattice: `(-1)^{l-1} (l-1)!`.
pub fn partition_mobius(pi: &SetPartition) -> BigInt {
    let l = pi.num_blocks();
    let f = factorial(l.saturating_sub(1));
    if l % 2 == 1 {
        f
    } else {
        -f
    }
}

/// The closed form `(-1)^l (l-1)!` in the sign convention that appears in
/// the literature on this poset; it is the negative of [`partition_mobius`].
pub fn partition_mobius_printed(pi: &SetPartition) -> BigInt {
    -partition_mobius(pi)
}

/// `mu(pi, 1̂)` by the defining recursion over the interval `[pi, 1̂]`.
pub fn partition_mobius_recursive(pi: &SetPartition) -> i64 {
    let n = pi.n();
    let above: Vec<SetPartition> = set_partitions(n).into_iter().filter(|s| pi.refines(s)).collect();
    let top = SetPartition::single_block(n);
    // Descending by number of blocks so that coarser partitions come first.
    let mut order: Vec<usize> = (0..above.len()).collect();
    order.sort_by_key(|&i| above[i].num_blocks());
    let mut mu = vec![0i64; above.len()];
    for (k, &i) in order.iter().enumerate() {
        mu[i] = if above[i] == top {
            1
        } else {
            -order[..k]
                .iter()
                .filter(|&&j| above[i].refines(&above[j]) && above[i] != above[j])
                .map(|&j| mu[j])
                .sum::<i64>()
        };
    }
    mu[above.iter().position(|s| s == pi).unwrap()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (0..9).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![Partition(vec![3]), Partition(vec![2, 1]), Partition(vec![1, 1, 1])]);
    }

    #[test]
    fn bell_numbers() {
        let b: Vec<usize> = (0..8).map(|n| set_partitions(n).len()).collect();
        assert_eq!(b, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn transpose_and_z() {
        let p = Partition::new(vec![3, 1, 1]);
        assert_eq!(p.transpose(), Partition(vec![3, 1, 1]));
        assert_eq!(Partition::new(vec![2, 2]).transpose(), Partition(vec![2, 2]));
        assert_eq!(Partition::new(vec![4]).transpose(), Partition(vec![1, 1, 1, 1]));
        assert_eq!(Partition::new(vec![2, 1, 1]).z(), BigInt::from(4));
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).z(), BigInt::from(24));
        assert_eq!(Partition::parse("2,1,1"), Some(Partition(vec![2, 1, 1])));
        assert_eq!(Partition::parse("211"), Some(Partition(vec![2, 1, 1])));
    }

    #[test]
    fn mobius_closed_form_matches_recursion() {
        for n in 1..=5 {
            for pi in set_partitions(n) {
                assert_eq!(partition_mobius(&pi), BigInt::from(partition_mobius_recursive(&pi)), "{pi}");
                assert_eq!(partition_mobius_printed(&pi), -partition_mobius(&pi));
            }
        }
        assert_eq!(partition_mobius(&SetPartition::single_block(4)), BigInt::from(1));
        assert_eq!(partition_mobius(&SetPartition::discrete(3)), BigInt::from(2));
        assert_eq!(partition_mobius(&SetPartition::discrete(4)), BigInt::from(-6));
        assert_eq!(partition_mobius_printed(&SetPartition::discrete(3)), BigInt::from(-2));
    }

    #[test]
    fn refinement_and_permutation() {
        let a = SetPartition::from_blocks(4, &[vec![0], vec![1, 2], vec![3]]);
        let b = SetPartition::from_blocks(4, &[vec![0, 3], vec![1, 2]]);
        assert!(a.refines(&b) && !b.refines(&a));
        assert_eq!(a.to_string(), "1|23|4");
        assert_eq!(a.shape(), Partition(vec![2, 1, 1]));
        let c = a.permute(&[1, 0, 3, 2]);
        assert_eq!(c.to_string(), "14|2|3");
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
    }
}
