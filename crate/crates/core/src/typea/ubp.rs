//! Uniform block permutations and their identification with the parabolic
//! coset poset of the symmetric group.

use std::collections::HashMap;
use std::fmt;

use super::partitions::{set_partitions, SetPartition};
use super::flat_set_partition;
use crate::cosetposet::CosetPoset;
use crate::error::{Error, Result};

/// Largest size for which all uniform block permutations are enumerated.
pub const MAX_UBP_SIZE: usize = 6;

/// A triple `(pi_1, pi_2, lambda)`: `source` is `pi_1` and
/// `target_labels[y]` is the block of `pi_1` sent onto the block of `pi_2`
/// containing `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ubp {
    source: SetPartition,
    target_labels: Vec<usize>,
}

impl Ubp {
    /// Builds and validates a uniform block permutation from the two
    /// partitions and the block map `lambda[b] = index of target block`.
    pub fn new(source: SetPartition, target: SetPartition, lambda: &[usize]) -> Result<Ubp> {
        let sb = source.blocks();
        let tb = target.blocks();
        if sb.len() != tb.len() || lambda.len() != sb.len() {
            return Err(Error::InvalidArgument("block counts differ".into()));
        }
        let mut used = vec![false; tb.len()];
        let mut target_labels = vec![0; target.n()];
        for (b, &t) in lambda.iter().enumerate() {
            if t >= tb.len() || used[t] || sb[b].len() != tb[t].len() {
                return Err(Error::InvalidArgument("block map is not a size-preserving bijection".into()));
            }
            used[t] = true;
            for &y in &tb[t] {
                target_labels[y] = b;
            }
        }
        Ok(Ubp { source, target_labels })
    }

    /// Builds from matched blocks `(b, lambda(b))` given as element lists.
    pub fn from_block_pairs(n: usize, pairs: &[(Vec<usize>, Vec<usize>)]) -> Result<Ubp> {
        let source = SetPartition::from_blocks(n, &pairs.iter().map(|p| p.0.clone()).collect::<Vec<_>>());
        let target = SetPartition::from_blocks(n, &pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
        let lambda: Vec<usize> = source
            .blocks()
            .iter()
            .map(|b| {
                let pair = pairs.iter().find(|p| p.0.contains(&b[0])).unwrap();
                target.block_of(pair.1[0])
            })
            .collect();
        Ubp::new(source, target, &lambda)
    }

    /// The minimal element `(1|2|...|n, sigma_1|...|sigma_n)`.
    pub fn from_permutation(sigma: &[usize]) -> Ubp {
        let n = sigma.len();
        let mut target_labels = vec![0; n];
        for (x, &y) in sigma.iter().enumerate() {
            target_labels[y] = x;
        }
        Ubp { source: SetPartition::discrete(n), target_labels }
    }

    pub fn source(&self) -> &SetPartition {
        &self.source
    }

    pub fn target(&self) -> SetPartition {
        SetPartition::from_labels(&self.target_labels)
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// `self <= other`: both partitions refine and `other`'s block map is
    /// the quotient of `self`'s.
    pub fn le(&self, other: &Ubp) -> bool {
        if !self.source.refines(&other.source) {
            return false;
        }
        let blocks = self.source.blocks();
        self.target_labels
            .iter()
            .zip(&other.target_labels)
            .all(|(&b, &ob)| other.source.block_of(blocks[b][0]) == ob)
    }
}

impl fmt::Display for Ubp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.source.blocks();
        let show = |xs: &[usize]| xs.iter().map(|x| (x + 1).to_string()).collect::<String>();
        let src: Vec<String> = blocks.iter().map(|b| show(b)).collect();
        let tgt: Vec<String> = (0..blocks.len())
            .map(|b| {
                let ys: Vec<usize> = (0..self.n()).filter(|&y| self.target_labels[y] == b).collect();
                show(&ys)
            })
            .collect();
        write!(f, "({}, {})", src.join("|"), tgt.join("|"))
    }
}

/// All uniform block permutations of size `n`, sorted.
pub fn ubps(n: usize) -> Result<Vec<Ubp>> {
    if n > MAX_UBP_SIZE {
        return Err(Error::SizeCap { what: "uniform block permutations", size: n as u128, cap: MAX_UBP_SIZE as u128 });
    }
    fn assign(
        sizes: &[usize],
        b: usize,
        free: u32,
        labels: &mut Vec<usize>,
        source: &SetPartition,
        out: &mut Vec<Ubp>,
    ) {
        if b == sizes.len() {
            out.push(Ubp { source: source.clone(), target_labels: labels.clone() });
            return;
        }
        let mut sub = free;
        loop {
            if sub.count_ones() as usize == sizes[b] {
                for y in 0..labels.len() {
                    if sub >> y & 1 == 1 {
                        labels[y] = b;
                    }
                }
                assign(sizes, b + 1, free & !sub, labels, source, out);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    let mut out = Vec::new();
    for source in set_partitions(n) {
        let sizes: Vec<usize> = source.blocks().iter().map(Vec::len).collect();
        let mut labels = vec![0; n];
        assign(&sizes, 0, (1u32 << n) - 1, &mut labels, &source, &mut out);
    }
    out.sort();
    Ok(out)
}

/// The uniform block permutation `(pi, sigma(pi), sigma-bar)` of the coset
/// `sigma S_pi`.
pub fn coset_to_ubp(poset: &CosetPoset, i: usize) -> Result<Ubp> {
    let g = poset.group();
    let c = poset.coset(i);
    let sigma = g
        .permutation(c.rep)
        .ok_or_else(|| Error::InvalidArgument("uniform block permutations need type A".into()))?;
    let pi = flat_set_partition(g, poset.lattice().flat(c.flat).reflections)?;
    let mut target_labels = vec![0; sigma.len()];
    for (x, &y) in sigma.iter().enumerate() {
        target_labels[y] = pi.block_of(x);
    }
    Ok(Ubp { source: pi, target_labels })
}

/// Explicit isomorphism from the coset poset of `A_{n-1}` onto the poset of
/// uniform block permutations of size `n`: entry `i` is the index (in
/// [`ubps`] order) of the image of coset `i`. Bijectivity and preservation
/// and reflection of the order are verified exhaustively.
pub fn ubp_isomorphism(poset: &CosetPoset) -> Result<Vec<usize>> {
    let n = poset.group().rank() + 1;
    let all = ubps(n)?;
    let index: HashMap<&Ubp, usize> = all.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let images: Vec<Ubp> = (0..poset.len()).map(|i| coset_to_ubp(poset, i)).collect::<Result<_>>()?;
    let map: Vec<usize> = images
        .iter()
        .map(|u| index.get(u).copied().ok_or_else(|| Error::InvalidArgument(format!("{u} is not uniform"))))
        .collect::<Result<_>>()?;
    let mut hit = vec![false; all.len()];
    for &m in &map {
        if std::mem::replace(&mut hit[m], true) {
            return Err(Error::InvalidArgument("coset map is not injective".into()));
        }
    }
    if map.len() != all.len() {
        return Err(Error::InvalidArgument("coset map is not surjective".into()));
    }
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            if poset.le(i, j) != images[i].le(&images[j]) {
                return Err(Error::InvalidArgument(format!("order mismatch at cosets {i}, {j}")));
            }
        }
    }
    Ok(map)
}
