//! The parabolic coset poset `P = { w W_X }` ordered by inclusion.
//!
//! A coset is stored as its minimal-length representative together with the
//! index of its flat. Ranks follow `rk(w W_X) = 1 + codim(X)`, so the
//! singletons have rank 1 and `W` has rank `n + 1`; the proper part `P̄`
//! consists of the cosets of rank `1..=n`.

use std::collections::HashMap;

use crate::burnside::reflection_subgroup;
use crate::coxgroup::{Element, Group};
use crate::error::{Error, Result};
use crate::flats::IntersectionLattice;
use crate::linalg;

/// Default bound on the number of cosets.
pub const DEFAULT_POSET_CAP: u128 = 200_000;

/// Default bound on the number of chains enumerated by brute-force oracles.
pub const DEFAULT_CHAIN_CAP: u128 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub rep: Element,
    pub flat: usize,
}

pub struct CosetPoset<'a> {
    group: &'a Group,
    lattice: &'a IntersectionLattice,
    cosets: Vec<Coset>,
    index: HashMap<Coset, usize>,
    /// `coset_rep[x][w]` is the minimal representative of `w W_x`.
    coset_rep: Vec<Vec<u32>>,
    subgroups: Vec<Vec<Element>>,
    up: Vec<Vec<usize>>,
}

impl<'a> CosetPoset<'a> {
    pub fn new(group: &'a Group, lattice: &'a IntersectionLattice) -> Result<Self> {
        Self::with_cap(group, lattice, DEFAULT_POSET_CAP)
    }

    pub fn with_cap(group: &'a Group, lattice: &'a IntersectionLattice, cap: u128) -> Result<Self> {
        let subgroups: Vec<Vec<Element>> = lattice
            .flats()
            .iter()
            .map(|f| reflection_subgroup(group, f.reflections))
            .collect();
        let size: u128 = subgroups.iter().map(|s| (group.order() / s.len()) as u128).sum();
        if size > cap {
            return Err(Error::SizeCap { what: "coset poset", size, cap });
        }
        let mut coset_rep = Vec::with_capacity(lattice.len());
        let mut by_flat: Vec<Vec<Element>> = Vec::with_capacity(lattice.len());
        for sub in &subgroups {
            let mut rep = vec![u32::MAX; group.order()];
            let mut reps = Vec::new();
            for w in group.elements() {
                if rep[w.index()] != u32::MAX {
                    continue;
                }
                reps.push(w);
                for &h in sub {
                    rep[group.mul(w, h).index()] = w.0;
                }
            }
            coset_rep.push(rep);
            by_flat.push(reps);
        }
        let mut cosets = Vec::with_capacity(size as usize);
        for (x, reps) in by_flat.iter().enumerate() {
            cosets.extend(reps.iter().map(|&rep| Coset { rep, flat: x }));
        }
        let index: HashMap<Coset, usize> = cosets.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let up = cosets
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = lattice
                    .above(c.flat)
                    .iter()
                    .map(|&y| index[&Coset { rep: Element(coset_rep[y][c.rep.index()]), flat: y }])
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        Ok(CosetPoset { group, lattice, cosets, index, coset_rep, subgroups, up })
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Cosets sorted by codimension of the flat, then flat, then representative.
    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn coset(&self, i: usize) -> Coset {
        self.cosets[i]
    }

    pub fn find(&self, c: Coset) -> Option<usize> {
        self.index.get(&c).copied()
    }

    /// The coset `w W_x`.
    pub fn coset_of(&self, w: Element, x: usize) -> Coset {
        Coset { rep: Element(self.coset_rep[x][w.index()]), flat: x }
    }

    pub fn index_of(&self, w: Element, x: usize) -> usize {
        self.index[&self.coset_of(w, x)]
    }

    /// Rank in `P̂`: `1 + codim`.
    pub fn rank(&self, i: usize) -> usize {
        1 + self.lattice.flat(self.cosets[i].flat).codim
    }

    pub fn top(&self) -> usize {
        self.cosets.len() - 1
    }

    /// Elements of the coset, increasing.
    pub fn members(&self, i: usize) -> Vec<Element> {
        let c = self.cosets[i];
        let mut v: Vec<Element> = self.subgroups[c.flat].iter().map(|&h| self.group.mul(c.rep, h)).collect();
        v.sort_unstable();
        v
    }

    pub fn coset_size(&self, i: usize) -> usize {
        self.subgroups[self.cosets[i].flat].len()
    }

    /// Cosets strictly containing coset `i`, increasing.
    pub fn up_set(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.up[i].binary_search(&j).is_ok()
    }

    /// Coset `i` is stabilized by left multiplication with `w`.
    pub fn is_fixed(&self, w: Element, i: usize) -> bool {
        let c = self.cosets[i];
        self.coset_rep[c.flat][self.group.mul(w, c.rep).index()] == c.rep.0
    }

    /// `w * coset i`.
    pub fn act(&self, w: Element, i: usize) -> usize {
        let c = self.cosets[i];
        self.index_of(self.group.mul(w, c.rep), c.flat)
    }

    /// Set intersection, or `None` when empty.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (self.cosets[i], self.cosets[j]);
        let z = self
            .subgroups[a.flat]
            .iter()
            .map(|&h| self.group.mul(a.rep, h))
            .find(|z| self.coset_rep[b.flat][z.index()] == b.rep.0)?;
        let r = self.lattice.flat(a.flat).reflections.intersection(self.lattice.flat(b.flat).reflections);
        let x = self.lattice.find(r).expect("intersection of parabolic reflection sets is parabolic");
        Some(self.index_of(z, x))
    }

    /// Least upper bound.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let closed = |k: usize| std::iter::once(k).chain(self.up[k].iter().copied());
        closed(i)
            .filter(|&k| self.le(j, k))
            .min_by_key(|&k| (self.rank(k), k))
            .expect("W is a common upper bound")
    }

    fn in_selection(&self, i: usize, ranks: Option<&[usize]>) -> bool {
        let r = self.rank(i);
        match ranks {
            Some(sel) => sel.contains(&r),
            None => r <= self.lattice.rank(),
        }
    }

    /// Reduced Lefschetz number of `w` on the order complex of `P̄` (or of
    /// the rank selection `P_R` when `ranks` is given).
    pub fn lefschetz_character(&self, w: Element, ranks: Option<&[usize]>) -> i64 {
        let mut g = vec![0i64; self.len()];
        let mut total = -1;
        for i in 0..self.len() {
            if !self.in_selection(i, ranks) || !self.is_fixed(w, i) {
                continue;
            }
            let v = 1 + g[i];
            total += v;
            for &j in &self.up[i] {
                g[j] -= v;
            }
        }
        total
    }

    /// Same number by explicit enumeration of the `w`-fixed chains.
    pub fn lefschetz_by_chains(&self, w: Element, ranks: Option<&[usize]>, cap: u128) -> Result<i64> {
        let fixed: Vec<usize> = (0..self.len())
            .filter(|&i| self.in_selection(i, ranks) && self.is_fixed(w, i))
            .collect();
        let is_fixed: Vec<bool> = {
            let mut v = vec![false; self.len()];
            for &i in &fixed {
                v[i] = true;
            }
            v
        };
        let mut total: i64 = -1;
        let mut count: u128 = 0;
        let mut stack: Vec<(usize, usize)> = fixed.iter().map(|&i| (i, 1)).collect();
        while let Some((i, len)) = stack.pop() {
            count += 1;
            if count > cap {
                return Err(Error::SizeCap { what: "chain enumeration", size: count, cap });
            }
            total += if len % 2 == 1 { 1 } else { -1 };
            for &j in &self.up[i] {
                if is_fixed[j] {
                    stack.push((j, len + 1));
                }
            }
        }
        Ok(total)
    }

    /// Chains of the proper part `P̄`, grouped by size (index `k` holds the
    /// chains with `k + 1` elements).
    pub fn chains(&self, cap: u128) -> Result<Vec<Vec<Vec<usize>>>> {
        let n = self.lattice.rank();
        let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut count: u128 = 0;
        let mut stack: Vec<Vec<usize>> =
            (0..self.len()).filter(|&i| self.rank(i) <= n).map(|i| vec![i]).collect();
        stack.reverse();
        while let Some(chain) = stack.pop() {
            count += 1;
            if count > cap {
                return Err(Error::SizeCap { what: "order complex", size: count, cap });
            }
            let last = *chain.last().unwrap();
            for &j in self.up[last].iter().rev() {
                if self.rank(j) <= n {
                    let mut c = chain.clone();
                    c.push(j);
                    stack.push(c);
                }
            }
            out[chain.len() - 1].push(chain);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        Ok(out)
    }

    /// Reduced Betti numbers over `Q` of the order complex of `P̄`.
    pub fn betti_numbers(&self, cap: u128) -> Result<Vec<usize>> {
        let chains = self.chains(cap)?;
        let index: Vec<HashMap<&[usize], usize>> = chains
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
            .collect();
        // ranks[k] is the rank of the boundary from k-chains to (k-1)-chains,
        // with the augmentation at k = 0.
        let dims: Vec<usize> = chains.iter().map(Vec::len).collect();
        let mut ranks = vec![0usize; dims.len() + 1];
        ranks[0] = usize::from(dims.first().is_some_and(|&d| d > 0));
        for k in 1..dims.len() {
            let rows: Vec<Vec<(usize, i64)>> = chains[k]
                .iter()
                .map(|c| {
                    (0..c.len())
                        .map(|drop| {
                            let face: Vec<usize> =
                                c.iter().enumerate().filter(|&(p, _)| p != drop).map(|(_, &v)| v).collect();
                            let sign = if drop % 2 == 0 { 1 } else { -1 };
                            (index[k - 1][face.as_slice()], sign)
                        })
                        .collect()
                })
                .collect();
            ranks[k] = linalg::sparse_rank(rows);
        }
        Ok((0..dims.len()).map(|k| dims[k] - ranks[k] - ranks[k + 1]).collect())
    }

    /// Number of chains of `P̄` whose rank set is exactly `ranks`.
    pub fn flag_f(&self, ranks: &[usize]) -> u128 {
        let mut sorted = ranks.to_vec();
        sorted.sort_unstable();
        if sorted.is_empty() {
            return 1;
        }
        let mut cnt = vec![0u128; self.len()];
        for i in 0..self.len() {
            let r = self.rank(i);
            if r == sorted[0] {
                cnt[i] = 1;
            }
        }
        for pair in sorted.windows(2) {
            for i in 0..self.len() {
                if self.rank(i) == pair[0] && cnt[i] > 0 {
                    for &j in &self.up[i] {
                        if self.rank(j) == pair[1] {
                            cnt[j] += cnt[i];
                        }
                    }
                }
            }
            for i in 0..self.len() {
                if self.rank(i) == pair[0] {
                    cnt[i] = 0;
                }
            }
        }
        let last = *sorted.last().unwrap();
        (0..self.len()).filter(|&i| self.rank(i) == last).map(|i| cnt[i]).sum()
    }

    /// Flag h-number `beta(R) = sum_{T ⊆ R} (-1)^{|R \ T|} alpha(T)`.
    pub fn flag_h(&self, ranks: &[usize]) -> i128 {
        let k = ranks.len();
        (0u32..1 << k)
            .map(|mask| {
                let sub: Vec<usize> = (0..k).filter(|&b| mask >> b & 1 == 1).map(|b| ranks[b]).collect();
                let sign = if (k - sub.len()) % 2 == 0 { 1 } else { -1 };
                sign * self.flag_f(&sub) as i128
            })
            .sum()
    }

    /// Scalar h-vector of the order complex of `P̄`.
    pub fn h_vector(&self) -> Vec<i128> {
        let n = self.lattice.rank();
        let mut h = vec![0i128; n + 1];
        for mask in 0u32..1 << n {
            let ranks: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            h[ranks.len()] += self.flag_h(&ranks);
        }
        h
    }

    /// Number of maximal chains of `P̄`.
    pub fn count_maximal_chains(&self) -> u128 {
        let ranks: Vec<usize> = (1..=self.lattice.rank()).collect();
        self.flag_f(&ranks)
    }

    /// `mu_{P̂}(0, 1)`, computed by the Möbius recursion on `P̂`.
    pub fn mobius_hat(&self) -> i64 {
        // mu(0, x) = -sum_{0 <= y < x} mu(0, y) with mu(0, 0) = 1.
        let mut acc = vec![1i64; self.len()];
        let mut mu = vec![0i64; self.len()];
        for i in 0..self.len() {
            mu[i] = -acc[i];
            for &j in &self.up[i] {
                acc[j] += mu[i];
            }
        }
        mu[self.top()]
    }
}
