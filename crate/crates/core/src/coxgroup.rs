//! Finite crystallographic Coxeter groups.
//!
//! A [`Group`] is built from an exact root system. Elements are enumerated by
//! breadth-first closure over the simple generators and stored as signed
//! permutations of the positive roots; every element gets a dense index in
//! the global order (length, then lexicographically least reduced word), so
//! [`Element`] is just that index.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::bitset::{GenSet, ReflSet};
use crate::error::{Error, Result};
use crate::linalg::{self, IntEchelon};
use crate::Rational;

/// Default bound on `|W|` for enumeration.
pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;

/// Multiplication tables are materialised up to this order.
const MUL_TABLE_LIMIT: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    G2,
    F4,
}

/// Cartan-Killing type of an irreducible finite crystallographic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSymbol {
    family: Family,
    rank: usize,
}

impl GroupSymbol {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
        };
        if !ok {
            return Err(Error::InvalidSymbol(format!("{family:?} with rank {rank}")));
        }
        Ok(GroupSymbol { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// `|W|` from the classification.
    pub fn order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::G2 => 12,
            Family::F4 => 1152,
        }
    }

    /// Classical exponents `e_1 <= ... <= e_n`.
    pub fn exponents(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<u64> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::G2 => vec![1, 5],
            Family::F4 => vec![1, 5, 7, 11],
        }
    }
}

impl fmt::Display for GroupSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::G2 => write!(f, "G2"),
            Family::F4 => write!(f, "F4"),
        }
    }
}

impl FromStr for GroupSymbol {
    type Err = Error;

    /// Accepts `A3`, `A(3)`, `b4`, `G2`, `F4`, ...
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.trim().chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.to_ascii_uppercase();
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidSymbol(s.to_string()))?;
        let rest: String = chars.collect();
        let digits = rest.trim_start_matches('(').trim_end_matches(')');
        if matches!(letter, 'E' | 'H' | 'I') {
            return Err(Error::UnsupportedType(s.trim().to_string()));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::InvalidSymbol(s.to_string()))?;
        let family = match (letter, rank) {
            ('A', _) => Family::A,
            ('B', _) | ('C', _) => Family::B,
            ('D', _) => Family::D,
            ('G', 2) => Family::G2,
            ('F', 4) => Family::F4,
            ('G', _) | ('F', _) => return Err(Error::InvalidSymbol(s.to_string())),
            _ => return Err(Error::UnsupportedType(s.trim().to_string())),
        };
        GroupSymbol::new(family, rank)
    }
}

/// Index of an element in the group's global order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub u32);

impl Element {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A parabolic subgroup, given either by a subset of `S` or by its set of
/// reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parabolic {
    Standard(GenSet),
    Reflections(ReflSet),
}

/// Conjugacy classes, ordered by their least element.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub class_of: Vec<u32>,
    pub representatives: Vec<Element>,
    pub sizes: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub struct Group {
    symbol: GroupSymbol,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Rational>>,
    fundamental_weights: Vec<Vec<Rational>>,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    weight_gram: Vec<Vec<Rational>>,
    /// Positive roots first, then their negatives, in simple-root coordinates.
    roots: Vec<Vec<i64>>,
    root_lookup: HashMap<Vec<i64>, u16>,
    simple_action: Vec<Vec<u16>>,
    simple_idx: Vec<usize>,
    npos: usize,
    images: Vec<u16>,
    lengths: Vec<u16>,
    inversions: Vec<ReflSet>,
    words: Vec<Vec<u8>>,
    by_inversions: HashMap<u64, u32>,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    inverses: Vec<u32>,
    reflections: Vec<Element>,
    mul_table: Option<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("symbol", &self.symbol)
            .field("order", &self.order())
            .field("reflections", &self.npos)
            .finish()
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn ambient_simple_roots(symbol: GroupSymbol) -> (usize, Vec<Vec<Rational>>) {
    let n = symbol.rank;
    let unit = |dim: usize, pairs: &[(usize, Rational)]| {
        let mut v = vec![Rational::zero(); dim];
        for (i, x) in pairs {
            v[*i] += x.clone();
        }
        v
    };
    match symbol.family {
        Family::A => {
            let dim = n + 1;
            let roots = (0..n).map(|i| unit(dim, &[(i, int(1)), (i + 1, int(-1))])).collect();
            (dim, roots)
        }
        Family::B | Family::D => {
            let mut roots: Vec<_> = (0..n - 1)
                .map(|i| unit(n, &[(i, int(1)), (i + 1, int(-1))]))
                .collect();
            roots.push(if symbol.family == Family::B {
                unit(n, &[(n - 1, int(1))])
            } else {
                unit(n, &[(n - 2, int(1)), (n - 1, int(1))])
            });
            (n, roots)
        }
        Family::G2 => (
            3,
            vec![
                unit(3, &[(0, int(1)), (1, int(-1))]),
                unit(3, &[(0, int(-2)), (1, int(1)), (2, int(1))]),
            ],
        ),
        Family::F4 => {
            let h = Rational::new(1.into(), 2.into());
            (
                4,
                vec![
                    unit(4, &[(1, int(1)), (2, int(-1))]),
                    unit(4, &[(2, int(1)), (3, int(-1))]),
                    unit(4, &[(3, int(1))]),
                    unit(4, &[(0, h.clone()), (1, -h.clone()), (2, -h.clone()), (3, -h)]),
                ],
            )
        }
    }
}

impl Group {
    /// Builds the group with the default size cap.
    pub fn new(symbol: GroupSymbol) -> Result<Group> {
        Group::with_cap(symbol, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(symbol: GroupSymbol, cap: u128) -> Result<Group> {
        let order = symbol.order();
        if order > cap {
            return Err(Error::SizeCap { what: "group", size: order, cap });
        }
        let n = symbol.rank;
        let (ambient_dim, simple_roots) = ambient_simple_roots(symbol);

        let gram: Vec<Vec<Rational>> = simple_roots
            .iter()
            .map(|a| simple_roots.iter().map(|b| dot(a, b)).collect())
            .collect();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = int(2) * &gram[i][j] / &gram[j][j];
                        assert!(c.is_integer(), "non-crystallographic Cartan entry");
                        i64::try_from(c.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Rational>> =
            cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let cartan_inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..ambient_dim)
                    .map(|c| (0..n).map(|k| &cartan_inv[i][k] * &simple_roots[k][c]).sum())
                    .collect()
            })
            .collect();
        let weight_gram = fundamental_weights
            .iter()
            .map(|a| fundamental_weights.iter().map(|b| dot(a, b)).collect())
            .collect();

        // Root closure in simple-root coordinates.
        let reflect = |v: &[i64], i: usize| -> Vec<i64> {
            let pairing: i64 = (0..n).map(|k| v[k] * cartan[k][i]).sum();
            let mut w = v.to_vec();
            w[i] -= pairing;
            w
        };
        let mut found: Vec<Vec<i64>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
            .collect();
        while let Some(v) = queue.pop_front() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for i in 0..n {
                let w = reflect(&v, i);
                if !seen.contains(&w) {
                    queue.push_back(w);
                }
            }
            found.push(v);
        }
        let mut positive: Vec<Vec<i64>> = found.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positive.len();
        assert!(npos <= 64, "too many reflections for a 64-bit reflection set");
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let root_lookup: HashMap<Vec<i64>, u16> =
            roots.iter().enumerate().map(|(i, v)| (v.clone(), i as u16)).collect();
        let simple_action: Vec<Vec<u16>> = (0..n)
            .map(|i| roots.iter().map(|v| root_lookup[&reflect(v, i)]).collect())
            .collect();
        let simple_idx: Vec<usize> = (0..n)
            .map(|i| root_lookup[&(0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>()] as usize)
            .collect();

        let apply = |img: &[u16], r: usize| -> u16 {
            if r < npos {
                img[r]
            } else {
                let x = img[r - npos] as usize;
                (if x < npos { x + npos } else { x - npos }) as u16
            }
        };
        let inv_of = |img: &[u16]| -> ReflSet {
            ReflSet::from_indices(img.iter().enumerate().filter(|(_, &x)| x as usize >= npos).map(|(k, _)| k))
        };

        // Breadth-first enumeration by length.
        let identity: Vec<u16> = (0..npos as u16).collect();
        let mut tmp_images: Vec<Vec<u16>> = vec![identity];
        let mut tmp_inv: Vec<ReflSet> = vec![ReflSet::EMPTY];
        let mut tmp_len: Vec<u16> = vec![0];
        let mut tmp_lookup: HashMap<u64, u32> = HashMap::from([(0u64, 0u32)]);
        let mut layer: Vec<u32> = vec![0];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &w in &layer {
                for i in 0..n {
                    let img = &tmp_images[w as usize];
                    if img[simple_idx[i]] as usize >= npos {
                        continue;
                    }
                    let new: Vec<u16> =
                        (0..npos).map(|k| apply(img, simple_action[i][k] as usize)).collect();
                    let inv = inv_of(&new);
                    if tmp_lookup.contains_key(&inv.0) {
                        continue;
                    }
                    let id = tmp_images.len() as u32;
                    tmp_lookup.insert(inv.0, id);
                    tmp_len.push(tmp_len[w as usize] + 1);
                    tmp_images.push(new);
                    tmp_inv.push(inv);
                    next.push(id);
                }
            }
            layer = next;
        }
        let size = tmp_images.len();
        assert_eq!(size as u128, order, "enumeration disagrees with the order formula");

        // Canonical words: first letter is the least left descent.
        let left_tmp = |w: usize, i: usize| -> u32 {
            let img: Vec<u16> = tmp_images[w].iter().map(|&r| simple_action[i][r as usize]).collect();
            tmp_lookup[&inv_of(&img).0]
        };
        let mut tmp_words: Vec<Vec<u8>> = vec![Vec::new(); size];
        for w in 1..size {
            let (i, shorter) = (0..n)
                .map(|i| (i, left_tmp(w, i)))
                .find(|&(_, v)| tmp_len[v as usize] < tmp_len[w])
                .expect("non-identity element has a left descent");
            let mut word = vec![i as u8];
            word.extend_from_slice(&tmp_words[shorter as usize]);
            tmp_words[w] = word;
        }
        let mut order_idx: Vec<usize> = (0..size).collect();
        order_idx.sort_by(|&a, &b| tmp_len[a].cmp(&tmp_len[b]).then_with(|| tmp_words[a].cmp(&tmp_words[b])));

        let mut images = Vec::with_capacity(size * npos);
        let mut lengths = Vec::with_capacity(size);
        let mut inversions = Vec::with_capacity(size);
        let mut words = Vec::with_capacity(size);
        let mut by_inversions = HashMap::with_capacity(size);
        for (new, &old) in order_idx.iter().enumerate() {
            images.extend_from_slice(&tmp_images[old]);
            lengths.push(tmp_len[old]);
            inversions.push(tmp_inv[old]);
            words.push(std::mem::take(&mut tmp_words[old]));
            by_inversions.insert(tmp_inv[old].0, new as u32);
        }
        drop(tmp_images);

        let lookup_img = |img: &[u16]| -> u32 { by_inversions[&inv_of(img).0] };
        let mut right_mul = vec![0u32; size * n];
        let mut left_mul = vec![0u32; size * n];
        for w in 0..size {
            let img = &images[w * npos..(w + 1) * npos];
            for i in 0..n {
                let r: Vec<u16> = (0..npos).map(|k| apply(img, simple_action[i][k] as usize)).collect();
                right_mul[w * n + i] = lookup_img(&r);
                let l: Vec<u16> = img.iter().map(|&x| simple_action[i][x as usize]).collect();
                left_mul[w * n + i] = lookup_img(&l);
            }
        }
        let mut inverses = vec![0u32; size];
        for w in 0..size {
            let mut x = 0u32;
            for &i in words[w].iter().rev() {
                x = right_mul[x as usize * n + i as usize];
            }
            inverses[w] = x;
        }

        // Reflections t_beta, one per positive root.
        let norm = |v: &[i64], u: &[i64]| -> Rational {
            let mut s = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    if v[a] != 0 && u[b] != 0 {
                        s += int(v[a] * u[b]) * &gram[a][b];
                    }
                }
            }
            s
        };
        let reflections: Vec<Element> = (0..npos)
            .map(|k| {
                let beta = &roots[k];
                let bb = norm(beta, beta);
                let img: Vec<u16> = (0..npos)
                    .map(|m| {
                        let gamma = &roots[m];
                        let c = int(2) * norm(gamma, beta) / &bb;
                        let c = i64::try_from(c.to_integer()).unwrap();
                        let v: Vec<i64> = gamma.iter().zip(beta).map(|(g, b)| g - c * b).collect();
                        root_lookup[&v]
                    })
                    .collect();
                Element(lookup_img(&img))
            })
            .collect();

        let mut group = Group {
            symbol,
            ambient_dim,
            simple_roots,
            fundamental_weights,
            cartan,
            gram,
            weight_gram,
            roots,
            root_lookup,
            simple_action,
            simple_idx,
            npos,
            images,
            lengths,
            inversions,
            words,
            by_inversions,
            right_mul,
            left_mul,
            inverses,
            reflections,
            mul_table: None,
            classes: OnceLock::new(),
        };
        if size <= MUL_TABLE_LIMIT {
            let mut table = vec![0u32; size * size];
            for u in 0..size {
                table[u * size] = u as u32;
                for v in 1..size {
                    let last = *group.words[v].last().unwrap() as usize;
                    let prefix = group.right_mul[v * n + last] as usize;
                    table[u * size + v] = group.right_mul[table[u * size + prefix] as usize * n + last];
                }
            }
            group.mul_table = Some(table);
        }
        Ok(group)
    }

    pub fn symbol(&self) -> GroupSymbol {
        self.symbol
    }

    /// Rank `n = |S|`.
    pub fn rank(&self) -> usize {
        self.symbol.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator + Clone {
        (0..self.order() as u32).map(Element)
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    /// The longest element `w_0` (the unique element of maximal length).
    pub fn longest(&self) -> Element {
        Element(self.order() as u32 - 1)
    }

    pub fn num_reflections(&self) -> usize {
        self.npos
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rational>] {
        &self.fundamental_weights
    }

    /// `cartan()[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the fundamental weights.
    pub fn weight_gram(&self) -> &[Vec<Rational>] {
        &self.weight_gram
    }

    /// Gram matrix of the simple roots.
    pub fn root_gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Root `r` (positive roots are `0..num_reflections()`) in simple-root
    /// coordinates.
    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_lookup.get(coords).map(|&r| r as usize)
    }

    pub fn is_positive_root(&self, r: usize) -> bool {
        r < self.npos
    }

    /// Root `r` as an ambient vector.
    pub fn root_vector(&self, r: usize) -> Vec<Rational> {
        (0..self.ambient_dim)
            .map(|c| {
                self.roots[r]
                    .iter()
                    .zip(&self.simple_roots)
                    .map(|(&k, a)| int(k) * &a[c])
                    .sum()
            })
            .collect()
    }

    /// Root `r` in the basis of fundamental weights (integer coordinates).
    pub fn root_weight_coords(&self, r: usize) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|k| self.roots[r][k] * self.cartan[k][j]).sum())
            .collect()
    }

    /// Index of the simple root `alpha_i`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_idx[i]
    }

    /// `s_i(root r)` as a root index.
    pub fn simple_reflect_root(&self, i: usize, r: usize) -> usize {
        self.simple_action[i][r] as usize
    }

    /// Image `w(root r)` as a root index.
    pub fn root_image(&self, w: Element, r: usize) -> usize {
        let img = &self.images[w.index() * self.npos..(w.index() + 1) * self.npos];
        if r < self.npos {
            img[r] as usize
        } else {
            self.negate_root(img[r - self.npos] as usize)
        }
    }

    pub fn negate_root(&self, r: usize) -> usize {
        if r < self.npos {
            r + self.npos
        } else {
            r - self.npos
        }
    }

    /// Positive root index of `+-r`.
    pub fn positive_part(&self, r: usize) -> usize {
        r % self.npos
    }

    pub fn length(&self, w: Element) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Canonical reduced word (lexicographically least), generators 0-based.
    pub fn word(&self, w: Element) -> &[u8] {
        &self.words[w.index()]
    }

    /// Right inversion set `{ t : l(wt) < l(w) }`, by positive-root index.
    pub fn inversion_set(&self, w: Element) -> ReflSet {
        self.inversions[w.index()]
    }

    /// Left inversion set `{ t : l(tw) < l(w) }`.
    pub fn left_inversion_set(&self, w: Element) -> ReflSet {
        self.inversions[self.inverse(w).index()]
    }

    /// Element with the given right inversion set, if any.
    pub fn element_with_inversions(&self, inv: ReflSet) -> Option<Element> {
        self.by_inversions.get(&inv.0).map(|&x| Element(x))
    }

    /// `w * s_i`.
    pub fn mul_simple(&self, w: Element, i: usize) -> Element {
        Element(self.right_mul[w.index() * self.rank() + i])
    }

    /// `s_i * w`.
    pub fn simple_mul(&self, i: usize, w: Element) -> Element {
        Element(self.left_mul[w.index() * self.rank() + i])
    }

    pub fn mul(&self, u: Element, v: Element) -> Element {
        if let Some(t) = &self.mul_table {
            return Element(t[u.index() * self.order() + v.index()]);
        }
        self.word(v).iter().fold(u, |x, &i| self.mul_simple(x, i as usize))
    }

    pub fn inverse(&self, w: Element) -> Element {
        Element(self.inverses[w.index()])
    }

    /// Element given by a word in the simple generators.
    pub fn from_word(&self, word: &[usize]) -> Element {
        word.iter().fold(self.identity(), |x, &i| self.mul_simple(x, i))
    }

    /// The reflection with positive root `k`.
    pub fn reflection(&self, k: usize) -> Element {
        self.reflections[k]
    }

    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    /// Sign character `det(w) = (-1)^l(w)`.
    pub fn sign(&self, w: Element) -> i64 {
        if self.length(w) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Right descents `{ s : l(ws) < l(w) }` and ascents `S \ des(w)`.
    pub fn descents_ascents(&self, w: Element) -> (GenSet, GenSet) {
        let des = self.descents(w);
        (des, des.complement(self.rank()))
    }

    pub fn descents(&self, w: Element) -> GenSet {
        GenSet::from_indices(
            (0..self.rank()).filter(|&i| !self.is_positive_root(self.root_image(w, self.simple_root_index(i)))),
        )
    }

    pub fn ascents(&self, w: Element) -> GenSet {
        self.descents(w).complement(self.rank())
    }

    /// Conjugation of reflection sets: `{ w t w^-1 : t in r }`.
    pub fn conjugate_reflections(&self, w: Element, r: ReflSet) -> ReflSet {
        ReflSet::from_indices(r.iter().map(|k| self.positive_part(self.root_image(w, k))))
    }

    /// Reflections of the standard parabolic subgroup `W_I`.
    pub fn standard_parabolic(&self, i: GenSet) -> ReflSet {
        ReflSet::from_indices((0..self.npos).filter(|&k| {
            self.roots[k]
                .iter()
                .enumerate()
                .all(|(j, &c)| c == 0 || i.contains(j))
        }))
    }

    /// All reflections whose root lies in the span of the roots of `r`;
    /// these are exactly the reflections fixing `\bigcap_{t in r} Fix(t)`.
    pub fn parabolic_closure(&self, r: ReflSet) -> ReflSet {
        let mut ech = IntEchelon::new();
        for k in r.iter() {
            ech.insert(&self.roots[k]);
        }
        ReflSet::from_indices((0..self.npos).filter(|&k| r.contains(k) || ech.contains(&self.roots[k])))
    }

    pub fn is_parabolic(&self, r: ReflSet) -> bool {
        self.parabolic_closure(r) == r
    }

    /// Codimension of `\bigcap_{t in r} Fix(t)`, i.e. the rank of the roots.
    pub fn root_rank(&self, r: ReflSet) -> usize {
        let mut ech = IntEchelon::new();
        for k in r.iter() {
            ech.insert(&self.roots[k]);
        }
        ech.rank()
    }

    /// The unique element of minimal length in the coset `w H`.
    pub fn min_coset_representative(&self, w: Element, h: &Parabolic) -> Result<Element> {
        match *h {
            Parabolic::Standard(i) => {
                let mut x = w;
                loop {
                    match self.descents(x).iter().find(|&s| i.contains(s)) {
                        Some(s) => x = self.mul_simple(x, s),
                        None => return Ok(x),
                    }
                }
            }
            Parabolic::Reflections(r) => {
                if !self.is_parabolic(r) {
                    return Err(Error::NotParabolic(r.to_hex()));
                }
                Ok(self.min_rep_unchecked(w, r))
            }
        }
    }

    /// Like [`Group::min_coset_representative`] for a reflection set known
    /// to be parabolic.
    pub fn min_rep_unchecked(&self, w: Element, r: ReflSet) -> Element {
        let mut x = w;
        loop {
            let bad = self.inversion_set(x).intersection(r);
            match bad.iter().next() {
                Some(k) => x = self.mul(x, self.reflection(k)),
                None => return x,
            }
        }
    }

    /// Right weak order: `u <= v` iff `u` is a prefix of `v`, i.e.
    /// `l(u) + l(u^-1 v) = l(v)`. Equivalently the left inversion set of `u`
    /// is contained in that of `v`.
    pub fn weak_le(&self, u: Element, v: Element) -> bool {
        self.left_inversion_set(u).is_subset(self.left_inversion_set(v))
    }

    /// Sorts an order ideal of the right weak order into a linear extension
    /// (ties broken by the global `(length, word)` order).
    pub fn weak_order_linear_extension(&self, subset: &[Element]) -> Result<Vec<Element>> {
        let mut member = vec![false; self.order()];
        for &w in subset {
            member[w.index()] = true;
        }
        for &w in subset {
            for s in self.descents(w).iter() {
                if !member[self.mul_simple(w, s).index()] {
                    return Err(Error::NotIdeal);
                }
            }
        }
        let mut out: Vec<Element> = subset.to_vec();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Acts on a vector given in fundamental-weight coordinates.
    pub fn act_on_weight(&self, w: Element, lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &i in self.word(w).iter().rev() {
            let i = i as usize;
            let c = v[i];
            if c != 0 {
                for (x, a) in v.iter_mut().zip(&self.cartan[i]) {
                    *x -= c * a;
                }
            }
        }
        v
    }

    /// Converts fundamental-weight coordinates to an ambient vector.
    pub fn weight_to_ambient(&self, lambda: &[Rational]) -> Vec<Rational> {
        (0..self.ambient_dim)
            .map(|c| lambda.iter().zip(&self.fundamental_weights).map(|(x, w)| x * &w[c]).sum())
            .collect()
    }

    /// One-line notation `sigma` of a type-A element (0-based), with
    /// `w(e_j) = e_{sigma(j)}`.
    pub fn permutation(&self, w: Element) -> Option<Vec<usize>> {
        if !self.symbol.is_type_a() {
            return None;
        }
        let m = self.rank() + 1;
        Some(
            (0..m)
                .map(|j| {
                    self.word(w).iter().rev().fold(j, |x, &i| {
                        let i = i as usize;
                        if x == i {
                            i + 1
                        } else if x == i + 1 {
                            i
                        } else {
                            x
                        }
                    })
                })
                .collect(),
        )
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let size = self.order();
            let mut class_of = vec![u32::MAX; size];
            let mut representatives = Vec::new();
            let mut sizes = Vec::new();
            for w in 0..size {
                if class_of[w] != u32::MAX {
                    continue;
                }
                let c = representatives.len() as u32;
                representatives.push(Element(w as u32));
                let mut stack = vec![w];
                class_of[w] = c;
                let mut count = 0;
                while let Some(x) = stack.pop() {
                    count += 1;
                    for i in 0..self.rank() {
                        let y = self.simple_mul(i, self.mul_simple(Element(x as u32), i)).index();
                        if class_of[y] == u32::MAX {
                            class_of[y] = c;
                            stack.push(y);
                        }
                    }
                }
                sizes.push(count);
            }
            ConjugacyClasses { class_of, representatives, sizes }
        })
    }

    /// Inner product `<alpha, beta>` of two ambient vectors.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, b)
    }

    /// Checks `<omega_i, alpha_j^vee> = delta_ij` exactly.
    pub fn weights_are_dual(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = &self.simple_roots[j];
                let v = int(2) * dot(&self.fundamental_weights[i], a) / dot(a, a);
                v == if i == j { Rational::one() } else { Rational::zero() }
            })
        })
    }
}
