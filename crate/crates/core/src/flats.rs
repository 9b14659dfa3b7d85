//! The intersection lattice of the reflection arrangement.
//!
//! A flat `X` is identified with its reflection set `{ t : X ⊆ Fix(t) }`,
//! which is a parabolically closed subset of `T`. Flats are ordered by
//! inclusion of reflection sets, so the bottom is `V` and the top is `{0}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bitset::ReflSet;
use crate::coxgroup::Group;
use crate::linalg::{self, IntEchelon};
use crate::Rational;

/// Canonical key of a `W`-orbit of flats: the numerically least reflection
/// bitset among its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel(pub u64);

impl OrbitLabel {
    pub fn reflections(self) -> ReflSet {
        ReflSet(self.0)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ReflSet(self.0).to_hex())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    pub reflections: ReflSet,
    pub codim: usize,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub label: OrbitLabel,
    pub codim: usize,
    /// Flat indices in the orbit, increasing.
    pub members: Vec<usize>,
}

impl Orbit {
    /// Orbit size, i.e. `[W : N(W_X)]`.
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    rank: usize,
    flats: Vec<Flat>,
    index: HashMap<u64, usize>,
    above: Vec<Vec<usize>>,
    covers: Vec<Vec<usize>>,
    mobius_top: Vec<i64>,
    orbit_of: Vec<usize>,
    orbits: Vec<Orbit>,
}

impl IntersectionLattice {
    pub fn new(group: &Group) -> IntersectionLattice {
        let n = group.rank();
        let nref = group.num_reflections();
        let mut layers: Vec<Vec<ReflSet>> = vec![vec![ReflSet::EMPTY]];
        for codim in 1..=n {
            let mut next: Vec<ReflSet> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for &x in &layers[codim - 1] {
                let mut ech = IntEchelon::new();
                for k in x.iter() {
                    ech.insert(group.root(k));
                }
                for t in 0..nref {
                    if x.contains(t) || seen.iter().any(|y: &ReflSet| x.with(t).is_subset(*y)) {
                        continue;
                    }
                    let mut e = ech.clone();
                    e.insert(group.root(t));
                    let y = ReflSet::from_indices((0..nref).filter(|&k| e.contains(group.root(k))));
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            next.sort_unstable();
            layers.push(next);
        }
        let flats: Vec<Flat> = layers
            .iter()
            .enumerate()
            .flat_map(|(codim, l)| l.iter().map(move |&r| Flat { reflections: r, codim }))
            .collect();
        let index: HashMap<u64, usize> =
            flats.iter().enumerate().map(|(i, f)| (f.reflections.0, i)).collect();
        let m = flats.len();
        let above: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                (i + 1..m)
                    .filter(|&j| {
                        flats[j].codim > flats[i].codim && flats[i].reflections.is_subset(flats[j].reflections)
                    })
                    .collect()
            })
            .collect();
        let covers: Vec<Vec<usize>> = (0..m)
            .map(|i| above[i].iter().copied().filter(|&j| flats[j].codim == flats[i].codim + 1).collect())
            .collect();
        let mut mobius_top = vec![0i64; m];
        for i in (0..m).rev() {
            mobius_top[i] = if above[i].is_empty() {
                1
            } else {
                -above[i].iter().map(|&j| mobius_top[j]).sum::<i64>()
            };
        }

        // Orbits under conjugation by the simple generators.
        let perms: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..nref).map(|k| group.positive_part(group.simple_reflect_root(i, k))).collect())
            .collect();
        let act = |p: &[usize], r: ReflSet| ReflSet::from_indices(r.iter().map(|k| p[k]));
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits = Vec::new();
        for start in 0..m {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let o = orbits.len();
            orbit_of[start] = o;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let r = flats[members[k]].reflections;
                for p in &perms {
                    let j = index[&act(p, r).0];
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = o;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            let label = OrbitLabel(members.iter().map(|&j| flats[j].reflections.0).min().unwrap());
            orbits.push(Orbit { label, codim: flats[start].codim, members });
        }
        IntersectionLattice { rank: n, flats, index, above, covers, mobius_top, orbit_of, orbits }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Flats sorted by codimension, then by reflection bitset.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, x: usize) -> Flat {
        self.flats[x]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn find(&self, reflections: ReflSet) -> Option<usize> {
        self.index.get(&reflections.0).copied()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.flats[x].reflections.is_subset(self.flats[y].reflections)
    }

    /// Flats strictly above `x` (smaller subspaces), increasing.
    pub fn above(&self, x: usize) -> &[usize] {
        &self.above[x]
    }

    pub fn covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    /// `mu(X, {0})`.
    pub fn mobius_to_top(&self, x: usize) -> i64 {
        self.mobius_top[x]
    }

    /// `mu(x, y)`, zero when `x` is not below `y`.
    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        if !self.le(x, y) {
            return 0;
        }
        let mut interval: Vec<usize> = std::iter::once(x)
            .chain(self.above[x].iter().copied().filter(|&z| self.le(z, y)))
            .collect();
        interval.sort_unstable();
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &interval {
            let v = if z == x {
                1
            } else {
                -interval
                    .iter()
                    .filter(|&&u| u != z && self.le(u, z))
                    .map(|u| mu[u])
                    .sum::<i64>()
            };
            mu.insert(z, v);
        }
        mu[&y]
    }

    /// Orbit index of a flat.
    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn orbit_label(&self, x: usize) -> OrbitLabel {
        self.orbits[self.orbit_of[x]].label
    }

    /// Orbits sorted by codimension of their members, then by first member.
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_by_label(&self, label: OrbitLabel) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.label == label)
    }

    /// Exact basis of `X`, in fundamental-weight coordinates.
    pub fn subspace_basis(&self, group: &Group, x: usize) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let half_norms: Vec<Rational> = (0..n)
            .map(|j| &group.root_gram()[j][j] / Rational::from_integer(2.into()))
            .collect();
        let rows: Vec<Vec<Rational>> = self.flats[x]
            .reflections
            .iter()
            .map(|k| {
                (0..n)
                    .map(|j| Rational::from_integer(group.root(k)[j].into()) * &half_norms[j])
                    .collect()
            })
            .collect();
        linalg::nullspace(&rows, n)
    }

    /// Number of flats of each codimension.
    pub fn codim_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.rank + 1];
        for f in &self.flats {
            c[f.codim] += 1;
        }
        c
    }

    /// The rank-selected poset `L_R ∪ {0}` for `R ⊆ {1..n}`, where a flat
    /// has rank `1 + codim`.
    pub fn rank_selected(&self, ranks: &[usize]) -> RankSelection {
        let keep = |x: usize| x == self.top() || ranks.contains(&(1 + self.flats[x].codim));
        let members: Vec<usize> = (0..self.len()).filter(|&x| keep(x)).collect();
        let mut mobius = BTreeMap::new();
        for &x in members.iter().rev() {
            let v = if x == self.top() {
                1
            } else {
                -self.above[x]
                    .iter()
                    .filter(|&&y| keep(y))
                    .map(|y| mobius[y])
                    .sum::<i64>()
            };
            mobius.insert(x, v);
        }
        RankSelection { members, mobius }
    }
}

/// A rank-selected subposet `L_R ∪ {0}` with its Möbius function to the top.
#[derive(Clone, Debug)]
pub struct RankSelection {
    pub members: Vec<usize>,
    pub mobius: BTreeMap<usize, i64>,
}

impl RankSelection {
    pub fn mobius_to_top(&self, x: usize) -> Option<i64> {
        self.mobius.get(&x).copied()
    }
}
