//! Chambers of the Coxeter complex and the positive chamber complex
//! `C^{>0}` cut out by a generic vector `rho`.
//!
//! A face is a coset `w W_I`; its rays are `w(omega_j)` for `j ∉ I` and its
//! linear span is the flat `w(Fix(W_I))`. The cone with `I = S` is the zero
//! cone (span `{0}`) and is counted as a face of dimension 0.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::GenSet;
use crate::burnside::{BurnsideElement, BurnsideRing};
use crate::coxgroup::{Element, Group, Parabolic};
use crate::error::{Error, Result};
use crate::flats::IntersectionLattice;
use crate::Rational;

/// Bound on numerators and denominators of random coordinates.
pub const RANDOM_DENOMINATOR_BOUND: u64 = 1 << 16;

/// The rays `w(omega_j)` of all chambers, in fundamental-weight coordinates.
#[derive(Clone, Debug)]
pub struct Rays {
    rank: usize,
    data: Vec<i64>,
}

impl Rays {
    pub fn new(group: &Group) -> Rays {
        let n = group.rank();
        let mut data = vec![0i64; group.order() * n * n];
        for j in 0..n {
            data[j * n + j] = 1;
        }
        for w in group.elements().skip(1) {
            let i = *group.word(w).last().unwrap() as usize;
            let prev = group.mul_simple(w, i);
            let alpha = group.root_weight_coords(group.root_image(prev, group.simple_root_index(i)));
            for j in 0..n {
                let src = (prev.index() * n + j) * n;
                let dst = (w.index() * n + j) * n;
                for k in 0..n {
                    let mut v = data[src + k];
                    if j == i {
                        v -= alpha[k];
                    }
                    data[dst + k] = v;
                }
            }
        }
        Rays { rank: n, data }
    }

    /// `w(omega_j)`.
    pub fn ray(&self, w: Element, j: usize) -> &[i64] {
        let n = self.rank;
        let start = (w.index() * n + j) * n;
        &self.data[start..start + n]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// How to pick `rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoMode {
    /// Random point of the fundamental chamber with coordinates `p/q`,
    /// `1 <= p, q <= 2^16`, resampled until generic.
    SeededRandom(u64),
    /// `c_i = M^{n-i}` with `M` doubled until the positive chambers are
    /// exactly the permutations fixing 1 (type A only).
    Spread,
    /// Explicit coordinates in the basis of fundamental weights.
    User(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericVector {
    /// Coordinates `c_i` with `rho = sum c_i omega_i`.
    pub coefficients: Vec<Rational>,
    /// `rho` in the ambient space.
    pub ambient: Vec<Rational>,
    /// `min |<rho, r>|` over all rays `r`; positive by genericity.
    pub min_abs_pairing: Rational,
    /// Number of ray pairings checked.
    pub rays_checked: usize,
    /// All `c_i > 0`.
    pub in_fundamental: bool,
}

/// `(c^T G)` so that `<rho, v> = sum_k out[k] v_k` for `v` in weight coordinates.
fn covector(group: &Group, c: &[Rational]) -> Vec<Rational> {
    let g = group.weight_gram();
    let n = group.rank();
    (0..n).map(|k| (0..n).map(|a| &c[a] * &g[a][k]).sum()).collect()
}

fn pair(cov: &[Rational], v: &[i64]) -> Rational {
    cov.iter()
        .zip(v)
        .filter(|(_, &x)| x != 0)
        .map(|(a, &x)| a * Rational::from_integer(x.into()))
        .sum()
}

/// Checks genericity exactly; returns the certificate on success.
pub fn certify(group: &Group, rays: &Rays, coefficients: Vec<Rational>) -> Result<GenericVector> {
    let n = group.rank();
    if coefficients.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} coordinates, got {}", coefficients.len())));
    }
    let cov = covector(group, &coefficients);
    let mut min_abs: Option<Rational> = None;
    let mut checked = 0;
    for w in group.elements() {
        for j in 0..n {
            let p = pair(&cov, rays.ray(w, j)).abs();
            checked += 1;
            if p.is_zero() {
                let ray: Vec<String> = rays.ray(w, j).iter().map(|x| x.to_string()).collect();
                return Err(Error::NonGeneric(format!("[{}]", ray.join(", "))));
            }
            if min_abs.as_ref().is_none_or(|m| p < *m) {
                min_abs = Some(p);
            }
        }
    }
    let in_fundamental = coefficients.iter().all(|c| c.is_positive());
    Ok(GenericVector {
        ambient: group.weight_to_ambient(&coefficients),
        coefficients,
        min_abs_pairing: min_abs.unwrap_or_else(Rational::one),
        rays_checked: checked,
        in_fundamental,
    })
}

pub fn choose_rho(group: &Group, rays: &Rays, mode: &RhoMode) -> Result<GenericVector> {
    let n = group.rank();
    match mode {
        RhoMode::User(c) => certify(group, rays, c.clone()),
        RhoMode::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            loop {
                let c: Vec<Rational> = (0..n)
                    .map(|_| {
                        let p = rng.random_range(1..=RANDOM_DENOMINATOR_BOUND);
                        let q = rng.random_range(1..=RANDOM_DENOMINATOR_BOUND);
                        Rational::new(p.into(), q.into())
                    })
                    .collect();
                match certify(group, rays, c) {
                    Err(Error::NonGeneric(_)) => continue,
                    other => return other,
                }
            }
        }
        RhoMode::Spread => {
            if !group.symbol().is_type_a() {
                return Err(Error::InvalidArgument("spread mode requires type A".into()));
            }
            let mut m = BigInt::from(2);
            loop {
                let c: Vec<Rational> = (0..n)
                    .map(|i| Rational::from_integer(num_traits::pow(m.clone(), n - 1 - i)))
                    .collect();
                if let Ok(v) = certify(group, rays, c) {
                    let cov = covector(group, &v.coefficients);
                    let ok = group.elements().all(|w| {
                        let positive = (0..n).all(|j| pair(&cov, rays.ray(w, j)).is_positive());
                        positive == (group.permutation(w).unwrap()[0] == 0)
                    });
                    if ok {
                        return Ok(v);
                    }
                }
                m *= 2;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    /// Minimal representative of `w W_I`.
    pub rep: Element,
    pub fixed: GenSet,
    /// Flat index of the linear span.
    pub span: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Positive,
    Negative,
}

/// A shelling of `C^{>0}` with its certificate data.
#[derive(Clone, Debug)]
pub struct Shelling {
    pub order: Vec<Element>,
    /// Panels of each facet not shared with an earlier facet.
    pub new_panels: Vec<GenSet>,
    /// Flat index of `Span(∩ new panels)`.
    pub types: Vec<usize>,
}

pub struct PositiveComplex<'a> {
    group: &'a Group,
    lattice: &'a IntersectionLattice,
    rho: GenericVector,
    positive: Vec<GenSet>,
    negative: Vec<GenSet>,
    faces: Vec<Face>,
    facets: Vec<Element>,
}

impl<'a> PositiveComplex<'a> {
    pub fn new(group: &'a Group, lattice: &'a IntersectionLattice, rays: &Rays, rho: GenericVector) -> Self {
        let n = group.rank();
        let cov = covector(group, &rho.coefficients);
        let mut positive = Vec::with_capacity(group.order());
        let mut negative = Vec::with_capacity(group.order());
        for w in group.elements() {
            let signs: Vec<bool> = (0..n).map(|j| pair(&cov, rays.ray(w, j)).is_positive()).collect();
            positive.push(GenSet::from_indices((0..n).filter(|&j| signs[j])));
            negative.push(GenSet::from_indices((0..n).filter(|&j| !signs[j])));
        }
        let mut faces = Vec::new();
        for i in GenSet::full(n).subsets() {
            let free = i.complement(n);
            for w in group.elements() {
                if !group.descents(w).intersection(i).is_empty() || !free.is_subset(positive[w.index()]) {
                    continue;
                }
                let refl = group.conjugate_reflections(w, group.standard_parabolic(i));
                let span = lattice.find(refl).expect("spans of faces are flats");
                faces.push(Face { rep: w, fixed: i, span });
            }
        }
        faces.sort_by_key(|f| (n - f.fixed.len(), f.rep, f.fixed.0));
        let facets = group.elements().filter(|w| positive[w.index()] == GenSet::full(n)).collect();
        PositiveComplex { group, lattice, rho, positive, negative, faces, facets }
    }

    pub fn rho(&self) -> &GenericVector {
        &self.rho
    }

    /// All faces, by increasing dimension.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_dim(&self, f: &Face) -> usize {
        self.group.rank() - f.fixed.len()
    }

    /// Chambers `w` with `w(F) ⊆ H^+`, in the global order.
    pub fn facets(&self) -> &[Element] {
        &self.facets
    }

    /// Chambers entirely on the given side of `H`.
    pub fn chambers_on(&self, side: Side) -> Vec<Element> {
        let full = GenSet::full(self.group.rank());
        let sets = match side {
            Side::Positive => &self.positive,
            Side::Negative => &self.negative,
        };
        self.group.elements().filter(|w| sets[w.index()] == full).collect()
    }

    /// `j`-th entry counts faces whose span has dimension `j`; `f[0] = 1`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.group.rank() + 1];
        for face in &self.faces {
            f[self.face_dim(face)] += 1;
        }
        f
    }

    /// `h_k = sum_{i <= k} (-1)^{k-i} C(n-i, k-i) f_i`.
    pub fn h_vector(&self) -> Vec<i64> {
        h_from_f(&self.f_vector())
    }

    /// Number of faces spanning each flat.
    pub fn faces_per_flat(&self) -> Vec<usize> {
        let mut c = vec![0; self.lattice.len()];
        for f in &self.faces {
            c[f.span] += 1;
        }
        c
    }

    /// `(-1)^n sum_f (-1)^{dim f} phi_{Span f}`.
    pub fn colored_f_character(&self) -> BurnsideElement {
        let n = self.group.rank();
        let mut out = BurnsideElement::zero();
        for f in &self.faces {
            let sign = if (n + self.face_dim(f)) % 2 == 0 { 1 } else { -1 };
            out.add_term(self.lattice.orbit_label(f.span), BigInt::from(sign));
        }
        out
    }

    /// Facets in the global order, verified to be a shelling.
    pub fn shelling_order(&self) -> Result<Shelling> {
        if !self.rho.in_fundamental {
            return Err(Error::InvalidArgument("shelling requires rho in the fundamental chamber".into()));
        }
        let g = self.group;
        let n = g.rank();
        let order = g.weak_order_linear_extension(&self.facets)?;
        let key = |w: Element, i: GenSet| -> (Element, u32) {
            (g.min_coset_representative(w, &Parabolic::Standard(i)).unwrap(), i.0)
        };
        let mut seen: HashSet<(Element, u32)> = HashSet::new();
        let mut new_panels = Vec::with_capacity(order.len());
        let mut types = Vec::with_capacity(order.len());
        for (pos, &w) in order.iter().enumerate() {
            let old: Vec<GenSet> = GenSet::full(n).subsets().filter(|&i| seen.contains(&key(w, i))).collect();
            let old_panels = GenSet::from_indices((0..n).filter(|&i| old.contains(&GenSet::singleton(i))));
            if pos > 0 {
                let expected: Vec<GenSet> = GenSet::full(n)
                    .subsets()
                    .filter(|i| !i.intersection(old_panels).is_empty())
                    .collect();
                if old_panels.is_empty() || old != expected {
                    return Err(Error::ShellingViolation { position: pos });
                }
            }
            let fresh = old_panels.complement(n);
            let refl = g.conjugate_reflections(w, g.standard_parabolic(fresh));
            types.push(self.lattice.find(refl).expect("spans of faces are flats"));
            new_panels.push(fresh);
            for i in GenSet::full(n).subsets() {
                seen.insert(key(w, i));
            }
        }
        Ok(Shelling { order, new_panels, types })
    }

    /// `sum_j phi_{tau(f_j)}`.
    pub fn shelling_character(&self, shelling: &Shelling) -> BurnsideElement {
        BurnsideElement::from_terms(shelling.types.iter().map(|&x| (self.lattice.orbit_label(x), BigInt::one())))
    }

    /// Positive side: `sum phi_{asc(w)}` over chambers in `H^+`; negative
    /// side: `sum phi_{des(w)}` over chambers in `H^-`.
    pub fn theorem4_character(&self, ring: &BurnsideRing, side: Side) -> BurnsideElement {
        let mut out = BurnsideElement::zero();
        for w in self.chambers_on(side) {
            let i = match side {
                Side::Positive => self.group.ascents(w),
                Side::Negative => self.group.descents(w),
            };
            out.add_term(ring.standard_label(i), BigInt::one());
        }
        out
    }

    /// Every panel lies in one or two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        let full = GenSet::full(self.group.rank());
        self.faces.iter().filter(|f| f.fixed.len() == 1).all(|f| {
            let i = f.fixed.iter().next().unwrap();
            let pair = [f.rep, self.group.mul_simple(f.rep, i)];
            let k = pair.iter().filter(|w| self.positive[w.index()] == full).count();
            (1..=2).contains(&k)
        })
    }

    /// The facets are connected through shared panels.
    pub fn is_gallery_connected(&self) -> bool {
        if self.facets.is_empty() {
            return true;
        }
        let full = GenSet::full(self.group.rank());
        let mut seen: HashMap<Element, ()> = HashMap::from([(self.facets[0], ())]);
        let mut stack = vec![self.facets[0]];
        while let Some(w) = stack.pop() {
            for i in 0..self.group.rank() {
                let v = self.group.mul_simple(w, i);
                if self.positive[v.index()] == full && seen.insert(v, ()).is_none() {
                    stack.push(v);
                }
            }
        }
        seen.len() == self.facets.len()
    }
}

/// Converts an f-vector indexed by span dimension into an h-vector.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let n = f.len() - 1;
    let binom = |a: usize, b: usize| -> i64 {
        (0..b).fold(1i64, |acc, k| acc * (a - k) as i64 / (k + 1) as i64)
    };
    (0..=n)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let s = if (k - i) % 2 == 0 { 1 } else { -1 };
                    s * binom(n - i, k - i) * f[i] as i64
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::GroupSymbol;

    fn setup(s: &str) -> (Group, IntersectionLattice, Rays) {
        let g = Group::new(s.parse::<GroupSymbol>().unwrap()).unwrap();
        let l = IntersectionLattice::new(&g);
        let r = Rays::new(&g);
        (g, l, r)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rays_match_weight_action() {
        let (g, _, rays) = setup("B3");
        for w in g.elements() {
            for j in 0..3 {
                let e: Vec<i64> = (0..3).map(|k| i64::from(k == j)).collect();
                assert_eq!(rays.ray(w, j), g.act_on_weight(w, &e).as_slice());
            }
        }
    }

    #[test]
    fn genericity() {
        let (g, _, rays) = setup("A2");
        // omega_1 + omega_2 = e_1 - e_3 is orthogonal to the ray
        // s_2(omega_2), which is e_1 + e_3 up to the all-ones vector.
        assert!(matches!(certify(&g, &rays, vec![q(1), q(1)]), Err(Error::NonGeneric(_))));
        assert!(certify(&g, &rays, vec![q(2), q(1)]).is_ok());
        // omega_1 alone is generic in A2, but 2 omega_2 - omega_1 is
        // orthogonal to the ray omega_1.
        assert!(certify(&g, &rays, vec![q(1), q(0)]).is_ok());
        assert!(matches!(certify(&g, &rays, vec![q(-1), q(2)]), Err(Error::NonGeneric(_))));
        assert!(matches!(certify(&g, &rays, vec![q(1)]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn a1_complex() {
        let (g, l, rays) = setup("A1");
        let rho = choose_rho(&g, &rays, &RhoMode::SeededRandom(1)).unwrap();
        let c = PositiveComplex::new(&g, &l, &rays, rho);
        assert_eq!(c.facets(), &[g.identity()]);
        assert_eq!(c.f_vector(), vec![1, 1]);
        let ring = BurnsideRing::new(&g, &l);
        assert_eq!(c.colored_f_character(), ring.xi());
    }

    #[test]
    fn facet_counts_and_f_vectors() {
        for (s, facets) in [("A2", 2), ("A3", 6), ("B3", 15), ("G2", 5)] {
            let (g, l, rays) = setup(s);
            for seed in 0..3 {
                let rho = choose_rho(&g, &rays, &RhoMode::SeededRandom(seed)).unwrap();
                let c = PositiveComplex::new(&g, &l, &rays, rho);
                assert_eq!(c.facets().len(), facets, "{s}");
                let h = c.h_vector();
                assert_eq!(h[0], 1);
                assert_eq!(h.iter().sum::<i64>(), facets as i64);
                let per = c.faces_per_flat();
                for x in 0..l.len() {
                    assert_eq!(per[x] as i64, l.mobius_to_top(x).abs());
                }
                assert!(c.is_pseudomanifold());
                assert!(c.is_gallery_connected());
            }
        }
    }

    #[test]
    fn spread_mode_a3() {
        let (g, l, rays) = setup("A3");
        let rho = choose_rho(&g, &rays, &RhoMode::Spread).unwrap();
        let c = PositiveComplex::new(&g, &l, &rays, rho);
        assert_eq!(c.facets().len(), 6);
        for &w in c.facets() {
            assert_eq!(g.permutation(w).unwrap()[0], 0);
        }
        let sh = c.shelling_order().unwrap();
        assert_eq!(sh.order[0], g.identity());
        let b2 = Group::new("B2".parse().unwrap()).unwrap();
        let r2 = Rays::new(&b2);
        assert!(choose_rho(&b2, &r2, &RhoMode::Spread).is_err());
    }

    #[test]
    fn characters_agree() {
        for s in ["A2", "A3", "B2", "B3", "G2"] {
            let (g, l, rays) = setup(s);
            let ring = BurnsideRing::new(&g, &l);
            let xi = ring.xi();
            let t = ring.tensor_sign(&xi);
            for seed in [7, 8, 9] {
                let rho = choose_rho(&g, &rays, &RhoMode::SeededRandom(seed)).unwrap();
                let c = PositiveComplex::new(&g, &l, &rays, rho);
                assert_eq!(c.colored_f_character(), xi, "{s}");
                let sh = c.shelling_order().unwrap();
                assert_eq!(c.shelling_character(&sh), t, "{s}");
                assert_eq!(c.theorem4_character(&ring, Side::Positive), t, "{s}");
                assert_eq!(c.theorem4_character(&ring, Side::Negative), t, "{s}");
                for (k, &w) in sh.order.iter().enumerate() {
                    assert_eq!(sh.new_panels[k], g.ascents(w));
                }
            }
        }
    }

    #[test]
    fn shelling_needs_rho_in_f() {
        let (g, l, rays) = setup("A2");
        let rho = certify(&g, &rays, vec![q(3), q(-1)]).unwrap();
        let c = PositiveComplex::new(&g, &l, &rays, rho);
        assert!(matches!(c.shelling_order(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn h_from_f_small() {
        // Boundary of a triangle viewed as cones in R^3 would be the full
        // fan; here a single chamber in rank 2: f = (1, 2, 1), h = (1, 0, 0).
        assert_eq!(h_from_f(&[1, 2, 1]), vec![1, 0, 0]);
        assert_eq!(h_from_f(&[1, 3, 2]), vec![1, 1, 0]);
    }
}
