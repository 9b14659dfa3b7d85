//! The parabolic Burnside ring: integer combinations of the permutation
//! characters `phi_X = Ind_{W_X}^W(1)`, keyed by orbits of flats.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bitset::{GenSet, ReflSet};
use crate::coxgroup::{Element, Group};
use crate::flats::{IntersectionLattice, OrbitLabel};

/// A virtual character `sum_X c_X phi_X`, one coefficient per orbit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    coeffs: BTreeMap<OrbitLabel, BigInt>,
}

impl BurnsideElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: OrbitLabel) -> Self {
        Self::from_terms([(label, BigInt::from(1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (OrbitLabel, BigInt)>>(terms: I) -> Self {
        let mut b = Self::zero();
        for (l, c) in terms {
            b.add_term(l, c);
        }
        b
    }

    pub fn add_term(&mut self, label: OrbitLabel, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(label).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn coefficient(&self, label: OrbitLabel) -> BigInt {
        self.coeffs.get(&label).cloned().unwrap_or_default()
    }

    /// Nonzero terms in label order.
    pub fn terms(&self) -> impl Iterator<Item = (OrbitLabel, &BigInt)> {
        self.coeffs.iter().map(|(l, c)| (*l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms().map(|(l, c)| (l, c * k)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        let mut out = self.clone();
        for (l, c) in rhs.terms() {
            out.add_term(l, c.clone());
        }
        out
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self + &(-rhs)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement::from_terms(self.terms().map(|(l, c)| (l, -c)))
    }
}

/// Values of a class function, one per conjugacy class of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<BigInt>,
}

impl ClassFunction {
    /// `<f, g> = |W|^-1 sum_w f(w) g(w)` for real-valued characters.
    /// Returns `None` if the result is not an integer.
    pub fn inner_product(&self, other: &ClassFunction, group: &Group) -> Option<BigInt> {
        let classes = group.conjugacy_classes();
        let total: BigInt = (0..classes.len())
            .map(|c| BigInt::from(classes.sizes[c]) * &self.values[c] * &other.values[c])
            .sum();
        let order = BigInt::from(group.order());
        if (&total % &order).is_zero() {
            Some(total / order)
        } else {
            None
        }
    }

    pub fn value_at(&self, group: &Group, w: Element) -> &BigInt {
        &self.values[group.conjugacy_classes().class_of[w.index()] as usize]
    }
}

struct OrbitData {
    standard: GenSet,
    subgroup_order: usize,
    /// `#(W_X ∩ C)` for each conjugacy class `C`.
    class_counts: Vec<usize>,
}

/// Burnside-ring computations over a fixed group and its lattice.
pub struct BurnsideRing<'a> {
    group: &'a Group,
    lattice: &'a IntersectionLattice,
    standard_label: Vec<OrbitLabel>,
    data: HashMap<OrbitLabel, OrbitData>,
}

/// Elements of the reflection subgroup generated by `r`.
pub fn reflection_subgroup(group: &Group, r: ReflSet) -> Vec<Element> {
    let gens: Vec<Element> = r.iter().map(|k| group.reflection(k)).collect();
    let mut seen = HashSet::from([group.identity()]);
    let mut out = vec![group.identity()];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for &t in &gens {
            let y = group.mul(x, t);
            if seen.insert(y) {
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

impl<'a> BurnsideRing<'a> {
    pub fn new(group: &'a Group, lattice: &'a IntersectionLattice) -> Self {
        let n = group.rank();
        let standard_label: Vec<OrbitLabel> = GenSet::full(n)
            .subsets()
            .map(|i| {
                let x = lattice
                    .find(group.standard_parabolic(i))
                    .expect("standard parabolics are flats");
                lattice.orbit_label(x)
            })
            .collect();
        let classes = group.conjugacy_classes();
        let mut data = HashMap::new();
        for orbit in lattice.orbits() {
            let standard = GenSet::full(n)
                .subsets()
                .filter(|i| standard_label[i.0 as usize] == orbit.label)
                .min_by_key(|i| i.0)
                .expect("every parabolic is conjugate to a standard one");
            let sub = reflection_subgroup(group, orbit.label.reflections());
            let mut class_counts = vec![0; classes.len()];
            for w in &sub {
                class_counts[classes.class_of[w.index()] as usize] += 1;
            }
            data.insert(orbit.label, OrbitData { standard, subgroup_order: sub.len(), class_counts });
        }
        BurnsideRing { group, lattice, standard_label, data }
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        self.lattice
    }

    /// `phi_X` for the flat with index `x`.
    pub fn phi(&self, x: usize) -> BurnsideElement {
        BurnsideElement::basis(self.lattice.orbit_label(x))
    }

    /// `phi_I = Ind_{W_I}^W(1)` for a standard parabolic subgroup.
    pub fn phi_standard(&self, i: GenSet) -> BurnsideElement {
        BurnsideElement::basis(self.standard_label(i))
    }

    pub fn standard_label(&self, i: GenSet) -> OrbitLabel {
        self.standard_label[i.0 as usize]
    }

    /// Least `I ⊆ S` (by bitmask) with `W_I` in the given orbit.
    pub fn standard_realization(&self, label: OrbitLabel) -> GenSet {
        self.data[&label].standard
    }

    pub fn trivial(&self) -> BurnsideElement {
        self.phi(self.lattice.top())
    }

    pub fn regular(&self) -> BurnsideElement {
        self.phi(self.lattice.bottom())
    }

    /// `sign^n` for the rank of the lattice.
    fn sign_n(&self) -> BigInt {
        BigInt::from(if self.lattice.rank() % 2 == 0 { 1 } else { -1 })
    }

    /// `xi = (-1)^n sum_{X in Theta} mu(X) [W : N(W_X)] phi_X`.
    pub fn xi(&self) -> BurnsideElement {
        let s = self.sign_n();
        BurnsideElement::from_terms(self.lattice.orbits().iter().map(|o| {
            let mu = self.lattice.mobius_to_top(o.members[0]);
            (o.label, &s * BigInt::from(mu) * BigInt::from(o.size()))
        }))
    }

    /// `xi = (-1)^n sum_{X in L} mu(X) phi_X`, summing flat by flat.
    pub fn xi_by_flats(&self) -> BurnsideElement {
        let s = self.sign_n();
        BurnsideElement::from_terms(
            (0..self.lattice.len()).map(|x| (self.lattice.orbit_label(x), &s * self.lattice.mobius_to_top(x))),
        )
    }

    /// `WH_k = sum_{dim X = k} (-1)^k mu(X) phi_X`.
    pub fn whitney_component(&self, k: usize) -> BurnsideElement {
        let n = self.lattice.rank();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        BurnsideElement::from_terms(
            (0..self.lattice.len())
                .filter(|&x| n - self.lattice.flat(x).codim == k)
                .map(|x| (self.lattice.orbit_label(x), BigInt::from(sign * self.lattice.mobius_to_top(x)))),
        )
    }

    /// `sum_{k=0}^{n} (-1)^{n+k} WH_k`.
    pub fn whitney_alternating_sum(&self) -> BurnsideElement {
        let n = self.lattice.rank();
        (0..=n).fold(BurnsideElement::zero(), |acc, k| {
            let c = self.whitney_component(k);
            if (n + k) % 2 == 0 {
                &acc + &c
            } else {
                &acc - &c
            }
        })
    }

    /// `b ⊗ epsilon`, using `phi_I ⊗ epsilon = sum_{J ⊆ I} (-1)^|J| phi_J`.
    pub fn tensor_sign(&self, b: &BurnsideElement) -> BurnsideElement {
        let mut out = BurnsideElement::zero();
        for (label, c) in b.terms() {
            let i = self.standard_realization(label);
            for j in i.subsets() {
                let term = if j.len() % 2 == 0 { c.clone() } else { -c };
                out.add_term(self.standard_label(j), term);
            }
        }
        out
    }

    /// Character of `phi_X` on every conjugacy class.
    pub fn phi_class_function(&self, label: OrbitLabel) -> ClassFunction {
        let d = &self.data[&label];
        let classes = self.group.conjugacy_classes();
        let order = self.group.order();
        let values = (0..classes.len())
            .map(|c| {
                let num = order * d.class_counts[c];
                let den = classes.sizes[c] * d.subgroup_order;
                debug_assert_eq!(num % den, 0);
                BigInt::from(num / den)
            })
            .collect();
        ClassFunction { values }
    }

    pub fn class_function(&self, b: &BurnsideElement) -> ClassFunction {
        let k = self.group.conjugacy_classes().len();
        let mut values = vec![BigInt::zero(); k];
        for (label, c) in b.terms() {
            let f = self.phi_class_function(label);
            for (v, x) in values.iter_mut().zip(f.values) {
                *v += c * x;
            }
        }
        ClassFunction { values }
    }

    pub fn sign_class_function(&self) -> ClassFunction {
        let classes = self.group.conjugacy_classes();
        ClassFunction {
            values: classes.representatives.iter().map(|&w| BigInt::from(self.group.sign(w))).collect(),
        }
    }

    /// Character value of `b` at `w`.
    pub fn char_value(&self, b: &BurnsideElement, w: Element) -> BigInt {
        let c = self.group.conjugacy_classes().class_of[w.index()] as usize;
        let classes = self.group.conjugacy_classes();
        let order = self.group.order();
        b.terms()
            .map(|(label, coeff)| {
                let d = &self.data[&label];
                let fixed = order * d.class_counts[c] / (classes.sizes[c] * d.subgroup_order);
                coeff * BigInt::from(fixed)
            })
            .sum()
    }

    /// `|W_X|` for any flat in the orbit.
    pub fn subgroup_order(&self, label: OrbitLabel) -> usize {
        self.data[&label].subgroup_order
    }

    pub fn dimension(&self, b: &BurnsideElement) -> BigInt {
        b.terms()
            .map(|(label, c)| c * BigInt::from(self.group.order() / self.subgroup_order(label)))
            .sum()
    }

    /// Multiplicity of the trivial character.
    pub fn trivial_multiplicity(&self, b: &BurnsideElement) -> BigInt {
        b.terms().map(|(_, c)| c.clone()).sum()
    }

    /// Multiplicity of the sign character.
    pub fn sign_multiplicity(&self, b: &BurnsideElement) -> BigInt {
        self.trivial_multiplicity(&self.tensor_sign(b))
    }

    /// Rank-selected character `(-1)^|R| sum_{X in L_R ∪ {0}} mu_R(X) phi_X`.
    pub fn rank_selected_character(&self, ranks: &[usize]) -> BurnsideElement {
        let sel = self.lattice.rank_selected(ranks);
        let sign = if ranks.len() % 2 == 0 { 1 } else { -1 };
        BurnsideElement::from_terms(
            sel.mobius
                .iter()
                .map(|(&x, &mu)| (self.lattice.orbit_label(x), BigInt::from(sign * mu))),
        )
    }

    /// `h_i = sum_{|R| = i} h_R`.
    pub fn equivariant_h(&self, i: usize) -> BurnsideElement {
        let n = self.lattice.rank();
        GenSet::full(n)
            .subsets()
            .filter(|r| r.len() == i)
            .map(|r| {
                let ranks: Vec<usize> = r.iter().map(|k| k + 1).collect();
                self.rank_selected_character(&ranks)
            })
            .fold(BurnsideElement::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::GroupSymbol;

    fn setup(s: &str) -> (Group, IntersectionLattice) {
        let g = Group::new(s.parse::<GroupSymbol>().unwrap()).unwrap();
        let l = IntersectionLattice::new(&g);
        (g, l)
    }

    /// Counts cosets `u W_X` fixed by `w` directly.
    fn fixed_cosets(g: &Group, r: ReflSet, w: Element) -> usize {
        let sub: HashSet<Element> = reflection_subgroup(g, r).into_iter().collect();
        let hits = g
            .elements()
            .filter(|&u| sub.contains(&g.mul(g.inverse(u), g.mul(w, u))))
            .count();
        hits / sub.len()
    }

    #[test]
    fn a1_xi_is_sign() {
        let (g, l) = setup("A1");
        let r = BurnsideRing::new(&g, &l);
        let xi = r.xi();
        assert_eq!(xi, &r.regular() - &r.trivial());
        assert_eq!(r.class_function(&xi), r.sign_class_function());
    }

    #[test]
    fn char_values_match_fixed_coset_counts() {
        for s in ["A3", "B3"] {
            let (g, l) = setup(s);
            let r = BurnsideRing::new(&g, &l);
            for x in 0..l.len() {
                let phi = r.phi(x);
                for w in g.elements().step_by(3) {
                    let direct = fixed_cosets(&g, l.flat(x).reflections, w);
                    assert_eq!(r.char_value(&phi, w), BigInt::from(direct), "{s} flat {x}");
                }
            }
        }
    }

    #[test]
    fn regular_and_trivial() {
        let (g, l) = setup("B2");
        let r = BurnsideRing::new(&g, &l);
        for w in g.elements() {
            let expect = if w == g.identity() { g.order() } else { 0 };
            assert_eq!(r.char_value(&r.regular(), w), BigInt::from(expect));
            assert_eq!(r.char_value(&r.trivial(), w), BigInt::from(1));
        }
        assert_eq!(r.dimension(&r.trivial()), BigInt::from(1));
    }

    #[test]
    fn xi_two_ways_and_whitney() {
        for s in ["A2", "A3", "B3", "G2", "D4"] {
            let (g, l) = setup(s);
            let r = BurnsideRing::new(&g, &l);
            assert_eq!(r.xi(), r.xi_by_flats(), "{s}");
            assert_eq!(r.xi(), r.whitney_alternating_sum(), "{s}");
            assert_eq!(r.whitney_component(0), r.trivial());
            assert_eq!(r.trivial_multiplicity(&r.xi()), BigInt::zero());
        }
    }

    #[test]
    fn a2_whitney_one() {
        let (g, l) = setup("A2");
        let r = BurnsideRing::new(&g, &l);
        let w1 = r.whitney_component(1);
        assert_eq!(w1, r.phi(1).scale(&BigInt::from(3)));
    }

    #[test]
    fn tensor_sign_matches_pointwise_sign() {
        for s in ["A3", "B3", "G2"] {
            let (g, l) = setup(s);
            let r = BurnsideRing::new(&g, &l);
            let eps = r.sign_class_function();
            for o in l.orbits() {
                let b = BurnsideElement::basis(o.label);
                let lhs = r.class_function(&r.tensor_sign(&b));
                let rhs = r.class_function(&b);
                for c in 0..eps.values.len() {
                    assert_eq!(lhs.values[c], &rhs.values[c] * &eps.values[c]);
                }
                assert_eq!(r.tensor_sign(&r.tensor_sign(&b)), b);
            }
            let t = r.tensor_sign(&r.trivial());
            assert_eq!(r.class_function(&t), eps);
        }
    }

    #[test]
    fn xi_tensor_sign_is_positive() {
        for s in ["A3", "B3", "G2", "F4"] {
            let (g, l) = setup(s);
            let r = BurnsideRing::new(&g, &l);
            let t = r.tensor_sign(&r.xi());
            assert!(t.is_nonnegative(), "{s}");
            let mu = l.mobius_to_top(l.bottom()).abs();
            assert_eq!(r.trivial_multiplicity(&t), BigInt::from(mu));
            assert_eq!(r.sign_multiplicity(&r.xi()), BigInt::from(mu));
            let xi_cf = r.class_function(&r.xi());
            assert_eq!(xi_cf.inner_product(&r.sign_class_function(), &g), Some(BigInt::from(mu)));
        }
    }

    #[test]
    fn a3_xi_dimension() {
        let (g, l) = setup("A3");
        let r = BurnsideRing::new(&g, &l);
        assert_eq!(r.dimension(&r.xi()), BigInt::from(33));
        assert_eq!(r.char_value(&r.xi(), g.identity()), BigInt::from(33));
    }
}
