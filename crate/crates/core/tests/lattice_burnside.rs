use std::collections::BTreeSet;

use cosetlab_core::burnside::reflection_subgroup;
use cosetlab_core::typea::{self, partition_mobius};
use cosetlab_core::{BurnsideElement, BurnsideRing, Group, GroupSymbol, IntersectionLattice};
use num_bigint::BigInt;
use proptest::prelude::*;

const SCOPE: [&str; 10] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"];

fn group(s: &str) -> Group {
    Group::new(s.parse::<GroupSymbol>().unwrap()).unwrap()
}

#[test]
fn mobius_of_the_lattice_is_signed_product_of_exponents() {
    for s in SCOPE {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        let prod: i64 = g.symbol().exponents().iter().map(|&e| e as i64).product();
        let sign = if g.rank() % 2 == 0 { 1 } else { -1 };
        assert_eq!(l.mobius_to_top(l.bottom()), sign * prod, "{s}");
        let total: i64 = (0..l.len()).map(|x| l.mobius(l.bottom(), x)).sum();
        assert_eq!(total, 0, "{s}");
    }
}

#[test]
fn mobius_alternates_on_every_interval() {
    for s in ["A3", "B3", "D4"] {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        for x in 0..l.len() {
            for &y in l.above(x) {
                let m = l.mobius(x, y);
                let d = l.flat(y).codim - l.flat(x).codim;
                assert!(m != 0 && (m > 0) == (d % 2 == 0), "{s}: mu({x},{y}) = {m}");
            }
        }
    }
}

#[test]
fn lower_intervals_in_a4_multiply_over_blocks() {
    // [V, X] is the partition lattice of the blocks of X, so its Möbius value
    // factors as the product over blocks.
    let g = group("A4");
    let l = IntersectionLattice::new(&g);
    for x in 0..l.len() {
        let pi = typea::flat_set_partition(&g, l.flat(x).reflections).unwrap();
        let expect: BigInt = pi
            .blocks()
            .iter()
            .map(|b| {
                let k = b.len() as i64;
                let f: i64 = (1..k).product();
                BigInt::from(if k % 2 == 1 { f } else { -f })
            })
            .product();
        assert_eq!(BigInt::from(l.mobius(l.bottom(), x)), expect);
        let top_of = typea::SetPartition::single_block(5);
        assert!(pi.refines(&top_of));
    }
    let one = typea::SetPartition::discrete(5);
    assert_eq!(partition_mobius(&one), BigInt::from(24));
}

#[test]
fn orbits_partition_the_lattice_with_normalizer_indices() {
    for s in ["A3", "B3", "D4", "G2", "F4"] {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        assert_eq!(l.orbits().iter().map(|o| o.size()).sum::<usize>(), l.len());
        for o in l.orbits() {
            let r = o.label.reflections();
            let normalizer = g.elements().filter(|&w| g.conjugate_reflections(w, r) == r).count();
            assert_eq!(o.size() * normalizer, g.order(), "{s}");
            let orbit: BTreeSet<_> = g.elements().map(|w| g.conjugate_reflections(w, r)).collect();
            assert_eq!(orbit.len(), o.size());
            assert_eq!(orbit.iter().next().unwrap().0, o.label.0);
        }
    }
}

#[test]
fn rank_selected_mobius_alternates_by_corank() {
    let g = group("B3");
    let l = IntersectionLattice::new(&g);
    for ranks in [vec![1], vec![2], vec![1, 3], vec![2, 3], vec![1, 2, 3]] {
        let sel = l.rank_selected(&ranks);
        for &x in &sel.members {
            let m = sel.mobius_to_top(x).unwrap();
            let above = ranks.iter().filter(|&&r| r > l.flat(x).codim + 1).count();
            let corank = if x == l.top() { 0 } else { above + 1 };
            assert_eq!(m.signum(), if corank % 2 == 0 { 1 } else { -1 }, "R = {ranks:?}");
        }
    }
}

/// Fixed points of `w` on `W / W_X`, counted directly from the group.
fn fixed_cosets(g: &Group, sub: &[cosetlab_core::Element], w: cosetlab_core::Element) -> usize {
    let members: BTreeSet<_> = sub.iter().copied().collect();
    let fixing = g.elements().filter(|&u| members.contains(&g.mul(g.inverse(u), g.mul(w, u)))).count();
    fixing / sub.len()
}

#[test]
fn characters_of_basis_elements_are_orbit_invariant() {
    for s in ["A3", "B3"] {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        let ring = BurnsideRing::new(&g, &l);
        for x in 0..l.len() {
            let sub = reflection_subgroup(&g, l.flat(x).reflections);
            for &w in &g.conjugacy_classes().representatives {
                let direct = fixed_cosets(&g, &sub, w);
                assert_eq!(ring.char_value(&ring.phi(x), w), BigInt::from(direct), "{s}");
            }
        }
    }
}

#[test]
fn xi_routes_agree() {
    for s in SCOPE {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        let ring = BurnsideRing::new(&g, &l);
        let xi = ring.xi();
        assert_eq!(xi, ring.xi_by_flats(), "{s}");
        assert_eq!(ring.whitney_alternating_sum(), xi, "{s}");
        let t = ring.tensor_sign(&xi);
        let total: BigInt = t.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(l.mobius_to_top(l.bottom()).abs()), "{s}");
    }
}

#[test]
fn a3_xi_in_partition_shapes() {
    let g = group("A3");
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let xi = ring.xi();
    let mut by_shape: Vec<(String, BigInt)> = xi
        .terms()
        .map(|(lab, c)| (typea::orbit_shape(&g, lab).unwrap().to_string(), c.clone()))
        .collect();
    by_shape.sort();
    let expect = [("1,1,1,1", 6), ("2,1,1", -12), ("2,2", 3), ("3,1", 4), ("4", -1)];
    assert_eq!(by_shape, expect.map(|(s, c)| (s.to_string(), BigInt::from(c))).to_vec());
    assert_eq!(ring.dimension(&xi), BigInt::from(33));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tensor_sign_is_pointwise_sign_and_an_involution(
        s in prop::sample::select(&["A3", "B3", "G2", "D4"][..]),
        coeffs in proptest::collection::vec(-6i64..7, 16),
    ) {
        let g = group(s);
        let l = IntersectionLattice::new(&g);
        let ring = BurnsideRing::new(&g, &l);
        let b = BurnsideElement::from_terms(
            l.orbits().iter().zip(&coeffs).map(|(o, &c)| (o.label, BigInt::from(c))),
        );
        let t = ring.tensor_sign(&b);
        prop_assert_eq!(ring.tensor_sign(&t), b.clone());
        for &w in &g.conjugacy_classes().representatives {
            prop_assert_eq!(ring.char_value(&t, w), ring.char_value(&b, w) * g.sign(w));
        }
        let cf = ring.class_function(&b);
        prop_assert_eq!(ring.char_value(&b, g.identity()), cf.value_at(&g, g.identity()).clone());
    }
}
