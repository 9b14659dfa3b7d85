use cosetlab_core::typea::partitions::{factorial, partition_mobius_printed, partition_mobius_recursive};
use cosetlab_core::typea::{
    self, bessel_dims, descent_pair_count, partition_mobius, partitions, set_partitions, ubp_isomorphism, ubps, Basis,
    Partition, Series, SymFunc,
};
use cosetlab_core::{BurnsideRing, CosetPoset, Group, GroupSymbol, IntersectionLattice, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn type_a(n: usize) -> Group {
    Group::new(format!("A{n}").parse::<GroupSymbol>().unwrap()).unwrap()
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn schur(coeffs: &[(&str, i64)]) -> SymFunc {
    let n = Partition::parse(coeffs[0].0).unwrap().size();
    SymFunc::from_terms(Basis::S, n, coeffs.iter().map(|(p, c)| (Partition::parse(p).unwrap(), int(*c))))
}

#[test]
fn s4_flag_h_table() {
    let g = type_a(3);
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let table: [(&[usize], &[(&str, i64)]); 8] = [
        (&[1, 2, 3], &[("1111", 6), ("211", 6), ("22", 3), ("31", 1)]),
        (&[1, 2], &[("1111", 5), ("211", 9), ("22", 4), ("31", 3)]),
        (&[1, 3], &[("1111", 6), ("211", 18), ("22", 9), ("31", 11)]),
        (&[2, 3], &[("211", 12), ("22", 9), ("31", 17), ("4", 6)]),
        (&[1], &[("1111", 1), ("211", 3), ("22", 2), ("31", 3)]),
        (&[2], &[("211", 6), ("22", 6), ("31", 12), ("4", 5)]),
        (&[3], &[("22", 3), ("31", 7), ("4", 6)]),
        (&[], &[("4", 1)]),
    ];
    for (ranks, expect) in table {
        let b = ring.rank_selected_character(ranks);
        let f = typea::frobenius(&ring, &b).unwrap().to_basis(Basis::S).unwrap();
        assert_eq!(f, schur(expect), "h_{ranks:?}");
    }
}

#[test]
fn h23_dimension_matches_lefschetz_on_rank_selection() {
    let g = type_a(3);
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let poset = CosetPoset::new(&g, &l).unwrap();
    let b = ring.rank_selected_character(&[2, 3]);
    assert_eq!(ring.dimension(&b), BigInt::from(111));
    // Top homology of a Cohen-Macaulay rank selection of length 2.
    assert_eq!(-poset.lefschetz_character(g.identity(), Some(&[2, 3])), 111);
}

#[test]
fn omega_h123_is_h_positive() {
    let g = type_a(3);
    let l = IntersectionLattice::new(&g);
    let ring = BurnsideRing::new(&g, &l);
    let w = typea::frobenius(&ring, &ring.rank_selected_character(&[1, 2, 3])).unwrap().omega().unwrap();
    let expect = SymFunc::from_terms(
        Basis::H,
        4,
        [("211", 1), ("22", 2), ("31", 2), ("4", 1)].map(|(p, c)| (Partition::parse(p).unwrap(), int(c))),
    );
    assert_eq!(w, expect);
}

#[test]
fn xi3_in_h_basis() {
    let series = typea::xi_series(3).unwrap();
    let expect = SymFunc::from_terms(
        Basis::H,
        3,
        [("111", 2), ("21", -3), ("3", 1)].map(|(p, c)| (Partition::parse(p).unwrap(), int(c))),
    );
    assert_eq!(series[2], expect);
    assert_eq!(series[2].dimension().unwrap(), int(4));
    assert_eq!(series[0], SymFunc::monomial(Basis::H, Partition::parse("1").unwrap()));
}

#[test]
fn frobenius_dimension_matches_group_dimension() {
    for n in 2..=5 {
        let g = type_a(n - 1);
        let l = IntersectionLattice::new(&g);
        let ring = BurnsideRing::new(&g, &l);
        for ranks in [vec![1], vec![1, 2], (1..n).collect::<Vec<_>>()] {
            let b = ring.rank_selected_character(&ranks);
            let f = typea::frobenius(&ring, &b).unwrap();
            let via_inner = f.inner(&SymFunc::monomial(Basis::H, Partition::new(vec![1; n]))).unwrap();
            assert_eq!(via_inner, Rational::from_integer(ring.dimension(&b)), "n = {n}, R = {ranks:?}");
        }
    }
}

#[test]
fn three_routes_to_d() {
    let (d, dp) = bessel_dims(8).unwrap();
    assert!(typea::counting::bessel_log_relation_holds(&d, &dp));
    for n in 1..=8 {
        assert_eq!(descent_pair_count(n, true).unwrap(), d[n - 1], "n = {n}");
    }
    let unrestricted: Vec<_> = (0..=6).map(|n| descent_pair_count(n, false).unwrap()).collect();
    assert_eq!(unrestricted, dp[..=6].to_vec());
}

#[test]
fn ubp_counts_and_isomorphism() {
    let counts: Vec<usize> = (1..=5).map(|n| ubps(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 16, 131, 1496]);
    for n in 2..=4 {
        let g = type_a(n - 1);
        let l = IntersectionLattice::new(&g);
        let poset = CosetPoset::new(&g, &l).unwrap();
        let iso = ubp_isomorphism(&poset).unwrap();
        let mut seen = iso.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), poset.len());
    }
    assert!(ubps(7).is_err());
}

#[test]
fn partition_mobius_routes() {
    for n in 1..=6 {
        for pi in set_partitions(n) {
            let r = partition_mobius_recursive(&pi);
            assert_eq!(partition_mobius(&pi), BigInt::from(r), "{pi}");
            assert_eq!(partition_mobius_printed(&pi), -BigInt::from(r), "{pi}");
        }
    }
    assert_eq!(partition_mobius(&typea::SetPartition::single_block(4)), BigInt::one());
}

/// `Σ_{π ∈ Π_n} Π_{b ∈ π} f(#b)`.
fn block_product_sum(n: usize, f: impl Fn(usize) -> BigInt, weight: impl Fn(&typea::SetPartition) -> BigInt) -> BigInt {
    set_partitions(n).iter().map(|pi| weight(pi) * pi.blocks().iter().map(|b| f(b.len())).product::<BigInt>()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moment_cumulant_inversion(k in proptest::collection::vec(-5i64..6, 6)) {
        let kk = |m: usize| BigInt::from(k[m - 1]);
        let moments: Vec<BigInt> = (1..=6).map(|n| block_product_sum(n, kk, |_| BigInt::one())).collect();
        let mm = |m: usize| moments[m - 1].clone();
        // Inversion through the lattice Möbius function, applied to block moments.
        for n in 1..=6 {
            let recovered = block_product_sum(n, mm, |pi| {
                let l = pi.num_blocks();
                let sign = if l % 2 == 1 { BigInt::one() } else { -BigInt::one() };
                sign * factorial(l - 1)
            });
            prop_assert_eq!(recovered, kk(n));
        }
        let egf = |c: &dyn Fn(usize) -> BigInt, constant: i64| {
            let mut v = vec![int(constant)];
            v.extend((1..=6).map(|n| Rational::new(c(n), factorial(n))));
            Series::new(v, 6)
        };
        let log_m = egf(&mm, 1).log().unwrap();
        prop_assert_eq!(log_m.coeffs().to_vec(), egf(&kk, 0).coeffs().to_vec());
    }

    #[test]
    fn omega_is_an_involution(coeffs in proptest::collection::vec(-9i64..10, 7), basis in 0usize..4) {
        let basis = [Basis::H, Basis::E, Basis::P, Basis::S][basis];
        let f = SymFunc::from_terms(basis, 5, partitions(5).into_iter().zip(coeffs.iter().map(|&c| int(c))));
        let back = f.omega().unwrap().omega().unwrap();
        prop_assert_eq!(back.to_basis(basis).unwrap(), f.clone());
        for target in [Basis::H, Basis::E, Basis::P, Basis::S] {
            prop_assert_eq!(f.to_basis(target).unwrap().to_basis(basis).unwrap(), f.clone());
        }
    }

    #[test]
    fn series_exp_inverts_log(coeffs in proptest::collection::vec(-20i64..21, 6)) {
        let mut v = vec![Rational::one()];
        v.extend(coeffs.iter().enumerate().map(|(i, &c)| Rational::new(BigInt::from(c), BigInt::from(i as i64 + 1))));
        let s = Series::new(v, 6);
        prop_assert_eq!(s.log().unwrap().exp().unwrap().coeffs().to_vec(), s.coeffs().to_vec());
        let prod = s.mul(&s.reciprocal().unwrap());
        prop_assert_eq!(prod.coeff(0).clone(), Rational::one());
        prop_assert!((1..=6).all(|i| prod.coeff(i).is_zero()));
    }
}
