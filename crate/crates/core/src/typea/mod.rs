//! The symmetric group `S_n = W(A_{n-1})`: set partitions, uniform block
//! permutations, Frobenius characteristics and generating functions.

pub mod counting;
pub mod partitions;
pub mod series;
pub mod symfunc;
pub mod ubp;

use num_traits::One;

use crate::bitset::ReflSet;
use crate::burnside::{BurnsideElement, BurnsideRing};
use crate::coxgroup::Group;
use crate::error::{Error, Result};
use crate::flats::OrbitLabel;
use crate::Rational;

pub use counting::{bessel_dims, descent_pair_count};
pub use partitions::{partition_mobius, partitions, set_partitions, Partition, SetPartition};
pub use series::{Ring, Series};
pub use symfunc::{Basis, HPolynomial, SymFunc};
pub use ubp::{ubp_isomorphism, ubps, Ubp};

fn require_type_a(group: &Group) -> Result<()> {
    if group.symbol().is_type_a() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{} is not of type A", group.symbol())))
    }
}

/// Set partition of `{0..n}` whose blocks are the classes of `i ~ j` for
/// reflections `(i j)` in the set.
pub fn flat_set_partition(group: &Group, reflections: ReflSet) -> Result<SetPartition> {
    require_type_a(group)?;
    let m = group.rank() + 1;
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for k in reflections.iter() {
        // The root e_i - e_j has simple coordinates 1 on positions i..j-1.
        let c = group.root(k);
        let i = c.iter().position(|&x| x != 0).unwrap();
        let j = c.iter().rposition(|&x| x != 0).unwrap() + 1;
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        parent[a] = b;
    }
    let labels: Vec<usize> = (0..m).map(|x| find(&mut parent, x)).collect();
    Ok(SetPartition::from_labels(&labels))
}

/// Block shape of any flat in the orbit.
pub fn orbit_shape(group: &Group, label: OrbitLabel) -> Result<Partition> {
    Ok(flat_set_partition(group, label.reflections())?.shape())
}

/// Frobenius characteristic in the `H` basis: `Fr(phi_pi) = H_lambda`.
pub fn frobenius(ring: &BurnsideRing, b: &BurnsideElement) -> Result<SymFunc> {
    let g = ring.group();
    require_type_a(g)?;
    let n = g.rank() + 1;
    let mut out = SymFunc::zero(Basis::H, n);
    for (label, c) in b.terms() {
        out.add_term(orbit_shape(g, label)?, Rational::from_integer(c.clone()));
    }
    Ok(out)
}

/// `xi_1, ..., xi_N` from `sum xi_n z^n/n! = -log(sum H_n (-z)^n/n!)`.
pub fn xi_series(order: usize) -> Result<Vec<SymFunc>> {
    if order > symfunc::MAX_DEGREE {
        return Err(Error::SizeCap {
            what: "series order",
            size: order as u128,
            cap: symfunc::MAX_DEGREE as u128,
        });
    }
    let fact = |n: usize| -> Rational { Rational::from_integer(partitions::factorial(n)) };
    let coeffs: Vec<HPolynomial> = (0..=order)
        .map(|n| {
            if n == 0 {
                return HPolynomial::constant(Rational::one());
            }
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            HPolynomial::h(n).scale(&(sign / fact(n)))
        })
        .collect();
    let log = Series::new(coeffs, order).log()?;
    Ok((1..=order)
        .map(|n| log.coeff(n).homogeneous_part(n).scale(&-fact(n)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::IntersectionLattice;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn small_xi_series() {
        let xs = xi_series(4).unwrap();
        assert_eq!(xs[0], SymFunc::monomial(Basis::H, p(&[1])));
        let xi3 = SymFunc::from_terms(Basis::H, 3, [(p(&[1, 1, 1]), q(2)), (p(&[2, 1]), q(-3)), (p(&[3]), q(1))]);
        assert_eq!(xs[2], xi3);
        assert_eq!(xs[2].dimension().unwrap(), q(4));
    }

    #[test]
    fn xi_series_matches_group_computation() {
        let xs = xi_series(6).unwrap();
        for n in 2..=6 {
            let g = Group::new(format!("A{}", n - 1).parse().unwrap()).unwrap();
            let l = IntersectionLattice::new(&g);
            let ring = BurnsideRing::new(&g, &l);
            assert_eq!(frobenius(&ring, &ring.xi()).unwrap(), xs[n - 1], "n = {n}");
        }
    }

    #[test]
    fn orbit_shapes_a3() {
        let g = Group::new("A3".parse().unwrap()).unwrap();
        let l = IntersectionLattice::new(&g);
        let mut shapes: Vec<String> = l.orbits().iter().map(|o| orbit_shape(&g, o.label).unwrap().to_string()).collect();
        shapes.sort();
        assert_eq!(shapes, vec!["1,1,1,1", "2,1,1", "2,2", "3,1", "4"]);
        let b = Group::new("B2".parse().unwrap()).unwrap();
        assert!(flat_set_partition(&b, ReflSet::EMPTY).is_err());
    }
}
