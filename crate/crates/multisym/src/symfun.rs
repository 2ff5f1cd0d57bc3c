//! Symmetric polynomials over a variable universe.
//!
//! The monomial symmetric polynomial of a multi-partition sums the distinct
//! rearrangements of its exponent vector with coefficient one; collecting
//! them over all multi-partitions of a fixed weight gives a basis of the
//! homogeneous symmetric polynomials of that degree.

use crate::error::{Error, Result};
use crate::indexing::Context;
use crate::partitions::{
    count_partitions_at_most, enumerate_multipartitions, MultiPartition, ENUMERATION_BUDGET,
};
use crate::polynomial::{factorial_bound, for_each_permutation_signed, Permutation, Polynomial};
use num_bigint::BigInt;
use num_traits::One;

/// Advances `arr` to its lexicographic successor, returning `false` once the
/// arrangement is the last one.  Starting from a sorted ascending sequence
/// this walks every distinct rearrangement of a multiset exactly once.
fn next_permutation(arr: &mut [u32]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Sum of the distinct rearrangements of the exponent vector of `mp`, each
/// with coefficient one.
pub fn monomial_symmetric(mp: &MultiPartition) -> Result<Polynomial> {
    let ctx = mp.context();
    let mut exps: Vec<u32> = mp.flat().to_vec();
    exps.sort_unstable();
    let mut raw: Vec<(Vec<u32>, BigInt)> = Vec::new();
    loop {
        raw.push((exps.clone(), BigInt::one()));
        if raw.len() as u64 > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded(format!(
                "orbit of {mp} exceeds {ENUMERATION_BUDGET} monomials"
            )));
        }
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Polynomial::from_terms(ctx, raw)
}

/// Sum of `sigma . p` over the full symmetric group of the universe.  An
/// already symmetric `p` comes back multiplied by `size!`.
pub fn symmetrize(p: &Polynomial) -> Result<Polynomial> {
    let size = p.context().universe_size();
    let bound = factorial_bound();
    if size > bound {
        return Err(Error::UniverseTooLarge { size, bound });
    }
    let mut acc = Polynomial::zero(p.context());
    let mut images: Vec<Vec<usize>> = Vec::new();
    for_each_permutation_signed(size, |perm, _| images.push(perm.to_vec()));
    for images in images {
        let sigma = Permutation::from_images(images).expect("permutation enumeration is valid");
        acc = &acc + &p.apply_permutation(&sigma)?;
    }
    Ok(acc)
}

/// Monomial symmetric polynomials of every multi-partition of weight `r`, in
/// enumeration order.  Pairwise distinct leading monomials make this a basis
/// of the degree-`r` homogeneous symmetric polynomials.
pub fn homogeneous_basis(ctx: Context, r: u64) -> Result<Vec<Polynomial>> {
    enumerate_multipartitions(ctx, r)?
        .iter()
        .map(monomial_symmetric)
        .collect()
}

/// Dimension of the degree-`r` homogeneous symmetric polynomials: partitions
/// of `r` into at most `universe_size` parts.
pub fn graded_dimension(ctx: Context, r: u64) -> Result<u64> {
    count_partitions_at_most(r, ctx.universe_size() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::factorial_bound;

    fn ctx(m: u32, n: u32, k: u32) -> Context {
        Context::new(m, n, k).unwrap()
    }

    fn mp(c: Context, flat: &[u32]) -> MultiPartition {
        MultiPartition::from_flat(c, flat.to_vec()).unwrap()
    }

    fn var(c: Context, i: usize) -> Polynomial {
        Polynomial::variable(c, i).unwrap()
    }

    #[test]
    fn orbit_sums_of_small_shapes() {
        let c = ctx(1, 2, 1);
        let x1 = var(c, 1);
        let x2 = var(c, 2);
        let x3 = var(c, 3);

        let pairs = monomial_symmetric(&mp(c, &[1, 1, 0])).unwrap();
        assert_eq!(pairs, &(&(&x1 * &x2) + &(&x1 * &x3)) + &(&x2 * &x3));

        let triple = monomial_symmetric(&mp(c, &[1, 1, 1])).unwrap();
        assert_eq!(triple, &(&x1 * &x2) * &x3);

        let squares = monomial_symmetric(&mp(c, &[2, 0, 0])).unwrap();
        assert_eq!(squares, &(&(&x1 * &x1) + &(&x2 * &x2)) + &(&x3 * &x3));

        let zero_shape = monomial_symmetric(&mp(c, &[0, 0, 0])).unwrap();
        assert_eq!(zero_shape, Polynomial::one(c));
    }

    /// All-ones shapes give the elementary symmetric polynomials: every
    /// coefficient is one and the monomials are exactly the squarefree
    /// products of `r` distinct variables.
    #[test]
    fn all_ones_shape_is_elementary() {
        let c = ctx(2, 2, 1);
        let size = c.universe_size() as u64;
        for r in 1..=size {
            let shape: Vec<u32> = vec![1; r as usize];
            let e_r = monomial_symmetric(&mp(c, &shape)).unwrap();
            let choose = {
                let mut acc = 1u64;
                for i in 0..r {
                    acc = acc * (size - i) / (i + 1);
                }
                acc
            };
            assert_eq!(e_r.num_terms() as u64, choose);
            for (mono, coeff) in e_r.terms() {
                assert!(coeff.is_one());
                assert!(mono.exps().iter().all(|&e| e <= 1));
                assert_eq!(mono.degree(), r);
            }
        }
    }

    #[test]
    fn orbit_sums_are_symmetric_and_homogeneous() {
        for (m, n, k) in [(1, 2, 1), (2, 2, 1), (1, 2, 2)] {
            let c = ctx(m, n, k);
            for r in 0..=5u64 {
                for shape in enumerate_multipartitions(c, r).unwrap() {
                    let poly = monomial_symmetric(&shape).unwrap();
                    assert!(poly.is_symmetric(), "m_{shape} in {c}");
                    assert!(poly.is_homogeneous(r));
                    // leading monomial is the shape itself
                    let (lead, lead_coeff) = poly.leading_term().unwrap();
                    assert_eq!(lead.exps(), shape.flat());
                    assert!(lead_coeff.is_one());
                }
            }
        }
    }

    #[test]
    fn symmetrize_multiplies_orbit_stabilizer() {
        let c = ctx(1, 2, 1);
        let x1 = var(c, 1);
        let sym = symmetrize(&x1).unwrap();
        let e1 = monomial_symmetric(&mp(c, &[1, 0, 0])).unwrap();
        assert_eq!(sym, &Polynomial::constant(c, 2) * &e1);

        // a fully symmetric input just scales by size!
        let e2 = monomial_symmetric(&mp(c, &[1, 1, 0])).unwrap();
        assert_eq!(symmetrize(&e2).unwrap(), &Polynomial::constant(c, 6) * &e2);
    }

    #[test]
    fn symmetrize_output_is_always_symmetric() {
        let c = ctx(2, 2, 0);
        let mut rng = crate::test_rng(23);
        for _ in 0..20 {
            let p = Polynomial::random(c, &mut rng, 4, 3, 9);
            assert!(symmetrize(&p).unwrap().is_symmetric());
        }
    }

    #[test]
    fn symmetrize_respects_the_factorial_bound() {
        let big = ctx(3, 3, 1);
        assert!(big.universe_size() > factorial_bound());
        let p = Polynomial::one(big);
        assert!(matches!(
            symmetrize(&p),
            Err(Error::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn basis_of_degree_two() {
        let c = ctx(1, 2, 1);
        let basis = homogeneous_basis(c, 2).unwrap();
        assert_eq!(basis.len(), 2);
        let squares = monomial_symmetric(&mp(c, &[2, 0, 0])).unwrap();
        let pairs = monomial_symmetric(&mp(c, &[1, 1, 0])).unwrap();
        assert_eq!(basis, vec![squares.clone(), pairs.clone()]);

        // a symmetric polynomial decomposes over the basis
        let f = &squares + &(&Polynomial::constant(c, 5) * &pairs);
        assert!(f.is_symmetric());
        assert_eq!(f, &basis[0] + &(&Polynomial::constant(c, 5) * &basis[1]));
    }

    #[test]
    fn basis_size_matches_graded_dimension() {
        for (m, n, k) in [(1, 2, 1), (2, 2, 1), (1, 2, 2), (2, 1, 1)] {
            let c = ctx(m, n, k);
            for r in 0..=6u64 {
                let basis = homogeneous_basis(c, r).unwrap();
                assert_eq!(basis.len() as u64, graded_dimension(c, r).unwrap());
                // pairwise distinct leading monomials: linearly independent
                let mut leads: Vec<_> = basis
                    .iter()
                    .map(|b| b.leading_term().unwrap().0.clone())
                    .collect();
                leads.sort();
                leads.dedup();
                assert_eq!(leads.len(), basis.len());
            }
        }
    }
}
