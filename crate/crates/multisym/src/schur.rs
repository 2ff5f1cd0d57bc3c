//! Schur polynomials as bialternant quotients.
//!
//! For a multi-partition `ell` the Schur polynomial is the alternant of the
//! staircase-shifted exponent sequence divided by the alternant of the
//! staircase itself, which equals the product of all variable differences
//! `x_i - x_j` over flat positions `i < j`.  The quotient is computed by
//! stripping those linear factors one at a time; [`schur_oracle`] recomputes
//! it from permutation-expansion determinants and one full division.

use crate::error::{Error, Result};
use crate::indexing::Context;
use crate::partitions::{shift_by_staircase, staircase, MultiPartition};
use crate::polynomial::{determinant, determinant_perm_expansion, Polynomial};

/// Matrix with entry `(i, j)` equal to the flat-position-`i` variable raised
/// to `alpha[j]`.  `alpha` must cover the universe and decrease strictly.
pub fn vandermonde_matrix(ctx: Context, alpha: &[u32]) -> Result<Vec<Vec<Polynomial>>> {
    validate_alpha(ctx, alpha)?;
    let size = ctx.universe_size();
    let mut rows = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for &power in alpha {
            let mut exps = vec![0u32; size];
            exps[i] = power;
            row.push(Polynomial::term(ctx, 1, exps).expect("exponent vector matches universe"));
        }
        rows.push(row);
    }
    Ok(rows)
}

fn validate_alpha(ctx: Context, alpha: &[u32]) -> Result<()> {
    let size = ctx.universe_size();
    if alpha.len() != size {
        return Err(Error::BadAlpha(format!(
            "sequence has {} entries, universe has {size}",
            alpha.len()
        )));
    }
    for (i, pair) in alpha.windows(2).enumerate() {
        if pair[0] <= pair[1] {
            return Err(Error::BadAlpha(format!(
                "entries {} and {} at positions {}, {} do not decrease strictly",
                pair[0],
                pair[1],
                i + 1,
                i + 2
            )));
        }
    }
    Ok(())
}

/// Determinant of the [`vandermonde_matrix`] of `alpha`.
pub fn alternant(ctx: Context, alpha: &[u32]) -> Result<Polynomial> {
    determinant(&vandermonde_matrix(ctx, alpha)?)
}

/// `x_i - x_j` for 1-based flat positions.
fn difference(ctx: Context, i: usize, j: usize) -> Polynomial {
    let xi = Polynomial::variable(ctx, i).expect("position in range");
    let xj = Polynomial::variable(ctx, j).expect("position in range");
    &xi - &xj
}

/// Product of `x_i - x_j` over all flat positions `i < j`; equals the
/// alternant of the staircase.
pub fn vandermonde_product(ctx: Context) -> Polynomial {
    let size = ctx.universe_size();
    let mut acc = Polynomial::one(ctx);
    for i in 1..=size {
        for j in (i + 1)..=size {
            acc = &acc * &difference(ctx, i, j);
        }
    }
    acc
}

/// Schur polynomial of `ell`: alternant of the shifted sequence divided by
/// the Vandermonde product, the division running one linear factor at a
/// time.
pub fn schur(ell: &MultiPartition) -> Result<Polynomial> {
    let ctx = ell.context();
    let shifted = shift_by_staircase(ell);
    let mut acc = alternant(ctx, shifted.flat())?;
    let size = ctx.universe_size();
    for i in 1..=size {
        for j in (i + 1)..=size {
            acc = acc.exact_div(&difference(ctx, i, j))?;
        }
    }
    Ok(acc)
}

/// Independent route to the same polynomial: numerator and denominator as
/// permutation-expansion determinants, then a single exact division.
/// Practical only while `size!` stays small.
pub fn schur_oracle(ell: &MultiPartition) -> Result<Polynomial> {
    let ctx = ell.context();
    let shifted = shift_by_staircase(ell);
    let num = determinant_perm_expansion(&vandermonde_matrix(ctx, shifted.flat())?)?;
    let den = determinant_perm_expansion(&vandermonde_matrix(ctx, staircase(ctx).values())?)?;
    num.exact_div(&den)
}
