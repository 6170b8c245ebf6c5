//! Exact rational and integer linear algebra.
//!
//! Everything here is arbitrary precision; there is no floating point in the
//! crate. Cone membership is decided by an exact simplex with Bland's rule,
//! so it always terminates.

mod matrix;
pub mod simplex;

pub use matrix::{
    determinant, hermite_rows, integer_kernel_basis, rank, rank_int, rational_kernel_basis, rref,
    smith_normal_form, solve_unique, IntMatrix, IntVector, Matrix, RatMatrix, RatVector, Smith,
};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;
use simplex::LpOutcome;

fn check_dims(generators: &[RatVector], target: &[Rat]) -> Result<()> {
    for g in generators {
        if g.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                found: g.len(),
            });
        }
    }
    Ok(())
}

/// Nonnegative coefficients `c` with `sum c_i g_i = target`, if any exist.
pub fn conic_feasible(generators: &[RatVector], target: &[Rat]) -> Result<Option<RatVector>> {
    check_dims(generators, target)?;
    if generators.is_empty() {
        return Ok(target.iter().all(Zero::is_zero).then(Vec::new));
    }
    let a: Vec<Vec<Rat>> = (0..target.len())
        .map(|d| generators.iter().map(|g| g[d].clone()).collect())
        .collect();
    let x = simplex::feasible_point(&a, target);
    if let Some(x) = &x {
        // exact re-verification of the certificate
        debug_assert!(combination(generators, x, target.len()) == target);
    }
    Ok(x)
}

/// Interior test against the full ambient space of the generators' dimension.
pub fn strictly_conic_feasible(generators: &[RatVector], target: &[Rat]) -> Result<bool> {
    strictly_conic_feasible_in(generators, target, target.len())
}

/// True iff `target` is a strictly positive combination of all generators and
/// the generators span a space of dimension `ambient_rank`.
pub fn strictly_conic_feasible_in(
    generators: &[RatVector],
    target: &[Rat],
    ambient_rank: usize,
) -> Result<bool> {
    check_dims(generators, target)?;
    if generators.is_empty() {
        return Ok(false);
    }
    let span = rank(&Matrix::from_rows(generators.to_vec(), target.len())?);
    if span < ambient_rank {
        return Ok(false);
    }
    // variables: mu_1..mu_k, s, slack;  sum (mu_i + s) g_i = target,  s + slack = 1
    let k = generators.len();
    let dim = target.len();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(dim + 1);
    let mut b: Vec<Rat> = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        let mut row: Vec<Rat> = generators.iter().map(|g| g[d].clone()).collect();
        row.push(generators.iter().fold(Rat::zero(), |acc, g| acc + &g[d]));
        row.push(Rat::zero());
        a.push(row);
        b.push(target[d].clone());
    }
    let mut last = vec![Rat::zero(); k + 2];
    last[k] = Rat::from_integer(1.into());
    last[k + 1] = Rat::from_integer(1.into());
    a.push(last);
    b.push(Rat::from_integer(1.into()));
    let mut c = vec![Rat::zero(); k + 2];
    c[k] = Rat::from_integer(1.into());
    Ok(match simplex::maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => unreachable!("s is bounded by the slack row"),
    })
}

/// `sum c_i g_i` in dimension `dim`.
pub fn combination(generators: &[RatVector], coeffs: &[Rat], dim: usize) -> RatVector {
    let mut out = vec![Rat::zero(); dim];
    for (g, c) in generators.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(g) {
            *o += c * x;
        }
    }
    out
}
