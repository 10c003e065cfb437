//! Exact definiteness test for symmetric integer matrices, by symmetric
//! Gaussian elimination over the rationals.
//!
//! Used as a cross-check of the classifier: for a connected nonnegative
//! symmetric `X`, `2I − X` is positive definite for finite types, singular
//! positive semidefinite for tame types and indefinite otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite and singular.
    PositiveSemidefinite,
    Indefinite,
}

pub fn definiteness(m: &IntMatrix) -> Result<Definiteness> {
    let n = m.ensure_square()?;
    if !m.is_symmetric() {
        return Err(Error::Validation("definiteness needs a symmetric matrix".into()));
    }
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(m.get(i, j).clone())).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        if alive.iter().any(|&i| a[i][i].is_negative()) {
            return Ok(Definiteness::Indefinite);
        }
        let pivot = alive.iter().copied().find(|&i| a[i][i].is_positive());
        let Some(p) = pivot else {
            // all remaining diagonal entries vanish: PSD only if the rest is zero
            let rest_zero = alive.iter().all(|&i| alive.iter().all(|&j| a[i][j].is_zero()));
            return Ok(if rest_zero {
                Definiteness::PositiveSemidefinite
            } else {
                Definiteness::Indefinite
            });
        };
        alive.retain(|&i| i != p);
        let d = a[p][p].clone();
        for &i in &alive {
            if a[i][p].is_zero() {
                continue;
            }
            let factor = &a[i][p] / &d;
            for &j in &alive {
                let delta = &factor * &a[p][j];
                a[i][j] -= delta;
            }
        }
    }
    Ok(Definiteness::PositiveDefinite)
}

/// Definiteness of `2I − X`.
pub fn cartan_definiteness(x: &IntMatrix) -> Result<Definiteness> {
    let n = x.ensure_square()?;
    let two = IntMatrix::identity(n).scale(&BigInt::from(2));
    definiteness(&(&two - x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{build_diagram, Family};

    #[test]
    fn small_cases() {
        let pd = IntMatrix::from_i64(&[[2, -1], [-1, 2]]);
        assert_eq!(definiteness(&pd).unwrap(), Definiteness::PositiveDefinite);
        let psd = IntMatrix::from_i64(&[[1, -1], [-1, 1]]);
        assert_eq!(definiteness(&psd).unwrap(), Definiteness::PositiveSemidefinite);
        let ind = IntMatrix::from_i64(&[[0, 1], [1, 0]]);
        assert_eq!(definiteness(&ind).unwrap(), Definiteness::Indefinite);
        let neg = IntMatrix::from_i64(&[[-1]]);
        assert_eq!(definiteness(&neg).unwrap(), Definiteness::Indefinite);
    }

    #[test]
    fn diagram_families() {
        for f in Family::ALL {
            for idx in f.min_index()..f.min_index() + 4 {
                if f.check_index(idx).is_err() {
                    continue;
                }
                let x = build_diagram(f, idx).unwrap().adjacency;
                let expected = if f.is_finite_type() {
                    Definiteness::PositiveDefinite
                } else {
                    Definiteness::PositiveSemidefinite
                };
                assert_eq!(cartan_definiteness(&x).unwrap(), expected, "{f}{idx}");
            }
        }
    }
}
