//! Non-recursive formulas for `f_k(X)`: the grid description for type A,
//! the staircase corner matrices for the loop-bearing types, and the block
//! machinery in [`blocks`].

pub mod blocks;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Lattice points `(i, j)` (1-based) with `k+2 ≤ i+j ≤ 2n−k`,
/// `i+j ≡ k (mod 2)` and `|j−i| ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSet {
    pub n: usize,
    pub k: i64,
    pub points: BTreeSet<(usize, usize)>,
}

impl ThetaSet {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.points.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn range_error(what: &str, k: i64, lo: i64, hi: i64) -> Error {
    Error::InvalidIndex {
        index: k,
        constraint: format!("{what} needs {lo} <= k <= {hi}"),
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidIndex {
            index: n as i64,
            constraint: format!("size must be at least {min}"),
        });
    }
    Ok(())
}

pub fn theta_set(n: usize, k: i64) -> Result<ThetaSet> {
    check_n(n, 2)?;
    let ni = n as i64;
    if !(-1..=ni).contains(&k) {
        return Err(range_error("theta_set", k, -1, ni));
    }
    let mut points = BTreeSet::new();
    for i in 1..=ni {
        for j in 1..=ni {
            let s = i + j;
            if s >= k + 2 && s <= 2 * ni - k && (s - k).rem_euclid(2) == 0 && (j - i).abs() <= k {
                points.insert((i as usize, j as usize));
            }
        }
    }
    Ok(ThetaSet { n, k, points })
}

fn indicator(n: usize, points: impl IntoIterator<Item = (usize, usize)>) -> IntMatrix {
    let mut m = IntMatrix::zero(n);
    for (i, j) in points {
        m.set(i - 1, j - 1, BigInt::one());
    }
    m
}

/// `f_k(A_n)` as the indicator matrix of `Θ_k`.
pub fn type_a_closed(n: usize, k: i64) -> Result<IntMatrix> {
    let theta = theta_set(n, k)?;
    Ok(indicator(n, theta.points))
}

/// Staircase `T_k`: ones at `i + j ≤ k + 1`. Empty for `k ≤ 0`.
fn staircase(n: usize, k: i64) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        if (i + j + 2) as i64 <= k + 1 {
            BigInt::one()
        } else {
            BigInt::default()
        }
    })
}

/// `(T_k, B_k)`: the upper-left staircase of ones and its mirror image in
/// the bottom-right corner (`B_k = I⁰·T_k·I⁰`).
pub fn corner_matrices(n: usize, k: i64) -> Result<(IntMatrix, IntMatrix)> {
    check_n(n, 2)?;
    if k < 1 || k > n as i64 - 1 {
        return Err(range_error("corner_matrices", k, 1, n as i64 - 1));
    }
    let t = staircase(n, k);
    let b = t.reverse_labeling();
    Ok((t, b))
}

/// `f_k(L_n)` for `0 ≤ k ≤ 2n`.
///
/// Below `n` this is `f_k(A) + T_k`; from `n` on the sequence reflects,
/// `f_k(L) = f_{2n−1−k}(L)`, ending with `f_{2n−1} = I` and `f_{2n} = 0`.
pub fn type_l_closed(n: usize, k: i64) -> Result<IntMatrix> {
    check_n(n, 2)?;
    let ni = n as i64;
    if !(0..=2 * ni).contains(&k) {
        return Err(range_error("type_l_closed", k, 0, 2 * ni));
    }
    let k = if k >= ni { 2 * ni - 1 - k } else { k };
    if k < 0 {
        return Ok(IntMatrix::zero(n));
    }
    Ok(&type_a_closed(n, k)? + &staircase(n, k))
}

/// `f_k(L̃_n)` for `1 ≤ k ≤ n`: `f_k(A) + T_k + B_k`, and `U + I⁰` at `k = n`.
pub fn type_ltilde_closed(n: usize, k: i64) -> Result<IntMatrix> {
    check_n(n, 2)?;
    let ni = n as i64;
    if !(1..=ni).contains(&k) {
        return Err(range_error("type_ltilde_closed", k, 1, ni));
    }
    if k == ni {
        return Ok(&IntMatrix::ones(n) + &IntMatrix::anti_identity(n));
    }
    let (t, b) = corner_matrices(n, k)?;
    Ok(&(&type_a_closed(n, k)? + &t) + &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_eval;
    use crate::diagrams::{build_diagram, Family};

    fn adj(f: Family, n: usize) -> IntMatrix {
        build_diagram(f, n).unwrap().adjacency
    }

    #[test]
    fn theta_examples() {
        let t = theta_set(5, 0).unwrap();
        assert_eq!(t.points, (1..=5).map(|i| (i, i)).collect());
        assert!(theta_set(5, 5).unwrap().is_empty());
        assert!(theta_set(5, -1).unwrap().is_empty());
        let t = theta_set(3, 1).unwrap();
        assert_eq!(t.points, [(1, 2), (2, 1), (2, 3), (3, 2)].into_iter().collect());
        assert!(theta_set(3, 4).is_err());
    }

    #[test]
    fn type_a_matches_recurrence() {
        for n in 2..=12 {
            for k in -1..=n as i64 {
                assert_eq!(
                    type_a_closed(n, k).unwrap(),
                    cheb_eval(&adj(Family::A, n), k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(type_a_closed(4, 1).unwrap(), adj(Family::A, 4));
    }

    #[test]
    fn corners() {
        let (t, _) = corner_matrices(4, 1).unwrap();
        assert_eq!(t, IntMatrix::unit(4, 0, 0));
        let (t, b) = corner_matrices(3, 2).unwrap();
        assert_eq!(t, IntMatrix::from_i64(&[[1, 1, 0], [1, 0, 0], [0, 0, 0]]));
        assert_eq!(b, IntMatrix::from_i64(&[[0, 0, 0], [0, 0, 1], [0, 1, 1]]));
        assert!(corner_matrices(3, 3).is_err());
        assert!(corner_matrices(3, 0).is_err());
    }

    // The staircase recursion with the correction term E11·f_k(A).
    #[test]
    fn staircase_recursion() {
        for n in 3..=9 {
            let a = adj(Family::A, n);
            let e11 = IntMatrix::unit(n, 0, 0);
            let enn = IntMatrix::unit(n, n - 1, n - 1);
            for k in 1..(n as i64 - 1) {
                let fk = type_a_closed(n, k).unwrap();
                let (t, b) = corner_matrices(n, k).unwrap();
                let t_prev = staircase(n, k - 1);
                let b_prev = t_prev.reverse_labeling();
                let (t_next, b_next) = corner_matrices(n, k + 1).unwrap();
                let lhs = &(&(&(&e11 * &t) + &(&a * &t)) + &(&e11 * &fk)) - &t_prev;
                assert_eq!(lhs, t_next, "T n={n} k={k}");
                let lhs = &(&(&(&enn * &b) + &(&a * &b)) + &(&enn * &fk)) - &b_prev;
                assert_eq!(lhs, b_next, "B n={n} k={k}");
            }
        }
    }

    #[test]
    fn printed_staircase_identity_is_false() {
        let n = 4;
        let a = adj(Family::A, n);
        let e11 = IntMatrix::unit(n, 0, 0);
        let (t, _) = corner_matrices(n, 1).unwrap();
        let (t2, _) = corner_matrices(n, 2).unwrap();
        assert_ne!(&(&e11 * &t) + &(&a * &t), t2);
    }

    #[test]
    fn type_l_matches_recurrence() {
        for n in 2..=10 {
            let l = adj(Family::L, n);
            for k in 0..=2 * n as i64 {
                assert_eq!(type_l_closed(n, k).unwrap(), cheb_eval(&l, k).unwrap(), "n={n} k={k}");
            }
            let ni = n as i64;
            assert!(type_l_closed(n, 2 * ni - 1).unwrap().is_identity());
            assert!(type_l_closed(n, 2 * ni).unwrap().is_zero());
            assert!(type_l_closed(n, 2 * ni + 1).is_err());
        }
    }

    #[test]
    fn type_ltilde_matches_recurrence() {
        for n in 2..=10 {
            let x = adj(Family::LTilde, n);
            for k in 1..=n as i64 {
                assert_eq!(
                    type_ltilde_closed(n, k).unwrap(),
                    cheb_eval(&x, k).unwrap(),
                    "n={n} k={k}"
                );
            }
            let ni = n as i64;
            assert_eq!(type_ltilde_closed(n, ni - 1).unwrap(), IntMatrix::ones(n));
            if n >= 3 {
                assert_eq!(
                    type_ltilde_closed(n, ni - 2).unwrap(),
                    &IntMatrix::ones(n) - &IntMatrix::anti_identity(n)
                );
            }
        }
        assert_eq!(type_ltilde_closed(2, 1).unwrap(), IntMatrix::ones(2));
        assert!(type_ltilde_closed(4, 0).is_err());
    }
}
