//! Block recursion for matrices `X = [[0, S], [Sᵗ, W]]` with `S·Sᵗ·S = 2S`
//! and `S` of rank one.
//!
//! Writing `f_k(X) = [[H_k, S_k], [S_kᵗ, W_k]]`, the blocks obey
//! `H_{k+1} = S·S_kᵗ − H_{k−1}`, `S_{k+1} = S·W_k − S_{k−1}` and
//! `W_{k+1} = Sᵗ·S_k + W·W_k − W_{k−1}`.

use num_bigint::BigInt;
use num_traits::One;

use crate::chebyshev::ChebContext;
use crate::diagrams::{build_diagram, Family};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The triple `(H_k, S_k, W_k)` together with the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockState {
    pub s: IntMatrix,
    pub w: IntMatrix,
    pub k: usize,
    pub h_k: IntMatrix,
    pub s_k: IntMatrix,
    pub w_k: IntMatrix,
    prev: (IntMatrix, IntMatrix, IntMatrix),
}

/// `c`: the first index above 1 with `S·f_c(W)·Sᵗ ≠ 0`, and `λ_c` with
/// `S·f_c(W)·Sᵗ = λ_c·S·Sᵗ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HswInvariants {
    pub c: usize,
    pub lambda_c: BigInt,
}

fn is_rank_one(s: &IntMatrix) -> bool {
    if s.is_zero() {
        return false;
    }
    let (r, m) = s.shape();
    for i in 0..r {
        for i2 in i + 1..r {
            for j in 0..m {
                for j2 in j + 1..m {
                    if s.get(i, j) * s.get(i2, j2) != s.get(i, j2) * s.get(i2, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn check_s(s: &IntMatrix) -> Result<()> {
    if !is_rank_one(s) {
        return Err(Error::Hypothesis("S must have rank one".into()));
    }
    let sst_s = &(s * &s.transpose()) * s;
    if sst_s != s.scale_i64(2) {
        return Err(Error::Hypothesis("S·Sᵗ·S must equal 2S".into()));
    }
    Ok(())
}

/// Splits `x` after the first `r` rows and columns and returns the state at `k = 1`.
pub fn block_decompose(x: &IntMatrix, r: usize) -> Result<BlockState> {
    let n = x.ensure_square()?;
    if r == 0 || r >= n {
        return Err(Error::Hypothesis(format!("top block size {r} must lie in 1..{n}")));
    }
    let m = n - r;
    if !x.is_symmetric() {
        return Err(Error::Hypothesis("X must be symmetric".into()));
    }
    if !x.submatrix(0, 0, r, r).is_zero() {
        return Err(Error::Hypothesis("top-left block must be zero".into()));
    }
    let s = x.submatrix(0, r, r, m);
    check_s(&s)?;
    let w = x.submatrix(r, r, m, m);
    Ok(BlockState {
        h_k: IntMatrix::zero(r),
        s_k: s.clone(),
        w_k: w.clone(),
        prev: (IntMatrix::identity(r), IntMatrix::zeros(r, m), IntMatrix::identity(m)),
        k: 1,
        s,
        w,
    })
}

/// Advances the state from `k` to `k + 1`.
pub fn hsw_step(state: &BlockState) -> BlockState {
    let (h_prev, s_prev, w_prev) = &state.prev;
    let h = &(&state.s * &state.s_k.transpose()) - h_prev;
    let s_next = &(&state.s * &state.w_k) - s_prev;
    let w = &(&(&state.s.transpose() * &state.s_k) + &(&state.w * &state.w_k)) - w_prev;
    BlockState {
        s: state.s.clone(),
        w: state.w.clone(),
        k: state.k + 1,
        prev: (state.h_k.clone(), state.s_k.clone(), state.w_k.clone()),
        h_k: h,
        s_k: s_next,
        w_k: w,
    }
}

impl BlockState {
    pub fn step(&self) -> BlockState {
        hsw_step(self)
    }

    /// `[[H_k, S_k], [S_kᵗ, W_k]]`.
    pub fn assemble(&self) -> IntMatrix {
        IntMatrix::from_blocks(&self.h_k, &self.s_k, &self.s_k.transpose(), &self.w_k)
            .expect("block shapes are consistent")
    }

    /// The base matrix `X` rebuilt from `S` and `W`.
    pub fn base(&self) -> IntMatrix {
        let r = self.s.rows();
        IntMatrix::from_blocks(&IntMatrix::zero(r), &self.s, &self.s.transpose(), &self.w)
            .expect("block shapes are consistent")
    }
}

pub fn invariants_c_lambda(s: &IntMatrix, w: &IntMatrix, bound: usize) -> Result<HswInvariants> {
    if bound < 2 {
        return Err(Error::InvalidIndex {
            index: bound as i64,
            constraint: "invariant search bound must be at least 2".into(),
        });
    }
    let sst = s * &s.transpose();
    let st = s.transpose();
    let mut ctx = ChebContext::new(w.clone())?;
    for c in 2..=bound {
        let val = &(s * ctx.eval(c as i64)?) * &st;
        if val.is_zero() {
            continue;
        }
        return match val.scalar_multiple_of(&sst) {
            Some(lambda_c) => Ok(HswInvariants { c, lambda_c }),
            None => Err(Error::Hypothesis(format!(
                "S·f_{c}(W)·Sᵗ is not an integer multiple of S·Sᵗ"
            ))),
        };
    }
    Err(Error::InvariantNotFound { bound })
}

/// `ψ_x = Σ_{r=0..x} f_r(W)·Sᵗ·S·f_{x−r}(W)`, zero for `x < 0`.
pub fn psi(s: &IntMatrix, w: &IntMatrix, x: i64) -> Result<IntMatrix> {
    let m = w.ensure_square()?;
    if x < 0 {
        return Ok(IntMatrix::zero(m));
    }
    let sts = &s.transpose() * s;
    let mut ctx = ChebContext::new(w.clone())?;
    let table = ctx.table(x as usize);
    let mut acc = IntMatrix::zero(m);
    for r in 0..=x as usize {
        let term = &(&table[r + 1] * &sts) * &table[x as usize - r + 1];
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Closed-form `(H_k, S_k, W_k)` for `1 ≤ k ≤ c + 2`.
pub fn hsw_closed(s: &IntMatrix, w: &IntMatrix, k: usize) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    check_s(s)?;
    let m = w.ensure_square()?;
    if s.cols() != m {
        return Err(Error::DimensionMismatch {
            op: "hsw_closed",
            left: s.shape(),
            right: w.shape(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidIndex {
            index: 0,
            constraint: "closed block formulas need k >= 1".into(),
        });
    }
    let st = s.transpose();
    if !(&(s * w) * &st).is_zero() {
        return Err(Error::Hypothesis("S·W·Sᵗ must vanish".into()));
    }
    let inv = match invariants_c_lambda(s, w, k.max(2)) {
        Ok(inv) => Some(inv),
        Err(Error::InvariantNotFound { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(inv) = &inv {
        if k > inv.c + 2 {
            return Err(Error::InvalidIndex {
                index: k as i64,
                constraint: format!("closed block formulas hold for k <= c + 2 = {}", inv.c + 2),
            });
        }
    }

    let mut ctx = ChebContext::new(w.clone())?;
    let ki = k as i64;
    let mut sum_f = IntMatrix::zero(m);
    let mut j = ki - 1;
    while j >= 0 {
        sum_f = &sum_f + ctx.eval(j)?;
        j -= 2;
    }
    let s_k = s * &sum_f;

    let mut w_k = ctx.value(ki)?;
    let mut x = ki - 2;
    while x >= 0 {
        w_k = &w_k + &psi(s, w, x)?;
        x -= 2;
    }

    let r = s.rows();
    let sst = s * &st;
    let h_table = |k: usize| -> IntMatrix {
        match k % 4 {
            0 => IntMatrix::identity(r),
            2 => &sst - &IntMatrix::identity(r),
            _ => IntMatrix::zero(r),
        }
    };
    let h_k = match &inv {
        Some(inv) if k == inv.c + 2 => {
            if inv.c % 2 == 0 {
                let coeff = &inv.lambda_c + BigInt::one();
                &sst.scale(&coeff) - &h_table(inv.c)
            } else {
                sst.scale(&inv.lambda_c)
            }
        }
        _ => h_table(k),
    };
    Ok((h_k, s_k, w_k))
}

/// A diagram relabeled into block form `[[0, S], [Sᵗ, W]]`, with the size
/// `r` of the zero corner. Only `D`, `Dtilde` (index ≥ 4), `Atilde` and
/// `DLtilde` admit this shape.
///
/// `Atilde_n` lists its extra vertex last, so it is moved to the front.
pub fn block_form(family: Family, index: usize) -> Result<(IntMatrix, usize)> {
    let spec = build_diagram(family, index)?;
    let x = spec.adjacency;
    match family {
        Family::D | Family::DLTilde => Ok((x, 2)),
        Family::DTilde if index >= 4 => Ok((x, 2)),
        Family::ATilde => {
            let n = x.dim();
            let perm: Vec<usize> = std::iter::once(n - 1).chain(0..n - 1).collect();
            Ok((x.permuted(&perm), 1))
        }
        _ => Err(Error::UnsupportedFamily {
            family: family.name().into(),
            reason: "no block form [[0, S], [Sᵗ, W]] with S·Sᵗ·S = 2S",
        }),
    }
}
