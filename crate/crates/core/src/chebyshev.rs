//! The second-kind Chebyshev recurrence `f_k = X·f_{k-1} − f_{k-2}` evaluated
//! on a square integer matrix, with `f_{-1} = 0`, `f_0 = I`, `f_1 = X`.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Memoized evaluation of `f_k(X)` for a fixed base matrix `X`.
///
/// The cache holds `f_{-1}, f_0, …, f_m` contiguously; `cache[k + 1]` is `f_k`.
#[derive(Clone, Debug)]
pub struct ChebContext {
    base: IntMatrix,
    cache: Vec<IntMatrix>,
}

impl ChebContext {
    pub fn new(base: IntMatrix) -> Result<Self> {
        let n = base.ensure_square()?;
        let cache = vec![IntMatrix::zero(n), IntMatrix::identity(n), base.clone()];
        Ok(Self { base, cache })
    }

    pub fn base(&self) -> &IntMatrix {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Largest `k` whose value is already cached.
    pub fn cached_max(&self) -> i64 {
        self.cache.len() as i64 - 2
    }

    fn extend_to(&mut self, k: usize) {
        while self.cache.len() < k + 2 {
            let len = self.cache.len();
            let next = &(&self.base * &self.cache[len - 1]) - &self.cache[len - 2];
            self.cache.push(next);
        }
    }

    /// `f_k(X)` for `k ≥ −1`, extending the cache as needed.
    pub fn eval(&mut self, k: i64) -> Result<&IntMatrix> {
        if k < -1 {
            return Err(Error::InvalidIndex {
                index: k,
                constraint: "Chebyshev index must be at least -1".into(),
            });
        }
        let idx = (k + 1) as usize;
        self.extend_to(k.max(0) as usize);
        Ok(&self.cache[idx])
    }

    /// Owned copy of `f_k(X)`.
    pub fn value(&mut self, k: i64) -> Result<IntMatrix> {
        self.eval(k).cloned()
    }

    /// Cached value, if already computed. Never extends the cache.
    pub fn cached(&self, k: i64) -> Option<&IntMatrix> {
        if k < -1 {
            return None;
        }
        self.cache.get((k + 1) as usize)
    }

    /// `[f_0(X), …, f_{k_max}(X)]`.
    pub fn seq(&mut self, k_max: usize) -> Vec<IntMatrix> {
        self.extend_to(k_max);
        self.cache[1..k_max + 2].to_vec()
    }

    /// Borrowing view of `f_{-1}, …, f_{k_max}` (index `k + 1` holds `f_k`).
    pub fn table(&mut self, k_max: usize) -> &[IntMatrix] {
        self.extend_to(k_max);
        &self.cache[..k_max + 2]
    }
}

/// One-shot `f_k(X)`.
pub fn cheb_eval(x: &IntMatrix, k: i64) -> Result<IntMatrix> {
    ChebContext::new(x.clone())?.value(k)
}

/// One-shot `[f_0(X), …, f_{k_max}(X)]`.
pub fn cheb_seq(x: &IntMatrix, k_max: usize) -> Result<Vec<IntMatrix>> {
    Ok(ChebContext::new(x.clone())?.seq(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> IntMatrix {
        IntMatrix::from_i64(&[[0, 1], [1, 0]])
    }

    fn l2() -> IntMatrix {
        IntMatrix::from_i64(&[[1, 1], [1, 0]])
    }

    fn four_cycle() -> IntMatrix {
        IntMatrix::from_i64(&[[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    }

    #[test]
    fn base_cases() {
        let mut ctx = ChebContext::new(l2()).unwrap();
        assert!(ctx.eval(-1).unwrap().is_zero());
        assert!(ctx.eval(0).unwrap().is_identity());
        assert_eq!(ctx.eval(1).unwrap(), &l2());
    }

    #[test]
    fn type_a2_vanishes_at_two() {
        assert!(cheb_eval(&a2(), 2).unwrap().is_zero());
        assert_eq!(
            cheb_seq(&a2(), 2).unwrap(),
            vec![IntMatrix::identity(2), a2(), IntMatrix::zero(2)]
        );
    }

    #[test]
    fn l2_values() {
        assert_eq!(cheb_eval(&l2(), 2).unwrap(), l2());
        assert!(cheb_eval(&l2(), 3).unwrap().is_identity());
    }

    #[test]
    fn four_cycle_f4() {
        // f_4 = X^4 - 3X^2 + I; on the 4-cycle this is 3I + 2P, P the antipodal map
        let antipodal = IntMatrix::permutation(&[2, 3, 0, 1]);
        let expected = &IntMatrix::identity(4).scale_i64(3) + &antipodal.scale_i64(2);
        let seq = cheb_seq(&four_cycle(), 4).unwrap();
        assert_eq!(seq.len(), 5);
        assert_eq!(seq[4], expected);
    }

    #[test]
    fn short_sequence() {
        let x = IntMatrix::from_i64(&[[2, 1], [1, 3]]);
        assert_eq!(cheb_seq(&x, 1).unwrap(), vec![IntMatrix::identity(2), x]);
    }

    #[test]
    fn invalid_index() {
        let err = cheb_eval(&a2(), -2).unwrap_err();
        assert!(matches!(err, Error::InvalidIndex { index: -2, .. }));
    }

    #[test]
    fn non_square_rejected() {
        let x = IntMatrix::zeros(2, 3);
        assert!(matches!(ChebContext::new(x), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn cache_is_idempotent() {
        let x = IntMatrix::from_i64(&[[1, 2, 0], [2, 0, 1], [0, 1, 1]]);
        let mut ctx = ChebContext::new(x.clone()).unwrap();
        let late = ctx.value(17).unwrap();
        let early = ctx.value(5).unwrap();
        assert_eq!(ctx.value(17).unwrap(), late);
        assert_eq!(cheb_eval(&x, 5).unwrap(), early);
        assert_eq!(ctx.cached_max(), 17);
    }
}
