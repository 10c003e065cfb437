//! Long-run behaviour of `(f_k(X))_k`: period certificates, linear-growth
//! certificates with closed-form extrapolation, and the finite / tame / wild
//! classification of symmetric nonnegative connected matrices.

use std::fmt;

use num_bigint::BigInt;

use crate::chebyshev::ChebContext;
use crate::diagrams::{identify_family, is_connected, validate_symmetric_nonnegative, Identification};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Witness that `f_{p−1}(X) = 0` and `f_p(X) = I`, so `f_k = f_{k mod p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodCertificate {
    pub first_zero: usize,
    pub period: usize,
    /// `f_0, …, f_p`.
    pub witness_window: Vec<IntMatrix>,
}

impl PeriodCertificate {
    /// Rechecks the certificate against a fresh evaluation of `x`.
    pub fn verify(&self, x: &IntMatrix) -> bool {
        let Ok(mut ctx) = ChebContext::new(x.clone()) else {
            return false;
        };
        let p = self.period as i64;
        let d = self.first_zero as i64;
        if p == 0 || p > 2 * d + 2 || self.witness_window.len() != self.period + 1 {
            return false;
        }
        let fresh = ctx.seq(self.period);
        fresh == self.witness_window
            && fresh[self.first_zero].is_zero()
            && fresh[..self.first_zero].iter().all(|f| !f.is_zero())
            && fresh[self.period - 1].is_zero()
            && fresh[self.period].is_identity()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrowthKind {
    /// `Z = 2I`.
    Uniform,
    /// `Z = 2I⁰`, hence `X·Z = 2X⁰`. The product condition alone does not
    /// carry the reduction identities past `t = 1`.
    Reversal,
    /// `X·Z = Z·X = 2X`.
    General,
}

impl GrowthKind {
    pub fn name(self) -> &'static str {
        match self {
            GrowthKind::Uniform => "uniform",
            GrowthKind::Reversal => "reversal",
            GrowthKind::General => "general",
        }
    }

    /// Whether `z` satisfies this kind's condition for base `x`.
    pub fn holds(self, x: &IntMatrix, z: &IntMatrix) -> bool {
        let n = x.dim();
        match self {
            GrowthKind::Uniform => *z == IntMatrix::identity(n).scale_i64(2),
            GrowthKind::Reversal => {
                *z == IntMatrix::anti_identity(n).scale_i64(2) && x * z == x.row_reverse().scale_i64(2)
            }
            GrowthKind::General => {
                let xz = x * z;
                xz == z * x && xz == x.scale_i64(2)
            }
        }
    }
}

impl fmt::Display for GrowthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Witness `f_q = f_{q−2} + Z` with a kind condition on `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthCertificate {
    pub q: usize,
    pub z: IntMatrix,
    pub kind: GrowthKind,
    /// `f_{−1}, …, f_{2q−1}`; entry `k + 1` holds `f_k`.
    pub base_table: Vec<IntMatrix>,
}

impl GrowthCertificate {
    /// `f_k` from the base table, for `−1 ≤ k ≤ 2q − 1`.
    pub fn f(&self, k: i64) -> Option<&IntMatrix> {
        if k < -1 {
            return None;
        }
        self.base_table.get((k + 1) as usize)
    }

    /// Rechecks the certificate against a fresh evaluation of `x`.
    pub fn verify(&self, x: &IntMatrix) -> bool {
        let Ok(mut ctx) = ChebContext::new(x.clone()) else {
            return false;
        };
        if self.q < 2 {
            return false;
        }
        let fresh = ctx.table(2 * self.q - 1);
        fresh == self.base_table.as_slice()
            && &fresh[self.q + 1] - &fresh[self.q - 1] == self.z
            && self.kind.holds(x, &self.z)
    }
}

fn growth_at(x: &IntMatrix, table: &[IntMatrix], q: usize, kinds: &[GrowthKind]) -> Option<(IntMatrix, GrowthKind)> {
    let z = &table[q + 1] - &table[q - 1];
    kinds.iter().find(|kind| kind.holds(x, &z)).map(|&kind| (z, kind))
}

fn certificate(ctx: &mut ChebContext, q: usize, z: IntMatrix, kind: GrowthKind) -> GrowthCertificate {
    GrowthCertificate {
        q,
        z,
        kind,
        base_table: ctx.table(2 * q - 1).to_vec(),
    }
}

/// First zero `d ≤ k_max` of the sequence, then the least `p ≤ 2d + 2` with
/// `f_{p−1} = 0` and `f_p = I`.
pub fn detect_period(x: &IntMatrix, k_max: usize) -> Result<Option<PeriodCertificate>> {
    let mut ctx = ChebContext::new(x.clone())?;
    period_in(&mut ctx, k_max)
}

fn period_in(ctx: &mut ChebContext, k_max: usize) -> Result<Option<PeriodCertificate>> {
    let mut first_zero = None;
    for k in 0..=k_max as i64 {
        if ctx.eval(k)?.is_zero() {
            first_zero = Some(k as usize);
            break;
        }
    }
    let Some(d) = first_zero else {
        return Ok(None);
    };
    for j in d..=2 * d + 1 {
        if ctx.eval(j as i64)?.is_zero() && ctx.eval(j as i64 + 1)?.is_identity() {
            let period = j + 1;
            return Ok(Some(PeriodCertificate {
                first_zero: d,
                period,
                witness_window: ctx.seq(period),
            }));
        }
    }
    Ok(None)
}

const ALL_KINDS: [GrowthKind; 3] = [GrowthKind::Uniform, GrowthKind::Reversal, GrowthKind::General];

/// Least `q` in `2..=k_max` admitting a certificate of any kind; at equal
/// `q` the uniform kind wins over reversal, and reversal over general.
pub fn detect_growth(x: &IntMatrix, k_max: usize) -> Result<Option<GrowthCertificate>> {
    let mut ctx = ChebContext::new(x.clone())?;
    growth_in(&mut ctx, k_max, &ALL_KINDS, 2)
}

/// Least `q` in `2..=k_max` admitting a certificate of the given kind.
pub fn detect_growth_of_kind(x: &IntMatrix, kind: GrowthKind, k_max: usize) -> Result<Option<GrowthCertificate>> {
    let mut ctx = ChebContext::new(x.clone())?;
    growth_in(&mut ctx, k_max, &[kind], 2)
}

fn growth_in(ctx: &mut ChebContext, k_max: usize, kinds: &[GrowthKind], from: usize) -> Result<Option<GrowthCertificate>> {
    let x = ctx.base().clone();
    for q in from.max(2)..=k_max {
        let table = ctx.table(q);
        if let Some((z, kind)) = growth_at(&x, table, q, kinds) {
            return Ok(Some(certificate(ctx, q, z, kind)));
        }
    }
    Ok(None)
}

/// Outcome of [`promote_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Promotion {
    pub certificate: GrowthCertificate,
    /// `false` when no uniform certificate was found within the bound.
    pub uniform: bool,
}

/// Looks for a uniform certificate (`Z = 2I`) beyond `cert.q`: first at the
/// doubled indices `2q, 4q, …`, then at every index up to `k_max`.
///
/// Without success, the strongest certificate seen is returned with
/// `uniform == false`.
pub fn promote_certificate(x: &IntMatrix, cert: &GrowthCertificate, k_max: usize) -> Result<Promotion> {
    if cert.kind == GrowthKind::Uniform {
        return Ok(Promotion {
            certificate: cert.clone(),
            uniform: true,
        });
    }
    let mut ctx = ChebContext::new(x.clone())?;
    let mut q = cert.q * 2;
    while q <= k_max {
        let table = ctx.table(q);
        if let Some((z, kind)) = growth_at(x, table, q, &[GrowthKind::Uniform]) {
            return Ok(Promotion {
                certificate: certificate(&mut ctx, q, z, kind),
                uniform: true,
            });
        }
        q *= 2;
    }
    if let Some(found) = growth_in(&mut ctx, k_max, &[GrowthKind::Uniform], cert.q + 1)? {
        return Ok(Promotion {
            certificate: found,
            uniform: true,
        });
    }
    let mut strongest = cert.clone();
    if cert.kind == GrowthKind::General {
        if let Some(rev) = growth_in(&mut ctx, k_max, &[GrowthKind::Reversal], cert.q)? {
            strongest = rev;
        }
    }
    Ok(Promotion {
        certificate: strongest,
        uniform: false,
    })
}

/// `f_m(X)` from a uniform or reversal certificate, without running the
/// recurrence past `2q − 1`.
pub fn extrapolate(x: &IntMatrix, cert: &GrowthCertificate, m: i64) -> Result<IntMatrix> {
    if cert.kind == GrowthKind::General {
        return Err(Error::UnsupportedExtrapolation { kind: cert.kind.name() });
    }
    if cert.f(1) != Some(x) {
        return Err(Error::Validation("certificate was issued for a different matrix".into()));
    }
    if m < -1 {
        return Err(Error::InvalidIndex {
            index: m,
            constraint: "Chebyshev index must be at least -1".into(),
        });
    }
    let q = cert.q as i64;
    if m < 2 * q {
        return Ok(cert.f(m).expect("base table covers m < 2q").clone());
    }
    let r = (m + 1) / q;
    let u = m - r * q;
    let f_qu = cert.f(q + u).expect("q + u < 2q");
    let f_u = cert.f(u).expect("u < q");
    let (lead, tail) = match cert.kind {
        GrowthKind::Uniform => (f_qu.clone(), f_u.clone()),
        GrowthKind::Reversal if r % 2 == 0 => (f_qu.row_reverse(), f_u.clone()),
        GrowthKind::Reversal => (f_qu.clone(), f_u.row_reverse()),
        GrowthKind::General => unreachable!(),
    };
    let r = BigInt::from(r);
    Ok(&lead.scale(&r) - &tail.scale(&(r - 1)))
}

/// Per-`t` outcome of the reduction-window identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub q: usize,
    pub kind: GrowthKind,
    /// `(t, holds)` for `1 ≤ t ≤ q − 1`.
    pub checks: Vec<(usize, bool)>,
}

impl ReductionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.checks.iter().find(|&&(_, ok)| !ok).map(|&(t, _)| t)
    }
}

/// Predicted `f_{q+t}` from the window identity of the certificate's kind.
pub fn reduction_prediction(cert: &GrowthCertificate, table: &[IntMatrix], t: usize) -> IntMatrix {
    let n = cert.z.dim();
    let q = cert.q;
    let f = |k: i64| &table[(k + 1) as usize];
    let low = f(q as i64 - 2 - t as i64);
    match cert.kind {
        GrowthKind::Reversal => low + &f(t as i64).row_reverse().scale_i64(2),
        _ => {
            let mut out = low + &f(t as i64).scale_i64(2);
            if t % 2 == 0 {
                let sign = if (t / 2 + 1) % 2 == 0 { 1 } else { -1 };
                let corr = &IntMatrix::identity(n).scale_i64(2) - &cert.z;
                out = &out + &corr.scale_i64(sign);
            }
            out
        }
    }
}

/// Checks `f_{q+t}` against the window identities for `1 ≤ t ≤ q − 1`,
/// evaluating `x` afresh. Failures are reported, not raised.
pub fn verify_reduction_window(x: &IntMatrix, cert: &GrowthCertificate) -> Result<ReductionReport> {
    let mut ctx = ChebContext::new(x.clone())?;
    let table = ctx.table(2 * cert.q - 1);
    let checks = (1..cert.q)
        .map(|t| (t, reduction_prediction(cert, table, t) == table[cert.q + t + 1]))
        .collect();
    Ok(ReductionReport {
        q: cert.q,
        kind: cert.kind,
        checks,
    })
}

/// `f_{2q} − f_{2q−2}` as forced by a uniform or general certificate:
/// `2Z − 2I` for odd `q`, plus `(−1)^{(q−2)/2}·(4I − 2Z)` for even `q`.
pub fn doubled_difference(cert: &GrowthCertificate) -> IntMatrix {
    let n = cert.z.dim();
    let i = IntMatrix::identity(n);
    let base = &cert.z.scale_i64(2) - &i.scale_i64(2);
    if cert.q % 2 == 1 {
        return base;
    }
    let sign = if ((cert.q - 2) / 2) % 2 == 0 { 1 } else { -1 };
    let corr = &i.scale_i64(4) - &cert.z.scale_i64(2);
    &base + &corr.scale_i64(sign)
}

/// Entry growth beyond the linear envelope `k·(1 + max|f_0..f_3|)·n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WildEvidence {
    pub k: usize,
    pub magnitude: BigInt,
    pub envelope: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite(PeriodCertificate),
    Tame(GrowthCertificate),
    Wild(WildEvidence),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Finite(_) => "finite",
            Verdict::Tame(_) => "tame",
            Verdict::Wild(_) => "wild",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub family: Option<Identification>,
    pub scan_bound: usize,
}

/// Default scan bound `max(16n + 64, 200)`.
pub fn default_scan_bound(n: usize) -> usize {
    (16 * n + 64).max(200)
}

/// Classifies a symmetric, nonnegative, connected matrix with the default
/// scan bound.
pub fn classify(x: &IntMatrix) -> Result<Classification> {
    classify_with(x, default_scan_bound)
}

/// As [`classify`], with the scan bound computed from the dimension.
pub fn classify_with(x: &IntMatrix, bound_policy: impl Fn(usize) -> usize) -> Result<Classification> {
    let n = validate_symmetric_nonnegative(x)?;
    if !is_connected(x) {
        return Err(Error::Disconnected);
    }
    let bound = bound_policy(n).max(4);
    let family = identify_family(x)?;
    let mut ctx = ChebContext::new(x.clone())?;

    let verdict = if let Some(cert) = period_in(&mut ctx, bound)? {
        Verdict::Finite(cert)
    } else if let Some(cert) = growth_in(&mut ctx, bound, &ALL_KINDS, 2)? {
        Verdict::Tame(cert)
    } else {
        let table = ctx.table(bound);
        let head = table[1..=4].iter().map(IntMatrix::max_abs).max().expect("four entries");
        let scale = (head + 1) * BigInt::from(n);
        let breach = (4..=bound).find_map(|k| {
            let magnitude = table[k + 1].max_abs();
            let envelope = &scale * BigInt::from(k);
            (magnitude > envelope).then_some(WildEvidence { k, magnitude, envelope })
        });
        match breach {
            Some(evidence) => Verdict::Wild(evidence),
            None => return Err(Error::Inconclusive { bound }),
        }
    };
    Ok(Classification {
        verdict,
        family,
        scan_bound: bound,
    })
}
