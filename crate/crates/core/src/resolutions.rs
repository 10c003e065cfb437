//! Minimal projective resolutions of simple modules over the
//! radical-cube-zero symmetric algebra of a diagram, tracked through
//! dimension vectors.
//!
//! A module `M` is recorded as `d(M) = (α, β)`, head and radical dimension
//! vectors. Away from simples, `d(Ω(M)) = B·d(M)` with
//! `B = [[E, −I], [I, 0]]`, and `B^k` has Chebyshev blocks in `E`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chebyshev::ChebContext;
use crate::diagrams::{DiagramSpec, Family};
use crate::dynamics::{default_scan_bound, detect_growth_of_kind, GrowthCertificate, GrowthKind};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Head (`alpha`) and radical (`beta`) dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimVector {
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
}

impl DimVector {
    /// `d(S_i) = (ε_i, 0)`, with `i` 1-based.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut alpha = vec![BigInt::zero(); n];
        alpha[i - 1] = BigInt::one();
        Self {
            alpha,
            beta: vec![BigInt::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(Zero::is_zero)
    }

    /// `B·d`: `(E·α − β, α)`.
    pub fn apply_b(&self, e: &IntMatrix) -> Self {
        let ea = e.apply(&self.alpha);
        Self {
            alpha: ea.iter().zip(&self.beta).map(|(a, b)| a - b).collect(),
            beta: self.alpha.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub k: usize,
    pub d: DimVector,
    pub projective_multiplicities: Vec<BigInt>,
    /// 1-based index `j` when `Ω^k(S_i) ≅ S_j`.
    pub simple_hit: Option<usize>,
    /// Set when `B·d` has the shape `(0, m·ε_j)` with `m > 1`: a semisimple
    /// syzygy that is not simple. The trace keeps iterating `B` in that case.
    pub semisimple_flag: Option<(usize, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTrace {
    pub ext: IntMatrix,
    /// 1-based simple index.
    pub start: usize,
    pub steps: Vec<TraceStep>,
}

impl ResolutionTrace {
    /// `(k, j)` for every simple hit.
    pub fn hits(&self) -> Vec<(usize, usize)> {
        self.steps.iter().filter_map(|s| s.simple_hit.map(|j| (s.k, j))).collect()
    }

    pub fn first_hit(&self) -> Option<(usize, usize)> {
        self.hits().into_iter().next()
    }
}

/// The Ext-quiver matrix: each edge gives a pair of opposite arrows, a loop
/// gives one, so this is the adjacency matrix itself.
pub fn ext_matrix(spec: &DiagramSpec) -> IntMatrix {
    spec.adjacency.clone()
}

/// `[[E, −I], [I, 0]]`.
pub fn b_matrix(e: &IntMatrix) -> Result<IntMatrix> {
    let n = e.ensure_square()?;
    IntMatrix::from_blocks(
        e,
        &IntMatrix::identity(n).scale_i64(-1),
        &IntMatrix::identity(n),
        &IntMatrix::zero(n),
    )
}

/// Blocks of `B^k`: `(f_k, −f_{k−1}, f_{k−1}, −f_{k−2})` in `E`, taking
/// `f_{−2} = −I` from the recurrence run backwards.
pub fn b_power_blocks(e: &IntMatrix, k: usize) -> Result<[IntMatrix; 4]> {
    let n = e.ensure_square()?;
    let mut ctx = ChebContext::new(e.clone())?;
    let k = k as i64;
    let fk = ctx.value(k)?;
    let fk1 = ctx.value(k - 1)?;
    let fk2 = if k == 0 {
        IntMatrix::identity(n).scale_i64(-1)
    } else {
        ctx.value(k - 2)?
    };
    Ok([fk, fk1.scale_i64(-1), fk1, fk2.scale_i64(-1)])
}

/// `B^k` assembled from [`b_power_blocks`].
pub fn b_power(e: &IntMatrix, k: usize) -> Result<IntMatrix> {
    let [a, b, c, d] = b_power_blocks(e, k)?;
    IntMatrix::from_blocks(&a, &b, &c, &d)
}

/// Radical layers `(α, E·α, α)` of the projective cover of a module with head `α`.
pub fn projective_layers(e: &IntMatrix, alpha: &[BigInt]) -> Result<(Vec<BigInt>, Vec<BigInt>, Vec<BigInt>)> {
    let n = e.ensure_square()?;
    if alpha.len() != n {
        return Err(Error::Validation(format!("head vector has length {}, expected {n}", alpha.len())));
    }
    if alpha.iter().any(Signed::is_negative) {
        return Err(Error::Validation("head vector has a negative entry".into()));
    }
    Ok((alpha.to_vec(), e.apply(alpha), alpha.to_vec()))
}

fn check_simple_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::InvalidIndex {
            index: i as i64,
            constraint: format!("simple index must lie in 1..={n}"),
        });
    }
    Ok(())
}

/// Tail shape `(0, m·ε_j)`: returns `(j, m)` with `j` 1-based.
fn socle_shape(d: &DimVector) -> Option<(usize, BigInt)> {
    if d.alpha.iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut nz = d.beta.iter().enumerate().filter(|(_, v)| !v.is_zero());
    let (j, m) = nz.next()?;
    if nz.next().is_some() {
        return None;
    }
    Some((j + 1, m.clone()))
}

/// Syzygies `Ω^k(S_i)` for `k = 0..=steps`, restarting from `(ε_j, 0)`
/// whenever a syzygy is the simple `S_j`.
pub fn syzygy_trace(e: &IntMatrix, i: usize, steps: usize) -> Result<ResolutionTrace> {
    let n = e.ensure_square()?;
    check_simple_index(n, i)?;
    let mut d = DimVector::simple(n, i);
    let mut out = vec![TraceStep {
        k: 0,
        projective_multiplicities: d.alpha.clone(),
        d: d.clone(),
        simple_hit: None,
        semisimple_flag: None,
    }];
    for k in 1..=steps {
        let next = d.apply_b(e);
        if next.alpha.iter().chain(&next.beta).any(Signed::is_negative) {
            return Err(Error::ModelViolation {
                step: k,
                reason: "negative dimension".into(),
            });
        }
        if next.is_zero() {
            return Err(Error::ModelViolation {
                step: k,
                reason: "syzygy vanished".into(),
            });
        }
        let (d_next, hit, flag) = match socle_shape(&next) {
            Some((j, m)) if m.is_one() => (DimVector::simple(n, j), Some(j), None),
            Some((j, m)) => (next, None, Some((j, m))),
            None => (next, None, None),
        };
        d = d_next;
        out.push(TraceStep {
            k,
            projective_multiplicities: d.alpha.clone(),
            d: d.clone(),
            simple_hit: hit,
            semisimple_flag: flag,
        });
    }
    Ok(ResolutionTrace {
        ext: e.clone(),
        start: i,
        steps: out,
    })
}

/// Multiplicities of the indecomposable projectives in the `k`-th term of
/// the minimal projective resolution of `S_i`.
pub fn resolution_terms(e: &IntMatrix, i: usize, k: usize) -> Result<Vec<BigInt>> {
    let trace = syzygy_trace(e, i, k)?;
    Ok(trace.steps[k].projective_multiplicities.clone())
}

/// Least `p > 0` with `Ω^p(S_i) ≅ S_i` for every `i`, scanning up to the
/// default bound for the dimension.
pub fn resolution_period(e: &IntMatrix) -> Result<Option<usize>> {
    let n = e.ensure_square()?;
    resolution_period_within(e, 4 * default_scan_bound(n))
}

pub fn resolution_period_within(e: &IntMatrix, bound: usize) -> Result<Option<usize>> {
    let n = e.ensure_square()?;
    let mut period = 1usize;
    for i in 1..=n {
        let trace = syzygy_trace(e, i, bound)?;
        let Some(ret) = trace.hits().into_iter().find(|&(_, j)| j == i).map(|(k, _)| k) else {
            return Ok(None);
        };
        period = period.lcm(&ret);
    }
    Ok(Some(period))
}

/// Linear-growth factor of the resolutions over an extended diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthFactor {
    pub q: usize,
    pub kind: GrowthKind,
    pub certificate: GrowthCertificate,
    /// The value listed in the standard table for this family.
    pub reference_q: Option<u64>,
    pub note: Option<String>,
}

/// Tabulated growth factor for an extended family.
pub fn reference_growth_factor(family: Family, index: usize) -> Option<u64> {
    let n = index as u64;
    match family {
        Family::ATilde => Some(n + 1),
        Family::DTilde if n % 2 == 0 => Some(2 * n - 4),
        Family::DTilde => Some(8 * n - 16),
        Family::LTilde => Some(n),
        Family::DLTilde => Some(8 * n - 4),
        Family::E6Tilde => Some(12),
        Family::E7Tilde => Some(72),
        Family::E8Tilde => Some(60),
        _ => None,
    }
}

/// Certified growth factor: the least reversal-kind `q` for `Ltilde`, the
/// least uniform `q` for the other extended families.
pub fn growth_factor(spec: &DiagramSpec) -> Result<GrowthFactor> {
    if spec.family.is_finite_type() {
        return Err(Error::UnsupportedFamily {
            family: spec.family.name().into(),
            reason: "growth factors exist for extended families only",
        });
    }
    let kind = if spec.family == Family::LTilde {
        GrowthKind::Reversal
    } else {
        GrowthKind::Uniform
    };
    let x = ext_matrix(spec);
    let bound = default_scan_bound(x.dim());
    let certificate = detect_growth_of_kind(&x, kind, bound)?.ok_or(Error::Inconclusive { bound })?;
    let reference_q = reference_growth_factor(spec.family, spec.index);
    let note = reference_q.filter(|&r| r != certificate.q as u64).map(|r| {
        let verdict = if r % certificate.q as u64 == 0 {
            "a multiple of the certified value"
        } else {
            "not a multiple of the certified value"
        };
        format!(
            "certified minimal q = {} differs from the tabulated q = {r} ({verdict})",
            certificate.q
        )
    });
    Ok(GrowthFactor {
        q: certificate.q,
        kind,
        certificate,
        reference_q,
        note,
    })
}

/// `(N_u, R_u)` for the decomposition `R_{rq+u} = N_u^{⊕r} ⊕ R_u` of the
/// resolution of `S_i`, from a uniform or reversal certificate of `E`.
///
/// For the reversal kind `N_u` is built with the reversed row and the
/// reversal alternates with the parity of `r`; see [`predicted_term`].
pub fn growth_components(cert: &GrowthCertificate, i: usize, u: i64) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let q = cert.q as i64;
    if !(-1..=q - 2).contains(&u) {
        return Err(Error::InvalidIndex {
            index: u,
            constraint: format!("offset must lie in -1..={}", q - 2),
        });
    }
    check_simple_index(cert.z.dim(), i)?;
    let row = |k: i64| cert.f(k).expect("within base table").row(i - 1).to_vec();
    let r_u = row(u);
    let low = row(q - 2 - u);
    let n_u = match cert.kind {
        GrowthKind::Reversal => {
            let rev: Vec<_> = r_u.iter().rev().cloned().collect();
            low.iter().zip(&rev).map(|(a, b)| a + b).collect()
        }
        _ => low.iter().zip(&r_u).map(|(a, b)| a + b).collect(),
    };
    Ok((n_u, r_u))
}

/// `R_m` predicted from the components, with `m = r·q + u`.
pub fn predicted_term(cert: &GrowthCertificate, i: usize, m: i64) -> Result<Vec<BigInt>> {
    if cert.kind == GrowthKind::General {
        return Err(Error::UnsupportedExtrapolation { kind: cert.kind.name() });
    }
    let q = cert.q as i64;
    let r = (m + 1).div_euclid(q);
    let u = m - r * q;
    let (n_u, r_u) = growth_components(cert, i, u)?;
    let rev = |v: &[BigInt]| v.iter().rev().cloned().collect::<Vec<_>>();
    let (lead, tail) = match cert.kind {
        GrowthKind::Reversal if r % 2 == 0 => (rev(&n_u), r_u),
        GrowthKind::Reversal => (n_u, rev(&r_u)),
        _ => (n_u, r_u),
    };
    let r = BigInt::from(r);
    Ok(lead.iter().zip(&tail).map(|(a, b)| &r * a + b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_eval;
    use crate::diagrams::build_diagram;

    fn ext(f: Family, n: usize) -> IntMatrix {
        ext_matrix(&build_diagram(f, n).unwrap())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn b_matrix_small() {
        let b = b_matrix(&IntMatrix::from_i64(&[[0]])).unwrap();
        assert_eq!(b, IntMatrix::from_i64(&[[0, -1], [1, 0]]));
    }

    #[test]
    fn b_power_edges() {
        let e = ext(Family::A, 3);
        let [a, b, c, d] = b_power_blocks(&e, 0).unwrap();
        assert!(a.is_identity() && b.is_zero() && c.is_zero() && d.is_identity());
        assert_eq!(b_power(&e, 1).unwrap(), b_matrix(&e).unwrap());
        let b = b_matrix(&e).unwrap();
        let mut p = IntMatrix::identity(6);
        for k in 0..12 {
            assert_eq!(b_power(&e, k).unwrap(), p);
            p = &p * &b;
        }
    }

    #[test]
    fn layers() {
        let (a, b, c) = projective_layers(&ext(Family::A, 2), &ints(&[1, 0])).unwrap();
        assert_eq!((a, b, c), (ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 0])));
        let (_, b, _) = projective_layers(&ext(Family::L, 2), &ints(&[1, 0])).unwrap();
        assert_eq!(b, ints(&[1, 1]));
        let (a, b, c) = projective_layers(&ext(Family::L, 2), &ints(&[0, 0])).unwrap();
        assert!(a.iter().chain(&b).chain(&c).all(Zero::is_zero));
        assert!(projective_layers(&ext(Family::A, 2), &ints(&[-1, 0])).is_err());
    }

    #[test]
    fn type_a_hits() {
        for n in 2..=8 {
            let e = ext(Family::A, n);
            for i in 1..=n {
                let t = syzygy_trace(&e, i, 2 * n).unwrap();
                assert_eq!(t.hits(), vec![(n, n - i + 1), (2 * n, i)], "n={n} i={i}");
            }
        }
    }

    #[test]
    fn rows_before_first_hit() {
        let e = ext(Family::E7, 7);
        for i in 1..=7 {
            let t = syzygy_trace(&e, i, 16).unwrap();
            assert_eq!(t.first_hit(), None);
            for k in 0..=16 {
                let row = cheb_eval(&e, k as i64).unwrap().row(i - 1).to_vec();
                assert_eq!(t.steps[k].projective_multiplicities, row, "i={i} k={k}");
            }
        }
    }

    #[test]
    fn zero_steps() {
        let t = syzygy_trace(&ext(Family::A, 4), 2, 0).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].projective_multiplicities, ints(&[0, 1, 0, 0]));
        assert_eq!(resolution_terms(&ext(Family::A, 4), 2, 0).unwrap(), ints(&[0, 1, 0, 0]));
    }

    #[test]
    fn bad_simple_index() {
        assert!(matches!(syzygy_trace(&ext(Family::A, 3), 0, 3), Err(Error::InvalidIndex { .. })));
        assert!(matches!(syzygy_trace(&ext(Family::A, 3), 4, 3), Err(Error::InvalidIndex { .. })));
    }

    #[test]
    fn model_violation_on_negative() {
        let e = IntMatrix::from_i64(&[[-1]]);
        let err = syzygy_trace(&e, 1, 3).unwrap_err();
        assert!(matches!(err, Error::ModelViolation { step: 1, .. }));
    }

    #[test]
    fn socle_shapes() {
        let d = DimVector {
            alpha: ints(&[0, 0]),
            beta: ints(&[2, 0]),
        };
        assert_eq!(socle_shape(&d), Some((1, BigInt::from(2))));
        let d = DimVector {
            alpha: ints(&[0, 0]),
            beta: ints(&[1, 1]),
        };
        assert_eq!(socle_shape(&d), None);
        let d = DimVector {
            alpha: ints(&[0, 1]),
            beta: ints(&[0, 1]),
        };
        assert_eq!(socle_shape(&d), None);
    }

    #[test]
    fn periods() {
        for n in 2..=6 {
            assert_eq!(resolution_period(&ext(Family::A, n)).unwrap(), Some(2 * n));
            assert_eq!(resolution_period(&ext(Family::L, n)).unwrap(), Some(2 * n));
        }
        assert_eq!(resolution_period(&ext(Family::D, 4)).unwrap(), Some(5));
        assert_eq!(resolution_period(&ext(Family::D, 5)).unwrap(), Some(14));
        assert_eq!(resolution_period(&ext(Family::E6, 6)).unwrap(), Some(22));
        assert_eq!(resolution_period(&ext(Family::E7, 7)).unwrap(), Some(17));
        assert_eq!(resolution_period(&ext(Family::E8, 8)).unwrap(), Some(29));
    }

    #[test]
    fn growth_factors() {
        let gf = growth_factor(&build_diagram(Family::ATilde, 5).unwrap()).unwrap();
        assert_eq!((gf.q, gf.reference_q, gf.note), (6, Some(6), None));
        let gf = growth_factor(&build_diagram(Family::E6Tilde, 6).unwrap()).unwrap();
        assert_eq!(gf.q, 12);
        let gf = growth_factor(&build_diagram(Family::LTilde, 4).unwrap()).unwrap();
        assert_eq!((gf.q, gf.kind), (4, GrowthKind::Reversal));
        let gf = growth_factor(&build_diagram(Family::E7Tilde, 7).unwrap()).unwrap();
        assert_eq!(gf.q, 24);
        assert!(gf.note.unwrap().contains("72"));
        assert!(matches!(
            growth_factor(&build_diagram(Family::A, 3).unwrap()),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn decomposition_matches_terms() {
        for (f, n) in [(Family::ATilde, 4), (Family::LTilde, 3), (Family::E6Tilde, 6)] {
            let spec = build_diagram(f, n).unwrap();
            let e = ext_matrix(&spec);
            let gf = growth_factor(&spec).unwrap();
            let q = gf.q;
            for i in 1..=e.dim() {
                let t = syzygy_trace(&e, i, 5 * q).unwrap();
                assert_eq!(t.first_hit(), None);
                for m in 0..=5 * q {
                    assert_eq!(
                        predicted_term(&gf.certificate, i, m as i64).unwrap(),
                        t.steps[m].projective_multiplicities,
                        "{f}{n} i={i} m={m}"
                    );
                }
            }
        }
    }
}
