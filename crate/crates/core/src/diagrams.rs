//! Labeled adjacency matrices of the Dynkin, extended Dynkin and loop-bearing
//! diagram families, and recognition of a matrix as one of them.
//!
//! Vertices are labeled `1..=size` in the documentation and stored 0-based.
//! A loop is encoded as a diagonal entry `1`, so `L_n = A_n + E_11`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    L,
    ATilde,
    DTilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
    LTilde,
    DLTilde,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::A,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::L,
        Family::ATilde,
        Family::DTilde,
        Family::E6Tilde,
        Family::E7Tilde,
        Family::E8Tilde,
        Family::LTilde,
        Family::DLTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::L => "L",
            Family::ATilde => "Atilde",
            Family::DTilde => "Dtilde",
            Family::E6Tilde => "E6tilde",
            Family::E7Tilde => "E7tilde",
            Family::E8Tilde => "E8tilde",
            Family::LTilde => "Ltilde",
            Family::DLTilde => "DLtilde",
        }
    }

    /// Finite type: the Chebyshev sequence is periodic.
    pub fn is_finite_type(self) -> bool {
        matches!(
            self,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 | Family::L
        )
    }

    pub fn is_extended(self) -> bool {
        !self.is_finite_type()
    }

    /// The subscript of the exceptional families, which admit no other index.
    pub fn fixed_index(self) -> Option<usize> {
        match self {
            Family::E6 | Family::E6Tilde => Some(6),
            Family::E7 | Family::E7Tilde => Some(7),
            Family::E8 | Family::E8Tilde => Some(8),
            _ => None,
        }
    }

    /// Smallest legal index.
    pub fn min_index(self) -> usize {
        match self {
            Family::A | Family::L | Family::LTilde => 2,
            Family::ATilde | Family::DTilde | Family::DLTilde => 3,
            Family::D => 4,
            f => f.fixed_index().expect("exceptional family"),
        }
    }

    fn bounds_text(self) -> &'static str {
        match self {
            Family::A => "A_n requires n >= 2",
            Family::L => "L_n requires n >= 2",
            Family::LTilde => "Ltilde_n requires n >= 2",
            Family::D => "D_n requires n >= 4",
            Family::ATilde => "Atilde_n requires n >= 3",
            Family::DTilde => "Dtilde_n requires n >= 3",
            Family::DLTilde => "DLtilde_n requires n >= 3",
            Family::E6 | Family::E6Tilde => "index is fixed at 6",
            Family::E7 | Family::E7Tilde => "index is fixed at 7",
            Family::E8 | Family::E8Tilde => "index is fixed at 8",
        }
    }

    pub fn check_index(self, index: usize) -> Result<()> {
        let ok = match self.fixed_index() {
            Some(fixed) => index == fixed,
            None => index >= self.min_index(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FamilyBounds {
                family: self.name().into(),
                index,
                constraint: self.bounds_text(),
            })
        }
    }

    /// Number of vertices of the diagram with the given index.
    pub fn size(self, index: usize) -> usize {
        match self {
            Family::ATilde | Family::DTilde => index + 1,
            Family::E6Tilde => 7,
            Family::E7Tilde => 8,
            Family::E8Tilde => 9,
            _ => index,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.strip_suffix("~").map(|k| format!("{k}tilde")).unwrap_or(key);
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Validation(format!("unknown diagram family {s:?}")))
    }
}

/// A diagram family with its index and labeled adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub family: Family,
    pub index: usize,
    pub adjacency: IntMatrix,
}

impl DiagramSpec {
    pub fn size(&self) -> usize {
        self.adjacency.dim()
    }
}

fn from_edges(size: usize, edges: &[(usize, usize)], loops: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::zero(size);
    for &(a, b) in edges {
        m.set(a - 1, b - 1, BigInt::one());
        m.set(b - 1, a - 1, BigInt::one());
    }
    for &v in loops {
        m.set(v - 1, v - 1, BigInt::one());
    }
    m
}

fn path(from: usize, to: usize) -> Vec<(usize, usize)> {
    (from..to).map(|i| (i, i + 1)).collect()
}

/// Adjacency matrix of `family` with the given index, labeled as in the
/// standard diagram tables (branch vertex 3 for D/E, loops at the ends).
pub fn build_diagram(family: Family, index: usize) -> Result<DiagramSpec> {
    family.check_index(index)?;
    let n = index;
    let adjacency = match family {
        Family::A => from_edges(n, &path(1, n), &[]),
        Family::L => from_edges(n, &path(1, n), &[1]),
        Family::LTilde => from_edges(n, &path(1, n), &[1, n]),
        Family::D => {
            let mut e = vec![(1, 3), (2, 3)];
            e.extend(path(3, n));
            from_edges(n, &e, &[])
        }
        Family::E6 => from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)], &[]),
        Family::E7 => from_edges(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)], &[]),
        Family::E8 => from_edges(
            8,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8)],
            &[],
        ),
        Family::ATilde => {
            let mut e = path(1, n);
            e.extend([(n + 1, 1), (n + 1, n)]);
            from_edges(n + 1, &e, &[])
        }
        Family::DTilde if n == 3 => {
            // Degenerate drawing: leaves 1, 2 on both centers 3 and 4 (a 4-cycle).
            from_edges(4, &[(1, 3), (2, 3), (1, 4), (2, 4)], &[])
        }
        Family::DTilde => {
            let mut e = vec![(1, 3), (2, 3)];
            e.extend(path(3, n - 1));
            e.extend([(n, n - 1), (n + 1, n - 1)]);
            from_edges(n + 1, &e, &[])
        }
        Family::DLTilde => {
            let mut e = vec![(1, 3), (2, 3)];
            e.extend(path(3, n));
            from_edges(n, &e, &[n])
        }
        Family::E6Tilde => from_edges(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)],
            &[],
        ),
        Family::E7Tilde => from_edges(
            8,
            &[(8, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
            &[],
        ),
        Family::E8Tilde => from_edges(
            9,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 9), (3, 8)],
            &[],
        ),
    };
    Ok(DiagramSpec {
        family,
        index,
        adjacency,
    })
}

/// Whether the diagram's shape depends on a drawing convention
/// (`Dtilde_3`, where the standard drawing degenerates).
pub fn is_convention_dependent(family: Family, index: usize) -> bool {
    family == Family::DTilde && index == 3
}

/// `I⁰·X·I⁰`: the same diagram with the vertex order reversed.
pub fn reverse_labeling(x: &IntMatrix) -> Result<IntMatrix> {
    x.ensure_square()?;
    Ok(x.reverse_labeling())
}

/// Coxeter number `h`: the first zero of `(f_k)` is at `k = h − 1`.
pub fn coxeter_number(family: Family, index: usize) -> Result<u64> {
    family.check_index(index)?;
    let n = index as u64;
    match family {
        Family::A => Ok(n + 1),
        Family::D => Ok(2 * n - 2),
        Family::E6 => Ok(12),
        Family::E7 => Ok(18),
        Family::E8 => Ok(30),
        Family::L => Ok(2 * n + 1),
        f => Err(Error::UnsupportedFamily {
            family: f.name().into(),
            reason: "Coxeter numbers are defined for finite types only",
        }),
    }
}

/// Result of recognizing a matrix as a labeled diagram.
///
/// `permutation[i]` is the diagram vertex matched to input vertex `i`, so
/// `input == diagram.adjacency.permuted(&permutation)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub family: Family,
    pub index: usize,
    pub permutation: Vec<usize>,
}

/// Checks that `x` is square, symmetric and has nonnegative entries.
pub fn validate_symmetric_nonnegative(x: &IntMatrix) -> Result<usize> {
    let n = x.ensure_square()?;
    if !x.is_symmetric() {
        return Err(Error::Validation("matrix is not symmetric".into()));
    }
    if !x.is_nonnegative() {
        return Err(Error::Validation("matrix has negative entries".into()));
    }
    Ok(n)
}

/// Connectivity of the graph with edges at nonzero off-diagonal entries.
pub fn is_connected(x: &IntMatrix) -> bool {
    let n = x.dim();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for w in 0..n {
            if !seen[w] && w != v && !x.get(v, w).is_zero() {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

fn bfs_order(x: &IntMatrix) -> Vec<usize> {
    let n = x.dim();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if !seen[w] && !x.get(v, w).is_zero() {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn vertex_signature(x: &IntMatrix, v: usize) -> (BigInt, BigInt) {
    let degree: BigInt = (0..x.dim()).filter(|&w| w != v).map(|w| x.get(v, w)).sum();
    (x.get(v, v).clone(), degree)
}

/// Finds `perm` with `input == target.permuted(perm)`, if the two are
/// isomorphic. Exact backtracking with signature pruning.
pub fn find_isomorphism(input: &IntMatrix, target: &IntMatrix) -> Option<Vec<usize>> {
    let n = input.dim();
    if target.dim() != n || !input.is_square() || !target.is_square() {
        return None;
    }
    if input == target {
        return Some((0..n).collect());
    }
    let sig_in: Vec<_> = (0..n).map(|v| vertex_signature(input, v)).collect();
    let sig_t: Vec<_> = (0..n).map(|v| vertex_signature(target, v)).collect();
    let mut a = sig_in.clone();
    let mut b = sig_t.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }

    struct Search<'a> {
        input: &'a IntMatrix,
        target: &'a IntMatrix,
        order: Vec<usize>,
        sig_in: Vec<(BigInt, BigInt)>,
        sig_t: Vec<(BigInt, BigInt)>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for cand in 0..self.order.len() {
                if self.used[cand] || self.sig_in[v] != self.sig_t[cand] {
                    continue;
                }
                let consistent = self.order[..depth].iter().all(|&u| {
                    let mapped = self.map[u].expect("assigned");
                    self.input.get(v, u) == self.target.get(cand, mapped)
                });
                if !consistent {
                    continue;
                }
                self.map[v] = Some(cand);
                self.used[cand] = true;
                if self.go(depth + 1) {
                    return true;
                }
                self.map[v] = None;
                self.used[cand] = false;
            }
            false
        }
    }

    let mut search = Search {
        input,
        target,
        order: bfs_order(input),
        sig_in,
        sig_t,
        map: vec![None; n],
        used: vec![false; n],
    };
    search
        .go(0)
        .then(|| search.map.into_iter().map(|m| m.expect("complete")).collect())
}

/// Candidate `(family, index)` pairs whose diagram has `size` vertices.
fn candidates(size: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let index = match family {
            Family::ATilde | Family::DTilde => match size.checked_sub(1) {
                Some(i) => i,
                None => continue,
            },
            Family::E6Tilde if size == 7 => 6,
            Family::E7Tilde if size == 8 => 7,
            Family::E8Tilde if size == 9 => 8,
            Family::E6Tilde | Family::E7Tilde | Family::E8Tilde => continue,
            _ => size,
        };
        if family.check_index(index).is_ok() && family.size(index) == size {
            out.push((family, index));
        }
    }
    out
}

/// Recognizes `x` as a relabeled diagram of one of the families.
///
/// Returns `Ok(None)` when `x` matches no family. The input must be square,
/// symmetric, nonnegative and connected.
pub fn identify_family(x: &IntMatrix) -> Result<Option<Identification>> {
    let n = validate_symmetric_nonnegative(x)?;
    if !is_connected(x) {
        return Err(Error::Disconnected);
    }
    if x.entries().any(|v| v.abs() > BigInt::one()) {
        return Ok(None);
    }
    let loops = x.trace().to_usize().unwrap_or(usize::MAX);
    for (family, index) in candidates(n) {
        let spec = build_diagram(family, index)?;
        if spec.adjacency.trace().to_usize() != Some(loops) {
            continue;
        }
        if let Some(permutation) = find_isomorphism(x, &spec.adjacency) {
            return Ok(Some(Identification {
                family,
                index,
                permutation,
            }));
        }
    }
    Ok(None)
}
