use chebdyn_core::*;
use num_bigint::BigInt;

fn adj(f: Family, n: usize) -> IntMatrix {
    build_diagram(f, n).unwrap().adjacency
}

fn first_k(seq: &[IntMatrix], pred: impl Fn(&IntMatrix) -> bool) -> Option<usize> {
    seq.iter().enumerate().skip(1).find(|(_, f)| pred(f)).map(|(k, _)| k)
}

#[test]
fn exceptional_first_zeros() {
    for (f, zero) in [(Family::E6, 11), (Family::E7, 17), (Family::E8, 29)] {
        let seq = cheb_seq(&adj(f, f.fixed_index().unwrap()), 70).unwrap();
        assert_eq!(first_k(&seq, IntMatrix::is_zero), Some(zero), "{f}");
    }
}

#[test]
fn exceptional_identities() {
    let e7 = cheb_seq(&adj(Family::E7, 7), 40).unwrap();
    assert!(e7[16].is_identity());
    let e8 = cheb_seq(&adj(Family::E8, 8), 70).unwrap();
    assert_eq!(first_k(&e8, IntMatrix::is_identity), Some(28));
    assert!(e8[60].is_identity());
    assert!(!e8[10].is_identity());
    let e6 = cheb_seq(&adj(Family::E6, 6), 30).unwrap();
    assert_eq!(first_k(&e6, IntMatrix::is_identity), Some(24));
}

#[test]
fn e6_tenth_term_is_the_diagram_symmetry() {
    // with branch vertex 3 and arms 1-2, 4-5, 6 the symmetry swaps 1↔5 and 2↔4
    let f10 = cheb_eval(&adj(Family::E6, 6), 10).unwrap();
    assert_eq!(f10, IntMatrix::permutation(&[4, 3, 2, 1, 0, 5]));
    let x = adj(Family::E6, 6);
    assert_eq!(x.permuted(&[4, 3, 2, 1, 0, 5]), x);
}

#[test]
fn type_d_fixtures() {
    for m in 4..=10 {
        let n = m - 2;
        let x = adj(Family::D, m);
        let seq = cheb_seq(&x, 2 * n + 1).unwrap();
        assert!(seq[2 * n + 1].is_zero(), "m={m}");
        assert!(seq[1..=2 * n].iter().all(|f| !f.is_zero()));
        let expected = if n % 2 == 0 {
            IntMatrix::identity(m)
        } else {
            IntMatrix::from_blocks(
                &IntMatrix::anti_identity(2),
                &IntMatrix::zeros(2, n),
                &IntMatrix::zeros(n, 2),
                &IntMatrix::identity(n),
            )
            .unwrap()
        };
        assert_eq!(seq[2 * n], expected, "m={m}");

        // last row: ε_{n−k} on the arm below n, (1, 1, 0, …) at n, ε_{k−n} above
        for k in 1..=2 * n {
            let mut row = vec![BigInt::from(0); m];
            if k == n {
                row[0] = BigInt::from(1);
                row[1] = BigInt::from(1);
            } else {
                let e = if k < n { n - k } else { k - n };
                row[1 + e] = BigInt::from(1);
            }
            assert_eq!(seq[k].row(m - 1), row.as_slice(), "m={m} k={k}");
        }
    }
}

#[test]
fn coxeter_first_zero() {
    for f in [Family::A, Family::D, Family::L, Family::E6, Family::E7, Family::E8] {
        for index in f.min_index()..=f.min_index() + 5 {
            if f.check_index(index).is_err() {
                continue;
            }
            let h = coxeter_number(f, index).unwrap() as usize;
            let seq = cheb_seq(&adj(f, index), h).unwrap();
            assert!(seq[h - 1].is_zero(), "{f}{index}");
            assert!(seq[..h - 1].iter().all(|s| !s.is_zero()), "{f}{index}");
        }
    }
}

#[test]
fn period_certificates_of_l() {
    for n in 2..=6 {
        let x = adj(Family::L, n);
        let cert = detect_period(&x, 64).unwrap().unwrap();
        assert_eq!(cert.first_zero, 2 * n);
        assert_eq!(cert.period, 4 * n + 2);
        assert!(cert.witness_window[4 * n + 1].is_zero());
        assert!(cert.witness_window[4 * n + 2].is_identity());
    }
}

#[test]
fn dltilde_block_example() {
    let x = adj(Family::DLTilde, 5);
    let st = block_decompose(&x, 2).unwrap();
    assert_eq!(st.s, IntMatrix::from_i64(&[[1, 0, 0], [1, 0, 0]]));
    assert_eq!(st.w, reverse_labeling(&adj(Family::L, 3)).unwrap());
}

#[test]
fn dtilde_growth_table() {
    // least uniform and general certificates, Appendix labels
    let expect = [(4, 4, 2), (5, 12, 6), (6, 8, 8), (7, 20, 10), (8, 12, 12)];
    for (n, u, g) in expect {
        let x = adj(Family::DTilde, n);
        let q = |kind| detect_growth_of_kind(&x, kind, 200).unwrap().map(|c| c.q);
        assert_eq!(
            (q(GrowthKind::Uniform), q(GrowthKind::Reversal), q(GrowthKind::General)),
            (Some(u), None, Some(g)),
            "n={n}"
        );
    }
}

#[test]
fn reversal_product_alone_is_not_enough() {
    // X·Z = 2X⁰ holds at q = n − 2 on Dtilde_n, yet the window identity fails at t = 2
    for n in 4..=8 {
        let x = adj(Family::DTilde, n);
        let q = n - 2;
        let seq = cheb_seq(&x, 2 * q + 2).unwrap();
        let z = &seq[q] - &seq[q - 2];
        assert_eq!(&x * &z, x.row_reverse().scale_i64(2), "n={n}");
        assert_ne!(z, IntMatrix::anti_identity(n + 1).scale_i64(2));
        if q >= 3 {
            let low = if q == 3 { IntMatrix::zero(n + 1) } else { seq[q - 4].clone() };
            let predicted = &low + &seq[2].row_reverse().scale_i64(2);
            assert_ne!(seq[q + 2], predicted, "n={n}");
        }
    }
}

#[test]
fn dltilde_uniform_index() {
    for n in 3..=8 {
        let x = adj(Family::DLTilde, n);
        let cert = detect_growth_of_kind(&x, GrowthKind::Uniform, 200).unwrap().unwrap();
        assert_eq!(cert.q, 8 * n - 12, "n={n}");
        let seq = cheb_seq(&x, 8 * n - 4).unwrap();
        let diff = &seq[8 * n - 4] - &seq[8 * n - 6];
        assert_ne!(diff, IntMatrix::identity(n).scale_i64(2), "n={n}");
    }
}

#[test]
fn extended_sequences_nonnegative() {
    for (f, n) in [
        (Family::ATilde, 5),
        (Family::DTilde, 6),
        (Family::LTilde, 4),
        (Family::DLTilde, 5),
        (Family::E6Tilde, 6),
        (Family::E7Tilde, 7),
        (Family::E8Tilde, 8),
    ] {
        for s in cheb_seq(&adj(f, n), 150).unwrap() {
            assert!(s.is_nonnegative(), "{f}{n}");
        }
    }
}
