use chebdyn_cli::{matrix_to_value, parse_matrix_file, write_matrix_file};
use chebdyn_core::{cheb_eval, IntMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big_entry() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-5i64..=5).prop_map(BigInt::from),
        any::<i64>().prop_map(BigInt::from),
        (any::<i64>(), any::<u64>()).prop_map(|(a, b)| BigInt::from(a) * BigInt::from(b) * BigInt::from(b)),
    ]
}

fn square(max_n: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(big_entry(), n * n).prop_map(move |data| IntMatrix::from_vec(n, n, data).unwrap())
    })
}

fn small_symmetric(max_n: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0i64..=2, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, n, |i, j| BigInt::from(v[i.min(j) * n + i.max(j)]))
        })
    })
}

proptest! {
    #[test]
    fn written_matrices_reparse(m in square(6)) {
        prop_assert_eq!(parse_matrix_file(&write_matrix_file(&m)).unwrap(), m);
    }

    #[test]
    fn pretty_printed_json_reparses(m in square(4)) {
        let text = serde_json::to_string_pretty(&matrix_to_value(&m)).unwrap();
        prop_assert_eq!(parse_matrix_file(&text).unwrap(), m);
    }

    #[test]
    fn sequence_values_reparse(x in small_symmetric(5), k in 0i64..40) {
        let fk = cheb_eval(&x, k).unwrap();
        prop_assert_eq!(parse_matrix_file(&write_matrix_file(&fk)).unwrap(), fk);
    }

    #[test]
    fn parser_never_panics(s in "\\PC{0,64}") {
        let _ = parse_matrix_file(&s);
    }
}
