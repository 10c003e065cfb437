#![no_main]
use chebdyn_cli::{parse_matrix_file, write_matrix_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = parse_matrix_file(text) {
        let again = parse_matrix_file(&write_matrix_file(&m)).expect("written file must parse");
        assert_eq!(again, m);
    }
});
