#![no_main]
use chebdyn_cli::parse_matrix_file;
use chebdyn_core::{classify_with, detect_growth, detect_period, extrapolate, ChebContext};
use libfuzzer_sys::fuzz_target;

// Parsed matrices up to 8x8 run through evaluation and the detectors with
// small bounds. Every returned certificate must recheck.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(x) = parse_matrix_file(text) else {
        return;
    };
    if x.dim() > 8 || x.max_abs() > 16.into() {
        return;
    }
    let mut ctx = ChebContext::new(x.clone()).expect("square");
    let _ = ctx.seq(24);
    if let Ok(Some(cert)) = detect_period(&x, 24) {
        assert!(cert.verify(&x));
    }
    if let Ok(Some(cert)) = detect_growth(&x, 12) {
        assert!(cert.verify(&x));
        if let Ok(v) = extrapolate(&x, &cert, 40) {
            assert_eq!(&v, ctx.eval(40).unwrap());
        }
    }
    let _ = classify_with(&x, |_| 24);
});
