#![no_main]
use chebdyn_core::{build_diagram, Family};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(family) = text.parse::<Family>() else {
        return;
    };
    assert_eq!(family.name().parse::<Family>().ok(), Some(family));
    let index = family.fixed_index().unwrap_or(family.min_index() + data.len() % 8);
    let spec = build_diagram(family, index).expect("legal index");
    assert_eq!(spec.size(), family.size(index));
    assert!(spec.adjacency.is_symmetric());
});
