#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_depth::format::{parse_matrix, write_matrix};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(a) = parse_matrix(text) {
        let doc = write_matrix(&a);
        assert_eq!(parse_matrix(&doc).as_ref(), Ok(&a));
    }
});
